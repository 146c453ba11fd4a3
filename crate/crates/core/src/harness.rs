//! Exhaustive verification of the counting identities and the bijections.
//!
//! Every check becomes one [`CheckRecord`]. Failing records carry a
//! serialized counterexample in `witness`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{
    broom_elena_to_tree, broom_tree_to_elena, compose_b_path, composite_even_inv, composite_odd,
    composite_odd_inv, decompose_b_path, glove_path_to_tree, glove_tree_to_path, join_last_two,
    split_last_two, EvenEnd, OddEnd, MAX_HEIGHT,
};
use crate::enumeration::{
    closed_form, count, elena_words, generate, plane_trees, union_identity_counts, CountMethod,
};
use crate::error::Result;
use crate::path::{Band, FamilySpec, LatticePath, Step};
use crate::tree::PlaneTree;
use crate::word::{elena_to_word, word_to_elena, ElenaWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub claim: String,
    pub n: usize,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    fn compare<T: PartialEq + fmt::Display>(
        claim: impl Into<String>,
        n: usize,
        expected: T,
        actual: T,
    ) -> CheckRecord {
        CheckRecord {
            claim: claim.into(),
            n,
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
            witness: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain record")
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} n={} expected={} actual={}",
            self.claim, self.n, self.expected, self.actual
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w:?}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn find(&self, claim: &str, n: usize) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.claim == claim && r.n == n)
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.records.extend(other.records);
        self
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_json());
            out.push('\n');
        }
        out
    }
}

/// Counts how many elements satisfy a claim and keeps the first failure.
struct Tally {
    claim: String,
    n: usize,
    total: usize,
    ok: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(claim: impl Into<String>, n: usize) -> Tally {
        Tally {
            claim: claim.into(),
            n,
            total: 0,
            ok: 0,
            witness: None,
        }
    }

    fn check(&mut self, cond: bool, witness: impl FnOnce() -> String) {
        self.total += 1;
        if cond {
            self.ok += 1;
        } else if self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn record(self) -> CheckRecord {
        CheckRecord {
            claim: self.claim,
            n: self.n,
            expected: self.total.to_string(),
            actual: self.ok.to_string(),
            passed: self.ok == self.total,
            witness: self.witness,
        }
    }
}

/// End levels of the tabulated families for a given length parity.
fn tabulated(length: usize) -> [(Band, &'static str, i32); 4] {
    if length.is_multiple_of(2) {
        [
            (Band::A, "A(n,0)", 0),
            (Band::A, "A(n,2)", 2),
            (Band::B, "B(n,0)", 0),
            (Band::B, "B(n,-2)", -2),
        ]
    } else {
        [
            (Band::A, "A(n,1)", 1),
            (Band::A, "A(n,3)", 3),
            (Band::B, "B(n,1)", 1),
            (Band::B, "B(n,-1)", -1),
        ]
    }
}

fn count_checks(n: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for (band, name, end) in tabulated(n) {
        let spec = FamilySpec::new(band, n, end).expect("end inside band");
        let formula = closed_form(&spec).expect("tabulated family");
        for method in [CountMethod::BruteForce, CountMethod::TransferMatrix] {
            let actual = count(&spec, method).expect("always available");
            out.push(CheckRecord::compare(
                format!("count:{name}:{method}"),
                n,
                formula.clone(),
                actual,
            ));
        }
    }
    let union = union_identity_counts(n);
    out.push(CheckRecord::compare(
        "union-identity",
        n,
        union.rhs,
        union.lhs,
    ));
    out
}

/// Brute force, transfer matrix and closed form agree for the eight
/// tabulated families, and the union identity holds, for every length up to
/// `max_length`.
pub fn verify_counts(max_length: usize) -> Report {
    let records = (0..=max_length)
        .into_par_iter()
        .map(count_checks)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { records }
}

fn family(band: Band, length: usize, end: i32) -> FamilySpec {
    FamilySpec::new(band, length, end).expect("end inside band")
}

/// Image of a map checked against an independently generated family.
fn image_checks<T: Eq + std::hash::Hash>(
    claim: &str,
    n: usize,
    image: &HashSet<(LatticePath, T)>,
    tag: T,
    target: &FamilySpec,
) -> Vec<CheckRecord> {
    let formula = closed_form(target).expect("tabulated family");
    let hit: BTreeSet<&LatticePath> = image
        .iter()
        .filter(|(_, t)| *t == tag)
        .map(|(p, _)| p)
        .collect();
    let members = generate(target);
    let mut exact = Tally::new(format!("{claim}:image-exact"), n);
    for m in &members {
        exact.check(hit.contains(m), || m.to_string());
    }
    for p in &hit {
        exact.check(p.is_member_of(target), || format!("stray {p}"));
    }
    vec![
        CheckRecord::compare(
            format!("{claim}:image-size"),
            n,
            formula,
            BigUint::from(hit.len()),
        ),
        exact.record(),
    ]
}

fn even_checks(length: usize) -> Vec<CheckRecord> {
    let n = length;
    let half = length / 2;
    let domain = generate(&family(Band::B, length, 0));
    let mut pipeline = Tally::new("even:pipeline", n);
    let mut decompose_rt = Tally::new("round-trip:decompose", n);
    let mut word_rt = Tally::new("round-trip:word-elena", n);
    let mut broom_rt = Tally::new("round-trip:broom", n);
    let mut glove_rt = Tally::new("round-trip:glove", n);
    let mut split_rt = Tally::new("round-trip:split", n);
    let mut inverse = Tally::new("even:inverse", n);
    let mut sizes = Tally::new("even:stage-sizes", n);
    let mut subclass = Tally::new("even:last-group-rightmost-leaf", n);
    let mut image = HashSet::new();

    for b in &domain {
        let staged = (|| -> Result<_> {
            let word = decompose_b_path(b)?;
            let elena = word_to_elena(&word);
            let tree = broom_elena_to_tree(&elena);
            let long = glove_tree_to_path(&tree)?;
            let (a, tag) = split_last_two(&long)?;
            Ok((word, elena, tree, long, a, tag))
        })();
        let (word, elena, tree, long, a, tag) = match staged {
            Ok(s) => s,
            Err(e) => {
                pipeline.check(false, || format!("{b}: {e}"));
                continue;
            }
        };
        pipeline.check(true, String::new);
        decompose_rt.check(compose_b_path(&word) == *b, || b.to_string());
        word_rt.check(elena_to_word(&elena) == word, || word.to_string());
        broom_rt.check(broom_tree_to_elena(&tree).as_ref() == Ok(&elena), || {
            tree.to_string()
        });
        glove_rt.check(glove_path_to_tree(&long).as_ref() == Ok(&tree), || {
            long.to_string()
        });
        split_rt.check(join_last_two(&a, tag).as_ref() == Ok(&long), || {
            format!("{a} tag {tag}")
        });
        inverse.check(composite_even_inv(&a, tag).as_ref() == Ok(b), || {
            b.to_string()
        });
        sizes.check(
            word.size() == half + 2
                && tree.size() == half + 2
                && tree.height() <= MAX_HEIGHT
                && tree.children().len() == elena.spine() - 1
                && long.len() == length + 2,
            || b.to_string(),
        );
        let nonempty = elena.last_group_nonempty();
        let deep = tree.rightmost_leaf_depth() >= 2;
        let dd = long.ends_with(&[Step::Down, Step::Down]);
        subclass.check(nonempty == deep && deep == dd, || b.to_string());
        image.insert((a, tag));
    }

    let mut out: Vec<CheckRecord> = [
        pipeline,
        decompose_rt,
        word_rt,
        broom_rt,
        glove_rt,
        split_rt,
        inverse,
        sizes,
        subclass,
    ]
    .into_iter()
    .map(Tally::record)
    .collect();
    out.push(CheckRecord::compare(
        "even:injective",
        n,
        domain.len(),
        image.len(),
    ));
    out.extend(image_checks(
        "even:A(n,0)",
        n,
        &image,
        EvenEnd::Zero,
        &family(Band::A, length, 0),
    ));
    out.extend(image_checks(
        "even:A(n,2)",
        n,
        &image,
        EvenEnd::Two,
        &family(Band::A, length, 2),
    ));
    out
}

fn odd_checks(length: usize) -> Vec<CheckRecord> {
    let n = length;
    let domain = generate(&family(Band::B, length, -1));
    let mut pipeline = Tally::new("odd:pipeline", n);
    let mut inverse = Tally::new("odd:inverse", n);
    let mut subclass = Tally::new("odd:last-group-rightmost-leaf", n);
    let mut image = HashSet::new();

    for b in &domain {
        let (a, tag) = match composite_odd(b) {
            Ok(x) => x,
            Err(e) => {
                pipeline.check(false, || format!("{b}: {e}"));
                continue;
            }
        };
        pipeline.check(true, String::new);
        inverse.check(composite_odd_inv(&a, tag).as_ref() == Ok(b), || {
            b.to_string()
        });

        // All three views of the augmented path must lie in the subclass.
        let closed = b.extended(&[Step::Up]).expect("ends at -1");
        let elena = decompose_b_path(&closed).map(|w| word_to_elena(&w));
        let holds = elena.is_ok_and(|elena| {
            let tree = broom_elena_to_tree(&elena);
            let long = glove_tree_to_path(&tree);
            elena.last_group_nonempty()
                && tree.rightmost_leaf_depth() >= 2
                && long.is_ok_and(|l| l.ends_with(&[Step::Down, Step::Down]))
        });
        subclass.check(holds, || b.to_string());
        image.insert((a, tag));
    }

    let mut out: Vec<CheckRecord> = [pipeline, inverse, subclass]
        .into_iter()
        .map(Tally::record)
        .collect();
    out.push(CheckRecord::compare(
        "odd:injective",
        n,
        domain.len(),
        image.len(),
    ));
    out.extend(image_checks(
        "odd:A(n,1)",
        n,
        &image,
        OddEnd::One,
        &family(Band::A, length, 1),
    ));
    out.extend(image_checks(
        "odd:A(n,3)",
        n,
        &image,
        OddEnd::Three,
        &family(Band::A, length, 3),
    ));
    out
}

/// Exhaustive checks of the even and odd bijections on every length up to
/// `max_length`.
pub fn verify_bijections(max_length: usize) -> Report {
    let records = (0..=max_length)
        .into_par_iter()
        .map(|len| {
            if len % 2 == 0 {
                even_checks(len)
            } else {
                odd_checks(len)
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { records }
}

fn parse_render_trees(nodes: usize) -> Vec<CheckRecord> {
    let mut parse = Tally::new("parse-render:tree", nodes);
    let mut glove = Tally::new("round-trip:glove-tree", nodes);
    let mut broom = Tally::new("round-trip:broom-tree", nodes);
    for t in plane_trees(nodes, None) {
        let text = t.to_string();
        parse.check(PlaneTree::parse(&text).as_ref() == Ok(&t), || text.clone());
        if t.height() <= MAX_HEIGHT {
            let back = glove_tree_to_path(&t).and_then(|p| glove_path_to_tree(&p));
            glove.check(back.as_ref() == Ok(&t), || text.clone());
            if nodes >= 2 {
                let back = broom_tree_to_elena(&t).map(|e| broom_elena_to_tree(&e));
                broom.check(back.as_ref() == Ok(&t), || text.clone());
            }
        }
    }
    vec![parse.record(), glove.record(), broom.record()]
}

fn parse_render_words(size: usize) -> Vec<CheckRecord> {
    let mut parse = Tally::new("parse-render:elena", size);
    let mut word_rt = Tally::new("round-trip:elena-word", size);
    let mut compose_rt = Tally::new("round-trip:compose", size);
    let mut broom_rt = Tally::new("round-trip:broom-elena", size);
    for w in elena_words(size) {
        let text = w.to_string();
        parse.check(ElenaWord::parse(&text).as_ref() == Ok(&w), || text.clone());
        let elena = word_to_elena(&w);
        word_rt.check(elena_to_word(&elena) == w, || text.clone());
        let back = decompose_b_path(&compose_b_path(&w));
        compose_rt.check(back.as_ref() == Ok(&w), || text.clone());
        let back = broom_tree_to_elena(&broom_elena_to_tree(&elena));
        broom_rt.check(back.as_ref() == Ok(&elena), || text.clone());
    }
    vec![
        parse.record(),
        word_rt.record(),
        compose_rt.record(),
        broom_rt.record(),
    ]
}

fn parse_render_paths(length: usize) -> Vec<CheckRecord> {
    let mut parse = Tally::new("parse-render:path", length);
    let mut glove = Tally::new("round-trip:glove-path", length);
    let mut decompose = Tally::new("round-trip:decompose-path", length);
    for band in [Band::A, Band::B] {
        for end in band.lo()..=band.hi() {
            for p in generate(&family(band, length, end)) {
                let text = p.to_string();
                parse.check(LatticePath::parse(&text, band).as_ref() == Ok(&p), || {
                    text.clone()
                });
                if band == Band::A && end == 0 {
                    let back = glove_path_to_tree(&p).and_then(|t| glove_tree_to_path(&t));
                    glove.check(back.as_ref() == Ok(&p), || text.clone());
                }
                if band == Band::B && end == 0 {
                    let back = decompose_b_path(&p).map(|w| compose_b_path(&w));
                    decompose.check(back.as_ref() == Ok(&p), || text.clone());
                }
            }
        }
    }
    vec![parse.record(), glove.record(), decompose.record()]
}

/// Serialization and stage round trips over every object independently
/// enumerated by kind: plane trees and Elenas with up to `max_nodes` nodes,
/// and paths in both bands with up to `max_length` steps.
pub fn verify_round_trips(max_nodes: usize, max_length: usize) -> Report {
    let trees = (1..=max_nodes).into_par_iter().map(parse_render_trees);
    let words = (2..=max_nodes).into_par_iter().map(parse_render_words);
    let paths = (0..=max_length).into_par_iter().map(parse_render_paths);
    let records = trees
        .chain(words)
        .chain(paths)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { records }
}

/// Everything: counts, bijections, and round trips on trees with up to
/// `max_length / 2 + 2` nodes.
pub fn verify_all(max_length: usize) -> Report {
    verify_counts(max_length)
        .merge(verify_bijections(max_length))
        .merge(verify_round_trips(max_length / 2 + 2, max_length))
}
