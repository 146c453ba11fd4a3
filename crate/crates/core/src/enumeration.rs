//! Exhaustive generation and counting of the path families, plus the
//! Fibonacci closed forms they are checked against.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{Band, FamilySpec, LatticePath, Step};
use crate::tree::PlaneTree;
use crate::word::{ElenaToken, ElenaWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    BruteForce,
    TransferMatrix,
    Formula,
}

impl CountMethod {
    pub const ALL: [CountMethod; 3] = [
        CountMethod::BruteForce,
        CountMethod::TransferMatrix,
        CountMethod::Formula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountMethod::BruteForce => "brute-force",
            CountMethod::TransferMatrix => "transfer-matrix",
            CountMethod::Formula => "formula",
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fibonacci numbers with `F(1) = F(2) = 1`, extended by `F(0) = 0` and
/// `F(-1) = 1`.
pub fn fib(k: i64) -> Result<BigUint> {
    if k < -1 {
        return Err(Error::OutOfRange(k));
    }
    // (F(j), F(j+1)) starting at j = -1
    let mut a = BigUint::one();
    let mut b = BigUint::zero();
    for _ in -1..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// Prefix length at which generation fans out across threads.
const SPLIT_DEPTH: usize = 8;

/// All members of `spec` in lexicographic order with `U < D`.
pub fn generate(spec: &FamilySpec) -> Vec<LatticePath> {
    if !spec.parity_ok() {
        return Vec::new();
    }
    let band = spec.band();
    let depth = spec.length().min(SPLIT_DEPTH);
    let mut prefixes = Vec::new();
    extend_paths(
        &mut Vec::with_capacity(depth),
        0,
        depth,
        spec,
        &mut |steps| prefixes.push(steps.to_vec()),
    );
    prefixes
        .into_par_iter()
        .map(|prefix| {
            let level: i32 = prefix.iter().map(|s| s.delta()).sum();
            let mut out = Vec::new();
            let mut steps = prefix;
            let start = steps.len();
            steps.reserve(spec.length() - start);
            extend_paths(&mut steps, level, spec.length(), spec, &mut |full| {
                out.push(LatticePath::new(band, full.to_vec()).expect("generated in band"));
            });
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Depth-first extension of `steps` up to `target` steps, pruning any
/// prefix that leaves the band or can no longer reach `spec.end()`.
fn extend_paths<F: FnMut(&[Step])>(
    steps: &mut Vec<Step>,
    level: i32,
    target: usize,
    spec: &FamilySpec,
    emit: &mut F,
) {
    if steps.len() == target {
        if target < spec.length() || level == spec.end() {
            emit(steps);
        }
        return;
    }
    let band = spec.band();
    for step in [Step::Up, Step::Down] {
        let next = level + step.delta();
        let remaining = (spec.length() - steps.len() - 1) as i32;
        if band.contains(next) && (next - spec.end()).abs() <= remaining {
            steps.push(step);
            extend_paths(steps, next, target, spec, emit);
            steps.pop();
        }
    }
}

/// The band's one-step adjacency: `m[i][j] = 1` iff levels `lo+i` and `lo+j`
/// differ by one.
fn step_matrix(band: Band) -> Vec<Vec<BigUint>> {
    let w = band.width();
    (0..w)
        .map(|i| {
            (0..w)
                .map(|j| {
                    if i.abs_diff(j) == 1 {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn vec_mat(v: &[BigUint], m: &[Vec<BigUint>]) -> Vec<BigUint> {
    (0..m.len())
        .map(|j| {
            v.iter()
                .zip(m)
                .filter(|(x, row)| !x.is_zero() && !row[j].is_zero())
                .map(|(x, row)| x * &row[j])
                .sum()
        })
        .collect()
}

/// Number of band paths of `length` steps ending at each level, indexed from
/// `band.lo()`.
pub fn level_counts(band: Band, length: usize) -> Vec<BigUint> {
    let m = step_matrix(band);
    let mut v = vec![BigUint::zero(); band.width()];
    v[(-band.lo()) as usize] = BigUint::one();
    for _ in 0..length {
        v = vec_mat(&v, &m);
    }
    v
}

fn transfer_count(spec: &FamilySpec) -> BigUint {
    let band = spec.band();
    let mut v = level_counts(band, spec.length());
    v.swap_remove((spec.end() - band.lo()) as usize)
}

/// The closed form for the eight tabulated families. Parity mismatches in
/// the two named bands give 0.
pub fn closed_form(spec: &FamilySpec) -> Result<BigUint> {
    let band = spec.band();
    if band != Band::A && band != Band::B {
        return Err(Error::FormulaUnavailable(spec.to_string()));
    }
    if !spec.parity_ok() {
        return Ok(BigUint::zero());
    }
    let n = spec.length() as i64;
    let m = n / 2;
    let index = match (band == Band::A, n % 2 == 0, spec.end()) {
        (true, true, 0) => 2 * m - 1,
        (true, true, 2) => 2 * m,
        (true, false, 1) => 2 * m + 1,
        (true, false, 3) => 2 * m,
        (false, true, 0) => 2 * m + 1,
        (false, true, -2) => 2 * m,
        (false, false, 1) => 2 * m + 1,
        (false, false, -1) => 2 * m + 2,
        _ => return Err(Error::FormulaUnavailable(spec.to_string())),
    };
    fib(index)
}

pub fn count(spec: &FamilySpec, method: CountMethod) -> Result<BigUint> {
    match method {
        CountMethod::BruteForce => Ok(BigUint::from(generate(spec).len())),
        CountMethod::TransferMatrix => Ok(transfer_count(spec)),
        CountMethod::Formula => closed_form(spec),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionCounts {
    /// Paths of the given length in `[0, 3]`, any end level.
    #[serde(serialize_with = "ser_big")]
    pub lhs: BigUint,
    /// Paths of the given length in `[-2, 1]` ending at 0 or -1.
    #[serde(serialize_with = "ser_big")]
    pub rhs: BigUint,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn union_identity_counts(n: usize) -> UnionCounts {
    let lhs = level_counts(Band::A, n).into_iter().sum();
    let b = level_counts(Band::B, n);
    let lo = Band::B.lo();
    let rhs = &b[(0 - lo) as usize] + &b[(-1 - lo) as usize];
    UnionCounts { lhs, rhs }
}

/// All plane trees with `size` nodes, optionally bounded in height.
pub fn plane_trees(size: usize, max_height: Option<usize>) -> Vec<PlaneTree> {
    if size == 0 {
        return Vec::new();
    }
    match max_height {
        Some(0) if size > 1 => Vec::new(),
        _ => forests(size - 1, max_height.map(|h| h.saturating_sub(1)))
            .into_iter()
            .map(PlaneTree::with_children)
            .collect(),
    }
}

fn forests(nodes: usize, max_height: Option<usize>) -> Vec<Vec<PlaneTree>> {
    if nodes == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=nodes {
        let heads = plane_trees(first, max_height);
        if heads.is_empty() {
            continue;
        }
        let tails = forests(nodes - first, max_height);
        for head in &heads {
            for tail in &tails {
                let mut forest = Vec::with_capacity(tail.len() + 1);
                forest.push(head.clone());
                forest.extend(tail.iter().cloned());
                out.push(forest);
            }
        }
    }
    out
}

/// All Elena words of the given size (at least 2).
pub fn elena_words(size: usize) -> Vec<ElenaWord> {
    if size < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut tokens = vec![ElenaToken::A];
    word_tails(&mut tokens, size - 1, &mut out);
    out
}

fn word_tails(tokens: &mut Vec<ElenaToken>, remaining: usize, out: &mut Vec<ElenaWord>) {
    if remaining == 1 {
        tokens.push(ElenaToken::A);
        out.push(ElenaWord::new(tokens.clone()).expect("well-formed"));
        tokens.pop();
        return;
    }
    tokens.push(ElenaToken::A);
    word_tails(tokens, remaining - 1, out);
    tokens.pop();
    for k in 1..remaining {
        tokens.push(ElenaToken::P(k));
        word_tails(tokens, remaining - k, out);
        tokens.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(-1).unwrap(), big(1));
        assert_eq!(fib(0).unwrap(), big(0));
        assert_eq!(fib(1).unwrap(), big(1));
        assert_eq!(fib(2).unwrap(), big(1));
        assert_eq!(fib(7).unwrap(), big(13));
        assert_eq!(fib(19).unwrap(), big(4181));
        assert_eq!(fib(21).unwrap(), big(10946));
        assert_eq!(fib(-2), Err(Error::OutOfRange(-2)));
    }

    #[test]
    fn generate_small_families() {
        let strings = |spec: FamilySpec| {
            generate(&spec)
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(strings(FamilySpec::a(2, 0).unwrap()), ["UD"]);
        assert_eq!(
            strings(FamilySpec::b(4, 0).unwrap()),
            ["UDUD", "UDDU", "DUUD", "DUDU", "DDUU"]
        );
        assert!(strings(FamilySpec::a(3, 0).unwrap()).is_empty());
        assert_eq!(strings(FamilySpec::a(0, 0).unwrap()), [""]);
        assert!(strings(FamilySpec::a(0, 2).unwrap()).is_empty());
    }

    #[test]
    fn count_examples() {
        for method in CountMethod::ALL {
            assert_eq!(
                count(&FamilySpec::a(8, 0).unwrap(), method).unwrap(),
                big(13)
            );
            assert_eq!(
                count(&FamilySpec::b(2, -2).unwrap(), method).unwrap(),
                big(1)
            );
            assert_eq!(
                count(&FamilySpec::a(3, 3).unwrap(), method).unwrap(),
                big(1)
            );
            assert_eq!(
                count(&FamilySpec::a(4, 1).unwrap(), method).unwrap(),
                big(0)
            );
        }
    }

    #[test]
    fn formula_needs_named_band() {
        let spec = FamilySpec::new(Band::new(0, 2).unwrap(), 4, 0).unwrap();
        assert!(matches!(
            count(&spec, CountMethod::Formula),
            Err(Error::FormulaUnavailable(_))
        ));
        // The other two methods work in any band.
        assert_eq!(count(&spec, CountMethod::BruteForce).unwrap(), big(2));
        assert_eq!(count(&spec, CountMethod::TransferMatrix).unwrap(), big(2));
    }

    #[test]
    fn union_identity_small() {
        let u = union_identity_counts(0);
        assert_eq!((u.lhs, u.rhs), (big(1), big(1)));
        let u = union_identity_counts(2);
        assert_eq!((u.lhs, u.rhs), (big(2), big(2)));
        let u = union_identity_counts(3);
        assert_eq!((u.lhs, u.rhs), (big(3), big(3)));
    }

    #[test]
    fn tree_generation_counts() {
        // Catalan numbers without a height bound.
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(plane_trees(n + 1, None).len(), c);
        }
        assert_eq!(plane_trees(1, Some(0)).len(), 1);
        assert_eq!(plane_trees(2, Some(0)).len(), 0);
        // 14 trees on 5 nodes, one of them the height-4 chain
        assert_eq!(plane_trees(5, Some(3)).len(), 13);
    }

    #[test]
    fn word_generation_counts() {
        // size s Elenas <-> B(2(s-2), 0), counted by F(2s - 3)
        for s in 2..=9 {
            let words = elena_words(s);
            assert_eq!(BigUint::from(words.len()), fib(2 * s as i64 - 3).unwrap());
            assert!(words.iter().all(|w| w.size() == s));
        }
    }
}
