//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use elena::bijections::{broom_elena_to_tree, decompose_b_path, glove_path_to_tree};
use elena::harness::{verify_bijections, verify_counts, verify_round_trips};
use elena::{
    count, fib, union_identity_counts, Band, CountMethod, FamilySpec, LatticePath, Report,
};
use num_bigint::BigUint;

const FIG1_PATH: &str = "UUUDUDDDUDUDUUDUDUDD";
const FIG1_TREE: &str = "(((()()))()()(()()()))";
const FIG3_PATH: &str = "DDUDUU UD DU DU DDUDUDUU UDUD DDUU";
const FIG2_WORD: &str = "a p3 a p1 p1 p4 a a p2 a";
const FIG5_TREE: &str = "(((()()))(()()(()()()))()((())))";

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn from_report(report: &Report, prefixes: &[&str]) -> Outcome {
    let relevant: Vec<_> = report
        .records
        .iter()
        .filter(|r| prefixes.iter().any(|p| r.claim.starts_with(p)))
        .collect();
    if relevant.is_empty() {
        return fail("no records");
    }
    match relevant.iter().find(|r| !r.passed) {
        Some(r) => fail(r.to_string()),
        None => pass(format!("{} records", relevant.len())),
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn criterion_counts() -> Outcome {
    let report = verify_counts(24);
    let out = from_report(&report, &["count:"]);
    if !out.ok {
        return out;
    }
    for method in CountMethod::ALL {
        let a8 = count(&FamilySpec::a(8, 0).unwrap(), method).unwrap();
        let b20 = count(&FamilySpec::b(20, 0).unwrap(), method).unwrap();
        if a8 != big(13) || b20 != big(10946) || b20 != fib(21).unwrap() {
            return fail(format!("{method}: |A(8,0)| = {a8}, |B(20,0)| = {b20}"));
        }
    }
    pass(format!("{}; |A(8,0)| = 13, |B(20,0)| = 10946", out.detail))
}

fn criterion_union() -> Outcome {
    for n in 0..=30 {
        let u = union_identity_counts(n);
        if u.lhs != u.rhs {
            return fail(format!("n = {n}: {} != {}", u.lhs, u.rhs));
        }
    }
    pass("n <= 30")
}

fn criterion_figures() -> Outcome {
    let a = LatticePath::parse(FIG1_PATH, Band::A).unwrap();
    let tree = match glove_path_to_tree(&a) {
        Ok(t) => t,
        Err(e) => return fail(format!("glove: {e}")),
    };
    if tree.to_string() != FIG1_TREE || tree.size() != 11 {
        return fail(format!("glove image {tree}"));
    }
    let b = LatticePath::parse(FIG3_PATH, Band::B).unwrap();
    let word = match decompose_b_path(&b) {
        Ok(w) => w,
        Err(e) => return fail(format!("decompose: {e}")),
    };
    if word.to_string() != FIG2_WORD || word.size() != 16 {
        return fail(format!("decomposition {word}"));
    }
    let broom = broom_elena_to_tree(&word.to_elena());
    if broom.to_string() != FIG5_TREE {
        return fail(format!("broom image {broom}"));
    }
    pass("glove, decomposition and broom fixtures match")
}

fn image_sizes(
    report: &Report,
    claims: [&str; 2],
    n: usize,
    expected: [BigUint; 2],
) -> Option<String> {
    for (claim, want) in claims.iter().zip(expected) {
        let rec = report.find(claim, n)?;
        if rec.actual != want.to_string() || !rec.passed {
            return Some(format!("{claim} n={n}: {} != {want}", rec.actual));
        }
    }
    None
}

fn criterion_even(report: &Report) -> Outcome {
    let out = from_report(
        report,
        &[
            "even:injective",
            "even:A(n,",
            "even:inverse",
            "even:pipeline",
        ],
    );
    if !out.ok {
        return out;
    }
    for n in 0..=10usize {
        let len = 2 * n;
        let expected = [fib(2 * n as i64 - 1).unwrap(), fib(2 * n as i64).unwrap()];
        if let Some(err) = image_sizes(
            report,
            ["even:A(n,0):image-size", "even:A(n,2):image-size"],
            len,
            expected,
        ) {
            return fail(err);
        }
    }
    pass(format!("{}; 2n <= 20", out.detail))
}

fn criterion_odd(report: &Report) -> Outcome {
    let out = from_report(report, &["odd:"]);
    if !out.ok {
        return out;
    }
    for n in 1..=10usize {
        let len = 2 * n - 1;
        let expected = [
            fib(2 * n as i64 - 1).unwrap(),
            fib(2 * n as i64 - 2).unwrap(),
        ];
        if let Some(err) = image_sizes(
            report,
            ["odd:A(n,1):image-size", "odd:A(n,3):image-size"],
            len,
            expected,
        ) {
            return fail(err);
        }
        match report.find("odd:last-group-rightmost-leaf", len) {
            Some(r) if r.passed => {}
            Some(r) => return fail(r.to_string()),
            None => return fail(format!("no subclass record at {len}")),
        }
    }
    pass(format!("{}; 2n-1 <= 19", out.detail))
}

fn criterion_round_trips(bijections: &Report) -> Outcome {
    let report = verify_round_trips(12, 20);
    let out = from_report(&report, &["parse-render:", "round-trip:"]);
    if !out.ok {
        return out;
    }
    let staged = from_report(bijections, &["round-trip:"]);
    if !staged.ok {
        return staged;
    }
    pass(format!("{} + {} staged", out.detail, staged.detail))
}

fn run(id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            out = fail(format!(
                "{} (took {elapsed:?}, limit {limit:?})",
                out.detail
            ));
        }
    }
    let status = if out.ok { "PASS" } else { "FAIL" };
    println!("{status} [{id}] {name}: {} ({elapsed:.2?})", out.detail);
    out.ok
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= run(
        1,
        "counting formulas, lengths <= 24",
        Some(secs(30)),
        criterion_counts,
    );
    ok &= run(2, "union identity, n <= 30", Some(secs(1)), criterion_union);
    ok &= run(3, "figure fixtures", None, criterion_figures);

    let mut bijections = Report::default();
    ok &= run(4, "even bijection, 2n <= 20", Some(secs(60)), || {
        // also covers the odd lengths, which criterion 5 reads back
        bijections = verify_bijections(20);
        criterion_even(&bijections)
    });
    ok &= run(5, "odd bijection, 2n-1 <= 19", None, || {
        criterion_odd(&bijections)
    });
    ok &= run(6, "stage round trips", None, || {
        criterion_round_trips(&bijections)
    });

    if ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
