//! Acceptance suite: every formula and characterization is swept against
//! the brute-force solver over its stated box, plus the reproduced
//! computational claims. One pass/fail line prints per criterion; the
//! final criterion (byte-stable CLI table output) lives in the CLI
//! crate's own acceptance test.

use std::time::{Duration, Instant};

use knim::formulas::tetris;
use knim::verify::{self, run_suite, tetris_bruteforce, Overrides, SuiteRun};
use knim::Position;

fn report(criterion: u32, label: &str, passed: bool, elapsed: Duration, budget: Duration) {
    let within = elapsed <= budget;
    println!(
        "criterion {criterion:2} ({label}): {} [{} ms, budget {} ms]",
        if passed && within { "PASS" } else { "FAIL" },
        elapsed.as_millis(),
        budget.as_millis()
    );
    assert!(passed, "criterion {criterion} ({label}) has mismatches");
    assert!(
        within,
        "criterion {criterion} ({label}) exceeded its time budget: {elapsed:?} > {budget:?}"
    );
}

fn assert_clean(run: &SuiteRun) -> bool {
    for r in &run.reports {
        if !r.passed() {
            eprintln!(
                "  {}: {} mismatches over {} positions; first: {:?}",
                r.subject(),
                r.mismatch_total,
                r.positions_checked,
                r.mismatches.first()
            );
        }
    }
    run.passed()
}

fn timed_suite(name: &str) -> (SuiteRun, Duration) {
    let started = Instant::now();
    let run = run_suite(name, &Overrides::default()).expect("suite runs");
    (run, started.elapsed())
}

#[test]
fn criterion_01_classic_nim_matches_nim_sum() {
    let (run, elapsed) = timed_suite("nim-sum");
    assert_eq!(run.reports.len(), 3);
    report(1, "classic vs nim-sum, n=2..4 cap 7", assert_clean(&run), elapsed, Duration::from_secs(1));
}

#[test]
fn criterion_02_moore_function_masks_low_values() {
    let (run, elapsed) = timed_suite("moore-function");
    assert_eq!(run.reports.len(), 3);
    report(2, "moore digit function 0/1 sets", assert_clean(&run), elapsed, Duration::from_secs(10));
}

#[test]
fn criterion_03_exco_formula_matches_solver() {
    let (run, elapsed) = timed_suite("exco-formula");
    assert_eq!(run.reports.len(), 3);
    report(3, "threshold formula: moore n=k+1 and exco", assert_clean(&run), elapsed, Duration::from_secs(60));
}

#[test]
fn criterion_04_tetris_shortcut_equals_search() {
    let started = Instant::now();
    let (run, _) = timed_suite("tetris");
    assert_eq!(run.reports.len(), 15, "one report per (n, k), n <= 5");
    let mut ok = assert_clean(&run);
    // The worked four-pile instance with three piles per round.
    let p = Position::new(vec![1, 1, 2, 3]);
    ok &= tetris(&p, 3).unwrap() == 2 && tetris_bruteforce(&p, 3).unwrap() == 2;
    report(4, "tetris vs literal search, n<=5 entries<=5", ok, started.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_05_exact_formula_matches_solver() {
    let (run, elapsed) = timed_suite("exact-formula");
    assert_eq!(run.reports.len(), 3);
    report(5, "exact k-Nim formula, (3,2)/(5,3)/(4,2)", assert_clean(&run), elapsed, Duration::from_secs(60));
}

#[test]
fn criterion_06_exact_small_games_are_pet() {
    let (run, elapsed) = timed_suite("exact-pet");
    assert_eq!(run.reports.len(), 2);
    report(6, "exact n<2k pet equivalences", assert_clean(&run), elapsed, Duration::from_secs(30));
}

#[test]
fn criterion_07_swap_characterizations() {
    let started = Instant::now();
    let (moore, _) = timed_suite("moore-swaps");
    let (exact, _) = timed_suite("exact-swaps");
    let ok = assert_clean(&moore) && assert_clean(&exact);
    report(7, "moore and exact swap classes, both directions", ok, started.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_08_small_slow_moore_tables() {
    let (run, elapsed) = timed_suite("slow-moore-sg");
    assert_eq!(run.reports.len(), 2);
    assert_eq!(run.reports[1].positions_checked, 816);
    report(8, "slow-moore (2,2)/(3,2) parity tables", assert_clean(&run), elapsed, Duration::from_secs(5));
}

#[test]
fn criterion_09_slow_moore_p_patterns() {
    let (run, elapsed) = timed_suite("slow-moore-p");
    assert_eq!(run.reports.len(), 11);
    report(9, "slow-moore P-position patterns", assert_clean(&run), elapsed, Duration::from_secs(120));
}

#[test]
fn criterion_10_slow_moore_misere_swaps() {
    let (run, elapsed) = timed_suite("slow-moore-misere-swaps");
    assert_eq!(run.reports.len(), 2);
    report(10, "slow-moore k>=n-1 swap sets, both directions", assert_clean(&run), elapsed, Duration::from_secs(10));
}

#[test]
fn criterion_11_slow_exact_32_characterizations() {
    let (run, elapsed) = timed_suite("slow-exact-sg");
    assert_eq!(run.reports.len(), 4);
    for r in &run.reports {
        assert_eq!(r.positions_checked, 3276, "cap 25 box");
        // Kind-rule disagreements for the swap characterization must be
        // reported verbatim, never patched over.
        for m in &r.mismatches {
            eprintln!(
                "  {} disagrees at {}: formula {} vs solver {}",
                r.formula, m.pos, m.formula_value, m.solver_value
            );
        }
    }
    report(11, "slow-exact (3,2) values, swaps, non-tame classes", assert_clean(&run), elapsed, Duration::from_secs(30));
}

#[test]
fn criterion_12_reproduced_computations() {
    let started = Instant::now();
    let results = verify::regression_suite().expect("claims evaluate");
    assert_eq!(results.len(), 15);
    let mut ok = true;
    for r in &results {
        if !r.passed {
            eprintln!("  claim failed: {} (expected {}, got {})", r.id, r.expected, r.actual);
            ok = false;
        }
    }
    report(12, "literal computational claims", ok, started.elapsed(), Duration::from_secs(120));
}
