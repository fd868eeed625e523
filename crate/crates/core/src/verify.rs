//! Cross-checks between the closed forms and the brute-force engine.
//!
//! Each check sweeps a whole box, comparing a closed form against the
//! solver at every canonical position, and reports all mismatches (the
//! sweep never stops early). The tetris brute force here is the literal
//! search over rounds, independent of the feasibility shortcut it
//! guards.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::engine::{PositionClass, SgTable, SwapKind};
use crate::formulas;
use crate::rules::{self, GameSpec, Position, Version};
use crate::{Error, Result};

/// One disagreement between a closed form and the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub pos: Position,
    pub formula_value: String,
    pub solver_value: String,
}

/// Outcome of sweeping one closed form over one box.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub formula: String,
    pub spec: GameSpec,
    pub cap: u32,
    pub version: Version,
    pub positions_checked: u64,
    pub mismatch_total: u64,
    /// First mismatches in lexicographic position order, capped so that
    /// reports stay printable; `mismatch_total` always holds the full count.
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

/// At most this many mismatches are kept per report.
pub const MISMATCH_SAMPLE_LIMIT: usize = 100;

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch_total == 0
    }

    pub fn subject(&self) -> String {
        format!(
            "{} [{} cap={} {}]",
            self.formula, self.spec, self.cap, self.version
        )
    }
}

/// The closed forms that can be swept against the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// Classic Nim: SG value equals the XOR of the piles.
    NimSum,
    /// Moore's game: the digit function is 0 (resp. 1) exactly on the
    /// 0- (resp. 1-) positions. Values above 1 carry no claim, so both
    /// sides are truncated at 2.
    MooreFunction,
    /// Moore n = k+1 and Exco-Nim: the quadratic-threshold formula.
    ExcoFormula,
    /// Exact k-Nim with 2k > n or n = 2k: tetris-based formula.
    ExactFormula,
    /// Slow games with k = 1 and slow-exact with k = n: parity rule.
    SlowTrivialParity,
    /// Slow-Moore (2,2) and (3,2): the parity-vector value table.
    SlowMooreSmall,
    /// Slow-Moore P-position patterns (indicator against solver zeros).
    SlowMooreP,
    /// Slow-Moore k >= n-1: swap-position characterization.
    SlowMooreMisereSwap,
    /// Slow-exact (3,2): full SG value, version dependent.
    SlowExactSg,
    /// Slow-exact (3,2): swap positions and their kinds.
    SlowExactSwap,
    /// Slow-exact (3,2): the non-swap non-tame classes.
    SlowExactNontame,
    /// Moore's game with 2 <= k < n: swap-position characterization.
    MooreSwap,
    /// Exact k-Nim with n = 2k: swap-position characterization.
    ExactSwap,
}

impl ClosedForm {
    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::NimSum => "nim-sum",
            ClosedForm::MooreFunction => "moore-function",
            ClosedForm::ExcoFormula => "exco-formula",
            ClosedForm::ExactFormula => "exact-formula",
            ClosedForm::SlowTrivialParity => "slow-trivial-parity",
            ClosedForm::SlowMooreSmall => "slow-moore-small-table",
            ClosedForm::SlowMooreP => "slow-moore-p-patterns",
            ClosedForm::SlowMooreMisereSwap => "slow-moore-misere-swaps",
            ClosedForm::SlowExactSg => "slow-exact-32-sg",
            ClosedForm::SlowExactSwap => "slow-exact-32-swaps",
            ClosedForm::SlowExactNontame => "slow-exact-32-nontame",
            ClosedForm::MooreSwap => "moore-swaps",
            ClosedForm::ExactSwap => "exact-swaps",
        }
    }

    /// Forms whose claim is about normal play only.
    fn normal_only(self) -> bool {
        matches!(
            self,
            ClosedForm::NimSum
                | ClosedForm::MooreFunction
                | ClosedForm::ExcoFormula
                | ClosedForm::ExactFormula
                | ClosedForm::SlowMooreSmall
                | ClosedForm::SlowMooreP
        )
    }
}

fn render_swap(kind: Option<SwapKind>) -> String {
    match kind {
        Some(k) => k.to_string(),
        None => "-".into(),
    }
}

/// Sweeps `formula` against the solver over the whole box, collecting
/// every mismatch. Errors if the formula does not apply to the spec or
/// version at all.
pub fn check_formula(
    formula: ClosedForm,
    spec: &GameSpec,
    cap: u32,
    version: Version,
) -> Result<VerifyReport> {
    if formula.normal_only() && version == Version::Misere {
        return Err(Error::Domain(format!(
            "{} makes a normal-play claim only",
            formula.name()
        )));
    }
    let started = Instant::now();
    let normal = SgTable::build(spec, cap, Version::Normal)?;
    let misere = SgTable::build(spec, cap, Version::Misere)?;
    let value_table = match version {
        Version::Normal => &normal,
        Version::Misere => &misere,
    };

    let mut mismatches = Vec::new();
    let mut mismatch_total = 0u64;
    for idx in 0..normal.len() {
        let pos = normal.position_at(idx);
        let g = normal.get(&pos).expect("in box");
        let class = PositionClass {
            g,
            g_minus: misere.get(&pos).expect("in box"),
        };
        let solver_value = value_table.get(&pos).expect("in box");

        let (lhs, rhs): (String, String) = match formula {
            ClosedForm::NimSum => (
                formulas::nim_sum(&pos).to_string(),
                solver_value.to_string(),
            ),
            ClosedForm::MooreFunction => {
                let truncate = |v: u64| {
                    if v >= 2 {
                        ">=2".to_string()
                    } else {
                        v.to_string()
                    }
                };
                (
                    truncate(formulas::moore_function(&pos, spec.k() as u32)),
                    truncate(solver_value as u64),
                )
            }
            ClosedForm::ExcoFormula => (
                formulas::exco_sg_formula(&pos, spec)?.to_string(),
                solver_value.to_string(),
            ),
            ClosedForm::ExactFormula => (
                formulas::exact_sg_formula(&pos, spec)?.to_string(),
                solver_value.to_string(),
            ),
            ClosedForm::SlowTrivialParity => (
                formulas::trivial_case_sg(&pos, spec, version)?.to_string(),
                solver_value.to_string(),
            ),
            ClosedForm::SlowMooreSmall => (
                formulas::slow_moore_sg_small(&pos, spec)?.to_string(),
                solver_value.to_string(),
            ),
            ClosedForm::SlowMooreP => (
                if formulas::slow_moore_is_p(&pos, spec)? { "P" } else { "N" }.into(),
                if g == 0 { "P" } else { "N" }.into(),
            ),
            ClosedForm::SlowMooreMisereSwap => (
                render_swap(formulas::slow_moore_misere_swap(&pos, spec)?),
                render_swap(class.swap_kind()),
            ),
            ClosedForm::SlowExactSg => {
                if (spec.family(), spec.n(), spec.k()) != (rules::Family::SlowExact, 3, 2) {
                    return Err(Error::Domain(format!(
                        "the (3,2) value formula does not apply to {spec}"
                    )));
                }
                (
                    formulas::slow_exact32_sg(&pos, version)?.to_string(),
                    solver_value.to_string(),
                )
            }
            ClosedForm::SlowExactSwap => (
                render_swap(formulas::swap_class_32(&pos)?),
                render_swap(class.swap_kind()),
            ),
            ClosedForm::SlowExactNontame => {
                let expected = (!class.is_swap() && !class.is_tame_value()).then_some(class);
                let got = formulas::nontame_class_32(&pos)?;
                (
                    got.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                    expected.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                )
            }
            ClosedForm::MooreSwap => (
                render_swap(formulas::swap_class_moore(&pos, spec)?),
                render_swap(class.swap_kind()),
            ),
            ClosedForm::ExactSwap => (
                render_swap(formulas::swap_class_exact2k(&pos, spec.k())?),
                render_swap(class.swap_kind()),
            ),
        };

        if lhs != rhs {
            mismatch_total += 1;
            if mismatches.len() < MISMATCH_SAMPLE_LIMIT {
                mismatches.push(Mismatch {
                    pos,
                    formula_value: lhs,
                    solver_value: rhs,
                });
            }
        }
    }

    Ok(VerifyReport {
        formula: formula.name().into(),
        spec: *spec,
        cap,
        version,
        positions_checked: normal.len() as u64,
        mismatch_total,
        mismatches,
        elapsed: started.elapsed(),
    })
}

/// Checks the pet property over a box by its three equivalent faces:
/// no (0,0)-position, no (1,1)-position, and from every non-terminal
/// 0-position a move to a 1-position.
pub fn check_pet(spec: &GameSpec, cap: u32) -> Result<VerifyReport> {
    let started = Instant::now();
    let normal = SgTable::build(spec, cap, Version::Normal)?;
    let misere = SgTable::build(spec, cap, Version::Misere)?;
    let mut mismatches = Vec::new();
    let mut mismatch_total = 0u64;
    for idx in 0..normal.len() {
        let pos = normal.position_at(idx);
        let g = normal.get(&pos).expect("in box");
        let gm = misere.get(&pos).expect("in box");
        let mut violation: Option<String> = None;
        if g == 0 && gm == 0 {
            violation = Some("(0,0)-position".into());
        } else if g == 1 && gm == 1 {
            violation = Some("(1,1)-position".into());
        } else if g == 0 {
            let succ = rules::moves(spec, &pos)?;
            if !succ.is_empty()
                && !succ.iter().any(|q| normal.get(q) == Some(1))
            {
                violation = Some("0-position without a move to a 1-position".into());
            }
        }
        if let Some(v) = violation {
            mismatch_total += 1;
            if mismatches.len() < MISMATCH_SAMPLE_LIMIT {
                mismatches.push(Mismatch {
                    pos,
                    formula_value: "pet".into(),
                    solver_value: v,
                });
            }
        }
    }
    Ok(VerifyReport {
        formula: "exact-pet".into(),
        spec: *spec,
        cap,
        version: Version::Normal,
        positions_checked: normal.len() as u64,
        mismatch_total,
        mismatches,
        elapsed: started.elapsed(),
    })
}

/// Default guard on the literal tetris search.
pub const TETRIS_BRUTEFORCE_BOUND: u64 = 40;

/// Literal tetris search: repeatedly pick k piles with remaining budget
/// and recurse, maximizing the number of rounds. Memoized on the sorted
/// remaining budgets. Independent of the feasibility criterion used by
/// `formulas::tetris`.
pub fn tetris_bruteforce(pos: &Position, k: usize) -> Result<u64> {
    tetris_bruteforce_with_bound(pos, k, TETRIS_BRUTEFORCE_BOUND)
}

pub fn tetris_bruteforce_with_bound(pos: &Position, k: usize, bound: u64) -> Result<u64> {
    let n = pos.piles().len();
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "tetris needs 1 <= k <= n, got k={k} with {n} piles"
        )));
    }
    let total: u64 = pos.piles().iter().map(|&x| x as u64).sum();
    if total > bound {
        return Err(Error::Resource {
            positions: total as u128,
            needed: 0,
            budget: bound,
        });
    }

    fn rounds(budgets: &[u32], k: usize, memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
        if let Some(&v) = memo.get(budgets) {
            return v;
        }
        let open: Vec<usize> = budgets
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, _)| i)
            .collect();
        let mut best = 0;
        if open.len() >= k {
            use itertools::Itertools;
            for combo in open.iter().copied().combinations(k) {
                let mut next = budgets.to_vec();
                for i in combo {
                    next[i] -= 1;
                }
                next.sort_unstable();
                best = best.max(1 + rounds(&next, k, memo));
            }
        }
        memo.insert(budgets.to_vec(), best);
        best
    }

    let mut memo = HashMap::new();
    Ok(rounds(pos.piles(), k, &mut memo))
}

/// Sweeps `formulas::tetris` against the literal search over every
/// sorted tuple with at most `max_n` piles and entries up to `entry_cap`.
pub fn check_tetris(max_n: usize, entry_cap: u32) -> Result<Vec<VerifyReport>> {
    let mut reports = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            let started = Instant::now();
            let spec = GameSpec::exact(n, k)?;
            let count = crate::ranking::box_size(n, entry_cap) as usize;
            let mut mismatches = Vec::new();
            let mut mismatch_total = 0u64;
            for r in 0..count {
                let pos = Position::new(crate::ranking::unrank(n, entry_cap, r));
                let fast = formulas::tetris(&pos, k)?;
                let slow = tetris_bruteforce(&pos, k)?;
                if fast != slow {
                    mismatch_total += 1;
                    if mismatches.len() < MISMATCH_SAMPLE_LIMIT {
                        mismatches.push(Mismatch {
                            pos,
                            formula_value: fast.to_string(),
                            solver_value: slow.to_string(),
                        });
                    }
                }
            }
            reports.push(VerifyReport {
                formula: "tetris".into(),
                spec,
                cap: entry_cap,
                version: Version::Normal,
                positions_checked: count as u64,
                mismatch_total,
                mismatches,
                elapsed: started.elapsed(),
            });
        }
    }
    Ok(reports)
}

/// One reproduced computational claim.
#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub id: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

struct Claim {
    spec: GameSpec,
    piles: Vec<u32>,
    expected_g: Option<u32>,
    expected_g_minus: Option<u32>,
}

fn claim_list() -> Vec<Claim> {
    let exact52 = GameSpec::exact(5, 2).unwrap();
    let sm62 = GameSpec::slow_moore(6, 2).unwrap();
    let sm42 = GameSpec::slow_moore(4, 2).unwrap();
    let se54 = GameSpec::slow_exact(5, 4).unwrap();
    let mut claims = vec![Claim {
        spec: exact52,
        piles: vec![1, 2, 3, 3, 3],
        expected_g: Some(0),
        expected_g_minus: Some(2),
    }];
    for (piles, g) in [
        (vec![3, 3, 3, 4, 4, 4], 0),
        (vec![1, 1, 1, 2, 2, 4], 2),
        (vec![1, 3, 3, 3, 3, 3], 0),
        (vec![1, 3, 3, 3, 5, 5], 0),
        (vec![1, 3, 5, 5, 5, 5], 0),
        (vec![1, 1, 1, 1, 1, 3], 2),
        (vec![1, 1, 1, 1, 1, 5], 2),
        (vec![1, 1, 3, 3, 5, 5], 3),
    ] {
        claims.push(Claim {
            spec: sm62,
            piles,
            expected_g: Some(g),
            expected_g_minus: None,
        });
    }
    claims.push(Claim {
        spec: sm42,
        piles: vec![1, 1, 2, 3],
        expected_g: Some(4),
        expected_g_minus: Some(0),
    });
    for c in 3..=7 {
        claims.push(Claim {
            spec: se54,
            piles: vec![1, 2, 3, 3, c],
            expected_g: Some(5),
            expected_g_minus: None,
        });
    }
    claims
}

/// Re-runs every literal computational claim against the solver.
///
/// Failures are results, not errors; the five slow-exact (5,4) claims
/// cannot hold under the stated rules (positions with two equal piles
/// have at most four distinct successor values there, capping the SG
/// value at 4, and the solver finds 3) and are reported as failing.
pub fn regression_suite() -> Result<Vec<ClaimResult>> {
    let mut out = Vec::new();
    for claim in claim_list() {
        let pos = Position::new(claim.piles.clone());
        let mut expected = Vec::new();
        let mut actual = Vec::new();
        let mut passed = true;
        if let Some(g) = claim.expected_g {
            let got = crate::engine::sg_value(&claim.spec, &pos, Version::Normal)?;
            expected.push(format!("g={g}"));
            actual.push(format!("g={got}"));
            passed &= got == g;
        }
        if let Some(gm) = claim.expected_g_minus {
            let got = crate::engine::sg_value(&claim.spec, &pos, Version::Misere)?;
            expected.push(format!("g-={gm}"));
            actual.push(format!("g-={got}"));
            passed &= got == gm;
        }
        out.push(ClaimResult {
            id: format!("{} ({}) {}", claim.spec, pos, expected.join(" ")),
            passed,
            expected: expected.join(" "),
            actual: actual.join(" "),
        });
    }
    Ok(out)
}

/// Optional overrides for a suite run: a cap applied to every check in
/// the suite, and a replacement (n, k) where the suite's family allows it.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub cap: Option<u32>,
    pub n: Option<usize>,
    pub k: Option<usize>,
}

/// Everything one named suite produced.
#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub suite: String,
    pub reports: Vec<VerifyReport>,
    pub claims: Vec<ClaimResult>,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed()) && self.claims.iter().all(|c| c.passed)
    }
}

/// The named verification suites, in the order `all` runs them.
pub const SUITE_NAMES: &[&str] = &[
    "nim-sum",
    "moore-function",
    "exco-formula",
    "tetris",
    "exact-formula",
    "exact-pet",
    "moore-swaps",
    "exact-swaps",
    "slow-moore-sg",
    "slow-moore-p",
    "slow-moore-misere-swaps",
    "slow-exact-sg",
    "slow-trivial",
    "regression",
];

type Check = (ClosedForm, GameSpec, u32, Version);

fn formula_checks(name: &str, o: &Overrides) -> Result<Option<Vec<Check>>> {
    use ClosedForm::*;
    use Version::*;
    let cap = |default: u32| o.cap.unwrap_or(default);
    // A suite parameterized by one family accepts an (n, k) override.
    let respec = |family, defaults: Vec<(usize, usize, u32)>| -> Result<Vec<(GameSpec, u32)>> {
        match (o.n, o.k) {
            (None, None) => defaults
                .into_iter()
                .map(|(n, k, c)| Ok((GameSpec::new(family, n, k)?, cap(c))))
                .collect(),
            (Some(n), Some(k)) => Ok(vec![(GameSpec::new(family, n, k)?, cap(6))]),
            (Some(n), None) if family == rules::Family::Classic => {
                Ok(vec![(GameSpec::classic(n)?, cap(7))])
            }
            _ => Err(Error::InvalidSpec(
                "overriding a suite's game needs both --n and --k (only --n for classic)".into(),
            )),
        }
    };
    let checks: Vec<Check> = match name {
        "nim-sum" => respec(
            rules::Family::Classic,
            vec![(2, 1, 7), (3, 1, 7), (4, 1, 7)],
        )?
        .into_iter()
        .map(|(s, c)| (NimSum, s, c, Normal))
        .collect(),
        "moore-function" => respec(
            rules::Family::Moore,
            vec![(3, 2, 6), (4, 2, 6), (4, 3, 6)],
        )?
        .into_iter()
        .map(|(s, c)| (MooreFunction, s, c, Normal))
        .collect(),
        "exco-formula" => {
            let mut checks: Vec<Check> = respec(
                rules::Family::Moore,
                vec![(3, 2, 12), (4, 3, 8)],
            )?
            .into_iter()
            .map(|(s, c)| (ExcoFormula, s, c, Normal))
            .collect();
            if o.n.is_none() && o.k.is_none() {
                checks.push((ExcoFormula, GameSpec::exco(3)?, cap(6), Normal));
            }
            checks
        }
        "exact-formula" => respec(
            rules::Family::Exact,
            vec![(3, 2, 10), (5, 3, 5), (4, 2, 8)],
        )?
        .into_iter()
        .map(|(s, c)| (ExactFormula, s, c, Normal))
        .collect(),
        "moore-swaps" => respec(rules::Family::Moore, vec![(4, 2, 5)])?
            .into_iter()
            .map(|(s, c)| (MooreSwap, s, c, Normal))
            .collect(),
        "exact-swaps" => respec(rules::Family::Exact, vec![(4, 2, 5)])?
            .into_iter()
            .map(|(s, c)| (ExactSwap, s, c, Normal))
            .collect(),
        "slow-moore-sg" => respec(
            rules::Family::SlowMoore,
            vec![(2, 2, 30), (3, 2, 15)],
        )?
        .into_iter()
        .map(|(s, c)| (SlowMooreSmall, s, c, Normal))
        .collect(),
        "slow-moore-p" => respec(
            rules::Family::SlowMoore,
            vec![
                (1, 1, 6),
                (2, 2, 6),
                (3, 3, 6),
                (4, 4, 6),
                (2, 1, 6),
                (3, 2, 6),
                (4, 3, 6),
                (4, 2, 5),
                (5, 3, 5),
                (5, 2, 5),
                (6, 3, 4),
            ],
        )?
        .into_iter()
        .map(|(s, c)| (SlowMooreP, s, c, Normal))
        .collect(),
        "slow-moore-misere-swaps" => respec(
            rules::Family::SlowMoore,
            vec![(3, 2, 12), (3, 3, 12)],
        )?
        .into_iter()
        .map(|(s, c)| (SlowMooreMisereSwap, s, c, Misere))
        .collect(),
        "slow-exact-sg" => {
            let spec = GameSpec::slow_exact(3, 2)?;
            let c = cap(25);
            vec![
                (SlowExactSg, spec, c, Normal),
                (SlowExactSg, spec, c, Misere),
                (SlowExactSwap, spec, c, Normal),
                (SlowExactNontame, spec, c, Normal),
            ]
        }
        "slow-trivial" => {
            let mut checks = Vec::new();
            let games = match (o.n, o.k) {
                (Some(n), Some(k)) => vec![
                    GameSpec::slow_moore(n, k)?,
                    GameSpec::slow_exact(n, k)?,
                ],
                _ => vec![
                    GameSpec::slow_moore(3, 1)?,
                    GameSpec::slow_exact(4, 1)?,
                    GameSpec::slow_exact(3, 3)?,
                    GameSpec::slow_exact(2, 2)?,
                ],
            };
            for spec in games {
                for version in [Normal, Misere] {
                    checks.push((SlowTrivialParity, spec, cap(6), version));
                }
            }
            checks
        }
        _ => return Ok(None),
    };
    Ok(Some(checks))
}

/// Runs one named suite (or `all`).
pub fn run_suite(name: &str, overrides: &Overrides) -> Result<SuiteRun> {
    if name == "all" {
        let mut reports = Vec::new();
        let mut claims = Vec::new();
        for suite in SUITE_NAMES {
            let run = run_suite(suite, overrides)?;
            reports.extend(run.reports);
            claims.extend(run.claims);
        }
        return Ok(SuiteRun {
            suite: "all".into(),
            reports,
            claims,
        });
    }

    if let Some(checks) = formula_checks(name, overrides)? {
        let mut reports = Vec::new();
        for (form, spec, cap, version) in checks {
            reports.push(check_formula(form, &spec, cap, version)?);
        }
        return Ok(SuiteRun {
            suite: name.into(),
            reports,
            claims: Vec::new(),
        });
    }

    match name {
        "tetris" => Ok(SuiteRun {
            suite: name.into(),
            reports: check_tetris(5, overrides.cap.unwrap_or(5))?,
            claims: Vec::new(),
        }),
        "exact-pet" => {
            let games = match (overrides.n, overrides.k) {
                (Some(n), Some(k)) => vec![(GameSpec::exact(n, k)?, overrides.cap.unwrap_or(6))],
                _ => vec![
                    (GameSpec::exact(3, 2)?, overrides.cap.unwrap_or(8)),
                    (GameSpec::exact(5, 3)?, overrides.cap.unwrap_or(4)),
                ],
            };
            let mut reports = Vec::new();
            for (spec, cap) in games {
                reports.push(check_pet(&spec, cap)?);
            }
            Ok(SuiteRun {
                suite: name.into(),
                reports,
                claims: Vec::new(),
            })
        }
        "regression" => Ok(SuiteRun {
            suite: name.into(),
            reports: Vec::new(),
            claims: regression_suite()?,
        }),
        _ => Err(Error::Domain(format!(
            "unknown suite '{name}'; known suites: {} or all",
            SUITE_NAMES.join(", ")
        ))),
    }
}
