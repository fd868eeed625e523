//! Exact Sprague-Grundy computation over downward-closed boxes.
//!
//! Every move weakly decreases every pile, so the set of positions with
//! all piles (and the distinguished pile, if any) bounded by a cap is
//! closed under moves. A table over such a box is therefore exact: the
//! values it holds equal the values in the unbounded game.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::ranking;
use crate::rules::{self, GameSpec, Position, Version};
use crate::{Error, Result};

/// Environment variable that overrides the memory budget (in bytes)
/// used when sizing tables and point-query memos. Default is 1 GiB.
pub const MEMORY_BUDGET_ENV: &str = "KNIM_MEMORY_BUDGET";

const DEFAULT_MEMORY_BUDGET: u64 = 1 << 30;

fn memory_budget() -> u64 {
    std::env::var(MEMORY_BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MEMORY_BUDGET)
}

/// Smallest non-negative integer missing from `values`.
pub fn mex(values: impl IntoIterator<Item = u32>) -> u32 {
    let vals: Vec<u32> = values.into_iter().collect();
    let mut seen = vec![false; vals.len() + 1];
    for v in vals {
        if (v as usize) < seen.len() {
            seen[v as usize] = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap() as u32
}

/// The pair (normal value, misere value) of one position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PositionClass {
    pub g: u32,
    pub g_minus: u32,
}

/// Which of the two swap classes a position belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SwapKind {
    /// Normal value 0, misere value 1.
    ZeroOne,
    /// Normal value 1, misere value 0.
    OneZero,
}

impl PositionClass {
    pub fn swap_kind(&self) -> Option<SwapKind> {
        match (self.g, self.g_minus) {
            (0, 1) => Some(SwapKind::ZeroOne),
            (1, 0) => Some(SwapKind::OneZero),
            _ => None,
        }
    }

    pub fn is_swap(&self) -> bool {
        self.swap_kind().is_some()
    }

    /// Equal normal and misere values.
    pub fn is_tame_value(&self) -> bool {
        self.g == self.g_minus
    }
}

impl fmt::Display for PositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.g, self.g_minus)
    }
}

impl fmt::Display for SwapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwapKind::ZeroOne => f.write_str("(0,1)"),
            SwapKind::OneZero => f.write_str("(1,0)"),
        }
    }
}

/// Dense table of SG values for every canonical position inside a box.
#[derive(Debug, Clone)]
pub struct SgTable {
    spec: GameSpec,
    version: Version,
    cap: u32,
    /// Canonical pile tuples per distinguished value (1 slice if none).
    inner: usize,
    values: Vec<u32>,
}

impl SgTable {
    /// Builds the complete table for all positions with every pile
    /// (and the distinguished pile, if present) at most `cap`.
    pub fn build(spec: &GameSpec, cap: u32, version: Version) -> Result<SgTable> {
        let inner_u = ranking::box_size(spec.n(), cap);
        let slots: u128 = if spec.uses_distinguished() {
            inner_u * (cap as u128 + 1)
        } else {
            inner_u
        };
        let budget = memory_budget();
        let needed = slots.saturating_mul(4);
        if needed > budget as u128 {
            return Err(Error::Resource {
                positions: slots,
                needed,
                budget,
            });
        }
        let len = slots as usize;
        let inner = inner_u as usize;
        let mut table = SgTable {
            spec: *spec,
            version,
            cap,
            inner,
            values: vec![0; len],
        };

        let positions: Vec<Position> = (0..len).map(|i| table.position_at(i)).collect();

        // Process layers of equal token totals in increasing order; all
        // successors live in strictly smaller layers, so positions within
        // one layer are independent and can be evaluated in parallel.
        let max_sum = spec.n() * cap as usize
            + if spec.uses_distinguished() { cap as usize } else { 0 };
        let mut layers: Vec<Vec<usize>> = vec![Vec::new(); max_sum + 1];
        for (idx, p) in positions.iter().enumerate() {
            layers[p.total_tokens() as usize].push(idx);
        }

        for layer in &layers {
            let computed: Vec<(usize, u32)> = layer
                .par_iter()
                .map(|&idx| {
                    let pos = &positions[idx];
                    let succ = rules::moves(spec, pos).expect("box positions match spec");
                    let value = if succ.is_empty() {
                        version.terminal_value()
                    } else {
                        mex(succ.iter().map(|q| table.values[table.index_of(q)]))
                    };
                    (idx, value)
                })
                .collect();
            for (idx, v) in computed {
                table.values[idx] = v;
            }
        }
        Ok(table)
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn version(&self) -> Version {
        self.version
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn index_of(&self, pos: &Position) -> usize {
        let base = ranking::rank(pos.piles(), self.cap);
        match pos.distinguished() {
            Some(x0) => x0 as usize * self.inner + base,
            None => base,
        }
    }

    /// Canonical position for a table index; ordering is lexicographic
    /// (distinguished pile first when present).
    pub fn position_at(&self, idx: usize) -> Position {
        if self.spec.uses_distinguished() {
            let x0 = (idx / self.inner) as u32;
            Position::exco(x0, ranking::unrank(self.spec.n(), self.cap, idx % self.inner))
        } else {
            Position::new(ranking::unrank(self.spec.n(), self.cap, idx))
        }
    }

    /// Value lookup; `None` when the position lies outside the box or
    /// has the wrong shape.
    pub fn get(&self, pos: &Position) -> Option<u32> {
        self.spec.check_position(pos).ok()?;
        if pos.piles().iter().any(|&x| x > self.cap) {
            return None;
        }
        if let Some(x0) = pos.distinguished() {
            if x0 > self.cap {
                return None;
            }
        }
        Some(self.values[self.index_of(pos)])
    }

    /// All (position, value) pairs in lexicographic position order.
    pub fn iter(&self) -> impl Iterator<Item = (Position, u32)> + '_ {
        (0..self.len()).map(|i| (self.position_at(i), self.values[i]))
    }
}

/// Guard for point queries: the memo can grow to the downward closure
/// of the query position, bounded above by the product of (pile + 1).
fn check_closure_budget(pos: &Position) -> Result<()> {
    let mut states: u128 = 1;
    for &x in pos.piles() {
        states = states.saturating_mul(x as u128 + 1);
    }
    if let Some(x0) = pos.distinguished() {
        states = states.saturating_mul(x0 as u128 + 1);
    }
    let budget = memory_budget();
    // Memo entries cost roughly a position plus hashing overhead.
    let needed = states.saturating_mul(64);
    if needed > budget as u128 {
        return Err(Error::Resource {
            positions: states,
            needed,
            budget,
        });
    }
    Ok(())
}

fn sg_rec(
    spec: &GameSpec,
    pos: &Position,
    version: Version,
    memo: &mut HashMap<Position, u32>,
) -> u32 {
    if let Some(&v) = memo.get(pos) {
        return v;
    }
    let succ = rules::moves(spec, pos).expect("successors keep the spec shape");
    let value = if succ.is_empty() {
        version.terminal_value()
    } else {
        let vals: Vec<u32> = succ
            .iter()
            .map(|q| sg_rec(spec, q, version, memo))
            .collect();
        mex(vals)
    };
    memo.insert(pos.clone(), value);
    value
}

/// SG value of a single position, memoized over its downward closure
/// rather than a full box. Each call owns its memo, so concurrent use
/// needs no synchronization.
pub fn sg_value(spec: &GameSpec, pos: &Position, version: Version) -> Result<u32> {
    spec.check_position(pos)?;
    check_closure_budget(pos)?;
    let mut memo = HashMap::new();
    Ok(sg_rec(spec, pos, version, &mut memo))
}

/// The (normal, misere) value pair of one position.
pub fn classify_position(spec: &GameSpec, pos: &Position) -> Result<PositionClass> {
    Ok(PositionClass {
        g: sg_value(spec, pos, Version::Normal)?,
        g_minus: sg_value(spec, pos, Version::Misere)?,
    })
}

/// A successor with SG value 0 under `version`, if one exists;
/// ties break to the lexicographically smallest canonical successor.
pub fn best_move(spec: &GameSpec, pos: &Position, version: Version) -> Result<Option<Position>> {
    spec.check_position(pos)?;
    check_closure_budget(pos)?;
    let mut memo = HashMap::new();
    for succ in rules::moves(spec, pos)? {
        if sg_rec(spec, &succ, version, &mut memo) == 0 {
            return Ok(Some(succ));
        }
    }
    Ok(None)
}

/// A position violating some game-level property, with its class.
#[derive(Debug, Clone)]
pub struct Witness {
    pub pos: Position,
    pub class: PositionClass,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} class {}: {}", self.pos, self.class, self.detail)
    }
}

/// Game-level classification over a box: tame, pet, domestic, miserable.
/// Every false flag carries the lexicographically first witness.
#[derive(Debug, Clone)]
pub struct GameClassReport {
    pub spec: GameSpec,
    pub cap: u32,
    pub positions: u64,
    pub tame: bool,
    pub pet: bool,
    pub domestic: bool,
    pub miserable: bool,
    pub tame_witness: Option<Witness>,
    pub pet_witness: Option<Witness>,
    pub domestic_witness: Option<Witness>,
    pub miserable_witness: Option<Witness>,
}

/// Evaluates the four game-level properties over the box:
///
/// * tame: only (0,1), (1,0) and (t,t) classes occur;
/// * pet: tame with (t,t) occurring only for t >= 2;
/// * domestic: no (0,j) or (j,0) class with j >= 2;
/// * miserable: every (1,0)-position can move to a (0,1)-position,
///   every non-terminal (0,1)-position can move to a (1,0)-position, and
///   every non-swap position can move either to both swap classes or to
///   neither.
pub fn classify_game(spec: &GameSpec, cap: u32) -> Result<GameClassReport> {
    let normal = SgTable::build(spec, cap, Version::Normal)?;
    let misere = SgTable::build(spec, cap, Version::Misere)?;

    let mut report = GameClassReport {
        spec: *spec,
        cap,
        positions: normal.len() as u64,
        tame: true,
        pet: true,
        domestic: true,
        miserable: true,
        tame_witness: None,
        pet_witness: None,
        domestic_witness: None,
        miserable_witness: None,
    };

    for idx in 0..normal.len() {
        let pos = normal.position_at(idx);
        let class = PositionClass {
            g: normal.values[idx],
            g_minus: misere.values[idx],
        };

        if report.tame && !class.is_swap() && !class.is_tame_value() {
            report.tame = false;
            report.tame_witness = Some(Witness {
                pos: pos.clone(),
                class,
                detail: "neither swap nor equal-valued".into(),
            });
        }
        if report.pet
            && !class.is_swap()
            && !(class.is_tame_value() && class.g >= 2)
        {
            report.pet = false;
            report.pet_witness = Some(Witness {
                pos: pos.clone(),
                class,
                detail: "not a swap or (t,t) with t >= 2".into(),
            });
        }
        if report.domestic
            && ((class.g == 0 && class.g_minus >= 2) || (class.g >= 2 && class.g_minus == 0))
        {
            report.domestic = false;
            report.domestic_witness = Some(Witness {
                pos: pos.clone(),
                class,
                detail: "(0,j) or (j,0) with j >= 2".into(),
            });
        }

        if report.miserable {
            let succ = rules::moves(spec, &pos)?;
            let mut to_zero_one = false;
            let mut to_one_zero = false;
            for q in &succ {
                let qc = PositionClass {
                    g: normal.get(q).expect("successor stays in the box"),
                    g_minus: misere.get(q).expect("successor stays in the box"),
                };
                match qc.swap_kind() {
                    Some(SwapKind::ZeroOne) => to_zero_one = true,
                    Some(SwapKind::OneZero) => to_one_zero = true,
                    None => {}
                }
            }
            let violation = match class.swap_kind() {
                Some(SwapKind::OneZero) if !to_zero_one => {
                    Some("(1,0)-position with no move to a (0,1)-position")
                }
                Some(SwapKind::ZeroOne) if !succ.is_empty() && !to_one_zero => {
                    Some("non-terminal (0,1)-position with no move to a (1,0)-position")
                }
                None if to_zero_one != to_one_zero => {
                    Some("non-swap position moving to exactly one swap class")
                }
                _ => None,
            };
            if let Some(detail) = violation {
                report.miserable = false;
                report.miserable_witness = Some(Witness {
                    pos: pos.clone(),
                    class,
                    detail: detail.into(),
                });
            }
        }
    }

    // Miserable games and pet games are tame; a report saying otherwise
    // means the solver itself is broken.
    if (report.pet || report.miserable) && !report.tame {
        return Err(Error::Internal(format!(
            "{spec} cap {cap}: pet={} miserable={} but tame=false",
            report.pet, report.miserable
        )));
    }
    Ok(report)
}

/// All box positions whose class satisfies `pred`, in lexicographic order.
pub fn find_positions_with(
    spec: &GameSpec,
    cap: u32,
    pred: impl Fn(PositionClass) -> bool,
) -> Result<Vec<Position>> {
    let normal = SgTable::build(spec, cap, Version::Normal)?;
    let misere = SgTable::build(spec, cap, Version::Misere)?;
    let mut out = Vec::new();
    for idx in 0..normal.len() {
        let class = PositionClass {
            g: normal.values[idx],
            g_minus: misere.values[idx],
        };
        if pred(class) {
            out.push(normal.position_at(idx));
        }
    }
    Ok(out)
}
