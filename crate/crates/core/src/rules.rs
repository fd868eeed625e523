//! Positions and legal-move generation for the six game families.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::{Error, Result};

/// The six impartial families the crate understands.
///
/// * `Classic`: take any positive number of tokens from one pile.
/// * `Moore`: reduce between 1 and k piles, each by an arbitrary amount.
/// * `Exact`: reduce exactly k piles, each by an arbitrary amount.
/// * `SlowMoore` / `SlowExact`: same pile selection, but every chosen
///   pile loses exactly one token.
/// * `Exco`: an extra always-reducible pile alongside n ordinary piles;
///   one move may reduce the extra pile together with at most n-1 others,
///   as long as at least one token is removed in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Classic,
    Moore,
    Exact,
    SlowMoore,
    SlowExact,
    Exco,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Classic => "classic",
            Family::Moore => "moore",
            Family::Exact => "exact",
            Family::SlowMoore => "slow-moore",
            Family::SlowExact => "slow-exact",
            Family::Exco => "exco",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "classic" => Some(Family::Classic),
            "moore" => Some(Family::Moore),
            "exact" => Some(Family::Exact),
            "slow-moore" => Some(Family::SlowMoore),
            "slow-exact" => Some(Family::SlowExact),
            "exco" => Some(Family::Exco),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Play convention. Terminal positions get value 0 under `Normal`
/// and 1 under `Misere`; the recursion is the same mex otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Version {
    Normal,
    Misere,
}

impl Version {
    pub fn terminal_value(self) -> u32 {
        match self {
            Version::Normal => 0,
            Version::Misere => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Version::Normal => "normal",
            Version::Misere => "misere",
        }
    }
}

impl fmt::Display for Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A game family together with its pile count `n` and move-width bound `k`.
///
/// For `Classic`, k is fixed to 1; for `Exco`, n counts the ordinary piles
/// (the extra pile is on top of that) and k is fixed to n-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameSpec {
    family: Family,
    n: usize,
    k: usize,
}

impl GameSpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<GameSpec> {
        if n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        match family {
            Family::Classic => {
                if k != 1 {
                    return Err(Error::InvalidSpec("classic Nim has k = 1".into()));
                }
            }
            Family::Exco => {
                if n < 2 {
                    return Err(Error::InvalidSpec("exco needs n >= 2".into()));
                }
                if k != n - 1 {
                    return Err(Error::InvalidSpec("exco has k = n - 1".into()));
                }
            }
            _ => {
                if k < 1 || k > n {
                    return Err(Error::InvalidSpec(format!(
                        "need 1 <= k <= n, got n={n} k={k}"
                    )));
                }
            }
        }
        Ok(GameSpec { family, n, k })
    }

    pub fn classic(n: usize) -> Result<GameSpec> {
        GameSpec::new(Family::Classic, n, 1)
    }

    pub fn moore(n: usize, k: usize) -> Result<GameSpec> {
        GameSpec::new(Family::Moore, n, k)
    }

    pub fn exact(n: usize, k: usize) -> Result<GameSpec> {
        GameSpec::new(Family::Exact, n, k)
    }

    pub fn slow_moore(n: usize, k: usize) -> Result<GameSpec> {
        GameSpec::new(Family::SlowMoore, n, k)
    }

    pub fn slow_exact(n: usize, k: usize) -> Result<GameSpec> {
        GameSpec::new(Family::SlowExact, n, k)
    }

    pub fn exco(n: usize) -> Result<GameSpec> {
        if n < 2 {
            return Err(Error::InvalidSpec("exco needs n >= 2".into()));
        }
        GameSpec::new(Family::Exco, n, n - 1)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn uses_distinguished(&self) -> bool {
        self.family == Family::Exco
    }

    /// Shape check: right pile count, extra pile present exactly for exco.
    pub fn check_position(&self, pos: &Position) -> Result<()> {
        if pos.piles().len() != self.n {
            return Err(Error::Shape(format!(
                "{self} expects {} piles, position has {}",
                self.n,
                pos.piles().len()
            )));
        }
        match (self.uses_distinguished(), pos.distinguished().is_some()) {
            (true, false) => Err(Error::Shape(format!(
                "{self} expects a distinguished pile, position has none"
            ))),
            (false, true) => Err(Error::Shape(format!(
                "{self} takes no distinguished pile, position has one"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Classic | Family::Exco => write!(f, "{} n={}", self.family, self.n),
            _ => write!(f, "{} n={} k={}", self.family, self.n, self.k),
        }
    }
}

/// A multiset of pile sizes, kept sorted non-decreasing. Positions of
/// Exco games additionally carry the distinguished pile, which is not
/// part of the sorted multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Position {
    piles: Vec<u32>,
    distinguished: Option<u32>,
}

impl Position {
    /// Canonicalizes: sorts the pile multiset non-decreasing.
    pub fn new(mut piles: Vec<u32>) -> Position {
        piles.sort_unstable();
        Position {
            piles,
            distinguished: None,
        }
    }

    /// An Exco position; `extra` is the distinguished pile and passes
    /// through canonicalization untouched.
    pub fn exco(extra: u32, mut piles: Vec<u32>) -> Position {
        piles.sort_unstable();
        Position {
            piles,
            distinguished: Some(extra),
        }
    }

    pub fn piles(&self) -> &[u32] {
        &self.piles
    }

    pub fn distinguished(&self) -> Option<u32> {
        self.distinguished
    }

    /// Number of strictly positive ordinary piles (the distinguished
    /// pile does not count).
    pub fn count_nonempty(&self) -> usize {
        self.piles.iter().filter(|&&x| x > 0).count()
    }

    /// Token total, distinguished pile included.
    pub fn total_tokens(&self) -> u64 {
        self.piles.iter().map(|&x| x as u64).sum::<u64>()
            + self.distinguished.unwrap_or(0) as u64
    }
}

impl Ord for Position {
    fn cmp(&self, other: &Self) -> Ordering {
        // Distinguished pile first, then the sorted piles; this is the
        // lexicographic order used for table dumps and tie-breaks.
        (self.distinguished, &self.piles).cmp(&(other.distinguished, &other.piles))
    }
}

impl PartialOrd for Position {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if let Some(x0) = self.distinguished {
            write!(f, "{x0}")?;
            first = false;
        }
        for &x in &self.piles {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// True iff `pos` has no legal move under `spec`.
pub fn is_terminal(spec: &GameSpec, pos: &Position) -> Result<bool> {
    spec.check_position(pos)?;
    Ok(match spec.family() {
        Family::Classic | Family::Moore | Family::SlowMoore => pos.count_nonempty() == 0,
        Family::Exact | Family::SlowExact => pos.count_nonempty() < spec.k(),
        Family::Exco => pos.distinguished() == Some(0) && pos.count_nonempty() == 0,
    })
}

/// All canonical successor positions, deduplicated, in lexicographic order.
pub fn moves(spec: &GameSpec, pos: &Position) -> Result<Vec<Position>> {
    spec.check_position(pos)?;
    let piles = pos.piles();
    let nonempty: Vec<usize> = piles
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, _)| i)
        .collect();
    let mut out: BTreeSet<Position> = BTreeSet::new();

    match spec.family() {
        Family::Classic => {
            for &i in &nonempty {
                emit_removals(piles, &[i], None, &mut out);
            }
        }
        Family::Moore => {
            for size in 1..=spec.k().min(nonempty.len()) {
                for combo in nonempty.iter().copied().combinations(size) {
                    emit_removals(piles, &combo, None, &mut out);
                }
            }
        }
        Family::Exact => {
            if nonempty.len() >= spec.k() {
                for combo in nonempty.iter().copied().combinations(spec.k()) {
                    emit_removals(piles, &combo, None, &mut out);
                }
            }
        }
        Family::SlowMoore => {
            for size in 1..=spec.k().min(nonempty.len()) {
                for combo in nonempty.iter().copied().combinations(size) {
                    emit_slow_removal(piles, &combo, &mut out);
                }
            }
        }
        Family::SlowExact => {
            if nonempty.len() >= spec.k() {
                for combo in nonempty.iter().copied().combinations(spec.k()) {
                    emit_slow_removal(piles, &combo, &mut out);
                }
            }
        }
        Family::Exco => {
            let x0 = pos.distinguished().expect("shape checked");
            let width = spec.n() - 1;
            for d0 in 0..=x0 {
                let left = x0 - d0;
                if d0 >= 1 {
                    // touch only the distinguished pile
                    out.insert(Position::exco(left, piles.to_vec()));
                }
                for size in 1..=width.min(nonempty.len()) {
                    for combo in nonempty.iter().copied().combinations(size) {
                        emit_removals(piles, &combo, Some(left), &mut out);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Every way of removing at least one token from each chosen pile.
fn emit_removals(piles: &[u32], chosen: &[usize], extra: Option<u32>, out: &mut BTreeSet<Position>) {
    fn rec(
        piles: &[u32],
        chosen: &[usize],
        depth: usize,
        work: &mut Vec<u32>,
        extra: Option<u32>,
        out: &mut BTreeSet<Position>,
    ) {
        if depth == chosen.len() {
            out.insert(match extra {
                Some(x0) => Position::exco(x0, work.clone()),
                None => Position::new(work.clone()),
            });
            return;
        }
        let pile = chosen[depth];
        for take in 1..=piles[pile] {
            work[pile] = piles[pile] - take;
            rec(piles, chosen, depth + 1, work, extra, out);
        }
        work[pile] = piles[pile];
    }
    let mut work = piles.to_vec();
    rec(piles, chosen, 0, &mut work, extra, out);
}

/// Remove exactly one token from each chosen pile.
fn emit_slow_removal(piles: &[u32], chosen: &[usize], out: &mut BTreeSet<Position>) {
    let mut work = piles.to_vec();
    for &i in chosen {
        work[i] -= 1;
    }
    out.insert(Position::new(work));
}
