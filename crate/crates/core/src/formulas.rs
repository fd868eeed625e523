//! Closed forms and position characterizations, one function per result.
//!
//! Everything here is a pure function of the position (and game
//! parameters). None of it consults the engine; the `verify` module is
//! what checks the two against each other.

use std::fmt;

use crate::engine::{PositionClass, SwapKind};
use crate::rules::{Family, GameSpec, Position, Version};
use crate::{Error, Result};

/// Coordinatewise parity of a sorted position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(x: u32) -> Parity {
        if x % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn letter(self) -> char {
        match self {
            Parity::Even => 'e',
            Parity::Odd => 'o',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector(Vec<Parity>);

impl ParityVector {
    pub fn entries(&self) -> &[Parity] {
        &self.0
    }

    /// Compact form like "ooe", convenient for pattern tables.
    pub fn compact(&self) -> String {
        self.0.iter().map(|p| p.letter()).collect()
    }
}

impl fmt::Display for ParityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.letter().to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Per-coordinate parity of the sorted pile vector.
pub fn parity_vector(pos: &Position) -> ParityVector {
    ParityVector(pos.piles().iter().map(|&x| Parity::of(x)).collect())
}

/// Bitwise XOR of all pile sizes: the SG value of classic Nim.
pub fn nim_sum(pos: &Position) -> u32 {
    pos.piles().iter().fold(0, |acc, &x| acc ^ x)
}

/// Per-bit sum of binary digits modulo k+1, read back as a base-(k+1)
/// number. Zero exactly on the P-positions of Moore's game, and 1
/// exactly on its 1-positions; no meaning is attached to larger values.
pub fn moore_function(pos: &Position, k: u32) -> u64 {
    let modulus = k as u64 + 1;
    let mut result: u64 = 0;
    let mut weight: u64 = 1;
    for bit in 0..32 {
        let digit = pos
            .piles()
            .iter()
            .map(|&x| ((x >> bit) & 1) as u64)
            .sum::<u64>()
            % modulus;
        if digit != 0 {
            result = result
                .checked_add(
                    digit
                        .checked_mul(weight)
                        .expect("Moore function overflows u64"),
                )
                .expect("Moore function overflows u64");
        }
        if bit < 31 {
            weight = weight.saturating_mul(modulus);
        }
    }
    result
}

/// Intermediates of the quadratic-threshold SG formula shared by
/// Exco-Nim / Moore's game with n = k+1 and by exact k-Nim with n = 2k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SgFormulaParts {
    /// Token total (tetris count in the exact n = 2k case).
    pub total: u64,
    /// Smallest ordinary pile.
    pub min_pile: u64,
    /// Total left after flattening every pile to the minimum
    /// (tetris count of the flattened position in the exact case).
    pub excess: u64,
    /// (excess^2 + excess + 2) / 2; always an integer.
    pub threshold: u64,
}

impl SgFormulaParts {
    fn from_total_excess(total: u64, min_pile: u64, excess: u64) -> SgFormulaParts {
        SgFormulaParts {
            total,
            min_pile,
            excess,
            threshold: (excess * excess + excess + 2) / 2,
        }
    }

    /// Below the threshold the value is the total itself; past it the
    /// value cycles with period excess+1.
    pub fn value(&self) -> u64 {
        if self.min_pile < self.threshold {
            self.total
        } else {
            (self.threshold - 1) + (self.min_pile - self.threshold) % (self.excess + 1)
        }
    }
}

fn exco_shaped(pos: &Position, spec: &GameSpec) -> Result<(u64, Vec<u64>)> {
    spec.check_position(pos)?;
    let ok = match spec.family() {
        Family::Exco => spec.n() >= 3,
        Family::Moore => spec.n() == spec.k() + 1 && spec.n() >= 3,
        _ => false,
    };
    if !ok {
        return Err(Error::Domain(format!(
            "the exco SG formula applies to exco with n >= 3 or moore with n = k+1 >= 3, not {spec}"
        )));
    }
    let piles: Vec<u64> = pos.piles().iter().map(|&x| x as u64).collect();
    Ok((pos.distinguished().unwrap_or(0) as u64, piles))
}

/// Formula intermediates for Exco-Nim (and Moore's game with n = k+1,
/// treated as Exco-Nim with the distinguished pile empty).
pub fn exco_sg_parts(pos: &Position, spec: &GameSpec) -> Result<SgFormulaParts> {
    let (extra, piles) = exco_shaped(pos, spec)?;
    let total = extra + piles.iter().sum::<u64>();
    let min_pile = *piles.iter().min().expect("n >= 3");
    let excess = total - spec.n() as u64 * min_pile;
    Ok(SgFormulaParts::from_total_excess(total, min_pile, excess))
}

/// SG value of Exco-Nim with n >= 3 ordinary piles, or of Moore's game
/// with n = k+1 >= 3.
pub fn exco_sg_formula(pos: &Position, spec: &GameSpec) -> Result<u64> {
    Ok(exco_sg_parts(pos, spec)?.value())
}

/// Largest number of rounds that each place one token on exactly k
/// distinct piles without pile j ever exceeding its budget x_j.
///
/// Uses the feasibility criterion: m rounds fit iff
/// `sum_j min(x_j, m) >= m * k`. The left side grows by at most n per
/// step and the right by k, so feasibility is an interval starting at 0;
/// the independent search in `verify::tetris_bruteforce` guards this
/// shortcut.
pub fn tetris(pos: &Position, k: usize) -> Result<u64> {
    let n = pos.piles().len();
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "tetris needs 1 <= k <= n, got k={k} with {n} piles"
        )));
    }
    let total: u64 = pos.piles().iter().map(|&x| x as u64).sum();
    let mut best = 0;
    for m in 1..=total / k as u64 {
        let filled: u64 = pos.piles().iter().map(|&x| (x as u64).min(m)).sum();
        if filled >= m * k as u64 {
            best = m;
        } else {
            break;
        }
    }
    Ok(best)
}

/// SG value of exact k-Nim in the two tractable cases: the tetris count
/// itself when 2k > n, and the quadratic-threshold formula driven by
/// tetris counts when n = 2k >= 4.
pub fn exact_sg_formula(pos: &Position, spec: &GameSpec) -> Result<u64> {
    spec.check_position(pos)?;
    if spec.family() != Family::Exact {
        return Err(Error::Domain(format!(
            "the exact SG formula applies to exact k-Nim, not {spec}"
        )));
    }
    let (n, k) = (spec.n(), spec.k());
    if 2 * k > n {
        return tetris(pos, k);
    }
    if n == 2 * k && n >= 4 {
        let total = tetris(pos, k)?;
        let min_pile = *pos.piles().iter().min().expect("n >= 4") as u64;
        let flattened = Position::new(
            pos.piles()
                .iter()
                .map(|&x| x - min_pile as u32)
                .collect(),
        );
        let excess = tetris(&flattened, k)?;
        return Ok(SgFormulaParts::from_total_excess(total, min_pile, excess).value());
    }
    Err(Error::Domain(format!(
        "no closed form for exact k-Nim with n > 2k (or n = 2k < 4): {spec}"
    )))
}

/// SG value in the parity-trivial slow cases: k = 1 (value follows the
/// token total) and slow-exact k = n (value follows the smallest pile).
pub fn trivial_case_sg(pos: &Position, spec: &GameSpec, version: Version) -> Result<u32> {
    spec.check_position(pos)?;
    let counter: u64 = match (spec.family(), spec.k()) {
        (Family::SlowMoore | Family::SlowExact, 1) => pos.total_tokens(),
        (Family::SlowExact, k) if k == spec.n() => pos.piles()[0] as u64,
        _ => {
            return Err(Error::Domain(format!(
                "parity rule applies to slow games with k = 1 or slow-exact with k = n, not {spec}"
            )))
        }
    };
    let g = (counter % 2) as u32;
    Ok(match version {
        Version::Normal => g,
        Version::Misere => 1 - g,
    })
}

/// SG values of slow-Moore with (n,k) = (2,2) or (3,2): a pure function
/// of the parity vector.
pub fn slow_moore_sg_small(pos: &Position, spec: &GameSpec) -> Result<u32> {
    spec.check_position(pos)?;
    let nk = (spec.n(), spec.k());
    if spec.family() != Family::SlowMoore || (nk != (2, 2) && nk != (3, 2)) {
        return Err(Error::Domain(format!(
            "the small-case table covers slow-moore (2,2) and (3,2), not {spec}"
        )));
    }
    let p = parity_vector(pos).compact();
    Ok(match p.as_str() {
        "ee" | "eee" | "ooo" => 0,
        "eo" | "eeo" | "ooe" => 1,
        "oo" | "eoo" | "oee" => 2,
        "oe" | "eoe" | "oeo" => 3,
        _ => unreachable!("all parity vectors of length 2 and 3 are covered"),
    })
}

const P_PATTERNS_5_2: [&str; 4] = ["eeeee", "eeooo", "ooeeo", "ooooe"];
const P_PATTERNS_6_3: [&str; 4] = ["eeeeee", "eeoooo", "ooeeoo", "ooooee"];

/// P-position indicator for slow-Moore in the characterized cases:
/// n = k, n = k+1, n = k+2 (k >= 2), (n,k) = (5,2) and (6,3).
pub fn slow_moore_is_p(pos: &Position, spec: &GameSpec) -> Result<bool> {
    spec.check_position(pos)?;
    if spec.family() != Family::SlowMoore {
        return Err(Error::Domain(format!(
            "the P-position characterization is for slow-moore, not {spec}"
        )));
    }
    let (n, k) = (spec.n(), spec.k());
    let p = parity_vector(pos).compact();
    let all_even = p.bytes().all(|b| b == b'e');
    let all_odd = p.bytes().all(|b| b == b'o');
    if n == k {
        return Ok(all_even);
    }
    if n == k + 1 {
        return Ok(all_even || all_odd);
    }
    // With k = 1 the value is the parity of the token total and the
    // remaining patterns below do not apply.
    if n == k + 2 && k >= 2 {
        let even_then_odd = p.as_bytes()[0] == b'e' && p.bytes().skip(1).all(|b| b == b'o');
        return Ok(all_even || even_then_odd);
    }
    if (n, k) == (5, 2) {
        return Ok(P_PATTERNS_5_2.contains(&p.as_str()));
    }
    if (n, k) == (6, 3) {
        return Ok(P_PATTERNS_6_3.contains(&p.as_str()));
    }
    Err(Error::Domain(format!(
        "no P-position characterization for {spec}"
    )))
}

/// Swap positions of slow-Moore with k in {n-1, n}. For k = n these are
/// the positions with a single non-empty pile (kind by its parity); for
/// k = n-1 the positions whose first n-1 piles are equal (kind by the
/// parity of the gap to the last pile).
pub fn slow_moore_misere_swap(pos: &Position, spec: &GameSpec) -> Result<Option<SwapKind>> {
    spec.check_position(pos)?;
    let (n, k) = (spec.n(), spec.k());
    if spec.family() != Family::SlowMoore || k + 1 < n {
        return Err(Error::Domain(format!(
            "the swap characterization needs slow-moore with k >= n-1, not {spec}"
        )));
    }
    let piles = pos.piles();
    let prefix = &piles[..n - 1];
    let last = piles[n - 1];
    let matched = if k == n {
        prefix.iter().all(|&x| x == 0).then_some(last)
    } else {
        let base = piles[0];
        prefix.iter().all(|&x| x == base).then(|| last - base)
    };
    Ok(matched.map(|gap| {
        if gap % 2 == 0 {
            SwapKind::ZeroOne
        } else {
            SwapKind::OneZero
        }
    }))
}

/// Exception families for the 3-pile slow exact game. A position falls
/// in at most one of them per version; the tag shifts its SG value away
/// from the default given by the parities of the two smallest piles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetTag {
    A,
    B,
    C0,
    C1,
    D0,
    D1,
    E,
    F,
}

fn three(pos: &Position) -> Result<(u64, u64, u64)> {
    if pos.piles().len() != 3 || pos.distinguished().is_some() {
        return Err(Error::Domain(format!(
            "the 3-pile characterizations need exactly three ordinary piles, got {pos}"
        )));
    }
    let p = pos.piles();
    Ok((p[0] as u64, p[1] as u64, p[2] as u64))
}

/// Normal-play exception tag for slow-exact (3,2). The tuple is parsed
/// against the defining pattern of its parity class; sortedness already
/// enforces the order constraints, leaving the index bound i < a and a
/// parity condition on a+i.
fn tag32_normal(x1: u64, x2: u64, x3: u64) -> Option<SetTag> {
    match (x1 % 2, x2 % 2) {
        (0, 0) => {
            // (2a, 2b, 2(b+i)+1)
            if x3 % 2 == 1 {
                let (a, i) = (x1 / 2, (x3 - x2 - 1) / 2);
                (i < a && (a + i) % 2 == 1).then_some(SetTag::B)
            } else {
                None
            }
        }
        (0, 1) => {
            // (2a, 2b-1, 2(b+i))
            if x3 % 2 == 0 {
                let (a, i) = (x1 / 2, (x3 - x2 - 1) / 2);
                (i < a && (a + i) % 2 == 1).then_some(SetTag::A)
            } else {
                None
            }
        }
        (1, 1) => {
            // (2a-1, 2b-1, 2(b+i)-1)
            if x3 % 2 == 1 {
                let (a, i) = ((x1 + 1) / 2, (x3 - x2) / 2);
                (i < a).then(|| if (a + i) % 2 == 0 { SetTag::C0 } else { SetTag::C1 })
            } else {
                None
            }
        }
        (1, 0) => {
            // (2a-1, 2b, 2(b+i))
            if x3 % 2 == 0 {
                let (a, i) = ((x1 + 1) / 2, (x3 - x2) / 2);
                (i < a).then(|| if (a + i) % 2 == 1 { SetTag::D0 } else { SetTag::D1 })
            } else {
                None
            }
        }
        _ => unreachable!(),
    }
}

/// Shared membership test for the misere A/B families: the gap to the
/// third pile walks in steps of 4, with the number of steps bounded by
/// a quarter of the smallest pile.
fn misere_ab(x1: u64, gap: u64) -> bool {
    debug_assert!(x1 % 2 == 0 && gap % 2 == 1);
    if x1 % 4 == 0 {
        gap % 4 == 1 && (gap - 1) / 4 < x1 / 4
    } else {
        gap % 4 == 3 && (gap - 3) / 4 < (x1 - 2) / 4
    }
}

/// Misere-play exception tag for slow-exact (3,2).
///
/// Rows with an empty smallest pile always flip (the dead pile forces
/// the play length to the middle pile), which the A/B families absorb;
/// rows with smallest pile 1 and the two larger piles equal form the
/// E/F families; the C/D families mirror the normal-play ones with a
/// tighter index bound i < a-1 and opposite parity selection.
fn tag32_misere(x1: u64, x2: u64, x3: u64) -> Option<SetTag> {
    match (x1 % 2, x2 % 2) {
        (0, 0) => {
            if x1 == 0 {
                return Some(SetTag::B);
            }
            (x3 % 2 == 1 && misere_ab(x1, x3 - x2)).then_some(SetTag::B)
        }
        (0, 1) => {
            if x1 == 0 {
                return Some(SetTag::A);
            }
            (x3 % 2 == 0 && misere_ab(x1, x3 - x2)).then_some(SetTag::A)
        }
        (1, 1) => {
            if x1 == 1 && x2 == x3 {
                return Some(SetTag::E);
            }
            if x3 % 2 == 1 {
                let (a, i) = ((x1 + 1) / 2, (x3 - x2) / 2);
                (i + 1 < a).then(|| if (a + i) % 2 == 1 { SetTag::C0 } else { SetTag::C1 })
            } else {
                None
            }
        }
        (1, 0) => {
            if x1 == 1 && x2 == x3 {
                return Some(SetTag::F);
            }
            if x3 % 2 == 0 {
                let (a, i) = ((x1 + 1) / 2, (x3 - x2) / 2);
                (i + 1 < a).then(|| if (a + i) % 2 == 0 { SetTag::D0 } else { SetTag::D1 })
            } else {
                None
            }
        }
        _ => unreachable!(),
    }
}

/// Exception tag of a 3-pile slow-exact position, if any.
pub fn slow_exact32_set_tag(pos: &Position, version: Version) -> Result<Option<SetTag>> {
    let (x1, x2, x3) = three(pos)?;
    Ok(match version {
        Version::Normal => tag32_normal(x1, x2, x3),
        Version::Misere => tag32_misere(x1, x2, x3),
    })
}

/// SG value of slow-exact (3,2), either version. The parities of the two
/// smallest piles give the default value (ee→0, eo→1, oo→2, oe→3); an
/// exception tag overrides it with 0 or 1.
pub fn slow_exact32_sg(pos: &Position, version: Version) -> Result<u32> {
    let (x1, x2, x3) = three(pos)?;
    let tag = match version {
        Version::Normal => tag32_normal(x1, x2, x3),
        Version::Misere => tag32_misere(x1, x2, x3),
    };
    Ok(match tag {
        Some(SetTag::A | SetTag::C0 | SetTag::D0 | SetTag::E) => 0,
        Some(SetTag::B | SetTag::C1 | SetTag::D1 | SetTag::F) => 1,
        None => match (x1 % 2, x2 % 2) {
            (0, 0) => 0,
            (0, 1) => 1,
            (1, 1) => 2,
            (1, 0) => 3,
            _ => unreachable!(),
        },
    })
}

/// Swap classification of 3-pile slow-exact positions:
/// a zero smallest pile is always a swap (kind by the middle parity);
/// smallest pile 1 swaps exactly when the larger piles are equal; for
/// a = x1 >= 2 the gap i = x3 - x2 must have parity opposite to a and
/// stay below a (a even) or a-2 (a odd), the kind alternating with i.
pub fn swap_class_32(pos: &Position) -> Result<Option<SwapKind>> {
    let (x1, x2, x3) = three(pos)?;
    if x1 == 0 {
        return Ok(Some(if x2 % 2 == 0 {
            SwapKind::ZeroOne
        } else {
            SwapKind::OneZero
        }));
    }
    if x1 == 1 {
        return Ok((x2 == x3).then_some(if x2 % 2 == 0 {
            SwapKind::ZeroOne
        } else {
            SwapKind::OneZero
        }));
    }
    let (a, b, i) = (x1, x2, x3 - x2);
    let in_range = if a % 2 == 0 { i < a } else { i + 2 < a };
    if i % 2 == a % 2 || !in_range {
        return Ok(None);
    }
    let alternator = if a % 2 == 0 { (a - i - 1) / 2 } else { (a + i + 1) / 2 };
    Ok(Some(if (alternator + b) % 2 == 1 {
        SwapKind::ZeroOne
    } else {
        SwapKind::OneZero
    }))
}

/// The non-swap non-tame positions of slow-exact (3,2): smallest pile
/// odd and bigger than 1, with x1 + x2 = x3 + 1. Class (0,3) when the
/// middle pile is even, (1,2) when odd; every other position is swap or
/// has equal values.
pub fn nontame_class_32(pos: &Position) -> Result<Option<PositionClass>> {
    let (x1, x2, x3) = three(pos)?;
    if x1 % 2 == 1 && x1 != 1 && x1 + x2 == x3 + 1 {
        Ok(Some(if x2 % 2 == 0 {
            PositionClass { g: 0, g_minus: 3 }
        } else {
            PositionClass { g: 1, g_minus: 2 }
        }))
    } else {
        Ok(None)
    }
}

/// Swap positions of Moore's game with 2 <= k < n: exactly the positions
/// with every pile at most 1, the kind decided by the count of non-empty
/// piles modulo k+1 (0 → swap (0,1), 1 → swap (1,0)).
pub fn swap_class_moore(pos: &Position, spec: &GameSpec) -> Result<Option<SwapKind>> {
    spec.check_position(pos)?;
    if spec.family() != Family::Moore || spec.k() < 2 || spec.k() >= spec.n() {
        return Err(Error::Domain(format!(
            "the Moore swap characterization needs 2 <= k < n, not {spec}"
        )));
    }
    if pos.piles().iter().any(|&x| x > 1) {
        return Ok(None);
    }
    Ok(match pos.count_nonempty() % (spec.k() + 1) {
        0 => Some(SwapKind::ZeroOne),
        1 => Some(SwapKind::OneZero),
        _ => None,
    })
}

/// Swap positions of exact k-Nim with n = 2k piles: (0,1) iff the k+1
/// smallest piles are equal and at most 1, (1,0) iff exactly one tetris
/// round fits. The two conditions never overlap; seeing both at once is
/// reported as an internal error.
pub fn swap_class_exact2k(pos: &Position, k: usize) -> Result<Option<SwapKind>> {
    if k == 0 || pos.piles().len() != 2 * k || pos.distinguished().is_some() {
        return Err(Error::Domain(format!(
            "the exact swap characterization needs exactly 2k ordinary piles, got {pos} with k={k}"
        )));
    }
    let piles = pos.piles();
    let zero_one = piles[k] <= 1 && piles[..=k].iter().all(|&x| x == piles[0]);
    let one_zero = tetris(pos, k)? == 1;
    match (zero_one, one_zero) {
        (true, true) => Err(Error::Internal(format!(
            "position {pos} matches both swap characterizations for k={k}"
        ))),
        (true, false) => Ok(Some(SwapKind::ZeroOne)),
        (false, true) => Ok(Some(SwapKind::OneZero)),
        (false, false) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::SgTable;
    use proptest::prelude::*;

    fn pos(piles: &[u32]) -> Position {
        Position::new(piles.to_vec())
    }

    #[test]
    fn parity_vectors() {
        assert_eq!(parity_vector(&pos(&[2, 4, 6])).compact(), "eee");
        assert_eq!(parity_vector(&pos(&[1, 2])).compact(), "oe");
        assert_eq!(parity_vector(&pos(&[0, 1, 1])).compact(), "eoo");
        assert_eq!(parity_vector(&pos(&[1, 2])).to_string(), "(o,e)");
    }

    #[test]
    fn nim_sums() {
        assert_eq!(nim_sum(&pos(&[1, 2, 3])), 0);
        assert_eq!(nim_sum(&pos(&[0, 0, 0])), 0);
        assert_eq!(nim_sum(&pos(&[5])), 5);
    }

    #[test]
    fn moore_function_values() {
        assert_eq!(moore_function(&pos(&[0, 0, 0]), 2), 0);
        // With k = 1 it collapses to the nim-sum.
        assert_eq!(moore_function(&pos(&[1, 2, 3]), 1), 0);
        assert_eq!(moore_function(&pos(&[1, 2, 3]), 2), 8);
    }

    #[test]
    fn exco_formula_spots() {
        let m32 = GameSpec::moore(3, 2).unwrap();
        assert_eq!(exco_sg_formula(&pos(&[0, 0, 0]), &m32).unwrap(), 0);
        let parts = exco_sg_parts(&pos(&[1, 2, 3]), &m32).unwrap();
        assert_eq!(
            (parts.total, parts.min_pile, parts.excess, parts.threshold),
            (6, 1, 3, 7)
        );
        assert_eq!(parts.value(), 6);
        assert_eq!(exco_sg_formula(&pos(&[2, 2, 2]), &m32).unwrap(), 0);
        // Wrong shapes are rejected.
        assert!(exco_sg_formula(&pos(&[1, 2]), &GameSpec::moore(2, 1).unwrap()).is_err());
        let e3 = GameSpec::exco(3).unwrap();
        assert!(exco_sg_formula(&Position::exco(2, vec![1, 1, 1]), &e3).is_ok());
    }

    #[test]
    fn tetris_values() {
        assert_eq!(tetris(&pos(&[1, 1, 2, 3]), 3).unwrap(), 2);
        assert_eq!(tetris(&pos(&[4, 9]), 1).unwrap(), 13);
        assert_eq!(tetris(&pos(&[1, 1, 1, 1]), 2).unwrap(), 2);
        assert_eq!(tetris(&pos(&[0, 0, 5]), 2).unwrap(), 0);
        assert!(tetris(&pos(&[1, 1]), 3).is_err());
    }

    #[test]
    fn exact_formula_spots() {
        let e32 = GameSpec::exact(3, 2).unwrap();
        assert_eq!(exact_sg_formula(&pos(&[1, 1, 1]), &e32).unwrap(), 1);
        assert_eq!(exact_sg_formula(&pos(&[0, 0, 5]), &e32).unwrap(), 0);
        let e42 = GameSpec::exact(4, 2).unwrap();
        assert_eq!(exact_sg_formula(&pos(&[1, 1, 1, 1]), &e42).unwrap(), 0);
        let e52 = GameSpec::exact(5, 2).unwrap();
        assert!(exact_sg_formula(&pos(&[1, 1, 1, 1, 1]), &e52).is_err());
    }

    #[test]
    fn trivial_parity_spots() {
        let se33 = GameSpec::slow_exact(3, 3).unwrap();
        assert_eq!(
            trivial_case_sg(&pos(&[2, 5, 7]), &se33, Version::Normal).unwrap(),
            0
        );
        let sm41 = GameSpec::slow_moore(4, 1).unwrap();
        assert_eq!(
            trivial_case_sg(&pos(&[1, 1, 1, 0]), &sm41, Version::Normal).unwrap(),
            1
        );
        let se22 = GameSpec::slow_exact(2, 2).unwrap();
        assert_eq!(
            trivial_case_sg(&pos(&[0, 9]), &se22, Version::Misere).unwrap(),
            1
        );
        let sm32 = GameSpec::slow_moore(3, 2).unwrap();
        assert!(trivial_case_sg(&pos(&[1, 2, 3]), &sm32, Version::Normal).is_err());
    }

    #[test]
    fn small_table_spots() {
        let sm22 = GameSpec::slow_moore(2, 2).unwrap();
        assert_eq!(slow_moore_sg_small(&pos(&[1, 2]), &sm22).unwrap(), 3);
        let sm32 = GameSpec::slow_moore(3, 2).unwrap();
        assert_eq!(slow_moore_sg_small(&pos(&[2, 4, 6]), &sm32).unwrap(), 0);
        assert_eq!(slow_moore_sg_small(&pos(&[2, 3, 4]), &sm32).unwrap(), 3);
        let sm42 = GameSpec::slow_moore(4, 2).unwrap();
        assert!(slow_moore_sg_small(&pos(&[1, 1, 1, 1]), &sm42).is_err());
    }

    #[test]
    fn p_position_patterns() {
        let sm52 = GameSpec::slow_moore(5, 2).unwrap();
        assert!(!slow_moore_is_p(&pos(&[2, 2, 1, 1, 1]), &sm52).unwrap());
        assert!(slow_moore_is_p(&pos(&[2, 2, 3, 3, 3]), &sm52).unwrap());
        let sm32 = GameSpec::slow_moore(3, 2).unwrap();
        assert!(slow_moore_is_p(&pos(&[1, 1, 1]), &sm32).unwrap());
        let sm22 = GameSpec::slow_moore(2, 2).unwrap();
        assert!(slow_moore_is_p(&pos(&[0, 0]), &sm22).unwrap());
        // The first-even-rest-odd pattern needs k >= 2 to be meaningful.
        let sm31 = GameSpec::slow_moore(3, 1).unwrap();
        assert!(slow_moore_is_p(&pos(&[1, 1, 2]), &sm31).is_err());
    }

    #[test]
    fn misere_swap_patterns() {
        let sm43 = GameSpec::slow_moore(4, 3).unwrap();
        assert_eq!(
            slow_moore_misere_swap(&pos(&[2, 2, 2, 6]), &sm43).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert_eq!(
            slow_moore_misere_swap(&pos(&[2, 2, 2, 5]), &sm43).unwrap(),
            Some(SwapKind::OneZero)
        );
        let sm33 = GameSpec::slow_moore(3, 3).unwrap();
        assert_eq!(
            slow_moore_misere_swap(&pos(&[0, 0, 3]), &sm33).unwrap(),
            Some(SwapKind::OneZero)
        );
        assert_eq!(
            slow_moore_misere_swap(&pos(&[0, 0, 0]), &sm33).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        let sm42 = GameSpec::slow_moore(4, 2).unwrap();
        assert!(slow_moore_misere_swap(&pos(&[1, 1, 1, 1]), &sm42).is_err());
    }

    #[test]
    fn slow_exact32_normal_spots() {
        assert_eq!(slow_exact32_sg(&pos(&[0, 0, 0]), Version::Normal).unwrap(), 0);
        assert_eq!(slow_exact32_sg(&pos(&[2, 2, 3]), Version::Normal).unwrap(), 1);
        assert_eq!(slow_exact32_sg(&pos(&[3, 3, 3]), Version::Normal).unwrap(), 0);
        assert_eq!(
            slow_exact32_set_tag(&pos(&[2, 2, 3]), Version::Normal).unwrap(),
            Some(SetTag::B)
        );
        assert_eq!(
            slow_exact32_set_tag(&pos(&[3, 3, 3]), Version::Normal).unwrap(),
            Some(SetTag::C0)
        );
    }

    #[test]
    fn slow_exact32_misere_spots() {
        assert_eq!(slow_exact32_sg(&pos(&[0, 0, 0]), Version::Misere).unwrap(), 1);
        assert_eq!(slow_exact32_sg(&pos(&[0, 1, 1]), Version::Misere).unwrap(), 0);
        assert_eq!(slow_exact32_sg(&pos(&[0, 2, 2]), Version::Misere).unwrap(), 1);
        assert_eq!(slow_exact32_sg(&pos(&[1, 1, 2]), Version::Misere).unwrap(), 2);
        assert_eq!(slow_exact32_sg(&pos(&[1, 2, 2]), Version::Misere).unwrap(), 1);
        assert_eq!(slow_exact32_sg(&pos(&[3, 3, 3]), Version::Misere).unwrap(), 1);
        assert_eq!(slow_exact32_sg(&pos(&[3, 4, 4]), Version::Misere).unwrap(), 0);
        assert_eq!(
            slow_exact32_set_tag(&pos(&[1, 3, 3]), Version::Misere).unwrap(),
            Some(SetTag::E)
        );
        assert_eq!(
            slow_exact32_set_tag(&pos(&[1, 4, 4]), Version::Misere).unwrap(),
            Some(SetTag::F)
        );
    }

    #[test]
    fn swap_class_32_spots() {
        assert_eq!(
            swap_class_32(&pos(&[0, 4, 9])).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert_eq!(
            swap_class_32(&pos(&[1, 3, 3])).unwrap(),
            Some(SwapKind::OneZero)
        );
        assert_eq!(swap_class_32(&pos(&[1, 3, 4])).unwrap(), None);
        assert_eq!(
            swap_class_32(&pos(&[2, 3, 4])).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert_eq!(
            swap_class_32(&pos(&[3, 3, 3])).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert_eq!(
            swap_class_32(&pos(&[3, 4, 4])).unwrap(),
            Some(SwapKind::OneZero)
        );
        assert_eq!(swap_class_32(&pos(&[2, 2, 2])).unwrap(), None);
    }

    #[test]
    fn nontame_class_32_spots() {
        assert_eq!(
            nontame_class_32(&pos(&[3, 4, 6])).unwrap(),
            Some(PositionClass { g: 0, g_minus: 3 })
        );
        assert_eq!(
            nontame_class_32(&pos(&[3, 3, 5])).unwrap(),
            Some(PositionClass { g: 1, g_minus: 2 })
        );
        assert_eq!(nontame_class_32(&pos(&[1, 5, 5])).unwrap(), None);
    }

    #[test]
    fn moore_swap_spots() {
        let m42 = GameSpec::moore(4, 2).unwrap();
        assert_eq!(
            swap_class_moore(&pos(&[0, 1, 1, 1]), &m42).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert_eq!(
            swap_class_moore(&pos(&[0, 0, 0, 1]), &m42).unwrap(),
            Some(SwapKind::OneZero)
        );
        assert_eq!(swap_class_moore(&pos(&[0, 0, 1, 2]), &m42).unwrap(), None);
        let m41 = GameSpec::moore(4, 1).unwrap();
        assert!(swap_class_moore(&pos(&[0, 0, 0, 1]), &m41).is_err());
    }

    #[test]
    fn exact_swap_spots() {
        assert_eq!(
            swap_class_exact2k(&pos(&[0, 0, 0, 0]), 2).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert_eq!(
            swap_class_exact2k(&pos(&[0, 0, 1, 1]), 2).unwrap(),
            Some(SwapKind::OneZero)
        );
        assert_eq!(
            swap_class_exact2k(&pos(&[1, 1, 1, 5]), 2).unwrap(),
            Some(SwapKind::ZeroOne)
        );
        assert!(swap_class_exact2k(&pos(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn slow_exact32_matches_solver_small_box() {
        let se32 = GameSpec::slow_exact(3, 2).unwrap();
        for version in [Version::Normal, Version::Misere] {
            let t = SgTable::build(&se32, 10, version).unwrap();
            for (p, v) in t.iter() {
                assert_eq!(
                    slow_exact32_sg(&p, version).unwrap(),
                    v,
                    "{p} under {version}"
                );
            }
        }
    }

    #[test]
    fn swap_and_nontame_match_solver_small_box() {
        let se32 = GameSpec::slow_exact(3, 2).unwrap();
        let normal = SgTable::build(&se32, 10, Version::Normal).unwrap();
        let misere = SgTable::build(&se32, 10, Version::Misere).unwrap();
        for (p, g) in normal.iter() {
            let class = PositionClass {
                g,
                g_minus: misere.get(&p).unwrap(),
            };
            assert_eq!(swap_class_32(&p).unwrap(), class.swap_kind(), "{p}");
            let expected = (!class.is_swap() && !class.is_tame_value()).then_some(class);
            assert_eq!(nontame_class_32(&p).unwrap(), expected, "{p}");
        }
    }

    proptest! {
        #[test]
        fn small_table_depends_only_on_parities(raw in proptest::collection::vec(0u32..=9, 3), bump in 0usize..3) {
            let sm32 = GameSpec::slow_moore(3, 2).unwrap();
            let p = Position::new(raw);
            let mut bumped = p.piles().to_vec();
            bumped[bump] += 2;
            let q = Position::new(bumped);
            // Adding 2 keeps the coordinate's parity; when it also keeps
            // its slot in the sorted order, the whole parity vector and
            // hence the table value are unchanged. The largest slot
            // always stays put.
            if bump == 2 || parity_vector(&p) == parity_vector(&q) {
                prop_assert_eq!(
                    slow_moore_sg_small(&p, &sm32).unwrap(),
                    slow_moore_sg_small(&q, &sm32).unwrap()
                );
            }
        }

        #[test]
        fn moore_function_k1_is_nim_sum(raw in proptest::collection::vec(0u32..=200, 4)) {
            let p = Position::new(raw);
            prop_assert_eq!(moore_function(&p, 1), nim_sum(&p) as u64);
        }

        #[test]
        fn threshold_parts_are_consistent(raw in proptest::collection::vec(0u32..=12, 3)) {
            let m32 = GameSpec::moore(3, 2).unwrap();
            let parts = exco_sg_parts(&Position::new(raw), &m32).unwrap();
            prop_assert_eq!(parts.threshold, (parts.excess * parts.excess + parts.excess + 2) / 2);
            prop_assert!(parts.total >= 3 * parts.min_pile);
        }
    }
}
