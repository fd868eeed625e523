//! Dense indexing of canonical positions.
//!
//! A canonical position inside a box is a non-decreasing n-tuple with
//! entries in 0..=cap. Adding i to the i-th entry turns it into a
//! strictly increasing tuple, i.e. an n-combination of {0, ..., cap+n-1},
//! which has a standard lexicographic rank. The rank order of tuples is
//! their lexicographic order, and every legal move strictly lowers the
//! rank, so a table indexed by rank can be filled in a single pass.

/// Binomial coefficient, exact in u128 for the sizes this crate sees.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - k + i) as u128 / i as u128;
    }
    result
}

/// Number of non-decreasing n-tuples with entries in 0..=cap.
pub fn box_size(n: usize, cap: u32) -> u128 {
    binomial(cap as u64 + n as u64, n as u64)
}

/// Lexicographic rank of a sorted tuple within its box.
pub fn rank(piles: &[u32], cap: u32) -> usize {
    let n = piles.len() as u64;
    let universe = cap as u64 + n;
    let mut r: u128 = 0;
    let mut next = 0u64;
    for (i, &x) in piles.iter().enumerate() {
        debug_assert!(x <= cap);
        let c = x as u64 + i as u64;
        for v in next..c {
            r += binomial(universe - 1 - v, n - 1 - i as u64);
        }
        next = c + 1;
    }
    r as usize
}

/// Inverse of [`rank`].
pub fn unrank(n: usize, cap: u32, rank: usize) -> Vec<u32> {
    let universe = cap as u64 + n as u64;
    let mut r = rank as u128;
    let mut out = Vec::with_capacity(n);
    let mut c = 0u64;
    for i in 0..n as u64 {
        loop {
            let below = binomial(universe - 1 - c, n as u64 - 1 - i);
            if below <= r {
                r -= below;
                c += 1;
            } else {
                break;
            }
        }
        out.push((c - i) as u32);
        c += 1;
    }
    debug_assert_eq!(r, 0);
    out
}
