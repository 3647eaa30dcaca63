//! Leech lattice in the integer scaling where minimal vectors have squared
//! norm 32.
//!
//! `x` is in the lattice when all coordinates share a parity `m`, the sum is
//! `4m mod 8`, and for even `x` the coordinates `= 2 mod 4` (for odd `x` the
//! ones `= 3 mod 4`) sit on a Golay codeword.

use alloc::vec::Vec;

use super::binary::golay24;
use super::PointCode;
use crate::error::{Error, Result};

/// Sorted codewords of the extended Golay code, for membership tests.
pub struct GolaySet(Vec<u32>);

impl GolaySet {
    pub fn new() -> Self {
        let mut words = golay24().codewords();
        words.sort_unstable();
        GolaySet(words)
    }

    pub fn contains(&self, word: u32) -> bool {
        self.0.binary_search(&word).is_ok()
    }

    pub fn words(&self) -> &[u32] {
        &self.0
    }
}

impl Default for GolaySet {
    fn default() -> Self {
        Self::new()
    }
}

pub fn is_leech_vector(v: &[i32], golay: &GolaySet) -> bool {
    if v.len() != 24 {
        return false;
    }
    let parity = v[0].rem_euclid(2);
    if v.iter().any(|c| c.rem_euclid(2) != parity) {
        return false;
    }
    let sum: i64 = v.iter().map(|&c| i64::from(c)).sum();
    if sum.rem_euclid(8) != i64::from(4 * parity) {
        return false;
    }
    let marker = if parity == 0 { 2 } else { 3 };
    let mask = v
        .iter()
        .enumerate()
        .filter(|(_, c)| c.rem_euclid(4) == marker)
        .fold(0u32, |m, (i, _)| m | 1 << i);
    golay.contains(mask)
}

/// Minimal vectors of each shape: `(±4², 0²²)`, `(±2⁸, 0¹⁶)`, `(∓3, ±1²³)`.
pub fn leech_shapes() -> [Vec<[i32; 24]>; 3] {
    let golay = GolaySet::new();
    let mut fours = Vec::new();
    for i in 0..24 {
        for j in i + 1..24 {
            for (a, b) in [(4, 4), (4, -4), (-4, 4), (-4, -4)] {
                let mut v = [0i32; 24];
                v[i] = a;
                v[j] = b;
                fours.push(v);
            }
        }
    }
    let mut twos = Vec::new();
    for &octad in golay.words().iter().filter(|w| w.count_ones() == 8) {
        let support: Vec<usize> = (0..24).filter(|i| octad >> i & 1 == 1).collect();
        for signs in 0u32..256 {
            if signs.count_ones() % 2 == 1 {
                continue;
            }
            let mut v = [0i32; 24];
            for (k, &pos) in support.iter().enumerate() {
                v[pos] = if signs >> k & 1 == 1 { -2 } else { 2 };
            }
            twos.push(v);
        }
    }
    let mut odd = Vec::new();
    for &word in golay.words() {
        for pos in 0..24 {
            let mut v = [1i32; 24];
            v[pos] = -3;
            for (i, c) in v.iter_mut().enumerate() {
                if word >> i & 1 == 1 {
                    *c = -*c;
                }
            }
            odd.push(v);
        }
    }
    [fours, twos, odd]
}

/// The 196560 minimal vectors, shapes concatenated in the order of
/// [`leech_shapes`].
pub fn leech_minimal() -> PointCode {
    let mut flat = Vec::with_capacity(196_560 * 24);
    for shape in leech_shapes() {
        for v in shape {
            flat.extend_from_slice(&v);
        }
    }
    PointCode::from_flat(24, flat).expect("Leech minimal vectors are distinct with norm 32")
}

/// A fixed minimal vector used as the pole for the derived codes.
pub fn leech_pole() -> Vec<i32> {
    let mut x = alloc::vec![0; 24];
    x[0] = 4;
    x[1] = 4;
    x
}

/// A lattice vector of squared norm 48, the first member of a short
/// candidate list.
pub fn leech_norm6_representative() -> Result<Vec<i32>> {
    let golay = GolaySet::new();
    let mut dodecad = [0i32; 24];
    if let Some(&w) = golay.words().iter().find(|w| w.count_ones() == 12) {
        for (i, c) in dodecad.iter_mut().enumerate() {
            *c = if w >> i & 1 == 1 { 2 } else { 0 };
        }
    }
    let candidates: [Vec<i32>; 3] = [
        [4, 4, 4].into_iter().chain(core::iter::repeat_n(0, 21)).collect(),
        core::iter::once(5).chain(core::iter::repeat_n(1, 23)).collect(),
        dodecad.to_vec(),
    ];
    candidates
        .into_iter()
        .find(|v| v.iter().map(|&c| c * c).sum::<i32>() == 48 && is_leech_vector(v, &golay))
        .ok_or_else(|| Error::SearchFailed("no norm-48 Leech vector among the candidates".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts_and_membership() {
        let golay = GolaySet::new();
        let shapes = leech_shapes();
        let counts: Vec<usize> = shapes.iter().map(|s| s.len()).collect();
        assert_eq!(counts, alloc::vec![1104, 97152, 98304]);
        for shape in &shapes {
            for v in shape {
                assert!(is_leech_vector(v, &golay));
                assert_eq!(v.iter().map(|c| c * c).sum::<i32>(), 32);
            }
        }
    }

    #[test]
    fn membership_rejects_near_misses() {
        let golay = GolaySet::new();
        let mut v = [0i32; 24];
        v[0] = 4;
        assert!(!is_leech_vector(&v, &golay));
        v[1] = 2;
        v[2] = 2;
        assert!(!is_leech_vector(&v, &golay));
        // Odd sign flips on an octad break the sum condition.
        let octad = golay.words().iter().copied().find(|w| w.count_ones() == 8).unwrap();
        let mut w = [0i32; 24];
        let mut first = true;
        for (i, c) in w.iter_mut().enumerate() {
            if octad >> i & 1 == 1 {
                *c = if first { -2 } else { 2 };
                first = false;
            }
        }
        assert!(!is_leech_vector(&w, &golay));
        let mut ones = [1i32; 24];
        ones[0] = -3;
        assert!(is_leech_vector(&ones, &golay));
        ones[0] = 3;
        assert!(!is_leech_vector(&ones, &golay));
    }

    #[test]
    fn norm6_representative() {
        let w = leech_norm6_representative().unwrap();
        assert_eq!(w.iter().map(|c| c * c).sum::<i32>(), 48);
        assert!(is_leech_vector(&w, &GolaySet::new()));
    }
}
