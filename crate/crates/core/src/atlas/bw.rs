//! Minimal vectors of the 16-dimensional Barnes-Wall lattice, taken as
//! `{x in Z^16 : x mod 2 in RM(1,4), sum(x) = 0 mod 4}` at squared norm 8.

use alloc::vec::Vec;

use super::binary::reed_muller_1_4;
use super::PointCode;

pub fn is_bw_vector(v: &[i32], rm: &[u32]) -> bool {
    if v.len() != 16 {
        return false;
    }
    let word = v.iter().enumerate().filter(|(_, c)| *c & 1 == 1).fold(0u32, |m, (i, _)| m | 1 << i);
    let sum: i32 = v.iter().sum();
    sum.rem_euclid(4) == 0 && rm.binary_search(&word).is_ok()
}

fn sorted_rm() -> Vec<u32> {
    let mut words = reed_muller_1_4().codewords();
    words.sort_unstable();
    words
}

/// The 4320 minimal vectors: `(±2², 0¹⁴)` and `(±1⁸, 0⁸)` on the weight-8
/// Reed-Muller words with an even number of minus signs.
pub fn bw16_minimal() -> PointCode {
    let mut flat = Vec::with_capacity(4320 * 16);
    for i in 0..16 {
        for j in i + 1..16 {
            for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = [0i32; 16];
                v[i] = a;
                v[j] = b;
                flat.extend_from_slice(&v);
            }
        }
    }
    for word in sorted_rm().into_iter().filter(|w| w.count_ones() == 8) {
        let support: Vec<usize> = (0..16).filter(|i| word >> i & 1 == 1).collect();
        for signs in (0u32..256).filter(|s| s.count_ones() % 2 == 0) {
            let mut v = [0i32; 16];
            for (k, &pos) in support.iter().enumerate() {
                v[pos] = if signs >> k & 1 == 1 { -1 } else { 1 };
            }
            flat.extend_from_slice(&v);
        }
    }
    PointCode::from_flat(16, flat).expect("Barnes-Wall minimal vectors are distinct with norm 8")
}

/// Every lattice vector of squared norm `norm`, by depth-first search over
/// coordinates bounded by the remaining norm.
pub fn bw16_shell_bruteforce(norm: i32) -> Vec<[i32; 16]> {
    let rm = sorted_rm();
    let mut out = Vec::new();
    let mut v = [0i32; 16];
    fn walk(pos: usize, left: i32, v: &mut [i32; 16], rm: &[u32], out: &mut Vec<[i32; 16]>) {
        if pos == 16 {
            if left == 0 && is_bw_vector(v, rm) {
                out.push(*v);
            }
            return;
        }
        let mut c = 0;
        while c * c <= left {
            for s in if c == 0 { &[1][..] } else { &[1, -1][..] } {
                v[pos] = s * c;
                walk(pos + 1, left - c * c, v, rm, out);
            }
            c += 1;
        }
        v[pos] = 0;
    }
    walk(0, norm, &mut v, &rm, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_shorter_vectors() {
        for norm in 1..8 {
            assert!(bw16_shell_bruteforce(norm).is_empty(), "norm {norm}");
        }
    }

    #[test]
    fn construction_matches_exhaustive_search() {
        let code = bw16_minimal();
        assert_eq!(code.len(), 4320);
        let mut brute = bw16_shell_bruteforce(8);
        brute.sort_unstable();
        let mut built: Vec<[i32; 16]> = code.points().map(|p| p.try_into().unwrap()).collect();
        built.sort_unstable();
        assert_eq!(brute, built);
    }
}
