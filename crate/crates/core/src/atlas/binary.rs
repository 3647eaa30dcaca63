use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Binary linear code of length at most 32, codewords as bit masks
/// (bit `i` is coordinate `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    rows: Vec<u32>,
}

impl BinaryCode {
    /// Rejects dependent generator rows and rows wider than `length`.
    pub fn new(length: usize, rows: Vec<u32>) -> Result<Self> {
        if length == 0 || length > 32 {
            return Err(Error::InvalidCode(format!("binary length {length} not in 1..=32")));
        }
        let mask = if length == 32 { u32::MAX } else { (1u32 << length) - 1 };
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::InvalidCode("generator row wider than the code".into()));
        }
        if gf2_rank(&rows) != rows.len() {
            return Err(Error::InvalidCode("generator rows are linearly dependent".into()));
        }
        Ok(BinaryCode { length, rows })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// All `2^k` codewords, in Gray-code order starting from zero.
    pub fn codewords(&self) -> Vec<u32> {
        let k = self.rows.len();
        let mut out = Vec::with_capacity(1 << k);
        let mut word = 0u32;
        out.push(word);
        for step in 1u32..(1 << k) {
            word ^= self.rows[step.trailing_zeros() as usize];
            out.push(word);
        }
        out
    }

    /// `dist[w]` = number of codewords of weight `w`.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut dist = alloc::vec![0; self.length + 1];
        for w in self.codewords() {
            dist[w.count_ones() as usize] += 1;
        }
        dist
    }
}

pub(crate) fn gf2_rank(rows: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Generator polynomial of the cyclic [23,12,7] Golay code:
/// `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1`.
const GOLAY_G: u32 = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1;

fn cyclic_rows(generator: u32, degree: u32, length: u32) -> Vec<u32> {
    (0..length - degree).map(|i| generator << i).collect()
}

/// The perfect [23,12,7] binary Golay code.
pub fn golay23() -> BinaryCode {
    BinaryCode::new(23, cyclic_rows(GOLAY_G, 11, 23)).expect("Golay generator rows are independent")
}

/// Extended [24,12,8] Golay code: parity bit in coordinate 23.
pub fn golay24() -> BinaryCode {
    let rows = cyclic_rows(GOLAY_G, 11, 23)
        .into_iter()
        .map(|r| if r.count_ones() % 2 == 1 { r | (1 << 23) } else { r })
        .collect();
    BinaryCode::new(24, rows).expect("extended Golay rows are independent")
}

/// The [23,11] dual of the perfect Golay code: its even-weight subcode,
/// generated cyclically by `(x + 1) g(x)`.
pub fn dual_golay23() -> BinaryCode {
    let g = GOLAY_G ^ (GOLAY_G << 1);
    BinaryCode::new(23, cyclic_rows(g, 12, 23)).expect("dual Golay rows are independent")
}

/// First-order Reed-Muller code RM(1,4), length 16: the all-ones word and
/// the four coordinate functions.
pub fn reed_muller_1_4() -> BinaryCode {
    let mut rows = alloc::vec![0xFFFFu32];
    for k in 0..4 {
        let mut r = 0u32;
        for pos in 0..16 {
            if pos >> k & 1 == 1 {
                r |= 1 << pos;
            }
        }
        rows.push(r);
    }
    BinaryCode::new(16, rows).expect("RM(1,4) rows are independent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay24_weights() {
        let c = golay24();
        assert_eq!(c.codewords().len(), 4096);
        let d = c.weight_distribution();
        assert_eq!((d[0], d[8], d[12], d[16], d[24]), (1, 759, 2576, 759, 1));
        assert_eq!(d.iter().sum::<usize>(), 4096);
    }

    #[test]
    fn golay24_is_self_dual() {
        let c = golay24();
        for a in c.rows() {
            for b in c.rows() {
                assert_eq!((a & b).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn golay23_is_perfect() {
        let d = golay23().weight_distribution();
        assert_eq!(d.iter().enumerate().filter(|(w, _)| *w > 0 && *w < 7).map(|(_, c)| c).sum::<usize>(), 0);
        assert_eq!(d[7], 253);
    }

    #[test]
    fn dual_golay_weights() {
        let c = dual_golay23();
        assert_eq!(c.codewords().len(), 2048);
        let d = c.weight_distribution();
        let support: Vec<usize> = (0..=23).filter(|&w| d[w] > 0).collect();
        assert_eq!(support, alloc::vec![0, 8, 12, 16]);
        assert_eq!((d[8], d[12], d[16]), (506, 1288, 253));
        // Orthogonal to the perfect code.
        for a in golay23().rows() {
            for b in c.rows() {
                assert_eq!((a & b).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn reed_muller_weights() {
        let d = reed_muller_1_4().weight_distribution();
        assert_eq!((d[0], d[8], d[16]), (1, 30, 1));
    }

    #[test]
    fn dependent_rows_rejected() {
        assert!(BinaryCode::new(4, alloc::vec![0b0011, 0b0110, 0b0101]).is_err());
        assert!(BinaryCode::new(3, alloc::vec![0b1000]).is_err());
    }
}
