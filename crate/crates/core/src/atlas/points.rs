use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Integer vectors sharing one squared norm `scale`. The unit inner product
/// of two points is `x.y / scale`.
#[derive(Clone, Debug)]
pub struct PointCode {
    dim: usize,
    scale: i64,
    coords: Vec<i32>,
    // i16 copy padded to a multiple of 8 lanes, present when every dot
    // product provably fits in i16.
    packed: Option<(usize, Vec<i16>)>,
}

impl PartialEq for PointCode {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.scale == other.scale && self.coords == other.coords
    }
}

impl Eq for PointCode {}

impl PointCode {
    pub fn new(dim: usize, points: Vec<Vec<i32>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidCode("dimension must be positive".into()));
        }
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in &points {
            if p.len() != dim {
                return Err(Error::InvalidCode(format!("point of length {} in dimension {dim}", p.len())));
            }
            coords.extend_from_slice(p);
        }
        Self::from_flat(dim, coords)
    }

    /// Points given row-major in one buffer.
    pub fn from_flat(dim: usize, coords: Vec<i32>) -> Result<Self> {
        if dim == 0 || !coords.len().is_multiple_of(dim) {
            return Err(Error::InvalidCode("coordinate buffer does not split into points".into()));
        }
        if coords.is_empty() {
            return Err(Error::InvalidCode("empty code".into()));
        }
        let norm = |p: &[i32]| p.iter().map(|&c| i64::from(c) * i64::from(c)).sum::<i64>();
        let scale = norm(&coords[..dim]);
        if scale == 0 {
            return Err(Error::InvalidCode("zero vector".into()));
        }
        if let Some(bad) = coords.chunks(dim).position(|p| norm(p) != scale) {
            return Err(Error::InvalidCode(format!("point {bad} has squared norm other than {scale}")));
        }
        let mut order: Vec<&[i32]> = coords.chunks(dim).collect();
        order.sort_unstable();
        if order.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCode("repeated point".into()));
        }
        let mut code = PointCode { dim, scale, coords, packed: None };
        code.pack();
        Ok(code)
    }

    fn pack(&mut self) {
        let max = self.coords.iter().map(|c| i64::from(c.unsigned_abs())).max().unwrap_or(0);
        // Partial sums are bounded by dim * max^2.
        if (self.dim as i64) * max * max > i64::from(i16::MAX) {
            return;
        }
        let stride = self.dim.div_ceil(8) * 8;
        let mut packed = alloc::vec![0i16; stride * self.len()];
        for (row, p) in packed.chunks_mut(stride).zip(self.coords.chunks(self.dim)) {
            for (dst, &c) in row.iter_mut().zip(p) {
                *dst = c as i16;
            }
        }
        self.packed = Some((stride, packed));
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[i32] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[i32]> {
        self.coords.chunks(self.dim)
    }

    pub fn dot(&self, i: usize, j: usize) -> i64 {
        dot(self.point(i), self.point(j))
    }

    pub fn dot_with(&self, i: usize, v: &[i64]) -> i64 {
        self.point(i).iter().zip(v).map(|(&a, &b)| i64::from(a) * b).sum()
    }

    pub fn inner_product(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.dot(i, j).into(), self.scale.into())
    }

    pub fn contains(&self, v: &[i32]) -> bool {
        self.points().any(|p| p == v)
    }

    /// Sub-code on the listed indices.
    pub fn select(&self, indices: &[usize]) -> Result<PointCode> {
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            coords.extend_from_slice(self.point(i));
        }
        PointCode::from_flat(self.dim, coords)
    }

    /// Adds `hist[dot(i, j) + scale] += 1` for every `j` in `js`.
    pub fn tally_dots(&self, i: usize, js: core::ops::Range<usize>, hist: &mut [u64]) {
        let offset = self.scale;
        match &self.packed {
            Some((8, packed)) if offset < 128 => tally_fixed::<8>(packed, i, js, offset, hist),
            Some((16, packed)) if offset < 128 => tally_fixed::<16>(packed, i, js, offset, hist),
            Some((24, packed)) if offset < 128 => tally_fixed::<24>(packed, i, js, offset, hist),
            Some((s, packed)) => {
                let row = &packed[i * s..(i + 1) * s];
                for other in packed[js.start * s..js.end * s].chunks_exact(*s) {
                    hist[(i64::from(dot16(row, other)) + offset) as usize] += 1;
                }
            }
            None => {
                for j in js {
                    hist[(self.dot(i, j) + offset) as usize] += 1;
                }
            }
        }
    }

    /// Raw dot products of point `i` against every point in `js`.
    pub fn dots_into(&self, i: usize, js: core::ops::Range<usize>, out: &mut Vec<i64>) {
        out.clear();
        match &self.packed {
            Some((s, packed)) => {
                let row = &packed[i * s..(i + 1) * s];
                out.extend(js.map(|j| i64::from(dot16(row, &packed[j * s..(j + 1) * s]))));
            }
            None => out.extend(js.map(|j| self.dot(i, j))),
        }
    }

    pub fn is_antipodal(&self) -> bool {
        let mut sorted: Vec<&[i32]> = self.points().collect();
        sorted.sort_unstable();
        let mut neg = alloc::vec![0i32; self.dim];
        self.points().all(|p| {
            for (n, &c) in neg.iter_mut().zip(p) {
                *n = -c;
            }
            sorted.binary_search(&neg.as_slice()).is_ok()
        })
    }
}

pub(crate) fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| i64::from(x) * i64::from(y)).sum()
}

fn tally_fixed<const S: usize>(packed: &[i16], i: usize, js: core::ops::Range<usize>, offset: i64, hist: &mut [u64]) {
    let row: &[i16; S] = packed[i * S..(i + 1) * S].try_into().expect("row width");
    let mut local = [0u64; 256];
    for other in packed[js.start * S..js.end * S].chunks_exact(S) {
        let other: &[i16; S] = other.try_into().expect("row width");
        let mut acc = [0i16; 8];
        for c in 0..S / 8 {
            for k in 0..8 {
                acc[k] = acc[k].wrapping_add(row[c * 8 + k].wrapping_mul(other[c * 8 + k]));
            }
        }
        let d = acc.iter().fold(0i16, |s, &x| s.wrapping_add(x));
        local[(d as i64 + offset) as u8 as usize] += 1;
    }
    for (h, l) in hist.iter_mut().zip(local) {
        *h += l;
    }
}

#[inline]
fn dot16(a: &[i16], b: &[i16]) -> i16 {
    // Lane-wise accumulation so the compiler can keep it in vector registers.
    let mut acc = [0i16; 8];
    for (ca, cb) in a.chunks_exact(8).zip(b.chunks_exact(8)) {
        for k in 0..8 {
            acc[k] = acc[k].wrapping_add(ca[k].wrapping_mul(cb[k]));
        }
    }
    acc.iter().fold(0i16, |s, &x| s.wrapping_add(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_bad_input() {
        assert!(PointCode::new(2, vec![vec![1, 0], vec![1, 1]]).is_err());
        assert!(PointCode::new(2, vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(PointCode::new(2, vec![vec![1, 0, 0]]).is_err());
        assert!(PointCode::new(2, vec![]).is_err());
    }

    #[test]
    fn packed_and_wide_dots_agree() {
        let small = PointCode::new(3, vec![vec![1, 2, 2], vec![2, -1, 2], vec![-2, -2, 1], vec![0, 0, 3]]).unwrap();
        assert!(small.packed.is_some());
        let mut hist = vec![0u64; 19];
        small.tally_dots(0, 0..4, &mut hist);
        let mut direct = vec![0u64; 19];
        for j in 0..4 {
            direct[(small.dot(0, j) + 9) as usize] += 1;
        }
        assert_eq!(hist, direct);
        let big = PointCode::new(2, vec![vec![300, 400], vec![-500, 0]]).unwrap();
        assert!(big.packed.is_none());
        assert_eq!(big.inner_product(0, 1), crate::exactnum::rat(-3, 5));
    }

    #[test]
    fn antipodality() {
        let c = PointCode::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
        assert!(c.is_antipodal());
        let d = c.select(&[0, 1, 2]).unwrap();
        assert!(!d.is_antipodal());
    }
}
