//! Derived codes: the parent points at a fixed angle to a base vector,
//! projected onto the base's orthogonal complement and rescaled.
//!
//! Projections are never formed. Each base is stored as an integer vector
//! together with exact Gram-Schmidt coefficients, so every quantity a member
//! needs is a rational function of its integer dot products.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::PointCode;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// A cosine given by its square and its sign, so that values such as
/// `sqrt(6)/12` need no algebraic numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cosine {
    pub sq: Rational,
    pub positive: bool,
}

impl Cosine {
    pub fn rational(alpha: &Rational) -> Self {
        Cosine { sq: alpha * alpha, positive: !alpha.is_negative() }
    }

    pub fn from_square(sq: Rational, positive: bool) -> Self {
        Cosine { sq, positive }
    }
}

#[derive(Clone, Debug)]
pub struct DerivedCode {
    members: PointCode,
    parent_indices: Vec<usize>,
    parent_dim: usize,
    bases: Vec<Vec<i64>>,
    // Row j: e_j as a combination of the integer bases.
    frame: Vec<Vec<Rational>>,
    frame_norms: Vec<Rational>,
    cosines: Vec<Cosine>,
    // <P y, P z> = y.z - offset for members y, z.
    offset: Rational,
}

/// Members of `parent` at cosine `alpha` to `base`.
pub fn derive(parent: &PointCode, base: &[i32], alpha: &Rational) -> Result<DerivedCode> {
    derive_at(parent, base, &Cosine::rational(alpha))
}

pub fn derive_at(parent: &PointCode, base: &[i32], cos: &Cosine) -> Result<DerivedCode> {
    let root = DerivedCode {
        members: parent.clone(),
        parent_indices: (0..parent.len()).collect(),
        parent_dim: parent.dim(),
        bases: Vec::new(),
        frame: Vec::new(),
        frame_norms: Vec::new(),
        cosines: Vec::new(),
        offset: Rational::zero(),
    };
    root.derive_at(base, cos)
}

impl DerivedCode {
    pub fn members(&self) -> &PointCode {
        &self.members
    }

    /// Indices of the members in the code this one was cut from.
    pub fn parent_indices(&self) -> &[usize] {
        &self.parent_indices
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.parent_dim - self.bases.len()
    }

    pub fn depth(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> &[Vec<i64>] {
        &self.bases
    }

    pub fn cosines(&self) -> &[Cosine] {
        &self.cosines
    }

    /// `s` in `beta -> (beta - s) / (1 - s)`, where `beta` is the unit inner
    /// product in the original parent.
    pub fn shift(&self) -> Rational {
        &self.offset / Rational::from_integer(self.members.scale().into())
    }

    /// Unit inner product in the derived code for a raw parent dot product.
    pub fn value_of_dot(&self, dot: i64) -> Rational {
        let scale = Rational::from_integer(self.members.scale().into());
        (Rational::from_integer(dot.into()) - &self.offset) / (scale - &self.offset)
    }

    pub fn inner_product(&self, i: usize, j: usize) -> Rational {
        self.value_of_dot(self.members.dot(i, j))
    }

    /// Cuts this code again, at cosine `cos` to the projection of `base`.
    pub fn derive_at(&self, base: &[i32], cos: &Cosine) -> Result<DerivedCode> {
        if base.len() != self.parent_dim {
            return Err(Error::Precondition("base has the wrong dimension".into()));
        }
        if cos.sq.is_negative() || cos.sq >= Rational::one() {
            return Err(Error::Precondition("squared cosine must lie in [0, 1)".into()));
        }
        let b: Vec<i64> = base.iter().map(|&c| i64::from(c)).collect();
        let raw = |u: &[i64], v: &[i64]| -> Rational {
            Rational::from_integer(u.iter().zip(v).map(|(x, y)| x * y).sum::<i64>().into())
        };
        // e = b - sum_i (b.e_i / |e_i|^2) e_i, written over the bases.
        let mut combo = alloc::vec![Rational::zero(); self.bases.len() + 1];
        combo[self.bases.len()] = Rational::one();
        let mut norm = raw(&b, &b);
        for (row, e_norm) in self.frame.iter().zip(&self.frame_norms) {
            let b_dot_e: Rational = row.iter().zip(&self.bases).map(|(c, bk)| c * raw(&b, bk)).sum();
            let f = &b_dot_e / e_norm;
            for (slot, c) in combo.iter_mut().zip(row) {
                *slot -= &f * c;
            }
            norm -= &b_dot_e * &f;
        }
        if !norm.is_positive() {
            return Err(Error::Precondition("base lies in the span of earlier bases".into()));
        }
        let mut bases = self.bases.clone();
        bases.push(b);
        let scale = Rational::from_integer(self.members.scale().into());
        let member_norm = &scale - &self.offset;
        let target = &cos.sq * &member_norm * &norm;

        let mut memo: BTreeMap<Vec<i64>, Option<Rational>> = BTreeMap::new();
        let mut keep = Vec::new();
        let mut hit_value = None;
        let mut dots = Vec::with_capacity(bases.len());
        for i in 0..self.members.len() {
            dots.clear();
            dots.extend(bases.iter().map(|bk| self.members.dot_with(i, bk)));
            let verdict = memo.entry(dots.clone()).or_insert_with(|| {
                let y_dot_e: Rational =
                    combo.iter().zip(&dots).map(|(c, &d)| c * Rational::from_integer(d.into())).sum();
                let sign_ok = cos.sq.is_zero() || (cos.positive == y_dot_e.is_positive());
                (sign_ok && &y_dot_e * &y_dot_e == target).then_some(y_dot_e)
            });
            if let Some(v) = verdict {
                hit_value.get_or_insert_with(|| v.clone());
                keep.push(i);
            }
        }
        let Some(y_dot_e) = hit_value else {
            return Err(Error::EmptyDerivedCode);
        };
        let members = self.members.select(&keep)?;
        let parent_indices = keep.iter().map(|&i| self.parent_indices[i]).collect();
        let mut frame = self.frame.clone();
        for row in &mut frame {
            row.push(Rational::zero());
        }
        frame.push(combo);
        let mut frame_norms = self.frame_norms.clone();
        let offset = &self.offset + &y_dot_e * &y_dot_e / &norm;
        frame_norms.push(norm);
        let mut cosines = self.cosines.clone();
        cosines.push(cos.clone());
        Ok(DerivedCode {
            members,
            parent_indices,
            parent_dim: self.parent_dim,
            bases,
            frame,
            frame_norms,
            cosines,
            offset,
        })
    }

    pub fn derive(&self, base: &[i32], alpha: &Rational) -> Result<DerivedCode> {
        self.derive_at(base, &Cosine::rational(alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use alloc::vec;

    fn square() -> PointCode {
        // Cross-polytope in R^3.
        PointCode::new(
            3,
            vec![vec![1, 0, 0], vec![-1, 0, 0], vec![0, 1, 0], vec![0, -1, 0], vec![0, 0, 1], vec![0, 0, -1]],
        )
        .unwrap()
    }

    #[test]
    fn equator_of_octahedron() {
        let d = derive(&square(), &[0, 0, 1], &int(0)).unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d.dim(), 2);
        assert_eq!(d.shift(), int(0));
        assert_eq!(d.inner_product(0, 1), int(-1));
        assert_eq!(d.inner_product(0, 2), int(0));
    }

    #[test]
    fn irrational_angle_by_squares() {
        // Against (1,1,0) the octahedron vertices sit at cosines 0, +-1/sqrt2.
        let c = square();
        let plus = derive_at(&c, &[1, 1, 0], &Cosine::from_square(rat(1, 2), true)).unwrap();
        assert_eq!(plus.len(), 2);
        assert_eq!(plus.shift(), rat(1, 2));
        assert_eq!(plus.inner_product(0, 1), int(-1));
        let minus = derive_at(&c, &[1, 1, 0], &Cosine::from_square(rat(1, 2), false)).unwrap();
        assert_eq!(minus.len(), 2);
        assert!(matches!(
            derive_at(&c, &[1, 1, 0], &Cosine::from_square(rat(1, 3), true)),
            Err(Error::EmptyDerivedCode)
        ));
    }

    #[test]
    fn iterated_derivation_composes_shifts() {
        let c = PointCode::new(
            3,
            vec![vec![1, 1, 0], vec![1, -1, 0], vec![1, 0, 1], vec![1, 0, -1], vec![0, 1, 1], vec![0, 1, -1]],
        )
        .unwrap();
        let first = derive(&c, &[1, 1, 0], &rat(1, 2)).unwrap();
        assert_eq!(first.len(), 4);
        assert_eq!(first.shift(), rat(1, 4));
        let second = first.derive(&[1, 0, 1], &rat(1, 3)).unwrap();
        assert_eq!(second.dim(), 1);
        // s' = s + a^2 (1 - s)
        assert_eq!(second.shift(), rat(1, 4) + rat(1, 9) * rat(3, 4));
        assert!(first.derive(&[2, 2, 0], &int(0)).is_err());
    }
}
