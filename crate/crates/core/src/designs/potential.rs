use core::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{exp_enclosure, int, pow, Poly, RatInterval, Rational};

/// Default precision, in bits, for transcendental potentials.
pub const DEFAULT_BITS: u32 = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Potential {
    /// `(2 - 2t)^-k`
    InverseChordal(u32),
    /// `exp(c t)`, enclosed to about `bits` bits.
    Exponential { c: Rational, bits: u32 },
    Polynomial(Poly),
}

impl Potential {
    pub fn exponential(c: Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Precondition("exponential potential needs c > 0".into()));
        }
        Ok(Potential::Exponential { c, bits: DEFAULT_BITS })
    }

    pub fn inverse_chordal(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("inverse chordal power needs k >= 1".into()));
        }
        Ok(Potential::InverseChordal(k))
    }

    pub fn value(&self, t: &Rational) -> Result<RatInterval> {
        self.derivative(0, t)
    }

    /// `h^(j)(t)`, exact for the rational families.
    pub fn derivative(&self, j: u32, t: &Rational) -> Result<RatInterval> {
        match self {
            Potential::InverseChordal(k) => {
                let base = int(2) - int(2) * t;
                if !base.is_positive() {
                    return Err(Error::Pole(t.clone()));
                }
                // k (k+1) ... (k+j-1) 2^j (2 - 2t)^(-k-j)
                let rising: Rational = (0..j).map(|i| int(i64::from(*k + i))).product();
                let v = rising * pow(&int(2), j) / pow(&base, k + j);
                Ok(RatInterval::point(v))
            }
            Potential::Exponential { c, bits } => {
                let e = exp_enclosure(&(c * t), *bits);
                Ok(e.scale(&pow(c, j)))
            }
            Potential::Polynomial(p) => {
                let mut d = p.clone();
                for _ in 0..j {
                    d = d.derivative();
                }
                Ok(RatInterval::point(d.eval(t)))
            }
        }
    }

    /// True when every derivative is nonnegative on `[-1, 1)`. For a
    /// polynomial this holds exactly when its Taylor coefficients at `-1`
    /// are all nonnegative.
    pub fn is_absolutely_monotone(&self) -> bool {
        match self {
            Potential::InverseChordal(_) | Potential::Exponential { .. } => true,
            Potential::Polynomial(p) => p.shifted(&-Rational::one()).coeffs().iter().all(|c| !c.is_negative()),
        }
    }

    /// `h^(j) > 0` on `(-1, 1)`, needed for strict bounds.
    pub fn derivative_positive(&self, j: u32) -> bool {
        match self {
            Potential::InverseChordal(_) | Potential::Exponential { .. } => true,
            Potential::Polynomial(p) => {
                let mut d = p.clone();
                for _ in 0..j {
                    d = d.derivative();
                }
                self.is_absolutely_monotone() && !d.is_zero()
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Potential::Exponential { .. })
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Potential::InverseChordal(k) => write!(f, "(2-2t)^-{k}"),
            Potential::Exponential { c, .. } => write!(f, "exp({c}*t)"),
            Potential::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn inverse_chordal_values() {
        let h = Potential::inverse_chordal(1).unwrap();
        assert_eq!(h.value(&int(-1)).unwrap().exact(), Some(&rat(1, 4)));
        assert_eq!(h.value(&rat(1, 2)).unwrap().exact(), Some(&int(1)));
        // h' = 2 (2-2t)^-2
        assert_eq!(h.derivative(1, &int(0)).unwrap().exact(), Some(&rat(1, 2)));
        // h'' = 2 * 4 (2-2t)^-3
        assert_eq!(h.derivative(2, &int(0)).unwrap().exact(), Some(&int(1)));
        assert!(matches!(h.value(&int(1)), Err(Error::Pole(_))));
        let h3 = Potential::inverse_chordal(3).unwrap();
        assert_eq!(h3.derivative(2, &rat(1, 2)).unwrap().exact(), Some(&int(48)));
    }

    #[test]
    fn exponential_encloses() {
        let h = Potential::exponential(int(2)).unwrap();
        let d = h.derivative(3, &rat(1, 2)).unwrap();
        // 8 e = 21.74625462767236...
        assert!(d.lo() > &rat(2174625462, 100_000_000) && d.hi() < &rat(2174625463, 100_000_000));
        assert!(Potential::exponential(int(0)).is_err());
    }

    #[test]
    fn polynomial_monotonicity() {
        let up = Potential::Polynomial(Poly::new(alloc::vec![int(1), int(1)]));
        assert!(up.is_absolutely_monotone());
        let square = Potential::Polynomial(Poly::new(alloc::vec![int(0), int(0), int(1)]));
        assert!(!square.is_absolutely_monotone());
        let shifted = Potential::Polynomial(Poly::new(alloc::vec![int(1), int(2), int(1)]));
        assert!(shifted.is_absolutely_monotone());
        assert!(shifted.derivative_positive(2));
        assert!(!shifted.derivative_positive(3));
    }
}
