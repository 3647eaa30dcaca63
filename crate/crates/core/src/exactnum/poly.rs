use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{pow, Rational};

/// Dense univariate polynomial; `coeffs[i]` multiplies `t^i`.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn t() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `t - root`.
    pub fn linear(root: &Rational) -> Self {
        Poly::new(vec![-root.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the absolute value of the leading coefficient. Positive
    /// rescaling keeps every sign, which is what Sturm chains need.
    pub fn normalize_abs(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.abs().recip()),
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let q = &rem[top] / &lead;
            if !q.is_zero() {
                for (k, dc) in divisor.coeffs.iter().enumerate() {
                    rem[top - d + k] -= &q * dc;
                }
            }
            quot[top - d] = q;
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `p(t + shift)`, used to read off derivatives at a point.
    pub fn shifted(&self, shift: &Rational) -> Poly {
        let mut acc = Poly::zero();
        let base = Poly::new(vec![shift.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &base) + &Poly::constant(c.clone());
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `leading * prod (t - root)^mult`, the form every published certificate
/// is written in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factored {
    pub leading: Rational,
    pub factors: Vec<(Rational, u32)>,
}

impl Factored {
    pub fn new(leading: Rational, factors: Vec<(Rational, u32)>) -> Self {
        Factored { leading, factors }
    }

    pub fn monic(factors: Vec<(Rational, u32)>) -> Self {
        Factored::new(Rational::one(), factors)
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn to_poly(&self) -> Poly {
        poly_from_factors(&self.factors, &self.leading)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.factors
            .iter()
            .fold(self.leading.clone(), |acc, (r, m)| acc * pow(&(t - r), *m))
    }

    /// Distinct roots in increasing order.
    pub fn roots(&self) -> Vec<Rational> {
        let mut roots: Vec<Rational> = self.factors.iter().map(|(r, _)| r.clone()).collect();
        roots.sort();
        roots.dedup();
        roots
    }

    /// Multiplicity of `root`, summing repeated factor entries.
    pub fn multiplicity(&self, root: &Rational) -> u32 {
        self.factors.iter().filter(|(r, _)| r == root).map(|(_, m)| m).sum()
    }
}

pub fn poly_from_factors(factors: &[(Rational, u32)], leading: &Rational) -> Poly {
    let mut acc = Poly::constant(leading.clone());
    for (root, mult) in factors {
        let lin = Poly::linear(root);
        for _ in 0..*mult {
            acc = &acc * &lin;
        }
    }
    acc
}
