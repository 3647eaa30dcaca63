//! Normalized Gegenbauer polynomials `P_i^{(n)}` with `P_i(1) = 1`, and
//! exact expansion of rational polynomials in that basis.
//!
//! The basis comes from the three-term recurrence
//! `t P_i = ((i+n-2) P_{i+1} + i P_{i-1}) / (2i+n-2)`,
//! so no integration against the orthogonality weight is ever performed.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactnum::{Poly, Rational};

/// Basis polynomials for one dimension, grown on demand.
#[derive(Clone, Debug)]
pub struct GegenbauerBasis {
    n: u32,
    polys: Vec<Poly>,
}

impl GegenbauerBasis {
    pub fn new(n: u32) -> Self {
        assert!(n >= 2, "dimension must be at least 2");
        GegenbauerBasis { n, polys: alloc::vec![Poly::one(), Poly::t()] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&mut self, i: usize) -> &Poly {
        let n = Rational::from_integer(self.n.into());
        while self.polys.len() <= i {
            let k = self.polys.len() - 1;
            let kr = Rational::from_integer(k.into());
            let two = Rational::from_integer(2.into());
            let a = (&two * &kr + &n - &two) / (&kr + &n - &two);
            let b = &kr / (&kr + &n - &two);
            let next = &(&Poly::t() * &self.polys[k]).scale(&a) - &self.polys[k - 1].scale(&b);
            self.polys.push(next);
        }
        &self.polys[i]
    }
}

pub fn basis_poly(n: u32, i: usize) -> Poly {
    GegenbauerBasis::new(n).get(i).clone()
}

/// Coefficients `f_i` with `f = sum f_i P_i^{(n)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GegenbauerExpansion {
    pub n: u32,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub holds: bool,
    pub offending: Vec<usize>,
}

impl GegenbauerExpansion {
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn f0(&self) -> Rational {
        self.coeff(0)
    }

    pub fn to_poly(&self) -> Poly {
        let mut basis = GegenbauerBasis::new(self.n);
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (i, c)| &acc + &basis.get(i).scale(c))
    }

    /// `f_i >= 0` for every `i >= from`; when `from == 0` the constant
    /// coefficient must be strictly positive.
    pub fn is_positive_definite(&self, from: usize) -> Positivity {
        let mut offending: Vec<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(from)
            .filter(|(i, c)| c.is_negative() || (*i == 0 && c.is_zero()))
            .map(|(i, _)| i)
            .collect();
        if from == 0 && self.coeffs.is_empty() {
            offending.push(0);
        }
        Positivity { holds: offending.is_empty(), offending }
    }
}

impl fmt::Display for GegenbauerExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub fn is_positive_definite(e: &GegenbauerExpansion, from: usize) -> Positivity {
    e.is_positive_definite(from)
}

/// Expands with a caller-owned basis, avoiding recomputation across calls.
pub fn expand_with(p: &Poly, basis: &mut GegenbauerBasis) -> GegenbauerExpansion {
    let Some(d) = p.degree() else {
        return GegenbauerExpansion { n: basis.n(), coeffs: Vec::new() };
    };
    let mut coeffs = alloc::vec![Rational::zero(); d + 1];
    let mut rest = p.clone();
    for i in (0..=d).rev() {
        let c = rest.coeff(i);
        if c.is_zero() {
            continue;
        }
        let b = basis.get(i);
        let f = &c / b.leading().expect("basis polynomial has full degree");
        rest = &rest - &b.scale(&f);
        coeffs[i] = f;
    }
    debug_assert!(rest.is_zero());
    GegenbauerExpansion { n: basis.n(), coeffs }
}

pub fn expand(p: &Poly, n: u32) -> GegenbauerExpansion {
    expand_with(p, &mut GegenbauerBasis::new(n))
}

/// `P_i^{(n)}(t)` for every `i <= upto`, by the recurrence evaluated
/// pointwise.
pub fn basis_values(n: u32, t: &Rational, upto: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::one(), t.clone()];
    let nn = Rational::from_integer(n.into());
    let two = Rational::from_integer(2.into());
    while out.len() <= upto {
        let k = Rational::from_integer((out.len() - 1).into());
        let last = out.len() - 1;
        let next = ((&two * &k + &nn - &two) * t * &out[last] - &k * &out[last - 1]) / (&k + &nn - &two);
        out.push(next);
    }
    out.truncate(upto + 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, poly_from_factors, rat};

    fn coeffs(text: &str) -> Vec<Rational> {
        text.split_whitespace().map(|s| crate::exactnum::parse_rational(s).unwrap()).collect()
    }

    #[test]
    fn low_degree_basis() {
        assert_eq!(basis_poly(23, 0), Poly::one());
        assert_eq!(basis_poly(23, 1), Poly::t());
        // t P_1 = ((n-1) P_2 + P_0) / n gives P_2 = (n t^2 - 1) / (n - 1).
        assert_eq!(basis_poly(23, 2), Poly::new(alloc::vec![rat(-1, 22), int(0), rat(23, 22)]));
    }

    #[test]
    fn basis_is_normalized_and_satisfies_recurrence() {
        for n in [2u32, 3, 16, 22, 23] {
            let mut b = GegenbauerBasis::new(n);
            for i in 0..10 {
                assert_eq!(b.get(i).eval(&int(1)), int(1));
            }
            for i in 1..9usize {
                let lhs = &Poly::t() * b.get(i);
                let k = Rational::from_integer(i.into());
                let nn = Rational::from_integer(n.into());
                let two = int(2);
                let rhs = (&b.get(i + 1).scale(&(&k + &nn - &two)) + &b.get(i - 1).scale(&k))
                    .scale(&(&two * &k + &nn - &two).recip());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn pointwise_values_match_polynomials() {
        let t = rat(-3, 7);
        let vals = basis_values(22, &t, 8);
        let mut b = GegenbauerBasis::new(22);
        for (i, v) in vals.iter().enumerate() {
            assert_eq!(&b.get(i).eval(&t), v);
        }
    }

    #[test]
    fn printed_expansion_of_47104_certificate() {
        let p = poly_from_factors(
            &[(rat(-3, 5), 2), (rat(-1, 3), 1), (rat(-1, 15), 1), (rat(1, 5), 2), (rat(7, 15), 1)],
            &int(1),
        );
        let e = expand(&p, 23);
        assert_eq!(
            e.coeffs,
            coeffs("256/9703125 3328/7340625 2962432/506503125 13274624/379265625 450208/4708125 13408/58725 50336/121365 416/899")
        );
        assert_eq!(e.to_poly(), p);
    }

    #[test]
    fn printed_expansion_of_93150_certificate() {
        let p = poly_from_factors(
            &[(int(0), 1), (int(-1), 1), (rat(-1, 2), 1), (rat(-1, 4), 1), (rat(1, 4), 1), (rat(1, 2), 1)],
            &int(1),
        );
        assert_eq!(expand(&p, 23).coeffs, coeffs("1/66240 1/2880 671/192096 33/1160 187/1395 176/261 4576/8091"));
    }

    #[test]
    fn positivity() {
        assert_eq!(expand(&Poly::one(), 9).coeffs, alloc::vec![int(1)]);
        let neg = Poly::new(alloc::vec![int(0), int(0), int(-1)]);
        let v = expand(&neg, 23).is_positive_definite(1);
        assert!(!v.holds);
        assert_eq!(v.offending, alloc::vec![2]);
        let p5 = poly_from_factors(&[(rat(-3, 5), 1), (rat(-1, 3), 1), (rat(-1, 15), 2), (rat(1, 5), 1)], &int(1));
        let e = expand(&p5, 23);
        assert_eq!(e.f0(), rat(1096, 388125));
        assert!(e.is_positive_definite(1).holds);
        let zero_f0 = GegenbauerExpansion { n: 5, coeffs: alloc::vec![int(0), int(1)] };
        assert!(zero_f0.is_positive_definite(1).holds);
        assert_eq!(zero_f0.is_positive_definite(0).offending, alloc::vec![0]);
    }
}
