use alloc::vec::Vec;

use num_traits::Zero;

use super::{sign_of, Poly, Rational};
use crate::error::{Error, Result};

/// Sturm chain `p, p', -rem(p, p'), ...`, each link rescaled by a positive
/// constant.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = alloc::vec![p.normalize_abs()];
    let mut next = p.derivative().normalize_abs();
    while !next.is_zero() {
        let rem = chain.last().unwrap().div_rem(&next).1;
        chain.push(next);
        next = (-&rem).normalize_abs();
    }
    Ok(chain)
}

fn sign_changes(chain: &[Poly], t: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let s = sign_of(&p.eval(t));
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// `p / gcd(p, p')`: same roots, all simple.
pub fn square_free_part(p: &Poly) -> Poly {
    if p.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0
}

/// Yun's algorithm. Returns `(a_i, i)` with `p = c * prod a_i^i`, every
/// `a_i` monic, square-free, non-constant and pairwise coprime.
pub fn square_free_decomposition(p: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Number of distinct real roots of `p` between `lo` and `hi`, each end
/// included unless flagged open.
pub fn count_roots(p: &Poly, lo: &Rational, hi: &Rational, lo_open: bool, hi_open: bool) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo > hi {
        return Ok(0);
    }
    let q = square_free_part(p);
    if lo == hi {
        return Ok(usize::from(!lo_open && !hi_open && q.eval(lo).is_zero()));
    }
    let chain = sturm_sequence(&q)?;
    // For square-free q, V(lo) - V(hi) counts roots in (lo, hi].
    let mut n = sign_changes(&chain, lo) - sign_changes(&chain, hi);
    if !lo_open && q.eval(lo).is_zero() {
        n += 1;
    }
    if hi_open && q.eval(hi).is_zero() {
        n -= 1;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, poly_from_factors, rat};

    #[test]
    fn simple_counts() {
        let p = Poly::new(alloc::vec![rat(-1, 4), int(0), int(1)]);
        assert_eq!(count_roots(&p, &int(-1), &int(1), false, false).unwrap(), 2);
        let q = Poly::new(alloc::vec![int(1), int(0), int(1)]);
        assert_eq!(count_roots(&q, &int(-1), &int(1), false, false).unwrap(), 0);
        assert_eq!(
            count_roots(&Poly::zero(), &int(0), &int(1), false, false),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn endpoint_flags() {
        let p = poly_from_factors(&[(int(0), 1), (rat(1, 2), 3)], &int(2));
        assert_eq!(count_roots(&p, &int(0), &rat(1, 2), false, false).unwrap(), 2);
        assert_eq!(count_roots(&p, &int(0), &rat(1, 2), true, false).unwrap(), 1);
        assert_eq!(count_roots(&p, &int(0), &rat(1, 2), false, true).unwrap(), 1);
        assert_eq!(count_roots(&p, &int(0), &rat(1, 2), true, true).unwrap(), 0);
        assert_eq!(count_roots(&p, &int(0), &int(0), false, false).unwrap(), 1);
    }

    #[test]
    fn certificate_root_count_ignores_multiplicity() {
        let p = poly_from_factors(
            &[
                (rat(-3, 5), 2),
                (rat(-1, 3), 1),
                (rat(-1, 15), 1),
                (rat(1, 5), 2),
                (rat(7, 15), 1),
            ],
            &int(1),
        );
        assert_eq!(count_roots(&p, &int(-1), &int(1), false, false).unwrap(), 5);
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let p = poly_from_factors(&[(int(1), 3), (rat(-2, 3), 1), (int(0), 2), (rat(1, 7), 2)], &rat(-5, 2));
        let dec = square_free_decomposition(&p);
        let mult: Vec<(usize, u32)> = dec.iter().map(|(a, i)| (a.degree().unwrap(), *i)).collect();
        assert_eq!(mult, alloc::vec![(1, 1), (2, 2), (1, 3)]);
        let rebuilt = dec.iter().fold(Poly::one(), |acc, (a, i)| &acc * &a.pow(*i));
        assert_eq!(rebuilt.scale(&rat(-5, 2)), p);
    }
}
