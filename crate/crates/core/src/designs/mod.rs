//! Profiles, moments, design strength, avoidance, energies and the
//! quadrature system.

mod potential;
mod profile;

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use potential::{Potential, DEFAULT_BITS};
pub use profile::{profile, sample_rows, tally_rows, CodeProfile, Distribution, ProfileMode, RowTally};

use crate::error::{Error, Result};
use crate::exactnum::{int, pow, solve, IntervalSet, Poly, RatInterval, Rational};
use crate::gegenbauer::{basis_values, expand, GegenbauerBasis};

fn pairs(p: &CodeProfile) -> Result<&Distribution> {
    p.pair_counts.as_ref().ok_or(Error::NeedFullProfile)
}

fn count(c: u64) -> Rational {
    Rational::from_integer(c.into())
}

/// `M_i = sum over ordered pairs (x, y), x = y included, of P_i(x.y)` for
/// `i = 1..=upto`.
pub fn moments(p: &CodeProfile, upto: usize) -> Result<Vec<Rational>> {
    let pc = pairs(p)?;
    let n = p.n as u32;
    let mut m = alloc::vec![count(p.len as u64); upto + 1];
    for (t, &c) in pc {
        let vals = basis_values(n, t, upto);
        for (mi, v) in m.iter_mut().zip(vals) {
            *mi += count(c) * v;
        }
    }
    m.remove(0);
    Ok(m)
}

/// Largest `tau <= max_check` with `M_1 = ... = M_tau = 0`.
pub fn design_strength(p: &CodeProfile, max_check: usize) -> Result<usize> {
    let m = moments(p, max_check)?;
    Ok(m.iter().take_while(|v| v.is_zero()).count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Avoidance {
    pub holds: bool,
    pub offending: Vec<Rational>,
}

/// No inner product of the code lies in `T`.
pub fn is_t_avoiding(p: &CodeProfile, t: &IntervalSet) -> Avoidance {
    let offending: Vec<Rational> = p.inner_products.iter().filter(|x| t.contains(x)).cloned().collect();
    Avoidance { holds: offending.is_empty(), offending }
}

/// `sum over ordered pairs x != y of h(x.y)`.
pub fn energy(p: &CodeProfile, h: &Potential) -> Result<RatInterval> {
    let pc = pairs(p)?;
    let mut total = RatInterval::zero();
    for (t, &c) in pc {
        total = &total + &h.value(t)?.scale(&count(c));
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvedDistribution {
    pub nodes: Vec<Rational>,
    pub frequencies: Vec<Rational>,
}

impl SolvedDistribution {
    /// Counts, if every frequency is a nonnegative integer.
    pub fn as_counts(&self) -> Option<Vec<u64>> {
        self.frequencies
            .iter()
            .map(|f| {
                (f.is_integer() && !f.is_negative()).then(|| f.to_integer().try_into().ok()).flatten()
            })
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.as_counts().is_some()
    }
}

/// Solves `N f_0 = f(1) + sum_i A_i f(t_i)` for the `A_i`, using
/// `f = 1, t, ..., t^(d-1)` with `d` the number of nodes.
pub fn solve_distribution(nodes: &[Rational], len: u64, n: u32, tau: usize) -> Result<SolvedDistribution> {
    let d = nodes.len();
    if d == 0 {
        return Err(Error::Precondition("no nodes".into()));
    }
    if tau + 1 < d {
        return Err(Error::Precondition(alloc::format!("strength {tau} is below the {d} nodes minus one")));
    }
    if nodes.iter().any(|t| t.is_one()) {
        return Err(Error::Precondition("node 1 is implicit".into()));
    }
    let mut basis = GegenbauerBasis::new(n);
    let big_n = count(len);
    let mut a = Vec::with_capacity(d);
    let mut b = Vec::with_capacity(d);
    for m in 0..d {
        a.push(nodes.iter().map(|t| pow(t, m as u32)).collect());
        let f = Poly::monomial(Rational::one(), m);
        let f0 = crate::gegenbauer::expand_with(&f, &mut basis).f0();
        b.push(&big_n * f0 - Rational::one());
    }
    let frequencies = solve(&a, &b)?;
    Ok(SolvedDistribution { nodes: nodes.to_vec(), frequencies })
}

/// Checks `N f_0 = f(1) + (1/N) sum over ordered pairs of f(x.y)`.
pub fn verify_quadrature(p: &CodeProfile, f: &Poly, tau: usize) -> Result<bool> {
    if f.degree().unwrap_or(0) > tau {
        return Err(Error::Precondition("degree exceeds the design strength".into()));
    }
    let pc = pairs(p)?;
    let big_n = count(p.len as u64);
    let lhs = &big_n * expand(f, p.n as u32).f0();
    let sum: Rational = pc.iter().map(|(t, &c)| count(c) * f.eval(t)).sum();
    Ok(lhs == f.eval(&Rational::one()) + sum / big_n)
}

/// True when `len` divides every pair count, i.e. the counts are
/// compatible with a shared distance distribution.
pub fn counts_divisible(p: &CodeProfile) -> bool {
    let n = p.len as u64;
    p.pair_counts.as_ref().is_some_and(|pc| pc.values().all(|c| c.is_multiple_of(&n)))
}

/// Gegenbauer 0-coefficient identity: for a design of strength at least
/// `deg h`, `E_h = N^2 h_0 - N h(1)`.
pub fn polynomial_energy_identity(len: u64, n: u32, h: &Poly) -> Rational {
    let big_n = count(len);
    &big_n * &big_n * expand(h, n).f0() - big_n * h.eval(&int(1))
}
