//! LP certificates for `T`-avoiding codes, the three-distance
//! cardinality bound and the registry of published certificates.

mod registry;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

pub use registry::{
    published_profile, registry, reproduce, reproduce_entry, EnergyCase, Entry, EntryKind, ProfileSource,
    PublishedProfiles, Row, RowStatus,
};

use crate::designs::{energy, is_t_avoiding, moments, CodeProfile, Potential};
use crate::error::{Error, Result};
use crate::exactnum::{int, verify_sign, IntervalSet, Poly, RatInterval, Rational, Sign};
use crate::gegenbauer::{expand, GegenbauerExpansion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    MaxCode { s: Rational },
    Design { tau: usize },
    Energy { h: Potential, len: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, holds: bool, detail: impl Into<String>) -> Check {
        Check { name, holds, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: Kind,
    pub n: u32,
    pub t: IntervalSet,
    pub polynomial: Poly,
    pub expansion: GegenbauerExpansion,
    /// `f(1)/f_0`, or `N^2 (f_0 - f(1)/N)` for energy.
    pub bound: Option<RatInterval>,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.bound.is_some() && self.checks.iter().all(|c| c.holds)
    }

    pub fn exact_bound(&self) -> Option<&Rational> {
        self.bound.as_ref().and_then(RatInterval::exact)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Largest `m` with `f_1, ..., f_m > 0`. An attaining code of a
    /// maximal-code certificate is an `m`-design.
    pub fn forced_strength(&self) -> usize {
        self.expansion.coeffs.iter().skip(1).take_while(|c| c.is_positive()).count()
    }

    /// Conditions an attaining code must meet, evaluated on `p`.
    pub fn attainment(&self, p: &CodeProfile) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        let avoid = is_t_avoiding(p, &self.t);
        out.push(Check::new("avoids T", avoid.holds, format!("offending {:?}", display_all(&avoid.offending))));
        match &self.kind {
            Kind::MaxCode { s } => {
                let bound = self.exact_bound().cloned().unwrap_or_else(Rational::zero);
                let len = int(p.len as i64);
                out.push(Check::new("|C| = bound", len == bound, format!("|C| = {len}, bound {bound}")));
                let s_ok = p.s_max().is_none_or(|m| m <= s);
                out.push(Check::new("s(C) <= s", s_ok, format!("s(C) = {:?}", p.s_max().map(|x| x.to_string()))));
                out.push(self.zero_check(p));
            }
            Kind::Design { tau } => {
                let bound = self.exact_bound().cloned().unwrap_or_else(Rational::zero);
                let len = int(p.len as i64);
                out.push(Check::new("|C| = bound", len == bound, format!("|C| = {len}, bound {bound}")));
                if p.is_full() {
                    let m = moments(p, *tau)?;
                    out.push(Check::new("design strength", m.iter().all(Zero::is_zero), format!("M_1..M_{tau} = 0")));
                }
                out.push(self.zero_check(p));
            }
            Kind::Energy { h, len } => {
                let e = energy(p, h)?;
                let bound = self.bound.clone().unwrap_or_else(RatInterval::zero);
                let same = match (e.exact(), bound.exact()) {
                    (Some(a), Some(b)) => a == b,
                    _ => e.contains(&bound.midpoint()) || bound.contains(&e.midpoint()),
                };
                out.push(Check::new("E_h(C) = bound", same && p.len as u64 == *len, format!("E_h(C) = {e}, bound {bound}")));
            }
        }
        Ok(out)
    }

    fn zero_check(&self, p: &CodeProfile) -> Check {
        let off: Vec<&Rational> = p.inner_products.iter().filter(|x| !self.polynomial.eval(x).is_zero()).collect();
        Check::new("I(C) within zeros of f", off.is_empty(), format!("nonzero at {:?}", display_all(&off)))
    }
}

fn display_all<T: core::fmt::Display>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| format!("{x}")).collect()
}


fn positivity_check(e: &GegenbauerExpansion, from: usize, name: &'static str) -> Check {
    let v = e.is_positive_definite(from);
    Check::new(name, v.holds, if v.holds { String::new() } else { format!("bad coefficients at {:?}", v.offending) })
}

fn sign_check(name: &'static str, f: &Poly, t: &IntervalSet, hi: &Rational, sign: Sign) -> Result<Check> {
    let region = t.complement_in(&-Rational::one(), hi);
    let v = verify_sign(f, &region, sign)?;
    let detail = match &v.witness {
        Some(w) => format!("fails at t = {w} on {region}"),
        None => format!("on {region}"),
    };
    Ok(Check::new(name, v.holds, detail))
}

fn ratio_bound(f: &Poly, e: &GegenbauerExpansion) -> Option<RatInterval> {
    let f0 = e.f0();
    f0.is_positive().then(|| RatInterval::point(f.eval(&Rational::one()) / f0))
}

/// Upper bound `f(1)/f_0` on `T`-avoiding codes with inner products at
/// most `s`.
pub fn certify_max(f: &Poly, n: u32, s: &Rational, t: &IntervalSet) -> Result<Certificate> {
    if *s < -Rational::one() || *s >= Rational::one() {
        return Err(Error::Precondition(format!("s = {s} is outside [-1, 1)")));
    }
    if let Some(iv) = t.intervals().iter().find(|iv| iv.hi > *s) {
        return Err(Error::InvalidIntervalSet(format!("({}, {}) is not inside [-1, {s})", iv.lo, iv.hi)));
    }
    let e = expand(f, n);
    let checks = alloc::vec![
        sign_check("f <= 0 on [-1,s] \\ T", f, t, s, Sign::NonPositive)?,
        positivity_check(&e, 0, "f_0 > 0 and f_i >= 0"),
    ];
    Ok(Certificate {
        kind: Kind::MaxCode { s: s.clone() },
        n,
        t: t.clone(),
        polynomial: f.clone(),
        bound: ratio_bound(f, &e),
        expansion: e,
        checks,
    })
}

/// Lower bound `f(1)/f_0` on `T`-avoiding `tau`-designs.
pub fn certify_design(f: &Poly, n: u32, tau: usize, t: &IntervalSet) -> Result<Certificate> {
    let e = expand(f, n);
    let high: Vec<usize> = e.coeffs.iter().enumerate().skip(tau + 1).filter(|(_, c)| c.is_positive()).map(|(i, _)| i).collect();
    let detail = if f.degree().unwrap_or(0) <= tau {
        "deg f <= tau".into()
    } else {
        format!("positive at {high:?}")
    };
    let checks = alloc::vec![
        sign_check("f >= 0 on [-1,1] \\ T", f, t, &Rational::one(), Sign::NonNegative)?,
        Check::new("f_i <= 0 for i > tau", high.is_empty(), detail),
        Check::new("f_0 > 0", e.f0().is_positive(), format!("f_0 = {}", e.f0())),
    ];
    Ok(Certificate { kind: Kind::Design { tau }, n, t: t.clone(), polynomial: f.clone(), bound: ratio_bound(f, &e), expansion: e, checks })
}

/// Lower bound `N^2 (f_0 - f(1)/N)` on the `h`-energy of `T`-avoiding
/// codes of size `len`.
///
/// `f <= h` is decided exactly for polynomial and inverse chordal
/// potentials. For the exponential family use
/// [`crate::interpolate::build_energy_certificate`], which certifies the
/// inequality through the interpolation error instead.
pub fn certify_energy(f: &Poly, h: &Potential, n: u32, len: u64, t: &IntervalSet) -> Result<Certificate> {
    let e = expand(f, n);
    let e1 = match h {
        Potential::Polynomial(p) => sign_check("f <= h on [-1,1] \\ T", &(p - f), t, &Rational::one(), Sign::NonNegative)?,
        Potential::InverseChordal(k) => {
            // On [-1, 1), f <= (2-2t)^-k  <=>  1 - f (2-2t)^k >= 0; at t = 1
            // the left side is 1.
            let chord = Poly::new(alloc::vec![int(2), int(-2)]).pow(*k);
            let g = &Poly::one() - &(f * &chord);
            sign_check("f <= h on [-1,1) \\ T", &g, t, &Rational::one(), Sign::NonNegative)?
        }
        Potential::Exponential { .. } => {
            return Err(Error::CannotCertify(format!(
                "f <= {h} is not decidable exactly; build the certificate by interpolation"
            )))
        }
    };
    let big_n = int(len as i64);
    let bound = &big_n * &big_n * e.f0() - &big_n * f.eval(&Rational::one());
    let checks = alloc::vec![e1, positivity_check(&e, 1, "f_i >= 0 for i >= 1")];
    Ok(Certificate {
        kind: Kind::Energy { h: h.clone(), len },
        n,
        t: t.clone(),
        polynomial: f.clone(),
        bound: Some(RatInterval::point(bound)),
        expansion: e,
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgsBound {
    pub bound: Rational,
    pub conditions: Vec<Check>,
    /// The maximal-code certificate on `(t-alpha)(t-beta)(t-gamma)` with
    /// `T = (alpha, beta)` and `s = gamma`.
    pub lp: Certificate,
}

/// `-n (1-a)(1-b)(1-g) / (a + b + g + n a b g)` for codes with inner
/// products in `[-1, a] ∪ [b, g]`.
pub fn dgs_three_distance_bound(n: u32, a: &Rational, b: &Rational, g: &Rational) -> Result<DgsBound> {
    if !(-Rational::one() <= *a && a < b && b < g && *g < Rational::one()) {
        return Err(Error::Precondition("need -1 <= alpha < beta < gamma < 1".into()));
    }
    let nn = int(i64::from(n));
    let sum = a + b + g;
    let pairs = a * b + b * g + g * a;
    let floor = -int(3) / (&nn + int(2));
    let denom = &sum + &nn * a * b * g;
    let conditions = alloc::vec![
        Check::new("alpha+beta+gamma <= 0", !sum.is_positive(), format!("{sum}")),
        Check::new("alpha*beta+beta*gamma+gamma*alpha >= -3/(n+2)", pairs >= floor, format!("{pairs} vs {floor}")),
        Check::new("alpha+beta+gamma+n*alpha*beta*gamma < 0", denom.is_negative(), format!("{denom}")),
    ];
    if let Some(bad) = conditions.iter().find(|c| !c.holds) {
        return Err(Error::ConditionViolated(format!("{} fails: {}", bad.name, bad.detail)));
    }
    let bound = -&nn * (int(1) - a) * (int(1) - b) * (int(1) - g) / denom;
    let f = &(&Poly::linear(a) * &Poly::linear(b)) * &Poly::linear(g);
    let lp = certify_max(&f, n, g, &IntervalSet::open(&[(a.clone(), b.clone())])?)?;
    if lp.exact_bound() != Some(&bound) || !lp.is_valid() {
        return Err(Error::ConditionViolated(format!("LP certificate disagrees: {:?} vs {bound}", lp.bound)));
    }
    Ok(DgsBound { bound, conditions, lp })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainIdentity {
    /// `f(1) N + sum over x != y of f(x.y)`
    pub lhs: Rational,
    /// `f_0 N^2 + sum_i f_i M_i`
    pub rhs: Rational,
}

impl MainIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn main_identity(f: &Poly, p: &CodeProfile) -> Result<MainIdentity> {
    let pairs = p.pair_counts.as_ref().ok_or(Error::NeedFullProfile)?;
    let big_n = int(p.len as i64);
    let e = expand(f, p.n as u32);
    let lhs = f.eval(&Rational::one()) * &big_n
        + pairs.iter().map(|(t, &c)| Rational::from_integer(c.into()) * f.eval(t)).sum::<Rational>();
    let m = moments(p, e.coeffs.len().saturating_sub(1))?;
    let rhs = e.f0() * &big_n * &big_n + e.coeffs.iter().skip(1).zip(&m).map(|(a, b)| a * b).sum::<Rational>();
    Ok(MainIdentity { lhs, rhs })
}
