//! Hermite interpolation in Newton form and the energy certificates built
//! from it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::designs::Potential;
use crate::error::{Error, Result};
use crate::exactnum::{int, verify_sign, IntervalSet, Poly, RatInterval, Rational, Sign};
use crate::gegenbauer::{expand_with, GegenbauerBasis, GegenbauerExpansion};

/// Nondecreasing list of interpolation nodes, repeats allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeMultiset {
    nodes: Vec<Rational>,
}

impl NodeMultiset {
    pub fn new(mut nodes: Vec<Rational>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Precondition("empty node multiset".into()));
        }
        nodes.sort();
        Ok(NodeMultiset { nodes })
    }

    pub fn from_multiplicities(pairs: &[(Rational, usize)]) -> Result<Self> {
        let nodes = pairs.iter().flat_map(|(t, m)| core::iter::repeat_n(t.clone(), *m)).collect();
        NodeMultiset::new(nodes)
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Degree of the interpolant.
    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Distinct nodes with multiplicities.
    pub fn grouped(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for t in &self.nodes {
            match out.last_mut() {
                Some((last, m)) if last == t => *m += 1,
                _ => out.push((t.clone(), 1)),
            }
        }
        out
    }

    /// `prod (t - t_i)` over all nodes.
    pub fn node_product(&self) -> Poly {
        self.nodes.iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear(r))
    }
}

impl fmt::Display for NodeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (t, m)) in self.grouped().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if *m == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{t}^{m}")?;
            }
        }
        f.write_str("}")
    }
}

fn factorial(k: u32) -> Rational {
    (1..=k).map(|i| int(i64::from(i))).product()
}

/// Newton coefficients `h[t_1], h[t_1,t_2], ..., h[t_1..t_m]`, from the
/// divided-difference table. A run of equal nodes uses `h^(k)(t) / k!`.
pub fn newton_coefficients(h: &Potential, m: &NodeMultiset) -> Result<Vec<RatInterval>> {
    let t = m.nodes();
    let len = t.len();
    let mut col: Vec<RatInterval> = t.iter().map(|x| h.value(x)).collect::<Result<_>>()?;
    let mut out = alloc::vec![col[0].clone()];
    for j in 1..len {
        let mut next = Vec::with_capacity(len - j);
        for i in 0..len - j {
            let v = if t[i] == t[i + j] {
                h.derivative(j as u32, &t[i])?.div_exact(&factorial(j as u32))
            } else {
                (&col[i + 1] - &col[i]).div_exact(&(&t[i + j] - &t[i]))
            };
            next.push(v);
        }
        out.push(next[0].clone());
        col = next;
    }
    Ok(out)
}

/// `h[t_1, ..., t_k]` for the given nodes in any order.
pub fn divided_difference(h: &Potential, nodes: &[Rational]) -> Result<RatInterval> {
    let m = NodeMultiset::new(nodes.to_vec())?;
    Ok(newton_coefficients(h, &m)?.pop().expect("at least one node"))
}

/// `P_i = (t - t_1) ... (t - t_i)` for `i = 1 .. |m| - 1`.
pub fn partial_products(m: &NodeMultiset) -> Vec<Poly> {
    let mut out = Vec::with_capacity(m.len().saturating_sub(1));
    let mut acc = Poly::one();
    for r in &m.nodes()[..m.len() - 1] {
        acc = &acc * &Poly::linear(r);
        out.push(acc.clone());
    }
    out
}

/// Dense Hermite interpolant. Needs a potential with rational values.
pub fn hermite_interpolant(h: &Potential, m: &NodeMultiset) -> Result<Poly> {
    let coeffs = newton_coefficients(h, m)?;
    let mut total = Poly::zero();
    let mut basis = Poly::one();
    for (i, c) in coeffs.iter().enumerate() {
        let c = c.exact().ok_or_else(|| Error::Precondition("potential has no exact rational values".into()))?;
        total = &total + &basis.scale(c);
        if i + 1 < m.len() {
            basis = &basis * &Poly::linear(&m.nodes()[i]);
        }
    }
    Ok(total)
}

/// Nodes of `inner` with multiplicity 1 at endpoints of `t` and 2 elsewhere.
pub fn build_multiset(inner: &[Rational], t: &IntervalSet, target_degree: usize) -> Result<NodeMultiset> {
    let ends = t.endpoints();
    for e in &ends {
        if !inner.contains(e) && *e != -Rational::one() {
            return Err(Error::Precondition(format!("endpoint {e} of T is not an inner product of the code")));
        }
    }
    let pairs: Vec<(Rational, usize)> =
        inner.iter().map(|x| (x.clone(), if ends.contains(x) { 1 } else { 2 })).collect();
    let m = NodeMultiset::from_multiplicities(&pairs)?;
    if m.len() != target_degree + 1 {
        return Err(Error::MultisetMismatch { expected: target_degree + 1, found: m.len(), nodes: m.nodes });
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCheck {
    /// `i` in `P_i`.
    pub index: usize,
    pub expansion: Option<GegenbauerExpansion>,
    /// Accepted without expansion: every factor is `t - c` with `c <= 0`.
    pub by_product_rule: bool,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct EnergyCertificate {
    pub h: Potential,
    pub multiset: NodeMultiset,
    pub n: u32,
    pub len: u64,
    pub t: IntervalSet,
    pub newton: Vec<RatInterval>,
    pub interpolant: Option<Poly>,
    pub partial_products: Vec<Poly>,
    pub product_checks: Vec<ProductCheck>,
    pub newton_nonnegative: bool,
    pub node_product_nonnegative: bool,
    pub node_product_witness: Option<Rational>,
    /// `h^(|m|) > 0` on `(-1, 1)`, which the error term needs.
    pub top_derivative_positive: bool,
    pub bound: RatInterval,
    pub failure: Option<String>,
}

impl EnergyCertificate {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Positivity {
    /// Skip partial products whose factors all have nonpositive roots.
    #[default]
    ProductRule,
    /// Expand every partial product.
    Strict,
}

/// Interpolates `h` on the multiset built from `inner` and `t`, checks the
/// certificate conditions and evaluates the bound `N^2 H_0 - N H(1)`.
pub fn build_energy_certificate(
    h: &Potential,
    inner: &[Rational],
    t: &IntervalSet,
    n: u32,
    len: u64,
    positivity: Positivity,
) -> Result<EnergyCertificate> {
    let ends = t.endpoints();
    let degree = inner.iter().map(|x| if ends.contains(x) { 1 } else { 2 }).sum::<usize>() - 1;
    let m = build_multiset(inner, t, degree)?;
    certificate_on(h, m, t, n, len, positivity)
}

pub fn certificate_on(
    h: &Potential,
    m: NodeMultiset,
    t: &IntervalSet,
    n: u32,
    len: u64,
    positivity: Positivity,
) -> Result<EnergyCertificate> {
    let newton = newton_coefficients(h, &m)?;
    let products = partial_products(&m);
    let mut basis = GegenbauerBasis::new(n);
    let mut checks = Vec::with_capacity(products.len());
    for (k, p) in products.iter().enumerate() {
        let all_nonpositive = m.nodes()[..=k].iter().all(|r| !r.is_positive());
        if all_nonpositive && positivity == Positivity::ProductRule {
            checks.push(ProductCheck { index: k + 1, expansion: None, by_product_rule: true, holds: true });
            continue;
        }
        let e = expand_with(p, &mut basis);
        let holds = e.is_positive_definite(1).holds;
        checks.push(ProductCheck { index: k + 1, expansion: Some(e), by_product_rule: false, holds });
    }
    let newton_nonnegative = newton.iter().all(|c| !c.lo().is_negative());
    let region = t.complement_in(&-Rational::one(), &Rational::one());
    let verdict = verify_sign(&m.node_product(), &region, Sign::NonNegative)?;
    let top_derivative_positive = h.is_absolutely_monotone() && h.derivative_positive(m.len() as u32);

    // Bound: sum_i c_i (N^2 (P_i)_0 - N P_i(1)), with P_0 = 1.
    let big_n = Rational::from_integer(len.into());
    let term = |p: &Poly, basis: &mut GegenbauerBasis| -> Rational {
        &big_n * &big_n * expand_with(p, basis).f0() - &big_n * p.eval(&Rational::one())
    };
    let mut bound = newton[0].scale(&term(&Poly::one(), &mut basis));
    for (c, p) in newton[1..].iter().zip(&products) {
        bound = &bound + &c.scale(&term(p, &mut basis));
    }
    let interpolant = if h.is_exact() { Some(hermite_interpolant(h, &m)?) } else { None };

    let failure = if let Some(bad) = checks.iter().find(|c| !c.holds) {
        Some(format!("partial product P_{} is not positive definite", bad.index))
    } else if !newton_nonnegative {
        Some("a Newton coefficient is negative".into())
    } else if !verdict.holds {
        Some(format!("node product is negative at {}", verdict.witness.clone().unwrap_or_else(Rational::zero)))
    } else if !top_derivative_positive {
        Some(format!("potential is not absolutely monotone up to order {}", m.len()))
    } else {
        None
    };
    Ok(EnergyCertificate {
        h: h.clone(),
        multiset: m,
        n,
        len,
        t: t.clone(),
        newton,
        interpolant,
        partial_products: products,
        product_checks: checks,
        newton_nonnegative,
        node_product_nonnegative: verdict.holds,
        node_product_witness: verdict.witness,
        top_derivative_positive,
        bound,
        failure,
    })
}

/// `g = a t^2 + b t + c` with `g(p) = h(p)`, `g(q) = h(q)`, `g'(q) = h'(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgQuadratic {
    pub g: Poly,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    /// `(g_0, g_1, g_2)` in dimension `n`.
    pub expansion: (Rational, Rational, Rational),
}

pub fn srg_quadratic(h: &Potential, p: &Rational, q: &Rational, n: u32) -> Result<SrgQuadratic> {
    if !(p.is_negative() && q.is_positive()) {
        return Err(Error::Precondition("need p < 0 < q".into()));
    }
    if (p + q).is_positive() {
        return Err(Error::ConditionViolated(format!("p + q = {} > 0; use the other eigenspace", p + q)));
    }
    let exact = |v: RatInterval| -> Result<Rational> {
        v.exact().cloned().ok_or_else(|| Error::Precondition("potential has no exact rational values".into()))
    };
    let hp = exact(h.value(p)?)?;
    let hq = exact(h.value(q)?)?;
    let dq = exact(h.derivative(1, q)?)?;
    let d = q - p;
    let a = (&hp - &hq) / (&d * &d) + &dq / &d;
    let b = int(2) * q * (&hq - &hp) / (&d * &d) - (q + p) * &dq / &d;
    let c = p * q * &dq / &d + (q * q * &hp + p * (p - int(2) * q) * &hq) / (&d * &d);
    let g = Poly::new(alloc::vec![c.clone(), b.clone(), a.clone()]);
    let nn = int(i64::from(n));
    let expansion = (&a / &nn + &c, b.clone(), (&nn - int(1)) * &a / &nn);
    if g.eval(p) != hp || g.eval(q) != hq || g.derivative().eval(q) != dq {
        return Err(Error::ConditionViolated("quadratic does not interpolate the potential".into()));
    }
    Ok(SrgQuadratic { g, a, b, c, expansion })
}

impl SrgQuadratic {
    /// `v^2 g_0 - v g(1)`.
    pub fn bound(&self, v: u64) -> Rational {
        let v = Rational::from_integer(v.into());
        &v * &v * &self.expansion.0 - v * self.g.eval(&Rational::one())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThreeDistanceGap {
    /// `T = (alpha, beta)`, nodes `{alpha, beta, gamma, gamma}`.
    AlphaBeta,
    /// `T = (beta, gamma)`, nodes `{alpha, alpha, beta, gamma}`.
    BetaGamma,
}

/// Energy certificate for a three-distance 3-design. Every partial product
/// is expanded; the constant coefficients play no role.
pub fn three_distance_certificate(
    h: &Potential,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    gap: ThreeDistanceGap,
    n: u32,
    len: u64,
) -> Result<EnergyCertificate> {
    if !(-Rational::one() <= *alpha && alpha < beta && beta < gamma && *gamma < Rational::one()) {
        return Err(Error::Precondition("need -1 <= alpha < beta < gamma < 1".into()));
    }
    let pair_sum = alpha * beta + beta * gamma + gamma * alpha;
    let floor = -int(3) / int(i64::from(n) + 2);
    if pair_sum < floor {
        return Err(Error::ConditionViolated(format!(
            "alpha*beta + beta*gamma + gamma*alpha = {pair_sum} < {floor}"
        )));
    }
    let sum = alpha + beta + gamma;
    if sum.is_positive() {
        return Err(Error::ConditionViolated(format!("alpha + beta + gamma = {sum} > 0")));
    }
    if !gamma.is_positive() {
        return Err(Error::ConditionViolated("gamma must be positive".into()));
    }
    let (t, nodes) = match gap {
        ThreeDistanceGap::AlphaBeta => (
            IntervalSet::open(&[(alpha.clone(), beta.clone())])?,
            alloc::vec![alpha.clone(), beta.clone(), gamma.clone(), gamma.clone()],
        ),
        ThreeDistanceGap::BetaGamma => (
            IntervalSet::open(&[(beta.clone(), gamma.clone())])?,
            alloc::vec![alpha.clone(), alpha.clone(), beta.clone(), gamma.clone()],
        ),
    };
    certificate_on(h, NodeMultiset::new(nodes)?, &t, n, len, Positivity::Strict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{poly_from_factors, rat};
    use alloc::string::ToString;
    use alloc::vec;

    fn riesz() -> Potential {
        Potential::inverse_chordal(1).unwrap()
    }

    fn square() -> Potential {
        Potential::Polynomial(Poly::new(vec![int(0), int(0), int(1)]))
    }

    #[test]
    fn divided_differences() {
        assert_eq!(divided_difference(&square(), &[int(0), int(1)]).unwrap().exact(), Some(&int(1)));
        let a = rat(2, 7);
        assert_eq!(divided_difference(&square(), &[a.clone(), a.clone()]).unwrap().exact(), Some(&(int(2) * &a)));
        let d = divided_difference(&riesz(), &[rat(-3, 5), rat(-1, 3)]).unwrap();
        assert_eq!(d.exact(), Some(&rat(15, 64)));
    }

    #[test]
    fn interpolant_reproduces_polynomials() {
        let p = Poly::new(vec![rat(1, 2), int(-3), int(0), rat(5, 7)]);
        let m = NodeMultiset::new(vec![int(-1), int(-1), rat(1, 3), rat(1, 2)]).unwrap();
        assert_eq!(hermite_interpolant(&Potential::Polynomial(p.clone()), &m).unwrap(), p);
        let single = NodeMultiset::new(vec![rat(1, 3)]).unwrap();
        assert_eq!(hermite_interpolant(&riesz(), &single).unwrap(), Poly::constant(rat(3, 4)));
    }

    #[test]
    fn interpolant_matches_values_and_slopes() {
        let m = NodeMultiset::new(vec![
            int(-1),
            int(-1),
            rat(-1, 2),
            rat(-1, 4),
            int(0),
            rat(1, 4),
            rat(1, 2),
            rat(1, 2),
        ])
        .unwrap();
        let h = riesz();
        let hh = hermite_interpolant(&h, &m).unwrap();
        assert_eq!(hh.degree(), Some(7));
        for (t, mult) in m.grouped() {
            assert_eq!(Some(&hh.eval(&t)), h.value(&t).unwrap().exact());
            if mult == 2 {
                assert_eq!(Some(&hh.derivative().eval(&t)), h.derivative(1, &t).unwrap().exact());
            }
        }
    }

    #[test]
    fn multiset_rules() {
        let inner = [rat(-3, 5), rat(-1, 3), rat(-1, 15), rat(1, 5), rat(7, 15)];
        let t = IntervalSet::open(&[(rat(-3, 5), rat(-1, 3))]).unwrap();
        let m = build_multiset(&inner, &t, 7).unwrap();
        assert_eq!(m.to_string(), "{-3/5, -1/3, -1/15^2, 1/5^2, 7/15^2}");
        assert!(matches!(build_multiset(&inner, &t, 6), Err(Error::MultisetMismatch { found: 8, .. })));
        let products = partial_products(&NodeMultiset::new(vec![int(0), int(0)]).unwrap());
        assert_eq!(products, vec![Poly::t()]);
        let last = partial_products(&m).pop().unwrap();
        let printed = poly_from_factors(
            &[(rat(-3, 5), 1), (rat(-1, 3), 1), (rat(-1, 15), 2), (rat(1, 5), 2), (rat(7, 15), 1)],
            &int(1),
        );
        assert_eq!(last, printed);
    }

    #[test]
    fn srg_quadratic_on_petersen() {
        let h = riesz();
        let (p, q) = (rat(-2, 3), rat(1, 6));
        let g = srg_quadratic(&h, &p, &q, 4).unwrap();
        assert!(!g.a.is_negative() && !g.b.is_negative());
        let (v, k) = (10u64, 3u64);
        let direct = int(10) * int(3) * h.value(&p).unwrap().exact().unwrap()
            + int(10) * int(6) * h.value(&q).unwrap().exact().unwrap();
        assert_eq!(g.bound(v), direct);
        let _ = k;
        assert!(srg_quadratic(&h, &rat(-1, 6), &rat(2, 3), 4).is_err());
    }

    #[test]
    fn three_distance_guards() {
        let h = riesz();
        let (a, b, c) = (rat(-9, 23), rat(-1, 23), rat(7, 23));
        assert!(three_distance_certificate(&h, &a, &a, &c, ThreeDistanceGap::AlphaBeta, 23, 2048).is_err());
        assert!(three_distance_certificate(&h, &a, &b, &c, ThreeDistanceGap::AlphaBeta, 23, 2048).unwrap().is_valid());
        // pair sum far below -3/(n+2)
        assert!(matches!(
            three_distance_certificate(&h, &rat(-9, 10), &rat(-1, 10), &rat(8, 10), ThreeDistanceGap::BetaGamma, 23, 10),
            Err(Error::ConditionViolated(_))
        ));
    }
}
