use proptest::prelude::*;

use tavoid_core::atlas::{Atlas, CodeId, SphericalCode};
use tavoid_core::certify::*;
use tavoid_core::designs::*;
use tavoid_core::gegenbauer::expand;
use tavoid_core::interpolate::{hermite_interpolant, NodeMultiset};
use tavoid_core::{int, rat, IntervalSet, Poly, Rational};

struct Constructed(Atlas);

impl ProfileSource for Constructed {
    fn profile(&mut self, id: CodeId) -> tavoid_core::Result<Option<CodeProfile>> {
        const LIMIT: usize = 11178;
        let code = self.0.build(id)?;
        if code.len() > LIMIT {
            return Ok(None);
        }
        Ok(Some(profile(&code, ProfileMode::Full)))
    }
}

#[test]
fn registry_against_constructed_codes() {
    let mut src = Constructed(Atlas::new());
    let reg = registry();
    let small = |e: &Entry| matches!(e.code, Some(c) if published_profile(c).is_none_or(|p| p.len <= 11178));
    let mut seen = 0;
    for e in reg.iter().filter(|e| small(e)) {
        let row = reproduce_entry(e, &mut src);
        let want = if e.erratum.is_some() { RowStatus::Erratum } else { RowStatus::Pass };
        assert_eq!(row.status, want, "{}: {:?}", row.id, row.notes);
        assert!(!row.notes.iter().any(|n| n.contains("attainment skipped")), "{}", row.id);
        seen += 1;
    }
    assert!(seen >= 30);
}

#[test]
fn reproduce_by_prefix() {
    let rows = reproduce(Some("design/c2025"), &mut PublishedProfiles);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.status == RowStatus::Pass));
    assert!(reproduce(Some("nothing"), &mut PublishedProfiles).is_empty());
}

#[test]
fn a_wrong_polynomial_fails() {
    // Dropping the double root breaks the sign condition on [-1, s] \ T.
    let f = tavoid_core::exactnum::parse_factored("(t+1/2)*(t+1/5)*(t-1/10)*(t-2/5)").unwrap().to_poly();
    let t = IntervalSet::parse("(-1/2,-1/5)").unwrap();
    let c = certify_max(&f, 23, &rat(2, 5), &t).unwrap();
    assert!(!c.is_valid());
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 1..=max_degree + 1).prop_map(Poly::new)
}

fn design_profiles() -> Vec<(CodeProfile, usize)> {
    let mut atlas = Atlas::new();
    [
        (CodeId::C4600, 7),
        (CodeId::C552, 5),
        (CodeId::C11178, 5),
        (CodeId::C2816, 5),
        (CodeId::C2025, 4),
        (CodeId::BarnesWall, 7),
        (CodeId::DualGolay, 3),
        (CodeId::PetersenFirst, 2),
        (CodeId::PetersenSecond, 2),
    ]
    .into_iter()
    .map(|(id, tau)| (profile(&atlas.build(id).unwrap(), ProfileMode::Full), tau))
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn energy_of_a_design_is_its_zeroth_coefficient(coeffs in prop::collection::vec(small_rational(), 8)) {
        thread_local!(static PROFILES: Vec<(CodeProfile, usize)> = design_profiles());
        PROFILES.with(|ps| {
            for (p, tau) in ps {
                let h = Poly::new(coeffs[..=*tau].to_vec());
                let e = energy(p, &Potential::Polynomial(h.clone())).unwrap();
                let rhs = polynomial_energy_identity(p.len as u64, p.n as u32, &h);
                assert_eq!(e.exact(), Some(&rhs));
            }
        });
    }

    #[test]
    fn hermite_reproduces_polynomials(h in poly(6), nodes in prop::collection::vec(-4i64..4, 7)) {
        let m = NodeMultiset::new(nodes.iter().map(|&k| rat(k, 5)).collect()).unwrap();
        let p = hermite_interpolant(&Potential::Polynomial(h.clone()), &m).unwrap();
        prop_assert_eq!(p, h);
    }

    #[test]
    fn expansion_is_linear_and_invertible(f in poly(8), g in poly(8), n in 3u32..30) {
        let sum = &f + &g;
        let (ef, eg, es) = (expand(&f, n), expand(&g, n), expand(&sum, n));
        for i in 0..=8 {
            prop_assert_eq!(es.coeff(i), ef.coeff(i) + eg.coeff(i));
        }
        prop_assert_eq!(ef.to_poly(), f);
    }

    #[test]
    fn enlarging_t_keeps_a_max_certificate(shrink in 0i64..5) {
        // The certificate for T = (-1/2,-1/5) also serves any T' containing it.
        let f = tavoid_core::exactnum::parse_factored("(t+1/2)*(t+1/5)*(t-1/10)^2*(t-2/5)").unwrap().to_poly();
        let t = IntervalSet::parse(&format!("(-{}/10,-1/5)", 5 + shrink)).unwrap();
        let c = certify_max(&f, 23, &rat(2, 5), &t).unwrap();
        prop_assert!(c.is_valid());
        prop_assert_eq!(c.exact_bound(), Some(&int(11178)));
    }
}
