//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails. Full pair enumeration of every constructed
//! code except the Leech minimal vectors takes about a minute on one core.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tavoid_core::atlas::*;
use tavoid_core::certify::*;
use tavoid_core::designs::*;
use tavoid_core::exactnum::parse_factored;
use tavoid_core::{int, parse_rational, Poly, Rational};
use tavoid::parallel::profile_parallel;

struct Profiles(HashMap<CodeId, CodeProfile>);

impl ProfileSource for Profiles {
    fn profile(&mut self, id: CodeId) -> tavoid_core::Result<Option<CodeProfile>> {
        Ok(self.0.get(&id).cloned())
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn report(results: &mut Vec<bool>, n: usize, name: &str, took: Duration, o: Outcome) {
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {verdict} {name} ({:.1}s): {}", took.as_secs_f64(), o.detail);
    results.push(o.pass);
}

fn timed(f: impl FnOnce() -> Outcome) -> (Duration, Outcome) {
    let t = Instant::now();
    let o = f();
    (t.elapsed(), o)
}

fn zero() -> Rational {
    int(0)
}

/// Printed coefficient lists and values, compared value by value.
fn gegenbauer_reproduction() -> Outcome {
    let t = Instant::now();
    let reg = registry();
    let mut src = PublishedProfiles;
    let mut compared = 0;
    let mut discrepancies = Vec::new();
    let mut unexpected = Vec::new();
    for e in reg.iter().filter(|e| e.id.starts_with("max") || e.id.starts_with("design") || e.id.starts_with("energy")) {
        let row = reproduce_entry(e, &mut src);
        let keyed = |k: &str| k == "expansion" || k.starts_with("P_") || k == "f_0" || k == "f(1)";
        for (key, printed) in row.printed.iter().filter(|(k, _)| keyed(k)) {
            let computed = &row.computed.iter().find(|(k, _)| k == key).expect("computed alongside printed").1;
            let c: Vec<Rational> = computed.split_whitespace().map(|x| parse_rational(x).unwrap()).collect();
            let p: Vec<Rational> = printed.split_whitespace().map(|x| parse_rational(x).unwrap()).collect();
            compared += 1;
            if c != p {
                let d = format!("{} {key}", row.id);
                if row.status == RowStatus::Erratum {
                    discrepancies.push(d);
                } else {
                    unexpected.push(d);
                }
            }
        }
    }
    let took = t.elapsed();
    let bw_flagged = discrepancies.iter().any(|d| d.starts_with("max/bw16") && d.ends_with("expansion"));
    outcome(
        unexpected.is_empty() && bw_flagged && compared >= 60 && took < Duration::from_secs(1),
        format!(
            "{compared} printed lists/values compared, discrepancies only in flagged entries: [{}]{}",
            discrepancies.join("; "),
            if unexpected.is_empty() { String::new() } else { format!(", unexpected: {unexpected:?}") }
        ),
    )
}

fn bound_reproduction() -> Outcome {
    let reg = registry();
    let mut src = PublishedProfiles;
    let mut seen: Vec<String> = Vec::new();
    let mut bad = Vec::new();
    for e in &reg {
        let expected = match e.kind {
            EntryKind::Max { bound, .. } | EntryKind::Design { bound, .. } | EntryKind::Dgs { bound, .. } => bound,
            _ => continue,
        };
        let row = reproduce_entry(e, &mut src);
        let computed = row.computed.iter().find(|(k, _)| k == "bound").map(|(_, v)| v.clone());
        if computed.as_deref() != Some(&expected.to_string()) || row.status == RowStatus::Fail {
            bad.push(row.id.clone());
        }
        let s = expected.to_string();
        if !seen.contains(&s) {
            seen.push(s);
        }
    }
    let dgs = dgs_three_distance_bound(23, &parse_rational("-9/23").unwrap(), &parse_rational("-1/23").unwrap(), &parse_rational("7/23").unwrap());
    let dgs_ok = dgs.as_ref().map(|d| d.bound == int(2048)).unwrap_or(false);
    outcome(bad.is_empty() && dgs_ok, format!("exact bounds {} ; DGS(23,-9/23,-1/23,7/23) = 2048: {dgs_ok}; mismatches {bad:?}", seen.join(", ")))
}

fn construction_counts(atlas: &mut Atlas) -> Outcome {
    let shapes: Vec<usize> = leech_shapes().iter().map(Vec::len).collect();
    let leech = atlas.leech().len();
    let octads = golay24().weight_distribution()[8];
    let sizes: Vec<(CodeId, usize)> = [
        CodeId::C4600,
        CodeId::C47104,
        CodeId::C93150,
        CodeId::C552,
        CodeId::C11178,
        CodeId::C48600,
        CodeId::BarnesWall,
        CodeId::DualGolay,
    ]
    .into_iter()
    .map(|id| (id, atlas.build(id).unwrap().len()))
    .collect();
    let want = [4600, 47104, 93150, 552, 11178, 48600, 4320, 2048];
    let ok = leech == 196560
        && shapes == [1104, 97152, 98304]
        && octads == 759
        && sizes.iter().map(|s| s.1).eq(want);
    let listed: Vec<String> = sizes.iter().map(|(id, n)| format!("{id}={n}")).collect();
    outcome(ok, format!("leech={leech} shapes={shapes:?} octads={octads} {}", listed.join(" ")))
}

fn full_profiles(atlas: &mut Atlas, profiles: &mut HashMap<CodeId, CodeProfile>) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = Vec::new();
    for id in CodeId::ALL.into_iter().filter(|&id| id != CodeId::Leech) {
        let code = atlas.build(id).unwrap();
        let p = profile_parallel(&code, ProfileMode::Full);
        if let Some(q) = published_profile(id) {
            if p.pair_counts != q.pair_counts || p.distance_invariant != Some(true) {
                bad.push(id);
            }
            checked.push(id.name());
        }
        profiles.insert(id, p);
    }
    let c552 = profiles[&CodeId::C552].frequencies() == Some(vec![1, 275, 275]);
    outcome(bad.is_empty() && c552 && checked.len() == 9, format!("full enumeration matches the published distributions of {}; c552 = (1,275,275): {c552}", checked.join(", ")))
}

const STRENGTHS: [(CodeId, usize); 10] = [
    (CodeId::C4600, 7),
    (CodeId::C47104, 7),
    (CodeId::C93150, 7),
    (CodeId::C552, 5),
    (CodeId::C11178, 5),
    (CodeId::C48600, 5),
    (CodeId::C2816, 5),
    (CodeId::C2025, 4),
    (CodeId::BarnesWall, 7),
    (CodeId::DualGolay, 3),
];

fn design_strengths(profiles: &HashMap<CodeId, CodeProfile>) -> Outcome {
    let mut bad = Vec::new();
    for (id, tau) in STRENGTHS {
        let p = &profiles[&id];
        if design_strength(p, 12).unwrap() != tau {
            bad.push(format!("{id} strength"));
        }
    }
    for id in [CodeId::C4600, CodeId::C47104] {
        if moments(&profiles[&id], 9).unwrap()[8] != zero() {
            bad.push(format!("{id} M_9"));
        }
    }
    if moments(&profiles[&CodeId::C48600], 7).unwrap()[6] != zero() {
        bad.push("c48600 M_7".into());
    }
    let mut negative = Vec::new();
    for (id, p) in profiles {
        if moments(p, 12).unwrap().iter().any(|m| *m < zero()) {
            negative.push(id.name());
        }
    }
    let ok = bad.is_empty() && negative.is_empty();
    let listed: Vec<String> = STRENGTHS.iter().map(|(id, t)| format!("{id}:{t}")).collect();
    outcome(ok, format!("{}; M_9=0 for c4600,c47104; M_7=0 for c48600; M_i>=0 (i<=12) on {} profiles; problems {bad:?} {negative:?}", listed.join(" "), profiles.len()))
}

fn quadrature(profiles: &HashMap<CodeId, CodeProfile>) -> Outcome {
    let mut bad = Vec::new();
    for (id, tau) in STRENGTHS {
        let p = &profiles[&id];
        let s = solve_distribution(&p.inner_products, p.len as u64, p.n as u32, tau).unwrap();
        if s.as_counts() != p.frequencies() {
            bad.push(id);
        }
    }
    outcome(bad.is_empty(), format!("recovered F(C) exactly for {} codes; failures {bad:?}", STRENGTHS.len()))
}

fn energy_attainment(profiles: &HashMap<CodeId, CodeProfile>) -> Outcome {
    let mut src = Profiles(profiles.clone());
    let reg = registry();
    let mut bad = Vec::new();
    let mut n = 0;
    for e in reg.iter().filter(|e| matches!(e.kind, EntryKind::Energy(_) | EntryKind::Srg { .. })) {
        let row = reproduce_entry(e, &mut src);
        let attained = row.computed.iter().any(|(k, _)| k.ends_with("E_h(C)"));
        let literal_misreading = e.erratum.is_some() && !attained;
        if literal_misreading {
            continue;
        }
        n += 1;
        let ok = match e.kind {
            EntryKind::Srg { .. } => row.status == RowStatus::Pass,
            _ => attained && row.status != RowStatus::Fail,
        };
        if !ok {
            bad.push(format!("{} {:?}", row.id, row.notes));
        }
    }
    outcome(bad.is_empty() && n >= 24, format!("{n} certificates valid for k=1,2 with bound = E_h(C) of the constructed code; failures {bad:?}"))
}

fn bridge_identity(profiles: &HashMap<CodeId, CodeProfile>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2025);
    let mut checked = 0;
    let mut bad = Vec::new();
    let codes: Vec<(CodeId, usize)> = STRENGTHS
        .iter()
        .copied()
        .chain([(CodeId::PetersenFirst, 2), (CodeId::PetersenSecond, 2)])
        .filter(|(id, _)| profiles[id].len <= 11178)
        .collect();
    for (id, tau) in &codes {
        let p = &profiles[id];
        for _ in 0..50 {
            let deg = rng.gen_range(0..=*tau);
            let coeffs: Vec<Rational> =
                (0..=deg).map(|_| Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=30).into())).collect();
            let h = Poly::new(coeffs);
            let e = energy(p, &Potential::Polynomial(h.clone())).unwrap();
            if e.exact() != Some(&polynomial_energy_identity(p.len as u64, p.n as u32, &h)) {
                bad.push(id.name());
            }
            checked += 1;
        }
    }
    outcome(bad.is_empty(), format!("{checked} random polynomials over {} designs; failures {bad:?}", codes.len()))
}

fn main_identity_check(profiles: &HashMap<CodeId, CodeProfile>) -> Outcome {
    let mut small = 0;
    let mut large = 0;
    let mut bad = Vec::new();
    for e in registry() {
        let f = match e.kind {
            EntryKind::Max { f, .. } | EntryKind::Design { f, .. } => parse_factored(f).unwrap().to_poly(),
            _ => continue,
        };
        let Some(p) = e.code.and_then(|c| profiles.get(&c)) else { continue };
        if !main_identity(&f, p).unwrap().holds() {
            bad.push(e.id.clone());
        }
        if p.len <= 11178 {
            small += 1;
        } else {
            large += 1;
        }
    }
    outcome(bad.is_empty() && small > 0, format!("{small} pairs on codes <= 11178 points, {large} on larger codes with full profiles; failures {bad:?}"))
}

fn forty_eight() -> Outcome {
    let row = reproduce(Some("data/dim48"), &mut PublishedProfiles);
    let ok = row.len() == 1 && row[0].status == RowStatus::Pass;
    let get = |k: &str| row[0].computed.iter().find(|(key, _)| key == k).map(|(_, v)| v.clone()).unwrap_or_default();
    outcome(ok, format!("sum of frequencies {}, energy for k=1 {}", get("sum of frequencies"), get("k=1 energy")))
}

fn main() {
    let mut results = Vec::new();
    let mut atlas = Atlas::new();
    let mut profiles = HashMap::new();

    let (d, o) = timed(gegenbauer_reproduction);
    report(&mut results, 1, "Gegenbauer reproduction", d, o);
    let (d, o) = timed(bound_reproduction);
    report(&mut results, 2, "bound reproduction", d, o);
    let (d, o) = timed(|| construction_counts(&mut atlas));
    report(&mut results, 3, "construction counts", d, o);
    let (d, o) = timed(|| full_profiles(&mut atlas, &mut profiles));
    report(&mut results, 4, "profiles", d, o);
    let (d, o) = timed(|| design_strengths(&profiles));
    report(&mut results, 5, "design strengths", d, o);
    let (d, o) = timed(|| quadrature(&profiles));
    report(&mut results, 6, "quadrature solver", d, o);
    let (d, o) = timed(|| energy_attainment(&profiles));
    report(&mut results, 7, "energy attainment", d, o);
    let (d, o) = timed(|| bridge_identity(&profiles));
    report(&mut results, 8, "bridge identity", d, o);
    let (d, o) = timed(|| main_identity_check(&profiles));
    report(&mut results, 9, "main identity", d, o);
    let (d, o) = timed(forty_eight);
    report(&mut results, 10, "48-dimensional data", d, o);

    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, p)| !**p).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria pass", results.len());
}
