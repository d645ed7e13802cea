//! One line per acceptance criterion, each checked against an oracle that
//! lives in `common`, with a pinned wall-clock limit. The test profile is
//! optimised; the limits match those of `slicework verify-all`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use slicework_core::detection::{
    alpha_valuation, beta_valuation, bockstein_image, cohomology_r, cohomology_r_mod2, s_solver,
};
use slicework_core::exactalg::{snf, Var};
use slicework_core::fgl::{
    hazewinkel_images, mo_generators, mo_independence_ranks, rbar_generators, t_functions, FormalAModule, RbarGenerators,
};
use slicework_core::repsphere::{
    bredon_cohomology, bredon_homology, build_complex_with, gap_check, phi_hz, underlying_homology, BuildMode, Coeff,
    RepDescriptor,
};
use slicework_core::slicess::{inverted_ss_run, refine_orbits, SliceCell};
use slicework_core::{AbGroup, CyclotomicInt, GradedElem, IntMatrix, SparsePoly, TruncSeries};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        Ok(detail.into())
    } else {
        Err(detail.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn rho8(m: u32) -> RepDescriptor {
    RepDescriptor::regular(3).scaled(m)
}

fn compare(label: &str, got: impl Fn(i64) -> AbGroup, want: &std::collections::BTreeMap<i64, AbGroup>) -> Outcome {
    for (d, g) in want {
        if got(*d) != *g {
            return Err(format!("{label} in degree {d}: {} vs {}", got(*d), g));
        }
    }
    Ok(String::new())
}

fn c1() -> Outcome {
    let h = bredon_homology(&rho8(1), 8, Coeff::Z).map_err(e)?;
    compare("H_*", |d| h.get(d), &padded((0, 8), rank_one_homology(1, &RHO8_CHAINS)))?;
    Ok("Z/2 in degrees 1, 3, 5, 7".into())
}

fn c2() -> Outcome {
    let h = bredon_homology(&rho8(2), 8, Coeff::Z).map_err(e)?;
    compare("H_*", |d| h.get(d), &padded((0, 16), rank_one_homology(2, &RHO8X2_CHAINS)))?;
    let c = bredon_cohomology(&rho8(2), 8, Coeff::Z).map_err(e)?;
    let cochains = cochains_from_invariant_chains(&RHO8X2_CHAINS, &RHO8X2_ORBITS);
    compare("H^*", |d| c.get(d), &padded((0, 16), rank_one_cohomology(2, &cochains)))?;
    check(h.get(14) == AbGroup::cyclic(8) && c.get(16) == AbGroup::free(1), format!("H_14 = {}, H^16 = {}", h.get(14), c.get(16)))
}

fn c3() -> Outcome {
    let mut groups = 0;
    for n in 1..=3 {
        for m in 1..=2u32 {
            let v = RepDescriptor::regular(n).scaled(m);
            let c = bredon_cohomology(&v, v.order(), Coeff::Z).map_err(e)?;
            for i in 1..=3 {
                if !c.get(i).is_zero() {
                    return Err(format!("H^{i} of S^{m}ρ for C{} is {}", 1 << n, c.get(i)));
                }
                groups += 1;
            }
        }
        if !gap_check(n, 2).map_err(e)?.all_pass() {
            return Err(format!("gap report fails for C{}", 1 << n));
        }
    }
    Ok(format!("{groups} groups vanish"))
}

fn c4() -> Outcome {
    let k_max = 10;
    let r = phi_hz(3, k_max).map_err(e)?;
    // invariant chains of S^{∞σ}: ⋯ → Z −0→ Z −2→ Z
    let maps: Vec<i64> = (0..=k_max).map(|i| if i % 2 == 0 { 2 } else { 0 }).collect();
    let want = rank_one_homology(0, &maps);
    for (k, g) in &r.groups {
        if want[k] != *g {
            return Err(format!("π_{k} = {g}"));
        }
    }
    check(r.stable, format!("Z/2 in even degrees ≤ {k_max}, stable at {} copies", r.sigma_copies))
}

fn c5() -> Outcome {
    let d1 = refine_orbits(8, 1).map_err(e)?;
    let d2 = refine_orbits(8, 2).map_err(e)?;
    let d4 = refine_orbits(8, 4).map_err(e)?;
    let singleton = d4.orbits.iter().find(|o| o.members == ["r1·γr1·γ^2r1·γ^3r1"]);
    let ok = d1.cells == [(SliceCell::new(2, 1), 1)]
        && d2.rank as u128 == monomial_count(2, |_| 4)
        && d2.cells == [(SliceCell::new(2, 2), 3), (SliceCell::new(4, 1), 1)]
        && singleton.is_some_and(|o| o.cell == SliceCell::new(8, 1));
    check(ok, format!("d=2: rank {}, {} orbits", d2.rank, d2.orbits.len()))
}

fn c6() -> Outcome {
    let bound = 20;
    let want = mo_ranks(bound);
    for g in [2u64, 4, 8] {
        let run = inverted_ss_run(g, bound).map_err(e)?;
        let got: Vec<u64> = run.e_infinity_ranks().iter().map(|&x| x as u64).collect();
        if got != want {
            return Err(format!("g = {g}: {got:?}"));
        }
    }
    Ok(format!("E∞ ranks {:?}… for g = 2, 4, 8", &want[..8]))
}

fn c7() -> Outcome {
    let n = 31;
    let h = mo_generators(n).map_err(e)?;
    let zero: Vec<usize> = (1..=n).filter(|&j| h.get(j).is_empty()).collect();
    let indep = mo_independence_ranks(&h, 16).iter().all(|&(_, r, x)| r as u64 == x);
    let two = h.get(2) == &SparsePoly::var(Var::Alpha(2));
    check(zero == [1, 3, 7, 15, 31] && indep && two, format!("h_j = 0 exactly for j in {zero:?}"))
}

fn c8() -> Outcome {
    let r = rbar_generators(8).map_err(e)?;
    let h = mo_generators(8).map_err(e)?;
    let ok = (1..=8).all(|k| {
        r.get(k).indecomposable_part() == RbarGenerators::expected_indecomposable(k as u32) && r.to_mo(k) == *h.get(k)
    });
    check(ok, format!("r̄_2 = {}", r.get(2)))
}

fn c9() -> Outcome {
    let reference: [[i64; 4]; 4] = [[-4, -6, -4, -1], [-6, 6, 11, 4], [100, 237, 166, 40], [-9707, -63495, -56631, -15754]];
    let v = hazewinkel_images(4).map_err(e)?;
    let ok = v.iter().zip(reference).all(|(img, p)| {
        img.value == GradedElem::from_pi_poly(p, (1 << img.n) - 1) && img.pi_valuation == 4 - img.n && img.unit_part.is_some()
    });
    check(ok, format!("valuations {:?}", v.iter().map(|i| i.pi_valuation).collect::<Vec<_>>()))
}

fn c10() -> Outcome {
    let table = t_functions(6, 16).map_err(e)?;
    let t1 = table.get(1, 1).ok_or("missing t_1")?;
    let trivial = (1..=6).all(|n| table.get(0, n).is_some_and(|t| t.value.is_zero()));
    let m = FormalAModule::new(16).map_err(e)?;
    let s: Vec<_> = (0..8).map(|j| m.zeta_series(j)).collect::<Result<_, _>>().map_err(e)?;
    let mut law = true;
    for a in 0..8 {
        for b in 0..8 {
            law &= s[a].compose(&s[b]).map_err(e)? == s[(a + b) % 8];
        }
    }
    let ok = *t1 == GradedElem::new(CyclotomicInt::zeta_pow(3), 1) && trivial && law;
    check(ok, format!("t_1(ζ) = {t1}; 64 compositions"))
}

fn c11() -> Outcome {
    for m in -16..=16 {
        for s in 0..=4 {
            if cohomology_r(s, m).group != integral_group_cohomology(s, m) {
                return Err(format!("H^{s}(C8; R_{m}) = {}", cohomology_r(s, m).group));
            }
            if cohomology_r_mod2(s, m) != mod2_group_cohomology(s, m) {
                return Err(format!("mod 2 H^{s}(C8; R_{m})"));
            }
        }
    }
    Ok("m in -16..=16, s ≤ 4, integral and mod 2".into())
}

fn c12() -> Outcome {
    for j in 3..=10 {
        let b = bockstein_image(j).map_err(e)?;
        let ok = b.witness.value == CyclotomicInt::from_int(4)
            && b.order == Some(BigInt::from(2))
            && b.target_group == integral_group_cohomology(2, 1 << j)
            && b.cobar_agrees;
        if !ok {
            return Err(format!("j = {j}: witness {}, order {:?}", b.witness, b.order));
        }
    }
    let b2 = bockstein_image(2).map_err(e)?;
    check(b2.target_group.is_zero() && !b2.nonzero, "order 2 for 3 ≤ j ≤ 10; j = 2 target is 0")
}

fn c13() -> Outcome {
    let q = |n: i64| BigRational::new(n.into(), 4.into());
    let mut min = i64::MAX;
    for j in 6..=20u32 {
        for k in 1..j.div_ceil(2) {
            let v = beta_valuation(j, k).map_err(e)?.value;
            if v != q(beta_quarters(j, k)) {
                return Err(format!("β({j},{k}) = {v}"));
            }
            min = min.min(beta_quarters(j, k));
        }
    }
    let alpha = (3..=20).all(|j| alpha_valuation(j).value == q(alpha_quarters(j)) && alpha_quarters(j) > 16);
    check(min >= 20 && alpha, format!("min β = {}, α(3) = {}", q(min), q(alpha_quarters(3))))
}

fn c14() -> Outcome {
    let reference: [(u64, usize, [i64; 4], u32); 7] = [
        (2, 1, [-4, -6, -4, -1], 3),
        (2, 3, [26, 14, -5, -4], 2),
        (2, 7, [-1052, -22171, -21426, -6182], 1),
        (2, 15, [-16204677587, -15158766469, -3700320563, 306347134], 0),
        (4, 1, [-2, -1, 0, 0], 1),
        (4, 3, [-1, 25, 26, 8], 0),
        (8, 1, [-1, 0, 0, 0], 0),
    ];
    for h in [2u64, 4, 8] {
        let n = reference.iter().filter(|p| p.0 == h).map(|p| p.1).max().unwrap_or(1);
        let s = s_solver(h, n).map_err(e)?;
        for &(_, i, p, v) in reference.iter().filter(|p| p.0 == h) {
            let x = &s[i - 1];
            if x.value != GradedElem::from_pi_poly(p, i as i64) || x.pi_valuation != Some(v) || x.value.is_unit() != (v == 0) {
                return Err(format!("s_C{h},{i} = {}", x.value));
            }
        }
    }
    Ok("7 reference values; units exactly at the top index".into())
}

fn c15() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..150 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = IntMatrix::new(r, c, (0..r * c).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect());
        let s = snf(&a);
        let divides = s.factors.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0));
        if s.u.mul(&a).mul(&s.v) != s.diagonal() || !divides || s.v.mul(&s.v_inv) != IntMatrix::identity(c) {
            return Err(format!("SNF fails on\n{a}"));
        }
    }
    for _ in 0..150 {
        let mut c = || CyclotomicInt::new(rng.gen_range(-20..=20), rng.gen_range(-20..=20), rng.gen_range(-20..=20), rng.gen_range(-20..=20));
        let (x, y) = (c(), c());
        if let (Some(a), Some(b)) = (x.pi_valuation(), y.pi_valuation()) {
            if (&x * &y).pi_valuation() != Some(a + b) {
                return Err(format!("valuation of {x}·{y}"));
            }
        }
    }
    for _ in 0..60 {
        let mut coeffs = vec![BigRational::from_integer(0.into()), BigRational::from_integer(rng.gen_range(1..=3).into())];
        coeffs.extend((2..=10).map(|_| BigRational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=4).into())));
        let f = TruncSeries::from_coeffs(10, coeffs);
        let g = f.revert().map_err(e)?;
        if f.compose(&g).map_err(e)? != TruncSeries::x(10) {
            return Err("series reversion".into());
        }
    }
    let mut spheres = 0;
    for n in 1..=3u32 {
        for _ in 0..7 {
            let mut v = RepDescriptor::zero(n);
            v.triv = rng.gen_range(0..=1);
            v.sign = rng.gen_range(0..=2);
            for r in v.rot.iter_mut() {
                *r = rng.gen_range(0..=1);
            }
            let d = v.dim() as i64;
            let u = underlying_homology(&v);
            if u.support() != [d] || u.get(d) != AbGroup::free(1) {
                return Err(format!("underlying homology of S^{{{v}}}"));
            }
            let flipped = build_complex_with(&v, BuildMode::PerIrreducible, true).underlying().homology();
            if flipped.get(&d) != Some(&AbGroup::free(1)) {
                return Err(format!("per-irreducible build of S^{{{v}}}"));
            }
            let h = v.order();
            let z = bredon_homology(&v, h, Coeff::Z).map_err(e)?;
            let z2 = bredon_homology(&v, h, Coeff::Z2).map_err(e)?;
            for k in 0..=d {
                let want = z.get(k).tensor_f2_dim() + z.get(k - 1).tor_f2_dim();
                if z2.get(k).torsion.len() + z2.get(k).free != want {
                    return Err(format!("universal coefficients for S^{{{v}}} in degree {k}"));
                }
            }
            spheres += 1;
        }
    }
    Ok(format!("150 SNF, 150 valuation pairs, 60 series, {spheres} spheres"))
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 15] = [
    (1, "homology of S^rho8", 1_000, c1),
    (2, "homology and cohomology of S^2rho8", 2_000, c2),
    (3, "gap vanishing for C2, C4, C8", 10_000, c3),
    (4, "geometric fixed points of HZ", 2_000, c4),
    (5, "orbit refinement for C8", 1_000, c5),
    (6, "a-inverted slice spectral sequence", 30_000, c6),
    (7, "unoriented generators h_j", 10_000, c7),
    (8, "generators rbar_k mod decomposables", 10_000, c8),
    (9, "Hazewinkel images", 1_000, c9),
    (10, "t-functions and zeta-series", 5_000, c10),
    (11, "cohomology of C8 with coefficients R", 2_000, c11),
    (12, "Bockstein images", 2_000, c12),
    (13, "beta and alpha valuation bounds", 1_000, c13),
    (14, "s-values and units", 5_000, c14),
    (15, "property suites", 60_000, c15),
];

fn deviations() -> Vec<String> {
    let mut out = Vec::new();
    let reference = rank_one_cohomology(2, &RHO8X2_REFERENCE_COCHAINS);
    let derived = rank_one_cohomology(2, &cochains_from_invariant_chains(&RHO8X2_CHAINS, &RHO8X2_ORBITS));
    if reference[&5] != derived[&5] {
        out.push(format!(
            "H^5_C8(S^2rho8) expected {} from the reference cochain maps; the maps induced by the reference chain complex give {}",
            reference[&5], derived[&5]
        ));
    }
    let stem6 = mo_ranks(6)[6];
    if stem6 != 2 {
        out.push(format!("g = 2, stem 6: E∞ rank expected 2; the unoriented bordism ring has rank {stem6} (f2^3, f2·f4, f6)"));
    }
    out
}

fn main() -> ExitCode {
    let mut failed = 0;
    let total = Instant::now();
    for (id, title, limit_ms, f) in CRITERIA {
        let limit = Duration::from_millis(limit_ms);
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) => (elapsed <= limit, d),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "{} [{id:>2}] {title}: {detail} ({} ms, limit {} ms)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_millis(),
            limit.as_millis()
        );
    }
    for d in deviations() {
        println!("DEVIATION (documented) {d}");
    }
    println!("{} of {} criteria passed in {:.2} s", CRITERIA.len() - failed, CRITERIA.len(), total.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
