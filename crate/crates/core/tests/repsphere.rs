mod common;

use common::*;
use proptest::prelude::*;
use slicework_core::repsphere::{
    bredon_cohomology, bredon_homology, build_complex_with, underlying_homology, BuildMode, Coeff, RepDescriptor,
};
use slicework_core::AbGroup;

fn rho8(m: u32) -> RepDescriptor {
    RepDescriptor::regular(3).scaled(m)
}

#[test]
fn rho8_homology_matches_reference_invariant_chains() {
    let want = padded((0, 8), rank_one_homology(1, &RHO8_CHAINS));
    let got = bredon_homology(&rho8(1), 8, Coeff::Z).unwrap();
    for (d, g) in want {
        assert_eq!(got.get(d), g, "H_{d}");
    }
}

#[test]
fn rho8_reference_cochains_are_consistent() {
    assert_eq!(cochains_from_invariant_chains(&RHO8_CHAINS, &RHO8_ORBITS), RHO8_REFERENCE_COCHAINS);
    let want = padded((0, 8), rank_one_cohomology(1, &RHO8_REFERENCE_COCHAINS));
    let got = bredon_cohomology(&rho8(1), 8, Coeff::Z).unwrap();
    for (d, g) in want {
        assert_eq!(got.get(d), g, "H^{d}");
    }
}

#[test]
fn two_rho8_homology_matches_reference_invariant_chains() {
    let want = padded((0, 16), rank_one_homology(2, &RHO8X2_CHAINS));
    let got = bredon_homology(&rho8(2), 8, Coeff::Z).unwrap();
    for (d, g) in want {
        assert_eq!(got.get(d), g, "H_{d}");
    }
    assert_eq!(got.get(14), AbGroup::cyclic(8));
}

#[test]
fn two_rho8_cohomology_from_orbit_sizes() {
    let cochains = cochains_from_invariant_chains(&RHO8X2_CHAINS, &RHO8X2_ORBITS);
    let want = padded((0, 16), rank_one_cohomology(2, &cochains));
    let got = bredon_cohomology(&rho8(2), 8, Coeff::Z).unwrap();
    for (d, g) in &want {
        assert_eq!(got.get(*d), *g, "H^{d}");
    }
    assert_eq!(got.get(16), AbGroup::free(1));
    // the reference cochain maps differ from the derived ones in degrees 4 and 8
    assert_ne!(cochains, RHO8X2_REFERENCE_COCHAINS);
    let reference = rank_one_cohomology(2, &RHO8X2_REFERENCE_COCHAINS);
    assert_eq!(reference[&5], AbGroup::cyclic(4));
    assert_eq!(want[&5], AbGroup::cyclic(2));
}

#[test]
fn sign_spheres_match_the_alternating_complex() {
    for n in 1..=3 {
        for m in 1..=7u32 {
            let maps: Vec<i64> = (0..m).map(|i| if i % 2 == 0 { 2 } else { 0 }).collect();
            let want = rank_one_homology(0, &maps);
            let v = RepDescriptor::sigma(n, m);
            let got = bredon_homology(&v, v.order(), Coeff::Z).unwrap();
            for (d, g) in want {
                assert_eq!(got.get(d), g, "C{} mσ, m = {m}, d = {d}", 1 << n);
            }
        }
    }
}

#[test]
fn lower_levels_of_rho8() {
    // restricted to C₂, ρ₈ is 4ρ₂, whose invariant chains alternate 2, 0 from degree 4
    let got = bredon_homology(&rho8(1), 2, Coeff::Z).unwrap();
    let v = RepDescriptor::regular(1).scaled(4);
    let direct = bredon_homology(&v, 2, Coeff::Z).unwrap();
    for d in 0..=8 {
        assert_eq!(got.get(d), direct.get(d), "degree {d}");
    }
    let free = bredon_homology(&rho8(1), 1, Coeff::Z).unwrap();
    assert_eq!(free.support(), vec![8]);
}

fn arb_rep() -> impl Strategy<Value = RepDescriptor> {
    (1u32..=3)
        .prop_flat_map(|n| {
            let rots = (1usize << (n - 1)).saturating_sub(1);
            (Just(n), 0u32..=2, 0u32..=2, proptest::collection::vec(0u32..=1, rots))
        })
        .prop_map(|(n, triv, sign, rot)| {
            let mut v = RepDescriptor::zero(n);
            v.triv = triv;
            v.sign = sign;
            v.rot = rot;
            v
        })
        .prop_filter("small enough", |v| v.dim() <= 9)
}

fn levels(v: &RepDescriptor) -> Vec<u64> {
    (0..=v.n).map(|i| 1u64 << i).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn underlying_sphere_is_a_sphere(v in arb_rep()) {
        let h = underlying_homology(&v);
        let d = v.dim() as i64;
        prop_assert_eq!(h.support(), vec![d]);
        prop_assert_eq!(h.get(d), AbGroup::free(1));
    }

    #[test]
    fn factor_order_and_cell_structure_do_not_matter(v in arb_rep()) {
        let base = build_complex_with(&v, BuildMode::Isotypic, false).underlying().homology();
        for (mode, rev) in [(BuildMode::Isotypic, true), (BuildMode::PerIrreducible, false), (BuildMode::PerIrreducible, true)] {
            let c = build_complex_with(&v, mode, rev);
            prop_assert!(c.is_equivariant());
            prop_assert_eq!(&c.underlying().homology(), &base);
        }
    }

    #[test]
    fn universal_coefficients(v in arb_rep()) {
        for h in levels(&v) {
            let z = bredon_homology(&v, h, Coeff::Z).unwrap();
            let z2 = bredon_homology(&v, h, Coeff::Z2).unwrap();
            for d in 0..=v.dim() as i64 {
                let want = z.get(d).tensor_f2_dim() + z.get(d - 1).tor_f2_dim();
                prop_assert_eq!(z2.get(d).free + z2.get(d).torsion.len(), want, "level {}, degree {}", h, d);
            }
        }
    }

    #[test]
    fn suspension_by_a_trivial_line_shifts(v in arb_rep()) {
        let mut w = v.clone();
        w.triv += 1;
        for h in levels(&v) {
            let a = bredon_homology(&v, h, Coeff::Z).unwrap();
            let b = bredon_homology(&w, h, Coeff::Z).unwrap();
            let c = bredon_cohomology(&v, h, Coeff::Z).unwrap();
            let e = bredon_cohomology(&w, h, Coeff::Z).unwrap();
            for d in 0..=v.dim() as i64 {
                prop_assert_eq!(a.get(d), b.get(d + 1));
                prop_assert_eq!(c.get(d), e.get(d + 1));
            }
        }
    }

    #[test]
    fn oriented_spheres_have_free_top_cohomology(v in arb_rep()) {
        let d = v.dim() as i64;
        for h in levels(&v) {
            let fixed = v.fixed_dims()[(v.n - h.trailing_zeros()) as usize] as i64;
            let c = bredon_cohomology(&v, h, Coeff::Z).unwrap();
            let oriented = v.sign % 2 == 0 || h < v.order();
            prop_assert_eq!(c.get(d).free, usize::from(oriented));
            prop_assert!(c.support().iter().all(|&k| k <= d && k >= fixed.min(d)));
        }
    }
}
