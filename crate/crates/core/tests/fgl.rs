use num_bigint::BigInt;
use slicework_core::exactalg::Var;
use slicework_core::fgl::{
    hazewinkel_images, mo_generators, mo_independence_ranks, rbar_generators, t_functions, t_recursion, FormalAModule,
};
use slicework_core::{CyclotomicFrac, CyclotomicInt, GradedElem, Ring, SparsePoly, TruncSeries, F2};

type ZPoly = SparsePoly<BigInt>;
type F2Poly = SparsePoly<F2>;

/// `outer(inner(x))` by summing powers of `inner`, without series composition.
fn compose_by_powers<R: Ring>(outer: &TruncSeries<R>, inner: &TruncSeries<R>) -> TruncSeries<R> {
    let prec = outer.prec();
    let mut acc = TruncSeries::zero(prec);
    let mut power = TruncSeries::monomial(prec, R::one(), 0);
    for n in 1..=prec {
        power = power.mul(inner);
        acc = acc.add(&power.scale(outer.coeff(n)));
    }
    acc
}

fn pi_inv() -> CyclotomicFrac {
    CyclotomicFrac::from(CyclotomicInt::pi()).inverse().unwrap()
}

fn frac(x: &GradedElem) -> CyclotomicFrac {
    x.value.clone().into()
}

#[test]
fn rbar_satisfies_the_forward_identity() {
    // typ(r̄(x)) = log(x) where r̄(x) = x + Σ r̄_k x^{k+1}
    let n = 8;
    let r = rbar_generators(n).unwrap();
    let prec = n + 1;
    let mut rx = TruncSeries::<ZPoly>::x(prec);
    let mut log = TruncSeries::<ZPoly>::x(prec);
    let mut typ = TruncSeries::<ZPoly>::x(prec);
    for k in 1..=n {
        rx.set_coeff(k + 1, r.get(k).clone());
        log.set_coeff(k + 1, ZPoly::var(Var::M { k: k as u32, j: 0 }));
        if (k + 1).is_power_of_two() {
            typ.set_coeff(k + 1, ZPoly::var(Var::M { k: k as u32, j: 1 }));
        }
    }
    assert_eq!(compose_by_powers(&typ, &rx), log);
    let two = ZPoly::constant(BigInt::from(2));
    let m1 = ZPoly::var(Var::M { k: 1, j: 0 });
    let g1 = ZPoly::var(Var::M { k: 1, j: 1 });
    let m2 = ZPoly::var(Var::M { k: 2, j: 0 });
    assert_eq!(r.get(2), &m2.minus(&two.times(&m1).times(&g1)).plus(&two.times(&g1.times(&g1))));
    for k in 1..=n {
        assert_eq!(r.to_mo(k), mo_generators(n).unwrap().get(k).clone(), "k = {k}");
    }
}

#[test]
fn unoriented_generators_satisfy_the_forward_identity() {
    let n = 20;
    let h = mo_generators(n).unwrap();
    let prec = n + 1;
    let (mut hx, mut ell, mut g) = (TruncSeries::<F2Poly>::x(prec), TruncSeries::<F2Poly>::x(prec), TruncSeries::<F2Poly>::x(prec));
    for k in 1..=n {
        hx.set_coeff(k + 1, h.get(k).clone());
        let a = F2Poly::var(Var::Alpha(k as u32));
        if (k + 1).is_power_of_two() {
            g.set_coeff(k + 1, a.clone());
        }
        ell.set_coeff(k + 1, a);
    }
    assert_eq!(compose_by_powers(&g, &hx), ell);
    for (d, rank, expected) in mo_independence_ranks(&h, n) {
        assert_eq!(rank as u64, expected, "degree {d}");
    }
}

#[test]
fn hazewinkel_values_and_relation() {
    let reference: [[i64; 4]; 4] = [[-4, -6, -4, -1], [-6, 6, 11, 4], [100, 237, 166, 40], [-9707, -63495, -56631, -15754]];
    let v = hazewinkel_images(6).unwrap();
    for (img, p) in v.iter().zip(reference) {
        assert_eq!(img.value, GradedElem::from_pi_poly(p, (1 << img.n) - 1));
        assert_eq!(img.pi_valuation, 4 - img.n);
        assert!(img.unit_part.is_some());
    }
    // 2ℓ_n = Σ ℓ_i v_{n−i}^{2^i} with ℓ_i = π^{−i}, checked for every computed v_n
    for n in 1..=6u32 {
        let lhs = CyclotomicFrac::from_i64(2).times(&Ring::pow(&pi_inv(), n as u64));
        let rhs = (0..n).fold(CyclotomicFrac::zero(), |acc, i| {
            acc.plus(&Ring::pow(&pi_inv(), i as u64).times(&Ring::pow(&frac(&v[(n - i - 1) as usize].value), 1 << i)))
        });
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn t_functions_rebuild_the_zeta_series() {
    // log([ζ]x) = ζ log x and log(Σ^F yᵢ) = Σ log yᵢ, so
    // ζ·ℓ_m = Σ_{2^{n+k} = m} ℓ_k (t_n ζ^{2^n})^{2^k}
    let n_max = 5u32;
    for j in 0..8i64 {
        let z = CyclotomicFrac::from(CyclotomicInt::zeta_pow(j));
        let t = t_recursion(j, n_max).unwrap();
        for e in 0..=n_max {
            let m = 1u64 << e;
            let lhs = z.times(&Ring::pow(&pi_inv(), e as u64));
            let mut rhs = CyclotomicFrac::zero();
            for n in 0..=e {
                let k = e - n;
                let lead = frac(&t[n as usize]).times(&Ring::pow(&z, 1 << n));
                rhs = rhs.plus(&Ring::pow(&pi_inv(), k as u64).times(&Ring::pow(&lead, 1 << k)));
            }
            assert_eq!(lhs, rhs, "ζ^{j}, degree {m}");
        }
    }
    assert_eq!(t_recursion(1, 1).unwrap()[1], GradedElem::new(CyclotomicInt::zeta_pow(3), 1));
    assert_eq!(t_recursion(4, 1).unwrap()[1].pi_valuation(), Some(3));
    let table = t_functions(6, 16).unwrap();
    for n in 1..=6 {
        assert!(table.get(0, n).unwrap().value.is_zero());
    }
}

#[test]
fn zeta_series_compose_like_roots_of_unity() {
    let m = FormalAModule::new(12).unwrap();
    let s: Vec<_> = (0..8).map(|j| m.zeta_series(j).unwrap()).collect();
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(s[a].compose(&s[b]).unwrap(), s[(a + b) % 8], "ζ^{a} ∘ ζ^{b}");
        }
        assert!(s[a].coeffs().iter().all(|c| c.to_int().is_some()), "[ζ^{a}] is integral");
    }
    assert_eq!(s[0], TruncSeries::x(12));
}

#[test]
fn truncation_is_stable() {
    let big = FormalAModule::new(16).unwrap();
    let small = FormalAModule::new(8).unwrap();
    for j in 0..8 {
        assert_eq!(big.zeta_series(j).unwrap().truncate(8), small.zeta_series(j).unwrap());
    }
    assert_eq!(big.log().truncate(8), *small.log());
}

#[test]
fn iterated_group_law_matches_the_log_route() {
    let m = FormalAModule::new(8).unwrap();
    let law = m.group_law().unwrap();
    assert!(law.is_symmetric());
    let z = |j: i64| m.zeta_series(j).unwrap();
    let (a, b, c) = (z(1), z(3), z(6));
    let via_law = law.eval(&law.eval(&a, &b).unwrap(), &c).unwrap();
    let via_log = m.formal_add(&m.formal_add(&a, &b).unwrap(), &c).unwrap();
    assert_eq!(via_law, via_log);
    let other_order = law.eval(&a, &law.eval(&b, &c).unwrap()).unwrap();
    assert_eq!(via_law, other_order);
    // x +_F y has xy coefficient −2/π
    let want = CyclotomicFrac::from_i64(-2).times(&pi_inv());
    assert_eq!(law.coeff(1, 1), &want);
}
