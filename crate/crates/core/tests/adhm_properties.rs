use higgsmotive::adhm::{
    c_factor, invert_s, omega_closed_form, omega_prime, slope_filter, solve_recursion, t_to_s,
    BiSeries, OmegaVector, Slope, SlopeSet,
};
use higgsmotive::algebra::{CoeffPoly, Monomial, TSeries, Var, EXACT};
use higgsmotive::higgs::CurveParams;
use proptest::prelude::*;

const W: i64 = 8;

fn y(k: i64) -> CoeffPoly {
    CoeffPoly::monomial(Monomial::y_pow(k as i32))
}

/// `Ω'` restricted to charges in `[-w, w]`, as an exact series.
fn omega_prime_series(o: &OmegaVector, w: i64) -> BiSeries {
    let rmax = o.rmax();
    BiSeries::from_terms(
        rmax as usize,
        (1..=rmax)
            .flat_map(|r| (-w..=w).map(move |k| (r, k)))
            .map(|(r, k)| (r as usize, k, omega_prime(o, r, k))),
    )
}

fn small_poly() -> impl Strategy<Value = CoeffPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3), 0..4).prop_map(|t| {
        CoeffPoly::from_terms(
            t.into_iter()
                .map(|(a, b, c)| (Monomial::doubled(2 * a, 2 * b), c.into())),
        )
    })
}

#[test]
fn antisymmetry_of_omega_prime() {
    for (g, p) in [(0, 3), (1, 0), (1, 1), (2, 0)] {
        let o = omega_closed_form(CurveParams::new(g, p), 3).unwrap();
        for r in 1..=3 {
            for k in -W..=W {
                assert_eq!(
                    omega_prime(&o, r, k),
                    omega_prime(&o, r, -k).neg(),
                    "r={r} k={k}"
                );
            }
        }
    }
}

#[test]
fn filtered_halves_are_mirror_images() {
    let o = omega_closed_form(CurveParams::new(1, 1), 3).unwrap();
    let f = omega_prime_series(&o, W);
    for mu in [
        Slope::integer(0),
        Slope::new(1, 2),
        Slope::new(-1, 3),
        Slope::integer(2),
    ] {
        let above = slope_filter(&f, SlopeSet::Gt(mu));
        let below = invert_s(&slope_filter(&f, SlopeSet::Lt(-mu))).neg();
        for r in 0..=3 {
            assert_eq!(above.terms(r), below.terms(r), "mu={mu} r={r}");
        }
    }
}

#[test]
fn slope_zero_kernel() {
    // t (L - 1) / ((1 - t)(1 - tL)) in s equals Σ_{k≥1} (y^k - y^{-k}) s^k
    let n = 12;
    let l = CoeffPoly::lefschetz();
    let den = TSeries::polynomial(
        Var::T,
        [
            (0, CoeffPoly::one()),
            (1, CoeffPoly::from_int(-1).sub(&l)),
            (2, l.clone()),
        ],
    );
    let num = TSeries::monomial(Var::T, 1, l.sub(&CoeffPoly::one()), EXACT);
    let kernel = num.mul(&den.invert(n).unwrap()).truncate(n);
    let s = t_to_s(&kernel);
    for k in 0..n {
        let expect = if k == 0 {
            CoeffPoly::zero()
        } else {
            y(k).sub(&y(-k))
        };
        assert_eq!(s.coeff(k).unwrap(), expect, "k={k}");
    }
    // with Ω_r in front this is the slope-positive part of Ω'
    let o = omega_closed_form(CurveParams::new(2, 0), 2).unwrap();
    let f = slope_filter(
        &omega_prime_series(&o, n - 1),
        SlopeSet::Gt(Slope::integer(0)),
    );
    for r in 1..=2u32 {
        for k in -(n - 1)..n {
            let expect = s.coeff(k).unwrap_or_default().mul(&o.get(r));
            assert_eq!(f.coeff(r as usize, k).unwrap(), expect, "r={r} k={k}");
        }
    }
}

#[test]
fn kernel_coefficients_are_palindromic() {
    // t / ((1 - t)(1 - tL)) = Σ_k (1 + L + ... + L^{k-1}) t^k; invariance under
    // t ↦ 1/(tL) amounts to L^{k-1} c_k(1/L) = c_k(L)
    let n = 15;
    let l = CoeffPoly::lefschetz();
    let den = TSeries::polynomial(
        Var::T,
        [
            (0, CoeffPoly::one()),
            (1, CoeffPoly::from_int(-1).sub(&l)),
            (2, l),
        ],
    );
    let kernel = TSeries::monomial(Var::T, 1, CoeffPoly::one(), EXACT).mul(&den.invert(n).unwrap());
    for k in 1..n {
        let c = kernel.coeff(k).unwrap();
        let mirrored = c
            .invert_variables()
            .mul_monomial(Monomial::lefschetz(k as i32 - 1));
        assert_eq!(mirrored, c, "k={k}");
        assert_eq!(c.len(), k as usize);
    }
}

fn assert_c_duality(o: &OmegaVector, mu: Slope) {
    let c = c_factor(o, SlopeSet::Eq(mu), W + 1, o.rmax(), false).unwrap();
    let dual = invert_s(&c_factor(o, SlopeSet::Eq(-mu), W + 1, o.rmax(), true).unwrap());
    for r in 0..=o.rmax() as usize {
        for k in -W..=W {
            assert_eq!(
                c.coeff(r, k).unwrap(),
                dual.coeff(r, k).unwrap(),
                "mu={mu} r={r} k={k}"
            );
        }
    }
}

#[test]
fn c_duality() {
    for (g, p) in [(0, 0), (1, 0), (1, 1), (2, 0)] {
        let o = omega_closed_form(CurveParams::new(g, p), 3).unwrap();
        for mu in [Slope::integer(0), Slope::new(1, 2)] {
            assert_c_duality(&o, mu);
        }
    }
}

#[test]
fn recursion_matches_closed_form() {
    for g in 0..=2 {
        for p in 0..=1 {
            let params = CurveParams::new(g, p);
            let rep = solve_recursion(params, 3, 4).unwrap();
            assert_eq!(
                rep.omegas,
                omega_closed_form(params, 3).unwrap(),
                "g={g} p={p}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn c_duality_for_arbitrary_omega(o1 in small_poly(), o2 in small_poly(), half in any::<bool>()) {
        let o = OmegaVector::new(CurveParams::new(0, 0), vec![o1, o2]);
        let mu = if half { Slope::new(1, 2) } else { Slope::integer(0) };
        assert_c_duality(&o, mu);
    }

    #[test]
    fn factor_and_inverse_cancel(o1 in small_poly(), o2 in small_poly(), a in -3i64..3, b in 1i64..3) {
        let o = OmegaVector::new(CurveParams::new(0, 0), vec![o1, o2]);
        let set = SlopeSet::Ge(Slope::new(a, b));
        let prod = c_factor(&o, set, 6, 2, false)
            .unwrap()
            .mul(&c_factor(&o, set, 6, 2, true).unwrap())
            .unwrap();
        for r in 0..=2 {
            let (_, hi) = prod.window(r);
            for k in -6..=hi.unwrap_or(6).min(6) {
                let expect = if r == 0 && k == 0 { CoeffPoly::one() } else { CoeffPoly::zero() };
                prop_assert_eq!(prod.coeff(r, k).unwrap(), expect);
            }
        }
    }
}
