use num_bigint::BigInt;

use super::Realization;
use crate::algebra::{CoeffPoly, Monomial, TSeries, Var};

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `P_X(t) = (1 - tu)^g (1 - tv)^g`, or `(1 - tz)^{2g}` on the diagonal.
pub fn zeta_numerator(g: u32, realization: Realization) -> TSeries {
    let mut by_degree: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); 2 * g as usize + 1];
    match realization {
        Realization::Hodge => {
            for i in 0..=g {
                for j in 0..=g {
                    let sign = if (i + j) % 2 == 1 { -1 } else { 1 };
                    let c = binomial(g, i) * binomial(g, j) * sign;
                    by_degree[(i + j) as usize]
                        .push((Monomial::u_pow(i as i32).mul(Monomial::v_pow(j as i32)), c));
                }
            }
        }
        Realization::Diagonal => {
            for i in 0..=2 * g {
                let sign = if i % 2 == 1 { -1 } else { 1 };
                by_degree[i as usize].push((Monomial::y_pow(i as i32), binomial(2 * g, i) * sign));
            }
        }
    }
    TSeries::polynomial(
        Var::T,
        by_degree
            .into_iter()
            .enumerate()
            .map(|(k, ts)| (k as i64, CoeffPoly::from_terms(ts))),
    )
}

/// `Z(t) = P_X(t) / ((1 - t)(1 - tL))`, exact below `order`.
pub fn zeta_series(g: u32, order: i64, realization: Realization) -> TSeries {
    if order <= 0 {
        return TSeries::zero(Var::T, order);
    }
    // 1/((1-t)(1-tL)) = Σ_n t^n (1 + L + ... + L^n)
    let mut acc = CoeffPoly::zero();
    let mut geo = Vec::with_capacity(order as usize);
    for n in 0..order {
        acc.add_assign(&CoeffPoly::monomial(Monomial::lefschetz(n as i32)));
        geo.push(acc.clone());
    }
    let denom_inv = TSeries::new(Var::T, 0, order, geo);
    zeta_numerator(g, realization).mul(&denom_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::EXACT;

    #[test]
    fn first_coefficients() {
        let z0 = zeta_series(0, 3, Realization::Hodge);
        assert_eq!(z0.coeff(1).unwrap(), CoeffPoly::curve_class(0));
        let z1 = zeta_series(1, 3, Realization::Hodge);
        assert_eq!(z1.coeff(1).unwrap(), CoeffPoly::curve_class(1));
        assert_eq!(z1.order(), 3);
        let d = zeta_series(2, 3, Realization::Diagonal);
        assert_eq!(
            d.coeff(1).unwrap(),
            CoeffPoly::from_doubled(&[(0, 0, 1), (1, 1, -4), (2, 2, 1)])
        );
    }

    #[test]
    fn numerator_functional_equation() {
        // t^{2g} L^g P_X(1/(tL)) = P_X(t)
        for g in 0..=4 {
            for real in [Realization::Hodge, Realization::Diagonal] {
                let p = zeta_numerator(g, real);
                let terms = p.iter().map(|(k, c)| {
                    let twisted = c.mul_monomial(Monomial::lefschetz(g as i32 - k as i32));
                    (2 * g as i64 - k, twisted)
                });
                let lhs = TSeries::from_sparse(Var::T, terms, EXACT);
                assert_eq!(lhs, p, "g = {g}");
            }
        }
    }

    #[test]
    fn substitution_of_genus_zero_zeta() {
        let z = zeta_series(0, 3, Realization::Hodge).substitute(2, 1);
        let l = |e| CoeffPoly::monomial(Monomial::lefschetz(e));
        assert_eq!(z.coeff(0).unwrap(), CoeffPoly::one());
        assert!(z.coeff(1).unwrap().is_zero());
        assert_eq!(z.coeff(2).unwrap(), l(1).add(&l(2)));
        assert_eq!(z.coeff(4).unwrap(), l(2).add(&l(3)).add(&l(4)));
        assert_eq!(z.order(), 6);
    }
}
