use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::zeta::zeta_series;
use super::{CurveParams, Realization};
use crate::algebra::{CoeffPoly, Monomial, TSeries, Var, EXACT};
use crate::partitions::Partition;

type Key = (CurveParams, Partition, Realization);

fn cache() -> &'static Mutex<HashMap<Key, Arc<TSeries>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<TSeries>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exponent of the monomial prefactor of `λH_λ`, which is also its lowest
/// possibly nonzero `t` exponent:
/// `p (n(λ') - n(λ)) + (1 - g)(2 n(λ) + |λ|)`.
pub fn hla_lower_bound(params: CurveParams, lam: &Partition) -> i64 {
    let bd = lam.box_data();
    let (g, p) = (params.g as i64, params.p as i64);
    p * (bd.n_conj as i64 - bd.n as i64) + (1 - g) * (2 * bd.n as i64 + lam.size() as i64)
}

/// `Π_x (-t^{a-l} L^a)^p`, the finite part of the box product.
pub fn finite_factor(p: u32, lam: &Partition) -> TSeries {
    let bd = lam.box_data();
    let e: i64 = bd
        .boxes
        .iter()
        .map(|b| b.arm as i64 - b.leg as i64)
        .sum::<i64>()
        * p as i64;
    let m = Monomial::lefschetz((bd.n_conj * p as u64) as i32);
    let sign = if (p as u64 * lam.size() as u64) % 2 == 1 {
        -1
    } else {
        1
    };
    TSeries::monomial(Var::T, e, CoeffPoly::from_int(sign).mul_monomial(m), EXACT)
}

/// `λH_λ^{(p)}(t) = Π_x (-t^{a-l} L^a)^p t^{(1-g)(2l+1)} Z(t^h L^a)`, exact below
/// `order`. Results are cached per partition at the largest order computed.
pub fn hla(params: CurveParams, lam: &Partition, order: i64, realization: Realization) -> TSeries {
    let key = (params, lam.clone(), realization);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        if hit.order() >= order {
            return hit.truncate(order);
        }
    }
    let value = compute(params, lam, order, realization);
    let mut guard = cache().lock().unwrap();
    let entry = guard.entry(key).or_insert_with(|| Arc::new(value.clone()));
    if entry.order() < order {
        *entry = Arc::new(value.clone());
    }
    value
}

fn compute(params: CurveParams, lam: &Partition, order: i64, realization: Realization) -> TSeries {
    let sigma = hla_lower_bound(params, lam);
    let need = order - sigma;
    if need <= 0 {
        return TSeries::zero(Var::T, order);
    }
    let bd = lam.box_data();
    let mut zetas: HashMap<i64, TSeries> = HashMap::new();
    let mut prod = TSeries::one(Var::T);
    for b in &bd.boxes {
        let h = b.hook as i64;
        let q = (need + h - 1) / h;
        let base = zetas
            .entry(q)
            .or_insert_with(|| zeta_series(params.g, q, realization));
        let factor = base.substitute(b.hook, b.arm as i32).truncate(need);
        prod = prod.mul(&factor);
    }
    prod.mul(&finite_factor(params.p, lam)).shift(
        (1 - params.g as i64) * (2 * bd.n as i64 + lam.size() as i64),
        Monomial::ONE,
    )
}
