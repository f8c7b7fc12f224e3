//! Integer partitions and their per-box arm, leg and hook statistics.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Statistics of one box `(i, j)`, rows and columns counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Box {
    pub i: u32,
    pub j: u32,
    pub arm: u32,
    pub leg: u32,
    pub hook: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxData {
    /// Boxes in row-major order.
    pub boxes: Vec<Box>,
    /// `n(λ) = Σ (i-1) λ_i`, the sum of leg lengths.
    pub n: u64,
    /// `n(λ')`, the sum of arm lengths.
    pub n_conj: u64,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "not a partition: {parts:?}"
        );
        Partition { parts }
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn box_data(&self) -> BoxData {
        let conj = self.conjugate();
        let mut boxes = Vec::with_capacity(self.size() as usize);
        for (row, &len) in self.parts.iter().enumerate() {
            let i = row as u32 + 1;
            for j in 1..=len {
                let arm = len - j;
                let leg = conj.parts[j as usize - 1] - i;
                boxes.push(Box {
                    i,
                    j,
                    arm,
                    leg,
                    hook: arm + leg + 1,
                });
            }
        }
        let n = boxes.iter().map(|b| b.leg as u64).sum();
        let n_conj = boxes.iter().map(|b| b.arm as u64).sum();
        BoxData { boxes, n, n_conj }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn boxes_of_21() {
        let bd = p(&[2, 1]).box_data();
        let triples: Vec<_> = bd
            .boxes
            .iter()
            .map(|b| (b.i, b.j, b.arm, b.leg, b.hook))
            .collect();
        assert_eq!(
            triples,
            vec![(1, 1, 1, 1, 3), (1, 2, 0, 0, 1), (2, 1, 0, 0, 1)]
        );
        assert_eq!((bd.n, bd.n_conj), (1, 1));
        let bd = p(&[3, 1]).box_data();
        assert_eq!((bd.n, bd.n_conj), (1, 3));
        let bd = p(&[1]).box_data();
        assert_eq!(bd.boxes.len(), 1);
        assert_eq!(
            (bd.boxes[0].arm, bd.boxes[0].leg, bd.boxes[0].hook),
            (0, 0, 1)
        );
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn row_leg_identity_up_to_12() {
        for n in 0..=12 {
            for lam in enumerate_partitions(n) {
                let s: i64 = lam
                    .box_data()
                    .boxes
                    .iter()
                    .map(|b| b.i as i64 - b.leg as i64 - 1)
                    .sum();
                assert_eq!(s, 0, "{lam:?}");
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..8, 0..8).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(lam in arb_partition()) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn conjugation_swaps_arms_and_legs(lam in arb_partition()) {
            let mut a: Vec<_> = lam.box_data().boxes.iter().map(|b| (b.arm, b.leg)).collect();
            let mut b: Vec<_> = lam.conjugate().box_data().boxes.iter().map(|b| (b.leg, b.arm)).collect();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
            let bd = lam.box_data();
            prop_assert_eq!(bd.n_conj, lam.conjugate().n());
            prop_assert_eq!(bd.n, lam.n());
            prop_assert!(bd.boxes.iter().all(|b| b.hook == b.arm + b.leg + 1));
        }
    }
}
