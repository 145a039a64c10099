use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::index;

use super::{crosses, EdgePairList, Pair};
use crate::error::{Error, Result};
use crate::exact::log2_f64;
use crate::rng;
use crate::set_system::SetSystem;

/// Per-set crossing counters `k(S)`; the weight of `S` is `2^k(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightState {
    k: Vec<u32>,
}

impl WeightState {
    pub fn new(num_sets: usize) -> Self {
        WeightState {
            k: vec![0; num_sets],
        }
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn weight(&self, i: usize) -> BigUint {
        BigUint::one() << self.k[i]
    }

    pub fn total(&self) -> BigUint {
        self.k.iter().map(|&k| BigUint::one() << k).sum()
    }

    /// Total weight of the sets of `s` crossing `pair`.
    pub fn crossing_weight(&self, s: &SetSystem, pair: Pair) -> BigUint {
        s.sets()
            .iter()
            .zip(&self.k)
            .filter(|(set, _)| crosses(set, pair))
            .map(|(_, &k)| BigUint::one() << k)
            .sum()
    }

    /// Doubles the weight of every set crossing `pair`.
    pub fn record(&mut self, s: &SetSystem, pair: Pair) {
        for (set, k) in s.sets().iter().zip(&mut self.k) {
            if crosses(set, pair) {
                *k += 1;
            }
        }
    }

    /// The weights as plain multiplicities, when they all fit in a `u64`.
    pub fn as_multiplicities(&self) -> Option<Vec<u64>> {
        self.k
            .iter()
            .map(|&k| (k < 64).then(|| 1u64 << k))
            .collect()
    }
}

/// Evaluate only a seeded random subset of candidate pairs per step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairSampling {
    pub pairs_per_step: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub sampling: Option<PairSampling>,
}

#[derive(Clone, Debug)]
pub struct TreeCertificate {
    /// Tree edges in selection order, smaller endpoint first.
    pub edges: EdgePairList,
    /// The endpoint dropped from the active set at each step.
    pub removed: Vec<usize>,
    pub measured_crossing: usize,
    pub per_set_crossing: Vec<usize>,
    /// `W_0, ..., W_{n-1}`, each recomputed from the counters.
    pub total_weights: Vec<BigUint>,
    /// Weight of the sets crossing the edge chosen at step `i`, before doubling.
    pub crossing_weights: Vec<BigUint>,
    pub final_log_weight_bound: f64,
    pub sampled: bool,
}

impl TreeCertificate {
    pub fn final_total_weight(&self) -> &BigUint {
        self.total_weights.last().expect("at least W_0 is recorded")
    }

    /// `2^k <= W_final`, i.e. `k <= log2 W_final`, decided exactly.
    pub fn crossing_within_log_weight(&self) -> bool {
        (BigUint::one() << self.measured_crossing) <= *self.final_total_weight()
    }

    /// Checks `W_{i+1} = W_i * (1 + c_i / W_i)` in exact rationals against the
    /// recorded totals.
    pub fn weight_recurrence_holds(&self) -> bool {
        if self.total_weights.len() != self.crossing_weights.len() + 1 {
            return false;
        }
        self.crossing_weights.iter().enumerate().all(|(i, c)| {
            let w = BigRational::from_integer(self.total_weights[i].clone().into());
            let c = BigRational::from_integer(c.clone().into());
            let next = BigRational::from_integer(self.total_weights[i + 1].clone().into());
            !w.is_zero() && &w * (BigRational::one() + c / &w) == next
        })
    }

    pub fn holds(&self) -> bool {
        self.crossing_within_log_weight() && self.weight_recurrence_holds()
    }
}

/// Greedy spanning tree with multiplicative weights.
///
/// At every step the active pair crossed by the least total weight is taken
/// (ties to the lexicographically smallest pair), its smaller endpoint leaves
/// the active set, and every set crossing it doubles its weight.
pub fn build_low_crossing_tree(s: &SetSystem, opts: &BuildOptions) -> Result<TreeCertificate> {
    let n = s.ground_size();
    if n == 0 {
        return Err(Error::input("the ground set is empty"));
    }
    if s.is_empty() {
        return Err(Error::input("the set system has no sets"));
    }
    let dual = member_bitsets(s);
    let mut state = WeightState::new(s.len());
    let mut active: Vec<usize> = (0..n).collect();
    let mut rng = opts.sampling.map(|p| rng::seeded(p.seed));

    let mut edges = Vec::with_capacity(n - 1);
    let mut removed = Vec::with_capacity(n - 1);
    let mut total_weights = vec![state.total()];
    let mut crossing_weights = Vec::with_capacity(n - 1);

    while active.len() > 1 {
        let candidates = candidate_pairs(&active, opts.sampling.as_ref(), rng.as_mut());
        let pair = cheapest_pair(&dual, state.k(), &candidates);
        crossing_weights.push(state.crossing_weight(s, pair));
        state.record(s, pair);
        total_weights.push(state.total());
        edges.push(pair);
        removed.push(pair.0);
        active.retain(|&x| x != pair.0);
    }

    let per_set_crossing: Vec<usize> = state.k().iter().map(|&k| k as usize).collect();
    let measured_crossing = per_set_crossing.iter().copied().max().unwrap_or(0);
    let final_log_weight_bound = log2_f64(total_weights.last().unwrap());
    Ok(TreeCertificate {
        edges: EdgePairList::new(n, &edges)?,
        removed,
        measured_crossing,
        per_set_crossing,
        total_weights,
        crossing_weights,
        final_log_weight_bound,
        sampled: opts.sampling.is_some(),
    })
}

/// `D_x`: the indices of the sets containing `x`.
fn member_bitsets(s: &SetSystem) -> Vec<FixedBitSet> {
    let mut d = vec![FixedBitSet::with_capacity(s.len()); s.ground_size()];
    for (i, set) in s.sets().iter().enumerate() {
        for x in set.ones() {
            d[x].insert(i);
        }
    }
    d
}

/// Active pairs in lexicographic order, or a sorted seeded sample of them.
fn candidate_pairs(
    active: &[usize],
    sampling: Option<&PairSampling>,
    rng: Option<&mut rng::Rng>,
) -> Vec<Pair> {
    let mut all = Vec::with_capacity(active.len() * (active.len() - 1) / 2);
    for (a, &x) in active.iter().enumerate() {
        for &y in &active[a + 1..] {
            all.push((x, y));
        }
    }
    match (sampling, rng) {
        (Some(p), Some(rng)) if p.pairs_per_step > 0 && all.len() > p.pairs_per_step => {
            let mut picked = index::sample(rng, all.len(), p.pairs_per_step).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|i| all[i]).collect()
        }
        _ => all,
    }
}

/// Sets grouped by counter value, as bitsets over set indices.
struct Levels {
    /// `(k - min k, members)` for every counter value in use.
    levels: Vec<(u32, FixedBitSet)>,
    fits_u128: bool,
}

impl Levels {
    fn new(k: &[u32]) -> Self {
        let base = k.iter().copied().min().unwrap_or(0);
        let top = k.iter().copied().max().unwrap_or(0);
        let mut levels: Vec<(u32, FixedBitSet)> = Vec::new();
        for (i, &ki) in k.iter().enumerate() {
            let shift = ki - base;
            match levels.iter_mut().find(|(s, _)| *s == shift) {
                Some((_, b)) => b.insert(i),
                None => {
                    let mut b = FixedBitSet::with_capacity(k.len());
                    b.insert(i);
                    levels.push((shift, b));
                }
            }
        }
        // a level sum is at most #sets * 2^(top - base)
        let count_bits = usize::BITS - k.len().leading_zeros();
        let fits_u128 = (top - base) + count_bits < 128;
        Levels { levels, fits_u128 }
    }

    fn cost_u128(&self, diff: &FixedBitSet) -> u128 {
        self.levels
            .iter()
            .map(|(shift, members)| (diff.intersection_count(members) as u128) << shift)
            .sum()
    }

    fn cost_big(&self, diff: &FixedBitSet) -> BigUint {
        self.levels
            .iter()
            .map(|(shift, members)| BigUint::from(diff.intersection_count(members)) << *shift)
            .sum()
    }
}

/// The candidate minimising the crossing weight `sum 2^k(S)`, first in the
/// given order on ties. Costs are computed relative to `2^min k`, which does
/// not change the argmin.
fn cheapest_pair(dual: &[FixedBitSet], k: &[u32], candidates: &[Pair]) -> Pair {
    let levels = Levels::new(k);
    let mut diff = FixedBitSet::with_capacity(k.len());
    let mut best_small: Option<(u128, Pair)> = None;
    let mut best_big: Option<(BigUint, Pair)> = None;
    for &(x, y) in candidates {
        diff.clone_from(&dual[x]);
        diff.symmetric_difference_with(&dual[y]);
        if levels.fits_u128 {
            let c = levels.cost_u128(&diff);
            if best_small.is_none_or(|(b, _)| c < b) {
                best_small = Some((c, (x, y)));
            }
        } else {
            let c = levels.cost_big(&diff);
            if best_big.as_ref().is_none_or(|(b, _)| c < *b) {
                best_big = Some((c, (x, y)));
            }
        }
    }
    best_small
        .map(|(_, p)| p)
        .or(best_big.map(|(_, p)| p))
        .expect("at least one candidate")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::{crossing_number, min_crossing_pair};
    use crate::graph::fixtures::*;
    use crate::set_system::neighborhood_system;
    use proptest::prelude::*;

    fn build(s: &SetSystem) -> TreeCertificate {
        build_low_crossing_tree(s, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn two_points_give_the_forced_edge() {
        let s = SetSystem::new(2, &[vec![0], vec![], vec![0, 1]]).unwrap();
        let t = build(&s);
        assert_eq!(t.edges.pairs(), &[(0, 1)]);
        assert_eq!(t.measured_crossing, 1);
        assert_eq!(t.per_set_crossing, vec![1, 0, 0]);
        assert!(t.holds());
    }

    #[test]
    fn empty_sets_cost_nothing() {
        let s = SetSystem::new(6, &vec![vec![]; 6]).unwrap();
        let t = build(&s);
        assert_eq!(t.measured_crossing, 0);
        assert_eq!(*t.final_total_weight(), BigUint::from(6u32));
        assert!(t.final_log_weight_bound >= 0.0 && t.holds());
        // with all costs tied, 0 is always paired with the next active point
        assert_eq!(t.edges.pairs(), &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn cycle_eight_golden() {
        let s = neighborhood_system(&cycle(8));
        let t = build(&s);
        t.edges.check_spanning_tree().unwrap();
        assert!(t.holds());
        assert!((t.measured_crossing as f64) <= t.final_log_weight_bound);
        assert!(t.measured_crossing as f64 <= 2.0 * 3.0 + 2.0);
        assert_eq!(t.measured_crossing, 3);
        assert_eq!(crossing_number(&t.edges, &s).1, t.per_set_crossing);
    }

    #[test]
    fn guards() {
        assert!(build_low_crossing_tree(
            &SetSystem::new(0, &[vec![]]).unwrap(),
            &BuildOptions::default()
        )
        .is_err());
        assert!(build_low_crossing_tree(
            &SetSystem::new(3, &[]).unwrap(),
            &BuildOptions::default()
        )
        .is_err());
        let single = build(&SetSystem::new(1, &[vec![0]]).unwrap());
        assert!(single.edges.is_empty() && single.holds());
    }

    #[test]
    fn wide_counters_use_big_costs() {
        let levels = Levels::new(&[0, 200, 3]);
        assert!(!levels.fits_u128);
        let mut d = FixedBitSet::with_capacity(3);
        d.insert(1);
        assert_eq!(levels.cost_big(&d), BigUint::one() << 200u32);
        let small = Levels::new(&[5, 7, 5]);
        assert!(small.fits_u128);
        d.insert(0);
        assert_eq!(small.cost_u128(&d), 5);
    }

    #[test]
    fn sampled_build_still_certifies() {
        let s = neighborhood_system(&complete(9));
        let opts = BuildOptions {
            sampling: Some(PairSampling {
                pairs_per_step: 5,
                seed: 3,
            }),
        };
        let a = build_low_crossing_tree(&s, &opts).unwrap();
        let b = build_low_crossing_tree(&s, &opts).unwrap();
        assert!(a.sampled && a.holds());
        a.edges.check_spanning_tree().unwrap();
        assert_eq!(a.edges, b.edges);
    }

    fn arb_system() -> impl Strategy<Value = SetSystem> {
        (2usize..10).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0..n, 0..n), 1..12)
                .prop_map(move |sets| SetSystem::new(n, &sets).unwrap())
        })
    }

    proptest! {
        #[test]
        fn certificate_and_tree_shape(s in arb_system()) {
            let t = build(&s);
            prop_assert_eq!(t.edges.len(), s.ground_size() - 1);
            t.edges.check_spanning_tree().unwrap();
            prop_assert!(t.holds());
            prop_assert_eq!(crossing_number(&t.edges, &s).1, t.per_set_crossing.clone());
        }

        /// Replays the build through the plain multiset selector with
        /// multiplicities `2^k`.
        #[test]
        fn selection_matches_weighted_min_pair(s in arb_system()) {
            let t = build(&s);
            let mut state = WeightState::new(s.len());
            let mut active: Vec<usize> = (0..s.ground_size()).collect();
            for &pair in t.edges.pairs() {
                let q = s.clone().with_multiplicities(state.as_multiplicities().unwrap()).unwrap();
                prop_assert_eq!(min_crossing_pair(&q, &active).unwrap(), pair);
                state.record(&s, pair);
                active.retain(|&x| x != pair.0);
            }
        }

        #[test]
        fn deterministic(s in arb_system()) {
            prop_assert_eq!(build(&s).edges, build(&s).edges);
        }
    }
}
