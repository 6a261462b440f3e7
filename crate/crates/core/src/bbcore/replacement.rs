use rand::Rng;

use super::{GroupOracle, GroupString};

/// Product replacement with an accumulator ("rattle").
///
/// Slots start as the seeds repeated cyclically. A step picks distinct slots
/// i, j and replaces s_i by s_i s_j^{±1} or s_j^{±1} s_i, then folds the new
/// s_i into the accumulator.
#[derive(Clone, Debug)]
pub struct PrState {
    pub slots: Vec<GroupString>,
    pub accumulator: GroupString,
    pub steps_taken: u64,
}

impl PrState {
    pub fn new(oracle: &dyn GroupOracle, seeds: &[GroupString], r: usize) -> Self {
        let r = r.max(seeds.len()).max(2);
        let slots = (0..r).map(|i| seeds[i % seeds.len()].clone()).collect();
        Self { slots, accumulator: oracle.identity(), steps_taken: 0 }
    }

    pub fn step<R: Rng + ?Sized>(&mut self, oracle: &dyn GroupOracle, rng: &mut R) -> &GroupString {
        let r = self.slots.len();
        let i = rng.gen_range(0..r);
        let mut j = rng.gen_range(0..r - 1);
        if j >= i {
            j += 1;
        }
        let mut other = self.slots[j].clone();
        if rng.gen::<bool>() {
            other = oracle.inv(&other);
        }
        self.slots[i] = if rng.gen::<bool>() { oracle.mul(&self.slots[i], &other) } else { oracle.mul(&other, &self.slots[i]) };
        self.accumulator = oracle.mul(&self.accumulator, &self.slots[i]);
        self.steps_taken += 1;
        &self.accumulator
    }
}
