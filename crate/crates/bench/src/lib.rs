//! Benchmark inputs shared by the criterion benches.

use imagebin_core::fixtures::{conjugated_ifa, dba_union, random_markov_chain};
use imagebin_core::{kdis, Iba, Ifa, MarkovChain, Nba};

/// Conjugated IFAs with `states` states, seeded by `seed` and `seed + 1`.
pub fn ifa_pair(seed: u64, states: usize) -> (Ifa, Ifa) {
    (conjugated_ifa(seed, states, 2).1, conjugated_ifa(seed + 1, states, 2).1)
}

pub fn k_ambiguous(seed: u64, k: usize, states: usize) -> Nba {
    dba_union(seed, k, states, 2)
}

/// A disambiguated NBA and a Markov chain over the same alphabet.
pub fn model_check_input(seed: u64, k: usize, states: usize, chain_states: usize) -> (Iba, MarkovChain) {
    let iba = kdis(&k_ambiguous(seed, k, states), k as u32).expect("k >= 1").iba;
    (iba, random_markov_chain(seed, chain_states, 2))
}
