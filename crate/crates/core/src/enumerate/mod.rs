//! Exhaustive generation, exact counting and uniform sampling.

mod closure;
mod counting;
mod exhaustive;
mod formulas;
mod ntt;
mod sampler;

pub use closure::{all_down_bridge_free, all_strip_glued, all_up_bridge_free, closure, GluingRules};
pub use counting::{count_ff, count_gff, CountTable};
pub use exhaustive::{
    all_excursions, all_ff, all_gff, brute_force_maps, brute_force_maps_with_limit, grammar_maps, LimitExceeded,
    BRUTE_FORCE_LIMIT,
};
pub use formulas::{formula_ff, formula_ff_ij, formula_maps};
pub use sampler::{sample_ff, sample_gff, sample_map, seeded_rng, FishSampler, GffSampler, RNG_ALGORITHM};
