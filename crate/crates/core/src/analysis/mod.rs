//! Minimum weight, entropy, balance checks, twisted-code censuses and
//! length predicates.

pub mod balanced;
pub mod census;
pub mod entropy;
pub mod predicates;
pub mod weight;

pub use balanced::{balanced_check, default_deltas, BalancedReport, EntropyCheck, PermutationPair};
pub use census::{
    census, census_parts, find_good_beta, CensusBudget, CensusReport, CensusRow, DeltaSummary, SearchStrategy,
    K_STAR_BUDGET,
};
pub use entropy::{entropy_q, parse_delta, BOUND_SLACK};
pub use predicates::{good_n_predicates, good_n_sequence, GoodNFlags, Profile};
pub use weight::{
    code_size, hamming_weight, min_weight, min_weight_exact, weight_distribution, WeightMethod, WeightReport,
};
