//! Consequences for Dyck-like regions, permutations and watermelons, plus
//! finite checks of two conjectured characterizations.

pub mod conjectures;
pub mod dyck;
pub mod permutations;
pub mod watermelon;

pub use conjectures::{check_bottom_left_sum, check_pair_equidistribution, separated_regions, SweepReport};
pub use dyck::{contact_counts, easy_bottom_count, sum_dependence_check, BoundaryFamily, SumDependenceReport};
pub use permutations::{exchange_rl_extrema, perm_stats, permutation_correspondence_check, Permutation};
pub use watermelon::{returns_table, watermelon_region, Watermelon};
