//! Braids, their closures, and the three-strand formulas.

mod birman;
mod burau;
mod det;
mod normal;
mod word;

pub use birman::{birman_jones, closed_form_jones};
pub use burau::{burau, BurauMatrix};
pub use det::{baldwin_is_qa, crossing_upper_bound, det_formula, spanning_tree_count, tutte_graph, Multigraph};
pub use normal::B3NormalForm;
pub use word::BraidWord;
