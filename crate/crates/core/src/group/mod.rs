//! Finite groups as dense multiplication tables (order <= 200), subgroups,
//! homomorphisms, automorphism groups, abelian structure and double cosets.

mod abelian;
mod catalog;
mod cosets;
mod maps;
mod parse;
mod subgroup;
mod table;

pub use abelian::{char_eval, character_group, AbelianShape};
pub use catalog::identify;
pub use cosets::{conjugacy_classes, conjugacy_partition, double_cosets, DoubleCoset};
pub use maps::{automorphisms, isomorphic, isomorphism, min_generating_set, GroupMap};
pub use parse::parse_spec;
pub use subgroup::{all_subgroups, Subgroup};
pub use table::{GroupTable, MAX_ORDER};
