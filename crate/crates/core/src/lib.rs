//! Divisibility graphs of conjugacy class sizes of the symmetric and
//! alternating groups.
//!
//! Class sizes are computed exactly in factored form from cycle types, so
//! the divisibility test behind every edge is an exponent comparison. The
//! crate builds `D(S_n)` and `D(A_n)` (and the related `Γ`, `Δ`, `B`
//! graphs), answers component and diameter queries, checks the known
//! structural results on these graphs over ranges of `n`, and carries a
//! brute-force permutation oracle for differential testing.

pub mod cycle_type;
pub mod error;
pub mod export;
pub mod factored;
pub mod graph;
pub mod group;
pub mod input;
pub mod oracle;
pub mod orders;
pub mod report;
pub mod verify;

pub use cycle_type::{enumerate_cycle_types, CycleType, Parity, Part};
pub use error::{Error, Result};
pub use factored::{divides, factorial_factored, FactoredNat};
pub use graph::{
    build_b, build_d, build_delta, build_gamma, components, d_connectivity, size_set, size_set_alt, size_set_sym,
    ComponentReport, Connectivity, GraphKind, GraphLimits, SizeSet, UGraph, Vertex,
};
pub use group::Group;
pub use input::parse_integer_set;
pub use orders::{
    centralizer_order_alt, centralizer_order_sym, class_record, class_size_sym, class_sizes_alt, AltClasses,
    ClassRecord,
};
pub use report::{Verdict, VerdictReport, Witness};
pub use verify::{run_claim, Budgets, Claim};
