//! The fusion ring `Λ_N / I^(N,k)` in the Schur basis.

mod closed;
mod multiply;
mod pieri;
mod table;

pub use closed::{fw_a2_relation_check, gepner_witten_a1, FwReport, FwViolation};
pub use multiply::{
    basis, iterate_pieri_h, multiply, multiply_by_h_sequence, multiply_via_orbits,
    simple_current_power, tensor_product,
};
pub use pieri::{check_in_box, classical_pieri_h, is_restricted, pieri_e, pieri_h, SchurExpansion};
pub use table::{
    full_table, full_table_with_cap, verify_fusion_axioms, Axiom, AxiomCheck, AxiomReport,
    FusionTable, StructureConstants, DEFAULT_TABLE_CAP, TABLE_SCHEMA,
};
