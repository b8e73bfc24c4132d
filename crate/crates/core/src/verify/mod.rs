//! Validators for closed-manifold identities and cusp counts, and the
//! randomised oracles that cross-check the linear algebra.

mod corollaries;
mod oracles;
mod records;

pub use corollaries::{
    hughes_melvin_sweep, run_all as run_corollaries, t3_absorbs_sphere, t3_summand_not_embedding,
    CorollaryReport,
};
pub use oracles::{
    characteristic_polynomial, invariant_factors_by_minors, oracle_parity_lemma, oracle_signature,
    oracle_snf, parity_lemma_holds, random_even_nonsingular, random_matrix, random_symmetric,
    signature_by_root_signs, OracleFailure, OracleReport, SweepConfig,
};
pub use records::{
    check_closed_r5, check_closed_r6, check_cusp_residue, check_equal_signatures_if_reg_homotopic,
    check_partition_divisibility, check_spin_even_components, glue_r5, glue_r6,
    ClosedMapRecordR5, ClosedMapRecordR6, PartitionRecord,
};
