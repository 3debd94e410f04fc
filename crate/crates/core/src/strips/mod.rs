//! Straight-strip generators of the rank-two affine Weyl groups and the
//! factorizations and determinant identities built from them.

mod scheme;
mod verify;
mod words;

pub use scheme::{factorization_census, CensusReport, CensusWitness, FactorizationScheme};
pub use verify::{
    truncated_group_series, verify_corollary1, verify_maintheorem1, Corollary1, Corollary1Report, FactorizationReport,
};
pub use words::{
    check_power_lengths, g2_replacement_holds, strip_generators, unreplaced_g2_w1, PowerLengthReport, StripSpec,
    StripType,
};
