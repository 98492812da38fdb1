//! Closed-form fidelities, closest classical states and classical correlation
//! for X-states.

mod candidates;
mod degenerate;
mod symmetric;

pub use candidates::{
    discord_upper_bound, x_candidate_discord, x_ccs_z, x_fidelity_equatorial, x_fidelity_z, Candidate,
    CandidateBreakdown, EquatorialOptimum, UpperBound,
};
pub use degenerate::{
    char_poly_coeffs, degenerate_discord, degenerate_fidelity, delta_coefficient, g_coefficient, lambda1_profile, printed_optimal_m,
    CharPolyCoeffs, DegenerateFidelity, DegenerateOptimum, Lambda1Profile, PrintedOptimalM, PRECONDITION_TOL,
};
pub use symmetric::{
    bd_transport, classical_correlation_symmetric, symmetric_ccs, symmetric_fidelity, BdBranch, BdTransport,
    CcsChoice, CcsSource, ClassicalCorrelation, SymmetricBranch, SymmetricCase, SymmetricCcs, BRANCH_TOL,
};
