//! Bures geometric quantum discord for two-qubit states.
//!
//! The crate computes the maximal fidelity `F_A` between a two-qubit state and
//! the set of states that are classical on subsystem A, the associated
//! discord `D_A = 2(1 - sqrt F_A)`, closest classical states, and the closed
//! forms available for X-states.
//!
//! ```
//! use bures_discord::prelude::*;
//!
//! let rho = TwoQubitState::werner(0.5).unwrap();
//! let result = max_fidelity_bruteforce(&rho, &GridConfig::default()).unwrap();
//! assert!((result.fidelity - 0.904508497187).abs() < 1e-6);
//! ```

pub mod cli;
pub mod closed_forms;
pub mod discord;
pub mod error;
pub mod linalg;
pub mod optimize;
pub mod states;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::closed_forms::{
        char_poly_coeffs, classical_correlation_symmetric, degenerate_discord, degenerate_fidelity, discord_upper_bound,
        lambda1_profile, symmetric_ccs, symmetric_fidelity, x_candidate_discord, x_ccs_z,
        x_fidelity_equatorial, x_fidelity_z,
    };
    pub use crate::discord::{
        ccs_from_measurement, entropic_discord, fidelity_at_direction, helstrom_success, induced_ensemble,
        lambda_matrix, max_fidelity_bruteforce, mutual_information, DiscordResult, GridConfig,
        MeasurementDirection, Method, OptimalFamily, QsdEnsemble,
    };
    pub use crate::error::{Error, Result};
    pub use crate::linalg::{
        bures_distance_sq, fidelity, herm_eig, partial_trace_a, partial_trace_b, psd_sqrt, trace_norm,
        von_neumann_entropy, ComplexMatrix2, ComplexMatrix4,
    };
    pub use crate::states::{
        classical_state, local_unitary, symmetric_to_bd, x_spectrum, x_state, BlochForm, ClassicalStateParams,
        TwoQubitState, XStateParams,
    };
}
