//! Measurement-level engine: the fidelity objective over projective
//! measurements on A, its brute-force maximization, closest classical states
//! and the state-discrimination view of the same quantity.

mod ccs;
mod direction;
mod entropic;
mod objective;
mod qsd;
mod result;
mod search;

pub use ccs::{ccs_from_measurement, CcsOutcome, PROJECTOR_GAP_TOL};
pub use direction::MeasurementDirection;
pub use entropic::{conditional_entropy, entropic_discord, mutual_information, EntropicDiscord};
pub use objective::{fidelity_at_direction, lambda_matrix, Objective};
pub use qsd::{helstrom_success, induced_ensemble, QsdEnsemble, PRIOR_CUTOFF};
pub use result::{discord_from_fidelity, DiscordResult, Method, OptimalFamily};
pub use search::{max_fidelity_bruteforce, GridConfig, MIN_GRID_PSI, MIN_GRID_THETA, OPTIMUM_TOL};
