use serde::{Deserialize, Serialize};

use super::MeasurementDirection;

/// How a [`DiscordResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bruteforce,
    SymmetricClosed,
    XCandidates,
    Degenerate,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::SymmetricClosed => "symmetric_closed",
            Method::XCandidates => "x_candidates",
            Method::Degenerate => "degenerate",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Continuous family of optimal measurement directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OptimalFamily {
    /// Every azimuth at polar angle `theta`.
    FreePsi { theta: f64 },
    /// Every polar angle along the meridian at azimuth `psi`.
    FreeTheta { psi: f64 },
    /// Every direction.
    FreeBoth,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscordResult {
    pub fidelity: f64,
    pub discord: f64,
    pub optimal_directions: Vec<MeasurementDirection>,
    pub method: Method,
    pub degenerate_family: Option<OptimalFamily>,
}

impl DiscordResult {
    pub fn new(
        fidelity: f64,
        optimal_directions: Vec<MeasurementDirection>,
        method: Method,
        degenerate_family: Option<OptimalFamily>,
    ) -> Self {
        let fidelity = fidelity.min(1.0);
        Self { fidelity, discord: discord_from_fidelity(fidelity), optimal_directions, method, degenerate_family }
    }

    /// First reported optimal direction.
    pub fn direction(&self) -> Option<&MeasurementDirection> {
        self.optimal_directions.first()
    }
}

/// `2(1 - √F)`, clamped at zero.
pub fn discord_from_fidelity(fidelity: f64) -> f64 {
    (2.0 * (1.0 - fidelity.min(1.0).sqrt())).max(0.0)
}
