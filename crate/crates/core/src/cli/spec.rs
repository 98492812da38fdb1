use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::linalg::ComplexMatrix4;
use crate::states::{classical_state, x_state, ClassicalStateParams, TwoQubitState, XStateParams};

/// Off-pattern tolerance when recognizing an X-state in a general matrix.
pub const X_PATTERN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    XState,
    Matrix,
    Classical,
    Werner,
}

/// X-state parameters with complex entries split into real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XStateSpec {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    #[serde(default)]
    pub x_re: f64,
    #[serde(default)]
    pub x_im: f64,
    #[serde(default)]
    pub y_re: f64,
    #[serde(default)]
    pub y_im: f64,
}

impl XStateSpec {
    pub fn params(&self) -> crate::Result<XStateParams> {
        XStateParams::new(
            self.a,
            self.b,
            self.c,
            self.d,
            Complex64::new(self.x_re, self.x_im),
            Complex64::new(self.y_re, self.y_im),
        )
    }

    pub fn field_mut(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "a" => &mut self.a,
            "b" => &mut self.b,
            "c" => &mut self.c,
            "d" => &mut self.d,
            "x_re" => &mut self.x_re,
            "x_im" => &mut self.x_im,
            "y_re" => &mut self.y_re,
            "y_im" => &mut self.y_im,
            _ => return None,
        })
    }
}

impl From<&XStateParams> for XStateSpec {
    fn from(p: &XStateParams) -> Self {
        Self { a: p.a, b: p.b, c: p.c, d: p.d, x_re: p.x.re, x_im: p.x.im, y_re: p.y.re, y_im: p.y.im }
    }
}

/// A 4×4 complex matrix as separate real and imaginary row arrays.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub re: [[f64; 4]; 4],
    pub im: [[f64; 4]; 4],
}

impl From<&ComplexMatrix4> for MatrixSpec {
    fn from(m: &ComplexMatrix4) -> Self {
        Self {
            re: std::array::from_fn(|i| std::array::from_fn(|j| m.0[i][j].re)),
            im: std::array::from_fn(|i| std::array::from_fn(|j| m.0[i][j].im)),
        }
    }
}

impl MatrixSpec {
    pub fn matrix(&self) -> ComplexMatrix4 {
        ComplexMatrix4::from_fn(|i, j| Complex64::new(self.re[i][j], self.im[i][j]))
    }
}

/// JSON description of a two-qubit state: `kind` plus exactly one matching
/// payload field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpec {
    pub kind: StateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_state: Option<XStateSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical: Option<ClassicalStateParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub werner: Option<f64>,
}

/// A parsed state and, when it has the X pattern, its parameters.
#[derive(Debug, Clone, Copy)]
pub struct ResolvedState {
    pub state: TwoQubitState,
    pub x_params: Option<XStateParams>,
}

impl StateSpec {
    pub fn x_state(p: &XStateParams) -> Self {
        Self { kind: StateKind::XState, x_state: Some(p.into()), matrix: None, classical: None, werner: None }
    }

    pub fn werner(w: f64) -> Self {
        Self { kind: StateKind::Werner, x_state: None, matrix: None, classical: None, werner: Some(w) }
    }

    pub fn matrix(m: &ComplexMatrix4) -> Self {
        Self { kind: StateKind::Matrix, x_state: None, matrix: Some(m.into()), classical: None, werner: None }
    }

    pub fn resolve(&self) -> Result<ResolvedState, CliError> {
        let populated = [self.x_state.is_some(), self.matrix.is_some(), self.classical.is_some(), self.werner.is_some()]
            .iter()
            .filter(|&&b| b)
            .count();
        if populated != 1 {
            return Err(CliError::invalid("invalid_spec", format!("expected exactly one state payload, found {populated}")));
        }
        let missing = || CliError::invalid("invalid_spec", format!("kind {:?} has no matching payload", self.kind));
        let (state, x_params) = match self.kind {
            StateKind::XState => {
                let p = self.x_state.ok_or_else(missing)?.params()?;
                (x_state(&p)?, Some(p))
            }
            StateKind::Werner => {
                let w = self.werner.ok_or_else(missing)?;
                let rho = TwoQubitState::werner(w)?;
                (rho, Some(XStateParams::werner(w)?))
            }
            StateKind::Classical => {
                let rho = classical_state(&self.classical.ok_or_else(missing)?)?;
                (rho, XStateParams::from_state(&rho, X_PATTERN_TOL))
            }
            StateKind::Matrix => {
                let m = self.matrix.ok_or_else(missing)?.matrix();
                if !m.is_finite() {
                    return Err(CliError::invalid("invalid_params", "matrix has non-finite entries".into()));
                }
                let rho = TwoQubitState::new(m)?;
                (rho, XStateParams::from_state(&rho, X_PATTERN_TOL))
            }
        };
        Ok(ResolvedState { state, x_params })
    }
}

/// One-parameter family of states for a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SweepFamily {
    Werner { from: f64, to: f64 },
    XStateField { field: String, base: XStateSpec, from: f64, to: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMethod {
    Bruteforce,
    Closed,
    Candidates,
    Entropic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub family: SweepFamily,
    pub steps: usize,
    #[serde(default = "default_methods")]
    pub methods: Vec<SweepMethod>,
}

fn default_methods() -> Vec<SweepMethod> {
    vec![SweepMethod::Bruteforce]
}

impl SweepSpec {
    fn endpoints(&self) -> (f64, f64) {
        match self.family {
            SweepFamily::Werner { from, to } | SweepFamily::XStateField { from, to, .. } => (from, to),
        }
    }

    pub fn param_values(&self) -> Vec<f64> {
        let (from, to) = self.endpoints();
        let last = (self.steps - 1) as f64;
        (0..self.steps).map(|i| from + (to - from) * i as f64 / last).collect()
    }

    pub fn state_at(&self, t: f64) -> Result<XStateParams, CliError> {
        match &self.family {
            SweepFamily::Werner { .. } => {
                if !(0.0..=1.0).contains(&t) {
                    return Err(CliError::invalid("invalid_params", format!("Werner weight {t} outside [0, 1]")));
                }
                Ok(XStateParams::werner(t)?)
            }
            SweepFamily::XStateField { field, base, .. } => {
                let mut spec = *base;
                let slot = spec
                    .field_mut(field)
                    .ok_or_else(|| CliError::invalid("invalid_spec", format!("unknown X-state field {field:?}")))?;
                *slot = t;
                Ok(spec.params()?)
            }
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.steps < 2 {
            return Err(CliError::invalid("invalid_spec", format!("steps = {} must be at least 2", self.steps)));
        }
        if self.methods.is_empty() {
            return Err(CliError::invalid("invalid_spec", "methods must not be empty".into()));
        }
        let (from, to) = self.endpoints();
        self.state_at(from)?;
        self.state_at(to)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let x: StateSpec = serde_json::from_str(
            r#"{"kind":"x_state","x_state":{"a":0.4,"b":0.3,"c":0.2,"d":0.1,"x_re":0.05,"x_im":0,"y_re":0.1,"y_im":0}}"#,
        )
        .unwrap();
        assert!(x.resolve().unwrap().x_params.is_some());
        let w: StateSpec = serde_json::from_str(r#"{"kind":"werner","werner":0.5}"#).unwrap();
        assert!(w.resolve().unwrap().x_params.unwrap().is_symmetric(0.0));
        let c: StateSpec = serde_json::from_str(
            r#"{"kind":"classical","classical":{"p":0.5,"r":[0,0,1],"s":[0,0,1],"t":[0,0,-1]}}"#,
        )
        .unwrap();
        assert!(c.resolve().unwrap().x_params.is_some());
        let m = StateSpec::matrix(TwoQubitState::maximally_mixed().matrix());
        let back: StateSpec = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_two_payloads() {
        let s: StateSpec = serde_json::from_str(
            r#"{"kind":"werner","werner":0.5,"classical":{"p":0.5,"r":[0,0,1],"s":[0,0,0],"t":[0,0,0]}}"#,
        )
        .unwrap();
        assert!(s.resolve().is_err());
    }

    #[test]
    fn sweep_grid_and_validation() {
        let s: SweepSpec =
            serde_json::from_str(r#"{"family":{"kind":"werner","from":0,"to":1},"steps":11}"#).unwrap();
        s.validate().unwrap();
        let v = s.param_values();
        assert_eq!(v.len(), 11);
        assert!((v[10] - 1.0).abs() < 1e-15);
        let bad: SweepSpec =
            serde_json::from_str(r#"{"family":{"kind":"werner","from":0,"to":1.5},"steps":3}"#).unwrap();
        assert!(bad.validate().is_err());
    }
}
