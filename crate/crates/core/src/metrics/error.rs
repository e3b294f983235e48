//! Error of an estimated ideal point.

use serde::{Deserialize, Serialize};

/// Which form of the error to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorForm {
    /// Euclidean norm of the normalized component errors.
    #[default]
    Squared,
    /// Square root of the plain sum of normalized component errors.
    Unsquared,
}

/// Distance between an estimate `z_e` and the true ideal point, after scaling
/// each objective by `z_nad - z_ide`. Components better than the ideal are
/// clamped to zero error with a warning.
pub fn e_metric(z_e: &[f64], z_ide: &[f64], z_nad: &[f64], form: ErrorForm) -> f64 {
    assert_eq!(z_e.len(), z_ide.len(), "estimate and ideal differ in length");
    assert_eq!(z_e.len(), z_nad.len(), "estimate and nadir differ in length");
    let mut sum = 0.0;
    for ((e, lo), hi) in z_e.iter().zip(z_ide).zip(z_nad) {
        assert!(hi > lo, "nadir must exceed ideal in every objective");
        let mut t = (e - lo) / (hi - lo);
        if t < 0.0 {
            log::warn!("estimate {e} is below the ideal component {lo}; counted as exact");
            t = 0.0;
        }
        sum += match form {
            ErrorForm::Squared => t * t,
            ErrorForm::Unsquared => t,
        };
    }
    sum.sqrt()
}
