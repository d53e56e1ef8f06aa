use crate::error::{Error, Result};

/// Numerical tolerances shared by every operation.
///
/// `eps_geom` is the single knob for point coincidence, on-boundary tests,
/// curve closure and antipodality. `eps_area` decides set equality through the
/// area of a symmetric difference. `eps_root` is the bracket width for
/// bisections. `n_samples` controls boundary sampling density.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub eps_geom: f64,
    pub eps_area: f64,
    pub eps_root: f64,
    pub n_samples: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_geom: 1e-7,
            eps_area: 1e-8,
            eps_root: 1e-9,
            n_samples: 4096,
        }
    }
}

impl Tolerance {
    pub fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.eps_geom) {
            return Err(Error::InvalidTolerance("eps_geom must be positive"));
        }
        if !positive(self.eps_area) {
            return Err(Error::InvalidTolerance("eps_area must be positive"));
        }
        if !positive(self.eps_root) {
            return Err(Error::InvalidTolerance("eps_root must be positive"));
        }
        if self.n_samples == 0 {
            return Err(Error::InvalidTolerance("n_samples must be positive"));
        }
        if self.eps_area < self.eps_geom * self.eps_geom {
            return Err(Error::InvalidTolerance("eps_area must be at least eps_geom^2"));
        }
        Ok(())
    }

    /// Distance below which two nodes of the offset engine are the same point.
    pub(crate) fn snap(&self) -> f64 {
        self.eps_geom * 1e-3
    }

    /// Slack allowed between a trimmed offset point's distance and the offset radius.
    pub(crate) fn keep(&self) -> f64 {
        self.eps_geom * 1e-2
    }

    /// Radius used for the closed, tolerance-aware inner parallel set
    /// `{dist >= r - eps_geom/4}`.
    pub(crate) fn closed_radius(&self, r: f64) -> f64 {
        (r - 0.25 * self.eps_geom).max(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        Tolerance::default().validate().unwrap();
    }

    #[test]
    fn rejects_area_below_geom_squared() {
        let t = Tolerance {
            eps_geom: 1e-3,
            eps_area: 1e-7,
            ..Tolerance::default()
        };
        assert!(t.validate().is_err());
    }
}
