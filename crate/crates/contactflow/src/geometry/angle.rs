use crate::error::GeometryError;
use serde::{Deserialize, Serialize};

/// Contact-angle parameter pair (beta, beta0) with beta in (0, 1) and
/// beta0 = sqrt(1 - beta^2). beta is the cosine of the angle the surface
/// makes with the reference plane along the free boundary; the junction
/// conditions fix the graph slope there to -beta0/beta (lens) so that the
/// area element equals 1/beta.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct AngleParams {
    beta: f64,
    beta0: f64,
}

impl AngleParams {
    pub fn new(beta: f64) -> Result<Self, GeometryError> {
        if !(beta > 0.0 && beta < 1.0) || !beta.is_finite() {
            return Err(GeometryError::InvalidAngle { beta });
        }
        Ok(Self {
            beta,
            beta0: (1.0 - beta * beta).sqrt(),
        })
    }

    /// The canonical test angle: beta = 1/2, beta0 = sqrt(3)/2.
    pub fn half() -> Self {
        Self::new(0.5).expect("1/2 lies in (0, 1)")
    }

    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    #[inline]
    pub fn beta0(&self) -> f64 {
        self.beta0
    }

    /// Area element v = sqrt(1 + |Dw|^2) forced at the junction: 1/beta.
    #[inline]
    pub fn v_junction(&self) -> f64 {
        1.0 / self.beta
    }

    /// Magnitude of the radial graph slope at the junction: beta0/beta.
    #[inline]
    pub fn slope_junction(&self) -> f64 {
        self.beta0 / self.beta
    }
}

impl TryFrom<f64> for AngleParams {
    type Error = GeometryError;
    fn try_from(beta: f64) -> Result<Self, Self::Error> {
        Self::new(beta)
    }
}

impl From<AngleParams> for f64 {
    fn from(a: AngleParams) -> f64 {
        a.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_angle_values() {
        let a = AngleParams::half();
        assert_eq!(a.beta(), 0.5);
        assert!((a.beta0() - 0.75f64.sqrt()).abs() < 1e-16);
        assert_eq!(a.v_junction(), 2.0);
        assert!((a.slope_junction() - 3.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_degenerate_angles() {
        for bad in [0.0, 1.0, -0.3, 1.7, f64::NAN] {
            assert!(AngleParams::new(bad).is_err());
        }
    }

    #[test]
    fn beta_beta0_on_unit_circle() {
        for k in 1..20 {
            let a = AngleParams::new(k as f64 / 20.0).unwrap();
            let s = a.beta() * a.beta() + a.beta0() * a.beta0();
            assert!((s - 1.0).abs() < 1e-15);
        }
    }
}
