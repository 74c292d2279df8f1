//! Closed-form rotationally symmetric profiles: the catenoid (the stationary
//! exterior surface), the paraboloid and spherical-cap lens initial data, and
//! the radial mean-curvature formula shared by every radial mode.

use crate::error::RadialError;
use crate::geometry::AngleParams;

/// Minimal catenoid: u(r) = c (arccosh(r/c) - arccosh(r0/c)) with neck
/// parameter c = r0 beta0 chosen so the profile meets the plane at r = r0
/// with slope beta0/beta. Mean curvature vanishes identically.
#[derive(Debug, Clone, Copy)]
pub struct CatenoidProfile {
    c: f64,
    r0: f64,
}

impl CatenoidProfile {
    pub fn new(r0: f64, angle: AngleParams) -> Self {
        Self {
            c: r0 * angle.beta0(),
            r0,
        }
    }

    /// Neck radius c: the profile only exists for r >= c.
    pub fn neck(&self) -> f64 {
        self.c
    }

    pub fn height(&self, r: f64) -> Result<f64, RadialError> {
        if r < self.c {
            return Err(RadialError::CatenoidDomain { r, rmin: self.c });
        }
        Ok(self.c * ((r / self.c).acosh() - (self.r0 / self.c).acosh()))
    }

    /// u_r = c / sqrt(r^2 - c^2); equals beta0/beta at r = r0.
    pub fn slope(&self, r: f64) -> Result<f64, RadialError> {
        if r <= self.c {
            return Err(RadialError::CatenoidDomain { r, rmin: self.c });
        }
        Ok(self.c / (r * r - self.c * self.c).sqrt())
    }

    /// u_rr = -c r / (r^2 - c^2)^{3/2}.
    pub fn curvature(&self, r: f64) -> Result<f64, RadialError> {
        if r <= self.c {
            return Err(RadialError::CatenoidDomain { r, rmin: self.c });
        }
        Ok(-self.c * r / (r * r - self.c * self.c).powf(1.5))
    }
}

/// Canonical catenoid height at beta = 1/2, r0 = 1 (neck sqrt(3)/2).
pub fn catenoid(r: f64) -> Result<f64, RadialError> {
    CatenoidProfile::new(1.0, AngleParams::half()).height(r)
}

/// Concave paraboloid lens profile w(r) = (beta0 / (2 beta r0)) (r0^2 - r^2):
/// exact height and angle compatibility at r = r0, H strictly negative.
pub fn paraboloid_height(r: f64, r0: f64, angle: AngleParams) -> f64 {
    angle.beta0() / (2.0 * angle.beta() * r0) * (r0 * r0 - r * r)
}

/// Spherical-cap lens profile meeting the plane at radius r0 with the exact
/// contact angle: w(r) = sqrt(rho0^2 - r^2) - rho0 beta, rho0 = r0 / beta0.
pub fn cap_height(r: f64, r0: f64, angle: AngleParams) -> f64 {
    let rho0 = r0 / angle.beta0();
    (rho0 * rho0 - r * r).sqrt() - rho0 * angle.beta()
}

/// Mean curvature of a rotationally symmetric gauge curve
/// s -> (phi(s), u(s)) revolved about the axis:
/// H = [phi' u'' - u' phi'' + (phi'^2 + u'^2) u' / phi] / (phi'^2 + u'^2)^{3/2}.
/// Reduces to w_rr/v^3 + w_r/(r v) in graph form (phi = r).
pub fn radial_h(phi: f64, phi_r: f64, u_r: f64, phi_rr: f64, u_rr: f64) -> f64 {
    let q = phi_r * phi_r + u_r * u_r;
    (phi_r * u_rr - u_r * phi_rr + q * u_r / phi) / q.powf(1.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catenoid_slope_at_junction_is_sqrt3() {
        let p = CatenoidProfile::new(1.0, AngleParams::half());
        assert!((p.slope(1.0).unwrap() - 3.0f64.sqrt()).abs() < 1e-14);
        assert_eq!(p.height(1.0).unwrap(), 0.0);
    }

    #[test]
    fn catenoid_mean_curvature_vanishes() {
        let p = CatenoidProfile::new(1.0, AngleParams::half());
        for k in 0..40 {
            let r = 1.0 + 0.075 * k as f64;
            let h = radial_h(
                r,
                1.0,
                p.slope(r).unwrap(),
                0.0,
                p.curvature(r).unwrap(),
            );
            assert!(h.abs() < 1e-13, "H({r}) = {h}");
        }
    }

    #[test]
    fn catenoid_domain_error_below_neck() {
        assert!(matches!(
            catenoid(0.5),
            Err(RadialError::CatenoidDomain { .. })
        ));
    }

    #[test]
    fn lens_profiles_meet_angle_and_height() {
        let a = AngleParams::half();
        let s = -a.slope_junction();
        for (f, df) in [
            (paraboloid_height(1.0, 1.0, a), {
                let e = 1e-6;
                (paraboloid_height(1.0, 1.0, a) - paraboloid_height(1.0 - e, 1.0, a)) / e
            }),
            (cap_height(1.0, 1.0, a), {
                let e = 1e-6;
                (cap_height(1.0, 1.0, a) - cap_height(1.0 - e, 1.0, a)) / e
            }),
        ] {
            assert!(f.abs() < 1e-12);
            assert!((df - s).abs() < 1e-5, "slope {df} vs {s}");
        }
    }

    #[test]
    fn paraboloid_matches_halfangle_closed_form() {
        // beta = 1/2: w = (sqrt(3)/2)(1 - r^2)
        let a = AngleParams::half();
        for r in [0.0, 0.3, 0.9] {
            let expect = 0.75f64.sqrt() * (1.0 - r * r);
            assert!((paraboloid_height(r, 1.0, a) - expect).abs() < 1e-15);
        }
    }
}
