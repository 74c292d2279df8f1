use crate::error::Gauge2dError;

/// Polar disk mesh: P+1 radial levels rho_i = i/P (level 0 is the pole,
/// level P the boundary ring) and Q periodic angles sigma_j = 2 pi j / Q.
/// Node storage elsewhere is row-major by level: index = i * Q + j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiskMesh {
    pub p: usize,
    pub q: usize,
}

impl DiskMesh {
    pub const MIN_P: usize = 4;
    pub const MIN_Q: usize = 8;

    pub fn new(p: usize, q: usize) -> Result<Self, Gauge2dError> {
        if p < Self::MIN_P || q < Self::MIN_Q {
            return Err(Gauge2dError::MeshTooCoarse { p, q });
        }
        Ok(Self { p, q })
    }

    #[inline]
    pub fn drho(&self) -> f64 {
        1.0 / self.p as f64
    }

    #[inline]
    pub fn dsigma(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.q as f64
    }

    #[inline]
    pub fn rho(&self, i: usize) -> f64 {
        i as f64 / self.p as f64
    }

    #[inline]
    pub fn sigma(&self, j: usize) -> f64 {
        j as f64 * self.dsigma()
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.q + j
    }

    /// Total stored nodes (the pole row is stored Q times).
    pub fn n_nodes(&self) -> usize {
        (self.p + 1) * self.q
    }

    /// Periodic angular neighbor.
    #[inline]
    pub fn jwrap(&self, j: isize) -> usize {
        j.rem_euclid(self.q as isize) as usize
    }
}
