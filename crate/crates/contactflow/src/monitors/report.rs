use serde::{Deserialize, Serialize};

/// One certified check in a run report: a measured scalar against its bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonitorCheck {
    pub name: String,
    pub measured: f64,
    pub bound: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Where the extreme value was attained ("t=0.04 r=0.35" style) or what
    /// the check ranged over.
    pub location: String,
}

impl MonitorCheck {
    /// measured <= bound + tolerance.
    pub fn upper(
        name: impl Into<String>,
        measured: f64,
        bound: f64,
        tolerance: f64,
        location: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            measured,
            bound,
            tolerance,
            pass: measured <= bound + tolerance,
            location: location.into(),
        }
    }

    /// measured >= bound - tolerance (observed orders, margins).
    pub fn lower(
        name: impl Into<String>,
        measured: f64,
        bound: f64,
        tolerance: f64,
        location: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            measured,
            bound,
            tolerance,
            pass: measured >= bound - tolerance,
            location: location.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directions() {
        assert!(MonitorCheck::upper("a", 1.0, 1.0, 0.0, "").pass);
        assert!(!MonitorCheck::upper("a", 1.0 + 1e-9, 1.0, 0.0, "").pass);
        assert!(MonitorCheck::lower("b", 1.9, 1.9, 0.0, "").pass);
        assert!(!MonitorCheck::lower("b", 1.0, 1.9, 0.5, "").pass);
    }

    #[test]
    fn json_round_trip_keeps_fields() {
        let c = MonitorCheck::upper("gradient_bound", 2.0, 2.0, 1e-9, "t=0.1");
        let s = serde_json::to_string(&c).unwrap();
        for key in ["name", "measured", "bound", "tolerance", "pass", "location"] {
            assert!(s.contains(key), "missing {key}");
        }
        let back: MonitorCheck = serde_json::from_str(&s).unwrap();
        assert_eq!(back.name, "gradient_bound");
        assert!(back.pass);
    }
}
