use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Log,
    Linear,
    Explicit,
}

/// Strictly increasing, non-negative output times in ps.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    points: Vec<f64>,
    spacing: Spacing,
}

impl TimeGrid {
    pub const DEFAULT_START: f64 = 0.1;
    pub const DEFAULT_END: f64 = 5e4;
    pub const DEFAULT_POINTS: usize = 400;

    pub fn log(t_start: f64, t_end: f64, n: usize) -> Result<Self> {
        if !(t_start > 0.0) {
            return Err(Error::validation("log-spaced grid needs t_start > 0"));
        }
        Self::check_bounds(t_start, t_end, n)?;
        let (a, b) = (t_start.ln(), t_end.ln());
        let points = (0..n)
            .map(|k| match k {
                0 => t_start,
                k if k == n - 1 => t_end,
                k => (a + (b - a) * k as f64 / (n - 1) as f64).exp(),
            })
            .collect();
        Self::new(points, Spacing::Log)
    }

    pub fn linear(t_start: f64, t_end: f64, n: usize) -> Result<Self> {
        Self::check_bounds(t_start, t_end, n)?;
        let points = (0..n)
            .map(|k| match k {
                k if k == n - 1 => t_end,
                k => t_start + (t_end - t_start) * k as f64 / (n - 1) as f64,
            })
            .collect();
        Self::new(points, Spacing::Linear)
    }

    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        Self::new(points, Spacing::Explicit)
    }

    fn check_bounds(t_start: f64, t_end: f64, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::validation("time grid needs at least two points"));
        }
        if !(t_end > t_start) || !t_end.is_finite() {
            return Err(Error::validation(format!(
                "time grid needs t_end > t_start, got [{t_start}, {t_end}]"
            )));
        }
        Ok(())
    }

    fn new(points: Vec<f64>, spacing: Spacing) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::validation("time grid is empty"));
        }
        if !(points[0] >= 0.0) {
            return Err(Error::validation("time grid must start at t >= 0"));
        }
        if points.iter().any(|t| !t.is_finite()) {
            return Err(Error::validation("time grid contains non-finite times"));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::validation("time grid must be strictly increasing"));
        }
        Ok(TimeGrid { points, spacing })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    pub fn t_end(&self) -> f64 {
        *self.points.last().expect("grid is non-empty")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl Default for TimeGrid {
    /// 400 log-spaced points from 0.1 ps to 50 ns.
    fn default() -> Self {
        Self::log(Self::DEFAULT_START, Self::DEFAULT_END, Self::DEFAULT_POINTS)
            .expect("default grid is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let g = TimeGrid::default();
        assert_eq!(g.len(), 400);
        assert_eq!(g.points()[0], 0.1);
        assert_eq!(g.t_end(), 5e4);
        assert_eq!(g.spacing(), Spacing::Log);
        let r0 = g.points()[1] / g.points()[0];
        let r1 = g.points()[300] / g.points()[299];
        assert!((r0 - r1).abs() < 1e-9);
    }

    #[test]
    fn invalid_grids() {
        assert!(TimeGrid::log(0.0, 1.0, 10).is_err());
        assert!(TimeGrid::linear(1.0, 1.0, 10).is_err());
        assert!(TimeGrid::linear(0.0, 1.0, 1).is_err());
        assert!(TimeGrid::from_points(vec![0.0, 2.0, 2.0]).is_err());
        assert!(TimeGrid::from_points(vec![-1.0, 2.0]).is_err());
        assert!(TimeGrid::from_points(vec![]).is_err());
        let lin = TimeGrid::linear(0.0, 10.0, 11).unwrap();
        assert_eq!(lin.points()[5], 5.0);
    }
}
