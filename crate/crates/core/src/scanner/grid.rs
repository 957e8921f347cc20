use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the number of points along one axis.
pub const MAX_AXIS_POINTS: f64 = 1e7;

/// Rectangular grid with a common step on both axes. A degenerate axis
/// (`min == max`) yields a single line, which is how slices are scanned.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub step: f64,
}

/// Points `min + i·step` up to `max`. Exact multiples are generated from
/// the index, so no error accumulates along the axis.
pub fn axis_values(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    let count = axis_count(min, max, step)?;
    Ok((0..count).map(|i| min + i as f64 * step).collect())
}

fn axis_count(min: f64, max: f64, step: f64) -> Result<usize> {
    if !(min.is_finite() && max.is_finite() && step.is_finite()) {
        return Err(Error::NonFinite("grid bounds"));
    }
    if step <= 0.0 {
        return Err(Error::Domain(format!("grid step must be > 0, got {step}")));
    }
    if min > max {
        return Err(Error::Domain(format!("grid range [{min}, {max}] is empty")));
    }
    let intervals = (max - min) / step;
    if intervals > MAX_AXIS_POINTS {
        return Err(Error::GridTooLarge { points: intervals, limit: MAX_AXIS_POINTS });
    }
    // Tolerate representation error in max/step, e.g. 0.25 / 0.01.
    Ok((intervals + 1e-9).floor() as usize + 1)
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, step: f64) -> Result<Self> {
        let g = Self { x_min, x_max, y_min, y_max, step };
        axis_count(x_min, x_max, step)?;
        axis_count(y_min, y_max, step)?;
        Ok(g)
    }

    pub fn x_values(&self) -> Vec<f64> {
        axis_values(self.x_min, self.x_max, self.step).unwrap_or_default()
    }

    pub fn y_values(&self) -> Vec<f64> {
        axis_values(self.y_min, self.y_max, self.step).unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.x_values().len() * self.y_values().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
