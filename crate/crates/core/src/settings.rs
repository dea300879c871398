/// Numerical knobs shared by the spectral, series and classification code.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Power iteration stops once the Collatz-Wielandt bracket is this tight
    /// (relative to the radius).
    pub radius_tol: f64,
    /// Iteration cap for power iteration.
    pub max_iter: usize,
    /// Relative tolerance for comparing two spectral radii.
    pub compare_tol: f64,
    /// Half-width of the band around a critical inverse temperature inside
    /// which sums are reported as at-criticality instead of evaluated.
    pub beta_band: f64,
    /// Cap on the number of series terms summed by `partition_value`.
    pub max_terms: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            radius_tol: 1e-12,
            max_iter: 100_000,
            compare_tol: 1e-9,
            beta_band: 1e-9,
            max_terms: 10_000_000,
        }
    }
}

impl Settings {
    /// Uses `tol` for both radius comparison and the criticality band.
    pub fn with_tolerance(tol: f64) -> Self {
        Self {
            compare_tol: tol,
            beta_band: tol,
            ..Self::default()
        }
    }
}
