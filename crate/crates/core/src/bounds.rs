//! Parameter feasibility for the sampling finders and the matching-only threshold.
//!
//! For a fraction `alpha > 1/2` of size-2 matchings among the colors, keeping
//! every vertex with probability `p` keeps an edge of a matching with
//! probability `2p^2 - p^4` and a single edge with probability `p^2`. The
//! expected number of surviving rainbow edges beats the expected number of
//! kept vertices exactly when
//!
//! ```text
//! alpha (2p^2 - p^4) + (1 - alpha) p^2 > p                       (no slack)
//! (1-eps)(alpha-xi)(2p^2 - p^4) + (1-eps)(1-alpha-xi) p^2 > p    (with slack)
//! ```
//!
//! The slack version fixes the constants: `3c` is its margin and `beta = p + c`.

use crate::error::{Error, Result};

fn check_unit(name: &str, x: f64, lo: f64, hi: f64, open_lo: bool, open_hi: bool) -> Result<()> {
    let ok = x.is_finite()
        && if open_lo { x > lo } else { x >= lo }
        && if open_hi { x < hi } else { x <= hi };
    if ok {
        Ok(())
    } else {
        let l = if open_lo { '(' } else { '[' };
        let r = if open_hi { ')' } else { ']' };
        Err(Error::Domain(format!("{name}={x} outside {l}{lo}, {hi}{r}")))
    }
}

/// Probability that a size-2 matching keeps at least one edge when each vertex
/// survives independently with probability `p`.
pub fn matching_survival(p: f64) -> f64 {
    2.0 * p * p - p.powi(4)
}

/// Left-hand side of the no-slack inequality.
pub fn eq1_lhs(alpha: f64, p: f64) -> Result<f64> {
    check_unit("alpha", alpha, 0.0, 1.0, false, false)?;
    check_unit("p", p, 0.0, 1.0, true, true)?;
    Ok(alpha * matching_survival(p) + (1.0 - alpha) * p * p)
}

/// Left-hand side of the inequality with slack `epsilon` (sampling) and `xi` (class counts).
pub fn eq2_lhs(alpha: f64, xi: f64, epsilon: f64, p: f64) -> f64 {
    (1.0 - epsilon) * (alpha - xi) * matching_survival(p) + (1.0 - epsilon) * (1.0 - alpha - xi) * p * p
}

/// Constants tying a matching fraction to the vertex sampler.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterSet {
    pub alpha: f64,
    pub xi: f64,
    pub epsilon: f64,
    pub p: f64,
    pub c: f64,
    pub beta: f64,
    /// Heavy-vertex threshold; `None` means [`ParameterSet::default_heavy_threshold`].
    pub heavy_threshold: Option<usize>,
}

impl ParameterSet {
    /// Builds a set from `(alpha, xi, epsilon, p)`, deriving `c` and `beta`.
    /// Returns `None` when the slack inequality fails.
    pub fn derive(alpha: f64, xi: f64, epsilon: f64, p: f64) -> Option<Self> {
        let margin = eq2_lhs(alpha, xi, epsilon, p) - p;
        (margin > 0.0).then(|| {
            let c = margin / 3.0;
            ParameterSet { alpha, xi, epsilon, p, c, beta: p + c, heavy_threshold: None }
        })
    }

    /// `lhs - p` of the slack inequality; positive for every valid set.
    pub fn margin(&self) -> f64 {
        eq2_lhs(self.alpha, self.xi, self.epsilon, self.p) - self.p
    }

    /// The asymptotic threshold `(eps^2 / 10^6) n` is below 1 at any practical
    /// `n`, so the default floors it at 2.
    pub fn default_heavy_threshold(&self, n: usize) -> usize {
        let t = (self.epsilon * self.epsilon / 1e6 * n as f64).ceil() as usize;
        t.max(2)
    }

    pub fn heavy_threshold_for(&self, n: usize) -> usize {
        self.heavy_threshold
            .unwrap_or_else(|| self.default_heavy_threshold(n))
    }

    /// Whether both class fractions stay above 1/40 after subtracting `xi`.
    pub fn meets_min_fraction(&self) -> bool {
        (self.alpha - self.xi).min(1.0 - self.alpha - self.xi) >= 1.0 / 40.0
    }
}

/// Grid search for constants satisfying the slack inequality.
///
/// `tau = 1 - p` runs over `2^-1, ..., 2^-20` (outer loop) and `epsilon = xi`
/// over `2^-2, ..., 2^-20` (inner loop); the first hit is returned. With
/// `xi_hint`, `xi` is pinned and only `epsilon` is searched.
pub fn feasible_params(alpha: f64, xi_hint: Option<f64>) -> Result<Option<ParameterSet>> {
    feasible_params_above(alpha, xi_hint, 0.5)
}

/// [`feasible_params`] restricted to grid points with `p >= min_p`.
pub fn feasible_params_above(alpha: f64, xi_hint: Option<f64>, min_p: f64) -> Result<Option<ParameterSet>> {
    if !(alpha.is_finite() && alpha > 0.5 && alpha <= 1.0) {
        return Err(Error::Domain(format!("alpha={alpha} must lie in (1/2, 1]")));
    }
    if let Some(xi) = xi_hint {
        check_unit("xi", xi, 0.0, 1.0, false, true)?;
    }
    for tau_exp in 1..=20 {
        let p = 1.0 - 0.5f64.powi(tau_exp);
        if p < min_p {
            continue;
        }
        for eps_exp in 2..=20 {
            let eps = 0.5f64.powi(eps_exp);
            let xi = xi_hint.unwrap_or(eps);
            if let Some(set) = ParameterSet::derive(alpha, xi, eps, p) {
                return Ok(Some(set));
            }
        }
    }
    Ok(None)
}

fn gamma_gap(gamma: f64) -> f64 {
    1.0 - 0.5f64.powf(4.0 * gamma) - gamma
}

/// Root of `1 - 2^(-4 gamma) = gamma` on `(1/2, 1)`, by bisection to 1e-12.
pub fn gamma_threshold() -> f64 {
    let (mut lo, mut hi) = (0.5, 1.0);
    debug_assert!(gamma_gap(lo) > 0.0 && gamma_gap(hi) < 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if gamma_gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// A color fraction for the matching-only route and its vertex-span fraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaParams {
    pub gamma: f64,
    /// `1 - 2^(-4 gamma)`: expected fraction of vertices touched by one edge per matching.
    pub gamma_prime: f64,
}

impl GammaParams {
    pub fn new(gamma: f64) -> Result<Self> {
        check_unit("gamma", gamma, 0.0, 1.0, true, false)?;
        Ok(GammaParams { gamma, gamma_prime: 1.0 - 0.5f64.powf(4.0 * gamma) })
    }

    pub fn admissible(&self) -> bool {
        self.gamma_prime < self.gamma
    }
}

pub fn appendix_gamma_ok(gamma: f64) -> Result<bool> {
    Ok(GammaParams::new(gamma)?.admissible())
}

/// `3 sqrt(6) / 8`, the matching-only color fraction above which logarithmic
/// rainbow girth is already known.
pub fn alpha_upper_reference() -> f64 {
    3.0 * 6f64.sqrt() / 8.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq1_values() {
        let v = eq1_lhs(0.6, 0.95).unwrap();
        assert!((v - 0.95529625).abs() < 1e-12, "{v}");
        assert!(v > 0.95);
        for p in [0.1, 0.5, 0.9] {
            assert!((eq1_lhs(1.0, p).unwrap() - matching_survival(p)).abs() < 1e-15);
        }
        assert!(eq1_lhs(1.2, 0.5).is_err());
        assert!(eq1_lhs(0.5, 1.0).is_err());
        assert!(eq1_lhs(0.5, 0.0).is_err());
    }

    #[test]
    fn half_alpha_never_feasible() {
        // at alpha = 1/2: lhs - p = 1.5p^2 - 0.5p^4 - p = -p (1-p)^2 (p+2) / 2
        let worst = (1..1000)
            .map(|i| i as f64 / 1000.0)
            .map(|p| eq1_lhs(0.5, p).unwrap() - p)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(worst <= 0.0);
        assert!(worst > -1e-5);
    }

    #[test]
    fn feasible_sets_satisfy_invariants() {
        for alpha in [0.51, 0.55, 0.6, 0.75, 0.9, 1.0] {
            let ps = feasible_params(alpha, None).unwrap().unwrap();
            assert!(ps.margin() > 0.0, "alpha={alpha}");
            assert!((3.0 * ps.c - ps.margin()).abs() <= 1e-15 * ps.margin().max(1.0));
            assert_eq!(ps.beta, ps.p + ps.c);
            assert!(ps.p >= 0.5 && ps.p < 1.0);
        }
        assert!(feasible_params(0.5, None).is_err());
        assert!(feasible_params(0.4, None).is_err());
    }

    #[test]
    fn alpha_06_choice() {
        let ps = feasible_params(0.6, None).unwrap().unwrap();
        assert_eq!(ps.p, 1.0 - 1.0 / 16.0);
        assert_eq!(ps.epsilon, ps.xi);
        assert!(ps.meets_min_fraction());
        assert_eq!(ps.heavy_threshold_for(5000), 2);
    }

    #[test]
    fn min_p_moves_along_grid() {
        let ps = feasible_params_above(0.99, None, 0.9).unwrap().unwrap();
        assert_eq!(ps.p, 1.0 - 1.0 / 16.0);
        assert!(ps.margin() > 0.0);
        assert_eq!(feasible_params(0.99, None).unwrap().unwrap().p, 0.75);
    }

    #[test]
    fn xi_hint_is_respected() {
        let ps = feasible_params(0.6, Some(0.0)).unwrap().unwrap();
        assert_eq!(ps.xi, 0.0);
        assert!(ps.margin() > 0.0);
        // a huge xi leaves nothing feasible
        assert_eq!(feasible_params(0.6, Some(0.3)).unwrap(), None);
    }

    #[test]
    fn gamma_threshold_value() {
        let t = gamma_threshold();
        assert!((t - 0.922523266904828).abs() < 1e-9, "{t}");
        assert!(gamma_gap(0.9) > 0.0 && (gamma_gap(0.9) - 0.0175).abs() < 1e-3);
        assert!(gamma_gap(0.93) < 0.0 && (gamma_gap(0.93) + 0.0059).abs() < 1e-3);
    }

    #[test]
    fn gamma_admissibility() {
        assert!(appendix_gamma_ok(0.93).unwrap());
        assert!(!appendix_gamma_ok(0.90).unwrap());
        assert!(appendix_gamma_ok(1.0).unwrap());
        assert!(appendix_gamma_ok(0.0).is_err());
        let gp = GammaParams::new(0.93).unwrap();
        assert!((gp.gamma_prime - 0.9241).abs() < 1e-4);
    }

    #[test]
    fn reference_alpha() {
        let a = alpha_upper_reference();
        assert!((a - 0.918_558_653_543_691_7).abs() < 1e-12);
        assert!((a * a - 27.0 / 32.0).abs() < 1e-12);
        assert!(gamma_threshold() > a);
    }
}
