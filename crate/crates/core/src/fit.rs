//! Bond-length inversion from observed rotational lines.
//!
//! Every forward model here is strictly decreasing in the bond length
//! (leading behaviour `∝ 1/a²`), so a single line pins `a` uniquely. Searches
//! run on `ln a` across [`A_MIN`, `A_MAX`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::energy;
use crate::error::{Error, Result};
use crate::lines;
use crate::rotor::RotorSystem;
use crate::units::wavenumber_from_energy;

/// Lower end of the bond-length search bracket, m.
pub const A_MIN: f64 = 1e-13;
/// Upper end of the bond-length search bracket, m.
pub const A_MAX: f64 = 1e-7;

const GRID_POINTS: usize = 241;
const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Forward model used to predict line positions from a trial bond length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FitModel {
    /// Difference of exact closed-form levels.
    #[default]
    KgExact,
    /// `T1 + T3` (for `l = 0`: `2B + 2B_1`).
    FirstLineApprox,
    /// `2(l+1)B`.
    NonRelativistic,
}

impl FitModel {
    pub fn name(self) -> &'static str {
        match self {
            FitModel::KgExact => "kg-exact",
            FitModel::FirstLineApprox => "approx",
            FitModel::NonRelativistic => "nr",
        }
    }
}

impl fmt::Display for FitModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FitModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kg-exact" => Ok(FitModel::KgExact),
            "approx" => Ok(FitModel::FirstLineApprox),
            "nr" => Ok(FitModel::NonRelativistic),
            other => Err(format!(
                "unknown fit model `{other}` (kg-exact, approx, nr)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOptions {
    /// Relative tolerance on the observable residual.
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            max_iter: 200,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    /// Bond length, m.
    pub a: f64,
    /// Moment of inertia `μa²`, kg·m².
    pub inertia: f64,
    pub model: FitModel,
    /// Single line: `|ν̄_model − ν̄_obs|`. Several lines: RMS residual. cm⁻¹.
    pub residual: f64,
    pub iterations: usize,
}

/// Predicted wavenumber of the `l+1 → l` line, cm⁻¹.
pub fn predicted_line(sys: &RotorSystem, l: u64, model: FitModel) -> Result<f64> {
    match model {
        FitModel::KgExact => {
            let lo = energy::level_closed_form(sys, l)?;
            let hi = energy::level_closed_form(sys, l + 1)?;
            Ok(wavenumber_from_energy(hi.excitation - lo.excitation))
        }
        FitModel::FirstLineApprox => lines::line_wavenumber_approx(sys, l),
        FitModel::NonRelativistic => Ok(2.0 * (l as f64 + 1.0) * lines::rotational_constant_b(sys)),
    }
}

fn probe(m1: f64, m2: f64) -> Result<RotorSystem> {
    RotorSystem::new(m1, m2, 1e-10)
}

fn check_observation(nu: f64) -> Result<()> {
    if nu.is_finite() && nu > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidSystem(format!(
            "observed wavenumber must be finite and positive, got {nu}"
        )))
    }
}

fn bracket_failure(sys: &RotorSystem, l: u64, observed: f64, model: FitModel) -> Error {
    let at = |a: f64| {
        sys.with_bond_length(a)
            .and_then(|s| predicted_line(&s, l, model))
            .unwrap_or(f64::NAN)
    };
    Error::BracketFailure {
        observed,
        low: at(A_MAX),
        high: at(A_MIN),
        a_min: A_MIN,
        a_max: A_MAX,
    }
}

/// Bond length from the `1 → 0` line. Masses in kg, `nu0_obs` in cm⁻¹.
pub fn fit_bond_length_first_line(
    m1: f64,
    m2: f64,
    nu0_obs: f64,
    model: FitModel,
    opts: FitOptions,
) -> Result<FitResult> {
    check_observation(nu0_obs)?;
    let base = probe(m1, m2)?;
    let target = nu0_obs.ln();
    let g = |t: f64| -> Result<f64> {
        let sys = base.with_bond_length(t.exp())?;
        Ok(predicted_line(&sys, 0, model)?.ln() - target)
    };

    // g falls with t; the root is bracketed when g(lo) ≥ 0 ≥ g(hi).
    let (mut lo, mut hi) = (A_MIN.ln(), A_MAX.ln());
    let (mut g_lo, mut g_hi) = (g(lo)?, g(hi)?);
    if !(g_lo >= 0.0 && g_hi <= 0.0) {
        return Err(bracket_failure(&base, 0, nu0_obs, model));
    }

    // Illinois-modified regula falsi.
    let tol = opts.rel_tol;
    let mut t = lo;
    let mut iterations = 0;
    let mut side = 0i8;
    while iterations < opts.max_iter {
        iterations += 1;
        t = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
        if !(t > lo && t < hi) {
            t = 0.5 * (lo + hi);
        }
        let g_t = g(t)?;
        if g_t.abs() <= 0.5 * tol || hi - lo <= 4.0 * f64::EPSILON * lo.abs() {
            break;
        }
        if g_t > 0.0 {
            lo = t;
            g_lo = g_t;
            if side == 1 {
                g_hi *= 0.5;
            }
            side = 1;
        } else {
            hi = t;
            g_hi = g_t;
            if side == -1 {
                g_lo *= 0.5;
            }
            side = -1;
        }
    }

    let sys = base.with_bond_length(t.exp())?;
    let residual = (predicted_line(&sys, 0, model)? - nu0_obs).abs();
    Ok(FitResult {
        a: sys.bond_length(),
        inertia: sys.inertia(),
        model,
        residual,
        iterations,
    })
}

/// Least-squares bond length from several `(l, ν̄_obs)` lines.
///
/// A coarse scan over the bracket locates the basin, then golden-section
/// search on `ln a` polishes it.
pub fn fit_bond_length_multi_line(
    m1: f64,
    m2: f64,
    observed: &[(u64, f64)],
    model: FitModel,
    opts: FitOptions,
) -> Result<FitResult> {
    if observed.is_empty() {
        return Err(Error::NoLines);
    }
    let mut seen = HashSet::new();
    for &(l, nu) in observed {
        if !seen.insert(l) {
            return Err(Error::DuplicateLine(l));
        }
        check_observation(nu)?;
    }
    let base = probe(m1, m2)?;
    let cost = |t: f64| -> Result<f64> {
        let sys = base.with_bond_length(t.exp())?;
        observed.iter().try_fold(0.0, |acc, &(l, nu)| {
            let r = predicted_line(&sys, l, model)? - nu;
            Ok(acc + r * r)
        })
    };

    let (t_min, t_max) = (A_MIN.ln(), A_MAX.ln());
    let step = (t_max - t_min) / (GRID_POINTS - 1) as f64;
    let mut best = (0usize, f64::INFINITY);
    for i in 0..GRID_POINTS {
        let c = cost(t_min + step * i as f64)?;
        if c < best.1 {
            best = (i, c);
        }
    }
    if best.0 == 0 || best.0 == GRID_POINTS - 1 {
        let (l, nu) = observed[0];
        return Err(bracket_failure(&base, l, nu, model));
    }

    let mut lo = t_min + step * (best.0 - 1) as f64;
    let mut hi = t_min + step * (best.0 + 1) as f64;
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let (mut f1, mut f2) = (cost(x1)?, cost(x2)?);
    let mut iterations = 0;
    while iterations < opts.max_iter && hi - lo > 1e-14 * lo.abs() {
        iterations += 1;
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = cost(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = cost(x2)?;
        }
    }
    let t = if f1 <= f2 { x1 } else { x2 };
    let sys = base.with_bond_length(t.exp())?;
    let rms = (cost(t)? / observed.len() as f64).sqrt();
    Ok(FitResult {
        a: sys.bond_length(),
        inertia: sys.inertia(),
        model,
        residual: rms,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{AMU, C, H};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const MODELS: [FitModel; 3] = [
        FitModel::KgExact,
        FitModel::FirstLineApprox,
        FitModel::NonRelativistic,
    ];

    #[test]
    fn first_line_round_trip() {
        let (m1, m2) = (1.007825 * AMU, 34.968853 * AMU);
        let a_true = 1.2746e-10;
        let sys = RotorSystem::new(m1, m2, a_true).unwrap();
        for model in MODELS {
            let nu0 = predicted_line(&sys, 0, model).unwrap();
            let fit =
                fit_bond_length_first_line(m1, m2, nu0, model, FitOptions::default()).unwrap();
            assert_relative_eq!(fit.a, a_true, max_relative = 1e-9);
            assert!(fit.residual <= 1e-10 * nu0);
            assert_eq!(fit.inertia, sys.with_bond_length(fit.a).unwrap().inertia());
        }
    }

    #[test]
    fn first_line_approx_matches_first_line() {
        let sys = RotorSystem::from_amu_angstrom(12.0, 15.994915, 1.128323).unwrap();
        assert_relative_eq!(
            predicted_line(&sys, 0, FitModel::FirstLineApprox).unwrap(),
            lines::first_line(&sys).unwrap().nu0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn homonuclear_nr_closed_form() {
        let m = 14.003074 * AMU;
        let nu0 = 3.9;
        let fit =
            fit_bond_length_first_line(m, m, nu0, FitModel::NonRelativistic, FitOptions::default())
                .unwrap();
        // 2B = nu0 with B = h/(8π²Ic) ⇒ I = h/(4π²c·nu0)
        let inertia = H / (4.0 * PI * PI * C * 100.0 * nu0);
        let a = (inertia / (m / 2.0)).sqrt();
        assert_relative_eq!(fit.a, a, max_relative = 1e-10);
    }

    #[test]
    fn absurd_observation() {
        let m = AMU;
        for nu in [1e30, 1e-30] {
            let err =
                fit_bond_length_first_line(m, m, nu, FitModel::KgExact, FitOptions::default())
                    .unwrap_err();
            assert!(matches!(err, Error::BracketFailure { .. }), "{err}");
        }
        assert!(
            fit_bond_length_first_line(m, m, -1.0, FitModel::KgExact, FitOptions::default())
                .is_err()
        );
    }

    #[test]
    fn multi_line_exact() {
        let (m1, m2) = (1.007825 * AMU, 78.918338 * AMU);
        let a_true = 1.4144e-10;
        let sys = RotorSystem::new(m1, m2, a_true).unwrap();
        for model in MODELS {
            let obs: Vec<_> = (0..=5)
                .map(|l| (l, predicted_line(&sys, l, model).unwrap()))
                .collect();
            let fit =
                fit_bond_length_multi_line(m1, m2, &obs, model, FitOptions::default()).unwrap();
            assert_relative_eq!(fit.a, a_true, max_relative = 1e-9);

            let single =
                fit_bond_length_multi_line(m1, m2, &obs[..1], model, FitOptions::default())
                    .unwrap();
            let first =
                fit_bond_length_first_line(m1, m2, obs[0].1, model, FitOptions::default()).unwrap();
            assert_relative_eq!(single.a, first.a, max_relative = 1e-9);
        }
    }

    #[test]
    fn multi_line_errors() {
        let m = AMU;
        let opts = FitOptions::default();
        assert!(matches!(
            fit_bond_length_multi_line(m, m, &[], FitModel::KgExact, opts),
            Err(Error::NoLines)
        ));
        assert!(matches!(
            fit_bond_length_multi_line(m, m, &[(0, 1.0), (0, 2.0)], FitModel::KgExact, opts),
            Err(Error::DuplicateLine(0))
        ));
        assert!(matches!(
            fit_bond_length_multi_line(m, m, &[(0, 1e30)], FitModel::KgExact, opts),
            Err(Error::BracketFailure { .. })
        ));
    }

    #[test]
    fn forward_map_decreasing() {
        let base = RotorSystem::from_amu_angstrom(1.0, 35.0, 1.0).unwrap();
        for model in MODELS {
            let mut prev = f64::INFINITY;
            for i in 0..=120 {
                let a = A_MIN * (A_MAX / A_MIN).powf(i as f64 / 120.0);
                let nu = predicted_line(&base.with_bond_length(a).unwrap(), 0, model).unwrap();
                assert!(nu < prev, "{model} a={a}");
                prev = nu;
            }
        }
    }
}
