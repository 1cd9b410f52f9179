//! Energy eigenvalues `W(l)` of the Klein-Gordon rotor.
//!
//! The heteronuclear levels are the admissible root of
//!
//! ```text
//! a² W⁴ − (A + B) W² + C = 0,
//! A = 2a²(α² + β²),  B = 4 l(l+1) c²ħ²,  C = a²(α² − β²)²,
//! ```
//!
//! with `α = m1c²`, `β = m2c²`. Two routes are provided: the closed form
//! ([`level_closed_form`]) and a numerical solve of the quartic refined on the
//! residual of the angular equation ([`solve_level_quartic`]). They share no
//! arithmetic beyond the system's derived quantities, so each checks the other.
//!
//! Rotational excitations are ~10⁻¹² of the rest energy for real molecules,
//! so every level also carries `W − ε` computed without subtracting nearly
//! equal numbers.

use crate::error::{Error, Result};
use crate::lines;
use crate::rotor::{ModelKind, RotorSystem};
use crate::units::{C, HBAR};

/// Largest angular momentum quantum number accepted by any level function.
pub const L_MAX: u64 = 1_000_000;

/// `|m1 − m2| / M` below which a system counts as homonuclear.
pub const HOMONUCLEAR_TOLERANCE: f64 = 1e-12;

const REFINE_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub l: u64,
    /// Total energy, J.
    pub w: f64,
    /// `W − ε` (or `W − m0c²` for the single particle), J.
    pub excitation: f64,
    pub model: ModelKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaylorOrder {
    First,
    Second,
}

/// Which non-relativistic rotor energy to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NrForm {
    /// `2 l(l+1) ħ² μ / (I M)`, the small-`chi` term of the expanded heteronuclear level.
    #[default]
    MassWeighted,
    /// `l(l+1) ħ² / (2I)`.
    Textbook,
}

/// Coefficients of `a²W⁴ − (A+B)W² + C = 0`, SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticCoefficients {
    /// `a²`, m².
    pub leading: f64,
    /// `A`, J²·m².
    pub a: f64,
    /// `B`, J²·m².
    pub b: f64,
    /// `C`, J⁴·m².
    pub c: f64,
}

impl QuarticCoefficients {
    /// `(A+B)² − 4a²C`.
    pub fn discriminant(&self) -> f64 {
        let s = self.a + self.b;
        s * s - 4.0 * self.leading * self.c
    }

    /// Evaluate the quartic at `w`.
    pub fn eval(&self, w: f64) -> f64 {
        let w2 = w * w;
        self.leading * w2 * w2 - (self.a + self.b) * w2 + self.c
    }
}

pub(crate) fn l_factor(l: u64) -> Result<f64> {
    if l > L_MAX {
        return Err(Error::QuantumNumberTooLarge(l));
    }
    let l = l as f64;
    Ok(l * (l + 1.0))
}

pub fn quartic_coefficients(sys: &RotorSystem, l: u64) -> Result<QuarticCoefficients> {
    let big_l = l_factor(l)?;
    let a2 = sys.bond_length().powi(2);
    let (alpha, beta) = (sys.alpha(), sys.beta());
    let split = (alpha - beta) * (alpha + beta);
    let ch = C * HBAR;
    Ok(QuarticCoefficients {
        leading: a2,
        a: 2.0 * a2 * (alpha * alpha + beta * beta),
        b: 4.0 * big_l * ch * ch,
        c: a2 * split * split,
    })
}

/// Left-hand side of the angular equation whose eigenvalue is `l(l+1)`,
/// evaluated at excitation `W − ε` (J).
///
/// Uses the factorisation `W⁴ − 2(α²+β²)W² + (α²−β²)² = (W² − ε²)(W² − (α−β)²)`
/// so that the result keeps full relative precision even when `W − ε` is
/// twelve orders of magnitude below `ε`.
pub fn angular_eigenvalue(sys: &RotorSystem, excitation: f64) -> f64 {
    let eps = sys.rest_energy();
    let e = excitation / eps;
    let (alpha, beta) = (sys.alpha() / eps, sys.beta() / eps);
    let u = sys.kinetic_scale() / (eps * eps);
    let x = e * (e + 2.0);
    x * (x + 4.0 * alpha * beta) / (4.0 * u * (1.0 + e) * (1.0 + e))
}

pub fn angular_residual(sys: &RotorSystem, l: u64, excitation: f64) -> Result<f64> {
    Ok(angular_eigenvalue(sys, excitation) - l_factor(l)?)
}

/// Numerical route: admissible root of the quartic (larger root in `W²`,
/// positive square root), then bisection on the angular-equation residual
/// down to the last representable bracket, which leaves
/// `|residual| ≤ 1e-12·l(l+1)` with a wide margin.
pub fn solve_level_quartic(sys: &RotorSystem, l: u64) -> Result<EnergyLevel> {
    let q = quartic_coefficients(sys, l)?;
    let big_l = l_factor(l)?;
    let eps = sys.rest_energy();
    if big_l == 0.0 {
        return Ok(EnergyLevel {
            l,
            w: eps,
            excitation: 0.0,
            model: ModelKind::HeteronuclearKGQuartic,
        });
    }

    // Work with the quadratic in y = (W/ε)²; dividing through by a²ε⁴ keeps
    // every coefficient of order one.
    let scale = q.leading * eps * eps;
    let p = (q.a + q.b) / scale;
    let r = q.c / (scale * eps * eps);
    let disc = (p * p - 4.0 * r).max(0.0);
    let y = 0.5 * (p + disc.sqrt());
    let seed = eps * (y.sqrt() - 1.0).max(0.0);

    let residual = |e: f64| angular_eigenvalue(sys, e) - big_l;

    // The seed loses relative precision when W − ε ≪ ε, so bracket it from
    // both sides before bisecting.
    let mut hi = if seed > 0.0 { seed } else { eps * f64::EPSILON };
    while residual(hi) < 0.0 {
        hi *= 2.0;
    }
    let mut lo = hi;
    while lo > 0.0 && residual(lo) > 0.0 {
        lo *= 0.5;
        if lo < eps * 1e-300 {
            lo = 0.0;
        }
    }

    let mut mid = hi;
    for _ in 0..REFINE_MAX_ITER {
        mid = 0.5 * (lo + hi);
        let f = residual(mid);
        // keep halving past the residual tolerance until the bracket collapses
        if f == 0.0 || mid <= lo || mid >= hi {
            break;
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    Ok(EnergyLevel {
        l,
        w: eps + mid,
        excitation: mid,
        model: ModelKind::HeteronuclearKGQuartic,
    })
}

/// Closed-form heteronuclear level:
///
/// ```text
/// W² = (α² + β²) + 2l(l+1)c²ħ²/a² + (2/a²)·√((α²a² + l(l+1)c²ħ²)(β²a² + l(l+1)c²ħ²))
/// ```
pub fn level_closed_form(sys: &RotorSystem, l: u64) -> Result<EnergyLevel> {
    let big_l = l_factor(l)?;
    let (alpha, beta) = (sys.alpha(), sys.beta());
    let lu = big_l * sys.kinetic_scale();
    let (a2, b2) = (alpha * alpha, beta * beta);

    let root = ((a2 + lu) * (b2 + lu)).sqrt();
    let w = ((a2 + b2) + 2.0 * lu + 2.0 * root).sqrt();

    // W² − ε² = 2Lu + 2(√P − αβ), with √P − αβ rationalised.
    let x = 2.0 * lu + 2.0 * (lu * (a2 + b2) + lu * lu) / (root + alpha * beta);
    let excitation = x / (w + sys.rest_energy());

    Ok(EnergyLevel {
        l,
        w,
        excitation,
        model: ModelKind::HeteronuclearKGExact,
    })
}

/// `W = ε·√(1 + l(l+1)ħ²/(Iε))` with `ε = m0c²`, `I = m0a²`.
pub fn level_single_particle(m0: f64, a: f64, l: u64) -> Result<EnergyLevel> {
    if !(m0.is_finite() && m0 > 0.0 && a.is_finite() && a > 0.0) {
        return Err(Error::InvalidSystem(format!(
            "single particle needs positive mass and radius, got m0={m0}, a={a}"
        )));
    }
    let eps = m0 * C * C;
    let inertia = m0 * a * a;
    let (w, excitation) = sqrt_ladder(eps, inertia, l_factor(l)?);
    Ok(EnergyLevel {
        l,
        w,
        excitation,
        model: ModelKind::SingleParticle,
    })
}

/// Equal-mass rotor: the single-particle form with `ε = 2m0c²`, `I = m0a²/2`.
pub fn level_homonuclear(sys: &RotorSystem, l: u64) -> Result<EnergyLevel> {
    let asym = sys.asymmetry_ratio();
    if asym >= HOMONUCLEAR_TOLERANCE {
        return Err(Error::NotHomonuclear(asym));
    }
    let m0 = 0.5 * sys.total_mass();
    let a = sys.bond_length();
    let eps = 2.0 * m0 * C * C;
    let inertia = 0.5 * m0 * a * a;
    let (w, excitation) = sqrt_ladder(eps, inertia, l_factor(l)?);
    Ok(EnergyLevel {
        l,
        w,
        excitation,
        model: ModelKind::HomonuclearKG,
    })
}

fn sqrt_ladder(eps: f64, inertia: f64, big_l: f64) -> (f64, f64) {
    let s = big_l * HBAR * HBAR / (inertia * eps);
    let root = (1.0 + s).sqrt();
    (eps * root, eps * s / (root + 1.0))
}

/// Non-relativistic excitation energy above rest, J.
pub fn level_nonrel(sys: &RotorSystem, l: u64, form: NrForm) -> Result<f64> {
    let big_l = l_factor(l)?;
    let textbook = big_l * HBAR * HBAR / (2.0 * sys.inertia());
    Ok(match form {
        NrForm::Textbook => textbook,
        // 4μ/M is exactly one for equal masses, so the two forms coincide there.
        NrForm::MassWeighted => textbook * (4.0 * sys.reduced_mass() / sys.total_mass()),
    })
}

pub fn level_taylor(sys: &RotorSystem, l: u64, order: TaylorOrder) -> Result<EnergyLevel> {
    let big_l = l_factor(l)?;
    let eps = sys.rest_energy();
    let (excitation, model) = match order {
        TaylorOrder::First => {
            let lu = big_l * sys.kinetic_scale();
            let delta = sys.mass_asymmetry();
            let nr = 2.0 * lu / eps;
            let correction = 0.5 * delta * delta * lu / (eps * (sys.alpha() * sys.beta() + lu));
            (nr + correction, ModelKind::KGTaylor1)
        }
        TaylorOrder::Second => {
            let b_rel = lines::b_rel_energy(sys, l)?;
            let first = big_l * b_rel;
            (first - first * first / (2.0 * eps), ModelKind::KGTaylor2)
        }
    };
    Ok(EnergyLevel {
        l,
        w: eps + excitation,
        excitation,
        model,
    })
}

/// Level under any system-based model.
pub fn level(sys: &RotorSystem, l: u64, model: ModelKind) -> Result<EnergyLevel> {
    match model {
        ModelKind::SingleParticle => Err(Error::UnsupportedModel(model.name())),
        ModelKind::HomonuclearKG => level_homonuclear(sys, l),
        ModelKind::HeteronuclearKGExact => level_closed_form(sys, l),
        ModelKind::HeteronuclearKGQuartic => solve_level_quartic(sys, l),
        ModelKind::KGTaylor1 => level_taylor(sys, l, TaylorOrder::First),
        ModelKind::KGTaylor2 => level_taylor(sys, l, TaylorOrder::Second),
        ModelKind::NonRelativistic => {
            let excitation = level_nonrel(sys, l, NrForm::MassWeighted)?;
            Ok(EnergyLevel {
                l,
                w: sys.rest_energy() + excitation,
                excitation,
                model,
            })
        }
    }
}
