//! Rotational constants, decomposed level energies and pure-rotation line
//! wavenumbers.
//!
//! Internally every constant is carried as the energy `h·c·B` (J) and
//! converted to cm⁻¹ only when handed back to the caller.
//!
//! * `B = h/(4π²Ic) · 2μ/M`, equal to the textbook `h/(8π²Ic)` for equal masses.
//! * `B_l = B · (α−β)² / (4(αβ + l(l+1)c²ħ²/a²))`, zero for equal masses and
//!   decreasing in `l` otherwise.
//! * `B_Rel = B + B_l`.
//!
//! A line is the transition `l+1 → l`; its wavenumber under the second-order
//! expansion splits into five terms `T1..T5` (see [`LineTerms`]).

use crate::energy::{self, l_factor};
use crate::error::Result;
use crate::rotor::{ModelKind, RotorSystem};
use crate::units::{wavenumber_from_energy, HBAR};

/// `h·c·B` in joules.
pub fn b_energy(sys: &RotorSystem) -> f64 {
    HBAR * HBAR * (2.0 * sys.reduced_mass() / sys.total_mass()) / sys.inertia()
}

/// `h·c·B_textbook = ħ²/(2I)` in joules.
pub fn b_textbook_energy(sys: &RotorSystem) -> f64 {
    HBAR * HBAR / (2.0 * sys.inertia())
}

/// `h·c·B_l` in joules.
pub fn b_l_energy(sys: &RotorSystem, l: u64) -> Result<f64> {
    let big_l = l_factor(l)?;
    Ok(b_l_from(sys, b_energy(sys), big_l))
}

fn b_l_from(sys: &RotorSystem, b: f64, big_l: f64) -> f64 {
    let delta = sys.mass_asymmetry();
    let d = sys.alpha() * sys.beta() + big_l * sys.kinetic_scale();
    b * (delta * delta) / (4.0 * d)
}

/// `h·c·B_Rel` in joules.
pub fn b_rel_energy(sys: &RotorSystem, l: u64) -> Result<f64> {
    Ok(b_energy(sys) + b_l_energy(sys, l)?)
}

/// Rotational constant `B`, cm⁻¹.
pub fn rotational_constant_b(sys: &RotorSystem) -> f64 {
    wavenumber_from_energy(b_energy(sys))
}

/// Textbook rigid-rotor constant `h/(8π²Ic)`, cm⁻¹.
pub fn rotational_constant_textbook(sys: &RotorSystem) -> f64 {
    wavenumber_from_energy(b_textbook_energy(sys))
}

/// Correction `B_l`, cm⁻¹.
pub fn rotational_correction_bl(sys: &RotorSystem, l: u64) -> Result<f64> {
    Ok(wavenumber_from_energy(b_l_energy(sys, l)?))
}

/// `B_Rel = B + B_l`, cm⁻¹.
pub fn relativistic_rotational_coefficient(sys: &RotorSystem, l: u64) -> Result<f64> {
    Ok(rotational_constants(sys, l)?.b_rel)
}

/// The rotational constants of a system at one `l`, cm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationalConstants {
    pub l: u64,
    pub b: f64,
    pub b_l: f64,
    pub b_rel: f64,
    pub b_textbook: f64,
}

pub fn rotational_constants(sys: &RotorSystem, l: u64) -> Result<RotationalConstants> {
    let b = rotational_constant_b(sys);
    let b_l = rotational_correction_bl(sys, l)?;
    Ok(RotationalConstants {
        l,
        b,
        b_l,
        b_rel: b + b_l,
        b_textbook: rotational_constant_textbook(sys),
    })
}

/// Second-order level split into the equal-mass part and the shift from the
/// mass asymmetry. Energies in joules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposedLevel {
    pub l: u64,
    /// `W_l = ε + l(l+1)(B+B_l) − l²(l+1)²(B+B_l)²/(2ε)` (constants as energies).
    pub w_l: f64,
    /// `W_0 = ε + l(l+1)B − l²(l+1)²B²/(2ε)`; not the ground state.
    pub w_base: f64,
    /// `W_l − W_0`.
    pub shift: f64,
    /// `W_l − ε`.
    pub excitation: f64,
    /// `W_l − ε` regrouped as `(W_0 − ε) + shift`.
    pub excitation_regrouped: f64,
}

pub fn level_decomposed(sys: &RotorSystem, l: u64) -> Result<DecomposedLevel> {
    let big_l = l_factor(l)?;
    let eps = sys.rest_energy();
    let b = b_energy(sys);
    let bl = b_l_from(sys, b, big_l);
    let half_inv_eps = 0.5 / eps;
    let l2 = big_l * big_l;

    let base = big_l * b - l2 * b * b * half_inv_eps;
    let full = big_l * (b + bl) - l2 * (b + bl) * (b + bl) * half_inv_eps;
    let shift = big_l * bl - l2 * (bl * bl + 2.0 * b * bl) * half_inv_eps;
    let regrouped = base + shift;
    debug_assert!((full - regrouped).abs() <= 1e-12 * full.abs().max(f64::MIN_POSITIVE));

    Ok(DecomposedLevel {
        l,
        w_l: eps + full,
        w_base: eps + base,
        shift,
        excitation: full,
        excitation_regrouped: regrouped,
    })
}

/// Wavenumber terms of the `l+1 → l` line, cm⁻¹.
///
/// ```text
/// T1 =  2(l+1)B
/// T2 = −(2hc/ε) B² (l+1)³
/// T3 =  (l+1)[(l+2)B_{l+1} − l B_l]
/// T4 = −((l+1)² hc/2ε)[(l+2)² B²_{l+1} − l² B²_l]
/// T5 = −((l+1)² hc/2ε) 2B [(l+2)² B_{l+1} − l² B_l]
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LineTerms {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
    pub t5: f64,
}

impl LineTerms {
    pub fn sum(&self) -> f64 {
        self.t1 + self.t2 + self.t3 + self.t4 + self.t5
    }

    fn to_wavenumber(self) -> Self {
        Self {
            t1: wavenumber_from_energy(self.t1),
            t2: wavenumber_from_energy(self.t2),
            t3: wavenumber_from_energy(self.t3),
            t4: wavenumber_from_energy(self.t4),
            t5: wavenumber_from_energy(self.t5),
        }
    }
}

/// `T1..T5` from their definitions in terms of `B_l` and `B_{l+1}`.
pub fn line_terms(sys: &RotorSystem, l: u64) -> Result<LineTerms> {
    let lower = l_factor(l)?;
    let upper = l_factor(l + 1)?;
    let eps = sys.rest_energy();
    let b = b_energy(sys);
    let bl = b_l_from(sys, b, lower);
    let bu = b_l_from(sys, b, upper);
    let (n, n1, n2) = (l as f64, l as f64 + 1.0, l as f64 + 2.0);
    let pre = n1 * n1 / (2.0 * eps);

    let terms = LineTerms {
        t1: 2.0 * n1 * b,
        t2: -2.0 * b * b * n1 * n1 * n1 / eps,
        t3: n1 * (n2 * bu - n * bl),
        t4: -pre * (n2 * n2 * bu * bu - n * n * bl * bl),
        t5: -pre * 2.0 * b * (n2 * n2 * bu - n * n * bl),
    };
    Ok(terms.to_wavenumber())
}

/// `T3`, `T4`, `T5` with the `B_l` differences carried out algebraically.
///
/// With `p = αβ`, `u = c²ħ²/a²`, `δ = α − β` and `d_l = p + l(l+1)u`, the
/// identities `(l+2)d_l − l d_{l+1} = 2p` and
/// `(l+2)² d_l − l² d_{l+1} = 2(l+1)(2p + l(l+2)u)` give
///
/// ```text
/// T3 =  (l+1) B δ² p / (2 d_l d_{l+1})
/// T4 = −(l+1)³ hc B² δ⁴ p (p + l(l+2)u) / (8ε d_l² d_{l+1}²)
/// T5 = −(l+1)³ hc B² δ² (2p + l(l+2)u) / (2ε d_l d_{l+1})
/// ```
///
/// Returned in cm⁻¹ as `(T3, T4, T5)`.
pub fn asymmetry_terms_closed(sys: &RotorSystem, l: u64) -> Result<(f64, f64, f64)> {
    let lower = l_factor(l)?;
    let upper = l_factor(l + 1)?;
    let eps = sys.rest_energy();
    let b = b_energy(sys);
    let p = sys.alpha() * sys.beta();
    let u = sys.kinetic_scale();
    let delta = sys.mass_asymmetry();
    let d2 = delta * delta;
    let (d_lo, d_hi) = (p + lower * u, p + upper * u);
    let n1 = l as f64 + 1.0;
    let shifted = l as f64 * (l as f64 + 2.0) * u;

    let t3 = n1 * b * d2 * p / (2.0 * d_lo * d_hi);
    let t4 = -n1.powi(3) * b * b / (8.0 * eps)
        * (d2 / d_lo)
        * (d2 / d_hi)
        * (p / d_lo)
        * ((p + shifted) / d_hi);
    let t5 = -n1.powi(3) * b * b / (2.0 * eps) * (d2 / d_lo) * ((2.0 * p + shifted) / d_hi);
    Ok((
        wavenumber_from_energy(t3),
        wavenumber_from_energy(t4),
        wavenumber_from_energy(t5),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine {
    pub l_lower: u64,
    /// cm⁻¹.
    pub nu_bar: f64,
    pub terms: LineTerms,
    pub model: ModelKind,
}

/// Line from the full five-term expansion; `nu_bar` is the sum of the terms.
pub fn line_wavenumber_full(sys: &RotorSystem, l: u64) -> Result<SpectralLine> {
    let terms = line_terms(sys, l)?;
    Ok(SpectralLine {
        l_lower: l,
        nu_bar: terms.sum(),
        terms,
        model: ModelKind::KGTaylor2,
    })
}

/// `2(l+1)B + (l+1)[(l+2)B_{l+1} − l B_l]`, i.e. `T1 + T3`, cm⁻¹.
pub fn line_wavenumber_approx(sys: &RotorSystem, l: u64) -> Result<f64> {
    let t = line_terms(sys, l)?;
    Ok(t.t1 + t.t3)
}

/// Line `l+1 → l` under any system-based model. The term breakdown is always
/// that of the full expansion; `nu_bar` is the model's own level difference.
pub fn line(sys: &RotorSystem, l: u64, model: ModelKind) -> Result<SpectralLine> {
    let terms = line_terms(sys, l)?;
    let nu_bar = match model {
        ModelKind::KGTaylor2 => terms.sum(),
        ModelKind::NonRelativistic => nr_ladder(sys, l),
        _ => {
            let lo = energy::level(sys, l, model)?;
            let hi = energy::level(sys, l + 1, model)?;
            wavenumber_from_energy(hi.excitation - lo.excitation)
        }
    };
    Ok(SpectralLine {
        l_lower: l,
        nu_bar,
        terms,
        model,
    })
}

fn nr_ladder(sys: &RotorSystem, l: u64) -> f64 {
    2.0 * (l as f64 + 1.0) * rotational_constant_b(sys)
}

/// The `1 → 0` line evaluated three ways, cm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstLine {
    /// `2B + 2B_1`.
    pub nu0: f64,
    /// `(B/2)(M²c²a² + 8ħ²)/(μMc²a² + 2ħ²)`.
    pub mass_form: f64,
    /// `(B/2)(ã² + 8)/(ã·ã₀ + 2)`.
    pub compton_form: f64,
    pub a_tilde: f64,
    pub a_tilde0: f64,
}

pub fn first_line(sys: &RotorSystem) -> Result<FirstLine> {
    use crate::units::C;
    let b = rotational_constant_b(sys);
    let b1 = rotational_correction_bl(sys, 1)?;
    let (mass, mu, a) = (sys.total_mass(), sys.reduced_mass(), sys.bond_length());
    let hbar2 = HBAR * HBAR;
    let mca = mass * C * a;
    let mass_form = 0.5 * b * (mca * mca + 8.0 * hbar2) / (mu * mass * C * C * a * a + 2.0 * hbar2);
    let (at, at0) = (sys.a_tilde(), sys.a_tilde0());
    let compton_form = 0.5 * b * (at * at + 8.0) / (at * at0 + 2.0);
    Ok(FirstLine {
        nu0: 2.0 * b + 2.0 * b1,
        mass_form,
        compton_form,
        a_tilde: at,
        a_tilde0: at0,
    })
}

/// Spacing between adjacent lines, cm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spacing {
    pub l: u64,
    /// `ν̄(l+1) − ν̄(l)`.
    pub delta: f64,
    /// `Δ_l − 2B`.
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub model: ModelKind,
    /// cm⁻¹.
    pub b: f64,
    pub lines: Vec<SpectralLine>,
    /// One per line; entry `i` compares line `i + 1` with line `i`.
    pub spacings: Vec<Spacing>,
}

impl Spectrum {
    pub fn max_abs_deviation(&self) -> f64 {
        self.spacings
            .iter()
            .map(|s| s.deviation.abs())
            .fold(0.0, f64::max)
    }
}

/// Lines `l = 0..=l_max` and their spacings under `model`.
pub fn spectrum(sys: &RotorSystem, l_max: u64, model: ModelKind) -> Result<Spectrum> {
    let b = rotational_constant_b(sys);
    // one extra line so the last row also has a spacing
    let all: Vec<SpectralLine> = (0..=l_max + 1)
        .map(|l| line(sys, l, model))
        .collect::<Result<_>>()?;

    // Deviations are taken against the 2(l+1)B ladder line by line, so a
    // model that sits exactly on the ladder reports exactly zero.
    let off_ladder: Vec<f64> = all
        .iter()
        .map(|ln| ln.nu_bar - 2.0 * (ln.l_lower as f64 + 1.0) * b)
        .collect();
    let spacings = off_ladder
        .windows(2)
        .zip(0..)
        .map(|(w, l)| {
            let deviation = w[1] - w[0];
            Spacing {
                l,
                delta: 2.0 * b + deviation,
                deviation,
            }
        })
        .collect();

    let mut lines = all;
    lines.truncate(l_max as usize + 1);
    Ok(Spectrum {
        model,
        b,
        lines,
        spacings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::{level_closed_form, level_taylor, TaylorOrder};
    use crate::units::{AMU, C, H};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn hcl() -> RotorSystem {
        RotorSystem::from_amu_angstrom(1.007825, 34.968853, 1.2746).unwrap()
    }

    fn two_to_one() -> RotorSystem {
        RotorSystem::new(2.0 * AMU, AMU, HBAR / (AMU * C)).unwrap()
    }

    #[test]
    fn b_homonuclear_is_textbook() {
        let sys = RotorSystem::from_amu_angstrom(15.994915, 15.994915, 1.2075).unwrap();
        let textbook = H / (8.0 * PI * PI * sys.inertia() * C) / 100.0;
        assert_relative_eq!(rotational_constant_b(&sys), textbook, max_relative = 1e-14);
        assert_relative_eq!(
            rotational_constant_textbook(&sys),
            textbook,
            max_relative = 1e-14
        );
    }

    #[test]
    fn b_hydrogen_chloride() {
        // 50-digit evaluation with CODATA 2018 constants
        let sys = hcl();
        assert_relative_eq!(
            rotational_constant_b(&sys),
            1.153_685_941_709_266,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            rotational_constant_textbook(&sys),
            10.592_615_615_208_33,
            max_relative = 1e-13
        );
    }

    #[test]
    fn b_scales_inverse_square() {
        let sys = hcl();
        let far = sys.with_bond_length(2.0 * sys.bond_length()).unwrap();
        assert_relative_eq!(
            rotational_constant_b(&far),
            rotational_constant_b(&sys) / 4.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn b_l_examples() {
        let homo = RotorSystem::from_amu_angstrom(1.0, 1.0, 0.74).unwrap();
        for l in 0..5 {
            assert_eq!(rotational_correction_bl(&homo, l).unwrap(), 0.0);
            let c = rotational_constants(&homo, l).unwrap();
            assert_eq!(c.b_rel, c.b);
        }
        let sys = two_to_one();
        assert_relative_eq!(
            rotational_correction_bl(&sys, 1).unwrap(),
            rotational_constant_b(&sys) / 16.0,
            max_relative = 1e-14
        );
        let sys = hcl();
        for l in 0..=100 {
            assert!(
                rotational_correction_bl(&sys, l).unwrap()
                    > rotational_correction_bl(&sys, l + 1).unwrap()
            );
        }
    }

    #[test]
    fn b_rel_tends_to_b() {
        let sys = RotorSystem::with_chi(AMU, 35.0 * AMU, 1.0).unwrap();
        let c = rotational_constants(&sys, 100_000).unwrap();
        assert!(c.b_l < 1e-6 * c.b);
        assert_eq!(c.b_rel, c.b + c.b_l);

        // B_l falls off as 1/l(l+1) once the centrifugal term dominates
        let slow = RotorSystem::with_chi(AMU, 35.0 * AMU, 1e-4).unwrap();
        let far = rotational_correction_bl(&slow, 1_000_000).unwrap();
        let near = rotational_correction_bl(&slow, 100_000).unwrap();
        assert!(far < near && far / near < 0.1);
    }

    #[test]
    fn taylor_first_matches_b_rel() {
        for sys in [hcl(), two_to_one()] {
            for l in 0..30 {
                let t = level_taylor(&sys, l, TaylorOrder::First)
                    .unwrap()
                    .excitation;
                let big_l = (l * (l + 1)) as f64;
                let via_b = big_l * b_rel_energy(&sys, l).unwrap();
                if l == 0 {
                    assert_eq!(t, 0.0);
                } else {
                    assert_relative_eq!(t, via_b, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn decomposition() {
        let homo = RotorSystem::from_amu_angstrom(1.0, 1.0, 0.74).unwrap();
        for l in 0..10 {
            let d = level_decomposed(&homo, l).unwrap();
            assert_eq!(d.shift, 0.0);
            assert_eq!(d.w_l, d.w_base);
        }
        let d0 = level_decomposed(&hcl(), 0).unwrap();
        assert_eq!(d0.w_base, hcl().rest_energy());
        assert_eq!(d0.shift, 0.0);

        for sys in [hcl(), two_to_one()] {
            for l in 1..20 {
                let d = level_decomposed(&sys, l).unwrap();
                let t2 = level_taylor(&sys, l, TaylorOrder::Second).unwrap();
                assert_relative_eq!(d.w_l, t2.w, max_relative = 1e-13);
                assert_relative_eq!(d.excitation, t2.excitation, max_relative = 1e-13);
                assert_relative_eq!(d.excitation, d.excitation_regrouped, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn homonuclear_terms_vanish() {
        let sys = RotorSystem::with_chi(AMU, AMU, 1e-2).unwrap();
        let b = rotational_constant_b(&sys);
        let eps = sys.rest_energy();
        for l in 0..10 {
            let t = line_terms(&sys, l).unwrap();
            assert_eq!((t.t3, t.t4, t.t5), (0.0, 0.0, 0.0));
            let n1 = l as f64 + 1.0;
            let t2 = -2.0 * H * C * 100.0 / eps * b * b * n1.powi(3);
            assert_relative_eq!(t.t1, 2.0 * n1 * b, max_relative = 1e-14);
            assert_relative_eq!(t.t2, t2, max_relative = 1e-12);
            assert_eq!(line_wavenumber_approx(&sys, l).unwrap(), t.t1);
        }
    }

    #[test]
    fn term_signs() {
        for sys in [hcl(), two_to_one()] {
            for l in 0..20 {
                let t = line_terms(&sys, l).unwrap();
                assert!(t.t1 > 0.0 && t.t2 < 0.0);
            }
        }
    }

    #[test]
    fn closed_forms_two_to_one() {
        let sys = two_to_one();
        for l in 0..30 {
            let t = line_terms(&sys, l).unwrap();
            let (t3, t4, t5) = asymmetry_terms_closed(&sys, l).unwrap();
            assert_relative_eq!(t3, t.t3, max_relative = 1e-11);
            assert_relative_eq!(t4, t.t4, max_relative = 1e-11);
            assert_relative_eq!(t5, t.t5, max_relative = 1e-11);
        }
    }

    #[test]
    fn approx_minus_full() {
        let sys = RotorSystem::with_chi(AMU, 3.0 * AMU, 0.5).unwrap();
        for l in 0..10 {
            let full = line_wavenumber_full(&sys, l).unwrap();
            let approx = line_wavenumber_approx(&sys, l).unwrap();
            let t = full.terms;
            assert_relative_eq!(
                approx - full.nu_bar,
                -(t.t2 + t.t4 + t.t5),
                max_relative = 1e-12
            );
        }
        let sys = hcl();
        let t = line_terms(&sys, 0).unwrap();
        let c = rotational_constants(&sys, 1).unwrap();
        assert_relative_eq!(t.t1 + t.t3, 2.0 * c.b + 2.0 * c.b_l, max_relative = 1e-14);
    }

    #[test]
    fn first_line_examples() {
        let homo = RotorSystem::from_amu_angstrom(1.00782503223, 1.00782503223, 0.7414).unwrap();
        let f = first_line(&homo).unwrap();
        assert_eq!(f.nu0, 2.0 * rotational_constant_b(&homo));

        let sys = two_to_one();
        let f = first_line(&sys).unwrap();
        let b = rotational_constant_b(&sys);
        assert_relative_eq!(f.a_tilde, 3.0, max_relative = 1e-14);
        assert_relative_eq!(f.a_tilde0, 2.0 / 3.0, max_relative = 1e-14);
        for v in [f.nu0, f.mass_form, f.compton_form] {
            assert_relative_eq!(v / b, 2.125, max_relative = 1e-13);
        }

        let f = first_line(&hcl()).unwrap();
        // 2B + 2B_1 at 50 digits
        assert_relative_eq!(f.nu0, 21.185_231_230_413_7, max_relative = 1e-12);
        assert!(f.nu0 > 2.0 * rotational_constant_b(&hcl()));
    }

    #[test]
    fn exact_first_line_close_to_expansion() {
        // exact (W_1 − W_0)/hc at 50 digits
        let sys = hcl();
        let exact =
            crate::units::wavenumber_from_energy(level_closed_form(&sys, 1).unwrap().excitation);
        assert_relative_eq!(exact, 21.185_231_230_388_657, max_relative = 1e-12);
    }

    #[test]
    fn spectrum_shapes() {
        let sys = RotorSystem::with_chi(AMU, 2.0 * AMU, 1e-2).unwrap();
        let nr = spectrum(&sys, 20, ModelKind::NonRelativistic).unwrap();
        assert_eq!(nr.lines.len(), 21);
        assert_eq!(nr.spacings.len(), 21);
        for s in &nr.spacings {
            assert_eq!(s.delta, 2.0 * nr.b);
            assert_eq!(s.deviation, 0.0);
        }
        let kg = spectrum(&sys, 20, ModelKind::HeteronuclearKGExact).unwrap();
        assert!(kg.max_abs_deviation() > 0.0);

        let one = spectrum(&sys, 0, ModelKind::HeteronuclearKGExact).unwrap();
        assert_eq!(one.lines.len(), 1);
        assert_eq!(one.lines[0].l_lower, 0);
    }

    #[test]
    fn homonuclear_spacing_shrinks() {
        let sys = RotorSystem::with_chi(AMU, AMU, 1e-2).unwrap();
        let b = rotational_constant_b(&sys);
        for model in [
            ModelKind::KGTaylor2,
            ModelKind::HeteronuclearKGExact,
            ModelKind::HomonuclearKG,
        ] {
            let s = spectrum(&sys, 20, model).unwrap();
            for sp in &s.spacings {
                assert!(sp.delta < 2.0 * b, "{model} l={}", sp.l);
                assert!(sp.deviation < 0.0);
            }
        }
    }
}
