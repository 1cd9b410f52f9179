//! The two-mass rigid rotor and the mechanical quantities derived from it.

use std::fmt;

use crate::error::{Error, Result};
use crate::units::{AMU, ANGSTROM, C, HBAR};

/// Every energy-level model the crate knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// One particle of rest mass `m0` on a sphere of radius `a`.
    SingleParticle,
    /// Equal masses; only valid when `|m1 - m2| / M < 1e-12`.
    HomonuclearKG,
    /// Closed-form positive root of the quartic.
    HeteronuclearKGExact,
    /// Same root obtained by solving the quartic numerically.
    HeteronuclearKGQuartic,
    /// First-order binomial expansion of the exact level.
    KGTaylor1,
    /// Second-order expansion written through the relativistic rotational coefficient.
    KGTaylor2,
    NonRelativistic,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::SingleParticle => "single-particle",
            ModelKind::HomonuclearKG => "kg-homonuclear",
            ModelKind::HeteronuclearKGExact => "kg-exact",
            ModelKind::HeteronuclearKGQuartic => "kg-quartic",
            ModelKind::KGTaylor1 => "taylor1",
            ModelKind::KGTaylor2 => "taylor2",
            ModelKind::NonRelativistic => "nr",
        }
    }

    pub fn is_relativistic(self) -> bool {
        !matches!(self, ModelKind::NonRelativistic)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Two point masses (kg) held a fixed distance `a` (m) apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorSystem {
    m1: f64,
    m2: f64,
    a: f64,
}

/// Quantities derived from a [`RotorSystem`], all SI except the
/// dimensionless ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedQuantities {
    pub total_mass: f64,
    pub reduced_mass: f64,
    pub inertia: f64,
    pub rest_energy: f64,
    /// `ħ / (μ c a)`: how relativistic the rotor is.
    pub chi: f64,
    /// Bond length in units of the Compton wavelength of the total mass.
    pub a_tilde: f64,
    /// Bond length in units of the Compton wavelength of the reduced mass.
    pub a_tilde0: f64,
}

impl RotorSystem {
    pub fn new(m1: f64, m2: f64, a: f64) -> Result<Self> {
        for (name, v) in [("m1", m1), ("m2", m2), ("a", a)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidSystem(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(Self { m1, m2, a })
    }

    pub fn from_amu_angstrom(m1_amu: f64, m2_amu: f64, a_angstrom: f64) -> Result<Self> {
        Self::new(m1_amu * AMU, m2_amu * AMU, a_angstrom * ANGSTROM)
    }

    /// A system with reduced mass tuned so that `chi` takes the given value at
    /// bond length `a`.
    pub fn with_chi(m1: f64, m2: f64, chi: f64) -> Result<Self> {
        let probe = Self::new(m1, m2, 1.0)?;
        Self::new(m1, m2, HBAR / (probe.reduced_mass() * C * chi))
    }

    pub fn m1(&self) -> f64 {
        self.m1
    }

    pub fn m2(&self) -> f64 {
        self.m2
    }

    pub fn bond_length(&self) -> f64 {
        self.a
    }

    pub fn with_bond_length(&self, a: f64) -> Result<Self> {
        Self::new(self.m1, self.m2, a)
    }

    pub fn total_mass(&self) -> f64 {
        self.m1 + self.m2
    }

    pub fn reduced_mass(&self) -> f64 {
        if self.m1 == self.m2 {
            return self.m1 / 2.0;
        }
        let (small, large) = if self.m1 < self.m2 {
            (self.m1, self.m2)
        } else {
            (self.m2, self.m1)
        };
        small * (large / (small + large))
    }

    pub fn inertia(&self) -> f64 {
        self.reduced_mass() * self.a * self.a
    }

    /// `ε = (m1 + m2) c²`.
    pub fn rest_energy(&self) -> f64 {
        self.total_mass() * C * C
    }

    /// `α = m1 c²`.
    pub fn alpha(&self) -> f64 {
        self.m1 * C * C
    }

    /// `β = m2 c²`.
    pub fn beta(&self) -> f64 {
        self.m2 * C * C
    }

    /// `(m1 - m2) c²`, with the mass difference taken first so equal masses
    /// give exactly zero.
    pub fn mass_asymmetry(&self) -> f64 {
        (self.m1 - self.m2) * C * C
    }

    /// `(cħ/a)²`, the energy² scale of the centrifugal term.
    pub fn kinetic_scale(&self) -> f64 {
        let k = C * HBAR / self.a;
        k * k
    }

    pub fn chi(&self) -> f64 {
        HBAR / (self.reduced_mass() * C * self.a)
    }

    pub fn a_tilde(&self) -> f64 {
        self.a * self.total_mass() * C / HBAR
    }

    pub fn a_tilde0(&self) -> f64 {
        self.a * self.reduced_mass() * C / HBAR
    }

    /// `|m1 - m2| / M`.
    pub fn asymmetry_ratio(&self) -> f64 {
        (self.m1 - self.m2).abs() / self.total_mass()
    }

    pub fn derived(&self) -> DerivedQuantities {
        DerivedQuantities {
            total_mass: self.total_mass(),
            reduced_mass: self.reduced_mass(),
            inertia: self.inertia(),
            rest_energy: self.rest_energy(),
            chi: self.chi(),
            a_tilde: self.a_tilde(),
            a_tilde0: self.a_tilde0(),
        }
    }

    pub fn swapped(&self) -> Self {
        Self {
            m1: self.m2,
            m2: self.m1,
            a: self.a,
        }
    }
}
