//! Physical constants (CODATA 2018) and the handful of unit conversions the
//! rest of the crate needs.
//!
//! Everything inside the crate is computed in SI: kilograms, metres, seconds
//! and joules. Wavenumbers in cm⁻¹ are treated as an energy through
//! `E = h·c·ν̄`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s (exact).
pub const C: f64 = 299_792_458.0;
/// Planck constant, J·s (exact).
pub const H: f64 = 6.626_070_15e-34;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = H / (2.0 * PI);
/// Unified atomic mass unit, kg.
pub const AMU: f64 = 1.660_539_066_60e-27;
/// Elementary charge, C (exact). Used for the electronvolt.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// One ångström in metres.
pub const ANGSTROM: f64 = 1e-10;
/// Energy equivalent of one wavenumber, J per cm⁻¹.
pub const HC_PER_CM: f64 = H * C * 100.0;

/// The constant set as a value, for callers that want to pass it around or
/// print it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub c: f64,
    pub h: f64,
    pub hbar: f64,
    pub amu: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: Self = Self {
        c: C,
        h: H,
        hbar: HBAR,
        amu: AMU,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Energy,
    Mass,
    Length,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Joule,
    ElectronVolt,
    /// cm⁻¹, as the energy `h·c·ν̄`.
    Wavenumber,
    Kilogram,
    Amu,
    Metre,
    Angstrom,
}

impl Unit {
    pub const ALL: [Unit; 7] = [
        Unit::Joule,
        Unit::ElectronVolt,
        Unit::Wavenumber,
        Unit::Kilogram,
        Unit::Amu,
        Unit::Metre,
        Unit::Angstrom,
    ];

    pub fn dimension(self) -> Dimension {
        match self {
            Unit::Joule | Unit::ElectronVolt | Unit::Wavenumber => Dimension::Energy,
            Unit::Kilogram | Unit::Amu => Dimension::Mass,
            Unit::Metre | Unit::Angstrom => Dimension::Length,
        }
    }

    /// Size of one of this unit in the SI base unit of its dimension.
    pub fn si_factor(self) -> f64 {
        match self {
            Unit::Joule | Unit::Kilogram | Unit::Metre => 1.0,
            Unit::ElectronVolt => ELEMENTARY_CHARGE,
            Unit::Wavenumber => HC_PER_CM,
            Unit::Amu => AMU,
            Unit::Angstrom => ANGSTROM,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::Joule => "J",
            Unit::ElectronVolt => "eV",
            Unit::Wavenumber => "cm^-1",
            Unit::Kilogram => "kg",
            Unit::Amu => "u",
            Unit::Metre => "m",
            Unit::Angstrom => "Å",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub unit: Unit,
}

impl Quantity {
    pub fn new(value: f64, unit: Unit) -> Self {
        Self { value, unit }
    }

    pub fn to_si(self) -> f64 {
        self.value * self.unit.si_factor()
    }

    pub fn convert(self, target: Unit) -> Result<Quantity> {
        convert(self, target)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.unit.symbol())
    }
}

pub fn convert(q: Quantity, target: Unit) -> Result<Quantity> {
    let (from, to) = (q.unit.dimension(), target.dimension());
    if from != to {
        return Err(Error::IncompatibleDimension { from, to });
    }
    if q.unit == target {
        return Ok(q);
    }
    let value = q.value * (q.unit.si_factor() / target.si_factor());
    Ok(Quantity::new(value, target))
}

/// Energy in joules to wavenumber in cm⁻¹.
pub fn wavenumber_from_energy(energy: f64) -> f64 {
    energy / HC_PER_CM
}

/// Wavenumber in cm⁻¹ to energy in joules.
pub fn energy_from_wavenumber(nu_bar: f64) -> f64 {
    nu_bar * HC_PER_CM
}

pub fn joule_to_ev(energy: f64) -> f64 {
    energy / ELEMENTARY_CHARGE
}
