//! Relativistic (Klein-Gordon) rotational structure of spin-zero diatomic
//! molecules.
//!
//! The crate computes energy levels of a two-mass rigid rotor from the
//! Klein-Gordon Hamiltonian, the rotational constants and line wavenumbers
//! derived from them, and inverts observed lines back to a bond length.
//!
//! ```
//! use kgrotor::{energy, lines, RotorSystem};
//!
//! let hcl = RotorSystem::from_amu_angstrom(1.00782503223, 34.968852682, 1.2746)?;
//! let level = energy::level_closed_form(&hcl, 1)?;
//! assert!(level.excitation > 0.0);
//!
//! let first = lines::first_line(&hcl)?;
//! assert!((first.nu0 - first.compton_form).abs() < 1e-12 * first.nu0);
//! # Ok::<(), kgrotor::Error>(())
//! ```

pub mod cli;
pub mod energy;
mod error;
pub mod fit;
pub mod lines;
pub mod moldb;
pub mod rotor;
pub mod units;

pub use energy::{EnergyLevel, NrForm, QuarticCoefficients, TaylorOrder};
pub use error::{Error, Result};
pub use fit::{FitModel, FitOptions, FitResult};
pub use lines::{FirstLine, LineTerms, RotationalConstants, SpectralLine, Spectrum};
pub use moldb::{IsotopeRecord, MassTable, MoleculeDb, MoleculePreset};
pub use rotor::{DerivedQuantities, ModelKind, RotorSystem};
pub use units::{PhysicalConstants, Quantity, Unit};
