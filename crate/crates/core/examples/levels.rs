//! Rotational levels of HCl under every model, as excitations above rest.
//!
//! cargo run --example levels

use kgrotor::energy::{self, NrForm};
use kgrotor::units::wavenumber_from_energy;
use kgrotor::{ModelKind, RotorSystem};

fn main() -> kgrotor::Result<()> {
    let hcl = RotorSystem::from_amu_angstrom(1.00782503223, 34.968852682, 1.2746)?;
    println!(
        "rest energy {:.6e} J, chi {:.3e}",
        hcl.rest_energy(),
        hcl.chi()
    );
    println!(
        "{:>3} {:>22} {:>22} {:>22} {:>22}",
        "l", "kg-exact", "kg-quartic", "taylor2", "nr (textbook)"
    );
    for l in 0..=6 {
        let cm = |e: f64| wavenumber_from_energy(e);
        let exact = energy::level(&hcl, l, ModelKind::HeteronuclearKGExact)?;
        let quartic = energy::level(&hcl, l, ModelKind::HeteronuclearKGQuartic)?;
        let taylor = energy::level(&hcl, l, ModelKind::KGTaylor2)?;
        let nr = energy::level_nonrel(&hcl, l, NrForm::Textbook)?;
        println!(
            "{l:>3} {:>22.15e} {:>22.15e} {:>22.15e} {:>22.15e}",
            cm(exact.excitation),
            cm(quartic.excitation),
            cm(taylor.excitation),
            cm(nr)
        );
    }

    // a toy rotor where relativity is not a small correction
    let toy = RotorSystem::with_chi(1.0, 3.0, 1.0)?;
    let w = energy::level_closed_form(&toy, 1)?;
    println!(
        "\nchi = 1, masses 1:3 -> W(1)/eps = {:.12}",
        w.w / toy.rest_energy()
    );
    Ok(())
}
