//! How far each approximation sits from the exact level as the rotor
//! shrinks toward its Compton length.
//!
//! cargo run --example compare

use kgrotor::energy::{self, NrForm, TaylorOrder};
use kgrotor::units::AMU;
use kgrotor::RotorSystem;

fn main() -> kgrotor::Result<()> {
    let l = 3;
    println!("l = {l}, masses 1:35, relative error against kg-exact");
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12}",
        "chi", "nr weighted", "nr textbook", "taylor1", "taylor2"
    );
    for chi in [1e-6, 1e-4, 1e-2, 1e-1, 1.0] {
        let sys = RotorSystem::with_chi(AMU, 35.0 * AMU, chi)?;
        let exact = energy::level_closed_form(&sys, l)?.excitation;
        let err = |e: f64| (e - exact) / exact;
        println!(
            "{chi:>8.0e} {:>12.3e} {:>12.3e} {:>12.3e} {:>12.3e}",
            err(energy::level_nonrel(&sys, l, NrForm::MassWeighted)?),
            err(energy::level_nonrel(&sys, l, NrForm::Textbook)?),
            err(energy::level_taylor(&sys, l, TaylorOrder::First)?.excitation),
            err(energy::level_taylor(&sys, l, TaylorOrder::Second)?.excitation),
        );
    }
    Ok(())
}
