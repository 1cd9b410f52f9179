//! The 1 -> 0 line three ways, plus how it moves as the bond shrinks
//! toward the Compton scale.
//!
//! cargo run --example first_line

use kgrotor::units::AMU;
use kgrotor::{lines, RotorSystem};

fn main() -> kgrotor::Result<()> {
    let hcl = RotorSystem::from_amu_angstrom(1.00782503223, 34.968852682, 1.2746)?;
    let f = lines::first_line(&hcl)?;
    println!("2B + 2B_1     {:.15}", f.nu0);
    println!("mass form     {:.15}", f.mass_form);
    println!("compton form  {:.15}", f.compton_form);
    println!("a~ = {:.6e}, a~0 = {:.6e}", f.a_tilde, f.a_tilde0);

    println!(
        "\n{:>8} {:>16} {:>16}",
        "chi", "nu0/2B", "asymmetric nu0/2B"
    );
    for chi in [1e-6, 1e-3, 1e-1, 1.0, 10.0] {
        let same = RotorSystem::with_chi(AMU, AMU, chi)?;
        let odd = RotorSystem::with_chi(AMU, 35.0 * AMU, chi)?;
        let ratio = |s: &RotorSystem| -> kgrotor::Result<f64> {
            Ok(lines::first_line(s)?.nu0 / (2.0 * lines::rotational_constant_b(s)))
        };
        println!(
            "{chi:>8.0e} {:>16.10} {:>16.10}",
            ratio(&same)?,
            ratio(&odd)?
        );
    }
    Ok(())
}
