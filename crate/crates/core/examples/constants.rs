//! Rotational constants and the l-dependent correction B_l for a few presets.
//!
//! cargo run --example constants

use kgrotor::{lines, MoleculeDb};

fn main() -> kgrotor::Result<()> {
    let db = MoleculeDb::open(None)?;
    println!(
        "{:<5} {:>14} {:>14} {:>14} {:>14}",
        "", "B", "B_textbook", "B_1", "B_Rel(1)"
    );
    for name in ["H2", "HD", "HCl", "CO", "HBr"] {
        let sys = db.resolve_system(name)?;
        let c = lines::rotational_constants(&sys, 1)?;
        println!(
            "{name:<5} {:>14.8} {:>14.8} {:>14.8} {:>14.8}",
            c.b, c.b_textbook, c.b_l, c.b_rel
        );
    }

    // B_l fades as l grows
    let hcl = db.resolve_system("HCl")?;
    for l in [1, 10, 100, 1000, 100_000] {
        println!(
            "HCl B_{l:<6} = {:.6e} cm^-1",
            lines::rotational_correction_bl(&hcl, l)?
        );
    }
    Ok(())
}
