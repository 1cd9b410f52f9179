//! Isotope masses and presets, bundled or from a user table.
//!
//! cargo run --example molecule_db [-- masses.csv]

use std::path::PathBuf;

use kgrotor::units::AMU;
use kgrotor::{MassTable, MoleculeDb};

fn main() -> kgrotor::Result<()> {
    let flag = std::env::args().nth(1).map(PathBuf::from);
    let db = MoleculeDb::open(flag.as_deref())?;

    for spec in ["HCl", "DCl", "1H:37Cl:1.2746", "CO:1.2"] {
        let sys = db.resolve_system(spec)?;
        println!(
            "{spec:<16} m1 {:>11.6} u  m2 {:>11.6} u  a {:.4e} m",
            sys.m1() / AMU,
            sys.m2() / AMU,
            sys.bond_length()
        );
    }

    if let Err(e) = db.resolve_system("1H:99Zz:1.0") {
        println!("error: {e}");
    }
    if let Err(e) = MassTable::parse("symbol,mass_amu\nX,-1.0\n", "inline") {
        println!("error: {e}");
    }

    let bundled = MassTable::bundled();
    println!(
        "\nbundled table, {} isotopes:\n{}",
        bundled.len(),
        bundled.to_csv()
    );
    Ok(())
}
