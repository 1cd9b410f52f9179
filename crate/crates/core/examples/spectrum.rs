//! Pure-rotation spectrum of CO with the five-term breakdown and the spacing
//! deviation from 2B.
//!
//! cargo run --example spectrum [-- PRESET]

use kgrotor::{lines, ModelKind, MoleculeDb};

fn main() -> kgrotor::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "CO".into());
    let db = MoleculeDb::open(None)?;
    let sys = db.resolve_system(&name)?;

    let s = lines::spectrum(&sys, 8, ModelKind::HeteronuclearKGExact)?;
    println!("{name}: B = {:.10} cm^-1", s.b);
    for (line, gap) in s.lines.iter().zip(&s.spacings) {
        let t = line.terms;
        println!(
            "{:>2} -> {:>2}  {:>18.12}  T2 {:>11.3e}  T3 {:>14.8}  gap-2B {:>11.3e}",
            line.l_lower + 1,
            line.l_lower,
            line.nu_bar,
            t.t2,
            t.t3,
            gap.deviation
        );
    }

    let nr = lines::spectrum(&sys, 8, ModelKind::NonRelativistic)?;
    println!(
        "non-relativistic max |gap-2B| = {:e}",
        nr.max_abs_deviation()
    );
    Ok(())
}
