//! Bond length of HCl from its first line, under each inversion model, and
//! from a handful of noisy lines.
//!
//! cargo run --example fit

use kgrotor::fit::{self, FitModel, FitOptions};
use kgrotor::units::{AMU, ANGSTROM};
use kgrotor::RotorSystem;

fn main() -> kgrotor::Result<()> {
    let (m1, m2) = (1.00782503223 * AMU, 34.968852682 * AMU);
    let truth = RotorSystem::new(m1, m2, 1.2746 * ANGSTROM)?;
    let nu0 = fit::predicted_line(&truth, 0, FitModel::KgExact)?;
    println!("observed 1 -> 0 at {nu0:.10} cm^-1");

    for model in [
        FitModel::KgExact,
        FitModel::FirstLineApprox,
        FitModel::NonRelativistic,
    ] {
        let r = fit::fit_bond_length_first_line(m1, m2, nu0, model, FitOptions::default())?;
        println!(
            "{:>9}: a = {:.10} A after {} steps (residual {:.1e})",
            model.name(),
            r.a / ANGSTROM,
            r.iterations,
            r.residual
        );
    }

    // jitter the lines by a few parts per million
    let lines: Vec<(u64, f64)> = (0..6)
        .map(|l| {
            let nu = fit::predicted_line(&truth, l, FitModel::KgExact).unwrap();
            (l, nu * (1.0 + 3e-6 * if l % 2 == 0 { 1.0 } else { -1.0 }))
        })
        .collect();
    let r =
        fit::fit_bond_length_multi_line(m1, m2, &lines, FitModel::KgExact, FitOptions::default())?;
    println!("six noisy lines: a = {:.8} A", r.a / ANGSTROM);

    match fit::fit_bond_length_first_line(m1, m2, 1e40, FitModel::KgExact, FitOptions::default()) {
        Err(e) => println!("absurd line: {e}"),
        Ok(r) => println!("unexpected fit {:e}", r.a),
    }
    Ok(())
}
