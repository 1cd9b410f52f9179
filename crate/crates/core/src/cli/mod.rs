//! The `kgrotor` command line.
//!
//! Exit codes: 0 success, 2 argument error, 3 system resolution error,
//! 4 fit failure (observable outside the reachable range).

pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::energy::{self, NrForm, TaylorOrder};
use crate::error::Error;
use crate::fit::{self, FitModel, FitOptions};
use crate::lines;
use crate::moldb::MoleculeDb;
use crate::rotor::{ModelKind, RotorSystem};
use crate::units::{joule_to_ev, wavenumber_from_energy, AMU, ANGSTROM, HC_PER_CM};

pub use output::{Cell, Column, Document, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOLUTION: i32 = 3;
pub const EXIT_FIT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "kgrotor",
    version,
    about = "Klein-Gordon rotational levels and spectra of spin-zero diatomics"
)]
pub struct Cli {
    /// Isotope mass table (CSV "symbol,mass_amu"); falls back to $KGROTOR_MASS_DB, then the bundled table
    #[arg(long, global = true, value_name = "PATH")]
    pub mass_db: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Line wavenumbers l+1 -> l with the T1..T5 breakdown and spacings
    Spectrum(SpectrumArgs),
    /// Derived quantities and rotational constants
    Constants(ConstantsArgs),
    /// Bond length from an observed first line or a list of lines
    Fit(FitArgs),
    /// Levels and lines of every model side by side
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// iso1:iso2:a_angstrom, PRESET or PRESET:a_angstrom
    pub system: String,
    #[arg(long, default_value_t = 10)]
    pub lmax: u64,
    /// kg-exact, kg-quartic, kg-homonuclear, taylor1, taylor2 or nr
    #[arg(long, default_value = "kg-exact", value_parser = parse_model)]
    pub model: ModelKind,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    pub system: String,
    /// Quantum number for B_l and B_Rel
    #[arg(long, default_value_t = 0)]
    pub l: u64,
    /// Emit one row per l = 0..=LMAX instead of a single row
    #[arg(long, conflicts_with = "l")]
    pub lmax: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// iso1:iso2 or PRESET (any bond length is ignored)
    #[arg(conflicts_with_all = ["m1", "m2"])]
    pub system: Option<String>,
    /// First mass, u
    #[arg(long, requires = "m2")]
    pub m1: Option<f64>,
    /// Second mass, u
    #[arg(long, requires = "m1")]
    pub m2: Option<f64>,
    /// Observed 1 -> 0 line, cm^-1
    #[arg(
        long,
        conflicts_with = "lines_file",
        required_unless_present = "lines_file"
    )]
    pub nu0: Option<f64>,
    /// CSV of "l,nu_bar_cm1" rows
    #[arg(long, value_name = "PATH")]
    pub lines_file: Option<PathBuf>,
    /// kg-exact, approx or nr
    #[arg(long, default_value = "kg-exact")]
    pub model: FitModel,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub system: String,
    #[arg(long, default_value_t = 10)]
    pub lmax: u64,
    /// Report total energies W instead of excitations W - ε
    #[arg(long)]
    pub absolute: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_model(s: &str) -> Result<ModelKind, String> {
    const CHOICES: [ModelKind; 6] = [
        ModelKind::HeteronuclearKGExact,
        ModelKind::HeteronuclearKGQuartic,
        ModelKind::HomonuclearKG,
        ModelKind::KGTaylor1,
        ModelKind::KGTaylor2,
        ModelKind::NonRelativistic,
    ];
    CHOICES.into_iter().find(|m| m.name() == s).ok_or_else(|| {
        let names: Vec<_> = CHOICES.iter().map(|m| m.name()).collect();
        format!(
            "unknown model `{s}` (expected one of: {})",
            names.join(", ")
        )
    })
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BracketFailure { .. } => EXIT_FIT,
            Error::QuantumNumberTooLarge(_)
            | Error::NotHomonuclear(_)
            | Error::UnsupportedModel(_)
            | Error::NoLines
            | Error::DuplicateLine(_) => EXIT_USAGE,
            _ => EXIT_RESOLUTION,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Parse `args` (including the program name), run, print, and return the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("kgrotor: {}", e.message);
            e.code
        }
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let db = MoleculeDb::open(cli.mass_db.as_deref())?;
    let (doc, out) = match &cli.command {
        Command::Spectrum(a) => (cmd_spectrum(&db, a)?, &a.output),
        Command::Constants(a) => (cmd_constants(&db, a)?, &a.output),
        Command::Fit(a) => (cmd_fit(&db, a)?, &a.output),
        Command::Compare(a) => (cmd_compare(&db, a)?, &a.output),
    };
    emit(&doc.render(out.format), out.out.as_deref())
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    let result = match path {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    result.map_err(|e| CliError {
        code: 1,
        message: format!("cannot write output: {e}"),
    })
}

fn system_meta(doc: &mut Document, sys: &RotorSystem) {
    doc.meta("m1_kg", sys.m1());
    doc.meta("m2_kg", sys.m2());
    doc.meta("a_m", sys.bond_length());
    doc.meta("chi", sys.chi());
}

pub fn cmd_spectrum(db: &MoleculeDb, args: &SpectrumArgs) -> Result<Document, CliError> {
    let sys = db.resolve_system(&args.system)?;
    let spectrum = lines::spectrum(&sys, args.lmax, args.model)?;

    let columns = [
        ("l", "l"),
        ("nu_bar_cm1", "nu_bar [cm^-1]"),
        ("t1_cm1", "T1"),
        ("t2_cm1", "T2"),
        ("t3_cm1", "T3"),
        ("t4_cm1", "T4"),
        ("t5_cm1", "T5"),
        ("spacing_cm1", "spacing"),
        ("deviation_cm1", "spacing - 2B"),
    ];
    let mut doc = Document::new(
        "spectrum",
        columns.iter().map(|(k, h)| Column::new(k, h)).collect(),
    );
    doc.meta("model", args.model.name());
    system_meta(&mut doc, &sys);
    doc.meta("b_cm1", spectrum.b);
    for (line, gap) in spectrum.lines.iter().zip(&spectrum.spacings) {
        let t = line.terms;
        doc.push(vec![
            Cell::Int(line.l_lower),
            Cell::Num(line.nu_bar),
            Cell::Num(t.t1),
            Cell::Num(t.t2),
            Cell::Num(t.t3),
            Cell::Num(t.t4),
            Cell::Num(t.t5),
            Cell::Num(gap.delta),
            Cell::Num(gap.deviation),
        ]);
    }
    Ok(doc)
}

pub fn cmd_constants(db: &MoleculeDb, args: &ConstantsArgs) -> Result<Document, CliError> {
    let sys = db.resolve_system(&args.system)?;
    let d = sys.derived();
    let ls: Vec<u64> = match args.lmax {
        Some(n) => (0..=n).collect(),
        None => vec![args.l],
    };

    let columns = [
        ("l", "l"),
        ("epsilon_j", "epsilon [eV]"),
        ("mu_kg", "mu [kg]"),
        ("m_total_kg", "M [kg]"),
        ("inertia_kg_m2", "I [kg m^2]"),
        ("chi", "chi"),
        ("b_cm1", "B [cm^-1]"),
        ("b_l_cm1", "B_l [cm^-1]"),
        ("b_rel_cm1", "B_Rel [cm^-1]"),
        ("b_textbook_cm1", "B_textbook [cm^-1]"),
        ("b_j", "B [J]"),
        ("b_ev", "B [eV]"),
        ("b_rel_j", "B_Rel [J]"),
        ("b_rel_ev", "B_Rel [eV]"),
    ];
    let mut doc = Document::new(
        "constants",
        columns.iter().map(|(k, h)| Column::new(k, h)).collect(),
    );
    system_meta(&mut doc, &sys);
    doc.meta("a_tilde", d.a_tilde);
    doc.meta("a_tilde0", d.a_tilde0);
    for l in ls {
        let c = lines::rotational_constants(&sys, l)?;
        let (b_j, b_rel_j) = (c.b * HC_PER_CM, c.b_rel * HC_PER_CM);
        doc.push(vec![
            Cell::Int(l),
            Cell::Energy(d.rest_energy),
            Cell::Num(d.reduced_mass),
            Cell::Num(d.total_mass),
            Cell::Num(d.inertia),
            Cell::Num(d.chi),
            Cell::Num(c.b),
            Cell::Num(c.b_l),
            Cell::Num(c.b_rel),
            Cell::Num(c.b_textbook),
            Cell::Num(b_j),
            Cell::Num(joule_to_ev(b_j)),
            Cell::Num(b_rel_j),
            Cell::Num(joule_to_ev(b_rel_j)),
        ]);
    }
    Ok(doc)
}

/// Read a lines file: CSV `l,nu_bar_cm1`, optional header, `#` comments.
pub fn read_lines_file(path: &Path) -> Result<Vec<(u64, f64)>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_lines(&text, &path.display().to_string())
}

pub fn parse_lines(text: &str, origin: &str) -> Result<Vec<(u64, f64)>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| CliError::usage(format!("{origin}: {e}")))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(str::is_empty) {
            continue;
        }
        if out.is_empty() && rec.get(0) == Some("l") {
            continue;
        }
        let bad = || CliError::usage(format!("{origin}:{line}: expected `l,nu_bar_cm1`"));
        if rec.len() != 2 {
            return Err(bad());
        }
        let l = rec[0].parse::<u64>().map_err(|_| bad())?;
        let nu = rec[1].parse::<f64>().map_err(|_| bad())?;
        out.push((l, nu));
    }
    Ok(out)
}

pub fn cmd_fit(db: &MoleculeDb, args: &FitArgs) -> Result<Document, CliError> {
    let (m1, m2) = match (&args.system, args.m1, args.m2) {
        (Some(spec), _, _) => db.resolve_masses(spec)?,
        (None, Some(m1), Some(m2)) => (m1 * AMU, m2 * AMU),
        _ => {
            return Err(CliError::usage(
                "give a system (iso1:iso2 or PRESET) or --m1 and --m2",
            ))
        }
    };
    let opts = FitOptions::default();
    let (result, count) = match (args.nu0, &args.lines_file) {
        (Some(nu0), _) => {
            if !(nu0.is_finite() && nu0 > 0.0) {
                return Err(CliError::usage(format!(
                    "--nu0 must be positive, got {nu0}"
                )));
            }
            (
                fit::fit_bond_length_first_line(m1, m2, nu0, args.model, opts)?,
                1,
            )
        }
        (None, Some(path)) => {
            let obs = read_lines_file(path)?;
            if obs.iter().any(|&(_, nu)| !(nu.is_finite() && nu > 0.0)) {
                return Err(CliError::usage("line wavenumbers must be positive"));
            }
            let n = obs.len() as u64;
            (
                fit::fit_bond_length_multi_line(m1, m2, &obs, args.model, opts)?,
                n,
            )
        }
        (None, None) => return Err(CliError::usage("give --nu0 or --lines-file")),
    };

    let columns = [
        ("model", "model"),
        ("a_angstrom", "a [Å]"),
        ("a_m", "a [m]"),
        ("inertia_kg_m2", "I [kg m^2]"),
        ("residual_cm1", "residual [cm^-1]"),
        ("iterations", "iterations"),
    ];
    let mut doc = Document::new(
        "fit",
        columns.iter().map(|(k, h)| Column::new(k, h)).collect(),
    );
    doc.meta("m1_kg", m1);
    doc.meta("m2_kg", m2);
    doc.meta("observations", Cell::Int(count));
    doc.push(vec![
        Cell::Text(result.model.name().into()),
        Cell::Num(result.a / ANGSTROM),
        Cell::Num(result.a),
        Cell::Num(result.inertia),
        Cell::Num(result.residual),
        Cell::Int(result.iterations as u64),
    ]);
    Ok(doc)
}

pub fn cmd_compare(db: &MoleculeDb, args: &CompareArgs) -> Result<Document, CliError> {
    let sys = db.resolve_system(&args.system)?;
    let eps = sys.rest_energy();
    const NAMES: [&str; 5] = [
        "nr_weighted",
        "nr_textbook",
        "taylor1",
        "taylor2",
        "kg_exact",
    ];

    let mut columns = vec![Column::new("l", "l")];
    let kind = if args.absolute { "w" } else { "excitation" };
    for n in NAMES {
        columns.push(Column::new(
            &format!("{kind}_{n}_j"),
            &format!("{kind} {n} [eV]"),
        ));
    }
    for n in &NAMES[..4] {
        columns.push(Column::new(&format!("rel_{n}"), &format!("rel {n}")));
    }
    for n in NAMES {
        columns.push(Column::new(
            &format!("nu_{n}_cm1"),
            &format!("nu {n} [cm^-1]"),
        ));
    }
    let mut doc = Document::new("compare", columns);
    system_meta(&mut doc, &sys);
    doc.meta("epsilon_j", Cell::Energy(eps));

    let excitations = |l: u64| -> Result<[f64; 5], Error> {
        Ok([
            energy::level_nonrel(&sys, l, NrForm::MassWeighted)?,
            energy::level_nonrel(&sys, l, NrForm::Textbook)?,
            energy::level_taylor(&sys, l, TaylorOrder::First)?.excitation,
            energy::level_taylor(&sys, l, TaylorOrder::Second)?.excitation,
            energy::level_closed_form(&sys, l)?.excitation,
        ])
    };
    let b_tb = lines::rotational_constant_textbook(&sys);

    let mut lower = excitations(0)?;
    for l in 0..=args.lmax {
        let upper = excitations(l + 1)?;
        let mut row = vec![Cell::Int(l)];
        row.extend(
            lower
                .iter()
                .map(|&e| Cell::Energy(if args.absolute { eps + e } else { e })),
        );
        let reference = lower[4];
        row.extend(lower[..4].iter().map(|&e| {
            Cell::Num(if reference == 0.0 {
                0.0
            } else {
                (e - reference) / reference
            })
        }));

        let n1 = l as f64 + 1.0;
        let nus = [
            lines::line(&sys, l, ModelKind::NonRelativistic)?.nu_bar,
            2.0 * n1 * b_tb,
            wavenumber_from_energy(upper[2] - lower[2]),
            lines::line_wavenumber_full(&sys, l)?.nu_bar,
            wavenumber_from_energy(upper[4] - lower[4]),
        ];
        row.extend(nus.iter().map(|&v| Cell::Num(v)));
        doc.push(row);
        lower = upper;
    }
    Ok(doc)
}
