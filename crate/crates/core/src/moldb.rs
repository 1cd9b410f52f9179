//! Isotope mass tables and named molecule presets.
//!
//! Both are plain CSV:
//!
//! ```text
//! symbol,mass_amu
//! 1H,1.00782503223
//! ```
//!
//! ```text
//! name,iso1,iso2,bond_length_angstrom
//! HCl,1H,35Cl,1.2746
//! ```
//!
//! Lines starting with `#` are comments; LF and CRLF are both accepted and the
//! header row is optional.

use std::collections::HashMap;
use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::rotor::RotorSystem;
use crate::units::{AMU, ANGSTROM};

/// Environment variable naming an alternative mass table.
pub const MASS_DB_ENV: &str = "KGROTOR_MASS_DB";

const BUNDLED_MASSES: &str = include_str!("../data/masses.csv");
const BUNDLED_PRESETS: &str = include_str!("../data/presets.csv");

#[derive(Debug, Clone, PartialEq)]
pub struct IsotopeRecord {
    pub symbol: String,
    pub mass_amu: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MoleculePreset {
    pub name: String,
    pub isotope1: String,
    pub isotope2: String,
    pub bond_length_angstrom: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MassTable {
    records: Vec<IsotopeRecord>,
    index: HashMap<String, usize>,
}

impl MassTable {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_MASSES, "<bundled masses>").expect("bundled mass table is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parse CSV text; `origin` only labels error messages.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut table = MassTable::default();
        for row in rows(text, origin, 2, "symbol")? {
            let symbol = row.fields[0].clone();
            let mass_amu = row.number(1)?;
            if !mass_amu.is_finite() || mass_amu <= 0.0 {
                return Err(Error::NonPositive {
                    symbol,
                    line: row.line,
                });
            }
            table.push(IsotopeRecord { symbol, mass_amu }, row.line)?;
        }
        Ok(table)
    }

    fn push(&mut self, rec: IsotopeRecord, line: u64) -> Result<()> {
        if self.index.contains_key(&rec.symbol) {
            return Err(Error::DuplicateSymbol {
                symbol: rec.symbol,
                line,
            });
        }
        self.index.insert(rec.symbol.clone(), self.records.len());
        self.records.push(rec);
        Ok(())
    }

    pub fn get(&self, symbol: &str) -> Option<&IsotopeRecord> {
        self.index.get(symbol).map(|&i| &self.records[i])
    }

    /// Mass in kg.
    pub fn mass(&self, symbol: &str) -> Result<f64> {
        self.get(symbol)
            .map(|r| r.mass_amu * AMU)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn records(&self) -> &[IsotopeRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("symbol,mass_amu\n");
        for r in &self.records {
            let _ = writeln!(out, "{},{}", r.symbol, r.mass_amu);
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PresetTable {
    presets: Vec<MoleculePreset>,
}

impl PresetTable {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_PRESETS, "<bundled presets>").expect("bundled presets are valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut presets: Vec<MoleculePreset> = Vec::new();
        for row in rows(text, origin, 4, "name")? {
            let name = row.fields[0].clone();
            let bond = row.number(3)?;
            if !bond.is_finite() || bond <= 0.0 {
                return Err(Error::NonPositive {
                    symbol: name,
                    line: row.line,
                });
            }
            if presets.iter().any(|p| p.name == name) {
                return Err(Error::DuplicateSymbol {
                    symbol: name,
                    line: row.line,
                });
            }
            presets.push(MoleculePreset {
                name,
                isotope1: row.fields[1].clone(),
                isotope2: row.fields[2].clone(),
                bond_length_angstrom: bond,
            });
        }
        Ok(Self { presets })
    }

    pub fn get(&self, name: &str) -> Option<&MoleculePreset> {
        self.presets.iter().find(|p| p.name == name)
    }

    pub fn presets(&self) -> &[MoleculePreset] {
        &self.presets
    }
}

struct Row {
    line: u64,
    fields: Vec<String>,
    origin: String,
}

impl Row {
    fn number(&self, i: usize) -> Result<f64> {
        self.fields[i].parse::<f64>().map_err(|_| Error::Parse {
            path: self.origin.clone(),
            line: self.line,
            msg: format!("`{}` is not a number", self.fields[i]),
        })
    }
}

fn rows(text: &str, origin: &str, width: usize, header: &str) -> Result<Vec<Row>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::Parse {
            path: origin.to_string(),
            line: e.position().map_or(0, |p| p.line()),
            msg: e.to_string(),
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(str::is_empty) {
            continue;
        }
        if out.is_empty() && rec.get(0) == Some(header) {
            continue;
        }
        if rec.len() != width {
            return Err(Error::Parse {
                path: origin.to_string(),
                line,
                msg: format!("expected {width} fields, found {}", rec.len()),
            });
        }
        out.push(Row {
            line,
            fields: rec.iter().map(str::to_string).collect(),
            origin: origin.to_string(),
        });
    }
    Ok(out)
}

/// Mass table path: explicit flag, then [`MASS_DB_ENV`], then the bundled table.
pub fn mass_db_path(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(Path::to_path_buf).or_else(|| {
        env::var_os(MASS_DB_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    })
}

/// Masses and presets together, as used to resolve system strings.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeDb {
    pub masses: MassTable,
    pub presets: PresetTable,
}

impl Default for MoleculeDb {
    fn default() -> Self {
        Self {
            masses: MassTable::bundled(),
            presets: PresetTable::bundled(),
        }
    }
}

impl MoleculeDb {
    /// Bundled presets with the mass table chosen by [`mass_db_path`].
    pub fn open(flag: Option<&Path>) -> Result<Self> {
        let masses = match mass_db_path(flag) {
            Some(path) => MassTable::load(&path)?,
            None => MassTable::bundled(),
        };
        Ok(Self {
            masses,
            presets: PresetTable::bundled(),
        })
    }

    /// Resolve `iso1:iso2:a_angstrom`, `PRESET` or `PRESET:a_angstrom`.
    pub fn resolve_system(&self, spec: &str) -> Result<RotorSystem> {
        let fields = split_spec(spec);
        let (m1, m2, a) = match fields.as_slice() {
            [name] => {
                let p = self.preset(name, spec)?;
                let (m1, m2) = self.preset_masses(p)?;
                (m1, m2, p.bond_length_angstrom)
            }
            [first, second] => match (self.presets.get(first), second.parse::<f64>()) {
                (Some(p), Ok(a)) => {
                    let (m1, m2) = self.preset_masses(p)?;
                    (m1, m2, a)
                }
                _ => {
                    self.masses.mass(first)?;
                    self.masses.mass(second)?;
                    return Err(Error::MissingBondLength(spec.trim().to_string()));
                }
            },
            [iso1, iso2, a] => {
                let a = a
                    .parse::<f64>()
                    .map_err(|_| Error::MalformedSystem(spec.trim().to_string()))?;
                (self.masses.mass(iso1)?, self.masses.mass(iso2)?, a)
            }
            _ => return Err(Error::MalformedSystem(spec.trim().to_string())),
        };
        RotorSystem::new(m1, m2, a * ANGSTROM)
    }

    /// Masses (kg) from `iso1:iso2`, `iso1:iso2:a` or a preset name; any bond
    /// length is ignored.
    pub fn resolve_masses(&self, spec: &str) -> Result<(f64, f64)> {
        let fields = split_spec(spec);
        match fields.as_slice() {
            [name] | [name, _] if self.presets.get(name).is_some() => {
                self.preset_masses(self.presets.get(name).unwrap())
            }
            [iso1, iso2] | [iso1, iso2, _] => {
                Ok((self.masses.mass(iso1)?, self.masses.mass(iso2)?))
            }
            [name] => Err(Error::UnknownPreset(name.to_string())),
            _ => Err(Error::MalformedSystem(spec.trim().to_string())),
        }
    }

    fn preset(&self, name: &str, spec: &str) -> Result<&MoleculePreset> {
        if name.is_empty() {
            return Err(Error::MalformedSystem(spec.to_string()));
        }
        self.presets
            .get(name)
            .ok_or_else(|| Error::UnknownPreset(name.to_string()))
    }

    fn preset_masses(&self, p: &MoleculePreset) -> Result<(f64, f64)> {
        Ok((
            self.masses.mass(&p.isotope1)?,
            self.masses.mass(&p.isotope2)?,
        ))
    }
}

fn split_spec(spec: &str) -> Vec<&str> {
    spec.split(':').map(str::trim).collect()
}
