//! Reference tables shipped with the crate.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::ExactCount;

const TABLE1_CSV: &str = include_str!("../data/table1.csv");
const TABLE2_CSV: &str = include_str!("../data/table2.csv");

/// Environment variable naming a directory with `table1.csv` and
/// `table2.csv`.
pub const REF_DATA_ENV: &str = "KUNZLAB_REF_DATA";

#[derive(Deserialize)]
struct Row1 {
    ell: usize,
    count: String,
}

#[derive(Deserialize)]
struct Row2 {
    f: u64,
    m: usize,
    count: String,
}

/// Stressed depth-3 counts by length, and `(f, m)` counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceData {
    stressed3: BTreeMap<usize, ExactCount>,
    fm: BTreeMap<(usize, u64), ExactCount>,
}

fn parse_count(s: &str, table: &str) -> Result<ExactCount> {
    s.parse()
        .map_err(|_| Error::RefData(format!("{table}: bad count {s:?}")))
}

impl ReferenceData {
    pub fn embedded() -> Self {
        Self::parse(TABLE1_CSV, TABLE2_CSV).expect("embedded reference data is valid")
    }

    pub fn parse(table1: &str, table2: &str) -> Result<Self> {
        let csv_err = |name: &str, e: csv::Error| Error::RefData(format!("{name}: {e}"));
        let mut stressed3 = BTreeMap::new();
        for row in csv::Reader::from_reader(table1.as_bytes()).deserialize::<Row1>() {
            let row = row.map_err(|e| csv_err("table1.csv", e))?;
            stressed3.insert(row.ell, parse_count(&row.count, "table1.csv")?);
        }
        let mut fm = BTreeMap::new();
        for row in csv::Reader::from_reader(table2.as_bytes()).deserialize::<Row2>() {
            let row = row.map_err(|e| csv_err("table2.csv", e))?;
            fm.insert((row.m, row.f), parse_count(&row.count, "table2.csv")?);
        }
        Ok(ReferenceData { stressed3, fm })
    }

    pub fn load_dir(dir: &Path) -> Result<Self> {
        let read = |name: &str| {
            std::fs::read_to_string(dir.join(name))
                .map_err(|e| Error::RefData(format!("{}: {e}", dir.join(name).display())))
        };
        Self::parse(&read("table1.csv")?, &read("table2.csv")?)
    }

    /// Environment override, then `dir`, then the embedded copy.
    pub fn resolve(dir: Option<&Path>) -> Result<Self> {
        if let Ok(env_dir) = std::env::var(REF_DATA_ENV) {
            return Self::load_dir(Path::new(&env_dir));
        }
        match dir {
            Some(d) => Self::load_dir(d),
            None => Ok(Self::embedded()),
        }
    }

    pub fn stressed3(&self, ell: usize) -> Option<&ExactCount> {
        self.stressed3.get(&ell)
    }

    pub fn stressed3_rows(&self) -> impl Iterator<Item = (usize, &ExactCount)> {
        self.stressed3.iter().map(|(&l, c)| (l, c))
    }

    pub fn max_stressed3_len(&self) -> usize {
        self.stressed3.keys().next_back().copied().unwrap_or(0)
    }

    pub fn fm(&self, f: u64, m: usize) -> Option<&ExactCount> {
        self.fm.get(&(m, f))
    }

    /// `(f, m, count)` ordered by `m`, then `f`.
    pub fn fm_rows(&self) -> impl Iterator<Item = (u64, usize, &ExactCount)> {
        self.fm.iter().map(|(&(m, f), c)| (f, m, c))
    }
}
