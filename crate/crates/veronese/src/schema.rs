//! On-disk formats: JSON documents and CSV tables.
//!
//! Entries are always sorted by weight in descending lexicographic order, so
//! equal inputs give byte-identical files.

use std::io::Write;

use serde::{Deserialize, Serialize};
use veronese_core::weights::n_d;
use veronese_core::window::Residue;
use veronese_core::{DominantWeight, ExtTable, VirtualCharacter, WeightWindow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueDoc {
    pub j: u32,
    pub d: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowDoc {
    pub lambda1_max: i64,
    pub lambdan_min: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<ResidueDoc>,
}

impl From<&WeightWindow> for WindowDoc {
    fn from(w: &WeightWindow) -> Self {
        Self {
            lambda1_max: w.lambda1_max,
            lambdan_min: w.lambdan_min,
            residue: w.residue.map(|r| ResidueDoc { j: r.j, d: r.d }),
        }
    }
}

impl WindowDoc {
    pub fn to_window(&self, n: usize) -> veronese_core::Result<WeightWindow> {
        let mut w = if self.lambda1_max < self.lambdan_min {
            let mut w = WeightWindow::empty(n);
            w.lambda1_max = self.lambda1_max;
            w.lambdan_min = self.lambdan_min;
            w
        } else {
            WeightWindow::new(n, self.lambda1_max, self.lambdan_min)?
        };
        w.residue = self.residue.as_ref().map(|r| Residue { j: r.j, d: r.d });
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub lambda: Vec<i64>,
    pub mult: i64,
}

/// A windowed multiplicity table: a character of `D_j` or `E`, or one of the
/// intermediate multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub kind: String,
    pub n: usize,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    pub window: WindowDoc,
    pub entries: Vec<Entry>,
}

impl TableDoc {
    pub fn new(kind: &str, d: u32, j: Option<u32>, window: &WeightWindow, c: &VirtualCharacter) -> Self {
        Self {
            kind: kind.to_owned(),
            n: c.n(),
            d,
            j,
            window: window.into(),
            entries: c
                .iter_desc()
                .map(|(l, m)| Entry {
                    lambda: l.parts().to_vec(),
                    mult: m,
                })
                .collect(),
        }
    }

    pub fn to_character(&self) -> veronese_core::Result<VirtualCharacter> {
        let mut c = VirtualCharacter::windowed(self.window.to_window(self.n)?);
        for e in &self.entries {
            c.add(DominantWeight::new(e.lambda.clone())?, e.mult)?;
        }
        Ok(c)
    }

    pub fn write_json(&self, out: &mut impl Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        out.write_all(b"\n")
    }

    /// Columns `lambda_1, ..., lambda_n, mult`, rows in the JSON order.
    pub fn write_csv(&self, out: &mut impl Write) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<String> = (1..=self.n).map(|i| format!("lambda_{i}")).collect();
        header.push("mult".into());
        w.write_record(&header)?;
        for e in &self.entries {
            let mut row: Vec<String> = e.lambda.iter().map(i64::to_string).collect();
            row.push(e.mult.to_string());
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtEntry {
    /// Cohomological index `n_d + j`.
    pub index: i64,
    pub j: usize,
    pub lambda: Vec<i64>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtDoc {
    pub kind: String,
    pub n: usize,
    pub d: u32,
    pub mu: Vec<i64>,
    pub n_d: i64,
    pub window: WindowDoc,
    pub entries: Vec<ExtEntry>,
}

impl ExtDoc {
    pub fn new(t: &ExtTable) -> veronese_core::Result<Self> {
        let mut entries = Vec::with_capacity(t.entries().len());
        for ((j, l), &m) in t.entries() {
            entries.push(ExtEntry {
                index: t.index(*j)?,
                j: *j,
                lambda: l.parts().to_vec(),
                mult: m,
            });
        }
        entries.sort_by(|a, b| a.j.cmp(&b.j).then_with(|| b.lambda.cmp(&a.lambda)));
        Ok(Self {
            kind: "ext".into(),
            n: t.n(),
            d: t.d(),
            mu: t.mu().parts().to_vec(),
            n_d: n_d(t.n(), t.d())?,
            window: t.window().into(),
            entries,
        })
    }

    pub fn write_json(&self, out: &mut impl Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        out.write_all(b"\n")
    }

    /// Columns `index, j, lambda_1, ..., lambda_n, mult`.
    pub fn write_csv(&self, out: &mut impl Write) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["index".to_string(), "j".to_string()];
        header.extend((1..=self.n).map(|i| format!("lambda_{i}")));
        header.push("mult".into());
        w.write_record(&header)?;
        for e in &self.entries {
            let mut row = vec![e.index.to_string(), e.j.to_string()];
            row.extend(e.lambda.iter().map(i64::to_string));
            row.push(e.mult.to_string());
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}
