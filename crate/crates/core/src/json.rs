//! The hyperring JSON document:
//! `{"name", "order", "add", "mul", "meta": {"family", "m"?, "X"?}}`, where
//! `mul[a][b]` lists the members of `a∘b` in ascending order.

use serde::{Deserialize, Serialize};

use crate::axioms::RawTables;
use crate::element_set::Elem;
use crate::error::{Error, Result};
use crate::hyperring::{FiniteHyperring, RingMeta};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperringDoc {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Vec<Elem>>>,
    #[serde(default = "RingMeta::table")]
    pub meta: RingMeta,
}

impl HyperringDoc {
    pub fn from_ring(h: &FiniteHyperring) -> Self {
        let RawTables { add, mul } = h.raw_tables();
        HyperringDoc {
            name: h.name().to_string(),
            order: h.order(),
            add,
            mul,
            meta: h.meta().clone(),
        }
    }

    /// Structural checks that the table validator does not cover: the
    /// declared order and ascending member lists.
    pub fn check_shape(&self) -> Result<()> {
        if self.add.len() != self.order {
            return Err(Error::MalformedTables(format!(
                "field `add` has {} rows but `order` is {}",
                self.add.len(),
                self.order
            )));
        }
        for (a, row) in self.mul.iter().enumerate() {
            for (b, entry) in row.iter().enumerate() {
                if let Some(w) = entry.windows(2).find(|w| w[0] >= w[1]) {
                    let what = if w[0] == w[1] {
                        "duplicate member"
                    } else {
                        "members out of order"
                    };
                    return Err(Error::MalformedTables(format!(
                        "field `mul[{a}][{b}]`: {what} ({}, {})",
                        w[0], w[1]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn raw_tables(&self) -> RawTables {
        RawTables {
            add: self.add.clone(),
            mul: self.mul.clone(),
        }
    }

    pub fn into_ring(self) -> Result<FiniteHyperring> {
        self.check_shape()?;
        FiniteHyperring::new(self.name.clone(), &self.raw_tables(), self.meta)
    }
}

/// Parse a document without validating axioms.
pub fn parse_doc(text: &str) -> Result<HyperringDoc> {
    let doc: HyperringDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.check_shape()?;
    Ok(doc)
}

pub fn parse_hyperring(text: &str) -> Result<FiniteHyperring> {
    parse_doc(text)?.into_ring()
}

pub fn hyperring_to_json(h: &FiniteHyperring) -> serde_json::Value {
    serde_json::to_value(HyperringDoc::from_ring(h)).expect("plain data")
}

pub fn hyperring_to_string(h: &FiniteHyperring) -> String {
    serde_json::to_string(&HyperringDoc::from_ring(h)).expect("plain data")
}
