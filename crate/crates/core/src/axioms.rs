//! Axiom validation for raw hyperring tables.
//!
//! Each axiom is checked over all triples in lexicographic order and the
//! first failing triple is kept as the witness, so reports are reproducible.

use serde::Serialize;

use crate::element_set::{Elem, ElementSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Unvalidated operation tables, as read from disk or produced by a
/// construction.
#[derive(Clone, Debug)]
pub struct RawTables {
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Vec<Elem>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeCommutativity,
    MultiplicativeAssociativity,
    Distributivity,
    SignRule,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::AdditiveIdentity,
        Axiom::AdditiveCommutativity,
        Axiom::AdditiveAssociativity,
        Axiom::AdditiveInverse,
        Axiom::MultiplicativeCommutativity,
        Axiom::MultiplicativeAssociativity,
        Axiom::Distributivity,
        Axiom::SignRule,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Lexicographically first failing tuple, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Elem>>,
    /// Set when the axiom could not be evaluated because a prerequisite failed.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomFlags {
    pub is_hyperring: bool,
    pub strongly_distributive: bool,
    pub has_identity: bool,
    pub has_scalar_identity: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub order: usize,
    pub checks: Vec<AxiomCheck>,
    pub flags: AxiomFlags,
    /// First triple where `a∘(b+c) ≠ a∘b + a∘c`, when the ring is not strongly distributive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_distributivity_witness: Option<[Elem; 3]>,
    /// All `e` with `a ∈ a∘e` for every `a`.
    pub identities: Vec<Elem>,
    /// All `e` with `a∘e = {a}` for every `a`.
    pub scalar_identities: Vec<Elem>,
}

impl AxiomReport {
    pub fn is_hyperring(&self) -> bool {
        self.flags.is_hyperring
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| match &c.witness {
                Some(w) => format!("{:?} at {:?}", c.axiom, w),
                None => format!("{:?} (not evaluated)", c.axiom),
            })
            .collect();
        if failed.is_empty() {
            "all axioms hold".to_string()
        } else {
            failed.join("; ")
        }
    }
}

/// Tables after the well-formedness checks, in flat row-major layout.
pub(crate) struct Tables {
    pub n: usize,
    pub add: Vec<Elem>,
    pub mul: Vec<ElementSet>,
}

impl Tables {
    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.n + b]
    }

    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> ElementSet {
        self.mul[a * self.n + b]
    }

    fn set_mul_elem(&self, s: ElementSet, a: Elem) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, v| acc.union(self.mul(v, a)))
    }

    fn sum(&self, s: ElementSet, t: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for a in s.iter() {
            for b in t.iter() {
                out.insert(self.add(a, b));
            }
        }
        out
    }
}

pub(crate) fn check_well_formed(raw: &RawTables) -> Result<Tables> {
    let n = raw.add.len();
    if n < 2 {
        return Err(Error::MalformedTables(format!(
            "order must be at least 2, got {n}"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: MAX_ORDER,
        });
    }
    if raw.mul.len() != n {
        return Err(Error::MalformedTables(format!(
            "mul has {} rows, expected {n}",
            raw.mul.len()
        )));
    }
    let mut add = Vec::with_capacity(n * n);
    for (a, row) in raw.add.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTables(format!(
                "add row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (b, &c) in row.iter().enumerate() {
            if c >= n {
                return Err(Error::MalformedTables(format!(
                    "add[{a}][{b}] = {c} is out of range"
                )));
            }
            add.push(c);
        }
    }
    let mut mul = Vec::with_capacity(n * n);
    for (a, row) in raw.mul.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTables(format!(
                "mul row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (b, entry) in row.iter().enumerate() {
            if entry.is_empty() {
                return Err(Error::MalformedTables(format!("mul[{a}][{b}] is empty")));
            }
            let mut set = ElementSet::EMPTY;
            for &c in entry {
                if c >= n {
                    return Err(Error::MalformedTables(format!(
                        "mul[{a}][{b}] contains out-of-range member {c}"
                    )));
                }
                if !set.insert(c) {
                    return Err(Error::MalformedTables(format!(
                        "mul[{a}][{b}] lists member {c} twice"
                    )));
                }
            }
            mul.push(set);
        }
    }
    Ok(Tables { n, add, mul })
}

/// Check every axiom of a commutative multiplicative hyperring.
///
/// Dimension and range problems are reported as
/// [`Error::MalformedTables`]; axiom violations are reported inside the
/// returned [`AxiomReport`].
pub fn validate_axioms(raw: &RawTables) -> Result<AxiomReport> {
    let tables = check_well_formed(raw)?;
    Ok(validate_tables(&tables))
}

fn first_pair(n: usize, mut bad: impl FnMut(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            if bad(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn first_triple(n: usize, mut bad: impl FnMut(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

fn outcome(axiom: Axiom, witness: Option<Vec<Elem>>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
        skipped: false,
    }
}

fn skipped(axiom: Axiom) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: false,
        witness: None,
        skipped: true,
    }
}

pub(crate) fn validate_tables(t: &Tables) -> AxiomReport {
    let n = t.n;
    let mut checks = Vec::with_capacity(Axiom::ALL.len());

    checks.push(outcome(
        Axiom::AdditiveIdentity,
        (0..n)
            .find(|&a| t.add(0, a) != a || t.add(a, 0) != a)
            .map(|a| vec![a]),
    ));
    checks.push(outcome(
        Axiom::AdditiveCommutativity,
        first_pair(n, |a, b| t.add(a, b) != t.add(b, a)),
    ));
    checks.push(outcome(
        Axiom::AdditiveAssociativity,
        first_triple(n, |a, b, c| t.add(t.add(a, b), c) != t.add(a, t.add(b, c))),
    ));
    let neg: Vec<Option<Elem>> = (0..n)
        .map(|a| (0..n).find(|&b| t.add(a, b) == 0 && t.add(b, a) == 0))
        .collect();
    checks.push(outcome(
        Axiom::AdditiveInverse,
        neg.iter().position(Option::is_none).map(|a| vec![a]),
    ));
    checks.push(outcome(
        Axiom::MultiplicativeCommutativity,
        first_pair(n, |a, b| t.mul(a, b) != t.mul(b, a)),
    ));
    checks.push(outcome(
        Axiom::MultiplicativeAssociativity,
        first_triple(n, |a, b, c| {
            let left = t
                .mul(b, c)
                .iter()
                .fold(ElementSet::EMPTY, |acc, v| acc.union(t.mul(a, v)));
            let right = t.set_mul_elem(t.mul(a, b), c);
            left != right
        }),
    ));

    let distributive = first_triple(n, |a, b, c| {
        let bc = t.add(b, c);
        !t.mul(a, bc).is_subset(t.sum(t.mul(a, b), t.mul(a, c)))
            || !t.mul(bc, a).is_subset(t.sum(t.mul(b, a), t.mul(c, a)))
    });
    let strong_witness = if distributive.is_none() {
        first_triple(n, |a, b, c| {
            t.mul(a, t.add(b, c)) != t.sum(t.mul(a, b), t.mul(a, c))
        })
        .map(|w| [w[0], w[1], w[2]])
    } else {
        None
    };
    let distributive_passed = distributive.is_none();
    checks.push(outcome(Axiom::Distributivity, distributive));

    if neg.iter().all(Option::is_some) {
        let neg: Vec<Elem> = neg.iter().map(|x| x.unwrap()).collect();
        let neg_set = |s: ElementSet| s.iter().map(|x| neg[x]).collect::<ElementSet>();
        checks.push(outcome(
            Axiom::SignRule,
            first_pair(n, |a, b| {
                let target = neg_set(t.mul(a, b));
                t.mul(a, neg[b]) != target || t.mul(neg[a], b) != target
            }),
        ));
    } else {
        checks.push(skipped(Axiom::SignRule));
    }

    let is_hyperring = checks.iter().all(|c| c.passed);
    let identities: Vec<Elem> = (0..n)
        .filter(|&e| (0..n).all(|a| t.mul(a, e).contains(a)))
        .collect();
    let scalar_identities: Vec<Elem> = (0..n)
        .filter(|&e| (0..n).all(|a| t.mul(a, e) == ElementSet::singleton(a)))
        .collect();

    AxiomReport {
        order: n,
        flags: AxiomFlags {
            is_hyperring,
            strongly_distributive: is_hyperring && distributive_passed && strong_witness.is_none(),
            has_identity: !identities.is_empty(),
            has_scalar_identity: !scalar_identities.is_empty(),
        },
        checks,
        strong_distributivity_witness: strong_witness,
        identities,
        scalar_identities,
    }
}
