//! Finite commutative multiplicative hyperrings.
//!
//! A [`FiniteHyperring`] has carrier `{0, .., n-1}` with `0` the additive
//! zero, a single-valued commutative group addition and a set-valued
//! multiplication. Instances are only built through axiom validation and are
//! immutable afterwards; derived data (power profiles, product classes,
//! hyperideal lists) is computed lazily and cached write-once.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::axioms::{check_well_formed, validate_tables, AxiomFlags, AxiomReport, RawTables};
use crate::element_set::{Elem, ElementSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::ideal::ProductClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Table,
    ZxMod,
    Product,
    Quotient,
}

/// Provenance of a hyperring, mirrored in the JSON `meta` object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingMeta {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, rename = "X", skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<i64>>,
}

impl RingMeta {
    pub fn table() -> Self {
        RingMeta {
            family: Family::Table,
            m: None,
            x: None,
        }
    }

    /// True for residue hyperrings built from a multiplier set with at least
    /// two distinct integers, the setting in which `ℤ_X` is a proper
    /// multiplicative hyperring rather than a rescaled ring.
    pub fn is_proper_zx(&self) -> bool {
        self.family == Family::ZxMod && self.x.as_ref().is_some_and(|x| x.len() >= 2)
    }
}

/// The eventually periodic sequence `a^1, a^2, ...` of hyperpowers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerProfile {
    pub base: Elem,
    /// `sequence[k-1] = a^k` for `1 <= k < tail + period`.
    pub sequence: Vec<ElementSet>,
    /// First exponent of the cycle.
    pub tail: usize,
    pub period: usize,
}

impl PowerProfile {
    /// `a^k` for any `k >= 1`, using the periodic extension past the stored prefix.
    pub fn get(&self, k: usize) -> ElementSet {
        assert!(k >= 1, "powers start at 1");
        let k = if k < self.tail + self.period {
            k
        } else {
            self.tail + (k - self.tail) % self.period
        };
        self.sequence[k - 1]
    }

    /// Exponents `1..tail+period` cover every distinct power.
    pub fn bound(&self) -> usize {
        self.tail + self.period
    }

    /// Whether `a^k ⊆ target` for some `k >= 1`.
    pub fn some_power_within(&self, target: ElementSet) -> bool {
        self.sequence.iter().any(|p| p.is_subset(target))
    }

    /// Whether `0 ∈ a^k` for some `k >= 1`.
    pub fn reaches_zero(&self) -> bool {
        self.sequence.iter().any(|p| p.contains(0))
    }
}

pub struct FiniteHyperring {
    name: String,
    n: usize,
    add: Vec<Elem>,
    neg: Vec<Elem>,
    mul: Vec<ElementSet>,
    report: AxiomReport,
    meta: RingMeta,
    components: Option<(Arc<FiniteHyperring>, Arc<FiniteHyperring>)>,
    /// `absorb[a] = G∘a`.
    absorb: Vec<ElementSet>,
    powers: OnceLock<Vec<PowerProfile>>,
    classes: OnceLock<ProductClass>,
    pub(crate) ideals: OnceLock<Vec<ElementSet>>,
}

impl Clone for FiniteHyperring {
    fn clone(&self) -> Self {
        FiniteHyperring {
            name: self.name.clone(),
            n: self.n,
            add: self.add.clone(),
            neg: self.neg.clone(),
            mul: self.mul.clone(),
            report: self.report.clone(),
            meta: self.meta.clone(),
            components: self.components.clone(),
            absorb: self.absorb.clone(),
            powers: self.powers.clone(),
            classes: self.classes.clone(),
            ideals: self.ideals.clone(),
        }
    }
}

impl PartialEq for FiniteHyperring {
    /// Tables only; names and provenance are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteHyperring {}

impl fmt::Debug for FiniteHyperring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteHyperring")
            .field("name", &self.name)
            .field("order", &self.n)
            .field("flags", &self.report.flags)
            .finish_non_exhaustive()
    }
}

impl FiniteHyperring {
    /// Validate `raw` and build the hyperring, failing with
    /// [`Error::AxiomFailure`] when the tables are well formed but violate an axiom.
    pub fn new(name: impl Into<String>, raw: &RawTables, meta: RingMeta) -> Result<Self> {
        let tables = check_well_formed(raw)?;
        let report = validate_tables(&tables);
        if !report.is_hyperring() {
            return Err(Error::AxiomFailure(Box::new(report)));
        }
        let n = tables.n;
        let neg = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| tables.add[a * n + b] == 0)
                    .expect("validated group")
            })
            .collect();
        let absorb = (0..n)
            .map(|a| (0..n).fold(ElementSet::EMPTY, |acc, r| acc.union(tables.mul[r * n + a])))
            .collect();
        Ok(FiniteHyperring {
            name: name.into(),
            n,
            add: tables.add,
            neg,
            mul: tables.mul,
            report,
            meta,
            components: None,
            absorb,
            powers: OnceLock::new(),
            classes: OnceLock::new(),
            ideals: OnceLock::new(),
        })
    }

    /// Convenience constructor from nested tables.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<Vec<Elem>>,
        mul: Vec<Vec<Vec<Elem>>>,
    ) -> Result<Self> {
        Self::new(name, &RawTables { add, mul }, RingMeta::table())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn meta(&self) -> &RingMeta {
        &self.meta
    }

    pub fn flags(&self) -> AxiomFlags {
        self.report.flags
    }

    pub fn axiom_report(&self) -> &AxiomReport {
        &self.report
    }

    /// Least identity element (`a ∈ a∘e` for all `a`), if any.
    pub fn identity(&self) -> Option<Elem> {
        self.report.identities.first().copied()
    }

    pub fn identities(&self) -> &[Elem] {
        &self.report.identities
    }

    /// Least scalar identity (`a∘e = {a}` for all `a`), if any.
    pub fn scalar_identity(&self) -> Option<Elem> {
        self.report.scalar_identities.first().copied()
    }

    /// Factors of a [`product_ring`] instance.
    pub fn components(&self) -> Option<(&Arc<FiniteHyperring>, &Arc<FiniteHyperring>)> {
        self.components.as_ref().map(|(a, b)| (a, b))
    }

    pub fn check_elem(&self, a: Elem) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                elem: a,
                order: self.n,
            })
        }
    }

    pub fn check_set(&self, s: ElementSet) -> Result<()> {
        match s.difference(self.carrier()).min() {
            None => Ok(()),
            Some(a) => Err(Error::ElementOutOfRange {
                elem: a,
                order: self.n,
            }),
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b])
    }

    /// The hyperproduct `a∘b`.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> ElementSet {
        self.mul[a * self.n + b]
    }

    /// `G∘a`, the union of `r∘a` over the carrier.
    #[inline]
    pub fn absorb(&self, a: Elem) -> ElementSet {
        self.absorb[a]
    }

    /// `S∘a`.
    pub fn set_mul_elem(&self, s: ElementSet, a: Elem) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, v| acc.union(self.mul(v, a)))
    }

    /// `S∘T`, empty when either side is empty.
    pub fn set_mul(&self, s: ElementSet, t: ElementSet) -> ElementSet {
        t.iter().fold(ElementSet::EMPTY, |acc, b| {
            acc.union(self.set_mul_elem(s, b))
        })
    }

    /// `S∘T = ∪ s∘t`, rejecting empty operands.
    pub fn hyper_product(&self, s: ElementSet, t: ElementSet) -> Result<ElementSet> {
        if s.is_empty() || t.is_empty() {
            return Err(Error::EmptyOperand);
        }
        self.check_set(s)?;
        self.check_set(t)?;
        Ok(self.set_mul(s, t))
    }

    /// Minkowski sum `S + T`.
    pub fn sum(&self, s: ElementSet, t: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for a in s.iter() {
            let row = &self.add[a * self.n..(a + 1) * self.n];
            for b in t.iter() {
                out.insert(row[b]);
            }
        }
        out
    }

    pub fn neg_set(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|a| self.neg[a]).collect()
    }

    /// `a^k` computed from scratch as `a^{k-1}∘a`.
    pub fn power(&self, a: Elem, k: usize) -> Result<ElementSet> {
        self.check_elem(a)?;
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut p = ElementSet::singleton(a);
        for _ in 1..k {
            p = self.set_mul_elem(p, a);
        }
        Ok(p)
    }

    /// Cached power profile of `a`.
    pub fn power_profile(&self, a: Elem) -> &PowerProfile {
        &self.power_profiles()[a]
    }

    pub fn power_profiles(&self) -> &[PowerProfile] {
        self.powers.get_or_init(|| {
            (0..self.n)
                .map(|a| compute_power_profile(self, a))
                .collect()
        })
    }

    /// `a^k` through the cached profile.
    #[inline]
    pub fn pow(&self, a: Elem, k: usize) -> ElementSet {
        self.power_profile(a).get(k)
    }

    /// `max_a (tail_a + period_a)`: every distinct power of every element
    /// occurs at an exponent below this bound.
    pub fn power_bound(&self) -> usize {
        self.power_profiles()
            .iter()
            .map(PowerProfile::bound)
            .max()
            .unwrap_or(1)
    }

    /// `max_a tail_a`: exponents at or past this bound lie on every element's cycle.
    pub fn max_tail(&self) -> usize {
        self.power_profiles()
            .iter()
            .map(|p| p.tail)
            .max()
            .unwrap_or(1)
    }

    pub(crate) fn product_class(&self) -> &ProductClass {
        self.classes.get_or_init(|| ProductClass::compute(self))
    }

    /// Tables in nested form, for serialization and derived constructions.
    pub fn raw_tables(&self) -> RawTables {
        let n = self.n;
        RawTables {
            add: (0..n)
                .map(|a| (0..n).map(|b| self.add(a, b)).collect())
                .collect(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b).to_vec()).collect())
                .collect(),
        }
    }
}

/// Power profile of `a`: iterate `S ↦ S∘a` from `{a}` until a set repeats.
pub fn power_profile(h: &FiniteHyperring, a: Elem) -> Result<PowerProfile> {
    h.check_elem(a)?;
    Ok(h.power_profile(a).clone())
}

fn compute_power_profile(h: &FiniteHyperring, a: Elem) -> PowerProfile {
    let mut seen: HashMap<ElementSet, usize> = HashMap::new();
    let mut sequence = Vec::new();
    let mut current = ElementSet::singleton(a);
    let mut k = 1;
    loop {
        if let Some(&first) = seen.get(&current) {
            return PowerProfile {
                base: a,
                sequence,
                tail: first,
                period: k - first,
            };
        }
        seen.insert(current, k);
        sequence.push(current);
        current = h.set_mul_elem(current, a);
        k += 1;
    }
}

fn reduce(v: i128, m: u64) -> usize {
    v.rem_euclid(m as i128) as usize
}

/// The residue hyperring `ℤ_m` with `a∘b = {a·x·b mod m : x ∈ X}`.
///
/// Multipliers are kept as given in the metadata; `X` with a single member
/// is accepted (it yields a rescaled ring) and is distinguishable through
/// [`RingMeta::is_proper_zx`].
pub fn make_zx_mod(m: u64, xs: &[i64]) -> Result<FiniteHyperring> {
    if m < 2 {
        return Err(Error::MalformedTables(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    if m as usize > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: m as usize,
            bound: MAX_ORDER,
        });
    }
    if xs.is_empty() {
        return Err(Error::MalformedTables("multiplier set X is empty".into()));
    }
    let mut x: Vec<i64> = xs.to_vec();
    x.sort_unstable();
    x.dedup();
    let n = m as usize;
    let add = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let set: ElementSet = x
                        .iter()
                        .map(|&t| reduce(a as i128 * t as i128 * b as i128, m))
                        .collect();
                    set.to_vec()
                })
                .collect()
        })
        .collect();
    let label = x.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let meta = RingMeta {
        family: Family::ZxMod,
        m: Some(m),
        x: Some(x),
    };
    FiniteHyperring::new(
        format!("Z{m}[X={{{label}}}]"),
        &RawTables { add, mul },
        meta,
    )
}

/// Cartesian product with componentwise operations; `(x1, x2)` has index
/// `x1 * order(h2) + x2`.
pub fn product_ring(
    h1: &Arc<FiniteHyperring>,
    h2: &Arc<FiniteHyperring>,
) -> Result<FiniteHyperring> {
    let (n1, n2) = (h1.order(), h2.order());
    let n = n1 * n2;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: MAX_ORDER,
        });
    }
    let idx = |a: Elem, b: Elem| a * n2 + b;
    let split = |p: Elem| (p / n2, p % n2);
    let add = (0..n)
        .map(|p| {
            let (x1, x2) = split(p);
            (0..n)
                .map(|q| {
                    let (y1, y2) = split(q);
                    idx(h1.add(x1, y1), h2.add(x2, y2))
                })
                .collect()
        })
        .collect();
    let mul = (0..n)
        .map(|p| {
            let (x1, x2) = split(p);
            (0..n)
                .map(|q| {
                    let (y1, y2) = split(q);
                    let mut out = Vec::new();
                    for u in h1.mul(x1, y1).iter() {
                        for v in h2.mul(x2, y2).iter() {
                            out.push(idx(u, v));
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let meta = RingMeta {
        family: Family::Product,
        m: None,
        x: None,
    };
    let mut ring = FiniteHyperring::new(
        format!("({})x({})", h1.name(), h2.name()),
        &RawTables { add, mul },
        meta,
    )?;
    ring.components = Some((Arc::clone(h1), Arc::clone(h2)));
    Ok(ring)
}

/// Index of `(x1, x2)` in `product_ring(h1, h2)`.
pub fn pair_index(h2_order: usize, x1: Elem, x2: Elem) -> Elem {
    x1 * h2_order + x2
}

/// `A × B` as a subset of the product carrier.
pub fn product_set(h2_order: usize, a: ElementSet, b: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            out.insert(pair_index(h2_order, x, y));
        }
    }
    out
}

/// Coordinate projections of a subset of a product carrier.
pub fn project_set(h2_order: usize, s: ElementSet) -> (ElementSet, ElementSet) {
    let mut left = ElementSet::EMPTY;
    let mut right = ElementSet::EMPTY;
    for p in s.iter() {
        left.insert(p / h2_order);
        right.insert(p % h2_order);
    }
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Elem]) -> ElementSet {
        xs.iter().collect()
    }

    fn h1() -> FiniteHyperring {
        make_zx_mod(4, &[2]).unwrap()
    }

    fn h3() -> FiniteHyperring {
        make_zx_mod(4, &[1, 3]).unwrap()
    }

    #[test]
    fn h1_flags() {
        let f = h1().flags();
        assert!(f.is_hyperring);
        assert!(f.strongly_distributive);
        assert!(!f.has_identity);
    }

    #[test]
    fn h3_flags() {
        let h = h3();
        assert!(h.flags().is_hyperring);
        assert_eq!(h.identity(), Some(1));
        assert!(!h.flags().has_scalar_identity);
    }

    #[test]
    fn corrupted_h1_fails_with_witness() {
        let mut raw = h1().raw_tables();
        raw.mul[1][1] = vec![1];
        let err = FiniteHyperring::new("bad", &raw, RingMeta::table()).unwrap_err();
        let Error::AxiomFailure(report) = err else {
            panic!("expected an axiom failure")
        };
        let first = report.first_failure().unwrap();
        assert!(first.witness.is_some());
    }

    #[test]
    fn hyper_products() {
        assert_eq!(h1().hyper_product(set(&[1]), set(&[1])).unwrap(), set(&[2]));
        assert_eq!(
            h3().hyper_product(set(&[1]), set(&[1])).unwrap(),
            set(&[1, 3])
        );
        for h in [h1(), h3()] {
            for t in 0..4 {
                assert_eq!(h.hyper_product(set(&[0]), set(&[t])).unwrap(), set(&[0]));
            }
        }
        assert!(matches!(
            h1().hyper_product(ElementSet::EMPTY, set(&[1])),
            Err(Error::EmptyOperand)
        ));
    }

    #[test]
    fn powers() {
        let h = h1();
        assert_eq!(h.power(1, 2).unwrap(), set(&[2]));
        assert_eq!(h.power(1, 3).unwrap(), set(&[0]));
        assert_eq!(h.power(3, 1).unwrap(), set(&[3]));
        assert!(matches!(h.power(1, 0), Err(Error::ZeroExponent)));
        let h = h3();
        assert_eq!(h.power(1, 2).unwrap(), set(&[1, 3]));
        assert_eq!(h.power(1, 3).unwrap(), set(&[1, 3]));
    }

    #[test]
    fn power_profiles() {
        let p = power_profile(&h1(), 1).unwrap();
        assert_eq!(p.sequence, vec![set(&[1]), set(&[2]), set(&[0])]);
        assert_eq!((p.tail, p.period), (3, 1));
        let p = power_profile(&h1(), 0).unwrap();
        assert_eq!((p.tail, p.period), (1, 1));
        let p = power_profile(&h3(), 3).unwrap();
        assert_eq!(p.sequence, vec![set(&[3]), set(&[1, 3])]);
        assert_eq!((p.tail, p.period), (2, 1));
    }

    #[test]
    fn zx_names_and_tags() {
        assert!(h3().meta().is_proper_zx());
        assert!(!h1().meta().is_proper_zx());
        let big = make_zx_mod(105, &[2, 4]).unwrap();
        assert_eq!(big.order(), 105);
        assert!(big.flags().is_hyperring);
        // 1∘(1+1) = {4, 8} but 1∘1 + 1∘1 also contains 2 + 4.
        assert!(!big.flags().strongly_distributive);
    }

    #[test]
    fn products() {
        let a = Arc::new(h1());
        let b = Arc::new(h3());
        let p = product_ring(&a, &a).unwrap();
        assert_eq!(p.order(), 16);
        assert_eq!(p.add(0, 0), 0);
        let p = product_ring(&a, &b).unwrap();
        let one_one = pair_index(4, 1, 1);
        assert_eq!(
            p.mul(one_one, one_one),
            set(&[pair_index(4, 2, 1), pair_index(4, 2, 3)])
        );
        assert!(p.flags().is_hyperring);
    }

    #[test]
    fn order_one_rejected() {
        let err =
            FiniteHyperring::from_tables("z", vec![vec![0]], vec![vec![vec![0]]]).unwrap_err();
        assert!(matches!(err, Error::MalformedTables(_)));
    }
}
