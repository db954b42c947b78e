//! The relation `γ*` and the fundamental ring `G/γ*`.
//!
//! `x γ y` when `x` and `y` both lie in a finite sum of finite products; `γ*`
//! is its transitive closure, computed by merging the members of every set
//! in the class `U`.

use serde::Serialize;

use crate::element_set::{Elem, ElementSet};
use crate::error::{Error, Result};
use crate::hyperring::FiniteHyperring;
use crate::ideal::{is_hyperideal, sums_class_u};
use crate::union_find::UnionFind;

/// The `γ*` classes, ordered by least member.
pub fn gamma_star_classes(h: &FiniteHyperring) -> Vec<ElementSet> {
    let mut uf = UnionFind::new(h.order());
    for a in sums_class_u(h) {
        if let Some(first) = a.min() {
            for x in a.iter() {
                uf.union(first, x);
            }
        }
    }
    uf.classes()
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

/// `(G/γ*, ⊕, ⊙)` with classes indexed by ascending least member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalRing {
    classes: Vec<ElementSet>,
    #[serde(skip)]
    class_of: Vec<usize>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    /// The representative pair used for table entry `[c][d]`.
    #[serde(skip)]
    witness: Vec<Vec<(Elem, Elem)>>,
}

impl FundamentalRing {
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x]
    }

    pub fn add(&self, c: usize, d: usize) -> usize {
        self.add[c][d]
    }

    pub fn mul(&self, c: usize, d: usize) -> usize {
        self.mul[c][d]
    }

    pub fn zero(&self) -> usize {
        self.class_of[0]
    }

    pub fn witness(&self, c: usize, d: usize) -> (Elem, Elem) {
        self.witness[c][d]
    }

    pub fn pow(&self, c: usize, k: usize) -> usize {
        assert!(k >= 1);
        (1..k).fold(c, |acc, _| self.mul[acc][c])
    }

    /// Class indices met by `s`.
    pub fn image(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|x| self.class_of[x]).collect()
    }

    /// Whether a set of class indices is an ideal of the ring.
    pub fn is_ideal(&self, q: ElementSet) -> bool {
        if !q.contains(self.zero()) {
            return false;
        }
        let k = self.order();
        q.iter().all(|a| {
            q.iter().all(|b| {
                let neg_b = (0..k).find(|&c| self.add[b][c] == self.zero()).unwrap();
                q.contains(self.add[a][neg_b])
            }) && (0..k).all(|r| q.contains(self.mul[r][a]))
        })
    }

    /// `a^s ∈ Q ⇒ a^n ∈ Q` for every class `a`, evaluated as a plain
    /// implication (no properness requirement).
    pub fn closed_witness(&self, q: ElementSet, s: usize, n: usize) -> Option<usize> {
        (0..self.order()).find(|&a| q.contains(self.pow(a, s)) && !q.contains(self.pow(a, n)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    fn check_axioms(&self) -> Result<()> {
        let k = self.order();
        let z = self.zero();
        let fail = |axiom: &'static str, witness: Vec<usize>| {
            Err(Error::FundamentalRingAxiom { axiom, witness })
        };
        for a in 0..k {
            if self.add[a][z] != a {
                return fail("additive identity", vec![a]);
            }
            if !(0..k).any(|b| self.add[a][b] == z) {
                return fail("additive inverse", vec![a]);
            }
            for b in 0..k {
                if self.add[a][b] != self.add[b][a] {
                    return fail("additive commutativity", vec![a, b]);
                }
                if self.mul[a][b] != self.mul[b][a] {
                    return fail("multiplicative commutativity", vec![a, b]);
                }
                for c in 0..k {
                    if self.add[self.add[a][b]][c] != self.add[a][self.add[b][c]] {
                        return fail("additive associativity", vec![a, b, c]);
                    }
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        return fail("multiplicative associativity", vec![a, b, c]);
                    }
                    if self.mul[a][self.add[b][c]] != self.add[self.mul[a][b]][self.mul[a][c]] {
                        return fail("distributivity", vec![a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the fundamental ring, checking that both operations are
/// independent of representatives and that the result is a commutative ring.
pub fn fundamental_ring(h: &FiniteHyperring) -> Result<FundamentalRing> {
    let classes = gamma_star_classes(h);
    let k = classes.len();
    let mut class_of = vec![0; h.order()];
    for (i, c) in classes.iter().enumerate() {
        for x in c.iter() {
            class_of[x] = i;
        }
    }
    let mut add = vec![vec![0; k]; k];
    let mut mul = vec![vec![0; k]; k];
    let mut witness = vec![vec![(0, 0); k]; k];
    for c in 0..k {
        for d in 0..k {
            let sums = h.sum(classes[c], classes[d]);
            let prods = h.set_mul(classes[c], classes[d]);
            let sum_classes: ElementSet = sums.iter().map(|x| class_of[x]).collect();
            let prod_classes: ElementSet = prods.iter().map(|x| class_of[x]).collect();
            if sum_classes.len() != 1 || prod_classes.len() != 1 {
                return Err(Error::WellDefinednessFailure { left: c, right: d });
            }
            add[c][d] = sum_classes.min().unwrap();
            mul[c][d] = prod_classes.min().unwrap();
            witness[c][d] = (classes[c].min().unwrap(), classes[d].min().unwrap());
        }
    }
    let ring = FundamentalRing {
        classes,
        class_of,
        add,
        mul,
        witness,
    };
    ring.check_axioms()?;
    Ok(ring)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferEntry {
    pub s: usize,
    pub n: usize,
    pub closed_in_ring: bool,
    pub closed_in_fundamental: bool,
}

/// `Q/γ*` together with a comparison of closedness in `G` and in `G/γ*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalIdeal {
    pub ideal: ElementSet,
    pub image: ElementSet,
    pub image_proper: bool,
    pub transfer: Vec<TransferEntry>,
}

impl FundamentalIdeal {
    /// First `(s,n)` at which the two sides disagree.
    pub fn first_disagreement(&self) -> Option<&TransferEntry> {
        self.transfer
            .iter()
            .find(|e| e.closed_in_ring != e.closed_in_fundamental)
    }

    pub fn transfer_holds(&self) -> bool {
        self.first_disagreement().is_none()
    }
}

pub fn ideal_in_fundamental(
    h: &FiniteHyperring,
    ring: &FundamentalRing,
    q: ElementSet,
    s_max: usize,
    n_max: usize,
) -> Result<FundamentalIdeal> {
    h.check_set(q)?;
    if !is_hyperideal(h, q) {
        return Err(Error::NotAHyperideal(q));
    }
    if q == h.carrier() {
        return Err(Error::ProperIdealRequired);
    }
    let image = ring.image(q);
    if !ring.is_ideal(image) {
        return Err(Error::ImageNotIdeal(q));
    }
    let mut transfer = Vec::with_capacity(s_max * n_max);
    for s in 1..=s_max {
        for n in 1..=n_max {
            transfer.push(TransferEntry {
                s,
                n,
                closed_in_ring: crate::closedness::closed_witness_unchecked(h, q, s, n).is_none(),
                closed_in_fundamental: ring.closed_witness(image, s, n).is_none(),
            });
        }
    }
    Ok(FundamentalIdeal {
        ideal: q,
        image,
        image_proper: image.len() < ring.order(),
        transfer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::make_zx_mod;

    fn set(xs: &[Elem]) -> ElementSet {
        xs.iter().collect()
    }

    #[test]
    fn classes_of_seed_rings() {
        let h1 = make_zx_mod(4, &[2]).unwrap();
        assert_eq!(gamma_star_classes(&h1).len(), 4);
        let h3 = make_zx_mod(4, &[1, 3]).unwrap();
        assert_eq!(gamma_star_classes(&h3), vec![set(&[0, 2]), set(&[1, 3])]);
    }

    #[test]
    fn fundamental_ring_tables() {
        let h1 = make_zx_mod(4, &[2]).unwrap();
        let f = fundamental_ring(&h1).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(f.mul(a, b), (2 * a * b) % 4);
            }
        }
        let h3 = make_zx_mod(4, &[1, 3]).unwrap();
        let f = fundamental_ring(&h3).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn transfer_on_h1() {
        let h1 = make_zx_mod(4, &[2]).unwrap();
        let f = fundamental_ring(&h1).unwrap();
        let fi = ideal_in_fundamental(&h1, &f, set(&[0, 2]), 6, 6).unwrap();
        assert!(fi.transfer_holds());
        let fi = ideal_in_fundamental(&h1, &f, set(&[0]), 6, 6).unwrap();
        let e = fi.transfer.iter().find(|e| e.s == 3 && e.n == 2).unwrap();
        assert!(!e.closed_in_ring && !e.closed_in_fundamental);
    }

    #[test]
    fn transfer_fails_for_unsaturated_ideal() {
        // {0} is not a union of classes in H3: 2^2 = {0} yet 2 ∉ {0}, while
        // the image of {0} is the zero class of a field with two elements.
        let h3 = make_zx_mod(4, &[1, 3]).unwrap();
        let f = fundamental_ring(&h3).unwrap();
        let fi = ideal_in_fundamental(&h3, &f, set(&[0]), 6, 6).unwrap();
        let e = fi.first_disagreement().unwrap();
        assert_eq!((e.s, e.n), (2, 1));
        assert!(!e.closed_in_ring && e.closed_in_fundamental);
        let fi = ideal_in_fundamental(&h3, &f, set(&[0, 2]), 6, 6).unwrap();
        assert!(fi.transfer_holds());
    }
}
