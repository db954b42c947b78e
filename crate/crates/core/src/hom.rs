//! Good homomorphisms and quotient hyperrings.

use std::sync::Arc;

use crate::axioms::RawTables;
use crate::element_set::{Elem, ElementSet};
use crate::error::{Error, Result};
use crate::hyperring::{Family, FiniteHyperring, RingMeta};
use crate::ideal::is_hyperideal;

/// A validated good homomorphism `ψ: source → target`.
#[derive(Clone, Debug)]
pub struct HomMap {
    source: Arc<FiniteHyperring>,
    target: Arc<FiniteHyperring>,
    map: Vec<Elem>,
}

impl HomMap {
    pub fn new(
        source: Arc<FiniteHyperring>,
        target: Arc<FiniteHyperring>,
        map: Vec<Elem>,
    ) -> Result<Self> {
        if let Some(reason) = good_hom_violation(&source, &target, &map) {
            return Err(Error::NotGoodHomomorphism(reason));
        }
        Ok(HomMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(ring: Arc<FiniteHyperring>) -> Self {
        let map = (0..ring.order()).collect();
        HomMap {
            source: Arc::clone(&ring),
            target: ring,
            map,
        }
    }

    pub fn source(&self) -> &Arc<FiniteHyperring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteHyperring> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn image(&self, s: ElementSet) -> ElementSet {
        hom_image(&self.map, s)
    }

    pub fn preimage(&self, s: ElementSet) -> ElementSet {
        hom_preimage(&self.map, s)
    }

    pub fn kernel(&self) -> ElementSet {
        self.preimage(ElementSet::singleton(0))
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.source.carrier()).len() == self.source.order()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.carrier()) == self.target.carrier()
    }
}

fn good_hom_violation(h1: &FiniteHyperring, h2: &FiniteHyperring, map: &[Elem]) -> Option<String> {
    if map.len() != h1.order() {
        return Some(format!(
            "map has {} entries for a source of order {}",
            map.len(),
            h1.order()
        ));
    }
    if let Some(x) = map.iter().position(|&y| y >= h2.order()) {
        return Some(format!("image of {x} is outside the target"));
    }
    for x in 0..h1.order() {
        for y in 0..h1.order() {
            if map[h1.add(x, y)] != h2.add(map[x], map[y]) {
                return Some(format!("additivity fails at ({x}, {y})"));
            }
            if hom_image(map, h1.mul(x, y)) != h2.mul(map[x], map[y]) {
                return Some(format!("multiplicativity fails at ({x}, {y})"));
            }
        }
    }
    None
}

/// Whether `map` satisfies `ψ(x+y) = ψ(x)+ψ(y)` and `ψ(x∘y) = ψ(x)∘ψ(y)`
/// (as sets) for every pair.
pub fn check_good_hom(h1: &FiniteHyperring, h2: &FiniteHyperring, map: &[Elem]) -> bool {
    good_hom_violation(h1, h2, map).is_none()
}

pub fn hom_image(map: &[Elem], s: ElementSet) -> ElementSet {
    s.iter().map(|x| map[x]).collect()
}

pub fn hom_preimage(map: &[Elem], s: ElementSet) -> ElementSet {
    map.iter()
        .enumerate()
        .filter(|(_, &y)| s.contains(y))
        .map(|(x, _)| x)
        .collect()
}

/// `G/P` with cosets indexed by ascending least member (so `P` itself is 0),
/// together with the canonical projection.
///
/// The coset product is `{c+P : c ∈ (a+P)∘(b+P)}`; it must not depend on the
/// representatives, which holds for strongly distributive rings and is
/// checked for all others.
pub fn quotient_by_ideal(
    h: &Arc<FiniteHyperring>,
    p: ElementSet,
) -> Result<(Arc<FiniteHyperring>, HomMap)> {
    h.check_set(p)?;
    if p.is_empty() || !is_hyperideal(h, p) {
        return Err(Error::NotAHyperideal(p));
    }
    if p == h.carrier() {
        return Err(Error::ProperIdealRequired);
    }
    let n = h.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(a);
        for q in p.iter() {
            class_of[h.add(a, q)] = idx;
        }
    }
    let k = reps.len();
    let cosets: Vec<ElementSet> = (0..k)
        .map(|c| (0..n).filter(|&x| class_of[x] == c).collect())
        .collect();
    let classes = |s: ElementSet| s.iter().map(|x| class_of[x]).collect::<ElementSet>();

    let add = (0..k)
        .map(|c| (0..k).map(|d| class_of[h.add(reps[c], reps[d])]).collect())
        .collect();
    let mut mul = vec![vec![Vec::new(); k]; k];
    for c in 0..k {
        for d in 0..k {
            let expected = classes(h.mul(reps[c], reps[d]));
            for a in cosets[c].iter() {
                for b in cosets[d].iter() {
                    if classes(h.mul(a, b)) != expected {
                        return Err(Error::QuotientNotWellDefined { left: a, right: b });
                    }
                }
            }
            mul[c][d] = expected.to_vec();
        }
    }
    let meta = RingMeta {
        family: Family::Quotient,
        m: None,
        x: None,
    };
    let quotient = Arc::new(FiniteHyperring::new(
        format!("{}/{}", h.name(), p),
        &RawTables { add, mul },
        meta,
    )?);
    let projection = HomMap::new(Arc::clone(h), Arc::clone(&quotient), class_of)?;
    Ok((quotient, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::make_zx_mod;

    fn set(xs: &[Elem]) -> ElementSet {
        xs.iter().collect()
    }

    #[test]
    fn identity_and_swap_maps() {
        let h1 = make_zx_mod(4, &[2]).unwrap();
        assert!(check_good_hom(&h1, &h1, &[0, 1, 2, 3]));
        assert!(check_good_hom(&h1, &h1, &[0, 3, 2, 1]));
        assert!(check_good_hom(&h1, &h1, &[0, 2, 0, 2]));
        assert!(!check_good_hom(&h1, &h1, &[0, 1, 0, 1]));
    }

    #[test]
    fn quotient_of_h1() {
        let h1 = Arc::new(make_zx_mod(4, &[2]).unwrap());
        let (q, pi) = quotient_by_ideal(&h1, set(&[0, 2])).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.mul(pi.apply(1), pi.apply(1)), set(&[pi.apply(2)]));
        assert_eq!(pi.apply(2), 0);
        assert!(pi.is_surjective());
        assert_eq!(pi.kernel(), set(&[0, 2]));
    }

    #[test]
    fn trivial_quotient_is_a_copy() {
        let h1 = Arc::new(make_zx_mod(4, &[2]).unwrap());
        let (q, pi) = quotient_by_ideal(&h1, set(&[0])).unwrap();
        assert_eq!(*q, *h1);
        assert_eq!(pi.map(), &[0, 1, 2, 3]);
    }

    #[test]
    fn quotient_errors() {
        let h1 = Arc::new(make_zx_mod(4, &[2]).unwrap());
        assert!(matches!(
            quotient_by_ideal(&h1, h1.carrier()),
            Err(Error::ProperIdealRequired)
        ));
        assert!(matches!(
            quotient_by_ideal(&h1, set(&[0, 1])),
            Err(Error::NotAHyperideal(_))
        ));
    }

    #[test]
    fn images_and_preimages() {
        let map = [0, 1, 0, 1];
        assert_eq!(hom_image(&map, set(&[2, 3])), set(&[0, 1]));
        assert_eq!(hom_preimage(&map, set(&[0])), set(&[0, 2]));
    }
}
