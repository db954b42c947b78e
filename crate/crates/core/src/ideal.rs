//! Hyperideals, their classification, and the element sets that the
//! closedness theory quantifies over.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::element_set::{Elem, ElementSet};
use crate::error::{Error, Result};
use crate::hyperring::FiniteHyperring;

/// Default carrier bound for exhaustive hyperideal enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// Default carrier bound for i-set enumeration (subsets of the carrier are listed).
pub const I_SET_ENUMERATION_BOUND: usize = 16;

/// A validated hyperideal of a particular hyperring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hyperideal {
    members: ElementSet,
    proper: bool,
}

impl Hyperideal {
    pub fn new(h: &FiniteHyperring, members: ElementSet) -> Result<Self> {
        h.check_set(members)?;
        if !is_hyperideal(h, members) {
            return Err(Error::NotAHyperideal(members));
        }
        Ok(Hyperideal {
            members,
            proper: members != h.carrier(),
        })
    }

    pub(crate) fn trusted(h: &FiniteHyperring, members: ElementSet) -> Self {
        debug_assert!(is_hyperideal(h, members));
        Hyperideal {
            members,
            proper: members != h.carrier(),
        }
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealClass {
    pub proper: bool,
    /// `None` for the whole carrier.
    pub prime: Option<bool>,
    pub maximal: Option<bool>,
    pub c_hyperideal: bool,
    pub strong_c_hyperideal: bool,
}

pub fn classify(h: &FiniteHyperring, ideal: &Hyperideal) -> IdealClass {
    let q = ideal.members();
    IdealClass {
        proper: ideal.is_proper(),
        prime: is_prime(h, q).ok(),
        maximal: is_maximal(h, q).ok(),
        c_hyperideal: is_c_hyperideal(h, q),
        strong_c_hyperideal: is_strong_c_hyperideal(h, q),
    }
}

/// Subtraction-closed and absorbing (`r∘a ⊆ S` for all `r`, `a ∈ S`).
pub fn is_hyperideal(h: &FiniteHyperring, s: ElementSet) -> bool {
    if s.is_empty() || !s.is_subset(h.carrier()) {
        return false;
    }
    for a in s.iter() {
        if !h.absorb(a).is_subset(s) {
            return false;
        }
        for b in s.iter() {
            if !s.contains(h.sub(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Additive subgroup generated by `s`.
pub fn additive_closure(h: &FiniteHyperring, s: ElementSet) -> ElementSet {
    let gens: Vec<Elem> = s.iter().collect();
    let mut out = ElementSet::singleton(0);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            for y in [h.add(x, g), h.sub(x, g)] {
                if out.insert(y) {
                    queue.push_back(y);
                }
            }
        }
    }
    out
}

fn hyperideal_closure(h: &FiniteHyperring, gens: ElementSet) -> ElementSet {
    let mut current = gens.union(ElementSet::singleton(0));
    loop {
        let absorbed = current
            .iter()
            .fold(current, |acc, a| acc.union(h.absorb(a)));
        let next = additive_closure(h, absorbed);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Least hyperideal containing `gens`.
pub fn generate_hyperideal(h: &FiniteHyperring, gens: ElementSet) -> Result<Hyperideal> {
    if gens.is_empty() {
        return Err(Error::EmptyOperand);
    }
    h.check_set(gens)?;
    Ok(Hyperideal::trusted(h, hyperideal_closure(h, gens)))
}

fn enumerate_subgroups(h: &FiniteHyperring) -> Vec<ElementSet> {
    let zero = ElementSet::singleton(0);
    let mut seen: HashSet<ElementSet> = HashSet::from([zero]);
    let mut queue = VecDeque::from([zero]);
    while let Some(g) = queue.pop_front() {
        for x in h.carrier().difference(g).iter() {
            let joined = additive_closure(h, g.union(ElementSet::singleton(x)));
            if seen.insert(joined) {
                queue.push_back(joined);
            }
        }
    }
    seen.into_iter().collect()
}

/// Cached list of every hyperideal, ascending by size then lexicographically.
pub(crate) fn all_hyperideals(h: &FiniteHyperring) -> &[ElementSet] {
    h.ideals.get_or_init(|| {
        let mut ideals: Vec<ElementSet> = enumerate_subgroups(h)
            .into_iter()
            .filter(|&s| s.iter().all(|a| h.absorb(a).is_subset(s)))
            .collect();
        ideals.sort_by(ElementSet::cmp_size_lex);
        ideals
    })
}

/// Every hyperideal of `h`, including `{0}` and the carrier, ascending by
/// size then lexicographically. Additive subgroups are enumerated first and
/// filtered for absorption.
pub fn enumerate_hyperideals(h: &FiniteHyperring, bound: usize) -> Result<Vec<Hyperideal>> {
    if h.order() > bound {
        return Err(Error::OrderTooLarge {
            order: h.order(),
            bound,
        });
    }
    Ok(all_hyperideals(h)
        .iter()
        .map(|&s| Hyperideal::trusted(h, s))
        .collect())
}

fn require_proper(h: &FiniteHyperring, p: ElementSet) -> Result<()> {
    if p == h.carrier() {
        Err(Error::ProperIdealRequired)
    } else {
        Ok(())
    }
}

/// `a∘b ⊆ P ⇒ a ∈ P or b ∈ P`.
pub fn is_prime(h: &FiniteHyperring, p: ElementSet) -> Result<bool> {
    require_proper(h, p)?;
    let n = h.order();
    for a in 0..n {
        if p.contains(a) {
            continue;
        }
        for b in a..n {
            if !p.contains(b) && h.mul(a, b).is_subset(p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No hyperideal lies strictly between `P` and the carrier.
pub fn is_maximal(h: &FiniteHyperring, p: ElementSet) -> Result<bool> {
    require_proper(h, p)?;
    let full = h.carrier();
    Ok(full
        .difference(p)
        .iter()
        .all(|g| hyperideal_closure(h, p.union(ElementSet::singleton(g))) == full))
}

/// `P + Q` is the whole carrier.
pub fn is_coprime(h: &FiniteHyperring, p: ElementSet, q: ElementSet) -> bool {
    h.sum(p, q) == h.carrier()
}

/// The classes `C` (finite products `r_1∘…∘r_k`, `k >= 1`) and `U` (finite
/// Minkowski sums of members of `C`), each as a fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductClass {
    pub c: Vec<ElementSet>,
    pub u: Vec<ElementSet>,
}

impl ProductClass {
    pub(crate) fn compute(h: &FiniteHyperring) -> Self {
        let n = h.order();
        let mut c_seen: HashSet<ElementSet> = HashSet::new();
        let mut queue: VecDeque<ElementSet> = VecDeque::new();
        for r in 0..n {
            let s = ElementSet::singleton(r);
            c_seen.insert(s);
            queue.push_back(s);
        }
        while let Some(s) = queue.pop_front() {
            for r in 0..n {
                let t = h.set_mul_elem(s, r);
                if c_seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let mut c: Vec<ElementSet> = c_seen.iter().copied().collect();
        c.sort_by(ElementSet::cmp_size_lex);

        let mut u_seen = c_seen;
        let mut queue: VecDeque<ElementSet> = c.iter().copied().collect();
        while let Some(s) = queue.pop_front() {
            for &a in &c {
                let t = h.sum(s, a);
                if u_seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let mut u: Vec<ElementSet> = u_seen.into_iter().collect();
        u.sort_by(ElementSet::cmp_size_lex);
        ProductClass { c, u }
    }
}

/// `C`: every finite product of carrier elements, singletons included.
pub fn product_class_c(h: &FiniteHyperring) -> &[ElementSet] {
    &h.product_class().c
}

/// `U`: every finite sum of members of `C`.
pub fn sums_class_u(h: &FiniteHyperring) -> &[ElementSet] {
    &h.product_class().u
}

fn saturates(family: &[ElementSet], i: ElementSet) -> bool {
    family.iter().all(|&a| a.is_disjoint(i) || a.is_subset(i))
}

/// Every member of `C` meeting `I` lies inside `I`.
pub fn is_c_hyperideal(h: &FiniteHyperring, i: ElementSet) -> bool {
    saturates(product_class_c(h), i)
}

/// Every member of `U` meeting `I` lies inside `I`.
pub fn is_strong_c_hyperideal(h: &FiniteHyperring, i: ElementSet) -> bool {
    saturates(sums_class_u(h), i)
}

/// Whenever a product of `n+1` elements lies in `I`, deleting some factor
/// leaves a product that still lies in `I`.
///
/// Tuples are explored factor by factor. The state is the running product
/// together with the distinct leave-one-out products that are not yet inside
/// `I`; once any of those lands in `I` it stays there (absorption), so the
/// branch cannot produce a counterexample and is cut.
pub fn is_n_absorbing(h: &FiniteHyperring, i: ElementSet, n: usize) -> Result<bool> {
    require_proper(h, i)?;
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    let order = h.order();
    let mut visited: HashSet<(usize, ElementSet, Vec<ElementSet>)> = HashSet::new();
    for x1 in 0..order {
        for x2 in x1..order {
            let left_out = [ElementSet::singleton(x2), ElementSet::singleton(x1)];
            if left_out.iter().any(|l| l.is_subset(i)) {
                continue;
            }
            let mut open = left_out.to_vec();
            open.sort_by(ElementSet::cmp_lex);
            open.dedup();
            if !absorbing_from(h, i, n - 1, h.mul(x1, x2), open, &mut visited) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn absorbing_from(
    h: &FiniteHyperring,
    i: ElementSet,
    remaining: usize,
    product: ElementSet,
    open: Vec<ElementSet>,
    visited: &mut HashSet<(usize, ElementSet, Vec<ElementSet>)>,
) -> bool {
    if remaining == 0 {
        return !product.is_subset(i);
    }
    if product.is_subset(i) {
        return true;
    }
    if !visited.insert((remaining, product, open.clone())) {
        return true;
    }
    for x in 0..h.order() {
        let mut next: Vec<ElementSet> = Vec::with_capacity(open.len() + 1);
        let mut closed = false;
        for &l in &open {
            let l = h.set_mul_elem(l, x);
            if l.is_subset(i) {
                closed = true;
                break;
            }
            next.push(l);
        }
        if closed {
            continue;
        }
        next.push(product);
        next.sort_by(ElementSet::cmp_lex);
        next.dedup();
        if !absorbing_from(
            h,
            i,
            remaining - 1,
            h.set_mul_elem(product, x),
            next,
            visited,
        ) {
            return false;
        }
    }
    true
}

/// Intersection of the prime hyperideals containing `I`, or the carrier when
/// there are none.
pub fn radical(h: &FiniteHyperring, i: ElementSet) -> ElementSet {
    all_hyperideals(h)
        .iter()
        .filter(|&&p| i.is_subset(p) && is_prime(h, p).unwrap_or(false))
        .fold(h.carrier(), |acc, &p| acc.intersection(p))
}

/// `{r : r^k ⊆ I for some k >= 1}`.
pub fn power_members_d(h: &FiniteHyperring, i: ElementSet) -> ElementSet {
    (0..h.order())
        .filter(|&r| h.power_profile(r).some_power_within(i))
        .collect()
}

/// Elements with `0 ∈ a^k` for some `k`.
pub fn nilpotents(h: &FiniteHyperring) -> ElementSet {
    (0..h.order())
        .filter(|&a| h.power_profile(a).reaches_zero())
        .collect()
}

/// Units with respect to the least identity element, or `None` when the
/// hyperring has no identity.
pub fn units(h: &FiniteHyperring) -> Option<ElementSet> {
    h.identity().map(|e| units_for(h, e))
}

/// `{x : e ∈ x∘y for some y}` for a chosen identity `e`.
pub fn units_for(h: &FiniteHyperring, e: Elem) -> ElementSet {
    (0..h.order())
        .filter(|&x| (0..h.order()).any(|y| h.mul(x, y).contains(e)))
        .collect()
}

/// `{a : 0 ∈ a∘b for some b ≠ 0}`.
pub fn weak_zero_divisors(h: &FiniteHyperring) -> ElementSet {
    (0..h.order())
        .filter(|&a| (1..h.order()).any(|b| h.mul(a, b).contains(0)))
        .collect()
}

fn is_i_set(h: &FiniteHyperring, xi: ElementSet) -> bool {
    if xi.difference(ElementSet::singleton(0)).is_empty() {
        return false;
    }
    (0..h.order()).all(|x| {
        let total = xi
            .iter()
            .fold(ElementSet::singleton(0), |acc, e| h.sum(acc, h.mul(x, e)));
        total.contains(x)
    })
}

/// Every i-set: nonempty `ξ` with a nonzero member and `x ∈ Σ_{e∈ξ} x∘e` for all `x`.
pub fn find_i_sets(h: &FiniteHyperring, bound: usize) -> Result<Vec<ElementSet>> {
    if h.order() > bound {
        return Err(Error::OrderTooLarge {
            order: h.order(),
            bound,
        });
    }
    let mut out: Vec<ElementSet> = (1u128..(1u128 << h.order()))
        .map(ElementSet::from_bits)
        .filter(|&xi| is_i_set(h, xi))
        .collect();
    out.sort_by(ElementSet::cmp_size_lex);
    Ok(out)
}

const I_SET_STATE_CAP: usize = 50_000;

/// Whether some i-set exists. `None` means the search exceeded its state
/// budget without deciding.
///
/// A nonzero identity is an i-set on its own. Otherwise subsets are built
/// element by element, keeping for every `x` the partial sum `Σ x∘e`;
/// subsets with identical partial sums are interchangeable and merged.
pub fn has_i_set(h: &FiniteHyperring) -> Option<bool> {
    if h.identities().iter().any(|&e| e != 0) {
        return Some(true);
    }
    let n = h.order();
    let start = vec![ElementSet::singleton(0); n];
    let mut states: HashSet<(Vec<ElementSet>, bool)> = HashSet::from([(start, false)]);
    for e in 0..n {
        let mut added = Vec::new();
        for (sums, nonzero) in &states {
            let next: Vec<ElementSet> = sums
                .iter()
                .enumerate()
                .map(|(x, &acc)| h.sum(acc, h.mul(x, e)))
                .collect();
            let nz = *nonzero || e != 0;
            if nz && next.iter().enumerate().all(|(x, s)| s.contains(x)) {
                return Some(true);
            }
            added.push((next, nz));
        }
        states.extend(added);
        if states.len() > I_SET_STATE_CAP {
            return None;
        }
    }
    Some(false)
}

/// `I∘J` closed to a hyperideal.
pub fn ideal_product(h: &FiniteHyperring, i: ElementSet, j: ElementSet) -> Result<Hyperideal> {
    generate_hyperideal(h, h.hyper_product(i, j)?)
}

/// Raw union of all `s`-fold products of members of `I` (not closed to a hyperideal).
pub fn ideal_power(h: &FiniteHyperring, i: ElementSet, s: usize) -> Result<ElementSet> {
    if s == 0 {
        return Err(Error::ZeroExponent);
    }
    if i.is_empty() {
        return Err(Error::EmptyOperand);
    }
    h.check_set(i)?;
    let mut p = i;
    for _ in 1..s {
        p = h.set_mul(p, i);
    }
    Ok(p)
}

/// Minkowski sum `I + J`, itself a hyperideal.
pub fn ideal_sum(h: &FiniteHyperring, i: ElementSet, j: ElementSet) -> Result<Hyperideal> {
    Hyperideal::new(h, h.sum(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperring::make_zx_mod;

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
    fn hyperideal_membership() {
        let h = h1();
        assert!(is_hyperideal(&h, set(&[0, 2])));
        assert!(!is_hyperideal(&h, set(&[0, 1])));
        assert!(is_hyperideal(&h, set(&[0])));
        assert!(!is_hyperideal(&h, ElementSet::EMPTY));
    }

    #[test]
    fn generation() {
        let h = h1();
        assert_eq!(
            generate_hyperideal(&h, set(&[2])).unwrap().members(),
            set(&[0, 2])
        );
        assert_eq!(
            generate_hyperideal(&h, set(&[1])).unwrap().members(),
            h.carrier()
        );
        assert_eq!(
            generate_hyperideal(&h, set(&[0])).unwrap().members(),
            set(&[0])
        );
        assert!(generate_hyperideal(&h, ElementSet::EMPTY).is_err());
    }

    #[test]
    fn enumeration() {
        let list: Vec<ElementSet> = enumerate_hyperideals(&h1(), DEFAULT_ENUMERATION_BOUND)
            .unwrap()
            .iter()
            .map(Hyperideal::members)
            .collect();
        assert_eq!(list, vec![set(&[0]), set(&[0, 2]), set(&[0, 1, 2, 3])]);
        let list: Vec<ElementSet> = enumerate_hyperideals(&h3(), DEFAULT_ENUMERATION_BOUND)
            .unwrap()
            .iter()
            .map(Hyperideal::members)
            .collect();
        assert_eq!(list, vec![set(&[0]), set(&[0, 2]), set(&[0, 1, 2, 3])]);
        let big = make_zx_mod(20, &[1]).unwrap();
        assert!(matches!(
            enumerate_hyperideals(&big, DEFAULT_ENUMERATION_BOUND),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn prime_maximal_coprime() {
        let h = h1();
        assert!(!is_prime(&h, set(&[0, 2])).unwrap());
        assert!(is_maximal(&h, set(&[0, 2])).unwrap());
        assert!(matches!(
            is_prime(&h, h.carrier()),
            Err(Error::ProperIdealRequired)
        ));
        assert!(is_coprime(&h, set(&[0]), h.carrier()));
        assert!(!is_coprime(&h, set(&[0, 2]), set(&[0, 2])));
    }

    #[test]
    fn product_classes() {
        let h = h1();
        let singletons: Vec<ElementSet> = (0..4).map(ElementSet::singleton).collect();
        assert_eq!(product_class_c(&h), singletons.as_slice());
        assert_eq!(sums_class_u(&h), singletons.as_slice());
        let h = h3();
        assert!(product_class_c(&h).contains(&set(&[1, 3])));
        assert!(sums_class_u(&h).contains(&set(&[0, 2])));
    }

    #[test]
    fn c_hyperideals() {
        let h = h1();
        assert!(is_c_hyperideal(&h, set(&[0])));
        assert!(is_strong_c_hyperideal(&h, set(&[0])));
        assert!(is_c_hyperideal(&h, set(&[0, 2])));
        let h = h3();
        // {0,2} is a member of U, so {0} meets it without containing it.
        assert!(!is_strong_c_hyperideal(&h, set(&[0])));
        assert!(is_strong_c_hyperideal(&h, set(&[0, 2])));
    }

    #[test]
    fn n_absorbing() {
        let h = h1();
        assert!(!is_n_absorbing(&h, set(&[0]), 2).unwrap());
        assert!(!is_n_absorbing(&h, set(&[0, 2]), 1).unwrap());
        assert!(is_n_absorbing(&h, set(&[0, 2]), 2).unwrap());
        assert!(is_n_absorbing(&h, set(&[0]), 3).unwrap());
        assert!(matches!(
            is_n_absorbing(&h, h.carrier(), 1),
            Err(Error::ProperIdealRequired)
        ));
    }

    #[test]
    fn radical_and_d() {
        let h = h1();
        assert_eq!(radical(&h, set(&[0])), h.carrier());
        assert_eq!(power_members_d(&h, set(&[0])), h.carrier());
        let ring = make_zx_mod(6, &[1]).unwrap();
        let p = set(&[0, 2, 4]);
        assert!(is_prime(&ring, p).unwrap());
        assert_eq!(radical(&ring, p), p);
    }

    #[test]
    fn special_elements() {
        let h = h1();
        assert_eq!(nilpotents(&h), h.carrier());
        assert_eq!(units(&h), None);
        let h = h3();
        assert!(units(&h).unwrap().contains(1));
        assert_eq!(units(&h).unwrap(), set(&[1, 3]));
        assert_eq!(weak_zero_divisors(&h), set(&[0, 2]));
    }

    #[test]
    fn i_sets() {
        assert!(find_i_sets(&h1(), I_SET_ENUMERATION_BOUND)
            .unwrap()
            .is_empty());
        assert_eq!(has_i_set(&h1()), Some(false));
        assert!(find_i_sets(&h3(), I_SET_ENUMERATION_BOUND)
            .unwrap()
            .contains(&set(&[1])));
        // Z6 with X = {2,3}: no identity, but 2·2 + 3·1 ≡ 1 gives the i-set {1,2}.
        let h = make_zx_mod(6, &[2, 3]).unwrap();
        assert_eq!(h.identity(), None);
        assert!(find_i_sets(&h, I_SET_ENUMERATION_BOUND)
            .unwrap()
            .contains(&set(&[1, 2])));
        assert_eq!(has_i_set(&h), Some(true));
    }

    #[test]
    fn ideal_arithmetic() {
        let h = h1();
        let p = set(&[0, 2]);
        assert_eq!(ideal_product(&h, p, p).unwrap().members(), set(&[0]));
        assert_eq!(ideal_power(&h, p, 1).unwrap(), p);
        assert_eq!(ideal_sum(&h, p, p).unwrap().members(), p);
    }
}
