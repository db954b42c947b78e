//! Fixed-width subsets of a hyperring carrier.
//!
//! Every set-valued expression in the engine (hyperproducts, powers,
//! hyperideals, members of the product classes) is an [`ElementSet`]. The
//! carrier of a [`FiniteHyperring`](crate::FiniteHyperring) is `0..n` with
//! `n <= MAX_ORDER`, so a single `u128` holds any subset.

use std::cmp::Ordering;
use std::fmt;

/// Largest carrier size representable by an [`ElementSet`].
pub const MAX_ORDER: usize = 128;

/// An element of a finite carrier, identified by its index.
pub type Elem = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn singleton(a: Elem) -> Self {
        debug_assert!(a < MAX_ORDER);
        ElementSet(1u128 << a)
    }

    /// The full carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, a: Elem) -> bool {
        a < MAX_ORDER && self.0 >> a & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: Elem) -> bool {
        let fresh = !self.contains(a);
        self.0 |= 1u128 << a;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, a: Elem) -> bool {
        let present = self.contains(a);
        self.0 &= !(1u128 << a);
        present
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn meets(self, other: Self) -> bool {
        !self.is_disjoint(other)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<Elem> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending index order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Elem> {
        self.iter().collect()
    }

    /// Ordering by size, then lexicographically on the ascending member list.
    pub fn cmp_size_lex(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_lex(other))
    }

    /// Lexicographic order of the ascending member lists.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<Elem> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl<'a> FromIterator<&'a Elem> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a Elem>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = Elem;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = Elem;

    #[inline]
    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let a = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
