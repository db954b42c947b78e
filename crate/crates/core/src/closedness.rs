//! `(s,n)`-closed and weakly `(s,n)`-closed hyperideals, tough-zero
//! elements, the `ω`/`Ω` profile of a hyperideal, and regular elements.
//!
//! A hyperideal `Q` is `(s,n)`-closed when `a^s ⊆ Q` forces `a^n ⊆ Q`, and
//! weakly `(s,n)`-closed when the same holds for those `a` with `0 ∉ a^s`.
//!
//! Quantifying over every exponent is exact here: with
//! `L = max_a (tail_a + period_a)` every power `a^s` with `s >= L` equals a
//! power with exponent in `[tail_a, L)`. Consequently a failure at some
//! `s > L` already shows up at an exponent `<= L`, `Ω(n)` is either `∞` or at
//! most `L - 1`, and `Ω(n) = ∞` once `n` reaches every element's cycle.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::element_set::{Elem, ElementSet};
use crate::error::{Error, Result};
use crate::hyperring::FiniteHyperring;
use crate::ideal::is_hyperideal;

fn check_ideal(h: &FiniteHyperring, q: ElementSet) -> Result<()> {
    h.check_set(q)?;
    if !is_hyperideal(h, q) {
        return Err(Error::NotAHyperideal(q));
    }
    if q == h.carrier() {
        return Err(Error::ProperIdealRequired);
    }
    Ok(())
}

fn check_exponents(s: usize, n: usize) -> Result<()> {
    if s == 0 || n == 0 {
        Err(Error::ZeroExponent)
    } else {
        Ok(())
    }
}

/// Least `a` with `a^s ⊆ Q` but `a^n ⊄ Q`. Inputs are not validated.
pub fn closed_witness_unchecked(
    h: &FiniteHyperring,
    q: ElementSet,
    s: usize,
    n: usize,
) -> Option<Elem> {
    (0..h.order()).find(|&a| h.pow(a, s).is_subset(q) && !h.pow(a, n).is_subset(q))
}

/// Least `a` with `0 ∉ a^s ⊆ Q` but `a^n ⊄ Q`. Inputs are not validated.
pub fn weakly_closed_witness_unchecked(
    h: &FiniteHyperring,
    q: ElementSet,
    s: usize,
    n: usize,
) -> Option<Elem> {
    (0..h.order()).find(|&a| {
        let p = h.pow(a, s);
        !p.contains(0) && p.is_subset(q) && !h.pow(a, n).is_subset(q)
    })
}

/// The lexicographically least element refuting `(s,n)`-closedness of `Q`.
pub fn sn_closed_witness(
    h: &FiniteHyperring,
    q: ElementSet,
    s: usize,
    n: usize,
) -> Result<Option<Elem>> {
    check_ideal(h, q)?;
    check_exponents(s, n)?;
    Ok(closed_witness_unchecked(h, q, s, n))
}

pub fn is_sn_closed(h: &FiniteHyperring, q: ElementSet, s: usize, n: usize) -> Result<bool> {
    Ok(sn_closed_witness(h, q, s, n)?.is_none())
}

/// The lexicographically least element refuting weak `(s,n)`-closedness of `Q`.
pub fn weakly_sn_closed_witness(
    h: &FiniteHyperring,
    q: ElementSet,
    s: usize,
    n: usize,
) -> Result<Option<Elem>> {
    check_ideal(h, q)?;
    check_exponents(s, n)?;
    Ok(weakly_closed_witness_unchecked(h, q, s, n))
}

pub fn is_weakly_sn_closed(h: &FiniteHyperring, q: ElementSet, s: usize, n: usize) -> Result<bool> {
    Ok(weakly_sn_closed_witness(h, q, s, n)?.is_none())
}

/// Least `x` with `0 ∈ x^s` and `x^n ⊄ Q`.
pub fn find_tough_zero(
    h: &FiniteHyperring,
    q: ElementSet,
    s: usize,
    n: usize,
) -> Result<Option<Elem>> {
    check_ideal(h, q)?;
    check_exponents(s, n)?;
    Ok(tough_zero_unchecked(h, q, s, n))
}

pub fn tough_zero_unchecked(
    h: &FiniteHyperring,
    q: ElementSet,
    s: usize,
    n: usize,
) -> Option<Elem> {
    (0..h.order()).find(|&x| h.pow(x, s).contains(0) && !h.pow(x, n).is_subset(q))
}

/// A positive integer or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn is_infinite(self) -> bool {
        self == Extended::Infinite
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => serializer.serialize_u64(*v as u64),
            Extended::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileWitness {
    pub s: usize,
    pub n: usize,
    pub element: Elem,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProfileWitnesses {
    /// For each reported `s` with `ω(s) > 1`: why `(s, ω(s)-1)` fails.
    pub omega: Vec<ProfileWitness>,
    /// For each reported `n` with finite `Ω(n)`: why `(Ω(n)+1, n)` fails.
    #[serde(rename = "Omega")]
    pub big_omega: Vec<ProfileWitness>,
}

/// The closed-pair set `{(s,n) : Q is (s,n)-closed}` of a proper hyperideal,
/// with `ω(s) = min{n : (s,n) closed}` and `Ω(n) = sup{s : (s,n) closed}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedProfile {
    ideal: ElementSet,
    bound: usize,
    /// `closed[s-1][n-1]` for `1 <= s, n <= bound`.
    closed: Vec<Vec<bool>>,
    s_max: usize,
    n_max: usize,
    witnesses: ProfileWitnesses,
}

impl ClosedProfile {
    pub fn ideal(&self) -> ElementSet {
        self.ideal
    }

    /// The periodicity bound `L` past which no new closedness failures appear.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn s_max(&self) -> usize {
        self.s_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Whether `(s,n)` is a closed pair; valid for every `s, n >= 1`.
    pub fn is_closed(&self, s: usize, n: usize) -> bool {
        assert!(s >= 1 && n >= 1);
        if s <= n {
            return true;
        }
        if n >= self.bound {
            return true;
        }
        self.closed[s.min(self.bound) - 1][n - 1]
    }

    pub fn omega(&self, s: usize) -> usize {
        assert!(s >= 1);
        (1..=s)
            .find(|&n| self.is_closed(s, n))
            .expect("(s,s) is closed")
    }

    #[allow(non_snake_case)]
    pub fn Omega(&self, n: usize) -> Extended {
        assert!(n >= 1);
        if n >= self.bound {
            return Extended::Infinite;
        }
        match (1..=self.bound).find(|&s| !self.is_closed(s, n)) {
            Some(s) => Extended::Finite(s - 1),
            None => Extended::Infinite,
        }
    }

    pub fn omega_table(&self) -> Vec<usize> {
        (1..=self.s_max).map(|s| self.omega(s)).collect()
    }

    #[allow(non_snake_case)]
    pub fn Omega_table(&self) -> Vec<Extended> {
        (1..=self.n_max).map(|n| self.Omega(n)).collect()
    }

    /// Whether every pair is closed.
    pub fn is_everything_closed(&self) -> bool {
        (1..=self.bound).all(|n| self.Omega(n).is_infinite())
    }

    pub fn witnesses(&self) -> &ProfileWitnesses {
        &self.witnesses
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ideal": self.ideal,
            "bound_L": self.bound,
            "omega": self.omega_table(),
            "Omega": self.Omega_table(),
            "witnesses": self.witnesses,
        })
    }
}

/// Profile of a proper hyperideal `Q`. `s_max` and `n_max` only select the
/// range reported in tables; queries are answered for every exponent.
pub fn closed_profile(
    h: &FiniteHyperring,
    q: ElementSet,
    s_max: Option<usize>,
    n_max: Option<usize>,
) -> Result<ClosedProfile> {
    check_ideal(h, q)?;
    let bound = h.power_bound();
    let s_max = s_max.unwrap_or(bound).max(1);
    let n_max = n_max.unwrap_or(s_max).max(1);
    Ok(profile_unchecked(h, q, bound, s_max, n_max))
}

pub(crate) fn profile_unchecked(
    h: &FiniteHyperring,
    q: ElementSet,
    bound: usize,
    s_max: usize,
    n_max: usize,
) -> ClosedProfile {
    let closed: Vec<Vec<bool>> = (1..=bound)
        .map(|s| {
            (1..=bound)
                .map(|n| closed_witness_unchecked(h, q, s, n).is_none())
                .collect()
        })
        .collect();
    let mut profile = ClosedProfile {
        ideal: q,
        bound,
        closed,
        s_max,
        n_max,
        witnesses: ProfileWitnesses::default(),
    };
    let mut witnesses = ProfileWitnesses::default();
    for s in 1..=s_max {
        let w = profile.omega(s);
        if w > 1 {
            let element = closed_witness_unchecked(h, q, s, w - 1).expect("ω is minimal");
            witnesses.omega.push(ProfileWitness {
                s,
                n: w - 1,
                element,
            });
        }
    }
    for n in 1..=n_max {
        if let Extended::Finite(v) = profile.Omega(n) {
            let element = closed_witness_unchecked(h, q, v + 1, n).expect("Ω is maximal");
            witnesses.big_omega.push(ProfileWitness {
                s: v + 1,
                n,
                element,
            });
        }
    }
    profile.witnesses = witnesses;
    profile
}

pub fn omega(h: &FiniteHyperring, q: ElementSet, s: usize) -> Result<usize> {
    if s == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(closed_profile(h, q, Some(1), Some(1))?.omega(s))
}

#[allow(non_snake_case)]
pub fn Omega(h: &FiniteHyperring, q: ElementSet, n: usize) -> Result<Extended> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(closed_profile(h, q, Some(1), Some(1))?.Omega(n))
}

/// Some `b` with `a^n ⊆ a^s∘b`.
pub fn regular_witness(h: &FiniteHyperring, a: Elem, s: usize, n: usize) -> Result<Option<Elem>> {
    h.check_elem(a)?;
    check_exponents(s, n)?;
    let target = h.pow(a, n);
    let base = h.pow(a, s);
    Ok((0..h.order()).find(|&b| target.is_subset(h.set_mul_elem(base, b))))
}

/// `a^n ⊆ a^s∘b` for some element `b`.
pub fn is_sn_regular(h: &FiniteHyperring, a: Elem, s: usize, n: usize) -> Result<bool> {
    Ok(regular_witness(h, a, s, n)?.is_some())
}

/// `a^n ⊆ a^s∘B` for some subset `B`.
///
/// `B ↦ a^s∘B` is monotone and the carrier is the largest subset, so the
/// condition holds for some `B` exactly when it holds for `B = G`.
pub fn is_sn_big_regular(h: &FiniteHyperring, a: Elem, s: usize, n: usize) -> Result<bool> {
    h.check_elem(a)?;
    check_exponents(s, n)?;
    Ok(h.pow(a, n).is_subset(h.set_mul(h.pow(a, s), h.carrier())))
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

    #[test]
    fn closedness_examples() {
        let h = h1();
        assert!(is_sn_closed(&h, set(&[0, 2]), 3, 2).unwrap());
        assert_eq!(sn_closed_witness(&h, set(&[0]), 3, 2).unwrap(), Some(1));
        for s in 1..=4 {
            for n in s..=5 {
                assert!(is_sn_closed(&h, set(&[0]), s, n).unwrap());
            }
        }
        assert!(matches!(
            is_sn_closed(&h, h.carrier(), 1, 1),
            Err(Error::ProperIdealRequired)
        ));
    }

    #[test]
    fn weak_closedness_examples() {
        let h = h1();
        assert!(is_weakly_sn_closed(&h, set(&[0]), 3, 2).unwrap());
        assert_eq!(
            weakly_sn_closed_witness(&h, set(&[0, 2]), 2, 1).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn tough_zero_examples() {
        let h = h1();
        assert_eq!(find_tough_zero(&h, set(&[0]), 3, 2).unwrap(), Some(1));
        assert_eq!(find_tough_zero(&h, set(&[0, 2]), 3, 2).unwrap(), None);
    }

    #[test]
    fn profiles_of_h1() {
        let h = h1();
        let p = closed_profile(&h, set(&[0, 2]), Some(6), Some(6)).unwrap();
        assert_eq!(p.omega_table(), vec![1, 2, 2, 2, 2, 2]);
        assert_eq!(p.Omega(1), Extended::Finite(1));
        assert_eq!(p.Omega(2), Extended::Infinite);
        let p = closed_profile(&h, set(&[0]), Some(6), Some(6)).unwrap();
        assert_eq!(p.omega_table(), vec![1, 2, 3, 3, 3, 3]);
        assert_eq!(p.Omega(2), Extended::Finite(2));
        assert_eq!(p.Omega(3), Extended::Infinite);
        assert_eq!(p.omega(1000), 3);
    }

    #[test]
    fn regularity_examples() {
        let h = h1();
        assert!(!is_sn_regular(&h, 1, 3, 2).unwrap());
        assert!(!is_sn_big_regular(&h, 1, 3, 2).unwrap());
        let h3 = make_zx_mod(4, &[1, 3]).unwrap();
        assert!(is_sn_big_regular(&h3, 1, 3, 2).unwrap());
    }

    #[test]
    fn extended_order_and_json() {
        assert!(Extended::Finite(1000) < Extended::Infinite);
        assert_eq!(
            serde_json::to_string(&Extended::Infinite).unwrap(),
            "\"inf\""
        );
        assert_eq!(serde_json::to_string(&Extended::Finite(3)).unwrap(), "3");
    }
}
