//! Exact decision of `(s,n)`-closedness for `dℤ` inside `(ℤ, +, ∘_X)` with
//! `a∘b = {a·x·b : x ∈ X}`.
//!
//! Every member of `a^s` has the form `a^s·t` with `t` a product of `s-1`
//! members of `X`, so whether `a^s ⊆ dℤ` depends only on `a mod d`. For the
//! weak variant: if `0 ∉ X` then `0 ∈ a^s` only for `a = 0`, and the residue
//! class of `0` never violates closedness (every power lies in `dℤ`), so
//! weak closedness coincides with closedness. If `0 ∈ X` then `0 ∈ a^s` for
//! every `a` once `s >= 2`, which makes the weak condition vacuous there.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZxResidueModel {
    d: u64,
    #[serde(rename = "X")]
    x: Vec<i64>,
}

impl ZxResidueModel {
    pub fn new(d: u64, x: &[i64]) -> Result<Self> {
        if d < 2 {
            return Err(Error::Config(format!(
                "modulus must be at least 2, got {d}"
            )));
        }
        if x.is_empty() {
            return Err(Error::Config("multiplier set X is empty".into()));
        }
        let mut x = x.to_vec();
        x.sort_unstable();
        x.dedup();
        Ok(ZxResidueModel { d, x })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn x(&self) -> &[i64] {
        &self.x
    }

    fn x_residues(&self) -> Vec<u64> {
        let d = self.d as i128;
        let set: BTreeSet<u64> = self
            .x
            .iter()
            .map(|&v| (v as i128).rem_euclid(d) as u64)
            .collect();
        set.into_iter().collect()
    }

    fn zero_in_x(&self) -> bool {
        self.x.contains(&0)
    }

    /// Residues of all products of `k` members of `X` (`{1}` for `k = 0`).
    fn x_products(&self, k: usize) -> Vec<u64> {
        let xs = self.x_residues();
        let mut cur: BTreeSet<u64> = BTreeSet::from([1 % self.d]);
        for _ in 0..k {
            cur = cur
                .iter()
                .flat_map(|&t| xs.iter().map(move |&x| mulmod(t, x, self.d)))
                .collect();
        }
        cur.into_iter().collect()
    }

    /// Whether `a^k ⊆ dℤ` for every integer `a ≡ r (mod d)`.
    pub fn power_in_ideal(&self, r: u64, k: usize) -> bool {
        assert!(k >= 1);
        let rk = powmod(r % self.d, k as u64, self.d);
        self.x_products(k - 1)
            .iter()
            .all(|&t| mulmod(rk, t, self.d) == 0)
    }

    fn power_table(&self, k: usize) -> Vec<bool> {
        let ts = self.x_products(k - 1);
        (0..self.d)
            .map(|r| {
                let rk = powmod(r, k as u64, self.d);
                ts.iter().all(|&t| mulmod(rk, t, self.d) == 0)
            })
            .collect()
    }

    /// Least residue `r` whose integers satisfy `a^s ⊆ dℤ` but not `a^n ⊆ dℤ`.
    pub fn closed_witness(&self, s: usize, n: usize) -> Result<Option<u64>> {
        if s == 0 || n == 0 {
            return Err(Error::ZeroExponent);
        }
        let ps = self.power_table(s);
        let pn = self.power_table(n);
        Ok((0..self.d).find(|&r| ps[r as usize] && !pn[r as usize]))
    }

    /// As [`closed_witness`](Self::closed_witness), skipping every `a` with `0 ∈ a^s`.
    pub fn weakly_closed_witness(&self, s: usize, n: usize) -> Result<Option<u64>> {
        if s == 0 || n == 0 {
            return Err(Error::ZeroExponent);
        }
        if s >= 2 && self.zero_in_x() {
            return Ok(None);
        }
        Ok(self.closed_witness(s, n)?.filter(|&r| r != 0))
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn zx_residue_closed(model: &ZxResidueModel, s: usize, n: usize) -> Result<bool> {
    Ok(model.closed_witness(s, n)?.is_none())
}

pub fn zx_residue_weakly_closed(model: &ZxResidueModel, s: usize, n: usize) -> Result<bool> {
    Ok(model.weakly_closed_witness(s, n)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_modulus_witness() {
        let m = ZxResidueModel::new(4, &[2]).unwrap();
        assert!(!zx_residue_closed(&m, 3, 2).unwrap());
        assert_eq!(m.closed_witness(3, 2).unwrap(), Some(1));
    }

    #[test]
    fn squarefree_modulus_coprime_to_x_is_radical() {
        let m = ZxResidueModel::new(105, &[2, 4]).unwrap();
        for s in 1..=12 {
            for n in 1..=4 {
                assert!(zx_residue_closed(&m, s, n).unwrap());
            }
        }
    }

    #[test]
    fn non_squarefree_modulus_fails_low_n() {
        let m = ZxResidueModel::new(8, &[3, 5]).unwrap();
        assert_eq!(m.closed_witness(3, 1).unwrap(), Some(2));
        assert!(zx_residue_closed(&m, 3, 3).unwrap());
    }

    #[test]
    fn zero_multiplier_makes_weak_condition_vacuous() {
        let m = ZxResidueModel::new(9, &[0, 1]).unwrap();
        assert!(!zx_residue_closed(&m, 2, 1).unwrap());
        assert!(zx_residue_weakly_closed(&m, 2, 1).unwrap());
    }

    #[test]
    fn rejects_degenerate_models() {
        assert!(ZxResidueModel::new(1, &[2]).is_err());
        assert!(ZxResidueModel::new(5, &[]).is_err());
    }
}
