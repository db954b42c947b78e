//! Brute-force reference computations written directly against raw tables,
//! sharing no code with the library beyond the table format.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use hyperring_core::RawTables;

pub type Set = BTreeSet<usize>;

pub struct Oracle {
    n: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<Set>>,
}

impl Oracle {
    pub fn new(raw: &RawTables) -> Self {
        Oracle {
            n: raw.add.len(),
            add: raw.add.clone(),
            mul: raw
                .mul
                .iter()
                .map(|row| row.iter().map(|e| e.iter().copied().collect()).collect())
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        (0..self.n)
            .find(|&z| (0..self.n).all(|a| self.add[z][a] == a))
            .expect("additive identity")
    }

    pub fn neg(&self, a: usize) -> usize {
        let z = self.zero();
        (0..self.n)
            .find(|&b| self.add[a][b] == z)
            .expect("additive inverse")
    }

    pub fn prod(&self, s: &Set, t: &Set) -> Set {
        let mut out = Set::new();
        for &a in s {
            for &b in t {
                out.extend(self.mul[a][b].iter().copied());
            }
        }
        out
    }

    pub fn sum(&self, s: &Set, t: &Set) -> Set {
        s.iter()
            .flat_map(|&a| t.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.add[a][b])
            .collect()
    }

    pub fn pow(&self, a: usize, k: usize) -> Set {
        let single: Set = [a].into();
        let mut acc = single.clone();
        for _ in 1..k {
            acc = self.prod(&acc, &single);
        }
        acc
    }

    /// One past the number of distinct powers, maximized over elements: every
    /// distinct power occurs at an exponent below this.
    pub fn power_bound(&self) -> usize {
        (0..self.n)
            .map(|a| {
                let mut seen: HashMap<Set, usize> = HashMap::new();
                let single: Set = [a].into();
                let mut cur = single.clone();
                let mut k = 1;
                while !seen.contains_key(&cur) {
                    seen.insert(cur.clone(), k);
                    cur = self.prod(&cur, &single);
                    k += 1;
                }
                k
            })
            .max()
            .unwrap_or(1)
    }

    pub fn is_ideal(&self, s: &Set) -> bool {
        if s.is_empty() {
            return false;
        }
        let diff = s
            .iter()
            .all(|&a| s.iter().all(|&b| s.contains(&self.add[a][self.neg(b)])));
        let absorb = s
            .iter()
            .all(|&a| (0..self.n).all(|r| self.mul[r][a].is_subset(s)));
        diff && absorb
    }

    /// Every subset passing the hyperideal test, in size-then-lexicographic order.
    pub fn ideals(&self) -> Vec<Set> {
        let mut out: Vec<Set> = (1u64..(1 << self.n))
            .map(|bits| (0..self.n).filter(|i| bits >> i & 1 == 1).collect::<Set>())
            .filter(|s| self.is_ideal(s))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        out
    }

    pub fn closed(&self, q: &Set, s: usize, n: usize) -> bool {
        (0..self.n).all(|a| !self.pow(a, s).is_subset(q) || self.pow(a, n).is_subset(q))
    }

    pub fn weakly_closed(&self, q: &Set, s: usize, n: usize) -> bool {
        let z = self.zero();
        (0..self.n).all(|a| {
            let p = self.pow(a, s);
            p.contains(&z) || !p.is_subset(q) || self.pow(a, n).is_subset(q)
        })
    }

    pub fn omega(&self, q: &Set, s: usize) -> usize {
        (1..=s)
            .find(|&n| self.closed(q, s, n))
            .expect("n = s always works")
    }

    /// `None` stands for an unbounded range of closed exponents.
    pub fn big_omega(&self, q: &Set, n: usize) -> Option<usize> {
        let l = self.power_bound().max(n) + 1;
        (1..=l).find(|&s| !self.closed(q, s, n)).map(|s| s - 1)
    }

    /// All finite products `x_1∘..∘x_k`, grown one factor at a time.
    pub fn products(&self) -> HashSet<Set> {
        let mut seen: HashSet<Set> = (0..self.n).map(|x| Set::from([x])).collect();
        let mut frontier: Vec<Set> = seen.iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            for x in 0..self.n {
                let next = self.prod(&p, &Set::from([x]));
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen
    }

    /// All finite sums of finite products.
    pub fn sums_of_products(&self) -> HashSet<Set> {
        let c: Vec<Set> = self.products().into_iter().collect();
        let mut seen: HashSet<Set> = c.iter().cloned().collect();
        let mut frontier: Vec<Set> = c.clone();
        while let Some(u) = frontier.pop() {
            for p in &c {
                let next = self.sum(&u, p);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen
    }

    /// Classes of the transitive closure of "both lie in one sum of products",
    /// ordered by least member.
    pub fn gamma_star(&self) -> Vec<Set> {
        let u = self.sums_of_products();
        let mut related = vec![vec![false; self.n]; self.n];
        for s in &u {
            for &a in s {
                for &b in s {
                    related[a][b] = true;
                }
            }
        }
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    if related[i][k] && related[k][j] {
                        related[i][j] = true;
                    }
                }
            }
        }
        let mut classes: Vec<Set> = Vec::new();
        for (a, row) in related.iter().enumerate() {
            if !classes.iter().any(|c| c.contains(&a)) {
                classes.push((0..self.n).filter(|&b| row[b]).collect());
            }
        }
        classes
    }

    pub fn is_c(&self, i: &Set) -> bool {
        self.products()
            .iter()
            .all(|p| p.is_disjoint(i) || p.is_subset(i))
    }
}
