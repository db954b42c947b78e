use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::sync::Arc;

use crate::closedness::{profile_unchecked, weakly_closed_witness_unchecked, ClosedProfile};
use crate::element_set::ElementSet;
use crate::fundamental::{fundamental_ring, FundamentalRing};
use crate::hyperring::FiniteHyperring;
use crate::ideal::{
    all_hyperideals, generate_hyperideal, is_c_hyperideal, is_prime, is_strong_c_hyperideal,
    nilpotents,
};

use super::config::SuiteConfig;

/// Per-instance data shared by all checks, computed on first use.
pub(crate) struct Ctx<'a> {
    pub h: &'a Arc<FiniteHyperring>,
    pub cfg: &'a SuiteConfig,
    /// Every hyperideal, the carrier included.
    pub all: &'a [ElementSet],
    /// Proper hyperideals, in enumeration order.
    pub proper: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    profiles: OnceCell<Vec<ClosedProfile>>,
    weak: OnceCell<Vec<Vec<bool>>>,
    c: OnceCell<Vec<bool>>,
    strong_c: OnceCell<Vec<bool>>,
    prime: OnceCell<Vec<bool>>,
    nil: OnceCell<ElementSet>,
    fundamental: OnceCell<Result<FundamentalRing, String>>,
    products: RefCell<HashMap<(ElementSet, ElementSet), ElementSet>>,
}

impl<'a> Ctx<'a> {
    pub fn new(h: &'a Arc<FiniteHyperring>, cfg: &'a SuiteConfig) -> Self {
        let all = all_hyperideals(h);
        let proper: Vec<ElementSet> = all.iter().copied().filter(|&q| q != h.carrier()).collect();
        let index = proper.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        Ctx {
            h,
            cfg,
            all,
            proper,
            index,
            profiles: OnceCell::new(),
            weak: OnceCell::new(),
            c: OnceCell::new(),
            strong_c: OnceCell::new(),
            prime: OnceCell::new(),
            nil: OnceCell::new(),
            fundamental: OnceCell::new(),
            products: RefCell::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &FiniteHyperring {
        self.h
    }

    /// Power-periodicity bound `L` of the instance.
    pub fn bound(&self) -> usize {
        self.h.power_bound()
    }

    /// Exponent range covering every exponent up to the configured bound
    /// and far enough past `L` that all larger exponents repeat.
    pub fn s_all(&self) -> usize {
        self.cfg.s_max.max(self.bound() + 1)
    }

    pub fn n_all(&self) -> usize {
        self.cfg.n_max.max(self.bound() + 1)
    }

    /// Side length of the weak-closedness table.
    pub fn weak_bound(&self) -> usize {
        self.cfg.s_max.max(self.cfg.n_max) + 1
    }

    pub fn idx(&self, q: ElementSet) -> usize {
        self.index[&q]
    }

    pub fn profile(&self, i: usize) -> &ClosedProfile {
        &self.profiles.get_or_init(|| {
            let l = self.bound();
            self.proper
                .iter()
                .map(|&q| profile_unchecked(self.h, q, l, l, l))
                .collect()
        })[i]
    }

    pub fn closed(&self, i: usize, s: usize, n: usize) -> bool {
        self.profile(i).is_closed(s, n)
    }

    pub fn weak(&self, i: usize, s: usize, n: usize) -> bool {
        let b = self.weak_bound();
        assert!(s >= 1 && n >= 1 && s <= b && n <= b);
        self.weak.get_or_init(|| {
            self.proper
                .iter()
                .map(|&q| {
                    let mut t = vec![false; b * b];
                    for s in 1..=b {
                        for n in 1..=b {
                            t[(s - 1) * b + n - 1] =
                                weakly_closed_witness_unchecked(self.h, q, s, n).is_none();
                        }
                    }
                    t
                })
                .collect()
        })[i][(s - 1) * b + n - 1]
    }

    pub fn is_c(&self, i: usize) -> bool {
        self.c.get_or_init(|| {
            self.proper
                .iter()
                .map(|&q| is_c_hyperideal(self.h, q))
                .collect()
        })[i]
    }

    pub fn is_strong_c(&self, i: usize) -> bool {
        self.strong_c.get_or_init(|| {
            self.proper
                .iter()
                .map(|&q| is_strong_c_hyperideal(self.h, q))
                .collect()
        })[i]
    }

    pub fn is_prime(&self, i: usize) -> bool {
        self.prime.get_or_init(|| {
            self.proper
                .iter()
                .map(|&q| is_prime(self.h, q).expect("proper"))
                .collect()
        })[i]
    }

    pub fn nil(&self) -> ElementSet {
        *self.nil.get_or_init(|| nilpotents(self.h))
    }

    pub fn fundamental(&self) -> &Result<FundamentalRing, String> {
        self.fundamental
            .get_or_init(|| fundamental_ring(self.h).map_err(|e| e.to_string()))
    }

    /// The hyperideal generated by `P∘Q`.
    pub fn product(&self, p: ElementSet, q: ElementSet) -> ElementSet {
        let key = if p.bits() <= q.bits() { (p, q) } else { (q, p) };
        if let Some(&r) = self.products.borrow().get(&key) {
            return r;
        }
        let r = generate_hyperideal(self.h, self.h.set_mul(p, q))
            .expect("nonempty generators")
            .members();
        self.products.borrow_mut().insert(key, r);
        r
    }
}

/// Nondecreasing index tuples of length `1..=t_max` over `0..len`.
pub(crate) fn tuples(len: usize, t_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(
        len: usize,
        t_max: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == t_max {
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(len, t_max, i, cur, out);
            cur.pop();
        }
    }
    rec(len, t_max, 0, &mut Vec::new(), &mut out);
    out
}
