use std::sync::Arc;

use crate::closedness::{
    closed_witness_unchecked, is_sn_big_regular, is_sn_regular, tough_zero_unchecked,
    weakly_closed_witness_unchecked, Extended,
};
use crate::element_set::{Elem, ElementSet};
use crate::hom::{check_good_hom, hom_image, hom_preimage, quotient_by_ideal};
use crate::hyperring::{product_set, project_set, FiniteHyperring};
use crate::ideal::{
    all_hyperideals, has_i_set, ideal_power, is_c_hyperideal, is_hyperideal, is_n_absorbing,
    power_members_d, radical, units_for, weak_zero_divisors,
};

use super::context::{tuples, Ctx};
use super::{CaseWitness, CheckDef, Recorder};

fn w(
    ideals: Vec<ElementSet>,
    elements: Vec<Elem>,
    sn: Option<(usize, usize)>,
    note: impl Into<String>,
) -> CaseWitness {
    CaseWitness::new(ideals, elements, sn, note)
}

fn closed_elem(h: &FiniteHyperring, q: ElementSet, s: usize, n: usize) -> Vec<Elem> {
    closed_witness_unchecked(h, q, s, n).into_iter().collect()
}

fn weak_elem(h: &FiniteHyperring, q: ElementSet, s: usize, n: usize) -> Vec<Elem> {
    weakly_closed_witness_unchecked(h, q, s, n)
        .into_iter()
        .collect()
}

/// `a^s ⊆ Q ⇒ a^n ⊆ Q` for all `a`, with no properness requirement on `Q`.
fn closed_impl(h: &FiniteHyperring, q: ElementSet, s: usize, n: usize) -> bool {
    closed_witness_unchecked(h, q, s, n).is_none()
}

fn weak_in(h: &FiniteHyperring, q: ElementSet, s: usize, n: usize) -> bool {
    weakly_closed_witness_unchecked(h, q, s, n).is_none()
}

fn t2_3(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_c(i) {
            continue;
        }
        for n in 1..=c.cfg.absorbing_n_max {
            if !is_n_absorbing(h, q, n).expect("proper") {
                continue;
            }
            for s in 1..=c.s_all() {
                r.case(c.closed(i, s, n), || {
                    w(
                        vec![q],
                        closed_elem(h, q, s, n),
                        Some((s, n)),
                        "n-absorbing C-hyperideal",
                    )
                });
            }
        }
    }
}

fn fold_product(c: &Ctx, qs: &[ElementSet]) -> ElementSet {
    qs[1..].iter().fold(qs[0], |acc, &q| c.product(acc, q))
}

fn t2_4(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    let primes: Vec<ElementSet> = (0..c.proper.len())
        .filter(|&i| c.is_prime(i))
        .map(|i| c.proper[i])
        .collect();
    for tup in tuples(primes.len(), c.cfg.t_max) {
        let qs: Vec<ElementSet> = tup.iter().map(|&k| primes[k]).collect();
        let p = fold_product(c, &qs);
        let pi = c.idx(p);
        let t = qs.len();
        for s in 1..=c.s_all() {
            for n in s.min(t)..=c.n_all() {
                let mut ideals = qs.clone();
                ideals.push(p);
                r.case(c.closed(pi, s, n), || {
                    w(
                        ideals,
                        closed_elem(h, p, s, n),
                        Some((s, n)),
                        "last ideal is the product of the primes",
                    )
                });
            }
        }
    }
}

/// Least `n_i` over hypotheses `(s_i, n_i)` with `s_i >= s` that `Q_i` satisfies.
fn best_n(c: &Ctx, i: usize, s: usize) -> usize {
    let p = c.profile(i);
    (s..=s.max(c.bound()))
        .map(|t| p.omega(t))
        .min()
        .expect("nonempty range")
}

fn t2_5(c: &Ctx, r: &mut Recorder, product: bool) {
    let h = c.ring();
    for tup in tuples(c.proper.len(), c.cfg.t_max) {
        let qs: Vec<ElementSet> = tup.iter().map(|&k| c.proper[k]).collect();
        let target = if product {
            fold_product(c, &qs)
        } else {
            qs.iter().fold(h.carrier(), |acc, &q| acc.intersection(q))
        };
        let ti = c.idx(target);
        for s in 1..=c.cfg.s_max {
            let ns = tup.iter().map(|&k| best_n(c, k, s));
            let combined = if product {
                ns.sum::<usize>()
            } else {
                ns.max().unwrap()
            };
            for n in s.min(combined)..=c.cfg.n_max {
                let mut ideals = qs.clone();
                ideals.push(target);
                let note = format!("hypotheses n_i = {combined} in combined form");
                r.case(c.closed(ti, s, n), || {
                    w(ideals, closed_elem(h, target, s, n), Some((s, n)), note)
                });
            }
        }
    }
}

fn t2_5i(c: &Ctx, r: &mut Recorder) {
    t2_5(c, r, true)
}

fn t2_5ii(c: &Ctx, r: &mut Recorder) {
    t2_5(c, r, false)
}

fn c2_6(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for tup in tuples(c.proper.len(), c.cfg.t_max) {
        if tup.len() < 2 {
            continue;
        }
        let qs: Vec<ElementSet> = tup.iter().map(|&k| c.proper[k]).collect();
        let inter = qs.iter().fold(h.carrier(), |acc, &q| acc.intersection(q));
        let ii = c.idx(inter);
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                if tup.iter().all(|&k| c.closed(k, s, n)) {
                    let mut ideals = qs.clone();
                    ideals.push(inter);
                    r.case(c.closed(ii, s, n), || {
                        w(ideals, closed_elem(h, inter, s, n), Some((s, n)), "")
                    });
                }
            }
        }
    }
}

fn c2_7(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for tup in tuples(c.proper.len(), c.cfg.t_max) {
        if tup.len() < 2 || tup.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        let qs: Vec<ElementSet> = tup.iter().map(|&k| c.proper[k]).collect();
        let coprime =
            (0..qs.len()).all(|a| (a + 1..qs.len()).all(|b| h.sum(qs[a], qs[b]) == h.carrier()));
        if !coprime {
            continue;
        }
        let p = fold_product(c, &qs);
        let pi = c.idx(p);
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                if tup.iter().all(|&k| c.closed(k, s, n)) {
                    let mut ideals = qs.clone();
                    ideals.push(p);
                    r.case(c.closed(pi, s, n), || {
                        w(
                            ideals,
                            closed_elem(h, p, s, n),
                            Some((s, n)),
                            "last ideal is the product",
                        )
                    });
                }
            }
        }
    }
}

fn t2_8(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_strong_c(i) {
            continue;
        }
        for s in 1..=c.cfg.s_max {
            if !c.closed(i, s, 2) {
                continue;
            }
            for &p in c.all {
                if !ideal_power(h, p, s).expect("nonempty").is_subset(q) {
                    continue;
                }
                let p2 = ideal_power(h, p, 2).expect("nonempty");
                let lhs = h.sum(p2, p2);
                let bad: Vec<Elem> = lhs.difference(q).min().into_iter().collect();
                r.case(lhs.is_subset(q), || {
                    w(
                        vec![p, q],
                        bad,
                        Some((s, 2)),
                        "element of P^2+P^2 outside Q",
                    )
                });
            }
        }
    }
}

fn t2_9(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    let ring = match c.fundamental() {
        Ok(f) => f,
        Err(e) => {
            let e = e.clone();
            r.case(false, || w(vec![], vec![], None, e));
            return;
        }
    };
    for &q in &c.proper {
        match crate::fundamental::ideal_in_fundamental(h, ring, q, c.cfg.s_max, c.cfg.n_max) {
            Ok(fi) => {
                for e in &fi.transfer {
                    let note = format!(
                        "closed in G: {}, closed in G/γ*: {}, image {}",
                        e.closed_in_ring, e.closed_in_fundamental, fi.image
                    );
                    let elems = if e.closed_in_ring {
                        ring.closed_witness(fi.image, e.s, e.n)
                            .map(|k| ring.classes()[k].min().unwrap())
                            .into_iter()
                            .collect()
                    } else {
                        closed_elem(h, q, e.s, e.n)
                    };
                    r.case(e.closed_in_ring == e.closed_in_fundamental, || {
                        w(vec![q], elems, Some((e.s, e.n)), note)
                    });
                }
            }
            Err(e) => {
                r.case(false, || w(vec![q], vec![], None, e.to_string()));
            }
        }
    }
}

fn r2_rad(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for (i, &q) in c.proper.iter().enumerate() {
        let rad = radical(h, q);
        let all_closed = c.profile(i).is_everything_closed();
        let note = format!("rad(Q) = {rad}, every pair closed: {all_closed}");
        r.case((rad == q) == all_closed, || {
            w(vec![q, rad], vec![], None, note)
        });
    }
}

fn x1_das(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for (i, &q) in c.proper.iter().enumerate() {
        let d = power_members_d(h, q);
        let rad = radical(h, q);
        r.case(d.is_subset(rad), || {
            w(vec![q, d, rad], vec![], None, "D ⊄ rad")
        });
        if c.is_c(i) {
            r.case(d == rad, || {
                w(vec![q, d, rad], vec![], None, "C-hyperideal with D ≠ rad")
            });
        }
    }
}

fn t2_10(c: &Ctx, r: &mut Recorder) {
    for (i, &q) in c.proper.iter().enumerate() {
        for s in 1..=c.s_all() {
            for n in 1..=c.n_all() {
                if s != n && c.closed(i, s, n) && c.closed(i, s + 1, n + 1) {
                    r.case(c.closed(i, s + 1, n), || {
                        w(
                            vec![q],
                            closed_elem(c.ring(), q, s + 1, n),
                            Some((s, n)),
                            "",
                        )
                    });
                }
            }
        }
    }
}

fn l2_11(c: &Ctx, r: &mut Recorder) {
    let b = c.s_all().max(c.n_all());
    for (i, &q) in c.proper.iter().enumerate() {
        for s in 1..=b {
            for n in 1..=b {
                if !c.closed(i, s, n) {
                    continue;
                }
                for s2 in 1..=s {
                    for n2 in n..=b {
                        r.case(c.closed(i, s2, n2), || {
                            w(
                                vec![q],
                                closed_elem(c.ring(), q, s2, n2),
                                Some((s, n)),
                                format!("fails at ({s2},{n2})"),
                            )
                        });
                    }
                }
            }
        }
    }
}

fn t2_12i(c: &Ctx, r: &mut Recorder) {
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_c(i) {
            continue;
        }
        for n in 3..=c.s_all() {
            if c.closed(i, n, 2) && c.closed(i, n + 1, 2) {
                let omega = c.profile(i).Omega(2);
                let note = format!("Ω(2) = {omega}");
                r.case(omega.is_infinite(), || {
                    w(
                        vec![q],
                        closed_elem(c.ring(), q, omega.finite().unwrap_or(0) + 1, 2),
                        Some((n, 2)),
                        note,
                    )
                });
            }
        }
    }
}

fn t2_12ii(c: &Ctx, r: &mut Recorder) {
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_c(i) {
            continue;
        }
        for s in 1..=c.s_all() {
            for n in 1..=s / 2 {
                if c.closed(i, s, n) {
                    let omega = c.profile(i).Omega(n);
                    let note = format!("Ω({n}) = {omega}");
                    r.case(omega.is_infinite(), || {
                        w(
                            vec![q],
                            closed_elem(c.ring(), q, omega.finite().unwrap_or(0) + 1, n),
                            Some((s, n)),
                            note,
                        )
                    });
                }
            }
        }
    }
}

/// `𝔠(P) ⊆ 𝔠(Q)`, `ω_Q <= ω_P` and `Ω_P <= Ω_Q`, decided on a range that
/// covers every exponent.
fn containments(c: &Ctx, p: usize, q: usize) -> (bool, bool, bool) {
    let e = c.bound() + 1;
    let (pp, pq) = (c.profile(p), c.profile(q));
    let sub = (1..=e).all(|s| (1..=e).all(|n| !pp.is_closed(s, n) || pq.is_closed(s, n)));
    let omega = (1..=e).all(|s| pq.omega(s) <= pp.omega(s));
    let big = (1..=e).all(|n| pp.Omega(n) <= pq.Omega(n));
    (sub, omega, big)
}

fn r2_omega(c: &Ctx, r: &mut Recorder) {
    for p in 0..c.proper.len() {
        for q in 0..c.proper.len() {
            let (sub, omega, big) = containments(c, p, q);
            let note = format!("C(P)⊆C(Q): {sub}, ω_Q ≤ ω_P: {omega}, Ω_P ≤ Ω_Q: {big}");
            r.case(sub == omega && omega == big, || {
                w(vec![c.proper[p], c.proper[q]], vec![], None, note)
            });
        }
    }
}

fn t2_13(c: &Ctx, r: &mut Recorder) {
    for (i, &q) in c.proper.iter().enumerate() {
        let p = c.profile(i);
        for s in 1..=c.s_all() {
            let (a, b) = (p.omega(s), p.omega(s + 1));
            if a < s {
                let note = format!("ω({s}) = {a}, ω({}) = {b}", s + 1);
                r.case(b == a || b >= a + 2, || {
                    w(vec![q], vec![], Some((s, a)), note)
                });
            }
        }
    }
}

fn t2_14(c: &Ctx, r: &mut Recorder) {
    for (i, &q) in c.proper.iter().enumerate() {
        let p = c.profile(i);
        for n in 1..=c.n_all() {
            let (a, b) = (p.Omega(n), p.Omega(n + 1));
            if a > Extended::Finite(n) {
                let holds = match (a, b) {
                    (Extended::Finite(x), Extended::Finite(y)) => y == x || y >= x + 2,
                    (Extended::Finite(_), Extended::Infinite) => true,
                    (Extended::Infinite, b) => b == Extended::Infinite,
                };
                let note = format!("Ω({n}) = {a}, Ω({}) = {b}", n + 1);
                r.case(holds, || {
                    w(vec![q], vec![], Some((a.finite().unwrap_or(0), n)), note)
                });
            }
        }
    }
}

/// Pairs of proper hyperideals with the index of their intersection.
fn pairs(c: &Ctx) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p in 0..c.proper.len() {
        for q in p..c.proper.len() {
            out.push((p, q, c.idx(c.proper[p].intersection(c.proper[q]))));
        }
    }
    out
}

fn t2_15(c: &Ctx, r: &mut Recorder) {
    let e = c.bound() + 1;
    for (p, q, pq) in pairs(c) {
        let (a, b, m) = (c.profile(p), c.profile(q), c.profile(pq));
        let ideals = vec![c.proper[p], c.proper[q]];
        for s in 1..=e {
            let note = format!(
                "ω_P∩Q = {}, ω_P = {}, ω_Q = {}",
                m.omega(s),
                a.omega(s),
                b.omega(s)
            );
            r.case(m.omega(s) <= a.omega(s).max(b.omega(s)), || {
                w(ideals.clone(), vec![], Some((s, m.omega(s))), note)
            });
        }
        for n in 1..=e {
            let note = format!(
                "Ω_P∩Q = {}, Ω_P = {}, Ω_Q = {}",
                m.Omega(n),
                a.Omega(n),
                b.Omega(n)
            );
            r.case(a.Omega(n).min(b.Omega(n)) <= m.Omega(n), || {
                w(
                    ideals.clone(),
                    vec![],
                    Some((m.Omega(n).finite().unwrap_or(0), n)),
                    note,
                )
            });
        }
    }
}

/// `ω_{P∩Q} = ω_P ∨ ω_Q`, `Ω_{P∩Q} = Ω_P ∧ Ω_Q`, and `𝔠(P)∩𝔠(Q) = 𝔠(P∩Q)`.
fn intersection_laws(c: &Ctx, p: usize, q: usize, pq: usize) -> (bool, bool, bool) {
    let e = c.bound() + 1;
    let (a, b, m) = (c.profile(p), c.profile(q), c.profile(pq));
    let omega = (1..=e).all(|s| m.omega(s) == a.omega(s).max(b.omega(s)));
    let big = (1..=e).all(|n| m.Omega(n) == a.Omega(n).min(b.Omega(n)));
    let pairs = (1..=e)
        .all(|s| (1..=e).all(|n| (a.is_closed(s, n) && b.is_closed(s, n)) == m.is_closed(s, n)));
    (omega, big, pairs)
}

fn t2_16(c: &Ctx, r: &mut Recorder) {
    for (p, q, pq) in pairs(c) {
        let (omega, _, pairs) = intersection_laws(c, p, q, pq);
        let note = format!("ω equality: {omega}, C equality: {pairs}");
        r.case(omega == pairs, || {
            w(vec![c.proper[p], c.proper[q]], vec![], None, note)
        });
    }
}

fn t2_17(c: &Ctx, r: &mut Recorder) {
    for (p, q, pq) in pairs(c) {
        let (_, big, pairs) = intersection_laws(c, p, q, pq);
        let note = format!("Ω equality: {big}, C equality: {pairs}");
        r.case(big == pairs, || {
            w(vec![c.proper[p], c.proper[q]], vec![], None, note)
        });
    }
}

fn c2_18(c: &Ctx, r: &mut Recorder) {
    for (p, q, pq) in pairs(c) {
        let (omega, big, _) = intersection_laws(c, p, q, pq);
        let note = format!("ω equality: {omega}, Ω equality: {big}");
        r.case(omega == big, || {
            w(vec![c.proper[p], c.proper[q]], vec![], None, note)
        });
    }
}

fn d3_w(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    let (sm, nm) = (c.cfg.s_max, c.cfg.n_max);
    for (i, &q) in c.proper.iter().enumerate() {
        for s in 1..=sm {
            for n in 1..=nm {
                if c.closed(i, s, n) {
                    r.case(c.weak(i, s, n), || {
                        w(
                            vec![q],
                            weak_elem(h, q, s, n),
                            Some((s, n)),
                            "closed but not weakly closed",
                        )
                    });
                }
                if c.weak(i, s, n) {
                    for n2 in n..=nm {
                        r.case(c.weak(i, s, n2), || {
                            w(
                                vec![q],
                                weak_elem(h, q, s, n2),
                                Some((s, n)),
                                format!("not weakly ({s},{n2})-closed"),
                            )
                        });
                    }
                }
            }
        }
    }
    for (p, q, pq) in pairs(c) {
        for s in 1..=sm {
            for n in 1..=nm {
                if c.weak(p, s, n) && c.weak(q, s, n) {
                    let inter = c.proper[pq];
                    r.case(c.weak(pq, s, n), || {
                        w(
                            vec![c.proper[p], c.proper[q]],
                            weak_elem(h, inter, s, n),
                            Some((s, n)),
                            "intersection not weakly closed",
                        )
                    });
                }
            }
        }
    }
}

fn r3_tz(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_c(i) {
            continue;
        }
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                if !c.weak(i, s, n) {
                    continue;
                }
                let tz = tough_zero_unchecked(h, q, s, n);
                let note = format!("closed: {}, tough-zero: {tz:?}", c.closed(i, s, n));
                r.case(c.closed(i, s, n) == tz.is_none(), || {
                    w(vec![q], tz.into_iter().collect(), Some((s, n)), note)
                });
            }
        }
    }
}

fn t3_4(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_strong_c(i) {
            continue;
        }
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                if !c.weak(i, s, n) {
                    continue;
                }
                for x in 0..h.order() {
                    if !(h.pow(x, s).contains(0) && !h.pow(x, n).is_subset(q)) {
                        continue;
                    }
                    for a in q.iter() {
                        r.case(h.pow(h.add(x, a), s).contains(0), || {
                            w(vec![q], vec![x, a], Some((s, n)), "0 ∉ (x+a)^s")
                        });
                    }
                }
            }
        }
    }
}

fn t3_5(c: &Ctx, r: &mut Recorder) {
    let nil = c.nil();
    for (i, &q) in c.proper.iter().enumerate() {
        if !c.is_strong_c(i) {
            continue;
        }
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                if c.weak(i, s, n) && !c.closed(i, s, n) {
                    let outside: Vec<Elem> = q.difference(nil).min().into_iter().collect();
                    r.case(q.is_subset(nil), || {
                        w(
                            vec![q, nil],
                            outside,
                            Some((s, n)),
                            "member of Q that is not nilpotent",
                        )
                    });
                }
            }
        }
    }
}

fn t3_6(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    let flags = h.flags();
    if !flags.strongly_distributive || h.scalar_identity().is_none() || has_i_set(h) != Some(true) {
        return;
    }
    let nil = c.nil();
    let inside: Vec<usize> = (0..c.proper.len())
        .filter(|&i| c.proper[i].is_subset(nil))
        .collect();
    for s in 2..=c.cfg.s_max {
        for n in 1..s.min(c.cfg.n_max + 1) {
            let lhs = inside.iter().all(|&i| c.weak(i, s, n));
            let rhs = nil.iter().all(|x| h.pow(x, s).contains(0));
            let note =
                format!("all hyperideals inside Υ weakly closed: {lhs}; 0 ∈ x^s on Υ: {rhs}");
            r.case(lhs == rhs, || w(vec![nil], vec![], Some((s, n)), note));
        }
    }
}

fn d3_reg(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    if h.order() > 6 {
        return;
    }
    let subsets: Vec<ElementSet> = (1u128..(1u128 << h.order()))
        .map(ElementSet::from_bits)
        .collect();
    for a in 0..h.order() {
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                let (pn, ps) = (h.pow(a, n), h.pow(a, s));
                let brute = subsets.iter().any(|&b| pn.is_subset(h.set_mul(ps, b)));
                let fast = is_sn_big_regular(h, a, s, n).expect("valid input");
                r.case(brute == fast, || {
                    w(
                        vec![],
                        vec![a],
                        Some((s, n)),
                        format!("subset search {brute}, carrier test {fast}"),
                    )
                });
            }
        }
    }
}

fn t3_9(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    let Some(e) = h.scalar_identity() else { return };
    if !h.flags().strongly_distributive {
        return;
    }
    let excluded = weak_zero_divisors(h).union(units_for(h, e));
    for a in h.carrier().difference(excluded).iter() {
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                let reg = is_sn_regular(h, a, s, n).expect("valid input");
                r.case(reg == (s <= n), || {
                    w(vec![], vec![a], Some((s, n)), format!("regular: {reg}"))
                });
            }
        }
    }
}

fn t3_10(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for a in 0..h.order() {
        for s in 2..=c.cfg.s_max {
            for n in 1..s.min(c.cfg.n_max + 1) {
                if is_sn_regular(h, a, s, n).expect("valid input") {
                    r.case(
                        is_sn_big_regular(h, a, s + 1, n).expect("valid input"),
                        || w(vec![], vec![a], Some((s, n)), "not Regular at (s+1, n)"),
                    );
                }
            }
        }
    }
}

fn t3_11(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    for &e in h.identities() {
        for a in units_for(h, e).iter() {
            for s in 1..=c.cfg.s_max {
                for n in 1..=c.cfg.n_max {
                    r.case(is_sn_big_regular(h, a, s, n).expect("valid input"), || {
                        w(
                            vec![],
                            vec![a, e],
                            Some((s, n)),
                            "unit for identity e is not Regular",
                        )
                    });
                }
            }
        }
    }
}

fn t3_12(c: &Ctx, r: &mut Recorder) {
    let h = c.ring();
    if !h.flags().strongly_distributive || has_i_set(h) != Some(true) {
        return;
    }
    let nil = c.nil();
    for s in 2..=c.cfg.s_max {
        for n in 1..s.min(c.cfg.n_max + 1) {
            let lhs = (0..c.proper.len()).all(|i| c.weak(i, s, n));
            let regular = h
                .carrier()
                .difference(nil)
                .iter()
                .all(|a| is_sn_big_regular(h, a, s, n).expect("valid input"));
            let zero = nil.iter().all(|a| h.pow(a, s).contains(0));
            let note = format!("all proper hyperideals weakly closed: {lhs}; non-nilpotents Regular: {regular}; 0 ∈ a^s on Υ: {zero}");
            r.case(lhs == (regular && zero), || {
                w(vec![nil], vec![], Some((s, n)), note)
            });
        }
    }
}

struct Map {
    name: String,
    source: Arc<FiniteHyperring>,
    target: Arc<FiniteHyperring>,
    map: Vec<Elem>,
}

fn maps_for(c: &Ctx) -> Vec<Map> {
    let h = Arc::clone(c.h);
    let n = h.order();
    let mut out = vec![Map {
        name: "identity".into(),
        source: Arc::clone(&h),
        target: Arc::clone(&h),
        map: (0..n).collect(),
    }];
    if h.meta().m.is_some() {
        for k in 2..n {
            let map: Vec<Elem> = (0..n).map(|x| x * k % n).collect();
            if check_good_hom(&h, &h, &map) {
                out.push(Map {
                    name: format!("x ↦ {k}x"),
                    source: Arc::clone(&h),
                    target: Arc::clone(&h),
                    map,
                });
            }
        }
    }
    for &p in &c.proper {
        if p.len() == 1 {
            continue;
        }
        if let Ok((q, pi)) = quotient_by_ideal(&h, p) {
            out.push(Map {
                name: format!("projection onto G/{p}"),
                source: Arc::clone(&h),
                target: q,
                map: pi.map().to_vec(),
            });
        }
    }
    if let Some((a, b)) = h.components() {
        let nb = b.order();
        let candidates = [
            (
                "embedding of the first factor",
                Arc::clone(a),
                Arc::clone(&h),
                (0..a.order()).map(|x| x * nb).collect::<Vec<_>>(),
            ),
            (
                "embedding of the second factor",
                Arc::clone(b),
                Arc::clone(&h),
                (0..nb).collect(),
            ),
            (
                "projection to the first factor",
                Arc::clone(&h),
                Arc::clone(a),
                (0..n).map(|x| x / nb).collect(),
            ),
            (
                "projection to the second factor",
                Arc::clone(&h),
                Arc::clone(b),
                (0..n).map(|x| x % nb).collect(),
            ),
        ];
        for (name, source, target, map) in candidates {
            if check_good_hom(&source, &target, &map) {
                out.push(Map {
                    name: name.into(),
                    source,
                    target,
                    map,
                });
            }
        }
    }
    out
}

fn t3_13hom(c: &Ctx, r: &mut Recorder) {
    let (sm, nm) = (c.cfg.s_max, c.cfg.n_max);
    for m in maps_for(c) {
        let (g1, g2) = (&m.source, &m.target);
        let image = hom_image(&m.map, g1.carrier());
        let injective = image.len() == g1.order();
        let surjective = image == g2.carrier();
        if injective {
            for &q2 in all_hyperideals(g2) {
                let pre = hom_preimage(&m.map, q2);
                if q2 == g2.carrier() || pre == g1.carrier() {
                    continue;
                }
                for s in 1..=sm {
                    for n in 1..=nm {
                        if weak_in(g2, q2, s, n) {
                            let holds = is_hyperideal(g1, pre) && weak_in(g1, pre, s, n);
                            let note = format!("{}: preimage {pre} of {q2}", m.name);
                            r.case(holds, || {
                                w(vec![q2, pre], weak_elem(g1, pre, s, n), Some((s, n)), note)
                            });
                        }
                    }
                }
            }
        }
        if surjective {
            let kernel = hom_preimage(&m.map, ElementSet::singleton(0));
            for &q1 in all_hyperideals(g1) {
                if q1 == g1.carrier() || !kernel.is_subset(q1) {
                    continue;
                }
                let img = hom_image(&m.map, q1);
                for s in 1..=sm {
                    for n in 1..=nm {
                        if weak_in(g1, q1, s, n) {
                            let holds = img != g2.carrier()
                                && is_hyperideal(g2, img)
                                && weak_in(g2, img, s, n);
                            let note = format!("{}: image {img} of {q1}", m.name);
                            r.case(holds, || {
                                w(vec![q1, img], weak_elem(g2, img, s, n), Some((s, n)), note)
                            });
                        }
                    }
                }
            }
        }
    }
}

fn c3_quot(c: &Ctx, r: &mut Recorder) {
    let h = c.h;
    for &p in &c.proper {
        let Ok((g2, pi)) = quotient_by_ideal(h, p) else {
            continue;
        };
        for (i, &q) in c.proper.iter().enumerate() {
            if !p.is_subset(q) {
                continue;
            }
            let img = pi.image(q);
            for s in 1..=c.cfg.s_max {
                for n in 1..=c.cfg.n_max {
                    if c.weak(i, s, n) {
                        r.case(weak_in(&g2, img, s, n), || {
                            w(
                                vec![p, q],
                                weak_elem(&g2, img, s, n),
                                Some((s, n)),
                                "witness is a coset index of G/P",
                            )
                        });
                    }
                }
            }
        }
    }
}

fn scalar_components<'a>(
    c: &Ctx<'a>,
) -> Option<(&'a Arc<FiniteHyperring>, &'a Arc<FiniteHyperring>)> {
    let (a, b) = c.h.components()?;
    (a.scalar_identity().is_some() && b.scalar_identity().is_some()).then_some((a, b))
}

fn t3_14(c: &Ctx, r: &mut Recorder) {
    let Some((a, b)) = scalar_components(c) else {
        return;
    };
    let h = c.ring();
    let nb = b.order();
    for first in [true, false] {
        let (factor, other) = if first { (a, b) } else { (b, a) };
        for &q1 in all_hyperideals(factor) {
            if q1 == factor.carrier() || !is_c_hyperideal(factor, q1) {
                continue;
            }
            let q = if first {
                product_set(nb, q1, other.carrier())
            } else {
                product_set(nb, other.carrier(), q1)
            };
            let qi = c.idx(q);
            for s in 1..=c.cfg.s_max {
                for n in 1..=c.cfg.n_max {
                    let (i, ii, iii) = (
                        c.weak(qi, s, n),
                        closed_impl(factor, q1, s, n),
                        c.closed(qi, s, n),
                    );
                    let note = format!("factor {}: weakly closed product {i}, closed factor ideal {ii}, closed product {iii}", if first { 1 } else { 2 });
                    r.case(i == ii && ii == iii, || {
                        w(vec![q1, q], closed_elem(h, q, s, n), Some((s, n)), note)
                    });
                }
            }
        }
    }
}

fn l3_15(c: &Ctx, r: &mut Recorder) {
    let Some((a, b)) = c.h.components() else {
        return;
    };
    let h = c.ring();
    for &i1 in all_hyperideals(a) {
        for &i2 in all_hyperideals(b) {
            let prod = product_set(b.order(), i1, i2);
            let lhs = is_c_hyperideal(a, i1) && is_c_hyperideal(b, i2);
            let rhs = is_c_hyperideal(h, prod);
            let note = format!("factors C: {lhs}, product C: {rhs}");
            r.case(lhs == rhs, || w(vec![i1, i2, prod], vec![], None, note));
        }
    }
}

/// Condition (1) of the product characterization with `Q1` in the factor
/// that may fail closedness and `Q2` in the other one.
fn product_condition(
    g1: &FiniteHyperring,
    q1: ElementSet,
    g2: &FiniteHyperring,
    q2: ElementSet,
    s: usize,
    n: usize,
) -> bool {
    if q1 == g1.carrier() || !weak_in(g1, q1, s, n) || closed_impl(g1, q1, s, n) {
        return false;
    }
    let forced_zero = (0..g2.order()).all(|b| {
        let p = g2.pow(b, s);
        !p.is_subset(q2) || p.contains(0)
    });
    let premise = (0..g1.order()).any(|a| {
        let p = g1.pow(a, s);
        !p.contains(0) && p.is_subset(q1)
    });
    forced_zero && (!premise || closed_impl(g2, q2, s, n))
}

fn t3_16(c: &Ctx, r: &mut Recorder) {
    let Some((a, b)) = scalar_components(c) else {
        return;
    };
    let nb = b.order();
    for (i, &q) in c.proper.iter().enumerate() {
        let (q1, q2) = project_set(nb, q);
        let decomposes = product_set(nb, q1, q2) == q
            && is_hyperideal(a, q1)
            && is_hyperideal(b, q2)
            && is_c_hyperideal(a, q1)
            && is_c_hyperideal(b, q2);
        for s in 1..=c.cfg.s_max {
            for n in 1..=c.cfg.n_max {
                let lhs = c.is_c(i) && c.weak(i, s, n) && !c.closed(i, s, n);
                let rhs = decomposes
                    && (product_condition(a, q1, b, q2, s, n)
                        || product_condition(b, q2, a, q1, s, n));
                let note = format!("weakly-not-closed C-hyperideal: {lhs}; product form: {rhs}");
                r.case(lhs == rhs, || {
                    w(vec![q, q1, q2], vec![], Some((s, n)), note)
                });
            }
        }
    }
}

macro_rules! check {
    ($id:literal, $run:ident, $statement:literal) => {
        CheckDef {
            id: $id,
            statement: $statement,
            reading: None,
            run: $run,
        }
    };
    ($id:literal, $run:ident, $statement:literal, $reading:literal) => {
        CheckDef {
            id: $id,
            statement: $statement,
            reading: Some($reading),
            run: $run,
        }
    };
}

static REGISTRY: [CheckDef; 36] = [
    check!("T2_3", t2_3, "an n-absorbing C-hyperideal is (s,n)-closed for every s"),
    check!("T2_4", t2_4, "for primes Q_1..Q_t the product Q_1∘..∘Q_t is (s,n)-closed whenever min{s,t} <= n",
        "the product of hyperideals is the hyperideal generated by the set product"),
    check!("T2_5i", t2_5i, "if Q_i is (s_i,n_i)-closed then Q_1∘..∘Q_t is (s,n)-closed for s <= min s_i and n >= min{s, n_1+..+n_t}"),
    check!("T2_5ii", t2_5ii, "if Q_i is (s_i,n_i)-closed then Q_1∩..∩Q_t is (s,n)-closed for s <= min s_i and n >= min{s, max n_i}"),
    check!("C2_6", c2_6, "an intersection of (s,n)-closed hyperideals is (s,n)-closed"),
    check!("C2_7", c2_7, "a product of pairwise coprime (s,n)-closed hyperideals is (s,n)-closed"),
    check!("T2_8", t2_8, "if Q is an (s,2)-closed strong C-hyperideal and P^s ⊆ Q then P^2+P^2 ⊆ Q",
        "P^s and P^2 are the raw unions of s-fold and 2-fold products of members of P"),
    check!("T2_9", t2_9, "Q is (s,n)-closed in G iff Q/γ* is (s,n)-closed in G/γ*"),
    check!("R2_rad", r2_rad, "rad(Q) = Q iff Q is (s,n)-closed for every pair (s,n)"),
    check!("X1_das", x1_das, "D = {r : r^k ⊆ I} is contained in rad(I), with equality for C-hyperideals"),
    check!("T2_10", t2_10, "(s,n) and (s+1,n+1) closed with s ≠ n imply (s+1,n) closed"),
    check!("L2_11", l2_11, "(s,n) closed implies (s',n') closed for s' <= s and n' >= n"),
    check!("T2_12i", t2_12i, "for a C-hyperideal, (n,2) and (n+1,2) closed with n >= 3 imply (t,2) closed for every t"),
    check!("T2_12ii", t2_12ii, "for a C-hyperideal, (s,n) closed with 2n <= s implies (t,n) closed for every t"),
    check!("R2_omega", r2_omega, "C(P) ⊆ C(Q) iff ω_Q <= ω_P iff Ω_P <= Ω_Q",
        "the stated form pairs C(P) ⊆ C(Q) with ω_P <= ω_Q; inclusion of closed-pair sets lowers ω, so the ω comparison is checked in the direction ω_Q <= ω_P"),
    check!("T2_13", t2_13, "if ω(s) < s then ω(s+1) = ω(s) or ω(s+1) >= ω(s)+2"),
    check!("T2_14", t2_14, "if Ω(n) > n then Ω(n+1) = Ω(n) or Ω(n+1) >= Ω(n)+2"),
    check!("T2_15", t2_15, "ω_{P∩Q} <= ω_P ∨ ω_Q and Ω_P ∧ Ω_Q <= Ω_{P∩Q}"),
    check!("T2_16", t2_16, "ω_{P∩Q} = ω_P ∨ ω_Q iff C(P) ∩ C(Q) = C(P∩Q)"),
    check!("T2_17", t2_17, "Ω_{P∩Q} = Ω_P ∧ Ω_Q iff C(P) ∩ C(Q) = C(P∩Q)"),
    check!("C2_18", c2_18, "ω_{P∩Q} = ω_P ∨ ω_Q iff Ω_{P∩Q} = Ω_P ∧ Ω_Q"),
    check!("D3_w", d3_w, "closed implies weakly closed; weakly (s,n) implies weakly (s,n') for n' >= n; intersections of weakly (s,n)-closed hyperideals are weakly (s,n)-closed"),
    check!("R3_tz", r3_tz, "a weakly (s,n)-closed C-hyperideal fails (s,n)-closedness iff it has an (s,n)-tough-zero element"),
    check!("T3_4", t3_4, "for a weakly (s,n)-closed strong C-hyperideal Q and an (s,n)-tough-zero x, 0 ∈ (x+a)^s for every a in Q"),
    check!("T3_5", t3_5, "a weakly (s,n)-closed strong C-hyperideal that is not (s,n)-closed lies inside the nilpotents",
        "the exponent pair in the non-closedness hypothesis is taken to be (s,n)"),
    check!("T3_6", t3_6, "strongly distributive, scalar identity, an i-set, s > n: every proper hyperideal inside Υ is weakly (s,n)-closed iff 0 ∈ x^s for every nilpotent x",
        "only proper hyperideals can be weakly closed, so hyperideals equal to the carrier are excluded"),
    check!("D3_reg", d3_reg, "a^n ⊆ a^s∘B for some subset B iff a^n ⊆ a^s∘G (orders up to 6, exhaustive over subsets)"),
    check!("T3_9", t3_9, "strongly distributive with scalar identity: a outside Z_w ∪ U is (s,n)-regular iff s <= n"),
    check!("T3_10", t3_10, "(s,n)-regular with s > n implies (s+1,n)-Regular"),
    check!("T3_11", t3_11, "units are (s,n)-Regular for every s and n",
        "checked for the unit group of every identity element"),
    check!("T3_12", t3_12, "strongly distributive with an i-set, s > n: every proper hyperideal is weakly (s,n)-closed iff every non-nilpotent is (s,n)-Regular and 0 ∈ a^s on Υ"),
    check!("T3_13hom", t3_13hom, "good homomorphisms: injective preimages and surjective images (kernel inside Q) of weakly (s,n)-closed hyperideals are weakly (s,n)-closed",
        "maps tried: identity, x ↦ kx on residue rings, quotient projections, factor embeddings and projections; proper preimages only"),
    check!("C3_quot", c3_quot, "P ⊆ Q with Q weakly (s,n)-closed implies Q/P weakly (s,n)-closed in G/P",
        "quotients whose coset product depends on representatives are skipped"),
    check!("T3_14", t3_14, "factors with scalar identities, Q_1 a C-hyperideal: Q_1×G_2 weakly (s,n)-closed iff Q_1 (s,n)-closed iff Q_1×G_2 (s,n)-closed",
        "checked for both factor positions"),
    check!("L3_15", l3_15, "I_1 and I_2 are C-hyperideals iff I_1×I_2 is a C-hyperideal"),
    check!("T3_16", t3_16, "factors with scalar identities: Q is a weakly (s,n)-closed, not (s,n)-closed C-hyperideal iff Q = Q_1×Q_2 with C-hyperideals satisfying one of the two mixed conditions",
        "a factor ideal equal to its carrier counts as (s,n)-closed when the implication holds"),
];

pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}
