use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::axioms::RawTables;
use crate::element_set::ElementSet;
use crate::hyperring::{make_zx_mod, product_ring, FiniteHyperring, RingMeta};

use super::config::SuiteConfig;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RandomStats {
    pub attempted: usize,
    pub accepted: usize,
}

/// Validated instances in a deterministic order (ascending order, then
/// generation order), with duplicate tables removed.
#[derive(Clone, Debug)]
pub struct InstanceSet {
    pub instances: Vec<Arc<FiniteHyperring>>,
    pub random: RandomStats,
}

fn table_key(h: &FiniteHyperring) -> (Vec<usize>, Vec<u128>) {
    let n = h.order();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(h.add(a, b));
            mul.push(h.mul(a, b).bits());
        }
    }
    (add, mul)
}

fn subsets_up_to(items: &[i64], k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(items: &[i64], start: usize, k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, k, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[allow(clippy::needless_range_loop)]
fn random_table(rng: &mut ChaCha8Rng, n: usize) -> RawTables {
    let add = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mut mul = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in a..n {
            let bits: u128 = rng.gen_range(1..(1u128 << n));
            let entry = ElementSet::from_bits(bits).to_vec();
            mul[a][b] = entry.clone();
            mul[b][a] = entry;
        }
    }
    RawTables { add, mul }
}

pub fn generate_instances(config: &SuiteConfig) -> InstanceSet {
    let mut seen = HashSet::new();
    let mut base: Vec<Arc<FiniteHyperring>> = Vec::new();
    let mut push = |h: FiniteHyperring, out: &mut Vec<Arc<FiniteHyperring>>| {
        if h.order() <= config.max_order && seen.insert(table_key(&h)) {
            out.push(Arc::new(h));
        }
    };
    if config.seeds {
        push(
            make_zx_mod(4, &[2]).expect("valid").with_name("H1"),
            &mut base,
        );
        push(
            make_zx_mod(4, &[1, 3]).expect("valid").with_name("H3"),
            &mut base,
        );
    }
    for m in 2..=config.max_m {
        let items: Vec<i64> = (1..m as i64).collect();
        for x in subsets_up_to(&items, config.max_x) {
            push(
                make_zx_mod(m, &x).expect("residue hyperrings always validate"),
                &mut base,
            );
        }
    }
    let mut random = RandomStats::default();
    if config.random_tables > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..config.random_tables {
            let n = rng.gen_range(2..=4);
            random.attempted += 1;
            let raw = random_table(&mut rng, n);
            if let Ok(h) =
                FiniteHyperring::new(format!("R{}", random.attempted), &raw, RingMeta::table())
            {
                random.accepted += 1;
                push(h, &mut base);
            }
        }
    }
    let factors: Vec<Arc<FiniteHyperring>> = base
        .iter()
        .filter(|h| h.order() <= config.product_factor_max)
        .cloned()
        .collect();
    let mut all = base;
    for i in 0..factors.len() {
        for j in i..factors.len() {
            if factors[i].order() * factors[j].order() > config.max_order {
                continue;
            }
            let p =
                product_ring(&factors[i], &factors[j]).expect("products of hyperrings validate");
            push(p, &mut all);
        }
    }
    // Stable: ties keep generation order.
    all.sort_by_key(|h| h.order());
    InstanceSet {
        instances: all,
        random,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_set_contains_seeds_and_products() {
        let set = generate_instances(&SuiteConfig::default());
        let names: Vec<&str> = set.instances.iter().map(|h| h.name()).collect();
        assert!(names.contains(&"H1"));
        assert!(names.contains(&"(H1)x(H3)"));
        assert!(set
            .instances
            .windows(2)
            .all(|w| w[0].order() <= w[1].order()));
        assert!(!names.contains(&"Z4[X={2}]"));
    }

    #[test]
    fn empty_config_has_no_instances() {
        assert!(generate_instances(&SuiteConfig::empty())
            .instances
            .is_empty());
    }

    #[test]
    fn random_mode_is_reproducible_and_validated() {
        let cfg = SuiteConfig {
            random_tables: 200,
            product_factor_max: 0,
            max_m: 0,
            seeds: false,
            ..SuiteConfig::default()
        };
        let a = generate_instances(&cfg);
        let b = generate_instances(&cfg);
        assert_eq!(a.random, b.random);
        assert!(a.random.accepted > 0);
        for h in &a.instances {
            assert!(crate::axioms::validate_axioms(&h.raw_tables())
                .unwrap()
                .is_hyperring());
        }
    }
}
