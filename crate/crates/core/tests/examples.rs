use std::sync::Arc;

use hyperring_core::closedness::{
    closed_profile, find_tough_zero, is_sn_big_regular, is_sn_closed, is_sn_regular,
    is_weakly_sn_closed, sn_closed_witness, weakly_sn_closed_witness, Extended,
};
use hyperring_core::fundamental::{fundamental_ring, gamma_star_classes, ideal_in_fundamental};
use hyperring_core::ideal::{
    enumerate_hyperideals, find_i_sets, generate_hyperideal, ideal_product, is_c_hyperideal,
    is_coprime, is_hyperideal, is_maximal, is_n_absorbing, is_prime, is_strong_c_hyperideal,
    power_members_d, radical, units,
};
use hyperring_core::residue::{zx_residue_closed, ZxResidueModel};
use hyperring_core::{
    check_good_hom, make_zx_mod, product_ring, quotient_by_ideal, validate_axioms, ElementSet,
    Error, FiniteHyperring, RingMeta, MAX_ORDER,
};

fn set(xs: &[usize]) -> ElementSet {
    xs.iter().copied().collect()
}

fn h1() -> FiniteHyperring {
    make_zx_mod(4, &[2]).unwrap()
}

fn h3() -> FiniteHyperring {
    make_zx_mod(4, &[1, 3]).unwrap()
}

#[test]
fn seed_axiom_flags() {
    let f = h1().flags();
    assert!(f.is_hyperring && f.strongly_distributive && !f.has_identity);
    let h = h3();
    assert!(h.flags().is_hyperring && h.flags().has_identity && !h.flags().has_scalar_identity);
    assert_eq!(h.identity(), Some(1));
}

#[test]
fn corrupted_h1_is_rejected_with_a_witness() {
    let mut raw = h1().raw_tables();
    raw.mul[1][1] = vec![1];
    let report = validate_axioms(&raw).unwrap();
    assert!(!report.is_hyperring());
    assert!(report.first_failure().unwrap().witness.is_some());
    assert!(matches!(
        FiniteHyperring::new("bad", &raw, RingMeta::table()),
        Err(Error::AxiomFailure(_))
    ));
}

#[test]
fn products_and_powers() {
    let (a, b) = (h1(), h3());
    assert_eq!(a.hyper_product(set(&[1]), set(&[1])).unwrap(), set(&[2]));
    assert_eq!(b.hyper_product(set(&[1]), set(&[1])).unwrap(), set(&[1, 3]));
    assert_eq!(
        a.hyper_product(set(&[0]), set(&[1, 2, 3])).unwrap(),
        set(&[0])
    );
    assert_eq!(a.power(1, 2).unwrap(), set(&[2]));
    assert_eq!(a.power(1, 3).unwrap(), set(&[0]));
    assert_eq!(b.power(1, 2).unwrap(), set(&[1, 3]));
    assert_eq!(b.power(1, 3).unwrap(), set(&[1, 3]));
    assert_eq!(a.power(3, 1).unwrap(), set(&[3]));
    assert!(matches!(a.power(1, 0), Err(Error::ZeroExponent)));
}

#[test]
fn product_ring_of_seeds() {
    let p = product_ring(&Arc::new(h1()), &Arc::new(h3())).unwrap();
    assert_eq!(p.order(), 16);
    // (1,1) encodes as 1·4+1 = 5; (2,1) = 9 and (2,3) = 11.
    assert_eq!(p.mul(5, 5), set(&[9, 11]));
}

#[test]
fn quotients_and_homomorphisms() {
    let h = Arc::new(h1());
    let (q, pi) = quotient_by_ideal(&h, set(&[0, 2])).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(q.mul(pi.apply(1), pi.apply(1)), set(&[pi.apply(0)]));
    assert!(check_good_hom(&h, &q, pi.map()));
    let (copy, _) = quotient_by_ideal(&h, set(&[0])).unwrap();
    assert_eq!(copy.order(), 4);
    assert!(check_good_hom(&h, &h, &[0, 1, 2, 3]));
    assert!(check_good_hom(&h, &h, &[0, 3, 2, 1]));
}

#[test]
fn hyperideals_of_the_seeds() {
    let h = h1();
    assert!(is_hyperideal(&h, set(&[0, 2])));
    assert!(!is_hyperideal(&h, set(&[0, 1])));
    assert!(is_hyperideal(&h, set(&[0])));
    assert_eq!(
        generate_hyperideal(&h, set(&[2])).unwrap().members(),
        set(&[0, 2])
    );
    assert_eq!(
        generate_hyperideal(&h, set(&[1])).unwrap().members(),
        h.carrier()
    );
    let ideals: Vec<ElementSet> = enumerate_hyperideals(&h, MAX_ORDER)
        .unwrap()
        .iter()
        .map(|i| i.members())
        .collect();
    assert_eq!(ideals, vec![set(&[0]), set(&[0, 2]), h.carrier()]);
    let h3_ideals: Vec<ElementSet> = enumerate_hyperideals(&h3(), MAX_ORDER)
        .unwrap()
        .iter()
        .map(|i| i.members())
        .collect();
    assert!(
        h3_ideals.contains(&set(&[0]))
            && h3_ideals.contains(&set(&[0, 2]))
            && h3_ideals.contains(&h3().carrier())
    );
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
}

#[test]
fn c_classes_and_absorbing() {
    let h = h1();
    assert!(is_c_hyperideal(&h, set(&[0])));
    assert!(is_strong_c_hyperideal(&h, set(&[0])));
    assert!(is_c_hyperideal(&h, set(&[0, 2])));
    assert!(!is_n_absorbing(&h, set(&[0]), 2).unwrap());
    assert!(!is_n_absorbing(&h, set(&[0, 2]), 1).unwrap());
    assert!(is_n_absorbing(&h, set(&[0, 2]), 2).unwrap());
}

#[test]
fn radical_units_isets_products() {
    let h = h1();
    assert_eq!(radical(&h, set(&[0])), h.carrier());
    assert_eq!(power_members_d(&h, set(&[0])), h.carrier());
    assert!(units(&h).is_none_or(|u| u.is_empty()));
    assert!(find_i_sets(&h, MAX_ORDER).unwrap().is_empty());
    assert!(find_i_sets(&h3(), MAX_ORDER).unwrap().contains(&set(&[1])));
    assert_eq!(
        ideal_product(&h, set(&[0, 2]), set(&[0, 2]))
            .unwrap()
            .members(),
        set(&[0])
    );
}

#[test]
fn closedness_of_h1_ideals() {
    let h = h1();
    assert!(is_sn_closed(&h, set(&[0, 2]), 3, 2).unwrap());
    assert_eq!(sn_closed_witness(&h, set(&[0]), 3, 2).unwrap(), Some(1));
    assert!(is_weakly_sn_closed(&h, set(&[0]), 3, 2).unwrap());
    assert_eq!(
        weakly_sn_closed_witness(&h, set(&[0, 2]), 2, 1).unwrap(),
        Some(1)
    );
    assert_eq!(find_tough_zero(&h, set(&[0]), 3, 2).unwrap(), Some(1));
    assert_eq!(find_tough_zero(&h, set(&[0, 2]), 3, 2).unwrap(), None);
    for s in 1..=5 {
        for n in s..=6 {
            assert!(is_sn_closed(&h, set(&[0]), s, n).unwrap());
            assert_eq!(find_tough_zero(&h, set(&[0]), s, n).unwrap(), None);
        }
    }
}

#[test]
fn profiles_of_h1_ideals() {
    let h = h1();
    let p = closed_profile(&h, set(&[0, 2]), Some(6), Some(6)).unwrap();
    assert_eq!(p.omega_table(), vec![1, 2, 2, 2, 2, 2]);
    assert_eq!(p.Omega(1), Extended::Finite(1));
    assert!(p.Omega_table()[1..].iter().all(|o| o.is_infinite()));
    let z = closed_profile(&h, set(&[0]), Some(6), Some(6)).unwrap();
    assert_eq!(z.omega_table(), vec![1, 2, 3, 3, 3, 3]);
}

#[test]
fn regularity_of_h1() {
    let h = h1();
    assert!(!is_sn_regular(&h, 1, 3, 2).unwrap());
    assert!(!is_sn_big_regular(&h, 1, 3, 2).unwrap());
}

#[test]
fn residue_witness_for_h1_modulus() {
    let m = ZxResidueModel::new(4, &[2]).unwrap();
    assert!(!zx_residue_closed(&m, 3, 2).unwrap());
    assert_eq!(m.closed_witness(3, 2).unwrap(), Some(1));
}

#[test]
fn gamma_star_of_seeds() {
    let singletons: Vec<ElementSet> = (0..4).map(ElementSet::singleton).collect();
    assert_eq!(gamma_star_classes(&h1()), singletons);
    assert_eq!(gamma_star_classes(&h3()), vec![set(&[0, 2]), set(&[1, 3])]);
}

#[test]
fn fundamental_rings_of_seeds() {
    let h = h1();
    let f = fundamental_ring(&h).unwrap();
    assert_eq!(f.order(), 4);
    for x in 0..4 {
        for y in 0..4 {
            let prod = f.classes()[f.mul(f.class_of(x), f.class_of(y))];
            assert_eq!(prod, h.mul(x, y));
        }
    }
    let g = fundamental_ring(&h3()).unwrap();
    assert_eq!(g.order(), 2);
    let one = g.class_of(1);
    assert_eq!(g.mul(one, one), one);
    let hh = product_ring(&Arc::new(h1()), &Arc::new(h1())).unwrap();
    assert_eq!(fundamental_ring(&hh).unwrap().order(), 16);
}

#[test]
fn fundamental_images() {
    let h = h1();
    let f = fundamental_ring(&h).unwrap();
    let fi = ideal_in_fundamental(&h, &f, set(&[0, 2]), 6, 6).unwrap();
    assert!(fi.transfer_holds());
    let z = ideal_in_fundamental(&h, &f, set(&[0]), 6, 6).unwrap();
    let e = z.transfer.iter().find(|e| (e.s, e.n) == (3, 2)).unwrap();
    assert!(!e.closed_in_ring && !e.closed_in_fundamental);
    let g = h3();
    let fg = fundamental_ring(&g).unwrap();
    let img = ideal_in_fundamental(&g, &fg, set(&[0, 2]), 6, 6).unwrap();
    assert_eq!(img.image, ElementSet::singleton(fg.zero()));
}

#[test]
fn h3_zero_ideal_transfer_disagrees() {
    let g = h3();
    let f = fundamental_ring(&g).unwrap();
    let fi = ideal_in_fundamental(&g, &f, set(&[0]), 6, 6).unwrap();
    let first = fi.first_disagreement().unwrap();
    assert_eq!((first.s, first.n), (2, 1));
    assert!(!first.closed_in_ring && first.closed_in_fundamental);
}
