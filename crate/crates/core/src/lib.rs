//! Finite-model engine for commutative multiplicative hyperrings.
//!
//! The crate builds finite hyperrings (explicit tables, residue
//! constructions `ℤ_m` with `a∘b = {a·x·b}`, products and quotients),
//! classifies their hyperideals, computes (weakly) `(s,n)`-closedness and
//! the `ω`/`Ω` profiles, constructs the fundamental ring, and checks a
//! registry of structural theorems over generated instance families.

pub mod axioms;
pub mod closedness;
pub mod element_set;
pub mod error;
pub mod fundamental;
pub mod harness;
pub mod hom;
pub mod hyperring;
pub mod ideal;
pub mod json;
pub mod residue;
mod union_find;

pub use axioms::{validate_axioms, Axiom, AxiomFlags, AxiomReport, RawTables};
pub use closedness::{closed_profile, is_sn_closed, is_weakly_sn_closed, ClosedProfile, Extended};
pub use element_set::{Elem, ElementSet, MAX_ORDER};
pub use error::{Error, Result};
pub use fundamental::{fundamental_ring, ideal_in_fundamental, FundamentalRing};
pub use hom::{check_good_hom, hom_image, hom_preimage, quotient_by_ideal, HomMap};
pub use hyperring::{
    make_zx_mod, power_profile, product_ring, Family, FiniteHyperring, PowerProfile, RingMeta,
};
pub use ideal::{Hyperideal, IdealClass, ProductClass};
pub use json::{hyperring_to_json, parse_hyperring, HyperringDoc};
pub use residue::ZxResidueModel;
