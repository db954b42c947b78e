use thiserror::Error;

use crate::axioms::AxiomReport;
use crate::element_set::{Elem, ElementSet};

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed tables: {0}")]
    MalformedTables(String),

    #[error("tables do not define a commutative multiplicative hyperring: {}", .0.summary())]
    AxiomFailure(Box<AxiomReport>),

    #[error("hyperproduct operand is empty")]
    EmptyOperand,

    #[error("powers start at exponent 1, got 0")]
    ZeroExponent,

    #[error("element {elem} is outside a carrier of order {order}")]
    ElementOutOfRange { elem: Elem, order: usize },

    #[error("order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("{0} is not a hyperideal")]
    NotAHyperideal(ElementSet),

    #[error("a proper hyperideal is required")]
    ProperIdealRequired,

    #[error("coset product ({left})({right}) depends on the chosen representatives")]
    QuotientNotWellDefined { left: Elem, right: Elem },

    #[error("not a good homomorphism: {0}")]
    NotGoodHomomorphism(String),

    #[error("fundamental-ring operation is not well defined on classes {left} and {right}")]
    WellDefinednessFailure { left: usize, right: usize },

    #[error("fundamental ring violates {axiom} at {witness:?}")]
    FundamentalRingAxiom {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("image of {0} is not an ideal of the fundamental ring")]
    ImageNotIdeal(ElementSet),

    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
