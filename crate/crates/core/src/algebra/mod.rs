//! Words in `T^±1, L_n, W_n`, basis monomials, and the normal-ordering engine.

mod element;
mod generator;
mod rewrite;

pub(crate) use element::fmt_scaled_term;
pub use element::{Element, NormalWord, NumericElement};
pub use generator::{check_index, Generator, Word, INDEX_CAP};
pub use rewrite::{
    classical_limit, element_from, multiply, normalize, q_bracket, Algebra, DeformationProfile,
    Source,
};
