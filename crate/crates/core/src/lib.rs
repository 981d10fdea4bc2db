//! Palindromic defect of finite words and of fixed points of primitive
//! morphisms, together with the combinatorial machinery around it:
//! factor languages with extension sets, extension graphs, return words,
//! morphism conjugacy and markedness.
//!
//! Infinite words are never materialized; they are represented by a
//! [`Morphism`] plus a seed letter, and every statement about them is checked
//! on finite prefixes or on a [`LanguageSnapshot`] bounded by `n_max`.

pub mod corpus;
pub mod error;
pub mod graphs;
pub mod language;
pub mod morphism;
pub mod oracle;
pub mod palindrome;
pub mod returns;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use language::LanguageSnapshot;
pub use morphism::Morphism;
pub use palindrome::{DefectReport, PalIndex};
pub use word::{Alphabet, Letter, Word};
