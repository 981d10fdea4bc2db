use super::{conjugacy_word, leftmost_conjugate, rightmost_conjugate, Morphism};
use crate::error::{Error, Result};
use crate::word::Word;

/// `u ↦ p_R(u)·w` where `w` is the conjugacy word of `p_L ▷ p_R`.
///
/// Only defined for morphisms whose extreme conjugates satisfy
/// `Fst(p_L) = Lst(p_R) = Id`; use [`super::well_marked_power`] to get one.
#[derive(Debug, Clone)]
pub struct PhiMap {
    left: Morphism,
    right: Morphism,
    word: Word,
}

impl PhiMap {
    pub fn new(p: &Morphism) -> Result<Self> {
        let (left, wl) = leftmost_conjugate(p).map_err(|_| Error::PhiPrecondition)?;
        let (right, wr) = rightmost_conjugate(p).map_err(|_| Error::PhiPrecondition)?;
        if !left.fst().is_identity() || !right.lst().is_identity() {
            return Err(Error::PhiPrecondition);
        }
        let word = conjugacy_word(&left, &right).unwrap_or(wr.concat(&wl)?);
        Ok(PhiMap { left, right, word })
    }

    pub fn leftmost(&self) -> &Morphism {
        &self.left
    }

    pub fn rightmost(&self) -> &Morphism {
        &self.right
    }

    /// Conjugacy word of `p_L ▷ p_R`; equals `Φ(ε)`.
    pub fn conjugacy_word(&self) -> &Word {
        &self.word
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        let out = self.right.apply(u)?.concat(&self.word)?;
        debug_assert_eq!(out, self.word.concat(&self.left.apply(u)?)?);
        Ok(out)
    }

    /// The other side of the conjugacy: `w·p_L(u)`.
    pub fn apply_via_left(&self, u: &Word) -> Result<Word> {
        self.word.concat(&self.left.apply(u)?)
    }
}

pub fn phi_map(p: &Morphism, u: &Word) -> Result<Word> {
    PhiMap::new(p)?.apply(u)
}
