//! Brute-force reference computations used to cross-check the indexed ones.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{is_palindrome_slice, Word};

pub const ORACLE_BOUND: usize = 2000;

/// Every non-empty palindromic factor of `w`, by enumerating all substrings.
pub fn brute_distinct_palindromes(w: &Word) -> Result<BTreeSet<Word>> {
    brute_distinct_palindromes_bounded(w, ORACLE_BOUND)
}

pub fn brute_distinct_palindromes_bounded(w: &Word, bound: usize) -> Result<BTreeSet<Word>> {
    if w.len() > bound {
        return Err(Error::OracleBound {
            len: w.len(),
            bound,
        });
    }
    let letters = w.letters();
    let mut out = BTreeSet::new();
    for start in 0..letters.len() {
        for end in start + 1..=letters.len() {
            if is_palindrome_slice(&letters[start..end]) {
                out.insert(w.slice(start..end));
            }
        }
    }
    Ok(out)
}

/// `|w| + 1 − #palindromic factors (ε included)`, from the brute-force set.
pub fn brute_defect(w: &Word) -> Result<usize> {
    Ok(w.len() + 1 - (brute_distinct_palindromes(w)?.len() + 1))
}
