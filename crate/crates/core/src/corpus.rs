//! Named morphisms used throughout the tests and the CLI corpus.

use crate::morphism::{Coding, Morphism};
use crate::word::{Alphabet, Word};

fn rules(r: &[(char, &str)]) -> Morphism {
    Morphism::from_rules(r).expect("built-in morphism is well formed")
}

/// `0 ↦ 01, 1 ↦ 0`
pub fn fibonacci() -> Morphism {
    rules(&[('0', "01"), ('1', "0")])
}

/// `0 ↦ 01, 1 ↦ 10`
pub fn thue_morse() -> Morphism {
    rules(&[('0', "01"), ('1', "10")])
}

/// `a ↦ aabcacba, b ↦ aa, c ↦ a`: finite positive defect, aperiodic.
pub fn bucci_vaslet() -> Morphism {
    rules(&[('a', "aabcacba"), ('b', "aa"), ('c', "a")])
}

/// `z = 0 1^k 0 1^(k-1) 0 0 1^(k-1) 0 1^k 0`.
pub fn z_word(k: usize) -> String {
    assert!(k >= 2, "z-family needs k >= 2");
    let ones = |n: usize| "1".repeat(n);
    format!("0{}0{}00{}0{}0", ones(k), ones(k - 1), ones(k - 1), ones(k))
}

/// `0 ↦ z, 1 ↦ z`, whose fixed point `z^ω` has defect `k`.
pub fn z_family(k: usize) -> Morphism {
    let z = z_word(k);
    rules(&[('0', &z), ('1', &z)])
}

/// `a ↦ aca, b ↦ cab, c ↦ b`
pub fn hks_counterexample() -> Morphism {
    rules(&[('a', "aca"), ('b', "cab"), ('c', "b")])
}

/// `a ↦ abab, b ↦ abb`
pub fn conjugacy_example() -> Morphism {
    rules(&[('a', "abab"), ('b', "abb")])
}

/// `a ↦ aba, b ↦ bab`: acyclic with a periodic fixed point.
pub fn aba_bab() -> Morphism {
    rules(&[('a', "aba"), ('b', "bab")])
}

/// `μ: a ↦ ap, p ↦ apaaaapaaaap` and the coding `π: a ↦ a, p ↦ abcacba`
/// into the alphabet of [`bucci_vaslet`].
pub fn section8_mu_pi() -> (Morphism, Coding) {
    let mu = rules(&[('a', "ap"), ('p', "apaaaapaaaap")]);
    let target = bucci_vaslet().alphabet().clone();
    let images = vec![
        Word::parse(&target, "a").unwrap(),
        Word::parse(&target, "abcacba").unwrap(),
    ];
    let pi = Coding::new(mu.alphabet(), &target, images).unwrap();
    (mu, pi)
}

/// Alphabet `{0, 1}` in that order.
pub fn binary() -> std::sync::Arc<Alphabet> {
    Alphabet::new(['0', '1']).unwrap()
}
