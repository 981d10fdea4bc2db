use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::language::LanguageSnapshot;
use crate::morphism::{well_marked_power, Morphism, PhiMap};
use crate::word::Word;

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_RNG_SEED: u64 = 0x5eed;
/// Longest sampled factor is `POOL_N_MAX − 2`.
const POOL_N_MAX: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    /// `"I"` through `"V"`.
    pub id: &'static str,
    pub checked: usize,
    /// First sampled factor on which the property fails.
    pub failure: Option<Word>,
}

impl PropertyResult {
    fn new(id: &'static str) -> Self {
        PropertyResult {
            id,
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, u: &Word) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(u.clone());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatePalindromeCheck {
    pub conjugacy_word_is_palindrome: bool,
    /// Letters `a` with `~p_R(a) ≠ p_L(a)`.
    pub mismatched_letters: Vec<char>,
}

impl ConjugatePalindromeCheck {
    pub fn passed(&self) -> bool {
        self.conjugacy_word_is_palindrome && self.mismatched_letters.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSuiteReport {
    pub power: usize,
    pub well_marked: Morphism,
    pub leftmost: Morphism,
    pub rightmost: Morphism,
    pub conjugacy_word: Word,
    pub samples: usize,
    pub rng_seed: u64,
    pub pool_n_max: usize,
    /// `n_max` of the snapshot used to look up images.
    pub image_n_max: usize,
    /// The lemma assumes a palindromic fixed point.
    pub reversal_closed: bool,
    pub properties: Vec<PropertyResult>,
    pub conjugates: ConjugatePalindromeCheck,
}

impl PhiSuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failure.is_none()) && self.conjugates.passed()
    }
}

pub fn phi_property_suite(m: &Morphism, samples: usize) -> Result<PhiSuiteReport> {
    phi_property_suite_seeded(m, samples, DEFAULT_RNG_SEED)
}

pub fn phi_property_suite_seeded(
    m: &Morphism,
    samples: usize,
    rng_seed: u64,
) -> Result<PhiSuiteReport> {
    let (power, p) = well_marked_power(m)?;
    let phi = PhiMap::new(&p)?;
    let pool_snapshot = LanguageSnapshot::build(&p, POOL_N_MAX)?;
    let pool: Vec<&Word> = (0..=POOL_N_MAX - 2)
        .flat_map(|n| pool_snapshot.factors(n))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut sampled: Vec<Word> = (0..samples)
        .map(|_| (*pool.choose(&mut rng).expect("language is never empty")).clone())
        .collect();
    // bispecial preservation is checked on every short bispecial as well
    let bispecials: Vec<Word> = (0..=POOL_N_MAX - 2)
        .map(|n| pool_snapshot.bispecial_factors(n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|b| b.word)
        .collect();

    let images: Vec<Word> = sampled
        .iter()
        .chain(&bispecials)
        .map(|u| phi.apply(u))
        .collect::<Result<_>>()?;
    let image_n_max = images.iter().map(Word::len).max().unwrap_or(0) + 2;
    let big = LanguageSnapshot::build(&p, image_n_max)?;

    let mut props: Vec<PropertyResult> = ["I", "II", "III", "IV", "V"]
        .into_iter()
        .map(PropertyResult::new)
        .collect();
    let alphabet = p.alphabet();
    for (u, image) in sampled.iter().zip(&images) {
        props[0].record(big.contains(image), u);
        props[1].record(phi.apply(&u.reverse())? == image.reverse(), u);
        props[2].record(u.is_palindrome() == image.is_palindrome(), u);
        let mut transported = true;
        for a in alphabet.letters() {
            for b in alphabet.letters() {
                if big.contains(&u.wrap(Some(a), Some(b))) {
                    transported &= big.contains(&image.wrap(Some(a), Some(b)));
                }
            }
        }
        props[3].record(transported, u);
    }
    sampled.extend(bispecials);
    for (u, image) in sampled.iter().zip(&images) {
        let ext = pool_snapshot.extensions(u)?;
        if !ext.is_bispecial() {
            continue;
        }
        let ok = big.contains(image)
            && big.extensions(image)?.is_bispecial()
            && image.is_palindrome() == u.is_palindrome();
        props[4].record(ok, u);
    }

    let conjugacy_word = phi.conjugacy_word().clone();
    let mismatched_letters = alphabet
        .letters()
        .filter(|&a| phi.rightmost().image(a).reverse() != *phi.leftmost().image(a))
        .map(|a| alphabet.symbol(a))
        .collect();
    Ok(PhiSuiteReport {
        power,
        well_marked: p.clone(),
        leftmost: phi.leftmost().clone(),
        rightmost: phi.rightmost().clone(),
        conjugates: ConjugatePalindromeCheck {
            conjugacy_word_is_palindrome: conjugacy_word.is_palindrome(),
            mismatched_letters,
        },
        conjugacy_word,
        samples,
        rng_seed,
        pool_n_max: POOL_N_MAX,
        image_n_max,
        reversal_closed: big.is_closed_under_reversal(),
        properties: props,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::error::Error;

    #[test]
    fn fibonacci_square_passes() {
        let r = phi_property_suite(&corpus::fibonacci(), DEFAULT_SAMPLES).unwrap();
        assert_eq!(r.power, 2);
        assert!(r.reversal_closed);
        for p in &r.properties {
            assert!(p.failure.is_none(), "{p:?}");
            assert!(p.checked > 0, "{}", p.id);
        }
        assert_eq!(r.properties[0].checked, 200);
        assert!(r.conjugates.passed());
        assert_eq!(r.conjugacy_word.to_string(), "010");
    }

    #[test]
    fn deterministic_given_seed() {
        let a = phi_property_suite_seeded(&corpus::fibonacci(), 50, 7).unwrap();
        let b = phi_property_suite_seeded(&corpus::fibonacci(), 50, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn requires_marked() {
        assert_eq!(
            phi_property_suite(&corpus::bucci_vaslet(), 10).unwrap_err(),
            Error::NotMarked
        );
    }
}
