//! Non-erasing endomorphisms of a free monoid over a finite alphabet.

mod conjugacy;
mod parse;
mod phi;

use std::fmt;
use std::sync::Arc;

pub use conjugacy::{
    conjugacy_word, is_cyclic, leftmost_conjugate, marked_profile, rightmost_conjugate,
    well_marked_power, ConjugacyCertificate, LetterMap, MarkedProfile,
};
pub use parse::parse_morphism;
pub use phi::{phi_map, PhiMap};

use crate::error::{Error, Result};
use crate::word::{same_alphabet, Alphabet, Letter, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of the letter with id `i`.
    pub fn new(alphabet: &Arc<Alphabet>, images: Vec<Word>) -> Result<Self> {
        assert_eq!(images.len(), alphabet.len(), "one image per letter");
        for (i, img) in images.iter().enumerate() {
            if !same_alphabet(img.alphabet(), alphabet) {
                return Err(Error::AlphabetMismatch);
            }
            if img.is_empty() {
                return Err(Error::ErasingImage(alphabet.symbol(Letter::new(i))));
            }
        }
        Ok(Morphism {
            alphabet: Arc::clone(alphabet),
            images,
        })
    }

    /// Builds from `(letter, image)` pairs; the alphabet is the letters in the given order.
    pub fn from_rules(rules: &[(char, &str)]) -> Result<Self> {
        let alphabet = Alphabet::new(rules.iter().map(|r| r.0))?;
        let images = rules
            .iter()
            .map(|(_, img)| Word::parse(&alphabet, img))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&alphabet, images)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a.id()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn total_image_len(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if !same_alphabet(w.alphabet(), &self.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Word::new(&self.alphabet, self.apply_letters(w.letters())))
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len() * 2);
        for &l in letters {
            out.extend_from_slice(self.images[l.id()].letters());
        }
        out
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(&self.alphabet, images)
    }

    pub fn power(&self, k: usize) -> Morphism {
        assert!(k >= 1, "power must be at least 1");
        let mut p = self.clone();
        for _ in 1..k {
            p = self.compose(&p).expect("same alphabet");
        }
        p
    }

    /// First letter of each image, as a letter-to-letter map.
    pub fn fst(&self) -> LetterMap {
        LetterMap(self.images.iter().map(|w| w[0]).collect())
    }

    /// Last letter of each image.
    pub fn lst(&self) -> LetterMap {
        LetterMap(self.images.iter().map(|w| w[w.len() - 1]).collect())
    }

    /// `incidence[a][b]` = number of occurrences of `b` in the image of `a`.
    pub fn incidence_matrix(&self) -> Vec<Vec<u64>> {
        let k = self.alphabet.len();
        self.images
            .iter()
            .map(|img| {
                let mut row = vec![0u64; k];
                for l in img.iter() {
                    row[l.id()] += 1;
                }
                row
            })
            .collect()
    }

    /// Some power `k ≤ (|A|−1)² + 1` of the incidence matrix is entrywise positive.
    pub fn is_primitive(&self) -> bool {
        let k = self.alphabet.len();
        let base: Vec<Vec<bool>> = self
            .incidence_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|c| c > 0).collect())
            .collect();
        let bound = (k - 1) * (k - 1) + 1;
        let mut acc = base.clone();
        for _ in 0..bound {
            if acc.iter().all(|row| row.iter().all(|&b| b)) {
                return true;
            }
            acc = bool_product(&acc, &base);
        }
        false
    }

    /// Letters `a` with `Fst(m)(a) = a`, one per fixed point.
    pub fn fixed_point_letters(&self) -> Vec<Letter> {
        self.alphabet
            .letters()
            .filter(|&a| self.image(a)[0] == a)
            .collect()
    }

    /// Fixed-point letters whose image has length at least 2.
    pub fn growing_fixed_point_letters(&self) -> Vec<Letter> {
        self.fixed_point_letters()
            .into_iter()
            .filter(|&a| self.image(a).len() >= 2)
            .collect()
    }

    /// The length-`len` prefix of the fixed point starting with `a`.
    pub fn fixed_point_prefix(&self, a: Letter, len: usize) -> Result<Word> {
        let img = self.image(a);
        if img[0] != a || img.len() < 2 {
            return Err(Error::NotGrowingFixedPoint(self.alphabet.symbol(a)));
        }
        let mut buf: Vec<Letter> = img.letters().to_vec();
        let mut next = 1;
        while buf.len() < len {
            let l = buf[next];
            buf.extend_from_slice(self.images[l.id()].letters());
            next += 1;
        }
        buf.truncate(len);
        Ok(Word::new(&self.alphabet, buf))
    }

    pub fn letter(&self, symbol: char) -> Option<Letter> {
        self.alphabet.letter(symbol)
    }
}

fn bool_product(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let k = a.len();
    (0..k)
        .map(|i| (0..k).map(|j| (0..k).any(|t| a[i][t] && b[t][j])).collect())
        .collect()
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}->{}", self.alphabet.symbol(Letter::new(i)), img)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

/// A letter-to-word map between two possibly different alphabets.
#[derive(Clone, Debug)]
pub struct Coding {
    source: Arc<Alphabet>,
    target: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Coding {
    pub fn new(source: &Arc<Alphabet>, target: &Arc<Alphabet>, images: Vec<Word>) -> Result<Self> {
        assert_eq!(images.len(), source.len(), "one image per source letter");
        if images.iter().any(|w| !same_alphabet(w.alphabet(), target)) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Coding {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
        })
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if !same_alphabet(w.alphabet(), &self.source) {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = Vec::new();
        for l in w.iter() {
            out.extend_from_slice(self.images[l.id()].letters());
        }
        Ok(Word::new(&self.target, out))
    }
}

pub fn apply(m: &Morphism, w: &Word) -> Result<Word> {
    m.apply(w)
}

pub fn fixed_point_prefix(m: &Morphism, a: Letter, len: usize) -> Result<Word> {
    m.fixed_point_prefix(a, len)
}

pub fn is_primitive(m: &Morphism) -> bool {
    m.is_primitive()
}
