//! Alphabets, letters and finite words.
//!
//! Letters are small integer ids into an [`Alphabet`] symbol table; all
//! printing and parsing goes through the printable symbols. Words compare by
//! length first, then lexicographically by letter id, so any `BTreeSet<Word>`
//! iterates in the canonical report order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Index, Range};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A letter id. Only meaningful relative to an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(id: usize) -> Self {
        assert!(id < 256, "letter id {id} out of range");
        Letter(id as u8)
    }

    #[inline]
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

/// Ordered list of distinct printable symbols. Ids are positions in the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    ids: HashMap<char, Letter>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > 256 {
            return Err(Error::AlphabetTooLarge);
        }
        let mut ids = HashMap::with_capacity(symbols.len());
        for (i, &c) in symbols.iter().enumerate() {
            if ids.insert(c, Letter::new(i)).is_some() {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Arc::new(Alphabet { symbols, ids }))
    }

    /// Alphabet of the distinct characters of `text`, sorted.
    pub fn from_text(text: &str) -> Result<Arc<Self>> {
        let set: BTreeSet<char> = text.chars().collect();
        Self::new(set)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter.id()]
    }

    pub fn letter(&self, symbol: char) -> Option<Letter> {
        self.ids.get(&symbol).copied()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len()).map(Letter::new)
    }
}

/// An immutable finite word over a shared alphabet.
#[derive(Clone)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Arc<Alphabet>,
}

impl Word {
    pub fn new(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.id() < alphabet.len()));
        Word {
            letters,
            alphabet: Arc::clone(alphabet),
        }
    }

    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Self::new(alphabet, Vec::new())
    }

    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(position, symbol)| {
                alphabet
                    .letter(symbol)
                    .ok_or(Error::UnknownSymbol { symbol, position })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(alphabet, letters))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet)
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn slice(&self, range: Range<usize>) -> Word {
        Word::new(&self.alphabet, self.letters[range].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0..len.min(self.len()))
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::new(&self.alphabet, letters)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome_slice(&self.letters)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if !self.same_alphabet(other) {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::new(&self.alphabet, letters))
    }

    /// `a · self · b`; letters are assumed to belong to this word's alphabet.
    pub fn wrap(&self, left: Option<Letter>, right: Option<Letter>) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 2);
        letters.extend(left);
        letters.extend_from_slice(&self.letters);
        letters.extend(right);
        Word::new(&self.alphabet, letters)
    }

    /// Distinct length-`n` factors, in canonical order.
    pub fn factors(&self, n: usize) -> BTreeSet<Word> {
        if n == 0 {
            return BTreeSet::from([Word::empty(&self.alphabet)]);
        }
        if n > self.len() {
            return BTreeSet::new();
        }
        self.letters
            .windows(n)
            .map(|w| Word::new(&self.alphabet, w.to_vec()))
            .collect()
    }

    /// All (possibly overlapping) occurrence indices of `pattern`.
    pub fn occurrences(&self, pattern: &Word) -> Result<Vec<usize>> {
        if !self.same_alphabet(pattern) {
            return Err(Error::AlphabetMismatch);
        }
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(occurrences_in(&self.letters, &pattern.letters))
    }

    pub fn contains_factor(&self, pattern: &Word) -> bool {
        pattern.is_empty()
            || self
                .letters
                .windows(pattern.len())
                .any(|w| w == pattern.letters.as_slice())
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().copied()
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a.symbols == b.symbols
}

pub(crate) fn is_palindrome_slice(letters: &[Letter]) -> bool {
    let n = letters.len();
    (0..n / 2).all(|i| letters[i] == letters[n - 1 - i])
}

pub(crate) fn occurrences_in(text: &[Letter], pattern: &[Letter]) -> Vec<usize> {
    if pattern.is_empty() || pattern.len() > text.len() {
        return Vec::new();
    }
    text.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

pub fn is_palindrome(w: &Word) -> bool {
    w.is_palindrome()
}

pub fn factors(w: &Word, n: usize) -> BTreeSet<Word> {
    w.factors(n)
}

pub fn occurrences(w: &Word, f: &Word) -> Result<Vec<usize>> {
    w.occurrences(f)
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.letters[i]
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| {
                if Arc::ptr_eq(&self.alphabet, &other.alphabet) {
                    Ordering::Equal
                } else {
                    self.alphabet.symbols.cmp(&other.alphabet.symbols)
                }
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}
