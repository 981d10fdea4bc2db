//! Conjugation of morphisms: rotations, leftmost/rightmost conjugates,
//! cyclicity and markedness.

use std::collections::HashSet;

use super::Morphism;
use crate::error::{Error, Result};
use crate::word::{same_alphabet, Letter, Word};

/// A map from letters to letters, indexed by letter id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterMap(pub Vec<Letter>);

impl LetterMap {
    pub fn get(&self, a: Letter) -> Letter {
        self.0[a.id()]
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<Letter> = self.0.iter().copied().collect();
        set.len() == self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, l)| l.id() == i)
    }

    /// Order of the map as a permutation (lcm of cycle lengths); `None` if not injective.
    pub fn order(&self) -> Option<usize> {
        if !self.is_injective() {
            return None;
        }
        let mut seen = vec![false; self.0.len()];
        let mut order = 1;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i].id();
                len += 1;
            }
            order = lcm(order, len);
        }
        Some(order)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Witness of `left ▷ right`: `right(a)·word = word·left(a)` for every letter `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub left: Morphism,
    pub right: Morphism,
    pub word: Word,
}

impl ConjugacyCertificate {
    pub fn verify(&self) -> bool {
        self.left.alphabet().letters().all(|a| {
            let lhs = self.right.image(a).concat(&self.word);
            let rhs = self.word.concat(self.left.image(a));
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        })
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Rotate every image one step while all images share their first (left)
/// or last (right) letter. Returns the final morphism and the moved letters,
/// or `None` when a state repeats (cyclic morphism).
fn rotate_until_split(m: &Morphism, side: Side) -> Option<(Morphism, Vec<Letter>)> {
    let mut current: Vec<Vec<Letter>> = m.images().iter().map(|w| w.letters().to_vec()).collect();
    let mut moved = Vec::new();
    let mut visited: HashSet<Vec<Vec<Letter>>> = HashSet::new();
    // two images sharing a common cyclic prefix longer than |x|+|y| are powers of one word
    let cap = m.total_image_len() + 1;
    loop {
        let ends: Vec<Letter> = match side {
            Side::Left => current.iter().map(|w| w[0]).collect(),
            Side::Right => current.iter().map(|w| w[w.len() - 1]).collect(),
        };
        if !LetterMap(ends.clone()).is_constant() {
            break;
        }
        if !visited.insert(current.clone()) || moved.len() > cap {
            return None;
        }
        for img in &mut current {
            match side {
                Side::Left => img.rotate_left(1),
                Side::Right => img.rotate_right(1),
            }
        }
        moved.push(ends[0]);
    }
    let images = current
        .into_iter()
        .map(|l| Word::new(m.alphabet(), l))
        .collect();
    Some((
        Morphism::new(m.alphabet(), images).expect("rotation keeps images"),
        moved,
    ))
}

/// True iff every image is a power of one common word.
pub fn is_cyclic(m: &Morphism) -> bool {
    rotate_until_split(m, Side::Left).is_none()
}

/// `(φ_L, w)` with `φ(a)·w = w·φ_L(a)` and `Fst(φ_L)` non-constant.
pub fn leftmost_conjugate(m: &Morphism) -> Result<(Morphism, Word)> {
    let (morphism, moved) = rotate_until_split(m, Side::Left).ok_or(Error::CyclicMorphism)?;
    Ok((morphism, Word::new(m.alphabet(), moved)))
}

/// `(φ_R, w)` with `φ_R(a)·w = w·φ(a)` and `Lst(φ_R)` non-constant.
pub fn rightmost_conjugate(m: &Morphism) -> Result<(Morphism, Word)> {
    let (morphism, mut moved) = rotate_until_split(m, Side::Right).ok_or(Error::CyclicMorphism)?;
    // letters were moved from the right end, last one moved comes first
    moved.reverse();
    Ok((morphism, Word::new(m.alphabet(), moved)))
}

/// Shortest `w` with `right(a)·w = w·left(a)` for all letters, searching
/// `|w| ≤ Σ|right(a)|`.
pub fn conjugacy_word(left: &Morphism, right: &Morphism) -> Option<Word> {
    if !same_alphabet(left.alphabet(), right.alphabet()) {
        return None;
    }
    let letters: Vec<Letter> = right.alphabet().letters().collect();
    if letters
        .iter()
        .any(|&a| left.image(a).len() != right.image(a).len())
    {
        return None;
    }
    let first = right.image(letters[0]).letters();
    let bound = right.total_image_len();
    'len: for len in 0..=bound {
        let candidate: Vec<Letter> = first.iter().copied().cycle().take(len).collect();
        for &a in &letters {
            let r = right.image(a).letters();
            let l = left.image(a).letters();
            let lhs = r.iter().chain(candidate.iter());
            let rhs = candidate.iter().chain(l.iter());
            if !lhs.eq(rhs) {
                continue 'len;
            }
        }
        return Some(Word::new(right.alphabet(), candidate));
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedProfile {
    pub is_acyclic: bool,
    pub leftmost: Option<Morphism>,
    pub rightmost: Option<Morphism>,
    pub fst_of_leftmost: Option<LetterMap>,
    pub lst_of_rightmost: Option<LetterMap>,
    pub is_marked: bool,
    pub is_well_marked: bool,
}

pub fn marked_profile(m: &Morphism) -> MarkedProfile {
    let (Ok((left, _)), Ok((right, _))) = (leftmost_conjugate(m), rightmost_conjugate(m)) else {
        return MarkedProfile {
            is_acyclic: false,
            leftmost: None,
            rightmost: None,
            fst_of_leftmost: None,
            lst_of_rightmost: None,
            is_marked: false,
            is_well_marked: false,
        };
    };
    let fst = left.fst();
    let lst = right.lst();
    let is_marked = fst.is_injective() && lst.is_injective();
    MarkedProfile {
        is_acyclic: true,
        is_well_marked: is_marked && fst == lst,
        is_marked,
        fst_of_leftmost: Some(fst),
        lst_of_rightmost: Some(lst),
        leftmost: Some(left),
        rightmost: Some(right),
    }
}

/// Smallest `k` with `Fst((m^k)_L) = Lst((m^k)_R) = Id`, searched up to the
/// lcm of the two permutation orders.
pub fn well_marked_power(m: &Morphism) -> Result<(usize, Morphism)> {
    let profile = marked_profile(m);
    if !profile.is_marked {
        return Err(Error::NotMarked);
    }
    let fst_order = profile
        .fst_of_leftmost
        .as_ref()
        .and_then(LetterMap::order)
        .unwrap_or(1);
    let lst_order = profile
        .lst_of_rightmost
        .as_ref()
        .and_then(LetterMap::order)
        .unwrap_or(1);
    let bound = lcm(fst_order, lst_order);
    for k in 1..=bound {
        let p = m.power(k);
        let prof = marked_profile(&p);
        let ok = |map: &Option<LetterMap>| map.as_ref().is_some_and(LetterMap::is_identity);
        if prof.is_marked && ok(&prof.fst_of_leftmost) && ok(&prof.lst_of_rightmost) {
            return Ok((k, p));
        }
    }
    Err(Error::WellMarkedSearchExceeded { bound })
}
