//! Palindromic tree (eertree) over a single word.
//!
//! The tree has one node per distinct non-empty palindromic factor plus two
//! roots (lengths −1 and 0). It is built online; at each position at most one
//! node is created, and a position where none is created is a lacuna: the
//! longest palindromic suffix of the prefix ending there already occurred.
//! The number of lacunas is the palindromic defect.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word::{Letter, Word};

const NONE: u32 = u32::MAX;
const IMAGINARY_ROOT: usize = 0;
const EMPTY_ROOT: usize = 1;

#[derive(Debug, Clone)]
struct Node {
    len: isize,
    suffix_link: usize,
    /// End position of the first occurrence; unused for the roots.
    first_end: usize,
}

#[derive(Debug, Clone)]
pub struct PalIndex {
    word: Word,
    nodes: Vec<Node>,
    /// `edges[node * k + letter]` = node for `letter · node · letter`.
    edges: Vec<u32>,
    created_at: Vec<Option<usize>>,
    lps: Vec<usize>,
}

impl PalIndex {
    pub fn build(word: &Word) -> PalIndex {
        let k = word.alphabet().len();
        let mut idx = PalIndex {
            word: word.clone(),
            nodes: vec![
                Node {
                    len: -1,
                    suffix_link: IMAGINARY_ROOT,
                    first_end: 0,
                },
                Node {
                    len: 0,
                    suffix_link: IMAGINARY_ROOT,
                    first_end: 0,
                },
            ],
            edges: vec![NONE; 2 * k],
            created_at: Vec::with_capacity(word.len()),
            lps: Vec::with_capacity(word.len()),
        };
        let letters = word.letters();
        let mut last = EMPTY_ROOT;
        for i in 0..letters.len() {
            let c = letters[i];
            let cur = idx.extendable(letters, last, i);
            let existing = idx.edge(cur, c);
            if existing != NONE as usize {
                last = existing;
                idx.created_at.push(None);
            } else {
                let len = idx.nodes[cur].len + 2;
                let suffix_link = if len == 1 {
                    EMPTY_ROOT
                } else {
                    let from = idx.extendable(letters, idx.nodes[cur].suffix_link, i);
                    idx.edge(from, c)
                };
                let node = idx.nodes.len();
                idx.nodes.push(Node {
                    len,
                    suffix_link,
                    first_end: i,
                });
                idx.edges.extend(std::iter::repeat_n(NONE, k));
                idx.edges[cur * k + c.id()] = node as u32;
                last = node;
                idx.created_at.push(Some(node));
            }
            idx.lps.push(last);
        }
        idx
    }

    /// Longest suffix-palindrome of `w[..i]` reachable from `node` that can be
    /// wrapped by `w[i]`.
    fn extendable(&self, letters: &[Letter], mut node: usize, i: usize) -> usize {
        loop {
            let len = self.nodes[node].len;
            let j = i as isize - 1 - len;
            if j >= 0 && letters[j as usize] == letters[i] {
                return node;
            }
            if node == IMAGINARY_ROOT {
                return node;
            }
            node = self.nodes[node].suffix_link;
        }
    }

    fn edge(&self, node: usize, c: Letter) -> usize {
        let k = self.word.alphabet().len();
        match self.edges[node * k + c.id()] {
            NONE => NONE as usize,
            e => e as usize,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of distinct non-empty palindromic factors.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - 2
    }

    fn node_word(&self, node: usize) -> Word {
        let n = &self.nodes[node];
        let len = n.len.max(0) as usize;
        self.word.slice(n.first_end + 1 - len..n.first_end + 1)
    }

    /// The distinct non-empty palindromic factors.
    pub fn palindromes(&self) -> BTreeSet<Word> {
        (2..self.nodes.len()).map(|n| self.node_word(n)).collect()
    }

    pub fn longest_palindromic_suffix(&self, i: usize) -> Result<Word> {
        let node = *self.lps.get(i).ok_or(Error::PositionOutOfRange {
            index: i,
            len: self.word.len(),
        })?;
        let len = self.nodes[node].len as usize;
        Ok(self.word.slice(i + 1 - len..i + 1))
    }

    pub fn longest_palindromic_suffix_len(&self, i: usize) -> Option<usize> {
        self.lps.get(i).map(|&n| self.nodes[n].len as usize)
    }

    /// Positions where no new palindrome appeared.
    pub fn lacunas(&self) -> Vec<usize> {
        self.created_at
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn defect(&self) -> usize {
        self.created_at.iter().filter(|c| c.is_none()).count()
    }

    pub fn report(&self) -> DefectReport {
        DefectReport {
            word_length: self.word.len(),
            palindrome_count_including_empty: self.node_count() + 1,
            defect: self.defect(),
            lacunas: self.lacunas(),
        }
    }

    /// Every node is reachable from a root through extension edges.
    pub fn all_nodes_reachable(&self) -> bool {
        let k = self.word.alphabet().len();
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![IMAGINARY_ROOT, EMPTY_ROOT];
        while let Some(n) = stack.pop() {
            if std::mem::replace(&mut seen[n], true) {
                continue;
            }
            for &e in &self.edges[n * k..(n + 1) * k] {
                if e != NONE {
                    stack.push(e as usize);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub word_length: usize,
    pub palindrome_count_including_empty: usize,
    pub defect: usize,
    pub lacunas: Vec<usize>,
}

pub fn build(w: &Word) -> PalIndex {
    PalIndex::build(w)
}

pub fn defect(w: &Word) -> DefectReport {
    PalIndex::build(w).report()
}

pub fn longest_palindromic_suffix(idx: &PalIndex, i: usize) -> Result<Word> {
    idx.longest_palindromic_suffix(i)
}

/// Defect of the fixed-point prefix at each requested length, in ascending
/// length order.
pub fn defect_stream(m: &Morphism, seed: Letter, lengths: &[usize]) -> Result<Vec<(usize, usize)>> {
    if !m.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let mut lengths = lengths.to_vec();
    lengths.sort_unstable();
    lengths.dedup();
    let max = lengths.last().copied().unwrap_or(0);
    let prefix = m.fixed_point_prefix(seed, max)?;
    let idx = PalIndex::build(&prefix);
    let mut lacunas_before = vec![0usize; max + 1];
    for (i, c) in idx.created_at.iter().enumerate() {
        lacunas_before[i + 1] = lacunas_before[i] + usize::from(c.is_none());
    }
    Ok(lengths
        .into_iter()
        .map(|l| (l, lacunas_before[l]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle::brute_distinct_palindromes;
    use crate::word::Alphabet;
    use proptest::prelude::*;

    fn bin(s: &str) -> Word {
        Word::parse(&corpus::binary(), s).unwrap()
    }

    fn over(symbols: &str, s: &str) -> Word {
        Word::parse(&Alphabet::new(symbols.chars()).unwrap(), s).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(build(&bin("010010100")).node_count(), 9);
        let empty = build(&bin(""));
        assert_eq!(empty.node_count(), 0);
        assert_eq!(empty.report().palindrome_count_including_empty, 1);
        assert_eq!(empty.defect(), 0);
    }

    #[test]
    fn defect_examples() {
        let r = defect(&bin("010010100"));
        assert_eq!(r.defect, 0);
        assert!(r.lacunas.is_empty());
        assert_eq!(r.palindrome_count_including_empty, 10);
        let r = defect(&bin("011010011"));
        assert_eq!(r.defect, 1);
        assert_eq!(r.palindrome_count_including_empty, 9);
        // the last position repeats `11`
        assert_eq!(r.lacunas, [8]);
    }

    #[test]
    fn lps_examples() {
        let idx = build(&bin("010010100"));
        assert_eq!(
            idx.longest_palindromic_suffix(8).unwrap().to_string(),
            "0010100"
        );
        let idx = build(&bin("011010011"));
        assert_eq!(idx.longest_palindromic_suffix(8).unwrap().to_string(), "11");
        let idx = build(&over("ab", "ab"));
        assert_eq!(idx.longest_palindromic_suffix(1).unwrap().to_string(), "b");
        assert_eq!(
            idx.longest_palindromic_suffix(2).unwrap_err(),
            Error::PositionOutOfRange { index: 2, len: 2 }
        );
    }

    #[test]
    fn z_word_periodic_defect() {
        for k in 2..=5 {
            let z = corpus::z_word(k);
            let w = bin(&z.repeat(40));
            assert_eq!(defect(&w).defect, k, "k = {k}");
        }
    }

    #[test]
    fn stream_requires_fixed_point_and_primitivity() {
        let fib = corpus::fibonacci();
        let one = fib.letter('1').unwrap();
        assert_eq!(
            defect_stream(&fib, one, &[10]).unwrap_err(),
            Error::NotGrowingFixedPoint('1')
        );
        let m = Morphism::from_rules(&[('a', "ab"), ('b', "b")]).unwrap();
        assert_eq!(
            defect_stream(&m, m.letter('a').unwrap(), &[10]).unwrap_err(),
            Error::NotPrimitive
        );
    }

    #[test]
    fn fibonacci_stream_is_rich() {
        let fib = corpus::fibonacci();
        let zero = fib.letter('0').unwrap();
        let lengths: Vec<usize> = (10..=2000).step_by(10).collect();
        for (_, d) in defect_stream(&fib, zero, &lengths).unwrap() {
            assert_eq!(d, 0);
        }
    }

    #[test]
    fn thue_morse_stream_grows() {
        let tm = corpus::thue_morse();
        let zero = tm.letter('0').unwrap();
        let lengths: Vec<usize> = (4..=12).map(|e| 1 << e).collect();
        let stream = defect_stream(&tm, zero, &lengths).unwrap();
        for w in stream.windows(2) {
            assert!(w[1].1 > w[0].1, "{stream:?}");
        }
    }

    #[test]
    fn stream_matches_direct_defects() {
        let bv = corpus::bucci_vaslet();
        let a = bv.letter('a').unwrap();
        let lengths = [1, 7, 50, 333, 1000];
        let stream = defect_stream(&bv, a, &lengths).unwrap();
        for (len, d) in stream {
            let prefix = bv.fixed_point_prefix(a, len.max(8)).unwrap().prefix(len);
            assert_eq!(defect(&prefix).defect, d);
        }
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        (2usize..=4).prop_flat_map(|k| {
            let symbols: String = "abcd".chars().take(k).collect();
            prop::collection::vec(0..k, 0..120).prop_map(move |ids| {
                let alpha = Alphabet::new(symbols.chars()).unwrap();
                Word::new(&alpha, ids.into_iter().map(Letter::new).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force(w in arb_word()) {
            let idx = build(&w);
            prop_assert_eq!(idx.palindromes(), brute_distinct_palindromes(&w).unwrap());
            prop_assert!(idx.all_nodes_reachable());
            let r = idx.report();
            prop_assert_eq!(r.defect, r.word_length + 1 - r.palindrome_count_including_empty);
            prop_assert_eq!(r.defect, r.lacunas.len());
            prop_assert!(r.defect <= w.len());
        }

        #[test]
        fn lps_is_a_maximal_palindromic_suffix(w in arb_word()) {
            let idx = build(&w);
            for i in 0..w.len() {
                let lps = idx.longest_palindromic_suffix(i).unwrap();
                prop_assert!(lps.is_palindrome() && !lps.is_empty());
                let brute = (0..=i)
                    .map(|s| w.slice(s..i + 1))
                    .find(|f| f.is_palindrome())
                    .unwrap();
                prop_assert_eq!(lps, brute);
            }
        }

        #[test]
        fn defect_is_reversal_invariant(w in arb_word()) {
            prop_assert_eq!(defect(&w).defect, defect(&w.reverse()).defect);
        }

        #[test]
        fn defect_is_monotone_on_factors(w in arb_word()) {
            let d = defect(&w).defect;
            for i in 0..=w.len() {
                prop_assert!(defect(&w.prefix(i)).defect <= d);
            }
            let n = w.len();
            for i in (0..n).step_by(7) {
                for j in (i..=n).step_by(5) {
                    prop_assert!(defect(&w.slice(i..j)).defect <= d);
                }
            }
        }
    }
}
