//! Complete return words and complete mirror returns over a finite prefix.
//!
//! Every scan is relative to the stream it is given. A failure found here is
//! a genuine factor of the infinite word; a pass only means nothing was found
//! below the horizon.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;

use crate::error::{Error, Result};
use crate::word::{is_palindrome_slice, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternation {
    /// The target is a palindrome, so there is nothing to alternate.
    Vacuous,
    Holds,
    Fails,
}

impl Alternation {
    pub fn is_ok(self) -> bool {
        self != Alternation::Fails
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Alternation::Vacuous => "vacuous",
            Alternation::Holds => "holds",
            Alternation::Fails => "fails",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnWordReport {
    pub target: Word,
    pub horizon: usize,
    pub returns: BTreeSet<Word>,
    /// Every span, in stream order, including repeats of the same word.
    pub spans: Vec<Range<usize>>,
    pub all_palindromic: bool,
    pub alternation: Alternation,
}

struct Scan {
    spans: Vec<Range<usize>>,
    alternation: Alternation,
}

/// Pairs consecutive entries of the merged occurrence lists. With
/// `mirror` only pairs of opposite type count as returns.
fn scan(pos_w: &[usize], pos_r: &[usize], n: usize, palindrome: bool, mirror: bool) -> Scan {
    if palindrome {
        return Scan {
            spans: pos_w.windows(2).map(|p| p[0]..p[1] + n).collect(),
            alternation: Alternation::Vacuous,
        };
    }
    let mut merged: Vec<(usize, bool)> = pos_w
        .iter()
        .map(|&p| (p, true))
        .chain(pos_r.iter().map(|&p| (p, false)))
        .collect();
    merged.sort_unstable();
    let mut spans = Vec::new();
    let mut alternation = Alternation::Holds;
    for pair in merged.windows(2) {
        let ((p, tp), (q, tq)) = (pair[0], pair[1]);
        if tp != tq {
            if mirror {
                spans.push(p..q + n);
            }
        } else {
            alternation = Alternation::Fails;
        }
    }
    if !mirror {
        spans = pos_w.windows(2).map(|p| p[0]..p[1] + n).collect();
    }
    Scan { spans, alternation }
}

fn report(stream: &Word, target: &Word, s: Scan) -> ReturnWordReport {
    let returns: BTreeSet<Word> = s.spans.iter().map(|r| stream.slice(r.clone())).collect();
    ReturnWordReport {
        target: target.clone(),
        horizon: stream.len(),
        all_palindromic: returns.iter().all(Word::is_palindrome),
        returns,
        spans: s.spans,
        alternation: s.alternation,
    }
}

pub fn complete_return_words(stream: &Word, w: &Word) -> Result<ReturnWordReport> {
    if w.is_empty() {
        return Err(Error::EmptyTarget);
    }
    let pos = stream.occurrences(w)?;
    if pos.len() < 2 {
        return Err(Error::InsufficientHorizon {
            target: w.to_string(),
            occurrences: pos.len(),
            horizon: stream.len(),
        });
    }
    let rev = w.reverse();
    let pos_r = if w.is_palindrome() {
        pos.clone()
    } else {
        stream.occurrences(&rev)?
    };
    Ok(report(
        stream,
        w,
        scan(&pos, &pos_r, w.len(), w.is_palindrome(), false),
    ))
}

pub fn complete_mirror_returns(stream: &Word, w: &Word) -> Result<ReturnWordReport> {
    if w.is_empty() {
        return Err(Error::EmptyTarget);
    }
    let pal = w.is_palindrome();
    let pos = stream.occurrences(w)?;
    let pos_r = if pal {
        pos.clone()
    } else {
        stream.occurrences(&w.reverse())?
    };
    let total = if pal {
        pos.len()
    } else {
        pos.len() + pos_r.len()
    };
    if total < 2 {
        return Err(Error::InsufficientHorizon {
            target: w.to_string(),
            occurrences: total,
            horizon: stream.len(),
        });
    }
    Ok(report(stream, w, scan(&pos, &pos_r, w.len(), pal, true)))
}

/// Whether occurrences of `w` and `~w` alternate in `stream`.
pub fn occurrences_alternate(stream: &Word, w: &Word) -> Result<Alternation> {
    if w.is_palindrome() {
        return Ok(Alternation::Vacuous);
    }
    let pos = stream.occurrences(w)?;
    let pos_r = stream.occurrences(&w.reverse())?;
    Ok(scan(&pos, &pos_r, w.len(), false, true).alternation)
}

/// Occurrence lists of every length-`n` factor of `letters`, in word order.
fn position_table(letters: &[Letter], n: usize) -> BTreeMap<&[Letter], Vec<usize>> {
    let mut table: BTreeMap<&[Letter], Vec<usize>> = BTreeMap::new();
    if n == 0 {
        return table;
    }
    for (i, w) in letters.windows(n).enumerate() {
        table.entry(w).or_default().push(i);
    }
    table
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnCounterexample {
    pub target: Word,
    pub return_word: Word,
    pub span: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDefectVerdict {
    pub horizon: usize,
    pub max_len: usize,
    /// Palindromic targets with at least two occurrences.
    pub targets_checked: usize,
    pub counterexample: Option<ReturnCounterexample>,
}

impl ZeroDefectVerdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// All complete returns to palindromic factors of length `1..=max_len`
/// must be palindromes. Targets are scanned by length, then in order.
pub fn zero_defect_via_returns(stream: &Word, max_len: usize) -> ZeroDefectVerdict {
    let letters = stream.letters();
    let mut targets_checked = 0;
    for n in 1..=max_len {
        for (w, pos) in position_table(letters, n) {
            if pos.len() < 2 || !is_palindrome_slice(w) {
                continue;
            }
            targets_checked += 1;
            for p in pos.windows(2) {
                let span = p[0]..p[1] + n;
                if !is_palindrome_slice(&letters[span.clone()]) {
                    return ZeroDefectVerdict {
                        horizon: stream.len(),
                        max_len,
                        targets_checked,
                        counterexample: Some(ReturnCounterexample {
                            target: Word::new(stream.alphabet(), w.to_vec()),
                            return_word: stream.slice(span.clone()),
                            span,
                        }),
                    };
                }
            }
        }
    }
    ZeroDefectVerdict {
        horizon: stream.len(),
        max_len,
        targets_checked,
        counterexample: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdFailure {
    NotAlternating { target: Word },
    NonPalindromicMirrorReturn(ReturnCounterexample),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdScan {
    pub horizon: usize,
    pub max_len: usize,
    /// Smallest `K` such that every length in `K..=max_len` passes.
    pub threshold: Option<usize>,
    /// First failure at each failing length.
    pub failures: Vec<(usize, ThresholdFailure)>,
}

fn first_failure_at(stream: &Word, n: usize) -> Option<ThresholdFailure> {
    let letters = stream.letters();
    let table = position_table(letters, n);
    let empty = Vec::new();
    for (&w, pos) in &table {
        let rev: Vec<Letter> = w.iter().rev().copied().collect();
        let pal = rev == w;
        let pos_r = if pal {
            pos
        } else {
            table.get(rev.as_slice()).unwrap_or(&empty)
        };
        let s = scan(pos, pos_r, n, pal, true);
        if s.alternation == Alternation::Fails {
            return Some(ThresholdFailure::NotAlternating {
                target: Word::new(stream.alphabet(), w.to_vec()),
            });
        }
        if let Some(span) = s
            .spans
            .into_iter()
            .find(|r| !is_palindrome_slice(&letters[r.clone()]))
        {
            return Some(ThresholdFailure::NonPalindromicMirrorReturn(
                ReturnCounterexample {
                    target: Word::new(stream.alphabet(), w.to_vec()),
                    return_word: stream.slice(span.clone()),
                    span,
                },
            ));
        }
    }
    None
}

/// Smallest `K ≤ max_len` from which every factor passes both the
/// alternation test and the palindromic-mirror-return test.
pub fn finite_defect_threshold_scan(stream: &Word, max_len: usize) -> ThresholdScan {
    let mut failures = Vec::new();
    for n in 1..=max_len {
        if let Some(f) = first_failure_at(stream, n) {
            failures.push((n, f));
        }
    }
    let threshold = match failures.last() {
        None => Some(1),
        Some(&(n, _)) if n < max_len => Some(n + 1),
        Some(_) => None,
    };
    ThresholdScan {
        horizon: stream.len(),
        max_len,
        threshold,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::morphism::Morphism;
    use crate::word::{occurrences_in, Alphabet};
    use proptest::prelude::*;

    fn prefix(m: &Morphism, len: usize) -> Word {
        m.fixed_point_prefix(m.growing_fixed_point_letters()[0], len)
            .unwrap()
    }

    fn words(r: &ReturnWordReport) -> Vec<String> {
        r.returns.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn fibonacci_letter_returns() {
        let s = prefix(&corpus::fibonacci(), 100);
        let r = complete_return_words(&s, &Word::parse(s.alphabet(), "0").unwrap()).unwrap();
        assert_eq!(words(&r), ["00", "010"]);
        assert!(r.all_palindromic);
    }

    #[test]
    fn overlapping_returns() {
        let ab = Alphabet::new(['a']).unwrap();
        let s = Word::parse(&ab, "aaaa").unwrap();
        let r = complete_return_words(&s, &Word::parse(&ab, "aa").unwrap()).unwrap();
        assert_eq!(words(&r), ["aaa"]);
        assert_eq!(r.spans, [0..3, 1..4]);
    }

    #[test]
    fn insufficient_horizon_is_distinct() {
        let s = prefix(&corpus::fibonacci(), 10);
        let w = Word::parse(s.alphabet(), "00100").unwrap();
        assert!(matches!(
            complete_return_words(&s, &w),
            Err(Error::InsufficientHorizon {
                occurrences: 0,
                horizon: 10,
                ..
            })
        ));
        assert_eq!(
            complete_return_words(&s, &Word::empty(s.alphabet())),
            Err(Error::EmptyTarget)
        );
    }

    #[test]
    fn fibonacci_mirror_returns() {
        let s = prefix(&corpus::fibonacci(), 1000);
        let w = |t: &str| Word::parse(s.alphabet(), t).unwrap();
        let r1 = complete_mirror_returns(&s, &w("0101")).unwrap();
        assert!(r1.returns.contains(&w("01010")));
        let r2 = complete_mirror_returns(&s, &w("001")).unwrap();
        assert!(r2.returns.contains(&w("0010100")));
        let r3 = complete_mirror_returns(&s, &w("00")).unwrap();
        assert!(r3.returns.contains(&w("0010100")));
        assert_eq!(
            r3.returns,
            complete_return_words(&s, &w("00")).unwrap().returns
        );
        // the definition is symmetric in w and its reversal
        assert_eq!(
            r2.returns,
            complete_mirror_returns(&s, &w("100")).unwrap().returns
        );
    }

    #[test]
    fn alternation() {
        let fib = prefix(&corpus::fibonacci(), 2000);
        let w = |s: &Word, t: &str| Word::parse(s.alphabet(), t).unwrap();
        assert_eq!(
            occurrences_alternate(&fib, &w(&fib, "01")).unwrap(),
            Alternation::Holds
        );
        assert_eq!(
            occurrences_alternate(&fib, &w(&fib, "010")).unwrap(),
            Alternation::Vacuous
        );
        let tm = prefix(&corpus::thue_morse(), 2000);
        let short: Vec<Word> = (1..=6).flat_map(|n| tm.factors(n)).collect();
        assert!(short
            .iter()
            .any(|f| occurrences_alternate(&tm, f).unwrap() == Alternation::Fails));
    }

    #[test]
    fn zero_defect_scans() {
        let fib = zero_defect_via_returns(&prefix(&corpus::fibonacci(), 2000), 8);
        assert!(fib.passed());
        assert!(fib.targets_checked > 8);
        for m in [corpus::thue_morse(), corpus::bucci_vaslet()] {
            let v = zero_defect_via_returns(&prefix(&m, 2000), 8);
            let c = v.counterexample.expect("counterexample");
            assert!(c.target.is_palindrome() && !c.return_word.is_palindrome());
            assert!(c.return_word.letters().starts_with(c.target.letters()));
            assert!(c.return_word.letters().ends_with(c.target.letters()));
        }
    }

    #[test]
    fn thresholds() {
        let fib = finite_defect_threshold_scan(&prefix(&corpus::fibonacci(), 10_000), 10);
        assert_eq!(fib.threshold, Some(1));
        let bv = finite_defect_threshold_scan(&prefix(&corpus::bucci_vaslet(), 10_000), 10);
        let k = bv.threshold.expect("finite defect threshold");
        assert!(k >= 2, "{k}");
        let tm = finite_defect_threshold_scan(&prefix(&corpus::thue_morse(), 10_000), 10);
        assert_eq!(tm.threshold, None);
    }

    #[test]
    fn fibonacci_mirror_returns_are_palindromes() {
        let s = prefix(&corpus::fibonacci(), 10_000);
        for n in 1..=8 {
            for f in s.factors(n) {
                let r = complete_mirror_returns(&s, &f).unwrap();
                assert!(r.all_palindromic, "{f}");
            }
        }
    }

    proptest! {
        #[test]
        fn returns_are_bounded_by_the_target(s in "[ab]{0,60}", t in "[ab]{1,3}") {
            let ab = Alphabet::new(['a', 'b']).unwrap();
            let s = Word::parse(&ab, &s).unwrap();
            let w = Word::parse(&ab, &t).unwrap();
            let rev = w.reverse();
            if let Ok(r) = complete_mirror_returns(&s, &w) {
                for span in &r.spans {
                    let c = s.slice(span.clone());
                    let starts = c.letters().starts_with(w.letters()) || c.letters().starts_with(rev.letters());
                    let ends = c.letters().ends_with(w.letters()) || c.letters().ends_with(rev.letters());
                    prop_assert!(starts && ends);
                    let inner = &c.letters()[1..c.len() - 1];
                    prop_assert!(occurrences_in(inner, w.letters()).is_empty());
                    prop_assert!(occurrences_in(inner, rev.letters()).is_empty());
                }
                if w.is_palindrome() {
                    prop_assert_eq!(&r.returns, &complete_return_words(&s, &w).unwrap().returns);
                }
            }
        }
    }
}
