use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::{gamma_graph, theta_graph, GraphKind};
use crate::language::LanguageSnapshot;
use crate::returns::complete_return_words;
use crate::word::{Letter, Word};

/// Horizon for the letter-return supplement of the cycle search.
pub const LETTER_RETURN_HORIZON: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found,
    NotFoundWithinBound,
    HypothesisFails,
}

impl WitnessOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessOutcome::Found => "found",
            WitnessOutcome::NotFoundWithinBound => "not-found-within-bound",
            WitnessOutcome::HypothesisFails => "hypothesis-fails",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub word: Word,
    /// `None` for the binary extension witness.
    pub graph: Option<GraphKind>,
}

/// A letter whose complete returns include a non-palindrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterReturn {
    pub letter: Letter,
    pub return_word: Word,
    pub horizon: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub statement: &'static str,
    pub witness: Option<Witness>,
    /// Longest `q` examined.
    pub search_bound: usize,
    pub outcome: WitnessOutcome,
    /// Set by the cycle search when `ε` is the only witness below the bound.
    pub letter_return: Option<Option<LetterReturn>>,
    /// The witness was rechecked from raw membership queries.
    pub reverified: bool,
}

fn report(statement: &'static str, bound: usize, outcome: WitnessOutcome) -> WitnessReport {
    WitnessReport {
        statement,
        witness: None,
        search_bound: bound,
        outcome,
        letter_return: None,
        reverified: false,
    }
}

fn search_bound(l: &LanguageSnapshot) -> usize {
    l.n_max().saturating_sub(2)
}

/// A non-palindrome `q` with `0q0, 0q1, 1q0, 1q1` all factors.
pub fn binary_witness(l: &LanguageSnapshot) -> Result<WitnessReport> {
    const STATEMENT: &str = "lemma61";
    let k = l.morphism().alphabet().len();
    if k != 2 {
        return Err(Error::NotBinary(k));
    }
    let bound = search_bound(l);
    if !l.is_closed_under_reversal() {
        return Ok(report(STATEMENT, bound, WitnessOutcome::HypothesisFails));
    }
    let (zero, one) = (Letter::new(0), Letter::new(1));
    let all_four = |q: &Word| {
        [(zero, zero), (zero, one), (one, zero), (one, one)]
            .iter()
            .all(|&(a, b)| l.contains(&q.wrap(Some(a), Some(b))))
    };
    for n in 0..=bound {
        if let Some(q) = l
            .factors(n)
            .iter()
            .find(|q| !q.is_palindrome() && all_four(q))
        {
            let reverified = raw_pairs(l, q).len() == 4 && !q.is_palindrome();
            return Ok(WitnessReport {
                witness: Some(Witness {
                    word: q.clone(),
                    graph: None,
                }),
                outcome: WitnessOutcome::Found,
                reverified,
                ..report(STATEMENT, bound, WitnessOutcome::Found)
            });
        }
    }
    Ok(report(
        STATEMENT,
        bound,
        WitnessOutcome::NotFoundWithinBound,
    ))
}

fn has_cycle(l: &LanguageSnapshot, q: &Word) -> Result<Option<GraphKind>> {
    if q.is_palindrome() {
        let c = theta_graph(l, q)?.classify();
        Ok(c.has_cycle.then_some(GraphKind::Theta))
    } else {
        let c = gamma_graph(l, q)?.classify();
        Ok(c.has_cycle.then_some(GraphKind::Gamma))
    }
}

/// First `q`, by length then order, whose graph has a cycle: `Θ(q)` for
/// palindromes, `Γ(q)` otherwise.
pub fn cycle_witness(l: &LanguageSnapshot) -> Result<WitnessReport> {
    cycle_witness_from(l, 0)
}

/// As [`cycle_witness`] but only for `|q| ≥ min_len`.
pub fn cycle_witness_from(l: &LanguageSnapshot, min_len: usize) -> Result<WitnessReport> {
    const STATEMENT: &str = "thm72";
    let bound = search_bound(l);
    if !l.is_closed_under_reversal() {
        return Ok(report(STATEMENT, bound, WitnessOutcome::HypothesisFails));
    }
    let mut first: Option<(Word, GraphKind)> = None;
    let mut only_empty = true;
    'scan: for n in min_len..=bound {
        for q in l.factors(n) {
            if let Some(kind) = has_cycle(l, q)? {
                if first.is_none() {
                    first = Some((q.clone(), kind));
                    if !q.is_empty() {
                        only_empty = false;
                        break 'scan;
                    }
                } else {
                    only_empty = false;
                    break 'scan;
                }
            }
        }
    }
    let Some((word, kind)) = first else {
        return Ok(report(
            STATEMENT,
            bound,
            WitnessOutcome::NotFoundWithinBound,
        ));
    };
    let reverified = raw_cycle(l, &word, kind);
    let letter_return = (word.is_empty() && only_empty).then(|| letter_return_supplement(l));
    Ok(WitnessReport {
        witness: Some(Witness {
            word,
            graph: Some(kind),
        }),
        outcome: WitnessOutcome::Found,
        letter_return,
        reverified,
        ..report(STATEMENT, bound, WitnessOutcome::Found)
    })
}

/// First `q` with `|q| ≥ min_len` whose `Γ(q)` has a cycle, palindrome or not.
pub fn gamma_cycle_scan(l: &LanguageSnapshot, min_len: usize) -> Result<Option<Word>> {
    for n in min_len..=search_bound(l) {
        for q in l.factors(n) {
            if gamma_graph(l, q)?.classify().has_cycle {
                debug_assert!(raw_cycle(l, q, GraphKind::Gamma));
                return Ok(Some(q.clone()));
            }
        }
    }
    Ok(None)
}

fn letter_return_supplement(l: &LanguageSnapshot) -> Option<LetterReturn> {
    let m = l.morphism();
    let stream = m.fixed_point_prefix(l.seed(), LETTER_RETURN_HORIZON).ok()?;
    for a in m.alphabet().letters() {
        let w = Word::new(m.alphabet(), vec![a]);
        if let Ok(r) = complete_return_words(&stream, &w) {
            if let Some(bad) = r.returns.iter().find(|r| !r.is_palindrome()) {
                return Some(LetterReturn {
                    letter: a,
                    return_word: bad.clone(),
                    horizon: stream.len(),
                });
            }
        }
    }
    None
}

/// Pairs `(a, b)` with `aqb` in the snapshot, straight from membership.
fn raw_pairs(l: &LanguageSnapshot, q: &Word) -> BTreeSet<(usize, usize)> {
    let letters: Vec<Letter> = l.morphism().alphabet().letters().collect();
    let mut out = BTreeSet::new();
    for &a in &letters {
        for &b in &letters {
            if l.contains(&q.wrap(Some(a), Some(b))) {
                out.insert((a.id(), b.id()));
            }
        }
    }
    out
}

/// Independent cycle test by depth-first search over the raw pairs.
fn raw_cycle(l: &LanguageSnapshot, q: &Word, kind: GraphKind) -> bool {
    let k = l.morphism().alphabet().len();
    let pairs = raw_pairs(l, q);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * k];
    for &(a, b) in &pairs {
        let (u, v) = match kind {
            GraphKind::Gamma => (a, k + b),
            GraphKind::Theta if a < b => (a, b),
            GraphKind::Theta => continue,
        };
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; 2 * k];
    for start in 0..2 * k {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, usize::MAX)];
        seen[start] = true;
        while let Some((v, parent)) = stack.pop() {
            for &next in &adj[v] {
                if next == parent {
                    continue;
                }
                if seen[next] {
                    return true;
                }
                seen[next] = true;
                stack.push((next, v));
            }
        }
    }
    false
}
