use crate::error::Result;
use crate::graphs::check_multiplicity_lemmas;
use crate::language::LanguageSnapshot;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeFailure {
    pub word: Word,
    pub palindrome: bool,
    pub multiplicity: i64,
    /// `0` for non-palindromes, `#E⁼(w) − 1` for palindromes.
    pub expected: i64,
    pub graph_is_tree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub k: usize,
    /// Largest length checked, `n_max − 2`.
    pub upper: usize,
    /// Failures with `|w| ≥ k`.
    pub failures: Vec<ShapeFailure>,
    /// Smallest `K` with no failure in `K..=upper`.
    pub smallest_working_k: Option<usize>,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Non-palindromes need `Γ(w)` a tree and `m(w) = 0`; palindromes need
/// `Θ(w)` a tree and `m(w) = #E⁼(w) − 1`.
pub fn finite_defect_shape_check(l: &LanguageSnapshot, k: usize) -> Result<ShapeReport> {
    let upper = l.n_max().saturating_sub(2);
    let mut all = Vec::new();
    for n in 0..=upper {
        for w in l.factors(n) {
            let r = check_multiplicity_lemmas(l, w)?;
            let (expected, tree) = match (&r.theta, w.is_palindrome()) {
                (Some(t), true) => (t.symmetric_count as i64 - 1, t.classification.is_tree),
                _ => (0, r.gamma_classification.is_tree),
            };
            if r.multiplicity != expected || !tree {
                all.push(ShapeFailure {
                    word: w.clone(),
                    palindrome: w.is_palindrome(),
                    multiplicity: r.multiplicity,
                    expected,
                    graph_is_tree: tree,
                });
            }
        }
    }
    let smallest_working_k = smallest_clear(all.iter().map(|f| f.word.len()), upper);
    all.retain(|f| f.word.len() >= k);
    Ok(ShapeReport {
        k,
        upper,
        failures: all,
        smallest_working_k,
    })
}

fn smallest_clear(failing: impl Iterator<Item = usize>, upper: usize) -> Option<usize> {
    match failing.max() {
        None => Some(0),
        Some(n) if n < upper => Some(n + 1),
        Some(_) => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop54Row {
    pub n: usize,
    /// `C(n+2) − 2C(n+1) + C(n)`
    pub second_difference: i64,
    /// `P(n+2) − P(n)`
    pub palindrome_difference: i64,
}

impl Prop54Row {
    pub fn holds(&self) -> bool {
        self.second_difference == self.palindrome_difference
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop54Report {
    pub m: usize,
    pub upper: usize,
    /// One row per `n` in `0..=upper`.
    pub rows: Vec<Prop54Row>,
    pub smallest_working_m: Option<usize>,
}

impl Prop54Report {
    pub fn failures(&self) -> impl Iterator<Item = &Prop54Row> {
        self.rows
            .iter()
            .filter(move |r| r.n >= self.m && !r.holds())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

pub fn prop54_check(l: &LanguageSnapshot, m: usize) -> Prop54Report {
    let upper = l.n_max().saturating_sub(2);
    let (c, p) = l.complexities();
    let rows: Vec<Prop54Row> = (0..=upper)
        .map(|n| Prop54Row {
            n,
            second_difference: c[n + 2] as i64 - 2 * c[n + 1] as i64 + c[n] as i64,
            palindrome_difference: p[n + 2] as i64 - p[n] as i64,
        })
        .collect();
    let smallest_working_m = smallest_clear(rows.iter().filter(|r| !r.holds()).map(|r| r.n), upper);
    Prop54Report {
        m,
        upper,
        rows,
        smallest_working_m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use std::collections::BTreeSet;

    fn snap(m: crate::Morphism) -> LanguageSnapshot {
        LanguageSnapshot::build(&m, 16).unwrap()
    }

    #[test]
    fn shape_thresholds() {
        let fib = finite_defect_shape_check(&snap(corpus::fibonacci()), 1).unwrap();
        assert!(fib.passed());
        assert_eq!(fib.smallest_working_k, Some(0));
        let bv = finite_defect_shape_check(&snap(corpus::bucci_vaslet()), 4).unwrap();
        assert!(bv.passed(), "{:?}", bv.failures);
        assert!(bv.smallest_working_k.unwrap() <= 4);
        // the non-palindromic bispecials of Thue–Morse sit at lengths 2, 6, 8, 24, 32, ...
        let tm = finite_defect_shape_check(&snap(corpus::thue_morse()), 0).unwrap();
        let lengths: BTreeSet<usize> = tm.failures.iter().map(|f| f.word.len()).collect();
        assert_eq!(lengths, BTreeSet::from([2, 6, 8]));
        assert_eq!(tm.smallest_working_k, Some(9));
        let wide = LanguageSnapshot::build(&corpus::thue_morse(), 34).unwrap();
        let tm = finite_defect_shape_check(&wide, 0).unwrap();
        let lengths: BTreeSet<usize> = tm.failures.iter().map(|f| f.word.len()).collect();
        assert_eq!(lengths, BTreeSet::from([2, 6, 8, 24, 32]));
        assert_eq!(tm.smallest_working_k, None);
    }

    #[test]
    fn prop54_thresholds() {
        let fib = prop54_check(&snap(corpus::fibonacci()), 1);
        assert!(fib.passed());
        assert!(fib.rows.iter().all(|r| r.second_difference == 0));
        let bv = prop54_check(&snap(corpus::bucci_vaslet()), 0);
        assert_eq!(bv.smallest_working_m, Some(2));
        assert!(!bv.passed());
        let tm = prop54_check(&snap(corpus::thue_morse()), 0);
        let failing: Vec<usize> = tm.failures().map(|r| r.n).collect();
        assert_eq!(failing, [2, 6, 8]);
        let wide = prop54_check(
            &LanguageSnapshot::build(&corpus::thue_morse(), 34).unwrap(),
            0,
        );
        let failing: Vec<usize> = wide.failures().map(|r| r.n).collect();
        assert_eq!(failing, [2, 6, 8, 24, 32]);
        assert_eq!(wide.smallest_working_m, None);
    }

    #[test]
    fn smallest_clear_edges() {
        assert_eq!(smallest_clear([].into_iter(), 5), Some(0));
        assert_eq!(smallest_clear([1, 3].into_iter(), 5), Some(4));
        assert_eq!(smallest_clear([5].into_iter(), 5), None);
    }
}
