//! Finite snapshots of the language of a primitive morphism's fixed point.
//!
//! For a primitive `φ` with fixed point `u`, every factor of length `n` of
//! `u = φʳ(u)` lies inside `φʳ(xy)` for some two-letter factor `xy` as soon as
//! every `|φʳ(a)| ≥ n − 1`. The snapshot iterates `φ` on the two-letter
//! factors, cuts windows of every length up to `n_max`, and stops once that
//! coverage bound holds and two successive rounds add nothing. A fixed-point
//! prefix twice as long as needed to witness every top-length factor is then
//! cut as an independent cross-check.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word::{Letter, Word};

pub const DEFAULT_N_MAX: usize = 24;
pub const DEFAULT_ROUND_CAP: usize = 30;
const SEED_CAP: usize = 1 << 22;

#[derive(Debug, Clone, Copy)]
pub struct SnapshotOptions {
    pub n_max: usize,
    pub round_cap: usize,
    pub seed: Option<Letter>,
}

impl Default for SnapshotOptions {
    fn default() -> Self {
        SnapshotOptions {
            n_max: DEFAULT_N_MAX,
            round_cap: DEFAULT_ROUND_CAP,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationEvidence {
    /// Number of refinement rounds run.
    pub rounds: usize,
    /// First round at which every `|φʳ(a)| ≥ n_max − 1`.
    pub coverage_round: usize,
    /// Per length, the last round that added a new factor.
    pub last_growth_round: Vec<usize>,
    /// Shortest fixed-point prefix containing every factor of length `n_max`.
    pub witness_length: usize,
    /// Length of the prefix actually cut for the cross-check.
    pub seed_length: usize,
}

#[derive(Debug, Clone)]
pub struct LanguageSnapshot {
    morphism: Morphism,
    seed: Letter,
    n_max: usize,
    factors: Vec<BTreeSet<Word>>,
    evidence: StabilizationEvidence,
    reversal_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionData {
    pub word: Word,
    /// `E⁻(w)`
    pub left: BTreeSet<Letter>,
    /// `E⁺(w)`
    pub right: BTreeSet<Letter>,
    /// `E(w)`, pairs `(a, b)` with `awb` a factor.
    pub both: BTreeSet<(Letter, Letter)>,
    /// `E⁼(w)`
    pub symmetric: BTreeSet<Letter>,
    /// Bilateral multiplicity `#E − #E⁺ − #E⁻ + 1`.
    pub multiplicity: i64,
}

impl ExtensionData {
    pub fn is_bispecial(&self) -> bool {
        self.left.len() >= 2 && self.right.len() >= 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BispecialKind {
    Strong,
    Weak,
    Neutral,
}

impl BispecialKind {
    pub fn of_multiplicity(m: i64) -> Self {
        match m.signum() {
            1 => BispecialKind::Strong,
            -1 => BispecialKind::Weak,
            _ => BispecialKind::Neutral,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BispecialKind::Strong => "strong",
            BispecialKind::Weak => "weak",
            BispecialKind::Neutral => "neutral",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bispecial {
    pub word: Word,
    pub kind: BispecialKind,
    pub multiplicity: i64,
}

/// Both sides of `C(n+2) − 2C(n+1) + C(n) = Σ_{|w|=n} m(w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq1Report {
    pub n: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl Eq1Report {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl LanguageSnapshot {
    pub fn build(m: &Morphism, n_max: usize) -> Result<Self> {
        Self::build_with(
            m,
            SnapshotOptions {
                n_max,
                ..Default::default()
            },
        )
    }

    pub fn build_with(m: &Morphism, opts: SnapshotOptions) -> Result<Self> {
        if !m.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let seed = match opts.seed {
            Some(s) => {
                let img = m.image(s);
                if img[0] != s || img.len() < 2 {
                    return Err(Error::NotGrowingFixedPoint(m.alphabet().symbol(s)));
                }
                s
            }
            None => *m
                .growing_fixed_point_letters()
                .first()
                .ok_or(Error::NoGrowingFixedPoint)?,
        };
        let n_max = opts.n_max;

        let two = two_letter_factors(m, seed);
        let mut sets: Vec<HashSet<Vec<Letter>>> = vec![HashSet::new(); n_max + 1];
        sets[0].insert(Vec::new());
        let mut last_growth_round = vec![0usize; n_max + 1];
        for x in &two {
            add_windows(&mut sets, x, 0, &mut last_growth_round);
        }
        let mut letter_lens: Vec<usize> = vec![1; m.alphabet().len()];
        let mut images: Vec<Vec<Letter>> = two.iter().cloned().collect();
        let mut coverage_round = None;
        let mut quiet_rounds = 0;
        let mut round = 0;
        let needed = n_max.saturating_sub(1);
        loop {
            if coverage_round.is_none() && letter_lens.iter().all(|&l| l >= needed) {
                coverage_round = Some(round);
            }
            if coverage_round.is_some() && quiet_rounds >= 2 {
                break;
            }
            if round >= opts.round_cap {
                return Err(Error::StabilizationCap {
                    cap: opts.round_cap,
                });
            }
            round += 1;
            images = images.iter().map(|w| m.apply_letters(w)).collect();
            letter_lens = m
                .images()
                .iter()
                .map(|img| img.iter().map(|l| letter_lens[l.id()]).sum())
                .collect();
            let grew = images
                .iter()
                .filter(|w| add_windows(&mut sets, w, round, &mut last_growth_round))
                .count()
                > 0;
            quiet_rounds = if grew { 0 } else { quiet_rounds + 1 };
        }

        let alphabet = m.alphabet();
        let factors: Vec<BTreeSet<Word>> = sets
            .into_iter()
            .map(|s| s.into_iter().map(|l| Word::new(alphabet, l)).collect())
            .collect();

        let (witness_length, seed_length) = cross_check(m, seed, n_max, &factors)?;
        let reversal_closed = factors
            .iter()
            .all(|set| set.iter().all(|w| set.contains(&w.reverse())));

        Ok(LanguageSnapshot {
            morphism: m.clone(),
            seed,
            n_max,
            factors,
            evidence: StabilizationEvidence {
                rounds: round,
                coverage_round: coverage_round.unwrap_or(round),
                last_growth_round,
                witness_length,
                seed_length,
            },
            reversal_closed,
        })
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn evidence(&self) -> &StabilizationEvidence {
        &self.evidence
    }

    /// Factors of length `n`; empty beyond `n_max`.
    pub fn factors(&self, n: usize) -> &BTreeSet<Word> {
        static EMPTY: BTreeSet<Word> = BTreeSet::new();
        self.factors.get(n).unwrap_or(&EMPTY)
    }

    pub fn all_factors(&self) -> impl Iterator<Item = &Word> {
        self.factors.iter().flatten()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.factors.get(w.len()).is_some_and(|set| set.contains(w))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(self.morphism.alphabet(), text)
    }

    pub fn is_closed_under_reversal(&self) -> bool {
        self.reversal_closed
    }

    pub fn extensions(&self, w: &Word) -> Result<ExtensionData> {
        if w.len() + 2 > self.n_max {
            return Err(Error::TooLongForExtensions {
                len: w.len(),
                n_max: self.n_max,
            });
        }
        if !self.contains(w) {
            return Err(Error::NotInLanguage(w.to_string()));
        }
        let alphabet = self.morphism.alphabet();
        let mut left = BTreeSet::new();
        let mut right = BTreeSet::new();
        let mut both = BTreeSet::new();
        for a in alphabet.letters() {
            if self.contains(&w.wrap(Some(a), None)) {
                left.insert(a);
            }
            if self.contains(&w.wrap(None, Some(a))) {
                right.insert(a);
            }
        }
        for &a in &left {
            for &b in &right {
                if self.contains(&w.wrap(Some(a), Some(b))) {
                    both.insert((a, b));
                }
            }
        }
        let symmetric = both.iter().filter(|(a, b)| a == b).map(|p| p.0).collect();
        let multiplicity = both.len() as i64 - left.len() as i64 - right.len() as i64 + 1;
        Ok(ExtensionData {
            word: w.clone(),
            left,
            right,
            both,
            symmetric,
            multiplicity,
        })
    }

    /// `(C(n), P(n))` for `n = 0..=n_max`.
    pub fn complexities(&self) -> (Vec<usize>, Vec<usize>) {
        let c = self.factors.iter().map(BTreeSet::len).collect();
        let p = self
            .factors
            .iter()
            .map(|s| s.iter().filter(|w| w.is_palindrome()).count())
            .collect();
        (c, p)
    }

    pub fn bispecial_factors(&self, n: usize) -> Result<Vec<Bispecial>> {
        let mut out = Vec::new();
        for w in self.factors(n) {
            let ext = self.extensions(w)?;
            if ext.is_bispecial() {
                out.push(Bispecial {
                    word: w.clone(),
                    kind: BispecialKind::of_multiplicity(ext.multiplicity),
                    multiplicity: ext.multiplicity,
                });
            }
        }
        Ok(out)
    }

    pub fn check_eq1(&self, n: usize) -> Result<Eq1Report> {
        if n + 2 > self.n_max {
            return Err(Error::TooLongForExtensions {
                len: n,
                n_max: self.n_max,
            });
        }
        let c = |k: usize| self.factors[k].len() as i64;
        let lhs = c(n + 2) - 2 * c(n + 1) + c(n);
        let mut rhs = 0;
        for w in self.factors(n) {
            rhs += self.extensions(w)?.multiplicity;
        }
        Ok(Eq1Report { n, lhs, rhs })
    }
}

fn two_letter_factors(m: &Morphism, seed: Letter) -> BTreeSet<Vec<Letter>> {
    let mut set: BTreeSet<Vec<Letter>> = m
        .image(seed)
        .letters()
        .windows(2)
        .map(<[Letter]>::to_vec)
        .collect();
    loop {
        let mut next = set.clone();
        for x in &set {
            for w in m.apply_letters(x).windows(2) {
                next.insert(w.to_vec());
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn add_windows(
    sets: &mut [HashSet<Vec<Letter>>],
    word: &[Letter],
    round: usize,
    last_growth: &mut [usize],
) -> bool {
    let mut grew = false;
    for n in 1..sets.len() {
        if n > word.len() {
            break;
        }
        for w in word.windows(n) {
            if !sets[n].contains(w) {
                sets[n].insert(w.to_vec());
                last_growth[n] = round;
                grew = true;
            }
        }
    }
    grew
}

/// Cuts a fixed-point prefix of twice the witness length and checks its
/// factors against the snapshot.
fn cross_check(
    m: &Morphism,
    seed: Letter,
    n_max: usize,
    factors: &[BTreeSet<Word>],
) -> Result<(usize, usize)> {
    let top = &factors[n_max];
    let mut len = 64usize.max(4 * n_max);
    let witness = loop {
        let prefix = m.fixed_point_prefix(seed, len)?;
        let mut missing: HashSet<&[Letter]> = top.iter().map(Word::letters).collect();
        let mut found = None;
        for (i, w) in prefix.letters().windows(n_max.max(1)).enumerate() {
            let w = &w[..n_max];
            missing.remove(w);
            if missing.is_empty() {
                found = Some(i + n_max);
                break;
            }
        }
        if n_max == 0 {
            found = Some(0);
        }
        if let Some(found) = found {
            break found;
        }
        if len >= SEED_CAP {
            return Err(Error::SeedWitnessExceeded { cap: SEED_CAP });
        }
        len *= 2;
    };
    let seed_length = (2 * witness).max(n_max);
    let prefix = m.fixed_point_prefix(seed, seed_length)?;
    for (n, set) in factors.iter().enumerate() {
        let cut: BTreeSet<Word> = prefix.factors(n);
        assert!(
            cut == *set,
            "snapshot and fixed-point prefix disagree at length {n}"
        );
    }
    Ok((witness, seed_length))
}

pub fn build_snapshot(m: &Morphism, n_max: usize) -> Result<LanguageSnapshot> {
    LanguageSnapshot::build(m, n_max)
}

pub fn extensions(l: &LanguageSnapshot, w: &Word) -> Result<ExtensionData> {
    l.extensions(w)
}

pub fn complexities(l: &LanguageSnapshot) -> (Vec<usize>, Vec<usize>) {
    l.complexities()
}

pub fn bispecial_factors(l: &LanguageSnapshot, n: usize) -> Result<Vec<Bispecial>> {
    l.bispecial_factors(n)
}

pub fn check_eq1(l: &LanguageSnapshot, n: usize) -> Result<Eq1Report> {
    l.check_eq1(n)
}

pub fn is_closed_under_reversal(l: &LanguageSnapshot) -> bool {
    l.is_closed_under_reversal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn strings(set: &BTreeSet<Word>) -> Vec<String> {
        set.iter().map(|w| w.to_string()).collect()
    }

    fn sorted(words: &[&str]) -> Vec<String> {
        let mut v: Vec<String> = words.iter().map(|s| s.to_string()).collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    #[test]
    fn bucci_vaslet_short_factors() {
        let l = LanguageSnapshot::build(&corpus::bucci_vaslet(), 3).unwrap();
        assert_eq!(
            strings(l.factors(2)),
            sorted(&["aa", "ab", "ac", "ba", "ca", "bc", "cb"])
        );
        assert_eq!(
            strings(l.factors(3)),
            sorted(&["aaa", "aab", "abc", "acb", "baa", "bca", "cac", "cba"])
        );
        assert_eq!(strings(l.factors(0)), [""]);
    }

    #[test]
    fn fibonacci_is_sturmian() {
        let l = LanguageSnapshot::build(&corpus::fibonacci(), 20).unwrap();
        let (c, p) = l.complexities();
        for n in 0..=20 {
            assert_eq!(c[n], n + 1);
            let expected_p = if n % 2 == 0 { 1 } else { 2 };
            assert_eq!(p[n], expected_p, "P({n})");
        }
    }

    #[test]
    fn complexities_of_empty_word() {
        let l = LanguageSnapshot::build(&corpus::thue_morse(), 4).unwrap();
        let (c, p) = l.complexities();
        assert_eq!((c[0], p[0]), (1, 1));
    }

    #[test]
    fn bucci_vaslet_extensions() {
        let l = LanguageSnapshot::build(&corpus::bucci_vaslet(), 8).unwrap();
        let m = |s: &str| l.extensions(&l.parse_word(s).unwrap()).unwrap();
        assert_eq!(m("").multiplicity, 2);
        assert_eq!(m("").symmetric.len(), 1);
        assert_eq!(m("a").multiplicity, -1);
        assert_eq!(m("b").multiplicity, -1);
        assert_eq!(m("c").multiplicity, -1);
        let e = m("aaab");
        let a = l.parse_word("a").unwrap()[0];
        let b = l.parse_word("b").unwrap()[0];
        let c = l.parse_word("c").unwrap()[0];
        assert_eq!(e.both, BTreeSet::from([(a, c), (b, c)]));
    }

    #[test]
    fn extension_errors() {
        let l = LanguageSnapshot::build(&corpus::bucci_vaslet(), 5).unwrap();
        assert_eq!(
            l.extensions(&l.parse_word("bb").unwrap()).unwrap_err(),
            Error::NotInLanguage("bb".into())
        );
        assert_eq!(
            l.extensions(&l.parse_word("aaaa").unwrap()).unwrap_err(),
            Error::TooLongForExtensions { len: 4, n_max: 5 }
        );
    }

    #[test]
    fn bucci_vaslet_bispecials() {
        let l = LanguageSnapshot::build(&corpus::bucci_vaslet(), 6).unwrap();
        let b0 = l.bispecial_factors(0).unwrap();
        assert_eq!(b0.len(), 1);
        assert_eq!(b0[0].kind, BispecialKind::Strong);
        assert_eq!(b0[0].multiplicity, 2);
        let b1 = l.bispecial_factors(1).unwrap();
        assert_eq!(b1.len(), 3);
        assert!(b1
            .iter()
            .all(|b| b.kind == BispecialKind::Weak && b.multiplicity == -1));
    }

    #[test]
    fn fibonacci_bispecials_are_neutral() {
        let l = LanguageSnapshot::build(&corpus::fibonacci(), 18).unwrap();
        for n in 0..=16 {
            let bs = l.bispecial_factors(n).unwrap();
            assert!(bs.len() <= 1);
            assert!(bs.iter().all(|b| b.multiplicity == 0));
        }
    }

    #[test]
    fn eq1_examples() {
        let l = LanguageSnapshot::build(&corpus::bucci_vaslet(), 6).unwrap();
        assert_eq!(
            l.check_eq1(0).unwrap(),
            Eq1Report {
                n: 0,
                lhs: 2,
                rhs: 2
            }
        );
        assert_eq!(
            l.check_eq1(1).unwrap(),
            Eq1Report {
                n: 1,
                lhs: -3,
                rhs: -3
            }
        );
        let fib = LanguageSnapshot::build(&corpus::fibonacci(), 17).unwrap();
        for n in 0..=15 {
            let r = fib.check_eq1(n).unwrap();
            assert_eq!((r.lhs, r.rhs), (0, 0));
        }
    }

    #[test]
    fn reversal_closure() {
        assert!(LanguageSnapshot::build(&corpus::fibonacci(), 12)
            .unwrap()
            .is_closed_under_reversal());
        assert!(LanguageSnapshot::build(&corpus::bucci_vaslet(), 12)
            .unwrap()
            .is_closed_under_reversal());
        // 0 -> 01, 1 -> 100 contains 1011 but never 1101
        let m = Morphism::from_rules(&[('0', "01"), ('1', "100")]).unwrap();
        let l = LanguageSnapshot::build(&m, 6).unwrap();
        assert!(l.contains(&l.parse_word("1011").unwrap()));
        assert!(!l.contains(&l.parse_word("1101").unwrap()));
        assert!(!l.is_closed_under_reversal());
    }

    #[test]
    fn rejects_bad_morphisms() {
        let m = Morphism::from_rules(&[('a', "ab"), ('b', "b")]).unwrap();
        assert_eq!(
            LanguageSnapshot::build(&m, 4).unwrap_err(),
            Error::NotPrimitive
        );
        let m = Morphism::from_rules(&[('a', "b"), ('b', "aab")]).unwrap();
        assert_eq!(
            LanguageSnapshot::build(&m, 4).unwrap_err(),
            Error::NoGrowingFixedPoint
        );
    }

    #[test]
    fn round_cap_is_reported() {
        let opts = SnapshotOptions {
            n_max: 24,
            round_cap: 2,
            seed: None,
        };
        assert_eq!(
            LanguageSnapshot::build_with(&corpus::fibonacci(), opts).unwrap_err(),
            Error::StabilizationCap { cap: 2 }
        );
    }

    #[test]
    fn non_bispecial_factors_have_zero_multiplicity() {
        for m in [
            corpus::fibonacci(),
            corpus::thue_morse(),
            corpus::bucci_vaslet(),
        ] {
            let l = LanguageSnapshot::build(&m, 10).unwrap();
            for n in 0..=8 {
                for w in l.factors(n) {
                    let e = l.extensions(w).unwrap();
                    if !e.is_bispecial() {
                        assert_eq!(e.multiplicity, 0, "{w}");
                    }
                    assert!(e
                        .both
                        .iter()
                        .all(|(a, b)| e.left.contains(a) && e.right.contains(b)));
                }
            }
        }
    }
}
