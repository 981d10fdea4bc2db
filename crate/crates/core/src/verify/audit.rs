use crate::corpus;
use crate::error::Result;
use crate::language::LanguageSnapshot;
use crate::morphism::{marked_profile, MarkedProfile, Morphism};
use crate::palindrome::defect_stream;
use crate::returns::complete_return_words;
use crate::word::{Letter, Word};

use super::defect::{defect_verdict, DefectOptions, DefectVerdict};
use super::witness::LetterReturn;

/// Snapshot length used to decide reversal closure in the audit.
const AUDIT_N_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditConclusion {
    /// All hypotheses hold, so the defect should be zero.
    Applies { consistent: bool },
    /// Some hypothesis fails; the theorem says nothing.
    Silent { reasons: Vec<&'static str> },
}

impl AuditConclusion {
    pub fn consistent(&self) -> bool {
        match self {
            AuditConclusion::Applies { consistent } => *consistent,
            AuditConclusion::Silent { .. } => true,
        }
    }
}

/// Eventually periodic fixed points of marked morphisms with a palindromic
/// language can only be `(01)^ω` or `(10)^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicScreen {
    pub period: usize,
    pub binary: bool,
    pub alternating: bool,
}

impl PeriodicScreen {
    pub fn consistent(&self) -> bool {
        self.binary && self.alternating
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub morphism: Morphism,
    pub primitive: bool,
    pub profile: MarkedProfile,
    pub seed: Option<Letter>,
    pub defect: Option<DefectVerdict>,
    pub reversal_closed: Option<bool>,
    /// `None` when every complete letter return up to the horizon is a palindrome.
    pub non_palindromic_letter_return: Option<LetterReturn>,
    pub letter_return_horizon: usize,
    /// All images share a first letter or all share a last letter.
    pub nontrivial_conjugate: bool,
    pub periodic_screen: Option<PeriodicScreen>,
    pub conclusion: AuditConclusion,
}

impl AuditReport {
    pub fn consistent(&self) -> bool {
        self.conclusion.consistent()
            && self
                .periodic_screen
                .as_ref()
                .is_none_or(PeriodicScreen::consistent)
    }
}

pub fn main_theorem_audit(m: &Morphism, opts: DefectOptions) -> Result<AuditReport> {
    let primitive = m.is_primitive();
    let profile = marked_profile(m);
    let seed = m.growing_fixed_point_letters().first().copied();
    let defect = match (primitive, seed) {
        (true, Some(s)) => Some(defect_verdict(m, s, opts)?),
        _ => None,
    };
    let reversal_closed = match (primitive, seed) {
        (true, Some(_)) => {
            Some(LanguageSnapshot::build(m, AUDIT_N_MAX)?.is_closed_under_reversal())
        }
        _ => None,
    };
    let horizon = opts.horizon;
    let non_palindromic_letter_return = match seed {
        Some(s) => first_bad_letter_return(m, s, horizon)?,
        None => None,
    };
    let firsts = m.fst();
    let lasts = m.lst();
    let nontrivial_conjugate = firsts.is_constant() || lasts.is_constant();

    let mut reasons = Vec::new();
    if !primitive {
        reasons.push("not primitive");
    }
    if !profile.is_marked {
        reasons.push("not marked");
    }
    let stable = defect.as_ref().and_then(DefectVerdict::stable_value);
    if stable.is_none() {
        reasons.push("defect not finite at horizon");
    }
    if non_palindromic_letter_return.is_some() && !nontrivial_conjugate {
        reasons.push("letter returns not all palindromic and no nontrivial conjugate");
    }
    let conclusion = if reasons.is_empty() {
        AuditConclusion::Applies {
            consistent: stable == Some(0),
        }
    } else {
        AuditConclusion::Silent { reasons }
    };

    let periodic_screen = match &defect {
        Some(v) if profile.is_marked && reversal_closed == Some(true) => v.period.map(|period| {
            let prefix = m
                .fixed_point_prefix(seed.unwrap(), 4 * opts.period_bound)
                .unwrap();
            PeriodicScreen {
                period,
                binary: m.alphabet().len() == 2,
                alternating: period == 2 && prefix[0] != prefix[1],
            }
        }),
        _ => None,
    };

    Ok(AuditReport {
        morphism: m.clone(),
        primitive,
        profile,
        seed,
        defect,
        reversal_closed,
        non_palindromic_letter_return,
        letter_return_horizon: horizon,
        nontrivial_conjugate,
        periodic_screen,
        conclusion,
    })
}

fn first_bad_letter_return(
    m: &Morphism,
    seed: Letter,
    horizon: usize,
) -> Result<Option<LetterReturn>> {
    let stream = m.fixed_point_prefix(seed, horizon)?;
    for a in m.alphabet().letters() {
        let w = Word::new(m.alphabet(), vec![a]);
        if let Ok(r) = complete_return_words(&stream, &w) {
            if let Some(bad) = r.returns.into_iter().find(|r| !r.is_palindrome()) {
                return Ok(Some(LetterReturn {
                    letter: a,
                    return_word: bad,
                    horizon,
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section8Report {
    pub prefix_length: usize,
    /// First index where the coded prefix and the fixed point differ.
    pub first_mismatch: Option<usize>,
    pub v_checkpoints: Vec<(usize, usize)>,
}

impl Section8Report {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }

    pub fn v_zero_defect(&self) -> bool {
        self.v_checkpoints.iter().all(|&(_, d)| d == 0)
    }

    pub fn passed(&self) -> bool {
        self.matches() && self.v_zero_defect()
    }
}

pub fn section8_decomposition_check(
    prefix_length: usize,
    defect_horizon: usize,
) -> Result<Section8Report> {
    let (mu, pi) = corpus::section8_mu_pi();
    let bv = corpus::bucci_vaslet();
    let a = mu.letter('a').expect("μ has letter a");
    let v = mu.fixed_point_prefix(a, prefix_length)?;
    let coded = pi.apply(&v)?.prefix(prefix_length);
    let u = bv.fixed_point_prefix(bv.letter('a').expect("a"), prefix_length)?;
    let first_mismatch = coded
        .letters()
        .iter()
        .zip(u.letters())
        .position(|(x, y)| x != y);
    let v_checkpoints = defect_stream(&mu, a, &super::defect::checkpoints(defect_horizon))?;
    Ok(Section8Report {
        prefix_length,
        first_mismatch,
        v_checkpoints,
    })
}
