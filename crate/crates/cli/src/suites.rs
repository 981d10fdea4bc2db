use clap::ValueEnum;
use paldefect::graphs::{check_multiplicity_lemmas, LemmaOutcome, MultiplicityReport};
use paldefect::verify::{
    binary_witness, cycle_witness, defect_verdict, finite_defect_shape_check, main_theorem_audit,
    phi_property_suite, prop54_check, section8_decomposition_check, WitnessOutcome, WitnessReport,
    DEFAULT_SAMPLES,
};
use paldefect::{LanguageSnapshot, Word};
use serde_json::{json, Value};

use crate::{envelope, parse_query, report, Failure, Outcome, RunConfig, EXIT_FAILED, EXIT_OK};

/// Fixed sizes for the decomposition check.
pub const SECTION8_PREFIX: usize = 500;
pub const SECTION8_HORIZON: usize = 2000;
/// Default threshold for `prop54` and `thm55`, clamped to `n_max − 2`.
pub const DEFAULT_THRESHOLD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Eq1,
    Lemma42,
    Lemma44,
    Prop54,
    Thm55,
    Lemma61,
    Thm72,
    Phi,
    Audit,
    Section8,
}

impl Suite {
    pub fn id(self) -> &'static str {
        match self {
            Suite::Eq1 => "eq1",
            Suite::Lemma42 => "lemma42",
            Suite::Lemma44 => "lemma44",
            Suite::Prop54 => "prop54",
            Suite::Thm55 => "thm55",
            Suite::Lemma61 => "lemma61",
            Suite::Thm72 => "thm72",
            Suite::Phi => "phi",
            Suite::Audit => "audit",
            Suite::Section8 => "section8",
        }
    }
}

struct Verdict {
    pass: bool,
    label: &'static str,
    witnesses: Vec<Value>,
    details: Value,
}

impl Verdict {
    fn pass_fail(pass: bool, witnesses: Vec<Value>, details: Value) -> Self {
        Verdict {
            pass,
            label: if pass { "pass" } else { "fail" },
            witnesses,
            details,
        }
    }
}

pub fn cmd_verify(
    config: &RunConfig,
    suite: Suite,
    word: Option<&str>,
    n: Option<usize>,
) -> Result<Outcome, Failure> {
    let v = match suite {
        Suite::Section8 => section8()?,
        _ => {
            let m = config.morphism()?;
            match suite {
                Suite::Phi => phi(&m)?,
                Suite::Audit => audit(config, &m)?,
                _ => {
                    let l = config.snapshot(&m)?;
                    let word = word.map(|t| parse_query(&l, t)).transpose()?;
                    match suite {
                        Suite::Eq1 => eq1(&l, n)?,
                        Suite::Lemma42 => lemmas(&l, word, false)?,
                        Suite::Lemma44 => lemmas(&l, word, true)?,
                        Suite::Prop54 => prop54(&l, threshold(&l, n)),
                        Suite::Thm55 => thm55(&l, threshold(&l, n))?,
                        Suite::Lemma61 => existence(config, &l, binary_witness(&l)?)?,
                        Suite::Thm72 => existence(config, &l, cycle_witness(&l)?)?,
                        Suite::Phi | Suite::Audit | Suite::Section8 => unreachable!(),
                    }
                }
            }
        }
    };
    let mut details = v.details;
    details["suite"] = json!(suite.id());
    Ok(Outcome {
        code: if v.pass { EXIT_OK } else { EXIT_FAILED },
        document: envelope("verify", config, v.label, v.witnesses, details),
    })
}

fn threshold(l: &LanguageSnapshot, n: Option<usize>) -> usize {
    n.unwrap_or(DEFAULT_THRESHOLD).min(l.n_max() - 2)
}

fn eq1(l: &LanguageSnapshot, n: Option<usize>) -> Result<Verdict, Failure> {
    let ns: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (0..=l.n_max() - 2).collect(),
    };
    let mut rows = Vec::new();
    let mut witnesses = Vec::new();
    for n in ns {
        let r = l.check_eq1(n)?;
        let row = json!({"n": r.n, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds()});
        if !r.holds() {
            witnesses.push(row.clone());
        }
        rows.push(row);
    }
    Ok(Verdict::pass_fail(
        witnesses.is_empty(),
        witnesses,
        json!({"rows": rows}),
    ))
}

fn lemmas(l: &LanguageSnapshot, word: Option<Word>, theta: bool) -> Result<Verdict, Failure> {
    if theta && !l.is_closed_under_reversal() {
        return Ok(Verdict {
            pass: true,
            label: "hypothesis-fails",
            witnesses: Vec::new(),
            details: json!({"reversal_closed": false}),
        });
    }
    let words: Vec<Word> = match word {
        Some(w) => {
            if !l.contains(&w) {
                return Err(paldefect::Error::NotInLanguage(w.to_string()).into());
            }
            vec![w]
        }
        None => (0..=l.n_max() - 2)
            .flat_map(|n| l.factors(n).iter().cloned())
            .collect(),
    };
    let outcome = |r: &MultiplicityReport| {
        if theta {
            r.theta.as_ref().map(|t| t.outcome)
        } else {
            Some(r.gamma_outcome)
        }
    };
    let (mut satisfied, mut unmet, mut violated) = (0usize, 0usize, 0usize);
    let mut witnesses = Vec::new();
    let mut single = None;
    for w in &words {
        let r = check_multiplicity_lemmas(l, w)?;
        match outcome(&r) {
            Some(LemmaOutcome::Satisfied) => satisfied += 1,
            Some(LemmaOutcome::HypothesisUnmet) | None => unmet += 1,
            Some(LemmaOutcome::Violated) => {
                violated += 1;
                witnesses.push(report::multiplicity(&r));
            }
        }
        if words.len() == 1 {
            single = Some(report::multiplicity(&r));
        }
    }
    let details = json!({
        "checked": words.len(),
        "satisfied": satisfied,
        "hypothesis_unmet": unmet,
        "violated": violated,
        "word": single,
    });
    Ok(Verdict::pass_fail(violated == 0, witnesses, details))
}

fn prop54(l: &LanguageSnapshot, m: usize) -> Verdict {
    let r = prop54_check(l, m);
    let witnesses = r
        .failures()
        .map(|row| json!({"n": row.n, "second_difference": row.second_difference, "palindrome_difference": row.palindrome_difference}))
        .collect();
    Verdict::pass_fail(r.passed(), witnesses, report::prop54(&r))
}

fn thm55(l: &LanguageSnapshot, k: usize) -> Result<Verdict, Failure> {
    let r = finite_defect_shape_check(l, k)?;
    let details = report::shape(&r);
    let witnesses = details["failures"].as_array().cloned().unwrap_or_default();
    Ok(Verdict::pass_fail(r.passed(), witnesses, details))
}

/// A found witness predicts a nonzero defect; it contradicts only a
/// stable zero defect.
fn existence(
    config: &RunConfig,
    l: &LanguageSnapshot,
    w: WitnessReport,
) -> Result<Verdict, Failure> {
    let v = defect_verdict(l.morphism(), l.seed(), config.defect_options())?;
    let (pass, label) = match w.outcome {
        WitnessOutcome::HypothesisFails => (true, "hypothesis-fails"),
        WitnessOutcome::NotFoundWithinBound => (true, "inconclusive"),
        WitnessOutcome::Found if v.stable_value() == Some(0) || !w.reverified => {
            (false, "inconsistent")
        }
        WitnessOutcome::Found => (true, "consistent"),
    };
    let details = json!({"witness": report::witness(&w), "defect": report::verdict(&v)});
    let witnesses = w
        .witness
        .as_ref()
        .map(|x| vec![json!({"word": report::word(&x.word), "graph": x.graph.map(|g| g.as_str())})])
        .unwrap_or_default();
    Ok(Verdict {
        pass,
        label,
        witnesses,
        details,
    })
}

fn phi(m: &paldefect::Morphism) -> Result<Verdict, Failure> {
    let r = phi_property_suite(m, DEFAULT_SAMPLES)?;
    let mut witnesses: Vec<Value> = r
        .properties
        .iter()
        .filter_map(|p| {
            p.failure
                .as_ref()
                .map(|u| json!({"property": p.id, "word": report::word(u)}))
        })
        .collect();
    if !r.conjugates.passed() {
        witnesses.push(json!({"conjugates": report::phi(&r)["conjugates"].clone()}));
    }
    Ok(Verdict::pass_fail(r.passed(), witnesses, report::phi(&r)))
}

fn audit(config: &RunConfig, m: &paldefect::Morphism) -> Result<Verdict, Failure> {
    let r = main_theorem_audit(m, config.defect_options())?;
    let consistent = r.consistent();
    let details = report::audit(&r);
    let witnesses = if consistent {
        Vec::new()
    } else {
        vec![details["defect"].clone()]
    };
    Ok(Verdict {
        pass: consistent,
        label: if consistent {
            "consistent"
        } else {
            "inconsistent"
        },
        witnesses,
        details,
    })
}

fn section8() -> Result<Verdict, Failure> {
    let r = section8_decomposition_check(SECTION8_PREFIX, SECTION8_HORIZON)?;
    let witnesses = r
        .first_mismatch
        .map(|i| vec![json!({"first_mismatch": i})])
        .unwrap_or_default();
    Ok(Verdict::pass_fail(
        r.passed(),
        witnesses,
        report::section8(&r),
    ))
}
