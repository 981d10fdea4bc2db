//! JSON views of library results. Keys come out sorted because
//! `serde_json::Map` is a `BTreeMap` without the `preserve_order` feature.

use paldefect::graphs::{ExtensionGraph, GraphClassification, MultiplicityReport};
use paldefect::morphism::MarkedProfile;
use paldefect::verify::{
    AuditConclusion, AuditReport, DefectVerdict, PhiSuiteReport, Prop54Report, Section8Report,
    ShapeReport, WitnessReport,
};
use paldefect::{DefectReport, Letter, Word};
use serde_json::{json, Value};

pub fn word(w: &Word) -> Value {
    Value::String(w.to_string())
}

pub fn letter(w: &Word, a: Letter) -> Value {
    Value::String(w.alphabet().symbol(a).to_string())
}

pub fn defect_report(r: &DefectReport) -> Value {
    json!({
        "word_length": r.word_length,
        "palindromes_including_empty": r.palindrome_count_including_empty,
        "defect": r.defect,
        "lacunas": r.lacunas,
    })
}

pub fn verdict(v: &DefectVerdict) -> Value {
    json!({
        "kind": v.label(),
        "stable_value": v.stable_value(),
        "checkpoints": v.checkpoints.iter().map(|&(n, d)| json!([n, d])).collect::<Vec<_>>(),
        "growth_window": v.growth_window,
        "period_bound": v.period_bound,
        "period": v.period,
    })
}

pub fn classification(c: &GraphClassification) -> Value {
    json!({
        "components": c.components,
        "edge_count": c.edge_count,
        "vertex_count": c.vertex_count,
        "connected": c.connected,
        "is_tree": c.is_tree,
        "has_cycle": c.has_cycle,
        "cyclomatic_excess": c.cyclomatic_excess(),
    })
}

pub fn graph(g: &ExtensionGraph, file: Option<&str>) -> Value {
    json!({
        "name": g.name(),
        "file": file,
        "classification": classification(&g.classify()),
    })
}

pub fn multiplicity(r: &MultiplicityReport) -> Value {
    json!({
        "word": word(&r.word),
        "multiplicity": r.multiplicity,
        "gamma": {
            "name": r.gamma.name(),
            "classification": classification(&r.gamma_classification),
            "outcome": r.gamma_outcome.as_str(),
        },
        "theta": r.theta.as_ref().map(|t| json!({
            "name": t.graph.name(),
            "classification": classification(&t.classification),
            "symmetric_count": t.symmetric_count,
            "outcome": t.outcome.as_str(),
        })),
    })
}

pub fn profile(p: &MarkedProfile) -> Value {
    json!({
        "is_acyclic": p.is_acyclic,
        "leftmost": p.leftmost.as_ref().map(ToString::to_string),
        "rightmost": p.rightmost.as_ref().map(ToString::to_string),
        "is_marked": p.is_marked,
        "is_well_marked": p.is_well_marked,
    })
}

pub fn witness(r: &WitnessReport) -> Value {
    json!({
        "statement": r.statement,
        "outcome": r.outcome.as_str(),
        "search_bound": r.search_bound,
        "witness": r.witness.as_ref().map(|w| json!({
            "word": word(&w.word),
            "graph": w.graph.map(|g| g.as_str()),
        })),
        "reverified": r.reverified,
        "letter_return": r.letter_return.as_ref().map(|lr| lr.as_ref().map(|x| json!({
            "letter": letter(&x.return_word, x.letter),
            "return_word": word(&x.return_word),
            "horizon": x.horizon,
        }))),
    })
}

pub fn shape(r: &ShapeReport) -> Value {
    json!({
        "k": r.k,
        "upper": r.upper,
        "smallest_working_k": r.smallest_working_k,
        "failures": r.failures.iter().map(|f| json!({
            "word": word(&f.word),
            "palindrome": f.palindrome,
            "multiplicity": f.multiplicity,
            "expected": f.expected,
            "graph_is_tree": f.graph_is_tree,
        })).collect::<Vec<_>>(),
    })
}

pub fn prop54(r: &Prop54Report) -> Value {
    json!({
        "m": r.m,
        "upper": r.upper,
        "smallest_working_m": r.smallest_working_m,
        "rows": r.rows.iter().map(|row| json!({
            "n": row.n,
            "second_difference": row.second_difference,
            "palindrome_difference": row.palindrome_difference,
            "holds": row.holds(),
        })).collect::<Vec<_>>(),
    })
}

pub fn phi(r: &PhiSuiteReport) -> Value {
    json!({
        "power": r.power,
        "well_marked": r.well_marked.to_string(),
        "leftmost": r.leftmost.to_string(),
        "rightmost": r.rightmost.to_string(),
        "conjugacy_word": word(&r.conjugacy_word),
        "samples": r.samples,
        "rng_seed": r.rng_seed,
        "pool_n_max": r.pool_n_max,
        "image_n_max": r.image_n_max,
        "reversal_closed": r.reversal_closed,
        "properties": r.properties.iter().map(|p| json!({
            "id": p.id,
            "checked": p.checked,
            "failure": p.failure.as_ref().map(word),
        })).collect::<Vec<_>>(),
        "conjugates": {
            "conjugacy_word_is_palindrome": r.conjugates.conjugacy_word_is_palindrome,
            "mismatched_letters": r.conjugates.mismatched_letters.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        },
    })
}

pub fn audit(r: &AuditReport) -> Value {
    let conclusion = match &r.conclusion {
        AuditConclusion::Applies { consistent } => {
            json!({"kind": "applies", "consistent": consistent})
        }
        AuditConclusion::Silent { reasons } => json!({"kind": "silent", "reasons": reasons}),
    };
    let alphabet = r.morphism.alphabet();
    json!({
        "morphism": r.morphism.to_string(),
        "primitive": r.primitive,
        "profile": profile(&r.profile),
        "seed": r.seed.map(|s| alphabet.symbol(s).to_string()),
        "defect": r.defect.as_ref().map(verdict),
        "reversal_closed": r.reversal_closed,
        "non_palindromic_letter_return": r.non_palindromic_letter_return.as_ref().map(|x| json!({
            "letter": letter(&x.return_word, x.letter),
            "return_word": word(&x.return_word),
        })),
        "letter_return_horizon": r.letter_return_horizon,
        "nontrivial_conjugate": r.nontrivial_conjugate,
        "periodic_screen": r.periodic_screen.as_ref().map(|p| json!({
            "period": p.period,
            "binary": p.binary,
            "alternating": p.alternating,
        })),
        "conclusion": conclusion,
        "consistent": r.consistent(),
    })
}

pub fn section8(r: &Section8Report) -> Value {
    json!({
        "prefix_length": r.prefix_length,
        "first_mismatch": r.first_mismatch,
        "matches": r.matches(),
        "v_checkpoints": r.v_checkpoints.iter().map(|&(n, d)| json!([n, d])).collect::<Vec<_>>(),
        "v_zero_defect": r.v_zero_defect(),
    })
}

/// `path = value` lines for `--format text`.
pub fn flatten(v: &Value) -> String {
    let mut out = String::new();
    walk(v, String::new(), &mut out);
    out
}

fn walk(v: &Value, path: String, out: &mut String) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                walk(x, join(k), out);
            }
        }
        Value::Array(items)
            if !items.is_empty() && items.iter().any(|x| x.is_object() || x.is_array()) =>
        {
            for (i, x) in items.iter().enumerate() {
                walk(x, join(&i.to_string()), out);
            }
        }
        other => {
            out.push_str(&path);
            out.push_str(" = ");
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}
