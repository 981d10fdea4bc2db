//! Built-in morphisms with their expected verdicts.

use paldefect::corpus as named;
use paldefect::graphs::{gamma_graph, theta_graph};
use paldefect::morphism::marked_profile;
use paldefect::verify::{
    binary_witness, cycle_witness, main_theorem_audit, section8_decomposition_check, DefectKind,
};
use paldefect::{Morphism, Word};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::suites::{SECTION8_HORIZON, SECTION8_PREFIX};
use crate::{
    dot_file, envelope, report, write_files, Failure, Outcome, RunConfig, EXIT_FAILED, EXIT_OK,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    /// Heuristic period, `None` for aperiodic.
    pub period: Option<usize>,
    pub defect: DefectKind,
    pub marked: bool,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub id: &'static str,
    pub morphism: Morphism,
    pub expect: Expectation,
    /// Words whose graphs are written besides `ε` and the letters.
    pub extra_graphs: &'static [&'static str],
}

fn row(
    id: &'static str,
    morphism: Morphism,
    period: Option<usize>,
    defect: DefectKind,
    marked: bool,
) -> Row {
    Row {
        id,
        morphism,
        expect: Expectation {
            period,
            defect,
            marked,
        },
        extra_graphs: &[],
    }
}

/// Rows in output order.
pub fn rows() -> Vec<Row> {
    let mut out = vec![
        row(
            "fibonacci",
            named::fibonacci(),
            None,
            DefectKind::Stable(0),
            true,
        ),
        row(
            "thue-morse",
            named::thue_morse(),
            None,
            DefectKind::Growing,
            true,
        ),
    ];
    for (k, id) in [(2, "z2"), (3, "z3"), (4, "z4"), (5, "z5")] {
        out.push(row(
            id,
            named::z_family(k),
            Some(4 * k + 4),
            DefectKind::Stable(k),
            false,
        ));
    }
    out.push(Row {
        extra_graphs: &["aaab", "aaa"],
        ..row(
            "bucci-vaslet",
            named::bucci_vaslet(),
            None,
            DefectKind::Stable(1),
            false,
        )
    });
    out.extend([
        row(
            "aba-bab",
            named::aba_bab(),
            Some(2),
            DefectKind::Stable(0),
            true,
        ),
        row(
            "hks",
            named::hks_counterexample(),
            None,
            DefectKind::Stable(0),
            false,
        ),
        row(
            "mu",
            named::section8_mu_pi().0,
            None,
            DefectKind::Stable(0),
            true,
        ),
        row(
            "conjugacy",
            named::conjugacy_example(),
            None,
            DefectKind::Stable(0),
            true,
        ),
    ]);
    out
}

struct RowResult {
    json: Value,
    files: Vec<(String, String)>,
    drift: Vec<String>,
}

fn run_row(config: &RunConfig, r: &Row) -> Result<RowResult, Failure> {
    let m = &r.morphism;
    let l = config.snapshot(m)?;
    let audit = main_theorem_audit(m, config.defect_options())?;
    let defect = audit
        .defect
        .clone()
        .expect("corpus morphisms are primitive with a fixed point");
    let marked = marked_profile(m).is_marked;

    let mut drift = Vec::new();
    if defect.kind != r.expect.defect {
        drift.push(format!(
            "{}: defect {} expected {:?}",
            r.id,
            defect.label(),
            r.expect.defect
        ));
    }
    if defect.period != r.expect.period {
        drift.push(format!(
            "{}: period {:?} expected {:?}",
            r.id, defect.period, r.expect.period
        ));
    }
    if marked != r.expect.marked {
        drift.push(format!(
            "{}: marked {marked} expected {}",
            r.id, r.expect.marked
        ));
    }
    if !audit.consistent() {
        drift.push(format!("{}: audit inconsistent", r.id));
    }

    let cycle = cycle_witness(&l)?;
    let binary = if m.alphabet().len() == 2 {
        Some(binary_witness(&l)?)
    } else {
        None
    };

    let mut queries: Vec<Word> = vec![Word::empty(m.alphabet())];
    queries.extend(
        m.alphabet()
            .letters()
            .map(|a| Word::new(m.alphabet(), vec![a])),
    );
    for text in r.extra_graphs {
        queries.push(l.parse_word(text)?);
    }
    let mut files = Vec::new();
    let mut graphs = Vec::new();
    for q in &queries {
        let g = gamma_graph(&l, q)?;
        graphs.push(report::graph(
            &g,
            Some(&format!("{}/{}.dot", r.id, g.name())),
        ));
        files.push(dot_file(&g));
        if q.is_palindrome() && l.is_closed_under_reversal() {
            let t = theta_graph(&l, q)?;
            graphs.push(report::graph(
                &t,
                Some(&format!("{}/{}.dot", r.id, t.name())),
            ));
            files.push(dot_file(&t));
        }
    }

    let json = json!({
        "id": r.id,
        "morphism": m.to_string(),
        "defect": report::verdict(&defect),
        "marked": marked,
        "reversal_closed": l.is_closed_under_reversal(),
        "audit_consistent": audit.consistent(),
        "cycle_witness": report::witness(&cycle),
        "binary_witness": binary.as_ref().map(report::witness),
        "graphs": graphs,
        "expected": {
            "defect": format!("{:?}", r.expect.defect),
            "period": r.expect.period,
            "marked": r.expect.marked,
        },
        "drift": drift,
    });
    Ok(RowResult { json, files, drift })
}

pub fn cmd_corpus(config: &RunConfig) -> Result<Outcome, Failure> {
    let rows = rows();
    let results: Vec<RowResult> = rows
        .par_iter()
        .map(|r| run_row(config, r))
        .collect::<Result<_, _>>()?;
    let s8 = section8_decomposition_check(SECTION8_PREFIX, SECTION8_HORIZON)?;

    let mut drift: Vec<String> = results
        .iter()
        .flat_map(|r| r.drift.iter().cloned())
        .collect();
    if !s8.passed() {
        drift.push("section8: decomposition check failed".into());
    }
    if let Some(dir) = &config.out_dir {
        for (row, result) in rows.iter().zip(&results) {
            write_files(&dir.join(row.id), &result.files)?;
        }
    }
    let details = json!({
        "rows": results.iter().map(|r| r.json.clone()).collect::<Vec<_>>(),
        "section8": report::section8(&s8),
    });
    let witnesses: Vec<Value> = drift.iter().map(|d| json!(d)).collect();
    let (code, verdict) = if drift.is_empty() {
        (EXIT_OK, "pass")
    } else {
        (EXIT_FAILED, "drift")
    };
    Ok(Outcome {
        code,
        document: envelope("corpus", config, verdict, witnesses, details),
    })
}
