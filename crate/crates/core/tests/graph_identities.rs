mod common;

use paldefect::corpus;
use paldefect::graphs::{check_multiplicity_lemmas, gamma_graph, LemmaOutcome, Side};
use paldefect::language::LanguageSnapshot;

fn snapshots() -> Vec<LanguageSnapshot> {
    let mut ms = vec![
        corpus::fibonacci(),
        corpus::thue_morse(),
        corpus::bucci_vaslet(),
        corpus::hks_counterexample(),
    ];
    ms.extend(common::random_primitive(10, 21));
    ms.iter()
        .map(|m| LanguageSnapshot::build(m, 12).unwrap())
        .collect()
}

#[test]
fn connected_gamma_counts_multiplicity() {
    for l in snapshots() {
        for n in 0..=10 {
            for w in l.factors(n) {
                let r = check_multiplicity_lemmas(&l, w).unwrap();
                let c = r.gamma_classification;
                if c.connected {
                    assert_eq!(c.cyclomatic_excess(), r.multiplicity, "{w}");
                    assert_eq!(r.gamma_outcome, LemmaOutcome::Satisfied);
                }
                assert_ne!(r.gamma_outcome, LemmaOutcome::Violated);
            }
        }
    }
}

#[test]
fn theta_edges_count_off_diagonal_pairs() {
    for l in snapshots()
        .into_iter()
        .filter(|l| l.is_closed_under_reversal())
    {
        for n in 0..=10 {
            for w in l.factors(n).iter().filter(|w| w.is_palindrome()) {
                let ext = l.extensions(w).unwrap();
                let r = check_multiplicity_lemmas(&l, w).unwrap();
                let t = r.theta.expect("palindrome in reversal-closed language");
                assert_eq!(
                    2 * t.graph.edges.len(),
                    ext.both.len() - ext.symmetric.len()
                );
                assert_ne!(t.outcome, LemmaOutcome::Violated, "{w}");
            }
        }
    }
}

#[test]
fn palindromic_gamma_is_symmetric() {
    for l in snapshots()
        .into_iter()
        .filter(|l| l.is_closed_under_reversal())
    {
        for n in 0..=10 {
            for w in l.factors(n).iter().filter(|w| w.is_palindrome()) {
                let g = gamma_graph(&l, w).unwrap();
                let swap = |v: paldefect::graphs::Vertex| paldefect::graphs::Vertex {
                    letter: v.letter,
                    side: v.side.map(|s| {
                        if s == Side::Left {
                            Side::Right
                        } else {
                            Side::Left
                        }
                    }),
                };
                let mut mirrored: Vec<_> = g
                    .edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (swap(b), swap(a));
                        if x <= y {
                            (x, y)
                        } else {
                            (y, x)
                        }
                    })
                    .collect();
                mirrored.sort();
                assert_eq!(mirrored, g.edges, "{w}");
            }
        }
    }
}
