//! The bipartite extension graph `Γ(w)` and, for palindromes in a
//! reversal-closed language, the undirected graph `Θ(w)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::language::{ExtensionData, LanguageSnapshot};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Gamma,
    Theta,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Gamma => "gamma",
            GraphKind::Theta => "theta",
        }
    }
}

/// `Left` is the `(a, −1)` side of `Γ`, `Right` the `(b, +1)` side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub letter: Letter,
    /// `None` for `Θ` vertices.
    pub side: Option<Side>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionGraph {
    pub kind: GraphKind,
    /// Sorted.
    pub vertices: Vec<Vertex>,
    /// Sorted, each pair stored with the smaller vertex first.
    pub edges: Vec<(Vertex, Vertex)>,
    pub source_word: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClassification {
    pub components: usize,
    pub edge_count: usize,
    pub vertex_count: usize,
    pub connected: bool,
    pub is_tree: bool,
    pub has_cycle: bool,
}

impl GraphClassification {
    /// `#edges − #vertices + 1`, meaningful when connected.
    pub fn cyclomatic_excess(&self) -> i64 {
        self.edge_count as i64 - self.vertex_count as i64 + 1
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

impl ExtensionGraph {
    fn new(
        kind: GraphKind,
        word: &Word,
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Self {
        let mut vertices: Vec<Vertex> = vertices.into_iter().collect();
        vertices.sort();
        vertices.dedup();
        let mut edges: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort();
        edges.dedup();
        ExtensionGraph {
            kind,
            vertices,
            edges,
            source_word: word.clone(),
        }
    }

    pub fn classify(&self) -> GraphClassification {
        let index = |v: &Vertex| {
            self.vertices
                .binary_search(v)
                .expect("edge endpoint is a vertex")
        };
        let mut uf = UnionFind::new(self.vertices.len());
        let mut components = self.vertices.len();
        for (a, b) in &self.edges {
            if uf.union(index(a), index(b)) {
                components -= 1;
            }
        }
        let (e, v) = (self.edges.len(), self.vertices.len());
        let connected = components == 1;
        GraphClassification {
            components,
            edge_count: e,
            vertex_count: v,
            connected,
            is_tree: connected && e + 1 == v,
            has_cycle: e + components > v,
        }
    }

    fn label(&self, v: &Vertex) -> String {
        let c = self.source_word.alphabet().symbol(v.letter);
        match v.side {
            Some(Side::Left) => format!("{c}-"),
            Some(Side::Right) => format!("{c}+"),
            None => c.to_string(),
        }
    }

    /// `gamma_<w>` / `theta_<w>`, with `eps` standing for the empty word.
    pub fn name(&self) -> String {
        let w = if self.source_word.is_empty() {
            "eps".to_string()
        } else {
            self.source_word.to_string()
        };
        format!("{}_{}", self.kind.as_str(), w)
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.name());
        for v in &self.vertices {
            writeln!(out, "  \"{}\";", self.label(v)).unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  \"{}\" -- \"{}\";", self.label(a), self.label(b)).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn gamma_from(ext: &ExtensionData) -> ExtensionGraph {
    let left = |a: Letter| Vertex {
        letter: a,
        side: Some(Side::Left),
    };
    let right = |b: Letter| Vertex {
        letter: b,
        side: Some(Side::Right),
    };
    ExtensionGraph::new(
        GraphKind::Gamma,
        &ext.word,
        ext.left
            .iter()
            .map(|&a| left(a))
            .chain(ext.right.iter().map(|&b| right(b))),
        ext.both.iter().map(|&(a, b)| (left(a), right(b))),
    )
}

fn theta_from(ext: &ExtensionData) -> ExtensionGraph {
    let plain = |a: Letter| Vertex {
        letter: a,
        side: None,
    };
    ExtensionGraph::new(
        GraphKind::Theta,
        &ext.word,
        ext.right.iter().map(|&a| plain(a)),
        ext.both
            .iter()
            .filter(|(a, b)| a != b)
            .map(|&(a, b)| (plain(a), plain(b))),
    )
}

pub fn gamma_graph(l: &LanguageSnapshot, w: &Word) -> Result<ExtensionGraph> {
    Ok(gamma_from(&l.extensions(w)?))
}

pub fn theta_graph(l: &LanguageSnapshot, w: &Word) -> Result<ExtensionGraph> {
    if !w.is_palindrome() {
        return Err(Error::NotPalindrome(w.to_string()));
    }
    if !l.is_closed_under_reversal() {
        return Err(Error::NotReversalClosed);
    }
    Ok(theta_from(&l.extensions(w)?))
}

pub fn classify(g: &ExtensionGraph) -> GraphClassification {
    g.classify()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaOutcome {
    Satisfied,
    /// The graph is disconnected, so the lemma says nothing.
    HypothesisUnmet,
    Violated,
}

impl LemmaOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaOutcome::Satisfied => "satisfied",
            LemmaOutcome::HypothesisUnmet => "hypothesis-unmet",
            LemmaOutcome::Violated => "violated",
        }
    }

    fn from_check(connected: bool, ok: bool) -> Self {
        match (connected, ok) {
            (false, _) => LemmaOutcome::HypothesisUnmet,
            (true, true) => LemmaOutcome::Satisfied,
            (true, false) => LemmaOutcome::Violated,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaCheck {
    pub graph: ExtensionGraph,
    pub classification: GraphClassification,
    /// `#E⁼(w)`
    pub symmetric_count: usize,
    pub outcome: LemmaOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub word: Word,
    pub multiplicity: i64,
    pub gamma: ExtensionGraph,
    pub gamma_classification: GraphClassification,
    /// `m(w) ≥ 0`, with `m(w) > 0` exactly when `Γ(w)` has a cycle.
    pub gamma_outcome: LemmaOutcome,
    /// Present only for palindromes in a reversal-closed language.
    pub theta: Option<ThetaCheck>,
}

impl MultiplicityReport {
    pub fn any_violated(&self) -> bool {
        self.gamma_outcome == LemmaOutcome::Violated
            || self
                .theta
                .as_ref()
                .is_some_and(|t| t.outcome == LemmaOutcome::Violated)
    }
}

pub fn check_multiplicity_lemmas(l: &LanguageSnapshot, w: &Word) -> Result<MultiplicityReport> {
    let ext = l.extensions(w)?;
    let m = ext.multiplicity;
    let gamma = gamma_from(&ext);
    let gc = gamma.classify();
    let gamma_ok = m >= 0 && gc.has_cycle == (m > 0) && gc.cyclomatic_excess() == m;
    let theta = (w.is_palindrome() && l.is_closed_under_reversal()).then(|| {
        let graph = theta_from(&ext);
        let classification = graph.classify();
        let floor = ext.symmetric.len() as i64 - 1;
        let ok = m >= floor && classification.is_tree == (m == floor);
        ThetaCheck {
            graph,
            classification,
            symmetric_count: ext.symmetric.len(),
            outcome: LemmaOutcome::from_check(classification.connected, ok),
        }
    });
    Ok(MultiplicityReport {
        word: w.clone(),
        multiplicity: m,
        gamma,
        gamma_classification: gc,
        gamma_outcome: LemmaOutcome::from_check(gc.connected, gamma_ok),
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::word::Alphabet;

    fn bv() -> LanguageSnapshot {
        LanguageSnapshot::build(&corpus::bucci_vaslet(), 8).unwrap()
    }

    fn w(l: &LanguageSnapshot, s: &str) -> Word {
        l.parse_word(s).unwrap()
    }

    #[test]
    fn classify_small_graphs() {
        let ab = Alphabet::new(['a', 'b', 'c']).unwrap();
        let v = |i: usize| Vertex {
            letter: Letter::new(i),
            side: None,
        };
        let eps = Word::empty(&ab);
        let triangle = ExtensionGraph::new(
            GraphKind::Theta,
            &eps,
            (0..3).map(v),
            [(v(0), v(1)), (v(1), v(2)), (v(2), v(0))],
        );
        let c = triangle.classify();
        assert!(c.has_cycle && !c.is_tree && c.connected);
        let edge = ExtensionGraph::new(GraphKind::Theta, &eps, (0..2).map(v), [(v(1), v(0))]);
        let c = edge.classify();
        assert!(c.is_tree && !c.has_cycle);
        assert_eq!(edge.edges, [(v(0), v(1))]);
    }

    #[test]
    fn gamma_examples() {
        let l = bv();
        let g = gamma_graph(&l, &w(&l, "aaab")).unwrap();
        assert_eq!(g.to_dot(), "graph \"gamma_aaab\" {\n  \"a-\";\n  \"b-\";\n  \"c+\";\n  \"a-\" -- \"c+\";\n  \"b-\" -- \"c+\";\n}\n");
        assert!(g.classify().is_tree);
        let c = gamma_graph(&l, &w(&l, "aaa")).unwrap().classify();
        assert!(c.has_cycle && c.connected);
    }

    #[test]
    fn theta_examples() {
        let l = bv();
        let eps = theta_graph(&l, &w(&l, "")).unwrap();
        assert_eq!(eps.edges.len(), 3);
        assert!(eps.classify().has_cycle);
        assert_eq!(eps.name(), "theta_eps");
        let a = theta_graph(&l, &w(&l, "a")).unwrap();
        assert_eq!(
            a.to_dot(),
            "graph \"theta_a\" {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"b\";\n}\n"
        );
        let c = a.classify();
        assert_eq!((c.components, c.connected), (2, false));
        let b = theta_graph(&l, &w(&l, "b")).unwrap();
        assert!(b.classify().is_tree);
        assert_eq!(b.edges.len(), 1);
        assert!(theta_graph(&l, &w(&l, "aaa")).unwrap().classify().is_tree);
        assert_eq!(
            theta_graph(&l, &w(&l, "ab")).unwrap_err(),
            Error::NotPalindrome("ab".into())
        );
    }

    #[test]
    fn theta_needs_reversal_closure() {
        let m = crate::Morphism::from_rules(&[('0', "01"), ('1', "100")]).unwrap();
        let l = LanguageSnapshot::build(&m, 6).unwrap();
        assert_eq!(
            theta_graph(&l, &w(&l, "")).unwrap_err(),
            Error::NotReversalClosed
        );
    }

    #[test]
    fn lemma_outcomes() {
        let l = bv();
        let r = check_multiplicity_lemmas(&l, &w(&l, "")).unwrap();
        assert_eq!(r.multiplicity, 2);
        let t = r.theta.unwrap();
        assert_eq!((t.symmetric_count, t.outcome), (1, LemmaOutcome::Satisfied));
        let r = check_multiplicity_lemmas(&l, &w(&l, "b")).unwrap();
        assert_eq!(r.multiplicity, -1);
        assert_eq!(r.theta.unwrap().outcome, LemmaOutcome::Satisfied);
        let r = check_multiplicity_lemmas(&l, &w(&l, "a")).unwrap();
        let t = r.theta.unwrap();
        // both aaa and cac are factors, so E⁼(a) = {a, c}
        assert_eq!((r.multiplicity, t.symmetric_count), (-1, 2));
        assert_eq!(t.outcome, LemmaOutcome::HypothesisUnmet);
    }

    #[test]
    fn no_violations_on_corpus() {
        for m in [
            corpus::fibonacci(),
            corpus::thue_morse(),
            corpus::bucci_vaslet(),
            corpus::z_family(2),
        ] {
            let l = LanguageSnapshot::build(&m, 10).unwrap();
            for n in 0..=8 {
                for f in l.factors(n) {
                    let r = check_multiplicity_lemmas(&l, f).unwrap();
                    assert!(!r.any_violated(), "{m}: {f}");
                    if let Some(t) = &r.theta {
                        let ext = l.extensions(f).unwrap();
                        assert_eq!(
                            2 * t.graph.edges.len(),
                            ext.both.len() - ext.symmetric.len()
                        );
                    }
                }
            }
        }
    }
}
