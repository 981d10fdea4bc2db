use crate::error::Result;
use crate::morphism::Morphism;
use crate::palindrome::defect_stream;
use crate::word::{Letter, Word};

pub const DEFAULT_HORIZON: usize = 50_000;
pub const DEFAULT_GROWTH_WINDOW: usize = 5;
pub const DEFAULT_PERIOD_BOUND: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DefectOptions {
    pub horizon: usize,
    /// Number of trailing checkpoints that must agree for `Stable`.
    pub growth_window: usize,
    pub period_bound: usize,
}

impl Default for DefectOptions {
    fn default() -> Self {
        DefectOptions {
            horizon: DEFAULT_HORIZON,
            growth_window: DEFAULT_GROWTH_WINDOW,
            period_bound: DEFAULT_PERIOD_BOUND,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectKind {
    Stable(usize),
    Growing,
    /// The defect has not settled but the prefix is visibly periodic.
    PeriodicDetected(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectVerdict {
    pub kind: DefectKind,
    /// `(prefix length, defect)`, doubling from 16 and ending at the horizon.
    pub checkpoints: Vec<(usize, usize)>,
    pub growth_window: usize,
    pub period_bound: usize,
    /// Heuristic period of the fixed point, reported regardless of `kind`.
    pub period: Option<usize>,
}

impl DefectVerdict {
    pub fn stable_value(&self) -> Option<usize> {
        match self.kind {
            DefectKind::Stable(d) => Some(d),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self.kind {
            DefectKind::Stable(d) => format!("Stable({d})"),
            DefectKind::Growing => "Growing".into(),
            DefectKind::PeriodicDetected(p) => format!("PeriodicDetected({p})"),
        }
    }
}

pub fn checkpoints(horizon: usize) -> Vec<usize> {
    let mut out: Vec<usize> = std::iter::successors(Some(16usize), |&n| Some(n * 2))
        .take_while(|&n| n < horizon)
        .collect();
    out.push(horizon);
    out
}

pub fn defect_verdict(m: &Morphism, seed: Letter, opts: DefectOptions) -> Result<DefectVerdict> {
    let points = defect_stream(m, seed, &checkpoints(opts.horizon))?;
    let g = opts.growth_window.max(1);
    let stable = points.len() >= g && {
        let tail = &points[points.len() - g..];
        tail.iter().all(|&(_, d)| d == tail[0].1)
    };
    let period = periodicity_heuristic(m, seed, opts.period_bound)?;
    let kind = match (stable, period) {
        (true, _) => DefectKind::Stable(points.last().map_or(0, |p| p.1)),
        (false, Some(p)) => DefectKind::PeriodicDetected(p),
        (false, None) => DefectKind::Growing,
    };
    Ok(DefectVerdict {
        kind,
        checkpoints: points,
        growth_window: g,
        period_bound: opts.period_bound,
        period,
    })
}

/// Heuristic only: the smallest `p ≤ bound` such that the prefix of length
/// `4·bound` is `p`-periodic.
pub fn periodicity_heuristic(m: &Morphism, seed: Letter, bound: usize) -> Result<Option<usize>> {
    let prefix = m.fixed_point_prefix(seed, 4 * bound.max(1))?;
    Ok(smallest_period(&prefix, bound))
}

pub fn smallest_period(w: &Word, bound: usize) -> Option<usize> {
    let l = w.letters();
    (1..=bound.min(l.len())).find(|&p| l[p..].iter().zip(l).all(|(a, b)| a == b))
}
