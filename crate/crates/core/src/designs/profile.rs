use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::atlas::SphericalCode;
use crate::exactnum::Rational;

/// Inner product -> count.
pub type Distribution = BTreeMap<Rational, u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileMode {
    Full,
    Sampled { points: usize, seed: u64 },
}

/// Key histograms for a block of rows of the ordered pair matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowTally {
    lo: i64,
    total: Vec<u64>,
    pattern: Option<Vec<u64>>,
    uniform: bool,
    rows: usize,
}

impl RowTally {
    fn empty(lo: i64, width: usize) -> Self {
        RowTally { lo, total: alloc::vec![0; width], pattern: None, uniform: true, rows: 0 }
    }

    fn push_row(&mut self, row: &[u64]) {
        for (t, r) in self.total.iter_mut().zip(row) {
            *t += r;
        }
        match &self.pattern {
            None => self.pattern = Some(row.to_vec()),
            Some(p) => self.uniform &= p.as_slice() == row,
        }
        self.rows += 1;
    }

    /// Combines tallies of disjoint row blocks, in any order.
    pub fn merge(mut self, other: RowTally) -> RowTally {
        assert_eq!((self.lo, self.total.len()), (other.lo, other.total.len()), "tallies of different codes");
        for (t, o) in self.total.iter_mut().zip(&other.total) {
            *t += o;
        }
        self.uniform &= other.uniform;
        match (&self.pattern, other.pattern) {
            (None, p) => self.pattern = p,
            (Some(a), Some(b)) => self.uniform &= *a == b,
            (Some(_), None) => {}
        }
        self.rows += other.rows;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
}

/// Histograms rows `rows` of the ordered pair matrix (diagonal excluded).
pub fn tally_rows<C: SphericalCode + ?Sized>(code: &C, rows: Range<usize>) -> RowTally {
    let (lo, hi) = code.key_bounds();
    let width = (hi - lo + 1) as usize;
    let mut tally = RowTally::empty(lo, width);
    let mut hist = alloc::vec![0u64; width];
    let n = code.len();
    for i in rows {
        hist.iter_mut().for_each(|h| *h = 0);
        code.tally_row(i, 0..i, &mut hist);
        code.tally_row(i, i + 1..n, &mut hist);
        tally.push_row(&hist);
    }
    tally
}

fn to_distribution<C: SphericalCode + ?Sized>(code: &C, lo: i64, hist: &[u64]) -> Distribution {
    let mut out = Distribution::new();
    for (k, &c) in hist.iter().enumerate() {
        if c > 0 {
            *out.entry(code.key_value(lo + k as i64)).or_insert(0) += c;
        }
    }
    out
}

/// Combinatorial data of a code: inner products, pair counts and the
/// per-point distance distributions that were examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeProfile {
    pub n: usize,
    pub len: usize,
    pub inner_products: Vec<Rational>,
    /// Ordered pair counts; only present when every pair was enumerated.
    pub pair_counts: Option<Distribution>,
    /// `A_t(x)` of the examined points, when they all agree.
    pub common_row: Option<Distribution>,
    pub rows_examined: usize,
    /// `Some(true)` proven, `Some(false)` refuted, `None` undecided.
    pub distance_invariant: Option<bool>,
}

impl CodeProfile {
    pub fn from_tally<C: SphericalCode + ?Sized>(code: &C, tally: &RowTally, full: bool) -> CodeProfile {
        let common_row = if tally.uniform {
            tally.pattern.as_ref().map(|p| to_distribution(code, tally.lo, p))
        } else {
            None
        };
        let seen = to_distribution(code, tally.lo, &tally.total);
        let inner_products = seen.keys().cloned().collect();
        let pair_counts = full.then_some(seen);
        let distance_invariant = match (full, tally.uniform) {
            (_, false) => Some(false),
            (true, true) => Some(true),
            (false, true) => None,
        };
        CodeProfile {
            n: code.dim(),
            len: code.len(),
            inner_products,
            pair_counts,
            common_row,
            rows_examined: tally.rows,
            distance_invariant,
        }
    }

    /// Profile from known ordered pair counts, e.g. published data.
    pub fn from_pair_counts(n: usize, len: usize, pairs: Distribution) -> CodeProfile {
        CodeProfile {
            n,
            len,
            inner_products: pairs.keys().cloned().collect(),
            pair_counts: Some(pairs),
            common_row: None,
            rows_examined: 0,
            distance_invariant: None,
        }
    }

    /// From a distance distribution shared by all points.
    pub fn from_frequencies(n: usize, len: usize, row: Distribution) -> CodeProfile {
        let pairs = row.iter().map(|(t, c)| (t.clone(), c * len as u64)).collect();
        let mut p = CodeProfile::from_pair_counts(n, len, pairs);
        p.common_row = Some(row);
        p.rows_examined = len;
        p.distance_invariant = Some(true);
        p
    }

    pub fn is_full(&self) -> bool {
        self.pair_counts.is_some()
    }

    pub fn s_max(&self) -> Option<&Rational> {
        self.inner_products.last()
    }

    /// Counts of the common row, in increasing order of inner product.
    pub fn frequencies(&self) -> Option<Vec<u64>> {
        self.common_row.as_ref().map(|r| r.values().copied().collect())
    }

    /// A design of strength `tau` with at most `tau + 1` inner products is
    /// distance invariant, which upgrades an agreeing sample.
    pub fn accept_design_strength(&mut self, tau: usize) {
        if self.distance_invariant.is_none()
            && self.common_row.is_some()
            && tau + 1 >= self.inner_products.len()
        {
            self.distance_invariant = Some(true);
        }
    }
}

pub fn profile<C: SphericalCode + ?Sized>(code: &C, mode: ProfileMode) -> CodeProfile {
    match mode {
        ProfileMode::Full => CodeProfile::from_tally(code, &tally_rows(code, 0..code.len()), true),
        ProfileMode::Sampled { points, seed } => {
            let rows = sample_rows(code.len(), points, seed);
            let (lo, hi) = code.key_bounds();
            let tally = rows
                .iter()
                .map(|&i| tally_rows(code, i..i + 1))
                .fold(RowTally::empty(lo, (hi - lo + 1) as usize), RowTally::merge);
            CodeProfile::from_tally(code, &tally, points >= code.len())
        }
    }
}

/// Deterministic choice of `k` distinct row indices out of `n`.
pub fn sample_rows(n: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = sample(&mut rng, n, k.min(n)).into_vec();
    rows.sort_unstable();
    rows
}
