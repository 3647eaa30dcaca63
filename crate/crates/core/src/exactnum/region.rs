use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{count_roots, int, min_rat, parse_rational, sign_of, square_free_decomposition, square_free_part, Poly, Rational};
use crate::error::{Error, Result};

/// One piece of an avoid-set. Pieces parsed from text are always open.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub fn open(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi, lo_open: true, hi_open: true }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_open { x > &self.lo } else { x >= &self.lo };
        let below = if self.hi_open { x < &self.hi } else { x <= &self.hi };
        above && below
    }
}

/// Sorted, pairwise disjoint union of intervals inside `[-1, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn new(mut intervals: Vec<Interval>) -> Result<Self> {
        intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
        let bad = |msg: String| Err(Error::InvalidIntervalSet(msg));
        for iv in &intervals {
            if iv.lo >= iv.hi {
                return bad(format!("empty interval ({}, {})", iv.lo, iv.hi));
            }
            if iv.lo < -Rational::one() || iv.hi > Rational::one() || (iv.hi == Rational::one() && !iv.hi_open) {
                return bad(format!("({}, {}) leaves [-1, 1)", iv.lo, iv.hi));
            }
        }
        for pair in intervals.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let touching_ok = a.hi == b.lo && (a.hi_open || b.lo_open);
            if a.hi > b.lo || (a.hi == b.lo && !touching_ok) {
                return bad(format!("({}, {}) and ({}, {}) overlap", a.lo, a.hi, b.lo, b.hi));
            }
        }
        Ok(IntervalSet { intervals })
    }

    /// Union of open intervals.
    pub fn open(pieces: &[(Rational, Rational)]) -> Result<Self> {
        IntervalSet::new(pieces.iter().map(|(a, b)| Interval::open(a.clone(), b.clone())).collect())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x))
    }

    /// Endpoints of every piece, sorted and deduplicated.
    pub fn endpoints(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.intervals.iter().flat_map(|iv| [iv.lo.clone(), iv.hi.clone()]).collect();
        out.sort();
        out.dedup();
        out
    }

    /// `true` when `self` is contained in `other`.
    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.intervals.iter().all(|a| {
            other.intervals.iter().any(|b| {
                let lo_ok = b.lo < a.lo || (b.lo == a.lo && (!b.lo_open || a.lo_open));
                let hi_ok = b.hi > a.hi || (b.hi == a.hi && (!b.hi_open || a.hi_open));
                lo_ok && hi_ok
            })
        })
    }

    /// `[lo, hi]` with the pieces removed. Closed pieces are treated as
    /// their interiors, so the result is always a union of closed
    /// intervals, possibly with singletons where two pieces meet.
    pub fn complement_in(&self, lo: &Rational, hi: &Rational) -> Region {
        let mut pieces = Vec::new();
        let mut cursor = lo.clone();
        for iv in &self.intervals {
            if iv.hi <= cursor {
                continue;
            }
            if &iv.lo > hi {
                break;
            }
            if iv.lo >= cursor {
                pieces.push((cursor.clone(), iv.lo.clone()));
            }
            cursor = iv.hi.clone();
            if &cursor > hi {
                return Region { pieces };
            }
        }
        if &cursor <= hi {
            pieces.push((cursor, hi.clone()));
        }
        Region { pieces }
    }

    /// Accepts `(a,b)` pieces joined by `∪`, `u` or `U`; `∅`, `{}` or an
    /// empty string for the empty set.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidIntervalSet(format!("{msg} in {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "\u{2205}" || compact == "{}" {
            return Ok(IntervalSet::empty());
        }
        let mut intervals = Vec::new();
        for piece in compact.split(['\u{222a}', 'u', 'U']) {
            let inner = piece
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| bad("expected an open interval (a,b)"))?;
            let (a, b) = inner.split_once(',').ok_or_else(|| bad("missing comma"))?;
            intervals.push(Interval::open(parse_rational(a)?, parse_rational(b)?));
        }
        IntervalSet::new(intervals)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("\u{2205}");
        }
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str("\u{222a}")?;
            }
            let l = if iv.lo_open { '(' } else { '[' };
            let r = if iv.hi_open { ')' } else { ']' };
            write!(f, "{l}{},{}{r}", iv.lo, iv.hi)?;
        }
        Ok(())
    }
}

/// Finite union of closed intervals `[a, b]`, `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Region {
    pub pieces: Vec<(Rational, Rational)>,
}

impl Region {
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Region { pieces: alloc::vec![(lo, hi)] }
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.pieces.iter().any(|(a, b)| a <= x && x <= b)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return f.write_str("\u{2205}");
        }
        for (k, (a, b)) in self.pieces.iter().enumerate() {
            if k > 0 {
                f.write_str("\u{222a}")?;
            }
            if a == b {
                write!(f, "{{{a}}}")?;
            } else {
                write!(f, "[{a},{b}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    NonPositive,
    NonNegative,
}

impl Sign {
    fn admits(self, value: &Rational) -> bool {
        match self {
            Sign::NonPositive => sign_of(value) <= 0,
            Sign::NonNegative => sign_of(value) >= 0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::NonPositive => "<= 0",
            Sign::NonNegative => ">= 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVerdict {
    pub holds: bool,
    /// A point of the region where the sign fails.
    pub witness: Option<Rational>,
}

/// Cell around one root of a square-free polynomial: either the exact root
/// or an open interval holding exactly one root, with non-root ends.
enum Cell {
    Exact(Rational),
    Isolated(Rational, Rational),
}

impl Cell {
    fn left(&self) -> &Rational {
        match self {
            Cell::Exact(r) => r,
            Cell::Isolated(l, _) => l,
        }
    }
    fn right(&self) -> &Rational {
        match self {
            Cell::Exact(r) => r,
            Cell::Isolated(_, u) => u,
        }
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Isolates the roots of square-free `q` lying strictly inside `(lo, hi)`.
/// Cell ends stay strictly inside the interval so every gap between cells
/// has positive length.
fn isolate(q: &Poly, lo: &Rational, hi: &Rational, out: &mut Vec<Cell>) -> Result<()> {
    let n = count_roots(q, lo, hi, true, true)?;
    if n == 0 {
        return Ok(());
    }
    let mid = half(lo, hi);
    if q.eval(&mid).is_zero() {
        isolate(q, lo, &mid, out)?;
        out.push(Cell::Exact(mid.clone()));
        return isolate(q, &mid, hi, out);
    }
    if n == 1 {
        let left = count_roots(q, lo, &mid, true, true)?;
        let (a, b) = if left == 1 { (lo, &mid) } else { (&mid, hi) };
        return isolate_single(q, a, b, lo, hi, out);
    }
    isolate(q, lo, &mid, out)?;
    isolate(q, &mid, hi, out)
}

fn isolate_single(
    q: &Poly,
    a: &Rational,
    b: &Rational,
    outer_lo: &Rational,
    outer_hi: &Rational,
    out: &mut Vec<Cell>,
) -> Result<()> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while &a == outer_lo || &b == outer_hi {
        let mid = half(&a, &b);
        if q.eval(&mid).is_zero() {
            out.push(Cell::Exact(mid));
            return Ok(());
        }
        if count_roots(q, &a, &mid, true, true)? == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    out.push(Cell::Isolated(a, b));
    Ok(())
}

fn check_piece(p: &Poly, a: &Rational, b: &Rational, sign: Sign) -> Result<SignVerdict> {
    let fail = |t: Rational| Ok(SignVerdict { holds: false, witness: Some(t) });
    for end in [a, b] {
        if !sign.admits(&p.eval(end)) {
            return fail(end.clone());
        }
    }
    if a == b {
        return Ok(SignVerdict { holds: true, witness: None });
    }
    let q = square_free_part(p);
    let mut cells = Vec::new();
    isolate(&q, a, b, &mut cells)?;
    // One sample strictly inside every root-free stretch.
    let mut left = a.clone();
    for cell in cells.iter().map(Some).chain(core::iter::once(None)) {
        let right = cell.map_or(b, Cell::left);
        let sample = half(&left, right);
        if !sign.admits(&p.eval(&sample)) {
            return fail(sample);
        }
        if let Some(c) = cell {
            left = c.right().clone();
        }
    }
    // Interior roots must have even multiplicity.
    for (factor, mult) in square_free_decomposition(p) {
        if mult % 2 == 1 && count_roots(&factor, a, b, true, true)? > 0 {
            return Ok(SignVerdict { holds: false, witness: None });
        }
    }
    Ok(SignVerdict { holds: true, witness: None })
}

/// Decides whether `p` has the requested sign at every point of `region`.
pub fn verify_sign(p: &Poly, region: &Region, sign: Sign) -> Result<SignVerdict> {
    for (a, b) in &region.pieces {
        let (lo, hi) = (min_rat(a, b), if a <= b { b } else { a });
        if p.is_zero() {
            continue;
        }
        let verdict = check_piece(p, lo, hi, sign)?;
        if !verdict.holds {
            return Ok(verdict);
        }
    }
    Ok(SignVerdict { holds: true, witness: None })
}

impl fmt::Display for SignVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.holds, &self.witness) {
            (true, _) => f.write_str("holds"),
            (false, Some(w)) => write!(f, "fails at t = {w}"),
            (false, None) => f.write_str("fails"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, poly_from_factors, rat};
    use alloc::string::ToString;

    fn t47104() -> Poly {
        poly_from_factors(
            &[(rat(-3, 5), 2), (rat(-1, 3), 1), (rat(-1, 15), 1), (rat(1, 5), 2), (rat(7, 15), 1)],
            &int(1),
        )
    }

    #[test]
    fn parse_and_display() {
        let t = IntervalSet::parse("(-1/2,-1/4) \u{222a} (0, 1/4)").unwrap();
        assert_eq!(t.intervals().len(), 2);
        assert_eq!(t.to_string(), "(-1/2,-1/4)\u{222a}(0,1/4)");
        assert_eq!(IntervalSet::parse(&t.to_string()).unwrap(), t);
        assert_eq!(IntervalSet::parse("(0,1/4)u(-1/2,-1/4)").unwrap(), t);
        assert!(IntervalSet::parse("").unwrap().is_empty());
        assert!(IntervalSet::parse("(1/2,1/4)").is_err());
        assert!(IntervalSet::parse("(-2,0)").is_err());
        assert!(IntervalSet::parse("(0,1/2)U(1/4,1/3)").is_err());
        assert!(IntervalSet::parse("[0,1/2]").is_err());
        assert!(IntervalSet::parse("(0,1/4)U(1/4,1/2)").is_ok());
    }

    #[test]
    fn complement_has_singletons() {
        let t = IntervalSet::parse("(-1,-1/3)").unwrap();
        let r = t.complement_in(&int(-1), &rat(1, 3));
        assert_eq!(r.pieces, alloc::vec![(int(-1), int(-1)), (rat(-1, 3), rat(1, 3))]);
        let t = IntervalSet::parse("(-1/2,0)U(0,1/4)").unwrap();
        let r = t.complement_in(&int(-1), &int(1));
        assert_eq!(
            r.pieces,
            alloc::vec![(int(-1), rat(-1, 2)), (int(0), int(0)), (rat(1, 4), int(1))]
        );
        let r = IntervalSet::parse("(1/5,7/15)").unwrap().complement_in(&int(-1), &rat(7, 15));
        assert_eq!(r.pieces, alloc::vec![(int(-1), rat(1, 5)), (rat(7, 15), rat(7, 15))]);
        assert!(!r.contains(&rat(1, 3)));
    }

    #[test]
    fn certificate_sign_on_complement() {
        let t = IntervalSet::parse("(-1/3,-1/15)").unwrap();
        let region = t.complement_in(&int(-1), &rat(7, 15));
        assert_eq!(region.pieces.len(), 2);
        let v = verify_sign(&t47104(), &region, Sign::NonPositive).unwrap();
        assert!(v.holds, "{v}");
        // Without removing T the sign condition fails somewhere in T.
        let v = verify_sign(&t47104(), &Region::closed(int(-1), rat(7, 15)), Sign::NonPositive).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(t.contains(&w));
        assert!(t47104().eval(&w) > Rational::zero());
    }

    #[test]
    fn linear_failure_has_witness() {
        let p = Poly::linear(&rat(1, 2));
        let v = verify_sign(&p, &Region::closed(int(-1), int(1)), Sign::NonPositive).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap() > rat(1, 2));
    }

    #[test]
    fn node_product_nonnegative() {
        let p = poly_from_factors(
            &[(rat(-3, 5), 1), (rat(-1, 3), 1), (rat(-1, 15), 2), (rat(1, 5), 2), (rat(7, 15), 2)],
            &int(1),
        );
        let region = IntervalSet::parse("(-3/5,-1/3)").unwrap().complement_in(&int(-1), &int(1));
        assert!(verify_sign(&p, &region, Sign::NonNegative).unwrap().holds);
        let region = IntervalSet::parse("(-1/3,-1/15)").unwrap().complement_in(&int(-1), &int(1));
        assert!(!verify_sign(&p, &region, Sign::NonNegative).unwrap().holds);
    }

    #[test]
    fn singleton_pieces_use_evaluation() {
        let p = Poly::linear(&int(0));
        let region = Region { pieces: alloc::vec![(rat(-1, 2), rat(-1, 2)), (int(0), int(0))] };
        assert!(verify_sign(&p, &region, Sign::NonPositive).unwrap().holds);
        let region = Region { pieces: alloc::vec![(rat(1, 2), rat(1, 2))] };
        assert_eq!(verify_sign(&p, &region, Sign::NonPositive).unwrap().witness, Some(rat(1, 2)));
    }

    #[test]
    fn subset_relation() {
        let small = IntervalSet::parse("(-1/3,-1/15)").unwrap();
        let big = IntervalSet::parse("(-2/5,0)").unwrap();
        assert!(small.is_subset_of(&big));
        assert!(!big.is_subset_of(&small));
        assert!(IntervalSet::empty().is_subset_of(&small));
    }
}
