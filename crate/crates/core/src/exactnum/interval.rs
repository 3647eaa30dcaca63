use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{int, sign_of, Rational};

/// Closed interval `[lo, hi]` with rational ends. A point interval is an
/// exact value, so rational potentials flow through the same code paths
/// as transcendental ones without losing exactness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        RatInterval::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Sign shared by every point, or `None` when the interval straddles
    /// or touches zero without being exactly zero.
    pub fn sign(&self) -> Option<i8> {
        let (a, b) = (sign_of(&self.lo), sign_of(&self.hi));
        if a == b {
            Some(a)
        } else {
            None
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    /// Division by a nonzero rational. Panics on zero.
    pub fn div_exact(&self, c: &Rational) -> Self {
        self.scale(&c.recip())
    }

    /// Reciprocal of an interval that excludes zero. Panics otherwise.
    pub fn recip(&self) -> Self {
        assert!(self.sign().is_some_and(|s| s != 0), "reciprocal of an interval containing zero");
        RatInterval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    /// Outward rounding to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> Self {
        if self.exact().is_some_and(|x| x.is_integer()) {
            return self.clone();
        }
        let scale = Rational::from_integer(BigInt::one() << bits);
        RatInterval {
            lo: (&self.lo * &scale).floor() / &scale,
            hi: (&self.hi * &scale).ceil() / &scale,
        }
    }

    fn hull(values: [Rational; 4]) -> Self {
        let [a, b, c, d] = values;
        let lo = a.clone().min(b.clone()).min(c.clone()).min(d.clone());
        let hi = a.max(b).max(c).max(d);
        RatInterval { lo, hi }
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &RatInterval) -> RatInterval {
        if let (Some(a), Some(b)) = (self.exact(), rhs.exact()) {
            return RatInterval::point(a * b);
        }
        RatInterval::hull([&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi])
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(x) => write!(f, "{x}"),
            None => write!(f, "[{}, {}]", self.lo, self.hi),
        }
    }
}

/// Encloses `e^x` in an interval of width about `2^-bits` relative to the
/// value. Both ends are dyadic rationals.
pub fn exp_enclosure(x: &Rational, bits: u32) -> RatInterval {
    if x.is_zero() {
        return RatInterval::point(Rational::one());
    }
    if x.is_negative() {
        return exp_enclosure(&-x, bits).recip().round_outward(bits + 8);
    }
    let half = Rational::new(1.into(), 2.into());
    let mut m = 0u32;
    let mut y = x.clone();
    while y > half {
        y /= int(2);
        m += 1;
    }
    let prec = bits + m + 16;
    let eps = Rational::new(BigInt::one(), BigInt::one() << prec);
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut k = 0u32;
    loop {
        sum += &term;
        k += 1;
        term = term * &y / int(k.into());
        // Tail is at most twice the next term since y <= 1/2.
        if term < eps {
            break;
        }
    }
    let tail = &term * int(2);
    let mut acc = RatInterval::new(&sum - &tail, &sum + &tail).round_outward(prec);
    for _ in 0..m {
        acc = (&acc * &acc).round_outward(prec);
    }
    acc
}
