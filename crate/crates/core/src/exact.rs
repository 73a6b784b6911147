//! Exact arithmetic in a real quadratic field.
//!
//! [`QuadExt`] represents `(a + b·√d)/c` with arbitrary-precision integer
//! coefficients, normalized so that `c > 0`, `gcd(a, b, c) = 1`, and `d` is
//! positive with small square factors removed. Rational numbers embed as
//! `b = 0` (where `d` is normalized to 1), so a single type carries every
//! constant the crate needs.
//!
//! Comparisons inside one field are decided by exact integer sign reasoning
//! (isolate the `√d` term and square once, tracking signs). Comparisons
//! across two distinct fields are routed through [`Decimal`] enclosures with
//! directed rounding, escalating precision until the enclosures separate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Trial-division bound used when reducing the radicand to its square-free
/// part. Radicands below `BOUND^2` are reduced completely; larger ones keep
/// any square factor made of primes above the bound, which never affects
/// exactness, only canonical form across independently constructed fields.
const SQUAREFREE_TRIAL_BOUND: u64 = 10_000;

/// Starting precision (decimal digits) for cross-field comparisons.
pub const CMP_START_DIGITS: u32 = 60;
/// Precision cap; beyond this a cross-field comparison reports undecided.
pub const CMP_MAX_DIGITS: u32 = 240;

/// An element `(a + b·√d)/c` of a real quadratic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Integer,
    b: Integer,
    c: Integer,
    d: Integer,
}

impl QuadExt {
    /// Builds a fully normalized element. Fails if `c = 0` or `d < 0` while
    /// `b ≠ 0` (complex values are out of scope).
    pub fn new<A, B, C, D>(a: A, b: B, c: C, d: D) -> Result<Self>
    where
        A: Into<Integer>,
        B: Into<Integer>,
        C: Into<Integer>,
        D: Into<Integer>,
    {
        let (a, mut b, c, mut d) = (a.into(), b.into(), c.into(), d.into());
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !b.is_zero() {
            if d.is_negative() {
                return Err(Error::InvalidArgument(format!(
                    "negative radicand {d} does not describe a real value"
                )));
            }
            if d.is_zero() {
                b = Integer::zero();
                d = Integer::one();
            } else {
                reduce_radicand(&mut b, &mut d);
            }
        }
        let mut a = a;
        if !b.is_zero() {
            // A perfect-square radicand folds into the rational part.
            let s = d.sqrt();
            if &s * &s == d {
                a += &b * &s;
                b = Integer::zero();
            }
        }
        Ok(Self::reduced(a, b, c, d))
    }

    /// Normalizes sign and common factors only; `d` must already be reduced.
    /// This is the constructor used by arithmetic, where the radicand is
    /// inherited from an operand.
    fn reduced(mut a: Integer, mut b: Integer, mut c: Integer, mut d: Integer) -> Self {
        debug_assert!(!c.is_zero());
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        if b.is_zero() {
            d = Integer::one();
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::reduced(Integer::zero(), Integer::zero(), Integer::one(), Integer::one())
    }

    pub fn one() -> Self {
        Self::reduced(Integer::one(), Integer::zero(), Integer::one(), Integer::one())
    }

    pub fn from_int<T: Into<Integer>>(n: T) -> Self {
        Self::reduced(n.into(), Integer::zero(), Integer::one(), Integer::one())
    }

    pub fn from_ratio(r: &Rational) -> Self {
        Self::reduced(
            r.numer().clone(),
            Integer::zero(),
            r.denom().clone(),
            Integer::one(),
        )
    }

    /// `√d` itself.
    pub fn sqrt_of<T: Into<Integer>>(d: T) -> Result<Self> {
        Self::new(0, 1, 1, d)
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }
    pub fn b(&self) -> &Integer {
        &self.b
    }
    pub fn c(&self) -> &Integer {
        &self.c
    }
    pub fn d(&self) -> &Integer {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.a.clone(), self.c.clone()))
    }

    /// The radicand shared by two compatible operands, or a field-mismatch
    /// error when both are irrational over distinct radicands.
    fn common_radicand(&self, rhs: &Self) -> Result<Integer> {
        if self.b.is_zero() {
            Ok(rhs.d.clone())
        } else if rhs.b.is_zero() || self.d == rhs.d {
            Ok(self.d.clone())
        } else {
            Err(Error::FieldMismatch(self.d.clone(), rhs.d.clone()))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        Ok(Self::reduced(
            &self.a * &rhs.c + &rhs.a * &self.c,
            &self.b * &rhs.c + &rhs.b * &self.c,
            &self.c * &rhs.c,
            d,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        Ok(Self::reduced(
            &self.a * &rhs.c - &rhs.a * &self.c,
            &self.b * &rhs.c - &rhs.b * &self.c,
            &self.c * &rhs.c,
            d,
        ))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        Ok(Self::reduced(
            &self.a * &rhs.a + &self.b * &rhs.b * &d,
            &self.a * &rhs.b + &self.b * &rhs.a,
            &self.c * &rhs.c,
            d,
        ))
    }

    /// Multiplicative inverse: `c(a − b√d) / (a² − b²d)`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        debug_assert!(!norm.is_zero(), "nonzero element with zero norm");
        Ok(Self::reduced(
            &self.c * &self.a,
            -(&self.c * &self.b),
            norm,
            self.d.clone(),
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        // Resolve the common field first so a mismatch is reported as such
        // even when the divisor is zero-normed.
        self.common_radicand(rhs)?;
        self.checked_mul(&rhs.recip()?)
    }

    /// Conjugate `(a − b√d)/c`.
    pub fn conjugate(&self) -> Self {
        Self::reduced(self.a.clone(), -self.b.clone(), self.c.clone(), self.d.clone())
    }

    /// Exact power with a machine-sized exponent; stays in the same field.
    pub fn pow_u(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same-field power");
        }
        acc
    }

    /// Exact sign of the value.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&Integer::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&Integer::zero());
        }
        match (self.a.is_positive(), self.b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            (true, false) => {
                // a > 0, b < 0: sign of a − |b|√d decided by a² vs b²d.
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * &self.d;
                lhs.cmp(&rhs)
            }
            (false, true) => {
                let lhs = &self.b * &self.b * &self.d;
                let rhs = &self.a * &self.a;
                lhs.cmp(&rhs)
            }
        }
    }

    /// Exact comparison; both operands must share a field (or one must be
    /// rational).
    pub fn cmp_exact(&self, rhs: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(rhs)?.sign())
    }

    /// Comparison that falls back to certified decimal enclosures when the
    /// operands live in distinct fields, escalating precision up to
    /// [`CMP_MAX_DIGITS`] before reporting [`Error::Undecided`].
    pub fn cmp(&self, rhs: &Self) -> Result<Ordering> {
        match self.cmp_exact(rhs) {
            Ok(o) => Ok(o),
            Err(Error::FieldMismatch(..)) => self.cmp_decimal(rhs, CMP_MAX_DIGITS),
            Err(e) => Err(e),
        }
    }

    /// Enclosure-based comparison with an explicit precision cap.
    pub fn cmp_decimal(&self, rhs: &Self, max_digits: u32) -> Result<Ordering> {
        let mut digits = CMP_START_DIGITS.min(max_digits);
        loop {
            let lhs = self.decimal(digits);
            let other = rhs.decimal(digits);
            if let Some(o) = lhs.try_cmp(&other) {
                return Ok(o);
            }
            if digits >= max_digits {
                return Err(Error::Undecided(digits));
            }
            digits = (digits * 2).min(max_digits);
        }
    }

    /// The unique integer `f` with `f ≤ x < f + 1`, computed exactly via
    /// integer square-root bracketing of `√d`.
    pub fn floor(&self) -> Integer {
        if self.b.is_zero() {
            return self.a.div_floor(&self.c);
        }
        let t = (&self.b * &self.b * &self.d).sqrt();
        // b√d lies strictly inside (t, t+1) for b > 0 and (−t−1, −t) for
        // b < 0, because the radicand is never a perfect square here. An
        // open unit interval contains no integer, so the floor of the
        // quotient is determined by the interval's left end.
        let num = if self.b.is_positive() {
            &self.a + &t
        } else {
            &self.a - &t - Integer::one()
        };
        num.div_floor(&self.c)
    }

    pub fn ceil(&self) -> Integer {
        -(-self).floor()
    }

    /// A certified enclosure of width `< 10^(1−digits)`.
    pub fn decimal(&self, digits: u32) -> Decimal {
        let scale = digits;
        let pow = Integer::from(10u32).pow(scale);
        let scaled = Self::reduced(&self.a * &pow, &self.b * &pow, self.c.clone(), self.d.clone());
        let lo = scaled.floor();
        let hi = if scaled.is_rational() && scaled.to_rational().unwrap().is_integer() {
            lo.clone()
        } else {
            &lo + Integer::one()
        };
        Decimal { lo, hi, scale }
    }

    /// Exact decimal rendering with `frac_digits` digits after the point,
    /// rounded half-to-even. Rounding is decided by integer arithmetic, not
    /// by the enclosure, so the printed digits are always correct.
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        let negative = self.sign() == Ordering::Less;
        let v = if negative { -self } else { self.clone() };
        let pow = Integer::from(10u32).pow(frac_digits);
        let scaled = Self::reduced(&v.a * &pow, &v.b * &pow, v.c.clone(), v.d.clone());
        let base = scaled.floor();
        let rounded = if scaled.is_rational() {
            let r = scaled.to_rational().unwrap();
            let frac = &r - Rational::from_integer(base.clone());
            let half = Rational::new(Integer::one(), Integer::from(2));
            match frac.cmp(&half) {
                Ordering::Less => base,
                Ordering::Greater => base + 1,
                Ordering::Equal => {
                    if base.is_even() {
                        base
                    } else {
                        base + 1
                    }
                }
            }
        } else {
            // Irrational: the fractional part is never exactly 1/2; compare
            // it to 1/2 by flooring the doubled value.
            let doubled = Self::reduced(
                &scaled.a * Integer::from(2),
                &scaled.b * Integer::from(2),
                scaled.c.clone(),
                scaled.d.clone(),
            );
            if doubled.floor() == &base * Integer::from(2) {
                base
            } else {
                base + 1
            }
        };
        let (int_part, frac_part) = rounded.div_rem(&pow);
        let mut s = String::new();
        if negative && !(rounded.is_zero()) {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if frac_digits > 0 {
            s.push('.');
            let frac = frac_part.to_string();
            for _ in frac.len()..frac_digits as usize {
                s.push('0');
            }
            s.push_str(&frac);
        }
        s
    }
}

/// Removes square factors with prime divisors up to the trial bound from the
/// radicand, folding their roots into `b`.
fn reduce_radicand(b: &mut Integer, d: &mut Integer) {
    let mut f = Integer::from(2);
    let bound = Integer::from(SQUAREFREE_TRIAL_BOUND);
    loop {
        let f2 = &f * &f;
        if f2 > *d || f > bound {
            break;
        }
        while (&*d % &f2).is_zero() {
            *d /= &f2;
            *b *= &f;
        }
        f += if f == Integer::from(2) { 1 } else { 2 };
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident, $what:expr) => {
        impl $trait for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).expect($what)
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add, "incompatible quadratic fields in +");
forward_binop!(Sub, sub, checked_sub, "incompatible quadratic fields in -");
forward_binop!(Mul, mul, checked_mul, "incompatible quadratic fields in *");
forward_binop!(Div, div, checked_div, "division error in /");

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::reduced(-self.a.clone(), -self.b.clone(), self.c.clone(), self.d.clone())
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<&Rational> for QuadExt {
    fn from(r: &Rational) -> Self {
        Self::from_ratio(r)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.c.is_one() {
                return write!(f, "{}", self.a);
            }
            return write!(f, "{}/{}", self.a, self.c);
        }
        let root = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == Integer::from(-1) {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        let numer = if self.a.is_zero() {
            root
        } else if self.b.is_positive() {
            format!("{} + {}", self.a, root.trim_start_matches('-'))
        } else {
            format!("{} - {}", self.a, root.trim_start_matches('-'))
        };
        if self.c.is_one() {
            write!(f, "{numer}")
        } else if self.a.is_zero() && (self.b.is_one() || self.b == Integer::from(-1)) {
            write!(f, "{numer}/{}", self.c)
        } else {
            write!(f, "({numer})/{}", self.c)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({} ≈ {})", self, self.to_decimal_string(12))
    }
}

/// A certified decimal enclosure `[lo, hi] · 10^(−scale)` of an exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    lo: Integer,
    hi: Integer,
    scale: u32,
}

impl Decimal {
    pub fn lo(&self) -> &Integer {
        &self.lo
    }
    pub fn hi(&self) -> &Integer {
        &self.hi
    }
    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Both bounds as rationals.
    pub fn bounds(&self) -> (Rational, Rational) {
        let pow = Integer::from(10u32).pow(self.scale);
        (
            Rational::new(self.lo.clone(), pow.clone()),
            Rational::new(self.hi.clone(), pow),
        )
    }

    pub fn width(&self) -> Rational {
        let pow = Integer::from(10u32).pow(self.scale);
        Rational::new(&self.hi - &self.lo, pow)
    }

    pub fn contains(&self, r: &Rational) -> bool {
        let (lo, hi) = self.bounds();
        lo <= *r && *r <= hi
    }

    /// Ordering of the two enclosed values if the enclosures separate.
    pub fn try_cmp(&self, rhs: &Self) -> Option<Ordering> {
        let scale = self.scale.max(rhs.scale);
        let align = |v: &Integer, s: u32| -> Integer { v * Integer::from(10u32).pow(scale - s) };
        let (slo, shi) = (align(&self.lo, self.scale), align(&self.hi, self.scale));
        let (rlo, rhi) = (align(&rhs.lo, rhs.scale), align(&rhs.hi, rhs.scale));
        if shi < rlo {
            Some(Ordering::Less)
        } else if slo > rhi {
            Some(Ordering::Greater)
        } else if slo == shi && rlo == rhi && slo == rlo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Absolute difference bounded test via enclosures: certifies
/// `|x − y| < 10^(−tol_digits)`, escalating precision as needed.
pub fn within_pow10(x: &QuadExt, y: &QuadExt, tol_digits: u32) -> Result<bool> {
    let mut digits = (tol_digits + 5).max(CMP_START_DIGITS);
    loop {
        let dx = x.decimal(digits);
        let dy = y.decimal(digits);
        let (xlo, xhi) = dx.bounds();
        let (ylo, yhi) = dy.bounds();
        let max_diff = {
            let one_way = &xhi - &ylo;
            let other_way = &yhi - &xlo;
            if one_way > other_way {
                one_way
            } else {
                other_way
            }
        };
        let min_diff = if xhi < ylo {
            &ylo - &xhi
        } else if yhi < xlo {
            &xlo - &yhi
        } else {
            Rational::zero()
        };
        let tol = Rational::new(Integer::one(), Integer::from(10u32).pow(tol_digits));
        if max_diff < tol {
            return Ok(true);
        }
        if min_diff >= tol {
            return Ok(false);
        }
        if digits >= CMP_MAX_DIGITS {
            return Err(Error::Undecided(digits));
        }
        digits = (digits * 2).min(CMP_MAX_DIGITS);
    }
}

/// Renders a rational with `frac_digits` digits after the point, rounded
/// half-to-even.
pub fn rational_decimal_string(r: &Rational, frac_digits: u32) -> String {
    QuadExt::from_ratio(r).to_decimal_string(frac_digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadExt {
        QuadExt::new(a, b, c, d).unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        let x = q(-3, 2, 2, 10);
        assert_eq!(x.a(), &Integer::from(-3));
        assert_eq!(x.b(), &Integer::from(2));
        assert_eq!(x.c(), &Integer::from(2));
        assert_eq!(x.d(), &Integer::from(10));
        // Idempotence: rebuilding from the same data gives identical fields.
        let y = QuadExt::new(x.a().clone(), x.b().clone(), x.c().clone(), x.d().clone()).unwrap();
        assert_eq!(x, y);
        // Common factors and signs are stripped.
        assert_eq!(q(2, 4, -6, 10), q(-1, -2, 3, 10));
    }

    #[test]
    fn radicand_reduced_to_squarefree_part() {
        let x = q(0, 1, 1, 40);
        assert_eq!(x.d(), &Integer::from(10));
        assert_eq!(x.b(), &Integer::from(2));
        // Perfect squares collapse to rationals.
        let y = q(1, 3, 2, 49);
        assert!(y.is_rational());
        assert_eq!(y.to_rational().unwrap(), Rational::new(22.into(), 2.into()));
    }

    #[test]
    fn quad_satisfies_its_minimal_polynomial() {
        // x = (−2+√10)/2 satisfies 2x² + 4x − 3 = 0, i.e. x(x+2) = 3/2.
        let x = q(-2, 1, 2, 10);
        let lhs = &x * &(&x + &QuadExt::from_int(2));
        assert_eq!(lhs, q(3, 0, 2, 1));
        // Additive identity.
        assert_eq!(&x + &QuadExt::zero(), x);
    }

    #[test]
    fn sign_and_comparison() {
        let x = q(-2, 1, 2, 10); // ≈ 0.5811
        let r = QuadExt::from_ratio(&Rational::new(3.into(), 5.into()));
        assert_eq!(x.cmp_exact(&r).unwrap(), Ordering::Less);
        assert_eq!(x.cmp_exact(&x).unwrap(), Ordering::Equal);
        assert_eq!(q(0, -1, 1, 2).sign(), Ordering::Less);
        assert_eq!(q(5, -1, 1, 2).sign(), Ordering::Greater);
        assert_eq!(q(1, -1, 1, 2).sign(), Ordering::Less);
    }

    #[test]
    fn cross_field_comparison_via_enclosures() {
        let r2 = crate::consts::r_2();
        let r1 = crate::consts::r_1();
        assert_eq!(r2.cmp(&r1).unwrap(), Ordering::Less);
        assert_eq!(r1.cmp(&r2).unwrap(), Ordering::Greater);
        // Same value in the same field is exact, not enclosure-driven.
        assert_eq!(r1.cmp(&r1).unwrap(), Ordering::Equal);
    }

    #[test]
    fn floor_brackets_the_root() {
        assert_eq!(q(0, 1, 1, 10).floor(), Integer::from(3));
        assert_eq!(q(-2, 1, 3, 10).floor(), Integer::from(0));
        // 2(−2+√10)/3 + 1/3 = (−3+2√10)/3 ≈ 1.108
        assert_eq!(q(-3, 2, 3, 10).floor(), Integer::from(1));
        assert_eq!(q(-7, 0, 2, 1).floor(), Integer::from(-4));
    }

    #[test]
    fn floor_of_negation() {
        // floor(x) + floor(−x) = −1 for irrational x, 0 for integers.
        for x in [q(0, 1, 1, 10), q(-2, 1, 2, 10), q(5, -3, 7, 2)] {
            assert_eq!(x.floor() + (-&x).floor(), Integer::from(-1));
        }
        let n = QuadExt::from_int(9);
        assert_eq!(n.floor() + (-&n).floor(), Integer::from(0));
    }

    #[test]
    fn decimal_enclosures() {
        let rmax = crate::consts::r_max();
        let enc = rmax.decimal(6);
        let (lo, hi) = enc.bounds();
        let a = Rational::new(166227.into(), 100000.into());
        let b = Rational::new(166228.into(), 100000.into());
        assert!(lo >= a && hi <= b, "enclosure outside [1.66227, 1.66228]");
        assert!(enc.width() < Rational::new(1.into(), 100000.into()));

        let r1 = crate::consts::r_1();
        let enc = r1.decimal(6);
        assert!(enc.contains(&Rational::new(1650396.into(), 1000000.into())));

        // Rationals get zero-width enclosures.
        let half3 = QuadExt::from_ratio(&Rational::new(3.into(), 2.into()));
        let enc = half3.decimal(4);
        assert_eq!(enc.lo(), enc.hi());
        assert!(enc.width().is_zero());
    }

    #[test]
    fn decimal_strings_round_half_even() {
        assert_eq!(QuadExt::from_ratio(&Rational::new(5.into(), 4.into())).to_decimal_string(1), "1.2");
        assert_eq!(QuadExt::from_ratio(&Rational::new(7.into(), 4.into())).to_decimal_string(1), "1.8");
        assert_eq!(QuadExt::from_ratio(&Rational::new(3.into(), 2.into())).to_decimal_string(0), "2");
        assert_eq!(q(0, 1, 1, 2).to_decimal_string(6), "1.414214");
        assert_eq!(crate::consts::r_max().to_decimal_string(10), "1.6622776602");
        assert_eq!((-q(0, 1, 1, 2)).to_decimal_string(3), "-1.414");
    }

    #[test]
    fn field_axioms_on_random_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let sample = |rng: &mut rand_chacha::ChaCha8Rng| {
            q(
                rng.gen_range(-30..30),
                rng.gen_range(-30..30),
                rng.gen_range(1..20),
                10,
            )
        };
        for _ in 0..200 {
            let (x, y, z) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                assert_eq!(&x * &x.recip().unwrap(), QuadExt::one());
            }
        }
    }

    #[test]
    fn exact_cmp_matches_enclosure_cmp() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let x = q(
                rng.gen_range(-50..50),
                rng.gen_range(-50..50),
                rng.gen_range(1..30),
                rng.gen_range(2..60),
            );
            let y = q(
                rng.gen_range(-50..50),
                rng.gen_range(-50..50),
                rng.gen_range(1..30),
                x.d().try_into().unwrap_or(10i64),
            );
            let exact = x.cmp_exact(&y);
            let (Ok(exact), Some(enc)) = (exact, x.decimal(60).try_cmp(&y.decimal(60))) else {
                continue; // equal values or mismatched fields after reduction
            };
            assert_eq!(exact, enc);
        }
    }

    #[test]
    fn display_formats() {
        assert_eq!(q(-3, 2, 2, 10).to_string(), "(-3 + 2*sqrt(10))/2");
        assert_eq!(q(48, 1, 31, 10).to_string(), "(48 + sqrt(10))/31");
        assert_eq!(q(0, 1, 1, 10).to_string(), "sqrt(10)");
        assert_eq!(q(3, 0, 2, 1).to_string(), "3/2");
        assert_eq!(q(7, 0, 1, 1).to_string(), "7");
        assert_eq!(q(0, 1, 2, 5).to_string(), "sqrt(5)/2");
    }
}
