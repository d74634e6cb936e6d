use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithmeticError;

/// Arbitrary-precision rational, the coefficient type of [`Scalar`].
pub type Rational = BigRational;

/// The field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldTag {
    /// Plain rational: the √5 coefficient is exactly zero.
    Rational,
    /// Proper element of Q(√5).
    Quad5,
}

/// An exact number `a + b·√5` with `a`, `b` rational.
///
/// Both coefficients are stored in lowest terms with positive denominator
/// (enforced by [`Rational`]), so equality and hashing are structural. A
/// scalar is tagged [`FieldTag::Rational`] exactly when `b = 0`; no separate
/// tag is stored, which keeps the canonical form unique.
///
/// The ordering implemented by [`Ord`] is the order of the real embedding
/// with `√5 > 0`. The sign of `a + b·√5` is decided by case analysis on the
/// signs of `a` and `b` and, in the mixed case, by comparing `a²` with `5b²`;
/// no floating point is used in any decision path.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: Rational,
    b: Rational,
}

const SQRT5_F64: f64 = 2.23606797749978969;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn five() -> Rational {
    Rational::from_integer(big(5))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            a: Rational::from_integer(big(n)),
            b: Rational::zero(),
        }
    }

    /// `p/q` as a scalar. Panics if `q = 0`.
    pub fn from_fraction(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar {
            a: Rational::new(big(p), big(q)),
            b: Rational::zero(),
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        Scalar {
            a,
            b: Rational::zero(),
        }
    }

    /// `a + b·√5` from explicit coefficients.
    pub fn quad(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    /// `(c/d)·√5`. Panics if `d = 0`.
    pub fn surd(c: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar {
            a: Rational::zero(),
            b: Rational::new(big(c), big(d)),
        }
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn golden() -> Self {
        Scalar {
            a: Rational::new(big(1), big(2)),
            b: Rational::new(big(1), big(2)),
        }
    }

    /// `1/τ = τ − 1 = (−1 + √5)/2`.
    pub fn golden_inverse() -> Self {
        Scalar {
            a: Rational::new(big(-1), big(2)),
            b: Rational::new(big(1), big(2)),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn field_tag(&self) -> FieldTag {
        if self.b.is_zero() {
            FieldTag::Rational
        } else {
            FieldTag::Quad5
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign relative to zero.
    pub fn sign(&self) -> Ordering {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // Mixed signs: |a| vs |b|·√5, compared by squaring. Equality of
            // a² and 5b² is impossible for nonzero rationals since √5 is
            // irrational.
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2x5 = &self.b * &self.b * five();
                match a2.cmp(&b2x5) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => {
                        debug_assert!(false, "a² = 5b² with a, b nonzero");
                        Ordering::Equal
                    }
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact division; fails on a zero divisor.
    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, ArithmeticError> {
        if rhs.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        // 1/(a + b√5) = (a − b√5)/(a² − 5b²); the norm is nonzero because
        // √5 is irrational.
        let norm = &rhs.a * &rhs.a - &rhs.b * &rhs.b * five();
        debug_assert!(!norm.is_zero());
        let inv = Scalar {
            a: &rhs.a / &norm,
            b: -&rhs.b / &norm,
        };
        Ok(self * &inv)
    }

    /// 64-bit float approximation, for diagnostics and sanity checks only.
    pub fn approx_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * SQRT5_F64
    }
}

fn sign_of(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).sign()
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a1 + b1√5)(a2 + b2√5) = a1a2 + 5 b1b2 + (a1b2 + b1a2)√5
        Scalar {
            a: &self.a * &rhs.a + &self.b * &rhs.b * five(),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational, force_denom: bool) -> fmt::Result {
    if r.denom().is_one() && !force_denom {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `p/q` (or `p` for integers) when rational,
    /// `(p1/q1)+(p2/q2)*r5` otherwise. Parsing round-trips exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write_rational(f, &self.a, false)
        } else {
            write!(f, "(")?;
            write_rational(f, &self.a, true)?;
            write!(f, ")+(")?;
            write_rational(f, &self.b, true)?;
            write!(f, ")*r5")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to parse the canonical text form of a [`Scalar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    input: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar literal: {:?}", self.input)
    }
}

impl core::error::Error for ParseScalarError {}

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError { input: s.into() };
        if let Some(rest) = s.strip_prefix('(') {
            let (a_txt, rest) = rest.split_once(")+(").ok_or_else(err)?;
            let b_txt = rest.strip_suffix(")*r5").ok_or_else(err)?;
            let a = parse_rational(a_txt).ok_or_else(err)?;
            let b = parse_rational(b_txt).ok_or_else(err)?;
            Ok(Scalar::quad(a, b))
        } else {
            let a = parse_rational(s).ok_or_else(err)?;
            Ok(Scalar::from_rational(a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn rational_arithmetic_identities() {
        let half = Scalar::from_fraction(1, 2);
        assert_eq!(&half + &half, Scalar::one());
        assert_eq!(
            Scalar::from_fraction(3, 4) / Scalar::from_fraction(3, 2),
            Scalar::from_fraction(1, 2)
        );
    }

    #[test]
    fn golden_ratio_times_conjugate_is_one() {
        // τ(τ−1) = 1
        let tau = Scalar::golden();
        let tau_minus_one = &tau - &Scalar::one();
        assert_eq!(&tau * &tau_minus_one, Scalar::one());
        assert_eq!(Scalar::golden_inverse(), tau_minus_one);
    }

    #[test]
    fn comparisons_follow_real_embedding() {
        let sqrt5 = Scalar::surd(1, 1);
        let two = Scalar::from_int(2);
        assert_eq!(sqrt5.cmp(&two), Ordering::Greater);
        assert_eq!(Scalar::zero().cmp(&Scalar::zero()), Ordering::Equal);
        // τ ≈ 1.618 < 2, mixed-sign case of the sign test
        assert_eq!(Scalar::golden().cmp(&two), Ordering::Less);
        // −1 + √5 > 0, the other mixed branch
        let x = Scalar::quad(
            Rational::from_integer((-1).into()),
            Rational::from_integer(1.into()),
        );
        assert_eq!(x.sign(), Ordering::Greater);
        // −3 + √5 < 0
        let y = Scalar::quad(
            Rational::from_integer((-3).into()),
            Rational::from_integer(1.into()),
        );
        assert_eq!(y.sign(), Ordering::Less);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = Scalar::one().try_div(&Scalar::zero());
        assert_eq!(e, Err(ArithmeticError::DivisionByZero));
    }

    #[test]
    fn field_tag_tracks_surd_part() {
        assert_eq!(Scalar::from_int(3).field_tag(), FieldTag::Rational);
        assert_eq!(Scalar::golden().field_tag(), FieldTag::Quad5);
        // a Quad5 computation that lands on a rational is retagged
        let s = Scalar::surd(1, 1) * Scalar::surd(1, 1);
        assert_eq!(s, Scalar::from_int(5));
        assert_eq!(s.field_tag(), FieldTag::Rational);
    }

    #[test]
    fn display_round_trip_spot_checks() {
        for s in [
            Scalar::zero(),
            Scalar::from_int(-7),
            Scalar::from_fraction(22, -8),
            Scalar::golden(),
            Scalar::surd(-3, 5),
        ] {
            let txt = s.to_string();
            assert_eq!(txt.parse::<Scalar>().unwrap(), s, "{txt}");
        }
        assert_eq!(Scalar::golden().to_string(), "(1/2)+(1/2)*r5");
        assert_eq!(Scalar::from_fraction(-1, 2).to_string(), "-1/2");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-9999i64..10000, 1i64..200).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| Scalar::quad(a, b))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            if !y.is_zero() {
                let q = x.try_div(&y).unwrap();
                prop_assert_eq!(&q * &y, x.clone());
            }
        }

        #[test]
        fn sign_agrees_with_float(x in arb_scalar()) {
            let approx = x.approx_f64();
            if approx.abs() > 1e-9 {
                let expect = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
                prop_assert_eq!(x.sign(), expect);
            }
        }

        #[test]
        fn text_round_trip(x in arb_scalar()) {
            let txt = x.to_string();
            prop_assert_eq!(txt.parse::<Scalar>().unwrap(), x);
        }
    }
}
