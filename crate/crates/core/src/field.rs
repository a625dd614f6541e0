//! Exact scalar fields: the rationals and GF(2).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Which field a scalar (or an automaton) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Gf2,
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => f.write_str("rational"),
            FieldKind::Gf2 => f.write_str("gf2"),
        }
    }
}

/// An exact field. All operations are total except `inv` on zero.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Image of an integer under the canonical ring map Z -> F.
    fn from_i64(v: i64) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Field::add(self, rhs);
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

/// Element of the two-element field: addition is XOR, multiplication is AND.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Field for Gf2 {
    const KIND: FieldKind = FieldKind::Gf2;

    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn is_one(&self) -> bool {
        self.0
    }
    fn add(&self, rhs: &Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gf2(self.0 ^ rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gf2(self.0 & rhs.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn inv(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
    fn from_i64(v: i64) -> Self {
        Gf2(v.rem_euclid(2) == 1)
    }
}

/// Shorthand for building a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Renders a rational as `p/q` (the denominator is always printed).
pub fn fmt_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// True iff the rational lies in the closed unit interval.
pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= <Rational as One>::one()
}

/// Maps a 0/1 rational to GF(2); `None` for anything else.
pub fn rational_to_gf2(r: &Rational) -> Option<Gf2> {
    if Zero::is_zero(r) {
        Some(Gf2(false))
    } else if One::is_one(r) {
        Some(Gf2(true))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rat(6, -4);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
        assert_eq!(fmt_ratio(&int(1)), "1/1");
    }

    #[test]
    fn gf2_arithmetic() {
        let one = Gf2::one();
        assert_eq!(Field::add(&one, &one), Gf2::zero());
        assert_eq!(Field::mul(&one, &Gf2::zero()), Gf2::zero());
        assert_eq!(Gf2::from_i64(-3), one);
        assert!(Gf2::zero().inv().is_none());
    }
}
