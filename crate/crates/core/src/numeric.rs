//! Exact scalar arithmetic: arbitrary-precision rationals, the field Q(i),
//! and the shared floating-point complex type.
//!
//! Intermediate values in the determinant and resultant kernels overflow
//! fixed-width integers already at modest degrees, so every exact scalar is
//! backed by big integers. Rationals are kept reduced with a positive
//! denominator at all times, which keeps pivots small and makes equality a
//! plain component comparison.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::Ratio;
use num::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = Ratio<BigInt>;

/// Floating-point complex number used by the numerical kernels.
pub type ComplexDouble = Complex64;

/// An element of the field Q(i), the coefficient domain for all exact
/// computation in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_int(re: i64, im: i64) -> Self {
        Self::new(rational_int(re), rational_int(im))
    }

    /// Builds `re_num/re_den + (im_num/im_den) i`, rejecting zero
    /// denominators. Negative denominators are normalized away.
    pub fn from_parts(
        re_num: BigInt,
        re_den: BigInt,
        im_num: BigInt,
        im_den: BigInt,
    ) -> Result<Self> {
        if re_den.is_zero() || im_den.is_zero() {
            return Err(Error::InvalidDenominator);
        }
        Ok(Self::new(
            Ratio::new(re_num, re_den),
            Ratio::new(im_num, im_den),
        ))
    }

    pub fn from_rational(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_int(0, 0)
    }

    pub fn one() -> Self {
        Self::from_int(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_int(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.norm_sqr();
        Ok(Self::new(&self.re / &d, -(&self.im / &d)))
    }

    /// Exact division, reporting division by zero instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Scales by a real rational factor.
    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rounds each component to the nearest double.
    pub fn to_complex(&self) -> ComplexDouble {
        ComplexDouble::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// Exact conversion from a double pair; every finite double is a dyadic
    /// rational.
    pub fn from_complex_exact(z: ComplexDouble) -> Result<Self> {
        Ok(Self::new(
            rational_from_f64(z.re)?,
            rational_from_f64(z.im)?,
        ))
    }
}

/// `i^k` for the layout signs that show up in the substitution formulas.
pub fn i_power(k: usize) -> GaussianRational {
    match k % 4 {
        0 => GaussianRational::from_int(1, 0),
        1 => GaussianRational::from_int(0, 1),
        2 => GaussianRational::from_int(-1, 0),
        _ => GaussianRational::from_int(0, -1),
    }
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        rational_int(1)
    } else {
        rational_int(-1)
    }
}

pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Nearest double; values beyond the double range collapse to infinities.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact binary expansion of a finite double as a rational.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or(Error::NonFinite)
}

/// Sign of a rational as -1, 0, or +1.
pub fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;

    /// Panics on a zero divisor; use [`GaussianRational::checked_div`] to
    /// report it as an error instead.
    fn div(self, rhs: Self) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;

    fn div(self, rhs: Self) -> Self {
        &self / &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> Self {
        -&self
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gr(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> GaussianRational {
        GaussianRational::new(
            Ratio::new(BigInt::from(re_num), BigInt::from(re_den)),
            Ratio::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    #[test]
    fn product_of_conjugates_is_norm() {
        let a = GaussianRational::from_int(1, 1);
        let b = GaussianRational::from_int(1, -1);
        assert_eq!(&a * &b, GaussianRational::from_int(2, 0));
    }

    #[test]
    fn additive_identity() {
        let z = GaussianRational::zero();
        let w = gr(3, 4, 1, 2);
        assert_eq!(&z + &w, w);
    }

    #[test]
    fn self_division_is_one() {
        let w = gr(1, 3, 1, 1);
        assert!((&w / &w).is_one());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            GaussianRational::from_int(2, 3).conj(),
            GaussianRational::from_int(2, -3)
        );
        assert_eq!(
            GaussianRational::from_int(5, 0).conj(),
            GaussianRational::from_int(5, 0)
        );
        let w = gr(1, 2, -1, 1);
        assert_eq!(w.conj().conj(), w);
    }

    #[test]
    fn division_by_zero_is_reported() {
        let w = GaussianRational::one();
        assert_eq!(
            w.checked_div(&GaussianRational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn i_power_cycle() {
        assert_eq!(i_power(0), GaussianRational::one());
        assert_eq!(i_power(1), GaussianRational::i());
        assert_eq!(i_power(2), GaussianRational::from_int(-1, 0));
        assert_eq!(i_power(3), GaussianRational::from_int(0, -1));
        assert_eq!(i_power(7), i_power(3));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let w = gr(1, 2, 2, 3);
        let mut acc = GaussianRational::one();
        for e in 0..8u32 {
            assert_eq!(w.pow(e), acc);
            acc = &acc * &w;
        }
    }

    #[test]
    fn parts_with_zero_denominator_rejected() {
        let r = GaussianRational::from_parts(
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(1),
        );
        assert_eq!(r, Err(Error::InvalidDenominator));
    }

    #[test]
    fn negative_denominators_normalize() {
        let w = GaussianRational::from_parts(
            BigInt::from(1),
            BigInt::from(-2),
            BigInt::from(0),
            BigInt::from(1),
        )
        .unwrap();
        assert_eq!(w, gr(-1, 2, 0, 1));
        assert!(w.re.denom() > &BigInt::from(0));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20)
            .prop_map(|(num, den)| Ratio::new(BigInt::from(num), BigInt::from(den)))
    }

    fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
        (small_rational(), small_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_gaussian(), b in small_gaussian(), c in small_gaussian()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), GaussianRational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
            }
        }

        #[test]
        fn conjugation_is_multiplicative(a in small_gaussian(), b in small_gaussian()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }

        // Near unity one ulp is 2^-52; both components must round-trip
        // within that.
        #[test]
        fn conversion_near_unity_within_one_ulp(num in (1u64 << 51)..(1u64 << 53), den in (1u64 << 51)..(1u64 << 52)) {
            let r = Ratio::new(BigInt::from(num), BigInt::from(den));
            let back = rational_from_f64(rational_to_f64(&r)).unwrap();
            let diff = (&back - &r).abs();
            let ulp = Ratio::new(BigInt::from(1), BigInt::from(1u64 << 52));
            prop_assert!(diff <= ulp, "diff {} exceeds one ulp", diff);
        }
    }
}
