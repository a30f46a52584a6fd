use super::{sqrt_exact, ExactError};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// A real number of the form `sign * sqrt(square)` with `square` a
/// nonnegative rational. Closed under multiplication and rational scaling.
/// Addition is partial: it is defined exactly when both operands lie in the
/// same radical class, i.e. the ratio of the radicands is a perfect square.
///
/// Representation invariant: `sign` is -1, 0 or +1, and `square` is zero iff
/// `sign` is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSqrtRational {
    sign: i8,
    square: BigRational,
}

impl SignedSqrtRational {
    /// Builds `sign * sqrt(square)`. Panics if `square` is negative or `sign`
    /// is outside {-1, 0, 1}; both indicate a caller bug, not bad data.
    pub fn new(sign: i8, square: BigRational) -> Self {
        assert!(sign >= -1 && sign <= 1, "sign must be -1, 0 or 1");
        assert!(!square.is_negative(), "radicand must be nonnegative");
        if sign == 0 || square.is_zero() {
            Self {
                sign: 0,
                square: BigRational::zero(),
            }
        } else {
            Self { sign, square }
        }
    }

    pub fn zero() -> Self {
        Self {
            sign: 0,
            square: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, BigRational::from_integer(1.into()))
    }

    /// Embeds a rational r as sign(r) * sqrt(r^2).
    pub fn from_rational(r: &BigRational) -> Self {
        let sign = if r.is_zero() {
            0
        } else if r.is_negative() {
            -1
        } else {
            1
        };
        Self::new(sign, r * r)
    }

    /// The principal square root of a nonnegative rational.
    pub fn sqrt_of(q: &BigRational) -> Self {
        assert!(!q.is_negative(), "radicand must be nonnegative");
        Self::new(1, q.clone())
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn square(&self) -> &BigRational {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn abs(&self) -> Self {
        Self {
            sign: self.sign.abs(),
            square: self.square.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            sign: -self.sign,
            square: self.square.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.sign * other.sign, &self.square * &other.square)
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        let s = if r.is_zero() {
            0
        } else if r.is_negative() {
            -self.sign
        } else {
            self.sign
        };
        Self::new(s, &self.square * r * r)
    }

    /// Adds two values of the same radical class. Fails with
    /// `IncompatibleRadicals` when the radicand ratio is not a perfect
    /// square, in which case the sum is not of the form sign * sqrt(q).
    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let ratio = &self.square / &other.square;
        let Some(r) = sqrt_exact(&ratio) else {
            return Err(ExactError::IncompatibleRadicals(
                self.square.to_string(),
                other.square.to_string(),
            ));
        };
        // self = sign_s * r * sqrt(other.square), so the sum collapses to
        // (sign_s * r + sign_o) * sqrt(other.square)
        let c = BigRational::from_integer(self.sign.into()) * r
            + BigRational::from_integer(other.sign.into());
        let sign = if c.is_zero() {
            0
        } else if c.is_negative() {
            -1
        } else {
            1
        };
        Ok(Self::new(sign, &c * &c * &other.square))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_add(&other.neg())
    }

    /// The exact rational value, when the radicand is a perfect square.
    pub fn as_rational(&self) -> Option<BigRational> {
        let root = sqrt_exact(&self.square)?;
        Some(match self.sign {
            0 => BigRational::zero(),
            1 => root,
            _ => -root,
        })
    }

    /// Floating approximation, for display and cross-checks only.
    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * self.square.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl std::fmt::Display for SignedSqrtRational {
    /// Exact form: a plain rational when the radicand is a perfect square,
    /// otherwise the sign and the radicand under a radical.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let s = if self.sign < 0 { "-" } else { "" };
        write!(f, "{s}sqrt({})", self.square)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    #[test]
    fn from_rational_squares_the_value() {
        let v = SignedSqrtRational::from_rational(&rational(-2, 3));
        assert_eq!(v.sign(), -1);
        assert_eq!(v.square(), &rational(4, 9));
        assert_eq!(v.as_rational(), Some(rational(-2, 3)));
    }

    #[test]
    fn zero_is_canonical() {
        let z = SignedSqrtRational::new(1, integer(0));
        assert_eq!(z, SignedSqrtRational::zero());
        assert!(z.is_zero());
    }

    #[test]
    fn mul_multiplies_signs_and_radicands() {
        let a = SignedSqrtRational::new(-1, rational(1, 6));
        let b = SignedSqrtRational::new(-1, integer(24));
        let p = a.mul(&b);
        // sqrt(1/6) * sqrt(24) = sqrt(4) = 2, signs cancel
        assert_eq!(p.as_rational(), Some(integer(2)));
    }

    #[test]
    fn add_within_radical_class() {
        // sqrt(2) + sqrt(8) = 3 sqrt(2), i.e. radicand 18
        let a = SignedSqrtRational::sqrt_of(&integer(2));
        let b = SignedSqrtRational::sqrt_of(&integer(8));
        let s = a.checked_add(&b).unwrap();
        assert_eq!(s, SignedSqrtRational::new(1, integer(18)));
        // and sqrt(8) - sqrt(2) = sqrt(2)
        let d = b.checked_sub(&a).unwrap();
        assert_eq!(d, SignedSqrtRational::new(1, integer(2)));
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = SignedSqrtRational::new(1, rational(1, 6));
        let s = a.checked_add(&a.neg()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn add_rejects_distinct_radical_classes() {
        let a = SignedSqrtRational::sqrt_of(&integer(2));
        let b = SignedSqrtRational::sqrt_of(&integer(3));
        assert!(matches!(
            a.checked_add(&b),
            Err(ExactError::IncompatibleRadicals(_, _))
        ));
    }

    #[test]
    fn mul_rational_flips_sign_with_negative_scalar() {
        let a = SignedSqrtRational::sqrt_of(&integer(2));
        let v = a.mul_rational(&rational(-3, 2));
        assert_eq!(v.sign(), -1);
        assert_eq!(v.square(), &rational(9, 2));
    }

    #[test]
    fn to_f64_tracks_value() {
        let v = SignedSqrtRational::new(-1, rational(1, 4));
        assert!((v.to_f64() + 0.5).abs() < 1e-15);
    }
}
