use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Gaussian rational: re + im * i with exact rational parts. Used for
/// exact-arithmetic runs of the Fuchsian trace-coordinate pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(BigRational::from_integer(1.into()))
    }

    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::from_integer(1.into()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact division; `None` when the divisor is zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let n = other.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let p = self * &other.conj();
        Some(Self {
            re: p.re / &n,
            im: p.im / &n,
        })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, other: &ExactComplex) -> ExactComplex {
        ExactComplex {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, other: &ExactComplex) -> ExactComplex {
        ExactComplex {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, other: &ExactComplex) -> ExactComplex {
        ExactComplex {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for ExactComplex {
    type Output = ExactComplex;
    fn add(self, other: ExactComplex) -> ExactComplex {
        &self + &other
    }
}

impl Sub for ExactComplex {
    type Output = ExactComplex;
    fn sub(self, other: ExactComplex) -> ExactComplex {
        &self - &other
    }
}

impl Mul for ExactComplex {
    type Output = ExactComplex;
    fn mul(self, other: ExactComplex) -> ExactComplex {
        &self * &other
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -&self
    }
}

impl num_traits::Zero for ExactComplex {
    fn zero() -> Self {
        ExactComplex::from_real(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl num_traits::One for ExactComplex {
    fn one() -> Self {
        ExactComplex::from_real(BigRational::from_integer(1.into()))
    }
}
