use crate::exact::{factorial, BigRational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A monomial in the entries of a k x 3 matrix of variables (k <= 3), packed
/// into a u64 with 7 bits per exponent in row-major order, most significant
/// field first. The packed ordering therefore coincides with lexicographic
/// order on the row-major exponent vector, which is the order used for the
/// sign normalization of coupling vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u64);

const EXP_BITS: u32 = 7;
const EXP_MAX: u32 = (1 << EXP_BITS) - 1;

fn shift(row: usize, col: usize) -> u32 {
    64 - EXP_BITS * (3 * row as u32 + col as u32 + 1)
}

impl Monomial {
    pub fn one() -> Self {
        Self(0)
    }

    pub fn exp(&self, row: usize, col: usize) -> u32 {
        ((self.0 >> shift(row, col)) as u32) & EXP_MAX
    }

    pub fn with_exp(&self, row: usize, col: usize, e: u32) -> Self {
        assert!(e <= EXP_MAX, "exponent {e} exceeds the packed field");
        let s = shift(row, col);
        Self((self.0 & !((u64::from(EXP_MAX)) << s)) | (u64::from(e) << s))
    }

    /// Product of monomials; exponents add. Panics in debug builds when a
    /// field overflows (total degrees here stay far below 127).
    pub fn mul(&self, other: &Self) -> Self {
        let m = Self(self.0 + other.0);
        debug_assert!((0..3).all(|r| (0..3).all(|c| m.exp(r, c) == self.exp(r, c) + other.exp(r, c))));
        m
    }

    pub fn row_degree(&self, row: usize) -> u32 {
        (0..3).map(|c| self.exp(row, c)).sum()
    }

    pub fn col_degree(&self, k: usize, col: usize) -> u32 {
        (0..k).map(|r| self.exp(r, col)).sum()
    }

    /// Product of factorials of the exponents; the squared Fock norm of the
    /// monomial.
    pub fn fock_norm_sq(&self) -> BigRational {
        let mut n = num_bigint::BigInt::one();
        for r in 0..3 {
            for c in 0..3 {
                let e = self.exp(r, c);
                if e > 1 {
                    n *= factorial(e as usize);
                }
            }
        }
        BigRational::from_integer(n)
    }
}

/// A polynomial in the entries of a k x 3 variable matrix with exact rational
/// coefficients. Terms are kept sorted by packed monomial; zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    k: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(k: usize) -> Self {
        assert!((1..=3).contains(&k));
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, c: BigRational) -> Self {
        let mut p = Self::zero(k);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    /// The variable x_{row,col}, 0-indexed.
    pub fn variable(k: usize, row: usize, col: usize) -> Self {
        assert!(row < k && col < 3);
        let mut p = Self::zero(k);
        p.terms
            .insert(Monomial::one().with_exp(row, col, 1), BigRational::one());
        p
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(k);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.k);
        }
        Self {
            k: self.k,
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        let mut out = Self::zero(self.k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Applies the gl_k operator E_{ij} = sum over the given columns of
    /// x_{i,c} d/d x_{j,c}. Rows are 0-indexed; i == j gives the column-
    /// restricted row-degree (weight) operator.
    pub fn apply_e(&self, i: usize, j: usize, cols: &[usize]) -> Self {
        assert!(i < self.k && j < self.k);
        let mut out = Self::zero(self.k);
        for (m, coef) in &self.terms {
            for &c in cols {
                let e = m.exp(j, c);
                if e == 0 {
                    continue;
                }
                let lowered = m.with_exp(j, c, e - 1);
                let shifted = lowered.with_exp(i, c, lowered.exp(i, c) + 1);
                out.add_term(shifted, coef * BigRational::from_integer(e.into()));
            }
        }
        out
    }

    /// The quadratic Casimir restricted to the given columns:
    /// sum_{i,j} E_{ij} E_{ji} with both operators column-restricted.
    pub fn apply_casimir(&self, cols: &[usize]) -> Self {
        let mut out = Self::zero(self.k);
        for i in 0..self.k {
            for j in 0..self.k {
                out = out.add(&self.apply_e(j, i, cols).apply_e(i, j, cols));
            }
        }
        out
    }

    /// Flips the global sign if the coefficient of the lexicographically
    /// smallest monomial is negative, fixing the sign convention of coupling
    /// vectors.
    pub fn normalize_sign(self) -> Self {
        match self.terms.first_key_value() {
            Some((_, c)) if c.is_negative() => self.scale(&-BigRational::one()),
            _ => self,
        }
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.first_key_value().map(|(_, c)| c)
    }
}

/// The Fock pairing: monomials are orthogonal with squared norm the product
/// of exponent factorials; bilinear over rational coefficients.
pub fn fock_inner(f: &MultiPoly, g: &MultiPoly) -> BigRational {
    assert_eq!(f.k(), g.k());
    // iterate over the smaller support
    let (small, large) = if f.num_terms() <= g.num_terms() {
        (f, g)
    } else {
        (g, f)
    };
    let mut acc = BigRational::zero();
    for (m, c) in small.terms() {
        let d = large.coefficient(m);
        if !d.is_zero() {
            acc += c * d * m.fock_norm_sq();
        }
    }
    acc
}

/// The 3 x 3 determinant of the variable matrix (k = 3 only).
pub fn det3() -> MultiPoly {
    let x = |r, c| MultiPoly::variable(3, r, c);
    let term = |a: MultiPoly, b: MultiPoly, c: MultiPoly| a.mul(&b).mul(&c);
    term(x(0, 0), x(1, 1), x(2, 2))
        .sub(&term(x(0, 0), x(1, 2), x(2, 1)))
        .sub(&term(x(0, 1), x(1, 0), x(2, 2)))
        .add(&term(x(0, 1), x(1, 2), x(2, 0)))
        .add(&term(x(0, 2), x(1, 0), x(2, 1)))
        .sub(&term(x(0, 2), x(1, 1), x(2, 0)))
}

/// det3 raised to the p-th power.
pub fn det3_pow(p: u32) -> MultiPoly {
    let d = det3();
    let mut out = MultiPoly::constant(3, BigRational::one());
    for _ in 0..p {
        out = out.mul(&d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    #[test]
    fn monomial_packing_roundtrips() {
        let m = Monomial::one()
            .with_exp(0, 0, 3)
            .with_exp(1, 2, 5)
            .with_exp(2, 1, 127);
        assert_eq!(m.exp(0, 0), 3);
        assert_eq!(m.exp(1, 2), 5);
        assert_eq!(m.exp(2, 1), 127);
        assert_eq!(m.exp(0, 1), 0);
        assert_eq!(m.row_degree(0), 3);
        assert_eq!(m.row_degree(1), 5);
        assert_eq!(m.col_degree(3, 1), 127);
    }

    #[test]
    fn monomial_order_is_row_major_lex() {
        // higher exponent in an earlier slot dominates
        let a = Monomial::one().with_exp(0, 0, 2);
        let b = Monomial::one().with_exp(0, 0, 1).with_exp(2, 2, 100);
        assert!(a > b);
        let c = Monomial::one().with_exp(0, 1, 1);
        let d = Monomial::one().with_exp(0, 2, 1);
        assert!(c > d);
    }

    #[test]
    fn poly_arithmetic_collects_terms() {
        let x = MultiPoly::variable(2, 0, 0);
        let y = MultiPoly::variable(2, 1, 0);
        let s = x.add(&y);
        let p = s.mul(&s);
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(p.num_terms(), 3);
        let xy = Monomial::one().with_exp(0, 0, 1).with_exp(1, 0, 1);
        assert_eq!(p.coefficient(&xy), integer(2));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn apply_e_differentiates_and_multiplies() {
        // E_{01} on x_{10}^2 (columns {0}) gives 2 x_{00} x_{10}
        let f = MultiPoly::variable(2, 1, 0).mul(&MultiPoly::variable(2, 1, 0));
        let g = f.apply_e(0, 1, &[0]);
        let expect = Monomial::one().with_exp(0, 0, 1).with_exp(1, 0, 1);
        assert_eq!(g.num_terms(), 1);
        assert_eq!(g.coefficient(&expect), integer(2));
        // the weight operator E_{11} on the same f returns 2 f
        let w = f.apply_e(1, 1, &[0, 1, 2]);
        assert_eq!(w, f.scale(&integer(2)));
    }

    #[test]
    fn fock_inner_weights_by_factorials() {
        let x = MultiPoly::variable(2, 0, 0);
        let x3 = x.mul(&x).mul(&x);
        assert_eq!(fock_inner(&x3, &x3), integer(6));
        assert_eq!(fock_inner(&x, &x3), integer(0));
        let mixed = x3.add(&x.scale(&rational(1, 2)));
        assert_eq!(fock_inner(&mixed, &x), rational(1, 2));
    }

    #[test]
    fn det3_squared_norm_is_six() {
        let d = det3();
        assert_eq!(d.num_terms(), 6);
        assert_eq!(fock_inner(&d, &d), integer(6));
        // det is killed by every off-diagonal E_{ij} over all columns
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(d.apply_e(i, j, &[0, 1, 2]).is_zero(), "E_{i}{j} det != 0");
                }
            }
        }
    }

    #[test]
    fn normalize_sign_flips_negative_leader() {
        let x = MultiPoly::variable(2, 0, 0);
        let y = MultiPoly::variable(2, 0, 1);
        // x - y has leading (lex-smallest) monomial y with coefficient -1
        let p = x.sub(&y).normalize_sign();
        assert_eq!(p.leading_coefficient(), Some(&integer(1)));
        // flipping put the +1 on y, so x now carries -1
        let xm = Monomial::one().with_exp(0, 0, 1);
        assert_eq!(p.coefficient(&xm), integer(-1));
    }

    #[test]
    fn casimir_on_single_variable() {
        // x_{00} is a highest weight vector of gl_2-weight (1,0); the Casimir
        // scalar for diagram (m1,m2) is m1^2 + m2^2 + m1 - m2 = 2
        let x = MultiPoly::variable(2, 0, 0);
        let c = x.apply_casimir(&[0, 1, 2]);
        assert_eq!(c, x.scale(&integer(2)));
    }

    #[test]
    fn monomial_mul_adds_exponents() {
        let a = Monomial::one().with_exp(0, 0, 2).with_exp(1, 1, 1);
        let b = Monomial::one().with_exp(0, 0, 1).with_exp(2, 2, 4);
        let p = a.mul(&b);
        assert_eq!(p.exp(0, 0), 3);
        assert_eq!(p.exp(1, 1), 1);
        assert_eq!(p.exp(2, 2), 4);
    }
}
