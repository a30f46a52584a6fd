//! Trace coordinates on triples of traceless 2x2 residue matrices, the
//! coordinate-level Okamoto transformation, reconstruction of a triple from
//! its coordinates, and the bridge to tetrahedron edge lengths that exhibits
//! the Okamoto shift as the Regge transformation.
//!
//! A triple (A1, A2, A3) determines A4 = -(A1+A2+A3). Each Ai has eigenvalue
//! parameter theta_i with Tr Ai^2 = theta_i^2 / 2, and the hatted matrix
//! Ai + (theta_i/2) I has rank one and trace theta_i. The coordinates are the
//! four thetas, the pairwise hat-traces lambda_ij, and the two triple traces
//! tau, tau'. Everything is generic over the scalar field, so the same code
//! runs in double precision and in exact Gaussian rationals.

use crate::exact::{BigRational, ExactComplex};
use crate::tetra::{self, EdgeLengths, Herm2, TetraError};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuchsError {
    /// Tr A^2 does not match theta^2 / 2 for the supplied theta.
    #[error("matrix eigenvalues do not match the supplied theta")]
    EigenvalueMismatch,
    /// theta = 0 was supplied for a matrix with Tr A^2 != 0.
    #[error("zero theta supplied for a non-nilpotent matrix")]
    DegenerateTriple,
    /// The gauge used by `reconstruct` needs lambda12, lambda13 and
    /// theta1 theta2 - lambda12 all nonzero.
    #[error("coordinates lie outside the generic gauge domain")]
    NonGeneric,
    /// The coordinate fields violate one of the two consistency relations,
    /// or the reconstructed trace of the third matrix misses theta3.
    #[error("coordinate fields are mutually inconsistent")]
    InconsistentCoords,
    /// Edge lengths were requested from coordinates that cannot come from a
    /// Hermitian triple (non-real theta or a negative squared length).
    #[error("coordinates are not Hermitian-admissible")]
    NotHermitianAdmissible,
    #[error(transparent)]
    Tetra(#[from] TetraError),
}

/// Scalar field for the trace-coordinate pipeline: double-precision complex
/// numbers or exact Gaussian rationals. `close` is exact equality in the
/// exact instance and a scaled tolerance for floats.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_ratio(num: i64, den: i64) -> Self;
    /// `None` exactly when the divisor is zero.
    fn div(&self, other: &Self) -> Option<Self>;
    fn close(&self, other: &Self, tol: f64) -> bool;
    fn conj_s(&self) -> Self;
    /// Double-precision shadow, for reports and diagnostics.
    fn to_complex(&self) -> Complex64;
}

impl Scalar for Complex64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn div(&self, other: &Self) -> Option<Self> {
        if other.norm_sqr() == 0.0 {
            None
        } else {
            Some(self / other)
        }
    }

    fn close(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol * (1.0 + self.norm() + other.norm())
    }

    fn conj_s(&self) -> Self {
        self.conj()
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

impl Scalar for ExactComplex {
    fn from_ratio(num: i64, den: i64) -> Self {
        ExactComplex::from_real(BigRational::new(num.into(), den.into()))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        ExactComplex::div(self, other)
    }

    fn close(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn conj_s(&self) -> Self {
        self.conj()
    }

    fn to_complex(&self) -> Complex64 {
        let (re, im) = self.to_f64_pair();
        Complex64::new(re, im)
    }
}

/// A 2x2 matrix over the scalar field.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: Scalar> Mat2<S> {
    pub fn new(m: [[S; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn zero() -> Self {
        Self::new([
            [S::zero(), S::zero()],
            [S::zero(), S::zero()],
        ])
    }

    pub fn identity() -> Self {
        Self::new([
            [S::one(), S::zero()],
            [S::zero(), S::one()],
        ])
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].clone() + other.m[i][j].clone();
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn neg(&self) -> Self {
        let e = |i: usize, j: usize| -self.m[i][j].clone();
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, s: &S) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].clone() * s.clone();
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn trace(&self) -> S {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * other.m[0][j].clone()
                + self.m[i][1].clone() * other.m[1][j].clone()
        };
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

/// Tr(a b).
pub fn tr2<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> S {
    let mut acc = S::zero();
    for i in 0..2 {
        for k in 0..2 {
            acc = acc + a.m[i][k].clone() * b.m[k][i].clone();
        }
    }
    acc
}

/// Tr(a b c).
pub fn tr3<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>, c: &Mat2<S>) -> S {
    tr2(&a.mul(b), c)
}

/// A_i + (theta_i/2) I, rank one with trace theta_i when theta matches the
/// eigenvalues of A_i.
pub fn hat<S: Scalar>(a: &Mat2<S>, theta: &S, tol: f64) -> Result<Mat2<S>, FuchsError> {
    let half_sq = theta.clone() * theta.clone() * S::from_ratio(1, 2);
    let tr_sq = tr2(a, a);
    if !tr_sq.close(&half_sq, tol) {
        if theta.is_zero() {
            return Err(FuchsError::DegenerateTriple);
        }
        return Err(FuchsError::EigenvalueMismatch);
    }
    Ok(a.add(&Mat2::identity().scale(&(theta.clone() * S::from_ratio(1, 2)))))
}

/// Triple of traceless residue matrices; the fourth residue is minus the sum.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixTriple<S> {
    pub a1: Mat2<S>,
    pub a2: Mat2<S>,
    pub a3: Mat2<S>,
    pub hermitian: bool,
}

impl<S: Scalar> MatrixTriple<S> {
    pub fn new(a1: Mat2<S>, a2: Mat2<S>, a3: Mat2<S>, hermitian: bool) -> Self {
        debug_assert!(a1.trace().is_zero() && a2.trace().is_zero() && a3.trace().is_zero());
        Self { a1, a2, a3, hermitian }
    }

    pub fn a4(&self) -> Mat2<S> {
        self.a1.add(&self.a2).add(&self.a3).neg()
    }
}

impl MatrixTriple<Complex64> {
    /// Hermitian triple from three vectors in R^3 through the isometric
    /// embedding into traceless Hermitian matrices.
    pub fn from_vectors(v1: [f64; 3], v2: [f64; 3], v3: [f64; 3]) -> Self {
        let to_mat = |v: [f64; 3]| Mat2::new(tetra::phi_embed(v).m);
        Self {
            a1: to_mat(v1),
            a2: to_mat(v2),
            a3: to_mat(v3),
            hermitian: true,
        }
    }
}

impl MatrixTriple<ExactComplex> {
    /// Exact Hermitian triple from three rational vectors.
    pub fn from_lattice_vectors(
        v1: &[BigRational; 3],
        v2: &[BigRational; 3],
        v3: &[BigRational; 3],
    ) -> Self {
        let to_mat = |v: &[BigRational; 3]| Mat2::new(tetra::phi_embed_exact(v));
        Self {
            a1: to_mat(v1),
            a2: to_mat(v2),
            a3: to_mat(v3),
            hermitian: true,
        }
    }
}

/// The eigenvalue parameter of a traceless matrix on the principal branch:
/// sqrt(2 Tr A^2). Hermitian matrices get the nonnegative choice.
pub fn theta_of(a: &Mat2<Complex64>) -> Complex64 {
    (tr2(a, a) * 2.0).sqrt()
}

/// Trace coordinates of a triple: theta, the pairwise hat-traces, and the
/// two triple hat-traces.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceCoords<S> {
    pub theta: [S; 4],
    pub lambda12: S,
    pub lambda23: S,
    pub lambda13: S,
    pub tau: S,
    pub tau_prime: S,
}

/// lambda13 as forced by the other coordinates:
/// [theta4^2 - theta1^2 - theta2^2 - theta3^2
///  + 2 (theta1 theta2 + theta1 theta3 + theta2 theta3)] / 4
///  - lambda12 - lambda23,
/// the expansion of Tr A4^2 = theta4^2 / 2 in hat-traces.
pub fn lambda13_from<S: Scalar>(theta: &[S; 4], lambda12: &S, lambda23: &S) -> S {
    let sq = |x: &S| x.clone() * x.clone();
    let t = theta;
    let cross = t[0].clone() * t[1].clone()
        + t[0].clone() * t[2].clone()
        + t[1].clone() * t[2].clone();
    let s = sq(&t[3]) - sq(&t[0]) - sq(&t[1]) - sq(&t[2]) + cross.clone() + cross;
    s * S::from_ratio(1, 4) - lambda12.clone() - lambda23.clone()
}

impl<S: Scalar> TraceCoords<S> {
    /// Both consistency relations: the lambda13 formula and
    /// tau tau' = lambda12 lambda23 lambda13 (from the rank-one
    /// factorizations of the hatted matrices).
    pub fn check_consistency(&self, tol: f64) -> Result<(), FuchsError> {
        let l13 = lambda13_from(&self.theta, &self.lambda12, &self.lambda23);
        if !l13.close(&self.lambda13, tol) {
            return Err(FuchsError::InconsistentCoords);
        }
        let lhs = self.tau.clone() * self.tau_prime.clone();
        let rhs = self.lambda12.clone() * self.lambda23.clone() * self.lambda13.clone();
        if !lhs.close(&rhs, tol) {
            return Err(FuchsError::InconsistentCoords);
        }
        Ok(())
    }
}

/// Trace coordinates of a triple under the supplied theta choices. Each
/// theta_i must satisfy Tr A_i^2 = theta_i^2 / 2, including theta4 against
/// A4 = -(A1+A2+A3).
pub fn coordinates<S: Scalar>(
    t: &MatrixTriple<S>,
    theta: &[S; 4],
    tol: f64,
) -> Result<TraceCoords<S>, FuchsError> {
    let h1 = hat(&t.a1, &theta[0], tol)?;
    let h2 = hat(&t.a2, &theta[1], tol)?;
    let h3 = hat(&t.a3, &theta[2], tol)?;
    hat(&t.a4(), &theta[3], tol)?;
    let lambda12 = tr2(&h1, &h2);
    let lambda23 = tr2(&h2, &h3);
    let lambda13 = tr2(&h1, &h3);
    let tau = tr3(&h1, &h2, &h3);
    let tau_prime = tr3(&h3, &h2, &h1);
    let coords = TraceCoords {
        theta: theta.clone(),
        lambda12,
        lambda23,
        lambda13,
        tau,
        tau_prime,
    };
    // both relations are identities for coordinates of an actual triple
    assert!(
        coords.check_consistency(tol.max(1e-8)).is_ok(),
        "trace coordinates violate their defining identities"
    );
    Ok(coords)
}

/// The Okamoto transformation in trace coordinates: theta_i -> theta_i - phi
/// with phi = (theta1 + theta2 + theta3 + theta4)/2, all five hat-traces
/// fixed. Applying it twice is the identity.
pub fn okamoto_coords<S: Scalar>(c: &TraceCoords<S>) -> TraceCoords<S> {
    let t = &c.theta;
    let phi = (t[0].clone() + t[1].clone() + t[2].clone() + t[3].clone()) * S::from_ratio(1, 2);
    let theta = [
        t[0].clone() - phi.clone(),
        t[1].clone() - phi.clone(),
        t[2].clone() - phi.clone(),
        t[3].clone() - phi,
    ];
    // the lambda13 expression is invariant under the common shift of theta,
    // so keeping all three lambdas preserves consistency
    let out = TraceCoords {
        theta,
        lambda12: c.lambda12.clone(),
        lambda23: c.lambda23.clone(),
        lambda13: c.lambda13.clone(),
        tau: c.tau.clone(),
        tau_prime: c.tau_prime.clone(),
    };
    assert!(
        lambda13_from(&out.theta, &out.lambda12, &out.lambda23).close(&out.lambda13, 1e-8),
        "shift invariance of the lambda13 expression failed"
    );
    out
}

/// A triple realizing the given coordinates, in the gauge where the hatted
/// matrices factor as u_i v_i^T with u1, u2 the standard basis and the scale
/// freedoms fixed by v1 . u2 = v1 . u3 = 1. Requires the generic locus:
/// lambda12, lambda13 and theta1 theta2 - lambda12 all nonzero. The output
/// satisfies coordinates(reconstruct(c)) = c.
pub fn reconstruct<S: Scalar>(c: &TraceCoords<S>, tol: f64) -> Result<MatrixTriple<S>, FuchsError> {
    c.check_consistency(tol)?;
    let th = &c.theta;
    if c.lambda12.is_zero() || c.lambda13.is_zero() {
        return Err(FuchsError::NonGeneric);
    }
    let det = th[0].clone() * th[1].clone() - c.lambda12.clone();
    if det.is_zero() {
        return Err(FuchsError::NonGeneric);
    }
    // v1 = (theta1, 1), v2 = (lambda12, theta2); p_ij = v_i . u_j
    let p13 = S::one();
    let p31 = c.lambda13.clone();
    let (p23, p32) = if c.tau.is_zero() {
        // tau tau' = lambda12 lambda23 lambda13 with lambda12, lambda13
        // nonzero forces lambda23 = 0; tau' alone pins p32
        if !c.lambda23.is_zero() {
            return Err(FuchsError::InconsistentCoords);
        }
        let p32 = c
            .tau_prime
            .div(&c.lambda12)
            .expect("lambda12 is nonzero here");
        (S::zero(), p32)
    } else {
        let p23 = c.tau.div(&c.lambda13).expect("lambda13 is nonzero here");
        let p32 = (c.lambda23.clone() * c.lambda13.clone())
            .div(&c.tau)
            .expect("tau is nonzero here");
        (p23, p32)
    };
    // u3 solves v1 . u3 = p13, v2 . u3 = p23
    let x = (th[1].clone() * p13.clone() - p23.clone())
        .div(&det)
        .expect("det is nonzero here");
    let y = (th[0].clone() * p23.clone() - c.lambda12.clone() * p13.clone())
        .div(&det)
        .expect("det is nonzero here");
    // the trace of the third hatted matrix is the one condition not yet
    // used; it encodes the tau + tau' relation
    let p33 = p31.clone() * x.clone() + p32.clone() * y.clone();
    if !p33.close(&th[2], tol) {
        return Err(FuchsError::InconsistentCoords);
    }
    let hat1 = Mat2::new([
        [th[0].clone(), S::one()],
        [S::zero(), S::zero()],
    ]);
    let hat2 = Mat2::new([
        [S::zero(), S::zero()],
        [c.lambda12.clone(), th[1].clone()],
    ]);
    let hat3 = Mat2::new([
        [x.clone() * p31.clone(), x * p32.clone()],
        [y.clone() * p31, y * p32],
    ]);
    let unhat = |h: &Mat2<S>, theta: &S| {
        h.add(&Mat2::identity().scale(&(theta.clone() * S::from_ratio(-1, 2))))
    };
    Ok(MatrixTriple {
        a1: unhat(&hat1, &th[0]),
        a2: unhat(&hat2, &th[1]),
        a3: unhat(&hat3, &th[2]),
        hermitian: false,
    })
}

/// Before/after record of the quantities preserved by the Okamoto
/// transformation: the five hat-traces (lambda12, lambda23, lambda13, tau,
/// tau') recomputed from a reconstructed triple, and the three squared sums
/// Tr(Ai+Aj)^2, which are the matrix-level shadows of the fixed squared
/// edge lengths.
#[derive(Debug, Clone)]
pub struct LemmaReport<S> {
    pub five_before: [S; 5],
    pub five_after: [S; 5],
    pub sum_squares_before: [S; 3],
    pub sum_squares_after: [S; 3],
    pub pass: bool,
}

fn five_of<S: Scalar>(c: &TraceCoords<S>) -> [S; 5] {
    [
        c.lambda12.clone(),
        c.lambda23.clone(),
        c.lambda13.clone(),
        c.tau.clone(),
        c.tau_prime.clone(),
    ]
}

fn sum_squares_of<S: Scalar>(t: &MatrixTriple<S>) -> [S; 3] {
    let s12 = t.a1.add(&t.a2);
    let s23 = t.a2.add(&t.a3);
    let s13 = t.a1.add(&t.a3);
    [tr2(&s12, &s12), tr2(&s23, &s23), tr2(&s13, &s13)]
}

/// Runs the full loop triple -> coordinates -> Okamoto shift -> reconstruct
/// -> coordinates and compares the five hat-traces and the three squared
/// sums across it.
pub fn verify_lemma_invariants<S: Scalar>(
    t: &MatrixTriple<S>,
    theta: &[S; 4],
    tol: f64,
) -> Result<LemmaReport<S>, FuchsError> {
    let c = coordinates(t, theta, tol)?;
    let shifted = okamoto_coords(&c);
    let t2 = reconstruct(&shifted, tol)?;
    let c2 = coordinates(&t2, &shifted.theta, tol)?;
    let five_before = five_of(&c);
    let five_after = five_of(&c2);
    let sum_squares_before = sum_squares_of(t);
    let sum_squares_after = sum_squares_of(&t2);
    let five_ok = five_before
        .iter()
        .zip(&five_after)
        .all(|(x, y)| x.close(y, tol));
    let sums_ok = sum_squares_before
        .iter()
        .zip(&sum_squares_after)
        .all(|(x, y)| x.close(y, tol));
    Ok(LemmaReport {
        five_before,
        five_after,
        sum_squares_before,
        sum_squares_after,
        pass: five_ok && sums_ok,
    })
}

/// Edge lengths encoded by Hermitian-admissible coordinates:
/// (a,b,c,d) = |theta_i| and e^2 = (theta1-theta2)^2 + 4 lambda12,
/// f^2 = (theta2-theta3)^2 + 4 lambda23.
pub fn edge_lengths_from_coords(
    c: &TraceCoords<Complex64>,
    tol: f64,
) -> Result<EdgeLengths<f64>, FuchsError> {
    let real = |z: &Complex64| -> Result<f64, FuchsError> {
        if z.im.abs() > tol * (1.0 + z.norm()) {
            return Err(FuchsError::NotHermitianAdmissible);
        }
        Ok(z.re)
    };
    let t: Vec<f64> = c
        .theta
        .iter()
        .map(|z| real(z).map(f64::abs))
        .collect::<Result<_, _>>()?;
    let e_sq = (real(&c.theta[0])? - real(&c.theta[1])?).powi(2) + 4.0 * real(&c.lambda12)?;
    let f_sq = (real(&c.theta[1])? - real(&c.theta[2])?).powi(2) + 4.0 * real(&c.lambda23)?;
    for sq in [e_sq, f_sq] {
        if sq < -tol {
            return Err(FuchsError::NotHermitianAdmissible);
        }
    }
    Ok(EdgeLengths::new(
        t[0],
        t[1],
        t[2],
        t[3],
        e_sq.max(0.0).sqrt(),
        f_sq.max(0.0).sqrt(),
    ))
}

/// Exact counterpart of `edge_lengths_from_coords`, returning squared
/// lengths so everything stays rational.
pub fn edge_length_squares_from_coords(
    c: &TraceCoords<ExactComplex>,
) -> Result<EdgeLengths<BigRational>, FuchsError> {
    let real = |z: &ExactComplex| -> Result<BigRational, FuchsError> {
        if !z.is_real() {
            return Err(FuchsError::NotHermitianAdmissible);
        }
        Ok(z.re.clone())
    };
    let t: Vec<BigRational> = c.theta.iter().map(real).collect::<Result<_, _>>()?;
    let four = BigRational::from_integer(4.into());
    let e_sq = {
        let d = &t[0] - &t[1];
        &d * &d + &four * real(&c.lambda12)?
    };
    let f_sq = {
        let d = &t[1] - &t[2];
        &d * &d + &four * real(&c.lambda23)?
    };
    if e_sq < BigRational::zero() || f_sq < BigRational::zero() {
        return Err(FuchsError::NotHermitianAdmissible);
    }
    Ok(EdgeLengths::new(
        &t[0] * &t[0],
        &t[1] * &t[1],
        &t[2] * &t[2],
        &t[3] * &t[3],
        e_sq,
        f_sq,
    ))
}

/// Comparison of the two length routes in double precision.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub matrix_route: EdgeLengths<f64>,
    pub okamoto_route: EdgeLengths<f64>,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Checks, on a Hermitian triple with positive thetas, that the Okamoto
/// shift of its trace coordinates encodes exactly the Regge transform of
/// its tetrahedron: route one applies the Regge map to the edge lengths of
/// the matrices, route two reads lengths off the shifted coordinates.
pub fn verify_regge_correspondence(
    t: &MatrixTriple<Complex64>,
    tol: f64,
) -> Result<CorrespondenceReport, FuchsError> {
    if !t.hermitian {
        return Err(FuchsError::NotHermitianAdmissible);
    }
    let theta = [
        theta_of(&t.a1),
        theta_of(&t.a2),
        theta_of(&t.a3),
        theta_of(&t.a4()),
    ];
    if theta.iter().any(|th| th.re <= 0.0 || th.im.abs() > tol) {
        return Err(FuchsError::DegenerateTriple);
    }
    let herm = |a: &Mat2<Complex64>| Herm2::new(a.m);
    let lengths = tetra::edge_lengths(&herm(&t.a1), &herm(&t.a2), &herm(&t.a3));
    let matrix_route = tetra::regge_lengths(&lengths)?;
    let coords = coordinates(t, &theta, tol)?;
    let okamoto_route = edge_lengths_from_coords(&okamoto_coords(&coords), tol)?;
    let max_deviation = matrix_route
        .as_array()
        .into_iter()
        .zip(okamoto_route.as_array())
        .map(|(x, y)| (x - y).abs() / (1.0 + x.abs() + y.abs()))
        .fold(0.0, f64::max);
    Ok(CorrespondenceReport {
        matrix_route,
        okamoto_route,
        max_deviation,
        pass: max_deviation <= tol,
    })
}

/// Exact comparison of the two routes, on squared lengths.
#[derive(Debug, Clone)]
pub struct CorrespondenceReportExact {
    pub matrix_route_squares: EdgeLengths<BigRational>,
    pub okamoto_route_squares: EdgeLengths<BigRational>,
    /// phi >= theta_i for all i, so the shifted thetas are the negated
    /// Regge lengths; holds whenever the four triangle inequalities do.
    pub phi_dominates: bool,
    pub pass: bool,
}

/// Exact version of `verify_regge_correspondence` for a Hermitian triple
/// with rational positive thetas (lattice vectors of integer length).
pub fn verify_regge_correspondence_exact(
    t: &MatrixTriple<ExactComplex>,
    theta: &[BigRational; 4],
) -> Result<CorrespondenceReportExact, FuchsError> {
    if theta.iter().any(|th| th <= &BigRational::zero()) {
        return Err(FuchsError::DegenerateTriple);
    }
    let theta_c: [ExactComplex; 4] = [
        ExactComplex::from_real(theta[0].clone()),
        ExactComplex::from_real(theta[1].clone()),
        ExactComplex::from_real(theta[2].clone()),
        ExactComplex::from_real(theta[3].clone()),
    ];
    let squares = tetra::edge_length_squares_exact(&t.a1.m, &t.a2.m, &t.a3.m);
    // Regge on the lengths themselves: a..d are the rational thetas, e and
    // f are untouched, so the squared image is rational too
    let lengths = EdgeLengths::new(
        theta[0].clone(),
        theta[1].clone(),
        theta[2].clone(),
        theta[3].clone(),
        BigRational::zero(),
        BigRational::zero(),
    );
    let regge = tetra::regge_lengths(&lengths)?;
    let matrix_route_squares = EdgeLengths::new(
        &regge.a * &regge.a,
        &regge.b * &regge.b,
        &regge.c * &regge.c,
        &regge.d * &regge.d,
        squares.e.clone(),
        squares.f.clone(),
    );
    let coords = coordinates(t, &theta_c, 0.0)?;
    let shifted = okamoto_coords(&coords);
    let okamoto_route_squares = edge_length_squares_from_coords(&shifted)?;
    let two = BigRational::from_integer(2.into());
    let phi = (theta[0].clone() + &theta[1] + &theta[2] + &theta[3]) / two;
    let phi_dominates = theta.iter().all(|th| &phi >= th);
    let pass = phi_dominates && matrix_route_squares == okamoto_route_squares;
    Ok(CorrespondenceReportExact {
        matrix_route_squares,
        okamoto_route_squares,
        phi_dominates,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn generic_complex_triple() -> (MatrixTriple<Complex64>, [Complex64; 4]) {
        let a1 = Mat2::new([
            [c(0.3, 0.1), c(-0.7, 0.4)],
            [c(0.2, -0.9), c(-0.3, -0.1)],
        ]);
        let a2 = Mat2::new([
            [c(-0.5, 0.2), c(0.1, 0.3)],
            [c(0.8, 0.1), c(0.5, -0.2)],
        ]);
        let a3 = Mat2::new([
            [c(0.2, -0.3), c(0.6, -0.1)],
            [c(-0.4, 0.5), c(-0.2, 0.3)],
        ]);
        let t = MatrixTriple::new(a1, a2, a3, false);
        let theta = [
            theta_of(&t.a1),
            theta_of(&t.a2),
            theta_of(&t.a3),
            theta_of(&t.a4()),
        ];
        (t, theta)
    }

    /// Lattice tetrahedron whose four vertex distances are all integers:
    /// |v1| = 7, |v2| = 3, |v3| = 7, |v1+v2+v3| = 11.
    fn exact_fixture() -> (MatrixTriple<ExactComplex>, [BigRational; 4]) {
        let v1 = [rational(2, 1), rational(3, 1), rational(6, 1)];
        let v2 = [rational(1, 1), rational(2, 1), rational(2, 1)];
        let v3 = [rational(6, 1), rational(-3, 1), rational(-2, 1)];
        let t = MatrixTriple::from_lattice_vectors(&v1, &v2, &v3);
        let theta = [rational(7, 1), rational(3, 1), rational(7, 1), rational(11, 1)];
        (t, theta)
    }

    #[test]
    fn hat_of_diagonal_matrix() {
        let a = Mat2::new([
            [c(0.5, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(-0.5, 0.0)],
        ]);
        let h = hat(&a, &c(1.0, 0.0), 1e-12).unwrap();
        assert_eq!(h.m[0][0], c(1.0, 0.0));
        assert_eq!(h.m[1][1], c(0.0, 0.0));
        assert!(matches!(
            hat(&a, &c(2.0, 0.0), 1e-12),
            Err(FuchsError::EigenvalueMismatch)
        ));
        assert!(matches!(
            hat(&a, &c(0.0, 0.0), 1e-12),
            Err(FuchsError::DegenerateTriple)
        ));
    }

    #[test]
    fn hatted_matrices_have_rank_one() {
        let (t, theta) = generic_complex_triple();
        for (a, th) in [(&t.a1, &theta[0]), (&t.a2, &theta[1]), (&t.a3, &theta[2])] {
            for sign in [1.0, -1.0] {
                let h = hat(a, &(th * sign), 1e-10).unwrap();
                let det = h.m[0][0] * h.m[1][1] - h.m[0][1] * h.m[1][0];
                assert!(det.norm() < 1e-12, "hatted matrix must be singular");
            }
        }
    }

    #[test]
    fn lambda13_formula_examples() {
        let one = c(1.0, 0.0);
        let l = lambda13_from(&[one, one, one, c(3.0, 0.0)], &one, &one);
        assert!(l.close(&one, 1e-14));
        let z = Complex64::ZERO;
        assert!(lambda13_from(&[z, z, z, z], &z, &z).is_zero());
    }

    #[test]
    fn coordinates_of_the_orthonormal_frame() {
        let t = MatrixTriple::from_vectors([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]);
        let theta = [
            c(1.0, 0.0),
            c(1.0, 0.0),
            c(1.0, 0.0),
            c(3.0_f64.sqrt(), 0.0),
        ];
        let coords = coordinates(&t, &theta, 1e-10).unwrap();
        // e^2 = (theta1-theta2)^2 + 4 lambda12 must equal |e1+e2|^2 = 2
        assert!(coords.lambda12.close(&c(0.5, 0.0), 1e-12));
        assert!(coords.lambda23.close(&c(0.5, 0.0), 1e-12));
    }

    #[test]
    fn exact_fixture_coordinates() {
        let (t, theta) = exact_fixture();
        let theta_c = theta.clone().map(ExactComplex::from_real);
        let coords = coordinates(&t, &theta_c, 0.0).unwrap();
        assert_eq!(coords.lambda12, ExactComplex::from_real(rational(41, 2)));
        assert_eq!(coords.lambda23, ExactComplex::from_real(rational(17, 2)));
        assert_eq!(coords.lambda13, ExactComplex::from_real(rational(20, 1)));
        // tau and tau' are conjugate Gaussian rationals here
        let sum = &coords.tau + &coords.tau_prime;
        let prod = &coords.tau * &coords.tau_prime;
        assert_eq!(sum, ExactComplex::from_real(rational(116, 1)));
        assert_eq!(prod, ExactComplex::from_real(rational(3485, 1)));
    }

    #[test]
    fn reconstruction_round_trip_float() {
        let (t, theta) = generic_complex_triple();
        let coords = coordinates(&t, &theta, 1e-9).unwrap();
        let rebuilt = reconstruct(&coords, 1e-9).unwrap();
        let coords2 = coordinates(&rebuilt, &theta, 1e-9).unwrap();
        for (x, y) in five_of(&coords).iter().zip(five_of(&coords2).iter()) {
            assert!(x.close(y, 1e-10), "{x:?} vs {y:?}");
        }
    }

    #[test]
    fn reconstruction_round_trip_exact() {
        let (t, theta) = exact_fixture();
        let theta_c = theta.map(ExactComplex::from_real);
        let coords = coordinates(&t, &theta_c, 0.0).unwrap();
        let rebuilt = reconstruct(&coords, 0.0).unwrap();
        let coords2 = coordinates(&rebuilt, &theta_c, 0.0).unwrap();
        assert_eq!(coords, coords2);
    }

    #[test]
    fn reconstruction_rejects_tampered_tau() {
        let (t, theta) = generic_complex_triple();
        let mut coords = coordinates(&t, &theta, 1e-9).unwrap();
        coords.tau += c(0.25, 0.0);
        assert!(matches!(
            reconstruct(&coords, 1e-9),
            Err(FuchsError::InconsistentCoords)
        ));
    }

    #[test]
    fn reconstruction_rejects_nongeneric_gauge() {
        let z = Complex64::ZERO;
        let coords = TraceCoords {
            theta: [z, z, z, z],
            lambda12: z,
            lambda23: z,
            lambda13: z,
            tau: z,
            tau_prime: z,
        };
        assert!(matches!(
            reconstruct(&coords, 1e-9),
            Err(FuchsError::NonGeneric)
        ));
    }

    #[test]
    fn okamoto_shift_and_involution() {
        let (t, theta) = exact_fixture();
        let theta_c = theta.map(ExactComplex::from_real);
        let coords = coordinates(&t, &theta_c, 0.0).unwrap();
        let shifted = okamoto_coords(&coords);
        // phi = 14, so (7,3,7,11) -> (-7,-11,-7,-3)
        assert_eq!(shifted.theta[0], ExactComplex::from_real(rational(-7, 1)));
        assert_eq!(shifted.theta[1], ExactComplex::from_real(rational(-11, 1)));
        assert_eq!(shifted.theta[3], ExactComplex::from_real(rational(-3, 1)));
        assert_eq!(shifted.lambda12, coords.lambda12);
        assert_eq!(okamoto_coords(&shifted), coords);
    }

    #[test]
    fn lemma_invariants_on_complex_triple() {
        let (t, theta) = generic_complex_triple();
        let report = verify_lemma_invariants(&t, &theta, 1e-9).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn lemma_invariants_exact() {
        let (t, theta) = exact_fixture();
        let theta_c = theta.map(ExactComplex::from_real);
        let report = verify_lemma_invariants(&t, &theta_c, 0.0).unwrap();
        assert!(report.pass);
        assert_eq!(report.five_before, report.five_after);
        assert_eq!(report.sum_squares_before, report.sum_squares_after);
    }

    #[test]
    fn regge_correspondence_float() {
        let t = MatrixTriple::from_vectors([2.0, 3.0, 6.0], [1.0, 2.0, 2.0], [6.0, -3.0, -2.0]);
        let report = verify_regge_correspondence(&t, 1e-10).unwrap();
        assert!(report.pass, "max deviation {}", report.max_deviation);
        // theta = (7,3,7,11), p = 14: the a-edge becomes 14 - 7 = 7
        assert!((report.okamoto_route.b - 11.0).abs() < 1e-9);
    }

    #[test]
    fn regge_correspondence_exact() {
        let (t, theta) = exact_fixture();
        let report = verify_regge_correspondence_exact(&t, &theta).unwrap();
        assert!(report.phi_dominates);
        assert!(report.pass);
        assert_eq!(report.matrix_route_squares.a, rational(49, 1));
        assert_eq!(report.matrix_route_squares.b, rational(121, 1));
        assert_eq!(report.matrix_route_squares.e, rational(98, 1));
        assert_eq!(report.matrix_route_squares.f, rational(50, 1));
    }

    #[test]
    fn zero_triple_has_zero_coordinates() {
        let t = MatrixTriple::new(Mat2::zero(), Mat2::zero(), Mat2::zero(), true);
        let z = Complex64::ZERO;
        let coords = coordinates(&t, &[z, z, z, z], 1e-12).unwrap();
        assert!(five_of(&coords).iter().all(|x| x.is_zero()));
    }
}
