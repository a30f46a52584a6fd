//! Tetrahedron geometry on both sides of the sphere: edge lengths through the
//! embedding of R^3 into traceless Hermitian 2x2 matrices, the Cayley-Menger
//! determinant, the Regge action on edge lengths, realization of a tetrahedron
//! from its lengths, and a Gram-matrix realizability test for spherical
//! tetrahedra built from SU(2) elements.
//!
//! Edge slots follow the 6j layout: a, b, c are the lengths of the generating
//! vectors, d the length of their sum, e of the first partial sum, f of the
//! second, so the four faces carry lengths (a,b,e), (c,d,e), (a,d,f), (b,c,f).

use crate::exact::{BigRational, ExactComplex};
use nalgebra::{Matrix3, Matrix4};
use num_complex::Complex64;
use num_traits::{Num, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TetraError {
    /// The Regge image of the given lengths leaves the nonnegative range.
    #[error("Regge image has a negative edge length")]
    NegativeLength,
    /// The lengths do not bound a nondegenerate Euclidean tetrahedron.
    #[error("lengths are not realizable as a Euclidean tetrahedron")]
    NotRealizable,
}

/// Six edge lengths of a (possibly skew) tetrahedron. No validity is imposed
/// at construction; predicates below decide realizability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLengths<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub e: T,
    pub f: T,
}

impl<T> EdgeLengths<T> {
    pub fn new(a: T, b: T, c: T, d: T, e: T, f: T) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn as_array(&self) -> [&T; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    pub fn map<U>(&self, mut op: impl FnMut(&T) -> U) -> EdgeLengths<U> {
        EdgeLengths {
            a: op(&self.a),
            b: op(&self.b),
            c: op(&self.c),
            d: op(&self.d),
            e: op(&self.e),
            f: op(&self.f),
        }
    }
}

impl<T: Clone + std::ops::Mul<Output = T>> EdgeLengths<T> {
    /// Entrywise squares, the natural datum for the exact code path.
    pub fn squares(&self) -> EdgeLengths<T> {
        self.map(|x| x.clone() * x.clone())
    }
}

/// A traceless Hermitian 2x2 matrix. The real inner product is
/// 2 Tr(A B), under which `phi_embed` is an isometry from R^3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Herm2 {
    pub m: [[Complex64; 2]; 2],
}

impl Herm2 {
    /// Entries must already be Hermitian and traceless; this is checked in
    /// debug builds only.
    pub fn new(m: [[Complex64; 2]; 2]) -> Self {
        debug_assert!((m[0][0] + m[1][1]).norm() < 1e-9, "trace must vanish");
        debug_assert!((m[0][1] - m[1][0].conj()).norm() < 1e-9, "must be Hermitian");
        Self { m }
    }

    pub fn zero() -> Self {
        Self {
            m: [[Complex64::ZERO; 2]; 2],
        }
    }

    pub fn add(&self, other: &Herm2) -> Herm2 {
        let mut m = [[Complex64::ZERO; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.m[i][j] + other.m[i][j];
            }
        }
        Herm2 { m }
    }

    /// 2 Tr(self * other). Real for Hermitian arguments; the imaginary part
    /// is discarded.
    pub fn inner(&self, other: &Herm2) -> f64 {
        let mut tr = Complex64::ZERO;
        for i in 0..2 {
            for k in 0..2 {
                tr += self.m[i][k] * other.m[k][i];
            }
        }
        2.0 * tr.re
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).max(0.0).sqrt()
    }
}

/// The isometry (x, y, z) -> (1/2) [[x, y+iz], [y-iz, -x]] from Euclidean
/// R^3 onto traceless Hermitian matrices with the 2 Tr(A B) inner product.
pub fn phi_embed(v: [f64; 3]) -> Herm2 {
    let [x, y, z] = v;
    Herm2::new([
        [
            Complex64::new(x / 2.0, 0.0),
            Complex64::new(y / 2.0, z / 2.0),
        ],
        [
            Complex64::new(y / 2.0, -z / 2.0),
            Complex64::new(-x / 2.0, 0.0),
        ],
    ])
}

/// Exact-rational image of `phi_embed`, for lattice vectors.
pub fn phi_embed_exact(v: &[BigRational; 3]) -> [[ExactComplex; 2]; 2] {
    let half = BigRational::new(1.into(), 2.into());
    let x2 = &v[0] * &half;
    let y2 = &v[1] * &half;
    let z2 = &v[2] * &half;
    [
        [
            ExactComplex::from_real(x2.clone()),
            ExactComplex::new(y2.clone(), z2.clone()),
        ],
        [ExactComplex::new(y2, -z2), ExactComplex::from_real(-x2)],
    ]
}

/// Exact counterpart of `Herm2::inner` on 2x2 exact-complex matrices:
/// the rational number 2 Tr(A B). The imaginary part of the trace cancels
/// for Hermitian arguments; it is asserted to vanish.
pub fn inner_exact(a: &[[ExactComplex; 2]; 2], b: &[[ExactComplex; 2]; 2]) -> BigRational {
    let mut tr = ExactComplex::zero();
    for i in 0..2 {
        for k in 0..2 {
            tr = &tr + &(&a[i][k] * &b[k][i]);
        }
    }
    assert!(tr.im.is_zero(), "inner product of Hermitian matrices is real");
    tr.re * BigRational::from_integer(2.into())
}

/// Edge lengths of the tetrahedron spanned by three embedded vectors:
/// norms of A1, A2, A3, A1+A2+A3, A1+A2, A2+A3 in the slots a..f.
pub fn edge_lengths(a1: &Herm2, a2: &Herm2, a3: &Herm2) -> EdgeLengths<f64> {
    let a12 = a1.add(a2);
    let a23 = a2.add(a3);
    let a123 = a12.add(a3);
    EdgeLengths::new(
        a1.norm(),
        a2.norm(),
        a3.norm(),
        a123.norm(),
        a12.norm(),
        a23.norm(),
    )
}

/// Squared edge lengths of an exact-complex Hermitian triple, same slot
/// order as `edge_lengths`. Squares stay rational even when the lengths
/// themselves are irrational.
pub fn edge_length_squares_exact(
    a1: &[[ExactComplex; 2]; 2],
    a2: &[[ExactComplex; 2]; 2],
    a3: &[[ExactComplex; 2]; 2],
) -> EdgeLengths<BigRational> {
    let add = |x: &[[ExactComplex; 2]; 2], y: &[[ExactComplex; 2]; 2]| {
        let mut m = [
            [ExactComplex::zero(), ExactComplex::zero()],
            [ExactComplex::zero(), ExactComplex::zero()],
        ];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = &x[i][j] + &y[i][j];
            }
        }
        m
    };
    let a12 = add(a1, a2);
    let a23 = add(a2, a3);
    let a123 = add(&a12, a3);
    EdgeLengths::new(
        inner_exact(a1, a1),
        inner_exact(a2, a2),
        inner_exact(a3, a3),
        inner_exact(&a123, &a123),
        inner_exact(&a12, &a12),
        inner_exact(&a23, &a23),
    )
}

fn det_n<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
{
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = T::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(jj, _)| *jj != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].clone() * det_n(&minor);
        if j % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// Determinant of the bordered 5x5 matrix of squared lengths
///
/// ```text
/// | 0    a^2  e^2  d^2  1 |
/// | a^2  0    b^2  f^2  1 |
/// | e^2  b^2  0    c^2  1 |
/// | d^2  f^2  c^2  0    1 |
/// | 1    1    1    1    0 |
/// ```
///
/// equal to 288 V^2 for a genuine tetrahedron of volume V; its positivity
/// together with the face triangle inequalities characterizes Euclidean
/// realizability. Input is the squared lengths.
pub fn cayley_menger_det_sq<T>(sq: &EdgeLengths<T>) -> T
where
    T: Clone + Num,
{
    let z = T::zero;
    let one = T::one;
    let q = sq.clone();
    let m: Vec<Vec<T>> = vec![
        vec![z(), q.a.clone(), q.e.clone(), q.d.clone(), one()],
        vec![q.a, z(), q.b.clone(), q.f.clone(), one()],
        vec![q.e, q.b, z(), q.c.clone(), one()],
        vec![q.d, q.f, q.c, z(), one()],
        vec![one(), one(), one(), one(), z()],
    ];
    det_n(&m)
}

/// `cayley_menger_det_sq` of the entrywise squares of the given lengths.
pub fn cayley_menger_det<T>(l: &EdgeLengths<T>) -> T
where
    T: Clone + Num,
{
    cayley_menger_det_sq(&l.squares())
}

/// The Regge transformation on edge lengths:
/// (a,b,c,d,e,f) -> (p-a, p-b, p-c, p-d, e, f) with p = (a+b+c+d)/2.
pub fn regge_lengths<T>(l: &EdgeLengths<T>) -> Result<EdgeLengths<T>, TetraError>
where
    T: Clone + Num + PartialOrd,
{
    let two = T::one() + T::one();
    let p = (l.a.clone() + l.b.clone() + l.c.clone() + l.d.clone()) / two;
    let out = EdgeLengths::new(
        p.clone() - l.a.clone(),
        p.clone() - l.b.clone(),
        p.clone() - l.c.clone(),
        p - l.d.clone(),
        l.e.clone(),
        l.f.clone(),
    );
    for x in out.as_array() {
        if *x < T::zero() {
            return Err(TetraError::NegativeLength);
        }
    }
    Ok(out)
}

fn face_ok<T>(x: &T, y: &T, z: &T) -> bool
where
    T: Clone + Num + PartialOrd,
{
    z.clone() <= x.clone() + y.clone()
        && x.clone() <= y.clone() + z.clone()
        && y.clone() <= x.clone() + z.clone()
}

/// Whether the lengths bound a nondegenerate Euclidean tetrahedron: the four
/// face triangle inequalities and a positive Cayley-Menger determinant.
pub fn is_euclidean_tetra<T>(l: &EdgeLengths<T>) -> bool
where
    T: Clone + Num + PartialOrd,
{
    let faces = [
        [&l.a, &l.b, &l.e],
        [&l.c, &l.d, &l.e],
        [&l.a, &l.d, &l.f],
        [&l.b, &l.c, &l.f],
    ];
    faces.iter().all(|t| face_ok(t[0], t[1], t[2])) && cayley_menger_det(l) > T::zero()
}

/// Three vectors in R^3 realizing the given lengths, from the Cholesky factor
/// of the Gram matrix
///
/// ```text
/// <a1,a2> = (e^2 - a^2 - b^2)/2
/// <a2,a3> = (f^2 - b^2 - c^2)/2
/// <a1,a3> = (d^2 + b^2 - e^2 - f^2)/2
/// ```
///
/// The first vector lies along the first axis and the frame is positively
/// oriented, so the output is deterministic.
pub fn realize_from_lengths(l: &EdgeLengths<f64>) -> Result<[[f64; 3]; 3], TetraError> {
    if !is_euclidean_tetra(l) {
        return Err(TetraError::NotRealizable);
    }
    let sq = l.squares();
    let g12 = (sq.e - sq.a - sq.b) / 2.0;
    let g23 = (sq.f - sq.b - sq.c) / 2.0;
    let g13 = (sq.d + sq.b - sq.e - sq.f) / 2.0;
    let gram = Matrix3::new(sq.a, g12, g13, g12, sq.b, g23, g13, g23, sq.c);
    let chol = gram.cholesky().ok_or(TetraError::NotRealizable)?;
    let low = chol.l();
    let mut vecs = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            vecs[i][j] = low[(i, j)];
        }
    }
    Ok(vecs)
}

/// A special unitary 2x2 matrix, the vertex group of spherical tetrahedra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2 {
    pub m: [[Complex64; 2]; 2],
}

impl Su2 {
    pub fn identity() -> Self {
        Self {
            m: [
                [Complex64::ONE, Complex64::ZERO],
                [Complex64::ZERO, Complex64::ONE],
            ],
        }
    }

    /// The SU(2) element of a unit quaternion (w, x, y, z); the input is
    /// normalized, so any nonzero 4-vector is accepted.
    pub fn from_quaternion(w: f64, x: f64, y: f64, z: f64) -> Self {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        assert!(n > 0.0, "quaternion must be nonzero");
        let (w, x, y, z) = (w / n, x / n, y / n, z / n);
        Self {
            m: [
                [Complex64::new(w, x), Complex64::new(y, z)],
                [Complex64::new(-y, z), Complex64::new(w, -x)],
            ],
        }
    }

    pub fn mul(&self, other: &Su2) -> Su2 {
        let mut m = [[Complex64::ZERO; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                for k in 0..2 {
                    *entry += self.m[i][k] * other.m[k][j];
                }
            }
        }
        Su2 { m }
    }

    /// Conjugate transpose, the group inverse.
    pub fn inverse(&self) -> Su2 {
        Su2 {
            m: [
                [self.m[0][0].conj(), self.m[1][0].conj()],
                [self.m[0][1].conj(), self.m[1][1].conj()],
            ],
        }
    }

    /// The trace, real on SU(2).
    pub fn trace_re(&self) -> f64 {
        (self.m[0][0] + self.m[1][1]).re
    }
}

/// The geodesic length attached to a group element: l with
/// Tr M = 2 cos(l), taken in [0, pi].
fn su2_length(m: &Su2) -> f64 {
    (m.trace_re() / 2.0).clamp(-1.0, 1.0).acos()
}

/// Spherical edge lengths of the tetrahedron with vertices
/// I, M1, M1 M2, M1 M2 M3: lengths of M1, M2, M3, (M1 M2 M3)^(-1),
/// M1 M2, M2 M3 in the slots a..f.
pub fn spherical_lengths(m1: &Su2, m2: &Su2, m3: &Su2) -> EdgeLengths<f64> {
    let m12 = m1.mul(m2);
    let m23 = m2.mul(m3);
    let m123 = m12.mul(m3);
    EdgeLengths::new(
        su2_length(m1),
        su2_length(m2),
        su2_length(m3),
        su2_length(&m123.inverse()),
        su2_length(&m12),
        su2_length(&m23),
    )
}

/// Whether four points on the 3-sphere can have the given pairwise geodesic
/// distances: positive semidefiniteness of the 4x4 matrix of cosines, with
/// the same slot pattern as the Cayley-Menger matrix. Eigenvalues are allowed
/// to dip to -margin to absorb roundoff.
pub fn spherical_realizable(l: &EdgeLengths<f64>, margin: f64) -> bool {
    let c = l.map(|x| x.cos());
    let gram = Matrix4::new(
        1.0, c.a, c.e, c.d, //
        c.a, 1.0, c.b, c.f, //
        c.e, c.b, 1.0, c.c, //
        c.d, c.f, c.c, 1.0,
    );
    let eigen = gram.symmetric_eigen();
    eigen.eigenvalues.iter().all(|&ev| ev >= -margin)
}
