//! Polynomial models for the commuting GL_k / GL_3 actions on functions of a
//! k x 3 matrix of variables, and the coupling-basis construction of
//! recoupling coefficients inside them.
//!
//! The degree-(mu_1, mu_2, mu_3) component with fixed row degrees carries the
//! multiplicity space of a GL_3 weight inside a GL_k isotypic piece; its
//! highest (or lowest) weight vectors are cut out by raising (or lowering)
//! operators. The column-restricted quadratic Casimir splits that space into
//! one-dimensional eigenspaces labeled by two-row diagrams, and the Fock
//! pairing of the two eigenbases (columns 1-2 against columns 2-3) reproduces
//! recoupling coefficients up to sign. A pairing against powers of the 3 x 3
//! determinant relates the k = 3 construction to its dual with complemented
//! labels.

mod poly;

pub use poly::{det3, det3_pow, fock_inner, Monomial, MultiPoly};

use crate::exact::{BigRational, ExactError, ExactMatrix, SignedSqrtRational};
use crate::racah;
use crate::tableaux::{pieri, Partition};
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

/// Hard cap on the monomial count of one graded component; enumeration stops
/// early once it is exceeded.
pub const MONOMIAL_LIMIT: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoweError {
    #[error("graded component exceeds {MONOMIAL_LIMIT} monomials")]
    SpaceTooLarge,
    /// The Casimir left the span of the computed basis or an eigensplit did
    /// not cover the space; both indicate a broken invariant upstream.
    #[error("exact linear algebra failed: {0}")]
    Exact(#[from] ExactError),
    #[error("coupling label {0:?} has eigenspace dimension {1}, expected 1")]
    MultiplicityFailure((u32, u32), usize),
    #[error("column degrees mismatch: {0}")]
    DegreeMismatch(String),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
}

/// Which side of the GL_3 action the space is extremal for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSide {
    /// Vectors killed by the raising operators E_{i,i+1}.
    Highest,
    /// Vectors killed by the lowering operators E_{i+1,i}.
    Lowest,
}

/// Which pair of columns the mode Casimir couples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingMode {
    Cols12,
    Cols23,
}

impl CouplingMode {
    pub fn cols(self) -> &'static [usize] {
        match self {
            CouplingMode::Cols12 => &[0, 1],
            CouplingMode::Cols23 => &[1, 2],
        }
    }
}

/// All monomials of the k x 3 variable matrix with the given column degrees
/// `mu` and row degrees `rows`, sorted. Stops with `SpaceTooLarge` once the
/// count passes `MONOMIAL_LIMIT`.
fn enumerate_monomials(k: usize, mu: [u32; 3], rows: &[u32]) -> Result<Vec<Monomial>, HoweError> {
    assert_eq!(rows.len(), k);
    let mut out = Vec::new();
    if mu.iter().sum::<u32>() != rows.iter().sum::<u32>() {
        return Ok(out);
    }
    let mut row_left: Vec<u32> = rows.to_vec();
    fn go(
        k: usize,
        mu: [u32; 3],
        col: usize,
        row: usize,
        left_in_col: u32,
        m: Monomial,
        row_left: &mut [u32],
        out: &mut Vec<Monomial>,
    ) -> Result<(), HoweError> {
        if col == 3 {
            if row_left.iter().all(|&x| x == 0) {
                if out.len() == MONOMIAL_LIMIT {
                    return Err(HoweError::SpaceTooLarge);
                }
                out.push(m);
            }
            return Ok(());
        }
        if row == k - 1 {
            if left_in_col <= row_left[row] {
                row_left[row] -= left_in_col;
                let next = m.with_exp(row, col, left_in_col);
                let r = go(k, mu, col + 1, 0, mu.get(col + 1).copied().unwrap_or(0), next, row_left, out);
                row_left[row] += left_in_col;
                r?;
            }
            return Ok(());
        }
        for e in 0..=left_in_col.min(row_left[row]) {
            row_left[row] -= e;
            let next = m.with_exp(row, col, e);
            let r = go(k, mu, col, row + 1, left_in_col - e, next, row_left, out);
            row_left[row] += e;
            r?;
        }
        Ok(())
    }
    go(k, mu, 0, 0, mu[0], Monomial::one(), &mut row_left, &mut out)?;
    out.sort();
    Ok(out)
}

/// Basis of the highest (or lowest) weight vectors inside the graded
/// component with column degrees `mu` and row degrees `rows`: the joint
/// kernel of the adjacent raising (or lowering) operators. Vectors come back
/// sign-normalized with deterministic order.
pub fn multiplicity_space(
    k: usize,
    mu: [u32; 3],
    rows: &[u32],
    side: WeightSide,
) -> Result<Vec<MultiPoly>, HoweError> {
    let monomials = enumerate_monomials(k, mu, rows)?;
    if monomials.is_empty() {
        return Ok(Vec::new());
    }
    let ops: Vec<(usize, usize)> = match side {
        WeightSide::Highest => (0..k - 1).map(|i| (i, i + 1)).collect(),
        WeightSide::Lowest => (0..k - 1).map(|i| (i + 1, i)).collect(),
    };
    let n = monomials.len();
    let mut constraint_rows: Vec<Vec<BigRational>> = Vec::new();
    for &(i, j) in &ops {
        let mut tgt_index: HashMap<Monomial, usize> = HashMap::new();
        let base = constraint_rows.len();
        for (col, m) in monomials.iter().enumerate() {
            let image =
                MultiPoly::from_terms(k, [(*m, BigRational::one())]).apply_e(i, j, &[0, 1, 2]);
            for (tm, tc) in image.terms() {
                let next_row = base + tgt_index.len();
                let r = *tgt_index.entry(*tm).or_insert(next_row);
                if r == constraint_rows.len() {
                    constraint_rows.push(vec![BigRational::zero(); n]);
                }
                constraint_rows[r][col] = tc.clone();
            }
        }
    }
    let vectors = if constraint_rows.is_empty() {
        // no constraints arise (k = 1, or every operator image vanishes)
        (0..n)
            .map(|i| {
                let mut v = vec![BigRational::zero(); n];
                v[i] = BigRational::one();
                v
            })
            .collect()
    } else {
        ExactMatrix::from_rows(constraint_rows).nullspace()
    };
    Ok(vectors
        .into_iter()
        .map(|v| {
            MultiPoly::from_terms(
                k,
                monomials
                    .iter()
                    .zip(&v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (*m, c.clone())),
            )
            .normalize_sign()
        })
        .collect())
}

/// Matrix of the column-restricted Casimir on the span of `basis`, with
/// column j holding the coordinates of the image of basis vector j. Fails
/// when the image leaves the span.
pub fn casimir_matrix(basis: &[MultiPoly], cols: &[usize]) -> Result<ExactMatrix, HoweError> {
    let n = basis.len();
    assert!(n > 0, "casimir_matrix needs a nonempty basis");
    let k = basis[0].k();
    let images: Vec<MultiPoly> = basis.iter().map(|b| b.apply_casimir(cols)).collect();
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    for p in basis.iter().chain(&images) {
        assert_eq!(p.k(), k);
        for (m, _) in p.terms() {
            monos.insert(*m);
        }
    }
    let monos: Vec<Monomial> = monos.into_iter().collect();
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut b_mat = ExactMatrix::zeros(monos.len(), n);
    let mut img_mat = ExactMatrix::zeros(monos.len(), n);
    for (j, (b, im)) in basis.iter().zip(&images).enumerate() {
        for (m, c) in b.terms() {
            b_mat.set(index[m], j, c.clone());
        }
        for (m, c) in im.terms() {
            img_mat.set(index[m], j, c.clone());
        }
    }
    Ok(b_mat.solve(&img_mat)?)
}

/// The Casimir scalar of the GL_k irreducible with two-row diagram
/// (m1, m2) (k = 2) or (m1, m2, 0) (k = 3): sum of m_i^2 plus the sum of
/// positive-root differences m_i - m_j.
pub fn casimir_scalar(k: usize, diagram: (u32, u32)) -> BigRational {
    let (m1, m2) = (i64::from(diagram.0), i64::from(diagram.1));
    let v = match k {
        2 => m1 * m1 + m2 * m2 + m1 - m2,
        3 => m1 * m1 + m2 * m2 + 2 * m1,
        _ => panic!("k must be 2 or 3"),
    };
    BigRational::from_integer(v.into())
}

/// The two-row diagrams that can appear when the mode Casimir acts on the
/// multiplicity space, in deterministic order. For k = 2 these encode the
/// admissible intermediate spin labels; for k = 3 they are horizontal-strip
/// (Pieri) chains compatible with the total diagram.
fn admissible_diagrams(
    k: usize,
    mu: [u32; 3],
    rows: &[u32],
    mode: CouplingMode,
) -> Vec<(u32, u32)> {
    match k {
        2 => {
            let d = rows[0].max(rows[1]) - rows[0].min(rows[1]);
            let (coupled, labels) = match mode {
                CouplingMode::Cols12 => (
                    mu[0] + mu[1],
                    racah::admissible_e(mu[0], mu[1], mu[2], d),
                ),
                CouplingMode::Cols23 => (
                    mu[1] + mu[2],
                    racah::admissible_f(mu[0], mu[1], mu[2], d),
                ),
            };
            labels
                .into_iter()
                .map(|e| ((coupled + e) / 2, (coupled - e) / 2))
                .collect()
        }
        3 => {
            let mut sorted = rows.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let total = Partition::new([sorted[0], sorted[1], sorted[2]]);
            let (first, second, third) = match mode {
                CouplingMode::Cols12 => (mu[0], mu[1], mu[2]),
                CouplingMode::Cols23 => (mu[1], mu[2], mu[0]),
            };
            pieri(&Partition::new([first, 0, 0]), second)
                .into_iter()
                .filter(|two| pieri(two, third).contains(&total))
                .map(|two| (two.0[0], two.0[1]))
                .collect()
        }
        _ => panic!("k must be 2 or 3"),
    }
}

/// One vector of a coupling eigenbasis: the diagram labeling the mode-Casimir
/// eigenvalue, the sign-normalized polynomial, and its squared Fock norm.
#[derive(Debug, Clone)]
pub struct CouplingVector {
    pub diagram: (u32, u32),
    pub poly: MultiPoly,
    pub norm_sq: BigRational,
}

impl CouplingVector {
    /// The intermediate twice-spin label m1 - m2 (k = 2 diagrams).
    pub fn spin_label(&self) -> u32 {
        self.diagram.0 - self.diagram.1
    }
}

/// Splits the multiplicity space into the one-dimensional eigenspaces of the
/// mode Casimir and returns the labeled eigenvectors, ordered as the
/// admissible diagrams.
pub fn coupling_basis(
    k: usize,
    mu: [u32; 3],
    rows: &[u32],
    side: WeightSide,
    mode: CouplingMode,
) -> Result<Vec<CouplingVector>, HoweError> {
    let basis = multiplicity_space(k, mu, rows, side)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let diagrams = admissible_diagrams(k, mu, rows, mode);
    let values: Vec<BigRational> = diagrams.iter().map(|&d| casimir_scalar(k, d)).collect();
    let cas = casimir_matrix(&basis, mode.cols())?;
    let split = cas.eigensplit(&values)?;
    let mut out = Vec::new();
    for (value, vectors) in split {
        let pos = values
            .iter()
            .position(|v| v == &value)
            .expect("eigensplit returns candidate values");
        if vectors.len() != 1 {
            return Err(HoweError::MultiplicityFailure(diagrams[pos], vectors.len()));
        }
        let mut poly = MultiPoly::zero(k);
        for (coef, b) in vectors[0].iter().zip(&basis) {
            if !coef.is_zero() {
                poly = poly.add(&b.scale(coef));
            }
        }
        let poly = poly.normalize_sign();
        let norm_sq = fock_inner(&poly, &poly);
        out.push(CouplingVector {
            diagram: diagrams[pos],
            poly,
            norm_sq,
        });
    }
    Ok(out)
}

/// The Fock pairing of two coupling vectors scaled to unit norm.
fn normalized_pairing(v: &CouplingVector, w: &CouplingVector) -> SignedSqrtRational {
    let ip = fock_inner(&v.poly, &w.poly);
    let scale = BigRational::one() / (&v.norm_sq * &w.norm_sq);
    SignedSqrtRational::from_rational(&ip).mul(&SignedSqrtRational::sqrt_of(&scale))
}

/// Recoupling matrix computed inside the k = 2 polynomial model: the Fock
/// pairing of the columns-12 eigenbasis against the columns-23 eigenbasis.
/// Entries match the Racah recoupling coefficients up to sign.
#[derive(Debug, Clone, Default)]
pub struct OracleMatrix {
    pub e_labels: Vec<u32>,
    pub f_labels: Vec<u32>,
    pub entries: Vec<Vec<SignedSqrtRational>>,
}

/// The k = 2 oracle for (a, b, c, d): couples column degrees (a, b, c) with
/// row degrees (p, p-d), p = (a+b+c+d)/2. Returns an empty matrix when no
/// intermediate label is admissible (odd perimeter or d > a+b+c).
pub fn u_oracle(a: u32, b: u32, c: u32, d: u32) -> Result<OracleMatrix, HoweError> {
    if (a + b + c + d) % 2 != 0 || a + b + c < d {
        return Ok(OracleMatrix::default());
    }
    let p = (a + b + c + d) / 2;
    let rows = [p, p - d];
    let mu = [a, b, c];
    let ve = coupling_basis(2, mu, &rows, WeightSide::Highest, CouplingMode::Cols12)?;
    let wf = coupling_basis(2, mu, &rows, WeightSide::Highest, CouplingMode::Cols23)?;
    let entries = ve
        .iter()
        .map(|v| wf.iter().map(|w| normalized_pairing(v, w)).collect())
        .collect();
    Ok(OracleMatrix {
        e_labels: ve.iter().map(CouplingVector::spin_label).collect(),
        f_labels: wf.iter().map(CouplingVector::spin_label).collect(),
        entries,
    })
}

/// Recoupling matrix computed inside the k = 3 polynomial model, with two-row
/// diagram labels on both sides.
#[derive(Debug, Clone, Default)]
pub struct U3OracleMatrix {
    pub rs_labels: Vec<(u32, u32)>,
    pub tu_labels: Vec<(u32, u32)>,
    pub entries: Vec<Vec<SignedSqrtRational>>,
}

/// The k = 3 oracle: couples column degrees (a, b, c) inside the highest
/// weight space of weight (p, q, 0). Empty when a+b+c != p+q.
pub fn u3_oracle(a: u32, b: u32, c: u32, p: u32, q: u32) -> Result<U3OracleMatrix, HoweError> {
    if q > p {
        return Err(HoweError::InvalidLabels(format!(
            "({p}, {q}) is not a partition"
        )));
    }
    if a + b + c != p + q {
        return Ok(U3OracleMatrix::default());
    }
    let rows = [p, q, 0];
    let mu = [a, b, c];
    let v = coupling_basis(3, mu, &rows, WeightSide::Highest, CouplingMode::Cols12)?;
    let w = coupling_basis(3, mu, &rows, WeightSide::Highest, CouplingMode::Cols23)?;
    let entries = v
        .iter()
        .map(|x| w.iter().map(|y| normalized_pairing(x, y)).collect())
        .collect();
    Ok(U3OracleMatrix {
        rs_labels: v.iter().map(|x| x.diagram).collect(),
        tu_labels: w.iter().map(|x| x.diagram).collect(),
        entries,
    })
}

/// The duality pairing of two k = 3 polynomials whose product has all column
/// degrees p: the Fock pairing of the product against det^p, normalized by
/// the squared norm of det^p.
pub fn duality_pairing(f: &MultiPoly, g: &MultiPoly, p: u32) -> Result<BigRational, HoweError> {
    if f.k() != 3 || g.k() != 3 {
        return Err(HoweError::InvalidLabels(
            "duality pairing needs k = 3 polynomials".into(),
        ));
    }
    let h = f.mul(g);
    if h.is_zero() {
        return Ok(BigRational::zero());
    }
    for (m, _) in h.terms() {
        for col in 0..3 {
            let deg = m.col_degree(3, col);
            if deg != p {
                return Err(HoweError::DegreeMismatch(format!(
                    "column {col} of the product has degree {deg}, expected {p}"
                )));
            }
        }
    }
    let dp = det3_pow(p);
    Ok(fock_inner(&h, &dp) / fock_inner(&dp, &dp))
}

/// Result of pairing the highest-weight coupling basis for (a, b, c; p, q)
/// against the lowest-weight coupling basis of the complementary data
/// (p-a, p-b, p-c; row degrees (0, p-q, p)) under the duality pairing.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub rs_labels: Vec<(u32, u32)>,
    pub dual_labels: Vec<(u32, u32)>,
    pub pairings: Vec<Vec<BigRational>>,
    /// True when the pairing is nonzero exactly on the diagonal given by
    /// (r, s) on one side and (p-s, p-r) on the other.
    pub diagonal_ok: bool,
}

/// Builds both coupling bases and checks that the duality pairing is
/// diagonal under the label correspondence (r, s) <-> (p-s, p-r).
pub fn check_duality_bases(
    a: u32,
    b: u32,
    c: u32,
    p: u32,
    q: u32,
) -> Result<DualityReport, HoweError> {
    if q > p || a.max(b).max(c) > p {
        return Err(HoweError::InvalidLabels(format!(
            "need mu <= p and q <= p, got mu = ({a}, {b}, {c}), lambda = ({p}, {q})"
        )));
    }
    if a + b + c != p + q {
        return Err(HoweError::InvalidLabels(format!(
            "need a+b+c = p+q, got {} vs {}",
            a + b + c,
            p + q
        )));
    }
    let hw = coupling_basis(3, [a, b, c], &[p, q, 0], WeightSide::Highest, CouplingMode::Cols12)?;
    let lw = coupling_basis(
        3,
        [p - a, p - b, p - c],
        &[0, p - q, p],
        WeightSide::Lowest,
        CouplingMode::Cols12,
    )?;
    let mut pairings = Vec::with_capacity(hw.len());
    for v in &hw {
        let mut row = Vec::with_capacity(lw.len());
        for w in &lw {
            row.push(duality_pairing(&v.poly, &w.poly, p)?);
        }
        pairings.push(row);
    }
    let mut diagonal_ok = hw.len() == lw.len();
    for (i, v) in hw.iter().enumerate() {
        for (j, w) in lw.iter().enumerate() {
            let expect_nonzero = w.diagram == (p - v.diagram.1, p - v.diagram.0);
            if pairings[i][j].is_zero() == expect_nonzero {
                diagonal_ok = false;
            }
        }
    }
    Ok(DualityReport {
        rs_labels: hw.iter().map(|v| v.diagram).collect(),
        dual_labels: lw.iter().map(|w| w.diagram).collect(),
        pairings,
        diagonal_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    #[test]
    fn multiplicity_space_of_single_box() {
        let space = multiplicity_space(2, [1, 0, 0], &[1, 0], WeightSide::Highest).unwrap();
        assert_eq!(space.len(), 1);
        assert_eq!(space[0], MultiPoly::variable(2, 0, 0));
    }

    #[test]
    fn multiplicity_space_dimension_counts_intermediate_labels() {
        // (a,b,c,d) = (1,1,1,1): p = 2, rows (2,1); e runs over {0, 2}
        let space = multiplicity_space(2, [1, 1, 1], &[2, 1], WeightSide::Highest).unwrap();
        assert_eq!(space.len(), 2);
        // highest weight vectors are killed by E_{01} over all columns
        for v in &space {
            assert!(v.apply_e(0, 1, &[0, 1, 2]).is_zero());
        }
    }

    #[test]
    fn casimir_eigenvalues_on_spin_half_block() {
        let space = multiplicity_space(2, [1, 1, 1], &[2, 1], WeightSide::Highest).unwrap();
        let cas = casimir_matrix(&space, &[0, 1]).unwrap();
        // diagrams (1,1) and (2,0): scalars 2 and 6
        let split = cas.eigensplit(&[integer(2), integer(6)]).unwrap();
        assert_eq!(split.len(), 2);
        assert_eq!(split[0].1.len(), 1);
        assert_eq!(split[1].1.len(), 1);
    }

    #[test]
    fn coupling_basis_is_fock_orthogonal() {
        let basis = coupling_basis(2, [2, 2, 2], &[4, 2], WeightSide::Highest, CouplingMode::Cols12)
            .unwrap();
        assert_eq!(basis.len(), 3); // e in {0, 2, 4}
        assert_eq!(
            basis.iter().map(CouplingVector::spin_label).collect::<Vec<_>>(),
            vec![0, 2, 4]
        );
        for (i, v) in basis.iter().enumerate() {
            assert!(v.norm_sq > BigRational::zero());
            for w in &basis[i + 1..] {
                assert!(fock_inner(&v.poly, &w.poly).is_zero());
            }
        }
    }

    #[test]
    fn u_oracle_trivial_case() {
        let m = u_oracle(0, 0, 0, 0).unwrap();
        assert_eq!(m.e_labels, vec![0]);
        assert_eq!(m.f_labels, vec![0]);
        assert_eq!(m.entries[0][0], SignedSqrtRational::one());
    }

    #[test]
    fn u3_oracle_trivial_case() {
        let m = u3_oracle(0, 0, 0, 0, 0).unwrap();
        assert_eq!(m.rs_labels, vec![(0, 0)]);
        assert_eq!(m.tu_labels, vec![(0, 0)]);
        assert_eq!(m.entries[0][0], SignedSqrtRational::one());
    }

    #[test]
    fn u_oracle_rows_are_orthonormal() {
        // coupling bases of the same space: the pairing matrix is orthogonal
        let m = u_oracle(1, 1, 1, 1).unwrap();
        assert_eq!(m.e_labels, vec![0, 2]);
        assert_eq!(m.f_labels, vec![0, 2]);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = SignedSqrtRational::zero();
                for l in 0..2 {
                    acc = acc
                        .checked_add(&m.entries[i][l].mul(&m.entries[j][l]))
                        .unwrap();
                }
                let expected = if i == j {
                    SignedSqrtRational::one()
                } else {
                    SignedSqrtRational::zero()
                };
                assert_eq!(acc, expected);
            }
        }
    }

    #[test]
    fn duality_pairing_of_variable_and_cofactor() {
        let f = MultiPoly::variable(3, 0, 0);
        // the cofactor of x_{00} in det: x_{11} x_{22} - x_{12} x_{21}
        let g = MultiPoly::variable(3, 1, 1)
            .mul(&MultiPoly::variable(3, 2, 2))
            .sub(&MultiPoly::variable(3, 1, 2).mul(&MultiPoly::variable(3, 2, 1)));
        assert_eq!(duality_pairing(&f, &g, 1).unwrap(), rational(1, 3));
    }

    #[test]
    fn duality_pairing_rejects_degree_mismatch() {
        let f = MultiPoly::variable(3, 0, 0);
        let g = MultiPoly::variable(3, 1, 1);
        assert!(matches!(
            duality_pairing(&f, &g, 1),
            Err(HoweError::DegreeMismatch(_))
        ));
    }

    #[test]
    fn duality_bases_pair_diagonally_in_smallest_case() {
        let report = check_duality_bases(1, 1, 0, 1, 1).unwrap();
        assert_eq!(report.rs_labels, vec![(1, 1)]);
        assert_eq!(report.dual_labels, vec![(0, 0)]);
        assert!(report.diagonal_ok);
        // sign normalization puts +1 on x_{01}x_{10}, so the minor pairs to -1/3
        assert_eq!(report.pairings[0][0], rational(-1, 3));
    }

    #[test]
    fn monomial_limit_guards_enumeration() {
        let err = multiplicity_space(3, [100, 100, 100], &[100, 100, 100], WeightSide::Highest);
        assert_eq!(err.unwrap_err(), HoweError::SpaceTooLarge);
    }

    #[test]
    fn lowest_weight_space_matches_dual_dimension() {
        // the dual of mu = (1,1,0), lambda = (1,1,0) is mu' = (0,0,1) with
        // row degrees (0, 0, 1); both multiplicity spaces are lines
        let hw = multiplicity_space(3, [1, 1, 0], &[1, 1, 0], WeightSide::Highest).unwrap();
        let lw = multiplicity_space(3, [0, 0, 1], &[0, 0, 1], WeightSide::Lowest).unwrap();
        assert_eq!(hw.len(), lw.len());
        assert_eq!(hw.len(), 1);
    }
}
