use super::ExactError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A dense matrix of big rationals with exact elimination. Row reduction runs
/// fraction-free over integers (Bareiss one-step updates) after clearing
/// denominators per row, so no intermediate gcd work on rationals is needed;
/// back substitution returns to rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "all rows must have equal length"
        );
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Clears denominators row by row, returning integer rows.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = lcm.lcm(self.at(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let v = self.at(i, j);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect()
    }

    /// Fraction-free row echelon form. Pivots are only chosen among the first
    /// `pivot_limit` columns; later columns ride along (used for augmented
    /// systems). Returns the echelon rows and the pivot column per pivot row.
    fn integer_echelon(mut m: Vec<Vec<BigInt>>, pivot_limit: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..pivot_limit.min(cols) {
            if r == rows {
                break;
            }
            // smallest-magnitude pivot slows coefficient growth
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m[i][c].is_zero()
                    && best.is_none_or(|b| m[i][c].magnitude() < m[b][c].magnitude())
                {
                    best = Some(i);
                }
            }
            let Some(p) = best else { continue };
            m.swap(r, p);
            let (pivot_row, lower) = {
                let (head, tail) = m.split_at_mut(r + 1);
                (&head[r], tail)
            };
            let pivot = pivot_row[c].clone();
            for row in lower.iter_mut() {
                let factor = std::mem::replace(&mut row[c], BigInt::zero());
                for j in (c + 1)..cols {
                    let num = &row[j] * &pivot - &factor * &pivot_row[j];
                    // Bareiss: the previous pivot divides every update exactly
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free update must divide exactly");
                    row[j] = q;
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = Self::integer_echelon(self.integer_rows(), self.cols);
        pivots.len()
    }

    /// A basis of the right nullspace. Each vector is normalized so that its
    /// first nonzero coordinate is +1; vectors are ordered by free column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (ech, pivots) = Self::integer_echelon(self.integer_rows(), self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![BigRational::zero(); self.cols];
            x[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate().rev() {
                let mut s = BigRational::zero();
                for j in (pc + 1)..self.cols {
                    if !ech[row][j].is_zero() && !x[j].is_zero() {
                        s += BigRational::from(ech[row][j].clone()) * &x[j];
                    }
                }
                x[pc] = -s / BigRational::from(ech[row][pc].clone());
            }
            normalize_leading(&mut x);
            basis.push(x);
        }
        basis
    }

    /// Solves `self * X = rhs` exactly. Requires full column rank (else
    /// `SingularSystem`); fails with `InconsistentSystem` when `rhs` is not in
    /// the column span.
    pub fn solve(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.rows != rhs.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "lhs has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.at(i, j).clone());
            }
        }
        let (ech, pivots) = Self::integer_echelon(aug.integer_rows(), self.cols);
        if pivots.len() < self.cols {
            return Err(ExactError::SingularSystem);
        }
        // rows below the pivots must vanish on the rhs part too
        for row in ech.iter().skip(pivots.len()) {
            if row[self.cols..].iter().any(|v| !v.is_zero()) {
                return Err(ExactError::InconsistentSystem);
            }
        }
        let mut out = Self::zeros(self.cols, rhs.cols);
        for col in 0..rhs.cols {
            for (row, &pc) in pivots.iter().enumerate().rev() {
                let mut s = BigRational::from(ech[row][self.cols + col].clone());
                for j in (pc + 1)..self.cols {
                    if !ech[row][j].is_zero() {
                        s -= BigRational::from(ech[row][j].clone()) * out.at(j, col);
                    }
                }
                out.set(pc, col, s / BigRational::from(ech[row][pc].clone()));
            }
        }
        Ok(out)
    }

    /// Splits the space into eigenspaces of `self` for the given candidate
    /// eigenvalues (which must be pairwise distinct). Returns the candidates
    /// with nonzero eigenspace, in input order, with nullspace-normalized
    /// bases. Fails with `SpanFailure` when the eigenspaces found do not add
    /// up to the full dimension.
    pub fn eigensplit(
        &self,
        candidates: &[BigRational],
    ) -> Result<Vec<(BigRational, Vec<Vec<BigRational>>)>, ExactError> {
        assert_eq!(self.rows, self.cols, "eigensplit needs a square matrix");
        debug_assert!(
            (0..candidates.len()).all(|i| !candidates[i + 1..].contains(&candidates[i])),
            "candidate eigenvalues must be distinct"
        );
        let mut out = Vec::new();
        let mut found = 0;
        for c in candidates {
            let mut shifted = self.clone();
            for i in 0..self.rows {
                let v = shifted.at(i, i) - c;
                shifted.set(i, i, v);
            }
            let basis = shifted.nullspace();
            if !basis.is_empty() {
                found += basis.len();
                out.push((c.clone(), basis));
            }
        }
        if found != self.rows {
            return Err(ExactError::SpanFailure {
                found,
                dim: self.rows,
            });
        }
        Ok(out)
    }
}

/// Rescales so the first nonzero coordinate becomes +1.
fn normalize_leading(x: &mut [BigRational]) {
    let Some(first) = x.iter().find(|v| !v.is_zero()).cloned() else {
        return;
    };
    for v in x.iter_mut() {
        if !v.is_zero() {
            *v /= &first;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(integer).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_sum_constraint() {
        let basis = m(vec![vec![1, 1]]).nullspace();
        assert_eq!(basis, vec![vec![integer(1), integer(-1)]]);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let a = m(vec![vec![2, 4, -2, 0], vec![1, 2, 0, 3], vec![3, 6, -2, 3]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..a.rows() {
                let s: BigRational = (0..a.cols()).map(|j| a.at(i, j) * &v[j]).sum();
                assert!(s.is_zero());
            }
            let first = v.iter().find(|c| !c.is_zero()).unwrap();
            assert_eq!(first, &integer(1));
        }
    }

    #[test]
    fn rank_counts_pivots() {
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(vec![vec![1, 2], vec![2, 5]]).rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn solve_unique_system() {
        let a = m(vec![vec![2, 1], vec![1, 3]]);
        let b = m(vec![vec![5], vec![10]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x.at(0, 0), &integer(1));
        assert_eq!(x.at(1, 0), &integer(3));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(vec![vec![1, 1], vec![2, 2], vec![0, 1]]);
        let b = m(vec![vec![1], vec![3], vec![0]]);
        assert_eq!(a.solve(&b), Err(ExactError::InconsistentSystem));
    }

    #[test]
    fn solve_detects_rank_deficiency() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let b = m(vec![vec![1], vec![2]]);
        assert_eq!(a.solve(&b), Err(ExactError::SingularSystem));
    }

    #[test]
    fn solve_with_rational_entries() {
        let a = ExactMatrix::from_rows(vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(1, 4), rational(1, 5)],
        ]);
        let b = ExactMatrix::from_rows(vec![vec![rational(5, 6)], vec![rational(9, 20)]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x.at(0, 0), &integer(1));
        assert_eq!(x.at(1, 0), &integer(1));
    }

    #[test]
    fn eigensplit_of_swap_matrix() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        let split = a.eigensplit(&[integer(1), integer(-1)]).unwrap();
        assert_eq!(split.len(), 2);
        assert_eq!(split[0].0, integer(1));
        assert_eq!(split[0].1, vec![vec![integer(1), integer(1)]]);
        assert_eq!(split[1].0, integer(-1));
        assert_eq!(split[1].1, vec![vec![integer(1), integer(-1)]]);
    }

    #[test]
    fn eigensplit_reports_missing_dimensions() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        let err = a.eigensplit(&[integer(1)]).unwrap_err();
        assert_eq!(err, ExactError::SpanFailure { found: 1, dim: 2 });
    }

    #[test]
    fn eigensplit_skips_absent_candidates() {
        let a = m(vec![vec![3, 0], vec![0, 3]]);
        let split = a.eigensplit(&[integer(2), integer(3)]).unwrap();
        assert_eq!(split.len(), 1);
        assert_eq!(split[0].0, integer(3));
        assert_eq!(split[0].1.len(), 2);
    }

    #[test]
    fn mul_matches_hand_product() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![5, 6], vec![7, 8]]);
        let p = a.mul(&b);
        assert_eq!(p, m(vec![vec![19, 22], vec![43, 50]]));
    }
}
