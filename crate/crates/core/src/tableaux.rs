//! Partitions with at most three rows, the Pieri rule, Littlewood-Richardson
//! coefficients by lattice-word enumeration, and Gelfand-Tsetlin patterns for
//! GL_3 together with the entrywise duality pattern -> p - pattern.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauxError {
    #[error("rows do not interlace: {0}")]
    InterlacingViolation(String),
    #[error("entry out of range: {0}")]
    OutOfRange(String),
}

/// A partition with at most three rows, stored as weakly decreasing parts
/// (trailing zeros allowed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(pub [u32; 3]);

impl Partition {
    /// Panics when the parts are not weakly decreasing; that is a caller bug.
    pub fn new(parts: [u32; 3]) -> Self {
        assert!(
            parts[0] >= parts[1] && parts[1] >= parts[2],
            "parts must be weakly decreasing: {parts:?}"
        );
        Self(parts)
    }

    pub fn two_rows(a: u32, b: u32) -> Self {
        Self::new([a, b, 0])
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..3).all(|i| self.0[i] >= other.0[i])
    }

    /// Dimension of the GL_3 irreducible with this highest weight
    /// (Weyl dimension formula).
    pub fn dim_gl3(&self) -> u64 {
        let [a, b, c] = self.0.map(u64::from);
        (a - b + 1) * (b - c + 1) * (a - c + 2) / 2
    }
}

/// All partitions obtained from `lambda` by adding a horizontal strip of `a`
/// boxes, keeping at most three rows. Deterministic lexicographic order.
pub fn pieri(lambda: &Partition, a: u32) -> Vec<Partition> {
    let [l1, l2, l3] = lambda.0;
    let mut out = Vec::new();
    // horizontal strip condition: m1 >= l1 >= m2 >= l2 >= m3 >= l3
    for m1 in l1..=(l1 + a) {
        let rest1 = a - (m1 - l1);
        for m2 in l2..=l1.min(l2 + rest1) {
            let rest2 = rest1 - (m2 - l2);
            let m3 = l3 + rest2;
            if m3 <= l2 {
                out.push(Partition::new([m1, m2, m3]));
            }
        }
    }
    out
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu} for partitions with at
/// most three rows, by direct enumeration of Littlewood-Richardson skew
/// tableaux: fillings of nu/lambda with content mu, rows weakly increasing,
/// columns strictly increasing, whose reverse reading word is a lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    // cells of nu/lambda in reverse reading order: rows top to bottom, each
    // row right to left; columns are 0-based
    let mut cells = Vec::new();
    for row in 0..3 {
        for col in (lambda.0[row]..nu.0[row]).rev() {
            cells.push((row, col));
        }
    }
    let mut filling = vec![0usize; cells.len()];
    let mut counts = [0u32; 3];
    count_lr_fillings(&cells, nu, lambda, mu, 0, &mut filling, &mut counts)
}

fn count_lr_fillings(
    cells: &[(usize, u32)],
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    pos: usize,
    filling: &mut [usize],
    counts: &mut [u32; 3],
) -> u64 {
    if pos == cells.len() {
        return u64::from(counts[0] == mu.0[0] && counts[1] == mu.0[1] && counts[2] == mu.0[2]);
    }
    let (row, col) = cells[pos];
    let mut total = 0;
    for v in 0..3 {
        if counts[v] >= mu.0[v as usize] {
            continue;
        }
        // lattice word: after placing, #1 >= #2 >= #3 must still hold
        if v > 0 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        // rows weakly increase left to right; the right neighbor, if inside
        // the skew shape, was placed earlier in reverse reading order
        if col + 1 < nu.0[row] {
            let right = filling[pos - 1];
            if v > right {
                continue;
            }
        }
        // columns strictly increase top to bottom
        if row > 0 && col >= lambda.0[row - 1] && col < nu.0[row - 1] {
            let above_pos = cells
                .iter()
                .position(|&(r, c)| r == row - 1 && c == col)
                .expect("cell above lies in the skew shape");
            if v <= filling[above_pos] {
                continue;
            }
        }
        filling[pos] = v;
        counts[v] += 1;
        total += count_lr_fillings(cells, nu, lambda, mu, pos + 1, filling, counts);
        counts[v] -= 1;
    }
    total
}

/// A Gelfand-Tsetlin pattern for GL_3: three interlacing rows
/// top (3 entries) >= mid (2 entries) >= bot (1 entry).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GtPattern {
    pub top: [u32; 3],
    pub mid: [u32; 2],
    pub bot: u32,
}

impl GtPattern {
    pub fn new(top: [u32; 3], mid: [u32; 2], bot: u32) -> Result<Self, TableauxError> {
        let p = Self { top, mid, bot };
        p.check_interlacing()?;
        Ok(p)
    }

    fn check_interlacing(&self) -> Result<(), TableauxError> {
        let ok = self.top[0] >= self.mid[0]
            && self.mid[0] >= self.top[1]
            && self.top[1] >= self.mid[1]
            && self.mid[1] >= self.top[2]
            && self.mid[0] >= self.bot
            && self.bot >= self.mid[1];
        if ok {
            Ok(())
        } else {
            Err(TableauxError::InterlacingViolation(format!("{self:?}")))
        }
    }

    /// GL_3 weight read off row by row: (bot, |mid| - bot, |top| - |mid|).
    pub fn weight(&self) -> [u32; 3] {
        let mid_sum = self.mid[0] + self.mid[1];
        let top_sum = self.top[0] + self.top[1] + self.top[2];
        [self.bot, mid_sum - self.bot, top_sum - mid_sum]
    }
}

/// All GT patterns with the given top row and weight.
pub fn gt_patterns(lambda: &Partition, weight: [u32; 3]) -> Vec<GtPattern> {
    let [l1, l2, l3] = lambda.0;
    let mut out = Vec::new();
    if lambda.size() != weight.iter().sum::<u32>() {
        return out;
    }
    let bot = weight[0];
    for m1 in l2..=l1 {
        for m2 in l3..=l2.min(m1) {
            if m1 + m2 != weight[0] + weight[1] {
                continue;
            }
            if m1 >= bot && bot >= m2 {
                out.push(GtPattern {
                    top: lambda.0,
                    mid: [m1, m2],
                    bot,
                });
            }
        }
    }
    out
}

/// Number of GT patterns with the given top row and weight. Equals the
/// dimension of the weight space of the GL_3 irreducible with highest
/// weight `lambda`.
pub fn gt_count(lambda: &Partition, weight: [u32; 3]) -> u64 {
    gt_patterns(lambda, weight).len() as u64
}

/// The dual pattern: every entry x becomes p - x and each row is reversed.
/// Top row (l1,l2,l3) becomes (p-l3, p-l2, p-l1); the weight maps entrywise
/// to p - weight. Fails when p is smaller than the largest entry.
pub fn gt_dual(pattern: &GtPattern, p: u32) -> Result<GtPattern, TableauxError> {
    if p < pattern.top[0] {
        return Err(TableauxError::OutOfRange(format!(
            "dual parameter {p} is below the largest entry {}",
            pattern.top[0]
        )));
    }
    GtPattern::new(
        [
            p - pattern.top[2],
            p - pattern.top[1],
            p - pattern.top[0],
        ],
        [p - pattern.mid[1], p - pattern.mid[0]],
        p - pattern.bot,
    )
}
