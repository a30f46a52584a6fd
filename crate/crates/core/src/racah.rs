//! The Racah-Wigner 6j symbol in integer (twice-spin) labels, computed by the
//! Racah single-sum formula, together with the Regge symmetry, the classical
//! tetrahedral symmetries, and exact orthogonality of the recoupling matrix.
//!
//! Labels (a, b, c, d, e, f) lay out the symbol as {a b e; c d f}; the four
//! coupling triads are (a,b,e), (c,d,e), (a,d,f), (b,c,f).

use crate::exact::{factorial, BigRational, ExactError, SignedSqrtRational};
use num_traits::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RacahError {
    /// The Regge map needs p = (a+b+c+d)/2 integral.
    #[error("perimeter a+b+c+d = {0} is odd, the Regge image is not integral")]
    OddPerimeter(u32),
    /// The Regge image of jointly invalid labels can leave the nonnegative
    /// range; jointly valid labels never trigger this.
    #[error("Regge image has a negative label")]
    NegativeLabel,
}

/// Integer labels of a 6j symbol, twice the spins, in symbol layout
/// {a b e; c d f}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SixJLabels {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
    pub f: u32,
}

impl SixJLabels {
    pub fn new(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn as_array(&self) -> [u32; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// The four coupling triads, in the fixed order abe, cde, adf, bcf.
    pub fn triads(&self) -> [[u32; 3]; 4] {
        [
            [self.a, self.b, self.e],
            [self.c, self.d, self.e],
            [self.a, self.d, self.f],
            [self.b, self.c, self.f],
        ]
    }

    /// Names of the triads that fail their coupling condition.
    pub fn failing_triads(&self) -> Vec<&'static str> {
        const NAMES: [&str; 4] = ["abe", "cde", "adf", "bcf"];
        self.triads()
            .iter()
            .zip(NAMES)
            .filter(|(t, _)| !triangle_ok(t[0], t[1], t[2]))
            .map(|(_, n)| n)
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.triads()
            .iter()
            .all(|t| triangle_ok(t[0], t[1], t[2]))
    }
}

/// Coupling condition on twice-spin labels: the triangle inequalities
/// together with even total (integrality of the spin sum).
pub fn triangle_ok(x: u32, y: u32, z: u32) -> bool {
    (x + y + z) % 2 == 0 && z <= x + y && x <= y + z && y <= x + z
}

/// The triangle weight Delta(x,y,z): the square root of
/// ((x+y-z)/2)! ((x-y+z)/2)! ((-x+y+z)/2)! / ((x+y+z)/2 + 1)!.
/// Requires `triangle_ok(x, y, z)`.
pub fn racah_delta(x: u32, y: u32, z: u32) -> SignedSqrtRational {
    debug_assert!(triangle_ok(x, y, z));
    let num = factorial(((x + y - z) / 2) as usize)
        * factorial(((x + z - y) / 2) as usize)
        * factorial(((y + z - x) / 2) as usize);
    let den = factorial(((x + y + z) / 2 + 1) as usize);
    SignedSqrtRational::sqrt_of(&BigRational::new(num, den))
}

/// The 6j symbol by the Racah single-sum formula. Zero whenever any coupling
/// triad fails, so the function is total on label tuples.
pub fn sixj(l: &SixJLabels) -> SignedSqrtRational {
    if !l.is_valid() {
        return SignedSqrtRational::zero();
    }
    let (a, b, c, d, e, f) = (l.a, l.b, l.c, l.d, l.e, l.f);
    let t = [
        (a + b + e) / 2,
        (c + d + e) / 2,
        (a + d + f) / 2,
        (b + c + f) / 2,
    ];
    let q = [
        (a + b + c + d) / 2,
        (a + c + e + f) / 2,
        (b + d + e + f) / 2,
    ];
    let lo = *t.iter().max().unwrap();
    let hi = *q.iter().min().unwrap();
    // validity makes every q_j - t_i nonnegative, so the range is nonempty
    let mut sum = BigRational::zero();
    for z in lo..=hi {
        let num = factorial((z + 1) as usize);
        let mut den = num_bigint::BigInt::from(1);
        for ti in t {
            den *= factorial((z - ti) as usize);
        }
        for qj in q {
            den *= factorial((qj - z) as usize);
        }
        let term = BigRational::new(num, den);
        if z % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let delta = racah_delta(a, b, e)
        .mul(&racah_delta(c, d, e))
        .mul(&racah_delta(a, d, f))
        .mul(&racah_delta(b, c, f));
    delta.mul_rational(&sum)
}

/// The recoupling coefficient U = (-1)^p sqrt((e+1)(f+1)) {a b e; c d f}
/// with p = (a+b+c+d)/2. Rows and columns of the matrix (U_{ef}) over
/// admissible intermediate labels are orthonormal.
pub fn u_coeff(l: &SixJLabels) -> SignedSqrtRational {
    let s = sixj(l);
    if s.is_zero() {
        return s;
    }
    // validity of all triads forces the perimeter even, so p is integral
    let p = (l.a + l.b + l.c + l.d) / 2;
    let weight = BigRational::from_integer((u64::from(l.e + 1) * u64::from(l.f + 1)).into());
    let u = s.mul(&SignedSqrtRational::sqrt_of(&weight));
    if p % 2 == 1 {
        u.neg()
    } else {
        u
    }
}

/// The Regge symmetry: (a,b,c,d,e,f) -> (p-a, p-b, p-c, p-d, e, f) with
/// p = (a+b+c+d)/2. Preserves the 6j value exactly on jointly valid labels.
pub fn regge(l: &SixJLabels) -> Result<SixJLabels, RacahError> {
    let sum = l.a + l.b + l.c + l.d;
    if sum % 2 == 1 {
        return Err(RacahError::OddPerimeter(sum));
    }
    let p = sum / 2;
    if p < l.a.max(l.b).max(l.c).max(l.d) {
        return Err(RacahError::NegativeLabel);
    }
    Ok(SixJLabels {
        a: p - l.a,
        b: p - l.b,
        c: p - l.c,
        d: p - l.d,
        e: l.e,
        f: l.f,
    })
}

/// The 24 classical symmetries: permutations of the three columns
/// (a,c), (b,d), (e,f) of the symbol, and simultaneous row swaps in any two
/// columns. The output keeps the fixed iteration order and may contain
/// duplicates when labels coincide.
pub fn tetrahedral_symmetries(l: &SixJLabels) -> Vec<SixJLabels> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    const FLIPS: [[bool; 3]; 4] = [
        [false, false, false],
        [true, true, false],
        [true, false, true],
        [false, true, true],
    ];
    let cols = [(l.a, l.c), (l.b, l.d), (l.e, l.f)];
    let mut out = Vec::with_capacity(24);
    for perm in PERMS {
        for flips in FLIPS {
            let mut nc = [(0u32, 0u32); 3];
            for i in 0..3 {
                let (top, bot) = cols[perm[i]];
                nc[i] = if flips[i] { (bot, top) } else { (top, bot) };
            }
            out.push(SixJLabels {
                a: nc[0].0,
                c: nc[0].1,
                b: nc[1].0,
                d: nc[1].1,
                e: nc[2].0,
                f: nc[2].1,
            });
        }
    }
    out
}

/// Closure of the label tuple under the 24 classical symmetries and the
/// Regge map (applied whenever it is defined). For jointly valid labels the
/// orbit size divides 144.
pub fn symmetry_orbit(l: &SixJLabels) -> BTreeSet<SixJLabels> {
    let mut seen = BTreeSet::new();
    let mut queue = vec![*l];
    seen.insert(*l);
    while let Some(cur) = queue.pop() {
        let mut next = tetrahedral_symmetries(&cur);
        if let Ok(r) = regge(&cur) {
            next.push(r);
        }
        for n in next {
            if seen.insert(n) {
                queue.push(n);
            }
        }
    }
    seen
}

/// Intermediate labels e with (a,b,e) and (c,d,e) both coupling.
pub fn admissible_e(a: u32, b: u32, c: u32, d: u32) -> Vec<u32> {
    (0..=(a + b).min(c + d))
        .filter(|&e| triangle_ok(a, b, e) && triangle_ok(c, d, e))
        .collect()
}

/// Intermediate labels f with (a,d,f) and (b,c,f) both coupling.
pub fn admissible_f(a: u32, b: u32, c: u32, d: u32) -> Vec<u32> {
    (0..=(a + d).min(b + c))
        .filter(|&f| triangle_ok(a, d, f) && triangle_ok(b, c, f))
        .collect()
}

/// The recoupling matrix U_{ef} over admissible (e, f), with its label lists.
pub fn u_matrix(
    a: u32,
    b: u32,
    c: u32,
    d: u32,
) -> (Vec<u32>, Vec<u32>, Vec<Vec<SignedSqrtRational>>) {
    let es = admissible_e(a, b, c, d);
    let fs = admissible_f(a, b, c, d);
    let m = es
        .iter()
        .map(|&e| {
            fs.iter()
                .map(|&f| u_coeff(&SixJLabels::new(a, b, c, d, e, f)))
                .collect()
        })
        .collect();
    (es, fs, m)
}

/// Exact orthonormality of the recoupling matrix: U^T U = I over the
/// admissible labels. Every inner product stays in a single radical class,
/// so the guarded surd addition never fails on valid input; a radical-class
/// error would indicate a bug and is propagated.
pub fn check_u_orthogonality(a: u32, b: u32, c: u32, d: u32) -> Result<bool, ExactError> {
    let (es, fs, m) = u_matrix(a, b, c, d);
    if es.len() != fs.len() {
        return Ok(false);
    }
    for i in 0..fs.len() {
        for j in i..fs.len() {
            let mut acc = SignedSqrtRational::zero();
            for (row, _) in es.iter().enumerate() {
                acc = acc.checked_add(&m[row][i].mul(&m[row][j]))?;
            }
            let expected = if i == j {
                SignedSqrtRational::one()
            } else {
                SignedSqrtRational::zero()
            };
            if acc != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
