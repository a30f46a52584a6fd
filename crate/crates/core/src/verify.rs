//! Verification sweeps shared by the acceptance suite and the command-line
//! `verify` verb. Exhaustive sweeps take label bounds; randomized sweeps
//! take a sample count and a seed, and the seed fully determines the draw
//! sequence, so identical inputs reproduce identical reports.

use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{ExactComplex, SignedSqrtRational};
use crate::fuchs::{
    self, coordinates, okamoto_coords, verify_lemma_invariants, verify_regge_correspondence,
    verify_regge_correspondence_exact, FuchsError, MatrixTriple, Scalar,
};
use crate::howe::{
    casimir_matrix, check_duality_bases, multiplicity_space, u3_oracle, u_oracle,
    CouplingMode, MultiPoly, WeightSide,
};
use crate::pvi::{
    self, okamoto_transform, params_from_theta, relative_residual_at, series_solution, BigComplex,
    ThetaParams,
};
use crate::racah::{
    check_u_orthogonality, regge, sixj, tetrahedral_symmetries, u_coeff, SixJLabels,
};
use crate::tableaux::{gt_count, Partition};
use crate::tetra::{
    cayley_menger_det, is_euclidean_tetra, regge_lengths, spherical_lengths, spherical_realizable,
    EdgeLengths, Su2,
};

/// At most this many failures keep their full reproduction data; the rest
/// are only counted.
const MAX_DETAILED_FAILURES: usize = 25;

/// Outcome of one sweep: what was checked, what was skipped by the sampling
/// guards, and every failure with reproduction data.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub suite: &'static str,
    pub checked: u64,
    pub skipped: u64,
    pub failed: u64,
    pub failures: Vec<String>,
    pub max_deviation: f64,
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checked: 0,
            skipped: 0,
            failed: 0,
            failures: Vec::new(),
            max_deviation: 0.0,
            notes: Vec::new(),
        }
    }

    /// A sweep passes when it checked something and nothing failed.
    pub fn pass(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_DETAILED_FAILURES {
            self.failures.push(msg);
        }
    }

    fn dev(&mut self, d: f64) {
        if d > self.max_deviation {
            self.max_deviation = d;
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} checked, {} skipped, {} failed, max deviation {:.3e})",
            self.suite,
            if self.pass() { "PASS" } else { "FAIL" },
            self.checked,
            self.skipped,
            self.failed,
            self.max_deviation,
        )
    }
}

/// Cross-method agreement |u_oracle| = |u_coeff| over every admissible
/// tuple with all labels at most `max`, as exact equality of squares.
pub fn oracle_sweep(max: u32) -> SweepReport {
    let mut r = SweepReport::new("oracle");
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for d in 0..=max {
                    let m = match u_oracle(a, b, c, d) {
                        Ok(m) => m,
                        Err(e) => {
                            r.fail(format!("u_oracle({a},{b},{c},{d}) failed: {e}"));
                            continue;
                        }
                    };
                    for (i, &e) in m.e_labels.iter().enumerate() {
                        for (j, &f) in m.f_labels.iter().enumerate() {
                            if e > max || f > max {
                                continue;
                            }
                            let u = u_coeff(&SixJLabels::new(a, b, c, d, e, f));
                            r.checked += 1;
                            if u.abs() != m.entries[i][j].abs() {
                                r.fail(format!(
                                    "(a b c d | e f) = ({a} {b} {c} {d} | {e} {f}): \
                                     racah {u}, oracle {}",
                                    m.entries[i][j]
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

/// sixj(l) = sixj(regge(l)) exactly for every valid l with labels <= max.
pub fn regge_sweep(max: u32) -> SweepReport {
    let mut r = SweepReport::new("regge");
    for_valid_labels(max, |l| {
        let img = match regge(l) {
            Ok(img) => img,
            Err(e) => {
                r.fail(format!("regge({l:?}) undefined on valid labels: {e}"));
                return;
            }
        };
        r.checked += 1;
        let lhs = sixj(l);
        let rhs = sixj(&img);
        if lhs != rhs {
            r.fail(format!("sixj{l:?} = {lhs} but sixj{img:?} = {rhs}"));
        }
    });
    r
}

/// sixj constant on the 24 classical relabelings, one check per orbit.
pub fn orbit_sweep(max: u32) -> SweepReport {
    let mut r = SweepReport::new("orbit");
    for_valid_labels(max, |l| {
        let images = tetrahedral_symmetries(l);
        if images.iter().any(|m| m < l) {
            // a smaller representative of the same orbit runs the check
            return;
        }
        r.checked += 1;
        let v = sixj(l);
        for m in &images {
            if sixj(m) != v {
                r.fail(format!("sixj not constant on the orbit of {l:?} at {m:?}"));
            }
        }
    });
    r
}

/// Exact row and column orthonormality of the recoupling matrix for every
/// (a, b, c, d) with entries <= max.
pub fn orthogonality_sweep(max: u32) -> SweepReport {
    let mut r = SweepReport::new("orthogonality");
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for d in 0..=max {
                    match check_u_orthogonality(a, b, c, d) {
                        Ok(true) => r.checked += 1,
                        Ok(false) => {
                            r.checked += 1;
                            r.fail(format!("U({a},{b},{c},{d}) is not orthonormal"));
                        }
                        Err(e) => {
                            r.checked += 1;
                            r.fail(format!("U({a},{b},{c},{d}) orthogonality errored: {e}"));
                        }
                    }
                }
            }
        }
    }
    r
}

/// |u3_oracle| = |u_oracle| under the label lift
/// e -> ((a+b+e)/2, (a+b-e)/2), f -> ((b+c+f)/2, (b+c-f)/2), lambda =
/// (p, p-d), for every (a, b, c, d) with semiperimeter p <= max_p.
pub fn u3_sweep(max_p: u32) -> SweepReport {
    let mut r = SweepReport::new("u3");
    let bound = 2 * max_p;
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                for d in 0..=bound {
                    let s = a + b + c + d;
                    if s % 2 != 0 || s / 2 > max_p || d > s / 2 {
                        continue;
                    }
                    let p = s / 2;
                    let q = p - d;
                    let m2 = match u_oracle(a, b, c, d) {
                        Ok(m) => m,
                        Err(e) => {
                            r.fail(format!("u_oracle({a},{b},{c},{d}): {e}"));
                            continue;
                        }
                    };
                    let m3 = match u3_oracle(a, b, c, p, q) {
                        Ok(m) => m,
                        Err(e) => {
                            r.fail(format!("u3_oracle({a},{b},{c},{p},{q}): {e}"));
                            continue;
                        }
                    };
                    if m2.e_labels.len() != m3.rs_labels.len()
                        || m2.f_labels.len() != m3.tu_labels.len()
                    {
                        r.fail(format!(
                            "label count mismatch at ({a},{b},{c},{d}): \
                             {}x{} vs {}x{}",
                            m2.e_labels.len(),
                            m2.f_labels.len(),
                            m3.rs_labels.len(),
                            m3.tu_labels.len()
                        ));
                        continue;
                    }
                    for (i, &e) in m2.e_labels.iter().enumerate() {
                        let rs = ((a + b + e) / 2, (a + b - e) / 2);
                        let Some(i3) = m3.rs_labels.iter().position(|&x| x == rs) else {
                            r.fail(format!(
                                "({a},{b},{c},{d}): no diagram {rs:?} for e = {e}"
                            ));
                            continue;
                        };
                        for (j, &f) in m2.f_labels.iter().enumerate() {
                            let tu = ((b + c + f) / 2, (b + c - f) / 2);
                            let Some(j3) = m3.tu_labels.iter().position(|&x| x == tu) else {
                                r.fail(format!(
                                    "({a},{b},{c},{d}): no diagram {tu:?} for f = {f}"
                                ));
                                continue;
                            };
                            r.checked += 1;
                            if m2.entries[i][j].abs() != m3.entries[i3][j3].abs() {
                                r.fail(format!(
                                    "({a},{b},{c},{d}), e = {e}, f = {f}: \
                                     k=2 gives {}, k=3 gives {}",
                                    m2.entries[i][j], m3.entries[i3][j3]
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

/// Prop 4.2 sweep: |U3| invariance under the complementation
/// (a,b,c, (p,q), (r,s), (t,u)) -> (p-a, p-b, p-c, (p,p-q), (p-s,p-r),
/// (p-u,p-t)), plus diagonality of the duality pairing, for all p <= max_p.
pub fn duality_sweep(max_p: u32) -> SweepReport {
    let mut r = SweepReport::new("duality");
    for p in 0..=max_p {
        for q in 0..=p {
            for a in 0..=p {
                for b in 0..=p {
                    let Some(c) = (p + q).checked_sub(a + b) else {
                        continue;
                    };
                    if c > p {
                        continue;
                    }
                    match check_duality_bases(a, b, c, p, q) {
                        Ok(report) => {
                            r.checked += 1;
                            if !report.diagonal_ok {
                                r.fail(format!(
                                    "duality pairing not diagonal at \
                                     ({a},{b},{c}; {p},{q}): {:?} vs {:?}",
                                    report.rs_labels, report.dual_labels
                                ));
                            }
                        }
                        Err(e) => {
                            r.checked += 1;
                            r.fail(format!("check_duality_bases({a},{b},{c},{p},{q}): {e}"));
                        }
                    }
                    if let Err(msg) = u3_complement_invariance(a, b, c, p, q) {
                        r.fail(msg);
                    } else {
                        r.checked += 1;
                    }
                }
            }
        }
    }
    r
}

/// |U3(a,b,c,(p,q))| equals |U3(p-a,p-b,p-c,(p,p-q))| under the diagram
/// complementation on both sides.
fn u3_complement_invariance(a: u32, b: u32, c: u32, p: u32, q: u32) -> Result<(), String> {
    let m = u3_oracle(a, b, c, p, q).map_err(|e| format!("u3_oracle({a},{b},{c},{p},{q}): {e}"))?;
    let md = u3_oracle(p - a, p - b, p - c, p, p - q).map_err(|e| {
        format!(
            "u3_oracle({},{},{},{p},{}): {e}",
            p - a,
            p - b,
            p - c,
            p - q
        )
    })?;
    if m.rs_labels.len() != md.rs_labels.len() || m.tu_labels.len() != md.tu_labels.len() {
        return Err(format!(
            "complement label counts differ at ({a},{b},{c}; {p},{q})"
        ));
    }
    for (i, &(rr, ss)) in m.rs_labels.iter().enumerate() {
        let rs_c = (p - ss, p - rr);
        let Some(ic) = md.rs_labels.iter().position(|&x| x == rs_c) else {
            return Err(format!(
                "({a},{b},{c}; {p},{q}): complement basis lacks diagram {rs_c:?}"
            ));
        };
        for (j, &(tt, uu)) in m.tu_labels.iter().enumerate() {
            let tu_c = (p - uu, p - tt);
            let Some(jc) = md.tu_labels.iter().position(|&x| x == tu_c) else {
                return Err(format!(
                    "({a},{b},{c}; {p},{q}): complement basis lacks diagram {tu_c:?}"
                ));
            };
            if m.entries[i][j].abs() != md.entries[ic][jc].abs() {
                return Err(format!(
                    "({a},{b},{c}; {p},{q}), rs = ({rr},{ss}), tu = ({tt},{uu}): \
                     {} vs complement {}",
                    m.entries[i][j], md.entries[ic][jc]
                ));
            }
        }
    }
    Ok(())
}

/// Dimension agreement gt_count = dim multiplicity_space for k = 2 and
/// k = 3, and the column-restricted Casimir shift C3 = C2 + (a+b) I on the
/// lifted basis, over all two-row diagrams (p, q) with p <= max_p and all
/// column degrees (a, b, c) <= max_p summing to p + q.
pub fn dims_casimir_sweep(max_p: u32) -> SweepReport {
    let mut r = SweepReport::new("dims");
    for p in 0..=max_p {
        for q in 0..=p {
            for a in 0..=max_p {
                for b in 0..=max_p {
                    let Some(c) = (p + q).checked_sub(a + b) else {
                        continue;
                    };
                    if c > max_p {
                        continue;
                    }
                    let lambda = Partition::new([p, q, 0]);
                    let count = gt_count(&lambda, [a, b, c]);
                    let m2 = match multiplicity_space(2, [a, b, c], &[p, q], WeightSide::Highest) {
                        Ok(m) => m,
                        Err(e) => {
                            r.fail(format!("multiplicity_space(2, ({a},{b},{c}), ({p},{q})): {e}"));
                            continue;
                        }
                    };
                    let m3 =
                        match multiplicity_space(3, [a, b, c], &[p, q, 0], WeightSide::Highest) {
                            Ok(m) => m,
                            Err(e) => {
                                r.fail(format!(
                                    "multiplicity_space(3, ({a},{b},{c}), ({p},{q},0)): {e}"
                                ));
                                continue;
                            }
                        };
                    r.checked += 1;
                    if count != m2.len() as u64 || count != m3.len() as u64 {
                        r.fail(format!(
                            "dimension mismatch at mu = ({a},{b},{c}), lambda = ({p},{q}): \
                             gt {count}, k=2 {}, k=3 {}",
                            m2.len(),
                            m3.len()
                        ));
                        continue;
                    }
                    if m2.is_empty() {
                        continue;
                    }
                    if let Err(msg) = casimir_shift_holds(&m2, a + b) {
                        r.fail(format!(
                            "Casimir shift at mu = ({a},{b},{c}), lambda = ({p},{q}): {msg}"
                        ));
                    }
                }
            }
        }
    }
    r
}

/// The columns-12 Casimir over three rows equals the one over two rows plus
/// (a + b) on row-3-free polynomials; checked on the given k = 2 basis
/// lifted verbatim to k = 3 (the exponent encoding does not depend on k).
fn casimir_shift_holds(basis2: &[MultiPoly], shift: u32) -> Result<(), String> {
    let cols = CouplingMode::Cols12.cols();
    let lifted: Vec<MultiPoly> = basis2
        .iter()
        .map(|f| MultiPoly::from_terms(3, f.terms().map(|(m, c)| (*m, c.clone()))))
        .collect();
    let c2 = casimir_matrix(basis2, cols).map_err(|e| format!("k=2 matrix: {e}"))?;
    let c3 = casimir_matrix(&lifted, cols).map_err(|e| format!("k=3 matrix: {e}"))?;
    let s = BigRational::from_integer(u64::from(shift).into());
    for i in 0..c2.rows() {
        for j in 0..c2.cols() {
            let expected = if i == j {
                c2.at(i, j) + &s
            } else {
                c2.at(i, j).clone()
            };
            if c3.at(i, j) != &expected {
                return Err(format!(
                    "entry ({i},{j}): k=3 gives {}, expected {}",
                    c3.at(i, j),
                    expected
                ));
            }
        }
    }
    Ok(())
}

/// Exact Cayley-Menger invariance and realizability preservation under the
/// length Regge map, on random rational tuples. Draws alternate between a
/// tight band (mostly realizable) and a wide band (mostly not), and tuples
/// whose Regge image has a negative entry are skipped as inadmissible.
pub fn cm_sweep(samples: u64, seed: u64) -> SweepReport {
    let mut r = SweepReport::new("cm");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    r.notes.push(format!("rng ChaCha8, seed {seed}"));
    let mut realizable = 0u64;
    while r.checked < samples {
        let tight = r.checked % 2 == 0;
        let mut draw = || -> BigRational {
            let (num, den) = if tight {
                (rng.gen_range(8i64..=16), rng.gen_range(2i64..=4))
            } else {
                (rng.gen_range(1i64..=64), rng.gen_range(1i64..=8))
            };
            BigRational::new(num.into(), den.into())
        };
        let l = EdgeLengths::new(draw(), draw(), draw(), draw(), draw(), draw());
        let img = match regge_lengths(&l) {
            Ok(img) => img,
            Err(_) => {
                r.skipped += 1;
                continue;
            }
        };
        r.checked += 1;
        let before = cayley_menger_det(&l);
        let after = cayley_menger_det(&img);
        if before != after {
            r.fail(format!(
                "determinant changed on {:?}: {before} vs {after}",
                l.map(|x| x.to_string())
            ));
        }
        let (r1, r2) = (is_euclidean_tetra(&l), is_euclidean_tetra(&img));
        if r1 != r2 {
            r.fail(format!(
                "realizability flipped on {:?}: {r1} vs {r2}",
                l.map(|x| x.to_string())
            ));
        }
        if r1 {
            realizable += 1;
        }
    }
    r.notes
        .push(format!("{realizable} of {} tuples realizable", r.checked));
    r
}

/// One random Hermitian triple as three vectors, plus its theta values, with
/// margins keeping the tetrahedron and the coordinate chart nondegenerate.
/// `None` means the draw violated a margin and the caller should redraw.
fn sample_hermitian_triple(rng: &mut ChaCha8Rng) -> Option<([[f64; 3]; 3], [Complex64; 4])> {
    let mut v = [[0.0f64; 3]; 3];
    for vi in &mut v {
        for x in vi.iter_mut() {
            *x = rng.gen_range(-2.0..=2.0);
        }
    }
    let norm = |w: &[f64; 3]| (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
    let sum = [
        v[0][0] + v[1][0] + v[2][0],
        v[0][1] + v[1][1] + v[2][1],
        v[0][2] + v[1][2] + v[2][2],
    ];
    let th = [norm(&v[0]), norm(&v[1]), norm(&v[2]), norm(&sum)];
    if th.iter().any(|&t| t < 0.4) {
        return None;
    }
    let det = v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1])
        - v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0])
        + v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0]);
    if det.abs() < 0.1 {
        return None;
    }
    Some((v, th.map(|t| Complex64::new(t, 0.0))))
}

/// Margins on the trace coordinates that keep reconstruction away from its
/// genericity boundary, before and after the shift.
fn coords_margins_ok(c: &fuchs::TraceCoords<Complex64>) -> bool {
    let cramer = |t: &fuchs::TraceCoords<Complex64>| t.theta[0] * t.theta[1] - t.lambda12;
    let shifted = okamoto_coords(c);
    [c.lambda12, c.lambda13, c.tau, cramer(c), cramer(&shifted)]
        .iter()
        .all(|z| z.norm() >= 0.02)
}

fn theorem_like_sweep(
    suite: &'static str,
    samples: u64,
    seed: u64,
    tol: f64,
    check_correspondence: bool,
    check_lemma: bool,
) -> SweepReport {
    let mut r = SweepReport::new(suite);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    r.notes.push(format!("rng ChaCha8, seed {seed}"));
    r.notes.push(
        "margins: |v_i|, |v_sum| >= 0.4, |det| >= 0.1, coordinate denominators >= 0.02".into(),
    );
    while r.checked < samples {
        let Some((v, theta)) = sample_hermitian_triple(&mut rng) else {
            r.skipped += 1;
            continue;
        };
        let t = MatrixTriple::from_vectors(v[0], v[1], v[2]);
        let c = match coordinates(&t, &theta, 1e-8) {
            Ok(c) => c,
            Err(_) => {
                r.skipped += 1;
                continue;
            }
        };
        if !coords_margins_ok(&c) {
            r.skipped += 1;
            continue;
        }
        r.checked += 1;
        if check_correspondence {
            match verify_regge_correspondence(&t, tol) {
                Ok(rep) => {
                    r.dev(rep.max_deviation);
                    if !rep.pass {
                        r.fail(format!(
                            "length routes disagree by {:.3e} on v = {v:?}",
                            rep.max_deviation
                        ));
                    }
                }
                Err(e) => r.fail(format!("correspondence errored on v = {v:?}: {e}")),
            }
        }
        if check_lemma {
            match verify_lemma_invariants(&t, &theta, tol) {
                Ok(rep) => {
                    let drift = rep
                        .five_before
                        .iter()
                        .zip(&rep.five_after)
                        .chain(rep.sum_squares_before.iter().zip(&rep.sum_squares_after))
                        .map(|(x, y)| (x.to_complex() - y.to_complex()).norm())
                        .fold(0.0, f64::max);
                    r.dev(drift);
                    if !rep.pass {
                        r.fail(format!(
                            "shift loop moved an invariant on v = {v:?}: \
                             {:?} -> {:?}, {:?} -> {:?}",
                            rep.five_before,
                            rep.five_after,
                            rep.sum_squares_before,
                            rep.sum_squares_after
                        ));
                    }
                }
                Err(e) => r.fail(format!("invariant loop errored on v = {v:?}: {e}")),
            }
        }
    }
    r
}

/// Both length routes agree and the five hat-traces plus the three squared
/// sums survive the shift loop, on random Hermitian triples.
pub fn theorem_float_sweep(samples: u64, seed: u64, tol: f64) -> SweepReport {
    theorem_like_sweep("theorem", samples, seed, tol, true, true)
}

/// The shift-loop invariants alone, on random Hermitian triples.
pub fn lemma_sweep(samples: u64, seed: u64, tol: f64) -> SweepReport {
    theorem_like_sweep("lemma", samples, seed, tol, false, true)
}

fn isqrt_exact(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt().round() as i64;
    for cand in [r - 1, r, r + 1] {
        if cand >= 0 && cand * cand == n {
            return Some(cand);
        }
    }
    None
}

/// All nonzero integer vectors with coordinates bounded by `bound` whose
/// Euclidean length is an integer.
fn integer_length_vectors(bound: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            for z in -bound..=bound {
                let n = x * x + y * y + z * z;
                if n > 0 && isqrt_exact(n).is_some() {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

fn dot(a: &[i64; 3], b: &[i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Exact version of the theorem sweep: integer vectors with integer lengths
/// whose sum also has integer length, so every theta is rational and both
/// length routes stay inside the rationals. Checks the correspondence and
/// the shift-loop invariants exactly.
pub fn theorem_exact_sweep(samples: u64, seed: u64) -> SweepReport {
    let mut r = SweepReport::new("theorem-exact");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = integer_length_vectors(9);
    r.notes.push(format!(
        "rng ChaCha8, seed {seed}; {} integer-length vectors with coordinates <= 9",
        pool.len()
    ));
    let mut attempts = 0u64;
    let max_attempts = 200_000;
    while r.checked < samples && attempts < max_attempts {
        attempts += 1;
        let v1 = pool[rng.gen_range(0..pool.len())];
        let v2 = pool[rng.gen_range(0..pool.len())];
        let v3 = pool[rng.gen_range(0..pool.len())];
        let sum = [v1[0] + v2[0] + v3[0], v1[1] + v2[1] + v3[1], v1[2] + v2[2] + v3[2]];
        let Some(th4) = isqrt_exact(dot(&sum, &sum)).filter(|&t| t > 0) else {
            r.skipped += 1;
            continue;
        };
        let det = v1[0] * (v2[1] * v3[2] - v2[2] * v3[1])
            - v1[1] * (v2[0] * v3[2] - v2[2] * v3[0])
            + v1[2] * (v2[0] * v3[1] - v2[1] * v3[0]);
        if det == 0 {
            r.skipped += 1;
            continue;
        }
        let theta_int = [
            isqrt_exact(dot(&v1, &v1)).expect("pool vectors have integer length"),
            isqrt_exact(dot(&v2, &v2)).expect("pool vectors have integer length"),
            isqrt_exact(dot(&v3, &v3)).expect("pool vectors have integer length"),
            th4,
        ];
        let rat = |x: i64| BigRational::from_integer(x.into());
        let vec_rat = |w: &[i64; 3]| [rat(w[0]), rat(w[1]), rat(w[2])];
        let t = MatrixTriple::from_lattice_vectors(&vec_rat(&v1), &vec_rat(&v2), &vec_rat(&v3));
        let theta = theta_int.map(rat);
        let theta_c = theta.clone().map(ExactComplex::from_real);
        let Ok(c) = coordinates(&t, &theta_c, 0.0) else {
            r.skipped += 1;
            continue;
        };
        let cramer = |t: &fuchs::TraceCoords<ExactComplex>| {
            &(&t.theta[0] * &t.theta[1]) - &t.lambda12
        };
        let shifted = okamoto_coords(&c);
        if c.lambda12.is_zero()
            || c.lambda13.is_zero()
            || cramer(&c).is_zero()
            || cramer(&shifted).is_zero()
        {
            r.skipped += 1;
            continue;
        }
        r.checked += 1;
        match verify_regge_correspondence_exact(&t, &theta) {
            Ok(rep) => {
                if !rep.pass {
                    r.fail(format!(
                        "exact length routes disagree on v = {v1:?}, {v2:?}, {v3:?}"
                    ));
                }
            }
            Err(e) => r.fail(format!(
                "exact correspondence errored on v = {v1:?}, {v2:?}, {v3:?}: {e}"
            )),
        }
        match verify_lemma_invariants(&t, &theta_c, 0.0) {
            Ok(rep) => {
                if !rep.pass {
                    r.fail(format!(
                        "exact shift loop moved an invariant on v = {v1:?}, {v2:?}, {v3:?}"
                    ));
                }
            }
            Err(FuchsError::NonGeneric) => {
                // the generic-position pre-checks make this unreachable
                r.fail(format!(
                    "reconstruction degenerate on v = {v1:?}, {v2:?}, {v3:?}"
                ));
            }
            Err(e) => r.fail(format!(
                "exact invariant loop errored on v = {v1:?}, {v2:?}, {v3:?}: {e}"
            )),
        }
    }
    if r.checked < samples {
        r.fail(format!(
            "only {} of {samples} samples found in {max_attempts} attempts",
            r.checked
        ));
    }
    r
}

/// The series-level transform maps solutions to solutions: on random jets,
/// the transformed series satisfies the equation with the shifted parameters
/// to within `tol` relative residual near the expansion point.
pub fn backlund_sweep(
    samples: u64,
    seed: u64,
    order: usize,
    precision: usize,
    tol: f64,
) -> SweepReport {
    let mut r = SweepReport::new("backlund");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    r.notes.push(format!(
        "rng ChaCha8, seed {seed}; order {order}, precision {precision} bits"
    ));
    r.notes.push(
        "margins: |phi| >= 0.2, |x(t0)| >= 0.5, transformed value 0.3 away from 0, 1, t0".into(),
    );
    while r.checked < samples {
        let t0: f64 = rng.gen_range(2.5..=4.0);
        let y0: f64 = rng.gen_range(1.5..=3.0);
        let y1: f64 = rng.gen_range(-1.0..=1.0);
        let th_draw: [f64; 4] = [
            rng.gen_range(-2.0..=2.0),
            rng.gen_range(-2.0..=2.0),
            rng.gen_range(-2.0..=2.0),
            rng.gen_range(-2.0..=2.0),
        ];
        if (y0 - t0).abs() < 0.5 {
            r.skipped += 1;
            continue;
        }
        let th = ThetaParams::real(th_draw[0], th_draw[1], th_draw[2], th_draw[3]);
        let phi = th.phi();
        if phi.norm() < 0.2 {
            r.skipped += 1;
            continue;
        }
        let p = params_from_theta(&th);
        let y = match series_solution(
            Complex64::new(t0, 0.0),
            Complex64::new(y0, 0.0),
            Complex64::new(y1, 0.0),
            &p,
            order,
            precision,
        ) {
            Ok(y) => y,
            Err(_) => {
                r.skipped += 1;
                continue;
            }
        };
        match pvi::x_series(&y, &th) {
            Ok(x) if x.coeffs[0].abs_f64() >= 0.5 => {}
            _ => {
                r.skipped += 1;
                continue;
            }
        }
        let (yh, th2) = match okamoto_transform(&y, &th) {
            Ok(out) => out,
            Err(_) => {
                r.skipped += 1;
                continue;
            }
        };
        let yh0 = yh.coeffs[0].to_c64();
        if yh0.norm() < 0.3 || (yh0 - 1.0).norm() < 0.3 || (yh0 - t0).norm() < 0.3 {
            r.skipped += 1;
            continue;
        }
        r.checked += 1;
        let p2 = params_from_theta(&th2);
        for _ in 0..5 {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let radius = 0.05 * rng.gen_range(0.2..=1.0);
            let tb = BigComplex::from_f64(
                t0 + radius * angle.cos(),
                radius * angle.sin(),
                precision,
            );
            match relative_residual_at(&yh, &p2, &tb) {
                Ok(res) => {
                    r.dev(res);
                    if res > tol {
                        r.fail(format!(
                            "residual {res:.3e} at t0 = {t0}, y0 = {y0}, y1 = {y1}, \
                             theta = {th_draw:?}, offset ({:.4}, {:.4})",
                            radius * angle.cos(),
                            radius * angle.sin()
                        ));
                    }
                }
                Err(e) => r.fail(format!(
                    "residual undefined at t0 = {t0}, y0 = {y0}, y1 = {y1}, \
                     theta = {th_draw:?}: {e}"
                )),
            }
        }
    }
    r
}

/// Numerical evidence that the length Regge map preserves spherical
/// realizability: the cosine Gram matrix of the transformed lengths stays
/// positive semidefinite on random SU(2) triples. Evidence, not a proof.
pub fn spherical_sweep(samples: u64, seed: u64, margin: f64) -> SweepReport {
    let mut r = SweepReport::new("spherical");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    r.notes.push(format!("rng ChaCha8, seed {seed}"));
    r.notes
        .push("numerical evidence for the spherical statement, not a proof".into());
    let draw = |rng: &mut ChaCha8Rng| -> Su2 {
        loop {
            let q: [f64; 4] = [
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
            ];
            let n = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
            if n >= 0.2 {
                return Su2::from_quaternion(q[0], q[1], q[2], q[3]);
            }
        }
    };
    while r.checked < samples {
        let m1 = draw(&mut rng);
        let m2 = draw(&mut rng);
        let m3 = draw(&mut rng);
        let l = spherical_lengths(&m1, &m2, &m3);
        if !spherical_realizable(&l, margin) {
            // a genuine SU(2) triple always carries a PSD cosine Gram
            r.fail(format!("source triple not realizable at lengths {l:?}"));
            r.checked += 1;
            continue;
        }
        let img = match regge_lengths(&l) {
            Ok(img) => img,
            Err(e) => {
                r.fail(format!("Regge map undefined on spherical lengths {l:?}: {e}"));
                r.checked += 1;
                continue;
            }
        };
        r.checked += 1;
        if !spherical_realizable(&img, margin) {
            r.fail(format!(
                "realizability lost: lengths {l:?} map to {img:?}"
            ));
        }
    }
    r
}

/// Visits every valid label tuple with all labels at most `max`.
fn for_valid_labels(max: u32, mut visit: impl FnMut(&SixJLabels)) {
    for a in 0..=max {
        for b in 0..=max {
            for e in (a.abs_diff(b)..=(a + b).min(max)).step_by(2) {
                for c in 0..=max {
                    for d in 0..=max {
                        if !crate::racah::triangle_ok(c, d, e) {
                            continue;
                        }
                        for f in 0..=max {
                            let l = SixJLabels::new(a, b, c, d, e, f);
                            if l.is_valid() {
                                visit(&l);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Signed square data of a surd, for JSON-friendly reporting.
pub fn surd_parts(v: &SignedSqrtRational) -> (i8, String, String) {
    let sq = v.square();
    (v.sign(), sq.numer().to_string(), sq.denom().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exhaustive_sweeps_pass() {
        assert!(oracle_sweep(2).pass());
        assert!(regge_sweep(3).pass());
        assert!(orbit_sweep(3).pass());
        assert!(orthogonality_sweep(3).pass());
        assert!(u3_sweep(2).pass());
        assert!(duality_sweep(2).pass());
        assert!(dims_casimir_sweep(2).pass());
    }

    #[test]
    fn randomized_sweeps_pass_and_reproduce() {
        let a = cm_sweep(40, 11);
        assert!(a.pass(), "{:?}", a.failures);
        let b = cm_sweep(40, 11);
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.notes, b.notes);

        let t = theorem_float_sweep(10, 5, 1e-10);
        assert!(t.pass(), "{:?}", t.failures);

        let s = spherical_sweep(25, 3, 1e-9);
        assert!(s.pass(), "{:?}", s.failures);
    }

    #[test]
    fn exact_theorem_sweep_finds_lattice_triples() {
        let r = theorem_exact_sweep(3, 17);
        assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn backlund_sweep_small() {
        let r = backlund_sweep(2, 9, 12, 80, 1e-9);
        assert!(r.pass(), "{:?}", r.failures);
        assert!(r.max_deviation < 1e-9);
    }

    #[test]
    fn valid_label_visitor_agrees_with_filter() {
        let mut count = 0u64;
        for_valid_labels(3, |_| count += 1);
        let mut expect = 0u64;
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for d in 0..=3 {
                        for e in 0..=3 {
                            for f in 0..=3 {
                                if SixJLabels::new(a, b, c, d, e, f).is_valid() {
                                    expect += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(count, expect);
    }
}
