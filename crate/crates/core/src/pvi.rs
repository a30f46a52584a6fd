//! A series engine for the sixth Painlevé equation: local Taylor solutions
//! around a regular point, the auxiliary function x(t), the Okamoto
//! transformation y -> y + phi/x with the matching parameter shift
//! theta -> theta - phi, residual verification, and the trivial sign
//! symmetries of the parameter map.
//!
//! Coefficients are arbitrary-precision binary floats so that residuals of a
//! correct transform sit far below any plausible roundoff of a double
//! computation.

use num_complex::Complex64;
use thiserror::Error;

use dashu_float::round::mode::HalfEven;

/// Arbitrary-precision binary float with banker's rounding.
pub type Float = dashu_float::FBig<HalfEven, 2>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PviError {
    /// The jet sits on a pole of the equation: y in {0, 1, t} or t in {0, 1}.
    #[error("jet sits on a pole of the equation")]
    PoleCollision,
    /// Initial data for a series solution sits on a pole.
    #[error("initial data sits on a pole of the equation")]
    SingularInitialData,
    /// The transform needs x(t0) != 0.
    #[error("transform undefined: x vanishes at the expansion point")]
    Undefined,
}

/// Complex number with arbitrary-precision parts.
#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl BigComplex {
    pub fn from_f64(re: f64, im: f64, precision: usize) -> Self {
        let lift = |x: f64| {
            Float::try_from(x)
                .expect("finite float")
                .with_precision(precision)
                .value()
        };
        Self {
            re: lift(re),
            im: lift(im),
        }
    }

    pub fn from_c64(z: Complex64, precision: usize) -> Self {
        Self::from_f64(z.re, z.im, precision)
    }

    pub fn zero() -> Self {
        Self {
            re: Float::ZERO,
            im: Float::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re == Float::ZERO && self.im == Float::ZERO
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `None` exactly when the divisor is zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        let n = o.norm_sqr();
        if n == Float::ZERO {
            return None;
        }
        let p = self.mul(&o.conj());
        Some(Self {
            re: p.re / &n,
            im: p.im / &n,
        })
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        &self.re * &self.re + &self.im * &self.im
    }

    /// |z| as a double; the magnitude loses nothing that matters for
    /// tolerance comparisons.
    pub fn abs_f64(&self) -> f64 {
        self.norm_sqr().to_f64().value().sqrt()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().value(), self.im.to_f64().value())
    }
}

/// The four eigenvalue parameters of the equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaParams {
    pub theta: [Complex64; 4],
}

impl ThetaParams {
    pub fn new(t1: Complex64, t2: Complex64, t3: Complex64, t4: Complex64) -> Self {
        Self {
            theta: [t1, t2, t3, t4],
        }
    }

    pub fn real(t1: f64, t2: f64, t3: f64, t4: f64) -> Self {
        Self::new(t1.into(), t2.into(), t3.into(), t4.into())
    }

    /// Half the sum of the thetas, the shift of the Okamoto transformation.
    pub fn phi(&self) -> Complex64 {
        self.theta.iter().sum::<Complex64>() / 2.0
    }
}

/// The (alpha, beta, gamma, delta) constants of the equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PviParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

/// alpha = (theta4 - 1)^2 / 2, beta = -theta1^2 / 2, gamma = theta3^2 / 2,
/// delta = (1 - theta2^2) / 2.
pub fn params_from_theta(th: &ThetaParams) -> PviParams {
    let [t1, t2, t3, t4] = th.theta;
    PviParams {
        alpha: (t4 - 1.0) * (t4 - 1.0) / 2.0,
        beta: -t1 * t1 / 2.0,
        gamma: t3 * t3 / 2.0,
        delta: (1.0 - t2 * t2) / 2.0,
    }
}

fn params_close(a: &PviParams, b: &PviParams) -> bool {
    let close = |x: Complex64, y: Complex64| (x - y).norm() <= 1e-13 * (1.0 + x.norm() + y.norm());
    close(a.alpha, b.alpha)
        && close(a.beta, b.beta)
        && close(a.gamma, b.gamma)
        && close(a.delta, b.delta)
}

/// Sign flips of theta1..theta3 and the reflection theta4 -> 2 - theta4.
/// All of them fix the equation parameters, which the function asserts.
pub fn trivial_sym(th: &ThetaParams, negate: [bool; 3], reflect4: bool) -> ThetaParams {
    let mut t = th.theta;
    for (ti, n) in t.iter_mut().zip(negate) {
        if n {
            *ti = -*ti;
        }
    }
    if reflect4 {
        t[3] = 2.0 - t[3];
    }
    let out = ThetaParams { theta: t };
    assert!(
        params_close(&params_from_theta(th), &params_from_theta(&out)),
        "parameter map must be blind to the trivial symmetries"
    );
    out
}

/// Truncated Taylor series sum c_n (t - center)^n.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    pub center: BigComplex,
    pub coeffs: Vec<BigComplex>,
}

impl PowerSeries {
    pub fn constant(center: BigComplex, value: BigComplex, len: usize) -> Self {
        assert!(len >= 1);
        let mut coeffs = vec![BigComplex::zero(); len];
        coeffs[0] = value;
        Self { center, coeffs }
    }

    /// The coordinate t itself: constant term `center`, slope one.
    pub fn coordinate(center: BigComplex, len: usize, precision: usize) -> Self {
        assert!(len >= 2);
        let mut coeffs = vec![BigComplex::zero(); len];
        coeffs[0] = center.clone();
        coeffs[1] = BigComplex::from_f64(1.0, 0.0, precision);
        Self { center, coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncated(&self, len: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(len);
        coeffs.resize(len, BigComplex::zero());
        Self {
            center: self.center.clone(),
            coeffs,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.len().max(o.len());
        let z = BigComplex::zero();
        let coeffs = (0..len)
            .map(|k| {
                self.coeffs
                    .get(k)
                    .unwrap_or(&z)
                    .add(o.coeffs.get(k).unwrap_or(&z))
            })
            .collect();
        Self {
            center: self.center.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let len = self.len().max(o.len());
        let z = BigComplex::zero();
        let coeffs = (0..len)
            .map(|k| {
                self.coeffs
                    .get(k)
                    .unwrap_or(&z)
                    .sub(o.coeffs.get(k).unwrap_or(&z))
            })
            .collect();
        Self {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Product truncated to the longer operand's length.
    pub fn mul(&self, o: &Self) -> Self {
        let len = self.len().max(o.len());
        let mut coeffs = vec![BigComplex::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self {
            center: self.center.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, s: &BigComplex) -> Self {
        Self {
            center: self.center.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Termwise derivative, zero-padded back to the original length; the
    /// padded top coefficients are placeholders, so only orders below
    /// len - (number of derivatives taken) are meaningful.
    pub fn derivative(&self) -> Self {
        let prec = self.precision();
        let mut coeffs: Vec<BigComplex> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.mul(&BigComplex::from_f64(n as f64, 0.0, prec)))
            .collect();
        coeffs.resize(self.len(), BigComplex::zero());
        Self {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Reciprocal series by Newton iteration; the constant term must be a
    /// unit.
    pub fn recip(&self) -> Result<Self, PviError> {
        let len = self.len();
        let c0 = &self.coeffs[0];
        let r0 = BigComplex::from_f64(1.0, 0.0, self.precision())
            .div(c0)
            .ok_or(PviError::PoleCollision)?;
        let mut r = PowerSeries::constant(self.center.clone(), r0, len);
        let two = PowerSeries::constant(
            self.center.clone(),
            BigComplex::from_f64(2.0, 0.0, self.precision()),
            len,
        );
        let mut correct = 1usize;
        while correct < len {
            r = r.mul(&two.sub(&self.mul(&r)));
            correct *= 2;
        }
        Ok(r)
    }

    pub fn div(&self, o: &Self) -> Result<Self, PviError> {
        Ok(self.mul(&o.recip()?))
    }

    /// Horner evaluation at a point.
    pub fn eval(&self, t: &BigComplex) -> BigComplex {
        let dt = t.sub(&self.center);
        let mut acc = BigComplex::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&dt).add(c);
        }
        acc
    }

    /// Working precision, read off the first coefficient carrying one.
    pub fn precision(&self) -> usize {
        self.coeffs
            .iter()
            .map(|c| c.re.precision().max(c.im.precision()))
            .find(|p| *p > 0)
            .unwrap_or(0)
    }
}

struct Lifted {
    alpha: BigComplex,
    beta: BigComplex,
    gamma: BigComplex,
    delta: BigComplex,
}

fn lift_params(p: &PviParams, precision: usize) -> Lifted {
    Lifted {
        alpha: BigComplex::from_c64(p.alpha, precision),
        beta: BigComplex::from_c64(p.beta, precision),
        gamma: BigComplex::from_c64(p.gamma, precision),
        delta: BigComplex::from_c64(p.delta, precision),
    }
}

/// Right-hand side of the equation at a scalar jet (t, y, y').
fn rhs_at(
    t: &BigComplex,
    y: &BigComplex,
    yp: &BigComplex,
    p: &Lifted,
    precision: usize,
) -> Result<BigComplex, PviError> {
    let one = BigComplex::from_f64(1.0, 0.0, precision);
    let ym1 = y.sub(&one);
    let ymt = y.sub(t);
    let tm1 = t.sub(&one);
    if y.is_zero() || ym1.is_zero() || ymt.is_zero() || t.is_zero() || tm1.is_zero() {
        return Err(PviError::PoleCollision);
    }
    let inv = |z: &BigComplex| one.div(z).expect("checked nonzero");
    let half = BigComplex::from_f64(0.5, 0.0, precision);
    let a_term = half
        .mul(&inv(y).add(&inv(&ym1)).add(&inv(&ymt)))
        .mul(&yp.mul(yp));
    let b_term = inv(t).add(&inv(&tm1)).add(&inv(&ymt)).mul(yp);
    let front = y
        .mul(&ym1)
        .mul(&ymt)
        .div(&t.mul(t).mul(&tm1).mul(&tm1))
        .expect("checked nonzero");
    let inner = p
        .alpha
        .add(&p.beta.mul(t).mul(&inv(y)).mul(&inv(y)))
        .add(&p.gamma.mul(&tm1).mul(&inv(&ym1)).mul(&inv(&ym1)))
        .add(
            &p.delta
                .mul(t)
                .mul(&tm1)
                .mul(&inv(&ymt))
                .mul(&inv(&ymt)),
        );
    Ok(a_term.sub(&b_term).add(&front.mul(&inner)))
}

/// y'' minus the right-hand side of the equation at a scalar jet; zero
/// exactly when the jet satisfies the equation at t.
pub fn pvi_residual(
    t: &BigComplex,
    y: &BigComplex,
    yp: &BigComplex,
    ypp: &BigComplex,
    p: &PviParams,
) -> Result<BigComplex, PviError> {
    let precision = t
        .re
        .precision()
        .max(t.im.precision())
        .max(y.re.precision())
        .max(64);
    let lifted = lift_params(p, precision);
    Ok(ypp.sub(&rhs_at(t, y, yp, &lifted, precision)?))
}

/// Residual series y'' - RHS of a candidate series; coefficients of index
/// up to len - 3 are meaningful.
pub fn residual_series(y: &PowerSeries, p: &PviParams) -> Result<PowerSeries, PviError> {
    let precision = y.precision();
    let len = y.len();
    let lp = lift_params(p, precision);
    let center = y.center.clone();
    let one = PowerSeries::constant(
        center.clone(),
        BigComplex::from_f64(1.0, 0.0, precision),
        len,
    );
    let t = PowerSeries::coordinate(center.clone(), len, precision);
    let yp = y.derivative();
    let ypp = yp.derivative();
    let inv_y = y.recip()?;
    let inv_ym1 = y.sub(&one).recip()?;
    let inv_ymt = y.sub(&t).recip()?;
    let inv_t = t.recip()?;
    let inv_tm1 = t.sub(&one).recip()?;
    let half = BigComplex::from_f64(0.5, 0.0, precision);
    let a_term = inv_y
        .add(&inv_ym1)
        .add(&inv_ymt)
        .mul(&yp.mul(&yp))
        .scale(&half);
    let b_term = inv_t.add(&inv_tm1).add(&inv_ymt).mul(&yp);
    let tm1 = t.sub(&one);
    let front = y
        .mul(&y.sub(&one))
        .mul(&y.sub(&t))
        .mul(&inv_t)
        .mul(&inv_t)
        .mul(&inv_tm1)
        .mul(&inv_tm1);
    let inner = PowerSeries::constant(center, lp.alpha, len)
        .add(&t.mul(&inv_y).mul(&inv_y).scale(&lp.beta))
        .add(&tm1.mul(&inv_ym1).mul(&inv_ym1).scale(&lp.gamma))
        .add(&t.mul(&tm1).mul(&inv_ymt).mul(&inv_ymt).scale(&lp.delta));
    let rhs = a_term.sub(&b_term).add(&front.mul(&inner));
    Ok(ypp.sub(&rhs))
}

/// The unique series solution with the given one-jet at t0, to the given
/// order: coefficient n is fixed by requiring residual coefficient n - 2 to
/// vanish, which it does because the right-hand side at that order only
/// involves earlier coefficients.
pub fn series_solution(
    t0: Complex64,
    y0: Complex64,
    y1: Complex64,
    p: &PviParams,
    order: usize,
    precision: usize,
) -> Result<PowerSeries, PviError> {
    assert!(order >= 2, "need at least a two-jet");
    if t0 == Complex64::ZERO
        || t0 == Complex64::ONE
        || y0 == Complex64::ZERO
        || y0 == Complex64::ONE
        || y0 == t0
    {
        return Err(PviError::SingularInitialData);
    }
    let center = BigComplex::from_c64(t0, precision);
    let len = order + 1;
    let mut y = PowerSeries::constant(center, BigComplex::from_c64(y0, precision), len);
    y.coeffs[1] = BigComplex::from_c64(y1, precision);
    for n in 2..=order {
        let res = residual_series(&y, p)?;
        let denom = BigComplex::from_f64((n * (n - 1)) as f64, 0.0, precision);
        y.coeffs[n] = res.coeffs[n - 2]
            .neg()
            .div(&denom)
            .expect("n(n-1) is nonzero");
    }
    Ok(y)
}

/// The auxiliary series
/// 2x = ((t-1) y' - theta1)/y + (y' - 1 - theta2)/(y - t) - (t y' + theta3)/(y - 1).
pub fn x_series(y: &PowerSeries, th: &ThetaParams) -> Result<PowerSeries, PviError> {
    let precision = y.precision();
    let len = y.len();
    let center = y.center.clone();
    let cst = |z: Complex64| {
        PowerSeries::constant(center.clone(), BigComplex::from_c64(z, precision), len)
    };
    let one = cst(Complex64::ONE);
    let t = PowerSeries::coordinate(center.clone(), len, precision);
    let yp = y.derivative();
    let term1 = t.sub(&one).mul(&yp).sub(&cst(th.theta[0])).div(y)?;
    let term2 = yp.sub(&one).sub(&cst(th.theta[1])).div(&y.sub(&t))?;
    let term3 = t.mul(&yp).add(&cst(th.theta[2])).div(&y.sub(&one))?;
    let half = BigComplex::from_f64(0.5, 0.0, precision);
    Ok(term1.add(&term2).sub(&term3).scale(&half))
}

/// The Okamoto transformation: y -> y + phi/x and theta -> theta - phi with
/// phi half the theta sum. When phi = 0 both the series and the parameters
/// are returned unchanged.
pub fn okamoto_transform(
    y: &PowerSeries,
    th: &ThetaParams,
) -> Result<(PowerSeries, ThetaParams), PviError> {
    let phi = th.phi();
    if phi == Complex64::ZERO {
        return Ok((y.clone(), *th));
    }
    let x = x_series(y, th)?;
    if x.coeffs[0].is_zero() {
        return Err(PviError::Undefined);
    }
    let precision = y.precision();
    let shifted = y.add(&x.recip()?.scale(&BigComplex::from_c64(phi, precision)));
    let theta = ThetaParams {
        theta: th.theta.map(|t| t - phi),
    };
    Ok((shifted, theta))
}

/// Relative residual |y'' - RHS| / (1 + |y''| + |RHS|) of a series at a
/// point, from its evaluated two-jet.
pub fn relative_residual_at(
    y: &PowerSeries,
    p: &PviParams,
    t: &BigComplex,
) -> Result<f64, PviError> {
    let yp = y.derivative();
    let ypp = yp.derivative();
    let yv = y.eval(t);
    let ypv = yp.eval(t);
    let yppv = ypp.eval(t);
    let precision = y.precision().max(64);
    let lifted = lift_params(p, precision);
    let rhs = rhs_at(t, &yv, &ypv, &lifted, precision)?;
    let num = yppv.sub(&rhs).abs_f64();
    Ok(num / (1.0 + yppv.abs_f64() + rhs.abs_f64()))
}
