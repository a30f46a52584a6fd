//! Command-line front end: exact symbol evaluation, symmetry orbits,
//! verification sweeps, length geometry, series solutions, and trace
//! coordinates, all emitted as JSON with exact values carried as sign plus
//! rational square (or plain rational strings), never only as floats.
//!
//! Exit codes: 0 success (including well-posed negative answers such as
//! "not realizable"), 1 verification failure, 2 malformed input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use regge_core::exact::{ExactComplex, SignedSqrtRational};
use regge_core::fuchs::{
    self, coordinates, lambda13_from, okamoto_coords, reconstruct, theta_of, MatrixTriple,
    TraceCoords,
};
use regge_core::pvi::{
    self, okamoto_transform, params_from_theta, relative_residual_at, series_solution, BigComplex,
    PowerSeries, ThetaParams,
};
use regge_core::racah::{sixj, symmetry_orbit, u_coeff, SixJLabels};
use regge_core::tetra::{
    cayley_menger_det, is_euclidean_tetra, realize_from_lengths, regge_lengths, EdgeLengths,
};
use regge_core::verify::{self, surd_parts, SweepReport};

#[derive(Parser)]
#[command(
    name = "regge",
    version,
    about = "Exact 6j symbols, their symmetries, and the matching Painleve VI transform"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Labels {
    /// Six nonnegative integer labels (twice the spins): a b c d e f
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    e: u32,
    f: u32,
}

impl Labels {
    fn to_sixj(&self) -> SixJLabels {
        SixJLabels::new(self.a, self.b, self.c, self.d, self.e, self.f)
    }
}

#[derive(Args)]
struct OutputOpt {
    /// Write the JSON output to this file instead of stdout
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact 6j symbol of six integer labels
    Sixj {
        #[command(flatten)]
        labels: Labels,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Recoupling coefficient: the 6j symbol with its dimension weight and sign
    U {
        #[command(flatten)]
        labels: Labels,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Full symmetry orbit of a label tuple with the common value
    Orbit {
        #[command(flatten)]
        labels: Labels,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Run a verification sweep and report failures as JSON lines
    Verify {
        /// Which invariant family to sweep
        suite: Suite,
        /// Label bound for exhaustive sweeps (default: the documented range)
        #[arg(long)]
        max: Option<u32>,
        /// Sample count for randomized sweeps (default: the documented count)
        #[arg(long)]
        samples: Option<u64>,
        /// Seed determining every random draw
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Mantissa bits for series arithmetic
        #[arg(long, default_value_t = 96)]
        precision_bits: usize,
        /// Truncation order for series solutions
        #[arg(long, default_value_t = 16)]
        order: usize,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Edge-length geometry of tetrahedra
    Tetra {
        #[command(subcommand)]
        cmd: TetraCmd,
    },
    /// Series solutions of the sixth Painleve equation
    Pvi {
        #[command(subcommand)]
        cmd: PviCmd,
    },
    /// Residue triples and their trace coordinates
    Fuchs {
        #[command(subcommand)]
        cmd: FuchsCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Regge,
    Orbit,
    Oracle,
    U3,
    Duality,
    Cm,
    Lemma,
    Theorem,
    Backlund,
    Spherical,
}

#[derive(Args)]
struct RationalLengths {
    /// Six edge lengths as rationals like 3 or 7/2, in slot order a b c d e f
    a: String,
    b: String,
    c: String,
    d: String,
    e: String,
    f: String,
}

#[derive(Subcommand)]
enum TetraCmd {
    /// Exact Cayley-Menger determinant and realizability of six lengths
    Cm {
        #[command(flatten)]
        lengths: RationalLengths,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Apply the length Regge map; report determinants and realizability
    Regge {
        #[command(flatten)]
        lengths: RationalLengths,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Vertex coordinates realizing six lengths, when they are Euclidean
    Realize {
        a: f64,
        b: f64,
        c: f64,
        d: f64,
        e: f64,
        f: f64,
        #[command(flatten)]
        out: OutputOpt,
    },
}

#[derive(Args)]
struct JetArgs {
    /// Expansion point (must avoid 0 and 1)
    #[arg(long, allow_negative_numbers = true)]
    t0: f64,
    /// Solution value at t0 (must avoid 0, 1, t0)
    #[arg(long, allow_negative_numbers = true)]
    y0: f64,
    /// Solution slope at t0
    #[arg(long, allow_negative_numbers = true)]
    y1: f64,
    /// Four eigenvalue parameters, comma separated: t1,t2,t3,t4
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta: Vec<f64>,
    /// Truncation order of the series
    #[arg(long, default_value_t = 16)]
    order: usize,
    /// Mantissa bits of the coefficients
    #[arg(long, default_value_t = 96)]
    precision_bits: usize,
}

#[derive(Subcommand)]
enum PviCmd {
    /// Taylor solution of the equation from a one-jet at t0
    Solve {
        #[command(flatten)]
        jet: JetArgs,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Transform the solution and shift the parameters
    Okamoto {
        #[command(flatten)]
        jet: JetArgs,
        #[command(flatten)]
        out: OutputOpt,
    },
}

#[derive(Args)]
struct VectorArgs {
    /// First vector, comma separated: x,y,z
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v1: Vec<String>,
    /// Second vector
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v2: Vec<String>,
    /// Third vector
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v3: Vec<String>,
    /// Exact rational arithmetic (components as rationals, integer lengths)
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Double precision arithmetic
    #[arg(long)]
    float: bool,
}

#[derive(Subcommand)]
enum FuchsCmd {
    /// Trace coordinates of the Hermitian triple built from three vectors
    Coords {
        #[command(flatten)]
        vectors: VectorArgs,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Trace coordinates before and after the parameter shift
    Okamoto {
        #[command(flatten)]
        vectors: VectorArgs,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Rebuild a residue triple from theta, lambda12, lambda23
    Reconstruct {
        /// Four theta values, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        theta: Vec<f64>,
        #[arg(long, allow_negative_numbers = true)]
        lambda12: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda23: f64,
        #[command(flatten)]
        out: OutputOpt,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Sixj { labels, out } => {
            let l = labels.to_sixj();
            let v = sixj(&l);
            let mut obj = json!({
                "labels": l.as_array(),
                "valid": l.is_valid(),
                "value": surd_json(&v),
                "u": surd_json(&u_coeff(&l)),
                "float": v.to_f64(),
            });
            if !l.is_valid() {
                obj["failing_triads"] = json!(l.failing_triads());
            }
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::U { labels, out } => {
            let l = labels.to_sixj();
            let s = sixj(&l);
            let u = u_coeff(&l);
            let mut obj = json!({
                "labels": l.as_array(),
                "valid": l.is_valid(),
                "value": surd_json(&u),
                "sixj": surd_json(&s),
                "float": u.to_f64(),
            });
            if !l.is_valid() {
                obj["failing_triads"] = json!(l.failing_triads());
            }
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { labels, out } => {
            let l = labels.to_sixj();
            if !l.is_valid() {
                return Err(format!(
                    "labels {:?} do not couple: failing triads {:?}",
                    l.as_array(),
                    l.failing_triads()
                ));
            }
            let v = sixj(&l);
            let orbit = symmetry_orbit(&l);
            let constant = orbit.iter().all(|m| sixj(m) == v);
            let obj = json!({
                "labels": l.as_array(),
                "value": surd_json(&v),
                "float": v.to_f64(),
                "orbit_size": orbit.len(),
                "constant": constant,
                "orbit": orbit.iter().map(|m| m.as_array()).collect::<Vec<_>>(),
            });
            emit(vec![obj], &out)?;
            Ok(if constant {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            suite,
            max,
            samples,
            seed,
            precision_bits,
            order,
            out,
        } => {
            let reports = run_suite(suite, max, samples, seed, precision_bits, order);
            let pass = reports.iter().all(SweepReport::pass);
            let mut lines = Vec::new();
            for r in &reports {
                for (i, f) in r.failures.iter().enumerate() {
                    lines.push(json!({
                        "suite": r.suite,
                        "failure_index": i,
                        "detail": f,
                    }));
                }
                lines.push(json!({
                    "suite": r.suite,
                    "checked": r.checked,
                    "skipped": r.skipped,
                    "failed": r.failed,
                    "max_deviation": r.max_deviation,
                    "pass": r.pass(),
                    "notes": r.notes,
                }));
            }
            emit(lines, &out)?;
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Tetra { cmd } => run_tetra(cmd),
        Command::Pvi { cmd } => run_pvi(cmd),
        Command::Fuchs { cmd } => run_fuchs(cmd),
    }
}

fn run_suite(
    suite: Suite,
    max: Option<u32>,
    samples: Option<u64>,
    seed: u64,
    precision_bits: usize,
    order: usize,
) -> Vec<SweepReport> {
    match suite {
        Suite::Regge => vec![verify::regge_sweep(max.unwrap_or(8))],
        Suite::Orbit => vec![verify::orbit_sweep(max.unwrap_or(8))],
        Suite::Oracle => vec![verify::oracle_sweep(max.unwrap_or(6))],
        Suite::U3 => vec![verify::u3_sweep(max.unwrap_or(5))],
        Suite::Duality => vec![verify::duality_sweep(max.unwrap_or(4))],
        Suite::Cm => vec![verify::cm_sweep(samples.unwrap_or(1000), seed)],
        Suite::Lemma => vec![verify::lemma_sweep(samples.unwrap_or(500), seed, 1e-10)],
        Suite::Theorem => {
            let n = samples.unwrap_or(500);
            vec![
                verify::theorem_float_sweep(n, seed, 1e-10),
                verify::theorem_exact_sweep(n.div_ceil(10), seed),
            ]
        }
        Suite::Backlund => vec![verify::backlund_sweep(
            samples.unwrap_or(20),
            seed,
            order,
            precision_bits,
            1e-10,
        )],
        Suite::Spherical => vec![verify::spherical_sweep(samples.unwrap_or(500), seed, 1e-9)],
    }
}

fn run_tetra(cmd: TetraCmd) -> Result<ExitCode, String> {
    match cmd {
        TetraCmd::Cm { lengths, out } => {
            let l = parse_lengths(&lengths)?;
            let det = cayley_menger_det(&l);
            let obj = json!({
                "lengths": rational_lengths_json(&l),
                "det": det.to_string(),
                "det_float": regge_core::exact::to_f64(&det),
                "realizable": is_euclidean_tetra(&l),
            });
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
        TetraCmd::Regge { lengths, out } => {
            let l = parse_lengths(&lengths)?;
            let obj = match regge_lengths(&l) {
                Ok(img) => {
                    let before = cayley_menger_det(&l);
                    let after = cayley_menger_det(&img);
                    json!({
                        "admissible": true,
                        "input": rational_lengths_json(&l),
                        "image": rational_lengths_json(&img),
                        "det_before": before.to_string(),
                        "det_after": after.to_string(),
                        "det_preserved": before == after,
                        "realizable_before": is_euclidean_tetra(&l),
                        "realizable_after": is_euclidean_tetra(&img),
                    })
                }
                Err(e) => json!({
                    "admissible": false,
                    "input": rational_lengths_json(&l),
                    "reason": e.to_string(),
                }),
            };
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
        TetraCmd::Realize {
            a,
            b,
            c,
            d,
            e,
            f,
            out,
        } => {
            let l = EdgeLengths::new(a, b, c, d, e, f);
            let obj = match realize_from_lengths(&l) {
                Ok(vertices) => json!({
                    "realizable": true,
                    "lengths": float_lengths_json(&l),
                    "vertices": vertices,
                }),
                Err(e) => json!({
                    "realizable": false,
                    "lengths": float_lengths_json(&l),
                    "reason": e.to_string(),
                }),
            };
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_pvi(cmd: PviCmd) -> Result<ExitCode, String> {
    match cmd {
        PviCmd::Solve { jet, out } => {
            let (y, th) = solve_jet(&jet)?;
            let p = params_from_theta(&th);
            let probe = BigComplex::from_f64(jet.t0 + 0.01, 0.0, jet.precision_bits);
            let residual = relative_residual_at(&y, &p, &probe).map_err(|e| e.to_string())?;
            let obj = json!({
                "t0": jet.t0,
                "y0": jet.y0,
                "y1": jet.y1,
                "theta": jet.theta,
                "params": params_json(&p),
                "order": jet.order,
                "precision_bits": jet.precision_bits,
                "coefficients": series_json(&y),
                "residual_at_t0_plus_0_01": residual,
            });
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
        PviCmd::Okamoto { jet, out } => {
            let (y, th) = solve_jet(&jet)?;
            let obj = match okamoto_transform(&y, &th) {
                Ok((yh, th2)) => {
                    let p2 = params_from_theta(&th2);
                    let probe = BigComplex::from_f64(jet.t0 + 0.01, 0.0, jet.precision_bits);
                    let residual =
                        relative_residual_at(&yh, &p2, &probe).map_err(|e| e.to_string())?;
                    json!({
                        "defined": true,
                        "t0": jet.t0,
                        "theta": jet.theta,
                        "phi": complex_json(th.phi()),
                        "theta_shifted": th2.theta.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                        "params_shifted": params_json(&p2),
                        "coefficients": series_json(&yh),
                        "image_residual_at_t0_plus_0_01": residual,
                    })
                }
                Err(e) => json!({
                    "defined": false,
                    "t0": jet.t0,
                    "theta": jet.theta,
                    "reason": e.to_string(),
                }),
            };
            emit(vec![obj], &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn solve_jet(jet: &JetArgs) -> Result<(PowerSeries, ThetaParams), String> {
    expect_len(&jet.theta, 4, "--theta")?;
    let th = ThetaParams::real(jet.theta[0], jet.theta[1], jet.theta[2], jet.theta[3]);
    let p = params_from_theta(&th);
    let y = series_solution(
        Complex64::new(jet.t0, 0.0),
        Complex64::new(jet.y0, 0.0),
        Complex64::new(jet.y1, 0.0),
        &p,
        jet.order,
        jet.precision_bits,
    )
    .map_err(|e| e.to_string())?;
    Ok((y, th))
}

fn run_fuchs(cmd: FuchsCmd) -> Result<ExitCode, String> {
    match cmd {
        FuchsCmd::Coords { vectors, out } => {
            let lines = fuchs_coords_json(&vectors, false)?;
            emit(lines, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        FuchsCmd::Okamoto { vectors, out } => {
            let lines = fuchs_coords_json(&vectors, true)?;
            emit(lines, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        FuchsCmd::Reconstruct {
            theta,
            lambda12,
            lambda23,
            out,
        } => {
            expect_len(&theta, 4, "--theta")?;
            let th: [Complex64; 4] = [
                Complex64::new(theta[0], 0.0),
                Complex64::new(theta[1], 0.0),
                Complex64::new(theta[2], 0.0),
                Complex64::new(theta[3], 0.0),
            ];
            let l12 = Complex64::new(lambda12, 0.0);
            let l23 = Complex64::new(lambda23, 0.0);
            let l13 = lambda13_from(&th, &l12, &l23);
            // tau and tau' are the roots of x^2 - s x + p with known sum and
            // product; either choice reconstructs a mirror pair of triples
            let s = th[1] * l13 + th[0] * l23 - th[0] * th[1] * th[2] + th[2] * l12;
            let prod = l12 * l23 * l13;
            let disc = (s * s - 4.0 * prod).sqrt();
            let tau = (s + disc) / 2.0;
            let tau_prime = (s - disc) / 2.0;
            let coords = TraceCoords {
                theta: th,
                lambda12: l12,
                lambda23: l23,
                lambda13: l13,
                tau,
                tau_prime,
            };
            let obj = match reconstruct(&coords, 1e-9) {
                Ok(t) => {
                    let back = coordinates(&t, &coords.theta, 1e-9)
                        .map_err(|e| format!("round trip failed: {e}"))?;
                    let dev = [
                        (back.lambda12 - coords.lambda12).norm(),
                        (back.lambda23 - coords.lambda23).norm(),
                        (back.lambda13 - coords.lambda13).norm(),
                        (back.tau - coords.tau).norm(),
                        (back.tau_prime - coords.tau_prime).norm(),
                    ]
                    .into_iter()
                    .fold(0.0, f64::max);
                    json!({
                        "ok": true,
                        "coords": coords_json_float(&coords),
                        "a1": mat_json(&t.a1),
                        "a2": mat_json(&t.a2),
                        "a3": mat_json(&t.a3),
                        "round_trip_deviation": dev,
                    })
                }
                Err(e) => json!({
                    "ok": false,
                    "coords": coords_json_float(&coords),
                    "reason": e.to_string(),
                }),
            };
            let ok = obj["ok"].as_bool().unwrap_or(false);
            emit(vec![obj], &out)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Coordinates (and optionally their shift) for the triple named by the
/// vector arguments, in exact or double arithmetic.
fn fuchs_coords_json(v: &VectorArgs, with_shift: bool) -> Result<Vec<Value>, String> {
    expect_len(&v.v1, 3, "--v1")?;
    expect_len(&v.v2, 3, "--v2")?;
    expect_len(&v.v3, 3, "--v3")?;
    if v.exact {
        let parse = |comps: &[String]| -> Result<[BigRational; 3], String> {
            Ok([
                parse_rational(&comps[0])?,
                parse_rational(&comps[1])?,
                parse_rational(&comps[2])?,
            ])
        };
        let (v1, v2, v3) = (parse(&v.v1)?, parse(&v.v2)?, parse(&v.v3)?);
        let t = MatrixTriple::from_lattice_vectors(&v1, &v2, &v3);
        let theta = exact_thetas(&t)?;
        let c = coordinates(&t, &theta, 0.0).map_err(|e| e.to_string())?;
        let mut obj = json!({
            "arithmetic": "exact",
            "coords": coords_json_exact(&c),
        });
        if with_shift {
            obj["coords_shifted"] = coords_json_exact(&okamoto_coords(&c));
        }
        Ok(vec![obj])
    } else {
        let parse = |comps: &[String]| -> Result<[f64; 3], String> {
            Ok([
                parse_float(&comps[0])?,
                parse_float(&comps[1])?,
                parse_float(&comps[2])?,
            ])
        };
        let (v1, v2, v3) = (parse(&v.v1)?, parse(&v.v2)?, parse(&v.v3)?);
        let t = MatrixTriple::from_vectors(v1, v2, v3);
        let theta = [
            theta_of(&t.a1),
            theta_of(&t.a2),
            theta_of(&t.a3),
            theta_of(&t.a4()),
        ];
        let c = coordinates(&t, &theta, 1e-9).map_err(|e| e.to_string())?;
        let mut obj = json!({
            "arithmetic": "float",
            "coords": coords_json_float(&c),
        });
        if with_shift {
            obj["coords_shifted"] = coords_json_float(&okamoto_coords(&c));
        }
        Ok(vec![obj])
    }
}

/// Rational theta values of an exact Hermitian triple; errors when a vector
/// length is irrational.
fn exact_thetas(t: &MatrixTriple<ExactComplex>) -> Result<[ExactComplex; 4], String> {
    let theta_sq = |a: &fuchs::Mat2<ExactComplex>| {
        let tr = fuchs::tr2(a, a);
        &tr.re + &tr.re
    };
    let sqrt = |q: BigRational| -> Result<ExactComplex, String> {
        regge_core::exact::sqrt_exact(&q)
            .map(ExactComplex::from_real)
            .ok_or_else(|| {
                format!("length squared {q} is not a perfect square; exact mode needs integer-length vectors")
            })
    };
    Ok([
        sqrt(theta_sq(&t.a1))?,
        sqrt(theta_sq(&t.a2))?,
        sqrt(theta_sq(&t.a3))?,
        sqrt(theta_sq(&t.a4()))?,
    ])
}

fn expect_len<T>(items: &[T], n: usize, flag: &str) -> Result<(), String> {
    if items.len() == n {
        Ok(())
    } else {
        Err(format!(
            "{flag} needs {n} comma separated values, got {}",
            items.len()
        ))
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
}

fn parse_float(s: &str) -> Result<f64, String> {
    f64::from_str(s.trim()).map_err(|e| format!("bad number {s:?}: {e}"))
}

fn parse_lengths(l: &RationalLengths) -> Result<EdgeLengths<BigRational>, String> {
    Ok(EdgeLengths::new(
        parse_rational(&l.a)?,
        parse_rational(&l.b)?,
        parse_rational(&l.c)?,
        parse_rational(&l.d)?,
        parse_rational(&l.e)?,
        parse_rational(&l.f)?,
    ))
}

fn surd_json(v: &SignedSqrtRational) -> Value {
    let (sign, num, den) = surd_parts(v);
    json!({ "sign": sign, "square_num": num, "square_den": den })
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn exact_complex_json(z: &ExactComplex) -> Value {
    json!({ "re": z.re.to_string(), "im": z.im.to_string() })
}

fn rational_lengths_json(l: &EdgeLengths<BigRational>) -> Value {
    let [a, b, c, d, e, f] = l.as_array().map(|x| x.to_string());
    json!({ "a": a, "b": b, "c": c, "d": d, "e": e, "f": f })
}

fn float_lengths_json(l: &EdgeLengths<f64>) -> Value {
    let [a, b, c, d, e, f] = l.as_array();
    json!({ "a": a, "b": b, "c": c, "d": d, "e": e, "f": f })
}

fn params_json(p: &pvi::PviParams) -> Value {
    json!({
        "alpha": complex_json(p.alpha),
        "beta": complex_json(p.beta),
        "gamma": complex_json(p.gamma),
        "delta": complex_json(p.delta),
    })
}

fn series_json(y: &PowerSeries) -> Value {
    json!(y
        .coeffs
        .iter()
        .map(|c| complex_json(c.to_c64()))
        .collect::<Vec<_>>())
}

fn mat_json(a: &fuchs::Mat2<Complex64>) -> Value {
    json!(a.m.map(|row| row.map(complex_json)))
}

fn coords_json_float(c: &TraceCoords<Complex64>) -> Value {
    json!({
        "theta": c.theta.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
        "lambda12": complex_json(c.lambda12),
        "lambda23": complex_json(c.lambda23),
        "lambda13": complex_json(c.lambda13),
        "tau": complex_json(c.tau),
        "tau_prime": complex_json(c.tau_prime),
    })
}

fn coords_json_exact(c: &TraceCoords<ExactComplex>) -> Value {
    json!({
        "theta": c.theta.iter().map(exact_complex_json).collect::<Vec<_>>(),
        "lambda12": exact_complex_json(&c.lambda12),
        "lambda23": exact_complex_json(&c.lambda23),
        "lambda13": exact_complex_json(&c.lambda13),
        "tau": exact_complex_json(&c.tau),
        "tau_prime": exact_complex_json(&c.tau_prime),
    })
}

/// One JSON object per line, to stdout or to the requested file.
fn emit(lines: Vec<Value>, out: &OutputOpt) -> Result<(), String> {
    let mut text = String::new();
    for l in &lines {
        text.push_str(&l.to_string());
        text.push('\n');
    }
    match &out.json {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing output: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
