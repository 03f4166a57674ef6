//! Command-line front end shared by the `gm2` binary and the tests.
//!
//! Every command produces a [`CommandResult`], rendered either as an aligned
//! table or as JSON of the form
//! `{"command", "inputs", "value": {"mid", "rad"}, "verdict", "details"}`.
//! Numbers are always decimal strings.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::NumberField;
use crate::analytic::{Precision, RealBall};
use crate::bounds::{
    audit_inequalities, bound_value, param_schedule, verify_bound, AuditSelection, AuditSuite, BoundArgs,
    BoundKind, BoundReport, ScheduleKind, Target, Verdict,
};
use crate::curves::{ecc_primes, is_torsion_curve, normalized_height_curve, power_image, Curve};
use crate::error::{Error, Result};
use crate::extrapolation::extrapolation_report;
use crate::heights::{height_algebraic, is_torsion_point, point_height, power_point, Point2};
use crate::obstruction::{obstruction_bound, obstruction_index, AuxPoly, BaseField};
use crate::parse::{parse_field_poly2, parse_int_poly1, parse_int_poly2};
use crate::siegel::construct_auxiliary;

/// Overrides the default working precision (bits) when `--prec` is absent.
pub const PREC_ENV: &str = "GM2_PREC";

const DEFAULT_PREC: usize = 256;
const DEFAULT_MAX_PREC: usize = 16384;
const DEFAULT_TOL: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(name = "gm2", version, about = "Heights and explicit height bounds on the two-dimensional torus")]
struct Cli {
    /// Working precision in bits [default: 256, or $GM2_PREC]
    #[arg(long, global = true)]
    prec: Option<usize>,
    /// Largest precision the refinement ladder may reach
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PREC)]
    max_prec: usize,
    /// Emit JSON instead of a table
    #[arg(long, global = true)]
    json: bool,
    /// Target absolute error for quadratures
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct PointArgs {
    /// `Q`, `zeta_m`, or a monic irreducible polynomial in t
    #[arg(long, default_value = "Q")]
    field: String,
    /// First coordinate as a polynomial in t
    #[arg(long)]
    x: String,
    /// Second coordinate as a polynomial in t
    #[arg(long)]
    y: String,
}

impl PointArgs {
    fn point(&self) -> Result<Point2> {
        Point2::parse(&self.field, &self.x, &self.y)
    }

    fn echo(&self, inputs: &mut Map<String, Value>) {
        inputs.insert("field".into(), self.field.clone().into());
        inputs.insert("x".into(), self.x.clone().into());
        inputs.insert("y".into(), self.y.clone().into());
    }
}

#[derive(Args, Debug, Clone, Default)]
struct NumArgs {
    #[arg(long)]
    omega: Option<u64>,
    /// Absolute degree `D`
    #[arg(long)]
    degree: Option<u64>,
    /// Relative degree `d`
    #[arg(long)]
    d: Option<u64>,
    /// Degree of the torsion curve `B`
    #[arg(long)]
    deg_b: Option<u64>,
}

impl From<&NumArgs> for BoundArgs {
    fn from(a: &NumArgs) -> Self {
        BoundArgs { omega: a.omega, degree: a.degree, d: a.d, deg_b: a.deg_b }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Weil height of an algebraic number given by its minimal polynomial
    Height {
        #[arg(long)]
        minpoly: String,
    },
    /// Height of a point of the torus
    PointHeight(PointArgs),
    /// Whether both coordinates are roots of unity
    Torsion(PointArgs),
    /// The point raised to the l-th power
    Power {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        l: u64,
    },
    /// Least degree of a curve over the base field through the point
    Obstruction {
        #[command(flatten)]
        point: PointArgs,
        /// Conductor of a cyclotomic base field inside the point's field
        #[arg(long)]
        base_m: Option<u64>,
    },
    /// Small auxiliary polynomial vanishing to order T at the point
    Siegel {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        t: u32,
        /// Defaults to the obstruction index of the point
        #[arg(long)]
        omega: Option<u32>,
    },
    /// Vanishing order of the Frobenius conjugate at the p-th power point
    Extrapolate {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        t: u32,
        /// Auxiliary polynomial in x, y (coefficients in t = zeta_m with --base-m);
        /// built with `siegel` when absent
        #[arg(long)]
        f: Option<String>,
        /// Degree parameter; defaults to deg F
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        omega: Option<u32>,
        #[arg(long)]
        base_m: Option<u64>,
    },
    /// Normalized height (log Mahler measure) of a plane curve
    CurveHeight {
        #[arg(long)]
        curve: String,
    },
    /// Whether the curve is a torsion curve x^a y^b = zeta
    CurveTorsion {
        #[arg(long)]
        curve: String,
    },
    /// Image of the curve under (x, y) -> (x^l, y^l)
    PowerImage {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        l: u32,
    },
    /// Primes up to the bound at which the power image loses degree
    Ecc {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Value of an explicit lower bound
    Bound {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        args: NumArgs,
    },
    /// Parameter schedule T, L, N of an auxiliary construction
    Params {
        #[arg(long)]
        schedule: String,
        #[command(flatten)]
        args: NumArgs,
    },
    /// Certified comparison of a computed height with a lower bound
    Verify {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        curve: Option<String>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    /// Grid audits of the auxiliary inequalities
    Audit {
        /// Suites to run (repeatable or comma separated); all by default
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        /// Grid values of omega' or D (comma separated)
        #[arg(long, value_delimiter = ',')]
        grid: Vec<u64>,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Height { .. } => "height",
            Cmd::PointHeight(_) => "point-height",
            Cmd::Torsion(_) => "torsion",
            Cmd::Power { .. } => "power",
            Cmd::Obstruction { .. } => "obstruction",
            Cmd::Siegel { .. } => "siegel",
            Cmd::Extrapolate { .. } => "extrapolate",
            Cmd::CurveHeight { .. } => "curve-height",
            Cmd::CurveTorsion { .. } => "curve-torsion",
            Cmd::PowerImage { .. } => "power-image",
            Cmd::Ecc { .. } => "ecc",
            Cmd::Bound { .. } => "bound",
            Cmd::Params { .. } => "params",
            Cmd::Verify { .. } => "verify",
            Cmd::Audit { .. } => "audit",
        }
    }
}

/// Outcome of one invocation.
#[derive(Clone, Debug)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub value: Option<RealBall>,
    pub verdict: Option<Verdict>,
    pub details: Map<String, Value>,
    /// Diagnostic for input, domain and precision errors.
    pub error: Option<String>,
    /// 0 success, 1 failed verdict, 2 input or domain error, 3 undecided.
    pub exit_code: i32,
    /// Rendered output (JSON when `--json` was given).
    pub output: String,
}

impl CommandResult {
    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("command".into(), self.command.clone().into());
        o.insert("inputs".into(), Value::Object(self.inputs.clone()));
        if let Some(v) = &self.value {
            o.insert("value".into(), ball_json(v));
        }
        if let Some(v) = self.verdict {
            o.insert("verdict".into(), v.to_string().into());
        }
        let mut details = self.details.clone();
        if let Some(e) = &self.error {
            details.insert("error".into(), e.clone().into());
        }
        o.insert("details".into(), Value::Object(details));
        Value::Object(o)
    }

    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        rows.extend(self.inputs.iter().map(|(k, v)| (format!("input.{k}"), flat(v))));
        if let Some(v) = &self.value {
            rows.push(("value".into(), format!("{} +/- {}", mid(v), v.rad_string())));
        }
        if let Some(v) = self.verdict {
            rows.push(("verdict".into(), v.to_string()));
        }
        let mut tail = Vec::new();
        for (k, v) in &self.details {
            match v {
                Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                    tail.push(format!("{k}:"));
                    tail.extend(items.iter().map(|it| format!("  {}", flat(it))));
                }
                _ => rows.push((k.clone(), flat(v))),
            }
        }
        if let Some(e) = &self.error {
            rows.push(("error".into(), e.clone()));
        }
        let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut s: Vec<String> = rows.iter().map(|(k, v)| format!("{k:<w$}  {v}")).collect();
        s.extend(tail);
        s.join("\n")
    }
}

/// Enough digits to show everything the radius leaves meaningful, plus two.
fn mid(b: &RealBall) -> String {
    let cap = (b.prec() as f64 * std::f64::consts::LOG10_2) as usize;
    b.mid_string((b.significant_digits() + 2).min(cap.max(1)))
}

fn ball_json(b: &RealBall) -> Value {
    json!({ "mid": mid(b), "rad": b.rad_string() })
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.len() == 2 && m.contains_key("mid") && m.contains_key("rad") => {
            format!("{} +/- {}", flat(&m["mid"]), flat(&m["rad"]))
        }
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", flat(v))).collect::<Vec<_>>().join("  "),
        Value::Array(a) => format!("[{}]", a.iter().map(flat).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn pairs_json(p: &[(String, String)]) -> Map<String, Value> {
    p.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect()
}

fn report_json(r: &BoundReport) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), r.kind.clone().into());
    o.insert("inputs".into(), Value::Object(pairs_json(&r.inputs)));
    o.insert("bound".into(), ball_json(&r.bound_value));
    if let Some(c) = &r.compared_against {
        o.insert("compared_against".into(), ball_json(c));
    }
    o.insert("verdict".into(), r.verdict.to_string().into());
    if !r.details.is_empty() {
        o.insert("details".into(), Value::Object(pairs_json(&r.details)));
    }
    Value::Object(o)
}

fn exit_for_verdict(v: Option<Verdict>) -> i32 {
    match v {
        Some(Verdict::Fail) => 1,
        Some(Verdict::Undecided) => 3,
        _ => 0,
    }
}

fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::BoundUnmet { .. } => 1,
        Error::PrecisionExhausted(_) | Error::Undecided(_) | Error::IndeterminateDegree => 3,
        _ => 2,
    }
}

/// The worst verdict: any failure fails, otherwise any undecided is undecided.
fn combine(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
    vs.into_iter().fold(Verdict::Pass, |acc, v| match (acc, v) {
        (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
        (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
        _ => Verdict::Pass,
    })
}

#[derive(Default)]
struct Out {
    inputs: Map<String, Value>,
    value: Option<RealBall>,
    verdict: Option<Verdict>,
    details: Map<String, Value>,
}

impl Out {
    fn input(&mut self, k: &str, v: impl ToString) {
        self.inputs.insert(k.into(), v.to_string().into());
    }

    fn detail(&mut self, k: &str, v: impl Into<Value>) {
        self.details.insert(k.into(), v.into());
    }

    fn report(&mut self, r: &BoundReport) {
        self.inputs.extend(pairs_json(&r.inputs));
        self.value = r.compared_against.clone();
        self.verdict = Some(r.verdict);
        self.detail("bound", ball_json(&r.bound_value));
        for (k, v) in &r.details {
            self.detail(k, v.clone());
        }
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("gm2")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            return CommandResult {
                command: String::new(),
                inputs: Map::new(),
                value: None,
                verdict: None,
                details: Map::new(),
                error: (code != 0).then(|| text.trim_end().to_string()),
                exit_code: code,
                output: text,
            };
        }
    };
    let env_prec = std::env::var(PREC_ENV).ok().and_then(|s| s.trim().parse().ok());
    let bits = cli.prec.or(env_prec).unwrap_or(DEFAULT_PREC);
    let prec = Precision::new(bits, cli.max_prec);
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    let mut out = Out::default();
    let res = dispatch(&cli.cmd, prec, tol, &mut out);
    let (error, exit_code) = match &res {
        Ok(()) => (None, exit_for_verdict(out.verdict)),
        Err(e) => (Some(e.to_string()), exit_for_error(e)),
    };
    let mut r = CommandResult {
        command: cli.cmd.name().into(),
        inputs: out.inputs,
        value: out.value,
        verdict: out.verdict,
        details: out.details,
        error,
        exit_code,
        output: String::new(),
    };
    r.output = if cli.json {
        serde_json::to_string_pretty(&r.to_json()).expect("JSON values serialize")
    } else {
        r.to_table()
    };
    r
}

fn base_field(m: Option<u64>, p: &Point2) -> Result<BaseField> {
    match m {
        None | Some(1) | Some(2) => Ok(BaseField::Rationals),
        Some(m) => BaseField::cyclotomic(m, p.field()),
    }
}

fn dispatch(cmd: &Cmd, prec: Precision, tol: f64, out: &mut Out) -> Result<()> {
    match cmd {
        Cmd::Height { minpoly } => {
            out.input("minpoly", minpoly);
            let f = parse_int_poly1(minpoly)?;
            out.value = Some(height_algebraic(&f, prec)?);
        }
        Cmd::PointHeight(pa) => {
            pa.echo(&mut out.inputs);
            let p = pa.point()?;
            out.value = Some(point_height(&p, prec)?);
            out.detail("h_x", ball_json(&height_algebraic(p.minpoly_x(), prec)?));
            out.detail("h_y", ball_json(&height_algebraic(p.minpoly_y(), prec)?));
        }
        Cmd::Torsion(pa) => {
            pa.echo(&mut out.inputs);
            let p = pa.point()?;
            out.detail("torsion", is_torsion_point(&p));
            out.detail("minpoly_x", p.minpoly_x().to_string());
            out.detail("minpoly_y", p.minpoly_y().to_string());
        }
        Cmd::Power { point, l } => {
            point.echo(&mut out.inputs);
            out.input("l", l);
            let q = power_point(&point.point()?, *l)?;
            out.detail("x", q.x().to_string());
            out.detail("y", q.y().to_string());
            out.value = Some(point_height(&q, prec)?);
        }
        Cmd::Obstruction { point, base_m } => {
            point.echo(&mut out.inputs);
            if let Some(m) = base_m {
                out.input("base_m", m);
            }
            let p = point.point()?;
            let base = base_field(*base_m, &p)?;
            let ob = obstruction_index(&p, &base)?;
            let upper = obstruction_bound(ob.relative_degree);
            out.detail("omega", ob.omega.to_string());
            out.detail("witness", ob.witness.to_string());
            out.detail("relative_degree", ob.relative_degree.to_string());
            out.detail("upper_bound", upper.to_string());
            out.detail("witness_minimal", ob.witness_minimal);
            out.verdict = Some(if ob.omega <= upper { Verdict::Pass } else { Verdict::Fail });
        }
        Cmd::Siegel { point, t, omega } => {
            point.echo(&mut out.inputs);
            out.input("t", t);
            let p = point.point()?;
            let omega = match omega {
                Some(w) => *w,
                None => obstruction_index(&p, &BaseField::Rationals)?.omega,
            };
            out.input("omega", omega);
            let s = construct_auxiliary(&p, *t, omega, prec)?;
            out.value = Some(s.height_f.clone());
            out.verdict = Some(if s.met_bound { Verdict::Pass } else { Verdict::Fail });
            out.detail("F", s.f.to_string());
            out.detail("L", s.l.to_string());
            out.detail("degree", s.f.total_degree().to_string());
            out.detail("bound", ball_json(&s.bound));
            out.detail("unknowns", s.n.to_string());
            out.detail("rank", s.r.to_string());
        }
        Cmd::Extrapolate { point, prime, t, f, l, omega, base_m } => {
            point.echo(&mut out.inputs);
            out.input("prime", prime);
            out.input("t", t);
            let p = point.point()?;
            let base = base_field(*base_m, &p)?;
            let (f, l) = match f {
                Some(s) => {
                    out.input("f", s);
                    let f = match &base {
                        BaseField::Rationals => AuxPoly::Int(parse_int_poly2(s)?),
                        BaseField::Cyclotomic { m, .. } => {
                            AuxPoly::Cyclotomic { m: *m, poly: parse_field_poly2(s, &NumberField::cyclotomic(*m)?)? }
                        }
                    };
                    let l = l.unwrap_or(f.total_degree());
                    (f, l)
                }
                None => {
                    let omega = match omega {
                        Some(w) => *w,
                        None => obstruction_index(&p, &BaseField::Rationals)?.omega,
                    };
                    let s = construct_auxiliary(&p, *t, omega, prec)?;
                    out.detail("F", s.f.to_string());
                    (s.f, l.unwrap_or(s.l))
                }
            };
            out.input("l", l);
            let r = extrapolation_report(&f, &p, &base, *prime, *t, l, prec)?;
            out.value = Some(r.epsilon.clone());
            out.verdict = Some(if r.inequality_holds { Verdict::Pass } else { Verdict::Fail });
            out.detail("T1", r.t1_observed.to_string());
            out.detail("lhs", ball_json(&r.lhs));
            out.detail("epsilon_positive", r.epsilon_positive);
            out.detail("height_F", ball_json(&r.height_f));
            out.detail("height_point", ball_json(&r.height_alpha));
        }
        Cmd::CurveHeight { curve } => {
            out.input("curve", curve);
            let c = Curve::parse(curve)?;
            out.value = Some(normalized_height_curve(&c, tol, prec)?);
            out.detail("normalized", c.to_string());
            out.detail("degree", c.degree().to_string());
        }
        Cmd::CurveTorsion { curve } => {
            out.input("curve", curve);
            let c = Curve::parse(curve)?;
            let (t, data) = is_torsion_curve(&c);
            out.detail("torsion", t);
            if let Some(d) = data {
                out.detail("a", d.a.to_string());
                out.detail("b", d.b.to_string());
                out.detail("zeta_order", d.zeta_order.to_string());
            }
            out.detail("irreducibility", c.irreducibility().to_string());
        }
        Cmd::PowerImage { curve, l } => {
            out.input("curve", curve);
            out.input("l", l);
            let img = power_image(&Curve::parse(curve)?, *l)?;
            out.detail("image", img.to_string());
            out.detail("degree", img.degree().to_string());
        }
        Cmd::Ecc { curve, bound } => {
            out.input("curve", curve);
            out.input("bound", bound);
            let r = ecc_primes(&Curve::parse(curve)?, *bound)?;
            out.detail("primes", r.primes.iter().map(|p| Value::String(p.to_string())).collect::<Vec<_>>());
            out.detail(
                "image_degrees",
                r.image_degrees.iter().map(|(p, d)| Value::String(format!("{p}:{d}"))).collect::<Vec<_>>(),
            );
            out.detail("cardinality_bound", format!("{:.6}", r.cardinality_bound));
            out.verdict = Some(if r.bound_holds { Verdict::Pass } else { Verdict::Fail });
        }
        Cmd::Bound { kind, args } => {
            let k: BoundKind = kind.parse()?;
            let a = BoundArgs::from(args);
            out.input("kind", k);
            out.inputs.extend(pairs_json(&a.to_pairs()));
            out.value = Some(bound_value(k, &a, prec.bits)?);
        }
        Cmd::Params { schedule, args } => {
            let k: ScheduleKind = schedule.parse()?;
            let a = BoundArgs::from(args);
            out.input("schedule", k);
            out.inputs.extend(pairs_json(&a.to_pairs()));
            let s = param_schedule(k, &a)?;
            out.detail("T", s.t.to_string());
            out.detail("L", s.l.to_string());
            for (name, v) in &s.n {
                out.detail(name, ball_json(v));
            }
            if let Some(w) = s.omega_prime {
                out.detail("omega_prime", w.to_string());
                out.detail("c1", s.c1.to_string());
                out.detail("c2", s.c2.to_string());
            }
            if let Some(d) = s.d_prime {
                out.detail("D_prime", d.to_string());
            }
        }
        Cmd::Verify { kind, curve, field, x, y } => {
            let k: BoundKind = kind.parse()?;
            out.input("kind", k);
            let c = curve.as_deref().map(Curve::parse).transpose()?;
            let p = match (x, y) {
                (Some(x), Some(y)) => Some(Point2::parse(field.as_deref().unwrap_or("Q"), x, y)?),
                (None, None) => None,
                _ => return Err(Error::Domain("a point needs both --x and --y".into())),
            };
            let target = match (&p, &c) {
                (Some(p), Some(c)) => Target::PointOnCurve(p, c),
                (Some(p), None) => Target::Point(p),
                (None, Some(c)) => Target::Curve(c),
                (None, None) => return Err(Error::Domain("give --curve, a point (--x, --y), or both".into())),
            };
            out.report(&verify_bound(&target, k, prec, tol)?);
        }
        Cmd::Audit { suite, from, to, grid } => {
            let mut sel = AuditSelection::default();
            if !suite.is_empty() {
                sel.suites = suite.iter().map(|s| s.parse::<AuditSuite>()).collect::<Result<_>>()?;
            }
            if let Some(f) = from {
                sel.sieve_from = *f;
            }
            if let Some(t) = to {
                sel.sieve_to = *t;
            }
            if !grid.is_empty() {
                sel.grid = grid.clone();
            }
            out.input("suites", sel.suites.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","));
            out.input("from", sel.sieve_from);
            out.input("to", sel.sieve_to);
            out.input("grid", sel.grid.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","));
            let reports = audit_inequalities(&sel)?;
            let v = combine(reports.iter().map(|r| r.verdict));
            out.verdict = Some(v);
            out.detail("checks", reports.len().to_string());
            out.detail("failed", reports.iter().filter(|r| r.verdict == Verdict::Fail).count().to_string());
            out.detail("reports", reports.iter().map(report_json).collect::<Vec<_>>());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn height_command() {
        let r = run_command(["height", "--minpoly", "x^2-2"]);
        assert_eq!(r.exit_code, 0, "{}", r.output);
        assert!(r.output.contains("0.34657359"));
        let j = run_command(["--json", "height", "--minpoly", "x^2-2"]);
        let v: Value = serde_json::from_str(&j.output).unwrap();
        assert_eq!(v["command"], "height");
        assert!(v["value"]["mid"].as_str().unwrap().starts_with("0.34657359"));
    }

    #[test]
    fn errors_and_codes() {
        let r = run_command(["frobnicate"]);
        assert_eq!(r.exit_code, 2);
        assert!(r.error.unwrap().contains("frobnicate"));
        let r = run_command(["height", "--minpoly", "x^2-$"]);
        assert_eq!(r.exit_code, 2);
        assert!(r.error.unwrap().contains('$'));
        let r = run_command(["verify", "--kind", "theorem2", "--x", "2", "--y", "3", "--curve", "x+y-6"]);
        assert_eq!(r.exit_code, 2);
    }

    #[test]
    fn bound_and_params() {
        let r = run_command(["--json", "bound", "--kind", "theorem2", "--omega", "16"]);
        assert_eq!(r.exit_code, 0);
        let v: Value = serde_json::from_str(&r.output).unwrap();
        let m: f64 = v["value"]["mid"].as_str().unwrap().parse().unwrap();
        assert!((m / 1.62e-23 - 1.0).abs() < 1e-2);
        let r = run_command(["params", "--schedule", "section_V1", "--omega", "16", "--degree", "4"]);
        assert!(r.output.contains("1114"), "{}", r.output);
    }

    #[test]
    fn verify_and_audit() {
        let r = run_command(["verify", "--kind", "theorem2", "--x", "2", "--y", "3", "--curve", "x+y-5"]);
        assert_eq!((r.exit_code, r.verdict), (0, Some(Verdict::Pass)), "{}", r.output);
        let r = run_command(["audit", "--suite", "lemma-III2", "--to", "20000"]);
        assert_eq!(r.exit_code, 0, "{}", r.output);
    }

    #[test]
    fn precision_flag() {
        let r = run_command(["--prec", "128", "--json", "height", "--minpoly", "x-3"]);
        assert_eq!(r.exit_code, 0);
        assert!(r.value.unwrap().prec() >= 128);
    }
}
