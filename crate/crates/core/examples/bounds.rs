//! Explicit lower bounds, parameter schedules and certified verification.

use gm2_height::analytic::Precision;
use gm2_height::bounds::{bound_value, param_schedule, verify_bound, BoundArgs, BoundKind, ScheduleKind, Target};
use gm2_height::curves::Curve;
use gm2_height::heights::Point2;

fn main() -> gm2_height::Result<()> {
    let args = BoundArgs { omega: Some(16), degree: Some(16), ..Default::default() };
    for kind in [BoundKind::Theorem2, BoundKind::PropIV1, BoundKind::CorollaryI1, BoundKind::Voutier] {
        println!("{kind:<14} {}", bound_value(kind, &args, 128)?);
    }

    let args = BoundArgs { omega: Some(16), degree: Some(4), ..Default::default() };
    let s = param_schedule(ScheduleKind::SectionV1, &args)?;
    println!("section V1 (16, 4): T = {}, L = {}", s.t, s.l);

    let prec = Precision::default();
    let p = Point2::from_ints(2, 3)?;
    let line = Curve::parse("x+y-5")?;
    let reports = [
        verify_bound(&Target::PointOnCurve(&p, &line), BoundKind::Theorem2, prec, 1e-6)?,
        verify_bound(&Target::Curve(&Curve::parse("x+y-1")?), BoundKind::PropIV1, prec, 1e-6)?,
        verify_bound(&Target::Point(&p), BoundKind::CorollaryI1, prec, 1e-6)?,
    ];
    for r in reports {
        println!("{}: {} >= {}? {}", r.kind, r.compared_against.unwrap(), r.bound_value, r.verdict);
        for (k, v) in r.details {
            println!("  {k} = {v}");
        }
    }
    Ok(())
}
