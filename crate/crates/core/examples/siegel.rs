//! Auxiliary polynomials of small height vanishing to high order at a point.

use gm2_height::analytic::Precision;
use gm2_height::extrapolation::vanishing_order;
use gm2_height::heights::Point2;
use gm2_height::obstruction::BaseField;
use gm2_height::siegel::construct_auxiliary;

fn main() -> gm2_height::Result<()> {
    let prec = Precision::default();
    for (k, x, y, t, omega) in [("Q", "2", "3", 2, 1), ("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2", 2, 2)] {
        let p = Point2::parse(k, x, y)?;
        let s = construct_auxiliary(&p, t, omega, prec)?;
        let ord = vanishing_order(&s.f, &p, &BaseField::Rationals, t + 2)?;
        println!("({x}, {y}): L = {}, N = {}, r = {}", s.l, s.n, s.r);
        println!("  F = {}", s.f);
        println!("  order {ord}, h(F) = {} <= {} ({})", s.height_f, s.bound, s.met_bound);
    }
    Ok(())
}
