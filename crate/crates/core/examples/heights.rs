//! Weil heights of algebraic numbers and of points of the plane torus.

use gm2_height::analytic::Precision;
use gm2_height::heights::{height_algebraic, is_torsion_point, point_height, power_point, Point2};
use gm2_height::parse::parse_int_poly1;

fn main() -> gm2_height::Result<()> {
    let prec = Precision::default();
    for f in ["x-3", "2*x-1", "x^2-2", "x^2-x-1", "x^4+1"] {
        println!("h(root of {f:<8}) = {}", height_algebraic(&parse_int_poly1(f)?, prec)?);
    }

    // (√2, √3) written in Q(θ) with θ = √2 + √3.
    let p = Point2::parse("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2")?;
    println!("h(√2, √3) = {}", point_height(&p, prec)?);
    println!("h([3](√2, √3)) = {}", point_height(&power_point(&p, 3)?, prec)?);

    for (k, x, y) in [("Q", "1/2", "3"), ("zeta_5", "t", "t^2"), ("Q(zeta_3)", "t", "2")] {
        let p = Point2::parse(k, x, y)?;
        println!("({x}, {y}) in {k}: height {}, torsion {}", point_height(&p, prec)?, is_torsion_point(&p));
    }
    Ok(())
}
