//! Obstruction index: the least degree of a curve through a point, with a
//! witness of small coefficients.

use gm2_height::heights::Point2;
use gm2_height::obstruction::{jet_space_dim, obstruction_bound, obstruction_index, BaseField};

fn main() -> gm2_height::Result<()> {
    let q = BaseField::Rationals;
    let points = [
        ("Q", "2", "3"),
        ("t^2-2", "t", "t+1"),
        ("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2"),
        ("t^3-2", "t", "t^2"),
    ];
    for (k, x, y) in points {
        let p = Point2::parse(k, x, y)?;
        let ob = obstruction_index(&p, &q)?;
        println!(
            "({x}, {y}) in {k}: omega = {} <= {}, witness {}",
            ob.omega,
            obstruction_bound(ob.relative_degree),
            ob.witness
        );
        for (l, t) in [(3, 1), (4, 2), (6, 3)] {
            println!("  dim of order-{t} jets of degree <= {l}: {}", jet_space_dim(&p, l, t, &q)?);
        }
    }

    // Over the base Q(ζ_5) the point (ζ_5, 2) lies on the line x = ζ_5.
    let p = Point2::parse("zeta_5", "t", "2")?;
    let base = BaseField::cyclotomic(5, p.field())?;
    println!("over {base}: omega = {}", obstruction_index(&p, &base)?.omega);
    Ok(())
}
