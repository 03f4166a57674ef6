//! Extrapolation at a prime: the order of `F^φp` at `α^p` against the
//! arithmetic lower bound, plus Frobenius on cyclotomic coefficients.

use gm2_height::analytic::Precision;
use gm2_height::extrapolation::{extrapolation_report, frobenius_apply};
use gm2_height::heights::Point2;
use gm2_height::obstruction::{AuxPoly, BaseField};
use gm2_height::parse::{parse_field, parse_field_poly2, parse_int_poly2};

fn main() -> gm2_height::Result<()> {
    let prec = Precision::default();
    let q = BaseField::Rationals;
    let p = Point2::from_ints(1, 1)?;
    let f = AuxPoly::Int(parse_int_poly2("(x-y)^2")?);
    for prime in [2, 3, 101] {
        let r = extrapolation_report(&f, &p, &q, prime, 2, 2, prec)?;
        println!(
            "p = {prime}: T1 = {}, epsilon = {}, inequality {}",
            r.t1_observed, r.epsilon, r.inequality_holds
        );
    }

    let k = parse_field("zeta_5")?;
    let g = AuxPoly::Cyclotomic { m: 5, poly: parse_field_poly2("(x-t)*(y-t^2)", &k)? };
    let a = Point2::parse("zeta_5", "t", "t^2")?;
    let base = BaseField::cyclotomic(5, a.field())?;
    println!("F^phi_2 = {}", frobenius_apply(&g, 2)?);
    let r = extrapolation_report(&g, &a, &base, 2, 1, 2, prec)?;
    println!("cyclotomic case: T1 = {}, inequality {}", r.t1_observed, r.inequality_holds);
    Ok(())
}
