//! Certified roots and Mahler measures in one variable, and a product-free
//! Kronecker test for roots of unity.

use gm2_height::analytic::{isolate_roots, kronecker_test, log_mahler_1d, Precision};
use gm2_height::parse::parse_int_poly1;

fn main() -> gm2_height::Result<()> {
    let prec = Precision::default();
    let lehmer = parse_int_poly1("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")?;
    println!("log M(Lehmer) = {}", log_mahler_1d(&lehmer, prec)?);
    for r in isolate_roots(&lehmer, 1e-30, prec)? {
        println!("  root {r}");
    }
    for f in ["x^2-x-1", "x^3-x-1", "x^4+x^3+x^2+x+1", "3*x^2-2"] {
        let p = parse_int_poly1(f)?;
        println!("{f:<16} log M = {}  cyclotomic: {:?}", log_mahler_1d(&p, prec)?, kronecker_test(&p));
    }
    Ok(())
}
