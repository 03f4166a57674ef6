//! Plane curves: normalized heights by Jensen's formula, torsion curves,
//! power images and the primes where the image degree drops.

use gm2_height::analytic::Precision;
use gm2_height::curves::{ecc_primes, is_torsion_curve, normalized_height_curve, power_image, Curve};

fn main() -> gm2_height::Result<()> {
    let prec = Precision::default();
    for s in ["x+y-1", "x+y-5", "x*y-1", "x^2*y^3+1", "1+x+y+x*y+x^2*y", "y^2-x^3-x-1"] {
        let c = Curve::parse(s)?;
        let (torsion, data) = is_torsion_curve(&c);
        println!("{c}: degree {}, {}", c.degree(), c.irreducibility());
        println!("  h = {}", normalized_height_curve(&c, 1e-8, prec)?);
        println!("  torsion {torsion} {data:?}");
    }
    for l in [2, 3] {
        println!("[{l}](x+y-1) = {}", power_image(&Curve::parse("x+y-1")?, l)?);
    }
    for s in ["x^2-2", "x^2+x*y+y^2-3", "x^4-y-2"] {
        let r = ecc_primes(&Curve::parse(s)?, 50)?;
        println!("Ecc({s}) up to 50 = {:?}, bound {:.3} holds: {}", r.primes, r.cardinality_bound, r.bound_holds);
    }
    Ok(())
}
