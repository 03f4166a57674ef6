//! Exact recognition of products of cyclotomic polynomials.

use num_traits::{One, Signed, Zero};

use crate::algebra::cyclotomic::{euler_phi, max_conductor_for_degree};
use crate::algebra::{cyclotomic_polynomial, factor_univariate, IntPoly1};

/// Monic normalization of `f(-x)` for monic `f`.
fn reflect_monic(f: &IntPoly1) -> IntPoly1 {
    let r = f.reflect();
    if r.lead().is_negative() {
        -&r
    } else {
        r
    }
}

/// Graeffe-chain test for a monic irreducible `f`: its roots are roots of
/// unity iff the root-squaring map sends `f` to `f`, to `f(-x)`, or to the
/// square of a cyclotomic polynomial of half the degree.
fn irreducible_is_cyclotomic(f: &IntPoly1) -> bool {
    if f.deg() == 0 || !f.lead().is_one() || f.coeff(0).is_zero() {
        return false;
    }
    let g = f.graeffe();
    if &g == f || g == reflect_monic(f) {
        return true;
    }
    // f(x) = k(x^2) up to sign gives graeffe(f) = k^2.
    let sf = g.square_free_decomposition();
    if sf.len() == 1 && sf[0].1 == 2 && 2 * sf[0].0.deg() == g.deg() {
        return irreducible_is_cyclotomic(&sf[0].0);
    }
    false
}

/// True iff `P = ±x^k · Π Φ_m`, i.e. content 1 and every root is zero or a
/// root of unity.
pub fn kronecker_test(p: &IntPoly1) -> bool {
    if p.is_zero() || !p.content().is_one() {
        return false;
    }
    let Ok(fact) = factor_univariate(p) else { return false };
    fact.factors.iter().all(|(f, _)| *f == IntPoly1::x() || irreducible_is_cyclotomic(f))
}

/// The `m` with `Φ_m = f`, if any.
pub fn cyclotomic_index(f: &IntPoly1) -> Option<u64> {
    let d = f.deg() as u64;
    if d == 0 {
        return None;
    }
    (1..=max_conductor_for_degree(d))
        .filter(|&m| euler_phi(m) == d)
        .find(|&m| cyclotomic_polynomial(m).map_or(false, |c| &c == f))
}

/// Order of the root group generated by the roots of `p` when
/// `kronecker_test(p)` holds: the lcm of the conductors of its factors.
pub fn root_of_unity_order(p: &IntPoly1) -> Option<u64> {
    if !kronecker_test(p) {
        return None;
    }
    let fact = factor_univariate(p).ok()?;
    let mut m = 1u64;
    for (f, _) in &fact.factors {
        if *f == IntPoly1::x() {
            continue;
        }
        let k = cyclotomic_index(f)?;
        m = crate::algebra::cyclotomic::lcm_u64(m, k);
    }
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly1 {
        IntPoly1::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert!(kronecker_test(&p(&[1, 1, 1])));
        assert!(!kronecker_test(&p(&[-1, -1, 1])));
        assert!(kronecker_test(&p(&[-1, 0, 0, 0, 0, 1])));
        assert!(kronecker_test(&p(&[0, 0, -1])));
        assert!(!kronecker_test(&p(&[2, 0, 2])));
        assert!(!kronecker_test(&p(&[3])));
        assert!(kronecker_test(&p(&[-1])));
    }

    #[test]
    fn agrees_with_enumeration() {
        // Every Φ_m passes; doubling the content breaks it.
        for m in 1..=60u64 {
            let c = cyclotomic_polynomial(m).unwrap();
            assert!(kronecker_test(&c), "Φ_{m}");
            assert_eq!(cyclotomic_index(&c), Some(m));
            assert!(!kronecker_test(&c.scale(&2.into())));
        }
        // Salem/Pisot-like and non-monic near misses.
        assert!(!kronecker_test(&p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])));
        assert!(!kronecker_test(&p(&[1, -1, 1, -1, 1, 2])));
        assert!(!kronecker_test(&p(&[1, 0, 1, 0, 2])));
    }

    #[test]
    fn order_of_roots() {
        let f = &cyclotomic_polynomial(4).unwrap() * &cyclotomic_polynomial(6).unwrap();
        assert_eq!(root_of_unity_order(&f), Some(12));
        assert_eq!(root_of_unity_order(&p(&[1, 1, 1])), Some(3));
    }
}
