//! Cyclotomic polynomials and small arithmetic functions.

use num_bigint::BigInt;

use super::poly1::IntPoly1;
use crate::error::{domain, Result};

pub fn divisors(m: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (1..=m).take_while(|d| d * d <= m).filter(|d| m % d == 0).collect();
    let mut big: Vec<u64> = v.iter().rev().map(|d| m / d).filter(|&e| e * e != m).collect();
    v.append(&mut big);
    v
}

pub fn mobius(mut n: u64) -> i32 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Φ_m as the quotient of `Π_{μ(m/d)=1}(x^d − 1)` by `Π_{μ(m/d)=−1}(x^d − 1)`.
pub fn cyclotomic_polynomial(m: u64) -> Result<IntPoly1> {
    if m == 0 {
        return domain("cyclotomic polynomial needs m >= 1");
    }
    let mut num = IntPoly1::one();
    let mut den = IntPoly1::one();
    for d in divisors(m) {
        let f = &IntPoly1::monomial(BigInt::from(1), d as usize) - &IntPoly1::one();
        match mobius(m / d) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    Ok(num.div_exact(&den).expect("cyclotomic quotient is exact"))
}

/// Largest `m` with `φ(m) <= d`; every Φ_m of degree at most `d` has `m` below this.
pub fn max_conductor_for_degree(d: u64) -> u64 {
    // φ(m) >= sqrt(m/2), so m <= 2 d^2 suffices.
    (1..=2 * d * d + 2).filter(|&m| euler_phi(m) <= d).max().unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), IntPoly1::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), IntPoly1::from_i64s(&[1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            IntPoly1::from_i64s(&[1, 0, -1, 0, 1])
        );
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn divides_x_m_minus_1() {
        for m in 1..=200u64 {
            let phi = cyclotomic_polynomial(m).unwrap();
            assert_eq!(phi.deg() as u64, euler_phi(m));
            let xm = &IntPoly1::monomial(BigInt::from(1), m as usize) - &IntPoly1::one();
            assert!(xm.div_exact(&phi).is_some(), "m = {m}");
        }
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(euler_phi(36), 12);
    }
}
