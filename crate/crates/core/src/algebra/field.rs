//! Number fields `Q(θ)` given by a monic irreducible integer polynomial, with
//! elements stored as rational coordinates in the power basis.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::cyclotomic_polynomial;
use super::factor::is_irreducible;
use super::linalg::{det_rat, solve_rat, RatMatrix};
use super::poly1::IntPoly1;
use crate::error::{domain, Result};

#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    g: IntPoly1,
    conductor: Option<u64>,
}

pub type Field = Arc<NumberField>;

impl NumberField {
    /// Field defined by the monic irreducible polynomial `g`.
    pub fn new(g: IntPoly1) -> Result<Field> {
        if g.is_zero() || g.deg() == 0 {
            return domain("field generator must have degree >= 1");
        }
        if !g.lead().is_one() {
            return domain(format!("field generator {g} is not monic"));
        }
        if !is_irreducible(&g) {
            return domain(format!("field generator {g} is reducible"));
        }
        Ok(Arc::new(NumberField { g, conductor: None }))
    }

    pub fn rationals() -> Field {
        Arc::new(NumberField { g: IntPoly1::x(), conductor: None })
    }

    pub fn cyclotomic(m: u64) -> Result<Field> {
        let g = cyclotomic_polynomial(m)?;
        // For m <= 2 the generator Φ_m is linear and θ is ±1 itself.
        Ok(Arc::new(NumberField { g, conductor: Some(m) }))
    }

    /// Presents `Q(α)` for `α` a root of the irreducible `f = a_d x^d + ...`,
    /// using the monic integral generator `θ = a_d α`. Returns the field and `α`.
    pub fn from_minpoly(f: &IntPoly1) -> Result<(Field, FieldElement)> {
        let f = f.primitive_part();
        if f.deg() == 0 {
            return domain("minimal polynomial must have degree >= 1");
        }
        let a = f.lead();
        let d = f.deg();
        // a^{d-1} f(x/a) = Σ f_i a^{d-1-i} x^i.
        let coeffs: Vec<BigInt> = (0..=d)
            .map(|i| {
                if i == d {
                    BigInt::one()
                } else {
                    f.coeff(i) * num_traits::pow(a.clone(), d - 1 - i)
                }
            })
            .collect();
        let field = if d == 1 {
            NumberField::rationals()
        } else {
            NumberField::new(IntPoly1::new(coeffs))?
        };
        let alpha = if d == 1 {
            FieldElement::from_rational(&field, BigRational::new(-f.coeff(0), a))
        } else {
            FieldElement::theta(&field).scale(&BigRational::new(BigInt::one(), a))
        };
        Ok((field, alpha))
    }

    pub fn degree(&self) -> usize {
        self.g.deg()
    }

    pub fn generator(&self) -> &IntPoly1 {
        &self.g
    }

    pub fn conductor(&self) -> Option<u64> {
        self.conductor
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "Q")
        } else {
            write!(f, "Q[t]/({})", self.g.to_string_var("t"))
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    coords: Vec<BigRational>,
}

fn reduce(g: &IntPoly1, mut v: Vec<BigRational>) -> Vec<BigRational> {
    let d = g.deg();
    let gc: Vec<BigRational> = g.coeffs().iter().map(|c| BigRational::from(c.clone())).collect();
    for k in (d..v.len()).rev() {
        let c = std::mem::take(&mut v[k]);
        if c.is_zero() {
            continue;
        }
        for i in 0..d {
            let t = &c * &gc[i];
            v[k - d + i] -= t;
        }
    }
    v.resize(d, BigRational::zero());
    v
}

impl FieldElement {
    /// Element with power-basis coordinates `c` (reduced modulo the generator).
    pub fn from_coeffs(field: &Field, c: Vec<BigRational>) -> Self {
        FieldElement { field: field.clone(), coords: reduce(&field.g, c) }
    }

    pub fn from_rational(field: &Field, q: BigRational) -> Self {
        Self::from_coeffs(field, vec![q])
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, BigRational::from(BigInt::from(n)))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_coeffs(field, vec![])
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    /// The generator θ.
    pub fn theta(field: &Field) -> Self {
        Self::from_coeffs(field, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// `Some(q)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let c = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        FieldElement { field: self.field.clone(), coords: c }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        let c = self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect();
        FieldElement { field: self.field.clone(), coords: c }
    }

    pub fn neg(&self) -> Self {
        let c = self.coords.iter().map(|a| -a).collect();
        FieldElement { field: self.field.clone(), coords: c }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let c = self.coords.iter().map(|a| a * q).collect();
        FieldElement { field: self.field.clone(), coords: c }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let d = self.coords.len();
        let mut v = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(&self.field, v)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = self.mult_matrix();
        let d = self.coords.len();
        let mut e1 = vec![BigRational::zero(); d];
        e1[0] = BigRational::one();
        solve_rat(&m, &e1).map(|c| FieldElement { field: self.field.clone(), coords: c })
    }

    /// Matrix of multiplication by `self` acting on coordinate columns.
    pub fn mult_matrix(&self) -> RatMatrix {
        let d = self.coords.len();
        let mut cols = Vec::with_capacity(d);
        let mut b = self.clone();
        let theta = Self::theta(&self.field);
        for _ in 0..d {
            cols.push(b.coords.clone());
            b = b.mul(&theta);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn norm(&self) -> BigRational {
        det_rat(&self.mult_matrix())
    }

    /// Characteristic polynomial of multiplication by `self`, monic with
    /// rational coefficients, via evaluation at `0..=D` and interpolation.
    pub fn charpoly(&self) -> Vec<BigRational> {
        let m = self.mult_matrix();
        let d = m.len();
        let xs: Vec<BigInt> = (0..=d as i64).map(BigInt::from).collect();
        let ys: Vec<BigRational> = xs
            .iter()
            .map(|z| {
                let zr = BigRational::from(z.clone());
                let a: RatMatrix = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| {
                                let e = -&m[i][j];
                                if i == j {
                                    e + &zr
                                } else {
                                    e
                                }
                            })
                            .collect()
                    })
                    .collect();
                det_rat(&a)
            })
            .collect();
        interpolate(&xs, &ys)
    }

    /// Minimal polynomial over Q: primitive, irreducible, positive lead.
    pub fn minimal_polynomial(&self) -> IntPoly1 {
        let cp = rational_to_primitive(&self.charpoly());
        let mp = cp.square_free_part().primitive_part();
        debug_assert!(self.eval_int_poly(&mp).is_zero());
        mp
    }

    /// Evaluates an integer polynomial at `self` by Horner's rule.
    pub fn eval_int_poly(&self, p: &IntPoly1) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Self::from_rational(&self.field, BigRational::from(c.clone())));
        }
        acc
    }

    /// Least positive integer `d` such that `d * self` has integer coordinates.
    pub fn coordinate_denominator(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn to_string_var(&self, var: &str) -> String {
        let den = self.coordinate_denominator();
        let num = IntPoly1::new(self.coords.iter().map(|c| c.numer() * (&den / c.denom())).collect());
        let s = num.to_string_var(var);
        if den.is_one() {
            s
        } else if num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({s})/{den}")
        } else {
            format!("{s}/{den}")
        }
    }

    fn check(&self, o: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &o.field) || self.field == o.field,
            "field elements from different fields"
        );
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("t"))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

/// Newton interpolation through `(xs[i], ys[i])`; returns coefficients low to high.
pub fn interpolate(xs: &[BigInt], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let xr: Vec<BigRational> = xs.iter().map(|x| BigRational::from(x.clone())).collect();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xr[i] - &xr[i - j]);
        }
    }
    let mut poly = vec![BigRational::zero(); n];
    // Horner on the Newton form.
    for k in (0..n).rev() {
        // poly = poly * (x - x_k) + dd[k]
        let mut next = vec![BigRational::zero(); n];
        for i in 0..n {
            if poly[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += &poly[i];
            }
            next[i] -= &poly[i] * &xr[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly
}

/// Scales a rational polynomial to a primitive integer polynomial with positive lead.
pub fn rational_to_primitive(c: &[BigRational]) -> IntPoly1 {
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let p = IntPoly1::new(c.iter().map(|x| x.numer() * (&den / x.denom())).collect());
    if p.is_zero() {
        return p;
    }
    let pp = p.primitive_part();
    if pp.lead().is_negative() {
        -&pp
    } else {
        pp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn f4() -> Field {
        NumberField::new(IntPoly1::from_i64s(&[1, 0, -10, 0, 1])).unwrap()
    }

    #[test]
    fn minimal_polynomial_examples() {
        let k = NumberField::new(IntPoly1::from_i64s(&[-2, 0, 1])).unwrap();
        let e = FieldElement::from_coeffs(&k, vec![q(1, 1), q(1, 1)]);
        assert_eq!(e.minimal_polynomial(), IntPoly1::from_i64s(&[-1, -2, 1]));
        let three = FieldElement::from_int(&k, 3);
        assert_eq!(three.minimal_polynomial(), IntPoly1::from_i64s(&[-3, 1]));
        let k4 = f4();
        let sqrt2 = FieldElement::from_coeffs(&k4, vec![q(0, 1), q(-9, 2), q(0, 1), q(1, 2)]);
        assert_eq!(sqrt2.minimal_polynomial(), IntPoly1::from_i64s(&[-2, 0, 1]));
        assert_eq!(sqrt2.mul(&sqrt2).as_rational(), Some(q(2, 1)));
    }

    #[test]
    fn inverse_and_norm() {
        let k4 = f4();
        let t = FieldElement::theta(&k4);
        let inv = t.inverse().unwrap();
        assert!(t.mul(&inv).is_one());
        assert_eq!(t.norm(), q(1, 1));
    }

    #[test]
    fn non_monic_presentation() {
        let (k, a) = NumberField::from_minpoly(&IntPoly1::from_i64s(&[-1, 0, 2])).unwrap();
        assert_eq!(k.generator(), &IntPoly1::from_i64s(&[-2, 0, 1]));
        assert_eq!(a.mul(&a).as_rational(), Some(q(1, 2)));
        let (k1, b) = NumberField::from_minpoly(&IntPoly1::from_i64s(&[-1, 2])).unwrap();
        assert!(k1.is_rational());
        assert_eq!(b.as_rational(), Some(q(1, 2)));
    }

    #[test]
    fn rejects_reducible_generator() {
        assert!(NumberField::new(IntPoly1::from_i64s(&[-1, 0, 1])).is_err());
        assert!(NumberField::new(IntPoly1::from_i64s(&[-2, 0, 2])).is_err());
    }

    #[test]
    fn display() {
        let k4 = f4();
        let e = FieldElement::from_coeffs(&k4, vec![q(0, 1), q(-9, 2), q(0, 1), q(1, 2)]);
        assert_eq!(e.to_string(), "(t^3 - 9*t)/2");
    }
}
