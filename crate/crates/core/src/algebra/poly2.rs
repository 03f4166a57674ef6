//! Sparse bivariate polynomials with integer or number-field coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldElement};
use super::poly1::{render_terms, IntPoly1};

pub type Exp = (u32, u32);

/// Graded-lex order on exponents, largest first: total degree, then x-degree.
pub fn grlex_desc(a: &Exp, b: &Exp) -> Ordering {
    (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0))
}

pub fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPoly2 {
    terms: BTreeMap<Exp, BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_i64_terms(t: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(t.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_terms([((1, 0), BigInt::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([((0, 1), BigInt::one())])
    }

    /// `f(x)` viewed in two variables.
    pub fn from_x_poly(f: &IntPoly1) -> Self {
        Self::from_terms(f.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    pub fn from_y_poly(f: &IntPoly1) -> Self {
        Self::from_terms(f.coeffs().iter().enumerate().map(|(i, c)| ((0, i as u32), c.clone())))
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Exp, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |a, c| a.gcd(c))
    }

    /// Divides out the content and makes the graded-lex leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().1.is_negative() {
            c = -c;
        }
        Self { terms: self.terms.iter().map(|(e, a)| (*e, a / &c)).collect() }
    }

    /// Leading term in graded-lex order with x > y.
    pub fn leading_term(&self) -> (Exp, BigInt) {
        let e = *self.terms.keys().min_by(|a, b| grlex_desc(a, b)).expect("nonzero");
        (e, self.terms[&e].clone())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &o.terms {
                r.add_term((ea.0 + eb.0, ea.1 + eb.1), a * b);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn swap_xy(&self) -> Self {
        Self { terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }

    /// `x^{deg_x} P(1/x, y)`.
    pub fn reflect_x(&self) -> Self {
        let d = self.deg_x();
        Self { terms: self.terms.iter().map(|((i, j), c)| ((d - i, *j), c.clone())).collect() }
    }

    /// Divides by the largest monomial dividing every term.
    pub fn strip_monomial(&self) -> Self {
        let mi = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let mj = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        Self { terms: self.terms.iter().map(|((i, j), c)| ((i - mi, j - mj), c.clone())).collect() }
    }

    /// `P(c, y)` as a polynomial in y.
    pub fn specialize_x(&self, c: &BigInt) -> IntPoly1 {
        let mut v = vec![BigInt::zero(); self.deg_y() as usize + 1];
        for ((i, j), a) in &self.terms {
            v[*j as usize] += a * num_traits::pow(c.clone(), *i as usize);
        }
        IntPoly1::new(v)
    }

    pub fn specialize_y(&self, c: &BigInt) -> IntPoly1 {
        self.swap_xy().specialize_x(c)
    }

    /// Coefficients as a polynomial in y over Z[x]: entry j is the coefficient of y^j.
    pub fn coeffs_in_y(&self) -> Vec<IntPoly1> {
        let mut v = vec![vec![BigInt::zero(); self.deg_x() as usize + 1]; self.deg_y() as usize + 1];
        for ((i, j), a) in &self.terms {
            v[*j as usize][*i as usize] = a.clone();
        }
        v.into_iter().map(IntPoly1::new).collect()
    }

    pub fn from_coeffs_in_y(c: &[IntPoly1]) -> Self {
        let mut p = Self::zero();
        for (j, f) in c.iter().enumerate() {
            for (i, a) in f.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), a.clone());
            }
        }
        p
    }

    /// Content with respect to x: gcd over Z[x] of the y-coefficients.
    pub fn content_in_y_coeffs(&self) -> IntPoly1 {
        self.coeffs_in_y()
            .iter()
            .filter(|c| !c.is_zero())
            .fold(IntPoly1::zero(), |acc, c| if acc.is_zero() { c.primitive_part() } else { acc.gcd(c) })
    }

    /// Divided derivative `(1/λ!) ∂^λ`.
    pub fn divided_derivative(&self, l: Exp) -> Self {
        Self::from_terms(self.terms.iter().filter(|((i, j), _)| *i >= l.0 && *j >= l.1).map(
            |((i, j), c)| ((i - l.0, j - l.1), c * binom(*i, l.0) * binom(*j, l.1)),
        ))
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.to_field(x.field()).eval(x, y)
    }

    pub fn eval_int(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|((i, j), c)| c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize))
            .sum()
    }

    pub fn to_field(&self, k: &Field) -> FieldPoly2 {
        FieldPoly2::from_terms(
            k,
            self.terms
                .iter()
                .map(|(e, c)| (*e, FieldElement::from_rational(k, BigRational::from(c.clone())))),
        )
    }

    /// Terms in graded-lex order, largest first.
    pub fn sorted_terms(&self) -> Vec<(Exp, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| grlex_desc(&a.0, &b.0));
        v
    }

    pub fn to_string_vars(&self, x: &str, y: &str) -> String {
        let terms: Vec<(BigInt, Vec<(String, usize)>)> = self
            .sorted_terms()
            .into_iter()
            .map(|((i, j), c)| (c, vec![(x.to_string(), i as usize), (y.to_string(), j as usize)]))
            .collect();
        render_terms(&terms)
    }
}

impl fmt::Display for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars("x", "y"))
    }
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly2({self})")
    }
}

/// Bivariate polynomial whose coefficients lie in a number field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly2 {
    field: Field,
    terms: BTreeMap<Exp, FieldElement>,
}

impl FieldPoly2 {
    pub fn zero(field: &Field) -> Self {
        FieldPoly2 { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, FieldElement)>>(field: &Field, it: I) -> Self {
        let mut p = Self::zero(field);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&e) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Exp, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(&self.field);
        for (ea, a) in &self.terms {
            for (eb, b) in &o.terms {
                r.add_term((ea.0 + eb.0, ea.1 + eb.1), a.mul(b));
            }
        }
        r
    }

    /// Integer polynomial when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly2> {
        let mut p = IntPoly2::zero();
        for (e, c) in &self.terms {
            let q = c.as_rational()?;
            if !q.is_integer() {
                return None;
            }
            p.add_term(*e, q.to_integer());
        }
        Some(p)
    }

    /// Applies a map to every coefficient, landing in `target`.
    pub fn map_coeffs(&self, target: &Field, f: impl Fn(&FieldElement) -> FieldElement) -> Self {
        Self::from_terms(target, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn divided_derivative(&self, l: Exp) -> Self {
        Self::from_terms(
            &self.field,
            self.terms.iter().filter(|((i, j), _)| *i >= l.0 && *j >= l.1).map(|((i, j), c)| {
                let b = BigRational::from(binom(*i, l.0) * binom(*j, l.1));
                ((i - l.0, j - l.1), c.scale(&b))
            }),
        )
    }

    /// Evaluates at `(x, y)`; coefficients must live in the same field as the point.
    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let k = x.field();
        let dx = self.terms.keys().map(|e| e.0).max().unwrap_or(0) as usize;
        let dy = self.terms.keys().map(|e| e.1).max().unwrap_or(0) as usize;
        let xp = powers(x, dx);
        let yp = powers(y, dy);
        let mut acc = FieldElement::zero(k);
        for ((i, j), c) in &self.terms {
            acc = acc.add(&c.mul(&xp[*i as usize]).mul(&yp[*j as usize]));
        }
        acc
    }

    pub fn to_string_vars(&self, x: &str, y: &str, coeff_var: &str) -> String {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        if v.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, ((i, j), c)) in v.into_iter().enumerate() {
            let mono: Vec<String> = [(x, *i), (y, *j)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let cs = c.to_string_var(coeff_var);
            let coeff = if c.as_rational().is_some() {
                cs
            } else {
                format!("({cs})")
            };
            if k > 0 {
                out.push_str(" + ");
            }
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if c.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{coeff}*{}", mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for FieldPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldPoly2({} over {})", self.to_string_vars("x", "y", "t"), self.field)
    }
}

pub fn powers(x: &FieldElement, n: usize) -> Vec<FieldElement> {
    let mut v = Vec::with_capacity(n + 1);
    v.push(FieldElement::one(x.field()));
    for k in 0..n {
        let next = v[k].mul(x);
        v.push(next);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[((u32, u32), i64)]) -> IntPoly2 {
        IntPoly2::from_i64_terms(t)
    }

    #[test]
    fn display_grlex() {
        let f = p(&[((0, 0), 1), ((1, 0), -3), ((2, 1), 2), ((0, 2), 1)]);
        assert_eq!(f.to_string(), "2*x^2*y + y^2 - 3*x + 1");
    }

    #[test]
    fn normalization() {
        let f = p(&[((1, 0), -2), ((0, 1), 4)]);
        let g = f.primitive_part();
        assert_eq!(g, p(&[((1, 0), 1), ((0, 1), -2)]));
        assert_eq!(f.total_degree(), 1);
    }

    #[test]
    fn divided_derivatives() {
        // (x - 2)^3 -> D_(1,0) = 3 (x-2)^2
        let f = IntPoly2::from_x_poly(&IntPoly1::from_i64s(&[-2, 1]).pow(3));
        let d = f.divided_derivative((1, 0));
        assert_eq!(d, IntPoly2::from_x_poly(&IntPoly1::from_i64s(&[-2, 1]).pow(2)).scale(&BigInt::from(3)));
        let d2 = f.divided_derivative((2, 0));
        assert_eq!(d2.eval_int(&BigInt::from(2), &BigInt::from(0)), BigInt::zero());
    }

    #[test]
    fn specialize_and_coeffs() {
        let f = p(&[((1, 1), 1), ((0, 0), -1)]);
        assert_eq!(f.specialize_x(&BigInt::from(2)), IntPoly1::from_i64s(&[-1, 2]));
        let c = f.coeffs_in_y();
        assert_eq!(IntPoly2::from_coeffs_in_y(&c), f);
    }
}
