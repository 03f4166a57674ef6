//! Recursive-descent parser for the polynomial grammar: variables `x`, `y`,
//! `t`; integer or rational coefficients; `+ - * ^`, parentheses, and
//! division by nonzero constants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use num_integer::Integer;

use crate::algebra::{Field, FieldElement, IntPoly1, IntPoly2, NumberField};
use crate::error::{Error, Result};

const VARS: [&str; 3] = ["x", "y", "t"];

/// Polynomial in `x, y, t` with rational coefficients, keyed by exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    pub terms: BTreeMap<[u32; 3], BigRational>,
}

impl RatPoly {
    fn constant(c: BigRational) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.terms.insert([0, 0, 0], c);
        }
        p
    }

    fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        let mut p = Self::default();
        p.terms.insert(e, BigRational::one());
        p
    }

    fn add(&self, o: &Self, sign: i32) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            let v = r.terms.remove(e).unwrap_or_else(BigRational::zero);
            let v = if sign > 0 { v + c } else { v - c };
            if !v.is_zero() {
                r.terms.insert(*e, v);
            }
        }
        r
    }

    fn mul(&self, o: &Self) -> Self {
        let mut r = Self::default();
        for (ea, a) in &self.terms {
            for (eb, b) in &o.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let v = r.terms.remove(&e).unwrap_or_else(BigRational::zero) + a * b;
                if !v.is_zero() {
                    r.terms.insert(e, v);
                }
            }
        }
        r
    }

    fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<&'static str> {
        (0..3)
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .map(|i| VARS[i])
            .collect()
    }

    fn common_denominator(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |a, c| a.lcm(c.denom()))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Op(char),
}

fn perr(token: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { token: token.into(), message: message.into() }
}

fn tokenize(s: &str) -> Result<Vec<(Tok, String)>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            if i < cs.len() && (cs[i] == '.' || cs[i] == 'e' || cs[i] == 'E') {
                let tok: String = cs[st..=i].iter().collect();
                return Err(perr(tok, "floating-point literals are not allowed"));
            }
            let text: String = cs[st..i].iter().collect();
            out.push((Tok::Num(text.parse().unwrap()), text));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            let text: String = cs[st..i].iter().collect();
            match VARS.iter().position(|v| *v == text) {
                Some(k) => out.push((Tok::Var(k), text)),
                None => return Err(perr(text, "unknown variable (expected x, y or t)")),
            }
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), c.to_string()));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((Tok::Op('-'), c.to_string()));
            i += 1;
        } else {
            return Err(perr(c.to_string(), "unexpected character"));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, String)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn text(&self) -> String {
        self.toks.get(self.pos).map_or("<end of input>".to_string(), |t| t.1.clone())
    }

    fn expr(&mut self) -> Result<RatPoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, if c == '+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            let op_text = self.text();
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '*' {
                acc = acc.mul(&rhs);
            } else {
                let d = rhs
                    .as_constant()
                    .ok_or_else(|| perr(op_text.clone(), "division is only allowed by constants"))?;
                if d.is_zero() {
                    return Err(perr(op_text, "division by zero"));
                }
                acc = acc.mul(&RatPoly::constant(d.recip()));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatPoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(RatPoly::default().add(&self.unary()?, -1))
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatPoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let text = self.text();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e = n.to_u32().filter(|&e| e <= 10_000).ok_or_else(|| perr(text, "exponent too large"))?;
                    let mut r = RatPoly::constant(BigRational::one());
                    for _ in 0..e {
                        r = r.mul(&base);
                    }
                    Ok(r)
                }
                _ => Err(perr(text, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatPoly> {
        let text = self.text();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatPoly::constant(BigRational::from(n)))
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                Ok(RatPoly::var(k))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(perr(self.text(), "expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(perr(text, "expected a number, variable or `(`")),
        }
    }
}

/// Parses text in the polynomial grammar.
pub fn parse_poly(s: &str) -> Result<RatPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(perr("<empty>", "empty polynomial"));
    }
    let mut p = Parser { toks, pos: 0 };
    let r = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(perr(p.text(), "unexpected trailing input"));
    }
    Ok(r)
}

fn require_only(p: &RatPoly, allowed: &[usize], src: &str) -> Result<()> {
    for e in p.terms.keys() {
        for (i, &k) in e.iter().enumerate() {
            if k > 0 && !allowed.contains(&i) {
                return Err(perr(VARS[i], format!("variable not allowed in `{src}`")));
            }
        }
    }
    Ok(())
}

/// Univariate integer polynomial in whichever single variable occurs.
pub fn parse_int_poly1(s: &str) -> Result<IntPoly1> {
    let p = parse_poly(s)?;
    let vars: Vec<usize> = (0..3).filter(|&i| p.terms.keys().any(|e| e[i] > 0)).collect();
    if vars.len() > 1 {
        return Err(perr(VARS[vars[1]], "expected a polynomial in one variable"));
    }
    let v = vars.first().copied().unwrap_or(0);
    let mut c = Vec::new();
    for (e, a) in &p.terms {
        if !a.is_integer() {
            return Err(perr(a.to_string(), "coefficients must be integers"));
        }
        let k = e[v] as usize;
        if c.len() <= k {
            c.resize(k + 1, BigInt::zero());
        }
        c[k] = a.to_integer();
    }
    Ok(IntPoly1::new(c))
}

/// Bivariate integer polynomial in `x, y`.
pub fn parse_int_poly2(s: &str) -> Result<IntPoly2> {
    let p = parse_poly(s)?;
    require_only(&p, &[0, 1], s)?;
    let mut out = IntPoly2::zero();
    for (e, a) in &p.terms {
        if !a.is_integer() {
            return Err(perr(a.to_string(), "coefficients must be integers"));
        }
        out.add_term((e[0], e[1]), a.to_integer());
    }
    Ok(out)
}

/// Bivariate polynomial with rational coefficients scaled to a primitive
/// integer polynomial (sign kept).
pub fn parse_poly2_cleared(s: &str) -> Result<IntPoly2> {
    let p = parse_poly(s)?;
    require_only(&p, &[0, 1], s)?;
    let den = p.common_denominator();
    let mut out = IntPoly2::zero();
    for (e, a) in &p.terms {
        out.add_term((e[0], e[1]), (a * BigRational::from(den.clone())).to_integer());
    }
    let c = out.content();
    if c.is_zero() || c.is_one() {
        return Ok(out);
    }
    Ok(IntPoly2::from_terms(out.terms().iter().map(|(e, a)| (*e, a / c.abs()))))
}

/// Reads a field description: `Q`, `Q(zeta_m)` / `zeta_m` for the m-th
/// cyclotomic field, or a monic irreducible polynomial in `t`.
pub fn parse_field(s: &str) -> Result<Field> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" || compact == "QQ" {
        return Ok(NumberField::rationals());
    }
    let inner = compact
        .strip_prefix("Q(")
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(&compact);
    if let Some(m) = inner.strip_prefix("zeta").map(|r| r.trim_start_matches('_')) {
        let m: u64 = m.parse().map_err(|_| perr(s, "expected zeta_<m> with m a positive integer"))?;
        if m == 0 {
            return Err(perr(s, "cyclotomic conductor must be positive"));
        }
        return NumberField::cyclotomic(m);
    }
    let p = parse_poly(s)?;
    require_only(&p, &[2], s)?;
    NumberField::new(parse_int_poly1(s)?)
}

/// Element of `field` written as a rational polynomial in `t`.
pub fn parse_field_element(s: &str, field: &Field) -> Result<FieldElement> {
    let p = parse_poly(s)?;
    require_only(&p, &[2], s)?;
    if field.generator() == &IntPoly1::x() && p.terms.keys().any(|e| e[2] > 0) {
        return Err(perr("t", "the field Q has no generator t"));
    }
    let deg = p.terms.keys().map(|e| e[2] as usize).max().unwrap_or(0);
    let mut c = vec![BigRational::zero(); deg + 1];
    for (e, a) in &p.terms {
        c[e[2] as usize] = a.clone();
    }
    Ok(FieldElement::from_coeffs(field, c))
}

/// Polynomial in `x, y` whose coefficients are polynomials in `t`, read as
/// elements of `field` (used for cyclotomic-coefficient polynomials).
pub fn parse_field_poly2(s: &str, field: &Field) -> Result<crate::algebra::FieldPoly2> {
    let p = parse_poly(s)?;
    let mut groups: BTreeMap<(u32, u32), Vec<BigRational>> = BTreeMap::new();
    for (e, a) in &p.terms {
        let v = groups.entry((e[0], e[1])).or_default();
        let k = e[2] as usize;
        if v.len() <= k {
            v.resize(k + 1, BigRational::zero());
        }
        v[k] = a.clone();
    }
    Ok(crate::algebra::FieldPoly2::from_terms(
        field,
        groups.into_iter().map(|(e, c)| (e, FieldElement::from_coeffs(field, c))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;


    #[test]
    fn univariate() {
        assert_eq!(parse_int_poly1("x^2-2").unwrap(), IntPoly1::from_i64s(&[-2, 0, 1]));
        assert_eq!(parse_int_poly1("-(x - 1)^2").unwrap(), IntPoly1::from_i64s(&[-1, 2, -1]));
        assert_eq!(parse_int_poly1("7").unwrap(), IntPoly1::from_i64s(&[7]));
        assert_eq!(parse_int_poly1("t^2+1").unwrap(), IntPoly1::from_i64s(&[1, 0, 1]));
    }

    #[test]
    fn bivariate_and_rationals() {
        let p = parse_poly("x^2*y - 3/2*x + 1").unwrap();
        assert_eq!(p.terms.len(), 3);
        assert_eq!(p.terms[&[1, 0, 0]], BigRational::new((-3).into(), 2.into()));
        let q = parse_int_poly2("x + y - 1").unwrap();
        assert_eq!(q.to_string(), "x + y - 1");
        let c = parse_poly2_cleared("x/2 - y/3").unwrap();
        assert_eq!(c.to_string(), "3*x - 2*y");
    }

    #[test]
    fn errors_name_token() {
        match parse_poly("x + z") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "z"),
            other => panic!("{other:?}"),
        }
        match parse_poly("x + 1.5") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "1."),
            other => panic!("{other:?}"),
        }
        match parse_poly("(x + 1") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "<end of input>"),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x / y").is_err());
        assert!(parse_int_poly2("x/2").is_err());
    }

    #[test]
    fn field_elements() {
        let k = NumberField::new(IntPoly1::from_i64s(&[1, 0, -10, 0, 1])).unwrap();
        let a = parse_field_element("(t^3-9*t)/2", &k).unwrap();
        assert_eq!(a.mul(&a).as_rational(), Some(BigRational::from(BigInt::from(2))));
        assert!(parse_field_element("x", &k).is_err());
    }
}
