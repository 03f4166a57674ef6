//! Jet matrices, obstruction indices and dimensions of spaces of polynomials
//! vanishing to a given order at a point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::cyclotomic::euler_phi;
use crate::algebra::lattice::shortest_max_norm;
use crate::algebra::linalg::{integer_kernel, integer_rows, rank_rat, RatMatrix};
use crate::algebra::poly2::{binom, powers, Exp};
use crate::algebra::{cyclotomic_polynomial, Field, FieldElement, FieldPoly2, IntPoly2, NumberField};
use crate::error::{domain, Error, Result};
use crate::heights::Point2;

/// Coefficient field of auxiliary polynomials: `Q`, or `Q(ζ_m)` together with
/// the image of `ζ_m` in the point's field.
#[derive(Clone, Debug)]
pub enum BaseField {
    Rationals,
    Cyclotomic { m: u64, field: Field, zeta: FieldElement },
}

impl BaseField {
    /// `Q(ζ_m)` inside `k`, locating `ζ_m` among the powers of `θ`, then of
    /// `-θ`, when `k` is itself cyclotomic.
    pub fn cyclotomic(m: u64, k: &Field) -> Result<Self> {
        if m == 0 {
            return domain("cyclotomic conductor must be positive");
        }
        if m <= 2 {
            return Ok(BaseField::Rationals);
        }
        let phi = cyclotomic_polynomial(m)?;
        if let Some(mk) = k.conductor() {
            let theta = FieldElement::theta(k);
            let order = crate::algebra::cyclotomic::lcm_u64(mk, 2);
            // Powers of θ first so that ζ_m = θ when m is the conductor of k.
            for g in [theta.clone(), theta.neg()] {
                let mut z = FieldElement::one(k);
                for _ in 1..order {
                    z = z.mul(&g);
                    if z.eval_int_poly(&phi).is_zero() {
                        return Self::with_zeta(m, z);
                    }
                }
            }
        }
        domain(format!("could not locate a primitive {m}-th root of unity in {k}; pass it explicitly"))
    }

    /// `Q(ζ_m)` embedded through the given root of `Φ_m`.
    pub fn with_zeta(m: u64, zeta: FieldElement) -> Result<Self> {
        if m <= 2 {
            return Ok(BaseField::Rationals);
        }
        if !zeta.eval_int_poly(&cyclotomic_polynomial(m)?).is_zero() {
            return domain(format!("{zeta} is not a primitive {m}-th root of unity"));
        }
        Ok(BaseField::Cyclotomic { m, field: NumberField::cyclotomic(m)?, zeta })
    }

    /// `[k:Q]`.
    pub fn degree(&self) -> usize {
        match self {
            BaseField::Rationals => 1,
            BaseField::Cyclotomic { m, .. } => euler_phi(*m) as usize,
        }
    }

    pub fn conductor(&self) -> u64 {
        match self {
            BaseField::Rationals => 1,
            BaseField::Cyclotomic { m, .. } => *m,
        }
    }

    fn check_target(&self, k: &Field) -> Result<()> {
        if let BaseField::Cyclotomic { zeta, .. } = self {
            if zeta.field() != k {
                return domain("root of unity and point live in different fields");
            }
        }
        Ok(())
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Cyclotomic { m, .. } => write!(f, "Q(zeta_{m})"),
        }
    }
}

/// Bivariate polynomial with coefficients in `Q` (stored over `Z`) or in a
/// cyclotomic field `Q(ζ_m)` (stored over that field, `ζ_m = t`).
#[derive(Clone, Debug, PartialEq)]
pub enum AuxPoly {
    Int(IntPoly2),
    Cyclotomic { m: u64, poly: FieldPoly2 },
}

impl AuxPoly {
    pub fn is_zero(&self) -> bool {
        match self {
            AuxPoly::Int(p) => p.is_zero(),
            AuxPoly::Cyclotomic { poly, .. } => poly.is_zero(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        match self {
            AuxPoly::Int(p) => p.total_degree(),
            AuxPoly::Cyclotomic { poly, .. } => poly.total_degree(),
        }
    }

    /// The polynomial with coefficients moved into the point's field.
    pub fn in_field(&self, k: &Field, base: &BaseField) -> Result<FieldPoly2> {
        base.check_target(k)?;
        match (self, base) {
            (AuxPoly::Int(p), _) => Ok(p.to_field(k)),
            (AuxPoly::Cyclotomic { m, poly }, BaseField::Cyclotomic { m: mb, zeta, .. }) if m == mb => {
                let z = zeta.clone();
                Ok(poly.map_coeffs(k, move |c| {
                    let mut acc = FieldElement::zero(z.field());
                    let mut pw = FieldElement::one(z.field());
                    for q in c.coords() {
                        acc = acc.add(&pw.scale(q));
                        pw = pw.mul(&z);
                    }
                    acc
                }))
            }
            _ => domain("polynomial coefficients do not match the base field"),
        }
    }

    pub fn to_string_vars(&self, x: &str, y: &str) -> String {
        match self {
            AuxPoly::Int(p) => p.to_string_vars(x, y),
            AuxPoly::Cyclotomic { poly, .. } => poly.to_string_vars(x, y, "t"),
        }
    }
}

impl fmt::Display for AuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars("x", "y"))
    }
}

/// Exponents `μ` with `|μ| <= n`, in increasing graded-lex order.
pub fn monomials(n: u32) -> Vec<Exp> {
    let mut v = Vec::new();
    for d in 0..=n {
        for i in (0..=d).rev() {
            v.push((i, d - i));
        }
    }
    v
}

/// The matrix `(binom(μ, λ) α^{μ-λ})` expanded over `Q`: one row per
/// derivative index `λ` with `|λ| < T` and coordinate of the point's field,
/// one column per monomial `μ` with `|μ| <= L` and basis element `ζ^s` of the
/// coefficient field.
#[derive(Clone, Debug)]
pub struct JetMatrix {
    pub rows: RatMatrix,
    pub lambdas: Vec<Exp>,
    pub monomials: Vec<Exp>,
    /// `[k:Q]`; columns are ordered monomial-major.
    pub base_degree: usize,
    pub base: BaseField,
}

impl JetMatrix {
    pub fn build(points: &[Point2], l: u32, t: u32, base: &BaseField) -> Result<Self> {
        if t == 0 {
            return domain("vanishing order must be at least 1");
        }
        let mons = monomials(l);
        let lambdas = monomials(t - 1);
        let bd = base.degree();
        let mut rows: RatMatrix = Vec::new();
        for p in points {
            let k = p.field();
            base.check_target(k)?;
            let d = k.degree();
            let px = powers(p.x(), l as usize + 1);
            let py = powers(p.y(), l as usize + 1);
            let zpow: Vec<FieldElement> = match base {
                BaseField::Rationals => vec![FieldElement::one(k)],
                BaseField::Cyclotomic { zeta, .. } => powers(zeta, bd).into_iter().take(bd).collect(),
            };
            for lam in &lambdas {
                let mut block = vec![vec![BigRational::zero(); mons.len() * bd]; d];
                for (ci, mu) in mons.iter().enumerate() {
                    if mu.0 < lam.0 || mu.1 < lam.1 {
                        continue;
                    }
                    let b = binom(mu.0, lam.0) * binom(mu.1, lam.1);
                    let e = px[(mu.0 - lam.0) as usize]
                        .mul(&py[(mu.1 - lam.1) as usize])
                        .scale(&BigRational::from(b));
                    for (s, z) in zpow.iter().enumerate() {
                        let v = if s == 0 { e.clone() } else { e.mul(z) };
                        for (r, c) in v.coords().iter().enumerate() {
                            block[r][ci * bd + s] = c.clone();
                        }
                    }
                }
                rows.extend(block);
            }
        }
        Ok(JetMatrix { rows, lambdas, monomials: mons, base_degree: bd, base: base.clone() })
    }

    pub fn num_columns(&self) -> usize {
        self.monomials.len() * self.base_degree
    }

    pub fn rank(&self) -> usize {
        rank_rat(&self.rows)
    }

    /// Integer basis of the rational kernel, as coefficient vectors.
    pub fn integer_kernel(&self) -> Vec<Vec<BigInt>> {
        integer_kernel(&integer_rows(&self.rows), self.num_columns())
    }

    /// Polynomial whose coefficient vector (in column order) is `v`.
    pub fn poly_from_vector(&self, v: &[BigInt]) -> AuxPoly {
        match &self.base {
            BaseField::Rationals => AuxPoly::Int(IntPoly2::from_terms(
                self.monomials.iter().zip(v).map(|(e, c)| (*e, c.clone())),
            )),
            BaseField::Cyclotomic { m, field, .. } => {
                let bd = self.base_degree;
                let terms = self.monomials.iter().enumerate().map(|(i, e)| {
                    let c: Vec<BigRational> =
                        v[i * bd..(i + 1) * bd].iter().map(|a| BigRational::from(a.clone())).collect();
                    (*e, FieldElement::from_coeffs(field, c))
                });
                AuxPoly::Cyclotomic { m: *m, poly: FieldPoly2::from_terms(field, terms) }
            }
        }
    }
}

/// `dim_k E_k({α}, L, T)`: polynomials over `k` of degree at most `L`
/// vanishing to order at least `T` at the point.
pub fn jet_space_dim(p: &Point2, l: u32, t: u32, base: &BaseField) -> Result<usize> {
    let j = JetMatrix::build(std::slice::from_ref(p), l, t, base)?;
    Ok((j.num_columns() - j.rank()) / j.base_degree)
}

/// `[k(α):k]`, found as the largest degree of `α_1 + c_1 α_2 + c_2 ζ`
/// over enough integer shifts to hit a primitive element.
pub fn relative_degree(p: &Point2, base: &BaseField) -> Result<usize> {
    base.check_target(p.field())?;
    let d = p.degree();
    let zeta = match base {
        BaseField::Rationals => None,
        BaseField::Cyclotomic { zeta, .. } => Some(zeta.clone()),
    };
    let tries = (d * d.saturating_sub(1) / 2 + 1) as i64;
    let mut best = 0;
    'outer: for c1 in 0..=tries {
        for c2 in 0..=(if zeta.is_some() { tries } else { 0 }) {
            let mut e = p.x().add(&p.y().scale(&BigRational::from(BigInt::from(c1))));
            if let Some(z) = &zeta {
                e = e.add(&z.scale(&BigRational::from(BigInt::from(c2))));
            }
            best = best.max(e.minimal_polynomial().deg());
            if best == d {
                break 'outer;
            }
        }
    }
    Ok(best / base.degree())
}

/// Upper bound `⌊2 [k(α):k]^{1/2}⌋` for the obstruction index, plus one as slack.
pub fn obstruction_bound(rel_degree: usize) -> u32 {
    let mut r = 0u32;
    while ((r + 1) as usize) * ((r + 1) as usize) <= 4 * rel_degree {
        r += 1;
    }
    r + 1
}

/// Obstruction index and a witness curve.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub omega: u32,
    pub witness: AuxPoly,
    /// `[k(α):k]`.
    pub relative_degree: usize,
    /// False when the witness search hit its node budget.
    pub witness_minimal: bool,
}

const WITNESS_BUDGET: usize = 200_000;

/// Smallest degree `ω` of a nonzero polynomial over `k` vanishing at the point.
/// The witness has minimal sup norm of its integer coefficient vector among
/// primitive kernel vectors, ties broken lexicographically in graded-lex
/// column order, with positive leading coefficient.
pub fn obstruction_index(p: &Point2, base: &BaseField) -> Result<Obstruction> {
    let rel = relative_degree(p, base)?;
    let cap = obstruction_bound(rel);
    for omega in 1..=cap {
        let j = JetMatrix::build(std::slice::from_ref(p), omega, 1, base)?;
        let mut ker = j.integer_kernel();
        if ker.is_empty() {
            continue;
        }
        let (v, complete) = shortest_max_norm(&mut ker, WITNESS_BUDGET);
        return Ok(Obstruction {
            omega,
            witness: j.poly_from_vector(&v),
            relative_degree: rel,
            witness_minimal: complete,
        });
    }
    Err(Error::Internal(format!("no polynomial of degree <= {cap} vanishes at {p}")))
}

/// Whether `F` vanishes at the point, evaluated exactly.
pub fn vanishes_at(f: &AuxPoly, p: &Point2, base: &BaseField) -> Result<bool> {
    Ok(f.in_field(p.field(), base)?.eval(p.x(), p.y()).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s23() -> Point2 {
        Point2::parse("t^4-10*t^2+1", "(t^3-9*t)/2", "(11*t-t^3)/2").unwrap()
    }

    #[test]
    fn omega_examples() {
        let q = BaseField::Rationals;
        let p = Point2::from_ints(2, 3).unwrap();
        let o = obstruction_index(&p, &q).unwrap();
        assert_eq!(o.omega, 1);
        assert!(vanishes_at(&o.witness, &p, &q).unwrap());

        let p = Point2::parse("t^2-2", "t", "1+t").unwrap();
        let o = obstruction_index(&p, &q).unwrap();
        assert_eq!(o.omega, 1);
        assert_eq!(o.witness.to_string(), "-x + y - 1");

        let o = obstruction_index(&s23(), &q).unwrap();
        assert_eq!(o.omega, 2);
        assert_eq!(o.relative_degree, 4);
        assert!(vanishes_at(&o.witness, &s23(), &q).unwrap());
    }

    #[test]
    fn dims() {
        let q = BaseField::Rationals;
        let p = Point2::from_ints(2, 3).unwrap();
        assert_eq!(jet_space_dim(&p, 2, 1, &q).unwrap(), 5);
        assert_eq!(jet_space_dim(&s23(), 1, 1, &q).unwrap(), 0);
        assert_eq!(jet_space_dim(&s23(), 2, 1, &q).unwrap(), 2);
    }

    #[test]
    fn over_cyclotomic_base() {
        // (ζ_4 + 2, 3) is cut out by x - ζ_4 - 2 over Q(ζ_4) but needs degree 2 over Q.
        let p = Point2::parse("zeta_4", "t+2", "3").unwrap();
        let k = BaseField::cyclotomic(4, p.field()).unwrap();
        let o = obstruction_index(&p, &k).unwrap();
        assert_eq!(o.omega, 1);
        assert_eq!(o.relative_degree, 1);
        assert!(vanishes_at(&o.witness, &p, &k).unwrap());
        assert_eq!(obstruction_index(&p, &BaseField::Rationals).unwrap().omega, 1);
        assert_eq!(jet_space_dim(&p, 1, 1, &k).unwrap(), 2);
        assert_eq!(jet_space_dim(&p, 1, 1, &BaseField::Rationals).unwrap(), 1);
    }

    #[test]
    fn monomial_order() {
        assert_eq!(monomials(1), vec![(0, 0), (1, 0), (0, 1)]);
        assert_eq!(monomials(2).len(), 6);
    }
}
