//! Integral LLL reduction and short-vector enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::linalg::IntMatrix;

/// Reduction parameter δ = 99/100.
const DELTA_NUM: i64 = 99;
const DELTA_DEN: i64 = 100;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // b > 0
    let two = BigInt::from(2);
    (&two * a + b).div_floor(&(&two * b))
}

/// LLL-reduces the rows of `basis` in place using exact integer arithmetic.
/// Rows must be linearly independent.
pub fn lll(basis: &mut IntMatrix) {
    let n = basis.len();
    if n <= 1 {
        return;
    }
    // d[i+1] = det of Gram matrix of the first i+1 vectors; d[0] = 1.
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n]; n];
    d[0] = BigInt::from(1);
    d[1] = dot(&basis[0], &basis[0]);
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&basis[k], &basis[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input rows are dependent");
                    d[k + 1] = u;
                }
            }
        }
        red(basis, &mut lam, &d, k, k - 1);
        let lhs = BigInt::from(DELTA_DEN) * &d[k + 1] * &d[k - 1];
        let rhs = BigInt::from(DELTA_NUM) * &d[k] * &d[k]
            - BigInt::from(DELTA_DEN) * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            swap(basis, &mut lam, &mut d, k, kmax);
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                red(basis, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
}

fn red(b: &mut IntMatrix, lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    if 2 * lam[k][l].abs() > d[l + 1] {
        let q = round_div(&lam[k][l], &d[l + 1]);
        let bl = b[l].clone();
        for (x, y) in b[k].iter_mut().zip(&bl) {
            *x -= &q * y;
        }
        lam[k][l] -= &q * &d[l + 1];
        for i in 0..l {
            let v = &q * &lam[l][i];
            lam[k][i] -= v;
        }
    }
}

fn swap(b: &mut IntMatrix, lam: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, kmax: usize) {
    b.swap(k, k - 1);
    for j in 0..k - 1 {
        let t = lam[k][j].clone();
        lam[k][j] = lam[k - 1][j].clone();
        lam[k - 1][j] = t;
    }
    let l = lam[k][k - 1].clone();
    let bb = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
        lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k + 1];
    }
    d[k] = bb;
}

pub fn max_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_default()
}

/// Outcome of a bounded enumeration.
pub struct Enumeration {
    /// Every nonzero lattice vector found with max-norm at most the final bound.
    pub vectors: Vec<Vec<BigInt>>,
    /// False when the node budget ran out before the search tree was exhausted.
    pub complete: bool,
}

/// Enumerates lattice vectors `v` with `||v||_2^2 <= radius2` (Fincke–Pohst on
/// an LLL-reduced basis), keeping those whose max-norm is at most `max_inf`.
/// `v` and `-v` are reported once.
pub fn enumerate_short(
    basis: &IntMatrix,
    radius2: f64,
    max_inf: &BigInt,
    node_budget: usize,
) -> Enumeration {
    let n = basis.len();
    if n == 0 {
        return Enumeration { vectors: vec![], complete: true };
    }
    let dim = basis[0].len();
    let bf: Vec<Vec<f64>> = basis
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect())
        .collect();
    // Gram–Schmidt in floating point.
    let mut mu = vec![vec![0.0; n]; n];
    let mut bstar = bf.clone();
    let mut bn = vec![0.0; n];
    for i in 0..n {
        for j in 0..i {
            let num: f64 = bf[i].iter().zip(&bstar[j]).map(|(a, b)| a * b).sum();
            mu[i][j] = num / bn[j];
            for t in 0..dim {
                bstar[i][t] -= mu[i][j] * bstar[j][t];
            }
        }
        bn[i] = bstar[i].iter().map(|a| a * a).sum();
    }
    let r2 = radius2 * (1.0 + 1e-9) + 1e-9;
    let mut x = vec![0i64; n];
    let mut out = Vec::new();
    let mut nodes = 0usize;
    let mut complete = true;
    // Depth-first from the last coordinate.
    fn rec(
        level: usize,
        partial: f64,
        x: &mut Vec<i64>,
        ctx: &Ctx,
        out: &mut Vec<Vec<BigInt>>,
        nodes: &mut usize,
        complete: &mut bool,
    ) {
        if *nodes >= ctx.budget {
            *complete = false;
            return;
        }
        *nodes += 1;
        let n = x.len();
        let c: f64 = -(level + 1..n).map(|j| x[j] as f64 * ctx.mu[j][level]).sum::<f64>();
        let rem = ctx.r2 - partial;
        if rem < 0.0 {
            return;
        }
        let span = (rem / ctx.bn[level]).sqrt();
        let lo = (c - span).ceil() as i64;
        let hi = (c + span).floor() as i64;
        for v in lo..=hi {
            let diff = v as f64 - c;
            let np = partial + diff * diff * ctx.bn[level];
            if np > ctx.r2 {
                continue;
            }
            x[level] = v;
            if level == 0 {
                if x.iter().all(|&t| t == 0) {
                    continue;
                }
                // Canonical half: first nonzero coordinate (from the top) positive.
                let lead = x.iter().rev().find(|&&t| t != 0).copied().unwrap();
                if lead < 0 {
                    continue;
                }
                let mut vec = vec![BigInt::zero(); ctx.basis[0].len()];
                for (i, &xi) in x.iter().enumerate() {
                    if xi != 0 {
                        let xb = BigInt::from(xi);
                        for (t, b) in vec.iter_mut().zip(&ctx.basis[i]) {
                            *t += &xb * b;
                        }
                    }
                }
                if &max_norm(&vec) <= ctx.max_inf {
                    out.push(vec);
                }
            } else {
                rec(level - 1, np, x, ctx, out, nodes, complete);
            }
            if *nodes >= ctx.budget {
                *complete = false;
                break;
            }
        }
        x[level] = 0;
    }
    struct Ctx<'a> {
        mu: Vec<Vec<f64>>,
        bn: Vec<f64>,
        r2: f64,
        basis: &'a IntMatrix,
        max_inf: &'a BigInt,
        budget: usize,
    }
    let ctx = Ctx { mu, bn, r2, basis, max_inf, budget: node_budget };
    rec(n - 1, 0.0, &mut x, &ctx, &mut out, &mut nodes, &mut complete);
    Enumeration { vectors: out, complete }
}

/// Sign convention for coefficient vectors: last nonzero entry positive.
pub fn normalize_sign(v: &mut [BigInt]) {
    if v.iter().rev().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
}

/// Nonzero lattice vector of least max-norm, ties broken by lexicographic
/// order after sign normalization. Rows of `basis` must be independent; the
/// basis is LLL-reduced in place. The flag reports whether the enumeration
/// finished within `node_budget` (otherwise the result is the best seen).
pub fn shortest_max_norm(basis: &mut IntMatrix, node_budget: usize) -> (Vec<BigInt>, bool) {
    lll(basis);
    let mut best: Vec<BigInt> = basis
        .iter()
        .min_by(|a, b| max_norm(a).cmp(&max_norm(b)))
        .expect("nonempty basis")
        .clone();
    normalize_sign(&mut best);
    let m = max_norm(&best);
    let dim = basis[0].len() as f64;
    let mf = m.to_f64().unwrap_or(f64::MAX);
    let e = enumerate_short(basis, dim * mf * mf, &m, node_budget);
    for mut v in e.vectors {
        normalize_sign(&mut v);
        let (nv, nb) = (max_norm(&v), max_norm(&best));
        if nv < nb || (nv == nb && v < best) {
            best = v;
        }
    }
    (best, e.complete)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn gram_det(b: &IntMatrix) -> BigInt {
        let g: IntMatrix = b
            .iter()
            .map(|x| b.iter().map(|y| dot(x, y)).collect())
            .collect();
        super::super::linalg::det_int(&g)
    }

    #[test]
    fn lll_preserves_lattice_and_shortens() {
        let mut b = im(&[&[1, 0, 0, 1345], &[0, 1, 0, 35], &[0, 0, 1, 154]]);
        let det = gram_det(&b);
        lll(&mut b);
        assert_eq!(gram_det(&b), det);
        assert!(max_norm(&b[0]) < BigInt::from(20));
    }

    #[test]
    fn enumeration_finds_shortest() {
        let mut b = im(&[&[5, 3], &[8, 5]]);
        lll(&mut b);
        let e = enumerate_short(&b, 1.0, &BigInt::from(1), 10_000);
        assert!(e.complete);
        assert_eq!(e.vectors.len(), 2);
    }
}
