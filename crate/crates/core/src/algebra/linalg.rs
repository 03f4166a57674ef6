//! Exact linear algebra over Z and Q: fraction-free elimination, rational
//! solves, and saturated integer kernels via Hermite reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

/// Clears denominators row by row.
pub fn integer_rows(m: &RatMatrix) -> IntMatrix {
    m.iter()
        .map(|row| {
            let den = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect()
        })
        .collect()
}

/// Rank and row echelon structure by Bareiss elimination.
pub fn rank_int(m: &IntMatrix) -> usize {
    bareiss(m.clone()).0
}

pub fn rank_rat(m: &RatMatrix) -> usize {
    rank_int(&integer_rows(m))
}

/// Returns `(rank, echelon form, sign of the row permutation)`. For square
/// input of full rank the last pivot is the determinant up to that sign.
fn bareiss(mut a: IntMatrix) -> (usize, IntMatrix, i32) {
    let rows = a.len();
    if rows == 0 {
        return (0, a, 1);
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut sign = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if piv != r {
            a.swap(piv, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, a, sign)
}

pub fn det_int(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let (r, a, sign) = bareiss(m.clone());
    if r < n {
        return BigInt::zero();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn det_rat(m: &RatMatrix) -> BigRational {
    let mut scale = BigInt::one();
    let int: IntMatrix = m
        .iter()
        .map(|row| {
            let den = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &den;
            row.iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect()
        })
        .collect();
    BigRational::new(det_int(&int), scale)
}

/// Solves `a x = b` for square nonsingular `a`; `None` if singular.
pub fn solve_rat(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(piv, c);
        let inv = m[c][c].recip();
        for j in c..=n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = &m[c][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// A basis of the integer kernel `{v in Z^n : a v = 0}` which generates every
/// integer solution (saturated). Computed by unimodular row reduction of
/// `[a^T | I]`.
pub fn integer_kernel(a: &IntMatrix, n: usize) -> IntMatrix {
    let r = a.len();
    // Rows of w are [a^T row i | e_i].
    let mut w: IntMatrix = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..r).map(|k| a[k][i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut top = 0;
    for c in 0..r {
        if top == n {
            break;
        }
        // Euclid on column c among rows top..n.
        loop {
            let mut best: Option<usize> = None;
            for i in top..n {
                if !w[i][c].is_zero()
                    && best.map_or(true, |b| w[i][c].abs() < w[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            w.swap(top, b);
            let mut done = true;
            for i in top + 1..n {
                if !w[i][c].is_zero() {
                    let q = w[i][c].div_floor(&w[top][c]);
                    let (head, tail) = w.split_at_mut(i);
                    for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                        *x -= &q * y;
                    }
                    if !w[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !w[top][c].is_zero() {
            top += 1;
        }
    }
    let mut kernel: IntMatrix = w[top..]
        .iter()
        .map(|row| row[r..].to_vec())
        .collect();
    size_reduce_rows(&mut kernel);
    kernel
}

/// Cheap pairwise reduction to keep kernel entries from ballooning before LLL.
fn size_reduce_rows(rows: &mut IntMatrix) {
    for i in 0..rows.len() {
        for j in 0..rows.len() {
            if i == j {
                continue;
            }
            let nj: BigInt = rows[j].iter().map(|x| x * x).sum();
            if nj.is_zero() {
                continue;
            }
            let dot: BigInt = rows[i].iter().zip(&rows[j]).map(|(x, y)| x * y).sum();
            let two = BigInt::from(2);
            let q: BigInt = (&two * &dot + &nj).div_floor(&(&two * &nj));
            if !q.is_zero() {
                let rj = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(&rj) {
                    *x -= &q * y;
                }
            }
        }
    }
}

pub fn mat_vec_int(a: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant() {
        assert_eq!(det_int(&im(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(det_int(&im(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det_int(&im(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])),
            BigInt::from(-3)
        );
        assert_eq!(det_int(&im(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn rank() {
        assert_eq!(rank_int(&im(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]])), 2);
        assert_eq!(rank_int(&im(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn kernel_saturated() {
        // 2x + 4y = 0 has kernel generated by (2, -1), not (4, -2).
        let k = integer_kernel(&im(&[&[2, 4]]), 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v == &vec![BigInt::from(2), BigInt::from(-1)] || v == &vec![BigInt::from(-2), BigInt::from(1)]);
    }

    #[test]
    fn kernel_dimension() {
        let a = im(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let k = integer_kernel(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec_int(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve() {
        let a = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        let x = solve_rat(&a, &[rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
    }
}
