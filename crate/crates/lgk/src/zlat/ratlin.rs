//! Small rational linear-algebra helpers used for span and membership
//! questions over Q. Dense Gaussian elimination with BigRational entries;
//! everything stays exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type RatVec = Vec<BigRational>;

pub fn to_rational(v: &[BigInt]) -> RatVec {
    v.iter().map(|x| BigRational::from(x.clone())).collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[BigRational], b: &[BigInt]) -> BigRational {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * BigRational::from(y.clone()))
        .sum()
}

/// Solves `A x = b` where the columns of `A` are the given vectors.
/// Returns any solution, or None when `b` is outside the column span.
pub fn solve_columns(columns: &[RatVec], b: &RatVec) -> Option<RatVec> {
    let dim = b.len();
    let n = columns.len();
    // augmented matrix [A | b], rows = dim
    let mut m: Vec<RatVec> = (0..dim)
        .map(|i| {
            let mut row: RatVec = columns.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..dim).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..dim {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=n {
                    let delta = &f * &m[r][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == dim {
            break;
        }
    }
    // consistency: no pivot in the b column
    for i in r..dim {
        if !m[i][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &c) in pivot_col_of_row.iter().enumerate() {
        x[c] = m[row][n].clone();
    }
    Some(x)
}

/// Rank of the set of vectors over Q.
pub fn rank(vectors: &[RatVec]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors[0].len();
    let mut m: Vec<RatVec> = vectors.to_vec();
    let mut rank = 0;
    for c in 0..dim {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..dim {
                    let delta = &f * &m[rank][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Membership of `v` in the Q-span of `spanning`.
pub fn in_span(spanning: &[RatVec], v: &RatVec) -> bool {
    solve_columns(spanning, v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> RatVec {
        v.iter().map(|&x| BigRational::from(BigInt::from(x))).collect()
    }

    #[test]
    fn solve_and_span() {
        let cols = vec![r(&[1, 0, 1]), r(&[0, 1, 1])];
        let b = r(&[2, 3, 5]);
        let x = solve_columns(&cols, &b).unwrap();
        assert_eq!(x, r(&[2, 3]));
        assert!(!in_span(&cols, &r(&[1, 0, 0])));
    }

    #[test]
    fn rank_counts_independents() {
        assert_eq!(rank(&[r(&[1, 2]), r(&[2, 4]), r(&[0, 1])]), 2);
        assert_eq!(rank(&[]), 0);
    }
}
