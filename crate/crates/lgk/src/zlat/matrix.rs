use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major, arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

/// Result of `smith_normal_form`: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal with a divisibility chain.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(dim: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zero(dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), dim);
            for i in 0..dim {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows(dim: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zero(rows.len(), dim);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), dim);
            for j in 0..dim {
                m[(i, j)] = r[j].clone();
            }
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self[(i, j)] = v;
    }

    /// Entrywise multiple.
    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        let entries = self.entries.iter().map(|e| e * c).collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn rank(&self) -> usize {
        self.smith_normal_form().rank
    }

    /// Integer kernel of the matrix viewed as a map Z^cols -> Z^rows.
    /// Returns a basis, one column per kernel vector; the basis spans the
    /// saturated kernel sublattice.
    pub fn kernel_basis(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let mut cols = Vec::new();
        for j in snf.rank..self.cols {
            cols.push(snf.v.column(j));
        }
        IntMatrix::from_columns(self.cols, &cols)
    }

    /// Particular integer solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows);
        let snf = self.smith_normal_form();
        let ub = snf.u.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.cols];
        for i in 0..self.rows {
            let di = if i < self.cols { snf.d[(i, i)].clone() } else { BigInt::zero() };
            if di.is_zero() {
                if !ub[i].is_zero() {
                    return None;
                }
            } else {
                let (q, r) = num_integer::div_rem(ub[i].clone(), di);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        }
        Some(snf.v.mul_vec(&y))
    }

    /// Inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        let snf = self.smith_normal_form();
        assert!(snf.d.is_identity(), "matrix is not unimodular");
        // u * m * v = 1  =>  m^{-1} = v * u
        snf.v.mul(&snf.u)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.smith_normal_form().d.is_identity()
    }

    /// Diagonal entries (up to min(rows, cols)).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Smith normal form with a fixed pivoting rule: smallest absolute
    /// nonzero pivot, leftmost-topmost tie-break. Deterministic.
    pub fn smith_normal_form(&self) -> Snf {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            // pivot choice: smallest |entry| != 0 in d[t.., t..],
            // ties broken topmost then leftmost
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => d[(i, j)].abs() < d[(pi, pj)].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            d.swap_rows(t, pi, &mut u);
            d.swap_cols(t, pj, &mut v);

            // eliminate row and column t; restart if elimination leaves a
            // smaller residue (then it becomes the next pivot)
            loop {
                let mut clean = true;
                for i in t + 1..d.rows {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let q = div_round(&d[(i, t)], &d[(t, t)]);
                    d.row_axpy(i, t, &-q, &mut u);
                    if !d[(i, t)].is_zero() {
                        d.swap_rows(t, i, &mut u);
                        clean = false;
                    }
                }
                for j in t + 1..d.cols {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let q = div_round(&d[(t, j)], &d[(t, t)]);
                    d.col_axpy(j, t, &-q, &mut v);
                    if !d[(t, j)].is_zero() {
                        d.swap_cols(t, j, &mut v);
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // enforce divisibility: pivot must divide every remaining entry
                let mut offender = None;
                'scan: for i in t + 1..d.rows {
                    for j in t + 1..d.cols {
                        if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        // fold the offending row into row t and re-eliminate
                        d.row_axpy(t, i, &BigInt::one(), &mut u);
                    }
                    None => break,
                }
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t, &mut u);
            }
            t += 1;
        }
        let rank = (0..n).take_while(|&i| !d[(i, i)].is_zero()).count();
        Snf { u, d, v, rank }
    }

    fn swap_rows(&mut self, a: usize, b: usize, u: &mut IntMatrix) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (x, y) = (self[(a, j)].clone(), self[(b, j)].clone());
            self[(a, j)] = y;
            self[(b, j)] = x;
        }
        for j in 0..u.cols {
            let (x, y) = (u[(a, j)].clone(), u[(b, j)].clone());
            u[(a, j)] = y;
            u[(b, j)] = x;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize, v: &mut IntMatrix) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let (x, y) = (self[(i, a)].clone(), self[(i, b)].clone());
            self[(i, a)] = y;
            self[(i, b)] = x;
        }
        for i in 0..v.rows {
            let (x, y) = (v[(i, a)].clone(), v[(i, b)].clone());
            v[(i, a)] = y;
            v[(i, b)] = x;
        }
    }

    /// row[a] += c * row[b], mirrored on u.
    fn row_axpy(&mut self, a: usize, b: usize, c: &BigInt, u: &mut IntMatrix) {
        for j in 0..self.cols {
            let delta = c * &self[(b, j)];
            self[(a, j)] += delta;
        }
        for j in 0..u.cols {
            let delta = c * &u[(b, j)];
            u[(a, j)] += delta;
        }
    }

    /// col[a] += c * col[b], mirrored on v.
    fn col_axpy(&mut self, a: usize, b: usize, c: &BigInt, v: &mut IntMatrix) {
        for i in 0..self.rows {
            let delta = c * &self[(i, b)];
            self[(i, a)] += delta;
        }
        for i in 0..v.rows {
            let delta = c * &v[(i, b)];
            v[(i, a)] += delta;
        }
    }

    fn negate_row(&mut self, a: usize, u: &mut IntMatrix) {
        for j in 0..self.cols {
            let x = -self[(a, j)].clone();
            self[(a, j)] = x;
        }
        for j in 0..u.cols {
            let x = -u[(a, j)].clone();
            u[(a, j)] = x;
        }
    }
}

/// Quotient rounded to nearest, so the remainder has at most half the
/// pivot's absolute value. Keeps SNF coefficient growth in check.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = num_integer::div_rem(a.clone(), b.clone());
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> Snf {
        let snf = m.smith_normal_form();
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "u*m*v != d for\n{m}");
        assert!(snf.u.is_unimodular());
        assert!(snf.v.is_unimodular());
        let diag = snf.d.diagonal();
        for i in 0..snf.rank {
            assert!(!diag[i].is_zero());
            assert!(!diag[i].is_negative());
            if i + 1 < diag.len() && !diag[i + 1].is_zero() {
                assert!((&diag[i + 1] % &diag[i]).is_zero(), "chain broken: {diag:?}");
            }
        }
        for d in diag.iter().skip(snf.rank) {
            assert!(d.is_zero());
        }
        // off-diagonal must vanish
        for i in 0..snf.d.rows {
            for j in 0..snf.d.cols {
                if i != j {
                    assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
        snf
    }

    #[test]
    fn snf_diag_2_3() {
        let m = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let snf = check_snf(&m);
        assert_eq!(snf.d, IntMatrix::from_i64(2, 2, &[1, 0, 0, 6]));
    }

    #[test]
    fn snf_zero_and_identity() {
        let z = IntMatrix::from_i64(1, 1, &[0]);
        assert_eq!(check_snf(&z).d, z);
        let id = IntMatrix::identity(3);
        assert_eq!(check_snf(&id).d, id);
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMatrix::from_i64(2, 3, &[4, 6, 10, 2, 2, 6]);
        check_snf(&m);
        let m = IntMatrix::from_i64(3, 1, &[6, 10, 15]);
        let snf = check_snf(&m);
        assert_eq!(snf.d[(0, 0)], BigInt::one());
    }

    #[test]
    fn snf_empty() {
        let m = IntMatrix::zero(2, 0);
        let snf = m.smith_normal_form();
        assert_eq!(snf.rank, 0);
        assert_eq!(snf.u, IntMatrix::identity(2));
    }

    #[test]
    fn snf_deterministic() {
        let m = IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, 4, 16]);
        let a = m.smith_normal_form();
        let b = m.smith_normal_form();
        assert_eq!(a.u, b.u);
        assert_eq!(a.d, b.d);
        assert_eq!(a.v, b.v);
        check_snf(&m);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_i64(2, 3, &[1, 1, 1, 0, 2, 4]);
        let k = m.kernel_basis();
        assert_eq!(k.cols, 1);
        assert!(m.mul(&k).is_zero());
        let b = vec![BigInt::from(3), BigInt::from(6)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // unsolvable: 2x = 1
        let m2 = IntMatrix::from_i64(1, 1, &[2]);
        assert!(m2.solve(&[BigInt::one()]).is_none());
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IntMatrix::from_i64(2, 2, &[2, 1, 1, 1]);
        let inv = m.unimodular_inverse();
        assert!(m.mul(&inv).is_identity());
    }
}
