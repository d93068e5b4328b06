//! Integer matrices: row Hermite normal form, Smith normal form and row
//! saturation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// `u * m = h` with `h` in row Hermite normal form and `u` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
}

/// `u * m * w = d` with `d` diagonal, `d_i | d_{i+1}`, `u` and `w`
/// unimodular; `w_inv` is `w^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub w: IntMatrix,
    pub w_inv: IntMatrix,
    pub rank: usize,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {rows}x{cols} integer matrix",
                rows * cols
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| BigInt::from(v))).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    fn at(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> IntMatrix {
        let idx: Vec<usize> = idx.into_iter().collect();
        let data = idx.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        IntMatrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.get(t, j);
                    *out.at(i, j) += v;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    *m.at(i, j) = v;
                }
            }
            prev = m.get(k, k).clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            *self.at(dst, j) += v;
        }
    }

    /// `col[dst] += k * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            *self.at(i, dst) += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            *self.at(r, j) = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c);
            *self.at(i, c) = v;
        }
    }

    /// Row Hermite normal form: pivots positive, entries above each pivot
    /// reduced into `[0, pivot)`, zero rows last.
    pub fn hnf(&self) -> Hnf {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut r = 0;
        for c in 0..h.cols {
            if r == h.rows {
                break;
            }
            loop {
                // smallest nonzero |entry| in column c at or below row r
                let best = (r..h.rows)
                    .filter(|&i| !h.get(i, c).is_zero())
                    .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
                let Some(best) = best else { break };
                h.swap_rows(r, best);
                u.swap_rows(r, best);
                let mut done = true;
                for i in r + 1..h.rows {
                    if h.get(i, c).is_zero() {
                        continue;
                    }
                    let k = -h.get(i, c).div_floor(h.get(r, c));
                    h.add_row(i, r, &k);
                    u.add_row(i, r, &k);
                    if !h.get(i, c).is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if h.get(r, c).is_zero() {
                continue;
            }
            if h.get(r, c).is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            for i in 0..r {
                let k = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row(i, r, &k);
                u.add_row(i, r, &k);
            }
            r += 1;
        }
        Hnf { h, u, rank: r }
    }

    pub fn smith(&self) -> Smith {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut w = IntMatrix::identity(n);
        let mut w_inv = IntMatrix::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            let pos = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !d.get(i, j).is_zero())
                .min_by(|&(a, b), &(c, e)| d.get(a, b).abs().cmp(&d.get(c, e).abs()));
            let Some((pi, pj)) = pos else { break };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            w.swap_cols(t, pj);
            w_inv.swap_rows(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if d.get(i, t).is_zero() {
                        continue;
                    }
                    let k = -d.get(i, t).div_floor(d.get(t, t));
                    d.add_row(i, t, &k);
                    u.add_row(i, t, &k);
                    if !d.get(i, t).is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..n {
                    if d.get(t, j).is_zero() {
                        continue;
                    }
                    let k = -d.get(t, j).div_floor(d.get(t, t));
                    d.add_col(j, t, &k);
                    w.add_col(j, t, &k);
                    // inverse of col_j += k col_t is row_t -= k row_j on the left
                    w_inv.add_row(t, j, &-&k);
                    if !d.get(t, j).is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    // divisibility condition on the remaining block
                    let bad = (t + 1..m)
                        .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !d.get(i, j).is_multiple_of(d.get(t, t)));
                    match bad {
                        None => break,
                        Some((i, _)) => {
                            let one = BigInt::one();
                            d.add_row(t, i, &one);
                            u.add_row(t, i, &one);
                            continue;
                        }
                    }
                }
                // move the smallest entry of row/column t to the pivot
                let col_best = (t..m)
                    .filter(|&i| !d.get(i, t).is_zero())
                    .min_by(|&a, &b| d.get(a, t).abs().cmp(&d.get(b, t).abs()))
                    .unwrap();
                let row_best = (t..n)
                    .filter(|&j| !d.get(t, j).is_zero())
                    .min_by(|&a, &b| d.get(t, a).abs().cmp(&d.get(t, b).abs()))
                    .unwrap();
                if d.get(col_best, t).abs() <= d.get(t, row_best).abs() {
                    d.swap_rows(t, col_best);
                    u.swap_rows(t, col_best);
                } else {
                    d.swap_cols(t, row_best);
                    w.swap_cols(t, row_best);
                    w_inv.swap_rows(t, row_best);
                }
            }
            if d.get(t, t).is_negative() {
                d.negate_col(t);
                w.negate_col(t);
                w_inv.negate_row(t);
            }
            t += 1;
        }
        Smith { d, u, w, w_inv, rank: t }
    }

    /// Nonzero diagonal entries of the Smith normal form.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let s = self.smith();
        (0..s.rank).map(|i| s.d.get(i, i).clone()).collect()
    }

    /// A basis (in Hermite normal form) of the saturation
    /// `(Q * rowspace) ∩ Z^n` of the row lattice.
    pub fn row_saturation(&self) -> IntMatrix {
        let s = self.smith();
        let basis = s.w_inv.select_rows(0..s.rank);
        let hnf = basis.hnf();
        hnf.h.select_rows(0..hnf.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_hnf(h: &IntMatrix) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for r in 0..h.rows() {
            match (0..h.cols()).find(|&c| !h.get(r, c).is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last_pivot.is_some_and(|p| c <= p) || !h.get(r, c).is_positive() {
                        return false;
                    }
                    for i in 0..r {
                        let v = h.get(i, c);
                        if v.is_negative() || v >= h.get(r, c) {
                            return false;
                        }
                    }
                    last_pivot = Some(c);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_examples() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[0, 2]]);
        let hnf = m.hnf();
        assert_eq!(hnf.h, IntMatrix::from_i64(&[&[2, 0], &[0, 2]]));
        assert_eq!(hnf.u.mul(&m), hnf.h);
        assert_eq!(hnf.u.determinant().abs(), BigInt::one());

        let id = IntMatrix::identity(3);
        assert_eq!(id.hnf().h, id);
        assert_eq!(id.hnf().u, id);

        let z = IntMatrix::from_i64(&[&[0, 0]]);
        assert_eq!(z.hnf().rank, 0);
        assert_eq!(z.hnf().h, z);
    }

    #[test]
    fn hnf_random_matrices() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 13) as i64 - 6
        };
        for _ in 0..50 {
            let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..5).map(|_| next()).collect()).collect();
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let m = IntMatrix::from_i64(&refs);
            let hnf = m.hnf();
            assert_eq!(hnf.u.mul(&m), hnf.h);
            assert_eq!(hnf.u.determinant().abs(), BigInt::one());
            assert!(is_hnf(&hnf.h), "{:?}", hnf.h);

            let s = m.smith();
            assert_eq!(s.u.mul(&m).mul(&s.w), s.d);
            assert_eq!(s.w.mul(&s.w_inv), IntMatrix::identity(5));
            for i in 1..s.rank {
                assert!(s.d.get(i, i).is_multiple_of(s.d.get(i - 1, i - 1)));
            }
        }
    }

    #[test]
    fn determinant_small() {
        assert_eq!(IntMatrix::from_i64(&[&[2, 1], &[7, 4]]).determinant(), BigInt::from(1));
        assert_eq!(IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).determinant(),
            BigInt::from(-3)
        );
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(IntMatrix::from_i64(&[&[2, 4]]).row_saturation(), IntMatrix::from_i64(&[&[1, 2]]));
        assert_eq!(IntMatrix::identity(2).row_saturation(), IntMatrix::identity(2));
        let m = IntMatrix::from_i64(&[&[2, 0, 2], &[0, 3, 3]]);
        let s = m.row_saturation();
        assert_eq!(s.elementary_divisors(), vec![BigInt::one(), BigInt::one()]);
        assert_eq!(s, IntMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]));
    }
}
