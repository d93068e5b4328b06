use super::field::{Field, FieldElem};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|e| !field.contains(e)) {
            return Err(Error::MixedFields);
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers (reduced into the field).
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self> {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, data)
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let zero = field.zero();
        Matrix { data: vec![zero; rows * cols], field, rows, cols }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) -> Result<()> {
        if !self.field.contains(&v) {
            return Err(Error::MixedFields);
        }
        self.data[r * self.cols + c] = v;
        Ok(())
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::InvalidInput("dimension mismatch in product".into()));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = f.zero();
                for t in 0..self.cols {
                    acc = f.add_raw(&acc, &f.mul_raw(self.get(i, t), other.get(t, j)));
                }
                out.data[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv_raw(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul_raw(m.get(r, j), &inv);
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let t = f.mul_raw(&factor, m.get(r, j));
                    let v = f.sub_raw(m.get(i, j), &t);
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: r, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f.clone(), free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.data[k * self.cols + fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                out.data[k * self.cols + pc] = f.neg_raw(r.get(i, fc));
            }
        }
        out
    }

    /// Rows with the given indices, in order.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for r in 0..self.rows {
            for &c in idx {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: idx.len(), data }
    }

    /// Applies `map` to every entry, landing in `target`.
    pub fn map_into(&self, target: Field, mut map: impl FnMut(&FieldElem) -> FieldElem) -> Result<Matrix> {
        let data = self.data.iter().map(&mut map).collect();
        Matrix::new(target, self.rows, self.cols, data)
    }

    /// True if both matrices have the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.rank == b.rank
            && (0..a.rank).all(|i| a.matrix.row(i) == b.matrix.row(i))
    }
}

/// Incrementally built echelon basis of a subspace of `F^dim`; used for
/// span-membership tests on generator columns.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    field: Field,
    /// Each stored vector has a 1 at its pivot and zeros at all earlier pivots.
    vectors: Vec<(usize, Vec<FieldElem>)>,
}

impl SpanBasis {
    pub fn new(field: Field) -> Self {
        SpanBasis { field, vectors: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    fn reduce(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (pivot, b) in &self.vectors {
            if f.is_zero(&v[*pivot]) {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !f.is_zero(y) {
                    *x = f.sub_raw(x, &f.mul_raw(&factor, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let f = &self.field;
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv_raw(&r[pivot]).expect("pivot is nonzero");
        for x in r.iter_mut() {
            *x = f.mul_raw(x, &inv);
        }
        self.vectors.push((pivot, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn hexacode() -> Matrix {
        let f: Field = "gf 4 modulus=[1,1,1]".parse().unwrap();
        let e = |s: &str| f.parse_elem(s).unwrap();
        let rows = vec![
            vec![e("1"), e("0"), e("0"), e("1"), e("1"), e("1")],
            vec![e("0"), e("1"), e("0"), e("1"), e("[0,1]"), e("[1,1]")],
            vec![e("0"), e("0"), e("1"), e("1"), e("[1,1]"), e("[0,1]")],
        ];
        Matrix::from_rows(f, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(gf(2), 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        let m = Matrix::from_i64(gf(2), &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(m.rref().rank, 2);
        assert_eq!(hexacode().rref().rank, 3);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(gf(5), &[&[1, 2, 3, 4], &[2, 4, 1, 3], &[0, 0, 2, 2]]).unwrap();
        let r = m.rref();
        assert_eq!(r.matrix.rref().matrix, r.matrix);
        assert_eq!(r.pivots, vec![0, 2]);
    }

    #[test]
    fn kernel_examples() {
        let m = Matrix::from_i64(gf(2), &[&[1, 1]]).unwrap();
        assert_eq!(m.kernel_basis(), Matrix::from_i64(gf(2), &[&[1, 1]]).unwrap());
        assert_eq!(Matrix::identity(gf(3), 2).kernel_basis().rows(), 0);
        let even = Matrix::from_i64(gf(2), &[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(even.kernel_basis(), Matrix::from_i64(gf(2), &[&[1, 1, 1]]).unwrap());
    }

    #[test]
    fn kernel_brute_force_over_f3() {
        let m = Matrix::from_i64(gf(3), &[&[1, 2, 0, 1], &[2, 1, 1, 0]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.rows() + m.rank(), 4);
        let product = m.mul(&k.transpose()).unwrap();
        assert!((0..product.rows()).all(|i| (0..product.cols()).all(|j| gf(3).is_zero(product.get(i, j)))));
        // brute force: number of kernel vectors is 3^(4 - rank)
        let f = gf(3);
        let mut count = 0;
        for code in 0..81i64 {
            let v: Vec<FieldElem> = (0..4).map(|i| f.from_i64(code / 3i64.pow(i) % 3)).collect();
            let col = Matrix::from_rows(f.clone(), v.iter().map(|x| vec![x.clone()]).collect()).unwrap();
            let prod = m.mul(&col).unwrap();
            if (0..2).all(|i| f.is_zero(prod.get(i, 0))) {
                count += 1;
            }
        }
        assert_eq!(count, 3usize.pow(k.rows() as u32));
    }

    #[test]
    fn span_basis_membership() {
        let f = gf(2);
        let mut b = SpanBasis::new(f.clone());
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        assert!(b.insert(&v(&[1, 0])));
        assert!(!b.contains(&v(&[1, 1])));
        assert!(b.insert(&v(&[1, 1])));
        assert!(b.contains(&v(&[0, 1])));
        assert!(!b.insert(&v(&[0, 1])));
        assert_eq!(b.rank(), 2);
    }
}
