use crate::algebra::{Field, FieldElem, Matrix, SpanBasis};
use crate::error::{Error, Result};

use super::index_set::{IndexSet, MAX_LENGTH};

/// A linear `[n, k]` code given by a `k x n` generator matrix of full row
/// rank. Column `i` is the coordinate functional `phi_i` written in the
/// basis of the rows.
#[derive(Clone, Debug)]
pub struct Code {
    generator: Matrix,
    columns: Vec<Vec<FieldElem>>,
    allow_zero_columns: bool,
}

impl Code {
    pub fn new(field: Field, generator: Matrix, allow_zero_columns: bool) -> Result<Self> {
        if *generator.field() != field {
            return Err(Error::MixedFields);
        }
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || n == 0 {
            return Err(Error::InvalidInput("generator matrix must be nonempty".into()));
        }
        if n > MAX_LENGTH {
            return Err(Error::LengthTooLarge(n));
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::RankDeficientGenerator { rank, rows: k });
        }
        let columns: Vec<Vec<FieldElem>> = (0..n).map(|c| generator.column(c)).collect();
        if !allow_zero_columns {
            if let Some(i) = columns.iter().position(|c| c.iter().all(|e| field.is_zero(e))) {
                return Err(Error::ZeroColumn(i + 1));
            }
        }
        Ok(Code { generator, columns, allow_zero_columns })
    }

    /// Code over the generator's own field, zero columns rejected.
    pub fn from_generator(generator: Matrix) -> Result<Self> {
        let field = generator.field().clone();
        Code::new(field, generator, false)
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn len(&self) -> usize {
        self.generator.cols()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn allows_zero_columns(&self) -> bool {
        self.allow_zero_columns
    }

    pub fn column(&self, i: usize) -> &[FieldElem] {
        &self.columns[i]
    }

    pub(crate) fn span_of(&self, s: IndexSet) -> SpanBasis {
        let mut basis = SpanBasis::new(self.field().clone());
        for i in s.iter() {
            if basis.rank() == self.dim() {
                break;
            }
            basis.insert(&self.columns[i]);
        }
        basis
    }

    /// Closure of `s` given a basis of the span of its columns.
    pub(crate) fn closure_from_basis(&self, s: IndexSet, basis: &SpanBasis) -> IndexSet {
        let n = self.len();
        if basis.rank() == self.dim() {
            return IndexSet::full(n);
        }
        let mut out = s;
        for i in s.complement(n).iter() {
            if basis.contains(&self.columns[i]) {
                out.insert(i);
            }
        }
        out
    }

    /// Smallest saturated set containing `s`: all positions whose column lies
    /// in the span of the columns indexed by `s`.
    pub fn closure(&self, s: IndexSet) -> IndexSet {
        self.closure_from_basis(s, &self.span_of(s))
    }

    pub fn is_saturated(&self, s: IndexSet) -> bool {
        self.closure(s) == s
    }

    /// Rank of the columns indexed by `s`.
    pub fn rank_of(&self, s: IndexSet) -> usize {
        self.span_of(s).rank()
    }

    /// `dim(S) = k - rank(col(G, S))`, the dimension of the subcode vanishing
    /// on `s`.
    pub fn dim_of(&self, s: IndexSet) -> Result<usize> {
        if !s.is_subset(IndexSet::full(self.len())) || !self.is_saturated(s) {
            return Err(Error::NotSaturated);
        }
        Ok(self.dim() - self.rank_of(s))
    }

    /// Dual code under the standard inner product. The dual may have zero
    /// columns (when the code has weight-one words), so they are allowed.
    pub fn dual(&self) -> Result<Code> {
        if self.dim() == self.len() {
            return Err(Error::DimensionZeroDual);
        }
        let kernel = self.generator.kernel_basis();
        Code::new(self.field().clone(), kernel, true)
    }

    /// The same generator read over `target`, which must be a finite field
    /// containing this code's field.
    pub fn extend_scalars(&self, target: &Field) -> Result<Code> {
        let embed = embedding(self.field(), target)?;
        let g = self.generator.map_into(target.clone(), |e| embed(e))?;
        Code::new(target.clone(), g, self.allow_zero_columns)
    }

    /// Extension to the field of `|F|^degree` elements, presented by the
    /// default modulus.
    pub fn extend_degree(&self, degree: u32) -> Result<Code> {
        let f = self
            .field()
            .finite()
            .ok_or_else(|| Error::IncompatibleCharacteristic("the rationals have no finite extensions".into()))?;
        if degree == 0 {
            return Err(Error::OutOfRange("extension degree must be positive".into()));
        }
        if degree == 1 {
            return Ok(self.clone());
        }
        let target = Field::galois(f.characteristic(), f.degree() * degree)?;
        self.extend_scalars(&target)
    }

    /// Applies a column permutation (`perm[i]` is the new position of column
    /// `i`) and nonzero column scalings.
    pub fn transform_columns(&self, perm: &[usize], scalars: &[FieldElem]) -> Result<Code> {
        let (k, n) = (self.dim(), self.len());
        let f = self.field();
        if perm.len() != n || scalars.len() != n {
            return Err(Error::InvalidInput("permutation and scalars must have length n".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
        }
        if scalars.iter().any(|s| !f.contains(s) || f.is_zero(s)) {
            return Err(Error::InvalidInput("column scalars must be nonzero field elements".into()));
        }
        let mut g = Matrix::zeros(f.clone(), k, n);
        for c in 0..n {
            for r in 0..k {
                g.set(r, perm[c], f.mul(self.generator.get(r, c), &scalars[c])?)?;
            }
        }
        Code::new(f.clone(), g, self.allow_zero_columns)
    }
}

/// Embedding of `source` into `target` as an element map.
fn embedding(source: &Field, target: &Field) -> Result<impl Fn(&FieldElem) -> FieldElem> {
    let (Some(s), Some(t)) = (source.finite(), target.finite()) else {
        return Err(Error::IncompatibleCharacteristic(format!(
            "cannot embed {source} into {target}"
        )));
    };
    if s.characteristic() != t.characteristic() {
        return Err(Error::IncompatibleCharacteristic(format!(
            "characteristic {} differs from {}",
            s.characteristic(),
            t.characteristic()
        )));
    }
    if t.degree() % s.degree() != 0 {
        return Err(Error::DegreeMismatch(format!(
            "F_{} is not a subfield of F_{}",
            s.order(),
            t.order()
        )));
    }
    // image of the generator of `source`: smallest root of its modulus in `target`
    let root = match s.modulus() {
        None => None,
        Some(modulus) => {
            let eval = |x: u64| {
                modulus.iter().rev().fold(0u64, |acc, &c| t.add(t.mul(acc, x), c))
            };
            if t.order() > 1 << 24 {
                return Err(Error::OutOfRange("target field too large for root search".into()));
            }
            Some((0..t.order()).find(|&x| eval(x) == 0).expect("modulus splits in the extension"))
        }
    };
    let s = s.clone();
    let t = t.clone();
    Ok(move |e: &FieldElem| match (e, root) {
        (FieldElem::Finite(v), None) => FieldElem::Finite(*v),
        (FieldElem::Finite(v), Some(beta)) => {
            let image = s
                .coeffs(*v)
                .iter()
                .rev()
                .fold(0u64, |acc, &c| t.add(t.mul(acc, beta), c));
            FieldElem::Finite(image)
        }
        (FieldElem::Rational(_), _) => unreachable!("finite source field"),
    })
}
