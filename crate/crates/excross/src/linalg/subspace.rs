use std::collections::BTreeMap;

use num::{One, Zero};

use super::{LinalgError, Matrix, Rat};

/// A linear subspace of Q^n, stored as a reduced row-echelon basis.
///
/// The RREF basis is canonical, so two `Subspace` values are equal as sets of
/// vectors if and only if they are structurally equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::empty(ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
            rows.push(v);
        }
        let (r, pivots) = Matrix::from_rows(rows)?.rref();
        let basis_rows: Vec<Vec<Rat>> = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Ok(Subspace {
            ambient,
            basis: Matrix::from_rows(basis_rows)?.pad_cols(ambient),
            pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero_space(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.basis.iter_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction by the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (wj, bj) in w.iter_mut().zip(self.basis.row(i)) {
                    *wj -= &f * bj;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the RREF basis (`v = coords · basis`), if `v` lies in the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        // Left-nullspace of the stacked bases pairs coefficients (u, w) with
        // u·A = w·B; the common value spans the intersection.
        let k = self.dim();
        let mut stacked = Vec::with_capacity(k + other.dim());
        stacked.extend(self.basis_rows().map(<[Rat]>::to_vec));
        stacked.extend(other.basis_rows().map(<[Rat]>::to_vec));
        let stacked = Matrix::from_rows(stacked)?.pad_cols(self.ambient);
        let left_null = stacked.transpose().nullspace();
        let mut vectors = Vec::new();
        for z in left_null {
            let mut v = vec![Rat::zero(); self.ambient];
            for (i, zi) in z.iter().take(k).enumerate() {
                if !zi.is_zero() {
                    for (vj, bj) in v.iter_mut().zip(self.basis.row(i)) {
                        *vj += zi * bj;
                    }
                }
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.ambient, vectors)
    }

    pub fn intersect_all<'a, I>(ambient: usize, spaces: I) -> Result<Subspace, LinalgError>
    where
        I: IntoIterator<Item = &'a Subspace>,
    {
        let mut acc = Subspace::full(ambient);
        for s in spaces {
            acc = acc.intersect(s)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let rows = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(<[Rat]>::to_vec)
            .collect::<Vec<_>>();
        Subspace::from_vectors(self.ambient, rows)
    }

    /// Image of the subspace under a linear map (`m` applied to each basis vector).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        let mut vectors = Vec::with_capacity(self.dim());
        for r in self.basis_rows() {
            vectors.push(m.apply(r)?);
        }
        Subspace::from_vectors(m.rows(), vectors)
    }

    /// The n×n map that is the identity on this subspace and kills the
    /// complementary non-pivot coordinates: v ↦ Σ v[pivot_i]·basis_i.
    ///
    /// Used to extend maps defined on a subspace to ambient matrices in a
    /// canonical way.
    pub fn pivot_projector(&self) -> Matrix {
        let mut p = Matrix::zeros(self.ambient, self.ambient);
        for (i, &piv) in self.pivots.iter().enumerate() {
            for j in 0..self.ambient {
                p[(j, piv)] = self.basis[(i, j)].clone();
            }
        }
        p
    }
}

impl Matrix {
    /// Keeps a matrix with zero rows at the requested column count.
    fn pad_cols(self, cols: usize) -> Matrix {
        if self.rows() == 0 {
            Matrix::empty(cols)
        } else {
            self
        }
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of Q^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Sparse vector: sorted (index, nonzero coefficient) pairs.
pub type SparseVec = Vec<(usize, Rat)>;

pub fn sparse_from_dense(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, ambient: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); ambient];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a - f·b`, both sorted sparse.
fn sparse_sub_scaled(a: &SparseVec, f: &Rat, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = -(f * &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row-echelon span for fixpoint closures.
///
/// Rows are kept sparse and normalized with leading coefficient 1, keyed by
/// their leading index. Insertion reduces the candidate and reports whether
/// the span grew.
pub struct SpanBuilder {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SpanBuilder {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` by the current rows; the residue is either zero (no growth)
    /// or becomes a new row. Returns the inserted row if the span grew.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let mut v = v;
        loop {
            let (lead, coeff) = v.first().cloned()?;
            match self.rows.get(&lead) {
                Some(row) => v = sparse_sub_scaled(&v, &coeff, row),
                None => {
                    let inv = coeff.recip();
                    for (_, x) in v.iter_mut() {
                        *x *= &inv;
                    }
                    debug_assert!(v.first().map(|(_, c)| c == &Rat::one()).unwrap_or(false));
                    self.rows.insert(lead, v.clone());
                    return Some(v);
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        while let Some((lead, coeff)) = v.first().cloned() {
            match self.rows.get(&lead) {
                Some(row) => v = sparse_sub_scaled(&v, &coeff, row),
                None => return false,
            }
        }
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let ambient = self.ambient;
        let rows: Vec<Vec<Rat>> = self
            .rows
            .values()
            .map(|r| sparse_to_dense(r, ambient))
            .collect();
        Subspace::from_vectors(ambient, rows).expect("rows have ambient length")
    }
}
