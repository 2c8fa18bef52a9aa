use num::Zero;

use super::subspace::{sparse_from_dense, sparse_to_dense, SpanBuilder, SparseVec};
use super::{LinalgError, Matrix, Rat, Subspace};

/// A finite-dimensional algebra given by structure constants on a labeled
/// basis, with an optional involution (as a coordinate matrix) and an optional
/// unit (as a coordinate vector).
///
/// Associativity is *not* assumed; it is checked on demand by
/// [`StructureAlgebra::check_associativity`].
#[derive(Clone, PartialEq)]
pub struct StructureAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// mult[i*dim + j] = coordinates of b_i · b_j, sparse.
    mult: Vec<SparseVec>,
    involution: Option<Matrix>,
    unit: Option<Vec<Rat>>,
}

impl StructureAlgebra {
    pub fn new(
        labels: Vec<String>,
        products: Vec<((usize, usize), Vec<Rat>)>,
        involution: Option<Matrix>,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self, LinalgError> {
        let dim = labels.len();
        {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != dim {
                return Err(LinalgError::BadAlgebra(
                    "basis labels must be distinct".into(),
                ));
            }
        }
        let mut mult = vec![SparseVec::new(); dim * dim];
        for ((i, j), v) in products {
            if i >= dim || j >= dim {
                return Err(LinalgError::BadAlgebra(format!(
                    "product index ({i},{j}) out of range for dim {dim}"
                )));
            }
            if v.len() != dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            mult[i * dim + j] = sparse_from_dense(&v);
        }
        let alg = StructureAlgebra {
            dim,
            labels,
            mult,
            involution,
            unit,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// The algebra of rational functions on a finite set with pointwise
    /// product: basis e_i, e_i·e_j = δ_ij e_i, identity involution, unit Σe_i.
    pub fn function_algebra(points: usize) -> StructureAlgebra {
        let labels = (0..points).map(|i| format!("e{i}")).collect();
        let mut mult = vec![SparseVec::new(); points * points];
        for i in 0..points {
            mult[i * points + i] = vec![(i, Rat::from_integer(1.into()))];
        }
        StructureAlgebra {
            dim: points,
            labels,
            mult,
            involution: Some(Matrix::identity(points)),
            unit: Some(vec![Rat::from_integer(1.into()); points]),
        }
    }

    fn validate(&self) -> Result<(), LinalgError> {
        if let Some(inv) = &self.involution {
            if inv.rows() != self.dim || inv.cols() != self.dim {
                return Err(LinalgError::BadAlgebra(
                    "involution matrix has wrong shape".into(),
                ));
            }
            if inv.mul(inv)? != Matrix::identity(self.dim) {
                return Err(LinalgError::BadAlgebra(
                    "involution is not an involution".into(),
                ));
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let lhs = inv.apply(&self.mult_basis_dense(i, j))?;
                    let rhs = self.mult_dense(
                        &inv.apply(&basis_vec(j, self.dim))?,
                        &inv.apply(&basis_vec(i, self.dim))?,
                    )?;
                    if lhs != rhs {
                        return Err(LinalgError::BadAlgebra(format!(
                            "(b{i}·b{j})* != b{j}*·b{i}*"
                        )));
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            if u.len() != self.dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.dim,
                    got: u.len(),
                });
            }
            for i in 0..self.dim {
                let b = basis_vec(i, self.dim);
                if self.mult_dense(u, &b)? != b || self.mult_dense(&b, u)? != b {
                    return Err(LinalgError::BadAlgebra(format!("unit law fails on b{i}")));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn involution(&self) -> Option<&Matrix> {
        self.involution.as_ref()
    }

    pub fn unit(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    pub fn product_entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mult_basis_dense(&self, i: usize, j: usize) -> Vec<Rat> {
        sparse_to_dense(&self.mult[i * self.dim + j], self.dim)
    }

    pub fn mult_sparse(&self, v: &SparseVec, w: &SparseVec) -> SparseVec {
        let mut acc = vec![Rat::zero(); self.dim];
        for (i, a) in v {
            for (j, b) in w {
                let ab = a * b;
                for (k, c) in &self.mult[i * self.dim + j] {
                    acc[*k] += &ab * c;
                }
            }
        }
        sparse_from_dense(&acc)
    }

    pub fn mult_dense(&self, v: &[Rat], w: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        if v.len() != self.dim || w.len() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                got: if v.len() != self.dim {
                    v.len()
                } else {
                    w.len()
                },
            });
        }
        let out = self.mult_sparse(&sparse_from_dense(v), &sparse_from_dense(w));
        Ok(sparse_to_dense(&out, self.dim))
    }

    pub fn star_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        match &self.involution {
            Some(m) => m.apply(v),
            None => Err(LinalgError::BadAlgebra("algebra has no involution".into())),
        }
    }

    /// Renders a coordinate vector as a labeled linear combination.
    pub fn render_combination(&self, v: &[Rat]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c == &Rat::from_integer(1.into()) {
                    self.labels[i].clone()
                } else {
                    format!("{c}*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Whether the coordinate vector is zero.
    pub fn is_zero_vec(v: &[Rat]) -> bool {
        v.iter().all(Rat::is_zero)
    }

    /// Exhaustive basis-triple associativity check; `None` means associative,
    /// otherwise the first violating triple in lexicographic order.
    pub fn check_associativity(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product_entry(i, j).clone();
                for k in 0..self.dim {
                    let jk = self.product_entry(j, k);
                    let lhs = self.mult_sparse(&ij, &vec![(k, num::One::one())]);
                    let rhs = self.mult_sparse(&vec![(i, num::One::one())], jk);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Smallest subspace containing the generators and closed under left and
    /// right multiplication by every basis element. Worklist fixpoint: only
    /// vectors that actually grow the span are multiplied further.
    pub fn two_sided_ideal_closure<I>(&self, generators: I) -> Result<Subspace, LinalgError>
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let mut span = SpanBuilder::new(self.dim);
        let mut work: Vec<SparseVec> = Vec::new();
        for g in generators {
            if g.len() != self.dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.dim,
                    got: g.len(),
                });
            }
            if let Some(row) = span.insert(sparse_from_dense(&g)) {
                work.push(row);
            }
        }
        while let Some(v) = work.pop() {
            for b in 0..self.dim {
                let basis: SparseVec = vec![(b, num::One::one())];
                for prod in [self.mult_sparse(&basis, &v), self.mult_sparse(&v, &basis)] {
                    if prod.is_empty() {
                        continue;
                    }
                    if let Some(row) = span.insert(prod) {
                        work.push(row);
                    }
                }
            }
        }
        Ok(span.into_subspace())
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        if s.ambient() != self.dim {
            return false;
        }
        for v in s.basis_rows() {
            let sv = sparse_from_dense(v);
            for b in 0..self.dim {
                let basis: SparseVec = vec![(b, num::One::one())];
                for prod in [self.mult_sparse(&basis, &sv), self.mult_sparse(&sv, &basis)] {
                    if !s.contains(&sparse_to_dense(&prod, self.dim)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether span(I·I) = I for the given ideal.
    pub fn ideal_is_idempotent(&self, s: &Subspace) -> Result<bool, LinalgError> {
        let mut products = Vec::new();
        for v in s.basis_rows() {
            for w in s.basis_rows() {
                products.push(self.mult_dense(v, w)?);
            }
        }
        let span = Subspace::from_vectors(self.dim, products)?;
        Ok(span == *s)
    }

    /// Quotient by a two-sided ideal. Returns the quotient algebra and the
    /// projection matrix (quotient coordinates of each ambient basis vector).
    ///
    /// The quotient basis consists of the cosets of the non-pivot coordinates
    /// of the ideal's RREF basis; labels are carried over from those
    /// coordinates. The involution descends when the ideal is *-closed, the
    /// unit always descends.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(StructureAlgebra, Matrix), LinalgError> {
        if ideal.ambient() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                got: ideal.ambient(),
            });
        }
        let closure = self.two_sided_ideal_closure(ideal.basis_rows().map(<[Rat]>::to_vec))?;
        if closure.dim() != ideal.dim() {
            return Err(LinalgError::NotAnIdeal {
                extra: closure.dim() - ideal.dim(),
            });
        }
        let free: Vec<usize> = (0..self.dim)
            .filter(|c| !ideal.pivots().contains(c))
            .collect();
        let qdim = free.len();

        let mut projection = Matrix::zeros(qdim, self.dim);
        for (k, &f) in free.iter().enumerate() {
            projection[(k, f)] = num::One::one();
        }
        for (row, &p) in ideal.pivots().iter().enumerate() {
            // e_p ≡ -(the rest of the RREF row), supported on free columns.
            for (k, &f) in free.iter().enumerate() {
                projection[(k, p)] = -ideal.basis()[(row, f)].clone();
            }
        }

        let project = |v: &[Rat]| projection.apply(v);

        let mut products = Vec::new();
        for (k, &fk) in free.iter().enumerate() {
            for (l, &fl) in free.iter().enumerate() {
                let p = project(&self.mult_basis_dense(fk, fl))?;
                products.push(((k, l), p));
            }
        }
        let labels = free.iter().map(|&f| self.labels[f].clone()).collect();
        let involution = match &self.involution {
            Some(inv) => {
                let star_closed = ideal
                    .basis_rows()
                    .map(|r| inv.apply(r))
                    .collect::<Result<Vec<_>, _>>()?
                    .iter()
                    .all(|v| ideal.contains(v));
                if star_closed {
                    let mut m = Matrix::zeros(qdim, qdim);
                    for (l, &fl) in free.iter().enumerate() {
                        let col = project(&inv.apply(&basis_vec(fl, self.dim))?)?;
                        for k in 0..qdim {
                            m[(k, l)] = col[k].clone();
                        }
                    }
                    Some(m)
                } else {
                    None
                }
            }
            None => None,
        };
        let unit = match &self.unit {
            Some(u) => Some(project(u)?),
            None => None,
        };
        let quotient = StructureAlgebra::new(labels, products, involution, unit)?;

        // π(xy) = π(x)π(y), exactly, on all basis pairs.
        for i in 0..self.dim {
            let pi = project(&basis_vec(i, self.dim))?;
            for j in 0..self.dim {
                let pj = project(&basis_vec(j, self.dim))?;
                let lhs = project(&self.mult_basis_dense(i, j))?;
                let rhs = quotient.mult_dense(&pi, &pj)?;
                if lhs != rhs {
                    return Err(LinalgError::BadAlgebra(format!(
                        "quotient projection not multiplicative at ({i},{j})"
                    )));
                }
            }
        }
        Ok((quotient, projection))
    }
}

pub(crate) fn basis_vec(i: usize, dim: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = num::One::one();
    v
}

impl std::fmt::Debug for StructureAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "StructureAlgebra(dim {}, labels {:?})",
            self.dim, self.labels
        )
    }
}
