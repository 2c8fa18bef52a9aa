//! Partial actions of a finite group G, at set level and algebra level, the
//! induced actions of S(G), and the bijection between partial actions of G
//! and actions of S(G).
//!
//! A partial action α of G on an algebra A assigns to each g a two-sided
//! ideal D_g and an isomorphism α_g : D_{g⁻¹} → D_g with D_e = A,
//! α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}, and α_g∘α_h = α_{gh} on
//! D_{h⁻¹} ∩ D_{(gh)⁻¹}. An action β of S(G) assigns ideals E_s and
//! isomorphisms β_s : E_{s*} → E_s with β_rβ_s = β_{rs} and E_{[e]} = A.
//!
//! For a standard form s = ε_{s₁}…ε_{sₙ}[h] the induced action is
//! E_s = D_h ∩ D_{s₁} ∩ … ∩ D_{sₙ} with β_s the restriction of α_h, and
//! restricting an S(G)-action to the generators recovers a partial action;
//! the two constructions are mutually inverse.
//!
//! Maps are stored as ambient matrices extended by zero off their domain
//! ideal (via the domain's pivot projector), which makes the round trips
//! literal equalities of data.

use std::collections::HashMap;

use thiserror::Error;

use crate::group::{GroupError, GroupTable, PartialBijection};
use crate::linalg::{LinalgError, Matrix, Rat, StructureAlgebra, Subspace};
use crate::report::Report;
use crate::semigroup::{self, SElem, SgError};

#[derive(Debug, Clone, Error)]
pub enum ActionError {
    #[error("malformed action: {0}")]
    Malformed(String),
    #[error("invalid action: {}", .0.summary())]
    InvalidAction(Box<Report>),
    #[error("{0}")]
    SourceMismatch(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sg(#[from] SgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn set_str(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// A partial action of G on the finite set {0, …, base_size−1}: for each g a
/// partial bijection θ_g with domain X_{g⁻¹} and image X_g.
#[derive(Clone, PartialEq)]
pub struct SetPartialAction {
    group: GroupTable,
    base_size: usize,
    theta: Vec<PartialBijection>,
}

impl SetPartialAction {
    /// θ_e is implied (the identity on all of X); `maps` lists θ_g for g ≠ e
    /// only, and omitted elements act nowhere.
    pub fn new(
        group: GroupTable,
        base_size: usize,
        maps: impl IntoIterator<Item = (usize, PartialBijection)>,
    ) -> Result<Self, ActionError> {
        let mut theta = vec![PartialBijection::empty(base_size); group.order()];
        theta[group.identity()] = PartialBijection::identity(base_size);
        for (g, pb) in maps {
            if g >= group.order() {
                return Err(ActionError::Group(GroupError::IndexOutOfRange {
                    index: g,
                    order: group.order(),
                }));
            }
            if g == group.identity() {
                return Err(ActionError::Malformed(
                    "theta_e is implied and must not be supplied".into(),
                ));
            }
            if pb.base_size() != base_size {
                return Err(ActionError::Group(GroupError::BaseSizeMismatch {
                    left: base_size,
                    right: pb.base_size(),
                }));
            }
            theta[g] = pb;
        }
        Ok(SetPartialAction {
            group,
            base_size,
            theta,
        })
    }

    /// The restriction of a global action to an arbitrary subset: given
    /// permutations σ_g of {0,…,total−1}, the subset X carries the partial
    /// action X_g = X ∩ σ_g(X), θ_g = σ_g restricted. Points of X are
    /// renumbered 0..|X| in ascending order.
    pub fn restriction_of_global(
        group: GroupTable,
        total: usize,
        sigma: &[Vec<usize>],
        subset: &[usize],
    ) -> Result<Self, ActionError> {
        if sigma.len() != group.order() {
            return Err(ActionError::Malformed(
                "one permutation per group element".into(),
            ));
        }
        let mut x: Vec<usize> = subset.to_vec();
        x.sort_unstable();
        x.dedup();
        if x.iter().any(|&p| p >= total) {
            return Err(ActionError::Malformed("subset point out of range".into()));
        }
        let pos = |p: usize| x.iter().position(|&q| q == p);
        let mut maps = Vec::new();
        for g in group.elements() {
            if g == group.identity() {
                continue;
            }
            let mut pairs = Vec::new();
            for (xi, &p) in x.iter().enumerate() {
                let q = sigma[g][p];
                if let Some(qi) = pos(q) {
                    pairs.push((xi, qi));
                }
            }
            maps.push((g, PartialBijection::from_pairs(x.len(), pairs)?));
        }
        SetPartialAction::new(group, x.len(), maps)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn theta(&self, g: usize) -> &PartialBijection {
        &self.theta[g]
    }

    /// X_g = image(θ_g), as a sorted point list.
    pub fn x_set(&self, g: usize) -> Vec<usize> {
        self.theta[g].image()
    }

    /// Checks every axiom exhaustively, reporting a witness per failure.
    pub fn validate(&self) -> Report {
        let mut report = Report::new("set-level partial action axioms");
        let name = |g: usize| self.group.name(g).to_string();

        let identity_ok = self.theta[0] == PartialBijection::identity(self.base_size);
        report.push(
            "theta_e is the identity on X",
            identity_ok,
            (!identity_ok).then(|| format!("theta_e = {:?}", self.theta[0])),
        );

        for g in self.group.elements() {
            let gi = self.group.inv(g);
            let conv = self.theta[g].converse();
            let ok = conv == self.theta[gi];
            report.push(
                format!("theta_{} is the converse of theta_{}", name(gi), name(g)),
                ok,
                (!ok).then(|| {
                    format!(
                        "converse of theta_{} = {:?}, theta_{} = {:?}",
                        name(g),
                        conv,
                        name(gi),
                        self.theta[gi]
                    )
                }),
            );
        }

        // Axiom (ii), set analogue: θ_g(X_{g⁻¹} ∩ X_h) = X_g ∩ X_{gh}.
        let mut ok2 = true;
        let mut witness2 = None;
        'outer2: for g in self.group.elements() {
            for h in self.group.elements() {
                let x_h = self.x_set(h);
                let dom: Vec<usize> = self
                    .x_set(self.group.inv(g))
                    .into_iter()
                    .filter(|x| x_h.contains(x))
                    .collect();
                let mut image: Vec<usize> =
                    dom.iter().filter_map(|&x| self.theta[g].apply(x)).collect();
                image.sort_unstable();
                let gh = self.group.mul(g, h);
                let x_gh = self.x_set(gh);
                let rhs: Vec<usize> = self
                    .x_set(g)
                    .into_iter()
                    .filter(|x| x_gh.contains(x))
                    .collect();
                if image.len() != dom.len() || image != rhs {
                    ok2 = false;
                    witness2 = Some(format!(
                        "at (g,h)=({},{}): theta_g(X_{{g⁻¹}} ∩ X_h) = {} but X_g ∩ X_{{gh}} = {}",
                        name(g),
                        name(h),
                        set_str(&image),
                        set_str(&rhs)
                    ));
                    break 'outer2;
                }
            }
        }
        report.push(
            "axiom (ii): theta_g(X_{g⁻¹} ∩ X_h) = X_g ∩ X_{gh}",
            ok2,
            witness2,
        );

        // Axiom (iii), set analogue: θ_g∘θ_h = θ_{gh} on X_{h⁻¹} ∩ X_{(gh)⁻¹}.
        let mut ok3 = true;
        let mut witness3 = None;
        'outer3: for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for x in 0..self.base_size {
                    if self.theta[h].apply(x).is_none() || self.theta[gh].apply(x).is_none() {
                        continue;
                    }
                    let via = self.theta[h].apply(x).and_then(|y| self.theta[g].apply(y));
                    if via != self.theta[gh].apply(x) {
                        ok3 = false;
                        witness3 = Some(format!(
                            "at (g,h,x)=({},{},{}): theta_g(theta_h(x)) = {:?} but theta_{{gh}}(x) = {:?}",
                            name(g),
                            name(h),
                            x,
                            via,
                            self.theta[gh].apply(x)
                        ));
                        break 'outer3;
                    }
                }
            }
        }
        report.push(
            "axiom (iii): theta_g∘theta_h = theta_{gh} on its domain",
            ok3,
            witness3,
        );
        report
    }

    /// Function-algebra realization: A = functions X → Q with pointwise
    /// product, D_g spanned by the indicators of X_g, α_g(e_x) = e_{θ_g(x)}.
    pub fn induce_algebra_action(&self) -> Result<AlgebraPartialAction, ActionError> {
        let report = self.validate();
        if !report.passed() {
            return Err(ActionError::InvalidAction(Box::new(report)));
        }
        let n = self.base_size;
        let algebra = StructureAlgebra::function_algebra(n);
        let mut ideals = Vec::with_capacity(self.group.order());
        let mut maps = Vec::with_capacity(self.group.order());
        for g in self.group.elements() {
            ideals.push(coordinate_subspace(n, &self.x_set(g))?);
            let mut m = Matrix::zeros(n, n);
            for (src, tgt) in self.theta[g].pairs() {
                m[(tgt, src)] = num::One::one();
            }
            maps.push(m);
        }
        AlgebraPartialAction::new(self.group.clone(), algebra, ideals, maps)
    }

    /// The partial bijection underlying β_s: the restriction of θ_h to the
    /// set-level E_{s*} = X_{h⁻¹} ∩ ⋂ᵢ X_{h⁻¹sᵢ}, for s = ε_{s₁}…ε_{sₙ}[h].
    pub fn semigroup_map(&self, s: &SElem) -> PartialBijection {
        let h = s.bracket();
        let hi = self.group.inv(h);
        let mut dom = self.x_set(hi);
        for &t in s.eps() {
            let xs = self.x_set(self.group.mul(hi, t));
            dom.retain(|x| xs.contains(x));
        }
        self.theta[h].restrict(dom)
    }
}

impl std::fmt::Debug for SetPartialAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SetPartialAction(|X| = {}, group order {})",
            self.base_size,
            self.group.order()
        )
    }
}

pub(crate) fn coordinate_subspace(n: usize, points: &[usize]) -> Result<Subspace, LinalgError> {
    let vectors: Vec<Vec<Rat>> = points
        .iter()
        .map(|&x| {
            let mut v = vec![Rat::from_integer(0.into()); n];
            v[x] = num::One::one();
            v
        })
        .collect();
    Subspace::from_vectors(n, vectors)
}

/// A partial action of G on a finite-dimensional algebra: ideals D_g and maps
/// α_g stored as ambient matrices, zero off D_{g⁻¹}.
#[derive(Clone, PartialEq)]
pub struct AlgebraPartialAction {
    group: GroupTable,
    algebra: StructureAlgebra,
    ideals: Vec<Subspace>,
    maps: Vec<Matrix>,
}

impl AlgebraPartialAction {
    /// Maps are normalized to the canonical zero-extension: α_g ∘ (pivot
    /// projector of D_{g⁻¹}).
    pub fn new(
        group: GroupTable,
        algebra: StructureAlgebra,
        ideals: Vec<Subspace>,
        maps: Vec<Matrix>,
    ) -> Result<Self, ActionError> {
        let dim = algebra.dim();
        if ideals.len() != group.order() || maps.len() != group.order() {
            return Err(ActionError::Malformed(format!(
                "need one ideal and one map per group element ({} expected)",
                group.order()
            )));
        }
        for d in &ideals {
            if d.ambient() != dim {
                return Err(ActionError::Linalg(LinalgError::DimensionMismatch {
                    expected: dim,
                    got: d.ambient(),
                }));
            }
        }
        let mut normalized = Vec::with_capacity(maps.len());
        for (g, m) in maps.into_iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(ActionError::Linalg(LinalgError::DimensionMismatch {
                    expected: dim,
                    got: m.rows().max(m.cols()),
                }));
            }
            let dom = &ideals[group.inv(g)];
            normalized.push(m.mul(&dom.pivot_projector())?);
        }
        Ok(AlgebraPartialAction {
            group,
            algebra,
            ideals,
            maps: normalized,
        })
    }

    /// Builds from per-ideal basis matrices: `alpha_in_bases[g]` has one row
    /// per basis vector of D_{g⁻¹}, holding the coordinates of its image in
    /// the basis of D_g.
    pub fn from_bases(
        group: GroupTable,
        algebra: StructureAlgebra,
        ideals: Vec<Subspace>,
        alpha_in_bases: Vec<Matrix>,
    ) -> Result<Self, ActionError> {
        let dim = algebra.dim();
        if ideals.len() != group.order() || alpha_in_bases.len() != group.order() {
            return Err(ActionError::Malformed(format!(
                "need one ideal and one matrix per group element ({} expected)",
                group.order()
            )));
        }
        let mut maps = Vec::with_capacity(alpha_in_bases.len());
        for (g, m) in alpha_in_bases.into_iter().enumerate() {
            let dom = &ideals[group.inv(g)];
            let img = &ideals[g];
            if m.rows() != dom.dim() || m.cols() != img.dim() {
                return Err(ActionError::Malformed(format!(
                    "alpha_{} must be {}x{} in the chosen bases, got {}x{}",
                    group.name(g),
                    dom.dim(),
                    img.dim(),
                    m.rows(),
                    m.cols()
                )));
            }
            let mut ambient = Matrix::zeros(dim, dim);
            for i in 0..dom.dim() {
                let mut image = vec![Rat::from_integer(0.into()); dim];
                for (j, c) in m.row(i).iter().enumerate() {
                    if !num::Zero::is_zero(c) {
                        for (iv, bv) in image.iter_mut().zip(img.basis().row(j)) {
                            *iv += c * bv;
                        }
                    }
                }
                // Column for the i-th pivot coordinate of the domain.
                let piv = dom.pivots()[i];
                for r in 0..dim {
                    ambient[(r, piv)] = image[r].clone();
                }
            }
            maps.push(ambient);
        }
        AlgebraPartialAction::new(group, algebra, ideals, maps)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn ideal(&self, g: usize) -> &Subspace {
        &self.ideals[g]
    }

    pub fn map(&self, g: usize) -> &Matrix {
        &self.maps[g]
    }

    pub fn apply(&self, g: usize, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        self.maps[g].apply(v)
    }

    /// Checks the partial-action axioms exhaustively at the algebra level.
    pub fn validate(&self) -> Report {
        let mut report = Report::new("algebra-level partial action axioms");
        let dim = self.algebra.dim();
        let name = |g: usize| self.group.name(g).to_string();

        report.push(
            "axiom (i): D_e = A",
            self.ideals[0].is_full(),
            (!self.ideals[0].is_full()).then(|| format!("dim D_e = {}", self.ideals[0].dim())),
        );
        report.push(
            "alpha_e is the identity",
            self.maps[0] == Matrix::identity(dim),
            None,
        );

        for g in self.group.elements() {
            report.push(
                format!("D_{} is a two-sided ideal", name(g)),
                self.algebra.is_ideal(&self.ideals[g]),
                None,
            );
            let dom = &self.ideals[self.group.inv(g)];
            let img = &self.ideals[g];
            let mapped = dom
                .image_under(&self.maps[g])
                .unwrap_or_else(|_| Subspace::zero(dim));
            let bij = mapped == *img && mapped.dim() == dom.dim();
            report.push(
                format!(
                    "alpha_{} is a bijection D_{{{}⁻¹}} → D_{}",
                    name(g),
                    name(g),
                    name(g)
                ),
                bij,
                (!bij).then(|| {
                    format!(
                        "dim dom = {}, dim image = {}, dim D_g = {}",
                        dom.dim(),
                        mapped.dim(),
                        img.dim()
                    )
                }),
            );
            let mut mult_ok = true;
            'mult: for v in dom.basis_rows() {
                for w in dom.basis_rows() {
                    let vw = self.algebra.mult_dense(v, w).unwrap();
                    let lhs = self.maps[g].apply(&vw).unwrap();
                    let rhs = self
                        .algebra
                        .mult_dense(
                            &self.maps[g].apply(v).unwrap(),
                            &self.maps[g].apply(w).unwrap(),
                        )
                        .unwrap();
                    if lhs != rhs {
                        mult_ok = false;
                        break 'mult;
                    }
                }
            }
            report.push(
                format!("alpha_{} is multiplicative on its domain", name(g)),
                mult_ok,
                None,
            );
            let inv_ok = dom.basis_rows().all(|v| {
                self.maps[self.group.inv(g)]
                    .apply(&self.maps[g].apply(v).unwrap())
                    .unwrap()
                    == v
            });
            report.push(
                format!("alpha_{{{}⁻¹}} inverts alpha_{}", name(g), name(g)),
                inv_ok,
                None,
            );
        }

        let mut ok2 = true;
        let mut witness2 = None;
        'ax2: for g in self.group.elements() {
            for h in self.group.elements() {
                let dom = self.ideals[self.group.inv(g)]
                    .intersect(&self.ideals[h])
                    .unwrap();
                let image = dom.image_under(&self.maps[g]).unwrap();
                let gh = self.group.mul(g, h);
                let rhs = self.ideals[g].intersect(&self.ideals[gh]).unwrap();
                if image != rhs {
                    ok2 = false;
                    witness2 = Some(format!(
                        "at (g,h)=({},{}): alpha_g(D_{{g⁻¹}} ∩ D_h) has dim {} but D_g ∩ D_{{gh}} has dim {}",
                        name(g),
                        name(h),
                        image.dim(),
                        rhs.dim()
                    ));
                    break 'ax2;
                }
            }
        }
        report.push(
            "axiom (ii): alpha_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}",
            ok2,
            witness2,
        );

        let mut ok3 = true;
        let mut witness3 = None;
        'ax3: for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                let dom = self.ideals[self.group.inv(h)]
                    .intersect(&self.ideals[self.group.inv(gh)])
                    .unwrap();
                for v in dom.basis_rows() {
                    let lhs = self.maps[g].apply(&self.maps[h].apply(v).unwrap()).unwrap();
                    let rhs = self.maps[gh].apply(v).unwrap();
                    if lhs != rhs {
                        ok3 = false;
                        witness3 = Some(format!(
                            "at (g,h)=({},{}): alpha_g(alpha_h(v)) != alpha_{{gh}}(v)",
                            name(g),
                            name(h)
                        ));
                        break 'ax3;
                    }
                }
            }
        }
        report.push(
            "axiom (iii): alpha_g∘alpha_h = alpha_{gh} on its domain",
            ok3,
            witness3,
        );
        report
    }

    /// *-compatibility: each D_g is closed under the involution and each α_g
    /// commutes with it.
    pub fn validate_star(&self) -> Report {
        let mut report = Report::new("involutive partial action checks");
        if self.algebra.involution().is_none() {
            report.push_fail(
                "coefficient algebra carries an involution",
                "no involution present",
            );
            return report;
        }
        for g in self.group.elements() {
            let name = self.group.name(g);
            let closed = self.ideals[g]
                .basis_rows()
                .all(|v| self.ideals[g].contains(&self.algebra.star_vec(v).unwrap()));
            report.push(format!("D_{name} is *-closed"), closed, None);
            let dom = &self.ideals[self.group.inv(g)];
            let commutes = dom.basis_rows().all(|v| {
                let lhs = self.maps[g]
                    .apply(&self.algebra.star_vec(v).unwrap())
                    .unwrap();
                let rhs = self
                    .algebra
                    .star_vec(&self.maps[g].apply(v).unwrap())
                    .unwrap();
                lhs == rhs
            });
            report.push(format!("alpha_{name} commutes with *"), commutes, None);
        }
        report
    }

    /// Per-ideal idempotency: span(D_g·D_g) = D_g. A sufficient condition for
    /// associativity of the crossed-product multiplication.
    pub fn ideals_idempotent_report(&self) -> Report {
        let mut report = Report::new("ideal idempotency D_g·D_g = D_g");
        for g in self.group.elements() {
            match self.algebra.ideal_is_idempotent(&self.ideals[g]) {
                Ok(ok) => report.push(
                    format!("D_{} idempotent", self.group.name(g)),
                    ok,
                    (!ok).then(|| "span(D_g·D_g) is a proper subspace".to_string()),
                ),
                Err(e) => report.push_fail(
                    format!("D_{} idempotent", self.group.name(g)),
                    e.to_string(),
                ),
            }
        }
        report
    }

    /// The induced action of S(G): E_s = D_h ∩ D_{s₁} ∩ … ∩ D_{sₙ} for
    /// s = ε_{s₁}…ε_{sₙ}[h], β_s = α_h restricted to E_{s*}. The result is
    /// validated exhaustively (β_rβ_s = β_{rs} on all pairs) before being
    /// returned.
    pub fn to_sg_action(&self, bound: usize) -> Result<SgAction, ActionError> {
        let report = self.validate();
        if !report.passed() {
            return Err(ActionError::InvalidAction(Box::new(report)));
        }
        let elements = semigroup::enumerate_with_bound(&self.group, bound)?;
        let index: HashMap<SElem, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let dim = self.algebra.dim();
        let e_space = |s: &SElem| -> Result<Subspace, LinalgError> {
            let mut acc = self.ideals[s.bracket()].clone();
            for &t in s.eps() {
                acc = acc.intersect(&self.ideals[t])?;
            }
            Ok(acc)
        };
        let mut e_spaces = Vec::with_capacity(elements.len());
        let mut beta = Vec::with_capacity(elements.len());
        for s in &elements {
            let space = e_space(s)?;
            let star_space = e_space(&semigroup::star(&self.group, s)?)?;
            let map = self.maps[s.bracket()].mul(&star_space.pivot_projector())?;
            e_spaces.push(space);
            beta.push(map);
        }
        let action = SgAction {
            group: self.group.clone(),
            elements,
            index,
            algebra: self.algebra.clone(),
            e_spaces,
            beta,
            ambient: dim,
        };
        let report = action.validate();
        if !report.passed() {
            return Err(ActionError::InvalidAction(Box::new(report)));
        }
        Ok(action)
    }
}

impl std::fmt::Debug for AlgebraPartialAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<usize> = self.ideals.iter().map(Subspace::dim).collect();
        write!(
            f,
            "AlgebraPartialAction(dim A = {}, ideal dims {:?})",
            self.algebra.dim(),
            dims
        )
    }
}

/// An action of S(G) on a finite-dimensional algebra: per element s the ideal
/// E_s and the map β_s : E_{s*} → E_s (ambient matrix, zero off E_{s*}).
#[derive(Clone, PartialEq)]
pub struct SgAction {
    group: GroupTable,
    elements: Vec<SElem>,
    index: HashMap<SElem, usize>,
    algebra: StructureAlgebra,
    e_spaces: Vec<Subspace>,
    beta: Vec<Matrix>,
    ambient: usize,
}

impl SgAction {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn elements(&self) -> &[SElem] {
        &self.elements
    }

    pub fn index_of(&self, s: &SElem) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn e_space(&self, i: usize) -> &Subspace {
        &self.e_spaces[i]
    }

    pub fn beta(&self, i: usize) -> &Matrix {
        &self.beta[i]
    }

    pub fn star_index(&self, i: usize) -> usize {
        self.index[&semigroup::star_unchecked(&self.group, &self.elements[i])]
    }

    pub fn product_index(&self, i: usize, j: usize) -> usize {
        self.index[&semigroup::mul_unchecked(&self.group, &self.elements[i], &self.elements[j])]
    }

    /// Exhaustive validation: E_{[e]} = A, each β_s a bijection E_{s*} → E_s
    /// inverted by β_{s*}, and β_r∘β_s = β_{rs} as partial maps (domains and
    /// values) for all pairs.
    pub fn validate(&self) -> Report {
        let mut report = Report::new("S(G)-action axioms");
        let unit = self.index[&SElem::unit()];
        report.push(
            "E_[e] = A",
            self.e_spaces[unit].is_full(),
            (!self.e_spaces[unit].is_full())
                .then(|| format!("dim E_[e] = {}", self.e_spaces[unit].dim())),
        );
        report.push(
            "beta_[e] = id",
            self.beta[unit] == Matrix::identity(self.ambient),
            None,
        );

        let mut bij_ok = true;
        let mut bij_witness = None;
        for (i, s) in self.elements.iter().enumerate() {
            let star = self.star_index(i);
            let dom = &self.e_spaces[star];
            let image = dom.image_under(&self.beta[i]).unwrap();
            if image != self.e_spaces[i] || image.dim() != dom.dim() {
                bij_ok = false;
                bij_witness = Some(format!(
                    "beta_{} does not map E_{{s*}} onto E_s",
                    s.render(&self.group)
                ));
                break;
            }
            let inverse_ok = dom.basis_rows().all(|v| {
                self.beta[star]
                    .apply(&self.beta[i].apply(v).unwrap())
                    .unwrap()
                    == v
            });
            if !inverse_ok {
                bij_ok = false;
                bij_witness = Some(format!(
                    "beta_{{s*}} does not invert beta_{}",
                    s.render(&self.group)
                ));
                break;
            }
        }
        report.push(
            "each beta_s : E_{s*} → E_s is a bijection with inverse beta_{s*}",
            bij_ok,
            bij_witness,
        );

        let mut comp_ok = true;
        let mut comp_witness = None;
        'pairs: for r in 0..self.elements.len() {
            let r_star = self.star_index(r);
            for s in 0..self.elements.len() {
                let s_star = self.star_index(s);
                let rs = self.product_index(r, s);
                let rs_star = self.star_index(rs);
                // dom(β_r∘β_s) = β_{s*}(E_s ∩ E_{r*})
                let inter = self.e_spaces[s].intersect(&self.e_spaces[r_star]).unwrap();
                let dom = inter.image_under(&self.beta[s_star]).unwrap();
                if dom != self.e_spaces[rs_star] {
                    comp_ok = false;
                    comp_witness = Some(format!(
                        "dom(beta_r beta_s) != E_{{(rs)*}} at r={}, s={}",
                        self.elements[r].render(&self.group),
                        self.elements[s].render(&self.group)
                    ));
                    break 'pairs;
                }
                for v in dom.basis_rows() {
                    let lhs = self.beta[r].apply(&self.beta[s].apply(v).unwrap()).unwrap();
                    let rhs = self.beta[rs].apply(v).unwrap();
                    if lhs != rhs {
                        comp_ok = false;
                        comp_witness = Some(format!(
                            "beta_r(beta_s(v)) != beta_{{rs}}(v) at r={}, s={}",
                            self.elements[r].render(&self.group),
                            self.elements[s].render(&self.group)
                        ));
                        break 'pairs;
                    }
                }
            }
        }
        report.push(
            "beta_r∘beta_s = beta_{rs} for all pairs",
            comp_ok,
            comp_witness,
        );
        report
    }

    /// The involutive case: every E_s is *-closed and every β_s commutes
    /// with the involution.
    pub fn validate_star(&self) -> Report {
        let mut report = Report::new("involutive S(G)-action checks");
        if self.algebra.involution().is_none() {
            report.push_fail(
                "coefficient algebra carries an involution",
                "no involution present",
            );
            return report;
        }
        let mut closed = true;
        let mut commutes = true;
        let mut witness = None;
        for (i, s) in self.elements.iter().enumerate() {
            if !self.e_spaces[i]
                .basis_rows()
                .all(|v| self.e_spaces[i].contains(&self.algebra.star_vec(v).unwrap()))
            {
                closed = false;
                witness = Some(format!("E_{} is not *-closed", s.render(&self.group)));
                break;
            }
            let star = self.star_index(i);
            let ok = self.e_spaces[star].basis_rows().all(|v| {
                let lhs = self.beta[i]
                    .apply(&self.algebra.star_vec(v).unwrap())
                    .unwrap();
                let rhs = self
                    .algebra
                    .star_vec(&self.beta[i].apply(v).unwrap())
                    .unwrap();
                lhs == rhs
            });
            if !ok {
                commutes = false;
                witness = Some(format!(
                    "beta_{} does not commute with *",
                    s.render(&self.group)
                ));
                break;
            }
        }
        report.push(
            "every E_s is *-closed",
            closed,
            witness.clone().filter(|_| !closed),
        );
        report.push(
            "every beta_s commutes with *",
            commutes,
            witness.filter(|_| !commutes),
        );
        report
    }

    /// E_{st} ⊆ E_s for all pairs s, t.
    pub fn check_e_monotone(&self) -> Report {
        let mut report = Report::new("E_{st} ⊆ E_s for all pairs");
        let mut ok = true;
        let mut witness = None;
        let mut pairs = 0usize;
        'outer: for s in 0..self.elements.len() {
            for t in 0..self.elements.len() {
                pairs += 1;
                let st = self.product_index(s, t);
                if !self.e_spaces[s].contains_subspace(&self.e_spaces[st]) {
                    ok = false;
                    witness = Some(format!(
                        "E_{{st}} ⊄ E_s at s={}, t={}",
                        self.elements[s].render(&self.group),
                        self.elements[t].render(&self.group)
                    ));
                    break 'outer;
                }
            }
        }
        report.push(format!("inclusion holds on all {pairs} pairs"), ok, witness);
        report
    }

    /// E_{[g][h]} = E_{[gh]} ∩ E_{[g]} for all g, h ∈ G.
    pub fn check_bracket_intersections(&self) -> Report {
        let mut report = Report::new("E_{[g][h]} = E_{[gh]} ∩ E_{[g]}");
        let mut ok = true;
        let mut witness = None;
        'outer: for g in self.group.elements() {
            for h in self.group.elements() {
                let ge = self.index[&SElem::generator(&self.group, g).unwrap()];
                let he = self.index[&SElem::generator(&self.group, h).unwrap()];
                let ghe = self.index[&SElem::generator(&self.group, self.group.mul(g, h)).unwrap()];
                let lhs = &self.e_spaces[self.product_index(ge, he)];
                let rhs = self.e_spaces[ghe].intersect(&self.e_spaces[ge]).unwrap();
                if *lhs != rhs {
                    ok = false;
                    witness = Some(format!(
                        "at (g,h)=({},{})",
                        self.group.name(g),
                        self.group.name(h)
                    ));
                    break 'outer;
                }
            }
        }
        report.push("equality holds for all bracket pairs", ok, witness);
        report
    }

    /// E-space of a word [r₁][r₂]…[rₖ]: D_{r₁} ∩ D_{r₁r₂} ∩ … ∩ D_{r₁…rₖ},
    /// evaluated on the restricted ideals E_{[·]}.
    pub fn word_e_space(&self, word: &[usize]) -> Result<Subspace, ActionError> {
        let mut acc = Subspace::full(self.ambient);
        let mut prefix = self.group.identity();
        for &r in word {
            prefix = self.group.multiply(prefix, r)?;
            let gen = self.index[&SElem::generator(&self.group, prefix)?];
            acc = acc.intersect(&self.e_spaces[gen])?;
        }
        Ok(acc)
    }

    /// Restriction to the generators: ({E_{[g]}}, {β_{[g]}}) is a partial
    /// action of G.
    pub fn restrict_to_group(&self) -> Result<AlgebraPartialAction, ActionError> {
        let mut ideals = Vec::with_capacity(self.group.order());
        let mut maps = Vec::with_capacity(self.group.order());
        for g in self.group.elements() {
            let i = self.index[&SElem::generator(&self.group, g)?];
            ideals.push(self.e_spaces[i].clone());
            maps.push(self.beta[i].clone());
        }
        AlgebraPartialAction::new(self.group.clone(), self.algebra.clone(), ideals, maps)
    }
}

impl std::fmt::Debug for SgAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SgAction(|S(G)| = {}, dim A = {}, total E dim {})",
            self.elements.len(),
            self.algebra.dim(),
            self.e_spaces.iter().map(Subspace::dim).sum::<usize>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn p1_validates_and_induces() {
        let p1 = fixtures::p1();
        assert!(p1.validate().passed(), "{}", p1.validate());
        let alg = p1.induce_algebra_action().unwrap();
        assert_eq!(alg.algebra().dim(), 2);
        assert_eq!(alg.ideal(1).dim(), 1);
        let mut expected = Matrix::zeros(2, 2);
        expected[(0, 0)] = num::One::one();
        assert_eq!(alg.map(1), &expected);
        assert!(alg.validate().passed());
    }

    #[test]
    fn swap_fixture_validates() {
        let p = fixtures::z2_swap();
        assert!(p.validate().passed(), "{}", p.validate());
        assert!(p.induce_algebra_action().unwrap().validate().passed());
    }

    #[test]
    fn broken_z4_fixture_fails_axiom_two_with_witness() {
        let p = fixtures::z4_broken();
        let report = p.validate();
        assert!(!report.passed());
        let failure = report.first_failure().unwrap();
        assert!(failure.name.contains("axiom (ii)"), "{failure:?}");
        let w = failure.witness.as_deref().unwrap();
        assert!(w.contains("(a,a)"), "witness should name (g,h)=(a,a): {w}");
        assert!(p.induce_algebra_action().is_err());
    }

    #[test]
    fn global_action_induces_permutation_matrices() {
        let p = fixtures::z2_global();
        let alg = p.induce_algebra_action().unwrap();
        for g in alg.group().elements() {
            assert!(alg.ideal(g).is_full());
            let m = alg.map(g);
            for i in 0..2 {
                let ones = (0..2).filter(|&j| !num::Zero::is_zero(&m[(i, j)])).count();
                assert_eq!(ones, 1);
            }
        }
    }

    #[test]
    fn empty_action_gives_zero_ideals() {
        let p = fixtures::z2_empty();
        let alg = p.induce_algebra_action().unwrap();
        assert!(alg.ideal(1).is_zero_space());
        assert!(alg.validate().passed());
        let b = alg.to_sg_action(8).unwrap();
        let eps_a = b.index_of(&SElem::epsilon(b.group(), 1).unwrap()).unwrap();
        assert!(b.e_space(eps_a).is_zero_space());
    }

    #[test]
    fn p1_sg_action_dimensions() {
        let b = fixtures::p1_sg_action();
        let g = b.group().clone();
        let unit = b.index_of(&SElem::unit()).unwrap();
        let gen_a = b.index_of(&SElem::generator(&g, 1).unwrap()).unwrap();
        let eps_a = b.index_of(&SElem::epsilon(&g, 1).unwrap()).unwrap();
        assert_eq!(b.e_space(unit).dim(), 2);
        assert_eq!(b.e_space(gen_a).dim(), 1);
        assert_eq!(b.e_space(eps_a).dim(), 1);
        // β_{ε_a} is the identity on D_a.
        for v in b.e_space(eps_a).basis_rows() {
            assert_eq!(b.beta(eps_a).apply(v).unwrap(), v.to_vec());
        }
    }

    #[test]
    fn bijection_round_trips() {
        for action in [
            fixtures::p1(),
            fixtures::z2_swap(),
            fixtures::z3_rotation(),
            fixtures::sym3_partial(),
        ] {
            let alg = action.induce_algebra_action().unwrap();
            let b = alg.to_sg_action(8).unwrap();
            let back = b.restrict_to_group().unwrap();
            assert!(back == alg, "restrict(induce(α)) = α for {action:?}");
            let again = back.to_sg_action(8).unwrap();
            assert!(again == b, "induce(restrict(β)) = β for {action:?}");
        }
    }

    #[test]
    fn e_monotone_and_bracket_intersections_on_p1() {
        let b = fixtures::p1_sg_action();
        assert!(b.check_e_monotone().passed());
        assert!(b.check_bracket_intersections().passed());
    }

    #[test]
    fn global_fixture_has_full_e_spaces() {
        let b = fixtures::z2_global()
            .induce_algebra_action()
            .unwrap()
            .to_sg_action(8)
            .unwrap();
        for i in 0..b.elements().len() {
            assert!(b.e_space(i).is_full());
        }
    }

    #[test]
    fn word_e_space_formula_matches_product_element() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for b in [fixtures::p1_sg_action(), fixtures::sym3_sg_action()] {
            let g = b.group().clone();
            for _ in 0..50 {
                let len = rng.gen_range(1..=4);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..g.order())).collect();
                let mut elem = SElem::unit();
                for &r in &word {
                    elem =
                        semigroup::multiply(&g, &elem, &SElem::generator(&g, r).unwrap()).unwrap();
                }
                let via_formula = b.word_e_space(&word).unwrap();
                let via_element = b.e_space(b.index_of(&elem).unwrap());
                assert_eq!(&via_formula, via_element, "word {word:?}");
            }
        }
    }

    #[test]
    fn star_compatibility_for_function_algebras() {
        let alg = fixtures::p1().induce_algebra_action().unwrap();
        assert!(alg.validate_star().passed());
        // and at the semigroup level: E_s *-closed, beta_s commute with *
        for (name, p) in fixtures::standard_set_fixtures() {
            let b = p.induce_algebra_action().unwrap().to_sg_action(8).unwrap();
            let rep = b.validate_star();
            assert!(rep.passed(), "{name}: {rep}");
        }
    }

    #[test]
    fn semigroup_map_is_multiplicative_on_p1() {
        let p = fixtures::p1();
        let b = fixtures::p1_sg_action();
        for s in b.elements() {
            for t in b.elements() {
                let st = semigroup::multiply(p.group(), s, t).unwrap();
                let lhs = p.semigroup_map(s).compose(&p.semigroup_map(t)).unwrap();
                assert_eq!(lhs, p.semigroup_map(&st));
            }
        }
    }
}
