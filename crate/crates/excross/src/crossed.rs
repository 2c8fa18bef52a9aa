//! Algebraic partial crossed products and covariant representations.
//!
//! For a partial action α of G on A, the crossed product A⋊ᵃ_αG has basis
//! elements a_gδ_g (a_g ∈ D_g) with (a_gδ_g)(a_hδ_h) = α_g(α_{g⁻¹}(a_g)a_h)δ_{gh}
//! and, when A is involutive, (a_gδ_g)* = α_{g⁻¹}(a_g*)δ_{g⁻¹}.
//!
//! For the induced action β of S(G), the set L of formal sums Σ a_sδ_s
//! (a_s ∈ E_s) carries (a_rδ_r)(a_sδ_s) = β_r(β_{r*}(a_r)a_s)δ_{rs}. The
//! ideal N is generated by aδ_r − aδ_t for comparable pairs r ≤ t with
//! a ∈ E_r, and the crossed product of β is L/N. The map φ(aδ_g) = class of
//! aδ_{[g]} is an isomorphism A⋊ᵃ_αG → L/N with inverse induced by
//! ψ(aδ_s) = aδ_{γ(s)}.
//!
//! Covariant representations (π, ν) are realized on H = Q^X for the
//! function-algebra fixtures: π(a) diagonal, ν_s the partial permutation
//! matrix of the set-level map of s, and (π×ν)(x) = Σ_s π(x(s))ν_s kills N.

use num::{One, Signed, ToPrimitive, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::action::{
    coordinate_subspace, ActionError, AlgebraPartialAction, SetPartialAction, SgAction,
};
use crate::linalg::{LinalgError, Matrix, Rat, StructureAlgebra, Subspace};
use crate::report::Report;
use crate::semigroup::{self, SElem, SgError};

#[derive(Debug, Clone, Error)]
pub enum CrossedError {
    #[error("source mismatch: {0}")]
    SourceMismatch(String),
    #[error("the multiplication of L is not associative; witness triple ({0}, {1}, {2})")]
    NonAssociativeL(String, String, String),
    #[error("product of {left} and {right} escapes its coefficient ideal")]
    ProductEscapesIdeal { left: String, right: String },
    #[error("map does not vanish on N: {generator}")]
    NotWellDefined { generator: String },
    #[error("ideal at slot {slot} has no local unit")]
    NoLocalUnit { slot: String },
    #[error("matrix is not square")]
    NotSquare,
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Sg(#[from] SgError),
}

/// The crossed product A⋊ᵃ_αG as a structure-constant algebra with basis
/// labels (i, g) = i-th basis vector of D_g at symbol δ_g.
pub struct GroupCrossedProduct {
    action: AlgebraPartialAction,
    algebra: StructureAlgebra,
    basis: Vec<(usize, usize)>,
    offsets: Vec<usize>,
}

impl GroupCrossedProduct {
    pub fn build(action: AlgebraPartialAction) -> Result<Self, CrossedError> {
        let report = action.validate();
        if !report.passed() {
            return Err(ActionError::InvalidAction(Box::new(report)).into());
        }
        let group = action.group().clone();
        let a = action.algebra();
        let mut basis = Vec::new();
        let mut offsets = Vec::with_capacity(group.order());
        for g in group.elements() {
            offsets.push(basis.len());
            for i in 0..action.ideal(g).dim() {
                basis.push((i, g));
            }
        }
        let dim = basis.len();
        let labels: Vec<String> = basis
            .iter()
            .map(|&(i, g)| format!("({i},{})", group.name(g)))
            .collect();

        let embed = |g: usize, v: &[Rat]| -> Result<Vec<Rat>, CrossedError> {
            let coords =
                action
                    .ideal(g)
                    .coords(v)
                    .ok_or_else(|| CrossedError::ProductEscapesIdeal {
                        left: format!("coefficient at delta_{}", group.name(g)),
                        right: "its ideal".into(),
                    })?;
            let mut out = vec![Rat::zero(); dim];
            for (k, c) in coords.into_iter().enumerate() {
                out[offsets[g] + k] = c;
            }
            Ok(out)
        };

        let mut products = Vec::new();
        for (p, &(i, g)) in basis.iter().enumerate() {
            let v = action.ideal(g).basis().row_vec(i);
            let gi = group.inv(g);
            for (q, &(j, h)) in basis.iter().enumerate() {
                let w = action.ideal(h).basis().row_vec(j);
                let u = action.apply(gi, &v)?;
                let prod = a.mult_dense(&u, &w)?;
                if !(action.ideal(gi).contains(&prod) && action.ideal(h).contains(&prod)) {
                    return Err(CrossedError::ProductEscapesIdeal {
                        left: labels[p].clone(),
                        right: labels[q].clone(),
                    });
                }
                let image = action.apply(g, &prod)?;
                let gh = group.mul(g, h);
                if !(action.ideal(g).contains(&image) && action.ideal(gh).contains(&image)) {
                    return Err(CrossedError::ProductEscapesIdeal {
                        left: labels[p].clone(),
                        right: labels[q].clone(),
                    });
                }
                if !image.iter().all(Rat::is_zero) {
                    products.push(((p, q), embed(gh, &image)?));
                }
            }
        }

        let involution = match a.involution() {
            Some(_) => {
                let mut m = Matrix::zeros(dim, dim);
                for (p, &(i, g)) in basis.iter().enumerate() {
                    let v = action.ideal(g).basis().row_vec(i);
                    let gi = group.inv(g);
                    let starred = action.apply(gi, &a.star_vec(&v)?)?;
                    let col = embed(gi, &starred)?;
                    for r in 0..dim {
                        m[(r, p)] = col[r].clone();
                    }
                }
                Some(m)
            }
            None => None,
        };
        let unit = match a.unit() {
            Some(u) => Some(embed(group.identity(), u)?),
            None => None,
        };
        let algebra = StructureAlgebra::new(labels, products, involution, unit)
            .map_err(CrossedError::Linalg)?;
        Ok(GroupCrossedProduct {
            action,
            algebra,
            basis,
            offsets,
        })
    }

    pub fn action(&self) -> &AlgebraPartialAction {
        &self.action
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// The element v·δ_g as a coordinate vector of the crossed product.
    pub fn embed(&self, g: usize, v: &[Rat]) -> Result<Vec<Rat>, CrossedError> {
        let coords =
            self.action
                .ideal(g)
                .coords(v)
                .ok_or_else(|| CrossedError::ProductEscapesIdeal {
                    left: format!("coefficient at delta_{}", self.action.group().name(g)),
                    right: "its ideal".into(),
                })?;
        let mut out = vec![Rat::zero(); self.dim()];
        for (k, c) in coords.into_iter().enumerate() {
            out[self.offsets[g] + k] = c;
        }
        Ok(out)
    }

    /// Per-symbol ambient coefficient vectors of an element.
    pub fn coefficient_blocks(&self, x: &[Rat]) -> Vec<(usize, Vec<Rat>)> {
        let n = self.action.algebra().dim();
        let group = self.action.group();
        let mut blocks = Vec::new();
        for g in group.elements() {
            let d = self.action.ideal(g);
            let mut coeff = vec![Rat::zero(); n];
            for i in 0..d.dim() {
                let c = &x[self.offsets[g] + i];
                if !c.is_zero() {
                    for (cv, bv) in coeff.iter_mut().zip(d.basis().row(i)) {
                        *cv += c * bv;
                    }
                }
            }
            blocks.push((g, coeff));
        }
        blocks
    }

    /// ‖Σ a_gδ_g‖₁ = Σ ‖a_g‖ with the sup norm on coefficient coordinates.
    pub fn one_norm(&self, x: &[Rat]) -> Rat {
        self.coefficient_blocks(x)
            .iter()
            .map(|(_, v)| sup_norm(v))
            .sum()
    }
}

impl std::fmt::Debug for GroupCrossedProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupCrossedProduct(dim {})", self.dim())
    }
}

fn sup_norm(v: &[Rat]) -> Rat {
    let mut m = Rat::zero();
    for x in v {
        let a = x.abs();
        if a > m {
            m = a;
        }
    }
    m
}

/// L, the ideal N, and the quotient A⋊ᵃ_βS(G) = L/N for an action of S(G).
pub struct SgCrossedProduct {
    action: SgAction,
    l: StructureAlgebra,
    basis: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    n_ideal: Subspace,
    quotient: StructureAlgebra,
    projection: Matrix,
}

/// L together with its basis map (i, s-index) and per-slot offsets.
pub type LParts = (StructureAlgebra, Vec<(usize, usize)>, Vec<usize>);

/// The structure algebra L (no associativity requirement) with its basis map
/// and offsets.
pub fn build_l_algebra(action: &SgAction) -> Result<LParts, CrossedError> {
    let group = action.group().clone();
    let a = action.algebra();
    let mut basis = Vec::new();
    let mut offsets = Vec::with_capacity(action.elements().len());
    for (si, _) in action.elements().iter().enumerate() {
        offsets.push(basis.len());
        for i in 0..action.e_space(si).dim() {
            basis.push((i, si));
        }
    }
    let dim = basis.len();
    let labels: Vec<String> = basis
        .iter()
        .map(|&(i, si)| format!("({i},{})", action.elements()[si].render(&group)))
        .collect();
    let embed = |si: usize, v: &[Rat]| -> Result<Vec<Rat>, CrossedError> {
        let coords =
            action
                .e_space(si)
                .coords(v)
                .ok_or_else(|| CrossedError::ProductEscapesIdeal {
                    left: format!(
                        "coefficient at delta_{}",
                        action.elements()[si].render(&group)
                    ),
                    right: "its ideal".into(),
                })?;
        let mut out = vec![Rat::zero(); dim];
        for (k, c) in coords.into_iter().enumerate() {
            out[offsets[si] + k] = c;
        }
        Ok(out)
    };

    let mut products = Vec::new();
    for (p, &(i, r)) in basis.iter().enumerate() {
        let v = action.e_space(r).basis().row_vec(i);
        let r_star = action.star_index(r);
        for (q, &(j, s)) in basis.iter().enumerate() {
            let w = action.e_space(s).basis().row_vec(j);
            let u = action.beta(r_star).apply(&v)?;
            let prod = a.mult_dense(&u, &w)?;
            if !(action.e_space(r_star).contains(&prod) && action.e_space(s).contains(&prod)) {
                return Err(CrossedError::ProductEscapesIdeal {
                    left: labels[p].clone(),
                    right: labels[q].clone(),
                });
            }
            let image = action.beta(r).apply(&prod)?;
            let rs = action.product_index(r, s);
            if !image.iter().all(Rat::is_zero) {
                let col = action.e_space(rs).coords(&image).ok_or_else(|| {
                    CrossedError::ProductEscapesIdeal {
                        left: labels[p].clone(),
                        right: labels[q].clone(),
                    }
                })?;
                let mut out = vec![Rat::zero(); dim];
                for (k, c) in col.into_iter().enumerate() {
                    out[offsets[rs] + k] = c;
                }
                products.push(((p, q), out));
            }
        }
    }

    let involution = match a.involution() {
        Some(_) => {
            let mut m = Matrix::zeros(dim, dim);
            for (p, &(i, s)) in basis.iter().enumerate() {
                let v = action.e_space(s).basis().row_vec(i);
                let s_star = action.star_index(s);
                let starred = action.beta(s_star).apply(&a.star_vec(&v)?)?;
                let col = embed(s_star, &starred)?;
                for r in 0..dim {
                    m[(r, p)] = col[r].clone();
                }
            }
            Some(m)
        }
        None => None,
    };
    let unit = match a.unit() {
        Some(u) => {
            let unit_slot = action
                .index_of(&SElem::unit())
                .expect("unit element is always enumerated");
            Some(embed(unit_slot, u)?)
        }
        None => None,
    };
    let l =
        StructureAlgebra::new(labels, products, involution, unit).map_err(CrossedError::Linalg)?;
    Ok((l, basis, offsets))
}

impl SgCrossedProduct {
    /// Builds L, checks associativity (aborting with a witness triple if it
    /// fails), generates N from all comparable pairs r < t, certifies the
    /// closure with an independent reversed-order run, and forms L/N.
    pub fn build(action: SgAction) -> Result<Self, CrossedError> {
        let (l, basis, offsets) = build_l_algebra(&action)?;
        if let Some((i, j, k)) = l.check_associativity() {
            return Err(CrossedError::NonAssociativeL(
                l.labels()[i].clone(),
                l.labels()[j].clone(),
                l.labels()[k].clone(),
            ));
        }
        let generators = n_generators(&action, &offsets, l.dim());
        let n_ideal = l.two_sided_ideal_closure(generators.iter().map(|(_, v)| v.clone()))?;
        let reversed =
            l.two_sided_ideal_closure(generators.iter().rev().map(|(_, v)| v.clone()))?;
        if n_ideal != reversed {
            return Err(CrossedError::NotWellDefined {
                generator: "closure of N depends on generator order".into(),
            });
        }
        let (quotient, projection) = l.quotient(&n_ideal)?;
        Ok(SgCrossedProduct {
            action,
            l,
            basis,
            offsets,
            n_ideal,
            quotient,
            projection,
        })
    }

    pub fn action(&self) -> &SgAction {
        &self.action
    }

    pub fn l_algebra(&self) -> &StructureAlgebra {
        &self.l
    }

    pub fn l_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    pub fn n_ideal(&self) -> &Subspace {
        &self.n_ideal
    }

    pub fn quotient(&self) -> &StructureAlgebra {
        &self.quotient
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Re-runs the N closure from the reversed generator list and compares
    /// the resulting subspace with the stored one.
    pub fn certify_n_closure(&self) -> Result<bool, CrossedError> {
        let generators = n_generators(&self.action, &self.offsets, self.l.dim());
        let again = self
            .l
            .two_sided_ideal_closure(generators.iter().rev().map(|(_, v)| v.clone()))?;
        Ok(again == self.n_ideal)
    }

    /// The element v·δ_s as a coordinate vector of L.
    pub fn embed(&self, s_idx: usize, v: &[Rat]) -> Result<Vec<Rat>, CrossedError> {
        let coords = self.action.e_space(s_idx).coords(v).ok_or_else(|| {
            CrossedError::ProductEscapesIdeal {
                left: format!(
                    "coefficient at delta_{}",
                    self.action.elements()[s_idx].render(self.action.group())
                ),
                right: "its ideal".into(),
            }
        })?;
        let mut out = vec![Rat::zero(); self.l_dim()];
        for (k, c) in coords.into_iter().enumerate() {
            out[self.offsets[s_idx] + k] = c;
        }
        Ok(out)
    }

    /// Per-slot ambient coefficient vectors of an element of L.
    pub fn coefficient_blocks(&self, x: &[Rat]) -> Vec<(usize, Vec<Rat>)> {
        let n = self.action.algebra().dim();
        let mut blocks = Vec::new();
        for (si, _) in self.action.elements().iter().enumerate() {
            let e = self.action.e_space(si);
            let mut coeff = vec![Rat::zero(); n];
            for i in 0..e.dim() {
                let c = &x[self.offsets[si] + i];
                if !c.is_zero() {
                    for (cv, bv) in coeff.iter_mut().zip(e.basis().row(i)) {
                        *cv += c * bv;
                    }
                }
            }
            blocks.push((si, coeff));
        }
        blocks
    }

    pub fn one_norm(&self, x: &[Rat]) -> Rat {
        self.coefficient_blocks(x)
            .iter()
            .map(|(_, v)| sup_norm(v))
            .sum()
    }

    /// In the quotient: aδ_{[g][h]} = aδ_{[gh]} (for a ∈ E_{[g][h]}) and
    /// aδ_{ε…ε[g]} = aδ_{[g]} (for a ∈ E_s).
    pub fn check_quotient_identities(&self) -> Report {
        let mut report = Report::new("quotient identities for bracket words and ε-decorations");
        let group = self.action.group().clone();
        let gen_idx = |g: usize| {
            self.action
                .index_of(&SElem::generator(&group, g).expect("generator in range"))
                .expect("generators are enumerated")
        };
        let mut ok1 = true;
        let mut witness1 = None;
        'outer1: for g in group.elements() {
            for h in group.elements() {
                let gh_word = self.action.product_index(gen_idx(g), gen_idx(h));
                let gh = gen_idx(group.mul(g, h));
                for v in self.action.e_space(gh_word).basis_rows() {
                    let lhs = self
                        .projection
                        .apply(&self.embed(gh_word, v).unwrap())
                        .unwrap();
                    let rhs = self.projection.apply(&self.embed(gh, v).unwrap()).unwrap();
                    if lhs != rhs {
                        ok1 = false;
                        witness1 = Some(format!(
                            "aδ_{{[g][h]}} ≠ aδ_{{[gh]}} at (g,h)=({},{})",
                            group.name(g),
                            group.name(h)
                        ));
                        break 'outer1;
                    }
                }
            }
        }
        report.push(
            "aδ_{[g][h]} = aδ_{[gh]} in L/N for all g,h and coefficients",
            ok1,
            witness1,
        );

        let mut ok2 = true;
        let mut witness2 = None;
        'outer2: for (si, s) in self.action.elements().iter().enumerate() {
            if s.eps().is_empty() {
                continue;
            }
            let bracket = gen_idx(s.gamma());
            for v in self.action.e_space(si).basis_rows() {
                let lhs = self.projection.apply(&self.embed(si, v).unwrap()).unwrap();
                let rhs = self
                    .projection
                    .apply(&self.embed(bracket, v).unwrap())
                    .unwrap();
                if lhs != rhs {
                    ok2 = false;
                    witness2 = Some(format!("at s = {}", s.render(&group)));
                    break 'outer2;
                }
            }
        }
        report.push(
            "aδ_s = aδ_{[γ(s)]} in L/N for all ε-decorated s",
            ok2,
            witness2,
        );
        report
    }
}

impl std::fmt::Debug for SgCrossedProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SgCrossedProduct(dim L = {}, dim N = {}, dim L/N = {})",
            self.l_dim(),
            self.n_ideal.dim(),
            self.quotient.dim()
        )
    }
}

/// Generators aδ_r − aδ_t of N over all comparable pairs r < t (r = t gives
/// zero and is pruned), with a ranging over the basis of E_r.
fn n_generators(action: &SgAction, offsets: &[usize], dim: usize) -> Vec<(String, Vec<Rat>)> {
    let group = action.group();
    let mut gens = Vec::new();
    for (ti, t) in action.elements().iter().enumerate() {
        for (ri, r) in action.elements().iter().enumerate() {
            if ri == ti || !semigroup::leq(r, t) {
                continue;
            }
            // E_r ⊆ E_t, so the coefficient embeds at both slots.
            for v in action.e_space(ri).basis_rows() {
                let r_coords = action.e_space(ri).coords(v).expect("basis vector");
                let t_coords = action
                    .e_space(ti)
                    .coords(v)
                    .expect("E_r ⊆ E_t for comparable pairs");
                let mut g = vec![Rat::zero(); dim];
                for (k, c) in r_coords.into_iter().enumerate() {
                    g[offsets[ri] + k] = c;
                }
                for (k, c) in t_coords.into_iter().enumerate() {
                    g[offsets[ti] + k] -= c;
                }
                gens.push((
                    format!("aδ_{} − aδ_{}", r.render(group), t.render(group)),
                    g,
                ));
            }
        }
    }
    gens
}

/// The mutually inverse isomorphisms φ : A⋊ᵃ_αG → L/N and ψ̃ : L/N → A⋊ᵃ_αG.
pub struct Isomorphism {
    pub phi: Matrix,
    pub psi_l: Matrix,
    pub psi_tilde: Matrix,
    pub report: Report,
}

pub fn build_isomorphism(
    cp: &GroupCrossedProduct,
    scp: &SgCrossedProduct,
) -> Result<Isomorphism, CrossedError> {
    let restricted = scp.action().restrict_to_group()?;
    if &restricted != cp.action() {
        return Err(CrossedError::SourceMismatch(
            "the two crossed products are not built from corresponding actions".into(),
        ));
    }
    let group = cp.action().group().clone();
    let qdim = scp.quotient().dim();
    let cpdim = cp.dim();

    // φ(vδ_g) = class of vδ_{[g]}.
    let mut phi = Matrix::zeros(qdim, cpdim);
    for (p, &(i, g)) in cp.basis().iter().enumerate() {
        let v = cp.action().ideal(g).basis().row_vec(i);
        let slot = scp
            .action()
            .index_of(&SElem::generator(&group, g)?)
            .expect("generators enumerated");
        let col = scp.projection().apply(&scp.embed(slot, &v)?)?;
        for r in 0..qdim {
            phi[(r, p)] = col[r].clone();
        }
    }

    // ψ(vδ_s) = vδ_{γ(s)} on L; vanishes on N, then descends to ψ̃.
    let mut psi_l = Matrix::zeros(cpdim, scp.l_dim());
    for (p, &(i, si)) in scp.basis().iter().enumerate() {
        let v = scp.action().e_space(si).basis().row_vec(i);
        let g = scp.action().elements()[si].gamma();
        let col = cp.embed(g, &v)?;
        for r in 0..cpdim {
            psi_l[(r, p)] = col[r].clone();
        }
    }
    for row in scp.n_ideal().basis_rows() {
        let image = psi_l.apply(row)?;
        if !image.iter().all(Rat::is_zero) {
            return Err(CrossedError::NotWellDefined {
                generator: "an N basis vector maps to a nonzero element".into(),
            });
        }
    }
    // Lift of the quotient basis: the non-pivot coordinates of N's RREF.
    let free: Vec<usize> = (0..scp.l_dim())
        .filter(|c| !scp.n_ideal().pivots().contains(c))
        .collect();
    let mut lift = Matrix::zeros(scp.l_dim(), qdim);
    for (k, &f) in free.iter().enumerate() {
        lift[(f, k)] = Rat::one();
    }
    let psi_tilde = psi_l.mul(&lift)?;

    let mut report = Report::new("crossed-product isomorphism checks");
    report.push(
        "dim A⋊G = dim L − dim N",
        cpdim == scp.l_dim() - scp.n_ideal().dim(),
        Some(format!(
            "{} vs {} − {}",
            cpdim,
            scp.l_dim(),
            scp.n_ideal().dim()
        )),
    );
    report.push(
        "φ and ψ̃ act between spaces of equal dimension",
        qdim == cpdim,
        None,
    );
    report.push("φ has full rank", phi.rank() == qdim.min(cpdim), None);

    let id_q = phi.mul(&psi_tilde)?;
    let id_cp = psi_tilde.mul(&phi)?;
    report.push("φ∘ψ̃ = id on L/N", id_q == Matrix::identity(qdim), None);
    report.push("ψ̃∘φ = id on A⋊G", id_cp == Matrix::identity(cpdim), None);

    let mut mult_ok = true;
    let mut witness = None;
    'pairs: for p in 0..cpdim {
        let phi_p = phi_column(&phi, p);
        for q in 0..cpdim {
            let prod = cp.algebra().mult_basis_dense(p, q);
            let lhs = phi.apply(&prod)?;
            let rhs = scp.quotient().mult_dense(&phi_p, &phi_column(&phi, q))?;
            if lhs != rhs {
                mult_ok = false;
                witness = Some(format!(
                    "φ not multiplicative at ({}, {})",
                    cp.algebra().labels()[p],
                    cp.algebra().labels()[q]
                ));
                break 'pairs;
            }
        }
    }
    report.push("φ is multiplicative on all basis pairs", mult_ok, witness);

    match (cp.algebra().involution(), scp.quotient().involution()) {
        (Some(cp_star), Some(q_star)) => {
            let star_ok = phi.mul(cp_star)? == q_star.mul(&phi)?;
            report.push("φ preserves *", star_ok, None);
        }
        (None, None) => {}
        _ => report.push_fail("φ preserves *", "involution present on only one side"),
    }
    if let (Some(u_cp), Some(u_q)) = (cp.algebra().unit(), scp.quotient().unit()) {
        report.push(
            "φ maps unit to unit",
            phi.apply(u_cp)? == u_q.to_vec(),
            None,
        );
    }

    Ok(Isomorphism {
        phi,
        psi_l,
        psi_tilde,
        report,
    })
}

fn phi_column(phi: &Matrix, p: usize) -> Vec<Rat> {
    (0..phi.rows()).map(|r| phi[(r, p)].clone()).collect()
}

/// A covariant representation (π, ν) on a finite-dimensional rational space.
pub struct CovariantRep {
    pub space_dim: usize,
    /// π of each coefficient-algebra basis vector.
    pub pi: Vec<Matrix>,
    /// ν of each S(G) element, indexed like the action's element list.
    pub nu: Vec<Matrix>,
}

impl CovariantRep {
    pub fn pi_of(&self, v: &[Rat]) -> Result<Matrix, CrossedError> {
        if v.len() != self.pi.len() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.pi.len(),
                got: v.len(),
            }
            .into());
        }
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, m) in v.iter().zip(&self.pi) {
            if !c.is_zero() {
                for i in 0..self.space_dim {
                    for j in 0..self.space_dim {
                        if !m[(i, j)].is_zero() {
                            out[(i, j)] += c * &m[(i, j)];
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The natural covariant representation on H = Q^X: π(a) diagonal, ν_s the
/// partial permutation matrix of the set-level map of s.
pub fn natural_covariant_rep(
    p: &SetPartialAction,
    b: &SgAction,
) -> Result<CovariantRep, CrossedError> {
    if p.group() != b.group() {
        return Err(CrossedError::SourceMismatch("different groups".into()));
    }
    if b.algebra() != &StructureAlgebra::function_algebra(p.base_size()) {
        return Err(CrossedError::SourceMismatch(
            "the S(G)-action does not live on the function algebra of X".into(),
        ));
    }
    let n = p.base_size();
    for (si, s) in b.elements().iter().enumerate() {
        let set_level = coordinate_subspace(n, &p.semigroup_map(s).image())?;
        if &set_level != b.e_space(si) {
            return Err(CrossedError::SourceMismatch(format!(
                "E_{} does not match the set-level action",
                s.render(p.group())
            )));
        }
    }
    let pi = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            m[(i, i)] = Rat::one();
            m
        })
        .collect();
    let nu = b
        .elements()
        .iter()
        .map(|s| {
            let mut m = Matrix::zeros(n, n);
            for (src, tgt) in p.semigroup_map(s).pairs() {
                m[(tgt, src)] = Rat::one();
            }
            m
        })
        .collect();
    Ok(CovariantRep {
        space_dim: n,
        pi,
        nu,
    })
}

/// U is a partial isometry iff U = U·Uᵀ·U; equivalently UᵀU is a projection.
/// Both forms are computed and must agree.
pub fn is_partial_isometry(u: &Matrix) -> Result<bool, CrossedError> {
    if u.rows() != u.cols() {
        return Err(CrossedError::NotSquare);
    }
    let ut = u.transpose();
    let triple = u.mul(&ut)?.mul(u)?;
    let first = triple == *u;
    let p = ut.mul(u)?;
    let second = p.mul(&p)? == p;
    debug_assert_eq!(
        first, second,
        "the two partial-isometry criteria must agree"
    );
    Ok(first && second)
}

/// Checks all covariant-representation conditions exhaustively.
pub fn validate_covariant(rep: &CovariantRep, b: &SgAction) -> Report {
    let mut report = Report::new("covariant representation checks");
    let a = b.algebra();
    let n = a.dim();
    let group = b.group();

    let mut pi_mult = true;
    'pi: for i in 0..n {
        for j in 0..n {
            let lhs = rep.pi[i].mul(&rep.pi[j]).unwrap();
            let rhs = rep.pi_of(&a.mult_basis_dense(i, j)).unwrap();
            if lhs != rhs {
                pi_mult = false;
                break 'pi;
            }
        }
    }
    report.push("π is multiplicative", pi_mult, None);
    if let Some(u) = a.unit() {
        report.push(
            "π is unital",
            rep.pi_of(u).unwrap() == Matrix::identity(rep.space_dim),
            None,
        );
    }

    let mut iso_ok = true;
    let mut iso_witness = None;
    for (si, s) in b.elements().iter().enumerate() {
        if !is_partial_isometry(&rep.nu[si]).unwrap_or(false) {
            iso_ok = false;
            iso_witness = Some(format!("ν_{} is not a partial isometry", s.render(group)));
            break;
        }
    }
    report.push("every ν_s satisfies ν = νν*ν", iso_ok, iso_witness);

    let mut adj_ok = true;
    for (si, _) in b.elements().iter().enumerate() {
        if rep.nu[b.star_index(si)] != rep.nu[si].transpose() {
            adj_ok = false;
            break;
        }
    }
    report.push("ν_{s*} = ν_sᵀ", adj_ok, None);

    let mut mult_ok = true;
    let mut mult_witness = None;
    'nu: for (si, s) in b.elements().iter().enumerate() {
        for (ti, t) in b.elements().iter().enumerate() {
            let st = b.product_index(si, ti);
            if rep.nu[si].mul(&rep.nu[ti]).unwrap() != rep.nu[st] {
                mult_ok = false;
                mult_witness = Some(format!(
                    "ν_sν_t ≠ ν_{{st}} at s={}, t={}",
                    s.render(group),
                    t.render(group)
                ));
                break 'nu;
            }
        }
    }
    report.push("ν is multiplicative on all pairs", mult_ok, mult_witness);

    let mut cov_ok = true;
    let mut cov_witness = None;
    'cov: for (si, s) in b.elements().iter().enumerate() {
        let star = b.star_index(si);
        for v in b.e_space(star).basis_rows() {
            let lhs = rep.nu[si]
                .mul(&rep.pi_of(v).unwrap())
                .unwrap()
                .mul(&rep.nu[star])
                .unwrap();
            let rhs = rep.pi_of(&b.beta(si).apply(v).unwrap()).unwrap();
            if lhs != rhs {
                cov_ok = false;
                cov_witness = Some(format!("at s = {}", s.render(group)));
                break 'cov;
            }
        }
    }
    report.push("covariance: ν_sπ(a)ν_{s*} = π(β_s(a))", cov_ok, cov_witness);

    let mut spaces_ok = true;
    let mut spaces_witness = None;
    for (si, s) in b.elements().iter().enumerate() {
        let star = b.star_index(si);
        let initial = Subspace::from_vectors(
            rep.space_dim,
            rep.nu[si]
                .iter_rows()
                .map(<[Rat]>::to_vec)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let final_space = Subspace::from_vectors(
            rep.space_dim,
            rep.nu[si]
                .transpose()
                .iter_rows()
                .map(<[Rat]>::to_vec)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        if initial != pi_image(rep, b.e_space(star)) || final_space != pi_image(rep, b.e_space(si))
        {
            spaces_ok = false;
            spaces_witness = Some(format!("at s = {}", s.render(group)));
            break;
        }
    }
    report.push(
        "initial space = π(E_{s*})H and final space = π(E_s)H",
        spaces_ok,
        spaces_witness,
    );
    report
}

/// span{π(v)h : v ∈ E, h ∈ H}.
fn pi_image(rep: &CovariantRep, e: &Subspace) -> Subspace {
    let mut vectors = Vec::new();
    for v in e.basis_rows() {
        let m = rep.pi_of(v).unwrap();
        for j in 0..rep.space_dim {
            let col: Vec<Rat> = (0..rep.space_dim).map(|i| m[(i, j)].clone()).collect();
            if col.iter().any(|x| !x.is_zero()) {
                vectors.push(col);
            }
        }
    }
    Subspace::from_vectors(rep.space_dim, vectors).unwrap()
}

impl SgCrossedProduct {
    /// (π×ν)(x) = Σ_s π(x(s))·ν_s for x ∈ L.
    pub fn pi_times_nu(&self, rep: &CovariantRep, x: &[Rat]) -> Result<Matrix, CrossedError> {
        if x.len() != self.l_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.l_dim(),
                got: x.len(),
            }
            .into());
        }
        let mut out = Matrix::zeros(rep.space_dim, rep.space_dim);
        for (si, coeff) in self.coefficient_blocks(x) {
            if coeff.iter().all(Rat::is_zero) {
                continue;
            }
            let term = rep.pi_of(&coeff)?.mul(&rep.nu[si])?;
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// π×ν checks: kills every basis vector of N, multiplicative on all basis
    /// pairs of L, and maps the unit (when present) to the identity.
    pub fn check_pi_times_nu(&self, rep: &CovariantRep) -> Report {
        let mut report = Report::new("π×ν representation checks");
        let mut kills = true;
        let mut witness = None;
        for (k, row) in self.n_ideal.basis_rows().enumerate() {
            let m = self.pi_times_nu(rep, row).unwrap();
            if !m.is_zero() {
                kills = false;
                witness = Some(format!("N basis vector {k} maps to a nonzero matrix"));
                break;
            }
        }
        report.push("π×ν vanishes on every basis vector of N", kills, witness);

        let mut mult = true;
        let mut mult_witness = None;
        let dim = self.l_dim();
        let images: Vec<Matrix> = (0..dim)
            .map(|p| {
                let mut v = vec![Rat::zero(); dim];
                v[p] = Rat::one();
                self.pi_times_nu(rep, &v).unwrap()
            })
            .collect();
        'pairs: for p in 0..dim {
            for q in 0..dim {
                let prod = self.l.mult_basis_dense(p, q);
                let lhs = self.pi_times_nu(rep, &prod).unwrap();
                let rhs = images[p].mul(&images[q]).unwrap();
                if lhs != rhs {
                    mult = false;
                    mult_witness = Some(format!(
                        "π×ν not multiplicative at ({}, {})",
                        self.l.labels()[p],
                        self.l.labels()[q]
                    ));
                    break 'pairs;
                }
            }
        }
        report.push(
            "π×ν is multiplicative on all basis pairs of L",
            mult,
            mult_witness,
        );

        if let Some(u) = self.l.unit() {
            report.push(
                "π×ν maps the unit to the identity",
                self.pi_times_nu(rep, u).unwrap() == Matrix::identity(rep.space_dim),
                None,
            );
        }
        report
    }

    /// Reconstructs a covariant pair from a representation ρ of L that kills
    /// N: π(a) = ρ(aδ_{[e]}), ν_s = ρ(u_sδ_s) with u_s the exact unit of the
    /// finite-dimensional ideal E_s (the zero matrix when E_s = 0).
    ///
    /// `rho` gives the matrix of ρ on each basis vector of L.
    pub fn covariant_from_representation(
        &self,
        rho: &[Matrix],
        space_dim: usize,
    ) -> Result<CovariantRep, CrossedError> {
        if rho.len() != self.l_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.l_dim(),
                got: rho.len(),
            }
            .into());
        }
        let apply_rho = |x: &[Rat]| -> Result<Matrix, CrossedError> {
            let mut out = Matrix::zeros(space_dim, space_dim);
            for (c, m) in x.iter().zip(rho) {
                if !c.is_zero() {
                    for i in 0..space_dim {
                        for j in 0..space_dim {
                            if !m[(i, j)].is_zero() {
                                out[(i, j)] += c * &m[(i, j)];
                            }
                        }
                    }
                }
            }
            Ok(out)
        };
        let unit_slot = self
            .action
            .index_of(&SElem::unit())
            .expect("unit enumerated");
        let a_dim = self.action.algebra().dim();
        let mut pi = Vec::with_capacity(a_dim);
        for i in 0..a_dim {
            let mut v = vec![Rat::zero(); a_dim];
            v[i] = Rat::one();
            pi.push(apply_rho(&self.embed(unit_slot, &v)?)?);
        }
        let mut nu = Vec::with_capacity(self.action.elements().len());
        for (si, s) in self.action.elements().iter().enumerate() {
            let e = self.action.e_space(si);
            if e.is_zero_space() {
                nu.push(Matrix::zeros(space_dim, space_dim));
                continue;
            }
            let u =
                local_unit(self.action.algebra(), e).ok_or_else(|| CrossedError::NoLocalUnit {
                    slot: s.render(self.action.group()),
                })?;
            nu.push(apply_rho(&self.embed(si, &u)?)?);
        }
        Ok(CovariantRep { space_dim, pi, nu })
    }
}

/// The unit of a finite-dimensional subalgebra, if one exists: u with
/// u·v = v·u = v for every basis vector v.
pub fn local_unit(algebra: &StructureAlgebra, e: &Subspace) -> Option<Vec<Rat>> {
    let k = e.dim();
    let n = e.ambient();
    // Unknown u = Σ c_i b_i; equations u·b_j = b_j and b_j·u = b_j.
    let mut rows = Vec::with_capacity(2 * k * n);
    let mut rhs = Vec::with_capacity(2 * k * n);
    for j in 0..k {
        let bj = e.basis().row_vec(j);
        for left in [true, false] {
            for coord in 0..n {
                let mut row = Vec::with_capacity(k);
                for i in 0..k {
                    let bi = e.basis().row_vec(i);
                    let prod = if left {
                        algebra.mult_dense(&bi, &bj).ok()?
                    } else {
                        algebra.mult_dense(&bj, &bi).ok()?
                    };
                    row.push(prod[coord].clone());
                }
                rows.push(row);
                rhs.push(bj[coord].clone());
            }
        }
    }
    let m = Matrix::from_rows(rows).ok()?;
    let coeffs = m.solve(&rhs).ok()??;
    let mut u = vec![Rat::zero(); n];
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            for (uv, bv) in u.iter_mut().zip(e.basis().row(i)) {
                *uv += c * bv;
            }
        }
    }
    Some(u)
}

/// Outcome of the floating-point contractivity spot check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ContractivityOutcome {
    pub samples: usize,
    pub max_excess: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// For seeded random x ∈ L, estimates the operator 2-norm of (π×ν)(x) by
/// power iteration and checks it against ‖x‖₁ + tolerance.
pub fn contractivity_spot_check(
    scp: &SgCrossedProduct,
    rep: &CovariantRep,
    seed: u64,
    samples: usize,
    power_iters: usize,
    tolerance: f64,
) -> Result<ContractivityOutcome, CrossedError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = scp.l_dim();
    let mut max_excess = f64::NEG_INFINITY;
    for _ in 0..samples {
        let x: Vec<Rat> = (0..dim)
            .map(|_| {
                let num: i64 = rng.gen_range(-9..=9);
                let den: i64 = rng.gen_range(1..=4);
                Rat::new(num.into(), den.into())
            })
            .collect();
        let m = scp.pi_times_nu(rep, &x)?;
        let norm1 = scp.one_norm(&x).to_f64().unwrap_or(f64::INFINITY);
        let op = operator_norm_estimate(&m, power_iters, &mut rng);
        max_excess = max_excess.max(op - norm1);
    }
    Ok(ContractivityOutcome {
        samples,
        max_excess,
        tolerance,
        pass: max_excess <= tolerance,
    })
}

/// Largest singular value via power iteration on MᵀM, in floating point.
/// Converges from below, the safe direction for an upper-bound check.
pub fn operator_norm_estimate(m: &Matrix, iters: usize, rng: &mut ChaCha8Rng) -> f64 {
    let a = m.to_f64();
    let n = a.len();
    if n == 0 || m.is_zero() {
        return 0.0;
    }
    let apply = |v: &[f64]| -> Vec<f64> {
        let w: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| a[i][j] * v[j]).sum())
            .collect();
        (0..n)
            .map(|j| (0..n).map(|i| a[i][j] * w[i]).sum())
            .collect()
    };
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut lambda = 0.0f64;
    for _ in 0..iters {
        let w = apply(&v);
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return 0.0;
        }
        lambda = v.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>();
        v = w.into_iter().map(|x| x / norm).collect();
    }
    lambda.max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rat_int;

    fn p1_products() -> (GroupCrossedProduct, SgCrossedProduct) {
        let alg = fixtures::p1().induce_algebra_action().unwrap();
        let cp = GroupCrossedProduct::build(alg.clone()).unwrap();
        let scp = SgCrossedProduct::build(alg.to_sg_action(8).unwrap()).unwrap();
        (cp, scp)
    }

    #[test]
    fn p1_group_cp_structure() {
        let (cp, _) = p1_products();
        assert_eq!(cp.dim(), 3);
        assert_eq!(
            cp.algebra().labels(),
            &[
                "(0,e)".to_string(),
                "(1,e)".to_string(),
                "(0,a)".to_string()
            ]
        );
        // (e₀δ_a)(e₀δ_a) = e₀δ_e
        let e0_da = cp.embed(1, &[rat_int(1), rat_int(0)]).unwrap();
        let prod = cp.algebra().mult_dense(&e0_da, &e0_da).unwrap();
        let e0_de = cp.embed(0, &[rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(prod, e0_de);
        // the unit coefficient at δ_e acts as the unit
        let unit = cp.algebra().unit().unwrap().to_vec();
        assert_eq!(cp.algebra().mult_dense(&unit, &e0_da).unwrap(), e0_da);
        // star: (e₀δ_a)* = e₀δ_a (a = a⁻¹, identity involution)
        let star = cp.algebra().involution().unwrap().apply(&e0_da).unwrap();
        assert_eq!(star, e0_da);
    }

    #[test]
    fn group_cp_is_a_star_algebra() {
        for (_, f) in fixtures::standard_set_fixtures() {
            let cp = GroupCrossedProduct::build(f.induce_algebra_action().unwrap()).unwrap();
            // (xy)* = y*x* and x** = x are validated at construction; check
            // associativity of the full crossed product here.
            assert_eq!(cp.algebra().check_associativity(), None);
            let inv = cp.algebra().involution().unwrap();
            assert_eq!(inv.mul(inv).unwrap(), Matrix::identity(cp.dim()));
        }
    }

    #[test]
    fn p1_sg_cp_dimensions_and_quotient() {
        let (_, scp) = p1_products();
        assert_eq!(scp.l_dim(), 4);
        assert_eq!(scp.n_ideal().dim(), 1);
        assert_eq!(scp.quotient().dim(), 3);
        assert!(scp.certify_n_closure().unwrap());
        assert!(scp.check_quotient_identities().passed());
    }

    #[test]
    fn global_fixture_quotient_dimension() {
        let b = fixtures::z2_global()
            .induce_algebra_action()
            .unwrap()
            .to_sg_action(8)
            .unwrap();
        let scp = SgCrossedProduct::build(b).unwrap();
        // all D_g = A: quotient has dim |G|·dim A = 4
        assert_eq!(scp.quotient().dim(), 4);
        assert_eq!(scp.l_dim(), 6);
    }

    #[test]
    fn isomorphism_on_p1() {
        let (cp, scp) = p1_products();
        let iso = build_isomorphism(&cp, &scp).unwrap();
        assert!(iso.report.passed(), "{}", iso.report);
        assert_eq!(iso.phi.rows(), 3);
        // ψ̃(class of e₀δ_{ε_a}) = e₀δ_e
        let g = cp.action().group().clone();
        let eps_a = scp
            .action()
            .index_of(&SElem::epsilon(&g, 1).unwrap())
            .unwrap();
        let v = scp.embed(eps_a, &[rat_int(1), rat_int(0)]).unwrap();
        let class = scp.projection().apply(&v).unwrap();
        let back = iso.psi_tilde.apply(&class).unwrap();
        assert_eq!(back, cp.embed(0, &[rat_int(1), rat_int(0)]).unwrap());
    }

    #[test]
    fn zero_product_fixture_is_non_associative_with_witness() {
        let action = fixtures::zero_product_action();
        let cp = GroupCrossedProduct::build(action.clone()).unwrap();
        let witness = cp.algebra().check_associativity();
        assert!(
            witness.is_some(),
            "zero-product ideal fixture must fail associativity"
        );
        let (i, j, k) = witness.unwrap();
        let lhs = cp
            .algebra()
            .mult_dense(&cp.algebra().mult_basis_dense(i, j), &unit_vec(cp.dim(), k))
            .unwrap();
        let rhs = cp
            .algebra()
            .mult_dense(&unit_vec(cp.dim(), i), &cp.algebra().mult_basis_dense(j, k))
            .unwrap();
        assert_ne!(lhs, rhs);

        let b = action.to_sg_action(8).unwrap();
        match SgCrossedProduct::build(b) {
            Err(CrossedError::NonAssociativeL(..)) => {}
            other => panic!(
                "expected NonAssociativeL, got {:?}",
                other.map(|s| format!("{s:?}"))
            ),
        }
    }

    fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![rat_int(0); n];
        v[i] = rat_int(1);
        v
    }

    #[test]
    fn natural_rep_on_p1() {
        let p = fixtures::p1();
        let b = fixtures::p1_sg_action();
        let rep = natural_covariant_rep(&p, &b).unwrap();
        let g = p.group().clone();
        let gen_a = b.index_of(&SElem::generator(&g, 1).unwrap()).unwrap();
        // ν_{[a]} is the 2×2 matrix with a single 1 at (0,0)
        let mut expected = Matrix::zeros(2, 2);
        expected[(0, 0)] = rat_int(1);
        assert_eq!(rep.nu[gen_a], expected);
        let unit = b.index_of(&SElem::unit()).unwrap();
        assert_eq!(rep.nu[unit], Matrix::identity(2));
        let report = validate_covariant(&rep, &b);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn pi_times_nu_kills_n_and_maps_unit() {
        let p = fixtures::p1();
        let scp = SgCrossedProduct::build(fixtures::p1_sg_action()).unwrap();
        let rep = natural_covariant_rep(&p, scp.action()).unwrap();
        let checks = scp.check_pi_times_nu(&rep);
        assert!(checks.passed(), "{checks}");
        // the N generator e₀δ_{ε_a} − e₀δ_{[e]} maps to the zero matrix
        let g = p.group().clone();
        let eps_a = scp
            .action()
            .index_of(&SElem::epsilon(&g, 1).unwrap())
            .unwrap();
        let unit = scp.action().index_of(&SElem::unit()).unwrap();
        let mut x = scp.embed(eps_a, &[rat_int(1), rat_int(0)]).unwrap();
        let y = scp.embed(unit, &[rat_int(1), rat_int(0)]).unwrap();
        for (xi, yi) in x.iter_mut().zip(y) {
            *xi -= yi;
        }
        assert!(scp.pi_times_nu(&rep, &x).unwrap().is_zero());
    }

    #[test]
    fn partial_isometry_examples() {
        assert!(is_partial_isometry(&Matrix::identity(3)).unwrap());
        assert!(is_partial_isometry(&Matrix::zeros(2, 2)).unwrap());
        let mut shift = Matrix::zeros(2, 2);
        shift[(0, 1)] = rat_int(1);
        assert!(is_partial_isometry(&shift).unwrap());
        let mut bad = Matrix::zeros(2, 2);
        bad[(0, 0)] = rat_int(1);
        bad[(0, 1)] = rat_int(1);
        assert!(!is_partial_isometry(&bad).unwrap());
        assert!(matches!(
            is_partial_isometry(&Matrix::zeros(2, 3)),
            Err(CrossedError::NotSquare)
        ));
    }

    #[test]
    fn one_norm_examples() {
        let (cp, scp) = p1_products();
        let e0_da = cp.embed(1, &[rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(cp.one_norm(&e0_da), rat_int(1));
        // 2e₀δ_e + 3e₁δ_e: coefficient (2,3) at δ_e, sup = 3
        let x = cp.embed(0, &[rat_int(2), rat_int(3)]).unwrap();
        assert_eq!(cp.one_norm(&x), rat_int(3));
        assert_eq!(cp.one_norm(&vec![rat_int(0); cp.dim()]), rat_int(0));
        assert_eq!(scp.one_norm(&vec![rat_int(0); scp.l_dim()]), rat_int(0));
    }

    #[test]
    fn covariant_from_pi_times_nu_reconstructs_the_natural_rep() {
        let p = fixtures::p1();
        let scp = SgCrossedProduct::build(fixtures::p1_sg_action()).unwrap();
        let rep = natural_covariant_rep(&p, scp.action()).unwrap();
        let rho: Vec<Matrix> = (0..scp.l_dim())
            .map(|i| {
                let mut v = vec![rat_int(0); scp.l_dim()];
                v[i] = rat_int(1);
                scp.pi_times_nu(&rep, &v).unwrap()
            })
            .collect();
        let rebuilt = scp
            .covariant_from_representation(&rho, rep.space_dim)
            .unwrap();
        assert_eq!(rebuilt.pi, rep.pi);
        assert_eq!(rebuilt.nu, rep.nu);
        assert!(validate_covariant(&rebuilt, scp.action()).passed());
    }

    #[test]
    fn contractivity_spot_check_runs() {
        let p = fixtures::p1();
        let scp = SgCrossedProduct::build(fixtures::p1_sg_action()).unwrap();
        let rep = natural_covariant_rep(&p, scp.action()).unwrap();
        let out = contractivity_spot_check(&scp, &rep, 0, 25, 200, 1e-9).unwrap();
        assert!(out.pass, "max excess {}", out.max_excess);
    }

    #[test]
    fn local_unit_of_function_ideal() {
        let a = StructureAlgebra::function_algebra(3);
        let e = coordinate_subspace(3, &[0, 2]).unwrap();
        let u = local_unit(&a, &e).unwrap();
        assert_eq!(u, vec![rat_int(1), rat_int(0), rat_int(1)]);
    }
}
