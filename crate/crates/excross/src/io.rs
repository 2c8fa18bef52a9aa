//! JSON document formats: groups, set-level and algebra-level actions, and
//! exports (S(G) tables, matrices as exact `p/q` strings).
//!
//! Documents are versioned by a `schema` field. Parsing goes through serde,
//! so syntax errors carry line/column positions; semantic validation happens
//! when the documents are turned into the typed structures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{ActionError, AlgebraPartialAction, SetPartialAction};
use crate::group::{GroupError, GroupTable, PartialBijection};
use crate::linalg::{rat_from_string, rat_to_string, LinalgError, Matrix, Rat, StructureAlgebra};
use crate::semigroup::SgTable;

pub const GROUP_SCHEMA: &str = "excross-group/1";
pub const ACTION_SET_SCHEMA: &str = "excross-action-set/1";
pub const ACTION_ALGEBRA_SCHEMA: &str = "excross-action-algebra/1";
pub const SG_TABLE_SCHEMA: &str = "excross-sg-table/1";
pub const REPORT_SCHEMA: &str = "excross-report/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: {message}")]
    Semantic { path: String, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cannot read {path}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A finite group as a named Cayley table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn to_group(&self) -> Result<GroupTable, GroupError> {
        GroupTable::load(self.names.clone(), self.table.clone())
    }

    pub fn from_group(g: &GroupTable) -> GroupDoc {
        GroupDoc {
            schema: Some(GROUP_SCHEMA.to_string()),
            names: g.names().to_vec(),
            table: g.table().to_vec(),
        }
    }
}

/// A group reference inside an action document: a preset string or an inline
/// Cayley table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GroupRef {
    Preset(String),
    Inline(GroupDoc),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<GroupTable, GroupError> {
        match self {
            GroupRef::Preset(s) => GroupTable::preset(s),
            GroupRef::Inline(doc) => doc.to_group(),
        }
    }
}

/// Set-level action document: θ_g as (source, target) pairs, keyed by element
/// name; θ_e is implied and omitted elements act nowhere.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SetActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRef>,
    pub set_size: usize,
    pub maps: BTreeMap<String, Vec<(usize, usize)>>,
}

impl SetActionDoc {
    pub fn build(&self, group_override: Option<GroupTable>) -> Result<SetPartialAction, IoError> {
        let group = match (&self.group, group_override) {
            (Some(r), None) => r.resolve()?,
            (None, Some(g)) => g,
            (Some(r), Some(g)) => {
                let doc_group = r.resolve()?;
                if doc_group != g {
                    return Err(IoError::Semantic {
                        path: "action document".into(),
                        message: "the document's group differs from --group".into(),
                    });
                }
                doc_group
            }
            (None, None) => {
                return Err(IoError::Semantic {
                    path: "action document".into(),
                    message: "no group given (document has none and --group is absent)".into(),
                })
            }
        };
        let mut maps = Vec::new();
        for (name, pairs) in &self.maps {
            let g = group.index_of(name).ok_or_else(|| IoError::Semantic {
                path: "action document".into(),
                message: format!("unknown group element {name:?} in maps"),
            })?;
            maps.push((
                g,
                PartialBijection::from_pairs(self.set_size, pairs.iter().copied())?,
            ));
        }
        Ok(SetPartialAction::new(group, self.set_size, maps)?)
    }

    pub fn from_action(action: &SetPartialAction) -> SetActionDoc {
        let group = action.group();
        let mut maps = BTreeMap::new();
        for g in group.elements() {
            if g == group.identity() {
                continue;
            }
            let pairs = action.theta(g).pairs();
            if !pairs.is_empty() {
                maps.insert(group.name(g).to_string(), pairs);
            }
        }
        SetActionDoc {
            schema: Some(ACTION_SET_SCHEMA.to_string()),
            group: Some(GroupRef::Inline(GroupDoc::from_group(group))),
            set_size: action.base_size(),
            maps,
        }
    }
}

/// A structure-constant algebra with exact rational entries as `p/q` strings.
/// Products omit zero entries.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDoc {
    pub labels: Vec<String>,
    pub products: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    pub value: Vec<String>,
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<StructureAlgebra, IoError> {
        let mut products = Vec::new();
        for e in &self.products {
            products.push(((e.left, e.right), strings_to_vec(&e.value)?));
        }
        let involution = match &self.involution {
            Some(rows) => Some(strings_to_matrix(rows)?),
            None => None,
        };
        let unit = match &self.unit {
            Some(u) => Some(strings_to_vec(u)?),
            None => None,
        };
        Ok(StructureAlgebra::new(
            self.labels.clone(),
            products,
            involution,
            unit,
        )?)
    }

    pub fn from_algebra(a: &StructureAlgebra) -> AlgebraDoc {
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let v = a.mult_basis_dense(i, j);
                if v.iter().any(|x| !num::Zero::is_zero(x)) {
                    products.push(ProductEntry {
                        left: i,
                        right: j,
                        value: vec_to_strings(&v),
                    });
                }
            }
        }
        AlgebraDoc {
            labels: a.labels().to_vec(),
            products,
            involution: a.involution().map(matrix_to_strings),
            unit: a.unit().map(vec_to_strings),
        }
    }
}

/// Algebra-level action document. `ideals` lists a basis (rows of `p/q`
/// strings) per element name; `alpha` gives, per element g, one row per basis
/// vector of D_{g⁻¹} holding the coordinates of its image in the listed basis
/// of D_g. The identity may be omitted (full ideal, identity map); other
/// omitted elements get the zero ideal.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRef>,
    pub algebra: AlgebraDoc,
    pub ideals: BTreeMap<String, Vec<Vec<String>>>,
    pub alpha: BTreeMap<String, Vec<Vec<String>>>,
}

impl AlgebraActionDoc {
    pub fn build(
        &self,
        group_override: Option<GroupTable>,
    ) -> Result<AlgebraPartialAction, IoError> {
        let group = match (&self.group, group_override) {
            (Some(r), _) => r.resolve()?,
            (None, Some(g)) => g,
            (None, None) => {
                return Err(IoError::Semantic {
                    path: "action document".into(),
                    message: "no group given".into(),
                })
            }
        };
        let algebra = self.algebra.to_algebra()?;
        let dim = algebra.dim();
        let lookup = |name: &str| {
            group.index_of(name).ok_or_else(|| IoError::Semantic {
                path: "action document".into(),
                message: format!("unknown group element {name:?}"),
            })
        };
        // User-supplied bases, before canonicalization.
        let mut raw_bases: Vec<Option<Matrix>> = vec![None; group.order()];
        for (name, rows) in &self.ideals {
            raw_bases[lookup(name)?] = Some(strings_to_matrix(rows)?);
        }
        let mut raw_alpha: Vec<Option<Matrix>> = vec![None; group.order()];
        for (name, rows) in &self.alpha {
            raw_alpha[lookup(name)?] = Some(strings_to_matrix(rows)?);
        }
        if raw_bases[0].is_none() {
            raw_bases[0] = Some(Matrix::identity(dim));
        }
        if raw_alpha[0].is_none() {
            raw_alpha[0] = Some(Matrix::identity(dim));
        }

        let mut ideals = Vec::with_capacity(group.order());
        for g in group.elements() {
            let space = match &raw_bases[g] {
                Some(m) => crate::linalg::Subspace::from_vectors(
                    dim,
                    m.iter_rows().map(<[Rat]>::to_vec).collect::<Vec<_>>(),
                )?,
                None => crate::linalg::Subspace::zero(dim),
            };
            ideals.push(space);
        }
        // Ambient matrix of α_g from its action on the user-listed basis of
        // D_{g⁻¹}: M·v = images·coords(v), with coords computed through the
        // Gram matrix of the listed basis.
        let mut maps = Vec::with_capacity(group.order());
        for g in group.elements() {
            let gi = group.inv(g);
            let (dom_raw, img_raw) = (&raw_bases[gi], &raw_bases[g]);
            let coeffs = &raw_alpha[g];
            let m = match (dom_raw, img_raw, coeffs) {
                (Some(dom), Some(img), Some(c)) => {
                    if c.rows() != dom.rows() || c.cols() != img.rows() {
                        return Err(IoError::Semantic {
                            path: "action document".into(),
                            message: format!(
                                "alpha_{} must be {}x{} in the listed bases, got {}x{}",
                                group.name(g),
                                dom.rows(),
                                img.rows(),
                                c.rows(),
                                c.cols()
                            ),
                        });
                    }
                    // images of the dom basis vectors, as rows
                    let images = c.mul(img)?;
                    let gram = dom.mul(&dom.transpose())?;
                    let coord_map = gram.inverse().map_err(|_| IoError::Semantic {
                        path: "action document".into(),
                        message: format!(
                            "ideal basis for {} is linearly dependent",
                            group.name(gi)
                        ),
                    })?;
                    images.transpose().mul(&coord_map.mul(dom)?)?
                }
                (None, _, None) | (None, None, _) => Matrix::zeros(dim, dim),
                _ => {
                    return Err(IoError::Semantic {
                        path: "action document".into(),
                        message: format!(
                            "alpha_{} and the ideals for it must be given together",
                            group.name(g)
                        ),
                    })
                }
            };
            maps.push(m);
        }
        Ok(AlgebraPartialAction::new(group, algebra, ideals, maps)?)
    }
}

/// Any action document; discriminated by content.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ActionDoc {
    Set(SetActionDoc),
    Algebra(AlgebraActionDoc),
}

pub fn parse_group_doc(path: &str, text: &str) -> Result<GroupDoc, IoError> {
    serde_json::from_str(text).map_err(|source| IoError::Json {
        path: path.into(),
        source,
    })
}

pub fn parse_action_doc(path: &str, text: &str) -> Result<ActionDoc, IoError> {
    serde_json::from_str(text).map_err(|source| IoError::Json {
        path: path.into(),
        source,
    })
}

/// Resolves a group spec: preset name, or path of a JSON group document.
pub fn resolve_group_spec(spec: &str) -> Result<GroupTable, IoError> {
    match GroupTable::preset(spec) {
        Ok(g) => Ok(g),
        Err(GroupError::UnknownPreset(_)) => {
            let text = std::fs::read_to_string(spec).map_err(|_| IoError::Semantic {
                path: spec.into(),
                message: "not a group preset (trivial, cyclic N, klein4, sym3) and not a \
                          readable group document"
                    .into(),
            })?;
            Ok(parse_group_doc(spec, &text)?.to_group()?)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn vec_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

pub fn strings_to_vec(v: &[String]) -> Result<Vec<Rat>, LinalgError> {
    v.iter().map(|s| rat_from_string(s)).collect()
}

pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.iter_rows().map(vec_to_strings).collect()
}

pub fn strings_to_matrix(rows: &[Vec<String>]) -> Result<Matrix, LinalgError> {
    let rows: Result<Vec<Vec<Rat>>, _> = rows.iter().map(|r| strings_to_vec(r)).collect();
    Matrix::from_rows(rows?)
}

/// Export of the full multiplication table of S(G).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SgTableDoc {
    pub schema: String,
    pub group: GroupDoc,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl SgTableDoc {
    pub fn from_table(group: &GroupTable, t: &SgTable) -> SgTableDoc {
        SgTableDoc {
            schema: SG_TABLE_SCHEMA.to_string(),
            group: GroupDoc::from_group(group),
            elements: t.elements.iter().map(|e| e.render(group)).collect(),
            table: t.table.clone(),
        }
    }
}
