//! Finite groups as validated Cayley tables, and partial bijections of
//! finite sets.
//!
//! A [`GroupTable`] is checked exhaustively at load time: Latin-square
//! property, associativity on all triples, identity and unique inverses.
//! After normalization the identity is always element 0.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("bad labels: {0}")]
    BadLabels(String),
    #[error("not a Latin square: {line} {index} repeats element {value}")]
    NonLatinSquare {
        line: String,
        index: usize,
        value: usize,
    },
    #[error("not associative at ({g},{h},{k}): ({g}·{h})·{k} != {g}·({h}·{k})")]
    NonAssociative { g: usize, h: usize, k: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {g} has no two-sided inverse")]
    NoInverse { g: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("table is not square or empty: row {row} has length {got}, expected {expected}")]
    BadShape {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("unknown group preset {0:?}")]
    UnknownPreset(String),
    #[error("group order {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("base size mismatch: {left} vs {right}")]
    BaseSizeMismatch { left: usize, right: usize },
}

/// Largest Cayley table we materialize.
pub const MAX_GROUP_ORDER: usize = 12;

/// A finite group with named elements; element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates a raw Cayley table and normalizes the identity to index 0.
    pub fn load(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = names.len();
        if order == 0 {
            return Err(GroupError::BadLabels("empty group".into()));
        }
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderTooLarge {
                order,
                bound: MAX_GROUP_ORDER,
            });
        }
        {
            let mut seen = HashSet::new();
            for n in &names {
                if n.is_empty() || n.chars().any(char::is_control) {
                    return Err(GroupError::BadLabels(format!(
                        "label {n:?} is not printable"
                    )));
                }
                if !seen.insert(n) {
                    return Err(GroupError::BadLabels(format!("duplicate label {n:?}")));
                }
            }
        }
        if table.len() != order {
            return Err(GroupError::BadShape {
                row: 0,
                got: table.len(),
                expected: order,
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::BadShape {
                    row: i,
                    got: row.len(),
                    expected: order,
                });
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::IndexOutOfRange { index: v, order });
                }
            }
        }
        // Latin square: every row and column is a permutation.
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; order];
            for &v in row {
                if seen[v] {
                    return Err(GroupError::NonLatinSquare {
                        line: "row".into(),
                        index: i,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        for c in 0..order {
            let mut seen = vec![false; order];
            for row in &table {
                let v = row[c];
                if seen[v] {
                    return Err(GroupError::NonLatinSquare {
                        line: "column".into(),
                        index: c,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        for g in 0..order {
            for h in 0..order {
                for k in 0..order {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return Err(GroupError::NonAssociative { g, h, k });
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;

        // Normalize: put the identity at index 0 by swapping labels.
        let (names, table) = if identity == 0 {
            (names, table)
        } else {
            let perm = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut new_names = names.clone();
            new_names.swap(0, identity);
            let mut new_table = vec![vec![0; order]; order];
            for g in 0..order {
                for h in 0..order {
                    new_table[g][h] = perm(table[perm(g)][perm(h)]);
                }
            }
            (new_names, new_table)
        };

        let mut inverse = vec![0; order];
        for g in 0..order {
            let h = (0..order)
                .find(|&h| table[g][h] == 0 && table[h][g] == 0)
                .ok_or(GroupError::NoInverse { g })?;
            inverse[g] = h;
        }
        Ok(GroupTable {
            names,
            table,
            inverse,
        })
    }

    /// Loads a preset: `trivial`, `cyclic N`, `klein4` or `sym3`.
    pub fn preset(spec: &str) -> Result<Self, GroupError> {
        let spec = spec.trim();
        let lower = spec.to_ascii_lowercase();
        if lower == "trivial" {
            return Self::cyclic(1);
        }
        if lower == "klein4" {
            return Self::klein4();
        }
        if lower == "sym3" {
            return Self::sym3();
        }
        if let Some(rest) = lower.strip_prefix("cyclic") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| GroupError::UnknownPreset(spec.to_string()))?;
            return Self::cyclic(n);
        }
        Err(GroupError::UnknownPreset(spec.to_string()))
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadLabels(
                "cyclic group order must be positive".into(),
            ));
        }
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|g| (0..n).map(|h| (g + h) % n).collect())
            .collect();
        Self::load(names, table)
    }

    pub fn klein4() -> Result<Self, GroupError> {
        let names = vec!["e".into(), "a".into(), "b".into(), "c".into()];
        let table = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        Self::load(names, table)
    }

    /// Symmetric group on three points with r = (0 1 2), s = (0 1).
    pub fn sym3() -> Result<Self, GroupError> {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2], // e
            [1, 2, 0], // r
            [2, 0, 1], // r2
            [1, 0, 2], // s
            [2, 1, 0], // rs : r applied after s
            [0, 2, 1], // r2s
        ];
        let names = vec![
            "e".into(),
            "r".into(),
            "r2".into(),
            "s".into(),
            "rs".into(),
            "r2s".into(),
        ];
        let compose =
            |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] { [p[q[0]], p[q[1]], p[q[2]]] };
        let table = (0..6)
            .map(|g| {
                (0..6)
                    .map(|h| {
                        let prod = compose(&perms[g], &perms[h]);
                        perms.iter().position(|p| *p == prod).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Self::load(names, table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// `g·h`, with range checking.
    pub fn multiply(&self, g: usize, h: usize) -> Result<usize, GroupError> {
        let order = self.order();
        if g >= order {
            return Err(GroupError::IndexOutOfRange { index: g, order });
        }
        if h >= order {
            return Err(GroupError::IndexOutOfRange { index: h, order });
        }
        Ok(self.table[g][h])
    }

    /// `g·h` for indices already known to be in range.
    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> Result<usize, GroupError> {
        if g >= self.order() {
            return Err(GroupError::IndexOutOfRange {
                index: g,
                order: self.order(),
            });
        }
        Ok(self.inverse[g])
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupTable(order {}, names {:?})",
            self.order(),
            self.names
        )
    }
}

/// A partial bijection of {0, …, base_size−1}: an injective map defined on a
/// subset. These form an inverse semigroup under composition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialBijection {
    base: usize,
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn empty(base: usize) -> Self {
        PartialBijection {
            base,
            map: vec![None; base],
        }
    }

    pub fn identity(base: usize) -> Self {
        PartialBijection {
            base,
            map: (0..base).map(Some).collect(),
        }
    }

    pub fn identity_on<I: IntoIterator<Item = usize>>(
        base: usize,
        set: I,
    ) -> Result<Self, GroupError> {
        Self::from_pairs(base, set.into_iter().map(|x| (x, x)))
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(
        base: usize,
        pairs: I,
    ) -> Result<Self, GroupError> {
        let mut map = vec![None; base];
        let mut targets = HashSet::new();
        for (s, t) in pairs {
            if s >= base {
                return Err(GroupError::IndexOutOfRange {
                    index: s,
                    order: base,
                });
            }
            if t >= base {
                return Err(GroupError::IndexOutOfRange {
                    index: t,
                    order: base,
                });
            }
            if map[s].is_some() {
                return Err(GroupError::BadLabels(format!("source {s} mapped twice")));
            }
            if !targets.insert(t) {
                return Err(GroupError::BadLabels(format!("target {t} hit twice")));
            }
            map[s] = Some(t);
        }
        Ok(PartialBijection { base, map })
    }

    pub fn base_size(&self) -> usize {
        self.base
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map.get(x).copied().flatten()
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.base).filter(|&x| self.map[x].is_some()).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.map.iter().flatten().copied().collect();
        img.sort_unstable();
        img
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(x, t)| t.map(|y| (x, y)))
            .collect()
    }

    /// `self ∘ other`: defined exactly where `other` maps into the domain of `self`.
    pub fn compose(&self, other: &PartialBijection) -> Result<PartialBijection, GroupError> {
        if self.base != other.base {
            return Err(GroupError::BaseSizeMismatch {
                left: self.base,
                right: other.base,
            });
        }
        let map = (0..self.base)
            .map(|x| other.apply(x).and_then(|y| self.apply(y)))
            .collect();
        Ok(PartialBijection {
            base: self.base,
            map,
        })
    }

    /// Relational converse; the unique inverse in the inverse semigroup I(X).
    pub fn converse(&self) -> PartialBijection {
        let mut map = vec![None; self.base];
        for (x, y) in self.pairs() {
            map[y] = Some(x);
        }
        PartialBijection {
            base: self.base,
            map,
        }
    }

    /// Restriction of the map to `dom ∩ domain(self)`.
    pub fn restrict<I: IntoIterator<Item = usize>>(&self, dom: I) -> PartialBijection {
        let keep: HashSet<usize> = dom.into_iter().collect();
        let mut map = vec![None; self.base];
        for (x, y) in self.pairs() {
            if keep.contains(&x) {
                map[x] = Some(y);
            }
        }
        PartialBijection {
            base: self.base,
            map,
        }
    }

    /// All partial bijections of a small base set (test support).
    pub fn enumerate_all(base: usize) -> Vec<PartialBijection> {
        let mut out = vec![PartialBijection::empty(base)];
        for x in 0..base {
            let mut next = Vec::new();
            for pb in &out {
                next.push(pb.clone());
                let used: HashSet<usize> = pb.map.iter().flatten().copied().collect();
                for t in 0..base {
                    if !used.contains(&t) {
                        let mut m = pb.clone();
                        m.map[x] = Some(t);
                        next.push(m);
                    }
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialBijection{:?}", self.pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_structure() {
        let g = GroupTable::preset("cyclic 2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.names(), &["e".to_string(), "a".to_string()]);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.multiply(1, 1).unwrap(), 0);
        assert_eq!(g.inverse(1).unwrap(), 1);
        assert_eq!(g.inverse(0).unwrap(), 0);
    }

    #[test]
    fn sym3_has_three_involutions() {
        let g = GroupTable::preset("sym3").unwrap();
        assert_eq!(g.order(), 6);
        let involutions = g.elements().filter(|&x| x != 0 && g.mul(x, x) == 0).count();
        assert_eq!(involutions, 3);
    }

    #[test]
    fn cyclic3_multiply_and_inverse() {
        let g = GroupTable::preset("cyclic 3").unwrap();
        assert_eq!(g.mul(1, 1), 2); // a·a = a²
        assert_eq!(g.inv(1), 2); // a⁻¹ = a²
        for x in g.elements() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
        }
    }

    #[test]
    fn rejects_non_latin_square() {
        let err = GroupTable::load(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]])
            .unwrap_err();
        assert_eq!(
            err,
            GroupError::NonLatinSquare {
                line: "row".into(),
                index: 1,
                value: 1
            }
        );
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // Order-5 Latin square that is a quasigroup but not a group.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let names = (0..5).map(|i| format!("g{i}")).collect();
        let err = GroupTable::load(names, table).unwrap_err();
        assert!(matches!(err, GroupError::NonAssociative { .. }));
    }

    #[test]
    fn normalizes_identity_to_zero() {
        // Z2 written with the identity at index 1.
        let g =
            GroupTable::load(vec!["a".into(), "e".into()], vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.name(0), "e");
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn compose_partial_bijections_examples() {
        let id01 = PartialBijection::identity_on(3, [0, 1]).unwrap();
        let id12 = PartialBijection::identity_on(3, [1, 2]).unwrap();
        assert_eq!(
            id01.compose(&id12).unwrap(),
            PartialBijection::identity_on(3, [1]).unwrap()
        );

        let f = PartialBijection::from_pairs(2, [(0, 1)]).unwrap();
        let g = PartialBijection::from_pairs(2, [(1, 0)]).unwrap();
        assert_eq!(
            f.compose(&g).unwrap(),
            PartialBijection::from_pairs(2, [(1, 1)]).unwrap()
        );

        let empty = PartialBijection::empty(2);
        assert_eq!(f.compose(&empty).unwrap(), empty);

        let widef = PartialBijection::identity(2);
        assert!(widef.compose(&PartialBijection::identity(3)).is_err());
    }

    #[test]
    fn converse_is_the_unique_semigroup_inverse() {
        // Exhaustive for base 3: f∘f*∘f = f, f*∘f∘f* = f*, and uniqueness.
        let all = PartialBijection::enumerate_all(3);
        assert_eq!(all.len(), 34);
        for f in &all {
            let star = f.converse();
            assert_eq!(f.compose(&star).unwrap().compose(f).unwrap(), *f);
            assert_eq!(star.compose(f).unwrap().compose(&star).unwrap(), star);
            let count = all
                .iter()
                .filter(|g| {
                    f.compose(g).unwrap().compose(f).unwrap() == *f
                        && g.compose(f).unwrap().compose(g).unwrap() == **g
                })
                .count();
            assert_eq!(count, 1, "inverse of {f:?} must be unique");
        }
    }

    #[test]
    fn compose_associative_sampled() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let base = 8;
        let random_pb = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut targets: Vec<usize> = (0..base).collect();
            targets.shuffle(rng);
            let mut pairs = Vec::new();
            for (s, &t) in targets.iter().enumerate() {
                if rng.gen_bool(0.5) {
                    pairs.push((s, t));
                }
            }
            PartialBijection::from_pairs(base, pairs).unwrap()
        };
        for _ in 0..500 {
            let (f, g, h) = (
                random_pb(&mut rng),
                random_pb(&mut rng),
                random_pb(&mut rng),
            );
            let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
            let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
