//! Ordered affine hyperplane arrangements with exact rational forms.
//!
//! A hyperplane is the zero locus of `coeffs . x + constant`. The position of
//! a hyperplane in its arrangement (1-based) is its place in the linear order;
//! every combinatorial object downstream is expressed in these indices.

mod lattice;
mod projective;
mod triple;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Q};
use num_traits::Zero;

pub(crate) use lattice::is_subset;
pub use lattice::{Flat, FlatId, FlatLattice};
pub use projective::{ProjIndex, ProjectiveClosure};
pub use triple::Triple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    index: usize,
    coeffs: Vec<Q>,
    constant: Q,
    label: String,
}

impl Hyperplane {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Q {
        &self.constant
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Evaluates the defining form at `point`.
    pub fn eval(&self, point: &[Q]) -> Q {
        self.coeffs
            .iter()
            .zip(point)
            .fold(self.constant.clone(), |acc, (a, x)| acc + a * x)
    }

    /// Row `[coeffs | -constant]` of the linear system `coeffs . x = -constant`.
    pub(crate) fn augmented_row(&self) -> Vec<Q> {
        let mut row = self.coeffs.clone();
        row.push(-self.constant.clone());
        row
    }

    /// The defining form (coefficients then constant) scaled so that its
    /// first nonzero coefficient is one. Equal keys mean equal hyperplanes.
    pub fn projective_key(&self) -> Vec<Q> {
        let mut form = self.coeffs.clone();
        form.push(self.constant.clone());
        normalize_leading(form)
    }

    /// The coefficient vector up to scaling. Equal keys mean parallel.
    pub fn direction_key(&self) -> Vec<Q> {
        normalize_leading(self.coeffs.clone())
    }

    pub fn is_parallel_to(&self, other: &Hyperplane) -> bool {
        self.direction_key() == other.direction_key()
    }
}

fn normalize_leading(mut v: Vec<Q>) -> Vec<Q> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
    }
    v
}

/// Input description of one hyperplane before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneSpec {
    pub label: String,
    pub coeffs: Vec<Q>,
    pub constant: Q,
}

impl HyperplaneSpec {
    pub fn new(label: impl Into<String>, coeffs: Vec<Q>, constant: Q) -> Self {
        HyperplaneSpec {
            label: label.into(),
            coeffs,
            constant,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dimension: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Validated constructor: positive dimension, at least one hyperplane.
    pub fn new(dimension: usize, specs: Vec<HyperplaneSpec>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        if specs.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        Self::build(dimension, specs)
    }

    /// Like [`Arrangement::new`] but admits the empty arrangement and
    /// dimension zero, which arise as restrictions.
    pub fn new_possibly_empty(dimension: usize, specs: Vec<HyperplaneSpec>) -> Result<Self> {
        Self::build(dimension, specs)
    }

    fn build(dimension: usize, specs: Vec<HyperplaneSpec>) -> Result<Self> {
        let mut hyperplanes: Vec<Hyperplane> = Vec::with_capacity(specs.len());
        let mut seen: std::collections::HashMap<Vec<Q>, usize> = Default::default();
        for (pos, spec) in specs.into_iter().enumerate() {
            if spec.coeffs.len() != dimension {
                return Err(Error::DimensionMismatch {
                    label: spec.label,
                    expected: dimension,
                    found: spec.coeffs.len(),
                });
            }
            if spec.coeffs.iter().all(Zero::is_zero) {
                return Err(Error::ZeroCoefficients { label: spec.label });
            }
            let h = Hyperplane {
                index: pos + 1,
                coeffs: spec.coeffs,
                constant: spec.constant,
                label: spec.label,
            };
            if let Some(&first) = seen.get(&h.projective_key()) {
                return Err(Error::DuplicateHyperplane {
                    first,
                    second: pos + 1,
                });
            }
            seen.insert(h.projective_key(), pos + 1);
            hyperplanes.push(h);
        }
        Ok(Arrangement {
            dimension,
            hyperplanes,
        })
    }

    /// Convenience constructor from integer forms `(coeffs, constant)`,
    /// labelled `H1, H2, ...`.
    pub fn from_integer_forms(dimension: usize, forms: &[(&[i64], i64)]) -> Result<Self> {
        let specs = forms
            .iter()
            .enumerate()
            .map(|(i, (c, k))| {
                HyperplaneSpec::new(
                    format!("H{}", i + 1),
                    c.iter().map(|&x| crate::rational::q(x)).collect(),
                    crate::rational::q(*k),
                )
            })
            .collect();
        Arrangement::new(dimension, specs)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Hyperplane by 1-based index.
    pub fn hyperplane(&self, index: usize) -> Result<&Hyperplane> {
        index
            .checked_sub(1)
            .and_then(|i| self.hyperplanes.get(i))
            .ok_or(Error::IndexOutOfRange(index))
    }

    pub fn specs(&self) -> Vec<HyperplaneSpec> {
        self.hyperplanes
            .iter()
            .map(|h| HyperplaneSpec::new(h.label.clone(), h.coeffs.clone(), h.constant.clone()))
            .collect()
    }

    /// Same hyperplanes in a new linear order: position `j` of the result
    /// holds hyperplane `order[j]` of `self` (1-based).
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        check_permutation(order, self.len())?;
        let specs = self.specs();
        let reordered = order.iter().map(|&i| specs[i - 1].clone()).collect();
        Self::build(self.dimension, reordered)
    }

    /// Sub-arrangement on the given indices, in increasing index order.
    /// Returns the arrangement and the map from its indices to ours.
    pub fn subarrangement(&self, indices: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        for &i in &idx {
            self.hyperplane(i)?;
        }
        let specs = self.specs();
        let sub = idx.iter().map(|&i| specs[i - 1].clone()).collect();
        Ok((Self::build(self.dimension, sub)?, idx))
    }

    pub fn lattice(&self) -> FlatLattice {
        FlatLattice::build(self)
    }

    pub fn lattice_with(&self, exec: crate::Exec) -> FlatLattice {
        FlatLattice::build_with(self, exec)
    }

    pub fn to_file(&self) -> ArrangementFile {
        ArrangementFile {
            dimension: self.dimension,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| HyperplaneEntry {
                    label: Some(h.label.clone()),
                    coeffs: h.coeffs.iter().map(format_rational).collect(),
                    constant: format_rational(&h.constant),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("arrangement serializes")
    }
}

pub(crate) fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "expected {n} entries, found {}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i == 0 || i > n || seen[i - 1] {
            return Err(Error::InvalidPermutation(format!(
                "{order:?} is not a permutation of 1..={n}"
            )));
        }
        seen[i - 1] = true;
    }
    Ok(())
}

/// On-disk form of an arrangement. Rationals are strings `"p"` or `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub dimension: usize,
    pub hyperplanes: Vec<HyperplaneEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub coeffs: Vec<String>,
    pub constant: String,
}

/// Parses the JSON arrangement format; list order is the linear order.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let file: ArrangementFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidFile(e.to_string()))?;
    let specs = file
        .hyperplanes
        .into_iter()
        .enumerate()
        .map(|(i, entry)| {
            let coeffs = entry
                .coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>>>()?;
            let constant = parse_rational(&entry.constant)?;
            Ok(HyperplaneSpec::new(
                entry.label.unwrap_or_else(|| format!("H{}", i + 1)),
                coeffs,
                constant,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(file.dimension, specs)
}

/// Rank of the arrangement: the largest codimension of a nonempty intersection.
pub fn rank(arrangement: &Arrangement) -> usize {
    arrangement.lattice().rank()
}

/// True iff deleting hyperplane `index` lowers the rank.
pub fn is_separator(arrangement: &Arrangement, index: usize) -> Result<bool> {
    arrangement.hyperplane(index)?;
    let full = rank(arrangement);
    let rest: Vec<usize> = (1..=arrangement.len()).filter(|&i| i != index).collect();
    if rest.is_empty() {
        return Ok(full > 0);
    }
    let (deleted, _) = arrangement.subarrangement(&rest)?;
    Ok(rank(&deleted) < full)
}

/// Solves the affine system given by augmented rows `[a | b]` meaning
/// `a . x = b`. Returns the reduced echelon rows and pivots, or `None` if the
/// system is inconsistent.
pub(crate) fn reduce_system(
    rows: Vec<Vec<Q>>,
    dimension: usize,
) -> Option<(Vec<Vec<Q>>, Vec<usize>)> {
    let m = crate::linalg::DenseMatrix::from_rows(dimension + 1, rows);
    let rref = m.rref();
    if rref.pivots.last() == Some(&dimension) {
        return None;
    }
    let rows = (0..rref.rank())
        .map(|i| rref.matrix.row(i).to_vec())
        .collect();
    Some((rows, rref.pivots))
}

/// True iff `row` lies in the span of reduced echelon `rows` with `pivots`.
pub(crate) fn in_row_span(rows: &[Vec<Q>], pivots: &[usize], row: &[Q]) -> bool {
    let mut r = row.to_vec();
    for (prow, &p) in rows.iter().zip(pivots) {
        let factor = r[p].clone();
        if factor.is_zero() {
            continue;
        }
        for (x, y) in r.iter_mut().zip(prow) {
            *x -= &factor * y;
        }
    }
    r.iter().all(Zero::is_zero)
}
