use std::collections::HashMap;

use num_traits::Zero;

use super::{in_row_span, reduce_system, Arrangement};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::rational::Q;
use crate::Exec;

/// Index of a flat inside its [`FlatLattice`].
pub type FlatId = usize;

/// A nonempty intersection of hyperplanes.
///
/// `support` is the full localization: every hyperplane containing the flat.
/// `key` is the reduced row echelon form of the augmented defining system,
/// which identifies the subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    id: FlatId,
    support: Vec<usize>,
    codim: usize,
    point: Vec<Q>,
    directions: Vec<Vec<Q>>,
    key: Vec<Vec<Q>>,
}

impl Flat {
    pub fn id(&self) -> FlatId {
        self.id
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// A rational point on the flat.
    pub fn point(&self) -> &[Q] {
        &self.point
    }

    /// A basis of the direction space.
    pub fn directions(&self) -> &[Vec<Q>] {
        &self.directions
    }

    pub fn key(&self) -> &[Vec<Q>] {
        &self.key
    }

    pub fn contains_hyperplane(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }
}

/// The intersection poset, ordered by reverse inclusion of subspaces
/// (equivalently inclusion of supports).
///
/// Flats are sorted by codimension, then support; id 0 is the ambient space.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    dimension: usize,
    n: usize,
    flats: Vec<Flat>,
    by_key: HashMap<Vec<Vec<Q>>, FlatId>,
    rank: usize,
}

struct RawFlat {
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl FlatLattice {
    pub fn build(arrangement: &Arrangement) -> Self {
        Self::build_with(arrangement, Exec::default())
    }

    /// Incremental construction: after processing hyperplane `h`, the list
    /// holds every nonempty intersection of hyperplanes `1..=h`.
    pub fn build_with(arrangement: &Arrangement, exec: Exec) -> Self {
        let dim = arrangement.dimension();
        let mut raws = vec![RawFlat {
            rows: Vec::new(),
            pivots: Vec::new(),
        }];
        let mut seen: HashMap<Vec<Vec<Q>>, usize> = HashMap::new();
        seen.insert(Vec::new(), 0);
        for h in arrangement.hyperplanes() {
            let row = h.augmented_row();
            let candidates = exec.map(&raws, |raw| {
                if in_row_span(&raw.rows, &raw.pivots, &row) {
                    return None;
                }
                let mut rows = raw.rows.clone();
                rows.push(row.clone());
                reduce_system(rows, dim)
            });
            for (rows, pivots) in candidates.into_iter().flatten() {
                if !seen.contains_key(&rows) {
                    seen.insert(rows.clone(), raws.len());
                    raws.push(RawFlat { rows, pivots });
                }
            }
        }

        let hyperplane_rows: Vec<Vec<Q>> = arrangement
            .hyperplanes()
            .iter()
            .map(|h| h.augmented_row())
            .collect();
        let mut flats: Vec<Flat> = exec.map(&raws, |raw| {
            let support = hyperplane_rows
                .iter()
                .enumerate()
                .filter(|(_, row)| in_row_span(&raw.rows, &raw.pivots, row))
                .map(|(i, _)| i + 1)
                .collect();
            let (point, directions) = witness(raw, dim);
            Flat {
                id: 0,
                support,
                codim: raw.pivots.len(),
                point,
                directions,
                key: raw.rows.clone(),
            }
        });
        flats.sort_by(|a, b| (a.codim, &a.support).cmp(&(b.codim, &b.support)));
        let mut by_key = HashMap::with_capacity(flats.len());
        for (id, flat) in flats.iter_mut().enumerate() {
            flat.id = id;
            by_key.insert(flat.key.clone(), id);
        }
        let rank = flats.iter().map(|f| f.codim).max().unwrap_or(0);
        FlatLattice {
            dimension: dim,
            n: arrangement.len(),
            flats,
            by_key,
            rank,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of hyperplanes of the underlying arrangement.
    pub fn num_hyperplanes(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn ambient(&self) -> FlatId {
        0
    }

    pub fn flat(&self, id: FlatId) -> Result<&Flat> {
        self.flats.get(id).ok_or(Error::UnknownFlat(id))
    }

    /// Localization `A_X` as an ordered index list.
    pub fn localization(&self, id: FlatId) -> Result<Vec<usize>> {
        Ok(self.flat(id)?.support.clone())
    }

    /// `Y <= X` in the intersection poset (`X` is contained in `Y`).
    pub fn leq(&self, y: FlatId, x: FlatId) -> bool {
        is_subset(&self.flats[y].support, &self.flats[x].support)
    }

    pub fn lt(&self, y: FlatId, x: FlatId) -> bool {
        y != x && self.leq(y, x)
    }

    /// The flat `H_I` cut out by `indices`, or `None` when the intersection
    /// is empty. This is the smallest-codimension flat whose support
    /// contains `indices`.
    pub fn closure(&self, indices: &[usize]) -> Option<FlatId> {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.flats
            .iter()
            .find(|f| is_subset(&sorted, &f.support))
            .map(|f| f.id)
    }

    /// Codimension of `H_I`, or `None` if empty.
    pub fn rank_of(&self, indices: &[usize]) -> Option<usize> {
        self.closure(indices).map(|id| self.flats[id].codim)
    }

    /// Nonempty intersection with codimension equal to the size.
    pub fn is_independent(&self, indices: &[usize]) -> bool {
        self.rank_of(indices) == Some(indices.len())
    }

    /// Nonempty intersection with codimension below the size.
    pub fn is_dependent(&self, indices: &[usize]) -> bool {
        matches!(self.rank_of(indices), Some(c) if c < indices.len())
    }

    /// Independent set of size equal to the rank.
    pub fn is_base(&self, indices: &[usize]) -> bool {
        indices.len() == self.rank && self.is_independent(indices)
    }

    /// Flats with no strictly larger flat above them.
    pub fn maximal_flats(&self) -> Vec<FlatId> {
        (0..self.flats.len())
            .filter(|&x| !(0..self.flats.len()).any(|y| self.lt(x, y)))
            .collect()
    }

    pub fn flats_of_codim(&self, codim: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.codim == codim)
    }

    /// Looks a flat up by the canonical key of its subspace.
    pub fn find_by_key(&self, key: &[Vec<Q>]) -> Option<FlatId> {
        self.by_key.get(key).copied()
    }
}

pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn witness(raw: &RawFlat, dim: usize) -> (Vec<Q>, Vec<Vec<Q>>) {
    let mut point = vec![Q::zero(); dim];
    for (row, &p) in raw.rows.iter().zip(&raw.pivots) {
        point[p] = row[dim].clone();
    }
    let coeff_rows: Vec<Vec<Q>> = raw.rows.iter().map(|r| r[..dim].to_vec()).collect();
    let directions = if dim == 0 {
        Vec::new()
    } else {
        DenseMatrix::from_rows(dim, coeff_rows).nullspace()
    };
    (point, directions)
}
