use std::collections::{BTreeSet, HashMap};

use num_traits::One;
use serde::Serialize;

use crate::linalg::{DenseMatrix, SparseMatrix};
use crate::rational::Q;
use crate::Exec;

/// A finite simplicial complex on vertices `0..vertex_count`, stored per
/// dimension. Each simplex is an ascending list of vertex positions; the
/// position order fixes orientations. `labels` carries the external name of
/// each vertex (a hyperplane index or a flat id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
}

/// Cochains of one degree with the coboundary into the next.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    pub degree: isize,
    pub basis: Vec<Vec<usize>>,
    /// Rows index the simplices of degree `degree + 1`.
    pub coboundary: SparseMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedCohomology {
    pub degree: isize,
    pub dimension: usize,
    /// Cocycles whose classes form a basis, as coefficient vectors over the
    /// simplices of this degree.
    #[serde(skip)]
    pub representatives: Vec<Vec<Q>>,
}

impl SimplicialComplex {
    /// Complex generated by `facets` (given as vertex positions, any order);
    /// all faces are added.
    pub fn from_facets(labels: Vec<usize>, facets: &[Vec<usize>]) -> Self {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                all.insert(face);
            }
        }
        Self::from_closed_faces(labels, all)
    }

    /// Complex from a family already closed under taking faces.
    pub fn from_closed_faces(
        labels: Vec<usize>,
        faces: impl IntoIterator<Item = Vec<usize>>,
    ) -> Self {
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in faces {
            if f.is_empty() {
                continue;
            }
            let d = f.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(f);
        }
        for level in by_dim.iter_mut() {
            level.sort();
            level.dedup();
        }
        let lookup = by_dim
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (f.clone(), i))
                    .collect()
            })
            .collect();
        SimplicialComplex {
            labels,
            faces: by_dim,
            lookup,
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.faces.first().map_or(0, Vec::len)
    }

    /// Top dimension, `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Simplices of dimension `d` (with `d + 1` vertices). The empty simplex
    /// is the single face of dimension `-1`.
    pub fn faces(&self, d: isize) -> Vec<Vec<usize>> {
        match d {
            -1 => vec![Vec::new()],
            d if d < -1 => Vec::new(),
            d => self.faces.get(d as usize).cloned().unwrap_or_default(),
        }
    }

    pub fn face_count(&self, d: isize) -> usize {
        match d {
            -1 => 1,
            d if d < -1 => 0,
            d => self.faces.get(d as usize).map_or(0, Vec::len),
        }
    }

    pub fn face_index(&self, face: &[usize]) -> Option<usize> {
        if face.is_empty() {
            return Some(0);
        }
        self.lookup.get(face.len() - 1)?.get(face).copied()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.face_index(face).is_some()
    }

    /// Maximal simplices, ascending by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (d, level) in self.faces.iter().enumerate() {
            let above = self.faces.get(d + 1);
            for f in level {
                let covered =
                    above.is_some_and(|up| up.iter().any(|g| crate::arrangement::is_subset(f, g)));
                if !covered {
                    out.push(f.clone());
                }
            }
        }
        out
    }

    pub fn is_pure(&self) -> bool {
        let top = self.faces.len();
        self.facets().iter().all(|f| f.len() == top)
    }

    /// Coboundary `delta_q : C^q -> C^(q+1)` of the augmented cochain
    /// complex, `(delta f)(v0..v(q+1)) = sum_i (-1)^i f(... no v_i ...)`.
    pub fn coboundary(&self, q: isize) -> SparseMatrix {
        let rows = self.faces(q + 1);
        let cols = self.face_count(q);
        let mut triplets = Vec::new();
        for (r, sigma) in rows.iter().enumerate() {
            for i in 0..sigma.len() {
                let mut face = sigma.clone();
                face.remove(i);
                let c = self
                    .face_index(&face)
                    .expect("complex is closed under faces");
                let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
                triplets.push((r, c, sign));
            }
        }
        SparseMatrix::from_triplets(rows.len(), cols, triplets)
    }

    pub fn cochain_space(&self, q: isize) -> CochainSpace {
        CochainSpace {
            degree: q,
            basis: self.faces(q),
            coboundary: self.coboundary(q),
        }
    }

    /// Reduced cohomology in degree `q` over the rationals.
    pub fn reduced_cohomology(&self, q: isize) -> ReducedCohomology {
        if q < -1 {
            return ReducedCohomology {
                degree: q,
                dimension: 0,
                representatives: Vec::new(),
            };
        }
        let delta_q = self.coboundary(q).to_dense();
        let delta_prev = self.coboundary(q - 1).to_dense();
        let image_rank = delta_prev.rank();
        let mut kept = delta_prev.clone();
        let mut reps = Vec::new();
        for z in delta_q.nullspace() {
            let candidate = kept.hstack(&DenseMatrix::from_columns(z.len(), std::slice::from_ref(&z)));
            if candidate.rank() > image_rank + reps.len() {
                kept = candidate;
                reps.push(z);
            }
        }
        ReducedCohomology {
            degree: q,
            dimension: reps.len(),
            representatives: reps,
        }
    }

    /// `dim C^q - rank delta_q - rank delta_(q-1)` using sparse ranks only.
    pub fn reduced_betti(&self, q: isize) -> usize {
        if q < -1 {
            return 0;
        }
        self.face_count(q) - self.coboundary(q).rank() - self.coboundary(q - 1).rank()
    }

    /// Reduced Betti numbers for degrees `-1..=max(dimension, 0)`.
    pub fn reduced_betti_numbers(&self, exec: Exec) -> Vec<usize> {
        let top = self.dimension().max(0);
        let degrees: Vec<isize> = (-1..=top).collect();
        exec.map(&degrees, |&q| self.reduced_betti(q))
    }
}
