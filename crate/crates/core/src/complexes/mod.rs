//! The broken circuit complex `BC`, the Folkman complex `F` (chains in the
//! lattice minus the ambient space), the lexicographic shelling of `BC`, the
//! map `F -> BC` sending a flat to the smallest hyperplane containing it, and
//! flags of ordered bases.

mod simplicial;

use std::collections::HashMap;

use num_traits::One;
use serde::Serialize;

use crate::arrangement::{FlatId, FlatLattice};
use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, SparseMatrix};
use crate::matroid::{IndexSet, Matroid};
use crate::rational::Q;

pub use simplicial::{CochainSpace, ReducedCohomology, SimplicialComplex};

/// `BC`: vertex `i - 1` is hyperplane `i`; simplices are the nbc sets.
pub fn broken_circuit_complex(m: &Matroid) -> SimplicialComplex {
    let faces = m
        .nbc_complex()
        .into_iter()
        .flatten()
        .map(|s| s.iter().map(|i| i - 1).collect::<Vec<_>>());
    SimplicialComplex::from_closed_faces((1..=m.len()).collect(), faces)
}

/// The order complex of the lattice without its minimum.
///
/// Vertices are the flats other than the ambient space ordered by
/// decreasing codimension, then support, so every simplex lists its chain
/// `X_1 > X_2 > ...` from the smallest subspace up.
#[derive(Debug, Clone)]
pub struct FolkmanComplex {
    pub complex: SimplicialComplex,
    flats: Vec<FlatId>,
    position: HashMap<FlatId, usize>,
}

impl FolkmanComplex {
    pub fn new(lattice: &FlatLattice) -> Self {
        let mut flats: Vec<FlatId> = (0..lattice.len())
            .filter(|&x| x != lattice.ambient())
            .collect();
        flats.sort_by(|&a, &b| {
            let (fa, fb) = (&lattice.flats()[a], &lattice.flats()[b]);
            fb.codim()
                .cmp(&fa.codim())
                .then_with(|| fa.support().cmp(fb.support()))
        });
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..flats.len()).map(|p| vec![p]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("chains are nonempty");
            for next in last + 1..flats.len() {
                if lattice.lt(flats[next], flats[last]) {
                    let mut longer = chain.clone();
                    longer.push(next);
                    stack.push(longer);
                }
            }
            chains.push(chain);
        }
        let position = flats.iter().enumerate().map(|(p, &x)| (x, p)).collect();
        FolkmanComplex {
            complex: SimplicialComplex::from_closed_faces(flats.clone(), chains),
            flats,
            position,
        }
    }

    pub fn flat_at(&self, position: usize) -> FlatId {
        self.flats[position]
    }

    pub fn position_of(&self, flat: FlatId) -> Option<usize> {
        self.position.get(&flat).copied()
    }

    /// The simplex of a flag, as vertex positions.
    pub fn simplex_of(&self, flag: &Flag) -> Vec<usize> {
        flag.flats.iter().map(|x| self.position[x]).collect()
    }

    /// The chain of flats `X_1 > ... > X_k` of a simplex.
    pub fn flag_of_simplex(&self, simplex: &[usize]) -> Flag {
        Flag {
            flats: simplex.iter().map(|&p| self.flats[p]).collect(),
        }
    }
}

pub fn folkman_complex(m: &Matroid) -> FolkmanComplex {
    FolkmanComplex::new(m.lattice())
}

/// A strictly decreasing chain of flats `X_1 > ... > X_k`, none the ambient
/// space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Flag {
    pub flats: Vec<FlatId>,
}

/// `xi(B)`: `X_p` is the intersection of the hyperplanes `i_p, ..., i_r`.
pub fn flag_of_base(lattice: &FlatLattice, base: &[usize]) -> Result<Flag> {
    if !lattice.is_base(base) {
        return Err(Error::NotABase(base.to_vec()));
    }
    let flats = (0..base.len())
        .map(|p| lattice.closure(&base[p..]).expect("subsets of a base meet"))
        .collect();
    Ok(Flag { flats })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingReport {
    pub is_shelling: bool,
    pub homology_facets: Vec<IndexSet>,
    /// First facet at which the shelling condition fails.
    pub violation: Option<IndexSet>,
    pub matches_betanbc: bool,
}

/// Checks that the nbc bases in lexicographic order shell `BC`.
///
/// For a facet `s` after the first, let `R` be the vertices `v` such that
/// `s - v` lies in an earlier facet. The condition holds iff `R` is nonempty
/// and every earlier facet `t` misses some vertex of `R` (so `s ∩ t` sits in
/// a codimension-one face already present). `s` is a homology facet iff
/// `R = s`.
pub fn check_lex_shelling(m: &Matroid) -> ShellingReport {
    let facets = m.nbc_bases();
    let mut homology = Vec::new();
    let mut violation = None;
    for (k, sigma) in facets.iter().enumerate().skip(1) {
        let earlier = &facets[..k];
        let restriction: Vec<usize> = sigma
            .iter()
            .copied()
            .filter(|&v| {
                earlier
                    .iter()
                    .any(|t| sigma.iter().all(|x| *x == v || t.contains(x)))
            })
            .collect();
        let ok = !restriction.is_empty()
            && earlier
                .iter()
                .all(|t| restriction.iter().any(|v| !t.contains(v)));
        if !ok && violation.is_none() {
            violation = Some(sigma.clone());
        }
        if restriction.len() == sigma.len() {
            homology.push(sigma.clone());
        }
    }
    let matches_betanbc = homology == m.betanbc_direct();
    ShellingReport {
        is_shelling: violation.is_none(),
        homology_facets: homology,
        violation,
        matches_betanbc,
    }
}

/// The simplicial map `F -> BC`, `X -> min A_X`.
#[derive(Debug, Clone)]
pub struct PiMap {
    /// Hyperplane index for each vertex position of `F`.
    pub vertex_map: Vec<usize>,
}

impl PiMap {
    pub fn new(m: &Matroid, folkman: &FolkmanComplex) -> Self {
        let lattice = m.lattice();
        let vertex_map = (0..folkman.complex.vertex_count())
            .map(|p| lattice.flats()[folkman.flat_at(p)].support()[0])
            .collect();
        PiMap { vertex_map }
    }

    /// Image of an `F` simplex as a sorted `BC` simplex (vertex positions)
    /// with orientation sign, or `None` when two vertices collapse.
    pub fn image(&self, simplex: &[usize]) -> Option<(Vec<usize>, Q)> {
        let img: Vec<usize> = simplex.iter().map(|&p| self.vertex_map[p] - 1).collect();
        let (sorted, sign) = crate::osalgebra::sort_with_sign(&img)?;
        Some((sorted, if sign { -Q::one() } else { Q::one() }))
    }

    /// Every simplex of `F` maps onto a simplex of `BC`.
    pub fn is_simplicial(&self, folkman: &FolkmanComplex, bc: &SimplicialComplex) -> bool {
        let top = folkman.complex.dimension();
        (0..=top).all(|d| {
            folkman.complex.faces(d).iter().all(|s| {
                let mut img: Vec<usize> = s.iter().map(|&p| self.vertex_map[p] - 1).collect();
                img.sort_unstable();
                img.dedup();
                bc.contains(&img)
            })
        })
    }

    /// Cochain pullback `C^q(BC) -> C^q(F)`; rows index `F` simplices.
    pub fn pullback(
        &self,
        q: isize,
        folkman: &FolkmanComplex,
        bc: &SimplicialComplex,
    ) -> SparseMatrix {
        let rows = folkman.complex.faces(q);
        let mut triplets = Vec::new();
        for (r, s) in rows.iter().enumerate() {
            if let Some((img, sign)) = self.image(s) {
                if let Some(c) = bc.face_index(&img) {
                    triplets.push((r, c, sign));
                }
            }
        }
        SparseMatrix::from_triplets(rows.len(), bc.face_count(q), triplets)
    }
}

pub fn pi_map(m: &Matroid, folkman: &FolkmanComplex) -> PiMap {
    PiMap::new(m, folkman)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagBasisReport {
    pub holds: bool,
    pub beta_count: usize,
    pub cohomology_dimension: usize,
    /// Rank of the flag cochains modulo coboundaries.
    pub independent_rank: usize,
}

/// Checks that the duals of `xi(B)`, `B` βnbc, are independent modulo
/// coboundaries in the top cochains of `F` and that there are as many of
/// them as the top reduced Betti number.
pub fn verify_flag_basis(m: &Matroid) -> FlagBasisReport {
    let folkman = folkman_complex(m);
    let beta = m.betanbc_direct();
    let top = m.rank() as isize - 1;
    let dimension = folkman.complex.reduced_betti(top);
    let n_top = folkman.complex.face_count(top);
    let image = folkman.complex.coboundary(top - 1).to_dense();
    let duals: Vec<Vec<Q>> = beta
        .iter()
        .map(|b| {
            let flag = flag_of_base(m.lattice(), b).expect("βnbc bases are bases");
            let idx = folkman
                .complex
                .face_index(&folkman.simplex_of(&flag))
                .expect("flags are simplices of F");
            let mut v = vec![Q::from_integer(0.into()); n_top];
            v[idx] = Q::one();
            v
        })
        .collect();
    let base_rank = image.rank();
    let rank = if duals.is_empty() {
        base_rank
    } else {
        image
            .hstack(&DenseMatrix::from_columns(n_top, &duals))
            .rank()
    };
    let independent_rank = rank - base_rank;
    FlagBasisReport {
        holds: independent_rank == beta.len() && dimension == beta.len(),
        beta_count: beta.len(),
        cohomology_dimension: dimension,
        independent_rank,
    }
}
