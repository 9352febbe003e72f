use std::collections::HashMap;

use num_traits::Zero;

use super::{omega_lambda, reduce, OSElement, WeightVector};
use crate::linalg::{DenseMatrix, SparseMatrix};
use crate::matroid::{IndexSet, Matroid};
use crate::rational::Q;
use crate::Exec;

/// The complex `A^0 -> A^1 -> ... -> A^r` with differential `omega_lambda ∧`
/// in nbc monomial bases.
#[derive(Debug, Clone)]
pub struct AomotoComplex {
    bases: Vec<Vec<IndexSet>>,
    /// `differentials[p]` maps `A^p -> A^(p+1)`; rows index `A^(p+1)`.
    differentials: Vec<SparseMatrix>,
}

impl AomotoComplex {
    pub fn new(m: &Matroid, weights: &WeightVector, exec: Exec) -> Self {
        let bases = m.nbc_complex();
        let omega = omega_lambda(weights);
        let rank = m.rank();
        let differentials = (0..rank)
            .map(|p| {
                let target: HashMap<&IndexSet, usize> = bases[p + 1]
                    .iter()
                    .enumerate()
                    .map(|(i, b)| (b, i))
                    .collect();
                let columns = exec.map(&bases[p], |s| {
                    let image = reduce(
                        m,
                        &omega.wedge_unreduced(&OSElement::monomial(
                            s.clone(),
                            Q::from_integer(1.into()),
                        )),
                    );
                    image
                        .terms()
                        .iter()
                        .map(|(mono, c)| (target[mono], c.clone()))
                        .collect::<Vec<_>>()
                });
                SparseMatrix::from_sparse_columns(bases[p + 1].len(), &columns)
            })
            .collect();
        AomotoComplex {
            bases,
            differentials,
        }
    }

    pub fn rank(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, p: usize) -> &[IndexSet] {
        &self.bases[p]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `A^p -> A^(p+1)`; the zero map out of the top degree.
    pub fn differential(&self, p: usize) -> SparseMatrix {
        self.differentials
            .get(p)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::new(0, self.bases.get(p).map_or(0, Vec::len)))
    }

    /// `dim H^p = dim A^p - rank d_p - rank d_(p-1)` for `p = 0..=r`.
    pub fn cohomology_dims(&self, exec: Exec) -> Vec<usize> {
        let ranks = exec.map(&self.differentials, SparseMatrix::rank);
        (0..=self.rank())
            .map(|p| {
                let out = ranks.get(p).copied().unwrap_or(0);
                let inc = if p == 0 { 0 } else { ranks[p - 1] };
                self.bases[p].len() - out - inc
            })
            .collect()
    }

    /// `d_p ∘ d_(p-1) = 0` in every degree.
    pub fn squares_to_zero(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[1].mul(&w[0]).is_zero())
    }

    /// Columns spanning `omega_lambda ∧ A^(r-1)` inside `A^r`.
    pub fn top_image(&self) -> DenseMatrix {
        let r = self.rank();
        if r == 0 {
            return DenseMatrix::zeros(self.bases[0].len(), 0);
        }
        self.differentials[r - 1].to_dense()
    }

    /// Coordinates of a top-degree element in the nbc basis.
    pub fn top_coordinates(&self, element: &OSElement) -> Vec<Q> {
        element
            .to_vector(&self.bases[self.rank()])
            .expect("reduced elements use nbc monomials")
    }

    /// Whether a reduced element of degree `p` lies in `omega_lambda ∧ A^(p-1)`.
    pub fn in_image(&self, element: &OSElement) -> bool {
        let p = element.degree();
        if element.is_zero() {
            return true;
        }
        if p == 0 || p > self.rank() {
            return false;
        }
        let Ok(v) = element.to_vector(&self.bases[p]) else {
            return false;
        };
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        self.differentials[p - 1].to_dense().solve(&v).is_some()
    }
}

pub fn aomoto(m: &Matroid, weights: &WeightVector) -> AomotoComplex {
    AomotoComplex::new(m, weights, Exec::default())
}

pub fn aomoto_cohomology(m: &Matroid, weights: &WeightVector) -> Vec<usize> {
    aomoto(m, weights).cohomology_dims(Exec::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e_weights() -> WeightVector {
        WeightVector::from_fractions(&[(1, 2), (1, 3), (1, 5), (1, 7), (1, 11)])
    }

    #[test]
    fn example_dims() {
        let m = Matroid::new(&fixtures::example_e());
        let c = aomoto(&m, &e_weights());
        assert_eq!(c.dims(), vec![1, 5, 6]);
        assert!(c.squares_to_zero());
        assert_eq!(c.cohomology_dims(Exec::Sequential), vec![0, 0, 2]);
        let w = WeightVector::from_fractions(&[(1, 1), (1, 1), (1, 1), (1, 1), (-3, 1)]);
        assert_eq!(aomoto_cohomology(&m, &w), vec![0, 0, 2]);
    }

    #[test]
    fn resonant_weights_reported_as_computed() {
        let m = Matroid::new(&fixtures::example_e());
        let w = WeightVector::from_fractions(&[(1, 1), (1, 1), (1, 1), (1, 1), (-2, 1)]);
        let dims = aomoto_cohomology(&m, &w);
        // Euler characteristic is fixed: 1 - 5 + 6
        assert_eq!(dims[0] as i64 - dims[1] as i64 + dims[2] as i64, 2);
        assert_eq!(dims, vec![0, 1, 3]);
    }

    #[test]
    fn normal_crossing_is_acyclic() {
        let m = Matroid::new(&fixtures::normal_n2());
        let w = WeightVector::from_fractions(&[(1, 1), (1, 1)]);
        assert_eq!(aomoto_cohomology(&m, &w), vec![0, 0, 0]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let m = Matroid::new(&fixtures::rank_three());
        let w = WeightVector::from_fractions(&[(1, 2), (1, 3), (1, 5), (1, 7), (1, 11), (1, 13)]);
        let a = AomotoComplex::new(&m, &w, Exec::Sequential);
        let b = AomotoComplex::new(&m, &w, Exec::Parallel);
        for p in 0..=3 {
            assert_eq!(a.differential(p), b.differential(p));
        }
        assert!(a.squares_to_zero());
    }
}
