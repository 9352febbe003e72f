use std::collections::BTreeMap;

use num_traits::Zero;

use super::{normalize_leading, Arrangement, HyperplaneSpec};
use crate::error::Result;
use crate::rational::Q;

/// Deletion and restriction of an arrangement relative to one hyperplane.
#[derive(Debug, Clone)]
pub struct Triple {
    /// The deleted hyperplane (index in the original arrangement).
    pub hyperplane: usize,
    /// `A - {H}` in the inherited order.
    pub deletion: Arrangement,
    /// `deletion_map[j - 1]` is the original index of hyperplane `j` of the
    /// deletion.
    pub deletion_map: Vec<usize>,
    /// Intersections `K ∩ H`, realized inside `H` with `dim - 1` coordinates
    /// and ordered by `nu`.
    pub restriction: Arrangement,
    /// `nu[j - 1]` is the smallest hyperplane other than `H` containing
    /// hyperplane `j` of the restriction. Strictly increasing.
    pub nu: Vec<usize>,
}

impl Arrangement {
    /// The triple relative to hyperplane `index`.
    ///
    /// `H` is parametrized by solving its form for its first coordinate with
    /// a nonzero coefficient; the remaining coordinates are kept in order.
    pub fn triple(&self, index: usize) -> Result<Triple> {
        let h = self.hyperplane(index)?;
        let deletion_map: Vec<usize> = (1..=self.len()).filter(|&i| i != index).collect();
        let deletion = if deletion_map.is_empty() {
            Arrangement::new_possibly_empty(self.dimension(), Vec::new())?
        } else {
            self.subarrangement(&deletion_map)?.0
        };

        let dim = self.dimension();
        let a = h.coeffs();
        let c = h.constant();
        let pivot = a
            .iter()
            .position(|x| !x.is_zero())
            .expect("hyperplane has a nonzero coefficient");

        // Restricted forms grouped by the hyperplane of H they cut out.
        let mut groups: BTreeMap<Vec<Q>, (usize, Vec<Q>, Q)> = BTreeMap::new();
        for k in self.hyperplanes().iter().filter(|k| k.index() != index) {
            let b = k.coeffs();
            let ratio = &b[pivot] / &a[pivot];
            let coeffs: Vec<Q> = (0..dim)
                .filter(|&j| j != pivot)
                .map(|j| &b[j] - &ratio * &a[j])
                .collect();
            if coeffs.iter().all(Zero::is_zero) {
                // parallel to H inside V: empty intersection
                continue;
            }
            let constant = k.constant() - &ratio * c;
            let mut form = coeffs.clone();
            form.push(constant.clone());
            let key = normalize_leading(form);
            groups
                .entry(key)
                .and_modify(|g| {
                    if k.index() < g.0 {
                        *g = (k.index(), coeffs.clone(), constant.clone());
                    }
                })
                .or_insert((k.index(), coeffs, constant));
        }
        let mut pieces: Vec<(usize, Vec<Q>, Q)> = groups.into_values().collect();
        pieces.sort_by_key(|p| p.0);
        let nu = pieces.iter().map(|p| p.0).collect();
        let specs = pieces
            .into_iter()
            .map(|(i, coeffs, constant)| {
                HyperplaneSpec::new(
                    format!("{}∩{}", self.hyperplanes()[i - 1].label(), h.label()),
                    coeffs,
                    constant,
                )
            })
            .collect();
        let restriction = Arrangement::new_possibly_empty(dim - 1, specs)?;
        Ok(Triple {
            hyperplane: index,
            deletion,
            deletion_map,
            restriction,
            nu,
        })
    }
}
