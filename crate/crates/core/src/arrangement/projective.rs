use std::fmt;

use serde::{Serialize, Serializer};

use super::{Arrangement, FlatId, FlatLattice, HyperplaneSpec};
use crate::rational::{q, Q};
use num_traits::Zero;

/// A hyperplane of the projective closure: an affine one or the hyperplane
/// at infinity. Serializes as an integer or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjIndex {
    Finite(usize),
    Infinity,
}

impl fmt::Display for ProjIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjIndex::Finite(i) => write!(f, "{i}"),
            ProjIndex::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for ProjIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ProjIndex::Finite(i) => s.serialize_u64(*i as u64),
            ProjIndex::Infinity => s.serialize_str("inf"),
        }
    }
}

/// The cone over an arrangement: each `a . x + c` becomes `a . x + c z` in
/// one more variable, and `z = 0` is appended as the hyperplane at infinity
/// (index `n + 1`). Cone flats of codimension `1..=dim` are the elements of
/// the projective intersection poset other than the whole space.
#[derive(Debug, Clone)]
pub struct ProjectiveClosure {
    affine_len: usize,
    dimension: usize,
    cone: Arrangement,
    lattice: FlatLattice,
}

impl ProjectiveClosure {
    pub fn new(arrangement: &Arrangement) -> Self {
        let dim = arrangement.dimension();
        let mut specs: Vec<HyperplaneSpec> = arrangement
            .hyperplanes()
            .iter()
            .map(|h| {
                let mut coeffs = h.coeffs().to_vec();
                coeffs.push(h.constant().clone());
                HyperplaneSpec::new(h.label(), coeffs, Q::zero())
            })
            .collect();
        let mut at_infinity = vec![Q::zero(); dim + 1];
        at_infinity[dim] = q(1);
        specs.push(HyperplaneSpec::new("Hinf", at_infinity, Q::zero()));
        let cone = Arrangement::new_possibly_empty(dim + 1, specs)
            .expect("cone of a valid arrangement is valid");
        let lattice = cone.lattice();
        ProjectiveClosure {
            affine_len: arrangement.len(),
            dimension: dim,
            cone,
            lattice,
        }
    }

    pub fn cone(&self) -> &Arrangement {
        &self.cone
    }

    pub fn lattice(&self) -> &FlatLattice {
        &self.lattice
    }

    pub fn infinity_index(&self) -> usize {
        self.affine_len + 1
    }

    pub fn to_proj(&self, cone_index: usize) -> ProjIndex {
        if cone_index == self.infinity_index() {
            ProjIndex::Infinity
        } else {
            ProjIndex::Finite(cone_index)
        }
    }

    /// Cone flats representing projective subspaces other than the whole
    /// space, i.e. codimension between 1 and `dim`.
    pub fn elements(&self) -> Vec<FlatId> {
        self.lattice
            .flats()
            .iter()
            .filter(|f| f.codim() >= 1 && f.codim() <= self.dimension)
            .map(|f| f.id())
            .collect()
    }

    pub fn support(&self, id: FlatId) -> Vec<ProjIndex> {
        self.lattice.flats()[id]
            .support()
            .iter()
            .map(|&i| self.to_proj(i))
            .collect()
    }

    pub fn at_infinity(&self, id: FlatId) -> bool {
        self.lattice.flats()[id].contains_hyperplane(self.infinity_index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn infinity_supports(pc: &ProjectiveClosure, codim: usize) -> Vec<Vec<ProjIndex>> {
        pc.elements()
            .into_iter()
            .filter(|&id| pc.at_infinity(id) && pc.lattice().flats()[id].codim() == codim)
            .map(|id| pc.support(id))
            .collect()
    }

    #[test]
    fn cone_is_central() {
        let pc = ProjectiveClosure::new(&fixtures::example_e());
        assert_eq!(pc.cone().len(), 6);
        assert_eq!(pc.cone().dimension(), 3);
        assert!(pc
            .cone()
            .hyperplanes()
            .iter()
            .all(|h| h.constant().is_zero()));
    }

    #[test]
    fn example_points_at_infinity() {
        use ProjIndex::*;
        let pc = ProjectiveClosure::new(&fixtures::example_e());
        assert_eq!(
            infinity_supports(&pc, 2),
            vec![
                vec![Finite(1), Finite(2), Infinity],
                vec![Finite(3), Finite(4), Infinity],
                vec![Finite(5), Infinity],
            ]
        );
    }

    #[test]
    fn normal_pair_points_at_infinity() {
        use ProjIndex::*;
        let pc = ProjectiveClosure::new(&fixtures::normal_n2());
        assert_eq!(
            infinity_supports(&pc, 2),
            vec![vec![Finite(1), Infinity], vec![Finite(2), Infinity]]
        );
    }

    #[test]
    fn general_position_points_at_infinity_are_double() {
        let pc = ProjectiveClosure::new(&fixtures::general_position_gp());
        let pts = infinity_supports(&pc, 2);
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn affine_chart_recovers_lattice() {
        for fx in fixtures::all() {
            let a = &fx.arrangement;
            let l = a.lattice();
            let pc = ProjectiveClosure::new(a);
            let mut affine: Vec<Vec<usize>> = pc
                .lattice()
                .flats()
                .iter()
                .filter(|f| !f.contains_hyperplane(pc.infinity_index()))
                .map(|f| f.support().to_vec())
                .collect();
            affine.sort();
            let mut expected: Vec<Vec<usize>> =
                l.flats().iter().map(|f| f.support().to_vec()).collect();
            expected.sort();
            assert_eq!(affine, expected, "{}", fx.name);
        }
    }
}
