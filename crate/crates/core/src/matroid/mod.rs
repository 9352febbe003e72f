//! The affine matroid of an arrangement: circuits, broken circuits, nbc and
//! βnbc bases, the characteristic polynomial, and order predicates.
//!
//! All set-valued results are sorted index tuples in lexicographic order.

mod charpoly;
mod order;

use std::collections::BTreeSet;

use crate::arrangement::{is_subset, Arrangement, FlatId, FlatLattice};

pub use charpoly::CharPoly;
pub use order::{
    admissible_nu, admissible_prediction, supersolvable_betanbc, FlatClass, MaximalFlatReport,
    UnmixedReport,
};

/// An ascending tuple of 1-based hyperplane indices.
pub type IndexSet = Vec<usize>;

/// Arrangement together with its lattice and circuit data.
#[derive(Debug, Clone)]
pub struct Matroid {
    arrangement: Arrangement,
    lattice: FlatLattice,
    circuits: Vec<IndexSet>,
    broken_circuits: Vec<IndexSet>,
}

impl Matroid {
    pub fn new(arrangement: &Arrangement) -> Self {
        Self::with_lattice(arrangement.clone(), arrangement.lattice())
    }

    pub fn with_lattice(arrangement: Arrangement, lattice: FlatLattice) -> Self {
        let circuits = enumerate_circuits(&lattice);
        let broken: BTreeSet<IndexSet> = circuits.iter().map(|c| c[1..].to_vec()).collect();
        Matroid {
            arrangement,
            lattice,
            circuits,
            broken_circuits: broken.into_iter().collect(),
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn lattice(&self) -> &FlatLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn len(&self) -> usize {
        self.arrangement.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrangement.is_empty()
    }

    pub fn circuits(&self) -> &[IndexSet] {
        &self.circuits
    }

    pub fn broken_circuits(&self) -> &[IndexSet] {
        &self.broken_circuits
    }

    pub fn contains_broken_circuit(&self, set: &[usize]) -> bool {
        self.broken_circuits.iter().any(|b| is_subset(b, set))
    }

    /// Nonempty intersection and no broken circuit (hence independent).
    pub fn is_nbc(&self, set: &[usize]) -> bool {
        self.lattice.is_independent(set) && !self.contains_broken_circuit(set)
    }

    /// All nbc sets grouped by size `0..=rank`.
    pub fn nbc_complex(&self) -> Vec<Vec<IndexSet>> {
        let n = self.len();
        let mut levels: Vec<Vec<IndexSet>> = vec![vec![Vec::new()]];
        for size in 1..=self.rank() {
            let mut next = Vec::new();
            for s in &levels[size - 1] {
                let start = s.last().map_or(1, |&m| m + 1);
                for h in start..=n {
                    let mut t = s.clone();
                    t.push(h);
                    if self.lattice.is_independent(&t)
                        && !self
                            .broken_circuits
                            .iter()
                            .any(|b| b.contains(&h) && is_subset(b, &t))
                    {
                        next.push(t);
                    }
                }
            }
            levels.push(next);
        }
        levels
    }

    pub fn nbc_sets(&self, size: usize) -> Vec<IndexSet> {
        self.nbc_complex().into_iter().nth(size).unwrap_or_default()
    }

    /// Standard nbc bases, i.e. the facets of the broken circuit complex.
    pub fn nbc_bases(&self) -> Vec<IndexSet> {
        self.nbc_sets(self.rank())
    }

    /// nbc bases in which every member can be exchanged for a smaller
    /// hyperplane and still give a base.
    pub fn betanbc_direct(&self) -> Vec<IndexSet> {
        self.nbc_bases()
            .into_iter()
            .filter(|b| self.is_beta(b))
            .collect()
    }

    fn is_beta(&self, base: &[usize]) -> bool {
        base.iter().all(|&h| {
            (1..h).filter(|k| !base.contains(k)).any(|k| {
                let mut swapped: Vec<usize> = base.iter().copied().filter(|&x| x != h).collect();
                swapped.push(k);
                self.lattice.is_base(&swapped)
            })
        })
    }

    pub fn char_poly(&self) -> CharPoly {
        CharPoly::from_lattice(&self.lattice)
    }

    /// `(-1)^r chi(1)`, which must equal the number of βnbc bases.
    pub fn beta_count_check(&self) -> num_bigint::BigInt {
        let value = self.char_poly().eval(1);
        if self.rank().is_multiple_of(2) {
            value
        } else {
            -value
        }
    }

    /// The flat cut out by `set`, if nonempty.
    pub fn flat_of(&self, set: &[usize]) -> Option<FlatId> {
        self.lattice.closure(set)
    }

    pub fn unmixed_report(&self) -> UnmixedReport {
        order::unmixed_report(self)
    }
}

/// Circuits by increasing size: independent sets are extended by larger
/// indices; a dependent extension is a circuit iff every one-smaller subset
/// is independent. Sets with empty intersection are not extended.
fn enumerate_circuits(lattice: &FlatLattice) -> Vec<IndexSet> {
    let n = lattice.num_hyperplanes();
    let mut circuits = Vec::new();
    let mut level: Vec<IndexSet> = vec![Vec::new()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for s in &level {
            let start = s.last().map_or(1, |&m| m + 1);
            for h in start..=n {
                let mut t = s.clone();
                t.push(h);
                match lattice.rank_of(&t) {
                    None => {}
                    Some(c) if c == t.len() => next.push(t),
                    Some(_) => {
                        let minimal = (0..t.len()).all(|skip| {
                            let sub: Vec<usize> = t
                                .iter()
                                .enumerate()
                                .filter(|&(i, _)| i != skip)
                                .map(|(_, &x)| x)
                                .collect();
                            lattice.is_independent(&sub)
                        });
                        if minimal {
                            circuits.push(t);
                        }
                    }
                }
            }
        }
        level = next;
    }
    circuits.sort();
    circuits
}

/// βnbc by deletion and restriction on the last hyperplane.
pub fn betanbc_recursive(arrangement: &Arrangement) -> Vec<IndexSet> {
    let n = arrangement.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let rank = arrangement.lattice().rank();
    if rank == 1 {
        return (2..=n).map(|i| vec![i]).collect();
    }
    let triple = arrangement.triple(n).expect("last hyperplane exists");
    if triple.deletion.lattice().rank() < rank {
        return Vec::new();
    }
    let mut out = betanbc_recursive(&triple.deletion);
    for b in betanbc_recursive(&triple.restriction) {
        let mut lifted: Vec<usize> = b.iter().map(|&i| triple.nu[i - 1]).collect();
        lifted.push(n);
        out.push(lifted);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn circuits_of_fixtures() {
        let e = Matroid::new(&fixtures::example_e());
        assert_eq!(e.circuits(), &[vec![1, 3, 5], vec![2, 4, 5]]);
        assert_eq!(e.broken_circuits(), &[vec![3, 5], vec![4, 5]]);
        let gp = Matroid::new(&fixtures::general_position_gp());
        assert!(gp.circuits().is_empty());
        assert!(gp.broken_circuits().is_empty());
        assert!(Matroid::new(&fixtures::normal_n2()).circuits().is_empty());
        assert!(Matroid::new(&fixtures::three_points())
            .broken_circuits()
            .is_empty());
    }

    #[test]
    fn nbc_bases_of_fixtures() {
        let e = Matroid::new(&fixtures::example_e());
        assert_eq!(
            e.nbc_bases(),
            vec![
                vec![1, 3],
                vec![1, 4],
                vec![1, 5],
                vec![2, 3],
                vec![2, 4],
                vec![2, 5]
            ]
        );
        let p3 = Matroid::new(&fixtures::three_points());
        assert_eq!(p3.nbc_bases(), vec![vec![1], vec![2], vec![3]]);
        let gp = Matroid::new(&fixtures::general_position_gp());
        assert_eq!(gp.nbc_bases(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn betanbc_direct_of_fixtures() {
        assert_eq!(
            Matroid::new(&fixtures::example_e()).betanbc_direct(),
            vec![vec![2, 4], vec![2, 5]]
        );
        assert_eq!(
            Matroid::new(&fixtures::three_points()).betanbc_direct(),
            vec![vec![2], vec![3]]
        );
        assert!(Matroid::new(&fixtures::normal_n2())
            .betanbc_direct()
            .is_empty());
        assert_eq!(
            Matroid::new(&fixtures::general_position_gp()).betanbc_direct(),
            vec![vec![2, 3]]
        );
    }

    #[test]
    fn betanbc_recursive_matches_direct_on_fixtures() {
        for fx in fixtures::all() {
            let direct = Matroid::new(&fx.arrangement).betanbc_direct();
            assert_eq!(betanbc_recursive(&fx.arrangement), direct, "{}", fx.name);
        }
    }

    #[test]
    fn deletion_of_example_has_single_beta_base() {
        let t = fixtures::example_e().triple(5).unwrap();
        // H3 and H4 are the parallel lines y = -1 and y = 1, so the only
        // βnbc base of the four remaining lines is (2, 4).
        assert_eq!(betanbc_recursive(&t.deletion), vec![vec![2, 4]]);
        assert_eq!(betanbc_recursive(&t.restriction), vec![vec![2]]);
    }

    #[test]
    fn char_poly_and_beta() {
        let e = Matroid::new(&fixtures::example_e());
        assert_eq!(e.char_poly().to_string(), "t^2 - 5t + 6");
        assert_eq!(e.beta_count_check(), 2.into());
        let gp = Matroid::new(&fixtures::general_position_gp());
        assert_eq!(gp.char_poly().to_string(), "t^2 - 3t + 3");
        assert_eq!(gp.beta_count_check(), 1.into());
        let n2 = Matroid::new(&fixtures::normal_n2());
        assert_eq!(n2.char_poly().to_string(), "t^2 - 2t + 1");
        assert_eq!(n2.beta_count_check(), 0.into());
    }

    #[test]
    fn nbc_sets_are_downward_closed() {
        for fx in fixtures::all() {
            let m = Matroid::new(&fx.arrangement);
            let complex = m.nbc_complex();
            let all: BTreeSet<IndexSet> = complex.iter().flatten().cloned().collect();
            for s in &all {
                for skip in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(skip);
                    assert!(all.contains(&f), "{} {:?}", fx.name, s);
                }
            }
        }
    }
}
