//! Dense flats, affine and at infinity, and the two weight predicates:
//! `lambda(X) != 0` on affine dense flats, and `lambda(X)` never a
//! nonnegative integer on dense elements of the projective closure.

use num_traits::Zero;
use serde::Serialize;

use crate::arrangement::{is_subset, FlatId, FlatLattice, ProjIndex, ProjectiveClosure};
use crate::matroid::{IndexSet, Matroid};
use crate::osalgebra::WeightVector;
use crate::rational::{format_rational, is_nonnegative_integer, Q};

/// A flat is dense iff its localization is a connected matroid: any two of
/// its hyperplanes lie in a common circuit contained in the localization,
/// up to transitive closure.
fn is_connected(support: &[usize], circuits: &[IndexSet]) -> bool {
    if support.len() <= 1 {
        return !support.is_empty();
    }
    let pos = |h: usize| support.binary_search(&h).expect("member of support");
    let mut parent: Vec<usize> = (0..support.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for c in circuits.iter().filter(|c| is_subset(c, support)) {
        let a = find(&mut parent, pos(c[0]));
        for &h in &c[1..] {
            let b = find(&mut parent, pos(h));
            parent[b] = a;
        }
    }
    let root = find(&mut parent, 0);
    (1..support.len()).all(|i| find(&mut parent, i) == root)
}

fn dense_in(
    lattice: &FlatLattice,
    circuits: &[IndexSet],
    keep: impl Fn(FlatId) -> bool,
) -> Vec<FlatId> {
    lattice
        .flats()
        .iter()
        .filter(|f| f.codim() > 0 && keep(f.id()) && is_connected(f.support(), circuits))
        .map(|f| f.id())
        .collect()
}

/// Dense flats of `L - {V}`, in lattice order.
pub fn dense_flats_affine(m: &Matroid) -> Vec<FlatId> {
    dense_in(m.lattice(), m.circuits(), |_| true)
}

/// Dense elements of the projective closure other than the whole space,
/// computed on the cone.
pub fn dense_at_infinity(pc: &ProjectiveClosure) -> Vec<FlatId> {
    let cone = Matroid::with_lattice(pc.cone().clone(), pc.lattice().clone());
    let elements = pc.elements();
    dense_in(pc.lattice(), cone.circuits(), |id| elements.contains(&id))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseElement {
    pub support: Vec<ProjIndex>,
    pub codim: usize,
    pub at_infinity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseReport {
    pub affine: Vec<DenseElement>,
    pub projective: Vec<DenseElement>,
}

/// Dense flats of an arrangement and of its projective closure.
#[derive(Debug, Clone)]
pub struct DenseData {
    affine: Vec<IndexSet>,
    report: DenseReport,
}

impl DenseData {
    pub fn new(m: &Matroid) -> Self {
        let lattice = m.lattice();
        let affine_ids = dense_flats_affine(m);
        let affine: Vec<IndexSet> = affine_ids
            .iter()
            .map(|&id| lattice.flats()[id].support().to_vec())
            .collect();
        let pc = ProjectiveClosure::new(m.arrangement());
        let projective = dense_at_infinity(&pc)
            .into_iter()
            .map(|id| DenseElement {
                support: pc.support(id),
                codim: pc.lattice().flats()[id].codim(),
                at_infinity: pc.at_infinity(id),
            })
            .collect();
        let affine_report = affine_ids
            .iter()
            .map(|&id| {
                let f = &lattice.flats()[id];
                DenseElement {
                    support: f.support().iter().map(|&i| ProjIndex::Finite(i)).collect(),
                    codim: f.codim(),
                    at_infinity: false,
                }
            })
            .collect();
        DenseData {
            affine,
            report: DenseReport {
                affine: affine_report,
                projective,
            },
        }
    }

    pub fn report(&self) -> &DenseReport {
        &self.report
    }

    /// Supports of the affine dense flats.
    pub fn affine_supports(&self) -> &[IndexSet] {
        &self.affine
    }

    /// Supports whose weight sums enter the nonresonance condition. With
    /// `paper_example_compat` the hyperplane at infinity alone is left out.
    pub fn conditions(&self, paper_example_compat: bool) -> Vec<Vec<ProjIndex>> {
        self.report
            .projective
            .iter()
            .map(|e| e.support.clone())
            .filter(|s| !(paper_example_compat && s.as_slice() == [ProjIndex::Infinity]))
            .collect()
    }

    pub fn check_yuzvinsky(&self, weights: &WeightVector) -> PredicateReport {
        let violations = self
            .affine
            .iter()
            .filter(|s| weights.sum_over(s).is_zero())
            .map(|s| Violation {
                support: s.iter().map(|&i| ProjIndex::Finite(i)).collect(),
                value: Q::zero(),
            })
            .collect();
        PredicateReport::from_violations(violations)
    }

    pub fn check_nonresonance(
        &self,
        weights: &WeightVector,
        paper_example_compat: bool,
    ) -> PredicateReport {
        let violations = self
            .conditions(paper_example_compat)
            .into_iter()
            .filter_map(|support| {
                let value = projective_sum(weights, &support);
                is_nonnegative_integer(&value).then_some(Violation { support, value })
            })
            .collect();
        PredicateReport::from_violations(violations)
    }
}

/// `lambda(X)` over a projective support, with `lambda_inf = -sum lambda_i`.
pub fn projective_sum(weights: &WeightVector, support: &[ProjIndex]) -> Q {
    support.iter().fold(Q::zero(), |acc, p| match p {
        ProjIndex::Finite(i) => acc + weights.get(*i),
        ProjIndex::Infinity => acc + weights.infinity(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub support: Vec<ProjIndex>,
    pub value: Q,
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            support: &'a [ProjIndex],
        }
        Out {
            support: &self.support,
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl PredicateReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        PredicateReport {
            ok: violations.is_empty(),
            violations,
        }
    }
}

pub fn check_yuzvinsky(m: &Matroid, weights: &WeightVector) -> PredicateReport {
    DenseData::new(m).check_yuzvinsky(weights)
}

pub fn check_nonresonance(
    m: &Matroid,
    weights: &WeightVector,
    paper_example_compat: bool,
) -> PredicateReport {
    DenseData::new(m).check_nonresonance(weights, paper_example_compat)
}

/// Human-readable form of a condition, e.g. `l1+l2+linf`.
pub fn describe_condition(support: &[ProjIndex]) -> String {
    support
        .iter()
        .map(|p| format!("l{p}"))
        .collect::<Vec<_>>()
        .join("+")
}

pub fn format_violation(v: &Violation) -> String {
    format!(
        "{} = {}",
        describe_condition(&v.support),
        format_rational(&v.value)
    )
}
