mod common;

use std::collections::{BTreeMap, BTreeSet};

use betanbc::complexes::{broken_circuit_complex, folkman_complex};
use betanbc::fixtures;
use betanbc::osalgebra::{reduce_monomial, OSElement};
use betanbc::random::{random_arrangement, rng};
use betanbc::rational::Q;
use betanbc::{Arrangement, Exec, Matroid};
use common::{
    brute_lattice, brute_rank, integer_matrix, is_subset, os_relations, rank_of, smith_rank,
    subsets,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn oracle_corpus(max_n: usize) -> Vec<(String, Arrangement)> {
    let mut out: Vec<(String, Arrangement)> = fixtures::all()
        .into_iter()
        .map(|f| (f.name.to_string(), f.arrangement))
        .collect();
    let mut r = rng(20);
    for k in 0..8 {
        let dim = 1 + k % 3;
        let n = 3 + k % (max_n - 2);
        out.push((format!("random-{k}"), random_arrangement(&mut r, dim, n)));
    }
    out
}

#[test]
fn lattice_matches_subset_enumeration() {
    let mut cases = oracle_corpus(8);
    let mut r = rng(21);
    cases.push(("random-12".into(), random_arrangement(&mut r, 3, 12)));
    cases.push(("random-11".into(), random_arrangement(&mut r, 2, 11)));
    for (name, a) in cases {
        let lattice = a.lattice();
        let ours: BTreeMap<Vec<usize>, usize> = lattice
            .flats()
            .iter()
            .map(|f| (f.support().to_vec(), f.codim()))
            .collect();
        assert_eq!(ours.len(), lattice.len(), "{name}: repeated supports");
        assert_eq!(ours, brute_lattice(&a), "{name}");
    }
}

#[test]
fn sequential_and_parallel_lattices_agree() {
    let mut r = rng(22);
    for _ in 0..4 {
        let a = random_arrangement(&mut r, 3, 9);
        let s = a.lattice_with(Exec::Sequential);
        let p = a.lattice_with(Exec::Parallel);
        let key = |l: &betanbc::arrangement::FlatLattice| {
            l.flats()
                .iter()
                .map(|f| (f.support().to_vec(), f.codim()))
                .collect::<Vec<_>>()
        };
        assert_eq!(key(&s), key(&p));
    }
}

#[test]
fn circuits_nbc_and_betanbc_match_definitions() {
    for (name, a) in oracle_corpus(8) {
        let m = Matroid::new(&a);
        let n = a.len();
        let independent = |s: &[usize]| brute_rank(&a, s) == Some(s.len());
        let circuits: Vec<Vec<usize>> = subsets(n)
            .filter(|s| {
                matches!(brute_rank(&a, s), Some(r) if r < s.len())
                    && (0..s.len()).all(|k| {
                        let mut t = s.clone();
                        t.remove(k);
                        independent(&t)
                    })
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(m.circuits(), circuits.as_slice(), "{name}");

        let broken: Vec<Vec<usize>> = circuits.iter().map(|c| c[1..].to_vec()).collect();
        let rank = subsets(n)
            .filter_map(|s| brute_rank(&a, &s))
            .max()
            .unwrap_or(0);
        let nbc: Vec<Vec<usize>> = subsets(n)
            .filter(|s| {
                s.len() == rank && independent(s) && !broken.iter().any(|b| is_subset(b, s))
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(m.nbc_bases(), nbc, "{name}");

        let is_base = |s: &[usize]| s.len() == rank && independent(s);
        let beta: Vec<Vec<usize>> = nbc
            .iter()
            .filter(|b| {
                b.iter().all(|&h| {
                    (1..h).any(|k| {
                        let mut t: Vec<usize> = b.iter().copied().filter(|&x| x != h).collect();
                        if t.contains(&k) {
                            return false;
                        }
                        t.push(k);
                        t.sort_unstable();
                        is_base(&t)
                    })
                })
            })
            .cloned()
            .collect();
        assert_eq!(m.betanbc_direct(), beta, "{name}");
    }
}

/// Whitney's formula: `chi(t) = sum over meeting subsets S of (-1)^|S| t^(dim - rank S)`.
#[test]
fn char_poly_matches_whitney_formula() {
    for (name, a) in oracle_corpus(8) {
        let dim = a.dimension();
        let mut coeffs = vec![BigInt::zero(); dim + 1];
        for s in subsets(a.len()) {
            if let Some(r) = brute_rank(&a, &s) {
                let sign = if s.len() % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                coeffs[dim - r] += sign;
            }
        }
        let m = Matroid::new(&a);
        assert_eq!(m.char_poly().coefficients(), coeffs.as_slice(), "{name}");
    }
}

#[test]
fn os_normal_form_matches_quotient() {
    for (name, a) in oracle_corpus(6).into_iter().filter(|(_, a)| a.len() <= 6) {
        let m = Matroid::new(&a);
        for p in 0..=a.len().min(m.rank() + 1) {
            let (basis, rel) = os_relations(&a, p);
            let nbc_count = if p <= m.rank() {
                m.nbc_sets(p).len()
            } else {
                0
            };
            assert_eq!(basis.len() - rel.rank(), nbc_count, "{name} degree {p}");
            for t in &basis {
                let reduced: OSElement = reduce_monomial(&m, t).unwrap();
                let mut v = vec![Q::zero(); basis.len()];
                v[basis.iter().position(|b| b == t).unwrap()] = Q::one();
                for (mono, c) in reduced.terms() {
                    v[basis.iter().position(|b| b == mono).unwrap()] -= c;
                }
                assert!(rel.contains(&v), "{name}: {t:?} -> {reduced:?}");
            }
        }
    }
}

#[test]
fn simplicial_ranks_match_smith_form() {
    for (name, a) in oracle_corpus(7) {
        let m = Matroid::new(&a);
        let bc = broken_circuit_complex(&m);
        let f = folkman_complex(&m).complex;
        for complex in [&bc, &f] {
            for q in -1..=complex.dimension() {
                let sparse = complex.coboundary(q).rank();
                assert_eq!(
                    smith_rank(integer_matrix(complex, q)),
                    sparse,
                    "{name} degree {q}"
                );
                let dense: Vec<Vec<Q>> = (0..complex.coboundary(q).rows())
                    .map(|i| complex.coboundary(q).to_dense().row(i).to_vec())
                    .collect();
                assert_eq!(rank_of(&dense), sparse, "{name} degree {q}");
            }
        }
    }
}

#[test]
fn smith_oracle_sanity() {
    assert_eq!(smith_rank(vec![vec![2, 4], vec![1, 2]]), 1);
    assert_eq!(smith_rank(vec![vec![2, 3], vec![4, 5]]), 2);
    assert_eq!(smith_rank(vec![vec![0, 0]]), 0);
    assert_eq!(smith_rank(Vec::new()), 0);
}
