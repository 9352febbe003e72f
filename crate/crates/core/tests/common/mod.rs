//! Oracles written independently of the library's linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use betanbc::complexes::SimplicialComplex;
use betanbc::rational::Q;
use betanbc::Arrangement;
use num_traits::{One, Zero};

/// Rows in echelon form over the rationals, grown one vector at a time.
#[derive(Default, Clone)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Q::one() / &r[p];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rank_of(rows: &[Vec<Q>]) -> usize {
    let mut e = Echelon::default();
    rows.iter().filter(|r| e.insert(r)).count()
}

/// Rank of the hyperplanes in `subset`, or `None` when they do not meet.
pub fn brute_rank(a: &Arrangement, subset: &[usize]) -> Option<usize> {
    let mut coeffs = Echelon::default();
    let mut augmented = Echelon::default();
    for &i in subset {
        let h = &a.hyperplanes()[i - 1];
        let c = h.coeffs().to_vec();
        let mut aug = c.clone();
        aug.push(-h.constant().clone());
        coeffs.insert(&c);
        augmented.insert(&aug);
    }
    (coeffs.rank() == augmented.rank()).then_some(coeffs.rank())
}

/// All subsets of `1..=n` as ascending index lists, by bitmask.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
}

pub fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.contains(x))
}

/// Rank of an integer matrix from its Smith normal form.
#[allow(clippy::needless_range_loop)]
pub fn smith_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut t = 0;
    while t < rows.min(cols) {
        // pick the nonzero entry of least absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = m[i][t] / p;
                if f != 0 {
                    for j in t..cols {
                        m[i][j] -= f * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let f = m[t][j] / p;
                if f != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= f * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move a smaller remainder into the pivot position
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        rank += 1;
        t += 1;
    }
    rank
}

pub fn e_sample() -> betanbc::osalgebra::WeightVector {
    betanbc::osalgebra::WeightVector::from_fractions(&[(1, 2), (1, 3), (1, 5), (1, 7), (1, 11)])
}

/// Supports and codimensions of all flats, from every subset of hyperplanes.
pub fn brute_lattice(a: &Arrangement) -> BTreeMap<Vec<usize>, usize> {
    let n = a.len();
    let mut flats = BTreeMap::new();
    for s in subsets(n) {
        let Some(rank) = brute_rank(a, &s) else {
            continue;
        };
        let support: Vec<usize> = (1..=n)
            .filter(|&h| {
                let mut t = s.clone();
                t.push(h);
                brute_rank(a, &t) == Some(rank)
            })
            .collect();
        flats.insert(support, rank);
    }
    flats
}

/// The degree-`p` part of the Orlik-Solomon ideal inside the exterior
/// algebra: monomials with empty intersection and `e_U ∧ ∂e_S` for
/// dependent `S`.
pub fn os_relations(a: &Arrangement, p: usize) -> (Vec<Vec<usize>>, Echelon) {
    let n = a.len();
    let basis: Vec<Vec<usize>> = subsets(n)
        .filter(|s| s.len() == p)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let position = |s: &[usize]| basis.iter().position(|b| b == s).unwrap();
    let mut rel = Echelon::default();
    for s in &basis {
        if brute_rank(a, s).is_none() {
            let mut v = vec![Q::zero(); basis.len()];
            v[position(s)] = Q::one();
            rel.insert(&v);
        }
    }
    for dep in subsets(n).filter(|s| matches!(brute_rank(a, s), Some(r) if r < s.len())) {
        if dep.len() > p + 1 {
            continue;
        }
        let extra = p + 1 - dep.len();
        for u in subsets(n).filter(|u| u.len() == extra) {
            let mut v = vec![Q::zero(); basis.len()];
            for k in 0..dep.len() {
                let mut tuple = u.clone();
                tuple.extend(
                    dep.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != k)
                        .map(|(_, &x)| x),
                );
                let Some((sorted, odd)) = betanbc::osalgebra::sort_with_sign(&tuple) else {
                    continue;
                };
                let negative = (k % 2 == 1) ^ odd;
                v[position(&sorted)] += if negative { -Q::one() } else { Q::one() };
            }
            rel.insert(&v);
        }
    }
    (basis, rel)
}

pub fn integer_matrix(c: &SimplicialComplex, q: isize) -> Vec<Vec<i128>> {
    let d = c.coboundary(q).to_dense();
    (0..d.rows())
        .map(|i| {
            d.row(i)
                .iter()
                .map(|x| i128::try_from(x.to_integer()).expect("incidence entries are small"))
                .collect()
        })
        .collect()
}
