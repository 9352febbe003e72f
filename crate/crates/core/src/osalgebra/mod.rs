//! The Orlik-Solomon algebra in nbc normal form, weights, the Aomoto complex
//! `(A, omega_lambda ∧)`, and flag forms.

mod aomoto;
mod flags;
mod weights;

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::{IndexSet, Matroid};
use crate::rational::{format_rational, Q};

pub use aomoto::{aomoto, aomoto_cohomology, AomotoComplex};
pub use flags::{
    flag_form, flag_form_unreduced, flag_product, omega_lambda, omega_lambda_flat, upsilon,
    upsilon_respects_coboundaries,
};
pub use weights::WeightVector;

/// Sorts a tuple of distinct indices. Returns the sorted tuple and whether
/// the permutation was odd, or `None` if an index repeats.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = tuple.to_vec();
    let mut odd = false;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, odd))
}

/// A homogeneous element, as a map from ascending index tuples to nonzero
/// coefficients. Elements returned by [`reduce_monomial`] and [`multiply`]
/// only use nbc monomials; the unreduced flag expansion uses arbitrary
/// monomials of the exterior algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OSElement {
    degree: usize,
    terms: BTreeMap<IndexSet, Q>,
}

impl OSElement {
    pub fn zero(degree: usize) -> Self {
        OSElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), Q::one())
    }

    /// `coeff * omega_monomial`; the monomial must be ascending.
    pub fn monomial(monomial: IndexSet, coeff: Q) -> Self {
        let mut e = Self::zero(monomial.len());
        e.add_term(monomial, coeff);
        e
    }

    pub fn generator(index: usize) -> Self {
        Self::monomial(vec![index], Q::one())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, Q> {
        &self.terms
    }

    pub fn coeff(&self, monomial: &[usize]) -> Q {
        self.terms.get(monomial).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, monomial: IndexSet, coeff: Q) {
        debug_assert_eq!(monomial.len(), self.degree);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &OSElement, scale: &Q) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &Q) -> OSElement {
        let mut out = Self::zero(self.degree);
        out.add_scaled(self, scale);
        out
    }

    pub fn sub(&self, other: &OSElement) -> OSElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    /// Coordinates over an ordered list of monomials. Terms outside the list
    /// are an error.
    pub fn to_vector(&self, basis: &[IndexSet]) -> Result<Vec<Q>> {
        let index: HashMap<&IndexSet, usize> =
            basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut v = vec![Q::zero(); basis.len()];
        for (m, c) in &self.terms {
            let i = index
                .get(m)
                .ok_or_else(|| Error::Inconsistency(format!("monomial {m:?} outside the basis")))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(degree: usize, basis: &[IndexSet], coords: &[Q]) -> Self {
        let mut e = Self::zero(degree);
        for (m, c) in basis.iter().zip(coords) {
            e.add_term(m.clone(), c.clone());
        }
        e
    }

    /// Wedge product in the exterior algebra, without reduction.
    pub fn wedge_unreduced(&self, other: &OSElement) -> OSElement {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some((sorted, odd)) = sort_with_sign(&joined) {
                    let c = ca * cb;
                    out.add_term(sorted, if odd { -c } else { c });
                }
            }
        }
        out
    }
}

#[derive(Serialize)]
struct TermJson {
    monomial: IndexSet,
    coeff: String,
}

#[derive(Serialize)]
struct ElementJson {
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for OSElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    monomial: m.clone(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Straightens `omega_{t_1} ... omega_{t_p}` into the nbc basis.
pub fn reduce_monomial(m: &Matroid, tuple: &[usize]) -> Result<OSElement> {
    if let Some(&bad) = tuple.iter().find(|&&i| i == 0 || i > m.len()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let Some((sorted, odd)) = sort_with_sign(tuple) else {
        return Ok(OSElement::zero(tuple.len()));
    };
    let mut memo = HashMap::new();
    let reduced = reduce_sorted(m, &sorted, &mut memo);
    Ok(if odd {
        reduced.scaled(&-Q::one())
    } else {
        reduced
    })
}

/// Normal form of an ascending monomial. A monomial with a broken circuit
/// `b = C - min C` is rewritten with `omega_b = sum_(k>=1) (-1)^(k+1)
/// omega_(C - c_k)`; each term replaces a member of `b` by the smaller
/// `min C`, so the rewritten monomials are lexicographically smaller.
fn reduce_sorted(m: &Matroid, s: &[usize], memo: &mut HashMap<IndexSet, OSElement>) -> OSElement {
    if let Some(hit) = memo.get(s) {
        return hit.clone();
    }
    let lattice = m.lattice();
    let result = if !lattice.is_independent(s) {
        OSElement::zero(s.len())
    } else if let Some(pos) = m
        .broken_circuits()
        .iter()
        .position(|b| crate::arrangement::is_subset(b, s))
    {
        let b = &m.broken_circuits()[pos];
        let circuit = m
            .circuits()
            .iter()
            .find(|c| &c[1..] == b.as_slice())
            .expect("every broken circuit comes from a circuit");
        let rest: Vec<usize> = s.iter().copied().filter(|x| !b.contains(x)).collect();
        // omega_s = sign * omega_b omega_rest
        let (_, odd) = sort_with_sign(&b.iter().chain(&rest).copied().collect::<Vec<_>>())
            .expect("distinct indices");
        let mut out = OSElement::zero(s.len());
        for k in 1..circuit.len() {
            let mut tuple: Vec<usize> = circuit
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &x)| x)
                .collect();
            tuple.extend(&rest);
            let Some((sorted, odd_t)) = sort_with_sign(&tuple) else {
                continue;
            };
            let negative = (k % 2 == 0) ^ odd ^ odd_t;
            let sign = if negative { -Q::one() } else { Q::one() };
            let sub = reduce_sorted(m, &sorted, memo);
            out.add_scaled(&sub, &sign);
        }
        out
    } else {
        OSElement::monomial(s.to_vec(), Q::one())
    };
    memo.insert(s.to_vec(), result.clone());
    result
}

/// Reduces every term of an element to the nbc basis.
pub fn reduce(m: &Matroid, element: &OSElement) -> OSElement {
    let mut memo = HashMap::new();
    let mut out = OSElement::zero(element.degree());
    for (mono, c) in element.terms() {
        let Some((sorted, odd)) = sort_with_sign(mono) else {
            continue;
        };
        let r = reduce_sorted(m, &sorted, &mut memo);
        out.add_scaled(&r, &if odd { -c.clone() } else { c.clone() });
    }
    out
}

/// Product in the Orlik-Solomon algebra, in nbc normal form.
pub fn multiply(m: &Matroid, a: &OSElement, b: &OSElement) -> OSElement {
    reduce(m, &a.wedge_unreduced(b))
}
