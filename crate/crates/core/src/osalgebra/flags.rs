use num_traits::Zero;

use super::{reduce, AomotoComplex, OSElement, WeightVector};
use crate::arrangement::FlatId;
use crate::complexes::{flag_of_base, Flag, FolkmanComplex};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::rational::Q;

/// `omega_lambda = sum lambda_i omega_i`.
pub fn omega_lambda(weights: &WeightVector) -> OSElement {
    let mut out = OSElement::zero(1);
    for (i, w) in weights.values().iter().enumerate() {
        out.add_term(vec![i + 1], w.clone());
    }
    out
}

/// `omega_lambda(X) = sum over H_i ⊇ X of lambda_i omega_i`.
pub fn omega_lambda_flat(m: &Matroid, weights: &WeightVector, flat: FlatId) -> Result<OSElement> {
    let mut out = OSElement::zero(1);
    for &i in m.lattice().flat(flat)?.support() {
        out.add_term(vec![i], weights.get(i).clone());
    }
    Ok(out)
}

/// `omega_lambda(X_1) ... omega_lambda(X_k)` expanded in the exterior algebra
/// without reduction.
pub fn flag_product(m: &Matroid, weights: &WeightVector, flag: &Flag) -> OSElement {
    flag.flats.iter().fold(OSElement::one(), |acc, &x| {
        let factor = omega_lambda_flat(m, weights, x).expect("flag flats belong to the lattice");
        acc.wedge_unreduced(&factor)
    })
}

/// `Xi(B)` as the expanded flag product, before straightening.
pub fn flag_form_unreduced(
    m: &Matroid,
    weights: &WeightVector,
    base: &[usize],
) -> Result<OSElement> {
    let flag = flag_of_base(m.lattice(), base)?;
    Ok(flag_product(m, weights, &flag))
}

/// `Xi(B)` in nbc normal form.
pub fn flag_form(m: &Matroid, weights: &WeightVector, base: &[usize]) -> Result<OSElement> {
    Ok(reduce(m, &flag_form_unreduced(m, weights, base)?))
}

/// Linear extension of `xi* -> omega_lambda(X_1) ... omega_lambda(X_r)` to a
/// cochain of `F` in the degree given by `cochain.len()` (reduced form).
pub fn upsilon(
    m: &Matroid,
    weights: &WeightVector,
    folkman: &FolkmanComplex,
    degree: isize,
    cochain: &[Q],
) -> OSElement {
    let simplices = folkman.complex.faces(degree);
    assert_eq!(simplices.len(), cochain.len(), "cochain length");
    let mut out = OSElement::zero((degree + 1) as usize);
    for (simplex, c) in simplices.iter().zip(cochain) {
        if c.is_zero() {
            continue;
        }
        let flag = folkman.flag_of_simplex(simplex);
        out.add_scaled(&flag_product(m, weights, &flag), c);
    }
    reduce(m, &out)
}

/// `upsilon(delta tau*)` lies in `omega_lambda ∧ A^(r-1)` for every
/// `(r-2)`-simplex `tau` of `F` (including the empty simplex when `r = 1`).
pub fn upsilon_respects_coboundaries(
    m: &Matroid,
    weights: &WeightVector,
    complex: &AomotoComplex,
    folkman: &FolkmanComplex,
) -> bool {
    let r = m.rank() as isize;
    if r == 0 {
        return true;
    }
    let delta = folkman.complex.coboundary(r - 2).to_dense();
    (0..delta.cols()).all(|j| {
        let column = delta.column(j);
        complex.in_image(&upsilon(m, weights, folkman, r - 1, &column))
    })
}
