use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangement::FlatLattice;

/// `chi(t) = sum over flats X of mu(V, X) t^dim(X)`.
///
/// `coefficients[k]` is the coefficient of `t^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_lattice(lattice: &FlatLattice) -> Self {
        let mu = mobius(lattice);
        let dim = lattice.dimension();
        let mut coefficients = vec![BigInt::zero(); dim + 1];
        for (flat, m) in lattice.flats().iter().zip(mu) {
            coefficients[dim - flat.codim()] += m;
        }
        CharPoly { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }
}

/// `mu(V, X)` for every flat, in lattice order.
pub fn mobius(lattice: &FlatLattice) -> Vec<BigInt> {
    let mut mu: Vec<BigInt> = Vec::with_capacity(lattice.len());
    for x in 0..lattice.len() {
        if x == lattice.ambient() {
            mu.push(BigInt::one());
            continue;
        }
        let below: BigInt = (0..x).filter(|&y| lattice.lt(y, x)).map(|y| &mu[y]).sum();
        mu.push(-below);
    }
    mu
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if abs.is_one() && k > 0 {
                String::new()
            } else {
                abs.to_string()
            };
            match k {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
