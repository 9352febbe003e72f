use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Q};

/// Exact weights `lambda_1..lambda_n`; `lambda_inf = -sum lambda_i` is always
/// derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    values: Vec<Q>,
}

impl WeightVector {
    pub fn new(values: Vec<Q>) -> Self {
        WeightVector { values }
    }

    /// Checks the length against the number of hyperplanes.
    pub fn for_arrangement(values: Vec<Q>, n: usize) -> Result<Self> {
        if values.len() != n {
            return Err(Error::WeightLength {
                expected: n,
                found: values.len(),
            });
        }
        Ok(Self::new(values))
    }

    /// Parses a JSON array of rational strings such as `["1/2", "-3"]`.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Vec<String> =
            serde_json::from_str(text).map_err(|e| Error::InvalidFile(format!("weights: {e}")))?;
        let values = raw
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_>>()?;
        Ok(Self::new(values))
    }

    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(n, d)| crate::rational::q_frac(n, d))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// `lambda_i` for a 1-based index.
    pub fn get(&self, index: usize) -> &Q {
        &self.values[index - 1]
    }

    pub fn infinity(&self) -> Q {
        -self.values.iter().fold(Q::zero(), |acc, v| acc + v)
    }

    /// `lambda(X)` for a set of 1-based indices.
    pub fn sum_over(&self, indices: &[usize]) -> Q {
        indices.iter().fold(Q::zero(), |acc, &i| acc + self.get(i))
    }

    /// Weights seen by the reordered arrangement whose position `j` holds
    /// original hyperplane `order[j]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self::new(order.iter().map(|&i| self.get(i).clone()).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }
}

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    #[test]
    fn infinity_is_negated_sum() {
        let w = WeightVector::from_fractions(&[(1, 2), (1, 3), (1, 6)]);
        assert_eq!(w.infinity(), q(-1));
        assert_eq!(w.sum_over(&[1, 3]), q_frac(2, 3));
        assert_eq!(w.permuted(&[3, 1, 2]).values()[0], q_frac(1, 6));
    }

    #[test]
    fn parse_and_length() {
        let w = WeightVector::parse(r#"["1/2", "-3", "0"]"#).unwrap();
        assert_eq!(w.to_strings(), vec!["1/2", "-3", "0"]);
        assert!(WeightVector::for_arrangement(w.values().to_vec(), 2).is_err());
        assert!(WeightVector::parse(r#"["1/0"]"#).is_err());
        assert!(WeightVector::parse("{}").is_err());
    }
}
