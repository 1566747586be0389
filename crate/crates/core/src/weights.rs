//! Weight vectors `(w0, ..., wn)` of a weighted projective space.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Pairwise coprime positive weights, at least two of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weights(Vec<u32>);

impl Weights {
    pub fn new(w: Vec<u32>) -> Result<Self> {
        if w.len() < 2 {
            return Err(Error::InvalidWeights(format!(
                "need at least 2 weights, got {}",
                w.len()
            )));
        }
        if let Some(pos) = w.iter().position(|&x| x == 0) {
            return Err(Error::InvalidWeights(format!("weight {pos} is zero")));
        }
        for i in 0..w.len() {
            for j in (i + 1)..w.len() {
                if w[i].gcd(&w[j]) != 1 {
                    return Err(Error::InvalidWeights(format!(
                        "weights {} and {} (positions {i}, {j}) are not coprime",
                        w[i], w[j]
                    )));
                }
            }
        }
        Ok(Weights(w))
    }

    /// The unweighted projective space of dimension `n`.
    pub fn unweighted(n: usize) -> Self {
        Weights(vec![1; n + 1])
    }

    /// Parses `"1,1,2"` or `"1 1 2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let mut w = Vec::with_capacity(parts.len());
        for p in parts {
            let v = p
                .parse::<u32>()
                .map_err(|_| Error::InvalidWeights(format!("not a positive integer: {p:?}")))?;
            w.push(v);
        }
        Weights::new(w)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Number of homogeneous coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Complex dimension `n` of the space.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().map(|&x| BigInt::from(x)).product()
    }

    pub fn is_unweighted(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }

    pub fn require_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::WrongDimension {
                expected,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
