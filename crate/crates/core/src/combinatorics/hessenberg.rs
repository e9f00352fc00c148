use std::fmt;

use crate::{Error, Result};

/// A Hessenberg function `h`: nondecreasing with `i ≤ h(i) ≤ n`.
///
/// Stored 0-based, so `at(i) = h(i+1) - 1`. Every inequality used by the
/// dimension formulas compares a label against an `h` value, which is
/// invariant under the shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    /// Builds `h` from its 1-based values `h(1), …, h(n)`.
    pub fn new(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        for (idx, &v) in one_based.iter().enumerate() {
            let index = idx + 1;
            if idx > 0 && one_based[idx - 1] > v {
                return Err(Error::InvalidHessenberg {
                    index,
                    reason: format!(
                        "not nondecreasing: h({}) = {} > h({index}) = {v}",
                        index - 1,
                        one_based[idx - 1]
                    ),
                });
            }
            if v < index {
                return Err(Error::InvalidHessenberg {
                    index,
                    reason: format!("h({index}) = {v} < {index}"),
                });
            }
            if v > n {
                return Err(Error::InvalidHessenberg {
                    index,
                    reason: format!("h({index}) = {v} > n = {n}"),
                });
            }
        }
        Ok(HessenbergFunction {
            values: one_based.iter().map(|v| v - 1).collect(),
        })
    }

    /// `h ≡ n`: the full flag variety.
    pub fn full(n: usize) -> Self {
        HessenbergFunction {
            values: vec![n.saturating_sub(1); n],
        }
    }

    /// `h(i) = i`: the Springer fiber.
    pub fn identity(n: usize) -> Self {
        HessenbergFunction {
            values: (0..n).collect(),
        }
    }

    /// `h(i) = min(i + b, n)`.
    pub fn banded(n: usize, b: usize) -> Self {
        HessenbergFunction {
            values: (0..n).map(|i| (i + b).min(n - 1)).collect(),
        }
    }

    /// Every Hessenberg function on `n` letters (Catalan-many), in
    /// lexicographic order of values.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            let i = prefix.len();
            if i == n {
                out.push(HessenbergFunction {
                    values: prefix.clone(),
                });
                return;
            }
            let lo = prefix.last().copied().unwrap_or(0).max(i);
            for v in lo..n {
                prefix.push(v);
                rec(n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::with_capacity(n), &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h` evaluated 0-based.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.values.iter().map(|v| v + 1).collect()
    }

    /// Whether `E_{jk}` lies in the Hessenberg space, i.e. `j ≤ h(k)`.
    #[inline]
    pub fn contains_entry(&self, j: usize, k: usize) -> bool {
        j <= self.values[k]
    }

    /// `h(i) ≤ other(i)` for every `i`.
    pub fn is_dominated_by(&self, other: &HessenbergFunction) -> bool {
        self.n() == other.n() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    pub fn is_full(&self) -> bool {
        self.values.iter().all(|&v| v + 1 == self.n())
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
