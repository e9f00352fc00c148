use std::fmt;

use crate::{Error, Result};

/// A permutation `w` of `{0, …, n-1}`, stored by its images `w(i)`.
///
/// Paired with a multitableau, `w(i)` is the label written in the `i`-th box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn from_one_based(values: &[usize]) -> Result<Self> {
        let images = values
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation(format!("{values:?} contains 0")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The longest element `i ↦ n-1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `|{(i, j) : i < j, w(i) > w(j)}|`, the dimension of the Schubert cell.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    pub fn descents(&self) -> usize {
        self.images.windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// Advances to the lexicographically next permutation; returns `false`
    /// (leaving `self` untouched) at the last one.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.images;
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return false;
        };
        let pivot = i - 1;
        let j = (i..w.len()).rev().find(|&j| w[j] > w[pivot]).unwrap();
        w.swap(pivot, j);
        w[i..].reverse();
        true
    }

    /// All permutations of `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some(Permutation::identity(n));
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            if succ.next_lex() {
                next = Some(succ);
            }
            Some(current)
        })
    }
}

impl fmt::Display for Permutation {
    /// One-line notation, 1-based: `[3,1,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.images.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl serde::Serialize for Permutation {
    /// The 1-based image sequence.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.images.iter().map(|v| v + 1))
    }
}
