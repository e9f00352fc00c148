use std::collections::HashSet;

use crate::{Error, Result};

/// One generalized eigenspace: an opaque eigenvalue label and the Jordan
/// block sizes `d_1 ≥ d_2 ≥ … ≥ d_k` of the operator restricted to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanBlock {
    label: String,
    shape: Vec<usize>,
}

impl JordanBlock {
    pub fn new(label: impl Into<String>, shape: Vec<usize>) -> Result<Self> {
        let label = label.into();
        if shape.is_empty() {
            return Err(Error::InvalidJordan(format!(
                "block {label:?} has no parts"
            )));
        }
        if shape.contains(&0) {
            return Err(Error::InvalidJordan(format!(
                "block {label:?} has a zero part: {shape:?}"
            )));
        }
        if shape.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidJordan(format!(
                "block {label:?}: parts {shape:?} are not weakly decreasing"
            )));
        }
        Ok(JordanBlock { label, shape })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.iter().sum()
    }
}

/// The conjugacy class of an operator as an ordered multipartition.
///
/// Numeric eigenvalues never enter the combinatorics; only whether two
/// boxes share a label does.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanData {
    blocks: Vec<JordanBlock>,
}

impl JordanData {
    pub fn new(blocks: Vec<JordanBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidJordan("no blocks".into()));
        }
        let mut labels = HashSet::new();
        for b in &blocks {
            if !labels.insert(b.label.as_str()) {
                return Err(Error::InvalidJordan(format!(
                    "duplicate eigenvalue label {:?}",
                    b.label
                )));
            }
        }
        Ok(JordanData { blocks })
    }

    /// A nilpotent operator with the given Jordan block sizes.
    pub fn nilpotent(shape: Vec<usize>) -> Result<Self> {
        JordanData::new(vec![JordanBlock::new("0", shape)?])
    }

    /// `n` distinct eigenvalues, each with a single 1×1 block.
    pub fn regular_semisimple(n: usize) -> Self {
        JordanData {
            blocks: (0..n)
                .map(|i| JordanBlock {
                    label: i.to_string(),
                    shape: vec![1],
                })
                .collect(),
        }
    }

    /// Convenience constructor with labels `0, 1, 2, …`.
    pub fn from_shapes(shapes: Vec<Vec<usize>>) -> Result<Self> {
        JordanData::new(
            shapes
                .into_iter()
                .enumerate()
                .map(|(i, s)| JordanBlock::new(i.to_string(), s))
                .collect::<Result<_>>()?,
        )
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(JordanBlock::size).sum()
    }

    /// Every block is a single column, i.e. the operator is diagonalizable.
    pub fn is_semisimple(&self) -> bool {
        self.blocks.iter().all(|b| b.shape.iter().all(|&d| d == 1))
    }

    /// A single eigenvalue with a single Jordan block.
    pub fn is_regular_nilpotent(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].shape.len() == 1
    }
}

/// Vertical arrangement of the tableaux of a multitableau, listed bottom to
/// top as indices into [`JordanData::blocks`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum BlockOrder {
    /// Ascending total size from the bottom, ties broken by input order.
    #[default]
    AscendingSize,
    /// Bottom to top in input order.
    Input,
    Explicit(Vec<usize>),
}

impl BlockOrder {
    pub fn arrange(&self, jordan: &JordanData) -> Result<Vec<usize>> {
        let k = jordan.blocks().len();
        match self {
            BlockOrder::AscendingSize => {
                let mut idx: Vec<usize> = (0..k).collect();
                idx.sort_by_key(|&i| jordan.blocks()[i].size());
                Ok(idx)
            }
            BlockOrder::Input => Ok((0..k).collect()),
            BlockOrder::Explicit(order) => {
                let mut sorted = order.clone();
                sorted.sort_unstable();
                if sorted != (0..k).collect::<Vec<_>>() {
                    return Err(Error::InvalidJordan(format!(
                        "block order {order:?} is not a permutation of the {k} blocks"
                    )));
                }
                Ok(order.clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_blocks() {
        assert!(JordanBlock::new("a", vec![1, 3]).is_err());
        assert!(JordanBlock::new("a", vec![]).is_err());
        assert!(JordanBlock::new("a", vec![2, 0]).is_err());
        let a = JordanBlock::new("a", vec![1]).unwrap();
        assert!(JordanData::new(vec![a.clone(), a]).is_err());
        assert!(JordanData::new(vec![]).is_err());
    }

    #[test]
    fn ascending_order_breaks_ties_by_input() {
        let j = JordanData::from_shapes(vec![vec![3, 1], vec![1, 1], vec![2]]).unwrap();
        assert_eq!(
            BlockOrder::AscendingSize.arrange(&j).unwrap(),
            vec![1, 2, 0]
        );
        assert_eq!(j.n(), 8);
        assert!(BlockOrder::Explicit(vec![0, 0, 1]).arrange(&j).is_err());
    }
}
