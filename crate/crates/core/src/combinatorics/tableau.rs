use crate::combinatorics::jordan::{BlockOrder, JordanData};
use crate::combinatorics::permutation::Permutation;
use crate::{Error, Result};

/// Location of a box: `tableau` counts from the bottom of the stack, `row`
/// from the top row of its tableau, `col` from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxCell {
    pub tableau: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauInfo {
    /// Index into [`JordanData::blocks`].
    pub block: usize,
    pub label: String,
    pub shape: Vec<usize>,
    /// Position of the tableau's first (lowest-numbered) box.
    pub start: usize,
}

/// The stacked Young diagrams `λ_X` of an operator, with its boxes numbered
/// by the base filling.
///
/// Positions run through the tableaux bottom to top; inside one tableau
/// column by column from the left, and inside a column from the bottom up.
/// Consequently box `p` lies to the left of, or directly below, box `q` of
/// the same tableau exactly when `p < q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTableau {
    boxes: Vec<BoxCell>,
    right: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    tableaux: Vec<TableauInfo>,
}

impl MultiTableau {
    pub fn new(jordan: &JordanData, order: &BlockOrder) -> Result<Self> {
        let arrangement = order.arrange(jordan)?;
        let mut boxes = Vec::with_capacity(jordan.n());
        let mut tableaux = Vec::with_capacity(arrangement.len());
        // grid[t][row][col] = position
        let mut grids: Vec<Vec<Vec<usize>>> = Vec::with_capacity(arrangement.len());

        for (t, &block_idx) in arrangement.iter().enumerate() {
            let block = &jordan.blocks()[block_idx];
            let shape = block.shape();
            tableaux.push(TableauInfo {
                block: block_idx,
                label: block.label().to_string(),
                shape: shape.to_vec(),
                start: boxes.len(),
            });
            let mut grid: Vec<Vec<usize>> = shape.iter().map(|&d| vec![0; d]).collect();
            for col in 0..shape[0] {
                let height = shape.iter().take_while(|&&d| d > col).count();
                for (row, cells) in grid.iter_mut().enumerate().take(height).rev() {
                    cells[col] = boxes.len();
                    boxes.push(BoxCell {
                        tableau: t,
                        row,
                        col,
                    });
                }
            }
            grids.push(grid);
        }

        let n = boxes.len();
        let mut right = vec![None; n];
        let mut left = vec![None; n];
        for (p, b) in boxes.iter().enumerate() {
            if let Some(&q) = grids[b.tableau][b.row].get(b.col + 1) {
                right[p] = Some(q);
                left[q] = Some(p);
            }
        }
        Ok(MultiTableau {
            boxes,
            right,
            left,
            tableaux,
        })
    }

    /// The multitableau in the default vertical order.
    pub fn from_jordan(jordan: &JordanData) -> Self {
        MultiTableau::new(jordan, &BlockOrder::AscendingSize)
            .expect("default block order is always admissible")
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[BoxCell] {
        &self.boxes
    }

    /// Tableaux from bottom to top.
    pub fn tableaux(&self) -> &[TableauInfo] {
        &self.tableaux
    }

    #[inline]
    pub fn right_neighbor(&self, p: usize) -> Option<usize> {
        self.right[p]
    }

    #[inline]
    pub fn left_neighbor(&self, p: usize) -> Option<usize> {
        self.left[p]
    }

    #[inline]
    pub fn tableau_of(&self, p: usize) -> usize {
        self.boxes[p].tableau
    }

    #[inline]
    pub fn same_tableau(&self, p: usize, q: usize) -> bool {
        self.boxes[p].tableau == self.boxes[q].tableau
    }

    /// Horizontally adjacent `(left, right)` position pairs.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.right
            .iter()
            .enumerate()
            .filter_map(|(p, r)| r.map(|q| (p, q)))
    }

    /// The filling whose `i`-th box contains `i`.
    pub fn base_filling(&self) -> Filling<'_> {
        Filling {
            tableau: self,
            w: Permutation::identity(self.n()),
        }
    }

    pub fn filling(&self, w: Permutation) -> Result<Filling<'_>> {
        if w.len() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: w.len(),
            });
        }
        Ok(Filling { tableau: self, w })
    }

    /// Draws the diagram with `labels[p]` (0-based) in box `p`, 1-based on
    /// screen. Tableaux are printed top to bottom separated by a blank line,
    /// rows top to bottom.
    pub fn render(&self, labels: &[usize]) -> String {
        let width = self.n().to_string().len();
        let mut grids: Vec<Vec<Vec<usize>>> = self
            .tableaux
            .iter()
            .map(|t| t.shape.iter().map(|&d| vec![0; d]).collect())
            .collect();
        for (p, b) in self.boxes.iter().enumerate() {
            grids[b.tableau][b.row][b.col] = labels[p] + 1;
        }
        let blocks: Vec<String> = grids
            .iter()
            .rev()
            .map(|grid| {
                grid.iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| format!("{v:>width$}"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })
            .collect();
        let mut out = blocks.join("\n\n");
        out.push('\n');
        out
    }
}

/// A labelling of the boxes of a multitableau by `1..=n`, equivalently the
/// permutation `w` with `w(i)` written in the `i`-th box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling<'t> {
    tableau: &'t MultiTableau,
    w: Permutation,
}

impl<'t> Filling<'t> {
    pub fn tableau(&self) -> &'t MultiTableau {
        self.tableau
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn into_permutation(self) -> Permutation {
        self.w
    }

    /// Label of box `p` (0-based).
    #[inline]
    pub fn label(&self, p: usize) -> usize {
        self.w.apply(p)
    }

    /// Position of the box holding label `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.w
            .images()
            .iter()
            .position(|&x| x == v)
            .expect("label in range")
    }

    pub fn render(&self) -> String {
        self.tableau.render(self.w.images())
    }
}
