use crate::matrixforms::field::Field;
use crate::{Error, Result};

/// A square matrix with exact entries, row-major, 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> ExactMatrix<E> {
    pub fn filled(n: usize, value: E) -> Self {
        ExactMatrix {
            n,
            entries: vec![value; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: bad.len(),
            });
        }
        Ok(ExactMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.n {
            for i in 0..self.n {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { n: self.n, entries }
    }

    pub fn map<T, M: FnMut(&E) -> T>(&self, f: M) -> ExactMatrix<T> {
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<E: Clone + PartialEq> ExactMatrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        ExactMatrix::filled(n, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = ExactMatrix::zeros(field, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// `E_{jk}`.
    pub fn unit<F: Field<Elem = E>>(field: &F, n: usize, j: usize, k: usize) -> Self {
        let mut m = ExactMatrix::zeros(field, n);
        m.set(j, k, field.one());
        m
    }

    pub fn diagonal<F: Field<Elem = E>>(field: &F, diag: Vec<E>) -> Self {
        let mut m = ExactMatrix::zeros(field, diag.len());
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = ExactMatrix::zeros(field, n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(l, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let acc = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, acc);
                }
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        ExactMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn is_upper_triangular<F: Field<Elem = E>>(&self, field: &F) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| field.is_zero(self.get(i, j))))
    }

    pub fn is_unipotent_upper<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.is_upper_triangular(field) && (0..self.n).all(|i| *self.get(i, i) == field.one())
    }

    /// Inverse of an upper-triangular matrix with unit diagonal, by back
    /// substitution.
    pub fn unipotent_inverse<F: Field<Elem = E>>(&self, field: &F) -> Result<Self> {
        if !self.is_unipotent_upper(field) {
            return Err(Error::Contract(
                "matrix is not upper triangular with unit diagonal".into(),
            ));
        }
        let n = self.n;
        let mut inv = ExactMatrix::identity(field, n);
        // Column j of the inverse: solve U x = e_j from the bottom up.
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = field.zero();
                for l in i + 1..=j {
                    acc = field.add(&acc, &field.mul(self.get(i, l), inv.get(l, j)));
                }
                inv.set(i, j, field.neg(&acc));
            }
        }
        Ok(inv)
    }
}

impl<E: std::fmt::Display> ExactMatrix<E> {
    /// Rows on separate lines, entries right-aligned to a common width and
    /// separated by one space.
    pub fn render(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells.chunks(self.n.max(1)).take(self.n) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}
