use super::{Field, FieldElement, GfError};

/// A dense matrix over a [`Field`], stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl MatrixGF {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> MatrixGF {
        MatrixGF {
            field: field.clone(),
            rows,
            cols,
            entries: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> MatrixGF {
        let mut m = MatrixGF::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> MatrixGF {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "rows must have equal length"
        );
        MatrixGF {
            field: field.clone(),
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, c: FieldElement) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let v = self.at(r, j);
            self.set(r, j, f.mul(v, c));
        }
    }

    /// dst -= c * src
    fn row_axpy(&mut self, dst: usize, src: usize, c: FieldElement) {
        let f = self.field.clone();
        for j in 0..self.cols {
            let s = self.at(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.sub_at(dst, j, f.mul(c, s));
            self.set(dst, j, v);
        }
    }

    fn sub_at(&self, r: usize, c: usize, v: FieldElement) -> FieldElement {
        self.field.sub(self.at(r, c), v)
    }

    /// Reduced row-echelon form and rank.
    ///
    /// Pivots are the first nonzero entry scanning down each column in
    /// order, pivot rows are normalized to leading 1, and all other
    /// entries in pivot columns are cleared, so the output is the canonical
    /// representative of the row space.
    pub fn rref(&self) -> (MatrixGF, usize) {
        let mut m = self.clone();
        let f = m.field.clone();
        let mut pivot = 0usize;
        for col in 0..m.cols {
            if pivot == m.rows {
                break;
            }
            let Some(r) = (pivot..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot, r);
            let lead = m.at(pivot, col);
            if lead != FieldElement::ONE {
                m.scale_row(pivot, f.inv(lead));
            }
            for r2 in 0..m.rows {
                if r2 != pivot {
                    let c = m.at(r2, col);
                    if !c.is_zero() {
                        m.row_axpy(r2, pivot, c);
                    }
                }
            }
            pivot += 1;
        }
        (m, pivot)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Vertical stack.
    pub fn stack(&self, other: &MatrixGF) -> Result<MatrixGF, GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(GfError::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatrixGF {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Rank of the vertical stack, i.e. the dimension of the sum of the row
    /// spaces.
    pub fn stack_rank(&self, other: &MatrixGF) -> Result<usize, GfError> {
        Ok(self.stack(other)?.rank())
    }

    /// Keeps only the first `n` rows.
    pub fn truncate_rows(mut self, n: usize) -> MatrixGF {
        assert!(n <= self.rows);
        self.entries.truncate(n * self.cols);
        self.rows = n;
        self
    }
}
