use super::Scalar;

/// Column-major sparse matrix; each column keeps its nonzero entries sorted by row.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    columns: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![Vec::new(); cols] }
    }

    pub fn from_dense(dense: &[Vec<T>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(rows, cols);
        for (r, row) in dense.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                m.add_entry(r, c, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, value: T) {
        assert!(row < self.rows, "row {row} out of range");
        let column = &mut self.columns[col];
        match column.binary_search_by_key(&row, |(r, _)| *r) {
            Ok(pos) => {
                let sum = column[pos].1.add(&value);
                if sum.is_zero() {
                    column.remove(pos);
                } else {
                    column[pos].1 = sum;
                }
            }
            Err(pos) if !value.is_zero() => column.insert(pos, (row, value)),
            Err(_) => {}
        }
    }

    pub fn column(&self, col: usize) -> &[(usize, T)] {
        &self.columns[col]
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        let column = &self.columns[col];
        match column.binary_search_by_key(&row, |(r, _)| *r) {
            Ok(pos) => column[pos].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Dense submatrix on the given rows and columns, in the given orders.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<T>> {
        let mut pos = vec![usize::MAX; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            pos[r] = i;
        }
        let mut out = vec![vec![T::zero(); cols.len()]; rows.len()];
        for (j, &c) in cols.iter().enumerate() {
            for (r, x) in &self.columns[c] {
                if pos[*r] != usize::MAX {
                    out[pos[*r]][j] = x.clone();
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        let mut out = SparseMatrix::new(self.rows, self.cols());
        for (c, column) in self.columns.iter().enumerate() {
            for (r, x) in column {
                out.add_entry(*r, c, f(x));
            }
        }
        out
    }

    pub fn try_map<U: Scalar, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<SparseMatrix<U>, E> {
        let mut out = SparseMatrix::new(self.rows, self.cols());
        for (c, column) in self.columns.iter().enumerate() {
            for (r, x) in column {
                out.add_entry(*r, c, f(x)?);
            }
        }
        Ok(out)
    }

    /// Product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!(self.cols(), rhs.rows, "inner dimensions differ");
        let mut out = SparseMatrix::new(self.rows, rhs.cols());
        for (c, column) in rhs.columns.iter().enumerate() {
            for (k, y) in column {
                for (r, x) in &self.columns[*k] {
                    out.add_entry(*r, c, x.mul(y));
                }
            }
        }
        out
    }
}

/// `0 -> V_k -> ... -> V_1 -> V_0 -> 0` with `maps[l - 1]: V_l -> V_{l-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<T> {
    dims: Vec<usize>,
    maps: Vec<SparseMatrix<T>>,
}

impl<T: Scalar> ChainComplex<T> {
    pub fn new(maps: Vec<SparseMatrix<T>>) -> Self {
        assert!(!maps.is_empty(), "a complex needs at least one map");
        let mut dims = vec![maps[0].rows()];
        for (l, m) in maps.iter().enumerate() {
            assert_eq!(m.rows(), dims[l], "map {} has the wrong target", l + 1);
            dims.push(m.cols());
        }
        ChainComplex { dims, maps }
    }

    /// Dimensions of `V_0, ..., V_k`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of maps, `k`.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// The map `V_level -> V_{level-1}`, for `1 <= level <= k`.
    pub fn map(&self, level: usize) -> &SparseMatrix<T> {
        &self.maps[level - 1]
    }

    pub fn maps(&self) -> &[SparseMatrix<T>] {
        &self.maps
    }

    pub fn map_entries<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ChainComplex<U> {
        ChainComplex { dims: self.dims.clone(), maps: self.maps.iter().map(|m| m.map(&f)).collect() }
    }

    pub fn try_map_entries<U: Scalar, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<ChainComplex<U>, E> {
        let maps = self.maps.iter().map(|m| m.try_map(&f)).collect::<Result<_, E>>()?;
        Ok(ChainComplex { dims: self.dims.clone(), maps })
    }

    /// Whether every composite `M_{l-1} M_l` is the zero matrix.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(l, &d)| if l % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
