use super::Poly;
use crate::error::{Error, Result};

/// Row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    /// Panics if the entry count does not match the shape.
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(rows * cols, entries.len(), "entry count does not match shape");
        Self { rows, cols, entries }
    }

    /// Builds from nested rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Entry (j,k) computed by `f`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            for k in 0..cols {
                entries.push(f(j, k));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, j: usize, k: usize) -> &Poly {
        &self.entries[j * self.cols + k]
    }
}

/// Exact determinant by Bareiss fraction-free elimination. Pivot rows are
/// chosen by lowest degree to keep intermediate entries small.
pub fn determinant(m: &PolyMatrix) -> Result<Poly> {
    if m.rows != m.cols {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a: Vec<Vec<Poly>> = m.entries.chunks(n).map(<[Poly]>::to_vec).collect();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n.saturating_sub(1) {
        let Some(p) = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].degree()) else {
            return Ok(Poly::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut t = &pivot_row[k] * &row[j];
                if !factor.is_zero() {
                    t = &t - &(&factor * &pivot_row[j]);
                }
                row[j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}
