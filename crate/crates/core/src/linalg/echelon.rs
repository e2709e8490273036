use std::collections::BTreeMap;

use super::field::Field;

/// A sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Incrementally built row echelon form.
///
/// Every stored row has leading coefficient one at its pivot column and is
/// reduced only at its leading entry; [`Echelon::rref`] back-substitutes on
/// demand. Pivots are chosen by least column index, so the resulting
/// reduced form is canonical for the spanned space.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseRow<F::Elem>>,
    pivot_row: Vec<Option<u32>>,
    nnz: usize,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols], nnz: 0 }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.nnz
    }

    /// Rough heap footprint in bytes.
    pub fn bytes_estimate(&self) -> usize {
        self.nnz * (self.field.elem_bytes() + 8) + self.ncols * 8
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Stored rows, in insertion order.
    pub fn rows(&self) -> &[SparseRow<F::Elem>] {
        &self.rows
    }

    fn to_map(row: SparseRow<F::Elem>) -> BTreeMap<usize, F::Elem> {
        row.into_iter().collect()
    }

    fn subtract_multiple(&self, acc: &mut BTreeMap<usize, F::Elem>, coef: &F::Elem, pivot: usize) {
        let prow = &self.rows[self.pivot_row[pivot].expect("pivot exists") as usize];
        for (c, e) in &prow[1..] {
            let delta = self.field.mul(coef, e);
            match acc.get_mut(c) {
                Some(v) => {
                    let nv = self.field.sub(v, &delta);
                    if self.field.is_zero(&nv) {
                        acc.remove(c);
                    } else {
                        *v = nv;
                    }
                }
                None => {
                    acc.insert(*c, self.field.neg(&delta));
                }
            }
        }
    }

    /// Eliminates leading entries until the leading column is not a pivot.
    pub fn reduce_leading(&self, row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let mut acc = Self::to_map(row);
        loop {
            let Some((&col, _)) = acc.iter().next() else {
                return Vec::new();
            };
            if self.pivot_row[col].is_none() {
                return acc.into_iter().collect();
            }
            let coef = acc.remove(&col).expect("present");
            self.subtract_multiple(&mut acc, &coef, col);
        }
    }

    /// Eliminates every pivot column from `row`.
    pub fn reduce_fully(&self, row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let mut acc = Self::to_map(row);
        let mut out = Vec::new();
        let mut cursor = 0;
        while let Some((&col, _)) = acc.range(cursor..).next() {
            let coef = acc.remove(&col).expect("present");
            if self.pivot_row[col].is_some() {
                self.subtract_multiple(&mut acc, &coef, col);
            } else {
                out.push((col, coef));
            }
            cursor = col + 1;
        }
        out
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<F::Elem>) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let reduced = self.reduce_leading(row);
        if reduced.is_empty() {
            return false;
        }
        let inv = self.field.inv(&reduced[0].1);
        let normalized: SparseRow<F::Elem> = reduced.into_iter().map(|(c, e)| (c, self.field.mul(&inv, &e))).collect();
        let pivot = normalized[0].0;
        self.nnz += normalized.len();
        self.pivot_row[pivot] = Some(self.rows.len() as u32);
        self.rows.push(normalized);
        true
    }

    pub fn contains(&self, row: SparseRow<F::Elem>) -> bool {
        self.reduce_leading(row).is_empty()
    }

    /// Reduced row echelon form, rows sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseRow<F::Elem>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i][0].0);
        order
            .into_iter()
            .map(|i| {
                let row = &self.rows[i];
                let mut out = vec![row[0].clone()];
                out.extend(self.reduce_fully(row[1..].to_vec()));
                out
            })
            .collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank<F: Field>(field: F, ncols: usize, rows: impl IntoIterator<Item = SparseRow<F::Elem>>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : <x, r> = 0 for every row r}` for rows given in RREF.
pub fn orthogonal_complement<F: Field>(
    field: &F,
    ncols: usize,
    rref: &[SparseRow<F::Elem>],
) -> Vec<SparseRow<F::Elem>> {
    // x_free = e_j, x_pivot(i) = -R[i][j]
    let mut by_col: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); ncols];
    let mut is_pivot = vec![false; ncols];
    for row in rref {
        let p = row[0].0;
        is_pivot[p] = true;
        for (c, e) in &row[1..] {
            by_col[*c].push((p, field.neg(e)));
        }
    }
    (0..ncols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut v = std::mem::take(&mut by_col[j]);
            v.push((j, field.one()));
            v.sort_by_key(|(c, _)| *c);
            v
        })
        .collect()
}
