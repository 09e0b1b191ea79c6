use super::Matrix;
use crate::scalar::Field;

/// Incrementally maintained reduced row echelon basis.
///
/// Rows are kept sorted by pivot column, every pivot is `1`, and each pivot
/// column is zero in all other rows. Inserting the same vectors in any order
/// yields the same canonical basis.
#[derive(Clone, Debug)]
pub struct EchelonBasis<T> {
    dim: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> EchelonBasis<T> {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBasis { dim: ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<'a>(ambient_dim: usize, rows: impl IntoIterator<Item = &'a [T]>) -> Self {
        let mut b = Self::new(ambient_dim);
        for r in rows {
            b.insert(r.to_vec());
        }
        b
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Subtracts the basis component of `v` in place; the remainder is zero
    /// iff `v` was in the span.
    pub fn reduce(&self, v: &mut [T]) {
        debug_assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    x.sub_mul_assign(&c, r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<T>) -> bool {
        self.reduce(&mut v);
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[q].inv();
        for x in v.iter_mut().skip(q) {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for row in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let c = row[q].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(q) {
                if !r.is_zero() {
                    x.sub_mul_assign(&c, r);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        true
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix::from_rows(self.dim, self.rows.clone()).expect("basis rows have ambient length")
    }

    pub fn into_matrix(self) -> Matrix<T> {
        Matrix::from_rows(self.dim, self.rows).expect("basis rows have ambient length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rref;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_batch_rref(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 0..7)) {
            let m = Matrix::<Rational>::from_rows(5, rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect()).unwrap();
            let mut b = EchelonBasis::new(5);
            for r in m.clone().into_rows().into_iter().rev() {
                b.insert(r);
            }
            let (r, p) = rref(&m);
            prop_assert_eq!(b.to_matrix(), r);
            prop_assert_eq!(b.pivots(), &p[..]);
        }
    }
}
