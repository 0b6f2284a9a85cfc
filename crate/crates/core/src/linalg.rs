//! Row reduction over GF(q).

use crate::field::FieldRef;

/// Row space of a set of vectors, kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    field: FieldRef,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: &FieldRef, n: usize) -> Self {
        Self {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a>(
        field: &FieldRef,
        n: usize,
        rows: impl IntoIterator<Item = &'a [u32]>,
    ) -> Self {
        let mut space = Self::new(field, n);
        for r in rows {
            space.insert(r);
        }
        space
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows in reduced echelon form, sorted by pivot.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.n, "vector length");
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[p]).expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank(field: &FieldRef, n: usize, rows: &[Vec<u32>]) -> usize {
    RowSpace::from_rows(field, n, rows.iter().map(Vec::as_slice)).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::gf;

    #[test]
    fn rref_is_canonical() {
        let f = gf(3);
        let a = RowSpace::from_rows(&f, 3, [&[1u32, 2, 0][..], &[0, 1, 1], &[1, 0, 1]]);
        let b = RowSpace::from_rows(&f, 3, [&[1u32, 0, 1][..], &[2, 1, 0]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a, b);
        assert!(a.contains(&[2, 1, 0]));
        assert!(!a.contains(&[0, 0, 1]));
    }

    #[test]
    fn rank_over_extension() {
        let f = Field::of_order(4).unwrap();
        // (1, a) and (a, a^2) are dependent
        let a = 2u32;
        let a2 = f.mul(a, a);
        assert_eq!(rank(&f, 2, &[vec![1, a], vec![a, a2]]), 1);
        assert_eq!(rank(&f, 2, &[vec![1, a], vec![a, 1]]), 2);
        assert_eq!(rank(&f, 2, &[]), 0);
    }
}
