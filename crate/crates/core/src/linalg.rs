//! Exact row reduction over a [`Field`].

use crate::gf::Field;

/// Incrementally maintained row-echelon basis of a subspace of `F^n`.
///
/// Rows are kept reduced against each other's pivots, first nonzero entry
/// normalized to 1.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `row` against the basis; the result is zero iff `row` lies in
    /// the span.
    pub fn reduce(&self, field: &Field, row: &[u8]) -> Vec<u8> {
        assert_eq!(row.len(), self.width);
        let mut v = row.to_vec();
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &b) in v.iter_mut().zip(basis_row) {
                    *x = field.sub_raw(*x, field.mul_raw(c, b));
                }
            }
        }
        v
    }

    pub fn contains(&self, field: &Field, row: &[u8]) -> bool {
        self.reduce(field, row).iter().all(|&x| x == 0)
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, field: &Field, row: &[u8]) -> bool {
        let mut v = self.reduce(field, row);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = field.inv_raw(v[p]);
        for x in v.iter_mut() {
            *x = field.mul_raw(*x, inv);
        }
        for r in self.rows.iter_mut() {
            let c = r[p];
            if c != 0 {
                for (x, &b) in r.iter_mut().zip(&v) {
                    *x = field.sub_raw(*x, field.mul_raw(c, b));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Rank of the matrix with the given rows.
pub fn rank(field: &Field, rows: &[Vec<u8>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut e = EchelonBasis::new(first.len());
    for r in rows {
        e.insert(field, r);
    }
    e.rank()
}

/// `Σ_k x_k u_k v_k`.
pub fn weighted_dot(field: &Field, x: &[u8], u: &[u8], v: &[u8]) -> u8 {
    x.iter()
        .zip(u)
        .zip(v)
        .fold(0, |acc, ((&a, &b), &c)| field.add_raw(acc, field.mul_raw(a, field.mul_raw(b, c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_gf4() {
        let f = Field::with_order(4).unwrap();
        // rows: (1, α), (α, α+1) = α·(1, α), (0, 1)
        let rows = vec![vec![1, 2], vec![2, 3], vec![0, 1]];
        assert_eq!(f.mul_raw(2, 2), 3);
        assert_eq!(rank(&f, &rows[..2]), 1);
        assert_eq!(rank(&f, &rows), 2);
        assert_eq!(rank(&f, &[]), 0);
    }

    #[test]
    fn insert_reports_growth() {
        let f = Field::with_order(9).unwrap();
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&f, &[1, 2, 0]));
        assert!(!e.insert(&f, &[2, f.mul_raw(2, 2), 0]));
        assert!(!e.insert(&f, &[0, 0, 0]));
        assert!(e.insert(&f, &[0, 0, 5]));
        assert!(e.contains(&f, &[1, 2, 7]));
        assert_eq!(e.rank(), 2);
    }
}
