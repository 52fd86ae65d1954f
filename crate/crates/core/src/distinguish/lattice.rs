use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer lattice in `Z^dim`, held as its Hermite normal form.
///
/// The basis vectors are in echelon form: each has a positive pivot in a
/// column strictly to the right of the previous vector's pivot, and every
/// other basis vector has an entry in `0..pivot` in that column. This form is
/// unique, so two lattices are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RelatorLattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
}

fn axpy(target: &mut [i64], q: i64, source: &[i64]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t = t
            .checked_sub(q.checked_mul(*s).expect("lattice entry overflow"))
            .expect("lattice entry overflow");
    }
}

impl RelatorLattice {
    pub fn zero(dim: usize) -> RelatorLattice {
        RelatorLattice {
            dim,
            basis: Vec::new(),
        }
    }

    /// Lattice spanned by `generators`.
    pub fn from_generators(
        dim: usize,
        generators: impl IntoIterator<Item = Vec<i64>>,
    ) -> Result<RelatorLattice> {
        let mut rows = Vec::new();
        for g in generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: g.len(),
                });
            }
            if g.iter().any(|&x| x != 0) {
                rows.push(g);
            }
        }
        Ok(RelatorLattice {
            dim,
            basis: hermite_normal_form(rows, dim),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors in Hermite normal form (the columns of the basis matrix).
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Back-substitution against the echelon basis.
    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        let mut rest = v.to_vec();
        for b in &self.basis {
            let col = b
                .iter()
                .position(|&x| x != 0)
                .expect("basis vectors are nonzero");
            if rest[..col].iter().any(|&x| x != 0) {
                return Ok(false);
            }
            if rest[col] % b[col] != 0 {
                return Ok(false);
            }
            let q = rest[col] / b[col];
            axpy(&mut rest, q, b);
        }
        Ok(rest.iter().all(|&x| x == 0))
    }

    /// Lattice spanned by both.
    pub fn join(&self, other: &RelatorLattice) -> Result<RelatorLattice> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        RelatorLattice::from_generators(self.dim, self.basis.iter().chain(&other.basis).cloned())
    }
}

/// Row-style HNF of the nonzero `rows`, zero rows dropped.
fn hermite_normal_form(mut rows: Vec<Vec<i64>>, dim: usize) -> Vec<Vec<i64>> {
    let mut pivot_row = 0;
    for col in 0..dim {
        if pivot_row == rows.len() {
            break;
        }
        // Euclid on the column below pivot_row.
        while let Some(best) = (pivot_row..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs())
        {
            rows.swap(pivot_row, best);
            let pivot = rows[pivot_row].clone();
            let mut done = true;
            for row in rows.iter_mut().skip(pivot_row + 1) {
                if row[col] != 0 {
                    let q = row[col].div_euclid(pivot[col]);
                    axpy(row, q, &pivot);
                    if row[col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col] == 0 {
            continue;
        }
        if rows[pivot_row][col] < 0 {
            for x in rows[pivot_row].iter_mut() {
                *x = -*x;
            }
        }
        let pivot = rows[pivot_row].clone();
        for row in rows.iter_mut().take(pivot_row) {
            let q = row[col].div_euclid(pivot[col]);
            axpy(row, q, &pivot);
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(dim: usize, gens: &[&[i64]]) -> RelatorLattice {
        RelatorLattice::from_generators(dim, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn spans() {
        assert_eq!(lattice(2, &[&[1, -1]]).basis(), &[vec![1, -1]]);
        let l = lattice(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(l.basis(), &[vec![1, 0, 1], vec![0, 1, -1]]);
        assert_eq!(lattice(3, &[]).rank(), 0);
    }

    #[test]
    fn membership_examples() {
        assert!(lattice(2, &[&[1, -1], &[1, 1]]).contains(&[2, 0]).unwrap());
        assert!(!lattice(2, &[&[1, -1], &[1, 1]]).contains(&[1, 0]).unwrap());
        assert!(!lattice(3, &[&[1, 1, 0], &[1, 0, 1]])
            .contains(&[2, 0, 0])
            .unwrap());
        assert!(lattice(3, &[&[1, 1, 0], &[1, 0, 1]])
            .contains(&[0, 0, 0])
            .unwrap());
        assert!(RelatorLattice::zero(4).contains(&[0; 4]).unwrap());
        assert!(!RelatorLattice::zero(4).contains(&[0, 0, 1, 0]).unwrap());
        assert!(lattice(2, &[&[1, 1]]).contains(&[1, 1, 1]).is_err());
    }

    #[test]
    fn canonical_under_reordering_and_sign() {
        let a = lattice(3, &[&[2, 4, -6], &[0, 3, 3], &[1, 1, 1]]);
        let b = lattice(3, &[&[-1, -1, -1], &[-2, -4, 6], &[0, 3, 3], &[3, 3, 3]]);
        assert_eq!(a, b);
    }

    #[test]
    fn reduced_above_pivots() {
        let l = lattice(2, &[&[1, 5], &[0, 3]]);
        assert_eq!(l.basis(), &[vec![1, 2], vec![0, 3]]);
    }
}
