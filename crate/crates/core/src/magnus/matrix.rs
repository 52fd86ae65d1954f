use std::fmt;

use crate::error::{Error, Result};

use super::laurent::LaurentPoly;

/// Square matrix over `Z[t, t^-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> LaurentMatrix {
        LaurentMatrix {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    /// Rows must all have length equal to the number of rows.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<LaurentMatrix> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(LaurentMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Zero-based.
    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.n + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = LaurentMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = &out.entries[i * n + j] + &(a * b);
                    out.entries[i * n + j] = cur;
                }
            }
        }
        Ok(out)
    }

    /// Fraction-free (Bareiss) elimination. Every division is exact in the
    /// Laurent ring.
    pub fn determinant(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m: Vec<Vec<LaurentPoly>> = self.rows().map(<[_]>::to_vec).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return LaurentPoly::zero();
                };
                m.swap(k, r);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Laplace expansion along the first row. Exponential; for small `n`.
    pub fn determinant_cofactor(&self) -> LaurentPoly {
        let cols: Vec<usize> = (0..self.n).collect();
        self.cofactor_rec(0, &cols)
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        if cols.is_empty() {
            return LaurentPoly::one();
        }
        let mut acc = LaurentPoly::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.cofactor_rec(row + 1, &rest);
            acc = if pos % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }
}

impl fmt::Display for LaurentMatrix {
    /// Right-aligned text grid, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.chunks(self.n.max(1)).take(self.n).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn block(k: i64) -> LaurentMatrix {
        LaurentMatrix::from_rows(vec![
            vec![p(&[(0, 1), (k, -1)]), p(&[(k, 1)])],
            vec![LaurentPoly::one(), LaurentPoly::zero()],
        ])
        .unwrap()
    }

    #[test]
    fn block_determinant() {
        for k in [-3, -1, 1, 2, 5] {
            let m = block(k);
            assert_eq!(m.determinant(), p(&[(k, -1)]));
            assert_eq!(m.determinant_cofactor(), p(&[(k, -1)]));
        }
    }

    #[test]
    fn identity_determinant() {
        for n in 0..6 {
            assert!(LaurentMatrix::identity(n).determinant().is_one());
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let a = block(2);
        let b = LaurentMatrix::from_rows(vec![
            vec![p(&[(0, 2)]), p(&[(0, -1)])],
            vec![p(&[(-1, 1), (3, 1)]), p(&[(1, 4)])],
        ])
        .unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.determinant(), &a.determinant() * &b.determinant());
    }

    #[test]
    fn pivoting_and_singular() {
        // zero in the top-left corner forces a row swap
        let m = LaurentMatrix::from_rows(vec![
            vec![LaurentPoly::zero(), p(&[(1, 1)]), LaurentPoly::zero()],
            vec![p(&[(0, 1), (1, 1)]), LaurentPoly::zero(), p(&[(0, 2)])],
            vec![LaurentPoly::one(), p(&[(-2, 3)]), p(&[(0, 1)])],
        ])
        .unwrap();
        assert_eq!(m.determinant(), m.determinant_cofactor());
        let singular = LaurentMatrix::from_rows(vec![
            vec![p(&[(1, 1)]), p(&[(2, 1)])],
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
        ])
        .unwrap();
        assert!(singular.determinant().is_zero());
    }

    #[test]
    fn dimension_errors() {
        assert!(LaurentMatrix::identity(2)
            .mul(&LaurentMatrix::identity(3))
            .is_err());
        assert!(LaurentMatrix::from_rows(vec![vec![LaurentPoly::one()], vec![]]).is_err());
    }
}
