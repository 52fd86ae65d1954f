//! Magnus matrices of braid automorphisms over `Z[t, t^-1]`.
//!
//! The Magnus matrix of an automorphism `f` of `F_n` is its Fox Jacobian
//! `J[a][b] = d f(x_a) / d x_b`, evaluated under `x_j -> t` for every `j`.
//! For type (1) the generator `s_i` gives the identity except for the block
//! `[[1-t^k, t^k], [1, 0]]` at `(i, i)`, and for type (2) the block
//! `[[2, -1], [1, 0]]`.
//!
//! When every image in a group of automorphisms evaluates to `t`, the chain
//! rule makes `J` multiplicative: with the first-letter-acts-first
//! convention, the matrix of `u v` is `J(u) * J(v)`. Type (3) images do not
//! have that property (`x_i^2 x_(i+1)` evaluates to `t^3`), so no Magnus matrix
//! is defined for it.

mod fox;
mod laurent;
mod matrix;

pub use fox::{fox_derivative, fox_eval_t, GroupRingElement};
pub use laurent::LaurentPoly;
pub use matrix::LaurentMatrix;

use crate::braid::BraidWord;
use crate::endo::FreeEndo;
use crate::error::{Error, Result};
use crate::reps::{RepKind, Representation};

pub type MagnusMatrix = LaurentMatrix;

/// Fox Jacobian of any endomorphism, evaluated at `x_j -> t`.
pub fn jacobian(f: &FreeEndo) -> LaurentMatrix {
    let n = f.rank();
    let mut m = LaurentMatrix::zero(n);
    for a in 0..n {
        for b in 0..n {
            let entry = fox_eval_t(&f.images()[a], b + 1).expect("index within rank");
            m.set(a, b, entry);
        }
    }
    m
}

fn check_kind(kind: RepKind) -> Result<()> {
    kind.validate()?;
    if kind.has_magnus_matrix() {
        Ok(())
    } else {
        Err(Error::NoMagnusMatrix(kind.to_string()))
    }
}

/// The Jacobian of the automorphism representing `w`.
pub fn magnus_matrix(kind: RepKind, w: &BraidWord) -> Result<MagnusMatrix> {
    check_kind(kind)?;
    let f = Representation::shared(kind, w.strands())?.represent(w)?;
    Ok(jacobian(&f))
}

/// Same matrix built as the product of generator Jacobians, left to right.
pub fn magnus_matrix_by_product(kind: RepKind, w: &BraidWord) -> Result<MagnusMatrix> {
    check_kind(kind)?;
    let rep = Representation::shared(kind, w.strands())?;
    let mut acc = LaurentMatrix::identity(w.strands());
    for &l in w.letters() {
        acc = acc.mul(&jacobian(rep.generator(l)))?;
    }
    Ok(acc)
}

pub fn determinant_invariant(kind: RepKind, w: &BraidWord) -> Result<LaurentPoly> {
    Ok(magnus_matrix(kind, w)?.determinant())
}

/// Closed form of the determinant: `(-1)^e t^(k e)` for type (1) with
/// parameter `k` and exponent sum `e`, and `1` for type (2).
pub fn expected_determinant(kind: RepKind, w: &BraidWord) -> Result<LaurentPoly> {
    check_kind(kind)?;
    let e = w.exponent_sum();
    Ok(match kind.wada1_parameter() {
        Some(k) => {
            let sign = if e % 2 == 0 { 1 } else { -1 };
            LaurentPoly::monomial(sign, k * e)
        }
        None => LaurentPoly::one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn with_block(n: usize, i: usize, block: [[LaurentPoly; 2]; 2]) -> LaurentMatrix {
        let mut m = LaurentMatrix::identity(n);
        for (r, row) in block.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                m.set(i - 1 + r, i - 1 + c, v);
            }
        }
        m
    }

    #[test]
    fn wada1_generator_blocks() {
        for k in [-3, -2, -1, 1, 2, 3] {
            for n in 2..=5 {
                for i in 1..n {
                    let expected = with_block(
                        n,
                        i,
                        [
                            [p(&[(0, 1), (k, -1)]), p(&[(k, 1)])],
                            [p(&[(0, 1)]), p(&[])],
                        ],
                    );
                    let w = BraidWord::generator(i, n).unwrap();
                    assert_eq!(magnus_matrix(RepKind::Wada1(k), &w).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn wada2_generator_blocks() {
        for n in 2..=5 {
            for i in 1..n {
                let expected = with_block(
                    n,
                    i,
                    [[p(&[(0, 2)]), p(&[(0, -1)])], [p(&[(0, 1)]), p(&[])]],
                );
                let w = BraidWord::generator(i, n).unwrap();
                assert_eq!(magnus_matrix(RepKind::Wada2, &w).unwrap(), expected);
            }
        }
    }

    #[test]
    fn empty_word_gives_identity() {
        for kind in [RepKind::Artin, RepKind::Wada1(-2), RepKind::Wada2] {
            let e = BraidWord::identity(4).unwrap();
            assert_eq!(magnus_matrix(kind, &e).unwrap(), LaurentMatrix::identity(4));
        }
    }

    #[test]
    fn wada3_has_no_magnus_matrix() {
        assert!(matches!(
            magnus_matrix(RepKind::Wada3, &bw("1", 3)),
            Err(Error::NoMagnusMatrix(_))
        ));
    }

    #[test]
    fn determinant_examples() {
        for k in [-3, -1, 1, 2, 3] {
            assert_eq!(
                determinant_invariant(RepKind::Wada1(k), &bw("1", 3)).unwrap(),
                p(&[(k, -1)])
            );
        }
        assert!(
            determinant_invariant(RepKind::Wada2, &bw("1 -2 2 2 1 -1", 3))
                .unwrap()
                .is_one()
        );
        assert!(determinant_invariant(RepKind::Wada1(2), &bw("1 -2", 3))
            .unwrap()
            .is_one());
    }

    #[test]
    fn product_route_matches_jacobian() {
        let w = bw("1 -2 3 1 1 -3 2", 4);
        for kind in [RepKind::Artin, RepKind::Wada1(-2), RepKind::Wada2] {
            assert_eq!(
                magnus_matrix(kind, &w).unwrap(),
                magnus_matrix_by_product(kind, &w).unwrap()
            );
        }
    }
}
