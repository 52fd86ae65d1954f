//! Endomorphisms of `F_n` given by the images of the generators.
//!
//! Composition convention: [`FreeEndo::compose`]`(f, g)` is `f ∘ g`, i.e. `g`
//! is substituted first and `f` is applied to the result. A braid word
//! `w = a b c` is represented by `rho(c) ∘ rho(b) ∘ rho(a)`, so that reading
//! the word left to right applies the first letter's automorphism first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free_group::{push_reduced, FreeWord, Letter};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(rank: usize) -> FreeEndo {
        let images = (1..=rank)
            .map(|i| FreeWord::from_reduced(vec![Letter::pos(i)], rank))
            .collect();
        FreeEndo { rank, images }
    }

    /// `images[i]` is the image of `x_(i+1)`.
    pub fn from_images(images: Vec<FreeWord>) -> Result<FreeEndo> {
        let rank = images.len();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch {
                left: rank,
                right: bad.rank(),
            });
        }
        Ok(FreeEndo { rank, images })
    }

    /// `x_i -> x_i^-1` for every generator.
    pub fn inversion(rank: usize) -> FreeEndo {
        let images = (1..=rank)
            .map(|i| FreeWord::from_reduced(vec![Letter::neg(i)], rank))
            .collect();
        FreeEndo { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_index`.
    pub fn image(&self, index: usize) -> &FreeWord {
        &self.images[index - 1]
    }

    /// Substitutes and reduces in a single pass over a stack.
    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            let img = self.images[l.index() - 1].letters();
            if l.is_positive() {
                for &m in img {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in img.iter().rev() {
                    push_reduced(&mut out, m.inverse());
                }
            }
        }
        out
    }

    pub fn apply(&self, word: &FreeWord) -> Result<FreeWord> {
        if word.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: word.rank(),
            });
        }
        Ok(FreeWord::from_reduced(
            self.apply_letters(word.letters()),
            self.rank,
        ))
    }

    /// `self ∘ other`: the endomorphism `w -> self(other(w))`.
    pub fn compose(&self, other: &FreeEndo) -> Result<FreeEndo> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| FreeWord::from_reduced(self.apply_letters(w.letters()), self.rank))
            .collect();
        Ok(FreeEndo {
            rank: self.rank,
            images,
        })
    }

    /// Replaces `self` by `outer ∘ self`.
    pub(crate) fn post_apply(&mut self, outer: &FreeEndo) {
        debug_assert_eq!(outer.rank, self.rank);
        for w in &mut self.images {
            *w = FreeWord::from_reduced(outer.apply_letters(w.letters()), self.rank);
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| {
            let l = w.letters();
            l.len() == 1 && l[0] == Letter::pos(i + 1)
        })
    }

    pub fn equal(&self, other: &FreeEndo) -> Result<bool> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(self.images == other.images)
    }

    /// Total number of letters over all images.
    pub fn total_length(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, rank: usize) -> FreeWord {
        FreeWord::parse(text, rank).unwrap()
    }

    fn endo(images: &[&str]) -> FreeEndo {
        let n = images.len();
        FreeEndo::from_images(images.iter().map(|s| w(s, n)).collect()).unwrap()
    }

    #[test]
    fn apply_substitutes_and_reduces() {
        let artin = endo(&["x1 x2 X1", "x1"]);
        assert_eq!(artin.apply(&w("x1", 2)).unwrap(), w("x1 x2 X1", 2));
        assert!(artin.apply(&FreeWord::identity(2)).unwrap().is_empty());
        // x1 -> x1 x2 X1, x2 -> x1: the X1 x1 in the middle cancels
        assert_eq!(artin.apply(&w("x1 x2", 2)).unwrap(), w("x1 x2", 2));
        assert_eq!(artin.apply(&w("X1", 2)).unwrap(), w("x1 X2 X1", 2));
    }

    #[test]
    fn compose_order() {
        let f = endo(&["x1 x2", "x2"]);
        let g = endo(&["x2", "x1"]);
        // (f∘g)(x1) = f(x2) = x2, (f∘g)(x2) = f(x1) = x1 x2
        assert_eq!(f.compose(&g).unwrap(), endo(&["x2", "x1 x2"]));
        // (g∘f)(x1) = g(x1 x2) = x2 x1
        assert_eq!(g.compose(&f).unwrap(), endo(&["x2 x1", "x1"]));
        assert_eq!(f.compose(&FreeEndo::identity(2)).unwrap(), f);
    }

    #[test]
    fn artin_generator_and_inverse_cancel() {
        let pos = endo(&["x1 x2 X1", "x1"]);
        let neg = endo(&["x2", "X2 x1 x2"]);
        assert!(pos.compose(&neg).unwrap().is_identity());
        assert!(neg.compose(&pos).unwrap().is_identity());
    }

    #[test]
    fn identity_and_equality() {
        assert!(FreeEndo::identity(3).is_identity());
        assert!(!endo(&["x1 x2 X1", "x1"]).is_identity());
        let a = endo(&["x1 x2 X1", "x1", "x3"]);
        let b = endo(&["x1", "x2 x3 X2", "x2"]);
        assert!(a.equal(&a).unwrap());
        assert!(!a.equal(&b).unwrap());
        assert!(a.equal(&FreeEndo::identity(2)).is_err());
    }

    #[test]
    fn display_form() {
        let a = endo(&["x1 x2 X1", "x1", "x3"]);
        assert_eq!(a.to_string(), "x1 -> x1 x2 X1 ; x2 -> x1 ; x3 -> x3");
    }

    #[test]
    fn from_images_checks_rank() {
        assert!(FreeEndo::from_images(vec![w("x1", 1), w("x2", 2)]).is_err());
        assert_eq!(FreeEndo::from_images(vec![]), Err(Error::ZeroRank));
    }
}
