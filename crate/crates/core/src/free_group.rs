//! Reduced words in the free group `F_n` on generators `x1..xn`.
//!
//! A [`FreeWord`] is always stored freely reduced and carries its rank, so
//! every binary operation can refuse to mix words from different free groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_error, Error, Result};

/// A signed generator: `x_i` or `x_i^-1`.
///
/// Stored as a nonzero `i32`, positive for `x_i` and negative for its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    /// Panics if `index` is zero or does not fit in an `i32`.
    pub fn new(index: usize, positive: bool) -> Letter {
        assert!(index >= 1, "generator indices start at 1");
        let i = i32::try_from(index).expect("generator index overflows i32");
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Letter {
        Letter::new(index, true)
    }

    pub fn neg(index: usize) -> Letter {
        Letter::new(index, false)
    }

    /// Builds a letter from its signed encoding (`3` is `x3`, `-3` is `X3`).
    pub fn from_signed(raw: i32) -> Option<Letter> {
        (raw != 0).then_some(Letter(raw))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// `+1` or `-1`.
    #[inline]
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    #[inline]
    pub fn signed(self) -> i32 {
        self.0
    }

    /// Same sign, new index.
    pub(crate) fn with_index(self, index: usize) -> Letter {
        Letter::new(index, self.is_positive())
    }
}

/// Pushes `letter` onto a reduced stack, cancelling against the top.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    if stack.last() == Some(&letter.inverse()) {
        stack.pop();
    } else {
        stack.push(letter);
    }
}

pub(crate) fn reduce_letters(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out = Vec::new();
    for l in letters {
        push_reduced(&mut out, l);
    }
    out
}

pub(crate) fn check_index(index: usize, rank: usize) -> Result<()> {
    if index == 0 || index > rank {
        Err(Error::IndexOutOfRange { index, rank })
    } else {
        Ok(())
    }
}

/// A freely reduced word in `F_rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> FreeWord {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(index: usize, rank: usize) -> Result<FreeWord> {
        check_index(index, rank)?;
        Ok(FreeWord {
            rank,
            letters: vec![Letter::pos(index)],
        })
    }

    /// `x_index^exponent`.
    pub fn power(index: usize, exponent: i64, rank: usize) -> Result<FreeWord> {
        check_index(index, rank)?;
        let letter = Letter::new(index, exponent > 0);
        Ok(FreeWord {
            rank,
            letters: vec![letter; exponent.unsigned_abs() as usize],
        })
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>, rank: usize) -> Result<FreeWord> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut out = Vec::new();
        for l in letters {
            check_index(l.index(), rank)?;
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    /// Inverse of [`FreeWord::syllables`]; zero exponents are skipped.
    pub fn from_syllables(syllables: &[(usize, i64)], rank: usize) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for &(index, exp) in syllables {
            check_index(index, rank)?;
            let l = Letter::new(index, exp > 0);
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        FreeWord::reduce(letters, rank)
    }

    /// The caller guarantees `letters` is reduced and in range.
    pub(crate) fn from_reduced(letters: Vec<Letter>, rank: usize) -> FreeWord {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        debug_assert!(letters.iter().all(|l| l.index() <= rank));
        FreeWord { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        // Cancellation only happens across the boundary.
        let common = self
            .letters
            .iter()
            .rev()
            .zip(other.letters.iter())
            .take_while(|(a, b)| **a == b.inverse())
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * common);
        letters.extend_from_slice(&self.letters[..self.len() - common]);
        letters.extend_from_slice(&other.letters[common..]);
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &FreeWord) -> Result<FreeWord> {
        by.inverse().multiply(self)?.multiply(by)
    }

    /// Number of letters `x_index^{+-1}`.
    pub fn count_occurrences(&self, index: usize) -> Result<usize> {
        check_index(index, self.rank)?;
        Ok(self.letters.iter().filter(|l| l.index() == index).count())
    }

    /// Maximal runs of one generator, merged into `(index, exponent)`.
    ///
    /// Since the word is reduced, each run has a single sign.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((i, e)) if *i == l.index() => *e += i64::from(l.sign()),
                _ => out.push((l.index(), i64::from(l.sign()))),
            }
        }
        out
    }

    /// Image in `Z^rank` under abelianization.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for l in &self.letters {
            v[l.index() - 1] += i64::from(l.sign());
        }
        v
    }

    /// Parses `x1 X2 x3^-2` style text. `e`, `1` or blank is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<FreeWord> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() == 1 && (tokens[0] == "e" || tokens[0] == "1") {
            return Ok(FreeWord::identity(rank));
        }
        let mut letters = Vec::new();
        for (pos, tok) in tokens.iter().enumerate() {
            let position = pos + 1;
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| parse_error(position, tok, "bad exponent"))?;
                    (b, exp)
                }
                None => (*tok, 1),
            };
            let (positive, digits) = if let Some(rest) = base.strip_prefix('x') {
                (true, rest)
            } else if let Some(rest) = base.strip_prefix('X') {
                (false, rest)
            } else {
                return Err(parse_error(position, tok, "expected xN or XN"));
            };
            let index: usize = digits
                .parse()
                .map_err(|_| parse_error(position, tok, "bad generator index"))?;
            if index == 0 || index > rank {
                return Err(parse_error(
                    position,
                    tok,
                    format!("generator index out of range 1..={rank}"),
                ));
            }
            let letter = Letter::new(index, positive == (exp > 0));
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        FreeWord::reduce(letters, rank)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.index())
        } else {
            write!(f, "X{}", self.index())
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
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

    #[test]
    fn reduce_examples() {
        let r = FreeWord::reduce([Letter::pos(1), Letter::pos(2), Letter::neg(2)], 2).unwrap();
        assert_eq!(r, w("x1", 2));
        assert!(FreeWord::reduce([], 2).unwrap().is_empty());
        let r = FreeWord::reduce([Letter::neg(1), Letter::pos(1), Letter::pos(1)], 1).unwrap();
        assert_eq!(r, w("x1", 1));
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert_eq!(
            FreeWord::reduce([Letter::pos(3)], 2),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            w("x1 x2", 3).multiply(&w("X2 x3", 3)).unwrap(),
            w("x1 x3", 3)
        );
        let a = w("x1 X2 x3 x3", 3);
        assert!(a.multiply(&a.inverse()).unwrap().is_empty());
        assert_eq!(
            w("x1^2", 2).multiply(&w("x2", 2)).unwrap(),
            w("x1 x1 x2", 2)
        );
    }

    #[test]
    fn multiply_rank_mismatch() {
        assert_eq!(
            w("x1", 2).multiply(&w("x1", 3)),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("x1 x2", 2).inverse(), w("X2 X1", 2));
        assert!(FreeWord::identity(2).inverse().is_empty());
        assert_eq!(w("x1^5", 1).inverse(), w("x1^-5", 1));
    }

    #[test]
    fn count_occurrences_examples() {
        assert_eq!(w("x1^2 x2", 2).count_occurrences(1).unwrap(), 2);
        for k in 1..5i64 {
            let word = FreeWord::from_syllables(&[(1, k), (2, 1), (1, -k)], 2).unwrap();
            assert_eq!(word.count_occurrences(1).unwrap(), 2 * k as usize);
        }
        assert_eq!(w("x2 x3", 3).count_occurrences(1).unwrap(), 0);
        assert!(w("x2", 2).count_occurrences(3).is_err());
    }

    #[test]
    fn syllable_examples() {
        assert_eq!(
            w("x1^2 X2 x1", 2).syllables(),
            vec![(1, 2), (2, -1), (1, 1)]
        );
        assert!(FreeWord::identity(3).syllables().is_empty());
        assert_eq!(w("X3 X3 X3", 3).syllables(), vec![(3, -3)]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("x1^-2 x2", 2).to_string(), "X1 X1 x2");
        assert_eq!(w("", 2).to_string(), "e");
        assert_eq!(w("e", 2), FreeWord::identity(2));
        assert_eq!(w("X1^-1", 2), w("x1", 2));
        let err = FreeWord::parse("x1 y2", 2).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 2, .. }));
        assert!(matches!(
            FreeWord::parse("x1 x4", 3),
            Err(Error::Parse { position: 2, .. })
        ));
    }
}
