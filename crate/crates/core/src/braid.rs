//! Braid words over `s1..s(n-1)`.
//!
//! A [`BraidWord`] is a word in the free group on the braid generators: it is
//! freely reduced on construction, but braid relations are never applied
//! implicitly. Deciding whether two words represent the same braid is the job
//! of [`crate::dehornoy`] or of a faithful representation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_error, Error, Result};
use crate::free_group::{push_reduced, reduce_letters, Letter};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

/// How `s1` occurs in a braid word.
///
/// `Nonnegative` and `Free` together make up the words usually called
/// s1-nonnegative; `Free` and `Negative` make up the s1-nonpositive ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sigma1Class {
    /// At least one `s1`, no `s1^-1`.
    Nonnegative,
    /// At least one `s1^-1`, no `s1`.
    Negative,
    /// No `s1^{+-1}` at all.
    Free,
    /// Both signs present.
    Mixed,
}

fn check_strands(strands: usize) -> Result<()> {
    if strands < 2 {
        Err(Error::TooFewStrands(strands))
    } else {
        Ok(())
    }
}

fn check_generator(index: usize, strands: usize) -> Result<()> {
    if index == 0 || index >= strands {
        Err(Error::IndexOutOfRange {
            index,
            rank: strands - 1,
        })
    } else {
        Ok(())
    }
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<BraidWord> {
        check_strands(strands)?;
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    pub fn from_letters(
        letters: impl IntoIterator<Item = Letter>,
        strands: usize,
    ) -> Result<BraidWord> {
        check_strands(strands)?;
        let mut out = Vec::new();
        for l in letters {
            check_generator(l.index(), strands)?;
            push_reduced(&mut out, l);
        }
        Ok(BraidWord {
            strands,
            letters: out,
        })
    }

    /// `2` is `s2`, `-2` is `s2^-1`. Zero entries are rejected.
    pub fn from_signed(gens: &[i32], strands: usize) -> Result<BraidWord> {
        let letters = gens
            .iter()
            .map(|&g| {
                Letter::from_signed(g).ok_or(Error::IndexOutOfRange {
                    index: 0,
                    rank: strands.saturating_sub(1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::from_letters(letters, strands)
    }

    /// The caller guarantees the letters are reduced and in range.
    pub(crate) fn from_reduced(letters: Vec<Letter>, strands: usize) -> BraidWord {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        debug_assert!(letters.iter().all(|l| l.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn generator(index: usize, strands: usize) -> Result<BraidWord> {
        BraidWord::from_letters([Letter::pos(index)], strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let letters = reduce_letters(self.letters.iter().chain(&other.letters).copied());
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Sum of the signs of all letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.sign())).sum()
    }

    /// Smallest generator index that occurs.
    pub fn lowest_index(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.index()).min()
    }

    pub fn classify_sigma1(&self) -> Sigma1Class {
        let mut pos = false;
        let mut neg = false;
        for l in self.letters.iter().filter(|l| l.index() == 1) {
            if l.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
        }
        match (pos, neg) {
            (true, false) => Sigma1Class::Nonnegative,
            (false, true) => Sigma1Class::Negative,
            (false, false) => Sigma1Class::Free,
            (true, true) => Sigma1Class::Mixed,
        }
    }

    /// Replaces every `s_i` by `s_(i+by)` and the strand count by `strands + by`.
    pub fn shift_indices(&self, by: i64) -> Result<BraidWord> {
        let strands = self.strands as i64 + by;
        if strands < 2 {
            return Err(Error::TooFewStrands(strands.max(0) as usize));
        }
        let strands = strands as usize;
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let index = l.index() as i64 + by;
                if index < 1 || index as usize >= strands {
                    return Err(Error::IndexOutOfRange {
                        index: index.max(0) as usize,
                        rank: strands - 1,
                    });
                }
                Ok(l.with_index(index as usize))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { strands, letters })
    }

    /// Parses `1 -2 3`, `1,-2,3` or `s1 S2 s3`. Blank or `e` is the empty word.
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
        check_strands(strands)?;
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() == 1 && tokens[0] == "e" {
            return BraidWord::identity(strands);
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for (pos, tok) in tokens.iter().enumerate() {
            let position = pos + 1;
            let signed: i64 = if let Some(rest) = tok.strip_prefix('s') {
                rest.parse()
                    .map_err(|_| parse_error(position, tok, "bad generator index"))?
            } else if let Some(rest) = tok.strip_prefix('S') {
                -rest
                    .parse::<i64>()
                    .map_err(|_| parse_error(position, tok, "bad generator index"))?
            } else {
                tok.parse()
                    .map_err(|_| parse_error(position, tok, "expected a signed integer"))?
            };
            let index = signed.unsigned_abs() as usize;
            if signed == 0 || index >= strands {
                return Err(parse_error(
                    position,
                    tok,
                    format!("generator index out of range 1..={}", strands - 1),
                ));
            }
            letters.push(Letter::new(index, signed > 0));
        }
        BraidWord::from_letters(letters, strands)
    }
}

/// Defining relators of `B_n`: `s_i s_j s_i^-1 s_j^-1` for `|i-j| > 1`
/// (with `i < j`) and `s_i s_(i+1) s_i s_(i+1)^-1 s_i^-1 s_(i+1)^-1`.
pub fn relators(strands: usize) -> Result<Vec<BraidWord>> {
    check_strands(strands)?;
    let gens = strands - 1;
    let mut out = Vec::new();
    for i in 1..gens {
        let j = i + 1;
        out.push(BraidWord::from_reduced(
            vec![
                Letter::pos(i),
                Letter::pos(j),
                Letter::pos(i),
                Letter::neg(j),
                Letter::neg(i),
                Letter::neg(j),
            ],
            strands,
        ));
    }
    for i in 1..=gens {
        for j in (i + 2)..=gens {
            out.push(BraidWord::from_reduced(
                vec![
                    Letter::pos(i),
                    Letter::pos(j),
                    Letter::neg(i),
                    Letter::neg(j),
                ],
                strands,
            ));
        }
    }
    Ok(out)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}

impl fmt::Display for Sigma1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sigma1Class::Nonnegative => "NONNEGATIVE",
            Sigma1Class::Negative => "NEGATIVE",
            Sigma1Class::Free => "FREE",
            Sigma1Class::Mixed => "MIXED",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn relator_counts() {
        assert!(relators(2).unwrap().is_empty());
        assert_eq!(relators(3).unwrap(), vec![b("1 2 1 -2 -1 -2", 3)]);
        let r4 = relators(4).unwrap();
        assert_eq!(r4.len(), 3);
        assert!(r4.contains(&b("1 2 1 -2 -1 -2", 4)));
        assert!(r4.contains(&b("2 3 2 -3 -2 -3", 4)));
        assert!(r4.contains(&b("1 3 -1 -3", 4)));
        // (n-2) braid relators plus C(n-2, 2) commutators
        assert_eq!(relators(6).unwrap().len(), 4 + 6);
        assert_eq!(relators(1), Err(Error::TooFewStrands(1)));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(b("1 -2 1", 3).classify_sigma1(), Sigma1Class::Nonnegative);
        assert_eq!(b("2 -3", 4).classify_sigma1(), Sigma1Class::Free);
        assert_eq!(b("-1 2 1", 3).classify_sigma1(), Sigma1Class::Mixed);
        assert_eq!(b("-1 2", 3).classify_sigma1(), Sigma1Class::Negative);
        assert_eq!(
            BraidWord::identity(3).unwrap().classify_sigma1(),
            Sigma1Class::Free
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(b("2 3", 4).shift_indices(-1).unwrap(), b("1 2", 3));
        let w = b("1 -2 1", 3);
        assert_eq!(w.shift_indices(0).unwrap(), w);
        assert_eq!(b("1", 3).shift_indices(1).unwrap(), b("2", 4));
        assert!(b("1 2", 3).shift_indices(-1).is_err());
    }

    #[test]
    fn construction_reduces_freely_only() {
        assert_eq!(b("1 2 -2 -1 2", 3), b("2", 3));
        // braid relations are left alone
        assert_ne!(b("1 2 1", 3), b("2 1 2", 3));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(b("s1 S2, 1", 3), b("1 -2 1", 3));
        assert_eq!(b("", 3), BraidWord::identity(3).unwrap());
        assert_eq!(b("e", 3).to_string(), "e");
        assert_eq!(b("1 -2", 3).to_string(), "1 -2");
        assert!(matches!(
            BraidWord::parse("1 3", 3),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            BraidWord::parse("1 0", 3),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(BraidWord::parse("1", 1).is_err());
    }
}
