//! Fox free derivatives.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::Result;
use crate::free_group::{check_index, FreeWord, Letter};

use super::laurent::LaurentPoly;

/// Element of the group ring `Z[F_n]`: reduced words with integer
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<Vec<Letter>, i64>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> GroupRingElement {
        GroupRingElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, word: &FreeWord, coefficient: i64) {
        self.add_letters(word.letters().to_vec(), coefficient);
    }

    fn add_letters(&mut self, letters: Vec<Letter>, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(letters) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (FreeWord, i64)> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| (FreeWord::from_reduced(k.clone(), self.rank), *c))
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_letters(k.clone(), *c);
        }
        out
    }

    /// `g * self` for a group element `g`.
    pub fn left_multiply(&self, g: &FreeWord) -> Result<GroupRingElement> {
        let mut out = GroupRingElement::zero(self.rank);
        for (k, c) in &self.terms {
            let word = g.multiply(&FreeWord::from_reduced(k.clone(), self.rank))?;
            out.add_letters(word.letters().to_vec(), *c);
        }
        Ok(out)
    }

    /// Image under the ring map sending every generator to `t`.
    pub fn evaluate_t(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in &self.terms {
            let e: i64 = k.iter().map(|l| i64::from(l.sign())).sum();
            out = &out + &LaurentPoly::monomial(*c, e);
        }
        out
    }
}

/// `d w / d x_index` in `Z[F_n]`.
///
/// Each `x_i` contributes the prefix before it, each `x_i^-1` contributes minus
/// the prefix through it.
pub fn fox_derivative(w: &FreeWord, index: usize) -> Result<GroupRingElement> {
    check_index(index, w.rank())?;
    let mut out = GroupRingElement::zero(w.rank());
    let letters = w.letters();
    for (p, l) in letters.iter().enumerate() {
        if l.index() != index {
            continue;
        }
        if l.is_positive() {
            out.add_letters(letters[..p].to_vec(), 1);
        } else {
            out.add_letters(letters[..=p].to_vec(), -1);
        }
    }
    Ok(out)
}

/// `d w / d x_index` evaluated at `x_j -> t` for every `j`, without building
/// the group ring element.
pub fn fox_eval_t(w: &FreeWord, index: usize) -> Result<LaurentPoly> {
    check_index(index, w.rank())?;
    let mut out = LaurentPoly::zero();
    let mut degree = 0i64;
    for l in w.letters() {
        if l.is_positive() {
            if l.index() == index {
                out.add_term(degree, 1.into());
            }
            degree += 1;
        } else {
            degree -= 1;
            if l.index() == index {
                out.add_term(degree, (-1).into());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(text: &str, rank: usize) -> FreeWord {
        FreeWord::parse(text, rank).unwrap()
    }

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn conjugate_block_entries() {
        for k in [-3i64, -2, -1, 1, 2, 3] {
            let w = FreeWord::from_syllables(&[(1, k), (2, 1), (1, -k)], 2).unwrap();
            assert_eq!(fox_eval_t(&w, 1).unwrap(), p(&[(0, 1), (k, -1)]));
            assert_eq!(fox_eval_t(&w, 2).unwrap(), p(&[(k, 1)]));
        }
    }

    #[test]
    fn wada2_block_entries() {
        let w = fw("x2 X3 x2", 4);
        assert_eq!(fox_eval_t(&w, 2).unwrap(), p(&[(0, 2)]));
        assert_eq!(fox_eval_t(&w, 3).unwrap(), p(&[(0, -1)]));
        assert!(fox_eval_t(&w, 1).unwrap().is_zero());
    }

    #[test]
    fn formal_derivative_of_generators() {
        let d = fox_derivative(&fw("x1", 2), 1).unwrap();
        assert_eq!(
            d.terms().collect::<Vec<_>>(),
            vec![(FreeWord::identity(2), 1)]
        );
        let d = fox_derivative(&fw("X1", 2), 1).unwrap();
        assert_eq!(d.terms().collect::<Vec<_>>(), vec![(fw("X1", 2), -1)]);
        assert!(fox_derivative(&fw("x2", 2), 1).unwrap().is_zero());
        assert!(fox_derivative(&fw("x2", 2), 3).is_err());
    }

    #[test]
    fn formal_and_direct_evaluation_agree() {
        let w = fw("x1 x1 X2 x3 X1 x2 x2 X3 x1", 3);
        for i in 1..=3 {
            assert_eq!(
                fox_derivative(&w, i).unwrap().evaluate_t(),
                fox_eval_t(&w, i).unwrap()
            );
        }
    }
}
