//! Handle reduction, the braid word problem and the braid order.
//!
//! A `s_i`-handle is a subword `s_i^e v s_i^-e` where every letter of `v` has
//! index greater than `i`. Reducing it replaces each `s_(i+1)^d` in `v` by
//! `s_(i+1)^-e s_i^d s_(i+1)^e` and drops the two ends; the result represents
//! the same braid. A handle that contains no other handle can always be
//! reduced, and repeated reduction terminates.
//!
//! The reducer works on the lowest index `m` occurring in the word. It picks
//! the leftmost `s_m`-handle and, inside it, reduces the handle that ends
//! first, until no `s_m`-handle is left. The word is then `s_m`-definite:
//! all of its `s_m` letters share one sign. A nonempty definite word is never
//! trivial, so the empty word is the only trivial output.
//!
//! Order convention: `u < v` iff `u^-1 v` is definite with positive sign, so a
//! braid with positive main letters is greater than the identity.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free_group::{reduce_letters, Letter};

/// Default cap on the number of handle reductions.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A word whose lowest occurring generator appears with a single sign.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SigmaDefiniteForm {
    pub word: BraidWord,
    /// Lowest occurring index; `None` for the empty word.
    pub main_index: Option<usize>,
    /// `+1` or `-1`; `None` for the empty word.
    pub sign: Option<i32>,
    /// Handle reductions performed, free cancellations included.
    pub steps: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Trivial,
    Positive,
    Negative,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Trivial => "TRIVIAL",
            Verdict::Positive => "POSITIVE",
            Verdict::Negative => "NEGATIVE",
        })
    }
}

/// Position of the first `s_m`-handle `(start, end)` in a word whose lowest
/// index is `m`.
fn first_main_handle(word: &[Letter], m: usize) -> Option<(usize, usize)> {
    let mut last: Option<usize> = None;
    for (p, l) in word.iter().enumerate() {
        if l.index() != m {
            continue;
        }
        if let Some(q) = last {
            if word[q] == l.inverse() {
                return Some((q, p));
            }
        }
        last = Some(p);
    }
    None
}

/// The handle ending first inside `word[start..=end]`. It contains no other
/// handle, so it is reducible.
fn innermost_handle(word: &[Letter], start: usize, end: usize) -> (usize, usize) {
    for p in start + 1..=end {
        let j = word[p].index();
        let mut q = p - 1;
        while word[q].index() > j {
            // word[start] has the lowest index, so this stops by then
            q -= 1;
        }
        if word[q] == word[p].inverse() {
            return (q, p);
        }
    }
    unreachable!("word[start..=end] is itself a handle")
}

fn reduce_handle(word: &[Letter], q: usize, p: usize) -> Vec<Letter> {
    let i = word[q].index();
    let e_positive = word[q].is_positive();
    let mut out = Vec::with_capacity(word.len() + 2 * (p - q));
    out.extend_from_slice(&word[..q]);
    for &l in &word[q + 1..p] {
        if l.index() == i + 1 {
            out.push(Letter::new(i + 1, !e_positive));
            out.push(Letter::new(i, l.is_positive()));
            out.push(Letter::new(i + 1, e_positive));
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&word[p + 1..]);
    reduce_letters(out)
}

/// Reduces handles until the word is definite in its lowest index.
pub fn handle_reduce_with_budget(w: &BraidWord, budget: u64) -> Result<SigmaDefiniteForm> {
    let mut word = w.letters().to_vec();
    let mut steps = 0u64;
    loop {
        let Some(m) = word.iter().map(|l| l.index()).min() else {
            return Ok(SigmaDefiniteForm {
                word: BraidWord::from_reduced(word, w.strands()),
                main_index: None,
                sign: None,
                steps,
            });
        };
        let Some((start, end)) = first_main_handle(&word, m) else {
            let sign = word.iter().find(|l| l.index() == m).map(|l| l.sign());
            return Ok(SigmaDefiniteForm {
                word: BraidWord::from_reduced(word, w.strands()),
                main_index: Some(m),
                sign,
                steps,
            });
        };
        if steps >= budget {
            return Err(Error::BudgetExhausted { budget });
        }
        steps += 1;
        let (q, p) = innermost_handle(&word, start, end);
        word = reduce_handle(&word, q, p);
    }
}

pub fn handle_reduce(w: &BraidWord) -> Result<SigmaDefiniteForm> {
    handle_reduce_with_budget(w, DEFAULT_BUDGET)
}

impl SigmaDefiniteForm {
    pub fn verdict(&self) -> Verdict {
        match self.sign {
            None => Verdict::Trivial,
            Some(s) if s > 0 => Verdict::Positive,
            Some(_) => Verdict::Negative,
        }
    }
}

pub fn solve_word_problem_with_budget(w: &BraidWord, budget: u64) -> Result<Verdict> {
    Ok(handle_reduce_with_budget(w, budget)?.verdict())
}

pub fn solve_word_problem(w: &BraidWord) -> Result<Verdict> {
    solve_word_problem_with_budget(w, DEFAULT_BUDGET)
}

pub fn compare_with_budget(u: &BraidWord, v: &BraidWord, budget: u64) -> Result<Ordering> {
    let quotient = u.inverse().multiply(v)?;
    Ok(match solve_word_problem_with_budget(&quotient, budget)? {
        Verdict::Positive => Ordering::Less,
        Verdict::Trivial => Ordering::Equal,
        Verdict::Negative => Ordering::Greater,
    })
}

/// Compares `u` and `v` in the braid order: `Less` iff `u^-1 v` is positive.
pub fn compare(u: &BraidWord, v: &BraidWord) -> Result<Ordering> {
    compare_with_budget(u, v, DEFAULT_BUDGET)
}
