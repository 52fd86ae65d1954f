//! Braid group actions on `F_n`: Artin's representation and the three Wada
//! families.
//!
//! Generator images for `s_i` (all other generators fixed):
//!
//! | kind       | `x_i`                 | `x_(i+1)`             |
//! |------------|-----------------------|-----------------------|
//! | `artin`    | `x_i x_(i+1) X_i`     | `x_i`                 |
//! | `wada1:k`  | `x_i^k x_(i+1) x_i^-k`| `x_i`                 |
//! | `wada2`    | `x_i X_(i+1) x_i`     | `x_i`                 |
//! | `wada3`    | `x_i^2 x_(i+1)`       | `X_(i+1) X_i x_(i+1)` |
//!
//! and for `s_i^-1`:
//!
//! | kind       | `x_i`                 | `x_(i+1)`                  |
//! |------------|-----------------------|----------------------------|
//! | `artin`    | `x_(i+1)`             | `X_(i+1) x_i x_(i+1)`      |
//! | `wada1:k`  | `x_(i+1)`             | `x_(i+1)^-k x_i x_(i+1)^k` |
//! | `wada2`    | `x_(i+1)`             | `x_(i+1) X_i x_(i+1)`      |
//! | `wada3`    | `x_i X_(i+1) X_i`     | `x_i x_(i+1)^2`            |
//!
//! Every [`Representation`] checks both compositions of each pair against the
//! identity when it is built.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Sigma1Class};
use crate::endo::FreeEndo;
use crate::error::{Error, Result};
use crate::free_group::{FreeWord, Letter};

/// Serialized as its selector string: `artin`, `wada1:k`, `wada2`, `wada3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RepKind {
    Artin,
    /// Wada type (1); the parameter is nonzero.
    Wada1(i64),
    Wada2,
    Wada3,
}

impl RepKind {
    pub fn wada1(k: i64) -> Result<RepKind> {
        if k == 0 {
            Err(Error::ZeroParameter)
        } else {
            Ok(RepKind::Wada1(k))
        }
    }

    pub fn validate(self) -> Result<()> {
        match self {
            RepKind::Wada1(0) => Err(Error::ZeroParameter),
            _ => Ok(()),
        }
    }

    /// The type (1) parameter, with Artin counted as `k = 1`.
    pub fn wada1_parameter(self) -> Option<i64> {
        match self {
            RepKind::Artin => Some(1),
            RepKind::Wada1(k) => Some(k),
            _ => None,
        }
    }

    /// Whether generator images preserve the augmentation `x_j -> t`, which
    /// is what makes the Fox Jacobian multiplicative.
    pub fn has_magnus_matrix(self) -> bool {
        !matches!(self, RepKind::Wada3)
    }

    /// Artin, `wada1:k` for `k` in `-3..=3` minus zero, `wada2`, `wada3`.
    pub fn standard_kinds() -> Vec<RepKind> {
        let mut kinds = vec![RepKind::Artin];
        kinds.extend([-3, -2, -1, 1, 2, 3].map(RepKind::Wada1));
        kinds.extend([RepKind::Wada2, RepKind::Wada3]);
        kinds
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Artin => write!(f, "artin"),
            RepKind::Wada1(k) => write!(f, "wada1:{k}"),
            RepKind::Wada2 => write!(f, "wada2"),
            RepKind::Wada3 => write!(f, "wada3"),
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<RepKind> {
        let bad = |reason: &str| Error::Parse {
            position: 1,
            token: s.to_string(),
            reason: reason.to_string(),
        };
        match s.trim().to_ascii_lowercase().as_str() {
            "artin" => Ok(RepKind::Artin),
            "wada2" => Ok(RepKind::Wada2),
            "wada3" => Ok(RepKind::Wada3),
            other => {
                let k = other
                    .strip_prefix("wada1:")
                    .ok_or_else(|| bad("expected artin, wada1:k, wada2 or wada3"))?
                    .parse::<i64>()
                    .map_err(|_| bad("wada1 parameter must be an integer"))?;
                RepKind::wada1(k)
            }
        }
    }
}

impl From<RepKind> for String {
    fn from(kind: RepKind) -> String {
        kind.to_string()
    }
}

impl TryFrom<String> for RepKind {
    type Error = Error;

    fn try_from(s: String) -> Result<RepKind> {
        s.parse()
    }
}

fn word(letters: Vec<Letter>, rank: usize) -> FreeWord {
    FreeWord::reduce(letters, rank).expect("generator images stay in range")
}

fn pow(index: usize, exp: i64) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(Letter::new(index, exp > 0), exp.unsigned_abs() as usize)
}

/// Images of `(x_i, x_(i+1))` under the automorphism of `s_i^sign`.
fn closed_form(kind: RepKind, i: usize, positive: bool, rank: usize) -> (FreeWord, FreeWord) {
    let j = i + 1;
    let (xi, xj) = (Letter::pos(i), Letter::pos(j));
    let (xi_inv, xj_inv) = (Letter::neg(i), Letter::neg(j));
    let letters: (Vec<Letter>, Vec<Letter>) = match (kind, positive) {
        (RepKind::Artin, true) => (vec![xi, xj, xi_inv], vec![xi]),
        (RepKind::Artin, false) => (vec![xj], vec![xj_inv, xi, xj]),
        (RepKind::Wada1(k), true) => (pow(i, k).chain([xj]).chain(pow(i, -k)).collect(), vec![xi]),
        (RepKind::Wada1(k), false) => (vec![xj], pow(j, -k).chain([xi]).chain(pow(j, k)).collect()),
        (RepKind::Wada2, true) => (vec![xi, xj_inv, xi], vec![xi]),
        (RepKind::Wada2, false) => (vec![xj], vec![xj, xi_inv, xj]),
        (RepKind::Wada3, true) => (vec![xi, xi, xj], vec![xj_inv, xi_inv, xj]),
        (RepKind::Wada3, false) => (vec![xi, xj_inv, xi_inv], vec![xi, xj, xj]),
    };
    (word(letters.0, rank), word(letters.1, rank))
}

/// The automorphism of `F_n` assigned to `s_i^sign`.
pub fn generator_image(kind: RepKind, i: usize, positive: bool, rank: usize) -> Result<FreeEndo> {
    kind.validate()?;
    if rank < 2 {
        return Err(Error::TooFewStrands(rank));
    }
    if i == 0 || i >= rank {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rank - 1,
        });
    }
    let (img_i, img_j) = closed_form(kind, i, positive, rank);
    let mut images = FreeEndo::identity(rank).images().to_vec();
    images[i - 1] = img_i;
    images[i] = img_j;
    FreeEndo::from_images(images)
}

/// Generator automorphisms of one representation on a fixed number of strands.
#[derive(Clone, Debug)]
pub struct Representation {
    kind: RepKind,
    strands: usize,
    positive: Vec<FreeEndo>,
    negative: Vec<FreeEndo>,
}

type Cache = RwLock<HashMap<(RepKind, usize), Arc<Representation>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl Representation {
    /// Builds the generator table and checks that each inverse image really
    /// inverts its generator.
    pub fn new(kind: RepKind, strands: usize) -> Result<Representation> {
        kind.validate()?;
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let mut positive = Vec::with_capacity(strands - 1);
        let mut negative = Vec::with_capacity(strands - 1);
        for i in 1..strands {
            let pos = generator_image(kind, i, true, strands)?;
            let neg = generator_image(kind, i, false, strands)?;
            if !pos.compose(&neg)?.is_identity() || !neg.compose(&pos)?.is_identity() {
                return Err(Error::Verification(format!(
                    "{kind}: inverse image of s{i} does not invert it"
                )));
            }
            positive.push(pos);
            negative.push(neg);
        }
        Ok(Representation {
            kind,
            strands,
            positive,
            negative,
        })
    }

    /// Process-wide memoized table.
    pub fn shared(kind: RepKind, strands: usize) -> Result<Arc<Representation>> {
        if let Some(rep) = cache().read().unwrap().get(&(kind, strands)) {
            return Ok(Arc::clone(rep));
        }
        let rep = Arc::new(Representation::new(kind, strands)?);
        let mut guard = cache().write().unwrap();
        Ok(Arc::clone(guard.entry((kind, strands)).or_insert(rep)))
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Automorphism of a single braid letter.
    pub fn generator(&self, letter: Letter) -> &FreeEndo {
        let i = letter.index() - 1;
        if letter.is_positive() {
            &self.positive[i]
        } else {
            &self.negative[i]
        }
    }

    fn check_braid(&self, w: &BraidWord) -> Result<()> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: w.strands(),
            });
        }
        Ok(())
    }

    fn check_word(&self, u: &FreeWord) -> Result<()> {
        if u.rank() != self.strands {
            return Err(Error::RankMismatch {
                left: self.strands,
                right: u.rank(),
            });
        }
        Ok(())
    }

    /// The automorphism of `w`, first letter acting first.
    pub fn represent(&self, w: &BraidWord) -> Result<FreeEndo> {
        self.check_braid(w)?;
        let mut acc = FreeEndo::identity(self.strands);
        for &l in w.letters() {
            acc.post_apply(self.generator(l));
        }
        Ok(acc)
    }

    /// Image of `u` under the automorphism of `w`, computed letter by letter
    /// without building the whole automorphism.
    pub fn act(&self, w: &BraidWord, u: &FreeWord) -> Result<FreeWord> {
        self.check_braid(w)?;
        self.check_word(u)?;
        let mut cur = u.letters().to_vec();
        for &l in w.letters() {
            cur = self.generator(l).apply_letters(&cur);
        }
        Ok(FreeWord::from_reduced(cur, self.strands))
    }

    /// Whether `w` acts trivially.
    ///
    /// Splits `w = a b` at the middle and compares the automorphisms of `a` and
    /// `b^-1`, which keeps the images at half the length.
    pub fn acts_trivially(&self, w: &BraidWord) -> Result<bool> {
        self.check_braid(w)?;
        let mid = w.len() / 2;
        let (a, b) = w.letters().split_at(mid);
        let a = BraidWord::from_reduced(a.to_vec(), self.strands);
        let b_inv = BraidWord::from_reduced(b.to_vec(), self.strands).inverse();
        self.represent(&a)?.equal(&self.represent(&b_inv)?)
    }

    /// Whether `u` and `v` act identically.
    pub fn same_action(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        self.acts_trivially(&u.multiply(&v.inverse())?)
    }

    /// Whether the image of `x1` under `w` has at least two letters `x1^{+-1}`.
    ///
    /// `w` must start with `s1` and contain no `s1^-1`.
    pub fn check_lemma_form(&self, w: &BraidWord) -> Result<bool> {
        self.check_braid(w)?;
        if w.letters().first() != Some(&Letter::pos(1))
            || w.classify_sigma1() != Sigma1Class::Nonnegative
        {
            return Err(Error::Contract(format!(
                "expected an s1-nonnegative word starting with s1, got {w}"
            )));
        }
        let x1 = FreeWord::generator(1, self.strands)?;
        Ok(self.act(w, &x1)?.count_occurrences(1)? >= 2)
    }
}

pub fn represent(kind: RepKind, w: &BraidWord) -> Result<FreeEndo> {
    Representation::shared(kind, w.strands())?.represent(w)
}

pub fn check_lemma_form(kind: RepKind, w: &BraidWord) -> Result<bool> {
    Representation::shared(kind, w.strands())?.check_lemma_form(w)
}

/// The shape the image of `x1` keeps once `s1` has acted, if the kind has
/// one: `x1^k u x1^-k` for type (1), `x1^2 u` for type (3), where `u` is
/// nonempty and neither starts nor ends with `x1^{+-1}` (type (3) constrains
/// only the start). Returns `None` for kinds without a tracked shape.
pub fn lemma_shape_holds(kind: RepKind, image: &FreeWord) -> Option<bool> {
    let syl = image.syllables();
    match kind {
        RepKind::Artin | RepKind::Wada1(_) => {
            let k = kind.wada1_parameter()?;
            Some(syl.len() >= 3 && syl[0] == (1, k) && syl[syl.len() - 1] == (1, -k))
        }
        RepKind::Wada3 => Some(syl.len() >= 2 && syl[0] == (1, 2)),
        RepKind::Wada2 => None,
    }
}
