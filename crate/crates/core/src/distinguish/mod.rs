//! Telling the image groups of two representations apart.
//!
//! The mapping relators of an automorphism `x_i -> y_i` are the words
//! `x_i y_i^-1`; for a group of automorphisms, the union over a generating
//! set. If `g` lies in a group `G`, every mapping relator of `g` lies in the
//! normal closure of the mapping relators of `G`, and in particular its
//! exponent-sum vector lies in the abelianized lattice. That lattice gives a
//! sound certificate of non-membership. Membership at the free-group level is
//! never decided here.
//!
//! Three certificates are produced:
//!
//! * two type (1) representations with `|k| > |s|`: the Magnus determinant of
//!   `s1` under the `s` representation is `-t^s`, while every element of the
//!   `k` image has determinant `+-t^(k m)`;
//! * type (1) against type (2): type (2) determinants are all `1`, the type (1)
//!   generator has determinant `-t^k`;
//! * type (1) or (2) against type (3): `2 e1` lies in the join of the lattice of
//!   `s1`'s relators with the type (3) lattice but in neither alone, so `s1`
//!   cannot lie in the type (3) image.
//!
//! The pair `wada1:k`, `wada1:-k` is reported inconclusive, together with the
//! inversion automorphism `x_i -> x_i^-1` that conjugates one image onto the
//! other.

mod lattice;

pub use lattice::RelatorLattice;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::endo::FreeEndo;
use crate::error::{Error, Result};
use crate::free_group::FreeWord;
use crate::magnus;
use crate::reps::{RepKind, Representation};

/// Version of the JSON layout of [`SeparationReport`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Relators `x_i f(x_i)^-1`, reduced, nontrivial, sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MappingRelators {
    rank: usize,
    relators: Vec<FreeWord>,
}

impl MappingRelators {
    fn from_words(rank: usize, words: impl IntoIterator<Item = FreeWord>) -> MappingRelators {
        let mut relators: Vec<FreeWord> = words.into_iter().filter(|w| !w.is_empty()).collect();
        relators.sort();
        relators.dedup();
        MappingRelators { rank, relators }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn union(&self, other: &MappingRelators) -> Result<MappingRelators> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(MappingRelators::from_words(
            self.rank,
            self.relators.iter().chain(&other.relators).cloned(),
        ))
    }
}

pub fn mapping_relators(f: &FreeEndo) -> MappingRelators {
    let n = f.rank();
    let words = f.images().iter().enumerate().map(|(i, y)| {
        let x = FreeWord::generator(i + 1, n).expect("index within rank");
        x.multiply(&y.inverse()).expect("same rank")
    });
    MappingRelators::from_words(n, words)
}

/// Mapping relators of the image group, taken over the generators `s_i`.
pub fn group_mapping_relators(kind: RepKind, strands: usize) -> Result<MappingRelators> {
    let rep = Representation::shared(kind, strands)?;
    let mut acc = MappingRelators::from_words(strands, []);
    for i in 1..strands {
        let g = rep.represent(&BraidWord::generator(i, strands)?)?;
        acc = acc.union(&mapping_relators(&g))?;
    }
    Ok(acc)
}

/// Exponent-sum vectors of the relators, in Hermite normal form.
pub fn abelianize_lattice(rs: &MappingRelators) -> RelatorLattice {
    RelatorLattice::from_generators(rs.rank, rs.relators.iter().map(FreeWord::exponent_sums))
        .expect("exponent sums have the ambient dimension")
}

pub fn lattice_contains(lattice: &RelatorLattice, v: &[i64]) -> Result<bool> {
    lattice.contains(v)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `witness`'s `s1` has determinant `-t^s`, not a power of `t^k`.
    DeterminantExponent {
        witness: RepKind,
        other: RepKind,
        witness_determinant: String,
        /// Determinants of the other group's generators and their inverses.
        other_generator_determinants: Vec<String>,
        /// Every determinant in the other image is `+-t^(modulus m)`.
        modulus: i64,
        witness_exponent: i64,
    },
    /// `witness`'s `s1` has determinant `!= 1`; the other image is all `1`.
    UnitDeterminant {
        witness: RepKind,
        other: RepKind,
        witness_determinant: String,
        other_generator_determinants: Vec<String>,
    },
    /// `target` is in the join of the two lattices but in neither.
    Lattice {
        witness: RepKind,
        other: RepKind,
        witness_relators: Vec<String>,
        witness_lattice: Vec<Vec<i64>>,
        other_lattice: Vec<Vec<i64>>,
        joined_lattice: Vec<Vec<i64>>,
        target: Vec<i64>,
        /// `x1 X2 * X1 (x1 x2) x1 = x1^2`: the inverse of the witness relator
        /// `x2 X1` times a conjugate of the other group's relator `x1 x2`.
        product_identity: [String; 3],
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    /// The images differ; the certificate has been re-checked.
    Separated { certificate: Certificate },
    /// Images are conjugate by `conjugator`; equality is not decided.
    Inconclusive { conjugator: String, reason: String },
    /// Same generator automorphisms.
    Identical,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeparationReport {
    pub schema_version: u32,
    pub a: RepKind,
    pub b: RepKind,
    pub strands: usize,
    pub outcome: Outcome,
}

fn s1(strands: usize) -> Result<BraidWord> {
    BraidWord::generator(1, strands)
}

fn generator_determinants(kind: RepKind, strands: usize) -> Result<Vec<magnus::LaurentPoly>> {
    let mut out = Vec::new();
    for i in 1..strands {
        let g = BraidWord::generator(i, strands)?;
        out.push(magnus::determinant_invariant(kind, &g)?);
        out.push(magnus::determinant_invariant(kind, &g.inverse())?);
    }
    Ok(out)
}

fn verification(msg: String) -> Error {
    Error::Verification(msg)
}

fn same_generators(a: RepKind, b: RepKind, strands: usize) -> Result<bool> {
    let ra = Representation::shared(a, strands)?;
    let rb = Representation::shared(b, strands)?;
    Ok((1..strands).all(|i| {
        let g = crate::free_group::Letter::pos(i);
        ra.generator(g) == rb.generator(g) && ra.generator(g.inverse()) == rb.generator(g.inverse())
    }))
}

/// Checks that conjugating every type (1) generator image for `k` by the
/// inversion automorphism gives the image for `-k`.
pub fn inversion_conjugates(k: i64, strands: usize) -> Result<bool> {
    let inv = FreeEndo::inversion(strands);
    let rk = Representation::shared(RepKind::wada1(k)?, strands)?;
    let rmk = Representation::shared(RepKind::wada1(-k)?, strands)?;
    for i in 1..strands {
        for g in [
            crate::free_group::Letter::pos(i),
            crate::free_group::Letter::neg(i),
        ] {
            let conj = inv.compose(rk.generator(g))?.compose(&inv)?;
            if conj != *rmk.generator(g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn determinant_exponent(witness: RepKind, other: RepKind, strands: usize) -> Result<Certificate> {
    let k = other.wada1_parameter().expect("type (1)");
    let det = magnus::determinant_invariant(witness, &s1(strands)?)?;
    let (_, e) = det
        .as_unit()
        .ok_or_else(|| verification(format!("det of s1 under {witness} is not a unit: {det}")))?;
    if e % k == 0 {
        return Err(verification(format!("exponent {e} is a multiple of {k}")));
    }
    let dets = generator_determinants(other, strands)?;
    for d in &dets {
        match d.as_unit() {
            Some((_, f)) if f % k == 0 => {}
            _ => {
                return Err(verification(format!(
                    "{other} generator determinant {d} is not +-t^({k}m)"
                )))
            }
        }
    }
    Ok(Certificate::DeterminantExponent {
        witness,
        other,
        witness_determinant: det.to_string(),
        other_generator_determinants: dets.iter().map(ToString::to_string).collect(),
        modulus: k,
        witness_exponent: e,
    })
}

fn unit_determinant(witness: RepKind, other: RepKind, strands: usize) -> Result<Certificate> {
    let det = magnus::determinant_invariant(witness, &s1(strands)?)?;
    if det.is_one() {
        return Err(verification(format!("det of s1 under {witness} is 1")));
    }
    let dets = generator_determinants(other, strands)?;
    if let Some(d) = dets.iter().find(|d| !d.is_one()) {
        return Err(verification(format!(
            "{other} generator determinant {d} is not 1"
        )));
    }
    Ok(Certificate::UnitDeterminant {
        witness,
        other,
        witness_determinant: det.to_string(),
        other_generator_determinants: dets.iter().map(ToString::to_string).collect(),
    })
}

fn lattice_certificate(witness: RepKind, other: RepKind, strands: usize) -> Result<Certificate> {
    if strands < 3 {
        return Err(Error::Contract(format!(
            "the lattice certificate needs at least 3 strands, got {strands}"
        )));
    }
    let n = strands;
    let g = Representation::shared(witness, n)?.represent(&s1(n)?)?;
    let witness_rel = mapping_relators(&g);
    let witness_lat = abelianize_lattice(&witness_rel);
    let other_rel = group_mapping_relators(other, n)?;
    let other_lat = abelianize_lattice(&other_rel);
    let joined = witness_lat.join(&other_lat)?;

    let mut target = vec![0i64; n];
    target[0] = 2;
    if witness_lat.contains(&target)? || other_lat.contains(&target)? {
        return Err(verification(
            "2 e1 already lies in one of the lattices".into(),
        ));
    }
    if !joined.contains(&target)? {
        return Err(verification("2 e1 is not in the joined lattice".into()));
    }

    let x1 = FreeWord::generator(1, n)?;
    let x2 = FreeWord::generator(2, n)?;
    let witness_word = x2.multiply(&x1.inverse())?;
    let other_word = x1.multiply(&x2)?;
    if !witness_rel.relators().contains(&witness_word) {
        return Err(verification(format!(
            "{witness_word} is not a relator of {witness} s1"
        )));
    }
    if !other_rel.relators().contains(&other_word) {
        return Err(verification(format!(
            "{other_word} is not a relator of {other}"
        )));
    }
    let left = witness_word.inverse();
    let right = other_word.conjugate(&x1)?;
    let product = left.multiply(&right)?;
    if product != FreeWord::power(1, 2, n)? {
        return Err(verification(format!(
            "{left} * {right} = {product}, not x1^2"
        )));
    }

    Ok(Certificate::Lattice {
        witness,
        other,
        witness_relators: witness_rel
            .relators()
            .iter()
            .map(ToString::to_string)
            .collect(),
        witness_lattice: witness_lat.basis().to_vec(),
        other_lattice: other_lat.basis().to_vec(),
        joined_lattice: joined.basis().to_vec(),
        target,
        product_identity: [left.to_string(), right.to_string(), product.to_string()],
    })
}

/// Compares the images of `a` and `b` in `Aut(F_strands)`.
pub fn distinguish(a: RepKind, b: RepKind, strands: usize) -> Result<SeparationReport> {
    a.validate()?;
    b.validate()?;
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    let report = |outcome| SeparationReport {
        schema_version: REPORT_SCHEMA_VERSION,
        a,
        b,
        strands,
        outcome,
    };

    if same_generators(a, b, strands)? {
        return Ok(report(Outcome::Identical));
    }

    let certificate = match (a.wada1_parameter(), b.wada1_parameter()) {
        (Some(k), Some(s)) if k == -s => {
            if !inversion_conjugates(k, strands)? {
                return Err(verification(format!(
                    "inversion does not conjugate wada1:{k} onto wada1:{s}"
                )));
            }
            return Ok(report(Outcome::Inconclusive {
                conjugator: FreeEndo::inversion(strands).to_string(),
                reason: format!(
                    "images of wada1:{k} and wada1:{s} are conjugate by the inversion \
                     automorphism; whether they are equal is not decided"
                ),
            }));
        }
        (Some(k), Some(s)) => {
            // the representation with the smaller |parameter| supplies the witness
            if k.abs() < s.abs() {
                determinant_exponent(a, b, strands)?
            } else {
                determinant_exponent(b, a, strands)?
            }
        }
        (Some(_), None) | (None, Some(_)) => {
            let (t1, rest) = if a.wada1_parameter().is_some() {
                (a, b)
            } else {
                (b, a)
            };
            match rest {
                RepKind::Wada2 => unit_determinant(t1, rest, strands)?,
                RepKind::Wada3 => lattice_certificate(t1, rest, strands)?,
                _ => unreachable!("rest is not type (1)"),
            }
        }
        (None, None) => match (a, b) {
            (RepKind::Wada2, RepKind::Wada3) => lattice_certificate(a, b, strands)?,
            (RepKind::Wada3, RepKind::Wada2) => lattice_certificate(b, a, strands)?,
            _ => unreachable!("equal kinds were reported identical"),
        },
    };
    Ok(report(Outcome::Separated { certificate }))
}
