//! Exhaustive and sampled property checks over braid words.
//!
//! Each suite enumerates or samples words, checks a property of the library
//! against an independent route, and stops at the first counterexample.
//! Enumeration is sharded by prefix over the rayon pool; random samples are
//! drawn sequentially from a seeded ChaCha stream, so every run is determined
//! by its [`RunConfig`]. Running out of handle-reduction budget is reported
//! as an error, never as a failed property.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{relators, BraidWord, Sigma1Class};
use crate::dehornoy::{self, Verdict, DEFAULT_BUDGET};
use crate::distinguish::{self, Outcome, RelatorLattice};
use crate::error::{Error, Result};
use crate::free_group::{FreeWord, Letter};
use crate::magnus::{self, LaurentMatrix, LaurentPoly};
use crate::reps::{lemma_shape_holds, RepKind, Representation};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Image of `x1` under `s1`-nonnegative words starting with `s1`.
    Lemma,
    /// Relators act trivially; `w w^-1` acts trivially.
    Relations,
    /// Handle reduction against the representation kernels.
    Oracle,
    /// Magnus blocks, relators, multiplicativity and the determinant law.
    Magnus,
    /// Pairwise separation certificates and lattice membership.
    Distinguish,
    /// `s1`-nonnegative words with an `s1` are positive and act nontrivially.
    Positivity,
    /// Order axioms of `compare`.
    Order,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Lemma,
        Suite::Relations,
        Suite::Oracle,
        Suite::Magnus,
        Suite::Distinguish,
        Suite::Positivity,
        Suite::Order,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma => "lemma",
            Suite::Relations => "relations",
            Suite::Oracle => "oracle",
            Suite::Magnus => "magnus",
            Suite::Distinguish => "distinguish",
            Suite::Positivity => "positivity",
            Suite::Order => "order",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| crate::error::parse_error(1, s, "unknown suite"))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub strands: usize,
    pub kinds: Vec<RepKind>,
    /// Longest enumerated (or sampled) word.
    pub max_length: usize,
    pub step_budget: u64,
    pub seed: u64,
    /// Number of random cases for the sampled parts of a suite.
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            strands: 3,
            kinds: RepKind::standard_kinds(),
            max_length: 6,
            step_budget: DEFAULT_BUDGET,
            seed: 0,
            samples: 1000,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.strands < 2 {
            return Err(Error::TooFewStrands(self.strands));
        }
        if self.step_budget == 0 {
            return Err(Error::Contract("step budget must be at least 1".into()));
        }
        for kind in &self.kinds {
            kind.validate()?;
        }
        Ok(())
    }
}

/// A property violation, with the offending word in the text format
/// accepted by the parsers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub kind: Option<RepKind>,
    pub word: String,
    pub message: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(kind) = self.kind {
            write!(f, "[{kind}] ")?;
        }
        write!(f, "{}: \"{}\"", self.message, self.word)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub strands: usize,
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "PASS {} (B{}): {} cases",
                self.suite, self.strands, self.cases
            ),
            Some(c) => write!(
                f,
                "FAIL {} (B{}) after {} cases: {c}",
                self.suite, self.strands, self.cases
            ),
        }
    }
}

pub fn run_suite(suite: Suite, config: &RunConfig) -> Result<SuiteReport> {
    config.validate()?;
    let (cases, counterexample) = match suite {
        Suite::Lemma => lemma(config)?,
        Suite::Relations => relations(config)?,
        Suite::Oracle => oracle(config)?,
        Suite::Magnus => magnus_suite(config)?,
        Suite::Distinguish => distinguish_suite(config)?,
        Suite::Positivity => positivity(config)?,
        Suite::Order => order(config)?,
    };
    Ok(SuiteReport {
        suite,
        strands: config.strands,
        cases,
        counterexample,
    })
}

type Tally = (u64, Option<Counterexample>);

fn fail(kind: Option<RepKind>, word: impl ToString, message: impl Into<String>) -> Counterexample {
    Counterexample {
        kind,
        word: word.to_string(),
        message: message.into(),
    }
}

/// Shared state for a sharded search: a case counter, the first failure or
/// error, and an abort flag every worker polls.
struct Search {
    cases: AtomicU64,
    abort: AtomicBool,
    first: Mutex<Option<Result<Counterexample>>>,
}

impl Search {
    fn new() -> Search {
        Search {
            cases: AtomicU64::new(0),
            abort: AtomicBool::new(false),
            first: Mutex::new(None),
        }
    }

    fn stopped(&self) -> bool {
        self.abort.load(AtomicOrdering::Relaxed)
    }

    fn count(&self, n: u64) {
        self.cases.fetch_add(n, AtomicOrdering::Relaxed);
    }

    fn stop(&self, outcome: Result<Counterexample>) {
        self.abort.store(true, AtomicOrdering::Relaxed);
        let mut first = self.first.lock().expect("search lock poisoned");
        if first.is_none() {
            *first = Some(outcome);
        }
    }

    /// Runs `check` and records its failure or error; returns whether to go on.
    fn check(&self, check: impl FnOnce() -> Result<Option<Counterexample>>) -> bool {
        if self.stopped() {
            return false;
        }
        match check() {
            Ok(None) => {
                self.count(1);
                true
            }
            Ok(Some(c)) => {
                self.stop(Ok(c));
                false
            }
            Err(e) => {
                self.stop(Err(e));
                false
            }
        }
    }

    fn finish(self) -> Result<Tally> {
        let cases = self.cases.into_inner();
        match self.first.into_inner().expect("search lock poisoned") {
            None => Ok((cases, None)),
            Some(Ok(c)) => Ok((cases, Some(c))),
            Some(Err(e)) => Err(e),
        }
    }
}

/// Letters `s_i^{+-1}` for `1 <= i < strands`, optionally without `s1^-1`.
fn alphabet(strands: usize, allow_s1_inverse: bool) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..strands {
        out.push(Letter::pos(i));
        if i > 1 || allow_s1_inverse {
            out.push(Letter::neg(i));
        }
    }
    out
}

/// Every freely reduced word over `alphabet` that extends `prefix` by at most
/// `extra` letters, `prefix` included, depth first.
fn for_each_extension(
    prefix: &mut Vec<Letter>,
    alphabet: &[Letter],
    extra: usize,
    visit: &mut dyn FnMut(&[Letter]) -> bool,
) -> bool {
    if !visit(prefix) {
        return false;
    }
    if extra == 0 {
        return true;
    }
    for &l in alphabet {
        if prefix.last() == Some(&l.inverse()) {
            continue;
        }
        prefix.push(l);
        let go_on = for_each_extension(prefix, alphabet, extra - 1, visit);
        prefix.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Reduced words of length `<= max_length` over `alphabet`, sharded by their
/// first two letters and visited in parallel. The empty word and the words
/// of length one are visited by the first shards.
fn par_enumerate(
    alphabet: &[Letter],
    max_length: usize,
    search: &Search,
    visit: impl Fn(&[Letter]) -> bool + Sync,
) {
    if !visit(&[]) || max_length == 0 {
        return;
    }
    let mut shards = Vec::new();
    for &a in alphabet {
        if max_length == 1 {
            shards.push(vec![a]);
            continue;
        }
        for &b in alphabet {
            if b != a.inverse() {
                shards.push(vec![a, b]);
            }
        }
    }
    if max_length > 1 && !alphabet.iter().all(|&a| visit(&[a])) {
        return;
    }
    shards.into_par_iter().for_each(|mut prefix| {
        if search.stopped() {
            return;
        }
        let extra = max_length - prefix.len();
        for_each_extension(&mut prefix, alphabet, extra, &mut |w| visit(w));
    });
}

/// Random reduced word of length `<= max_length` over `alphabet`.
fn random_word(rng: &mut ChaCha8Rng, alphabet: &[Letter], max_length: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_length);
    let mut out: Vec<Letter> = Vec::with_capacity(len);
    while out.len() < len {
        let l = alphabet[rng.gen_range(0..alphabet.len())];
        if out.last() != Some(&l.inverse()) {
            out.push(l);
        }
    }
    out
}

fn braid(letters: &[Letter], strands: usize) -> BraidWord {
    BraidWord::from_letters(letters.iter().copied(), strands).expect("letters within strands")
}

fn reps(config: &RunConfig, kinds: &[RepKind]) -> Result<Vec<std::sync::Arc<Representation>>> {
    kinds
        .iter()
        .map(|&k| Representation::shared(k, config.strands))
        .collect()
}

/// DFS over reduced `s1`-nonnegative words starting with `s1`, carrying the
/// image of `x1`. At every node the image must contain `x1^{+-1}` at least
/// twice and keep its kind's shape.
fn lemma(config: &RunConfig) -> Result<Tally> {
    let n = config.strands;
    let alpha = alphabet(n, false);
    let search = Search::new();
    let reps = reps(config, &config.kinds)?;
    let x1 = vec![Letter::pos(1)];
    if config.max_length == 0 {
        return search.finish();
    }

    struct Node<'a> {
        rep: &'a Representation,
        alpha: &'a [Letter],
        search: &'a Search,
        word: Vec<Letter>,
        image: Vec<Letter>,
    }

    fn visit(node: &mut Node<'_>, extra: usize) -> bool {
        let kind = node.rep.kind();
        let ok = node.search.check(|| {
            let image = FreeWord::reduce(node.image.iter().copied(), node.rep.strands())?;
            let w = || braid(&node.word, node.rep.strands());
            if image.count_occurrences(1)? < 2 {
                return Ok(Some(fail(
                    Some(kind),
                    w(),
                    "image of x1 has fewer than 2 x1 letters",
                )));
            }
            if lemma_shape_holds(kind, &image) == Some(false) {
                return Ok(Some(fail(
                    Some(kind),
                    w(),
                    format!("image of x1 lost its shape: {image}"),
                )));
            }
            Ok(None)
        });
        if !ok || extra == 0 {
            return ok;
        }
        for &l in node.alpha {
            if node.word.last() == Some(&l.inverse()) {
                continue;
            }
            let next = node.rep.generator(l).apply_letters(&node.image);
            let saved = std::mem::replace(&mut node.image, next);
            node.word.push(l);
            let go_on = visit(node, extra - 1);
            node.word.pop();
            node.image = saved;
            if !go_on {
                return false;
            }
        }
        true
    }

    // shard by kind and second letter
    let mut shards: Vec<(&Representation, Option<Letter>)> = Vec::new();
    for rep in &reps {
        shards.push((rep, None));
        if config.max_length > 1 {
            shards.extend(alpha.iter().map(|&l| (rep.as_ref(), Some(l))));
        }
    }
    shards.into_par_iter().for_each(|(rep, second)| {
        let s1 = rep.generator(Letter::pos(1)).apply_letters(&x1);
        let mut node = Node {
            rep,
            alpha: &alpha,
            search: &search,
            word: vec![Letter::pos(1)],
            image: s1,
        };
        match second {
            None => {
                visit(&mut node, 0);
            }
            Some(l) => {
                node.image = rep.generator(l).apply_letters(&node.image);
                node.word.push(l);
                visit(&mut node, config.max_length - 2);
            }
        }
    });

    search.finish()
}

fn relations(config: &RunConfig) -> Result<Tally> {
    let search = Search::new();
    let n = config.strands;
    let reps = reps(config, &config.kinds)?;
    let rels = relators(n)?;
    reps.par_iter().for_each(|rep| {
        let kind = rep.kind();
        for r in &rels {
            let ok = search.check(|| {
                Ok((!rep.represent(r)?.is_identity())
                    .then(|| fail(Some(kind), r, "relator acts nontrivially")))
            });
            if !ok {
                return;
            }
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let alpha = alphabet(n, true);
    let words: Vec<BraidWord> = (0..config.samples)
        .map(|_| braid(&random_word(&mut rng, &alpha, config.max_length.max(12)), n))
        .collect();
    words.par_iter().for_each(|w| {
        for rep in &reps {
            let ok = search.check(|| {
                // w w^-1 composed as automorphisms, without free cancellation
                let f = rep.represent(w)?.compose(&rep.represent(&w.inverse())?)?;
                Ok((!f.is_identity())
                    .then(|| fail(Some(rep.kind()), w, "w w^-1 acts nontrivially")))
            });
            if !ok {
                return;
            }
        }
    });
    search.finish()
}

/// Words built to be trivial: `u r` against `u` with a relator `r` inserted
/// in `u`'s spelling, then multiplied out.
fn constructed_trivial(
    rng: &mut ChaCha8Rng,
    alpha: &[Letter],
    rels: &[BraidWord],
    n: usize,
) -> BraidWord {
    let u = random_word(rng, alpha, 8);
    let r = &rels[rng.gen_range(0..rels.len())];
    let r = if rng.gen_bool(0.5) {
        r.inverse()
    } else {
        r.clone()
    };
    let at = rng.gen_range(0..=u.len());
    let mut spelled = u[..at].to_vec();
    spelled.extend_from_slice(r.letters());
    spelled.extend_from_slice(&u[at..]);
    let v = braid(&spelled, n);
    braid(&u, n).multiply(&v.inverse()).expect("same strands")
}

/// `handle_reduce` output acts like its input under Artin, and the verdict is
/// `TRIVIAL` exactly when every kind acts trivially.
fn oracle_case(
    w: &BraidWord,
    artin: &Representation,
    reps: &[std::sync::Arc<Representation>],
    budget: u64,
) -> Result<Option<Counterexample>> {
    let form = dehornoy::handle_reduce_with_budget(w, budget)?;
    if !artin.same_action(w, &form.word)? {
        return Ok(Some(fail(
            Some(RepKind::Artin),
            w,
            format!(
                "handle reduction changed the braid (output \"{}\")",
                form.word
            ),
        )));
    }
    if let Some(m) = form.main_index {
        let mixed = form
            .word
            .letters()
            .iter()
            .any(|l| l.index() < m || (l.index() == m && Some(l.sign()) != form.sign));
        if mixed {
            return Ok(Some(fail(
                None,
                w,
                format!("output \"{}\" is not definite", form.word),
            )));
        }
    }
    let trivial = form.verdict() == Verdict::Trivial;
    for rep in reps {
        if rep.acts_trivially(w)? != trivial {
            return Ok(Some(fail(
                Some(rep.kind()),
                w,
                format!(
                    "verdict {} disagrees with the representation",
                    form.verdict()
                ),
            )));
        }
    }
    Ok(None)
}

fn oracle(config: &RunConfig) -> Result<Tally> {
    let n = config.strands;
    let search = Search::new();
    let reps = reps(config, &config.kinds)?;
    let artin = Representation::shared(RepKind::Artin, n)?;
    let alpha = alphabet(n, true);
    par_enumerate(&alpha, config.max_length, &search, |letters| {
        search.check(|| oracle_case(&braid(letters, n), &artin, &reps, config.step_budget))
    });
    if search.stopped() {
        return search.finish();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let rels = relators(n)?;
    let words: Vec<BraidWord> = (0..config.samples)
        .map(|i| {
            if i % 2 == 0 {
                braid(&random_word(&mut rng, &alpha, 30), n)
            } else {
                constructed_trivial(&mut rng, &alpha, &rels, n)
            }
        })
        .collect();
    words.par_iter().for_each(|w| {
        search.check(|| oracle_case(w, &artin, &reps, config.step_budget));
    });
    search.finish()
}

fn block(n: usize, i: usize, entries: [[LaurentPoly; 2]; 2]) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(n);
    for (r, row) in entries.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(i - 1 + r, i - 1 + c, v);
        }
    }
    m
}

/// The generator block for kinds with a Magnus matrix.
pub fn expected_generator_matrix(kind: RepKind, i: usize, n: usize) -> Option<LaurentMatrix> {
    let one = LaurentPoly::one;
    let entries = match (kind.wada1_parameter(), kind) {
        (Some(k), _) => [
            [&one() - &LaurentPoly::t_pow(k), LaurentPoly::t_pow(k)],
            [one(), LaurentPoly::zero()],
        ],
        (None, RepKind::Wada2) => [
            [LaurentPoly::monomial(2, 0), LaurentPoly::monomial(-1, 0)],
            [one(), LaurentPoly::zero()],
        ],
        _ => return None,
    };
    Some(block(n, i, entries))
}

fn magnus_suite(config: &RunConfig) -> Result<Tally> {
    let n = config.strands;
    let search = Search::new();
    let kinds: Vec<RepKind> = config
        .kinds
        .iter()
        .copied()
        .filter(|k| k.has_magnus_matrix())
        .collect();
    let rels = relators(n)?;
    for &kind in &kinds {
        for i in 1..n {
            let ok = search.check(|| {
                let g = BraidWord::generator(i, n)?;
                let m = magnus::magnus_matrix(kind, &g)?;
                let expected = expected_generator_matrix(kind, i, n).expect("kind has a matrix");
                if m != expected {
                    return Ok(Some(fail(
                        Some(kind),
                        &g,
                        format!("generator matrix is\n{m}"),
                    )));
                }
                let det = m.determinant();
                let want = match kind.wada1_parameter() {
                    Some(k) => LaurentPoly::monomial(-1, k),
                    None => LaurentPoly::one(),
                };
                Ok((det != want)
                    .then(|| fail(Some(kind), &g, format!("generator determinant {det}"))))
            });
            if !ok {
                return search.finish();
            }
        }
        for r in &rels {
            let ok = search.check(|| {
                let m = magnus::magnus_matrix(kind, r)?;
                Ok((m != LaurentMatrix::identity(n))
                    .then(|| fail(Some(kind), r, "relator matrix is not the identity")))
            });
            if !ok {
                return search.finish();
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let alpha = alphabet(n, true);
    let len = config.max_length.max(1);
    let pairs: Vec<(BraidWord, BraidWord)> = (0..config.samples)
        .map(|_| {
            (
                braid(&random_word(&mut rng, &alpha, len), n),
                braid(&random_word(&mut rng, &alpha, len), n),
            )
        })
        .collect();
    pairs.par_iter().for_each(|(u, v)| {
        for &kind in &kinds {
            let ok = search.check(|| {
                let uv = u.multiply(v)?;
                let m = magnus::magnus_matrix(kind, &uv)?;
                if m != magnus::magnus_matrix(kind, u)?.mul(&magnus::magnus_matrix(kind, v)?)? {
                    return Ok(Some(fail(
                        Some(kind),
                        &uv,
                        format!("matrix of u v differs from the product, u = \"{u}\""),
                    )));
                }
                let det = m.determinant();
                if det != magnus::expected_determinant(kind, &uv)? {
                    return Ok(Some(fail(
                        Some(kind),
                        &uv,
                        format!("determinant {det} breaks the exponent-sum law"),
                    )));
                }
                if n <= 4 && det != m.determinant_cofactor() {
                    return Ok(Some(fail(
                        Some(kind),
                        &uv,
                        "Bareiss and cofactor determinants differ",
                    )));
                }
                Ok(None)
            });
            if !ok {
                return;
            }
        }
    });
    search.finish()
}

/// Membership by trying every combination with coefficients in `-5..=5`.
pub fn brute_force_contains(generators: &[Vec<i64>], v: &[i64]) -> bool {
    fn go(generators: &[Vec<i64>], rest: &mut Vec<i64>) -> bool {
        let Some((g, tail)) = generators.split_first() else {
            return rest.iter().all(|&x| x == 0);
        };
        for c in -5i64..=5 {
            for (r, x) in rest.iter_mut().zip(g) {
                *r -= c * x;
            }
            let hit = go(tail, rest);
            for (r, x) in rest.iter_mut().zip(g) {
                *r += c * x;
            }
            if hit {
                return true;
            }
        }
        false
    }
    go(generators, &mut v.to_vec())
}

/// Random three-generator lattice in `Z^3` and a target that is either a
/// small combination of the generators or a random vector.
pub fn random_lattice_instance(rng: &mut ChaCha8Rng) -> (Vec<Vec<i64>>, Vec<i64>) {
    let gens: Vec<Vec<i64>> = (0..3)
        .map(|_| (0..3).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    let target = if rng.gen_bool(0.5) {
        let mut t = vec![0; 3];
        for g in &gens {
            let c = rng.gen_range(-2..=2);
            for (x, y) in t.iter_mut().zip(g) {
                *x += c * y;
            }
        }
        t
    } else {
        (0..3).map(|_| rng.gen_range(-4..=4)).collect()
    };
    (gens, target)
}

/// Whether brute force over `-5..=5` is conclusive for the instance: when the
/// generators are independent, every integer solution is bounded by
/// Cramer's rule, and this bound is checked here.
fn brute_force_is_conclusive(gens: &[Vec<i64>], target: &[i64]) -> bool {
    let det3 = |a: &[i64], b: &[i64], c: &[i64]| -> i64 {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
    };
    let d = det3(&gens[0], &gens[1], &gens[2]);
    if d == 0 {
        return false;
    }
    // the solution is x_j = det_j / d; it is integral iff every det_j is a multiple
    (0..3).all(|j| {
        let mut cols: Vec<Vec<i64>> = gens.to_vec();
        cols[j] = target.to_vec();
        let dj = det3(&cols[0], &cols[1], &cols[2]);
        dj % d != 0 || (dj / d).abs() <= 5
    })
}

fn distinguish_suite(config: &RunConfig) -> Result<Tally> {
    let n = config.strands;
    let search = Search::new();
    let mut kinds: Vec<RepKind> = config.kinds.clone();
    kinds.sort_by_key(|k| k.to_string());
    kinds.dedup();
    let mut pairs = Vec::new();
    for (i, &a) in kinds.iter().enumerate() {
        for &b in &kinds[i + 1..] {
            pairs.push((a, b));
        }
    }
    pairs.par_iter().for_each(|&(a, b)| {
        search.check(|| {
            let label = format!("{a} / {b}");
            let report = match distinguish::distinguish(a, b, n) {
                // the lattice certificate needs three strands
                Err(Error::Contract(_)) if n < 3 => return Ok(None),
                other => other?,
            };
            let same = Representation::shared(a, n)?.generator(Letter::pos(1))
                == Representation::shared(b, n)?.generator(Letter::pos(1));
            let opposite = matches!(
                (a.wada1_parameter(), b.wada1_parameter()),
                (Some(k), Some(s)) if k == -s
            );
            let ok = match report.outcome {
                Outcome::Identical => same,
                Outcome::Inconclusive { .. } => opposite,
                Outcome::Separated { .. } => !same && !opposite,
            };
            Ok((!ok).then(|| {
                fail(
                    None,
                    label,
                    format!("unexpected outcome {:?}", report.outcome),
                )
            }))
        });
    });
    if n <= 5 {
        for k in 1..=3 {
            let ok = search.check(|| {
                Ok((!distinguish::inversion_conjugates(k, n)?).then(|| {
                    fail(
                        Some(RepKind::Wada1(k)),
                        "",
                        "inversion does not conjugate onto wada1:-k",
                    )
                }))
            });
            if !ok {
                return search.finish();
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.samples {
        let (gens, target) = random_lattice_instance(&mut rng);
        let ok = search.check(|| {
            let lattice = RelatorLattice::from_generators(3, gens.iter().cloned())?;
            let fast = lattice.contains(&target)?;
            let slow = brute_force_contains(&gens, &target);
            // brute force can miss members whose coefficients exceed 5
            let disagree = if fast && !slow {
                brute_force_is_conclusive(&gens, &target)
            } else {
                fast != slow
            };
            Ok(disagree.then(|| {
                fail(
                    None,
                    format!("{gens:?} {target:?}"),
                    format!("lattice says {fast}, brute force says {slow}"),
                )
            }))
        });
        if !ok {
            break;
        }
    }
    search.finish()
}

/// `s1`-nonnegative words containing `s1`: verdict `POSITIVE`, and no kind
/// acts trivially.
fn positivity(config: &RunConfig) -> Result<Tally> {
    let n = config.strands;
    let search = Search::new();
    let reps = reps(config, &config.kinds)?;
    let alpha = alphabet(n, false);
    par_enumerate(&alpha, config.max_length, &search, |letters| {
        if !letters.contains(&Letter::pos(1)) {
            return !search.stopped();
        }
        search.check(|| {
            let w = braid(letters, n);
            debug_assert_eq!(w.classify_sigma1(), Sigma1Class::Nonnegative);
            let v = dehornoy::solve_word_problem_with_budget(&w, config.step_budget)?;
            if v != Verdict::Positive {
                return Ok(Some(fail(None, &w, format!("verdict {v}"))));
            }
            for rep in &reps {
                if rep.acts_trivially(&w)? {
                    return Ok(Some(fail(Some(rep.kind()), &w, "acts trivially")));
                }
            }
            Ok(None)
        })
    });
    search.finish()
}

fn order_case(
    u: &BraidWord,
    v: &BraidWord,
    w: &BraidWord,
    budget: u64,
) -> Result<Option<Counterexample>> {
    let cmp = |a: &BraidWord, b: &BraidWord| dehornoy::compare_with_budget(a, b, budget);
    let triple = || format!("{u} | {v} | {w}");
    let uv = cmp(u, v)?;
    let vu = cmp(v, u)?;
    if uv != vu.reverse() {
        return Ok(Some(fail(
            None,
            triple(),
            format!("not antisymmetric: {uv:?} vs {vu:?}"),
        )));
    }
    if cmp(u, u)? != Ordering::Equal {
        return Ok(Some(fail(None, triple(), "u is not equal to itself")));
    }
    let vw = cmp(v, w)?;
    let uw = cmp(u, w)?;
    let transitive = match (uv, vw) {
        (a, b) if a == b => uw == a,
        (Ordering::Equal, b) => uw == b,
        (a, Ordering::Equal) => uw == a,
        _ => true,
    };
    if !transitive {
        return Ok(Some(fail(
            None,
            triple(),
            format!("not transitive: {uv:?}, {vw:?}, {uw:?}"),
        )));
    }
    if cmp(&w.multiply(u)?, &w.multiply(v)?)? != uv {
        return Ok(Some(fail(None, triple(), "not left-invariant under w")));
    }
    let artin = Representation::shared(RepKind::Artin, u.strands())?;
    if (uv == Ordering::Equal) != artin.same_action(u, v)? {
        return Ok(Some(fail(
            Some(RepKind::Artin),
            triple(),
            "EQUAL disagrees with the Artin action",
        )));
    }
    Ok(None)
}

fn order(config: &RunConfig) -> Result<Tally> {
    let n = config.strands;
    let search = Search::new();
    let alpha = alphabet(n, true);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let triples: Vec<[BraidWord; 3]> = (0..config.samples)
        .map(|i| {
            let u = braid(&random_word(&mut rng, &alpha, config.max_length), n);
            // every fourth triple repeats u in another spelling, so EQUAL is exercised
            let v = if i % 4 == 0 {
                let r = relators(n).expect("n >= 2");
                let r = &r[rng.gen_range(0..r.len())];
                u.multiply(r).expect("same strands")
            } else {
                braid(&random_word(&mut rng, &alpha, config.max_length), n)
            };
            let w = braid(&random_word(&mut rng, &alpha, config.max_length), n);
            [u, v, w]
        })
        .collect();
    triples.par_iter().for_each(|[u, v, w]| {
        search.check(|| order_case(u, v, w, config.step_budget));
    });
    search.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(strands: usize, max_length: usize, samples: usize) -> RunConfig {
        RunConfig {
            strands,
            max_length,
            samples,
            ..RunConfig::default()
        }
    }

    #[test]
    fn enumeration_counts_reduced_words() {
        // 4 letters: 1 + 4 + 4*3 + 4*9 reduced words of length <= 3
        let search = Search::new();
        let seen = AtomicU64::new(0);
        par_enumerate(&alphabet(3, true), 3, &search, |_| {
            seen.fetch_add(1, AtomicOrdering::Relaxed);
            true
        });
        assert_eq!(seen.into_inner(), 1 + 4 + 12 + 36);
    }

    #[test]
    fn brute_force_membership() {
        assert!(brute_force_contains(&[vec![1, -1], vec![1, 1]], &[2, 0]));
        assert!(!brute_force_contains(&[vec![1, -1], vec![1, 1]], &[1, 0]));
        assert!(brute_force_contains(&[], &[0, 0]));
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &config(3, 4, 20)).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.cases > 0, "{report}");
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let mut c = config(3, 4, 0);
        c.step_budget = 1;
        c.kinds = vec![RepKind::Artin];
        assert!(matches!(
            run_suite(Suite::Oracle, &c),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
