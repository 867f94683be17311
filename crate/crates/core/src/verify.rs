//! Packaged verification suites. Each suite enumerates instances, checks them
//! in parallel with exact arithmetic, and aggregates a [`Report`] sorted by
//! instance key. Randomness comes from a ChaCha stream per instance, derived
//! from the seed and the key, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::closure::{schur_closure_rank, GeneratorSet};
use crate::derivation::{bracket_tree, find_annihilating_schur, Derivation};
use crate::error::{arg_err, Error, Result};
use crate::free_group::{verify_mccool, AutGenerator, AutWord, EndoOnFree, ProductConvention};
use crate::lie::{lyndon_basis, specht_wever, specht_wever_expansion, specht_wever_linear, BracketShape, LieElement};
use crate::linalg::{RationalEchelon, SparseRow};
use crate::magnus::{classify_pair, johnson_image, PairClass};
use crate::permutation::Permutation;
use crate::random::{random_lie, random_schur, random_transversal};
use crate::schur::{EndoMatrix, SchurElement};
use crate::transfer::{coset_transversal, is_transversal, operad_compose, operad_unit, star, transfer, transfer_with, Composition};
use crate::word::{all_words, Word};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n^q` accepted by the brute-force dimension oracle.
pub const DIMENSION_ORACLE_GUARD: usize = 256;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    Equivariance,
    Dimension,
    Spechtwever,
    SchurLie,
    StarLaws,
    Operad,
    Prop422,
    Lemma425,
    Generation,
    Mccool,
    Johnson,
    Pairs,
    Lemma32,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Equivariance,
        Suite::Dimension,
        Suite::Spechtwever,
        Suite::SchurLie,
        Suite::StarLaws,
        Suite::Operad,
        Suite::Prop422,
        Suite::Lemma425,
        Suite::Generation,
        Suite::Mccool,
        Suite::Johnson,
        Suite::Pairs,
        Suite::Lemma32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivariance => "equivariance",
            Suite::Dimension => "dimension",
            Suite::Spechtwever => "spechtwever",
            Suite::SchurLie => "schur-lie",
            Suite::StarLaws => "star-laws",
            Suite::Operad => "operad",
            Suite::Prop422 => "prop422",
            Suite::Lemma425 => "lemma425",
            Suite::Generation => "generation",
            Suite::Mccool => "mccool",
            Suite::Johnson => "johnson",
            Suite::Pairs => "pairs",
            Suite::Lemma32 => "lemma32",
        }
    }

    /// Default `(n, max_degree)`. For `johnson` and `pairs` the second value is
    /// the commutator depth.
    pub fn defaults(self) -> (usize, usize) {
        match self {
            Suite::Spechtwever | Suite::StarLaws => (3, 5),
            Suite::Lemma425 => (3, 3),
            Suite::Johnson => (3, 2),
            Suite::Pairs => (3, 3),
            Suite::Mccool => (3, 0),
            _ => (3, 4),
        }
    }

    fn default_samples(self) -> usize {
        match self {
            Suite::SchurLie => 200,
            Suite::StarLaws => 100,
            Suite::Operad => 50,
            _ => 20,
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

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub n: Option<usize>,
    pub max_degree: Option<usize>,
    pub seed: u64,
    pub samples: Option<usize>,
    /// Generator family for `generation`; both when unset.
    pub generators: Option<GeneratorSet>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Parameters {
    pub n: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Instance {
    pub key: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub suite: String,
    pub parameters: Parameters,
    pub passed: bool,
    pub instances: Vec<Instance>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let p = &self.parameters;
        let mut out = format!("suite {} (n={}, max-degree={}, seed={}, samples={}", self.suite, p.n, p.max_degree, p.seed, p.samples);
        if let Some(g) = &p.generators {
            out.push_str(&format!(", generators={g}"));
        }
        out.push_str(")\n");
        for i in &self.instances {
            out.push_str(&format!("  {} {}  {}\n", if i.pass { "PASS" } else { "FAIL" }, i.key, i.detail));
        }
        let passed = self.instances.iter().filter(|i| i.pass).count();
        out.push_str(&format!(
            "{}: {} ({passed}/{} instances, {:.2}s)\n",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.instances.len(),
            self.elapsed.as_secs_f64()
        ));
        out
    }
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<Report> {
    let (dn, dd) = suite.defaults();
    let n = options.n.unwrap_or(dn);
    let max_degree = options.max_degree.unwrap_or(dd);
    let samples = options.samples.unwrap_or(suite.default_samples());
    let ctx = Ctx { n, max_degree, seed: options.seed, samples };
    if n == 0 {
        return arg_err("verify needs n >= 1");
    }
    let start = Instant::now();
    let mut instances = match suite {
        Suite::Equivariance => equivariance(&ctx)?,
        Suite::Dimension => dimension(&ctx)?,
        Suite::Spechtwever => spechtwever(&ctx),
        Suite::SchurLie => schur_lie(&ctx),
        Suite::StarLaws => star_laws(&ctx),
        Suite::Operad => operad(&ctx),
        Suite::Prop422 => prop422(&ctx),
        Suite::Lemma425 => lemma425(&ctx),
        Suite::Generation => generation(&ctx, options.generators)?,
        Suite::Mccool => mccool(&ctx)?,
        Suite::Johnson => johnson(&ctx)?,
        Suite::Pairs => pairs(&ctx)?,
        Suite::Lemma32 => lemma32(&ctx)?,
    };
    instances.sort_by(|a, b| a.key.cmp(&b.key));
    let parameters = Parameters {
        n,
        max_degree,
        seed: options.seed,
        samples,
        generators: (suite == Suite::Generation).then(|| match options.generators {
            Some(GeneratorSet::MTilde) => "mtilde".to_string(),
            Some(GeneratorSet::Gamma) => "gamma".to_string(),
            None => "mtilde,gamma".to_string(),
        }),
    };
    Ok(Report {
        schema: SCHEMA_VERSION,
        tool: "schurlie",
        version: env!("CARGO_PKG_VERSION"),
        suite: suite.name().to_string(),
        parameters,
        passed: !instances.is_empty() && instances.iter().all(|i| i.pass),
        instances,
        elapsed: start.elapsed(),
    })
}

struct Ctx {
    n: usize,
    max_degree: usize,
    seed: u64,
    samples: usize,
}

impl Ctx {
    /// Independent stream per instance key.
    fn rng(&self, key: &str) -> ChaCha8Rng {
        // FNV-1a, fixed across platforms
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in key.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(h);
        rng
    }

    fn ranks_and_degrees(&self, from_degree: usize) -> Vec<(usize, usize)> {
        (1..=self.n).flat_map(|n| (from_degree..=self.max_degree).map(move |q| (n, q))).collect()
    }
}

/// Runs checks in parallel; an `Err` from a check becomes a failing instance.
fn run_all<T: Sync>(items: &[T], key: impl Fn(&T) -> String + Sync, check: impl Fn(&T, &str) -> Result<(bool, Value)> + Sync) -> Vec<Instance> {
    items
        .par_iter()
        .map(|item| {
            let key = key(item);
            match check(item, &key) {
                Ok((pass, detail)) => Instance { key, pass, detail },
                Err(e) => Instance { key, pass: false, detail: json!({ "error": e.to_string() }) },
            }
        })
        .collect()
}

fn factorial(q: usize) -> usize {
    (1..=q).product()
}

fn equivariance(ctx: &Ctx) -> Result<Vec<Instance>> {
    if ctx.max_degree > 6 {
        return Err(Error::Resource("exhaustive equivariance limited to q <= 6".into()));
    }
    let cases = ctx.ranks_and_degrees(0);
    Ok(run_all(&cases, |&(n, q)| format!("n={n} q={q}"), |&(n, q), key| {
        let mut rng = ctx.rng(key);
        let mut elements = SchurElement::basis(n, q);
        let basis_len = elements.len();
        elements.extend((0..ctx.samples).map(|_| random_schur(&mut rng, n, q, 0.3)));
        let perms: Vec<Permutation> = Permutation::all(q).collect();
        let mut failures = 0usize;
        for f in &elements {
            let m = f.to_matrix();
            let commutes = perms.iter().all(|s| m.commutes_with(s));
            if !commutes || m.read_orbit_data()? != *f {
                failures += 1;
            }
        }
        Ok((
            failures == 0,
            json!({ "basis_elements": basis_len, "random_elements": ctx.samples, "permutations": factorial(q), "failures": failures }),
        ))
    }))
}

/// Entry `(row, col)` of an `N×N` matrix as one unknown.
fn unknown(row: usize, col: usize, size: usize) -> usize {
    col * size + row
}

/// Nullspace of `M(w·s) = M(w)·s` over all words and adjacent transpositions
/// `s`, computed directly on matrix entries.
fn equivariant_nullspace(n: usize, q: usize) -> Vec<SparseRow> {
    let size = n.pow(q as u32);
    let words: Vec<Word> = all_words(n, q).collect();
    let mut echelon = RationalEchelon::new(size * size);
    for k in 1..q {
        let s = Permutation::from_cycles(q, &[vec![k, k + 1]]).expect("transposition");
        let moved: Vec<usize> = words.iter().map(|w| w.act(&s).expect("same length").index(n)).collect();
        for col in 0..size {
            for row in 0..size {
                let a = unknown(row, col, size);
                let b = unknown(moved[row], moved[col], size);
                if a != b {
                    echelon.insert_integer([(a, BigInt::one()), (b, -BigInt::one())]);
                }
            }
        }
    }
    echelon.nullspace()
}

fn integral_matrix(n: usize, q: usize, v: &SparseRow) -> EndoMatrix {
    let size = n.pow(q as u32);
    let lcm = v.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut m = EndoMatrix::zero(n, q);
    for (&idx, x) in v {
        let c = (x * num_rational::BigRational::from_integer(lcm.clone())).to_integer();
        m.set(idx % size, idx / size, c);
    }
    m
}

fn dimension(ctx: &Ctx) -> Result<Vec<Instance>> {
    let cases = ctx.ranks_and_degrees(0);
    if cases.iter().any(|&(n, q)| n.pow(q as u32) > DIMENSION_ORACLE_GUARD) {
        return Err(Error::Resource(format!("dimension oracle limited to n^q <= {DIMENSION_ORACLE_GUARD}")));
    }
    Ok(run_all(&cases, |&(n, q)| format!("n={n} q={q}"), |&(n, q), _| {
        let size = n.pow(q as u32);
        let nullspace = equivariant_nullspace(n, q);
        let basis = SchurElement::basis(n, q);
        let mut independent = RationalEchelon::new(size * size);
        for f in &basis {
            let m = f.to_matrix();
            let row = (0..size).flat_map(|c| (0..size).map(move |r| (r, c))).filter_map(|(r, c)| {
                let e = m.entry(r, c);
                (!e.is_zero()).then(|| (unknown(r, c, size), e))
            });
            independent.insert_integer(row.collect::<Vec<_>>());
        }
        let mut decomposed = 0usize;
        for v in &nullspace {
            let m = integral_matrix(n, q, v);
            let all_perms = Permutation::all(q).all(|s| m.commutes_with(&s));
            if all_perms && m.read_orbit_data()?.to_matrix() == m {
                decomposed += 1;
            }
        }
        let expected: BigInt = binomial(BigInt::from(n * n + q) - 1, BigInt::from(q));
        let pass = nullspace.len() == basis.len()
            && BigInt::from(basis.len()) == expected
            && independent.rank() == basis.len()
            && decomposed == nullspace.len();
        Ok((
            pass,
            json!({
                "oracle_dimension": nullspace.len(),
                "basis_size": basis.len(),
                "basis_rank": independent.rank(),
                "binomial": expected.to_string(),
                "decomposed": decomposed,
            }),
        ))
    }))
}

fn spechtwever(ctx: &Ctx) -> Vec<Instance> {
    let cases = ctx.ranks_and_degrees(1);
    run_all(&cases, |&(n, p)| format!("n={n} p={p}"), |&(n, p), _| {
        let mut words = 0usize;
        let mut failures = 0usize;
        for w in all_words(n, p) {
            let b = specht_wever(n, &w)?;
            let bb = specht_wever_linear(n, &b.embed())?;
            words += 1;
            if bb != b.scale(&BigInt::from(p)) {
                failures += 1;
            }
        }
        Ok((failures == 0, json!({ "words": words, "failures": failures })))
    })
}

fn schur_lie(ctx: &Ctx) -> Vec<Instance> {
    let cases = ctx.ranks_and_degrees(1);
    run_all(&cases, |&(n, q)| format!("n={n} q={q}"), |&(n, q), key| {
        let mut rng = ctx.rng(key);
        let words: Vec<Word> = all_words(n, q).collect();
        let expansions: Vec<_> = words.iter().map(specht_wever_expansion).collect::<Result<_>>()?;
        let mut commute_failures = 0usize;
        let mut closure_failures = 0usize;
        for _ in 0..ctx.samples {
            let f = random_schur(&mut rng, n, q, 0.3);
            for (w, e) in words.iter().zip(&expansions) {
                let lhs = f.apply(e)?;
                let rhs = specht_wever_linear(n, &f.apply_to_word(w)?)?.embed();
                if lhs != rhs {
                    commute_failures += 1;
                }
            }
            let a = random_lie(&mut rng, n, q);
            if f.apply_to_lie(&a).is_err() {
                closure_failures += 1;
            }
        }
        Ok((
            commute_failures == 0 && closure_failures == 0,
            json!({ "elements": ctx.samples, "words": words.len(), "commute_failures": commute_failures, "closure_failures": closure_failures }),
        ))
    })
}

/// Degrees `d_1..d_k ≥ 0` with sum at most `max`.
fn random_degrees<R: Rng>(rng: &mut R, k: usize, max: usize) -> Vec<usize> {
    loop {
        let d: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=max)).collect();
        if d.iter().sum::<usize>() <= max {
            return d;
        }
    }
}

fn random_composition<R: Rng>(rng: &mut R, max: usize) -> Composition {
    let total = rng.gen_range(1..=max.max(1));
    let parts = rng.gen_range(1..=total.min(3));
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, total - 1, parts - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    let mut prev = 0;
    let mut out = Vec::new();
    for c in cuts.into_iter().chain([total]) {
        out.push(c - prev);
        prev = c;
    }
    Composition::new(out).expect("positive parts")
}

/// Transversal of `Σ_λ` in `Σ_d` built as `g·h` with `g` over the
/// transversal of the coarser `Σ_μ` and `h` over transversals inside each
/// block of `μ`.
fn product_transversal(fine: &Composition, coarse_groups: &[usize]) -> Result<(Composition, Vec<Permutation>)> {
    let parts = fine.parts();
    let mut coarse = Vec::new();
    let mut inner: Vec<Permutation> = vec![Permutation::identity(0)];
    let mut start = 0;
    for &g in coarse_groups {
        let block = &parts[start..start + g];
        start += g;
        coarse.push(block.iter().sum());
        let local = coset_transversal(&Composition::new(block.to_vec())?);
        inner = inner.iter().flat_map(|h| local.iter().map(move |l| h.direct_sum(l))).collect();
    }
    let coarse = Composition::new(coarse)?;
    let reps = coset_transversal(&coarse).iter().flat_map(|g| inner.iter().map(move |h| g.compose(h))).collect();
    Ok((coarse, reps))
}

fn star_laws(ctx: &Ctx) -> Vec<Instance> {
    let max = ctx.max_degree;
    let laws = ["associativity", "commutativity", "distributivity", "transversal-independence", "transversal-product"];
    let cases: Vec<(usize, &str)> = (1..=ctx.n).flat_map(|n| laws.iter().map(move |&l| (n, l))).collect();
    run_all(&cases, |&(n, law)| format!("n={n} {law}"), |&(n, law), key| {
        let mut rng = ctx.rng(key);
        let mut failures = Vec::new();
        for t in 0..ctx.samples {
            let ok = match law {
                "associativity" => {
                    let d = random_degrees(&mut rng, 3, max);
                    let [f, g, h] = [d[0], d[1], d[2]].map(|q| random_schur(&mut rng, n, q, 0.4));
                    star(&star(&f, &g)?, &h)? == star(&f, &star(&g, &h)?)?
                }
                "commutativity" => {
                    let d = random_degrees(&mut rng, 2, max);
                    let f = random_schur(&mut rng, n, d[0], 0.4);
                    let g = random_schur(&mut rng, n, d[1], 0.4);
                    star(&f, &g)? == star(&g, &f)?
                }
                "distributivity" => {
                    let d = random_degrees(&mut rng, 2, max);
                    let f = random_schur(&mut rng, n, d[0], 0.4);
                    let g = random_schur(&mut rng, n, d[1], 0.4);
                    let h = random_schur(&mut rng, n, d[1], 0.4);
                    star(&f, &g.add(&h)?)? == star(&f, &g)?.add(&star(&f, &h)?)?
                        && star(&g.add(&h)?, &f)? == star(&g, &f)?.add(&star(&h, &f)?)?
                }
                "transversal-independence" => {
                    let lambda = random_composition(&mut rng, max);
                    let fs: Vec<SchurElement> = lambda.parts().iter().map(|&q| random_schur(&mut rng, n, q, 0.4)).collect();
                    let reps = random_transversal(&mut rng, &lambda);
                    let m = transfer(&lambda, &fs)?;
                    is_transversal(&lambda, &reps) && transfer_with(&lambda, &fs, &reps)? == m && m.to_matrix().is_equivariant()?
                }
                _ => {
                    let lambda = random_composition(&mut rng, max);
                    let k = lambda.parts().len();
                    // split the parts into consecutive groups
                    let mut groups = Vec::new();
                    let mut left = k;
                    while left > 0 {
                        let g = rng.gen_range(1..=left);
                        groups.push(g);
                        left -= g;
                    }
                    let (_, reps) = product_transversal(&lambda, &groups)?;
                    is_transversal(&lambda, &reps)
                }
            };
            if !ok {
                failures.push(t);
            }
        }
        Ok((failures.is_empty(), json!({ "instances": ctx.samples, "failed_samples": failures })))
    })
}

fn operad(ctx: &Ctx) -> Vec<Instance> {
    let max = ctx.max_degree;
    let mut cases: Vec<(usize, &str)> = Vec::new();
    for n in 1..=ctx.n {
        cases.push((n, "identity"));
        cases.push((n, "coherence"));
    }
    run_all(&cases, |&(n, kind)| format!("n={n} {kind}"), |&(n, kind), key| {
        let unit = operad_unit(n);
        if kind == "identity" {
            let mut checked = 0usize;
            let mut failures = Vec::new();
            for q in 0..=max {
                for theta in SchurElement::basis(n, q) {
                    let right = operad_compose(&theta, &vec![unit.clone(); q + 1])?;
                    let left = operad_compose(&unit, std::slice::from_ref(&theta))?;
                    checked += 1;
                    if right != theta || left != theta {
                        failures.push(theta.to_json());
                    }
                }
            }
            return Ok((failures.is_empty(), json!({ "elements": checked, "failures": failures })));
        }
        let mut rng = ctx.rng(key);
        let mut evaluated = 0usize;
        let mut failures = Vec::new();
        while evaluated < ctx.samples {
            let theta_deg = rng.gen_range(0..=2.min(max));
            let inner_degs: Vec<usize> = (0..=theta_deg).map(|_| rng.gen_range(0..=1)).collect();
            let outer_degs: Vec<Vec<usize>> = inner_degs.iter().map(|&d| (0..=d).map(|_| rng.gen_range(0..=1)).collect()).collect();
            let total = theta_deg + inner_degs.iter().sum::<usize>() + outer_degs.iter().flatten().sum::<usize>();
            if total > max {
                continue;
            }
            let theta = random_schur(&mut rng, n, theta_deg, 0.5);
            let inner: Vec<SchurElement> = inner_degs.iter().map(|&d| random_schur(&mut rng, n, d, 0.5)).collect();
            let outer: Vec<Vec<SchurElement>> =
                outer_degs.iter().map(|ds| ds.iter().map(|&d| random_schur(&mut rng, n, d, 0.5)).collect()).collect();
            let flat: Vec<SchurElement> = outer.iter().flatten().cloned().collect();
            let lhs = operad_compose(&operad_compose(&theta, &inner)?, &flat)?;
            let nested: Vec<SchurElement> = inner.iter().zip(&outer).map(|(t, o)| operad_compose(t, o)).collect::<Result<_>>()?;
            let rhs = operad_compose(&theta, &nested)?;
            if lhs != rhs {
                failures.push(json!({ "theta": theta_deg, "inner": inner_degs, "outer": outer_degs }));
            }
            evaluated += 1;
        }
        Ok((failures.is_empty(), json!({ "evaluated": evaluated, "failures": failures })))
    })
}

fn lyndon_cases(n: usize, degrees: std::ops::RangeInclusive<usize>) -> Result<Vec<(usize, usize, LieElement)>> {
    let mut out = Vec::new();
    for p in degrees {
        for m in lyndon_basis(n, p) {
            let u = LieElement::from_monomial(n, &m)?;
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        out.push((i, j, u.clone()));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn prop422(ctx: &Ctx) -> Vec<Instance> {
    let n = ctx.n;
    if n < 2 {
        return Vec::new();
    }
    let cases = lyndon_cases(n, 1..=ctx.max_degree).unwrap_or_default();
    run_all(&cases, |(i, j, u)| format!("i={i} j={j} u={u}"), |(i, j, u), _| {
        let (i, j) = (*i, *j);
        let chi = Derivation::chi_tilde(n, i, j)?;
        let lhs = chi.bracket(&Derivation::f_iw(n, j, u)?)?;
        let xi_u = LieElement::generator(n, i as u8)?.bracket(u)?;
        let rhs = Derivation::f_iw(n, i, &xi_u)?.neg().add(&Derivation::f_iw(n, j, &chi.apply(u)?)?)?;
        Ok((lhs == rhs, json!({ "lhs": lhs.to_string() })))
    })
}

fn lemma425(ctx: &Ctx) -> Vec<Instance> {
    let n = ctx.n;
    if n < 2 {
        return Vec::new();
    }
    let cases = lyndon_cases(n, 2..=ctx.max_degree).unwrap_or_default();
    run_all(&cases, |(i, j, u)| format!("i={i} j={j} u={u}"), |(i, j, u), _| {
        let (i, j) = (*i, *j);
        let h = find_annihilating_schur(i, j, u)?;
        let chi = Derivation::chi_tilde(n, i, j)?;
        let a = chi.apply(u)?;
        let b = LieElement::generator(n, i as u8)?.bracket(u)?;
        // -h is the element with h'(χ̃(u)) = 0 and h'([x_i,u]) = [x_i,u]
        let h_pos = h.neg();
        let annihilates = h_pos.apply_to_lie(&a)?.is_zero();
        let fixes = h_pos.apply_to_lie(&b)? == b;
        let conclusion = chi.bracket(&Derivation::f_iw(n, j, u)?)?.schur_act(&h)? == Derivation::f_iw(n, i, &b)?;
        Ok((
            annihilates && fixes && conclusion,
            json!({
                "h_entries": h.num_entries(),
                "annihilates_chi_u": annihilates,
                "fixes_bracket": fixes,
                "phi_conclusion": conclusion,
            }),
        ))
    })
}

fn generation(ctx: &Ctx, family: Option<GeneratorSet>) -> Result<Vec<Instance>> {
    let families: Vec<(GeneratorSet, &str)> = match family {
        Some(GeneratorSet::MTilde) => vec![(GeneratorSet::MTilde, "mtilde")],
        Some(GeneratorSet::Gamma) => vec![(GeneratorSet::Gamma, "gamma")],
        None => vec![(GeneratorSet::MTilde, "mtilde"), (GeneratorSet::Gamma, "gamma")],
    };
    if ctx.n < 2 {
        return arg_err("generation needs n >= 2");
    }
    let mut out = Vec::new();
    for (set, name) in families {
        let report = schur_closure_rank(ctx.n, &set.generators(ctx.n), ctx.max_degree)?;
        for d in report.degrees {
            out.push(Instance {
                key: format!("{name} p={}", d.degree),
                pass: d.is_surjective(),
                detail: serde_json::to_value(&d).expect("serializable"),
            });
        }
    }
    Ok(out)
}

fn mccool(ctx: &Ctx) -> Result<Vec<Instance>> {
    let report = verify_mccool(ctx.n)?;
    let mut out: Vec<Instance> = report
        .instances
        .iter()
        .map(|r| {
            let idx: Vec<String> = r.indices.iter().map(ToString::to_string).collect();
            Instance {
                key: format!("family {} ({})", r.family, idx.join(",")),
                pass: r.holds_composition,
                detail: json!({ "relation": r.relation, "composition": r.holds_composition, "opposite": r.holds_opposite }),
            }
        })
        .collect();
    if ctx.n >= 3 {
        // the two product conventions must be distinguishable
        let w = AutWord::gen(AutGenerator::chi(1, 2)?).mul(&AutWord::gen(AutGenerator::chi(2, 3)?));
        let c = w.evaluate(ctx.n, ProductConvention::Composition)?;
        let o = w.evaluate(ctx.n, ProductConvention::Opposite)?;
        out.push(Instance {
            key: "convention guard chi12*chi23".into(),
            pass: c != o && c.image(1).to_string() == "x2^-1 x1 x2",
            detail: json!({ "composition_x1": c.image(1).to_string(), "opposite_x1": o.image(1).to_string() }),
        });
    }
    Ok(out)
}

fn chi_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn johnson(ctx: &Ctx) -> Result<Vec<Instance>> {
    let n = ctx.n;
    if n < 2 {
        return arg_err("johnson needs n >= 2");
    }
    let mut out = Vec::new();
    for (i, j) in chi_pairs(n) {
        let image = johnson_image(&EndoOnFree::chi(n, i, j)?, 1)?;
        out.push(Instance {
            key: format!("degree1 chi({i},{j})"),
            pass: image == Derivation::chi_tilde(n, i, j)?,
            detail: json!({ "image": image.to_string() }),
        });
    }
    for i in 1..=n {
        for s in 1..=n {
            for t in s + 1..=n {
                if i != s && i != t {
                    let image = johnson_image(&EndoOnFree::theta(n, i, s, t)?, 1)?;
                    out.push(Instance {
                        key: format!("degree1 theta({i},[{s},{t}])"),
                        pass: image == Derivation::theta_tilde(n, i, s, t)?,
                        detail: json!({ "image": image.to_string() }),
                    });
                }
            }
        }
    }
    // left-normed commutators of χ generators against brackets of χ̃
    let gens = chi_pairs(n);
    let mut sequences: Vec<Vec<(usize, usize)>> = gens.iter().map(|&g| vec![g]).collect();
    for depth in 2..=ctx.max_degree {
        sequences = sequences.iter().flat_map(|s| gens.iter().map(move |&g| [s.clone(), vec![g]].concat())).collect();
        let checked = run_all(&sequences, |s| {
            let names: Vec<String> = s.iter().map(|(i, j)| format!("chi({i},{j})")).collect();
            format!("depth{depth} [{}]", names.join(","))
        }, |s, _| {
            let words: Vec<AutWord> = s.iter().map(|&(i, j)| Ok(AutWord::gen(AutGenerator::chi(i, j)?))).collect::<Result<_>>()?;
            let ders: Vec<Derivation> = s.iter().map(|&(i, j)| Derivation::chi_tilde(n, i, j)).collect::<Result<_>>()?;
            let word = words[1..].iter().fold(words[0].clone(), |acc, w| AutWord::commutator(&acc, w));
            let der = ders[1..].iter().try_fold(ders[0].clone(), |acc, d| acc.bracket(d))?;
            let image = johnson_image(&word.evaluate(n, ProductConvention::Composition)?, depth)?;
            Ok((image == der, json!({ "image": image.to_string() })))
        });
        out.extend(checked);
    }
    Ok(out)
}

fn pairs(ctx: &Ctx) -> Result<Vec<Instance>> {
    let n = ctx.n;
    if n < 2 {
        return arg_err("pairs needs n >= 2");
    }
    let gens = chi_pairs(n);
    let mut cases = Vec::new();
    for (k, &a) in gens.iter().enumerate() {
        for &b in &gens[k + 1..] {
            cases.push((a, b));
        }
    }
    let depth = ctx.max_degree;
    Ok(run_all(&cases, |(a, b)| format!("chi({},{}) chi({},{})", a.0, a.1, b.0, b.1), |&(a, b), _| {
        let report = classify_pair(n, a, b, depth)?;
        let expected = if report.index_condition { PairClass::FreeAbelian } else { PairClass::FreeEvidence };
        Ok((report.classification == expected, serde_json::to_value(&report).expect("serializable")))
    }))
}

/// Checks the `χ̃` substitution identity and the value of iterated `χ̃`
/// brackets on generators, over all bracket shapes with `2..=max_degree`
/// (resp. `1..=max_degree`) leaves.
fn lemma32(ctx: &Ctx) -> Result<Vec<Instance>> {
    let n = ctx.n;
    if n < 3 {
        return arg_err("lemma32 needs n >= 3");
    }
    let mut cases: Vec<(&str, usize, Vec<usize>)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for jp in 1..=n {
                if i != j && j != jp && i != jp {
                    for r in 2..=ctx.max_degree {
                        cases.push(("substitution", r, vec![i, j, jp]));
                    }
                }
            }
        }
        for r in 1..=ctx.max_degree {
            cases.push(("generator-values", r, vec![i]));
        }
    }
    Ok(run_all(&cases, |(kind, r, idx)| {
        let idx: Vec<String> = idx.iter().map(ToString::to_string).collect();
        format!("{kind} r={r} ({})", idx.join(","))
    }, |(kind, r, idx), _| {
        let r = *r;
        let mut checked = 0usize;
        let mut failures = Vec::new();
        let leaves_word = Word::new((1..=r as u8).collect())?;
        if *kind == "substitution" {
            let (i, j, jp) = (idx[0], idx[1], idx[2]);
            let a = Derivation::chi_tilde(n, i, j)?;
            let b = Derivation::chi_tilde(n, i, jp)?;
            let b_hat = Derivation::chi_tilde(n, j, jp)?.neg();
            for shape in BracketShape::all(r) {
                let m = shape.fill(&leaves_word)?;
                for mask in 0..1u32 << r {
                    let pick = |hat: bool| -> Vec<Derivation> {
                        (0..r).map(|k| if mask >> k & 1 == 1 { if hat { b_hat.clone() } else { b.clone() } } else { a.clone() }).collect()
                    };
                    checked += 1;
                    if bracket_tree(&m, &pick(false))? != bracket_tree(&m, &pick(true))? {
                        failures.push(format!("{shape} mask {mask:0r$b}"));
                    }
                }
            }
        } else {
            let i = idx[0];
            let others: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
            let xi = LieElement::generator(n, i as u8)?;
            for shape in BracketShape::all(r) {
                let m = shape.fill(&leaves_word)?;
                for choice in 0..others.len().pow(r as u32) {
                    let js: Vec<usize> = (0..r).map(|k| others[choice / others.len().pow(k as u32) % others.len()]).collect();
                    let leaves: Vec<Derivation> = js.iter().map(|&j| Derivation::chi_tilde(n, i, j)).collect::<Result<_>>()?;
                    let u = bracket_tree(&m, &leaves)?;
                    let check = LieElement::from_monomial(n, &shape.fill(&Word::new(js.iter().map(|&j| j as u8).collect())?)?)?;
                    let expected = xi.bracket(&check)?;
                    checked += 1;
                    let ok = (1..=n).all(|k| if k == i { *u.image(k) == expected } else { u.image(k).is_zero() });
                    if !ok {
                        failures.push(format!("{shape} {js:?}"));
                    }
                }
            }
        }
        Ok((failures.is_empty(), json!({ "checked": checked, "failures": failures })))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n: usize, d: usize) -> VerifyOptions {
        VerifyOptions { n: Some(n), max_degree: Some(d), seed: 7, samples: Some(3), generators: None }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Equivariance, Suite::Dimension, Suite::Spechtwever, Suite::StarLaws, Suite::Prop422] {
            let r = run_suite(s, &opts(2, 3)).unwrap();
            assert!(r.passed, "{}", r.to_human());
        }
    }

    #[test]
    fn dimension_matches_binomial() {
        let r = run_suite(Suite::Dimension, &opts(2, 2)).unwrap();
        let i = r.instances.iter().find(|i| i.key == "n=2 q=2").unwrap();
        assert_eq!(i.detail["oracle_dimension"], 10);
    }

    #[test]
    fn json_is_deterministic() {
        let a = run_suite(Suite::StarLaws, &opts(2, 3)).unwrap().to_json();
        let b = run_suite(Suite::StarLaws, &opts(2, 3)).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }
}
