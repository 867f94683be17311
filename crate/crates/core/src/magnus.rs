//! Truncated Magnus expansion of free-group words, Johnson images of
//! automorphisms in the Johnson filtration, and the pair classification of
//! `χ` generators with finite-depth certificates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::derivation::Derivation;
use crate::error::{arg_err, Error, Result};
use crate::free_group::{AutGenerator, AutWord, EndoOnFree, GroupWord, ProductConvention};
use crate::lie::LieElement;
use crate::tensor::{write_linear_combination, TensorElement};
use crate::word::Word;

/// Largest Magnus truncation used by [`johnson_image`] and [`classify_pair`].
pub const MAX_TRUNCATION: usize = 6;

/// A noncommutative power series in `X_1, …, X_n` with words longer than
/// `truncation` dropped. The empty word carries the constant term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnusSeries {
    truncation: usize,
    terms: BTreeMap<Word, BigInt>,
}

impl MagnusSeries {
    pub fn one(truncation: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::empty(), BigInt::one());
        MagnusSeries { truncation, terms }
    }

    /// `1 + X_i`, or `1 − X_i + X_i² − ⋯` for the inverse letter.
    pub fn letter(i: usize, inverse: bool, truncation: usize) -> Self {
        let mut s = MagnusSeries::one(truncation);
        let mut power = Word::empty();
        for k in 1..=truncation {
            power = power.concat(&Word::letter(i as u8));
            let c = if inverse && k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
            s.terms.insert(power.clone(), c);
            if !inverse {
                break;
            }
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn constant(&self) -> BigInt {
        self.coefficient(&Word::empty())
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    /// Truncated product.
    pub fn mul(&self, other: &MagnusSeries) -> MagnusSeries {
        let truncation = self.truncation.min(other.truncation);
        let mut terms: BTreeMap<Word, BigInt> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.len() + b.len() <= truncation {
                    *terms.entry(a.concat(b)).or_default() += ca * cb;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MagnusSeries { truncation, terms }
    }

    /// The degree-`k` part as a tensor.
    pub fn homogeneous_part(&self, k: usize) -> TensorElement {
        TensorElement::from_terms(k, self.terms.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), c.clone())))
            .expect("lengths filtered")
    }
}

impl fmt::Display for MagnusSeries {
    /// `1 + X1.X2 - X2.X1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Mono<'a>(&'a Word);
        impl fmt::Display for Mono<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return write!(f, "1");
                }
                let parts: Vec<String> = self.0.letters().iter().map(|l| format!("X{l}")).collect();
                write!(f, "{}", parts.join("."))
            }
        }
        let mut ordered: Vec<(&Word, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        write_linear_combination(f, ordered.into_iter().map(|(w, c)| (Mono(w), c)))
    }
}

/// The Magnus expansion of `w`, truncated at degree `d`.
pub fn magnus(w: &GroupWord, d: usize) -> MagnusSeries {
    w.letters().iter().fold(MagnusSeries::one(d), |acc, &l| {
        acc.mul(&MagnusSeries::letter(l.unsigned_abs() as usize, l < 0, d))
    })
}

/// The Johnson image of `α ∈ J^m`: the derivation of degree `m+1` sending
/// `x_i` to the degree-`(m+1)` part of the Magnus expansion of `x_i⁻¹α(x_i)`.
pub fn johnson_image(alpha: &EndoOnFree, m: usize) -> Result<Derivation> {
    if m == 0 {
        return arg_err("Johnson filtration depth starts at 1");
    }
    if m + 1 > MAX_TRUNCATION {
        return Err(Error::Resource(format!("Magnus truncation {} exceeds {MAX_TRUNCATION}", m + 1)));
    }
    let n = alpha.n();
    let mut images = Vec::with_capacity(n);
    for i in 1..=n {
        let g = GroupWord::generator(i).inverse().mul(alpha.image(i));
        let s = magnus(&g, m + 1);
        if let Some(k) = (1..=m).find(|&k| !s.homogeneous_part(k).is_zero()) {
            return Err(Error::NotInFiltration(format!(
                "x{i}^-1 α(x{i}) has a nonzero degree-{k} Magnus term, so α is not in J^{m}"
            )));
        }
        let top = s.homogeneous_part(m + 1);
        let lie = LieElement::from_tensor(n, &top)
            .map_err(|e| Error::InvariantViolation(format!("Johnson image of x{i} is not Lie: {e}")))?;
        images.push(lie);
    }
    Derivation::new(n, m + 1, images)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    FreeAbelian,
    /// Free, with nonvanishing Johnson images up to the requested depth.
    FreeEvidence,
    /// Neither the abelian check nor the certificate succeeded.
    Inconclusive,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::FreeAbelian => "free-abelian",
            PairClass::FreeEvidence => "free (finite-depth evidence)",
            PairClass::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CertificateEntry {
    /// Left-normed commutator in `a`, `b`, e.g. `[[a,b],a]`.
    pub commutator: String,
    /// Number of letters in the commutator; it lies in `J^depth`, so its Johnson image has degree `depth + 1`.
    pub depth: usize,
    pub johnson_image: String,
    pub nonzero: bool,
    /// Whether the image equals the same bracket of `χ̃` derivations.
    pub matches_bracket: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairReport {
    pub n: usize,
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub depth: usize,
    /// `{i,j} ∩ {i',j'} = ∅`, or `j = j'` with `i ≠ i'`.
    pub index_condition: bool,
    pub commutator_trivial: bool,
    pub classification: PairClass,
    pub certificate: Vec<CertificateEntry>,
}

/// Whether `χ_{a}` and `χ_{b}` fall under the commuting case of the classification.
pub fn abelian_index_condition(a: (usize, usize), b: (usize, usize)) -> bool {
    let disjoint = a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
    disjoint || (a.1 == b.1 && a.0 != b.0)
}

/// Classifies the subgroup generated by `χ_a`, `χ_b`. The abelian answer is
/// exact; the free answer is a certificate that every left-normed commutator
/// of length `2..=depth` has a nonzero Johnson image agreeing with the
/// corresponding bracket of `χ̃_a`, `χ̃_b`.
pub fn classify_pair(n: usize, a: (usize, usize), b: (usize, usize), depth: usize) -> Result<PairReport> {
    if a == b {
        return arg_err("classify_pair needs two distinct generators");
    }
    if depth < 2 {
        return arg_err("certificate depth starts at 2");
    }
    if depth + 1 > MAX_TRUNCATION {
        return Err(Error::Resource(format!("certificate depth {depth} needs Magnus truncation above {MAX_TRUNCATION}")));
    }
    let ga = AutGenerator::chi(a.0, a.1)?;
    let gb = AutGenerator::chi(b.0, b.1)?;
    let wa = AutWord::gen(ga);
    let wb = AutWord::gen(gb);
    let conv = ProductConvention::Composition;
    let commutator_trivial = AutWord::commutator(&wa, &wb).evaluate(n, conv)?.is_identity();
    let index_condition = abelian_index_condition(a, b);
    let mut report =
        PairReport { n, a, b, depth, index_condition, commutator_trivial, classification: PairClass::Inconclusive, certificate: Vec::new() };
    if index_condition && commutator_trivial {
        report.classification = PairClass::FreeAbelian;
        return Ok(report);
    }
    let da = Derivation::chi_tilde(n, a.0, a.1)?;
    let db = Derivation::chi_tilde(n, b.0, b.1)?;
    // (label, group word, derivation) for left-normed commutators of the current length
    let mut level = vec![("[a,b]".to_string(), AutWord::commutator(&wa, &wb), da.bracket(&db)?)];
    for k in 2..=depth {
        let mut next = Vec::new();
        for (label, word, der) in &level {
            let image = johnson_image(&word.evaluate(n, conv)?, k)?;
            report.certificate.push(CertificateEntry {
                commutator: label.clone(),
                depth: k,
                johnson_image: image.to_string(),
                nonzero: !image.is_zero(),
                matches_bracket: image == *der,
            });
            if k < depth {
                for (name, w, d) in [("a", &wa, &da), ("b", &wb, &db)] {
                    next.push((format!("[{label},{name}]"), AutWord::commutator(word, w), der.bracket(d)?));
                }
            }
        }
        level = next;
    }
    if report.certificate.iter().all(|e| e.nonzero && e.matches_bracket) {
        report.classification = PairClass::FreeEvidence;
    }
    Ok(report)
}
