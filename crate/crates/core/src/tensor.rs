//! Homogeneous elements of the tensor algebra `T(V_n)` with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{dim_err, Result};
use crate::permutation::Permutation;
use crate::word::Word;

/// A sparse integer combination of words of one fixed length. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Word, BigInt>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        TensorElement { degree, terms: BTreeMap::new() }
    }

    pub fn from_word(w: Word) -> Self {
        let degree = w.len();
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        TensorElement { degree, terms }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Word, BigInt)>) -> Result<Self> {
        let mut t = TensorElement::zero(degree);
        for (w, c) in terms {
            if w.len() != degree {
                return dim_err(format!("word {w} in a degree-{degree} tensor"));
            }
            t.add_term(w, c);
        }
        Ok(t)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn max_letter(&self) -> usize {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        debug_assert_eq!(w.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &TensorElement, scale: &BigInt) {
        debug_assert_eq!(self.degree, other.degree);
        if scale.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * scale);
        }
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_same_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.degree);
        }
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), -x)).collect(),
        }
    }

    /// Tensor (concatenation) product.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    /// `a⊗b − b⊗a`.
    pub fn commutator(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.tensor(other);
        out.add_scaled(&other.tensor(self), &-BigInt::one());
        out
    }

    /// Linear extension of [`Word::act`].
    pub fn act(&self, sigma: &Permutation) -> Result<TensorElement> {
        if sigma.len() != self.degree {
            return dim_err(format!(
                "degree-{} tensor acted on by a permutation of size {}",
                self.degree,
                sigma.len()
            ));
        }
        Ok(self.act_unchecked(sigma))
    }

    pub(crate) fn act_unchecked(&self, sigma: &Permutation) -> TensorElement {
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(w, c)| (w.act_unchecked(sigma), c.clone())).collect(),
        }
    }

    fn check_same_degree(&self, other: &TensorElement) -> Result<()> {
        if self.degree != other.degree {
            return dim_err(format!("tensor degrees {} and {} differ", self.degree, other.degree));
        }
        Ok(())
    }
}

/// Writes `c1*t1 + c2*t2 - …` with unit coefficients elided; `0` when empty.
pub(crate) fn write_linear_combination<'a, T: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (T, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (t, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag.is_one() {
            write!(f, "{t}")?;
        } else {
            write!(f, "{mag}*{t}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter())
    }
}
