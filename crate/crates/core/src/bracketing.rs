//! Group-ring elements of `ℤ[Σ_q]` and the bracketing function `br_q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{dim_err, Result};
use crate::lie::BracketShape;
use crate::permutation::Permutation;
use crate::tensor::{write_linear_combination, TensorElement};
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupRingElement {
    pub fn zero(degree: usize) -> Self {
        GroupRingElement { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, BigInt)>) -> Result<Self> {
        let mut out = GroupRingElement::zero(degree);
        for (p, c) in terms {
            if p.len() != degree {
                return dim_err(format!("permutation of size {} in ℤ[Σ_{degree}]", p.len()));
            }
            let e = out.terms.entry(p).or_default();
            *e += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// `Σ c_σ · act(w, σ)`.
    pub fn apply_to_word(&self, w: &Word) -> Result<TensorElement> {
        if w.len() != self.degree {
            return dim_err(format!("ℤ[Σ_{}] applied to a word of length {}", self.degree, w.len()));
        }
        let mut t = TensorElement::zero(self.degree);
        for (p, c) in &self.terms {
            t.add_term(w.act_unchecked(p), c.clone());
        }
        Ok(t)
    }

    pub fn apply(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(self.degree);
        for (w, c) in t.iter() {
            out.add_scaled(&self.apply_to_word(w)?, c);
        }
        Ok(out)
    }

    /// Terms in the order their images of `x_1⊗…⊗x_q` sort lexicographically,
    /// which lists the identity first.
    fn display_order(&self) -> Vec<(&Permutation, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(p, _)| p.inverse().one_line());
        v
    }
}

struct CycleTerm<'a>(&'a Permutation);

impl fmt::Display for CycleTerm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_identity() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for GroupRingElement {
    /// `1 - (1 2) - (1 2 3) + (1 3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.display_order().into_iter().map(|(p, c)| (CycleTerm(p), c)))
    }
}

/// `br_q(shape)`: the group-ring element whose action on `x_{i_1}⊗…⊗x_{i_q}`
/// reproduces the tensor expansion of the bracket of that shape. Computed on
/// the distinct-letter word `1 2 … q` and cached per shape.
pub fn bracketing_function(shape: &BracketShape) -> Arc<GroupRingElement> {
    static CACHE: OnceLock<Mutex<HashMap<BracketShape, Arc<GroupRingElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(shape) {
        return g.clone();
    }
    let q = shape.leaf_count();
    let distinct = Word::from_vec((1..=q as u8).collect());
    let expansion = shape.fill(&distinct).expect("leaf count matches").embed();
    // act(1..q, σ) = v means v, read as one-line notation, is σ^{-1}.
    let terms = expansion.iter().map(|(v, c)| {
        let one_line: Vec<usize> = v.letters().iter().map(|&l| l as usize).collect();
        (Permutation::from_one_line(&one_line).expect("distinct letters").inverse(), c.clone())
    });
    let g = Arc::new(GroupRingElement::from_terms(q, terms).expect("sizes match"));
    cache.lock().unwrap().entry(shape.clone()).or_insert(g).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::all_words;

    #[test]
    fn example_shapes() {
        let left: BracketShape = "[[,],]".parse().unwrap();
        let right: BracketShape = "[,[,]]".parse().unwrap();
        assert_eq!(bracketing_function(&left).to_string(), "1 - (1 2) - (1 2 3) + (1 3)");
        assert_eq!(bracketing_function(&right).to_string(), "1 - (2 3) - (1 3 2) + (1 3)");
        let leaf = bracketing_function(&BracketShape::Leaf);
        assert_eq!(leaf.to_string(), "1");
        assert_eq!(leaf.terms().len(), 1);
    }

    #[test]
    fn defining_property_on_all_words() {
        for q in 1..=4 {
            for shape in BracketShape::all(q) {
                let br = bracketing_function(&shape);
                for n in 1..=3 {
                    for w in all_words(n, q) {
                        let expected = shape.fill(&w).unwrap().embed();
                        assert_eq!(br.apply_to_word(&w).unwrap(), expected, "shape {shape} word {w}");
                    }
                }
            }
        }
    }
}
