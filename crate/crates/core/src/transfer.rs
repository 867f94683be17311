//! The transfer product across degrees, the graded product `⋆` on the Schur
//! algebra, and the Schur operad composition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{arg_err, dim_err, Error, Result};
use crate::permutation::{next_permutation, Permutation};
use crate::schur::SchurElement;
use crate::tensor::TensorElement;
use crate::word::Word;

/// An ordered sequence of positive parts `(a_1,…,a_k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return arg_err("a composition needs at least one part");
        }
        if parts.contains(&0) {
            return arg_err("composition parts must be positive");
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Position ranges of the blocks inside `1..=total`.
    fn block_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.parts.len());
        let mut acc = 0;
        for &a in &self.parts {
            starts.push(acc);
            acc += a;
        }
        starts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// `2,1` or `(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Argument(format!("bad composition part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Minimal-length representatives of the left cosets `σ·Σ_λ` in `Σ_d`: the
/// permutations increasing on every block of `λ`. Listed in lexicographic
/// order of their block-label sequences.
pub fn coset_transversal(lambda: &Composition) -> Vec<Permutation> {
    let d = lambda.total();
    let mut labels: Vec<usize> = lambda.parts.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat(i).take(a)).collect();
    let starts = lambda.block_starts();
    let mut out = Vec::new();
    loop {
        // target position t receives the next unused source position of block labels[t]
        let mut next = starts.clone();
        let mut images = vec![0; d];
        for (t, &b) in labels.iter().enumerate() {
            images[next[b]] = t;
            next[b] += 1;
        }
        out.push(Permutation::from_zero_based(images));
        if !next_permutation(&mut labels) {
            break;
        }
    }
    out
}

/// Whether `reps` contains exactly one permutation from each left coset of
/// the Young subgroup `Σ_λ`.
pub fn is_transversal(lambda: &Composition, reps: &[Permutation]) -> bool {
    let d = lambda.total();
    let starts = lambda.block_starts();
    let expected = coset_transversal(lambda).len();
    if reps.len() != expected || reps.iter().any(|p| p.len() != d) {
        return false;
    }
    // σΣ_λ is determined by which target positions each block lands on
    let mut seen = std::collections::BTreeSet::new();
    for p in reps {
        let signature: Vec<Vec<usize>> = lambda
            .parts
            .iter()
            .zip(&starts)
            .map(|(&a, &s)| {
                let mut v: Vec<usize> = (s..s + a).map(|k| p.image0(k)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        if !seen.insert(signature) {
            return false;
        }
    }
    true
}

/// `M_λ(f_1⊗⋯⊗f_k)` with the canonical transversal.
pub fn transfer(lambda: &Composition, fs: &[SchurElement]) -> Result<SchurElement> {
    transfer_with(lambda, fs, &coset_transversal(lambda))
}

/// `M_λ(f_1⊗⋯⊗f_k)` summed over a caller-supplied transversal.
pub fn transfer_with(lambda: &Composition, fs: &[SchurElement], transversal: &[Permutation]) -> Result<SchurElement> {
    if fs.len() != lambda.parts.len() {
        return arg_err(format!("{} factors for composition {lambda}", fs.len()));
    }
    for (f, &a) in fs.iter().zip(&lambda.parts) {
        if f.degree() != a {
            return arg_err(format!("factor of degree {} for part {a} of {lambda}", f.degree()));
        }
    }
    let n = fs[0].n();
    if fs.iter().any(|f| f.n() != n) {
        return dim_err("transfer factors have different ranks");
    }
    let d = lambda.total();
    if transversal.iter().any(|p| p.len() != d) {
        return dim_err(format!("transversal permutations must have size {d}"));
    }
    let inverses: Vec<Permutation> = transversal.iter().map(Permutation::inverse).collect();
    let mut block = BlockTensor::new(lambda, fs);
    SchurElement::read_off(n, d, |u| {
        let mut out = TensorElement::zero(d);
        for (sigma, inv) in transversal.iter().zip(&inverses) {
            let inner = block.apply(&u.act_unchecked(inv));
            out.add_scaled(&inner.act_unchecked(sigma), &BigInt::one());
        }
        Ok(out)
    })
}

/// `f_1⊗⋯⊗f_k` acting blockwise, with the images of the block words cached.
struct BlockTensor<'a> {
    lambda: &'a Composition,
    fs: &'a [SchurElement],
    cache: Vec<HashMap<Word, TensorElement>>,
}

impl<'a> BlockTensor<'a> {
    fn new(lambda: &'a Composition, fs: &'a [SchurElement]) -> Self {
        BlockTensor { lambda, fs, cache: vec![HashMap::new(); fs.len()] }
    }

    fn apply(&mut self, w: &Word) -> TensorElement {
        let mut out = TensorElement::from_word(Word::empty());
        let mut start = 0;
        for (i, &a) in self.lambda.parts.iter().enumerate() {
            let piece = w.slice(start..start + a);
            start += a;
            let f = &self.fs[i];
            let image = self.cache[i].entry(piece).or_insert_with_key(|p| f.apply_to_word_unchecked(p));
            if image.is_zero() {
                return TensorElement::zero(w.len());
            }
            out = out.tensor(image);
        }
        out
    }
}

/// `f ⋆ g`. A degree-0 factor is a scalar and multiplies the other factor.
pub fn star(f: &SchurElement, g: &SchurElement) -> Result<SchurElement> {
    if f.n() != g.n() {
        return dim_err(format!("star of rank {} and rank {} elements", f.n(), g.n()));
    }
    if let Some(c) = f.as_scalar() {
        return Ok(g.scale(&c));
    }
    if let Some(c) = g.as_scalar() {
        return Ok(f.scale(&c));
    }
    transfer(&Composition::new(vec![f.degree(), g.degree()])?, &[f.clone(), g.clone()])
}

/// An element of `⊕_q Schur(q,n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSchurElement {
    n: usize,
    components: BTreeMap<usize, SchurElement>,
}

impl GradedSchurElement {
    pub fn zero(n: usize) -> Self {
        GradedSchurElement { n, components: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: BigInt) -> Self {
        GradedSchurElement::homogeneous(SchurElement::scalar(n, c))
    }

    pub fn homogeneous(f: SchurElement) -> Self {
        let mut g = GradedSchurElement::zero(f.n());
        g.add_component(f).expect("same rank");
        g
    }

    pub fn from_components(n: usize, parts: impl IntoIterator<Item = SchurElement>) -> Result<Self> {
        let mut g = GradedSchurElement::zero(n);
        for f in parts {
            g.add_component(f)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component(&self, q: usize) -> SchurElement {
        self.components.get(&q).cloned().unwrap_or_else(|| SchurElement::zero(self.n, q))
    }

    pub fn components(&self) -> impl Iterator<Item = &SchurElement> {
        self.components.values()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    fn add_component(&mut self, f: SchurElement) -> Result<()> {
        if f.n() != self.n {
            return dim_err(format!("rank {} component in a rank {} graded element", f.n(), self.n));
        }
        let q = f.degree();
        let sum = match self.components.remove(&q) {
            Some(prev) => prev.add(&f)?,
            None => f,
        };
        if !sum.is_zero() {
            self.components.insert(q, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedSchurElement) -> Result<GradedSchurElement> {
        let mut out = self.clone();
        for f in other.components.values() {
            out.add_component(f.clone())?;
        }
        Ok(out)
    }

    /// Bilinear extension of `⋆`, graded by total degree.
    pub fn boxtimes(&self, other: &GradedSchurElement) -> Result<GradedSchurElement> {
        if self.n != other.n {
            return dim_err("graded product of different ranks");
        }
        let mut out = GradedSchurElement::zero(self.n);
        for f in self.components.values() {
            for g in other.components.values() {
                out.add_component(star(f, g)?)?;
            }
        }
        Ok(out)
    }
}

/// Operad composition in `P(m) = Schur(m−1,n)`: `θ ⋆ θ_1 ⋆ ⋯ ⋆ θ_m`, where
/// `θ` has arity `m = thetas.len()`.
pub fn operad_compose(theta: &SchurElement, thetas: &[SchurElement]) -> Result<SchurElement> {
    if theta.degree() + 1 != thetas.len() {
        return arg_err(format!(
            "an element of arity {} composed with {} inputs",
            theta.degree() + 1,
            thetas.len()
        ));
    }
    let mut acc = theta.clone();
    for t in thetas {
        acc = star(&acc, t)?;
    }
    Ok(acc)
}

/// Arity of an operad element `θ ∈ P(m)`.
pub fn arity(theta: &SchurElement) -> usize {
    theta.degree() + 1
}

/// Unit of the operad, `1 ∈ P(1) = Schur(0,n) = ℤ`.
pub fn operad_unit(n: usize) -> SchurElement {
    SchurElement::scalar(n, BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(coset_transversal(&comp(&[3])), vec![Permutation::identity(3)]);
        let t = coset_transversal(&comp(&[1, 1]));
        assert_eq!(t.len(), 2);
        assert!(t.contains(&"(1 2)".parse().unwrap()));
        assert_eq!(coset_transversal(&comp(&[2, 1])).len(), 3);
        assert_eq!(coset_transversal(&comp(&[2, 1, 2])).len(), 30);
        for p in [[1, 1, 1], [2, 2, 1]] {
            assert!(is_transversal(&comp(&p), &coset_transversal(&comp(&p))));
        }
    }

    #[test]
    fn transfer_examples() {
        let f = SchurElement::basis(2, 2)[3].clone();
        assert_eq!(transfer(&comp(&[2]), &[f.clone()]).unwrap(), f);
        let id1 = SchurElement::identity(2, 1);
        let two = SchurElement::identity(2, 2).scale(&BigInt::from(2));
        assert_eq!(transfer(&comp(&[1, 1]), &[id1.clone(), id1]).unwrap(), two);
        assert!(transfer(&comp(&[1, 1]), &[f]).is_err());
    }

    #[test]
    fn scalars_and_arity() {
        let g = SchurElement::basis(2, 2)[1].clone();
        let five = SchurElement::scalar(2, BigInt::from(5));
        assert_eq!(star(&five, &g).unwrap(), g.scale(&BigInt::from(5)));
        let unit = GradedSchurElement::scalar(2, BigInt::from(1));
        let gg = GradedSchurElement::homogeneous(g.clone());
        assert_eq!(unit.boxtimes(&gg).unwrap(), gg);
        let theta = SchurElement::basis(2, 1)[0].clone();
        let one = operad_unit(2);
        assert_eq!(operad_compose(&theta, &[one.clone(), one.clone()]).unwrap(), theta);
        assert!(operad_compose(&theta, &[one]).is_err());
    }
}
