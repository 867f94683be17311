//! The free Lie algebra `L(X_n)` over ℤ.
//!
//! Elements are stored in the Lyndon basis: a Lyndon word `w` stands for its
//! standard bracketing `P_w` (split `w = uv` with `v` the longest proper
//! Lyndon suffix, bracket `[P_u, P_v]`). The tensor expansion of `P_w` is
//! `w` plus lexicographically larger words, so coordinates of any Lie
//! polynomial are read off by repeatedly peeling the smallest word.
//!
//! Degrees are natural (bracket length `p`). Reports that follow the doubled
//! grading print `2p`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};
use crate::tensor::{write_linear_combination, TensorElement};
use crate::word::Word;

/// A bracket tree over generator indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LieMonomial {
    Gen(u8),
    Bracket(Box<LieMonomial>, Box<LieMonomial>),
}

/// A bracket tree with unlabelled leaves, e.g. `[[,],]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BracketShape {
    Leaf,
    Node(Box<BracketShape>, Box<BracketShape>),
}

impl LieMonomial {
    pub fn gen(i: u8) -> Self {
        LieMonomial::Gen(i)
    }

    pub fn bracket(a: LieMonomial, b: LieMonomial) -> Self {
        LieMonomial::Bracket(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieMonomial::Gen(_) => 1,
            LieMonomial::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    /// Leaf letters from left to right.
    pub fn leaves(&self) -> Word {
        let mut v = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut v);
        Word::from_vec(v)
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            LieMonomial::Gen(i) => out.push(*i),
            LieMonomial::Bracket(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn shape(&self) -> BracketShape {
        match self {
            LieMonomial::Gen(_) => BracketShape::Leaf,
            LieMonomial::Bracket(a, b) => BracketShape::Node(Box::new(a.shape()), Box::new(b.shape())),
        }
    }

    pub fn max_letter(&self) -> usize {
        self.leaves().max_letter()
    }

    /// Full expansion `[a,b] ↦ a⊗b − b⊗a` into the tensor algebra.
    pub fn embed(&self) -> TensorElement {
        match self {
            LieMonomial::Gen(i) => TensorElement::from_word(Word::letter(*i)),
            LieMonomial::Bracket(a, b) => a.embed().commutator(&b.embed()),
        }
    }

    /// `ad(x_{i_1})⋯ad(x_{i_{p-1}})(x_{i_p})`, i.e. `[x_{i_1},[x_{i_2},…,x_{i_p}]]`.
    pub fn ad_nested(w: &Word) -> Result<LieMonomial> {
        let letters = w.letters();
        let (&last, init) = letters
            .split_last()
            .ok_or_else(|| Error::Argument("the Specht–Wever map is undefined on the empty word".into()))?;
        Ok(init
            .iter()
            .rev()
            .fold(LieMonomial::Gen(last), |acc, &l| LieMonomial::bracket(LieMonomial::Gen(l), acc)))
    }

    /// Left-normed `[[…[x_{i_1},x_{i_2}],…],x_{i_p}]`.
    pub fn left_normed(w: &Word) -> Result<LieMonomial> {
        let letters = w.letters();
        let (&first, rest) = letters
            .split_first()
            .ok_or_else(|| Error::Argument("empty word has no bracketing".into()))?;
        Ok(rest
            .iter()
            .fold(LieMonomial::Gen(first), |acc, &l| LieMonomial::bracket(acc, LieMonomial::Gen(l))))
    }
}

impl fmt::Display for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieMonomial::Gen(i) => write!(f, "x{i}"),
            LieMonomial::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl BracketShape {
    pub fn leaf_count(&self) -> usize {
        match self {
            BracketShape::Leaf => 1,
            BracketShape::Node(a, b) => a.leaf_count() + b.leaf_count(),
        }
    }

    /// Labels the leaves left to right with the letters of `w`.
    pub fn fill(&self, w: &Word) -> Result<LieMonomial> {
        if w.len() != self.leaf_count() {
            return dim_err(format!("shape {self} has {} leaves, word {w} has {}", self.leaf_count(), w.len()));
        }
        let mut it = w.letters().iter().copied();
        Ok(self.fill_from(&mut it))
    }

    fn fill_from(&self, it: &mut impl Iterator<Item = u8>) -> LieMonomial {
        match self {
            BracketShape::Leaf => LieMonomial::Gen(it.next().expect("leaf count checked")),
            BracketShape::Node(a, b) => {
                let l = a.fill_from(it);
                let r = b.fill_from(it);
                LieMonomial::bracket(l, r)
            }
        }
    }

    /// Every bracketing with `q` leaves (Catalan many).
    pub fn all(q: usize) -> Vec<BracketShape> {
        if q == 0 {
            return Vec::new();
        }
        if q == 1 {
            return vec![BracketShape::Leaf];
        }
        let mut out = Vec::new();
        for left in 1..q {
            for a in BracketShape::all(left) {
                for b in BracketShape::all(q - left) {
                    out.push(BracketShape::Node(Box::new(a.clone()), Box::new(b)));
                }
            }
        }
        out
    }
}

impl fmt::Display for BracketShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketShape::Leaf => Ok(()),
            BracketShape::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl FromStr for BracketShape {
    type Err = Error;

    /// Grammar: `shape := "" | "[" shape "," shape "]"`. Whitespace is ignored.
    /// A lone `.` is also accepted for a single leaf.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> =
            s.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect();
        if chars.len() == 1 && chars[0].1 == '.' {
            return Ok(BracketShape::Leaf);
        }
        let mut pos = 0;
        let shape = parse_shape(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Syntax { column: chars[pos].0, message: "trailing input".into() });
        }
        Ok(shape)
    }
}

fn parse_shape(chars: &[(usize, char)], pos: &mut usize) -> Result<BracketShape> {
    let end_col = chars.last().map(|c| c.0 + 1).unwrap_or(1);
    match chars.get(*pos) {
        Some((_, '[')) => {
            *pos += 1;
            let a = parse_shape(chars, pos)?;
            match chars.get(*pos) {
                Some((_, ',')) => *pos += 1,
                Some((col, _)) => return Err(Error::Syntax { column: *col, message: "expected ','".into() }),
                None => return Err(Error::Syntax { column: end_col, message: "expected ','".into() }),
            }
            let b = parse_shape(chars, pos)?;
            match chars.get(*pos) {
                Some((_, ']')) => *pos += 1,
                Some((col, _)) => return Err(Error::Syntax { column: *col, message: "expected ']'".into() }),
                None => return Err(Error::Syntax { column: end_col, message: "expected ']'".into() }),
            }
            Ok(BracketShape::Node(Box::new(a), Box::new(b)))
        }
        _ => Ok(BracketShape::Leaf),
    }
}

// ---------------------------------------------------------------------------
// Lyndon words

pub fn is_lyndon(w: &Word) -> bool {
    let l = w.letters();
    if l.is_empty() {
        return false;
    }
    (1..l.len()).all(|k| {
        let rotated = l[k..].iter().chain(l[..k].iter());
        l.iter().lt(rotated)
    })
}

/// Lyndon words of length exactly `p` over `1..n`, lexicographically.
pub fn lyndon_words(n: usize, p: usize) -> Vec<Word> {
    if n == 0 || p == 0 {
        return Vec::new();
    }
    let top = n as u8 - 1;
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == p {
            out.push(Word::from_vec(w.iter().map(|&c| c + 1).collect()));
        }
        let m = w.len();
        while w.len() < p {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Standard bracketing of a Lyndon word.
pub fn standard_bracketing(w: &Word) -> LieMonomial {
    let l = w.letters();
    if l.len() == 1 {
        return LieMonomial::Gen(l[0]);
    }
    let split = (1..l.len())
        .find(|&k| is_lyndon(&w.slice(k..l.len())))
        .expect("a word of length ≥ 2 has a Lyndon proper suffix");
    LieMonomial::bracket(standard_bracketing(&w.slice(0..split)), standard_bracketing(&w.slice(split..l.len())))
}

/// The Lyndon basis of `L^p(X_n)` as bracket trees, lexicographically by word.
pub fn lyndon_basis(n: usize, p: usize) -> Vec<LieMonomial> {
    lyndon_words(n, p).iter().map(standard_bracketing).collect()
}

/// `(1/p) Σ_{d|p} μ(d) n^{p/d}`.
pub fn witt_dimension(n: usize, p: usize) -> usize {
    if p == 0 {
        return 0;
    }
    let mut total: i128 = 0;
    for d in 1..=p {
        if p % d == 0 {
            total += mobius(d) as i128 * (n as i128).pow((p / d) as u32);
        }
    }
    (total / p as i128) as usize
}

fn mobius(mut d: usize) -> i32 {
    let mut result = 1;
    let mut f = 2;
    while f * f <= d {
        if d % f == 0 {
            d /= f;
            if d % f == 0 {
                return 0;
            }
            result = -result;
        }
        f += 1;
    }
    if d > 1 {
        result = -result;
    }
    result
}

/// Index of the Lyndon basis of `L^p(X_n)`.
#[derive(Debug)]
pub struct LyndonBasis {
    pub n: usize,
    pub p: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl LyndonBasis {
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
}

type BasisCache = RwLock<HashMap<(usize, usize), Arc<LyndonBasis>>>;
type ExpansionCache = RwLock<HashMap<Word, Arc<TensorElement>>>;

/// Shared, lazily built Lyndon basis for `(n, p)`.
pub fn basis_index(n: usize, p: usize) -> Arc<LyndonBasis> {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap().get(&(n, p)) {
        return b.clone();
    }
    let words = lyndon_words(n, p);
    let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let basis = Arc::new(LyndonBasis { n, p, words, index });
    cache.write().unwrap().entry((n, p)).or_insert(basis).clone()
}

/// Tensor expansion of the standard bracketing of a Lyndon word, cached.
pub fn lyndon_expansion(w: &Word) -> Arc<TensorElement> {
    static CACHE: OnceLock<ExpansionCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(w) {
        return t.clone();
    }
    let t = Arc::new(standard_bracketing(w).embed());
    cache.write().unwrap().entry(w.clone()).or_insert(t).clone()
}

// ---------------------------------------------------------------------------
// Lie elements

/// An element of `L^p(X_n)` in Lyndon coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Word, BigInt>,
}

impl LieElement {
    pub fn zero(n: usize, degree: usize) -> Self {
        LieElement { n, degree, coeffs: BTreeMap::new() }
    }

    pub fn generator(n: usize, i: u8) -> Result<Self> {
        if i == 0 || i as usize > n {
            return Err(Error::Range { index: i as usize, n });
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Word::letter(i), BigInt::one());
        Ok(LieElement { n, degree: 1, coeffs })
    }

    /// The basis element `P_w` for a Lyndon word `w`.
    pub fn basis_element(n: usize, w: &Word) -> Result<Self> {
        w.check_rank(n)?;
        if !is_lyndon(w) {
            return Err(Error::Argument(format!("{w} is not a Lyndon word")));
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w.clone(), BigInt::one());
        Ok(LieElement { n, degree: w.len(), coeffs })
    }

    pub fn from_monomial(n: usize, m: &LieMonomial) -> Result<Self> {
        m.leaves().check_rank(n)?;
        LieElement::from_tensor(n, &m.embed())
    }

    /// Triangular decomposition of a tensor that is a Lie polynomial.
    /// Fails with `InvariantViolation` if it is not.
    pub fn from_tensor(n: usize, t: &TensorElement) -> Result<Self> {
        if t.max_letter() > n {
            return Err(Error::Range { index: t.max_letter(), n });
        }
        let degree = t.degree();
        let mut rest = t.clone();
        let mut coeffs = BTreeMap::new();
        loop {
            let Some((w, c)) = rest.terms().iter().next().map(|(w, c)| (w.clone(), c.clone())) else {
                break;
            };
            if !is_lyndon(&w) {
                return Err(Error::InvariantViolation(format!(
                    "tensor is not a Lie element: leading word {w} is not Lyndon"
                )));
            }
            rest.add_scaled(&lyndon_expansion(&w), &-c.clone());
            coeffs.insert(w, c);
        }
        Ok(LieElement { n, degree, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coordinates keyed by Lyndon word.
    pub fn coefficients(&self) -> &BTreeMap<Word, BigInt> {
        &self.coeffs
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Dense coordinates in the order of [`lyndon_basis`].
    pub fn coordinates(&self) -> Vec<BigInt> {
        let basis = basis_index(self.n, self.degree);
        let mut v = vec![BigInt::zero(); basis.len()];
        for (w, c) in &self.coeffs {
            v[basis.position(w).expect("coefficients are keyed by basis words")] = c.clone();
        }
        v
    }

    pub fn from_coordinates(n: usize, degree: usize, coords: &[BigInt]) -> Result<Self> {
        let basis = basis_index(n, degree);
        if coords.len() != basis.len() {
            return dim_err(format!("{} coordinates for a basis of size {}", coords.len(), basis.len()));
        }
        let coeffs = basis
            .words()
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Ok(LieElement { n, degree, coeffs })
    }

    pub fn embed(&self) -> TensorElement {
        let mut t = TensorElement::zero(self.degree);
        for (w, c) in &self.coeffs {
            t.add_scaled(&lyndon_expansion(w), c);
        }
        t
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        Ok(out)
    }

    pub fn sub(&self, other: &LieElement) -> Result<LieElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        Ok(out)
    }

    pub(crate) fn add_scaled(&mut self, other: &LieElement, scale: &BigInt) {
        for (w, c) in &other.coeffs {
            let entry = self.coeffs.entry(w.clone()).or_default();
            *entry += c * scale;
            if entry.is_zero() {
                self.coeffs.remove(w);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> LieElement {
        if c.is_zero() {
            return LieElement::zero(self.n, self.degree);
        }
        LieElement {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-BigInt::one())
    }

    /// `[self, other]`, normalized. Degrees add.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        if self.n != other.n {
            return dim_err(format!("bracket of elements of ranks {} and {}", self.n, other.n));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(LieElement::zero(self.n, self.degree + other.degree));
        }
        LieElement::from_tensor(self.n, &self.embed().commutator(&other.embed()))
    }

    fn check_compatible(&self, other: &LieElement) -> Result<()> {
        if self.n != other.n || self.degree != other.degree {
            return dim_err(format!(
                "Lie elements of (rank, degree) ({}, {}) and ({}, {})",
                self.n, self.degree, other.n, other.degree
            ));
        }
        Ok(())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(LieMonomial, &BigInt)> =
            self.coeffs.iter().map(|(w, c)| (standard_bracketing(w), c)).collect();
        write_linear_combination(f, terms)
    }
}

/// Normalizes an integer combination of bracket trees of one degree.
pub fn normalize(n: usize, terms: &[(BigInt, LieMonomial)]) -> Result<LieElement> {
    let Some(degree) = terms.first().map(|(_, m)| m.degree()) else {
        return dim_err("normalize needs at least one term to fix the degree");
    };
    let mut t = TensorElement::zero(degree);
    for (c, m) in terms {
        if m.degree() != degree {
            return dim_err(format!("mixed degrees {degree} and {} in a formal sum", m.degree()));
        }
        m.leaves().check_rank(n)?;
        t.add_scaled(&m.embed(), c);
    }
    LieElement::from_tensor(n, &t)
}

/// Specht–Wever map on a single word: the normalized `ad`-nested bracketing.
pub fn specht_wever(n: usize, w: &Word) -> Result<LieElement> {
    w.check_rank(n)?;
    LieElement::from_tensor(n, &specht_wever_expansion(w)?)
}

/// Tensor expansion of `ad(x_{i_1})⋯ad(x_{i_{p-1}})(x_{i_p})`.
pub fn specht_wever_expansion(w: &Word) -> Result<TensorElement> {
    let letters = w.letters();
    let (&last, init) = letters
        .split_last()
        .ok_or_else(|| Error::Argument("the Specht–Wever map is undefined on the empty word".into()))?;
    let mut t = TensorElement::from_word(Word::letter(last));
    for &l in init.iter().rev() {
        t = TensorElement::from_word(Word::letter(l)).commutator(&t);
    }
    Ok(t)
}

/// Linear extension of [`specht_wever`] to a homogeneous tensor of positive degree.
pub fn specht_wever_linear(n: usize, t: &TensorElement) -> Result<LieElement> {
    if t.degree() == 0 {
        return Err(Error::Argument("the Specht–Wever map is defined in positive degree only".into()));
    }
    let mut acc = TensorElement::zero(t.degree());
    for (w, c) in t.iter() {
        acc.add_scaled(&specht_wever_expansion(w)?, c);
    }
    LieElement::from_tensor(n, &acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn mono(s: &str) -> LieMonomial {
        // tiny parser for tests: "[x1,[x1,x2]]"
        fn rec(c: &[u8], i: &mut usize) -> LieMonomial {
            if c[*i] == b'[' {
                *i += 1;
                let a = rec(c, i);
                *i += 1; // ','
                let b = rec(c, i);
                *i += 1; // ']'
                LieMonomial::bracket(a, b)
            } else {
                *i += 1; // 'x'
                let start = *i;
                while *i < c.len() && c[*i].is_ascii_digit() {
                    *i += 1;
                }
                LieMonomial::Gen(std::str::from_utf8(&c[start..*i]).unwrap().parse().unwrap())
            }
        }
        rec(s.as_bytes(), &mut 0)
    }

    #[test]
    fn lyndon_basis_examples() {
        let b1: Vec<String> = lyndon_basis(2, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(b1, vec!["x1", "x2"]);
        let b2: Vec<String> = lyndon_basis(2, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b2, vec!["[x1,x2]"]);
        let b3: Vec<String> = lyndon_basis(2, 3).iter().map(|m| m.to_string()).collect();
        assert_eq!(b3, vec!["[x1,[x1,x2]]", "[[x1,x2],x2]"]);
    }

    #[test]
    fn lyndon_count_matches_witt_formula() {
        for n in 1..=4 {
            for p in 1..=7 {
                let words = lyndon_words(n, p);
                assert_eq!(words.len(), witt_dimension(n, p), "n={n} p={p}");
                assert!(words.iter().all(is_lyndon));
                assert!(words.windows(2).all(|x| x[0] < x[1]));
            }
        }
    }

    #[test]
    fn lyndon_expansion_is_unitriangular() {
        for p in 1..=6 {
            for lw in lyndon_words(3, p) {
                let t = lyndon_expansion(&lw);
                let (first, c) = t.terms().iter().next().unwrap();
                assert_eq!(first, &lw);
                assert!(c.is_one());
            }
        }
    }

    #[test]
    fn embed_examples() {
        assert_eq!(mono("[x1,x2]").embed().to_string(), "x1.x2 - x2.x1");
        assert_eq!(mono("x3").embed().to_string(), "x3");
        // [[x_i,x_j],x_k] with i,j,k = 1,2,3
        let t = mono("[[x1,x2],x3]").embed();
        let mut expected = TensorElement::zero(3);
        for (s, c) in [("1.2.3", 1), ("2.1.3", -1), ("3.1.2", -1), ("3.2.1", 1)] {
            expected.add_term(w(s), BigInt::from(c));
        }
        assert_eq!(t, expected);
    }

    #[test]
    fn normalize_examples() {
        assert!(normalize(2, &[(BigInt::one(), mono("[x1,x1]"))]).unwrap().is_zero());
        let neg = normalize(2, &[(BigInt::one(), mono("[x2,x1]"))]).unwrap();
        assert_eq!(neg.to_string(), "-[x1,x2]");
        let cancel = normalize(
            2,
            &[(BigInt::one(), mono("[[x1,x2],x1]")), (BigInt::one(), mono("[[x2,x1],x1]"))],
        )
        .unwrap();
        assert!(cancel.is_zero());
        assert!(normalize(2, &[]).is_err());
    }

    #[test]
    fn non_lie_tensor_is_rejected() {
        let t = TensorElement::from_word(w("1.2"));
        assert!(matches!(LieElement::from_tensor(2, &t), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn bracket_examples() {
        let x1 = LieElement::generator(2, 1).unwrap();
        let x2 = LieElement::generator(2, 2).unwrap();
        assert_eq!(x1.bracket(&x2).unwrap().to_string(), "[x1,x2]");
        assert!(x1.bracket(&x1).unwrap().is_zero());
    }

    #[test]
    fn specht_wever_examples() {
        assert_eq!(specht_wever(3, &w("2")).unwrap().to_string(), "x2");
        assert_eq!(specht_wever(2, &w("1.2")).unwrap().to_string(), "[x1,x2]");
        assert!(matches!(specht_wever(2, &Word::empty()), Err(Error::Argument(_))));
    }

    #[test]
    fn coordinates_round_trip() {
        for p in 1..=5 {
            for lw in lyndon_words(3, p) {
                let e = LieElement::basis_element(3, &lw).unwrap();
                let back = LieElement::from_tensor(3, &e.embed()).unwrap();
                assert_eq!(back, e);
                assert_eq!(LieElement::from_coordinates(3, p, &e.coordinates()).unwrap(), e);
            }
        }
    }

    #[test]
    fn shapes_parse_and_count() {
        let s: BracketShape = "[[,],]".parse().unwrap();
        assert_eq!(s.leaf_count(), 3);
        assert_eq!(s.to_string(), "[[,],]");
        assert_eq!("".parse::<BracketShape>().unwrap(), BracketShape::Leaf);
        let counts: Vec<usize> = (1..=6).map(|q| BracketShape::all(q).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert!("[[,],".parse::<BracketShape>().is_err());
    }
}
