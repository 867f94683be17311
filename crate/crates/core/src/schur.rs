//! The Schur algebra `Schur(q,n)`: `Σ_q`-equivariant endomorphisms of `V_n^{⊗q}`.
//!
//! An element is stored by its orbit coefficients. For each weakly increasing
//! word `u` the image `f(u)` is invariant under the Young subgroup `I_u`, so it
//! is a combination of `I_u`-orbit sums, each named by its canonical key. The
//! value on any other word `v = u·σ` is then forced: `f(v) = f(u)·σ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{arg_err, dim_err, Error, Result};
use crate::lie::LieElement;
use crate::permutation::Permutation;
use crate::tensor::TensorElement;
use crate::word::{all_words, orbit_keys, sorted_words, stabilizer_orbit, stabilizer_orbit_key_unchecked, Word};

/// Largest `q` for which [`EndoMatrix::is_equivariant`] will run.
pub const EQUIVARIANCE_GUARD: usize = 8;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SchurJson", into = "SchurJson")]
pub struct SchurElement {
    n: usize,
    q: usize,
    data: BTreeMap<Word, BTreeMap<Word, BigInt>>,
}

impl SchurElement {
    pub fn zero(n: usize, q: usize) -> Self {
        SchurElement { n, q, data: BTreeMap::new() }
    }

    pub fn identity(n: usize, q: usize) -> Self {
        let mut out = SchurElement::zero(n, q);
        for u in sorted_words(n, q) {
            out.insert_unchecked(u.clone(), u, BigInt::one());
        }
        out
    }

    /// The scalar `c` in `Schur(0,n) = ℤ`.
    pub fn scalar(n: usize, c: BigInt) -> Self {
        let mut out = SchurElement::zero(n, 0);
        out.insert_unchecked(Word::empty(), Word::empty(), c);
        out
    }

    /// Builds the equivariant extension of the given orbit coefficients.
    /// Repeated `(u, key)` pairs are summed.
    pub fn from_orbit_data(n: usize, q: usize, data: impl IntoIterator<Item = (Word, Word, BigInt)>) -> Result<Self> {
        let mut out = SchurElement::zero(n, q);
        for (u, key, c) in data {
            if u.len() != q || key.len() != q {
                return dim_err(format!("orbit entry ({u}, {key}) in degree {q}"));
            }
            u.check_rank(n)?;
            key.check_rank(n)?;
            if !u.is_sorted() {
                return arg_err(format!("{u} is not weakly increasing"));
            }
            if stabilizer_orbit_key_unchecked(&u, &key) != key {
                return arg_err(format!("{key} is not a canonical orbit key for {u}"));
            }
            out.insert_unchecked(u, key, c);
        }
        Ok(out)
    }

    fn insert_unchecked(&mut self, u: Word, key: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let inner = self.data.entry(u.clone()).or_default();
        let e = inner.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            inner.remove(&key);
            if inner.is_empty() {
                self.data.remove(&u);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    /// The scalar value of a degree-0 element.
    pub fn as_scalar(&self) -> Option<BigInt> {
        (self.q == 0).then(|| self.coefficient(&Word::empty(), &Word::empty()))
    }

    pub fn coefficient(&self, u: &Word, key: &Word) -> BigInt {
        self.data.get(u).and_then(|m| m.get(key)).cloned().unwrap_or_default()
    }

    /// Nonzero orbit coefficients `(u, key, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&Word, &Word, &BigInt)> {
        self.data.iter().flat_map(|(u, m)| m.iter().map(move |(k, c)| (u, k, c)))
    }

    pub fn num_entries(&self) -> usize {
        self.data.values().map(BTreeMap::len).sum()
    }

    /// `f(u)` for a weakly increasing `u`.
    pub fn image_of_sorted(&self, u: &Word) -> TensorElement {
        let mut t = TensorElement::zero(self.q);
        if let Some(m) = self.data.get(u) {
            for (key, c) in m {
                for w in stabilizer_orbit(u, key) {
                    t.add_term(w, c.clone());
                }
            }
        }
        t
    }

    pub fn apply_to_word(&self, v: &Word) -> Result<TensorElement> {
        if v.len() != self.q {
            return dim_err(format!("Schur element of degree {} applied to a word of length {}", self.q, v.len()));
        }
        v.check_rank(self.n)?;
        Ok(self.apply_to_word_unchecked(v))
    }

    pub(crate) fn apply_to_word_unchecked(&self, v: &Word) -> TensorElement {
        let u = v.sorted_rep();
        let image = self.image_of_sorted(&u);
        if &u == v {
            image
        } else {
            image.act_unchecked(&v.from_sorted_permutation())
        }
    }

    pub fn apply(&self, t: &TensorElement) -> Result<TensorElement> {
        if t.degree() != self.q {
            return dim_err(format!("Schur element of degree {} applied to a degree-{} tensor", self.q, t.degree()));
        }
        if t.max_letter() > self.n {
            return Err(Error::Range { index: t.max_letter(), n: self.n });
        }
        let mut out = TensorElement::zero(self.q);
        let mut cache: BTreeMap<Word, TensorElement> = BTreeMap::new();
        for (v, c) in t.iter() {
            let u = v.sorted_rep();
            let image = cache.entry(u.clone()).or_insert_with(|| self.image_of_sorted(&u));
            if &u == v {
                out.add_scaled(image, c);
            } else {
                out.add_scaled(&image.act_unchecked(&v.from_sorted_permutation()), c);
            }
        }
        Ok(out)
    }

    /// `f` applied to a Lie element, decomposed back in the Lyndon basis.
    /// The image of a Lie element is always Lie, so a failure here is reported
    /// as an invariant violation.
    pub fn apply_to_lie(&self, a: &LieElement) -> Result<LieElement> {
        if a.n() != self.n {
            return dim_err(format!("rank {} Lie element, rank {} Schur element", a.n(), self.n));
        }
        if a.degree() != self.q {
            return dim_err(format!("degree-{} Lie element, degree-{} Schur element", a.degree(), self.q));
        }
        let image = self.apply(&a.embed())?;
        LieElement::from_tensor(self.n, &image)
            .map_err(|e| Error::InvariantViolation(format!("Schur image of a Lie element is not Lie: {e}")))
    }

    pub fn add(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (u, k, c) in other.entries() {
            out.insert_unchecked(u.clone(), k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurElement) -> Result<SchurElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> SchurElement {
        let mut out = SchurElement::zero(self.n, self.q);
        for (u, k, x) in self.entries() {
            out.insert_unchecked(u.clone(), k.clone(), x * c);
        }
        out
    }

    pub fn neg(&self) -> SchurElement {
        self.scale(&-BigInt::one())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_same_space(other)?;
        SchurElement::read_off(self.n, self.q, |u| self.apply(&other.image_of_sorted(u)))
    }

    /// Reads orbit coefficients from the images of the sorted words. Every word
    /// of one `I_u`-orbit must carry the same coefficient in `f(u)`.
    pub(crate) fn read_off(
        n: usize,
        q: usize,
        mut image: impl FnMut(&Word) -> Result<TensorElement>,
    ) -> Result<SchurElement> {
        let mut out = SchurElement::zero(n, q);
        for u in sorted_words(n, q) {
            let t = image(&u)?;
            let inner = read_orbit_coefficients(&u, &t)?;
            if !inner.is_empty() {
                out.data.insert(u, inner);
            }
        }
        Ok(out)
    }

    /// The basis of `Schur(q,n)`: one unit orbit coefficient per `(u, key)`,
    /// ordered by `u` and then by key.
    pub fn basis(n: usize, q: usize) -> Vec<SchurElement> {
        let mut out = Vec::new();
        for u in sorted_words(n, q) {
            for key in orbit_keys(&u, n) {
                let mut f = SchurElement::zero(n, q);
                f.insert_unchecked(u.clone(), key, BigInt::one());
                out.push(f);
            }
        }
        out
    }

    /// `dim Schur(q,n)`, counted from the orbit parameterization.
    pub fn dimension(n: usize, q: usize) -> usize {
        sorted_words(n, q).iter().map(|u| orbit_keys(u, n).len()).sum()
    }

    /// `ζ_{q,σ}`: relabels every letter `j` as `σ(j)`, position by position.
    pub fn letter_substitution(n: usize, q: usize, sigma: &Permutation) -> Result<SchurElement> {
        if sigma.len() != n {
            return dim_err(format!("letter substitution on {n} letters given a permutation of size {}", sigma.len()));
        }
        let mut out = SchurElement::zero(n, q);
        for u in sorted_words(n, q) {
            let image = Word::from_vec(u.letters().iter().map(|&l| sigma.image(l as usize) as u8).collect());
            // the image is constant on the blocks of u, so it is its own key
            out.insert_unchecked(u, image, BigInt::one());
        }
        Ok(out)
    }

    pub fn to_matrix(&self) -> EndoMatrix {
        let columns = all_words(self.n, self.q)
            .map(|w| {
                self.apply_to_word_unchecked(&w)
                    .iter()
                    .map(|(v, c)| (v.index(self.n), c.clone()))
                    .collect()
            })
            .collect();
        EndoMatrix { n: self.n, q: self.q, columns }
    }

    fn check_same_space(&self, other: &SchurElement) -> Result<()> {
        if self.n != other.n || self.q != other.q {
            return dim_err(format!(
                "Schur({},{}) and Schur({},{})",
                self.q, self.n, other.q, other.n
            ));
        }
        Ok(())
    }
}

fn read_orbit_coefficients(u: &Word, t: &TensorElement) -> Result<BTreeMap<Word, BigInt>> {
    let mut inner: BTreeMap<Word, BigInt> = BTreeMap::new();
    let mut seen: BTreeMap<Word, usize> = BTreeMap::new();
    for (w, c) in t.iter() {
        let key = stabilizer_orbit_key_unchecked(u, w);
        match inner.get(&key) {
            Some(prev) if prev != c => {
                return arg_err(format!("image of {u} is not invariant under its stabilizer at {w}"));
            }
            Some(_) => {}
            None => {
                inner.insert(key.clone(), c.clone());
            }
        }
        *seen.entry(key).or_default() += 1;
    }
    for (key, count) in &seen {
        if *count != stabilizer_orbit(u, key).len() {
            return arg_err(format!("image of {u} is not invariant under its stabilizer near {key}"));
        }
    }
    Ok(inner)
}

/// An explicit linear map on `V_n^{⊗q}`, stored as sparse columns indexed by
/// [`Word::index`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EndoMatrix {
    n: usize,
    q: usize,
    columns: Vec<BTreeMap<usize, BigInt>>,
}

impl EndoMatrix {
    pub fn zero(n: usize, q: usize) -> Self {
        let size = n.pow(q as u32);
        EndoMatrix { n, q, columns: vec![BTreeMap::new(); size] }
    }

    /// Builds the matrix from the image of each basis word.
    pub fn from_fn(n: usize, q: usize, mut image: impl FnMut(&Word) -> TensorElement) -> Self {
        let columns = all_words(n, q)
            .map(|w| image(&w).iter().map(|(v, c)| (v.index(n), c.clone())).collect())
            .collect();
        EndoMatrix { n, q, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    /// Entry in row `row`, column `col` (the coefficient of word `row` in the image of word `col`).
    pub fn entry(&self, row: usize, col: usize) -> BigInt {
        self.columns[col].get(&row).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, row: usize, col: usize, c: BigInt) {
        if c.is_zero() {
            self.columns[col].remove(&row);
        } else {
            self.columns[col].insert(row, c);
        }
    }

    pub fn image(&self, w: &Word) -> TensorElement {
        let mut t = TensorElement::zero(self.q);
        for (&r, c) in &self.columns[w.index(self.n)] {
            t.add_term(Word::from_index(r, self.n, self.q), c.clone());
        }
        t
    }

    /// Whether `M(w·σ) = M(w)·σ` for every word `w`.
    pub fn commutes_with(&self, sigma: &Permutation) -> bool {
        all_words(self.n, self.q).all(|w| {
            let lhs = &self.columns[w.act_unchecked(sigma).index(self.n)];
            let rhs: BTreeMap<usize, BigInt> = self.columns[w.index(self.n)]
                .iter()
                .map(|(&r, c)| (Word::from_index(r, self.n, self.q).act_unchecked(sigma).index(self.n), c.clone()))
                .collect();
            *lhs == rhs
        })
    }

    /// Whether the map commutes with all of `Σ_q`. Checking the adjacent
    /// transpositions suffices since they generate the group.
    pub fn is_equivariant(&self) -> Result<bool> {
        if self.q > EQUIVARIANCE_GUARD {
            return Err(Error::Resource(format!(
                "equivariance check limited to q <= {EQUIVARIANCE_GUARD}, got {}",
                self.q
            )));
        }
        Ok((1..self.q).all(|k| {
            let s = Permutation::from_cycles(self.q, &[vec![k, k + 1]]).expect("valid transposition");
            self.commutes_with(&s)
        }))
    }

    /// Decomposes an equivariant matrix into orbit coefficients.
    pub fn read_orbit_data(&self) -> Result<SchurElement> {
        if !self.is_equivariant()? {
            return arg_err("matrix does not commute with the symmetric group");
        }
        SchurElement::read_off(self.n, self.q, |u| Ok(self.image(u)))
    }

    pub fn compose(&self, other: &EndoMatrix) -> Result<EndoMatrix> {
        if self.n != other.n || self.q != other.q {
            return dim_err("matrices act on different tensor powers");
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (&mid, c) in col {
                    for (&r, d) in &self.columns[mid] {
                        *out.entry(r).or_default() += c * d;
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            })
            .collect();
        Ok(EndoMatrix { n: self.n, q: self.q, columns })
    }
}

#[derive(Serialize, Deserialize)]
struct SchurJson {
    n: usize,
    q: usize,
    entries: Vec<SchurJsonEntry>,
}

#[derive(Serialize, Deserialize)]
struct SchurJsonEntry {
    u: String,
    key: String,
    coeff: String,
}

impl From<SchurElement> for SchurJson {
    fn from(f: SchurElement) -> Self {
        let entries = f
            .entries()
            .map(|(u, k, c)| SchurJsonEntry { u: u.to_dotted(), key: k.to_dotted(), coeff: c.to_string() })
            .collect();
        SchurJson { n: f.n, q: f.q, entries }
    }
}

impl TryFrom<SchurJson> for SchurElement {
    type Error = Error;

    fn try_from(j: SchurJson) -> Result<Self> {
        let mut data = Vec::with_capacity(j.entries.len());
        for e in j.entries {
            let c: BigInt = e
                .coeff
                .parse()
                .map_err(|_| Error::Argument(format!("bad coefficient {:?}", e.coeff)))?;
            data.push((e.u.parse()?, e.key.parse()?, c));
        }
        SchurElement::from_orbit_data(j.n, j.q, data)
    }
}

impl SchurElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<SchurElement> {
        serde_json::from_str(text).map_err(|e| Error::Argument(format!("Schur element JSON: {e}")))
    }
}
