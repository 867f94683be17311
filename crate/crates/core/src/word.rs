//! Basis words of `V_n^{⊗q}` and the place-permutation action of `Σ_q`.
//!
//! A word `x_{i_1}⊗…⊗x_{i_q}` is stored as its letters `i_1..i_q` (1-based).
//! The action convention is fixed once: in `act(w, σ)` position `t` of the
//! result holds letter `σ^{-1}(t)` of `w`, i.e. the letter at position `s`
//! moves to position `σ(s)`. With `Permutation::compose` being ordinary
//! function composition this gives
//! `act(act(w, σ), τ) == act(w, τ ∘ σ)`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{arg_err, dim_err, Error, Result};
use crate::permutation::{next_permutation, Permutation};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<u8>);

/// Letter counts `(deg_{x_1}, …, deg_{x_n})`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiDegree(pub Vec<usize>);

impl MultiDegree {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Letters must be ≥ 1; the rank bound is checked separately by [`Word::check_rank`].
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.contains(&0) {
            return arg_err("word letters are 1-based");
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec(letters: Vec<u8>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn letter(i: u8) -> Self {
        Word::from_vec(vec![i])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l as usize > n) {
            Some(&l) => Err(Error::Range { index: l as usize, n }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, r: Range<usize>) -> Word {
        Word(self.0[r].to_vec())
    }

    /// Place-permutation action; see the module docs for the convention.
    pub fn act(&self, sigma: &Permutation) -> Result<Word> {
        if sigma.len() != self.len() {
            return dim_err(format!(
                "word of length {} acted on by a permutation of size {}",
                self.len(),
                sigma.len()
            ));
        }
        Ok(self.act_unchecked(sigma))
    }

    pub(crate) fn act_unchecked(&self, sigma: &Permutation) -> Word {
        let mut out = vec![0u8; self.len()];
        for (s, &l) in self.0.iter().enumerate() {
            out[sigma.image0(s)] = l;
        }
        Word(out)
    }

    /// The full `Σ_q`-orbit: every rearrangement of the letters.
    pub fn orbit(&self) -> BTreeSet<Word> {
        let mut letters = self.0.clone();
        letters.sort_unstable();
        let mut out = BTreeSet::new();
        loop {
            out.insert(Word(letters.clone()));
            if !next_permutation(&mut letters) {
                break;
            }
        }
        out
    }

    /// The weakly increasing member of the orbit.
    pub fn sorted_rep(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn multidegree(&self, n: usize) -> MultiDegree {
        let mut counts = vec![0; n];
        for &l in &self.0 {
            if (l as usize) <= n {
                counts[l as usize - 1] += 1;
            }
        }
        MultiDegree(counts)
    }

    /// Maximal runs of equal letters in a sorted word: the blocks preserved by
    /// the Young subgroup `I_u`.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for k in 1..=self.len() {
            if k == self.len() || self.0[k] != self.0[start] {
                out.push(start..k);
                start = k;
            }
        }
        out
    }

    /// A permutation `σ` with `u.act(σ) == self`, where `u = self.sorted_rep()`.
    /// Equal letters are matched in order of appearance.
    pub fn from_sorted_permutation(&self) -> Permutation {
        let q = self.len();
        let mut order: Vec<usize> = (0..q).collect();
        order.sort_by_key(|&t| (self.0[t], t));
        // order[s] is the position in self of the s-th letter of the sorted word
        Permutation::from_zero_based(order)
    }

    /// Base-`n` index of the word among all `n^q` words of its length.
    pub fn index(&self, n: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * n + (l as usize - 1))
    }

    pub fn from_index(mut index: usize, n: usize, q: usize) -> Word {
        let mut v = vec![0u8; q];
        for k in (0..q).rev() {
            v[k] = (index % n) as u8 + 1;
            index /= n;
        }
        Word(v)
    }

    /// `1.1.2` form used by the JSON formats.
    pub fn to_dotted(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        parts.join(".")
    }
}

/// Canonical representative of the `I_u`-orbit of `w`: the letters of `w`
/// sorted inside each block of equal letters of `u`.
pub fn stabilizer_orbit_key(u: &Word, w: &Word) -> Result<Word> {
    if !u.is_sorted() {
        return arg_err(format!("{u} is not weakly increasing"));
    }
    if u.len() != w.len() {
        return dim_err(format!("stabilizer key: lengths {} and {} differ", u.len(), w.len()));
    }
    Ok(stabilizer_orbit_key_unchecked(u, w))
}

pub(crate) fn stabilizer_orbit_key_unchecked(u: &Word, w: &Word) -> Word {
    let mut v = w.0.clone();
    for b in u.blocks() {
        v[b].sort_unstable();
    }
    Word(v)
}

/// Every word in the `I_u`-orbit of `w` (rearrangements inside each block of `u`).
pub fn stabilizer_orbit(u: &Word, w: &Word) -> Vec<Word> {
    let key = stabilizer_orbit_key_unchecked(u, w);
    let blocks = u.blocks();
    let mut out = vec![key.0.clone()];
    for b in blocks {
        let mut next = Vec::new();
        for base in &out {
            let mut seg: Vec<u8> = base[b.clone()].to_vec();
            loop {
                let mut v = base.clone();
                v[b.clone()].copy_from_slice(&seg);
                next.push(v);
                if !next_permutation(&mut seg) {
                    break;
                }
            }
        }
        out = next;
    }
    out.into_iter().map(Word).collect()
}

/// All `n^q` words of length `q`, in lexicographic (= index) order.
pub fn all_words(n: usize, q: usize) -> impl Iterator<Item = Word> {
    let total = n.checked_pow(q as u32).expect("word space too large");
    (0..total).map(move |i| Word::from_index(i, n, q))
}

/// The weakly increasing words `S_{n,q}`, lexicographically.
pub fn sorted_words(n: usize, q: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(n: u8, q: usize, lo: u8, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if cur.len() == q {
            out.push(Word(cur.clone()));
            return;
        }
        for l in lo..=n {
            cur.push(l);
            rec(n, q, l, cur, out);
            cur.pop();
        }
    }
    if n > 0 || q == 0 {
        rec(n as u8, q, 1, &mut cur, &mut out);
    }
    out
}

/// Canonical `I_u`-orbit keys for a sorted `u`: words sorted inside each block of `u`.
pub fn orbit_keys(u: &Word, n: usize) -> Vec<Word> {
    let mut out: Vec<Vec<u8>> = vec![Vec::new()];
    for b in u.blocks() {
        let segs = sorted_words(n, b.len());
        let mut next = Vec::with_capacity(out.len() * segs.len());
        for base in &out {
            for s in &segs {
                let mut v = base.clone();
                v.extend_from_slice(&s.0);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Word).collect()
}

impl fmt::Display for Word {
    /// `x1.x2.x1`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `x1.x2.x3`, `1.2.3`, and the empty string for the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut column = 1;
        for part in t.split('.') {
            let p = part.trim();
            let digits = p.strip_prefix('x').unwrap_or(p);
            let value: u8 = digits.parse().map_err(|_| Error::Syntax {
                column,
                message: format!("bad letter '{part}'"),
            })?;
            if value == 0 {
                return Err(Error::Syntax { column, message: "letters are 1-based".into() });
            }
            letters.push(value);
            column += part.len() + 1;
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str, q: usize) -> Permutation {
        Permutation::parse(s, Some(q)).unwrap()
    }

    #[test]
    fn act_examples() {
        assert_eq!(w("x1.x2").act(&p("(1 2)", 2)).unwrap(), w("x2.x1"));
        assert_eq!(w("1.2.3").act(&Permutation::identity(3)).unwrap(), w("1.2.3"));
        // (123) sends x_i⊗x_j⊗x_k to x_k⊗x_i⊗x_j
        assert_eq!(w("1.2.3").act(&p("(1 2 3)", 3)).unwrap(), w("3.1.2"));
        assert!(matches!(w("1.2").act(&Permutation::identity(3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn action_law_exhaustive() {
        for q in 0..=5 {
            let perms: Vec<_> = Permutation::all(q).collect();
            let word = Word::from_vec((1..=q as u8).collect());
            for s in &perms {
                let ws = word.act(s).unwrap();
                for t in &perms {
                    assert_eq!(ws.act(t).unwrap(), word.act(&t.compose(s)).unwrap());
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(w("1.1").orbit().len(), 1);
        assert_eq!(w("1.2").orbit(), [w("1.2"), w("2.1")].into_iter().collect());
        assert_eq!(w("1.1.2").orbit().len(), 3);
    }

    #[test]
    fn sorted_rep_examples() {
        assert_eq!(w("2.1").sorted_rep(), w("1.2"));
        assert_eq!(w("1.1").sorted_rep(), w("1.1"));
        assert_eq!(w("3.1.3").sorted_rep(), w("1.3.3"));
        let s = w("3.1.3").sorted_rep();
        assert_eq!(s.sorted_rep(), s);
    }

    #[test]
    fn stabilizer_key_examples() {
        assert_eq!(stabilizer_orbit_key(&w("1.1"), &w("2.1")).unwrap(), w("1.2"));
        assert_eq!(stabilizer_orbit_key(&w("1.2"), &w("2.1")).unwrap(), w("2.1"));
        assert_eq!(stabilizer_orbit_key(&w("1.1.2"), &w("3.1.2")).unwrap(), w("1.3.2"));
        assert!(matches!(stabilizer_orbit_key(&w("2.1"), &w("1.1")), Err(Error::Argument(_))));
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(w("1.2.1").multidegree(2), MultiDegree(vec![2, 1]));
        assert_eq!(Word::empty().multidegree(3), MultiDegree(vec![0, 0, 0]));
    }

    #[test]
    fn sorted_permutation_carries_sorted_rep() {
        for word in all_words(3, 4) {
            let sigma = word.from_sorted_permutation();
            assert_eq!(word.sorted_rep().act(&sigma).unwrap(), word);
        }
    }

    #[test]
    fn orbit_sizes_partition_word_space() {
        for n in 1..=3 {
            for q in 0..=5 {
                let total: usize = sorted_words(n, q).iter().map(|u| u.orbit().len()).sum();
                assert_eq!(total, n.pow(q as u32));
            }
        }
    }

    #[test]
    fn index_round_trip() {
        for (i, word) in all_words(3, 3).enumerate() {
            assert_eq!(word.index(3), i);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("x1.x2.x1").letters(), &[1, 2, 1]);
        assert_eq!(w("1.2.1").to_string(), "x1.x2.x1");
        assert_eq!(w("1.2.1").to_dotted(), "1.2.1");
        assert_eq!(w(""), Word::empty());
        assert!("x1.y".parse::<Word>().is_err());
    }
}
