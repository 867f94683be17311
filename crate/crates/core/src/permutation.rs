//! Permutations of `{1..q}`.
//!
//! Internally a permutation is stored 0-based in one-line notation:
//! `images[k] = σ(k+1) - 1`. Composition follows the usual function
//! convention: `a.compose(&b)` is `a ∘ b`, so `b` is applied first.

use std::fmt;
use std::str::FromStr;

use crate::error::{arg_err, Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(q: usize) -> Self {
        Permutation { images: (0..q).collect() }
    }

    /// Builds a permutation from 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let q = images.len();
        let mut seen = vec![false; q];
        let mut zero_based = Vec::with_capacity(q);
        for &img in images {
            if img == 0 || img > q || seen[img - 1] {
                return arg_err(format!("{images:?} is not a permutation of 1..{q}"));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// Builds a permutation of `1..q` from disjoint or overlapping cycles.
    /// Cycles are composed right to left, matching product notation.
    pub fn from_cycles(q: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(q);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..q).collect();
            let mut seen = std::collections::HashSet::new();
            for &c in cycle {
                if c == 0 || c > q {
                    return arg_err(format!("cycle entry {c} outside 1..{q}"));
                }
                if !seen.insert(c) {
                    return arg_err(format!("cycle {cycle:?} repeats {c}"));
                }
            }
            for (k, &c) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[c - 1] = next - 1;
            }
            acc = Permutation { images }.compose(&acc);
        }
        Ok(acc)
    }

    /// Size `q` of the underlying set.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `σ(k)` for 1-based `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    pub(crate) fn image0(&self, k: usize) -> usize {
        self.images[k]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    /// Block sum: `self` on `1..a`, `other` shifted onto `a+1..a+b`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let a = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + a));
        Permutation { images }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest element,
    /// ordered by that element. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let q = self.len();
        let mut seen = vec![false; q];
        let mut out = Vec::new();
        for start in 0..q {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }

    /// Every permutation of `1..q`, in lexicographic order of one-line notation.
    pub fn all(q: usize) -> AllPermutations {
        AllPermutations { next: Some((0..q).collect()) }
    }
}

/// Lexicographic enumeration of `Σ_q`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// Advances `v` to its lexicographic successor; returns false at the last arrangement.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Permutation {
    /// Parses cycle notation `(1 2 3)(4 5)` or one-line `[2,3,1]`.
    /// Cycle notation needs the size `q`; `None` takes the largest entry.
    pub fn parse(text: &str, q: Option<usize>) -> Result<Self> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| syntax(t.len() + 1, "expected ']'"))?;
            let images = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| syntax(1, "bad one-line entry")))
                .collect::<Result<Vec<_>>>()?;
            let p = Permutation::from_one_line(&images)?;
            if let Some(q) = q {
                if q != p.len() {
                    return Err(Error::Dimension(format!(
                        "one-line permutation has size {}, expected {q}",
                        p.len()
                    )));
                }
            }
            return Ok(p);
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        let mut col = 1;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| syntax(col, "expected '('"))?;
            let close = open.find(')').ok_or_else(|| syntax(col + open.len() + 1, "expected ')'"))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| syntax(col + 1, "bad cycle entry")))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            col += close + 2;
            rest = open[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let q = q.unwrap_or(max);
        Permutation::from_cycles(q, &cycles)
    }
}

fn syntax(column: usize, message: &str) -> Error {
    Error::Syntax { column, message: message.to_string() }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}
