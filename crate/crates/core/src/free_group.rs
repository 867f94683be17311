//! Free groups, the basis-conjugating automorphisms `χ_{i,j}` and commutator
//! automorphisms `θ_{i,[x_s,x_t]}`, and the McCool relations.
//!
//! Group commutators are `[a,b] = a⁻¹b⁻¹ab`. Endomorphisms compose as
//! functions: `(α∘β)(x) = α(β(x))`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{arg_err, dim_err, Error, Result};

/// A freely reduced word in `x_1^{±1}, …`; letter `k > 0` is `x_k`, `-k` is `x_k⁻¹`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GroupWord(Vec<i32>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        GroupWord(vec![i as i32])
    }

    /// Reduces an arbitrary letter sequence. Letter 0 is rejected.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut out = GroupWord::identity();
        for l in letters {
            if l == 0 {
                return arg_err("letter 0 is not a generator");
            }
            out.push(l);
        }
        Ok(out)
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// `a⁻¹b⁻¹ab`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> GroupWord {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn product<'a>(words: impl IntoIterator<Item = &'a GroupWord>) -> GroupWord {
        words.into_iter().fold(GroupWord::identity(), |acc, w| acc.mul(w))
    }
}

impl fmt::Display for GroupWord {
    /// `x1 x2^-1 x1`, or `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in s.split(' ') {
            let column = offset + 1;
            offset += token.len() + 1;
            if token.is_empty() || token == "1" {
                continue;
            }
            let syntax = |message: &str| Error::Syntax { column, message: message.to_string() };
            let rest = token.strip_prefix('x').ok_or_else(|| syntax("expected a generator x<k>"))?;
            let (index, inverse) = match rest.split_once('^') {
                Some((i, "-1")) => (i, true),
                Some((_, "1")) => (&rest[..rest.len() - 2], false),
                Some(_) => return Err(syntax("only the exponents ^1 and ^-1 are allowed")),
                None => (rest, false),
            };
            let k: i32 = index.parse().map_err(|_| syntax("expected a generator index"))?;
            if k <= 0 {
                return Err(syntax("generator indices start at 1"));
            }
            letters.push(if inverse { -k } else { k });
        }
        GroupWord::from_letters(letters)
    }
}

/// An endomorphism of the free group `F_n` given by the images of the generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EndoOnFree {
    n: usize,
    images: Vec<GroupWord>,
}

impl EndoOnFree {
    pub fn new(n: usize, images: Vec<GroupWord>) -> Result<Self> {
        if images.len() != n {
            return dim_err(format!("{} generator images for rank {n}", images.len()));
        }
        if let Some(w) = images.iter().find(|w| w.max_index() > n) {
            return Err(Error::Range { index: w.max_index(), n });
        }
        Ok(EndoOnFree { n, images })
    }

    pub fn identity(n: usize) -> Self {
        EndoOnFree { n, images: (1..=n).map(GroupWord::generator).collect() }
    }

    /// `χ_{i,j}`: `x_i ↦ x_j⁻¹ x_i x_j`.
    pub fn chi(n: usize, i: usize, j: usize) -> Result<Self> {
        AutGenerator::chi(i, j)?.endo(n, false)
    }

    /// `θ_{i,[x_s,x_t]}`: `x_i ↦ x_i x_s⁻¹ x_t⁻¹ x_s x_t`.
    pub fn theta(n: usize, i: usize, s: usize, t: usize) -> Result<Self> {
        AutGenerator::theta(i, s, t)?.endo(n, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    /// Image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &GroupWord {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        *self == EndoOnFree::identity(self.n)
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord> {
        if w.max_index() > self.n {
            return Err(Error::Range { index: w.max_index(), n: self.n });
        }
        let mut out = GroupWord::identity();
        for &l in w.letters() {
            let image = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out = out.mul(image);
            } else {
                out = out.mul(&image.inverse());
            }
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &EndoOnFree) -> Result<EndoOnFree> {
        if self.n != other.n {
            return dim_err("composition of endomorphisms of different ranks");
        }
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<_>>()?;
        Ok(EndoOnFree { n: self.n, images })
    }
}

impl fmt::Display for EndoOnFree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "x{} -> {w}", k + 1)?;
        }
        Ok(())
    }
}

/// A named generator of `IA_n` whose inverse is known in closed form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AutGenerator {
    Chi(usize, usize),
    Theta(usize, usize, usize),
}

impl AutGenerator {
    pub fn chi(i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return arg_err(format!("chi needs distinct positive indices, got {i},{j}"));
        }
        Ok(AutGenerator::Chi(i, j))
    }

    pub fn theta(i: usize, s: usize, t: usize) -> Result<Self> {
        if i == 0 || s == 0 || s >= t || i == s || i == t {
            return arg_err(format!("theta needs s < t and i outside {{s,t}}, got {i},{s},{t}"));
        }
        Ok(AutGenerator::Theta(i, s, t))
    }

    fn max_index(self) -> usize {
        match self {
            AutGenerator::Chi(i, j) => i.max(j),
            AutGenerator::Theta(i, _, t) => i.max(t),
        }
    }

    /// The generator, or its inverse, as an endomorphism of `F_n`.
    pub fn endo(self, n: usize, inverse: bool) -> Result<EndoOnFree> {
        if self.max_index() > n {
            return Err(Error::Range { index: self.max_index(), n });
        }
        let mut out = EndoOnFree::identity(n);
        let g = |k: usize| GroupWord::generator(k);
        let (i, image) = match self {
            AutGenerator::Chi(i, j) => {
                let conj = if inverse { [g(j), g(i), g(j).inverse()] } else { [g(j).inverse(), g(i), g(j)] };
                (i, GroupWord::product(&conj))
            }
            AutGenerator::Theta(i, s, t) => {
                let c = GroupWord::commutator(&g(s), &g(t));
                (i, g(i).mul(&if inverse { c.inverse() } else { c }))
            }
        };
        out.images[i - 1] = image;
        Ok(out)
    }
}

impl fmt::Display for AutGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutGenerator::Chi(i, j) => write!(f, "chi{i},{j}"),
            AutGenerator::Theta(i, s, t) => write!(f, "theta{i},[{s},{t}]"),
        }
    }
}

/// How a formal product `g_1 g_2 ⋯ g_k` of automorphisms is evaluated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductConvention {
    /// `g_1 ∘ g_2 ∘ ⋯ ∘ g_k`.
    Composition,
    /// `g_k ∘ ⋯ ∘ g_1`.
    Opposite,
}

/// A formal product of generators and their inverses.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AutWord(Vec<(AutGenerator, bool)>);

impl AutWord {
    pub fn identity() -> Self {
        AutWord(Vec::new())
    }

    pub fn gen(g: AutGenerator) -> Self {
        AutWord(vec![(g, false)])
    }

    pub fn letters(&self) -> &[(AutGenerator, bool)] {
        &self.0
    }

    pub fn mul(&self, other: &AutWord) -> AutWord {
        AutWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> AutWord {
        AutWord(self.0.iter().rev().map(|&(g, inv)| (g, !inv)).collect())
    }

    /// `a⁻¹b⁻¹ab`.
    pub fn commutator(a: &AutWord, b: &AutWord) -> AutWord {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn evaluate(&self, n: usize, convention: ProductConvention) -> Result<EndoOnFree> {
        let mut acc = EndoOnFree::identity(n);
        for &(g, inv) in &self.0 {
            let e = g.endo(n, inv)?;
            acc = match convention {
                ProductConvention::Composition => acc.compose(&e)?,
                ProductConvention::Opposite => e.compose(&acc)?,
            };
        }
        Ok(acc)
    }
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, inv)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
            if *inv {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// One instance of a McCool relation, checked under both product conventions.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: u8,
    pub indices: Vec<usize>,
    pub relation: String,
    pub holds_composition: bool,
    pub holds_opposite: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct McCoolReport {
    pub n: usize,
    pub instances: Vec<RelationInstance>,
}

impl McCoolReport {
    /// Whether every instance holds under `convention`.
    pub fn all_hold(&self, convention: ProductConvention) -> bool {
        self.instances.iter().all(|r| match convention {
            ProductConvention::Composition => r.holds_composition,
            ProductConvention::Opposite => r.holds_opposite,
        })
    }

    /// Instances of `family` that fail under `convention`.
    pub fn failures(&self, family: u8, convention: ProductConvention) -> usize {
        self.instances
            .iter()
            .filter(|r| r.family == family)
            .filter(|r| match convention {
                ProductConvention::Composition => !r.holds_composition,
                ProductConvention::Opposite => !r.holds_opposite,
            })
            .count()
    }
}

/// Largest rank accepted by [`verify_mccool`].
pub const MCCOOL_GUARD: usize = 5;

/// Checks every instance of the four McCool relation families in rank `n`.
pub fn verify_mccool(n: usize) -> Result<McCoolReport> {
    if n > MCCOOL_GUARD {
        return Err(Error::Resource(format!("McCool verification limited to n <= {MCCOOL_GUARD}")));
    }
    if n < 2 {
        return arg_err("McCool relations need n >= 2");
    }
    let chi = |a: usize, b: usize| AutWord::gen(AutGenerator::Chi(a, b));
    let mut instances = Vec::new();
    let mut check = |family: u8, indices: Vec<usize>, lhs: AutWord, rhs: AutWord| -> Result<()> {
        let holds = |c| -> Result<bool> { Ok(lhs.evaluate(n, c)? == rhs.evaluate(n, c)?) };
        instances.push(RelationInstance {
            family,
            indices,
            relation: format!("{lhs} = {rhs}"),
            holds_composition: holds(ProductConvention::Composition)?,
            holds_opposite: holds(ProductConvention::Opposite)?,
        });
        Ok(())
    };
    let range = || 1..=n;
    // (1) χ_{i,j} χ_{k,j} χ_{i,k} = χ_{i,k} χ_{i,j} χ_{k,j}
    for i in range() {
        for j in range() {
            for k in range() {
                if i != j && j != k && i != k {
                    let lhs = chi(i, j).mul(&chi(k, j)).mul(&chi(i, k));
                    let rhs = chi(i, k).mul(&chi(i, j)).mul(&chi(k, j));
                    check(1, vec![i, j, k], lhs, rhs)?;
                }
            }
        }
    }
    // (2) [χ_{k,j}, χ_{s,t}] = 1 when {j,k} ∩ {s,t} = ∅
    for k in range() {
        for j in range() {
            for s in range() {
                for t in range() {
                    if k != j && s != t && ![s, t].contains(&j) && ![s, t].contains(&k) {
                        check(2, vec![k, j, s, t], AutWord::commutator(&chi(k, j), &chi(s, t)), AutWord::identity())?;
                    }
                }
            }
        }
    }
    // (3) [χ_{k,j}, χ_{s,j}] = 1
    for k in range() {
        for j in range() {
            for s in range() {
                if k != j && s != j && s != k {
                    check(3, vec![k, j, s], AutWord::commutator(&chi(k, j), &chi(s, j)), AutWord::identity())?;
                }
            }
        }
    }
    // (4) [χ_{i,k}, χ_{i,j}] = [χ_{i,k}, χ_{k,j}^{-1}]
    for i in range() {
        for j in range() {
            for k in range() {
                if i != j && j != k && i != k {
                    let lhs = AutWord::commutator(&chi(i, k), &chi(i, j));
                    let rhs = AutWord::commutator(&chi(i, k), &chi(k, j).inverse());
                    check(4, vec![i, j, k], lhs, rhs)?;
                }
            }
        }
    }
    Ok(McCoolReport { n, instances })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gw(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_reduce() {
        assert_eq!(gw("x1 x2^-1 x2 x1").to_string(), "x1 x1");
        assert_eq!(gw("x1 x1^-1").to_string(), "1");
        assert!(matches!("x1 y2".parse::<GroupWord>(), Err(Error::Syntax { column: 4, .. })));
    }

    #[test]
    fn generator_images() {
        let c = EndoOnFree::chi(3, 1, 2).unwrap();
        assert_eq!(c.image(1).to_string(), "x2^-1 x1 x2");
        assert_eq!(c.image(2).to_string(), "x2");
        let t = EndoOnFree::theta(3, 1, 2, 3).unwrap();
        assert_eq!(t.image(1).to_string(), "x1 x2^-1 x3^-1 x2 x3");
        assert_eq!(c.apply(&gw("x1 x1")).unwrap().to_string(), "x2^-1 x1 x1 x2");
        let inv = AutGenerator::Chi(1, 2).endo(3, true).unwrap();
        assert_eq!(inv.image(1).to_string(), "x2 x1 x2^-1");
        assert!(c.compose(&inv).unwrap().is_identity());
        assert!(EndoOnFree::chi(3, 1, 1).is_err());
    }

    #[test]
    fn conventions_differ_on_noncommuting_product() {
        let w = AutWord::gen(AutGenerator::Chi(1, 2)).mul(&AutWord::gen(AutGenerator::Chi(2, 3)));
        let a = w.evaluate(3, ProductConvention::Composition).unwrap();
        let b = w.evaluate(3, ProductConvention::Opposite).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.image(1).to_string(), "x2^-1 x1 x2");
        assert_eq!(b.image(1).to_string(), "x3^-1 x2^-1 x3 x1 x3^-1 x2 x3");
    }

    #[test]
    fn mccool_rank_three() {
        let r = verify_mccool(3).unwrap();
        assert!(r.all_hold(ProductConvention::Composition));
        // every relation's reversal is also a consequence of the presentation
        assert!(r.all_hold(ProductConvention::Opposite));
        assert_eq!(r.instances.iter().filter(|x| x.family == 2).count(), 0);
        assert!(verify_mccool(4).unwrap().instances.iter().any(|x| x.family == 2));
    }
}
