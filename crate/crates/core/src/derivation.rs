//! Derivations of the free Lie algebra, stored by their values on generators.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{arg_err, dim_err, Error, Result};
use crate::lie::{LieElement, LieMonomial};
use crate::linalg::solve_rational;
use crate::schur::SchurElement;
use crate::tensor::TensorElement;
use crate::word::Word;

/// A degree-`p` derivation `D` of `L(X_n)`; `images[i-1] = D(x_i) ∈ L^p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    n: usize,
    degree: usize,
    images: Vec<LieElement>,
}

impl Derivation {
    pub fn new(n: usize, degree: usize, images: Vec<LieElement>) -> Result<Self> {
        if images.len() != n {
            return dim_err(format!("{} generator images for rank {n}", images.len()));
        }
        if degree == 0 {
            return arg_err("derivations have degree at least 1");
        }
        for (k, a) in images.iter().enumerate() {
            if a.n() != n || a.degree() != degree {
                return dim_err(format!(
                    "image of x{} has rank {} and degree {}, expected rank {n} and degree {degree}",
                    k + 1,
                    a.n(),
                    a.degree()
                ));
            }
        }
        Ok(Derivation { n, degree, images })
    }

    pub fn zero(n: usize, degree: usize) -> Self {
        Derivation { n, degree, images: vec![LieElement::zero(n, degree); n] }
    }

    /// `χ̃_{i,j}`: `x_i ↦ [x_i,x_j]`, other generators to 0.
    pub fn chi_tilde(n: usize, i: usize, j: usize) -> Result<Self> {
        check_index(i, n)?;
        check_index(j, n)?;
        if i == j {
            return arg_err(format!("chi_tilde needs distinct indices, got {i},{j}"));
        }
        let w = bracket_of_generators(n, i, j)?;
        Derivation::f_iw(n, i, &w)
    }

    /// `θ̃_{i,[x_s,x_t]}`: `x_i ↦ [x_s,x_t]`, other generators to 0.
    pub fn theta_tilde(n: usize, i: usize, s: usize, t: usize) -> Result<Self> {
        for k in [i, s, t] {
            check_index(k, n)?;
        }
        if s >= t || i == s || i == t {
            return arg_err(format!("theta_tilde needs s < t and i outside {{s,t}}, got {i},{s},{t}"));
        }
        let w = bracket_of_generators(n, s, t)?;
        Derivation::f_iw(n, i, &w)
    }

    /// `f_{i,w}`: `x_i ↦ w`, other generators to 0.
    pub fn f_iw(n: usize, i: usize, w: &LieElement) -> Result<Self> {
        check_index(i, n)?;
        if w.n() != n {
            return dim_err(format!("rank {} element for a rank {n} derivation", w.n()));
        }
        let mut images = vec![LieElement::zero(n, w.degree()); n];
        images[i - 1] = w.clone();
        Derivation::new(n, w.degree(), images)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[LieElement] {
        &self.images
    }

    /// `D(x_i)`, 1-based.
    pub fn image(&self, i: usize) -> &LieElement {
        &self.images[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LieElement::is_zero)
    }

    /// Lyndon coordinates of `D(x_1), …, D(x_n)`, concatenated.
    pub fn coordinates(&self) -> Vec<BigInt> {
        self.images.iter().flat_map(LieElement::coordinates).collect()
    }

    pub fn from_coordinates(n: usize, degree: usize, coords: &[BigInt]) -> Result<Self> {
        if n == 0 || coords.len() % n != 0 {
            return dim_err(format!("{} coordinates for rank {n}", coords.len()));
        }
        let chunk = coords.len() / n;
        let images = coords
            .chunks(chunk.max(1))
            .take(n)
            .map(|c| LieElement::from_coordinates(n, degree, c))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(n, degree, images)
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same_space(other)?;
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Derivation { n: self.n, degree: self.degree, images })
    }

    pub fn sub(&self, other: &Derivation) -> Result<Derivation> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Derivation {
        Derivation { n: self.n, degree: self.degree, images: self.images.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> Derivation {
        self.scale(&-BigInt::one())
    }

    /// `D(a)` by the Leibniz rule. Computed in the tensor algebra, where `D`
    /// extends uniquely as a derivation and restricts to the one on `L(X_n)`.
    pub fn apply(&self, a: &LieElement) -> Result<LieElement> {
        if a.n() != self.n {
            return dim_err(format!("rank {} derivation applied to a rank {} element", self.n, a.n()));
        }
        let embedded: Vec<TensorElement> = self.images.iter().map(LieElement::embed).collect();
        let degree = a.degree() + self.degree - 1;
        let mut out = TensorElement::zero(degree);
        for (w, c) in a.embed().iter() {
            let letters = w.letters();
            for k in 0..letters.len() {
                let image = &embedded[letters[k] as usize - 1];
                if image.is_zero() {
                    continue;
                }
                let prefix = w.slice(0..k);
                let suffix = w.slice(k + 1..letters.len());
                for (v, d) in image.iter() {
                    out.add_term(prefix.concat(v).concat(&suffix), c * d);
                }
            }
        }
        LieElement::from_tensor(self.n, &out)
    }

    /// `[D, D'] = D∘D' − D'∘D`, of degree `p + p' − 1`.
    pub fn bracket(&self, other: &Derivation) -> Result<Derivation> {
        if self.n != other.n {
            return dim_err("bracket of derivations of different ranks");
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| self.apply(b)?.sub(&other.apply(a)?))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(self.n, self.degree + other.degree - 1, images)
    }

    /// `Φ_f(D)`: post-composition of the generator images with `f`.
    pub fn schur_act(&self, f: &SchurElement) -> Result<Derivation> {
        if f.degree() != self.degree {
            return dim_err(format!("Schur element of degree {} acting on a degree-{} derivation", f.degree(), self.degree));
        }
        if f.n() != self.n {
            return dim_err(format!("rank {} Schur element acting on a rank {} derivation", f.n(), self.n));
        }
        let images = self.images.iter().map(|a| f.apply_to_lie(a)).collect::<Result<Vec<_>>>()?;
        Ok(Derivation { n: self.n, degree: self.degree, images })
    }

    fn check_same_space(&self, other: &Derivation) -> Result<()> {
        if self.n != other.n || self.degree != other.degree {
            return dim_err(format!(
                "derivations of rank/degree {}/{} and {}/{}",
                self.n, self.degree, other.n, other.degree
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Derivation {
    /// `x1=[x1,x2]; x2=0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "x{}={a}", k + 1)?;
        }
        Ok(())
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::Range { index: i, n });
    }
    Ok(())
}

fn bracket_of_generators(n: usize, a: usize, b: usize) -> Result<LieElement> {
    LieElement::from_monomial(n, &LieMonomial::bracket(LieMonomial::gen(a as u8), LieMonomial::gen(b as u8)))
}

/// Evaluates a bracket tree whose leaves index into `leaves`.
pub fn bracket_tree(m: &LieMonomial, leaves: &[Derivation]) -> Result<Derivation> {
    match m {
        LieMonomial::Gen(k) => leaves
            .get(*k as usize - 1)
            .cloned()
            .ok_or_else(|| Error::Argument(format!("leaf {k} has no derivation"))),
        LieMonomial::Bracket(a, b) => bracket_tree(a, leaves)?.bracket(&bracket_tree(b, leaves)?),
    }
}

/// A Schur element `h` of degree `k+1` with `h(χ̃_{i,j}(u)) = 0` and
/// `h([x_i,u]) = −[x_i,u]`, so that `Φ_h([χ̃_{i,j}, f_{j,u}]) = f_{i,[x_i,u]}`.
///
/// Single basis elements are tried first in basis order; otherwise the
/// projections onto the multidegrees of `[x_i,u]` not met by `χ̃_{i,j}(u)`;
/// otherwise a rational solve over the relevant part of the basis.
pub fn find_annihilating_schur(i: usize, j: usize, u: &LieElement) -> Result<SchurElement> {
    let n = u.n();
    check_index(i, n)?;
    check_index(j, n)?;
    if i == j {
        return arg_err("find_annihilating_schur needs i != j");
    }
    if u.degree() < 2 {
        return arg_err(format!("u must have degree at least 2, got {}", u.degree()));
    }
    let q = u.degree() + 1;
    let a = Derivation::chi_tilde(n, i, j)?.apply(u)?;
    let b = LieElement::generator(n, i as u8)?.bracket(u)?;
    if b.is_zero() {
        return Ok(SchurElement::zero(n, q));
    }
    let target = b.neg();
    let supports = |x: &LieElement| -> BTreeSet<Word> { x.embed().iter().map(|(w, _)| w.sorted_rep()).collect() };
    let a_support = supports(&a);
    let b_support = supports(&b);
    let relevant = |f: &SchurElement| f.entries().next().is_some_and(|(v, _, _)| b_support.contains(v) || a_support.contains(v));

    let candidates: Vec<SchurElement> = SchurElement::basis(n, q).into_iter().filter(|f| relevant(f)).collect();
    for f in &candidates {
        let (us, _, _) = f.entries().next().expect("basis elements are nonzero");
        if !b_support.contains(us) {
            continue;
        }
        if !f.apply_to_lie(&a)?.is_zero() {
            continue;
        }
        let fb = f.apply_to_lie(&b)?;
        if let Some(c) = scalar_ratio(&fb, &target) {
            return Ok(f.scale(&c));
        }
    }

    if a_support.is_disjoint(&b_support) {
        let data = b_support.iter().map(|v| (v.clone(), v.clone(), -BigInt::one()));
        return SchurElement::from_orbit_data(n, q, data);
    }

    // ∑ c_f f(a) = 0 and ∑ c_f f(b) = −b over the candidates
    let columns: Vec<(Vec<BigInt>, Vec<BigInt>)> = candidates
        .iter()
        .map(|f| Ok((f.apply_to_lie(&a)?.coordinates(), f.apply_to_lie(&b)?.coordinates())))
        .collect::<Result<_>>()?;
    let rows = columns.first().map_or(0, |c| c.0.len() + c.1.len());
    let mut matrix = vec![vec![BigRational::zero(); columns.len()]; rows];
    for (col, (fa, fb)) in columns.iter().enumerate() {
        for (r, x) in fa.iter().chain(fb).enumerate() {
            matrix[r][col] = BigRational::from_integer(x.clone());
        }
    }
    let rhs: Vec<BigRational> = std::iter::repeat(BigInt::zero())
        .take(a.coordinates().len())
        .chain(target.coordinates())
        .map(BigRational::from_integer)
        .collect();
    let not_found = || Error::NotFound(format!("no integral Schur element annihilating chi_tilde({i},{j})({u})"));
    let x = solve_rational(&matrix, &rhs).ok_or_else(not_found)?;
    if x.iter().any(|c| !c.is_integer()) {
        return Err(not_found());
    }
    let mut h = SchurElement::zero(n, q);
    for (f, c) in candidates.iter().zip(&x) {
        h = h.add(&f.scale(&c.to_integer()))?;
    }
    Ok(h)
}

/// `c` with `x = c·y`, if it exists (`y` nonzero).
fn scalar_ratio(x: &LieElement, y: &LieElement) -> Option<BigInt> {
    let (w, yc) = y.coefficients().iter().next()?;
    let xc = x.coefficient(w);
    if (&xc % yc) != BigInt::zero() {
        return None;
    }
    let c = &xc / yc;
    if c.is_zero() {
        return None;
    }
    (*x == y.scale(&c)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::lyndon_basis;

    fn lie(n: usize, s: &str) -> LieElement {
        let m = parse_monomial(s);
        LieElement::from_monomial(n, &m).unwrap()
    }

    // tiny bracket parser for tests: [a,b] with single-digit generators
    fn parse_monomial(s: &str) -> LieMonomial {
        fn rec(b: &[u8], pos: &mut usize) -> LieMonomial {
            if b[*pos] == b'[' {
                *pos += 1;
                let l = rec(b, pos);
                *pos += 1; // ','
                let r = rec(b, pos);
                *pos += 1; // ']'
                LieMonomial::bracket(l, r)
            } else {
                *pos += 1; // 'x'
                let d = b[*pos] - b'0';
                *pos += 1;
                LieMonomial::gen(d)
            }
        }
        rec(s.as_bytes(), &mut 0)
    }

    /// Leibniz rule applied recursively over the bracket tree.
    fn leibniz_oracle(d: &Derivation, m: &LieMonomial) -> LieElement {
        match m {
            LieMonomial::Gen(k) => d.image(*k as usize).clone(),
            LieMonomial::Bracket(a, b) => {
                let la = LieElement::from_monomial(d.n(), a).unwrap();
                let lb = LieElement::from_monomial(d.n(), b).unwrap();
                leibniz_oracle(d, a).bracket(&lb).unwrap().add(&la.bracket(&leibniz_oracle(d, b)).unwrap()).unwrap()
            }
        }
    }

    #[test]
    fn generator_derivations() {
        let c = Derivation::chi_tilde(3, 1, 2).unwrap();
        assert_eq!(c.image(1), &lie(3, "[x1,x2]"));
        assert!(c.image(2).is_zero());
        assert_ne!(c, Derivation::chi_tilde(3, 2, 1).unwrap());
        assert!(Derivation::chi_tilde(3, 1, 1).is_err());
        let t = Derivation::theta_tilde(3, 3, 1, 2).unwrap();
        assert_eq!(t.image(3), &lie(3, "[x1,x2]"));
        assert!(Derivation::theta_tilde(2, 1, 1, 2).is_err());
        assert!(Derivation::theta_tilde(3, 1, 2, 3).unwrap().image(2).is_zero());
        assert_eq!(Derivation::f_iw(3, 1, &lie(3, "[x1,x2]")).unwrap(), c);
    }

    #[test]
    fn leibniz_examples() {
        let c = Derivation::chi_tilde(3, 1, 2).unwrap();
        assert_eq!(c.apply(&lie(3, "[x1,x3]")).unwrap(), lie(3, "[[x1,x2],x3]"));
        assert!(Derivation::chi_tilde(3, 2, 1).unwrap().apply(&lie(3, "x1")).unwrap().is_zero());
        let m = parse_monomial("[[x1,x3],x1]");
        let expected = lie(3, "[[[x1,x2],x3],x1]").add(&lie(3, "[[x1,x3],[x1,x2]]")).unwrap();
        assert_eq!(c.apply(&LieElement::from_monomial(3, &m).unwrap()).unwrap(), expected);
        assert_eq!(leibniz_oracle(&c, &m), expected);
    }

    #[test]
    fn tensor_route_matches_leibniz_oracle() {
        let derivs = [
            Derivation::chi_tilde(3, 1, 2).unwrap(),
            Derivation::theta_tilde(3, 1, 2, 3).unwrap(),
            Derivation::f_iw(3, 2, &lie(3, "[[x1,x2],x3]")).unwrap(),
        ];
        for d in &derivs {
            for p in 1..=4 {
                for m in lyndon_basis(3, p) {
                    let a = LieElement::from_monomial(3, &m).unwrap();
                    assert_eq!(d.apply(&a).unwrap(), leibniz_oracle(d, &m), "{d} on {m}");
                }
            }
        }
    }

    #[test]
    fn prop_identity_instance() {
        let n = 3;
        let u = lie(n, "[x2,x3]");
        let chi = Derivation::chi_tilde(n, 1, 2).unwrap();
        let lhs = chi.bracket(&Derivation::f_iw(n, 2, &u).unwrap()).unwrap();
        let xi_u = LieElement::generator(n, 1).unwrap().bracket(&u).unwrap();
        let rhs = Derivation::f_iw(n, 1, &xi_u)
            .unwrap()
            .neg()
            .add(&Derivation::f_iw(n, 2, &chi.apply(&u).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn annihilator_instance() {
        let n = 3;
        let u = lie(n, "[x2,x3]");
        let h = find_annihilating_schur(1, 2, &u).unwrap();
        let chi = Derivation::chi_tilde(n, 1, 2).unwrap();
        assert!(h.apply_to_lie(&chi.apply(&u).unwrap()).unwrap().is_zero());
        let xi_u = LieElement::generator(n, 1).unwrap().bracket(&u).unwrap();
        assert_eq!(h.neg().apply_to_lie(&xi_u).unwrap(), xi_u);
        let lhs = chi.bracket(&Derivation::f_iw(n, 2, &u).unwrap()).unwrap().schur_act(&h).unwrap();
        assert_eq!(lhs, Derivation::f_iw(n, 1, &xi_u).unwrap());
        assert!(find_annihilating_schur(1, 2, &lie(n, "x3")).is_err());
    }
}
