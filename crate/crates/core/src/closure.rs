//! Degreewise span of everything reachable from a set of degree-2 derivations
//! by derivation brackets and the Schur action `Φ`.
//!
//! In degree `p` the reachable module is spanned by `Φ_f(D)` for `f` in the
//! basis of `Schur(p,n)` and `D` either a generator (`p = 2`) or a bracket of
//! basis elements of two lower degrees `a + b − 1 = p`. The span is kept as an
//! integer lattice, so the report gives both the rank over ℚ and the
//! elementary divisors over ℤ.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::derivation::Derivation;
use crate::error::{arg_err, Error, Result};
use crate::lie::{basis_index, witt_dimension, LieElement};
use crate::linalg::IntegerLattice;
use crate::schur::SchurElement;

/// The generator families of the generation theorems.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorSet {
    /// All `χ̃_{i,j}` and `θ̃_{i,[x_s,x_t]}`.
    MTilde,
    /// One `χ̃_{i,i+1}` per `i`, indices mod `n`.
    Gamma,
}

impl GeneratorSet {
    pub fn generators(self, n: usize) -> Vec<Derivation> {
        match self {
            GeneratorSet::MTilde => m_tilde(n),
            GeneratorSet::Gamma => gamma(n),
        }
    }
}

pub fn m_tilde(n: usize) -> Vec<Derivation> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Derivation::chi_tilde(n, i, j).expect("valid indices"));
            }
        }
    }
    for i in 1..=n {
        for s in 1..=n {
            for t in s + 1..=n {
                if i != s && i != t {
                    out.push(Derivation::theta_tilde(n, i, s, t).expect("valid indices"));
                }
            }
        }
    }
    out
}

pub fn gamma(n: usize) -> Vec<Derivation> {
    if n < 2 {
        return Vec::new();
    }
    (1..=n).map(|i| Derivation::chi_tilde(n, i, i % n + 1).expect("valid indices")).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    /// The same degree in the doubled grading.
    pub doubled_degree: usize,
    pub reached_rank: usize,
    pub full_rank: usize,
    /// Nonzero elementary divisors of the reached lattice, as decimal strings.
    pub elementary_divisors: Vec<String>,
    /// Number of `Φ_f(D)` vectors inserted before the span stopped growing or saturated.
    pub vectors_used: usize,
}

impl DegreeReport {
    /// Full rank with every elementary divisor 1.
    pub fn is_surjective(&self) -> bool {
        self.reached_rank == self.full_rank && self.elementary_divisors.iter().all(|d| d == "1")
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClosureReport {
    pub n: usize,
    pub generator_count: usize,
    pub degrees: Vec<DegreeReport>,
}

#[derive(Clone, Copy, Debug)]
pub struct ClosureOptions {
    /// Upper bound on the number of `Φ_f(D)` evaluations over all degrees.
    pub max_evaluations: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { max_evaluations: 50_000_000 }
    }
}

pub fn schur_closure_rank(n: usize, generators: &[Derivation], max_degree: usize) -> Result<ClosureReport> {
    schur_closure_rank_with(n, generators, max_degree, ClosureOptions::default())
}

pub fn schur_closure_rank_with(
    n: usize,
    generators: &[Derivation],
    max_degree: usize,
    options: ClosureOptions,
) -> Result<ClosureReport> {
    for g in generators {
        if g.degree() != 2 || g.n() != n {
            return arg_err(format!("closure generators must be rank-{n} derivations of degree 2"));
        }
    }
    let mut report = ClosureReport { n, generator_count: generators.len(), degrees: Vec::new() };
    // spans[d] = Z-basis of the reached module in degree d
    let mut spans: Vec<Vec<Derivation>> = vec![Vec::new(); max_degree + 1];
    let mut budget = options.max_evaluations;
    for d in 2..=max_degree {
        let seeds: Vec<Derivation> = if d == 2 {
            generators.to_vec()
        } else {
            let mut v = Vec::new();
            for a in 2..=d.div_ceil(2) {
                let b = d + 1 - a;
                for (x_idx, x) in spans[a].iter().enumerate() {
                    let ys = if a == b { &spans[b][x_idx + 1..] } else { &spans[b][..] };
                    for y in ys {
                        v.push((x.clone(), y.clone()));
                    }
                }
            }
            v.par_iter().map(|(x, y)| x.bracket(y)).collect::<Result<Vec<_>>>()?
        };
        let (lattice, used) = match span_under_schur(n, d, &seeds, &mut budget) {
            Ok(x) => x,
            Err(partial) => {
                let json = serde_json::to_string(&report).expect("serializable");
                return Err(Error::Resource(format!(
                    "closure evaluation budget exhausted in degree {d} after rank {partial}; partial report: {json}"
                )));
            }
        };
        let full_rank = n * witt_dimension(n, d);
        spans[d] = lattice
            .basis()
            .map(|row| Derivation::from_coordinates(n, d, row))
            .collect::<Result<Vec<_>>>()?;
        report.degrees.push(DegreeReport {
            degree: d,
            doubled_degree: 2 * d,
            reached_rank: lattice.rank(),
            full_rank,
            elementary_divisors: lattice.elementary_divisors().iter().map(ToString::to_string).collect(),
            vectors_used: used,
        });
    }
    Ok(report)
}

/// Sparse matrix of `a ↦ f(a)` on `L^p` in Lyndon coordinates, by column.
type LieMatrix = Vec<Vec<(usize, BigInt)>>;

fn schur_matrices(n: usize, p: usize) -> Result<Vec<LieMatrix>> {
    let basis = basis_index(n, p);
    let elements: Vec<LieElement> =
        basis.words().iter().map(|w| LieElement::basis_element(n, w)).collect::<Result<_>>()?;
    let matrices: Vec<LieMatrix> = SchurElement::basis(n, p)
        .par_iter()
        .map(|f| {
            elements
                .iter()
                .map(|a| {
                    let image = f.apply_to_lie(a)?;
                    Ok(image
                        .coefficients()
                        .iter()
                        .map(|(w, c)| (basis.position(w).expect("basis word"), c.clone()))
                        .collect())
                })
                .collect::<Result<LieMatrix>>()
        })
        .collect::<Result<_>>()?;
    Ok(matrices.into_iter().filter(|m| m.iter().any(|col| !col.is_empty())).collect())
}

fn apply_blockwise(m: &LieMatrix, coords: &[BigInt], width: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); coords.len()];
    for (block, chunk) in coords.chunks(width).enumerate() {
        for (col, c) in chunk.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (row, x) in &m[col] {
                out[block * width + row] += c * x;
            }
        }
    }
    out
}

/// The lattice spanned by `Φ_f(D)` for all Schur basis elements `f` and seeds
/// `D`. Returns the number of vectors inserted, or on budget exhaustion the
/// rank reached so far.
fn span_under_schur(
    n: usize,
    d: usize,
    seeds: &[Derivation],
    budget: &mut usize,
) -> std::result::Result<(IntegerLattice, usize), usize> {
    let width = witt_dimension(n, d);
    let mut lattice = IntegerLattice::new(n * width);
    if seeds.is_empty() || width == 0 {
        return Ok((lattice, 0));
    }
    let matrices = schur_matrices(n, d).map_err(|_| 0usize)?;
    let mut used = 0;
    // the identity is in the span of the basis, so seeds need no separate pass
    for seed in seeds {
        let coords = seed.coordinates();
        if coords.iter().all(Zero::is_zero) {
            continue;
        }
        let images: Vec<Vec<BigInt>> = matrices.par_iter().map(|m| apply_blockwise(m, &coords, width)).collect();
        for v in images {
            if *budget == 0 {
                return Err(lattice.rank());
            }
            *budget -= 1;
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            used += 1;
            lattice.insert(v);
            if lattice.is_everything() {
                return Ok((lattice, used));
            }
        }
    }
    lattice.reduce();
    Ok((lattice, used))
}
