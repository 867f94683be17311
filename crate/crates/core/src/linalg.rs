//! Exact linear algebra over ℤ and ℚ.
//!
//! [`IntegerLattice`] keeps a row-echelon ℤ-basis of the span of inserted
//! vectors (unimodular row operations only), which gives both the rank over ℚ
//! and, via [`smith_diagonal`], the elementary divisors of the lattice.
//! [`RationalEchelon`] is a sparse echelon form over ℚ used for nullspaces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A ℤ-submodule of `ℤ^dim` held as echelon rows keyed by pivot column.
/// Pivots are positive.
#[derive(Clone, Debug)]
pub struct IntegerLattice {
    dim: usize,
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl IntegerLattice {
    pub fn new(dim: usize) -> Self {
        IntegerLattice { dim, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// True when the lattice is all of `ℤ^dim`.
    pub fn is_everything(&self) -> bool {
        self.rows.len() == self.dim && self.rows.iter().all(|(&c, r)| r[c].is_one())
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<BigInt>> {
        self.rows.values()
    }

    /// Adds `v` to the generating set. Returns true if the lattice grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match lattice dimension");
        let mut changed = false;
        let mut col = 0;
        loop {
            let Some(c) = (col..self.dim).find(|&c| !v[c].is_zero()) else {
                return changed;
            };
            let Some(r) = self.rows.get_mut(&c) else {
                if v[c].is_negative() {
                    v.iter_mut().for_each(|x| *x = -x.clone());
                }
                self.rows.insert(c, v);
                return true;
            };
            let p = r[c].clone();
            let a = v[c].clone();
            if (&a % &p).is_zero() {
                let q = &a / &p;
                for k in c..self.dim {
                    if !r[k].is_zero() {
                        v[k] -= &q * &r[k];
                    }
                }
            } else {
                // [r; v] <- [[x, y], [a/g, -p/g]] [r; v], determinant -1
                let e = p.extended_gcd(&a);
                let (g, x, y) = (e.gcd, e.x, e.y);
                let a_g = &a / &g;
                let p_g = &p / &g;
                for k in c..self.dim {
                    let rk = r[k].clone();
                    let vk = v[k].clone();
                    r[k] = &x * &rk + &y * &vk;
                    v[k] = &a_g * &rk - &p_g * &vk;
                }
                changed = true;
            }
            col = c + 1;
        }
    }

    /// Reduces entries above each pivot into `[0, pivot)`, giving the Hermite normal form.
    pub fn reduce(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for (idx, &c) in pivots.iter().enumerate().rev() {
            let pivot_row = self.rows[&c].clone();
            let p = pivot_row[c].clone();
            for &above in &pivots[..idx] {
                let row = self.rows.get_mut(&above).unwrap();
                let q = row[c].div_floor(&p);
                if !q.is_zero() {
                    for k in c..self.dim {
                        if !pivot_row[k].is_zero() {
                            row[k] -= &q * &pivot_row[k];
                        }
                    }
                }
            }
        }
    }

    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let m: Vec<Vec<BigInt>> = self.rows.values().cloned().collect();
        smith_diagonal(m)
    }

    /// Whether `v` lies in the lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for (&c, r) in &self.rows {
            if v[c].is_zero() {
                continue;
            }
            if (&v[c] % &r[c]).is_zero() {
                let q = &v[c] / &r[c];
                for k in c..self.dim {
                    v[k] -= &q * &r[k];
                }
            } else {
                return false;
            }
            if v[..=c].iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Nonzero diagonal of the Smith normal form of `m`, each positive and
/// dividing the next.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let sub = &q * &m[t][j];
                    m[i][j] -= sub;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let sub = &q * &row[t];
                    row[j] -= sub;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let p = m[t][t].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &p).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let add = m[i][j].clone();
                        m[t][j] += add;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

pub type SparseRow = BTreeMap<usize, BigRational>;

/// Sparse row-echelon form over ℚ. Each stored row has leading coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct RationalEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl RationalEchelon {
    pub fn new(ncols: usize) -> Self {
        RationalEchelon { ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Returns true if the row was independent of the rows so far.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                return false;
            };
            debug_assert!(lead < self.ncols);
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    let factor = lead_val.clone();
                    for (&c, v) in pivot_row {
                        let e = row.entry(c).or_insert_with(BigRational::zero);
                        *e -= &factor * v;
                        if e.is_zero() {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = lead_val.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn insert_integer(&mut self, row: impl IntoIterator<Item = (usize, BigInt)>) -> bool {
        self.insert(row.into_iter().map(|(c, v)| (c, BigRational::from_integer(v))).collect())
    }

    /// A basis of `{x : A x = 0}`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x: SparseRow = BTreeMap::new();
                x.insert(f, BigRational::one());
                for (&pivot, row) in self.rows.iter().rev() {
                    let mut acc = BigRational::zero();
                    for (c, v) in row.range(pivot + 1..) {
                        if let Some(xc) = x.get(c) {
                            acc -= v * xc;
                        }
                    }
                    if !acc.is_zero() {
                        x.insert(pivot, acc);
                    }
                }
                x
            })
            .collect()
    }
}

/// Solves `A x = b` over ℚ by Gauss–Jordan elimination. Free variables are
/// set to zero. `None` when inconsistent.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> =
        a.iter().zip(b).map(|(r, bi)| r.iter().cloned().chain([bi.clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=cols {
                    let sub = &f * &m[r][k];
                    m[i][k] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}
