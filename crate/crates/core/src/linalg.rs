//! Exact linear algebra over the rationals.
//!
//! Rows are first scaled to integers, reduced to echelon form with
//! fraction-free (Bareiss) elimination, and only then normalised into a
//! reduced row-echelon form over `Q`. The pivot in each column is the first
//! nonzero entry at or below the current row; with exact arithmetic there is
//! nothing to gain from magnitude pivoting and this keeps the output stable.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::graph::{Graph, VertexId, VertexSet};

/// Reduced fraction with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<Rational> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        RationalMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// `self * x`. Panics on a dimension mismatch.
    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(
                &self
                    .row(r)
                    .iter()
                    .map(|q| alloc::format!("{q}"))
                    .collect::<Vec<_>>(),
            );
        }
        list.finish()
    }
}

/// `A(G)`: symmetric 0/1 matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> RationalMatrix {
    let n = g.order();
    let mut m = RationalMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        m.set(u.0, v.0, Rational::one());
        m.set(v.0, u.0, Rational::one());
    }
    m
}

/// Fraction-free forward elimination on an integer matrix, in place.
/// Returns the pivot columns; rows past the last pivot are zero.
fn bareiss_echelon(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let num = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = pivot_row[c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form over `Q` and the rank.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
    let (rows, cols) = (m.rows, m.cols);
    // Scale every row by the lcm of its denominators.
    let mut ints: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let row = m.row(r);
            let scale = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| q.numer() * (&scale / q.denom()))
                .collect()
        })
        .collect();
    let pivots = bareiss_echelon(&mut ints, cols);
    let rank = pivots.len();

    let mut out = RationalMatrix::zeros(rows, cols);
    for (r, row) in ints.iter().enumerate().take(rank) {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                out.set(r, c, Rational::from_integer(x.clone()));
            }
        }
    }
    // Back substitution, bottom pivot first.
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let inv = out.get(r, pc).recip();
        for c in pc..cols {
            let v = out.get(r, c);
            if !v.is_zero() {
                let scaled = v * &inv;
                out.set(r, c, scaled);
            }
        }
        let pivot_row: Vec<Rational> = out.row(r).to_vec();
        for above in 0..r {
            let factor = out.get(above, pc).clone();
            if factor.is_zero() {
                continue;
            }
            for (c, p) in pivot_row.iter().enumerate().skip(pc) {
                if !p.is_zero() {
                    let v = out.get(above, c) - &factor * p;
                    out.set(above, c, v);
                }
            }
        }
    }
    (out, rank)
}

/// `eta(G) = n - rank A(G)`.
pub fn nullity(g: &Graph) -> usize {
    g.order() - rref(&adjacency_matrix(g)).1
}

/// Canonical basis of the kernel of `A(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullBasis {
    /// Ambient dimension.
    pub n: usize,
    /// One vector per free column of the RREF, in ascending column order:
    /// 1 at the free column, minus the RREF column at the pivot positions.
    pub vectors: Vec<Vec<Rational>>,
}

impl NullBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn support(&self) -> VertexSet {
        support_of(&self.vectors)
    }
}

/// Kernel basis of an arbitrary matrix, read off its RREF.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let (r, rank) = rref(m);
    let cols = m.cols();
    let mut pivot_cols = Vec::with_capacity(rank);
    for row in 0..rank {
        if let Some(c) = (0..cols).find(|&c| !r.get(row, c).is_zero()) {
            pivot_cols.push(c);
        }
    }
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                x[pc] = -r.get(row, free).clone();
            }
            x
        })
        .collect()
}

/// Canonical kernel basis of `A(G)`. Every vector is checked against
/// `A x = 0` in exact arithmetic before it is returned.
pub fn null_basis(g: &Graph) -> NullBasis {
    let a = adjacency_matrix(g);
    let vectors = kernel_basis(&a);
    for x in &vectors {
        assert!(
            a.mul_vec(x).iter().all(Zero::is_zero),
            "kernel vector fails A x = 0"
        );
    }
    NullBasis {
        n: g.order(),
        vectors,
    }
}

/// Vertices with a nonzero coordinate in at least one of `vectors`.
pub fn support_of(vectors: &[Vec<Rational>]) -> VertexSet {
    let mut out = VertexSet::new();
    for x in vectors {
        for (i, q) in x.iter().enumerate() {
            if !q.is_zero() {
                out.insert(VertexId(i));
            }
        }
    }
    out
}

/// `Supp(G)`: read off any basis of the null space, here the canonical one.
pub fn support(g: &Graph) -> VertexSet {
    null_basis(g).support()
}

/// Largest absolute numerator or denominator in the basis; handy for
/// reporting coefficient growth.
pub fn max_coefficient_bits(basis: &NullBasis) -> u64 {
    basis
        .vectors
        .iter()
        .flatten()
        .map(|q| q.numer().abs().bits().max(q.denom().bits()))
        .max()
        .unwrap_or(0)
}
