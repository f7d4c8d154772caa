use itertools::Itertools;

use crate::field::{Field, Fp};
use crate::matrix::Matrix;

/// A subspace of F^dim kept as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let mut s = Self::zero(dim);
        for i in 0..dim {
            let mut v = vec![F::zero(); dim];
            v[i] = F::one();
            s.insert(&v);
        }
        s
    }

    pub fn spanned_by(dim: usize, vectors: &[Vec<F>]) -> Self {
        let mut s = Self::zero(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Reduce `v` against the basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    let cur = std::mem::replace(x, F::zero());
                    *x = cur - c.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Add `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "subspace vector length");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            let cur = std::mem::replace(x, F::zero());
            *x = cur * inv.clone();
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    let cur = std::mem::replace(x, F::zero());
                    *x = cur - c.clone() * y.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Whether `m` maps this space into `target`.
    pub fn maps_into(&self, m: &Matrix<F>, target: &Self) -> bool {
        self.rows.iter().all(|v| target.contains(&m.mul_vec(v)))
    }
}

/// Finite fields whose elements can be listed.
pub trait FiniteField: Field + Copy {
    fn all_elements() -> Vec<Self>;
}

impl<const P: u64> FiniteField for Fp<P> {
    fn all_elements() -> Vec<Self> {
        Fp::<P>::elements().collect()
    }
}

/// Every subspace of F^dim, each exactly once (enumerated by RREF shape).
pub fn all_subspaces<F: FiniteField>(dim: usize) -> Vec<Subspace<F>> {
    let elems = F::all_elements();
    let mut out = Vec::new();
    for k in 0..=dim {
        for pivots in (0..dim).combinations(k) {
            // free slots: (row, col) with col > pivot[row] and col not a pivot
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    let pivots = &pivots;
                    (p + 1..dim).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let total = elems.len().pow(slots.len() as u32);
            for code in 0..total {
                let mut rows = vec![vec![F::zero(); dim]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = F::one();
                }
                let mut c = code;
                for &(r, col) in &slots {
                    rows[r][col] = elems[c % elems.len()];
                    c /= elems.len();
                }
                out.push(Subspace { dim, rows, pivots: pivots.clone() });
            }
        }
    }
    out
}
