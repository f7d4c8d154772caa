//! ADE combinatorics. Vertex 0 of every affine diagram is the extended
//! vertex ρ₀; vertices 1..=r follow Bourbaki's numbering of the finite
//! Dynkin diagram.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("invalid rank {rank} for family {family} ({reason})")]
    InvalidRank { family: Family, rank: usize, reason: &'static str },
    #[error("cannot parse Dynkin type {0:?}; expected e.g. A2, D5, E8")]
    Parse(String),
    #[error("Weyl group of {ty} is too large to enumerate ({order} > {limit})")]
    TooLarge { ty: DynkinType, order: u128, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

/// An ADE type; serializes as `{"family":"D","rank":5}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawType")]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

#[derive(Deserialize)]
struct RawType {
    family: Family,
    rank: usize,
}

impl TryFrom<RawType> for DynkinType {
    type Error = RootError;
    fn try_from(r: RawType) -> Result<Self, RootError> {
        DynkinType::new(r.family, r.rank)
    }
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let reason = match family {
            Family::A if rank < 1 => Some("A needs r >= 1"),
            Family::D if rank < 4 => Some("D needs r >= 4"),
            Family::E if !(6..=8).contains(&rank) => Some("E needs r in {6,7,8}"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(RootError::InvalidRank { family, rank, reason }),
            None => Ok(DynkinType { family, rank }),
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid A rank")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }

    /// Number of vertices of the affine diagram.
    pub fn vertex_count(&self) -> usize {
        self.rank + 1
    }

    /// |Γ| as listed in the classification (r+1, 4(r−2), 24, 48, 120).
    pub fn group_order(&self) -> u64 {
        let r = self.rank as u64;
        match (self.family, self.rank) {
            (Family::A, _) => r + 1,
            (Family::D, _) => 4 * (r - 2),
            (Family::E, 6) => 24,
            (Family::E, 7) => 48,
            (Family::E, _) => 120,
        }
    }

    /// Every type with rank ≤ `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for f in [Family::A, Family::D, Family::E] {
            for r in 1..=max_rank {
                if let Ok(t) = DynkinType::new(f, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// The finite-diagram edges (Bourbaki numbering, vertices 1..=r) plus
    /// the edges at the extended vertex 0.
    fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank;
        match self.family {
            Family::A if r == 1 => vec![(0, 1), (0, 1)],
            Family::A => {
                let mut e: Vec<(usize, usize)> = (1..r).map(|k| (k, k + 1)).collect();
                e.push((0, 1));
                e.push((0, r));
                e
            }
            Family::D => {
                let mut e: Vec<(usize, usize)> = (1..r - 2).map(|k| (k, k + 1)).collect();
                e.push((r - 2, r - 1));
                e.push((r - 2, r));
                e.push((0, 2));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..r).map(|k| (k, k + 1)));
                e.push(match r {
                    6 => (0, 2),
                    7 => (0, 1),
                    _ => (0, 8),
                });
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(RootError::Parse(s.into())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| RootError::Parse(s.into()))?;
        DynkinType::new(family, rank)
    }
}

/// Affine Dynkin diagram with dimension labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McKayGraph {
    pub adjacency: Vec<Vec<i64>>,
    pub dims: Vec<i64>,
}

impl McKayGraph {
    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    /// Edges i<j repeated by multiplicity, in row-major order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for _ in 0..self.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edge_list().len()
    }

    pub fn dims_relation_holds(&self) -> bool {
        (0..self.vertex_count()).all(|k| {
            let s: i64 = (0..self.vertex_count()).map(|l| self.adjacency[k][l] * self.dims[l]).sum();
            2 * self.dims[k] == s
        })
    }
}

pub fn build_mckay_graph(t: DynkinType) -> McKayGraph {
    let n = t.vertex_count();
    let mut adjacency = vec![vec![0i64; n]; n];
    for (i, j) in t.edges() {
        adjacency[i][j] += 1;
        adjacency[j][i] += 1;
    }
    McKayGraph { adjacency, dims: delta(t) }
}

/// δ: the dimensions of the irreducible representations ρ₀..ρ_r.
pub fn delta(t: DynkinType) -> Vec<i64> {
    let r = t.rank;
    match t.family {
        Family::A => vec![1; r + 1],
        Family::D => {
            let mut d = vec![1, 1];
            d.extend(vec![2; r - 3]);
            d.extend([1, 1]);
            d
        }
        Family::E => match r {
            6 => vec![1, 1, 2, 2, 3, 2, 1],
            7 => vec![1, 2, 2, 3, 4, 3, 2, 1],
            _ => vec![1, 2, 3, 4, 6, 5, 4, 3, 2],
        },
    }
}

/// Affine Cartan matrix 2·Id − A_Γ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// The finite part: rows and columns 1..=r.
    pub fn finite(&self) -> Vec<Vec<i64>> {
        self.entries[1..].iter().map(|row| row[1..].to_vec()).collect()
    }
}

pub fn cartan_matrix(g: &McKayGraph) -> CartanMatrix {
    let n = g.vertex_count();
    let entries = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 2 } else { 0 } - g.adjacency[i][j]).collect())
        .collect();
    CartanMatrix { entries }
}

pub fn finite_cartan(t: DynkinType) -> Vec<Vec<i64>> {
    cartan_matrix(&build_mckay_graph(t)).finite()
}

/// A root in the basis of simple roots ρ₁..ρ_r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn simple(rank: usize, k: usize) -> Root {
        let mut v = vec![0; rank];
        v[k - 1] = 1;
        Root(v)
    }

    /// Embedding into Rep(Γ) = ℤ^{r+1} (zero coefficient on ρ₀).
    pub fn affine(&self) -> Vec<i64> {
        let mut v = vec![0];
        v.extend(&self.0);
        v
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// (u, v) = uᵀ C' v with C' the finite Cartan matrix.
pub fn cartan_form(c: &[Vec<i64>], u: &[i64], v: &[i64]) -> i64 {
    c.iter().enumerate().map(|(i, row)| u[i] * row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>()).sum()
}

/// s_k(v) = v − (v, ρ_k) ρ_k for k in 1..=r.
pub fn reflect(c: &[Vec<i64>], v: &[i64], k: usize) -> Vec<i64> {
    let pairing: i64 = c[k - 1].iter().zip(v).map(|(a, b)| a * b).sum();
    let mut out = v.to_vec();
    out[k - 1] -= pairing;
    out
}

/// Φ⁺ by reflection closure of the simple roots, sorted lexicographically.
pub fn positive_roots(t: DynkinType) -> Vec<Root> {
    let r = t.rank;
    let c = finite_cartan(t);
    let mut found: BTreeSet<Vec<i64>> = (1..=r).map(|k| Root::simple(r, k).0).collect();
    let mut stack: Vec<Vec<i64>> = found.iter().cloned().collect();
    while let Some(v) = stack.pop() {
        for k in 1..=r {
            let w = reflect(&c, &v, k);
            if w.iter().all(|&x| x >= 0) && w.iter().any(|&x| x > 0) && found.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    found.into_iter().map(Root).collect()
}

/// Largest Weyl group we are willing to enumerate.
pub const WEYL_LIMIT: u64 = 10_000_000;

/// Closed-form |W| for the finite type, used to refuse oversize requests early.
pub fn weyl_order_formula(t: DynkinType) -> u128 {
    let r = t.rank as u128;
    let fact = |n: u128| (1..=n).product::<u128>();
    match (t.family, t.rank) {
        (Family::A, _) => fact(r + 1),
        (Family::D, _) => (1u128 << (r - 1)) * fact(r),
        (Family::E, 6) => 51_840,
        (Family::E, 7) => 2_903_040,
        (Family::E, _) => 696_729_600,
    }
}

/// |W_Γ| by breadth-first enumeration of the orbit of the Weyl vector,
/// which has trivial stabiliser.
pub fn weyl_group_order(t: DynkinType) -> Result<u64, RootError> {
    let predicted = weyl_order_formula(t);
    if predicted > WEYL_LIMIT as u128 || t.rank > 16 {
        return Err(RootError::TooLarge { ty: t, order: predicted, limit: WEYL_LIMIT });
    }
    let c = finite_cartan(t);
    let r = t.rank;
    let pack = |v: &[i64]| -> u128 {
        v.iter().fold(0u128, |acc, &x| (acc << 8) | ((x + 128) as u8 as u128))
    };
    let start = vec![1i64; r];
    let mut seen: HashSet<u128> = HashSet::new();
    seen.insert(pack(&start));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for lam in frontier {
            for i in 0..r {
                let li = lam[i];
                let mu: Vec<i64> = (0..r).map(|j| lam[j] - li * c[i][j]).collect();
                if seen.insert(pack(&mu)) {
                    if seen.len() as u64 > WEYL_LIMIT {
                        return Err(RootError::TooLarge { ty: t, order: seen.len() as u128, limit: WEYL_LIMIT });
                    }
                    next.push(mu);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len() as u64)
}
