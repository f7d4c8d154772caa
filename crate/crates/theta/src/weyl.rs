use std::collections::{HashSet, VecDeque};
use std::fmt;

use mckay_exact::Q;
use mckay_roots::{build_mckay_graph, cartan_matrix, delta, weyl_order_formula, DynkinType};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::arrangement::normalize;
use crate::param::{in_f, ThetaParam};
use crate::ThetaError;

/// Upper limit on explicit orbit or group enumeration.
pub const ORBIT_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// reflection in δ⊥
    Delta,
    /// reflection in ρ_k⊥, 1 ≤ k ≤ r
    Simple(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Delta => write!(f, "s_delta"),
            Generator::Simple(k) => write!(f, "s_{k}"),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A word in the generators together with the matrix acting on the column
/// vector (θ₀,…,θ_r). The word is applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement {
    pub word: Vec<Generator>,
    pub matrix: Vec<Vec<i64>>,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

impl WeylElement {
    pub fn identity(ty: DynkinType) -> Self {
        WeylElement { word: Vec::new(), matrix: identity(ty.vertex_count()) }
    }

    pub fn apply(&self, theta: &ThetaParam) -> ThetaParam {
        ThetaParam::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&theta.coords).map(|(a, t)| t * Q::from_integer(BigInt::from(*a))).sum())
                .collect(),
        )
    }

    /// self ∘ other
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend(&other.word);
        WeylElement { word, matrix: mat_mul(&self.matrix, &other.matrix) }
    }

    /// Image of the hyperplane γ⊥: normal W⁻ᵀγ, normalised.
    pub fn map_hyperplane(&self, gamma: &[i64], ty: DynkinType) -> Vec<i64> {
        let inv = self.inverse(ty);
        let n = gamma.len();
        let img: Vec<i64> = (0..n).map(|j| (0..n).map(|i| inv.matrix[i][j] * gamma[i]).sum()).collect();
        normalize(&img)
    }

    /// Inverse, using that every generator is an involution.
    pub fn inverse(&self, ty: DynkinType) -> WeylElement {
        let gens = namikawa_generators(ty);
        let mut out = WeylElement::identity(ty);
        for g in self.word.iter().rev() {
            let m = gens.iter().find(|e| e.word[0] == *g).expect("known generator");
            out = out.compose(m);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.matrix.len())
    }
}

/// s_k: θ'_j = θ_j − C_jk θ_k; s_δ negates θ(δ) and fixes θ(ρ₁),…,θ(ρ_r).
pub fn namikawa_generators(ty: DynkinType) -> Vec<WeylElement> {
    let n = ty.vertex_count();
    let c = cartan_matrix(&build_mckay_graph(ty)).entries;
    let d = delta(ty);
    let mut out = Vec::with_capacity(n);
    let mut sd = identity(n);
    sd[0][0] = -1;
    for k in 1..n {
        sd[0][k] = -2 * d[k];
    }
    out.push(WeylElement { word: vec![Generator::Delta], matrix: sd });
    for k in 1..n {
        let mut m = identity(n);
        for (j, row) in m.iter_mut().enumerate() {
            row[k] -= c[j][k];
        }
        out.push(WeylElement { word: vec![Generator::Simple(k)], matrix: m });
    }
    out
}

/// |W| by closing the generator matrices under multiplication.
pub fn namikawa_order(ty: DynkinType) -> Result<u64, ThetaError> {
    if 2 * weyl_order_formula(ty) > ORBIT_LIMIT as u128 {
        return Err(ThetaError::OrbitGuard { ty, limit: ORBIT_LIMIT });
    }
    let gens = namikawa_generators(ty);
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    let start = identity(ty.vertex_count());
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let p = mat_mul(&g.matrix, &m);
            if seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    Ok(seen.len() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapToF {
    pub element: WeylElement,
    pub image: ThetaParam,
    /// Exactly one orbit element lies in F (always true off the mirrors).
    pub unique: bool,
    pub orbit_size: usize,
}

/// Breadth-first search of the W-orbit of θ for a point of F; the returned
/// element has a shortest word among those that work.
pub fn map_to_f(theta: &ThetaParam, ty: DynkinType, _n: usize) -> Result<MapToF, ThetaError> {
    theta.check_dim(ty)?;
    if 2 * weyl_order_formula(ty) > ORBIT_LIMIT as u128 {
        return Err(ThetaError::OrbitGuard { ty, limit: ORBIT_LIMIT });
    }
    let gens = namikawa_generators(ty);
    let mut seen: HashSet<ThetaParam> = HashSet::new();
    seen.insert(theta.clone());
    let mut queue = VecDeque::from([(WeylElement::identity(ty), theta.clone())]);
    let mut found: Option<(WeylElement, ThetaParam)> = None;
    let mut in_f_count = 0;
    while let Some((w, t)) = queue.pop_front() {
        if in_f(&t, ty) {
            in_f_count += 1;
            if found.is_none() {
                found = Some((w.clone(), t.clone()));
            }
        }
        for g in &gens {
            let next = g.apply(&t);
            if seen.insert(next.clone()) {
                queue.push_back((g.compose(&w), next));
            }
        }
    }
    let (element, image) = found.expect("F is a fundamental domain");
    Ok(MapToF { element, image, unique: in_f_count == 1, orbit_size: seen.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_group() {
        let t = DynkinType::a(1);
        assert_eq!(namikawa_order(t).unwrap(), 4);
        assert_eq!(namikawa_order(DynkinType::a(2)).unwrap(), 12);
        for g in namikawa_generators(t) {
            assert!(g.compose(&g).is_identity());
        }
    }

    #[test]
    fn a1_map_to_f() {
        let t = DynkinType::a(1);
        // θ(δ) = -3, θ(ρ₁) = 1  ->  θ = (-4, 1)
        let r = map_to_f(&ThetaParam::from_ints(&[-4, 1]), t, 2).unwrap();
        assert_eq!(r.element.word, vec![Generator::Delta]);
        assert_eq!(r.image.theta_delta(t), Q::from_integer(3.into()));
        assert_eq!(r.image.coords[1], Q::from_integer(1.into()));
        assert!(r.unique);
        assert_eq!(r.orbit_size, 4);
        let inside = map_to_f(&ThetaParam::from_ints(&[1, 1]), t, 2).unwrap();
        assert!(inside.element.word.is_empty());
    }
}
