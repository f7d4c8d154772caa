use std::fmt;

use mckay_roots::{delta, positive_roots, DynkinType, Root};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::param::ThetaParam;
use crate::ThetaError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HyperplaneLabel {
    Delta,
    Root(Root),
    DeltaMinus { m: usize, alpha: Root },
    DeltaPlus { m: usize, alpha: Root },
}

impl fmt::Display for HyperplaneLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperplaneLabel::Delta => write!(f, "delta"),
            HyperplaneLabel::Root(a) => write!(f, "alpha{a}"),
            HyperplaneLabel::DeltaMinus { m, alpha } => write!(f, "{m}delta-alpha{alpha}"),
            HyperplaneLabel::DeltaPlus { m, alpha } => write!(f, "{m}delta+alpha{alpha}"),
        }
    }
}

impl Serialize for HyperplaneLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// γ⊥ with γ primitive and its first nonzero entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
    pub label: HyperplaneLabel,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive, sign-normalised representative of the line through γ.
pub fn normalize(gamma: &[i64]) -> Vec<i64> {
    let g = gamma.iter().fold(0, |acc, &x| gcd(acc, x));
    if g == 0 {
        return gamma.to_vec();
    }
    let sign = gamma.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    gamma.iter().map(|x| x / g * sign).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    #[serde(serialize_with = "ser_type")]
    pub ty: DynkinType,
    pub n: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

fn ser_type<S: Serializer>(t: &DynkinType, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

impl Arrangement {
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn position(&self, normal: &[i64]) -> Option<usize> {
        let nn = normalize(normal);
        self.hyperplanes.iter().position(|h| h.normal == nn)
    }

    pub fn delta_index(&self) -> usize {
        self.position(&delta(self.ty)).expect("delta is always present")
    }

    /// Index of ρ_k⊥ for 1 ≤ k ≤ r.
    pub fn simple_index(&self, k: usize) -> usize {
        let mut e = vec![0; self.ty.vertex_count()];
        e[k] = 1;
        self.position(&e).expect("simple roots are always present")
    }
}

/// {δ⊥} ∪ {(mδ ± α)⊥ : 0 ≤ m < n, α ∈ Φ⁺}, deduplicated, in the order
/// δ, the α (m = 0), then mδ−α, mδ+α for m = 1..n−1.
pub fn arrangement(ty: DynkinType, n: usize) -> Result<Arrangement, ThetaError> {
    if n == 0 {
        return Err(ThetaError::InvalidN);
    }
    let d = delta(ty);
    let roots = positive_roots(ty);
    let mut hyperplanes: Vec<Hyperplane> = Vec::new();
    let mut push = |gamma: Vec<i64>, label: HyperplaneLabel| {
        let normal = normalize(&gamma);
        if !hyperplanes.iter().any(|h| h.normal == normal) {
            hyperplanes.push(Hyperplane { normal, label });
        }
    };
    push(d.clone(), HyperplaneLabel::Delta);
    for a in &roots {
        push(a.affine(), HyperplaneLabel::Root(a.clone()));
    }
    for m in 1..n {
        for a in &roots {
            let aff = a.affine();
            let minus: Vec<i64> = d.iter().zip(&aff).map(|(x, y)| m as i64 * x - y).collect();
            let plus: Vec<i64> = d.iter().zip(&aff).map(|(x, y)| m as i64 * x + y).collect();
            push(minus, HyperplaneLabel::DeltaMinus { m, alpha: a.clone() });
            push(plus, HyperplaneLabel::DeltaPlus { m, alpha: a.clone() });
        }
    }
    Ok(Arrangement { ty, n, hyperplanes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(x: &mckay_exact::Q) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "-",
            Sign::Zero => "0",
            Sign::Pos => "+",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn sign_vector(theta: &ThetaParam, arr: &Arrangement) -> Result<Vec<Sign>, ThetaError> {
    theta.check_dim(arr.ty)?;
    Ok(arr.hyperplanes.iter().map(|h| Sign::of(&theta.eval(&h.normal))).collect())
}

pub fn is_generic(theta: &ThetaParam, arr: &Arrangement) -> Result<bool, ThetaError> {
    Ok(sign_vector(theta, arr)?.iter().all(|s| *s != Sign::Zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_n2_lines() {
        let arr = arrangement(DynkinType::a(1), 2).unwrap();
        let normals: Vec<Vec<i64>> = arr.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        assert_eq!(normals, vec![vec![1, 1], vec![0, 1], vec![1, 0], vec![1, 2]]);
        let labels: Vec<String> = arr.hyperplanes.iter().map(|h| h.label.to_string()).collect();
        assert_eq!(labels, vec!["delta", "alpha[1]", "1delta-alpha[1]", "1delta+alpha[1]"]);
        assert_eq!(arrangement(DynkinType::a(1), 1).unwrap().len(), 2);
        assert_eq!(arrangement(DynkinType::a(2), 2).unwrap().len(), 10);
        assert!(arrangement(DynkinType::a(2), 0).is_err());
    }

    #[test]
    fn signs() {
        let arr = arrangement(DynkinType::a(1), 2).unwrap();
        let s = sign_vector(&ThetaParam::from_ints(&[1, 1]), &arr).unwrap();
        assert!(s.iter().all(|x| *x == Sign::Pos));
        let s = sign_vector(&ThetaParam::from_ints(&[1, 0]), &arr).unwrap();
        assert_eq!(s.iter().filter(|x| **x == Sign::Zero).count(), 1);
        assert!(is_generic(&ThetaParam::from_ints(&[3, 1]), &arr).unwrap());
        assert!(!is_generic(&ThetaParam::from_ints(&[0, 0]), &arr).unwrap());
        assert!(sign_vector(&ThetaParam::from_ints(&[1]), &arr).is_err());
    }
}
