use mckay_exact::{parse_rational, rational_to_string, Q};
use mckay_roots::{delta, positive_roots, DynkinType};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ThetaError;

/// θ ∈ Θ as its values on ρ₀..ρ_r.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaParam {
    pub coords: Vec<Q>,
}

impl Serialize for ThetaParam {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(rational_to_string).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThetaParam {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coords = v
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
            .collect::<Result<_, _>>()?;
        Ok(ThetaParam { coords })
    }
}

impl ThetaParam {
    pub fn new(coords: Vec<Q>) -> Self {
        ThetaParam { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        ThetaParam { coords: v.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect() }
    }

    pub fn zero(ty: DynkinType) -> Self {
        ThetaParam { coords: vec![Q::zero(); ty.vertex_count()] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn check_dim(&self, ty: DynkinType) -> Result<(), ThetaError> {
        if self.dim() != ty.vertex_count() {
            return Err(ThetaError::Dimension { expected: ty.vertex_count(), got: self.dim() });
        }
        Ok(())
    }

    /// θ(γ) for γ ∈ Rep(Γ) given in the basis ρ₀..ρ_r.
    pub fn eval(&self, gamma: &[i64]) -> Q {
        self.coords.iter().zip(gamma).map(|(t, &g)| t * Q::from_integer(BigInt::from(g))).sum()
    }

    /// θ_∞ = −Σ n·dim(ρ_k)·θ_k, so that θ(1, nδ) = 0.
    pub fn infinity_component(&self, ty: DynkinType, n: usize) -> Q {
        let d = delta(ty);
        -self.eval(&d) * Q::from_integer(BigInt::from(n))
    }

    /// θ(d) for d = (d_∞, d₀, …, d_r).
    pub fn pairing(&self, ty: DynkinType, n: usize, d: &[i64]) -> Q {
        assert_eq!(d.len(), ty.vertex_count() + 1, "sub-dimension vector length");
        self.infinity_component(ty, n) * Q::from_integer(BigInt::from(d[0])) + self.eval(&d[1..])
    }

    pub fn theta_delta(&self, ty: DynkinType) -> Q {
        self.eval(&delta(ty))
    }
}

/// θ₀ restricted to Rep(Γ): (1, 0, …, 0).
pub fn theta_zero(ty: DynkinType) -> ThetaParam {
    let mut v = vec![0; ty.vertex_count()];
    v[0] = 1;
    ThetaParam::from_ints(&v)
}

/// θ_I: 1 on each i ∈ I, 0 elsewhere.
pub fn theta_i(ty: DynkinType, set: &[usize]) -> Result<ThetaParam, ThetaError> {
    let r = ty.rank();
    if set.is_empty() || set.iter().any(|&i| i > r) {
        return Err(ThetaError::BadIndexSet { max: r });
    }
    let mut v = vec![0; r + 1];
    for &i in set {
        v[i] = 1;
    }
    Ok(ThetaParam::from_ints(&v))
}

/// θ(ρ_k) > 0 for all k.
pub fn in_cplus(theta: &ThetaParam) -> bool {
    theta.coords.iter().all(|c| c.is_positive())
}

/// Closed cone θ(δ) ≥ 0, θ(ρ_k) ≥ 0 for 1 ≤ k ≤ r.
pub fn in_f(theta: &ThetaParam, ty: DynkinType) -> bool {
    !theta.theta_delta(ty).is_negative() && theta.coords[1..].iter().all(|c| !c.is_negative())
}

/// Open cone θ(δ) > 0 and θ(α − mδ) > 0 for 0 ≤ m < n, α ∈ Φ⁺. This is the
/// chamber adjacent to δ⊥ inside F.
pub fn in_cminus(theta: &ThetaParam, ty: DynkinType, n: usize) -> bool {
    let td = theta.theta_delta(ty);
    if !td.is_positive() {
        return false;
    }
    positive_roots(ty).iter().all(|alpha| {
        let ta = theta.eval(&alpha.affine());
        (0..n).all(|m| (&ta - &td * Q::from_integer(BigInt::from(m))).is_positive())
    })
}

/// Formal exponents of ⊗ det(R_k)^{η_k}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LineBundleVector(pub Vec<i64>);

impl LineBundleVector {
    pub fn add(&self, o: &LineBundleVector) -> LineBundleVector {
        LineBundleVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

pub fn linearisation(eta: &ThetaParam) -> Result<LineBundleVector, ThetaError> {
    eta.coords
        .iter()
        .map(|c| {
            if c.is_integer() {
                i64::try_from(c.to_integer()).map_err(|_| ThetaError::NonInteger(rational_to_string(c)))
            } else {
                Err(ThetaError::NonInteger(rational_to_string(c)))
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map(LineBundleVector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mckay_exact::q;

    fn a1() -> DynkinType {
        DynkinType::a(1)
    }

    #[test]
    fn pairing_examples() {
        let t = ThetaParam::from_ints(&[1, 0]);
        assert_eq!(t.pairing(a1(), 2, &[1, 0, 0]), q(-2, 1));
        assert_eq!(t.pairing(a1(), 2, &[0, 1, 0]), q(1, 1));
        assert_eq!(t.pairing(a1(), 2, &[1, 2, 2]), q(0, 1));
    }

    #[test]
    fn cone_examples() {
        assert!(in_cplus(&ThetaParam::from_ints(&[1, 1])));
        let t0 = theta_zero(a1());
        assert!(in_f(&t0, a1()) && !in_cplus(&t0));
        // θ(δ)=3, θ(ρ₁)=1: outside C₋
        assert!(!in_cminus(&ThetaParam::from_ints(&[2, 1]), a1(), 2));
        // θ(δ)=1, θ(ρ₁)=3: inside C₋
        assert!(in_cminus(&ThetaParam::from_ints(&[-2, 3]), a1(), 2));
        // θ(δ)=3, θ(ρ₁)=-1 lies outside F, hence outside C₋
        assert!(!in_cminus(&ThetaParam::from_ints(&[4, -1]), a1(), 2));
    }

    #[test]
    fn linearisation_examples() {
        let a2 = DynkinType::a(2);
        assert_eq!(linearisation(&theta_zero(a2)).unwrap(), LineBundleVector(vec![1, 0, 0]));
        assert_eq!(linearisation(&theta_i(a2, &[0, 2]).unwrap()).unwrap(), LineBundleVector(vec![1, 0, 1]));
        assert_eq!(linearisation(&ThetaParam::zero(a2)).unwrap(), LineBundleVector(vec![0, 0, 0]));
        assert!(linearisation(&ThetaParam::new(vec![q(1, 2), q(0, 1), q(0, 1)])).is_err());
        assert!(theta_i(a2, &[]).is_err());
        assert!(theta_i(a2, &[3]).is_err());
    }
}
