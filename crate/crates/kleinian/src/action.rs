use mckay_poly::{Mono, Poly};
use mckay_roots::DynkinType;

use crate::KleinianError;

/// Z/(r+1) acting by x ↦ εx, y ↦ ε⁻¹y; x^a y^b has weight a − b mod r+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaActionA {
    pub r: usize,
}

impl GammaActionA {
    pub fn new(ty: DynkinType) -> Result<Self, KleinianError> {
        if !ty.is_type_a() {
            return Err(KleinianError::NotTypeA(ty));
        }
        Ok(GammaActionA { r: ty.rank() })
    }

    pub fn ty(&self) -> DynkinType {
        DynkinType::a(self.r)
    }

    pub fn order(&self) -> usize {
        self.r + 1
    }

    pub fn weight(&self, m: &Mono) -> usize {
        let k = self.order() as i64;
        (m.0[0] as i64 - m.0[1] as i64).rem_euclid(k) as usize
    }

    /// Weight components p = Σ p_k, indexed by k.
    pub fn components(&self, p: &Poly) -> Vec<Poly> {
        (0..self.order()).map(|k| p.filter_terms(|m| self.weight(m) == k)).collect()
    }

    pub fn is_homogeneous(&self, p: &Poly) -> bool {
        self.components(p).iter().filter(|c| !c.is_zero()).count() <= 1
    }

    /// u^i v^j w^k ↦ x^{(r+1)i} (xy)^j y^{(r+1)k}.
    pub fn to_xy(&self, p: &Poly) -> Poly {
        let m = self.order() as u32;
        p.map_monomials(2, |mono| {
            let [u, v, w] = [mono.0[0], mono.0[1], mono.0[2]];
            Poly::monomial(&[m * u + v, v + m * w])
        })
    }

    /// Rewrite an invariant monomial x^a y^b in u, v, w.
    pub fn invariant_to_uvw(&self, m: &Mono) -> Mono {
        let k = self.order() as u32;
        let (a, b) = (m.0[0], m.0[1]);
        debug_assert_eq!(self.weight(m), 0);
        if a >= b {
            Mono(vec![(a - b) / k, b, 0])
        } else {
            Mono(vec![0, a, (b - a) / k])
        }
    }

    /// The relation uw − v^{r+1}.
    pub fn relation(&self) -> Poly {
        Poly::monomial(&[1, 0, 1]).sub(&Poly::monomial(&[0, self.order() as u32, 0]))
    }
}
