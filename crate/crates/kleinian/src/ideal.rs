use std::fmt;

use mckay_exact::Matrix;
use mckay_exact::Q;
use mckay_poly::{parse_poly_list, Colength, Ideal, Mono, Poly, UVW, XY};
use mckay_quiver::r0_normal_form;
use mckay_roots::DynkinType;
use serde::{Serialize, Serializer};

use crate::action::GammaActionA;
use crate::KleinianError;

fn strip_brackets(s: &str) -> &str {
    let t = s.trim();
    for (open, close) in [("<", ">"), ("⟨", "⟩"), ("(", ")")] {
        if let Some(inner) = t.strip_prefix(open).and_then(|x| x.strip_suffix(close)) {
            // only a wrapper if the brackets enclose the whole list
            if open != "(" || !inner.contains(['(', ')']) {
                return inner;
            }
        }
    }
    t
}

/// An ideal of k[x,y].
#[derive(Debug, Clone)]
pub struct PolyIdeal {
    ideal: Ideal,
}

impl PolyIdeal {
    pub fn new(gens: Vec<Poly>) -> Self {
        PolyIdeal { ideal: Ideal::new(2, gens) }
    }

    /// Comma-separated generators in x and y, optionally wrapped in ⟨…⟩.
    pub fn parse(s: &str) -> Result<Self, KleinianError> {
        Ok(Self::new(parse_poly_list(strip_brackets(s), &XY)?))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Poly] {
        self.ideal.generators()
    }

    pub fn product(&self, other: &PolyIdeal) -> PolyIdeal {
        PolyIdeal { ideal: self.ideal.product(&other.ideal) }
    }

    pub fn same_ideal(&self, other: &PolyIdeal) -> bool {
        self.ideal.same_ideal(&other.ideal)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.ideal.groebner().iter().map(|p| p.to_string_with(&XY)).collect()
    }
}

impl fmt::Display for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(", "))
    }
}

impl Serialize for PolyIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

pub fn colength(i: &PolyIdeal) -> Colength {
    i.ideal.colength()
}

/// Dimensions (d₀,…,d_r) of the weight spaces of k[x,y]/I.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IsotypicDims(pub Vec<usize>);

impl IsotypicDims {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Some(n) when the vector is nδ (type A: all entries equal).
    pub fn as_multiple_of_delta(&self) -> Option<usize> {
        let n = self.0[0];
        self.0.iter().all(|&d| d == n).then_some(n)
    }
}

impl GammaActionA {
    /// Every weight component of every generator lies in I.
    pub fn is_invariant(&self, i: &PolyIdeal) -> bool {
        i.generators().iter().all(|g| self.components(g).iter().all(|c| i.ideal.contains(c)))
    }
}

fn check_invariant(i: &PolyIdeal, action: &GammaActionA) -> Result<Vec<Mono>, KleinianError> {
    if !action.is_invariant(i) {
        return Err(KleinianError::NotInvariant);
    }
    i.ideal.standard_monomials().ok_or(KleinianError::InfiniteColength)
}

pub fn isotypic_dims(i: &PolyIdeal, action: &GammaActionA) -> Result<IsotypicDims, KleinianError> {
    let basis = check_invariant(i, action)?;
    let mut dims = vec![0; action.order()];
    for m in &basis {
        dims[action.weight(m)] += 1;
    }
    Ok(IsotypicDims(dims))
}

/// Whether k[x,y]/I has dimension n·dim ρ_i = n in weight i for every i in the set.
pub fn quot_dims_check(i: &PolyIdeal, action: &GammaActionA, set: &[usize], n: usize) -> Result<bool, KleinianError> {
    if let Some(&index) = set.iter().find(|&&k| k > action.r) {
        return Err(KleinianError::IndexOutOfRange { index, max: action.r });
    }
    let dims = isotypic_dims(i, action)?;
    Ok(set.iter().all(|&k| dims.0[k] == n))
}

/// An ideal of R₀ = k[u,v,w]/(uw − v^{r+1}), type A.
#[derive(Debug, Clone)]
pub struct InvariantIdeal {
    r: usize,
    gens: Vec<Poly>,
    // generators together with the relation, in k[u,v,w]
    lifted: Ideal,
}

impl InvariantIdeal {
    pub fn new(ty: DynkinType, gens: Vec<Poly>) -> Result<Self, KleinianError> {
        let action = GammaActionA::new(ty)?;
        let mut all = gens;
        all.push(action.relation());
        let lifted = Ideal::new(3, all);
        let mut shown = Vec::new();
        for g in lifted.groebner() {
            let nf = r0_normal_form(g, ty).map_err(|_| KleinianError::NotTypeA(ty))?;
            if !nf.is_zero() {
                shown.push(g.clone());
            }
        }
        Ok(InvariantIdeal { r: ty.rank(), gens: shown, lifted })
    }

    pub fn parse(ty: DynkinType, s: &str) -> Result<Self, KleinianError> {
        Self::new(ty, parse_poly_list(strip_brackets(s), &UVW)?)
    }

    /// Maximal ideal of a point (u,v,w) on the surface.
    pub fn maximal(ty: DynkinType, point: &[Q; 3]) -> Result<Self, KleinianError> {
        let gens = (0..3).map(|k| Poly::var(3, k).sub(&Poly::constant(3, point[k].clone()))).collect();
        Self::new(ty, gens)
    }

    pub fn ty(&self) -> DynkinType {
        DynkinType::a(self.r)
    }

    /// Reduced Gröbner basis modulo the relation, descending leading monomials.
    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// The preimage ideal in k[u,v,w], containing uw − v^{r+1}.
    pub fn lifted(&self) -> &Ideal {
        &self.lifted
    }

    pub fn colength(&self) -> Colength {
        self.lifted.colength()
    }

    pub fn same_ideal(&self, other: &InvariantIdeal) -> bool {
        self.r == other.r && self.lifted.same_ideal(&other.lifted)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|p| p.to_string_with(&UVW)).collect()
    }

    /// Staircase basis of R₀/J and the matrices of u, v, w on it.
    pub fn multiplication_matrices(&self) -> Result<(Vec<Mono>, [Matrix<Q>; 3]), KleinianError> {
        let basis = self.lifted.standard_monomials().ok_or(KleinianError::InfiniteColength)?;
        let mats = [0, 1, 2].map(|k| self.lifted.multiplication_matrix(&Poly::var(3, k), &basis));
        Ok((basis, mats))
    }
}

impl fmt::Display for InvariantIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(", "))
    }
}

impl Serialize for InvariantIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// I ↦ I ∩ k[x,y]^Γ, for I with isotypic dimensions nδ.
pub fn tau(i: &PolyIdeal, action: &GammaActionA) -> Result<InvariantIdeal, KleinianError> {
    let dims = isotypic_dims(i, action)?;
    let n = dims
        .as_multiple_of_delta()
        .ok_or_else(|| KleinianError::NotMultipleOfDelta { got: dims.0.clone(), expected: None })?;
    let m = action.order() as u32;
    // a weight-k element g contributes g itself (k = 0) or x^{m-k} g and y^k g
    let mut gens = Vec::new();
    for g in i.ideal.groebner() {
        for (k, part) in action.components(g).into_iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let k = k as u32;
            let multipliers: Vec<Mono> = if k == 0 {
                vec![Mono(vec![0, 0])]
            } else {
                vec![Mono(vec![m - k, 0]), Mono(vec![0, k])]
            };
            for mult in multipliers {
                let inv = part.mul(&Poly::term(mult, num_traits::One::one()));
                gens.push(inv.map_monomials(3, |mono| Poly::term(action.invariant_to_uvw(mono), num_traits::One::one())));
            }
        }
    }
    let out = InvariantIdeal::new(action.ty(), gens)?;
    match out.colength() {
        Colength::Finite(c) if c == n => Ok(out),
        Colength::Finite(c) => Err(KleinianError::WrongColength { expected: n, got: c }),
        Colength::Infinite => Err(KleinianError::InfiniteColength),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(r: usize) -> GammaActionA {
        GammaActionA { r }
    }

    #[test]
    fn colengths() {
        assert_eq!(colength(&PolyIdeal::parse("x^3, y").unwrap()), Colength::Finite(3));
        assert_eq!(colength(&PolyIdeal::parse("<x^6, y>").unwrap()), Colength::Finite(6));
        assert_eq!(colength(&PolyIdeal::parse("x").unwrap()), Colength::Infinite);
    }

    #[test]
    fn invariance() {
        assert!(a(2).is_invariant(&PolyIdeal::parse("x^6, y").unwrap()));
        assert!(!a(2).is_invariant(&PolyIdeal::parse("x + y").unwrap()));
        assert!(!a(1).is_invariant(&PolyIdeal::parse("x - 1").unwrap()));
    }

    #[test]
    fn example_a2() {
        let i = PolyIdeal::parse("x^6, y").unwrap();
        assert_eq!(isotypic_dims(&i, &a(2)).unwrap().0, vec![2, 2, 2]);
        let t = tau(&i, &a(2)).unwrap();
        assert_eq!(t.to_string(), "u^2, v, w");
        assert_eq!(t.colength(), Colength::Finite(2));
        assert!(quot_dims_check(&i, &a(2), &[0], 2).unwrap());
        assert!(quot_dims_check(&i, &a(2), &[0, 1, 2], 2).unwrap());
        let m = PolyIdeal::parse("x, y").unwrap();
        assert_eq!(isotypic_dims(&m, &a(2)).unwrap().0, vec![1, 0, 0]);
        assert!(!quot_dims_check(&m, &a(2), &[1], 1).unwrap());
        assert!(matches!(tau(&m, &a(2)), Err(KleinianError::NotMultipleOfDelta { .. })));
        assert!(matches!(tau(&PolyIdeal::parse("x+y").unwrap(), &a(2)), Err(KleinianError::NotInvariant)));
    }

    #[test]
    fn orbit_a1() {
        let i = PolyIdeal::parse("x*y - 1, x^2 - 1, y^2 - 1").unwrap();
        assert_eq!(isotypic_dims(&i, &a(1)).unwrap().0, vec![1, 1]);
        let t = tau(&i, &a(1)).unwrap();
        assert_eq!(t.to_string(), "u - 1, v - 1, w - 1");
    }
}
