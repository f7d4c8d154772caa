use mckay_exact::{Field, Matrix};
use mckay_quiver::{default_sign, SignFunction, Vertex};
use serde::Serialize;

use crate::rep::FramedRep;
use crate::RepError;

/// One square matrix per vertex ρ₀..ρ_r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentValue<F: Field> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> MomentValue<F> {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|m| m.is_zero())
    }

    pub fn trace_sum(&self) -> F {
        self.components.iter().fold(F::zero(), |acc, m| acc + m.trace())
    }
}

impl<F: Field> Serialize for MomentValue<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Vec<String>>> = self
            .components
            .iter()
            .map(|m| m.to_rows().iter().map(|r| r.iter().map(|x| x.to_text()).collect()).collect())
            .collect();
        rows.serialize(s)
    }
}

/// μ_k = Σ_{h(a)=ρ_k} ε(a) B_a B_{a*} over McKay arrows, plus ij at ρ₀.
pub fn moment_map<F: Field>(rep: &FramedRep<F>, eps: &SignFunction) -> Result<MomentValue<F>, RepError> {
    let q = rep.quiver();
    if !eps.is_valid_for(q) {
        return Err(RepError::BadSign);
    }
    let dims = rep.storage_dims();
    let mut components: Vec<Matrix<F>> = (0..q.rho_count()).map(|k| Matrix::zeros(dims[k], dims[k])).collect();
    for a in q.arrows() {
        let Vertex::Rho(k) = a.head else { continue };
        let prod = rep.mat(a.id).mul(rep.mat(q.star(a.id)));
        // the framing term enters as +ij whatever ε(b) is
        if a.tail == Vertex::Infinity || eps.get(a.id) > 0 {
            components[k] = components[k].add(&prod);
        } else {
            components[k] = components[k].sub(&prod);
        }
    }
    Ok(MomentValue { components })
}

pub fn check_preprojective<F: Field>(rep: &FramedRep<F>, eps: &SignFunction) -> Result<bool, RepError> {
    Ok(moment_map(rep, eps)?.is_zero())
}

/// Whether the scalar ji vanishes; only meaningful on the zero fibre with v_∞ = 1.
pub fn trace_identity_check<F: Field>(rep: &FramedRep<F>, eps: &SignFunction) -> Result<bool, RepError> {
    let vinf = rep.dim().infinity() as usize;
    if vinf != 1 {
        return Err(RepError::FramingDim(vinf));
    }
    if !check_preprojective(rep, eps)? {
        return Err(RepError::NotPreprojective);
    }
    Ok(rep.j().mul(rep.i()).is_zero())
}

/// ω(t, t′) = Σ Tr(B_a B′_{a*} − B_{a*} B′_a) over star pairs, a the arrow
/// with ε(a) = +1; the framing pair contributes Tr(ij′ − i′j).
pub fn symplectic_pairing<F: Field>(t1: &FramedRep<F>, t2: &FramedRep<F>) -> Result<F, RepError> {
    if !t1.same_shape(t2) {
        return Err(RepError::Mismatch);
    }
    let q = t1.quiver();
    let eps = default_sign(q);
    let mut total = F::zero();
    for (a, b) in q.star_pairs() {
        let (a, a_star) = if eps.get(a) > 0 { (a, b) } else { (b, a) };
        let x = t1.mat(a).mul(t2.mat(a_star)).trace();
        let y = t1.mat(a_star).mul(t2.mat(a)).trace();
        total = total + x - y;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::DimVector;
    use mckay_exact::Q;
    use mckay_roots::DynkinType;

    fn scalar(v: i64) -> Matrix<Q> {
        Matrix::from_i64_rows(&[&[v]])
    }

    #[test]
    fn scalar_a1_example() {
        // arrows 0,2: ρ₀→ρ₁ (a₁, a₂); 1,3 their stars; 4 = b, 5 = b*
        let ty = DynkinType::a(1);
        let rep = FramedRep::new(
            ty,
            1,
            &DimVector(vec![1, 1, 1]),
            vec![scalar(1), scalar(1), scalar(1), scalar(-1), scalar(1), scalar(0)],
        )
        .unwrap();
        let eps = default_sign(rep.quiver());
        let mu = moment_map(&rep, &eps).unwrap();
        assert!(mu.is_zero());
        assert!(trace_identity_check(&rep, &eps).unwrap());
        let bumped = rep.clone().with(3, scalar(0)).unwrap();
        assert!(!check_preprojective(&bumped, &eps).unwrap());
        assert_eq!(trace_identity_check(&bumped, &eps), Err(RepError::NotPreprojective));
    }

    #[test]
    fn single_trace_term() {
        let ty = DynkinType::a(1);
        let dims = DimVector(vec![0, 1, 1]);
        let t1 = FramedRep::<Q>::zero(ty, 1, &dims).unwrap().with(0, scalar(1)).unwrap();
        let t2 = FramedRep::<Q>::zero(ty, 1, &dims).unwrap().with(1, scalar(1)).unwrap();
        assert_eq!(symplectic_pairing(&t1, &t2).unwrap(), mckay_exact::q(1, 1));
        assert_eq!(symplectic_pairing(&t2, &t1).unwrap(), mckay_exact::q(-1, 1));
    }
}
