use mckay_exact::subspace::{all_subspaces, FiniteField, Subspace};
use mckay_exact::{Field, Fp, Q};
use mckay_quiver::SignFunction;
use mckay_theta::ThetaParam;
use num_traits::Signed;
use rayon::prelude::*;

use crate::moment::check_preprojective;
use crate::rep::{DimVector, FramedRep, SubDimVector};
use crate::RepError;

/// Largest total dimension the exhaustive oracle accepts.
pub const BRUTEFORCE_MAX_DIM: usize = 8;

fn require_framing_one<F: Field>(rep: &FramedRep<F>) -> Result<(), RepError> {
    let vinf = rep.dim().infinity() as usize;
    if vinf != 1 {
        return Err(RepError::FramingDim(vinf));
    }
    Ok(())
}

fn spin_subspaces<F: Field>(rep: &FramedRep<F>) -> (Vec<Subspace<F>>, Vec<SubDimVector>) {
    let dims = rep.storage_dims();
    let inf = rep.infinity_index();
    let mut spaces: Vec<Subspace<F>> = dims.iter().map(|&d| Subspace::zero(d)).collect();
    spaces[inf] = Subspace::full(dims[inf]);
    let snapshot = |s: &[Subspace<F>]| DimVector::from_storage(&s.iter().map(|x| x.dim()).collect::<Vec<_>>());
    let mut rounds = vec![snapshot(&spaces)];
    let q = rep.quiver();
    loop {
        let mut next = spaces.clone();
        let mut grew = false;
        for a in q.arrows() {
            let (t, h) = (q.index_of(a.tail), q.index_of(a.head));
            for v in spaces[t].basis() {
                grew |= next[h].insert(&rep.mat(a.id).mul_vec(v));
            }
        }
        spaces = next;
        if !grew {
            break;
        }
        rounds.push(snapshot(&spaces));
    }
    (spaces, rounds)
}

/// Dimension vector of the subrepresentation generated by the framing vector.
pub fn spin_from_framing<F: Field>(rep: &FramedRep<F>) -> Result<SubDimVector, RepError> {
    require_framing_one(rep)?;
    Ok(spin_rounds(rep)?.pop().expect("at least one round"))
}

/// Dimensions after each round of the spin iteration, starting from (1,0,…,0).
pub fn spin_rounds<F: Field>(rep: &FramedRep<F>) -> Result<Vec<SubDimVector>, RepError> {
    require_framing_one(rep)?;
    Ok(spin_subspaces(rep).1)
}

pub fn is_stable_cplus<F: Field>(rep: &FramedRep<F>) -> Result<bool, RepError> {
    Ok(spin_from_framing(rep)? == rep.dim())
}

/// Stability at many representations at once.
pub fn is_stable_cplus_batch<F: Field>(reps: &[FramedRep<F>]) -> Vec<Result<bool, RepError>> {
    reps.par_iter().map(is_stable_cplus).collect()
}

/// θ_I-semistability: the spin must be full at every vertex of I.
pub fn is_semistable_theta_i<F: Field>(rep: &FramedRep<F>, set: &[usize]) -> Result<bool, RepError> {
    if set.is_empty() {
        return Err(RepError::EmptyIndexSet);
    }
    let r = rep.ty().rank();
    if let Some(&index) = set.iter().find(|&&i| i > r) {
        return Err(RepError::IndexOutOfRange { index, max: r });
    }
    let spin = spin_from_framing(rep)?;
    let full = rep.dim();
    Ok(set.iter().all(|&i| spin.rho(i) == full.rho(i)))
}

pub fn theta_pairing(theta: &ThetaParam, d: &SubDimVector, n: usize, ty: mckay_roots::DynkinType) -> Result<Q, RepError> {
    let expected = ty.vertex_count();
    if theta.dim() != expected {
        return Err(RepError::ThetaDim { expected, got: theta.dim() });
    }
    if d.0.len() != expected + 1 {
        return Err(RepError::DimLength { expected: expected + 1, got: d.0.len() });
    }
    Ok(theta.pairing(ty, n, &d.0))
}

/// θ with its ∞-component fixed by θ(dim V) = 0, evaluated on d.
fn king_value(theta: &ThetaParam, full: &DimVector, d: &DimVector) -> Q {
    let finite = |v: &DimVector| theta.eval(&v.0[1..]);
    let vinf = full.infinity();
    if vinf == 0 {
        return finite(d);
    }
    let theta_inf = -finite(full) / Q::from_integer(vinf.into());
    theta_inf * Q::from_integer(d.infinity().into()) + finite(d)
}

/// Exhaustive search for a subrepresentation V′ with θ(V′) < 0.
pub fn bruteforce_destabilizer<const P: u64>(
    rep: &FramedRep<Fp<P>>,
    theta: &ThetaParam,
) -> Result<Option<SubDimVector>, RepError> {
    let total = rep.dim().total() as usize;
    if !(P == 2 || P == 3) || total > BRUTEFORCE_MAX_DIM {
        return Err(RepError::BruteForceGuard { total, limit: BRUTEFORCE_MAX_DIM, field: Fp::<P>::name() });
    }
    let expected = rep.ty().vertex_count();
    if theta.dim() != expected {
        return Err(RepError::ThetaDim { expected, got: theta.dim() });
    }
    let full = rep.dim();
    let mut found = None;
    for_each_subrep(rep, &mut |dims| {
        if king_value(theta, &full, dims).is_negative() {
            found = Some(dims.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

pub fn is_semistable_bruteforce<const P: u64>(rep: &FramedRep<Fp<P>>, theta: &ThetaParam) -> Result<bool, RepError> {
    Ok(bruteforce_destabilizer(rep, theta)?.is_none())
}

/// Visit the dimension vector of every subrepresentation until `f` returns false.
pub fn for_each_subrep<F: FiniteField>(rep: &FramedRep<F>, f: &mut dyn FnMut(&SubDimVector) -> bool) {
    let dims = rep.storage_dims();
    let choices: Vec<Vec<Subspace<F>>> = dims.iter().map(|&d| all_subspaces::<F>(d)).collect();
    let mut chosen: Vec<Subspace<F>> = Vec::with_capacity(dims.len());
    dfs(rep, &choices, &mut chosen, f);
}

fn dfs<F: FiniteField>(
    rep: &FramedRep<F>,
    choices: &[Vec<Subspace<F>>],
    chosen: &mut Vec<Subspace<F>>,
    f: &mut dyn FnMut(&SubDimVector) -> bool,
) -> bool {
    let k = chosen.len();
    if k == choices.len() {
        let d: Vec<usize> = chosen.iter().map(|s| s.dim()).collect();
        return f(&DimVector::from_storage(&d));
    }
    let q = rep.quiver();
    for s in &choices[k] {
        // arrows between vertex k and already chosen vertices (or k itself)
        let closed = q.arrows().iter().all(|a| {
            let (t, h) = (q.index_of(a.tail), q.index_of(a.head));
            if t.max(h) != k {
                return true;
            }
            let src = if t == k { s } else { &chosen[t] };
            let dst = if h == k { s } else { &chosen[h] };
            src.maps_into(rep.mat(a.id), dst)
        });
        if !closed {
            continue;
        }
        chosen.push(s.clone());
        let keep_going = dfs(rep, choices, chosen, f);
        chosen.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// For a stable point of the zero fibre, whether j vanishes.
pub fn lemma_j_zero_check<F: Field>(rep: &FramedRep<F>, eps: &SignFunction) -> Result<bool, RepError> {
    if !check_preprojective(rep, eps)? {
        return Err(RepError::NotPreprojective);
    }
    if !is_stable_cplus(rep)? {
        return Err(RepError::NotStable);
    }
    Ok(rep.j().entries().all(|x| x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mckay_exact::Matrix;
    use mckay_roots::DynkinType;
    use num_traits::Zero;

    fn a1(dims: &[i64]) -> FramedRep<Fp<2>> {
        FramedRep::zero(DynkinType::a(1), 1, &DimVector(dims.to_vec())).unwrap()
    }

    fn one() -> Matrix<Fp<2>> {
        Matrix::from_fn(1, 1, |_, _| Fp::new(1))
    }

    #[test]
    fn spin_examples() {
        let zero = a1(&[1, 1, 1]);
        assert_eq!(spin_from_framing(&zero).unwrap().0, vec![1, 0, 0]);
        let with_i = zero.clone().with(4, one()).unwrap();
        assert_eq!(spin_from_framing(&with_i).unwrap().0, vec![1, 1, 0]);
        let full = with_i.clone().with(0, one()).unwrap();
        assert_eq!(spin_from_framing(&full).unwrap().0, vec![1, 1, 1]);
        assert!(is_stable_cplus(&full).unwrap());
        assert!(!is_stable_cplus(&with_i).unwrap());
        assert!(is_semistable_theta_i(&with_i, &[0]).unwrap());
        assert!(!is_semistable_theta_i(&zero, &[0]).unwrap());
        assert_eq!(is_semistable_theta_i(&zero, &[]), Err(RepError::EmptyIndexSet));
        assert!(spin_from_framing(&a1(&[2, 1, 1])).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let plus = ThetaParam::from_ints(&[1, 1]);
        let zero = a1(&[1, 1, 1]);
        assert!(!is_semistable_bruteforce(&zero, &plus).unwrap());
        let full = zero.clone().with(4, one()).unwrap().with(0, one()).unwrap();
        assert!(is_semistable_bruteforce(&full, &plus).unwrap());
        assert!(is_semistable_bruteforce(&zero, &ThetaParam::from_ints(&[0, 0])).unwrap());
    }

    #[test]
    fn pairing_examples() {
        let ty = DynkinType::a(1);
        let th = ThetaParam::from_ints(&[1, 0]);
        assert_eq!(theta_pairing(&th, &DimVector(vec![1, 0, 0]), 2, ty).unwrap(), mckay_exact::q(-2, 1));
        assert_eq!(theta_pairing(&th, &DimVector(vec![0, 1, 0]), 2, ty).unwrap(), mckay_exact::q(1, 1));
        assert!(theta_pairing(&th, &DimVector::hilbert(ty, 2), 2, ty).unwrap().is_zero());
    }
}
