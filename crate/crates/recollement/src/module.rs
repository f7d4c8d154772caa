use mckay_exact::{rational_to_string, Matrix, Q};
use mckay_kleinian::InvariantIdeal;
use mckay_poly::{Colength, Mono};
use mckay_quiver::TypeAOrientation;
use mckay_reps::FramedRep;
use mckay_roots::DynkinType;
use num_traits::One;
use serde::Serialize;

use crate::RecollementError;

/// An A₀-module of dimension (1, n): commuting B₁, B₂, B₃ (for u, v, w)
/// satisfying B₁B₃ = B₂^{r+1}, and the image i of the framing arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A0Module {
    ty: DynkinType,
    pub b: [Matrix<Q>; 3],
    pub i: Matrix<Q>,
}

impl A0Module {
    pub fn new(ty: DynkinType, b: [Matrix<Q>; 3], i: Matrix<Q>) -> Result<Self, RecollementError> {
        if !ty.is_type_a() {
            return Err(RecollementError::UnsupportedType(ty));
        }
        let n = i.rows();
        if i.cols() != 1 || b.iter().any(|m| m.shape() != (n, n)) {
            return Err(RecollementError::Shape(format!("expected {n}x{n} matrices and a {n}x1 vector")));
        }
        for k in 0..3 {
            for l in k + 1..3 {
                if !b[k].commutes_with(&b[l]) {
                    return Err(RecollementError::NonCommuting(k + 1, l + 1));
                }
            }
        }
        let module = A0Module { ty, b, i };
        if !module.relation_holds() {
            return Err(RecollementError::RelationFails);
        }
        Ok(module)
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn n(&self) -> usize {
        self.i.rows()
    }

    pub fn relation_holds(&self) -> bool {
        let lhs = self.b[0].mul(&self.b[2]);
        lhs == self.b[1].pow(self.ty.rank() as u32 + 1)
    }

    /// The action of a monomial u^a v^b w^c.
    pub fn monomial_action(&self, m: &Mono) -> Matrix<Q> {
        (0..3).fold(Matrix::identity(self.n()), |acc, k| acc.mul(&self.b[k].pow(m.0[k])))
    }

    /// Krylov closure of i under B₁, B₂, B₃ spans everything.
    pub fn is_infty_generated(&self) -> bool {
        self.krylov_form().is_some()
    }

    /// Greedy basis B^m i over monomials m, degree by degree and larger
    /// monomials first within a degree, and the module written in it. Two generated modules are isomorphic
    /// exactly when their forms agree.
    pub fn krylov_form(&self) -> Option<KrylovForm> {
        let n = self.n();
        let mut chosen: Vec<Mono> = Vec::new();
        let mut cols: Vec<Vec<Q>> = Vec::new();
        'outer: for degree in 0..=n as u32 {
            let mut grew = false;
            for m in monomials_of_degree(degree).into_iter().rev() {
                if cols.len() == n {
                    break 'outer;
                }
                let v = self.monomial_action(&m).mul(&self.i).column(0);
                let mut trial = cols.clone();
                trial.push(v);
                if Matrix::from_columns(n, &trial).rank() == trial.len() {
                    cols = trial;
                    chosen.push(m);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        if cols.len() != n {
            return None;
        }
        let k = Matrix::from_columns(n, &cols);
        let k_inv = k.inverse()?;
        let b = [0, 1, 2].map(|t| k_inv.mul(&self.b[t]).mul(&k));
        Some(KrylovForm { monomials: chosen, b, i: k_inv.mul(&self.i) })
    }
}

/// Monomials u^a v^b w^c of a given degree, ascending in degrevlex.
fn monomials_of_degree(d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push(Mono(vec![a, b, d - a - b]));
        }
    }
    out.sort();
    out
}

/// A module in the basis produced by [`A0Module::krylov_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrylovForm {
    pub monomials: Vec<Mono>,
    pub b: [Matrix<Q>; 3],
    pub i: Matrix<Q>,
}

impl Serialize for A0Module {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            #[serde(rename = "type")]
            ty: String,
            n: usize,
            b: Vec<Vec<Vec<String>>>,
            i: Vec<String>,
        }
        let text = |m: &Matrix<Q>| m.to_rows().iter().map(|r| r.iter().map(rational_to_string).collect()).collect();
        Out {
            ty: self.ty.to_string(),
            n: self.n(),
            b: self.b.iter().map(text).collect(),
            i: self.i.column(0).iter().map(rational_to_string).collect(),
        }
        .serialize(s)
    }
}

/// R₀/J with u, v, w acting on its staircase basis and i = class of 1.
pub fn a0_module_from_invariant_ideal(j: &InvariantIdeal, n: Option<usize>) -> Result<A0Module, RecollementError> {
    let got = match j.colength() {
        Colength::Finite(c) => c,
        Colength::Infinite => return Err(RecollementError::InfiniteColength),
    };
    if let Some(expected) = n {
        if expected != got {
            return Err(RecollementError::WrongColength { expected, got });
        }
    }
    let (basis, b) = j.multiplication_matrices()?;
    let mut i = Matrix::zeros(basis.len(), 1);
    if let Some(pos) = basis.iter().position(|m| m.is_one()) {
        i[(pos, 0)] = Q::one();
    }
    A0Module::new(j.ty(), b, i)
}

/// The (∞, ρ₀) corner of a framed representation: the paths
/// p_u = x-cycle, p_v = (y into ρ₀)(x out of ρ₀), p_w = −(y-cycle) acting on V₀,
/// and i. The sign on p_w compensates the product of the y-twists.
pub fn restrict_to_corner(rep: &FramedRep<Q>) -> Result<A0Module, RecollementError> {
    let ty = rep.ty();
    if !ty.is_type_a() {
        return Err(RecollementError::UnsupportedType(ty));
    }
    let orient = TypeAOrientation::new(rep.quiver()).map_err(|_| RecollementError::UnsupportedType(ty))?;
    let m = ty.rank() + 1;
    let n0 = rep.storage_dims()[0];
    let mut pu = Matrix::identity(n0);
    for k in 0..m {
        pu = rep.mat(orient.x_arrows[k]).mul(&pu);
    }
    // y-arrows run ρ_{k+1} → ρ_k; from ρ₀ go through ρ_r, ρ_{r-1}, …
    let mut pw = Matrix::identity(n0);
    for k in (0..m).rev() {
        pw = rep.mat(orient.y_arrows[k]).mul(&pw);
    }
    let sigma0 = Q::from_integer(i64::from(orient.sigma[0]).into());
    let pv = rep.mat(orient.y_arrows[0]).mul(rep.mat(orient.x_arrows[0])).scale(&sigma0);
    let sign = Q::from_integer(orient.sigma.iter().map(|&s| i64::from(s)).product::<i64>().into());
    A0Module::new(ty, [pu, pv, pw.scale(&sign)], rep.i().clone())
}
