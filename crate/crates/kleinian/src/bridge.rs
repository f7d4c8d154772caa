use std::collections::BTreeMap;

use mckay_exact::{Matrix, Q};
use mckay_poly::{Mono, Poly};
use mckay_quiver::TypeAOrientation;
use mckay_reps::{paired_eigenvalues, DimVector, FramedRep};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::action::GammaActionA;
use crate::ideal::{isotypic_dims, tau, InvariantIdeal, PolyIdeal};
use crate::KleinianError;

/// The framed representation k[x,y]/I: weight spaces at the vertices, x and y
/// along the oriented arrows, i = 1, j = 0.
pub fn rep_from_ideal(i: &PolyIdeal, action: &GammaActionA) -> Result<FramedRep<Q>, KleinianError> {
    let dims = isotypic_dims(i, action)?;
    let n = dims
        .as_multiple_of_delta()
        .ok_or_else(|| KleinianError::NotMultipleOfDelta { got: dims.0.clone(), expected: None })?;
    let basis = i.ideal().standard_monomials().ok_or(KleinianError::InfiniteColength)?;
    let m = action.order();
    let by_weight: Vec<Vec<usize>> =
        (0..m).map(|k| (0..basis.len()).filter(|&b| action.weight(&basis[b]) == k).collect()).collect();
    let block = |p: &Poly, from: usize, to: usize| -> Matrix<Q> {
        let src = &by_weight[from];
        let dst = &by_weight[to];
        let mut out = Matrix::zeros(dst.len(), src.len());
        for (c, &b) in src.iter().enumerate() {
            let image = p.mul(&Poly::term(basis[b].clone(), Q::one()));
            let coords = i.ideal().coordinates(&image, &basis);
            for (row, &d) in dst.iter().enumerate() {
                out[(row, c)] = coords[d].clone();
            }
        }
        out
    };
    let ty = action.ty();
    let mut rep = FramedRep::<Q>::zero(ty, n, &DimVector::hilbert(ty, n))?;
    let orient = TypeAOrientation::new(rep.quiver()).expect("type A quiver");
    let (x, y) = (Poly::var(2, 0), Poly::var(2, 1));
    for k in 0..m {
        let next = (k + 1) % m;
        rep.set(orient.x_arrows[k], block(&x, k, next))?;
        let sigma = Q::from_integer(i64::from(orient.sigma[k]).into());
        rep.set(orient.y_arrows[k], block(&y, next, k).scale(&sigma))?;
    }
    let one = Mono(vec![0, 0]);
    let mut iv = Matrix::zeros(n, 1);
    if let Some(pos) = by_weight[0].iter().position(|&b| basis[b] == one) {
        iv[(pos, 0)] = Q::one();
    }
    let b = rep.quiver().framing_arrow().expect("framed");
    rep.set(b, iv)?;
    Ok(rep)
}

/// A point (u, v, w) of the singular surface with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HilbertChowPoint {
    #[serde(serialize_with = "ser_point")]
    pub point: [Q; 3],
    pub multiplicity: usize,
}

fn ser_point<S: serde::Serializer>(p: &[Q; 3], s: S) -> Result<S::Ok, S::Error> {
    p.iter().map(mckay_exact::rational_to_string).collect::<Vec<_>>().serialize(s)
}

fn collect(points: Vec<[Q; 3]>) -> Vec<HilbertChowPoint> {
    let mut counts: BTreeMap<[Q; 3], usize> = BTreeMap::new();
    for p in points {
        *counts.entry(p).or_default() += 1;
    }
    counts.into_iter().map(|(point, multiplicity)| HilbertChowPoint { point, multiplicity }).collect()
}

/// Joint spectrum of (B_u, B_v, B_w).
pub fn hilbert_chow_matrices(mats: &[Matrix<Q>; 3]) -> Result<Vec<HilbertChowPoint>, KleinianError> {
    let tuples = paired_eigenvalues(mats)?;
    Ok(collect(tuples.into_iter().map(|t| [t[0].clone(), t[1].clone(), t[2].clone()]).collect()))
}

pub fn hilbert_chow_invariant(j: &InvariantIdeal) -> Result<Vec<HilbertChowPoint>, KleinianError> {
    let (_, mats) = j.multiplication_matrices()?;
    hilbert_chow_matrices(&mats)
}

/// Support cycle of I in A²/Γ, read off from the action of u, v, w on
/// R₀/τ(I) = (k[x,y]/I)^Γ.
pub fn hilbert_chow(i: &PolyIdeal, action: &GammaActionA) -> Result<Vec<HilbertChowPoint>, KleinianError> {
    hilbert_chow_invariant(&tau(i, action)?)
}

/// The same cycle from the eigenvalue pairs of (B_x, B_y) on all of k[x,y]/I,
/// pushed forward by (x,y) ↦ (x^{r+1}, xy, y^{r+1}). Only works when those
/// eigenvalues are rational (in practice type A₁).
pub fn hilbert_chow_full_module(i: &PolyIdeal, action: &GammaActionA) -> Result<Vec<HilbertChowPoint>, KleinianError> {
    let basis = i.ideal().standard_monomials().ok_or(KleinianError::InfiniteColength)?;
    let bx = i.ideal().multiplication_matrix(&Poly::var(2, 0), &basis);
    let by = i.ideal().multiplication_matrix(&Poly::var(2, 1), &basis);
    let m = action.order() as u32;
    let pairs = paired_eigenvalues(&[bx, by])?;
    let pow = |x: &Q| -> Q { (0..m).fold(Q::one(), |acc, _| acc * x) };
    let images: Vec<[Q; 3]> = pairs.iter().map(|p| [pow(&p[0]), &p[0] * &p[1], pow(&p[1])]).collect();
    let mut out = collect(images);
    for p in out.iter_mut() {
        if p.multiplicity % m as usize != 0 {
            return Err(KleinianError::UnevenMultiplicity);
        }
        p.multiplicity /= m as usize;
    }
    Ok(out)
}

impl HilbertChowPoint {
    /// uw − v^{r+1} at the point.
    pub fn relation_value(&self, r: usize) -> Q {
        let [u, v, w] = &self.point;
        let vp = (0..=r).fold(Q::one(), |acc, _| acc * v);
        u * w - vp
    }

    pub fn on_surface(&self, r: usize) -> bool {
        self.relation_value(r).is_zero()
    }
}
