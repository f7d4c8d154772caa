use std::fmt;

use mckay_exact::lp::System;
use mckay_exact::Q;
use mckay_roots::{delta, DynkinType};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arrangement::{arrangement, normalize, Arrangement, Hyperplane, HyperplaneLabel};
use crate::ThetaError;

pub const CHAMBER_MAX_VERTICES: usize = 4;
pub const CHAMBER_MAX_HYPERPLANES: usize = 24;

fn qv(v: &[i64], sign: i64) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(BigInt::from(x * sign))).collect()
}

/// Chamber count and the sign vectors of the chambers (+1/−1 per hyperplane).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberCount {
    pub total: usize,
    pub in_f: usize,
    #[serde(skip)]
    pub chambers: Vec<Vec<i8>>,
}

fn feasible(dim: usize, normals: &[&[i64]], signs: &[i8]) -> bool {
    let mut sys = System::new(dim);
    for (n, &s) in normals.iter().zip(signs) {
        sys.positive(qv(n, s as i64));
    }
    sys.is_feasible()
}

/// Open regions of the central arrangement, found by refining realizable
/// sign vectors one hyperplane at a time with exact LP feasibility.
pub fn enumerate_chambers(arr: &Arrangement) -> Vec<Vec<i8>> {
    let dim = arr.ty.vertex_count();
    let mut regions: Vec<Vec<i8>> = vec![Vec::new()];
    for k in 0..arr.len() {
        let normals: Vec<&[i64]> = arr.hyperplanes[..=k].iter().map(|h| h.normal.as_slice()).collect();
        regions = regions
            .par_iter()
            .flat_map_iter(|s| {
                [1i8, -1]
                    .into_iter()
                    .filter_map(|sign| {
                        let mut t = s.clone();
                        t.push(sign);
                        feasible(dim, &normals, &t).then_some(t)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    regions.sort();
    regions
}

pub fn count_chambers(ty: DynkinType, n: usize) -> Result<ChamberCount, ThetaError> {
    if ty.vertex_count() > CHAMBER_MAX_VERTICES {
        return Err(ThetaError::ChamberGuard {
            ty,
            n,
            detail: format!("r+1 = {} > {CHAMBER_MAX_VERTICES}", ty.vertex_count()),
        });
    }
    let arr = arrangement(ty, n)?;
    if arr.len() > CHAMBER_MAX_HYPERPLANES {
        return Err(ThetaError::ChamberGuard {
            ty,
            n,
            detail: format!("{} hyperplanes > {CHAMBER_MAX_HYPERPLANES}", arr.len()),
        });
    }
    let chambers = enumerate_chambers(&arr);
    let mut walls = vec![arr.delta_index()];
    walls.extend((1..=ty.rank()).map(|k| arr.simple_index(k)));
    let in_f = chambers.iter().filter(|s| walls.iter().all(|&w| s[w] > 0)).count();
    Ok(ChamberCount { total: chambers.len(), in_f, chambers })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallKind {
    Flop,
    Divisorial,
    NotAWallOfF,
}

impl fmt::Display for WallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallKind::Flop => "flop",
            WallKind::Divisorial => "divisorial",
            WallKind::NotAWallOfF => "not_a_wall_of_F",
        })
    }
}

impl Serialize for WallKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Facets of F (δ⊥, ρ_k⊥) are divisorial; hyperplanes meeting the interior
/// of F are flops; the rest miss F away from lower-dimensional faces.
pub fn classify_wall(h: &Hyperplane, ty: DynkinType, n: usize) -> Result<WallKind, ThetaError> {
    let arr = arrangement(ty, n)?;
    let normal = normalize(&h.normal);
    if arr.position(&normal).is_none() {
        return Err(ThetaError::NotInArrangement(h.normal.clone()));
    }
    let dim = ty.vertex_count();
    let d = delta(ty);
    let is_simple = (1..dim).any(|k| normal.iter().enumerate().all(|(i, &x)| x == (i == k) as i64));
    if normal == d || is_simple {
        return Ok(WallKind::Divisorial);
    }
    let mut sys = System::new(dim);
    sys.equal(qv(&normal, 1), Q::from_integer(BigInt::from(0)));
    sys.positive(qv(&d, 1));
    for k in 1..dim {
        let mut e = vec![0; dim];
        e[k] = 1;
        sys.positive(qv(&e, 1));
    }
    Ok(if sys.is_feasible() { WallKind::Flop } else { WallKind::NotAWallOfF })
}

/// Classification of every hyperplane, keyed by label text.
pub fn classify_all(arr: &Arrangement) -> Result<Vec<(HyperplaneLabel, WallKind)>, ThetaError> {
    arr.hyperplanes.iter().map(|h| Ok((h.label.clone(), classify_wall(h, arr.ty, arr.n)?))).collect()
}
