use std::collections::BTreeMap;
use std::fmt;

use mckay_exact::{Field, Fp, Matrix, Q};
use mckay_quiver::{double, frame, DoubledQuiver};
use mckay_roots::{build_mckay_graph, delta, DynkinType};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::RepError;

/// Dimension vector in the order (v_∞, v₀, …, v_r).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

/// Dimensions of a subrepresentation; same layout as [`DimVector`].
pub type SubDimVector = DimVector;

impl DimVector {
    /// (1, nδ).
    pub fn hilbert(ty: DynkinType, n: usize) -> Self {
        let mut v = vec![1];
        v.extend(delta(ty).into_iter().map(|d| d * n as i64));
        DimVector(v)
    }

    pub fn infinity(&self) -> i64 {
        self.0[0]
    }

    /// Component at ρ_k.
    pub fn rho(&self, k: usize) -> i64 {
        self.0[k + 1]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Convert from quiver storage order (ρ₀..ρ_r, ∞).
    pub fn from_storage(dims: &[usize]) -> Self {
        let r1 = dims.len() - 1;
        let mut v = vec![dims[r1] as i64];
        v.extend(dims[..r1].iter().map(|&d| d as i64));
        DimVector(v)
    }

    pub fn to_storage(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0[1..].iter().map(|&d| d as usize).collect();
        v.push(self.0[0] as usize);
        v
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn framed_quiver(ty: DynkinType) -> DoubledQuiver {
    frame(&double(&build_mckay_graph(ty))).expect("fresh doubled quiver is unframed")
}

/// Matrices B_a for every arrow of the framed doubled McKay quiver.
/// The framing arrow b carries i, its star b* carries j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedRep<F: Field> {
    ty: DynkinType,
    n: usize,
    quiver: DoubledQuiver,
    // storage order: ρ₀..ρ_r, ∞
    dims: Vec<usize>,
    mats: Vec<Matrix<F>>,
}

impl<F: Field> FramedRep<F> {
    pub fn zero(ty: DynkinType, n: usize, dims: &DimVector) -> Result<Self, RepError> {
        let quiver = framed_quiver(ty);
        let dims = check_dims(ty, dims)?;
        let mats = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[quiver.index_of(a.head)], dims[quiver.index_of(a.tail)]))
            .collect();
        Ok(FramedRep { ty, n, quiver, dims, mats })
    }

    pub fn new(ty: DynkinType, n: usize, dims: &DimVector, mats: Vec<Matrix<F>>) -> Result<Self, RepError> {
        let mut rep = Self::zero(ty, n, dims)?;
        if mats.len() != rep.mats.len() {
            return Err(RepError::ArrowCount { expected: rep.mats.len(), got: mats.len() });
        }
        for (id, m) in mats.into_iter().enumerate() {
            rep.set(id, m)?;
        }
        Ok(rep)
    }

    /// Replace B_a, checking its shape.
    pub fn set(&mut self, arrow: usize, m: Matrix<F>) -> Result<(), RepError> {
        let expected = self.expected_shape(arrow);
        if m.shape() != expected {
            return Err(RepError::Shape { arrow, expected, got: m.shape() });
        }
        self.mats[arrow] = m;
        Ok(())
    }

    pub fn with(mut self, arrow: usize, m: Matrix<F>) -> Result<Self, RepError> {
        self.set(arrow, m)?;
        Ok(self)
    }

    pub fn expected_shape(&self, arrow: usize) -> (usize, usize) {
        (self.dims[self.quiver.head_index(arrow)], self.dims[self.quiver.tail_index(arrow)])
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quiver(&self) -> &DoubledQuiver {
        &self.quiver
    }

    pub fn dim(&self) -> DimVector {
        DimVector::from_storage(&self.dims)
    }

    /// Dimensions in quiver storage order.
    pub fn storage_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mat(&self, arrow: usize) -> &Matrix<F> {
        &self.mats[arrow]
    }

    pub fn mats(&self) -> &[Matrix<F>] {
        &self.mats
    }

    pub fn i(&self) -> &Matrix<F> {
        &self.mats[self.quiver.framing_arrow().expect("framed")]
    }

    pub fn j(&self) -> &Matrix<F> {
        &self.mats[self.quiver.coframing_arrow().expect("framed")]
    }

    pub fn infinity_index(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.ty == other.ty && self.dims == other.dims
    }

    pub fn map_entries<G: Field>(&self, f: impl Fn(&F) -> G) -> FramedRep<G> {
        FramedRep {
            ty: self.ty,
            n: self.n,
            quiver: self.quiver.clone(),
            dims: self.dims.clone(),
            mats: self
                .mats
                .iter()
                .map(|m| Matrix::from_fn(m.rows(), m.cols(), |r, c| f(&m[(r, c)])))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RepError> {
        if !self.same_shape(other) {
            return Err(RepError::Mismatch);
        }
        let mut out = self.clone();
        for (m, o) in out.mats.iter_mut().zip(&other.mats) {
            *m = m.add(o);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for m in out.mats.iter_mut() {
            *m = m.scale(c);
        }
        out
    }

    /// g·(B, i, j) = (g_{h(a)} B_a g_{t(a)}⁻¹). One invertible matrix per
    /// vertex in storage order.
    pub fn act(&self, g: &[Matrix<F>]) -> Result<Self, RepError> {
        if g.len() != self.dims.len() {
            return Err(RepError::DimLength { expected: self.dims.len(), got: g.len() });
        }
        let mut inv = Vec::with_capacity(g.len());
        for (k, m) in g.iter().enumerate() {
            if m.shape() != (self.dims[k], self.dims[k]) {
                return Err(RepError::Invalid(format!("gauge matrix at vertex {k} has wrong shape")));
            }
            inv.push(m.inverse().ok_or_else(|| RepError::Invalid(format!("gauge matrix at vertex {k} is singular")))?);
        }
        let mut out = self.clone();
        for (id, m) in out.mats.iter_mut().enumerate() {
            let h = self.quiver.head_index(id);
            let t = self.quiver.tail_index(id);
            *m = g[h].mul(m).mul(&inv[t]);
        }
        Ok(out)
    }

    /// Random entries in -range..=range on every arrow.
    pub fn random(ty: DynkinType, n: usize, dims: &DimVector, range: i64, rng: &mut impl Rng) -> Result<Self, RepError> {
        let mut rep = Self::zero(ty, n, dims)?;
        for m in rep.mats.iter_mut() {
            *m = Matrix::from_fn(m.rows(), m.cols(), |_, _| F::from_i64(rng.gen_range(-range..=range)));
        }
        Ok(rep)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mats: BTreeMap<String, Vec<Vec<String>>> = self
            .mats
            .iter()
            .enumerate()
            .map(|(id, m)| (id.to_string(), m.to_rows().iter().map(|r| r.iter().map(|x| x.to_text()).collect()).collect()))
            .collect();
        serde_json::json!({
            "type": self.ty.to_string(),
            "n": self.n,
            "field": F::name(),
            "dims": self.dim(),
            "mats": mats,
        })
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, RepError> {
        let raw: RawRep = serde_json::from_value(value.clone()).map_err(|e| RepError::Invalid(e.to_string()))?;
        if raw.field != F::name() {
            return Err(RepError::FieldMismatch { expected: F::name(), found: raw.field });
        }
        let ty: DynkinType = raw.ty.parse().map_err(|e: mckay_roots::RootError| RepError::Invalid(e.to_string()))?;
        let quiver = framed_quiver(ty);
        let dims = match raw.dims {
            Some(d) => d,
            None => infer_dims(&quiver, &raw.mats)?,
        };
        let mut rep = Self::zero(ty, raw.n, &dims)?;
        for (key, rows) in raw.mats {
            let id: usize = key.parse().map_err(|_| RepError::Invalid(format!("bad arrow id {key:?}")))?;
            if id >= rep.mats.len() {
                return Err(RepError::Invalid(format!("arrow id {id} out of range")));
            }
            let (r, c) = rep.expected_shape(id);
            let mut entries = Vec::with_capacity(rows.len());
            for row in rows {
                let mut out = Vec::with_capacity(row.len());
                for e in row {
                    out.push(e.parse::<F>()?);
                }
                entries.push(out);
            }
            // a matrix with zero rows carries no column information
            let m = if r == 0 && entries.is_empty() {
                Matrix::zeros(0, c)
            } else {
                let cols = entries.first().map_or(0, |x| x.len());
                Matrix::from_rows(entries.len(), cols, entries).map_err(|e| RepError::Invalid(e.to_string()))?
            };
            rep.set(id, m)?;
        }
        Ok(rep)
    }
}

fn check_dims(ty: DynkinType, dims: &DimVector) -> Result<Vec<usize>, RepError> {
    let expected = ty.vertex_count() + 1;
    if dims.0.len() != expected {
        return Err(RepError::DimLength { expected, got: dims.0.len() });
    }
    if dims.0.iter().any(|&d| d < 0) {
        return Err(RepError::Invalid("negative dimension".into()));
    }
    Ok(dims.to_storage())
}

fn infer_dims(q: &DoubledQuiver, mats: &BTreeMap<String, Vec<Vec<Entry>>>) -> Result<DimVector, RepError> {
    let mut dims: Vec<Option<usize>> = vec![None; q.vertex_count()];
    let mut put = |v: usize, d: usize| -> Result<(), RepError> {
        match dims[v] {
            Some(old) if old != d => Err(RepError::Invalid(format!("inconsistent dimension at vertex {v}"))),
            _ => {
                dims[v] = Some(d);
                Ok(())
            }
        }
    };
    for (key, rows) in mats {
        let id: usize = key.parse().map_err(|_| RepError::Invalid(format!("bad arrow id {key:?}")))?;
        if id >= q.arrow_count() {
            return Err(RepError::Invalid(format!("arrow id {id} out of range")));
        }
        put(q.head_index(id), rows.len())?;
        if let Some(first) = rows.first() {
            put(q.tail_index(id), first.len())?;
        }
    }
    let r1 = q.vertex_count() - 1;
    let storage: Vec<usize> =
        dims.iter().enumerate().map(|(k, d)| d.unwrap_or(if k == r1 { 1 } else { 0 })).collect();
    Ok(DimVector::from_storage(&storage))
}

#[derive(Deserialize)]
struct RawRep {
    #[serde(rename = "type")]
    ty: String,
    n: usize,
    field: String,
    #[serde(default)]
    dims: Option<DimVector>,
    mats: BTreeMap<String, Vec<Vec<Entry>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn parse<F: Field>(&self) -> Result<F, RepError> {
        match self {
            Entry::Int(v) => Ok(F::from_i64(*v)),
            Entry::Text(s) => F::from_text(s).ok_or_else(|| RepError::Invalid(format!("bad entry {s:?}"))),
        }
    }
}

/// A representation over whichever field its JSON names.
#[derive(Debug, Clone)]
pub enum AnyRep {
    Q(FramedRep<Q>),
    F2(FramedRep<Fp<2>>),
    F3(FramedRep<Fp<3>>),
}

impl AnyRep {
    pub fn from_json(text: &str) -> Result<Self, RepError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| RepError::Invalid(e.to_string()))?;
        match value.get("field").and_then(|f| f.as_str()).unwrap_or("Q") {
            "Q" => FramedRep::from_json_value(&value).map(AnyRep::Q),
            "F2" => FramedRep::from_json_value(&value).map(AnyRep::F2),
            "F3" => FramedRep::from_json_value(&value).map(AnyRep::F3),
            other => Err(RepError::Invalid(format!("unsupported field {other:?}"))),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            AnyRep::Q(r) => r.to_json_value(),
            AnyRep::F2(r) => r.to_json_value(),
            AnyRep::F3(r) => r.to_json_value(),
        }
    }
}

/// A random invertible matrix with entries in -range..=range.
pub fn random_invertible<F: Field>(dim: usize, range: i64, rng: &mut impl Rng) -> Matrix<F> {
    loop {
        let m = Matrix::from_fn(dim, dim, |_, _| F::from_i64(rng.gen_range(-range..=range)));
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// Random gauge element: invertible at every ρ_k, identity at ∞.
pub fn random_gauge<F: Field>(rep: &FramedRep<F>, range: i64, rng: &mut impl Rng) -> Vec<Matrix<F>> {
    let inf = rep.infinity_index();
    rep.storage_dims()
        .iter()
        .enumerate()
        .map(|(k, &d)| if k == inf { Matrix::identity(d) } else { random_invertible(d, range, rng) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mckay_exact::q;

    #[test]
    fn shapes_and_json() {
        let ty = DynkinType::a(1);
        let dims = DimVector(vec![1, 1, 1]);
        let rep = FramedRep::<Q>::zero(ty, 1, &dims).unwrap();
        assert_eq!(rep.i().shape(), (1, 1));
        assert!(rep.clone().with(0, Matrix::zeros(2, 1)).is_err());
        let rep = rep.with(0, Matrix::from_rows(1, 1, vec![vec![q(3, 2)]]).unwrap()).unwrap();
        let v = rep.to_json_value();
        assert_eq!(v["mats"]["0"][0][0], "3/2");
        assert_eq!(v["field"], "Q");
        assert_eq!(FramedRep::<Q>::from_json_value(&v).unwrap(), rep);
        assert!(FramedRep::<Fp<2>>::from_json_value(&v).is_err());
    }

    #[test]
    fn infers_missing_dims() {
        let text = r#"{"type":"A1","n":1,"field":"F2","mats":{"4":[[1]],"0":[[1]]}}"#;
        match AnyRep::from_json(text).unwrap() {
            AnyRep::F2(r) => assert_eq!(r.dim(), DimVector(vec![1, 1, 1])),
            _ => panic!(),
        }
    }

    #[test]
    fn hilbert_vector() {
        assert_eq!(DimVector::hilbert("D4".parse().unwrap(), 2).0, vec![1, 2, 2, 4, 2, 2]);
    }
}
