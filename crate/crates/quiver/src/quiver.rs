use std::fmt;

use mckay_roots::McKayGraph;
use serde::{Deserialize, Serialize};

use crate::QuiverError;

/// A vertex; ∞ sorts before every ρ_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Infinity,
    Rho(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Infinity => write!(f, "inf"),
            Vertex::Rho(k) => write!(f, "rho{k}"),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            return Ok(Vertex::Infinity);
        }
        s.strip_prefix("rho")
            .and_then(|k| k.parse().ok())
            .map(Vertex::Rho)
            .ok_or_else(|| serde::de::Error::custom(format!("bad vertex {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: usize,
    pub tail: Vertex,
    pub head: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

/// A quiver with the involution a ↦ a*. Arrow ids are positions in `arrows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledQuiver {
    quiver: Quiver,
    star: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    id: usize,
    tail: Vertex,
    head: Vertex,
    star: usize,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<Vertex>,
    arrows: Vec<ArrowJson>,
}

impl Serialize for DoubledQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut vertices = self.quiver.vertices.clone();
        vertices.sort();
        QuiverJson {
            vertices,
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowJson { id: a.id, tail: a.tail, head: a.head, star: self.star[a.id] })
                .collect(),
        }
        .serialize(s)
    }
}

impl DoubledQuiver {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.quiver.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.quiver.arrows[id]
    }

    pub fn star(&self, id: usize) -> usize {
        self.star[id]
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn is_framed(&self) -> bool {
        self.quiver.vertices.contains(&Vertex::Infinity)
    }

    /// Number of McKay vertices ρ₀..ρ_r.
    pub fn rho_count(&self) -> usize {
        self.quiver.vertices.iter().filter(|v| matches!(v, Vertex::Rho(_))).count()
    }

    /// Storage index of a vertex: ρ_k ↦ k, ∞ ↦ r+1.
    pub fn index_of(&self, v: Vertex) -> usize {
        match v {
            Vertex::Rho(k) => k,
            Vertex::Infinity => self.rho_count(),
        }
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        if index < self.rho_count() {
            Vertex::Rho(index)
        } else {
            Vertex::Infinity
        }
    }

    pub fn tail_index(&self, id: usize) -> usize {
        self.index_of(self.arrow(id).tail)
    }

    pub fn head_index(&self, id: usize) -> usize {
        self.index_of(self.arrow(id).head)
    }

    /// The framing arrow b: ∞ → ρ₀, if framed.
    pub fn framing_arrow(&self) -> Option<usize> {
        self.arrows().iter().find(|a| a.tail == Vertex::Infinity).map(|a| a.id)
    }

    /// b*: ρ₀ → ∞, if framed.
    pub fn coframing_arrow(&self) -> Option<usize> {
        self.framing_arrow().map(|b| self.star(b))
    }

    /// Representatives of the star pairs (the lower id of each pair).
    pub fn star_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.arrow_count()).filter(|&a| a < self.star[a]).map(|a| (a, self.star[a])).collect()
    }

    pub fn check(&self) -> bool {
        let q = &self.quiver;
        q.arrows.iter().enumerate().all(|(i, a)| {
            let s = self.star[i];
            a.id == i
                && q.vertices.contains(&a.tail)
                && q.vertices.contains(&a.head)
                && s != i
                && self.star[s] == i
                && q.arrows[s].tail == a.head
                && q.arrows[s].head == a.tail
        })
    }
}

/// Replace each edge i–j (i<j, with multiplicity) by arrows 2e: i→j and
/// 2e+1: j→i, which are each other's star.
pub fn double(g: &McKayGraph) -> DoubledQuiver {
    let vertices: Vec<Vertex> = (0..g.vertex_count()).map(Vertex::Rho).collect();
    let mut arrows = Vec::new();
    let mut star = Vec::new();
    for (e, (i, j)) in g.edge_list().into_iter().enumerate() {
        arrows.push(Arrow { id: 2 * e, tail: Vertex::Rho(i), head: Vertex::Rho(j) });
        arrows.push(Arrow { id: 2 * e + 1, tail: Vertex::Rho(j), head: Vertex::Rho(i) });
        star.push(2 * e + 1);
        star.push(2 * e);
    }
    DoubledQuiver { quiver: Quiver { vertices, arrows }, star }
}

/// Add ∞ with b: ∞ → ρ₀ and b*: ρ₀ → ∞ (ids 2E and 2E+1).
pub fn frame(q: &DoubledQuiver) -> Result<DoubledQuiver, QuiverError> {
    if q.is_framed() {
        return Err(QuiverError::AlreadyFramed);
    }
    if !q.quiver.vertices.contains(&Vertex::Rho(0)) {
        return Err(QuiverError::NoExtendedVertex);
    }
    let mut out = q.clone();
    let b = out.quiver.arrows.len();
    out.quiver.vertices.push(Vertex::Infinity);
    out.quiver.arrows.push(Arrow { id: b, tail: Vertex::Infinity, head: Vertex::Rho(0) });
    out.quiver.arrows.push(Arrow { id: b + 1, tail: Vertex::Rho(0), head: Vertex::Infinity });
    out.star.push(b + 1);
    out.star.push(b);
    Ok(out)
}

/// ε: arrows → {±1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignFunction(pub Vec<i8>);

impl SignFunction {
    pub fn get(&self, id: usize) -> i8 {
        self.0[id]
    }

    pub fn is_valid_for(&self, q: &DoubledQuiver) -> bool {
        self.0.len() == q.arrow_count()
            && (0..q.arrow_count()).all(|a| self.0[a].abs() == 1 && self.0[a] == -self.0[q.star(a)])
    }
}

/// +1 on the arrow of each pair whose tail is the smaller vertex (∞ smallest).
pub fn default_sign(q: &DoubledQuiver) -> SignFunction {
    SignFunction(
        q.arrows()
            .iter()
            .map(|a| {
                let s = q.arrow(q.star(a.id));
                if a.tail < s.tail {
                    1
                } else {
                    -1
                }
            })
            .collect(),
    )
}

/// Σ ε(a) a a* over arrows with head ρ_k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreprojectiveTerm {
    pub vertex: usize,
    /// (ε(a), a, a*)
    pub summands: Vec<(i8, usize, usize)>,
}

pub fn preprojective_terms(q: &DoubledQuiver, eps: &SignFunction) -> Vec<PreprojectiveTerm> {
    (0..q.rho_count())
        .map(|k| PreprojectiveTerm {
            vertex: k,
            summands: q
                .arrows()
                .iter()
                .filter(|a| a.head == Vertex::Rho(k))
                .map(|a| (eps.get(a.id), a.id, q.star(a.id)))
                .collect(),
        })
        .collect()
}

/// Fixed orientation for type A: the x-arrow leaves ρ_k towards ρ_{k+1 mod r+1},
/// its star (the y-arrow) goes back; `sigma[k]` is ε of the x-arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeAOrientation {
    pub x_arrows: Vec<usize>,
    pub y_arrows: Vec<usize>,
    pub sigma: Vec<i8>,
}

impl TypeAOrientation {
    pub fn new(q: &DoubledQuiver) -> Result<Self, QuiverError> {
        let m = q.rho_count();
        if m < 2 {
            return Err(QuiverError::NotTypeA);
        }
        let mckay: Vec<&Arrow> =
            q.arrows().iter().filter(|a| a.tail != Vertex::Infinity && a.head != Vertex::Infinity).collect();
        if mckay.len() != 2 * m {
            return Err(QuiverError::NotTypeA);
        }
        let x_arrows: Vec<usize> = if m == 2 {
            // two edges between ρ₀ and ρ₁: use 0→1 from the first, 1→0 from the second
            let a = mckay.iter().find(|a| a.id == 0 && a.tail == Vertex::Rho(0) && a.head == Vertex::Rho(1));
            let b = mckay.iter().find(|a| a.id == 3 && a.tail == Vertex::Rho(1) && a.head == Vertex::Rho(0));
            match (a, b) {
                (Some(a), Some(b)) => vec![a.id, b.id],
                _ => return Err(QuiverError::NotTypeA),
            }
        } else {
            let mut xs = Vec::with_capacity(m);
            for k in 0..m {
                let cands: Vec<usize> = mckay
                    .iter()
                    .filter(|a| a.tail == Vertex::Rho(k) && a.head == Vertex::Rho((k + 1) % m))
                    .map(|a| a.id)
                    .collect();
                if cands.len() != 1 {
                    return Err(QuiverError::NotTypeA);
                }
                xs.push(cands[0]);
            }
            xs
        };
        let eps = default_sign(q);
        Ok(TypeAOrientation {
            y_arrows: x_arrows.iter().map(|&a| q.star(a)).collect(),
            sigma: x_arrows.iter().map(|&a| eps.get(a)).collect(),
            x_arrows,
        })
    }

    pub fn r(&self) -> usize {
        self.x_arrows.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mckay_roots::{build_mckay_graph, DynkinType};

    fn framed(t: &str) -> DoubledQuiver {
        frame(&double(&build_mckay_graph(t.parse::<DynkinType>().unwrap()))).unwrap()
    }

    #[test]
    fn counts() {
        let g = |t: &str| double(&build_mckay_graph(t.parse().unwrap()));
        assert_eq!(g("A1").arrow_count(), 4);
        assert_eq!(g("A2").arrow_count(), 6);
        assert_eq!(g("D5").arrow_count(), 10);
        let f = framed("A1");
        assert_eq!((f.vertex_count(), f.arrow_count()), (3, 6));
        let f = framed("D5");
        assert_eq!((f.vertex_count(), f.arrow_count()), (7, 12));
        assert_eq!(frame(&f), Err(QuiverError::AlreadyFramed));
    }

    #[test]
    fn signs() {
        let f = framed("A1");
        let eps = default_sign(&f);
        let b = f.framing_arrow().unwrap();
        assert_eq!(eps.get(b), 1);
        assert_eq!(eps.get(f.star(b)), -1);
        assert_eq!(eps.get(0), 1); // rho0 -> rho1
        assert!(eps.is_valid_for(&f));
    }

    #[test]
    fn terms() {
        let f = framed("A1");
        let terms = preprojective_terms(&f, &default_sign(&f));
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].summands.len(), 3);
        assert_eq!(terms[1].summands.len(), 2);
    }

    #[test]
    fn orientation_signs() {
        for r in 1..=5 {
            let f = framed(&format!("A{r}"));
            let o = TypeAOrientation::new(&f).unwrap();
            assert_eq!(o.r(), r);
            let neg = o.sigma.iter().filter(|&&s| s < 0).count();
            assert_eq!(neg, 1, "only the wrap-around edge is negative");
            assert_eq!(*o.sigma.last().unwrap(), -1);
        }
        assert!(TypeAOrientation::new(&framed("D4")).is_err());
    }
}
