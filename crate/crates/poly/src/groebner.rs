use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use mckay_exact::{Matrix, Q};
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::mono::Mono;
use crate::poly::Poly;

/// Fully reduce `f` modulo `basis` (any order of divisors; result is the
/// normal form when `basis` is a Gröbner basis).
pub fn reduce(f: &Poly, basis: &[Poly]) -> Poly {
    let nvars = f.nvars();
    let mut p = f.clone();
    let mut rem = Poly::zero(nvars);
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match basis.iter().find(|g| g.leading_mono().is_some_and(|lm| lm.divides(&m))) {
            Some(g) => {
                let (lm, lc) = g.leading().unwrap();
                let factor = lm.quotient_of(&m);
                p = p.sub(&g.mul_term(&factor, &(c / lc)));
            }
            None => {
                p = p.sub(&Poly::term(m.clone(), c.clone()));
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = mf.lcm(mg);
    f.mul_term(&mf.quotient_of(&l), &(Q::from_integer(1.into()) / cf))
        .sub(&g.mul_term(&mg.quotient_of(&l), &(Q::from_integer(1.into()) / cg)))
}

/// Reduced Gröbner basis (monic, sorted by decreasing leading monomial).
pub fn groebner_basis(gens: &[Poly]) -> Vec<Poly> {
    let mut g: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).map(Poly::monic).collect();
    if g.iter().any(|p| p.leading_mono().unwrap().is_one()) {
        let nvars = g[0].nvars();
        return vec![Poly::one(nvars)];
    }
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = lcm_of(&g, pairs[a]);
                let lb = lcm_of(&g, pairs[b]);
                la.cmp(&lb)
            })
            .unwrap();
        let (i, j) = pairs.remove(best).unwrap();
        let (li, lj) = (g[i].leading_mono().unwrap(), g[j].leading_mono().unwrap());
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        // chain criterion: some k with LM(g_k) | lcm and both (i,k), (j,k) already treated
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].leading_mono().unwrap().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let h = reduce(&s_polynomial(&g[i], &g[j]), &g);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.leading_mono().unwrap().is_one() {
            return vec![Poly::one(h.nvars())];
        }
        let k = g.len();
        g.push(h);
        for i in 0..k {
            pairs.push_back((i, k));
        }
    }
    interreduce(g)
}

fn lcm_of(g: &[Poly], (i, j): (usize, usize)) -> Mono {
    g[i].leading_mono().unwrap().lcm(g[j].leading_mono().unwrap())
}

fn interreduce(g: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Poly> = Vec::new();
    let mut sorted = g;
    sorted.sort_by(|a, b| a.leading_mono().cmp(&b.leading_mono()));
    for p in sorted {
        let lm = p.leading_mono().unwrap().clone();
        if minimal.iter().any(|q| q.leading_mono().unwrap().divides(&lm)) {
            continue;
        }
        minimal.push(p);
    }
    let mut out: Vec<Poly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
        let lead = Poly::term(minimal[k].leading_mono().unwrap().clone(), minimal[k].leading().unwrap().1.clone());
        let tail = reduce(&minimal[k].sub(&lead), &others);
        out.push(lead.add(&tail).monic());
    }
    out.sort_by(|a, b| b.leading_mono().cmp(&a.leading_mono()));
    out
}

/// Dimension of a quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Colength {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Colength::Finite(n) => s.serialize_u64(*n as u64),
            Colength::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Ideal of a polynomial ring with a lazily computed reduced Gröbner basis.
#[derive(Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal { nvars: self.nvars, gens: self.gens.clone(), gb }
    }
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Poly>) -> Self {
        assert!(gens.iter().all(|g| g.nvars() == nvars), "generator ring mismatch");
        Ideal { nvars, gens, gb: OnceLock::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn groebner(&self) -> &[Poly] {
        self.gb.get_or_init(|| groebner_basis(&self.gens))
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        reduce(p, self.groebner())
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (comparison of reduced Gröbner bases).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.groebner() == other.groebner()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().iter().any(|g| g.leading_mono().is_some_and(Mono::is_one))
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.groebner().iter().filter_map(|g| g.leading_mono().cloned()).collect()
    }

    /// Monomials outside the leading-term ideal, increasing; `None` if infinite.
    pub fn standard_monomials(&self) -> Option<Vec<Mono>> {
        if self.is_unit() {
            return Some(Vec::new());
        }
        let lms = self.leading_monomials();
        for v in 0..self.nvars {
            if !lms.iter().any(|m| m.pure_power_of() == Some(v)) {
                return None;
            }
        }
        let mut seen: BTreeSet<Mono> = BTreeSet::new();
        let mut queue = vec![Mono::one(self.nvars)];
        while let Some(m) = queue.pop() {
            if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
                continue;
            }
            for v in 0..self.nvars {
                queue.push(m.mul(&Mono::var(self.nvars, v)));
            }
            seen.insert(m);
        }
        Some(seen.into_iter().collect())
    }

    pub fn colength(&self) -> Colength {
        match self.standard_monomials() {
            Some(s) => Colength::Finite(s.len()),
            None => Colength::Infinite,
        }
    }

    /// Coordinates of the normal form of `p` in the standard monomial basis.
    pub fn coordinates(&self, p: &Poly, basis: &[Mono]) -> Vec<Q> {
        let nf = self.normal_form(p);
        let v: Vec<Q> = basis.iter().map(|m| nf.coeff(m)).collect();
        debug_assert_eq!(nf.len(), v.iter().filter(|c| !c.is_zero()).count());
        v
    }

    /// Matrix of multiplication by `p` on the quotient, in `basis` (columns are images).
    pub fn multiplication_matrix(&self, p: &Poly, basis: &[Mono]) -> Matrix<Q> {
        let cols: Vec<Vec<Q>> = basis
            .iter()
            .map(|m| self.coordinates(&p.mul(&Poly::term(m.clone(), Q::from_integer(1.into()))), basis))
            .collect();
        Matrix::from_columns(basis.len(), &cols)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in self.groebner() {
            for b in other.groebner() {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(self.nvars, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly_list;
    use crate::XY;

    fn ideal(s: &str) -> Ideal {
        Ideal::new(2, parse_poly_list(s, &XY).unwrap())
    }

    #[test]
    fn colengths() {
        assert_eq!(ideal("x^6, y").colength(), Colength::Finite(6));
        assert_eq!(ideal("x").colength(), Colength::Infinite);
        assert_eq!(ideal("x^2, x*y, y^2").colength(), Colength::Finite(3));
        assert_eq!(ideal("x*y - 1, x - y").colength(), Colength::Finite(2));
        assert_eq!(ideal("x - 1, x - 2").colength(), Colength::Finite(0));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let a = ideal("x^2 + y, y");
        let b = ideal("x^2, y + x^2");
        assert!(a.same_ideal(&b));
        let g: Vec<String> = a.groebner().iter().map(|p| p.to_string_with(&XY)).collect();
        assert_eq!(g, vec!["x^2", "y"]);
    }

    #[test]
    fn multiplication_matrices_commute() {
        let i = ideal("x^2 - 3*x + 2, y - x");
        let basis = i.standard_monomials().unwrap();
        let mx = i.multiplication_matrix(&Poly::var(2, 0), &basis);
        let my = i.multiplication_matrix(&Poly::var(2, 1), &basis);
        assert!(mx.commutes_with(&my));
        assert_eq!(mx.trace(), Q::from_integer(3.into()));
    }
}
