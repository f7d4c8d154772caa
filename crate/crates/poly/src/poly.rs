use std::collections::BTreeMap;

use mckay_exact::{rational_to_string, Q};
use num_traits::{One, Signed, Zero};

use crate::mono::Mono;

/// Sparse polynomial; terms keyed by monomial in degrevlex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::term(Mono::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn term(m: Mono, c: Q) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn monomial(exps: &[u32]) -> Self {
        Self::term(Mono(exps.to_vec()), Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Mono::var(nvars, i), Q::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_mono(&self) -> Option<&Mono> {
        self.leading().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Mono::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_term(&self, m: &Mono, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Q::one() / c;
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    /// Keep only the terms satisfying `pred`.
    pub fn filter_terms(&self, mut pred: impl FnMut(&Mono) -> bool) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Rewrite every monomial through `f`, possibly into a different ring.
    pub fn map_monomials(&self, nvars: usize, mut f: impl FnMut(&Mono) -> Poly) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            out = out.add(&f(m).scale(c));
        }
        out
    }

    /// Substitute a polynomial (in some ring) for each variable.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, Poly::nvars);
        self.map_monomials(target, |m| {
            m.0.iter().zip(images).fold(Poly::one(target), |acc, (&e, p)| acc.mul(&p.pow(e)))
        })
    }

    /// Canonical text using the given variable names, terms in decreasing order.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert!(names.len() >= self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = mono_string(m, names);
            if mono.is_empty() {
                out.push_str(&rational_to_string(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rational_to_string(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

pub(crate) fn mono_string(m: &Mono, names: &[&str]) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e) })
        .collect();
    parts.join("*")
}

/// Text of a bare monomial ("1" for the unit).
pub fn mono_to_string(m: &Mono, names: &[&str]) -> String {
    let s = mono_string(m, names);
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::XY;
    use mckay_exact::q;

    #[test]
    fn formatting() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.pow(6).sub(&x.mul(&y).scale(&q(3, 2))).add(&Poly::constant(2, q(-1, 1)));
        assert_eq!(p.to_string_with(&XY), "x^6 - 3/2*x*y - 1");
        assert_eq!(y.neg().to_string_with(&XY), "-y");
        assert_eq!(Poly::zero(2).to_string_with(&XY), "0");
    }

    #[test]
    fn eval_and_substitute() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&y).sub(&Poly::one(2));
        assert_eq!(p.eval(&[q(2, 1), q(3, 1)]), q(5, 1));
        let s = p.substitute(&[y.clone(), x.clone()]);
        assert_eq!(s, p);
    }
}
