use std::collections::BTreeMap;

use mckay_exact::{parse_rational, rational_to_string, Q};
use mckay_poly::poly::mono_to_string;
use mckay_poly::{parse_poly, Mono, Poly, UVW};
use mckay_roots::DynkinType;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::QuiverError;

/// Element α e₀ + β b + γ e_∞ of A₀ ≅ R₀ ⊕ R₀b ⊕ k e_∞, with α, β in
/// k[u,v,w] reduced modulo f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A0Element {
    pub alpha: Poly,
    pub beta: Poly,
    pub gamma: Q,
}

impl A0Element {
    pub fn new(alpha: Poly, beta: Poly, gamma: Q) -> Self {
        assert_eq!(alpha.nvars(), 3);
        assert_eq!(beta.nvars(), 3);
        A0Element { alpha, beta, gamma }
    }

    pub fn zero() -> Self {
        A0Element::new(Poly::zero(3), Poly::zero(3), Q::zero())
    }

    pub fn add(&self, o: &A0Element) -> A0Element {
        A0Element::new(self.alpha.add(&o.alpha), self.beta.add(&o.beta), &self.gamma + &o.gamma)
    }
}

/// e₀ + e_∞.
pub fn a0_identity() -> A0Element {
    A0Element::new(Poly::one(3), Poly::zero(3), Q::one())
}

/// Representative of p modulo uw − v^{r+1} with every v-exponent ≤ r.
pub fn r0_normal_form(p: &Poly, t: DynkinType) -> Result<Poly, QuiverError> {
    if !t.is_type_a() {
        return Err(QuiverError::UnsupportedType(t));
    }
    let m = t.rank() as u32 + 1;
    Ok(Poly::from_terms(
        3,
        p.terms().map(|(mono, c)| {
            let [a, b, w] = [mono.0[0], mono.0[1], mono.0[2]];
            let (q, s) = (b / m, b % m);
            (Mono(vec![a + q, s, w + q]), c.clone())
        }),
    ))
}

fn is_normal(p: &Poly, t: DynkinType) -> bool {
    p.terms().all(|(m, _)| m.0[1] <= t.rank() as u32)
}

/// (α₁,β₁,γ₁)(α₂,β₂,γ₂) = (α₁α₂, (α₁β₂ + β₁γ₂) b, γ₁γ₂ e_∞), renormalised.
pub fn a0_multiply(x: &A0Element, y: &A0Element, t: DynkinType) -> Result<A0Element, QuiverError> {
    if !t.is_type_a() {
        return Err(QuiverError::UnsupportedType(t));
    }
    for p in [&x.alpha, &x.beta, &y.alpha, &y.beta] {
        if !is_normal(p, t) {
            return Err(QuiverError::NotNormal(p.to_string_with(&UVW)));
        }
    }
    let alpha = r0_normal_form(&x.alpha.mul(&y.alpha), t)?;
    let beta = r0_normal_form(&x.alpha.mul(&y.beta).add(&x.beta.scale(&y.gamma)), t)?;
    Ok(A0Element::new(alpha, beta, &x.gamma * &y.gamma))
}

fn poly_to_map(p: &Poly) -> BTreeMap<String, String> {
    p.terms().map(|(m, c)| (mono_to_string(m, &UVW), rational_to_string(c))).collect()
}

fn map_to_poly(m: &BTreeMap<String, String>) -> Result<Poly, String> {
    let mut p = Poly::zero(3);
    for (k, v) in m {
        let mono = parse_poly(k, &UVW).map_err(|e| e.to_string())?;
        let c = parse_rational(v).ok_or_else(|| format!("bad coefficient {v:?}"))?;
        if mono.len() != 1 {
            return Err(format!("{k:?} is not a monomial"));
        }
        p = p.add(&mono.scale(&c));
    }
    Ok(p)
}

#[derive(Serialize, Deserialize)]
struct A0Json {
    alpha: BTreeMap<String, String>,
    beta: BTreeMap<String, String>,
    gamma: String,
}

impl Serialize for A0Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        A0Json { alpha: poly_to_map(&self.alpha), beta: poly_to_map(&self.beta), gamma: rational_to_string(&self.gamma) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for A0Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = A0Json::deserialize(d)?;
        Ok(A0Element::new(
            map_to_poly(&j.alpha).map_err(D::Error::custom)?,
            map_to_poly(&j.beta).map_err(D::Error::custom)?,
            parse_rational(&j.gamma).ok_or_else(|| D::Error::custom("bad gamma"))?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mckay_exact::q;

    fn p(s: &str) -> Poly {
        parse_poly(s, &UVW).unwrap()
    }

    #[test]
    fn normal_forms() {
        let a2 = DynkinType::a(2);
        assert_eq!(r0_normal_form(&p("v^3"), a2).unwrap(), p("u*w"));
        assert_eq!(r0_normal_form(&p("v^4"), a2).unwrap(), p("u*v*w"));
        assert!(r0_normal_form(&p("u*w - v^2"), DynkinType::a(1)).unwrap().is_zero());
        assert!(r0_normal_form(&p("v"), "D4".parse().unwrap()).is_err());
    }

    #[test]
    fn products() {
        let a2 = DynkinType::a(2);
        let x = A0Element::new(p("u"), p("1"), q(0, 1));
        let y = A0Element::new(Poly::zero(3), p("1"), q(1, 1));
        let z = a0_multiply(&x, &y, a2).unwrap();
        assert_eq!(z, A0Element::new(Poly::zero(3), p("u + 1"), q(0, 1)));
        let e0 = A0Element::new(p("1"), Poly::zero(3), q(0, 1));
        let g = A0Element::new(p("v^2"), p("w"), q(5, 1));
        assert_eq!(a0_multiply(&e0, &g, a2).unwrap(), A0Element::new(p("v^2"), p("w"), q(0, 1)));
        let vv = A0Element::new(p("v^2"), Poly::zero(3), q(0, 1));
        let v1 = A0Element::new(p("v"), Poly::zero(3), q(0, 1));
        assert_eq!(a0_multiply(&vv, &v1, a2).unwrap().alpha, p("u*w"));
    }

    #[test]
    fn json_shape() {
        let x = A0Element::new(p("u^2 - 1/2*v"), p("1"), q(3, 4));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"alpha":{"u^2":"1","v":"-1/2"},"beta":{"1":"1"},"gamma":"3/4"}"#);
        let back: A0Element = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
