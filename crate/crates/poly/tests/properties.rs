use mckay_exact::q;
use mckay_poly::groebner::{groebner_basis, reduce};
use mckay_poly::{parse_poly, Ideal, Mono, Poly, XY};
use proptest::prelude::*;

fn poly2() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..4, 0u32..4), -3i64..=3, 1i64..=2), 1..5).prop_map(|ts| {
        Poly::from_terms(2, ts.into_iter().map(|((a, b), n, d)| (Mono(vec![a, b]), q(n, d))))
    })
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = mf.lcm(mg);
    f.mul_term(&mf.quotient_of(&l), &(q(1, 1) / cf)).sub(&g.mul_term(&mg.quotient_of(&l), &(q(1, 1) / cg)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_roundtrip(p in poly2()) {
        let text = p.to_string_with(&XY);
        prop_assert_eq!(parse_poly(&text, &XY).unwrap(), p);
    }

    #[test]
    fn buchberger_criterion_holds(a in poly2(), b in poly2()) {
        let g = groebner_basis(&[a.clone(), b.clone()]);
        prop_assert!(reduce(&a, &g).is_zero());
        prop_assert!(reduce(&b, &g).is_zero());
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                prop_assert!(reduce(&s_poly(&g[i], &g[j]), &g).is_zero());
            }
        }
    }

    #[test]
    fn basis_ignores_generator_order(a in poly2(), b in poly2()) {
        let i1 = Ideal::new(2, vec![a.clone(), b.clone()]);
        let i2 = Ideal::new(2, vec![b.clone(), a.add(&b)]);
        prop_assert!(i1.same_ideal(&i2));
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(a in poly2(), b in poly2(), c in poly2()) {
        let i = Ideal::new(2, vec![a, Poly::monomial(&[3, 0]), Poly::monomial(&[0, 3])]);
        let nb = i.normal_form(&b);
        prop_assert_eq!(i.normal_form(&nb), nb.clone());
        prop_assert_eq!(i.normal_form(&b.add(&c)), nb.add(&i.normal_form(&c)));
    }
}
