use mckay_exact::q;
use mckay_poly::{Ideal, Mono, Poly};
use mckay_quiver::*;
use mckay_roots::{build_mckay_graph, DynkinType};
use proptest::prelude::*;

#[test]
fn framing_adds_one_pair_and_one_vertex() {
    for t in DynkinType::all_up_to(8) {
        let d = double(&build_mckay_graph(t));
        assert!(d.check());
        assert_eq!(d.arrow_count(), 2 * build_mckay_graph(t).edge_count());
        let f = frame(&d).unwrap();
        assert!(f.check());
        assert_eq!(f.vertex_count(), d.vertex_count() + 1);
        assert_eq!(f.arrow_count(), d.arrow_count() + 2);
        assert_eq!(&f.arrows()[..d.arrow_count()], d.arrows());
        let eps = default_sign(&f);
        assert!(eps.is_valid_for(&f));
        assert_eq!(eps.get(f.framing_arrow().unwrap()), 1);
        for (a, b) in f.star_pairs() {
            assert_eq!(eps.get(a) * eps.get(b), -1);
        }
        let terms = preprojective_terms(&f, &eps);
        assert_eq!(terms.len(), t.vertex_count());
        let covered: usize = terms.iter().map(|t| t.summands.len()).sum();
        // every arrow except b* (head ∞) appears exactly once
        assert_eq!(covered, f.arrow_count() - 1);
        assert!(terms[0].summands.iter().any(|&(_, a, _)| Some(a) == f.framing_arrow()));
    }
}

fn poly3(max_v: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..max_v, 0u32..3), -3i64..=3), 0..4)
        .prop_map(|ts| Poly::from_terms(3, ts.into_iter().map(|((a, b, c), n)| (Mono(vec![a, b, c]), q(n, 1)))))
}

fn element(r: usize) -> impl Strategy<Value = A0Element> {
    let t = DynkinType::a(r);
    (poly3(r as u32 + 1), poly3(r as u32 + 1), -3i64..=3).prop_map(move |(a, b, g)| {
        A0Element::new(r0_normal_form(&a, t).unwrap(), r0_normal_form(&b, t).unwrap(), q(g, 1))
    })
}

fn f_ideal(r: usize) -> Ideal {
    let f = Poly::monomial(&[1, 0, 1]).sub(&Poly::monomial(&[0, r as u32 + 1, 0]));
    Ideal::new(3, vec![f])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn a0_associative((r, x, y, z) in (1usize..=4).prop_flat_map(|r| (Just(r), element(r), element(r), element(r)))) {
        let t = DynkinType::a(r);
        let left = a0_multiply(&a0_multiply(&x, &y, t).unwrap(), &z, t).unwrap();
        let right = a0_multiply(&x, &a0_multiply(&y, &z, t).unwrap(), t).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn a0_identity_two_sided((r, x) in (1usize..=4).prop_flat_map(|r| (Just(r), element(r)))) {
        let t = DynkinType::a(r);
        prop_assert_eq!(a0_multiply(&a0_identity(), &x, t).unwrap(), x.clone());
        prop_assert_eq!(a0_multiply(&x, &a0_identity(), t).unwrap(), x);
    }

    #[test]
    fn normal_form_laws(r in 1usize..=4, p in poly3(7), s in poly3(7)) {
        let t = DynkinType::a(r);
        let np = r0_normal_form(&p, t).unwrap();
        prop_assert_eq!(r0_normal_form(&np, t).unwrap(), np.clone());
        let ns = r0_normal_form(&s, t).unwrap();
        prop_assert_eq!(r0_normal_form(&p.mul(&s), t).unwrap(), r0_normal_form(&np.mul(&ns), t).unwrap());
        // agrees with division by the Gröbner basis {uw - v^{r+1}} (leading term v^{r+1})
        prop_assert_eq!(f_ideal(r).normal_form(&p), np.clone());
        prop_assert!(np.terms().all(|(m, _)| m.0[1] <= r as u32));
    }

    #[test]
    fn rewriting_order_is_irrelevant(r in 1usize..=3, p in poly3(9), pick in 0usize..1000) {
        // rewrite one occurrence of v^{r+1} at a time, choosing the term pseudo-randomly
        let t = DynkinType::a(r);
        let m = r as u32 + 1;
        let mut cur = p.clone();
        let mut k = pick;
        loop {
            let bad: Vec<(Mono, _)> = cur.terms().filter(|(mo, _)| mo.0[1] >= m).map(|(mo, c)| (mo.clone(), c.clone())).collect();
            if bad.is_empty() { break; }
            let (mo, c) = bad[k % bad.len()].clone();
            k = k.wrapping_mul(31).wrapping_add(7);
            let replaced = Mono(vec![mo.0[0] + 1, mo.0[1] - m, mo.0[2] + 1]);
            cur = cur.sub(&Poly::term(mo, c.clone())).add(&Poly::term(replaced, c));
        }
        prop_assert_eq!(cur, r0_normal_form(&p, t).unwrap());
    }
}
