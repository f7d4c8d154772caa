use mckay_exact::{q, Q};
use mckay_kleinian::*;
use mckay_poly::{Colength, Mono, Poly};
use mckay_quiver::default_sign;
use mckay_reps::{check_preprojective, is_semistable_theta_i, is_stable_cplus, lemma_j_zero_check};
use proptest::prelude::*;

/// Nonempty subsets of 0..n.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n)).map(|mask| (0..n).filter(|&k| mask >> k & 1 == 1).collect()).collect()
}

/// Number of m-tuples of partitions of total size n: coefficient of q^n in P(q)^m.
fn multipartitions(m: usize, n: usize) -> usize {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    let mut out = vec![0usize; n + 1];
    out[0] = 1;
    for _ in 0..m {
        let mut next = vec![0usize; n + 1];
        for a in 0..=n {
            for b in 0..=n - a {
                next[a + b] += out[a] * p[b];
            }
        }
        out = next;
    }
    out[n]
}

fn full_corpus() -> Vec<CorpusEntry> {
    corpus(&[1, 2, 3], 3)
}

#[test]
fn corpus_is_large_and_well_formed() {
    let c = full_corpus();
    assert!(c.len() >= 50, "{}", c.len());
    for kind in [CorpusKind::Monomial, CorpusKind::Orbits, CorpusKind::Mixed] {
        assert!(c.iter().any(|e| e.kind == kind));
    }
    for e in &c {
        let action = GammaActionA::new(e.ty).unwrap();
        assert!(action.is_invariant(&e.ideal), "{}", e.label);
        assert_eq!(isotypic_dims(&e.ideal, &action).unwrap().0, vec![e.n; e.ty.vertex_count()], "{}", e.label);
        assert_eq!(colength(&e.ideal), Colength::Finite(e.n * action.order()));
    }
}

#[test]
fn reps_from_ideals_are_stable_points_of_the_zero_fibre() {
    for e in full_corpus() {
        let action = GammaActionA::new(e.ty).unwrap();
        let rep = rep_from_ideal(&e.ideal, &action).unwrap();
        let eps = default_sign(rep.quiver());
        assert!(check_preprojective(&rep, &eps).unwrap(), "{}", e.label);
        assert!(rep.j().is_zero());
        assert!(is_stable_cplus(&rep).unwrap(), "{}", e.label);
        assert!(lemma_j_zero_check(&rep, &eps).unwrap());
        for set in subsets(e.ty.vertex_count()) {
            assert!(is_semistable_theta_i(&rep, &set).unwrap());
        }
    }
}

/// τ(I) ⊆ I ∩ k[x,y]^Γ, and both have colength n, so they agree.
#[test]
fn tau_is_the_invariant_part() {
    for e in full_corpus() {
        let action = GammaActionA::new(e.ty).unwrap();
        let t = tau(&e.ideal, &action).unwrap();
        assert_eq!(t.colength(), Colength::Finite(e.n), "{}", e.label);
        for g in t.generators() {
            assert!(e.ideal.ideal().contains(&action.to_xy(g)), "{}", e.label);
        }
        // dim (k[x,y]/I)^Γ = d₀ = n independently of τ
        assert_eq!(isotypic_dims(&e.ideal, &action).unwrap().0[0], e.n);
    }
}

#[test]
fn tau_ignores_the_choice_of_generators() {
    for e in corpus(&[1, 2], 2) {
        let action = GammaActionA::new(e.ty).unwrap();
        let gb = e.ideal.ideal().groebner().to_vec();
        // rescale, add a weight-compatible multiple of another generator, add a redundant element
        let mut gens: Vec<Poly> = gb.iter().enumerate().map(|(k, g)| g.scale(&q(k as i64 + 2, 3))).collect();
        if gb.len() >= 2 {
            let (w0, w1) = (action.weight(gb[0].leading_mono().unwrap()), action.weight(gb[1].leading_mono().unwrap()));
            let shift = (w0 + action.order() - w1) % action.order();
            let mult = Poly::term(Mono(vec![shift as u32, 0]), q(5, 1));
            gens[0] = gens[0].add(&gb[1].mul(&mult));
        }
        gens.push(gb[0].mul(&Poly::monomial(&[1, 1])));
        let other = PolyIdeal::new(gens);
        assert!(other.same_ideal(&e.ideal));
        assert!(tau(&other, &action).unwrap().same_ideal(&tau(&e.ideal, &action).unwrap()), "{}", e.label);
    }
}

fn expected_cycle(action: &GammaActionA, e: &CorpusEntry) -> Vec<HilbertChowPoint> {
    let mut pts: Vec<HilbertChowPoint> = e
        .orbits
        .iter()
        .map(|(a, b)| HilbertChowPoint { point: orbit_image(action, a, b), multiplicity: 1 })
        .collect();
    if e.punctual > 0 {
        pts.push(HilbertChowPoint { point: [q(0, 1), q(0, 1), q(0, 1)], multiplicity: e.punctual });
    }
    pts.sort();
    pts
}

#[test]
fn hilbert_chow_recovers_orbit_images() {
    for e in corpus(&[1, 2, 3], 3) {
        let action = GammaActionA::new(e.ty).unwrap();
        let got = hilbert_chow(&e.ideal, &action).unwrap();
        assert_eq!(got, expected_cycle(&action, &e), "{}", e.label);
        assert!(got.iter().all(|p| p.on_surface(action.r)));
        assert_eq!(got.iter().map(|p| p.multiplicity).sum::<usize>(), e.n);
    }
}

#[test]
fn full_module_cross_check_in_type_a1() {
    let action = GammaActionA { r: 1 };
    for e in corpus(&[1], 3) {
        assert_eq!(hilbert_chow_full_module(&e.ideal, &action).unwrap(), hilbert_chow(&e.ideal, &action).unwrap());
    }
    // A₂ orbits have eigenvalues ζa outside Q
    let a2 = GammaActionA { r: 2 };
    let i = orbit_ideal(&a2, &q(1, 1), &q(1, 1)).unwrap();
    assert!(matches!(hilbert_chow_full_module(&i, &a2), Err(KleinianError::Eigen(_))));
}

#[test]
fn a1_orbit_points_lie_on_the_ideal() {
    let action = GammaActionA { r: 1 };
    let i = orbit_ideal(&action, &q(3, 2), &q(-2, 5)).unwrap();
    for g in i.generators() {
        assert_eq!(g.eval(&[q(3, 2), q(-2, 5)]), q(0, 1));
        assert_eq!(g.eval(&[q(-3, 2), q(2, 5)]), q(0, 1));
    }
}

#[test]
fn monomial_corpus_counts() {
    // balanced staircases are the partitions with empty (r+1)-core, counted
    // by (r+1)-multipartitions of n
    for r in 1..=3 {
        let action = GammaActionA { r };
        for n in 1..=3 {
            assert_eq!(balanced_partitions(&action, n).len(), multipartitions(r + 1, n), "r={r} n={n}");
            for rows in balanced_partitions(&action, n) {
                let dims = isotypic_dims(&monomial_ideal(&rows), &action).unwrap();
                assert_eq!(dims.0, vec![n; r + 1]);
            }
        }
    }
}

#[test]
fn ideal_json_is_a_list_of_strings() {
    let i = PolyIdeal::parse("x^6, y").unwrap();
    let a = GammaActionA { r: 2 };
    assert_eq!(serde_json::to_value(&i).unwrap(), serde_json::json!(["x^6", "y"]));
    assert_eq!(serde_json::to_value(tau(&i, &a).unwrap()).unwrap(), serde_json::json!(["u^2", "v", "w"]));
}

#[test]
fn a0_matrices_of_example() {
    let j = InvariantIdeal::parse("A2".parse().unwrap(), "u^2, v, w").unwrap();
    let (basis, [bu, bv, bw]) = j.multiplication_matrices().unwrap();
    assert_eq!(basis.len(), 2);
    assert_eq!(bu, mckay_exact::Matrix::from_i64_rows(&[&[0, 0], &[1, 0]]));
    assert!(bv.is_zero() && bw.is_zero());
    let m = InvariantIdeal::maximal("A1".parse().unwrap(), &[q(1, 1), q(1, 1), q(1, 1)]).unwrap();
    assert_eq!(m.colength(), Colength::Finite(1));
    assert!(InvariantIdeal::maximal("A1".parse().unwrap(), &[q(1, 1), q(2, 1), q(1, 1)]).unwrap().colength()
        == Colength::Finite(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tau_of_an_orbit_is_the_maximal_ideal_of_its_image(
        r in 1usize..=3, a in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        b in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), d in 1i64..4) {
        let action = GammaActionA { r };
        let (a, b): (Q, Q) = (q(a, d), q(b, 1));
        let i = orbit_ideal(&action, &a, &b).unwrap();
        let t = tau(&i, &action).unwrap();
        let expected = InvariantIdeal::maximal(action.ty(), &orbit_image(&action, &a, &b)).unwrap();
        prop_assert!(t.same_ideal(&expected));
        let hc = hilbert_chow(&i, &action).unwrap();
        prop_assert_eq!(hc.len(), 1);
        prop_assert!(hc[0].on_surface(r));
    }
}
