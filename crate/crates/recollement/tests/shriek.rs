use mckay_kleinian::{corpus, CorpusKind, rep_from_ideal, tau, GammaActionA, InvariantIdeal};
use mckay_recollement::*;

#[test]
fn corner_of_an_ideal_rep_is_its_invariant_quotient() {
    for e in corpus(&[1, 2, 3], 3) {
        let action = GammaActionA::new(e.ty).unwrap();
        let rep = rep_from_ideal(&e.ideal, &action).unwrap();
        let corner = restrict_to_corner(&rep).unwrap();
        let direct = a0_module_from_invariant_ideal(&tau(&e.ideal, &action).unwrap(), Some(e.n)).unwrap();
        assert!(direct.is_infty_generated());
        assert_eq!(corner.krylov_form(), direct.krylov_form(), "{}", e.label);
    }
}

#[test]
fn shriek_over_the_corpus() {
    for e in corpus(&[1, 2], 2) {
        let action = GammaActionA::new(e.ty).unwrap();
        let n = a0_module_from_invariant_ideal(&tau(&e.ideal, &action).unwrap(), Some(e.n)).unwrap();
        let res = shriek_with_defaults(&n).unwrap();
        assert!(res.certified, "{}", e.label);
        let report = verify_shriek_lemma(&res, &n).unwrap();
        assert!(report.passed(), "{}: {report:?}", e.label);
        // over distinct free orbits j_!(N) is the ideal representation itself
        if e.kind == CorpusKind::Orbits {
            assert!(report.ndelta_bounds.iter().all(|&b| b), "{}", e.label);
            let rep = rep_from_ideal(&e.ideal, &action).unwrap();
            assert_eq!(report.dims, rep.dim(), "{}", e.label);
        }
    }
}

#[test]
fn a2_punctual_dimensions() {
    let j = InvariantIdeal::parse("A2".parse().unwrap(), "u^2, v, w").unwrap();
    let n = a0_module_from_invariant_ideal(&j, Some(2)).unwrap();
    let res = shriek_with_defaults(&n).unwrap();
    assert_eq!(res.dims().0, vec![1, 2, 3, 3]);
    let report = verify_shriek_lemma(&res, &n).unwrap();
    assert!(report.passed());
    assert_eq!(report.ndelta_bounds, vec![true, false, false]);
}

#[test]
fn json_shape() {
    let j = InvariantIdeal::parse("A1".parse().unwrap(), "u, v, w").unwrap();
    let n = a0_module_from_invariant_ideal(&j, Some(1)).unwrap();
    let res = shriek_with_defaults(&n).unwrap();
    let v = serde_json::to_value(&res).unwrap();
    assert_eq!(v["type"], "A1");
    assert_eq!(v["certified"], true);
    // M₁ ⊗ k = span{x, y}
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2]));
    assert!(v["module"]["mats"].is_object());
    let n_json = serde_json::to_value(&n).unwrap();
    assert_eq!(n_json["b"][0], serde_json::json!([["0"]]));
}

#[test]
fn rejects_ungenerated_and_other_types() {
    use mckay_exact::{Matrix, Q};
    let z = Matrix::<Q>::zeros(2, 2);
    let m = A0Module::new("A2".parse().unwrap(), [z.clone(), z.clone(), z], Matrix::from_i64_rows(&[&[1], &[0]])).unwrap();
    assert_eq!(shriek_with_defaults(&m).unwrap_err(), RecollementError::NotGenerated);
    let z = Matrix::<Q>::zeros(1, 1);
    assert!(matches!(
        A0Module::new("D4".parse().unwrap(), [z.clone(), z.clone(), z], Matrix::from_i64_rows(&[&[1]])),
        Err(RecollementError::UnsupportedType(_))
    ));
}

/// The truncations are not monotone in degree: relations between two
/// factorizations of a new top-degree monomial can cut down old symbols.
#[test]
fn truncation_history_is_recorded() {
    let j = InvariantIdeal::maximal("A2".parse().unwrap(), &[mckay_exact::q(1, 1), mckay_exact::q(1, 1), mckay_exact::q(1, 1)]).unwrap();
    let n = a0_module_from_invariant_ideal(&j, Some(1)).unwrap();
    let res = shriek_with_defaults(&n).unwrap();
    let history: Vec<Vec<i64>> = res.dims_by_degree.iter().map(|d| d.0.clone()).collect();
    assert_eq!(history[..5], [vec![1, 1, 0, 0], vec![1, 1, 1, 1], vec![1, 1, 2, 2], vec![1, 1, 2, 2], vec![1, 1, 1, 1]]);
    assert!(!res.monotone_until_stable());
    assert_eq!(res.degree_reached, 8);
}
