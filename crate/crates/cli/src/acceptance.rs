//! The acceptance criteria as deterministic checks. Each returns a verdict
//! and a one-line detail built only from exact counts, so two runs with the
//! same seed print the same bytes.

use std::collections::BTreeSet;

use mckay_exact::{q, Fp, Matrix, Q};
use mckay_kleinian::{
    corpus, hilbert_chow, isotypic_dims, orbit_image, rep_from_ideal, tau, CorpusKind, GammaActionA, HilbertChowPoint,
    InvariantIdeal, PolyIdeal,
};
use mckay_poly::Colength;
use mckay_quiver::default_sign;
use mckay_recollement::{a0_module_from_invariant_ideal, shriek_with_defaults, verify_shriek_lemma};
use mckay_reps::{
    check_preprojective, is_semistable_bruteforce, is_semistable_theta_i, is_stable_cplus, moment_map,
    framed_quiver, DimVector, FramedRep,
};
use mckay_roots::{build_mckay_graph, cartan_matrix, delta, positive_roots, DynkinType, Family};
use mckay_theta::{arrangement, count_chambers, in_cminus, in_cplus, namikawa_generators, namikawa_order, sign_vector, Sign, ThetaParam};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        json!({"id": self.id, "title": self.title, "passed": self.passed, "detail": self.detail})
    }

    pub fn line(&self) -> String {
        format!("criterion {:>2} [{}] {}: {}", self.id, if self.passed { "PASS" } else { "FAIL" }, self.title, self.detail)
    }
}

fn outcome(id: u8, title: &'static str, checks: Result<String, String>) -> Outcome {
    match checks {
        Ok(detail) => Outcome { id, title, passed: true, detail },
        Err(detail) => Outcome { id, title, passed: false, detail },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn supported_types() -> Vec<DynkinType> {
    let mut v: Vec<DynkinType> = (1..=6).map(DynkinType::a).collect();
    v.extend(["D4", "D5", "D6", "E6", "E7", "E8"].iter().map(|s| s.parse::<DynkinType>().expect("valid")));
    v
}

/// Group orders as tabulated: r+1, 4(r−2), 24, 48, 120.
fn tabulated_order(t: DynkinType) -> i64 {
    let r = t.rank() as i64;
    match (t.family(), r) {
        (Family::A, _) => r + 1,
        (Family::D, _) => 4 * (r - 2),
        (Family::E, 6) => 24,
        (Family::E, 7) => 48,
        _ => 120,
    }
}

pub fn criterion_1() -> Outcome {
    let run = || -> Result<String, String> {
        let types = supported_types();
        for &t in &types {
            let g = build_mckay_graph(t);
            let d = delta(t);
            ensure(cartan_matrix(&g).apply(&d).iter().all(|&x| x == 0), || format!("{t}: C delta != 0"))?;
            ensure(g.dims_relation_holds(), || format!("{t}: 2 dim rho_i != sum over neighbours"))?;
            let squares: i64 = d.iter().map(|x| x * x).sum();
            ensure(squares == tabulated_order(t), || format!("{t}: sum of squares {squares} != {}", tabulated_order(t)))?;
        }
        Ok(format!("{} types", types.len()))
    };
    outcome(1, "root data", run())
}

pub fn criterion_2() -> Outcome {
    let run = || -> Result<String, String> {
        let mut cases: Vec<(DynkinType, usize)> = (1..=6).map(|r| (DynkinType::a(r), r * (r + 1) / 2)).collect();
        cases.push(("D4".parse().expect("valid"), 12));
        cases.push(("E6".parse().expect("valid"), 36));
        let mut seen = Vec::new();
        for (t, expected) in cases {
            let got = positive_roots(t).len();
            ensure(got == expected, || format!("{t}: {got} positive roots, expected {expected}"))?;
            seen.push(format!("{t}:{got}"));
        }
        Ok(seen.join(" "))
    };
    outcome(2, "positive root counts", run())
}

fn to_signs(v: &[Sign]) -> Vec<i8> {
    v.iter().map(|s| match s {
        Sign::Pos => 1,
        Sign::Neg => -1,
        Sign::Zero => 0,
    }).collect()
}

pub fn criterion_3() -> Outcome {
    let run = || -> Result<String, String> {
        let t = DynkinType::a(1);
        let arr = arrangement(t, 2).map_err(|e| e.to_string())?;
        // δ = ρ₀ + ρ₁ in coordinates (θ₀, θ₁)
        let got: BTreeSet<Vec<i64>> = arr.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        let want: BTreeSet<Vec<i64>> = [vec![1, 1], vec![0, 1], vec![1, 0], vec![1, 2]].into_iter().collect();
        ensure(got == want, || format!("hyperplanes {got:?}"))?;
        let c = count_chambers(t, 2).map_err(|e| e.to_string())?;
        let w = namikawa_order(t).map_err(|e| e.to_string())? as usize;
        ensure(c.total == 8, || format!("{} chambers", c.total))?;
        ensure(w == 4, || format!("|W| = {w}"))?;
        ensure(c.in_f == 2, || format!("{} chambers in F", c.in_f))?;
        ensure(c.total == w * c.in_f, || "count != |W| x 2".into())?;
        let plus = ThetaParam::from_ints(&[1, 1]);
        let minus = ThetaParam::from_ints(&[-2, 3]);
        ensure(in_cplus(&plus) && in_cminus(&minus, t, 2) && !in_cplus(&minus) && !in_cminus(&plus, t, 2), || {
            "sample points not in C+ / C-".into()
        })?;
        let sp = to_signs(&sign_vector(&plus, &arr).map_err(|e| e.to_string())?);
        let sm = to_signs(&sign_vector(&minus, &arr).map_err(|e| e.to_string())?);
        let walls = [arr.delta_index(), arr.simple_index(1)];
        let in_f: BTreeSet<&Vec<i8>> = c.chambers.iter().filter(|s| walls.iter().all(|&k| s[k] > 0)).collect();
        ensure(in_f == [&sp, &sm].into_iter().collect(), || "chambers in F are not C+ and C-".into())?;
        Ok(format!("4 hyperplanes, {} chambers, |W| = {w}, {} in F", c.total, c.in_f))
    };
    outcome(3, "A1 n=2 arrangement", run())
}

pub fn criterion_4() -> Outcome {
    let cases = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)];
    let results: Vec<Result<String, String>> = cases
        .par_iter()
        .map(|&(r, n)| {
            let t = DynkinType::a(r);
            let c = count_chambers(t, n).map_err(|e| e.to_string())?;
            let w = namikawa_order(t).map_err(|e| e.to_string())? as usize;
            ensure(c.total == w * c.in_f, || format!("A{r} n={n}: {} != {w} x {}", c.total, c.in_f))?;
            Ok(format!("A{r},{n}:{}={w}x{}", c.total, c.in_f))
        })
        .collect();
    let run = || -> Result<String, String> { Ok(results.into_iter().collect::<Result<Vec<_>, _>>()?.join(" ")) };
    outcome(4, "fundamental domain identity", run())
}

pub fn criterion_5() -> Outcome {
    let results: Vec<Result<usize, String>> = supported_types()
        .par_iter()
        .map(|&t| {
            let gens = namikawa_generators(t);
            for g in &gens {
                ensure(g.compose(g).is_identity(), || format!("{t}: generator {:?} is not an involution", g.word))?;
            }
            let mut checked = 0;
            for n in 1..=3 {
                let arr = arrangement(t, n).map_err(|e| e.to_string())?;
                let orig: BTreeSet<Vec<i64>> = arr.hyperplanes.iter().map(|h| h.normal.clone()).collect();
                for g in &gens {
                    let img: BTreeSet<Vec<i64>> = arr.hyperplanes.iter().map(|h| g.map_hyperplane(&h.normal, t)).collect();
                    ensure(img == orig, || format!("{t} n={n}: {:?} moves the arrangement", g.word))?;
                    checked += 1;
                }
            }
            Ok(checked)
        })
        .collect();
    let run = || -> Result<String, String> {
        let total: usize = results.into_iter().collect::<Result<Vec<_>, _>>()?.iter().sum();
        Ok(format!("{total} (generator, n) pairs over {} types", supported_types().len()))
    };
    outcome(5, "Namikawa generators", run())
}

pub fn criterion_6(seed: u64) -> Outcome {
    let run = || -> Result<String, String> {
        let (mut total, mut nonzero) = (0, 0);
        for r in 1..=3 {
            let t = DynkinType::a(r);
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r as u64));
            let eps = default_sign(&framed_quiver(t));
            for k in 0..1000 {
                let n = 1 + k % 2;
                let rep = FramedRep::<Q>::random(t, n, &DimVector::hilbert(t, n), 3, &mut rng).map_err(|e| e.to_string())?;
                let mu = moment_map(&rep, &eps).map_err(|e| e.to_string())?;
                let tr_ij = rep.i().mul(rep.j()).trace();
                ensure(mu.trace_sum() == tr_ij, || format!("A{r} sample {k}"))?;
                nonzero += usize::from(!tr_ij.is_zero());
                total += 1;
            }
        }
        Ok(format!("{total} random reps, {nonzero} with Tr(ij) != 0"))
    };
    outcome(6, "moment map trace identity", run())
}

pub fn criterion_7() -> Outcome {
    let entries = corpus(&[1, 2, 3], 3);
    let results: Vec<Result<(), String>> = entries
        .par_iter()
        .map(|e| {
            let action = GammaActionA::new(e.ty).map_err(|x| x.to_string())?;
            let rep = rep_from_ideal(&e.ideal, &action).map_err(|x| x.to_string())?;
            let mu_zero = check_preprojective(&rep, &default_sign(rep.quiver())).map_err(|x| x.to_string())?;
            let stable = is_stable_cplus(&rep).map_err(|x| x.to_string())?;
            ensure(mu_zero && rep.j().is_zero() && stable, || format!("{} {}", e.ty, e.label))
        })
        .collect();
    let run = || -> Result<String, String> {
        ensure(entries.len() >= 50, || format!("corpus has {} ideals", entries.len()))?;
        for kind in [CorpusKind::Monomial, CorpusKind::Orbits, CorpusKind::Mixed] {
            ensure(entries.iter().any(|e| e.kind == kind), || format!("no {kind:?} ideals"))?;
        }
        results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(format!("{} ideals", entries.len()))
    };
    outcome(7, "j = 0 harness", run())
}

/// Decode `code` into the entries of a framed F₂ representation of shape `dims`.
fn f2_rep(t: DynkinType, dims: &DimVector, mut code: u64) -> FramedRep<Fp<2>> {
    let zero = FramedRep::<Fp<2>>::zero(t, 1, dims).expect("valid shape");
    let mut mats: Vec<Matrix<Fp<2>>> = zero.mats().to_vec();
    for m in mats.iter_mut() {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m[(i, j)] = Fp::new((code & 1) as i64);
                code >>= 1;
            }
        }
    }
    FramedRep::new(t, 1, dims, mats).expect("valid shape")
}

fn slot_count(t: DynkinType, dims: &DimVector) -> u32 {
    let zero = FramedRep::<Fp<2>>::zero(t, 1, dims).expect("valid shape");
    zero.mats().iter().map(|m| (m.rows() * m.cols()) as u32).sum()
}

/// Framed A₁ shapes (1, a, b) with 1 + a + b ≤ 6: every representation when
/// there are at most 2^12, otherwise a seeded sample of 64.
pub fn criterion_8(seed: u64) -> Outcome {
    let t = DynkinType::a(1);
    let shapes: Vec<DimVector> =
        (0..=5i64).flat_map(|a| (0..=5 - a).map(move |b| DimVector(vec![1, a, b]))).collect();
    let plus = [ThetaParam::from_ints(&[1, 1]), ThetaParam::from_ints(&[3, 1]), ThetaParam::from_ints(&[1, 5])];
    let sets: [&[usize]; 3] = [&[0], &[1], &[0, 1]];
    let results: Vec<Result<usize, String>> = shapes
        .par_iter()
        .enumerate()
        .map(|(k, dims)| {
            let slots = slot_count(t, dims);
            let codes: Vec<u64> = if slots <= 12 {
                (0..1u64 << slots).collect()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31).wrapping_add(k as u64));
                (0..64).map(|_| rng.gen_range(0..1u64 << slots)).collect()
            };
            let err = |e: mckay_reps::RepError| e.to_string();
            for &code in &codes {
                let rep = f2_rep(t, dims, code);
                let stable = is_stable_cplus(&rep).map_err(err)?;
                for th in &plus {
                    ensure(is_semistable_bruteforce(&rep, th).map_err(err)? == stable, || format!("{dims} code {code}: C+"))?;
                }
                for set in sets {
                    let th = mckay_theta::theta_i(t, set).map_err(|e| e.to_string())?;
                    ensure(
                        is_semistable_bruteforce(&rep, &th).map_err(err)? == is_semistable_theta_i(&rep, set).map_err(err)?,
                        || format!("{dims} code {code}: thetaI {set:?}"),
                    )?;
                }
                ensure(is_semistable_bruteforce(&rep, &ThetaParam::zero(t)).map_err(err)?, || format!("{dims}: zero"))?;
            }
            Ok(codes.len())
        })
        .collect();
    let run = || -> Result<String, String> {
        let total: usize = results.into_iter().collect::<Result<Vec<_>, _>>()?.iter().sum();
        ensure(total >= 200, || format!("only {total} instances"))?;
        Ok(format!("{total} reps over {} shapes", shapes.len()))
    };
    outcome(8, "stability oracle agreement over F2", run())
}

pub fn criterion_9() -> Outcome {
    let run = || -> Result<String, String> {
        let action = GammaActionA { r: 2 };
        let i = PolyIdeal::parse("x^6, y").map_err(|e| e.to_string())?;
        let dims = isotypic_dims(&i, &action).map_err(|e| e.to_string())?;
        ensure(dims.0 == vec![2, 2, 2], || format!("isotypic dims {:?}", dims.0))?;
        let t = tau(&i, &action).map_err(|e| e.to_string())?;
        let want = InvariantIdeal::parse(action.ty(), "u^2, v, w").map_err(|e| e.to_string())?;
        ensure(t.same_ideal(&want), || format!("tau = {t}"))?;
        ensure(t.colength() == Colength::Finite(2), || format!("colength {:?}", t.colength()))?;
        Ok(format!("tau = <{t}>, colength 2"))
    };
    outcome(9, "tau of <x^6, y>", run())
}

pub fn criterion_10() -> Outcome {
    let entries = corpus(&[1, 2, 3], 3);
    let results: Vec<Result<(), String>> = entries
        .par_iter()
        .map(|e| {
            let action = GammaActionA::new(e.ty).map_err(|x| x.to_string())?;
            let t = tau(&e.ideal, &action).map_err(|x| x.to_string())?;
            ensure(t.colength() == Colength::Finite(e.n), || format!("{} {}: {:?}", e.ty, e.label, t.colength()))
        })
        .collect();
    let run = || -> Result<String, String> {
        results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(format!("{} ideals", entries.len()))
    };
    outcome(10, "tau colength law", run())
}

pub fn criterion_11() -> Outcome {
    let entries: Vec<_> = corpus(&[1, 2], 3).into_iter().filter(|e| e.kind == CorpusKind::Orbits).collect();
    let results: Vec<Result<(), String>> = entries
        .par_iter()
        .map(|e| {
            let action = GammaActionA::new(e.ty).map_err(|x| x.to_string())?;
            let mut want: Vec<HilbertChowPoint> = e
                .orbits
                .iter()
                .map(|(a, b)| HilbertChowPoint { point: orbit_image(&action, a, b), multiplicity: 1 })
                .collect();
            want.sort();
            let got = hilbert_chow(&e.ideal, &action).map_err(|x| x.to_string())?;
            ensure(got == want, || format!("{} {}", e.ty, e.label))?;
            ensure(got.iter().all(|p| p.on_surface(action.r)), || format!("{} {}: off the surface", e.ty, e.label))
        })
        .collect();
    let run = || -> Result<String, String> {
        results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(format!("{} orbit ideals", entries.len()))
    };
    outcome(11, "Hilbert-Chow on free orbits", run())
}

pub fn criterion_12() -> Outcome {
    let run = || -> Result<String, String> {
        let one = q(1, 1);
        let inputs = [
            (InvariantIdeal::maximal(DynkinType::a(1), &[one.clone(), one.clone(), one]), 1usize),
            (InvariantIdeal::parse(DynkinType::a(2), "u^2, v, w"), 2),
        ];
        let mut seen = Vec::new();
        for (j, n) in inputs {
            let j = j.map_err(|e| e.to_string())?;
            let module = a0_module_from_invariant_ideal(&j, Some(n)).map_err(|e| e.to_string())?;
            let res = shriek_with_defaults(&module).map_err(|e| e.to_string())?;
            ensure(res.certified, || format!("{}: not certified", j.ty()))?;
            let report = verify_shriek_lemma(&res, &module).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("{}: {report:?}", j.ty()))?;
            seen.push(format!("{} dims {}", j.ty(), report.dims));
        }
        Ok(seen.join(", "))
    };
    outcome(12, "shriek lemma instances", run())
}

/// Criteria 1–12 in order. Criterion 13 compares two whole runs and lives
/// with the callers.
pub fn run_all(seed: u64) -> Vec<Outcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(seed),
        criterion_7(),
        criterion_8(seed),
        criterion_9(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
    ]
}

pub fn report(seed: u64, outcomes: &[Outcome]) -> Value {
    json!({
        "seed": seed.to_string(),
        "criteria": outcomes.iter().map(Outcome::to_json).collect::<Vec<_>>(),
        "passed": outcomes.iter().all(|o| o.passed),
    })
}
