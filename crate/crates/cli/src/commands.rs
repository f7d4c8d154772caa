use std::collections::BTreeMap;

use mckay_exact::{parse_rational, Field, Q};
use mckay_kleinian::{hilbert_chow, isotypic_dims, rep_from_ideal, tau, GammaActionA, InvariantIdeal, KleinianError, PolyIdeal};
use mckay_poly::Colength;
use mckay_quiver::default_sign;
use mckay_recollement::{a0_module_from_invariant_ideal, shriek, verify_shriek_lemma};
use mckay_reps::{
    check_preprojective, is_semistable_bruteforce, is_semistable_theta_i, is_stable_cplus, spin_from_framing, AnyRep,
    FramedRep,
};
use mckay_roots::{build_mckay_graph, cartan_matrix, delta, positive_roots, DynkinType};
use mckay_theta::{arrangement, count_chambers, namikawa_order, ThetaParam};
use serde_json::{json, Value};

use crate::CliError;

pub fn parse_type(s: &str) -> Result<DynkinType, CliError> {
    Ok(s.parse::<DynkinType>()?)
}

pub fn info(ty: DynkinType) -> Result<Value, CliError> {
    let g = build_mckay_graph(ty);
    let c = cartan_matrix(&g);
    let d = delta(ty);
    Ok(json!({
        "type": ty.to_string(),
        "vertices": ty.vertex_count(),
        "edges": g.edge_list(),
        "delta": d,
        "cartan": c.entries,
        "cartan_kills_delta": c.apply(&d).iter().all(|&x| x == 0),
        "dims_relation": g.dims_relation_holds(),
        "positive_roots": positive_roots(ty).len(),
        "group_order": ty.group_order(),
        "sum_of_squares": d.iter().map(|x| x * x).sum::<i64>(),
    }))
}

pub fn chambers(ty: DynkinType, n: usize) -> Result<Value, CliError> {
    let count = count_chambers(ty, n)?;
    let arr = arrangement(ty, n)?;
    let weyl = namikawa_order(ty)? as usize;
    let mut hyperplanes = Vec::new();
    let mut walls = BTreeMap::new();
    for h in &arr.hyperplanes {
        let kind = mckay_theta::classify_wall(h, ty, n)?;
        hyperplanes.push(json!({"normal": h.normal, "label": h.label.to_string(), "wall": kind.to_string()}));
        walls.insert(h.label.to_string(), kind.to_string());
    }
    let mut out = json!({
        "type": ty.to_string(),
        "n": n,
        "hyperplanes": hyperplanes,
        "chambers": count.total,
        "chambers_in_F": count.in_f,
        "weyl_order": weyl,
        "fundamental_domain_check": count.total == weyl * count.in_f,
        "walls": walls,
    });
    if n == 1 {
        out["note"] = json!("n = 1: the decomposition is only asserted for n > 1; hyperplanes listed for convenience");
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaChoice {
    CPlus,
    ThetaI(Vec<usize>),
    Zero,
    /// Explicit coordinates (θ₀,…,θ_r); exhaustive check, finite fields only.
    Explicit(ThetaParam),
}

impl ThetaChoice {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Validation(format!("bad theta {s:?}; expected C+, theta0, thetaI:0,2, zero or theta:1,-1/2"));
        match s {
            "C+" => return Ok(ThetaChoice::CPlus),
            "theta0" => return Ok(ThetaChoice::ThetaI(vec![0])),
            "zero" => return Ok(ThetaChoice::Zero),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("thetaI:") {
            let set = rest.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
            return Ok(ThetaChoice::ThetaI(set));
        }
        if let Some(rest) = s.strip_prefix("theta:") {
            let coords = rest.split(',').map(|x| parse_rational(x.trim()).ok_or_else(bad)).collect::<Result<Vec<Q>, _>>()?;
            return Ok(ThetaChoice::Explicit(ThetaParam::new(coords)));
        }
        Err(bad())
    }
}

fn verdict<F: Field>(
    rep: &FramedRep<F>,
    choice: &ThetaChoice,
    brute: impl Fn(&ThetaParam) -> Result<bool, CliError>,
) -> Result<Value, CliError> {
    let word = |ok: bool, yes: &str| if ok { yes.to_string() } else { "unsemistable".to_string() };
    let verdict = match choice {
        ThetaChoice::CPlus => word(is_stable_cplus(rep)?, "stable"),
        ThetaChoice::ThetaI(set) => word(is_semistable_theta_i(rep, set)?, "semistable"),
        ThetaChoice::Zero => "semistable".to_string(),
        ThetaChoice::Explicit(theta) => {
            theta.check_dim(rep.ty())?;
            word(brute(theta)?, "semistable")
        }
    };
    let spin = spin_from_framing(rep).ok().map(|d| d.to_string());
    Ok(json!({
        "type": rep.ty().to_string(),
        "n": rep.n(),
        "field": F::name(),
        "dims": rep.dim().to_string(),
        "moment_map_zero": check_preprojective(rep, &default_sign(rep.quiver()))?,
        "spin": spin,
        "verdict": verdict,
    }))
}

pub fn stability(rep_json: &str, theta_text: &str) -> Result<Value, CliError> {
    let choice = &ThetaChoice::parse(theta_text)?;
    let rep = AnyRep::from_json(rep_json)?;
    let mut out = match &rep {
        AnyRep::Q(r) => verdict(r, choice, |_| {
            Err(CliError::Validation("explicit theta needs the exhaustive check, available over F2 and F3 only".into()))
        })?,
        AnyRep::F2(r) => verdict(r, choice, |t| Ok(is_semistable_bruteforce::<2>(r, t)?))?,
        AnyRep::F3(r) => verdict(r, choice, |t| Ok(is_semistable_bruteforce::<3>(r, t)?))?,
    };
    out["theta"] = json!(theta_text);
    Ok(out)
}

fn checked_ideal(ty: DynkinType, n: usize, ideal: &str) -> Result<(GammaActionA, PolyIdeal), CliError> {
    let action = GammaActionA::new(ty)?;
    let i = PolyIdeal::parse(ideal)?;
    if !action.is_invariant(&i) {
        return Err(KleinianError::NotInvariant.into());
    }
    let dims = isotypic_dims(&i, &action)?;
    if dims.0 != vec![n; ty.vertex_count()] {
        return Err(KleinianError::NotMultipleOfDelta { got: dims.0, expected: Some(n) }.into());
    }
    Ok((action, i))
}

pub fn tau_report(ty: DynkinType, n: usize, ideal: &str) -> Result<Value, CliError> {
    let (action, i) = checked_ideal(ty, n, ideal)?;
    let t = tau(&i, &action)?;
    let colength = match t.colength() {
        Colength::Finite(c) => json!(c),
        Colength::Infinite => json!("infinite"),
    };
    let support = match hilbert_chow(&i, &action) {
        Ok(points) => serde_json::to_value(points).expect("serializable"),
        Err(e) => json!({ "error": e.to_string() }),
    };
    Ok(json!({
        "type": ty.to_string(),
        "n": n,
        "ideal": i,
        "isotypic_dims": isotypic_dims(&i, &action)?.0,
        "tau": t.to_string(),
        "tau_generators": t,
        "colength": colength,
        "support": support,
    }))
}

pub fn rep_report(ty: DynkinType, n: usize, ideal: &str) -> Result<Value, CliError> {
    let (action, i) = checked_ideal(ty, n, ideal)?;
    Ok(rep_from_ideal(&i, &action)?.to_json_value())
}

pub struct ShriekOptions {
    pub max_degree: Option<usize>,
    pub window: usize,
}

pub fn shriek_report(ty: DynkinType, ideal: &str, opts: &ShriekOptions) -> Result<Value, CliError> {
    let j = InvariantIdeal::parse(ty, ideal)?;
    let module = a0_module_from_invariant_ideal(&j, None)?;
    let n = module.n();
    let max_degree = opts.max_degree.unwrap_or(4 * ty.vertex_count() * (n + 1));
    let res = shriek(&module, max_degree, opts.window)?;
    let mut out = json!({
        "type": ty.to_string(),
        "ideal": j.to_string(),
        "n": n,
        "input": module,
        "result": res,
    });
    if !res.certified {
        return Err(CliError::Uncertified(out));
    }
    let report = verify_shriek_lemma(&res, &module)?;
    out["passed"] = json!(report.passed());
    out["report"] = serde_json::to_value(&report).expect("serializable");
    Ok(out)
}
