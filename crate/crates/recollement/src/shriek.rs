use std::collections::HashMap;

use mckay_exact::{Matrix, Q};
use mckay_quiver::{default_sign, TypeAOrientation};
use mckay_reps::{check_preprojective, is_semistable_theta_i, DimVector, FramedRep};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::module::{restrict_to_corner, A0Module};
use crate::RecollementError;

/// Weight-k part of k[x,y] ⊗_{R₀} N, cut off at total degree D:
/// symbols x^a y^b ⊗ e_j modulo (m·q) ⊗ e − m ⊗ B_q e for q ∈ {u, v, w}.
struct Component {
    monos: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), usize>,
    n: usize,
    rref: Matrix<Q>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl Component {
    fn build(module: &A0Module, weight: usize, degree: u32) -> Self {
        let m = module.ty().rank() as u32 + 1;
        let n = module.n();
        let mut monos: Vec<(u32, u32)> = (0..=degree)
            .flat_map(|d| (0..=d).map(move |a| (a, d - a)))
            .filter(|&(a, b)| (a as i64 - b as i64).rem_euclid(m as i64) as usize == weight)
            .collect();
        // high degree first, so the surviving symbols are the low ones
        monos.sort_by(|x, y| (y.0 + y.1).cmp(&(x.0 + x.1)).then(y.cmp(x)));
        let index: HashMap<(u32, u32), usize> = monos.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let shifts = [((m, 0), 0usize), ((1, 1), 1), ((0, m), 2)];
        let cols = monos.len() * n;
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for (t, &(a, b)) in monos.iter().enumerate() {
            for &((da, db), qk) in &shifts {
                let Some(&target) = index.get(&(a + da, b + db)) else { continue };
                for j in 0..n {
                    let mut row = vec![Q::zero(); cols];
                    row[target * n + j] = Q::one();
                    for i in 0..n {
                        let c = &module.b[qk][(i, j)];
                        if !c.is_zero() {
                            row[t * n + i] -= c;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let mut rref = if rows.is_empty() {
            Matrix::zeros(0, cols)
        } else {
            Matrix::from_rows(rows.len(), cols, rows).expect("rectangular")
        };
        let pivots = rref.rref_in_place();
        let free = (0..cols).filter(|c| !pivots.contains(c)).collect();
        Component { monos, index, n, rref, pivots, free }
    }

    fn dim(&self) -> usize {
        self.free.len()
    }

    fn symbol(&self, mono: (u32, u32), j: usize) -> Option<usize> {
        self.index.get(&mono).map(|&t| t * self.n + j)
    }

    /// Coordinates of a symbol combination in the surviving basis.
    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (row, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (k, x) in self.rref.row(row).iter().enumerate() {
                if !x.is_zero() {
                    v[k] -= &c * x;
                }
            }
        }
        self.free.iter().map(|&f| v[f].clone()).collect()
    }

    fn max_basis_degree(&self) -> u32 {
        self.free.iter().map(|&f| {
            let (a, b) = self.monos[f / self.n];
            a + b
        }).max().unwrap_or(0)
    }
}

fn components(module: &A0Module, degree: u32) -> Vec<Component> {
    (0..=module.ty().rank()).map(|k| Component::build(module, k, degree)).collect()
}

fn dims_of(comps: &[Component]) -> DimVector {
    let mut v = vec![1];
    v.extend(comps.iter().map(|c| c.dim() as i64));
    DimVector(v)
}

#[derive(Debug, Clone)]
pub struct ShriekResult {
    /// j_!(N) at the last degree computed; b* acts by zero.
    pub module: FramedRep<Q>,
    pub certified: bool,
    pub degree_reached: usize,
    /// Vertex dimensions (∞, ρ₀, …, ρ_r) of the truncation at each degree.
    pub dims_by_degree: Vec<DimVector>,
    pub window: usize,
    pub max_degree: usize,
}

impl ShriekResult {
    pub fn dims(&self) -> DimVector {
        self.module.dim()
    }

    /// Whether every vertex dimension was non-decreasing in degree up to the
    /// start of the final stable run.
    pub fn monotone_until_stable(&self) -> bool {
        let h = &self.dims_by_degree;
        let last = h.last().expect("non-empty");
        let start = h.iter().rposition(|d| d != last).map_or(0, |k| k + 1);
        h[..=start].windows(2).all(|w| w[0].0.iter().zip(&w[1].0).all(|(a, b)| a <= b))
    }
}

impl Serialize for ShriekResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(rename = "type")]
            ty: String,
            n: usize,
            dims: DimVector,
            certified: bool,
            degree_reached: usize,
            window: usize,
            max_degree: usize,
            dims_by_degree: &'a [DimVector],
            monotone_until_stable: bool,
            module: serde_json::Value,
        }
        Out {
            ty: self.module.ty().to_string(),
            n: self.module.n(),
            dims: self.dims(),
            certified: self.certified,
            degree_reached: self.degree_reached,
            window: self.window,
            max_degree: self.max_degree,
            dims_by_degree: &self.dims_by_degree,
            monotone_until_stable: self.monotone_until_stable(),
            module: self.module.to_json_value(),
        }
        .serialize(s)
    }
}

/// j_!(N) = A(e_∞+e₀) ⊗_{A₀} N for type A, built degree by degree. At ρ_k it
/// is the weight-k part of k[x,y] tensored over R₀ with N; the run is
/// certified once the vertex dimensions stay fixed for `window` degrees.
pub fn shriek(module: &A0Module, max_degree: usize, window: usize) -> Result<ShriekResult, RecollementError> {
    let ty = module.ty();
    if !ty.is_type_a() {
        return Err(RecollementError::UnsupportedType(ty));
    }
    if !module.is_infty_generated() {
        return Err(RecollementError::NotGenerated);
    }
    let mut history: Vec<DimVector> = Vec::new();
    let mut certified = false;
    let mut comps = components(module, 0);
    let mut reached = 0;
    for d in 0..=max_degree {
        comps = components(module, d as u32);
        history.push(dims_of(&comps));
        reached = d;
        let stable_run = history.len() > window && history[history.len() - 1 - window..].windows(2).all(|w| w[0] == w[1]);
        // arrows out of the basis must land inside the truncation
        let room = comps.iter().all(|c| c.max_basis_degree() < d as u32);
        if stable_run && room {
            certified = true;
            break;
        }
    }
    let rep = assemble(module, &comps)?;
    Ok(ShriekResult { module: rep, certified, degree_reached: reached, dims_by_degree: history, window, max_degree })
}

/// Defaults: max_degree = 4(r+1)(n+1), window = 4.
pub fn shriek_with_defaults(module: &A0Module) -> Result<ShriekResult, RecollementError> {
    let m = module.ty().rank() + 1;
    shriek(module, 4 * m * (module.n() + 1), 4)
}

fn assemble(module: &A0Module, comps: &[Component]) -> Result<FramedRep<Q>, RecollementError> {
    let ty = module.ty();
    let m = comps.len();
    let dims = dims_of(comps);
    let mut rep = FramedRep::<Q>::zero(ty, module.n(), &dims)?;
    let orient = TypeAOrientation::new(rep.quiver()).map_err(|_| RecollementError::UnsupportedType(ty))?;
    let image = |from: &Component, to: &Component, step: (u32, u32), scale: &Q| -> Matrix<Q> {
        let mut cols = Vec::with_capacity(from.dim());
        for &f in &from.free {
            let (a, b) = from.monos[f / from.n];
            let j = f % from.n;
            let mut v = vec![Q::zero(); to.monos.len() * to.n];
            if let Some(s) = to.symbol((a + step.0, b + step.1), j) {
                v[s] = scale.clone();
            }
            cols.push(to.reduce(v));
        }
        Matrix::from_columns(to.dim(), &cols)
    };
    for k in 0..m {
        let next = (k + 1) % m;
        rep.set(orient.x_arrows[k], image(&comps[k], &comps[next], (1, 0), &Q::one()))?;
        let sigma = Q::from_integer(i64::from(orient.sigma[k]).into());
        rep.set(orient.y_arrows[k], image(&comps[next], &comps[k], (0, 1), &sigma))?;
    }
    let c0 = &comps[0];
    let mut v = vec![Q::zero(); c0.monos.len() * c0.n];
    for j in 0..c0.n {
        if let Some(s) = c0.symbol((0, 0), j) {
            v[s] = module.i[(j, 0)].clone();
        }
    }
    let iv = Matrix::from_columns(c0.dim(), &[c0.reduce(v)]);
    let b = rep.quiver().framing_arrow().expect("framed");
    rep.set(b, iv)?;
    Ok(rep)
}

/// Checks on a certified j_!(N).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShriekReport {
    pub dims: DimVector,
    pub dim_infinity_is_one: bool,
    pub dim_zero_is_n: bool,
    pub theta0_semistable: bool,
    pub preprojective: bool,
    pub bstar_zero: bool,
    /// p_u p_w − p_v^{r+1} acts by zero at ρ₀.
    pub corner_relation: bool,
    /// The (∞, ρ₀) corner is isomorphic to N.
    pub restriction_recovers_input: bool,
    /// dim_k ≤ n·dim ρ_k, per vertex ρ₀..ρ_r; recorded, not required.
    pub ndelta_bounds: Vec<bool>,
    pub monotone_until_stable: bool,
}

impl ShriekReport {
    /// All required checks (the n·δ bounds are informational).
    pub fn passed(&self) -> bool {
        self.dim_infinity_is_one
            && self.dim_zero_is_n
            && self.theta0_semistable
            && self.preprojective
            && self.bstar_zero
            && self.corner_relation
            && self.restriction_recovers_input
    }
}

pub fn verify_shriek_lemma(res: &ShriekResult, input: &A0Module) -> Result<ShriekReport, RecollementError> {
    if !res.certified {
        return Err(RecollementError::Uncertified(res.degree_reached));
    }
    let rep = &res.module;
    let n = input.n();
    let dims = rep.dim();
    let corner = restrict_to_corner(rep);
    let corner_relation = !matches!(corner, Err(RecollementError::RelationFails));
    let restriction_recovers_input = match &corner {
        Ok(c) => c.krylov_form().is_some() && c.krylov_form() == input.krylov_form(),
        Err(_) => false,
    };
    Ok(ShriekReport {
        dim_infinity_is_one: dims.infinity() == 1,
        dim_zero_is_n: dims.rho(0) == n as i64,
        theta0_semistable: is_semistable_theta_i(rep, &[0])?,
        preprojective: check_preprojective(rep, &default_sign(rep.quiver()))?,
        bstar_zero: rep.j().is_zero(),
        corner_relation,
        restriction_recovers_input,
        ndelta_bounds: (0..rep.ty().vertex_count()).map(|k| dims.rho(k) <= n as i64).collect(),
        monotone_until_stable: res.monotone_until_stable(),
        dims,
    })
}
