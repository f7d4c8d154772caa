use mckay_exact::{q, Q};
use mckay_poly::Poly;
use mckay_roots::DynkinType;
use num_traits::{One, Zero};

use crate::action::GammaActionA;
use crate::ideal::PolyIdeal;
use crate::KleinianError;

fn pow(x: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

/// Vanishing ideal of the free orbit of (a, b): ⟨xy − ab, x^{r+1} − a^{r+1}, y^{r+1} − b^{r+1}⟩.
pub fn orbit_ideal(action: &GammaActionA, a: &Q, b: &Q) -> Result<PolyIdeal, KleinianError> {
    if a.is_zero() || b.is_zero() {
        return Err(KleinianError::NotFree);
    }
    let m = action.order();
    let c = |v: Q| Poly::constant(2, v);
    Ok(PolyIdeal::new(vec![
        Poly::monomial(&[1, 1]).sub(&c(a * b)),
        Poly::monomial(&[m as u32, 0]).sub(&c(pow(a, m))),
        Poly::monomial(&[0, m as u32]).sub(&c(pow(b, m))),
    ]))
}

/// (u, v, w) of the orbit of (a, b).
pub fn orbit_image(action: &GammaActionA, a: &Q, b: &Q) -> [Q; 3] {
    let m = action.order();
    [pow(a, m), a * b, pow(b, m)]
}

/// Vanishing ideal of a union of distinct free orbits (product of coprime ideals).
pub fn orbit_union(action: &GammaActionA, points: &[(Q, Q)]) -> Result<PolyIdeal, KleinianError> {
    let mut out = PolyIdeal::new(vec![Poly::one(2)]);
    for (a, b) in points {
        out = out.product(&orbit_ideal(action, a, b)?);
    }
    Ok(out)
}

fn partitions(total: usize, max_part: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max_part.min(total)).rev() {
        prefix.push(part as u32);
        partitions(total - part, part, prefix, out);
        prefix.pop();
    }
}

/// Partitions of n(r+1) whose boxes x^j y^i carry every weight j − i exactly n times.
pub fn balanced_partitions(action: &GammaActionA, n: usize) -> Vec<Vec<u32>> {
    let m = action.order();
    let mut all = Vec::new();
    partitions(n * m, n * m, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|rows| {
            let mut counts = vec![0usize; m];
            for (i, &len) in rows.iter().enumerate() {
                for j in 0..len as i64 {
                    counts[(j - i as i64).rem_euclid(m as i64) as usize] += 1;
                }
            }
            counts.iter().all(|&c| c == n)
        })
        .collect()
}

/// The monomial ideal whose staircase is the partition (row i = x-exponents at y^i).
pub fn monomial_ideal(rows: &[u32]) -> PolyIdeal {
    let mut gens: Vec<Poly> = rows.iter().enumerate().map(|(i, &len)| Poly::monomial(&[len, i as u32])).collect();
    gens.push(Poly::monomial(&[0, rows.len() as u32]));
    PolyIdeal::new(gens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    Monomial,
    Orbits,
    Mixed,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub ty: DynkinType,
    pub n: usize,
    pub kind: CorpusKind,
    pub label: String,
    pub ideal: PolyIdeal,
    /// Representatives of the free orbits in the support.
    pub orbits: Vec<(Q, Q)>,
    /// Length of the part supported at the origin.
    pub punctual: usize,
}

/// Orbit representatives with distinct images for every r ≤ 3.
fn sample_points() -> Vec<(Q, Q)> {
    vec![(q(1, 1), q(1, 1)), (q(2, 1), q(1, 1)), (q(1, 1), q(-3, 1)), (q(1, 2), q(2, 1)), (q(-1, 1), q(2, 1))]
}

fn label_points(points: &[(Q, Q)]) -> String {
    let parts: Vec<String> = points
        .iter()
        .map(|(a, b)| format!("({},{})", mckay_exact::rational_to_string(a), mckay_exact::rational_to_string(b)))
        .collect();
    parts.join("+")
}

/// Deterministic corpus of Γ-invariant ideals with isotypic dimensions nδ:
/// punctual monomial ideals, unions of free orbits, and products of the two.
pub fn corpus(ranks: &[usize], max_n: usize) -> Vec<CorpusEntry> {
    let pts = sample_points();
    let mut out = Vec::new();
    for &r in ranks {
        let action = GammaActionA { r };
        let ty = action.ty();
        for n in 1..=max_n {
            for rows in balanced_partitions(&action, n) {
                out.push(CorpusEntry {
                    ty,
                    n,
                    kind: CorpusKind::Monomial,
                    label: format!("monomial {rows:?}"),
                    ideal: monomial_ideal(&rows),
                    orbits: Vec::new(),
                    punctual: n,
                });
            }
            for start in 0..pts.len() {
                let chosen: Vec<(Q, Q)> = (0..n).map(|k| pts[(start + k) % pts.len()].clone()).collect();
                out.push(CorpusEntry {
                    ty,
                    n,
                    kind: CorpusKind::Orbits,
                    label: format!("orbits {}", label_points(&chosen)),
                    ideal: orbit_union(&action, &chosen).expect("free points"),
                    orbits: chosen,
                    punctual: 0,
                });
            }
            for k in 1..n {
                let chosen: Vec<(Q, Q)> = pts[..n - k].to_vec();
                for rows in balanced_partitions(&action, k).into_iter().take(2) {
                    let ideal = monomial_ideal(&rows).product(&orbit_union(&action, &chosen).expect("free points"));
                    out.push(CorpusEntry {
                        ty,
                        n,
                        kind: CorpusKind::Mixed,
                        label: format!("monomial {rows:?} * orbits {}", label_points(&chosen)),
                        ideal,
                        orbits: chosen.clone(),
                        punctual: k,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::isotypic_dims;

    #[test]
    fn small_partitions() {
        let a1 = GammaActionA { r: 1 };
        assert_eq!(balanced_partitions(&a1, 1), vec![vec![2], vec![1, 1]]);
        for rows in balanced_partitions(&GammaActionA { r: 2 }, 2) {
            assert_eq!(isotypic_dims(&monomial_ideal(&rows), &GammaActionA { r: 2 }).unwrap().0, vec![2, 2, 2]);
        }
        assert!(balanced_partitions(&GammaActionA { r: 2 }, 2).contains(&vec![6]));
    }

    #[test]
    fn orbit_dims() {
        let a = GammaActionA { r: 3 };
        let i = orbit_ideal(&a, &q(2, 1), &q(-1, 3)).unwrap();
        assert_eq!(isotypic_dims(&i, &a).unwrap().0, vec![1, 1, 1, 1]);
        assert!(orbit_ideal(&a, &q(0, 1), &q(1, 1)).is_err());
    }
}
