//! Exact feasibility for systems of linear equalities and inequalities over Q,
//! by phase-one simplex with Bland's anti-cycling rule.

use num_traits::{One, Signed, Zero};

use crate::field::Q;

/// Constraint system in free variables x ∈ Q^nvars.
#[derive(Clone, Debug, Default)]
pub struct System {
    pub nvars: usize,
    eq: Vec<(Vec<Q>, Q)>,
    ge: Vec<(Vec<Q>, Q)>,
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System { nvars, eq: Vec::new(), ge: Vec::new() }
    }

    /// a·x = b
    pub fn equal(&mut self, a: Vec<Q>, b: Q) -> &mut Self {
        assert_eq!(a.len(), self.nvars);
        self.eq.push((a, b));
        self
    }

    /// a·x ≥ b
    pub fn at_least(&mut self, a: Vec<Q>, b: Q) -> &mut Self {
        assert_eq!(a.len(), self.nvars);
        self.ge.push((a, b));
        self
    }

    /// Homogeneous strict inequality a·x > 0. For a cone system (all
    /// right-hand sides zero) this is equivalent to a·x ≥ 1 after scaling.
    pub fn positive(&mut self, a: Vec<Q>) -> &mut Self {
        self.at_least(a, Q::one())
    }

    /// A feasible point, or `None` if the system is infeasible.
    pub fn solve(&self) -> Option<Vec<Q>> {
        let n = self.nvars;
        let n_slack = self.ge.len();
        let m = self.eq.len() + self.ge.len();
        if m == 0 {
            return Some(vec![Q::zero(); n]);
        }
        // columns: x+ (n), x- (n), slack (n_slack), artificial (m), rhs
        let n_struct = 2 * n + n_slack;
        let width = n_struct + m + 1;
        let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
        for (row_idx, (a, b, slack)) in self
            .eq
            .iter()
            .map(|(a, b)| (a, b, None))
            .chain(self.ge.iter().enumerate().map(|(k, (a, b))| (a, b, Some(k))))
            .enumerate()
        {
            let mut row = vec![Q::zero(); width];
            for j in 0..n {
                row[j] = a[j].clone();
                row[n + j] = -a[j].clone();
            }
            if let Some(k) = slack {
                row[2 * n + k] = -Q::one();
            }
            row[width - 1] = b.clone();
            if b.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            row[n_struct + row_idx] = Q::one();
            t.push(row);
        }
        let mut basis: Vec<usize> = (n_struct..n_struct + m).collect();
        let cost = |j: usize| if j >= n_struct && j < n_struct + m { Q::one() } else { Q::zero() };

        loop {
            // reduced costs
            let mut entering = None;
            for j in 0..width - 1 {
                if basis.contains(&j) {
                    continue;
                }
                let mut rc = cost(j);
                for (i, &bi) in basis.iter().enumerate() {
                    let cb = cost(bi);
                    if !cb.is_zero() && !t[i][j].is_zero() {
                        rc -= cb * &t[i][j];
                    }
                }
                if rc.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(e) = entering else { break };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..m {
                if t[i][e].is_positive() {
                    let ratio = &t[i][width - 1] / &t[i][e];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            // phase-one objective is bounded below, so a leaving row exists
            let (l, _) = leave.expect("phase one is bounded");
            pivot(&mut t, l, e);
            basis[l] = e;
        }

        let objective: Q = basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= n_struct)
            .map(|(i, _)| t[i][width - 1].clone())
            .sum();
        if !objective.is_zero() {
            return None;
        }
        let mut x = vec![Q::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                x[b] += &t[i][width - 1];
            } else if b < 2 * n {
                x[b - n] -= &t[i][width - 1];
            }
        }
        debug_assert!(self.check(&x));
        Some(x)
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }

    pub fn check(&self, x: &[Q]) -> bool {
        let dot = |a: &[Q]| a.iter().zip(x).map(|(p, q)| p * q).sum::<Q>();
        self.eq.iter().all(|(a, b)| dot(a) == *b) && self.ge.iter().all(|(a, b)| dot(a) >= *b)
    }
}

fn pivot(t: &mut [Vec<Q>], r: usize, c: usize) {
    let inv = Q::one() / &t[r][c];
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn open_quadrant_is_feasible() {
        let mut s = System::new(2);
        s.positive(v(&[1, 0])).positive(v(&[0, 1])).positive(v(&[-1, 2]));
        let x = s.solve().unwrap();
        assert!(s.check(&x));
    }

    #[test]
    fn contradictory_cone_is_infeasible() {
        let mut s = System::new(2);
        s.positive(v(&[1, 1])).positive(v(&[-1, 0])).positive(v(&[0, -1]));
        assert!(!s.is_feasible());
    }

    #[test]
    fn equality_with_negative_rhs() {
        let mut s = System::new(3);
        s.equal(v(&[1, 1, 1]), q(-3, 1)).at_least(v(&[1, 0, 0]), q(-1, 1));
        let x = s.solve().unwrap();
        assert!(s.check(&x));
        let mut s = System::new(1);
        s.equal(v(&[0]), q(1, 1));
        assert!(!s.is_feasible());
    }
}
