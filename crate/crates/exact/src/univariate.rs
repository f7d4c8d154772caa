//! Dense univariate polynomials over Q (coefficient of t^k at index k) and
//! exact computation of their rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::Q;

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Q]) -> Vec<Q> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * Q::from_integer(BigInt::from(k))).collect())
}

/// Remainder of a by b (b nonzero).
pub fn rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r = trim(r);
    }
    r
}

pub fn quotient(a: &[Q], b: &[Q]) -> Vec<Q> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut q = vec![Q::zero(); r.len() - b.len() + 1];
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        q[shift] = f;
        r = trim(r);
    }
    trim(q)
}

pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    match a.last() {
        Some(l) => {
            let l = l.clone();
            a.into_iter().map(|c| c / &l).collect()
        }
        None => a,
    }
}

fn sign_changes(chain: &[Vec<Q>], x: &Q) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = eval(p, x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// Distinct rational roots, in increasing order.
pub fn rational_roots(p: &[Q]) -> Vec<Q> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // factor out t^k
    let k = p.iter().position(|c| !c.is_zero()).unwrap();
    let mut p = p[k..].to_vec();
    if k > 0 {
        roots.push(Q::zero());
    }
    if p.len() > 1 {
        let d = derivative(&p);
        let g = gcd(&p, &d);
        if g.len() > 1 {
            p = quotient(&p, &g);
        }
        // integer primitive form to get the leading coefficient
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead = (ints.last().unwrap() / &content).abs();

        let mut chain = vec![p.clone(), derivative(&p)];
        while chain.last().unwrap().len() > 1 {
            let n = chain.len();
            let r: Vec<Q> = rem(&chain[n - 2], &chain[n - 1]).into_iter().map(|c| -c).collect();
            if r.is_empty() {
                break;
            }
            chain.push(r);
        }
        let lc = p.last().unwrap();
        let bound = Q::one() + p[..p.len() - 1].iter().map(|c| (c / lc).abs()).fold(Q::zero(), |a, b| a.max(b));
        let target = Q::one() / Q::from_integer(lead.clone() * BigInt::from(2));
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 && &hi - &lo < target {
                // numbers k/lead are spaced 1/lead apart: at most one candidate in (lo, hi]
                let lead_q = Q::from_integer(lead.clone());
                let k = (&lo * &lead_q).floor() + Q::one();
                let cand = k / &lead_q;
                if cand <= hi && eval(&p, &cand).is_zero() {
                    roots.push(cand);
                }
                continue;
            }
            let mut mid = (&lo + &hi) / Q::from_integer(BigInt::from(2));
            let mut step = 3;
            while eval(&p, &mid).is_zero() {
                if !roots.contains(&mid) {
                    roots.push(mid.clone());
                }
                mid = &lo + (&hi - &lo) / Q::from_integer(BigInt::from(step));
                step += 1;
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn from_roots(rs: &[Q]) -> Vec<Q> {
        let mut p = vec![Q::one()];
        for r in rs {
            let mut next = vec![Q::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = next;
        }
        p
    }

    #[test]
    fn recovers_roots_with_multiplicity() {
        let rs = [q(1, 2), q(1, 2), q(-3, 1), q(0, 1), q(7, 3)];
        assert_eq!(rational_roots(&from_roots(&rs)), vec![q(-3, 1), q(0, 1), q(1, 2), q(7, 3)]);
    }

    #[test]
    fn ignores_irrational_roots() {
        // (t^2 - 2)(t - 5)
        let p = vec![q(10, 1), q(-2, 1), q(-5, 1), q(1, 1)];
        assert_eq!(rational_roots(&p), vec![q(5, 1)]);
        // t^2 + 1
        assert!(rational_roots(&[q(1, 1), q(0, 1), q(1, 1)]).is_empty());
    }

    #[test]
    fn large_coefficients() {
        let rs = [q(123456789, 1000), q(-987654321, 7)];
        assert_eq!(rational_roots(&from_roots(&rs)), vec![q(-987654321, 7), q(123456789, 1000)]);
    }
}
