use mckay_exact::lp::System;
use mckay_exact::{q, Matrix, Q};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| q(v[i * cols + j], 1)))
}

proptest! {
    #[test]
    fn rank_nullity(a in small_matrix(3, 5)) {
        let k = a.kernel();
        prop_assert_eq!(a.rank() + k.len(), 5);
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(|x| *x == q(0, 1)));
        }
    }

    #[test]
    fn inverse_is_two_sided(a in small_matrix(3, 3)) {
        match a.inverse() {
            Some(inv) => {
                prop_assert_eq!(a.mul(&inv), Matrix::identity(3));
                prop_assert_eq!(inv.mul(&a), Matrix::identity(3));
                prop_assert!(a.determinant() != q(0, 1));
            }
            None => prop_assert_eq!(a.determinant(), q(0, 1)),
        }
    }

    #[test]
    fn charpoly_vanishes_at_matrix(a in small_matrix(3, 3)) {
        let c = a.charpoly();
        let mut acc = Matrix::<Q>::zeros(3, 3);
        for (k, ck) in c.iter().enumerate() {
            acc = acc.add(&a.pow(k as u32).scale(ck));
        }
        prop_assert!(acc.is_zero());
        prop_assert_eq!(c[0].clone() * Q::from_integer((-1i64).pow(3).into()), a.determinant());
    }

    #[test]
    fn lp_witness_satisfies_system(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..6)) {
        let mut s = System::new(3);
        for r in &rows {
            s.positive(r.iter().map(|&x| q(x, 1)).collect());
        }
        if let Some(x) = s.solve() {
            prop_assert!(s.check(&x));
        } else {
            // infeasible cones admit no positive point on a coarse grid either
            for a in -4i64..=4 { for b in -4i64..=4 { for c in -4i64..=4 {
                let p = [q(a,1), q(b,1), q(c,1)];
                let all_pos = rows.iter().all(|r| r.iter().zip(&p).map(|(x, y)| q(*x, 1) * y).sum::<Q>() > q(0, 1));
                prop_assert!(!all_pos);
            }}}
        }
    }
}

proptest! {
    #[test]
    fn rational_roots_of_products(roots in prop::collection::vec((-20i64..=20, 1i64..=6), 0..5), extra in 0i64..3) {
        use mckay_exact::univariate::rational_roots;
        // multiply (t - r) factors, then an irreducible quadratic t^2 + extra + 1 or t^2 - 2
        let mut p = vec![q(1, 1)];
        let mut rs: Vec<Q> = roots.iter().map(|&(a, b)| q(a, b)).collect();
        for r in &rs {
            let mut next = vec![q(0, 1); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = next;
        }
        let quad = if extra == 0 { vec![q(-2, 1), q(0, 1), q(1, 1)] } else { vec![q(extra + 1, 1), q(0, 1), q(1, 1)] };
        let mut prod = vec![q(0, 1); p.len() + 2];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in quad.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        rs.sort();
        rs.dedup();
        prop_assert_eq!(rational_roots(&prod), rs);
    }
}
