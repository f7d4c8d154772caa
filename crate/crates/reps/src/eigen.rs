use mckay_exact::univariate::{quotient, rational_roots};
use mckay_exact::{Matrix, Q};
use num_traits::{One, Zero};

use crate::RepError;

/// Rational roots with multiplicity; `None` if the polynomial does not split.
fn split_roots(p: &[Q]) -> Option<Vec<Q>> {
    let mut out = Vec::new();
    let mut rest = p.to_vec();
    for root in rational_roots(p) {
        let lin = vec![-root.clone(), Q::one()];
        loop {
            let (quo, rem) = (quotient(&rest, &lin), mckay_exact::univariate::rem(&rest, &lin));
            if rem.iter().any(|c| !c.is_zero()) {
                break;
            }
            rest = quo;
            out.push(root.clone());
        }
    }
    (out.len() + 1 == p.len()).then_some(out)
}

/// Diagonals of a simultaneous triangularization of commuting matrices, as a
/// sorted multiset of tuples (one entry per matrix).
pub fn paired_eigenvalues(mats: &[Matrix<Q>]) -> Result<Vec<Vec<Q>>, RepError> {
    let Some(first) = mats.first() else { return Ok(Vec::new()) };
    let d = first.rows();
    for (k, m) in mats.iter().enumerate() {
        if m.shape() != (d, d) {
            return Err(RepError::NotSquare(k));
        }
    }
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            if !mats[a].commutes_with(&mats[b]) {
                return Err(RepError::NonCommuting(a, b));
            }
        }
    }
    for (k, m) in mats.iter().enumerate() {
        if split_roots(&m.charpoly()).is_none() {
            return Err(RepError::NotSplit(k));
        }
    }
    let mut out = Vec::with_capacity(d);
    triangularize(mats.to_vec(), &mut out);
    out.sort();
    Ok(out)
}

fn triangularize(mats: Vec<Matrix<Q>>, out: &mut Vec<Vec<Q>>) {
    let d = mats[0].rows();
    if d == 0 {
        return;
    }
    // common eigenvector: cut the space down one matrix at a time
    let mut basis = Matrix::<Q>::identity(d);
    let mut lambdas = Vec::with_capacity(mats.len());
    for m in &mats {
        let restricted = basis.solve(&m.mul(&basis)).expect("subspace is invariant");
        let lambda = rational_roots(&restricted.charpoly()).into_iter().next().expect("split");
        let shifted = restricted.sub(&Matrix::identity(restricted.rows()).scale(&lambda));
        let kernel = shifted.kernel();
        basis = basis.mul(&Matrix::from_columns(restricted.rows(), &kernel));
        lambdas.push(lambda);
    }
    out.push(lambdas);
    if d == 1 {
        return;
    }
    // complete the eigenvector to a basis and pass to the quotient
    let v = basis.column(0);
    let mut cols = vec![v];
    for e in 0..d {
        let mut unit = vec![Q::zero(); d];
        unit[e] = Q::one();
        let mut trial = cols.clone();
        trial.push(unit);
        if Matrix::from_columns(d, &trial).rank() == trial.len() {
            cols = trial;
        }
        if cols.len() == d {
            break;
        }
    }
    let p = Matrix::from_columns(d, &cols);
    let p_inv = p.inverse().expect("basis");
    let quotients = mats.iter().map(|m| p_inv.mul(m).mul(&p).submatrix(1..d, 1..d)).collect();
    triangularize(quotients, out);
}
