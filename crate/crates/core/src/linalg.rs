//! Exact linear combinations of polynomials.

use std::collections::BTreeSet;

use crate::poly2::{Monomial, Poly2};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    Inconsistent,
    Underdetermined,
}

/// Solves `target = sum_k c_k basis[k]` by Gaussian elimination over the
/// monomial coefficients. Meaningful for exact scalars.
pub fn express_in<T: Scalar>(target: &Poly2<T>, basis: &[Poly2<T>]) -> Solution<T> {
    let mut monos: BTreeSet<Monomial> = target.terms().map(|(m, _)| m).collect();
    for b in basis {
        monos.extend(b.terms().map(|(m, _)| m));
    }
    let n = basis.len();
    let mut rows: Vec<Vec<T>> = monos
        .iter()
        .map(|m| {
            let mut r: Vec<T> = basis.iter().map(|b| b.coeff(m.i, m.j)).collect();
            r.push(target.coeff(m.i, m.j));
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                for t in c..=n {
                    let d = rows[r][t].clone() * f.clone();
                    rows[k][t] = rows[k][t].clone() - d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivot_cols.len() < n {
        return Solution::Underdetermined;
    }
    Solution::Unique((0..n).map(|k| rows[k][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Poly2Q};

    #[test]
    fn solves_and_detects_failure() {
        let z: Poly2Q = Poly2::z();
        let one: Poly2Q = Poly2::one();
        let t = &z.scale(&rat(2, 1)) - &one.scale(&rat(1, 3));
        assert_eq!(
            express_in(&t, &[z.clone(), one.clone()]),
            Solution::Unique(vec![rat(2, 1), rat(-1, 3)])
        );
        assert_eq!(
            express_in(&Poly2::zbar(), std::slice::from_ref(&z)),
            Solution::Inconsistent
        );
        assert_eq!(
            express_in(&z, &[z.clone(), z.clone()]),
            Solution::Underdetermined
        );
    }
}
