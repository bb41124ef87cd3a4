//! Recurrence coefficients and the triangular table of eigenpolynomials.

use crate::error::{Error, Result};
use crate::linalg::{express_in, Solution};
use crate::operator::{eigenvalue, AlphaParam, GammaTable};
use crate::poly2::Poly2;
use crate::ratfn::{product, RationalFn, UPoly};
use crate::report::CheckReport;
use crate::scalar::{rat, Scalar};
use crate::PolyTableQ;

fn lin(a: i64, b: i64) -> (i64, i64) {
    (a, b)
}

/// `a1(lambda, p) = -p(3p + 2 lambda - 5) / ((lambda + 3p - 1)(lambda + 3p - 4))`.
pub fn a1_fn(p: u32) -> RationalFn {
    let p = i64::from(p);
    let num = product(&[lin(3 * p - 5, 2)]).scale(&rat(-p, 1));
    let den = product(&[lin(3 * p - 1, 1), lin(3 * p - 4, 1)]);
    RationalFn::new(&num, &den)
}

/// `a2(lambda, p, q) = -N_{p,q} / D_{p,q}`.
pub fn a2_fn(p: u32, q: u32) -> RationalFn {
    let (p, q) = (i64::from(p), i64::from(q));
    let s = p + q;
    let num = product(&[lin(3 * q - 5, 2), lin(3 * s - 1, 1), lin(s - 2, 1)]).scale(&rat(-q, 1));
    RationalFn::new(&num, &d_pq(p, q))
}

fn d_pq(p: i64, q: i64) -> UPoly {
    let s = p + q;
    product(&[
        lin(3 * q - 1, 1),
        lin(3 * s - 5, 2),
        lin(3 * s - 2, 2),
        lin(3 * q - 4, 1),
    ])
}

/// `alpha1(p, q) = p(3p + 2 lambda - 5)(lambda + p - q - 1) / (2 (lambda + 3p - 1)(lambda + 3p - 4))`.
pub fn alpha1_fn(p: u32, q: u32) -> RationalFn {
    let (p, q) = (i64::from(p), i64::from(q));
    let num = product(&[lin(3 * p - 5, 2), lin(p - q - 1, 1)]).scale(&rat(p, 2));
    let den = product(&[lin(3 * p - 1, 1), lin(3 * p - 4, 1)]);
    RationalFn::new(&num, &den)
}

/// `alpha2(p, q) = N1_{p,q} / (2 D_{p,q})`.
pub fn alpha2_fn(p: u32, q: u32) -> RationalFn {
    let (p, q) = (i64::from(p), i64::from(q));
    let s = p + q;
    let num = product(&[
        lin(3 * q - 5, 2),
        lin(3 * s - 1, 1),
        lin(s - 2, 1),
        lin(p + 2 * q - 2, 2),
    ])
    .scale(&rat(q, 2));
    RationalFn::new(&num, &d_pq(p, q))
}

pub fn coeff_a1<T: Scalar>(lambda: &T, p: u32) -> Result<T> {
    a1_fn(p).eval(lambda)
}

pub fn coeff_a2<T: Scalar>(lambda: &T, p: u32, q: u32) -> Result<T> {
    a2_fn(p, q).eval(lambda)
}

/// `(alpha0, alpha1, alpha2)` with `Gamma(Z, P_{p,q}) = alpha0 P_{p+1,q} + alpha1 P_{p-1,q+1} + alpha2 P_{p,q-1}`.
pub fn gamma_coeffs<T: Scalar>(lambda: &T, p: u32, q: u32) -> Result<(T, T, T)> {
    let a0 = -T::ratio(i64::from(2 * p + q), 2);
    Ok((
        a0,
        alpha1_fn(p, q).eval(lambda)?,
        alpha2_fn(p, q).eval(lambda)?,
    ))
}

/// Triangular table of `P_{p,q}` for `p + q <= max_degree` at a fixed lambda.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyTable<T> {
    lambda: T,
    max_degree: u32,
    entries: Vec<Poly2<T>>,
}

fn index(p: u32, q: u32) -> usize {
    let d = (p + q) as usize;
    d * (d + 1) / 2 + q as usize
}

impl<T: Scalar> PolyTable<T> {
    /// Fills the table degree by degree: the `Z` recurrence for `q <= p`,
    /// conjugation for `q > p`.
    pub fn build(lambda: &T, max_degree: u32) -> Result<Self> {
        if lambda.to_f64().is_nan() || lambda.to_f64() <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        let mut entries: Vec<Poly2<T>> = Vec::with_capacity(index(max_degree + 1, 0));
        let z = Poly2::<T>::z();
        for d in 0..=max_degree {
            for q in 0..=d {
                let p = d - q;
                let poly = match (p, q) {
                    (0, 0) => Poly2::one(),
                    (1, 0) => Poly2::z(),
                    (0, 1) => Poly2::zbar(),
                    _ if q > p => entries[index(q, p)].conj(),
                    _ => {
                        // P_{p,q} = Z P_{p-1,q} + a1(p-1) P_{p-2,q+1} + a2(p-1,q) P_{p-1,q-1}
                        let get = |a: u32, b: u32| -> &Poly2<T> { &entries[index(a, b)] };
                        let mut out = &z * get(p - 1, q);
                        if p >= 2 {
                            let c = coeff_a1(lambda, p - 1)?;
                            if !c.is_zero() {
                                out += &get(p - 2, q + 1).scale(&c);
                            }
                        }
                        if q >= 1 {
                            let c = coeff_a2(lambda, p - 1, q)?;
                            if !c.is_zero() {
                                out += &get(p - 1, q - 1).scale(&c);
                            }
                        }
                        out
                    }
                };
                entries.push(poly);
            }
        }
        Ok(PolyTable {
            lambda: lambda.clone(),
            max_degree,
            entries,
        })
    }

    pub fn lambda(&self) -> &T {
        &self.lambda
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// `P_{p,q}`; panics when `p + q` exceeds the table degree.
    pub fn get(&self, p: u32, q: u32) -> &Poly2<T> {
        assert!(
            p + q <= self.max_degree,
            "P({p},{q}) outside table of degree {}",
            self.max_degree
        );
        &self.entries[index(p, q)]
    }

    /// Entries as `(p, q, P_{p,q})`, by degree then increasing `q`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, &Poly2<T>)> + '_ {
        (0..=self.max_degree)
            .flat_map(|d| (0..=d).map(move |q| (d - q, q)))
            .map(move |(p, q)| (p, q, self.get(p, q)))
    }

    /// Assembles a table from explicit entries, e.g. after deserialization.
    pub fn from_entries(
        lambda: T,
        max_degree: u32,
        mut cells: Vec<(u32, u32, Poly2<T>)>,
    ) -> Result<Self> {
        let n = index(max_degree + 1, 0);
        if cells.len() != n {
            return Err(Error::Format(format!(
                "expected {n} entries, found {}",
                cells.len()
            )));
        }
        cells.sort_by_key(|(p, q, _)| index(*p, *q));
        for (k, (p, q, _)) in cells.iter().enumerate() {
            if p + q > max_degree || index(*p, *q) != k {
                return Err(Error::Format(format!("unexpected entry ({p},{q})")));
            }
        }
        Ok(PolyTable {
            lambda,
            max_degree,
            entries: cells.into_iter().map(|(_, _, e)| e).collect(),
        })
    }

    /// `P_{p,q+1}` from the `Zbar` recurrence
    /// `P_{p,q+1} = Zbar P_{p,q} + a1(q) P_{p+1,q-1} + a2(q,p) P_{p-1,q}`.
    pub fn zbar_step(&self, p: u32, q: u32) -> Result<Poly2<T>> {
        let mut out = &Poly2::zbar() * self.get(p, q);
        if q >= 1 {
            out += &self.get(p + 1, q - 1).scale(&coeff_a1(&self.lambda, q)?);
        }
        if p >= 1 {
            out += &self.get(p - 1, q).scale(&coeff_a2(&self.lambda, q, p)?);
        }
        Ok(out)
    }
}

/// Builds the exact table for an `AlphaParam`.
pub fn build_table(param: &AlphaParam, max_degree: u32) -> Result<PolyTableQ> {
    PolyTable::build(param.lambda(), max_degree)
}

/// Checks `L P_{p,q} + lambda_{p,q} P_{p,q} = 0` for every cell.
pub fn check_eigen<T: Scalar>(table: &PolyTable<T>) -> CheckReport {
    let g = GammaTable::new();
    let lam = table.lambda();
    let mut report = CheckReport::new(format!("eigen lambda={lam} degree<={}", table.max_degree()));
    for (p, q, poly) in table.iter() {
        let residual = &g.apply_l(lam, poly) + &poly.scale(&eigenvalue(lam, p, q));
        report.record(residual.is_zero(), || {
            format!("P({p},{q}): residual {residual}")
        });
    }
    report
}

/// Checks the three-term expansion of `Gamma(Z, P_{p,q})` and its conjugate.
pub fn check_gamma_recurrence<T: Scalar>(table: &PolyTable<T>) -> CheckReport {
    let g = GammaTable::new();
    let lam = table.lambda();
    let mut report = CheckReport::new(format!("gamma recurrence lambda={lam}"));
    if table.max_degree() == 0 {
        return report;
    }
    let z = Poly2::z();
    let zb = Poly2::zbar();
    for (p, q, poly) in table.iter().filter(|(p, q, _)| p + q < table.max_degree()) {
        let (a0, a1, a2) = match gamma_coeffs(lam, p, q) {
            Ok(c) => c,
            Err(e) => {
                report.fail(format!("({p},{q}): {e}"));
                continue;
            }
        };
        let mut rhs = table.get(p + 1, q).scale(&a0);
        let mut rhs_bar = table.get(q, p + 1).scale(&a0);
        if p >= 1 {
            rhs += &table.get(p - 1, q + 1).scale(&a1);
            rhs_bar += &table.get(q + 1, p - 1).scale(&a1);
        }
        if q >= 1 {
            rhs += &table.get(p, q - 1).scale(&a2);
            rhs_bar += &table.get(q - 1, p).scale(&a2);
        }
        let r = &g.gamma(&z, poly) - &rhs;
        report.record(r.is_zero(), || {
            format!("Gamma(Z, P({p},{q})): residual {r}")
        });
        let r = &g.gamma(&zb, table.get(q, p)) - &rhs_bar;
        report.record(r.is_zero(), || {
            format!("Gamma(Zbar, P({q},{p})): residual {r}")
        });
    }
    report
}

/// Coefficients `d_p` with `P_{m,n} = sum_p d_p P_{m-p,0} P_{0,n-p}`.
pub fn decompose_in_products<T: Scalar>(table: &PolyTable<T>, m: u32, n: u32) -> Result<Vec<T>> {
    if m + n > table.max_degree() {
        return Err(Error::InvalidParameter(format!(
            "P({m},{n}) exceeds table degree {}",
            table.max_degree()
        )));
    }
    let basis: Vec<Poly2<T>> = (0..=m.min(n))
        .map(|p| table.get(m - p, 0) * table.get(0, n - p))
        .collect();
    match express_in(table.get(m, n), &basis) {
        Solution::Unique(d) => Ok(d),
        _ => Err(Error::BasisDeficient { m, n }),
    }
}
