//! Truncated power series in `X` (and `X, Y`) with polynomial coefficients.

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{express_in, Solution};
use crate::operator::{eigenvalue, GammaTable};
use crate::poly2::Poly2;
use crate::ratfn::UPoly;
use crate::recurrence::PolyTable;
use crate::report::CheckReport;
use crate::scalar::{rat, Scalar};
use crate::traces::TraceSeq;
use crate::Rational;

/// `sum_{n <= order} c_n X^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series1<T> {
    coeffs: Vec<Poly2<T>>,
}

impl<T: Scalar> Series1<T> {
    /// Pads with zeros or truncates to `order`.
    pub fn new(mut coeffs: Vec<Poly2<T>>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly2::zero());
        Series1 { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Poly2::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Poly2<T> {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly2<T>] {
        &self.coeffs
    }

    fn zip(&self, o: &Self, f: impl Fn(&Poly2<T>, &Poly2<T>) -> Poly2<T>) -> Self {
        let n = self.order().min(o.order());
        Series1 {
            coeffs: (0..=n).map(|k| f(&self.coeffs[k], &o.coeffs[k])).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![Poly2::zero(); n + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(n + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in o.coeffs.iter().enumerate().take(n + 1 - a) {
                out[a + b] += &(ca * cb);
            }
        }
        Series1 { coeffs: out }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn map(&self, f: impl Fn(&Poly2<T>) -> Poly2<T>) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Derivative in `X`; the result has order one less.
    pub fn derivative(&self) -> Self {
        let n = self.order().max(1) - 1;
        Series1::new(
            (1..self.coeffs.len())
                .map(|k| self.coeffs[k].scale(&T::from_i64(k as i64)))
                .collect(),
            n,
        )
    }

    /// Multiplies by `X^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut c = vec![Poly2::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Series1::new(c, self.order())
    }

    fn check_unit(&self) -> Result<()> {
        if self.coeffs[0] != Poly2::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        Ok(())
    }

    /// `1/s` for a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        self.check_unit()?;
        let mut r: Vec<Poly2<T>> = vec![Poly2::one()];
        for n in 1..=self.order() {
            let mut acc = Poly2::zero();
            for k in 1..=n {
                acc -= &(&self.coeffs[k] * &r[n - k]);
            }
            r.push(acc);
        }
        Ok(Series1 { coeffs: r })
    }

    /// `s^beta` with constant term 1, from `Q' s = beta s' Q` order by order.
    pub fn pow_beta(&self, beta: &T) -> Result<Self> {
        self.check_unit()?;
        let mut q: Vec<Poly2<T>> = vec![Poly2::one()];
        for n in 1..=self.order() {
            let mut acc = Poly2::zero();
            for k in 1..=n {
                let c = beta.clone() * T::from_i64(k as i64) - T::from_i64((n - k) as i64);
                if !c.is_zero() && !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &q[n - k]).scale(&c);
                }
            }
            q.push(acc.scale(&(T::one() / T::from_i64(n as i64))));
        }
        Ok(Series1 { coeffs: q })
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        self.check_unit()?;
        let mut l: Vec<Poly2<T>> = vec![Poly2::zero()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].scale(&T::from_i64(n as i64));
            for k in 1..n {
                acc -= &(&l[k] * &self.coeffs[n - k]).scale(&T::from_i64(k as i64));
            }
            l.push(acc.scale(&(T::one() / T::from_i64(n as i64))));
        }
        Ok(Series1 { coeffs: l })
    }
}

/// `P(X) = 1 - 3 Zbar X + 3 Z X^2 - X^3`.
pub fn poly_p_of_x<T: Scalar>(order: usize) -> Series1<T> {
    Series1::new(
        vec![
            Poly2::one(),
            Poly2::monomial(0, 1, T::from_i64(-3)),
            Poly2::monomial(1, 0, T::from_i64(3)),
            Poly2::constant(-T::one()),
        ],
        order,
    )
}

/// `Pbar(Y) = 1 - 3 Z Y + 3 Zbar Y^2 - Y^3`.
pub fn poly_pbar_of_y<T: Scalar>(order: usize) -> Series1<T> {
    poly_p_of_x(order).map(Poly2::conj)
}

/// `sum_{a <= nx, b <= ny} c_{a,b} X^a Y^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series2<T> {
    nx: usize,
    ny: usize,
    coeffs: Vec<Vec<Poly2<T>>>,
}

impl<T: Scalar> Series2<T> {
    pub fn zero(nx: usize, ny: usize) -> Self {
        Series2 {
            nx,
            ny,
            coeffs: vec![vec![Poly2::zero(); ny + 1]; nx + 1],
        }
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        s.coeffs[0][0] = Poly2::one();
        s
    }

    /// `c X^a Y^b`.
    pub fn term(nx: usize, ny: usize, a: usize, b: usize, c: Poly2<T>) -> Self {
        let mut s = Self::zero(nx, ny);
        if a <= nx && b <= ny {
            s.coeffs[a][b] = c;
        }
        s
    }

    pub fn from_x(s: &Series1<T>, ny: usize) -> Self {
        let mut out = Self::zero(s.order(), ny);
        for (a, c) in s.coeffs().iter().enumerate() {
            out.coeffs[a][0] = c.clone();
        }
        out
    }

    pub fn from_y(s: &Series1<T>, nx: usize) -> Self {
        let mut out = Self::zero(nx, s.order());
        for (b, c) in s.coeffs().iter().enumerate() {
            out.coeffs[0][b] = c.clone();
        }
        out
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn coeff(&self, a: usize, b: usize) -> &Poly2<T> {
        &self.coeffs[a][b]
    }

    fn zip(&self, o: &Self, f: impl Fn(&Poly2<T>, &Poly2<T>) -> Poly2<T>) -> Self {
        let (nx, ny) = (self.nx.min(o.nx), self.ny.min(o.ny));
        Series2 {
            nx,
            ny,
            coeffs: (0..=nx)
                .map(|a| {
                    (0..=ny)
                        .map(|b| f(&self.coeffs[a][b], &o.coeffs[a][b]))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (nx, ny) = (self.nx.min(o.nx), self.ny.min(o.ny));
        let mut out = Self::zero(nx, ny);
        for a in 0..=nx {
            for b in 0..=ny {
                let x = &self.coeffs[a][b];
                if x.is_zero() {
                    continue;
                }
                for c in 0..=nx - a {
                    for d in 0..=ny - b {
                        let y = &o.coeffs[c][d];
                        if !y.is_zero() {
                            out.coeffs[a + c][b + d] += &(x * y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|_, _, p| p.scale(c))
    }

    /// Applies `f(a, b, c_{a,b})` to every coefficient.
    pub fn map(&self, f: impl Fn(usize, usize, &Poly2<T>) -> Poly2<T>) -> Self {
        Series2 {
            nx: self.nx,
            ny: self.ny,
            coeffs: (0..=self.nx)
                .map(|a| (0..=self.ny).map(|b| f(a, b, &self.coeffs[a][b])).collect())
                .collect(),
        }
    }

    /// `1/s` for a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0][0] != Poly2::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut r = Self::zero(self.nx, self.ny);
        for a in 0..=self.nx {
            for b in 0..=self.ny {
                if a == 0 && b == 0 {
                    r.coeffs[0][0] = Poly2::one();
                    continue;
                }
                let mut acc = Poly2::zero();
                for c in 0..=a {
                    for d in 0..=b {
                        if (c, d) == (0, 0) || self.coeffs[c][d].is_zero() {
                            continue;
                        }
                        acc -= &(&self.coeffs[c][d] * &r.coeffs[a - c][b - d]);
                    }
                }
                r.coeffs[a][b] = acc;
            }
        }
        Ok(r)
    }

    /// Coefficient-wise `L` plus `L0 = lambda(X d/dX + Y d/dY) + X^2 d2/dX2 + Y^2 d2/dY2 + XY d2/dXdY`.
    pub fn hat_l(&self, lambda: &T) -> Self {
        let g = GammaTable::new();
        self.map(|a, b, c| {
            let (a, b) = (a as i64, b as i64);
            let l0 = lambda.clone() * T::from_i64(a + b)
                + T::from_i64(a * (a - 1) + b * (b - 1) + a * b);
            &g.apply_l(lambda, c) + &c.scale(&l0)
        })
    }
}

/// `Gamma(F(X), G(Y)) = sum_{a,b} Gamma(F_a, G_b) X^a Y^b`.
pub fn gamma_outer<T: Scalar>(f: &Series1<T>, g: &Series1<T>) -> Series2<T> {
    let t = GammaTable::new();
    let mut out = Series2::zero(f.order(), g.order());
    for (a, fa) in f.coeffs().iter().enumerate() {
        for (b, gb) in g.coeffs().iter().enumerate() {
            out.coeffs[a][b] = t.gamma(fa, gb);
        }
    }
    out
}

/// `c_n = (-3)^n beta(beta - 1)...(beta - n + 1) / n!`.
pub fn c_n<T: Scalar>(beta: &T, n: u32) -> T {
    let mut c = T::one();
    for k in 0..n {
        let k = i64::from(k);
        c = c * T::from_i64(-3) * (beta.clone() - T::from_i64(k)) / T::from_i64(k + 1);
    }
    c
}

/// Scalar `s` with `a = s b`, if one exists.
fn proportional<T: Scalar>(a: &Poly2<T>, b: &Poly2<T>) -> Option<T> {
    match express_in(a, std::slice::from_ref(b)) {
        Solution::Unique(v) => v.into_iter().next(),
        _ => None,
    }
}

/// `Q(X) = P(X)^beta`, or `log P(X)` when `beta = 0`, truncated at `order`.
pub fn generating_series<T: Scalar>(lambda: &T, order: usize) -> Result<Series1<T>> {
    let beta = (T::one() - lambda.clone()) / T::from_i64(3);
    let p = poly_p_of_x(order);
    if beta.is_zero() {
        p.log()
    } else {
        p.pow_beta(&beta)
    }
}

/// Checks `A_n = c_n P_{0,n}` for `n <= order`; in the flat case checks that the
/// log-series coefficients are multiples of `P_{0,n}` and reports the scalars.
pub fn check_generating(table: &PolyTable<Rational>, order: u32) -> CheckReport {
    let lam = table.lambda().clone();
    let beta = (Rational::from_integer(1.into()) - &lam) / rat(3, 1);
    let mut report = CheckReport::new(format!("generating function lambda={lam} order={order}"));
    let q = match generating_series(&lam, order as usize) {
        Ok(q) => q,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    for n in 0..=order.min(table.max_degree()) {
        let a = q.coeff(n as usize);
        let p = table.get(0, n);
        if beta.is_zero() {
            if n == 0 {
                report.record(a.is_zero(), || format!("log constant term {a}"));
                continue;
            }
            match proportional(a, p) {
                Some(s) => {
                    report.checked += 1;
                    report.note(format!("A_{n} = {s} P(0,{n})"));
                }
                None => report.fail(format!("A_{n} = {a} is not a multiple of P(0,{n})")),
            }
        } else {
            let r = a - &p.scale(&c_n(&beta, n));
            report.record(r.is_zero(), || format!("A_{n} - c_{n} P(0,{n}) = {r}"));
        }
    }
    report
}

/// Checks the action of `L` and `Gamma` on `P(X)` and `Pbar(Y)`:
/// `L P = -lambda X P' + (lambda/2) X^2 P''`, `Gamma(P(X), P(X)) = (X^2/2)(3 P P'' - 2 P'^2)`,
/// and the two-variable formulas with their denominators cleared.
pub fn check_l_action_on_p(lambda: &Rational) -> CheckReport {
    let mut report = CheckReport::new(format!("L and Gamma on P(X), lambda={lambda}"));
    let n = 8;
    let g = GammaTable::<Rational>::new();
    let p = poly_p_of_x::<Rational>(n);
    let dp = p.derivative();
    let ddp = dp.derivative();
    let up = |s: &Series1<Rational>| Series1::new(s.coeffs().to_vec(), n);
    let (dp, ddp) = (up(&dp), up(&ddp));
    let half = rat(1, 2);

    let lhs = p.map(|c| g.apply_l(lambda, c));
    let rhs = dp
        .shift(1)
        .scale(&-lambda.clone())
        .add(&ddp.shift(2).scale(&(lambda * &half)));
    report.record(lhs == rhs, || "L P(X)".into());

    let lhs = {
        let s = gamma_outer(&p, &p);
        // restrict to the diagonal X = Y
        let mut d = Series1::zero(n);
        for a in 0..=n {
            for b in 0..=n - a {
                d.coeffs[a + b] += s.coeff(a, b);
            }
        }
        d
    };
    let rhs = p
        .mul(&ddp)
        .scale(&rat(3, 1))
        .sub(&dp.mul(&dp).scale(&rat(2, 1)))
        .shift(2)
        .scale(&half);
    report.record(lhs == rhs, || "Gamma(P(X), P(X))".into());

    // (X - Y) Gamma(P(X), P(Y)) = (XY/2)((X - Y) P'(X) P'(Y) + 3(P'(X) P(Y) - P(X) P'(Y)))
    let x = |s: &Series1<Rational>| Series2::from_x(s, n);
    let y = |s: &Series1<Rational>| Series2::from_y(s, n);
    let one = Poly2::one();
    let xm = Series2::term(n, n, 1, 0, one.clone());
    let ym = Series2::term(n, n, 0, 1, one.clone());
    let xy = Series2::term(n, n, 1, 1, one.clone());
    let x_minus_y = xm.sub(&ym);
    let lhs = x_minus_y.mul(&gamma_outer(&p, &p));
    let inner = x_minus_y.mul(&x(&dp)).mul(&y(&dp)).add(
        &x(&dp)
            .mul(&y(&p))
            .sub(&x(&p).mul(&y(&dp)))
            .scale(&rat(3, 1)),
    );
    let rhs = xy.mul(&inner).scale(&half);
    report.record(lhs == rhs, || "Gamma(P(X), P(Y))".into());

    // 2(XY - 1) Gamma(P(X), Pbar(Y)) = XY(3X P' Pbar + 3Y Pbar' P - 9 P Pbar - (XY - 1) P' Pbar')
    let pb = poly_pbar_of_y::<Rational>(n);
    let dpb = up(&pb.derivative());
    let xy_minus_1 = xy.sub(&Series2::one(n, n));
    let lhs = xy_minus_1.mul(&gamma_outer(&p, &pb)).scale(&rat(2, 1));
    let inner = xm
        .mul(&x(&dp))
        .mul(&y(&pb))
        .scale(&rat(3, 1))
        .add(&ym.mul(&y(&dpb)).mul(&x(&p)).scale(&rat(3, 1)))
        .sub(&x(&p).mul(&y(&pb)).scale(&rat(9, 1)))
        .sub(&xy_minus_1.mul(&x(&dp)).mul(&y(&dpb)));
    let rhs = xy.mul(&inner);
    report.record(lhs == rhs, || "Gamma(P(X), Pbar(Y))".into());
    report
}

/// Checks `(XY - 1) Lhat(Q(X) Qbar(Y)) = 3 beta^2 XY Q Qbar (X S + Y Sbar - 3)` with
/// `S = P'/P (X)`, `Sbar = Pbar'/Pbar (Y)`, for `lambda != 1`.
pub fn check_hat_l_product(lambda: &Rational, nx: usize, ny: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("Lhat(Q Qbar) lambda={lambda} order=({nx},{ny})"));
    let beta = (Rational::from_integer(1.into()) - lambda) / rat(3, 1);
    if beta.is_zero() {
        report.fail("requires lambda != 1");
        return report;
    }
    let run = || -> Result<bool> {
        let q = poly_p_of_x::<Rational>(nx).pow_beta(&beta)?;
        let qb = poly_pbar_of_y::<Rational>(ny).pow_beta(&beta)?;
        let p = poly_p_of_x::<Rational>(nx);
        let pb = poly_pbar_of_y::<Rational>(ny);
        let s = Series1::new(p.derivative().coeffs().to_vec(), nx).mul(&p.inverse()?);
        let sb = Series1::new(pb.derivative().coeffs().to_vec(), ny).mul(&pb.inverse()?);
        let qq = Series2::from_x(&q, ny).mul(&Series2::from_y(&qb, nx));
        let one = Poly2::one();
        let xy = Series2::term(nx, ny, 1, 1, one.clone());
        let lhs = xy.sub(&Series2::one(nx, ny)).mul(&qq.hat_l(lambda));
        let bracket = Series2::from_x(&s.shift(1), ny)
            .add(&Series2::from_y(&sb.shift(1), nx))
            .sub(&Series2::one(nx, ny).scale(&rat(3, 1)));
        let rhs = xy
            .mul(&qq)
            .mul(&bracket)
            .scale(&(rat(3, 1) * &beta * &beta));
        Ok(lhs == rhs)
    };
    match run() {
        Ok(ok) => report.record(ok, || "identity fails".into()),
        Err(e) => report.fail(e.to_string()),
    }
    report
}

/// `delta_{n,m} = (1 - lambda)(lambda + n + m - 3) - lambda_{n-1,m-1}`.
pub fn delta_nm<T: Scalar>(lambda: &T, n: u32, m: u32) -> T {
    let (ni, mi) = (i64::from(n), i64::from(m));
    (T::one() - lambda.clone()) * (lambda.clone() + T::from_i64(ni + mi - 3))
        - eigenvalue(lambda, n - 1, m - 1)
}

/// Checks `L(A_n B_m - A_{n-1} B_{m-1}) = -lambda_{n,m} A_n B_m - delta_{n,m} A_{n-1} B_{m-1}`
/// for `1 <= n, m <= max`, where `B_m` are the coefficients of `Qbar(Y)`.
pub fn check_delta_identity(lambda: &Rational, max: u32) -> CheckReport {
    let mut report = CheckReport::new(format!("A_n B_m identity lambda={lambda}"));
    let q = match generating_series(lambda, max as usize) {
        Ok(q) => q,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    let g = GammaTable::new();
    let a = |n: u32| q.coeff(n as usize).clone();
    let b = |m: u32| q.coeff(m as usize).conj();
    for n in 1..=max {
        for m in 1..=max {
            let top = a(n) * b(m);
            let low = a(n - 1) * b(m - 1);
            let lhs = g.apply_l(lambda, &(&top - &low));
            let rhs = &top.scale(&-eigenvalue(lambda, n, m)) - &low.scale(&delta_nm(lambda, n, m));
            report.record(lhs == rhs, || format!("(n,m)=({n},{m})"));
        }
    }
    report
}

/// Coefficient-wise check of the flat bivariate generating function against
/// `T_p T_{-q} - T_{p-q}` for `p, q <= n`.
pub fn geometric_genfun_flat(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "flat bivariate generating function, indices <= {n}"
    ));
    let run = || -> Result<Series2<Rational>> {
        // sum_p T_p X^p = 3 - X Pbar'(X)/Pbar(X), Pbar(X) = 1 - 3Z X + 3Zbar X^2 - X^3
        let pbx = poly_pbar_of_y::<Rational>(n);
        let py = poly_p_of_x::<Rational>(n);
        let log_deriv = |s: &Series1<Rational>| -> Result<Series1<Rational>> {
            let d = Series1::new(s.derivative().coeffs().to_vec(), n);
            Ok(d.mul(&s.inverse()?).shift(1))
        };
        let u = log_deriv(&pbx)?;
        let v = log_deriv(&py)?;
        let three = Series1::one(n).scale(&rat(3, 1));
        let tx = Series2::from_x(&three.sub(&u), n);
        let ty = Series2::from_y(&three.sub(&v), n);
        let xy = Series2::term(n, n, 1, 1, Poly2::one());
        let inv = Series2::one(n, n).sub(&xy).inverse()?;
        let bracket = Series2::from_x(&u, n)
            .add(&Series2::from_y(&v, n))
            .sub(&Series2::one(n, n).scale(&rat(3, 1)));
        Ok(tx.mul(&ty).add(&inv.mul(&bracket)))
    };
    let g = match run() {
        Ok(g) => g,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    let mut t = TraceSeq::<Rational>::new();
    for p in 0..=n {
        for q in 0..=n {
            let (pi, qi) = (p as i64, q as i64);
            let s = &(t.trace(pi) * t.trace(-qi)) - &t.trace(pi - qi);
            report.record(g.coeff(p, q) == &s, || format!("coefficient X^{p} Y^{q}"));
        }
    }
    report
}

/// Expands `(1 - XY) / ((1 - 3XZ + 3X^2 Zbar - X^3)(1 - 3Y Zbar + 3Y^2 Z - Y^3))` and
/// checks each coefficient of `X^m Y^n` is a multiple of `P_{m,n}` in the given table.
/// Returns the report and the grid of scalars.
pub fn geometric_genfun_su3(
    n: usize,
    table: &PolyTable<Rational>,
) -> (CheckReport, Vec<Vec<Option<Rational>>>) {
    let mut report = CheckReport::new(format!(
        "lambda=4 bivariate generating function, indices <= {n}"
    ));
    let mut scalars = vec![vec![None; n + 1]; n + 1];
    let run = || -> Result<Series2<Rational>> {
        let dx = Series2::from_x(&poly_pbar_of_y::<Rational>(n), n);
        let dy = Series2::from_y(&poly_p_of_x::<Rational>(n), n);
        let xy = Series2::term(n, n, 1, 1, Poly2::one());
        Ok(Series2::one(n, n).sub(&xy).mul(&dx.mul(&dy).inverse()?))
    };
    let g = match run() {
        Ok(g) => g,
        Err(e) => {
            report.fail(e.to_string());
            return (report, scalars);
        }
    };
    let beta = rat(-1, 1);
    for m in 0..=n {
        for k in 0..=n {
            if (m + k) as u32 > table.max_degree() {
                report.fail(format!("table degree too small for ({m},{k})"));
                continue;
            }
            match proportional(g.coeff(m, k), table.get(m as u32, k as u32)) {
                Some(s) => {
                    if k == 0 {
                        let c = c_n(&beta, m as u32);
                        report.record(s == c, || {
                            format!("scalar at ({m},0) is {s}, expected c_{m} = {c}")
                        });
                    } else {
                        report.checked += 1;
                    }
                    scalars[m][k] = Some(s);
                }
                None => report.fail(format!(
                    "coefficient X^{m} Y^{k} is not a multiple of P({m},{k})"
                )),
            }
        }
    }
    (report, scalars)
}

/// Compatibility of `F' + beta F/(u - 1) = 0` with
/// `3u F'' + (2 lambda + 1) F' - 9 beta^2 F/(u - 1) = 0`, `beta = (1 - lambda)/3`.
///
/// The first equation gives `F' = -beta F/(u-1)` and `F'' = beta(beta+1) F/(u-1)^2`;
/// substituting into `(u-1)^2` times the second leaves `R(u) F` with `R` linear in
/// `u`. The system has a common nonzero solution iff `R` vanishes identically.
/// Returns `R`.
pub fn f_compatibility_residual(lambda: &Rational) -> UPoly {
    let beta = (Rational::from_integer(1.into()) - lambda) / rat(3, 1);
    let u = UPoly::linear(0, 1);
    let u_minus_1 = UPoly::linear(-1, 1);
    let fpp = UPoly::constant(&beta * (&beta + rat(1, 1)));
    let fp = u_minus_1.scale(&-beta.clone());
    let f = u_minus_1.scale(&(rat(-9, 1) * &beta * &beta));
    // (u-1)^2 [3u F'' + (2 lambda + 1) F' - 9 beta^2 F/(u-1)] / F
    u.mul(&fpp)
        .scale(&rat(3, 1))
        .add(&fp.scale(&(lambda * rat(2, 1) + rat(1, 1))))
        .add(&f)
}

pub fn f_compatible(lambda: &Rational) -> bool {
    f_compatibility_residual(lambda).is_zero()
}
