//! Carré du champ and generator in the scaled complex coordinates.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly2::{Poly2, Var};
use crate::scalar::{rat, Scalar};
use crate::{Poly2Q, Rational};

/// The weight exponent `alpha` together with `lambda = (6 alpha + 5)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaParam {
    alpha: Rational,
    lambda: Rational,
}

impl AlphaParam {
    pub fn from_alpha(alpha: Rational) -> Result<Self> {
        let lambda = (&alpha * rat(6, 1) + rat(5, 1)) / rat(2, 1);
        Self::checked(alpha, lambda)
    }

    pub fn from_lambda(lambda: Rational) -> Result<Self> {
        let alpha = (&lambda * rat(2, 1) - rat(5, 1)) / rat(6, 1);
        Self::checked(alpha, lambda)
    }

    fn checked(alpha: Rational, lambda: Rational) -> Result<Self> {
        if lambda <= Rational::zero() {
            return Err(Error::InvalidParameter(format!(
                "lambda must be positive (alpha > -5/6), got lambda = {lambda}"
            )));
        }
        Ok(AlphaParam { alpha, lambda })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn lambda_as<T: Scalar>(&self) -> T {
        T::from_rational(&self.lambda)
    }

    /// Exponent of the one-variable generating function, `(1 - lambda)/3`.
    pub fn beta(&self) -> Rational {
        (Rational::one() - &self.lambda) / rat(3, 1)
    }
}

/// Structure polynomials of Gamma: `Gamma(Z,Z)`, `Gamma(Z,Zbar)`, `Gamma(Zbar,Zbar)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaTable<T> {
    pub gzz: Poly2<T>,
    pub gzzbar: Poly2<T>,
    pub gbarbar: Poly2<T>,
}

impl<T: Scalar> Default for GammaTable<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> GammaTable<T> {
    pub fn new() -> Self {
        let one = T::one();
        let half = T::ratio(1, 2);
        GammaTable {
            gzz: Poly2::from_terms([(0, 1, one.clone()), (2, 0, -one.clone())]),
            gzzbar: Poly2::from_terms([(0, 0, half.clone()), (1, 1, -half)]),
            gbarbar: Poly2::from_terms([(1, 0, one.clone()), (0, 2, -one)]),
        }
    }

    pub fn gamma(&self, f: &Poly2<T>, g: &Poly2<T>) -> Poly2<T> {
        let (fz, fb) = (f.partial(Var::Z), f.partial(Var::Zbar));
        let (gz, gb) = (g.partial(Var::Z), g.partial(Var::Zbar));
        let mixed = &(&fz * &gb) + &(&fb * &gz);
        &(&(&self.gzz * &(&fz * &gz)) + &(&self.gbarbar * &(&fb * &gb))) + &(&self.gzzbar * &mixed)
    }

    pub fn apply_l(&self, lambda: &T, f: &Poly2<T>) -> Poly2<T> {
        let fz = f.partial(Var::Z);
        let fb = f.partial(Var::Zbar);
        let second = &(&(&self.gzz * &fz.partial(Var::Z))
            + &(&self.gbarbar * &fb.partial(Var::Zbar)))
            + &(&self.gzzbar * &fz.partial(Var::Zbar)).scale(&T::from_i64(2));
        &second - &f.euler().scale(lambda)
    }
}

/// `Gamma(f, g)` for the scaled deltoid operator.
pub fn gamma<T: Scalar>(f: &Poly2<T>, g: &Poly2<T>) -> Poly2<T> {
    GammaTable::new().gamma(f, g)
}

/// `L f = Gamma-weighted second derivatives - lambda (Z f_Z + Zbar f_Zbar)`.
pub fn apply_l<T: Scalar>(lambda: &T, f: &Poly2<T>) -> Poly2<T> {
    GammaTable::new().apply_l(lambda, f)
}

/// `lambda_{p,q} = (lambda - 1)(p + q) + p^2 + q^2 + pq`.
pub fn eigenvalue<T: Scalar>(lambda: &T, p: u32, q: u32) -> T {
    let (p64, q64) = (i64::from(p), i64::from(q));
    (lambda.clone() - T::one()) * T::from_i64(p64 + q64)
        + T::from_i64(p64 * p64 + q64 * q64 + p64 * q64)
}

/// `L_{l1} f - L_{l2} f + (l1 - l2)(Z f_Z + Zbar f_Zbar)`, which must vanish.
pub fn alpha_shift_check<T: Scalar>(f: &Poly2<T>, l1: &T, l2: &T) -> Poly2<T> {
    let t = GammaTable::new();
    let diff = &t.apply_l(l1, f) - &t.apply_l(l2, f);
    &diff + &f.euler().scale(&(l1.clone() - l2.clone()))
}

/// `Gamma(Z,Zbar)^2 - Gamma(Z,Z) Gamma(Zbar,Zbar)`; positive inside the deltoid.
pub fn discriminant<T: Scalar>() -> Poly2<T> {
    let t = GammaTable::<T>::new();
    &(&t.gzzbar * &t.gzzbar) - &(&t.gzz * &t.gbarbar)
}

/// The boundary polynomial `12(W^3 + Wbar^3) - 3 W^2 Wbar^2 - 54 W Wbar + 81`
/// in the unscaled coordinate `W = 3Z`.
pub fn boundary_rho() -> Poly2Q {
    Poly2::from_terms([
        (3, 0, rat(12, 1)),
        (0, 3, rat(12, 1)),
        (2, 2, rat(-3, 1)),
        (1, 1, rat(-54, 1)),
        (0, 0, rat(81, 1)),
    ])
}

/// `boundary_rho(W) = RHO_SCALE * discriminant(W/3)`.
pub const RHO_SCALE: i64 = 324;

/// Gamma in the unscaled coordinate `W = 3Z` with the original normalization,
/// whose generator is `4 L` after the substitution.
pub fn unscaled_gamma_table() -> GammaTable<Rational> {
    GammaTable {
        gzz: Poly2::from_terms([(0, 1, rat(12, 1)), (2, 0, rat(-4, 1))]),
        gzzbar: Poly2::from_terms([(0, 0, rat(18, 1)), (1, 1, rat(-2, 1))]),
        gbarbar: Poly2::from_terms([(1, 0, rat(12, 1)), (0, 2, rat(-4, 1))]),
    }
}

/// Polynomial in the real coordinates `x1`, `x2`, keyed by `(power of x1, power of x2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> RealPoly<T> {
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, T)>>(terms: I) -> Self {
        let mut map: BTreeMap<(u32, u32), T> = BTreeMap::new();
        for (a, b, c) in terms {
            let v = map.remove(&(a, b)).unwrap_or_else(T::zero) + c;
            if !v.is_zero() {
                map.insert((a, b), v);
            }
        }
        RealPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> T {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &T)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .chain(o.terms())
                .map(|((a, b), c)| (a, b, c.clone())),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(
            self.terms()
                .map(|((a, b), v)| (a, b, v.clone() * c.clone())),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_terms(self.terms().flat_map(|((a, b), c)| {
            o.terms()
                .map(move |((a2, b2), c2)| (a + a2, b + b2, c.clone() * c2.clone()))
        }))
    }
}

/// Substitutes `Z = x1 + i x2`, `Zbar = x1 - i x2`; returns (real part, imaginary part).
pub fn to_real<T: Scalar>(f: &Poly2<T>) -> (RealPoly<T>, RealPoly<T>) {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (m, c) in f.terms() {
        // (x1 + i x2)^i (x1 - i x2)^j: expand with binomials, tracking powers of i
        for a in 0..=m.i {
            for b in 0..=m.j {
                let k = a + b;
                let sign_b = if b % 2 == 0 { 1 } else { -1 };
                let coef = c.clone() * T::from_i64(binomial(m.i, a) * binomial(m.j, b) * sign_b);
                let (x1p, x2p) = (m.i + m.j - k, k);
                match k % 4 {
                    0 => re.push((x1p, x2p, coef)),
                    1 => im.push((x1p, x2p, coef)),
                    2 => re.push((x1p, x2p, -coef)),
                    _ => im.push((x1p, x2p, -coef)),
                }
            }
        }
    }
    (RealPoly::from_terms(re), RealPoly::from_terms(im))
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * i64::from(n - t) / i64::from(t + 1))
}

/// Real metric `(g11, g12, g22)` of the unscaled operator, in `x1`, `x2`.
pub fn real_metric() -> (RealPoly<Rational>, RealPoly<Rational>, RealPoly<Rational>) {
    let g11 = RealPoly::from_terms([
        (2, 0, rat(-3, 1)),
        (0, 2, rat(1, 1)),
        (1, 0, rat(6, 1)),
        (0, 0, rat(9, 1)),
    ]);
    let g12 = RealPoly::from_terms([(1, 1, rat(-4, 1)), (0, 1, rat(-6, 1))]);
    let g22 = RealPoly::from_terms([
        (0, 2, rat(-3, 1)),
        (2, 0, rat(1, 1)),
        (1, 0, rat(-6, 1)),
        (0, 0, rat(9, 1)),
    ]);
    (g11, g12, g22)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ComplexF;

    fn z() -> Poly2Q {
        Poly2::z()
    }
    fn zb() -> Poly2Q {
        Poly2::zbar()
    }

    #[test]
    fn gamma_on_coordinates() {
        assert_eq!(gamma(&z(), &z()), &zb() - &(&z() * &z()));
        assert!(gamma(&z(), &Poly2::one()).is_zero());
        let zzb = &z() * &zb();
        let expect = &(&zb() * &(&zb() - &(&z() * &z())))
            + &(&z() * &(&Poly2::one() - &zzb)).scale(&rat(1, 2));
        assert_eq!(gamma(&zzb, &z()), expect);
    }

    #[test]
    fn generator_examples() {
        let l = rat(7, 3);
        assert_eq!(apply_l(&l, &z()), z().scale(&(-l.clone())));
        assert!(apply_l(&l, &Poly2::one()).is_zero());
        let p11 = &(&z() * &zb()) - &Poly2::constant(rat(1, 3));
        assert_eq!(apply_l(&rat(1, 1), &p11), p11.scale(&rat(-3, 1)));
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(eigenvalue(&rat(5, 2), 0, 0), rat(0, 1));
        assert_eq!(eigenvalue(&rat(5, 2), 1, 0), rat(5, 2));
        assert_eq!(eigenvalue(&rat(4, 1), 2, 1), rat(16, 1));
    }

    #[test]
    fn alpha_and_lambda_agree() {
        let p = AlphaParam::from_alpha(rat(1, 2)).unwrap();
        assert_eq!(p.lambda(), &rat(4, 1));
        assert_eq!(p.beta(), rat(-1, 1));
        let q = AlphaParam::from_lambda(rat(1, 1)).unwrap();
        assert_eq!(q.alpha(), &rat(-1, 2));
        assert!(AlphaParam::from_lambda(rat(0, 1)).is_err());
        assert!(AlphaParam::from_alpha(rat(-5, 6)).is_err());
    }

    #[test]
    fn shift_identity() {
        let f = Poly2::monomial(3, 1, rat(1, 1));
        assert!(alpha_shift_check(&f, &rat(1, 1), &rat(4, 1)).is_zero());
    }

    #[test]
    fn discriminant_values() {
        let d = discriminant::<Rational>();
        assert_eq!(d.coeff(0, 0), rat(1, 4));
        assert!(d.eval(ComplexF::new(1.0, 0.0)).norm() < 1e-14);
        // the scaled cusps are roots
        let w = ComplexF::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!(d.eval(w).norm() < 1e-14);
    }

    #[test]
    fn rho_is_scaled_discriminant() {
        let d = discriminant::<Rational>().dilate(&rat(1, 3));
        assert_eq!(d.scale(&rat(RHO_SCALE, 1)), boundary_rho());
    }

    #[test]
    fn real_conversion() {
        let (re, im) = to_real(&(&z() + &zb()));
        assert_eq!(re, RealPoly::from_terms([(1, 0, rat(2, 1))]));
        assert!(im.is_zero());
        let (re, im) = to_real(&(&z() * &zb()));
        assert_eq!(
            re,
            RealPoly::from_terms([(2, 0, rat(1, 1)), (0, 2, rat(1, 1))])
        );
        assert!(im.is_zero());
        let (re, im) = to_real(&z().pow(2));
        assert_eq!(
            re,
            RealPoly::from_terms([(2, 0, rat(1, 1)), (0, 2, rat(-1, 1))])
        );
        assert_eq!(im, RealPoly::from_terms([(1, 1, rat(2, 1))]));
    }
}
