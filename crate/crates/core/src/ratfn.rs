//! Univariate rational functions in the parameter lambda with exact cancellation.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The polynomial `a + b*x`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::new(vec![
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        ])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in o.coeffs.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// Euclidean division: `(q, r)` with `self = q*d + r`.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.lead().cloned().unwrap_or_else(Rational::one);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (t, dc) in d.coeffs.iter().enumerate() {
                    r[k + t] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.lead().cloned() {
            Some(l) => a.scale(&(Rational::one() / l)),
            None => a,
        }
    }

    pub fn eval<T: Scalar>(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + T::from_rational(c);
        }
        acc
    }

    /// Rational roots, by the rational root test on an integer multiple.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let ints = primitive_integer(self);
        let mut roots = Vec::new();
        if ints.is_empty() {
            return roots;
        }
        let mut ints = ints;
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            let k = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
            ints.drain(..k);
        }
        if ints.len() < 2 {
            return roots;
        }
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let p = UPoly::new(
            ints.iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for s in [1i64, -1] {
                    let r = Rational::new(&num * BigInt::from(s), den.clone());
                    if p.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= *n {
        if (n % &k).is_zero() {
            out.push(k.clone());
            let other = n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out
}

/// Clears denominators and content; leading coefficient positive.
fn primitive_integer(p: &UPoly) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    for c in &mut ints {
        *c = &*c / &g * &sign;
    }
    ints
}

/// Reduced ratio of integer polynomials in lambda.
///
/// Numerator and denominator are coprime integer polynomials, the denominator
/// has a positive leading coefficient, and a zero function is stored as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

impl RationalFn {
    pub fn new(num: &UPoly, den: &UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFn {
                num: Vec::new(),
                den: vec![BigInt::one()],
            };
        }
        let g = num.gcd(den);
        let n = num.div_rem(&g).0;
        let d = den.div_rem(&g).0;
        // n/d = (c_n * N) / (c_d * D) with N, D primitive integer polynomials
        let ni = primitive_integer(&n);
        let di = primitive_integer(&d);
        let to_q = |v: &[BigInt]| {
            UPoly::new(
                v.iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect(),
            )
        };
        let cn = n.lead().cloned().unwrap_or_else(Rational::one)
            / to_q(&ni).lead().cloned().unwrap_or_else(Rational::one);
        let cd = d.lead().cloned().unwrap_or_else(Rational::one)
            / to_q(&di).lead().cloned().unwrap_or_else(Rational::one);
        let c = cn / cd;
        let num: Vec<BigInt> = ni.iter().map(|v| v * c.numer()).collect();
        let den: Vec<BigInt> = di.iter().map(|v| v * c.denom()).collect();
        RationalFn { num, den }
    }

    pub fn from_upoly(p: &UPoly) -> Self {
        Self::new(p, &UPoly::from_int(1))
    }

    pub fn numerator(&self) -> UPoly {
        UPoly::new(
            self.num
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn denominator(&self) -> UPoly {
        UPoly::new(
            self.den
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn mul(&self, o: &RationalFn) -> RationalFn {
        RationalFn::new(
            &self.numerator().mul(&o.numerator()),
            &self.denominator().mul(&o.denominator()),
        )
    }

    pub fn add(&self, o: &RationalFn) -> RationalFn {
        let n = self
            .numerator()
            .mul(&o.denominator())
            .add(&o.numerator().mul(&self.denominator()));
        RationalFn::new(&n, &self.denominator().mul(&o.denominator()))
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn::new(&self.numerator().scale(c), &self.denominator())
    }

    /// Exact value at `x`; fails if the reduced denominator vanishes there.
    pub fn eval<T: Scalar>(&self, x: &T) -> Result<T> {
        let d = self.denominator().eval(x);
        if d.is_zero() {
            return Err(Error::SingularParameter(x.to_string()));
        }
        Ok(self.numerator().eval(x) / d)
    }

    /// Rational roots of the reduced denominator.
    pub fn poles(&self) -> Vec<Rational> {
        self.denominator().rational_roots()
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn poly(v: &[BigInt]) -> String {
            if v.is_empty() {
                return "0".into();
            }
            let parts: Vec<String> = v
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| match k {
                    0 => format!("{c}"),
                    1 => format!("{c}*l"),
                    _ => format!("{c}*l^{k}"),
                })
                .collect();
            parts.join(" + ")
        }
        write!(f, "({}) / ({})", poly(&self.num), poly(&self.den))
    }
}

/// Product of linear factors `a_k + b_k*lambda`.
pub fn product(factors: &[(i64, i64)]) -> UPoly {
    factors.iter().fold(UPoly::from_int(1), |acc, &(a, b)| {
        acc.mul(&UPoly::linear(a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn cancels_common_factor() {
        // (2l - 2) / ((l + 2)(l - 1)) = 2 / (l + 2)
        let f = RationalFn::new(&UPoly::linear(-2, 2), &product(&[(2, 1), (-1, 1)]));
        assert_eq!(f.denominator(), UPoly::linear(2, 1));
        assert_eq!(f.numerator(), UPoly::from_int(2));
        assert_eq!(f.eval(&rat(1, 1)).unwrap(), rat(2, 3));
        assert!(f.poles().contains(&rat(-2, 1)));
    }

    #[test]
    fn zero_numerator_is_normalized() {
        let f = RationalFn::new(&UPoly::zero(), &product(&[(1, 1)]));
        assert!(f.is_zero());
        assert_eq!(f.denominator(), UPoly::from_int(1));
    }

    #[test]
    fn singular_point_is_reported() {
        let f = RationalFn::new(&UPoly::from_int(1), &UPoly::linear(-3, 2));
        assert!(matches!(
            f.eval(&rat(3, 2)),
            Err(Error::SingularParameter(_))
        ));
        assert_eq!(f.poles(), vec![rat(3, 2)]);
    }

    #[test]
    fn gcd_and_division() {
        let a = product(&[(1, 1), (-2, 1), (3, 2)]);
        let b = product(&[(-2, 1), (5, 1)]);
        assert_eq!(a.gcd(&b), UPoly::linear(-2, 1));
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn rational_content_is_carried_by_numerator() {
        let f = RationalFn::new(&UPoly::constant(rat(1, 2)), &UPoly::linear(1, 3));
        assert_eq!(f.eval(&rat(1, 1)).unwrap(), rat(1, 8));
        let g = f.add(&f).mul(&RationalFn::from_upoly(&UPoly::linear(1, 3)));
        assert_eq!(g.denominator(), UPoly::from_int(1));
        assert_eq!(g.eval(&rat(5, 1)).unwrap(), rat(1, 1));
        assert_eq!(f.eval(&1.0f64).unwrap(), 0.125);
    }
}
