use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::Scalar;
use crate::ComplexF;

/// Exponent pair of `Z^i Zbar^j`, ordered graded-lexicographically
/// (total degree first, then the power of `Z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub fn new(i: u32, j: u32) -> Self {
        Monomial { i, j }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.i.cmp(&other.i))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Z,
    Zbar,
}

/// Sparse polynomial in `Z` and `Zbar`. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly2<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for Poly2<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Poly2<T> {
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(i, j), c);
        }
        Poly2 { terms }
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn zbar() -> Self {
        Self::monomial(0, 1, T::one())
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &T)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading(&self) -> Option<(Monomial, &T)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Homogeneous part of top total degree.
    pub fn top_part(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => Poly2 {
                terms: self
                    .terms
                    .iter()
                    .filter(|(m, _)| m.degree() == d)
                    .map(|(m, c)| (*m, c.clone()))
                    .collect(),
            },
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn map_coeffs<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> Poly2<U> {
        Poly2::from_terms(self.terms.iter().map(|(m, c)| (m.i, m.j, f(c))))
    }

    /// Formal partial derivative, `Z` and `Zbar` independent.
    pub fn partial(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, dm) = match var {
                Var::Z => (m.i, Monomial::new(m.i.wrapping_sub(1), m.j)),
                Var::Zbar => (m.j, Monomial::new(m.i, m.j.wrapping_sub(1))),
            };
            if e > 0 {
                out.add_term(dm, c.clone() * T::from_i64(i64::from(e)));
            }
        }
        out
    }

    /// Complex conjugate: swaps the exponents of `Z` and `Zbar`.
    pub fn conj(&self) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.j, m.i), c.clone()))
                .collect(),
        }
    }

    /// Euler operator `Z d/dZ + Zbar d/dZbar`.
    pub fn euler(&self) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() > 0)
                .map(|(m, c)| (*m, c.clone() * T::from_i64(i64::from(m.degree()))))
                .collect(),
        }
    }

    /// Substitutes `Z -> cZ`, `Zbar -> cZbar` for a real scalar `c`.
    pub fn dilate(&self, c: &T) -> Self {
        Poly2::from_terms(
            self.terms
                .iter()
                .map(|(m, v)| (m.i, m.j, v.clone() * c.powi(m.degree()))),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `Z = z`, `Zbar = conj(z)`.
    pub fn eval(&self, z: ComplexF) -> ComplexF {
        let d = self.degree().unwrap_or(0) as usize;
        let zb = z.conj();
        let mut zp = Vec::with_capacity(d + 1);
        let mut zbp = Vec::with_capacity(d + 1);
        zp.push(ComplexF::new(1.0, 0.0));
        zbp.push(ComplexF::new(1.0, 0.0));
        for k in 1..=d {
            zp.push(zp[k - 1] * z);
            zbp.push(zbp[k - 1] * zb);
        }
        let mut acc = ComplexF::new(0.0, 0.0);
        for (m, c) in &self.terms {
            acc += zp[m.i as usize] * zbp[m.j as usize] * c.to_f64();
        }
        acc
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = match mag.split_once('/') {
                Some((n, d)) => format!("\\frac{{{n}}}{{{d}}}"),
                None => mag,
            };
            let vars = latex_vars(m);
            if vars.is_empty() {
                out.push_str(&coef);
            } else if coef == "1" {
                out.push_str(&vars);
            } else {
                out.push_str(&coef);
                out.push(' ');
                out.push_str(&vars);
            }
        }
        out
    }
}

fn latex_vars(m: Monomial) -> String {
    let mut v = Vec::new();
    match m.i {
        0 => {}
        1 => v.push("Z".to_string()),
        e => v.push(format!("Z^{{{e}}}")),
    }
    match m.j {
        0 => {}
        1 => v.push("\\overline{Z}".to_string()),
        e => v.push(format!("\\overline{{Z}}^{{{e}}}")),
    }
    v.join(" ")
}

impl<T: Scalar> fmt::Display for Poly2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut vars = Vec::new();
            match m.i {
                0 => {}
                1 => vars.push("Z".to_string()),
                e => vars.push(format!("Z^{e}")),
            }
            match m.j {
                0 => {}
                1 => vars.push("Zbar".to_string()),
                e => vars.push(format!("Zbar^{e}")),
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> AddAssign<&Poly2<T>> for Poly2<T> {
    fn add_assign(&mut self, rhs: &Poly2<T>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<T: Scalar> SubAssign<&Poly2<T>> for Poly2<T> {
    fn sub_assign(&mut self, rhs: &Poly2<T>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<T: Scalar> Add<&Poly2<T>> for &Poly2<T> {
    type Output = Poly2<T>;
    fn add(self, rhs: &Poly2<T>) -> Poly2<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Sub<&Poly2<T>> for &Poly2<T> {
    type Output = Poly2<T>;
    fn sub(self, rhs: &Poly2<T>) -> Poly2<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Mul<&Poly2<T>> for &Poly2<T> {
    type Output = Poly2<T>;
    fn mul(self, rhs: &Poly2<T>) -> Poly2<T> {
        let mut out = Poly2::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(
                    Monomial::new(ma.i + mb.i, ma.j + mb.j),
                    ca.clone() * cb.clone(),
                );
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Poly2<T> {
    type Output = Poly2<T>;
    fn neg(self) -> Poly2<T> {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Neg for Poly2<T> {
    type Output = Poly2<T>;
    fn neg(self) -> Poly2<T> {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl<T: Scalar> $tr<Poly2<T>> for Poly2<T> {
            type Output = Poly2<T>;
            fn $f(self, rhs: Poly2<T>) -> Poly2<T> {
                (&self).$f(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly2<T>> for Poly2<T> {
            type Output = Poly2<T>;
            fn $f(self, rhs: &Poly2<T>) -> Poly2<T> {
                (&self).$f(rhs)
            }
        }
        impl<T: Scalar> $tr<Poly2<T>> for &Poly2<T> {
            type Output = Poly2<T>;
            fn $f(self, rhs: Poly2<T>) -> Poly2<T> {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
