//! Trace polynomials `T_p = z1^p + z2^p + z3^p` and the flat-case identities.

use std::collections::BTreeMap;

use crate::operator::AlphaParam;
use crate::poly2::Poly2;
use crate::scalar::{pow3_inv, Scalar};
use crate::Rational;

/// Memoized traces in scaled coordinates: `T_0 = 3`, `T_1 = 3Z`, `T_{-1} = 3Zbar`,
/// `T_{p+2} = 3Z T_{p+1} - 3Zbar T_p + T_{p-1}`.
#[derive(Clone, Debug)]
pub struct TraceSeq<T> {
    cache: BTreeMap<u32, Poly2<T>>,
}

impl<T: Scalar> Default for TraceSeq<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> TraceSeq<T> {
    pub fn new() -> Self {
        let three = T::from_i64(3);
        let mut cache = BTreeMap::new();
        cache.insert(0, Poly2::constant(three.clone()));
        cache.insert(1, Poly2::monomial(1, 0, three.clone()));
        cache.insert(
            2,
            Poly2::from_terms([(2, 0, T::from_i64(9)), (0, 1, T::from_i64(-6))]),
        );
        TraceSeq { cache }
    }

    fn positive(&mut self, p: u32) -> &Poly2<T> {
        let mut top = *self.cache.keys().next_back().unwrap_or(&2);
        let three = T::from_i64(3);
        while top < p {
            let n = top + 1;
            let a = Poly2::monomial(1, 0, three.clone()) * &self.cache[&(n - 1)];
            let b = Poly2::monomial(0, 1, three.clone()) * &self.cache[&(n - 2)];
            let next = &(&a - &b) + &self.cache[&(n - 3)];
            self.cache.insert(n, next);
            top = n;
        }
        &self.cache[&p]
    }

    /// `T_p` for any integer `p`; negative indices by conjugation.
    pub fn trace(&mut self, p: i64) -> Poly2<T> {
        let t = self.positive(p.unsigned_abs() as u32);
        if p < 0 {
            t.conj()
        } else {
            t.clone()
        }
    }

    /// `Q_p = 3^{-|p|} T_p`.
    pub fn q_norm(&mut self, p: i64) -> Poly2<T> {
        self.trace(p).scale(&pow3_inv(p.unsigned_abs() as u32))
    }

    /// Flat-case eigenpolynomial `Q_p Q_{-q} - 3^{-2 min(p,q)} Q_{p-q}`.
    pub fn flat_eigenvector(&mut self, p: u32, q: u32) -> Poly2<T> {
        if p == 0 || q == 0 {
            return self.q_norm(i64::from(p) - i64::from(q));
        }
        let (pi, qi) = (i64::from(p), i64::from(q));
        let prod = self.q_norm(pi) * self.q_norm(-qi);
        &prod - &self.q_norm(pi - qi).scale(&pow3_inv(2 * p.min(q)))
    }

    /// `T_{pi_1} T_{pi_2} ...` for a list of parts.
    pub fn product(&mut self, parts: &[u32]) -> Poly2<T> {
        parts
            .iter()
            .fold(Poly2::one(), |acc, &k| acc * self.trace(i64::from(k)))
    }

    /// `-(p/4)(p(1 - 6a) + 9(2a + 1)) T_p - (3p/4)(2a + 1) sum_{i=1}^{p-1} T_i T_{p-i}`,
    /// which equals `L T_p`.
    pub fn l_on_trace(&mut self, param: &AlphaParam, p: u32) -> Poly2<T> {
        let a = T::from_rational(param.alpha());
        let pp = T::from_i64(i64::from(p));
        let one = T::one();
        let two_a1 = T::from_i64(2) * a.clone() + one.clone();
        let lin = pp.clone() * (one - T::from_i64(6) * a) + T::from_i64(9) * two_a1.clone();
        let c_lin = -(pp.clone() * lin) / T::from_i64(4);
        let c_quad = -(T::from_i64(3) * pp * two_a1) / T::from_i64(4);
        let mut sum = Poly2::zero();
        for i in 1..p {
            sum += &(self.trace(i64::from(i)) * self.trace(i64::from(p - i)));
        }
        &self.trace(i64::from(p)).scale(&c_lin) + &sum.scale(&c_quad)
    }

    /// `(pq/2)(T_p T_q - 3 T_{p+q})`, which equals `Gamma(T_p, T_q)`.
    pub fn gamma_traces(&mut self, p: u32, q: u32) -> Poly2<T> {
        let (pi, qi) = (i64::from(p), i64::from(q));
        let c = T::ratio(pi * qi, 2);
        let prod = self.trace(pi) * self.trace(qi);
        (&prod - &self.trace(pi + qi).scale(&T::from_i64(3))).scale(&c)
    }
}

/// Dominant weight `(p + q, q, 0)` of `P_{p,q}` in the flat case.
fn weight(p: u32, q: u32) -> [i64; 3] {
    [i64::from(p + q), i64::from(q), 0]
}

fn orbit(w: [i64; 3]) -> Vec<[i64; 3]> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out: Vec<[i64; 3]> = PERMS.iter().map(|s| [w[s[0]], w[s[1]], w[s[2]]]).collect();
    out.sort();
    out.dedup();
    out
}

/// Expansion of `P_{p,q} P_{p2,q2}` in the flat family, as `(coefficient, (p, q))`.
///
/// In the flat case `P_{p,q} = m_{(p+q,q,0)} / 3^{p+q}` where `m` is the orbit sum
/// of monomials on the torus `z1 z2 z3 = 1`. The coefficient of `m_nu` in
/// `m_mu m_mu'` counts pairs of orbit elements adding up to `nu` itself.
pub fn linearize(p: u32, q: u32, p2: u32, q2: u32) -> Vec<(Rational, (u32, u32))> {
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for a in orbit(weight(p, q)) {
        for b in orbit(weight(p2, q2)) {
            let s = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
            let lo = *s.iter().min().unwrap_or(&0);
            let v = [s[0] - lo, s[1] - lo, s[2] - lo];
            if v[0] >= v[1] && v[1] >= v[2] {
                let key = ((v[0] - v[1]) as u32, (v[1] - v[2]) as u32);
                *counts.entry(key).or_insert(0) += 1;
            }
        }
    }
    let total = p + q + p2 + q2;
    let mut out: Vec<(Rational, (u32, u32))> = counts
        .into_iter()
        .map(|((a, b), n)| {
            let c = Rational::from_integer(n.into()) * pow3_inv::<Rational>(total - a - b);
            (c, (a, b))
        })
        .collect();
    out.sort_by(|x, y| (y.1 .0 + y.1 .1, y.1 .0).cmp(&(x.1 .0 + x.1 .1, x.1 .0)));
    out
}
