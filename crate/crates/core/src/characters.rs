//! Symmetric group characters and the trace eigenvectors they produce.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{express_in, Solution};
use crate::operator::{apply_l, eigenvalue};
use crate::poly2::Poly2;
use crate::recurrence::PolyTable;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::traces::TraceSeq;
use crate::Rational;

/// Integer partition, parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of permutations with this cycle type: `n! / (prod_j k_j! prod_i p_i)`.
    pub fn class_size(&self) -> u64 {
        let mut size = factorial(self.n());
        let mut run = 1;
        for w in 0..self.parts.len() {
            size /= u64::from(self.parts[w]);
            if w + 1 < self.parts.len() && self.parts[w + 1] == self.parts[w] {
                run += 1;
            } else {
                size /= factorial(run);
                run = 1;
            }
        }
        size
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).product()
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Memo table for Murnaghan–Nakayama evaluations.
#[derive(Default)]
pub struct CharacterCache {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_shape(cycle type)` by removing border strips of length `cycle[0]`.
    pub fn character(&mut self, shape: &[u32], cycle: &[u32]) -> i64 {
        if cycle.is_empty() {
            return i64::from(shape.iter().all(|&x| x == 0));
        }
        let key = (shape.to_vec(), cycle.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = i64::from(cycle[0]);
        let k = shape.len();
        // beta numbers: shape[i] + (k - 1 - i), strictly decreasing
        let beta: Vec<i64> = shape
            .iter()
            .enumerate()
            .map(|(i, &x)| i64::from(x) + (k - 1 - i) as i64)
            .collect();
        let mut total = 0;
        for i in 0..k {
            let nb = beta[i] - r;
            if nb < 0 || beta.contains(&nb) {
                continue;
            }
            let between = beta.iter().filter(|&&b| b > nb && b < beta[i]).count();
            let mut next = beta.clone();
            next[i] = nb;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let new_shape: Vec<u32> = next
                .iter()
                .enumerate()
                .map(|(j, &b)| (b - (k - 1 - j) as i64) as u32)
                .filter(|&x| x > 0)
                .collect();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.character(&new_shape, &cycle[1..]);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `chi_shape(pi)` via the Murnaghan–Nakayama rule.
pub fn mn_character(shape: &Partition, pi: &Partition) -> Result<i64> {
    if shape.n() != pi.n() {
        return Err(Error::InvalidParameter(format!(
            "{shape} and {pi} have different sizes"
        )));
    }
    Ok(CharacterCache::new().character(&shape.parts, &pi.parts))
}

/// Character table; rows (irreducibles) and columns (classes) both indexed by `partitions(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let parts = partitions(n);
        let mut cache = CharacterCache::new();
        let values = parts
            .iter()
            .map(|row| {
                parts
                    .iter()
                    .map(|col| cache.character(&row.parts, &col.parts))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions: parts,
            values,
        }
    }

    pub fn value(&self, shape: &Partition, class: &Partition) -> Option<i64> {
        let r = self.partitions.iter().position(|p| p == shape)?;
        let c = self.partitions.iter().position(|p| p == class)?;
        Some(self.values[r][c])
    }

    pub fn row(&self, shape: &Partition) -> Option<&[i64]> {
        let r = self.partitions.iter().position(|p| p == shape)?;
        Some(&self.values[r])
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.partitions.iter().map(|p| p.to_string()).collect();
        writeln!(f, "{:>12} | {}", "", head.join(" "))?;
        for (p, row) in self.partitions.iter().zip(&self.values) {
            let cells: Vec<String> = row
                .iter()
                .zip(&head)
                .map(|(v, h)| format!("{v:>w$}", w = h.len()))
                .collect();
            writeln!(f, "{:>12} | {}", p.to_string(), cells.join(" "))?;
        }
        Ok(())
    }
}

/// `sum_pi |pi| chi(pi) T_pi`, with `T_pi` the product of traces over the parts.
pub fn character_eigenvector<T: Scalar>(shape: &Partition, traces: &mut TraceSeq<T>) -> Poly2<T> {
    let mut cache = CharacterCache::new();
    let mut out = Poly2::zero();
    for pi in partitions(shape.n()) {
        let chi = cache.character(&shape.parts, &pi.parts);
        if chi == 0 {
            continue;
        }
        let c = T::from_i64(chi) * T::from_i64(pi.class_size() as i64);
        out += &traces.product(&pi.parts).scale(&c);
    }
    out
}

/// Result of checking one character eigenvector against the `lambda = 4` table.
#[derive(Clone, Debug)]
pub struct Su3Eigen {
    pub poly: Poly2<Rational>,
    pub mu: Option<Rational>,
    /// `(p, q, c)` with `poly = sum c P_{p,q}`.
    pub expansion: Vec<(u32, u32, Rational)>,
    pub report: CheckReport,
}

/// Checks that the character eigenvector is an eigenvector of `L` at `lambda = 4`
/// and a combination of table entries sharing its eigenvalue.
pub fn verify_su3_eigen(shape: &Partition, table: &PolyTable<Rational>) -> Su3Eigen {
    let mut report = CheckReport::new(format!("character eigenvector {shape}"));
    let poly = character_eigenvector(shape, &mut TraceSeq::new());
    let lam = table.lambda().clone();
    let Some((lead, c)) = poly.leading() else {
        report.record(true, String::new);
        return Su3Eigen {
            poly,
            mu: None,
            expansion: Vec::new(),
            report,
        };
    };
    let lp = apply_l(&lam, &poly);
    let mu = -lp.coeff(lead.i, lead.j) / c.clone();
    let residual = &lp + &poly.scale(&mu);
    report.record(residual.is_zero(), || {
        format!("not an eigenvector: residual {residual}")
    });
    let d = poly.degree().unwrap_or(0);
    if d > table.max_degree() {
        report.fail(format!("table degree {} below {d}", table.max_degree()));
        return Su3Eigen {
            poly,
            mu: Some(mu),
            expansion: Vec::new(),
            report,
        };
    }
    let idx: Vec<(u32, u32)> = table
        .iter()
        .filter(|(p, q, _)| eigenvalue(&lam, *p, *q) == mu)
        .map(|(p, q, _)| (p, q))
        .collect();
    let basis: Vec<Poly2<Rational>> = idx.iter().map(|&(p, q)| table.get(p, q).clone()).collect();
    let expansion = match express_in(&poly, &basis) {
        Solution::Unique(c) => idx
            .iter()
            .zip(c)
            .filter(|(_, c)| !num::Zero::is_zero(c))
            .map(|(&(p, q), c)| (p, q, c))
            .collect(),
        _ => {
            report.fail(format!(
                "not in the span of the eigenvalue-{mu} table entries"
            ));
            Vec::new()
        }
    };
    report.checked += 1;
    Su3Eigen {
        poly,
        mu: Some(mu),
        expansion,
        report,
    }
}

/// `mu = (3/4)(1 - 2a) sum p_i^2 + (9/4)(2a + 1) n - n^2 / 2`.
pub fn mu_sigma<T: Scalar>(alpha: &T, pi: &Partition) -> T {
    let n = i64::from(pi.n());
    let sq: i64 = pi.parts.iter().map(|&p| i64::from(p) * i64::from(p)).sum();
    let one = T::one();
    let two = T::from_i64(2);
    T::ratio(3, 4) * (one.clone() - two.clone() * alpha.clone()) * T::from_i64(sq)
        + T::ratio(9, 4) * (two * alpha.clone() + one) * T::from_i64(n)
        - T::ratio(n * n, 2)
}

/// `L T_pi` written in traces:
/// `-mu T_pi - (3/4)(2a + 1) sum_i p_i T_{pi \ p_i} sum_j T_j T_{p_i - j}
///  - 3 sum_{i<k} p_i p_k T_{p_i + p_k} T_{pi \ {p_i, p_k}}`.
pub fn trace_product_action<T: Scalar>(
    alpha: &T,
    pi: &Partition,
    traces: &mut TraceSeq<T>,
) -> Poly2<T> {
    let parts = pi.parts();
    let others = |skip: &[usize]| -> Vec<u32> {
        parts
            .iter()
            .enumerate()
            .filter(|(k, _)| !skip.contains(k))
            .map(|(_, &p)| p)
            .collect()
    };
    let mut split = Poly2::zero();
    for (i, &p) in parts.iter().enumerate() {
        let rest = traces.product(&others(&[i]));
        let mut inner = Poly2::zero();
        for j in 1..p {
            inner += &(traces.trace(i64::from(j)) * traces.trace(i64::from(p - j)));
        }
        split += &(rest * inner).scale(&T::from_i64(i64::from(p)));
    }
    let mut join = Poly2::zero();
    for i in 0..parts.len() {
        for k in i + 1..parts.len() {
            let rest = traces.product(&others(&[i, k]));
            let t = traces.trace(i64::from(parts[i] + parts[k]));
            join += &(t * rest).scale(&T::from_i64(i64::from(parts[i] * parts[k])));
        }
    }
    let c_split = T::ratio(-3, 4) * (T::from_i64(2) * alpha.clone() + T::one());
    let base = traces.product(parts).scale(&-mu_sigma(alpha, pi));
    &(&base + &split.scale(&c_split)) - &join.scale(&T::from_i64(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(2), vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(partitions(0).len(), 1);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(part(&[1, 1, 1, 1]).class_size(), 1);
        assert_eq!(part(&[2, 1, 1]).class_size(), 6);
        assert_eq!(part(&[2, 2]).class_size(), 3);
        let total: u64 = partitions(5).iter().map(Partition::class_size).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn small_characters() {
        let t = CharacterTable::new(3);
        assert_eq!(t.row(&part(&[2, 1])).unwrap(), &[-1, 0, 2]);
        assert_eq!(mn_character(&part(&[3, 1]), &part(&[2, 1, 1])).unwrap(), 1);
        assert!(mn_character(&part(&[3]), &part(&[2])).is_err());
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu_sigma(&rat(1, 2), &part(&[2])), rat(7, 1));
        assert_eq!(mu_sigma(&rat(1, 2), &part(&[1, 1])), rat(7, 1));
        assert_eq!(mu_sigma(&rat(0, 1), &part(&[2, 1])), rat(6, 1));
    }
}
