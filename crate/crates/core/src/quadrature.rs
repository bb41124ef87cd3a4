//! Numeric orthogonality and integrability on the fundamental triangle.
//!
//! The triangle `A` has vertices `(0,0)`, `(4pi/3, 0)`, `(2pi/3, 2pi/sqrt 3)`; the map
//! `(x1, x2) -> (e^{i x1} + 2 e^{-i x1/2} cos(sqrt3 x2 / 2))/3` sends it onto the
//! closed deltoid. Integrals carry the weight `|Delta|^{2 alpha + 1}`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::recurrence::PolyTable;
use crate::scalar::Scalar;
use crate::{ComplexF, Poly2F, Rational};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Area of the fundamental triangle, `4 sqrt3 pi^2 / 9`.
pub fn triangle_area() -> f64 {
    4.0 * SQRT3 * PI * PI / 9.0
}

pub fn vertices() -> [[f64; 2]; 3] {
    [
        [0.0, 0.0],
        [4.0 * PI / 3.0, 0.0],
        [2.0 * PI / 3.0, 2.0 * PI / SQRT3],
    ]
}

pub fn map_to_deltoid(x1: f64, x2: f64) -> ComplexF {
    let a = ComplexF::from_polar(1.0, x1);
    let b = ComplexF::from_polar(2.0 * (SQRT3 * x2 / 2.0).cos(), -x1 / 2.0);
    (a + b) / 3.0
}

/// `|Delta| = |(z1 - z2)(z2 - z3)(z3 - z1)|` with `z_k = e^{i theta_k}`,
/// `theta1 = x1`, `theta2 = -x1/2 + sqrt3 x2 / 2`, `theta3 = -theta1 - theta2`,
/// computed as `8 |sin((t1-t2)/2) sin((t2-t3)/2) sin((t3-t1)/2)|`.
pub fn abs_delta(x1: f64, x2: f64) -> f64 {
    let d12 = 1.5 * x1 - 0.5 * SQRT3 * x2;
    let d23 = SQRT3 * x2;
    let d31 = -1.5 * x1 - 0.5 * SQRT3 * x2;
    8.0 * ((d12 / 2.0).sin() * (d23 / 2.0).sin() * (d31 / 2.0).sin()).abs()
}

pub fn in_triangle(x1: f64, x2: f64) -> bool {
    let eps = 1e-12;
    let c = 4.0 * PI / 3.0;
    x2 >= -eps && x2 <= SQRT3 * x1 + eps && x2 <= SQRT3 * (c - x1) + eps
}

/// `|Delta|^{2 alpha + 1}` on the closed triangle.
pub fn weight(x1: f64, x2: f64, alpha: f64) -> Result<f64> {
    if !in_triangle(x1, x2) {
        return Err(Error::DomainError(x1, x2));
    }
    Ok(weight_unchecked(x1, x2, alpha))
}

fn weight_unchecked(x1: f64, x2: f64, alpha: f64) -> f64 {
    let s = 2.0 * alpha + 1.0;
    if s == 0.0 {
        1.0
    } else {
        abs_delta(x1, x2).powf(s)
    }
}

/// Gauss–Legendre nodes and weights on `[0, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 0 { 1.0 } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push(((1.0 - x) / 2.0, 1.0 / ((1.0 - x * x) * dp * dp)));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Symmetric rule on the reference triangle in barycentric form `(b0, b1, b2, w)`,
/// weights summing to 1: collapsed Gauss product averaged over vertex permutations.
fn reference_rule(n: usize) -> Vec<([f64; 3], f64)> {
    let g = gauss_legendre(n);
    let mut base = Vec::new();
    for &(xi, wx) in &g {
        for &(eta, wy) in &g {
            let u = xi;
            let v = (1.0 - xi) * eta;
            base.push(([1.0 - u - v, u, v], wx * wy * (1.0 - xi) * 2.0));
        }
    }
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(base.len() * 6);
    for s in PERMS {
        for (b, w) in &base {
            out.push(([b[s[0]], b[s[1]], b[s[2]]], w / 6.0));
        }
    }
    out
}

/// Quadrature nodes over the triangle `A`.
#[derive(Clone, Debug)]
pub struct TriangleGrid {
    pub level: u32,
    pub rule_points: usize,
    pub cells: usize,
    pub nodes: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
}

/// Gauss points per direction of the per-cell rule.
pub const CELL_GAUSS: usize = 6;

impl TriangleGrid {
    /// `4^level` congruent subtriangles, each carrying the symmetric rule.
    pub fn uniform(level: u32) -> Self {
        let rule = reference_rule(CELL_GAUSS);
        let [a, b, c] = vertices();
        let m = 1usize << level;
        let e1 = [(b[0] - a[0]) / m as f64, (b[1] - a[1]) / m as f64];
        let e2 = [(c[0] - a[0]) / m as f64, (c[1] - a[1]) / m as f64];
        let cell_area = triangle_area() / (m * m) as f64;
        let pt = |i: f64, j: f64| [a[0] + i * e1[0] + j * e2[0], a[1] + i * e1[1] + j * e2[1]];
        let mut nodes = Vec::with_capacity(m * m * rule.len());
        let mut weights = Vec::with_capacity(m * m * rule.len());
        let mut push = |v: [[f64; 2]; 3]| {
            for (bc, w) in &rule {
                nodes.push([
                    bc[0] * v[0][0] + bc[1] * v[1][0] + bc[2] * v[2][0],
                    bc[0] * v[0][1] + bc[1] * v[1][1] + bc[2] * v[2][1],
                ]);
                weights.push(w * cell_area);
            }
        };
        for j in 0..m {
            for i in 0..m - j {
                let (fi, fj) = (i as f64, j as f64);
                push([pt(fi, fj), pt(fi + 1.0, fj), pt(fi, fj + 1.0)]);
                if i + j + 1 < m {
                    push([pt(fi + 1.0, fj), pt(fi + 1.0, fj + 1.0), pt(fi, fj + 1.0)]);
                }
            }
        }
        TriangleGrid {
            level,
            rule_points: rule.len(),
            cells: m * m,
            nodes,
            weights,
        }
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(x[0], x[1]))
            .sum()
    }
}

/// Correlation matrix of the family under the weighted inner product.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub labels: Vec<(u32, u32)>,
    /// Real parts of `<P_a, P_b> / sqrt(<P_a,P_a> <P_b,P_b>)`.
    pub values: Vec<Vec<f64>>,
    /// Largest imaginary part of a normalized entry.
    pub max_imag: f64,
}

impl GramMatrix {
    pub fn max_off_diagonal(&self) -> f64 {
        let n = self.labels.len();
        let mut m = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    m = m.max(self.values[a][b].abs());
                }
            }
        }
        m
    }

    pub fn to_csv(&self) -> String {
        let head: Vec<String> = self
            .labels
            .iter()
            .map(|(p, q)| format!("\"{p},{q}\""))
            .collect();
        let mut out = format!("\"p,q\",{}\n", head.join(","));
        for (k, row) in self.values.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.6e}")).collect();
            out.push_str(&format!("{},{}\n", head[k], cells.join(",")));
        }
        out
    }
}

/// `int_A P_a(Z(x)) conj(P_b(Z(x))) |Delta|^{2 alpha + 1} dx`, normalized by the diagonal.
/// `alpha` is read off the table's lambda.
pub fn gram_matrix(table: &PolyTable<Rational>, grid: &TriangleGrid) -> GramMatrix {
    let lambda = Scalar::to_f64(table.lambda());
    let alpha = (2.0 * lambda - 5.0) / 6.0;
    let labels: Vec<(u32, u32)> = table.iter().map(|(p, q, _)| (p, q)).collect();
    let polys: Vec<Poly2F> = table
        .iter()
        .map(|(_, _, p)| p.map_coeffs(Scalar::to_f64))
        .collect();
    let n = polys.len();
    let mut g = vec![vec![ComplexF::new(0.0, 0.0); n]; n];
    let mut vals = vec![ComplexF::new(0.0, 0.0); n];
    for (x, w) in grid.nodes.iter().zip(&grid.weights) {
        let z = map_to_deltoid(x[0], x[1]);
        let ww = w * weight_unchecked(x[0], x[1], alpha);
        for (v, p) in vals.iter_mut().zip(&polys) {
            *v = p.eval(z);
        }
        for a in 0..n {
            let va = vals[a] * ww;
            for b in a..n {
                g[a][b] += va * vals[b].conj();
            }
        }
    }
    let mut values = vec![vec![0.0; n]; n];
    let mut max_imag = 0.0f64;
    for a in 0..n {
        for b in a..n {
            let c = g[a][b] / (g[a][a].re * g[b][b].re).sqrt();
            values[a][b] = c.re;
            values[b][a] = c.re;
            if a != b {
                max_imag = max_imag.max(c.im.abs());
            }
        }
    }
    GramMatrix {
        labels,
        values,
        max_imag,
    }
}

/// Geometric panels `[0, h 2^{-k}], ..., [h/2, h]` on `[0, h]`.
fn graded_panels(h: f64, depth: u32) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, h * 0.5f64.powi(depth as i32))];
    for k in (0..depth).rev() {
        out.push((h * 0.5f64.powi(k as i32 + 1), h * 0.5f64.powi(k as i32)));
    }
    out
}

/// Radial and edge grading depths used by the probe at a given level.
pub fn probe_depths(level: u32) -> (u32, u32) {
    (6 * level, 3 * level)
}

const PROBE_GAUSS: usize = 10;

/// Total mass `int_A |Delta|^{2 alpha + 1} dx` at one refinement level.
///
/// The weight is invariant under the symmetries of `A`, so the mass is six times
/// the integral over the subtriangle with vertices `(0,0)`, `(2pi/3, 0)` and the
/// centroid. There `x1 = r`, `x2 = r t / sqrt3` isolates the corner (`r = 0`) from
/// the edge (`t = 0`); both directions are graded geometrically.
pub fn probe_mass(alpha: f64, level: u32) -> f64 {
    let (dr, dt) = probe_depths(level);
    let g = gauss_legendre(PROBE_GAUSS);
    let r_max = 2.0 * PI / 3.0;
    let r_panels = graded_panels(r_max, dr);
    let t_panels = graded_panels(1.0, dt);
    let mut total = 0.0;
    for &(r0, r1) in &r_panels {
        let hr = r1 - r0;
        for &(gr, wr) in &g {
            let r = r0 + hr * gr;
            let mut inner = 0.0;
            for &(t0, t1) in &t_panels {
                let ht = t1 - t0;
                for &(gt, wt) in &g {
                    let t = t0 + ht * gt;
                    inner += wt * ht * weight_unchecked(r, r * t / SQRT3, alpha);
                }
            }
            total += wr * hr * inner * r / SQRT3;
        }
    }
    6.0 * total
}

/// Mass estimates `(level, mass)` over increasing levels.
pub fn integrability_probe(alpha: f64, levels: &[u32]) -> Vec<(u32, f64)> {
    levels.iter().map(|&l| (l, probe_mass(alpha, l))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_integrates_polynomials() {
        let g = gauss_legendre(6);
        let s: f64 = g.iter().map(|(x, w)| w * x.powi(11)).sum();
        assert!((s - 1.0 / 12.0).abs() < 1e-15);
        let s: f64 = g.iter().map(|(_, w)| w).sum();
        assert!((s - 1.0).abs() < 1e-15);
    }

    #[test]
    fn reference_rule_is_exact_for_low_degree() {
        let r = reference_rule(4);
        let s: f64 = r.iter().map(|(_, w)| w).sum();
        assert!((s - 1.0).abs() < 1e-14);
        // mean of b1^2 b2 over the triangle is 2! 1! 2! / 5! = 1/30
        let m: f64 = r.iter().map(|(b, w)| w * b[1] * b[1] * b[2]).sum();
        assert!((m - 1.0 / 30.0).abs() < 1e-14);
        assert!(r.iter().all(|(_, w)| *w > 0.0));
    }

    #[test]
    fn cusp_and_weight() {
        let z = map_to_deltoid(0.0, 0.0);
        assert!((z - ComplexF::new(1.0, 0.0)).norm() < 1e-15);
        let c = [2.0 * PI / 3.0, 2.0 * PI / (3.0 * SQRT3)];
        assert!(weight(c[0], c[1], 0.5).unwrap() > 0.0);
        assert_eq!(weight(c[0], c[1], -0.5).unwrap(), 1.0);
        assert!(matches!(
            weight(-1.0, 0.0, 0.0),
            Err(Error::DomainError(..))
        ));
    }

    #[test]
    fn grid_counts_and_area() {
        let g = TriangleGrid::uniform(3);
        assert_eq!(g.cells, 64);
        assert_eq!(g.nodes.len(), 64 * g.rule_points);
        assert!((g.total_weight() / triangle_area() - 1.0).abs() < 1e-12);
        assert!(g.weights.iter().all(|w| *w > 0.0));
        assert!(g.nodes.iter().all(|x| in_triangle(x[0], x[1])));
    }

    #[test]
    fn flat_probe_is_area() {
        for (_, m) in integrability_probe(-0.5, &[1, 2, 3]) {
            assert!((m / triangle_area() - 1.0).abs() < 1e-13);
        }
    }
}
