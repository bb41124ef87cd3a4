//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use deltoid::characters::{partitions, verify_su3_eigen, CharacterTable, Partition};
use deltoid::operator::{apply_l, gamma, GammaTable};
use deltoid::quadrature::{gram_matrix, integrability_probe, triangle_area, TriangleGrid};
use deltoid::recurrence::{check_eigen, check_gamma_recurrence, coeff_a1, coeff_a2};
use deltoid::series::{
    check_delta_identity, check_generating, check_hat_l_product, check_l_action_on_p, f_compatible,
    generating_series, geometric_genfun_flat, geometric_genfun_su3, poly_p_of_x, Series1,
};
use deltoid::traces::{linearize, TraceSeq};
use deltoid::{rat, CheckReport, Poly2, Poly2Q, PolyTableQ, Rational};

struct Outcome {
    ok: bool,
    checks: usize,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            checks: 0,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.ok = false;
            self.details.push(what.into());
        }
    }

    fn report(&mut self, r: &CheckReport) {
        self.checks += r.checked;
        if !r.passed() {
            self.ok = false;
            self.details.push(r.to_string());
        }
    }

    fn info(&mut self, what: impl Into<String>) {
        self.details.push(what.into());
    }
}

fn p(terms: &[(u32, u32, i64, i64)]) -> Poly2Q {
    Poly2::from_terms(terms.iter().map(|&(i, j, n, d)| (i, j, rat(n, d))))
}

fn table(l: Rational, n: u32) -> PolyTableQ {
    PolyTableQ::build(&l, n).expect("table")
}

fn exact_eigen_suite() -> Outcome {
    let mut o = Outcome::new();
    for l in [rat(1, 1), rat(4, 1), rat(7, 3), rat(11, 2)] {
        o.report(&check_eigen(&table(l, 10)));
    }
    o
}

fn oracle_polynomials() -> Outcome {
    let mut o = Outcome::new();
    let t = table(rat(1, 1), 2);
    o.check(
        t.get(1, 1) == &p(&[(1, 1, 1, 1), (0, 0, -1, 3)]),
        format!("P(1,1) = {}", t.get(1, 1)),
    );
    o.check(
        t.get(2, 0) == &p(&[(2, 0, 1, 1), (0, 1, -2, 3)]),
        format!("P(2,0) = {}", t.get(2, 0)),
    );
    let cases = [
        (coeff_a1(&rat(1, 1), 1), rat(-2, 3), "a1(1,1)"),
        (coeff_a2(&rat(1, 1), 0, 1), rat(-1, 3), "a2(1,0,1)"),
        (coeff_a1(&rat(4, 1), 1), rat(-1, 3), "a1(4,1)"),
        (coeff_a2(&rat(4, 1), 0, 1), rat(-1, 9), "a2(4,0,1)"),
    ];
    for (got, want, name) in cases {
        match got {
            Ok(v) => o.check(v == want, format!("{name} = {v}, expected {want}")),
            Err(e) => o.check(false, format!("{name}: {e}")),
        }
    }
    o
}

fn gamma_recurrence() -> Outcome {
    let mut o = Outcome::new();
    for l in [rat(1, 1), rat(4, 1), rat(7, 3)] {
        o.report(&check_gamma_recurrence(&table(l, 9)));
    }
    o
}

fn flat_identities() -> Outcome {
    let mut o = Outcome::new();
    let t = table(rat(1, 1), 12);
    let mut s = TraceSeq::<Rational>::new();
    let z = Poly2Q::z();
    let zb = Poly2Q::zbar();
    for k in 2..12i64 {
        let rhs = &(&(&z * &s.q_norm(k)) - &(&zb * &s.q_norm(k - 1)).scale(&rat(1, 3)))
            + &s.q_norm(k - 2).scale(&rat(1, 27));
        o.check(s.q_norm(k + 1) == rhs, format!("Q recurrence at p={k}"));
    }
    for k in 1..=12u32 {
        o.check(
            &s.q_norm(i64::from(k)) == t.get(k, 0),
            format!("Q_{k} != P({k},0)"),
        );
        o.check(
            &s.q_norm(-i64::from(k)) == t.get(0, k),
            format!("Q_-{k} != P(0,{k})"),
        );
    }
    for a in 1..=6 {
        for b in 1..=6 {
            o.check(
                &s.flat_eigenvector(a, b) == t.get(a, b),
                format!("flat eigenvector ({a},{b})"),
            );
        }
    }
    let t8 = table(rat(1, 1), 8);
    let idx: Vec<(u32, u32)> = t8
        .iter()
        .filter(|(a, b, _)| a + b <= 4)
        .map(|(a, b, _)| (a, b))
        .collect();
    for &(a, b) in &idx {
        for &(c, d) in &idx {
            let direct = t8.get(a, b) * t8.get(c, d);
            let mut sum = Poly2Q::zero();
            for (coef, (e, f)) in linearize(a, b, c, d) {
                sum += &t8.get(e, f).scale(&coef);
            }
            o.check(direct == sum, format!("linearization ({a},{b})x({c},{d})"));
        }
    }
    o
}

fn printed_tables() -> Vec<(u32, Vec<Vec<u32>>, Vec<(Vec<u32>, Vec<i64>)>)> {
    vec![
        (
            2,
            vec![vec![1, 1], vec![2]],
            vec![(vec![2], vec![1, 1]), (vec![1, 1], vec![1, -1])],
        ),
        (
            3,
            vec![vec![1, 1, 1], vec![2, 1], vec![3]],
            vec![
                (vec![3], vec![1, 1, 1]),
                (vec![2, 1], vec![2, 0, -1]),
                (vec![1, 1, 1], vec![1, -1, 1]),
            ],
        ),
        (
            4,
            vec![
                vec![1, 1, 1, 1],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1],
                vec![4],
            ],
            vec![
                (vec![4], vec![1, 1, 1, 1, 1]),
                (vec![1, 1, 1, 1], vec![1, -1, 1, 1, -1]),
                (vec![2, 2], vec![2, 0, 2, -1, 0]),
                (vec![3, 1], vec![3, 1, -1, 0, -1]),
                (vec![2, 1, 1], vec![3, -1, -1, 0, 1]),
            ],
        ),
    ]
}

fn character_construction() -> Outcome {
    let mut o = Outcome::new();
    for (n, cols, rows) in printed_tables() {
        let t = CharacterTable::new(n);
        for (shape, vals) in rows {
            let shape = Partition::new(shape).expect("shape");
            for (col, want) in cols.iter().zip(vals) {
                let class = Partition::new(col.clone()).expect("class");
                let got = t.value(&shape, &class);
                o.check(
                    got == Some(want),
                    format!("chi_{shape}({class}) = {got:?}, printed {want}"),
                );
            }
        }
    }
    let printed: Vec<(Vec<u32>, Poly2Q)> = vec![
        (vec![2], p(&[(2, 0, 18, 1), (0, 1, -6, 1)])),
        (vec![1, 1], p(&[(0, 1, 6, 1)])),
        (vec![3], p(&[(3, 0, 81, 1), (1, 1, -45, 1), (0, 0, 3, 1)])),
        (vec![2, 1], p(&[(1, 1, 54, 1), (0, 0, -6, 1)])),
        (vec![1, 1, 1], p(&[(0, 0, 6, 1)])),
        (
            vec![4],
            p(&[
                (4, 0, 1944, 1),
                (2, 1, -1944, 1),
                (0, 2, 216, 1),
                (1, 0, 144, 1),
            ]),
        ),
        (vec![2, 2], p(&[(0, 2, 216, 1), (1, 0, -72, 1)])),
        (
            vec![3, 1],
            p(&[(2, 1, 648, 1), (0, 2, -216, 1), (1, 0, -72, 1)]),
        ),
        (vec![2, 1, 1], p(&[(1, 0, 72, 1)])),
        (vec![1, 1, 1, 1], Poly2Q::zero()),
    ];
    let mut traces = TraceSeq::<Rational>::new();
    for (shape, want) in printed {
        let shape = Partition::new(shape).expect("shape");
        let got = deltoid::characters::character_eigenvector(&shape, &mut traces);
        if got != want {
            let lw = apply_l(&rat(4, 1), &want);
            let lead_ok = match want.leading() {
                Some((m, c)) => {
                    let mu = -lw.coeff(m.i, m.j) / c.clone();
                    (&lw + &want.scale(&mu)).is_zero()
                }
                None => true,
            };
            o.check(
                false,
                format!(
                    "shape {shape}: computed {got}, printed {want}{}",
                    if lead_ok {
                        ""
                    } else {
                        " (printed polynomial is not an eigenvector)"
                    }
                ),
            );
        }
    }
    let t6 = table(rat(4, 1), 6);
    for n in 1..=6 {
        for shape in partitions(n) {
            o.report(&verify_su3_eigen(&shape, &t6).report);
        }
    }
    o
}

fn generating_functions() -> Outcome {
    let mut o = Outcome::new();
    for l in [rat(4, 1), rat(7, 3)] {
        o.report(&check_generating(&table(l.clone(), 8), 8));
        let beta = (rat(1, 1) - &l) / rat(3, 1);
        let q = generating_series(&l, 2).expect("series");
        let a1 = Poly2Q::zbar().scale(&(rat(-3, 1) * &beta));
        o.check(
            q.coeff(1) == &a1,
            format!("lambda={l}: A1 = {}, printed {a1}", q.coeff(1)),
        );
        let bracket =
            p(&[(0, 2, 1, 1)]).scale(&(rat(3, 1) * (&beta - rat(1, 1)))) + p(&[(1, 0, 2, 1)]);
        let a2 = bracket.scale(&(rat(3, 1) * &beta));
        o.check(
            q.coeff(2) == &a2,
            format!("lambda={l}: A2 = {}, printed {a2}", q.coeff(2)),
        );
        o.report(&check_l_action_on_p(&l));
        o.report(&check_hat_l_product(&l, 5, 5));
        o.report(&check_delta_identity(&l, 5));
    }
    o.report(&geometric_genfun_flat(5));
    o.report(&geometric_genfun_su3(5, &table(rat(4, 1), 10)).0);
    for (l, want) in [
        (rat(1, 1), true),
        (rat(4, 1), true),
        (rat(2, 1), false),
        (rat(7, 3), false),
    ] {
        o.check(
            f_compatible(&l) == want,
            format!("F compatibility at lambda={l}"),
        );
    }
    o
}

fn numeric_orthogonality() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let grid = TriangleGrid::uniform(6);
    let mut worst = 0.0f64;
    for l in [rat(1, 1), rat(5, 2), rat(4, 1), rat(11, 2)] {
        let g = gram_matrix(&table(l.clone(), 4), &grid);
        let off = g.max_off_diagonal();
        worst = worst.max(off);
        o.check(
            off < 1e-8,
            format!("lambda={l}: max off-diagonal {off:.3e}"),
        );
        o.check(
            g.max_imag < 1e-10,
            format!("lambda={l}: imaginary part {:.3e}", g.max_imag),
        );
    }
    let secs = start.elapsed().as_secs_f64();
    o.check(secs < 60.0, format!("took {secs:.1}s"));
    o.info(format!("max off-diagonal {worst:.2e} in {secs:.1}s"));
    o
}

fn integrability() -> Outcome {
    let mut o = Outcome::new();
    let levels: Vec<u32> = (1..=8).collect();
    let flat = integrability_probe(-0.5, &levels);
    for (l, m) in &flat {
        o.check(
            (m / triangle_area() - 1.0).abs() < 1e-12,
            format!("flat mass at level {l}: {m}"),
        );
    }
    let conv = integrability_probe(-0.8, &levels);
    let last = conv[conv.len() - 1].1;
    let prev = conv[conv.len() - 2].1;
    let rel = (last - prev).abs() / last;
    o.check(
        rel < 1e-3,
        format!("alpha=-0.8: last relative change {rel:.3e}"),
    );
    for w in conv.windows(3) {
        let (d1, d2) = (w[1].1 - w[0].1, w[2].1 - w[1].1);
        o.check(
            d2.abs() < d1.abs(),
            format!("alpha=-0.8: increments not shrinking at level {}", w[2].0),
        );
    }
    let div = integrability_probe(-0.85, &levels);
    for w in div.windows(2) {
        let growth = w[1].1 / w[0].1 - 1.0;
        o.check(
            growth >= 0.02,
            format!("alpha=-0.85: growth {growth:.3e} at level {}", w[1].0),
        );
    }
    o.info(format!(
        "alpha=-0.8 mass {last:.6} (rel change {rel:.1e}); alpha=-0.85 mass {:.1} at level 8",
        div[div.len() - 1].1
    ));
    o
}

fn sample_polys() -> Vec<Poly2Q> {
    let t = table(rat(7, 3), 3);
    let mut out: Vec<Poly2Q> = t.iter().map(|(_, _, q)| q.clone()).collect();
    out.push(p(&[(2, 1, 3, 2), (0, 0, -5, 1), (1, 3, 1, 7)]));
    out.push(p(&[(0, 4, -2, 3), (1, 0, 4, 1)]));
    out
}

fn property_suites() -> Outcome {
    let mut o = Outcome::new();
    let polys = sample_polys();
    let lam = rat(7, 3);
    let g = GammaTable::<Rational>::new();
    let z = Poly2Q::z();
    let zb = Poly2Q::zbar();
    for f in &polys {
        let lf = apply_l(&lam, f);
        o.check(
            lf.conj() == apply_l(&lam, &f.conj()),
            "L commutes with conjugation",
        );
        // diffusion: L(f^2) = 2 f Lf + 2 Gamma(f, f); chain rule for Gamma(Z, f^3)
        let f2 = f * f;
        o.check(
            apply_l(&lam, &f2) == &(f * &lf).scale(&rat(2, 1)) + &gamma(f, f).scale(&rat(2, 1)),
            "L(f^2) = 2 f Lf + 2 Gamma(f,f)",
        );
        o.check(
            g.gamma(&z, &(&f2 * f)) == (&f2 * &g.gamma(&z, f)).scale(&rat(3, 1)),
            "Gamma(Z, f^3) = 3 f^2 Gamma(Z, f)",
        );
        o.check(
            gamma(f, &zb).conj() == gamma(&f.conj(), &z),
            "Gamma conjugation",
        );
        for h in &polys {
            o.check(gamma(f, h) == gamma(h, f), "Gamma symmetric");
            for k in polys.iter().take(3) {
                let lhs = gamma(f, &(h * k));
                let rhs = &(h * &gamma(f, k)) + &(k * &gamma(f, h));
                o.check(lhs == rhs, "Gamma Leibniz");
            }
        }
    }
    for n in 1..=7 {
        let t = CharacterTable::new(n);
        let parts = partitions(n);
        let fact: i64 = (1..=i64::from(n)).product();
        for a in &parts {
            for b in &parts {
                let s: i64 = parts
                    .iter()
                    .map(|c| {
                        c.class_size() as i64 * t.value(a, c).unwrap() * t.value(b, c).unwrap()
                    })
                    .sum();
                o.check(
                    s == if a == b { fact } else { 0 },
                    format!("row orthogonality n={n} {a} {b}"),
                );
                let s: i64 = parts
                    .iter()
                    .map(|r| t.value(r, a).unwrap() * t.value(r, b).unwrap())
                    .sum();
                let want = if a == b {
                    fact / a.class_size() as i64
                } else {
                    0
                };
                o.check(s == want, format!("column orthogonality n={n} {a} {b}"));
            }
        }
    }
    let order = 6;
    let s = poly_p_of_x::<Rational>(order);
    let (a, b) = (rat(2, 3), rat(-5, 4));
    let pa = s.pow_beta(&a).expect("pow");
    let pb = s.pow_beta(&b).expect("pow");
    let pab = s.pow_beta(&(&a + &b)).expect("pow");
    o.check(pa.mul(&pb) == pab, "P^a P^b = P^(a+b)");
    let log = s.log().expect("log");
    o.check(
        pa.log().expect("log") == log.scale(&a),
        "log(P^a) = a log P",
    );
    o.check(
        pa.mul(&pb).log().expect("log") == pa.log().expect("log").add(&pb.log().expect("log")),
        "log(fg) = log f + log g",
    );
    o.check(
        s.inverse().expect("inverse").mul(&s) == Series1::one(order),
        "P^-1 P = 1",
    );
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        (
            "exact eigen suite, lambda in {1, 4, 7/3, 11/2}, degree 10",
            exact_eigen_suite,
        ),
        (
            "oracle polynomials and recurrence coefficients",
            oracle_polynomials,
        ),
        ("Gamma three-term recurrence, p+q <= 8", gamma_recurrence),
        ("flat-case identities and linearization", flat_identities),
        (
            "character tables and character eigenvectors",
            character_construction,
        ),
        ("generating functions", generating_functions),
        (
            "numeric orthogonality, level 6, degree 4",
            numeric_orthogonality,
        ),
        ("integrability threshold probe", integrability),
        ("exact property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status}  {name}  ({} checks, {:.1}s)",
            k + 1,
            out.checks,
            start.elapsed().as_secs_f64()
        );
        for d in &out.details {
            for line in d.lines() {
                println!("    {line}");
            }
        }
        if !out.ok {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
