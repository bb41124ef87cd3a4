use deltoid::operator::{apply_l, gamma, AlphaParam};
use deltoid::traces::{linearize, TraceSeq};
use deltoid::{rat, ComplexF, Poly2, Poly2Q, PolyTableQ, Rational};

fn seq() -> TraceSeq<Rational> {
    TraceSeq::new()
}

#[test]
fn traces_match_power_sums() {
    let mut s = seq();
    // z1 z2 z3 = 1 on the unit circle, Z = (z1 + z2 + z3) / 3
    let (a, b) = (0.7f64, -2.1f64);
    let zs = [
        ComplexF::from_polar(1.0, a),
        ComplexF::from_polar(1.0, b),
        ComplexF::from_polar(1.0, -a - b),
    ];
    let z = (zs[0] + zs[1] + zs[2]) / 3.0;
    for p in -7i64..=7 {
        let direct: ComplexF = zs.iter().map(|w| w.powi(p as i32)).sum();
        assert!((s.trace(p).eval(z) - direct).norm() < 1e-11, "p={p}");
    }
}

#[test]
fn trace_examples() {
    let mut s = seq();
    assert_eq!(s.trace(0), Poly2::constant(rat(3, 1)));
    assert_eq!(
        s.trace(2),
        Poly2::from_terms([(2, 0, rat(9, 1)), (0, 1, rat(-6, 1))])
    );
    // unscaled T_2 = W^2 - 2 Wbar with W = 3Z
    assert_eq!(
        s.trace(2).dilate(&rat(1, 3)),
        Poly2::from_terms([(2, 0, rat(1, 1)), (0, 1, rat(-2, 1))])
    );
    assert_eq!(s.trace(-3), s.trace(3).conj());
}

#[test]
fn normalized_traces_are_flat_family() {
    let t = PolyTableQ::build(&rat(1, 1), 10).unwrap();
    let mut s = seq();
    assert_eq!(s.q_norm(1), Poly2::z());
    assert_eq!(&s.q_norm(2), t.get(2, 0));
    assert_eq!(&s.q_norm(3), t.get(3, 0));
    for p in 1..=10u32 {
        for q in 1..=10 - p {
            assert_eq!(&s.flat_eigenvector(p, q), t.get(p, q), "({p},{q})");
        }
    }
}

#[test]
fn linearization_against_products() {
    let t = PolyTableQ::build(&rat(1, 1), 6).unwrap();
    let check = |a: u32, b: u32, c: u32, d: u32| {
        let mut sum = Poly2Q::zero();
        for (coef, (e, f)) in linearize(a, b, c, d) {
            sum += &t.get(e, f).scale(&coef);
        }
        assert_eq!(sum, t.get(a, b) * t.get(c, d), "({a},{b})x({c},{d})");
    };
    check(1, 0, 0, 1);
    check(1, 0, 1, 0);
    check(2, 1, 1, 2);
    check(3, 0, 0, 3);
    assert_eq!(linearize(2, 1, 1, 2).len(), 6);
    let terms = linearize(1, 0, 1, 0);
    assert_eq!(terms, vec![(rat(1, 1), (2, 0)), (rat(2, 3), (0, 1))]);
}

#[test]
fn generator_on_traces() {
    for (alpha, maxp) in [
        (rat(1, 2), 6),
        (rat(7, 6), 5),
        (rat(0, 1), 5),
        (rat(-1, 2), 5),
    ] {
        let param = AlphaParam::from_alpha(alpha.clone()).unwrap();
        let mut s = seq();
        for p in 1..=maxp {
            let direct = apply_l(param.lambda(), &s.trace(i64::from(p)));
            assert_eq!(s.l_on_trace(&param, p), direct, "alpha={alpha} p={p}");
        }
    }
    let param = AlphaParam::from_alpha(rat(1, 2)).unwrap();
    let mut s = seq();
    assert_eq!(s.l_on_trace(&param, 1), s.trace(1).scale(&rat(-4, 1)));
}

#[test]
fn gamma_on_traces() {
    let mut s = seq();
    assert!(s.gamma_traces(0, 3).is_zero());
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            let direct = gamma(&s.trace(i64::from(p)), &s.trace(i64::from(q)));
            assert_eq!(s.gamma_traces(p, q), direct, "({p},{q})");
        }
    }
    let three_z = Poly2Q::z().scale(&rat(3, 1));
    assert_eq!(s.gamma_traces(1, 1), gamma(&three_z, &three_z));
}
