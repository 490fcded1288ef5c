use super::*;
use crate::ff_ext::ExtField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params(q: u128, n: usize, mu: u128, a: u128, b: u128) -> TzParams {
    let k = PrimeField::new(q).unwrap();
    let ext = ExtField::new(k, n, k.elem(mu)).unwrap();
    TzParams::new(Curve::new(ext, k.elem(a), k.elem(b)).unwrap()).unwrap()
}

fn ext_elem(tz: &TzParams, c: &[u128]) -> ExtElement {
    tz.curve().ext().from_u128_coords(c).unwrap()
}

fn all_elements(ext: &ExtField) -> Vec<ExtElement> {
    let q = ext.base().modulus();
    let n = ext.n();
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut v| {
            let mut c = Vec::with_capacity(n);
            for _ in 0..n {
                c.push(v % q);
                v /= q;
            }
            ext.from_u128_coords(&c).unwrap()
        })
        .collect()
}

fn trace_zero_points(tz: &TzParams) -> Vec<CurvePoint> {
    let curve = tz.curve();
    let mut out = Vec::new();
    for x in all_elements(curve.ext()) {
        if let Some(p) = curve.lift_x(x) {
            for pt in [p, curve.neg(&p)] {
                if curve.in_trace_zero(&pt) && !out.contains(&pt) {
                    out.push(pt);
                }
            }
        }
    }
    out
}

fn example_n3() -> (TzParams, CurvePoint) {
    let tz = params((1 << 79) - 67, 3, 3, 1, 368);
    let x = ext_elem(&tz, &[260970034280824124824722, 431820813779055023676698, 496444425404915392572065]);
    let p = tz.curve().lift_x(x).unwrap();
    (tz, p)
}

fn example_n5() -> TzParams {
    params((1 << 60) - 695, 5, 3, 1, 135)
}

#[test]
fn n3_example_vectors() {
    let (tz, p) = example_n3();
    let k = *tz.curve().base();
    let s = tz.compress(&p, Variant::S).unwrap();
    assert_eq!(s.coords(), &[k.elem(178447193035157787121145), k.elem(159414355696879147312583)]);
    let t = tz.compress(&p, Variant::T).unwrap();
    assert_eq!(t.coords(), &[k.elem(260970034280824124824722), k.elem(492721032528256431308437)]);

    let expected: Vec<ExtElement> = {
        let mut v = vec![
            ext_elem(&tz, &[260970034280824124824722, 431820813779055023676698, 496444425404915392572065]),
            ext_elem(&tz, &[260970034280824124824722, 318397306102476549147695, 124410673032925784958936]),
            ext_elem(&tz, &[260970034280824124824722, 458707699733097601881649, 588070721176787997175041]),
        ];
        v.sort();
        v
    };
    for c in [s, t] {
        let classes = tz.decompress(&c).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].x_coords(), expected);
        assert!(classes[0].contains(&p));
    }
}

#[test]
fn n5_example_vectors() {
    let tz = example_n5();
    let k = *tz.curve().base();
    let x = ext_elem(&tz, &[697340666673436518, 801324486821916366, 191523769921581598, 193574581008452232, 808272437423069772]);
    let p = tz.curve().lift_x(x).unwrap();
    let s = tz.compress(&p, Variant::S).unwrap();
    let want_s = [27938819546643747, 599177118073319826, 587362643323803394, 899440023033601132].map(|v| k.elem(v));
    assert_eq!(s.coords(), &want_s);
    let t = tz.compress(&p, Variant::T).unwrap();
    let want_t = [697340666673436518, 553115374027544004, 315951679773440541, 285024754797056479].map(|v| k.elem(v));
    assert_eq!(t.coords(), &want_t);

    let mut expected = vec![
        x,
        ext_elem(&tz, &[697340666673436518, 836712212802745328, 506907366758395901, 517000572714098077, 268866625974497959]),
        ext_elem(&tz, &[697340666673436518, 960543166171367987, 126552294958642222, 448251978051599093, 74315924307841334]),
        ext_elem(&tz, &[697340666673436518, 810370833605859760, 539948230971075773, 1032750511909194579, 944608723064092684]),
        ext_elem(&tz, &[697340666673436518, 49813814418649402, 940911346603997068, 114265365530348581, 209779298444190813]),
    ];
    expected.sort();
    for c in [s, t] {
        let classes = tz.decompress(&c).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].x_coords(), expected);
    }

    let x2 = ext_elem(&tz, &[760010909342414570, 568064535058825884, 244006548504894796, 446522043528586762, 731314735984238952]);
    let p2 = tz.curve().lift_x(x2).unwrap();
    assert!(tz.curve().in_trace_zero(&p2));
    for v in [Variant::S, Variant::T] {
        let classes = tz.decompress(&tz.compress(&p2, v).unwrap()).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().any(|c| c.contains(&p2)));
    }
}

#[test]
fn closed_forms_solve_g3() {
    let tz = params(1_000_003, 3, 2, 5, 11);
    let k = *tz.curve().base();
    let mu = tz.curve().ext().mu();
    let (a, b) = (tz.curve().a(), tz.curve().b());
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let (s1, s2, t1, t2) = (k.random(&mut rng), k.random(&mut rng), k.random(&mut rng), k.random(&mut rng));
        let s3 = formulas::s3_from_g3(&k, a, b, s1, s2).unwrap();
        assert_eq!(tz.symmetrized_equation().eval(&k, &[s1, s2, s3]), k.zero());
        let t3 = formulas::t3_from_g3(&k, a, b, mu, t1, t2).unwrap();
        let s = formulas::s_from_t_n3(&k, mu, t1, t2, t3);
        assert_eq!(tz.symmetrized_equation().eval(&k, &s), k.zero());
    }
    assert!(formulas::s3_from_g3(&k, a, b, k.zero(), k.elem(3)).is_none());
}

#[test]
fn coordinate_formulas_match_symmetric_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (q, n) in [(1_000_003u128, 3usize), ((1 << 60) - 695, 5)] {
        let k = PrimeField::new(q).unwrap();
        let ext = ExtField::with_default_mu(k, n).unwrap();
        let curve = Curve::new(ext.clone(), k.elem(1), k.elem(7)).unwrap();
        let mu = ext.mu();
        let tz = TzParams {
            curve,
            g: MultiPoly::zero(n),
            by_last_table: CoefficientTable::default(),
            exceptional: Vec::new(),
            orders: None,
            mu_inv: k.inv(mu).unwrap(),
            third: k.inv(k.elem(3)).unwrap(),
        };
        for _ in 0..100 {
            let x = ext.random(&mut rng);
            let xs = ext.coords(&x);
            let e = tz.symmetric_functions(x);
            assert_eq!(tz.s_vector(x), e);
            if n == 3 {
                assert_eq!(formulas::s_coords_n3(&k, mu, xs), [e[0], e[1]]);
                let [t1, t2] = formulas::t_coords_n3(&k, xs);
                assert_eq!(formulas::s_from_t_n3(&k, mu, t1, t2, formulas::t3_n3(&k, mu, xs)).to_vec(), e);
            } else {
                assert_eq!(formulas::s_coords_n5(&k, mu, xs).to_vec(), e[..4]);
                let t = formulas::t_coords_n5(&k, mu, xs);
                assert_eq!(formulas::s_from_t_n5(&k, mu, &t).to_vec(), e[..4]);
                assert_eq!(formulas::s5_from_t_n5(&k, mu, &t, formulas::t5_n5(&k, mu, xs)), e[4]);
            }
        }
    }
}

#[test]
fn exhaustive_roundtrip_q7() {
    let tz = params(7, 3, 3, 1, 1);
    let points = trace_zero_points(&tz);
    assert!(!points.is_empty());
    for p in &points {
        if p.is_infinity() {
            assert_eq!(tz.compress(p, Variant::S), Err(Error::CannotCompressIdentity));
            continue;
        }
        let mut sets = Vec::new();
        for v in [Variant::S, Variant::T] {
            match tz.decompress(&tz.compress(p, v).unwrap()) {
                Ok(classes) => {
                    assert!(classes.iter().any(|c| c.contains(p)));
                    sets.push(classes);
                }
                Err(e) => assert_eq!(e, Error::DegenerateInput),
            }
        }
        if sets.len() == 2 {
            assert_eq!(sets[0], sets[1]);
        }
    }
}

#[test]
fn exceptional_points_are_filtered() {
    // q = 11, B = 5: y² = x³ + x + 5 has a rational 3-torsion point
    let tz = (1..11)
        .flat_map(|b| (0..11).map(move |a| (a, b)))
        .filter_map(|(a, b)| {
            let k = PrimeField::new(11).unwrap();
            let ext = ExtField::with_default_mu(k, 5).unwrap();
            let curve = Curve::new(ext, k.elem(a), k.elem(b)).ok()?;
            let tz = TzParams::new(curve).ok()?;
            (!tz.exceptional_set().is_empty()).then_some(tz)
        })
        .next()
        .expect("some curve over F_11 has a rational 3-torsion point");
    let k = *tz.curve().base();
    for &x in tz.exceptional_set() {
        let s = tz.symmetric_functions(x);
        let c = CompressedPoint::new(Variant::S, &s[..4]).unwrap();
        // x solves the system but never appears in the output
        assert!(tz.solve_by_factoring(&s).unwrap().contains(&x));
        match tz.decompress(&c) {
            Ok(classes) => assert!(classes.iter().all(|cl| !cl.x_coords().contains(&x))),
            Err(e) => assert_eq!(e, Error::DegenerateInput),
        }
        assert_eq!(tz.symmetrized_equation().eval(&k, &s), k.zero());
    }
}

#[test]
fn rejects_non_members_and_identity() {
    let (tz, p) = example_n3();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = tz.curve().random_point(&mut rng);
    assert_eq!(tz.compress(&r, Variant::T), Err(Error::NotTraceZero));
    assert!(tz.compress_unchecked(&r, Variant::T).is_ok());
    assert_eq!(tz.compress(&CurvePoint::Infinity, Variant::S), Err(Error::CannotCompressIdentity));
    let c5 = CompressedPoint::new(Variant::S, &[Fp::ZERO; 4]).unwrap();
    assert!(matches!(tz.decompress(&c5), Err(Error::InvalidInput(_))));
    assert!(tz.classes_equal(&p, &tz.curve().frobenius_point(&p, 2)));
    assert!(tz.classes_equal(&p, &tz.curve().neg(&p)));
}

#[test]
fn degenerate_n3_input() {
    let tz = params(1_000_003, 3, 2, 5, 11);
    let k = *tz.curve().base();
    let a = tz.curve().a();
    let c = CompressedPoint::new(Variant::S, &[k.zero(), a]).unwrap();
    assert_eq!(tz.decompress(&c), Err(Error::DegenerateInput));
    let c = CompressedPoint::new(Variant::S, &[k.zero(), k.add(a, k.one())]).unwrap();
    assert_eq!(tz.decompress(&c), Ok(Vec::new()));
}

#[test]
fn random_points_roundtrip_and_profile() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let tz = example_n5();
    for _ in 0..20 {
        let p = tz.random_point(&mut rng);
        let c = tz.compress(&p, Variant::T).unwrap();
        let (classes, prof) = tz.decompress_profiled(&c).unwrap();
        assert!(classes.len() <= 6);
        assert!(classes.iter().any(|cl| cl.contains(&p)));
        assert!(prof.root_extraction <= prof.total);
        assert_eq!(classes, tz.decompress(&tz.compress(&p, Variant::S).unwrap()).unwrap());
    }
}
