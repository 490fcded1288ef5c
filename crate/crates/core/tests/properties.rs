mod common;

use std::sync::OnceLock;

use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trace_zero::tz_codec::encoding;
use trace_zero::{CurvePoint, ParamFile, TzParams, Variant};

fn contexts() -> &'static [TzParams] {
    static CELL: OnceLock<Vec<TzParams>> = OnceLock::new();
    CELL.get_or_init(|| vec![n3_example(), n5_example(), tz(1_000_003, 3, 2, 17, 5), tz(1_000_151, 5, 3, 4, 9)])
}

fn point(i: usize, seed: u64) -> (&'static TzParams, CurvePoint) {
    let tz = &contexts()[i];
    (tz, tz.random_point(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn variant(t: bool) -> Variant {
    if t {
        Variant::T
    } else {
        Variant::S
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn random_points_lie_in_trace_zero(i in 0usize..4, seed: u64) {
        let (tz, p) = point(i, seed);
        prop_assert!(tz.curve().is_on_curve(&p));
        prop_assert!(tz.curve().in_trace_zero(&p));
        prop_assert!(tz.curve().trace(&p).is_infinity());
    }

    #[test]
    fn compression_is_constant_on_classes(i in 0usize..4, seed: u64, t: bool) {
        let (tz, p) = point(i, seed);
        prop_assume!(!p.is_infinity());
        let c = tz.compress(&p, variant(t)).unwrap();
        prop_assert_eq!(c.n(), tz.n());
        prop_assert_eq!(c.coords().len(), tz.n() - 1);
        for m in tz.class_of(&p).members() {
            prop_assert_eq!(tz.compress(m, variant(t)).unwrap(), c);
        }
    }

    #[test]
    fn decompression_recovers_the_class(i in 0usize..4, seed: u64, t: bool) {
        let (tz, p) = point(i, seed);
        prop_assume!(!p.is_infinity());
        let c = tz.compress(&p, variant(t)).unwrap();
        let classes = tz.decompress(&c).unwrap();
        prop_assert!(!classes.is_empty() && classes.len() <= 6);
        prop_assert!(classes.iter().any(|cl| cl.contains(&p)));
        if tz.n() == 3 && c.coords()[0].value() != 0 {
            prop_assert_eq!(classes.len(), 1);
        }
        for cl in &classes {
            prop_assert!(cl.members().iter().all(|m| tz.curve().in_trace_zero(m)));
            prop_assert_eq!(tz.compress(&cl.canonical(), variant(t)).unwrap(), c);
        }
        let other = tz.compress(&p, variant(!t)).unwrap();
        prop_assert_eq!(tz.decompress(&other).unwrap(), classes);
    }

    #[test]
    fn encodings_roundtrip(i in 0usize..4, seed: u64, t: bool) {
        let (tz, p) = point(i, seed);
        prop_assume!(!p.is_infinity());
        let k = *tz.curve().base();
        let c = tz.compress(&p, variant(t)).unwrap();
        let bytes = encoding::to_bytes(&k, &c);
        prop_assert_eq!(bytes.len(), 1 + (tz.n() - 1) * k.byte_len());
        prop_assert_eq!(encoding::from_bytes(&k, &bytes).unwrap(), c);
        prop_assert_eq!(encoding::from_text(&k, variant(t), &encoding::to_text(&c)).unwrap(), c);
        let text = tz.curve().format_point(&p);
        prop_assert_eq!(tz.curve().parse_point(&text).unwrap(), p);
    }

    #[test]
    fn scalar_multiples_stay_compatible(i in 0usize..4, seed: u64, k: u64) {
        let (tz, p) = point(i, seed);
        let curve = tz.curve();
        let k = BigUint::from(k);
        let kp = curve.scalar_mul(&k, &p);
        prop_assume!(!kp.is_infinity());
        let want = tz.compress(&kp, Variant::S).unwrap();
        let i = (seed as usize) % tz.n();
        let conj = curve.neg(&curve.frobenius_point(&p, i));
        prop_assert_eq!(tz.compress(&curve.scalar_mul(&k, &conj), Variant::S).unwrap(), want);
    }

    #[test]
    fn param_files_roundtrip(seed: u64, n5: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, n) = if n5 { (10_061, 5) } else { (10_009, 3) };
        let p = ParamFile::random_curve(q, n, &mut rng).unwrap();
        prop_assert_eq!(ParamFile::from_json(&p.to_json()).unwrap(), p.clone());
        let orders = p.group_orders().unwrap().unwrap();
        prop_assert_eq!(&orders.tn * &orders.fq, orders.fqn);
    }
}
