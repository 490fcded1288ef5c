#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use trace_zero::{Curve, ExtElement, ExtField, Fp, MultiPoly, PrimeField, TzParams};

pub const Q79: u128 = (1 << 79) - 67;
pub const Q60: u128 = (1 << 60) - 695;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Reads `name = polynomial` entries; `#` starts a comment and indented lines
/// continue the previous entry.
pub fn golden(file: &str) -> Vec<(String, String)> {
    let text = fs::read_to_string(golden_dir().join(file)).unwrap();
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap();
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            out.last_mut().expect("continuation without an entry").1.push_str(line);
        } else {
            let (name, rhs) = line.split_once('=').expect("name = polynomial");
            out.push((name.trim().to_string(), rhs.to_string()));
        }
    }
    out
}

pub fn golden_polys(k: &PrimeField, file: &str, vars: &[&str], consts: &[(&str, Fp)]) -> Vec<(String, MultiPoly<Fp>)> {
    golden(file).into_iter().map(|(name, rhs)| (name, MultiPoly::parse(k, vars, consts, &rhs).unwrap())).collect()
}

pub fn curve(q: u128, n: usize, mu: u128, a: u128, b: u128) -> Curve {
    let k = PrimeField::new(q).unwrap();
    let ext = ExtField::new(k, n, k.elem(mu)).unwrap();
    Curve::new(ext, k.elem(a), k.elem(b)).unwrap()
}

pub fn tz(q: u128, n: usize, mu: u128, a: u128, b: u128) -> TzParams {
    TzParams::new(curve(q, n, mu, a, b)).unwrap()
}

pub fn elem(tz: &TzParams, coords: &[u128]) -> ExtElement {
    tz.curve().ext().from_u128_coords(coords).unwrap()
}

pub fn n3_example() -> TzParams {
    tz(Q79, 3, 3, 1, 368)
}

pub fn n5_example() -> TzParams {
    tz(Q60, 5, 3, 1, 135)
}

pub const N3_POINT_X: [u128; 3] = [260970034280824124824722, 431820813779055023676698, 496444425404915392572065];
pub const N3_S: [u128; 2] = [178447193035157787121145, 159414355696879147312583];
pub const N3_T: [u128; 2] = [260970034280824124824722, 492721032528256431308437];
pub const N3_CONJUGATES: [[u128; 3]; 3] = [
    N3_POINT_X,
    [260970034280824124824722, 318397306102476549147695, 124410673032925784958936],
    [260970034280824124824722, 458707699733097601881649, 588070721176787997175041],
];

pub const N5_POINT_X: [u128; 5] = [697340666673436518, 801324486821916366, 191523769921581598, 193574581008452232, 808272437423069772];
pub const N5_S: [u128; 4] = [27938819546643747, 599177118073319826, 587362643323803394, 899440023033601132];
pub const N5_T: [u128; 4] = [697340666673436518, 553115374027544004, 315951679773440541, 285024754797056479];
pub const N5_CONJUGATES: [[u128; 5]; 5] = [
    N5_POINT_X,
    [697340666673436518, 836712212802745328, 506907366758395901, 517000572714098077, 268866625974497959],
    [697340666673436518, 960543166171367987, 126552294958642222, 448251978051599093, 74315924307841334],
    [697340666673436518, 810370833605859760, 539948230971075773, 1032750511909194579, 944608723064092684],
    [697340666673436518, 49813814418649402, 940911346603997068, 114265365530348581, 209779298444190813],
];
pub const N5_THREE_CLASS_X: [u128; 5] =
    [760010909342414570, 568064535058825884, 244006548504894796, 446522043528586762, 731314735984238952];

pub fn fp(k: &PrimeField, v: &[u128]) -> Vec<Fp> {
    v.iter().map(|&x| k.elem(x)).collect()
}
