//! Brute-force oracles over small fields: exhaustive enumeration of E(F_{q^n})
//! and T_n, the vanishing locus of the symmetrized equation, compression
//! roundtrips, the T_2 description and the zero-sum property of f_m.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::ec::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::ff_ext::{ExtElement, ExtField};
use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;
use crate::multipoly::{self, MultiPoly};
use crate::tz_codec::{TzParams, Variant};

pub const DEFAULT_MAX_Q: u128 = 31;
/// Vanishing sets are stored as one bit per field element.
pub const HARD_MAX_Q: u128 = 64;

/// Visits every point of F_q^{m−1} in lexicographic order and hands `leaf` the
/// index Σ v_i q^{m−2−i} together with the coefficients of `f` as a polynomial
/// in its last variable at that point.
pub fn for_each_fibre(k: &PrimeField, f: &MultiPoly<Fp>, mut leaf: impl FnMut(usize, &[Fp])) {
    let m = f.nvars();
    assert!(m >= 1);
    let dims: Vec<usize> = (0..m).map(|i| f.degree_in(i).unwrap_or(0) as usize + 1).collect();
    let mut dense = vec![Fp::ZERO; dims.iter().product()];
    for &(mono, c) in f.terms() {
        let idx = (0..m).fold(0, |acc, i| acc * dims[i] + multipoly::exponent(mono, i) as usize);
        dense[idx] = c;
    }
    descend(k, &dense, &dims, 0, &mut leaf);
}

fn descend(k: &PrimeField, dense: &[Fp], dims: &[usize], prefix: usize, leaf: &mut impl FnMut(usize, &[Fp])) {
    if dims.len() == 1 {
        leaf(prefix, dense);
        return;
    }
    let q = k.modulus() as usize;
    let inner: usize = dims[1..].iter().product();
    let mut buf = vec![Fp::ZERO; inner];
    for v in 0..q {
        let x = k.elem(v as u128);
        buf.copy_from_slice(&dense[(dims[0] - 1) * inner..]);
        for e in (0..dims[0] - 1).rev() {
            for (j, b) in buf.iter_mut().enumerate() {
                *b = k.add(k.mul(*b, x), dense[e * inner + j]);
            }
        }
        descend(k, &buf, &dims[1..], prefix * q + v, leaf);
    }
}

/// Bit v of entry i is set when f(point_i, v) = 0.
fn vanishing_masks(k: &PrimeField, f: &MultiPoly<Fp>) -> Vec<u64> {
    let q = k.modulus() as usize;
    let mut masks = vec![0u64; q.pow(f.nvars() as u32 - 1)];
    for_each_fibre(k, f, |i, coeffs| {
        let mut mask = 0u64;
        for v in 0..q {
            let x = k.elem(v as u128);
            let val = coeffs.iter().rev().fold(k.zero(), |acc, &c| k.add(k.mul(acc, x), c));
            if val == Fp::ZERO {
                mask |= 1 << v;
            }
        }
        masks[i] = mask;
    });
    masks
}

fn check_small(k: &PrimeField, max_q: u128) -> Result<()> {
    let q = k.modulus();
    if q > max_q.min(HARD_MAX_Q) {
        return Err(Error::InvalidParams(format!("exhaustive checks need q ≤ {}, got {q}", max_q.min(HARD_MAX_Q))));
    }
    Ok(())
}

/// Every element of F_{q^n}, counting in base q with coordinate 0 fastest.
fn all_elements(ext: &ExtField) -> impl Iterator<Item = ExtElement> + '_ {
    let k = ext.base();
    let n = ext.n();
    let last = k.elem(k.modulus() - 1);
    std::iter::successors(Some(ext.zero()), move |&x| {
        let mut c = [Fp::ZERO; 5];
        c[..n].copy_from_slice(ext.coords(&x));
        c[..n].iter_mut().position(|v| {
            let wrapped = *v == last;
            *v = if wrapped { Fp::ZERO } else { k.add(*v, k.one()) };
            !wrapped
        })?;
        Some(ext.from_coords(&c[..n]).expect("n coordinates"))
    })
}

/// |E(F_q)| by counting pairs (x, y).
fn count_base_points(curve: &Curve) -> u128 {
    let k = curve.base();
    let q = k.modulus();
    let mut squares = vec![0u128; q as usize];
    for y in 0..q {
        squares[k.sqr(k.elem(y)).value() as usize] += 1;
    }
    let affine: u128 = (0..q)
        .map(|x| {
            let x = k.elem(x);
            let r = k.add(k.mul(k.add(k.sqr(x), curve.a()), x), curve.b());
            squares[r.value() as usize]
        })
        .sum();
    affine + 1
}

/// Results of walking all of E(F_{q^n}) for n ∈ {3, 5}.
#[derive(Clone, Debug, Default)]
pub struct Census {
    pub order_fq: u128,
    pub order_fqn: u128,
    pub order_tn: u128,
    /// Classes {±φ^i(P)} of T_n \ {O}.
    pub classes: usize,
    /// Classes whose compression decodes to DegenerateInput.
    pub degenerate: usize,
    /// Non-degenerate classes with s_1 ≠ 0.
    pub s1_nonzero: usize,
    pub roundtrip_failures: Vec<CurvePoint>,
    pub variant_mismatches: Vec<CurvePoint>,
    /// n = 3 classes with s_1 ≠ 0 that did not decode to a single class.
    pub multi_class: Vec<CurvePoint>,
    /// Number of decoded classes against how often it occurred.
    pub class_histogram: BTreeMap<usize, usize>,
    /// x with (X, Y) ∈ E(F_{q^n}) where g_n(s(x)) = 0 disagrees with x ∈ x(T_n) ∪ L.
    pub equation_mismatches: Vec<ExtElement>,
    /// Elements of L that lie in T_n or do not solve the equation.
    pub exceptional_violations: Vec<ExtElement>,
    /// n = 3: x where the Weil restriction of f_3 disagrees with membership in T_3.
    pub weil_mismatches: Vec<ExtElement>,
}

impl Census {
    pub fn clean(&self) -> bool {
        self.roundtrip_failures.is_empty()
            && self.variant_mismatches.is_empty()
            && self.multi_class.is_empty()
            && self.equation_mismatches.is_empty()
            && self.exceptional_violations.is_empty()
            && self.weil_mismatches.is_empty()
            && self.order_tn * self.order_fq == self.order_fqn
    }
}

/// Enumerates E(F_{q^n}) one Frobenius orbit of x-coordinates at a time.
pub fn census(tz: &TzParams, max_q: u128) -> Result<Census> {
    let curve = tz.curve();
    let ext = curve.ext();
    let k = curve.base();
    let n = tz.n();
    check_small(k, max_q)?;
    let q = k.modulus() as usize;
    let masks = vanishing_masks(k, tz.symmetrized_equation());
    let weil = if n == 3 { Some(multipoly::weil_restrict_f3(ext, curve.a(), curve.b())?) } else { None };
    let exceptional = tz.exceptional_set();

    let mut out = Census { order_fq: count_base_points(curve), order_fqn: 1, order_tn: 1, ..Census::default() };
    for x in all_elements(ext) {
        if !ext.is_least_conjugate(x) {
            continue;
        }
        let orbit = if ext.is_base(x) { 1 } else { n as u128 };
        let rhs = curve.rhs(x);
        let on_curve = if rhs == ext.zero() {
            1
        } else if ext.is_square(rhs) {
            2
        } else {
            0
        };
        out.order_fqn += orbit * on_curve;
        if on_curve == 0 {
            continue;
        }
        let s = tz.s_vector(x);
        let idx = s[..n - 1].iter().fold(0, |acc, v| acc * q + v.value() as usize);
        let vanishes = masks[idx] >> s[n - 1].value() & 1 == 1;
        let in_l = exceptional.binary_search(&x).is_ok();
        let p = curve.lift_x(x).ok_or_else(|| Error::Internal("square without a root".into()))?;
        let in_t = curve.in_trace_zero(&p);
        if vanishes != (in_t || in_l) {
            out.equation_mismatches.push(x);
        }
        if in_l && (in_t || !vanishes) {
            out.exceptional_violations.push(x);
        }
        if let Some(w) = &weil {
            if (w.eval(k, ext.coords(&x)) == Fp::ZERO) != in_t {
                out.weil_mismatches.push(x);
            }
        }
        if in_t {
            out.order_tn += orbit * on_curve;
            out.classes += 1;
            roundtrip(tz, &p, s[0], &mut out)?;
        }
    }
    Ok(out)
}

fn roundtrip(tz: &TzParams, p: &CurvePoint, s1: Fp, out: &mut Census) -> Result<()> {
    let class = tz.class_of(p);
    let mut decoded = Vec::with_capacity(2);
    for v in [Variant::S, Variant::T] {
        let c = tz.compress_unchecked(p, v)?;
        if class.members().iter().any(|m| tz.compress_unchecked(m, v).ok() != Some(c)) {
            out.roundtrip_failures.push(*p);
            return Ok(());
        }
        match tz.decompress(&c) {
            Ok(classes) => decoded.push(classes),
            Err(Error::DegenerateInput) => {
                out.degenerate += 1;
                return Ok(());
            }
            Err(e) => return Err(e),
        }
    }
    if !decoded[0].iter().any(|c| c.contains(p)) {
        out.roundtrip_failures.push(*p);
    }
    if decoded[0] != decoded[1] {
        out.variant_mismatches.push(*p);
    }
    *out.class_histogram.entry(decoded[0].len()).or_default() += 1;
    if s1 != Fp::ZERO {
        out.s1_nonzero += 1;
        if tz.n() == 3 && decoded[0].len() != 1 {
            out.multi_class.push(*p);
        }
    }
    Ok(())
}

/// Exhaustive comparison of T_2 with {(X, Y) : X ∈ F_q, Y ∉ F_q} ∪ E[2](F_q).
#[derive(Clone, Debug, Default)]
pub struct T2Census {
    pub order_fq: u128,
    pub order_fq2: u128,
    pub order_t2: u128,
    pub mismatches: Vec<CurvePoint>,
}

pub fn t2_census(curve: &Curve, max_q: u128) -> Result<T2Census> {
    let ext = curve.ext();
    if ext.n() != 2 {
        return Err(Error::InvalidParams(format!("T_2 census needs n = 2, got {}", ext.n())));
    }
    check_small(curve.base(), max_q)?;
    let mut out = T2Census { order_fq: count_base_points(curve), order_fq2: 1, order_t2: 1, ..T2Census::default() };
    for x in all_elements(ext) {
        let Some(p) = curve.lift_x(x) else { continue };
        let y = p.y().expect("affine");
        let pts = if y == ext.zero() { vec![p] } else { vec![p, curve.neg(&p)] };
        for pt in pts {
            out.order_fq2 += 1;
            let in_t = curve.in_trace_zero(&pt);
            let predicted = ext.is_base(x) && (!ext.is_base(y) || y == ext.zero());
            if in_t {
                out.order_t2 += 1;
            }
            if in_t != predicted {
                out.mismatches.push(pt);
            }
        }
    }
    Ok(out)
}

/// Exhaustive check over F_q^m that f_m(x_1, …, x_m) = 0 exactly when the x_i
/// lift to points of E(F_{q^2}) with ±P_1 ± … ± P_m = O.
#[derive(Clone, Debug, Default)]
pub struct SemaevCensus {
    pub m: usize,
    pub tuples: usize,
    pub vanishing: usize,
    pub discrepancies: Vec<Vec<Fp>>,
}

pub fn semaev_census(k: &PrimeField, a: Fp, b: Fp, m: usize, max_q: u128) -> Result<SemaevCensus> {
    check_small(k, max_q)?;
    let ext = ExtField::with_default_mu(*k, 2)?;
    let curve = Curve::new(ext.clone(), a, b)?;
    let f = multipoly::semaev(k, m, a, b)?;
    let q = k.modulus() as usize;
    // every x ∈ F_q lifts over F_{q^2}
    let lifts: Vec<CurvePoint> =
        (0..q).map(|x| curve.lift_x(ext.from_base(k.elem(x as u128))).expect("quadratic extension contains the root")).collect();
    let mut out = SemaevCensus { m, ..SemaevCensus::default() };
    for_each_fibre(k, &f, |idx, coeffs| {
        let mut digits = vec![0usize; m - 1];
        let mut r = idx;
        for d in digits.iter_mut().rev() {
            *d = r % q;
            r /= q;
        }
        // x-coordinates of P_1 ± P_2 ± … ± P_{m−1}
        let mut sums = vec![lifts[digits[0]]];
        for &d in &digits[1..] {
            sums = sums.iter().flat_map(|s| [curve.add(s, &lifts[d]), curve.sub(s, &lifts[d])]).collect();
        }
        let reachable: Vec<ExtElement> = sums.iter().filter_map(|s| s.x()).collect();
        for v in 0..q {
            let x = k.elem(v as u128);
            let val = coeffs.iter().rev().fold(k.zero(), |acc, &c| k.add(k.mul(acc, x), c));
            let zero_sum = reachable.contains(&ext.from_base(x));
            out.tuples += 1;
            if val == Fp::ZERO {
                out.vanishing += 1;
            }
            if (val == Fp::ZERO) != zero_sum {
                let mut t: Vec<Fp> = digits.iter().map(|&d| k.elem(d as u128)).collect();
                t.push(x);
                out.discrepancies.push(t);
            }
        }
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn first<T: fmt::Debug>(v: &[T]) -> String {
    match v.first() {
        None => String::new(),
        Some(x) => format!("; first counterexample {x:?}"),
    }
}

/// Runs every oracle that applies to the curve.
pub fn run(curve: &Curve, max_q: u128) -> Result<Report> {
    let k = curve.base();
    check_small(k, max_q)?;
    let mut report = Report::default();
    let max_m = if k.modulus() <= 11 { 5 } else { 4 };
    for m in 3..=max_m {
        let s = semaev_census(k, curve.a(), curve.b(), m, max_q)?;
        report.push(
            format!("f_{m} vanishes exactly on zero-sum tuples"),
            s.discrepancies.is_empty(),
            format!("{} tuples, {} zeros, {} discrepancies{}", s.tuples, s.vanishing, s.discrepancies.len(), first(&s.discrepancies)),
        );
    }
    match curve.n() {
        2 => {
            let c = t2_census(curve, max_q)?;
            report.push(
                "T_2 = {X ∈ F_q, Y ∉ F_q} ∪ E[2](F_q)",
                c.mismatches.is_empty(),
                format!("{} points of E(F_q^2), {} mismatches{}", c.order_fq2, c.mismatches.len(), first(&c.mismatches)),
            );
            report.push(
                "|T_2|·|E(F_q)| = |E(F_q^2)|",
                c.order_t2 * c.order_fq == c.order_fq2,
                format!("{} · {} vs {}", c.order_t2, c.order_fq, c.order_fq2),
            );
        }
        3 | 5 => {
            let n = curve.n();
            let tz = TzParams::new(curve.clone())?;
            let c = census(&tz, max_q)?;
            report.push(
                format!("|T_{n}|·|E(F_q)| = |E(F_q^{n})|"),
                c.order_tn * c.order_fq == c.order_fqn,
                format!("{} · {} vs {}", c.order_tn, c.order_fq, c.order_fqn),
            );
            let orders = curve.group_orders(None)?;
            report.push(
                "enumerated orders match the Frobenius recurrence",
                orders.fqn == BigUint::from(c.order_fqn) && orders.tn == BigUint::from(c.order_tn),
                format!("|E(F_q^{n})| = {}, |T_{n}| = {}", orders.fqn, orders.tn),
            );
            report.push(
                format!("g_{n}(s(x)) = 0 exactly on x(T_{n}) ∪ L"),
                c.equation_mismatches.is_empty(),
                format!(
                    "|L| = {}, {} mismatches{}",
                    tz.exceptional_set().len(),
                    c.equation_mismatches.len(),
                    first(&c.equation_mismatches)
                ),
            );
            if n == 5 {
                report.push(
                    "exceptional points solve the equation outside T_5",
                    c.exceptional_violations.is_empty(),
                    format!("{} violations{}", c.exceptional_violations.len(), first(&c.exceptional_violations)),
                );
            } else {
                report.push(
                    "Weil restriction of f_3 vanishes exactly on x(T_3)",
                    c.weil_mismatches.is_empty(),
                    format!("{} mismatches{}", c.weil_mismatches.len(), first(&c.weil_mismatches)),
                );
                report.push(
                    "single class whenever s_1 ≠ 0",
                    c.multi_class.is_empty(),
                    format!("{} classes with s_1 ≠ 0, {} ambiguous{}", c.s1_nonzero, c.multi_class.len(), first(&c.multi_class)),
                );
            }
            report.push(
                "roundtrip",
                c.roundtrip_failures.is_empty() && c.variant_mismatches.is_empty(),
                format!(
                    "{} classes, {} degenerate, {} failures, {} variant mismatches{}",
                    c.classes,
                    c.degenerate,
                    c.roundtrip_failures.len(),
                    c.variant_mismatches.len(),
                    first(&c.roundtrip_failures)
                ),
            );
        }
        n => return Err(Error::InvalidParams(format!("no self-test for n = {n}"))),
    }
    Ok(report)
}
