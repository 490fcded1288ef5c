//! Short Weierstrass curves y² = x³ + Ax + B over F_q, with points over the
//! Kummer extension F_{q^n}: group law, Frobenius, trace, trace-zero subgroup,
//! group orders and the torsion points that pollute the n = 5 equations.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::ff_ext::{ExtElement, ExtField};
use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;
use crate::unipoly::{self, UniPoly};

/// Largest q for which |E(F_q)| is counted by enumeration when not supplied.
pub const EXHAUSTIVE_COUNT_LIMIT: u128 = 1 << 22;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: ExtElement, y: ExtElement },
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<ExtElement> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(*x),
        }
    }

    pub fn y(&self) -> Option<ExtElement> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { y, .. } => Some(*y),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    ext: ExtField,
    a: Fp,
    b: Fp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrders {
    pub fq: BigUint,
    pub fqn: BigUint,
    pub tn: BigUint,
}

impl Curve {
    pub fn new(ext: ExtField, a: Fp, b: Fp) -> Result<Self> {
        let k = ext.base();
        let disc = k.add(k.mul(k.elem(4), k.pow_u128(a, 3)), k.mul(k.elem(27), k.sqr(b)));
        if disc == Fp::ZERO {
            return Err(Error::InvalidCurve);
        }
        Ok(Curve { ext, a, b })
    }

    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn base(&self) -> &PrimeField {
        self.ext.base()
    }

    pub fn n(&self) -> usize {
        self.ext.n()
    }

    pub fn a(&self) -> Fp {
        self.a
    }

    pub fn b(&self) -> Fp {
        self.b
    }

    /// x³ + Ax + B.
    pub fn rhs(&self, x: ExtElement) -> ExtElement {
        let e = &self.ext;
        let x2 = e.sqr(x);
        let t = e.add(x2, e.from_base(self.a));
        e.add(e.mul(t, x), e.from_base(self.b))
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match *p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.ext.sqr(y) == self.rhs(x),
        }
    }

    pub fn point(&self, x: ExtElement, y: ExtElement) -> Result<CurvePoint> {
        let p = CurvePoint::Affine { x, y };
        if self.is_on_curve(&p) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// The point with the given x and the lexicographically smaller y, if any.
    pub fn lift_x(&self, x: ExtElement) -> Option<CurvePoint> {
        self.ext.sqrt(self.rhs(x)).map(|y| CurvePoint::Affine { x, y })
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x, y: self.ext.neg(y) },
        }
    }

    /// Group law; inputs are assumed to lie on the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let e = &self.ext;
        let (x1, y1, x2, y2) = match (*p, *q) {
            (CurvePoint::Infinity, _) => return *q,
            (_, CurvePoint::Infinity) => return *p,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if e.add(y1, y2) == e.zero() {
                return CurvePoint::Infinity;
            }
            let num = e.add(e.mul(e.from_u64(3), e.sqr(x1)), e.from_base(self.a));
            let den = e.add(y1, y1);
            e.mul(num, e.inv(den).expect("y ≠ 0"))
        } else {
            e.mul(e.sub(y2, y1), e.inv(e.sub(x2, x1)).expect("x1 ≠ x2"))
        };
        let x3 = e.sub(e.sub(e.sqr(lambda), x1), x2);
        let y3 = e.sub(e.mul(lambda, e.sub(x1, x3)), y1);
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn checked_add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        if !self.is_on_curve(p) || !self.is_on_curve(q) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.add(p, q))
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.add(p, &self.neg(q))
    }

    pub fn scalar_mul(&self, k: &BigUint, p: &CurvePoint) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        for i in (0..k.bits()).rev() {
            acc = self.add(&acc, &acc);
            if k.bit(i) {
                acc = self.add(&acc, p);
            }
        }
        acc
    }

    pub fn scalar_mul_u64(&self, k: u64, p: &CurvePoint) -> CurvePoint {
        self.scalar_mul(&BigUint::from(k), p)
    }

    /// φ^i(P) = (x^{q^i}, y^{q^i}).
    pub fn frobenius_point(&self, p: &CurvePoint, i: usize) -> CurvePoint {
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: self.ext.frobenius_pow(x, i), y: self.ext.frobenius_pow(y, i) },
        }
    }

    /// P + φ(P) + … + φ^{n−2}(P) by doubling the number of terms; n − 1 is a
    /// power of two for every supported n.
    fn partial_trace(&self, p: &CurvePoint) -> CurvePoint {
        let mut acc = *p;
        let mut m = 1;
        while m < self.n() - 1 {
            acc = self.add(&acc, &self.frobenius_point(&acc, m));
            m *= 2;
        }
        acc
    }

    /// P + φ(P) + … + φ^{n−1}(P), a point of E(F_q).
    pub fn trace(&self, p: &CurvePoint) -> CurvePoint {
        let acc = self.add(&self.partial_trace(p), &self.frobenius_point(p, self.n() - 1));
        debug_assert!(acc.x().is_none_or(|x| self.ext.is_base(x) && self.ext.is_base(acc.y().unwrap())));
        acc
    }

    pub fn in_trace_zero(&self, p: &CurvePoint) -> bool {
        self.partial_trace(p) == self.neg(&self.frobenius_point(p, self.n() - 1))
    }

    /// A uniformly random affine point of E(F_{q^n}).
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> CurvePoint {
        loop {
            let x = self.ext.random(rng);
            if let Some(CurvePoint::Affine { x, y }) = self.lift_x(x) {
                let y = if rng.gen::<bool>() { self.ext.neg(y) } else { y };
                return CurvePoint::Affine { x, y };
            }
        }
    }

    /// A random point of T_n as nP − Tr(P) for random P ∈ E(F_{q^n}). This is
    /// uniform on T_n whenever n is prime to |T_n|. May return O.
    pub fn random_trace_zero<R: Rng + ?Sized>(&self, rng: &mut R) -> CurvePoint {
        let p = self.random_point(rng);
        let np = self.scalar_mul_u64(self.n() as u64, &p);
        self.sub(&np, &self.trace(&p))
    }

    /// Text form: `inf` or `([x0, …], [y0, …])`.
    pub fn format_point(&self, p: &CurvePoint) -> String {
        match *p {
            CurvePoint::Infinity => "inf".to_string(),
            CurvePoint::Affine { x, y } => format!("({}, {})", self.ext.format(x), self.ext.format(y)),
        }
    }

    /// Parses the text form and checks the point is on the curve.
    pub fn parse_point(&self, s: &str) -> Result<CurvePoint> {
        let s = s.trim();
        if s == "inf" {
            return Ok(CurvePoint::Infinity);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected \"inf\" or \"([..], [..])\", got {s:?}")))?;
        let split = inner.find(']').ok_or_else(|| Error::Parse(format!("malformed point {s:?}")))?;
        let (xs, rest) = inner.split_at(split + 1);
        let ys = rest.trim_start().strip_prefix(',').ok_or_else(|| Error::Parse(format!("malformed point {s:?}")))?;
        let x = self.ext.parse(xs)?;
        let y = self.ext.parse(ys)?;
        self.point(x, y)
    }

    /// |E(F_q)| by summing Legendre symbols.
    pub fn count_points_base(&self) -> Result<BigUint> {
        let k = self.base();
        let q = k.modulus();
        if q > EXHAUSTIVE_COUNT_LIMIT {
            return Err(Error::InvalidParams(format!("q = {q} is too large to count points by enumeration; supply |E(F_q)|")));
        }
        let mut total: i128 = q as i128 + 1;
        for x in 0..q {
            let x = k.elem(x);
            let r = k.add(k.mul(k.add(k.sqr(x), self.a), x), self.b);
            total += k.legendre(r) as i128;
        }
        Ok(BigUint::from(total as u128))
    }

    /// |E(F_q)|, |E(F_{q^n})| and |T_n|, from |E(F_q)| (counted when not
    /// given) and the power sums of the Frobenius eigenvalues.
    pub fn group_orders(&self, order_fq: Option<&BigUint>) -> Result<GroupOrders> {
        let fq = match order_fq {
            Some(v) => v.clone(),
            None => self.count_points_base()?,
        };
        let q = BigUint::from(self.base().modulus());
        let n = self.n() as u32;
        let fqn = order_over_extension(&q, &fq, n)?;
        let (tn, r) = fqn.div_rem(&fq);
        if !r.is_zero() {
            return Err(Error::Internal(format!("|E(F_q)| = {fq} does not divide |E(F_q^{n})| = {fqn}")));
        }
        Ok(GroupOrders { fq, fqn, tn })
    }

    /// The x-coordinates of Q + R with O ≠ Q ∈ E[3](F_q) and R ∈ E[2] ∩ T_n.
    pub fn torsion_exceptional_set(&self) -> Result<Vec<ExtElement>> {
        let e = &self.ext;
        let k = self.base();
        // ψ_3 = 3x⁴ + 6Ax² + 12Bx − A²
        let psi3 =
            UniPoly::from_coeffs(k, vec![k.neg(k.sqr(self.a)), k.mul(k.elem(12), self.b), k.mul(k.elem(6), self.a), k.zero(), k.elem(3)]);
        let mut three_torsion = Vec::new();
        for x in unipoly::roots_in_field(&psi3, k)? {
            let xe = e.from_base(x);
            if let Some(y) = k.sqrt(self.rhs(xe).coord(0)) {
                three_torsion.push(CurvePoint::Affine { x: xe, y: e.from_base(y[0]) });
            }
        }
        let mut two_torsion = vec![CurvePoint::Infinity];
        two_torsion.extend(self.two_torsion_trace_zero()?);
        let mut out = Vec::new();
        for q in &three_torsion {
            for r in &two_torsion {
                if let Some(x) = self.add(q, r).x() {
                    out.push(x);
                }
            }
        }
        out.sort();
        out.dedup();
        if out.len() > 16 {
            return Err(Error::Internal(format!("exceptional set has {} elements", out.len())));
        }
        Ok(out)
    }

    /// Points (x, 0) ∈ E(F_{q^n}) of trace zero.
    pub fn two_torsion_trace_zero(&self) -> Result<Vec<CurvePoint>> {
        let e = &self.ext;
        let cubic = UniPoly::from_coeffs(e, vec![e.from_base(self.b), e.from_base(self.a), e.zero(), e.one()]);
        Ok(unipoly::roots_in_field(&cubic, e)?
            .into_iter()
            .map(|x| CurvePoint::Affine { x, y: e.zero() })
            .filter(|p| self.in_trace_zero(p))
            .collect())
    }
}

/// |E(F_{q^n})| = q^n + 1 − s_n with s_0 = 2, s_1 = t, s_k = t s_{k−1} − q s_{k−2}
/// and t = q + 1 − |E(F_q)|.
pub fn order_over_extension(q: &BigUint, order_fq: &BigUint, n: u32) -> Result<BigUint> {
    use num_bigint::BigInt;
    let qi = BigInt::from(q.clone());
    let t: BigInt = &qi + 1u32 - BigInt::from(order_fq.clone());
    if &t * &t > BigInt::from(4) * &qi {
        return Err(Error::InvalidParams(format!("|E(F_q)| = {order_fq} violates the Hasse bound")));
    }
    let (mut s0, mut s1) = (BigInt::from(2), t.clone());
    for _ in 1..n {
        let s2 = &t * &s1 - &qi * &s0;
        s0 = s1;
        s1 = s2;
    }
    let sn = if n == 0 { s0 } else { s1 };
    let total: BigInt = qi.pow(n) + 1u32 - sn;
    total.to_biguint().ok_or_else(|| Error::Internal("negative group order".into()))
}

/// log2 rounded to the nearest integer, for reporting sizes in bits.
pub fn rounded_bits(v: &BigUint) -> u64 {
    if v.is_zero() {
        return 0;
    }
    let bits = v.bits();
    let top = if bits > 53 { (v >> (bits - 53)).to_f64().unwrap() } else { v.to_f64().unwrap() };
    let shift = bits.saturating_sub(53) as f64;
    (top.log2() + shift).round() as u64
}

impl fmt::Display for GroupOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|E(F_q)| = {}, |E(F_q^n)| = {}, |T_n| = {}", self.fq, self.fqn, self.tn)
    }
}

/// True when `v` is prime (Miller–Rabin with fixed bases, for reporting).
pub fn probably_prime(v: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *v < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if *v == BigUint::from(p) {
            return true;
        }
        if (v % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let vm1 = v - &one;
    let s = vm1.trailing_zeros().unwrap_or(0);
    let d = &vm1 >> s;
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        let mut x = BigUint::from(a).modpow(&d, v);
        if x == one || x == vm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, v);
            if x == vm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn curve(q: u128, n: usize, a: i128, b: i128) -> Curve {
        let k = PrimeField::new(q).unwrap();
        let ext = ExtField::with_default_mu(k, n).unwrap();
        Curve::new(ext, k.from_i128(a), k.from_i128(b)).unwrap()
    }

    fn all_ext(e: &ExtField) -> Vec<ExtElement> {
        let q = e.base().modulus();
        let n = e.n();
        (0..q.pow(n as u32))
            .map(|v| {
                let c: Vec<u128> = (0..n).map(|j| (v / q.pow(j as u32)) % q).collect();
                e.from_u128_coords(&c).unwrap()
            })
            .collect()
    }

    fn all_points(c: &Curve) -> Vec<CurvePoint> {
        let mut pts = vec![CurvePoint::Infinity];
        for x in all_ext(c.ext()) {
            if let Some(p) = c.lift_x(x) {
                pts.push(p);
                let n = c.neg(&p);
                if n != p {
                    pts.push(n);
                }
            }
        }
        pts
    }

    #[test]
    fn small_curve_order_and_law() {
        let c = curve(7, 3, 1, 1);
        assert_eq!(c.count_points_base().unwrap(), BigUint::from(5u32));
        let base_points: Vec<_> =
            all_points(&c).into_iter().filter(|p| p.x().is_none_or(|x| c.ext().is_base(x) && c.ext().is_base(p.y().unwrap()))).collect();
        assert_eq!(base_points.len(), 5);
        for p in &base_points {
            assert!(c.scalar_mul_u64(5, p).is_infinity());
            assert_eq!(c.add(p, &CurvePoint::Infinity), *p);
            assert!(c.add(p, &c.neg(p)).is_infinity());
            assert_eq!(c.frobenius_point(p, 1), *p);
            assert_eq!(c.trace(p), c.scalar_mul_u64(3, p));
        }
        assert!(Curve::new(c.ext().clone(), c.base().elem(0), c.base().elem(0)).is_err());
    }

    #[test]
    fn exhaustive_orders_and_trace() {
        for (q, n, a, b) in [(7u128, 3usize, 1i128, 1i128), (7, 2, 1, 1), (13, 3, 2, 5), (11, 5, 1, 3), (31, 3, 3, 4)] {
            let c = curve(q, n, a, b);
            let pts = all_points(&c);
            let orders = c.group_orders(None).unwrap();
            assert_eq!(BigUint::from(pts.len()), orders.fqn, "q={q} n={n}");
            let tz: Vec<_> = pts.iter().filter(|p| c.in_trace_zero(p)).collect();
            assert_eq!(BigUint::from(tz.len()), orders.tn);
            assert_eq!(&orders.tn * &orders.fq, orders.fqn);
            if q.pow(n as u32) < 2000 {
                for p in &pts {
                    let mut explicit = CurvePoint::Infinity;
                    for i in 0..n {
                        explicit = c.add(&explicit, &c.frobenius_point(p, i));
                    }
                    assert_eq!(c.trace(p), explicit);
                }
            }
        }
    }

    #[test]
    fn group_axioms_and_frobenius_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let c = curve((1 << 60) - 695, 5, 1, 135);
        for _ in 0..30 {
            let (p, q, r) = (c.random_point(&mut rng), c.random_point(&mut rng), c.random_point(&mut rng));
            assert_eq!(c.add(&c.add(&p, &q), &r), c.add(&p, &c.add(&q, &r)));
            assert_eq!(c.add(&p, &q), c.add(&q, &p));
            assert_eq!(c.frobenius_point(&c.add(&p, &q), 1), c.add(&c.frobenius_point(&p, 1), &c.frobenius_point(&q, 1)));
            assert_eq!(c.trace(&c.frobenius_point(&p, 1)), c.trace(&p));
            let t = c.random_trace_zero(&mut rng);
            let u = c.random_trace_zero(&mut rng);
            assert!(c.in_trace_zero(&t));
            assert!(c.in_trace_zero(&c.frobenius_point(&t, 2)));
            assert!(c.in_trace_zero(&c.add(&t, &u)));
            assert!(c.in_trace_zero(&c.neg(&t)));
        }
    }

    #[test]
    fn t2_characterization() {
        // T_2 = {O} ∪ {(X, Y): X ∈ F_q, Y ∉ F_q} ∪ E[2](F_q)
        for (q, a, b) in [(7u128, 1i128, 1i128), (11, 1, 3), (13, 2, 5), (7, 3, 0)] {
            let c = curve(q, 2, a, b);
            for p in all_points(&c) {
                let expected = match p {
                    CurvePoint::Infinity => true,
                    CurvePoint::Affine { x, y } => {
                        let e = c.ext();
                        e.is_base(x) && (!e.is_base(y) || y == e.zero())
                    }
                };
                assert_eq!(c.in_trace_zero(&p), expected, "q={q} {p:?}");
            }
        }
    }

    #[test]
    fn example_point_is_trace_zero() {
        let k = PrimeField::new((1 << 79) - 67).unwrap();
        let ext = ExtField::new(k, 3, k.elem(3)).unwrap();
        let c = Curve::new(ext.clone(), k.elem(1), k.elem(368)).unwrap();
        let x = ext.parse("[260970034280824124824722, 431820813779055023676698, 496444425404915392572065]").unwrap();
        let p = c.lift_x(x).expect("x lifts");
        assert!(c.in_trace_zero(&p));
    }

    #[test]
    fn example_group_orders() {
        let k = PrimeField::new((1 << 79) - 67).unwrap();
        let ext = ExtField::new(k, 3, k.elem(3)).unwrap();
        let c = Curve::new(ext, k.elem(1), k.elem(368)).unwrap();
        let fq: BigUint = "604462909807248002793550".parse().unwrap();
        let o = c.group_orders(Some(&fq)).unwrap();
        assert!(probably_prime(&o.tn));
        assert_eq!(rounded_bits(&o.tn), 158);
        // the supplied order annihilates random base-field points
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let x = c.ext().from_base(k.random(&mut rng));
            if let Some(p) = c.lift_x(x) {
                if c.ext().is_base(p.y().unwrap()) {
                    assert!(c.scalar_mul(&fq, &p).is_infinity());
                }
            }
        }
        assert!(c.group_orders(None).is_err());
        assert!(c.group_orders(Some(&BigUint::from(5u32))).is_err());
    }

    #[test]
    fn exceptional_set_matches_enumeration() {
        // q = 11, n = 5: enumerate E[3](F_q) and E[2] ∩ T_5 directly
        let mut nonempty = 0;
        for (a, b) in [(1i128, 3i128), (2, 1), (0, 1), (1, 1), (3, 8), (5, 2)] {
            let c = match Curve::new(
                ExtField::with_default_mu(PrimeField::new(11).unwrap(), 5).unwrap(),
                PrimeField::new(11).unwrap().from_i128(a),
                PrimeField::new(11).unwrap().from_i128(b),
            ) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let e = c.ext();
            let three: Vec<_> = (0..11)
                .filter_map(|x| c.lift_x(e.from_u64(x)))
                .filter(|p| e.is_base(p.y().unwrap()))
                .flat_map(|p| [p, c.neg(&p)])
                .filter(|p| c.scalar_mul_u64(3, p).is_infinity())
                .collect();
            let two: Vec<_> = std::iter::once(CurvePoint::Infinity)
                .chain(all_ext(e).into_iter().filter(|&x| c.rhs(x) == e.zero()).map(|x| CurvePoint::Affine { x, y: e.zero() }))
                .filter(|p| c.in_trace_zero(p))
                .collect();
            let mut expect: Vec<_> = three.iter().flat_map(|q| two.iter().filter_map(|r| c.add(q, r).x())).collect();
            expect.sort();
            expect.dedup();
            assert_eq!(c.torsion_exceptional_set().unwrap(), expect, "A={a} B={b}");
            nonempty += usize::from(!expect.is_empty());
        }
        assert!(nonempty > 0);
    }

    #[test]
    fn point_text_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = curve(1_000_003, 3, 1, 7);
        for _ in 0..10 {
            let p = c.random_point(&mut rng);
            assert_eq!(c.parse_point(&c.format_point(&p)).unwrap(), p);
        }
        assert_eq!(c.parse_point("inf").unwrap(), CurvePoint::Infinity);
        assert_eq!(c.parse_point("([1, 0, 0], [1, 0, 0])"), Err(Error::NotOnCurve));
        assert!(c.parse_point("(1, 2)").is_err());
    }

    #[test]
    fn hasse_recurrence_small() {
        let q = BigUint::from(7u32);
        assert_eq!(order_over_extension(&q, &BigUint::from(5u32), 1).unwrap(), BigUint::from(5u32));
        // t = 3: s_2 = 9 − 14 = −5, |E(F_49)| = 49 + 1 + 5
        assert_eq!(order_over_extension(&q, &BigUint::from(5u32), 2).unwrap(), BigUint::from(55u32));
    }
}
