//! The JSON parameter file: a flat object with the keys `q`, `n`, `mu`, `A`,
//! `B` and optionally `order_fq` (= |E(F_q)|). Integers are written as decimal
//! strings; plain JSON numbers are accepted on input when they fit in a u64.

use std::fmt;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ec::{Curve, GroupOrders, EXHAUSTIVE_COUNT_LIMIT};
use crate::error::{Error, Result};
use crate::ff_ext::{select_mu, ExtField};
use crate::ff_prime::PrimeField;
use crate::field::Field;
use crate::tz_codec::TzParams;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamFile {
    pub q: u128,
    pub n: usize,
    pub mu: u128,
    pub a: u128,
    pub b: u128,
    pub order_fq: Option<BigUint>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    q: Decimal,
    n: Decimal,
    mu: Decimal,
    #[serde(rename = "A")]
    a: Decimal,
    #[serde(rename = "B")]
    b: Decimal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order_fq: Option<Decimal>,
}

/// A non-negative integer as a decimal string or a JSON number.
struct Decimal(BigUint);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Decimal(BigUint::from(v))),
            Repr::Str(s) => {
                let t = s.trim();
                if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(serde::de::Error::custom(format!("expected a decimal integer, got {s:?}")));
                }
                t.parse().map(Decimal).map_err(serde::de::Error::custom)
            }
        }
    }
}

fn small(name: &str, v: &BigUint) -> Result<u128> {
    u128::try_from(v).map_err(|_| Error::InvalidParams(format!("{name} = {v} does not fit in 128 bits")))
}

impl ParamFile {
    /// Validates everything and chooses μ when it is not given.
    pub fn setup(q: u128, n: usize, a: u128, b: u128, mu: Option<u128>, order_fq: Option<BigUint>) -> Result<Self> {
        let k = PrimeField::new(q)?;
        let mu = match mu {
            Some(m) => m,
            None => select_mu(&k, n)?.value(),
        };
        let p = ParamFile { q, n, mu, a, b, order_fq };
        p.validate()?;
        Ok(p)
    }

    /// A random non-singular curve over F_q.
    pub fn random_curve<R: Rng + ?Sized>(q: u128, n: usize, rng: &mut R) -> Result<Self> {
        let k = PrimeField::new(q)?;
        let mu = select_mu(&k, n)?.value();
        loop {
            let (a, b) = (k.random(rng).value(), k.random(rng).value());
            match Self::setup(q, n, a, b, Some(mu), None) {
                Err(Error::InvalidCurve) => continue,
                other => return other,
            }
        }
    }

    /// Checks: q prime > 3, n ∈ {2, 3, 5} dividing q − 1, μ not an n-th
    /// power, A and B reduced, the curve non-singular and |E(F_q)| within
    /// the Hasse bound (and equal to the point count when q is small).
    pub fn validate(&self) -> Result<()> {
        let curve = self.curve()?;
        if let Some(order) = &self.order_fq {
            curve.group_orders(Some(order))?;
            if self.q <= EXHAUSTIVE_COUNT_LIMIT {
                let counted = curve.count_points_base()?;
                if &counted != order {
                    return Err(Error::InvalidParams(format!("order_fq = {order} but E(F_q) has {counted} points")));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.q)
    }

    pub fn ext(&self) -> Result<ExtField> {
        let k = self.field()?;
        if self.mu >= self.q {
            return Err(Error::InvalidParams(format!("mu = {} is not reduced mod q", self.mu)));
        }
        ExtField::new(k, self.n, k.elem(self.mu))
    }

    pub fn curve(&self) -> Result<Curve> {
        let ext = self.ext()?;
        for (name, v) in [("A", self.a), ("B", self.b)] {
            if v >= self.q {
                return Err(Error::InvalidParams(format!("{name} = {v} is not reduced mod q")));
            }
        }
        let k = *ext.base();
        Curve::new(ext, k.elem(self.a), k.elem(self.b))
    }

    /// The orders when |E(F_q)| is supplied or small enough to count.
    pub fn group_orders(&self) -> Result<Option<GroupOrders>> {
        let curve = self.curve()?;
        if self.order_fq.is_none() && self.q > EXHAUSTIVE_COUNT_LIMIT {
            return Ok(None);
        }
        curve.group_orders(self.order_fq.as_ref()).map(Some)
    }

    /// Codec parameters, with group orders attached when known.
    pub fn tz_params(&self) -> Result<TzParams> {
        let tz = TzParams::new(self.curve()?)?;
        Ok(match self.group_orders()? {
            Some(o) => tz.with_orders(o),
            None => tz,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parse_err = |e: serde_json::Error| Error::Parse(format!("parameter file: {e}"));
        let object: serde_json::Map<String, serde_json::Value> = serde_json::from_str(text).map_err(parse_err)?;
        let raw = Raw::deserialize(serde_json::Value::Object(object)).map_err(parse_err)?;
        let n = small("n", &raw.n.0)?;
        if n > 64 {
            return Err(Error::InvalidParams(format!("extension degree {n} is not one of 2, 3, 5")));
        }
        let p = ParamFile {
            q: small("q", &raw.q.0)?,
            n: n as usize,
            mu: small("mu", &raw.mu.0)?,
            a: small("A", &raw.a.0)?,
            b: small("B", &raw.b.0)?,
            order_fq: raw.order_fq.map(|d| d.0),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        let raw = Raw {
            q: Decimal(self.q.into()),
            n: Decimal(self.n.into()),
            mu: Decimal(self.mu.into()),
            a: Decimal(self.a.into()),
            b: Decimal(self.b.into()),
            order_fq: self.order_fq.clone().map(Decimal),
        };
        serde_json::to_string_pretty(&raw).expect("plain object")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json() + "\n").map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }
}

impl fmt::Display for ParamFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q = {}, n = {}, mu = {}, E: y^2 = x^3 + {}x + {}", self.q, self.n, self.mu, self.a, self.b)
    }
}
