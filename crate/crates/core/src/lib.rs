pub mod bench;
pub mod ec;
pub mod error;
pub mod ff_ext;
pub mod ff_prime;
pub mod field;
pub mod multipoly;
pub mod paramfile;
pub mod selftest;
pub mod tz_codec;
pub mod unipoly;

pub use ec::{Curve, CurvePoint, GroupOrders};
pub use error::{Error, Result};
pub use ff_ext::{ExtElement, ExtField};
pub use ff_prime::{Fp, PrimeField};
pub use field::Field;
pub use multipoly::MultiPoly;
pub use paramfile::ParamFile;
pub use tz_codec::{CompressedPoint, PointClass, TzParams, Variant};
pub use unipoly::UniPoly;
