//! Timing harness: mean milliseconds per point for compression and
//! decompression of random T_n points.

use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ec::CurvePoint;
use crate::error::Result;
use crate::tz_codec::{CompressedPoint, TzParams, Variant};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Compress,
    Decompress,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Compress => "Compression",
            Op::Decompress => "Decompression",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub points: usize,
    pub warmup: usize,
    pub seed: u64,
    /// Restrict to one variant; both when `None`.
    pub variant: Option<Variant>,
    /// Restrict to one operation; both when `None`.
    pub op: Option<Op>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { points: 1000, warmup: 50, seed: 0, variant: None, op: None }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub op: Op,
    pub variant: Variant,
    pub points: usize,
    pub mean_ms: f64,
    /// Share of decompression time spent extracting roots.
    pub root_share: Option<f64>,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            Variant::S => "s_i",
            Variant::T => "t_i",
        };
        write!(f, "{:<14} {v}  {:>12.6} ms", self.op.to_string(), self.mean_ms)?;
        if let Some(s) = self.root_share {
            write!(f, "  (root extraction {:.1}%)", 100.0 * s)?;
        }
        Ok(())
    }
}

fn ms(d: Duration, count: usize) -> f64 {
    d.as_secs_f64() * 1e3 / count.max(1) as f64
}

/// Draws `points + warmup` random T_n points from a seeded generator and times
/// each requested (operation, variant) pair over the same points.
pub fn run(tz: &TzParams, cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let total = cfg.points + cfg.warmup;
    let pts: Vec<CurvePoint> = (0..total).map(|_| tz.random_point(&mut rng)).collect();
    let variants = match cfg.variant {
        Some(v) => vec![v],
        None => vec![Variant::S, Variant::T],
    };
    let ops = match cfg.op {
        Some(o) => vec![o],
        None => vec![Op::Compress, Op::Decompress],
    };
    let mut rows = Vec::new();
    for &op in &ops {
        for &variant in &variants {
            let compressed: Vec<CompressedPoint> = pts.iter().map(|p| tz.compress_unchecked(p, variant)).collect::<Result<_>>()?;
            let (warm, timed) = compressed.split_at(cfg.warmup);
            let row = match op {
                Op::Compress => {
                    let (warm_pts, timed_pts) = pts.split_at(cfg.warmup);
                    for p in warm_pts {
                        std::hint::black_box(tz.compress_unchecked(p, variant)?);
                    }
                    let start = Instant::now();
                    for p in timed_pts {
                        std::hint::black_box(tz.compress_unchecked(p, variant)?);
                    }
                    BenchRow { op, variant, points: cfg.points, mean_ms: ms(start.elapsed(), cfg.points), root_share: None }
                }
                Op::Decompress => {
                    for c in warm {
                        std::hint::black_box(tz.decompress(c).ok());
                    }
                    let start = Instant::now();
                    for c in timed {
                        std::hint::black_box(tz.decompress(c).ok());
                    }
                    let mean_ms = ms(start.elapsed(), cfg.points);
                    let (mut all, mut roots) = (Duration::ZERO, Duration::ZERO);
                    for c in timed {
                        if let Ok((_, prof)) = tz.decompress_profiled(c) {
                            all += prof.total;
                            roots += prof.root_extraction;
                        }
                    }
                    let root_share = (all > Duration::ZERO).then(|| roots.as_secs_f64() / all.as_secs_f64());
                    BenchRow { op, variant, points: cfg.points, mean_ms, root_share }
                }
            };
            rows.push(row);
        }
    }
    Ok(rows)
}
