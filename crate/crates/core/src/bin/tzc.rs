use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trace_zero::bench::{self, BenchConfig, Op};
use trace_zero::ec::{probably_prime, rounded_bits};
use trace_zero::ff_prime::is_prime_u128;
use trace_zero::multipoly::{self, MultiPoly};
use trace_zero::tz_codec::encoding;
use trace_zero::{selftest, Error, Fp, ParamFile, Variant};

#[derive(Parser)]
#[command(name = "tzc", version, about = "Compact representation of trace zero points on elliptic curves")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, ValueEnum)]
enum VariantArg {
    S,
    T,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::S => Variant::S,
            VariantArg::T => Variant::T,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum OpArg {
    Compress,
    Decompress,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Equation {
    Semaev,
    Symmetrized,
    Restricted,
    SymmetricFunctions,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate parameters, choose μ, build the equations and write a parameter file.
    Setup {
        /// Field size q (decimal).
        #[arg(long, required_unless_present = "bits")]
        q: Option<u128>,
        /// Draw a random prime q of this many bits with n | q − 1 instead.
        #[arg(long, conflicts_with = "q")]
        bits: Option<u32>,
        #[arg(long)]
        n: usize,
        #[arg(short = 'A', long = "a", required_unless_present = "random_curve")]
        a: Option<u128>,
        #[arg(short = 'B', long = "b", required_unless_present = "random_curve")]
        b: Option<u128>,
        /// Draw A and B at random.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        random_curve: bool,
        /// μ for F_{q^n} = F_q[ζ]/(ζ^n − μ); chosen automatically when absent.
        #[arg(long)]
        mu: Option<u128>,
        /// |E(F_q)|, needed for group orders when q is too large to count.
        #[arg(long)]
        order_fq: Option<BigUint>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the JSON goes to stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compress a point of T_n.
    Compress {
        #[arg(short, long)]
        params: PathBuf,
        #[arg(long, value_enum, default_value = "s")]
        variant: VariantArg,
        /// Write the binary encoding to stdout.
        #[arg(long)]
        binary: bool,
        /// Skip the curve and trace zero membership checks.
        #[arg(long)]
        skip_check: bool,
        /// Compress a random point of T_n, printed on the line before its compression.
        #[arg(long, conflicts_with = "point")]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// The point as ([x0, …], [y0, …]); read from stdin when absent.
        point: Option<String>,
    },
    /// Recover the classes {±φ^i(P)} from a compressed point.
    Decompress {
        #[arg(short, long)]
        params: PathBuf,
        /// Variant of a text input; binary inputs carry it in the header.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Read the binary encoding.
        #[arg(long)]
        binary: bool,
        /// Print every member of each class instead of a representative.
        #[arg(long)]
        members: bool,
        /// Comma-separated coordinates, or a file for --binary; stdin when absent.
        input: Option<String>,
    },
    /// Mean time per point for compression and decompression.
    Bench {
        #[arg(short, long)]
        params: PathBuf,
        #[arg(long, default_value_t = 1000)]
        points: usize,
        #[arg(long, default_value_t = 50)]
        warmup: usize,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, value_enum)]
        op: Option<OpArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive checks over a small field.
    Selftest {
        #[arg(short, long)]
        params: PathBuf,
        #[arg(long, default_value_t = selftest::DEFAULT_MAX_Q)]
        max_q: u128,
    },
    /// Print the summation, symmetrized and restricted equations.
    DumpEquations {
        #[arg(short, long)]
        params: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        which: Equation,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Selftest,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn read_input(arg: Option<&str>) -> Result<String, Failure> {
    match arg {
        Some(s) if s != "-" => Ok(s.to_string()),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_bytes(arg: Option<&str>) -> Result<Vec<u8>, Failure> {
    match arg {
        Some(p) if p != "-" => fs::read(p).map_err(|e| Failure::Usage(format!("{p}: {e}"))),
        _ => {
            let mut b = Vec::new();
            io::stdin().read_to_end(&mut b)?;
            Ok(b)
        }
    }
}

fn random_prime(bits: u32, n: usize, rng: &mut impl Rng) -> Result<u128, Failure> {
    if !(4..=128).contains(&bits) {
        return Err(Failure::Usage(format!("--bits must be between 4 and 128, got {bits}")));
    }
    for _ in 0..100_000 {
        let top = 1u128 << (bits - 1);
        let q = top | (rng.gen::<u128>() & (top - 1)) | 1;
        if q > 3 && (q - 1).is_multiple_of(n as u128) && is_prime_u128(q) {
            return Ok(q);
        }
    }
    Err(Failure::Usage(format!("no {bits}-bit prime q with {n} | q - 1 found")))
}

#[allow(clippy::too_many_arguments)]
fn setup(
    q: Option<u128>,
    bits: Option<u32>,
    n: usize,
    a: Option<u128>,
    b: Option<u128>,
    random_curve: bool,
    mu: Option<u128>,
    order_fq: Option<BigUint>,
    seed: u64,
    output: Option<&Path>,
) -> CliResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = match (q, bits) {
        (Some(q), _) => q,
        (None, Some(bits)) => random_prime(bits, n, &mut rng)?,
        (None, None) => return Err(Failure::Usage("one of --q or --bits is required".into())),
    };
    let params = if random_curve {
        let p = ParamFile::random_curve(q, n, &mut rng)?;
        ParamFile::setup(p.q, p.n, p.a, p.b, mu.or(Some(p.mu)), order_fq)?
    } else {
        ParamFile::setup(q, n, a.unwrap_or(0), b.unwrap_or(0), mu, order_fq)?
    };

    let mut report = vec![params.to_string()];
    if n == 3 || n == 5 {
        let tz = params.tz_params()?;
        let g = tz.symmetrized_equation();
        report.push(format!("g_{n}: {} terms, total degree {}", g.len(), g.total_degree().unwrap_or(0)));
        if n == 5 {
            report.push(format!("|L| = {}", tz.exceptional_set().len()));
        }
    }
    match params.group_orders()? {
        Some(o) => {
            report.push(format!("|E(F_q)| = {}", o.fq));
            report.push(format!("|E(F_q^{n})| = {}", o.fqn));
            let kind = if probably_prime(&o.tn) { "prime" } else { "composite" };
            report.push(format!("|T_{n}| = {} ({kind}, {} bits, bit length {})", o.tn, rounded_bits(&o.tn), o.tn.bits()));
        }
        None => report.push("group orders unknown: supply --order-fq".into()),
    }
    let report = report.join("\n");
    match output {
        Some(path) => {
            params.save(path)?;
            println!("{report}\nwrote {}", path.display());
        }
        None => {
            println!("{}", params.to_json());
            eprintln!("{report}");
        }
    }
    Ok(())
}

fn compress(params: &Path, variant: Variant, binary: bool, skip_check: bool, random: bool, seed: u64, point: Option<&str>) -> CliResult {
    let pf = ParamFile::load(params)?;
    let tz = pf.tz_params()?;
    let curve = tz.curve();
    let p = if random {
        let p = tz.random_point(&mut ChaCha8Rng::seed_from_u64(seed));
        if !binary {
            println!("{}", curve.format_point(&p));
        }
        p
    } else {
        curve.parse_point(&read_input(point)?)?
    };
    let c = if skip_check { tz.compress_unchecked(&p, variant)? } else { tz.compress(&p, variant)? };
    if binary {
        io::stdout().write_all(&encoding::to_bytes(curve.base(), &c))?;
    } else {
        println!("{}", encoding::to_text(&c));
    }
    Ok(())
}

fn decompress(params: &Path, variant: Option<Variant>, binary: bool, members: bool, input: Option<&str>) -> CliResult {
    let pf = ParamFile::load(params)?;
    let tz = pf.tz_params()?;
    let k = *tz.curve().base();
    let c = if binary {
        let c = encoding::from_bytes(&k, &read_bytes(input)?)?;
        if variant.is_some_and(|v| v != c.variant()) {
            return Err(Failure::Usage("--variant disagrees with the binary header".into()));
        }
        c
    } else {
        encoding::from_text(&k, variant.unwrap_or(Variant::S), &read_input(input)?)?
    };
    if c.n() != tz.n() {
        return Err(Error::InvalidInput(format!("compressed point is for n = {}, parameters have n = {}", c.n(), tz.n())).into());
    }
    let classes = tz.decompress(&c)?;
    let out = io::stdout();
    let mut out = out.lock();
    for (i, class) in classes.iter().enumerate() {
        if members {
            if i > 0 {
                writeln!(out)?;
            }
            for m in class.members() {
                writeln!(out, "{}", tz.curve().format_point(m))?;
            }
        } else {
            writeln!(out, "{}", tz.curve().format_point(&class.canonical()))?;
        }
    }
    Ok(())
}

fn run_bench(params: &Path, cfg: BenchConfig) -> CliResult {
    let pf = ParamFile::load(params)?;
    let tz = pf.tz_params()?;
    println!("q = {}, n = {}, {} points, seed {}", pf.q, pf.n, cfg.points, cfg.seed);
    for row in bench::run(&tz, &cfg)? {
        println!("{row}");
    }
    Ok(())
}

fn run_selftest(params: &Path, max_q: u128) -> CliResult {
    let pf = ParamFile::load(params)?;
    let report = selftest::run(&pf.curve()?, max_q)?;
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Selftest)
    }
}

fn print_poly(title: &str, f: &MultiPoly<Fp>, names: &[&str]) {
    let degs: Vec<String> = (0..f.nvars()).map(|i| f.degree_in(i).unwrap_or(0).to_string()).collect();
    println!("# {title}: {} terms, total degree {}, degrees ({})", f.len(), f.total_degree().unwrap_or(0), degs.join(", "));
    println!("{}", f.to_text(names));
}

fn dump_equations(params: &Path, which: Equation) -> CliResult {
    let pf = ParamFile::load(params)?;
    let curve = pf.curve()?;
    let k = *curve.base();
    let n = pf.n;
    let xs: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let ss: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let zs: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let xs: Vec<&str> = xs.iter().map(String::as_str).collect();
    let ss: Vec<&str> = ss.iter().map(String::as_str).collect();
    let zs: Vec<&str> = zs.iter().map(String::as_str).collect();
    let want = |e: Equation| which == e || which == Equation::All;

    if want(Equation::Semaev) {
        let f = multipoly::semaev(&k, n, curve.a(), curve.b())?;
        print_poly(&format!("f_{n}(z1, …, z{n})"), &f, &zs);
    }
    if want(Equation::Symmetrized) && n != 2 {
        let tz = pf.tz_params()?;
        print_poly(&format!("g_{n}(s1, …, s{n})"), tz.symmetrized_equation(), &ss);
    }
    if want(Equation::Restricted) && n == 3 {
        let f = multipoly::weil_restrict_f3(curve.ext(), curve.a(), curve.b())?;
        print_poly("f_3 restricted to F_q in x = x0 + x1ζ + x2ζ²", &f, &xs);
    }
    if want(Equation::SymmetricFunctions) {
        for (i, e) in multipoly::restricted_symmetric_functions(curve.ext())?.iter().enumerate() {
            print_poly(&format!("s{} = e_{}(x, x^q, …)", i + 1, i + 1), e, &xs);
        }
    }
    Ok(())
}

fn dispatch(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Setup { q, bits, n, a, b, random_curve, mu, order_fq, seed, output } => {
            setup(q, bits, n, a, b, random_curve, mu, order_fq, seed, output.as_deref())
        }
        Cmd::Compress { params, variant, binary, skip_check, random, seed, point } => {
            compress(&params, variant.into(), binary, skip_check, random, seed, point.as_deref())
        }
        Cmd::Decompress { params, variant, binary, members, input } => {
            decompress(&params, variant.map(Into::into), binary, members, input.as_deref())
        }
        Cmd::Bench { params, points, warmup, variant, op, seed } => {
            let op = op.map(|o| match o {
                OpArg::Compress => Op::Compress,
                OpArg::Decompress => Op::Decompress,
            });
            run_bench(&params, BenchConfig { points, warmup, seed, variant: variant.map(Into::into), op })
        }
        Cmd::Selftest { params, max_q } => run_selftest(&params, max_q),
        Cmd::DumpEquations { params, which } => dump_equations(&params, which),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e @ Error::Internal(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Selftest) => {
            eprintln!("error: self-test failed");
            ExitCode::from(2)
        }
    }
}
