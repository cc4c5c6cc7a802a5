//! Command-line interface: counting, enumeration, series tables, identity
//! verification, bijection application, and path rendering.
//!
//! Every invocation is deterministic: identical inputs yield byte-identical
//! outputs. Exit codes: 0 on success, 1 when a verification finds a
//! mismatch, 2 on usage errors.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use jagged_core::burge;
use jagged_core::error::Error;
use jagged_core::families;
use jagged_core::jagged::{self, JaggedPartition, Restriction};
use jagged_core::partition::Partition;
use jagged_core::path::{for_each_restricted_path, path_counts, LatticePath};
use jagged_core::render;
use jagged_core::series::{self, BivariateSeries, PowerSeries};

#[derive(Parser)]
#[command(
    name = "jagged",
    about = "Jagged partitions, restricted lattice paths, and their count identities",
    after_help = "The --n flag always carries the jagged-side weight: families P, E and R \
                  count objects of weight 2n, families J and O objects of weight n.\n\
                  Set JAGGED_THREADS to parallelize verification fan-out (default 1)."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count one family member: J, P, E, R or O
    Count(CountArgs),
    /// List family members as JSON lines
    Enumerate(EnumerateArgs),
    /// Emit a truncated series coefficient table as JSON
    Series(SeriesArgs),
    /// Check a theorem or identity and emit a JSON report
    Verify(VerifyArgs),
    /// Apply a bijection or classical map to a JSON-encoded object
    Map(MapArgs),
    /// Draw a path as ASCII art or SVG
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    J,
    P,
    E,
    R,
    O,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: Family,
    #[arg(long = "K")]
    k: u32,
    #[arg(long = "i")]
    i: u32,
    /// Jagged-side weight n (families P, E, R count weight 2n)
    #[arg(long)]
    n: u64,
    /// Restrict to length (J, E) or charge (P)
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFamily {
    Jagged,
    E,
    R,
    Over,
    Paths,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: EnumFamily,
    #[arg(long = "K")]
    k: u32,
    #[arg(long = "i")]
    i: u32,
    /// Jagged-side weight n (e, r and paths enumerate weight 2n)
    #[arg(long)]
    n: u64,
    /// Restrict to length (jagged, e) or charge (paths)
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// J_{K,i}(z;q), bivariate
    J,
    /// G_{K,i}(z;q), bivariate
    G,
    /// G_{K,i}(z;q^2), the path generating function
    Gq2,
    /// G_{K,i}(1;q), univariate
    G1,
    /// The overpartition product form, univariate
    Product,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum, ignore_case = true)]
    kind: SeriesKind,
    #[arg(long = "K")]
    k: u32,
    #[arg(long = "i")]
    i: u32,
    #[arg(long)]
    qmax: usize,
    #[arg(long, default_value_t = 12)]
    zmax: usize,
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    /// J_{K,i}(z;q) = G_{K,i}(z;q) coefficientwise
    Gj,
    /// G_{K,i}(z;q^2) coefficients equal exhaustive path counts
    Paths,
    /// G_{K,i}(1;q) equals the product form
    Products,
    /// The Euler relation sum q^{n(n-1)/2} x^n/(q)_n = (-x)_inf
    Euler,
    /// The q-binomial theorem sum q^{k(k+1)/2} x^k [m,k]_q = (-xq)_m
    Qbinomial,
}

#[derive(Args)]
struct VerifyArgs {
    /// 1: J(n,m) = P(2n,m); 2: J(n,m) = E(2n,m) and sum J = R = O
    #[arg(long, conflicts_with = "identity")]
    theorem: Option<u8>,
    #[arg(long, value_enum, ignore_case = true)]
    identity: Option<Identity>,
    #[arg(long = "K", default_value_t = 3)]
    k: u32,
    #[arg(long = "i", default_value_t = 1)]
    i: u32,
    #[arg(long, default_value_t = 10)]
    nmax: u64,
    #[arg(long, default_value_t = 20)]
    qmax: usize,
    #[arg(long, default_value_t = 12)]
    zmax: usize,
    #[arg(long, default_value_t = 8)]
    mmax: usize,
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapOp {
    /// jagged partition -> E-partition (doubling)
    JaggedToE,
    /// E-partition -> jagged partition (inverse doubling)
    EToJagged,
    /// jagged partition -> overpartition (pairing scan)
    JaggedToOver,
    /// 0^2 1 sequence -> partition of triple weight (experimental)
    P2,
    /// partition -> conjugate partition
    Conjugate,
    /// partition -> frequency table
    Frequencies,
    /// partition -> Frobenius symbol
    PartitionFrobenius,
    /// partition -> successive ranks
    SuccessiveRanks,
    /// partition -> Burge word
    BurgeWord,
    /// Burge word -> path from (0, --start)
    WordToPath,
    /// path -> Burge word
    PathToWord,
    /// Burge word -> partition
    BurgeInverse,
    /// path -> E-partition through peak pairs and shuffles (needs --K)
    PeakPair,
    /// path -> Frobenius symbol with odd successive ranks
    Frobenius,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long, value_enum, ignore_case = true)]
    op: MapOp,
    /// JSON encoding of the input object
    #[arg(long = "in")]
    input: String,
    /// Start height for word-to-path
    #[arg(long, default_value_t = 0)]
    start: u32,
    #[arg(long = "K", default_value_t = 0)]
    k: u32,
    /// Confirm use of the experimental p2 transform
    #[arg(long)]
    experimental: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Args)]
struct RenderArgs {
    /// JSON path object {"start":a,"steps":"N/S/H string"}
    #[arg(long = "in")]
    input: String,
    #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
    format: RenderFormat,
    /// File to write SVG output to (stdout if omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Serialize)]
struct SeriesTable {
    qmax: usize,
    zmax: usize,
    coeff: Vec<Vec<i64>>,
}

impl SeriesTable {
    fn bivariate(s: &BivariateSeries) -> Self {
        Self {
            qmax: s.q_max(),
            zmax: s.z_max(),
            coeff: s.rows().to_vec(),
        }
    }

    fn univariate(s: &PowerSeries) -> Self {
        Self {
            qmax: s.q_max(),
            zmax: 0,
            coeff: vec![s.coeffs().to_vec()],
        }
    }
}

#[derive(Serialize)]
struct CoeffFailure {
    m: usize,
    n: usize,
    lhs: i64,
    rhs: i64,
}

#[derive(Serialize)]
struct IdentityReport {
    description: String,
    checked: u64,
    failures: Vec<CoeffFailure>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns Ok(false) when a verification ran and found a mismatch.
fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Count(a) => {
            let r = Restriction::new(a.k, a.i)?;
            let value = match a.family {
                Family::J => {
                    let items = jagged::enumerate_jagged(&r, a.n, None)?;
                    items
                        .iter()
                        .filter(|j| a.m.is_none_or(|m| j.len() as u64 == m))
                        .count() as u64
                }
                Family::P => {
                    let t = path_counts(&r, 2 * a.n)?;
                    match a.m {
                        Some(m) => t.get(2 * a.n, m),
                        None => t.row_sum(2 * a.n),
                    }
                }
                Family::E => families::count_e(&r, 2 * a.n, a.m.map(|m| m as usize))?,
                Family::R => families::count_r(&r, 2 * a.n)?,
                Family::O => families::count_o(&r, a.n)?,
            };
            println!("{value}");
            Ok(true)
        }
        Cmd::Enumerate(a) => {
            let r = Restriction::new(a.k, a.i)?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            match a.family {
                EnumFamily::Jagged => {
                    for j in jagged::enumerate_jagged(&r, a.n, a.m.map(|m| m as usize))? {
                        writeln!(out, "{}", serde_json::to_string(&j).unwrap()).ok();
                    }
                }
                EnumFamily::E => {
                    for p in families::enumerate_e(&r, 2 * a.n)? {
                        if a.m.is_none_or(|m| p.len() as u64 == m) {
                            writeln!(out, "{}", serde_json::to_string(&p).unwrap()).ok();
                        }
                    }
                }
                EnumFamily::R => {
                    for p in families::enumerate_r(&r, 2 * a.n)? {
                        writeln!(out, "{}", serde_json::to_string(&p).unwrap()).ok();
                    }
                }
                EnumFamily::Over => {
                    for o in families::enumerate_overpartitions(&r, a.n)? {
                        writeln!(out, "{}", serde_json::to_string(&o).unwrap()).ok();
                    }
                }
                EnumFamily::Paths => {
                    for_each_restricted_path(a.k, r.start_height(), 2 * a.n, |p| {
                        if p.weight() == 2 * a.n && a.m.is_none_or(|m| p.charge() == m) {
                            writeln!(out, "{}", serde_json::to_string(p).unwrap()).ok();
                        }
                    });
                }
            }
            Ok(true)
        }
        Cmd::Series(a) => {
            let r = Restriction::new(a.k, a.i)?;
            let table = match a.kind {
                SeriesKind::J => SeriesTable::bivariate(&series::j_series(&r, a.qmax, a.zmax)?),
                SeriesKind::G => SeriesTable::bivariate(&series::g_series(&r, a.qmax, a.zmax)?),
                SeriesKind::Gq2 => {
                    SeriesTable::bivariate(&series::g_series_q2(&r, a.qmax, a.zmax)?)
                }
                SeriesKind::G1 => SeriesTable::univariate(&series::g_series_z1(&r, a.qmax)?),
                SeriesKind::Product => {
                    SeriesTable::univariate(&series::product_series(&r, a.qmax)?)
                }
            };
            print_json(&table, a.pretty);
            Ok(true)
        }
        Cmd::Verify(a) => run_verify(a),
        Cmd::Map(a) => run_map(a),
        Cmd::Render(a) => {
            let path: LatticePath =
                serde_json::from_str(&a.input).map_err(|e| Error::Parse(e.to_string()))?;
            match a.format {
                RenderFormat::Ascii => print!("{}", render::render_ascii(&path)),
                RenderFormat::Svg => {
                    let svg = render::render_svg(&path);
                    match a.out {
                        Some(file) => std::fs::write(&file, svg)
                            .map_err(|e| Error::Parse(format!("writing {file:?}: {e}")))?,
                        None => print!("{svg}"),
                    }
                }
            }
            Ok(true)
        }
    }
}

fn run_verify(a: VerifyArgs) -> Result<bool, Error> {
    if let Some(theorem) = a.theorem {
        let r = Restriction::new(a.k, a.i)?;
        let report = match theorem {
            1 => families::verify_theorem1(&r, a.nmax)?,
            2 => families::verify_theorem2(&r, a.nmax)?,
            other => {
                return Err(Error::Parse(format!(
                    "unknown theorem {other}; use 1 or 2"
                )))
            }
        };
        print_json(&report, a.pretty);
        return Ok(report.passed());
    }
    let Some(identity) = a.identity else {
        return Err(Error::Parse(
            "verify needs either --theorem or --identity".into(),
        ));
    };
    let report = match identity {
        Identity::Gj => {
            let r = Restriction::new(a.k, a.i)?;
            let j = series::j_series(&r, a.qmax, a.zmax)?;
            let g = series::g_series(&r, a.qmax, a.zmax)?;
            identity_report(
                format!(
                    "J = G coefficientwise for K={}, i={} up to q^{}, z^{}",
                    a.k, a.i, a.qmax, a.zmax
                ),
                ((a.qmax + 1) * (a.zmax + 1)) as u64,
                j.first_mismatch(&g),
            )
        }
        Identity::Paths => {
            let r = Restriction::new(a.k, a.i)?;
            let w_max = if a.qmax.is_multiple_of(2) { a.qmax } else { a.qmax - 1 };
            let g = series::g_series_q2(&r, w_max, 2 * w_max)?;
            let t = path_counts(&r, w_max as u64)?;
            let mut mismatch = None;
            let mut checked = 0;
            'outer: for w in (0..=w_max).step_by(2) {
                for m in 0..=2 * w_max {
                    checked += 1;
                    let lhs = g.coeff(m, w);
                    let rhs = t.get(w as u64, m as u64) as i64;
                    if lhs != rhs {
                        mismatch = Some((m, w, lhs, rhs));
                        break 'outer;
                    }
                }
            }
            identity_report(
                format!(
                    "G(z;q^2) equals path counts for K={}, i={} up to weight {}",
                    a.k, a.i, w_max
                ),
                checked,
                mismatch,
            )
        }
        Identity::Products => {
            let r = Restriction::new(a.k, a.i)?;
            let sum = series::g_series_z1(&r, a.qmax)?;
            let prod = series::product_series(&r, a.qmax)?;
            identity_report(
                format!(
                    "G(1;q) equals the product form for K={}, i={} up to q^{}",
                    a.k, a.i, a.qmax
                ),
                (a.qmax + 1) as u64,
                sum.first_mismatch(&prod).map(|(n, x, y)| (0, n, x, y)),
            )
        }
        Identity::Euler => identity_report(
            format!("Euler relation up to q^{}, x^{}", a.qmax, a.zmax),
            ((a.qmax + 1) * (a.zmax + 1)) as u64,
            series::euler_check(a.qmax, a.zmax),
        ),
        Identity::Qbinomial => {
            let res = series::q_binomial_theorem_check(a.mmax, a.qmax);
            identity_report(
                format!("q-binomial theorem for m <= {} up to q^{}", a.mmax, a.qmax),
                ((a.mmax + 1) * (a.qmax + 1)) as u64,
                res.map(|(_m, zm, qn, x, y)| (zm, qn, x, y)),
            )
        }
    };
    print_json(&report, a.pretty);
    Ok(report.failures.is_empty())
}

fn identity_report(
    description: String,
    checked: u64,
    mismatch: Option<(usize, usize, i64, i64)>,
) -> IdentityReport {
    IdentityReport {
        description,
        checked,
        failures: mismatch
            .map(|(m, n, lhs, rhs)| CoeffFailure { m, n, lhs, rhs })
            .into_iter()
            .collect(),
    }
}

fn run_map(a: MapArgs) -> Result<bool, Error> {
    let partition = |s: &str| -> Result<Partition, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    };
    let jagged_in = |s: &str| -> Result<JaggedPartition, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    };
    let path_in = |s: &str| -> Result<LatticePath, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    };
    let word_in = |s: &str| -> Result<burge::BurgeWord, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    };
    let out = match a.op {
        MapOp::JaggedToE => {
            serde_json::to_value(jagged::jagged_to_epartition(&jagged_in(&a.input)?)).unwrap()
        }
        MapOp::EToJagged => {
            serde_json::to_value(jagged::epartition_to_jagged(&partition(&a.input)?)?).unwrap()
        }
        MapOp::JaggedToOver => {
            serde_json::to_value(jagged::jagged_to_overpartition(&jagged_in(&a.input)?)).unwrap()
        }
        MapOp::P2 => {
            if !a.experimental {
                return Err(Error::Parse(
                    "the p2 transform is experimental; pass --experimental to use it".into(),
                ));
            }
            let seq: Vec<u32> =
                serde_json::from_str(&a.input).map_err(|e| Error::Parse(e.to_string()))?;
            serde_json::to_value(jagged::p2_transform(&seq)?).unwrap()
        }
        MapOp::Conjugate => serde_json::to_value(partition(&a.input)?.conjugate()).unwrap(),
        MapOp::Frequencies => {
            let freq = partition(&a.input)?.frequencies();
            let mut map = serde_json::Map::new();
            for v in 1..=freq.max_value() {
                if freq.get(v) > 0 {
                    map.insert(v.to_string(), serde_json::json!(freq.get(v)));
                }
            }
            serde_json::Value::Object(map)
        }
        MapOp::PartitionFrobenius => {
            serde_json::to_value(partition(&a.input)?.frobenius()).unwrap()
        }
        MapOp::SuccessiveRanks => {
            serde_json::to_value(partition(&a.input)?.successive_ranks()).unwrap()
        }
        MapOp::BurgeWord => {
            serde_json::to_value(burge::burge_word(&partition(&a.input)?)).unwrap()
        }
        MapOp::WordToPath => {
            serde_json::to_value(burge::word_to_path(&word_in(&a.input)?, a.start)?).unwrap()
        }
        MapOp::PathToWord => {
            serde_json::to_value(burge::path_to_word(&path_in(&a.input)?)).unwrap()
        }
        MapOp::BurgeInverse => {
            serde_json::to_value(burge::burge_inverse(&word_in(&a.input)?)?).unwrap()
        }
        MapOp::PeakPair => {
            if a.k < 2 {
                return Err(Error::Parse("peak-pair needs --K >= 2".into()));
            }
            serde_json::to_value(burge::peak_pair_map(&path_in(&a.input)?, a.k)?).unwrap()
        }
        MapOp::Frobenius => {
            serde_json::to_value(burge::path_to_frobenius(&path_in(&a.input)?)?).unwrap()
        }
    };
    println!("{}", serde_json::to_string(&out).unwrap());
    Ok(true)
}

fn print_json<T: Serialize>(value: &T, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    } else {
        println!("{}", serde_json::to_string(value).unwrap());
    }
}
