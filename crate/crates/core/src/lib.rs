//! Exact combinatorics of jagged partitions, restricted lattice paths, and
//! the partition families tied to them by count identities.
//!
//! The toolkit has six layers:
//!
//! - [`partition`]: ordinary partitions with conjugates, frequency tables,
//!   Frobenius symbols and successive ranks.
//! - [`jagged`]: jagged partitions (sequences allowed to rise by one between
//!   adjacent parts), the distance-(K-1) restriction, exhaustive enumeration
//!   of the counts `J_{K,i}(n,m)`, and the doubling bijection onto
//!   E-partitions as well as the pairing bijection onto overpartitions.
//! - [`path`]: lattice paths with NE/SE/H steps, peaks at even positions and
//!   height at most K-1, weight/charge/relative-height data, and exhaustive
//!   enumeration of the counts `P_{K,i}(2n,m)`.
//! - [`burge`]: the Burge word correspondence between E-partitions and paths,
//!   the peak-pair reading with shuffles, and the peak-to-Frobenius map onto
//!   partitions with odd successive ranks in a prescribed interval.
//! - [`series`]: truncated power series with exact integer coefficients, the
//!   multiple-sum generating functions `J_{K,i}(z;q)` and `G_{K,i}(z;q)`, the
//!   product sides of the associated Rogers-Ramanujan identities, and the
//!   q-binomial/Euler self-tests.
//! - [`families`]: brute-force counters for the E/R/O partition families and
//!   the reports checking the count identities at desk scale.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads. Coefficients and
//! counts use `i64`/`u64` with overflow checks enabled in every build
//! profile; at the desk scales this crate targets (weights up to a few tens,
//! series truncated around `q^30`) every quantity fits comfortably.

pub mod burge;
pub mod error;
pub mod families;
pub mod jagged;
pub mod partition;
pub mod path;
pub mod render;
pub mod series;
pub mod table;

pub use error::Error;
pub use jagged::Restriction;

/// Number of worker threads requested through the `JAGGED_THREADS`
/// environment variable. Defaults to 1 (fully sequential). Parallel code
/// paths must merge results in a deterministic order regardless of this
/// value.
pub fn thread_count() -> usize {
    std::env::var("JAGGED_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}
