//! Fixtures shared by the criterion benches.

use lcdmds::{construct_auto, ConstructionReport, Field, Overrides};

/// The dispatcher's code for GF(q) and [n, k]; panics if none applies.
pub fn fixture(q: u32, n: usize, k: usize) -> ConstructionReport {
    let field = Field::from_order(q).expect("prime power");
    construct_auto(&field, n, k, &Overrides::NONE).expect("a construction applies")
}

/// Benchmark grid: (q, n, k) chosen so enumeration stays below 10^6.
pub const GRID: [(u32, usize, usize); 4] = [(9, 9, 4), (13, 14, 5), (25, 24, 4), (27, 27, 4)];
