#![allow(dead_code)]

pub mod oracles;

use ncschur::{Catalog, GroupTable, Limits};

pub fn load(spec: &str) -> GroupTable {
    Catalog::default()
        .load(spec, &Limits::default())
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Catalog groups of order at most 27 used across the suites.
pub const SMALL_GROUPS: &[&str] = &[
    "C1", "C2", "C5", "C6", "C3*C3", "S3", "D4", "Q8", "D5", "D6", "A4", "D7", "C2*S3", "D8",
    "Q8*C2", "S4", "D12", "H3", "D9", "C3^3",
];

/// Non-Abelian catalog groups up to order 64.
pub const NON_ABELIAN_UP_TO_64: &[&str] = &[
    "S3", "D4", "Q8", "D5", "D6", "A4", "D7", "D8", "Q8*C2", "D9", "C2*S3", "D10", "S4", "D12",
    "H3", "D4*C3", "D13", "D14", "Q8*C4", "D4*C4", "D15", "D16", "D4*C2^2", "Q8*C2^2", "D4*D4",
    "D17", "S3*S3", "D18", "D20", "D24", "D32", "A4*C2", "S4*C2", "A5", "D30", "A4*C3", "Q8*Q8",
    "S3*C3^2",
];
