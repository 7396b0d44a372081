//! Report structures and their JSON / plain-text renderings.
//!
//! Serialization order is fixed by struct field order and `BTreeMap`
//! keys, so equal reports serialize to identical bytes.

use std::collections::BTreeMap;

use serde::Serialize;

/// Shape of the ambient relation matrix.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Ambient {
    pub rows: usize,
    pub cols: usize,
}

/// One characteristic's results in a [`RankReport`].
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub rank: usize,
    pub nullity: usize,
    pub surjective: bool,
    /// Component ranks grouped by component shape (`"15x20"` style keys).
    pub blocks: BTreeMap<String, Vec<usize>>,
}

/// Rank-over-characteristics table for one matrix.
#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub n: u32,
    pub convention: String,
    pub ambient: Ambient,
    pub table: Vec<TableRow>,
}

impl RankReport {
    /// Fixed-width text table. The kernel's projective codimension in
    /// the ambient projective space equals the rank; it is printed as
    /// its own column so both readings of the numbers are visible.
    pub fn render(&self) -> String {
        let mut out = format!(
            "n = {}  convention = {}  matrix {} x {}\n",
            self.n, self.convention, self.ambient.rows, self.ambient.cols
        );
        out.push_str("char    rank  nullity  proj-codim  surjective  blocks\n");
        for row in &self.table {
            out.push_str(&format!(
                "{:<6}  {:>4}  {:>7}  {:>10}  {:<10}  {}\n",
                row.characteristic,
                row.rank,
                row.nullity,
                row.rank,
                row.surjective,
                summarize_blocks(&row.blocks),
            ));
        }
        out
    }
}

/// Compresses `{"4x6": [4, 4, ...]}` into `4x6:4*60` style runs.
fn summarize_blocks(blocks: &BTreeMap<String, Vec<usize>>) -> String {
    let mut parts = Vec::new();
    for (shape, ranks) in blocks {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &r in ranks {
            match runs.last_mut() {
                Some((value, count)) if *value == r => *count += 1,
                _ => runs.push((r, 1)),
            }
        }
        let rendered: Vec<String> = runs
            .iter()
            .map(
                |&(value, count)| {
                    if count == 1 {
                        value.to_string()
                    } else {
                        format!("{value}*{count}")
                    }
                },
            )
            .collect();
        parts.push(format!("{shape}:{}", rendered.join(",")));
    }
    parts.join("  ")
}

/// Census of the dual-pair partition for one `n`.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub n: u32,
    pub total: usize,
    /// pair count -> (classes, indices)
    pub census: BTreeMap<usize, CensusRow>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CensusRow {
    pub classes: usize,
    pub indices: usize,
}

impl PartitionReport {
    pub fn render(&self) -> String {
        let mut out = format!("partition of the {} pivot indices (n = {})\n", self.total, self.n);
        out.push_str("pairs  classes  indices\n");
        for (pairs, row) in &self.census {
            out.push_str(&format!("{:<5}  {:>7}  {:>7}\n", pairs, row.classes, row.indices));
        }
        out
    }
}

/// Component census of the block decomposition for one matrix.
#[derive(Clone, Debug, Serialize)]
pub struct BlocksReport {
    pub n: u32,
    pub convention: String,
    /// shape -> component count
    pub shapes: BTreeMap<String, usize>,
    pub isolated_columns: usize,
}

impl BlocksReport {
    pub fn render(&self) -> String {
        let mut out =
            format!("components of the relation matrix (n = {}, {})\n", self.n, self.convention);
        for (shape, count) in &self.shapes {
            out.push_str(&format!("{:<7}  x{}\n", shape, count));
        }
        out.push_str(&format!("isolated columns: {}\n", self.isolated_columns));
        out
    }
}

/// Outcome of the random-Lagrangian kernel check.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub p: u64,
    pub samples: u32,
    pub seed: u64,
    pub steps: u32,
    pub isotropic: u32,
    pub plain_pass: u32,
    pub signed_pass: u32,
}

impl VerifyReport {
    pub fn pass_count(&self, convention: &str) -> u32 {
        match convention {
            "plain" => self.plain_pass,
            _ => self.signed_pass,
        }
    }

    pub fn render(&self) -> String {
        format!(
            "sampled {} Lagrangians (n = {}, p = {}, seed = {}, steps = {})\n\
             isotropic: {}/{}\nkernel membership: plain {}/{}, signed {}/{}\n",
            self.samples,
            self.n,
            self.p,
            self.seed,
            self.steps,
            self.isotropic,
            self.samples,
            self.plain_pass,
            self.samples,
            self.signed_pass,
            self.samples,
        )
    }
}

/// One `n` of a [`ScanReport`].
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<ScanEntry>,
    /// Characteristics where the rank drops below the row count.
    pub drops: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub rank: usize,
    pub surjective: bool,
}

/// Rank drops across a range of sizes and characteristics.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub convention: String,
    pub scans: Vec<ScanRow>,
}

impl ScanReport {
    pub fn render(&self) -> String {
        let mut out = format!("rank scan ({} convention)\n", self.convention);
        for row in &self.scans {
            let ranks: Vec<String> =
                row.entries.iter().map(|e| format!("{}:{}", e.characteristic, e.rank)).collect();
            let drops = if row.drops.is_empty() {
                "none".to_string()
            } else {
                row.drops.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            };
            out.push_str(&format!(
                "n = {}  {} x {}  rank {} of {}  drops at: {}\n",
                row.n,
                row.rows,
                row.cols,
                ranks.join("  "),
                row.rows,
                drops,
            ));
        }
        out
    }
}
