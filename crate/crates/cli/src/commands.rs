//! Command implementations shared by the binary and the test suites.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use lagrass::blocks::decompose;
use lagrass::combinatorics::partition_census;
use lagrass::lagrangian::{is_isotropic, random_lagrangian, verify_kernel_membership};
use lagrass::plucker::{build_matrix_capped, FormConvention};
use lagrass::{Characteristic, Error, SparseIntMatrix};

use crate::io;
use crate::report::{
    Ambient, BlocksReport, CensusRow, PartitionReport, RankReport, ScanEntry, ScanReport, ScanRow,
    TableRow, VerifyReport,
};
use crate::CliError;

/// Guard ceiling applied when no `--max-n` is given.
pub const DEFAULT_MAX_N: u32 = lagrass::plucker::DEFAULT_MAX_N;

/// Export format for [`matrix_bytes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    Mtx,
    Csv,
}

fn parse_characteristics(chars: &[u64]) -> Result<Vec<Characteristic>, CliError> {
    chars.iter().map(|&c| Characteristic::new(c).map_err(CliError::from)).collect()
}

fn shape_key(shape: (usize, usize)) -> String {
    format!("{}x{}", shape.0, shape.1)
}

/// Ranks of the relation matrix over each characteristic, with the
/// per-shape block breakdown.
pub fn table_report(
    n: u32,
    chars: &[u64],
    convention: FormConvention,
    max_n: u32,
) -> Result<RankReport, CliError> {
    let characteristics = parse_characteristics(chars)?;
    let matrix = build_matrix_capped(n, convention, max_n)?;
    let decomposition = decompose(&matrix);
    let mut table = Vec::with_capacity(characteristics.len());
    for characteristic in &characteristics {
        let ranks = decomposition.ranks(characteristic);
        let blocks: BTreeMap<String, Vec<usize>> = ranks
            .by_shape()
            .iter()
            .map(|(&shape, values)| (shape_key(shape), values.clone()))
            .collect();
        table.push(TableRow {
            characteristic: characteristic.value(),
            rank: ranks.total(),
            nullity: matrix.ncols() - ranks.total(),
            surjective: ranks.total() == matrix.nrows(),
            blocks,
        });
    }
    Ok(RankReport {
        n,
        convention: convention.to_string(),
        ambient: Ambient { rows: matrix.nrows(), cols: matrix.ncols() },
        table,
    })
}

/// Serialized matrix in the requested format; byte-identical for equal
/// inputs.
pub fn matrix_bytes(
    n: u32,
    convention: FormConvention,
    format: MatrixFormat,
    max_n: u32,
) -> Result<String, CliError> {
    let matrix = build_matrix_capped(n, convention, max_n)?;
    Ok(render_matrix(&matrix, format))
}

pub fn render_matrix(matrix: &SparseIntMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Mtx => io::write_mtx(matrix),
        MatrixFormat::Csv => io::write_csv(matrix),
    }
}

/// Writes the export to `out`, or to stdout when `out` is `None`.
pub fn write_matrix(
    n: u32,
    convention: FormConvention,
    format: MatrixFormat,
    out: Option<&Path>,
    max_n: u32,
) -> Result<(), CliError> {
    let bytes = matrix_bytes(n, convention, format, max_n)?;
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{bytes}");
            Ok(())
        }
    }
}

pub fn partition_report(n: u32, max_n: u32) -> Result<PartitionReport, CliError> {
    if n > max_n {
        return Err(CliError::ResourceGuard(format!(
            "n = {n} exceeds the configured maximum {max_n}"
        )));
    }
    let census = partition_census(n)?;
    let mut out = BTreeMap::new();
    let mut total = 0;
    for (pairs, entry) in census {
        total += entry.indices;
        out.insert(pairs, CensusRow { classes: entry.classes, indices: entry.indices });
    }
    Ok(PartitionReport { n, total, census: out })
}

pub fn blocks_report(
    n: u32,
    convention: FormConvention,
    max_n: u32,
) -> Result<BlocksReport, CliError> {
    let matrix = build_matrix_capped(n, convention, max_n)?;
    let decomposition = decompose(&matrix);
    let shapes: BTreeMap<String, usize> = decomposition
        .shape_census()
        .into_iter()
        .map(|(shape, count)| (shape_key(shape), count))
        .collect();
    Ok(BlocksReport {
        n,
        convention: convention.to_string(),
        shapes,
        isolated_columns: decomposition.isolated_columns().len(),
    })
}

/// Samples `samples` Lagrangians (sample `i` reseeds the generator with
/// `seed + i`) and checks isotropy plus kernel membership under both
/// conventions.
pub fn verify_report(
    n: u32,
    p: u64,
    samples: u32,
    seed: u64,
    steps: u32,
    max_n: u32,
) -> Result<VerifyReport, CliError> {
    if samples == 0 {
        return Err(CliError::BadArgument("need at least one sample".into()));
    }
    if n > max_n {
        return Err(CliError::from(Error::LimitExceeded { requested: n, max: max_n }));
    }
    let mut isotropic = 0;
    let mut plain_pass = 0;
    let mut signed_pass = 0;
    for i in 0..samples {
        let w = random_lagrangian(n, p, seed.wrapping_add(i as u64), steps)?;
        if is_isotropic(&w) {
            isotropic += 1;
        }
        if verify_kernel_membership(&w, FormConvention::Plain)? {
            plain_pass += 1;
        }
        if verify_kernel_membership(&w, FormConvention::Signed)? {
            signed_pass += 1;
        }
    }
    Ok(VerifyReport { n, p, samples, seed, steps, isotropic, plain_pass, signed_pass })
}

/// Blockwise ranks for each size in `ns` over each characteristic,
/// flagging where the rank drops below the row count.
pub fn scan_report(
    ns: &[u32],
    chars: &[u64],
    convention: FormConvention,
    max_n: u32,
) -> Result<ScanReport, CliError> {
    let characteristics = parse_characteristics(chars)?;
    let mut scans = Vec::with_capacity(ns.len());
    for &n in ns {
        let matrix = build_matrix_capped(n, convention, max_n)?;
        let decomposition = decompose(&matrix);
        let mut entries = Vec::with_capacity(characteristics.len());
        let mut drops = Vec::new();
        for characteristic in &characteristics {
            let rank = decomposition.ranks(characteristic).total();
            let surjective = rank == matrix.nrows();
            if !surjective {
                drops.push(characteristic.value());
            }
            entries.push(ScanEntry { characteristic: characteristic.value(), rank, surjective });
        }
        scans.push(ScanRow { n, rows: matrix.nrows(), cols: matrix.ncols(), entries, drops });
    }
    Ok(ScanReport { convention: convention.to_string(), scans })
}
