//! Bit-exact sparse matrix interchange: Matrix Market coordinate files
//! and a plain `row,col,value` CSV.
//!
//! Both writers emit entries sorted by `(row, col)` with 1-based
//! coordinates and produce byte-identical output for equal matrices; the
//! readers invert them exactly.

use lagrass::SparseIntMatrix;

use crate::CliError;

const MTX_HEADER: &str = "%%MatrixMarket matrix coordinate integer general";

/// Serializes to Matrix Market coordinate integer general format.
pub fn write_mtx(matrix: &SparseIntMatrix) -> String {
    let mut out = String::new();
    out.push_str(MTX_HEADER);
    out.push('\n');
    out.push_str(&format!("{} {} {}\n", matrix.nrows(), matrix.ncols(), matrix.nnz()));
    for &(r, c, v) in matrix.entries() {
        out.push_str(&format!("{} {} {}\n", r + 1, c + 1, v));
    }
    out
}

/// Parses the output of [`write_mtx`]; comment lines after the banner
/// are tolerated.
pub fn read_mtx(text: &str) -> Result<SparseIntMatrix, CliError> {
    let mut lines = text.lines();
    let banner = lines.next().ok_or_else(|| CliError::BadArgument("empty matrix file".into()))?;
    if banner.trim() != MTX_HEADER {
        return Err(CliError::BadArgument(format!(
            "unsupported banner {banner:?}; expected {MTX_HEADER:?}"
        )));
    }
    let mut lines = lines.filter(|l| !l.starts_with('%') && !l.trim().is_empty());
    let size = lines.next().ok_or_else(|| CliError::BadArgument("missing size line".into()))?;
    let dims: Vec<usize> = parse_fields(size, 3, "size line")?;
    let (nrows, ncols, nnz) = (dims[0], dims[1], dims[2]);
    let mut entries = Vec::with_capacity(nnz);
    for line in lines {
        let fields: Vec<i64> = parse_fields(line, 3, "entry line")?;
        let (r, c) = one_based(fields[0], fields[1])?;
        entries.push((r, c, fields[2]));
    }
    if entries.len() != nnz {
        return Err(CliError::BadArgument(format!(
            "size line promises {nnz} entries, found {}",
            entries.len()
        )));
    }
    SparseIntMatrix::new(nrows, ncols, entries).map_err(CliError::from)
}

/// Serializes as `row,col,value` lines under a header of the same shape.
pub fn write_csv(matrix: &SparseIntMatrix) -> String {
    let mut out = String::from("row,col,value\n");
    for &(r, c, v) in matrix.entries() {
        out.push_str(&format!("{},{},{}\n", r + 1, c + 1, v));
    }
    out
}

/// Parses the output of [`write_csv`]. The CSV body does not carry the
/// shape, so it must be supplied.
pub fn read_csv(text: &str, nrows: usize, ncols: usize) -> Result<SparseIntMatrix, CliError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| CliError::BadArgument("empty csv".into()))?;
    if header.trim() != "row,col,value" {
        return Err(CliError::BadArgument(format!("unsupported csv header {header:?}")));
    }
    let mut entries = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let fields: Vec<i64> = line
            .split(',')
            .map(|f| {
                f.trim()
                    .parse::<i64>()
                    .map_err(|e| CliError::BadArgument(format!("bad csv field {f:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        if fields.len() != 3 {
            return Err(CliError::BadArgument(format!(
                "expected 3 csv fields, got {}",
                fields.len()
            )));
        }
        let (r, c) = one_based(fields[0], fields[1])?;
        entries.push((r, c, fields[2]));
    }
    SparseIntMatrix::new(nrows, ncols, entries).map_err(CliError::from)
}

fn parse_fields<T: std::str::FromStr>(
    line: &str,
    want: usize,
    what: &str,
) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    let fields: Vec<T> = line
        .split_whitespace()
        .map(|f| {
            f.parse::<T>()
                .map_err(|e| CliError::BadArgument(format!("bad {what} field {f:?}: {e}")))
        })
        .collect::<Result<_, _>>()?;
    if fields.len() != want {
        return Err(CliError::BadArgument(format!(
            "expected {want} fields in {what}, got {}",
            fields.len()
        )));
    }
    Ok(fields)
}

fn one_based(r: i64, c: i64) -> Result<(usize, usize), CliError> {
    if r < 1 || c < 1 {
        return Err(CliError::BadArgument(format!(
            "coordinates must be 1-based positive, got ({r}, {c})"
        )));
    }
    Ok((r as usize - 1, c as usize - 1))
}
