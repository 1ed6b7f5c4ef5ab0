use std::path::Path;

use gkzrank::{ConfigError, IVec3, PointedConfig};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix must have exactly 3 rows, found {0}")]
    RowCount(usize),
    #[error("rows have different lengths")]
    Ragged,
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Other(String),
}

/// Parses three whitespace separated integer rows; `#` starts a comment.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, InputError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let row: Result<Vec<i64>, _> = body.split_whitespace().map(str::parse::<i64>).collect();
        let row = row.map_err(|e| InputError::Parse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        rows.push(row);
    }
    if rows.len() != 3 {
        return Err(InputError::RowCount(rows.len()));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(InputError::Ragged);
    }
    Ok(rows)
}

pub fn columns_of(rows: &[Vec<i64>]) -> Vec<IVec3> {
    (0..rows[0].len()).map(|j| [rows[0][j], rows[1][j], rows[2][j]]).collect()
}

pub fn rows_of(columns: &[IVec3]) -> Vec<Vec<i64>> {
    (0..3).map(|i| columns.iter().map(|c| c[i]).collect()).collect()
}

pub fn config_from_rows(rows: &[Vec<i64>]) -> Result<PointedConfig, InputError> {
    if rows.len() != 3 {
        return Err(InputError::RowCount(rows.len()));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(InputError::Ragged);
    }
    Ok(PointedConfig::from_columns(&columns_of(rows))?)
}

pub fn read_config(path: &Path) -> Result<PointedConfig, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    config_from_rows(&parse_matrix(&text)?)
}
