use std::fmt::Write as _;

use blockcalc::linalg::IntMatrix;
use blockcalc::{Error, Result};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Rows of strings with a header, plus optional title lines shown only in
/// table format.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub title: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { title: Vec::new(), header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn title(mut self, line: impl Into<String>) -> Self {
        self.title.push(line.into());
        self
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render_table(&self) -> String {
        let ncols = self.header.len();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for line in &self.title {
            let _ = writeln!(out, "{line}");
        }
        let line = |cells: &[String]| -> String {
            let parts: Vec<String> =
                cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            parts.join("  ").trim_end().to_string()
        };
        if ncols > 0 {
            let _ = writeln!(out, "{}", line(&self.header));
        }
        for row in &self.rows {
            let _ = writeln!(out, "{}", line(row));
        }
        out
    }

    pub fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Internal(format!("csv output: {e}"));
        w.write_record(&self.header).map_err(io)?;
        for row in &self.rows {
            w.write_record(row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv output: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(format!("csv output: {e}")))
    }
}

/// Renders `json` or `table` according to the format.
pub fn emit<T: Serialize>(format: Format, json: &T, table: impl FnOnce() -> Table) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json).map_err(|e| Error::Internal(format!("json output: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Table => Ok(table().render_table()),
        Format::Csv => table().render_csv(),
    }
}

/// A matrix with word labels on both axes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledMatrix {
    pub title: String,
    /// Basis symbol of the rows, e.g. `M`.
    pub row_basis: String,
    pub column_basis: String,
    pub row_index: Vec<String>,
    pub column_index: Vec<String>,
    /// Row-major entries.
    pub matrix: Vec<Vec<i64>>,
}

impl LabelledMatrix {
    pub fn new(
        title: impl Into<String>,
        (row_basis, row_index): (&str, Vec<String>),
        (column_basis, column_index): (&str, Vec<String>),
        m: &IntMatrix,
    ) -> Self {
        LabelledMatrix {
            title: title.into(),
            row_basis: row_basis.into(),
            column_basis: column_basis.into(),
            row_index,
            column_index,
            matrix: m.to_rows(),
        }
    }

    pub fn to_table(&self) -> Table {
        let corner = format!("{}\\{}", self.row_basis, self.column_basis);
        let mut t = Table::new(std::iter::once(corner).chain(self.column_index.iter().cloned())).title(self.title.clone());
        for (label, row) in self.row_index.iter().zip(&self.matrix) {
            t.push(std::iter::once(label.clone()).chain(row.iter().map(i64::to_string)));
        }
        t
    }

    pub fn emit(&self, format: Format) -> Result<String> {
        emit(format, self, || self.to_table())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_csv() {
        let mut t = Table::new(["a", "bb"]).title("demo");
        t.push(["1", "22"]);
        assert_eq!(t.render_table(), "demo\na  bb\n1  22\n");
        assert_eq!(t.render_csv().unwrap(), "a,bb\n1,22\n");
    }
}
