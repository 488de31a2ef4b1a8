//! CSV datasets with `#` metadata headers and companion gnuplot scripts.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// Shortest round-trip scientific notation, so output is byte-stable.
pub fn num(x: f64) -> String {
    format!("{x:e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub title: String,
    /// Ordered `key = value` header lines.
    pub meta: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Extra gnuplot commands placed before the plot line.
    pub plot_setup: Vec<String>,
    pub y_label: &'static str,
}

impl Dataset {
    pub fn new(title: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Self {
            title: title.into(),
            meta: Vec::new(),
            columns,
            rows: Vec::new(),
            plot_setup: Vec::new(),
            y_label: "",
        }
    }

    pub fn meta(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.meta.push((key.into(), value.into()));
    }

    pub fn meta_num(&mut self, key: impl Into<String>, value: f64) {
        self.meta(key, num(value));
    }

    pub fn push(&mut self, row: &[f64]) {
        self.rows.push(row.iter().map(|&x| num(x)).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {}", self.title);
        for (k, v) in &self.meta {
            let _ = writeln!(s, "# {k} = {v}");
        }
        let _ = writeln!(s, "{}", self.columns.join(","));
        for row in &self.rows {
            let _ = writeln!(s, "{}", row.join(","));
        }
        s
    }

    /// Gnuplot script plotting every column against the first one.
    pub fn gnuplot(&self, data_path: &Path) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {}", self.title);
        let _ = writeln!(s, "set datafile separator ','");
        let _ = writeln!(s, "set key autotitle columnhead");
        let _ = writeln!(s, "set xlabel '{}'", self.columns[0]);
        let _ = writeln!(s, "set ylabel '{}'", self.y_label);
        for line in &self.plot_setup {
            let _ = writeln!(s, "{line}");
        }
        let _ = writeln!(
            s,
            "plot for [i=2:{}] '{}' using 1:i with lines",
            self.columns.len(),
            data_path.display()
        );
        s
    }
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes the CSV to `out` (stdout when absent) and, if requested, the
/// gnuplot script to `<out>.gp`.
pub fn emit(data: &Dataset, out: Option<&Path>, plot_script: bool) -> CliResult<()> {
    let csv = data.to_csv();
    match out {
        Some(path) => {
            write_file(path, &csv)?;
            if plot_script {
                let mut script = path.as_os_str().to_owned();
                script.push(".gp");
                write_file(Path::new(&script), &data.gnuplot(path))?;
            }
        }
        None => {
            if plot_script {
                return Err(CliError::Config("--plot-script needs --out".into()));
            }
            print!("{csv}");
        }
    }
    Ok(())
}
