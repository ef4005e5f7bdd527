//! CSV output with the standard header block: tool version, family, radius,
//! seed, and the verbatim config echo. No timestamps — outputs must be
//! byte-identical across runs and worker counts.

use std::io::Write;
use std::path::Path;

use crate::config::Config;

pub struct CsvDoc {
    buf: String,
}

impl CsvDoc {
    pub fn new(cfg: &Config, radius: Option<u32>) -> CsvDoc {
        let mut buf = String::new();
        buf.push_str(&format!("# solgeo {}\n", env!("CARGO_PKG_VERSION")));
        buf.push_str(&format!("# family = {}\n", cfg.family.name()));
        buf.push_str(&format!("# genset = {}\n", cfg.genset_kind.name()));
        match radius {
            Some(r) => buf.push_str(&format!("# radius = {r}\n")),
            None => buf.push_str("# radius = -\n"),
        }
        buf.push_str(&format!("# seed = {}\n", cfg.seed));
        buf.push_str("# config begin\n");
        for line in &cfg.raw_lines {
            buf.push_str("# | ");
            buf.push_str(line);
            buf.push('\n');
        }
        buf.push_str("# config end\n");
        CsvDoc { buf }
    }

    pub fn comment(&mut self, line: &str) -> &mut Self {
        self.buf.push_str("# ");
        self.buf.push_str(line);
        self.buf.push('\n');
        self
    }

    pub fn row(&mut self, line: &str) -> &mut Self {
        self.buf.push_str(line);
        self.buf.push('\n');
        self
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.buf.as_bytes())
    }
}

/// Formats an optional count, `absent` when missing.
pub fn opt_u32(v: Option<u32>) -> String {
    v.map_or_else(|| "absent".to_string(), |x| x.to_string())
}

/// Formats a float without trailing noise (integers print bare).
pub fn num(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}
