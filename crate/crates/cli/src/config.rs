//! Experiment configuration: flat `key = value` text with `[sections]`.
//!
//! Sections and keys are fixed; unknown ones are errors. The raw file text is
//! echoed verbatim into every output header, so a config fully determines an
//! output byte-for-byte.
//!
//! ```text
//! [family]
//! kind = lamplighter | z16 | sol
//! q = 2                  # lamplighter only
//! matrix = 2,1,1,1       # sol only, row-major
//!
//! [genset]
//! kind = standard | good-gen-set | explicit
//! letters = (1;) | (0; 0^1)   # explicit only, letters separated by '|'
//!
//! [ball]
//! radius = 12
//!
//! [probe]
//! j = 1                  # witness offset; omitted = derived from quarter fit
//! n-min = 1
//! n-max = 3
//! i-min = 0
//! i-max = 2
//! samples = 1000
//! max-word-len = 30
//! tol = 1e-9             # valuation-check tolerance; omitted = family default
//! seed = 42
//!
//! [run]
//! mem-gib = 2
//! ```

use solgeo::group::{
    GroupElement, LatticeVec, LaurentPoly, Mat2, ModuleAction, ModuleElement, ShiftVector,
    SixthRational,
};
use solgeo::metric::GenSet;
use solgeo::probes::{good_gen_set_z16, z16_good_letters};

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Lamplighter,
    Z16,
    Sol,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Lamplighter => "lamplighter",
            FamilyKind::Z16 => "z16",
            FamilyKind::Sol => "sol",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSetKind {
    Standard,
    GoodGenSet,
    Explicit,
}

impl GenSetKind {
    pub fn name(self) -> &'static str {
        match self {
            GenSetKind::Standard => "standard",
            GenSetKind::GoodGenSet => "good-gen-set",
            GenSetKind::Explicit => "explicit",
        }
    }
}

/// Parsed experiment configuration (see the module docs for the format).
#[derive(Debug, Clone)]
pub struct Config {
    /// Raw file lines, echoed into output headers.
    pub raw_lines: Vec<String>,
    pub family: FamilyKind,
    pub q: Option<u32>,
    pub matrix: Option<[i64; 4]>,
    pub genset_kind: GenSetKind,
    pub letters: Option<String>,
    pub radius: Option<u32>,
    pub j: Option<u32>,
    pub n_min: u32,
    pub n_max: u32,
    pub i_min: i64,
    pub i_max: i64,
    pub samples: usize,
    pub max_word_len: usize,
    pub tol: Option<f64>,
    pub seed: u64,
    pub mem_gib: f64,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut family = None;
        let mut q = None;
        let mut matrix = None;
        let mut genset_kind = GenSetKind::Standard;
        let mut letters = None;
        let mut radius = None;
        let mut j = None;
        let mut n_min = 1u32;
        let mut n_max = 3u32;
        let mut i_min = 0i64;
        let mut i_max = 2i64;
        let mut samples = 1000usize;
        let mut max_word_len = 30usize;
        let mut tol = None;
        let mut seed = 42u64;
        let mut mem_gib = 2.0f64;

        let mut section = String::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                section = name.trim().to_string();
                match section.as_str() {
                    "family" | "genset" | "ball" | "probe" | "run" => {}
                    other => return err(format!("line {}: unknown section [{other}]", lineno + 1)),
                }
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return err(format!("line {}: expected key = value", lineno + 1));
            };
            let key = key.trim();
            let value = value.trim();
            let ctx = format!("line {} ({key})", lineno + 1);
            match (section.as_str(), key) {
                ("family", "kind") => {
                    family = Some(match value {
                        "lamplighter" => FamilyKind::Lamplighter,
                        "z16" => FamilyKind::Z16,
                        "sol" => FamilyKind::Sol,
                        other => return err(format!("{ctx}: unknown family kind `{other}`")),
                    })
                }
                ("family", "q") => q = Some(parse_num(value, &ctx)?),
                ("family", "matrix") => {
                    let parts: Vec<i64> = value
                        .split(',')
                        .map(|p| parse_num(p.trim(), &ctx))
                        .collect::<Result<_, _>>()?;
                    if parts.len() != 4 {
                        return err(format!("{ctx}: matrix needs 4 entries"));
                    }
                    matrix = Some([parts[0], parts[1], parts[2], parts[3]]);
                }
                ("genset", "kind") => {
                    genset_kind = match value {
                        "standard" => GenSetKind::Standard,
                        "good-gen-set" => GenSetKind::GoodGenSet,
                        "explicit" => GenSetKind::Explicit,
                        other => return err(format!("{ctx}: unknown genset kind `{other}`")),
                    }
                }
                ("genset", "letters") => letters = Some(value.to_string()),
                ("ball", "radius") => radius = Some(parse_num(value, &ctx)?),
                ("probe", "j") => j = Some(parse_num(value, &ctx)?),
                ("probe", "n-min") => n_min = parse_num(value, &ctx)?,
                ("probe", "n-max") => n_max = parse_num(value, &ctx)?,
                ("probe", "i-min") => i_min = parse_num(value, &ctx)?,
                ("probe", "i-max") => i_max = parse_num(value, &ctx)?,
                ("probe", "samples") => samples = parse_num(value, &ctx)?,
                ("probe", "max-word-len") => max_word_len = parse_num(value, &ctx)?,
                ("probe", "tol") => tol = Some(parse_num(value, &ctx)?),
                ("probe", "seed") => seed = parse_num(value, &ctx)?,
                ("run", "mem-gib") => mem_gib = parse_num(value, &ctx)?,
                ("", k) => return err(format!("line {}: key `{k}` outside any section", lineno + 1)),
                (s, k) => return err(format!("{ctx}: unknown key `{k}` in section [{s}]")),
            }
        }

        let Some(family) = family else {
            return err("missing [family] kind");
        };
        match family {
            FamilyKind::Lamplighter => {
                if q.is_none() {
                    return err("family lamplighter needs q");
                }
            }
            FamilyKind::Z16 => {
                if q.is_some() || matrix.is_some() {
                    return err("family z16 takes no parameters");
                }
            }
            FamilyKind::Sol => {}
        }
        if genset_kind == GenSetKind::Explicit && letters.is_none() {
            return err("genset kind explicit needs letters");
        }
        if genset_kind == GenSetKind::GoodGenSet && family != FamilyKind::Z16 {
            return err("genset kind good-gen-set is z16-specific");
        }
        Ok(Config {
            raw_lines: text.lines().map(|l| l.to_string()).collect(),
            family,
            q,
            matrix,
            genset_kind,
            letters,
            radius,
            j,
            n_min,
            n_max,
            i_min,
            i_max,
            samples,
            max_word_len,
            tol,
            seed,
            mem_gib,
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn action(&self) -> Result<ModuleAction, ConfigError> {
        match self.family {
            FamilyKind::Lamplighter => ModuleAction::laurent(self.q.unwrap())
                .map_err(|e| ConfigError(format!("bad q: {e}"))),
            FamilyKind::Z16 => Ok(ModuleAction::sixth()),
            FamilyKind::Sol => {
                let m = self.matrix.unwrap_or([2, 1, 1, 1]);
                ModuleAction::lattice(Mat2::new(m[0], m[1], m[2], m[3]))
                    .map_err(|e| ConfigError(format!("bad matrix: {e}")))
            }
        }
    }

    pub fn genset(&self, action: &ModuleAction) -> Result<GenSet, ConfigError> {
        match self.genset_kind {
            GenSetKind::Standard => Ok(GenSet::standard(action)),
            GenSetKind::GoodGenSet => {
                let (ggs, _) = good_gen_set_z16();
                z16_good_letters(action, &ggs)
                    .map_err(|e| ConfigError(format!("digit letters: {e}")))
            }
            GenSetKind::Explicit => {
                let spec = self.letters.as_deref().unwrap();
                let letters = parse_letters(action, spec)?;
                GenSet::new(action, letters, true)
                    .map_err(|e| ConfigError(format!("explicit letters: {e}")))
            }
        }
    }
}

fn parse_num<T: std::str::FromStr>(value: &str, ctx: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| ConfigError(format!("{ctx}: bad value `{value}`: {e}")))
}

/// Parses an explicit letter list: `(m; payload) | (m; payload) | …` where the
/// payload is family-specific — `e^c` terms for lamplighter, `n` or `n/d` for
/// z16, `x,y` for sol.
pub fn parse_letters(action: &ModuleAction, spec: &str) -> Result<Vec<GroupElement>, ConfigError> {
    let mut out = Vec::new();
    for part in spec.split('|') {
        let part = part.trim();
        let inner = part
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| ConfigError(format!("letter `{part}` is not parenthesized")))?;
        let (m_str, payload) = inner
            .split_once(';')
            .ok_or_else(|| ConfigError(format!("letter `{part}` needs `m; payload`")))?;
        let m: i64 = parse_num(m_str.trim(), part)?;
        let payload = payload.trim();
        let base = match action {
            ModuleAction::Laurent { q } => {
                let mut terms = Vec::new();
                for term in payload.split_whitespace() {
                    let (e, c) = term
                        .split_once('^')
                        .ok_or_else(|| ConfigError(format!("term `{term}` needs e^c")))?;
                    terms.push((parse_num::<i64>(e, part)?, parse_num::<u32>(c, part)?));
                }
                ModuleElement::Laurent(LaurentPoly::from_terms(*q, &terms))
            }
            ModuleAction::Sixth => {
                let r = if payload.is_empty() {
                    SixthRational::zero()
                } else if let Some((n, d)) = payload.split_once('/') {
                    SixthRational::from_fraction(parse_num(n.trim(), part)?, parse_num(d.trim(), part)?)
                        .map_err(|e| ConfigError(format!("letter `{part}`: {e}")))?
                } else {
                    SixthRational::from_integer(parse_num(payload, part)?)
                };
                ModuleElement::Sixth(r)
            }
            ModuleAction::Lattice { .. } => {
                if payload.is_empty() {
                    ModuleElement::Lattice(LatticeVec::zero())
                } else {
                    let (x, y) = payload
                        .split_once(',')
                        .ok_or_else(|| ConfigError(format!("letter `{part}` needs x,y")))?;
                    ModuleElement::Lattice(LatticeVec::from_i64(
                        parse_num(x.trim(), part)?,
                        parse_num(y.trim(), part)?,
                    ))
                }
            }
        };
        out.push(GroupElement::new(ShiftVector::one(m), base));
    }
    Ok(out)
}
