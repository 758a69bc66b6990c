//! Reader for the subset of the TSPLIB format used by the symmetric benchmark
//! instances: explicit matrices in five layouts and `EUC_2D`, `ATT` and
//! `GEO` coordinates.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::instances::EuclideanPoints;
use crate::matrix::DenseMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TsplibError {
    #[error("line {line}: unsupported {keyword}{}", value.as_ref().map(|v| format!(" value {v:?}")).unwrap_or_default())]
    UnsupportedKeyword {
        line: usize,
        keyword: String,
        value: Option<String>,
    },
    #[error("line {line}: {section} ended after {found} of {expected} values")]
    TruncatedSection {
        line: usize,
        section: String,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: {detail}")]
    DimensionMismatch { line: usize, detail: String },
    #[error("line {line}: cannot parse {token:?} as a number")]
    InvalidNumber { line: usize, token: String },
    #[error("missing {0}")]
    MissingField(&'static str),
    #[error("explicit matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("sidecar line {line}: {detail}")]
    MalformedSidecar { line: usize, detail: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WeightKind {
    Explicit,
    #[serde(rename = "EUC_2D")]
    Euc2d,
    Att,
    Geo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WeightFormat {
    FullMatrix,
    UpperRow,
    LowerRow,
    UpperDiagRow,
    LowerDiagRow,
}

impl WeightKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "EXPLICIT" => WeightKind::Explicit,
            "EUC_2D" => WeightKind::Euc2d,
            "ATT" => WeightKind::Att,
            "GEO" => WeightKind::Geo,
            _ => return None,
        })
    }
}

impl WeightFormat {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "FULL_MATRIX" => WeightFormat::FullMatrix,
            "UPPER_ROW" => WeightFormat::UpperRow,
            "LOWER_ROW" => WeightFormat::LowerRow,
            "UPPER_DIAG_ROW" => WeightFormat::UpperDiagRow,
            "LOWER_DIAG_ROW" => WeightFormat::LowerDiagRow,
            _ => return None,
        })
    }

    fn value_count(self, n: usize) -> usize {
        match self {
            WeightFormat::FullMatrix => n * n,
            WeightFormat::UpperRow | WeightFormat::LowerRow => n * (n - 1) / 2,
            WeightFormat::UpperDiagRow | WeightFormat::LowerDiagRow => n * (n + 1) / 2,
        }
    }

    /// Matrix positions in the order the section lists them.
    fn positions(self, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.value_count(n));
        for i in 0..n {
            let cols = match self {
                WeightFormat::FullMatrix => 0..n,
                WeightFormat::UpperRow => i + 1..n,
                WeightFormat::LowerRow => 0..i,
                WeightFormat::UpperDiagRow => i..n,
                WeightFormat::LowerDiagRow => 0..i + 1,
            };
            out.extend(cols.map(|j| (i, j)));
        }
        out
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightKind::Explicit => "EXPLICIT",
            WeightKind::Euc2d => "EUC_2D",
            WeightKind::Att => "ATT",
            WeightKind::Geo => "GEO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TspInstance {
    pub name: String,
    pub dimension: usize,
    pub weight_kind: WeightKind,
    pub weight_format: Option<WeightFormat>,
    #[serde(skip)]
    pub coords: Option<EuclideanPoints>,
    #[serde(skip)]
    pub distances: DenseMatrix,
    /// Published optimal tour length, from a sidecar file.
    pub optimum: Option<u64>,
}

/// Round half away from zero.
fn nint(x: f64) -> f64 {
    x.round()
}

pub fn euc_2d(a: &[f64], b: &[f64]) -> f64 {
    nint((a[0] - b[0]).hypot(a[1] - b[1]))
}

/// Pseudo-Euclidean distance: `√(r²/10)` rounded, then bumped up by one if
/// rounding went down.
pub fn att(a: &[f64], b: &[f64]) -> f64 {
    let (dx, dy) = (a[0] - b[0], a[1] - b[1]);
    let r = ((dx * dx + dy * dy) / 10.0).sqrt();
    let t = nint(r);
    if t < r {
        t + 1.0
    } else {
        t
    }
}

/// `DDD.MM` degrees-and-minutes to radians, with the truncated `π` that the
/// format's reference code uses.
fn geo_radians(x: f64) -> f64 {
    #[allow(clippy::approx_constant)]
    const PI: f64 = 3.141592;
    let deg = x.trunc();
    let min = x - deg;
    PI * (deg + 5.0 * min / 3.0) / 180.0
}

pub fn geo(a: &[f64], b: &[f64]) -> f64 {
    const RRR: f64 = 6378.388;
    let (lat_a, lon_a) = (geo_radians(a[0]), geo_radians(a[1]));
    let (lat_b, lon_b) = (geo_radians(b[0]), geo_radians(b[1]));
    let q1 = (lon_a - lon_b).cos();
    let q2 = (lat_a - lat_b).cos();
    let q3 = (lat_a + lat_b).cos();
    (RRR * (0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)).acos() + 1.0).trunc()
}

struct Token<'a> {
    line: usize,
    text: &'a str,
}

/// Splits `KEY : value`, `KEY: value` and bare `KEY`.
fn split_keyword(line: &str) -> (&str, &str) {
    match line.split_once(':') {
        Some((k, v)) => (k.trim(), v.trim()),
        None => {
            let t = line.trim();
            match t.split_once(char::is_whitespace) {
                Some((k, v)) => (k, v.trim()),
                None => (t, ""),
            }
        }
    }
}

fn is_numeric(token: &str) -> bool {
    token.starts_with(|c: char| c.is_ascii_digit() || matches!(c, '-' | '+' | '.'))
}

fn number(tok: &Token<'_>) -> Result<f64, TsplibError> {
    match tok.text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(TsplibError::InvalidNumber {
            line: tok.line,
            token: tok.text.to_string(),
        }),
    }
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let out = self.lines.get(self.pos).copied();
        self.pos += 1;
        out
    }

    /// Reads `expected` numeric tokens spanning as many lines as needed.
    fn section(&mut self, section: &str, header_line: usize, expected: usize) -> Result<Vec<Token<'a>>, TsplibError> {
        let mut tokens = Vec::with_capacity(expected);
        let mut last_line = header_line;
        while tokens.len() < expected {
            let Some(&(line, text)) = self.lines.get(self.pos) else {
                return Err(TsplibError::TruncatedSection {
                    line: last_line,
                    section: section.to_string(),
                    expected,
                    found: tokens.len(),
                });
            };
            let mut words = text.split_whitespace().peekable();
            if !words.peek().is_some_and(|w| is_numeric(w)) {
                return Err(TsplibError::TruncatedSection {
                    line,
                    section: section.to_string(),
                    expected,
                    found: tokens.len(),
                });
            }
            self.pos += 1;
            last_line = line;
            for w in words {
                if tokens.len() == expected {
                    return Err(TsplibError::DimensionMismatch {
                        line,
                        detail: format!("{section} has more than {expected} values"),
                    });
                }
                tokens.push(Token { line, text: w });
            }
        }
        // a further purely numeric line means DIMENSION undercounts the data
        if let Some(&(line, text)) = self.lines.get(self.pos) {
            if text.split_whitespace().next().is_some_and(is_numeric) {
                return Err(TsplibError::DimensionMismatch {
                    line,
                    detail: format!("{section} has more than {expected} values"),
                });
            }
        }
        Ok(tokens)
    }
}

/// Parses a TSPLIB problem file and realizes its distance matrix.
pub fn parse_tsplib(text: &str) -> Result<TspInstance, TsplibError> {
    let mut lines = Lines::new(text);
    let mut name = String::new();
    let mut dimension: Option<usize> = None;
    let mut kind: Option<WeightKind> = None;
    let mut format: Option<WeightFormat> = None;
    let mut coords: Option<Vec<Vec<f64>>> = None;
    let mut weights: Option<Vec<Token<'_>>> = None;

    let need_dimension = |dimension: Option<usize>, line: usize| {
        dimension.ok_or(TsplibError::DimensionMismatch {
            line,
            detail: "section appears before DIMENSION".into(),
        })
    };

    while let Some((line, text)) = lines.next() {
        let (key, value) = split_keyword(text);
        let unsupported = || TsplibError::UnsupportedKeyword {
            line,
            keyword: key.to_string(),
            value: Some(value.to_string()),
        };
        match key {
            "NAME" => name = value.to_string(),
            "COMMENT" => {}
            "TYPE" => {
                if value != "TSP" {
                    return Err(unsupported());
                }
            }
            "DIMENSION" => {
                let n = value.parse::<usize>().map_err(|_| TsplibError::InvalidNumber {
                    line,
                    token: value.to_string(),
                })?;
                if n < 2 {
                    return Err(TsplibError::DimensionMismatch {
                        line,
                        detail: format!("DIMENSION {n} is below 2"),
                    });
                }
                dimension = Some(n);
            }
            "EDGE_WEIGHT_TYPE" => kind = Some(WeightKind::parse(value).ok_or_else(unsupported)?),
            "EDGE_WEIGHT_FORMAT" => {
                if value != "FUNCTION" {
                    format = Some(WeightFormat::parse(value).ok_or_else(unsupported)?);
                }
            }
            "NODE_COORD_TYPE" => {
                if !matches!(value, "TWOD_COORDS" | "NO_COORDS") {
                    return Err(unsupported());
                }
            }
            "DISPLAY_DATA_TYPE" => {
                if !matches!(value, "COORD_DISPLAY" | "TWOD_DISPLAY" | "NO_DISPLAY") {
                    return Err(unsupported());
                }
            }
            "NODE_COORD_SECTION" => {
                let n = need_dimension(dimension, line)?;
                coords = Some(read_points(&mut lines, "NODE_COORD_SECTION", line, n)?);
            }
            "DISPLAY_DATA_SECTION" => {
                let n = need_dimension(dimension, line)?;
                read_points(&mut lines, "DISPLAY_DATA_SECTION", line, n)?;
            }
            "EDGE_WEIGHT_SECTION" => {
                let n = need_dimension(dimension, line)?;
                let f = format.ok_or(TsplibError::MissingField("EDGE_WEIGHT_FORMAT"))?;
                weights = Some(lines.section("EDGE_WEIGHT_SECTION", line, f.value_count(n))?);
            }
            "EOF" => break,
            _ => {
                return Err(TsplibError::UnsupportedKeyword {
                    line,
                    keyword: key.to_string(),
                    value: None,
                })
            }
        }
    }

    let n = dimension.ok_or(TsplibError::MissingField("DIMENSION"))?;
    let kind = kind.ok_or(TsplibError::MissingField("EDGE_WEIGHT_TYPE"))?;
    let distances = match kind {
        WeightKind::Explicit => {
            let tokens = weights.ok_or(TsplibError::MissingField("EDGE_WEIGHT_SECTION"))?;
            let f = format.ok_or(TsplibError::MissingField("EDGE_WEIGHT_FORMAT"))?;
            explicit_matrix(n, f, &tokens)?
        }
        _ => {
            let points = coords.as_ref().ok_or(TsplibError::MissingField("NODE_COORD_SECTION"))?;
            let metric = match kind {
                WeightKind::Euc2d => euc_2d,
                WeightKind::Att => att,
                _ => geo,
            };
            DenseMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { metric(&points[i], &points[j]) }).map_err(|e| {
                TsplibError::DimensionMismatch {
                    line: 0,
                    detail: e.to_string(),
                }
            })?
        }
    };
    let coords = coords.and_then(|p| EuclideanPoints::new(2, p));
    Ok(TspInstance {
        name,
        dimension: n,
        weight_kind: kind,
        weight_format: if kind == WeightKind::Explicit { format } else { None },
        coords,
        distances,
        optimum: None,
    })
}

/// Reads `n` lines of `id x y`, placing each point at index `id − 1`.
fn read_points(
    lines: &mut Lines<'_>,
    section: &str,
    header_line: usize,
    n: usize,
) -> Result<Vec<Vec<f64>>, TsplibError> {
    let tokens = lines.section(section, header_line, 3 * n)?;
    let mut points = vec![None; n];
    for chunk in tokens.chunks(3) {
        let id_tok = &chunk[0];
        let id = id_tok.text.parse::<usize>().map_err(|_| TsplibError::InvalidNumber {
            line: id_tok.line,
            token: id_tok.text.to_string(),
        })?;
        if id == 0 || id > n || points[id - 1].is_some() {
            return Err(TsplibError::DimensionMismatch {
                line: id_tok.line,
                detail: format!("node id {id} is out of range or repeated for DIMENSION {n}"),
            });
        }
        points[id - 1] = Some(vec![number(&chunk[1])?, number(&chunk[2])?]);
    }
    Ok(points.into_iter().map(|p| p.expect("all ids seen")).collect())
}

fn explicit_matrix(n: usize, format: WeightFormat, tokens: &[Token<'_>]) -> Result<DenseMatrix, TsplibError> {
    let mut d = DenseMatrix::zeros(n).expect("n ≥ 2");
    for (&(i, j), tok) in format.positions(n).iter().zip(tokens) {
        let v = number(tok)?;
        d[(i, j)] = v;
        if format != WeightFormat::FullMatrix {
            d[(j, i)] = v;
        }
    }
    for i in 0..n {
        if d[(i, i)] != 0.0 {
            log::warn!(
                "diagonal entry {i} is {}; tours never use it, setting it to 0",
                d[(i, i)]
            );
            d[(i, i)] = 0.0;
        }
        for j in 0..i {
            if d[(i, j)] != d[(j, i)] {
                return Err(TsplibError::Asymmetric { row: i, col: j });
            }
        }
    }
    Ok(d)
}

/// Reads `optimum: <integer>`. Blank lines and `#` comments are skipped.
pub fn parse_sidecar(text: &str) -> Result<u64, TsplibError> {
    let mut optimum = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let malformed = |detail: String| TsplibError::MalformedSidecar { line, detail };
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| malformed(format!("expected `key: value`, got {content:?}")))?;
        if key.trim() != "optimum" {
            return Err(malformed(format!("unknown key {:?}", key.trim())));
        }
        if optimum.is_some() {
            return Err(malformed("optimum given twice".into()));
        }
        let v = value.trim();
        optimum = Some(
            v.parse::<u64>()
                .map_err(|_| malformed(format!("{v:?} is not a non-negative integer")))?,
        );
    }
    optimum.ok_or(TsplibError::MalformedSidecar {
        line: 0,
        detail: "no optimum".into(),
    })
}

pub fn load_with_optimum(problem: &str, sidecar: &str) -> Result<TspInstance, TsplibError> {
    let mut instance = parse_tsplib(problem)?;
    instance.optimum = Some(parse_sidecar(sidecar)?);
    Ok(instance)
}

fn read_file(path: &Path) -> Result<String, TsplibError> {
    fs::read_to_string(path).map_err(|e| TsplibError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Reads a problem file and, if given, its sidecar.
pub fn load_file(problem: &Path, sidecar: Option<&Path>) -> Result<TspInstance, TsplibError> {
    let text = read_file(problem)?;
    match sidecar {
        Some(s) => load_with_optimum(&text, &read_file(s)?),
        None => parse_tsplib(&text),
    }
}

/// Writes `d` as an `EXPLICIT` / `FULL_MATRIX` problem.
pub fn write_full_matrix(name: &str, d: &DenseMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "NAME: {name}");
    out.push_str("TYPE: TSP\n");
    let _ = writeln!(out, "DIMENSION: {}", d.n());
    out.push_str("EDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n");
    for row in d.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str("EOF\n");
    out
}
