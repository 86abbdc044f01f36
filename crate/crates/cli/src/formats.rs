//! Plain-text point sets and certificates.
//!
//! Point files hold one `x y` pair of rationals per line; `#` starts a
//! comment and blank lines are ignored. Certificates look like
//!
//! ```text
//! ordinary-line a=2 b=1 k=0 e_sq=1/2
//! 0 off-line 1/2
//! 1 equals-b
//! 2 equals-a
//! ```
//!
//! Rationals are written canonically: `p` or `p/q` in lowest terms.

use std::fmt::Write as _;

use sylvester_core::geometry::Point;
use sylvester_core::numeric::Rational;
use sylvester_core::sylvester::{Disposition, OrdinaryLineCertificate, PointSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: expected {expected} fields, found {found}")]
    FieldCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: malformed rational {text:?}")]
    BadRational { line: usize, text: String },
    #[error("line {line}: malformed index {text:?}")]
    BadIndex { line: usize, text: String },
    #[error("line {line}: expected point index {expected}, found {found}")]
    IndexOrder {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no points in input")]
    Empty,
    #[error("certificate has no header line")]
    MissingHeader,
}

// Nonempty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(index, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((index + 1, line))
    })
}

fn rational(line: usize, text: &str) -> Result<Rational, FormatError> {
    text.parse().map_err(|_| FormatError::BadRational {
        line,
        text: text.into(),
    })
}

pub fn parse_points(text: &str) -> Result<PointSet, FormatError> {
    let mut points = Vec::new();
    for (line, content) in content_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(FormatError::FieldCount {
                line,
                expected: 2,
                found: fields.len(),
            });
        }
        points.push(Point::new(rational(line, fields[0])?, rational(line, fields[1])?));
    }
    PointSet::new(points).map_err(|_| FormatError::Empty)
}

pub fn render_points(s: &PointSet) -> String {
    let mut out = String::new();
    for p in s.points() {
        writeln!(out, "{} {}", p.x, p.y).expect("writing to a String");
    }
    out
}

pub fn render_certificate(c: &OrdinaryLineCertificate) -> String {
    let mut out = format!(
        "ordinary-line a={} b={} k={} e_sq={}\n",
        c.a_idx, c.b_idx, c.k_idx, c.e_sq
    );
    for (index, disposition) in c.dispositions.iter().enumerate() {
        match disposition {
            Disposition::EqualsA => writeln!(out, "{index} equals-a"),
            Disposition::EqualsB => writeln!(out, "{index} equals-b"),
            Disposition::OffLine { sq_gap } => writeln!(out, "{index} off-line {sq_gap}"),
        }
        .expect("writing to a String");
    }
    out
}

fn index(line: usize, text: &str) -> Result<usize, FormatError> {
    text.parse().map_err(|_| FormatError::BadIndex {
        line,
        text: text.into(),
    })
}

fn keyed<'a>(line: usize, field: &'a str, key: &str) -> Result<&'a str, FormatError> {
    field
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| FormatError::Syntax {
            line,
            message: format!("expected {key}=..., found {field:?}"),
        })
}

pub fn parse_certificate(text: &str) -> Result<OrdinaryLineCertificate, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"ordinary-line") {
        return Err(FormatError::MissingHeader);
    }
    if fields.len() != 5 {
        return Err(FormatError::FieldCount {
            line,
            expected: 5,
            found: fields.len(),
        });
    }
    let a_idx = index(line, keyed(line, fields[1], "a")?)?;
    let b_idx = index(line, keyed(line, fields[2], "b")?)?;
    let k_idx = index(line, keyed(line, fields[3], "k")?)?;
    let e_sq = rational(line, keyed(line, fields[4], "e_sq")?)?;

    let mut dispositions = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let found = index(line, fields[0])?;
        if found != dispositions.len() {
            return Err(FormatError::IndexOrder {
                line,
                expected: dispositions.len(),
                found,
            });
        }
        let disposition = match (fields.get(1).copied(), fields.len()) {
            (Some("equals-a"), 2) => Disposition::EqualsA,
            (Some("equals-b"), 2) => Disposition::EqualsB,
            (Some("off-line"), 3) => Disposition::OffLine {
                sq_gap: rational(line, fields[2])?,
            },
            (Some("off-line"), n) => {
                return Err(FormatError::FieldCount {
                    line,
                    expected: 3,
                    found: n,
                })
            }
            (Some("equals-a" | "equals-b"), n) => {
                return Err(FormatError::FieldCount {
                    line,
                    expected: 2,
                    found: n,
                })
            }
            (other, _) => {
                return Err(FormatError::Syntax {
                    line,
                    message: format!("unknown disposition {:?}", other.unwrap_or("")),
                })
            }
        };
        dispositions.push(disposition);
    }
    Ok(OrdinaryLineCertificate {
        a_idx,
        b_idx,
        k_idx,
        e_sq,
        dispositions,
    })
}
