//! JSON and plain-text formats.
//!
//! * group: `{"order": n, "table": [[...], ...]}`
//! * brace: `{"order": n, "add": [[...]], "mul": [[...]]}`
//! * semidirect spec: `{"b1": <brace>, "b2": <brace>, "action": [[...], ...]}`
//!
//! Entries are 0-based. A table whose identity is not `0` is relabeled on
//! load by swapping its identity with `0`.
//!
//! The plain-text brace format is: `n` on the first line, `n` rows of the
//! additive table, a blank line, then `n` rows of the multiplicative table,
//! with 1-based entries.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::construct::SemidirectSpec;
use crate::enumerate::{fingerprint, EnumerationResult};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ideal::IdealHandle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceJson {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub b1: BraceJson,
    pub b2: BraceJson,
    pub action: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson { order: g.order(), table: g.rows() }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        check_rows(self.order, &self.table, "table")?;
        FiniteGroup::from_rows_relabeled(&self.table)
    }
}

impl BraceJson {
    pub fn from_brace(b: &SkewBrace) -> Self {
        BraceJson { order: b.order(), add: b.add_group().rows(), mul: b.mul_group().rows() }
    }

    pub fn to_brace(&self) -> Result<SkewBrace> {
        check_rows(self.order, &self.add, "add")?;
        check_rows(self.order, &self.mul, "mul")?;
        SkewBrace::from_tables(&self.add, &self.mul)
    }
}

impl SpecJson {
    pub fn from_spec(s: &SemidirectSpec) -> Self {
        SpecJson { b1: BraceJson::from_brace(&s.b1), b2: BraceJson::from_brace(&s.b2), action: s.action_mappings() }
    }

    pub fn to_spec(&self) -> Result<SemidirectSpec> {
        SemidirectSpec::new(self.b1.to_brace()?, self.b2.to_brace()?, self.action.clone())
    }
}

fn check_rows(order: usize, rows: &[Vec<usize>], name: &str) -> Result<()> {
    if order == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    if rows.len() != order || rows.iter().any(|r| r.len() != order) {
        return Err(Error::Parse(format!("`{name}` must be a {order}x{order} table")));
    }
    if rows.iter().flatten().any(|&x| x >= order) {
        return Err(Error::Parse(format!("`{name}` has an entry outside 0..{order}")));
    }
    Ok(())
}

/// A brace read from a file, with where it came from.
#[derive(Clone, Debug)]
pub struct ImportedBrace {
    pub brace: SkewBrace,
    pub source: PathBuf,
    pub fingerprint: String,
}

/// Reads a brace in the JSON or the plain-text format.
pub fn import_brace(path: &Path) -> Result<ImportedBrace> {
    let text = fs::read_to_string(path)?;
    let brace = parse_brace(&text)?;
    let fingerprint = fingerprint(&brace);
    Ok(ImportedBrace { brace, source: path.to_path_buf(), fingerprint })
}

pub fn parse_brace(text: &str) -> Result<SkewBrace> {
    if text.trim_start().starts_with('{') {
        let j: BraceJson = serde_json::from_str(text)?;
        j.to_brace()
    } else {
        parse_plain_text(text)
    }
}

fn parse_plain_text(text: &str) -> Result<SkewBrace> {
    let mut lines = text.lines().map(str::trim);
    let n: usize = lines
        .by_ref()
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad order line: {e}")))?;
    if n == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    let rows: Vec<Vec<usize>> = lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => Err(Error::Parse(format!("bad entry `{t}`"))),
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    if rows.len() != 2 * n {
        return Err(Error::Parse(format!("expected {} table rows, found {}", 2 * n, rows.len())));
    }
    let (add, mul) = rows.split_at(n);
    check_rows(n, add, "add")?;
    check_rows(n, mul, "mul")?;
    SkewBrace::from_tables(add, mul)
}

/// Writes `b` in the 1-based plain-text format.
pub fn to_plain_text(b: &SkewBrace) -> String {
    let mut out = format!("{}\n", b.order());
    for (k, g) in [b.add_group(), b.mul_group()].into_iter().enumerate() {
        if k == 1 {
            out.push('\n');
        }
        for row in g.rows() {
            let line: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn read_group(path: &Path) -> Result<FiniteGroup> {
    let j: GroupJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    j.to_group()
}

pub fn read_spec(path: &Path) -> Result<SemidirectSpec> {
    let j: SpecJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    j.to_spec()
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealEntry {
    pub elements: Vec<usize>,
    pub size: usize,
    pub is_minimal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub order: usize,
    pub fingerprint: String,
    pub simple: bool,
    pub ideals: Vec<IdealEntry>,
}

pub fn ideal_report(b: &SkewBrace, ideals: &[IdealHandle]) -> IdealReport {
    IdealReport {
        order: b.order(),
        fingerprint: fingerprint(b),
        simple: b.order() >= 2 && ideals.len() == 2,
        ideals: ideals
            .iter()
            .map(|h| IdealEntry {
                elements: h.set.elements().to_vec(),
                size: h.set.len(),
                is_minimal: h.is_minimal.unwrap_or(false),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumeratedBraceJson {
    pub additive_group: String,
    pub fingerprint: String,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationJson {
    pub order: usize,
    pub additive_groups: Vec<String>,
    pub count: usize,
    pub raw_count: usize,
    pub braces: Vec<EnumeratedBraceJson>,
}

impl EnumerationJson {
    pub fn from_result(r: &EnumerationResult) -> Self {
        EnumerationJson {
            order: r.order,
            additive_groups: r.additive_groups.iter().map(|e| e.name.clone()).collect(),
            count: r.count,
            raw_count: r.raw_count,
            braces: r
                .braces
                .iter()
                .zip(&r.additive_of)
                .map(|(b, &g)| EnumeratedBraceJson {
                    additive_group: r.additive_groups[g].name.clone(),
                    fingerprint: fingerprint(b),
                    add: b.add_group().rows(),
                    mul: b.mul_group().rows(),
                })
                .collect(),
        }
    }
}
