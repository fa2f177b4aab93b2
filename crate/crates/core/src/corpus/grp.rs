//! Line-oriented `.grp` group files.
//!
//! ```text
//! # comment
//! name S3
//! degree 3
//! gen (0 1 2)
//! gen (0 1)
//! ```
//!
//! Points are 0-based. `name` and `degree` must precede every `gen`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::group::{build_group, GroupSpec};
use crate::perm::Perm;

use super::catalog::{CorpusEntry, Source};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Points mentioned in cycle text, ignoring anything unparsable.
fn mentioned_points(text: &str) -> impl Iterator<Item = usize> + '_ {
    text.split(|c: char| c.is_whitespace() || matches!(c, '(' | ')' | ','))
        .filter_map(|s| s.parse::<usize>().ok())
}

pub fn parse_grp(text: &str) -> Result<GroupSpec> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Perm> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        match key {
            "name" => {
                if name.is_some() {
                    return Err(parse_error(line, "duplicate name"));
                }
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(parse_error(line, "name must be a single token"));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(parse_error(line, "duplicate degree"));
                }
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| parse_error(line, format!("bad degree {rest:?}")))?;
                if n == 0 {
                    return Err(parse_error(line, "degree must be positive"));
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree.ok_or_else(|| parse_error(line, "gen before degree"))?;
                if let Some(point) = mentioned_points(rest).find(|&p| p >= n) {
                    return Err(Error::DegreeMismatch {
                        line,
                        point,
                        degree: n,
                    });
                }
                let perm = Perm::parse_cycles(n, rest).map_err(|m| parse_error(line, m))?;
                gens.push(perm);
            }
            other => return Err(parse_error(line, format!("unknown keyword {other:?}"))),
        }
    }
    let name = name.ok_or_else(|| parse_error(last_line, "missing name"))?;
    let degree = degree.ok_or_else(|| parse_error(last_line, "missing degree"))?;
    GroupSpec::new(name, degree, gens)
}

pub fn to_grp(spec: &GroupSpec) -> String {
    let mut out = String::new();
    writeln!(out, "name {}", spec.name).unwrap();
    writeln!(out, "degree {}", spec.degree).unwrap();
    for g in &spec.generators {
        writeln!(out, "gen {g}").unwrap();
    }
    out
}

/// Reads and parses `path`, then checks that the group builds under `cap`.
pub fn load_group_file(path: &Path, cap: usize) -> Result<CorpusEntry> {
    let text = std::fs::read_to_string(path)?;
    let spec = parse_grp(&text)?;
    build_group(&spec, cap)?;
    Ok(CorpusEntry {
        spec,
        tags: Vec::new(),
        source: Source::File(path.to_path_buf()),
    })
}

/// A single `.grp` file, or every `*.grp` file in a directory in name order.
pub fn load_corpus(path: &Path, cap: usize) -> Result<Vec<CorpusEntry>> {
    if !path.is_dir() {
        return Ok(vec![load_group_file(path, cap)?]);
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    files.sort();
    files.iter().map(|p| load_group_file(p, cap)).collect()
}
