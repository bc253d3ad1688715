//! Plain-text group files.
//!
//! ```text
//! # S3 from two generators
//! perm 3
//! gen 1 0 2
//! gen 1 2 0
//! ```
//!
//! or a full table:
//!
//! ```text
//! table 2
//! 0 1
//! 1 0
//! ```

use super::{build_from_permutations, FiniteGroup};
use crate::error::{Error, Result};

pub fn parse_group(text: &str, cap: usize) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());

    let (lineno, header) = lines.next().ok_or_else(|| Error::Parse("empty group file".into()))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    let size: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| Error::Parse(format!("line {}: expected `perm <n>` or `table <n>`", lineno + 1)))?;
    if words.next().is_some() {
        return Err(Error::Parse(format!("line {}: trailing tokens in header", lineno + 1)));
    }

    let numbers = |lineno: usize, words: std::str::SplitWhitespace<'_>| -> Result<Vec<usize>> {
        words
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad index {w:?}", lineno + 1)))
            })
            .collect()
    };

    match kind {
        "perm" => {
            let mut gens = Vec::new();
            for (lineno, line) in lines {
                let mut words = line.split_whitespace();
                if words.next() != Some("gen") {
                    return Err(Error::Parse(format!("line {}: expected `gen ...`", lineno + 1)));
                }
                let images = numbers(lineno, words)?;
                if images.len() != size {
                    return Err(Error::Parse(format!(
                        "line {}: generator has {} images, expected {size}",
                        lineno + 1,
                        images.len()
                    )));
                }
                gens.push(images);
            }
            build_from_permutations(size, &gens, cap)
        }
        "table" => {
            if size > cap {
                return Err(Error::TooLarge { cap });
            }
            let rows = lines
                .map(|(lineno, line)| numbers(lineno, line.split_whitespace()))
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != size {
                return Err(Error::Parse(format!("table declares {size} rows, found {}", rows.len())));
            }
            FiniteGroup::from_table(&rows)
        }
        other => Err(Error::Parse(format!("line {}: unknown group kind {other:?}", lineno + 1))),
    }
}

/// Serialises as a `table` file.
pub fn write_table(g: &FiniteGroup) -> String {
    let mut out = format!("table {}\n", g.order());
    for row in g.table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
