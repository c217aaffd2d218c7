//! Versioned plain-text cache of exact coefficient tables.
//!
//! ```text
//! painleve-series-cache
//! version 1
//! recursion laurent
//! g2 0/1
//! lambda 1/1
//! g3 0/1
//! start 0
//! order 100
//! sha256 <hex digest of the body>
//! ---
//! 0 1/1
//! 1 0/1
//! ...
//! ```

use std::fs;
use std::path::Path;

use rug::Rational;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::{format_fraction, parse_rational, CoefficientTable, Params, Recursion};
use crate::laurent::{extend_pentagonal, LaurentExpansion};
use crate::tau::extend_bilinear;

pub const MAGIC: &str = "painleve-series-cache";
pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct CacheFile {
    pub params: Params,
    pub table: CoefficientTable<Rational>,
}

fn body_text(table: &CoefficientTable<Rational>) -> String {
    let mut body = String::new();
    for (i, c) in table.iter() {
        body.push_str(&format!("{i} {}\n", format_fraction(c)));
    }
    body
}

fn digest(body: &str) -> String {
    let hash = Sha256::digest(body.as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn render_cache(file: &CacheFile) -> String {
    let body = body_text(&file.table);
    let p = &file.params;
    format!(
        "{MAGIC}\nversion {CACHE_VERSION}\nrecursion {}\ng2 {}\nlambda {}\ng3 {}\nstart {}\norder {}\nsha256 {}\n---\n{body}",
        file.table.recursion().name(),
        format_fraction(&p.g2),
        format_fraction(&p.lambda),
        format_fraction(&p.g3),
        file.table.start(),
        file.table.order(),
        digest(&body),
    )
}

pub fn parse_cache(text: &str) -> Result<CacheFile> {
    let corrupt = |m: &str| Error::CacheCorrupt(m.to_string());
    let (header, body) = text.split_once("---\n").ok_or_else(|| corrupt("missing header separator"))?;
    let mut lines = header.lines();
    if lines.next() != Some(MAGIC) {
        return Err(corrupt("not a painleve-series cache file"));
    }
    let mut field = |name: &str| -> Result<String> {
        let line = lines.next().ok_or_else(|| corrupt(&format!("missing `{name}` field")))?;
        line.strip_prefix(name)
            .and_then(|rest| rest.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| corrupt(&format!("expected `{name}`, found `{line}`")))
    };
    let version = field("version")?;
    if version != CACHE_VERSION.to_string() {
        return Err(Error::CacheVersion { found: version, supported: CACHE_VERSION.to_string() });
    }
    let recursion_name = field("recursion")?;
    let recursion = Recursion::from_name(&recursion_name).ok_or_else(|| corrupt(&format!("unknown recursion `{recursion_name}`")))?;
    let g2 = parse_rational(&field("g2")?)?;
    let lambda = parse_rational(&field("lambda")?)?;
    let g3 = parse_rational(&field("g3")?)?;
    let start: usize = field("start")?.parse().map_err(|_| corrupt("bad start index"))?;
    let order: usize = field("order")?.parse().map_err(|_| corrupt("bad order"))?;
    let checksum = field("sha256")?;
    if digest(body) != checksum {
        return Err(corrupt("checksum mismatch"));
    }
    let mut values = Vec::new();
    for (k, line) in body.lines().enumerate() {
        let (index, value) = line.split_once(' ').ok_or_else(|| corrupt(&format!("malformed line `{line}`")))?;
        if index.parse::<usize>().ok() != Some(start + k) {
            return Err(corrupt(&format!("expected index {}, found `{index}`", start + k)));
        }
        values.push(parse_rational(value)?);
    }
    let table = CoefficientTable::new(recursion, start, values);
    if table.order() != order && !(table.is_empty() && order < start) {
        return Err(corrupt("order field does not match the body"));
    }
    Ok(CacheFile { params: Params::new(g2, lambda, g3), table })
}

pub fn write_cache(path: &Path, file: &CacheFile) -> Result<()> {
    fs::write(path, render_cache(file))?;
    Ok(())
}

pub fn read_cache(path: &Path) -> Result<CacheFile> {
    parse_cache(&fs::read_to_string(path)?)
}

/// Writes then reads back.
pub fn cache_roundtrip(params: &Params, table: &CoefficientTable<Rational>, path: &Path) -> Result<CoefficientTable<Rational>> {
    write_cache(path, &CacheFile { params: params.clone(), table: table.clone() })?;
    Ok(read_cache(path)?.table)
}

/// Continues a cached prefix with its own recursion.
pub fn extend_table(params: &Params, prefix: CoefficientTable<Rational>, order: usize) -> Result<CoefficientTable<Rational>> {
    if order <= prefix.order() {
        return Ok(prefix.truncated(order));
    }
    match prefix.recursion() {
        Recursion::Laurent => {
            let mut e = LaurentExpansion::from_table(params.clone(), prefix);
            e.extend(order);
            Ok(e.table().clone())
        }
        Recursion::Pentagonal => Ok(extend_pentagonal(prefix, order)),
        Recursion::TauBilinear => Ok(extend_bilinear(params, prefix.into_values(), order).table().clone()),
        other => Err(Error::Unsupported(format!("prefix extension of `{}` tables", other.name()))),
    }
}

/// Loads `path` if it holds a table of the same recursion and parameters,
/// extends it when shorter than `order`, and rewrites the cache if it grew.
pub fn cached_table(
    path: &Path,
    params: &Params,
    recursion: Recursion,
    order: usize,
    fresh: impl FnOnce() -> CoefficientTable<Rational>,
) -> Result<CoefficientTable<Rational>> {
    if path.exists() {
        let cached = read_cache(path)?;
        if cached.params == *params && cached.table.recursion() == recursion {
            let have = cached.table.order();
            return match extend_table(params, cached.table, order) {
                Ok(table) => {
                    if table.order() > have {
                        write_cache(path, &CacheFile { params: params.clone(), table: table.clone() })?;
                    }
                    Ok(table)
                }
                Err(Error::Unsupported(_)) => store_fresh(path, params, fresh()),
                Err(e) => Err(e),
            };
        }
    }
    store_fresh(path, params, fresh())
}

fn store_fresh(path: &Path, params: &Params, table: CoefficientTable<Rational>) -> Result<CoefficientTable<Rational>> {
    write_cache(path, &CacheFile { params: params.clone(), table: table.clone() })?;
    Ok(table)
}
