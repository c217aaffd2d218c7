//! CSV and SVG pole maps.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::PoleSet;
use crate::error::{Error, Result};
use crate::exact::mp::{format_fixed, format_significant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleMapFormat {
    Csv,
    Svg,
}

fn require_nonempty(set: &PoleSet) -> Result<()> {
    if set.zeros.is_empty() {
        return Err(Error::InsufficientOrder("empty pole set".into()));
    }
    Ok(())
}

/// `re,im,stability`, one row per zero in the set's order, `decimals` places.
pub fn pole_map_csv(set: &PoleSet, decimals: u32) -> Result<String> {
    require_nonempty(set)?;
    let mut out = String::from("re,im,stability\n");
    for z in &set.zeros {
        writeln!(
            out,
            "{},{},{}",
            format_fixed(&z.value.re, decimals),
            format_fixed(&z.value.im, decimals),
            format_significant(&z.stability, 6)
        )
        .unwrap();
    }
    Ok(out)
}

/// Plain scatter plot on equal-aspect axes, one circle per zero.
pub fn pole_map_svg(set: &PoleSet) -> Result<String> {
    require_nonempty(set)?;
    const SIZE: f64 = 600.0;
    let extent = set.trust_radius.to_f64() * 1.1;
    let to_px = |x: f64| (x / extent + 1.0) * SIZE / 2.0;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    let mid = SIZE / 2.0;
    writeln!(out, r##"<line x1="0" y1="{mid}" x2="{SIZE}" y2="{mid}" stroke="#bbb"/>"##).unwrap();
    writeln!(out, r##"<line x1="{mid}" y1="0" x2="{mid}" y2="{SIZE}" stroke="#bbb"/>"##).unwrap();
    for z in &set.zeros {
        let (re, im) = z.value.to_f64();
        writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="3" fill="black"/>"#, to_px(re), SIZE - to_px(im)).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn export_pole_map(set: &PoleSet, format: PoleMapFormat, decimals: u32, path: &Path) -> Result<()> {
    let text = match format {
        PoleMapFormat::Csv => pole_map_csv(set, decimals)?,
        PoleMapFormat::Svg => pole_map_svg(set)?,
    };
    fs::write(path, text)?;
    Ok(())
}
