//! Text and SVG pictures of an MDD as a stack of labeled boxes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::io::json::encode_mdd;
use crate::mdd::Mdd;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
    Json,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            "json" => Ok(RenderFormat::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// For three steps in SVG: the coordinate whose levels become slices.
    pub layer: usize,
}

impl RenderSpec {
    pub fn new(format: RenderFormat) -> Self {
        RenderSpec { format, layer: 2 }
    }
}

pub fn render(mdd: &Mdd, spec: &RenderSpec) -> Result<String> {
    let r = mdd.network().arity();
    match spec.format {
        RenderFormat::Json => Ok(encode_mdd(mdd)),
        RenderFormat::Ascii if r <= 2 => Ok(ascii(mdd)),
        RenderFormat::Svg if r <= 3 => {
            if r == 3 && spec.layer > 2 {
                return Err(Error::ArityMismatch { expected: 3, found: spec.layer + 1 });
            }
            Ok(svg(mdd, spec.layer))
        }
        _ => Err(Error::UnsupportedArity { op: "render", r }),
    }
}

/// Cells keyed by `(x, y)`, `y` being the second coordinate (0 for one step).
fn grid(mdd: &Mdd, pick: impl Fn(&[u32]) -> (u32, u32)) -> Vec<((u32, u32), u64)> {
    mdd.cells()
        .iter()
        .enumerate()
        .map(|(v, p)| (pick(p.coords()), v as u64))
        .collect()
}

fn ascii(mdd: &Mdd) -> String {
    let cells = grid(mdd, |c| (c[0], c.get(1).copied().unwrap_or(0)));
    let width = (mdd.network().n() - 1).to_string().len();
    let max_x = cells.iter().map(|c| c.0 .0).max().unwrap_or(0) as usize;
    let max_y = cells.iter().map(|c| c.0 .1).max().unwrap_or(0) as usize;
    let mut rows = vec![vec![None; max_x + 1]; max_y + 1];
    for ((x, y), v) in cells {
        rows[y as usize][x as usize] = Some(v);
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        let line: Vec<String> = row
            .iter()
            .map(|c| match c {
                Some(v) => format!("{v:>width$}"),
                None => " ".repeat(width),
            })
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

const CELL: u32 = 32;
const GAP: u32 = 24;
const PALETTE: [&str; 6] = ["#dbe9f6", "#fde2c4", "#d8f0d2", "#f3d4e6", "#e8e2f7", "#f6f1c7"];

fn svg(mdd: &Mdd, layer: usize) -> String {
    let r = mdd.network().arity();
    let (a, b) = match r {
        3 => {
            let others: Vec<usize> = (0..3).filter(|&i| i != layer).collect();
            (others[0], others[1])
        }
        _ => (0, 1),
    };
    let coord = |c: &[u32], i: usize| c.get(i).copied().unwrap_or(0);
    let levels = if r == 3 {
        mdd.cells().iter().map(|p| p.coords()[layer]).max().unwrap_or(0) + 1
    } else {
        1
    };
    let max_x = mdd.cells().iter().map(|p| coord(p.coords(), a)).max().unwrap_or(0) + 1;
    let max_y = mdd.cells().iter().map(|p| coord(p.coords(), b)).max().unwrap_or(0) + 1;
    let slice_w = max_x * CELL;
    let width = levels * slice_w + (levels + 1) * GAP;
    let height = max_y * CELL + 2 * GAP;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    for level in 0..levels {
        let x0 = GAP + level * (slice_w + GAP);
        let _ = writeln!(out, r#"<g class="slice" data-level="{level}">"#);
        if r == 3 {
            let _ = writeln!(
                out,
                r#"<text class="layer" x="{x0}" y="{}" font-family="monospace" font-size="12">x{} = {level}</text>"#,
                GAP - 8,
                layer + 1
            );
        }
        let fill = PALETTE[level as usize % PALETTE.len()];
        for (v, p) in mdd.cells().iter().enumerate() {
            let c = p.coords();
            if r == 3 && c[layer] != level {
                continue;
            }
            let (x, y) = (coord(c, a), coord(c, b));
            let px = x0 + x * CELL;
            let py = GAP + (max_y - 1 - y) * CELL;
            let _ = writeln!(
                out,
                r##"<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#333333"/>"##
            );
            let _ = writeln!(
                out,
                r#"<text class="cell" x="{}" y="{}" text-anchor="middle" font-family="monospace" font-size="12">{v}</text>"#,
                px + CELL / 2,
                py + CELL / 2 + 4
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
