//! Deterministic text and SVG drawings of lattice paths.
//!
//! The ASCII picture uses one column per step: `/` for a northeast step,
//! `\` for a southeast step and `_` for a horizontal move, above an axis
//! line with a tick at every even position. [`parse_ascii`] inverts
//! [`render_ascii`] exactly on the step sequence.

use crate::error::{Error, Result};
use crate::path::{LatticePath, Step};

pub fn render_ascii(path: &LatticePath) -> String {
    let verts = path.vertices();
    let max_y = verts.iter().map(|&(_, y)| y).max().unwrap_or(0);
    let cols = path.steps().len();
    let mut grid = vec![vec![' '; cols]; max_y as usize];
    let mut y = path.start();
    for (c, &s) in path.steps().iter().enumerate() {
        match s {
            Step::NorthEast => {
                grid[y as usize][c] = '/';
                y += 1;
            }
            Step::SouthEast => {
                y -= 1;
                grid[y as usize][c] = '\\';
            }
            Step::Horizontal => {
                grid[0][c] = '_';
            }
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    // axis with ticks at even positions
    for x in 0..=cols {
        out.push(if x % 2 == 0 { '+' } else { '-' });
    }
    out.push('\n');
    out
}

/// Recover the step sequence (and the start height it implies) from an
/// ASCII rendering. The axis line is recognized and skipped.
pub fn parse_ascii(text: &str) -> Result<LatticePath> {
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| !l.is_empty() && !l.chars().all(|c| c == '+' || c == '-'))
        .collect();
    let height = rows.len();
    let cols = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
    let mut grid = vec![vec![' '; cols]; height];
    for (r, line) in rows.iter().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            grid[r][c] = ch;
        }
    }
    let mut steps = Vec::with_capacity(cols);
    let mut level_before: Option<u32> = None;
    for c in 0..cols {
        let mut found = None;
        for (r, row) in grid.iter().enumerate() {
            let band = (height - 1 - r) as u32; // band index from the axis up
            match row[c] {
                '/' => found = Some((Step::NorthEast, band)),
                '\\' => found = Some((Step::SouthEast, band + 1)),
                '_' => found = Some((Step::Horizontal, 0)),
                _ => continue,
            }
            if found.is_some() {
                break;
            }
        }
        let Some((step, before)) = found else {
            return Err(Error::Parse(format!("column {c} has no step mark")));
        };
        if level_before.is_none() {
            level_before = Some(before);
        }
        steps.push(step);
    }
    let start = level_before.unwrap_or(0);
    LatticePath::new(start, steps)
}

/// SVG drawing: one polyline for the path, axis ticks at even x, and a
/// circle marking each peak. Coordinates are integers (UNIT pixels per
/// lattice unit), so the output is byte-deterministic.
pub fn render_svg(path: &LatticePath) -> String {
    const UNIT: u32 = 20;
    const MARGIN: u32 = 30;
    let verts = path.vertices();
    let max_x = verts.last().map_or(0, |&(x, _)| x).max(2);
    let max_y = verts.iter().map(|&(_, y)| y).max().unwrap_or(0).max(2);
    let width = max_x * UNIT + 2 * MARGIN;
    let height = max_y * UNIT + 2 * MARGIN;
    let px = |x: u32| MARGIN + x * UNIT;
    let py = |y: u32| height - MARGIN - y * UNIT;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    // axes
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        px(0),
        py(0),
        px(max_x),
        py(0)
    ));
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        px(0),
        py(0),
        px(0),
        py(max_y)
    ));
    // ticks at even x
    for x in (0..=max_x).step_by(2) {
        svg.push_str(&format!(
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n",
            px(x),
            py(0),
            py(0) + 4
        ));
    }
    // the path itself
    let points: Vec<String> = verts
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    svg.push_str(&format!(
        "  <polyline fill=\"none\" stroke=\"blue\" points=\"{}\"/>\n",
        points.join(" ")
    ));
    // peak markers
    for peak in path.peaks() {
        svg.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"red\"/>\n",
            px(peak.x),
            py(peak.y)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
