//! Static drawings of path families and arrays, as ASCII text or SVG.
//!
//! Output depends only on the inputs, so repeated renders are byte-identical.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::paths::{FamilySpec, LatticePoint, Model, PathFamily};
use crate::tableaux::{UnusualArray, UnusualShape};

/// Pixels per lattice unit in SVG output.
pub const UNIT: i64 = 24;
const MARGIN: i64 = 36;
/// Characters per lattice unit horizontally in ASCII output.
const HSTEP: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Ascii => "txt",
            Format::Svg => "svg",
        }
    }
}

struct Frame {
    xmin: i64,
    xmax: i64,
    ymin: i64,
    ymax: i64,
}

impl Frame {
    fn around(spec: &FamilySpec, family: &PathFamily) -> Frame {
        let mut pts: Vec<LatticePoint> = spec.starts.iter().chain(&spec.ends).copied().collect();
        for p in family.paths() {
            pts.extend(p.vertices());
        }
        if pts.is_empty() {
            pts.push(LatticePoint::new(0, 0));
        }
        Frame {
            xmin: pts.iter().map(|p| p.x).min().unwrap(),
            xmax: pts.iter().map(|p| p.x).max().unwrap(),
            ymin: pts.iter().map(|p| p.y).min().unwrap(),
            ymax: pts.iter().map(|p| p.y).max().unwrap(),
        }
    }
}

/// ASCII drawing: `.` lattice point, `o` path vertex, `O` start, `*` end,
/// `|` and `-` path segments; rulers on the left and bottom.
pub fn ascii_family(spec: &FamilySpec, family: &PathFamily) -> String {
    let f = Frame::around(spec, family);
    let cols = (HSTEP * (f.xmax - f.xmin) + 1) as usize;
    let rows = (2 * (f.ymax - f.ymin) + 1) as usize;
    let mut grid = vec![vec![' '; cols]; rows];
    let cell = |p: LatticePoint| {
        (
            (2 * (f.ymax - p.y)) as usize,
            (HSTEP * (p.x - f.xmin)) as usize,
        )
    };
    for y in f.ymin..=f.ymax {
        for x in f.xmin..=f.xmax {
            let (r, c) = cell(LatticePoint::new(x, y));
            grid[r][c] = '.';
        }
    }
    for path in family.paths() {
        let vs = path.vertices();
        for w in vs.windows(2) {
            let (r0, c0) = cell(w[0]);
            let (r1, c1) = cell(w[1]);
            if r0 == r1 {
                for cell in &mut grid[r0][c0.min(c1) + 1..c0.max(c1)] {
                    *cell = '-';
                }
            } else {
                grid[r0.min(r1) + 1][c0] = '|';
            }
        }
        for v in vs {
            let (r, c) = cell(v);
            grid[r][c] = 'o';
        }
    }
    for &e in &spec.ends {
        let (r, c) = cell(e);
        grid[r][c] = '*';
    }
    for &s in &spec.starts {
        let (r, c) = cell(s);
        grid[r][c] = 'O';
    }
    let width = [f.ymin, f.ymax]
        .iter()
        .map(|y| y.to_string().len())
        .max()
        .unwrap();
    let mut out = String::new();
    for (r, line) in grid.iter().enumerate() {
        let label = if r % 2 == 0 {
            (f.ymax - r as i64 / 2).to_string()
        } else {
            String::new()
        };
        let text: String = line.iter().collect();
        let line = format!("{label:>width$} | {text}");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let _ = writeln!(out, "{:>width$} +-{}", "", "-".repeat(cols));
    let ruler: String = (f.xmin..=f.xmax)
        .map(|x| format!("{x:<w$}", w = HSTEP as usize))
        .collect();
    let _ = writeln!(out, "{:>width$}   {}", "", ruler.trim_end());
    out
}

/// SVG drawing with one lattice unit per 24 pixels.
pub fn svg_family(spec: &FamilySpec, family: &PathFamily) -> String {
    let f = Frame::around(spec, family);
    let w = (f.xmax - f.xmin) * UNIT + 2 * MARGIN;
    let h = (f.ymax - f.ymin) * UNIT + 2 * MARGIN;
    let px = |x: i64| MARGIN + (x - f.xmin) * UNIT;
    let py = |y: i64| MARGIN + (f.ymax - y) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    // axes through the origin when it is in view
    if (f.xmin..=f.xmax).contains(&0) {
        let _ = writeln!(
            s,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="gray" stroke-width="1"/>"#,
            py(f.ymax),
            py(f.ymin),
            x = px(0)
        );
    }
    if (f.ymin..=f.ymax).contains(&0) {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="gray" stroke-width="1"/>"#,
            px(f.xmin),
            px(f.xmax),
            y = py(0)
        );
    }
    for y in f.ymin..=f.ymax {
        for x in f.xmin..=f.xmax {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="2" fill="darkgray"/>"#,
                px(x),
                py(y)
            );
        }
    }
    // rulers
    for x in f.xmin..=f.xmax {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{x}</text>"#,
            px(x),
            h - 8
        );
    }
    for y in f.ymin..=f.ymax {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{y}</text>"#,
            MARGIN - 10,
            py(y) + 3
        );
    }
    for path in family.paths() {
        let points: Vec<String> = path
            .vertices()
            .iter()
            .map(|v| format!("{},{}", px(v.x), py(v.y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="3" stroke-linejoin="round"/>"#,
            points.join(" ")
        );
    }
    for &e in &spec.ends {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#,
            px(e.x),
            py(e.y)
        );
    }
    for &st in &spec.starts {
        if spec.model == Model::R {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="6" fill="white" stroke="black" stroke-width="1.5"/>"#,
                px(st.x),
                py(st.y)
            );
        } else {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#,
                px(st.x),
                py(st.y)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Array rows with absent cells blank; caps are shown in parentheses.
pub fn ascii_array(shape: &UnusualShape, array: &UnusualArray) -> String {
    let width = shape
        .caps
        .iter()
        .map(|c| c.to_string().len() + 2)
        .chain(array.columns.iter().flatten().map(|v| v.to_string().len()))
        .max()
        .unwrap_or(1);
    let depth = shape.heights.iter().copied().max().unwrap_or(0) + 1;
    let mut out = String::new();
    for row in 1..=depth {
        let cells: Vec<String> = (0..shape.columns())
            .map(|c| {
                let h = shape.heights[c];
                let text = if row <= h {
                    array.columns[c][row - 1].to_string()
                } else if row == h + 1 {
                    format!("({})", shape.caps[c])
                } else {
                    String::new()
                };
                format!("{text:>width$}")
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join(" ").trim_end());
    }
    out
}

pub fn svg_array(shape: &UnusualShape, array: &UnusualArray) -> String {
    let depth = shape.heights.iter().copied().max().unwrap_or(0) as i64 + 1;
    let w = shape.columns() as i64 * UNIT + 2 * MARGIN;
    let h = depth * UNIT + 2 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    for c in 0..shape.columns() {
        let x = MARGIN + c as i64 * UNIT;
        for row in 0..=shape.heights[c] {
            let y = MARGIN + row as i64 * UNIT;
            let (text, weight) = if row < shape.heights[c] {
                (array.columns[c][row].to_string(), "normal")
            } else {
                (shape.caps[c].to_string(), "bold")
            };
            if row < shape.heights[c] {
                let _ = writeln!(
                    s,
                    r#"<rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="none" stroke="black"/>"#
                );
            }
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="12" font-weight="{weight}" text-anchor="middle">{text}</text>"#,
                x + UNIT / 2,
                y + UNIT / 2 + 4
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="9" text-anchor="middle" fill="dimgray">{}</text>"#,
            x + UNIT / 2,
            MARGIN - 8,
            c + 1
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Distinct lattice points touched by the family; handy for tests.
pub fn touched_points(family: &PathFamily) -> HashSet<LatticePoint> {
    family.paths().iter().flat_map(|p| p.vertices()).collect()
}
