//! Deterministic pictures of fronts.
//!
//! Events sit at equal horizontal spacing and strand level `l` at height
//! `l`. Cusps are half circles; at a crossing the descending strand is
//! drawn unbroken and the ascending one is cut.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::front::{EventKind, FrontDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            _ => Err(format!("unknown format `{s}` (expected ascii or svg)")),
        }
    }
}

pub fn render(front: &FrontDiagram, format: Format) -> String {
    match format {
        Format::Ascii => render_ascii(front),
        Format::Svg => render_svg(front),
    }
}

const W: usize = 5;

struct Canvas {
    cells: Vec<Vec<char>>,
}

impl Canvas {
    fn put(&mut self, row: usize, col: usize, c: char) {
        self.cells[row][col] = c;
    }
}

/// Text picture, two text rows per strand level and five columns per event.
pub fn render_ascii(front: &FrontDiagram) -> String {
    let k = front.max_strands().max(1);
    let rows = 2 * k - 1;
    let width = W * front.len() + 2;
    let mut cv = Canvas {
        cells: vec![vec![' '; width]; rows],
    };
    let row = |l: usize| 2 * (l - 1);
    for (p, e) in front.events().iter().enumerate() {
        let x = 1 + W * p;
        let before = front.strands_at(p);
        let i = e.index;
        let flat = |cv: &mut Canvas, l: usize| {
            for d in 0..W {
                cv.put(row(l), x + d, '-');
            }
        };
        match e.kind {
            EventKind::Crossing => {
                for l in (1..=before).filter(|&l| l != i && l != i + 1) {
                    flat(&mut cv, l);
                }
                let r = row(i);
                for (d, c) in ['-', '\\', ' ', '/', '-'].into_iter().enumerate() {
                    cv.put(r, x + d, c);
                }
                cv.put(r + 1, x + 2, '\\');
                for (d, c) in ['-', '/', ' ', '\\', '-'].into_iter().enumerate() {
                    cv.put(r + 2, x + d, c);
                }
            }
            EventKind::Birth => {
                for l in 1..i {
                    flat(&mut cv, l);
                }
                for l in i..=before {
                    let r = row(l);
                    cv.put(r, x, '-');
                    for d in 1..4 {
                        cv.put(r + d, x + d, '\\');
                    }
                    cv.put(r + 4, x + 4, '-');
                }
                cv.put(row(i) + 1, x + 3, '<');
                cv.put(row(i), x + 4, '-');
                cv.put(row(i + 1), x + 4, '-');
            }
            EventKind::Death => {
                for l in 1..i {
                    flat(&mut cv, l);
                }
                cv.put(row(i), x, '-');
                cv.put(row(i + 1), x, '-');
                cv.put(row(i) + 1, x + 1, '>');
                for l in i + 2..=before {
                    let r = row(l);
                    cv.put(r, x, '-');
                    for d in 1..4 {
                        cv.put(r - d, x + d, '/');
                    }
                    cv.put(r - 4, x + 4, '-');
                }
            }
        }
    }
    let mut out = String::new();
    for line in cv.cells {
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    out
}

const DX: f64 = 40.0;
const DY: f64 = 30.0;
const MARGIN: f64 = 20.0;

/// SVG picture with the same layout as [`render_ascii`].
pub fn render_svg(front: &FrontDiagram) -> String {
    let k = front.max_strands().max(1) as f64;
    let width = 2.0 * MARGIN + DX * front.len() as f64;
    let height = 2.0 * MARGIN + DY * (k - 1.0);
    let y = |l: usize| MARGIN + DY * (l as f64 - 1.0);
    let mut paths: Vec<String> = Vec::new();
    let line = |x0: f64, y0: f64, x1: f64, y1: f64| format!("M {x0:.1} {y0:.1} L {x1:.1} {y1:.1}");
    for (p, e) in front.events().iter().enumerate() {
        let x0 = MARGIN + DX * p as f64;
        let x1 = x0 + DX;
        let before = front.strands_at(p);
        let i = e.index;
        let r = DY / 2.0;
        match e.kind {
            EventKind::Crossing => {
                for l in (1..=before).filter(|&l| l != i && l != i + 1) {
                    paths.push(line(x0, y(l), x1, y(l)));
                }
                let (xm, ym) = ((x0 + x1) / 2.0, (y(i) + y(i + 1)) / 2.0);
                // ascending strand, cut around the centre
                let gap = 0.3;
                paths.push(line(x0, y(i + 1), xm - gap * DX / 2.0, ym + gap * DY / 2.0));
                paths.push(line(xm + gap * DX / 2.0, ym - gap * DY / 2.0, x1, y(i)));
                paths.push(line(x0, y(i), x1, y(i + 1)));
            }
            EventKind::Birth => {
                for l in 1..i {
                    paths.push(line(x0, y(l), x1, y(l)));
                }
                for l in i..=before {
                    paths.push(line(x0, y(l), x1, y(l + 2)));
                }
                let xt = x1 - r;
                paths.push(format!(
                    "M {x1:.1} {:.1} L {xt:.1} {:.1} A {r:.1} {r:.1} 0 0 0 {xt:.1} {:.1} L {x1:.1} {:.1}",
                    y(i),
                    y(i),
                    y(i + 1),
                    y(i + 1)
                ));
            }
            EventKind::Death => {
                for l in 1..i {
                    paths.push(line(x0, y(l), x1, y(l)));
                }
                for l in i + 2..=before {
                    paths.push(line(x0, y(l), x1, y(l - 2)));
                }
                let xt = x0 + r;
                paths.push(format!(
                    "M {x0:.1} {:.1} L {xt:.1} {:.1} A {r:.1} {r:.1} 0 0 1 {xt:.1} {:.1} L {x0:.1} {:.1}",
                    y(i),
                    y(i),
                    y(i + 1),
                    y(i + 1)
                ));
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">"#
    );
    for d in paths {
        let _ = writeln!(out, r#"<path d="{d}"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    out
}
