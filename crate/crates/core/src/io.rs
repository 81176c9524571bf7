//! Text file formats: scheme files, eigenmatrix TSV export, and
//! clique/spread witness files. Everything is exact (integers and
//! rationals as a/b), UTF-8 with LF endings, deterministic bytes.

use std::path::Path;

use num::One;

use crate::error::Error;
use crate::scheme::{ColorMatrix, Spectrum};
use crate::spreads::Spread;

/// Scheme file: a header line `ASCHEME v=<int> d=<int>`, then v lines of v
/// space-separated class indices. Lines starting with '#' are ignored.
pub fn parse_scheme(text: &str, path: &str) -> Result<ColorMatrix, Error> {
    let err = |line: usize, col: usize, msg: String| Error::Parse {
        path: path.to_string(),
        line,
        col,
        msg,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| err(1, 1, "empty file".into()))?;
    let header_err = || {
        err(
            header_no + 1,
            1,
            format!("bad header {header:?}, expected \"ASCHEME v=<int> d=<int>\""),
        )
    };
    let mut it = header.split_whitespace();
    if it.next() != Some("ASCHEME") {
        return Err(header_err());
    }
    let parse_kv = |tok: Option<&str>, key: &str| -> Option<usize> {
        tok?.strip_prefix(key)?.strip_prefix('=')?.parse().ok()
    };
    let v = parse_kv(it.next(), "v").ok_or_else(header_err)?;
    let d = parse_kv(it.next(), "d").ok_or_else(header_err)?;
    if it.next().is_some() {
        return Err(header_err());
    }

    let mut cells = vec![0u8; v * v];
    let mut grid_lines = Vec::with_capacity(v);
    for (line_no, line) in lines {
        grid_lines.push((line_no, line));
    }
    if grid_lines.len() != v {
        return Err(err(
            grid_lines.last().map_or(header_no + 2, |(n, _)| n + 2),
            1,
            format!("expected {v} rows, found {}", grid_lines.len()),
        ));
    }
    for (x, (line_no, line)) in grid_lines.iter().enumerate() {
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != v {
            return Err(err(
                line_no + 1,
                1,
                format!("row {x} has {} entries, expected {v}", entries.len()),
            ));
        }
        for (y, tok) in entries.iter().enumerate() {
            let value: usize = tok.parse().map_err(|_| {
                err(line_no + 1, y + 1, format!("bad class index {tok:?}"))
            })?;
            if value > d {
                return Err(err(
                    line_no + 1,
                    y + 1,
                    format!("class {value} exceeds d = {d}"),
                ));
            }
            if x == y && value != 0 {
                return Err(err(line_no + 1, y + 1, "diagonal entry must be 0".into()));
            }
            if x != y && value == 0 {
                return Err(err(line_no + 1, y + 1, "off-diagonal entry must be nonzero".into()));
            }
            if y < x && cells[y * v + x] as usize != value {
                return Err(err(
                    line_no + 1,
                    y + 1,
                    format!("asymmetric: cell ({x},{y}) = {value} but ({y},{x}) = {}", cells[y * v + x]),
                ));
            }
            cells[x * v + y] = value as u8;
        }
    }
    ColorMatrix::new(v, d, cells)
}

pub fn read_scheme(path: &Path) -> Result<ColorMatrix, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_scheme(&text, &path.display().to_string())
}

pub fn format_scheme(colors: &ColorMatrix) -> String {
    let v = colors.vertex_count();
    let mut out = format!("ASCHEME v={} d={}\n", v, colors.class_count());
    for x in 0..v {
        let row: Vec<String> = (0..v).map(|y| colors.class_of(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_scheme(colors: &ColorMatrix, path: &Path) -> Result<(), Error> {
    write_text(path, &format_scheme(colors))
}

/// Eigenmatrix export: three labeled TSV blocks P (integers), Q (exact
/// rationals as `a` or `a/b`) and m (multiplicities).
pub fn format_eigenmatrix(spec: &Spectrum) -> String {
    let n = spec.p.rows();
    let mut out = String::from("P\n");
    for j in 0..n {
        let row: Vec<String> = (0..n).map(|i| spec.p_i64(j, i).to_string()).collect();
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out.push_str("Q\n");
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                let q = &spec.q[(i, j)];
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            })
            .collect();
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out.push_str("m\n");
    let row: Vec<String> = spec.mults.iter().map(|m| m.to_string()).collect();
    out.push_str(&row.join("\t"));
    out.push('\n');
    out
}

pub fn write_eigenmatrix(spec: &Spectrum, path: &Path) -> Result<(), Error> {
    write_text(path, &format_eigenmatrix(spec))
}

/// Clique witness: one 0-based vertex index per line.
pub fn format_clique(vertices: &[usize]) -> String {
    let mut out = String::new();
    for &x in vertices {
        out.push_str(&x.to_string());
        out.push('\n');
    }
    out
}

pub fn write_clique(vertices: &[usize], path: &Path) -> Result<(), Error> {
    write_text(path, &format_clique(vertices))
}

pub fn read_clique(path: &Path) -> Result<Vec<usize>, Error> {
    let text = read_text(path)?;
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(line.parse().map_err(|_| Error::Parse {
            path: path.display().to_string(),
            line: line_no + 1,
            col: 1,
            msg: format!("bad vertex index {line:?}"),
        })?);
    }
    Ok(out)
}

/// Spread witness: the clique format with each clique block prefixed by a
/// `# clique i` comment.
pub fn format_spread(spread: &Spread) -> String {
    let mut out = String::new();
    for (i, clique) in spread.cliques().iter().enumerate() {
        out.push_str(&format!("# clique {i}\n"));
        for &x in clique {
            out.push_str(&x.to_string());
            out.push('\n');
        }
    }
    out
}

pub fn write_spread(spread: &Spread, path: &Path) -> Result<(), Error> {
    write_text(path, &format_spread(spread))
}

pub fn read_spread(path: &Path) -> Result<Spread, Error> {
    let text = read_text(path)?;
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            cliques.push(Vec::new());
            continue;
        }
        let x: usize = line.parse().map_err(|_| Error::Parse {
            path: path.display().to_string(),
            line: line_no + 1,
            col: 1,
            msg: format!("bad vertex index {line:?}"),
        })?;
        match cliques.last_mut() {
            Some(c) => c.push(x),
            None => {
                return Err(Error::Parse {
                    path: path.display().to_string(),
                    line: line_no + 1,
                    col: 1,
                    msg: "vertex before any '# clique' marker".into(),
                })
            }
        }
    }
    let n = cliques.len();
    Spread::from_cliques(n, &cliques)
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn read_text(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::Scheme;

    fn pentagon() -> ColorMatrix {
        ColorMatrix::from_fn(5, 2, |x, y| {
            let d = (y - x).min(5 + x - y);
            d as u8
        })
        .unwrap()
    }

    #[test]
    fn scheme_round_trip() {
        let colors = pentagon();
        let text = format_scheme(&colors);
        let back = parse_scheme(&text, "mem").unwrap();
        assert_eq!(back, colors);
        // write o read is the identity on comment-free files
        assert_eq!(format_scheme(&back), text);
    }

    #[test]
    fn comments_are_ignored(){
        let colors = pentagon();
        let mut text = String::from("# a comment\n");
        text.push_str(&format_scheme(&colors));
        text.push_str("# trailing\n");
        assert_eq!(parse_scheme(&text, "mem").unwrap(), colors);
    }

    #[test]
    fn symmetry_error_carries_location() {
        let text = "ASCHEME v=3 d=2\n0 1 1\n2 0 1\n1 1 0\n";
        match parse_scheme(text, "mem") {
            Err(Error::Parse { line, col, msg, .. }) => {
                assert_eq!((line, col), (3, 1));
                assert!(msg.contains("asymmetric"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn truncated_file_is_reported() {
        let text = "ASCHEME v=4 d=1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n";
        assert!(matches!(parse_scheme(text, "mem"), Err(Error::Parse { .. })));
    }

    #[test]
    fn eigenmatrix_blocks() {
        let s = Scheme::verify(ColorMatrix::from_fn(3, 1, |_, _| 1).unwrap()).unwrap();
        let text = format_eigenmatrix(s.spectrum().unwrap());
        assert_eq!(text, "P\n1\t2\n1\t-1\nQ\n1\t2\n1\t-1\nm\n1\t2\n");
    }

    #[test]
    fn h22_dual_eigenmatrix_is_integral() {
        // the 4-cycle distance scheme is self-dual: Q is integral
        let colors = ColorMatrix::from_fn(4, 2, |x, y| {
            if (x + y) % 2 == 1 {
                1
            } else {
                2
            }
        })
        .unwrap();
        let s = Scheme::verify(colors).unwrap();
        assert!(s.spectrum().unwrap().q.is_integral());
    }

    #[test]
    fn spread_file_round_trip() {
        let spread = Spread::from_assignment(3, (0..9).map(|x| x / 3).collect()).unwrap();
        let text = format_spread(&spread);
        assert!(text.starts_with("# clique 0\n"));
        let dir = std::env::temp_dir().join("ascheme_io_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("spread.txt");
        write_spread(&spread, &path).unwrap();
        assert_eq!(read_spread(&path).unwrap(), spread);
        std::fs::remove_dir_all(&dir).ok();
    }
}
