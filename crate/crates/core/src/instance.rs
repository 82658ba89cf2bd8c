//! Line-based instance files.
//!
//! ```text
//! # comment
//! n 8 m 2
//! matching2 2 0 1 2 3
//! single 1 4 5
//! ```
//!
//! The header gives the vertex and class counts; each following line is one
//! class as `<kind> <edgecount> u1 v1 u2 v2 ...`. Blank lines and lines
//! starting with `#` are ignored. Serialization is canonical: classes in id
//! order, edges sorted with the smaller endpoint first.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{ClassKind, ColoredGraph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_int(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a nonnegative integer, got {tok:?}")))
}

pub fn parse_instance(text: &str) -> Result<ColoredGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match toks.as_slice() {
        ["n", n, "m", m] => (parse_int(n, hline)?, parse_int(m, hline)?),
        _ => return Err(parse_err(hline, "header must be `n <int> m <int>`")),
    };

    let mut classes = Vec::with_capacity(m);
    let mut kinds = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if classes.len() == m {
            return Err(parse_err(lineno, format!("more than m={m} class lines")));
        }
        let mut toks = line.split_whitespace();
        let kind: ClassKind = toks
            .next()
            .unwrap_or_default()
            .parse()
            .map_err(|e: String| parse_err(lineno, e))?;
        let count = parse_int(toks.next().ok_or_else(|| parse_err(lineno, "missing edge count"))?, lineno)?;
        if let Some(expected) = kind.edge_count() {
            if count != expected {
                return Err(parse_err(
                    lineno,
                    format!("kind {kind} needs {expected} edges, header says {count}"),
                ));
            }
        }
        let ints = toks.map(|t| parse_int(t, lineno)).collect::<Result<Vec<_>>>()?;
        if ints.len() != 2 * count {
            return Err(parse_err(
                lineno,
                format!("expected {} endpoints, found {}", 2 * count, ints.len()),
            ));
        }
        classes.push(ints.chunks(2).map(|p| (p[0], p[1])).collect::<Vec<_>>());
        kinds.push((lineno, kind));
    }
    if classes.len() != m {
        return Err(parse_err(hline, format!("header says m={m}, found {} classes", classes.len())));
    }

    let g = ColoredGraph::new(n, classes)?;
    for (class, &(lineno, declared)) in g.classes().iter().zip(&kinds) {
        if class.kind != declared {
            return Err(parse_err(
                lineno,
                format!("class {} declared {declared} but is {}", class.id, class.kind),
            ));
        }
    }
    Ok(g)
}

pub fn serialize_instance(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {} m {}", g.n(), g.m()).unwrap();
    for class in g.classes() {
        write!(out, "{} {}", class.kind, class.edges.len()).unwrap();
        for e in &class.edges {
            write!(out, " {} {}", e.u(), e.v()).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_instance("n 3 m 1\ntriangle 3 0 1 1 2 2 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.class(0).kind, ClassKind::Triangle);
        assert_eq!(serialize_instance(&g), "n 3 m 1\ntriangle 3 0 1 0 2 1 2\n");
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse_instance("n 2 m 1\nsingle 1 0 0\n").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { class: 0, vertex: 0 }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_instance("# hi\n\nn 4 m 2\n# inner\nsingle 1 0 1\n\nmatching2 2 0 2 1 3\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.class(1).kind, ClassKind::Matching2);
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "n 3\n",
            "x 3 m 1\nsingle 1 0 1\n",
            "n 3 m 2\nsingle 1 0 1\n",
            "n 3 m 1\nsingle 1 0 1\nsingle 1 1 2\n",
            "n 3 m 1\nsingle 2 0 1 1 2\n",
            "n 3 m 1\nsingle 1 0\n",
            "n 3 m 1\nstar 1 0 1\n",
            "n 3 m 1\nsingle 1 0 -1\n",
            "n 4 m 1\nmatching2 2 0 1 1 2\n",
            "n 3 m 1\nother 2 0 1 1 2\n".replace("other", "triangle").as_str(),
        ] {
            assert!(parse_instance(bad).is_err(), "accepted {bad:?}");
        }
        // `other` accepts any edge count as long as the class really is other
        assert!(parse_instance("n 3 m 1\nother 2 0 1 1 2\n").is_ok());
        assert!(parse_instance("n 3 m 1\nother 1 0 1\n").is_err());
    }
}
