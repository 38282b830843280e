//! Line-oriented text formats for instances and colorings.
//!
//! Instance files:
//!
//! ```text
//! # comment
//! mode vertex            # or edge
//! vertices 4
//! v 0 5/1                # vertex weight, vertex mode only (default 1)
//! e 0 1                  # edge; edge mode takes an optional weight
//! k 2                    # list coloring extras, colors numbered from 1
//! bound 1 5
//! list 0 1 2
//! ```
//!
//! Coloring files hold one class per line as space-separated item ids.

use maxcolor_core::weight::{format_weight, parse_weight};
use maxcolor_core::{Coloring, Mode, Weight, WeightedGraph};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parsed instance file. List data is kept 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub graph: WeightedGraph,
    pub k: Option<usize>,
    /// Per color, when any `bound` line is present; missing colors default
    /// to `None`.
    pub bounds: Vec<Option<usize>>,
    /// Per item, empty when no `list` line names it.
    pub lists: Vec<Vec<usize>>,
}

impl InstanceFile {
    pub fn plain(graph: WeightedGraph) -> Self {
        InstanceFile {
            graph,
            k: None,
            bounds: Vec::new(),
            lists: Vec::new(),
        }
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse().or_else(|_| err(line, format!("{what}: expected a non-negative integer, got '{tok}'")))
}

fn weight(line: usize, tok: &str) -> Result<Weight, ParseError> {
    match parse_weight(tok) {
        Some(w) if w > Weight::from_integer(0) => Ok(w),
        _ => err(line, format!("weight: expected a positive num/den, got '{tok}'")),
    }
}

fn arity(line: usize, toks: &[&str], min: usize, max: usize) -> Result<(), ParseError> {
    let n = toks.len() - 1;
    if n < min || n > max {
        let want = if min == max { min.to_string() } else { format!("{min} to {max}") };
        return err(line, format!("'{}' takes {want} arguments, got {n}", toks[0]));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut mode = None;
    let mut n = None;
    let mut vweights: Vec<(usize, usize, Weight)> = Vec::new();
    let mut edges: Vec<(usize, (usize, usize), Option<Weight>)> = Vec::new();
    let mut k = None;
    let mut bounds: Vec<(usize, usize, usize)> = Vec::new();
    let mut lists: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut last = 0;
    for (line, toks) in lines(text) {
        last = line;
        match toks[0] {
            "mode" => {
                arity(line, &toks, 1, 1)?;
                if mode.is_some() {
                    return err(line, "duplicate 'mode'");
                }
                mode = Some(match toks[1] {
                    "vertex" => Mode::Vertex,
                    "edge" => Mode::Edge,
                    other => return err(line, format!("mode must be 'vertex' or 'edge', got '{other}'")),
                });
            }
            "vertices" => {
                arity(line, &toks, 1, 1)?;
                if n.is_some() {
                    return err(line, "duplicate 'vertices'");
                }
                n = Some(number(line, toks[1], "vertex count")?);
            }
            "v" => {
                arity(line, &toks, 2, 2)?;
                vweights.push((line, number(line, toks[1], "vertex id")?, weight(line, toks[2])?));
            }
            "e" => {
                arity(line, &toks, 2, 3)?;
                let u = number(line, toks[1], "endpoint")?;
                let v = number(line, toks[2], "endpoint")?;
                let w = toks.get(3).map(|t| weight(line, t)).transpose()?;
                edges.push((line, (u, v), w));
            }
            "k" => {
                arity(line, &toks, 1, 1)?;
                if k.is_some() {
                    return err(line, "duplicate 'k'");
                }
                k = Some(number(line, toks[1], "color count")?);
            }
            "bound" => {
                arity(line, &toks, 2, 2)?;
                bounds.push((line, number(line, toks[1], "color")?, number(line, toks[2], "bound")?));
            }
            "list" => {
                if toks.len() < 3 {
                    return err(line, "'list' takes an item and at least one color");
                }
                let item = number(line, toks[1], "item")?;
                let colors = toks[2..]
                    .iter()
                    .map(|t| number(line, t, "color"))
                    .collect::<Result<Vec<_>, _>>()?;
                lists.push((line, item, colors));
            }
            other => return err(line, format!("unknown directive '{other}'")),
        }
    }
    let Some(mode) = mode else {
        return err(last.max(1), "missing 'mode' line");
    };
    let Some(n) = n else {
        return err(last.max(1), "missing 'vertices' line");
    };

    let mut items = Vec::with_capacity(edges.len());
    let mut weights = match mode {
        Mode::Vertex => vec![Weight::from_integer(1); n],
        Mode::Edge => Vec::with_capacity(edges.len()),
    };
    let mut seen = std::collections::HashSet::new();
    for &(line, (u, v), w) in &edges {
        if u >= n || v >= n {
            return err(line, format!("edge ({u}, {v}) names a vertex outside 0..{n}"));
        }
        if u == v {
            return err(line, format!("self-loop at vertex {u}"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return err(line, format!("duplicate edge ({u}, {v})"));
        }
        match (mode, w) {
            (Mode::Vertex, Some(_)) => return err(line, "edge weights need 'mode edge'"),
            (Mode::Edge, w) => weights.push(w.unwrap_or(Weight::from_integer(1))),
            _ => {}
        }
        items.push((u, v));
    }
    let mut named = vec![false; n];
    for &(line, v, w) in &vweights {
        if mode == Mode::Edge {
            return err(line, "vertex weights need 'mode vertex'");
        }
        if v >= n {
            return err(line, format!("vertex {v} outside 0..{n}"));
        }
        if std::mem::replace(&mut named[v], true) {
            return err(line, format!("vertex {v} weighted twice"));
        }
        weights[v] = w;
    }
    let graph = WeightedGraph::new(mode, n, items, weights).map_err(|e| ParseError {
        line: last,
        message: e.to_string(),
    })?;

    let m = graph.item_count();
    let mut out_bounds = Vec::new();
    let mut out_lists = Vec::new();
    if !bounds.is_empty() || !lists.is_empty() {
        let Some(kk) = k else {
            let line = bounds.first().map(|b| b.0).into_iter().chain(lists.first().map(|l| l.0)).min().unwrap_or(last);
            return err(line, "'bound' and 'list' need a 'k' line");
        };
        let color = |line: usize, c: usize| {
            if c == 0 || c > kk {
                err(line, format!("color {c} outside 1..={kk}"))
            } else {
                Ok(c - 1)
            }
        };
        out_bounds = vec![None; kk];
        for &(line, c, b) in &bounds {
            let c = color(line, c)?;
            if b == 0 {
                return err(line, "bounds must be positive");
            }
            if out_bounds[c].replace(b).is_some() {
                return err(line, format!("color {} bounded twice", c + 1));
            }
        }
        out_lists = vec![Vec::new(); m];
        for (line, item, colors) in &lists {
            if *item >= m {
                return err(*line, format!("item {item} outside 0..{m}"));
            }
            if !out_lists[*item].is_empty() {
                return err(*line, format!("item {item} listed twice"));
            }
            out_lists[*item] = colors.iter().map(|&c| color(*line, c)).collect::<Result<_, _>>()?;
        }
    }
    Ok(InstanceFile {
        graph,
        k,
        bounds: out_bounds,
        lists: out_lists,
    })
}

pub fn write_instance(inst: &InstanceFile) -> String {
    let g = &inst.graph;
    let mut s = String::new();
    writeln!(s, "mode {}", g.mode()).unwrap();
    writeln!(s, "vertices {}", g.vertex_count()).unwrap();
    if g.mode() == Mode::Vertex {
        for v in 0..g.vertex_count() {
            writeln!(s, "v {v} {}", format_weight(&g.weight(v))).unwrap();
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match g.mode() {
            Mode::Vertex => writeln!(s, "e {u} {v}").unwrap(),
            Mode::Edge => writeln!(s, "e {u} {v} {}", format_weight(&g.weight(i))).unwrap(),
        }
    }
    if let Some(k) = inst.k {
        writeln!(s, "k {k}").unwrap();
        for (c, b) in inst.bounds.iter().enumerate() {
            if let Some(b) = b {
                writeln!(s, "bound {} {b}", c + 1).unwrap();
            }
        }
        for (item, list) in inst.lists.iter().enumerate() {
            if !list.is_empty() {
                let cs: Vec<String> = list.iter().map(|c| (c + 1).to_string()).collect();
                writeln!(s, "list {item} {}", cs.join(" ")).unwrap();
            }
        }
    }
    s
}

pub fn write_graph(g: &WeightedGraph) -> String {
    write_instance(&InstanceFile::plain(g.clone()))
}

pub fn parse_coloring(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    lines(text)
        .map(|(line, toks)| toks.iter().map(|t| number(line, t, "item id")).collect())
        .collect()
}

/// Classes one per line, preceded by comment lines with the totals.
pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    writeln!(s, "# weight {}", format_weight(&c.total_weight())).unwrap();
    writeln!(s, "# classes {}", c.class_count()).unwrap();
    for class in c.classes() {
        let ids: Vec<String> = class.iter().map(usize::to_string).collect();
        writeln!(s, "{}", ids.join(" ")).unwrap();
    }
    s
}

/// One 1-based color per source edge, whitespace separated; `#` comments.
pub fn parse_certificate(text: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (line, toks) in lines(text) {
        for t in toks {
            match number(line, t, "color")? {
                0 => return err(line, "colors are numbered from 1"),
                c => out.push(c - 1),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxcolor_core::weight::w;

    #[test]
    fn vertex_instance_round_trip() {
        let text = "# star\nmode vertex\nvertices 4\nv 0 5\nv 1 3/1\nv 2 1/2\ne 0 1\ne 0 2\ne 0 3\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.graph.weight(2), Weight::new(1, 2));
        assert_eq!(inst.graph.weight(3), w(1));
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn list_instance_round_trip() {
        let text = "mode edge\nvertices 3\ne 0 1\ne 1 2 2/3\nk 3\nbound 2 4\nlist 0 1 2\nlist 1 3\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.bounds, vec![None, Some(4), None]);
        assert_eq!(inst.lists, vec![vec![0, 1], vec![2]]);
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let cases = [
            ("mode vertex\nvertices 2\ne 0 2\n", 3, "outside"),
            ("mode vertex\nvertices x\n", 2, "vertex count"),
            ("mode edge\nvertices 2\n\nv 0 1\n", 4, "mode vertex"),
            ("mode vertex\nvertices 2\nfoo\n", 3, "unknown directive"),
            ("vertices 2\n", 1, "missing 'mode'"),
            ("mode edge\nvertices 2\ne 0 1 -1\n", 3, "positive"),
            ("mode edge\nvertices 2\ne 0 1\nk 2\nlist 0 3\n", 5, "color 3"),
            ("mode edge\nvertices 3\ne 0 1\ne 1 0\n", 4, "duplicate edge"),
        ];
        for (text, line, needle) in cases {
            let e = parse_instance(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
            assert!(e.message.contains(needle), "{text:?}: {e}");
        }
    }

    #[test]
    fn colorings() {
        assert_eq!(parse_coloring("# w\n0 2\n\n1\n").unwrap(), vec![vec![0, 2], vec![1]]);
        assert_eq!(parse_coloring("0 a\n").unwrap_err().line, 1);
        assert_eq!(parse_certificate("1 2\n3\n").unwrap(), vec![0, 1, 2]);
        assert!(parse_certificate("0\n").is_err());
    }
}
