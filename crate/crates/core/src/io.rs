//! Text formats: graph6, edge lists, class representations, colorings and
//! DOT output.
//!
//! Line-oriented formats ignore blank lines and lines starting with `#`.
//! Parse errors carry the byte offset of the offending token.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::classes::{
    format_rational, parse_rational, Arc, ArcRepresentation, ChainSpec, ClassRepresentation,
    IntervalRepresentation, Rational, ThresholdSpec,
};
use crate::coloring::{ColorId, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::arg(format!("unknown graph format {other:?}"))),
        }
    }
}

/// Guesses the format: graph6 if the first content line is a single
/// token of printable graph6 bytes that is not a number.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(GRAPH6_HEADER) => GraphFormat::Graph6,
        Some(l)
            if !l.contains(char::is_whitespace)
                && l.bytes().all(|b| (63..=126).contains(&b)) =>
        {
            GraphFormat::Graph6
        }
        _ => GraphFormat::EdgeList,
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => {
            let mut graphs = parse_graph6_lines(text)?;
            match graphs.len() {
                1 => Ok(graphs.pop().unwrap()),
                0 => Err(Error::parse(0, "no graph in input")),
                k => Err(Error::parse(0, format!("expected one graph, found {k}"))),
            }
        }
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Content lines with their byte offsets.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').filter_map(move |raw| {
        let start = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        let trimmed = line.trim_start();
        let start = start + (line.len() - trimmed.len());
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty() && !trimmed.starts_with('#')).then_some((start, trimmed))
    })
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(line_start: usize, line: &str) -> Vec<(usize, &str)> {
    let base = line.as_ptr() as usize;
    line.split_whitespace()
        .map(|t| (line_start + (t.as_ptr() as usize - base), t))
        .collect()
}

fn parse_num<T: FromStr>(offset: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(offset, format!("expected {what}, found {token:?}")))
}

fn parse_rat(offset: usize, token: &str) -> Result<Rational> {
    parse_rational(token).map_err(|_| Error::parse(offset, format!("expected a rational, found {token:?}")))
}

/// Decodes one graph6 string (without newline).
pub fn decode_graph6(s: &str) -> Result<Graph> {
    decode_graph6_at(s.as_bytes(), 0)
}

fn decode_graph6_at(bytes: &[u8], base: usize) -> Result<Graph> {
    let (bytes, base) = match bytes.strip_prefix(GRAPH6_HEADER.as_bytes()) {
        Some(rest) => (rest, base + GRAPH6_HEADER.len()),
        None => (bytes, base),
    };
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(base + i, format!("byte {:#04x} outside the graph6 range", bytes[i])));
    }
    let value = |range: &[u8]| range.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body_start) = match bytes {
        [] => return Err(Error::parse(base, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(base + 2, "truncated vertex count"));
            }
            (value(&rest[..6]), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(base + 1, "truncated vertex count"));
            }
            (value(&rest[..3]), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(Error::parse(
            base + body_start + body.len().min(expected),
            format!("{n} vertices need {expected} edge bytes, found {}", body.len()),
        ));
    }
    if n == 0 {
        return Err(Error::parse(base, "graph6 string encodes the empty graph"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// One graph per content line; an optional `>>graph6<<` header is allowed
/// on every line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    content_lines(text)
        .map(|(offset, line)| decode_graph6_at(line.as_bytes(), offset))
        .collect()
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let push6 = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push6(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push6(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// `u v` pairs, 0-based. An optional `n <count>` line fixes the vertex
/// count; otherwise it is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<(usize, usize)> = None;
    for (start, line) in content_lines(text) {
        let toks = tokens(start, line);
        match toks[..] {
            [(_, "n"), (o, count)] => {
                if declared.replace(parse_num(o, count, "a vertex count")?).is_some() {
                    return Err(Error::parse(start, "vertex count declared twice"));
                }
            }
            [(ou, u), (ov, v)] => {
                let u: VertexId = parse_num(ou, u, "a vertex id")?;
                let v: VertexId = parse_num(ov, v, "a vertex id")?;
                for (o, x) in [(ou, u), (ov, v)] {
                    if max_id.is_none_or(|(m, _)| x > m) {
                        max_id = Some((x, o));
                    }
                }
                if u == v {
                    return Err(Error::parse(ou, format!("loop at vertex {u}")));
                }
                edges.push((u.min(v), u.max(v), ou));
            }
            _ => return Err(Error::parse(start, "expected \"u v\" or \"n <count>\"")),
        }
    }
    let n = match (declared, max_id) {
        (Some(n), Some((m, o))) if m >= n => {
            return Err(Error::parse(o, format!("vertex {m} out of range for n = {n}")))
        }
        (Some(n), _) => n,
        (None, Some((m, _))) => m + 1,
        (None, None) => return Err(Error::parse(0, "no edges and no vertex count")),
    };
    let mut sorted = edges.clone();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
        return Err(Error::parse(w[1].2, format!("edge {{{}, {}}} repeated", w[1].0, w[1].1)));
    }
    Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `u v c` triples, one per edge of `g`.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring> {
    let mut colors: Vec<Option<ColorId>> = vec![None; g.edge_count()];
    for (start, line) in content_lines(text) {
        let toks = tokens(start, line);
        let [(ou, u), (ov, v), (oc, c)] = toks[..] else {
            return Err(Error::parse(start, "expected \"u v color\""));
        };
        let u: VertexId = parse_num(ou, u, "a vertex id")?;
        let v: VertexId = parse_num(ov, v, "a vertex id")?;
        let c: ColorId = parse_num(oc, c, "a color")?;
        if c == 0 {
            return Err(Error::parse(oc, "colors are positive"));
        }
        let e = g
            .edge_id(u, v)
            .ok_or_else(|| Error::parse(ou, format!("{{{u}, {v}}} is not an edge")))?;
        if colors[e].replace(c).is_some() {
            return Err(Error::parse(ou, format!("edge {{{u}, {v}}} colored twice")));
        }
    }
    if let Some(e) = colors.iter().position(Option::is_none) {
        let (u, v) = g.edges()[e];
        return Err(Error::parse(text.len(), format!("edge {{{u}, {v}}} has no color")));
    }
    EdgeColoring::new(g, colors.into_iter().map(Option::unwrap).collect())
}

pub fn write_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{u} {v} {}", c.color(e)).unwrap();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationKind {
    Interval,
    Arc,
    Threshold,
    Chain,
}

impl FromStr for RepresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interval" => Ok(RepresentationKind::Interval),
            "arc" | "circular-arc" => Ok(RepresentationKind::Arc),
            "threshold" => Ok(RepresentationKind::Threshold),
            "chain" => Ok(RepresentationKind::Chain),
            other => Err(Error::arg(format!("unknown representation kind {other:?}"))),
        }
    }
}

type Token<'t> = (usize, &'t str);
type Tokens<'t> = Vec<Token<'t>>;

/// Collects `v a b ...` records, requiring ids `0..n` each exactly once.
fn per_vertex_records<'t>(
    text: &'t str,
    arity: usize,
    extra: &mut dyn FnMut(usize, &[Token<'t>]) -> Result<bool>,
) -> Result<Vec<Tokens<'t>>> {
    let mut rows: Vec<(VertexId, usize, Tokens<'t>)> = Vec::new();
    for (start, line) in content_lines(text) {
        let toks = tokens(start, line);
        if extra(start, &toks)? {
            continue;
        }
        if toks.len() != arity + 1 {
            return Err(Error::parse(start, format!("expected a vertex id and {arity} values")));
        }
        let v: VertexId = parse_num(toks[0].0, toks[0].1, "a vertex id")?;
        rows.push((v, toks[0].0, toks[1..].to_vec()));
    }
    let n = rows.len();
    let mut out: Vec<Option<Tokens<'t>>> = vec![None; n];
    for (v, o, vals) in rows {
        if v >= n {
            return Err(Error::parse(o, format!("vertex {v} out of range for {n} records")));
        }
        if out[v].replace(vals).is_some() {
            return Err(Error::parse(o, format!("vertex {v} listed twice")));
        }
    }
    if n == 0 {
        return Err(Error::parse(0, "no vertex records"));
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

pub fn parse_interval(text: &str) -> Result<IntervalRepresentation> {
    let rows = per_vertex_records(text, 2, &mut |_, _| Ok(false))?;
    let intervals = rows
        .iter()
        .map(|r| {
            let l = parse_rat(r[0].0, r[0].1)?;
            let h = parse_rat(r[1].0, r[1].1)?;
            if l > h {
                return Err(Error::parse(r[0].0, "interval has l > r"));
            }
            Ok((l, h))
        })
        .collect::<Result<Vec<_>>>()?;
    IntervalRepresentation::new(intervals)
}

pub fn parse_arcs(text: &str) -> Result<ArcRepresentation> {
    let rows = per_vertex_records(text, 2, &mut |_, _| Ok(false))?;
    let arcs = rows
        .iter()
        .map(|r| {
            let s = parse_rat(r[0].0, r[0].1)?;
            let e = parse_rat(r[1].0, r[1].1)?;
            Arc::from_endpoints(s, e).map_err(|err| Error::parse(r[0].0, err.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    ArcRepresentation::new(arcs)
}

pub fn parse_threshold(text: &str) -> Result<ThresholdSpec> {
    let mut threshold: Option<Rational> = None;
    let rows = per_vertex_records(text, 1, &mut |start, toks| match toks {
        [(_, "t"), (o, value)] => {
            if threshold.replace(parse_rat(*o, value)?).is_some() {
                return Err(Error::parse(start, "threshold given twice"));
            }
            Ok(true)
        }
        _ => Ok(false),
    })?;
    let weights = rows
        .iter()
        .map(|r| parse_rat(r[0].0, r[0].1))
        .collect::<Result<Vec<_>>>()?;
    let threshold = threshold.ok_or_else(|| Error::parse(text.len(), "missing \"t <value>\" line"))?;
    Ok(ThresholdSpec { weights, threshold })
}

/// `A a_1 ... a_k` in chain order, `B b ...`, and `N a b ...` giving the
/// neighborhood of each `A` vertex (omitted lines mean empty).
pub fn parse_chain(text: &str) -> Result<ChainSpec> {
    let mut a: Option<Vec<VertexId>> = None;
    let mut b: Option<Vec<VertexId>> = None;
    let mut nbs: Vec<(VertexId, usize, Vec<VertexId>)> = Vec::new();
    let ids = |toks: &[(usize, &str)]| -> Result<Vec<VertexId>> {
        toks.iter().map(|&(o, t)| parse_num(o, t, "a vertex id")).collect()
    };
    for (start, line) in content_lines(text) {
        let toks = tokens(start, line);
        match toks[0].1 {
            "A" if a.is_none() => a = Some(ids(&toks[1..])?),
            "B" if b.is_none() => b = Some(ids(&toks[1..])?),
            "N" if toks.len() >= 2 => {
                let v = parse_num(toks[1].0, toks[1].1, "a vertex id")?;
                nbs.push((v, toks[1].0, ids(&toks[2..])?));
            }
            _ => return Err(Error::parse(start, "expected an \"A\", \"B\" or \"N\" line")),
        }
    }
    let a = a.ok_or_else(|| Error::parse(text.len(), "missing \"A\" line"))?;
    let b = b.ok_or_else(|| Error::parse(text.len(), "missing \"B\" line"))?;
    let mut neighborhoods = vec![None; a.len()];
    for (v, o, nb) in nbs {
        let i = a
            .iter()
            .position(|&x| x == v)
            .ok_or_else(|| Error::parse(o, format!("{v} is not an A vertex")))?;
        if neighborhoods[i].replace(nb).is_some() {
            return Err(Error::parse(o, format!("neighborhood of {v} given twice")));
        }
    }
    let spec = ChainSpec {
        vertex_count: a.len() + b.len(),
        a_order: a,
        b,
        neighborhoods: neighborhoods.into_iter().map(Option::unwrap_or_default).collect(),
    };
    spec.validate()?;
    Ok(spec)
}

pub fn parse_representation(text: &str, kind: RepresentationKind) -> Result<ClassRepresentation> {
    Ok(match kind {
        RepresentationKind::Interval => ClassRepresentation::Interval(parse_interval(text)?),
        RepresentationKind::Arc => ClassRepresentation::Arc(parse_arcs(text)?),
        RepresentationKind::Threshold => ClassRepresentation::Threshold(parse_threshold(text)?),
        RepresentationKind::Chain => ClassRepresentation::Chain(parse_chain(text)?),
    })
}

pub fn write_representation(rep: &ClassRepresentation) -> String {
    let mut out = String::new();
    match rep {
        ClassRepresentation::Interval(r) => {
            for (v, (l, h)) in r.intervals().iter().enumerate() {
                writeln!(out, "{v} {} {}", format_rational(l), format_rational(h)).unwrap();
            }
        }
        ClassRepresentation::Arc(r) => {
            for (v, a) in r.arcs().iter().enumerate() {
                let end = if a.is_full() { Rational::from_integer(1) } else { a.end() };
                writeln!(out, "{v} {} {}", format_rational(&a.start), format_rational(&end)).unwrap();
            }
        }
        ClassRepresentation::Threshold(s) => {
            writeln!(out, "t {}", format_rational(&s.threshold)).unwrap();
            for (v, w) in s.weights.iter().enumerate() {
                writeln!(out, "{v} {}", format_rational(w)).unwrap();
            }
        }
        ClassRepresentation::Chain(s) => {
            let join = |ids: &[VertexId]| ids.iter().map(|v| format!(" {v}")).collect::<String>();
            writeln!(out, "A{}", join(&s.a_order)).unwrap();
            writeln!(out, "B{}", join(&s.b)).unwrap();
            for (a, nb) in s.a_order.iter().zip(&s.neighborhoods) {
                writeln!(out, "N {a}{}", join(nb)).unwrap();
            }
        }
    }
    out
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// DOT text for `g`; colored edges get a palette color and a label with
/// the color id, highlighted vertices are filled.
pub fn emit_dot(g: &Graph, coloring: Option<&EdgeColoring>, highlights: Option<&VertexSet>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        if highlights.is_some_and(|h| h.contains(v)) {
            writeln!(out, "  {v} [style=filled, fillcolor=\"#ffd966\"];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let id = c.color(e);
                let hue = PALETTE[(id as usize - 1) % PALETTE.len()];
                writeln!(out, "  {u} -- {v} [color=\"{hue}\", label=\"{id}\", penwidth=2];").unwrap();
            }
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_examples() {
        let g = decode_graph6("D??").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 0));
        assert_eq!(decode_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(decode_graph6(">>graph6<<Bw").unwrap(), Graph::complete(3));
        let p = Graph::petersen();
        assert_eq!(decode_graph6(&encode_graph6(&p)).unwrap(), p);
        let big = Graph::path(70);
        let s = encode_graph6(&big);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), big);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert_eq!(
            decode_graph6("D?"),
            Err(Error::parse(2, "5 vertices need 2 edge bytes, found 1"))
        );
        assert!(matches!(decode_graph6("B w"), Err(Error::Parse { offset: 1, .. })));
        let err = parse_graph6_lines("Bw\nD?\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 5, .. }));
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), Graph::path(3));
        let g = parse_edge_list("# comment\nn 4\n0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("0 1\n1 x\n"), Err(Error::Parse { offset: 6, .. })));
        assert!(matches!(parse_edge_list("0 1\n1 0\n"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_edge_list("n 2\n0 3\n"), Err(Error::Parse { offset: 6, .. })));
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("Bw\n"), GraphFormat::Graph6);
        assert_eq!(detect_format("0 1\n"), GraphFormat::EdgeList);
        assert_eq!(detect_format("n 3\n"), GraphFormat::EdgeList);
        assert_eq!(detect_format(">>graph6<<Bw"), GraphFormat::Graph6);
    }

    #[test]
    fn colorings_round_trip() {
        let g = Graph::cycle(4);
        let c = EdgeColoring::new(&g, vec![1, 2, 2, 1]).unwrap();
        assert_eq!(parse_coloring(&g, &write_coloring(&g, &c)).unwrap(), c);
        assert!(parse_coloring(&g, "0 1 1\n").is_err());
        assert!(parse_coloring(&g, "0 2 1\n").is_err());
    }

    #[test]
    fn representations_round_trip() {
        let reps = [
            ClassRepresentation::Interval(parse_interval("0 0 2\n1 1 3\n2 2 4\n").unwrap()),
            ClassRepresentation::Arc(parse_arcs("0 0 1/2\n1 3/4 1/8\n2 0 1\n").unwrap()),
            ClassRepresentation::Threshold(parse_threshold("t 4\n0 3\n1 3\n2 1\n3 1\n").unwrap()),
            ClassRepresentation::Chain(parse_chain("A 0 1\nB 2 3\nN 0 2\nN 1 2 3\n").unwrap()),
        ];
        let kinds = [
            RepresentationKind::Interval,
            RepresentationKind::Arc,
            RepresentationKind::Threshold,
            RepresentationKind::Chain,
        ];
        for (rep, kind) in reps.iter().zip(kinds) {
            let back = parse_representation(&write_representation(rep), kind).unwrap();
            assert_eq!(&back, rep);
        }
        assert_eq!(reps[0].realize().unwrap(), Graph::complete(3));
        assert!(parse_interval("0 0 2\n0 1 3\n").is_err());
        assert!(parse_threshold("0 1\n").is_err());
        assert!(parse_chain("A 0 1\nB 2 3\nN 0 3\nN 1 2\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::path(3);
        let c = EdgeColoring::new(&g, vec![1, 2]).unwrap();
        let dot = emit_dot(&g, Some(&c), None);
        assert!(dot.contains("0 -- 1 [color=\"#1f77b4\", label=\"1\""));
        assert!(dot.contains("1 -- 2 [color=\"#d62728\", label=\"2\""));
        let plain = emit_dot(&g, None, None);
        assert!(plain.contains("0 -- 1;"));
        let h = VertexSet::from_ids(3, [1]).unwrap();
        assert!(emit_dot(&g, None, Some(&h)).contains("1 [style=filled"));
    }
}
