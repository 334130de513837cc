//! Graph arguments: graph6, `@path` edge-list files, or constructor specs.

use std::fs;

use anyhow::{bail, Context, Result};
use oddcycle::graph::parse_edge_list;
use oddcycle::{extremal_graph, saturated_extremal_graph, Graph};

fn number(tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.with_context(|| format!("missing {what}"))?;
    tok.parse()
        .with_context(|| format!("{what} must be a non-negative integer, got {tok:?}"))
}

fn constructor(spec: &str) -> Result<Graph> {
    let mut toks = spec.split_whitespace();
    let kind = toks.next().context("empty graph spec")?;
    let g = match kind {
        "F" => extremal_graph(number(toks.next(), "n")?, number(toks.next(), "m")?)?,
        "H" => saturated_extremal_graph(number(toks.next(), "n")?)?,
        "K1" => Graph::star(number(toks.next(), "leaf count")?)?,
        "K" => Graph::complete(number(toks.next(), "order")?)?,
        "C" => Graph::cycle(number(toks.next(), "length")?)?,
        "P" => Graph::path(number(toks.next(), "order")?)?,
        "E" => Graph::empty(number(toks.next(), "order")?)?,
        other => bail!("unknown constructor {other:?}"),
    };
    if let Some(extra) = toks.next() {
        bail!("unexpected {extra:?} in graph spec {spec:?}");
    }
    Ok(g)
}

fn single(text: &str) -> Result<Graph> {
    let text = text.trim();
    // a lone `@` is the graph6 string of K1
    if let Some(path) = text.strip_prefix('@').filter(|p| !p.is_empty()) {
        let body = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return parse_edge_list(&body).with_context(|| format!("parsing {path}"));
    }
    if text.contains(char::is_whitespace) {
        return constructor(text);
    }
    if text.starts_with(|c: char| c.is_ascii_uppercase())
        && text.len() > 1
        && text[1..].chars().all(|c| c.is_ascii_digit())
    {
        // `K3`-style shorthand is not graph6; ask for the spaced form
        bail!(
            "{text:?} looks like a constructor; write it with a space, e.g. \"{} {}\"",
            &text[..1],
            &text[1..]
        );
    }
    Graph::from_graph6(text).with_context(|| format!("parsing graph6 {text:?}"))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut parts = text.split('+');
    let mut g = single(parts.next().unwrap_or(""))?;
    for p in parts {
        g = g.disjoint_union(&single(p)?)?;
    }
    Ok(g)
}
