use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

/// Parses a graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits in the final byte are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, payload) = match bytes {
        [] => return Err(GraphError::Graph6Header("empty input".into())),
        [b'~', b'~', ..] => {
            return Err(GraphError::Graph6Header(
                "36-bit vertex counts are not supported".into(),
            ))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6Header("truncated 18-bit vertex count".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = n << 6 | sextet(b)? as usize;
            }
            if n <= 62 {
                return Err(GraphError::Graph6Header(format!(
                    "vertex count {n} must use the one-byte form"
                )));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => {
            if !(63..=125).contains(b) {
                return Err(GraphError::Graph6Header(format!("byte {b:#04x} is not a vertex count")));
            }
            ((b - 63) as usize, rest)
        }
    };
    if n > MAX_VERTICES {
        return Err(GraphError::Graph6Order(n));
    }
    if n == 0 {
        return Err(GraphError::VertexCount(0));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if payload.len() != expected {
        return Err(GraphError::Graph6Payload {
            expected,
            found: payload.len(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let s = sextet(payload[k / 6])?;
            if s >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn sextet(b: u8) -> Result<u8, GraphError> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(GraphError::Graph6Byte(b))
    }
}

/// Encodes a graph in graph6 (no header), upper triangle column by column.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
