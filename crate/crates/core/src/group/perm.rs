//! Permutations of `{0, .., n-1}` stored as image vectors.
//!
//! Products follow the right-action convention: `compose(a, b)` applies `a`
//! first and then `b`. Cycle notation in text is 1-based.

use crate::error::{Error, Result};

pub type Perm = Vec<u32>;

pub fn identity(degree: usize) -> Perm {
    (0..degree as u32).collect()
}

pub fn is_bijection(p: &[u32]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        let x = x as usize;
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// `x -> b(a(x))`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn invert(a: &[u32]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Parses disjoint-cycle notation such as `(1 2 3)(4 5)` into a permutation
/// of the given degree. The empty string and `()` denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let mut perm = identity(degree);
    let mut touched = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {text:?}")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
        let body = &body_start[..close];
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        for &pt in &points {
            if pt == 0 || pt > degree {
                return Err(Error::InvalidPermutation(format!("point {pt} outside 1..={degree}")));
            }
            if touched[pt - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "point {pt} repeated; cycles must be disjoint"
                )));
            }
            touched[pt - 1] = true;
        }
        for (i, &pt) in points.iter().enumerate() {
            let next = points[(i + 1) % points.len()];
            perm[pt - 1] = (next - 1) as u32;
        }
        rest = body_start[close + 1..].trim_start();
    }
    Ok(perm)
}

/// Disjoint-cycle notation, 1-based, fixed points omitted; `()` for the identity.
pub fn format_cycles(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
