//! Canonical labelling and the line-oriented map format.
//!
//! ```text
//! planarmap v1
//! halfedges 4
//! root 0
//! vertex 0 2
//! vertex 1 3
//! ```

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use super::{MapError, RootedMap};

const HEADER: &str = "planarmap v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseMapError {
    #[error("line {line}: expected {expected}")]
    Syntax { line: usize, expected: &'static str },
    #[error("line {line}: bad integer {token:?}")]
    Integer { line: usize, token: String },
    #[error("half-edge count is {declared} but {listed} half-edges are listed")]
    CountMismatch { declared: usize, listed: usize },
    #[error("invalid map: {0}")]
    Invalid(#[from] MapError),
}

impl RootedMap {
    /// Relabels half-edges in breadth-first order from the root, so that two
    /// maps are isomorphic (root preserved) iff their canonical maps are equal.
    pub fn canonical(&self) -> RootedMap {
        let Some(root) = self.root else {
            return RootedMap::vertex();
        };
        let n = self.half_edge_count();
        let mut label = vec![usize::MAX; n];
        let mut next_edge = 0;
        let mut queue = VecDeque::new();
        let mut assign = |h: usize, label: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
            if label[h] == usize::MAX {
                label[h] = 2 * next_edge;
                label[h ^ 1] = 2 * next_edge + 1;
                next_edge += 1;
                queue.push_back(h);
                queue.push_back(h ^ 1);
            }
        };
        assign(root, &mut label, &mut queue);
        while let Some(h) = queue.pop_front() {
            assign(self.sigma(h), &mut label, &mut queue);
        }
        let mut sigma = vec![0; n];
        for h in 0..n {
            sigma[label[h]] = label[self.sigma(h)];
        }
        RootedMap::from_sigma_unchecked(sigma, Some(0))
    }

    /// Byte string identifying the map up to root-preserving isomorphism.
    pub fn canonical_form(&self) -> Vec<u8> {
        let c = self.canonical();
        let mut out = Vec::with_capacity(4 * c.half_edge_count());
        for h in 0..c.half_edge_count() {
            out.extend_from_slice(&(c.sigma(h) as u32).to_le_bytes());
        }
        out
    }

    pub fn is_isomorphic(&self, other: &RootedMap) -> bool {
        self.half_edge_count() == other.half_edge_count() && self.canonical_form() == other.canonical_form()
    }
}

pub fn serialize_map(map: &RootedMap) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "halfedges {}", map.half_edge_count()).unwrap();
    match map.root() {
        Some(r) => writeln!(out, "root {r}").unwrap(),
        None => writeln!(out, "root -").unwrap(),
    }
    for rot in map.rotations() {
        out.push_str("vertex");
        for h in rot {
            write!(out, " {h}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_usize(token: &str, line: usize) -> Result<usize, ParseMapError> {
    token.parse().map_err(|_| ParseMapError::Integer { line, token: token.to_string() })
}

/// Parses the map format. Lines after the vertex lines starting with another
/// keyword are ignored by this function (see the tree format).
pub fn parse_map(text: &str) -> Result<RootedMap, ParseMapError> {
    parse_map_lines(text).map(|(m, _)| m)
}

/// Parses a map and returns it with the remaining unparsed lines.
pub(crate) fn parse_map_lines(text: &str) -> Result<(RootedMap, Vec<(usize, &str)>), ParseMapError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (ln, first) = lines.next().ok_or(ParseMapError::Syntax { line: 1, expected: HEADER })?;
    if first != HEADER {
        return Err(ParseMapError::Syntax { line: ln, expected: HEADER });
    }
    let (ln, he) = lines.next().ok_or(ParseMapError::Syntax { line: ln + 1, expected: "halfedges <count>" })?;
    let declared = match he.split_whitespace().collect::<Vec<_>>()[..] {
        ["halfedges", n] => parse_usize(n, ln)?,
        _ => return Err(ParseMapError::Syntax { line: ln, expected: "halfedges <count>" }),
    };
    let (ln, rt) = lines.next().ok_or(ParseMapError::Syntax { line: ln + 1, expected: "root <h> | root -" })?;
    let root = match rt.split_whitespace().collect::<Vec<_>>()[..] {
        ["root", "-"] => None,
        ["root", h] => Some(parse_usize(h, ln)?),
        _ => return Err(ParseMapError::Syntax { line: ln, expected: "root <h> | root -" }),
    };
    let mut rotations = Vec::new();
    let mut rest = Vec::new();
    for (ln, line) in lines {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("vertex") if rest.is_empty() => {
                rotations.push(tokens.map(|t| parse_usize(t, ln)).collect::<Result<Vec<_>, _>>()?);
            }
            _ => rest.push((ln, line)),
        }
    }
    if rotations.is_empty() {
        return Err(ParseMapError::Syntax { line: ln + 1, expected: "vertex ..." });
    }
    let listed: usize = rotations.iter().map(Vec::len).sum();
    if listed != declared {
        return Err(ParseMapError::CountMismatch { declared, listed });
    }
    Ok((RootedMap::from_rotations(&rotations, root)?, rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_double_edges_agree() {
        let a = RootedMap::from_rotations(&[vec![0, 2], vec![1, 3]], Some(0)).unwrap();
        let b = RootedMap::from_rotations(&[vec![3, 1], vec![2, 0]], Some(1)).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(RootedMap::bridge().canonical_form(), RootedMap::loop_map().canonical_form());
    }

    #[test]
    fn serialize_parse_small() {
        for m in [RootedMap::vertex(), RootedMap::bridge(), RootedMap::loop_map(), RootedMap::double_edge()] {
            let text = serialize_map(&m);
            assert_eq!(parse_map(&text).unwrap(), m);
        }
        assert_eq!(serialize_map(&RootedMap::vertex()), "planarmap v1\nhalfedges 0\nroot -\nvertex\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_map("planarmap v2\n"), Err(ParseMapError::Syntax { line: 1, .. })));
        assert!(matches!(
            parse_map("planarmap v1\nhalfedges 2\nroot 0\nvertex 0 x\n"),
            Err(ParseMapError::Integer { line: 4, .. })
        ));
        assert!(matches!(
            parse_map("planarmap v1\nhalfedges 4\nroot 0\nvertex 0 1\n"),
            Err(ParseMapError::CountMismatch { declared: 4, listed: 2 })
        ));
        assert!(matches!(
            parse_map("planarmap v1\nhalfedges 4\nroot 0\nvertex 0 1\nvertex 2 3\n"),
            Err(ParseMapError::Invalid(MapError::Disconnected))
        ));
    }
}
