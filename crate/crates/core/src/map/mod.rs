//! Rooted planar maps stored as rotation systems on half-edges.
//!
//! Half-edges are `0..2m`; the opposite of `h` is `h ^ 1`, so edge `e` owns
//! half-edges `2e` and `2e + 1`. `sigma[h]` is the next half-edge
//! counterclockwise around the vertex of `h`.
//!
//! A corner is named by the half-edge that follows it counterclockwise, so
//! the root corner is the sector just before `root`. Walking along `h` keeps
//! the face of corner `h` on the right; the next corner of that face
//! (clockwise around the face) is `sigma[h ^ 1]`.

mod graph;
mod ops;
mod text;

use std::collections::VecDeque;

use thiserror::Error;

pub use ops::{RootEdgeDecomposition, SeriesDecomposition};
pub(crate) use text::parse_map_lines as text_parse_map_lines;
pub use text::{parse_map, serialize_map, ParseMapError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("half-edge {0} is listed more than once")]
    DuplicateHalfEdge(usize),
    #[error("half-edge {0} is missing from the rotations")]
    MissingHalfEdge(usize),
    #[error("half-edge count {0} is odd")]
    OddHalfEdgeCount(usize),
    #[error("root half-edge {0} does not exist")]
    BadRoot(usize),
    #[error("a map with edges needs a root half-edge")]
    MissingRoot,
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("embedding has genus {0}, expected a planar map")]
    NotPlanar(usize),
    #[error("a vertex rotation is empty")]
    EmptyVertex,
    #[error("operation needs a map with at least one edge")]
    NoEdges,
    #[error("map is not nonseparable")]
    Separable,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("index {index} out of range 1..={max}")]
    AugmentOutOfRange { index: usize, max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedMap {
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    root: Option<usize>,
}

/// Counts read off the orbit structure of a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapStats {
    pub edges: usize,
    pub vertices: usize,
    pub faces: usize,
    /// Corners of the root face other than the root corner.
    pub out: usize,
    /// Corners in the root face. The zero-edge map has one.
    pub root_face_corners: usize,
    pub loops: usize,
    pub bridges: usize,
}

impl RootedMap {
    /// The map with one vertex and no edge.
    pub fn vertex() -> Self {
        RootedMap { sigma: Vec::new(), sigma_inv: Vec::new(), root: None }
    }

    /// One edge between two distinct vertices.
    pub fn bridge() -> Self {
        RootedMap::from_rotations(&[vec![0], vec![1]], Some(0)).expect("bridge map")
    }

    /// One loop on a single vertex.
    pub fn loop_map() -> Self {
        RootedMap::from_rotations(&[vec![0, 1]], Some(1)).expect("loop map")
    }

    /// Two parallel edges between two vertices, the smallest nonseparable map.
    pub fn double_edge() -> Self {
        RootedMap::from_rotations(&[vec![0, 2], vec![1, 3]], Some(0)).expect("double edge map")
    }

    /// Builds and validates a map from counterclockwise vertex rotations.
    ///
    /// An empty slice, or a single empty rotation, gives the zero-edge map.
    pub fn from_rotations(rotations: &[Vec<usize>], root: Option<usize>) -> Result<Self, MapError> {
        let n: usize = rotations.iter().map(Vec::len).sum();
        if n == 0 {
            if rotations.len() > 1 {
                return Err(MapError::Disconnected);
            }
            return match root {
                None => Ok(RootedMap::vertex()),
                Some(r) => Err(MapError::BadRoot(r)),
            };
        }
        if n % 2 == 1 {
            return Err(MapError::OddHalfEdgeCount(n));
        }
        let mut sigma = vec![usize::MAX; n];
        for rot in rotations {
            if rot.is_empty() {
                return Err(MapError::EmptyVertex);
            }
            for (k, &h) in rot.iter().enumerate() {
                if h >= n {
                    return Err(MapError::MissingHalfEdge(h.min(n)));
                }
                if sigma[h] != usize::MAX {
                    return Err(MapError::DuplicateHalfEdge(h));
                }
                sigma[h] = rot[(k + 1) % rot.len()];
            }
        }
        if let Some(h) = sigma.iter().position(|&s| s == usize::MAX) {
            return Err(MapError::MissingHalfEdge(h));
        }
        let root = root.ok_or(MapError::MissingRoot)?;
        if root >= n {
            return Err(MapError::BadRoot(root));
        }
        let map = RootedMap::from_sigma_unchecked(sigma, Some(root));
        map.validate()?;
        Ok(map)
    }

    pub(crate) fn from_sigma_unchecked(sigma: Vec<usize>, root: Option<usize>) -> Self {
        let mut sigma_inv = vec![0; sigma.len()];
        for (h, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = h;
        }
        RootedMap { sigma, sigma_inv, root }
    }

    /// Checks connectivity and the Euler relation.
    pub fn validate(&self) -> Result<(), MapError> {
        if self.sigma.is_empty() {
            return Ok(());
        }
        if !self.is_connected() {
            return Err(MapError::Disconnected);
        }
        let v = self.vertex_count();
        let f = self.face_count();
        let e = self.edge_count();
        // V - E + F = 2 - 2g
        let chi = v as i64 - e as i64 + f as i64;
        if chi != 2 {
            return Err(MapError::NotPlanar(((2 - chi) / 2) as usize));
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let n = self.sigma.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(h) = queue.pop_front() {
            for g in [self.sigma[h], h ^ 1] {
                if !seen[g] {
                    seen[g] = true;
                    count += 1;
                    queue.push_back(g);
                }
            }
        }
        count == n
    }

    pub fn half_edge_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn is_vertex_map(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    #[inline]
    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }

    #[inline]
    pub fn sigma_inv(&self, h: usize) -> usize {
        self.sigma_inv[h]
    }

    #[inline]
    pub fn opposite(h: usize) -> usize {
        h ^ 1
    }

    /// Next corner clockwise around the face of corner `h`.
    #[inline]
    pub fn face_next(&self, h: usize) -> usize {
        self.sigma[h ^ 1]
    }

    /// Half-edge of the root edge lying at the root vertex: the edge just
    /// before the root corner in counterclockwise order.
    pub fn root_edge(&self) -> Option<usize> {
        self.root.map(|r| self.sigma_inv[r])
    }

    /// Vertex index of every half-edge, vertices numbered by smallest half-edge.
    pub fn vertex_of(&self) -> Vec<usize> {
        orbit_ids(self.sigma.len(), |h| self.sigma[h])
    }

    pub fn face_of(&self) -> Vec<usize> {
        orbit_ids(self.sigma.len(), |h| self.face_next(h))
    }

    pub fn vertex_count(&self) -> usize {
        if self.sigma.is_empty() {
            1
        } else {
            self.vertex_of().iter().max().map_or(0, |m| m + 1)
        }
    }

    pub fn face_count(&self) -> usize {
        if self.sigma.is_empty() {
            1
        } else {
            self.face_of().iter().max().map_or(0, |m| m + 1)
        }
    }

    /// Counterclockwise rotation of every vertex, each starting at its
    /// smallest half-edge; vertices ordered by that half-edge.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        if self.sigma.is_empty() {
            return vec![Vec::new()];
        }
        let mut seen = vec![false; self.sigma.len()];
        let mut out = Vec::new();
        for start in 0..self.sigma.len() {
            if seen[start] {
                continue;
            }
            let mut rot = Vec::new();
            let mut h = start;
            loop {
                seen[h] = true;
                rot.push(h);
                h = self.sigma[h];
                if h == start {
                    break;
                }
            }
            out.push(rot);
        }
        out
    }

    /// Rotation around the vertex of `h`, starting at `h`.
    pub fn rotation_from(&self, h: usize) -> Vec<usize> {
        let mut rot = vec![h];
        let mut g = self.sigma[h];
        while g != h {
            rot.push(g);
            g = self.sigma[g];
        }
        rot
    }

    /// Corners of the root face in clockwise order, starting at the root corner.
    pub fn root_face(&self) -> Vec<usize> {
        let Some(r) = self.root else { return Vec::new() };
        let mut out = vec![r];
        let mut h = self.face_next(r);
        while h != r {
            out.push(h);
            h = self.face_next(h);
        }
        out
    }

    /// Number of corners of the root face; the zero-edge map has one corner.
    pub fn root_face_corners(&self) -> usize {
        if self.is_vertex_map() {
            1
        } else {
            self.root_face().len()
        }
    }

    /// Largest index accepted by [`RootedMap::augment`]. Equals the root face
    /// corner count, except for the zero-edge map which only admits `0`.
    pub fn augment_bound(&self) -> usize {
        if self.is_vertex_map() {
            0
        } else {
            self.root_face().len()
        }
    }

    pub fn stats(&self) -> MapStats {
        let c = self.root_face_corners();
        MapStats {
            edges: self.edge_count(),
            vertices: self.vertex_count(),
            faces: self.face_count(),
            out: c - 1,
            root_face_corners: c,
            loops: self.loops(),
            bridges: self.bridges(),
        }
    }

    /// Dual map: vertices are the faces of `self`, and the root stays on the
    /// same vertex-face incidence.
    ///
    /// Dual half-edge `h*` crosses the edge of `h` from the face on its right
    /// to the face on its left. Around a face these appear in clockwise
    /// order, so the dual rotation is the inverse face permutation.
    pub fn dual(&self) -> RootedMap {
        if self.is_vertex_map() {
            return RootedMap::vertex();
        }
        let n = self.sigma.len();
        let mut sigma = vec![0; n];
        for h in 0..n {
            // face_next(g) = h  =>  g = sigma_inv(h) ^ 1
            sigma[h] = self.sigma_inv[h] ^ 1;
        }
        let r = self.root.expect("rooted");
        let root = self.sigma_inv[r] ^ 1;
        RootedMap::from_sigma_unchecked(sigma, Some(root))
    }

    pub fn root_vertex_degree(&self) -> usize {
        self.root.map_or(0, |r| self.rotation_from(r).len())
    }

    /// Edges of the root face counted once per side lying on it.
    pub fn root_face_edge_sides(&self) -> usize {
        self.root_face().len()
    }

    /// Distinct edges with at least one side on the root face.
    pub fn root_face_distinct_edges(&self) -> usize {
        let mut edges: Vec<usize> = self.root_face().iter().map(|h| h / 2).collect();
        edges.sort_unstable();
        edges.dedup();
        edges.len()
    }
}

fn orbit_ids(n: usize, next: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut id = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if id[start] != usize::MAX {
            continue;
        }
        let mut h = start;
        while id[h] == usize::MAX {
            id[h] = count;
            h = next(h);
        }
        count += 1;
    }
    id
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_small_maps() {
        let v = RootedMap::vertex().stats();
        assert_eq!((v.edges, v.vertices, v.faces, v.root_face_corners), (0, 1, 1, 1));
        let b = RootedMap::bridge().stats();
        assert_eq!((b.edges, b.vertices, b.faces, b.root_face_corners), (1, 2, 1, 2));
        let l = RootedMap::loop_map().stats();
        assert_eq!((l.edges, l.vertices, l.faces, l.root_face_corners), (1, 1, 2, 1));
        let d = RootedMap::double_edge().stats();
        assert_eq!((d.edges, d.vertices, d.faces, d.root_face_corners), (2, 2, 2, 2));
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(RootedMap::from_rotations(&[vec![0, 0]], Some(0)), Err(MapError::DuplicateHalfEdge(0)));
        assert_eq!(RootedMap::from_rotations(&[vec![0, 1, 2]], Some(0)), Err(MapError::OddHalfEdgeCount(3)));
        assert_eq!(RootedMap::from_rotations(&[vec![0, 1]], Some(5)), Err(MapError::BadRoot(5)));
        assert_eq!(RootedMap::from_rotations(&[vec![0, 1], vec![2, 3]], Some(0)), Err(MapError::Disconnected));
        // two loops interleaved on one vertex: a torus embedding
        assert_eq!(RootedMap::from_rotations(&[vec![0, 2, 1, 3]], Some(0)), Err(MapError::NotPlanar(1)));
    }

    #[test]
    fn dual_swaps_bridge_and_loop() {
        let b = RootedMap::bridge();
        let l = RootedMap::loop_map();
        assert_eq!(b.dual().canonical_form(), l.canonical_form());
        assert_eq!(l.dual().canonical_form(), b.canonical_form());
        assert!(RootedMap::vertex().dual().is_vertex_map());
        let d = RootedMap::double_edge();
        assert_eq!(d.dual().canonical_form(), d.canonical_form());
    }
}
