//! Map constructors and the root-edge decompositions that invert them.

use std::collections::{BTreeMap, VecDeque};

use super::graph::cut_vertices_of;
use super::{MapError, RootedMap};

/// Result of deleting the root edge of a map with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootEdgeDecomposition {
    /// The root edge was a bridge: `M = M1 ⊕ M2`.
    Disconnecting(RootedMap, RootedMap),
    /// `M = augment(M1, i)`.
    Augmented(RootedMap, usize),
}

/// Block-chain decomposition of a nonseparable map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesDecomposition {
    /// The two-edge map.
    DoubleEdge,
    /// `M = ns_augment(M1, i)`.
    Augmented(RootedMap, usize),
    /// `M = D ⊙ M2`.
    HeadChain(RootedMap),
    /// `M = ns_augment(M1, i) ⊙ M2`.
    AugmentedChain(RootedMap, usize, RootedMap),
}

/// Builds a map from rotations whose labels are arbitrary half-edge ids,
/// where `2k` and `2k + 1` are opposite. Labels are compacted keeping the
/// relative order of edges.
fn build(rotations: Vec<Vec<usize>>, root: Option<usize>) -> RootedMap {
    let mut edges: Vec<usize> = rotations.iter().flatten().map(|h| h / 2).collect();
    edges.sort_unstable();
    edges.dedup();
    if edges.is_empty() {
        return RootedMap::vertex();
    }
    let rank: BTreeMap<usize, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let relabel = |h: usize| 2 * rank[&(h / 2)] + (h & 1);
    let n = 2 * edges.len();
    let mut sigma = vec![usize::MAX; n];
    for rot in &rotations {
        for (k, &h) in rot.iter().enumerate() {
            sigma[relabel(h)] = relabel(rot[(k + 1) % rot.len()]);
        }
    }
    debug_assert!(sigma.iter().all(|&s| s != usize::MAX), "unpaired half-edge");
    let map = RootedMap::from_sigma_unchecked(sigma, root.map(relabel));
    debug_assert_eq!(map.validate(), Ok(()));
    map
}

/// Rotation starting at `h`, with `skip` removed.
fn arc_after(map: &RootedMap, h: usize, skip: &[usize]) -> Vec<usize> {
    map.rotation_from(h).into_iter().filter(|g| !skip.contains(g)).collect()
}

/// Rotations of every vertex not containing any half-edge in `exclude`,
/// shifted by `offset`.
fn other_rotations(map: &RootedMap, exclude: &[usize], offset: usize) -> Vec<Vec<usize>> {
    map.rotations()
        .into_iter()
        .filter(|rot| !rot.iter().any(|h| exclude.contains(h)))
        .map(|rot| rot.into_iter().map(|h| h + offset).collect())
        .collect()
}

impl RootedMap {
    /// Joins the root corner of `self` to the root corner of `other` by a new
    /// edge, which becomes the root edge. The root stays at the root corner
    /// of `self`.
    pub fn oplus(&self, other: &RootedMap) -> RootedMap {
        let off = self.half_edge_count();
        let x = off + other.half_edge_count();
        let y = x + 1;
        let mut rotations = Vec::new();
        let root = match self.root {
            None => {
                rotations.push(vec![x]);
                x
            }
            Some(r) => {
                let mut rot = self.rotation_from(r);
                rot.push(x);
                rotations.push(rot);
                rotations.extend(other_rotations(self, &[r], 0));
                r
            }
        };
        match other.root {
            None => rotations.push(vec![y]),
            Some(r2) => {
                let mut rot = vec![y];
                rot.extend(other.rotation_from(r2).into_iter().map(|h| h + off));
                rotations.push(rot);
                rotations.extend(other_rotations(other, &[r2], off));
            }
        }
        build(rotations, Some(root))
    }

    /// Adds an edge from the root corner to corner `i` of the root face
    /// (clockwise from the root corner, which is corner `0`); the new edge
    /// becomes the root edge. `i = 0` adds a loop enclosing the old root
    /// corner, `i = c` a loop just after it.
    pub fn augment(&self, i: usize) -> Result<RootedMap, MapError> {
        let max = self.augment_bound();
        if i > max {
            return Err(MapError::IndexOutOfRange { index: i, max });
        }
        let Some(r) = self.root else {
            return Ok(RootedMap::loop_map());
        };
        let n = self.half_edge_count();
        let (x, y) = (n, n + 1);
        let mut sigma = self.sigma.clone();
        sigma.extend([usize::MAX, usize::MAX]);
        let mut inv = self.sigma_inv.clone();
        inv.extend([usize::MAX, usize::MAX]);
        let mut insert_before = |h: usize, t: usize| {
            let p = inv[t];
            sigma[p] = h;
            inv[h] = p;
            sigma[h] = t;
            inv[t] = h;
        };
        let root = if i == 0 {
            insert_before(y, r);
            insert_before(x, y);
            y
        } else if i == max {
            insert_before(x, r);
            insert_before(y, x);
            r
        } else {
            let g = self.root_face()[i];
            insert_before(y, g);
            insert_before(x, r);
            r
        };
        Ok(RootedMap::from_sigma_unchecked(sigma, Some(root)))
    }

    /// Deletes the root edge and returns the constructor arguments that
    /// rebuild `self`.
    pub fn root_edge_decompose(&self) -> Result<RootEdgeDecomposition, MapError> {
        let r = self.root.ok_or(MapError::NoEdges)?;
        let x = self.sigma_inv[r];
        let y = x ^ 1;
        let vof = self.vertex_of();
        let (vx, vy) = (vof[x], vof[y]);
        let remaining = |h: usize| h != x && h != y;

        if vx != vy && self.bridge_edges().contains(&(x / 2)) {
            // root side
            let m1 = if r == x { RootedMap::vertex() } else { self.extract_component(r, &[x, y], r) };
            let m2 = if self.sigma[y] == y {
                RootedMap::vertex()
            } else {
                let r2 = self.sigma[y];
                self.extract_component(r2, &[x, y], r2)
            };
            return Ok(RootEdgeDecomposition::Disconnecting(m1, m2));
        }

        let mut root1 = if r == y { self.sigma[y] } else { r };
        while !remaining(root1) && root1 != r {
            root1 = self.sigma[root1];
        }
        if !remaining(root1) {
            // the root edge was the only edge
            return Ok(RootEdgeDecomposition::Augmented(RootedMap::vertex(), 0));
        }
        let m1 = self.extract_component(root1, &[x, y], root1);
        if r == y {
            return Ok(RootEdgeDecomposition::Augmented(m1, 0));
        }
        let g = self.sigma[y];
        if g == x {
            let c1 = m1.augment_bound();
            return Ok(RootEdgeDecomposition::Augmented(m1, c1));
        }
        // Locate g among the root face corners of M1 through the same
        // relabelling that extract_component applied.
        let i = self.corner_index_after_delete(&m1, root1, g, &[x, y]);
        Ok(RootEdgeDecomposition::Augmented(m1, i))
    }

    /// Connected component of half-edge `seed` once `deleted` are removed,
    /// rooted at `root`.
    fn extract_component(&self, seed: usize, deleted: &[usize], root: usize) -> RootedMap {
        let comp = self.component_half_edges(seed, deleted);
        let rotations = self.rotations_without(deleted, &comp);
        build(rotations, Some(root))
    }

    fn component_half_edges(&self, seed: usize, deleted: &[usize]) -> Vec<bool> {
        let n = self.half_edge_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([seed]);
        seen[seed] = true;
        while let Some(h) = queue.pop_front() {
            let mut nexts = vec![h ^ 1];
            // next surviving half-edge around the vertex
            let mut s = self.sigma[h];
            while deleted.contains(&s) {
                s = self.sigma[s];
            }
            nexts.push(s);
            for g in nexts {
                if !deleted.contains(&g) && !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
            }
        }
        seen
    }

    fn rotations_without(&self, deleted: &[usize], keep: &[bool]) -> Vec<Vec<usize>> {
        self.rotations()
            .into_iter()
            .map(|rot| rot.into_iter().filter(|h| keep[*h] && !deleted.contains(h)).collect::<Vec<_>>())
            .filter(|rot| !rot.is_empty())
            .collect()
    }

    fn corner_index_after_delete(&self, m1: &RootedMap, root1: usize, g: usize, deleted: &[usize]) -> usize {
        // relabelling used by `build`: ranks of surviving edges
        let comp = self.component_half_edges(root1, deleted);
        let mut edges: Vec<usize> = (0..self.half_edge_count()).filter(|&h| comp[h]).map(|h| h / 2).collect();
        edges.dedup();
        let relabel = |h: usize| 2 * edges.binary_search(&(h / 2)).expect("surviving edge") + (h & 1);
        let target = relabel(g);
        m1.root_face().iter().position(|&h| h == target).expect("reattachment corner lies on the root face")
    }

    /// Concatenation of nonseparable maps. With root edges `u1 -> v1` and
    /// `u2 -> v2` (heads at the root vertices), identifies `u1` with `v2`,
    /// deletes both root edges and adds the new root edge `u2 -> v1`.
    pub fn ns_odot(&self, other: &RootedMap) -> Result<RootedMap, MapError> {
        if !self.is_nonseparable() || !other.is_nonseparable() {
            return Err(MapError::Separable);
        }
        let off = self.half_edge_count();
        let r1 = self.root.expect("rooted");
        let x1 = self.sigma_inv[r1];
        let y1 = x1 ^ 1;
        let r2 = other.root.expect("rooted");
        let x2 = other.sigma_inv[r2];
        let y2 = x2 ^ 1;

        let mut rotations = Vec::new();
        // v1 keeps x1, which is now paired with y1 placed at u2
        rotations.push(self.rotation_from(r1));
        let mut merged = arc_after(self, self.sigma[y1], &[y1]);
        merged.extend(arc_after(other, other.sigma[x2], &[x2]).into_iter().map(|h| h + off));
        rotations.push(merged);
        rotations.push(other.rotation_from(y2).into_iter().map(|h| if h == y2 { y1 } else { h + off }).collect());
        rotations.extend(other_rotations(self, &[r1, y1], 0));
        rotations.extend(other_rotations(other, &[x2, y2], off));
        Ok(build(rotations, Some(r1)))
    }

    /// Augmentation restricted to nonseparable maps: joins the root corner to
    /// the `i`-th non-root corner of the root face, `1 <= i <= out`.
    pub fn ns_augment(&self, i: usize) -> Result<RootedMap, MapError> {
        if !self.is_nonseparable() {
            return Err(MapError::Separable);
        }
        let out = self.root_face().len() - 1;
        if i == 0 || i > out {
            return Err(MapError::AugmentOutOfRange { index: i, max: out });
        }
        self.augment(i)
    }

    /// Deletes the root edge of a nonseparable map and splits the remaining
    /// chain of blocks at the cut vertex nearest to the root vertex.
    pub fn series_decompose(&self) -> Result<SeriesDecomposition, MapError> {
        if !self.is_nonseparable() {
            return Err(MapError::Separable);
        }
        if self.edge_count() == 2 {
            return Ok(SeriesDecomposition::DoubleEdge);
        }
        let r = self.root.expect("rooted");
        let x = self.sigma_inv[r];
        let y = x ^ 1;
        let vof = self.vertex_of();
        let (v1, u) = (vof[x], vof[y]);
        let nv = self.vertex_count();

        let ends: Vec<(usize, usize)> =
            (0..self.edge_count()).filter(|&e| e != x / 2).map(|e| (vof[2 * e], vof[2 * e + 1])).collect();
        let mut adj = vec![Vec::new(); nv];
        for &(a, b) in &ends {
            adj[a].push(b);
            adj[b].push(a);
        }
        let reach = |from: usize, blocked: usize| -> Vec<bool> {
            let mut seen = vec![false; nv];
            seen[blocked] = true;
            let mut queue = VecDeque::from([from]);
            seen[from] = true;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            seen[blocked] = false;
            seen
        };
        let separating: Vec<usize> =
            cut_vertices_of(nv, &ends).into_iter().filter(|&w| w != v1 && w != u && !reach(v1, w)[u]).collect();

        if separating.is_empty() {
            return match self.root_edge_decompose()? {
                RootEdgeDecomposition::Augmented(m1, i) => Ok(SeriesDecomposition::Augmented(m1, i)),
                RootEdgeDecomposition::Disconnecting(..) => unreachable!("nonseparable root edge is not a bridge"),
            };
        }

        // the separating vertex closest to v1
        let (w, side) = separating
            .iter()
            .map(|&w| (w, reach(v1, w)))
            .find(|(_, side)| separating.iter().all(|&s| !side[s]))
            .expect("block chain has a first cut vertex");

        // half-edges at w split into the arc towards v1 and the rest
        let at_w: Vec<usize> = {
            let start = (0..self.half_edge_count()).find(|&h| vof[h] == w).unwrap();
            self.rotation_from(start)
        };
        let towards_root = |h: usize| side[vof[h ^ 1]];
        let k = at_w.len();
        let first_a =
            (0..k).find(|&j| towards_root(at_w[j]) && !towards_root(at_w[(j + k - 1) % k])).expect("arc towards root");
        let rotated: Vec<usize> = (0..k).map(|j| at_w[(first_a + j) % k]).collect();
        let a_len = rotated.iter().take_while(|&&h| towards_root(h)).count();
        debug_assert!(rotated[a_len..].iter().all(|&h| !towards_root(h)), "arcs are contiguous");
        let (arc_a, arc_r) = rotated.split_at(a_len);

        let mut rot1 = Vec::new();
        let mut rot2 = Vec::new();
        for rot in self.rotations() {
            let vertex = vof[rot[0]];
            if vertex == w {
                continue;
            }
            if side[vertex] {
                rot1.push(rot);
            } else {
                rot2.push(rot);
            }
        }
        let mut w1 = arc_a.to_vec();
        w1.push(y);
        rot1.push(w1);
        let mut w2 = arc_r.to_vec();
        w2.push(x);
        rot2.push(w2);
        let m1 = build(rot1, Some(r));
        let m2 = build(rot2, Some(arc_r[0]));

        if m1.edge_count() == 2 {
            return Ok(SeriesDecomposition::HeadChain(m2));
        }
        match m1.root_edge_decompose()? {
            RootEdgeDecomposition::Augmented(m, i) => Ok(SeriesDecomposition::AugmentedChain(m, i, m2)),
            RootEdgeDecomposition::Disconnecting(..) => unreachable!("nonseparable root edge is not a bridge"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oplus_of_vertices_is_bridge() {
        let v = RootedMap::vertex();
        assert_eq!(v.oplus(&v).canonical_form(), RootedMap::bridge().canonical_form());
    }

    #[test]
    fn augment_vertex_is_loop() {
        let m = RootedMap::vertex().augment(0).unwrap();
        assert_eq!(m.canonical_form(), RootedMap::loop_map().canonical_form());
        assert!(RootedMap::vertex().augment(1).is_err());
    }

    #[test]
    fn decompose_small() {
        assert_eq!(
            RootedMap::bridge().root_edge_decompose().unwrap(),
            RootEdgeDecomposition::Disconnecting(RootedMap::vertex(), RootedMap::vertex())
        );
        assert_eq!(
            RootedMap::loop_map().root_edge_decompose().unwrap(),
            RootEdgeDecomposition::Augmented(RootedMap::vertex(), 0)
        );
        assert_eq!(RootedMap::vertex().root_edge_decompose(), Err(MapError::NoEdges));
    }

    #[test]
    fn augment_corner_counts() {
        let b = RootedMap::bridge();
        for i in 0..=b.augment_bound() {
            let m = b.augment(i).unwrap();
            assert_eq!(m.root_face_corners(), i + 1);
            assert_eq!(m.edge_count(), 2);
            assert_eq!(m.validate(), Ok(()));
        }
    }

    #[test]
    fn ns_ops_on_double_edge() {
        let d = RootedMap::double_edge();
        let c = d.ns_odot(&d).unwrap();
        assert!(c.is_nonseparable());
        assert_eq!(c.edge_count(), 3);
        assert_eq!(c.stats().out, 2);
        match c.series_decompose().unwrap() {
            SeriesDecomposition::HeadChain(m2) => assert!(m2.is_isomorphic(&d)),
            other => panic!("unexpected {other:?}"),
        }
        let a = d.ns_augment(1).unwrap();
        assert!(a.is_nonseparable());
        assert_eq!(a.stats().out, 1);
        assert!(d.ns_augment(2).is_err());
        assert!(RootedMap::bridge().ns_odot(&d).is_err());
        assert_eq!(d.series_decompose().unwrap(), SeriesDecomposition::DoubleEdge);
    }
}
