//! Tree-rooted maps and the rightmost depth-first search spanning tree.

use std::fmt::Write as _;

use thiserror::Error;

use crate::map::{serialize_map, ParseMapError, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("missing `tree` line")]
    MissingTreeLine,
    #[error("bad tree line: {0}")]
    BadTreeLine(String),
    #[error(transparent)]
    Map(#[from] ParseMapError),
}

/// A rooted map with a spanning tree, given as a set of edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRootedMap {
    map: RootedMap,
    in_tree: Vec<bool>,
}

impl TreeRootedMap {
    pub fn new(map: RootedMap, tree_edges: &[usize]) -> Result<Self, TreeError> {
        let mut in_tree = vec![false; map.edge_count()];
        for &e in tree_edges {
            *in_tree.get_mut(e).ok_or(TreeError::NoSuchEdge(e))? = true;
        }
        let t = TreeRootedMap { map, in_tree };
        if !t.is_spanning_tree() {
            return Err(TreeError::NotSpanningTree);
        }
        Ok(t)
    }

    pub(crate) fn new_unchecked(map: RootedMap, in_tree: Vec<bool>) -> Self {
        TreeRootedMap { map, in_tree }
    }

    pub fn map(&self) -> &RootedMap {
        &self.map
    }

    pub fn into_map(self) -> RootedMap {
        self.map
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.in_tree[edge]
    }

    pub fn tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| self.in_tree[e]).collect()
    }

    /// Acyclic and spanning on the underlying multigraph.
    pub fn is_spanning_tree(&self) -> bool {
        let nv = self.map.vertex_count();
        let ends = self.map.edge_ends();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut joined = 0;
        for (e, &(u, v)) in ends.iter().enumerate() {
            if !self.in_tree[e] {
                continue;
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
            joined += 1;
        }
        joined + 1 == nv
    }

    /// Tree-rooted dual: the dual map with the duals of the non-tree edges.
    pub fn dual(&self) -> TreeRootedMap {
        // `RootedMap::dual` keeps edge ids, so edge e of the dual crosses edge e.
        TreeRootedMap { map: self.map.dual(), in_tree: self.in_tree.iter().map(|b| !b).collect() }
    }

    /// Equality up to root-preserving isomorphism carrying tree to tree.
    pub fn canonical_form(&self) -> Vec<u8> {
        let mut out = self.map.canonical_form();
        // mark tree edges by the canonical position of their half-edges
        let c = canonical_edge_order(&self.map);
        out.push(0xff);
        out.extend(c.iter().map(|&e| u8::from(self.in_tree[e])));
        out
    }
}

/// Original edge id of every canonical edge index.
fn canonical_edge_order(map: &RootedMap) -> Vec<usize> {
    let Some(root) = map.root() else { return Vec::new() };
    let n = map.half_edge_count();
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let mut visit = |h: usize, seen: &mut Vec<bool>, queue: &mut std::collections::VecDeque<usize>| {
        if !seen[h] {
            seen[h] = true;
            seen[h ^ 1] = true;
            order.push(h / 2);
            queue.push_back(h);
            queue.push_back(h ^ 1);
        }
    };
    visit(root, &mut seen, &mut queue);
    while let Some(h) = queue.pop_front() {
        visit(map.sigma(h), &mut seen, &mut queue);
    }
    order
}

/// Trace of the corner exploration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DfsTrace {
    /// Active corners in order, as the half-edge following each corner.
    pub corners: Vec<usize>,
    /// Number of times each edge was the vertex-following edge.
    pub edge_visits: Vec<usize>,
}

/// Rightmost depth-first search spanning tree.
pub fn rightmost_dfs_tree(map: &RootedMap) -> TreeRootedMap {
    explore(map, None)
}

/// Same as [`rightmost_dfs_tree`], also recording the exploration.
pub fn rightmost_dfs_tree_traced(map: &RootedMap) -> (TreeRootedMap, DfsTrace) {
    let mut trace = DfsTrace { corners: Vec::new(), edge_visits: vec![0; map.edge_count()] };
    let t = explore(map, Some(&mut trace));
    (t, trace)
}

fn explore(map: &RootedMap, mut trace: Option<&mut DfsTrace>) -> TreeRootedMap {
    let m = map.edge_count();
    let mut in_tree = vec![false; m];
    let Some(root) = map.root() else {
        return TreeRootedMap::new_unchecked(map.clone(), in_tree);
    };
    let vof = map.vertex_of();
    let mut vertex_in_tree = vec![false; map.vertex_count()];
    let mut visited = vec![false; m];
    vertex_in_tree[vof[root]] = true;
    // the active corner is named by its vertex-following half-edge
    let mut c = root;
    loop {
        let e = c / 2;
        if let Some(t) = trace.as_deref_mut() {
            t.corners.push(c);
            t.edge_visits[e] += 1;
        }
        // the face-following corner lies at the far end of the same edge
        let across = map.sigma(c ^ 1);
        if !visited[e] {
            visited[e] = true;
            if !vertex_in_tree[vof[c ^ 1]] {
                in_tree[e] = true;
                vertex_in_tree[vof[c ^ 1]] = true;
                c = across;
            } else {
                c = map.sigma(c);
            }
        } else if in_tree[e] {
            c = across;
        } else {
            c = map.sigma(c);
        }
        if c == root {
            break;
        }
    }
    TreeRootedMap::new_unchecked(map.clone(), in_tree)
}

/// Every spanning tree of the map, as tree-rooted maps, in lexicographic
/// order of their edge sets. Exponential in the number of edges.
pub fn all_spanning_trees(map: &RootedMap) -> Vec<TreeRootedMap> {
    let k = map.vertex_count() - 1;
    let m = map.edge_count();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(map: &RootedMap, start: usize, k: usize, m: usize, chosen: &mut Vec<usize>, out: &mut Vec<TreeRootedMap>) {
        if chosen.len() == k {
            if let Ok(t) = TreeRootedMap::new(map.clone(), chosen) {
                out.push(t);
            }
            return;
        }
        for e in start..m {
            if m - e < k - chosen.len() {
                break;
            }
            chosen.push(e);
            rec(map, e + 1, k, m, chosen, out);
            chosen.pop();
        }
    }
    rec(map, 0, k, m, &mut chosen, &mut out);
    out
}

pub fn serialize_tree(t: &TreeRootedMap) -> String {
    let mut out = serialize_map(t.map());
    out.push_str("tree");
    for e in t.tree_edges() {
        write!(out, " {e}").unwrap();
    }
    out.push('\n');
    out
}

pub fn parse_tree(text: &str) -> Result<TreeRootedMap, TreeError> {
    let (map, rest) = crate::map::text_parse_map_lines(text)?;
    let (_, line) = rest.first().ok_or(TreeError::MissingTreeLine)?;
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("tree") {
        return Err(TreeError::BadTreeLine(line.to_string()));
    }
    let edges = tokens
        .map(|t| t.parse::<usize>().map_err(|_| TreeError::BadTreeLine(line.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    TreeRootedMap::new(map, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees() {
        assert_eq!(rightmost_dfs_tree(&RootedMap::bridge()).tree_edges(), vec![0]);
        assert!(rightmost_dfs_tree(&RootedMap::loop_map()).tree_edges().is_empty());
        assert!(rightmost_dfs_tree(&RootedMap::vertex()).tree_edges().is_empty());
        let d = rightmost_dfs_tree(&RootedMap::double_edge());
        assert_eq!(d.tree_edges().len(), 1);
        assert!(d.is_spanning_tree());
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(all_spanning_trees(&RootedMap::vertex()).len(), 1);
        assert_eq!(all_spanning_trees(&RootedMap::loop_map()).len(), 1);
        assert_eq!(all_spanning_trees(&RootedMap::double_edge()).len(), 2);
        let rdfs = rightmost_dfs_tree(&RootedMap::double_edge());
        assert!(all_spanning_trees(&RootedMap::double_edge()).contains(&rdfs));
    }

    #[test]
    fn trace_visits_each_edge_twice() {
        let (_, trace) = rightmost_dfs_tree_traced(&RootedMap::double_edge());
        assert_eq!(trace.edge_visits, vec![2, 2]);
        assert_eq!(trace.corners.len(), 4);
    }

    #[test]
    fn dual_tree_small() {
        let b = rightmost_dfs_tree(&RootedMap::bridge());
        let l = b.dual();
        assert!(l.map().is_isomorphic(&RootedMap::loop_map()));
        assert!(l.tree_edges().is_empty());
        assert_eq!(l.dual().tree_edges(), vec![0]);
        let d = rightmost_dfs_tree(&RootedMap::double_edge());
        let dd = d.dual();
        assert!(dd.is_spanning_tree());
        assert_eq!(dd.tree_edges().len(), 1);
        assert_ne!(dd.tree_edges(), d.tree_edges());
    }

    #[test]
    fn tree_text_round_trip() {
        let d = rightmost_dfs_tree(&RootedMap::double_edge());
        let text = serialize_tree(&d);
        assert_eq!(parse_tree(&text).unwrap(), d);
        assert!(parse_tree(&serialize_map(d.map())).is_err());
        let bad = text.replace(&format!("tree {}", d.tree_edges()[0]), "tree 0 1");
        assert_eq!(parse_tree(&bad), Err(TreeError::NotSpanningTree));
    }
}
