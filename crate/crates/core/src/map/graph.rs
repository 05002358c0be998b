//! Multigraph analysis of the underlying graph: loops, bridges, cut vertices.

use super::RootedMap;

/// Low-link data of an iterative DFS over a multigraph given by edge ends.
/// Parallel edges are told apart by edge id, loops are ignored.
struct LowLink {
    bridges: Vec<usize>,
    cut_vertices: Vec<usize>,
}

fn low_link(vertex_count: usize, ends: &[(usize, usize)]) -> LowLink {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
    for (e, &(u, v)) in ends.iter().enumerate() {
        if u != v {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }
    let mut ord = vec![usize::MAX; vertex_count];
    let mut low = vec![0; vertex_count];
    let mut is_cut = vec![false; vertex_count];
    let mut bridges = Vec::new();
    let mut counter = 0;
    for start in 0..vertex_count {
        if ord[start] != usize::MAX {
            continue;
        }
        ord[start] = counter;
        low[start] = counter;
        counter += 1;
        let mut root_children = 0;
        // (vertex, edge used to enter, next adjacency index)
        let mut stack = vec![(start, usize::MAX, 0usize)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, in_edge, next) = stack[top];
            if next < adj[v].len() {
                let (w, e) = adj[v][next];
                stack[top].2 += 1;
                if e == in_edge {
                    continue;
                }
                if ord[w] == usize::MAX {
                    ord[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    if v == start {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(ord[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > ord[p] {
                        bridges.push(in_edge);
                    }
                    if p != start && low[v] >= ord[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[start] = true;
        }
    }
    bridges.sort_unstable();
    LowLink { bridges, cut_vertices: (0..vertex_count).filter(|&v| is_cut[v]).collect() }
}

impl RootedMap {
    /// Endpoints `(vertex of 2e, vertex of 2e+1)` of every edge `e`.
    pub fn edge_ends(&self) -> Vec<(usize, usize)> {
        let vof = self.vertex_of();
        (0..self.edge_count()).map(|e| (vof[2 * e], vof[2 * e + 1])).collect()
    }

    pub fn loop_edges(&self) -> Vec<usize> {
        self.edge_ends().iter().enumerate().filter(|(_, (u, v))| u == v).map(|(e, _)| e).collect()
    }

    pub fn loops(&self) -> usize {
        self.loop_edges().len()
    }

    pub fn bridge_edges(&self) -> Vec<usize> {
        if self.is_vertex_map() {
            return Vec::new();
        }
        low_link(self.vertex_count(), &self.edge_ends()).bridges
    }

    pub fn bridges(&self) -> usize {
        self.bridge_edges().len()
    }

    /// Vertices whose removal disconnects the underlying multigraph.
    pub fn cut_vertices(&self) -> Vec<usize> {
        if self.is_vertex_map() {
            return Vec::new();
        }
        low_link(self.vertex_count(), &self.edge_ends()).cut_vertices
    }

    /// At least two edges, no loop and no cut vertex.
    pub fn is_nonseparable(&self) -> bool {
        self.edge_count() >= 2 && self.loops() == 0 && self.cut_vertices().is_empty()
    }
}

/// Cut vertices of a multigraph given by its edge ends.
pub(crate) fn cut_vertices_of(vertex_count: usize, ends: &[(usize, usize)]) -> Vec<usize> {
    low_link(vertex_count, ends).cut_vertices
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_examples() {
        assert!(RootedMap::double_edge().is_nonseparable());
        assert!(!RootedMap::bridge().is_nonseparable());
        assert!(!RootedMap::loop_map().is_nonseparable());
        assert_eq!(RootedMap::bridge().bridges(), 1);
        assert_eq!(RootedMap::loop_map().loops(), 1);
        assert_eq!(RootedMap::loop_map().bridges(), 0);
        assert_eq!(RootedMap::double_edge().bridges(), 0);
    }

    #[test]
    fn bridge_plus_loop_is_separable() {
        // bridge 0-1 and a loop on the first endpoint
        let m = RootedMap::from_rotations(&[vec![0, 2, 3], vec![1]], Some(0)).unwrap();
        assert_eq!(m.loops(), 1);
        assert_eq!(m.bridges(), 1);
        assert!(!m.is_nonseparable());
    }

    #[test]
    fn path_has_cut_vertex() {
        let m = RootedMap::from_rotations(&[vec![0], vec![1, 2], vec![3]], Some(0)).unwrap();
        assert_eq!(m.cut_vertices().len(), 1);
        assert_eq!(m.bridges(), 2);
    }
}
