//! Undirected simple graphs with dense vertex ids `0..n`.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("identical endpoints {0}")]
    IdenticalEndpoints(usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Immutable undirected simple graph. No self-loops, no parallel edges;
/// adjacency lists are kept sorted so every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs. Pairs are normalized to
    /// `u < v`; self-loops, duplicates, and out-of-range ids are rejected.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The subgraph induced by `members`, relabeled to `0..|members|`.
    /// Returns the graph together with the map from new ids to original ids
    /// (ascending, so relabeling is deterministic).
    pub fn induced_subgraph(&self, members: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(&v) = members.iter().find(|&&v| v >= self.vertex_count) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        let old_ids: Vec<usize> = members.iter().copied().collect();
        let mut edges = Vec::new();
        for (new_u, &old_u) in old_ids.iter().enumerate() {
            for &old_v in self.neighbors(old_u) {
                if old_v > old_u {
                    if let Ok(new_v) = old_ids.binary_search(&old_v) {
                        edges.push((new_u, new_v));
                    }
                }
            }
        }
        let graph = Graph::new(old_ids.len(), edges).expect("induced edges are valid");
        Ok((graph, old_ids))
    }
}

/// A set of vertex ids, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Default)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn with_vertex(&self, v: usize) -> VertexSet {
        let mut members = self.members.clone();
        members.push(v);
        VertexSet::new(members)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        VertexSet::new(members)
    }

    /// |self ∩ other| for another sorted set.
    pub fn intersection_count(&self, other: &[usize]) -> usize {
        let mut count = 0;
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.len() {
            match self.members[i].cmp(&other[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn to_mask(&self, vertex_count: usize) -> Vec<bool> {
        let mut mask = vec![false; vertex_count];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet {
            members: mask
                .iter()
                .enumerate()
                .filter_map(|(v, &m)| m.then_some(v))
                .collect(),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Connected components as vertex sets, ordered by smallest member.
pub fn connected_components(graph: &Graph) -> Vec<VertexSet> {
    let alive = vec![true; graph.vertex_count()];
    components_masked(graph, &alive)
        .into_iter()
        .map(VertexSet::new)
        .collect()
}

/// Components of `G - {s1, s2}` (both vertices and all their incident edges
/// removed), ordered by smallest member.
pub fn components_after_pair_removal(
    graph: &Graph,
    s1: usize,
    s2: usize,
) -> Result<Vec<VertexSet>, GraphError> {
    if s1 == s2 {
        return Err(GraphError::IdenticalEndpoints(s1));
    }
    for v in [s1, s2] {
        if v >= graph.vertex_count() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: graph.vertex_count(),
            });
        }
    }
    let mut alive = vec![true; graph.vertex_count()];
    alive[s1] = false;
    alive[s2] = false;
    Ok(components_masked(graph, &alive)
        .into_iter()
        .map(VertexSet::new)
        .collect())
}

/// Components restricted to `alive` vertices, each sorted, ordered by
/// smallest member.
pub(crate) fn components_masked(graph: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; graph.vertex_count()];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for start in graph.vertices() {
        if !alive[start] || seen[start] {
            continue;
        }
        let mut members = Vec::new();
        seen[start] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in graph.neighbors(v) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// True iff the vertices of `mask` induce a connected subgraph with
/// `count` members (`count` must equal the number of set bits).
pub(crate) fn connected_within(graph: &Graph, mask: &[bool], count: usize) -> bool {
    if count == 0 {
        return false;
    }
    let start = match mask.iter().position(|&m| m) {
        Some(v) => v,
        None => return false,
    };
    let mut seen = vec![false; graph.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = 0;
    while let Some(v) = stack.pop() {
        reached += 1;
        for &w in graph.neighbors(v) {
            if mask[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    reached == count
}

/// Biconnectivity of the subgraph induced by `mask`: at least three
/// vertices, connected, and no articulation point. One iterative lowpoint
/// pass; no allocation of the induced subgraph.
pub(crate) fn biconnected_within(graph: &Graph, mask: &[bool], count: usize) -> bool {
    if count < 3 {
        return false;
    }
    let n = graph.vertex_count();
    let start = match mask.iter().position(|&m| m) {
        Some(v) => v,
        None => return false,
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut next_child = vec![0usize; n];
    let mut timer = 0;
    let mut root_children = 0;

    disc[start] = timer;
    low[start] = timer;
    timer += 1;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while next_child[v] < graph.neighbors(v).len() {
            let w = graph.neighbors(v)[next_child[v]];
            next_child[v] += 1;
            if !mask[w] {
                continue;
            }
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                reached += 1;
                if v == start {
                    root_children += 1;
                    if root_children > 1 {
                        return false;
                    }
                }
                stack.push(w);
                advanced = true;
                break;
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        }
        if advanced {
            continue;
        }
        stack.pop();
        if let Some(&p) = stack.last() {
            low[p] = low[p].min(low[v]);
            if p != start && low[v] >= disc[p] {
                return false;
            }
        }
    }
    reached == count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_self_loop_duplicate_and_out_of_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(4, [(2, 0), (3, 1), (0, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert!(g.has_edge(2, 0) && g.has_edge(0, 2));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn components_of_disjoint_triangles() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].as_slice(), &[0, 1, 2]);
        assert_eq!(comps[1].as_slice(), &[3, 4, 5]);
    }

    #[test]
    fn components_of_connected_path() {
        assert_eq!(connected_components(&path3()), vec![VertexSet::new(vec![0, 1, 2])]);
    }

    #[test]
    fn components_with_isolated_vertices() {
        let g = Graph::new(6, [(0, 1)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 5);
        assert_eq!(comps[0].as_slice(), &[0, 1]);
        assert!(comps[1..].iter().all(|c| c.len() == 1));
    }

    #[test]
    fn empty_graph_has_no_components() {
        let g = Graph::new(0, []).unwrap();
        assert!(connected_components(&g).is_empty());
    }

    #[test]
    fn induced_subgraph_of_cycle_arc() {
        let (sub, map) = cycle(6).induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(sub.edge_count(), 2);
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_of_complete_graph_is_complete() {
        let k6 = Graph::new(6, (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)))).unwrap();
        let (sub, map) = k6.induced_subgraph(&VertexSet::new(vec![1, 3, 5])).unwrap();
        assert_eq!(map, vec![1, 3, 5]);
        assert_eq!(sub.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_of_empty_set() {
        let (sub, map) = cycle(6).induced_subgraph(&VertexSet::empty()).unwrap();
        assert_eq!(sub.vertex_count(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        assert!(cycle(4).induced_subgraph(&VertexSet::new(vec![0, 9])).is_err());
    }

    #[test]
    fn pair_removal_on_prism() {
        let prism = Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let comps = components_after_pair_removal(&prism, 0, 3).unwrap();
        assert_eq!(comps, vec![VertexSet::new(vec![1, 2, 4, 5])]);
    }

    #[test]
    fn pair_removal_on_theta_pairs() {
        let g = Graph::new(
            8,
            [(0, 1), (2, 3), (0, 2), (1, 3), (4, 5), (0, 4), (1, 5), (6, 7), (0, 6), (1, 7)],
        )
        .unwrap();
        let comps = components_after_pair_removal(&g, 0, 1).unwrap();
        assert_eq!(
            comps,
            vec![
                VertexSet::new(vec![2, 3]),
                VertexSet::new(vec![4, 5]),
                VertexSet::new(vec![6, 7]),
            ]
        );
    }

    #[test]
    fn pair_removal_of_adjacent_cycle_vertices() {
        let comps = components_after_pair_removal(&cycle(6), 0, 1).unwrap();
        assert_eq!(comps, vec![VertexSet::new(vec![2, 3, 4, 5])]);
    }

    #[test]
    fn pair_removal_rejects_identical_vertices() {
        assert_eq!(
            components_after_pair_removal(&cycle(6), 2, 2),
            Err(GraphError::IdenticalEndpoints(2))
        );
    }

    #[test]
    fn masked_biconnectivity_matches_shape() {
        let g = cycle(6);
        let all = vec![true; 6];
        assert!(biconnected_within(&g, &all, 6));
        // An arc of the cycle is a path: connected but not biconnected.
        let mut arc = vec![false; 6];
        for v in 0..3 {
            arc[v] = true;
        }
        assert!(connected_within(&g, &arc, 3));
        assert!(!biconnected_within(&g, &arc, 3));
        // Fewer than three vertices never counts as biconnected.
        let mut pair = vec![false; 6];
        pair[0] = true;
        pair[1] = true;
        assert!(!biconnected_within(&g, &pair, 2));
    }

    #[test]
    fn vertex_set_operations() {
        let a = VertexSet::new(vec![3, 1, 1, 2]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        assert!(a.contains(2) && !a.contains(0));
        assert_eq!(a.intersection_count(&[2, 3, 4]), 2);
        assert_eq!(a.with_vertex(0).as_slice(), &[0, 1, 2, 3]);
        let mask = a.to_mask(5);
        assert_eq!(VertexSet::from_mask(&mask), a);
    }
}
