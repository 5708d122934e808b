use super::{Graph, GraphError};

/// A forest with one root per component (the smallest vertex id in it).
#[derive(Debug, Clone)]
pub struct RootedForest {
    graph: Graph,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    roots: Vec<usize>,
    /// Vertices in BFS order, component by component; parents precede children.
    order: Vec<usize>,
}

impl RootedForest {
    pub fn new(graph: &Graph) -> Result<Self, GraphError> {
        let n = graph.vertex_count();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut visited = vec![false; n];
        let mut roots = Vec::new();
        let mut order = Vec::with_capacity(n);
        for root in 0..n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            roots.push(root);
            let start = order.len();
            order.push(root);
            let mut head = start;
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in graph.neighbors(u) {
                    if Some(w) == parent[u] {
                        continue;
                    }
                    if visited[w] {
                        return Err(GraphError::NotAForest);
                    }
                    visited[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    children[u].push(w);
                    order.push(w);
                }
            }
        }
        Ok(Self {
            graph: graph.clone(),
            parent,
            children,
            depth,
            roots,
            order,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Parents before children.
    pub fn top_down(&self) -> &[usize] {
        &self.order
    }

    /// Children before parents.
    pub fn bottom_up(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().rev().copied()
    }

    /// Descendants of `v` (its subtree, `v` included), in BFS order from `v`.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut head = 0;
        while head < out.len() {
            let u = out[head];
            head += 1;
            out.extend_from_slice(&self.children[u]);
        }
        out
    }

    /// Longest downward distance from `v` to a vertex of its subtree.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0; self.graph.vertex_count()];
        for v in self.bottom_up() {
            if let Some(p) = self.parent[v] {
                height[p] = height[p].max(height[v] + 1);
            }
        }
        height
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three() {
        let f = RootedForest::new(&Graph::path(3)).unwrap();
        assert_eq!(f.roots(), &[0]);
        assert_eq!(
            (0..3).map(|v| f.parent(v)).collect::<Vec<_>>(),
            vec![None, Some(0), Some(1)]
        );
        assert_eq!(f.heights(), vec![2, 1, 0]);
        assert_eq!(f.subtree(1), vec![1, 2]);
    }

    #[test]
    fn triangle_is_rejected() {
        assert_eq!(
            RootedForest::new(&Graph::cycle(3)).unwrap_err(),
            GraphError::NotAForest
        );
    }

    #[test]
    fn two_components() {
        let g = Graph::path(2).disjoint_union(&Graph::path(2));
        let f = RootedForest::new(&g).unwrap();
        assert_eq!(f.roots(), &[0, 2]);
        assert_eq!(f.children(2), &[3]);
        assert_eq!(f.depth(3), 1);
    }
}
