//! The three planar trees drawn from a Catalan tuple: the pocket tree, and
//! the direct and opposite thread trees.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tuples::CatalanTuple;

/// The two labels on either side of a pocket-tree edge: `down` is assigned
/// when the walk descends the edge, `up` when it climbs back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSides {
    pub down: usize,
    pub up: usize,
}

impl EdgeSides {
    pub fn even(&self) -> usize {
        if self.down.is_multiple_of(2) {
            self.down
        } else {
            self.up
        }
    }

    pub fn odd(&self) -> usize {
        if self.down % 2 == 1 {
            self.down
        } else {
            self.up
        }
    }
}

/// Rooted planar tree on pockets `P_0..P_k`, indexed in preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PocketTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    level: Vec<usize>,
    // Indexed by the child end of each edge; absent until `label_sides`.
    sides: Option<Vec<EdgeSides>>,
}

/// Attachments `(parent, child)` in creation order for the direct/pocket rule:
/// each vertex after the root hooks onto the latest vertex that still has an
/// open half-edge, then opens `e_l` half-edges of its own.
fn direct_attachments(t: &CatalanTuple) -> Vec<(usize, usize)> {
    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::with_capacity(t.length());
    for (l, &e) in t.entries().iter().enumerate() {
        if l > 0 {
            let top = open
                .last_mut()
                .expect("ballot condition keeps a vertex open");
            out.push((top.0, l));
            top.1 -= 1;
            if top.1 == 0 {
                open.pop();
            }
        }
        if e > 0 {
            open.push((l, e));
        }
    }
    out
}

/// Builds the pocket tree of a length tuple, sides unlabeled.
pub fn pocket_tree(lengths: &CatalanTuple) -> PocketTree {
    let n = lengths.entries().len();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut level = vec![0; n];
    for (p, c) in direct_attachments(lengths) {
        parent[c] = Some(p);
        children[p].push(c);
        level[c] = level[p] + 1;
    }
    PocketTree {
        parent,
        children,
        level,
        sides: None,
    }
}

impl PocketTree {
    pub fn pocket_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    /// `N`, twice the number of edges.
    pub fn side_count(&self) -> usize {
        2 * self.edge_count()
    }

    pub fn parent(&self, m: usize) -> Option<usize> {
        self.parent[m]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, m: usize) -> &[usize] {
        &self.children[m]
    }

    /// `L_m`, the edge distance from the root.
    pub fn level(&self, m: usize) -> usize {
        self.level[m]
    }

    /// `v(P_m)`, the number of incident edges.
    pub fn valency(&self, m: usize) -> usize {
        self.children[m].len() + usize::from(self.parent[m].is_some())
    }

    pub fn is_leaf(&self, m: usize) -> bool {
        self.children[m].is_empty()
    }

    pub fn is_labeled(&self) -> bool {
        self.sides.is_some()
    }

    /// Sides of the edge joining `child` to its parent.
    pub fn edge_sides(&self, child: usize) -> Option<EdgeSides> {
        if child == 0 {
            return None;
        }
        self.sides.as_ref().map(|s| s[child - 1])
    }

    /// `(parent, child, sides)` per edge, ordered by child.
    pub fn labeled_edges(&self) -> Result<Vec<(usize, usize, EdgeSides)>> {
        let sides = self.sides.as_ref().ok_or(Error::UnlabeledTree)?;
        Ok((1..self.pocket_count())
            .map(|c| (self.parent[c].expect("non-root"), c, sides[c - 1]))
            .collect())
    }

    /// Walks the tree depth-first from the root, children left to right,
    /// numbering edge sides `0..N` in the order they are passed.
    pub fn label_sides(mut self) -> PocketTree {
        let mut sides = vec![EdgeSides { down: 0, up: 0 }; self.edge_count()];
        let mut next = 0usize;
        // (vertex, index of next child to visit)
        let mut stack = vec![(0usize, 0usize)];
        while let Some(frame) = stack.last_mut() {
            let (v, i) = *frame;
            if let Some(&c) = self.children[v].get(i) {
                frame.1 += 1;
                sides[c - 1].down = next;
                next += 1;
                stack.push((c, 0));
            } else {
                stack.pop();
                if v != 0 {
                    sides[v - 1].up = next;
                    next += 1;
                }
            }
        }
        self.sides = Some(sides);
        self
    }

    /// Even and odd side labels around `P_m`, parent edge first and then the
    /// child edges in planar order.
    pub fn pocket_rows(&self, m: usize) -> Result<PocketRows> {
        if m >= self.pocket_count() {
            return Err(Error::NoSuchPocket {
                index: m,
                count: self.pocket_count(),
            });
        }
        let sides = self.sides.as_ref().ok_or(Error::UnlabeledTree)?;
        if self.is_leaf(m) {
            return Err(Error::LeafPocket(m));
        }
        let edges: Vec<EdgeSides> = self.parent[m]
            .map(|_| sides[m - 1])
            .into_iter()
            .chain(self.children[m].iter().map(|&c| sides[c - 1]))
            .collect();
        Ok(PocketRows {
            even: edges.iter().map(EdgeSides::even).collect(),
            odd: edges.iter().map(EdgeSides::odd).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PocketRows {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThreadKind {
    Direct,
    Opposite,
}

/// Non-crossing tree of threads on a row of nodes `0..nodes`; every thread
/// `(a, b)` has `a < b` and is read from left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreadTree {
    pub kind: ThreadKind,
    pub nodes: usize,
    pub threads: Vec<(usize, usize)>,
}

impl ThreadTree {
    pub fn new(kind: ThreadKind, t: &CatalanTuple) -> ThreadTree {
        match kind {
            ThreadKind::Direct => direct_tree(t),
            ThreadKind::Opposite => opposite_tree(t),
        }
    }

    /// `nodes - 1` threads reaching every node.
    pub fn is_spanning_tree(&self) -> bool {
        if self.threads.len() + 1 != self.nodes {
            return false;
        }
        let mut root: Vec<usize> = (0..self.nodes).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for &(a, b) in &self.threads {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            if ra == rb {
                return false;
            }
            root[ra] = rb;
        }
        true
    }

    pub fn is_noncrossing(&self) -> bool {
        self.threads.iter().all(|&(a, b)| {
            self.threads
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }
}

/// Each node after the first attaches once to the latest node with an open
/// half-edge.
pub fn direct_tree(t: &CatalanTuple) -> ThreadTree {
    let mut threads = direct_attachments(t);
    threads.sort_unstable();
    ThreadTree {
        kind: ThreadKind::Direct,
        nodes: t.entries().len(),
        threads,
    }
}

/// Nodes with `e_l > 0` only open half-edges; a node with `e_l = 0` attaches
/// to the latest open node and keeps attaching to earlier open nodes for as
/// long as the node it just used has run out of half-edges.
pub fn opposite_tree(t: &CatalanTuple) -> ThreadTree {
    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut threads = Vec::with_capacity(t.length());
    for (l, &e) in t.entries().iter().enumerate() {
        if e > 0 {
            open.push((l, e));
            continue;
        }
        while let Some(top) = open.last_mut() {
            threads.push((top.0, l));
            top.1 -= 1;
            if top.1 > 0 {
                break;
            }
            open.pop();
        }
    }
    threads.sort_unstable();
    ThreadTree {
        kind: ThreadKind::Opposite,
        nodes: t.entries().len(),
        threads,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuples::enumerate_tuples;
    use std::collections::VecDeque;

    fn t(entries: &[usize]) -> CatalanTuple {
        CatalanTuple::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn example_pocket_tree_shape() {
        let pt = pocket_tree(&t(&[3, 2, 0, 0, 0, 1, 0]));
        assert_eq!(pt.children(0), &[1, 4, 5]);
        assert_eq!(pt.children(1), &[2, 3]);
        assert_eq!(pt.children(5), &[6]);
        assert!(pt.is_leaf(4));
        assert_eq!(pt.valency(0), 3);
        assert_eq!(pt.valency(1), 3);
        assert_eq!(pt.valency(5), 2);
        assert_eq!(pt.level(6), 2);

        let chain = pocket_tree(&t(&[1, 0]));
        assert_eq!(chain.children(0), &[1]);
        let star = pocket_tree(&t(&[3, 0, 0, 0]));
        assert_eq!(star.children(0), &[1, 2, 3]);
    }

    #[test]
    fn side_labels() {
        let pt = pocket_tree(&t(&[3, 2, 0, 0, 0, 1, 0])).label_sides();
        let mut pairs: Vec<(usize, usize)> = pt
            .labeled_edges()
            .unwrap()
            .into_iter()
            .map(|(_, _, s)| (s.down, s.up))
            .collect();
        pairs.sort_unstable();
        assert_eq!(
            pairs,
            vec![(0, 5), (1, 2), (3, 4), (6, 7), (8, 11), (9, 10)]
        );

        let single = pocket_tree(&t(&[1, 0])).label_sides();
        assert_eq!(single.edge_sides(1), Some(EdgeSides { down: 0, up: 1 }));

        // Hand walk of the three-pocket chain: down, down, up, up.
        let chain = pocket_tree(&t(&[1, 1, 0])).label_sides();
        assert_eq!(chain.edge_sides(1), Some(EdgeSides { down: 0, up: 3 }));
        assert_eq!(chain.edge_sides(2), Some(EdgeSides { down: 1, up: 2 }));
    }

    #[test]
    fn rows_of_example() {
        let pt = pocket_tree(&t(&[3, 2, 0, 0, 0, 1, 0])).label_sides();
        let r0 = pt.pocket_rows(0).unwrap();
        assert_eq!((r0.even, r0.odd), (vec![0, 6, 8], vec![5, 7, 11]));
        let r1 = pt.pocket_rows(1).unwrap();
        assert_eq!((r1.even, r1.odd), (vec![0, 2, 4], vec![5, 1, 3]));
        let r5 = pt.pocket_rows(5).unwrap();
        assert_eq!((r5.even, r5.odd), (vec![8, 10], vec![11, 9]));
        assert_eq!(pt.pocket_rows(2), Err(Error::LeafPocket(2)));
        assert!(matches!(pt.pocket_rows(7), Err(Error::NoSuchPocket { .. })));
        let unlabeled = pocket_tree(&t(&[1, 0]));
        assert_eq!(unlabeled.pocket_rows(0), Err(Error::UnlabeledTree));
    }

    #[test]
    fn thread_tree_examples() {
        assert_eq!(direct_tree(&t(&[2, 0, 0])).threads, vec![(0, 1), (0, 2)]);
        assert_eq!(direct_tree(&t(&[1, 1, 0])).threads, vec![(0, 1), (1, 2)]);
        assert!(direct_tree(&t(&[0])).threads.is_empty());
        assert_eq!(opposite_tree(&t(&[2, 0, 0])).threads, vec![(0, 1), (0, 2)]);
        assert_eq!(opposite_tree(&t(&[1, 1, 0])).threads, vec![(0, 2), (1, 2)]);
        assert!(opposite_tree(&t(&[0])).threads.is_empty());
    }

    fn bfs_levels(pt: &PocketTree) -> Vec<usize> {
        let mut level = vec![usize::MAX; pt.pocket_count()];
        level[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let neighbours = pt.children(v).iter().copied().chain(pt.parent(v));
            for w in neighbours {
                if level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        level
    }

    #[test]
    fn exhaustive_tree_properties() {
        for k in 0..=9 {
            for tuple in enumerate_tuples(k).unwrap() {
                for tree in [direct_tree(&tuple), opposite_tree(&tuple)] {
                    assert_eq!(tree.threads.len(), k);
                    assert!(tree.is_spanning_tree(), "{tuple} {tree:?}");
                    assert!(tree.is_noncrossing(), "{tuple} {tree:?}");
                }
                if k == 0 {
                    continue;
                }
                let pt = pocket_tree(&tuple).label_sides();
                let levels: Vec<usize> = (0..pt.pocket_count()).map(|m| pt.level(m)).collect();
                assert_eq!(levels, bfs_levels(&pt));

                let mut seen = vec![false; pt.side_count()];
                for (p, _, s) in pt.labeled_edges().unwrap() {
                    assert_ne!(s.down % 2, s.up % 2);
                    assert_eq!(s.down % 2, pt.level(p) % 2);
                    seen[s.down] = true;
                    seen[s.up] = true;
                }
                assert!(seen.iter().all(|&b| b));
            }
        }
    }

    #[test]
    fn valency_matches_lengths() {
        let lengths = t(&[3, 2, 0, 0, 0, 1, 0]);
        let pt = pocket_tree(&lengths);
        assert_eq!(pt.valency(0), lengths.entries()[0]);
        for m in 1..pt.pocket_count() {
            assert_eq!(pt.valency(m), lengths.entries()[m] + 1);
        }
    }
}
