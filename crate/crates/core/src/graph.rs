//! Labeled simple graphs stored as per-vertex neighbor bitsets, plus the
//! surgery operations used by the recurrences.
//!
//! Every operation is pure: it borrows its inputs and returns a new graph.
//! Deleting vertices relabels the survivors to `0..n'` keeping their
//! relative order.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

const WORD_BITS: usize = 64;

/// Set of vertices backed by a word array. Equality and hashing ignore
/// trailing zero words, so capacity never affects identity.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn significant(&self) -> &[u64] {
        let len = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.significant().hash(state);
    }
}

impl VertexSet {
    pub fn with_capacity(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_with_capacity(n: usize, items: impl IntoIterator<Item = VertexId>) -> Self {
        let mut s = Self::with_capacity(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.words
            .get(v / WORD_BITS)
            .is_some_and(|w| w >> (v % WORD_BITS) & 1 == 1)
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        let idx = v / WORD_BITS;
        if idx >= self.words.len() {
            self.words.resize(idx + 1, 0);
        }
        self.words[idx] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        if let Some(w) = self.words.get_mut(v / WORD_BITS) {
            *w &= !(1 << (v % WORD_BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + bit)
            })
        })
    }

    /// Lowest word of the set; only meaningful when every member is below 64.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            g.link(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// Cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.link(n - 1, 0);
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertex of maximum degree, lowest label on ties.
    pub fn max_degree_vertex(&self) -> Option<VertexId> {
        (0..self.n).rev().max_by_key(|&v| self.degree(v))
    }

    pub fn check(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    fn link(&mut self, u: VertexId, v: VertexId) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Induced subgraph on `V \ s`, relabeled compactly in order.
    pub fn delete_vertices(&self, s: impl IntoIterator<Item = VertexId>) -> Result<Graph> {
        let mut removed = VertexSet::with_capacity(self.n);
        for v in s {
            self.check(v)?;
            removed.insert(v);
        }
        Ok(self.without(&removed))
    }

    pub fn delete_vertex(&self, u: VertexId) -> Result<Graph> {
        self.delete_vertices([u])
    }

    /// `G - N[u]`.
    pub fn delete_closed_neighborhood(&self, u: VertexId) -> Result<Graph> {
        self.check(u)?;
        Ok(self.without(&self.closed_neighborhood(u)))
    }

    fn without(&self, removed: &VertexSet) -> Graph {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in label.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let mut g = Graph::empty(next);
        for v in 0..self.n {
            if label[v] == usize::MAX {
                continue;
            }
            for w in self.adj[v].iter() {
                if label[w] != usize::MAX {
                    g.adj[label[v]].insert(label[w]);
                }
            }
        }
        g
    }

    /// Vertex contraction `G/u`: make `N(u)` a clique, then delete `u`.
    pub fn contract_vertex(&self, u: VertexId) -> Result<Graph> {
        self.check(u)?;
        let mut g = self.clone();
        let nbrs: Vec<_> = self.adj[u].iter().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                g.link(a, b);
            }
        }
        g.delete_vertex(u)
    }

    pub fn delete_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if !self.adj[u].contains(v) {
            return Err(Error::MissingEdge { u, v });
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// `G + {v, .}`: a new vertex labeled `n` hanging from `v`.
    pub fn append_pendant(&self, v: VertexId) -> Result<Graph> {
        self.check(v)?;
        let mut g = self.grown(self.n + 1);
        g.link(v, self.n);
        Ok(g)
    }

    fn grown(&self, n: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.resize(n, VertexSet::with_capacity(n));
        Graph { n, adj }
    }

    /// Glues `g2` onto `g1` by identifying `v2` with `v1`.
    ///
    /// Vertices of `g1` keep their labels. A vertex `w != v2` of `g2` gets
    /// label `g1.n() + w` if `w < v2`, else `g1.n() + w - 1`.
    pub fn coalesce(g1: &Graph, v1: VertexId, g2: &Graph, v2: VertexId) -> Result<Graph> {
        g1.check(v1)?;
        g2.check(v2)?;
        let offset = g1.n;
        let map = |w: VertexId| match w.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => offset + w,
            std::cmp::Ordering::Greater => offset + w - 1,
        };
        let mut g = g1.grown(g1.n + g2.n - 1);
        for (a, b) in g2.edges() {
            g.link(map(a), map(b));
        }
        Ok(g)
    }

    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
        let mut g = g1.grown(g1.n + g2.n);
        for (a, b) in g2.edges() {
            g.link(g1.n + a, g1.n + b);
        }
        g
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::with_capacity(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::with_capacity(self.n);
            let mut frontier = VertexSet::with_capacity(self.n);
            frontier.insert(start);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = VertexSet::with_capacity(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                for v in comp.iter() {
                    next.remove(v);
                }
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `keep`, relabeled in order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut removed = VertexSet::full(self.n);
        for v in keep.iter() {
            removed.remove(v);
        }
        self.without(&removed)
    }

    /// Closed-neighborhood masks as single words. Callers must ensure `n <= 64`.
    pub(crate) fn closed_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= WORD_BITS);
        (0..self.n).map(|v| self.adj[v].low_word() | 1 << v).collect()
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v`. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut g = Graph::empty(n);
        let mut seen = HashSet::new();
        let mut count = 0;
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body)?;
            let err = |message: String| Error::Parse { line, message };
            if u >= n || v >= n {
                return Err(err(format!("vertex id out of range for n = {n}")));
            }
            if u == v {
                return Err(err(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(format!("duplicate edge {{{u}, {v}}}")));
            }
            g.link(u, v);
            count += 1;
            if count > m {
                return Err(err(format!("more than the {m} edges announced in the header")));
            }
        }
        if count != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {m} edges but {count} were given"),
            });
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found `{body}`"),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("`{s}` is not a non-negative integer"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
