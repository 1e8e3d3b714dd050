//! General-graph recurrences for `D(G, x)`.
//!
//! * vertex: `D(G) = x D(G/u) + D(G-u) + x D(G-N[u]) - (1+x) p_u(G)`
//! * edge, for `e = {u, v}`:
//!   `D(G) = D(G-e) + x/(x-1) * [D(G-e/u) + D(G-e/v) - D(G/u) - D(G/v)
//!   - D(G-N[u]) - D(G-N[v]) + D(G-e-N[u]) + D(G-e-N[v])]`
//! * components: `D(G1 ∪ G2) = D(G1) D(G2)`
//!
//! The edge bracket always vanishes at `x = 1`, so the `x/(x-1)` factor is
//! applied as an exact division; a non-zero remainder is reported as an
//! error rather than truncated.

use std::collections::HashMap;

use crate::enumerate::Oracle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::poly::DomPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Vertex,
    Edge,
    Product,
}

/// How the sub-terms of one recurrence step are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subterms {
    /// Straight to the enumeration oracle.
    Oracle,
    /// Recurse with the same method until the leaf threshold.
    Recursive,
}

#[derive(Clone, Copy, Debug)]
pub struct DecompositionConfig {
    /// Graphs with at most this many vertices go to the oracle.
    pub leaf_threshold: usize,
    pub memoize: bool,
    pub subterms: Subterms,
    pub oracle: Oracle,
}

impl Default for DecompositionConfig {
    fn default() -> Self {
        DecompositionConfig {
            leaf_threshold: 10,
            memoize: true,
            subterms: Subterms::Recursive,
            oracle: Oracle::default(),
        }
    }
}

/// Exact labeled graph; no isomorphism canonicalization.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MemoKey(Graph);

impl MemoKey {
    pub fn new(g: &Graph) -> Self {
        MemoKey(g.clone())
    }
}

/// Recurrence evaluator. The memo table lives for one `Decomposer`.
#[derive(Debug, Default)]
pub struct Decomposer {
    config: DecompositionConfig,
    memo: HashMap<(Method, MemoKey), DomPoly>,
}

impl Decomposer {
    pub fn new(config: DecompositionConfig) -> Self {
        Decomposer {
            config,
            memo: HashMap::new(),
        }
    }

    pub fn config(&self) -> &DecompositionConfig {
        &self.config
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `D(G, x)` by the selected method, pivots chosen by maximum degree.
    pub fn compute(&mut self, g: &Graph, method: Method) -> Result<DomPoly> {
        match method {
            Method::Oracle => self.config.oracle.domination_polynomial(g),
            Method::Vertex => self.solve(g, Method::Vertex),
            Method::Edge => self.solve(g, Method::Edge),
            Method::Product => self.components_product(g),
        }
    }

    /// One application of the vertex identity at `u`.
    pub fn vertex_recurrence(&mut self, g: &Graph, u: VertexId) -> Result<DomPoly> {
        g.check(u)?;
        let contracted = self.subterm(&g.contract_vertex(u)?, Method::Vertex)?;
        let deleted = self.subterm(&g.delete_vertex(u)?, Method::Vertex)?;
        let outside = self.subterm(&g.delete_closed_neighborhood(u)?, Method::Vertex)?;
        let restricted = self.config.oracle.restricted_polynomial(g, u)?;

        let x = DomPoly::monomial(1, 1);
        let one_plus_x = DomPoly::from_i64s(&[1, 1]);
        Ok(&(&(&x * &contracted) + &deleted) + &(&(&x * &outside) - &(&one_plus_x * &restricted)))
    }

    /// The eight-term bracket of the edge identity at `{u, v}`.
    pub fn edge_bracket(&mut self, g: &Graph, u: VertexId, v: VertexId) -> Result<DomPoly> {
        let ge = g.delete_edge(u, v)?;
        let plus = [
            ge.contract_vertex(u)?,
            ge.contract_vertex(v)?,
            ge.delete_closed_neighborhood(u)?,
            ge.delete_closed_neighborhood(v)?,
        ];
        let minus = [
            g.contract_vertex(u)?,
            g.contract_vertex(v)?,
            g.delete_closed_neighborhood(u)?,
            g.delete_closed_neighborhood(v)?,
        ];
        let mut sum = DomPoly::zero();
        for h in &plus {
            sum = &sum + &self.subterm(h, Method::Edge)?;
        }
        for h in &minus {
            sum = &sum - &self.subterm(h, Method::Edge)?;
        }
        Ok(sum)
    }

    /// One application of the edge identity at `{u, v}`.
    pub fn edge_recurrence(&mut self, g: &Graph, u: VertexId, v: VertexId) -> Result<DomPoly> {
        let bracket = self.edge_bracket(g, u, v)?;
        let quotient = bracket.shift(1).divide_exact_by_x_minus_1()?;
        let without_edge = self.subterm(&g.delete_edge(u, v)?, Method::Edge)?;
        Ok(&without_edge + &quotient)
    }

    /// Product of the component polynomials; the empty graph gives 1.
    pub fn components_product(&mut self, g: &Graph) -> Result<DomPoly> {
        let mut acc = DomPoly::one();
        for comp in g.components() {
            let part = self.subterm(&g.induced(&comp), Method::Vertex)?;
            acc = &acc * &part;
        }
        Ok(acc)
    }

    fn subterm(&mut self, g: &Graph, method: Method) -> Result<DomPoly> {
        if self.config.subterms == Subterms::Oracle || g.n() <= self.config.leaf_threshold {
            return self.config.oracle.domination_polynomial(g);
        }
        self.solve(g, method)
    }

    fn solve(&mut self, g: &Graph, method: Method) -> Result<DomPoly> {
        if g.n() <= self.config.leaf_threshold {
            return self.config.oracle.domination_polynomial(g);
        }
        let key = (method, MemoKey::new(g));
        if self.config.memoize {
            if let Some(p) = self.memo.get(&key) {
                return Ok(p.clone());
            }
        }
        let result = match method {
            Method::Vertex => {
                let u = g.max_degree_vertex().expect("non-empty graph");
                self.vertex_recurrence(g, u)?
            }
            Method::Edge => match edge_pivot(g) {
                Some((u, v)) => self.edge_recurrence(g, u, v)?,
                // Edgeless: every vertex must be chosen.
                None => DomPoly::monomial(1, g.n()),
            },
            Method::Oracle | Method::Product => {
                return Err(Error::Config(format!("{method:?} is not a recursive method")))
            }
        };
        if self.config.memoize {
            self.memo.insert(key, result.clone());
        }
        Ok(result)
    }
}

/// Edge from a maximum-degree vertex to its highest-degree neighbor.
pub fn edge_pivot(g: &Graph) -> Option<(VertexId, VertexId)> {
    let u = g.max_degree_vertex()?;
    let v = g
        .neighbors(u)
        .iter()
        .max_by_key(|&w| (g.degree(w), std::cmp::Reverse(w)))?;
    Some((u, v))
}

pub fn vertex_recurrence(g: &Graph, u: VertexId) -> Result<DomPoly> {
    Decomposer::default().vertex_recurrence(g, u)
}

pub fn edge_recurrence(g: &Graph, u: VertexId, v: VertexId) -> Result<DomPoly> {
    Decomposer::default().edge_recurrence(g, u, v)
}

pub fn components_product(g: &Graph) -> Result<DomPoly> {
    Decomposer::default().components_product(g)
}
