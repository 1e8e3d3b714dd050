//! Fixed inputs shared by the benchmarks.

use dompoly::Graph;

/// The 12-vertex circulant `C_12(1, 5)`: 4-regular, connected, no small
/// separators, so neither recurrence gets an easy split.
pub fn circulant_12() -> Graph {
    let n = 12;
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 5) % n)]);
    Graph::from_edges(n, edges).expect("valid circulant")
}

/// `K_3 + C_5 + P_4`, a small disconnected graph.
pub fn three_components() -> Graph {
    let g = Graph::disjoint_union(&Graph::complete(3), &Graph::cycle(5));
    Graph::disjoint_union(&g, &Graph::path(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_shape() {
        let g = circulant_12();
        assert_eq!(g.edge_count(), 24);
        assert!((0..12).all(|v| g.degree(v) == 4));
        assert!(g.is_connected());
        assert_eq!(three_components().components().len(), 3);
    }
}
