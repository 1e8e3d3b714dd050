//! Exhaustive subset enumeration: the reference against which every
//! recurrence is checked.
//!
//! A subset is dominating iff the OR of its members' closed-neighborhood
//! masks is the full mask. Subsets are split into a high part (scanned,
//! possibly in parallel) and a low part of up to [`LOW_BITS`] vertices whose
//! ORs and popcounts are tabulated once, so the inner loop is a single OR
//! and compare.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::poly::DomPoly;

pub const DEFAULT_CAP: usize = 24;
/// No cap override may exceed this.
pub const HARD_CAP: usize = 30;

const LOW_BITS: usize = 12;
/// Below this many scanned vertices the scan stays on the calling thread.
const PARALLEL_MIN: usize = 18;

/// `counts[i]` = number of dominating sets of size `i`, `i = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomTable {
    pub counts: Vec<BigInt>,
}

impl DomTable {
    pub fn n(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// Smallest size with a non-zero count.
    pub fn gamma(&self) -> Option<usize> {
        self.counts.iter().position(|c| !c.is_zero())
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> DomPoly {
        DomPoly::from_coeffs(self.counts.clone())
    }

    /// Pads the coefficient vector of `p` out to length `n + 1`.
    pub fn from_polynomial(p: &DomPoly, n: usize) -> DomTable {
        DomTable {
            counts: (0..=n).map(|i| p.coefficient(i)).collect(),
        }
    }
}

/// Enumeration oracle with a configurable vertex cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Result<Oracle> {
        if cap > HARD_CAP {
            return Err(Error::Config(format!(
                "enumeration cap {cap} exceeds the hard limit of {HARD_CAP}"
            )));
        }
        Ok(Oracle { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn guard(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap {
            return Err(Error::CapExceeded {
                vertices: g.n(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn domination_table(&self, g: &Graph) -> Result<DomTable> {
        self.guard(g)?;
        let full = full_mask(g.n());
        let counts = scan_by_size(&g.closed_masks(), full);
        Ok(DomTable {
            counts: counts.into_iter().map(BigInt::from).collect(),
        })
    }

    pub fn domination_polynomial(&self, g: &Graph) -> Result<DomPoly> {
        Ok(self.domination_table(g)?.to_polynomial())
    }

    /// Searches sizes in increasing order and stops at the first hit.
    pub fn domination_number(&self, g: &Graph) -> Result<usize> {
        self.guard(g)?;
        let n = g.n();
        let closed = g.closed_masks();
        let full = full_mask(n);
        for k in 0..=n {
            if k_subsets(n, k).any(|s| covers(&closed, s, full)) {
                return Ok(k);
            }
        }
        unreachable!("the full vertex set always dominates")
    }

    /// `p_u(G, x)`: dominating sets of `G - u` that avoid `N_G(u)`.
    ///
    /// Only subsets of `V \ N_G[u]` are scanned; `u` itself can never be
    /// covered by such a subset, so the target is everything except `u`.
    pub fn restricted_polynomial(&self, g: &Graph, u: VertexId) -> Result<DomPoly> {
        g.check(u)?;
        self.guard(g)?;
        let nbhd = g.closed_neighborhood(u);
        let closed = g.closed_masks();
        let allowed: Vec<u64> = (0..g.n())
            .filter(|&v| !nbhd.contains(v))
            .map(|v| closed[v])
            .collect();
        let target = full_mask(g.n()) & !(1 << u);
        let counts = scan_by_size(&allowed, target);
        Ok(DomPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
    }

    /// Number of dominating sets, `D(G, 1)`, counted without building the
    /// size table.
    pub fn count_dominating_sets(&self, g: &Graph) -> Result<BigInt> {
        self.guard(g)?;
        Ok(BigInt::from(scan_count(&g.closed_masks(), full_mask(g.n()))))
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn covers(closed: &[u64], subset: u64, target: u64) -> bool {
    let mut acc = 0;
    let mut rest = subset;
    while rest != 0 {
        acc |= closed[rest.trailing_zeros() as usize];
        if acc & target == target {
            return true;
        }
        rest &= rest - 1;
    }
    acc & target == target
}

/// All `k`-subsets of `0..n` as masks, in increasing order (Gosper's hack).
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if k == 0 { Some(0) } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(cur)
    })
}

struct LowTable {
    or: Vec<u64>,
    pop: Vec<u8>,
}

fn low_table(closed: &[u64]) -> LowTable {
    let size = 1usize << closed.len();
    let mut or = vec![0u64; size];
    let mut pop = vec![0u8; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        or[m] = or[rest] | closed[low];
        pop[m] = pop[rest] + 1;
    }
    LowTable { or, pop }
}

fn high_or(closed_high: &[u64], h: usize) -> u64 {
    let mut acc = 0;
    let mut rest = h;
    while rest != 0 {
        acc |= closed_high[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    acc
}

/// Counts subsets of `closed` whose OR covers `target`, bucketed by size.
fn scan_by_size(closed: &[u64], target: u64) -> Vec<u64> {
    let n = closed.len();
    let (low, high) = closed.split_at(n.min(LOW_BITS));
    let table = low_table(low);
    let scan_high = |counts: &mut Vec<u64>, h: usize| {
        let acc = high_or(high, h);
        let base = h.count_ones() as usize;
        for (o, &p) in table.or.iter().zip(&table.pop) {
            if (acc | o) & target == target {
                counts[base + p as usize] += 1;
            }
        }
    };
    let highs = 0..1usize << high.len();
    if n >= PARALLEL_MIN {
        highs
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut c, h| {
                    scan_high(&mut c, h);
                    c
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    } else {
        let mut counts = vec![0u64; n + 1];
        highs.for_each(|h| scan_high(&mut counts, h));
        counts
    }
}

fn scan_count(closed: &[u64], target: u64) -> u64 {
    let n = closed.len();
    let (low, high) = closed.split_at(n.min(LOW_BITS));
    let table = low_table(low);
    let scan_high = |h: usize| {
        let acc = high_or(high, h);
        table.or.iter().filter(|&&o| (acc | o) & target == target).count() as u64
    };
    let highs = 0..1usize << high.len();
    if n >= PARALLEL_MIN {
        highs.into_par_iter().map(scan_high).sum()
    } else {
        highs.map(scan_high).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> DomPoly {
        s.parse().unwrap()
    }

    /// Textbook check, one subset at a time, straight from the definition.
    fn naive_table(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let mut counts = vec![0u64; n + 1];
        for mask in 0u64..1 << n {
            let dominated = (0..n).all(|v| {
                mask >> v & 1 == 1 || g.neighbors(v).iter().any(|w| mask >> w & 1 == 1)
            });
            if dominated {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    }

    fn t2() -> Graph {
        Graph::coalesce(&Graph::complete(3), 2, &Graph::complete(3), 0).unwrap()
    }

    #[test]
    fn polynomial_examples() {
        let o = Oracle::default();
        assert_eq!(o.domination_polynomial(&Graph::empty(1)).unwrap(), p("x"));
        assert_eq!(o.domination_polynomial(&Graph::complete(3)).unwrap(), p("x^3+3x^2+3x"));
        assert_eq!(o.domination_polynomial(&Graph::cycle(4)).unwrap(), p("x^4+4x^3+6x^2"));
        assert_eq!(o.domination_polynomial(&t2()).unwrap(), p("x^5+5x^4+10x^3+8x^2+x"));
        assert_eq!(o.domination_polynomial(&Graph::empty(0)).unwrap(), DomPoly::one());
    }

    #[test]
    fn domination_number_examples() {
        let o = Oracle::default();
        assert_eq!(o.domination_number(&Graph::complete(3)).unwrap(), 1);
        assert_eq!(o.domination_number(&Graph::cycle(4)).unwrap(), 2);
        assert_eq!(o.domination_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(o.domination_number(&Graph::empty(5)).unwrap(), 5);
        assert_eq!(o.domination_number(&Graph::path(7)).unwrap(), 3);
    }

    #[test]
    fn restricted_polynomial_examples() {
        let o = Oracle::default();
        for u in 0..3 {
            assert!(o.restricted_polynomial(&Graph::complete(3), u).unwrap().is_zero());
        }
        // P_4 = 0-1-2-3, u = 0: subsets of {2, 3} dominating 1-2-3.
        assert_eq!(o.restricted_polynomial(&Graph::path(4), 0).unwrap(), p("x^2+x"));
        assert!(o.restricted_polynomial(&t2(), 4).unwrap().is_zero());
        assert!(o.restricted_polynomial(&Graph::path(4), 4).is_err());
    }

    #[test]
    fn count_examples() {
        let o = Oracle::default();
        assert_eq!(o.count_dominating_sets(&Graph::empty(1)).unwrap(), BigInt::from(1));
        assert_eq!(o.count_dominating_sets(&Graph::complete(3)).unwrap(), BigInt::from(7));
        assert_eq!(o.count_dominating_sets(&t2()).unwrap(), BigInt::from(25));
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::new(6).unwrap();
        let err = Err(Error::CapExceeded { vertices: 7, cap: 6 });
        assert_eq!(o.domination_polynomial(&Graph::path(7)), err);
        assert!(matches!(
            o.count_dominating_sets(&Graph::path(7)),
            Err(Error::CapExceeded { vertices: 7, cap: 6 })
        ));
        assert!(o.domination_number(&Graph::path(7)).is_err());
        assert!(Oracle::new(HARD_CAP + 1).is_err());
    }

    #[test]
    fn parallel_scan_matches_serial_scan() {
        // 20 vertices crosses the parallel threshold.
        let g = Graph::cycle(20);
        let closed = g.closed_masks();
        let full = full_mask(20);
        let parallel = scan_by_size(&closed, full);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let serial = pool.install(|| scan_by_size(&closed, full));
        assert_eq!(parallel, serial);
        assert_eq!(scan_count(&closed, full), parallel.iter().sum::<u64>());
    }

    #[test]
    fn k_subsets_enumerates_binomially() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(4, 4).collect::<Vec<_>>(), vec![0b1111]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn table_matches_definition(g in arb_graph(14)) {
            let o = Oracle::default();
            let table = o.domination_table(&g).unwrap();
            let naive: Vec<BigInt> = naive_table(&g).into_iter().map(BigInt::from).collect();
            prop_assert_eq!(&table.counts, &naive);
            prop_assert_eq!(table.counts[g.n()].clone(), BigInt::from(1));
            prop_assert_eq!(table.gamma(), Some(o.domination_number(&g).unwrap()));
            prop_assert_eq!(o.count_dominating_sets(&g).unwrap(), table.to_polynomial().eval_at(1));
        }

        #[test]
        fn product_over_disjoint_union(a in arb_graph(7), b in arb_graph(7)) {
            let o = Oracle::default();
            let lhs = o.domination_polynomial(&Graph::disjoint_union(&a, &b)).unwrap();
            let rhs = &o.domination_polynomial(&a).unwrap() * &o.domination_polynomial(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn supersets_of_dominating_sets_dominate(g in arb_graph(12), seed in any::<u64>(), extra in any::<usize>()) {
            prop_assume!(g.n() > 0);
            let closed = g.closed_masks();
            let full = full_mask(g.n());
            let start = seed & full;
            let dominating = start | if covers(&closed, start, full) { 0 } else { full };
            let grown = dominating | 1 << (extra % g.n());
            prop_assert!(covers(&closed, grown, full));
        }

        #[test]
        fn no_isolated_vertices_gives_n_at_n_minus_1(g in arb_graph(12)) {
            prop_assume!(g.n() > 0 && (0..g.n()).all(|v| g.degree(v) > 0));
            let d = Oracle::default().domination_polynomial(&g).unwrap();
            prop_assert_eq!(d.coefficient(g.n() - 1), BigInt::from(g.n()));
        }

        #[test]
        fn restricted_matches_definition(g in arb_graph(10), pick in any::<usize>()) {
            prop_assume!(g.n() > 0);
            let u = pick % g.n();
            let got = Oracle::default().restricted_polynomial(&g, u).unwrap();
            let minus = g.delete_vertex(u).unwrap();
            let mut counts = vec![0i64; g.n()];
            for mask in 0u64..1 << minus.n() {
                let original = |w: usize| if w < u { w } else { w + 1 };
                let touches_nbhd = (0..minus.n())
                    .any(|w| mask >> w & 1 == 1 && g.has_edge(u, original(w)));
                let dominated = (0..minus.n()).all(|v| {
                    mask >> v & 1 == 1 || minus.neighbors(v).iter().any(|w| mask >> w & 1 == 1)
                });
                if !touches_nbhd && dominated {
                    counts[mask.count_ones() as usize] += 1;
                }
            }
            prop_assert_eq!(got, DomPoly::from_i64s(&counts));
        }
    }
}
