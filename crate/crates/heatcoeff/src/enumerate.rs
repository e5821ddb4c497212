//! Enumeration of stable multi-digraphs and strongly connected stable
//! pointed graphs up to isomorphism, and formal sums of graphs with exact
//! rational coefficients.
//!
//! Stability forces |E| >= 2|V|, so a stable graph of weight n has at most
//! n vertices; enumeration walks vertex counts, generates multiplicity
//! matrices with prescribed row/column margins, and deduplicates by
//! canonical form. The same engine drives the semistable families used by
//! the property tests.

use crate::digraph::{CanonicalForm, CanonicalKey, GraphError, MultiDigraph, PointedGraph};
use crate::phi::{phi, PhiCache};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;

/// Default bound on the weight of enumerated stable graphs.
pub const DEFAULT_STABLE_BOUND: u32 = 4;
/// Default bound for strongly connected stable pointed graphs.
pub const DEFAULT_POINTED_BOUND: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("weight {n} out of bounds (1..={bound})")]
    WeightOutOfBounds { n: u32, bound: u32 },
}

/// Per-vertex lower bounds used when generating degree margins.
#[derive(Debug, Clone, Copy)]
struct DegreeMin {
    out_min: u32,
    in_min: u32,
    sum_min: u32,
}

/// One representative per isomorphism class of stable graphs of weight
/// `n`, sorted by canonical form.
pub fn enumerate_stable(n: u32) -> Result<Vec<MultiDigraph>, EnumerationError> {
    enumerate_stable_bounded(n, DEFAULT_STABLE_BOUND)
}

pub fn enumerate_stable_bounded(
    n: u32,
    bound: u32,
) -> Result<Vec<MultiDigraph>, EnumerationError> {
    if n == 0 || n > bound {
        return Err(EnumerationError::WeightOutOfBounds { n, bound });
    }
    let mut seen: BTreeMap<CanonicalForm, MultiDigraph> = BTreeMap::new();
    for v in 1..=n as usize {
        let edges = n + v as u32;
        let mins = vec![DegreeMin { out_min: 2, in_min: 2, sum_min: 0 }; v];
        for g in graphs_with_margins(v, edges, &mins, false) {
            let key = g.canonical_form().expect("enumeration stays small");
            seen.entry(key).or_insert(g);
        }
    }
    Ok(seen.into_values().map(|g| canonical_representative(&g)).collect())
}

/// One representative per pointed-isomorphism class of strongly
/// connected stable pointed graphs of weight `k`, sorted by canonical
/// form.
pub fn enumerate_pointed_stable_strong(k: u32) -> Result<Vec<PointedGraph>, EnumerationError> {
    enumerate_pointed_stable_strong_bounded(k, DEFAULT_POINTED_BOUND)
}

pub fn enumerate_pointed_stable_strong_bounded(
    k: u32,
    bound: u32,
) -> Result<Vec<PointedGraph>, EnumerationError> {
    if k == 0 || k > bound {
        return Err(EnumerationError::WeightOutOfBounds { n: k, bound });
    }
    let mut seen: BTreeMap<CanonicalForm, PointedGraph> = BTreeMap::new();
    for v_ord in 0..=k as usize {
        let edges = k + v_ord as u32;
        let mut mins = vec![DegreeMin { out_min: 2, in_min: 2, sum_min: 0 }; v_ord + 1];
        // strong connectivity needs • to reach and be reached when
        // ordinary vertices exist
        mins[0] = if v_ord == 0 {
            DegreeMin { out_min: 0, in_min: 0, sum_min: 0 }
        } else {
            DegreeMin { out_min: 1, in_min: 1, sum_min: 0 }
        };
        for g in graphs_with_margins(v_ord + 1, edges, &mins, true) {
            if !g.is_strongly_connected() {
                continue;
            }
            let p = PointedGraph::new(g).expect("nonempty");
            let key = p.canonical_form().expect("enumeration stays small");
            seen.entry(key).or_insert(p);
        }
    }
    Ok(seen
        .into_values()
        .map(|p| PointedGraph::new(canonical_representative_pointed(&p)).expect("nonempty"))
        .collect())
}

/// All semistable pointed graphs of exactly this weight, optionally
/// restricted to strongly connected ones. This is the finite normal-form
/// family that exhaustive φ tests run over: semistability rules out
/// smoothable vertices, which is what bounds the vertex count.
pub fn enumerate_pointed_semistable(
    weight: u32,
    require_strong: bool,
) -> Vec<PointedGraph> {
    let mut seen: BTreeMap<CanonicalForm, PointedGraph> = BTreeMap::new();
    // 2|E| >= 3|V_ord| for semistable ordinary vertices gives
    // |V_ord| <= 2*weight.
    for v_ord in 0..=(2 * weight) as usize {
        let edges = weight + v_ord as u32;
        let mut mins = vec![DegreeMin { out_min: 1, in_min: 1, sum_min: 3 }; v_ord + 1];
        mins[0] = if require_strong && v_ord > 0 {
            DegreeMin { out_min: 1, in_min: 1, sum_min: 0 }
        } else {
            DegreeMin { out_min: 0, in_min: 0, sum_min: 0 }
        };
        for g in graphs_with_margins(v_ord + 1, edges, &mins, true) {
            if require_strong && !g.is_strongly_connected() {
                continue;
            }
            let p = PointedGraph::new(g).expect("nonempty");
            let key = p.canonical_form().expect("enumeration stays small");
            seen.entry(key).or_insert(p);
        }
    }
    seen.into_values().collect()
}

fn canonical_representative(g: &MultiDigraph) -> MultiDigraph {
    g.canonical_form().expect("within bound").representative()
}

fn canonical_representative_pointed(p: &PointedGraph) -> MultiDigraph {
    p.canonical_form().expect("within bound").representative()
}

/// All graphs on `n` vertices with `total` edges whose degrees satisfy
/// the per-vertex minimums. With `pointed`, vertex 0 is special and the
/// remaining vertices get sorted out-degree sequences; otherwise all
/// vertices do. Sorting loses no isomorphism classes and trims the
/// search.
fn graphs_with_margins(
    n: usize,
    total: u32,
    mins: &[DegreeMin],
    pointed: bool,
) -> Vec<MultiDigraph> {
    let mut out = Vec::new();
    let sort_from = usize::from(pointed);
    let out_mins: Vec<u32> = mins.iter().map(|m| m.out_min).collect();
    for out_seq in compositions(total, n, &out_mins) {
        if !is_sorted_desc(&out_seq[sort_from..]) {
            continue;
        }
        let in_mins: Vec<u32> = mins
            .iter()
            .zip(&out_seq)
            .map(|(m, &o)| m.in_min.max(m.sum_min.saturating_sub(o)))
            .collect();
        for in_seq in compositions(total, n, &in_mins) {
            fill_matrices(&out_seq, &in_seq, &mut out);
        }
    }
    out
}

fn is_sorted_desc(xs: &[u32]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

/// All length-`parts` sequences with the given minimums summing to
/// `total`.
fn compositions(total: u32, parts: usize, mins: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let min_tail: Vec<u32> = (0..=parts)
        .map(|i| mins[i..].iter().sum())
        .collect();
    fn rec(
        total: u32,
        idx: usize,
        parts: usize,
        mins: &[u32],
        min_tail: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == parts {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min = min_tail[idx + 1];
        if total < mins[idx] + rest_min {
            return;
        }
        for x in mins[idx]..=(total - rest_min) {
            cur.push(x);
            rec(total - x, idx + 1, parts, mins, min_tail, cur, out);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    rec(total, 0, parts, mins, &min_tail, &mut cur, &mut out);
    out
}

/// All matrices with exact row sums `rows` and column sums `cols`.
fn fill_matrices(rows: &[u32], cols: &[u32], out: &mut Vec<MultiDigraph>) {
    debug_assert_eq!(rows.iter().sum::<u32>(), cols.iter().sum::<u32>());
    let n = rows.len();
    let mut matrix = vec![0u32; n * n];
    let mut col_rem = cols.to_vec();
    fn rec(
        rows: &[u32],
        r: usize,
        matrix: &mut Vec<u32>,
        col_rem: &mut Vec<u32>,
        out: &mut Vec<MultiDigraph>,
    ) {
        let n = rows.len();
        if r == n {
            out.push(
                MultiDigraph::from_matrix(
                    &matrix.chunks(n).map(|row| row.to_vec()).collect::<Vec<_>>(),
                )
                .expect("square by construction"),
            );
            return;
        }
        fn cell_rec(
            rows: &[u32],
            r: usize,
            c: usize,
            left: u32,
            matrix: &mut Vec<u32>,
            col_rem: &mut Vec<u32>,
            out: &mut Vec<MultiDigraph>,
        ) {
            let n = rows.len();
            if c == n {
                if left == 0 {
                    rec(rows, r + 1, matrix, col_rem, out);
                }
                return;
            }
            let tail_capacity: u32 = col_rem[c + 1..].iter().sum();
            let lo = left.saturating_sub(tail_capacity);
            let hi = left.min(col_rem[c]);
            for x in lo..=hi {
                matrix[r * n + c] = x;
                col_rem[c] -= x;
                cell_rec(rows, r, c + 1, left - x, matrix, col_rem, out);
                col_rem[c] += x;
                matrix[r * n + c] = 0;
            }
        }
        cell_rec(rows, r, 0, rows[r], matrix, col_rem, out);
    }
    rec(rows, 0, &mut matrix, &mut col_rem, out);
}

/// Formal linear combination of canonical graphs with exact rational
/// coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSum<G> {
    terms: BTreeMap<CanonicalForm, (G, BigRational)>,
}

impl<G: CanonicalKey + Clone> GraphSum<G> {
    pub fn new() -> Self {
        GraphSum { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, graph: &G, coeff: BigRational) -> Result<(), GraphError> {
        if coeff.is_zero() {
            return Ok(());
        }
        let key = graph.canonical_key()?;
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((graph.clone(), coeff));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().1 += coeff;
                if e.get().1.is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn coefficient(&self, key: &CanonicalForm) -> Option<&BigRational> {
        self.terms.get(key).map(|(_, c)| c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalForm, &G, &BigRational)> {
        self.terms.iter().map(|(k, (g, c))| (k, g, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<G: CanonicalKey + Clone> Default for GraphSum<G> {
    fn default() -> Self {
        GraphSum::new()
    }
}

/// Expansion of the k-th power of the complex Laplacian over strongly
/// connected stable pointed graphs of weight k: the coefficient of Γ is
/// (-1)^(|V(Γ)|-1) φ(Γ)/|Aut(Γ)| with |V(Γ)| counting `•`.
pub fn laplacian_power(
    k: u32,
    cache: &PhiCache,
) -> Result<GraphSum<PointedGraph>, EnumerationError> {
    let mut sum = GraphSum::new();
    for gamma in enumerate_pointed_stable_strong(k)? {
        let phi_val = phi(&gamma, cache);
        let aut = gamma.aut_order();
        let sign = if (gamma.vertex_count() - 1) % 2 == 0 { 1 } else { -1 };
        let coeff = BigRational::new(
            BigInt::from(sign) * BigInt::from(phi_val),
            BigInt::from(aut),
        );
        sum.add_term(&gamma, coeff).expect("enumerated graphs canonicalize");
    }
    Ok(sum)
}

/// True when every coefficient denominator divides the automorphism
/// order of its graph (a structural property of the expansion).
pub fn laplacian_power_denominators_divide_aut(sum: &GraphSum<PointedGraph>) -> bool {
    sum.iter().all(|(_, g, c)| {
        let aut = BigInt::from(g.aut_order());
        (c.denom().abs() <= aut.abs()) && (aut % c.denom()).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_counts_match_published_statements() {
        assert_eq!(enumerate_stable(1).unwrap().len(), 1);
        assert_eq!(enumerate_stable(2).unwrap().len(), 4);
        assert_eq!(enumerate_stable(3).unwrap().len(), 15);
    }

    #[test]
    fn weight_four_count_is_frozen() {
        // regression value recorded from this enumerator, not a published
        // count
        assert_eq!(enumerate_stable(4).unwrap().len(), 64);
    }

    #[test]
    fn enumeration_bounds() {
        assert!(enumerate_stable(0).is_err());
        assert!(enumerate_stable(5).is_err());
        assert!(enumerate_stable_bounded(5, 5).is_ok());
        assert!(enumerate_pointed_stable_strong(0).is_err());
    }

    #[test]
    fn outputs_are_stable_and_distinct() {
        for n in 1..=3 {
            let graphs = enumerate_stable(n).unwrap();
            let mut keys: Vec<CanonicalForm> =
                graphs.iter().map(|g| g.canonical_form().unwrap()).collect();
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), graphs.len());
            assert!(graphs.iter().all(|g| g.is_stable()));
            assert!(graphs.iter().all(|g| g.weight() == n as i64));
        }
    }

    #[test]
    fn pointed_strong_stable_counts() {
        // weight 1: only • with one loop
        let k1 = enumerate_pointed_stable_strong(1).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].bullet_loops(), 1);
        assert_eq!(k1[0].ordinary_count(), 0);
        // weight 2: • with two loops, and the looped vertex exchanging
        // single edges with •
        let k2 = enumerate_pointed_stable_strong(2).unwrap();
        assert_eq!(k2.len(), 2);
        // weight 3 has the remaining nine of the twelve published graphs
        let k3 = enumerate_pointed_stable_strong(3).unwrap();
        assert_eq!(k3.len(), 9);
        for p in k1.iter().chain(&k2).chain(&k3) {
            assert!(p.is_stable());
            assert!(p.is_strongly_connected());
            assert_eq!(p.stabilize().unwrap(), *p);
        }
    }

    #[test]
    fn laplacian_power_low_weights() {
        let cache = PhiCache::new();
        let l1 = laplacian_power(1, &cache).unwrap();
        assert_eq!(l1.len(), 1);
        let (_, g, c) = l1.iter().next().unwrap();
        assert_eq!(g.bullet_loops(), 1);
        assert_eq!(*c, BigRational::one());

        let l2 = laplacian_power(2, &cache).unwrap();
        assert_eq!(l2.len(), 2);
        let bullet2 = PointedGraph::bullet(2).canonical_form().unwrap();
        assert_eq!(l2.coefficient(&bullet2), Some(&BigRational::one()));
        let looped = PointedGraph::from_edges(2, &[(1, 1, 1), (1, 0, 1), (0, 1, 1)])
            .unwrap()
            .canonical_form()
            .unwrap();
        assert_eq!(l2.coefficient(&looped), Some(&-BigRational::one()));

        assert!(laplacian_power_denominators_divide_aut(&l2));
        assert!(laplacian_power_denominators_divide_aut(
            &laplacian_power(3, &cache).unwrap()
        ));
    }

    #[test]
    fn graph_sum_drops_zeros() {
        let g = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        let mut sum = GraphSum::new();
        sum.add_term(&g, BigRational::one()).unwrap();
        sum.add_term(&g, -BigRational::one()).unwrap();
        assert!(sum.is_empty());
    }

    #[test]
    fn semistable_family_is_finite_and_correct() {
        for w in 1..=3u32 {
            let all = enumerate_pointed_semistable(w, true);
            assert!(!all.is_empty());
            for p in &all {
                assert!(p.is_semistable());
                assert!(p.is_strongly_connected());
                assert_eq!(p.weight(), w as i64);
            }
        }
    }
}
