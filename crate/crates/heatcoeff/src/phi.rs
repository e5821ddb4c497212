//! The recursive graph invariant φ and its strong-reduction counting
//! oracle.
//!
//! φ(Γ) is 0 unless Γ is strongly connected, is invariant under smoothing
//! degree-(1,1) ordinary vertices, equals l! on the bare `•` with l loops,
//! and otherwise sums over single-edge deletions (each parallel copy
//! counted separately). Those rules are applied in that order; the
//! ordering matters when a smoothable vertex coexists with deletable
//! edges, and is certified against the independent reduction count below.

use crate::digraph::{binomial, factorial, CanonicalForm, GraphError, PointedGraph};
use num::BigUint;
use num::Zero;
use std::collections::HashMap;
use std::collections::HashSet;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::RwLock;

/// Memo table for φ keyed by canonical form of the smoothed graph.
/// Concurrent reads and inserts are allowed; inserting the same key twice
/// must carry the same value.
#[derive(Debug, Default)]
pub struct PhiCache {
    map: RwLock<HashMap<CanonicalForm, BigUint>>,
    persisted: RwLock<HashSet<CanonicalForm>>,
}

impl PhiCache {
    pub fn new() -> Self {
        PhiCache::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &CanonicalForm) -> Option<BigUint> {
        self.map.read().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: CanonicalForm, value: BigUint) {
        let mut map = self.map.write().unwrap();
        if let Some(old) = map.insert(key, value.clone()) {
            assert_eq!(old, value, "cache keys are immutable once written");
        }
    }

    /// Loads `canonical_key<TAB>value` records; a missing file yields an
    /// empty cache.
    pub fn load(path: &Path) -> std::io::Result<Self> {
        let cache = PhiCache::new();
        let file = match std::fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        for line in std::io::BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('\t')
                .ok_or_else(|| std::io::Error::other(format!("bad cache line {line:?}")))?;
            let key: CanonicalForm =
                key.parse().map_err(|e: GraphError| std::io::Error::other(e.to_string()))?;
            let value = value
                .parse::<BigUint>()
                .map_err(|e| std::io::Error::other(e.to_string()))?;
            cache.persisted.write().unwrap().insert(key.clone());
            cache.insert(key, value);
        }
        Ok(cache)
    }

    /// Appends entries not yet on disk, one full line per write call.
    pub fn persist(&self, path: &Path) -> std::io::Result<usize> {
        let map = self.map.read().unwrap();
        let mut persisted = self.persisted.write().unwrap();
        let mut fresh: Vec<(&CanonicalForm, &BigUint)> =
            map.iter().filter(|(k, _)| !persisted.contains(*k)).collect();
        fresh.sort();
        if fresh.is_empty() {
            return Ok(0);
        }
        let mut file = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
        for (key, value) in &fresh {
            file.write_all(format!("{key}\t{value}\n").as_bytes())?;
        }
        file.flush()?;
        for (key, _) in fresh {
            persisted.insert(key.clone());
        }
        Ok(map.len())
    }
}

/// φ per the recursion above, memoized in `cache`.
pub fn phi(gamma: &PointedGraph, cache: &PhiCache) -> BigUint {
    if !gamma.is_strongly_connected() {
        return BigUint::zero();
    }
    let normal = gamma.smooth_all();
    if normal.ordinary_count() == 0 {
        return factorial(normal.bullet_loops() as u64);
    }
    // Graphs past the canonicalization bound are computed without memo.
    let key = normal.canonical_form().ok();
    if let Some(key) = &key {
        if let Some(v) = cache.get(key) {
            return v;
        }
    }
    let total = edge_deletion_sum(&normal, |g| phi(g, cache));
    if let Some(key) = key {
        cache.insert(key, total.clone());
    }
    total
}

/// φ without any memoization; exponential, for soundness tests only.
pub fn phi_uncached(gamma: &PointedGraph) -> BigUint {
    if !gamma.is_strongly_connected() {
        return BigUint::zero();
    }
    let normal = gamma.smooth_all();
    if normal.ordinary_count() == 0 {
        return factorial(normal.bullet_loops() as u64);
    }
    edge_deletion_sum(&normal, phi_uncached)
}

fn edge_deletion_sum(normal: &PointedGraph, mut rec: impl FnMut(&PointedGraph) -> BigUint) -> BigUint {
    let mut total = BigUint::zero();
    for (u, v, m) in normal.edge_classes().collect::<Vec<_>>() {
        let deleted = normal.delete_edge(u, v).expect("edge class exists");
        total += BigUint::from(m) * rec(&deleted);
    }
    total
}

/// Counts strong reductions: sequences that repeatedly remove one
/// redundant edge (parallel copies are distinct choices) and then smooth
/// all degree-(1,1) ordinary vertices, ending at the bare `•` with no
/// edges. Returns 0 for graphs that are not strongly connected.
pub fn count_strong_reductions(gamma: &PointedGraph) -> BigUint {
    if !gamma.is_strongly_connected() {
        return BigUint::zero();
    }
    let mut memo: HashMap<CanonicalForm, BigUint> = HashMap::new();
    count_reductions_rec(&gamma.smooth_all(), &mut memo)
}

fn count_reductions_rec(
    normal: &PointedGraph,
    memo: &mut HashMap<CanonicalForm, BigUint>,
) -> BigUint {
    if normal.edge_count() == 0 {
        // Strong connectivity leaves only the bare distinguished vertex.
        debug_assert_eq!(normal.ordinary_count(), 0);
        debug_assert_eq!(normal.weight(), 0);
        return BigUint::from(1u32);
    }
    let key = normal.canonical_form().ok();
    if let Some(key) = &key {
        if let Some(v) = memo.get(key) {
            return v.clone();
        }
    }
    let mut total = BigUint::zero();
    for (u, v, m) in normal.edge_classes().collect::<Vec<_>>() {
        let deleted = normal.delete_edge(u, v).expect("edge class exists");
        if deleted.is_strongly_connected() {
            let next = deleted.smooth_all();
            // Each reduction step removes exactly one unit of weight.
            debug_assert_eq!(next.weight(), normal.weight() - 1);
            total += BigUint::from(m) * count_reductions_rec(&next, memo);
        }
    }
    if let Some(key) = key {
        memo.insert(key, total.clone());
    }
    total
}

/// Splits the loops at `•` off φ: with l loops at `•` and weight w,
/// φ(Γ) = C(w, l) · l! · φ(Γ′) where Γ′ drops the `•` loops. The l! is
/// the interleaving of indistinguishable-in-position but individually
/// removable loop copies; it makes the identity hold with no exception
/// for the bare-`•` graph.
pub fn phi_loop_split(gamma: &PointedGraph) -> (BigUint, PointedGraph) {
    let l = gamma.bullet_loops();
    let mut stripped = gamma.clone();
    for _ in 0..l {
        stripped = stripped.delete_edge(0, 0).expect("loop exists");
    }
    let w = gamma.weight();
    let multiplier = if w < 0 {
        BigUint::zero()
    } else {
        binomial(w as u64, l as u64) * factorial(l as u64)
    };
    (multiplier, stripped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::MultiDigraph;

    fn pointed(n: usize, edges: &[(usize, usize, u32)]) -> PointedGraph {
        PointedGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn base_cases() {
        let cache = PhiCache::new();
        assert_eq!(phi(&PointedGraph::bullet(1), &cache), BigUint::from(1u32));
        assert_eq!(phi(&PointedGraph::bullet(3), &cache), BigUint::from(6u32));
        assert_eq!(phi(&PointedGraph::bullet(0), &cache), BigUint::from(1u32));
    }

    #[test]
    fn not_strongly_connected_is_zero() {
        let cache = PhiCache::new();
        let isolated = pointed(2, &[(1, 1, 2)]);
        assert_eq!(phi(&isolated, &cache), BigUint::zero());
        assert_eq!(count_strong_reductions(&isolated), BigUint::zero());
    }

    #[test]
    fn double_two_cycle_value() {
        let cache = PhiCache::new();
        let g = pointed(2, &[(1, 0, 2), (0, 1, 2)]);
        assert_eq!(phi(&g, &cache), BigUint::from(8u32));
        assert_eq!(count_strong_reductions(&g), BigUint::from(8u32));
    }

    #[test]
    fn looped_two_cycle_value() {
        let cache = PhiCache::new();
        let g = pointed(2, &[(1, 1, 1), (0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(phi(&g, &cache), BigUint::from(3u32));
    }

    #[test]
    fn smoothing_precedes_edge_deletion() {
        // v <-> • plus two loops at •: smoothing first gives φ(•3) = 6,
        // summing deletions first would give 4.
        let cache = PhiCache::new();
        let g = pointed(2, &[(1, 0, 1), (0, 1, 1), (0, 0, 2)]);
        assert_eq!(phi(&g, &cache), BigUint::from(6u32));
        assert_eq!(count_strong_reductions(&g), BigUint::from(6u32));
    }

    #[test]
    fn loop_split_examples() {
        // #5 of the published values: v(1 loop) <-> •(1 loop), φ = 3
        let g = pointed(2, &[(1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 0, 1)]);
        let (mult, stripped) = phi_loop_split(&g);
        assert_eq!(mult, BigUint::from(3u32));
        let cache = PhiCache::new();
        assert_eq!(mult * phi(&stripped, &cache), phi(&g, &cache));

        // no loops at •: multiplier 1, graph unchanged
        let h = pointed(2, &[(1, 0, 2), (0, 1, 2)]);
        let (mult, stripped) = phi_loop_split(&h);
        assert_eq!(mult, BigUint::from(1u32));
        assert_eq!(stripped, h);

        // bare • with 3 loops: C(3,3)·3! = 6 = φ
        let b = PointedGraph::bullet(3);
        let (mult, stripped) = phi_loop_split(&b);
        assert_eq!(mult, BigUint::from(6u32));
        assert_eq!(stripped, PointedGraph::bullet(0));
        assert_eq!(mult * phi(&stripped, &cache), phi(&b, &cache));
    }

    #[test]
    fn cached_and_uncached_agree() {
        let graphs = [
            pointed(2, &[(1, 0, 2), (0, 1, 2)]),
            pointed(2, &[(1, 1, 2), (1, 0, 1), (0, 1, 1)]),
            pointed(3, &[(0, 2, 1), (1, 0, 1), (1, 2, 1), (2, 1, 2)]),
            pointed(3, &[(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1)]),
        ];
        for g in graphs {
            let cache = PhiCache::new();
            assert_eq!(phi(&g, &cache), phi_uncached(&g));
            // second run hits the cache
            assert_eq!(phi(&g, &cache), phi_uncached(&g));
        }
    }

    #[test]
    fn cache_round_trips_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("phi.cache");
        let cache = PhiCache::new();
        let g = pointed(2, &[(1, 0, 2), (0, 1, 2)]);
        let value = phi(&g, &cache);
        assert!(cache.len() > 0);
        cache.persist(&path).unwrap();
        // appending again writes nothing new
        cache.persist(&path).unwrap();
        let reloaded = PhiCache::load(&path).unwrap();
        assert_eq!(reloaded.len(), cache.len());
        let key = g.smooth_all().canonical_form().unwrap();
        assert_eq!(reloaded.get(&key), Some(value));
    }

    #[test]
    fn gamma_c_from_weight_one_graph() {
        // cutting both loops of the 2-loop vertex gives the double 2-cycle
        let g = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        let gamma = crate::heat::gamma_of_cutting(&g, &[(0, 0, 2)]).unwrap();
        assert_eq!(count_strong_reductions(&gamma), BigUint::from(8u32));
    }
}
