//! The heat-coefficient pipeline: edge-cuttings of a stable graph, the
//! pointed graphs they induce, the exact rational coefficient z(G), the
//! assembly of aₙ as a formal graph sum, and the change of basis from the
//! fifteen weight-3 graphs to the independent curvature invariants.
//!
//! z(G) = (-1)^|V| 2^w / |Aut(G)| · Σ_C (-1)^m(C) φ(Γ_C) / (m(C)+w)!
//!
//! where C runs over all 2^|E| edge-cuttings of G. Cuttings over parallel
//! edges are represented as per-class cut counts weighted by binomial
//! multiplicities, which sums identically because φ only depends on the
//! counts.

use crate::digraph::{
    binomial, factorial, CanonicalForm, GraphError, MultiDigraph, PointedGraph,
};
use crate::enumerate::{enumerate_stable, EnumerationError, GraphSum};
use crate::io::graph_to_json;
use crate::phi::{phi, PhiCache};
use num::{BigInt, BigRational, BigUint, One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeatError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("pointed graph has loops at the distinguished vertex")]
    LoopsAtBullet,
    #[error("cut count {count} exceeds multiplicity {mult} of edge {u} -> {v}")]
    BadCutCount { u: usize, v: usize, count: u32, mult: u32 },
    #[error("graph sum contains a graph outside the fifteen weight-3 stable graphs")]
    NotInTauBasis,
    #[error("unknown output format {0:?}")]
    UnknownFormat(String),
}

/// Per-edge-class cut counts; entries follow the graph's edge classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cutting {
    entries: Vec<(usize, usize, u32)>,
}

impl Cutting {
    pub fn entries(&self) -> &[(usize, usize, u32)] {
        &self.entries
    }

    /// Number of edges being cut.
    pub fn cut_count(&self) -> u32 {
        self.entries.iter().map(|&(_, _, c)| c).sum()
    }
}

/// Every cut-count vector of `g` with its binomial multiplicity; the
/// multiplicities over all cuttings sum to 2^|E|.
pub fn cuttings(g: &MultiDigraph) -> Vec<(Cutting, u64)> {
    let classes: Vec<(usize, usize, u32)> = g.edge_classes().collect();
    let mut out = Vec::new();
    let mut counts = vec![0u32; classes.len()];
    fn rec(
        classes: &[(usize, usize, u32)],
        idx: usize,
        counts: &mut Vec<u32>,
        mult: u64,
        out: &mut Vec<(Cutting, u64)>,
    ) {
        if idx == classes.len() {
            let entries = classes
                .iter()
                .zip(counts.iter())
                .map(|(&(u, v, _), &c)| (u, v, c))
                .collect();
            out.push((Cutting { entries }, mult));
            return;
        }
        let (_, _, m) = classes[idx];
        for c in 0..=m {
            counts[idx] = c;
            let choose: BigUint = binomial(m as u64, c as u64);
            let choose = u64::try_from(&choose).expect("binomial of small multiplicity");
            rec(classes, idx + 1, counts, mult * choose, out);
        }
        counts[idx] = 0;
    }
    rec(&classes, 0, &mut counts, 1, &mut out);
    out
}

/// The pointed graph of a cutting: each cut copy of `u -> v` is rerouted
/// through a new vertex `•` as `u -> •`, `• -> v`. The result never has
/// loops at `•` and has matching in/out degree there.
pub fn gamma_of_cutting(
    g: &MultiDigraph,
    cuts: &[(usize, usize, u32)],
) -> Result<PointedGraph, HeatError> {
    let n = g.vertex_count();
    let mut gamma = MultiDigraph::new(n + 1);
    for (u, v, m) in g.edge_classes() {
        gamma.add_edges(u + 1, v + 1, m);
    }
    for &(u, v, c) in cuts {
        if c == 0 {
            continue;
        }
        let m = g.mult(u, v);
        if c > m {
            return Err(HeatError::BadCutCount { u, v, count: c, mult: m });
        }
        for _ in 0..c {
            gamma = gamma.delete_edge(u + 1, v + 1)?;
        }
        gamma.add_edges(u + 1, 0, c);
        gamma.add_edges(0, v + 1, c);
    }
    Ok(PointedGraph::new(gamma).expect("nonempty"))
}

/// Exact rational coefficient of a graph in its heat coefficient.
pub fn z_coefficient(g: &MultiDigraph, cache: &PhiCache) -> BigRational {
    let w = g.weight();
    let mut sum = BigRational::zero();
    for (cutting, mult) in cuttings(g) {
        let m = cutting.cut_count() as i64;
        if m + w < 0 {
            continue;
        }
        let gamma = gamma_of_cutting(g, cutting.entries()).expect("cut counts in range");
        let phi_val = phi(&gamma, cache);
        if phi_val.is_zero() {
            continue;
        }
        let sign = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let term = BigRational::new(
            sign * BigInt::from(mult) * BigInt::from(phi_val),
            BigInt::from(factorial((m + w) as u64)),
        );
        sum += term;
    }
    let v_sign = if g.vertex_count() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let front = BigRational::new(
        v_sign * BigInt::from(2u32).pow(w.max(0) as u32),
        BigInt::from(g.aut_order()),
    );
    front * sum
}

/// z via the multiplicativity over weak components:
/// z(G) = Π z(G_j) / |Sym(G_1, ..., G_k)|. Kept separate so tests can
/// compare it against the direct cutting sum.
pub fn z_multiplicative(g: &MultiDigraph, cache: &PhiCache) -> BigRational {
    let comps = g.components();
    let mut product = BigRational::one();
    let mut class_counts: BTreeMap<CanonicalForm, u64> = BTreeMap::new();
    for c in &comps {
        product *= z_coefficient(c, cache);
        *class_counts.entry(c.canonical_form().expect("small")).or_insert(0) += 1;
    }
    let mut sym = BigUint::one();
    for count in class_counts.values() {
        sym *= factorial(*count);
    }
    product / BigRational::from(BigInt::from(sym))
}

/// |Sym(G_1, ..., G_k)| for the weak components of `g`.
pub fn component_symmetry_order(g: &MultiDigraph) -> BigUint {
    let mut class_counts: BTreeMap<CanonicalForm, u64> = BTreeMap::new();
    for c in g.components() {
        *class_counts.entry(c.canonical_form().expect("small")).or_insert(0) += 1;
    }
    let mut sym = BigUint::one();
    for count in class_counts.values() {
        sym *= factorial(*count);
    }
    sym
}

/// aₙ as a formal sum over all stable graphs of weight `n`.
pub fn heat_coefficient(
    n: u32,
    cache: &PhiCache,
) -> Result<GraphSum<MultiDigraph>, EnumerationError> {
    let mut sum = GraphSum::new();
    for g in enumerate_stable(n)? {
        let z = z_coefficient(&g, cache);
        sum.add_term(&g, z).expect("enumerated graphs canonicalize");
    }
    Ok(sum)
}

/// A complete pairing of the loose ends left by removing `•`: position i
/// of the outward list is joined to position `perm[i]` of the inward
/// list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub perm: Vec<usize>,
}

/// All m! pairings of Γ's loose ends with the graph each one generates.
/// Γ must have no loops at `•`; without matching in/out degrees at `•`
/// there are no pairings.
pub fn pairings(gamma: &PointedGraph) -> Result<Vec<(Pairing, MultiDigraph)>, HeatError> {
    if gamma.bullet_loops() > 0 {
        return Err(HeatError::LoopsAtBullet);
    }
    let (out_deg, in_deg) = gamma.degrees(0).expect("bullet exists");
    if out_deg != in_deg {
        return Ok(Vec::new());
    }
    // edge u -> • leaves an outward loose end at u; • -> v an inward one
    // at v (vertex indices shift down once • is removed)
    let mut out_ends = Vec::new();
    let mut in_ends = Vec::new();
    for v in 1..gamma.vertex_count() {
        for _ in 0..gamma.mult(v, 0) {
            out_ends.push(v - 1);
        }
        for _ in 0..gamma.mult(0, v) {
            in_ends.push(v - 1);
        }
    }
    let base = gamma.without_bullet();
    let m = out_ends.len();
    let mut result = Vec::new();
    permutations(m, &mut |perm| {
        let mut g = base.clone();
        for (i, &j) in perm.iter().enumerate() {
            g.add_edges(out_ends[i], in_ends[j], 1);
        }
        result.push((Pairing { perm: perm.to_vec() }, g));
    });
    Ok(result)
}

fn permutations(m: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == m {
            f(cur);
            return;
        }
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(m, cur, used, f);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(m, &mut Vec::new(), &mut vec![false; m], f);
}

/// Checks the pairing/cutting counting identity:
/// #{P : G_P ≅ G} / |Aut(Γ)| = #{C : Γ_C ≅ Γ} / |Aut(G)|,
/// cuttings counted with their binomial multiplicities.
pub fn verify_pairing_cutting_duality(
    gamma: &PointedGraph,
    g: &MultiDigraph,
) -> Result<bool, HeatError> {
    let g_key = g.canonical_form()?;
    let mut pairing_hits = 0u64;
    for (_, generated) in pairings(gamma)? {
        if generated.canonical_form()? == g_key {
            pairing_hits += 1;
        }
    }
    let lhs = BigRational::new(BigInt::from(pairing_hits), BigInt::from(gamma.aut_order()));

    let gamma_key = gamma.canonical_form()?;
    let mut cutting_hits = 0u64;
    for (cutting, mult) in cuttings(g) {
        let gamma_c = gamma_of_cutting(g, cutting.entries())?;
        if gamma_c.canonical_form()? == gamma_key {
            cutting_hits += mult;
        }
    }
    let rhs = BigRational::new(BigInt::from(cutting_hits), BigInt::from(g.aut_order()));
    Ok(lhs == rhs)
}

/// Coefficients on the fifteen independent weight-3 curvature invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaVector(pub Vec<BigRational>);

impl SigmaVector {
    pub fn zero() -> Self {
        SigmaVector(vec![BigRational::zero(); 15])
    }
}

/// The fifteen stable graphs of weight 3, in the order their published
/// coefficients z₁..z₁₅ are listed.
pub fn tau_graphs() -> Vec<MultiDigraph> {
    let from = |n: usize, edges: &[(usize, usize, u32)]| {
        MultiDigraph::from_edges(n, edges).expect("valid literal")
    };
    vec![
        // three disjoint 2-loop vertices
        from(3, &[(0, 0, 2), (1, 1, 2), (2, 2, 2)]),
        // looped 2-cycle plus a 2-loop vertex
        from(3, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1), (2, 2, 2)]),
        // double 2-cycle plus a 2-loop vertex
        from(3, &[(0, 1, 2), (1, 0, 2), (2, 2, 2)]),
        // plain hub exchanging single edges with two looped vertices
        from(3, &[(0, 1, 1), (0, 2, 1), (1, 0, 1), (2, 0, 1), (1, 1, 1), (2, 2, 1)]),
        // looped apex over a double-edge base
        from(3, &[(0, 0, 1), (0, 2, 1), (1, 0, 1), (1, 2, 1), (2, 1, 2)]),
        // directed triangle, one loop per vertex
        from(3, &[(0, 0, 1), (1, 1, 1), (2, 2, 1), (0, 2, 1), (1, 0, 1), (2, 1, 1)]),
        // bidirected triangle
        from(3, &[(0, 1, 1), (1, 0, 1), (0, 2, 1), (2, 0, 1), (1, 2, 1), (2, 1, 1)]),
        // 2-loop vertex and 3-loop vertex
        from(2, &[(0, 0, 2), (1, 1, 3)]),
        // 1-loop and 2-loop vertices exchanging single edges
        from(2, &[(0, 0, 1), (1, 1, 2), (0, 1, 1), (1, 0, 1)]),
        // looped vertex exchanging double edges with a plain vertex
        from(2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2)]),
        // 2-loop vertex feeding a 2-loop vertex
        from(2, &[(0, 0, 2), (1, 1, 2), (0, 1, 1)]),
        // looped 2-cycle with one side doubled
        from(2, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 2)]),
        // plain 2-cycle with multiplicities 3 and 2
        from(2, &[(0, 1, 3), (1, 0, 2)]),
        // single vertex with four loops
        from(1, &[(0, 0, 4)]),
        // directed triangle with doubled edges
        from(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)]),
    ]
}

/// τ → σ change of basis, published alongside the σ list; row i gives τ_i
/// in the σ basis.
const TAU_TO_SIGMA: [[i64; 15]; 15] = [
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -2, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -2, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, -3, -12, -3, 6, 0, 7, 8, 0, 10, 3, -1, -6],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
];

/// Row i of the published τ → σ table (0-based).
pub fn tau_to_sigma_table() -> &'static [[i64; 15]; 15] {
    &TAU_TO_SIGMA
}

/// Converts a weight-3 graph sum to σ-basis coefficients.
pub fn tau_to_sigma(a3: &GraphSum<MultiDigraph>) -> Result<SigmaVector, HeatError> {
    let keys: Vec<CanonicalForm> = tau_graphs()
        .iter()
        .map(|g| g.canonical_form().expect("literal graphs are small"))
        .collect();
    let mut out = SigmaVector::zero();
    for (key, _, coeff) in a3.iter() {
        let Some(i) = keys.iter().position(|k| k == key) else {
            return Err(HeatError::NotInTauBasis);
        };
        for (j, &entry) in TAU_TO_SIGMA[i].iter().enumerate() {
            if entry != 0 {
                out.0[j] += coeff * BigRational::from(BigInt::from(entry));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Json,
    Latex,
}

impl std::str::FromStr for RenderFormat {
    type Err = HeatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "json" => Ok(RenderFormat::Json),
            "latex" => Ok(RenderFormat::Latex),
            other => Err(HeatError::UnknownFormat(other.to_string())),
        }
    }
}

/// Index letters used when printing a graph as a contracted tensor
/// monomial.
const INDEX_LETTERS: [char; 14] =
    ['i', 'j', 'k', 'l', 'm', 'n', 'p', 'q', 'r', 's', 't', 'u', 'v', 'w'];

/// A graph as a product of metric-jet factors: each vertex becomes one
/// `g_{...}` with an unbarred letter per out-edge and a barred letter per
/// in-edge; shared letters encode the contractions. Loops list their
/// letter pair first.
fn tensor_monomial(g: &MultiDigraph, latex: bool) -> String {
    // assign one letter per edge copy, classes in row-major order
    let mut letters: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    let mut next = 0usize;
    for (u, v, m) in g.edge_classes() {
        let mut slot = Vec::new();
        for _ in 0..m {
            slot.push(INDEX_LETTERS[next % INDEX_LETTERS.len()]);
            next += 1;
        }
        letters.insert((u, v), slot);
    }
    let bar = |c: char| {
        if latex {
            format!("\\bar {c}")
        } else {
            format!("{c}bar")
        }
    };
    let mut factors = Vec::new();
    for v in 0..g.vertex_count() {
        let mut indices: Vec<String> = Vec::new();
        if let Some(ls) = letters.get(&(v, v)) {
            for &c in ls {
                indices.push(c.to_string());
                indices.push(bar(c));
            }
        }
        for ((a, b), ls) in &letters {
            if *a == v && *b != v {
                for &c in ls {
                    indices.push(c.to_string());
                }
            }
        }
        for ((a, b), ls) in &letters {
            if *b == v && *a != v {
                for &c in ls {
                    indices.push(bar(c));
                }
            }
        }
        if latex {
            factors.push(format!("g_{{{}}}", indices.join("")));
        } else {
            factors.push(format!("g_{{{}}}", indices.join(" ")));
        }
    }
    factors.join(if latex { "" } else { " " })
}

fn rational_latex(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        let sign = if r.numer().sign() == num::bigint::Sign::Minus { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    }
}

/// Deterministic rendering of a graph sum.
pub fn render_graph_sum(sum: &GraphSum<MultiDigraph>, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => {
            if sum.is_empty() {
                return "0".into();
            }
            sum.iter()
                .map(|(_, g, c)| format!("{} {}", c, tensor_monomial(g, false)))
                .collect::<Vec<_>>()
                .join(" + ")
        }
        RenderFormat::Latex => {
            if sum.is_empty() {
                return "0".into();
            }
            let mut out = String::new();
            for (i, (_, g, c)) in sum.iter().enumerate() {
                let piece = format!("{} {}", rational_latex(c), tensor_monomial(g, true));
                if i > 0 && !piece.starts_with('-') {
                    out.push_str(" + ");
                } else if i > 0 {
                    out.push(' ');
                }
                out.push_str(&piece);
            }
            out
        }
        RenderFormat::Json => {
            let weight = sum.iter().next().map(|(_, g, _)| g.weight()).unwrap_or(0);
            let terms: Vec<serde_json::Value> = sum
                .iter()
                .map(|(key, g, c)| {
                    serde_json::json!({
                        "graph": serde_json::from_str::<serde_json::Value>(
                            &graph_to_json(g, false)
                        )
                        .expect("valid json"),
                        "canonical": key.to_string(),
                        "z": c.to_string(),
                    })
                })
                .collect();
            serde_json::json!({ "weight": weight, "terms": terms }).to_string()
        }
    }
}

pub fn render_sigma_vector(v: &SigmaVector, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => {
            let terms: Vec<String> = v
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{} sigma_{}", c, i + 1))
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        }
        RenderFormat::Latex => {
            let terms: Vec<String> = v
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{} \\sigma_{{{}}}", rational_latex(c), i + 1))
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        }
        RenderFormat::Json => {
            let coeffs: Vec<String> = v.0.iter().map(|c| c.to_string()).collect();
            serde_json::json!({ "sigma": coeffs }).to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::FromPrimitive;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cutting_mass_is_two_to_the_edges() {
        let graphs = [
            MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap(),
            MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 2)]).unwrap(),
            MultiDigraph::new(1),
        ];
        for g in graphs {
            let total: u64 = cuttings(&g).iter().map(|(_, m)| m).sum();
            assert_eq!(total, 1u64 << g.edge_count());
        }
    }

    #[test]
    fn cutting_counts_for_two_loops() {
        let g = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        let cs = cuttings(&g);
        assert_eq!(cs.len(), 3);
        let mut by_count: Vec<(u32, u64)> =
            cs.iter().map(|(c, m)| (c.cut_count(), *m)).collect();
        by_count.sort();
        assert_eq!(by_count, vec![(0, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn gamma_examples() {
        let g = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        // cut one of two loops: looped vertex exchanging single edges with •
        let gamma = gamma_of_cutting(&g, &[(0, 0, 1)]).unwrap();
        assert_eq!(gamma.bullet_loops(), 0);
        assert_eq!(gamma.mult(1, 1), 1);
        assert_eq!(gamma.mult(1, 0), 1);
        assert_eq!(gamma.mult(0, 1), 1);
        // empty cutting: isolated •
        let isolated = gamma_of_cutting(&g, &[]).unwrap();
        assert!(!isolated.is_strongly_connected());
        assert!(gamma_of_cutting(&g, &[(0, 0, 3)]).is_err());
    }

    #[test]
    fn z_of_weight_one_graph() {
        let cache = PhiCache::new();
        let g = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        assert_eq!(z_coefficient(&g, &cache), rational(-1, 3));
    }

    #[test]
    fn z_of_weight_two_graphs() {
        let cache = PhiCache::new();
        let double = MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 2)]).unwrap();
        assert_eq!(z_coefficient(&double, &cache), rational(7, 45));
        let looped = MultiDigraph::from_edges(2, &[(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1)])
            .unwrap();
        assert_eq!(z_coefficient(&looped, &cache), rational(23, 90));
    }

    #[test]
    fn empty_cutting_contributes_nothing() {
        // for any graph with a vertex, the uncut term has a disconnected •
        let cache = PhiCache::new();
        for g in enumerate_stable(2).unwrap() {
            let gamma = gamma_of_cutting(&g, &[]).unwrap();
            assert_eq!(phi(&gamma, &cache), BigUint::zero());
        }
    }

    #[test]
    fn heavier_coefficients_via_multiplicativity() {
        let cache = PhiCache::new();
        let tau1 = &tau_graphs()[0];
        assert_eq!(z_coefficient(tau1, &cache), rational(-1, 162));
        assert_eq!(z_multiplicative(tau1, &cache), rational(-1, 162));
        assert_eq!(component_symmetry_order(tau1), BigUint::from_u64(6).unwrap());
    }

    #[test]
    fn pairings_of_double_cut() {
        let gamma = PointedGraph::from_edges(2, &[(1, 0, 2), (0, 1, 2)]).unwrap();
        let ps = pairings(&gamma).unwrap();
        assert_eq!(ps.len(), 2);
        for (_, g) in &ps {
            assert_eq!(g.loops(0), 2);
        }
        // 𝔪 = 0: single empty pairing peeling off •
        let lonely = PointedGraph::from_edges(2, &[(1, 1, 2)]).unwrap();
        let ps = pairings(&lonely).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].1, MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap());
        assert!(pairings(&PointedGraph::bullet(1)).is_err());
    }

    #[test]
    fn duality_example() {
        let gamma = PointedGraph::from_edges(2, &[(1, 0, 2), (0, 1, 2)]).unwrap();
        let g = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        assert!(verify_pairing_cutting_duality(&gamma, &g).unwrap());
        // mismatched weights: both sides zero
        let g3 = MultiDigraph::from_edges(1, &[(0, 0, 3)]).unwrap();
        assert!(verify_pairing_cutting_duality(&gamma, &g3).unwrap());
    }

    #[test]
    fn tau_graphs_are_the_weight_three_classes() {
        let taus = tau_graphs();
        assert_eq!(taus.len(), 15);
        let mut keys: Vec<CanonicalForm> =
            taus.iter().map(|g| g.canonical_form().unwrap()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 15);
        let enumerated: Vec<CanonicalForm> = enumerate_stable(3)
            .unwrap()
            .iter()
            .map(|g| g.canonical_form().unwrap())
            .collect();
        for key in &keys {
            assert!(enumerated.contains(key));
        }
        for g in &taus {
            assert!(g.is_stable());
            assert_eq!(g.weight(), 3);
        }
    }

    #[test]
    fn tau_to_sigma_single_term() {
        let mut sum = GraphSum::new();
        sum.add_term(&tau_graphs()[0], BigRational::one()).unwrap();
        let v = tau_to_sigma(&sum).unwrap();
        assert_eq!(v.0[0], rational(-1, 1));
        assert!(v.0[1..].iter().all(|c| c.is_zero()));

        assert_eq!(tau_to_sigma(&GraphSum::new()).unwrap(), SigmaVector::zero());

        let mut bad = GraphSum::new();
        bad.add_term(&MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap(), BigRational::one())
            .unwrap();
        assert!(matches!(tau_to_sigma(&bad), Err(HeatError::NotInTauBasis)));
    }

    #[test]
    fn render_weight_one() {
        let cache = PhiCache::new();
        let a1 = heat_coefficient(1, &cache).unwrap();
        assert_eq!(render_graph_sum(&a1, RenderFormat::Text), "-1/3 g_{i ibar j jbar}");
        assert_eq!(
            render_graph_sum(&a1, RenderFormat::Latex),
            "-\\frac{1}{3} g_{i\\bar ij\\bar j}"
        );
        let json: serde_json::Value =
            serde_json::from_str(&render_graph_sum(&a1, RenderFormat::Json)).unwrap();
        assert_eq!(json["weight"], 1);
        assert_eq!(json["terms"][0]["z"], "-1/3");
        assert_eq!(render_graph_sum(&GraphSum::new(), RenderFormat::Text), "0");
    }
}
