//! Polynomial Kähler potentials in normal form and the evaluation of
//! graphs and curvature invariants on them.
//!
//! A potential is Σ z_i z̄_i plus monomials of bidegree (p, q) with
//! p, q >= 2 and total degree <= N, with Hermitian coefficients so the
//! function is real. In these coordinates the metric is the identity at
//! the origin and all purely unbarred (or purely barred) derivatives of g
//! vanish there, so contracting an index pair is plain index
//! identification when evaluating at the origin.

use crate::digraph::{MultiDigraph, PointedGraph};
use crate::enumerate::GraphSum;
use crate::jets::{GaussianRational, Jet, JetError};
use crate::tensor::{
    box_scalar, christoffels, christoffels_bar, covariant_derivative_z,
    covariant_derivative_zbar, curvature, inverse_metric_jets, metric_jets, ricci,
    scalar_curvature, TensorJet,
};
use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PotentialError {
    #[error("dimension must be >= 1")]
    BadDimension,
    #[error("truncation order must be >= 4")]
    BadOrder,
    #[error("monomial has bidegree ({p},{q}); needs p,q >= 2 and degree <= {max}")]
    BadMonomial { p: u32, q: u32, max: u32 },
    #[error("coefficients are not Hermitian: coeff(beta,alpha) != conj(coeff(alpha,beta))")]
    NotHermitian,
    #[error("potential parse error: {0}")]
    Parse(String),
}

/// Real polynomial Kähler potential in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerPotential {
    d: usize,
    order: u32,
    jet: Jet,
}

impl KahlerPotential {
    /// Σ z_i z̄_i only; everything curved vanishes.
    pub fn flat(d: usize, order: u32) -> Result<Self, PotentialError> {
        KahlerPotential::from_monomials(d, order, &[])
    }

    /// Quadratic part plus the given higher monomials (literal
    /// coefficients; the set must already be Hermitian).
    pub fn from_monomials(
        d: usize,
        order: u32,
        monomials: &[(Vec<u8>, Vec<u8>, GaussianRational)],
    ) -> Result<Self, PotentialError> {
        if d == 0 {
            return Err(PotentialError::BadDimension);
        }
        if order < 4 {
            return Err(PotentialError::BadOrder);
        }
        let mut jet = Jet::zero(d);
        for i in 0..d {
            let mut alpha = vec![0u8; d];
            let mut beta = vec![0u8; d];
            alpha[i] = 1;
            beta[i] = 1;
            jet = &jet + &Jet::monomial(d, &alpha, &beta, GaussianRational::one());
        }
        for (alpha, beta, c) in monomials {
            let p: u32 = alpha.iter().map(|&a| a as u32).sum();
            let q: u32 = beta.iter().map(|&b| b as u32).sum();
            if p < 2 || q < 2 || p + q > order {
                return Err(PotentialError::BadMonomial { p, q, max: order });
            }
            jet = &jet + &Jet::monomial(d, alpha, beta, c.clone());
        }
        if !jet.is_hermitian() {
            return Err(PotentialError::NotHermitian);
        }
        // The jet represents a function known to order N; marking the
        // truncation here makes every downstream computation refuse to
        // read derivatives the potential does not determine.
        let jet = jet.truncated(order as i64);
        Ok(KahlerPotential { d, order, jet })
    }

    /// Deterministic random potential: every admissible bidegree gets a
    /// coefficient with numerator in [-3, 3] and denominator in {1, 2},
    /// Hermitian by construction.
    pub fn random(d: usize, order: u32, seed: u64) -> Result<Self, PotentialError> {
        if d == 0 {
            return Err(PotentialError::BadDimension);
        }
        if order < 4 {
            return Err(PotentialError::BadOrder);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |allow_imaginary: bool| {
            let numer = rng.gen_range(-3i64..=3);
            let denom = if rng.gen_bool(0.5) { 1 } else { 2 };
            let re = BigRational::new(BigInt::from(numer), BigInt::from(denom));
            let im = if allow_imaginary {
                let numer = rng.gen_range(-3i64..=3);
                let denom = if rng.gen_bool(0.5) { 1 } else { 2 };
                BigRational::new(BigInt::from(numer), BigInt::from(denom))
            } else {
                BigRational::zero()
            };
            GaussianRational::new(re, im)
        };
        let mut monomials = Vec::new();
        for alpha in multi_indices(d, order) {
            for beta in multi_indices(d, order) {
                let p: u32 = alpha.iter().map(|&a| a as u32).sum();
                let q: u32 = beta.iter().map(|&b| b as u32).sum();
                if p < 2 || q < 2 || p + q > order {
                    continue;
                }
                // one draw per unordered conjugate pair
                if alpha < beta {
                    continue;
                }
                if alpha == beta {
                    monomials.push((alpha.clone(), beta.clone(), draw(false)));
                } else {
                    let c = draw(true);
                    monomials.push((alpha.clone(), beta.clone(), c.clone()));
                    monomials.push((beta.clone(), alpha.clone(), c.conj()));
                }
            }
        }
        KahlerPotential::from_monomials(d, order, &monomials)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Declared truncation order N; derivatives beyond it are refused
    /// rather than silently read as zero.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn jet(&self) -> &Jet {
        &self.jet
    }

    /// (∂^α ∂̄^β φ)(0), guarded by the declared order.
    pub fn deriv_at_zero(&self, alpha: &[u8], beta: &[u8]) -> Result<GaussianRational, JetError> {
        let needed: i64 = alpha.iter().map(|&a| a as i64).sum::<i64>()
            + beta.iter().map(|&b| b as i64).sum::<i64>();
        if needed > self.order as i64 {
            return Err(JetError::TruncationTooLow { needed, available: self.order as i64 });
        }
        self.jet.deriv_at_zero(alpha, beta)
    }

    /// Sum over index assignments to the edges of `g` of the product over
    /// vertices of the matching potential derivative at the origin. Each
    /// edge contributes an unbarred derivative at its source and a barred
    /// one at its target.
    pub fn evaluate_graph(&self, g: &MultiDigraph) -> Result<GaussianRational, JetError> {
        self.evaluate_contraction(g, None, None)
    }

    /// A pointed graph acting as a differential operator on `f`,
    /// evaluated at the origin: `•` contributes derivatives of `f`, the
    /// ordinary vertices derivatives of the potential.
    pub fn apply_pointed_graph(
        &self,
        gamma: &PointedGraph,
        f: &Jet,
    ) -> Result<GaussianRational, JetError> {
        self.evaluate_contraction(gamma.graph(), Some(0), Some(f))
    }

    fn evaluate_contraction(
        &self,
        g: &MultiDigraph,
        special: Option<usize>,
        f: Option<&Jet>,
    ) -> Result<GaussianRational, JetError> {
        let n = g.vertex_count();
        let mut copies: Vec<(usize, usize)> = Vec::new();
        for (u, v, m) in g.edge_classes() {
            for _ in 0..m {
                copies.push((u, v));
            }
        }
        // per-vertex derivative order never exceeds the declared N
        for v in 0..n {
            if Some(v) == special {
                continue;
            }
            let (o, i) = g.degrees(v).expect("vertex in range");
            let needed = (o + i) as i64;
            if needed > self.order as i64 {
                return Err(JetError::TruncationTooLow {
                    needed,
                    available: self.order as i64,
                });
            }
        }
        let e = copies.len();
        let mut assignment = vec![0usize; e];
        let mut total = GaussianRational::zero();
        loop {
            let mut alphas = vec![vec![0u8; self.d]; n];
            let mut betas = vec![vec![0u8; self.d]; n];
            for (c, &(u, v)) in copies.iter().enumerate() {
                alphas[u][assignment[c]] += 1;
                betas[v][assignment[c]] += 1;
            }
            let mut term = GaussianRational::one();
            for v in 0..n {
                if term.is_zero() {
                    break;
                }
                let factor = if Some(v) == special {
                    f.expect("operand supplied").deriv_at_zero(&alphas[v], &betas[v])?
                } else {
                    self.jet.deriv_at_zero(&alphas[v], &betas[v])?
                };
                term = &term * &factor;
            }
            total += &term;
            // next assignment in mixed radix d^e
            let mut pos = 0;
            loop {
                if pos == e {
                    return Ok(total);
                }
                assignment[pos] += 1;
                if assignment[pos] < self.d {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    }
}

fn multi_indices(d: usize, max_total: u32) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; d];
    fn rec(d: usize, idx: usize, left: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if idx == d {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left.min(u8::MAX as u32) {
            cur[idx] = e as u8;
            rec(d, idx + 1, left - e, cur, out);
        }
        cur[idx] = 0;
    }
    rec(d, 0, max_total, &mut cur, &mut out);
    out
}

/// Reproducible potential file: {"d": .., "N": .., "monomials": [..]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub d: usize,
    #[serde(rename = "N")]
    pub order: u32,
    pub monomials: Vec<MonomialSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialSpec {
    pub alpha: Vec<u8>,
    pub beta: Vec<u8>,
    pub re: String,
    pub im: String,
}

impl KahlerPotential {
    pub fn to_spec(&self) -> PotentialSpec {
        let mut monomials = Vec::new();
        for (mono, c) in self.jet.terms() {
            let (alpha, beta) = mono.split_at(self.d);
            let p: u32 = alpha.iter().map(|&a| a as u32).sum();
            let q: u32 = beta.iter().map(|&b| b as u32).sum();
            if p < 2 || q < 2 {
                continue; // the quadratic part is implied
            }
            monomials.push(MonomialSpec {
                alpha: alpha.to_vec(),
                beta: beta.to_vec(),
                re: c.re.to_string(),
                im: c.im.to_string(),
            });
        }
        PotentialSpec { d: self.d, order: self.order, monomials }
    }

    pub fn from_spec(spec: &PotentialSpec) -> Result<Self, PotentialError> {
        let monomials: Result<Vec<_>, PotentialError> = spec
            .monomials
            .iter()
            .map(|m| {
                let re = m
                    .re
                    .parse::<BigRational>()
                    .map_err(|e| PotentialError::Parse(format!("re {:?}: {e}", m.re)))?;
                let im = m
                    .im
                    .parse::<BigRational>()
                    .map_err(|e| PotentialError::Parse(format!("im {:?}: {e}", m.im)))?;
                Ok((m.alpha.clone(), m.beta.clone(), GaussianRational::new(re, im)))
            })
            .collect();
        KahlerPotential::from_monomials(spec.d, spec.order, &monomials?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, PotentialError> {
        let spec: PotentialSpec =
            serde_json::from_str(s).map_err(|e| PotentialError::Parse(e.to_string()))?;
        KahlerPotential::from_spec(&spec)
    }
}

/// Shared curvature jets of one potential: metric, inverse, Christoffels,
/// curvature tensor, Ricci and scalar curvature.
#[derive(Debug, Clone)]
pub struct CurvatureCtx {
    pub d: usize,
    pub g: TensorJet,
    pub ginv: TensorJet,
    pub gamma: TensorJet,
    pub gamma_bar: TensorJet,
    pub riemann: TensorJet,
    pub ricci: TensorJet,
    pub rho: Jet,
}

impl CurvatureCtx {
    pub fn new(potential: &KahlerPotential) -> Self {
        // the inverse-metric series only needs to match the deepest
        // consumer, ρ to order N-4 (for the iterated Laplacian of ρ)
        let trunc = (potential.order() as i64 - 4).max(0);
        let g = metric_jets(potential.jet());
        let ginv = inverse_metric_jets(&g, trunc);
        let gamma = christoffels(&g, &ginv);
        let gamma_bar = christoffels_bar(&gamma);
        let riemann = curvature(&g, &ginv);
        let ric = ricci(&riemann, &ginv);
        let rho = scalar_curvature(&ric, &ginv);
        CurvatureCtx {
            d: potential.dim(),
            g,
            ginv,
            gamma,
            gamma_bar,
            riemann,
            ricci: ric,
            rho,
        }
    }

    pub fn box_scalar(&self, f: &Jet) -> Jet {
        box_scalar(f, &self.ginv)
    }

    fn riemann_at_zero(&self) -> Result<Flat4, JetError> {
        Ok(Flat4 { d: self.d, vals: self.riemann.values_at_zero()? })
    }

    fn ricci_at_zero(&self) -> Result<Flat2, JetError> {
        Ok(Flat2 { d: self.d, vals: self.ricci.values_at_zero()? })
    }
}

struct Flat2 {
    d: usize,
    vals: Vec<GaussianRational>,
}

impl Flat2 {
    fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.vals[i * self.d + j]
    }
}

struct Flat4 {
    d: usize,
    vals: Vec<GaussianRational>,
}

impl Flat4 {
    fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &GaussianRational {
        &self.vals[((i * self.d + j) * self.d + k) * self.d + l]
    }
}

/// The k-th of the fifteen weight-3 curvature invariants at the origin
/// (1-based, following the published list: ρ³ through the cubic
/// curvature contraction).
pub fn evaluate_sigma(k: usize, ctx: &CurvatureCtx) -> Result<GaussianRational, JetError> {
    assert!((1..=15).contains(&k), "sigma index out of range");
    let d = ctx.d;
    let rho0 = ctx.rho.value_at_zero()?;
    match k {
        1 => Ok(&(&rho0 * &rho0) * &rho0),
        2 => {
            let ric = ctx.ricci_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    acc += &(ric.get(i, j) * ric.get(j, i));
                }
            }
            Ok(&rho0 * &acc)
        }
        3 => {
            let r = ctx.riemann_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            acc += &(r.get(i, j, k2, l) * r.get(j, i, l, k2));
                        }
                    }
                }
            }
            Ok(&rho0 * &acc)
        }
        4 => {
            let ric = ctx.ricci_at_zero()?;
            let r = ctx.riemann_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            acc += &(&(ric.get(i, j) * ric.get(k2, l)) * r.get(j, i, l, k2));
                        }
                    }
                }
            }
            Ok(acc)
        }
        5 => {
            let ric = ctx.ricci_at_zero()?;
            let r = ctx.riemann_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            for m in 0..d {
                                acc += &(&(ric.get(i, j) * r.get(k2, i, l, m))
                                    * r.get(j, k2, m, l));
                            }
                        }
                    }
                }
            }
            Ok(acc)
        }
        6 => {
            let ric = ctx.ricci_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        acc += &(&(ric.get(i, j) * ric.get(j, k2)) * ric.get(k2, i));
                    }
                }
            }
            Ok(acc)
        }
        7 => {
            let r = ctx.riemann_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            for m in 0..d {
                                for n in 0..d {
                                    acc += &(&(r.get(i, j, k2, l) * r.get(j, i, m, n))
                                        * r.get(l, k2, n, m));
                                }
                            }
                        }
                    }
                }
            }
            Ok(acc)
        }
        8 => {
            let boxrho = ctx.box_scalar(&ctx.rho);
            Ok(&rho0 * &boxrho.value_at_zero()?)
        }
        9 => {
            let ric = ctx.ricci_at_zero()?;
            let cd = covariant_derivative_zbar(
                &covariant_derivative_z(&ctx.ricci.truncated(2), &ctx.gamma),
                &ctx.gamma_bar,
            );
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        acc += &(ric.get(i, j) * &cd.get(&[j, i, k2, k2]).value_at_zero()?);
                    }
                }
            }
            Ok(acc)
        }
        10 => {
            let r = ctx.riemann_at_zero()?;
            let cd = covariant_derivative_zbar(
                &covariant_derivative_z(&ctx.riemann.truncated(2), &ctx.gamma),
                &ctx.gamma_bar,
            );
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            for m in 0..d {
                                acc += &(r.get(i, j, k2, l)
                                    * &cd.get(&[j, i, l, k2, m, m]).value_at_zero()?);
                            }
                        }
                    }
                }
            }
            Ok(acc)
        }
        11 => {
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                let a = ctx.rho.diff_z(i).value_at_zero()?;
                let b = ctx.rho.diff_zbar(i).value_at_zero()?;
                acc += &(&a * &b);
            }
            Ok(acc)
        }
        12 => {
            let cdz = covariant_derivative_z(&ctx.ricci.truncated(1), &ctx.gamma);
            let cdzb = covariant_derivative_zbar(&ctx.ricci.truncated(1), &ctx.gamma_bar);
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        acc += &(&cdz.get(&[i, j, k2]).value_at_zero()?
                            * &cdzb.get(&[j, i, k2]).value_at_zero()?);
                    }
                }
            }
            Ok(acc)
        }
        13 => {
            let cdz = covariant_derivative_z(&ctx.riemann.truncated(1), &ctx.gamma);
            let cdzb = covariant_derivative_zbar(&ctx.riemann.truncated(1), &ctx.gamma_bar);
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            for m in 0..d {
                                acc += &(&cdz.get(&[i, j, k2, l, m]).value_at_zero()?
                                    * &cdzb.get(&[j, i, l, k2, m]).value_at_zero()?);
                            }
                        }
                    }
                }
            }
            Ok(acc)
        }
        14 => {
            let boxrho = ctx.box_scalar(&ctx.rho);
            ctx.box_scalar(&boxrho).value_at_zero()
        }
        15 => {
            let r = ctx.riemann_at_zero()?;
            let mut acc = GaussianRational::zero();
            for i in 0..d {
                for j in 0..d {
                    for k2 in 0..d {
                        for l in 0..d {
                            for m in 0..d {
                                for n in 0..d {
                                    acc += &(&(r.get(i, j, k2, l) * r.get(j, m, l, n))
                                        * r.get(m, i, n, k2));
                                }
                            }
                        }
                    }
                }
            }
            Ok(acc)
        }
        _ => unreachable!(),
    }
}

/// Applies a formal sum of pointed graphs to `f` at the origin.
pub fn apply_graph_operator_sum(
    sum: &GraphSum<PointedGraph>,
    potential: &KahlerPotential,
    f: &Jet,
) -> Result<GaussianRational, JetError> {
    let mut total = GaussianRational::zero();
    for (_, gamma, coeff) in sum.iter() {
        let value = potential.apply_pointed_graph(gamma, f)?;
        total += &value.scaled(coeff);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::ToPrimitive;

    fn quartic_1d() -> KahlerPotential {
        KahlerPotential::from_monomials(
            1,
            4,
            &[(vec![2], vec![2], GaussianRational::one())],
        )
        .unwrap()
    }

    #[test]
    fn constructors_enforce_normal_form() {
        assert!(KahlerPotential::flat(0, 8).is_err());
        assert!(KahlerPotential::flat(1, 2).is_err());
        // bidegree (1,3) is not allowed
        assert!(KahlerPotential::from_monomials(
            1,
            4,
            &[(vec![1], vec![3], GaussianRational::one())]
        )
        .is_err());
        // non-Hermitian pair rejected
        assert!(KahlerPotential::from_monomials(
            1,
            6,
            &[(vec![3], vec![2], GaussianRational::one())]
        )
        .is_err());
    }

    #[test]
    fn random_potentials_are_valid_and_deterministic() {
        for d in 1..=2 {
            let a = KahlerPotential::random(d, 6, 42).unwrap();
            let b = KahlerPotential::random(d, 6, 42).unwrap();
            assert_eq!(a, b);
            assert!(a.jet().is_hermitian());
            let c = KahlerPotential::random(d, 6, 43).unwrap();
            assert_ne!(a, c);
        }
    }

    #[test]
    fn spec_round_trip() {
        let p = KahlerPotential::random(2, 6, 7).unwrap();
        let json = p.to_json();
        let back = KahlerPotential::from_json(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn quartic_graph_value() {
        let p = quartic_1d();
        let a1_graph = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        assert_eq!(p.evaluate_graph(&a1_graph).unwrap(), GaussianRational::from_int(4));
    }

    #[test]
    fn flat_potential_kills_stable_graphs() {
        let p = KahlerPotential::flat(2, 8).unwrap();
        for g in crate::enumerate::enumerate_stable(2).unwrap() {
            assert!(p.evaluate_graph(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn disconnected_graphs_factor() {
        let p = KahlerPotential::random(2, 8, 11).unwrap();
        let a = MultiDigraph::from_edges(1, &[(0, 0, 2)]).unwrap();
        let b = MultiDigraph::from_edges(1, &[(0, 0, 3)]).unwrap();
        let union = a.disjoint_union(&b);
        let va = p.evaluate_graph(&a).unwrap();
        let vb = p.evaluate_graph(&b).unwrap();
        assert_eq!(p.evaluate_graph(&union).unwrap(), &va * &vb);
    }

    #[test]
    fn truncation_is_detected() {
        let p = quartic_1d();
        let four_loops = MultiDigraph::from_edges(1, &[(0, 0, 4)]).unwrap();
        assert!(matches!(
            p.evaluate_graph(&four_loops),
            Err(JetError::TruncationTooLow { .. })
        ));
    }

    #[test]
    fn sigma_one_on_quartic() {
        let p = quartic_1d();
        let ctx = CurvatureCtx::new(&p);
        // ρ(0) = -4 so ρ³ = -64
        let v = evaluate_sigma(1, &ctx).unwrap();
        assert_eq!(v.re.to_integer().to_i64(), Some(-64));
        assert!(v.is_real());
    }

    #[test]
    fn sigmas_vanish_flat() {
        let p = KahlerPotential::flat(2, 8).unwrap();
        let ctx = CurvatureCtx::new(&p);
        for k in 1..=15 {
            assert!(evaluate_sigma(k, &ctx).unwrap().is_zero(), "sigma_{k}");
        }
    }

    #[test]
    fn sigmas_are_real_rationals() {
        let p = KahlerPotential::random(2, 8, 3).unwrap();
        let ctx = CurvatureCtx::new(&p);
        for k in 1..=15 {
            let v = evaluate_sigma(k, &ctx).unwrap();
            assert!(v.is_real(), "sigma_{k} = {v}");
        }
    }
}
