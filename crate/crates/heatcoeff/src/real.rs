//! Realification: the Riemannian metric on R^{2d} underlying a Kähler
//! potential, its curvature, and the invariants used to cross-check the
//! complex side.
//!
//! The line element is 2 g_{ij̄} dz_i dz̄_j with z_j = x_j + i y_j, so in
//! coordinates (x_1..x_d, y_1..y_d) the metric is
//!
//!   G = 2 [[A, B], [-B, A]],  A = Re g, B = Im g,
//!
//! which is 2·Id at the origin (dist² = 2|z|² there). Everything here is
//! computed from G alone: real Christoffels, Riemann tensor, Ricci,
//! scalar curvature and the Laplace-Beltrami operator, so the appendix
//! identities are tested through an independent pipeline.

use crate::jets::{GaussianRational, Jet, JetError};
use crate::kahler::KahlerPotential;
use crate::tensor::metric_jets;
use num::{BigInt, BigRational, Zero};

/// Real-side curvature values at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInvariants {
    /// Scalar curvature P(0).
    pub scalar: GaussianRational,
    /// |Ric|²(0), indices raised with the real metric.
    pub ricci_norm2: GaussianRational,
    /// |R|²(0), all four indices raised.
    pub riemann_norm2: GaussianRational,
    /// Laplace-Beltrami of the scalar curvature at 0 (spectral sign
    /// convention), when requested.
    pub laplacian_scalar: Option<GaussianRational>,
}

/// Dense real tensor: indices run over the 2d real coordinates, entries
/// are jets in (x, y).
#[derive(Debug, Clone)]
struct RealTensor {
    m: usize,
    rank: usize,
    comps: Vec<Jet>,
}

impl RealTensor {
    fn zeros(m: usize, rank: usize, dim: usize) -> Self {
        RealTensor { m, rank, comps: vec![Jet::zero(dim); m.pow(rank as u32)] }
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| acc * self.m + i)
    }

    fn get(&self, idx: &[usize]) -> &Jet {
        &self.comps[self.flat(idx)]
    }

    fn set(&mut self, idx: &[usize], jet: Jet) {
        let flat = self.flat(idx);
        self.comps[flat] = jet;
    }
}

/// Substitutes z_j = x_j + i y_j, z̄_j = x_j - i y_j; the resulting jet
/// reads its slots as (x_1..x_d, y_1..y_d).
pub fn realify(jet: &Jet) -> Jet {
    let d = jet.dim();
    let mut out = Jet::zero(d);
    for (mono, c) in jet.terms() {
        let (alpha, beta) = mono.split_at(d);
        let mut term = Jet::constant(d, c.clone());
        for i in 0..d {
            let mut x = vec![0u8; d];
            x[i] = 1;
            let xi = Jet::monomial(d, &x, &vec![0u8; d], GaussianRational::one());
            let yi = Jet::monomial(d, &vec![0u8; d], &x, GaussianRational::one());
            let z = &xi + &yi.scale(&GaussianRational::i());
            let zbar = &xi - &yi.scale(&GaussianRational::i());
            for _ in 0..alpha[i] {
                term = &term * &z;
            }
            for _ in 0..beta[i] {
                term = &term * &zbar;
            }
        }
        out = &out + &term;
    }
    // substitution preserves the total degree, so the validity order
    // carries over
    out.truncated(jet.order())
}

/// The real metric G; entries are jets with real coefficients.
fn real_metric(potential: &KahlerPotential) -> RealTensor {
    let d = potential.dim();
    let g = metric_jets(potential.jet());
    let half = GaussianRational::from_rational(BigRational::new(
        BigInt::from(1),
        BigInt::from(2),
    ));
    let minus_half_i = GaussianRational::new(
        BigRational::zero(),
        BigRational::new(BigInt::from(-1), BigInt::from(2)),
    );
    let two = GaussianRational::from_int(2);
    let mut a = Vec::with_capacity(d * d);
    let mut b = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let r = realify(g.get(&[i, j]));
            let conj = r.conj_coefficients();
            a.push((&(&r + &conj).scale(&half)).clone());
            b.push((&(&r - &conj).scale(&minus_half_i)).clone());
        }
    }
    let m = 2 * d;
    let mut metric = RealTensor::zeros(m, 2, d);
    for i in 0..d {
        for j in 0..d {
            metric.set(&[i, j], a[i * d + j].scale(&two));
            metric.set(&[d + i, d + j], a[i * d + j].scale(&two));
            metric.set(&[i, d + j], b[i * d + j].scale(&two));
            metric.set(&[d + i, j], -&b[j * d + i].scale(&two));
        }
    }
    metric
}

/// Inverse by Neumann series around 2·Id, valid to `order`.
fn real_inverse(metric: &RealTensor, d: usize, order: i64) -> RealTensor {
    let m = metric.m;
    let half = GaussianRational::from_rational(BigRational::new(
        BigInt::from(1),
        BigInt::from(2),
    ));
    // G = 2(I + K)
    let mut k = vec![vec![Jet::zero(d); m]; m];
    let mut min_deg = u32::MAX;
    for i in 0..m {
        for j in 0..m {
            let mut entry = metric.get(&[i, j]).scale(&half);
            if i == j {
                entry = &entry - &Jet::constant(d, GaussianRational::one());
            }
            entry = entry.truncated(order);
            if let Some(deg) = entry.min_total_degree() {
                min_deg = min_deg.min(deg);
            }
            k[i][j] = entry;
        }
    }
    if min_deg == u32::MAX {
        min_deg = order as u32 + 1;
    }
    assert!(min_deg >= 1, "real metric must be 2*I at the origin");
    let steps = (order as u32) / min_deg + 1;
    let identity = |i: usize, j: usize| {
        if i == j {
            Jet::constant(d, GaussianRational::one())
        } else {
            Jet::zero(d)
        }
    };
    let mut sum: Vec<Vec<Jet>> =
        (0..m).map(|i| (0..m).map(|j| identity(i, j)).collect()).collect();
    let mut power = sum.clone();
    for _ in 1..=steps {
        let mut next = vec![vec![Jet::zero(d); m]; m];
        for i in 0..m {
            for j in 0..m {
                let mut acc = Jet::zero(d);
                for e in 0..m {
                    acc = &acc + &(&power[i][e] * &k[e][j]);
                }
                next[i][j] = (-&acc).truncated(order);
            }
        }
        power = next;
        for i in 0..m {
            for j in 0..m {
                sum[i][j] = &sum[i][j] + &power[i][j];
            }
        }
    }
    let mut inv = RealTensor::zeros(m, 2, d);
    for i in 0..m {
        for j in 0..m {
            inv.set(&[i, j], sum[i][j].scale(&half).truncated(order));
        }
    }
    inv
}

/// Γ^a_{bc} = ½ G^{ae} (∂_b G_{ec} + ∂_c G_{eb} - ∂_e G_{bc}).
fn real_christoffels(metric: &RealTensor, ginv: &RealTensor, d: usize) -> RealTensor {
    let m = metric.m;
    let half = GaussianRational::from_rational(BigRational::new(
        BigInt::from(1),
        BigInt::from(2),
    ));
    let mut gamma = RealTensor::zeros(m, 3, d);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let mut acc = Jet::zero(d);
                for e in 0..m {
                    let bracket = &(&metric.get(&[e, c]).diff_var(b)
                        + &metric.get(&[e, b]).diff_var(c))
                        - &metric.get(&[b, c]).diff_var(e);
                    acc = &acc + &(ginv.get(&[a, e]) * &bracket);
                }
                gamma.set(&[a, b, c], acc.scale(&half));
            }
        }
    }
    gamma
}

/// Mixed Riemann tensor R^a_{bcd} = ∂_c Γ^a_{db} - ∂_d Γ^a_{cb}
/// + Γ^a_{ce} Γ^e_{db} - Γ^a_{de} Γ^e_{cb}.
fn real_riemann(gamma: &RealTensor, d: usize) -> RealTensor {
    let m = gamma.m;
    let mut riemann = RealTensor::zeros(m, 4, d);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for dd in 0..m {
                    let mut acc = &gamma.get(&[a, dd, b]).diff_var(c)
                        - &gamma.get(&[a, c, b]).diff_var(dd);
                    for e in 0..m {
                        acc = &acc + &(gamma.get(&[a, c, e]) * gamma.get(&[e, dd, b]));
                        acc = &acc - &(gamma.get(&[a, dd, e]) * gamma.get(&[e, c, b]));
                    }
                    riemann.set(&[a, b, c, dd], acc);
                }
            }
        }
    }
    riemann
}

fn values_at_zero(t: &RealTensor) -> Result<Vec<GaussianRational>, JetError> {
    t.comps.iter().map(|j| j.value_at_zero()).collect()
}

/// Computes P(0), |Ric|²(0), |R|²(0) and optionally ΔP(0) on the real
/// side, independently of the complex pipeline.
pub fn real_invariants(
    potential: &KahlerPotential,
    with_laplacian: bool,
) -> Result<RealInvariants, JetError> {
    let d = potential.dim();
    let m = 2 * d;
    let trunc: i64 = if with_laplacian { 3 } else { 2 };
    let metric = real_metric(potential);
    let ginv = real_inverse(&metric, d, trunc);
    let gamma = real_christoffels(&metric, &ginv, d);
    let riemann = real_riemann(&gamma, d);

    // Ric_{bd} = R^a_{bad}
    let mut ricci = RealTensor::zeros(m, 2, d);
    for b in 0..m {
        for dd in 0..m {
            let mut acc = Jet::zero(d);
            for a in 0..m {
                acc = &acc + riemann.get(&[a, b, a, dd]);
            }
            ricci.set(&[b, dd], acc);
        }
    }

    let ginv0 = values_at_zero(&ginv)?;
    let metric0 = values_at_zero(&metric)?;
    // normal form pins G(0) = 2*Id; the fast contractions below rely on it
    let half = GaussianRational::from_rational(BigRational::new(
        BigInt::from(1),
        BigInt::from(2),
    ));
    let two = GaussianRational::from_int(2);
    for i in 0..m {
        for j in 0..m {
            let expected_inv = if i == j { half.clone() } else { GaussianRational::zero() };
            let expected = if i == j { two.clone() } else { GaussianRational::zero() };
            assert_eq!(ginv0[i * m + j], expected_inv, "inverse metric at origin");
            assert_eq!(metric0[i * m + j], expected, "metric at origin");
        }
    }

    let ricci0 = values_at_zero(&ricci)?;
    let riemann0 = values_at_zero(&riemann)?;

    // P = G^{bd} Ric_{bd}; at the origin that is (1/2) trace
    let mut scalar = GaussianRational::zero();
    for b in 0..m {
        scalar += &(&ricci0[b * m + b] * &half);
    }

    // |Ric|² with both indices raised by G^{-1}(0) = Id/2
    let quarter = &half * &half;
    let mut ricci_norm2 = GaussianRational::zero();
    for b in 0..m {
        for dd in 0..m {
            let v = &ricci0[b * m + dd];
            ricci_norm2 += &(&(v * v) * &quarter);
        }
    }

    // lower the first index (factor 2 at the origin), then raise all four
    let sixteenth = &quarter * &quarter;
    let mut riemann_norm2 = GaussianRational::zero();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for dd in 0..m {
                    let lowered = &two * &riemann0[((a * m + b) * m + c) * m + dd];
                    riemann_norm2 += &(&(&lowered * &lowered) * &sixteenth);
                }
            }
        }
    }

    let laplacian_scalar = if with_laplacian {
        // P as a jet, then ΔP = -G^{ab}(∂_a∂_b P - Γ^c_{ab} ∂_c P)
        let mut p_jet = Jet::zero(d);
        for b in 0..m {
            for dd in 0..m {
                p_jet = &p_jet + &(ginv.get(&[b, dd]) * ricci.get(&[b, dd]));
            }
        }
        let mut lap = GaussianRational::zero();
        for a in 0..m {
            for b in 0..m {
                let mut inner = p_jet.diff_var(a).diff_var(b);
                for c in 0..m {
                    inner = &inner - &(gamma.get(&[c, a, b]) * &p_jet.diff_var(c));
                }
                let term = &ginv0[a * m + b] * &inner.value_at_zero()?;
                lap -= &term;
            }
        }
        Some(lap)
    } else {
        None
    };

    Ok(RealInvariants { scalar, ricci_norm2, riemann_norm2, laplacian_scalar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::GaussianRational;

    fn quartic_1d() -> KahlerPotential {
        KahlerPotential::from_monomials(1, 4, &[(vec![2], vec![2], GaussianRational::one())])
            .unwrap()
    }

    #[test]
    fn realify_squared_norm() {
        // z z̄ becomes x² + y²
        let jet = Jet::monomial(1, &[1], &[1], GaussianRational::one());
        let real = realify(&jet);
        assert_eq!(real.coefficient(&[2, 0]), GaussianRational::one());
        assert_eq!(real.coefficient(&[0, 2]), GaussianRational::one());
        assert_eq!(real.coefficient(&[1, 1]), GaussianRational::zero());
    }

    #[test]
    fn flat_invariants_vanish() {
        let p = KahlerPotential::flat(2, 6).unwrap();
        let inv = real_invariants(&p, true).unwrap();
        assert!(inv.scalar.is_zero());
        assert!(inv.ricci_norm2.is_zero());
        assert!(inv.riemann_norm2.is_zero());
        assert!(inv.laplacian_scalar.unwrap().is_zero());
    }

    #[test]
    fn quartic_real_invariants() {
        // hand values for 2(1+4r²)(dx²+dy²): P = -8, |Ric|² = 32,
        // |R|² = 64
        let inv = real_invariants(&quartic_1d(), false).unwrap();
        assert_eq!(inv.scalar, GaussianRational::from_int(-8));
        assert_eq!(inv.ricci_norm2, GaussianRational::from_int(32));
        assert_eq!(inv.riemann_norm2, GaussianRational::from_int(64));
    }

    #[test]
    fn real_values_are_real() {
        let p = KahlerPotential::random(1, 6, 5).unwrap();
        let inv = real_invariants(&p, true).unwrap();
        assert!(inv.scalar.is_real());
        assert!(inv.ricci_norm2.is_real());
        assert!(inv.riemann_norm2.is_real());
        assert!(inv.laplacian_scalar.unwrap().is_real());
    }
}
