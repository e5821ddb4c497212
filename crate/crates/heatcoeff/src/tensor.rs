//! Jet-valued tensors on the complex side: metric, inverse metric,
//! curvature, Christoffel symbols and covariant derivatives.
//!
//! Components are dense over index tuples in 0..d per slot; each slot is
//! tagged barred or unbarred so covariant differentiation knows which
//! Christoffel acts where. For a Kähler metric only the all-unbarred
//! symbols and their conjugates are nonzero, which the metric
//! compatibility test pins down.

use crate::jets::{GaussianRational, Jet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Z,
    Zbar,
}

/// Dense tensor of jets with a fixed slot signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorJet {
    dim: usize,
    slots: Vec<Slot>,
    comps: Vec<Jet>,
}

impl TensorJet {
    pub fn zeros(dim: usize, slots: Vec<Slot>) -> Self {
        let len = dim.pow(slots.len() as u32);
        TensorJet { dim, slots, comps: vec![Jet::zero(dim); len] }
    }

    pub fn from_fn(dim: usize, slots: Vec<Slot>, mut f: impl FnMut(&[usize]) -> Jet) -> Self {
        let rank = slots.len();
        let len = dim.pow(rank as u32);
        let mut comps = Vec::with_capacity(len);
        let mut idx = vec![0usize; rank];
        for flat in 0..len {
            unflatten(flat, dim, &mut idx);
            comps.push(f(&idx));
        }
        TensorJet { dim, slots, comps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.slots.len());
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Jet {
        &self.comps[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], jet: Jet) {
        let flat = self.flat(idx);
        self.comps[flat] = jet;
    }

    pub fn map(&self, f: impl Fn(&Jet) -> Jet) -> TensorJet {
        TensorJet {
            dim: self.dim,
            slots: self.slots.clone(),
            comps: self.comps.iter().map(f).collect(),
        }
    }

    /// All component values at the origin, flattened; errors if any
    /// component's truncation fell below order 0.
    pub fn values_at_zero(&self) -> Result<Vec<GaussianRational>, crate::jets::JetError> {
        self.comps.iter().map(|j| j.value_at_zero()).collect()
    }

    pub fn for_each_index(&self, mut f: impl FnMut(&[usize], &Jet)) {
        let mut idx = vec![0usize; self.rank()];
        for (flat, jet) in self.comps.iter().enumerate() {
            unflatten(flat, self.dim, &mut idx);
            f(&idx, jet);
        }
    }

    pub fn truncated(&self, order: i64) -> TensorJet {
        self.map(|j| j.clone().truncated(order))
    }
}

fn unflatten(mut flat: usize, dim: usize, idx: &mut [usize]) {
    for slot in idx.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
}

/// g_{ij̄} = ∂_i ∂_j̄ φ as a (Z, Zbar) tensor.
pub fn metric_jets(potential: &Jet) -> TensorJet {
    let d = potential.dim();
    TensorJet::from_fn(d, vec![Slot::Z, Slot::Zbar], |idx| {
        potential.diff_z(idx[0]).diff_zbar(idx[1])
    })
}

/// g^{ij̄}, the inverse transposed so that Σ_j g^{ij̄} g_{kj̄} = δ_ik,
/// computed by a truncated Neumann series around the identity and valid
/// to `order`.
pub fn inverse_metric_jets(g: &TensorJet, order: i64) -> TensorJet {
    let d = g.dim();
    assert!(order >= 0 && order < Jet::EXACT);
    // M = I + H with H of positive minimal degree; invert Mᵀ.
    let mut h = vec![vec![Jet::zero(d); d]; d];
    let mut min_deg = u32::MAX;
    for i in 0..d {
        for j in 0..d {
            // transpose: row i, col j holds g_{jī}
            let mut entry = g.get(&[j, i]).clone();
            if i == j {
                entry = &entry - &Jet::constant(d, GaussianRational::one());
            }
            entry = entry.truncated(order);
            if let Some(m) = entry.min_total_degree() {
                min_deg = min_deg.min(m);
            }
            h[i][j] = entry;
        }
    }
    if min_deg == u32::MAX {
        min_deg = order as u32 + 1; // H = 0, metric is flat
    }
    assert!(min_deg >= 1, "metric must be the identity at the origin");
    let steps = (order as u32) / min_deg + 1;
    let identity = |i: usize, j: usize| {
        if i == j {
            Jet::constant(d, GaussianRational::one())
        } else {
            Jet::zero(d)
        }
    };
    // Σ_k (-H)^k
    let mut sum: Vec<Vec<Jet>> = (0..d).map(|i| (0..d).map(|j| identity(i, j)).collect()).collect();
    let mut power: Vec<Vec<Jet>> = sum.clone();
    for k in 1..=steps {
        let mut next = vec![vec![Jet::zero(d); d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = Jet::zero(d);
                for m in 0..d {
                    acc = &acc + &(&power[i][m] * &h[m][j]);
                }
                next[i][j] = (-&acc).truncated(order);
            }
        }
        power = next;
        for i in 0..d {
            for j in 0..d {
                sum[i][j] = &sum[i][j] + &power[i][j];
            }
        }
        let _ = k;
    }
    TensorJet::from_fn(d, vec![Slot::Z, Slot::Zbar], |idx| {
        sum[idx[0]][idx[1]].clone().truncated(order)
    })
}

/// R_{ij̄kl̄} = -g_{ij̄kl̄} + g^{mp̄} g_{mj̄l̄} g_{ip̄k}.
pub fn curvature(g: &TensorJet, ginv: &TensorJet) -> TensorJet {
    let d = g.dim();
    TensorJet::from_fn(d, vec![Slot::Z, Slot::Zbar, Slot::Z, Slot::Zbar], |idx| {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let mut r = -&g.get(&[i, j]).diff_z(k).diff_zbar(l);
        for m in 0..d {
            for p in 0..d {
                let correction = &(&g.get(&[m, j]).diff_zbar(l) * &g.get(&[i, p]).diff_z(k))
                    * ginv.get(&[m, p]);
                r = &r + &correction;
            }
        }
        r
    })
}

/// Γ^m_{kl} = g^{mp̄} ∂_k g_{lp̄}, stored as [m][k][l]; symmetric in k, l.
pub fn christoffels(g: &TensorJet, ginv: &TensorJet) -> TensorJet {
    let d = g.dim();
    TensorJet::from_fn(d, vec![Slot::Z, Slot::Z, Slot::Z], |idx| {
        let (m, k, l) = (idx[0], idx[1], idx[2]);
        let mut acc = Jet::zero(d);
        for p in 0..d {
            acc = &acc + &(ginv.get(&[m, p]) * &g.get(&[l, p]).diff_z(k));
        }
        acc
    })
}

/// Conjugate symbols Γ̄^m̄_{k̄l̄}, acting on barred slots.
pub fn christoffels_bar(gamma: &TensorJet) -> TensorJet {
    gamma.map(|j| j.conj_fn())
}

/// T_{.../k}: appends an unbarred slot; only unbarred slots receive
/// Christoffel corrections on a Kähler manifold.
pub fn covariant_derivative_z(t: &TensorJet, gamma: &TensorJet) -> TensorJet {
    let d = t.dim();
    let mut slots = t.slots().to_vec();
    slots.push(Slot::Z);
    TensorJet::from_fn(d, slots, |idx| {
        let (base, k) = idx.split_at(idx.len() - 1);
        let k = k[0];
        let mut out = t.get(base).diff_z(k);
        for (s, slot) in t.slots().iter().enumerate() {
            if *slot != Slot::Z {
                continue;
            }
            let beta = base[s];
            for m in 0..d {
                let mut replaced = base.to_vec();
                replaced[s] = m;
                out = &out - &(gamma.get(&[m, k, beta]) * t.get(&replaced));
            }
        }
        out
    })
}

/// T_{.../k̄}: appends a barred slot; corrections act on barred slots via
/// the conjugate symbols.
pub fn covariant_derivative_zbar(t: &TensorJet, gamma_bar: &TensorJet) -> TensorJet {
    let d = t.dim();
    let mut slots = t.slots().to_vec();
    slots.push(Slot::Zbar);
    TensorJet::from_fn(d, slots, |idx| {
        let (base, k) = idx.split_at(idx.len() - 1);
        let k = k[0];
        let mut out = t.get(base).diff_zbar(k);
        for (s, slot) in t.slots().iter().enumerate() {
            if *slot != Slot::Zbar {
                continue;
            }
            let beta = base[s];
            for m in 0..d {
                let mut replaced = base.to_vec();
                replaced[s] = m;
                out = &out - &(gamma_bar.get(&[m, k, beta]) * t.get(&replaced));
            }
        }
        out
    })
}

/// Contracts one unbarred and one barred slot against g^{..}, producing
/// jets (not just origin values).
pub fn contract_with_inverse(
    t: &TensorJet,
    zslot: usize,
    zbarslot: usize,
    ginv: &TensorJet,
) -> TensorJet {
    assert_eq!(t.slots()[zslot], Slot::Z);
    assert_eq!(t.slots()[zbarslot], Slot::Zbar);
    let d = t.dim();
    let kept: Vec<usize> =
        (0..t.rank()).filter(|&s| s != zslot && s != zbarslot).collect();
    let slots: Vec<Slot> = kept.iter().map(|&s| t.slots()[s]).collect();
    TensorJet::from_fn(d, slots, |idx| {
        let mut acc = Jet::zero(d);
        let mut full = vec![0usize; t.rank()];
        for (pos, &s) in kept.iter().enumerate() {
            full[s] = idx[pos];
        }
        for j in 0..d {
            for k in 0..d {
                full[zslot] = j;
                full[zbarslot] = k;
                acc = &acc + &(t.get(&full) * ginv.get(&[j, k]));
            }
        }
        acc
    })
}

/// Ric_{ij̄} = g^{kl̄} R_{ij̄kl̄}.
pub fn ricci(r: &TensorJet, ginv: &TensorJet) -> TensorJet {
    contract_with_inverse(r, 2, 3, ginv)
}

/// ρ = g^{ij̄} Ric_{ij̄} as a jet.
pub fn scalar_curvature(ric: &TensorJet, ginv: &TensorJet) -> Jet {
    contract_with_inverse(ric, 0, 1, ginv).get(&[]).clone()
}

/// □f = g^{jk̄} ∂_j ∂_k̄ f for a scalar (mixed Christoffels vanish).
pub fn box_scalar(f: &Jet, ginv: &TensorJet) -> Jet {
    let d = f.dim();
    let mut acc = Jet::zero(d);
    for j in 0..d {
        for k in 0..d {
            acc = &acc + &(&f.diff_z(j).diff_zbar(k) * ginv.get(&[j, k]));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::GaussianRational;
    use num::{BigInt, BigRational};

    /// d = 1 potential z z̄ + z² z̄².
    fn quartic_potential() -> Jet {
        let zzbar = Jet::monomial(1, &[1], &[1], GaussianRational::one());
        let quartic = Jet::monomial(1, &[2], &[2], GaussianRational::one());
        &zzbar + &quartic
    }

    fn flat_potential(d: usize) -> Jet {
        let mut jet = Jet::zero(d);
        for i in 0..d {
            let mut alpha = vec![0u8; d];
            let mut beta = vec![0u8; d];
            alpha[i] = 1;
            beta[i] = 1;
            jet = &jet + &Jet::monomial(d, &alpha, &beta, GaussianRational::one());
        }
        jet
    }

    #[test]
    fn metric_of_quartic() {
        let g = metric_jets(&quartic_potential());
        // g = 1 + 4 z z̄
        let entry = g.get(&[0, 0]);
        assert_eq!(entry.value_at_zero().unwrap(), GaussianRational::one());
        assert_eq!(entry.coefficient(&[1, 1]), GaussianRational::from_int(4));
    }

    #[test]
    fn inverse_is_geometric_series() {
        let g = metric_jets(&quartic_potential());
        let ginv = inverse_metric_jets(&g, 4);
        let inv = ginv.get(&[0, 0]);
        // 1/(1+4u) = 1 - 4u + 16u² - ... with u = z z̄
        assert_eq!(inv.coefficient(&[0, 0]), GaussianRational::one());
        assert_eq!(inv.coefficient(&[1, 1]), GaussianRational::from_int(-4));
        assert_eq!(inv.coefficient(&[2, 2]), GaussianRational::from_int(16));
    }

    #[test]
    fn inverse_identity_holds_to_order() {
        let d = 2;
        let mut potential = flat_potential(d);
        potential = &potential
            + &Jet::monomial(d, &[2, 0], &[1, 1], GaussianRational::new(
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::new(BigInt::from(1), BigInt::from(3)),
            ));
        potential = &potential
            + &Jet::monomial(d, &[1, 1], &[2, 0], GaussianRational::new(
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::new(BigInt::from(-1), BigInt::from(3)),
            ));
        let g = metric_jets(&potential);
        let ginv = inverse_metric_jets(&g, 4);
        for i in 0..d {
            for k in 0..d {
                let mut acc = Jet::zero(d);
                for j in 0..d {
                    acc = &acc + &(ginv.get(&[i, j]) * g.get(&[k, j]));
                }
                let expected = if i == k { GaussianRational::one() } else { GaussianRational::zero() };
                assert_eq!(acc.value_at_zero().unwrap(), expected);
                let diff = &acc - &Jet::constant(d, expected);
                assert!(diff.clone().truncated(4).is_zero(), "residual {diff:?}");
            }
        }
    }

    #[test]
    fn curvature_of_quartic_at_origin() {
        let g = metric_jets(&quartic_potential());
        let ginv = inverse_metric_jets(&g, 4);
        let r = curvature(&g, &ginv);
        assert_eq!(
            r.get(&[0, 0, 0, 0]).value_at_zero().unwrap(),
            GaussianRational::from_int(-4)
        );
    }

    #[test]
    fn flat_curvature_vanishes() {
        let g = metric_jets(&flat_potential(2));
        let ginv = inverse_metric_jets(&g, 4);
        let r = curvature(&g, &ginv);
        r.for_each_index(|_, jet| assert!(jet.clone().truncated(4).is_zero()));
    }

    #[test]
    fn metric_compatibility() {
        let g = metric_jets(&quartic_potential());
        let ginv = inverse_metric_jets(&g, 4);
        let gamma = christoffels(&g, &ginv);
        let nabla_g = covariant_derivative_z(&g, &gamma);
        nabla_g.for_each_index(|_, jet| {
            assert!(jet.clone().truncated(3).is_zero());
        });
        let gamma_bar = christoffels_bar(&gamma);
        let nabla_g_bar = covariant_derivative_zbar(&g, &gamma_bar);
        nabla_g_bar.for_each_index(|_, jet| {
            assert!(jet.clone().truncated(3).is_zero());
        });
    }

    #[test]
    fn first_covariant_derivative_is_partial_at_origin() {
        let g = metric_jets(&quartic_potential());
        let ginv = inverse_metric_jets(&g, 4);
        let gamma = christoffels(&g, &ginv);
        let r = curvature(&g, &ginv);
        let nabla_r = covariant_derivative_z(&r, &gamma);
        let direct = r.get(&[0, 0, 0, 0]).diff_z(0);
        assert_eq!(
            nabla_r.get(&[0, 0, 0, 0, 0]).value_at_zero().unwrap(),
            direct.value_at_zero().unwrap()
        );
    }

    #[test]
    fn scalar_curvature_of_quartic() {
        let g = metric_jets(&quartic_potential());
        let ginv = inverse_metric_jets(&g, 4);
        let r = curvature(&g, &ginv);
        let ric = ricci(&r, &ginv);
        let rho = scalar_curvature(&ric, &ginv);
        assert_eq!(rho.value_at_zero().unwrap(), GaussianRational::from_int(-4));
    }
}
