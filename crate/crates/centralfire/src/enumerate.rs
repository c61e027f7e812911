//! Enumeration helpers used by exhaustive sweeps: lattice points of
//! permutohedra and full Weyl orbits.  These are test/driver utilities, not
//! part of the firing engine, but they are exact and deterministic like the
//! rest of the crate.

use crate::linalg::Rat;
use crate::rootsys::{RootSystem, Weight};
use num_traits::ToPrimitive;

/// All dominant weights `μ` with `top − μ` a nonnegative integral combination
/// of simple roots — i.e. the dominant lattice points of `Π^Q(top)` for
/// dominant `top`.
pub fn dominant_weights_in(rs: &RootSystem, top: &Weight) -> Vec<Weight> {
    assert!(top.is_dominant());
    let n = rs.rank();
    // μ = top − C·c with c ≥ 0 integral; since C⁻¹ has positive entries for
    // an irreducible Cartan matrix, c = C⁻¹(top − μ) is bounded by C⁻¹·top.
    let bounds: Vec<i64> = {
        let c = rs.root_coeffs(top);
        c.iter()
            .map(|v: &Rat| v.floor().to_integer().to_i64().unwrap().max(0))
            .collect()
    };
    let mut out = Vec::new();
    let mut c = vec![0i64; n];
    loop {
        let coords: Vec<i64> = (0..n)
            .map(|j| top.0[j] - (0..n).map(|i| rs.cartan[j][i] * c[i]).sum::<i64>())
            .collect();
        if coords.iter().all(|&v| v >= 0) {
            out.push(Weight(coords));
        }
        // odometer increment over the box
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            c[k] += 1;
            if c[k] <= bounds[k] {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Dominant lattice points of `Π^Q(2ρ)` — the standard exhaustive sweep.
pub fn dominant_weights_in_2rho(rs: &RootSystem) -> Vec<Weight> {
    let two_rho = Weight(rs.rho.0.iter().map(|c| 2 * c).collect());
    dominant_weights_in(rs, &two_rho)
}

/// The full Weyl orbit of `λ`, by closure under simple reflections.
pub fn weyl_orbit(rs: &RootSystem, lam: &Weight) -> Vec<Weight> {
    let mut orbit = std::collections::BTreeSet::new();
    let mut queue = vec![lam.clone()];
    orbit.insert(lam.clone());
    while let Some(w) = queue.pop() {
        for i in 0..rs.rank() {
            let r = rs.reflect_simple(&w, i);
            if orbit.insert(r.clone()) {
                queue.push(r);
            }
        }
    }
    orbit.into_iter().collect()
}

/// All lattice points of `Π^Q(top)` (dominant ones expanded to full orbits).
pub fn all_weights_in(rs: &RootSystem, top: &Weight) -> Vec<Weight> {
    let mut out = std::collections::BTreeSet::new();
    for dom in dominant_weights_in(rs, top) {
        out.extend(weyl_orbit(rs, &dom));
    }
    out.into_iter().collect()
}
