//! Central-firing on Weyl-group orbits — the root-system generalization of
//! unlabeled chip-firing.  Orbits are handled through their unique dominant
//! representatives; firing from the representative captures every orbit
//! move, and the orbit-level relation is confluent (and terminating), so the
//! greedy normal form below is canonical.

use crate::central::available_moves;
use crate::rootsys::{RootSystem, Weight};
use crate::Result;
use std::collections::BTreeSet;

/// A Weyl-group orbit, stored as its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitWeight {
    rep: Weight,
}

impl OrbitWeight {
    /// Canonicalize an arbitrary weight to its orbit.
    pub fn new(rs: &RootSystem, lam: &Weight) -> OrbitWeight {
        OrbitWeight {
            rep: rs.dominant_rep(lam).0,
        }
    }

    /// Wrap an already-dominant weight without re-canonicalizing.
    pub fn from_dominant(rep: Weight) -> OrbitWeight {
        assert!(rep.is_dominant());
        OrbitWeight { rep }
    }

    pub fn rep(&self) -> &Weight {
        &self.rep
    }
}

/// All orbits reachable from `o` in one orbit-firing step:
/// `{ W(rep + α) : α ⊥ rep }`, deduplicated.  Firing only from the dominant
/// representative is exhaustive because every orbit move from any orbit
/// element is Weyl-conjugate to one from the representative.
pub fn orbit_moves(rs: &RootSystem, o: &OrbitWeight) -> BTreeSet<OrbitWeight> {
    available_moves(rs, &o.rep)
        .into_iter()
        .map(|k| {
            let succ = rs
                .add_root(&o.rep, &rs.positive_roots[k])
                .expect("orbit firing stays in range");
            OrbitWeight::new(rs, &succ)
        })
        .collect()
}

/// The stabilization of `o`: greedily apply the lexicographically-least
/// orbit move until no move remains.  Orbit firing is confluent, so the
/// greedy choice does not affect the result (this independence is verified
/// separately by tests rather than assumed).
pub fn orbit_normal_form(rs: &RootSystem, o: &OrbitWeight) -> OrbitWeight {
    let mut cur = o.clone();
    loop {
        match orbit_moves(rs, &cur).into_iter().next() {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

/// Closed-form stabilization: when `λ ∈ Π^Q(ρ + ω)` for the minuscule (or
/// zero) weight `ω` in the class of `λ − ρ`, the stabilization of `Wλ` is
/// `W(ρ + ω)`.  Returns `None` when the containment fails (the closed form
/// does not apply there).
pub fn stabilization_prediction(rs: &RootSystem, lam: &Weight) -> Result<Option<OrbitWeight>> {
    let diff = Weight(
        lam.0
            .iter()
            .zip(&rs.rho.0)
            .map(|(a, b)| a - b)
            .collect(),
    );
    let omega = rs.minuscule_rep_of_class(&diff);
    let target = rs.rho.checked_add(&omega.0)?;
    if rs.permutohedron_contains(&target, lam, false)? {
        Ok(Some(OrbitWeight::from_dominant(target)))
    } else {
        Ok(None)
    }
}
