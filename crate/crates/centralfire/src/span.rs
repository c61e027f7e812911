//! Firing spans `FS(λ) = Span{λ − μ : λ →* μ}`, connectedness, and the
//! closed-form Type-A classification.
//!
//! Spans are computed through the recurrence
//! `FS(λ) = Span( ∪_{α ⊥ λ} {α} ∪ FS(λ+α) )`, memoized per weight, with
//! exact rational row reduction over the simple-root basis; two spans are
//! equal iff their canonical echelon bases are equal.

use crate::central::available_moves;
use crate::linalg::{rref, Rat};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::ucf::{ucf_move, zero_components, UcfAssignment};
use crate::{Error, Result};
use std::collections::HashMap;

/// A subspace of the ambient weight space, as a canonical reduced
/// row-echelon basis over the simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub basis: Vec<Vec<Rat>>,
}

impl SubspaceBasis {
    pub fn empty() -> SubspaceBasis {
        SubspaceBasis { basis: Vec::new() }
    }

    pub fn from_integer_vectors(vecs: impl IntoIterator<Item = Vec<i64>>) -> SubspaceBasis {
        let rows: Vec<Vec<Rat>> = vecs
            .into_iter()
            .map(|v| v.into_iter().map(Rat::from_integer).collect())
            .collect();
        SubspaceBasis { basis: rref(rows) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Image under a linear map given on simple-root coordinates.
    pub fn map(&self, f: impl Fn(&[Rat]) -> Vec<Rat>) -> SubspaceBasis {
        SubspaceBasis {
            basis: rref(self.basis.iter().map(|row| f(row)).collect()),
        }
    }
}

/// Memo cache for [`firing_span`]; share one across calls for the same root
/// system.
#[derive(Default)]
pub struct SpanCache {
    map: HashMap<Vec<i64>, SubspaceBasis>,
    visited: usize,
}

impl SpanCache {
    pub fn new() -> SpanCache {
        SpanCache::default()
    }
}

/// The firing span of `λ`, by the memoized recurrence.  The budget bounds
/// the number of distinct weights visited through this cache.
pub fn firing_span(
    rs: &RootSystem,
    lam: &Weight,
    budget: usize,
    cache: &mut SpanCache,
) -> Result<SubspaceBasis> {
    if let Some(b) = cache.map.get(&lam.0) {
        return Ok(b.clone());
    }
    if cache.visited >= budget {
        return Err(Error::BudgetExceeded {
            explored: cache.visited,
        });
    }
    cache.visited += 1;
    let mut vectors: Vec<Vec<Rat>> = Vec::new();
    for k in available_moves(rs, lam) {
        let alpha = &rs.positive_roots[k];
        vectors.push(
            alpha
                .simple_coords
                .iter()
                .map(|&c| Rat::from_integer(c))
                .collect(),
        );
        let succ = rs.add_root(lam, alpha)?;
        let sub = firing_span(rs, &succ, budget, cache)?;
        vectors.extend(sub.basis);
    }
    let span = SubspaceBasis { basis: rref(vectors) };
    cache.map.insert(lam.0.clone(), span.clone());
    Ok(span)
}

/// `λ` is connected when its firing span is the whole ambient space.
pub fn is_connected(
    rs: &RootSystem,
    lam: &Weight,
    budget: usize,
    cache: &mut SpanCache,
) -> Result<bool> {
    Ok(firing_span(rs, lam, budget, cache)?.dim() == rs.rank())
}

/// Closed-form Type-A classification: `λ` is connected iff it lies in the
/// interior lattice points `Π^{∘,Q}(ρ + ω)` for the minuscule (or zero)
/// class representative `ω` of `λ − ρ`.
pub fn type_a_connected(rs: &RootSystem, lam: &Weight) -> Result<bool> {
    if rs.ty.family != Family::A {
        return Err(Error::Invalid(format!(
            "Type-A classification applied to {}",
            rs.ty
        )));
    }
    let diff = Weight(
        lam.0
            .iter()
            .zip(&rs.rho.0)
            .map(|(a, b)| a - b)
            .collect(),
    );
    let omega = rs.minuscule_rep_of_class(&diff);
    let target = rs.rho.checked_add(&omega.0)?;
    rs.permutohedron_contains(&target, lam, true)
}

/// Dominant-path span for simply-laced types: explore only dominant weights
/// (successors are the UCF moves) and span the simple roots orthogonal to
/// each dominant weight encountered.  Equals [`firing_span`] on dominant
/// weights.
pub fn simply_laced_span_dominant(rs: &RootSystem, lam: &Weight) -> Result<SubspaceBasis> {
    if !rs.is_simply_laced() {
        return Err(Error::NotSimplyLaced(rs.ty.to_string()));
    }
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.0.clone()));
    }
    let n = rs.rank();
    let mut fired_simple = vec![false; n];
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![lam.clone()];
    seen.insert(lam.0.clone());
    while let Some(w) = queue.pop() {
        let f = UcfAssignment(w.0.clone());
        for i in 0..n {
            if w.0[i] == 0 {
                fired_simple[i] = true;
            }
        }
        for comp in zero_components(rs, &f)? {
            let next = ucf_move(rs, &f, &comp)?.weight();
            if seen.insert(next.0.clone()) {
                queue.push(next);
            }
        }
    }
    let units = (0..n).filter(|&i| fired_simple[i]).map(|i| {
        let mut e = vec![0i64; n];
        e[i] = 1;
        e
    });
    Ok(SubspaceBasis::from_integer_vectors(units))
}
