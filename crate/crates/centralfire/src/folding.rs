//! Folding a simply-laced root system along a Dynkin-diagram automorphism
//! `σ`, and transporting central-firing statements through the fold.
//!
//! Summing the simple roots over each `σ`-orbit of nodes yields the simple
//! roots of a (generally multiply-laced) root system on the `σ`-fixed
//! subspace; the classical instances are `A_{2n−1} → B_n` (diagram reversal),
//! `D_{n+1} → C_n`, `D_4 → G_2` (triality), and `E_6 → F_4`.

use crate::rootsys::{build, Family, Root, RootSystem, RootSystemType, Weight};
use crate::{Error, Result};
use std::collections::HashMap;

/// A diagram automorphism of a simply-laced root system together with the
/// root system it folds onto.
#[derive(Clone, Debug)]
pub struct Folding {
    pub source: RootSystemType,
    pub target: RootSystemType,
    /// The automorphism as a node permutation (0-based).
    pub sigma: Vec<usize>,
    /// Node orbits of `σ`, each sorted, ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
    /// `target_node[k]` is the target simple root corresponding to orbit `k`.
    pub target_node: Vec<usize>,
    /// Folded Cartan matrix, already in the target's node order.
    pub folded_cartan: Vec<Vec<i64>>,
}

fn node_orbits(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut orbits = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = sigma[i];
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Fold `source` along the automorphism `sigma`, identifying the target type
/// by matching the folded Cartan matrix against the standard ones.
pub fn fold(source: &RootSystem, sigma: &[usize]) -> Result<Folding> {
    let n = source.rank();
    if !source.is_simply_laced() {
        return Err(Error::NotSimplyLaced(source.ty.to_string()));
    }
    let mut hit = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&i| i >= n || std::mem::replace(&mut hit[i], true)) {
        return Err(Error::Invalid("sigma is not a permutation of the nodes".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if source.cartan[sigma[i]][sigma[j]] != source.cartan[i][j] {
                return Err(Error::Invalid(
                    "sigma does not preserve the Cartan matrix".into(),
                ));
            }
        }
    }
    let orbits = node_orbits(sigma);
    let m = orbits.len();
    // Simply laced with all d = 1, so (α_i, α_j) = C[i][j]; the orbit sums
    // give the folded inner products directly.
    let ip = |a: &[usize], b: &[usize]| -> i64 {
        a.iter()
            .map(|&i| b.iter().map(|&j| source.cartan[i][j]).sum::<i64>())
            .sum()
    };
    let gram: Vec<Vec<i64>> = orbits
        .iter()
        .map(|a| orbits.iter().map(|b| ip(a, b)).collect())
        .collect();
    for (k, orbit) in orbits.iter().enumerate() {
        if gram[k][k] != 2 * orbit.len() as i64 {
            return Err(Error::Invalid(
                "sigma-orbit contains adjacent nodes; this fold is not supported".into(),
            ));
        }
    }
    let cartan_of = |i: usize, j: usize| -> i64 {
        let num = 2 * gram[i][j];
        assert_eq!(num % gram[i][i], 0, "folded Cartan entries are integral");
        num / gram[i][i]
    };
    // ⟨α̂_j, α̂_i^∨⟩ in orbit order.
    let folded: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| cartan_of(i, j)).collect())
        .collect();
    // Identify the target: first family (in A..G order) and first node
    // permutation whose standard Cartan matches.
    for family in [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ] {
        let Ok(ty) = RootSystemType::new(family, m) else {
            continue;
        };
        let target = build(ty);
        for p in permutations(m) {
            if (0..m).all(|i| (0..m).all(|j| folded[i][j] == target.cartan[p[i]][p[j]])) {
                let mut folded_cartan = vec![vec![0i64; m]; m];
                for i in 0..m {
                    for j in 0..m {
                        folded_cartan[p[i]][p[j]] = folded[i][j];
                    }
                }
                return Ok(Folding {
                    source: source.ty,
                    target: ty,
                    sigma: sigma.to_vec(),
                    orbits,
                    target_node: p,
                    folded_cartan,
                });
            }
        }
    }
    Err(Error::Invalid(
        "folded Cartan matrix matches no standard root system".into(),
    ))
}

impl Folding {
    /// Whether a source weight has equal coordinates along every orbit.
    pub fn is_sigma_fixed(&self, lam: &Weight) -> bool {
        self.orbits
            .iter()
            .all(|o| o.iter().all(|&i| lam.0[i] == lam.0[o[0]]))
    }

    /// Map a `σ`-fixed source weight to target coordinates.
    pub fn fold_weight(&self, lam: &Weight) -> Result<Weight> {
        if !self.is_sigma_fixed(lam) {
            return Err(Error::Invalid(format!(
                "weight {lam} is not fixed by the diagram automorphism"
            )));
        }
        let mut mu = vec![0i64; self.orbits.len()];
        for (k, orbit) in self.orbits.iter().enumerate() {
            mu[self.target_node[k]] = lam.0[orbit[0]];
        }
        Ok(Weight(mu))
    }

    /// The `σ`-fixed source weight mapping to a target weight.
    pub fn unfold_weight(&self, mu: &Weight) -> Weight {
        let mut lam = vec![0i64; self.sigma.len()];
        for (k, orbit) in self.orbits.iter().enumerate() {
            for &i in orbit {
                lam[i] = mu.0[self.target_node[k]];
            }
        }
        Weight(lam)
    }

    /// Orbits of `σ` acting on the source positive roots, as index lists into
    /// `source.positive_roots`.
    pub fn root_orbits(&self, source: &RootSystem) -> Vec<Vec<usize>> {
        let index: HashMap<&[i64], usize> = source
            .positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.simple_coords.as_slice(), k))
            .collect();
        let image = |r: &Root| -> usize {
            let mut c = vec![0i64; self.sigma.len()];
            for (i, &v) in r.simple_coords.iter().enumerate() {
                c[self.sigma[i]] = v;
            }
            *index
                .get(c.as_slice())
                .expect("sigma permutes the positive roots")
        };
        let mut seen = vec![false; source.positive_roots.len()];
        let mut orbits = Vec::new();
        for start in 0..source.positive_roots.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                orbit.push(k);
                k = image(&source.positive_roots[k]);
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

/// Check that, from the `σ`-fixed weight `lam`, every target firing move
/// decomposes as a sequence of source moves along one `σ`-orbit of positive
/// roots — and that these decompositions account for *all* fireable root
/// orbits.  Returns `Ok(true)` when the two successor sets coincide.
pub fn folded_fire_decomposes(
    source: &RootSystem,
    f: &Folding,
    lam: &Weight,
) -> Result<bool> {
    let target = build(f.target);
    let mu = f.fold_weight(lam)?;
    let target_succ: std::collections::BTreeSet<Weight> =
        crate::central::available_moves(&target, &mu)
            .into_iter()
            .map(|k| target.add_root(&mu, &target.positive_roots[k]))
            .collect::<Result<_>>()?;
    let mut decomposed = std::collections::BTreeSet::new();
    for orbit in f.root_orbits(source) {
        if orbit
            .iter()
            .any(|&k| source.pairing(lam, &source.positive_roots[k]) != 0)
        {
            continue;
        }
        // Fire the whole orbit; each intermediate step must itself be a
        // legal central-firing move in the source system.
        let mut cur = lam.clone();
        for &k in &orbit {
            let alpha = &source.positive_roots[k];
            if source.pairing(&cur, alpha) != 0 {
                return Err(Error::Invalid(format!(
                    "root orbit {orbit:?} is not simultaneously fireable from {lam}"
                )));
            }
            cur = source.add_root(&cur, alpha)?;
        }
        decomposed.insert(f.fold_weight(&cur)?);
    }
    Ok(target_succ == decomposed)
}

/// Decide confluence from the `σ`-fixed weight `lam` in the source and from
/// its image in the target; the source verdict transports to the target
/// (but not conversely).
pub fn confluence_pair(
    source: &RootSystem,
    f: &Folding,
    lam: &Weight,
    budget: usize,
) -> Result<(bool, bool)> {
    let target = build(f.target);
    let mu = f.fold_weight(lam)?;
    let src_confluent = crate::central::is_confluent_from(source, lam, budget)?;
    let tgt_confluent = crate::central::is_confluent_from(&target, &mu, budget)?;
    Ok((src_confluent, tgt_confluent))
}

/// The standard automorphism giving each classical fold of `source`, when
/// one exists: reversal for `A_n` (n odd), last-two-node swap for `D_n`,
/// triality for `D_4`, and the reversal-induced automorphism for `E_6`.
/// `D_4` has both; `order` 2 or 3 selects between them.
pub fn standard_automorphism(ty: RootSystemType, order: usize) -> Result<Vec<usize>> {
    let n = ty.rank;
    match (ty.family, order) {
        (Family::A, 2) if n >= 2 && n % 2 == 1 => Ok((0..n).rev().collect()),
        (Family::D, 2) if n >= 3 => {
            let mut s: Vec<usize> = (0..n).collect();
            s.swap(n - 2, n - 1);
            Ok(s)
        }
        (Family::D, 3) if n == 4 => Ok(vec![2, 1, 3, 0]),
        (Family::E, 2) if n == 6 => Ok(vec![5, 1, 4, 3, 2, 0]),
        _ => Err(Error::Invalid(format!(
            "{ty} has no standard diagram automorphism of order {order}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn folded(src: &str, order: usize) -> (RootSystem, Folding) {
        let rs = build(src.parse().unwrap());
        let sigma = standard_automorphism(rs.ty, order).unwrap();
        let f = fold(&rs, &sigma).unwrap();
        (rs, f)
    }

    #[test]
    fn classical_fold_targets() {
        for (src, order, tgt) in [
            ("A3", 2, "B2"),
            ("A5", 2, "B3"),
            ("A7", 2, "B4"),
            ("D4", 3, "G2"),
            ("D4", 2, "C3"),
            ("D5", 2, "C4"),
            ("D6", 2, "C5"),
            ("E6", 2, "F4"),
        ] {
            let (_, f) = folded(src, order);
            assert_eq!(f.target, tgt.parse().unwrap(), "{src} (order {order})");
        }
    }

    #[test]
    fn folded_cartans_match_targets() {
        for (src, order) in [("A3", 2), ("A5", 2), ("D4", 3), ("D5", 2), ("E6", 2)] {
            let (_, f) = folded(src, order);
            assert_eq!(f.folded_cartan, build(f.target).cartan, "{src}");
        }
    }

    #[test]
    fn a3_to_b2_node_map() {
        let (_, f) = folded("A3", 2);
        assert_eq!(f.orbits, vec![vec![0, 2], vec![1]]);
        // The size-2 orbit folds to the long B2 root (node 1, 1-based).
        assert_eq!(f.target_node, vec![0, 1]);
    }

    #[test]
    fn d4_to_g2_node_map() {
        let (_, f) = folded("D4", 3);
        assert_eq!(f.orbits, vec![vec![0, 2, 3], vec![1]]);
        // The triality orbit folds to the long G2 root (node 2, 1-based).
        assert_eq!(f.target_node, vec![1, 0]);
        assert_eq!(f.folded_cartan[0][1], -3);
    }

    #[test]
    fn e6_to_f4_node_map() {
        let (_, f) = folded("E6", 2);
        assert_eq!(
            f.orbits,
            vec![vec![0, 5], vec![1], vec![2, 4], vec![3]]
        );
        // Orbit {1,6} → F4 node 1, {3,5} → node 2, 4 → node 3, 2 → node 4
        // (1-based labels): the E6 branch reads backwards onto the F4 chain.
        assert_eq!(f.target_node, vec![0, 3, 1, 2]);
    }

    #[test]
    fn d5_to_c4_node_map() {
        let (_, f) = folded("D5", 2);
        assert_eq!(f.orbits, vec![vec![0], vec![1], vec![2], vec![3, 4]]);
        assert_eq!(f.target_node, vec![0, 1, 2, 3]); // fork folds to the long end
    }

    #[test]
    fn invalid_sigmas_rejected() {
        let a3 = build("A3".parse().unwrap());
        assert!(fold(&a3, &[1, 0, 2]).is_err()); // not an automorphism
        assert!(fold(&a3, &[0, 0, 2]).is_err()); // not a permutation
        let b2 = build("B2".parse().unwrap());
        assert!(fold(&b2, &[0, 1]).is_err()); // not simply laced
        // A4 reversal is an automorphism but its orbits contain adjacent
        // nodes (the folded "root" 2α would not belong to a root system).
        let a4 = build("A4".parse().unwrap());
        assert!(fold(&a4, &[3, 2, 1, 0]).is_err());
    }

    #[test]
    fn identity_fold_is_identity() {
        let a3 = build("A3".parse().unwrap());
        let f = fold(&a3, &[0, 1, 2]).unwrap();
        assert_eq!(f.target, a3.ty);
        assert_eq!(f.folded_cartan, a3.cartan);
    }

    #[test]
    fn root_orbit_counts_match_target() {
        for (src, order) in [("A3", 2), ("A5", 2), ("D4", 3), ("D5", 2), ("E6", 2)] {
            let (rs, f) = folded(src, order);
            let target = build(f.target);
            assert_eq!(
                f.root_orbits(&rs).len(),
                target.positive_roots.len(),
                "{src}"
            );
        }
    }

    #[test]
    fn weight_transport_round_trips() {
        for (src, order) in [("A3", 2), ("A5", 2), ("D4", 3), ("D5", 2), ("E6", 2)] {
            let (rs, f) = folded(src, order);
            let target = build(f.target);
            for i in 0..target.rank() {
                let omega = Weight::fundamental(target.rank(), i);
                let lam = f.unfold_weight(&omega);
                assert!(f.is_sigma_fixed(&lam));
                assert_eq!(f.fold_weight(&lam).unwrap(), omega, "{src}");
                // Unfolded fundamental weight = sum of the orbit's source
                // fundamental weights.
                let k = f.target_node.iter().position(|&t| t == i).unwrap();
                let mut expect = vec![0i64; rs.rank()];
                for &j in &f.orbits[k] {
                    expect[j] = 1;
                }
                assert_eq!(lam.0, expect);
            }
            // Non-fixed weights are rejected.
            if f.orbits.iter().any(|o| o.len() > 1) {
                let big = f.orbits.iter().find(|o| o.len() > 1).unwrap();
                let mut v = vec![0i64; rs.rank()];
                v[big[0]] = 1;
                assert!(f.fold_weight(&Weight(v)).is_err());
            }
        }
    }

    #[test]
    fn rho_folds_to_rho() {
        for (src, order) in [("A3", 2), ("A5", 2), ("D4", 3), ("D5", 2), ("E6", 2)] {
            let (rs, f) = folded(src, order);
            let target = build(f.target);
            assert_eq!(f.fold_weight(&rs.rho).unwrap(), target.rho, "{src}");
        }
    }

    #[test]
    fn fire_decomposition() {
        for (src, order) in [("A3", 2), ("A5", 2), ("D4", 3), ("D5", 2), ("E6", 2)] {
            let (rs, f) = folded(src, order);
            let target = build(f.target);
            let mut samples = vec![Weight::zero(target.rank()), target.rho.clone()];
            for i in 0..target.rank() {
                samples.push(Weight::fundamental(target.rank(), i));
            }
            samples.push(Weight((0..target.rank() as i64).collect()));
            for mu in samples {
                let lam = f.unfold_weight(&mu);
                assert!(folded_fire_decomposes(&rs, &f, &lam).unwrap(), "{src} at {mu}");
            }
        }
    }

    #[test]
    fn confluence_transports_but_not_conversely() {
        let (a3, f) = folded("A3", 2);
        // Positive direction: confluent from 0 on both sides.
        let zero = Weight::zero(3);
        let (src, tgt) = confluence_pair(&a3, &f, &zero, 1_000_000).unwrap();
        assert!(src && tgt);
        // Converse failure: the image of ω_2 is confluent in B2 while ω_2
        // itself is not confluent in A3.
        let omega2 = Weight(vec![0, 1, 0]);
        let (src, tgt) = confluence_pair(&a3, &f, &omega2, 1_000_000).unwrap();
        assert!(!src && tgt);
    }
}
