//! The central-firing relation `λ → λ + α` for positive roots `α ⊥ λ`:
//! move enumeration, the termination potential, exhaustive normal-form
//! computation, confluence decisions, and graph exploration.
//!
//! Deciding confluence by unique normal form is justified by termination:
//! the potential `φ(λ) = ⟨2ρ − λ, 2ρ − λ⟩` strictly decreases along every
//! firing edge, so the relation is terminating, and for a terminating
//! relation every normal form of a weight reachable from `λ` is a normal
//! form of `λ`; hence `λ` has a unique normal form iff the relation is
//! confluent from `λ`.

use crate::linalg::Rat;
use crate::rootsys::{Family, RootSystem, Weight};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

/// Default exploration budget (number of distinct weights) when none is
/// configured; overridable through the CLI or the `CENTRALFIRE_BUDGET`
/// environment variable.
pub const DEFAULT_BUDGET: usize = 50_000_000;

/// The effective default budget: `CENTRALFIRE_BUDGET` when set and valid,
/// otherwise [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> usize {
    std::env::var("CENTRALFIRE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// Indices (into `rs.positive_roots`) of the roots orthogonal to `λ`, in the
/// fixed positive-root enumeration order.
pub fn available_moves(rs: &RootSystem, lam: &Weight) -> Vec<usize> {
    rs.positive_roots
        .iter()
        .enumerate()
        .filter(|(_, alpha)| rs.pairing(lam, alpha) == 0)
        .map(|(k, _)| k)
        .collect()
}

/// A weight is stable when no positive root is orthogonal to it.
pub fn is_stable(rs: &RootSystem, lam: &Weight) -> bool {
    rs.positive_roots
        .iter()
        .all(|alpha| rs.pairing(lam, alpha) != 0)
}

/// The termination potential `2·⟨2ρ − λ, 2ρ − λ⟩`, as an exact rational.
///
/// The value is a nonnegative integer whenever `λ` lies in the root lattice
/// (in particular along any firing sequence started there), but general
/// weights can give a fractional constant offset; differences along firing
/// edges are always even integers, and every edge drops the potential by at
/// least `2·min_α⟨α,α⟩`.
pub fn potential(rs: &RootSystem, lam: &Weight) -> Rat {
    let two_rho = Weight(rs.rho.0.iter().map(|c| 2 * c).collect());
    let diff = Weight(
        two_rho
            .0
            .iter()
            .zip(&lam.0)
            .map(|(a, b)| a - b)
            .collect(),
    );
    rs.inner2(&diff, &diff)
}

/// Explored firing graph from an origin weight.  Nodes are sorted
/// lexicographically on coordinates, and edges on (source, root, target), so
/// exports are deterministic.
#[derive(Clone, Debug)]
pub struct FiringGraph {
    pub origin: Weight,
    pub nodes: Vec<Weight>,
    /// `(from, root, to)`: indices into `nodes` / `rs.positive_roots` / `nodes`.
    pub edges: Vec<(usize, usize, usize)>,
    /// False when the node budget truncated the exploration.
    pub complete: bool,
}

impl FiringGraph {
    pub fn node_index(&self, w: &Weight) -> Option<usize> {
        self.nodes.binary_search(w).ok()
    }

    /// Indices of stable nodes.
    pub fn stable_nodes(&self, rs: &RootSystem) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&k| is_stable(rs, &self.nodes[k]))
            .collect()
    }

    /// Memoized normal-form sets: for each node, the set of stable nodes
    /// reachable from it.  Only meaningful on complete graphs.
    pub fn normal_form_map(&self, rs: &RootSystem) -> Vec<BTreeSet<usize>> {
        let n = self.nodes.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(from, _, to) in &self.edges {
            out[from].push(to);
        }
        let mut memo: Vec<Option<BTreeSet<usize>>> = vec![None; n];
        // Process nodes in increasing-potential order so successors are done
        // first (edges strictly decrease the potential).
        let pots: Vec<Rat> = self.nodes.iter().map(|w| potential(rs, w)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| pots[a].cmp(&pots[b]));
        for k in order {
            let mut set = BTreeSet::new();
            if out[k].is_empty() {
                set.insert(k);
            } else {
                for &succ in &out[k] {
                    set.extend(memo[succ].as_ref().expect("successor processed first").iter());
                }
            }
            memo[k] = Some(set);
        }
        memo.into_iter().map(|s| s.unwrap()).collect()
    }

    /// DOT export: nodes labeled by weight coordinates, edges by the fired
    /// root's simple-root coordinates.
    pub fn to_dot(&self, rs: &RootSystem) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        writeln!(s, "digraph firing {{").unwrap();
        writeln!(s, "  // {} from {}", rs.ty, self.origin).unwrap();
        for (k, w) in self.nodes.iter().enumerate() {
            writeln!(s, "  n{k} [label=\"{w}\"];").unwrap();
        }
        for &(from, root, to) in &self.edges {
            let sc = &rs.positive_roots[root].simple_coords;
            let label: Vec<String> = sc.iter().map(|c| c.to_string()).collect();
            writeln!(s, "  n{from} -> n{to} [label=\"{}\"];", label.join(",")).unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }

    /// JSON export: `{nodes, edges, normal_forms, complete}`.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        #[derive(Serialize)]
        struct Edge {
            from: usize,
            root: Vec<i64>,
            to: usize,
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|&(from, root, to)| Edge {
                from,
                root: rs.positive_roots[root].simple_coords.clone(),
                to,
            })
            .collect();
        let normal_forms: Vec<Vec<&Weight>> = if self.complete {
            self.normal_form_map(rs)
                .iter()
                .map(|set| set.iter().map(|&k| &self.nodes[k]).collect())
                .collect()
        } else {
            Vec::new()
        };
        serde_json::json!({
            "schema": 1,
            "type": rs.ty.to_string(),
            "origin": self.origin,
            "nodes": self.nodes,
            "edges": serde_json::to_value(edges).unwrap(),
            "normal_forms": normal_forms,
            "complete": self.complete,
        })
    }
}

/// Core reachability walk.  Calls `on_edge` for every explored edge and
/// `on_stable` for every stable weight found; either callback can stop the
/// search early by returning `false`.
fn explore<FE, FS>(
    rs: &RootSystem,
    origin: &Weight,
    budget: usize,
    mut on_edge: FE,
    mut on_stable: FS,
) -> Result<(Vec<Weight>, bool)>
where
    FE: FnMut(&Weight, usize, &Weight) -> bool,
    FS: FnMut(&Weight) -> bool,
{
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut stack: Vec<Weight> = Vec::new();
    seen.insert(origin.0.clone(), ());
    stack.push(origin.clone());
    let mut nodes = vec![origin.clone()];
    let mut complete = true;
    'outer: while let Some(w) = stack.pop() {
        let moves = available_moves(rs, &w);
        if moves.is_empty() {
            if !on_stable(&w) {
                complete = false;
                break;
            }
            continue;
        }
        for k in moves {
            let succ = rs.add_root(&w, &rs.positive_roots[k])?;
            if !on_edge(&w, k, &succ) {
                complete = false;
                break 'outer;
            }
            if !seen.contains_key(&succ.0) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded {
                        explored: seen.len(),
                    });
                }
                seen.insert(succ.0.clone(), ());
                nodes.push(succ.clone());
                stack.push(succ);
            }
        }
    }
    Ok((nodes, complete))
}

/// The exact set of stable weights reachable from `λ`, by exhaustive
/// memoized search.  Deterministic (the result is a sorted set).
pub fn normal_forms(rs: &RootSystem, lam: &Weight, budget: usize) -> Result<BTreeSet<Weight>> {
    let mut stables = BTreeSet::new();
    explore(
        rs,
        lam,
        budget,
        |_, _, _| true,
        |w| {
            stables.insert(w.clone());
            true
        },
    )?;
    Ok(stables)
}

/// Like [`normal_forms`], but additionally reports the number of distinct
/// weights explored.
pub fn normal_forms_counted(
    rs: &RootSystem,
    lam: &Weight,
    budget: usize,
) -> Result<(BTreeSet<Weight>, usize)> {
    let mut stables = BTreeSet::new();
    let (nodes, _) = explore(
        rs,
        lam,
        budget,
        |_, _, _| true,
        |w| {
            stables.insert(w.clone());
            true
        },
    )?;
    Ok((stables, nodes.len()))
}

/// Whether central-firing is confluent from `λ`, i.e. whether `λ` has a
/// unique normal form.  Stops early as soon as two distinct stable weights
/// are reached, so non-confluent cases are typically cheap; confluent cases
/// require exploring the full reachable set.
pub fn is_confluent_from(rs: &RootSystem, lam: &Weight, budget: usize) -> Result<bool> {
    let mut stables: BTreeSet<Weight> = BTreeSet::new();
    let res = explore(
        rs,
        lam,
        budget,
        |_, _, _| true,
        |w| {
            stables.insert(w.clone());
            stables.len() < 2
        },
    );
    match res {
        Ok(_) => Ok(stables.len() == 1),
        Err(e) => {
            if stables.len() >= 2 {
                Ok(false)
            } else {
                Err(e)
            }
        }
    }
}

/// Confluence decision plus the number of distinct weights explored.
pub fn is_confluent_from_counted(
    rs: &RootSystem,
    lam: &Weight,
    budget: usize,
) -> Result<(bool, usize)> {
    let mut stables: BTreeSet<Weight> = BTreeSet::new();
    let res = explore(
        rs,
        lam,
        budget,
        |_, _, _| true,
        |w| {
            stables.insert(w.clone());
            stables.len() < 2
        },
    );
    match res {
        Ok((nodes, _)) => Ok((stables.len() == 1, nodes.len())),
        Err(Error::BudgetExceeded { explored }) if stables.len() >= 2 => Ok((false, explored)),
        Err(e) => Err(e),
    }
}

/// Explore the full firing graph from `λ`, stopping (with `complete = false`)
/// when the budget is reached.
pub fn explore_graph(rs: &RootSystem, lam: &Weight, budget: usize) -> FiringGraph {
    assert!(budget > 0, "budget must be positive");
    let mut raw_edges: Vec<(Weight, usize, Weight)> = Vec::new();
    let res = explore(
        rs,
        lam,
        budget,
        |from, root, to| {
            raw_edges.push((from.clone(), root, to.clone()));
            true
        },
        |_| true,
    );
    let (mut nodes, complete) = match res {
        Ok((nodes, complete)) => (nodes, complete),
        Err(Error::BudgetExceeded { .. }) => {
            // Rebuild the node set from the edges we did record.
            let mut nodes: Vec<Weight> = vec![lam.clone()];
            for (f, _, t) in &raw_edges {
                nodes.push(f.clone());
                nodes.push(t.clone());
            }
            (nodes, false)
        }
        Err(e) => panic!("exploration cannot fail otherwise: {e}"),
    };
    nodes.sort();
    nodes.dedup();
    let index: HashMap<&Weight, usize> = nodes.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut edges: Vec<(usize, usize, usize)> = raw_edges
        .iter()
        .map(|(f, r, t)| (index[f], *r, index[t]))
        .collect();
    edges.sort();
    edges.dedup();
    FiringGraph {
        origin: lam.clone(),
        nodes,
        edges,
        complete,
    }
}

/// The predicted confluence pattern from `ω ∈ Ω ∪ {0}`:
/// by default confluence holds iff `ω − ρ ∉ Q`, with four exceptional
/// families — Type A is governed by an explicit parity list, `B_n` is
/// additionally confluent from `ω_n` (appearing as `ω_1` in `C_2 ≅ B_2`),
/// `D_{4n+2}` is not confluent from `0`, and `G_2` is confluent from both
/// fundamental weights.
pub fn conjecture_prediction(rs: &RootSystem, omega: &Weight) -> Result<bool> {
    let n = rs.rank();
    let ones = omega.0.iter().filter(|&&c| c == 1).count();
    let zeros = omega.0.iter().filter(|&&c| c == 0).count();
    if !(ones + zeros == n && ones <= 1) {
        return Err(Error::NotFundamental(omega.0.clone()));
    }
    let fund_index = omega.0.iter().position(|&c| c == 1); // 0-based, None for ω=0
    let default = || {
        let diff = Weight(
            omega
                .0
                .iter()
                .zip(&rs.rho.0)
                .map(|(a, b)| a - b)
                .collect(),
        );
        !rs.in_root_lattice(&diff)
    };
    Ok(match rs.ty.family {
        Family::A => match fund_index {
            // n odd: confluent exactly from {0, ω_1, ω_n};
            // n even: exactly from {ω_{n/2}, ω_{n/2+1}} (1-based).
            None => n % 2 == 1,
            Some(i) => {
                if n % 2 == 1 {
                    i == 0 || i == n - 1
                } else {
                    i + 1 == n / 2 || i + 1 == n / 2 + 1
                }
            }
        },
        Family::B if fund_index == Some(n - 1) => true,
        // C_2 ≅ B_2: the short-node exception lands on ω_1 in C-labeling.
        Family::C if n == 2 && fund_index == Some(0) => true,
        Family::D if n % 4 == 2 && fund_index.is_none() => false,
        Family::G => match fund_index {
            Some(_) => true,
            None => default(),
        },
        _ => default(),
    })
}
