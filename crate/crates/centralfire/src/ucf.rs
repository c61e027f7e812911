//! The simply-laced Dynkin-diagram number game ("UCF moves"), equivalent to
//! orbit central-firing on dominant weights.
//!
//! A move picks a connected component of zero-labeled nodes, classifies its
//! induced diagram (A/D/E), and adds the appropriate affine-completion marks
//! inside the component while decrementing outside neighbors.  The same move
//! can be computed as adding the weight image of the highest root of the
//! parabolic sub-root system on the component; both implementations run on
//! every move and must agree.

use crate::rootsys::{RootSystem, Weight};
use crate::unlabeled::{orbit_moves, OrbitWeight};
use crate::{Error, Result};
use std::collections::BTreeSet;

/// A nonnegative labeling of Dynkin-diagram nodes — the same data as a
/// dominant weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UcfAssignment(pub Vec<i64>);

impl UcfAssignment {
    pub fn from_weight(lam: &Weight) -> Result<UcfAssignment> {
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam.0.clone()));
        }
        Ok(UcfAssignment(lam.0.clone()))
    }

    pub fn weight(&self) -> Weight {
        Weight(self.0.clone())
    }
}

/// A maximal connected set of zero-labeled nodes (0-based, sorted).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZeroComponent {
    pub nodes: Vec<usize>,
}

fn ensure_simply_laced(rs: &RootSystem) -> Result<()> {
    if rs.is_simply_laced() {
        Ok(())
    } else {
        Err(Error::NotSimplyLaced(rs.ty.to_string()))
    }
}

/// Connected components of `{i : f(i) = 0}` in the Dynkin graph, sorted by
/// least node.
pub fn zero_components(rs: &RootSystem, f: &UcfAssignment) -> Result<Vec<ZeroComponent>> {
    ensure_simply_laced(rs)?;
    let n = rs.rank();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if f.0[start] != 0 || seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..n {
                if !seen[j] && f.0[j] == 0 && rs.adjacent(i, j) {
                    seen[j] = true;
                    nodes.push(j);
                    queue.push(j);
                }
            }
        }
        nodes.sort();
        comps.push(ZeroComponent { nodes });
    }
    comps.sort();
    Ok(comps)
}

/// The classified shape of a connected simply-laced sub-diagram, plus the
/// affine-completion marks: `marks[k]` is the number of edges between node
/// `comp[k]` and the affine node in the extended diagram.
struct AffineData {
    marks: Vec<(usize, i64)>, // (node, increment)
}

/// Classify the induced diagram on `comp` and read off where the affine node
/// attaches: `A_1` gets a doubled edge (+2); `A_k` attaches to both path
/// endpoints; `D_k` to the neighbor of the far end of the long branch
/// (the center itself for `D_4`); `E_6`/`E_7`/`E_8` to the end of the branch
/// of length 1 / 2 / 4 respectively.
fn affine_attachment(rs: &RootSystem, comp: &[usize]) -> AffineData {
    let deg = |i: usize| comp.iter().filter(|&&j| rs.adjacent(i, j)).count();
    if comp.len() == 1 {
        return AffineData {
            marks: vec![(comp[0], 2)],
        };
    }
    let centers: Vec<usize> = comp.iter().copied().filter(|&i| deg(i) == 3).collect();
    if centers.is_empty() {
        // A path: both endpoints get a single affine edge.
        let ends: Vec<usize> = comp.iter().copied().filter(|&i| deg(i) == 1).collect();
        assert_eq!(ends.len(), 2, "a path has two endpoints");
        return AffineData {
            marks: vec![(ends[0], 1), (ends[1], 1)],
        };
    }
    assert_eq!(centers.len(), 1, "simply-laced diagrams have one fork at most");
    let center = centers[0];
    // Walk the three branches outward from the center.
    let mut branches: Vec<Vec<usize>> = Vec::new();
    for &nb in comp.iter().filter(|&&i| rs.adjacent(center, i)).collect::<Vec<_>>() {
        let mut branch = vec![nb];
        let mut prev = center;
        let mut cur = nb;
        loop {
            let next: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&j| j != prev && rs.adjacent(cur, j))
                .collect();
            match next.as_slice() {
                [] => break,
                [j] => {
                    branch.push(*j);
                    prev = cur;
                    cur = *j;
                }
                _ => unreachable!("branches are paths"),
            }
        }
        branches.push(branch);
    }
    branches.sort_by_key(|b| b.len());
    let lens: Vec<usize> = branches.iter().map(|b| b.len()).collect();
    let mark_node = match lens.as_slice() {
        // D_k: two short branches of length 1; the affine node attaches next
        // to the far end of the long branch.
        [1, 1, long] => {
            let b = &branches[2];
            if *long == 1 {
                center
            } else {
                b[long - 2]
            }
        }
        [1, 2, 2] => branches[0][0],       // E_6: end of the length-1 branch
        [1, 2, 3] => *branches[1].last().unwrap(), // E_7: end of the length-2 branch
        [1, 2, 4] => *branches[2].last().unwrap(), // E_8: end of the length-4 branch
        other => panic!("not a simply-laced diagram shape: {other:?}"),
    };
    AffineData {
        marks: vec![(mark_node, 1)],
    }
}

/// The highest root of the parabolic sub-root system supported on `comp`:
/// generated by closure inside the component, it is the unique root pairing
/// nonnegatively with every simple coroot of the component.
pub fn parabolic_highest_root(rs: &RootSystem, comp: &[usize]) -> crate::rootsys::Root {
    let n = rs.rank();
    // Closure of the component's simple roots under the component's simple
    // reflections, staying positive.
    let weight_image = |sc: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|j| (0..n).map(|i| rs.cartan[j][i] * sc[i]).sum())
            .collect()
    };
    let mut seen = std::collections::HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for &i in comp {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    let mut dominant: Option<Vec<i64>> = None;
    while let Some(sc) = queue.pop() {
        let wi = weight_image(&sc);
        if comp.iter().all(|&i| wi[i] >= 0) {
            assert!(
                dominant.is_none() || dominant.as_deref() == Some(&sc),
                "parabolic highest root must be unique"
            );
            dominant = Some(sc.clone());
        }
        for &i in comp {
            let mut refl = sc.clone();
            refl[i] -= wi[i];
            if refl.iter().all(|&c| c >= 0) && seen.insert(refl.clone()) {
                queue.push(refl);
            }
        }
    }
    let sc = dominant.expect("nonempty component has a highest root");
    let wi = weight_image(&sc);
    let length2: i64 = (0..n).map(|i| sc[i] * rs.sym[i] * wi[i]).sum();
    crate::rootsys::Root {
        simple_coords: sc,
        weight_image: wi,
        length2,
    }
}

fn ucf_move_affine(rs: &RootSystem, f: &UcfAssignment, comp: &[usize]) -> Vec<i64> {
    let mut out = f.0.clone();
    for &(node, inc) in &affine_attachment(rs, comp).marks {
        out[node] += inc;
    }
    for j in 0..rs.rank() {
        if !comp.contains(&j) && comp.iter().any(|&i| rs.adjacent(i, j)) {
            out[j] -= 1;
        }
    }
    out
}

fn ucf_move_highest_root(rs: &RootSystem, f: &UcfAssignment, comp: &[usize]) -> Vec<i64> {
    let theta = parabolic_highest_root(rs, comp);
    f.0.iter()
        .zip(&theta.weight_image)
        .map(|(a, b)| a + b)
        .collect()
}

/// Apply a UCF move to a zero component.  Both implementations (affine rule
/// and highest-root rule) are computed and must agree; the result is again a
/// nonnegative assignment.
pub fn ucf_move(rs: &RootSystem, f: &UcfAssignment, comp: &ZeroComponent) -> Result<UcfAssignment> {
    ensure_simply_laced(rs)?;
    if !zero_components(rs, f)?.contains(comp) {
        return Err(Error::MovePrecondition(format!(
            "{:?} is not a zero component of {:?}",
            comp.nodes, f.0
        )));
    }
    let a = ucf_move_affine(rs, f, &comp.nodes);
    let b = ucf_move_highest_root(rs, f, &comp.nodes);
    assert_eq!(a, b, "affine rule and highest-root rule disagree");
    assert!(a.iter().all(|&v| v >= 0), "UCF moves preserve dominance");
    Ok(UcfAssignment(a))
}

/// The game/orbit equivalence, checked at one assignment: the successor set of
/// `f` under UCF moves equals the orbit-firing successor set of `Wλ(f)`.
pub fn ucf_relation_equals_orbit_relation(rs: &RootSystem, f: &UcfAssignment) -> Result<bool> {
    let mut ucf_succ: BTreeSet<OrbitWeight> = BTreeSet::new();
    for comp in zero_components(rs, f)? {
        let next = ucf_move(rs, f, &comp)?;
        ucf_succ.insert(OrbitWeight::from_dominant(next.weight()));
    }
    let orbit_succ = orbit_moves(rs, &OrbitWeight::from_dominant(f.weight()));
    Ok(ucf_succ == orbit_succ)
}

/// The abelian property: for every ordered pair of distinct zero components,
/// firing one leaves a zero component containing the other, and the two
/// firing orders commute.
pub fn check_abelian(rs: &RootSystem, f: &UcfAssignment) -> Result<bool> {
    let comps = zero_components(rs, f)?;
    for c1 in &comps {
        for c2 in &comps {
            if c1 == c2 {
                continue;
            }
            let f1 = ucf_move(rs, f, c1)?;
            let c2_grown = zero_components(rs, &f1)?
                .into_iter()
                .find(|c| c2.nodes.iter().all(|i| c.nodes.contains(i)));
            let c2_grown = match c2_grown {
                Some(c) => c,
                None => return Ok(false),
            };
            let f12 = ucf_move(rs, &f1, &c2_grown)?;
            let f2 = ucf_move(rs, f, c2)?;
            let c1_grown = zero_components(rs, &f2)?
                .into_iter()
                .find(|c| c1.nodes.iter().all(|i| c.nodes.contains(i)));
            let c1_grown = match c1_grown {
                Some(c) => c,
                None => return Ok(false),
            };
            let f21 = ucf_move(rs, &f2, &c1_grown)?;
            if f12 != f21 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Affine-completion marks for a full simply-laced diagram, exposed for the
/// self-check against the highest root (the marks are exactly the pairings
/// `⟨θ, α_i^∨⟩`).
pub fn affine_marks(rs: &RootSystem) -> Result<Vec<i64>> {
    ensure_simply_laced(rs)?;
    let comp: Vec<usize> = (0..rs.rank()).collect();
    let mut marks = vec![0i64; rs.rank()];
    for (node, inc) in affine_attachment(rs, &comp).marks {
        marks[node] += inc;
    }
    Ok(marks)
}
