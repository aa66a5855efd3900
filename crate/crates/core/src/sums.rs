//! 2-sums and the canonical tree decomposition of a connected matroid.
//!
//! The 2-sum glues two matroids along basepoint elements: its circuits are
//! the circuits avoiding the basepoints of either part together with
//! (C1 − p1) ∪ (C2 − p2) for circuits through both basepoints. Splitting a
//! connected matroid along exact 2-separations and merging adjacent rank-one
//! (and corank-one) uniform nodes afterwards yields the canonical tree whose
//! nodes are 3-connected, U_{1,n}, or U_{m−1,m} with no two adjacent nodes of
//! the same uniform kind; the tree is unique up to edge relabeling, which the
//! permutation-invariance checks exercise.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset, MAX_EXPLICIT};
use crate::matroid::Matroid;

/// Builds a matroid from an antichain of circuits: a set is independent iff
/// it contains no circuit. Callers guarantee the family is a matroid circuit
/// family; the exchange validation is the tripwire.
pub fn matroid_from_circuits(ground: GroundSet, circuits: &[Subset]) -> Result<Matroid> {
    let n = ground.len();
    if n > MAX_EXPLICIT {
        return Err(Error::GroundSetOverflow(n, MAX_EXPLICIT));
    }
    let size = 1usize << n;
    let mut best = 0usize;
    let mut indep = vec![false; size];
    for s in 0..size as u32 {
        let sub = Subset(s);
        if circuits.iter().all(|c| !c.is_subset_of(sub)) {
            indep[s as usize] = true;
            best = best.max(sub.len());
        }
    }
    let bases: Vec<Subset> = (0..size as u32)
        .map(Subset)
        .filter(|s| s.len() == best && indep[s.0 as usize])
        .collect();
    Matroid::validate(ground, bases)
}

fn minimal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by_key(|s| s.len());
    let mut out: Vec<Subset> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| m.is_subset_of(s)) {
            out.push(s);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// 2-sum of `m1` and `m2` along the basepoints `p1`, `p2`. Both parts must
/// have at least three elements and the basepoints may be neither loops nor
/// coloops. Both parts are minors of the result.
pub fn twosum(m1: &Matroid, m2: &Matroid, p1: &str, p2: &str) -> Result<Matroid> {
    if m1.size() < 3 || m2.size() < 3 {
        return Err(Error::PartTooSmall(format!(
            "2-sum parts need ≥ 3 elements, got {} and {}",
            m1.size(),
            m2.size()
        )));
    }
    let q1 = m1.ground().position_ok(p1)?;
    let q2 = m2.ground().position_ok(p2)?;
    for (m, q, lbl) in [(m1, q1, p1), (m2, q2, p2)] {
        if m.loops().contains(q) || m.coloops().contains(q) {
            return Err(Error::BasepointDegenerate(lbl.to_string()));
        }
    }
    let n = m1.size() + m2.size() - 2;
    if n > MAX_EXPLICIT {
        return Err(Error::GroundSetOverflow(n, MAX_EXPLICIT));
    }
    let mut labels: Vec<String> = Vec::with_capacity(n);
    for (i, l) in m1.ground().labels().iter().enumerate() {
        if i != q1 {
            labels.push(l.clone());
        }
    }
    for (i, l) in m2.ground().labels().iter().enumerate() {
        if i != q2 {
            labels.push(l.clone());
        }
    }
    let ground = GroundSet::new(labels)?;
    let n1 = m1.size() - 1;
    let shift1 = |c: Subset| c.squeeze(q1);
    let shift2 = |c: Subset| Subset(c.squeeze(q2).0 << n1);
    let mut circuits: Vec<Subset> = Vec::new();
    let c1: Vec<Subset> = m1.circuits();
    let c2: Vec<Subset> = m2.circuits();
    for &c in &c1 {
        if !c.contains(q1) {
            circuits.push(shift1(c));
        }
    }
    for &c in &c2 {
        if !c.contains(q2) {
            circuits.push(shift2(c));
        }
    }
    for &a in c1.iter().filter(|c| c.contains(q1)) {
        for &b in c2.iter().filter(|c| c.contains(q2)) {
            circuits.push(shift1(a.without(q1)).union(shift2(b.without(q2))));
        }
    }
    let circuits = minimal_sets(circuits);
    let m = matroid_from_circuits(ground, &circuits)?;
    debug_assert_eq!(m.rank(), m1.rank() + m2.rank() - 1);
    Ok(m)
}

/// Matroid-labeled tree: nodes carry matroids, edges carry basepoint labels;
/// each basepoint occurs in exactly the two endpoint matroids.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub nodes: Vec<Matroid>,
    pub edges: Vec<(usize, usize, String)>,
}

fn is_rank1_uniform(m: &Matroid) -> bool {
    m.rank() == 1 && m.as_uniform().is_some()
}

fn is_corank1_uniform(m: &Matroid) -> bool {
    m.corank() == 1 && m.as_uniform().is_some()
}

impl TreeDecomposition {
    pub fn single(m: Matroid) -> TreeDecomposition {
        TreeDecomposition {
            nodes: vec![m],
            edges: Vec::new(),
        }
    }

    /// Structural invariants of a matroid-labeled tree.
    pub fn validate_tree(&self) -> Result<()> {
        let k = self.nodes.len();
        if k == 0 {
            return Err(Error::InvalidTree("no nodes".into()));
        }
        if self.edges.len() != k - 1 {
            return Err(Error::InvalidTree("edge count is not nodes−1".into()));
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, j, l) in &self.edges {
            if *i >= k || *j >= k || i == j {
                return Err(Error::InvalidTree("bad edge endpoints".into()));
            }
            let (a, b) = (find(&mut parent, *i), find(&mut parent, *j));
            if a == b {
                return Err(Error::InvalidTree("cycle".into()));
            }
            parent[a] = b;
            for end in [*i, *j] {
                let m = &self.nodes[end];
                let Some(p) = m.ground().position(l) else {
                    return Err(Error::InvalidTree(format!(
                        "basepoint {l} missing from node {end}"
                    )));
                };
                if m.size() >= 2 && m.lambda(Subset::singleton(p)) == 0 {
                    return Err(Error::InvalidTree(format!(
                        "basepoint {l} is a separator of node {end}"
                    )));
                }
            }
        }
        // shared labels are exactly the edge basepoints of adjacent nodes
        for i in 0..k {
            for j in i + 1..k {
                let shared: Vec<&String> = self.nodes[i]
                    .ground()
                    .labels()
                    .iter()
                    .filter(|l| self.nodes[j].ground().position(l).is_some())
                    .collect();
                let edge = self
                    .edges
                    .iter()
                    .find(|(a, b, _)| (*a == i && *b == j) || (*a == j && *b == i));
                match edge {
                    Some((_, _, l)) => {
                        if shared.len() != 1 || shared[0] != l {
                            return Err(Error::InvalidTree(format!(
                                "nodes {i},{j} must share exactly the basepoint {l}"
                            )));
                        }
                    }
                    None => {
                        if !shared.is_empty() {
                            return Err(Error::InvalidTree(format!(
                                "non-adjacent nodes {i},{j} share {shared:?}"
                            )));
                        }
                    }
                }
            }
        }
        if k > 1 && self.nodes.iter().any(|m| m.size() < 3) {
            return Err(Error::InvalidTree("node with fewer than 3 elements".into()));
        }
        Ok(())
    }

    /// Canonical-form conditions on top of the tree invariants.
    pub fn check_canonical(&self) -> Result<()> {
        self.validate_tree()?;
        for (idx, m) in self.nodes.iter().enumerate() {
            let ok = self.nodes.len() == 1 && m.size() < 3
                || m.connectivity().is_three_connected
                || (is_rank1_uniform(m) || is_corank1_uniform(m)) && m.size() >= 3;
            if !ok {
                return Err(Error::InvalidTree(format!(
                    "node {idx} is neither 3-connected nor uniform of (co)rank one"
                )));
            }
        }
        for (i, j, _) in &self.edges {
            let (a, b) = (&self.nodes[*i], &self.nodes[*j]);
            if is_rank1_uniform(a) && is_rank1_uniform(b) {
                return Err(Error::InvalidTree(format!(
                    "adjacent rank-one uniform nodes {i},{j}"
                )));
            }
            if is_corank1_uniform(a) && is_corank1_uniform(b) {
                return Err(Error::InvalidTree(format!(
                    "adjacent corank-one uniform nodes {i},{j}"
                )));
            }
        }
        Ok(())
    }

    /// Multiset of (node iso-invariant key, degree) pairs; the uniqueness
    /// surrogate compared across relabeled copies.
    pub fn shape(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize, usize)> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let deg = self
                    .edges
                    .iter()
                    .filter(|(a, b, _)| *a == i || *b == i)
                    .count();
                (m.size(), m.rank(), m.bases().len(), deg)
            })
            .collect();
        out.sort();
        out
    }

    /// Indented text rendering for the CLI.
    pub fn render(&self) -> String {
        if self.nodes.is_empty() {
            return String::new();
        }
        let mut adj: Vec<Vec<(usize, &str)>> = vec![Vec::new(); self.nodes.len()];
        for (i, j, l) in &self.edges {
            adj[*i].push((*j, l));
            adj[*j].push((*i, l));
        }
        let mut out = String::new();
        let mut seen = vec![false; self.nodes.len()];
        fn describe(m: &Matroid) -> String {
            let kind = match m.as_uniform() {
                Some((r, n)) => format!("U_{r}_{n}"),
                None => format!("rank {} on {} elements", m.rank(), m.size()),
            };
            format!("{kind} [{}]", m.ground().labels().join(" "))
        }
        fn walk(
            t: &TreeDecomposition,
            adj: &[Vec<(usize, &str)>],
            seen: &mut [bool],
            out: &mut String,
            node: usize,
            depth: usize,
            via: Option<&str>,
        ) {
            seen[node] = true;
            let indent = "  ".repeat(depth);
            match via {
                None => out.push_str(&format!("{indent}{}\n", describe(&t.nodes[node]))),
                Some(l) => out.push_str(&format!(
                    "{indent}--{l}-- {}\n",
                    describe(&t.nodes[node])
                )),
            }
            for &(next, l) in &adj[node] {
                if !seen[next] {
                    walk(t, adj, seen, out, next, depth + 1, Some(l));
                }
            }
        }
        walk(self, &adj, &mut seen, &mut out, 0, 0, None);
        out
    }
}

/// Exact 2-separations: λ(A) = 1 with both sides of size ≥ 2.
fn exact_2separations(m: &Matroid) -> Vec<Subset> {
    let n = m.size();
    if n < 4 {
        return Vec::new();
    }
    let top = (1u32 << n) - 1;
    (1..top)
        .map(Subset)
        .filter(|&a| a.len() >= 2 && n - a.len() >= 2 && m.lambda(a) == 1)
        .collect()
}

/// The side-A part of an exact 2-separation, on A plus a fresh basepoint:
/// circuits inside A plus the minimal sets (C ∩ A) + p over crossing circuits.
fn split_part(m: &Matroid, a: Subset, basepoint: &str, circuits: &[Subset]) -> Result<Matroid> {
    let positions: Vec<usize> = a.iter().collect();
    let mut labels: Vec<String> = positions
        .iter()
        .map(|&p| m.ground().label(p).to_string())
        .collect();
    labels.push(basepoint.to_string());
    let ground = GroundSet::new(labels)?;
    let p_bit = positions.len();
    let reindex = |c: Subset| -> Subset {
        let mut w = 0u32;
        for (i, &p) in positions.iter().enumerate() {
            if c.contains(p) {
                w |= 1 << i;
            }
        }
        Subset(w)
    };
    let mut family: Vec<Subset> = Vec::new();
    for &c in circuits {
        if c.is_subset_of(a) {
            family.push(reindex(c));
        } else if c.intersects(a) {
            family.push(reindex(c.inter(a)).with(p_bit));
        }
    }
    matroid_from_circuits(ground, &minimal_sets(family))
}

fn decompose_rec(m: &Matroid, counter: &mut usize) -> Result<TreeDecomposition> {
    let seps = exact_2separations(m);
    let Some(&a) = seps.iter().min() else {
        return Ok(TreeDecomposition::single(m.clone()));
    };
    *counter += 1;
    let basepoint = format!("#{counter}");
    let circuits = m.circuits();
    let part_a = split_part(m, a, &basepoint, &circuits)?;
    let part_b = split_part(m, a.complement_in(m.size()), &basepoint, &circuits)?;
    debug_assert!(twosum(&part_a, &part_b, &basepoint, &basepoint)
        .map(|s| s.equal_labeled(m))
        .unwrap_or(false));
    let ta = decompose_rec(&part_a, counter)?;
    let tb = decompose_rec(&part_b, counter)?;
    let offset = ta.nodes.len();
    let mut nodes = ta.nodes;
    nodes.extend(tb.nodes);
    let mut edges = ta.edges;
    edges.extend(tb.edges.into_iter().map(|(i, j, l)| (i + offset, j + offset, l)));
    let find_holder = |nodes: &[Matroid], range: std::ops::Range<usize>| {
        range
            .clone()
            .find(|&i| nodes[i].ground().position(&basepoint).is_some())
            .expect("basepoint lives in exactly one node of its subtree")
    };
    let i = find_holder(&nodes, 0..offset);
    let j = find_holder(&nodes, offset..nodes.len());
    edges.push((i, j, basepoint));
    Ok(TreeDecomposition { nodes, edges })
}

/// Canonical tree decomposition: split fully along exact 2-separations
/// (lexicographically least side first, for determinism), then merge adjacent
/// rank-one uniform pairs and adjacent corank-one uniform pairs.
pub fn tree_decompose(m: &Matroid) -> Result<TreeDecomposition> {
    if m.size() == 0 {
        return Err(Error::PreconditionViolated("empty ground set".into()));
    }
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    if m.size() < 3 {
        return Ok(TreeDecomposition::single(m.clone()));
    }
    let mut counter = 0usize;
    let mut t = decompose_rec(m, &mut counter)?;
    loop {
        let target = t.edges.iter().position(|(i, j, _)| {
            let (a, b) = (&t.nodes[*i], &t.nodes[*j]);
            (is_rank1_uniform(a) && is_rank1_uniform(b))
                || (is_corank1_uniform(a) && is_corank1_uniform(b))
        });
        let Some(eidx) = target else { break };
        let (i, j, l) = t.edges.remove(eidx);
        let merged = twosum(&t.nodes[i], &t.nodes[j], &l, &l)?;
        t.nodes[i] = merged;
        // drop node j, rewire its edges to the merged node's new index
        t.nodes.remove(j);
        let ni = if i > j { i - 1 } else { i };
        for e in t.edges.iter_mut() {
            for end in [&mut e.0, &mut e.1] {
                if *end == j {
                    *end = ni;
                } else if *end > j {
                    *end -= 1;
                }
            }
        }
    }
    t.validate_tree()?;
    Ok(t)
}

/// Folds the tree back into a single matroid by repeated 2-sums; the 2-sum is
/// associative, so the fold order is immaterial.
pub fn reconstruct(t: &TreeDecomposition) -> Result<Matroid> {
    t.validate_tree()?;
    let mut nodes: Vec<Matroid> = t.nodes.clone();
    let mut edges: Vec<(usize, usize, String)> = t.edges.clone();
    while let Some((i, j, l)) = edges.pop() {
        let merged = twosum(&nodes[i], &nodes[j], &l, &l)?;
        nodes[i] = merged;
        nodes.remove(j);
        let ni = if i > j { i - 1 } else { i };
        for e in edges.iter_mut() {
            for end in [&mut e.0, &mut e.1] {
                if *end == j {
                    *end = ni;
                } else if *end > j {
                    *end -= 1;
                }
            }
        }
    }
    Ok(nodes.into_iter().next().expect("tree has a node"))
}

/// For every pair of tree nodes, asserts that the original matroid has a
/// minor isomorphic to the 2-sum of the pair glued along its path basepoints.
pub fn tree_minor_check(t: &TreeDecomposition, m: &Matroid) -> Result<Vec<(usize, usize, bool)>> {
    t.validate_tree()?;
    let k = t.nodes.len();
    let mut adj: Vec<Vec<(usize, String)>> = vec![Vec::new(); k];
    for (i, j, l) in &t.edges {
        adj[*i].push((*j, l.clone()));
        adj[*j].push((*i, l.clone()));
    }
    let mut out = Vec::new();
    for i in 0..k {
        // BFS recording the first/last edge labels on each path from i
        let mut first: Vec<Option<String>> = vec![None; k];
        let mut last: Vec<Option<String>> = vec![None; k];
        let mut queue = std::collections::VecDeque::from([i]);
        let mut seen = vec![false; k];
        seen[i] = true;
        while let Some(u) = queue.pop_front() {
            for (v, l) in &adj[u] {
                if !seen[*v] {
                    seen[*v] = true;
                    first[*v] = first[u].clone().or_else(|| Some(l.clone()));
                    last[*v] = Some(l.clone());
                    queue.push_back(*v);
                }
            }
        }
        for j in i + 1..k {
            let (p_i, p_j) = (
                first[j].clone().expect("tree is connected"),
                last[j].clone().expect("tree is connected"),
            );
            let sum = twosum(&t.nodes[i], &t.nodes[j], &p_i, &p_j)?;
            let found = crate::minors::has_minor(m, &sum).is_some();
            out.push((i, j, found));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{graphic, is_binary, wheel_edges};
    use crate::minors::isomorphic;

    fn u24_named(labels: [&str; 4]) -> Matroid {
        Matroid::uniform(2, 4)
            .relabel(GroundSet::new(labels.to_vec()).unwrap())
            .unwrap()
    }

    fn r6() -> Matroid {
        twosum(
            &u24_named(["a", "b", "c", "p"]),
            &u24_named(["d", "e", "f", "q"]),
            "p",
            "q",
        )
        .unwrap()
    }

    #[test]
    fn r6_shape() {
        let m = r6();
        assert_eq!(m.size(), 6);
        assert_eq!(m.rank(), 3);
        assert!(m.is_connected());
        assert!(!m.connectivity().is_three_connected);
        assert!(is_binary(&m).is_none());
    }

    #[test]
    fn twosum_parts_are_minors() {
        let m = r6();
        let u = Matroid::uniform(2, 4);
        assert!(crate::minors::has_minor(&m, &u).is_some());
    }

    #[test]
    fn binary_twosum_is_binary() {
        let mk4 = graphic(&wheel_edges(3), None).unwrap();
        let u23 = Matroid::uniform(2, 3)
            .relabel(GroundSet::new(vec!["x", "y", "z"]).unwrap())
            .unwrap();
        let g = GroundSet::new(vec!["u", "v", "w"]).unwrap();
        let u13 = Matroid::uniform(1, 3).relabel(g).unwrap();
        for (m1, p1) in [(&mk4, "a"), (&u23, "x")] {
            for (m2, p2) in [(&u13, "u"), (&u23, "x")] {
                if std::ptr::eq(m1, m2) {
                    continue;
                }
                let s = twosum(m1, m2, p1, p2).unwrap();
                assert!(is_binary(&s).is_some(), "2-sum of binaries stays binary");
            }
        }
    }

    #[test]
    fn twosum_rejects_degenerate_basepoints() {
        let u11 = Matroid::uniform(1, 1);
        assert!(matches!(
            twosum(&u11, &u11, "a", "a"),
            Err(Error::PartTooSmall(_))
        ));
        let with_coloop = Matroid::uniform(2, 3)
            .direct_sum(
                &Matroid::uniform(1, 1)
                    .relabel(GroundSet::new(vec!["k"]).unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert!(matches!(
            twosum(&with_coloop, &Matroid::uniform(2, 4), "k", "a"),
            Err(Error::BasepointDegenerate(_))
        ));
    }

    #[test]
    fn decompose_r6_into_two_u24_nodes() {
        let m = r6();
        let t = tree_decompose(&m).unwrap();
        assert_eq!(t.nodes.len(), 2);
        assert_eq!(t.edges.len(), 1);
        for node in &t.nodes {
            assert_eq!(node.as_uniform(), Some((2, 4)));
        }
        t.check_canonical().unwrap();
        let back = reconstruct(&t).unwrap();
        assert!(back.equal_labeled(&m));
    }

    #[test]
    fn decompose_three_connected_is_single_node() {
        let mk4 = graphic(&wheel_edges(3), None).unwrap();
        let t = tree_decompose(&mk4).unwrap();
        assert_eq!(t.nodes.len(), 1);
        t.check_canonical().unwrap();
        assert_eq!(reconstruct(&t).unwrap(), mk4);
    }

    #[test]
    fn decompose_k_into_u24_with_three_u13_nodes() {
        // K = U_{2,4} with three elements doubled in parallel
        let plan = vec![
            ("a".to_string(), 0, 1),
            ("b".to_string(), 0, 1),
            ("c".to_string(), 0, 1),
        ];
        let k = Matroid::uniform(2, 4).series_parallel_extend(&plan).unwrap();
        let t = tree_decompose(&k).unwrap();
        t.check_canonical().unwrap();
        assert_eq!(t.nodes.len(), 4);
        let mut kinds: Vec<Option<(usize, usize)>> =
            t.nodes.iter().map(|n| n.as_uniform()).collect();
        kinds.sort();
        assert_eq!(
            kinds,
            vec![
                Some((1, 3)),
                Some((1, 3)),
                Some((1, 3)),
                Some((2, 4)),
            ]
        );
        assert!(reconstruct(&t).unwrap().equal_labeled(&k));
    }

    #[test]
    fn merge_produces_canonical_uniform_nodes() {
        // a 4-cycle splits into two triangles which must merge back to U_{3,4}
        let c4 = graphic(&[(0, 1), (1, 2), (2, 3), (3, 0)], None).unwrap();
        assert_eq!(c4.as_uniform(), Some((3, 4)));
        let t = tree_decompose(&c4).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[0].as_uniform(), Some((3, 4)));
    }

    #[test]
    fn round_trip_on_samples() {
        let mk4 = graphic(&wheel_edges(3), None).unwrap();
        let samples = vec![
            r6(),
            Matroid::uniform(1, 4),
            Matroid::uniform(3, 4),
            Matroid::uniform(2, 5),
            mk4.parallel_extend("a", "x").unwrap(),
            mk4.series_extend("f", "y").unwrap(),
        ];
        for m in samples {
            let t = tree_decompose(&m).unwrap();
            t.check_canonical().unwrap();
            assert!(reconstruct(&t).unwrap().equal_labeled(&m), "{m:?}");
        }
    }

    #[test]
    fn permutation_invariant_shape() {
        let mk4 = graphic(&wheel_edges(3), None).unwrap();
        let host = mk4.parallel_extend("b", "x").unwrap();
        let t1 = tree_decompose(&host).unwrap();
        // relabel by reversing positions
        let n = host.size();
        let rev: Vec<Subset> = host
            .bases()
            .iter()
            .map(|b| Subset::from_positions(b.iter().map(|p| n - 1 - p)))
            .collect();
        let relabeled = Matroid::validate(host.ground().clone(), rev).unwrap();
        let t2 = tree_decompose(&relabeled).unwrap();
        assert_eq!(t1.shape(), t2.shape());
    }

    #[test]
    fn tree_minor_check_r6() {
        let m = r6();
        let t = tree_decompose(&m).unwrap();
        let checks = tree_minor_check(&t, &m).unwrap();
        assert!(checks.iter().all(|(_, _, ok)| *ok));
    }

    #[test]
    fn decompose_rejects_disconnected_input() {
        let coloop = Matroid::uniform(1, 1)
            .relabel(GroundSet::new(vec!["z"]).unwrap())
            .unwrap();
        let m = Matroid::uniform(2, 4).direct_sum(&coloop).unwrap();
        assert!(matches!(tree_decompose(&m), Err(Error::NotConnected)));
    }

    #[test]
    fn reconstruct_rejects_invalid_trees() {
        let t = TreeDecomposition {
            nodes: vec![Matroid::uniform(2, 4), Matroid::uniform(2, 4)],
            edges: vec![(0, 1, "zz".to_string())],
        };
        assert!(matches!(reconstruct(&t), Err(Error::InvalidTree(_))));
    }

    #[test]
    fn folded_path_of_two_u24_is_r6() {
        let a = u24_named(["a", "b", "c", "p"]);
        let b = u24_named(["d", "e", "f", "p"]);
        let t = TreeDecomposition {
            nodes: vec![a, b],
            edges: vec![(0, 1, "p".to_string())],
        };
        let m = reconstruct(&t).unwrap();
        assert!(isomorphic(&m, &r6()).is_some());
    }
}
