//! Explicit matroids as basis families on small ground sets.
//!
//! A [`Matroid`] stores the full list of bases as bit words. Construction goes
//! through [`Matroid::validate`], which checks the basis-exchange axiom, so any
//! value of this type is a genuine matroid. Rank queries are answered from a
//! lazily built table over all `2^n` subsets; everything else (circuits,
//! flats, duals, minors, connectivity) is derived from that table.

use crate::error::{Error, Result};
use crate::ground::{binomial, GroundSet, Subset, MAX_EXPLICIT};
use std::sync::OnceLock;
use std::fmt;

#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<Subset>, // sorted ascending by word, deduplicated
    rank: usize,
    table: OnceLock<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}
impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(r={}, n={}, bases={}, ground={:?})",
            self.rank,
            self.ground.len(),
            self.bases.len(),
            self.ground
        )
    }
}

/// Outcome of the connectivity sweep.
///
/// `witness_separation` is present exactly when the matroid fails
/// 3-connectivity; it carries the separating side and the order
/// `k = λ(A) + 1` of the separation, minimizing λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub is_connected: bool,
    pub is_three_connected: bool,
    pub witness_separation: Option<(Subset, usize)>,
}

impl Matroid {
    /// Axiom gate for every constructor: checks non-emptiness, uniform
    /// cardinality and basis exchange, then builds the matroid.
    pub fn validate(ground: GroundSet, mut bases: Vec<Subset>) -> Result<Matroid> {
        let n = ground.len();
        if n > MAX_EXPLICIT {
            return Err(Error::GroundSetOverflow(n, MAX_EXPLICIT));
        }
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        bases.sort();
        bases.dedup();
        let full = ground.full_set();
        for b in &bases {
            if !b.is_subset_of(full) {
                return Err(Error::ElementNotInGroundSet(format!(
                    "basis word {:?} has bits outside the ground set",
                    b
                )));
            }
        }
        let rank = bases[0].len();
        if bases.iter().any(|b| b.len() != rank) {
            return Err(Error::MixedCardinality);
        }
        let mut is_basis = vec![false; 1usize << n];
        for b in &bases {
            is_basis[b.0 as usize] = true;
        }
        for (i, &b1) in bases.iter().enumerate() {
            for &b2 in bases.iter().skip(i + 1) {
                for (from, to) in [(b1, b2), (b2, b1)] {
                    for x in from.minus(to).iter() {
                        let stripped = from.without(x);
                        let ok = to
                            .minus(from)
                            .iter()
                            .any(|y| is_basis[stripped.with(y).0 as usize]);
                        if !ok {
                            return Err(Error::ExchangeFailure(format!(
                                "B1={} B2={} x={}",
                                ground.word(from),
                                ground.word(to),
                                ground.label(x)
                            )));
                        }
                    }
                }
            }
        }
        Ok(Matroid {
            ground,
            bases,
            rank,
            table: OnceLock::new(),
        })
    }

    /// Uniform matroid U_{m,n} on letter labels.
    pub fn uniform(m: usize, n: usize) -> Matroid {
        assert!(m <= n && n <= MAX_EXPLICIT);
        let ground = GroundSet::letters(n);
        let bases = crate::ground::k_subsets(ground.full_set(), m);
        Matroid::validate(ground, bases).expect("uniform matroids satisfy exchange")
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.size() - self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    fn rank_table(&self) -> &[u8] {
        self.table.get_or_init(|| {
            let n = self.ground.len();
            let size = 1usize << n;
            let mut indep = vec![false; size];
            for b in &self.bases {
                indep[b.0 as usize] = true;
            }
            // independent = subset of some basis
            for s in (0..size).rev() {
                if !indep[s] {
                    for e in 0..n {
                        if s >> e & 1 == 0 && indep[s | 1 << e] {
                            indep[s] = true;
                            break;
                        }
                    }
                }
            }
            let mut rank = vec![0u8; size];
            for s in 1..size {
                if indep[s] {
                    rank[s] = (s as u32).count_ones() as u8;
                } else {
                    let mut best = 0;
                    let mut bits = s;
                    while bits != 0 {
                        let e = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        best = best.max(rank[s & !(1 << e)]);
                    }
                    rank[s] = best;
                }
            }
            rank
        })
    }

    /// Rank of a subset: max over bases B of |A ∩ B|.
    pub fn rank_of(&self, a: Subset) -> usize {
        self.rank_table()[a.0 as usize] as usize
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn is_basis(&self, a: Subset) -> bool {
        a.len() == self.rank && self.is_independent(a)
    }

    pub fn is_circuit(&self, a: Subset) -> bool {
        !a.is_empty()
            && self.rank_of(a) == a.len() - 1
            && a.iter().all(|e| self.rank_of(a.without(e)) == a.len() - 1)
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        let r = self.rank_of(a);
        a.complement_in(self.size())
            .iter()
            .all(|e| self.rank_of(a.with(e)) > r)
    }

    pub fn is_hyperplane(&self, a: Subset) -> bool {
        self.rank >= 1 && self.rank_of(a) == self.rank - 1 && self.is_flat(a)
    }

    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rank_of(a);
        let mut c = a;
        for e in a.complement_in(self.size()).iter() {
            if self.rank_of(a.with(e)) == r {
                c = c.with(e);
            }
        }
        c
    }

    /// Minimal dependent sets, ascending by word.
    pub fn circuits(&self) -> Vec<Subset> {
        self.subsets_where(|s| self.is_circuit(s))
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        self.subsets_where(|s| self.is_hyperplane(s))
    }

    pub fn cocircuits(&self) -> Vec<Subset> {
        let n = self.size();
        let mut v: Vec<Subset> = self
            .hyperplanes()
            .into_iter()
            .map(|h| h.complement_in(n))
            .collect();
        v.sort();
        v
    }

    pub fn flats(&self) -> Vec<Subset> {
        self.subsets_where(|s| self.is_flat(s))
    }

    fn subsets_where<F: Fn(Subset) -> bool>(&self, pred: F) -> Vec<Subset> {
        let size = 1usize << self.size();
        (0..size as u32)
            .map(Subset)
            .filter(|&s| pred(s))
            .collect()
    }

    pub fn loops(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for e in 0..self.size() {
            if self.rank_of(Subset::singleton(e)) == 0 {
                s = s.with(e);
            }
        }
        s
    }

    /// Elements in every basis; removing one drops the rank.
    pub fn coloops(&self) -> Subset {
        if self.rank == 0 {
            return Subset::EMPTY;
        }
        let full = self.ground.full_set();
        let mut s = Subset::EMPTY;
        for e in 0..self.size() {
            if self.rank_of(full.without(e)) == self.rank - 1 {
                s = s.with(e);
            }
        }
        s
    }

    /// Bases of the dual are the complements of bases.
    pub fn dual(&self) -> Matroid {
        let n = self.size();
        let mut bases: Vec<Subset> = self.bases.iter().map(|b| b.complement_in(n)).collect();
        bases.sort();
        Matroid {
            ground: self.ground.clone(),
            bases,
            rank: n - self.rank,
            table: OnceLock::new(),
        }
    }

    fn remove_position(&self, p: usize, contract: bool) -> Matroid {
        let n = self.size();
        let mut labels: Vec<String> = self.ground.labels().to_vec();
        labels.remove(p);
        let ground = GroundSet::new(labels).expect("labels stay distinct");
        let is_loop = self.rank_of(Subset::singleton(p)) == 0;
        let is_coloop = self.rank > 0 && self.rank_of(self.ground.full_set().without(p)) == self.rank - 1;
        let (mut bases, rank): (Vec<Subset>, usize) = if contract && !is_loop {
            (
                self.bases
                    .iter()
                    .filter(|b| b.contains(p))
                    .map(|b| b.without(p).squeeze(p))
                    .collect(),
                self.rank - 1,
            )
        } else if is_coloop {
            // deleting a coloop drops the rank
            (
                self.bases.iter().map(|b| b.without(p).squeeze(p)).collect(),
                self.rank - 1,
            )
        } else {
            (
                self.bases
                    .iter()
                    .filter(|b| !b.contains(p))
                    .map(|b| b.squeeze(p))
                    .collect(),
                self.rank,
            )
        };
        bases.sort();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        let m = Matroid {
            ground,
            bases,
            rank,
            table: OnceLock::new(),
        };
        debug_assert_eq!(m.size(), n - 1);
        m
    }

    pub fn delete(&self, label: &str) -> Result<Matroid> {
        let p = self.ground.position_ok(label)?;
        Ok(self.remove_position(p, false))
    }

    pub fn contract(&self, label: &str) -> Result<Matroid> {
        let p = self.ground.position_ok(label)?;
        Ok(self.remove_position(p, true))
    }

    /// Contracts `c` and deletes `d`; the two must be disjoint. Loops in the
    /// contract set are deleted, coloops in the delete set drop the rank.
    pub fn minor(&self, c: Subset, d: Subset) -> Result<Matroid> {
        if c.intersects(d) {
            return Err(Error::PreconditionViolated(
                "contract and delete sets overlap".into(),
            ));
        }
        let full = self.ground.full_set();
        if !c.union(d).is_subset_of(full) {
            return Err(Error::ElementNotInGroundSet("minor sets".into()));
        }
        let mut m = self.clone();
        // descending positions, so removals never shift a position still to come
        for p in (0..self.size()).rev() {
            if c.contains(p) {
                m = m.remove_position(p, true);
            } else if d.contains(p) {
                m = m.remove_position(p, false);
            }
        }
        Ok(m)
    }

    /// Restriction to `a` = delete everything outside `a`.
    pub fn restriction(&self, a: Subset) -> Matroid {
        self.minor(Subset::EMPTY, a.complement_in(self.size()))
            .expect("disjoint by construction")
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n1 = self.size();
        let n = n1 + other.size();
        if n > MAX_EXPLICIT {
            return Err(Error::GroundSetOverflow(n, MAX_EXPLICIT));
        }
        let mut labels = self.ground.labels().to_vec();
        labels.extend(other.ground.labels().iter().cloned());
        let ground = GroundSet::new(labels)?; // LabelCollision if shared names
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for b1 in &self.bases {
            for b2 in &other.bases {
                bases.push(Subset(b1.0 | b2.0 << n1));
            }
        }
        bases.sort();
        Ok(Matroid {
            ground,
            bases,
            rank: self.rank + other.rank,
            table: OnceLock::new(),
        })
    }

    /// λ(A) = r(A) + r(E−A) − r(M).
    pub fn lambda(&self, a: Subset) -> usize {
        self.rank_of(a) + self.rank_of(a.complement_in(self.size())) - self.rank
    }

    /// Exhaustive split sweep: connected iff no proper nonempty A with
    /// λ(A) = 0; 3-connected iff additionally no exact 2-separation with both
    /// sides of size ≥ 2.
    pub fn connectivity(&self) -> ConnectivityReport {
        let n = self.size();
        if n <= 1 {
            return ConnectivityReport {
                is_connected: true,
                is_three_connected: true,
                witness_separation: None,
            };
        }
        let mut min_any: Option<(usize, Subset)> = None;
        let mut min_wide: Option<(usize, Subset)> = None; // both sides >= 2
        let top = (1u32 << n) - 1;
        for w in 1..top {
            let a = Subset(w);
            let l = self.lambda(a);
            if min_any.is_none_or(|(best, _)| l < best) {
                min_any = Some((l, a));
            }
            if a.len() >= 2 && n - a.len() >= 2 && min_wide.is_none_or(|(best, _)| l < best) {
                min_wide = Some((l, a));
            }
        }
        let is_connected = min_any.is_none_or(|(l, _)| l >= 1);
        let is_three_connected =
            is_connected && min_wide.is_none_or(|(l, _)| l >= 2);
        let witness_separation = if !is_connected {
            min_any.map(|(l, a)| (a, l + 1))
        } else if !is_three_connected {
            min_wide.map(|(l, a)| (a, l + 1))
        } else {
            None
        };
        ConnectivityReport {
            is_connected,
            is_three_connected,
            witness_separation,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity().is_connected
    }

    /// Connected components, as restrictions, in least-word order.
    pub fn components(&self) -> Vec<Matroid> {
        let rep = self.connectivity();
        if rep.is_connected {
            return vec![self.clone()];
        }
        let (a, _) = rep.witness_separation.expect("disconnected has witness");
        let mut out = self.restriction(a).components();
        out.extend(self.restriction(a.complement_in(self.size())).components());
        out
    }

    /// Adds `label` parallel to the element at `at`.
    pub fn parallel_extend(&self, at: &str, label: &str) -> Result<Matroid> {
        let n = self.size();
        if n + 1 > MAX_EXPLICIT {
            return Err(Error::GroundSetOverflow(n + 1, MAX_EXPLICIT));
        }
        let p = self.ground.position_ok(at)?;
        let mut labels = self.ground.labels().to_vec();
        labels.push(label.to_string());
        let ground = GroundSet::new(labels)?;
        let mut bases = self.bases.clone();
        for b in &self.bases {
            if b.contains(p) {
                bases.push(b.without(p).with(n));
            }
        }
        bases.sort();
        bases.dedup();
        Ok(Matroid {
            ground,
            bases,
            rank: self.rank,
            table: OnceLock::new(),
        })
    }

    /// Adds `label` in series with the element at `at` (dual of parallel).
    pub fn series_extend(&self, at: &str, label: &str) -> Result<Matroid> {
        Ok(self.dual().parallel_extend(at, label)?.dual())
    }

    /// Applies a series/parallel plan: each entry names an element and how
    /// many series and parallel mates it gains. Added labels are
    /// `<x>.s<i>` and `<x>.p<i>`. Contracting all added series elements and
    /// deleting all added parallel elements recovers the original matroid.
    pub fn series_parallel_extend(&self, plan: &[(String, usize, usize)]) -> Result<Matroid> {
        let extra: usize = plan.iter().map(|(_, s, p)| s + p).sum();
        if self.size() + extra > MAX_EXPLICIT {
            return Err(Error::GroundSetOverflow(self.size() + extra, MAX_EXPLICIT));
        }
        let mut order: Vec<&(String, usize, usize)> = plan.iter().collect();
        order.sort_by_key(|(x, _, _)| self.ground.position(x));
        let mut m = self.clone();
        for (x, s, p) in order {
            self.ground.position_ok(x)?;
            for i in 1..=*s {
                m = m.series_extend(x, &format!("{x}.s{i}"))?;
            }
            for i in 1..=*p {
                m = m.parallel_extend(x, &format!("{x}.p{i}"))?;
            }
        }
        Ok(m)
    }

    pub fn relabel(&self, ground: GroundSet) -> Result<Matroid> {
        if ground.len() != self.size() {
            return Err(Error::PreconditionViolated(
                "relabel requires equal sizes".into(),
            ));
        }
        Ok(Matroid {
            ground,
            bases: self.bases.clone(),
            rank: self.rank,
            table: OnceLock::new(),
        })
    }

    /// Relabels to `a`, `b`, `c`, ... keeping ground order.
    pub fn canonical_letters(&self) -> Matroid {
        self.relabel(GroundSet::letters(self.size())).unwrap()
    }

    /// Some((m, n)) iff this is U_{m,n}.
    pub fn as_uniform(&self) -> Option<(usize, usize)> {
        let n = self.size();
        if self.bases.len() == binomial(n, self.rank) {
            Some((self.rank, n))
        } else {
            None
        }
    }

    /// Partition of the non-loop elements into parallel classes
    /// (rank-1 closure classes), in least-position order.
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let loops = self.loops();
        let mut seen = Subset::EMPTY;
        let mut out = Vec::new();
        for e in 0..self.size() {
            if loops.contains(e) || seen.contains(e) {
                continue;
            }
            let cls = self.closure(Subset::singleton(e)).minus(loops);
            seen = seen.union(cls);
            out.push(cls);
        }
        out
    }

    pub fn series_classes(&self) -> Vec<Subset> {
        self.dual().parallel_classes()
    }

    /// Same labelled matroid, regardless of ground order.
    pub fn equal_labeled(&self, other: &Matroid) -> bool {
        if self.size() != other.size() || self.rank != other.rank {
            return false;
        }
        let mut map = vec![0usize; self.size()];
        for (p, l) in self.ground.labels().iter().enumerate() {
            match other.ground.position(l) {
                Some(q) => map[p] = q,
                None => return false,
            }
        }
        let mut translated: Vec<Subset> = self
            .bases
            .iter()
            .map(|b| Subset::from_positions(b.iter().map(|p| map[p])))
            .collect();
        translated.sort();
        translated == other.bases
    }

    /// Re-runs the exchange axiom; used as a tripwire after operations that
    /// are guaranteed to produce matroids.
    pub fn recheck(&self) -> Result<()> {
        Matroid::validate(self.ground.clone(), self.bases.clone()).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u24() -> Matroid {
        Matroid::uniform(2, 4)
    }

    /// Independent oracle for M(K4): enumerate the spanning trees of K4 by
    /// brute force over edge subsets with a union-find acyclicity test.
    fn k4_spanning_trees() -> Vec<Subset> {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut out = Vec::new();
        for w in 0u32..64 {
            if w.count_ones() != 3 {
                continue;
            }
            let mut parent = [0, 1, 2, 3];
            fn find(p: &mut [usize; 4], x: usize) -> usize {
                if p[x] != x {
                    p[x] = find(p, p[x]);
                }
                p[x]
            }
            let mut acyclic = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if w >> i & 1 == 1 {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru == rv {
                        acyclic = false;
                        break;
                    }
                    parent[ru] = rv;
                }
            }
            if acyclic {
                out.push(Subset(w));
            }
        }
        out
    }

    pub(crate) fn mk4() -> Matroid {
        Matroid::validate(GroundSet::letters(6), k4_spanning_trees()).unwrap()
    }

    #[test]
    fn exchange_failure_detected() {
        let g = GroundSet::letters(4);
        let ab = g.subset_of_labels(&["a", "b"]).unwrap();
        let cd = g.subset_of_labels(&["c", "d"]).unwrap();
        assert!(matches!(
            Matroid::validate(g, vec![ab, cd]),
            Err(Error::ExchangeFailure(_))
        ));
    }

    #[test]
    fn u24_is_valid_and_uniform() {
        let m = u24();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().len(), 6);
        assert_eq!(m.as_uniform(), Some((2, 4)));
    }

    #[test]
    fn k4_has_16_spanning_trees_and_validates() {
        let trees = k4_spanning_trees();
        assert_eq!(trees.len(), 16);
        let m = mk4();
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn empty_and_mixed_bases_rejected() {
        let g = GroundSet::letters(2);
        assert!(matches!(
            Matroid::validate(g.clone(), vec![]),
            Err(Error::EmptyBases)
        ));
        let a = g.subset_of_labels(&["a"]).unwrap();
        let ab = g.full_set();
        assert!(matches!(
            Matroid::validate(g, vec![a, ab]),
            Err(Error::MixedCardinality)
        ));
    }

    #[test]
    fn rank_examples() {
        let m = u24();
        let g = m.ground().clone();
        assert_eq!(m.rank_of(g.subset_of_labels(&["a"]).unwrap()), 1);
        assert_eq!(m.rank_of(Subset::EMPTY), 0);
        // triangle of M(K4): edges at vertices {0,1,2} = positions 0 (01), 1 (02), 3 (12)
        let k4 = mk4();
        let tri = Subset::from_positions([0, 1, 3]);
        assert!(k4.is_circuit(tri));
        assert_eq!(k4.rank_of(tri), 2);
    }

    #[test]
    fn circuits_and_hyperplanes_of_u24() {
        let m = u24();
        let circuits = m.circuits();
        assert_eq!(circuits.len(), 4);
        assert!(circuits.iter().all(|c| c.len() == 3));
        let hyps = m.hyperplanes();
        assert_eq!(hyps.len(), 4);
        assert!(hyps.iter().all(|h| h.len() == 1));
    }

    #[test]
    fn dual_involution_and_rank_identity() {
        for m in [u24(), mk4(), Matroid::uniform(1, 3)] {
            let d = m.dual();
            assert_eq!(d.dual(), m);
            assert_eq!(m.rank() + d.rank(), m.size());
        }
        // dual(U_{1,3}) = U_{2,3}
        assert_eq!(Matroid::uniform(1, 3).dual(), Matroid::uniform(2, 3));
    }

    #[test]
    fn uniform_minor_arithmetic() {
        let m = Matroid::uniform(3, 6);
        let c = m.contract("a").unwrap();
        assert_eq!(c.as_uniform(), Some((2, 5)));
        let d = Matroid::uniform(2, 5).delete("a").unwrap();
        assert_eq!(d.as_uniform(), Some((2, 4)));
    }

    #[test]
    fn contract_delete_commute_on_k4() {
        let m = mk4();
        for x in 0..6 {
            for y in 0..6 {
                if x == y {
                    continue;
                }
                let lx = m.ground().label(x).to_string();
                let ly = m.ground().label(y).to_string();
                let via_minor = m
                    .minor(Subset::singleton(x), Subset::singleton(y))
                    .unwrap();
                let stepwise = m.contract(&lx).unwrap().delete(&ly).unwrap();
                assert!(via_minor.equal_labeled(&stepwise));
            }
        }
    }

    #[test]
    fn contract_dual_delete_duality() {
        for m in [u24(), mk4(), Matroid::uniform(1, 4)] {
            for e in 0..m.size() {
                let l = m.ground().label(e).to_string();
                let lhs = m.contract(&l).unwrap();
                let rhs = m.dual().delete(&l).unwrap().dual();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn direct_sum_examples() {
        let u11 = Matroid::uniform(1, 1)
            .relabel(GroundSet::new(vec!["e"]).unwrap())
            .unwrap();
        let m = u24().direct_sum(&u11).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.size(), 5);
        assert_eq!(m.coloops().len(), 1);
        // U_{2,4} ⊕ U_{0,1} has a loop
        let u01 = Matroid::validate(
            GroundSet::new(vec!["z"]).unwrap(),
            vec![Subset::EMPTY],
        )
        .unwrap();
        let m2 = u24().direct_sum(&u01).unwrap();
        assert_eq!(m2.loops().len(), 1);
        assert_eq!(m2.size(), 5);
        // identity: M ⊕ empty = M up to labels
        let empty = Matroid::validate(GroundSet::new(Vec::<String>::new()).unwrap(), vec![Subset::EMPTY]).unwrap();
        let m3 = u24().direct_sum(&empty).unwrap();
        assert_eq!(m3.bases(), u24().bases());
        // shared labels are rejected
        assert!(matches!(
            u24().direct_sum(&u24()),
            Err(Error::LabelCollision(_))
        ));
    }

    #[test]
    fn connectivity_examples() {
        let k4 = mk4();
        let rep = k4.connectivity();
        assert!(rep.is_connected && rep.is_three_connected);
        assert!(rep.witness_separation.is_none());

        let u11 = Matroid::uniform(1, 1)
            .relabel(GroundSet::new(vec!["e"]).unwrap())
            .unwrap();
        let ds = u24().direct_sum(&u11).unwrap();
        let rep = ds.connectivity();
        assert!(!rep.is_connected);
        let (a, k) = rep.witness_separation.unwrap();
        assert_eq!(k, 1);
        assert_eq!(ds.lambda(a), 0);
        assert_eq!(ds.components().len(), 2);
    }

    #[test]
    fn connectivity_is_duality_invariant() {
        for m in [u24(), mk4(), Matroid::uniform(1, 4), Matroid::uniform(3, 4)] {
            let a = m.connectivity();
            let b = m.dual().connectivity();
            assert_eq!(a.is_connected, b.is_connected);
            assert_eq!(a.is_three_connected, b.is_three_connected);
        }
    }

    #[test]
    fn circuit_cocircuit_orthogonality() {
        for m in [u24(), mk4()] {
            let cocircuits = m.cocircuits();
            for c in m.circuits() {
                for cc in &cocircuits {
                    assert_ne!(c.inter(*cc).len(), 1);
                }
            }
        }
    }

    #[test]
    fn series_parallel_plan() {
        // doubling three elements of U_{2,4} gives the 7-element rank-2 matroid
        let plan = vec![
            ("a".to_string(), 0, 1),
            ("b".to_string(), 0, 1),
            ("c".to_string(), 0, 1),
        ];
        let k = u24().series_parallel_extend(&plan).unwrap();
        assert_eq!(k.size(), 7);
        assert_eq!(k.rank(), 2);
        assert_eq!(k.parallel_classes().len(), 4);
        // empty plan is the identity
        assert_eq!(u24().series_parallel_extend(&[]).unwrap(), u24());
        // recovery: contract added series elements, delete added parallels
        let m = u24()
            .series_parallel_extend(&[("a".to_string(), 1, 0)])
            .unwrap();
        let back = m.contract("a.s1").unwrap();
        assert_eq!(back, u24());
    }

    #[test]
    fn series_of_dual_is_parallel_dual() {
        let lhs = u24().series_extend("a", "x").unwrap().dual();
        let rhs = u24().dual().parallel_extend("a", "x").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ground_set_overflow() {
        let m = Matroid::uniform(8, 16);
        assert!(matches!(
            m.parallel_extend("a", "q"),
            Err(Error::GroundSetOverflow(..))
        ));
    }
}
