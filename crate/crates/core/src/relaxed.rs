//! Circuit-hyperplane relaxation and its inverse, plus a lazy representation
//! for binary matroids with up to two relaxed circuit-hyperplanes.
//!
//! Relaxing a circuit-hyperplane H of M yields the matroid with bases
//! bases(M) ∪ {H}; the rank function changes at exactly the set H (raised
//! from |H|−1 to |H|) and nowhere else. Tightening removes a free basis —
//! a basis B with B ∪ e a circuit for every e outside B — and inverts the
//! relaxation.

use crate::error::{Error, Result};
use crate::gf2::{vector_matroid, BinaryMatrix};
use crate::ground::{Subset, MAX_EXPLICIT};
use crate::matroid::Matroid;

/// All sets that are simultaneously circuits and hyperplanes.
pub fn circuit_hyperplanes(m: &Matroid) -> Vec<Subset> {
    m.circuits()
        .into_iter()
        .filter(|&c| m.is_hyperplane(c))
        .collect()
}

/// Turns the circuit-hyperplane `h` into a basis.
pub fn relax(m: &Matroid, h: Subset) -> Result<Matroid> {
    if !(m.is_circuit(h) && m.is_hyperplane(h)) {
        return Err(Error::NotACircuitHyperplane(m.ground().word(h)));
    }
    let mut bases = m.bases().to_vec();
    bases.push(h);
    Matroid::validate(m.ground().clone(), bases)
}

/// Bases `B` such that `B ∪ e` is a circuit for every `e ∉ B`, with neither
/// `B` nor its complement empty. These are exactly the bases whose removal
/// leaves a matroid (the inverse image of a relaxation).
pub fn free_bases(m: &Matroid) -> Vec<Subset> {
    let n = m.size();
    m.bases()
        .iter()
        .copied()
        .filter(|&b| {
            !b.is_empty()
                && b != m.ground().full_set()
                && b
                    .complement_in(n)
                    .iter()
                    .all(|e| m.is_circuit(b.with(e)))
        })
        .collect()
}

/// Removes the free basis `b` from the basis family; the result has `b` as a
/// circuit-hyperplane and relaxing it again restores `m`. The exchange axiom
/// is re-validated as a tripwire even though it is guaranteed to hold.
pub fn tighten(m: &Matroid, b: Subset) -> Result<Matroid> {
    if !free_bases(m).contains(&b) {
        return Err(Error::NotAFreeBasis(m.ground().word(b)));
    }
    let bases: Vec<Subset> = m.bases().iter().copied().filter(|&x| x != b).collect();
    let t = Matroid::validate(m.ground().clone(), bases)?;
    debug_assert!(t.is_circuit(b) && t.is_hyperplane(b));
    Ok(t)
}

/// Binary matroid with 0, 1 or 2 relaxed circuit-hyperplanes, kept as a
/// GF(2) matrix plus the list of relaxed sets. Supports up to 32 columns;
/// ranks are answered by the matrix with the relaxed-set exception rule, so
/// the object never needs materializing unless it shrinks to ≤ 16 elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxedBinaryMatroid {
    base: BinaryMatrix,
    relaxed: Vec<Subset>,
}

/// Result of a lazy minor: stays lazy when the case rules keep the relaxed
/// sets alive as circuit-hyperplanes, otherwise collapses to an explicit
/// basis family.
#[derive(Clone, Debug)]
pub enum LazyMinor {
    Lazy(RelaxedBinaryMatroid),
    Explicit(Matroid),
}

impl RelaxedBinaryMatroid {
    /// `relaxed` lists the sets in relaxation order; each must be a
    /// circuit-hyperplane of the matroid obtained by relaxing the sets before
    /// it, and two sets must be disjoint.
    pub fn new(base: BinaryMatrix, relaxed: Vec<Subset>) -> Result<Self> {
        if relaxed.len() > 2 {
            return Err(Error::PreconditionViolated(
                "at most two relaxed sets are supported".into(),
            ));
        }
        if relaxed.len() == 2 && relaxed[0].intersects(relaxed[1]) {
            return Err(Error::PreconditionViolated(
                "relaxed sets must be disjoint".into(),
            ));
        }
        let r = RelaxedBinaryMatroid { base, relaxed };
        for i in 0..r.relaxed.len() {
            if !r.prefix_is_circuit_hyperplane(i) {
                return Err(Error::NotACircuitHyperplane(
                    r.base.ground().word(r.relaxed[i]),
                ));
            }
        }
        Ok(r)
    }

    pub fn base(&self) -> &BinaryMatrix {
        &self.base
    }

    pub fn relaxed_sets(&self) -> &[Subset] {
        &self.relaxed
    }

    pub fn size(&self) -> usize {
        self.base.cols()
    }

    pub fn full_rank(&self) -> usize {
        self.base.rank()
    }

    /// r(A) is the GF(2) column rank, except that the rank of exactly each
    /// relaxed set is raised from |X|−1 to |X|.
    pub fn rank_of(&self, a: Subset) -> usize {
        let base = self.base.column_rank(a);
        if self.relaxed.contains(&a) {
            base + 1
        } else {
            base
        }
    }

    // circuit-hyperplane test for relaxed[i] against the matroid with only
    // the earlier sets relaxed, via the rank oracle restricted to that prefix
    fn prefix_rank(&self, a: Subset, prefix: usize) -> usize {
        let base = self.base.column_rank(a);
        if self.relaxed[..prefix].contains(&a) {
            base + 1
        } else {
            base
        }
    }

    fn prefix_is_circuit_hyperplane(&self, i: usize) -> bool {
        let x = self.relaxed[i];
        let n = self.size();
        let r = self.full_rank();
        if x.is_empty() || x == self.base.ground().full_set() {
            return false;
        }
        // circuit: rank |X|-1 with every one-element-removed subset independent
        if self.prefix_rank(x, i) != x.len() - 1 {
            return false;
        }
        if x.iter().any(|e| self.prefix_rank(x.without(e), i) != x.len() - 1) {
            return false;
        }
        // hyperplane: rank r-1 flat
        if x.len() - 1 != r - 1 {
            return false;
        }
        x.complement_in(n)
            .iter()
            .all(|e| self.prefix_rank(x.with(e), i) == r)
    }

    /// Explicit basis family: bases of the base matrix plus each relaxed set.
    pub fn materialize(&self) -> Result<Matroid> {
        if self.size() > MAX_EXPLICIT {
            return Err(Error::GroundSetOverflow(self.size(), MAX_EXPLICIT));
        }
        let mut m = vector_matroid(&self.base)?;
        for &x in &self.relaxed {
            m = relax(&m, x)?;
        }
        Ok(m)
    }

    /// Minor by single-element case analysis. Contracting e outside a relaxed
    /// set absorbs that relaxation (the contractions of the matroid and its
    /// relaxation are equal); contracting e inside keeps the set as X−e over
    /// base/e. Deleting e inside a relaxed set absorbs it; deleting e outside
    /// keeps it, unless e is a coloop of the base, in which case the
    /// representation collapses. Any relaxed set that stops being a
    /// circuit-hyperplane of the shrinking base also collapses the
    /// representation.
    pub fn lazy_minor(&self, c: Subset, d: Subset) -> Result<LazyMinor> {
        if c.intersects(d) {
            return Err(Error::PreconditionViolated(
                "contract and delete sets overlap".into(),
            ));
        }
        let full = self.base.ground().full_set();
        if !c.union(d).is_subset_of(full) {
            return Err(Error::ElementNotInGroundSet("lazy minor sets".into()));
        }
        let mut cur = self.clone();
        for p in (0..self.size()).rev() {
            let contracting = c.contains(p);
            if !contracting && !d.contains(p) {
                continue;
            }
            // a loop of the *relaxed* matroid, not just of the base: a
            // relaxed singleton set makes a base loop into a basis element
            let is_loop = cur.rank_of(Subset::singleton(p)) == 0;
            let deleting = !contracting || is_loop; // contracting a loop = deleting it
            if !deleting && cur.base.is_zero_column(p) {
                // loop of the base inside a relaxed singleton: the dual
                // caveat ("unless e is a loop") applies, compute explicitly
                return cur.collapse_and_finish(p, c, d);
            }
            if deleting {
                let coloop = !cur.base.column_in_span_of_rest(p);
                if coloop && cur.relaxed.iter().any(|x| !x.contains(p)) {
                    // coloop caveat of the deletion rule
                    return cur.collapse_and_finish(p, c, d);
                }
            }
            let next = if deleting {
                RelaxedBinaryMatroid {
                    base: cur.base.delete_column(p),
                    relaxed: cur
                        .relaxed
                        .iter()
                        .filter(|x| !x.contains(p))
                        .map(|x| x.squeeze(p))
                        .collect(),
                }
            } else {
                RelaxedBinaryMatroid {
                    base: cur.base.contract_column(p),
                    relaxed: cur
                        .relaxed
                        .iter()
                        .filter(|x| x.contains(p) && x.len() > 1)
                        .map(|x| x.without(p).squeeze(p))
                        .collect(),
                }
            };
            let alive = (0..next.relaxed.len()).all(|i| next.prefix_is_circuit_hyperplane(i));
            if !alive {
                // the case analysis no longer applies; recompute explicitly
                // from the state before this element was removed
                return cur.collapse_and_finish(p, c, d);
            }
            cur = next;
        }
        Ok(LazyMinor::Lazy(cur))
    }

    fn collapse_and_finish(&self, p: usize, c: Subset, d: Subset) -> Result<LazyMinor> {
        let m = self.materialize()?;
        // remaining operations: position p and everything below it
        let mask = if p >= 31 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << (p + 1)) - 1)
        };
        let m = m.minor(c.inter(mask), d.inter(mask))?;
        Ok(LazyMinor::Explicit(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{graphic, projective_geometry, wheel_edges};
    use crate::ground::GroundSet;

    fn mk4() -> Matroid {
        graphic(&wheel_edges(3), None).unwrap()
    }

    fn spike(r: usize) -> BinaryMatrix {
        let ground = GroundSet::numbered("e", 2 * r);
        let ones = ((1u32 << (2 * r)) - 1) & !((1u32 << r) - 1);
        let rows: Vec<u32> = (0..r)
            .map(|i| (1u32 << i) | (ones & !(1u32 << (r + i))))
            .collect();
        BinaryMatrix::new(r, ground, rows).unwrap()
    }

    #[test]
    fn circuit_hyperplanes_of_mk4_are_the_triangles() {
        let m = mk4();
        let chs = circuit_hyperplanes(&m);
        assert_eq!(chs.len(), 4);
        assert!(chs.iter().all(|c| c.len() == 3));
        // U_{2,4}: hyperplanes are singletons, circuits are triples
        assert!(circuit_hyperplanes(&Matroid::uniform(2, 4)).is_empty());
    }

    #[test]
    fn spike_has_the_two_named_circuit_hyperplanes() {
        let m = vector_matroid(&spike(4)).unwrap();
        let chs = circuit_hyperplanes(&m);
        let x = Subset::from_positions(1..=4); // e2..e5
        let y = x.complement_in(8);
        assert!(chs.contains(&x));
        assert!(chs.contains(&y));
    }

    #[test]
    fn relaxing_a_triangle_of_mk4_gives_the_whirl() {
        let m = mk4();
        let t = circuit_hyperplanes(&m)[0];
        let w3 = relax(&m, t).unwrap();
        assert_eq!(w3.bases().len(), 17);
        assert!(crate::gf2::is_binary(&w3).is_none());
        // relax on U_{2,4} has nothing to relax
        assert!(matches!(
            relax(&Matroid::uniform(2, 4), Subset::from_positions([0, 1, 2])),
            Err(Error::NotACircuitHyperplane(_))
        ));
    }

    #[test]
    fn free_bases_and_tightening_invert_relaxation() {
        let m = mk4();
        for t in circuit_hyperplanes(&m) {
            let relaxed = relax(&m, t).unwrap();
            let frees = free_bases(&relaxed);
            assert!(frees.contains(&t));
            let back = tighten(&relaxed, t).unwrap();
            assert_eq!(back, m);
            assert_eq!(relax(&back, t).unwrap(), relaxed);
        }
        // free matroid has no free basis: complement is empty
        assert!(free_bases(&Matroid::uniform(3, 3)).is_empty());
    }

    #[test]
    fn tighten_rejects_non_free_bases() {
        // the spoke star of M(K4) is a basis but adding a rim edge closes a
        // triangle strictly inside it, so it is not free
        let m = mk4();
        let star = Subset::from_positions([0, 1, 2]);
        assert!(m.is_basis(star));
        assert!(matches!(tighten(&m, star), Err(Error::NotAFreeBasis(_))));
        // every basis of U_{2,4} is free (tightening yields the matroid with
        // that pair parallel), so tighten must accept it
        let u = Matroid::uniform(2, 4);
        let t = tighten(&u, u.bases()[0]).unwrap();
        assert_eq!(t.bases().len(), 5);
    }

    #[test]
    fn relaxation_duality_rule() {
        // dual(relax(M, X)) = relax(dual(M), E−X)
        let m = mk4();
        let n = m.size();
        for x in circuit_hyperplanes(&m) {
            let lhs = relax(&m, x).unwrap().dual();
            let rhs = relax(&m.dual(), x.complement_in(n)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn doubly_relaxed_spike_materializes_with_two_extra_bases() {
        let base = spike(4);
        let x = Subset::from_positions(1..=4);
        let y = x.complement_in(8);
        let plain = RelaxedBinaryMatroid::new(base.clone(), vec![]).unwrap();
        let dd = RelaxedBinaryMatroid::new(base, vec![x, y]).unwrap();
        let m0 = plain.materialize().unwrap();
        let m2 = dd.materialize().unwrap();
        assert_eq!(m2.bases().len(), m0.bases().len() + 2);
        // both relaxed sets are free bases of the result
        let frees = free_bases(&m2);
        assert!(frees.contains(&x) && frees.contains(&y));
    }

    #[test]
    fn rank_oracle_matches_materialized_ranks() {
        for r in [4usize, 6] {
            let base = spike(r);
            let x = Subset::from_positions(1..=r);
            let y = x.complement_in(2 * r);
            let dd = RelaxedBinaryMatroid::new(base, vec![x, y]).unwrap();
            let m = dd.materialize().unwrap();
            for w in 0u32..(1 << (2 * r)) {
                let a = Subset(w);
                assert_eq!(dd.rank_of(a), m.rank_of(a), "r={r} subset {w:#b}");
            }
        }
    }

    #[test]
    fn lazy_minor_agrees_with_explicit_minor_on_single_elements() {
        let base = spike(4);
        let x = Subset::from_positions(1..=4);
        let y = x.complement_in(8);
        for relaxed in [vec![], vec![x], vec![x, y]] {
            let lazy = RelaxedBinaryMatroid::new(base.clone(), relaxed).unwrap();
            let m = lazy.materialize().unwrap();
            for p in 0..8 {
                for contract in [false, true] {
                    let (c, d) = if contract {
                        (Subset::singleton(p), Subset::EMPTY)
                    } else {
                        (Subset::EMPTY, Subset::singleton(p))
                    };
                    let via_lazy = match lazy.lazy_minor(c, d).unwrap() {
                        LazyMinor::Lazy(l) => l.materialize().unwrap(),
                        LazyMinor::Explicit(e) => e,
                    };
                    let via_explicit = m.minor(c, d).unwrap();
                    assert_eq!(via_lazy, via_explicit, "p={p} contract={contract}");
                }
            }
        }
    }

    #[test]
    fn lazy_minor_contract_inside_keeps_shrunk_set() {
        let base = spike(4);
        let x = Subset::from_positions(1..=4);
        let y = x.complement_in(8);
        let dd = RelaxedBinaryMatroid::new(base, vec![x, y]).unwrap();
        // contract e2 (inside X): X shrinks to X−e2, Y is absorbed
        let out = dd.lazy_minor(Subset::singleton(1), Subset::EMPTY).unwrap();
        match out {
            LazyMinor::Lazy(l) => {
                assert_eq!(l.relaxed_sets().len(), 1);
                assert_eq!(l.relaxed_sets()[0].len(), 3);
            }
            LazyMinor::Explicit(_) => panic!("expected lazy outcome"),
        }
        // empty minor sets are the identity
        let dd2 = RelaxedBinaryMatroid::new(spike(4), vec![Subset::from_positions(1..=4)]).unwrap();
        match dd2.lazy_minor(Subset::EMPTY, Subset::EMPTY).unwrap() {
            LazyMinor::Lazy(l) => assert_eq!(&l, &dd2),
            LazyMinor::Explicit(_) => panic!("expected lazy outcome"),
        }
    }

    #[test]
    fn relaxed_fano_deletion_outside_the_line() {
        let pg = projective_geometry(3);
        let f7 = vector_matroid(&pg).unwrap();
        let line = circuit_hyperplanes(&f7)[0];
        let lazy = RelaxedBinaryMatroid::new(pg, vec![line]).unwrap();
        let e = line.complement_in(7).iter().next().unwrap();
        match lazy.lazy_minor(Subset::EMPTY, Subset::singleton(e)).unwrap() {
            LazyMinor::Lazy(l) => {
                assert_eq!(l.relaxed_sets().len(), 1);
                let expect = relax(
                    &f7.delete(f7.ground().label(e)).unwrap(),
                    line.squeeze(e),
                )
                .unwrap();
                assert_eq!(l.materialize().unwrap(), expect);
            }
            LazyMinor::Explicit(_) => panic!("expected lazy outcome"),
        }
    }

    #[test]
    fn coloop_deletion_collapses() {
        // base = U_{2,3} plus a coloop column: [I_2 | (1,1)] ++ e3 row? build
        // a 3x4 matrix whose last column is a coloop.
        let g = GroundSet::letters(4);
        let mat = BinaryMatrix::from_rows(
            g,
            &[vec![1, 0, 1, 0], vec![0, 1, 1, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        let m = vector_matroid(&mat).unwrap();
        let chs = circuit_hyperplanes(&m);
        assert_eq!(chs.len(), 1); // {a,b,c}
        let lazy = RelaxedBinaryMatroid::new(mat, chs.clone()).unwrap();
        // deleting the coloop d hits the caveat: result collapses to explicit
        let out = lazy.lazy_minor(Subset::EMPTY, Subset::singleton(3)).unwrap();
        match out {
            LazyMinor::Explicit(e) => {
                let expect = relax(&m, chs[0]).unwrap().delete("d").unwrap();
                assert_eq!(e, expect);
            }
            LazyMinor::Lazy(_) => panic!("coloop deletion must collapse"),
        }
    }
}
