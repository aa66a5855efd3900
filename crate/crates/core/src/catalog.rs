//! Constructors for the named matroids and families used throughout: small
//! uniforms, wheels, the whirl chain, the 2-sum and parallel-class sporadics,
//! Fano and its relaxation, tipless binary spikes, and the wide doubly
//! relaxed construction carrying a projective-geometry minor.

use crate::error::{Error, Result};
use crate::gf2::{graphic, projective_geometry, vector_matroid, wheel_edges, BinaryMatrix};
use crate::ground::{k_subsets, GroundSet, Subset};
use crate::matroid::Matroid;
use crate::minors::MinorWitness;
use crate::relaxed::{circuit_hyperplanes, relax, LazyMinor, RelaxedBinaryMatroid};

/// M(K4), letter labels in wheel edge order (spokes then rim).
pub fn mk4() -> Matroid {
    graphic(&wheel_edges(3), None).expect("within caps")
}

/// Graphic wheel of rank r (2r edges).
pub fn wheel(r: usize) -> Result<Matroid> {
    if !(3..=5).contains(&r) {
        return Err(Error::BadRank(format!("wheel rank {r} unsupported")));
    }
    graphic(&wheel_edges(r), None)
}

fn relax_first(m: &Matroid) -> Matroid {
    let ch = circuit_hyperplanes(m);
    relax(m, ch[0]).expect("first circuit-hyperplane relaxes")
}

/// Rank-three whirl: M(K4) with one triangle relaxed.
pub fn whirl3() -> Matroid {
    relax_first(&mk4())
}

/// Relaxation chain M(K4) → W^3 → Q6 → P6 → U_{3,6}; each step relaxes the
/// least remaining circuit-hyperplane.
pub fn q6() -> Matroid {
    relax_first(&whirl3())
}

pub fn p6() -> Matroid {
    relax_first(&q6())
}

/// R6 = U_{2,4} ⊕₂ U_{2,4}, relabeled to letters.
pub fn r6() -> Matroid {
    let a = Matroid::uniform(2, 4)
        .relabel(GroundSet::new(vec!["a", "b", "c", "p"]).unwrap())
        .unwrap();
    let b = Matroid::uniform(2, 4)
        .relabel(GroundSet::new(vec!["d", "e", "f", "q"]).unwrap())
        .unwrap();
    crate::sums::twosum(&a, &b, "p", "q")
        .expect("basepoints are not degenerate")
        .canonical_letters()
}

/// K: U_{2,4} with three elements doubled in parallel; seven elements, rank 2.
pub fn k_matroid() -> Matroid {
    let plan = vec![
        ("a".to_string(), 0, 1),
        ("b".to_string(), 0, 1),
        ("c".to_string(), 0, 1),
    ];
    Matroid::uniform(2, 4)
        .series_parallel_extend(&plan)
        .expect("fits the ground-set cap")
        .canonical_letters()
}

pub fn k_star() -> Matroid {
    k_matroid().dual()
}

/// Fano plane PG(2,2), letter labels.
pub fn fano() -> Matroid {
    vector_matroid(&projective_geometry(3))
        .expect("seven columns")
        .canonical_letters()
}

pub fn fano_minus() -> Matroid {
    relax_first(&fano())
}

fn disconnected_sporadic(coloop: bool) -> Matroid {
    let one = if coloop {
        Matroid::uniform(1, 1)
    } else {
        Matroid::validate(GroundSet::letters(1), vec![Subset::EMPTY]).unwrap()
    };
    Matroid::uniform(2, 4)
        .direct_sum(&one.relabel(GroundSet::new(vec!["z"]).unwrap()).unwrap())
        .unwrap()
}

/// The tipless binary spike matrix [I_r | J_r − I_r] with columns e1..e2r.
pub fn spike_matrix(r: usize) -> Result<BinaryMatrix> {
    if !r.is_multiple_of(2) || r < 4 || 2 * r > crate::ground::MAX_LAZY {
        return Err(Error::BadRank(format!(
            "tipless spikes need even r ≥ 4 with 2r ≤ 32, got {r}"
        )));
    }
    let ground = GroundSet::numbered("e", 2 * r);
    let ones = if 2 * r == 32 {
        !((1u32 << r) - 1)
    } else {
        ((1u32 << (2 * r)) - 1) & !((1u32 << r) - 1)
    };
    let rows: Vec<u32> = (0..r)
        .map(|i| (1u32 << i) | (ones & !(1u32 << (r + i))))
        .collect();
    BinaryMatrix::new(r, ground, rows)
}

/// The two complementary circuit-hyperplanes {e2..e_{r+1}} and its complement.
pub fn spike_circuit_hyperplanes(r: usize) -> (Subset, Subset) {
    let x = Subset::from_positions(1..=r);
    (x, x.complement_in(2 * r))
}

pub fn tipless_spike(r: usize) -> Result<RelaxedBinaryMatroid> {
    RelaxedBinaryMatroid::new(spike_matrix(r)?, vec![])
}

/// Relaxes both named circuit-hyperplanes of the spike.
pub fn doubly_relaxed_spike(r: usize) -> Result<RelaxedBinaryMatroid> {
    let (x, y) = spike_circuit_hyperplanes(r);
    RelaxedBinaryMatroid::new(spike_matrix(r)?, vec![x, y])
}

/// Parameters of the wide construction: k odd, n = 2^k + k + 1, t = n − 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PgSpikeParams {
    pub k: usize,
    pub n: usize,
    pub t: usize,
}

impl PgSpikeParams {
    pub fn new(k: usize) -> Result<Self> {
        if k.is_multiple_of(2) || k < 3 {
            return Err(Error::BadRank(format!("k must be odd and ≥ 3, got {k}")));
        }
        let n = (1usize << k) + k + 1;
        if 2 * n > crate::ground::MAX_LAZY {
            return Err(Error::GroundSetOverflow(2 * n, crate::ground::MAX_LAZY));
        }
        Ok(PgSpikeParams { k, n, t: n - 2 })
    }
}

/// Rank-n binary matrix with 2n columns in which both column blocks
/// {1..n} and {n+1..2n} are circuit-hyperplanes and the second block carries
/// a PG(k−1,2) block in its first k rows; relaxing both blocks yields a
/// doubly relaxed matroid with a PG(k−1,2)-minor.
///
/// Layout (0-indexed rows): columns 0..n−2 are the identity, column n−1 is
/// the sum of those; column n covers rows {n−2, n−1}; the next 2^k −1
/// columns carry the projective block in rows 0..k plus a sub-diagonal chain
/// through rows k..t and a parity bit in row n−2; then k guard columns; the
/// last column is all ones. Every column of the second block has even weight,
/// every row of that block sums to zero, and row n−1 is all ones.
pub fn pg_spike(k: usize) -> Result<RelaxedBinaryMatroid> {
    let params = PgSpikeParams::new(k)?;
    let (n, t) = (params.n, params.t);
    let npts = (1usize << k) - 1;
    let ground = GroundSet::numbered("e", 2 * n);
    let mut cols: Vec<u32> = Vec::with_capacity(2 * n);
    for i in 0..n - 1 {
        cols.push(1 << i);
    }
    cols.push((1u32 << (n - 1)) - 1); // sum of the identity columns
    cols.push(1 << (n - 2) | 1 << (n - 1)); // guard column of the second block
    let pg = projective_geometry(k);
    for i in 1..=t {
        if i <= npts {
            let mut w = 0u32;
            for s in 0..k {
                if pg.get(s, i - 1) == 1 {
                    w |= 1 << s;
                }
            }
            let weight = w.count_ones();
            w |= 1 << (k + i - 1); // chain row
            if weight % 2 == 1 {
                w |= 1 << (n - 2); // parity row
            }
            w |= 1 << (n - 1);
            cols.push(w);
        } else {
            let ip = i - npts;
            cols.push(1 << (ip - 1) | 1 << (n - 1));
        }
    }
    cols.push(if n == 32 { u32::MAX } else { (1u32 << n) - 1 }); // all ones
    // transpose into row words
    let mut rows = vec![0u32; n];
    for (j, w) in cols.iter().enumerate() {
        for (i, row) in rows.iter_mut().enumerate() {
            if w >> i & 1 == 1 {
                *row |= 1 << j;
            }
        }
    }
    let base = BinaryMatrix::new(n, ground, rows)?;
    // the textual constraints, checked rather than trusted
    let first = Subset::full(n);
    let second = first.complement_in(2 * n);
    for j in 0..2 * n {
        let even = base.column_weight(j) % 2 == 0;
        if second.contains(j) != even {
            return Err(Error::ConstraintUnsatisfiable(format!(
                "column {} weight parity", j + 1
            )));
        }
    }
    for i in 0..n {
        let row_sum = (base.row_word(i) & (second.0)).count_ones() % 2;
        if row_sum != 0 {
            return Err(Error::ConstraintUnsatisfiable(format!(
                "row {} of the second block does not sum to zero", i + 1
            )));
        }
    }
    if base.rank() != n {
        return Err(Error::ConstraintUnsatisfiable("matrix rank".into()));
    }
    if !base.vector_matroid_connected() {
        return Err(Error::ConstraintUnsatisfiable("base not connected".into()));
    }
    RelaxedBinaryMatroid::new(base, vec![second, first])
}

/// The α_i, β_j, γ bookkeeping of the construction, with 1-based index
/// conventions: α_i sums rows 1..n−2 of column n+1+i, β_j sums columns
/// n+2..2n−1 of row j, γ = 1 + Σ β_j; all mod 2.
pub fn pg_spike_stats(base: &BinaryMatrix) -> (Vec<u8>, Vec<u8>, u8) {
    let n2 = base.cols();
    let n = n2 / 2;
    let t = n - 2;
    let mut alphas = Vec::with_capacity(t);
    for i in 1..=t {
        let col = n + i; // 0-indexed column n+1+i (1-based)
        let mut s = 0u8;
        for row in 0..t {
            s ^= base.get(row, col);
        }
        alphas.push(s);
    }
    let mut betas = Vec::with_capacity(t);
    for row in 0..t {
        let mut s = 0u8;
        for col in n + 1..2 * n - 1 {
            s ^= base.get(row, col);
        }
        betas.push(s);
    }
    let gamma = 1 ^ betas.iter().fold(0u8, |a, b| a ^ b);
    (alphas, betas, gamma)
}

/// Finds a PG(k−1,2)-minor of the doubly relaxed construction. The
/// structured first guess contracts the identity columns e_{k+1}..e_{n−1}
/// together with the guard column e_{n+1} and restricts to the projective
/// block; if that fails, falls back to exhaustive search over contract sets
/// from the first block.
pub fn pg_minor_witness(host: &RelaxedBinaryMatroid, k: usize) -> Result<MinorWitness> {
    let target = if k == 1 {
        Matroid::uniform(1, 1)
    } else {
        vector_matroid(&projective_geometry(k))?.canonical_letters()
    };
    let n2 = host.size();
    if k == 1 {
        // degenerate: any single nonzero column is PG(0,2)
        for e in 0..n2 {
            if host.rank_of(Subset::singleton(e)) == 1 {
                let delete = Subset::full(n2).without(e);
                let witness = MinorWitness {
                    contract: Subset::EMPTY,
                    delete,
                    iso: vec![(
                        target.ground().label(0).to_string(),
                        host.base().ground().label(e).to_string(),
                    )],
                };
                return Ok(witness);
            }
        }
        return Err(Error::WitnessNotFound("no nonzero column".into()));
    }
    let params = PgSpikeParams::new(k)?;
    let n = params.n;
    if n2 != 2 * n {
        return Err(Error::PreconditionViolated(
            "host does not have 2n columns".into(),
        ));
    }
    let npts = (1usize << k) - 1;
    let structured_contract =
        Subset::from_positions((k..n - 1).chain([n])); // e_{k+1}..e_{n-1}, e_{n+1}
    let keep = Subset::from_positions(n + 1..n + 1 + npts);
    let structured_delete = Subset::full(2 * n)
        .minus(structured_contract)
        .minus(keep);
    if let Some(w) = try_pg_witness(host, &target, structured_contract, structured_delete) {
        return Ok(w);
    }
    // exhaustive fallback: contract (n−k)-subsets of the first block, then
    // look for the target among restrictions of the survivors
    let first_block = Subset::full(n);
    for c in k_subsets(first_block, n - k) {
        if host.rank_of(c) != c.len() {
            continue;
        }
        let Ok(LazyMinor::Lazy(shrunk)) = host.lazy_minor(c, Subset::EMPTY) else {
            continue;
        };
        let Ok(m) = shrunk.materialize() else {
            continue;
        };
        for sub in k_subsets(m.ground().full_set(), npts) {
            let restriction = m.restriction(sub);
            if let Some(iso) = crate::minors::isomorphic(&target, &restriction) {
                let mut delete = Subset::EMPTY;
                for (p, l) in host.base().ground().labels().iter().enumerate() {
                    if !c.contains(p) && m.ground().position(l).is_none_or(|q| !sub.contains(q))
                    {
                        delete = delete.with(p);
                    }
                }
                return Ok(MinorWitness {
                    contract: c,
                    delete,
                    iso,
                });
            }
        }
    }
    Err(Error::WitnessNotFound(
        "no projective-geometry minor found".into(),
    ))
}

fn try_pg_witness(
    host: &RelaxedBinaryMatroid,
    target: &Matroid,
    contract: Subset,
    delete: Subset,
) -> Option<MinorWitness> {
    let out = host.lazy_minor(contract, delete).ok()?;
    let m = match out {
        LazyMinor::Lazy(l) => l.materialize().ok()?,
        LazyMinor::Explicit(e) => e,
    };
    let iso = crate::minors::isomorphic(target, &m)?;
    Some(MinorWitness {
        contract,
        delete,
        iso,
    })
}

/// Checks a witness produced against a lazy host: applies it with the lazy
/// minor rules and verifies the isomorphism onto the target.
pub fn verify_lazy_witness(
    host: &RelaxedBinaryMatroid,
    target: &Matroid,
    w: &MinorWitness,
) -> bool {
    let Ok(out) = host.lazy_minor(w.contract, w.delete) else {
        return false;
    };
    let m = match out {
        LazyMinor::Lazy(l) => match l.materialize() {
            Ok(m) => m,
            Err(_) => return false,
        },
        LazyMinor::Explicit(e) => e,
    };
    if w.iso.len() != target.size() || m.size() != target.size() {
        return false;
    }
    let mut map = vec![usize::MAX; target.size()];
    for (t, h) in &w.iso {
        let (Some(tp), Some(hp)) = (target.ground().position(t), m.ground().position(h)) else {
            return false;
        };
        map[tp] = hp;
    }
    if map.contains(&usize::MAX) {
        return false;
    }
    let mut translated: Vec<Subset> = target
        .bases()
        .iter()
        .map(|b| Subset::from_positions(b.iter().map(|p| map[p])))
        .collect();
    translated.sort();
    translated == m.bases()
}

/// Catalog names accepted by [`named`].
pub fn names() -> Vec<&'static str> {
    vec![
        "U_m_n (pattern, e.g. U_2_4)",
        "MK4",
        "wheel_3",
        "wheel_4",
        "wheel_5",
        "W3",
        "Q6",
        "P6",
        "R6",
        "K",
        "Kstar",
        "F7",
        "F7minus",
        "M4",
        "M6",
        "D4",
        "D6",
        "U24_U11",
        "U24_U01",
    ]
}

/// Builds a named catalog matroid; names are case-insensitive.
pub fn named(name: &str) -> Result<Matroid> {
    let lower = name.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("u_") {
        let parts: Vec<&str> = rest.split('_').collect();
        if parts.len() == 2 {
            if let (Ok(m), Ok(n)) = (parts[0].parse::<usize>(), parts[1].parse::<usize>()) {
                if m <= n && n <= crate::ground::MAX_EXPLICIT {
                    return Ok(uniform_with_loops(m, n));
                }
            }
        }
        return Err(Error::UnknownName(name.to_string()));
    }
    match lower.as_str() {
        "mk4" | "m(k4)" | "wheel_3" => Ok(mk4()),
        "wheel_4" => wheel(4),
        "wheel_5" => wheel(5),
        "w3" | "whirl_3" => Ok(whirl3()),
        "q6" => Ok(q6()),
        "p6" => Ok(p6()),
        "u36" => Ok(relax_first(&p6())),
        "r6" => Ok(r6()),
        "k" => Ok(k_matroid()),
        "kstar" | "k*" => Ok(k_star()),
        "f7" => Ok(fano()),
        "f7minus" | "f7-" => Ok(fano_minus()),
        "m4" => tipless_spike(4)?.materialize(),
        "m6" => tipless_spike(6)?.materialize(),
        "d4" => doubly_relaxed_spike(4)?.materialize(),
        "d6" => doubly_relaxed_spike(6)?.materialize(),
        "u24_u11" => Ok(disconnected_sporadic(true)),
        "u24_u01" => Ok(disconnected_sporadic(false)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

// U_{0,n} needs loops, which Matroid::uniform covers via the empty basis.
fn uniform_with_loops(m: usize, n: usize) -> Matroid {
    Matroid::uniform(m, n)
}

/// Wide lazy objects addressable from the CLI.
pub fn named_lazy(name: &str) -> Result<RelaxedBinaryMatroid> {
    match name.to_ascii_lowercase().as_str() {
        "m4" => tipless_spike(4),
        "m6" => tipless_spike(6),
        "d4" => doubly_relaxed_spike(4),
        "d6" => doubly_relaxed_spike(6),
        "pgspike3" | "pgspike_3" => pg_spike(3),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::is_binary;
    use crate::minors::isomorphic;

    fn non_spanning_circuits(m: &Matroid) -> Vec<Subset> {
        m.circuits()
            .into_iter()
            .filter(|&c| m.rank_of(c) < m.rank())
            .collect()
    }

    #[test]
    fn relaxation_chain_basis_counts() {
        assert_eq!(mk4().bases().len(), 16);
        assert_eq!(whirl3().bases().len(), 17);
        assert_eq!(q6().bases().len(), 18);
        assert_eq!(p6().bases().len(), 19);
        let u36 = named("U36").unwrap();
        assert_eq!(u36.bases().len(), 20);
        assert_eq!(u36.as_uniform(), Some((3, 6)));
    }

    #[test]
    fn chain_triangle_counts() {
        // triangles = non-spanning circuits in rank 3
        assert_eq!(non_spanning_circuits(&whirl3()).len(), 3);
        assert_eq!(non_spanning_circuits(&q6()).len(), 2);
        assert_eq!(non_spanning_circuits(&p6()).len(), 1);
        assert_eq!(non_spanning_circuits(&named("U36").unwrap()).len(), 0);
        // P6: its single non-spanning circuit is a triangle
        let p = p6();
        let c = non_spanning_circuits(&p)[0];
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn r6_is_the_twosum_of_two_u24() {
        let m = r6();
        assert_eq!(m.size(), 6);
        assert_eq!(m.rank(), 3);
        assert!(is_binary(&m).is_none());
        // P6 and Q6 are distinguished by triangle counts, so not isomorphic
        assert!(isomorphic(&p6(), &q6()).is_none());
    }

    #[test]
    fn k_and_its_dual() {
        let k = k_matroid();
        assert_eq!((k.size(), k.rank()), (7, 2));
        let ks = k_star();
        assert_eq!((ks.size(), ks.rank()), (7, 5));
        assert!(isomorphic(&k, &ks.dual()).is_some());
    }

    #[test]
    fn fano_and_its_relaxation() {
        let f7 = fano();
        assert!(is_binary(&f7).is_some());
        let f7m = fano_minus();
        assert!(is_binary(&f7m).is_none());
        assert_eq!(f7m.bases().len(), f7.bases().len() + 1);
    }

    #[test]
    fn spike_circuit_hyperplanes_as_stated() {
        for r in [4, 6] {
            let spike = tipless_spike(r).unwrap().materialize().unwrap();
            let (x, y) = spike_circuit_hyperplanes(r);
            assert!(spike.is_circuit(x) && spike.is_hyperplane(x), "r={r}");
            assert!(spike.is_circuit(y) && spike.is_hyperplane(y), "r={r}");
            assert!(is_binary(&spike).is_some());
            assert!(spike.is_connected());
        }
        assert!(matches!(tipless_spike(5), Err(Error::BadRank(_))));
        assert!(matches!(tipless_spike(2), Err(Error::BadRank(_))));
    }

    #[test]
    fn doubly_relaxed_spike_has_two_extra_bases() {
        let m0 = tipless_spike(4).unwrap().materialize().unwrap();
        let m2 = doubly_relaxed_spike(4).unwrap().materialize().unwrap();
        assert_eq!(m2.bases().len(), m0.bases().len() + 2);
    }

    #[test]
    fn pg_spike_params_and_constraints() {
        let p = PgSpikeParams::new(3).unwrap();
        assert_eq!((p.n, p.t), (12, 10));
        assert!(PgSpikeParams::new(2).is_err());
        assert!(PgSpikeParams::new(5).is_err()); // 2n = 76 > 32
        let spike = pg_spike(3).unwrap();
        assert_eq!(spike.size(), 24);
        assert_eq!(spike.full_rank(), 12);
        assert_eq!(spike.relaxed_sets().len(), 2);
        // exactly the columns 13..24 lie in the zero-sum hyperplane
        let base = spike.base();
        for j in 0..24 {
            assert_eq!(base.column_weight(j) % 2 == 0, j >= 12, "column {}", j + 1);
        }
    }

    #[test]
    fn pg_spike_parity_identity() {
        let spike = pg_spike(3).unwrap();
        let (alphas, betas, gamma) = pg_spike_stats(spike.base());
        let sa = alphas.iter().fold(0u8, |a, b| a ^ b);
        let sb = betas.iter().fold(0u8, |a, b| a ^ b);
        assert_eq!(sa, sb); // both count the same submatrix
        assert_eq!(gamma, spike.base().get(10, 23)); // row n−1, column 2n
        assert_eq!(PgSpikeParams::new(3).unwrap().t % 2, 0);
    }

    #[test]
    fn pg_minor_witness_structured_guess_works() {
        let spike = pg_spike(3).unwrap();
        let w = pg_minor_witness(&spike, 3).unwrap();
        let f7 = vector_matroid(&projective_geometry(3))
            .unwrap()
            .canonical_letters();
        assert!(verify_lazy_witness(&spike, &f7, &w));
        assert_eq!(w.contract.len(), 9);
        // the same columns in the unrelaxed base span a Fano restriction
        let plain = RelaxedBinaryMatroid::new(spike.base().clone(), vec![]).unwrap();
        assert!(verify_lazy_witness(&plain, &f7, &w));
    }

    #[test]
    fn pg_spike_matrix_is_reproducible() {
        // free entries are filled deterministically, so the matrix is pinned
        let spike = pg_spike(3).unwrap();
        let rows: Vec<String> = (0..12)
            .map(|i| {
                (0..24)
                    .map(|j| if spike.base().get(i, j) == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        assert_eq!(
            rows,
            vec![
                "100000000001000011111001",
                "010000000001001100110101",
                "001000000001010101010011",
                "000100000001010000000001",
                "000010000001001000000001",
                "000001000001000100000001",
                "000000100001000010000001",
                "000000010001000001000001",
                "000000001001000000100001",
                "000000000101000000010001",
                "000000000011111010010001",
                "000000000000111111111111",
            ]
        );
    }

    #[test]
    fn pg_minor_witness_degenerate_k1() {
        let spike = pg_spike(3).unwrap();
        let w = pg_minor_witness(&spike, 1).unwrap();
        assert_eq!(w.iso.len(), 1);
        let u11 = Matroid::uniform(1, 1);
        assert!(verify_lazy_witness(&spike, &u11, &w));
    }

    #[test]
    fn named_lookups() {
        assert_eq!(named("U_2_4").unwrap().as_uniform(), Some((2, 4)));
        assert!(named("U_9_4").is_err());
        assert!(matches!(named("nope"), Err(Error::UnknownName(_))));
        assert_eq!(named("wheel_4").unwrap().size(), 8);
        assert_eq!(named("U24_U01").unwrap().loops().len(), 1);
        assert_eq!(named("U24_U11").unwrap().coloops().len(), 1);
        assert_eq!(named("M6").unwrap().size(), 12);
        assert_eq!(named("D4").unwrap().size(), 8);
    }
}
