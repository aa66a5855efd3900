//! Deterministic test corpus: catalog matroids, their small minors, duals,
//! relaxations, random binary matroids, and sums, deduplicated up to
//! isomorphism.

use crate::catalog;
use crate::error::{Error, Result};
use crate::gf2::{is_binary, vector_matroid, BinaryMatrix};
use crate::ground::{GroundSet, Subset};
use crate::matroid::Matroid;
use crate::minors::isomorphic;
use crate::relaxed::{circuit_hyperplanes, relax};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Invariant bucket key: cheap and label-independent.
fn bucket_key(m: &Matroid) -> (usize, usize, usize, Vec<u32>) {
    let mut degrees = vec![0u32; m.size()];
    for b in m.bases() {
        for e in b.iter() {
            degrees[e] += 1;
        }
    }
    degrees.sort_unstable();
    (m.size(), m.rank(), m.bases().len(), degrees)
}

/// Accumulates matroids, keeping one representative per isomorphism class.
pub struct IsoSet {
    buckets: BTreeMap<(usize, usize, usize, Vec<u32>), Vec<usize>>,
    items: Vec<(String, Matroid)>,
}

impl IsoSet {
    pub fn new() -> Self {
        IsoSet {
            buckets: BTreeMap::new(),
            items: Vec::new(),
        }
    }

    pub fn insert(&mut self, name: String, m: Matroid) -> bool {
        let key = bucket_key(&m);
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if isomorphic(&self.items[i].1, &m).is_some() {
                return false;
            }
        }
        bucket.push(self.items.len());
        self.items.push((name, m));
        true
    }

    pub fn into_items(self) -> Vec<(String, Matroid)> {
        self.items
    }
}

impl Default for IsoSet {
    fn default() -> Self {
        Self::new()
    }
}

/// The named catalog entries within the element budget (uniform matroids up
/// to six elements included).
pub fn catalog_entries(max_elements: usize) -> Vec<(String, Matroid)> {
    let mut out: Vec<(String, Matroid)> = Vec::new();
    for m in 0..=6usize {
        for n in m..=6usize {
            if n == 0 || n > max_elements {
                continue;
            }
            out.push((format!("U_{m}_{n}"), Matroid::uniform(m, n)));
        }
    }
    for name in [
        "MK4", "wheel_4", "wheel_5", "W3", "Q6", "P6", "U36", "R6", "K", "Kstar", "F7",
        "F7minus", "M4", "M6", "D4", "D6", "U24_U11", "U24_U01",
    ] {
        let m = catalog::named(name).expect("catalog name");
        if m.size() <= max_elements {
            out.push((name.to_string(), m));
        }
    }
    out
}

/// Deterministic corpus for the verification sweeps. Contains the catalog,
/// all single- and two-element minors of catalog entries, duals, all
/// relaxations of binary members, seeded random binary matroids and their
/// relaxations, and direct sums and 2-sums of catalog pairs, all within
/// `max_elements` and deduplicated up to isomorphism.
pub fn corpus(seed: u64, max_elements: usize) -> Result<Vec<(String, Matroid)>> {
    if max_elements > 12 {
        return Err(Error::BudgetExceeded(format!(
            "corpus budget is 12 elements, got {max_elements}"
        )));
    }
    let cat = catalog_entries(max_elements);
    let mut set = IsoSet::new();
    let mut stage: Vec<(String, Matroid)> = Vec::new();
    for (name, m) in &cat {
        stage.push((name.clone(), m.clone()));
    }
    // single- and two-element minors of catalog entries
    for (name, m) in &cat {
        let n = m.size();
        let full = m.ground().full_set();
        let mut ops: Vec<(Subset, Subset)> = Vec::new();
        for e in 0..n {
            ops.push((Subset::singleton(e), Subset::EMPTY));
            ops.push((Subset::EMPTY, Subset::singleton(e)));
            for f in e + 1..n {
                ops.push((Subset::singleton(e).with(f), Subset::EMPTY));
                ops.push((Subset::EMPTY, Subset::singleton(e).with(f)));
                ops.push((Subset::singleton(e), Subset::singleton(f)));
                ops.push((Subset::singleton(f), Subset::singleton(e)));
            }
        }
        for (c, d) in ops {
            if c.union(d) == full {
                continue; // empty minors carry nothing
            }
            let minor = m.minor(c, d).expect("disjoint");
            stage.push((format!("{name}/minor"), minor));
        }
    }
    // random binary matroids and their relaxations
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut randoms: Vec<(String, Matroid)> = Vec::new();
    for n in 5..=max_elements.min(10) {
        for r in 2..n {
            for copy in 0..6 {
                let ground = GroundSet::letters(n);
                let rows: Vec<u32> = (0..r)
                    .map(|_| rng.gen_range(0..(1u32 << n)))
                    .collect();
                let Ok(mat) = BinaryMatrix::new(r, ground, rows) else {
                    continue;
                };
                let Ok(m) = vector_matroid(&mat) else { continue };
                randoms.push((format!("rand_{n}_{r}_{copy}"), m));
            }
        }
    }
    // random simple binary matroids: distinct nonzero columns, so parallel
    // pairs never spoil 3-connectivity
    for r in 3..=5usize {
        for n in 6..=max_elements.min((1 << r) - 1) {
            for copy in 0..4 {
                let mut cols: Vec<u32> = (1..(1u32 << r)).collect();
                for i in (1..cols.len()).rev() {
                    let j = rng.gen_range(0..=i);
                    cols.swap(i, j);
                }
                cols.truncate(n);
                let rows: Vec<u32> = (0..r)
                    .map(|i| {
                        cols.iter()
                            .enumerate()
                            .fold(0u32, |acc, (j, c)| acc | ((c >> i & 1) << j))
                    })
                    .collect();
                let Ok(mat) = BinaryMatrix::new(r, GroundSet::letters(n), rows) else {
                    continue;
                };
                let Ok(m) = vector_matroid(&mat) else { continue };
                randoms.push((format!("simple_{n}_{r}_{copy}"), m));
            }
        }
    }
    stage.extend(randoms.iter().cloned());
    // direct sums and 2-sums of catalog pairs
    for (i, (na, a)) in cat.iter().enumerate() {
        for (nb, b) in cat.iter().skip(i) {
            if a.size() + b.size() <= max_elements && a.size() > 0 && b.size() > 0 {
                let rb = relabel_disjoint(b, a.size());
                if let Ok(sum) = a.direct_sum(&rb) {
                    stage.push((format!("{na}+{nb}"), sum));
                }
            }
            if a.size() >= 3 && b.size() >= 3 && a.size() + b.size() - 2 <= max_elements {
                let rb = relabel_disjoint(b, a.size());
                if let Some(s) = first_twosum(a, &rb) {
                    stage.push((format!("{na}o{nb}"), s));
                }
            }
        }
    }
    // relaxations of binary members staged so far
    let mut relaxations: Vec<(String, Matroid)> = Vec::new();
    for (name, m) in stage.iter().chain(randoms.iter()) {
        if m.size() <= max_elements && is_binary(m).is_some() {
            for h in circuit_hyperplanes(m) {
                relaxations.push((format!("{name}'"), relax(m, h).expect("circuit-hyperplane")));
            }
        }
    }
    stage.extend(relaxations);
    // duals of everything
    let duals: Vec<(String, Matroid)> = stage
        .iter()
        .map(|(n, m)| (format!("{n}*"), m.dual()))
        .collect();
    stage.extend(duals);
    for (name, m) in stage {
        if m.size() <= max_elements && m.size() > 0 {
            set.insert(name, m);
        }
    }
    Ok(set.into_items())
}

fn relabel_disjoint(m: &Matroid, offset: usize) -> Matroid {
    let labels: Vec<String> = (0..m.size()).map(|i| format!("y{}", i + offset)).collect();
    m.relabel(GroundSet::new(labels).expect("distinct")).expect("same size")
}

fn first_twosum(a: &Matroid, b: &Matroid) -> Option<Matroid> {
    let pa = (0..a.size()).find(|&e| {
        !a.loops().contains(e) && !a.coloops().contains(e)
    })?;
    let pb = (0..b.size()).find(|&e| {
        !b.loops().contains(e) && !b.coloops().contains(e)
    })?;
    crate::sums::twosum(
        a,
        b,
        a.ground().label(pa),
        b.ground().label(pb),
    )
    .ok()
}
