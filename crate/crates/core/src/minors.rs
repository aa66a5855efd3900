//! Isomorphism testing, minor search, minor-using-element search, and
//! N-fragility.
//!
//! Isomorphism is decided by invariant refinement (basis degrees and pairwise
//! co-degrees, iterated) followed by class-respecting backtracking with a
//! full leaf check; candidate bijections are explored in position order and
//! the first one found is returned. Minor search enumerates contract sets
//! over independent sets and delete sets over coindependent sets, which loses
//! nothing: every minor arises that way with |C| = r(M) − r(N) forced.

use crate::error::Result;
use crate::ground::{k_subsets, Subset};
use crate::matroid::Matroid;
use std::collections::{BTreeMap, HashMap};

/// Certificate that a target embeds as a minor: contract `contract`, delete
/// `delete`, and map the target's elements onto the survivors via `iso`
/// (target label → host label).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub contract: Subset,
    pub delete: Subset,
    pub iso: Vec<(String, String)>,
}

impl MinorWitness {
    /// Re-checks the certificate from scratch.
    pub fn verify(&self, host: &Matroid, target: &Matroid) -> bool {
        let minor = match host.minor(self.contract, self.delete) {
            Ok(m) => m,
            Err(_) => return false,
        };
        if self.iso.len() != target.size() || minor.size() != target.size() {
            return false;
        }
        let mut map = vec![usize::MAX; target.size()];
        for (t, h) in &self.iso {
            let (Some(tp), Some(hp)) = (target.ground().position(t), minor.ground().position(h))
            else {
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
        translated.dedup();
        translated == minor.bases()
    }
}

/// Compact basis family used by the search inner loops: words over 0..n.
#[derive(Clone)]
struct Compact {
    n: usize,
    r: usize,
    words: Vec<u32>,
    degree: Vec<u32>,
    codeg: Vec<Vec<u32>>,
}

impl Compact {
    fn of(m: &Matroid) -> Compact {
        Compact::from_words(
            m.size(),
            m.rank(),
            m.bases().iter().map(|b| b.0).collect(),
        )
    }

    fn from_words(n: usize, r: usize, mut words: Vec<u32>) -> Compact {
        words.sort_unstable();
        let mut degree = vec![0u32; n];
        let mut codeg = vec![vec![0u32; n]; n];
        for &w in &words {
            let mut bits = w;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                degree[e] += 1;
                let mut rest = bits;
                while rest != 0 {
                    let f = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    codeg[e][f] += 1;
                    codeg[f][e] += 1;
                }
            }
        }
        Compact {
            n,
            r,
            words,
            degree,
            codeg,
        }
    }
}

/// Joint invariant refinement; None when the class multisets already differ.
fn refine(a: &Compact, b: &Compact) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut ca: Vec<u32> = a.degree.clone();
    let mut cb: Vec<u32> = b.degree.clone();
    let mut classes = 0;
    loop {
        // signature: own class plus sorted (other class, co-degree) profile
        let sig = |c: &Compact, cls: &[u32], e: usize| {
            let mut prof: Vec<(u32, u32)> = (0..c.n)
                .filter(|&f| f != e)
                .map(|f| (cls[f], c.codeg[e][f]))
                .collect();
            prof.sort_unstable();
            (cls[e], prof)
        };
        let mut ids: BTreeMap<(u32, Vec<(u32, u32)>), u32> = BTreeMap::new();
        let sigs_a: Vec<_> = (0..a.n).map(|e| sig(a, &ca, e)).collect();
        let sigs_b: Vec<_> = (0..b.n).map(|e| sig(b, &cb, e)).collect();
        for s in sigs_a.iter().chain(sigs_b.iter()) {
            let next = ids.len() as u32;
            ids.entry(s.clone()).or_insert(next);
        }
        let na: Vec<u32> = sigs_a.iter().map(|s| ids[s]).collect();
        let nb: Vec<u32> = sigs_b.iter().map(|s| ids[s]).collect();
        let mut ma = na.clone();
        let mut mb = nb.clone();
        ma.sort_unstable();
        mb.sort_unstable();
        if ma != mb {
            return None;
        }
        let count = ids.len() as u32;
        if count == classes {
            return Some((na, nb));
        }
        classes = count;
        ca = na;
        cb = nb;
    }
}

fn words_match(a: &Compact, map: &[usize], b: &Compact) -> bool {
    let mut translated: Vec<u32> = a
        .words
        .iter()
        .map(|&w| {
            let mut out = 0u32;
            let mut bits = w;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out |= 1 << map[e];
            }
            out
        })
        .collect();
    translated.sort_unstable();
    translated == b.words
}

/// Backtracking over class-respecting bijections. `emit` receives each
/// bijection that carries bases to bases; return true to keep enumerating.
fn search_isos(a: &Compact, b: &Compact, emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if a.n != b.n || a.r != b.r || a.words.len() != b.words.len() {
        return true;
    }
    let Some((ca, cb)) = refine(a, b) else {
        return true;
    };
    // most-constrained-first: order positions by class frequency
    let mut freq: HashMap<u32, u32> = HashMap::new();
    for &c in &ca {
        *freq.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..a.n).collect();
    order.sort_by_key(|&e| (freq[&ca[e]], e));
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn rec(
        a: &Compact,
        b: &Compact,
        ca: &[u32],
        cb: &[u32],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        emit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == order.len() {
            if words_match(a, map, b) {
                return emit(map);
            }
            return true;
        }
        let e = order[depth];
        'cand: for f in 0..b.n {
            if used[f] || cb[f] != ca[e] {
                continue;
            }
            for &e2 in &order[..depth] {
                if a.codeg[e][e2] != b.codeg[f][map[e2]] {
                    continue 'cand;
                }
            }
            map[e] = f;
            used[f] = true;
            let keep_going = rec(a, b, ca, cb, order, depth + 1, map, used, emit);
            map[e] = usize::MAX;
            used[f] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(a, b, &ca, &cb, &order, 0, &mut map, &mut used, emit)
}

/// A ground-set bijection carrying bases to bases, as (label of `a`, label
/// of `b`) pairs, or None.
pub fn isomorphic(a: &Matroid, b: &Matroid) -> Option<Vec<(String, String)>> {
    let ca = Compact::of(a);
    let cb = Compact::of(b);
    let mut found: Option<Vec<usize>> = None;
    search_isos(&ca, &cb, &mut |map| {
        found = Some(map.to_vec());
        false
    });
    found.map(|map| {
        (0..a.size())
            .map(|e| {
                (
                    a.ground().label(e).to_string(),
                    b.ground().label(map[e]).to_string(),
                )
            })
            .collect()
    })
}

/// Memo table for repeated existence queries; the key is the exact pair of
/// basis families plus the survival constraint, so collisions are impossible.
#[derive(Default)]
pub struct MinorCache {
    map: HashMap<(usize, Vec<u32>, usize, Vec<u32>, Option<usize>), bool>,
}

impl MinorCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

struct Searcher<'a> {
    host: &'a Matroid,
    target: Compact,
    using: Option<usize>,
    target_deg_sorted: Vec<u32>,
}

impl<'a> Searcher<'a> {
    fn new(host: &'a Matroid, target: &Matroid, using: Option<usize>) -> Self {
        let t = Compact::of(target);
        let mut deg = t.degree.clone();
        deg.sort_unstable();
        Searcher {
            host,
            target: t,
            using,
            target_deg_sorted: deg,
        }
    }

    /// Visits each (contract, delete, minor-iso) witness. `emit` returns true
    /// to keep enumerating; the function returns false iff enumeration was cut.
    fn run(&self, emit: &mut dyn FnMut(Subset, Subset, &[usize], &[usize]) -> bool) -> bool {
        let m = self.host;
        let t = &self.target;
        let n = m.size();
        if t.n > n || t.r > m.rank() || (t.n - t.r) > m.corank() {
            return true;
        }
        let dc = m.rank() - t.r;
        let dd = m.corank() - (t.n - t.r);
        let full = m.ground().full_set();
        for c in k_subsets(full, dc) {
            if !m.is_independent(c) {
                continue;
            }
            if self.using.is_some_and(|e| c.contains(e)) {
                continue;
            }
            for d in k_subsets(full.minus(c), dd) {
                if self.using.is_some_and(|e| d.contains(e)) {
                    continue;
                }
                if m.rank_of(full.minus(d)) != m.rank() {
                    continue; // d must be coindependent
                }
                let survivors: Vec<usize> = full.minus(c).minus(d).iter().collect();
                let mut words: Vec<u32> = Vec::new();
                for s in k_subsets(full.minus(c).minus(d), t.r) {
                    if m.rank_of(s.union(c)) == c.len() + t.r {
                        // squeeze to survivor indexing
                        let mut w = 0u32;
                        for (i, &p) in survivors.iter().enumerate() {
                            if s.contains(p) {
                                w |= 1 << i;
                            }
                        }
                        words.push(w);
                    }
                }
                if words.len() != t.words.len() {
                    continue;
                }
                let minor = Compact::from_words(t.n, t.r, words);
                let mut deg = minor.degree.clone();
                deg.sort_unstable();
                if deg != self.target_deg_sorted {
                    continue;
                }
                let mut keep = true;
                search_isos(t, &minor, &mut |map| {
                    keep = emit(c, d, map, &survivors);
                    keep
                });
                if !keep {
                    return false;
                }
            }
        }
        true
    }
}

fn witness_from(
    host: &Matroid,
    target: &Matroid,
    c: Subset,
    d: Subset,
    map: &[usize],
    survivors: &[usize],
) -> MinorWitness {
    let iso = (0..target.size())
        .map(|e| {
            (
                target.ground().label(e).to_string(),
                host.ground().label(survivors[map[e]]).to_string(),
            )
        })
        .collect();
    MinorWitness {
        contract: c,
        delete: d,
        iso,
    }
}

/// First minor witness in deterministic order, or None.
pub fn has_minor(host: &Matroid, target: &Matroid) -> Option<MinorWitness> {
    let searcher = Searcher::new(host, target, None);
    let mut found = None;
    searcher.run(&mut |c, d, map, survivors| {
        found = Some(witness_from(host, target, c, d, map, survivors));
        false
    });
    found
}

/// Witness in which the element `using` survives (it is neither contracted
/// nor deleted).
pub fn has_minor_using(host: &Matroid, target: &Matroid, using: &str) -> Result<Option<MinorWitness>> {
    let e = host.ground().position_ok(using)?;
    let searcher = Searcher::new(host, target, Some(e));
    let mut found = None;
    searcher.run(&mut |c, d, map, survivors| {
        found = Some(witness_from(host, target, c, d, map, survivors));
        false
    });
    Ok(found)
}

/// Existence-only query through the memo table.
pub fn has_minor_cached(
    cache: &mut MinorCache,
    host: &Matroid,
    target: &Matroid,
    using: Option<usize>,
) -> bool {
    let key = (
        host.size(),
        host.bases().iter().map(|b| b.0).collect::<Vec<u32>>(),
        target.size(),
        target.bases().iter().map(|b| b.0).collect::<Vec<u32>>(),
        using,
    );
    if let Some(&v) = cache.map.get(&key) {
        return v;
    }
    let searcher = Searcher::new(host, target, using);
    let mut found = false;
    searcher.run(&mut |_, _, _, _| {
        found = true;
        false
    });
    cache.map.insert(key, found);
    found
}

/// Visits every minor witness of `target` inside `host` (all (C, D) pairs and
/// all isomorphisms onto each minor); stops early when `f` returns false.
pub fn for_each_minor_witness(
    host: &Matroid,
    target: &Matroid,
    f: &mut dyn FnMut(&MinorWitness) -> bool,
) {
    let searcher = Searcher::new(host, target, None);
    searcher.run(&mut |c, d, map, survivors| f(&witness_from(host, target, c, d, map, survivors)));
}

/// N-fragility: for each element e, at least one of M\e and M/e has no
/// N-minor.
pub fn is_fragile(cache: &mut MinorCache, m: &Matroid, n: &Matroid) -> bool {
    for e in 0..m.size() {
        let label = m.ground().label(e).to_string();
        let del = m.delete(&label).expect("element exists");
        if !has_minor_cached(cache, &del, n, None) {
            continue;
        }
        let con = m.contract(&label).expect("element exists");
        if has_minor_cached(cache, &con, n, None) {
            return false;
        }
    }
    true
}

/// Report from the 1-roundedness sweep. A family is 1-rounded over a corpus
/// when every connected corpus matroid with a family-minor has one using any
/// prescribed element; non-connected family members are reported rather than
/// rejected, since they violate the definition by themselves.
#[derive(Debug, Default)]
pub struct RoundednessReport {
    pub family_violations: Vec<String>,
    pub element_violations: Vec<(String, String)>,
    pub hosts_checked: usize,
}

impl RoundednessReport {
    pub fn ok(&self) -> bool {
        self.family_violations.is_empty() && self.element_violations.is_empty()
    }
}

pub fn roundedness_check(
    cache: &mut MinorCache,
    family: &[(String, Matroid)],
    corpus: &[(String, Matroid)],
) -> RoundednessReport {
    let mut report = RoundednessReport::default();
    for (name, f) in family {
        if !f.is_connected() {
            report.family_violations.push(name.clone());
        }
    }
    for (name, m) in corpus {
        if !m.is_connected() {
            continue;
        }
        if !family
            .iter()
            .any(|(_, f)| has_minor_cached(cache, m, f, None))
        {
            continue;
        }
        report.hosts_checked += 1;
        for e in 0..m.size() {
            let hit = family
                .iter()
                .any(|(_, f)| has_minor_cached(cache, m, f, Some(e)));
            if !hit {
                report
                    .element_violations
                    .push((name.clone(), m.ground().label(e).to_string()));
            }
        }
    }
    report
}
