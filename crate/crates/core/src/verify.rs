//! Verification suites. Each assertion becomes one PASS/FAIL line in a
//! [`Report`]; suites are deterministic given the corpus seed and element
//! budget, and the acceptance tests run the same functions.

use crate::catalog;
use crate::classes::{
    self, circuit_and_parallel_class, classify_z, excluded_minor_check, in_d, in_d_lazy, in_r,
    in_r_by_minors, in_z, in_z_by_minors, relaxation_dichotomy, ClassCase, ClassId,
};
use crate::corpus::{catalog_entries, corpus};
use crate::gf2::{is_binary, BinaryMatrix};
use crate::ground::Subset;
use crate::matroid::Matroid;
use crate::minors::{
    for_each_minor_witness, has_minor, has_minor_cached, isomorphic, roundedness_check, MinorCache,
};
use crate::relaxed::{circuit_hyperplanes, relax, RelaxedBinaryMatroid};
use crate::sums::{reconstruct, tree_decompose, tree_minor_check};

#[derive(Debug, Clone)]
pub struct Report {
    pub title: String,
    pub lines: Vec<(bool, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            lines: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, label: impl Into<String>) {
        self.lines.push((ok, label.into()));
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|(ok, _)| *ok)
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|(ok, _)| !ok).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (ok, label) in &self.lines {
            out.push_str(if *ok { "PASS " } else { "FAIL " });
            out.push_str(label);
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {}/{} checks passed\n",
            self.title,
            self.lines.len() - self.failures(),
            self.lines.len()
        ));
        out
    }

    pub fn absorb(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }
}

pub type Corpus = [(String, Matroid)];

/// Criterion: the named excluded minors for each class, and the doubly
/// relaxed spike for both, pass the excluded-minor check.
pub fn criterion_excluded_minors() -> Report {
    let mut r = Report::new("excluded-minor minimality");
    for name in classes::Z_SPORADICS {
        let m = catalog::named(name).expect("catalog name");
        r.check(
            excluded_minor_check(&m, ClassId::Z).pass(),
            format!("{name} is an excluded minor for Z"),
        );
    }
    for name in classes::R_SPORADICS {
        let m = catalog::named(name).expect("catalog name");
        r.check(
            excluded_minor_check(&m, ClassId::R).pass(),
            format!("{name} is an excluded minor for R"),
        );
    }
    let dd = catalog::named("D4").expect("catalog name");
    r.check(
        excluded_minor_check(&dd, ClassId::Z).pass(),
        "doubly relaxed spike r=4 is an excluded minor for Z",
    );
    r.check(
        excluded_minor_check(&dd, ClassId::R).pass(),
        "doubly relaxed spike r=4 is an excluded minor for R",
    );
    r
}

/// Criterion: the direct deciders agree with the excluded-minor scans on the
/// whole corpus.
pub fn criterion_oracle_cross_check(corpus: &Corpus) -> Report {
    let mut r = Report::new("oracle cross-check");
    r.check(
        corpus.len() >= 500,
        format!("corpus has {} ≥ 500 isomorphism classes", corpus.len()),
    );
    let mut cache = MinorCache::new();
    let mut z_disagree = Vec::new();
    let mut r_disagree = Vec::new();
    for (name, m) in corpus {
        let direct_z = in_z(m).0;
        let scan_z = in_z_by_minors(&mut cache, m).expect("within budget");
        if direct_z != scan_z {
            z_disagree.push(name.clone());
        }
        let direct_r = in_r(m).0;
        let scan_r = in_r_by_minors(&mut cache, m).expect("within budget");
        if direct_r != scan_r {
            r_disagree.push(name.clone());
        }
    }
    r.check(
        z_disagree.is_empty(),
        format!(
            "Z decider agrees with the excluded-minor scan on {} entries{}",
            corpus.len(),
            render_fail_list(&z_disagree)
        ),
    );
    r.check(
        r_disagree.is_empty(),
        format!(
            "R decider agrees with the excluded-minor scan on {} entries{}",
            corpus.len(),
            render_fail_list(&r_disagree)
        ),
    );
    r
}

fn render_fail_list(fails: &[String]) -> String {
    if fails.is_empty() {
        String::new()
    } else {
        format!(" (failing: {})", fails.join(", "))
    }
}

/// Criterion: the classifier returns a reconstructing case exactly for the
/// non-binary members, and no case predicate matches a non-member.
pub fn criterion_classifier(corpus: &Corpus) -> Report {
    let mut r = Report::new("classifier soundness");
    let mut members = 0usize;
    let mut bad_members = Vec::new();
    let mut non_members = 0usize;
    let mut bad_non_members = Vec::new();
    for (name, m) in corpus {
        if is_binary(m).is_some() {
            continue;
        }
        if in_z(m).0 {
            members += 1;
            let res = classify_z(m);
            let ok = !matches!(res.case, ClassCase::Binary { .. } | ClassCase::NotInZ { .. })
                && classes::verify_classification(m, &res);
            if !ok {
                bad_members.push(name.clone());
            }
        } else {
            non_members += 1;
            let any_case = classes::parallel_ext_case(m).is_some()
                || classes::series_ext_case(m).is_some()
                || classes::u24_sp_case(m).is_some()
                || classes::relaxation_case(m).is_some();
            if any_case {
                bad_non_members.push(name.clone());
            }
        }
    }
    r.check(
        bad_members.is_empty(),
        format!(
            "classification witnesses reconstruct all {} non-binary members{}",
            members,
            render_fail_list(&bad_members)
        ),
    );
    r.check(
        bad_non_members.is_empty(),
        format!(
            "no case predicate matches any of the {} non-members{}",
            non_members,
            render_fail_list(&bad_non_members)
        ),
    );
    r
}

fn relaxation_rule_hosts() -> Vec<(String, Matroid)> {
    let mut hosts: Vec<(String, Matroid)> = Vec::new();
    for (name, m) in catalog_entries(12) {
        if is_binary(&m).is_some() && !circuit_hyperplanes(&m).is_empty() {
            hosts.push((name, m));
        }
    }
    // disconnected binary hosts exercising the loop and coloop caveats
    let pairs: Vec<(&str, (usize, usize), (usize, usize))> = vec![
        ("U_2_3+U_1_1", (2, 3), (1, 1)),
        ("U_2_3+U_1_2", (2, 3), (1, 2)),
        ("U_3_4+U_1_2", (3, 4), (1, 2)),
        ("U_0_1+U_1_3", (0, 1), (1, 3)),
    ];
    for (name, (r1, n1), (r2, n2)) in pairs {
        let a = Matroid::uniform(r1, n1);
        let labels: Vec<String> = (0..n2).map(|i| format!("z{i}")).collect();
        let b = Matroid::uniform(r2, n2)
            .relabel(crate::ground::GroundSet::new(labels).unwrap())
            .unwrap();
        let m = a.direct_sum(&b).expect("small");
        debug_assert!(is_binary(&m).is_some());
        hosts.push((name.to_string(), m));
    }
    hosts
}

/// Criterion: the relaxation minor rules hold verbatim for every catalog
/// (binary matroid, circuit-hyperplane) pair and every element, including
/// the duality clause and the loop/coloop caveats.
pub fn criterion_relaxation_rules() -> Report {
    let mut r = Report::new("relaxation minor rules");
    for (name, m) in relaxation_rule_hosts() {
        let n = m.size();
        let chs = circuit_hyperplanes(&m);
        let mut ok = true;
        let mut detail = String::new();
        for &x in &chs {
            let relaxed = relax(&m, x).expect("circuit-hyperplane");
            // (M')* = relax(M*, E−X)
            if relaxed.dual() != relax(&m.dual(), x.complement_in(n)).expect("dual set relaxes") {
                ok = false;
                detail = format!("duality clause at {}", m.ground().word(x));
                break;
            }
            let coloops = m.coloops();
            for e in 0..n {
                let label = m.ground().label(e).to_string();
                if !x.contains(e) {
                    // contraction absorbs the relaxation
                    if m.contract(&label).unwrap() != relaxed.contract(&label).unwrap() {
                        ok = false;
                        detail = format!("contract {label} outside {}", m.ground().word(x));
                        break;
                    }
                    let del = m.delete(&label).unwrap();
                    let shrunk = x.squeeze(e);
                    let rule = relax(&del, shrunk)
                        .map(|rel| rel == relaxed.delete(&label).unwrap());
                    if coloops.contains(e) {
                        // the caveat: the rule must genuinely fail here
                        if rule.unwrap_or(false) {
                            ok = false;
                            detail = format!("coloop caveat at {label}");
                            break;
                        }
                    } else if rule != Ok(true) {
                        ok = false;
                        detail = format!("delete {label} outside {}", m.ground().word(x));
                        break;
                    }
                } else {
                    if m.delete(&label).unwrap() != relaxed.delete(&label).unwrap() {
                        ok = false;
                        detail = format!("delete {label} inside {}", m.ground().word(x));
                        break;
                    }
                    let con = m.contract(&label).unwrap();
                    let shrunk = x.without(e).squeeze(e);
                    let rule = relax(&con, shrunk)
                        .map(|rel| rel == relaxed.contract(&label).unwrap());
                    let is_loop = m.loops().contains(e);
                    if is_loop {
                        if rule.unwrap_or(false) {
                            ok = false;
                            detail = format!("loop caveat at {label}");
                            break;
                        }
                    } else if rule != Ok(true) {
                        ok = false;
                        detail = format!("contract {label} inside {}", m.ground().word(x));
                        break;
                    }
                }
            }
            if !ok {
                break;
            }
        }
        r.check(
            ok,
            format!(
                "rules hold for {name} over {} circuit-hyperplane(s){}",
                chs.len(),
                if detail.is_empty() {
                    String::new()
                } else {
                    format!(" [{detail}]")
                }
            ),
        );
    }
    r
}

/// Criterion: on the disconnected corpus slice, circuit-hyperplanes exist
/// exactly on the circuit-plus-parallel-class forms, relaxing those forms
/// stays binary, and the disconnected excluded minors are exactly the two
/// sporadic direct sums.
pub fn criterion_disconnected(corpus: &Corpus) -> Report {
    let mut r = Report::new("disconnected structure");
    let u24_u11 = catalog::named("U24_U11").unwrap();
    let u24_u01 = catalog::named("U24_U01").unwrap();
    let mut checked = 0usize;
    let mut ch_fail = Vec::new();
    let mut relax_fail = Vec::new();
    let mut em_fail = Vec::new();
    for (name, m) in corpus {
        if m.is_connected() {
            continue;
        }
        checked += 1;
        let chs = circuit_hyperplanes(m);
        let form = circuit_and_parallel_class(m).is_some();
        if chs.is_empty() == form {
            ch_fail.push(name.clone());
        }
        if form {
            for &h in &chs {
                let relaxed = relax(m, h).expect("circuit-hyperplane");
                if is_binary(&relaxed).is_none() {
                    relax_fail.push(name.clone());
                    break;
                }
            }
        }
        let is_sporadic =
            isomorphic(m, &u24_u11).is_some() || isomorphic(m, &u24_u01).is_some();
        for class in [ClassId::Z, ClassId::R] {
            if excluded_minor_check(m, class).pass() != is_sporadic {
                em_fail.push(format!("{name}/{class:?}"));
            }
        }
    }
    r.check(
        ch_fail.is_empty(),
        format!(
            "circuit-hyperplanes exist exactly on circuit ⊕ parallel-class forms ({checked} disconnected entries){}",
            render_fail_list(&ch_fail)
        ),
    );
    r.check(
        relax_fail.is_empty(),
        format!(
            "relaxations of those forms are binary{}",
            render_fail_list(&relax_fail)
        ),
    );
    r.check(
        em_fail.is_empty(),
        format!(
            "disconnected excluded minors are exactly the two sporadic sums{}",
            render_fail_list(&em_fail)
        ),
    );
    r
}

/// Criterion: the three stated families produce no roundedness violations on
/// the connected corpus slice.
pub fn criterion_roundedness(corpus: &Corpus) -> Report {
    let mut r = Report::new("roundedness");
    let mut cache = MinorCache::new();
    let families: Vec<(&str, Vec<&str>)> = vec![
        ("{U_2_4}", vec!["U_2_4"]),
        ("{MK4, U_2_4}", vec!["MK4", "U_2_4"]),
        ("{W3, P6, Q6, U_3_6}", vec!["W3", "P6", "Q6", "U36"]),
    ];
    let hosts: Vec<(String, Matroid)> = corpus
        .iter()
        .filter(|(_, m)| m.size() <= 10)
        .cloned()
        .collect();
    for (fname, members) in families {
        let family: Vec<(String, Matroid)> = members
            .iter()
            .map(|n| (n.to_string(), catalog::named(n).unwrap()))
            .collect();
        let report = roundedness_check(&mut cache, &family, &hosts);
        r.check(
            report.ok(),
            format!(
                "family {fname} is 1-rounded over {} connected hosts ({} violations)",
                report.hosts_checked,
                report.family_violations.len() + report.element_violations.len()
            ),
        );
    }
    r
}

/// Criterion: on the 3-connected corpus slice with rank and corank at least
/// three, the binary members have an M(K4)-minor, the non-binary members
/// have a whirl/Q6/P6/U_{3,6}-minor, and the three small-uniform minor
/// statements are equivalent.
pub fn criterion_three_connected(corpus: &Corpus) -> Report {
    let mut r = Report::new("3-connected structure");
    let mk4 = catalog::named("MK4").unwrap();
    let quartet: Vec<Matroid> = ["W3", "Q6", "P6", "U36"]
        .iter()
        .map(|n| catalog::named(n).unwrap())
        .collect();
    let trio = &quartet[1..]; // Q6, P6, U_3_6
    let u25 = Matroid::uniform(2, 5);
    let u35 = Matroid::uniform(3, 5);
    let mut checked = 0usize;
    let mut minor_fail = Vec::new();
    let mut equiv_fail = Vec::new();
    for (name, m) in corpus {
        if m.rank() < 3 || m.corank() < 3 || !m.connectivity().is_three_connected {
            continue;
        }
        checked += 1;
        let ok = if is_binary(m).is_some() {
            has_minor(m, &mk4).is_some()
        } else {
            quartet.iter().any(|t| has_minor(m, t).is_some())
        };
        if !ok {
            minor_fail.push(name.clone());
        }
        let a = has_minor(m, &u25).is_some();
        let b = has_minor(m, &u35).is_some();
        let c = trio.iter().any(|t| has_minor(m, t).is_some());
        if a != b || b != c {
            equiv_fail.push(name.clone());
        }
    }
    r.check(
        minor_fail.is_empty(),
        format!(
            "binary ⇒ M(K4)-minor, non-binary ⇒ whirl/Q6/P6/U_3_6-minor ({checked} hosts){}",
            render_fail_list(&minor_fail)
        ),
    );
    r.check(
        equiv_fail.is_empty(),
        format!(
            "U_2_5-minor ⇔ U_3_5-minor ⇔ P6/Q6/U_3_6-minor on the slice{}",
            render_fail_list(&equiv_fail)
        ),
    );
    r
}

/// Criterion: tree decomposition round-trips, satisfies the canonical-form
/// invariants, and has a permutation-invariant shape.
pub fn criterion_tree_decomposition(corpus: &Corpus, seed: u64) -> Report {
    use rand::seq::SliceRandom;
    use rand_chacha::rand_core::SeedableRng;
    let mut r = Report::new("tree decomposition");
    let mut hosts: Vec<(String, Matroid)> = corpus
        .iter()
        .filter(|(_, m)| m.is_connected() && m.size() <= 12 && m.size() >= 1)
        .cloned()
        .collect();
    for extra in ["M6", "D6"] {
        hosts.push((extra.to_string(), catalog::named(extra).unwrap()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(17));
    let mut round_fail = Vec::new();
    let mut canon_fail = Vec::new();
    let mut perm_fail = Vec::new();
    for (name, m) in &hosts {
        let t = match tree_decompose(m) {
            Ok(t) => t,
            Err(_) => {
                round_fail.push(name.clone());
                continue;
            }
        };
        match reconstruct(&t) {
            Ok(back) if back.equal_labeled(m) => {}
            _ => round_fail.push(name.clone()),
        }
        if t.check_canonical().is_err() {
            canon_fail.push(name.clone());
        }
        // permuted copy must yield the same shape multiset
        let n = m.size();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let words: Vec<Subset> = m
            .bases()
            .iter()
            .map(|b| Subset::from_positions(b.iter().map(|p| perm[p])))
            .collect();
        let permuted = Matroid::validate(m.ground().clone(), words).expect("relabel of a matroid");
        match tree_decompose(&permuted) {
            Ok(t2) if t2.shape() == t.shape() => {}
            _ => perm_fail.push(name.clone()),
        }
    }
    r.check(
        round_fail.is_empty(),
        format!(
            "reconstruct ∘ decompose is the identity on {} connected hosts{}",
            hosts.len(),
            render_fail_list(&round_fail)
        ),
    );
    r.check(
        canon_fail.is_empty(),
        format!("canonical-form invariants hold{}", render_fail_list(&canon_fail)),
    );
    r.check(
        perm_fail.is_empty(),
        format!(
            "node shape multiset is permutation-invariant{}",
            render_fail_list(&perm_fail)
        ),
    );
    r
}

/// Criterion: the tipless spikes carry the two stated circuit-hyperplanes and
/// the doubly relaxed spike lies in D.
pub fn criterion_spikes() -> Report {
    let mut r = Report::new("spike family");
    for rank in [4usize, 6] {
        let spike = catalog::tipless_spike(rank).unwrap();
        let m = spike.materialize().unwrap();
        let (x, y) = catalog::spike_circuit_hyperplanes(rank);
        r.check(
            m.is_circuit(x) && m.is_hyperplane(x) && m.is_circuit(y) && m.is_hyperplane(y),
            format!("spike r={rank} has the two named circuit-hyperplanes"),
        );
        r.check(
            is_binary(&m).is_some() && m.is_connected(),
            format!("spike r={rank} is binary and connected"),
        );
    }
    let lazy = catalog::doubly_relaxed_spike(4).unwrap();
    let dd = lazy.materialize().unwrap();
    r.check(
        in_d(&dd).is_some(),
        "doubly relaxed spike r=4 passes the D decider",
    );
    r.check(in_d_lazy(&lazy), "lazy D decider agrees for r=4");
    let lazy6 = catalog::doubly_relaxed_spike(6).unwrap();
    r.check(
        in_d(&lazy6.materialize().unwrap()).is_some() && in_d_lazy(&lazy6),
        "doubly relaxed spike r=6 passes both D deciders",
    );
    let m0 = catalog::tipless_spike(4).unwrap().materialize().unwrap();
    r.check(
        dd.bases().len() == m0.bases().len() + 2,
        "double relaxation adds exactly two bases (r=4)",
    );
    r
}

fn matrix_is_circuit_hyperplane(mat: &BinaryMatrix, x: Subset) -> bool {
    let n = mat.cols();
    let r = mat.rank();
    if x.is_empty() || x == Subset::full(n) {
        return false;
    }
    if mat.column_rank(x) != x.len() - 1 || x.len() - 1 != r - 1 {
        return false;
    }
    if x.iter().any(|e| mat.column_rank(x.without(e)) != x.len() - 1) {
        return false;
    }
    x.complement_in(n)
        .iter()
        .all(|e| mat.column_rank(x.with(e)) == r)
}

/// Criterion: the wide doubly relaxed construction at k = 3 satisfies every
/// stated property, including the projective-geometry minor.
pub fn criterion_pg_spike() -> Report {
    let mut r = Report::new("wide doubly relaxed construction");
    let params = catalog::PgSpikeParams::new(3).unwrap();
    r.check(
        params.n == 12 && params.t == 10 && params.t.is_multiple_of(2),
        format!("parameters: n={}, t={}", params.n, params.t),
    );
    let spike = match catalog::pg_spike(3) {
        Ok(s) => s,
        Err(e) => {
            r.check(false, format!("construction failed: {e}"));
            return r;
        }
    };
    let base = spike.base();
    let n = params.n;
    let zero_sum_ok = (0..2 * n).all(|j| (base.column_weight(j) % 2 == 0) == (j >= n));
    r.check(
        zero_sum_ok,
        "exactly columns 13..24 lie in the zero-coordinate-sum hyperplane",
    );
    let second = Subset::full(n).complement_in(2 * n);
    let first = Subset::full(n);
    r.check(
        matrix_is_circuit_hyperplane(base, second),
        "columns 13..24 form a circuit-hyperplane of the base",
    );
    r.check(
        matrix_is_circuit_hyperplane(base, first),
        "columns 1..12 form a circuit-hyperplane of the base",
    );
    r.check(in_d_lazy(&spike), "the doubly relaxed matroid passes the D decider");
    let (alphas, betas, gamma) = catalog::pg_spike_stats(base);
    let sum_a = alphas.iter().fold(0u8, |a, b| a ^ b);
    let sum_b = betas.iter().fold(0u8, |a, b| a ^ b);
    r.check(
        sum_a == sum_b,
        "column and row parity sums over the interior block agree",
    );
    r.check(
        gamma == base.get(n - 2, 2 * n - 1),
        "the balancing entry of the next-to-last row matches its definition",
    );
    match catalog::pg_minor_witness(&spike, 3) {
        Ok(w) => {
            let f7 = catalog::fano();
            r.check(
                catalog::verify_lazy_witness(&spike, &f7, &w),
                format!(
                    "PG(2,2)-minor witness verified (contract {}, delete {})",
                    spike.base().ground().word(w.contract),
                    spike.base().ground().word(w.delete)
                ),
            );
            let plain = RelaxedBinaryMatroid::new(base.clone(), vec![]).unwrap();
            r.check(
                catalog::verify_lazy_witness(&plain, &f7, &w),
                "the same witness restricts the unrelaxed base to a Fano plane",
            );
        }
        Err(e) => r.check(false, format!("PG-minor witness search failed: {e}")),
    }
    r
}

/// Criterion: relaxing any circuit-hyperplane of a non-binary corpus matroid
/// certifies one disjunct of the dichotomy.
pub fn criterion_dichotomy(corpus: &Corpus) -> Report {
    let mut r = Report::new("relaxation dichotomy");
    let mut checked = 0usize;
    let mut fails = Vec::new();
    for (name, m) in corpus {
        if m.size() > 10 || is_binary(m).is_some() {
            continue;
        }
        for x in circuit_hyperplanes(m) {
            checked += 1;
            if relaxation_dichotomy(m, x).is_err() {
                fails.push(format!("{name}@{}", m.ground().word(x)));
            }
        }
    }
    r.check(
        fails.is_empty(),
        format!(
            "one disjunct certified for all {checked} (matroid, circuit-hyperplane) pairs{}",
            render_fail_list(&fails)
        ),
    );
    r
}

/// Axiom-level checks over the catalog: self-validation, duality identities,
/// orthogonality, and the relaxation chain bookkeeping.
pub fn suite_axioms() -> Report {
    let mut r = Report::new("axioms");
    let entries = catalog_entries(12);
    r.check(
        entries.iter().all(|(_, m)| m.recheck().is_ok()),
        format!("all {} catalog matroids satisfy basis exchange", entries.len()),
    );
    r.check(
        entries
            .iter()
            .all(|(_, m)| m.rank() + m.dual().rank() == m.size()),
        "rank(E) + dual rank(E) = |E| across the catalog",
    );
    let mut dual_rule = true;
    for (_, m) in &entries {
        for e in 0..m.size() {
            let l = m.ground().label(e).to_string();
            if m.contract(&l).unwrap() != m.dual().delete(&l).unwrap().dual() {
                dual_rule = false;
            }
        }
    }
    r.check(dual_rule, "contract = dual ∘ delete ∘ dual, element-exhaustive");
    let mut ortho = true;
    for (_, m) in &entries {
        if m.size() > 10 {
            continue;
        }
        let cocircuits = m.cocircuits();
        for c in m.circuits() {
            for cc in &cocircuits {
                if c.inter(*cc).len() == 1 {
                    ortho = false;
                }
            }
        }
    }
    r.check(ortho, "no circuit meets a cocircuit in exactly one element");
    r.check(
        entries.iter().all(|(_, m)| {
            let a = m.connectivity();
            let b = m.dual().connectivity();
            a.is_connected == b.is_connected && a.is_three_connected == b.is_three_connected
        }),
        "connectivity flags are duality-invariant",
    );
    // relaxation chain: basis counts 16..20 and triangle counts 3/2/1/0
    let counts: Vec<usize> = ["MK4", "W3", "Q6", "P6", "U36"]
        .iter()
        .map(|n| catalog::named(n).unwrap().bases().len())
        .collect();
    r.check(counts == vec![16, 17, 18, 19, 20], "relaxation chain basis counts");
    let triangles = |m: &Matroid| {
        m.circuits()
            .into_iter()
            .filter(|&c| m.rank_of(c) < m.rank())
            .count()
    };
    let tri: Vec<usize> = ["W3", "Q6", "P6", "U36"]
        .iter()
        .map(|n| triangles(&catalog::named(n).unwrap()))
        .collect();
    r.check(tri == vec![3, 2, 1, 0], "triangle counts along the chain");
    r.check(
        catalog::named("U36").unwrap().as_uniform() == Some((3, 6)),
        "the chain terminates at the uniform matroid",
    );
    let k = catalog::named("K").unwrap();
    r.check(
        k.size() == 7 && k.rank() == 2,
        "K is the seven-element rank-two matroid",
    );
    r.check(
        isomorphic(
            &catalog::named("R6").unwrap(),
            &crate::sums::twosum(
                &Matroid::uniform(2, 4),
                &Matroid::uniform(2, 4)
                    .relabel(crate::ground::GroundSet::new(vec!["e", "f", "g", "h"]).unwrap())
                    .unwrap(),
                "a",
                "e",
            )
            .unwrap(),
        )
        .is_some(),
        "R6 is the 2-sum of two U_2_4",
    );
    r
}

/// Lemma-level checks that are not their own acceptance criteria: relaxation
/// connectivity preservation, whirl rim containment, binary 2-sum closure,
/// class closure under duals and minors, containment of R in Z, and the
/// connected-not-3-connected excluded-minor sweeps.
pub fn suite_extra_lemmas(corpus: &Corpus) -> Report {
    let mut r = Report::new("lemma sweeps");
    // relaxing a connected binary matroid: non-binary, connectivity preserved
    let mut conn_ok = true;
    let mut nonbin_ok = true;
    for (_, m) in catalog_entries(12) {
        if is_binary(&m).is_none() {
            continue;
        }
        let rep = m.connectivity();
        for x in circuit_hyperplanes(&m) {
            let relaxed = relax(&m, x).unwrap();
            let rep2 = relaxed.connectivity();
            if rep.is_connected && is_binary(&relaxed).is_some() {
                nonbin_ok = false;
            }
            if (rep.is_connected && !rep2.is_connected)
                || (rep.is_three_connected && !rep2.is_three_connected)
            {
                conn_ok = false;
            }
        }
    }
    r.check(nonbin_ok, "relaxations of connected binary matroids are non-binary");
    r.check(conn_ok, "relaxation preserves connectivity and 3-connectivity");
    // whirl rim containment inside relaxations of binary matroids
    let whirl = catalog::named("W3").unwrap();
    let rim: Subset = {
        let mut s = Subset::EMPTY;
        for e in 0..whirl.size() {
            let l = whirl.ground().label(e).to_string();
            if is_binary(&whirl.contract(&l).unwrap()).is_none() {
                s = s.with(e);
            }
        }
        s
    };
    r.check(rim.len() == 3, "the whirl has three rim elements");
    let mut rim_ok = true;
    let mut whirl_hosts: Vec<(Matroid, Subset)> = Vec::new();
    for (_, m) in catalog_entries(8) {
        if is_binary(&m).is_some() {
            for x in circuit_hyperplanes(&m) {
                whirl_hosts.push((relax(&m, x).unwrap(), x));
            }
        }
    }
    for (host, x) in &whirl_hosts {
        for_each_minor_witness(host, &whirl, &mut |w| {
            // image of the rim must land in the relaxed set, spokes outside
            for (t, h) in &w.iso {
                let tp = whirl.ground().position(t).unwrap();
                let hp = host.ground().position(h).unwrap();
                if rim.contains(tp) != x.contains(hp) {
                    rim_ok = false;
                }
            }
            rim_ok
        });
    }
    r.check(
        rim_ok,
        format!(
            "every whirl-minor of a relaxed binary matroid maps rims into the relaxed set ({} hosts)",
            whirl_hosts.len()
        ),
    );
    // binary matroids are closed under 2-sum
    let mut bin2sum = true;
    let binaries: Vec<Matroid> = ["MK4", "F7", "U_2_3", "U_1_3", "U_3_4"]
        .iter()
        .map(|n| catalog::named(n).unwrap())
        .collect();
    for a in &binaries {
        for b in &binaries {
            let labels: Vec<String> = (0..b.size()).map(|i| format!("y{i}")).collect();
            let b2 = b
                .relabel(crate::ground::GroundSet::new(labels).unwrap())
                .unwrap();
            if a.size() + b2.size() - 2 > 12 {
                continue;
            }
            if let Ok(s) = crate::sums::twosum(a, &b2, a.ground().label(0), b2.ground().label(0)) {
                if is_binary(&s).is_none() {
                    bin2sum = false;
                }
            }
        }
    }
    r.check(bin2sum, "2-sums of binary matroids are binary");
    // class closure and R ⊆ Z over the corpus
    let mut closure_ok = true;
    let mut r_in_z = true;
    for (_, m) in corpus.iter() {
        let in_z_here = in_z(m).0;
        let in_r_here = in_r(m).0;
        if in_r_here && !in_z_here {
            r_in_z = false;
        }
        if in_z_here && !in_z(&m.dual()).0 {
            closure_ok = false;
        }
        if in_r_here && !in_r(&m.dual()).0 {
            closure_ok = false;
        }
        if m.size() >= 2 && (in_z_here || in_r_here) {
            for e in 0..m.size() {
                let l = m.ground().label(e).to_string();
                let del = m.delete(&l).unwrap();
                let con = m.contract(&l).unwrap();
                if in_z_here && (!in_z(&del).0 || !in_z(&con).0) {
                    closure_ok = false;
                }
                if in_r_here && (!in_r(&del).0 || !in_r(&con).0) {
                    closure_ok = false;
                }
            }
        }
    }
    r.check(closure_ok, "Z and R are closed under duality and single-element minors");
    r.check(r_in_z, "R is contained in Z");
    // connected-but-not-3-connected excluded minors
    let r6 = catalog::named("R6").unwrap();
    let kk = catalog::named("K").unwrap();
    let ks = catalog::named("Kstar").unwrap();
    let mut conn_sweep_ok = true;
    for (_, m) in corpus.iter() {
        let rep = m.connectivity();
        if !rep.is_connected || rep.is_three_connected {
            continue;
        }
        let ex_z = excluded_minor_check(m, ClassId::Z).pass();
        if ex_z != (isomorphic(m, &r6).is_some()) {
            conn_sweep_ok = false;
        }
        let ex_r = excluded_minor_check(m, ClassId::R).pass();
        let expected = isomorphic(m, &r6).is_some()
            || isomorphic(m, &kk).is_some()
            || isomorphic(m, &ks).is_some();
        if ex_r != expected {
            conn_sweep_ok = false;
        }
    }
    r.check(
        conn_sweep_ok,
        "connected non-3-connected excluded minors are exactly R6 (for Z) and R6, K, K* (for R)",
    );
    // 3-connected excluded minors are the stated sporadics plus D
    let mut three_sweep_ok = true;
    let z_sporadics: Vec<Matroid> = ["Q6", "P6", "U36"]
        .iter()
        .map(|n| catalog::named(n).unwrap())
        .collect();
    let r_sporadics: Vec<Matroid> = ["U_2_5", "U_3_5"]
        .iter()
        .map(|n| catalog::named(n).unwrap())
        .collect();
    for (_, m) in corpus.iter() {
        if !m.connectivity().is_three_connected {
            continue;
        }
        let in_dd = in_d(m).is_some();
        let ex_z = excluded_minor_check(m, ClassId::Z).pass();
        let expect_z = in_dd || z_sporadics.iter().any(|s| isomorphic(m, s).is_some());
        if ex_z != expect_z {
            three_sweep_ok = false;
        }
        let ex_r = excluded_minor_check(m, ClassId::R).pass();
        let expect_r = in_dd || r_sporadics.iter().any(|s| isomorphic(m, s).is_some());
        if ex_r != expect_r {
            three_sweep_ok = false;
        }
    }
    r.check(
        three_sweep_ok,
        "3-connected excluded minors are exactly the stated sporadics together with D",
    );
    // decomposition shape for connected non-binary matroids without the
    // three sporadic minors
    let mut cache = MinorCache::new();
    let blockers: Vec<Matroid> = ["R6", "U24_U11", "U24_U01"]
        .iter()
        .map(|n| catalog::named(n).unwrap())
        .collect();
    let mut shape_ok = true;
    for (_, m) in corpus.iter() {
        if !m.is_connected() || is_binary(m).is_some() || m.size() < 3 {
            continue;
        }
        if blockers
            .iter()
            .any(|b| has_minor_cached(&mut cache, m, b, None))
        {
            continue;
        }
        let Ok(t) = tree_decompose(m) else {
            shape_ok = false;
            continue;
        };
        let nonbinary: Vec<usize> = (0..t.nodes.len())
            .filter(|&i| is_binary(&t.nodes[i]).is_none())
            .collect();
        if nonbinary.len() != 1 {
            shape_ok = false;
            continue;
        }
        let hub = nonbinary[0];
        for (i, node) in t.nodes.iter().enumerate() {
            if i == hub {
                continue;
            }
            let uniform_leaf = node.as_uniform().is_some()
                && (node.rank() == 1 || node.corank() == 1);
            let adjacent = t
                .edges
                .iter()
                .any(|(a, b, _)| (*a == i && *b == hub) || (*a == hub && *b == i));
            if !uniform_leaf || !adjacent {
                shape_ok = false;
            }
        }
    }
    r.check(
        shape_ok,
        "sporadic-minor-free connected non-binary matroids decompose as one non-binary node with uniform neighbors",
    );
    // binarity test against its independent oracle for the small slice
    let u24 = catalog::named("U_2_4").unwrap();
    let mut tutte_ok = true;
    let mut self_dual_ok = true;
    for (_, m) in corpus.iter().filter(|(_, m)| m.size() <= 8) {
        let binary = is_binary(m).is_some();
        if binary != has_minor(m, &u24).is_none() {
            tutte_ok = false;
        }
        if binary != is_binary(&m.dual()).is_some() {
            self_dual_ok = false;
        }
    }
    r.check(
        tutte_ok,
        "binarity agrees with absence of a U_2_4-minor on the ≤ 8-element slice",
    );
    r.check(self_dual_ok, "binarity is invariant under duality on the slice");
    // every pair of tree nodes appears as a 2-sum minor
    let mut pair_ok = true;
    let mut pair_hosts = 0usize;
    for (_, m) in corpus.iter() {
        if !m.is_connected() || m.size() < 4 || m.size() > 9 {
            continue;
        }
        let Ok(t) = tree_decompose(m) else {
            pair_ok = false;
            continue;
        };
        if t.nodes.len() < 2 {
            continue;
        }
        pair_hosts += 1;
        match tree_minor_check(&t, m) {
            Ok(checks) => {
                if !checks.iter().all(|(_, _, ok)| *ok) {
                    pair_ok = false;
                }
            }
            Err(_) => pair_ok = false,
        }
    }
    r.check(
        pair_ok,
        format!("every tree node pair 2-sums to a minor of its host ({pair_hosts} hosts)"),
    );
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Axioms,
    Lemmas,
    ExcludedMinors,
    CrossCheck,
    PgSpike,
    All,
}

impl SuiteKind {
    pub fn parse(s: &str) -> Option<SuiteKind> {
        match s {
            "axioms" => Some(SuiteKind::Axioms),
            "lemmas" => Some(SuiteKind::Lemmas),
            "excluded-minors" => Some(SuiteKind::ExcludedMinors),
            "cross-check" => Some(SuiteKind::CrossCheck),
            "pg-spike" => Some(SuiteKind::PgSpike),
            "all" => Some(SuiteKind::All),
            _ => None,
        }
    }
}

/// Runs a suite; the corpus-driven suites honor the seed and element budget.
pub fn run_suite(kind: SuiteKind, seed: u64, max_elements: usize) -> crate::error::Result<Report> {
    let needs_corpus = matches!(
        kind,
        SuiteKind::Lemmas | SuiteKind::CrossCheck | SuiteKind::All
    );
    let corpus_data = if needs_corpus {
        corpus(seed, max_elements)?
    } else {
        Vec::new()
    };
    let mut report = Report::new(format!("suite {kind:?}"));
    match kind {
        SuiteKind::Axioms => report.absorb(suite_axioms()),
        SuiteKind::ExcludedMinors => report.absorb(criterion_excluded_minors()),
        SuiteKind::CrossCheck => {
            report.absorb(criterion_oracle_cross_check(&corpus_data));
            report.absorb(criterion_classifier(&corpus_data));
        }
        SuiteKind::Lemmas => {
            report.absorb(criterion_relaxation_rules());
            report.absorb(criterion_disconnected(&corpus_data));
            report.absorb(criterion_roundedness(&corpus_data));
            report.absorb(criterion_three_connected(&corpus_data));
            report.absorb(criterion_tree_decomposition(&corpus_data, seed));
            report.absorb(criterion_dichotomy(&corpus_data));
            report.absorb(suite_extra_lemmas(&corpus_data));
        }
        SuiteKind::PgSpike => {
            report.absorb(criterion_spikes());
            report.absorb(criterion_pg_spike());
        }
        SuiteKind::All => {
            report.absorb(suite_axioms());
            report.absorb(criterion_excluded_minors());
            report.absorb(criterion_oracle_cross_check(&corpus_data));
            report.absorb(criterion_classifier(&corpus_data));
            report.absorb(criterion_relaxation_rules());
            report.absorb(criterion_disconnected(&corpus_data));
            report.absorb(criterion_roundedness(&corpus_data));
            report.absorb(criterion_three_connected(&corpus_data));
            report.absorb(criterion_tree_decomposition(&corpus_data, seed));
            report.absorb(criterion_dichotomy(&corpus_data));
            report.absorb(criterion_spikes());
            report.absorb(criterion_pg_spike());
            report.absorb(suite_extra_lemmas(&corpus_data));
        }
    }
    Ok(report)
}

/// Checks of Lemma-level statements about tree decompositions used by the
/// CLI's treedec output path.
pub fn tree_pair_minors(m: &Matroid) -> crate::error::Result<bool> {
    let t = tree_decompose(m)?;
    Ok(tree_minor_check(&t, m)?.iter().all(|(_, _, ok)| *ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn excluded_minor_criterion_passes() {
        let r = criterion_excluded_minors();
        assert!(r.passed(), "{}", r.render());
    }

    #[test]
    fn spike_criteria_pass() {
        let r = criterion_spikes();
        assert!(r.passed(), "{}", r.render());
        let r = criterion_pg_spike();
        assert!(r.passed(), "{}", r.render());
    }

    #[test]
    fn axioms_suite_passes() {
        let r = suite_axioms();
        assert!(r.passed(), "{}", r.render());
    }

    #[test]
    fn relaxation_rules_criterion_passes() {
        let r = criterion_relaxation_rules();
        assert!(r.passed(), "{}", r.render());
    }

    #[test]
    fn small_corpus_suites_pass() {
        // a reduced-budget smoke pass; the acceptance tests run the full
        // sizes, where the ≥ 500 class-count line applies
        let c = corpus(0, 7).unwrap();
        let cross = criterion_oracle_cross_check(&c);
        assert!(
            cross.lines[1].0 && cross.lines[2].0,
            "{}",
            cross.render()
        );
        for rep in [
            criterion_classifier(&c),
            criterion_disconnected(&c),
            criterion_three_connected(&c),
            criterion_tree_decomposition(&c, 0),
            criterion_dichotomy(&c),
        ] {
            assert!(rep.passed(), "{}", rep.render());
        }
    }
}
