//! Exhaustive and seeded-random sweeps over the structural identities.
//!
//! Every suite is deterministic given its [`Params`]. Random draws use a
//! ChaCha stream seeded from the user seed and the suite name, so a suite
//! yields the same checks whether it runs alone or inside `all`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cells::{
    cell_index, generation_path, ideal_closure_check, in_ideal, j_set, j_zero_set,
    quasi_order_compare, stratum_report, summand_labels,
};
use crate::error::{Error, Result};
use crate::fock::{
    a_entry, a_q_entry, apply_word, classify_case, support_bounds, xi_apply, xi_on_partition,
    xi_prime_on_partition, CaseTag, FockVector, Rep,
};
use crate::partition::{enumerate_partitions, Partition};
use crate::tl::{
    diagram_product, element_multiply, enumerate_fcs, faithfulness_witness, generator_diagram,
    min_witness_p, minimal_part, normalize, witness_partition, word_to_diagram, FcsWord, TlDiagram,
    TlElement, MAX_TABLE_GENERATORS,
};
use crate::weight::{
    check_lemaddq_transition, d_inverse, d_set, d_tilde, f_map, marking, prop_link_candidates,
    prop_link_weight, weight_from_subset, DominantWeight, LemaddqCase,
};

/// Longest fcs word used by the faithfulness and basis sweeps.
pub const MAX_FCS_LEN: usize = 6;
/// Largest `n` in the round-trip and summand sweeps.
pub const MAX_N: usize = 4;
/// Largest `k` in the ideal sweeps.
pub const MAX_IDEAL: usize = 4;
/// Cap on the size of partitions generated from `∂^k` along paths.
pub const MAX_PATH_SIZE: usize = 10;
/// Number of counterexamples kept in a report; the rest are only counted.
pub const MAX_RECORDED_FAILURES: usize = 50;

const RANDOM_ELEMENTS: usize = 1000;
const RANDOM_WORD_PAIRS: usize = 500;
const ACTION_TEST_SIZE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    TlRelations,
    TlPrimeRelations,
    SingleTerm,
    Preserve,
    RemoveBox,
    Marking,
    DRoundtrip,
    Proplink,
    Lemaddq,
    Ideals,
    FcsBasis,
    Faithfulness,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const EACH: [Suite; 12] = [
        Suite::TlRelations,
        Suite::TlPrimeRelations,
        Suite::SingleTerm,
        Suite::Preserve,
        Suite::RemoveBox,
        Suite::Marking,
        Suite::DRoundtrip,
        Suite::Proplink,
        Suite::Lemaddq,
        Suite::Ideals,
        Suite::FcsBasis,
        Suite::Faithfulness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TlRelations => "tl-relations",
            Suite::TlPrimeRelations => "tl-prime-relations",
            Suite::SingleTerm => "single-term",
            Suite::Preserve => "preserve",
            Suite::RemoveBox => "remove-box",
            Suite::Marking => "marking",
            Suite::DRoundtrip => "d-roundtrip",
            Suite::Proplink => "proplink",
            Suite::Lemaddq => "lemaddq",
            Suite::Ideals => "ideals",
            Suite::FcsBasis => "fcs-basis",
            Suite::Faithfulness => "faithfulness",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Params {
    /// Largest partition size swept.
    pub max_size: usize,
    /// Generators range over `[-window, window]` in the TL sweeps.
    pub window: i64,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            max_size: 10,
            window: 4,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub suite: Suite,
    pub parameters: Params,
    pub checked: u64,
    /// Checks per concrete suite.
    pub breakdown: BTreeMap<String, u64>,
    pub failure_count: u64,
    /// The first [`MAX_RECORDED_FAILURES`] counterexamples.
    pub failures: Vec<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Sweep {
    checked: u64,
    failure_count: u64,
    failures: Vec<Value>,
}

impl Sweep {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.fail(detail());
        }
    }

    fn fail(&mut self, detail: Value) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(detail);
        }
    }

    /// Records `Err` results as failures and passes `Ok` values through.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> Value) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                let mut detail = context();
                detail["error"] = json!(e.to_string());
                self.fail(detail);
                None
            }
        }
    }
}

/// Runs `suite`. Fails only on unusable parameters; mathematical
/// counterexamples are entries of the report.
pub fn run(suite: Suite, params: Params) -> Result<VerifyReport> {
    let window_generators = 2 * params.window.max(0) as usize + 1;
    if params.window < 0 || window_generators > MAX_TABLE_GENERATORS {
        return Err(Error::Precondition(format!(
            "window must lie in 0..={}",
            (MAX_TABLE_GENERATORS - 1) / 2
        )));
    }
    let start = Instant::now();
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut report = VerifyReport {
        suite,
        parameters: params,
        checked: 0,
        breakdown: BTreeMap::new(),
        failure_count: 0,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for s in suites {
        let mut sweep = Sweep::default();
        run_one(s, &params, &mut sweep);
        report.checked += sweep.checked;
        report.failure_count += sweep.failure_count;
        report.breakdown.insert(s.name().to_string(), sweep.checked);
        for mut f in sweep.failures {
            if report.failures.len() < MAX_RECORDED_FAILURES {
                f["suite"] = json!(s.name());
                report.failures.push(f);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn run_one(suite: Suite, p: &Params, sweep: &mut Sweep) {
    match suite {
        Suite::TlRelations => tl_relations(p, Rep::Xi, sweep),
        Suite::TlPrimeRelations => tl_relations(p, Rep::XiPrime, sweep),
        Suite::SingleTerm => single_term(p, sweep),
        Suite::Preserve => preserve(p, sweep),
        Suite::RemoveBox => remove_box(p, sweep),
        Suite::Marking => marking_suite(p, sweep),
        Suite::DRoundtrip => d_roundtrip(p, sweep),
        Suite::Proplink => proplink(p, sweep),
        Suite::Lemaddq => lemaddq(p, sweep),
        Suite::Ideals => ideals(p, sweep),
        Suite::FcsBasis => fcs_basis(p, sweep),
        Suite::Faithfulness => faithfulness(p, sweep),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn rng_for(suite: Suite, seed: u64) -> ChaCha8Rng {
    let salt = suite.name().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    });
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

fn act(lambda: &Partition, word: &[i64], rep: Rep) -> FockVector {
    apply_word(&FockVector::basis(lambda.clone()), word, rep)
}

fn widened(lambda: &Partition) -> std::ops::RangeInclusive<i64> {
    let (lo, hi) = support_bounds(lambda);
    lo - 2..=hi + 2
}

fn rep_name(rep: Rep) -> &'static str {
    match rep {
        Rep::Xi => "xi",
        Rep::XiPrime => "xi-prime",
    }
}

fn tl_relations(p: &Params, rep: Rep, sweep: &mut Sweep) {
    for lambda in enumerate_partitions(p.max_size) {
        let range = widened(&lambda);
        for i in range.clone() {
            let sq = act(&lambda, &[i, i], rep);
            sweep.check(sq.is_zero(), || {
                json!({"relation": "square", "rep": rep_name(rep), "partition": lambda, "i": i, "image": sq})
            });
            let single = act(&lambda, &[i], rep);
            for j in [i - 1, i + 1] {
                let braid = act(&lambda, &[i, j, i], rep);
                sweep.check(braid == single, || {
                    json!({"relation": "braid", "rep": rep_name(rep), "partition": lambda, "i": i, "j": j,
                           "lhs": braid, "rhs": single})
                });
            }
            for j in range.clone().filter(|&j| j > i + 1) {
                let ij = act(&lambda, &[i, j], rep);
                let ji = act(&lambda, &[j, i], rep);
                sweep.check(ij == ji, || {
                    json!({"relation": "commute", "rep": rep_name(rep), "partition": lambda, "i": i, "j": j,
                           "lhs": ij, "rhs": ji})
                });
            }
        }
    }
}

fn single_term(p: &Params, sweep: &mut Sweep) {
    let (lo_cap, hi_cap) = (-(p.max_size as i64) - 4, p.max_size as i64 + 4);
    for lambda in enumerate_partitions(p.max_size) {
        let (lo, hi) = support_bounds(&lambda);
        let basis = FockVector::basis(lambda.clone());
        for q in lo_cap.min(lo - 2)..=hi_cap.max(hi + 2) {
            let image = xi_apply(&basis, q);
            let single = xi_on_partition(&lambda, q);
            let shape_ok = match &single {
                None => image.is_zero(),
                Some(k) => image.len() == 1 && image.coeff(k) == 1,
            };
            sweep.check(
                shape_ok,
                || json!({"law": "single-term", "partition": lambda, "q": q, "image": image}),
            );
            if let Some(k) = &single {
                sweep.check(
                    k.size() % 2 != lambda.size() % 2
                        && (k.size() == lambda.size() + 1 || k.size() < lambda.size()),
                    || json!({"law": "parity", "partition": lambda, "q": q, "image": k}),
                );
                sweep.check(
                    a_q_entry(&lambda, k, q) == 1,
                    || json!({"law": "a-entry", "partition": lambda, "q": q}),
                );
            }
            let case = classify_case(&lambda, q);
            if case == CaseTag::C || case == CaseTag::B {
                sweep.check(
                    single.is_none(),
                    || json!({"law": "case-zero", "partition": lambda, "q": q, "case": case}),
                );
            }
            let prime = xi_prime_on_partition(&lambda, q);
            let mut expected = FockVector::zero();
            if let Some(up) = lambda.add_box(q) {
                expected.add_term(up, 1);
            }
            if let Some(down) = lambda.remove_box(q - 1) {
                expected.add_term(down, 1);
            }
            sweep.check(prime == expected, || {
                json!({"law": "xi-prime-definition", "partition": lambda, "q": q, "image": prime})
            });
            if q < lo || q > hi {
                sweep.check(
                    single.is_none() && prime.is_zero(),
                    || json!({"law": "support", "partition": lambda, "q": q}),
                );
            }
        }
        let row_total: u32 = enumerate_partitions(lambda.size() + 1)
            .filter(|k| k.size() == lambda.size() + 1)
            .map(|k| a_entry(&lambda, &k))
            .sum();
        sweep.check(
            row_total as usize == lambda.addable_contents().len(),
            || json!({"law": "addable-row", "partition": lambda, "total": row_total}),
        );
    }
}

fn preserve(p: &Params, sweep: &mut Sweep) {
    for k in 0..=MAX_IDEAL {
        let report = ideal_closure_check(k, p.max_size);
        sweep.checked += report.steps_checked as u64;
        for v in report.violations {
            sweep.fail(json!({"law": "closure", "k": k, "partition": v.partition, "q": v.q, "image": v.image}));
        }
        let stair = Partition::staircase(k);
        sweep.check(
            in_ideal(&stair, k) && !in_ideal(&stair, k + 1),
            || json!({"law": "strict-chain", "k": k}),
        );
        let path_cap = p.max_size.min(MAX_PATH_SIZE);
        for lambda in enumerate_partitions(path_cap).filter(|l| in_ideal(l, k)) {
            let Some(path) = generation_path(&lambda, k) else {
                sweep.fail(json!({"law": "generation", "k": k, "partition": lambda}));
                continue;
            };
            let mut cur = Some(stair.clone());
            for &q in &path {
                cur = cur.and_then(|c| xi_on_partition(&c, q));
            }
            sweep.check(
                cur.as_ref() == Some(&lambda),
                || json!({"law": "generation", "k": k, "partition": lambda, "path": path}),
            );
        }
    }
}

fn remove_box(p: &Params, sweep: &mut Sweep) {
    for nu in enumerate_partitions(p.max_size) {
        if !nu.is_empty() {
            let rim = nu.rim_boxes().len();
            sweep.check(
                rim == nu.row(1) + nu.len() - 1,
                || json!({"law": "rim-length", "partition": nu, "rim": rim}),
            );
        }
        for q in nu.removable_contents() {
            let kappa = nu.remove_box(q).expect("removable");
            for (part, target) in [("i", q - 1), ("ii", q + 1)] {
                if kappa.removable_contents().contains(&target) {
                    let entry = a_q_entry(&nu, &kappa, target);
                    sweep.check(entry == 1, || {
                        json!({"law": "remove-box", "part": part, "partition": nu, "q": q, "entry": entry})
                    });
                }
            }
        }
        for q in widened(&nu) {
            let via_hooks = match classify_case(&nu, q) {
                CaseTag::D => Some(nu.minimal_balanced_hook_starting(q + 1)),
                CaseTag::E => Some(nu.minimal_balanced_hook_ending(q - 1)),
                _ => None,
            };
            if let Some(hook) = via_hooks {
                let image = xi_on_partition(&nu, q);
                let consistent = match &hook {
                    None => image.is_none(),
                    Some(h) => {
                        h.is_balanced()
                            && nu.rim_hook(h.start_content, h.end_content).as_ref() == Some(h)
                            && image.as_ref() == Some(&h.remainder)
                    }
                };
                sweep.check(
                    consistent,
                    || json!({"law": "hook-removal", "partition": nu, "q": q}),
                );
            }
        }
    }
}

/// A partition and its marked boxes as `(row, col)`.
type MarkedExample = (&'static [usize], &'static [(usize, usize)]);

const KNOWN_MARKINGS: [MarkedExample; 6] = [
    (&[2], &[(1, 2)]),
    (&[1, 1, 1], &[(3, 1)]),
    (&[2, 2, 2], &[(2, 2), (3, 2)]),
    (&[2, 2, 1, 1], &[(4, 1), (2, 2)]),
    (&[3, 2, 2, 2], &[(1, 3), (3, 2), (4, 2)]),
    (&[4, 2, 1], &[(1, 4), (2, 2), (3, 1)]),
];

fn marking_suite(p: &Params, sweep: &mut Sweep) {
    for (parts, boxes) in KNOWN_MARKINGS {
        let lambda = Partition::new(parts.to_vec()).expect("valid");
        let mut got: Vec<(usize, usize)> = marking(&lambda)
            .boxes
            .iter()
            .map(|b| (b.row, b.col))
            .collect();
        let mut want = boxes.to_vec();
        got.sort_unstable();
        want.sort_unstable();
        sweep.check(
            got == want,
            || json!({"law": "example", "partition": lambda, "marked": got}),
        );
    }
    for lambda in enumerate_partitions(p.max_size) {
        let m = marking(&lambda);
        let n = cell_index(&lambda);
        sweep.check(
            m.len() == n,
            || json!({"law": "diamond-count", "partition": lambda, "diamonds": m.len(), "cell": n}),
        );
        let right_most = m.boxes.iter().all(|b| lambda.row(b.row) == b.col);
        let distinct_rows = m.boxes.windows(2).all(|w| w[0].row > w[1].row);
        let shifted = m.d.iter().zip(&m.d_tilde).all(|(d, t)| d + 1 == *t);
        sweep.check(
            right_most && distinct_rows && shifted && d_tilde(&lambda) == m.d_tilde,
            || json!({"law": "marking-shape", "partition": lambda, "marking": m}),
        );
    }
    for n in 0..=8 {
        let w = f_map(&Partition::staircase(n));
        sweep.check(
            w == DominantWeight::staircase_weight(n),
            || json!({"law": "staircase-weight", "n": n, "weight": w}),
        );
    }
}

fn d_roundtrip(p: &Params, sweep: &mut Sweep) {
    for lambda in enumerate_partitions(p.max_size) {
        let n = cell_index(&lambda);
        if n > MAX_N {
            continue;
        }
        let d = d_set(&lambda);
        if let Some(back) = sweep.ok(
            d_inverse(&d, n),
            || json!({"law": "d-inverse", "partition": lambda}),
        ) {
            sweep.check(
                back == lambda,
                || json!({"law": "d-roundtrip", "partition": lambda, "d": d, "inverse": back}),
            );
        }
        let w = f_map(&lambda);
        let mut beta = w.beta_set();
        beta.sort_unstable();
        sweep.check(
            beta == d,
            || json!({"law": "beta-set", "partition": lambda, "weight": w}),
        );
        if let Some(again) = sweep.ok(
            weight_from_subset(&beta, n),
            || json!({"law": "subset", "partition": lambda}),
        ) {
            sweep.check(again == w, || json!({"law": "subset", "partition": lambda}));
        }
    }
}

fn proplink(p: &Params, sweep: &mut Sweep) {
    for lambda in enumerate_partitions(p.max_size) {
        let context = || json!({"law": "proplink", "partition": lambda});
        let Some(candidates) = sweep.ok(prop_link_candidates(&lambda), context) else {
            continue;
        };
        let f = f_map(&lambda);
        for (k0, w) in candidates {
            if let Some(w) = w {
                sweep.check(w == f, || {
                    json!({"law": "proplink", "partition": lambda, "k0": k0, "formula": w, "f": f})
                });
            }
        }
        sweep.ok(prop_link_weight(&lambda), context);
    }
}

fn lemaddq(p: &Params, sweep: &mut Sweep) {
    for lambda in enumerate_partitions(p.max_size) {
        for q in lambda.addable_contents() {
            let r = check_lemaddq_transition(&lambda, q);
            if r.case != LemaddqCase::NotApplicable {
                sweep.check(r.pass, || json!({"law": "lemaddq", "report": r}));
            }
        }
    }
}

fn ideals(p: &Params, sweep: &mut Sweep) {
    for r in 0..=8usize {
        let j = j_set(r);
        let j0 = j_zero_set(r);
        sweep.check(
            j0.iter().all(|x| j.contains(x)) && j.iter().all(|x| x % 2 == r % 2),
            || json!({"law": "label-sets", "r": r}),
        );
        for n in 0..=MAX_N {
            for row in summand_labels(n, r) {
                let cell = cell_index(&row.partition);
                let consistent = (!row.projective || row.appears)
                    && row.appears == (cell <= n)
                    && row.projective == (cell == n)
                    && j0.contains(&row.partition.size());
                sweep.check(
                    consistent,
                    || json!({"law": "summand-label", "n": n, "r": r, "row": row}),
                );
            }
        }
    }
    let table: Vec<(Vec<usize>, bool, bool)> = summand_labels(1, 3)
        .into_iter()
        .map(|l| (l.partition.parts().to_vec(), l.appears, l.projective))
        .collect();
    let expected = vec![
        (vec![3], true, true),
        (vec![2, 1], false, false),
        (vec![1, 1, 1], true, true),
        (vec![1], true, true),
    ];
    sweep.check(
        table == expected,
        || json!({"law": "n1-r3-table", "table": table}),
    );
    for lambda in enumerate_partitions(p.max_size) {
        let report = stratum_report(&lambda);
        let (core, block) = lambda.two_core();
        let block_ok = core == Partition::staircase(block)
            && (lambda.size() - core.size()) % 2 == 0
            && report.block == block;
        sweep.check(block_ok, || json!({"law": "two-core", "partition": lambda}));
        let cell = report.cell;
        let ideals_ok = (0..=cell).all(|k| report.ideals[&k.to_string()])
            && !report.ideals[&(cell + 1).to_string()];
        sweep.check(ideals_ok, || json!({"law": "stratum", "report": report}));
        let stair = Partition::staircase(cell);
        sweep.check(
            quasi_order_compare(&lambda, &stair).is_eq(),
            || json!({"law": "quasi-order", "partition": lambda}),
        );
        let t = lambda.transpose();
        sweep.check(
            cell_index(&t) == cell && t.transpose() == lambda,
            || json!({"law": "transpose", "partition": lambda}),
        );
    }
}

fn random_word(rng: &mut ChaCha8Rng, window: i64, max_len: usize) -> Vec<i64> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(-window..=window)).collect()
}

/// Applies a few defining relations at random positions; the result
/// represents the same algebra element.
fn rewrite(rng: &mut ChaCha8Rng, word: &[i64], window: i64) -> Vec<i64> {
    let mut w = word.to_vec();
    for _ in 0..rng.gen_range(1..=4) {
        if w.is_empty() {
            break;
        }
        let pos = rng.gen_range(0..w.len());
        match rng.gen_range(0..3) {
            0 if pos + 1 < w.len() && (w[pos] - w[pos + 1]).abs() > 1 => w.swap(pos, pos + 1),
            1 => {
                let i = w[pos];
                let j = if rng.gen_bool(0.5) { i + 1 } else { i - 1 };
                if (-window..=window).contains(&j) {
                    w.splice(pos..=pos, [i, j, i]);
                }
            }
            _ => {
                if pos + 2 < w.len() && w[pos] == w[pos + 2] && (w[pos] - w[pos + 1]).abs() == 1 {
                    w.splice(pos..=pos + 2, [w[pos]]);
                }
            }
        }
    }
    w
}

fn fcs_basis(p: &Params, sweep: &mut Sweep) {
    let mut rng = rng_for(Suite::FcsBasis, p.seed);
    let words = enumerate_fcs(-p.window, p.window, MAX_FCS_LEN);
    let mut seen: HashMap<TlDiagram, FcsWord> = HashMap::new();
    for w in &words {
        let d = word_to_diagram(&w.to_word());
        sweep.check(!d.is_zero(), || json!({"law": "fcs-nonzero", "word": w}));
        if let Some(other) = seen.insert(d, w.clone()) {
            sweep.fail(json!({"law": "distinct-diagrams", "word": w, "other": other}));
        }
        let nf = sweep.ok(
            normalize(&w.to_word()),
            || json!({"law": "normalize", "word": w}),
        );
        if let Some(nf) = nf {
            sweep.check(
                nf.as_ref() == Some(w),
                || json!({"law": "normalize", "word": w, "normal": nf}),
            );
        }
    }
    for i in -p.window..=p.window {
        let g = generator_diagram(i);
        sweep.check(
            g.reflect() == g && diagram_product(&g, &g).is_zero(),
            || json!({"law": "generator", "i": i}),
        );
    }

    let small: Vec<Partition> = enumerate_partitions(p.max_size.min(ACTION_TEST_SIZE)).collect();
    let same_action = |a: &[i64], b: &[i64]| {
        small.iter().all(|l| {
            act(l, a, Rep::Xi) == act(l, b, Rep::Xi)
                && act(l, a, Rep::XiPrime) == act(l, b, Rep::XiPrime)
        })
    };
    for _ in 0..RANDOM_WORD_PAIRS {
        let a = random_word(&mut rng, p.window, 8);
        let b = rewrite(&mut rng, &a, p.window);
        let (da, db) = (word_to_diagram(&a), word_to_diagram(&b));
        sweep.check(
            da == db && same_action(&a, &b),
            || json!({"law": "relation-rewrite", "word": a, "rewritten": b}),
        );
        let c = random_word(&mut rng, p.window, 8);
        if word_to_diagram(&c) == da {
            sweep.check(
                same_action(&a, &c),
                || json!({"law": "diagram-action", "word": a, "other": c}),
            );
        }
        match normalize(&a) {
            Ok(Some(nf)) => sweep.check(
                same_action(&a, &nf.to_word()),
                || json!({"law": "normal-form-action", "word": a, "normal": nf}),
            ),
            Ok(None) => sweep.check(
                same_action(&a, &[0, 0]),
                || json!({"law": "zero-action", "word": a}),
            ),
            Err(e) => sweep.fail(json!({"law": "normalize", "word": a, "error": e.to_string()})),
        }
        let mut d = TlDiagram::identity();
        for &g in &a {
            d = diagram_product(&d, &generator_diagram(g));
        }
        sweep.check(d == da, || json!({"law": "word-to-diagram", "word": a}));
    }

    for _ in 0..RANDOM_WORD_PAIRS / 10 {
        let x = random_element(&mut rng, &words);
        let y = random_element(&mut rng, &words);
        let z = random_element(&mut rng, &words);
        let ctx = || json!({"law": "multiply", "x": x, "y": y, "z": z});
        let (Some(xy), Some(yz)) = (
            sweep.ok(element_multiply(&x, &y), ctx),
            sweep.ok(element_multiply(&y, &z), ctx),
        ) else {
            continue;
        };
        let (Some(l), Some(r)) = (
            sweep.ok(element_multiply(&xy, &z), ctx),
            sweep.ok(element_multiply(&x, &yz), ctx),
        ) else {
            continue;
        };
        sweep.check(
            l == r,
            || json!({"law": "associativity", "x": x, "y": y, "z": z}),
        );
        for lambda in &small {
            let lhs = xy.act(lambda, Rep::XiPrime);
            let rhs = act_element(&x, &y.act(lambda, Rep::XiPrime), Rep::XiPrime);
            sweep.check(
                lhs == rhs,
                || json!({"law": "homomorphism", "x": x, "y": y, "partition": lambda}),
            );
        }
    }
}

fn act_element(x: &TlElement, v: &FockVector, rep: Rep) -> FockVector {
    let mut out = FockVector::zero();
    for (w, c) in x.iter() {
        out = &out + &apply_word(v, &w.to_word(), rep).scale(c);
    }
    out
}

fn random_element(rng: &mut ChaCha8Rng, words: &[FcsWord]) -> TlElement {
    loop {
        let terms = rng.gen_range(1..=4);
        let x = TlElement::from_terms((0..terms).map(|_| {
            let w = words.choose(rng).expect("nonempty").clone();
            let c = loop {
                let c: i64 = rng.gen_range(-5..=5);
                if c != 0 {
                    break c;
                }
            };
            (w, c)
        }));
        if !x.is_zero() {
            return x;
        }
    }
}

fn faithfulness(p: &Params, sweep: &mut Sweep) {
    let mut rng = rng_for(Suite::Faithfulness, p.seed);
    let words = enumerate_fcs(-p.window, p.window, MAX_FCS_LEN);
    for w in &words {
        let min = min_witness_p(w);
        for extra in 0..2 {
            let ctx = || json!({"law": "witness", "word": w, "p": min + extra});
            let Some(lambda) = sweep.ok(witness_partition(w, min + extra), ctx) else {
                continue;
            };
            if let Some(part) = sweep.ok(minimal_part(w, &lambda), ctx) {
                sweep.check(
                    part.is_some(),
                    || json!({"law": "witness", "word": w, "partition": lambda}),
                );
            }
        }
    }
    for lambda in enumerate_partitions(p.max_size) {
        let mut owners: HashMap<(usize, Partition), &FcsWord> = HashMap::new();
        for w in words.iter().filter(|w| w.len() <= lambda.size()) {
            let ctx = || json!({"law": "minimal-part", "word": w, "partition": lambda});
            if let Some(Some(part)) = sweep.ok(minimal_part(w, &lambda), ctx) {
                sweep.checked += 1;
                if let Some(other) = owners.insert((w.len(), part.clone()), w) {
                    sweep.fail(
                        json!({"law": "shared-minimal-part", "partition": lambda, "word": w,
                                      "other": other, "part": part}),
                    );
                }
            }
        }
    }
    for _ in 0..RANDOM_ELEMENTS {
        let x = random_element(&mut rng, &words);
        match faithfulness_witness(&x) {
            Ok(Some((lambda, image))) => {
                let direct = x.act(&lambda, Rep::XiPrime);
                sweep.check(
                    !image.is_zero() && image == direct,
                    || json!({"law": "faithfulness", "element": x, "partition": lambda}),
                );
            }
            Ok(None) => {
                sweep.fail(json!({"law": "faithfulness", "element": x, "error": "no witness"}))
            }
            Err(e) => {
                sweep.fail(json!({"law": "faithfulness", "element": x, "error": e.to_string()}))
            }
        }
    }
}
