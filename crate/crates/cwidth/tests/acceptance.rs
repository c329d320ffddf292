//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cwidth::scan;
use cwidth_core::amalgam::AmalgamSpec;
use cwidth_core::gog::Verdict;
use cwidth_core::hnn::{t_length_lower_bound, HnnLetter, HnnWord};
use cwidth_core::quasimorphism::{segment_stats, SegmentQuasimorphism};
use cwidth_core::sampling;
use cwidth_core::width::{bfs_lengths, check_quotient_inequality, width};
use cwidth_core::witness::WitnessConfig;
use cwidth_core::{fixtures, Element, FiniteGroup};
use rand::Rng;

const SEED: u64 = 0x5eed;

/// Name, time budget, check.
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn qm(spec: &AmalgamSpec) -> SegmentQuasimorphism<'_> {
    SegmentQuasimorphism::new(spec, fixtures::f21_z6_a(spec)).unwrap()
}

fn witness(spec: &AmalgamSpec, max_n: usize) -> WitnessConfig<'_> {
    WitnessConfig::new(
        spec,
        fixtures::f21_z6_a(spec),
        fixtures::f21_z6_b(spec),
        max_n,
    )
    .unwrap()
}

fn timed(budget: Option<Duration>, body: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    out.detail = format!("{} [{:.2?}]", out.detail, elapsed);
    if let Some(b) = budget {
        if elapsed > b {
            out.ok = false;
            out.detail = format!("{} exceeds {:?}", out.detail, b);
        }
    }
    out
}

fn witness_values() -> Outcome {
    let spec = fixtures::f21_z6();
    let cfg = witness(&spec, 3);
    let f: Vec<usize> = cfg.run_experiment().iter().map(|r| r.f).collect();
    check(f == [1, 2, 4], format!("f(g1), f(g2), f(g3) = {f:?}"))
}

/// f of `g_n` straight from the letter sequence: in the witness every `a`
/// letter is a literal `a^{+-1}`, so marks are read off directly.
fn gap_scan_oracle(cfg: &WitnessConfig<'_>, n: usize) -> usize {
    let spec = cfg.quasimorphism().spec();
    let a = cfg.quasimorphism().a();
    let a_inv = spec.syllable_inverse(a);
    let letters = cfg.witness_letters(n);
    let mut diff = std::collections::BTreeMap::<usize, i64>::new();
    for (target, sign) in [(a, 1), (a_inv, -1)] {
        let pos: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == target)
            .map(|(i, _)| i)
            .collect();
        for pair in pos.windows(2) {
            let k = (pair[1] - pair[0]) / 2;
            *diff.entry(k).or_default() += sign;
        }
    }
    diff.values().map(|d| (d.unsigned_abs() % 2) as usize).sum()
}

fn witness_growth() -> Outcome {
    let spec = fixtures::f21_z6();
    let cfg = witness(&spec, 40);
    let rows = cfg.run_experiment();
    let mut bad = Vec::new();
    for r in &rows {
        let oracle = gap_scan_oracle(&cfg, r.n);
        if r.f + 1 < r.n || r.f != oracle || r.syllable_length != r.n * r.n + 3 * r.n + 2 {
            bad.push((r.n, r.f, oracle));
        }
    }
    let last = rows.last().unwrap();
    check(
        bad.is_empty(),
        format!(
            "n <= 40, f(g_40) = {}, lower bound {}, failures {bad:?}",
            last.f, last.lower_bound
        ),
    )
}

fn conjugate_bound() -> Outcome {
    let spec = fixtures::f21_z6();
    let q = qm(&spec);
    let s = scan::conjugate_scan_exhaustive(&q, 4);
    check(
        s.violations.is_empty(),
        format!(
            "{} pairs (k, g) with |g| <= 4, max f = {}, violations {}",
            s.checked,
            s.max_f,
            s.violations.len()
        ),
    )
}

fn product_bound() -> Outcome {
    let spec = fixtures::f21_z6();
    let q = qm(&spec);
    let s = scan::product_scan(&q, SEED, 10_000, 6, 6);
    check(
        s.violations.is_empty(),
        format!(
            "{} products, max f by k = {:?}, violations {}",
            s.checked,
            s.max_f_by_k,
            s.violations.len()
        ),
    )
}

fn defect_direction() -> Outcome {
    let spec = fixtures::f21_z6();
    let q = qm(&spec);
    let s = scan::defect_scan(&q, SEED, 10_000, 20);
    let bad = s.violations().count();
    check(
        bad == 0,
        format!(
            "10000 pairs, min defect {}, max defect {}, violations {bad}",
            s.min_defect, s.max_defect
        ),
    )
}

fn well_definedness() -> Outcome {
    let spec = fixtures::f21_z6();
    let q = qm(&spec);
    let mut r = scan::rng(SEED);
    let mut mismatches = 0;
    let mut respelled = 0;
    for _ in 0..1000 {
        let w = sampling::random_word_up_to(&spec, &mut r, 20);
        let f = q.f(&w);
        for _ in 0..5 {
            let pinches = r.gen_range(1..=4);
            let v = sampling::respell(&spec, &mut r, &w, pinches);
            respelled += usize::from(v != w);
            let alt = segment_stats(&q.special_form_with(&v, |opts| r.gen_range(0..opts.len())));
            if alt.f() != f || q.f(&v) != f {
                mismatches += 1;
            }
        }
    }
    check(
        mismatches == 0,
        format!("5000 respellings ({respelled} changed the spelling), mismatches {mismatches}"),
    )
}

fn antisymmetry() -> Outcome {
    let spec = fixtures::f21_z6();
    let q = qm(&spec);
    let mut r = scan::rng(SEED);
    let mut bad = 0;
    for _ in 0..1000 {
        let w = sampling::random_word_up_to(&spec, &mut r, 20);
        let s = q.stats(&w);
        let si = q.stats(&spec.invert(&w));
        if s.keys().union(&si.keys()).any(|&k| s.d(k) + si.d(k) != 0) {
            bad += 1;
        }
    }
    check(bad == 0, format!("1000 words, failures {bad}"))
}

fn normal_form_soundness() -> Outcome {
    let spec = fixtures::f21_z6();
    let mut r = scan::rng(SEED);
    let mut bad = 0;
    for _ in 0..1000 {
        let w = sampling::random_word_up_to(&spec, &mut r, 20);
        let v = sampling::respell(&spec, &mut r, &w, 3);
        if v.syllable_length() != w.syllable_length()
            || spec.normal_form(&v) != spec.normal_form(&w)
        {
            bad += 1;
        }
    }
    check(bad == 0, format!("1000 words, mismatches {bad}"))
}

fn britton_and_z() -> Outcome {
    let spec = fixtures::z6_hnn();
    let base = spec.base();
    let mut problems = Vec::new();
    for &a in spec.a_sub().members() {
        let w = spec.word(&[HnnLetter::T(-1), HnnLetter::Base(a), HnnLetter::T(1)]);
        let red = spec.britton_reduce(&w);
        if red.stable_length() != 0 || red.segments() != [spec.phi().apply(a).unwrap()] {
            problems.push(format!("t^-1 {} t", base.element_name(a)));
        }
    }
    let mut r = scan::rng(SEED);
    for i in 0..1000 {
        let (lu, lv) = (r.gen_range(0..=20), r.gen_range(0..=20));
        let u = sampling::random_hnn_word(&spec, &mut r, lu);
        let v = sampling::random_hnn_word(&spec, &mut r, lv);
        if u.concat(base, &v).t_exponent() != u.t_exponent() + v.t_exponent() {
            problems.push(format!("additivity pair {i}"));
        }
    }
    for n in 0..=100u64 {
        let w = HnnWord::stable_power(base, n as i64);
        if t_length_lower_bound(&w, 1) != Ok(n) {
            problems.push(format!("t^{n}"));
        }
    }
    check(
        problems.is_empty(),
        format!(
            "|A| = {}, 1000 pairs, n <= 100, problems {problems:?}",
            spec.a_sub().order()
        ),
    )
}

fn double_cosets() -> Outcome {
    let f21 = fixtures::f21();
    let h = f21.subgroup_by_names(&["e", "y", "y2"]).unwrap();
    let x = f21.parse_element("x").unwrap();
    let d = f21.double_coset(&h, x);
    let di = f21.double_coset(&h, f21.inv(x));
    let s3 = fixtures::s3();
    let k = s3.subgroup_by_names(&["e", "(12)"]).unwrap();
    let c = s3.parse_element("(123)").unwrap();
    let same = s3.double_coset(&k, c) == s3.double_coset(&k, s3.inv(c));
    check(
        d.len() == 9 && di.len() == 9 && d.is_disjoint(&di) && same,
        format!(
            "F21: |HxH| = {}, |Hx^-1H| = {}, disjoint {}; S3: equal {same}",
            d.len(),
            di.len(),
            d.is_disjoint(&di)
        ),
    )
}

fn quotient_lift() -> Outcome {
    let z4 = fixtures::z4();
    let n = z4.subgroup_by_names(&["0", "2"]).unwrap();
    let one = z4.parse_element("1").unwrap();
    let a = check_quotient_inequality(&z4, &n, &[one]).unwrap();
    let s3 = fixtures::s3();
    let a3 = s3.subgroup_by_names(&["e", "(123)", "(132)"]).unwrap();
    let t = s3.parse_element("(12)").unwrap();
    let b = check_quotient_inequality(&s3, &a3, &[t]).unwrap();
    check(
        a.holds() && b.holds(),
        format!("Z4/{{0,2}}: {}, S3/A3: {}", a.holds(), b.holds()),
    )
}

fn nonidentity(g: &FiniteGroup) -> Vec<Element> {
    g.elements().filter(|&x| x != g.identity()).collect()
}

fn width_bfs() -> Outcome {
    let s3 = fixtures::s3();
    let t: Vec<Element> = s3
        .conjugacy_closure(&[s3.parse_element("(12)").unwrap()])
        .into_iter()
        .collect();
    let w = width(&s3, &t).unwrap();
    // oracle: (123) is not a transposition but is a product of two
    let transpositions: BTreeSet<Element> = t.iter().copied().collect();
    let oracle = s3.elements().all(|x| {
        let l = bfs_lengths(&s3, &t).length(x).unwrap();
        let expected = if x == s3.identity() {
            0
        } else if transpositions.contains(&x) {
            1
        } else {
            2
        };
        l == expected
    });
    let mut all_one = Vec::new();
    for g in fixtures::all_groups() {
        all_one.push((g.name().to_string(), width(&g, &nonidentity(&g)).unwrap()));
    }
    let ok = w == 2 && oracle && all_one.iter().all(|(_, w)| *w == 1);
    check(
        ok,
        format!("width(S3, transpositions) = {w}, width(G, G\\e) = {all_one:?}"),
    )
}

fn classifier() -> Outcome {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut got = Vec::new();
    for f in ["gog_s3_loop.json", "gog_f21_z6.json", "gog_z4_z4.json"] {
        let g = cwidth::formats::load_graph(&root.join(f)).unwrap();
        got.push(g.classify());
    }
    let labels: Vec<&str> = got.iter().map(Verdict::label).collect();
    check(
        labels == ["infinite", "infinite", "finite"],
        format!("{labels:?}"),
    )
}

fn main() -> ExitCode {
    let secs = |n| Some(Duration::from_secs(n));
    let criteria: [Criterion; 13] = [
        ("witness values f = 1, 2, 4", secs(1), witness_values),
        ("witness growth f(g_n) >= n - 1", secs(10), witness_growth),
        ("conjugate bound f(s) <= 3", secs(60), conjugate_bound),
        ("product bound f <= 12k - 9", None, product_bound),
        (
            "defect direction f(gh) <= f(g) + f(h) + 9",
            None,
            defect_direction,
        ),
        ("f well defined on special forms", None, well_definedness),
        ("inversion antisymmetry of d_k", None, antisymmetry),
        ("normal form pinch invariance", None, normal_form_soundness),
        ("Britton reduction and Z quotient", None, britton_and_z),
        ("double cosets", None, double_cosets),
        ("quotient lift inequality", None, quotient_lift),
        ("width by BFS", None, width_bfs),
        ("graph-of-groups classifier", None, classifier),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let out = timed(budget, run);
        failed += usize::from(!out.ok);
        println!(
            "{:>2} {} {name}: {}",
            i + 1,
            if out.ok { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
