//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line and
//! then asserts. Run with `cargo test -p deltanu --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use deltanu::{
    compute_bounds, delta_nu_naive, delta_of_element, factorizations, genus_tree_scan,
    is_generalized_arithmetic, lcm_period, length_set, minimal_period_report,
    verify_shift_invariance, w_set, Evaluator, Factorization, NumericalSemigroup, ScanFilter,
    SortedIntSet,
};

const CARDINALITY_LIMIT: Duration = Duration::from_secs(1);
const GOLDEN_LIMIT: Duration = Duration::from_secs(30);
const NAIVE_VALUE_CAP: u64 = 100_000;
const SCAN_GENUS: u64 = 10;

const ORACLE_SET: [&[u64]; 7] = [
    &[3, 10, 11],
    &[3, 10, 14],
    &[5, 12, 16],
    &[4, 7, 9],
    &[6, 8, 9, 11],
    &[10, 13, 15],
    &[4, 9, 10, 15],
];

fn sg(g: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::new(g).unwrap()
}

fn set(v: &[u64]) -> SortedIntSet {
    v.iter().copied().collect()
}

fn verdict(id: u32, failures: &[String], detail: &str) {
    if failures.is_empty() {
        println!("criterion {id}: PASS  {detail}");
    } else {
        println!(
            "criterion {id}: FAIL  {detail}; failed: {}",
            failures.join("; ")
        );
    }
    assert!(
        failures.is_empty(),
        "criterion {id}: {}",
        failures.join("; ")
    );
}

fn expect<T: PartialEq + std::fmt::Debug>(fails: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        fails.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

#[test]
fn criterion_1_w_set_cardinalities() {
    let mut fails = Vec::new();
    let mut detail = Vec::new();
    for (g, n, want) in [
        (&[5u64, 9, 11][..], 41u64, 123usize),
        (&[11, 13, 19], 50, 255),
    ] {
        let s = sg(g);
        let t = Instant::now();
        let got = w_set(&s, n).len();
        let took = t.elapsed();
        detail.push(format!("|W({n})| in {s} = {got} ({took:?})"));
        expect(&mut fails, &format!("|W({n})| in {s}"), got, want);
        if took >= CARDINALITY_LIMIT {
            fails.push(format!("|W({n})| in {s} took {took:?}"));
        }
    }
    verdict(1, &fails, &detail.join(", "));
}

#[test]
fn criterion_2_bounds_4_9_10_15() {
    let s = sg(&[4, 9, 10, 15]);
    let b = compute_bounds(&s).unwrap();
    let ev = Evaluator::with_bounds(&s, b.clone());
    let mut fails = Vec::new();
    expect(&mut fails, "NS", b.ns, 294);
    expect(&mut fails, "S'_2", b.s_upper[0].ceil(), 294);
    expect(&mut fails, "ceil lambda1", b.low_width(), 203);
    expect(&mut fails, "floor lambda2", b.high_width(), 759);
    let z130 = ev.decompose(130).unwrap();
    expect(&mut fails, "x1(130)", z130.x1, 723);
    expect(&mut fails, "x2(130)", z130.x2, 1191);
    expect(&mut fails, "x2-x1 (130)", z130.x2 - z130.x1, 468);
    let z150 = ev.decompose(150).unwrap();
    expect(&mut fails, "x2-x1 (150)", z150.x2 - z150.x1, 688);
    let detail = format!(
        "NS={} ceil(l1)={} floor(l2)={} x1(130)={} x2(130)={} gap(150)={}; N0 by formula {} (published figure 73)",
        b.ns,
        b.low_width(),
        b.high_width(),
        z130.x1,
        z130.x2,
        z150.x2 - z150.x1,
        b.n0
    );
    verdict(2, &fails, &detail);
}

#[test]
fn criterion_3_bounds_three_generators() {
    let mut fails = Vec::new();
    let mut detail = Vec::new();
    for (g, n0, delta) in [(&[3u64, 10, 11][..], 82u64, 33u64), (&[3, 10, 14], 60, 42)] {
        let s = sg(g);
        let b = compute_bounds(&s).unwrap();
        detail.push(format!("{s}: N0={} delta={}", b.n0, lcm_period(&s)));
        expect(&mut fails, &format!("N0 {s}"), b.n0, n0);
        expect(&mut fails, &format!("delta {s}"), lcm_period(&s), delta);
    }
    verdict(3, &fails, &detail.join(", "));
}

#[test]
fn criterion_4_golden_tables() {
    let started = Instant::now();
    let mut fails = Vec::new();

    let s = sg(&[3, 10, 11]);
    let ev = Evaluator::with_naive_capacity(&s, 200);
    let dnu = |n| ev.evaluate(n).unwrap().delta_nu;
    expect(&mut fails, "<3,10,11> n=1", dnu(1), set(&[]));
    for n in [2, 3, 4, 7] {
        expect(
            &mut fails,
            &format!("<3,10,11> n={n}"),
            dnu(n),
            set(&[1, 2]),
        );
    }
    for n in [5, 6].into_iter().chain(8..=200) {
        expect(&mut fails, &format!("<3,10,11> n={n}"), dnu(n), set(&[1]));
    }

    let s = sg(&[3, 10, 14]);
    let ev = Evaluator::with_naive_capacity(&s, 200);
    let dnu = |n| ev.evaluate(n).unwrap().delta_nu;
    let first: [&[u64]; 10] = [
        &[],
        &[1, 4],
        &[1, 3, 4],
        &[1, 3],
        &[1, 3],
        &[1, 4],
        &[1, 2],
        &[1, 3],
        &[1, 4],
        &[1, 2],
    ];
    for (i, want) in first.iter().enumerate() {
        let n = i as u64 + 1;
        expect(&mut fails, &format!("<3,10,14> n={n}"), dnu(n), set(want));
    }
    let low_rule: [&[u64]; 3] = [&[1, 4], &[1, 2], &[1, 3]];
    for n in 5..=59 {
        expect(
            &mut fails,
            &format!("<3,10,14> n={n}"),
            dnu(n),
            set(low_rule[(n % 3) as usize]),
        );
    }
    let high_rule: [&[u64]; 3] = [&[1, 2], &[1, 3], &[1, 4]];
    let mut high_misses = 0;
    for n in 60..=200 {
        if dnu(n) != set(high_rule[(n % 3) as usize]) {
            high_misses += 1;
        }
    }
    if high_misses > 0 {
        fails.push(format!(
            "<3,10,14> n>=60 rule {{1,2}}/{{1,3}}/{{1,4}}: {high_misses} of 141 values differ \
             (computed: {:?}/{:?}/{:?} for n = 60/61/62)",
            dnu(60).as_slice(),
            dnu(61).as_slice(),
            dnu(62).as_slice()
        ));
    }

    let took = started.elapsed();
    if took >= GOLDEN_LIMIT {
        fails.push(format!("took {took:?}"));
    }
    verdict(
        4,
        &fails,
        &format!("<3,10,11> n<=200, <3,10,14> n<=200 in {took:?}"),
    );
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut fails = Vec::new();
    let mut checked = 0u64;
    for g in ORACLE_SET {
        let s = sg(g);
        let b = compute_bounds(&s).unwrap();
        let upper = (b.n0 + 2 * lcm_period(&s)).min(NAIVE_VALUE_CAP / s.largest());
        let ev = Evaluator::with_bounds(&s, b.clone());
        for n in 0..=upper {
            let fast = if n >= b.n0 {
                ev.fast(n)
            } else {
                ev.evaluate(n)
            }
            .unwrap()
            .delta_nu;
            let naive = delta_nu_naive(&s, n);
            checked += 1;
            if fast != naive {
                fails.push(format!("{s} n={n}: fast {fast} naive {naive}"));
            }
        }
    }
    verdict(
        5,
        &fails,
        &format!(
            "{checked} values over 7 semigroups, {} mismatches",
            fails.len()
        ),
    );
}

#[test]
fn criterion_6_periodicity() {
    let mut fails = Vec::new();
    for g in ORACLE_SET {
        let s = sg(g);
        let b = compute_bounds(&s).unwrap();
        if !verify_shift_invariance(&s, &b, 2).unwrap() {
            fails.push(format!("shift invariance fails for {s}"));
        }
    }

    let s = sg(&[3, 10, 11]);
    let n_max = compute_bounds(&s).unwrap().n0 + 3 * lcm_period(&s);
    let r = minimal_period_report(&s, n_max).unwrap();
    expect(&mut fails, "<3,10,11> minimal period", r.minimal_period, 1);

    let s = sg(&[3, 10, 14]);
    let n_max = compute_bounds(&s).unwrap().n0 + 3 * lcm_period(&s);
    let r = minimal_period_report(&s, n_max).unwrap();
    expect(&mut fails, "<3,10,14> minimal period", r.minimal_period, 3);
    let rule = |v: [&[u64]; 3]| -> BTreeMap<u64, SortedIntSet> {
        (0..3).map(|k| (k, set(v[k as usize]))).collect()
    };
    let low = rule([&[1, 4], &[1, 2], &[1, 3]]);
    let high = rule([&[1, 2], &[1, 3], &[1, 4]]);
    let predicted = |range: std::ops::RangeInclusive<u64>, table: &BTreeMap<u64, SortedIntSet>| {
        range
            .into_iter()
            .all(|n| r.predict(n) == Some(&table[&(n % 3)]))
    };
    if !predicted(5..=59, &low) {
        fails.push("<3,10,14> residue table on [5,59]".into());
    }
    if !predicted(60..=n_max, &high) {
        fails.push(format!(
            "<3,10,14> residue table for n>=60 is {{1,2}}/{{1,3}}/{{1,4}} as stated; computed {:?} from preperiod {}",
            r.residue_table, r.minimal_preperiod
        ));
    }
    verdict(
        6,
        &fails,
        "shift invariance (2 cycles) on 7 semigroups, periods of <3,10,11> and <3,10,14>",
    );
}

#[test]
fn criterion_7_work_bound() {
    let mut fails = Vec::new();
    let s = sg(&[3, 10, 14]);
    let b = compute_bounds(&s).unwrap();
    let ev = Evaluator::with_bounds(&s, b.clone());
    let counts: Vec<u64> = [b.n0, b.n0 + 50, b.n0 + 500]
        .iter()
        .map(|&n| ev.fast(n).unwrap().evaluated_elements)
        .collect();
    let full = w_set(&s, b.n0 + 500).len() as u64;
    if counts.iter().any(|&c| c != counts[0]) {
        fails.push(format!("counts differ: {counts:?}"));
    }
    if counts[2] >= full {
        fails.push(format!("{} not below |W(N0+500)| = {full}", counts[2]));
    }

    let mut published = Vec::new();
    for (g, n) in [(&[5u64, 9, 11][..], 50u64), (&[11, 13, 19], 50)] {
        let t = sg(g);
        let tb = compute_bounds(&t).unwrap();
        let n = n.max(tb.n0);
        let c = Evaluator::with_bounds(&t, tb)
            .fast(n)
            .unwrap()
            .evaluated_elements;
        published.push(format!("{t} n={n}: {c} (published figure 111)"));
    }
    verdict(
        7,
        &fails,
        &format!(
            "<3,10,14> counts {counts:?} vs |W(N0+500)|={full}; {}",
            published.join(", ")
        ),
    );
}

// Independent enumeration: every x with sum x_i a_i = s, by recursion on the
// last coordinate.
fn enumerate(g: &[u64], s: u64) -> Vec<Vec<u64>> {
    if g.len() == 1 {
        return if s.is_multiple_of(g[0]) {
            vec![vec![s / g[0]]]
        } else {
            vec![]
        };
    }
    let (last, rest) = g.split_last().unwrap();
    let mut out = Vec::new();
    for k in 0..=s / last {
        for mut x in enumerate(rest, s - k * last) {
            x.push(k);
            out.push(x);
        }
    }
    out
}

#[test]
fn criterion_8_micro_oracles() {
    let mut fails = Vec::new();
    let s = sg(&[5, 9, 11]);
    let mut got: Vec<Factorization> = factorizations(&s, 45);
    got.sort_by(|a, b| a.coordinates().cmp(b.coordinates()));
    let mut want: Vec<Factorization> = [[9, 0, 0], [0, 5, 0], [5, 1, 1], [1, 2, 2]]
        .iter()
        .map(|x| Factorization::new(x.to_vec()))
        .collect();
    want.sort_by(|a, b| a.coordinates().cmp(b.coordinates()));
    expect(&mut fails, "Z(45)", &got, &want);
    expect(&mut fails, "Delta(45)", delta_of_element(&s, 45), set(&[2]));

    let mut compared = 0;
    for g in ORACLE_SET {
        let s = sg(g);
        for v in 0..=300 {
            let lengths: SortedIntSet = enumerate(s.generators(), v)
                .iter()
                .map(|x| x.iter().sum())
                .collect();
            compared += 1;
            if length_set(&s, v).lengths != lengths {
                fails.push(format!("{s} s={v}"));
            }
        }
    }
    verdict(
        8,
        &fails,
        &format!("Z(45) in <5,9,11>, Delta(45)={{2}}, {compared} length sets"),
    );
}

#[test]
fn criterion_9_scan_determinism() {
    let mut fails = Vec::new();
    let filter = ScanFilter::new(SCAN_GENUS);
    let sorted = |mut v: Vec<deltanu::ScanRecord>| {
        v.sort_by(|a, b| (a.genus, &a.generators).cmp(&(b.genus, &b.generators)));
        v
    };
    let one = genus_tree_scan(&filter, 1, None);
    let eight = genus_tree_scan(&filter, 8, None);
    let (one, eight) = (sorted(one), sorted(eight));
    if one != eight {
        fails.push("jobs 1 and jobs 8 disagree".into());
    }
    if one.iter().any(|r| r.generators == [5, 7, 9]) {
        fails.push("<5,7,9> present".into());
    }
    if one
        .iter()
        .any(|r| is_generalized_arithmetic(&sg(&r.generators)))
    {
        fails.push("arithmetic sequence present".into());
    }
    if one.iter().any(|r| r.truncated || r.error.is_some()) {
        fails.push("incomplete records".into());
    }
    verdict(
        9,
        &fails,
        &format!("{} records up to genus {SCAN_GENUS}", one.len()),
    );
}
