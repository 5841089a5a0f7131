//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use itertools::Itertools;
use pathlab_core::applications::conjectures::{check_bottom_left_sum, check_pair_equidistribution};
use pathlab_core::applications::permutations::{perm_stats, Permutation};
use pathlab_core::enumerate::{all_regions, enumerate_paths, enumerate_tuples, lgv_count, PathFilter};
use pathlab_core::matroid::{tutte_poly, LatticePathMatroid, LinearOrder};
use pathlab_core::poly::distribution;
use pathlab_core::tableau::{expected_weight, psi, psi_inv};
use pathlab_core::triangulation::{
    catalan_det, degree_sequence, enumerate_k_triangulations, fan_region, predicted_degrees, Triangulation,
};
use pathlab_core::verify::{self, SuiteOutcome};
use pathlab_core::{MultiPoly, Path, PathTuple, Region, Tableau};

type ClassDistribution = BTreeMap<(Vec<usize>, Vec<u32>), BTreeMap<(u32, u32), u64>>;
type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn suites(outcomes: &[SuiteOutcome]) -> Outcome {
    let ok = outcomes.iter().all(SuiteOutcome::passed);
    let detail = outcomes
        .iter()
        .map(|o| {
            let mut s = format!("{}<={}: {} checked, {} failures", o.suite, o.bound, o.checked, o.failure_count);
            if let Some(f) = o.failures.first() {
                s.push_str(&format!(" (first: {f})"));
            }
            s
        })
        .join("; ");
    check(ok, detail)
}

fn region(t: &str, b: &str) -> Region {
    Region::new(&Path::parse(t).unwrap(), &Path::parse(b).unwrap()).unwrap()
}

fn poly(terms: &[(u32, u32, i64)]) -> MultiPoly {
    let mut p = MultiPoly::zero(["x", "y"]);
    for &(a, b, c) in terms {
        p.add_term(vec![a, b], c).unwrap();
    }
    p
}

fn contact_poly(r: &Region, f: impl Fn(u32, u32, u32, u32) -> [u32; 2]) -> MultiPoly {
    let filter = PathFilter::monotone();
    distribution(enumerate_paths(r, &filter), ["x", "y"], |p: &Path| {
        let s = r.contact_stats(p).unwrap();
        f(s.t, s.b, s.l, s.r).to_vec()
    })
    .unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = region("NNENEE", "ENEENN");
    let tb = contact_poly(&r, |t, b, _, _| [t, b]);
    let bl = contact_poly(&r, |_, b, l, _| [b, l]);
    let elapsed = start.elapsed();
    // x^3+x^2y+xy^2+y^3+2x^2+2xy+2y^2+2x+2y+1
    let tb_expected = poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (2, 0, 2), (1, 1, 2), (0, 2, 2), (1, 0, 2), (0, 1, 2), (0, 0, 1)]);
    // x^3+x^2y+y^3+2x^2+3xy+3y^2+2x+2y
    let bl_expected = poly(&[(3, 0, 1), (2, 1, 1), (0, 3, 1), (2, 0, 2), (1, 1, 3), (0, 2, 3), (1, 0, 2), (0, 1, 2)]);
    check(
        tb == tb_expected && bl == bl_expected && elapsed < Duration::from_secs(1),
        format!("(t,b) = {tb}; (b,l) = {bl}; {elapsed:.2?}"),
    )
}

/// The involution exchanges `(t, b)` class by class; independently, the
/// `(t, b)` distribution of every (descent set, noncontact heights) class is
/// symmetric.
fn criterion_2() -> Outcome {
    let start = Instant::now();
    let sweep = verify::check_swap_involution(8);
    let mut asymmetric = Vec::new();
    let mut classes = 0;
    for r in all_regions(8) {
        let mut dist = ClassDistribution::new();
        for p in enumerate_paths(&r, &PathFilter::with_south()) {
            let s = r.contact_stats(&p).unwrap();
            let key = (p.descent_set(), r.noncontact_heights(&p).unwrap());
            *dist.entry(key).or_default().entry((s.t, s.b)).or_default() += 1;
        }
        classes += dist.len();
        for (key, d) in &dist {
            if d.iter().any(|(&(t, b), &c)| d.get(&(b, t)) != Some(&c)) {
                asymmetric.push(format!("{r} {key:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let mut out = suites(std::slice::from_ref(&sweep));
    out.ok &= asymmetric.is_empty() && elapsed < Duration::from_secs(300);
    out.detail = format!("{}; {classes} classes, {} asymmetric; {elapsed:.2?}", out.detail, asymmetric.len());
    out
}

fn criterion_3() -> Outcome {
    suites(&[verify::check_switch(14)])
}

fn criterion_4() -> Outcome {
    let mut out = suites(&[verify::check_tutte_orders(6)]);
    // the example region, both orders, against the contact polynomials
    let r = region("NNENEE", "ENEENN");
    let lpm = LatticePathMatroid::new(r.clone());
    let natural = tutte_poly(&lpm, &LinearOrder::natural(6)).unwrap();
    let reversed = tutte_poly(&lpm, &LinearOrder::reversed(6)).unwrap();
    let lb = contact_poly(&r, |_, b, l, _| [l, b]);
    let rt = contact_poly(&r, |t, _, _, r| [r, t]);
    let bl = contact_poly(&r, |_, b, l, _| [b, l]);
    let swapped = natural.permuted(&[1, 0]).unwrap();
    out.ok &= natural == lb && reversed == rt && natural == reversed && swapped == bl;
    out.detail = format!("{}; example: natural order gives sum x^l y^b = {natural}", out.detail);
    out
}

fn criterion_5() -> Outcome {
    suites(&[verify::check_order_change(6, 5)])
}

fn criterion_6() -> Outcome {
    let mut out = suites(&[verify::check_psi(4, 3)]);
    let p = |s: &str| Path::parse(s).unwrap();
    let t = PathTuple::new(
        region("NNNNNEEEEEE", "ENEENNENEEN"),
        vec![p("NNENENNEEEE"), p("ENNNENEENEE"), p("ENENENNEENE")],
    )
    .unwrap();
    let s = psi(&t).unwrap();
    let expected = Tableau::parse("112234/2334/456/567/8", 3).unwrap();
    let weight = s.weight(8);
    let ok = s == expected
        && weight == [2, 3, 3, 3, 2, 2, 1, 1]
        && expected_weight(&t) == weight
        && psi_inv(&s, t.region()).ok().as_ref() == Some(&t);
    out.ok &= ok;
    out.detail = format!("{}; example image {} weight {weight:?}", out.detail, s.rows().iter().map(|r| r.iter().join("")).join("/"));
    out
}

/// Catalan numbers by their recurrence and determinants by cofactor
/// expansion, independent of the library's arithmetic.
fn catalan_oracle(n: i64) -> i128 {
    if n < 0 {
        return 0;
    }
    let mut c = vec![1i128];
    for m in 1..=n as usize {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[n as usize]
}

fn det_oracle(m: &[Vec<i128>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_oracle(&minor)
        })
        .sum()
}

fn criterion_7() -> Outcome {
    let mut pairs: Vec<(u32, u32)> = (1..=2).flat_map(|k| (2 * k + 1..=9).map(move |n| (n, k))).collect();
    pairs.push((8, 3));
    let mut bad = Vec::new();
    for &(n, k) in &pairs {
        let m: Vec<Vec<i128>> = (1..=k as i64)
            .map(|i| (1..=k as i64).map(|j| catalan_oracle(n as i64 - i - j)).collect())
            .collect();
        let oracle = det_oracle(&m);
        let fan = fan_region(n, k).unwrap();
        let fans = enumerate_tuples(&fan, k as usize).len() as i128;
        let lgv = lgv_count(&fan, k as usize).unwrap();
        let tris = enumerate_k_triangulations(n, k).len() as i128;
        if [catalan_det(n, k), fans, lgv, tris].iter().any(|&v| v != oracle) {
            bad.push(format!("(n,k)=({n},{k})"));
        }
    }
    let six_two = catalan_det(6, 2);
    check(
        bad.is_empty() && six_two == 3,
        format!("{} (n,k) pairs, det = fans = lgv = triangulations; det(6,2) = {six_two}; mismatches {bad:?}", pairs.len()),
    )
}

fn criterion_8() -> Outcome {
    let mut pairs: Vec<(u32, u32)> = (5..=9).map(|n| (n, 1)).collect();
    pairs.extend([(7, 2), (8, 2)]);
    let mut bad = Vec::new();
    for &(n, k) in &pairs {
        let rep = pathlab_core::triangulation::degree_distribution_check(n, k).unwrap();
        if !rep.holds() {
            bad.push(format!("{rep:?}"));
        }
    }
    // the octagon example: (d1..d5) = (1,2,2,0,1), (h0,h1,h2) = (1,2,2); the
    // degree formula and the drawn fan give (u1,u2) = (2,0)
    let tri = Triangulation::parse(8, 2, "1-6 2-5 2-6 3-6 3-8 5-8").unwrap();
    let p = |s: &str| Path::parse(s).unwrap();
    let fan = PathTuple::new(fan_region(8, 2).unwrap(), vec![p("NEENNE"), p("NEENEN")]).unwrap();
    let d = degree_sequence(&tri);
    let example = d == [1, 2, 2, 0, 1]
        && fan.h_stats() == [1, 2, 2]
        && fan.u_stats() == [2, 0]
        && predicted_degrees(&fan, 8) == d
        && psi(&fan).ok() == Tableau::parse("112/34/4", 2).ok();
    check(
        bad.is_empty() && example,
        format!(
            "{} (n,k) pairs, windows k and k+1, full sequences and symmetry; example d={d:?} h={:?} u={:?}; failures {bad:?}",
            pairs.len(),
            fan.h_stats(),
            fan.u_stats()
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut out = suites(&[
        verify::check_permutations(7),
        verify::check_families(7),
        verify::check_watermelons(8, 2),
    ]);
    let pi = Permutation::parse("35681742").unwrap();
    let st = perm_stats(&pi);
    let example = st.pattern_positions == [1, 3, 5] && st.rl_min == 2 && st.rl_max == 4;

    let start = Instant::now();
    let small = (1..=4).all(|n| check_pair_equidistribution(n).holds() && check_bottom_left_sum(n).holds());
    let t4 = start.elapsed();
    let five = check_pair_equidistribution(5);
    let five_sum = check_bottom_left_sum(5);
    let t5 = start.elapsed();
    out.ok &= example
        && small
        && five.holds()
        && five_sum.holds()
        && t4 < Duration::from_secs(60)
        && t5 < Duration::from_secs(900);
    out.detail = format!(
        "{}; 35681742: 13-2 {:?}, rl_min {}, rl_max {}; conjectures n<=4 in {t4:.2?}, n<=5 in {t5:.2?} ({} squares at n=5)",
        out.detail, st.pattern_positions, st.rl_min, st.rl_max, five.regions
    );
    out
}

fn criterion_10() -> Outcome {
    let r = region("NNEE", "ENEN");
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for t in enumerate_tuples(&r, 2) {
        *counts.entry(t.h_stats()).or_default() += 1;
    }
    let a = counts.get(&vec![0, 1, 2]).copied().unwrap_or(0);
    let b = counts.get(&vec![1, 1, 1]).copied().unwrap_or(0);
    check(a == 1 && b == 2, format!("(0,1,2): {a}, (1,1,1): {b}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("example polynomials of (t,b) and (b,l)", criterion_1),
        ("top/bottom involution by descent and height class, x+y<=8", criterion_2),
        ("switch on words of length <=14", criterion_3),
        ("Tutte polynomial order independence, x+y<=6", criterion_4),
        ("order-change bijection on matroids", criterion_5),
        ("Psi onto k-flagged SSYT in the 4x4 box, k<=3", criterion_6),
        ("Catalan determinant, k-fans and k-triangulations", criterion_7),
        ("degree distributions of k-triangulations", criterion_8),
        ("permutations, boundary families, watermelons, conjectures", criterion_9),
        ("pairs in T=NNEE, B=ENEN by (h0,h1,h2)", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {:>2}: {name} [{:.2?}] {}", i + 1, start.elapsed(), out.detail);
        failed += usize::from(!out.ok);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
