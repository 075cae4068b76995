//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::process::{Command, Stdio};
use std::time::Instant;

use degdev_core::bounds::{evaluate_bounds, BoundReport, Verdict};
use degdev_core::exact::{frac, int, ExactRational};
use degdev_core::spectral::lemma_spot_check;
use degdev_core::verify::{
    exhaustive_check_with, geometric_grid, random_corpus_check, star_sweep, Check, CorpusOptions, CorpusSpec,
    ExhaustiveOptions, FamilyTemplate,
};
use degdev_core::{certified_interval, degree_stats, generate, Family, Graph, Polynomial};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.05..0.95);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// `n * s` straight from the degree sequence.
fn s_times_n(g: &Graph) -> i64 {
    let (n, two_m) = (g.n() as i64, 2 * g.m() as i64);
    (0..g.n()).map(|u| (g.degree(u) as i64 * n - two_m).abs()).sum()
}

/// Row sums of `f(A)` from explicit integer matrix powers.
fn dense_row_sum_max(g: &Graph, coeffs: &[i64]) -> i128 {
    let n = g.n();
    let mut a = vec![vec![0i128; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    let mut power: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut sums = vec![0i128; n];
    for &c in coeffs {
        for (i, row) in power.iter().enumerate() {
            sums[i] += i128::from(c) * row.iter().sum::<i128>();
        }
        power = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| power[i][k] * a[k][j]).sum()).collect()).collect();
    }
    sums.into_iter().max().unwrap()
}

fn exhaustive_seven() -> Outcome {
    let start = Instant::now();
    let opts = ExhaustiveOptions {
        checks: vec![Check::Theorem, Check::RowSum, Check::HalfDeviation],
        ..ExhaustiveOptions::new(7)
    };
    let summary = exhaustive_check_with(&opts).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(summary.graphs_checked == 1 << 21, || format!("{} graphs checked", summary.graphs_checked))?;
    ensure(summary.is_clean(), || format!("{} violations, first {:?}", summary.violations.len(), summary.violations.first()))?;
    ensure(summary.inconclusive == 0, || format!("{} inconclusive", summary.inconclusive))?;
    ensure(secs <= 600.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} graphs, 0 violations, max ratio {:.6}, {secs:.1}s", summary.graphs_checked, summary.max_gap_ratio))
}

fn lemma_pairs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..10_000 {
        let g = random_graph(&mut rng, 12);
        let degree = rng.gen_range(0..=4);
        let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-3..=3)).collect();
        let f = Polynomial::from_i64(&coeffs);
        let iv = certified_interval(&g, 1e-10).map_err(|e| e.to_string())?;
        let check = lemma_spot_check(&g, &f, &iv);
        let bound = dense_row_sum_max(&g, &coeffs);
        let context = || format!("pair {i}: {} with {coeffs:?}", g.to_graph6());
        ensure(check.row_sum_bound == BigInt::from(bound), || format!("{}: row-sum bound differs", context()))?;
        ensure(check.pass, || format!("{}: f(lo) exceeds {bound}", context()))?;
        ensure(check.f_rho_lower() <= int(bound as i64), || format!("{}: lower bound above row sums", context()))?;
    }
    Ok("10000 pairs, 0 violations".into())
}

fn star_tightness() -> Outcome {
    let ns = geometric_grid(5, 1_000_000, 120);
    let rows = star_sweep(&ns).map_err(|e| e.to_string())?;
    let last = rows.last().unwrap();
    ensure(last.n == 1_000_000, || format!("grid ends at {}", last.n))?;
    ensure((0.7046..=0.7072).contains(&last.ratio), || format!("ratio {} at n = 10^6", last.ratio))?;
    if let Some(w) = rows.windows(2).find(|w| w[0].ratio >= w[1].ratio) {
        return Err(format!("ratio not increasing between n = {} and {}", w[0].n, w[1].n));
    }
    ensure(rows.iter().all(|r| r.cross_check != Some(false)), || "power iteration disagrees with closed form".into())?;
    Ok(format!("{} grid points, ratio {:.6} at n = 10^6", rows.len(), last.ratio))
}

fn blow_up_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut compared = 0;
    for _ in 0..100 {
        let g = random_graph(&mut rng, 20);
        let base = degree_stats(&g).map_err(|e| e.to_string())?;
        let base_report = evaluate_bounds(&g, 1e-10).map_err(|e| e.to_string())?;
        let base_mid = certified_interval(&g, 1e-10).map_err(|e| e.to_string())?.mid();
        for t in [2usize, 3, 5] {
            let big = g.blow_up(t).map_err(|e| e.to_string())?;
            let stats = degree_stats(&big).map_err(|e| e.to_string())?;
            let label = || format!("{} at t = {t}", g.to_graph6());
            let tt = t as i64;
            ensure(big.n() == t * g.n() && big.m() == t * t * g.m(), || format!("{}: n or m", label()))?;
            ensure(s_times_n(&big) == tt * tt * tt * s_times_n(&g), || format!("{}: s from degrees", label()))?;
            ensure(stats.s == &base.s * int(tt * tt), || format!("{}: s", label()))?;
            let mid = certified_interval(&big, 1e-10).map_err(|e| e.to_string())?.mid();
            ensure((mid - t as f64 * base_mid).abs() <= 1e-6, || format!("{}: mid {mid} vs {}", label(), t as f64 * base_mid))?;
            let report = evaluate_bounds(&big, 1e-10).map_err(|e| e.to_string())?;
            ensure((report.gap_ratio - base_report.gap_ratio).abs() <= 1e-6, || {
                format!("{}: ratio {} vs {}", label(), report.gap_ratio, base_report.gap_ratio)
            })?;
            compared += 1;
        }
    }
    Ok(format!("{compared} blow-ups, laws exact"))
}

fn lower_end_ok(g: &Graph, lo: &ExactRational) -> bool {
    lo * int(g.n() as i64) >= int(2 * g.m() as i64)
}

fn certified_values() -> Outcome {
    let mut count = 0;
    for n in 1..=200usize {
        let g = generate(&Family::Complete { n }, None).unwrap();
        let iv = certified_interval(&g, 1e-9).map_err(|e| e.to_string())?;
        let target = int(n as i64 - 1);
        ensure(iv.lo <= target && target <= iv.hi && iv.width() <= frac(1, 1_000_000_000), || {
            format!("K_{n}: [{}, {}]", iv.lo, iv.hi)
        })?;
        ensure(lower_end_ok(&g, &iv.lo), || format!("K_{n}: lo below 2m/n"))?;
        count += 1;
    }

    let p3 = generate(&Family::Path { n: 3 }, None).unwrap();
    let iv = certified_interval(&p3, 1e-9).map_err(|e| e.to_string())?;
    let two = int(2);
    ensure(&iv.lo * &iv.lo <= two && two <= &iv.hi * &iv.hi && iv.width() <= frac(1, 1_000_000_000), || {
        format!("P_3: [{}, {}]", iv.lo, iv.hi)
    })?;
    ensure(lower_end_ok(&p3, &iv.lo), || "P_3: lo below 2m/n".into())?;
    count += 1;

    let mut stars = geometric_grid(2, 10_000, 40);
    stars.extend([3, 4, 5, 17, 9_999]);
    for n in stars {
        let g = generate(&Family::Star { n }, None).unwrap();
        let iv = certified_interval(&g, 1e-8).map_err(|e| e.to_string())?;
        let target = int(n as i64 - 1);
        ensure(&iv.lo * &iv.lo <= target && target <= &iv.hi * &iv.hi && iv.width() <= frac(1, 100_000_000), || {
            format!("star n = {n}: [{}, {}]", iv.lo_f64(), iv.hi_f64())
        })?;
        ensure(lower_end_ok(&g, &iv.lo), || format!("star n = {n}: lo below 2m/n"))?;
        count += 1;
    }
    Ok(format!("{count} intervals enclose the closed forms"))
}

fn chain_ordered_independently(r: &BoundReport) -> bool {
    let s = degdev_core::exact::to_f64(&r.s);
    let expected = [(s / 2.0).sqrt(), (2.0 * s / 3.0).sqrt(), (0.9 * s).sqrt(), s.sqrt()];
    let got = [r.bound_theorem1, r.bound_rw, r.bound_zhang, r.bound_nikiforov06];
    got.windows(2).all(|w| w[0] < w[1]) && got.iter().zip(expected).all(|(a, b)| (a - b).abs() <= 1e-12 * b.max(1.0))
}

fn bound_chain() -> Outcome {
    let mut with_deviation = 0;
    let mut check = |g: &Graph| -> Result<(), String> {
        let r = evaluate_bounds(g, 1e-9).map_err(|e| e.to_string())?;
        if r.s > int(0) {
            with_deviation += 1;
            ensure(chain_ordered_independently(&r) && r.bound_chain_ordered(), || g.to_graph6())?;
        }
        Ok(())
    };
    for n in 1..=6usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            check(&Graph::from_upper_mask(n, mask).unwrap())?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2_000 {
        check(&random_graph(&mut rng, 40))?;
    }
    for n in 2..=300 {
        check(&generate(&Family::Star { n }, None).unwrap())?;
    }

    // the same check through the corpus harness
    let spec = CorpusSpec {
        families: vec![FamilyTemplate::Gnp { p: 0.1 }, FamilyTemplate::CompleteBipartite, FamilyTemplate::Path],
        sizes: vec![10, 25, 50],
        count: 600,
        seed: 42,
    };
    let opts = CorpusOptions { checks: vec![Check::BoundChain], ..CorpusOptions::default() };
    let (summary, _) = random_corpus_check(&spec, &opts).map_err(|e| e.to_string())?;
    ensure(summary.is_clean(), || format!("corpus violations {:?}", summary.violations.first()))?;
    Ok(format!("{with_deviation} graphs with s > 0 plus a {}-graph corpus", summary.graphs_checked))
}

struct Run {
    code: i32,
    stdout: String,
}

fn degdev(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_degdev"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .expect("binary runs");
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8_lossy(&out.stdout).into_owned() }
}

fn cli_matrix() -> Outcome {
    let cases: [(&[&str], i32); 12] = [
        (&["analyze", "--gen", "star:5"], 0),
        (&["analyze", "--graph6", "DQc", "--output", "csv"], 0),
        (&["analyze", "--gen", "complete:6", "--output", "human"], 0),
        (&["verify", "--families", "gnp:0.2,star", "--sizes", "8..=12", "--count", "30"], 0),
        (&["enumerate", "--n-max", "4"], 0),
        (&["blowup", "--gen", "path:3", "-t", "1,2,3"], 0),
        (&["star-sweep", "--grid", "5:1000:6"], 0),
        (&["enumerate", "--n-max", "4", "--max-ratio", "0.3"], 1),
        (&["analyze", "--gen", "star:50", "--max-ratio", "0.5"], 1),
        (&["analyze", "--graph6", "D Q"], 2),
        (&["analyze", "/nonexistent/graphs.g6"], 2),
        (&["enumerate", "--n-max", "9"], 2),
    ];
    for (args, want) in cases {
        let run = degdev(args);
        ensure(run.code == want, || format!("`degdev {}` exited {} (want {want})", args.join(" "), run.code))?;
    }
    let run = degdev(&["analyze", "--gen", "star:5"]);
    let line = run.stdout.trim_end();
    ensure(line.contains(r#""s":"24/5""#), || format!("star:5 output {line}"))?;
    let report = BoundReport::from_json(line).map_err(|e| e.to_string())?;
    ensure(report.s == frac(24, 5) && report.to_json() == line, || "JSON does not round-trip".into())?;
    ensure(report.verdict_theorem1 == Verdict::Pass, || "star:5 verdict".into())?;
    Ok("12 invocations, exit codes and rationals exact".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exhaustive n = 7", exhaustive_seven),
        ("polynomial row-sum lemma", lemma_pairs),
        ("star tightness", star_tightness),
        ("blow-up laws", blow_up_laws),
        ("certified intervals", certified_values),
        ("bound chain ordering", bound_chain),
        ("cli contract", cli_matrix),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
