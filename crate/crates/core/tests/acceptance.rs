//! Acceptance checks. Each check prints one PASS/FAIL line; the process exits
//! non-zero if any check fails.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Display;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cybergraph::assignment::{assignment_cost, solve_assignment, CostMatrix, Relabeling};
use cybergraph::baselines::{
    chung_lu_graph, configuration_model, havel_hakimi_graph, horvat_modes_graph,
};
use cybergraph::dist::{fit, DistributionSpec, Family};
use cybergraph::generator::{generate, generate_observed, GeneratorConfig, SwitchKind};
use cybergraph::io::parse_degree_counts;
use cybergraph::metrics::{
    assortativity, clustering_coefficient, full_report, shortest_path_stats, spectral_gap,
    ClusteringMode,
};
use cybergraph::sequence::{is_graphical, sample_sequence, DegreeSequence, SequenceRequest};
use cybergraph::SimpleGraph;

const CASES: [(usize, usize); 3] = [(30, 35), (118, 130), (300, 312)];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn lognormal() -> DistributionSpec {
    DistributionSpec::lognormal(1.371, 1.986).unwrap()
}

fn sequence(n: usize, m: usize, seed: u64) -> DegreeSequence {
    sample_sequence(&SequenceRequest::new(n, m, 10, lognormal(), seed)).unwrap()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

struct Outcome {
    id: &'static str,
    ok: bool,
}

fn verdict(id: &'static str, title: &str, ok: bool, detail: impl Display) -> Outcome {
    println!("{} {id:<3} {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    Outcome { id, ok }
}

fn reference_fits() -> (BTreeMap<&'static str, (f64, Option<f64>, f64)>, Duration) {
    let k = parse_degree_counts(include_str!("../data/reference_counts.csv")).unwrap();
    let start = Instant::now();
    let mut out = BTreeMap::new();
    for family in Family::ALL {
        let r = fit(&k, family).unwrap();
        out.insert(family.name(), (r.spec.alpha, r.spec.beta, r.objective(&k)));
    }
    (out, start.elapsed())
}

fn near(x: f64, target: f64) -> bool {
    (x - target).abs() <= 0.02
}

fn fit_parameters() -> Outcome {
    let (fits, elapsed) = reference_fits();
    let (ln_a, ln_b, ln_obj) = fits["lognormal"];
    let (pl_a, _, pl_obj) = fits["powerlaw"];
    let (zf_a, _, zf_obj) = fits["zipf"];
    let ok = near(ln_a, 1.371)
        && near(ln_b.unwrap(), 1.986)
        && near(pl_a, 1.440)
        && near(zf_a, 1.440)
        && ln_obj < pl_obj
        && ln_obj < zf_obj
        && elapsed < Duration::from_secs(5);
    verdict(
        "1a",
        "fit alphas, lognormal beta, objective ranking, runtime",
        ok,
        format!(
            "lognormal ({ln_a:.4}, {:.4}) obj {ln_obj:.3e}; powerlaw alpha {pl_a:.4} obj {pl_obj:.3e}; \
             zipf alpha {zf_a:.4} obj {zf_obj:.3e}; {} (want (1.371, 1.986), 1.440, 1.440 within 0.02, < 5s)",
            ln_b.unwrap(),
            secs(elapsed)
        ),
    )
}

fn fit_powerlaw_scale() -> Outcome {
    let (fits, _) = reference_fits();
    let beta = fits["powerlaw"].1.unwrap();
    verdict(
        "1b",
        "powerlaw beta",
        near(beta, 3.745),
        format!(
            "beta {beta:.4} (want 3.745 within 0.02; the scale cancels under normalization \
             and is reported as the normalizing constant)"
        ),
    )
}

fn generator_validity() -> Outcome {
    let start = Instant::now();
    let (mut runs, mut good) = (0, 0);
    let mut failures = Vec::new();
    for i in 0..1000u64 {
        let (n, m) = CASES[(i % 3) as usize];
        let seq = sequence(n, m, i);
        runs += 1;
        match generate(&seq, i, GeneratorConfig::default()) {
            Ok(g) => {
                let exact = g.degrees() == seq.degrees() && g.edge_count() == m;
                if exact && g.is_connected() {
                    good += 1;
                } else {
                    failures.push(format!("seed {i}: wrong degrees or disconnected"));
                }
            }
            Err(e) => failures.push(format!("seed {i}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let ok = good == runs && elapsed < Duration::from_secs(60);
    verdict(
        "2",
        "generator simple, connected, exact degrees",
        ok,
        format!(
            "{good}/{runs} valid in {}{}",
            secs(elapsed),
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

fn density_exact() -> Outcome {
    let expected = ["1.167", "1.102", "1.040"];
    let mut ok = true;
    let mut seen = Vec::new();
    for (case, &(n, m)) in CASES.iter().enumerate() {
        for seed in 0..20 {
            let seq = sequence(n, m, seed);
            let g = generate(&seq, seed, GeneratorConfig::default()).unwrap();
            let r = full_report(&g, ClusteringMode::Local);
            ok &= r.rho == m as f64 / n as f64 && format!("{:.3}", r.rho) == expected[case];
            if seed == 0 {
                seen.push(format!("{:.3}", r.rho));
            }
        }
    }
    verdict(
        "3",
        "density equals m/n",
        ok,
        format!("rho {} over 60 outputs (want {})", seen.join(" / "), expected.join(" / ")),
    )
}

fn statistical_bands() -> Outcome {
    let seeds = 120;
    let (mut a, mut diam, mut cc, mut gap) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for seed in 0..seeds {
        let seq = sequence(300, 312, seed);
        let g = generate(&seq, seed, GeneratorConfig::default()).unwrap();
        let r = full_report(&g, ClusteringMode::Local);
        a.push(r.assortativity.unwrap());
        diam.push(r.diameter.unwrap() as f64);
        cc.push(r.clustering.unwrap());
        gap.push(r.spectral_gap.unwrap());
    }
    let (a, diam, cc, gap) = (median(a), median(diam), median(cc), median(gap));
    let ok = (-0.35..=-0.10).contains(&a)
        && (15.0..=32.0).contains(&diam)
        && (0.0..=0.03).contains(&cc)
        && (5e-4..=2e-2).contains(&gap);
    verdict(
        "4",
        "n=300 medians over 120 seeds",
        ok,
        format!(
            "assortativity {a:.3} (band [-0.35, -0.10], reference -0.226); diameter {diam} \
             ([15, 32], 22); clustering {cc:.4} ([0, 0.03], 0.007); gap {gap:.3e} \
             ([5e-4, 2e-2], 2.86e-3)"
        ),
    )
}

fn erdos_gallai(degrees: &[usize]) -> bool {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=d.len() {
        prefix += d[k - 1];
        let bound = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if prefix > bound {
            return false;
        }
    }
    true
}

fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

fn graphicality_oracle() -> Outcome {
    let mut r = rng(5);
    let mut inputs = Vec::with_capacity(10_000);
    for i in 0..10_000 {
        let n = r.gen_range(1..=50);
        let seq = if i % 2 == 0 {
            // degrees of an actual graph, then possibly perturbed by one
            let p = r.gen_range(0.05..0.9);
            let mut d = random_graph(&mut r, n, p).degrees();
            if r.gen_bool(0.5) {
                let v = r.gen_range(0..n);
                d[v] += 1;
                let w = r.gen_range(0..n);
                d[w] = d[w].saturating_sub(1);
            }
            d
        } else {
            (0..n).map(|_| r.gen_range(0..n)).collect()
        };
        inputs.push(seq);
    }
    let start = Instant::now();
    let mut agree = 0;
    let mut graphical = 0;
    for s in &inputs {
        let fast = is_graphical(s);
        agree += usize::from(fast == erdos_gallai(s));
        graphical += usize::from(fast);
    }
    let elapsed = start.elapsed();
    verdict(
        "5",
        "graphicality agrees with Erdos-Gallai",
        agree == inputs.len() && elapsed < Duration::from_secs(2),
        format!(
            "{agree}/{} agree ({graphical} graphical) in {}",
            inputs.len(),
            secs(elapsed)
        ),
    )
}

fn floyd_warshall(g: &SimpleGraph) -> Option<(usize, f64)> {
    let n = g.node_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let mut diameter = 0;
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            if d[i][j] >= inf {
                return None;
            }
            diameter = diameter.max(d[i][j]);
            total += d[i][j];
        }
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Some((diameter, if pairs == 0 { 0.0 } else { total as f64 / pairs as f64 }))
}

fn clustering_by_triples(g: &SimpleGraph) -> f64 {
    let n = g.node_count();
    let mut sum = 0.0;
    for v in 0..n {
        let (mut pairs, mut closed) = (0, 0);
        for a in 0..n {
            for b in a + 1..n {
                if a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) {
                    pairs += 1;
                    closed += usize::from(g.has_edge(a, b));
                }
            }
        }
        if pairs > 0 {
            sum += closed as f64 / pairs as f64;
        }
    }
    sum / n as f64
}

/// Newman's edge-moment form.
fn assortativity_by_moments(g: &SimpleGraph) -> Option<f64> {
    let m = g.edge_count() as f64;
    if m == 0.0 {
        return None;
    }
    let (mut prod, mut half_sum, mut half_sq) = (0.0, 0.0, 0.0);
    for &(u, v) in g.edges() {
        let (j, k) = (g.degree(u) as f64, g.degree(v) as f64);
        prod += j * k;
        half_sum += 0.5 * (j + k);
        half_sq += 0.5 * (j * j + k * k);
    }
    let mean = half_sum / m;
    let den = half_sq / m - mean * mean;
    if den.abs() < 1e-12 {
        return None;
    }
    Some((prod / m - mean * mean) / den)
}

/// Cyclic Jacobi rotations on a dense symmetric matrix.
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(f64::total_cmp);
    values
}

fn gap_by_jacobi(g: &SimpleGraph) -> Option<f64> {
    let n = g.node_count();
    let deg = g.degrees();
    let lap: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        if deg[i] > 0 {
                            1.0
                        } else {
                            0.0
                        }
                    } else if g.has_edge(i, j) {
                        -1.0 / ((deg[i] * deg[j]) as f64).sqrt()
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    jacobi_eigenvalues(lap).into_iter().find(|&x| x > 1e-9)
}

fn close(a: Option<f64>, b: Option<f64>, tol: f64) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => (x - y).abs() <= tol,
        (None, None) => true,
        _ => false,
    }
}

fn metrics_oracle() -> Outcome {
    let mut r = rng(6);
    let mut mismatches = Vec::new();
    let mut connected = 0;
    for i in 0..100 {
        let n = r.gen_range(2..=12);
        let p = r.gen_range(0.15..0.9);
        let g = random_graph(&mut r, n, p);
        let fast = shortest_path_stats(&g);
        let slow = floyd_warshall(&g);
        connected += usize::from(slow.is_some());
        if fast.map(|x| x.0) != slow.map(|x| x.0) || !close(fast.map(|x| x.1), slow.map(|x| x.1), 1e-9) {
            mismatches.push(format!("graph {i}: distances"));
        }
        if (clustering_coefficient(&g) - clustering_by_triples(&g)).abs() > 1e-9 {
            mismatches.push(format!("graph {i}: clustering"));
        }
        if !close(assortativity(&g), assortativity_by_moments(&g), 1e-9) {
            mismatches.push(format!("graph {i}: assortativity"));
        }
        if !close(spectral_gap(&g), gap_by_jacobi(&g), 1e-6) {
            mismatches.push(format!("graph {i}: spectral gap"));
        }
    }
    verdict(
        "6",
        "metrics agree with brute-force oracles",
        mismatches.is_empty(),
        format!(
            "100 graphs ({connected} connected), {} mismatches{}",
            mismatches.len(),
            mismatches.first().map(|m| format!(", first {m}")).unwrap_or_default()
        ),
    )
}

fn reaches_all(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn switch_preservation() -> Outcome {
    let (mut loops, mut parallel, mut broken) = (0usize, 0usize, 0usize);
    let mut seed = 0u64;
    while (loops < 5_000 || parallel < 5_000) && seed < 100_000 {
        // dense sequences produce many defects before repair
        let n = 40;
        let degrees: Vec<usize> = {
            let mut r = rng(seed);
            let mut d: Vec<usize> = (0..n).map(|_| r.gen_range(4..=12)).collect();
            if d.iter().sum::<usize>() % 2 == 1 {
                d[0] += 1;
            }
            d
        };
        seed += 1;
        let Ok(seq) = DegreeSequence::new(degrees.clone()) else { continue };
        let target = sorted(degrees);
        let _ = generate_observed(&seq, seed, GeneratorConfig::default(), &mut |event, g| {
            match event.kind {
                SwitchKind::SelfLoop => loops += 1,
                SwitchKind::Parallel => parallel += 1,
            }
            let ok = sorted(g.degrees().to_vec()) == target && reaches_all(g.node_count(), g.edges());
            broken += usize::from(!ok);
        });
    }
    let total = loops + parallel;
    verdict(
        "7",
        "edge switches preserve degrees and connectivity",
        broken == 0 && total >= 10_000 && loops > 0 && parallel > 0,
        format!("{total} switches ({loops} self-loop, {parallel} parallel), {broken} violations"),
    )
}

fn brute_force_cost(c: &CostMatrix) -> f64 {
    fn go(c: &CostMatrix, col: usize, used: &mut [bool], acc: f64, best: &mut f64) {
        let n = c.size();
        if col == n {
            *best = best.min(acc);
            return;
        }
        for row in 0..n {
            if !used[row] {
                used[row] = true;
                go(c, col + 1, used, acc + c.get(row, col), best);
                used[row] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(c, 0, &mut vec![false; c.size()], 0.0, &mut best);
    best
}

fn random_cost(r: &mut ChaCha8Rng, n: usize) -> CostMatrix {
    CostMatrix::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| r.gen_range(0..1000) as f64).collect())
            .collect(),
    )
    .unwrap()
}

fn assignment_optimality() -> Outcome {
    let mut r = rng(8);
    let mut exact = 0;
    for _ in 0..200 {
        let c = random_cost(&mut r, 7);
        let a = solve_assignment(&c).unwrap();
        let consistent = assignment_cost(&c, &a.relabeling) == a.cost;
        exact += usize::from(consistent && a.cost == brute_force_cost(&c));
    }
    let big = CostMatrix::from_rows(
        (0..500)
            .map(|_| (0..500).map(|_| r.gen::<f64>()).collect())
            .collect(),
    )
    .unwrap();
    let start = Instant::now();
    let a = solve_assignment(&big).unwrap();
    let elapsed = start.elapsed();
    let identity = assignment_cost(&big, &Relabeling::identity(500));
    verdict(
        "8",
        "assignment matches brute force, n=500 fast",
        exact == 200 && elapsed < Duration::from_secs(2) && a.cost <= identity,
        format!(
            "{exact}/200 exact on 7x7; n=500 solved in {} (cost {:.3} vs identity {identity:.3})",
            secs(elapsed),
            a.cost
        ),
    )
}

fn baseline_properties() -> Outcome {
    let mut r = rng(9);
    let mut problems = Vec::new();

    // HH succeeds exactly on graphical input
    let mut hh_checked = 0;
    for _ in 0..2000 {
        let n = r.gen_range(1..=30);
        let d: Vec<usize> = (0..n).map(|_| r.gen_range(0..n)).collect();
        let graphical = is_graphical(&d);
        match havel_hakimi_graph(&d) {
            Ok(g) if graphical && g.degrees() == d => hh_checked += 1,
            Err(_) if !graphical => hh_checked += 1,
            _ => problems.push(format!("HH disagrees on {d:?}")),
        }
    }

    // CM keeps the stub multiset
    let mut cm_checked = 0;
    for seed in 0..300 {
        let (n, m) = CASES[seed % 3];
        let seq = sequence(n, m, seed as u64);
        let g = configuration_model(seq.degrees(), &mut r).unwrap();
        if g.degrees() == seq.degrees() && g.edge_count() == m {
            cm_checked += 1;
        } else {
            problems.push(format!("CM degrees differ for seed {seed}"));
        }
    }

    // CL mean degrees, products never exceed the degree sum
    let target = [1usize, 2, 2, 3, 3, 3, 4, 4, 5, 5];
    let total: usize = target.iter().sum();
    assert!(target.iter().all(|&a| target.iter().all(|&b| a * b <= total)));
    let trials = 10_000;
    let mut sums = [0.0f64; 10];
    for _ in 0..trials {
        let g = chung_lu_graph(&target, &mut r).unwrap();
        for (s, d) in sums.iter_mut().zip(g.degrees()) {
            *s += d as f64;
        }
    }
    let mut worst_z: f64 = 0.0;
    for i in 0..10 {
        let (mut mean, mut var) = (0.0, 0.0);
        for j in 0..10 {
            if i != j {
                let p = (target[i] * target[j]) as f64 / total as f64;
                mean += p;
                var += p * (1.0 - p);
            }
        }
        let sigma = (var / trials as f64).sqrt();
        let z = (sums[i] / trials as f64 - mean).abs() / sigma;
        worst_z = worst_z.max(z);
    }
    if worst_z > 3.0 {
        problems.push(format!("CL mean degree off by {worst_z:.2} sigma"));
    }

    // HM connected, simple, exact
    let mut hm_ok = 0;
    for seed in 0..500 {
        let (n, m) = CASES[seed % 3];
        let seq = sequence(n, m, 10_000 + seed as u64);
        match horvat_modes_graph(seq.degrees(), &mut r) {
            Ok(g) if g.degrees() == seq.degrees() && g.is_connected() => hm_ok += 1,
            Ok(_) => problems.push(format!("HM output wrong for seed {seed}")),
            Err(e) => problems.push(format!("HM failed for seed {seed}: {e}")),
        }
    }

    verdict(
        "9",
        "baseline properties",
        problems.is_empty(),
        format!(
            "HH {hh_checked}/2000, CM {cm_checked}/300, CL worst |z| {worst_z:.2} over {trials} trials, \
             HM {hm_ok}/500{}",
            problems.first().map(|p| format!("; first problem: {p}")).unwrap_or_default()
        ),
    )
}

fn cli(dir: &Path, args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cybergraph"))
        .current_dir(dir)
        .env_remove("CYBERGRAPH_SEED")
        .args(args)
        .output()
        .unwrap()
}

fn read(dir: &Path, name: &str) -> Vec<u8> {
    std::fs::read(dir.join(name)).unwrap()
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut problems = Vec::new();
    let mut check = |label: &str, ok: bool| {
        if !ok {
            problems.push(label.to_string());
        }
    };

    let gen = [
        "gen", "-n", "118", "-m", "130", "--dmax", "10", "--family", "lognormal", "-a", "1.371",
        "-b", "1.986", "--seed", "7", "--out", "g.txt",
    ];
    check("gen ran", cli(d, &gen).status.success());
    let (graph, manifest) = (read(d, "g.txt"), read(d, "g.txt.manifest.json"));
    check("gen repeated", cli(d, &gen).status.success());
    check("gen output identical", read(d, "g.txt") == graph);
    check("gen manifest identical", read(d, "g.txt.manifest.json") == manifest);
    std::fs::remove_file(d.join("g.txt")).unwrap();
    check("gen replay ran", cli(d, &["replay", "g.txt.manifest.json"]).status.success());
    check("gen replay identical", read(d, "g.txt") == graph);

    for model in ["cm", "hh", "cl", "hm"] {
        let out = format!("{model}.txt");
        let args = ["gen", "-n", "30", "-m", "35", "--seed", "3", "--model", model, "--out", &out];
        cli(d, &args);
        let first = read(d, &out);
        cli(d, &args);
        check(model, read(d, &out) == first);
    }

    let cmp = [
        "compare", "-n", "30", "-m", "35", "--seeds", "3", "--seed", "11", "--json", "c.json",
    ];
    let table = cli(d, &cmp);
    check("compare ran", table.status.success());
    let result = read(d, "c.json");
    std::fs::write(d.join("c.json"), b"").unwrap();
    let replay = cli(d, &["replay", "c.json.manifest.json"]);
    check("compare replay ran", replay.status.success());
    check("compare replay identical", read(d, "c.json") == result);
    check("compare table identical", cli(d, &cmp).stdout == table.stdout);

    verdict(
        "10",
        "gen/compare artifacts reproduce byte for byte",
        problems.is_empty(),
        if problems.is_empty() {
            format!("gen (5 models), compare and replay digests match ({} bytes compared)", graph.len() + result.len())
        } else {
            format!("mismatched: {}", problems.join(", "))
        },
    )
}

fn main() {
    let checks: Vec<fn() -> Outcome> = vec![
        fit_parameters,
        fit_powerlaw_scale,
        generator_validity,
        density_exact,
        statistical_bands,
        graphicality_oracle,
        metrics_oracle,
        switch_preservation,
        assignment_optimality,
        baseline_properties,
        determinism,
    ];
    let outcomes: Vec<Outcome> = checks.into_iter().map(|c| c()).collect();
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.ok).map(|o| o.id).collect();
    println!(
        "acceptance: {} passed, {} failed{}",
        outcomes.len() - failed.len(),
        failed.len(),
        if failed.is_empty() { String::new() } else { format!(" ({})", failed.join(", ")) }
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
