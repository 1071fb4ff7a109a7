use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use odd_colouring::classes::{
    bounded_degree_budget, bounded_degree_colouring, colour_with_budget_traced, girth7_budget, girth7_colouring,
    planar_girth11_colouring, three_halves_sqrt,
};
use odd_colouring::exact::{chi_odd_exact, chi_odd_exact_with_cap, chromatic_number_exact, is_odd_colourable};
use odd_colouring::gallai::{even_even_partition, odd_even_partition};
use odd_colouring::generators::{
    complete, cycle, k4_two_pendants, random_gnp, random_gnp_raw, random_interval, random_proper_interval,
    random_tree, subdivided_complete,
};
use odd_colouring::interval::{interval_colouring_traced, proper_interval_colouring};
use odd_colouring::modular::{colour_modular, ModulePartition};
use odd_colouring::verify::{is_even_set, is_odd_set, verify_colouring};
use odd_colouring::{Colouring, Graph, VertexSet};

const PER_ALGORITHM: usize = 200;
const DESK_SCALE: usize = 16;
const GALLAI_LIMIT: Duration = Duration::from_secs(10);
const CONSTANTS_LIMIT: Duration = Duration::from_secs(5);
const SUBDIVISION_LIMIT: Duration = Duration::from_secs(60);

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], detail: String) -> Self {
        match failures.first() {
            None => Outcome { ok: true, detail },
            Some(f) => Outcome { ok: false, detail: format!("{detail}; {} failure(s), first: {f}", failures.len()) },
        }
    }
}

fn timed(limit: Duration, failures: &mut Vec<String>, start: Instant) -> String {
    let took = start.elapsed();
    if took > limit {
        failures.push(format!("took {took:.2?}, limit {limit:?}"));
    }
    format!("{took:.2?}")
}

fn even_components(g: &Graph) -> bool {
    g.components().iter().all(|c| c.len() % 2 == 0)
}

/// Random connected graph: a random tree plus `extra` random chords.
fn connected(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let tree = random_tree(n, rng.gen()).unwrap();
    let mut edges = tree.edges();
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 7) % 64;
        let p = [0.1, 0.3, 0.5][seed as usize % 3];
        let g = random_gnp_raw(n, p, seed).unwrap();
        match (even_even_partition(&g), odd_even_partition(&g)) {
            (Ok((a, b)), Ok((o, e))) => {
                let all = g.vertices();
                let ee = is_even_set(&g, &a) && is_even_set(&g, &b) && !a.intersects(&b) && a.union(&b) == all;
                let oe = is_odd_set(&g, &o) && is_even_set(&g, &e) && !o.intersects(&e) && o.union(&e) == all;
                if !ee || !oe {
                    failures.push(format!("seed {seed}: parity contract broken"));
                }
            }
            (r, s) => failures.push(format!("seed {seed}: {:?} {:?}", r.err(), s.err())),
        }
    }
    let took = timed(GALLAI_LIMIT, &mut failures, start);
    Outcome::new(&failures, format!("1000 graphs in {took}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |name: &str, got: usize, want: usize| {
        if got != want {
            failures.push(format!("{name} = {got}, expected {want}"));
        }
    };
    let s4 = subdivided_complete(4).unwrap();
    expect("chi_odd(C14)", chi_odd_exact(&cycle(14).unwrap()).unwrap().0, 3);
    expect("chi_odd(S(K4))", chi_odd_exact(&s4).unwrap().0, 4);
    expect("girth(S(K4))", s4.girth().unwrap_or(0), 6);
    expect("chi_odd(K4 + two pendants)", chi_odd_exact(&k4_two_pendants()).unwrap().0, 3);
    let took = timed(CONSTANTS_LIMIT, &mut failures, start);
    Outcome::new(&failures, format!("C14 = 3, S(K4) = 4 with girth 6, K4 + pendants = 3 in {took}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in [3, 4] {
        let got = chi_odd_exact(&subdivided_complete(n).unwrap()).unwrap().0;
        if got != n {
            failures.push(format!("S(K{n}) needs {got}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bases = 0;
    let mut attempts = 0;
    while bases < 120 && attempts < 10_000 {
        attempts += 1;
        let n = rng.gen_range(2..=6);
        let extra = rng.gen_range(0..=n * (n - 1) / 2);
        let g = connected(n, extra, &mut rng);
        if (g.n() + g.m()) % 2 == 1 {
            continue;
        }
        bases += 1;
        let h = g.subdivide();
        let odd = chi_odd_exact_with_cap(&h, h.n()).unwrap().0;
        let chromatic = chromatic_number_exact(&g).unwrap();
        if odd != chromatic {
            failures.push(format!("base {:?}: chi_odd(S(G)) = {odd}, chi(G) = {chromatic}", g.edges()));
        }
    }
    if bases < 100 {
        failures.push(format!("only {bases} bases"));
    }
    let took = timed(SUBDIVISION_LIMIT, &mut failures, start);
    Outcome::new(&failures, format!("S(K3), S(K4) and {bases} connected bases in {took}"))
}

struct Instance {
    algorithm: &'static str,
    g: Graph,
    colouring: Colouring,
    bound: usize,
}

fn record(
    out: &mut Vec<Instance>,
    failures: &mut Vec<String>,
    algorithm: &'static str,
    g: Graph,
    result: odd_colouring::Result<Colouring>,
    bound: usize,
) {
    match result {
        Ok(c) => out.push(Instance { algorithm, g, colouring: c, bound }),
        Err(e) => failures.push(format!("{algorithm} on n={}: {e}", g.n())),
    }
}

fn bounded_degree_instances(out: &mut Vec<Instance>, failures: &mut Vec<String>) {
    for seed in 0..PER_ALGORITHM as u64 {
        let n = 2 * (1 + seed as usize % 20);
        let g = random_gnp(n, [0.1, 0.2, 0.4][seed as usize % 3], seed).unwrap();
        let bound = 2 * g.max_degree() - 1;
        let c = bounded_degree_colouring(&g);
        record(out, failures, "bounded-degree", g, c, bound);
    }
}

fn girth7_instances(out: &mut Vec<Instance>, failures: &mut Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut count = 0;
    while count < PER_ALGORITHM {
        let g = if count % 4 == 0 {
            cycle(2 * rng.gen_range(4..40)).unwrap()
        } else {
            let n = rng.gen_range(2..9);
            let extra = rng.gen_range(0..=n);
            connected(n, extra, &mut rng).subdivide().subdivide()
        };
        if !even_components(&g) {
            continue;
        }
        count += 1;
        let bound = three_halves_sqrt(g.n()) + 1;
        let c = girth7_colouring(&g);
        record(out, failures, "girth7", g, c, bound);
    }
}

fn planar_girth11_instances(out: &mut Vec<Instance>, failures: &mut Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut count = 0;
    while count < PER_ALGORITHM {
        let g = match count % 4 {
            0 => cycle(2 * rng.gen_range(6..40)).unwrap(),
            1 => random_tree(2 * rng.gen_range(1..30), rng.gen()).unwrap(),
            2 => complete(4).unwrap().subdivide().subdivide(),
            // at most three chords keeps the cycle rank below that of K5 and K3,3
            _ => {
                let n = rng.gen_range(3..12);
                let extra = rng.gen_range(1..=3);
                connected(n, extra, &mut rng).subdivide().subdivide()
            }
        };
        if !even_components(&g) {
            continue;
        }
        count += 1;
        let c = planar_girth11_colouring(&g);
        record(out, failures, "planar-girth11", g, c, 3);
    }
}

/// Substitutes a random module of size `sizes[i]` (clique or independent)
/// for each vertex `i` of `q`.
fn blow_up(q: &Graph, sizes: &[usize], rng: &mut ChaCha8Rng) -> (Graph, ModulePartition) {
    let n: usize = sizes.iter().sum();
    let mut edges = Vec::new();
    let mut parts = Vec::new();
    let mut next = 0;
    for &s in sizes {
        let members: Vec<usize> = (next..next + s).collect();
        if rng.gen_bool(0.5) {
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        parts.push(members);
        next += s;
    }
    for (a, b) in q.edges() {
        for &u in &parts[a] {
            for &v in &parts[b] {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let m = ModulePartition::from_lists(n, &parts).unwrap();
    (g, m)
}

fn modular_instances(out: &mut Vec<Instance>, failures: &mut Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut count = 0;
    while count < PER_ALGORITHM {
        let k = rng.gen_range(2..10);
        let extra = rng.gen_range(0..=k);
        let q = connected(k, extra, &mut rng);
        let mut sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..6)).collect();
        if sizes.iter().sum::<usize>() % 2 == 1 {
            sizes[rng.gen_range(0..k)] += 1;
        }
        let (g, m) = blow_up(&q, &sizes, &mut rng);
        count += 1;
        let c = colour_modular(&g, &m);
        record(out, failures, "modular", g, c, 3 * m.len());
    }
}

fn proper_interval_instances(out: &mut Vec<Instance>, failures: &mut Vec<String>) {
    for seed in 0..PER_ALGORITHM as u64 {
        let n = 2 * (1 + seed as usize % 30);
        let (g, rep) = random_proper_interval(n, 3 + seed as i64 % 8, seed).unwrap();
        let c = proper_interval_colouring(&g, &rep);
        record(out, failures, "proper-interval", g, c, 3);
    }
}

fn interval_instances(out: &mut Vec<Instance>, failures: &mut Vec<String>) {
    for seed in 0..PER_ALGORITHM as u64 {
        let n = 2 * (1 + seed as usize % 30);
        let (g, rep) = random_interval(n, 2 * n as u64 + seed % 50, seed).unwrap();
        let c = interval_colouring_traced(&g, &rep).map(|(c, _)| c);
        record(out, failures, "interval", g, c, 6);
    }
}

fn all_instances(failures: &mut Vec<String>) -> Vec<Instance> {
    let mut out = Vec::new();
    bounded_degree_instances(&mut out, failures);
    girth7_instances(&mut out, failures);
    planar_girth11_instances(&mut out, failures);
    modular_instances(&mut out, failures);
    proper_interval_instances(&mut out, failures);
    interval_instances(&mut out, failures);
    out
}

fn criterion_4(instances: &[Instance], mut failures: Vec<String>) -> Outcome {
    let mut counts: Vec<(&str, usize)> = Vec::new();
    for inst in instances {
        if !verify_colouring(&inst.g, &inst.colouring).valid {
            failures.push(format!("{} on n={}: invalid colouring", inst.algorithm, inst.g.n()));
        }
        if inst.colouring.num_classes() > inst.bound {
            failures.push(format!(
                "{} on n={}: {} classes, bound {}",
                inst.algorithm,
                inst.g.n(),
                inst.colouring.num_classes(),
                inst.bound
            ));
        }
        match counts.iter_mut().find(|(a, _)| *a == inst.algorithm) {
            Some((_, c)) => *c += 1,
            None => counts.push((inst.algorithm, 1)),
        }
    }
    for (a, c) in &counts {
        if *c < PER_ALGORITHM {
            failures.push(format!("{a}: only {c} instances"));
        }
    }
    let summary: Vec<String> = counts.iter().map(|(a, c)| format!("{a} {c}")).collect();
    Outcome::new(&failures, summary.join(", "))
}

fn criterion_5(instances: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in instances.iter().filter(|i| i.g.n() <= DESK_SCALE) {
        let (opt, witness) = chi_odd_exact(&inst.g).unwrap();
        checked += 1;
        if !verify_colouring(&inst.g, &witness).valid || witness.num_classes() != opt {
            failures.push(format!("exact witness invalid on {:?}", inst.g.edges()));
        }
        if inst.colouring.num_classes() < opt {
            failures.push(format!("{} beat the optimum {opt} on {:?}", inst.algorithm, inst.g.edges()));
        }
    }
    Outcome::new(&failures, format!("{checked} instances with n <= {DESK_SCALE}"))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut exact_runs = 0;
    for seed in 0..1000u64 {
        let n = 1 + seed as usize % 40;
        let g = random_gnp_raw(n, [0.02, 0.05, 0.1, 0.3][seed as usize % 4], seed).unwrap();
        let mut seen = VertexSet::new(n);
        let mut all_even = true;
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(n, s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in g.neighbours(u).iter() {
                    if !comp.contains(v) {
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            all_even &= comp.len().is_multiple_of(2);
            seen.union_with(&comp);
        }
        if is_odd_colourable(&g) != all_even {
            failures.push(format!("seed {seed}: feasibility disagrees"));
        }
        if all_even && n <= DESK_SCALE {
            exact_runs += 1;
            if let Err(e) = chi_odd_exact(&g) {
                failures.push(format!("seed {seed}: {e}"));
            }
        }
    }
    Outcome::new(&failures, format!("1000 graphs, {exact_runs} exact optima"))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for seed in 0..400u64 {
        let (g, k) = if seed % 2 == 0 {
            let g = random_gnp(2 * (1 + seed as usize % 15), rng.gen_range(0.05..0.5), seed).unwrap();
            let k = bounded_degree_budget(&g);
            (g, k)
        } else {
            let g = connected(rng.gen_range(2..6), 2, &mut rng).subdivide().subdivide();
            if !even_components(&g) || g.n() > 30 {
                continue;
            }
            let k = girth7_budget(&g);
            (g, k)
        };
        match colour_with_budget_traced(&g, k) {
            Ok((c, trace)) => {
                checks += trace.checks;
                failures.extend(trace.violations.into_iter().map(|v| format!("seed {seed}: {v}")));
                if !verify_colouring(&g, &c).valid {
                    failures.push(format!("seed {seed}: invalid colouring"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    if checks == 0 {
        failures.push("no checks were run".into());
    }
    Outcome::new(&failures, format!("{checks} merge checks"))
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for seed in 0..500u64 {
        let n = 2 * (1 + seed as usize % 30);
        let (g, rep) = random_interval(n, 2 * n as u64 + seed % 60, seed + 10_000).unwrap();
        match interval_colouring_traced(&g, &rep) {
            Ok((c, trace)) => {
                checks += trace.checks;
                failures.extend(trace.violations.into_iter().map(|v| format!("seed {seed}: {v}")));
                if !verify_colouring(&g, &c).valid || c.num_classes() > 6 {
                    failures.push(format!("seed {seed}: bad colouring"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    if checks == 0 {
        failures.push("no checks were run".into());
    }
    Outcome::new(&failures, format!("500 instances, {checks} step checks"))
}

fn main() -> ExitCode {
    let mut results = vec![(1, criterion_1()), (2, criterion_2()), (3, criterion_3())];
    let mut build_failures = Vec::new();
    let instances = all_instances(&mut build_failures);
    results.push((4, criterion_4(&instances, build_failures)));
    results.push((5, criterion_5(&instances)));
    results.push((6, criterion_6()));
    results.push((7, criterion_7()));
    results.push((8, criterion_8()));
    let mut ok = true;
    for (i, r) in &results {
        println!("criterion {i}: {} {}", if r.ok { "PASS" } else { "FAIL" }, r.detail);
        ok &= r.ok;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
