//! End-to-end acceptance checks. Each test covers one shipped guarantee and
//! prints a single `acceptance NN: pass` line, so a `--nocapture` run reads
//! as a checklist. The numbering fixes the order of the checklist, nothing
//! else.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use chroma::bridge::{chromatic_number_via_codim, chromatic_poly_at_chi, CliqueCover};
use chroma::efl::{pair_sum_coloring, pair_sum_coloring_extended, EflInstance};
use chroma::graph::{graph_from_ideal, parse_edge_list};
use chroma::poly::chromatic_polynomial;
use chroma::{Caps, Graph, Monomial, MonomialIdeal, VarRegistry, DEFAULT_SUBSET_CAP};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn hexagon() -> Graph {
    parse_edge_list("6 8\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n2 5\n1 5\n").unwrap()
}

fn triangle_chain() -> Graph {
    parse_edge_list("6 9\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n1 5\n5 6\n1 6\n").unwrap()
}

fn bowtie() -> Graph {
    parse_edge_list("5 6\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n").unwrap()
}

fn all_pairs(s: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 1..=s {
        for b in (a + 1)..=s {
            out.push((a, b));
        }
    }
    out
}

/// The fixed sample behind the chi = codim sweep: 510 graphs, 170 per edge
/// density, vertex counts up to `max_n`.
fn density_sample(max_n: u32) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::with_capacity(510);
    for trial in 0..510 {
        let density = [0.2, 0.5, 0.8][trial % 3];
        let n = rng.gen_range(1..=max_n);
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.gen_bool(density) {
                    edges.push((i, j));
                }
            }
        }
        out.push(Graph::new(n, edges).unwrap());
    }
    out
}

/// 120 clique-union instances with k in {3,4,5}, small enough for the
/// polynomial solver (n <= 16). Shared pairs are sampled uniformly above the
/// forced minimum.
fn clique_union_sample() -> Vec<EflInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut out = Vec::with_capacity(120);
    while out.len() < 120 {
        let k: u32 = rng.gen_range(3..=5);
        let max_s = if k % 2 == 1 { k + 1 } else { k };
        let s: u32 = rng.gen_range(2..=max_s);
        let mut pairs = all_pairs(s);
        let min_shared = (s * k).saturating_sub(16) as usize;
        let count = rng.gen_range(min_shared..=pairs.len());
        pairs.shuffle(&mut rng);
        pairs.truncate(count);
        out.push(EflInstance::generate(k, s, &pairs, rng.gen()).unwrap());
    }
    out
}

#[test]
fn acceptance_01_hexagon_ideal_matches_the_renamed_generators() {
    let start = Instant::now();
    let g = hexagon();
    assert_eq!(
        g.maximal_independent_sets().unwrap(),
        vec![
            vec![1, 3],
            vec![1, 4],
            vec![2, 4, 6],
            vec![3, 5],
            vec![3, 6],
        ]
    );
    let m = g.chromatic_ideal().unwrap();
    let rename: BTreeMap<&str, char> = [
        ("v1", 'f'),
        ("v2", 'g'),
        ("v3", 'h'),
        ("v4", 'i'),
        ("v5", 'j'),
        ("v6", 'k'),
        ("w{1,3}", 'a'),
        ("w{1,4}", 'b'),
        ("w{2,4,6}", 'c'),
        ("w{3,5}", 'd'),
        ("w{3,6}", 'e'),
    ]
    .into_iter()
    .collect();
    let got: BTreeSet<BTreeSet<char>> = m
        .generators()
        .iter()
        .map(|gen| {
            gen.exponents()
                .iter()
                .map(|&(v, _)| rename[m.registry().name(v)])
                .collect()
        })
        .collect();
    let want: BTreeSet<BTreeSet<char>> = ["fab", "gc", "hade", "ibc", "jd", "kce"]
        .iter()
        .map(|s| s.chars().collect())
        .collect();
    assert_eq!(got, want);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1));
    println!(
        "acceptance 01: pass (6 generators match under renaming, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_02_triangle_chain_terms_and_polynomial() {
    let start = Instant::now();
    let g = triangle_chain();
    assert_eq!(chromatic_number_via_codim(&g).unwrap(), 3);

    let m = g.chromatic_ideal().unwrap();
    assert_eq!(m.realizations().unwrap().len(), 1);
    let d = m.find_ci_decomposition(Some(&[0, 1, 2])).unwrap().unwrap();
    assert_eq!(d.ci, vec![0, 1, 2]);

    let by_recursion = m.multiplicity_recursive().unwrap();
    let by_realizations = m.multiplicity_by_realizations().unwrap();
    let by_sum = m
        .multiplicity_by_inclusion_exclusion(&d, DEFAULT_SUBSET_CAP)
        .unwrap();
    assert_eq!(by_recursion, 1);
    assert_eq!(by_realizations, 1);
    assert_eq!(by_sum, 1);

    let terms = m.inclusion_exclusion_terms(&d, DEFAULT_SUBSET_CAP).unwrap();
    let values: Vec<i128> = terms.iter().map(|t| t.value).collect();
    assert_eq!(values, vec![12, -4, -8, -4, 2, 2, 2, -1]);
    assert_eq!(values.iter().sum::<i128>(), 1);

    let p = chromatic_polynomial(&g, 16).unwrap();
    assert_eq!(p.eval(3).unwrap(), 6);
    let cover = CliqueCover {
        cliques: vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6]],
    };
    assert_eq!(
        chromatic_poly_at_chi(&g, &cover, &Caps::default()).unwrap(),
        6
    );

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1));
    println!(
        "acceptance 02: pass (terms 12,-4,-8,-4,+2,+2,+2,-1 sum to 1; P(3) = 6, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_03_bowtie_realizations_and_multiplicity() {
    let start = Instant::now();
    let g = bowtie();
    assert_eq!(chromatic_number_via_codim(&g).unwrap(), 3);

    let m = g.chromatic_ideal().unwrap();
    let got: BTreeSet<BTreeSet<String>> = m
        .realizations()
        .unwrap()
        .iter()
        .map(|r| r.names(m.registry()).into_iter().map(String::from).collect())
        .collect();
    let want: BTreeSet<BTreeSet<String>> = [
        ["v3", "w{1,4}", "w{2,5}"],
        ["v3", "w{1,5}", "w{2,4}"],
    ]
    .iter()
    .map(|names| names.iter().map(|s| s.to_string()).collect())
    .collect();
    assert_eq!(got, want);

    let d = m.find_ci_decomposition(None).unwrap().unwrap();
    assert_eq!(m.multiplicity_recursive().unwrap(), 2);
    assert_eq!(m.multiplicity_by_realizations().unwrap(), 2);
    assert_eq!(
        m.multiplicity_by_inclusion_exclusion(&d, DEFAULT_SUBSET_CAP)
            .unwrap(),
        2
    );
    assert_eq!(chromatic_polynomial(&g, 16).unwrap().eval(3).unwrap(), 12);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1));
    println!(
        "acceptance 03: pass (both realizations found, multiplicity 2, P(3) = 12, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_04_chi_equals_codim_across_densities() {
    let start = Instant::now();
    let graphs = density_sample(10);
    assert!(graphs.len() >= 500);
    for (i, g) in graphs.iter().enumerate() {
        let via_codim = chromatic_number_via_codim(g).unwrap();
        let direct = g.chromatic_number_bruteforce(20).unwrap();
        assert_eq!(via_codim, direct, "graph {i} with n = {}", g.n());
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300));
    println!(
        "acceptance 04: pass ({}/{} graphs agree, {} ms)",
        graphs.len(),
        graphs.len(),
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_05_factorial_multiplicity_counts_colorings() {
    let start = Instant::now();
    let instances = clique_union_sample();
    assert!(instances.len() >= 100);
    let caps = Caps::default();
    for (i, inst) in instances.iter().enumerate() {
        let k = inst.k();
        let g = inst.graph();
        assert_eq!(
            g.chromatic_number_bruteforce(16).unwrap(),
            k,
            "instance {i}"
        );
        let cover = CliqueCover {
            cliques: inst.cliques().to_vec(),
        };
        let from_multiplicity = chromatic_poly_at_chi(g, &cover, &caps).unwrap();
        let from_polynomial = chromatic_polynomial(g, caps.max_poly_vertices)
            .unwrap()
            .eval(k as i128)
            .unwrap();
        assert_eq!(from_multiplicity, from_polynomial, "instance {i} (k = {k})");
    }
    let elapsed = start.elapsed();
    println!(
        "acceptance 05: pass (k! * e = P(k) on {} instances, {} ms)",
        instances.len(),
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_06_multiplicity_methods_agree_on_random_ideals() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut accepted = 0usize;
    let mut dominant = 0usize;
    let mut attempts = 0usize;
    while accepted < 200 {
        attempts += 1;
        assert!(attempts < 4000, "sampler keeps rejecting ideals");

        let nv: usize = rng.gen_range(6..=20);
        let reg = Arc::new(
            VarRegistry::from_names((1..=nv).map(|i| format!("x{i}"))).unwrap(),
        );
        let ids: Vec<_> = reg.ids().collect();
        let mut shuffled = ids.clone();
        shuffled.shuffle(&mut rng);

        // pairwise-coprime seed generators on disjoint variable groups
        let c = rng.gen_range(1..=5.min(nv / 2));
        let mut gens: Vec<Monomial> = Vec::new();
        for group in shuffled.chunks(nv / c).take(c) {
            let width = rng.gen_range(1..=2.min(group.len()));
            let exps: Vec<_> = group[..width]
                .iter()
                .map(|&v| (v, rng.gen_range(1..=3u32)))
                .collect();
            gens.push(Monomial::from_exponents(Arc::clone(&reg), exps).unwrap());
        }
        for _ in 0..rng.gen_range(0..=5usize) {
            let width = rng.gen_range(1..=3usize);
            let mut vars = ids.clone();
            vars.shuffle(&mut rng);
            let exps: Vec<_> = vars[..width]
                .iter()
                .map(|&v| (v, rng.gen_range(1..=3u32)))
                .collect();
            gens.push(Monomial::from_exponents(Arc::clone(&reg), exps).unwrap());
        }

        let m = MonomialIdeal::new(reg, gens).unwrap();
        assert!(m.num_generators() <= 10);
        let Some(d) = m.find_ci_decomposition(None).unwrap() else {
            continue;
        };
        accepted += 1;

        let recursive = m.multiplicity_recursive().expect("recursion stays valid");
        let by_realizations = m.multiplicity_by_realizations().unwrap();
        assert_eq!(recursive, by_realizations, "ideal {accepted}");
        if m.is_dominant() {
            dominant += 1;
            let by_sum = m
                .multiplicity_by_inclusion_exclusion(&d, DEFAULT_SUBSET_CAP)
                .unwrap();
            assert_eq!(by_sum, recursive, "ideal {accepted}");
        }
    }
    let elapsed = start.elapsed();
    println!(
        "acceptance 06: pass ({accepted} ideals, {dominant} dominant, methods agree, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_07_pair_tables_stay_disjoint_and_match_print() {
    let start = Instant::now();

    for k in 2..=50 {
        let f = pair_sum_coloring(k).unwrap();
        assert!(f.classes_are_disjoint(), "k = {k}");
        assert_eq!(f.table().len(), (k * (k - 1) / 2) as usize);
    }
    for k in (3..=49u32).step_by(2) {
        let h = pair_sum_coloring_extended(k).unwrap();
        assert!(h.classes_are_disjoint(), "k = {k}");
        assert_eq!(h.table().len(), ((k + 1) * k / 2) as usize);
    }

    // two colors cannot split the three pairwise-intersecting pairs on
    // {1,2,3}: check all eight assignments
    let pairs = [(1u32, 2u32), (1, 3), (2, 3)];
    for assignment in 0..8u32 {
        let color = |i: usize| (assignment >> i) & 1;
        let clash = (0..3).any(|i| {
            (i + 1..3).any(|j| {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                color(i) == color(j) && (a == c || a == d || b == c || b == d)
            })
        });
        assert!(clash, "assignment {assignment:03b} would be a valid table");
    }

    let f7: BTreeMap<(u32, u32), u32> = [
        ((3, 4), 0),
        ((2, 5), 0),
        ((1, 6), 0),
        ((3, 5), 1),
        ((2, 6), 1),
        ((1, 7), 1),
        ((4, 5), 2),
        ((3, 6), 2),
        ((2, 7), 2),
        ((4, 6), 3),
        ((3, 7), 3),
        ((1, 2), 3),
        ((5, 6), 4),
        ((4, 7), 4),
        ((1, 3), 4),
        ((5, 7), 5),
        ((2, 3), 5),
        ((1, 4), 5),
        ((6, 7), 6),
        ((2, 4), 6),
        ((1, 5), 6),
    ]
    .into_iter()
    .collect();
    assert_eq!(*pair_sum_coloring(7).unwrap().table(), f7);

    let mut h7 = f7.clone();
    for (pair, color) in [
        ((7, 8), 0),
        ((4, 8), 1),
        ((1, 8), 2),
        ((5, 8), 3),
        ((2, 8), 4),
        ((6, 8), 5),
        ((3, 8), 6),
    ] {
        h7.insert(pair, color);
    }
    assert_eq!(*pair_sum_coloring_extended(7).unwrap().table(), h7);

    let elapsed = start.elapsed();
    println!(
        "acceptance 07: pass (disjoint classes through k = 50, no 2-color table, k = 7 tables match, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_08_full_overlap_instances_color_with_k_colors() {
    let start = Instant::now();
    for k in [3u32, 5, 7] {
        let s = k + 1;
        let inst = EflInstance::generate(k, s, &all_pairs(s), 0).unwrap();
        let coloring = inst.color().unwrap();
        assert_eq!(coloring.num_colors(), k);
        for (u, v) in inst.graph().edges() {
            assert_ne!(
                coloring.color(u).unwrap(),
                coloring.color(v).unwrap(),
                "edge ({u},{v}) with k = {k}"
            );
        }
        // the first clique is complete, so k colors are also necessary
        for window in inst.cliques()[0].windows(2) {
            assert!(inst.graph().has_edge(window[0], window[1]));
        }
        if k == 3 {
            assert_eq!(chromatic_number_via_codim(inst.graph()).unwrap(), 3);
        }
        if k == 5 {
            assert_eq!(inst.graph().chromatic_number_bruteforce(16).unwrap(), 5);
        }
    }
    let elapsed = start.elapsed();
    println!(
        "acceptance 08: pass (k-colorings verified edge-by-edge for k = 3, 5, 7, {} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_09_ideal_round_trip_is_the_identity() {
    let start = Instant::now();
    let mut graphs = density_sample(10);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..30 {
        let density = [0.2, 0.5, 0.8][trial % 3];
        let n = rng.gen_range(11..=12);
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.gen_bool(density) {
                    edges.push((i, j));
                }
            }
        }
        graphs.push(Graph::new(n, edges).unwrap());
    }
    for (i, g) in graphs.iter().enumerate() {
        let back = graph_from_ideal(&g.chromatic_ideal().unwrap()).unwrap();
        assert_eq!(back, *g, "graph {i}");
    }
    let elapsed = start.elapsed();
    println!(
        "acceptance 09: pass (round trip on {} graphs up to n = 12, {} ms)",
        graphs.len(),
        elapsed.as_millis()
    );
}

#[test]
fn acceptance_10_report_and_verify_are_deterministic() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("chain.txt");
    std::fs::write(
        &graph_path,
        "6 9\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n1 5\n5 6\n1 6\n",
    )
    .unwrap();
    let cover_path = dir.path().join("cover.json");
    std::fs::write(&cover_path, r#"{"cliques":[[1,2,3],[3,4,5],[1,5,6]]}"#).unwrap();

    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_chroma"))
            .args(args)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };

    let report_args = [
        "report",
        graph_path.to_str().unwrap(),
        "--cover",
        cover_path.to_str().unwrap(),
    ];
    let first = run(&report_args);
    let second = run(&report_args);
    assert_eq!(first, second, "report output drifted between runs");
    assert!(!first.is_empty());

    let verify_args = ["verify", "--trials", "40", "--seed", "42", "--max-n", "8"];
    let first = run(&verify_args);
    let second = run(&verify_args);
    assert_eq!(first, second, "verify output drifted between runs");
    assert!(!first.is_empty());

    let elapsed = start.elapsed();
    println!(
        "acceptance 10: pass (report and verify byte-identical across runs, {} ms)",
        elapsed.as_millis()
    );
}
