//! Randomized cross-checking harness. Samples graphs and clique-union
//! instances, then asserts the identities the crate is built on: chromatic
//! number equals codimension, the multiplicity methods agree, and on clique
//! unions the chromatic polynomial at its first positive root count equals
//! k! times the multiplicity.
//!
//! A failed assertion is reported as a counterexample with the offending
//! graph; it is not an error of the harness itself.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bridge::{chromatic_poly_at_chi, multiplicity_with_cross_check, CliqueCover};
use crate::efl::EflInstance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::json::GraphJson;
use crate::poly::chromatic_polynomial;
use crate::Caps;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest sampled vertex count; must stay within `caps.max_vars` so the
    /// brute-force coloring cross-check always runs.
    pub max_n: u32,
    pub trials: u32,
    pub seed: u64,
    pub caps: Caps,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 10,
            trials: 200,
            seed: 42,
            caps: Caps::default(),
        }
    }
}

/// One falsified assertion, with the graph that falsified it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: u32,
    pub kind: String,
    pub graph: GraphJson,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub trials: u32,
    pub random_graphs: u32,
    pub clique_instances: u32,
    pub chi_codim_confirmed: u32,
    pub identities_confirmed: u32,
    pub method_agreements: u32,
    pub counterexample: Option<Counterexample>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Headline in the "200/200 chi=codim" form, then one line per tally.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}/{} chi=codim\n",
            self.chi_codim_confirmed, self.trials
        );
        out.push_str(&format!(
            "random graphs: {}\nclique-union instances: {} ({} polynomial identities)\n",
            self.random_graphs, self.clique_instances, self.identities_confirmed
        ));
        out.push_str(&format!(
            "multiplicity method agreements: {}\n",
            self.method_agreements
        ));
        match &self.counterexample {
            None => out.push_str("no counterexample\n"),
            Some(c) => out.push_str(&format!(
                "counterexample at trial {}: {} on {:?} ({})\n",
                c.trial, c.kind, c.graph, c.detail
            )),
        }
        out
    }
}

const EDGE_DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

fn random_graph(rng: &mut ChaCha8Rng, max_n: u32, density: f64) -> Result<Graph> {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

fn random_instance(rng: &mut ChaCha8Rng, caps: &Caps) -> Result<EflInstance> {
    let k: u32 = rng.gen_range(3..=5);
    let max_cliques = if k % 2 == 1 { k + 1 } else { k };
    let s = rng.gen_range(2..=max_cliques);
    let mut pairs = Vec::new();
    for a in 1..=s {
        for b in a + 1..=s {
            pairs.push((a, b));
        }
    }
    // keep the vertex count inside the polynomial cap so the identity check
    // can always evaluate P_G
    let min_shared = (s * k).saturating_sub(caps.max_poly_vertices as u32) as usize;
    if min_shared > pairs.len() {
        return Err(Error::Precondition(format!(
            "{s} cliques of size {k} cannot fit in {} vertices",
            caps.max_poly_vertices
        )));
    }
    let count = rng.gen_range(min_shared..=pairs.len());
    pairs.shuffle(rng);
    pairs.truncate(count);
    let seed = rng.gen::<u64>();
    EflInstance::generate(k, s, &pairs, seed)
}

enum TrialOutcome {
    Pass,
    Fail { kind: String, detail: String },
}

/// chi from brute force vs codimension, plus method agreement when a
/// complete intersection exists.
fn check_graph(g: &Graph, opts: &VerifyOptions, agreements: &mut u32) -> Result<TrialOutcome> {
    let direct = g.chromatic_number_bruteforce(opts.caps.max_vars)?;
    let ideal = g.chromatic_ideal()?;
    let codim = ideal.codimension()? as u32;
    if direct != codim {
        return Ok(TrialOutcome::Fail {
            kind: "chi-codim-mismatch".into(),
            detail: format!("brute force found chi {direct}, codimension is {codim}"),
        });
    }
    if let Some(d) = ideal.find_ci_decomposition(None)? {
        match multiplicity_with_cross_check(&ideal, &d, &opts.caps) {
            Ok(_) => *agreements += 1,
            Err(Error::Invariant(detail)) => {
                return Ok(TrialOutcome::Fail {
                    kind: "method-disagreement".into(),
                    detail,
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(TrialOutcome::Pass)
}

/// Everything `check_graph` does, plus the construction-specific claims:
/// the coloring is proper with exactly k colors, chi = k, and k! times the
/// multiplicity equals the chromatic polynomial at k.
fn check_instance(
    inst: &EflInstance,
    opts: &VerifyOptions,
    agreements: &mut u32,
) -> Result<TrialOutcome> {
    let g = inst.graph();
    let k = inst.k();
    let coloring = match inst.color() {
        Ok(c) => c,
        Err(Error::Invariant(detail)) => {
            return Ok(TrialOutcome::Fail {
                kind: "improper-coloring".into(),
                detail,
            })
        }
        Err(e) => return Err(e),
    };
    if coloring.num_colors() != k {
        return Ok(TrialOutcome::Fail {
            kind: "wrong-color-count".into(),
            detail: format!("expected {k} colors, got {}", coloring.num_colors()),
        });
    }
    match check_graph(g, opts, agreements)? {
        TrialOutcome::Pass => {}
        fail => return Ok(fail),
    }
    let codim = g.chromatic_ideal()?.codimension()? as u32;
    if codim != k {
        return Ok(TrialOutcome::Fail {
            kind: "chi-codim-mismatch".into(),
            detail: format!("clique size {k} but codimension {codim}"),
        });
    }
    let cover = CliqueCover {
        cliques: inst.cliques().to_vec(),
    };
    let via_mult = match chromatic_poly_at_chi(g, &cover, &opts.caps) {
        Ok(v) => v,
        Err(Error::Invariant(detail)) => {
            return Ok(TrialOutcome::Fail {
                kind: "method-disagreement".into(),
                detail,
            })
        }
        Err(e) => return Err(e),
    };
    let direct = chromatic_polynomial(g, opts.caps.max_poly_vertices)?.eval(k as i128)?;
    if via_mult != direct {
        return Ok(TrialOutcome::Fail {
            kind: "identity-violation".into(),
            detail: format!(
                "k! * multiplicity gives {via_mult}, deletion-contraction gives {direct}"
            ),
        });
    }
    Ok(TrialOutcome::Pass)
}

/// Runs `opts.trials` checks, two thirds on random graphs and one third on
/// generated clique unions, stopping at the first counterexample.
pub fn run_verify(opts: &VerifyOptions) -> Result<VerifySummary> {
    opts.caps.validate()?;
    if opts.max_n == 0 {
        return Err(Error::Precondition("max_n must be positive".into()));
    }
    if opts.max_n as usize > opts.caps.max_vars {
        return Err(Error::Precondition(format!(
            "max_n {} exceeds the exhaustive-check cap {}",
            opts.max_n, opts.caps.max_vars
        )));
    }
    let mut summary = VerifySummary {
        trials: opts.trials,
        ..VerifySummary::default()
    };
    if opts.trials == 0 {
        return Ok(summary);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let instance_trials = opts.trials / 3;
    let graph_trials = opts.trials - instance_trials;
    for trial in 0..opts.trials {
        let (outcome, graph) = if trial < graph_trials {
            let g = random_graph(&mut rng, opts.max_n, EDGE_DENSITIES[trial as usize % 3])?;
            summary.random_graphs += 1;
            (
                check_graph(&g, opts, &mut summary.method_agreements)?,
                GraphJson::from_graph(&g),
            )
        } else {
            let inst = random_instance(&mut rng, &opts.caps)?;
            summary.clique_instances += 1;
            let graph = GraphJson::from_graph(inst.graph());
            let outcome = check_instance(&inst, opts, &mut summary.method_agreements)?;
            if matches!(outcome, TrialOutcome::Pass) {
                summary.identities_confirmed += 1;
            }
            (outcome, graph)
        };
        match outcome {
            TrialOutcome::Pass => {
                log::debug!("trial {trial}: n={} ok", graph.n);
                summary.chi_codim_confirmed += 1;
            }
            TrialOutcome::Fail { kind, detail } => {
                summary.counterexample = Some(Counterexample {
                    trial,
                    kind,
                    graph,
                    detail,
                });
                break;
            }
        }
    }
    Ok(summary)
}
