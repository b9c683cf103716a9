//! Clique-union instances in which cliques pairwise share at most one vertex
//! and no vertex lies in more than two cliques, plus the explicit coloring
//! constructions for them.
//!
//! The colorings come from functions on index pairs: color {i,j} by a sum
//! modulo k. Whenever two pairs share an index they land in different color
//! classes, which is exactly what makes the induced vertex coloring proper.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Which pair-coloring construction produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairColoringKind {
    /// {i,j} from {1..k} colored (i+j) mod k.
    SumMod,
    /// {s,t} from {1..k+1}, k odd, with the extra index handled by doubling.
    ExtendedSumMod,
}

/// Coloring of unordered index pairs such that every color class consists of
/// pairwise-disjoint pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairColoring {
    colors: u32,
    kind: PairColoringKind,
    table: BTreeMap<(u32, u32), u32>,
}

impl PairColoring {
    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn kind(&self) -> PairColoringKind {
        self.kind
    }

    /// Table keyed by (smaller, larger) index.
    pub fn table(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.table
    }

    pub fn color_of(&self, i: u32, j: u32) -> Option<u32> {
        self.table.get(&(i.min(j), i.max(j))).copied()
    }

    /// True when no two pairs of the same color share an index.
    pub fn classes_are_disjoint(&self) -> bool {
        let mut seen: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
        for (&pair, &c) in &self.table {
            seen.entry(c).or_default().push(pair);
        }
        seen.values().all(|pairs| {
            pairs.iter().enumerate().all(|(a, &(i, j))| {
                pairs[a + 1..]
                    .iter()
                    .all(|&(s, t)| i != s && i != t && j != s && j != t)
            })
        })
    }
}

/// Colors every 2-subset {i,j} of {1..k} with (i+j) mod k. Each color class
/// is a partial matching on indices.
pub fn pair_sum_coloring(k: u32) -> Result<PairColoring> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "pair coloring needs k >= 2, got {k}"
        )));
    }
    let mut table = BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            table.insert((i, j), (i + j) % k);
        }
    }
    Ok(PairColoring {
        colors: k,
        kind: PairColoringKind::SumMod,
        table,
    })
}

/// Extends the sum coloring to 2-subsets of {1..k+1} while keeping color
/// classes disjoint; possible exactly when k is odd. Pairs {s, k+1} take
/// 2s for s <= (k-1)/2, then 2s-k up to s = k-1, and 0 for s = k.
pub fn pair_sum_coloring_extended(k: u32) -> Result<PairColoring> {
    if k % 2 == 0 {
        return Err(Error::EvenCaseImpossible { k: k as usize });
    }
    if k < 3 {
        return Err(Error::Precondition(format!(
            "extended pair coloring needs odd k >= 3, got {k}"
        )));
    }
    let mut table = BTreeMap::new();
    for s in 1..=k + 1 {
        for t in s + 1..=k + 1 {
            let color = if t <= k {
                (s + t) % k
            } else if s <= (k - 1) / 2 {
                2 * s
            } else if s <= k - 1 {
                2 * s - k
            } else {
                0
            };
            table.insert((s, t), color);
        }
    }
    Ok(PairColoring {
        colors: k,
        kind: PairColoringKind::ExtendedSumMod,
        table,
    })
}

/// Union of same-size cliques where any two cliques share at most one vertex
/// and every vertex lies in at most two cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EflInstance {
    k: u32,
    cliques: Vec<Vec<u32>>,
    graph: Graph,
    shared: BTreeMap<u32, (u32, u32)>,
}

impl EflInstance {
    /// Validates the clique list and derives the graph and the map from each
    /// twice-covered vertex to its (1-based) pair of clique indices.
    /// Vertex labels must be exactly 1..n.
    pub fn new(k: u32, cliques: Vec<Vec<u32>>) -> Result<EflInstance> {
        if k == 0 {
            return Err(Error::Precondition("clique size must be positive".into()));
        }
        if cliques.is_empty() {
            return Err(Error::Precondition("instance needs at least one clique".into()));
        }
        let mut cliques: Vec<Vec<u32>> = cliques;
        let mut memberships: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (t, clique) in cliques.iter_mut().enumerate() {
            clique.sort_unstable();
            if clique.len() != k as usize {
                return Err(Error::Precondition(format!(
                    "clique {t} has {} vertices, expected {k}",
                    clique.len()
                )));
            }
            if clique.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Precondition(format!("clique {t} repeats a vertex")));
            }
            for &v in clique.iter() {
                memberships.entry(v).or_default().push(t as u32 + 1);
            }
        }
        let n = *memberships.keys().last().unwrap();
        if memberships.keys().copied().ne(1..=n) {
            return Err(Error::Precondition(
                "vertex labels must be exactly 1..n with no gaps".into(),
            ));
        }
        let mut shared = BTreeMap::new();
        for (&v, in_cliques) in &memberships {
            match in_cliques.as_slice() {
                [_] => {}
                [a, b] => {
                    shared.insert(v, (*a, *b));
                }
                more => {
                    return Err(Error::Precondition(format!(
                        "vertex {v} lies in {} cliques, at most two are allowed",
                        more.len()
                    )));
                }
            }
        }
        for a in 0..cliques.len() {
            for b in a + 1..cliques.len() {
                let common = cliques[a]
                    .iter()
                    .filter(|v| cliques[b].binary_search(v).is_ok())
                    .count();
                if common > 1 {
                    return Err(Error::Precondition(format!(
                        "cliques {a} and {b} share {common} vertices, at most one is allowed"
                    )));
                }
            }
        }
        let edges = cliques.iter().flat_map(|clique| {
            clique
                .iter()
                .enumerate()
                .flat_map(|(i, &u)| clique[i + 1..].iter().map(move |&v| (u, v)))
        });
        let graph = Graph::new(n, edges)?;
        Ok(EflInstance {
            k,
            cliques,
            graph,
            shared,
        })
    }

    /// Builds an instance with one fresh shared vertex per requested pair of
    /// cliques and fresh private vertices in the remaining slots, then
    /// relabels all vertices by a seed-determined permutation.
    pub fn generate(
        k: u32,
        num_cliques: u32,
        intersection_pairs: &[(u32, u32)],
        seed: u64,
    ) -> Result<EflInstance> {
        if k == 0 || num_cliques == 0 {
            return Err(Error::Precondition(
                "clique size and clique count must be positive".into(),
            ));
        }
        let mut pairs = BTreeSet::new();
        for &(a, b) in intersection_pairs {
            if a == b {
                return Err(Error::Precondition(format!(
                    "pair ({a},{b}) does not join two distinct cliques"
                )));
            }
            for c in [a, b] {
                if c == 0 || c > num_cliques {
                    return Err(Error::Precondition(format!(
                        "pair references clique {c}, but there are {num_cliques} cliques"
                    )));
                }
            }
            pairs.insert((a.min(b), a.max(b)));
        }
        let mut load = vec![0u32; num_cliques as usize + 1];
        for &(a, b) in &pairs {
            load[a as usize] += 1;
            load[b as usize] += 1;
        }
        for c in 1..=num_cliques {
            if load[c as usize] > k {
                return Err(Error::SlotOverflow {
                    clique: c as usize,
                    needed: load[c as usize] as usize,
                    slots: k as usize,
                });
            }
        }
        let n = num_cliques * k - pairs.len() as u32;
        let mut labels: Vec<u32> = (1..=n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        labels.shuffle(&mut rng);
        // raw ids: shared vertices take 1..=p in sorted pair order, privates
        // follow clique by clique
        let mut cliques: Vec<Vec<u32>> = vec![Vec::with_capacity(k as usize); num_cliques as usize];
        for (t, &(a, b)) in pairs.iter().enumerate() {
            let label = labels[t];
            cliques[(a - 1) as usize].push(label);
            cliques[(b - 1) as usize].push(label);
        }
        let mut next = pairs.len();
        for clique in cliques.iter_mut() {
            while clique.len() < k as usize {
                clique.push(labels[next]);
                next += 1;
            }
        }
        log::debug!(
            "generated {num_cliques} cliques of size {k} on {n} vertices, {} shared",
            pairs.len()
        );
        EflInstance::new(k, cliques)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn num_cliques(&self) -> u32 {
        self.cliques.len() as u32
    }

    pub fn cliques(&self) -> &[Vec<u32>] {
        &self.cliques
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Twice-covered vertices and their (1-based) clique index pairs.
    pub fn shared(&self) -> &BTreeMap<u32, (u32, u32)> {
        &self.shared
    }

    /// Proper k-coloring by table lookup on shared vertices and
    /// lowest-unused-color fill on the rest. Supported regimes: at most k
    /// cliques (sum coloring) or exactly k+1 cliques with k odd (extended).
    /// The result is verified edge by edge before it is returned.
    pub fn color(&self) -> Result<Coloring> {
        let k = self.k;
        let s = self.num_cliques();
        if s > k + 1 {
            return Err(Error::Unsupported(format!(
                "{s} cliques of size {k}: colorings are constructed for at most {} cliques",
                k + 1
            )));
        }
        if s == k + 1 && k % 2 == 0 {
            return Err(Error::EvenCaseImpossible { k: k as usize });
        }
        let table = if self.shared.is_empty() {
            None
        } else if s <= k {
            Some(pair_sum_coloring(k)?)
        } else {
            Some(pair_sum_coloring_extended(k)?)
        };
        let n = self.graph.n();
        let mut colors: Vec<Option<u32>> = vec![None; n as usize];
        for (&v, &(a, b)) in &self.shared {
            let table = table.as_ref().expect("shared vertices imply a table");
            let c = table.color_of(a, b).ok_or_else(|| {
                Error::Invariant(format!("pair ({a},{b}) missing from the color table"))
            })?;
            colors[(v - 1) as usize] = Some(c);
        }
        for clique in &self.cliques {
            let used: BTreeSet<u32> = clique
                .iter()
                .filter_map(|&v| colors[(v - 1) as usize])
                .collect();
            let shared_count = clique
                .iter()
                .filter(|&&v| colors[(v - 1) as usize].is_some())
                .count();
            if used.len() != shared_count {
                return Err(Error::Invariant(
                    "two shared vertices of one clique received the same color".into(),
                ));
            }
            let mut free = (0..k).filter(|c| !used.contains(c));
            for &v in clique {
                if colors[(v - 1) as usize].is_none() {
                    colors[(v - 1) as usize] = Some(free.next().expect("clique has k slots"));
                }
            }
        }
        let colors: Vec<u32> = colors
            .into_iter()
            .map(|c| c.expect("every vertex lies in a clique"))
            .collect();
        let coloring = Coloring::new(k, colors)?;
        if !coloring.is_proper(&self.graph)? {
            return Err(Error::Invariant(
                "constructed coloring is not proper".into(),
            ));
        }
        Ok(coloring)
    }
}
