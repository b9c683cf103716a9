//! The graph-to-ideal correspondences: chromatic number as codimension,
//! optimal-coloring configurations as realizations, and the chromatic
//! polynomial at its first positive argument as a scaled multiplicity.
//!
//! The multiplicity identity needs the graph to be a union of k-cliques with
//! k equal to the chromatic number, so the cover is taken as input and
//! validated rather than searched for.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{CIDecomposition, MonomialIdeal};
use crate::multiplicity::Multiplicity;
use crate::Caps;

/// With this many generators or fewer outside the complete intersection, all
/// three multiplicity methods run and must agree; above it only the
/// recursive method runs.
pub const CROSS_CHECK_MAX_OTHERS: usize = 16;

/// Vertex sets that each induce a complete subgraph, jointly covering every
/// vertex, all of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub cliques: Vec<Vec<u32>>,
}

impl CliqueCover {
    /// Checks the cover against `g` and returns the common clique size.
    pub fn validate(&self, g: &Graph) -> Result<u32> {
        if self.cliques.is_empty() {
            return Err(Error::InvalidCover("the cover lists no cliques".into()));
        }
        let k = self.cliques[0].len();
        if k == 0 {
            return Err(Error::InvalidCover("a clique is empty".into()));
        }
        let mut covered = vec![false; g.n() as usize];
        for (t, clique) in self.cliques.iter().enumerate() {
            if clique.len() != k {
                return Err(Error::InvalidCover(format!(
                    "clique {} has {} vertices but clique 0 has {k}",
                    t,
                    clique.len()
                )));
            }
            for (a, &u) in clique.iter().enumerate() {
                if u == 0 || u > g.n() {
                    return Err(Error::InvalidCover(format!(
                        "clique {t} lists vertex {u}, outside 1..={}",
                        g.n()
                    )));
                }
                covered[(u - 1) as usize] = true;
                for &v in &clique[a + 1..] {
                    if u == v {
                        return Err(Error::InvalidCover(format!(
                            "clique {t} repeats vertex {u}"
                        )));
                    }
                    if !g.has_edge(u, v) {
                        return Err(Error::InvalidCover(format!(
                            "vertices {u} and {v} of clique {t} are not adjacent"
                        )));
                    }
                }
            }
        }
        if let Some(missing) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidCover(format!(
                "vertex {} is not covered",
                missing + 1
            )));
        }
        Ok(k as u32)
    }
}

/// Chromatic number computed purely on the ideal side.
pub fn chromatic_number_via_codim(g: &Graph) -> Result<u32> {
    Ok(g.chromatic_ideal()?.codimension()? as u32)
}

/// Trivial upper bound for the chromatic number: the projective dimension of
/// the vertex-generator ideal, which always equals the vertex count.
pub fn pd_upper_bound(g: &Graph) -> Result<usize> {
    g.chromatic_ideal()?.projective_dimension_dominant()
}

fn check_cover_matches_chi(g: &Graph, cover: &CliqueCover) -> Result<u32> {
    let k = cover.validate(g)?;
    let chi = chromatic_number_via_codim(g)?;
    if k != chi {
        return Err(Error::Precondition(format!(
            "cover cliques have size {k} but the chromatic number is {chi}"
        )));
    }
    Ok(k)
}

/// Number of partitions of the vertices into chi(G) independent sets,
/// counted as realizations of the vertex-generator ideal. The cover
/// certifies the clique-union hypothesis behind that equality.
pub fn configurations_count(g: &Graph, cover: &CliqueCover) -> Result<usize> {
    check_cover_matches_chi(g, cover)?;
    Ok(g.chromatic_ideal()?.realizations()?.len())
}

fn factorial(k: u32) -> Result<Multiplicity> {
    let mut acc: Multiplicity = 1;
    for i in 2..=k as Multiplicity {
        acc = acc.checked_mul(i).ok_or(Error::Overflow("factorial"))?;
    }
    Ok(acc)
}

/// Per-method multiplicity values; a method is `None` when it was not run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityByMethod {
    pub realizations: Option<Multiplicity>,
    pub inclusion_exclusion: Option<Multiplicity>,
    pub recursive: Option<Multiplicity>,
}

/// Runs the recursive method, and the other two when the decomposition is
/// small enough; the subset expansion additionally needs dominance. Any
/// disagreement is an internal error.
pub fn multiplicity_with_cross_check(
    m: &MonomialIdeal,
    d: &CIDecomposition,
    caps: &Caps,
) -> Result<(Multiplicity, MultiplicityByMethod)> {
    let recursive = m.multiplicity_recursive()?;
    let mut methods = MultiplicityByMethod {
        realizations: None,
        inclusion_exclusion: None,
        recursive: Some(recursive),
    };
    if d.others.len() <= CROSS_CHECK_MAX_OTHERS.min(caps.max_subsets) {
        let by_real = m.multiplicity_by_realizations()?;
        if by_real != recursive {
            return Err(Error::Invariant(format!(
                "multiplicity methods disagree: realizations {by_real}, recursive {recursive}"
            )));
        }
        methods.realizations = Some(by_real);
        if m.is_dominant() {
            let by_sum = m.multiplicity_by_inclusion_exclusion(d, caps.max_subsets)?;
            if by_sum != recursive {
                return Err(Error::Invariant(format!(
                    "multiplicity methods disagree: subset expansion {by_sum}, \
                     recursive {recursive}"
                )));
            }
            methods.inclusion_exclusion = Some(by_sum);
        }
    }
    Ok((recursive, methods))
}

fn hint_from_cover(cover: &CliqueCover) -> Vec<usize> {
    cover.cliques[0].iter().map(|&v| (v - 1) as usize).collect()
}

/// P_G evaluated at chi(G), computed as chi! times the ideal multiplicity.
/// The first cover clique doubles as the complete-intersection hint.
pub fn chromatic_poly_at_chi(g: &Graph, cover: &CliqueCover, caps: &Caps) -> Result<Multiplicity> {
    let k = check_cover_matches_chi(g, cover)?;
    let m = g.chromatic_ideal()?;
    let d = m
        .find_ci_decomposition(Some(&hint_from_cover(cover)))?
        .ok_or_else(|| Error::Invariant("cover clique not accepted as hint".into()))?;
    let (e, _) = multiplicity_with_cross_check(&m, &d, caps)?;
    factorial(k)?
        .checked_mul(e)
        .ok_or(Error::Overflow("chromatic polynomial value"))
}

/// Everything the correspondence yields for one graph, in one pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    pub chi: u32,
    pub codim: u32,
    pub mult: Option<Multiplicity>,
    pub mult_by_method: MultiplicityByMethod,
    pub realizations_count: usize,
    pub p_at_chi: Option<Multiplicity>,
    pub clique_cover_used: Option<CliqueCover>,
}

impl BridgeReport {
    /// Computes chi and codim (cross-checked against a direct coloring
    /// search when the graph is small enough), the realization count, and
    /// the multiplicity when a complete intersection exists. `p_at_chi`
    /// needs the clique-union hypothesis, so it is only filled in when a
    /// cover is supplied; the cover also serves as the decomposition hint.
    pub fn compute(g: &Graph, cover: Option<CliqueCover>, caps: &Caps) -> Result<BridgeReport> {
        caps.validate()?;
        let m = g.chromatic_ideal()?;
        let codim = m.codimension()? as u32;
        if g.n() as usize <= caps.max_vars {
            let direct = g.chromatic_number_bruteforce(caps.max_vars)?;
            if direct != codim {
                return Err(Error::Invariant(format!(
                    "chromatic number {direct} differs from codimension {codim}"
                )));
            }
        }
        let realizations_count = m.realizations()?.len();

        let (mult, mult_by_method, p_at_chi) = match &cover {
            Some(cover) => {
                let k = check_cover_matches_chi(g, cover)?;
                let d = m
                    .find_ci_decomposition(Some(&hint_from_cover(cover)))?
                    .ok_or_else(|| Error::Invariant("cover clique not accepted as hint".into()))?;
                let (e, methods) = multiplicity_with_cross_check(&m, &d, caps)?;
                let p = factorial(k)?
                    .checked_mul(e)
                    .ok_or(Error::Overflow("chromatic polynomial value"))?;
                (Some(e), methods, Some(p))
            }
            None => match m.find_ci_decomposition(None)? {
                Some(d) => {
                    let (e, methods) = multiplicity_with_cross_check(&m, &d, caps)?;
                    (Some(e), methods, None)
                }
                None => (
                    None,
                    MultiplicityByMethod {
                        realizations: None,
                        inclusion_exclusion: None,
                        recursive: None,
                    },
                    None,
                ),
            },
        };

        log::debug!(
            "report for n={}: chi={codim}, {realizations_count} realizations",
            g.n()
        );
        Ok(BridgeReport {
            chi: codim,
            codim,
            mult,
            mult_by_method,
            realizations_count,
            p_at_chi,
            clique_cover_used: cover,
        })
    }
}
