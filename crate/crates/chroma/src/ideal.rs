//! Monomial ideals given by minimal generating sets.
//!
//! A [`MonomialIdeal`] always stores the minimal generators in a canonical
//! order (by support, then exponents), so every downstream computation is
//! deterministic. Codimension is the size of a minimum variable cover of the
//! generator supports, computed exactly by branch and bound; realizations are
//! all covers of that minimum size.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarId, VarRegistry};

/// A minimum-size set of variables dividing every generator, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Realization(pub Vec<VarId>);

impl Realization {
    pub fn vars(&self) -> &[VarId] {
        &self.0
    }

    pub fn names<'r>(&self, registry: &'r VarRegistry) -> Vec<&'r str> {
        self.0.iter().map(|&v| registry.name(v)).collect()
    }

    pub fn display(&self, registry: &VarRegistry) -> String {
        format!("{{{}}}", self.names(registry).join(", "))
    }
}

/// Splits the generator indices into a pairwise-coprime part (`ci`) of size
/// equal to the codimension and the remaining indices (`others`). Both lists
/// are ascending and together cover every generator exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CIDecomposition {
    pub ci: Vec<usize>,
    pub others: Vec<usize>,
}

/// A monomial ideal held as its unique minimal generating set.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    registry: Arc<VarRegistry>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        *self.registry == *other.registry && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

/// Support lists first, then exponents. Generators never compare equal after
/// minimalization, so this yields one fixed order.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let support = a.support().cmp(b.support());
    if support != Ordering::Equal {
        return support;
    }
    a.exponents()
        .iter()
        .map(|&(_, e)| e)
        .cmp(b.exponents().iter().map(|&(_, e)| e))
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`: drops every generator divisible
    /// by another (and duplicates), then sorts canonically. An empty list
    /// yields the zero ideal.
    pub fn new(registry: Arc<VarRegistry>, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if !(Arc::ptr_eq(g.registry(), &registry) || **g.registry() == *registry) {
                return Err(Error::RegistryMismatch);
            }
        }
        let mut gens = gens;
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| canonical_cmp(a, b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // divisors have smaller or equal degree, so scanning what is
            // already kept is enough
            if !kept.iter().any(|k| k.divides(&g).unwrap_or(false)) {
                kept.push(g);
            }
        }
        kept.sort_by(canonical_cmp);
        Ok(MonomialIdeal {
            registry,
            gens: kept,
        })
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub(crate) fn reject_trivial(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(())
    }

    fn supports(&self) -> Vec<Vec<u32>> {
        self.gens
            .iter()
            .map(|g| g.support().map(|v| v.0).collect())
            .collect()
    }

    /// Height of the ideal: the minimum number of variables needed to divide
    /// every generator.
    pub fn codimension(&self) -> Result<usize> {
        self.reject_trivial()?;
        Ok(min_cover_size(&self.supports(), self.registry.len()))
    }

    /// Every variable set of minimum size dividing all generators. Defined
    /// for squarefree ideals; polarize first otherwise.
    pub fn realizations(&self) -> Result<Vec<Realization>> {
        self.reject_trivial()?;
        for g in &self.gens {
            if let Some(&(v, e)) = g.exponents().iter().find(|&&(_, e)| e > 1) {
                return Err(Error::NotSquarefree {
                    witness: self.registry.name(v).to_string(),
                    exponent: e,
                });
            }
        }
        let supports = self.supports();
        let r = min_cover_size(&supports, self.registry.len());
        let mut covers = all_min_covers(&supports, self.registry.len(), r);
        covers.sort();
        Ok(covers
            .into_iter()
            .map(|c| Realization(c.into_iter().map(VarId).collect()))
            .collect())
    }

    /// For each generator, the smallest variable whose exponent strictly
    /// exceeds that variable's exponent in every other generator; `Err` gives
    /// the index of the first generator without one.
    pub(crate) fn dominance(&self) -> std::result::Result<Vec<VarId>, usize> {
        // per variable: the largest exponent and whether it is attained twice
        let mut max1 = vec![0u32; self.registry.len()];
        let mut tied = vec![false; self.registry.len()];
        for g in &self.gens {
            for &(v, e) in g.exponents() {
                let slot = v.index();
                if e > max1[slot] {
                    max1[slot] = e;
                    tied[slot] = false;
                } else if e == max1[slot] {
                    tied[slot] = true;
                }
            }
        }
        let mut witnesses = Vec::with_capacity(self.gens.len());
        for (i, g) in self.gens.iter().enumerate() {
            let w = g
                .exponents()
                .iter()
                .find(|&&(v, e)| e == max1[v.index()] && !tied[v.index()])
                .map(|&(v, _)| v);
            match w {
                Some(v) => witnesses.push(v),
                None => return Err(i),
            }
        }
        Ok(witnesses)
    }

    /// True when every generator has a variable with strictly larger exponent
    /// than in all other generators.
    pub fn is_dominant(&self) -> bool {
        self.dominance().is_ok()
    }

    /// Witness per generator when dominant, in generator order.
    pub fn dominance_witness(&self) -> Option<Vec<VarId>> {
        self.dominance().ok()
    }

    pub(crate) fn not_dominant_error(&self, index: usize) -> Error {
        Error::NotDominant {
            generator: self.gens[index].to_string(),
        }
    }

    /// Searches for a pairwise-coprime subset of generators of size equal to
    /// the codimension. Returns the lexicographically first such subset, or
    /// `None` when no subset works (that is not an error). A `hint` of
    /// generator indices is validated instead of searched for.
    pub fn find_ci_decomposition(&self, hint: Option<&[usize]>) -> Result<Option<CIDecomposition>> {
        let r = self.codimension()?;
        let s = self.gens.len();
        if let Some(hint) = hint {
            if hint.len() != r {
                return Err(Error::InvalidHint(format!(
                    "expected {r} generator indices (the codimension), got {}",
                    hint.len()
                )));
            }
            let mut sorted = hint.to_vec();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidHint(format!("duplicate index {}", w[0])));
                }
            }
            for &i in &sorted {
                if i >= s {
                    return Err(Error::InvalidHint(format!(
                        "index {i} out of range (ideal has {s} generators)"
                    )));
                }
            }
            for a in 0..sorted.len() {
                for b in a + 1..sorted.len() {
                    let (i, j) = (sorted[a], sorted[b]);
                    if !self.gens[i].is_coprime(&self.gens[j])? {
                        return Err(Error::InvalidHint(format!(
                            "generators {} and {} are not coprime (gcd {})",
                            self.gens[i],
                            self.gens[j],
                            self.gens[i].gcd(&self.gens[j])?
                        )));
                    }
                }
            }
            let others = (0..s).filter(|i| !sorted.contains(i)).collect();
            return Ok(Some(CIDecomposition { ci: sorted, others }));
        }

        let mut coprime = vec![vec![false; s]; s];
        for i in 0..s {
            for j in i + 1..s {
                let c = self.gens[i].is_coprime(&self.gens[j])?;
                coprime[i][j] = c;
                coprime[j][i] = c;
            }
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(r);
        if !pick_coprime_subset(&coprime, s, r, 0, &mut chosen) {
            return Ok(None);
        }
        let others = (0..s).filter(|i| !chosen.contains(i)).collect();
        Ok(Some(CIDecomposition { ci: chosen, others }))
    }

    /// Replaces each variable of maximum exponent d >= 2 by d fresh variables
    /// `name#1`..`name#d`, turning exponent e into the product of the first e
    /// copies. Squarefree variables keep their names, so a squarefree ideal
    /// comes back equal. In the degenerate case where a fresh name is already
    /// taken, primes are appended until it is unique.
    pub fn polarize(&self) -> MonomialIdeal {
        let mut max_exp = vec![0u32; self.registry.len()];
        for g in &self.gens {
            for &(v, e) in g.exponents() {
                max_exp[v.index()] = max_exp[v.index()].max(e);
            }
        }
        let kept: std::collections::HashSet<&str> = self
            .registry
            .ids()
            .filter(|v| max_exp[v.index()] <= 1)
            .map(|v| self.registry.name(v))
            .collect();
        let mut new_reg = VarRegistry::new();
        let mut copies: Vec<Vec<VarId>> = Vec::with_capacity(self.registry.len());
        for v in self.registry.ids() {
            let base = self.registry.name(v);
            let d = max_exp[v.index()];
            if d <= 1 {
                copies.push(vec![new_reg.add(base).expect("kept names stay unique")]);
            } else {
                let mut ids = Vec::with_capacity(d as usize);
                for t in 1..=d {
                    let mut candidate = format!("{base}#{t}");
                    while kept.contains(candidate.as_str()) || new_reg.id_of(&candidate).is_some() {
                        candidate.push('\'');
                    }
                    ids.push(new_reg.add(candidate).expect("candidate was checked unique"));
                }
                copies.push(ids);
            }
        }
        let new_reg = Arc::new(new_reg);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let pairs = g.exponents().iter().flat_map(|&(v, e)| {
                    copies[v.index()][..e as usize].iter().map(|&c| (c, 1))
                });
                Monomial::from_exponents(Arc::clone(&new_reg), pairs)
                    .expect("copy ids come from the new registry")
            })
            .collect();
        MonomialIdeal::new(new_reg, gens).expect("polarized generators share one registry")
    }

    /// For a dominant ideal the projective dimension of the quotient equals
    /// the number of minimal generators.
    pub fn projective_dimension_dominant(&self) -> Result<usize> {
        self.reject_trivial()?;
        match self.dominance() {
            Ok(_) => Ok(self.gens.len()),
            Err(i) => Err(self.not_dominant_error(i)),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Greedy pass: repeatedly take the variable dividing the most uncovered
/// generators (smallest id on ties). Upper bound for the exact search.
fn greedy_cover_size(supports: &[Vec<u32>], nvars: usize) -> usize {
    let mut covered = vec![false; supports.len()];
    let mut remaining = supports.len();
    let mut size = 0;
    while remaining > 0 {
        let mut counts = vec![0usize; nvars];
        for (i, s) in supports.iter().enumerate() {
            if !covered[i] {
                for &v in s {
                    counts[v as usize] += 1;
                }
            }
        }
        let best = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
        debug_assert!(counts[best] > 0);
        for (i, s) in supports.iter().enumerate() {
            if !covered[i] && s.contains(&(best as u32)) {
                covered[i] = true;
                remaining -= 1;
            }
        }
        size += 1;
    }
    size
}

/// Number of pairwise-disjoint uncovered supports (each needs its own
/// variable), restricted to allowed variables. Returns `usize::MAX` when some
/// uncovered support has no allowed variable at all.
fn disjoint_lower_bound(
    supports: &[Vec<u32>],
    covered: &[u32],
    excluded: Option<&[bool]>,
    nvars: usize,
) -> usize {
    let mut used = vec![false; nvars];
    let mut bound = 0;
    for (i, s) in supports.iter().enumerate() {
        if covered[i] > 0 {
            continue;
        }
        let live: Vec<u32> = match excluded {
            Some(ex) => s.iter().copied().filter(|&v| !ex[v as usize]).collect(),
            None => s.clone(),
        };
        if live.is_empty() {
            return usize::MAX;
        }
        if live.iter().all(|&v| !used[v as usize]) {
            bound += 1;
            for &v in &live {
                used[v as usize] = true;
            }
        }
    }
    bound
}

fn smallest_uncovered(supports: &[Vec<u32>], covered: &[u32], excluded: Option<&[bool]>) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (i, s) in supports.iter().enumerate() {
        if covered[i] > 0 {
            continue;
        }
        let size = match excluded {
            Some(ex) => s.iter().filter(|&&v| !ex[v as usize]).count(),
            None => s.len(),
        };
        if best.map_or(true, |(b, _)| size < b) {
            best = Some((size, i));
        }
    }
    best.map(|(_, i)| i)
}

struct CoverSearch<'a> {
    supports: &'a [Vec<u32>],
    by_var: Vec<Vec<usize>>,
    covered: Vec<u32>,
    uncovered: usize,
    nvars: usize,
}

impl<'a> CoverSearch<'a> {
    fn new(supports: &'a [Vec<u32>], nvars: usize) -> Self {
        let mut by_var = vec![Vec::new(); nvars];
        for (i, s) in supports.iter().enumerate() {
            for &v in s {
                by_var[v as usize].push(i);
            }
        }
        CoverSearch {
            supports,
            by_var,
            covered: vec![0; supports.len()],
            uncovered: supports.len(),
            nvars,
        }
    }

    fn take(&mut self, v: u32) {
        for &g in &self.by_var[v as usize] {
            if self.covered[g] == 0 {
                self.uncovered -= 1;
            }
            self.covered[g] += 1;
        }
    }

    fn put_back(&mut self, v: u32) {
        for &g in &self.by_var[v as usize] {
            self.covered[g] -= 1;
            if self.covered[g] == 0 {
                self.uncovered += 1;
            }
        }
    }

    fn branch_and_bound(&mut self, depth: usize, best: &mut usize) {
        if self.uncovered == 0 {
            *best = (*best).min(depth);
            return;
        }
        let lb = disjoint_lower_bound(self.supports, &self.covered, None, self.nvars);
        if lb == usize::MAX || depth + lb >= *best {
            return;
        }
        let g = smallest_uncovered(self.supports, &self.covered, None).unwrap();
        for &v in &self.supports[g].clone() {
            self.take(v);
            self.branch_and_bound(depth + 1, best);
            self.put_back(v);
        }
    }

    fn enumerate(
        &mut self,
        target: usize,
        chosen: &mut Vec<u32>,
        excluded: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if self.uncovered == 0 {
            debug_assert_eq!(chosen.len(), target, "cover below the proven minimum");
            let mut c = chosen.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        if chosen.len() == target {
            return;
        }
        let lb = disjoint_lower_bound(self.supports, &self.covered, Some(excluded), self.nvars);
        if lb == usize::MAX || chosen.len() + lb > target {
            return;
        }
        let g = smallest_uncovered(self.supports, &self.covered, Some(excluded)).unwrap();
        let vars: Vec<u32> = self.supports[g]
            .iter()
            .copied()
            .filter(|&v| !excluded[v as usize])
            .collect();
        // each cover is produced exactly once: the branch for v only keeps
        // covers whose first allowed variable in this support is v
        let mut flipped = Vec::new();
        for &v in &vars {
            self.take(v);
            chosen.push(v);
            self.enumerate(target, chosen, excluded, out);
            chosen.pop();
            self.put_back(v);
            excluded[v as usize] = true;
            flipped.push(v);
        }
        for v in flipped {
            excluded[v as usize] = false;
        }
    }
}

fn min_cover_size(supports: &[Vec<u32>], nvars: usize) -> usize {
    let mut best = greedy_cover_size(supports, nvars);
    let mut search = CoverSearch::new(supports, nvars);
    search.branch_and_bound(0, &mut best);
    best
}

fn all_min_covers(supports: &[Vec<u32>], nvars: usize, target: usize) -> Vec<Vec<u32>> {
    let mut search = CoverSearch::new(supports, nvars);
    let mut out = Vec::new();
    search.enumerate(target, &mut Vec::new(), &mut vec![false; nvars], &mut out);
    out
}

/// Depth-first search over index subsets in ascending order; the first hit is
/// the lexicographically smallest pairwise-coprime subset of size `r`.
fn pick_coprime_subset(
    coprime: &[Vec<bool>],
    s: usize,
    r: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == r {
        return true;
    }
    for i in start..s {
        if s - i < r - chosen.len() {
            return false;
        }
        if chosen.iter().all(|&j| coprime[j][i]) {
            chosen.push(i);
            if pick_coprime_subset(coprime, s, r, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
