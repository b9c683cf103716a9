//! Three routes to the multiplicity of a quotient by a monomial ideal.
//!
//! All three require a complete intersection of size `codimension` among the
//! minimal generators and agree on that class:
//!
//! * counting realizations of the polarization,
//! * a signed sum over subsets of the generators outside the complete
//!   intersection (dominant ideals only),
//! * a recursion that removes one such generator at a time.
//!
//! Values are `i128` with checked arithmetic; overflow is an error, never a
//! silent wrap.

use crate::error::{Error, Result};
use crate::ideal::{CIDecomposition, MonomialIdeal};
use crate::monomial::Monomial;

pub type Multiplicity = i128;

/// One signed term of the subset expansion: the generator indices of the
/// subset and its contribution (sign included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub subset: Vec<usize>,
    pub value: Multiplicity,
}

fn checked_mul(a: Multiplicity, b: Multiplicity) -> Result<Multiplicity> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplicity product"))
}

fn checked_add(a: Multiplicity, b: Multiplicity) -> Result<Multiplicity> {
    a.checked_add(b).ok_or(Error::Overflow("multiplicity sum"))
}

impl MonomialIdeal {
    /// Validates that `d` was produced for this ideal: ascending disjoint
    /// index lists covering every generator, pairwise-coprime `ci` part of
    /// size equal to the codimension.
    fn check_decomposition(&self, d: &CIDecomposition) -> Result<()> {
        let s = self.num_generators();
        let mut seen = vec![false; s];
        for &i in d.ci.iter().chain(&d.others) {
            if i >= s {
                return Err(Error::GeneratorIndex { index: i, count: s });
            }
            if seen[i] {
                return Err(Error::Precondition(format!(
                    "decomposition repeats generator index {i}"
                )));
            }
            seen[i] = true;
        }
        if !seen.iter().all(|&b| b) {
            return Err(Error::Precondition(
                "decomposition does not cover every generator".into(),
            ));
        }
        let r = self.codimension()?;
        if d.ci.len() != r {
            return Err(Error::Precondition(format!(
                "complete-intersection part has size {} but the codimension is {r}",
                d.ci.len()
            )));
        }
        for a in 0..d.ci.len() {
            for b in a + 1..d.ci.len() {
                if !self.generators()[d.ci[a]].is_coprime(&self.generators()[d.ci[b]])? {
                    return Err(Error::Precondition(format!(
                        "generators {} and {} of the decomposition are not coprime",
                        self.generators()[d.ci[a]],
                        self.generators()[d.ci[b]]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Multiplicity as the number of realizations of the polarization.
    /// Requires a complete intersection of codimension size to exist among
    /// the generators.
    pub fn multiplicity_by_realizations(&self) -> Result<Multiplicity> {
        let r = self.codimension()?;
        if self.find_ci_decomposition(None)?.is_none() {
            return Err(Error::NoCompleteIntersection { codim: r });
        }
        let count = self.polarize().realizations()?.len();
        Ok(count as Multiplicity)
    }

    /// Multiplicity as the signed sum, over subsets R of `d.others`, of
    /// prod_i deg(lcm(R, h_i) / lcm(R)) with sign (-1)^|R|. Dominant ideals
    /// only; `subset_cap` bounds |others|.
    pub fn multiplicity_by_inclusion_exclusion(
        &self,
        d: &CIDecomposition,
        subset_cap: usize,
    ) -> Result<Multiplicity> {
        self.prepare_expansion(d, subset_cap)?;
        let hs: Vec<&Monomial> = d.ci.iter().map(|&i| &self.generators()[i]).collect();
        let ms: Vec<&Monomial> = d.others.iter().map(|&i| &self.generators()[i]).collect();
        let mut acc: Multiplicity = 0;
        let one = Monomial::one(std::sync::Arc::clone(self.registry()));
        self.expansion_sum(&ms, &hs, 0, &one, 1, &mut acc)?;
        Ok(acc)
    }

    fn prepare_expansion(&self, d: &CIDecomposition, subset_cap: usize) -> Result<()> {
        if let Err(i) = self.dominance() {
            return Err(self.not_dominant_error(i));
        }
        self.check_decomposition(d)?;
        if d.others.len() > subset_cap {
            return Err(Error::SubsetCap {
                others: d.others.len(),
                cap: subset_cap,
            });
        }
        Ok(())
    }

    /// Depth-first over subsets of `ms`, carrying the running lcm so each
    /// subset costs one lcm per extension.
    fn expansion_sum(
        &self,
        ms: &[&Monomial],
        hs: &[&Monomial],
        start: usize,
        lcm_so_far: &Monomial,
        sign: Multiplicity,
        acc: &mut Multiplicity,
    ) -> Result<()> {
        let mut term = sign;
        for h in hs {
            let with_h = lcm_so_far.lcm(h)?;
            let q = with_h.quotient_degree(lcm_so_far)? as Multiplicity;
            term = checked_mul(term, q)?;
        }
        *acc = checked_add(*acc, term)?;
        for j in start..ms.len() {
            let extended = lcm_so_far.lcm(ms[j])?;
            self.expansion_sum(ms, hs, j + 1, &extended, -sign, acc)?;
        }
        Ok(())
    }

    /// The individual expansion terms, ordered by subset size and then
    /// lexicographically by the subset's generator indices. Intended for
    /// reporting; the sum of the values equals
    /// [`multiplicity_by_inclusion_exclusion`].
    pub fn inclusion_exclusion_terms(
        &self,
        d: &CIDecomposition,
        subset_cap: usize,
    ) -> Result<Vec<ExpansionTerm>> {
        self.prepare_expansion(d, subset_cap)?;
        let hs: Vec<&Monomial> = d.ci.iter().map(|&i| &self.generators()[i]).collect();
        let ms: Vec<&Monomial> = d.others.iter().map(|&i| &self.generators()[i]).collect();
        let one = Monomial::one(std::sync::Arc::clone(self.registry()));
        let mut out = Vec::new();
        for size in 0..=ms.len() {
            let mut subset = Vec::with_capacity(size);
            self.collect_terms(&ms, &hs, d, size, 0, &one, &mut subset, &mut out)?;
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn collect_terms(
        &self,
        ms: &[&Monomial],
        hs: &[&Monomial],
        d: &CIDecomposition,
        size: usize,
        start: usize,
        lcm_so_far: &Monomial,
        subset: &mut Vec<usize>,
        out: &mut Vec<ExpansionTerm>,
    ) -> Result<()> {
        if subset.len() == size {
            let sign: Multiplicity = if size % 2 == 0 { 1 } else { -1 };
            let mut term = sign;
            for h in hs {
                let with_h = lcm_so_far.lcm(h)?;
                term = checked_mul(term, with_h.quotient_degree(lcm_so_far)? as Multiplicity)?;
            }
            out.push(ExpansionTerm {
                subset: subset.iter().map(|&j| d.others[j]).collect(),
                value: term,
            });
            return Ok(());
        }
        for j in start..ms.len() {
            if ms.len() - j < size - subset.len() {
                break;
            }
            subset.push(j);
            let extended = lcm_so_far.lcm(ms[j])?;
            self.collect_terms(ms, hs, d, size, j + 1, &extended, subset, out)?;
            subset.pop();
        }
        Ok(())
    }

    /// Multiplicity by removing, at each step, the first generator outside a
    /// complete intersection: e(M) = e(M without m1) - e(M : m1), where the
    /// colon ideal is generated by lcm(l, m1)/m1 over the remaining
    /// generators. When removing m1 raises the codimension of the colon
    /// ideal, the subtrahend vanishes. The two codimension comparisons below
    /// hold whenever the preconditions do; a failure means a bug, not bad
    /// input.
    pub fn multiplicity_recursive(&self) -> Result<Multiplicity> {
        let r = self.codimension()?;
        let d = self
            .find_ci_decomposition(None)?
            .ok_or(Error::NoCompleteIntersection { codim: r })?;
        self.recurse(&d, r)
    }

    fn recurse(&self, d: &CIDecomposition, r: usize) -> Result<Multiplicity> {
        if d.others.is_empty() {
            let mut prod: Multiplicity = 1;
            for &i in &d.ci {
                prod = checked_mul(prod, self.generators()[i].degree() as Multiplicity)?;
            }
            return Ok(prod);
        }
        let m1_index = d.others[0];
        let m1 = &self.generators()[m1_index];

        let reg = std::sync::Arc::clone(self.registry());
        let remaining: Vec<Monomial> = self
            .generators()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != m1_index)
            .map(|(_, g)| g.clone())
            .collect();
        let without = MonomialIdeal::new(std::sync::Arc::clone(&reg), remaining.clone())?;
        if without.codimension()? != r {
            return Err(Error::Invariant(format!(
                "codimension changed from {r} after removing generator {m1}"
            )));
        }

        let colon_gens: Vec<Monomial> = remaining
            .iter()
            .map(|l| l.lcm(m1)?.quotient(m1))
            .collect::<Result<_>>()?;
        let colon = MonomialIdeal::new(reg, colon_gens)?;
        let colon_codim = colon.codimension()?;
        if colon_codim < r {
            return Err(Error::Invariant(format!(
                "colon ideal by {m1} has codimension {colon_codim}, below {r}"
            )));
        }

        let e_without = without.multiplicity_recursive().map_err(lost_ci)?;
        if colon_codim > r {
            return Ok(e_without);
        }
        let e_colon = colon.multiplicity_recursive().map_err(lost_ci)?;
        e_without
            .checked_sub(e_colon)
            .ok_or(Error::Overflow("multiplicity difference"))
    }
}

/// Inside the recursion a missing complete intersection cannot come from the
/// caller's input, so it is reported as an invariant failure.
fn lost_ci(e: Error) -> Error {
    match e {
        Error::NoCompleteIntersection { codim } => Error::Invariant(format!(
            "complete intersection of size {codim} vanished during recursion"
        )),
        other => other,
    }
}
