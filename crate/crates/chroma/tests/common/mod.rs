//! Brute-force reference implementations used to cross-check the library.
//! Each is written as directly as possible from the definitions and shares
//! no code with the crate under test.

use std::collections::BTreeSet;

use chroma::{Graph, MonomialIdeal, Multiplicity, VarId};

/// Every maximal independent set, found by scanning all vertex subsets.
pub fn naive_maximal_independent_sets(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    assert!(n <= 20, "subset scan needs a small graph");
    let independent = |mask: u32| {
        for i in 1..=n {
            for j in i + 1..=n {
                if mask & (1 << (i - 1)) != 0 && mask & (1 << (j - 1)) != 0 && g.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if !independent(mask) {
            continue;
        }
        let extendable = (1..=n)
            .any(|v| mask & (1 << (v - 1)) == 0 && independent(mask | 1 << (v - 1)));
        if !extendable {
            out.push((1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect());
        }
    }
    out.sort();
    out
}

/// Number of proper colorings with colors 0..t, by trying every assignment.
pub fn naive_coloring_count(g: &Graph, t: u32) -> u64 {
    if t == 0 {
        return 0;
    }
    let n = g.n() as usize;
    assert!((t as u64).pow(n as u32) <= 100_000_000, "assignment scan too big");
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let mut assignment = vec![0u32; n];
    let mut count = 0;
    loop {
        if edges
            .iter()
            .all(|&(a, b)| assignment[(a - 1) as usize] != assignment[(b - 1) as usize])
        {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            assignment[pos] += 1;
            if assignment[pos] < t {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

fn covers_all(set: &[VarId], supports: &[Vec<VarId>]) -> bool {
    supports
        .iter()
        .all(|s| s.iter().any(|v| set.contains(v)))
}

fn combinations(vars: &[VarId], k: usize) -> Vec<Vec<VarId>> {
    fn rec(vars: &[VarId], k: usize, start: usize, cur: &mut Vec<VarId>, out: &mut Vec<Vec<VarId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..vars.len() {
            if vars.len() - i < k - cur.len() {
                break;
            }
            cur.push(vars[i]);
            rec(vars, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All smallest variable sets meeting every generator's support, by trying
/// subsets in increasing size.
pub fn naive_minimum_covers(m: &MonomialIdeal) -> Vec<Vec<VarId>> {
    assert!(!m.is_zero() && !m.is_unit());
    let supports: Vec<Vec<VarId>> = m.generators().iter().map(|g| g.support().collect()).collect();
    let vars: Vec<VarId> = supports
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for k in 1..=vars.len() {
        let covers: Vec<Vec<VarId>> = combinations(&vars, k)
            .into_iter()
            .filter(|c| covers_all(c, &supports))
            .collect();
        if !covers.is_empty() {
            return covers;
        }
    }
    unreachable!("the full variable set always covers");
}

/// Standard monomials of the ideal restricted to the variables of `a`,
/// which is finite exactly because `a` is a minimal cover.
fn localized_length(m: &MonomialIdeal, a: &[VarId]) -> Multiplicity {
    let restricted: Vec<Vec<(usize, u32)>> = m
        .generators()
        .iter()
        .map(|g| {
            a.iter()
                .enumerate()
                .filter_map(|(idx, &v)| {
                    let e = g.exponent(v);
                    (e > 0).then_some((idx, e))
                })
                .collect()
        })
        .collect();
    let mut bounds: Vec<Option<u32>> = vec![None; a.len()];
    for r in &restricted {
        if let [(idx, e)] = r.as_slice() {
            let b = bounds[*idx].get_or_insert(*e);
            *b = (*b).min(*e);
        }
    }
    let bounds: Vec<u32> = bounds
        .into_iter()
        .map(|b| b.expect("minimal cover leaves a pure power on every variable"))
        .collect();
    let mut u = vec![0u32; a.len()];
    let mut count: Multiplicity = 0;
    loop {
        let in_ideal = restricted
            .iter()
            .any(|r| r.iter().all(|&(idx, e)| u[idx] >= e));
        if !in_ideal {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == a.len() {
                return count;
            }
            u[pos] += 1;
            if u[pos] < bounds[pos] {
                break;
            }
            u[pos] = 0;
            pos += 1;
        }
    }
}

/// Multiplicity by the additivity formula: the sum, over the minimal primes
/// of largest dimension (one per minimum cover), of the length of the
/// localization there.
pub fn hilbert_multiplicity(m: &MonomialIdeal) -> Multiplicity {
    naive_minimum_covers(m)
        .iter()
        .map(|a| localized_length(m, a))
        .sum()
}
