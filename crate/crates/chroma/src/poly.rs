//! Dense integer polynomials in one variable and exact chromatic
//! polynomials.
//!
//! Coefficients are `i128` with checked arithmetic throughout; any overflow
//! surfaces as an error rather than wrapping.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, BITSET_VERTEX_CAP};

/// Polynomial with coefficient of t^d at index d; no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<i128>,
}

fn mul_i128(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("polynomial coefficient"))
}

fn add_i128(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("polynomial coefficient"))
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: i128) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// t
    pub fn t() -> Poly {
        Poly::from_coeffs(vec![0, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficients by ascending degree, without trailing zeros.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let mut coeffs = vec![0i128; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *c = add_i128(a, b)?;
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = add_i128(coeffs[i + j], mul_i128(a, b)?)?;
            }
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// (t + c)
    pub fn linear(c: i128) -> Poly {
        Poly::from_coeffs(vec![c, 1])
    }

    pub fn pow(&self, mut e: u32) -> Result<Poly> {
        let mut base = self.clone();
        let mut acc = Poly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// t (t-1) (t-2) ... (t-k+1)
    pub fn falling_factorial(k: u32) -> Result<Poly> {
        let mut acc = Poly::constant(1);
        for i in 0..k {
            acc = acc.mul(&Poly::linear(-(i as i128)))?;
        }
        Ok(acc)
    }

    pub fn eval(&self, t: i128) -> Result<i128> {
        let mut acc = 0i128;
        for &c in self.coeffs.iter().rev() {
            acc = add_i128(mul_i128(acc, t)?, c)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact chromatic polynomial by deletion and contraction, with memoization
/// on the compacted adjacency encoding, component splitting, and closed
/// forms for edgeless, complete, tree, and cycle leaves. `max_vertices`
/// bounds the input size.
pub fn chromatic_polynomial(g: &Graph, max_vertices: usize) -> Result<Poly> {
    let n = g.n() as usize;
    if n > max_vertices.min(BITSET_VERTEX_CAP) {
        return Err(Error::SizeCap {
            n,
            cap: max_vertices.min(BITSET_VERTEX_CAP),
            what: "chromatic polynomial",
        });
    }
    let mut adj = vec![0u64; n];
    for (i, j) in g.edges() {
        adj[(i - 1) as usize] |= 1 << (j - 1);
        adj[(j - 1) as usize] |= 1 << (i - 1);
    }
    let mut memo = HashMap::new();
    chromatic_rec(adj, &mut memo)
}

/// Number of proper colorings with exactly `t` colors available.
pub fn count_colorings(g: &Graph, t: i128, max_vertices: usize) -> Result<i128> {
    chromatic_polynomial(g, max_vertices)?.eval(t)
}

fn chromatic_rec(adj: Vec<u64>, memo: &mut HashMap<Vec<u64>, Poly>) -> Result<Poly> {
    let n = adj.len();
    if n == 0 {
        return Ok(Poly::constant(1));
    }
    if let Some(hit) = memo.get(&adj) {
        return Ok(hit.clone());
    }

    let p = compute_form(&adj, memo)?;
    memo.insert(adj, p.clone());
    Ok(p)
}

fn compute_form(adj: &[u64], memo: &mut HashMap<Vec<u64>, Poly>) -> Result<Poly> {
    let n = adj.len();
    let edge_count: u32 = adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2;

    if edge_count == 0 {
        return Poly::t().pow(n as u32);
    }
    if edge_count as usize == n * (n - 1) / 2 {
        return Poly::falling_factorial(n as u32);
    }

    // split off connected components first
    let comps = components(adj);
    if comps.len() > 1 {
        let mut acc = Poly::constant(1);
        for comp in comps {
            let sub = induced(adj, &comp);
            acc = acc.mul(&chromatic_rec(sub, memo)?)?;
        }
        return Ok(acc);
    }

    if edge_count as usize == n - 1 {
        // connected with n-1 edges: a tree
        return Poly::t().mul(&Poly::linear(-1).pow(n as u32 - 1)?);
    }
    if edge_count as usize == n && adj.iter().all(|a| a.count_ones() == 2) {
        // connected, every degree 2: a cycle
        let body = Poly::linear(-1).pow(n as u32)?;
        let tail = if n % 2 == 0 {
            Poly::linear(-1)
        } else {
            Poly::linear(-1).neg()
        };
        return body.add(&tail);
    }

    // delete and contract an edge at a maximum-degree vertex
    let u = (0..n)
        .max_by_key(|&v| (adj[v].count_ones(), std::cmp::Reverse(v)))
        .unwrap();
    let v = adj[u].trailing_zeros() as usize;

    let mut deleted = adj.to_vec();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    let p_del = chromatic_rec(deleted, memo)?;

    let p_con = chromatic_rec(contract(adj, u, v), memo)?;
    p_del.sub(&p_con)
}

fn components(adj: &[u64]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            let mut nb = adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn induced(adj: &[u64], keep: &[usize]) -> Vec<u64> {
    let mut sub = vec![0u64; keep.len()];
    for (a, &va) in keep.iter().enumerate() {
        for (b, &vb) in keep.iter().enumerate() {
            if a != b && adj[va] >> vb & 1 == 1 {
                sub[a] |= 1 << b;
            }
        }
    }
    sub
}

/// Merge v into u, dropping v's slot; parallel edges collapse because the
/// adjacency is a bitset.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let merged_u = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    let keep: Vec<usize> = (0..adj.len()).filter(|&w| w != v).collect();
    let mut out = vec![0u64; keep.len()];
    for (a, &va) in keep.iter().enumerate() {
        for (b, &vb) in keep.iter().enumerate() {
            if a == b {
                continue;
            }
            let connected = if va == u {
                merged_u >> vb & 1 == 1
            } else if vb == u {
                merged_u >> va & 1 == 1
            } else {
                adj[va] >> vb & 1 == 1
            };
            if connected {
                out[a] |= 1 << b;
            }
        }
    }
    out
}
