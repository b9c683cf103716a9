//! Finite simple graphs on vertices 1..n, their maximal independent sets,
//! and the two-way translation between graphs and squarefree monomial ideals.
//!
//! The translation assigns one variable to every vertex singleton and one to
//! every maximal independent set; the generator of vertex i is the product of
//! the variables whose set contains i. Coprimality of two generators is then
//! exactly adjacency, which is what makes the ideal recover the graph.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarId, VarRegistry};

/// Largest vertex count the bitset-based enumerations accept.
pub const BITSET_VERTEX_CAP: usize = 64;

/// Simple undirected graph. Vertices are 1..=n; edges are stored as
/// (min, max) pairs with no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j {
                return Err(Error::Precondition(format!("loop edge at vertex {i}")));
            }
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexRange {
                        vertex: v,
                        n: n as usize,
                    });
                }
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn complete(n: u32) -> Result<Graph> {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph::new(n, edges)
    }

    pub fn edgeless(n: u32) -> Result<Graph> {
        Graph::new(n, [])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn degree(&self, v: u32) -> Result<usize> {
        if v == 0 || v > self.n {
            return Err(Error::VertexRange {
                vertex: v,
                n: self.n as usize,
            });
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count())
    }

    pub fn complement(&self) -> Graph {
        let edges = (1..=self.n)
            .flat_map(|i| (i + 1..=self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j));
        Graph {
            n: self.n,
            edges: edges.collect(),
        }
    }

    fn adjacency_bitsets(&self) -> Result<Vec<u64>> {
        let n = self.n as usize;
        if n > BITSET_VERTEX_CAP {
            return Err(Error::SizeCap {
                n,
                cap: BITSET_VERTEX_CAP,
                what: "bitset adjacency",
            });
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in &self.edges {
            adj[(i - 1) as usize] |= 1 << (j - 1);
            adj[(j - 1) as usize] |= 1 << (i - 1);
        }
        Ok(adj)
    }

    /// All maximal independent sets, each sorted ascending, the list sorted
    /// lexicographically. Clique enumeration on the complement with pivoting.
    pub fn maximal_independent_sets(&self) -> Result<Vec<Vec<u32>>> {
        let n = self.n as usize;
        let adj = self.adjacency_bitsets()?;
        let co_adj: Vec<u64> = (0..n)
            .map(|i| {
                let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
                all & !adj[i] & !(1u64 << i)
            })
            .collect();
        let mut found = Vec::new();
        let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
        max_cliques(&co_adj, 0, all, 0, &mut found);
        let mut out: Vec<Vec<u32>> = found.iter().map(|&s| bits_to_vertices(s)).collect();
        out.sort();
        Ok(out)
    }

    /// The "one variable per vertex, one per maximal independent set" ideal.
    /// Variables are named "v{i}" and "w{a,b,...}"; when a singleton {i} is
    /// itself maximal the two coincide and only "v{i}" exists. Generators
    /// come out in vertex order.
    pub fn chromatic_ideal(&self) -> Result<MonomialIdeal> {
        let omega = self.maximal_independent_sets()?;
        let non_singletons: Vec<&Vec<u32>> = omega.iter().filter(|s| s.len() > 1).collect();
        let mut names: Vec<String> = (1..=self.n).map(|i| format!("v{i}")).collect();
        for s in &non_singletons {
            let inner: Vec<String> = s.iter().map(u32::to_string).collect();
            names.push(format!("w{{{}}}", inner.join(",")));
        }
        let registry = Arc::new(VarRegistry::from_names(names.iter().map(String::as_str))?);
        let mut gens = Vec::with_capacity(self.n as usize);
        for i in 1..=self.n {
            let mut exps = vec![(VarId(i - 1), 1)];
            for (t, s) in non_singletons.iter().enumerate() {
                if s.binary_search(&i).is_ok() {
                    exps.push((VarId(self.n + t as u32), 1));
                }
            }
            gens.push(Monomial::from_exponents(Arc::clone(&registry), exps)?);
        }
        MonomialIdeal::new(registry, gens)
    }

    /// Like [`chromatic_ideal`] but without the singleton factors, then
    /// minimalized; generators may collapse.
    ///
    /// [`chromatic_ideal`]: Graph::chromatic_ideal
    pub fn independence_cover_ideal(&self) -> Result<MonomialIdeal> {
        let omega = self.maximal_independent_sets()?;
        let mut names = Vec::new();
        for s in &omega {
            if s.len() == 1 {
                names.push(format!("v{}", s[0]));
            } else {
                let inner: Vec<String> = s.iter().map(u32::to_string).collect();
                names.push(format!("w{{{}}}", inner.join(",")));
            }
        }
        let registry = Arc::new(VarRegistry::from_names(names.iter().map(String::as_str))?);
        let mut gens = Vec::with_capacity(self.n as usize);
        for i in 1..=self.n {
            let exps = omega
                .iter()
                .enumerate()
                .filter(|(_, s)| s.binary_search(&i).is_ok())
                .map(|(t, _)| (VarId(t as u32), 1));
            gens.push(Monomial::from_exponents(Arc::clone(&registry), exps)?);
        }
        MonomialIdeal::new(registry, gens)
    }

    /// Exact chromatic number by backtracking color search, independent of
    /// any ideal computation. `max_vertices` bounds the input size.
    pub fn chromatic_number_bruteforce(&self, max_vertices: usize) -> Result<u32> {
        let n = self.n as usize;
        if n > max_vertices.min(BITSET_VERTEX_CAP) {
            return Err(Error::SizeCap {
                n,
                cap: max_vertices.min(BITSET_VERTEX_CAP),
                what: "brute-force coloring",
            });
        }
        let adj = self.adjacency_bitsets()?;
        // color high-degree vertices first; ties by index for determinism
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
        for k in 1..=self.n {
            if try_color(&adj, &order, k) {
                return Ok(k);
            }
        }
        unreachable!("n colors always suffice")
    }
}

fn bits_to_vertices(bits: u64) -> Vec<u32> {
    let mut s = bits;
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        out.push(s.trailing_zeros() + 1);
        s &= s - 1;
    }
    out
}

/// Bron-Kerbosch with the max-degree pivot; `r` grows toward a maximal
/// clique, `p` holds candidates, `x` holds excluded vertices.
fn max_cliques(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let mut pivot = 0usize;
    let mut best = -1i64;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let c = (p & adj[u]).count_ones() as i64;
        if c > best {
            best = c;
            pivot = u;
        }
    }
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let vb = 1u64 << v;
        max_cliques(adj, r | vb, p & adj[v], x & adj[v], out);
        p &= !vb;
        x |= vb;
    }
}

fn try_color(adj: &[u64], order: &[usize], k: u32) -> bool {
    fn go(adj: &[u64], order: &[usize], k: u32, pos: usize, colors: &mut [u32], used: u32) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let mut forbidden = 0u64;
        for (&u, &c) in order[..pos].iter().zip(colors[..pos].iter()) {
            if adj[v] >> u & 1 == 1 {
                forbidden |= 1 << c;
            }
        }
        // allowing one color beyond those used so far breaks color symmetry
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if forbidden >> c & 1 == 0 {
                colors[pos] = c;
                if go(adj, order, k, pos + 1, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0u32; order.len()];
    go(adj, order, k, 0, &mut colors, 0)
}

/// Inverts the vertex-to-generator translation: generator i becomes vertex
/// i+1 and coprime generator pairs become edges. The input must carry the
/// full incidence structure of some graph (validated by recomputing it), not
/// just any squarefree ideal. Registry variables dividing no generator are
/// ignored.
pub fn graph_from_ideal(m: &MonomialIdeal) -> Result<Graph> {
    let g = reconstruct(m)?;
    validate_incidence(m, &g)?;
    Ok(g)
}

fn reconstruct(m: &MonomialIdeal) -> Result<Graph> {
    m.reject_trivial()?;
    if !m.is_squarefree() {
        return Err(Error::Precondition(
            "not a graph ideal: a generator has an exponent above 1".into(),
        ));
    }
    let n = m.num_generators();
    if n > u32::MAX as usize {
        return Err(Error::Precondition("too many generators".into()));
    }
    let gens = m.generators();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if gens[i].is_coprime(&gens[j])? {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    Graph::new(n as u32, edges)
}

fn validate_incidence(m: &MonomialIdeal, g: &Graph) -> Result<()> {
    let n = m.num_generators();
    let mut incidence: BTreeMap<VarId, Vec<u32>> = BTreeMap::new();
    for (i, gen) in m.generators().iter().enumerate() {
        for v in gen.support() {
            incidence.entry(v).or_default().push(i as u32 + 1);
        }
    }
    let mut family = BTreeSet::new();
    for (v, members) in incidence {
        if !family.insert(members.clone()) {
            return Err(Error::Precondition(format!(
                "not a graph ideal: variable {} duplicates another variable's incidence",
                m.registry().name(v)
            )));
        }
    }
    let mut expected: BTreeSet<Vec<u32>> = (1..=n as u32).map(|i| vec![i]).collect();
    for s in g.maximal_independent_sets()? {
        expected.insert(s);
    }
    if family != expected {
        let missing = expected.difference(&family).next();
        let extra = family.difference(&expected).next();
        return Err(Error::Precondition(format!(
            "not a graph ideal: incidence family mismatch (missing {missing:?}, unexpected {extra:?})"
        )));
    }
    Ok(())
}

/// Degree of vertex i read off the ideal alone: the number of other
/// generators coprime to generator i.
pub fn vertex_degree_from_ideal(m: &MonomialIdeal, i: u32) -> Result<usize> {
    let n = m.num_generators();
    if i == 0 || i as usize > n {
        return Err(Error::VertexRange { vertex: i, n });
    }
    let gens = m.generators();
    let me = &gens[(i - 1) as usize];
    let mut count = 0;
    for (j, other) in gens.iter().enumerate() {
        if j != (i - 1) as usize && me.is_coprime(other)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Vertex-indexed coloring with colors 0..num_colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    num_colors: u32,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(num_colors: u32, colors: Vec<u32>) -> Result<Coloring> {
        if colors.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(Error::Precondition(format!(
                "color {c} out of range 0..{num_colors}"
            )));
        }
        Ok(Coloring { num_colors, colors })
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: u32) -> Result<u32> {
        if v == 0 || v as usize > self.colors.len() {
            return Err(Error::VertexRange {
                vertex: v,
                n: self.colors.len(),
            });
        }
        Ok(self.colors[(v - 1) as usize])
    }

    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        if g.n() as usize != self.colors.len() {
            return Err(Error::Precondition(format!(
                "coloring covers {} vertices but the graph has {}",
                self.colors.len(),
                g.n()
            )));
        }
        Ok(g.edges()
            .all(|(i, j)| self.colors[(i - 1) as usize] != self.colors[(j - 1) as usize]))
    }

    /// Nonempty color classes in color order, each sorted ascending.
    pub fn configuration(&self) -> Vec<Vec<u32>> {
        let mut classes = vec![Vec::new(); self.num_colors as usize];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c as usize].push(i as u32 + 1);
        }
        classes.retain(|cl| !cl.is_empty());
        classes
    }
}

/// First line "n m", then m lines "i j". Blank lines are permitted and
/// skipped; anything else after the m edges is an error.
pub fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut lines = significant_lines(input);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let (n, m) = two_integers(line_no, header, "header")?;
    if n == 0 {
        return Err(parse_err(line_no, "graph must have at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m as usize);
    let mut last_line = line_no;
    for _ in 0..m {
        let (ln, text) = lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("expected {m} edge lines")))?;
        let (i, j) = two_integers(ln, text, "edge")?;
        edges.push(check_edge(ln, n, i, j)?);
        last_line = ln;
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected content after the last edge"));
    }
    finish_graph(n, edges)
}

/// DIMACS coloring format: "c" comment lines, one "p edge n m" line, then
/// exactly m "e i j" lines.
pub fn parse_dimacs(input: &str) -> Result<Graph> {
    let mut header: Option<(usize, u32, u32)> = None;
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (ln, text) in significant_lines(input) {
        last_line = ln;
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(ln, "second \"p\" line"));
                }
                if tokens.next() != Some("edge") {
                    return Err(parse_err(ln, "expected \"p edge n m\""));
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 2 {
                    return Err(parse_err(ln, "expected \"p edge n m\""));
                }
                let n = integer(ln, rest[0], "vertex count")?;
                let m = integer(ln, rest[1], "edge count")?;
                if n == 0 {
                    return Err(parse_err(ln, "graph must have at least one vertex"));
                }
                header = Some((ln, n, m));
            }
            Some("e") => {
                let (_, n, m) = header
                    .ok_or_else(|| parse_err(ln, "\"e\" line before the \"p edge\" header"))?;
                if edges.len() as u32 == m {
                    return Err(parse_err(ln, format!("more than {m} edge lines")));
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 2 {
                    return Err(parse_err(ln, "expected \"e i j\""));
                }
                let i = integer(ln, rest[0], "vertex")?;
                let j = integer(ln, rest[1], "vertex")?;
                edges.push(check_edge(ln, n, i, j)?);
            }
            Some(other) => {
                let first = other.chars().next().unwrap();
                if first == 'c' {
                    continue;
                }
                return Err(parse_err(ln, format!("unrecognized line type {other:?}")));
            }
            None => {}
        }
    }
    let (hl, n, m) = header.ok_or_else(|| parse_err(last_line, "missing \"p edge n m\" line"))?;
    if edges.len() as u32 != m {
        return Err(parse_err(
            hl,
            format!("header promises {m} edges but {} were given", edges.len()),
        ));
    }
    finish_graph(n, edges)
}

/// Auto-detects the two formats: DIMACS when the first significant line
/// starts with "c" or "p".
pub fn parse_graph_auto(input: &str) -> Result<Graph> {
    match significant_lines(input).next() {
        Some((_, text)) if text.starts_with('c') || text.starts_with('p') => parse_dimacs(input),
        _ => parse_edge_list(input),
    }
}

fn significant_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn integer(line: usize, token: &str, what: &str) -> Result<u32> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {token:?}")))
}

fn two_integers(line: usize, text: &str, what: &str) -> Result<(u32, u32)> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(parse_err(
            line,
            format!("{what} line must have exactly two integers"),
        ));
    }
    Ok((
        integer(line, tokens[0], "integer")?,
        integer(line, tokens[1], "integer")?,
    ))
}

fn check_edge(line: usize, n: u32, i: u32, j: u32) -> Result<(u32, u32)> {
    if i == j {
        return Err(parse_err(line, format!("loop edge at vertex {i}")));
    }
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
        }
    }
    Ok((i, j))
}

fn finish_graph(n: u32, edges: Vec<(u32, u32)>) -> Result<Graph> {
    Graph::new(n, edges)
}
