//! Digraph and balanced bipartite digraph representations.
//!
//! Graphs are immutable after construction; every query is pure. Arcs are
//! stored as adjacency matrices in both directions so that the arc
//! indicator and in-/out-neighbor iteration are O(1) and O(n).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Partite set of a bipartite digraph vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A vertex of a balanced bipartite digraph, written `x<i>` or `y<j>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BVertex {
    pub side: Side,
    pub index: usize,
}

impl BVertex {
    pub fn x(index: usize) -> Self {
        BVertex { side: Side::X, index }
    }

    pub fn y(index: usize) -> Self {
        BVertex { side: Side::Y, index }
    }
}

impl fmt::Display for BVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::X => write!(f, "x{}", self.index),
            Side::Y => write!(f, "y{}", self.index),
        }
    }
}

impl FromStr for BVertex {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (side, rest) = match s.as_bytes().first() {
            Some(b'x') => (Side::X, &s[1..]),
            Some(b'y') => (Side::Y, &s[1..]),
            _ => return Err(ParseError::BadVertexToken(s.to_string())),
        };
        let index = rest
            .parse::<usize>()
            .map_err(|_| ParseError::BadVertexToken(s.to_string()))?;
        Ok(BVertex { side, index })
    }
}

impl Serialize for BVertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BVertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {0}: malformed line {1:?}")]
    MalformedLine(usize, String),
    #[error("missing header line")]
    MissingHeader,
    #[error("line {0}: unknown header {1:?}")]
    UnknownHeader(usize, String),
    #[error("bad vertex token {0:?}")]
    BadVertexToken(String),
    #[error("line {0}: vertex index out of range in {1:?}")]
    IndexOutOfRange(usize, String),
    #[error("line {0}: arc {1} joins two vertices on the same side")]
    SameSideArc(usize, String),
    #[error("line {0}: duplicate arc {1}")]
    DuplicateArc(usize, String),
    #[error("line {0}: loop arc {1}")]
    LoopArc(usize, String),
    #[error("order must be positive")]
    ZeroOrder,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for order {order}")]
    VertexOutOfRange { index: usize, order: usize },
    #[error("arc {0} -> {1} joins two vertices on the same side")]
    SameSideArc(String, String),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(String, String),
    #[error("loop at vertex {0}")]
    LoopArc(String),
}

/// Validation failures for [`Cycle`] / digraph cycle candidates.
#[derive(Debug, Error)]
pub enum CycleError {
    #[error("cycle must have at least 2 vertices, got {0}")]
    TooShort(usize),
    #[error("repeated vertex {0} in cycle")]
    RepeatedVertex(String),
    #[error("missing arc {0} -> {1} in host graph")]
    MissingArc(String, String),
    #[error("vertex {0} out of range for host graph")]
    VertexOutOfRange(String),
}

/// Balanced bipartite digraph with partite sets X, Y of equal size `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDigraph {
    a: usize,
    /// xy[i][j] = arc x_i -> y_j present.
    xy: Vec<Vec<bool>>,
    /// yx[j][i] = arc y_j -> x_i present.
    yx: Vec<Vec<bool>>,
}

impl BipartiteDigraph {
    pub fn new(a: usize) -> Self {
        assert!(a > 0, "half-order must be positive");
        BipartiteDigraph {
            a,
            xy: vec![vec![false; a]; a],
            yx: vec![vec![false; a]; a],
        }
    }

    /// Half-order: |X| = |Y| = a.
    pub fn half_order(&self) -> usize {
        self.a
    }

    pub fn order(&self) -> usize {
        2 * self.a
    }

    pub fn check_vertex(&self, v: BVertex) -> Result<(), GraphError> {
        if v.index >= self.a {
            return Err(GraphError::VertexOutOfRange { index: v.index, order: self.a });
        }
        Ok(())
    }

    pub fn add_arc(&mut self, tail: BVertex, head: BVertex) -> Result<(), GraphError> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        if tail.side == head.side {
            if tail.index == head.index {
                return Err(GraphError::LoopArc(tail.to_string()));
            }
            return Err(GraphError::SameSideArc(tail.to_string(), head.to_string()));
        }
        let slot = match tail.side {
            Side::X => &mut self.xy[tail.index][head.index],
            Side::Y => &mut self.yx[tail.index][head.index],
        };
        if *slot {
            return Err(GraphError::DuplicateArc(tail.to_string(), head.to_string()));
        }
        *slot = true;
        Ok(())
    }

    /// Adds both `u -> w` and `w -> u`, skipping arcs already present.
    pub fn add_two_cycle(&mut self, u: BVertex, w: BVertex) -> Result<(), GraphError> {
        if !self.has_arc(u, w) {
            self.add_arc(u, w)?;
        }
        if !self.has_arc(w, u) {
            self.add_arc(w, u)?;
        }
        Ok(())
    }

    pub fn has_arc(&self, tail: BVertex, head: BVertex) -> bool {
        if tail.index >= self.a || head.index >= self.a || tail.side == head.side {
            return false;
        }
        match tail.side {
            Side::X => self.xy[tail.index][head.index],
            Side::Y => self.yx[tail.index][head.index],
        }
    }

    /// Arc indicator a[u, v]: 1 iff the arc u -> v is present.
    pub fn arc_indicator(&self, tail: BVertex, head: BVertex) -> u32 {
        assert!(tail != head, "arc indicator requires distinct vertices");
        self.has_arc(tail, head) as u32
    }

    pub fn out_degree(&self, v: BVertex) -> usize {
        match v.side {
            Side::X => self.xy[v.index].iter().filter(|&&b| b).count(),
            Side::Y => self.yx[v.index].iter().filter(|&&b| b).count(),
        }
    }

    pub fn in_degree(&self, v: BVertex) -> usize {
        match v.side {
            Side::X => (0..self.a).filter(|&j| self.yx[j][v.index]).count(),
            Side::Y => (0..self.a).filter(|&i| self.xy[i][v.index]).count(),
        }
    }

    pub fn degree(&self, v: BVertex) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    pub fn out_neighbors(&self, v: BVertex) -> impl Iterator<Item = BVertex> + '_ {
        let side = v.side.opposite();
        let row: &Vec<bool> = match v.side {
            Side::X => &self.xy[v.index],
            Side::Y => &self.yx[v.index],
        };
        row.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(j, _)| BVertex { side, index: j })
    }

    pub fn in_neighbors(&self, v: BVertex) -> impl Iterator<Item = BVertex> + '_ {
        let side = v.side.opposite();
        let a = self.a;
        let idx = v.index;
        let vside = v.side;
        (0..a)
            .filter(move |&k| match vside {
                Side::X => self.yx[k][idx],
                Side::Y => self.xy[k][idx],
            })
            .map(move |k| BVertex { side, index: k })
    }

    pub fn vertices(&self) -> impl Iterator<Item = BVertex> {
        let a = self.a;
        (0..a)
            .map(BVertex::x)
            .chain((0..a).map(BVertex::y))
    }

    /// Arcs in serialization order: (tail-side, tail-index, head-side, head-index).
    pub fn arcs(&self) -> Vec<(BVertex, BVertex)> {
        let mut out = Vec::new();
        for i in 0..self.a {
            for j in 0..self.a {
                if self.xy[i][j] {
                    out.push((BVertex::x(i), BVertex::y(j)));
                }
            }
        }
        for j in 0..self.a {
            for i in 0..self.a {
                if self.yx[j][i] {
                    out.push((BVertex::y(j), BVertex::x(i)));
                }
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        let fwd: usize = self.xy.iter().flatten().filter(|&&b| b).count();
        let back: usize = self.yx.iter().flatten().filter(|&&b| b).count();
        fwd + back
    }

    /// General-digraph view: x_i maps to i, y_j maps to a + j.
    pub fn to_general(&self) -> Digraph {
        let mut g = Digraph::new(2 * self.a);
        for (tail, head) in self.arcs() {
            g.add_arc(self.general_index(tail), self.general_index(head))
                .expect("bipartite arcs are valid in the general view");
        }
        g
    }

    pub fn general_index(&self, v: BVertex) -> usize {
        match v.side {
            Side::X => v.index,
            Side::Y => self.a + v.index,
        }
    }

    pub fn from_general_index(&self, i: usize) -> BVertex {
        if i < self.a {
            BVertex::x(i)
        } else {
            BVertex::y(i - self.a)
        }
    }

    pub fn strongly_connected(&self) -> bool {
        self.to_general().strongly_connected()
    }

    /// Subdigraph induced by `s`, in the general-index view. Vertices are
    /// renumbered by their position in the sorted set.
    pub fn induced_subdigraph(&self, s: &[BVertex]) -> Digraph {
        let indices: Vec<usize> = s.iter().map(|&v| self.general_index(v)).collect();
        self.to_general().induced_subdigraph(&indices)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("bdg {}\n", self.a);
        for (tail, head) in self.arcs() {
            out.push_str(&format!("{tail} {head}\n"));
        }
        out
    }

    /// Checks the cycle invariants against this graph: length >= 2,
    /// distinct vertices, every consecutive arc (wrapping) present.
    pub fn validate_cycle(&self, vertices: &[BVertex]) -> Result<(), CycleError> {
        if vertices.len() < 2 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in vertices {
            if v.index >= self.a {
                return Err(CycleError::VertexOutOfRange(v.to_string()));
            }
            if !seen.insert(v) {
                return Err(CycleError::RepeatedVertex(v.to_string()));
            }
        }
        for w in 0..vertices.len() {
            let tail = vertices[w];
            let head = vertices[(w + 1) % vertices.len()];
            if !self.has_arc(tail, head) {
                return Err(CycleError::MissingArc(tail.to_string(), head.to_string()));
            }
        }
        Ok(())
    }
}

/// A validated cycle in a bipartite host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<BVertex>,
}

impl Cycle {
    pub fn new(host: &BipartiteDigraph, vertices: Vec<BVertex>) -> Result<Self, CycleError> {
        host.validate_cycle(&vertices)?;
        Ok(Cycle { vertices })
    }

    /// Length of the cycle (= number of arcs = number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[BVertex] {
        &self.vertices
    }
}

/// General digraph on vertices 0..n, no loops, no duplicate arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        Digraph { n, adj: vec![vec![false; n]; n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) -> Result<(), GraphError> {
        if tail >= self.n {
            return Err(GraphError::VertexOutOfRange { index: tail, order: self.n });
        }
        if head >= self.n {
            return Err(GraphError::VertexOutOfRange { index: head, order: self.n });
        }
        if tail == head {
            return Err(GraphError::LoopArc(tail.to_string()));
        }
        if self.adj[tail][head] {
            return Err(GraphError::DuplicateArc(tail.to_string(), head.to_string()));
        }
        self.adj[tail][head] = true;
        Ok(())
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail < self.n && head < self.n && tail != head && self.adj[tail][head]
    }

    pub fn arc_indicator(&self, tail: usize, head: usize) -> u32 {
        assert!(tail != head, "arc indicator requires distinct vertices");
        self.has_arc(tail, head) as u32
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adj[u][v]).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(w, _)| w)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[u][v])
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v] || self.adj[v][u]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().flatten().filter(|&&b| b).count()
    }

    /// True iff the digraph has a single strongly connected component
    /// (Tarjan's algorithm, iterative).
    pub fn strongly_connected(&self) -> bool {
        self.n <= 1 || self.tarjan_scc_count() == 1
    }

    fn tarjan_scc_count(&self) -> usize {
        const UNSET: usize = usize::MAX;
        let n = self.n;
        let mut index = vec![UNSET; n];
        let mut lowlink = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0usize;
        let mut scc_count = 0usize;

        // explicit DFS frames: (vertex, next neighbor to try)
        let mut frames: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != UNSET {
                continue;
            }
            frames.push((root, 0));
            index[root] = next_index;
            lowlink[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut next)) = frames.last_mut() {
                let mut advanced = false;
                while *next < n {
                    let w = *next;
                    *next += 1;
                    if !self.adj[v][w] {
                        continue;
                    }
                    if index[w] == UNSET {
                        index[w] = next_index;
                        lowlink[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                        advanced = true;
                        break;
                    } else if on_stack[w] {
                        lowlink[v] = lowlink[v].min(index[w]);
                    }
                }
                if advanced {
                    continue;
                }
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    scc_count += 1;
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        if w == v {
                            break;
                        }
                    }
                }
            }
        }
        scc_count
    }

    /// Subdigraph induced by `s`; vertices renumbered in sorted order of `s`.
    pub fn induced_subdigraph(&self, s: &[usize]) -> Digraph {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        let order: Vec<usize> = set.into_iter().collect();
        assert!(!order.is_empty(), "induced subdigraph needs a nonempty set");
        for &v in &order {
            assert!(v < self.n, "induced set out of range");
        }
        let mut g = Digraph::new(order.len());
        for (iu, &u) in order.iter().enumerate() {
            for (iv, &v) in order.iter().enumerate() {
                if iu != iv && self.adj[u][v] {
                    g.add_arc(iu, iv).unwrap();
                }
            }
        }
        g
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("dg {}\n", self.n);
        for (u, v) in self.arcs() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn validate_cycle(&self, vertices: &[usize]) -> Result<(), CycleError> {
        if vertices.len() < 2 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in vertices {
            if v >= self.n {
                return Err(CycleError::VertexOutOfRange(v.to_string()));
            }
            if !seen.insert(v) {
                return Err(CycleError::RepeatedVertex(v.to_string()));
            }
        }
        for w in 0..vertices.len() {
            let tail = vertices[w];
            let head = vertices[(w + 1) % vertices.len()];
            if !self.adj[tail][head] {
                return Err(CycleError::MissingArc(tail.to_string(), head.to_string()));
            }
        }
        Ok(())
    }
}

/// Result of parsing a graph file: the header decides the flavor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Bipartite(BipartiteDigraph),
    General(Digraph),
}

impl AnyGraph {
    pub fn serialize(&self) -> String {
        match self {
            AnyGraph::Bipartite(g) => g.serialize(),
            AnyGraph::General(g) => g.serialize(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnyGraph::Bipartite(g) => g.order(),
            AnyGraph::General(g) => g.order(),
        }
    }

    pub fn arc_count(&self) -> usize {
        match self {
            AnyGraph::Bipartite(g) => g.arc_count(),
            AnyGraph::General(g) => g.arc_count(),
        }
    }

    pub fn strongly_connected(&self) -> bool {
        match self {
            AnyGraph::Bipartite(g) => g.strongly_connected(),
            AnyGraph::General(g) => g.strongly_connected(),
        }
    }
}

/// Parses the text graph format.
///
/// Comment lines start with `#`; blank lines are ignored. The first
/// significant line is a header, `bdg <a>` or `dg <n>`, followed by one
/// arc per line as `<tail> <head>`.
pub fn parse(text: &str) -> Result<AnyGraph, ParseError> {
    enum Builder {
        B(BipartiteDigraph),
        G(Digraph),
    }
    let mut builder: Option<Builder> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match &mut builder {
            None => {
                if tokens.len() != 2 {
                    return Err(ParseError::MalformedLine(lineno, line.to_string()));
                }
                let order: usize = tokens[1]
                    .parse()
                    .map_err(|_| ParseError::MalformedLine(lineno, line.to_string()))?;
                if order == 0 {
                    return Err(ParseError::ZeroOrder);
                }
                builder = Some(match tokens[0] {
                    "bdg" => Builder::B(BipartiteDigraph::new(order)),
                    "dg" => Builder::G(Digraph::new(order)),
                    other => return Err(ParseError::UnknownHeader(lineno, other.to_string())),
                });
            }
            Some(Builder::B(g)) => {
                if tokens.len() != 2 {
                    return Err(ParseError::MalformedLine(lineno, line.to_string()));
                }
                let tail: BVertex = tokens[0].parse()?;
                let head: BVertex = tokens[1].parse()?;
                g.add_arc(tail, head).map_err(|e| match e {
                    GraphError::VertexOutOfRange { .. } => {
                        ParseError::IndexOutOfRange(lineno, line.to_string())
                    }
                    GraphError::SameSideArc(..) => {
                        ParseError::SameSideArc(lineno, line.to_string())
                    }
                    GraphError::DuplicateArc(..) => {
                        ParseError::DuplicateArc(lineno, line.to_string())
                    }
                    GraphError::LoopArc(..) => ParseError::LoopArc(lineno, line.to_string()),
                })?;
            }
            Some(Builder::G(g)) => {
                if tokens.len() != 2 {
                    return Err(ParseError::MalformedLine(lineno, line.to_string()));
                }
                let tail: usize = tokens[0]
                    .parse()
                    .map_err(|_| ParseError::BadVertexToken(tokens[0].to_string()))?;
                let head: usize = tokens[1]
                    .parse()
                    .map_err(|_| ParseError::BadVertexToken(tokens[1].to_string()))?;
                g.add_arc(tail, head).map_err(|e| match e {
                    GraphError::VertexOutOfRange { .. } => {
                        ParseError::IndexOutOfRange(lineno, line.to_string())
                    }
                    GraphError::DuplicateArc(..) => {
                        ParseError::DuplicateArc(lineno, line.to_string())
                    }
                    GraphError::LoopArc(..) => ParseError::LoopArc(lineno, line.to_string()),
                    GraphError::SameSideArc(..) => unreachable!("general digraph has no sides"),
                })?;
            }
        }
    }
    match builder {
        Some(Builder::B(g)) => Ok(AnyGraph::Bipartite(g)),
        Some(Builder::G(g)) => Ok(AnyGraph::General(g)),
        None => Err(ParseError::MissingHeader),
    }
}
