//! The bipartite point-line incidence graph `D_k(q)`.
//!
//! Vertices carry global IDs: points are `0..nP`, lines are `nP..nP+nL`.
//! A point's ID is its base-q positional encoding `sum coords[i] * q^i`; a
//! line's local ID is `z * q^(k-1) + sum_{i>=1} base[i] * q^(i-1)`.

use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{invalid, too_big, Error, Result};
use crate::gf::{Fe, FieldSpec};
use crate::moment::{checked_count, moment_vector, MomentLine, Point, MAX_DIM};

/// Field and dimension a graph was generated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMeta {
    pub p: u32,
    pub m: u32,
    pub k: usize,
}

impl GraphMeta {
    pub fn q(&self) -> usize {
        (self.p as usize).pow(self.m)
    }
}

/// Bipartite graph in compressed adjacency form over global vertex IDs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiGraph {
    n_p: usize,
    n_l: usize,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    meta: Option<GraphMeta>,
}

impl BiGraph {
    /// Builds a graph from `(P-id, L-local-id)` pairs. Duplicate edges are
    /// merged.
    pub fn from_edges(n_p: usize, n_l: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<BiGraph> {
        if n_p + n_l > u32::MAX as usize {
            return Err(invalid("too many vertices"));
        }
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n_l];
        for (p, l) in edges {
            if p as usize >= n_p || l as usize >= n_l {
                return Err(invalid(format!("edge ({p}, {l}) outside {n_p} x {n_l}")));
            }
            lists[l as usize].push(p);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_line_lists(n_p, &lists))
    }

    /// `lists[l]` holds the sorted, distinct P-neighbours of line `l`.
    fn from_line_lists<L: AsRef<[u32]>>(n_p: usize, lists: &[L]) -> BiGraph {
        let n_l = lists.len();
        let mut deg_p = vec![0usize; n_p];
        for list in lists {
            for &p in list.as_ref() {
                deg_p[p as usize] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(n_p + n_l + 1);
        offsets.push(0);
        for d in &deg_p {
            offsets.push(offsets.last().unwrap() + d);
        }
        for list in lists {
            offsets.push(offsets.last().unwrap() + list.as_ref().len());
        }
        let mut targets = vec![0u32; *offsets.last().unwrap()];
        let mut fill: Vec<usize> = offsets[..n_p].to_vec();
        // Lines are visited in ascending order, so each P list comes out sorted.
        for (l, list) in lists.iter().enumerate() {
            let global = (n_p + l) as u32;
            let start = offsets[n_p + l];
            for (i, &p) in list.as_ref().iter().enumerate() {
                targets[fill[p as usize]] = global;
                fill[p as usize] += 1;
                targets[start + i] = p;
            }
        }
        BiGraph {
            n_p,
            n_l,
            offsets,
            targets,
            meta: None,
        }
    }

    pub fn with_meta(mut self, meta: GraphMeta) -> BiGraph {
        self.meta = Some(meta);
        self
    }

    /// Copy of the graph with one more edge; keeps the metadata. Used to
    /// exercise failing claims.
    pub fn with_extra_edge(&self, p: u32, l_local: u32) -> Result<BiGraph> {
        let edges = self
            .edges()
            .map(|(a, b)| (a, b - self.n_p as u32))
            .chain(std::iter::once((p, l_local)));
        let mut g = BiGraph::from_edges(self.n_p, self.n_l, edges)?;
        g.meta = self.meta;
        Ok(g)
    }

    #[inline]
    pub fn n_p(&self) -> usize {
        self.n_p
    }

    #[inline]
    pub fn n_l(&self) -> usize {
        self.n_l
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n_p + self.n_l
    }

    pub fn meta(&self) -> Option<GraphMeta> {
        self.meta
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn is_point(&self, v: u32) -> bool {
        (v as usize) < self.n_p
    }

    /// Sorted neighbours of a global vertex ID.
    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn adj_p(&self, p: u32) -> &[u32] {
        debug_assert!(self.is_point(p));
        self.neighbors(p)
    }

    pub fn adj_l(&self, l_local: u32) -> &[u32] {
        self.neighbors(self.n_p as u32 + l_local)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(P-id, L-global-id)` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n_p as u32).flat_map(move |p| self.neighbors(p).iter().map(move |&l| (p, l)))
    }
}

/// A cycle given as its vertex sequence (the closing edge is implicit).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleWitness {
    pub vertices: Vec<u32>,
}

impl CycleWitness {
    /// Wraps a vertex sequence after re-validating it against `g`.
    ///
    /// # Panics
    /// If the sequence is not a cycle of `g`: witnesses are only produced by
    /// searches over `g`, so a failure here is a search bug.
    pub fn checked(g: &BiGraph, vertices: Vec<u32>) -> CycleWitness {
        let w = CycleWitness { vertices };
        assert!(w.is_valid(g), "emitted an invalid cycle witness {w}");
        w
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertices adjacent (cyclically), all distinct, sides
    /// alternating, length at least 4.
    pub fn is_valid(&self, g: &BiGraph) -> bool {
        let v = &self.vertices;
        let n = v.len();
        if n < 4 || n % 2 == 1 || v.iter().any(|&x| x as usize >= g.n_vertices()) {
            return false;
        }
        let mut seen = v.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return false;
        }
        (0..n).all(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            g.is_point(a) != g.is_point(b) && g.has_edge(a, b)
        })
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn point_id(field: &FieldSpec, p: &Point) -> usize {
    let q = field.order() as usize;
    p.coords().iter().rev().fold(0, |acc, c| acc * q + c.0 as usize)
}

pub fn id_point(field: &FieldSpec, k: usize, mut id: usize) -> Point {
    let q = field.order() as usize;
    let coords: Vec<Fe> = (0..k)
        .map(|_| {
            let c = Fe((id % q) as u32);
            id /= q;
            c
        })
        .collect();
    Point::new(&coords)
}

/// Local line ID in `0..q^k`; add `q^k` for the global vertex ID.
pub fn line_id(field: &FieldSpec, line: &MomentLine) -> Result<usize> {
    let coords = line.base.coords();
    if !coords[0].is_zero() {
        return Err(invalid(format!("line base {} is not canonical", line.base)));
    }
    let q = field.order() as usize;
    let rest = coords[1..].iter().rev().fold(0, |acc, c| acc * q + c.0 as usize);
    Ok(line.z.0 as usize * q.pow(coords.len() as u32 - 1) + rest)
}

pub fn id_line(field: &FieldSpec, k: usize, id: usize) -> MomentLine {
    let q = field.order() as usize;
    let per_dir = q.pow(k as u32 - 1);
    let mut rest = id % per_dir;
    let mut coords = vec![Fe::ZERO];
    for _ in 1..k {
        coords.push(Fe((rest % q) as u32));
        rest /= q;
    }
    MomentLine {
        z: Fe((id / per_dir) as u32),
        base: Point::new(&coords),
    }
}

/// Cap on `q^(k+1)`, the edge count of `D_k(q)`.
pub const MAX_EDGES: usize = 1 << 26;

/// Builds `D_k(q)`.
pub fn build(field: &FieldSpec, k: usize) -> Result<BiGraph> {
    let n = checked_count(field, k)?;
    let q = field.order() as usize;
    if n * q > MAX_EDGES {
        return Err(too_big(format!("D_{k}({q}) has {} edges, over the cap {MAX_EDGES}", n * q)));
    }
    let per_dir = n / q;
    let powers: Vec<usize> = (0..k).map(|i| q.pow(i as u32)).collect();

    let mut flat = vec![0u32; n * q];
    let mut base = [Fe::ZERO; MAX_DIM];
    for z in field.elements() {
        let dir = moment_vector(field, z, k);
        // steps[y][i] = y * z^i
        let steps: Vec<Vec<Fe>> = field
            .elements()
            .map(|y| dir.coords().iter().map(|&c| field.mul(y, c)).collect())
            .collect();
        for b in 0..per_dir {
            let mut rest = b;
            for slot in base.iter_mut().take(k).skip(1) {
                *slot = Fe((rest % q) as u32);
                rest /= q;
            }
            let lid = z.0 as usize * per_dir + b;
            let pts = &mut flat[lid * q..(lid + 1) * q];
            for (slot, step) in pts.iter_mut().zip(&steps) {
                let id: usize = (0..k).map(|i| field.add(base[i], step[i]).0 as usize * powers[i]).sum();
                *slot = id as u32;
            }
            pts.sort_unstable();
        }
    }
    let lists: Vec<&[u32]> = flat.chunks(q).collect();
    let g = BiGraph::from_line_lists(n, &lists);
    Ok(g.with_meta(GraphMeta {
        p: field.characteristic(),
        m: field.degree(),
        k,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub n_p: usize,
    pub n_l: usize,
    pub edges: usize,
    pub min_deg: usize,
    pub max_deg: usize,
    pub is_regular: bool,
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nP={} nL={} e={} min-deg={} max-deg={} regular={}",
            self.n_p, self.n_l, self.edges, self.min_deg, self.max_deg, self.is_regular
        )
    }
}

pub fn stats(g: &BiGraph) -> GraphStats {
    let degs = (0..g.n_vertices() as u32).map(|v| g.degree(v));
    let min_deg = degs.clone().min().unwrap_or(0);
    let max_deg = degs.max().unwrap_or(0);
    GraphStats {
        n_p: g.n_p(),
        n_l: g.n_l(),
        edges: g.edge_count(),
        min_deg,
        max_deg,
        is_regular: min_deg == max_deg,
    }
}

/// Edge-list flavours. `V1` carries a provenance header, `Bare` is edges only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExportFormat {
    #[default]
    V1,
    Bare,
}

pub const EDGE_LIST_MAGIC: &str = "girthforge-v1";

pub fn export<W: Write>(g: &BiGraph, format: ExportFormat, mut sink: W) -> Result<()> {
    if format == ExportFormat::V1 {
        let meta = g
            .meta()
            .ok_or_else(|| invalid("v1 export needs a generated graph (no field metadata)"))?;
        writeln!(
            sink,
            "{EDGE_LIST_MAGIC} p={} m={} k={} nP={} nL={} e={}",
            meta.p,
            meta.m,
            meta.k,
            g.n_p(),
            g.n_l(),
            g.edge_count()
        )?;
    }
    for (p, l) in g.edges() {
        writeln!(sink, "{p} {l}")?;
    }
    sink.flush()?;
    Ok(())
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn header_field<T: std::str::FromStr>(tok: Option<&str>, key: &str) -> Result<T> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(1, format!("expected {key}=<int> in header")))
}

/// Reads a `girthforge-v1` edge list back into a graph.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<BiGraph> {
    let mut lines = reader.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))??;
    let mut toks = header.split(' ');
    if toks.next() != Some(EDGE_LIST_MAGIC) {
        return Err(parse_err(1, format!("missing {EDGE_LIST_MAGIC} magic")));
    }
    let p: u32 = header_field(toks.next(), "p")?;
    let m: u32 = header_field(toks.next(), "m")?;
    let k: usize = header_field(toks.next(), "k")?;
    let n_p: usize = header_field(toks.next(), "nP")?;
    let n_l: usize = header_field(toks.next(), "nL")?;
    let e: usize = header_field(toks.next(), "e")?;
    let mut edges = Vec::with_capacity(e);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 2;
        let (a, b) = line
            .split_once(' ')
            .ok_or_else(|| parse_err(lineno, "expected `<P-id> <L-global-id>`"))?;
        let a: u32 = a.parse().map_err(|_| parse_err(lineno, "bad P-id"))?;
        let b: u32 = b.parse().map_err(|_| parse_err(lineno, "bad L-id"))?;
        if (b as usize) < n_p {
            return Err(parse_err(lineno, "L-id below nP"));
        }
        edges.push((a, b - n_p as u32));
    }
    if edges.len() != e {
        return Err(parse_err(1, format!("header says e={e}, found {} edges", edges.len())));
    }
    let g = BiGraph::from_edges(n_p, n_l, edges)?;
    Ok(g.with_meta(GraphMeta { p, m, k }))
}
