//! Cycle and path checks over a [`BiGraph`], and the claim report
//! assembled from them.
//!
//! Per-root work runs on the rayon pool. Every aggregation is
//! order-independent: counts are summed and the reported witness is the
//! lexicographically smallest one, so serial and parallel runs agree.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{invalid, too_big, Result};
use crate::gf::FieldSpec;
use crate::graph::{build, BiGraph, CycleWitness};

/// Longest cycle length [`count_cycles`] accepts.
pub const MAX_CYCLE_LEN: usize = 12;

/// Vertex cap for cycle searches of length 10 and above.
pub const LONG_CYCLE_VERTEX_CAP: usize = 8192;

/// Finds a 4-cycle by recording, for every point, each unordered pair of its
/// lines; a pair seen twice closes a 4-cycle.
pub fn find_c4(g: &BiGraph) -> Option<CycleWitness> {
    let pairs: usize = (0..g.n_p() as u32).map(|p| g.degree(p) * g.degree(p).saturating_sub(1) / 2).sum();
    let mut seen: HashMap<(u32, u32), u32> = HashMap::with_capacity(pairs);
    for p in 0..g.n_p() as u32 {
        let nbrs = g.neighbors(p);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if let Some(&first) = seen.get(&(a, b)) {
                    return Some(CycleWitness::checked(g, vec![first, a, p, b]));
                }
                seen.insert((a, b), p);
            }
        }
    }
    None
}

/// Shortest cycle length, or `None` for a forest.
pub fn girth(g: &BiGraph) -> Option<usize> {
    let n = g.n_vertices();
    (0..n as u32)
        .into_par_iter()
        .map_init(
            || (vec![u32::MAX; n], vec![u32::MAX; n], Vec::with_capacity(n)),
            |(dist, parent, queue), root| shortest_cycle_through(g, root, dist, parent, queue),
        )
        .flatten()
        .min()
}

/// BFS from `root`; the smallest `dist[u] + dist[w] + 1` over non-tree edges.
/// Scratch buffers are restored to `u32::MAX` before returning.
fn shortest_cycle_through(
    g: &BiGraph,
    root: u32,
    dist: &mut [u32],
    parent: &mut [u32],
    queue: &mut Vec<u32>,
) -> Option<usize> {
    queue.clear();
    queue.push(root);
    dist[root as usize] = 0;
    let mut best: Option<usize> = None;
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist[u as usize] as usize;
        if best.is_some_and(|b| 2 * du + 1 >= b) {
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = du as u32 + 1;
                parent[w as usize] = u;
                queue.push(w);
            } else if parent[u as usize] != w {
                let len = du + dist[w as usize] as usize + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    for &v in queue.iter() {
        dist[v as usize] = u32::MAX;
        parent[v as usize] = u32::MAX;
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCount {
    pub count: u64,
    /// Lexicographically smallest canonical cycle, if any.
    pub witness: Option<CycleWitness>,
}

struct Scratch {
    on_path: Vec<bool>,
    root_nbr: Vec<bool>,
    path: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Scratch {
        Scratch {
            on_path: vec![false; n],
            root_nbr: vec![false; n],
            path: Vec::with_capacity(MAX_CYCLE_LEN),
        }
    }
}

/// `Ok(false)` when no cycle of length `len` can exist at all.
fn check_cycle_args(g: &BiGraph, len: usize) -> Result<bool> {
    if len > MAX_CYCLE_LEN {
        return Err(invalid(format!("cycle length {len} exceeds {MAX_CYCLE_LEN}")));
    }
    if len >= 10 && g.n_vertices() > LONG_CYCLE_VERTEX_CAP {
        return Err(too_big(format!(
            "{} vertices exceed the cap {LONG_CYCLE_VERTEX_CAP} for length {len}",
            g.n_vertices()
        )));
    }
    Ok(len >= 4 && len % 2 == 0)
}

/// Visits every cycle of length `len` whose minimum vertex is `root`, once
/// each: the path only uses vertices above `root`, and the second vertex
/// must be smaller than the last.
fn cycles_from_root<F>(g: &BiGraph, len: usize, root: u32, s: &mut Scratch, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    for &w in g.neighbors(root) {
        if w > root {
            s.root_nbr[w as usize] = true;
        }
    }
    s.path.clear();
    s.path.push(root);
    s.on_path[root as usize] = true;
    let flow = extend(g, len, root, s, visit);
    s.on_path[root as usize] = false;
    for &w in g.neighbors(root) {
        s.root_nbr[w as usize] = false;
    }
    flow
}

fn extend<F>(g: &BiGraph, len: usize, root: u32, s: &mut Scratch, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let last = *s.path.last().unwrap();
    if s.path.len() == len - 1 {
        let second = s.path[1];
        for &w in g.neighbors(last) {
            if w > second && s.root_nbr[w as usize] && !s.on_path[w as usize] {
                s.path.push(w);
                let flow = visit(&s.path);
                s.path.pop();
                if flow.is_break() {
                    return flow;
                }
            }
        }
        return ControlFlow::Continue(());
    }
    for &w in g.neighbors(last) {
        if w <= root || s.on_path[w as usize] {
            continue;
        }
        s.on_path[w as usize] = true;
        s.path.push(w);
        let flow = extend(g, len, root, s, visit);
        s.path.pop();
        s.on_path[w as usize] = false;
        if flow.is_break() {
            return flow;
        }
    }
    ControlFlow::Continue(())
}

/// Exact number of cycles of length `len`, each counted once.
pub fn count_cycles(g: &BiGraph, len: usize) -> Result<CycleCount> {
    if !check_cycle_args(g, len)? {
        return Ok(CycleCount { count: 0, witness: None });
    }
    let n = g.n_vertices();
    // The minimum vertex of any cycle is a point: point IDs precede line IDs.
    let (count, first) = (0..g.n_p() as u32)
        .into_par_iter()
        .map_init(
            || Scratch::new(n),
            |s, root| {
                let mut count = 0u64;
                let mut first: Option<Vec<u32>> = None;
                let _ = cycles_from_root(g, len, root, s, &mut |path| {
                    count += 1;
                    if first.is_none() {
                        first = Some(path.to_vec());
                    }
                    ControlFlow::Continue(())
                });
                (count, first)
            },
        )
        .reduce(
            || (0, None),
            |(ca, wa), (cb, wb)| {
                let w = match (wa, wb) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                (ca + cb, w)
            },
        );
    Ok(CycleCount {
        count,
        witness: first.map(|v| CycleWitness::checked(g, v)),
    })
}

/// Stops at the first cycle of length `len`; returns the same witness
/// [`count_cycles`] would.
pub fn find_cycle(g: &BiGraph, len: usize) -> Result<Option<CycleWitness>> {
    if !check_cycle_args(g, len)? {
        return Ok(None);
    }
    let n = g.n_vertices();
    let found = (0..g.n_p() as u32).into_par_iter().map_init(
        || Scratch::new(n),
        |s, root| {
            let mut found = None;
            let _ = cycles_from_root(g, len, root, s, &mut |path| {
                found = Some(path.to_vec());
                ControlFlow::Break(())
            });
            found
        },
    );
    Ok(found.find_map_first(|w| w).map(|v| CycleWitness::checked(g, v)))
}

/// Every cycle of length `len`, in canonical order.
pub fn enumerate_cycles(g: &BiGraph, len: usize) -> Result<Vec<CycleWitness>> {
    let mut out = Vec::new();
    if !check_cycle_args(g, len)? {
        return Ok(out);
    }
    let mut s = Scratch::new(g.n_vertices());
    for root in 0..g.n_p() as u32 {
        let _ = cycles_from_root(g, len, root, &mut s, &mut |path| {
            out.push(CycleWitness::checked(g, path.to_vec()));
            ControlFlow::Continue(())
        });
    }
    Ok(out)
}

/// Result of the length-4 path census between point pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L4Paths {
    pub max_count: u64,
    /// Smallest `(p, p')`, `p < p'`, attaining `max_count`; `None` when no
    /// length-4 path exists.
    pub pair: Option<(u32, u32)>,
    /// The paths between `pair`, listed only when `max_count >= 3`.
    pub witnesses: Vec<[u32; 5]>,
}

/// Counts, for every unordered pair of points, the paths
/// `p - l1 - p2 - l2 - p'` with five distinct vertices and reports the
/// maximum.
pub fn max_l4_paths(g: &BiGraph) -> L4Paths {
    let n_p = g.n_p();
    let best = (0..n_p as u32)
        .into_par_iter()
        .map_init(
            || (vec![0u64; n_p], Vec::<u32>::new()),
            |(counts, touched), p| {
                for &l1 in g.neighbors(p) {
                    for &p2 in g.neighbors(l1) {
                        if p2 == p {
                            continue;
                        }
                        for &l2 in g.neighbors(p2) {
                            if l2 == l1 {
                                continue;
                            }
                            for &end in g.neighbors(l2) {
                                if end <= p || end == p2 {
                                    continue;
                                }
                                if counts[end as usize] == 0 {
                                    touched.push(end);
                                }
                                counts[end as usize] += 1;
                            }
                        }
                    }
                }
                let mut best: Option<(u64, u32)> = None;
                for &end in touched.iter() {
                    let c = counts[end as usize];
                    counts[end as usize] = 0;
                    if best.map_or(true, |(bc, be)| c > bc || (c == bc && end < be)) {
                        best = Some((c, end));
                    }
                }
                touched.clear();
                best.map(|(c, end)| (c, p, end))
            },
        )
        .flatten()
        .reduce_with(|a, b| {
            // larger count wins, then the smaller pair
            if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                b
            } else {
                a
            }
        });
    match best {
        None => L4Paths { max_count: 0, pair: None, witnesses: Vec::new() },
        Some((c, p, end)) => L4Paths {
            max_count: c,
            pair: Some((p, end)),
            witnesses: if c >= 3 { l4_paths_between(g, p, end) } else { Vec::new() },
        },
    }
}

/// Explicit list of length-4 paths from `a` to `b` with distinct vertices.
pub fn l4_paths_between(g: &BiGraph, a: u32, b: u32) -> Vec<[u32; 5]> {
    let mut out = Vec::new();
    if a == b {
        return out;
    }
    for &l1 in g.neighbors(a) {
        for &p2 in g.neighbors(l1) {
            if p2 == a || p2 == b {
                continue;
            }
            for &l2 in g.neighbors(p2) {
                if l2 != l1 && g.has_edge(l2, b) {
                    out.push([a, l1, p2, l2, b]);
                }
            }
        }
    }
    out
}

/// How a cycle of `D_k(q)` distributes its lines over parallel classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelStructure {
    /// No two cyclically consecutive lines share a direction.
    pub no_consecutive_parallel: bool,
    /// Every line shares its direction with some other line of the cycle.
    pub every_line_partnered: bool,
}

/// `None` when `g` carries no generation metadata.
pub fn parallel_structure(g: &BiGraph, w: &CycleWitness) -> Option<ParallelStructure> {
    let meta = g.meta()?;
    let per_dir = meta.q().pow(meta.k as u32 - 1);
    let dirs: Vec<usize> = w
        .vertices
        .iter()
        .filter(|&&v| !g.is_point(v))
        .map(|&v| (v as usize - g.n_p()) / per_dir)
        .collect();
    let t = dirs.len();
    let no_consecutive_parallel = (0..t).all(|i| dirs[i] != dirs[(i + 1) % t]);
    let every_line_partnered = (0..t).all(|i| (0..t).any(|j| j != i && dirs[j] == dirs[i]));
    Some(ParallelStructure {
        no_consecutive_parallel,
        every_line_partnered,
    })
}

/// Exhaustive counting, or stop at the first witness.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchMode {
    #[default]
    Count,
    FailFast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub name: String,
    pub elapsed: Duration,
    /// Present exactly when the claim failed: a cycle for cycle claims, the
    /// offending vertex IDs for degree claims, observed sizes for order claims.
    pub witness: Option<Vec<u32>>,
}

impl ClaimResult {
    fn pass(name: &str, elapsed: Duration) -> ClaimResult {
        ClaimResult { name: name.to_string(), elapsed, witness: None }
    }

    fn fail(name: &str, elapsed: Duration, witness: Vec<u32>) -> ClaimResult {
        ClaimResult { name: name.to_string(), elapsed, witness: Some(witness) }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub claims: Vec<ClaimResult>,
    /// Observations that are reported but not asserted.
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimResult::passed)
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// One line per claim, `<claim> <PASS|FAIL> <millis> [witness=...]`, then
    /// notes prefixed with `#`. With `timing` off the millis column is `-`.
    pub fn write_text<W: Write>(&self, mut out: W, timing: bool) -> io::Result<()> {
        for c in &self.claims {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let millis = if timing { c.elapsed.as_millis().to_string() } else { "-".to_string() };
            write!(out, "{} {status} {millis}", c.name)?;
            if let Some(w) = &c.witness {
                let ids: Vec<String> = w.iter().map(u32::to_string).collect();
                write!(out, " witness={}", ids.join(","))?;
            }
            writeln!(out)?;
        }
        for n in &self.notes {
            writeln!(out, "# {n}")?;
        }
        Ok(())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut buf = Vec::new();
        self.write_text(&mut buf, true).map_err(|_| fmt::Error)?;
        f.write_str(&String::from_utf8_lossy(&buf))
    }
}

/// Builds `D_k(q)` and checks it with [`check_theorem1`].
pub fn assert_theorem1(field: &FieldSpec, k: usize, mode: SearchMode) -> Result<VerifyReport> {
    let g = build(field, k)?;
    check_theorem1(&g, mode)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Checks a generated graph against the order, edge, regularity and
/// even-cycle claims for its `(q, k)`: no C4 for every `k`, no C6 once
/// `k >= 3`, no C10 once `k >= 5`.
pub fn check_theorem1(g: &BiGraph, mode: SearchMode) -> Result<VerifyReport> {
    let meta = g
        .meta()
        .ok_or_else(|| invalid("claim check needs a generated graph (no field metadata)"))?;
    let (q, k) = (meta.q(), meta.k);
    let n = q.pow(k as u32);
    let mut report = VerifyReport::default();

    let (ok, dt) = timed(|| g.n_p() == n && g.n_l() == n);
    report.claims.push(if ok {
        ClaimResult::pass("vertices", dt)
    } else {
        ClaimResult::fail("vertices", dt, vec![g.n_p() as u32, g.n_l() as u32])
    });

    let off_degree = || -> Vec<u32> { (0..g.n_vertices() as u32).filter(|&v| g.degree(v) != q).collect() };
    let (ok, dt) = timed(|| g.edge_count() == n * q);
    report.claims.push(if ok {
        ClaimResult::pass("edges", dt)
    } else {
        let mut w = off_degree();
        if w.is_empty() {
            w.push(g.edge_count() as u32);
        }
        ClaimResult::fail("edges", dt, w)
    });

    let (bad, dt) = timed(off_degree);
    report.claims.push(if bad.is_empty() {
        ClaimResult::pass("regular", dt)
    } else {
        ClaimResult::fail("regular", dt, bad)
    });

    let (c4, dt) = timed(|| find_c4(g));
    report.claims.push(match c4 {
        None => ClaimResult::pass("c4-free", dt),
        Some(w) => ClaimResult::fail("c4-free", dt, w.vertices),
    });

    for (len, min_k) in [(6usize, 3usize), (10, 5)] {
        if k < min_k {
            continue;
        }
        let name = format!("c{len}-free");
        let start = Instant::now();
        let witness = match mode {
            SearchMode::Count => {
                let c = count_cycles(g, len)?;
                report.notes.push(format!("c{len}-count {}", c.count));
                c.witness
            }
            SearchMode::FailFast => find_cycle(g, len)?,
        };
        let dt = start.elapsed();
        report.claims.push(match witness {
            None => ClaimResult::pass(&name, dt),
            Some(w) => ClaimResult::fail(&name, dt, w.vertices),
        });
    }

    if k == 4 && mode == SearchMode::Count && g.n_vertices() <= LONG_CYCLE_VERTEX_CAP {
        report.notes.push(format!("c8-count {}", count_cycles(g, 8)?.count));
    }
    if let Some(girth) = girth(g) {
        report.notes.push(format!("girth {girth}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn d(p: u32, m: u32, k: usize) -> BiGraph {
        build(&FieldSpec::new(p, m).unwrap(), k).unwrap()
    }

    fn cycle_fixture(t: u32) -> BiGraph {
        // p_i - l_i - p_{i+1}
        BiGraph::from_edges(t as usize, t as usize, (0..t).flat_map(|i| [(i, i), ((i + 1) % t, i)])).unwrap()
    }

    fn path_fixture() -> BiGraph {
        // p0 - l0 - p1 - l1 - p2
        BiGraph::from_edges(3, 2, [(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn c4_detection() {
        assert_eq!(find_c4(&d(7, 1, 2)), None);
        assert_eq!(find_c4(&d(3, 1, 5)), None);
        let k22 = BiGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let w = find_c4(&k22).unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.is_valid(&k22));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&d(2, 1, 2)), Some(8));
        assert_eq!(girth(&d(3, 1, 2)), Some(6));
        assert_eq!(girth(&path_fixture()), None);
        assert_eq!(girth(&cycle_fixture(5)), Some(10));
    }

    #[test]
    fn d2_3_triangle_of_lines() {
        // Lines z = 0, 1, 2 through (0,0), (0,0), (1,0) pairwise meet in three points.
        let f = FieldSpec::new(3, 1).unwrap();
        let g = build(&f, 2).unwrap();
        let c = count_cycles(&g, 6).unwrap();
        assert!(c.count > 0);
        assert!(c.witness.unwrap().is_valid(&g));
    }

    #[test]
    fn count_cycles_examples() {
        assert_eq!(count_cycles(&d(3, 1, 3), 6).unwrap().count, 0);
        assert_eq!(count_cycles(&d(2, 1, 5), 10).unwrap().count, 0);
        let c8 = cycle_fixture(4);
        let c = count_cycles(&c8, 8).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.witness.unwrap().vertices, vec![0, 4, 1, 5, 2, 6, 3, 7]);
        assert_eq!(count_cycles(&c8, 7).unwrap().count, 0);
        assert_eq!(count_cycles(&c8, 6).unwrap().count, 0);
        assert!(count_cycles(&c8, 14).is_err());
        let k22 = BiGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(count_cycles(&k22, 4).unwrap().count, 1);
    }

    #[test]
    fn long_cycle_cap() {
        let big = d(2, 1, 8);
        assert!(big.n_vertices() <= LONG_CYCLE_VERTEX_CAP);
        let f = FieldSpec::new(3, 1).unwrap();
        let too_big = build(&f, 8).unwrap();
        assert!(matches!(count_cycles(&too_big, 10), Err(crate::error::Error::SizeLimit(_))));
    }

    #[test]
    fn k33_cycle_counts() {
        // K_{3,3} has 9 four-cycles and 6 six-cycles.
        let edges = (0..3).flat_map(|p| (0..3).map(move |l| (p, l)));
        let g = BiGraph::from_edges(3, 3, edges).unwrap();
        assert_eq!(count_cycles(&g, 4).unwrap().count, 9);
        assert_eq!(count_cycles(&g, 6).unwrap().count, 6);
    }

    #[test]
    fn find_cycle_matches_count_witness() {
        for g in [d(3, 1, 2), d(2, 2, 2), d(2, 1, 4), d(3, 1, 4)] {
            for len in [4, 6, 8] {
                let c = count_cycles(&g, len).unwrap();
                assert_eq!(find_cycle(&g, len).unwrap(), c.witness);
                let all = enumerate_cycles(&g, len).unwrap();
                assert_eq!(all.len() as u64, c.count);
                assert_eq!(all.first(), c.witness.as_ref());
            }
        }
    }

    #[test]
    fn girth_is_first_nonzero_cycle_length() {
        for g in [d(2, 1, 2), d(3, 1, 2), d(2, 1, 3), d(3, 1, 3), d(2, 1, 4), d(2, 2, 2)] {
            let first = (4..=12).step_by(2).find(|&len| count_cycles(&g, len).unwrap().count > 0);
            assert_eq!(girth(&g), first);
        }
    }

    #[test]
    fn l4_paths_examples() {
        assert!(max_l4_paths(&d(2, 1, 4)).max_count <= 2);
        assert!(max_l4_paths(&d(3, 1, 4)).max_count <= 2);
        let star = BiGraph::from_edges(1, 3, [(0, 0), (0, 1), (0, 2)]).unwrap();
        let r = max_l4_paths(&star);
        assert_eq!((r.max_count, r.pair), (0, None));
        let r = max_l4_paths(&path_fixture());
        assert_eq!((r.max_count, r.pair), (1, Some((0, 2))));
        assert!(r.witnesses.is_empty());
        assert_eq!(l4_paths_between(&path_fixture(), 0, 2), vec![[0, 3, 1, 4, 2]]);
    }

    #[test]
    fn l4_paths_witnesses_when_three() {
        // theta graph: three disjoint length-4 paths from p0 to p1
        let mut edges = Vec::new();
        for j in 0..3u32 {
            let (l1, mid, l2) = (2 * j, 2 + j, 2 * j + 1);
            edges.extend([(0, l1), (mid, l1), (mid, l2), (1, l2)]);
        }
        let g = BiGraph::from_edges(5, 6, edges).unwrap();
        let r = max_l4_paths(&g);
        assert_eq!((r.max_count, r.pair), (3, Some((0, 1))));
        assert_eq!(r.witnesses.len(), 3);
    }

    #[test]
    fn claim_reports() {
        let f = FieldSpec::new(2, 2).unwrap();
        let r = assert_theorem1(&f, 3, SearchMode::Count).unwrap();
        assert!(r.passed(), "{r}");
        let names: Vec<&str> = r.claims.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["vertices", "edges", "regular", "c4-free", "c6-free"]);
        let r = assert_theorem1(&FieldSpec::new(2, 1).unwrap(), 5, SearchMode::FailFast).unwrap();
        assert!(r.passed());
        assert!(r.claim("c10-free").is_some());
    }

    #[test]
    fn injected_edge_fails_edge_claim() {
        let g = d(3, 1, 2).with_extra_edge(0, 8).unwrap();
        let r = check_theorem1(&g, SearchMode::Count).unwrap();
        let edges = r.claim("edges").unwrap();
        assert!(!edges.passed());
        assert_eq!(edges.witness.as_deref(), Some(&[0u32, 17][..]));
        assert!(!r.passed());
        for c in &r.claims {
            assert_eq!(c.passed(), c.witness.is_none());
        }
        let mut out = Vec::new();
        r.write_text(&mut out, false).unwrap();
        assert!(String::from_utf8(out).unwrap().contains("edges FAIL - witness=0,17\n"));
    }

    #[test]
    fn parallel_structure_of_small_cycles() {
        // Consecutive lines of any cycle never share a direction.
        for g in [d(3, 1, 2), d(2, 1, 3), d(3, 1, 3), d(2, 1, 4)] {
            for len in [6, 8] {
                for w in enumerate_cycles(&g, len).unwrap() {
                    assert!(parallel_structure(&g, &w).unwrap().no_consecutive_parallel);
                }
            }
        }
        // In D_2(3) a six-cycle uses three distinct directions.
        let g = d(3, 1, 2);
        let w = find_cycle(&g, 6).unwrap().unwrap();
        assert!(!parallel_structure(&g, &w).unwrap().every_line_partnered);
    }
}
