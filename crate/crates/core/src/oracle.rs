//! Deliberately naive cross-checks. Nothing here reuses the traversal code
//! in `verify` or the arithmetic in `gf`: graphs are re-read into a dense
//! adjacency matrix and field products are computed on coefficient vectors.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, too_big, Result};
use crate::gf::{Fe, FieldSpec};
use crate::graph::BiGraph;
use crate::lines4::GenLine;

pub const NAIVE_CYCLE_VERTEX_CAP: usize = 100;
pub const NAIVE_CYCLE_MAX_LEN: usize = 10;
pub const NAIVE_PATH_VERTEX_CAP: usize = 2048;

fn dense_adjacency(g: &BiGraph) -> Vec<Vec<bool>> {
    let n = g.n_vertices();
    let mut adj = vec![vec![false; n]; n];
    for (p, l) in g.edges() {
        adj[p as usize][l as usize] = true;
        adj[l as usize][p as usize] = true;
    }
    adj
}

/// Counts closed sequences of `len` distinct vertices and divides out the
/// `2 * len` rotations and reflections of each cycle.
pub fn naive_cycle_count(g: &BiGraph, len: usize) -> Result<u64> {
    let n = g.n_vertices();
    if n > NAIVE_CYCLE_VERTEX_CAP {
        return Err(too_big(format!("{n} vertices exceed the oracle cap {NAIVE_CYCLE_VERTEX_CAP}")));
    }
    if len > NAIVE_CYCLE_MAX_LEN {
        return Err(too_big(format!("length {len} exceeds the oracle cap {NAIVE_CYCLE_MAX_LEN}")));
    }
    if len < 3 {
        return Ok(0);
    }
    let adj = dense_adjacency(g);
    let mut used = vec![false; n];
    let mut seq = Vec::with_capacity(len);
    let mut closed = 0u64;
    for start in 0..n {
        used[start] = true;
        seq.push(start);
        closed += closed_walks(&adj, len, &mut seq, &mut used);
        seq.pop();
        used[start] = false;
    }
    debug_assert_eq!(closed % (2 * len as u64), 0);
    Ok(closed / (2 * len as u64))
}

fn closed_walks(adj: &[Vec<bool>], len: usize, seq: &mut Vec<usize>, used: &mut [bool]) -> u64 {
    let last = *seq.last().unwrap();
    if seq.len() == len {
        return adj[last][seq[0]] as u64;
    }
    let mut total = 0;
    for next in 0..adj.len() {
        if adj[last][next] && !used[next] {
            used[next] = true;
            seq.push(next);
            total += closed_walks(adj, len, seq, used);
            seq.pop();
            used[next] = false;
        }
    }
    total
}

/// Number of paths `p - l1 - p2 - l2 - p'` with five distinct vertices by a
/// triple loop over `(l1, p2, l2)`.
pub fn naive_l4_paths(g: &BiGraph, p: u32, p_end: u32) -> Result<u64> {
    let n = g.n_vertices();
    if n > NAIVE_PATH_VERTEX_CAP {
        return Err(too_big(format!("{n} vertices exceed the oracle cap {NAIVE_PATH_VERTEX_CAP}")));
    }
    if p == p_end {
        return Ok(0);
    }
    let adj = dense_adjacency(g);
    let (p, p_end) = (p as usize, p_end as usize);
    let mut count = 0;
    for l1 in 0..n {
        if !adj[p][l1] {
            continue;
        }
        for p2 in 0..n {
            if !adj[l1][p2] || p2 == p || p2 == p_end {
                continue;
            }
            for l2 in 0..n {
                if adj[p2][l2] && l2 != l1 && adj[l2][p_end] {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Field arithmetic on coefficient vectors, multiplying by repeated
/// `a * t` shifts instead of a convolution.
struct NaiveField {
    p: u64,
    /// `c_0, ..., c_m`, monic.
    modulus: Vec<u64>,
}

impl NaiveField {
    fn new(field: &FieldSpec) -> NaiveField {
        NaiveField {
            p: field.characteristic() as u64,
            modulus: field.modulus().iter().map(|&c| c as u64).collect(),
        }
    }

    fn m(&self) -> usize {
        self.modulus.len() - 1
    }

    fn decode(&self, a: Fe) -> Vec<u64> {
        let mut x = a.0 as u64;
        (0..self.m())
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, c: &[u64]) -> Fe {
        let mut idx = 0u64;
        for &d in c.iter().rev() {
            idx = idx * self.p + d;
        }
        Fe(idx as u32)
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| (x + self.p - y) % self.p).collect()
    }

    fn times_t(&self, a: &[u64]) -> Vec<u64> {
        let m = self.m();
        debug_assert!(m > 1);
        let top = a[m - 1];
        let mut out = vec![0u64; m];
        out[1..].copy_from_slice(&a[..m - 1]);
        for i in 0..m {
            out[i] = (out[i] + self.p - top * self.modulus[i] % self.p) % self.p;
        }
        out
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if self.m() == 1 {
            return vec![a[0] * b[0] % self.p];
        }
        let mut acc = vec![0u64; self.m()];
        let mut shifted = a.to_vec();
        for (i, &bi) in b.iter().enumerate() {
            if i > 0 {
                shifted = self.times_t(&shifted);
            }
            for (slot, &s) in acc.iter_mut().zip(&shifted) {
                *slot = (*slot + bi * s) % self.p;
            }
        }
        acc
    }
}

/// `prod_{i<j} (z_j - z_i)`, the Vandermonde determinant of `zs`.
pub fn vandermonde_det_formula(field: &FieldSpec, zs: &[Fe], k: usize) -> Result<Fe> {
    if zs.len() != k {
        return Err(invalid(format!("need exactly k = {k} parameters, got {}", zs.len())));
    }
    let nf = NaiveField::new(field);
    let coeffs: Vec<Vec<u64>> = zs.iter().map(|&z| nf.decode(z)).collect();
    let mut det = nf.decode(Fe::ONE);
    for j in 0..k {
        for i in 0..j {
            det = nf.mul(&det, &nf.sub(&coeffs[j], &coeffs[i]));
        }
    }
    Ok(nf.encode(&det))
}

/// Random bipartite graph on `n_p + n_l` vertices, each edge present with
/// probability `density`.
pub fn random_bipartite(seed: u64, n_p: usize, n_l: usize, density: f64) -> BiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for p in 0..n_p as u32 {
        for l in 0..n_l as u32 {
            if rng.gen_bool(density) {
                edges.push((p, l));
            }
        }
    }
    BiGraph::from_edges(n_p, n_l, edges).expect("edges are in range")
}

/// Quadruple loop over ordered 4-tuples of distinct family lines, using the
/// point sets of the lines directly.
pub fn naive_has_line_c4(field: &FieldSpec, family: &[GenLine]) -> bool {
    let mut uniq: Vec<&GenLine> = Vec::new();
    for l in family {
        if !uniq.contains(&l) {
            uniq.push(l);
        }
    }
    let nf = NaiveField::new(field);
    let sets: Vec<HashSet<Vec<u32>>> = uniq
        .iter()
        .map(|l| {
            let base: Vec<Vec<u64>> = l.base.coords().iter().map(|&c| nf.decode(c)).collect();
            let dir: Vec<Vec<u64>> = l.dir.coords().iter().map(|&c| nf.decode(c)).collect();
            field
                .elements()
                .map(|y| {
                    let yc = nf.decode(y);
                    base.iter()
                        .zip(&dir)
                        .map(|(b, d)| {
                            let prod = nf.mul(&yc, d);
                            let sum: Vec<u64> = b.iter().zip(&prod).map(|(x, y)| (x + y) % nf.p).collect();
                            nf.encode(&sum).0
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let n = uniq.len();
    let meet: Vec<Vec<Option<&Vec<u32>>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut common = sets[i].intersection(&sets[j]);
                    match (i == j, common.next(), common.next()) {
                        (false, Some(pt), None) => Some(pt),
                        _ => None,
                    }
                })
                .collect()
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if a == b || a == c || a == d || b == c || b == d || c == d {
                        continue;
                    }
                    let pts = [meet[a][b], meet[b][c], meet[c][d], meet[d][a]];
                    let Some(pts) = pts.into_iter().collect::<Option<Vec<_>>>() else {
                        continue;
                    };
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
                    if distinct {
                        return true;
                    }
                }
            }
        }
    }
    false
}
