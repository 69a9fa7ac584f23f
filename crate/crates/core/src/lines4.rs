//! Families of arbitrary lines in F_q^4 and "C4 of lines": four distinct
//! lines `l1 l2 l3 l4` where each cyclically consecutive pair meets, and the
//! four meeting points are pairwise distinct. Equivalently, an 8-cycle in the
//! line-point incidence graph of the family.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::elim::row_reduce;
use crate::error::{invalid, too_big, Error, Result};
use crate::gf::{Fe, FieldSpec};
use crate::graph::{id_point, point_id, BiGraph};
use crate::moment::{enumerate_lines, moment_vector, Point};
use crate::verify::find_cycle;

pub const DIM: usize = 4;

/// Largest family [`has_line_c4`] accepts.
pub const MAX_FAMILY: usize = 1 << 16;

/// Largest field for which every line of F_q^4 is enumerated.
pub const MAX_ENUM_ORDER: u32 = 8;

/// Largest field [`greedy_c4free`] runs on.
pub const MAX_GREEDY_ORDER: u32 = 4;

/// A line `{base + y * dir}` in canonical form: `dir`'s first nonzero
/// coordinate (the pivot) is 1 and `base` is zero at the pivot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenLine {
    pub dir: Point,
    pub base: Point,
}

impl GenLine {
    pub fn pivot(&self) -> usize {
        self.dir
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("direction is nonzero")
    }

    pub fn points(&self, field: &FieldSpec) -> Vec<Point> {
        field
            .elements()
            .map(|y| self.base.add_scaled(field, &self.dir, y))
            .collect()
    }

    pub fn contains(&self, field: &FieldSpec, pt: &Point) -> bool {
        let y = field.sub(pt.coords()[self.pivot()], self.base.coords()[self.pivot()]);
        self.base.add_scaled(field, &self.dir, y) == *pt
    }
}

impl fmt::Display for GenLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &Point| p.coords().iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "dir={} base={}", join(&self.dir), join(&self.base))
    }
}

pub fn canonical_genline(field: &FieldSpec, x: &Point, d: &Point) -> Result<GenLine> {
    if x.dim() != DIM || d.dim() != DIM {
        return Err(invalid(format!("lines live in dimension {DIM}")));
    }
    let pivot = d
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| invalid("direction vector is zero"))?;
    let dir = d.scale(field, field.inv(d.coords()[pivot])?);
    let base = x.add_scaled(field, &dir, field.neg(x.coords()[pivot]));
    Ok(GenLine { dir, base })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Meet {
    /// Parallel or skew.
    Disjoint,
    At(Point),
    Same,
}

/// Solves `base1 + y1 dir1 = base2 + y2 dir2` by elimination.
pub fn intersect(field: &FieldSpec, l1: &GenLine, l2: &GenLine) -> Meet {
    if l1 == l2 {
        return Meet::Same;
    }
    if l1.dir == l2.dir {
        return Meet::Disjoint;
    }
    let rhs = l2.base.sub(field, &l1.base);
    let mut rows: Vec<Vec<Fe>> = (0..DIM)
        .map(|i| vec![l1.dir.coords()[i], field.neg(l2.dir.coords()[i]), rhs.coords()[i]])
        .collect();
    let pivots = row_reduce(field, &mut rows);
    // Distinct canonical directions are independent, so columns 0 and 1
    // always pivot; a pivot in the augmented column means no solution.
    if pivots.contains(&2) {
        return Meet::Disjoint;
    }
    Meet::At(l1.base.add_scaled(field, &l1.dir, rows[0][2]))
}

/// Every line of F_q^4, ordered by the base-q ID of `dir`, then of `base`.
pub fn all_genlines(field: &FieldSpec) -> Result<Vec<GenLine>> {
    if field.order() > MAX_ENUM_ORDER {
        return Err(too_big(format!("enumerating all lines needs q <= {MAX_ENUM_ORDER}")));
    }
    let q = field.order() as usize;
    let n = q.pow(DIM as u32);
    let pts: Vec<Point> = (0..n).map(|id| id_point(field, DIM, id)).collect();
    let mut out = Vec::new();
    for dir in &pts {
        let Some(pivot) = dir.coords().iter().position(|c| !c.is_zero()) else {
            continue;
        };
        if dir.coords()[pivot] != Fe::ONE {
            continue;
        }
        out.extend(
            pts.iter()
                .filter(|b| b.coords()[pivot].is_zero())
                .map(|b| GenLine { dir: dir.clone(), base: b.clone() }),
        );
    }
    Ok(out)
}

/// `q^3 (q^4 - 1) / (q - 1)`.
pub fn total_line_count(q: u64) -> u64 {
    q.pow(3) * (q.pow(4) - 1) / (q - 1)
}

/// The moment-curve family: `q^4` lines with directions `(1, z, z^2, z^3)`.
pub fn wenger_seed(field: &FieldSpec) -> Result<Vec<GenLine>> {
    Ok(enumerate_lines(field, DIM)?
        .into_iter()
        .map(|l| GenLine {
            dir: moment_vector(field, l.z, DIM),
            base: l.base,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineC4Witness {
    pub lines: [GenLine; 4],
    /// `points[i]` lies on `lines[i]` and `lines[(i + 1) % 4]`.
    pub points: [Point; 4],
}

impl LineC4Witness {
    pub fn is_valid(&self, field: &FieldSpec) -> bool {
        let distinct = |i: usize, j: usize| self.lines[i] != self.lines[j] && self.points[i] != self.points[j];
        (0..4).all(|i| (i + 1..4).all(|j| distinct(i, j)))
            && (0..4).all(|i| {
                self.lines[i].contains(field, &self.points[i]) && self.lines[(i + 1) % 4].contains(field, &self.points[i])
            })
    }
}

fn check_family_dims(family: &[GenLine]) -> Result<()> {
    if family.iter().all(|l| l.dir.dim() == DIM && l.base.dim() == DIM) {
        Ok(())
    } else {
        Err(invalid(format!("family lines must live in dimension {DIM}")))
    }
}

/// Finds a C4 of lines as an 8-cycle in the bipartite graph between the
/// family and the points that lie on at least two family lines.
pub fn has_line_c4(field: &FieldSpec, family: &[GenLine]) -> Result<Option<LineC4Witness>> {
    if family.len() > MAX_FAMILY {
        return Err(too_big(format!("family of {} lines exceeds {MAX_FAMILY}", family.len())));
    }
    check_family_dims(family)?;
    let mut lines: Vec<&GenLine> = family.iter().collect();
    lines.sort_unstable();
    lines.dedup();

    let n_pts = (field.order() as usize).pow(DIM as u32);
    let on: Vec<Vec<u32>> = lines
        .iter()
        .map(|l| l.points(field).iter().map(|p| point_id(field, p) as u32).collect())
        .collect();
    let mut multiplicity = vec![0u32; n_pts];
    for pts in &on {
        for &p in pts {
            multiplicity[p as usize] += 1;
        }
    }
    // compact IDs for points on two or more lines, ascending by point ID
    let mut slot = vec![u32::MAX; n_pts];
    let mut shared = Vec::new();
    for (id, &m) in multiplicity.iter().enumerate() {
        if m >= 2 {
            slot[id] = shared.len() as u32;
            shared.push(id);
        }
    }
    let edges = on.iter().enumerate().flat_map(|(li, pts)| {
        let slot = &slot;
        pts.iter().filter(move |&&p| slot[p as usize] != u32::MAX).map(move |&p| (slot[p as usize], li as u32))
    });
    let g = BiGraph::from_edges(shared.len(), lines.len(), edges)?;
    let Some(cycle) = find_cycle(&g, 8)? else {
        return Ok(None);
    };
    // cycle = pt0 ln0 pt1 ln1 pt2 ln2 pt3 ln3; ln_i meets ln_{i+1} at pt_{i+1}
    let v = &cycle.vertices;
    let line_at = |i: usize| lines[v[2 * i + 1] as usize - shared.len()].clone();
    let point_at = |i: usize| id_point(field, DIM, shared[v[(2 * i) % 8] as usize]);
    let w = LineC4Witness {
        lines: [line_at(0), line_at(1), line_at(2), line_at(3)],
        points: [point_at(1), point_at(2), point_at(3), point_at(4)],
    };
    debug_assert!(w.is_valid(field));
    Ok(Some(w))
}

/// Insertion order for [`greedy_c4free`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyOrder {
    /// The order of [`all_genlines`].
    Identity,
    /// A ChaCha8 shuffle of that order.
    Seeded(u64),
}

#[derive(Clone, Debug)]
pub struct GreedyOutcome {
    /// Accepted lines in insertion order.
    pub family: Vec<GenLine>,
    /// Lines that would have closed a C4 of lines when they were offered.
    pub rejected: Vec<GenLine>,
    pub total_lines: usize,
}

impl GreedyOutcome {
    pub fn size(&self) -> usize {
        self.family.len()
    }

    /// Fraction of all lines of F_q^4 in the family.
    pub fn density(&self) -> f64 {
        self.family.len() as f64 / self.total_lines as f64
    }
}

/// Incremental C4-of-lines checker over a fixed universe of lines.
pub struct C4FreeFamily {
    /// point IDs of each universe line
    points: Vec<Vec<u32>>,
    /// family lines through each point
    through: Vec<Vec<u32>>,
    in_family: Vec<bool>,
    /// scratch: for a candidate `c`, the point where each family line meets `c`
    meets_candidate: Vec<u32>,
}

impl C4FreeFamily {
    pub fn new(field: &FieldSpec, universe: &[GenLine]) -> C4FreeFamily {
        let n_pts = (field.order() as usize).pow(DIM as u32);
        C4FreeFamily {
            points: universe
                .iter()
                .map(|l| l.points(field).iter().map(|p| point_id(field, p) as u32).collect())
                .collect(),
            through: vec![Vec::new(); n_pts],
            in_family: vec![false; universe.len()],
            meets_candidate: vec![u32::MAX; universe.len()],
        }
    }

    pub fn insert(&mut self, line: usize) {
        debug_assert!(!self.in_family[line]);
        self.in_family[line] = true;
        for &p in &self.points[line] {
            self.through[p as usize].push(line as u32);
        }
    }

    /// Whether adding `c` would close a C4 of lines `c a b d` with meeting
    /// points `p1 = c.a`, `p2 = a.b`, `p3 = b.d`, `p0 = d.c`. Only walks
    /// through `c` are explored.
    pub fn closes_c4(&mut self, c: usize) -> bool {
        if self.in_family[c] {
            return false;
        }
        for &p0 in &self.points[c] {
            for &d in &self.through[p0 as usize] {
                self.meets_candidate[d as usize] = p0;
            }
        }
        let found = self.search_through(c);
        for &p0 in &self.points[c] {
            for &d in &self.through[p0 as usize] {
                self.meets_candidate[d as usize] = u32::MAX;
            }
        }
        found
    }

    fn search_through(&self, c: usize) -> bool {
        for &p1 in &self.points[c] {
            for &a in &self.through[p1 as usize] {
                for &p2 in &self.points[a as usize] {
                    if p2 == p1 {
                        continue;
                    }
                    for &b in &self.through[p2 as usize] {
                        if b == a {
                            continue;
                        }
                        for &p3 in &self.points[b as usize] {
                            if p3 == p2 || p3 == p1 {
                                continue;
                            }
                            for &d in &self.through[p3 as usize] {
                                if d == a || d == b {
                                    continue;
                                }
                                let p0 = self.meets_candidate[d as usize];
                                if p0 != u32::MAX && p0 != p1 && p0 != p2 && p0 != p3 {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
        false
    }
}

/// Offers every line of F_q^4 once, in `order`, keeping it iff the family
/// stays free of C4s of lines. The result is maximal.
pub fn greedy_c4free(field: &FieldSpec, order: GreedyOrder) -> Result<GreedyOutcome> {
    if field.order() > MAX_GREEDY_ORDER {
        return Err(too_big(format!("greedy search needs q <= {MAX_GREEDY_ORDER}")));
    }
    let universe = all_genlines(field)?;
    let mut perm: Vec<usize> = (0..universe.len()).collect();
    if let GreedyOrder::Seeded(seed) = order {
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut fam = C4FreeFamily::new(field, &universe);
    let (mut family, mut rejected) = (Vec::new(), Vec::new());
    for i in perm {
        if fam.closes_c4(i) {
            rejected.push(universe[i].clone());
        } else {
            fam.insert(i);
            family.push(universe[i].clone());
        }
    }
    Ok(GreedyOutcome {
        family,
        rejected,
        total_lines: universe.len(),
    })
}

/// Re-checks from scratch that `outcome.family` admits none of the rejected
/// lines.
pub fn is_maximal(field: &FieldSpec, outcome: &GreedyOutcome) -> Result<bool> {
    let universe = all_genlines(field)?;
    let index: HashMap<&GenLine, usize> = universe.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let lookup = |l: &GenLine| index.get(l).copied().ok_or_else(|| invalid(format!("{l} is not canonical")));
    let mut fam = C4FreeFamily::new(field, &universe);
    for l in &outcome.family {
        fam.insert(lookup(l)?);
    }
    for l in &outcome.rejected {
        if !fam.closes_c4(lookup(l)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const FAMILY_MAGIC: &str = "girthforge-lines4";

pub fn write_family<W: Write>(field: &FieldSpec, family: &[GenLine], mut out: W) -> Result<()> {
    writeln!(
        out,
        "{FAMILY_MAGIC} p={} m={} n={}",
        field.characteristic(),
        field.degree(),
        family.len()
    )?;
    for l in family {
        writeln!(out, "{l}")?;
    }
    out.flush()?;
    Ok(())
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_coords(field: &FieldSpec, s: Option<&str>, key: &str, line: usize) -> Result<Point> {
    let body = s
        .and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| parse_err(line, format!("expected {key}=<a,b,c,d>")))?;
    let coords: Vec<Fe> = body
        .split(',')
        .map(|c| c.parse::<u32>().ok().and_then(|i| field.element(i).ok()))
        .collect::<Option<_>>()
        .ok_or_else(|| parse_err(line, format!("bad {key} coordinates")))?;
    if coords.len() != DIM {
        return Err(parse_err(line, format!("{key} needs {DIM} coordinates")));
    }
    Ok(Point::new(&coords))
}

/// Reads a family file; lines must already be canonical.
pub fn read_family<R: BufRead>(reader: R) -> Result<(FieldSpec, Vec<GenLine>)> {
    let mut lines = reader.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))??;
    let mut toks = header.split(' ');
    if toks.next() != Some(FAMILY_MAGIC) {
        return Err(parse_err(1, format!("missing {FAMILY_MAGIC} magic")));
    }
    let mut num = |key: &str| -> Result<u32> {
        toks.next()
            .and_then(|t| t.strip_prefix(key))
            .and_then(|t| t.strip_prefix('='))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| parse_err(1, format!("expected {key}=<int>")))
    };
    let (p, m, n) = (num("p")?, num("m")?, num("n")?);
    let field = FieldSpec::new(p, m)?;
    let mut family = Vec::with_capacity(n as usize);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 2;
        let mut parts = line.split(' ');
        let dir = parse_coords(&field, parts.next(), "dir", lineno)?;
        let base = parse_coords(&field, parts.next(), "base", lineno)?;
        let canon = canonical_genline(&field, &base, &dir).map_err(|e| parse_err(lineno, e.to_string()))?;
        if canon.dir != dir || canon.base != base {
            return Err(parse_err(lineno, "line is not in canonical form"));
        }
        family.push(canon);
    }
    if family.len() != n as usize {
        return Err(parse_err(1, format!("header says n={n}, found {}", family.len())));
    }
    Ok((field, family))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::graph::build;
    use crate::oracle::naive_has_line_c4;
    use crate::verify::count_cycles;

    fn field(p: u32, m: u32) -> FieldSpec {
        FieldSpec::new(p, m).unwrap()
    }

    fn pt(c: [u32; 4]) -> Point {
        Point::from_indices(&c)
    }

    fn line(f: &FieldSpec, x: [u32; 4], d: [u32; 4]) -> GenLine {
        canonical_genline(f, &pt(x), &pt(d)).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let f3 = field(3, 1);
        let l = line(&f3, [0, 0, 0, 0], [0, 2, 1, 0]);
        assert_eq!(l.dir, pt([0, 1, 2, 0]));
        assert_eq!(l.pivot(), 1);
        let x = pt([1, 2, 0, 1]);
        let d = pt([0, 2, 1, 0]);
        let a = canonical_genline(&f3, &x, &d).unwrap();
        let x2 = x.add_scaled(&f3, &d, Fe(2));
        assert_eq!(canonical_genline(&f3, &x2, &d).unwrap(), a);
        assert!(canonical_genline(&f3, &x, &Point::zero(4)).is_err());
        assert!(canonical_genline(&f3, &Point::zero(3), &pt([1, 0, 0, 0])).is_err());
    }

    #[test]
    fn canonicalization_covers_all_lines_over_f2() {
        let f2 = field(2, 1);
        let all = all_genlines(&f2).unwrap();
        assert_eq!(all.len(), 120);
        assert_eq!(total_line_count(2), 120);
        let set: HashSet<&GenLine> = all.iter().collect();
        assert_eq!(set.len(), 120);
        let mut images = HashSet::new();
        for x in 0..16 {
            for d in 1..16 {
                let l = canonical_genline(&f2, &id_point(&f2, 4, x), &id_point(&f2, 4, d)).unwrap();
                assert!(set.contains(&l));
                images.insert(l);
            }
        }
        assert_eq!(images.len(), 120);
        // equal point sets <=> equal lines
        let sets: HashSet<Vec<Point>> = all
            .iter()
            .map(|l| {
                let mut p = l.points(&f2);
                p.sort();
                p
            })
            .collect();
        assert_eq!(sets.len(), 120);
    }

    #[test]
    fn all_lines_count_matches_formula() {
        for (p, m) in [(3, 1), (2, 2)] {
            let f = field(p, m);
            assert_eq!(all_genlines(&f).unwrap().len() as u64, total_line_count(f.order() as u64));
        }
    }

    #[test]
    fn intersect_examples() {
        let f2 = field(2, 1);
        let a = line(&f2, [0; 4], [1, 0, 0, 0]);
        let b = line(&f2, [0; 4], [0, 1, 0, 0]);
        assert_eq!(intersect(&f2, &a, &a), Meet::Same);
        assert_eq!(intersect(&f2, &a, &b), Meet::At(pt([0; 4])));
        let a2 = line(&f2, [0, 1, 0, 0], [1, 0, 0, 0]);
        assert_eq!(intersect(&f2, &a, &a2), Meet::Disjoint);
        // skew: e1 through 0 and e2 through e3
        let skew = line(&f2, [0, 0, 1, 0], [0, 1, 0, 0]);
        assert_eq!(intersect(&f2, &a, &skew), Meet::Disjoint);
    }

    #[test]
    fn intersect_symmetric_and_correct_over_f2() {
        let f2 = field(2, 1);
        let all = all_genlines(&f2).unwrap();
        let sets: Vec<HashSet<Point>> = all.iter().map(|l| l.points(&f2).into_iter().collect()).collect();
        for i in 0..all.len() {
            for j in 0..all.len() {
                let m = intersect(&f2, &all[i], &all[j]);
                assert_eq!(m, intersect(&f2, &all[j], &all[i]));
                let common: Vec<&Point> = sets[i].intersection(&sets[j]).collect();
                match m {
                    Meet::Same => assert_eq!(i, j),
                    Meet::Disjoint => assert!(common.is_empty()),
                    Meet::At(p) => assert_eq!(common, vec![&p]),
                }
            }
        }
    }

    #[test]
    fn planar_quadrilateral_detected() {
        let f3 = field(3, 1);
        let (e1, e2) = ([1, 0, 0, 0], [0, 1, 0, 0]);
        let family = vec![
            line(&f3, [0; 4], e1),
            line(&f3, e2, e1),
            line(&f3, [0; 4], e2),
            line(&f3, e1, e2),
        ];
        let w = has_line_c4(&f3, &family).unwrap().unwrap();
        assert!(w.is_valid(&f3));
        let corners: HashSet<Point> = w.points.iter().cloned().collect();
        let expect: HashSet<Point> = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]].map(pt).into();
        assert_eq!(corners, expect);
        // dropping a side breaks it
        assert!(has_line_c4(&f3, &family[..3]).unwrap().is_none());
    }

    #[test]
    fn parallel_family_is_c4_free() {
        let f3 = field(3, 1);
        let all = all_genlines(&f3).unwrap();
        let d = pt([0, 1, 2, 1]);
        let fam: Vec<GenLine> = all.into_iter().filter(|l| l.dir == d).collect();
        assert_eq!(fam.len(), 27);
        assert!(has_line_c4(&f3, &fam).unwrap().is_none());
    }

    #[test]
    fn wenger_seed_shape() {
        for (p, m) in [(2, 1), (3, 1)] {
            let f = field(p, m);
            let seed = wenger_seed(&f).unwrap();
            let q = f.order() as usize;
            assert_eq!(seed.len(), q.pow(4));
            for l in &seed {
                assert_eq!(l.pivot(), 0);
                let z = l.dir.coords()[1];
                assert_eq!(l.dir, moment_vector(&f, z, 4));
                assert_eq!(canonical_genline(&f, &l.base, &l.dir).unwrap(), *l);
            }
        }
    }

    #[test]
    fn wenger_seed_c4_matches_d4_c8() {
        for (p, m) in [(2, 1), (3, 1)] {
            let f = field(p, m);
            let has = has_line_c4(&f, &wenger_seed(&f).unwrap()).unwrap();
            let c8 = count_cycles(&build(&f, 4).unwrap(), 8).unwrap().count;
            assert_eq!(has.is_some(), c8 > 0);
            if let Some(w) = has {
                assert!(w.is_valid(&f));
            }
        }
    }

    #[test]
    fn detector_matches_brute_force_small() {
        let f2 = field(2, 1);
        let all = all_genlines(&f2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut fam = all.clone();
            fam.shuffle(&mut rng);
            fam.truncate(12);
            assert_eq!(has_line_c4(&f2, &fam).unwrap().is_some(), naive_has_line_c4(&f2, &fam));
        }
    }

    #[test]
    fn incremental_checker_matches_detector() {
        let f2 = field(2, 1);
        let all = all_genlines(&f2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let mut idx: Vec<usize> = (0..all.len()).collect();
            idx.shuffle(&mut rng);
            let mut fam = C4FreeFamily::new(&f2, &all);
            let mut members = Vec::new();
            for &i in &idx[..10] {
                if !fam.closes_c4(i) {
                    fam.insert(i);
                    members.push(all[i].clone());
                }
            }
            assert!(has_line_c4(&f2, &members).unwrap().is_none());
            let c = idx[10];
            let mut with = members.clone();
            with.push(all[c].clone());
            assert_eq!(fam.closes_c4(c), has_line_c4(&f2, &with).unwrap().is_some());
        }
    }

    #[test]
    fn greedy_postconditions() {
        let f2 = field(2, 1);
        for order in [GreedyOrder::Identity, GreedyOrder::Seeded(0), GreedyOrder::Seeded(5)] {
            let out = greedy_c4free(&f2, order).unwrap();
            assert_eq!(out.size() + out.rejected.len(), 120);
            assert!(out.size() >= 8 && out.size() <= 120);
            assert!(has_line_c4(&f2, &out.family).unwrap().is_none());
            assert!(is_maximal(&f2, &out).unwrap());
            for r in &out.rejected {
                let mut with = out.family.clone();
                with.push(r.clone());
                assert!(has_line_c4(&f2, &with).unwrap().is_some());
            }
        }
        assert!(greedy_c4free(&field(5, 1), GreedyOrder::Identity).is_err());
    }

    /// Greedy with the quadruple-loop detector in place of the incremental
    /// checker.
    fn naive_greedy(f: &FieldSpec, order: GreedyOrder) -> Vec<GenLine> {
        let mut universe = all_genlines(f).unwrap();
        if let GreedyOrder::Seeded(seed) = order {
            universe.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        let mut fam: Vec<GenLine> = Vec::new();
        for l in universe {
            fam.push(l);
            if naive_has_line_c4(f, &fam) {
                fam.pop();
            }
        }
        fam
    }

    #[test]
    fn greedy_regression_sizes() {
        let f2 = field(2, 1);
        for (order, size) in [(GreedyOrder::Identity, GREEDY_F2_IDENTITY), (GreedyOrder::Seeded(0), GREEDY_F2_SEED0)] {
            let out = greedy_c4free(&f2, order).unwrap();
            assert_eq!(out.family, naive_greedy(&f2, order));
            assert_eq!(out.size(), size, "{order:?}");
        }
    }

    // Sizes fixed by the deterministic orders; the naive greedy above
    // reproduces the same families.
    const GREEDY_F2_IDENTITY: usize = 27;
    const GREEDY_F2_SEED0: usize = 30;

    #[test]
    fn family_file_round_trip() {
        let f3 = field(3, 1);
        let fam: Vec<GenLine> = wenger_seed(&f3).unwrap().into_iter().take(10).collect();
        let mut buf = Vec::new();
        write_family(&f3, &fam, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("girthforge-lines4 p=3 m=1 n=10\ndir=1,0,0,0 base=0,0,0,0\n"));
        let (f, back) = read_family(&buf[..]).unwrap();
        assert_eq!(f, f3);
        assert_eq!(back, fam);
        let bad = b"girthforge-lines4 p=3 m=1 n=1\ndir=2,0,0,0 base=0,0,0,0\n";
        assert!(read_family(&bad[..]).is_err());
    }
}
