//! Points of F_q^k and lines whose directions lie on the moment curve
//! `z -> (1, z, z^2, ..., z^{k-1})`.

use std::fmt;

use arrayvec::ArrayVec;

use crate::elim::row_reduce;
use crate::error::{invalid, too_big, Result};
use crate::gf::{Fe, FieldSpec};

/// Largest ambient dimension.
pub const MAX_DIM: usize = 8;

/// Cap on `q^k`, the number of points (and of moment lines).
pub const MAX_LINES: u64 = 1 << 22;

/// A vector in F_q^k, `k <= MAX_DIM`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: ArrayVec<Fe, MAX_DIM>,
}

impl Point {
    /// # Panics
    /// If more than [`MAX_DIM`] coordinates are given.
    pub fn new(coords: &[Fe]) -> Point {
        assert!(coords.len() <= MAX_DIM, "dimension {} exceeds {MAX_DIM}", coords.len());
        Point {
            coords: coords.iter().copied().collect(),
        }
    }

    pub fn from_indices(idx: &[u32]) -> Point {
        Point::new(&idx.iter().map(|&i| Fe(i)).collect::<Vec<_>>())
    }

    pub fn zero(k: usize) -> Point {
        Point::new(&vec![Fe::ZERO; k])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `self + scale * dir`.
    pub fn add_scaled(&self, field: &FieldSpec, dir: &Point, scale: Fe) -> Point {
        debug_assert_eq!(self.dim(), dir.dim());
        Point {
            coords: self
                .coords
                .iter()
                .zip(&dir.coords)
                .map(|(&a, &d)| field.add(a, field.mul(scale, d)))
                .collect(),
        }
    }

    pub fn sub(&self, field: &FieldSpec, other: &Point) -> Point {
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, field: &FieldSpec, s: Fe) -> Point {
        Point {
            coords: self.coords.iter().map(|&a| field.mul(s, a)).collect(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.0.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The line `{base + y * (1, z, ..., z^{k-1}) : y in F_q}` stored with
/// `base.coords[0] == 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MomentLine {
    pub z: Fe,
    pub base: Point,
}

impl MomentLine {
    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn is_parallel(&self, other: &MomentLine) -> bool {
        parallel(self, other)
    }
}

pub(crate) fn check_dim(k: usize) -> Result<()> {
    if (2..=MAX_DIM).contains(&k) {
        Ok(())
    } else {
        Err(invalid(format!("dimension k = {k} outside 2..={MAX_DIM}")))
    }
}

/// `q^k` when it is within [`MAX_LINES`].
pub(crate) fn checked_count(field: &FieldSpec, k: usize) -> Result<usize> {
    check_dim(k)?;
    let n = (field.order() as u64).checked_pow(k as u32).filter(|&n| n <= MAX_LINES);
    n.map(|n| n as usize)
        .ok_or_else(|| too_big(format!("{}^{k} exceeds the cap {MAX_LINES}", field.order())))
}

/// `(1, z, z^2, ..., z^{k-1})`.
pub fn moment_vector(field: &FieldSpec, z: Fe, k: usize) -> Point {
    let mut coords = ArrayVec::<Fe, MAX_DIM>::new();
    let mut acc = Fe::ONE;
    for _ in 0..k {
        coords.push(acc);
        acc = field.mul(acc, z);
    }
    Point { coords }
}

/// Canonical line through `x` with direction parameter `z`.
pub fn line_through(field: &FieldSpec, x: &Point, z: Fe) -> MomentLine {
    let dir = moment_vector(field, z, x.dim());
    let shift = field.neg(x.coords[0]);
    MomentLine {
        z,
        base: x.add_scaled(field, &dir, shift),
    }
}

/// The `q` points of `line`, in order of `y = 0, 1, ..., q-1`.
pub fn points_on(field: &FieldSpec, line: &MomentLine) -> Vec<Point> {
    let dir = moment_vector(field, line.z, line.dim());
    field
        .elements()
        .map(|y| line.base.add_scaled(field, &dir, y))
        .collect()
}

pub fn parallel(l1: &MomentLine, l2: &MomentLine) -> bool {
    l1.z == l2.z
}

/// Rank of the matrix with rows `moment_vector(z_i)`.
pub fn vandermonde_rank(field: &FieldSpec, zs: &[Fe], k: usize) -> Result<usize> {
    check_dim(k)?;
    if zs.len() > k {
        return Err(invalid(format!("{} parameters exceed dimension {k}", zs.len())));
    }
    for (i, a) in zs.iter().enumerate() {
        if zs[..i].contains(a) {
            return Err(invalid(format!("repeated parameter {a}")));
        }
    }
    let mut rows: Vec<Vec<Fe>> = zs
        .iter()
        .map(|&z| moment_vector(field, z, k).coords().to_vec())
        .collect();
    Ok(row_reduce(field, &mut rows).len())
}

/// All `q^k` canonical lines, ordered by `z` then by the base-q encoding of
/// `base.coords[1..]`.
pub fn enumerate_lines(field: &FieldSpec, k: usize) -> Result<Vec<MomentLine>> {
    let n = checked_count(field, k)?;
    let q = field.order();
    let per_dir = n / q as usize;
    let mut out = Vec::with_capacity(n);
    for z in field.elements() {
        for b in 0..per_dir {
            let mut coords = ArrayVec::<Fe, MAX_DIM>::new();
            coords.push(Fe::ZERO);
            let mut rest = b as u32;
            for _ in 1..k {
                coords.push(Fe(rest % q));
                rest /= q;
            }
            out.push(MomentLine {
                z,
                base: Point { coords },
            });
        }
    }
    Ok(out)
}
