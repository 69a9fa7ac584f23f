//! Arithmetic in GF(p^m).
//!
//! An element is stored as a single integer `index` whose base-`p` digits are
//! the coefficients `c_0, c_1, ..., c_{m-1}` of `c_0 + c_1 t + ... + c_{m-1} t^{m-1}`,
//! with `c_0` the least significant digit. Multiplication reduces by a monic
//! irreducible modulus chosen deterministically by [`FieldSpec::new`].

use std::fmt;

use arrayvec::ArrayVec;

use crate::error::{invalid, too_big, Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Largest extension degree that still fits under [`MAX_ORDER`] (p = 2).
const MAX_DEGREE: usize = 20;

type Digits = ArrayVec<u32, MAX_DEGREE>;

/// A field element in canonical integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field GF(p^m) together with its reduction polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    /// `c_0, ..., c_m` with `c_m = 1`. For prime fields this is the
    /// placeholder `x` and is never used for reduction.
    modulus: Vec<u32>,
}

/// Convenience alias for [`FieldSpec::new`].
pub fn make_field(p: u32, m: u32) -> Result<FieldSpec> {
    FieldSpec::new(p, m)
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(invalid(format!("p = {p} is not prime")));
        }
        if m == 0 {
            return Err(invalid("extension degree m must be at least 1"));
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| too_big(format!("{p}^{m} exceeds the field order cap {MAX_ORDER}")))?;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, m as usize)
        };
        Ok(FieldSpec {
            p,
            m,
            q: q as u32,
            modulus,
        })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Elements in index order `0, 1, ..., q - 1`.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe)
    }

    pub fn element(&self, index: u32) -> Result<Fe> {
        if index < self.q {
            Ok(Fe(index))
        } else {
            Err(invalid(format!("element index {index} outside GF({})", self.q)))
        }
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.m {
            let d = (x % p + y % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.m == 1 {
            return Fe(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.m {
            let d = (p - x % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.m == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let m = self.m as usize;
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Eliminate t^d for d >= m using t^m = -(c_0 + ... + c_{m-1} t^{m-1}).
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &mi) in self.modulus[..m].iter().enumerate() {
                let slot = &mut prod[d - m + i];
                *slot = (*slot + (p - c) * mi as u64) % p;
            }
        }
        let digits: Digits = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits)
    }

    /// Square-and-multiply; `pow(a, 0) = 1` for every `a`, including zero.
    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(Fe(inv_mod(a.0, self.p)));
        }
        let p = self.p;
        let mut r0 = self.modulus.clone();
        let mut r1: Vec<u32> = self.digits(a).to_vec();
        trim(&mut r1);
        let mut s0: Vec<u32> = Vec::new();
        let mut s1: Vec<u32> = vec![1];
        while !r1.is_empty() {
            let (quot, rem) = poly_divrem(&r0, &r1, p);
            let next = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next);
        }
        // r0 is the (constant, nonzero) gcd.
        debug_assert_eq!(r0.len(), 1);
        let scale = inv_mod(r0[0], p);
        let mut digits: Digits = s0.iter().map(|&c| (c as u64 * scale as u64 % p as u64) as u32).collect();
        while digits.len() < self.m as usize {
            digits.push(0);
        }
        Ok(self.from_digits(&digits))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn digits(&self, a: Fe) -> Digits {
        let mut x = a.0;
        let mut out = Digits::new();
        for _ in 0..self.m {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn from_digits(&self, digits: &[u32]) -> Fe {
        Fe(digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d))
    }

    /// Human-readable modulus, e.g. `x^2+1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        terms.join("+")
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    s0.rem_euclid(p as i64) as u32
}

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b` over GF(p); `b` must be nonzero and trimmed.
fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut rem: Vec<u32> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p) as u64;
    let mut quot = vec![0u32; rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = (*rem.last().unwrap() as u64 * lead_inv % p as u64) as u32;
        quot[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Monic polynomial of degree `deg` whose low coefficients are the base-`p`
/// digits of `n`, most significant digit first when `lex` is set.
fn monic_from_counter(n: u64, p: u32, deg: usize, lex: bool) -> Vec<u32> {
    let mut coeffs = vec![0u32; deg + 1];
    let mut x = n;
    for i in 0..deg {
        let slot = if lex { deg - 1 - i } else { i };
        coeffs[slot] = (x % p as u64) as u32;
        x /= p as u64;
    }
    coeffs[deg] = 1;
    coeffs
}

/// True when no monic polynomial of degree `1..=deg/2` divides `f`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for n in 0..(p as u64).pow(d as u32) {
            let g = monic_from_counter(n, p, d, false);
            if poly_divrem(f, &g, p).1.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Scans monic degree-`m` polynomials in lexicographic order of
/// `(c_0, ..., c_{m-1})` and returns the first irreducible one.
fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    (0..(p as u64).pow(m as u32))
        .map(|n| monic_from_counter(n, p, m, true))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
