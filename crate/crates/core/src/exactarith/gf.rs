//! Finite fields `GF(p^k)` as explicit quotients `F_p[a]/(modulus)`, with the
//! Artin-Schreier solver and degree-p extension steps used to lift Frobenius
//! fixed points.
//!
//! The modulus is a monic irreducible found by deterministic search when not
//! supplied, checked by trial factorization; the extension degree is capped at
//! 12. Elements are coefficient vectors over `F_p`, compared lexicographically
//! when a canonical representative (e.g. the least root) is required.

use crate::exactarith::{is_prime, mod_inverse};
use crate::{Error, Result};

/// Element of `GF(p^k)`: coefficients of `1, a, ..., a^{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(pub Vec<u64>);

/// A finite field `GF(p^k)`, the quotient of `F_p[a]` by a monic irreducible
/// of degree `k` (absent when `k = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u64,
    k: usize,
    /// Full coefficient vector of the modulus, degree k, leading coefficient 1.
    modulus: Option<Vec<u64>>,
}

pub const DEGREE_CAP: usize = 12;

impl FieldDescriptor {
    /// Prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldDescriptor { p, k: 1, modulus: None })
    }

    /// `GF(p^k)` with the given monic modulus, validated irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let k = modulus.len().saturating_sub(1);
        if k == 0 || *modulus.last().unwrap() % p != 1 {
            return Err(Error::InvalidParameter("modulus must be monic of positive degree".into()));
        }
        if k > DEGREE_CAP {
            return Err(Error::DegreeCap(k));
        }
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p, degree: k });
        }
        Ok(FieldDescriptor { p, k, modulus: if k == 1 { None } else { Some(modulus) } })
    }

    /// `GF(p^k)` with the first irreducible monic modulus in the canonical
    /// enumeration (coefficient vectors read as base-p counters, ascending).
    pub fn extension(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        if k > DEGREE_CAP {
            return Err(Error::DegreeCap(k));
        }
        if k == 1 {
            return Self::prime(p);
        }
        let total = (p as u128).pow(k as u32);
        let mut code = 0u128;
        while code < total {
            let mut f = vec![0u64; k + 1];
            let mut c = code;
            for coeff in f.iter_mut().take(k) {
                *coeff = (c % p as u128) as u64;
                c /= p as u128;
            }
            f[k] = 1;
            if is_irreducible(&f, p) {
                return Self::with_modulus(p, f);
            }
            code += 1;
        }
        Err(Error::IrreducibleSearch(k))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Field order `p^k`.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.k as u32)
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn zero(&self) -> GfElem {
        GfElem(vec![0; self.k])
    }

    pub fn one(&self) -> GfElem {
        self.from_u64(1)
    }

    /// The residue of the symbol `a` for `k > 1`; the element `1` when `k = 1`.
    pub fn gen(&self) -> GfElem {
        let mut v = vec![0; self.k];
        if self.k > 1 {
            v[1] = 1;
        } else {
            v[0] = 1;
        }
        GfElem(v)
    }

    pub fn from_u64(&self, c: u64) -> GfElem {
        let mut v = vec![0; self.k];
        v[0] = c % self.p;
        GfElem(v)
    }

    pub fn from_i64(&self, c: i64) -> GfElem {
        let m = c.rem_euclid(self.p as i64) as u64;
        self.from_u64(m)
    }

    pub fn is_zero(&self, e: &GfElem) -> bool {
        e.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &GfElem, y: &GfElem) -> GfElem {
        GfElem(x.0.iter().zip(&y.0).map(|(&a, &b)| (a + b) % self.p).collect())
    }

    pub fn sub(&self, x: &GfElem, y: &GfElem) -> GfElem {
        GfElem(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| (a + self.p - b % self.p) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, x: &GfElem) -> GfElem {
        GfElem(x.0.iter().map(|&a| (self.p - a % self.p) % self.p).collect())
    }

    pub fn mul(&self, x: &GfElem, y: &GfElem) -> GfElem {
        if self.k == 1 {
            return GfElem(vec![x.0[0] * y.0[0] % self.p]);
        }
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        GfElem(self.reduce_poly(prod))
    }

    /// Reduce a coefficient vector modulo the modulus down to length k.
    fn reduce_poly(&self, mut v: Vec<u64>) -> Vec<u64> {
        let m = self.modulus.as_ref().expect("k > 1 has a modulus");
        for i in (self.k..v.len()).rev() {
            let c = v[i] % self.p;
            if c != 0 {
                for j in 0..self.k {
                    let sub = c * m[j] % self.p;
                    v[i - self.k + j] = (v[i - self.k + j] + self.p - sub) % self.p;
                }
            }
            v[i] = 0;
        }
        v.truncate(self.k);
        v
    }

    pub fn inv(&self, x: &GfElem) -> GfElem {
        assert!(!self.is_zero(x), "inverse of zero");
        if self.k == 1 {
            return GfElem(vec![mod_inverse(x.0[0], self.p)]);
        }
        // extended Euclid in F_p[a] against the modulus
        let m = self.modulus.as_ref().unwrap().clone();
        let (mut r0, mut r1) = (m, x.0.clone());
        let (mut s0, mut s1) = (vec![0u64], vec![1u64]);
        while !poly_is_zero(&r1) {
            let (q, rem) = poly_divmod(&r0, &r1, self.p);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1, self.p), self.p);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant gcd
        let lead = *r0.iter().rev().find(|&&c| c != 0).unwrap();
        let scale = mod_inverse(lead, self.p);
        let mut out = vec![0u64; self.k];
        for (i, &c) in s0.iter().enumerate().take(self.k) {
            out[i] = c * scale % self.p;
        }
        GfElem(out)
    }

    pub fn pow(&self, x: &GfElem, mut e: u64) -> GfElem {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Entrywise Frobenius `c -> c^p`.
    pub fn frobenius(&self, x: &GfElem) -> GfElem {
        self.pow(x, self.p)
    }

    /// Inverse Frobenius `c -> c^{p^{k-1}}`.
    pub fn frobenius_inv(&self, x: &GfElem) -> GfElem {
        if self.k == 1 {
            return x.clone();
        }
        self.pow(x, self.p.pow(self.k as u32 - 1))
    }

    /// All field elements in lexicographic coordinate order. Guarded for small
    /// fields only.
    pub fn all_elements(&self) -> Vec<GfElem> {
        let order = self.order();
        assert!(order <= 1 << 16, "field too large to enumerate");
        let mut out = Vec::with_capacity(order as usize);
        let mut v = vec![0u64; self.k];
        loop {
            out.push(GfElem(v.clone()));
            let mut i = self.k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                v[i] += 1;
                if v[i] < self.p {
                    break;
                }
                v[i] = 0;
            }
        }
    }

    /// Flatten to F_p coordinates (identity; kept for symmetry with unflatten).
    pub fn to_fp_coords(&self, e: &GfElem) -> Vec<u64> {
        e.0.clone()
    }

    pub fn from_fp_coords(&self, v: &[u64]) -> GfElem {
        assert_eq!(v.len(), self.k);
        GfElem(v.iter().map(|&c| c % self.p).collect())
    }

    /// Canonical text form, `GF(p)` or `GF(p^k; modulus=<poly in a>)`.
    pub fn text(&self) -> String {
        match &self.modulus {
            None => format!("GF({})", self.p),
            Some(m) => format!("GF({}^{}; modulus={})", self.p, self.k, poly_text(m)),
        }
    }

    /// Parse the canonical text form.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad field descriptor: {s}")))?;
        match inner.split_once(';') {
            None => {
                if let Some((p, k)) = inner.split_once('^') {
                    let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime: {inner}")))?;
                    let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad degree: {inner}")))?;
                    Self::extension(p, k)
                } else {
                    let p: u64 = inner.trim().parse().map_err(|_| Error::Parse(format!("bad prime: {inner}")))?;
                    Self::prime(p)
                }
            }
            Some((pk, rest)) => {
                let (p, k) = pk
                    .split_once('^')
                    .ok_or_else(|| Error::Parse(format!("expected p^k in {s}")))?;
                let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime in {s}")))?;
                let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad degree in {s}")))?;
                let m = rest
                    .trim()
                    .strip_prefix("modulus=")
                    .ok_or_else(|| Error::Parse(format!("expected modulus= in {s}")))?;
                let coeffs = parse_poly_in_a(m, p, k + 1)?;
                let field = Self::with_modulus(p, coeffs)?;
                if field.k != k {
                    return Err(Error::Parse(format!("modulus degree does not match {k}")));
                }
                Ok(field)
            }
        }
    }

    /// Element text form: an integer for prime fields, a polynomial in `a`
    /// otherwise.
    pub fn elem_text(&self, e: &GfElem) -> String {
        if self.k == 1 {
            return e.0[0].to_string();
        }
        poly_text(&e.0)
    }

    pub fn parse_elem(&self, s: &str) -> Result<GfElem> {
        // accept powers of `a` up to twice the degree and reduce
        let coeffs = parse_poly_in_a(s, self.p, 2 * self.k.max(1))?;
        if self.k == 1 {
            if coeffs[1..].iter().any(|&c| c != 0) {
                return Err(Error::Parse(format!("prime field element must be an integer: {s}")));
            }
            return Ok(GfElem(vec![coeffs[0]]));
        }
        Ok(GfElem(self.reduce_poly(coeffs)))
    }
}

fn poly_text(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "a".to_string(),
            (1, c) => format!("{c}*a"),
            (i, 1) => format!("a^{i}"),
            (i, c) => format!("{c}*a^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Parse a polynomial in `a` with nonnegative integer coefficients into a
/// coefficient vector of the given length.
fn parse_poly_in_a(s: &str, p: u64, len: usize) -> Result<Vec<u64>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs = vec![0u64; len];
    if compact.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let with_sign = if compact.starts_with('+') || compact.starts_with('-') {
        compact
    } else {
        format!("+{compact}")
    };
    let mut rest: &str = &with_sign;
    while !rest.is_empty() {
        let sign = match rest.chars().next().unwrap() {
            '+' => 1i64,
            '-' => -1i64,
            _ => return Err(Error::Parse(format!("bad element term in {s}"))),
        };
        rest = &rest[1..];
        let end = rest
            .find(['+', '-'])
            .unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let (coeff, mono) = match term.split_once('*') {
            Some((c, m)) => (c.parse::<u64>().map_err(|_| Error::Parse(format!("bad coefficient in {term}")))?, Some(m)),
            None => {
                if term.starts_with('a') {
                    (1u64, Some(term))
                } else {
                    (term.parse::<u64>().map_err(|_| Error::Parse(format!("bad constant {term}")))?, None)
                }
            }
        };
        let exp = match mono {
            None => 0usize,
            Some(m) => {
                let m = m
                    .strip_prefix('a')
                    .ok_or_else(|| Error::Parse(format!("expected power of a in {term}")))?;
                if m.is_empty() {
                    1
                } else {
                    m.strip_prefix('^')
                        .ok_or_else(|| Error::Parse(format!("expected ^ in {term}")))?
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {term}")))?
                }
            }
        };
        if exp >= len {
            return Err(Error::Parse(format!("exponent {exp} out of range in {s}")));
        }
        let signed = sign * (coeff % p) as i64;
        coeffs[exp] = (coeffs[exp] as i64 + signed).rem_euclid(p as i64) as u64;
    }
    Ok(coeffs)
}

// dense little-endian polynomial helpers over F_p

fn poly_is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn poly_mul(x: &[u64], y: &[u64], p: u64) -> Vec<u64> {
    if poly_is_zero(x) || poly_is_zero(y) {
        return vec![0];
    }
    let mut out = vec![0u64; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    out
}

fn poly_sub(x: &[u64], y: &[u64], p: u64) -> Vec<u64> {
    let n = x.len().max(y.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let a = x.get(i).copied().unwrap_or(0) % p;
        let b = y.get(i).copied().unwrap_or(0) % p;
        out[i] = (a + p - b) % p;
    }
    out
}

fn poly_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = poly_deg(den).expect("division by zero polynomial");
    let lead_inv = mod_inverse(den[dd], p);
    let mut rem: Vec<u64> = num.iter().map(|&c| c % p).collect();
    let mut quot = vec![0u64; num.len()];
    while let Some(dn) = poly_deg(&rem) {
        if dn < dd {
            break;
        }
        let c = rem[dn] * lead_inv % p;
        let shift = dn - dd;
        quot[shift] = c;
        for i in 0..=dd {
            let sub = c * den[i] % p;
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
    }
    (quot, rem)
}

/// Trial factorization: no monic divisor of degree 1..k/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = match poly_deg(f) {
        Some(k) if k >= 1 => k,
        _ => return false,
    };
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let total = (p as u128).pow(d as u32);
        let mut code = 0u128;
        while code < total {
            let mut g = vec![0u64; d + 1];
            let mut c = code;
            for coeff in g.iter_mut().take(d) {
                *coeff = (c % p as u128) as u64;
                c /= p as u128;
            }
            g[d] = 1;
            let (_, rem) = poly_divmod(f, &g, p);
            if poly_is_zero(&rem) {
                return false;
            }
            code += 1;
        }
    }
    true
}

// small dense F_p linear algebra used by the Artin-Schreier machinery

fn fp_solve(mat: &[Vec<u64>], rhs: &[u64], p: u64) -> Option<Vec<u64>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut aug: Vec<Vec<u64>> = mat
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v: Vec<u64> = r.iter().map(|&c| c % p).collect();
            v.push(b % p);
            v
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let piv = (rank..rows).find(|&r| aug[r][col] != 0);
        let Some(piv) = piv else { continue };
        aug.swap(rank, piv);
        let inv = mod_inverse(aug[rank][col], p);
        for x in aug[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && aug[r][col] != 0 {
                let c = aug[r][col];
                for j in col..=cols {
                    let sub = c * aug[rank][j] % p;
                    aug[r][j] = (aug[r][j] + p - sub) % p;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    // inconsistent if a zero row has nonzero rhs
    for r in rank..rows {
        if aug[r][cols] != 0 {
            return None;
        }
    }
    let mut sol = vec![0u64; cols];
    for col in 0..cols {
        if pivot_of_col[col] != usize::MAX {
            sol[col] = aug[pivot_of_col[col]][cols];
        }
    }
    Some(sol)
}

/// Solve `t^p - t + c = 0` in `F`. The map `t -> t^p - t` is F_p-linear, so
/// this is a linear system over `F_p`; among the roots (a coset of `F_p`) the
/// lexicographically least coordinate vector is returned.
pub fn artin_schreier_solve(field: &FieldDescriptor, c: &GfElem) -> Option<GfElem> {
    let p = field.p();
    let k = field.k();
    // columns: coords of (a^u)^p - a^u
    let mut cols = Vec::with_capacity(k);
    for u in 0..k {
        let mut basis = vec![0u64; k];
        basis[u] = 1;
        let e = GfElem(basis);
        let img = field.sub(&field.frobenius(&e), &e);
        cols.push(img.0);
    }
    let mat: Vec<Vec<u64>> = (0..k).map(|row| (0..k).map(|col| cols[col][row]).collect()).collect();
    let rhs = field.neg(c).0;
    let particular = fp_solve(&mat, &rhs, p)?;
    // the kernel of t^p - t is exactly the constants F_p
    let mut best: Option<GfElem> = None;
    for lambda in 0..p {
        let mut cand = particular.clone();
        cand[0] = (cand[0] + lambda) % p;
        let cand = GfElem(cand);
        debug_assert!(field.is_zero(&field.add(
            &field.sub(&field.frobenius(&cand), &cand),
            c
        )));
        if best.as_ref().map_or(true, |b| cand.0 < b.0) {
            best = Some(cand);
        }
    }
    let t = best.unwrap();
    assert!(field.is_zero(&field.add(&field.sub(&field.frobenius(&t), &t), c)));
    Some(t)
}

/// Embedding of one finite field into another, given by the image of the
/// generator; application evaluates the coefficient polynomial at that image.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    pub src: FieldDescriptor,
    pub dst: FieldDescriptor,
    pub gen_image: GfElem,
}

impl FieldEmbedding {
    pub fn identity(field: &FieldDescriptor) -> Self {
        FieldEmbedding { src: field.clone(), dst: field.clone(), gen_image: field.gen() }
    }

    pub fn apply(&self, e: &GfElem) -> GfElem {
        // Horner evaluation of the coefficient polynomial at gen_image
        let mut acc = self.dst.zero();
        for &c in e.0.iter().rev() {
            acc = self.dst.mul(&acc, &self.gen_image);
            acc = self.dst.add(&acc, &self.dst.from_u64(c));
        }
        acc
    }

    /// Compose with a following embedding.
    pub fn then(&self, next: &FieldEmbedding) -> FieldEmbedding {
        assert_eq!(self.dst, next.src, "embedding composition mismatch");
        FieldEmbedding {
            src: self.src.clone(),
            dst: next.dst.clone(),
            gen_image: next.apply(&self.gen_image),
        }
    }
}

/// A degree-p extension adjoining a root of `T^p - T + c`.
#[derive(Debug, Clone)]
pub struct ArtinSchreierExtension {
    pub field: FieldDescriptor,
    pub root: GfElem,
    pub embed: FieldEmbedding,
}

/// Extend `F` by a root of the unsolvable equation `T^p - T + c = 0`. The
/// result is the degree-p extension with an explicit monic modulus over `F_p`,
/// the root expressed there, and the compatible embedding of `F`.
pub fn extend_by_artin_schreier(
    field: &FieldDescriptor,
    c: &GfElem,
) -> Result<ArtinSchreierExtension> {
    if artin_schreier_solve(field, c).is_some() {
        return Err(Error::SolvableInBaseField);
    }
    let p = field.p();
    let k = field.k();
    let new_k = k * p as usize;
    if new_k > DEGREE_CAP {
        return Err(Error::DegreeCap(new_k));
    }
    if k == 1 {
        // modulus is T^p - T + c itself
        let mut m = vec![0u64; p as usize + 1];
        m[0] = c.0[0] % p;
        m[1] = p - 1;
        m[p as usize] = 1;
        let ext = FieldDescriptor::with_modulus(p, m)?;
        let root = ext.gen();
        let embed = FieldEmbedding { src: field.clone(), dst: ext.clone(), gen_image: ext.one() };
        return Ok(ArtinSchreierExtension { field: ext, root, embed });
    }
    flatten_tower(field, c)
}

/// Tower element: polynomial in the new root T of degree < p over the base.
type Tower = Vec<GfElem>;

struct TowerCtx<'a> {
    base: &'a FieldDescriptor,
    c: &'a GfElem,
    p: usize,
}

impl TowerCtx<'_> {
    fn zero(&self) -> Tower {
        vec![self.base.zero(); self.p]
    }

    fn mul(&self, x: &Tower, y: &Tower) -> Tower {
        let mut prod = vec![self.base.zero(); 2 * self.p - 1];
        for (i, a) in x.iter().enumerate() {
            if self.base.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                let t = self.base.mul(a, b);
                prod[i + j] = self.base.add(&prod[i + j], &t);
            }
        }
        // reduce with T^p = T - c
        for i in (self.p..prod.len()).rev() {
            let coeff = prod[i].clone();
            if self.base.is_zero(&coeff) {
                continue;
            }
            let lower = i - self.p;
            // T^i = T^{lower} * (T - c)
            let t1 = coeff.clone();
            prod[lower + 1] = self.base.add(&prod[lower + 1], &t1);
            let t2 = self.base.mul(&coeff, self.c);
            prod[lower] = self.base.sub(&prod[lower], &t2);
            prod[i] = self.base.zero();
        }
        prod.truncate(self.p);
        prod
    }

    fn flatten(&self, x: &Tower) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.base.k() * self.p);
        for e in x {
            out.extend_from_slice(&e.0);
        }
        out
    }
}

/// Flatten `F[T]/(T^p - T + c)` to a single quotient of `F_p[a]` by finding a
/// generator and its minimal polynomial.
fn flatten_tower(field: &FieldDescriptor, c: &GfElem) -> Result<ArtinSchreierExtension> {
    let p = field.p();
    let k = field.k();
    let new_k = k * p as usize;
    let ctx = TowerCtx { base: field, c, p: p as usize };

    let mut root_t = ctx.zero();
    root_t[1] = field.one();
    let mut old_gen = ctx.zero();
    old_gen[0] = field.gen();

    // candidates g = t + mu for mu over the base field, in lexicographic order
    let mut candidates: Vec<Tower> = Vec::new();
    for mu in field.all_elements() {
        let mut g = root_t.clone();
        g[0] = field.add(&g[0], &mu);
        candidates.push(g);
    }
    // fallback: g = a*t + mu
    for mu in field.all_elements() {
        let mut g = ctx.zero();
        g[1] = field.gen();
        g[0] = mu;
        candidates.push(g);
    }

    for g in candidates {
        let Some((modulus, coords)) = minimal_polynomial(&ctx, &g, new_k, p) else {
            continue;
        };
        let ext = FieldDescriptor::with_modulus(p, modulus)?;
        // express the old generator and the root in powers of g
        let to_elem = |target: &Tower| -> Option<GfElem> {
            let rhs = ctx.flatten(target);
            let sol = fp_solve(&coords, &rhs, p)?;
            Some(GfElem(sol))
        };
        let gen_image = to_elem(&old_gen).ok_or(Error::GeneratorSearch)?;
        let root = to_elem(&root_t).ok_or(Error::GeneratorSearch)?;
        let embed = FieldEmbedding { src: field.clone(), dst: ext.clone(), gen_image };
        // the root must still satisfy its equation in the flat field
        let lhs = ext.add(&ext.sub(&ext.frobenius(&root), &root), &embed.apply(c));
        assert!(ext.is_zero(&lhs), "flattened root fails its equation");
        return Ok(ArtinSchreierExtension { field: ext, root, embed });
    }
    Err(Error::GeneratorSearch)
}

/// If `g` generates the tower over `F_p` (minimal polynomial of full degree),
/// return the monic minimal polynomial and the matrix whose columns are the
/// F_p-coordinates of `1, g, ..., g^{deg-1}` (rows indexed by tower coords).
fn minimal_polynomial(
    ctx: &TowerCtx,
    g: &Tower,
    full_degree: usize,
    p: u64,
) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
    let dim = full_degree;
    let mut powers: Vec<Tower> = Vec::with_capacity(dim + 1);
    let mut cur = ctx.zero();
    cur[0] = ctx.base.one();
    for _ in 0..=dim {
        powers.push(cur.clone());
        cur = ctx.mul(&cur, g);
    }
    // echelon over F_p, keyed by lead position, augmented to track combinations
    use std::collections::BTreeMap;
    let mut rows: BTreeMap<usize, (Vec<u64>, Vec<u64>)> = BTreeMap::new();
    for (i, pw) in powers.iter().enumerate() {
        let mut v = ctx.flatten(pw);
        let mut combo = vec![0u64; dim + 1];
        combo[i] = 1;
        // rows with lead L have no entries below L, so a single pass in
        // ascending lead order fully reduces v
        for (&lead, (rv, rc)) in rows.iter() {
            if v[lead] != 0 {
                let f = v[lead];
                for (x, y) in v.iter_mut().zip(rv) {
                    *x = (*x + (p - f % p) * y) % p;
                }
                for (x, y) in combo.iter_mut().zip(rc) {
                    *x = (*x + (p - f % p) * y) % p;
                }
            }
        }
        if v.iter().all(|&x| x == 0) {
            if i < dim {
                return None; // g generates a proper subfield
            }
            // dependence at i = dim: monic minimal polynomial of full degree
            let inv = mod_inverse(combo[dim], p);
            let modulus: Vec<u64> = combo.iter().map(|&x| x * inv % p).collect();
            let coords: Vec<Vec<u64>> = (0..dim)
                .map(|row| (0..dim).map(|col| ctx.flatten(&powers[col])[row]).collect())
                .collect();
            return Some((modulus, coords));
        }
        let lead = v.iter().position(|&x| x != 0).unwrap();
        let inv = mod_inverse(v[lead], p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        for x in combo.iter_mut() {
            *x = *x * inv % p;
        }
        rows.insert(lead, (v, combo));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        assert_eq!(f4.modulus().unwrap(), &[1, 1, 1]); // a^2 + a + 1
        let f8 = FieldDescriptor::extension(2, 3).unwrap();
        assert_eq!(f8.modulus().unwrap(), &[1, 1, 0, 1]); // a^3 + a + 1
        let f9 = FieldDescriptor::extension(3, 2).unwrap();
        assert_eq!(f9.modulus().unwrap(), &[1, 0, 1]); // a^2 + 1
    }

    #[test]
    fn reducible_rejected() {
        assert!(matches!(
            FieldDescriptor::with_modulus(2, vec![1, 0, 1]), // a^2+1 = (a+1)^2
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(FieldDescriptor::prime(6), Err(Error::NotPrime(6))));
        assert!(matches!(FieldDescriptor::extension(2, 13), Err(Error::DegreeCap(13))));
    }

    #[test]
    fn inverses_exhaustive() {
        for field in [
            FieldDescriptor::extension(2, 2).unwrap(),
            FieldDescriptor::extension(2, 3).unwrap(),
            FieldDescriptor::extension(3, 3).unwrap(),
            FieldDescriptor::prime(7).unwrap(),
        ] {
            for e in field.all_elements() {
                if field.is_zero(&e) {
                    continue;
                }
                let inv = field.inv(&e);
                assert_eq!(field.mul(&e, &inv), field.one(), "in {}", field.text());
            }
        }
    }

    #[test]
    fn ring_axioms_spot() {
        let f = FieldDescriptor::extension(3, 2).unwrap();
        let elems = f.all_elements();
        for x in &elems {
            for y in &elems {
                for z in elems.iter().take(3) {
                    let ab = f.mul(&f.add(x, y), z);
                    let d = f.add(&f.mul(x, z), &f.mul(y, z));
                    assert_eq!(ab, d);
                    assert_eq!(f.mul(&f.mul(x, y), z), f.mul(x, &f.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn artin_schreier_examples() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        assert_eq!(artin_schreier_solve(&f2, &f2.from_u64(0)), Some(f2.zero()));
        assert_eq!(artin_schreier_solve(&f2, &f2.from_u64(1)), None);

        // over F_4 the equation t^2 - t + 1 = 0 is solved by the generator
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let t = artin_schreier_solve(&f4, &f4.one()).unwrap();
        // exhaustive oracle over F_4
        let roots: Vec<GfElem> = f4
            .all_elements()
            .into_iter()
            .filter(|e| f4.is_zero(&f4.add(&f4.sub(&f4.frobenius(e), e), &f4.one())))
            .collect();
        assert!(roots.contains(&t));
        assert_eq!(t, roots.iter().min_by(|a, b| a.0.cmp(&b.0)).unwrap().clone());
        // omega^2 + omega + 1 = 0
        let lhs = f4.add(&f4.add(&f4.mul(&t, &t), &t), &f4.one());
        assert!(f4.is_zero(&lhs));
    }

    #[test]
    fn extension_steps() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let ext = extend_by_artin_schreier(&f2, &f2.from_u64(1)).unwrap();
        assert_eq!(ext.field.order(), 4);
        assert_eq!(ext.field.modulus().unwrap(), &[1, 1, 1]);

        let f3 = FieldDescriptor::prime(3).unwrap();
        let ext = extend_by_artin_schreier(&f3, &f3.from_u64(1)).unwrap();
        assert_eq!(ext.field.order(), 27);
        // T^3 - T + 1 stored as [1, 2, 0, 1]
        assert_eq!(ext.field.modulus().unwrap(), &[1, 2, 0, 1]);
        let f = &ext.field;
        let check = f.add(&f.sub(&f.pow(&ext.root, 3), &ext.root), &f.one());
        assert!(f.is_zero(&check));

        assert!(matches!(
            extend_by_artin_schreier(&f2, &f2.from_u64(0)),
            Err(Error::SolvableInBaseField)
        ));
    }

    #[test]
    fn tower_extension_flattens() {
        // F_4 -> F_16 by an Artin-Schreier step; c must have trace 1 over F_2
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let unsolvable: Vec<GfElem> = f4
            .all_elements()
            .into_iter()
            .filter(|c| artin_schreier_solve(&f4, c).is_none())
            .collect();
        assert!(!unsolvable.is_empty());
        let c = &unsolvable[0];
        let ext = extend_by_artin_schreier(&f4, c).unwrap();
        assert_eq!(ext.field.order(), 16);
        let f = &ext.field;
        let lhs = f.add(&f.sub(&f.frobenius(&ext.root), &ext.root), &ext.embed.apply(c));
        assert!(f.is_zero(&lhs));
        // the embedding respects arithmetic
        for x in f4.all_elements() {
            for y in f4.all_elements() {
                assert_eq!(ext.embed.apply(&f4.mul(&x, &y)), f.mul(&ext.embed.apply(&x), &ext.embed.apply(&y)));
                assert_eq!(ext.embed.apply(&f4.add(&x, &y)), f.add(&ext.embed.apply(&x), &ext.embed.apply(&y)));
            }
        }
    }

    #[test]
    fn descriptor_text_round_trip() {
        for f in [
            FieldDescriptor::prime(5).unwrap(),
            FieldDescriptor::extension(2, 2).unwrap(),
            FieldDescriptor::extension(3, 3).unwrap(),
        ] {
            let t = f.text();
            let back = FieldDescriptor::parse(&t).unwrap();
            assert_eq!(f, back, "{t}");
        }
        let f4 = FieldDescriptor::extension(2, 2).unwrap();
        let e = f4.parse_elem("a^2 + 1").unwrap();
        // a^2 reduces to a + 1, so a^2 + 1 = a
        assert_eq!(e, f4.gen());
    }

    #[test]
    fn frobenius_inverse_round_trip() {
        let f8 = FieldDescriptor::extension(2, 3).unwrap();
        for e in f8.all_elements() {
            assert_eq!(f8.frobenius_inv(&f8.frobenius(&e)), e);
        }
    }
}
