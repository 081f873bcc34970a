//! Exact arithmetic in small finite fields GF(q), q = p^n.
//!
//! Elements are carried as integer codes in `0..q`: the code is the base-p
//! digit vector of the polynomial representation, so prime fields use the
//! residue itself and GF(8) encodes c0 + c1*x + c2*x^2 as c0 + 2*c1 + 4*c2.
//! Addition works digit-wise mod p; multiplication goes through log/antilog
//! tables for a designated generator xi of the multiplicative group. For
//! extension fields xi is the class of x modulo a primitive polynomial, for
//! prime fields it is the smallest primitive root.
//!
//! Fields are immutable after construction and every operation is a pure
//! function, so a [`Field`] can be shared freely across threads.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

/// Largest supported field order. Bigger fields are out of scope.
pub const MAX_Q: u32 = 1 << 16;

/// An element of a [`Field`], stored as its integer code.
///
/// The code alone does not identify the field; operations on elements go
/// through the owning `Field`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A concrete finite field GF(q) with precomputed log/antilog tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    q: u16,
    p: u16,
    n: u8,
    /// Monic primitive polynomial, coefficients ascending (length n+1).
    /// For prime fields this is x - xi.
    prim_poly: Vec<u16>,
    /// `log[code]` for nonzero codes; `log[0]` is a sentinel.
    log: Vec<u16>,
    /// `antilog[e] = code of xi^e` for e in `0..q-1`.
    antilog: Vec<u16>,
}

impl Field {
    /// Builds GF(p^n) with the default primitive polynomial (see
    /// [`default_primitive_poly`]) or, for n = 1, the smallest primitive root.
    pub fn new(p: u16, n: u8) -> Result<Field> {
        Self::build(p, n, None)
    }

    /// Builds GF(p^n) from an explicit monic polynomial of degree n,
    /// coefficients ascending. The polynomial must be irreducible and
    /// primitive over GF(p).
    pub fn with_poly(p: u16, n: u8, poly: &[u16]) -> Result<Field> {
        Self::build(p, n, Some(poly.to_vec()))
    }

    /// Builds GF(q) for a prime power q, with the default modulus.
    pub fn of_order(q: u16) -> Result<Field> {
        let (p, n) = factor_prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
        Self::new(p as u16, n as u8)
    }

    fn build(p: u16, n: u8, poly: Option<Vec<u16>>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::UnsupportedField("degree must be at least 1".into()));
        }
        let q = (p as u64)
            .checked_pow(n as u32)
            .filter(|&q| q <= MAX_Q as u64);
        let q = q.ok_or_else(|| Error::UnsupportedField(format!("{p}^{n} exceeds 2^16")))? as u32;

        let poly = match poly {
            Some(poly) => {
                validate_poly_shape(p, n, &poly)?;
                poly
            }
            None => default_primitive_poly(p, n),
        };

        if n > 1 && !is_irreducible(p, &poly) {
            return Err(Error::PolynomialNotIrreducible);
        }

        // For n = 1 the generator is the root of x + c; for n > 1 it is the
        // class of x. Primitivity is established by explicit powering: the
        // first q-1 powers must be pairwise distinct nonzero codes.
        let gen_digits = if n == 1 {
            vec![(p - poly[0] % p) % p]
        } else {
            let mut d = vec![0u16; n as usize];
            d[1] = 1;
            d
        };
        let mut one = vec![0u16; n as usize];
        one[0] = 1;

        let mut antilog = vec![0u16; (q - 1) as usize];
        let mut log = vec![0u16; q as usize];
        let mut seen = vec![false; q as usize];
        let mut acc = one.clone();
        for (e, slot) in antilog.iter_mut().enumerate() {
            let code = encode(p, &acc);
            if code == 0 || seen[code as usize] {
                return Err(Error::PolynomialNotPrimitive);
            }
            seen[code as usize] = true;
            *slot = code;
            log[code as usize] = e as u16;
            acc = mul_digits(p, &acc, &gen_digits, &poly);
        }
        if acc != one {
            return Err(Error::PolynomialNotPrimitive);
        }

        Ok(Field {
            q: q as u16,
            p,
            n,
            prim_poly: poly,
            log,
            antilog,
        })
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn characteristic(&self) -> u16 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.n
    }

    pub fn modulus(&self) -> &[u16] {
        &self.prim_poly
    }

    /// The designated generator xi of the multiplicative group.
    pub fn xi(&self) -> Elem {
        self.xi_pow(1)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn elem(&self, code: u16) -> Result<Elem> {
        if code < self.q {
            Ok(Elem(code))
        } else {
            Err(Error::DomainViolation(format!(
                "code {code} out of range for GF({})",
                self.q
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.n == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u16;
        let mut place = 1u16;
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(a.0 < self.q);
        if self.n == 1 {
            return Elem((self.p - a.0) % self.p);
        }
        let mut x = a.0;
        let mut out = 0u16;
        let mut place = 1u16;
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let e =
            (self.log[a.0 as usize] as u32 + self.log[b.0 as usize] as u32) % (self.q as u32 - 1);
        Elem(self.antilog[e as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = (self.q as u32 - 1 - self.log[a.0 as usize] as u32) % (self.q as u32 - 1);
        Ok(Elem(self.antilog[e as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        if a.is_zero() {
            return if k == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let e = (self.log[a.0 as usize] as u64 * k as u64) % (self.q as u64 - 1);
        Elem(self.antilog[e as usize])
    }

    /// Discrete logarithm base xi; requires a nonzero argument.
    pub fn dlog(&self, a: Elem) -> Result<u16> {
        if a.is_zero() {
            return Err(Error::DlogOfZero);
        }
        Ok(self.log[a.0 as usize])
    }

    /// xi^k, with the exponent reduced mod q-1 (negative exponents allowed).
    pub fn xi_pow(&self, k: i64) -> Elem {
        let m = self.q as i64 - 1;
        Elem(self.antilog[k.rem_euclid(m) as usize])
    }

    /// All generators of the multiplicative group, i.e. the phi(q-1) elements
    /// of multiplicative order exactly q-1, sorted by code.
    pub fn primitive_elements(&self) -> Vec<Elem> {
        let m = self.q as u32 - 1;
        let mut out: Vec<Elem> = (0..m)
            .filter(|&e| gcd(e, m) == 1)
            .map(|e| Elem(self.antilog[e as usize]))
            .collect();
        out.sort();
        out
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DlogOfZero);
        }
        let m = self.q as u32 - 1;
        Ok(m / gcd(self.log[a.0 as usize] as u32, m))
    }

    /// Parses an element from text: decimal codes for prime fields, and
    /// `0`, `1`, `x`, or `x^k` (powers of xi) for any field.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if s == "x" {
            return Ok(self.xi());
        }
        if let Some(exp) = s.strip_prefix("x^") {
            let k: i64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            return Ok(self.xi_pow(k));
        }
        if self.n > 1 && s != "0" && s != "1" {
            return Err(Error::Parse(format!(
                "{s:?}: extension field elements are written 0, 1, x or x^k"
            )));
        }
        let code: u16 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {s:?}")))?;
        self.elem(code)
    }

    /// Formats an element: decimal for prime fields, `0`/`1`/`x`/`x^k` for
    /// extension fields.
    pub fn format_elem(&self, a: Elem) -> String {
        if self.n == 1 {
            return a.0.to_string();
        }
        if a.is_zero() {
            return "0".into();
        }
        match self.log[a.0 as usize] {
            0 => "1".into(),
            1 => "x".into(),
            e => format!("x^{e}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "GF({})", self.q)
        } else {
            write!(
                f,
                "GF({}) = GF({}^{}), modulus {}",
                self.q,
                self.p,
                self.n,
                poly_to_string(&self.prim_poly)
            )
        }
    }
}

/// Renders a coefficient-ascending polynomial as e.g. `x^3+x+1`.
pub fn poly_to_string(poly: &[u16]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in poly.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Parses `x^3+x+1` style polynomials into ascending coefficients.
pub fn parse_poly(s: &str) -> Result<Vec<u16>> {
    let mut coeffs: Vec<u16> = Vec::new();
    for term in s.split('+') {
        let term = term.trim().replace('*', "");
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in polynomial {s:?}")));
        }
        let (coef, exp) = if let Some(pos) = term.find("x^") {
            let exp: usize = term[pos + 2..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?;
            (&term[..pos], exp)
        } else if let Some(rest) = term.strip_suffix('x') {
            (rest, 1usize)
        } else {
            (term.as_str(), 0usize)
        };
        let coef: u16 = if coef.is_empty() {
            1
        } else {
            coef.parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
        };
        if exp >= coeffs.len() {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += coef;
    }
    Ok(coeffs)
}

/// The default modulus: the monic primitive polynomial of degree n whose
/// non-leading coefficients, read as a base-p number, are smallest. For
/// prime fields this reduces to x - g with g the smallest primitive root.
pub fn default_primitive_poly(p: u16, n: u8) -> Vec<u16> {
    if n == 1 {
        let g = smallest_primitive_root(p);
        return vec![(p - g) % p, 1];
    }
    let pn = (p as u64).pow(n as u32);
    for val in 0..pn {
        let mut poly = digits(p, val, n as usize);
        poly.push(1);
        if poly[0] == 0 {
            continue;
        }
        if is_irreducible(p, &poly) && x_is_primitive(p, &poly) {
            return poly;
        }
    }
    unreachable!("a primitive polynomial of degree {n} exists over GF({p})")
}

fn smallest_primitive_root(p: u16) -> u16 {
    if p == 2 {
        return 1;
    }
    'outer: for g in 2..p {
        let mut acc = 1u32;
        for _ in 0..p - 2 {
            acc = acc * g as u32 % p as u32;
            if acc == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime field has a primitive root")
}

fn validate_poly_shape(p: u16, n: u8, poly: &[u16]) -> Result<()> {
    if poly.len() != n as usize + 1 {
        return Err(Error::Parse(format!(
            "modulus must have degree {n} (got {} coefficients)",
            poly.len()
        )));
    }
    if poly[n as usize] != 1 {
        return Err(Error::Parse("modulus must be monic".into()));
    }
    if poly.iter().any(|&c| c >= p) {
        return Err(Error::Parse(format!("coefficients must lie in 0..{p}")));
    }
    Ok(())
}

/// Trial division by every monic polynomial of degree 1..=n/2.
fn is_irreducible(p: u16, poly: &[u16]) -> bool {
    let n = poly.len() - 1;
    if n == 1 {
        return true;
    }
    if poly[0] == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for val in 0..count {
            let mut g = digits(p, val, d);
            g.push(1);
            if poly_rem_is_zero(p, poly, &g) {
                return false;
            }
        }
    }
    true
}

/// Whether the class of x has multiplicative order p^n - 1 modulo `poly`.
fn x_is_primitive(p: u16, poly: &[u16]) -> bool {
    let n = poly.len() - 1;
    let m = (p as u64).pow(n as u32) - 1;
    let mut x = vec![0u16; n];
    x[1] = 1;
    let mut one = vec![0u16; n];
    one[0] = 1;
    let mut acc = x.clone();
    for _ in 1..m {
        if acc == one {
            return false;
        }
        acc = mul_digits(p, &acc, &x, poly);
    }
    acc == one
}

/// Multiplies two degree-<n digit vectors modulo a monic degree-n polynomial.
fn mul_digits(p: u16, a: &[u16], b: &[u16], poly: &[u16]) -> Vec<u16> {
    let n = poly.len() - 1;
    if n == 1 {
        // Prime-field residues: reduce the root of x + c directly.
        return vec![(a[0] as u32 * b[0] as u32 % p as u32) as u16];
    }
    let mut prod = vec![0u32; 2 * n];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] += ai as u32 * bj as u32;
        }
    }
    for k in (n..2 * n).rev() {
        let c = prod[k] % p as u32;
        if c != 0 {
            // x^k = -c * x^(k-n) * (poly with leading term dropped)
            for (i, &pi) in poly.iter().take(n).enumerate() {
                prod[k - n + i] += c * ((p - pi) % p) as u32;
            }
        }
        prod[k] = 0;
    }
    prod.into_iter()
        .take(n)
        .map(|c| (c % p as u32) as u16)
        .collect()
}

fn poly_rem_is_zero(p: u16, num: &[u16], den: &[u16]) -> bool {
    let dd = den.len() - 1;
    let mut rem: Vec<u16> = num.iter().map(|&c| c % p).collect();
    while rem.len() > dd {
        let lead = rem[rem.len() - 1];
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (i, &di) in den.iter().enumerate() {
                let sub = lead as u32 * di as u32 % p as u32;
                let idx = shift + i;
                rem[idx] = ((rem[idx] as u32 + p as u32 - sub) % p as u32) as u16;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn digits(p: u16, mut val: u64, len: usize) -> Vec<u16> {
    let mut out = vec![0u16; len];
    for d in out.iter_mut() {
        *d = (val % p as u64) as u16;
        val /= p as u64;
    }
    out
}

fn encode(p: u16, digits: &[u16]) -> u16 {
    let mut out = 0u32;
    for &d in digits.iter().rev() {
        out = out * p as u32 + d as u32;
    }
    out as u16
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes q = p^n with p prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut n = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                n += 1;
            }
            return (rest == 1).then_some((p, n));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Per-q modulus overrides from a `key=value` config file: each line is
/// `q = x^3+x+1` style, with `#` comments allowed.
pub fn load_poly_overrides(path: &Path) -> Result<HashMap<u16, Vec<u16>>> {
    let text = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected q = poly", lineno + 1)))?;
        let q: u16 = key
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad field order", lineno + 1)))?;
        map.insert(q, parse_poly(value)?);
    }
    Ok(map)
}

/// Resolves a `q[:poly]` field selector, honoring optional per-q overrides.
pub fn field_from_spec(spec: &str, overrides: Option<&HashMap<u16, Vec<u16>>>) -> Result<Field> {
    let (q_str, poly_str) = match spec.split_once(':') {
        Some((q, poly)) => (q, Some(poly)),
        None => (spec, None),
    };
    let q: u16 = q_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad field order {q_str:?}")))?;
    let (p, n) = factor_prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
    let poly = match poly_str {
        Some(s) => Some(parse_poly(s)?),
        None => overrides.and_then(|m| m.get(&q).cloned()),
    };
    match poly {
        Some(poly) => Field::with_poly(p as u16, n as u8, &poly),
        None => Field::new(p as u16, n as u8),
    }
}
