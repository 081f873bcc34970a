//! Vectors of F_q^3, Hamming balls, extended balls, and the restricted
//! domains where the covering problem is hard.
//!
//! The key sets:
//!
//! - `ball(u)`: all vectors at Hamming distance <= 1 from u, always 3q-2
//!   points.
//! - `extended_ball(u)`: the union of balls centered at every scalar
//!   multiple of u (including 0).
//! - `domain_aq`: vectors with three pairwise distinct coordinates.
//! - `domain_dq`: vectors with three pairwise distinct *nonzero*
//!   coordinates; `restricted_ball` / `restricted_extended_ball` intersect
//!   with it.
//!
//! The size of a restricted extended ball depends only on the weight of u
//! and its number of distinct coordinates; `restricted_extended_ball_formula`
//! is the closed form, checked against enumeration in the test suites.
//!
//! Point sets are dense bitsets indexed by q^2*c1 + q*c2 + c3, so set algebra
//! is word-wise logic and exhaustive scans over F_q^3 stay cheap.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// A vector (u1, u2, u3) over GF(q). Carries the field order so that
/// cross-field misuse is detectable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3 {
    q: u16,
    c: [Elem; 3],
}

impl Vec3 {
    pub fn new(f: &Field, coords: [Elem; 3]) -> Vec3 {
        assert!(coords.iter().all(|e| e.code() < f.q()));
        Vec3 {
            q: f.q(),
            c: coords,
        }
    }

    /// Unchecked constructor for code that already holds valid elements of
    /// a field of order q.
    pub(crate) fn raw(q: u16, coords: [Elem; 3]) -> Vec3 {
        debug_assert!(coords.iter().all(|e| e.code() < q));
        Vec3 { q, c: coords }
    }

    pub fn from_codes(f: &Field, codes: [u16; 3]) -> Result<Vec3> {
        Ok(Vec3::new(
            f,
            [f.elem(codes[0])?, f.elem(codes[1])?, f.elem(codes[2])?],
        ))
    }

    /// Decodes a packed index q^2*c1 + q*c2 + c3.
    pub fn from_index(q: u16, index: usize) -> Vec3 {
        debug_assert!(index < (q as usize).pow(3));
        let qc = q as usize;
        let c3 = (index % qc) as u16;
        let c2 = ((index / qc) % qc) as u16;
        let c1 = (index / (qc * qc)) as u16;
        Vec3 {
            q,
            c: [Elem(c1), Elem(c2), Elem(c3)],
        }
    }

    /// Packed index of this vector; the total order used for canonical
    /// representatives is ascending index, i.e. lexicographic on codes.
    pub fn index(&self) -> usize {
        let qc = self.q as usize;
        (self.c[0].code() as usize * qc + self.c[1].code() as usize) * qc
            + self.c[2].code() as usize
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn coords(&self) -> [Elem; 3] {
        self.c
    }

    pub fn zero(f: &Field) -> Vec3 {
        Vec3 {
            q: f.q(),
            c: [Elem::ZERO; 3],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|e| e.is_zero())
    }

    /// The j-th canonical basis vector, 0-indexed.
    pub fn unit(f: &Field, axis: usize) -> Vec3 {
        let mut c = [Elem::ZERO; 3];
        c[axis] = Elem::ONE;
        Vec3 { q: f.q(), c }
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> u8 {
        self.c.iter().filter(|e| !e.is_zero()).count() as u8
    }

    /// Number of distinct coordinate values.
    pub fn distinct_coords(&self) -> u8 {
        let [a, b, c] = self.c;
        1 + u8::from(b != a) + u8::from(c != a && c != b)
    }

    /// Whether all three coordinates are pairwise distinct and nonzero.
    pub fn in_dq(&self) -> bool {
        let [a, b, c] = self.c;
        !a.is_zero() && !b.is_zero() && !c.is_zero() && a != b && a != c && b != c
    }

    /// Whether all three coordinates are pairwise distinct.
    pub fn in_aq(&self) -> bool {
        let [a, b, c] = self.c;
        a != b && a != c && b != c
    }

    pub fn scale(&self, f: &Field, lambda: Elem) -> Vec3 {
        debug_assert_eq!(self.q, f.q());
        Vec3 {
            q: self.q,
            c: [
                f.mul(lambda, self.c[0]),
                f.mul(lambda, self.c[1]),
                f.mul(lambda, self.c[2]),
            ],
        }
    }

    pub fn add(&self, f: &Field, other: Vec3) -> Vec3 {
        assert_eq!(self.q, other.q);
        Vec3 {
            q: self.q,
            c: [
                f.add(self.c[0], other.c[0]),
                f.add(self.c[1], other.c[1]),
                f.add(self.c[2], other.c[2]),
            ],
        }
    }

    pub fn sub(&self, f: &Field, other: Vec3) -> Vec3 {
        assert_eq!(self.q, other.q);
        Vec3 {
            q: self.q,
            c: [
                f.sub(self.c[0], other.c[0]),
                f.sub(self.c[1], other.c[1]),
                f.sub(self.c[2], other.c[2]),
            ],
        }
    }

    /// Parses `a,b,c` with components in the element text format of `f`.
    pub fn parse(f: &Field, s: &str) -> Result<Vec3> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected a,b,c, got {s:?}")));
        }
        Ok(Vec3::new(
            f,
            [
                f.parse_elem(parts[0])?,
                f.parse_elem(parts[1])?,
                f.parse_elem(parts[2])?,
            ],
        ))
    }

    pub fn display(&self, f: &Field) -> String {
        let mut out = String::new();
        for (i, e) in self.c.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", f.format_elem(*e));
        }
        out
    }
}

/// Hamming distance, with a field-consistency check.
pub fn hamming_distance(u: Vec3, v: Vec3) -> Result<u8> {
    if u.q != v.q {
        return Err(Error::FieldMismatch);
    }
    Ok(dist(u, v))
}

pub(crate) fn dist(u: Vec3, v: Vec3) -> u8 {
    debug_assert_eq!(u.q, v.q);
    (0..3).filter(|&i| u.c[i] != v.c[i]).count() as u8
}

/// A subset of F_q^3 as a dense bitset over packed indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VecSet {
    q: u16,
    words: Vec<u64>,
}

impl VecSet {
    pub fn empty(q: u16) -> VecSet {
        let bits = (q as usize).pow(3);
        VecSet {
            q,
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn full(q: u16) -> VecSet {
        let bits = (q as usize).pow(3);
        let mut words = vec![!0u64; bits.div_ceil(64)];
        let tail = bits % 64;
        if tail != 0 {
            *words.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        VecSet { q, words }
    }

    pub fn from_members(q: u16, members: impl IntoIterator<Item = Vec3>) -> VecSet {
        let mut set = VecSet::empty(q);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// All vectors satisfying a predicate.
    pub fn filter_space(q: u16, pred: impl Fn(Vec3) -> bool) -> VecSet {
        let mut set = VecSet::empty(q);
        for index in 0..(q as usize).pow(3) {
            if pred(Vec3::from_index(q, index)) {
                set.insert_index(index);
            }
        }
        set
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, v: Vec3) {
        debug_assert_eq!(self.q, v.q);
        self.insert_index(v.index());
    }

    pub fn insert_index(&mut self, index: usize) {
        self.words[index / 64] |= 1 << (index % 64);
    }

    pub fn contains(&self, v: Vec3) -> bool {
        debug_assert_eq!(self.q, v.q);
        self.contains_index(v.index())
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn union(&self, other: &VecSet) -> VecSet {
        let mut out = self.clone();
        out.union_in_place(other);
        out
    }

    pub fn union_in_place(&mut self, other: &VecSet) {
        assert_eq!(self.q, other.q);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersection(&self, other: &VecSet) -> VecSet {
        assert_eq!(self.q, other.q);
        VecSet {
            q: self.q,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VecSet) -> VecSet {
        assert_eq!(self.q, other.q);
        VecSet {
            q: self.q,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// |self ∩ other| without allocating.
    pub fn intersection_len(&self, other: &VecSet) -> usize {
        assert_eq!(self.q, other.q);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// |self \ other| without allocating.
    pub fn difference_len(&self, other: &VecSet) -> usize {
        assert_eq!(self.q, other.q);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VecSet) -> bool {
        assert_eq!(self.q, other.q);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VecSet) -> bool {
        assert_eq!(self.q, other.q);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn retain(&self, pred: impl Fn(Vec3) -> bool) -> VecSet {
        let mut out = VecSet::empty(self.q);
        for v in self.members() {
            if pred(v) {
                out.insert(v);
            }
        }
        out
    }

    /// Members in ascending index order.
    pub fn members(&self) -> impl Iterator<Item = Vec3> + '_ {
        self.words.iter().enumerate().flat_map(move |(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(Vec3::from_index(self.q, wi * 64 + b))
            })
        })
    }

    pub fn min_member(&self) -> Option<Vec3> {
        self.members().next()
    }

    pub fn display(&self, f: &Field) -> String {
        let items: Vec<String> = self
            .members()
            .map(|v| format!("({})", v.display(f)))
            .collect();
        format!("{{{}}}", items.join(", "))
    }
}

/// The radius-1 ball around u: exactly 3q-2 points.
pub fn ball(f: &Field, u: Vec3) -> VecSet {
    assert_eq!(f.q(), u.q);
    let mut set = VecSet::empty(f.q());
    for axis in 0..3 {
        for x in f.elements() {
            let mut c = u.c;
            c[axis] = x;
            set.insert(Vec3 { q: u.q, c });
        }
    }
    set
}

/// The extended ball: union of balls centered at every scalar multiple of u,
/// the zero multiple included.
pub fn extended_ball(f: &Field, u: Vec3) -> VecSet {
    assert_eq!(f.q(), u.q);
    let mut set = ball(f, Vec3::zero(f));
    if !u.is_zero() {
        for lambda in f.nonzero_elements() {
            set.union_in_place(&ball(f, u.scale(f, lambda)));
        }
    }
    set
}

/// D_q: all vectors with pairwise distinct nonzero coordinates.
/// |D_q| = (q-1)(q-2)(q-3).
pub fn domain_dq(f: &Field) -> VecSet {
    VecSet::filter_space(f.q(), |v| v.in_dq())
}

/// A_q: all vectors with pairwise distinct coordinates.
/// |A_q| = q(q-1)(q-2).
pub fn domain_aq(f: &Field) -> VecSet {
    VecSet::filter_space(f.q(), |v| v.in_aq())
}

/// The ball restricted to D_q.
pub fn restricted_ball(f: &Field, u: Vec3) -> VecSet {
    ball(f, u).retain(|v| v.in_dq())
}

/// The extended ball restricted to D_q.
pub fn restricted_extended_ball(f: &Field, u: Vec3) -> VecSet {
    extended_ball(f, u).retain(|v| v.in_dq())
}

/// Closed-form size of the restricted extended ball, selected by
/// (weight, distinct coordinate count):
///
/// - weight <= 1, or three equal coordinates, or exactly two equal values
///   with a zero present: 0
/// - weight 2 with three distinct values: (q-1)(q-3)
/// - weight 3 with two distinct values: (q-1)(2q-6)
/// - weight 3 with three distinct values: (q-1)(3q-11)
///
/// Negative values (possible only at q = 3, where D_q is empty) clamp to 0.
/// For q >= 4 this equals `restricted_extended_ball(f, u).len()` exactly.
pub fn restricted_extended_ball_formula(f: &Field, u: Vec3) -> usize {
    assert_eq!(f.q(), u.q);
    restricted_extended_ball_formula_by_type(f.q(), u.weight(), u.distinct_coords())
}

/// The same closed form keyed by the (weight, distinct-count) type alone.
pub fn restricted_extended_ball_formula_by_type(q: u16, weight: u8, distinct: u8) -> usize {
    let q = q as i64;
    let raw = match (weight, distinct) {
        (2, 3) => (q - 1) * (q - 3),
        (3, 2) => (q - 1) * (2 * q - 6),
        (3, 3) => (q - 1) * (3 * q - 11),
        _ => 0,
    };
    raw.max(0) as usize
}

/// |D_q| without enumeration.
pub fn dq_size(q: u16) -> usize {
    let q = q as i64;
    ((q - 1) * (q - 2) * (q - 3)).max(0) as usize
}

/// |A_q| without enumeration.
pub fn aq_size(q: u16) -> usize {
    let q = q as i64;
    (q * (q - 1) * (q - 2)).max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u16) -> Field {
        Field::of_order(q).unwrap()
    }

    fn vec3(f: &Field, codes: [u16; 3]) -> Vec3 {
        Vec3::from_codes(f, codes).unwrap()
    }

    fn all_vectors(q: u16) -> impl Iterator<Item = Vec3> {
        (0..(q as usize).pow(3)).map(move |i| Vec3::from_index(q, i))
    }

    #[test]
    fn distance_basics() {
        let f = gf(5);
        let u = vec3(&f, [0, 0, 1]);
        assert_eq!(hamming_distance(u, u).unwrap(), 0);
        assert_eq!(hamming_distance(u, vec3(&f, [1, 2, 0])).unwrap(), 3);
        let f7 = gf(7);
        assert_eq!(
            hamming_distance(vec3(&f7, [1, 2, 3]), vec3(&f7, [1, 2, 5])).unwrap(),
            1
        );
        assert!(matches!(
            hamming_distance(u, vec3(&f7, [0, 0, 1])),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn metric_axioms_hold() {
        let f = gf(4);
        let vectors: Vec<Vec3> = all_vectors(4).collect();
        for &u in &vectors {
            for &v in &vectors {
                let duv = dist(u, v);
                assert_eq!(duv, dist(v, u));
                assert_eq!(duv == 0, u == v);
                for &w in &vectors {
                    assert!(dist(u, w) <= duv + dist(v, w));
                }
            }
        }
        let _ = f;
    }

    #[test]
    fn ball_size_is_3q_minus_2() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            for u in all_vectors(q) {
                let b = ball(&f, u);
                assert_eq!(b.len(), 3 * q as usize - 2);
                assert!(b.contains(u));
            }
        }
    }

    #[test]
    fn balls_at_distance_three_are_disjoint() {
        let f = gf(5);
        for u in all_vectors(5) {
            for v in all_vectors(5) {
                if dist(u, v) == 3 {
                    assert!(ball(&f, u).is_disjoint(&ball(&f, v)));
                }
            }
        }
    }

    #[test]
    fn extended_ball_sizes() {
        let f = gf(5);
        // E(0) = B(0)
        let zero = Vec3::zero(&f);
        assert_eq!(extended_ball(&f, zero), ball(&f, zero));
        assert_eq!(extended_ball(&f, zero).len(), 13);
        assert_eq!(extended_ball(&f, vec3(&f, [1, 1, 1])).len(), 65); // 3q^2-2q

        // Weight-1 and weight-2 vectors: pointwise oracle over the defining
        // condition, some lambda with d(v, lambda*u) <= 1.
        let direct = |u: Vec3| -> usize {
            all_vectors(5)
                .filter(|&v| f.elements().any(|l| dist(v, u.scale(&f, l)) <= 1))
                .count()
        };
        let axis = vec3(&f, [0, 0, 1]);
        assert_eq!(direct(axis), 45); // q(2q-1)
        assert_eq!(extended_ball(&f, axis).len(), direct(axis));
        let w2 = vec3(&f, [0, 1, 1]);
        assert_eq!(extended_ball(&f, w2).len(), direct(w2));

        // |E(u)| depends only on the weight
        for q in [2, 4, 7] {
            let f = gf(q);
            let mut by_weight = std::collections::HashMap::new();
            for u in all_vectors(q) {
                let size = extended_ball(&f, u).len();
                let prev = by_weight.entry(u.weight()).or_insert(size);
                assert_eq!(*prev, size);
            }
        }
    }

    #[test]
    fn domain_sizes() {
        for (q, dq) in [(3, 0), (7, 120), (9, 336)] {
            let f = gf(q);
            assert_eq!(domain_dq(&f).len(), dq);
            assert_eq!(domain_dq(&f).len(), dq_size(q));
            assert_eq!(domain_aq(&f).len(), aq_size(q));
        }
        assert_eq!(aq_size(5), 60);
    }

    #[test]
    fn restricted_extended_ball_cases() {
        let f7 = gf(7);
        assert!(restricted_extended_ball(&f7, Vec3::zero(&f7)).is_empty());
        assert_eq!(restricted_extended_ball(&f7, vec3(&f7, [1, 1, 1])).len(), 0);
        assert_eq!(
            restricted_extended_ball(&f7, vec3(&f7, [0, 1, 3])).len(),
            24
        ); // (q-1)(q-3)
        assert_eq!(
            restricted_extended_ball(&f7, vec3(&f7, [1, 2, 3])).len(),
            60
        ); // (q-1)(3q-11)
        assert_eq!(
            restricted_extended_ball_formula(&f7, vec3(&f7, [1, 2, 3])),
            60
        );

        let f8 = gf(8);
        let u = Vec3::new(&f8, [Elem::ONE, Elem::ONE, f8.xi()]); // weight 3, two values
        assert_eq!(restricted_extended_ball(&f8, u).len(), 70); // (q-1)(2q-6)
        assert_eq!(restricted_extended_ball_formula(&f8, u), 70);

        let f9 = gf(9);
        let u = Vec3::new(&f9, [Elem::ONE, f9.xi(), f9.xi_pow(2)]);
        assert_eq!(restricted_extended_ball(&f9, u).len(), 128); // (q-1)(3q-11)
        assert_eq!(restricted_extended_ball_formula(&f9, u), 128);
    }

    #[test]
    fn restricted_ball_counts() {
        let f7 = gf(7);
        // per-ball counts behind the aggregated formulas: q-3 for a
        // weight-2 three-value vector, 3q-11 for three distinct values
        assert_eq!(restricted_ball(&f7, vec3(&f7, [0, 1, 3])).len(), 4);
        assert_eq!(restricted_ball(&f7, vec3(&f7, [1, 2, 3])).len(), 10);
        // for weight 3 the q-1 scaled balls are disjoint, so the
        // restriction multiplies up by q-1
        for u in all_vectors(7).filter(|u| u.weight() == 3) {
            let per_ball: usize =
                f7.nonzero_elements().map(|l| restricted_ball(&f7, u.scale(&f7, l)).len()).sum();
            assert_eq!(per_ball, restricted_extended_ball(&f7, u).len());
        }
    }

    #[test]
    fn formula_matches_enumeration_for_small_q() {
        for q in [4, 5] {
            let f = gf(q);
            for u in all_vectors(q) {
                assert_eq!(
                    restricted_extended_ball_formula(&f, u),
                    restricted_extended_ball(&f, u).len(),
                    "q={q}, u={:?}",
                    u
                );
            }
        }
    }

    #[test]
    fn q3_formula_clamps_to_zero() {
        let f = gf(3);
        for u in all_vectors(3) {
            assert_eq!(restricted_extended_ball_formula(&f, u), 0);
            assert!(restricted_extended_ball(&f, u).is_empty());
        }
    }

    #[test]
    fn scalar_multiple_balls_are_disjoint_for_weight_3() {
        // distinct nonzero scalars of a weight-3 vector give disjoint balls
        for q in [4, 5, 7] {
            let f = gf(q);
            let scalars: Vec<Elem> = f.nonzero_elements().collect();
            for u in all_vectors(q).filter(|u| u.weight() == 3) {
                for (i, &l) in scalars.iter().enumerate() {
                    for &m in &scalars[i + 1..] {
                        assert!(ball(&f, u.scale(&f, l)).is_disjoint(&ball(&f, u.scale(&f, m))));
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_intersection_bound_and_sharpness() {
        let f = gf(5);
        let sets: Vec<VecSet> = all_vectors(5).map(|u| extended_ball(&f, u)).collect();
        for a in &sets {
            for b in &sets {
                assert!(a.intersection_len(b) >= 13);
            }
        }
        let sharp = extended_ball(&f, vec3(&f, [0, 0, 1]))
            .intersection_len(&extended_ball(&f, vec3(&f, [1, 2, 0])));
        assert_eq!(sharp, 13);
    }

    #[test]
    fn vec3_text_roundtrip() {
        let f = gf(5);
        let u = vec3(&f, [0, 2, 3]);
        assert_eq!(u.display(&f), "0,2,3");
        assert_eq!(Vec3::parse(&f, "0,2,3").unwrap(), u);
        assert_eq!(Vec3::parse(&f, "(0, 2, 3)").unwrap(), u);

        let f8 = gf(8);
        let v = Vec3::new(&f8, [Elem::ONE, f8.xi_pow(2), f8.xi_pow(3)]);
        assert_eq!(v.display(&f8), "1,x^2,x^3");
        assert_eq!(Vec3::parse(&f8, "1,x^2,x^3").unwrap(), v);
        assert!(Vec3::parse(&f8, "1,2").is_err());
    }

    #[test]
    fn vecset_algebra() {
        let f = gf(4);
        let a = ball(&f, Vec3::zero(&f));
        let full = VecSet::full(4);
        assert_eq!(full.len(), 64);
        assert!(a.is_subset(&full));
        assert_eq!(a.union(&full), full);
        assert_eq!(full.difference(&a).len(), 64 - a.len());
        assert_eq!(a.intersection(&full), a);
        let members: Vec<Vec3> = a.members().collect();
        assert_eq!(members.len(), a.len());
        assert_eq!(VecSet::from_members(4, members), a);
    }
}
