//! Pairwise intersections of balls and extended balls, the rho parameter,
//! and the t-intersecting family machinery.
//!
//! For u, v with nonempty restricted extended balls,
//! |E~(u) ∩ E~(v)| = rho(u, v) * (q - 1), where rho sums the sizes of the
//! restricted ball intersections B~(u) ∩ B~(mu v) over nonzero scalars mu.
//! When both vectors have three distinct nonzero coordinates, at most three
//! scalars can contribute (one per coordinate match), which gives the fast
//! path used by the exhaustive scans.
//!
//! The minimum of rho over D_q x D_q is 0 exactly when 3 divides q - 1 and
//! 2 otherwise; pushed through the corollary above this determines theta of
//! the family {E~(u) : u in D_q}.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::hamming::{
    dist, domain_dq, restricted_extended_ball, restricted_extended_ball_formula, Vec3,
    VecSet,
};

/// B(u) ∩ B(v) by distance case analysis:
///
/// - d = 0: the ball itself.
/// - d = 1: the q points of the line through u along the differing
///   coordinate.
/// - d = 2: the two points that take u on the agreeing coordinate and one of
///   v's values on a differing coordinate.
/// - d = 3: empty.
///
/// Agrees with the brute-force intersection of the two balls.
pub fn ball_intersection(f: &Field, u: Vec3, v: Vec3) -> Result<VecSet> {
    if u.q() != v.q() || u.q() != f.q() {
        return Err(Error::FieldMismatch);
    }
    let mut out = VecSet::empty(f.q());
    for w in ball_intersection_members(f, u, v) {
        out.insert(w);
    }
    Ok(out)
}

/// The case-analysis intersection as a short member list (at most 3q-2
/// points), avoiding bitset allocation in the hot paths.
fn ball_intersection_members(f: &Field, u: Vec3, v: Vec3) -> Vec<Vec3> {
    let uc = u.coords();
    let vc = v.coords();
    let differing: Vec<usize> = (0..3).filter(|&i| uc[i] != vc[i]).collect();
    match differing.len() {
        0 => crate::hamming::ball(f, u).members().collect(),
        1 => {
            let axis = differing[0];
            f.elements()
                .map(|x| {
                    let mut c = uc;
                    c[axis] = x;
                    Vec3::new(f, c)
                })
                .collect()
        }
        2 => {
            let mut out = Vec::with_capacity(2);
            for &axis in &differing {
                let mut c = uc;
                c[axis] = vc[axis];
                out.push(Vec3::new(f, c));
            }
            out.dedup();
            out
        }
        _ => Vec::new(),
    }
}

/// The rho parameter together with its per-scalar witness sets.
#[derive(Debug, Clone)]
pub struct RhoValue {
    value: usize,
    /// `(mu, B~(u) ∩ B~(mu v))` for every scalar with a nonempty
    /// contribution.
    witnesses: Vec<(Elem, Vec<Vec3>)>,
}

impl RhoValue {
    pub fn value(&self) -> usize {
        self.value
    }

    pub fn witnesses(&self) -> &[(Elem, Vec<Vec3>)] {
        &self.witnesses
    }

    fn from_scalars(f: &Field, u: Vec3, v: Vec3, scalars: impl Iterator<Item = Elem>) -> RhoValue {
        let mut witnesses = Vec::new();
        let mut value = 0;
        for mu in scalars {
            let vs = v.scale(f, mu);
            if dist(u, vs) > 2 {
                continue;
            }
            let members: Vec<Vec3> = ball_intersection_members(f, u, vs)
                .into_iter()
                .filter(|w| w.in_dq())
                .collect();
            if !members.is_empty() {
                value += members.len();
                witnesses.push((mu, members));
            }
        }
        RhoValue { value, witnesses }
    }
}

/// rho(u, v): 0 when either restricted extended ball is empty, otherwise
/// the sum of |B~(u) ∩ B~(mu v)| over nonzero mu. Uses the three-scalar
/// fast path when both vectors lie in D_q.
pub fn rho(f: &Field, u: Vec3, v: Vec3) -> Result<RhoValue> {
    if u.q() != v.q() || u.q() != f.q() {
        return Err(Error::FieldMismatch);
    }
    if u.in_dq() && v.in_dq() {
        return Ok(rho_three_scalar(f, u, v));
    }
    rho_by_definition(f, u, v)
}

/// rho by the defining sum over all nonzero scalars, for arbitrary vectors.
pub fn rho_by_definition(f: &Field, u: Vec3, v: Vec3) -> Result<RhoValue> {
    if u.q() != v.q() || u.q() != f.q() {
        return Err(Error::FieldMismatch);
    }
    if restricted_extended_ball_formula(f, u) == 0 || restricted_extended_ball_formula(f, v) == 0 {
        return Ok(RhoValue {
            value: 0,
            witnesses: Vec::new(),
        });
    }
    Ok(RhoValue::from_scalars(f, u, v, f.nonzero_elements()))
}

/// The fast path for u, v in D_q: with u = (xi^a, xi^b, xi^c) and
/// v = (xi^d, xi^e, xi^f), only mu in {xi^(a-d), xi^(b-e), xi^(c-f)} can
/// bring mu*v within distance 2 of u. Coinciding exponent differences are
/// counted once.
pub fn rho_three_scalar(f: &Field, u: Vec3, v: Vec3) -> RhoValue {
    debug_assert!(u.in_dq() && v.in_dq());
    let uc = u.coords();
    let vc = v.coords();
    let mut scalars: Vec<Elem> = (0..3)
        .map(|i| {
            let a = f.dlog(uc[i]).expect("nonzero in D_q") as i64;
            let d = f.dlog(vc[i]).expect("nonzero in D_q") as i64;
            f.xi_pow(a - d)
        })
        .collect();
    scalars.sort();
    scalars.dedup();
    RhoValue::from_scalars(f, u, v, scalars.into_iter())
}

/// |E~(u) ∩ E~(v)| via the corollary rho(u, v) * (q - 1).
pub fn restricted_extended_intersection_size(f: &Field, u: Vec3, v: Vec3) -> Result<usize> {
    Ok(rho(f, u, v)?.value * (f.q() as usize - 1))
}

/// Structural test for rho(u, v) = 0 on D_q pairs: after normalizing first
/// coordinates to 1, u = (1, xi^a, xi^b) and v = (1, xi^b, xi^a) with
/// 2a = b and 2b = a in Z_{q-1}. Such exponents exist only when 3 | q-1.
pub fn rho_zero_characterization(f: &Field, u: Vec3, v: Vec3) -> Result<bool> {
    if u.q() != v.q() || u.q() != f.q() {
        return Err(Error::FieldMismatch);
    }
    if !u.in_dq() || !v.in_dq() {
        return Err(Error::DomainViolation(
            "rho zero characterization needs both vectors in D_q".into(),
        ));
    }
    let m = f.q() as i64 - 1;
    let norm_exponents = |w: Vec3| -> (i64, i64) {
        let c = w.coords();
        let base = f.dlog(c[0]).unwrap() as i64;
        let a = (f.dlog(c[1]).unwrap() as i64 - base).rem_euclid(m);
        let b = (f.dlog(c[2]).unwrap() as i64 - base).rem_euclid(m);
        (a, b)
    };
    let (a, b) = norm_exponents(u);
    let (c, d) = norm_exponents(v);
    Ok(c == b && d == a && (2 * a).rem_euclid(m) == b && (2 * b).rem_euclid(m) == a)
}

/// rho(q) = min over D_q x D_q, in closed form: 0 when 3 | q-1, else 2.
pub fn rho_min(f: &Field) -> Result<usize> {
    if f.q() < 4 {
        return Err(Error::DomainEmpty(f.q()));
    }
    Ok(if (f.q() - 1).is_multiple_of(3) { 0 } else { 2 })
}

/// rho(q) by exhaustive minimization over ordered pairs of D_q.
pub fn rho_min_exhaustive(f: &Field) -> Result<usize> {
    if f.q() < 4 {
        return Err(Error::DomainEmpty(f.q()));
    }
    let dq: Vec<Vec3> = domain_dq(f).members().collect();
    let mut min = usize::MAX;
    for &u in &dq {
        for &v in &dq {
            min = min.min(rho_three_scalar(f, u, v).value);
            if min == 0 {
                return Ok(0);
            }
        }
    }
    Ok(min)
}

/// A labeled family of point sets. Labels keep members distinguishable even
/// when two generators produce the same set (e.g. E~(u) = E~(lambda u)).
#[derive(Debug, Clone)]
pub struct Family {
    q: u16,
    labels: Vec<String>,
    members: Vec<VecSet>,
}

impl Family {
    pub fn new(q: u16, entries: Vec<(String, VecSet)>) -> Result<Family> {
        let mut labels = Vec::with_capacity(entries.len());
        let mut members = Vec::with_capacity(entries.len());
        for (label, set) in entries {
            assert_eq!(set.q(), q);
            if labels.contains(&label) {
                return Err(Error::DuplicateLabel);
            }
            labels.push(label);
            members.push(set);
        }
        Ok(Family { q, labels, members })
    }

    /// Family of unlabeled sets; the sets themselves must be distinct.
    pub fn from_sets(q: u16, sets: Vec<VecSet>) -> Result<Family> {
        for (i, a) in sets.iter().enumerate() {
            if sets[i + 1..].contains(a) {
                return Err(Error::DuplicateLabel);
            }
        }
        let entries = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| (format!("#{i}"), s))
            .collect();
        Family::new(q, entries)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn members(&self) -> &[VecSet] {
        &self.members
    }

    /// theta: the largest t such that every pair of members shares at least
    /// t points, i.e. the minimum pairwise intersection size.
    pub fn theta(&self) -> Result<usize> {
        self.theta_with_threads(1)
    }

    /// Pair scans are independent, so the rows can be chunked across
    /// threads. Results are identical for any thread count.
    pub fn theta_with_threads(&self, threads: usize) -> Result<usize> {
        if self.members.len() < 2 {
            return Err(Error::FamilyTooSmall);
        }
        let n = self.members.len();
        let row_min = |i: usize| -> usize {
            let mut min = usize::MAX;
            for j in i + 1..n {
                min = min.min(self.members[i].intersection_len(&self.members[j]));
                if min == 0 {
                    break;
                }
            }
            min
        };
        if threads <= 1 {
            let mut min = usize::MAX;
            for i in 0..n - 1 {
                min = min.min(row_min(i));
                if min == 0 {
                    break;
                }
            }
            return Ok(min);
        }
        let next = std::sync::atomic::AtomicUsize::new(0);
        let global = std::sync::Mutex::new(usize::MAX);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| {
                    let mut local = usize::MAX;
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= n.saturating_sub(1) {
                            break;
                        }
                        local = local.min(row_min(i));
                        if local == 0 {
                            break;
                        }
                    }
                    let mut g = global.lock().unwrap();
                    *g = (*g).min(local);
                });
            }
        });
        Ok(global.into_inner().unwrap())
    }

    /// The deduplicated set of pairwise intersections.
    pub fn intersection_structure(&self) -> Result<Vec<VecSet>> {
        if self.members.len() < 2 {
            return Err(Error::FamilyTooSmall);
        }
        let mut out: Vec<VecSet> = Vec::new();
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                let cap = a.intersection(b);
                if !out.contains(&cap) {
                    out.push(cap);
                }
            }
        }
        Ok(out)
    }

    /// If every pairwise intersection has one common size, returns it.
    pub fn weak_delta_lambda(&self) -> Result<Option<usize>> {
        if self.members.len() < 2 {
            return Err(Error::FamilyTooSmall);
        }
        let mut lambda = None;
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                let size = a.intersection_len(b);
                match lambda {
                    None => lambda = Some(size),
                    Some(l) if l != size => return Ok(None),
                    _ => {}
                }
            }
        }
        Ok(lambda)
    }
}

/// The family {E~(u) : u in D_q}.
pub fn family_e(f: &Field) -> Result<Family> {
    if f.q() < 4 {
        return Err(Error::DomainEmpty(f.q()));
    }
    let entries = domain_dq(f)
        .members()
        .map(|u| (u.display(f), restricted_extended_ball(f, u)))
        .collect();
    Family::new(f.q(), entries)
}

/// The family {E~(u) : u != 0}. Weight-1 vectors contribute empty sets, so
/// theta is 0 for every q >= 2.
pub fn family_h(f: &Field) -> Result<Family> {
    let entries = (1..(f.q() as usize).pow(3))
        .map(|i| Vec3::from_index(f.q(), i))
        .map(|u| (u.display(f), restricted_extended_ball(f, u)))
        .collect();
    Family::new(f.q(), entries)
}

/// The family {E(u) : u in F_q^3} of unrestricted extended balls; a trivial
/// (3q-2)-intersecting family since B(0) sits inside every member.
pub fn family_g(f: &Field) -> Result<Family> {
    let entries = (0..(f.q() as usize).pow(3))
        .map(|i| Vec3::from_index(f.q(), i))
        .map(|u| (u.display(f), crate::hamming::extended_ball(f, u)))
        .collect();
    Family::new(f.q(), entries)
}

/// theta of {E~(u) : u in D_q} in closed form: 2(q-1) when 3 does not
/// divide q-1, else 0.
pub fn theta_e_formula(q: u16) -> usize {
    if (q - 1).is_multiple_of(3) {
        0
    } else {
        2 * (q as usize - 1)
    }
}
