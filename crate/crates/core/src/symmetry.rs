//! Group actions on F_q^3: coordinate permutations, scalar groups, and the
//! wreath product, with orbit enumeration and canonical representatives.
//!
//! Three families of actions matter here:
//!
//! - the full wreath product (permute coordinates, then scale each
//!   coordinate independently by a nonzero element), which preserves |E(u)|;
//! - the direct product of S3 with the uniform scalar group K, which
//!   additionally preserves |E~(u)| and the domains A_q, D_q;
//! - N x K for a subgroup N of S3, the engine behind the invariant-set
//!   covering construction.
//!
//! Groups here are tiny (at most 6(q-1)^3 elements), so orbits are computed
//! by materializing every element and applying it; no stabilizer chains.
//! Canonical representatives are orbit minima in the packed-index order.

use crate::covering;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::hamming::{extended_ball, restricted_extended_ball, Vec3, VecSet};

/// A permutation of the three coordinate positions, in read-from form:
/// `apply(u)[i] = u[perm[i]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);
    /// The 3-cycle (u1,u2,u3) -> (u2,u3,u1).
    pub const CYCLE: Perm3 = Perm3([1, 2, 0]);

    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    pub fn apply(self, u: Vec3) -> Vec3 {
        let c = u.coords();
        Vec3::raw(u.q(), [c[self.0[0]], c[self.0[1]], c[self.0[2]]])
    }

    fn inverse(self) -> Perm3 {
        let mut inv = [0; 3];
        for (i, &t) in self.0.iter().enumerate() {
            inv[t] = i;
        }
        Perm3(inv)
    }
}

/// The subgroups of S3: trivial, the three transpositions, the 3-cycle
/// subgroup, and S3 itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S3Subgroup {
    Trivial,
    Swap12,
    Swap13,
    Swap23,
    Cyclic3,
    Full,
}

impl S3Subgroup {
    pub fn perms(self) -> Vec<Perm3> {
        match self {
            S3Subgroup::Trivial => vec![Perm3::IDENTITY],
            S3Subgroup::Swap12 => vec![Perm3::IDENTITY, Perm3([1, 0, 2])],
            S3Subgroup::Swap13 => vec![Perm3::IDENTITY, Perm3([2, 1, 0])],
            S3Subgroup::Swap23 => vec![Perm3::IDENTITY, Perm3([0, 2, 1])],
            S3Subgroup::Cyclic3 => vec![Perm3::IDENTITY, Perm3::CYCLE, Perm3([2, 0, 1])],
            S3Subgroup::Full => Perm3::all().to_vec(),
        }
    }

    pub fn order(self) -> usize {
        self.perms().len()
    }
}

/// An element (phi, sigma): permute coordinates by phi, then scale
/// coordinate-wise by the nonzero sigma. Uniform sigma gives the K part of
/// S3 x K; independent sigma gives the wreath product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupElement {
    perm: Perm3,
    scalars: [Elem; 3],
}

impl GroupElement {
    pub fn new(perm: Perm3, scalars: [Elem; 3]) -> Result<GroupElement> {
        if scalars.iter().any(|s| s.is_zero()) {
            return Err(Error::DomainViolation(
                "group scalars must be nonzero".into(),
            ));
        }
        Ok(GroupElement { perm, scalars })
    }

    pub fn identity() -> GroupElement {
        GroupElement {
            perm: Perm3::IDENTITY,
            scalars: [Elem::ONE; 3],
        }
    }

    pub fn uniform(perm: Perm3, lambda: Elem) -> Result<GroupElement> {
        GroupElement::new(perm, [lambda; 3])
    }

    pub fn perm(&self) -> Perm3 {
        self.perm
    }

    pub fn scalars(&self) -> [Elem; 3] {
        self.scalars
    }

    /// Applies the element: `out[i] = scalars[perm[i]] * u[perm[i]]`.
    pub fn act(&self, f: &Field, u: Vec3) -> Result<Vec3> {
        if u.q() != f.q() {
            return Err(Error::FieldMismatch);
        }
        let c = u.coords();
        let mut out = [Elem::ZERO; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            let src = self.perm.0[i];
            *slot = f.mul(self.scalars[src], c[src]);
        }
        Ok(Vec3::raw(u.q(), out))
    }

    /// Composition: apply `other` first, then `self`.
    pub fn compose(&self, f: &Field, other: &GroupElement) -> GroupElement {
        let perm = Perm3([
            other.perm.0[self.perm.0[0]],
            other.perm.0[self.perm.0[1]],
            other.perm.0[self.perm.0[2]],
        ]);
        // scalars[t] must satisfy out[i] = scalars[perm[i]] * u[perm[i]]
        // with out = self(other(u)).
        let inv = perm.inverse();
        let mut scalars = [Elem::ONE; 3];
        for (t, slot) in scalars.iter_mut().enumerate() {
            let i = inv.0[t];
            *slot = f.mul(self.scalars[self.perm.0[i]], other.scalars[t]);
        }
        GroupElement { perm, scalars }
    }
}

/// The supported transformation groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Coordinate permutations from a subgroup of S3, no scaling.
    Permutations(S3Subgroup),
    /// N x K: permutations from N times uniform nonzero scalings.
    ProductWithScalars(S3Subgroup),
    /// The full wreath product: S3 with independent nonzero scalings.
    Wreath,
}

impl GroupKind {
    pub const S3: GroupKind = GroupKind::Permutations(S3Subgroup::Full);
    pub const K: GroupKind = GroupKind::ProductWithScalars(S3Subgroup::Trivial);
    pub const S3_X_K: GroupKind = GroupKind::ProductWithScalars(S3Subgroup::Full);
    pub const CYC3_X_K: GroupKind = GroupKind::ProductWithScalars(S3Subgroup::Cyclic3);

    /// Materializes every element of the group over `f`.
    pub fn elements(self, f: &Field) -> Vec<GroupElement> {
        let nonzero: Vec<Elem> = f.nonzero_elements().collect();
        match self {
            GroupKind::Permutations(n) => n
                .perms()
                .into_iter()
                .map(|p| GroupElement {
                    perm: p,
                    scalars: [Elem::ONE; 3],
                })
                .collect(),
            GroupKind::ProductWithScalars(n) => {
                let mut out = Vec::with_capacity(n.order() * nonzero.len());
                for p in n.perms() {
                    for &l in &nonzero {
                        out.push(GroupElement {
                            perm: p,
                            scalars: [l; 3],
                        });
                    }
                }
                out
            }
            GroupKind::Wreath => {
                let mut out = Vec::with_capacity(6 * nonzero.len().pow(3));
                for p in Perm3::all() {
                    for &s1 in &nonzero {
                        for &s2 in &nonzero {
                            for &s3 in &nonzero {
                                out.push(GroupElement {
                                    perm: p,
                                    scalars: [s1, s2, s3],
                                });
                            }
                        }
                    }
                }
                out
            }
        }
    }

    pub fn order(self, f: &Field) -> usize {
        let m = f.q() as usize - 1;
        match self {
            GroupKind::Permutations(n) => n.order(),
            GroupKind::ProductWithScalars(n) => n.order() * m,
            GroupKind::Wreath => 6 * m * m * m,
        }
    }
}

/// An orbit: its canonical (minimum-index) representative and full member
/// set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Vec3,
    pub members: VecSet,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The orbit of u under a materialized group.
pub fn orbit(f: &Field, elements: &[GroupElement], u: Vec3) -> Orbit {
    let mut members = VecSet::empty(f.q());
    for g in elements {
        members.insert(g.act(f, u).expect("same field"));
    }
    Orbit {
        representative: members.min_member().expect("orbit contains u"),
        members,
    }
}

/// Partitions `domain` into orbit classes. When the domain is invariant the
/// classes are the orbits themselves; otherwise each class is the trace of
/// an orbit on the domain and the representative is the smallest member
/// inside the domain.
pub fn orbits_on(f: &Field, elements: &[GroupElement], domain: &VecSet) -> Vec<Orbit> {
    let mut seen = VecSet::empty(f.q());
    let mut out = Vec::new();
    for u in domain.members() {
        if seen.contains(u) {
            continue;
        }
        let full = orbit(f, elements, u);
        let members = full.members.intersection(domain);
        seen.union_in_place(&members);
        out.push(Orbit {
            representative: members.min_member().expect("u in trace"),
            members,
        });
    }
    out
}

/// Canonical form: the minimum of the orbit in packed-index order. Two
/// vectors share an orbit exactly when their canonical forms coincide.
pub fn canonical_form(f: &Field, elements: &[GroupElement], u: Vec3) -> Vec3 {
    let mut best = u;
    for g in elements {
        let v = g.act(f, u).expect("same field");
        if v < best {
            best = v;
        }
    }
    best
}

/// Report from comparing the extended-ball cardinalities of two vectors
/// against their orbit relationship.
#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub same_wreath_orbit: bool,
    pub same_s3k_orbit: bool,
    pub extended_sizes: (usize, usize),
    pub restricted_sizes: (usize, usize),
    /// Whether every size equality implied by the orbit relations holds.
    pub consistent: bool,
}

/// Checks the invariance facts: a shared wreath orbit forces |E(u)| = |E(v)|,
/// and a shared S3 x K orbit additionally forces |E~(u)| = |E~(v)|.
pub fn orbit_invariance_check(f: &Field, u: Vec3, v: Vec3) -> Result<InvarianceReport> {
    if u.q() != f.q() || v.q() != f.q() {
        return Err(Error::FieldMismatch);
    }
    let wreath = GroupKind::Wreath.elements(f);
    let s3k = GroupKind::S3_X_K.elements(f);
    let same_wreath_orbit = canonical_form(f, &wreath, u) == canonical_form(f, &wreath, v);
    let same_s3k_orbit = canonical_form(f, &s3k, u) == canonical_form(f, &s3k, v);
    let extended_sizes = (extended_ball(f, u).len(), extended_ball(f, v).len());
    let restricted_sizes = (
        restricted_extended_ball(f, u).len(),
        restricted_extended_ball(f, v).len(),
    );
    let mut consistent = true;
    if same_wreath_orbit {
        consistent &= extended_sizes.0 == extended_sizes.1;
    }
    if same_s3k_orbit {
        consistent &=
            extended_sizes.0 == extended_sizes.1 && restricted_sizes.0 == restricted_sizes.1;
    }
    Ok(InvarianceReport {
        same_wreath_orbit,
        same_s3k_orbit,
        extended_sizes,
        restricted_sizes,
        consistent,
    })
}

/// Whether every permutation in N maps the set L onto itself.
pub fn is_invariant_set(n: S3Subgroup, l: &[Vec3]) -> bool {
    n.perms()
        .into_iter()
        .all(|p| l.iter().all(|&v| l.contains(&p.apply(v))))
}

/// One solved representative in a covering construction certificate:
/// `representative = lambda * h + mu * e_(axis+1)`.
#[derive(Debug, Clone)]
pub struct ConstructionWitness {
    pub representative: Vec3,
    pub h: Vec3,
    pub lambda: Elem,
    pub mu: Elem,
    /// 0-based coordinate axis of the basis vector.
    pub axis: usize,
}

impl ConstructionWitness {
    pub fn render(&self, f: &Field) -> String {
        if self.mu.is_zero() {
            format!(
                "({}) = {}*({})",
                self.representative.display(f),
                f.format_elem(self.lambda),
                self.h.display(f)
            )
        } else {
            format!(
                "({}) = {}*({}) + {}*e{}",
                self.representative.display(f),
                f.format_elem(self.lambda),
                self.h.display(f),
                f.format_elem(self.mu),
                self.axis + 1
            )
        }
    }

    /// Re-evaluates the equation.
    pub fn holds(&self, f: &Field) -> bool {
        let rhs = self
            .h
            .scale(f, self.lambda)
            .add(f, Vec3::unit(f, self.axis).scale(f, self.mu));
        rhs == self.representative
    }
}

/// Outcome of the invariant-set covering construction.
#[derive(Debug, Clone)]
pub struct ConstructionCertificate {
    pub q: u16,
    /// L together with (1,1,1): the candidate short covering.
    pub cover: Vec<Vec3>,
    pub witnesses: Vec<ConstructionWitness>,
    pub uncovered_representatives: Vec<Vec3>,
    /// True when every representative has a witness and the final cover
    /// passed the independent enumeration check.
    pub verified: bool,
}

impl ConstructionCertificate {
    /// Certificate JSON in the common {kind, q, m, vectors, evidence,
    /// verified} schema.
    pub fn to_json(&self, f: &Field) -> serde_json::Value {
        let mut evidence: Vec<serde_json::Value> = self
            .witnesses
            .iter()
            .map(|w| {
                serde_json::json!({
                    "statement": w.render(f),
                    "holds": w.holds(f),
                })
            })
            .collect();
        for u in &self.uncovered_representatives {
            evidence.push(serde_json::json!({
                "statement": format!("orbit representative ({}) has no witness", u.display(f)),
                "holds": false,
            }));
        }
        serde_json::json!({
            "kind": "MetodoWitness",
            "q": self.q,
            "m": self.cover.len(),
            "vectors": self.cover.iter().map(|v| v.display(f)).collect::<Vec<_>>(),
            "evidence": evidence,
            "verified": self.verified,
        })
    }
}

/// The invariant-set construction: given N <= S3 and an N-invariant set L,
/// every vector with a repeated coordinate lies in E((1,1,1)), and a vector
/// with distinct coordinates is covered once its N x K orbit representative
/// can be written as lambda*h + mu*e_j with h in L and lambda nonzero. On
/// success L ∪ {(1,1,1)} is a short covering; the certificate carries one
/// witness equation per orbit representative on the distinct-coordinate
/// domain, and the cover is independently re-checked by enumeration.
pub fn construction_certificate(
    f: &Field,
    n: S3Subgroup,
    l: &[Vec3],
) -> Result<ConstructionCertificate> {
    if !is_invariant_set(n, l) {
        return Err(Error::InvariantViolation(
            "L must be invariant under the chosen permutation subgroup".into(),
        ));
    }
    let group = GroupKind::ProductWithScalars(n).elements(f);
    let aq = crate::hamming::domain_aq(f);
    let orbits = orbits_on(f, &group, &aq);

    let mut witnesses = Vec::new();
    let mut uncovered = Vec::new();
    for orbit in &orbits {
        match solve_representative(f, l, orbit.representative) {
            Some(w) => witnesses.push(w),
            None => uncovered.push(orbit.representative),
        }
    }

    let mut cover = l.to_vec();
    let all_ones = Vec3::raw(f.q(), [Elem::ONE; 3]);
    if !cover.contains(&all_ones) {
        cover.push(all_ones);
    }
    let verified = uncovered.is_empty()
        && witnesses.iter().all(|w| w.holds(f))
        && covering::is_short_covering(f, &cover)
            .map(|check| check.covers)
            .unwrap_or(false);

    Ok(ConstructionCertificate {
        q: f.q(),
        cover,
        witnesses,
        uncovered_representatives: uncovered,
        verified,
    })
}

/// Searches h in L, nonzero lambda, mu in F_q, and an axis with
/// u = lambda*h + mu*e_axis.
fn solve_representative(f: &Field, l: &[Vec3], u: Vec3) -> Option<ConstructionWitness> {
    for &h in l {
        for lambda in f.nonzero_elements() {
            let base = h.scale(f, lambda);
            let diff = u.sub(f, base);
            if diff.is_zero() {
                return Some(ConstructionWitness {
                    representative: u,
                    h,
                    lambda,
                    mu: Elem::ZERO,
                    axis: 2,
                });
            }
            if diff.weight() == 1 {
                let axis = diff.coords().iter().position(|e| !e.is_zero()).unwrap();
                return Some(ConstructionWitness {
                    representative: u,
                    h,
                    lambda,
                    mu: diff.coords()[axis],
                    axis,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::{dist, domain_aq, domain_dq};

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
    fn act_basics() {
        let f = gf(5);
        let u = vec3(&f, [0, 2, 3]);
        assert_eq!(GroupElement::identity().act(&f, u).unwrap(), u);
        // the 3-cycle sends (u1,u2,u3) to (u2,u3,u1)
        let cyc = GroupElement::new(Perm3::CYCLE, [Elem::ONE; 3]).unwrap();
        assert_eq!(cyc.act(&f, u).unwrap(), vec3(&f, [2, 3, 0]));
        // uniform scaling by 3: (0,1,4) = 3*(0,2,3)
        let scale = GroupElement::uniform(Perm3::IDENTITY, f.elem(3).unwrap()).unwrap();
        assert_eq!(scale.act(&f, u).unwrap(), vec3(&f, [0, 1, 4]));
        assert!(GroupElement::new(Perm3::IDENTITY, [Elem::ZERO; 3]).is_err());
    }

    #[test]
    fn action_law_holds() {
        let f = gf(4);
        let elements = GroupKind::Wreath.elements(&f);
        // spot-check the composition law on a deterministic sample
        for (i, g) in elements.iter().enumerate().step_by(13) {
            for (j, h) in elements.iter().enumerate().step_by(17) {
                let gh = g.compose(&f, h);
                for u in all_vectors(4).step_by(7) {
                    assert_eq!(
                        gh.act(&f, u).unwrap(),
                        g.act(&f, h.act(&f, u).unwrap()).unwrap(),
                        "i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        for q in [4, 5] {
            let f = gf(q);
            for kind in [
                GroupKind::S3,
                GroupKind::K,
                GroupKind::S3_X_K,
                GroupKind::Wreath,
            ] {
                let elements = kind.elements(&f);
                assert_eq!(elements.len(), kind.order(&f));
                for u in all_vectors(q) {
                    let orb = orbit(&f, &elements, u);
                    assert!(orb.members.contains(u));
                    assert_eq!(elements.len() % orb.len(), 0);
                }
            }
        }
    }

    #[test]
    fn orbits_partition_the_space() {
        for q in [4, 5, 7] {
            let f = gf(q);
            let full = VecSet::full(q);
            for kind in [GroupKind::S3_X_K, GroupKind::CYC3_X_K, GroupKind::Wreath] {
                let elements = kind.elements(&f);
                let orbits = orbits_on(&f, &elements, &full);
                let mut union = VecSet::empty(q);
                let mut total = 0;
                for orb in &orbits {
                    assert!(union.is_disjoint(&orb.members));
                    union.union_in_place(&orb.members);
                    total += orb.len();
                }
                assert_eq!(union, full);
                assert_eq!(total, (q as usize).pow(3));
            }
        }
    }

    #[test]
    fn wreath_orbits_are_weight_classes() {
        let f = gf(5);
        let elements = GroupKind::Wreath.elements(&f);
        for u in all_vectors(5) {
            for v in all_vectors(5) {
                let same = canonical_form(&f, &elements, u) == canonical_form(&f, &elements, v);
                assert_eq!(same, u.weight() == v.weight());
            }
        }
    }

    #[test]
    fn fixed_point_orbit() {
        let f = gf(5);
        let elements = GroupKind::S3_X_K.elements(&f);
        let orb = orbit(&f, &elements, Vec3::zero(&f));
        assert_eq!(orb.len(), 1);
        assert_eq!(orb.representative, Vec3::zero(&f));
    }

    #[test]
    fn aq_is_invariant_with_two_weight_classes() {
        // A_q splits into the S3 x K invariant classes {d(u,0)=3} = D_q and
        // {d(u,0)=2}; each orbit stays inside one class. The classes are
        // single orbits only at q = 4: already at q = 5 the one-zero class
        // splits by the ratio of its nonzero coordinates ({2,3} vs {4}),
        // and for q = 7 the class sizes exceed |S3 x K| = 6(q-1) outright.
        for q in [4u16, 5, 7, 8, 9] {
            let f = gf(q);
            let elements = GroupKind::S3_X_K.elements(&f);
            let aq = domain_aq(&f);
            let orbits = orbits_on(&f, &elements, &aq);
            let zero = Vec3::zero(&f);
            let mut d3_class = VecSet::empty(q);
            for orb in &orbits {
                let d = dist(orb.representative, zero);
                assert!(d == 2 || d == 3);
                for v in orb.members.members() {
                    assert_eq!(dist(v, zero), d, "orbit crosses weight classes");
                }
                if d == 3 {
                    d3_class.union_in_place(&orb.members);
                }
            }
            assert_eq!(d3_class, domain_dq(&f));
            match q {
                4 => assert_eq!(orbits.len(), 2),
                5 => assert_eq!(orbits.len(), 3),
                _ => assert!(orbits.len() > 2),
            }
        }
    }

    #[test]
    fn a5_one_zero_class_splits_by_ratio() {
        let f = gf(5);
        let elements = GroupKind::S3_X_K.elements(&f);
        // ratio 4 is self-inverse, so (0,1,4) sits in a 12-element orbit
        assert_eq!(orbit(&f, &elements, vec3(&f, [0, 1, 4])).len(), 12);
        // ratios 2 and 3 swap under coordinate exchange: one 24-element orbit
        let r2 = orbit(&f, &elements, vec3(&f, [0, 1, 2]));
        assert_eq!(r2.len(), 24);
        assert!(r2.members.contains(vec3(&f, [0, 1, 3])));
        assert!(!r2.members.contains(vec3(&f, [0, 1, 4])));
    }

    #[test]
    fn cyc3k_orbits_on_a5() {
        let f = gf(5);
        let elements = GroupKind::CYC3_X_K.elements(&f);
        assert_eq!(elements.len(), 12);
        let orbits = orbits_on(&f, &elements, &domain_aq(&f));
        assert_eq!(orbits.len(), 5);
        for orb in &orbits {
            assert_eq!(orb.len(), 12); // trivial stabilizers
        }
        let reps: Vec<Vec3> = orbits.iter().map(|o| o.representative).collect();
        let expected: Vec<Vec3> = [[0, 1, 2], [0, 1, 3], [0, 1, 4], [1, 2, 3], [1, 3, 2]]
            .iter()
            .map(|&c| vec3(&f, c))
            .collect();
        assert_eq!(reps, expected);
    }

    #[test]
    fn canonical_form_properties() {
        let f = gf(5);
        let elements = GroupKind::S3_X_K.elements(&f);
        for u in all_vectors(5) {
            let c = canonical_form(&f, &elements, u);
            assert!(orbit(&f, &elements, u).members.contains(c));
            assert_eq!(canonical_form(&f, &elements, c), c);
        }
        assert_eq!(
            canonical_form(&f, &elements, Vec3::zero(&f)),
            Vec3::zero(&f)
        );
        // first nonzero coordinate of a canonical form is 1
        let c = canonical_form(&f, &elements, vec3(&f, [0, 3, 1]));
        assert_eq!(c, vec3(&f, [0, 1, 2]));
        let coords = c.coords();
        let first_nonzero = coords.iter().find(|e| !e.is_zero()).unwrap();
        assert_eq!(*first_nonzero, Elem::ONE);
    }

    #[test]
    fn canonical_form_separates_orbits() {
        let f = gf(4);
        let elements = GroupKind::S3_X_K.elements(&f);
        for u in all_vectors(4) {
            let orb = orbit(&f, &elements, u);
            for v in all_vectors(4) {
                let same = canonical_form(&f, &elements, u) == canonical_form(&f, &elements, v);
                assert_eq!(same, orb.members.contains(v));
            }
        }
    }

    #[test]
    fn invariance_report() {
        let f = gf(5);
        let u = vec3(&f, [1, 2, 3]);
        // v = act(g, u) for g in S3 x K keeps both cardinalities
        let g = GroupElement::uniform(Perm3::CYCLE, f.elem(2).unwrap()).unwrap();
        let v = g.act(&f, u).unwrap();
        let report = orbit_invariance_check(&f, u, v).unwrap();
        assert!(report.same_s3k_orbit && report.same_wreath_orbit && report.consistent);
        assert_eq!(report.restricted_sizes.0, report.restricted_sizes.1);

        // same weight keeps |E| even across different S3 x K orbits
        let w = vec3(&f, [1, 1, 1]);
        let report = orbit_invariance_check(&f, u, w).unwrap();
        assert!(report.same_wreath_orbit);
        assert!(!report.same_s3k_orbit);
        assert_eq!(report.extended_sizes.0, report.extended_sizes.1);
        assert!(report.consistent);

        let trivial = orbit_invariance_check(&f, w, w).unwrap();
        assert!(trivial.consistent);
    }

    #[test]
    fn invariant_sets() {
        let f = gf(5);
        let l = [
            vec3(&f, [0, 2, 3]),
            vec3(&f, [3, 0, 2]),
            vec3(&f, [2, 3, 0]),
        ];
        assert!(is_invariant_set(S3Subgroup::Cyclic3, &l));
        assert!(is_invariant_set(S3Subgroup::Trivial, &l));
        assert!(!is_invariant_set(S3Subgroup::Cyclic3, &l[..1]));
        assert!(!is_invariant_set(S3Subgroup::Full, &l));
        assert!(is_invariant_set(S3Subgroup::Full, &[]));
    }

    #[test]
    fn construction_reproves_c5_upper_bound() {
        let f = gf(5);
        let l = [
            vec3(&f, [0, 2, 3]),
            vec3(&f, [3, 0, 2]),
            vec3(&f, [2, 3, 0]),
        ];
        let cert = construction_certificate(&f, S3Subgroup::Cyclic3, &l).unwrap();
        assert!(cert.verified);
        assert!(cert.uncovered_representatives.is_empty());
        assert_eq!(cert.witnesses.len(), 5);
        assert_eq!(cert.cover.len(), 4);
        let reps: Vec<Vec3> = cert.witnesses.iter().map(|w| w.representative).collect();
        let expected: Vec<Vec3> = [[0, 1, 2], [0, 1, 3], [0, 1, 4], [1, 2, 3], [1, 3, 2]]
            .iter()
            .map(|&c| vec3(&f, c))
            .collect();
        assert_eq!(reps, expected);
        for w in &cert.witnesses {
            assert!(w.holds(&f));
            assert!(l.contains(&w.h));
        }
    }

    #[test]
    fn construction_handles_empty_domain() {
        // A_2 is empty, so {(1,1,1)} alone must cover F_2^3
        let f = gf(2);
        let cert = construction_certificate(&f, S3Subgroup::Trivial, &[]).unwrap();
        assert!(cert.verified);
        assert!(cert.witnesses.is_empty());
        assert_eq!(cert.cover, vec![vec3(&f, [1, 1, 1])]);
    }

    #[test]
    fn construction_reports_uncovered_representative() {
        let f = gf(5);
        let l = [vec3(&f, [0, 2, 3])];
        let cert = construction_certificate(&f, S3Subgroup::Trivial, &l).unwrap();
        assert!(!cert.verified);
        assert!(!cert.uncovered_representatives.is_empty());
    }

    #[test]
    fn construction_rejects_non_invariant_l() {
        let f = gf(5);
        let l = [vec3(&f, [0, 2, 3])];
        assert!(matches!(
            construction_certificate(&f, S3Subgroup::Cyclic3, &l),
            Err(Error::InvariantViolation(_))
        ));
    }
}
