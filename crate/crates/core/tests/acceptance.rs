//! Acceptance suite: one test per published claim group, each printing a
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.
//!
//! Two tests assert claims that are mathematically false as published and
//! are expected to fail with an explanatory witness: the rho dichotomy
//! includes same-line pairs at q = 4 (criterion 4), and the orbit count of
//! A_q under S3 x K is two only at q = 4 (part of criterion 10). Both
//! failures are printed with the exact counterexample.

use extball::covering::{
    builtin_cover_with_generator, counting_lower_bound, exhaustive_c, is_short_covering,
    CoveringCertificate, SearchOptions,
};
use extball::gf::{Elem, Field};
use extball::hamming::{
    ball, domain_aq, domain_dq, dq_size, extended_ball, hamming_distance, restricted_extended_ball,
    restricted_extended_ball_formula, Vec3, VecSet,
};
use extball::intersections::{ball_intersection, family_e, rho, rho_min, theta_e_formula};
use extball::symmetry::{
    construction_certificate, orbits_on, ConstructionWitness, GroupKind, S3Subgroup,
};

fn gf(q: u16) -> Field {
    Field::of_order(q).unwrap()
}

fn vec3(f: &Field, codes: [u16; 3]) -> Vec3 {
    Vec3::from_codes(f, codes).unwrap()
}

fn all_vectors(q: u16) -> impl Iterator<Item = Vec3> {
    (0..(q as usize).pow(3)).map(move |i| Vec3::from_index(q, i))
}

fn pass(n: u8, what: &str) {
    println!("[acceptance] criterion {n} ({what}): PASS");
}

fn fail(n: u8, what: &str, why: &str) -> ! {
    println!("[acceptance] criterion {n} ({what}): FAIL - {why}");
    panic!("criterion {n} failed: {why}");
}

#[test]
fn criterion_01_restricted_cardinality_formula() {
    for q in [4u16, 5, 7, 8, 9, 11, 13] {
        let f = gf(q);
        for u in all_vectors(q) {
            let formula = restricted_extended_ball_formula(&f, u);
            let counted = restricted_extended_ball(&f, u).len();
            if formula != counted {
                fail(
                    1,
                    "restricted cardinality formula",
                    &format!(
                        "q={q}, u=({}): formula {formula}, enumeration {counted}",
                        u.display(&f)
                    ),
                );
            }
        }
    }
    pass(1, "restricted cardinality formula");
}

#[test]
fn criterion_02_intersection_corollary() {
    for q in [4u16, 5, 7, 8, 9] {
        let f = gf(q);
        let dq: Vec<Vec3> = domain_dq(&f).members().collect();
        let tildes: Vec<VecSet> = dq
            .iter()
            .map(|&u| restricted_extended_ball(&f, u))
            .collect();
        for (i, &u) in dq.iter().enumerate() {
            for (j, &v) in dq.iter().enumerate() {
                let by_rho = rho(&f, u, v).unwrap().value() * (q as usize - 1);
                let by_enum = tildes[i].intersection_len(&tildes[j]);
                if by_rho != by_enum {
                    fail(
                        2,
                        "intersection corollary",
                        &format!(
                            "q={q}, u=({}), v=({}): rho route {by_rho}, enumeration {by_enum}",
                            u.display(&f),
                            v.display(&f)
                        ),
                    );
                }
            }
        }
    }
    pass(2, "intersection corollary");
}

#[test]
fn criterion_03_worked_examples() {
    let f5 = gf(5);
    let cases5 = [
        ([1u16, 4, 2], [1u16, 3, 4], 3usize, 12usize),
        ([1, 2, 4], [1, 4, 2], 2, 8),
        ([1, 0, 2], [1, 2, 3], 1, 4),
    ];
    for (uc, vc, want_rho, want_size) in cases5 {
        let (u, v) = (vec3(&f5, uc), vec3(&f5, vc));
        let r = rho(&f5, u, v).unwrap().value();
        let size =
            restricted_extended_ball(&f5, u).intersection_len(&restricted_extended_ball(&f5, v));
        if r != want_rho || size != want_size {
            fail(
                3,
                "worked examples",
                &format!("GF(5) {uc:?},{vc:?}: rho {r} (want {want_rho}), size {size} (want {want_size})"),
            );
        }
    }

    let f4 = gf(4);
    let u = Vec3::new(&f4, [Elem::ONE, f4.xi(), f4.xi_pow(2)]);
    let v = Vec3::new(&f4, [Elem::ONE, f4.xi_pow(2), f4.xi()]);
    let size4 =
        restricted_extended_ball(&f4, u).intersection_len(&restricted_extended_ball(&f4, v));
    if rho(&f4, u, v).unwrap().value() != 0 || size4 != 0 {
        fail(
            3,
            "worked examples",
            "GF(4) swapped pair should give rho 0 and size 0",
        );
    }

    let f7 = gf(7);
    if rho(&f7, vec3(&f7, [1, 2, 4]), vec3(&f7, [1, 4, 2]))
        .unwrap()
        .value()
        != 0
    {
        fail(3, "worked examples", "GF(7) swapped pair should give rho 0");
    }

    let f11 = gf(11);
    let r11 = rho(&f11, vec3(&f11, [2, 0, 5]), vec3(&f11, [6, 7, 9]))
        .unwrap()
        .value();
    if r11 != 2 {
        fail(
            3,
            "worked examples",
            &format!("rho_11((2,0,5),(6,7,9)) = {r11}, want 2"),
        );
    }
    pass(3, "worked examples");
}

#[test]
fn criterion_04_rho_dichotomy() {
    // As published: rho in {0} u [2, inf) over ALL ordered D_q pairs, and
    // min rho = 0 exactly when 3 | q-1. The first part is false at q = 4,
    // where a same-line pair has rho = 3q-11 = 1; the failure below is the
    // expected, documented outcome.
    let mut violations: Vec<String> = Vec::new();
    for q in [4u16, 5, 7, 8, 9, 11] {
        let f = gf(q);
        let dq: Vec<Vec3> = domain_dq(&f).members().collect();
        let mut min = usize::MAX;
        for &u in &dq {
            for &v in &dq {
                let r = rho(&f, u, v).unwrap().value();
                min = min.min(r);
                if r == 1 && violations.len() < 3 {
                    violations.push(format!(
                        "q={q}: rho(({}),({})) = 1",
                        u.display(&f),
                        v.display(&f)
                    ));
                }
            }
        }
        let want_min = if (q - 1) % 3 == 0 { 0 } else { 2 };
        if min != want_min {
            fail(
                4,
                "rho dichotomy",
                &format!("q={q}: min rho {min}, want {want_min}"),
            );
        }
        if rho_min(&f).unwrap() != min {
            fail(
                4,
                "rho dichotomy",
                &format!("q={q}: closed form disagrees with scan"),
            );
        }
    }
    if !violations.is_empty() {
        fail(
            4,
            "rho dichotomy",
            &format!(
                "rho = 1 occurs, so the published 0-or->=2 dichotomy fails on same-line pairs: {}",
                violations.join("; ")
            ),
        );
    }
    pass(4, "rho dichotomy");
}

#[test]
fn criterion_05_theta_of_restricted_family() {
    for (q, expected) in [
        (5u16, 8usize),
        (8, 14),
        (9, 16),
        (11, 20),
        (4, 0),
        (7, 0),
        (13, 0),
    ] {
        let f = gf(q);
        let theta = family_e(&f).unwrap().theta().unwrap();
        if theta != expected || theta != theta_e_formula(q) {
            fail(
                5,
                "theta of the restricted family",
                &format!("q={q}: theta(E) = {theta}, want {expected}"),
            );
        }
    }
    pass(5, "theta of the restricted family");
}

#[test]
fn criterion_06_trivial_bound_and_sharpness() {
    for q in [4u16, 5, 7] {
        let f = gf(q);
        let sets: Vec<VecSet> = all_vectors(q).map(|u| extended_ball(&f, u)).collect();
        let bound = 3 * q as usize - 2;
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i..] {
                if a.intersection_len(b) < bound {
                    fail(
                        6,
                        "trivial bound",
                        &format!("q={q}: a pair dips below {bound}"),
                    );
                }
            }
        }
    }
    let f = gf(5);
    let sharp = extended_ball(&f, vec3(&f, [0, 0, 1]))
        .intersection_len(&extended_ball(&f, vec3(&f, [1, 2, 0])));
    if sharp != 13 {
        fail(
            6,
            "trivial bound",
            &format!("sharpness witness gives {sharp}, want 13"),
        );
    }
    pass(6, "trivial bound and sharpness");
}

#[test]
fn criterion_07_upper_bounds() {
    // q = 8 and q = 9: the builtin 6-vector covers verify under every
    // choice of primitive element.
    for q in [8u16, 9] {
        let f = gf(q);
        for g in f.primitive_elements() {
            let cert = builtin_cover_with_generator(&f, g).unwrap();
            if !cert.verified() {
                fail(
                    7,
                    "upper bounds",
                    &format!("q={q}: cover fails under generator {}", f.format_elem(g)),
                );
            }
        }
    }

    // q = 5: the invariant-set construction, with the published witness
    // table. The five representatives must match, the published equations
    // must re-evaluate, and the cover must pass the enumeration check.
    let f = gf(5);
    let l = [
        vec3(&f, [0, 2, 3]),
        vec3(&f, [3, 0, 2]),
        vec3(&f, [2, 3, 0]),
    ];
    let cert = construction_certificate(&f, S3Subgroup::Cyclic3, &l).unwrap();
    if !cert.verified || cert.witnesses.len() != 5 {
        fail(
            7,
            "upper bounds",
            "q=5 construction did not verify with 5 witnesses",
        );
    }
    let h = vec3(&f, [0, 2, 3]);
    let e = |c: u16| f.elem(c).unwrap();
    let published = [
        ConstructionWitness {
            representative: vec3(&f, [0, 1, 2]),
            h,
            lambda: e(3),
            mu: e(3),
            axis: 2,
        },
        ConstructionWitness {
            representative: vec3(&f, [0, 1, 3]),
            h,
            lambda: e(3),
            mu: e(4),
            axis: 2,
        },
        ConstructionWitness {
            representative: vec3(&f, [0, 1, 4]),
            h,
            lambda: e(3),
            mu: e(0),
            axis: 2,
        },
        ConstructionWitness {
            representative: vec3(&f, [1, 2, 3]),
            h,
            lambda: e(1),
            mu: e(1),
            axis: 0,
        },
        ConstructionWitness {
            representative: vec3(&f, [1, 3, 2]),
            h,
            lambda: e(4),
            mu: e(1),
            axis: 0,
        },
    ];
    for (mine, published) in cert.witnesses.iter().zip(&published) {
        if mine.representative != published.representative {
            fail(
                7,
                "upper bounds",
                &format!(
                    "representative ({}) does not match the published ({})",
                    mine.representative.display(&f),
                    published.representative.display(&f)
                ),
            );
        }
        if !published.holds(&f) {
            fail(
                7,
                "upper bounds",
                &format!("published equation fails: {}", published.render(&f)),
            );
        }
        if !mine.holds(&f) {
            fail(
                7,
                "upper bounds",
                &format!("searched equation fails: {}", mine.render(&f)),
            );
        }
    }
    if !is_short_covering(&f, &cert.cover).unwrap().covers {
        fail(
            7,
            "upper bounds",
            "q=5 construction cover fails enumeration",
        );
    }
    pass(7, "upper bounds");
}

#[test]
fn criterion_08_counting_lower_bounds() {
    let expected = [
        (7u16, 5usize, [("H1", 72usize, None), ("H2", 84, None)]),
        (
            8,
            6,
            [("H1", 196, None), ("H2", 217, Some((196usize, 203usize)))],
        ),
        (9, 6, [("H1", 272, None), ("H2", 304, None)]),
    ];
    for (q, bound, chains_want) in expected {
        let f = gf(q);
        let cert = counting_lower_bound(&f).unwrap();
        let CoveringCertificate::CountingLowerBound {
            bound: got,
            chains,
            verified,
            ..
        } = &cert
        else {
            fail(8, "counting lower bounds", "wrong certificate kind");
        };
        if !verified || *got != bound {
            fail(
                8,
                "counting lower bounds",
                &format!("q={q}: bound {got}, want {bound}"),
            );
        }
        for ((shape, total, refine), chain) in chains_want.iter().zip(chains) {
            if chain.shape != *shape || chain.total != *total || chain.dq != dq_size(q) {
                fail(
                    8,
                    "counting lower bounds",
                    &format!(
                        "q={q} {shape}: total {} vs |D_q| {}, want {total} vs {}",
                        chain.total,
                        chain.dq,
                        dq_size(q)
                    ),
                );
            }
            if !chain.refuted || !chain.reverify(&f) {
                fail(
                    8,
                    "counting lower bounds",
                    &format!("q={q} {shape}: chain not refuted"),
                );
            }
            match (refine, &chain.discount) {
                (None, _) if chain.total < chain.dq => {}
                (Some((fallback, adjusted)), Some(d))
                    if d.fallback_total == *fallback && d.adjusted_total == *adjusted => {}
                _ => fail(
                    8,
                    "counting lower bounds",
                    &format!("q={q} {shape}: wrong refinement"),
                ),
            }
        }
    }
    pass(8, "counting lower bounds");
}

#[test]
fn criterion_09_exhaustive_small_values() {
    // Assumption-free: shape pruning off; orbit seeding and the coverage
    // bound are the only cuts.
    for (q, expected) in [(2u16, 1usize), (3, 3), (4, 3), (5, 4)] {
        let f = gf(q);
        let opts = SearchOptions {
            shape_pruning: false,
            ..Default::default()
        };
        let cert = exhaustive_c(&f, &opts).unwrap();
        if cert.m() != expected || !cert.verified() {
            fail(
                9,
                "exhaustive search",
                &format!("q={q}: found c = {}, want {expected}", cert.m()),
            );
        }
    }
    pass(9, "exhaustive search values");
}

#[test]
fn criterion_10_property_suites() {
    // Field axioms, exhaustively for q <= 16.
    for q in [2u16, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = gf(q);
        let elems: Vec<Elem> = f.elements().collect();
        for &a in &elems {
            for &b in &elems {
                for &c in &elems {
                    let ok = f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                        && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                        && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                    if !ok {
                        fail(
                            10,
                            "property suites",
                            &format!("field axiom fails in GF({q})"),
                        );
                    }
                }
            }
        }
    }

    // Orbit partition and divisibility for the three main actions, q <= 9.
    for q in [4u16, 5, 7, 8, 9] {
        let f = gf(q);
        let full = VecSet::full(q);
        for kind in [GroupKind::S3_X_K, GroupKind::CYC3_X_K, GroupKind::Wreath] {
            let elements = kind.elements(&f);
            let orbits = orbits_on(&f, &elements, &full);
            let mut union = VecSet::empty(q);
            for orbit in &orbits {
                if !union.is_disjoint(&orbit.members) {
                    fail(10, "property suites", &format!("q={q}: orbits overlap"));
                }
                union.union_in_place(&orbit.members);
                if elements.len() % orbit.len() != 0 {
                    fail(
                        10,
                        "property suites",
                        &format!(
                            "q={q}: orbit size {} does not divide {}",
                            orbit.len(),
                            elements.len()
                        ),
                    );
                }
            }
            if union != full {
                fail(
                    10,
                    "property suites",
                    &format!("q={q}: orbits do not cover the space"),
                );
            }
        }
    }

    // Ball intersection case analysis equals enumeration, q <= 9.
    for q in [2u16, 3, 4, 5, 7, 8, 9] {
        let f = gf(q);
        let balls: Vec<VecSet> = all_vectors(q).map(|u| ball(&f, u)).collect();
        for u in all_vectors(q) {
            for v in all_vectors(q) {
                let cases = ball_intersection(&f, u, v).unwrap();
                if cases != balls[u.index()].intersection(&balls[v.index()]) {
                    fail(
                        10,
                        "property suites",
                        &format!(
                            "q={q}: case analysis wrong at ({}),({})",
                            u.display(&f),
                            v.display(&f)
                        ),
                    );
                }
            }
        }
    }

    // Scalar-multiple balls of weight-3 vectors are pairwise disjoint.
    for q in [4u16, 5, 7, 8, 9] {
        let f = gf(q);
        let scalars: Vec<Elem> = f.nonzero_elements().collect();
        for u in all_vectors(q).filter(|u| u.weight() == 3) {
            for (i, &l) in scalars.iter().enumerate() {
                for &m in &scalars[i + 1..] {
                    let (lu, mu) = (u.scale(&f, l), u.scale(&f, m));
                    if hamming_distance(lu, mu).unwrap() != 3
                        || !ball(&f, lu).is_disjoint(&ball(&f, mu))
                    {
                        fail(
                            10,
                            "property suites",
                            &format!("q={q}: scalar balls overlap"),
                        );
                    }
                }
            }
        }
    }

    // As published: A_q splits into exactly two orbits under S3 x K. True
    // at q = 4 only; the failure below is the expected, documented outcome.
    let mut counts = Vec::new();
    for q in [4u16, 5, 7, 8, 9] {
        let f = gf(q);
        let elements = GroupKind::S3_X_K.elements(&f);
        let orbits = orbits_on(&f, &elements, &domain_aq(&f));
        counts.push(format!("q={q}: {} orbits", orbits.len()));
        if orbits.len() != 2 {
            fail(
                10,
                "property suites",
                &format!(
                    "A_q has two S3 x K orbits only at q = 4; found [{}]",
                    counts.join(", ")
                ),
            );
        }
    }
    pass(10, "property suites");
}
