//! Group actions on F_q^3: orbits, canonical representatives, and the
//! cardinality invariants they carry.
//!
//! Run with: cargo run --example orbits_and_canonical_forms

use extball::gf::Field;
use extball::hamming::{domain_aq, Vec3, VecSet};
use extball::symmetry::{
    canonical_form, orbit, orbit_invariance_check, orbits_on, GroupElement, GroupKind, Perm3,
};

fn main() {
    let f = Field::new(5, 1).unwrap();
    let v = |codes: [u16; 3]| Vec3::from_codes(&f, codes).unwrap();

    println!("=== Acting on vectors ===\n");
    let u = v([0, 2, 3]);
    let cycle = GroupElement::new(Perm3::CYCLE, [f.one(); 3]).unwrap();
    println!(
        "3-cycle sends ({}) to ({})",
        u.display(&f),
        cycle.act(&f, u).unwrap().display(&f)
    );
    let scale = GroupElement::uniform(Perm3::IDENTITY, f.elem(3).unwrap()).unwrap();
    println!(
        "scaling by 3 sends ({}) to ({})",
        u.display(&f),
        scale.act(&f, u).unwrap().display(&f)
    );

    println!("\n=== Orbits of the main groups ===\n");
    for kind in [GroupKind::S3_X_K, GroupKind::Wreath] {
        let elements = kind.elements(&f);
        let orbits = orbits_on(&f, &elements, &VecSet::full(5));
        println!(
            "group of order {:3}: {} orbits on F_5^3, sizes {:?}",
            elements.len(),
            orbits.len(),
            orbits.iter().map(|o| o.len()).collect::<Vec<_>>()
        );
    }
    println!("\nunder the full wreath product the orbits are exactly the weight classes.");

    println!("\n=== The 3-cycle x scaling action on A_5 ===\n");
    let elements = GroupKind::CYC3_X_K.elements(&f);
    let orbits = orbits_on(&f, &elements, &domain_aq(&f));
    println!(
        "A_5 (60 vectors) splits into {} orbits of 12:",
        orbits.len()
    );
    for o in &orbits {
        println!(
            "  representative ({}), {} members",
            o.representative.display(&f),
            o.len()
        );
    }

    println!("\n=== Canonical forms ===\n");
    let s3k = GroupKind::S3_X_K.elements(&f);
    for u in [v([0, 3, 1]), v([4, 2, 0]), v([3, 3, 3])] {
        let c = canonical_form(&f, &s3k, u);
        println!(
            "canonical form of ({}) under S3 x K is ({})",
            u.display(&f),
            c.display(&f)
        );
        assert!(orbit(&f, &s3k, u).members.contains(c));
    }

    println!("\n=== Cardinality invariants ===\n");
    let a = v([1, 2, 3]);
    let b = cycle.act(&f, a).unwrap().scale(&f, f.elem(2).unwrap());
    let report = orbit_invariance_check(&f, a, b).unwrap();
    println!(
        "({}) and ({}): same S3 x K orbit = {}, |E| = {:?}, |E~| = {:?}",
        a.display(&f),
        b.display(&f),
        report.same_s3k_orbit,
        report.extended_sizes,
        report.restricted_sizes
    );
    let c = v([1, 1, 1]);
    let report = orbit_invariance_check(&f, a, c).unwrap();
    println!(
        "({}) and ({}): same weight keeps |E| equal ({:?}) though |E~| differs ({:?})",
        a.display(&f),
        c.display(&f),
        report.extended_sizes,
        report.restricted_sizes
    );
}
