//! Balls, extended balls, and the distinct-coordinate domains.
//!
//! Run with: cargo run --example balls_and_domains

use extball::gf::Field;
use extball::hamming::{
    aq_size, ball, domain_aq, domain_dq, dq_size, extended_ball, restricted_extended_ball,
    restricted_extended_ball_formula, Vec3,
};

fn main() {
    let f = Field::new(5, 1).unwrap();
    let v = |codes: [u16; 3]| Vec3::from_codes(&f, codes).unwrap();

    println!("=== Balls in F_5^3 ===\n");
    let zero = Vec3::zero(&f);
    println!("|B(0,0,0)| = {} (always 3q-2)", ball(&f, zero).len());

    println!("\n=== Extended balls ===\n");
    println!("E(u) is the union of balls around every scalar multiple of u.");
    for u in [zero, v([0, 0, 1]), v([0, 1, 1]), v([1, 1, 1]), v([1, 2, 3])] {
        println!(
            "  weight {}: |E({})| = {}",
            u.weight(),
            u.display(&f),
            extended_ball(&f, u).len()
        );
    }
    println!("the size depends only on the weight: 3q-2, then q(2q-1) twice, then q(3q-2)");

    println!("\n=== The domains A_q and D_q ===\n");
    for q in [4u16, 5, 7, 8, 9] {
        let fq = Field::of_order(q).unwrap();
        println!(
            "q = {q}: |A_q| = {} = q(q-1)(q-2), |D_q| = {} = (q-1)(q-2)(q-3)",
            domain_aq(&fq).len(),
            domain_dq(&fq).len()
        );
        assert_eq!(domain_aq(&fq).len(), aq_size(q));
        assert_eq!(domain_dq(&fq).len(), dq_size(q));
    }

    println!("\n=== Restricted extended balls ===\n");
    println!("E~(u) = E(u) ∩ D_q vanishes or grows by the type (weight, distinct):");
    let f7 = Field::new(7, 1).unwrap();
    let w = |codes: [u16; 3]| Vec3::from_codes(&f7, codes).unwrap();
    for u in [
        w([0, 0, 1]),
        w([0, 1, 1]),
        w([0, 1, 3]),
        w([1, 1, 1]),
        w([1, 1, 2]),
        w([1, 2, 3]),
    ] {
        let measured = restricted_extended_ball(&f7, u).len();
        let formula = restricted_extended_ball_formula(&f7, u);
        println!(
            "  ({}) type ({},{}) -> |E~| = {measured} (formula {formula})",
            u.display(&f7),
            u.weight(),
            u.distinct_coords()
        );
        assert_eq!(measured, formula);
    }
    println!("\nthe three nonzero cases are (q-1)(q-3), (q-1)(2q-6), (q-1)(3q-11)");
}
