//! How two balls intersect, and the rho parameter that measures how the
//! restricted extended balls of a pair overlap.
//!
//! Run with: cargo run --example ball_intersections

use extball::gf::Field;
use extball::hamming::{hamming_distance, restricted_extended_ball, Vec3};
use extball::intersections::{ball_intersection, restricted_extended_intersection_size, rho};

fn main() {
    let f = Field::new(5, 1).unwrap();
    let v = |codes: [u16; 3]| Vec3::from_codes(&f, codes).unwrap();

    println!("=== B(u) ∩ B(v) by distance ===\n");
    let u = v([1, 2, 3]);
    for w in [v([1, 2, 3]), v([1, 2, 4]), v([1, 4, 4]), v([4, 4, 4])] {
        let cap = ball_intersection(&f, u, w).unwrap();
        println!(
            "d(u,v) = {}: |B ∩ B| = {:2}  {}",
            hamming_distance(u, w).unwrap(),
            cap.len(),
            if cap.len() <= 5 {
                cap.display(&f)
            } else {
                "(the whole ball)".into()
            },
        );
    }
    println!("\ndistance 0 keeps the ball, 1 leaves a q-point line, 2 leaves two");
    println!("cross points, 3 leaves nothing");

    println!("\n=== rho over GF(5) ===\n");
    println!("|E~(u) ∩ E~(v)| = rho(u,v) * (q-1), with rho summing the");
    println!("restricted ball intersections B~(u) ∩ B~(mu v) over scalars mu.\n");
    let pairs = [
        ([1u16, 4, 2], [1u16, 3, 4]),
        ([1, 2, 4], [1, 4, 2]),
        ([1, 0, 2], [1, 2, 3]),
    ];
    for (uc, vc) in pairs {
        let (a, b) = (v(uc), v(vc));
        let r = rho(&f, a, b).unwrap();
        println!(
            "u = ({}), v = ({}): rho = {}",
            a.display(&f),
            b.display(&f),
            r.value()
        );
        for (mu, pts) in r.witnesses() {
            let pts: Vec<String> = pts.iter().map(|p| format!("({})", p.display(&f))).collect();
            println!("  mu = {}: {}", f.format_elem(*mu), pts.join(", "));
        }
        let size = restricted_extended_intersection_size(&f, a, b).unwrap();
        let brute =
            restricted_extended_ball(&f, a).intersection_len(&restricted_extended_ball(&f, b));
        println!("  |E~ ∩ E~| = {size} (enumeration agrees: {brute})\n");
    }

    println!("=== A disjoint pair over GF(7) ===\n");
    let f7 = Field::new(7, 1).unwrap();
    let a = Vec3::from_codes(&f7, [1, 2, 4]).unwrap();
    let b = Vec3::from_codes(&f7, [1, 4, 2]).unwrap();
    println!(
        "rho((1,2,4),(1,4,2)) = {} over GF(7): the swapped-exponent pattern",
        rho(&f7, a, b).unwrap().value()
    );
    println!("with 2a = b and 2b = a in Z_6 makes the restricted balls miss D_7");

    println!("\n=== A mixed-type pair over GF(11) ===\n");
    let f11 = Field::new(11, 1).unwrap();
    let a = Vec3::from_codes(&f11, [2, 0, 5]).unwrap();
    let b = Vec3::from_codes(&f11, [6, 7, 9]).unwrap();
    let r = rho(&f11, a, b).unwrap();
    println!("rho((2,0,5),(6,7,9)) = {}", r.value());
    for (mu, pts) in r.witnesses() {
        let pts: Vec<String> = pts
            .iter()
            .map(|p| format!("({})", p.display(&f11)))
            .collect();
        println!("  mu = {}: {}", f11.format_elem(*mu), pts.join(", "));
    }
}
