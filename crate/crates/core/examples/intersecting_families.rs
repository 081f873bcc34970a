//! t-intersecting families of extended balls and the theta parameter.
//!
//! Run with: cargo run --example intersecting_families

use extball::gf::Field;
use extball::intersections::{family_e, family_g, family_h, rho_min, theta_e_formula};

fn main() {
    println!("=== theta over the core family E = {{E~(u) : u in D_q}} ===\n");
    println!("theta is the largest t with every pair of members sharing >= t points.\n");
    for q in [4u16, 5, 7, 8, 9, 11, 13] {
        let f = Field::of_order(q).unwrap();
        let fam = family_e(&f).unwrap();
        let theta = fam.theta().unwrap();
        println!(
            "q = {q:2}: theta(E) = {theta:2} over {:4} members  (closed form {:2}, q-1 {} 0 mod 3)",
            fam.len(),
            theta_e_formula(q),
            if (q - 1) % 3 == 0 { "=" } else { "!=" },
        );
        assert_eq!(theta, theta_e_formula(q));
    }
    println!("\ntheta(E) = 2(q-1) exactly when 3 does not divide q-1, else 0.");

    println!("\n=== rho(q): the minimum pair overlap, normalized ===\n");
    for q in [4u16, 5, 7, 8, 9, 11] {
        let f = Field::of_order(q).unwrap();
        println!("rho({q}) = {}", rho_min(&f).unwrap());
    }

    println!("\n=== The bigger families H and G ===\n");
    let f = Field::new(5, 1).unwrap();
    let h = family_h(&f).unwrap();
    println!(
        "H = {{E~(u) : u != 0}} has {} members; theta(H) = {} (weight-1 vectors have empty E~)",
        h.len(),
        h.theta().unwrap()
    );
    let g = family_g(&f).unwrap();
    println!(
        "G = {{E(u) : all u}} has {} members; theta(G) = {} = 3q-2 (B(0) is in every member)",
        g.len(),
        g.theta().unwrap()
    );

    println!("\n=== Weak delta systems and the intersection structure ===\n");
    let e5 = family_e(&f).unwrap();
    match e5.weak_delta_lambda().unwrap() {
        Some(lambda) => println!("E over GF(5) is a weak delta system with lambda = {lambda}"),
        None => println!("E over GF(5) is not a weak delta system: pair sizes vary"),
    }
    let structure = e5.intersection_structure().unwrap();
    let mut sizes: Vec<usize> = structure.iter().map(|s| s.len()).collect();
    sizes.sort();
    sizes.dedup();
    println!("distinct intersection sizes in I(E): {sizes:?}");
    println!("the smallest is theta(E) = {}", e5.theta().unwrap());
}
