//! Finite field construction and arithmetic.
//!
//! Run with: cargo run --example field_arithmetic

use extball::gf::{poly_to_string, Elem, Field};

fn main() {
    println!("=== Prime field GF(5) ===\n");
    let f5 = Field::new(5, 1).unwrap();
    println!("{f5}");
    println!("xi = {} (smallest primitive root)", f5.format_elem(f5.xi()));
    print!("powers of xi:");
    for e in 0..4 {
        print!(" xi^{e} = {}", f5.xi_pow(e).code());
    }
    println!();
    println!("dlog(4) = {}", f5.dlog(f5.elem(4).unwrap()).unwrap());
    let (two, three) = (f5.elem(2).unwrap(), f5.elem(3).unwrap());
    println!(
        "2 * 3 = {} and 2^-1 = {}",
        f5.mul(two, three).code(),
        f5.inv(two).unwrap().code()
    );
    println!();

    println!("=== Extension field GF(8) ===\n");
    let f8 = Field::new(2, 3).unwrap();
    println!("{f8}");
    println!("elements are codes c0 + 2*c1 + 4*c2 for c0 + c1*x + c2*x^2");
    // the modulus ties x^3 back to x + 1
    let xi3 = f8.xi_pow(3);
    println!(
        "xi^3 = {} = xi + 1? {}",
        f8.format_elem(xi3),
        xi3 == f8.add(f8.xi(), Elem::ONE)
    );
    println!("inverses: xi^a * xi^(7-a) = 1 for a = 1..6:");
    for a in 1..=6 {
        let prod = f8.mul(f8.xi_pow(a), f8.xi_pow(7 - a));
        print!(" {}", prod.code());
    }
    println!();
    println!();

    println!("=== Generators ===\n");
    for q in [2u16, 4, 5, 7, 8, 9, 13] {
        let f = Field::of_order(q).unwrap();
        let prim: Vec<String> = f
            .primitive_elements()
            .iter()
            .map(|&g| f.format_elem(g))
            .collect();
        println!(
            "GF({q}): {} primitive elements: {}",
            prim.len(),
            prim.join(", ")
        );
    }
    println!();

    println!("=== Custom modulus ===\n");
    let alt = Field::with_poly(2, 3, &[1, 0, 1, 1]).unwrap(); // x^3 + x^2 + 1
    println!("GF(8) with modulus {}", poly_to_string(alt.modulus()));
    println!("xi^3 = {} there instead", alt.format_elem(alt.xi_pow(3)));
    match Field::with_poly(2, 2, &[1, 0, 1]) {
        Err(e) => println!("x^2+1 over GF(2) is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
