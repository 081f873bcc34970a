//! Counting lower bounds on c(q) and the exhaustive search for small q.
//!
//! Run with: cargo run --release --example lower_bounds_and_search

use extball::covering::{
    bounds_table, counting_lower_bound, exhaustive_c, CoveringCertificate, SearchOptions,
};
use extball::gf::Field;

fn main() {
    println!("=== Counting certificates: c(7) >= 5, c(8) >= 6, c(9) >= 6 ===\n");
    for q in [7u16, 8, 9] {
        let f = Field::of_order(q).unwrap();
        let cert = counting_lower_bound(&f).unwrap();
        let CoveringCertificate::CountingLowerBound {
            bound,
            chains,
            verified,
            ..
        } = &cert
        else {
            unreachable!()
        };
        println!("q = {q}: c({q}) >= {bound} (verified: {verified})");
        for chain in chains {
            let budgets: Vec<String> = chain
                .slots
                .iter()
                .map(|s| format!("{}:{}", s.pattern, s.budget))
                .collect();
            match &chain.discount {
                None => println!(
                    "  {}: {} => total {} < |D_{q}| = {}",
                    chain.shape,
                    budgets.join(" "),
                    chain.total,
                    chain.dq
                ),
                Some(d) => {
                    println!(
                        "  {}: {} => total {} (not yet below {})",
                        chain.shape,
                        budgets.join(" "),
                        chain.total,
                        chain.dq
                    );
                    println!(
                        "     a free slot outside D_{q} caps at {}: total {} < {}",
                        d.non_dq_budget, d.fallback_total, chain.dq
                    );
                    println!(
                        "     otherwise the two free slots overlap in >= {} points: {} < {}",
                        d.pair_lower_bound, d.adjusted_total, chain.dq
                    );
                }
            }
        }
        println!();
    }

    println!("=== Exhaustive values for small q ===\n");
    for q in [2u16, 3, 4, 5] {
        let f = Field::of_order(q).unwrap();
        let cert = exhaustive_c(&f, &SearchOptions::default()).unwrap();
        let CoveringCertificate::ExhaustiveSearch {
            value,
            cover,
            levels,
            ..
        } = &cert
        else {
            unreachable!()
        };
        let cover: Vec<String> = cover
            .iter()
            .map(|v| format!("({})", v.display(&f)))
            .collect();
        let nodes: u64 = levels.iter().map(|l| l.nodes).sum();
        println!(
            "c({q}) = {value}  via {} search nodes; cover {}",
            nodes,
            cover.join(" ")
        );
    }

    println!("\n=== q = 7: shapes close m = 4, search finds m = 5 ===\n");
    let f7 = Field::of_order(7).unwrap();
    let cert = exhaustive_c(&f7, &SearchOptions::default()).unwrap();
    if let CoveringCertificate::ExhaustiveSearch { value, levels, .. } = &cert {
        println!("c(7) = {value}");
        for l in levels {
            println!(
                "  m = {}: {} ({} nodes{})",
                l.m,
                if l.found { "cover found" } else { "no cover" },
                l.nodes,
                if l.shape_constrained {
                    ", necessary-shape enumeration"
                } else {
                    ""
                }
            );
        }
    }

    println!("\n=== The bounds table ===\n");
    let qs: Vec<u16> = [2u16, 3, 4, 5, 7, 8, 9, 11, 13, 16].to_vec();
    println!("{:>3}  {:>5}  {:>5}  source", "q", "lower", "upper");
    for row in bounds_table(&qs).unwrap() {
        println!(
            "{:>3}  {:>5}  {:>5}  {}",
            row.q, row.lower, row.upper, row.source
        );
    }
}
