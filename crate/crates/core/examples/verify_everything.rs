//! Run the whole verification suite from the library API.
//!
//! Run with: cargo run --release --example verify_everything

use extball::report::reproduce_paper;

fn main() {
    let report = reproduce_paper(2, 13, 2).expect("supported range");
    print!("{}", report.to_text());
    let (pass, fail, skipped) = report.tally();
    println!("\nsummary: {pass} passed, {fail} failed, {skipped} skipped");
    if !report.all_pass() {
        std::process::exit(1);
    }
}
