//! Generalized Cassini determinants det(A_{r,n}) against the sign formula,
//! plus the 2x2 case and the first-generation lemmas.
//!
//!     cargo run --example cassini

use hyperfib::cassini::{cassini_det, classical_cassini, shifted_fib_det, sign_sweep};

fn main() {
    print!("{:>4}", "r\\n");
    for n in -4..=6 {
        print!("{n:>4}");
    }
    println!();
    for r in 0..=6 {
        print!("{r:>4}");
        for n in -4..=6 {
            print!("{:>4}", cassini_det(r, n).to_string());
        }
        println!();
    }

    let report = sign_sweep((1, 8), (-10, 50)).unwrap();
    println!(
        "\nsign formula: {} cases, {} mismatches",
        report.cases.len(),
        report.failures().count()
    );

    // The classical identity is (-1)^n; the 2x2 window starting at F_n is (-1)^(n+1).
    for n in 1..=5 {
        println!(
            "n={n}: F_(n-1)F_(n+1) - F_n^2 = {:>2}, det A_0,n = {:>2}, shifted 3x3 = {:>2}",
            classical_cassini(n).to_string(),
            cassini_det(0, n).to_string(),
            shifted_fib_det(n).unwrap().to_string()
        );
    }
}
