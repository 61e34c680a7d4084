//! Hankel windows larger than r + 2 are singular.
//!
//!     cargo run --example zero_windows

use hyperfib::cassini::{build_window, zero_det_check};
use hyperfib::DetMethod;

fn main() {
    let w = build_window(5, -2, 2);
    println!("M^(5,-2,2) =\n{}", w.matrix);
    println!("det = {}\n", w.matrix.det(DetMethod::Bareiss).unwrap());

    for r in 0..=4u32 {
        let sizes: Vec<String> = (1..=r as usize + 5)
            .map(|m| build_window(m, 3, r).matrix.det(DetMethod::Bareiss).unwrap().to_string())
            .collect();
        println!("r={r}, n=3, det for m = 1..{}: {}", r + 5, sizes.join(" "));
    }

    match zero_det_check(3, 0, 1) {
        Ok(d) => println!("unexpected {d}"),
        Err(e) => println!("\nzero_det_check(3, 0, 1): {e}"),
    }
}
