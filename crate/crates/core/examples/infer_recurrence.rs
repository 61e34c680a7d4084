//! Recovers the companion row from raw terms by solving the Hankel system,
//! independently of the back-substitution scheme.
//!
//!     cargo run --example infer_recurrence

use hyperfib::qmatrix::{build_q, infer_recurrence, integral_coefficients};
use hyperfib::HyperfibSequence;
use num_bigint::BigInt;

fn main() {
    for r in 0..=6u32 {
        let order = r as usize + 2;
        let terms = HyperfibSequence::new(r).range(0, 2 * order as i64 + 1);
        let inferred = infer_recurrence(&terms, order + 1).unwrap();
        let ints = integral_coefficients(&inferred).unwrap();
        let agree = ints == build_q(r).q;
        println!("r={r}: order {} {:?} (matches Q row: {agree})", ints.len(), to_strings(&ints));
    }

    let squares: Vec<BigInt> = (0..10).map(|n: i64| BigInt::from(n * n)).collect();
    let c = infer_recurrence(&squares, 4).unwrap();
    println!("squares: {:?}", c.iter().map(ToString::to_string).collect::<Vec<_>>());
}

fn to_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}
