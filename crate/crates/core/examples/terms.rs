//! Hyperfibonacci terms by each evaluation strategy, including negative
//! indices.
//!
//!     cargo run --example terms

use hyperfib::sequences::{fibonacci, hyperfib, polytopic};
use hyperfib::{HyperfibSequence, Strategy};

fn main() {
    println!("F_10 = {}, F_-4 = {}", fibonacci(10), fibonacci(-4));
    println!("tetrahedral P_5^(3) = {}", polytopic(3, 5));

    for r in 0..=3 {
        let seq = HyperfibSequence::new(r);
        let from = -i64::from(r) - 2;
        let row: Vec<String> = seq.range(from, 10).iter().map(ToString::to_string).collect();
        println!("r={r}, n={from}..10: {}", row.join(" "));
    }

    for s in Strategy::ALL {
        println!("F_9^(2) via {s:<10} = {}", hyperfib(2, 9, s).unwrap());
    }
    match hyperfib(2, -3, Strategy::PrefixSum) {
        Ok(v) => println!("unexpected {v}"),
        Err(e) => println!("prefix sums at n = -3: {e}"),
    }
}
