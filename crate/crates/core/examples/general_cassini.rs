//! The two-solution identity for arbitrary second-order recurrences.
//!
//!     cargo run --example general_cassini

use hyperfib::cassini::SecondOrderPair;
use hyperfib::verify::{random_pairs, DEFAULT_SEED};

fn main() {
    let fib_lucas = SecondOrderPair::new(1, 1, (0, 1), (2, 1));
    for m in 1..=6 {
        let (lhs, rhs) = fib_lucas.general_cassini(m).unwrap();
        println!("Fibonacci/Lucas m={m}: {lhs} = {rhs}");
    }

    let pairs = random_pairs(DEFAULT_SEED);
    let checked = pairs
        .iter()
        .flat_map(|p| (1..=50).map(move |m| p.general_cassini(m).unwrap()))
        .filter(|(l, r)| l == r)
        .count();
    println!("{checked} of {} random cases balance", pairs.len() * 50);
    let p = &pairs[0];
    let (lhs, _) = p.general_cassini(50).unwrap();
    println!(
        "e.g. alpha={} beta={} m=50: both sides = {lhs}",
        p.alpha, p.beta
    );
}
