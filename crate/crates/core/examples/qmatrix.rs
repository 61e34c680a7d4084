//! Builds the companion matrix Q_4 and rebuilds A_{2,3} = Q_4^3 A_{2,0}.
//!
//!     cargo run --example qmatrix

use hyperfib::cassini::build_window;
use hyperfib::qmatrix::{advance, build_q, q_closed_tail, reconstruct};
use hyperfib::{HyperfibSequence, StateVector};

fn main() {
    let q = build_q(2);
    println!("Q_4 =\n{}\n", q.matrix);
    let (q_r, q_r1, q_r2) = q_closed_tail(2).unwrap();
    println!("closed-form tail (q_2, q_3, q_4) = ({q_r}, {q_r1}, {q_r2})\n");

    println!("A_2,0 =\n{}\n", build_window(4, 0, 2).matrix);
    println!("Q_4^3 A_2,0 =\n{}\n", reconstruct(2, 3));
    println!("Q_4^-3 A_2,0 =\n{}\n", reconstruct(2, -3));

    let seq = HyperfibSequence::new(2);
    let mut state = StateVector::at(&seq, -3);
    for _ in 0..6 {
        let values: Vec<String> = state.values.iter().map(ToString::to_string).collect();
        println!("state at n = {:>2}: ({})", state.n, values.join(", "));
        state = advance(&q, &state).unwrap();
    }

    for r in 0..=6 {
        let row: Vec<String> = build_q(r).q.iter().map(ToString::to_string).collect();
        println!("r = {r}: q = ({})", row.join(", "));
    }
}
