//! Characteristic polynomials of Q_{r+2} and their factorization over the
//! integers as (x^2 - x - 1)(x - 1)^r.
//!
//!     cargo run --example char_poly

use hyperfib::qmatrix::build_q;
use hyperfib::Polynomial;

fn main() {
    let golden = Polynomial::from_i64(&[-1, -1, 1]);
    for r in 0..=8 {
        let p = build_q(r).matrix.char_poly().unwrap();
        let (quot, rem) = p.div_rem_monic(&golden).unwrap();
        let (_, rem2) = quot.div_rem_monic(&Polynomial::linear(1).pow(r)).unwrap();
        println!(
            "r={r}: {p}   (x^2 - x - 1) divides: {}, quotient = (x - 1)^{r}: {}",
            rem.is_zero(),
            rem2.is_zero() && quot.degree() == Some(r as usize)
        );
    }
}
