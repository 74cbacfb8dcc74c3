// The residue arguments: parity modulo 8, the `n = 4` factorization modulo
// 11 and the generic feasibility filter.
//
//     cargo run --example modular_sieves

use std::error::Error;

use dioph11::arith::squares_mod;
use dioph11::sieve::{feasible_mod, mod8_parity, n4_excluded, odd_x_excluded, Sides};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("squares mod 11: {:?}", squares_mod(11)?);
    println!("odd x excluded for (3, 3): {}", odd_x_excluded(3, 3)?);
    println!("{:?}", mod8_parity(3, 3)?.witness);
    println!("{:?}", n4_excluded(1).witness);
    for q in [8, 11, 16, 24] {
        let sides = if q % 2 == 0 { Sides::X_ODD_Y_EVEN } else { Sides::NONE };
        println!("q = {q}: feasible(m = 3, n = 3) = {}", feasible_mod(q, 3, 3, sides)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
