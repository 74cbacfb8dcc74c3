// Arithmetic in the ring of integers of Q(√−11).
//
//     cargo run --example quadratic_ring

use std::error::Error;

use dioph11::ring::{imag_of_odd_power, QuadInt};
use dioph11::Int;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alpha = QuadInt::make(21, 11)?;
    let cube = alpha.pow(3);
    println!("alpha = {alpha}, norm {}", alpha.norm());
    println!("alpha^3 = {cube}, norm {}", cube.norm());
    assert_eq!(cube.norm(), alpha.norm().pow(3));

    let half = QuadInt::make(1, 1)?;
    println!("{half} squared = {}", &half * &half);

    let (a, b) = (Int::from(21), Int::from(11));
    println!("imaginary part of (21 + 11√-11)^3 = {}", imag_of_odd_power(&a, &b, 3)?);

    if let Err(e) = QuadInt::make(1, 2) {
        println!("make(1, 2) rejected: {e}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
