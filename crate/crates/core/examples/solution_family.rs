// Generates, certifies and identifies members of the solution family.
//
//     cargo run --example solution_family

use std::error::Error;

use dioph11::family::{certify, identify, member};
use dioph11::Solution;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for index in 0..4 {
        let s = member(index);
        println!("M = {index}: {s} -> {:?}", certify(&s));
        assert_eq!(identify(&s)?, Some(index));
    }
    let big = member(200);
    println!("M = 200: x has {} bits, certified: {}", big.x.bits(), certify(&big).is_certified());

    let base = Solution::new(58u32, 15u32, 1, 3);
    println!("{base} -> {:?}, index {:?}", certify(&base), identify(&base)?);
    let wrong = Solution::new(9324u32, 443u32, 3, 4);
    println!("{wrong} -> {:?}", certify(&wrong));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
