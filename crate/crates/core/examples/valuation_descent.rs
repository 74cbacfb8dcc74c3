// 11-adic descent for `x` divisible by 11.
//
//     cargo run --example valuation_descent

use std::error::Error;

use dioph11::arith::pow11;
use dioph11::cases::descend_11;
use dioph11::family::member;
use dioph11::Nat;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s = member(1);
    let d = descend_11(&s.x, s.m, s.n)?;
    println!("{s}: u = {}, v = {:?}, subcase {:?}, reduced {:?}", d.u, d.v, d.subcase, d.reduced);

    let lifted = Nat::from(4u32) * pow11(3);
    let d = descend_11(&lifted, 7, 3)?;
    println!("x = {lifted}, m = 7: subcase {:?}, reduced {:?}", d.subcase, d.reduced);

    let deep = Nat::from(5u32) * pow11(4);
    let d = descend_11(&deep, 5, 5)?;
    println!("x = {deep}, m = 5, n = 5: subcase {:?}, reduced {:?}", d.subcase, d.reduced);

    if let Err(e) = descend_11(&Nat::from(9324u32), 3, 3) {
        println!("x = 9324: {e}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
