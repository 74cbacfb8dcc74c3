// Bounded scans of the two equations the descent bottoms out in:
// `11x² + 1 = yⁿ` and `x² + 11 = yⁿ`.
//
//     cargo run --release --example base_equations

use std::error::Error;

use dioph11::oracle::{cohn_base_scan, nagell_scan};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let nagell = nagell_scan(100_000, 25);
    println!("11x^2 + 1 = y^n, x <= 100000, odd n <= 25: {} hit(s)", nagell.len());
    for h in cohn_base_scan(100_000, 20) {
        println!("{}^2 + 11 = {}^{}", h.x, h.y, h.n);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
