// Runs the full case analysis for a few `(m, n)` and prints what closes
// each branch.
//
//     cargo run --example solve_case_analysis

use std::error::Error;

use dioph11::cases::solve;
use dioph11::SearchBounds;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let bounds = SearchBounds { a_max: 1_000, x_max: 1_000, ..Default::default() };
    for (m, n) in [(3, 3), (5, 3), (3, 4), (7, 3), (9, 6)] {
        let r = solve(m, n, &bounds)?;
        println!("m = {m}, n = {n}: {} solution(s)", r.solutions.len());
        for s in &r.solutions {
            assert!(s.holds());
            println!("  solution {s}");
        }
        for t in &r.traces {
            println!("  {t}");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
