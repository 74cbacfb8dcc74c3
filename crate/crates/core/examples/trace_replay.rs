// Emits elimination traces as JSON lines and replays them.
//
//     cargo run --example trace_replay

use std::error::Error;

use dioph11::cases::{replay, solve};
use dioph11::{EliminationTrace, SearchBounds};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let bounds = SearchBounds { a_max: 500, x_max: 500, ..Default::default() };
    let traces = solve(11, 9, &bounds)?.traces;
    let lines: Vec<String> = traces
        .iter()
        .map(serde_json::to_string)
        .collect::<Result<_, _>>()?;
    println!("{}", lines[0]);

    for line in &lines {
        let t: EliminationTrace = serde_json::from_str(line)?;
        replay(&t)?;
    }
    println!("{} traces replayed", lines.len());

    let mut forged = traces[0].clone();
    forged.witness.insert("lhs_mod_8".into(), "0".into());
    println!("forged trace: {}", replay(&forged).unwrap_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
