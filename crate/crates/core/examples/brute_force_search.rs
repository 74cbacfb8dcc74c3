// Exhaustive search of `x² + 11^m = yⁿ` by iterating `y`, with a
// resumable checkpoint file.
//
//     cargo run --release --example brute_force_search

use std::error::Error;

use dioph11::family;
use dioph11::oracle::{brute_force, brute_force_resumable, Checkpoint};
use dioph11::SearchBounds;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let bounds = SearchBounds { y_max: 5_000, m_max: 7, n_max: 12, ..Default::default() };
    let hits = brute_force(&bounds);
    for s in &hits {
        let tag = match family::identify(s)? {
            Some(index) => format!("family member M = {index}"),
            None => "outside the 9324*11^(3M) family".to_owned(),
        };
        println!("{s}  {tag}");
    }

    let dir = std::env::temp_dir().join(format!("dioph11-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("cells.jsonl");
    let cp = Checkpoint::open(&path)?;
    let resumed = brute_force_resumable(&bounds, &cp)?;
    assert_eq!(resumed, hits);
    println!("{} cells checkpointed in {}", cp.completed()?.len(), path.display());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
