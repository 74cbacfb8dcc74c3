// The imaginary-part equations of the coprime case and the auxiliary
// equation `3a² + 8 = 11^{2k+1}`.
//
//     cargo run --release --example auxiliary_equations

use std::error::Error;

use dioph11::cases::{
    b_pm11lambda_branch, b_pm1_branch, eq5_p3_closed_form, eq5_search, search_3a2_plus_8,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for p in [3, 5, 7] {
        for k in 1..=3 {
            let roots = eq5_search(p, k, 2_000)?;
            println!("p = {p}, k = {k}: {} root(s) with |a| <= 2000", roots.len());
        }
    }
    println!("p = 3 closed form, k = 1..=10 all empty: {}", (1..=10).all(|k| eq5_p3_closed_form(k).is_empty()));

    println!("{}", b_pm1_branch(2, 10_000)?);
    println!("{}", b_pm11lambda_branch(3, 1)?);
    println!("{:?}", b_pm11lambda_branch(1, 1)?.witness);

    let report = search_3a2_plus_8(50)?;
    for s in &report.solutions {
        println!("3*{}^2 + 8 = 11^{}", s.a, 2 * s.k + 1);
    }
    println!("(11^(2k+1) + 8) mod 3 takes values {:?}", report.plus_sign_mod_3);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
