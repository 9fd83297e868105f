//! The coefficients c^λ_{ν,s} on every weight of ⋀ n⁻_Ψ, with weight-space
//! dimensions, compared against the shipped tables when one applies.
//!
//!     cargo run --release --example coefficients -- B5 1,1,1,1,0

use std::sync::Arc;

use minaff::cli::render_offset;
use minaff::gammaposet::psi_node;
use minaff::jacobitrudi::JacobiTrudi;
use minaff::liealgebra::weight_space_profile;
use minaff::projchar::Engine;
use minaff::{RootSystem, Weight};

fn main() -> minaff::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = Arc::new(RootSystem::new(
        args.next().unwrap_or_else(|| "B5".into()).parse()?,
    ));
    let lambda: Weight = args.next().unwrap_or_else(|| "1,1,1,1,0".into()).parse()?;
    let engine = Engine::new(rs.clone());
    let i = lambda.top_node().expect("λ ≠ 0");
    let psi = psi_node(i, &rs)?;
    let module = engine.module(&psi)?;

    let profile = weight_space_profile(&module, &rs);
    let dims = |d: usize| profile.values().filter(|&&k| k == d).count();
    println!(
        "|Ψ_{i}| = {}, {} weights in ⋀ n⁻_Ψ ({} of dim 2, {} of dim 3)",
        psi.len(),
        profile.len(),
        dims(2),
        dims(3)
    );

    for (g, c) in engine.c_table(&lambda, &psi)?.iter() {
        let off: Vec<i32> =
            g.mu.coords()
                .iter()
                .zip(lambda.coords())
                .map(|(a, b)| a - b)
                .collect();
        println!("  ({}, {})  {c}", render_offset(&off), g.grade);
    }

    let jt = JacobiTrudi::new(&engine);
    match jt.compare_golden(&lambda)? {
        Some(m) if m.is_empty() => println!("matches the shipped table"),
        Some(m) => println!("{} entries differ from the shipped table: {m:?}", m.len()),
        None => println!("no shipped table for this type and i_λ"),
    }
    Ok(())
}
