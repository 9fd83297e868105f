//! Jacobi-Trudi determinants, the alternating identity for h_λ, the stable
//! formula and the Koike-Terada calibration.
//!
//!     cargo run --release --example jacobi_trudi -- C4 1,1,1,0

use std::sync::Arc;

use minaff::jacobitrudi::{JacobiTrudi, Mode};
use minaff::projchar::Engine;
use minaff::{RootSystem, Weight};

fn main() -> minaff::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = Arc::new(RootSystem::new(
        args.next().unwrap_or_else(|| "B4".into()).parse()?,
    ));
    let lambda: Weight = args.next().unwrap_or_else(|| "1,1,1,0".into()).parse()?;
    let engine = Engine::new(rs.clone());
    let jt = JacobiTrudi::new(&engine);

    println!("h_λ = {}", jt.jt_symbolic(&lambda)?);
    println!("    = {}", jt.jt_concrete(&lambda)?);
    let r = jt.verify_conjecture(&lambda, Mode::Concrete)?;
    println!("Σ (−1)^s c h_ν − ch V(λ) = {r}");

    for rec in jt.calibrate()? {
        println!(
            "Koike-Terada at i_λ = {}: {} over {} weights",
            rec.i_lambda,
            if rec.passed { "agrees" } else { "disagrees" },
            rec.tested.len()
        );
    }
    match jt.verify_conjecture(&lambda, Mode::Symbolic) {
        Ok(r) => println!("symbolic residual: {r}"),
        Err(e) => println!("symbolic route unavailable: {e}"),
    }

    let big = Weight::new(
        lambda
            .coords()
            .iter()
            .map(|&x| if x > 0 { 2 * x } else { 0 })
            .collect(),
    );
    match jt.stable_formula_check(&big) {
        Ok(r) => println!("stable formula at ({big}): residual {r}"),
        Err(e) => println!("stable formula at ({big}): {e}"),
    }
    Ok(())
}
