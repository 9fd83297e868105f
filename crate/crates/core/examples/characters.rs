//! Weyl characters, tensor products and exterior/symmetric powers.
//!
//!     cargo run --example characters -- C3 1,0,0

use std::sync::Arc;

use minaff::{CharRing, DominantCharacter, RootSystem, Weight};

fn main() -> minaff::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = Arc::new(RootSystem::new(
        args.next().unwrap_or_else(|| "B3".into()).parse()?,
    ));
    let lambda: Weight = args.next().unwrap_or_else(|| "1,0,0".into()).parse()?;
    let ring = CharRing::new(rs.clone());

    let ch = ring.simple_character(&lambda)?;
    println!(
        "V({lambda}): dim {} ({} weights)",
        ring.weyl_dim(&lambda),
        ch.num_weights()
    );
    for (w, m) in ch.dominant().iter().rev() {
        println!("  dominant ({w})  mult {m}");
    }

    let v = DominantCharacter::simple(lambda.clone());
    println!("V ⊗ V = {}", ring.product(&v, &v)?);
    for s in 2..=3 {
        println!("⋀^{s} V = {}", ring.exterior_power(&v, s)?);
        println!("S^{s} V = {}", ring.symmetric_power(&v, s)?);
    }
    let adj = ring.adjoint();
    println!("adjoint = {adj}, dim {}", ring.dim(&adj));
    Ok(())
}
