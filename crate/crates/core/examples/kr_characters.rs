//! Graded Kirillov-Reshetikhin characters P(mω_i, 0)^Γ and their dimensions.
//!
//!     cargo run --release --example kr_characters -- B3 2 3

use std::sync::Arc;

use minaff::projchar::Engine;
use minaff::RootSystem;

fn main() -> minaff::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = Arc::new(RootSystem::new(
        args.next().unwrap_or_else(|| "B3".into()).parse()?,
    ));
    let i: usize = args.next().map(|s| s.parse().expect("node")).unwrap_or(2);
    let max_m: u32 = args.next().map(|s| s.parse().expect("level")).unwrap_or(3);
    let engine = Engine::new(rs.clone());
    for m in 1..=max_m {
        let p = engine.kr_character(i, m)?;
        println!("KR({i},{m}) = {}", p.graded);
        println!("  dim at t=1: {}", p.dim_at_one(engine.ring()));
    }
    Ok(())
}
