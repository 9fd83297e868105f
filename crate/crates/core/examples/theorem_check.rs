//! Checks Σ (−t)^s c^λ_{ν,s} ch_t P(ν,0)^{Γ(ν,Ψ)} = ch V(λ) and A(t)E(−t) = Id
//! for every λ with coordinates ≤ 2 and i_λ ≤ 3.
//!
//!     cargo run --release --example theorem_check -- D4

use std::sync::Arc;

use minaff::gammaposet::psi_from_xi;
use minaff::projchar::Engine;
use minaff::{RootSystem, Weight};

fn main() -> minaff::Result<()> {
    let rs = Arc::new(RootSystem::new(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "B4".into())
            .parse()?,
    ));
    let n = rs.rank();
    let engine = Engine::new(rs.clone());
    let (mut total, mut failed) = (0, 0);
    for code in 0..3usize.pow(3.min(n) as u32) {
        let mut c = vec![0; n];
        let mut x = code;
        for slot in c.iter_mut().take(3) {
            *slot = (x % 3) as i32;
            x /= 3;
        }
        let lambda = Weight::new(c);
        let Some(top) = lambda.top_node() else {
            continue;
        };
        let psi = psi_from_xi(&Weight::fundamental(n, top), &rs)?;
        let residual = engine.verify_thm2(&lambda, &psi)?;
        let (a, e) = engine.gamma_matrices(&lambda, &psi)?;
        let ok = residual.is_zero() && a.mul(&e.at_neg_t()).is_identity();
        total += 1;
        if !ok {
            failed += 1;
            println!("FAIL λ=({lambda}): residual {residual}");
        }
    }
    println!("{total} weights checked, {failed} failures");
    Ok(())
}
