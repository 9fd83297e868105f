//! Cartan matrix, positive roots, highest root and the sets Ψ_i of a classical type.
//!
//!     cargo run --example root_data -- B4

use minaff::gammaposet::{psi_closed_form, psi_node};
use minaff::{LieType, RootSystem};

fn main() -> minaff::Result<()> {
    let t: LieType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "B4".into())
        .parse()?;
    let rs = RootSystem::new(t);
    println!("{t}: {} positive roots", rs.positive_roots().len());
    println!("Cartan matrix (row i = α_j(h_i)):");
    for row in rs.cartan() {
        println!("  {row:?}");
    }
    println!(
        "θ = {} (ε-coefficients {:?})",
        rs.theta(),
        rs.epsilon_theta()
    );
    for i in 1..=rs.rank() {
        let psi = psi_node(i, &rs)?;
        let weights: Vec<String> = psi
            .roots()
            .iter()
            .map(|r| format!("({})", rs.root_to_weight(r)))
            .collect();
        print!("Ψ_{i}: {} roots {}", psi.len(), weights.join(" "));
        if i < t.jt_n() {
            let closed = psi_closed_form(i, &rs)?;
            let mut got: Vec<_> = psi.roots().iter().map(|r| rs.root_to_weight(r)).collect();
            got.sort();
            print!(
                "  closed form {}",
                if got == closed { "agrees" } else { "DISAGREES" }
            );
        }
        println!();
    }
    Ok(())
}
