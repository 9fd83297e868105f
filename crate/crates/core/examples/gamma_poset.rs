//! The poset Γ(λ, Ψ): nodes, covers, interval closure and rigidity of Ψ.
//!
//!     cargo run --example gamma_poset -- B3 0,2,0 2 > gamma.dot

use minaff::gammaposet::{gamma_set, is_interval_closed, psi_node, rigidity_check};
use minaff::{RootSystem, Weight};

fn main() -> minaff::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::new(args.next().unwrap_or_else(|| "B3".into()).parse()?);
    let lambda: Weight = args.next().unwrap_or_else(|| "0,2,0".into()).parse()?;
    let node: usize = args
        .next()
        .map(|s| s.parse().expect("node index"))
        .unwrap_or(2);

    let psi = psi_node(node, &rs)?;
    let gamma = gamma_set(&lambda, &psi, &rs)?;
    eprintln!(
        "|Γ| = {}, covers = {}, max grade = {}",
        gamma.len(),
        gamma.covers().len(),
        gamma.max_grade()
    );
    eprintln!("interval closed: {}", is_interval_closed(&gamma, &rs)?);
    let rigid = rigidity_check(&psi, &rs, 4);
    eprintln!(
        "rigid up to 4 summands: {} ({} sums checked)",
        rigid.holds, rigid.checked
    );
    print!("{}", gamma.to_dot());
    Ok(())
}
