use std::sync::Arc;

use minaff::gammaposet::{gamma_set, psi_node, reachable_in, GammaNode};
use minaff::liealgebra::{
    build_realization, build_realization_scaled, c_coefficient, d_coefficient, PsiModule,
};
use minaff::projchar::Engine;
use minaff::{RootSystem, Weight};
use num_rational::Rational64;
use proptest::prelude::*;

const TYPES: [&str; 6] = ["B3", "B4", "C3", "C4", "D4", "D5"];

fn rs(t: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(t.parse().unwrap()))
}

/// A type, a node with nonempty Ψ_i and a dominant weight with coordinates ≤ 2.
fn case() -> impl Strategy<Value = (&'static str, usize, Vec<i32>)> {
    (
        0..TYPES.len(),
        1usize..=4,
        prop::collection::vec(0..=2i32, 5),
    )
        .prop_filter_map("empty Ψ", |(k, i, c)| {
            let t = TYPES[k];
            let r = rs(t);
            let n = r.rank();
            if i > n || psi_node(i, &r).unwrap().is_empty() {
                return None;
            }
            Some((t, i, c[..n].to_vec()))
        })
}

fn nonzero_rational() -> impl Strategy<Value = Rational64> {
    (prop_oneof![-5i64..=-1, 1i64..=5], 1i64..=4).prop_map(|(a, b)| Rational64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // c and d do not depend on the normalization of the root vectors
    #[test]
    fn kernels_ignore_scaling(
        (t, i, c) in case(),
        gen_scales in prop::collection::vec(nonzero_rational(), 5),
        basis_scales in prop::collection::vec(nonzero_rational(), 10),
    ) {
        let r = rs(t);
        let n = r.rank();
        let lambda = Weight::new(c);
        let psi = psi_node(i, &r).unwrap();
        let plain = PsiModule::new(&build_realization(&r), &psi, &r).unwrap();
        let scaled_real = build_realization_scaled(&r, &gen_scales[..n]);
        let scaled = PsiModule::with_scaling(&scaled_real, &psi, &r, &basis_scales[..psi.len()]).unwrap();
        let gamma = gamma_set(&lambda, &psi, &r).unwrap();
        for g in gamma.nodes() {
            let s = g.grade as usize;
            prop_assert_eq!(
                c_coefficient(&lambda, &g.mu, s, &plain, &r).unwrap(),
                c_coefficient(&lambda, &g.mu, s, &scaled, &r).unwrap()
            );
            prop_assert_eq!(
                d_coefficient(&lambda, &g.mu, s, &plain, &r).unwrap(),
                d_coefficient(&lambda, &g.mu, s, &scaled, &r).unwrap()
            );
        }
    }

    // at t = 1: Σ (−1)^s c^λ_{ν,s} dim P(ν,0) = dim V(λ)
    #[test]
    fn alternating_dimensions((t, i, c) in case()) {
        let r = rs(t);
        let engine = Engine::new(r.clone());
        let lambda = Weight::new(c);
        let psi = psi_node(i, &r).unwrap();
        let mut total: i128 = 0;
        for (g, c) in engine.c_table(&lambda, &psi).unwrap().iter() {
            let p = engine.projective_character(&g.mu, &psi).unwrap();
            let sign = if g.grade % 2 == 0 { 1 } else { -1 };
            total += sign * *c as i128 * p.dim_at_one(engine.ring());
        }
        prop_assert_eq!(total, engine.ring().weyl_dim(&lambda) as i128);
    }

    // the part of Γ(λ,Ψ) above (μ,r) is Γ(μ,Ψ) shifted by r
    #[test]
    fn upper_sets_are_shifted_posets((t, i, c) in case()) {
        let r = rs(t);
        let lambda = Weight::new(c);
        let psi = psi_node(i, &r).unwrap();
        let gamma = gamma_set(&lambda, &psi, &r).unwrap();
        for g in gamma.nodes() {
            let mut up = reachable_in(&gamma, g, &r).unwrap();
            let mut shifted: Vec<GammaNode> = gamma_set(&g.mu, &psi, &r)
                .unwrap()
                .nodes()
                .iter()
                .map(|h| GammaNode::new(h.mu.clone(), h.grade + g.grade))
                .collect();
            up.sort();
            shifted.sort();
            prop_assert_eq!(up, shifted);
        }
    }

    // graded layers of P(λ,0) are actual characters and degree 0 is V(λ)
    #[test]
    fn projective_layers((t, i, c) in case()) {
        let r = rs(t);
        let engine = Engine::new(r.clone());
        let lambda = Weight::new(c);
        let psi = psi_node(i, &r).unwrap();
        let p = engine.projective_character(&lambda, &psi).unwrap();
        prop_assert_eq!(p.graded.layer(0), minaff::DominantCharacter::simple(lambda.clone()));
        for (_, layer) in p.graded.layers() {
            prop_assert!(layer.is_actual());
        }
    }
}
