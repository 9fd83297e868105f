//! Graded characters of the truncated projectives `P(λ, 0)^Γ`, KR characters,
//! the alternating identity relating them to `ch V(λ)`, and the matrices
//! `A(t)`, `E(t)` on `Γ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::charring::{CharRing, GradedCharacter};
use crate::error::{Error, Result};
use crate::gammaposet::{gamma_set, psi_node, GammaNode, GammaPoset, PsiSet};
use crate::liealgebra::{
    build_realization, c_coefficient, d_coefficient, MatrixRealization, PsiModule,
};
use crate::rootdata::{RootSystem, RootVec, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCharacter {
    pub base: GammaNode,
    pub psi: PsiSet,
    pub graded: GradedCharacter,
}

impl ProjectiveCharacter {
    pub fn dim_at_one(&self, ring: &CharRing) -> i128 {
        ring.dim(&self.graded.specialize())
    }
}

impl fmt::Display for ProjectiveCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graded)
    }
}

/// Polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    /// `c · t^k`.
    pub fn monomial(k: u32, c: i64) -> Self {
        let mut v = vec![0; k as usize + 1];
        v[k as usize] = c;
        Poly(v).trimmed()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut v = vec![0; self.0.len().max(o.0.len())];
        for (k, c) in self.0.iter().enumerate() {
            v[k] += c;
        }
        for (k, c) in o.0.iter().enumerate() {
            v[k] += c;
        }
        Poly(v).trimmed()
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; self.0.len() + o.0.len() - 1];
        for (a, x) in self.0.iter().enumerate() {
            for (b, y) in o.0.iter().enumerate() {
                v[a + b] += x * y;
            }
        }
        Poly(v).trimmed()
    }

    /// `p(−t)`.
    pub fn at_neg_t(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Square polynomial matrix indexed by the nodes of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaMatrix {
    pub node_order: Vec<GammaNode>,
    pub entries: Vec<Vec<Poly>>,
}

impl GammaMatrix {
    pub fn size(&self) -> usize {
        self.node_order.len()
    }

    pub fn mul(&self, o: &GammaMatrix) -> GammaMatrix {
        let n = self.size();
        let mut entries = vec![vec![Poly::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for k in 0..n {
                    let (a, b) = (&self.entries[i][k], &o.entries[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        *e = e.add(&a.mul(b));
                    }
                }
            }
        }
        GammaMatrix {
            node_order: self.node_order.clone(),
            entries,
        }
    }

    pub fn at_neg_t(&self) -> GammaMatrix {
        GammaMatrix {
            node_order: self.node_order.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(Poly::at_neg_t).collect())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, e)| {
                if i == j {
                    *e == Poly::one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Nonzero entries only on or below the diagonal, ones on it.
    pub fn is_unitriangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, r)| r[i] == Poly::one() && r[i + 1..].iter().all(Poly::is_zero))
    }

    /// First entry of `self − Id` that is nonzero.
    pub fn first_defect(&self) -> Option<(usize, usize, Poly)> {
        for (i, r) in self.entries.iter().enumerate() {
            for (j, e) in r.iter().enumerate() {
                let expected = if i == j { Poly::one() } else { Poly::zero() };
                if *e != expected {
                    return Some((i, j, e.clone()));
                }
            }
        }
        None
    }
}

type PsiKey = Vec<RootVec>;
type CTable = Arc<Vec<(GammaNode, u64)>>;

/// Shared state for computations in one root system: the character ring,
/// the matrix realization and memo tables keyed by `(λ, Ψ)`.
pub struct Engine {
    ring: CharRing,
    real: OnceLock<MatrixRealization>,
    modules: Mutex<HashMap<PsiKey, Arc<PsiModule>>>,
    proj: Mutex<HashMap<(Weight, PsiKey), Arc<ProjectiveCharacter>>>,
    ctab: Mutex<HashMap<(Weight, PsiKey), CTable>>,
}

impl Engine {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        Self::with_ring(CharRing::new(rs))
    }

    pub fn with_ring(ring: CharRing) -> Self {
        Engine {
            ring,
            real: OnceLock::new(),
            modules: Mutex::new(HashMap::new()),
            proj: Mutex::new(HashMap::new()),
            ctab: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &CharRing {
        &self.ring
    }

    pub fn root_system(&self) -> &RootSystem {
        self.ring.root_system()
    }

    pub fn realization(&self) -> &MatrixRealization {
        self.real
            .get_or_init(|| build_realization(self.ring.root_system()))
    }

    pub fn module(&self, psi: &PsiSet) -> Result<Arc<PsiModule>> {
        let key = psi.roots().to_vec();
        if let Some(m) = self.modules.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(PsiModule::new(self.realization(), psi, self.root_system())?);
        self.modules.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    fn check(&self, lambda: &Weight) -> Result<()> {
        let n = self.root_system().rank();
        if lambda.rank() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    /// `ch_t P(λ, 0)^{Γ(λ,Ψ)} = Σ_{(μ,s)∈Γ} t^s d^λ_{μ,s} ch V(μ)`.
    pub fn projective_character(
        &self,
        lambda: &Weight,
        psi: &PsiSet,
    ) -> Result<Arc<ProjectiveCharacter>> {
        self.check(lambda)?;
        let key = (lambda.clone(), psi.roots().to_vec());
        if let Some(p) = self.proj.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let rs = self.root_system();
        let gamma = gamma_set(lambda, psi, rs)?;
        let module = self.module(psi)?;
        let mults: Vec<Result<u64>> = gamma
            .nodes()
            .par_iter()
            .map(|g| d_coefficient(lambda, &g.mu, g.grade as usize, &module, rs))
            .collect();
        let mut graded = GradedCharacter::zero();
        for (g, m) in gamma.nodes().iter().zip(mults) {
            graded.add_term(g.grade, g.mu.clone(), m? as i64);
        }
        let p = Arc::new(ProjectiveCharacter {
            base: GammaNode::new(lambda.clone(), 0),
            psi: psi.clone(),
            graded,
        });
        self.proj.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    /// `P(mω_i, 0)^{Γ(mω_i, Ψ_i)}`.
    pub fn kr_character(&self, i: usize, m: u32) -> Result<Arc<ProjectiveCharacter>> {
        let rs = self.root_system();
        let psi = psi_node(i, rs)?;
        if m == 0 {
            return Err(Error::Invariant("KR level must be positive".into()));
        }
        self.projective_character(&(&Weight::fundamental(rs.rank(), i) * m as i32), &psi)
    }

    /// Nonzero `c^λ_{ν,s}` over `Γ(λ, Ψ)`, in the poset's node order.
    pub fn c_table(&self, lambda: &Weight, psi: &PsiSet) -> Result<Arc<Vec<(GammaNode, u64)>>> {
        self.check(lambda)?;
        let key = (lambda.clone(), psi.roots().to_vec());
        if let Some(t) = self.ctab.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let rs = self.root_system();
        let gamma = gamma_set(lambda, psi, rs)?;
        let module = self.module(psi)?;
        let vals: Vec<Result<u64>> = gamma
            .nodes()
            .par_iter()
            .map(|g| c_coefficient(lambda, &g.mu, g.grade as usize, &module, rs))
            .collect();
        let mut out = Vec::new();
        for (g, c) in gamma.nodes().iter().zip(vals) {
            let c = c?;
            if c != 0 {
                out.push((g.clone(), c));
            }
        }
        let out = Arc::new(out);
        self.ctab.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `Σ_{(ν,s)∈Γ(λ,Ψ)} (−t)^s c^λ_{ν,s} ch_t P(ν,0)^{Γ(ν,Ψ)} − ch V(λ)`.
    pub fn verify_thm2(&self, lambda: &Weight, psi: &PsiSet) -> Result<GradedCharacter> {
        let table = self.c_table(lambda, psi)?;
        let mut residual = GradedCharacter::zero();
        for (g, c) in table.iter() {
            let p = self.projective_character(&g.mu, psi)?;
            let sign = if g.grade % 2 == 0 { 1 } else { -1 };
            residual.add_shifted(&p.graded, g.grade, sign * *c as i64);
        }
        residual.add_term(0, lambda.clone(), -1);
        Ok(residual)
    }

    /// `A(t)` with `A[(ν,s)][(μ,r)] = t^{s−r} [P(μ,0)^{Γ(μ,Ψ)} : ev_{s−r} V(ν)]` and
    /// `E(t)` with `E[(ν,s)][(μ,r)] = t^{s−r} c^μ_{ν,s−r}`, rows and columns in
    /// the node order of `Γ(λ, Ψ)`.
    pub fn gamma_matrices(
        &self,
        lambda: &Weight,
        psi: &PsiSet,
    ) -> Result<(GammaMatrix, GammaMatrix)> {
        self.check(lambda)?;
        let gamma = gamma_set(lambda, psi, self.root_system())?;
        let order = gamma.nodes().to_vec();
        let n = order.len();
        let mut a = vec![vec![Poly::zero(); n]; n];
        let mut e = vec![vec![Poly::zero(); n]; n];
        for (j, col) in order.iter().enumerate() {
            let p = self.projective_character(&col.mu, psi)?;
            let ctab: HashMap<GammaNode, u64> =
                self.c_table(&col.mu, psi)?.iter().cloned().collect();
            for (i, row) in order.iter().enumerate() {
                if row.grade < col.grade {
                    continue;
                }
                let k = row.grade - col.grade;
                a[i][j] = Poly::monomial(k, p.graded.layer(k).get(&row.mu));
                let c = ctab
                    .get(&GammaNode::new(row.mu.clone(), k))
                    .copied()
                    .unwrap_or(0);
                e[i][j] = Poly::monomial(k, c as i64);
            }
        }
        Ok((
            GammaMatrix {
                node_order: order.clone(),
                entries: a,
            },
            GammaMatrix {
                node_order: order,
                entries: e,
            },
        ))
    }

    /// `Γ(λ, Ψ)` as a poset.
    pub fn gamma(&self, lambda: &Weight, psi: &PsiSet) -> Result<GammaPoset> {
        gamma_set(lambda, psi, self.root_system())
    }
}

/// One-shot variant of [`Engine::projective_character`].
pub fn projective_character(
    lambda: &Weight,
    psi: &PsiSet,
    rs: &RootSystem,
) -> Result<ProjectiveCharacter> {
    let e = Engine::new(Arc::new(rs.clone()));
    e.projective_character(lambda, psi).map(|p| (*p).clone())
}

pub fn kr_character(i: usize, m: u32, rs: &RootSystem) -> Result<ProjectiveCharacter> {
    let e = Engine::new(Arc::new(rs.clone()));
    e.kr_character(i, m).map(|p| (*p).clone())
}

pub fn verify_thm2(lambda: &Weight, psi: &PsiSet, rs: &RootSystem) -> Result<GradedCharacter> {
    Engine::new(Arc::new(rs.clone())).verify_thm2(lambda, psi)
}

pub fn gamma_matrices(
    lambda: &Weight,
    psi: &PsiSet,
    rs: &RootSystem,
) -> Result<(GammaMatrix, GammaMatrix)> {
    Engine::new(Arc::new(rs.clone())).gamma_matrices(lambda, psi)
}

#[derive(Debug, Serialize)]
pub struct MatrixReport {
    pub node_order: Vec<GammaNode>,
    pub a: Vec<Vec<Poly>>,
    pub e: Vec<Vec<Poly>>,
    pub product_is_identity: bool,
}

/// JSON report shared by the theorem and matrix checks.
#[derive(Debug, Serialize)]
pub struct Report {
    pub lie_type: String,
    pub lambda: Weight,
    pub psi_origin: String,
    pub residual_is_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<MatrixReport>,
}

impl Report {
    pub fn thm2(engine: &Engine, lambda: &Weight, psi: &PsiSet) -> Result<Report> {
        let r = engine.verify_thm2(lambda, psi)?;
        Ok(Report {
            lie_type: engine.root_system().lie_type().to_string(),
            lambda: lambda.clone(),
            psi_origin: psi.origin_label(),
            residual_is_zero: r.is_zero(),
            residual: Some(r.to_string()),
            matrices: None,
        })
    }

    pub fn matrices(engine: &Engine, lambda: &Weight, psi: &PsiSet) -> Result<Report> {
        let (a, e) = engine.gamma_matrices(lambda, psi)?;
        let prod = a.mul(&e.at_neg_t());
        let ok = prod.is_identity();
        Ok(Report {
            lie_type: engine.root_system().lie_type().to_string(),
            lambda: lambda.clone(),
            psi_origin: psi.origin_label(),
            residual_is_zero: ok,
            residual: prod
                .first_defect()
                .map(|(i, j, p)| format!("entry ({i},{j}) = {p}")),
            matrices: Some(MatrixReport {
                node_order: a.node_order,
                a: a.entries,
                e: e.entries,
                product_is_identity: ok,
            }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::DominantCharacter;
    use crate::gammaposet::psi_from_xi;

    fn engine(t: &str) -> Engine {
        Engine::new(Arc::new(RootSystem::new(t.parse().unwrap())))
    }

    fn w(v: &[i32]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn empty_psi_is_single_layer() {
        let e = engine("B3");
        let p = e
            .projective_character(&w(&[1, 1, 0]), &PsiSet::empty())
            .unwrap();
        assert_eq!(
            p.graded,
            GradedCharacter::single(0, DominantCharacter::simple(w(&[1, 1, 0])))
        );
    }

    #[test]
    fn b3_ladders() {
        let e = engine("B3");
        let p = e.kr_character(2, 1).unwrap();
        assert_eq!(p.graded.layer(0), DominantCharacter::simple(w(&[0, 1, 0])));
        assert_eq!(p.graded.layer(1), DominantCharacter::simple(w(&[0, 0, 0])));
        assert_eq!(p.graded.max_degree(), Some(1));
        let p = e.kr_character(2, 2).unwrap();
        for (k, mu) in [[0, 2, 0], [0, 1, 0], [0, 0, 0]].iter().enumerate() {
            assert_eq!(p.graded.layer(k as u32), DominantCharacter::simple(w(mu)));
        }
    }

    #[test]
    fn kr_collapses_when_coefficient_is_one() {
        let e = engine("B4");
        let p = e.kr_character(1, 3).unwrap();
        assert_eq!(
            p.graded,
            GradedCharacter::single(0, DominantCharacter::simple(w(&[3, 0, 0, 0])))
        );
        let e = engine("C3");
        let p = e.kr_character(3, 2).unwrap();
        assert_eq!(
            p.graded,
            GradedCharacter::single(0, DominantCharacter::simple(w(&[0, 0, 2])))
        );
    }

    #[test]
    fn thm2_small() {
        let e = engine("B3");
        let psi = psi_node(2, e.root_system()).unwrap();
        assert!(e.verify_thm2(&w(&[0, 1, 0]), &psi).unwrap().is_zero());
        assert!(e.verify_thm2(&w(&[0, 0, 0]), &psi).unwrap().is_zero());
        let e = engine("B4");
        let psi = psi_node(3, e.root_system()).unwrap();
        assert!(e.verify_thm2(&w(&[1, 1, 1, 0]), &psi).unwrap().is_zero());
    }

    #[test]
    fn b3_matrices() {
        let e = engine("B3");
        let psi = psi_node(2, e.root_system()).unwrap();
        let (a, m) = e.gamma_matrices(&w(&[0, 1, 0]), &psi).unwrap();
        let expected = vec![
            vec![Poly::one(), Poly::zero()],
            vec![Poly::monomial(1, 1), Poly::one()],
        ];
        assert_eq!(a.entries, expected);
        assert_eq!(m.entries, expected);
        assert!(a.mul(&m.at_neg_t()).is_identity());
        let (a, _) = e.gamma_matrices(&w(&[0, 0, 0]), &PsiSet::empty()).unwrap();
        assert!(a.is_identity());
    }

    #[test]
    fn b4_matrix_identity() {
        let e = engine("B4");
        let psi = psi_from_xi(&Weight::fundamental(4, 3), e.root_system()).unwrap();
        let (a, m) = e.gamma_matrices(&w(&[1, 1, 1, 0]), &psi).unwrap();
        assert!(a.is_unitriangular() && m.is_unitriangular());
        assert!(a.mul(&m.at_neg_t()).is_identity());
    }

    #[test]
    fn poly_display() {
        assert_eq!(Poly(vec![1, -2, 0, 1]).to_string(), "1 - 2t + t^3");
        assert_eq!(Poly(vec![0, 1]).at_neg_t().to_string(), "-t");
    }
}
