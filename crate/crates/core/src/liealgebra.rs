//! Matrix realizations of the classical algebras and the kernel computations
//! behind the coefficients `c` and `d`.
//!
//! The ambient space has basis positions carrying the `ε`-weights
//! `ε_1, …, ε_n, (0), −ε_n, …, −ε_1`, so the diagonal is `h` and the strictly
//! upper triangle is `n⁺`. Elements of `g` are the `X` with `XᵀJ + JX = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gammaposet::PsiSet;
use crate::linalg;
use crate::rootdata::{Family, LieType, RootSystem, RootVec, Weight};

/// Dense square matrix over `ℚ`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational64>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Rational64::zero(); n * n],
        }
    }

    pub fn unit(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zero(n);
        m.data[a * n + b] = Rational64::one();
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Rational64 {
        self.data[a * self.n + b]
    }

    pub fn entries(&self) -> &[Rational64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| a == b || self.get(a, b).is_zero()))
    }

    pub fn is_strictly_upper(&self) -> bool {
        (0..self.n).all(|a| (0..=a).all(|b| self.get(a, b).is_zero()))
    }

    pub fn scale(&self, q: Rational64) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| x * q).collect(),
        }
    }

    pub fn add(&self, o: &Matrix) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for a in 0..n {
            for b in 0..n {
                m.data[b * n + a] = self.data[a * n + b];
            }
        }
        m
    }

    pub fn mul(&self, o: &Matrix) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for a in 0..n {
            for k in 0..n {
                let x = self.data[a * n + k];
                if x.is_zero() {
                    continue;
                }
                for b in 0..n {
                    let y = o.data[k * n + b];
                    if !y.is_zero() {
                        m.data[a * n + b] += x * y;
                    }
                }
            }
        }
        m
    }

    pub fn bracket(&self, o: &Matrix) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// `q` with `self = q · other`, if one exists.
    pub fn ratio_to(&self, other: &Matrix) -> Option<Rational64> {
        let k = other.data.iter().position(|x| !x.is_zero())?;
        let q = self.data[k] / other.data[k];
        (*self == other.scale(q)).then_some(q)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.get(a, b).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub struct MatrixRealization {
    lie_type: LieType,
    ambient_dim: usize,
    form: Matrix,
    roots: Vec<RootVec>,
    h: Vec<Matrix>,
    xplus: Vec<Matrix>,
    xminus: Vec<Matrix>,
}

/// Realization with the standard Chevalley generators.
pub fn build_realization(rs: &RootSystem) -> MatrixRealization {
    let ones = vec![Rational64::one(); rs.rank()];
    build_realization_scaled(rs, &ones)
}

/// Realization with `x⁺_{α_i}` scaled by `scales[i]` and `x⁻_{α_i}` by its
/// inverse. The `h_i` are unchanged; root vectors for non-simple roots follow.
pub fn build_realization_scaled(rs: &RootSystem, scales: &[Rational64]) -> MatrixRealization {
    let t = rs.lie_type();
    let n = t.rank();
    assert_eq!(scales.len(), n);
    assert!(scales.iter().all(|q| !q.is_zero()));
    let big_n = match t.family() {
        Family::B => 2 * n + 1,
        Family::C | Family::D => 2 * n,
    };
    let mut form = Matrix::zero(big_n);
    for a in 0..big_n {
        let sign = if t.family() == Family::C && a >= n {
            -1
        } else {
            1
        };
        form.data[a * big_n + (big_n - 1 - a)] = Rational64::from_integer(sign);
    }
    // J⁻¹ = J for the symmetric forms and −J for the symplectic one
    let form_inv = match t.family() {
        Family::C => form.scale(Rational64::from_integer(-1)),
        _ => form.clone(),
    };
    let project = |e: Matrix| e.sub(&form_inv.mul(&e.transpose()).mul(&form));

    let simple_pos = |i: usize| -> (usize, usize) {
        if i < n {
            (i - 1, i)
        } else {
            match t.family() {
                Family::B | Family::C => (n - 1, n),
                Family::D => (n - 2, n),
            }
        }
    };

    let mut h = Vec::with_capacity(n);
    let mut xp_simple = Vec::with_capacity(n);
    let mut xm_simple = Vec::with_capacity(n);
    for i in 1..=n {
        let (a, b) = simple_pos(i);
        let xp = project(Matrix::unit(big_n, a, b));
        let mut xm = project(Matrix::unit(big_n, b, a));
        let hi = xp.bracket(&xm);
        let c = hi
            .bracket(&xp)
            .ratio_to(&xp)
            .expect("x⁺ is an eigenvector of its coroot");
        xm = xm.scale(Rational64::from_integer(2) / c);
        let q = scales[i - 1];
        let xp = xp.scale(q);
        let xm = xm.scale(q.recip());
        h.push(xp.bracket(&xm));
        xp_simple.push(xp);
        xm_simple.push(xm);
    }

    let roots = rs.positive_roots().to_vec();
    let mut xplus: Vec<Matrix> = Vec::with_capacity(roots.len());
    let mut xminus: Vec<Matrix> = Vec::with_capacity(roots.len());
    for beta in &roots {
        if beta.height() == 1 {
            let i = beta.coords().iter().position(|&c| c == 1).unwrap();
            xplus.push(xp_simple[i].clone());
            xminus.push(xm_simple[i].clone());
            continue;
        }
        // roots are sorted by height, so β − α_i is already built
        let (i, k) = (0..n)
            .find_map(|i| {
                let lower = beta - &RootVec::simple(n, i + 1);
                rs.positive_root_index(&lower).map(|k| (i, k))
            })
            .expect("every non-simple positive root has a positive predecessor");
        let xp = xp_simple[i].bracket(&xplus[k]);
        let xm = xminus[k].bracket(&xm_simple[i]);
        assert!(!xp.is_zero() && !xm.is_zero());
        xplus.push(xp);
        xminus.push(xm);
    }

    MatrixRealization {
        lie_type: t,
        ambient_dim: big_n,
        form,
        roots,
        h,
        xplus,
        xminus,
    }
}

impl MatrixRealization {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    /// `h_i`, 1-based.
    pub fn h(&self, i: usize) -> &Matrix {
        &self.h[i - 1]
    }

    pub fn xplus(&self, beta: &RootVec) -> Option<&Matrix> {
        self.roots
            .binary_search_by(|r| cmp_roots(r, beta))
            .ok()
            .map(|k| &self.xplus[k])
    }

    pub fn xminus(&self, beta: &RootVec) -> Option<&Matrix> {
        self.roots
            .binary_search_by(|r| cmp_roots(r, beta))
            .ok()
            .map(|k| &self.xminus[k])
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.roots
    }

    /// Whether `X` preserves the defining form.
    pub fn preserves_form(&self, x: &Matrix) -> bool {
        x.transpose()
            .mul(&self.form)
            .add(&self.form.mul(x))
            .is_zero()
    }

    /// Dimension of the Lie algebra generated by the `x^±_{α_i}`.
    pub fn generated_dimension(&self) -> usize {
        let to_row = |m: &Matrix| -> Vec<BigRational> { m.entries().iter().map(big).collect() };
        let n = self.lie_type.rank();
        let mut basis = Vec::new();
        let mut elems: Vec<Matrix> = Vec::new();
        for i in 0..n {
            for m in [&self.xplus[i], &self.xminus[i]] {
                if linalg::extend_basis(&mut basis, to_row(m)) {
                    elems.push(m.clone());
                }
            }
        }
        let mut frontier = 0;
        while frontier < elems.len() {
            let fresh: Vec<Matrix> = elems[frontier..].to_vec();
            frontier = elems.len();
            for a in &fresh {
                let gens: Vec<Matrix> = elems.clone();
                for b in &gens {
                    let c = a.bracket(b);
                    if linalg::extend_basis(&mut basis, to_row(&c)) {
                        elems.push(c);
                    }
                }
            }
        }
        basis.len()
    }
}

fn cmp_roots(a: &RootVec, b: &RootVec) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| a.cmp(b))
}

fn big(q: &Rational64) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Which symmetric-algebra-like functor of `n⁻_Ψ` a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Exterior,
    Symmetric,
}

type Mono = Vec<u16>;
type Vector = BTreeMap<Mono, BigRational>;

/// `n⁻_Ψ` with the action of the `ad x⁻_{α_i}`.
pub struct PsiModule {
    rank: usize,
    roots: Vec<RootVec>,
    basis: Vec<Matrix>,
    weights: Vec<Weight>,
    /// `lowering[i][b] = Some((c, q))` means `[x⁻_{α_i}, basis_b] = q · basis_c`.
    lowering: Vec<Vec<Option<(usize, Rational64)>>>,
}

impl PsiModule {
    pub fn new(real: &MatrixRealization, psi: &PsiSet, rs: &RootSystem) -> Result<Self> {
        Self::with_scaling(real, psi, rs, &vec![Rational64::one(); psi.len()])
    }

    /// Basis vector `b` is `scales[b] · x⁻_β`.
    pub fn with_scaling(
        real: &MatrixRealization,
        psi: &PsiSet,
        rs: &RootSystem,
        scales: &[Rational64],
    ) -> Result<Self> {
        assert_eq!(scales.len(), psi.len());
        let n = rs.rank();
        let roots = psi.roots().to_vec();
        let mut basis = Vec::with_capacity(roots.len());
        for (beta, q) in roots.iter().zip(scales) {
            let x = real
                .xminus(beta)
                .ok_or_else(|| Error::NotAPositiveRoot(beta.to_string()))?;
            basis.push(x.scale(*q));
        }
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                if !basis[a].bracket(&basis[b]).is_zero() {
                    return Err(Error::NotAnIdeal(format!(
                        "[x⁻({}), x⁻({})] ≠ 0",
                        roots[a], roots[b]
                    )));
                }
            }
        }
        let mut lowering = vec![vec![None; roots.len()]; n];
        for i in 0..n {
            let xi = real.xminus(&RootVec::simple(n, i + 1)).unwrap();
            for (b, beta) in roots.iter().enumerate() {
                let image = xi.bracket(&basis[b]);
                if image.is_zero() {
                    continue;
                }
                let up = beta + &RootVec::simple(n, i + 1);
                let c = roots
                    .iter()
                    .position(|r| *r == up)
                    .ok_or_else(|| Error::NotAnIdeal(format!("{up} is missing")))?;
                let q = image
                    .ratio_to(&basis[c])
                    .ok_or_else(|| Error::Invariant("root space is not one-dimensional".into()))?;
                lowering[i][b] = Some((c, q));
            }
        }
        let weights = roots.iter().map(|r| rs.root_to_weight(&-r)).collect();
        Ok(PsiModule {
            rank: n,
            roots,
            basis,
            weights,
            lowering,
        })
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Matrix of `ad x⁻_{α_i}` (1-based `i`) on the basis; column `b` is the
    /// image of basis vector `b`.
    pub fn lowering_matrix(&self, i: usize) -> Vec<Vec<Rational64>> {
        let d = self.len();
        let mut m = vec![vec![Rational64::zero(); d]; d];
        for (b, e) in self.lowering[i - 1].iter().enumerate() {
            if let Some((c, q)) = e {
                m[*c][b] = *q;
            }
        }
        m
    }

    /// Monomials of degree `s` whose roots sum to `target`.
    pub fn monomials(&self, kind: PowerKind, s: usize, target: &RootVec) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(s);
        let mut rem: Vec<i32> = target.coords().to_vec();
        self.monomials_rec(kind, s, 0, &mut rem, &mut cur, &mut out);
        out
    }

    fn monomials_rec(
        &self,
        kind: PowerKind,
        s: usize,
        start: usize,
        rem: &mut [i32],
        cur: &mut Mono,
        out: &mut Vec<Mono>,
    ) {
        if cur.len() == s {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        for b in start..self.roots.len() {
            let r = self.roots[b].coords();
            if rem.iter().zip(r).any(|(x, y)| x < y) {
                continue;
            }
            rem.iter_mut().zip(r).for_each(|(x, y)| *x -= y);
            cur.push(b as u16);
            let next = match kind {
                PowerKind::Exterior => b + 1,
                PowerKind::Symmetric => b,
            };
            self.monomials_rec(kind, s, next, rem, cur, out);
            cur.pop();
            rem.iter_mut().zip(r).for_each(|(x, y)| *x += y);
        }
    }

    /// `ad x⁻_{α_i}` (0-based `i`) extended as a derivation.
    fn apply(&self, kind: PowerKind, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (m, q) in v {
            for p in 0..m.len() {
                let Some((c, r)) = self.lowering[i][m[p] as usize] else {
                    continue;
                };
                let c = c as u16;
                let mut sign = 1;
                if kind == PowerKind::Exterior {
                    if m.contains(&c) {
                        continue;
                    }
                    let (lo, hi) = if m[p] < c { (m[p], c) } else { (c, m[p]) };
                    if m.iter().filter(|&&x| lo < x && x < hi).count() % 2 == 1 {
                        sign = -1;
                    }
                }
                let mut nm = m.clone();
                nm[p] = c;
                nm.sort_unstable();
                let coef = q * big(&r) * BigRational::from_integer(BigInt::from(sign));
                let e = out.entry(nm).or_insert_with(BigRational::zero);
                *e += coef;
            }
        }
        out.retain(|_, q| !q.is_zero());
        out
    }

    /// `dim ⋂_i ker (ad x⁻_{α_i})^{powers[i]}` on the `target` weight space of
    /// degree `s` (the weight is `−target`).
    pub fn kernel_dim(&self, kind: PowerKind, s: usize, target: &RootVec, powers: &[u32]) -> usize {
        assert_eq!(powers.len(), self.rank);
        let basis = self.monomials(kind, s, target);
        if basis.is_empty() {
            return 0;
        }
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (i, &k) in powers.iter().enumerate() {
            let images: Vec<Vector> = basis
                .iter()
                .map(|m| {
                    let mut v = Vector::new();
                    v.insert(m.clone(), BigRational::one());
                    for _ in 0..k {
                        if v.is_empty() {
                            break;
                        }
                        v = self.apply(kind, i, &v);
                    }
                    v
                })
                .collect();
            let support: BTreeSet<&Mono> = images.iter().flat_map(|v| v.keys()).collect();
            for mono in support {
                rows.push(
                    images
                        .iter()
                        .map(|v| v.get(mono).cloned().unwrap_or_else(BigRational::zero))
                        .collect(),
                );
            }
        }
        basis.len() - linalg::rank_rational(&rows)
    }

    /// Dimension of the `target` weight space of degree `s`.
    pub fn weight_space_dim(&self, kind: PowerKind, s: usize, target: &RootVec) -> usize {
        self.monomials(kind, s, target).len()
    }
}

fn offset(lambda: &Weight, nu: &Weight, rs: &RootSystem) -> Result<Option<RootVec>> {
    if lambda.rank() != rs.rank() || nu.rank() != rs.rank() {
        let got = if lambda.rank() != rs.rank() {
            lambda.rank()
        } else {
            nu.rank()
        };
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got,
        });
    }
    Ok(rs
        .weight_to_root(&(lambda - nu))
        .filter(|r| r.is_nonnegative()))
}

fn powers(nu: &Weight) -> Vec<u32> {
    nu.coords().iter().map(|&x| x as u32 + 1).collect()
}

/// `c^λ_{ν,s}`: the `(ν−λ)` weight space of `⋀^s n⁻_Ψ` cut down by
/// `(x⁻_i)^{ν(h_i)+1} v = 0`. Zero when `ν` is not dominant.
pub fn c_coefficient(
    lambda: &Weight,
    nu: &Weight,
    s: usize,
    psi: &PsiModule,
    rs: &RootSystem,
) -> Result<u64> {
    let target = offset(lambda, nu, rs)?;
    if !nu.is_dominant() {
        return Ok(0);
    }
    Ok(match target {
        Some(target) => psi.kernel_dim(PowerKind::Exterior, s, &target, &powers(nu)) as u64,
        None => 0,
    })
}

/// `d^λ_{μ,s}`: the `(μ−λ)` weight space of `S^s n⁻_Ψ` cut down by
/// `(x⁻_i)^{μ(h_i)+1} v = 0`. Errors when `(μ, s) ∉ Γ(λ, Ψ)`.
pub fn d_coefficient(
    lambda: &Weight,
    mu: &Weight,
    s: usize,
    psi: &PsiModule,
    rs: &RootSystem,
) -> Result<u64> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let outside = || Error::OutsideGamma {
        mu: mu.to_string(),
        grade: s as u32,
    };
    let target = offset(lambda, mu, rs)?.ok_or_else(outside)?;
    if psi.monomials(PowerKind::Symmetric, s, &target).is_empty() {
        return Err(outside());
    }
    Ok(psi.kernel_dim(PowerKind::Symmetric, s, &target, &powers(mu)) as u64)
}

/// Dimensions of all weight spaces of `⋀ n⁻_Ψ`.
pub fn weight_space_profile(psi: &PsiModule, rs: &RootSystem) -> BTreeMap<Weight, usize> {
    let mut sums: BTreeMap<RootVec, usize> = BTreeMap::new();
    sums.insert(RootVec::zero(rs.rank()), 1);
    for beta in psi.roots() {
        let shifted: Vec<(RootVec, usize)> = sums.iter().map(|(r, &k)| (r + beta, k)).collect();
        for (r, k) in shifted {
            *sums.entry(r).or_insert(0) += k;
        }
    }
    sums.into_iter()
        .map(|(r, k)| (rs.root_to_weight(&-&r), k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammaposet::{psi_from_xi, psi_node};

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(v: &[i32]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn b3_generates_so7() {
        let r = rs("B3");
        assert_eq!(build_realization(&r).generated_dimension(), 21);
    }

    #[test]
    fn chevalley_relations() {
        for t in ["B3", "C3", "D4", "B2", "C4"] {
            let r = rs(t);
            let m = build_realization(&r);
            let n = r.rank();
            for i in 1..=n {
                let a = RootVec::simple(n, i);
                let xp = m.xplus(&a).unwrap();
                let xm = m.xminus(&a).unwrap();
                assert_eq!(&xp.bracket(xm), m.h(i), "{t}");
                assert!(m.h(i).is_diagonal());
            }
            for (k, beta) in r.positive_roots().iter().enumerate() {
                let bw = &r.positive_root_weights()[k];
                let xp = m.xplus(beta).unwrap();
                let xm = m.xminus(beta).unwrap();
                assert!(xp.is_strictly_upper());
                assert!(m.preserves_form(xp) && m.preserves_form(xm));
                for i in 1..=n {
                    let c = Rational64::from_integer(bw.coords()[i - 1] as i64);
                    assert_eq!(m.h(i).bracket(xp), xp.scale(c), "{t} {beta} {i}");
                    assert_eq!(m.h(i).bracket(xm), xm.scale(-c), "{t} {beta} {i}");
                }
            }
        }
    }

    #[test]
    fn c3_lowest_root_vector() {
        let r = rs("C3");
        let m = build_realization(&r);
        let xt = m.xminus(r.theta()).unwrap();
        let nonzero: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .filter(|&(a, b)| !xt.get(a, b).is_zero())
            .collect();
        assert_eq!(nonzero, vec![(5, 0)]);
        for i in 1..=3 {
            assert!(m
                .xminus(&RootVec::simple(3, i))
                .unwrap()
                .bracket(xt)
                .is_zero());
        }
    }

    fn module(r: &RootSystem, psi: &PsiSet) -> PsiModule {
        PsiModule::new(&build_realization(r), psi, r).unwrap()
    }

    #[test]
    fn c_table_values() {
        let r = rs("B5");
        let psi = module(&r, &psi_node(4, &r).unwrap());
        let l = w(&[1, 1, 1, 1, 0]);
        let nu = &l - &Weight::fundamental(5, 4);
        assert_eq!(c_coefficient(&l, &nu, 2, &psi, &r).unwrap(), 3);
        assert_eq!(c_coefficient(&l, &l, 0, &psi, &r).unwrap(), 1);

        let r = rs("B4");
        let psi = module(&r, &psi_node(3, &r).unwrap());
        let l = w(&[1, 1, 1, 0]);
        let nu = &l - &Weight::fundamental(4, 2);
        assert_eq!(c_coefficient(&l, &nu, 1, &psi, &r).unwrap(), 1);

        let r = rs("C4");
        let psi = module(&r, &psi_node(3, &r).unwrap());
        let l = w(&[1, 1, 2, 0]);
        let nu = &l - &(&Weight::fundamental(4, 3) * 2);
        assert_eq!(c_coefficient(&l, &nu, 3, &psi, &r).unwrap(), 2);
        let l = w(&[0, 1, 2, 0]);
        let nu = &l - &(&Weight::fundamental(4, 3) * 2);
        assert_eq!(c_coefficient(&l, &nu, 3, &psi, &r).unwrap(), 0);
        let l = w(&[1, 1, 1, 0]);
        let nu = &l - &(&Weight::fundamental(4, 3) * 2);
        assert_eq!(c_coefficient(&l, &nu, 3, &psi, &r).unwrap(), 0);
    }

    #[test]
    fn d_small_values() {
        let r = rs("B3");
        let psi = module(&r, &psi_node(2, &r).unwrap());
        let l = Weight::fundamental(3, 2);
        assert_eq!(d_coefficient(&l, &Weight::zero(3), 1, &psi, &r).unwrap(), 1);
        assert_eq!(d_coefficient(&l, &l, 0, &psi, &r).unwrap(), 1);
        assert!(d_coefficient(&l, &Weight::zero(3), 0, &psi, &r).is_err());
        let l2 = &l * 2;
        assert_eq!(d_coefficient(&l2, &l, 1, &psi, &r).unwrap(), 1);
        assert_eq!(
            d_coefficient(&l2, &Weight::zero(3), 2, &psi, &r).unwrap(),
            1
        );
    }

    #[test]
    fn profiles() {
        let r = rs("B5");
        let prof = weight_space_profile(&module(&r, &psi_node(4, &r).unwrap()), &r);
        let count = |k: usize| prof.values().filter(|&&d| d == k).count();
        assert_eq!((prof.len(), count(2), count(3)), (54, 6, 2));

        let r = rs("D6");
        let prof = weight_space_profile(&module(&r, &psi_node(4, &r).unwrap()), &r);
        let count = |k: usize| prof.values().filter(|&&d| d == k).count();
        assert_eq!((prof.len(), count(2), count(3)), (54, 6, 2));

        let r = rs("C4");
        let prof = weight_space_profile(&module(&r, &psi_node(3, &r).unwrap()), &r);
        let count = |k: usize| prof.values().filter(|&&d| d == k).count();
        assert_eq!(
            (prof.len(), count(2), prof.values().max().copied()),
            (51, 13, Some(2))
        );

        let r = rs("B4");
        let prof = weight_space_profile(&module(&r, &psi_node(3, &r).unwrap()), &r);
        assert_eq!(prof.len(), 8);
        assert!(prof.values().all(|&d| d == 1));
    }

    #[test]
    fn argmax_sets_are_abelian_ideals() {
        for t in ["B4", "C4", "D5"] {
            let r = rs(t);
            for i in 1..=r.rank() {
                let psi = psi_from_xi(&Weight::fundamental(r.rank(), i), &r).unwrap();
                assert!(
                    PsiModule::new(&build_realization(&r), &psi, &r).is_ok(),
                    "{t} {i}"
                );
            }
        }
    }

    #[test]
    fn non_ideal_rejected() {
        let r = rs("B2");
        let psi = PsiSet::explicit(vec![RootVec::simple(2, 1)], &r).unwrap();
        assert!(matches!(
            PsiModule::new(&build_realization(&r), &psi, &r),
            Err(Error::NotAnIdeal(_))
        ));
    }
}
