//! Root subsets `Ψ`, the posets `Γ(λ, Ψ)` and the order `≼` on `P⁺ × ℤ₊`.
//!
//! `(ν, s)` covers `(μ, r)` when `s = r + 1` and `ν − μ ∈ R ⊔ {0}`; `≼` is the
//! order generated by covers. Every walk through `P⁺ × ℤ₊` stays inside
//! `λ + Q`, so walks track root-lattice offsets alongside weights and prune
//! with the box `|offset_j| ≤ k·ε_j(θ)` for `k` remaining steps.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{Family, RootSystem, RootVec, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PsiOrigin {
    Xi(Weight),
    Node(usize),
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSet {
    roots: Vec<RootVec>,
    origin: PsiOrigin,
}

impl PsiSet {
    /// An arbitrary set of positive roots.
    pub fn explicit(mut roots: Vec<RootVec>, rs: &RootSystem) -> Result<Self> {
        for r in &roots {
            if rs.positive_root_index(r).is_none() {
                return Err(Error::NotAPositiveRoot(r.to_string()));
            }
        }
        roots.sort();
        roots.dedup();
        Ok(PsiSet {
            roots,
            origin: PsiOrigin::Explicit,
        })
    }

    pub fn empty() -> Self {
        PsiSet {
            roots: Vec::new(),
            origin: PsiOrigin::Explicit,
        }
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn origin(&self) -> &PsiOrigin {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &RootVec) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    /// The dominant weight `ξ` that `Ψ` is an argmax set for, if known.
    fn xi(&self, rank: usize) -> Option<Weight> {
        match &self.origin {
            PsiOrigin::Xi(x) => Some(x.clone()),
            PsiOrigin::Node(i) => Some(Weight::fundamental(rank, *i)),
            PsiOrigin::Explicit => None,
        }
    }

    pub fn origin_label(&self) -> String {
        match &self.origin {
            PsiOrigin::Xi(x) => format!("xi={x}"),
            PsiOrigin::Node(i) => format!("node={i}"),
            PsiOrigin::Explicit => "explicit".to_string(),
        }
    }
}

/// `{α ∈ R : (α, ξ) = max_{β∈R} (β, ξ)}`.
pub fn psi_from_xi(xi: &Weight, rs: &RootSystem) -> Result<PsiSet> {
    if xi.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: xi.rank(),
        });
    }
    if !xi.is_dominant() {
        return Err(Error::NotDominant(xi.to_string()));
    }
    if xi.is_zero() {
        return Err(Error::ZeroXi);
    }
    let all = rs.all_roots();
    let pairings: Vec<Rational64> = all.iter().map(|a| rs.bilinear(a, xi).unwrap()).collect();
    let max = *pairings.iter().max().unwrap();
    let mut roots: Vec<RootVec> = all
        .into_iter()
        .zip(pairings)
        .filter(|(_, p)| *p == max)
        .map(|(a, _)| a)
        .collect();
    debug_assert!(roots.iter().all(|r| r.is_nonnegative()));
    roots.sort();
    Ok(PsiSet {
        roots,
        origin: PsiOrigin::Xi(xi.clone()),
    })
}

/// `Ψ_i = {α ∈ R⁺ : ε_i(α) = 2}`.
pub fn psi_node(i: usize, rs: &RootSystem) -> Result<PsiSet> {
    if i == 0 || i > rs.rank() {
        return Err(Error::NodeOutOfRange {
            node: i,
            rank: rs.rank(),
        });
    }
    let mut roots: Vec<RootVec> = rs
        .positive_roots()
        .iter()
        .filter(|a| a.epsilon(i) == 2)
        .cloned()
        .collect();
    roots.sort();
    Ok(PsiSet {
        roots,
        origin: PsiOrigin::Node(i),
    })
}

/// The closed form `{ω_r + ω_s − ω_{r−1} − ω_{s−1}}` for `1 ≤ r < s ≤ i`
/// (`r ≤ s` in type C), `ω_0 = 0`, as weights. Valid for `1 ≤ i < n`.
pub fn psi_closed_form(i: usize, rs: &RootSystem) -> Result<Vec<Weight>> {
    let t = rs.lie_type();
    if i == 0 || i >= t.jt_n() {
        return Err(Error::NodeOutOfRange {
            node: i,
            rank: t.jt_n() - 1,
        });
    }
    let n = rs.rank();
    let omega = |k: usize| {
        if k == 0 {
            Weight::zero(n)
        } else {
            Weight::fundamental(n, k)
        }
    };
    let mut out = Vec::new();
    for s in 1..=i {
        let r_max = if t.family() == Family::C { s } else { s - 1 };
        for r in 1..=r_max {
            let w = &(&(&omega(r) + &omega(s)) - &omega(r - 1)) - &omega(s - 1);
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaNode {
    pub mu: Weight,
    #[serde(rename = "r")]
    pub grade: u32,
}

impl GammaNode {
    pub fn new(mu: Weight, grade: u32) -> Self {
        GammaNode { mu, grade }
    }
}

/// A finite subset of `P⁺ × ℤ₊` with its cover edges.
#[derive(Clone, Debug)]
pub struct GammaPoset {
    base: GammaNode,
    psi: PsiSet,
    nodes: Vec<GammaNode>,
    index: HashMap<GammaNode, usize>,
    covers: Vec<(usize, usize)>,
}

impl GammaPoset {
    /// Builds a poset on an arbitrary node set; covers are recomputed.
    pub fn from_nodes(
        base: GammaNode,
        psi: PsiSet,
        nodes: impl IntoIterator<Item = GammaNode>,
        rs: &RootSystem,
    ) -> Self {
        let mut nodes: Vec<GammaNode> = nodes
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        nodes.sort_by(|a, b| a.grade.cmp(&b.grade).then_with(|| b.mu.cmp(&a.mu)));
        let index: HashMap<GammaNode, usize> = nodes
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, g)| (g, k))
            .collect();
        let steps = root_steps(rs);
        let mut covers = Vec::new();
        for (j, upper) in nodes.iter().enumerate() {
            if upper.grade == 0 {
                continue;
            }
            for (gw, _) in &steps {
                let lower = GammaNode::new(&upper.mu - gw, upper.grade - 1);
                if let Some(&i) = index.get(&lower) {
                    covers.push((i, j));
                }
            }
        }
        covers.sort();
        GammaPoset {
            base,
            psi,
            nodes,
            index,
            covers,
        }
    }

    pub fn base(&self) -> &GammaNode {
        &self.base
    }

    pub fn psi(&self) -> &PsiSet {
        &self.psi
    }

    /// Nodes ordered by grade, then by decreasing weight.
    pub fn nodes(&self) -> &[GammaNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: &GammaNode) -> bool {
        self.index.contains_key(node)
    }

    pub fn index_of(&self, node: &GammaNode) -> Option<usize> {
        self.index.get(node).copied()
    }

    /// Edges `(lower, upper)` as node indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn max_grade(&self) -> u32 {
        self.nodes.iter().map(|g| g.grade).max().unwrap_or(0)
    }

    /// Grade at which each weight occurs; `Err` with the first weight seen twice.
    pub fn grade_map(&self) -> std::result::Result<HashMap<Weight, u32>, Weight> {
        let mut out = HashMap::new();
        for g in &self.nodes {
            if out.insert(g.mu.clone(), g.grade).is_some() {
                return Err(g.mu.clone());
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::json!({
            "lie_type": rs.lie_type().to_string(),
            "lambda": self.base.mu,
            "psi_origin": self.psi.origin_label(),
            "psi": self.psi.roots(),
            "nodes": self.nodes,
            "edges": self.covers,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph gamma {\n  rankdir=TB;\n");
        for (k, g) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"({}; {})\"];", g.mu, g.grade);
        }
        for (a, b) in &self.covers {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// `R ⊔ {0}` as (weight, root coordinates) pairs.
fn root_steps(rs: &RootSystem) -> Vec<(Weight, RootVec)> {
    let mut out = vec![(Weight::zero(rs.rank()), RootVec::zero(rs.rank()))];
    for a in rs.all_roots() {
        out.push((rs.root_to_weight(&a), a));
    }
    out
}

/// An upper bound on the grade of any node of `Γ(λ, Ψ)`.
///
/// Uses `(μ, ξ) ≥ 0` for dominant `μ` and dominant `ξ`, with `ξ = ρ` always
/// available since every positive root pairs positively with `ρ`.
pub fn grade_bound(lambda: &Weight, psi: &PsiSet, rs: &RootSystem) -> u32 {
    if psi.is_empty() {
        return 0;
    }
    let bound_for = |xi: &Weight| -> Option<u32> {
        let min = psi
            .roots()
            .iter()
            .map(|b| rs.bilinear(b, xi).unwrap())
            .min()?;
        if min <= Rational64::zero() {
            return None;
        }
        let top = rs.bilinear(lambda, xi).unwrap();
        Some((top / min).floor().to_integer().max(0) as u32)
    };
    let mut best = bound_for(&rs.rho()).expect("positive roots pair positively with rho");
    if let Some(b) = psi.xi(rs.rank()).and_then(|x| bound_for(&x)) {
        best = best.min(b);
    }
    best
}

/// `Γ(λ, Ψ) = {(λ − Σ n_β β, Σ n_β) : dominant}`.
pub fn gamma_set(lambda: &Weight, psi: &PsiSet, rs: &RootSystem) -> Result<GammaPoset> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let r_max = grade_bound(lambda, psi, rs);
    let psi_weights: Vec<Weight> = psi.roots().iter().map(|b| rs.root_to_weight(b)).collect();
    let mut nodes = vec![GammaNode::new(lambda.clone(), 0)];
    let mut level: HashSet<Weight> = HashSet::from([lambda.clone()]);
    for r in 1..=r_max {
        let mut next = HashSet::new();
        for w in &level {
            for b in &psi_weights {
                next.insert(w - b);
            }
        }
        nodes.extend(
            next.iter()
                .filter(|w| w.is_dominant())
                .map(|w| GammaNode::new(w.clone(), r)),
        );
        level = next;
    }
    Ok(GammaPoset::from_nodes(
        GammaNode::new(lambda.clone(), 0),
        psi.clone(),
        nodes,
        rs,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Walker {
    mu: Weight,
    offset: RootVec,
}

fn within_box(diff: &[i32], theta: &[i32], steps: i64) -> bool {
    diff.iter()
        .zip(theta)
        .all(|(&d, &t)| (d as i64).abs() <= steps * t as i64)
}

/// Walks the cover digraph from `starts` (upwards when `up`, else
/// downwards), keeping only nodes that can still meet one of `targets`.
fn walk(
    starts: &[GammaNode],
    targets: &[GammaNode],
    up: bool,
    rs: &RootSystem,
) -> Result<HashSet<GammaNode>> {
    let mut visited = HashSet::new();
    if starts.is_empty() || targets.is_empty() {
        return Ok(visited);
    }
    let anchor = &starts[0].mu;
    let offset_of = |w: &Weight| -> Option<RootVec> { rs.weight_to_root(&(w - anchor)) };
    let starts_off: Vec<(Walker, u32)> = starts
        .iter()
        .map(|g| {
            offset_of(&g.mu)
                .map(|o| {
                    (
                        Walker {
                            mu: g.mu.clone(),
                            offset: o,
                        },
                        g.grade,
                    )
                })
                .ok_or_else(|| Error::Invariant(format!("{} is not in {anchor} + Q", g.mu)))
        })
        .collect::<Result<_>>()?;
    // targets outside anchor + Q can never be met
    let targets_off: Vec<(RootVec, u32)> = targets
        .iter()
        .filter_map(|g| offset_of(&g.mu).map(|o| (o, g.grade)))
        .collect();
    let theta = rs.theta().coords().to_vec();
    let steps = root_steps(rs);
    let can_meet = |off: &RootVec, g: u32| {
        targets_off.iter().any(|(o, gt)| {
            if up {
                *gt >= g && within_box((o - off).coords(), &theta, (*gt - g) as i64)
            } else {
                *gt <= g && within_box((off - o).coords(), &theta, (g - *gt) as i64)
            }
        })
    };
    let grades = starts.iter().chain(targets).map(|g| g.grade);
    let (lo, hi) = (grades.clone().min().unwrap(), grades.max().unwrap());
    let order: Vec<u32> = if up {
        (lo..=hi).collect()
    } else {
        (lo..=hi).rev().collect()
    };
    let mut frontier: HashSet<Walker> = HashSet::new();
    for &g in &order {
        for (w, gs) in &starts_off {
            if *gs == g && can_meet(&w.offset, g) {
                frontier.insert(w.clone());
            }
        }
        let last = if up { g == hi } else { g == lo };
        let mut next = HashSet::new();
        for w in &frontier {
            visited.insert(GammaNode::new(w.mu.clone(), g));
            if last {
                continue;
            }
            let g2 = if up { g + 1 } else { g - 1 };
            for (gw, gr) in &steps {
                let (mu, offset) = if up {
                    (&w.mu + gw, &w.offset + gr)
                } else {
                    (&w.mu - gw, &w.offset - gr)
                };
                if mu.is_dominant() && can_meet(&offset, g2) {
                    next.insert(Walker { mu, offset });
                }
            }
        }
        frontier = next;
    }
    Ok(visited)
}

/// All nodes `c` of `P⁺ × ℤ₊` with `a ≼ c ≼ b` for some `a, b ∈ ends`.
pub fn interval_closure(ends: &[GammaNode], rs: &RootSystem) -> Result<HashSet<GammaNode>> {
    let forward = walk(ends, ends, true, rs)?;
    let backward = walk(ends, ends, false, rs)?;
    Ok(forward.intersection(&backward).cloned().collect())
}

/// `a ≼ b` in `P⁺ × ℤ₊`.
pub fn leq(a: &GammaNode, b: &GammaNode, rs: &RootSystem) -> bool {
    if a == b {
        return true;
    }
    if b.grade <= a.grade || !a.mu.is_dominant() || !b.mu.is_dominant() {
        return false;
    }
    walk(std::slice::from_ref(a), std::slice::from_ref(b), true, rs)
        .map(|v| v.contains(b))
        .unwrap_or(false)
}

/// Nodes of `Γ` that are `≽ from`, found by a single upward walk.
pub fn reachable_in(
    gamma: &GammaPoset,
    from: &GammaNode,
    rs: &RootSystem,
) -> Result<Vec<GammaNode>> {
    let visited = walk(std::slice::from_ref(from), gamma.nodes(), true, rs)?;
    Ok(gamma
        .nodes()
        .iter()
        .filter(|g| visited.contains(g))
        .cloned()
        .collect())
}

/// Every node `c` with `a ≼ c ≼ b` for `a, b ∈ Γ` lies in `Γ`.
pub fn is_interval_closed(gamma: &GammaPoset, rs: &RootSystem) -> Result<bool> {
    let closure = interval_closure(gamma.nodes(), rs)?;
    Ok(closure.iter().all(|c| gamma.contains(c)))
}

/// A relation `Σ m_α α = Σ n_β β` that breaks rigidity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityViolation {
    /// Coefficients `n_β`, in the order of `Ψ.roots()`.
    pub n: Vec<u32>,
    /// The roots `α` of a shorter (or equally long, non-`Ψ`) expression, with repetition.
    pub m_roots: Vec<RootVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub holds: bool,
    pub checked: usize,
    pub violation: Option<RigidityViolation>,
}

/// For every `n ∈ [0, bound]^Ψ`, checks that no expression of `Σ n_β β` as a
/// sum of at most `Σ n_β` roots is shorter, and that equal-length
/// expressions only use roots of `Ψ`.
pub fn rigidity_check(psi: &PsiSet, rs: &RootSystem, bound: u32) -> RigidityReport {
    let k = psi.len();
    let rank = rs.rank();
    // targets: root coordinates of Σ n_β β, with total N
    let mut targets: HashMap<RootVec, (u32, Vec<u32>)> = HashMap::new();
    let mut n = vec![0u32; k];
    let mut checked = 0;
    'outer: loop {
        let mut idx = 0;
        loop {
            if idx == k {
                break 'outer;
            }
            if n[idx] < bound {
                n[idx] += 1;
                break;
            }
            n[idx] = 0;
            idx += 1;
        }
        checked += 1;
        let total: u32 = n.iter().sum();
        let mut t = RootVec::zero(rank);
        for (b, &c) in psi.roots().iter().zip(&n) {
            t = &t + &(b * c as i32);
        }
        // several n can give the same sum; keep the one with the fewest roots
        let e = targets.entry(t).or_insert((total, n.clone()));
        if total < e.0 {
            *e = (total, n.clone());
        }
    }
    if targets.is_empty() {
        return RigidityReport {
            holds: true,
            checked,
            violation: None,
        };
    }
    let max_n = targets.values().map(|(t, _)| *t).max().unwrap();
    let theta = rs.theta().coords().to_vec();
    let roots = rs.all_roots();
    let in_psi: Vec<bool> = roots.iter().map(|a| psi.contains(a)).collect();

    // state: (sum, uses a root outside Ψ) → parent (previous sum, flag, root index)
    type State = (RootVec, bool);
    let mut levels: Vec<HashMap<State, Option<(State, usize)>>> = Vec::new();
    levels.push(HashMap::from([((RootVec::zero(rank), false), None)]));
    let witness =
        |levels: &Vec<HashMap<State, Option<(State, usize)>>>, mut st: State, mut lvl: usize| {
            let mut out = Vec::new();
            while let Some(Some((prev, ri))) = levels[lvl].get(&st).cloned() {
                out.push(roots[ri].clone());
                st = prev;
                lvl -= 1;
            }
            out
        };
    for level in 1..=max_n {
        let mut next: HashMap<State, Option<(State, usize)>> = HashMap::new();
        let mut useful_sum: HashMap<RootVec, bool> = HashMap::new();
        for st in levels[level as usize - 1].keys() {
            for (ri, a) in roots.iter().enumerate() {
                let sum = &st.0 + a;
                let flag = st.1 || !in_psi[ri];
                let key = (sum, flag);
                if next.contains_key(&key) {
                    continue;
                }
                let remaining = |big_n: u32| (big_n - level) as i64;
                let useful = *useful_sum.entry(key.0.clone()).or_insert_with(|| {
                    targets.iter().any(|(t, (big_n, _))| {
                        *big_n >= level
                            && within_box((t - &key.0).coords(), &theta, remaining(*big_n))
                    })
                });
                if useful {
                    next.insert(key, Some((st.clone(), ri)));
                }
            }
        }
        levels.push(next);
        let lvl = level as usize;
        for (t, (big_n, nvec)) in &targets {
            let shorter = level < *big_n
                && (levels[lvl].contains_key(&(t.clone(), false))
                    || levels[lvl].contains_key(&(t.clone(), true)));
            let off_psi = level == *big_n && levels[lvl].contains_key(&(t.clone(), true));
            if shorter || off_psi {
                let st = if levels[lvl].contains_key(&(t.clone(), true)) {
                    (t.clone(), true)
                } else {
                    (t.clone(), false)
                };
                let m_roots = witness(&levels, st, lvl);
                return RigidityReport {
                    holds: false,
                    checked,
                    violation: Some(RigidityViolation {
                        n: nvec.clone(),
                        m_roots,
                    }),
                };
            }
        }
    }
    RigidityReport {
        holds: true,
        checked,
        violation: None,
    }
}
