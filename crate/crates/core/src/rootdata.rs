//! Root data for the classical types B, C and D.
//!
//! Weights are stored in the fundamental-weight basis (`coords[i] = λ(h_{i+1})`)
//! and roots in the simple-root basis. Nodes are numbered as in Bourbaki, with
//! the public API using 1-based node indices.
//!
//! The invariant form is normalized so that long roots have squared length 2.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_RANK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let name = format!("{family:?}{rank}");
        let min = match family {
            Family::B | Family::C => 2,
            // D3 would silently alias A3
            Family::D => 4,
        };
        if rank < min {
            return Err(Error::InvalidType(name, "rank too small for this family"));
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidType(name, "rank too large"));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The `n` for which this type is written `B_n`, `C_n` or `D_{n+1}`.
    ///
    /// Jacobi-Trudi weights must satisfy `λ(h_i) = 0` for `i ≥ n`.
    pub fn jt_n(&self) -> usize {
        match self.family {
            Family::B | Family::C => self.rank,
            Family::D => self.rank - 1,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => {
                return Err(Error::InvalidType(
                    s.to_string(),
                    "family must be B, C or D",
                ))
            }
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string(), "rank must be a positive integer"))?;
        LieType::new(family, rank)
    }
}

macro_rules! int_vector {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(Vec<i32>);

        impl $name {
            pub fn new(coords: Vec<i32>) -> Self {
                $name(coords)
            }

            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn coords(&self) -> &[i32] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn into_vec(self) -> Vec<i32> {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let s = s.trim();
                if s.is_empty() {
                    return Err(Error::WeightParse(s.to_string()));
                }
                s.split(',')
                    .map(|p| p.trim().parse::<i32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map($name)
                    .map_err(|_| Error::WeightParse(s.to_string()))
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Mul<i32> for &$name {
            type Output = $name;
            fn mul(self, k: i32) -> $name {
                $name(self.0.iter().map(|a| a * k).collect())
            }
        }
    };
}

int_vector!(Weight);
int_vector!(RootVec);

impl Weight {
    /// `ω_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `max{i : λ(h_i) > 0}`, 1-based; `None` for the zero weight.
    pub fn top_node(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c > 0).map(|p| p + 1)
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }
}

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        RootVec(v)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Coefficient of `α_i` (1-based).
    pub fn epsilon(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// A vector of `h*` given either in the weight basis or the root basis.
pub trait HVector {
    fn to_weight(&self, rs: &RootSystem) -> Weight;
    fn len(&self) -> usize;
}

impl HVector for Weight {
    fn to_weight(&self, _rs: &RootSystem) -> Weight {
        self.clone()
    }
    fn len(&self) -> usize {
        self.rank()
    }
}

impl HVector for RootVec {
    fn to_weight(&self, rs: &RootSystem) -> Weight {
        rs.root_to_weight(self)
    }
    fn len(&self) -> usize {
        self.rank()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = α_j(h_i)`; column `j` holds the weight coordinates of `α_j`.
    cartan: Vec<Vec<i32>>,
    /// `d_i = (α_i, α_i) / 2`.
    d: Vec<Rational64>,
    positive_roots: Vec<RootVec>,
    positive_root_weights: Vec<Weight>,
    root_index: HashMap<RootVec, usize>,
    theta: RootVec,
    /// `(ω_i, ω_j)`.
    omega_gram: Vec<Vec<Rational64>>,
    /// `omega_gram * form_scale`, integral.
    omega_gram_int: Vec<Vec<i64>>,
    form_scale: i64,
    /// Inverse Cartan matrix, maps weight coordinates to root coordinates.
    cartan_inv: Vec<Vec<Rational64>>,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        let n = t.rank();
        // Simple roots in the orthonormal ε-basis.
        let mut simple = vec![vec![0i64; n]; n];
        for (i, row) in simple.iter_mut().enumerate().take(n - 1) {
            row[i] = 1;
            row[i + 1] = -1;
        }
        match t.family() {
            Family::B => simple[n - 1][n - 1] = 1,
            Family::C => simple[n - 1][n - 1] = 2,
            Family::D => {
                simple[n - 1][n - 2] = 1;
                simple[n - 1][n - 1] = 1;
            }
        }
        let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let norm = match t.family() {
            Family::C => Rational64::new(1, 2),
            _ => Rational64::one(),
        };
        let gram: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| norm * dot(&simple[i], &simple[j])).collect())
            .collect();
        let d: Vec<Rational64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = gram[i][j] * 2 / gram[i][i];
                        debug_assert!(v.is_integer());
                        *v.numer() as i32
                    })
                    .collect()
            })
            .collect();

        let positive_roots = close_roots(&cartan);
        let theta = positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("nonempty root system");

        let gram_inv = invert(&gram);
        // ω_i = Σ_k M_ik α_k with M = D G^{-1}; (ω_i, ω_j) = M_ji d_i.
        let m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|k| d[i] * gram_inv[i][k]).collect())
            .collect();
        let omega_gram: Vec<Vec<Rational64>> = (0..n)
            .map(|i| (0..n).map(|j| m[j][i] * d[i]).collect())
            .collect();
        let form_scale = omega_gram
            .iter()
            .flatten()
            .chain(d.iter())
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let omega_gram_int = omega_gram
            .iter()
            .map(|row| row.iter().map(|q| (*q * form_scale).to_integer()).collect())
            .collect();
        let cartan_rat: Vec<Vec<Rational64>> = cartan
            .iter()
            .map(|row| row.iter().map(|&a| Rational64::from(a as i64)).collect())
            .collect();
        let cartan_inv = invert(&cartan_rat);

        let mut rs = RootSystem {
            lie_type: t,
            cartan,
            d,
            positive_root_weights: Vec::new(),
            root_index: HashMap::new(),
            positive_roots,
            theta,
            omega_gram,
            omega_gram_int,
            form_scale,
            cartan_inv,
        };
        rs.positive_root_weights = rs
            .positive_roots
            .iter()
            .map(|r| rs.root_to_weight(r))
            .collect();
        rs.root_index = rs
            .positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        rs
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn d(&self) -> &[Rational64] {
        &self.d
    }

    /// Positive roots, ordered by height and then lexicographically.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive_roots
    }

    /// Weight-basis coordinates of the positive roots, in the same order.
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_root_weights
    }

    /// All roots, positive ones first.
    pub fn all_roots(&self) -> Vec<RootVec> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| -r));
        out
    }

    pub fn positive_root_index(&self, r: &RootVec) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    pub fn is_root(&self, r: &RootVec) -> bool {
        self.root_index.contains_key(r) || self.root_index.contains_key(&-r)
    }

    pub fn theta(&self) -> &RootVec {
        &self.theta
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.cartan[k][i - 1]).collect())
    }

    pub fn root_to_weight(&self, r: &RootVec) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * r.0[j]).sum())
                .collect(),
        )
    }

    /// Root-lattice coordinates of `w`, or `None` when `w ∉ Q`.
    pub fn weight_to_root(&self, w: &Weight) -> Option<RootVec> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let c: Rational64 = (0..n)
                .map(|i| self.cartan_inv[j][i] * w.0[i] as i64)
                .fold(Rational64::zero(), |a, b| a + b);
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer() as i32);
        }
        Some(RootVec(out))
    }

    /// `μ ≤ λ` iff `λ − μ ∈ Q⁺`.
    pub fn weight_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.weight_to_root(&(lambda - mu))
            .is_some_and(|r| r.is_nonnegative())
    }

    /// The invariant form on `h*`, exact.
    pub fn bilinear<A: HVector, B: HVector>(&self, a: &A, b: &B) -> Result<Rational64> {
        let n = self.rank();
        for len in [a.len(), b.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: len,
                });
            }
        }
        let (a, b) = (a.to_weight(self), b.to_weight(self));
        let mut acc = Rational64::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += self.omega_gram[i][j] * (a.0[i] as i64 * b.0[j] as i64);
            }
        }
        Ok(acc)
    }

    /// `form_scale() * (a, b)` for two weights, as an integer.
    pub fn form_scaled(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut acc = 0i64;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.omega_gram_int[i];
            for (j, &bj) in b.iter().enumerate() {
                acc += row[j] * ai as i64 * bj as i64;
            }
        }
        acc
    }

    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    /// Applies simple reflections at negative coordinates until `v` is dominant.
    ///
    /// Returns the dominant conjugate and `(−1)^ℓ(w)`, or sign 0 when the
    /// conjugate lies on a wall (some coordinate vanishes).
    pub fn to_dominant_signed(&self, v: &Weight) -> (Weight, i8) {
        let mut w = v.clone();
        let sign = self.dominant_in_place(&mut w.0);
        (w, sign)
    }

    pub(crate) fn dominant_in_place(&self, w: &mut [i32]) -> i8 {
        let n = w.len();
        let mut sign = 1i8;
        while let Some(i) = w.iter().position(|&c| c < 0) {
            let c = w[i];
            for (k, wk) in w.iter_mut().enumerate().take(n) {
                *wk -= c * self.cartan[k][i];
            }
            sign = -sign;
        }
        if w.contains(&0) {
            0
        } else {
            sign
        }
    }

    /// `ε_i(θ)` for every node.
    pub fn epsilon_theta(&self) -> Vec<i32> {
        self.theta.0.clone()
    }
}

/// Positive roots generated from the simple roots by α-string arithmetic.
fn close_roots(cartan: &[Vec<i32>]) -> Vec<RootVec> {
    let n = cartan.len();
    let mut roots: Vec<RootVec> = (1..=n).map(|i| RootVec::simple(n, i)).collect();
    let mut seen: HashSet<RootVec> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                // p = largest k with β − kα_i a root
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe.0[i] -= 1;
                    if seen.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i32 = (0..n).map(|j| cartan[i][j] * beta.0[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

fn invert(m: &[Vec<Rational64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("invertible matrix");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}
