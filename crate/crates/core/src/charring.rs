//! Characters of finite-dimensional modules.
//!
//! Simple characters come from Freudenthal's recursion over dominant weights,
//! tensor products from the Brauer-Klimyk signed-reflection rule, and exterior
//! and symmetric powers from Newton's identities on Adams operations.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};
use std::path::Path;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::cache::PersistentCache;
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// Full weight expansion of a simple module `V(λ)`.
#[derive(Clone, Debug)]
pub struct FormalCharacter {
    highest: Weight,
    dominant: BTreeMap<Weight, i64>,
    weights: Vec<(Weight, i64)>,
}

impl FormalCharacter {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    /// Multiplicity of an arbitrary weight.
    pub fn mult(&self, w: &Weight) -> i64 {
        self.weights
            .binary_search_by(|(v, _)| v.cmp(w))
            .map(|k| self.weights[k].1)
            .unwrap_or(0)
    }

    /// Multiplicities of the dominant weights only.
    pub fn dominant(&self) -> &BTreeMap<Weight, i64> {
        &self.dominant
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.weights.iter().map(|(w, m)| (w, *m))
    }

    pub fn num_weights(&self) -> usize {
        self.weights.len()
    }

    pub fn dim(&self) -> i64 {
        self.weights.iter().map(|(_, m)| m).sum()
    }
}

/// A virtual module, written in the basis of simple characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantCharacter {
    mult: BTreeMap<Weight, i64>,
}

impl DominantCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(lambda: Weight) -> Self {
        let mut c = Self::zero();
        c.add_term(lambda, 1);
        c
    }

    /// Checked constructor: every key must be dominant.
    pub fn from_map(mult: BTreeMap<Weight, i64>) -> Result<Self> {
        let mut c = Self::zero();
        for (w, m) in mult {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.to_string()));
            }
            c.add_term(w, m);
        }
        Ok(c)
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        debug_assert!(w.is_dominant(), "non-dominant key {w}");
        if m == 0 {
            return;
        }
        match self.mult.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mult.iter().map(|(w, m)| (w, *m))
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn is_actual(&self) -> bool {
        self.mult.values().all(|&m| m > 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        DominantCharacter {
            mult: self.mult.iter().map(|(w, m)| (w.clone(), m * k)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &DominantCharacter, k: i64) {
        if k == 0 {
            return;
        }
        for (w, m) in &other.mult {
            self.add_term(w.clone(), m * k);
        }
    }

    pub fn as_map(&self) -> &BTreeMap<Weight, i64> {
        &self.mult
    }

    fn from_accumulator(acc: HashMap<Weight, i64>) -> Self {
        DominantCharacter {
            mult: acc.into_iter().filter(|(_, m)| *m != 0).collect(),
        }
    }
}

impl AddAssign<&DominantCharacter> for DominantCharacter {
    fn add_assign(&mut self, rhs: &DominantCharacter) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&DominantCharacter> for DominantCharacter {
    fn sub_assign(&mut self, rhs: &DominantCharacter) {
        self.add_scaled(rhs, -1);
    }
}

impl Neg for &DominantCharacter {
    type Output = DominantCharacter;
    fn neg(self) -> DominantCharacter {
        self.scaled(-1)
    }
}

impl fmt::Display for DominantCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        // highest weights first
        for (k, (w, m)) in self.mult.iter().rev().enumerate() {
            let sign = if *m < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if k > 0 || *m < 0 {
                write!(f, " ")?;
            }
            if m.abs() != 1 {
                write!(f, "{}·", m.abs())?;
            }
            write!(f, "V({w})")?;
        }
        Ok(())
    }
}

/// Graded character `Σ_r t^r ch V[r]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharacter {
    by_degree: BTreeMap<u32, DominantCharacter>,
}

impl GradedCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(degree: u32, layer: DominantCharacter) -> Self {
        let mut g = Self::zero();
        g.add_layer(degree, &layer, 1);
        g
    }

    pub fn layer(&self, degree: u32) -> DominantCharacter {
        self.by_degree.get(&degree).cloned().unwrap_or_default()
    }

    pub fn layers(&self) -> impl Iterator<Item = (u32, &DominantCharacter)> {
        self.by_degree.iter().map(|(d, c)| (*d, c))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.by_degree.keys().next_back().copied()
    }

    pub fn add_term(&mut self, degree: u32, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let layer = self.by_degree.entry(degree).or_default();
        layer.add_term(w, m);
        if layer.is_zero() {
            self.by_degree.remove(&degree);
        }
    }

    pub fn add_layer(&mut self, degree: u32, c: &DominantCharacter, k: i64) {
        let layer = self.by_degree.entry(degree).or_default();
        layer.add_scaled(c, k);
        if layer.is_zero() {
            self.by_degree.remove(&degree);
        }
    }

    /// `self += k · t^shift · other`.
    pub fn add_shifted(&mut self, other: &GradedCharacter, shift: u32, k: i64) {
        for (d, c) in &other.by_degree {
            self.add_layer(d + shift, c, k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.by_degree.is_empty()
    }

    /// Value at `t = 1`.
    pub fn specialize(&self) -> DominantCharacter {
        let mut out = DominantCharacter::zero();
        for c in self.by_degree.values() {
            out += c;
        }
        out
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.by_degree.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.by_degree.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "t·({c})")?,
                _ => write!(f, "t^{d}·({c})")?,
            }
        }
        Ok(())
    }
}

/// Sums all degree layers; with `at_t_1 == false` only the degree-0 layer is kept.
pub fn graded_specialize(g: &GradedCharacter, at_t_1: bool) -> DominantCharacter {
    if at_t_1 {
        g.specialize()
    } else {
        g.layer(0)
    }
}

/// Character computations for one root system, with memoization.
pub struct CharRing {
    rs: Arc<RootSystem>,
    simple: RwLock<HashMap<Weight, Arc<FormalCharacter>>>,
    tensor: RwLock<HashMap<(Weight, Weight), Arc<DominantCharacter>>>,
    store: Option<PersistentCache>,
}

impl CharRing {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        CharRing {
            rs,
            simple: RwLock::new(HashMap::new()),
            tensor: RwLock::new(HashMap::new()),
            store: None,
        }
    }

    /// Like [`CharRing::new`], backed by an append-only NDJSON cache file.
    pub fn with_cache(rs: Arc<RootSystem>, path: &Path) -> std::io::Result<Self> {
        let store = PersistentCache::open(path, rs.lie_type())?;
        let ring = CharRing {
            store: Some(store),
            ..CharRing::new(rs)
        };
        ring.preload();
        Ok(ring)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        self.rs.clone()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    fn preload(&self) {
        let Some(store) = &self.store else { return };
        for (lambda, dominant) in store.simple_entries() {
            if !lambda.is_dominant() || lambda.rank() != self.rank() {
                continue;
            }
            let ch = self.expand(&lambda, dominant);
            // a record is trusted only if its dimension is right
            if u128::try_from(ch.dim()).ok() == Some(self.weyl_dim(&lambda))
                && ch.mult(&lambda) == 1
            {
                self.simple.write().unwrap().insert(lambda, Arc::new(ch));
            }
        }
        for ((a, b), value) in store.tensor_entries() {
            if !(a.is_dominant() && b.is_dominant())
                || a.rank() != self.rank()
                || b.rank() != self.rank()
            {
                continue;
            }
            let Ok(value) = DominantCharacter::from_map(value) else {
                continue;
            };
            let total: u128 = value
                .iter()
                .map(|(w, m)| m.max(0) as u128 * self.weyl_dim(w))
                .sum();
            if value.is_actual() && total == self.weyl_dim(&a) * self.weyl_dim(&b) {
                self.tensor.write().unwrap().insert((a, b), Arc::new(value));
            }
        }
    }

    /// `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
    pub fn weyl_dim(&self, lambda: &Weight) -> u128 {
        let rho = self.rs.rho();
        let lr = lambda + &rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for a in self.rs.positive_root_weights() {
            num *= self.rs.form_scaled(lr.coords(), a.coords());
            den *= self.rs.form_scaled(rho.coords(), a.coords());
        }
        let q = BigRational::new(num, den);
        assert!(q.is_integer(), "Weyl dimension must be integral");
        q.to_integer().to_u128().expect("dimension fits in u128")
    }

    pub fn simple_character(&self, lambda: &Weight) -> Result<Arc<FormalCharacter>> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if let Some(c) = self.simple.read().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let dominant = self.freudenthal(lambda);
        if let Some(store) = &self.store {
            store.put_simple(lambda, &dominant);
        }
        let ch = Arc::new(self.expand(lambda, dominant));
        self.simple
            .write()
            .unwrap()
            .entry(lambda.clone())
            .or_insert_with(|| ch.clone());
        Ok(ch)
    }

    /// Dominant weight multiplicities of `V(λ)`.
    fn freudenthal(&self, lambda: &Weight) -> BTreeMap<Weight, i64> {
        let rs = &*self.rs;
        let roots = rs.positive_root_weights();
        // dominant weights ≤ λ are linked to λ through dominant weights by
        // subtracting single positive roots
        let mut dominant: Vec<Weight> = vec![lambda.clone()];
        let mut seen: HashSet<Weight> = dominant.iter().cloned().collect();
        let mut k = 0;
        while k < dominant.len() {
            let mu = dominant[k].clone();
            for a in roots {
                let nu = &mu - a;
                if nu.is_dominant() && seen.insert(nu.clone()) {
                    dominant.push(nu);
                }
            }
            k += 1;
        }
        let depth = |mu: &Weight| -> i32 {
            rs.weight_to_root(&(lambda - mu))
                .expect("λ − μ lies in the root lattice")
                .height()
        };
        dominant.sort_by_cached_key(|mu| (depth(mu), mu.clone()));

        let rho = rs.rho();
        let lr = lambda + &rho;
        let top = rs.form_scaled(lr.coords(), lr.coords());
        let mut mult: HashMap<Weight, i64> = HashMap::new();
        mult.insert(lambda.clone(), 1);
        let mut probe = Weight::zero(rs.rank());
        for mu in dominant.iter().skip(1) {
            let mut sum = 0i64;
            for a in roots {
                let mut nu = mu + a;
                loop {
                    probe.coords_mut().copy_from_slice(nu.coords());
                    rs.dominant_in_place(probe.coords_mut());
                    let m = mult.get(&probe).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    sum += m * rs.form_scaled(nu.coords(), a.coords());
                    nu = &nu + a;
                }
            }
            let mr = mu + &rho;
            let denom = top - rs.form_scaled(mr.coords(), mr.coords());
            assert!(
                denom > 0 && (2 * sum) % denom == 0,
                "Freudenthal step not integral"
            );
            let m = 2 * sum / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
            }
        }
        mult.into_iter().collect()
    }

    /// Expands dominant multiplicities over Weyl orbits.
    fn expand(&self, lambda: &Weight, dominant: BTreeMap<Weight, i64>) -> FormalCharacter {
        let rs = &*self.rs;
        let n = rs.rank();
        let mut weights = Vec::new();
        for (mu, &m) in &dominant {
            let mut orbit: Vec<Weight> = vec![mu.clone()];
            let mut seen: HashSet<Weight> = orbit.iter().cloned().collect();
            let mut k = 0;
            while k < orbit.len() {
                let v = orbit[k].clone();
                for i in 1..=n {
                    let c = v.coords()[i - 1];
                    if c > 0 {
                        let w = &v - &(&rs.simple_root_weight(i) * c);
                        if seen.insert(w.clone()) {
                            orbit.push(w);
                        }
                    }
                }
                k += 1;
            }
            weights.extend(orbit.into_iter().map(|w| (w, m)));
        }
        weights.sort();
        FormalCharacter {
            highest: lambda.clone(),
            dominant,
            weights,
        }
    }

    /// `V(κ) ⊗ V(λ)` for two dominant weights, memoized.
    pub fn tensor_simple(&self, kappa: &Weight, lambda: &Weight) -> Result<Arc<DominantCharacter>> {
        let key = if kappa <= lambda {
            (kappa.clone(), lambda.clone())
        } else {
            (lambda.clone(), kappa.clone())
        };
        if let Some(c) = self.tensor.read().unwrap().get(&key) {
            return Ok(c.clone());
        }
        if key.0.is_zero() {
            return Ok(Arc::new(DominantCharacter::simple(key.1.clone())));
        }
        let (ca, cb) = (
            self.simple_character(&key.0)?,
            self.simple_character(&key.1)?,
        );
        // iterate over the weights of the smaller factor
        let (small, big) = if ca.num_weights() <= cb.num_weights() {
            (ca, &key.1)
        } else {
            (cb, &key.0)
        };
        let mut acc = HashMap::new();
        self.brauer_klimyk(big, 1, small.iter(), &mut acc);
        let result = Arc::new(DominantCharacter::from_accumulator(acc));
        if let Some(store) = &self.store {
            store.put_tensor(&key.0, &key.1, &result);
        }
        self.tensor.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    /// `acc += m · (V(κ) ⊗ F)` for a Weyl-invariant formal character `F`.
    fn brauer_klimyk<'a>(
        &self,
        kappa: &Weight,
        m: i64,
        formal: impl Iterator<Item = (&'a Weight, i64)>,
        acc: &mut HashMap<Weight, i64>,
    ) {
        let rs = &*self.rs;
        let n = rs.rank();
        let mut buf = Weight::zero(n);
        for (v, mv) in formal {
            let c = buf.coords_mut();
            for i in 0..n {
                c[i] = kappa.coords()[i] + v.coords()[i] + 1;
            }
            let sign = rs.dominant_in_place(c);
            if sign == 0 {
                continue;
            }
            for x in c.iter_mut() {
                *x -= 1;
            }
            *acc.entry(buf.clone()).or_insert(0) += sign as i64 * m * mv;
        }
    }

    /// Decomposes `(Σ_κ M(κ) V(κ)) ⊗ V(λ)` into simples.
    pub fn tensor_multiplicity(
        &self,
        m: &DominantCharacter,
        lambda: &Weight,
    ) -> Result<DominantCharacter> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let mut out = DominantCharacter::zero();
        for (kappa, mk) in m.iter() {
            out.add_scaled(&*self.tensor_simple(kappa, lambda)?, mk);
        }
        Ok(out)
    }

    /// Product in the representation ring.
    pub fn product(
        &self,
        a: &DominantCharacter,
        b: &DominantCharacter,
    ) -> Result<DominantCharacter> {
        let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = DominantCharacter::zero();
        for (nu, mn) in b.iter() {
            out.add_scaled(&self.tensor_multiplicity(a, nu)?, mn);
        }
        Ok(out)
    }

    pub fn dim(&self, c: &DominantCharacter) -> i128 {
        c.iter()
            .map(|(w, m)| m as i128 * self.weyl_dim(w) as i128)
            .sum()
    }

    /// Full weight expansion of a virtual character.
    pub fn formal(&self, c: &DominantCharacter) -> Result<HashMap<Weight, i64>> {
        let mut acc: HashMap<Weight, i64> = HashMap::new();
        for (kappa, m) in c.iter() {
            for (w, mw) in self.simple_character(kappa)?.iter() {
                *acc.entry(w.clone()).or_insert(0) += m * mw;
            }
        }
        acc.retain(|_, m| *m != 0);
        Ok(acc)
    }

    /// Writes a Weyl-invariant formal character in the basis of simple characters.
    pub fn decompose(&self, formal: &HashMap<Weight, i64>) -> DominantCharacter {
        let mut acc = HashMap::new();
        self.brauer_klimyk(
            &Weight::zero(self.rank()),
            1,
            formal.iter().map(|(w, m)| (w, *m)),
            &mut acc,
        );
        DominantCharacter::from_accumulator(acc)
    }

    pub fn exterior_power(&self, m: &DominantCharacter, s: usize) -> Result<DominantCharacter> {
        self.newton_power(m, s, true)
    }

    pub fn symmetric_power(&self, m: &DominantCharacter, s: usize) -> Result<DominantCharacter> {
        self.newton_power(m, s, false)
    }

    /// `s·e_s = Σ_k (−1)^{k−1} ψ^k(M) e_{s−k}` and `s·h_s = Σ_k ψ^k(M) h_{s−k}`.
    fn newton_power(
        &self,
        m: &DominantCharacter,
        s: usize,
        exterior: bool,
    ) -> Result<DominantCharacter> {
        if !m.is_actual() {
            return Err(Error::NegativeMultiplicity);
        }
        let formal: Vec<(Weight, i64)> = self.formal(m)?.into_iter().collect();
        let adams: Vec<Vec<(Weight, i64)>> = (1..=s as i32)
            .map(|k| formal.iter().map(|(w, mw)| (w * k, *mw)).collect())
            .collect();
        let mut powers = vec![DominantCharacter::simple(Weight::zero(self.rank()))];
        for j in 1..=s {
            let mut acc: HashMap<Weight, i64> = HashMap::new();
            for k in 1..=j {
                let sign = if exterior && k % 2 == 0 { -1 } else { 1 };
                for (kappa, mk) in powers[j - k].iter() {
                    self.brauer_klimyk(
                        kappa,
                        sign * mk,
                        adams[k - 1].iter().map(|(w, x)| (w, *x)),
                        &mut acc,
                    );
                }
            }
            let mut next = HashMap::new();
            for (w, v) in acc {
                if v == 0 {
                    continue;
                }
                if v % j as i64 != 0 {
                    return Err(Error::Invariant(format!("Newton step {j} not divisible")));
                }
                next.insert(w, v / j as i64);
            }
            powers.push(DominantCharacter::from_accumulator(next));
        }
        Ok(powers.pop().unwrap())
    }

    /// The adjoint module `V(θ)`.
    pub fn adjoint(&self) -> DominantCharacter {
        DominantCharacter::simple(self.rs.root_to_weight(self.rs.theta()))
    }

    pub fn flush_cache(&self) -> std::io::Result<()> {
        match &self.store {
            Some(s) => s.flush(),
            None => Ok(()),
        }
    }
}
