//! Components of the SU(2) character variety of `Y_n = #_n Σ(2,3,5)`.
//!
//! `Σ(2,3,5)` has the trivial representation `θ` and two irreducibles `α`,
//! `β` with Chern–Simons values `1/120`, `49/120` and Floer gradings `1`,
//! `5`. A component of `χ(Y_n)` is an ordered tuple over `{θ, α, β}`; with
//! `j` copies of `α` and `k` of `β` it has
//! `CS = (j + 49k)/120 mod 1`, `gr = j + 5k mod 8`, and is a product of
//! `i − 1` copies of `SO(3)` where `i = j + k`.
//!
//! The extension certificate enumerates every `(j, k)` and every integer
//! lift `l` of the CS value that could match `Γ_{Y_n}(2n) = 49n/120`, and
//! keeps those whose lifted grading satisfies `gr + dim ≥ 8n − 3`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharvarError {
    #[error("n must be at least 1")]
    ZeroSummands,
    #[error("n = {0} is too large to enumerate 3^n components")]
    TooLarge(u32),
}

/// Largest `n` for which the full list of `3^n` tuples is materialised.
pub const MAX_ENUMERATE: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Irrep {
    Theta,
    Alpha,
    Beta,
}

impl Irrep {
    pub const ALL: [Irrep; 3] = [Irrep::Theta, Irrep::Alpha, Irrep::Beta];

    pub fn symbol(self) -> &'static str {
        match self {
            Irrep::Theta => "θ",
            Irrep::Alpha => "α",
            Irrep::Beta => "β",
        }
    }

    /// `(CS numerator over 120, gr)` of the summand.
    fn data(self) -> (i64, i64) {
        match self {
            Irrep::Theta => (0, 0),
            Irrep::Alpha => (1, 1),
            Irrep::Beta => (49, 5),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentSignature {
    sigma: Vec<Irrep>,
}

impl ComponentSignature {
    pub fn new(sigma: Vec<Irrep>) -> Self {
        Self { sigma }
    }

    pub fn constant(n: usize, r: Irrep) -> Self {
        Self::new(vec![r; n])
    }

    pub fn sigma(&self) -> &[Irrep] {
        &self.sigma
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// Number of `α` entries.
    pub fn j(&self) -> usize {
        self.sigma.iter().filter(|&&r| r == Irrep::Alpha).count()
    }

    /// Number of `β` entries.
    pub fn k(&self) -> usize {
        self.sigma.iter().filter(|&&r| r == Irrep::Beta).count()
    }

    /// Number of irreducible entries.
    pub fn i(&self) -> usize {
        self.j() + self.k()
    }

    pub fn concat(&self, other: &ComponentSignature) -> ComponentSignature {
        let mut sigma = self.sigma.clone();
        sigma.extend_from_slice(&other.sigma);
        Self::new(sigma)
    }
}

impl fmt::Display for ComponentSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.sigma.iter().map(|r| r.symbol()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentData {
    pub cs_mod1: Rational,
    pub gr_mod8: i64,
    pub dim_chi: usize,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
}

fn sums(sig: &ComponentSignature) -> (i64, i64) {
    sig.sigma.iter().fold((0, 0), |(c, g), r| {
        let (dc, dg) = r.data();
        (c + dc, g + dg)
    })
}

pub fn component_data(sig: &ComponentSignature) -> ComponentData {
    let (cs120, gr) = sums(sig);
    let i = sig.i();
    ComponentData {
        cs_mod1: Rational::new(cs120, 120).expect("nonzero denominator").fract_pos(),
        gr_mod8: gr.rem_euclid(8),
        dim_chi: if i == 0 { 0 } else { 3 * (i - 1) },
        dim_r: 3 * i,
    }
}

/// `2^i · C(n, i)`, the number of tuples with exactly `i` irreducible entries.
pub fn expected_count(n: u32, i: u32) -> u64 {
    if i > n {
        return 0;
    }
    let mut binom: u64 = 1;
    for t in 0..i as u64 {
        binom = binom * (n as u64 - t) / (t + 1);
    }
    binom << i
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimCount {
    pub i: usize,
    pub count: u64,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub n: u32,
    pub components: Vec<ComponentSignature>,
    pub by_dim: Vec<DimCount>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.components.len() as u64
    }

    /// Whether every count agrees with `2^i · C(n, i)` and the total is `3^n`.
    pub fn matches_binomial_law(&self) -> bool {
        self.by_dim.iter().all(|d| d.count == expected_count(self.n, d.i as u32))
            && self.total() == 3u64.pow(self.n)
    }

    pub fn to_json(&self, with_components: bool) -> serde_json::Value {
        let mut v = serde_json::json!({
            "n": self.n,
            "total": self.total(),
            "by_dim": self.by_dim,
        });
        if with_components {
            let comps: Vec<serde_json::Value> = self
                .components
                .iter()
                .map(|c| {
                    let d = component_data(c);
                    serde_json::json!({
                        "sigma": c.to_string(),
                        "j": c.j(),
                        "k": c.k(),
                        "cs_mod1": d.cs_mod1,
                        "gr_mod8": d.gr_mod8,
                        "dim_chi": d.dim_chi,
                        "dim_R": d.dim_r,
                    })
                })
                .collect();
            v["components"] = serde_json::Value::Array(comps);
        }
        v
    }
}

/// All `3^n` ordered tuples, in lexicographic order `θ < α < β`, with the
/// number of tuples per count of irreducible entries.
pub fn enumerate_components(n: u32) -> Result<Census, CharvarError> {
    if n == 0 {
        return Err(CharvarError::ZeroSummands);
    }
    if n > MAX_ENUMERATE {
        return Err(CharvarError::TooLarge(n));
    }
    let total = 3usize.pow(n);
    let mut counts = vec![0u64; n as usize + 1];
    let mut components = Vec::with_capacity(total);
    for code in 0..total {
        let mut c = code;
        let mut sigma = vec![Irrep::Theta; n as usize];
        for slot in sigma.iter_mut().rev() {
            *slot = Irrep::ALL[c % 3];
            c /= 3;
        }
        let sig = ComponentSignature::new(sigma);
        counts[sig.i()] += 1;
        components.push(sig);
    }
    let by_dim = counts.into_iter().enumerate().map(|(i, count)| DimCount { i, count }).collect();
    Ok(Census { n, components, by_dim })
}

/// A component together with an integer lift of its CS value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedComponent {
    pub signature: ComponentSignature,
    pub l: i64,
}

impl LiftedComponent {
    pub fn cs_lift(&self) -> Rational {
        let (cs120, _) = sums(&self.signature);
        Rational::from(self.l) + Rational::new(cs120, 120).expect("nonzero denominator")
    }

    pub fn gr_lift(&self) -> i64 {
        let (_, gr) = sums(&self.signature);
        gr + 8 * self.l
    }

    /// `gr_lift − 8·cs_lift`, which does not depend on `l`.
    pub fn lift_invariant(&self) -> Rational {
        Rational::from(self.gr_lift()) - Rational::from(8) * self.cs_lift()
    }
}

/// One `(j, k)` pair examined by [`find_extension_components`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionCandidate {
    pub j: usize,
    pub k: usize,
    /// The unique lift with `CS = 49n/120`, when it is an integer.
    pub l: Option<i64>,
    /// `gr_lift + dim_chi` for that lift.
    pub gr_plus_dim: Option<i64>,
    pub qualifies: bool,
}

impl fmt::Display for ExtensionCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.l, self.gr_plus_dim) {
            (Some(l), Some(g)) => write!(
                f,
                "j={} k={}: l={l}, gr+dim={g} -> {}",
                self.j,
                self.k,
                if self.qualifies { "qualifies" } else { "grading bound fails" }
            ),
            _ => write!(f, "j={} k={}: no integer lift", self.j, self.k),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtensionCertificate {
    pub n: u32,
    pub candidates: Vec<ExtensionCandidate>,
    pub components: Vec<LiftedComponent>,
}

impl ExtensionCertificate {
    /// Whether the only qualifying component is `β^n` with `l = 0`.
    pub fn is_unique_beta(&self) -> bool {
        let beta = ComponentSignature::constant(self.n as usize, Irrep::Beta);
        self.components.len() == 1 && self.components[0].signature == beta && self.components[0].l == 0
    }
}

/// Exhaustive search over `j + k <= n`: keep the components admitting an
/// integer lift `l` with `l + (j + 49k)/120 = 49n/120` and
/// `gr_lift + dim_chi >= 8n − 3`. Qualifying `(j, k)` pairs are expanded
/// into all tuples with those counts.
pub fn find_extension_components(n: u32) -> Result<ExtensionCertificate, CharvarError> {
    if n == 0 {
        return Err(CharvarError::ZeroSummands);
    }
    let n_us = n as usize;
    let mut candidates = Vec::new();
    let mut qualifying = Vec::new();
    for k in 0..=n_us {
        for j in 0..=n_us - k {
            let num = 49 * n as i64 - j as i64 - 49 * k as i64;
            let mut cand = ExtensionCandidate { j, k, l: None, gr_plus_dim: None, qualifies: false };
            if num.rem_euclid(120) == 0 {
                let l = num / 120;
                let i = j + k;
                let dim_chi = if i == 0 { 0 } else { 3 * (i as i64 - 1) };
                let g = j as i64 + 5 * k as i64 + 8 * l + dim_chi;
                cand.l = Some(l);
                cand.gr_plus_dim = Some(g);
                cand.qualifies = g >= 8 * n as i64 - 3;
                if cand.qualifies {
                    qualifying.push((j, k, l));
                }
            }
            candidates.push(cand);
        }
    }
    let mut components = Vec::new();
    for (j, k, l) in qualifying {
        for signature in tuples_with_counts(n_us, j, k) {
            components.push(LiftedComponent { signature, l });
        }
    }
    Ok(ExtensionCertificate { n, candidates, components })
}

fn tuples_with_counts(n: usize, j: usize, k: usize) -> Vec<ComponentSignature> {
    fn go(prefix: &mut Vec<Irrep>, left: [usize; 3], out: &mut Vec<ComponentSignature>) {
        if left == [0, 0, 0] {
            out.push(ComponentSignature::new(prefix.clone()));
            return;
        }
        for (idx, r) in Irrep::ALL.iter().enumerate() {
            if left[idx] > 0 {
                let mut next = left;
                next[idx] -= 1;
                prefix.push(*r);
                go(prefix, next, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), [n - j - k, j, k], &mut out);
    out
}

/// Lower bounds on handle counts of a definite filling of `Y_n # −Y_n`
/// with first Betti number `b1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HandleBounds {
    pub n: u32,
    pub b1: u32,
    pub min_1handles: u32,
    pub min_2handles: u32,
    pub min_23handles: u32,
}

impl HandleBounds {
    pub fn as_tuple(&self) -> (u32, u32, u32) {
        (self.min_1handles, self.min_2handles, self.min_23handles)
    }

    pub fn report(&self) -> String {
        let (n, b1) = (self.n, self.b1);
        format!(
            "n = {n}, b1 = {b1}: the component β^{n} extends, and its representation variety \
             has dimension 3n = {}; a handle decomposition with h1 1-handles embeds it in \
             SU(2)^h1, of dimension 3·h1, and b1 more 1-handles are forced by homology, so \
             h1 >= {}; dually h2 >= {} and h2 + h3 >= {}",
            3 * n,
            self.min_1handles,
            self.min_2handles,
            self.min_23handles
        )
    }
}

pub fn handle_bounds(n: u32, b1: u32) -> Result<HandleBounds, CharvarError> {
    if n == 0 {
        return Err(CharvarError::ZeroSummands);
    }
    Ok(HandleBounds { n, b1, min_1handles: n + b1, min_2handles: n, min_23handles: n + b1 })
}
