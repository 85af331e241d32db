//! Golay kernels, Turyn's composition and the column-sign structure of the
//! pairs it produces.
//!
//! With a kernel `K` of length `L` as the first argument, `turyn(K, B)`
//! copies the sign relation of column `i` of `B` onto the whole block of
//! columns `L*i .. L*i + L`. Every recipe built here composes kernel-first,
//! so the column-sign profile of the result is the seed kernel's profile with
//! each column stretched by the product of the step lengths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::correlation::first_nonzero_shift;
use crate::error::{Error, Result};
use crate::sequence::{BinarySequence, SequencePair, Sign};
use crate::MAX_LEN;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KernelId {
    K2,
    K10,
    K26,
}

#[allow(clippy::len_without_is_empty)]
impl KernelId {
    pub const ALL: [KernelId; 3] = [KernelId::K2, KernelId::K10, KernelId::K26];

    pub fn len(self) -> usize {
        match self {
            KernelId::K2 => 2,
            KernelId::K10 => 10,
            KernelId::K26 => 26,
        }
    }

    fn rows(self) -> (&'static str, &'static str) {
        match self {
            KernelId::K2 => ("++", "+-"),
            KernelId::K10 => ("++-+-+--++", "++-+++++--"),
            KernelId::K26 => ("++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---"),
        }
    }
}

impl fmt::Display for KernelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelId::K2 => "K2",
            KernelId::K10 => "K10",
            KernelId::K26 => "K26",
        })
    }
}

impl FromStr for KernelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "K2" | "k2" => Ok(KernelId::K2),
            "K10" | "k10" => Ok(KernelId::K10),
            "K26" | "k26" => Ok(KernelId::K26),
            other => Err(Error::UnknownKernel(other.to_string())),
        }
    }
}

/// The binary Golay kernel pair of the given length.
pub fn kernel(id: KernelId) -> SequencePair {
    let (a, b) = id.rows();
    SequencePair::parse(a, b).expect("kernel literals are well formed")
}

/// Whether every nonzero-shift autocorrelation sum vanishes.
pub fn is_gcp(p: &SequencePair) -> bool {
    first_nonzero_shift(p).is_none()
}

fn require_gcp(p: &SequencePair) -> Result<()> {
    match first_nonzero_shift(p) {
        None => Ok(()),
        Some(tau) => Err(Error::NotGolay(tau)),
    }
}

/// Turyn's composition of a length-N GCP `outer = (a; b)` with a length-M
/// GCP `inner = (c; d)`, giving the length-NM GCP
///
/// ```text
/// e = c ⊗ (a+b)/2 − rev(d) ⊗ (b−a)/2
/// f = d ⊗ (a+b)/2 + rev(c) ⊗ (b−a)/2
/// ```
///
/// Both inputs are checked to be GCPs first.
pub fn turyn(outer: &SequencePair, inner: &SequencePair) -> Result<SequencePair> {
    require_gcp(outer)?;
    require_gcp(inner)?;
    let len = outer.len().saturating_mul(inner.len());
    if len > MAX_LEN {
        return Err(Error::TooLong(len));
    }

    let a = outer.first().as_slice();
    let b = outer.second().as_slice();
    // (a+b)/2 and (b-a)/2 take values in {-1, 0, 1}; at every index exactly one is nonzero.
    let half_sum: Vec<i8> = a.iter().zip(b).map(|(&x, &y)| (x + y) / 2).collect();
    let half_diff: Vec<i8> = a.iter().zip(b).map(|(&x, &y)| (y - x) / 2).collect();

    let c = inner.first();
    let d = inner.second();
    let c_rev = c.reverse();
    let d_rev = d.reverse();

    let mut e = Vec::with_capacity(len);
    let mut f = Vec::with_capacity(len);
    for k in 0..inner.len() {
        let (ck, dk) = (c.as_slice()[k], d.as_slice()[k]);
        let (crk, drk) = (c_rev.as_slice()[k], d_rev.as_slice()[k]);
        for (&s, &t) in half_sum.iter().zip(&half_diff) {
            e.push(ck * s - drk * t);
            f.push(dk * s + crk * t);
        }
    }
    SequencePair::new(BinarySequence::from_raw(e), BinarySequence::from_raw(f))
}

/// Element `i` of `turyn(outer, inner)` from the closed per-index form,
/// using `k = i / N` and `j = i mod N`:
///
/// ```text
/// e_i = a_j (c_k + d_{M-1-k}) / 2 + b_j (c_k − d_{M-1-k}) / 2
/// f_i = a_j (d_k − c_{M-1-k}) / 2 + b_j (d_k + c_{M-1-k}) / 2
/// ```
///
/// Unlike [`turyn`] this does not re-verify that the inputs are GCPs.
pub fn turyn_element(outer: &SequencePair, inner: &SequencePair, i: usize) -> Result<(Sign, Sign)> {
    let n = outer.len();
    let m = inner.len();
    if i >= n * m {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: n * m,
        });
    }
    let k = i / n;
    let j = i % n;
    let at = |s: &BinarySequence, idx: usize| i64::from(s.as_slice()[idx]);
    let (aj, bj) = (at(outer.first(), j), at(outer.second(), j));
    let (ck, dk) = (at(inner.first(), k), at(inner.second(), k));
    let (c_mirror, d_mirror) = (at(inner.first(), m - 1 - k), at(inner.second(), m - 1 - k));

    let e = (aj * (ck + d_mirror) + bj * (ck - d_mirror)) / 2;
    let f = (aj * (dk - c_mirror) + bj * (dk + c_mirror)) / 2;
    match (Sign::from_value(e), Sign::from_value(f)) {
        (Some(e), Some(f)) => Ok((e, f)),
        // Only reachable when `outer` is not a binary pair with a_j = ±b_j.
        _ => Err(Error::InvalidElement {
            index: i,
            value: if e.abs() != 1 { e } else { f },
        }),
    }
}

/// An iterated Turyn construction: start from `seed`, then for each step
/// kernel `K` replace the accumulated pair `P` with `turyn(K, P)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GcpRecipe {
    seed: KernelId,
    steps: Vec<KernelId>,
}

/// Coarse shape of a recipe, deciding which column-structure facts apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecipeClass {
    /// Seeded at K2; steps arbitrary.
    BinarySeeded,
    /// K10 or K26 applied to itself only (seed included).
    PurePower(KernelId),
    /// Seeded at K26 with K10 and K26 steps, at least one of them K10.
    MixedK26Seeded,
    /// Seeded at K10 with K10 and K26 steps, at least one of them K26.
    MixedK10Seeded,
    /// Seeded at K10 or K26 with at least one K2 step.
    Other,
}

impl GcpRecipe {
    pub fn new(seed: KernelId, steps: Vec<KernelId>) -> Self {
        GcpRecipe { seed, steps }
    }

    /// `kernel^power`, i.e. the seed followed by `power - 1` copies of itself.
    pub fn power(kernel: KernelId, power: u32) -> Self {
        assert!(power >= 1, "power must be at least 1");
        GcpRecipe::new(kernel, vec![kernel; power as usize - 1])
    }

    /// Length `2^alpha 10^beta 26^gamma` seeded at K2 (`alpha >= 1`). `order`
    /// lists the kernels in the order their blocks of steps are applied;
    /// kernels missing from `order` are appended in K2, K10, K26 order.
    pub fn binary_seeded(alpha: u32, beta: u32, gamma: u32, order: &[KernelId]) -> Self {
        assert!(alpha >= 1, "binary-seeded recipes need alpha >= 1");
        let steps = Self::ordered_steps([alpha - 1, beta, gamma], order);
        GcpRecipe::new(KernelId::K2, steps)
    }

    /// Length `10^beta 26^gamma` seeded at K26 (`gamma >= 1`).
    pub fn k26_seeded(beta: u32, gamma: u32, order: &[KernelId]) -> Self {
        assert!(gamma >= 1, "K26-seeded recipes need gamma >= 1");
        let steps = Self::ordered_steps([0, beta, gamma - 1], order);
        GcpRecipe::new(KernelId::K26, steps)
    }

    fn ordered_steps(counts: [u32; 3], order: &[KernelId]) -> Vec<KernelId> {
        let mut seen = Vec::with_capacity(3);
        for &k in order.iter().chain(KernelId::ALL.iter()) {
            if !seen.contains(&k) {
                seen.push(k);
            }
        }
        seen.into_iter()
            .flat_map(|k| {
                let count = match k {
                    KernelId::K2 => counts[0],
                    KernelId::K10 => counts[1],
                    KernelId::K26 => counts[2],
                };
                std::iter::repeat_n(k, count as usize)
            })
            .collect()
    }

    pub fn seed(&self) -> KernelId {
        self.seed
    }

    pub fn steps(&self) -> &[KernelId] {
        &self.steps
    }

    pub fn kernels(&self) -> impl Iterator<Item = KernelId> + '_ {
        std::iter::once(self.seed).chain(self.steps.iter().copied())
    }

    /// Output length, saturating on overflow.
    pub fn len(&self) -> usize {
        self.kernels()
            .fold(1usize, |acc, k| acc.saturating_mul(k.len()))
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Product of the step lengths: how far each seed column is stretched.
    pub fn stretch(&self) -> usize {
        self.steps
            .iter()
            .fold(1usize, |acc, k| acc.saturating_mul(k.len()))
    }

    /// `(alpha, beta, gamma)` with length `2^alpha 10^beta 26^gamma`.
    pub fn exponents(&self) -> (u32, u32, u32) {
        self.kernels().fold((0, 0, 0), |(a, b, c), k| match k {
            KernelId::K2 => (a + 1, b, c),
            KernelId::K10 => (a, b + 1, c),
            KernelId::K26 => (a, b, c + 1),
        })
    }

    pub fn class(&self) -> RecipeClass {
        let seed = self.seed;
        if seed == KernelId::K2 {
            return RecipeClass::BinarySeeded;
        }
        if self.steps.iter().all(|&k| k == seed) {
            return RecipeClass::PurePower(seed);
        }
        if self.steps.contains(&KernelId::K2) {
            return RecipeClass::Other;
        }
        match seed {
            KernelId::K26 => RecipeClass::MixedK26Seeded,
            _ => RecipeClass::MixedK10Seeded,
        }
    }
}

impl fmt::Display for GcpRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.seed)?;
        for step in &self.steps {
            write!(f, "*{step}")?;
        }
        Ok(())
    }
}

impl FromStr for GcpRecipe {
    type Err = Error;

    /// `K2*K10*K26`: the first factor is the seed, the rest are steps in order.
    fn from_str(s: &str) -> Result<Self> {
        let mut kernels = s.split('*').map(|part| {
            if part.trim().is_empty() {
                Err(Error::MalformedRecipe(s.to_string()))
            } else {
                part.parse::<KernelId>()
            }
        });
        let seed = kernels
            .next()
            .ok_or_else(|| Error::MalformedRecipe(s.to_string()))??;
        let steps = kernels.collect::<Result<Vec<_>>>()?;
        let recipe = GcpRecipe::new(seed, steps);
        if recipe.len() > MAX_LEN {
            return Err(Error::TooLong(recipe.len()));
        }
        Ok(recipe)
    }
}

impl Serialize for GcpRecipe {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GcpRecipe {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn build_gcp(recipe: &GcpRecipe) -> Result<SequencePair> {
    recipe
        .steps
        .iter()
        .try_fold(kernel(recipe.seed), |acc, &step| turyn(&kernel(step), &acc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnSign {
    Same,
    Opposite,
}

impl ColumnSign {
    pub fn flip(self) -> Self {
        match self {
            ColumnSign::Same => ColumnSign::Opposite,
            ColumnSign::Opposite => ColumnSign::Same,
        }
    }

    /// +1 for identical column entries, -1 for opposite ones.
    pub fn product(self) -> i64 {
        match self {
            ColumnSign::Same => 1,
            ColumnSign::Opposite => -1,
        }
    }
}

/// Per-column SAME/OPPOSITE marks of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColumnSignProfile {
    marks: Vec<ColumnSign>,
}

/// A maximal run of equal marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnRun {
    pub start: usize,
    pub len: usize,
    pub sign: ColumnSign,
}

impl ColumnSignProfile {
    pub fn marks(&self) -> &[ColumnSign] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn leading_same_run(&self) -> usize {
        self.marks
            .iter()
            .take_while(|&&m| m == ColumnSign::Same)
            .count()
    }

    pub fn runs(&self) -> Vec<ColumnRun> {
        let mut runs: Vec<ColumnRun> = Vec::new();
        for (i, &sign) in self.marks.iter().enumerate() {
            match runs.last_mut() {
                Some(run) if run.sign == sign => run.len += 1,
                _ => runs.push(ColumnRun {
                    start: i,
                    len: 1,
                    sign,
                }),
            }
        }
        runs
    }

    /// Each mark repeated `factor` times.
    pub fn stretched(&self, factor: usize) -> Self {
        ColumnSignProfile {
            marks: self
                .marks
                .iter()
                .flat_map(|&m| std::iter::repeat_n(m, factor))
                .collect(),
        }
    }
}

pub fn column_sign_profile(p: &SequencePair) -> ColumnSignProfile {
    let marks = p
        .first()
        .as_slice()
        .iter()
        .zip(p.second().as_slice())
        .map(|(a, b)| {
            if a == b {
                ColumnSign::Same
            } else {
                ColumnSign::Opposite
            }
        })
        .collect();
    ColumnSignProfile { marks }
}

/// `a_i + a_{N-1-i} + b_i + b_{N-1-i} = ±2` for every `i < N/2`: a SAME
/// column is mirrored by an OPPOSITE one and vice versa.
pub fn check_quadrature(p: &SequencePair) -> bool {
    let a = p.first().as_slice();
    let b = p.second().as_slice();
    let n = p.len();
    (0..n / 2).all(|i| {
        let s =
            i32::from(a[i]) + i32::from(a[n - 1 - i]) + i32::from(b[i]) + i32::from(b[n - 1 - i]);
        s.abs() == 2
    })
}

/// One `(start, run length, sign)` entry of a kernel's column segmentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KernelSegment {
    pub start: usize,
    pub len: usize,
    pub sign: ColumnSign,
}

const fn seg(start: usize, len: usize, sign: ColumnSign) -> KernelSegment {
    KernelSegment { start, len, sign }
}

static K2_SEGMENTS: [KernelSegment; 2] =
    [seg(0, 1, ColumnSign::Same), seg(1, 1, ColumnSign::Opposite)];
static K10_SEGMENTS: [KernelSegment; 4] = [
    seg(0, 4, ColumnSign::Same),
    seg(4, 1, ColumnSign::Opposite),
    seg(5, 1, ColumnSign::Same),
    seg(6, 4, ColumnSign::Opposite),
];
static K26_SEGMENTS: [KernelSegment; 4] = [
    seg(0, 12, ColumnSign::Same),
    seg(12, 1, ColumnSign::Opposite),
    seg(13, 1, ColumnSign::Same),
    seg(14, 12, ColumnSign::Opposite),
];

/// Column segmentation of a kernel into alternating SAME/OPPOSITE runs.
/// K10 and K26 have four runs; K2 has two.
pub fn kernel_segments(id: KernelId) -> &'static [KernelSegment] {
    match id {
        KernelId::K2 => &K2_SEGMENTS,
        KernelId::K10 => &K10_SEGMENTS,
        KernelId::K26 => &K26_SEGMENTS,
    }
}

/// Outcome of each structural check on a recipe-built pair. `None` means
/// the check does not apply to this recipe's class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockStructureCheck {
    /// Every Turyn step stretched the inner pair's column marks blockwise.
    pub block_propagation: bool,
    pub quadrature: bool,
    /// Expected leading SAME run and whether it holds.
    pub leading_same: Option<(usize, bool)>,
    /// Kernel segments scaled by the stretch factor (pure powers only).
    pub segment_scaling: Option<bool>,
}

impl BlockStructureCheck {
    pub fn holds(&self) -> bool {
        self.block_propagation
            && self.quadrature
            && self.leading_same.is_none_or(|(_, ok)| ok)
            && self.segment_scaling.unwrap_or(true)
    }
}

/// The leading SAME run guaranteed for a recipe class, if any.
pub fn expected_leading_same(recipe: &GcpRecipe) -> Option<usize> {
    let n = recipe.len();
    match recipe.class() {
        RecipeClass::BinarySeeded => Some(n / 2),
        RecipeClass::PurePower(KernelId::K26) | RecipeClass::MixedK26Seeded => Some(12 * (n / 26)),
        RecipeClass::PurePower(KernelId::K10) | RecipeClass::MixedK10Seeded => Some(4 * (n / 10)),
        RecipeClass::PurePower(KernelId::K2) | RecipeClass::Other => None,
    }
}

/// Runs all column-structure checks on `p`, which must equal `build_gcp(recipe)`.
pub fn block_structure(p: &SequencePair, recipe: &GcpRecipe) -> Result<BlockStructureCheck> {
    if p.len() != recipe.len() {
        return Err(Error::RecipeMismatch(recipe.to_string()));
    }

    let mut acc = kernel(recipe.seed);
    let mut block_propagation = true;
    for &step in &recipe.steps {
        let next = turyn(&kernel(step), &acc)?;
        let inner = column_sign_profile(&acc);
        let outer = column_sign_profile(&next);
        block_propagation &= inner.stretched(step.len()) == outer;
        acc = next;
    }
    if &acc != p {
        return Err(Error::RecipeMismatch(recipe.to_string()));
    }

    let profile = column_sign_profile(p);
    let leading_same = expected_leading_same(recipe).map(|run| {
        let ok = profile.marks[..run].iter().all(|&m| m == ColumnSign::Same);
        (run, ok)
    });
    let segment_scaling = match recipe.class() {
        RecipeClass::PurePower(k) if k != KernelId::K2 => {
            let scale = recipe.stretch();
            Some(kernel_segments(k).iter().all(|s| {
                profile.marks[s.start * scale..(s.start + s.len) * scale]
                    .iter()
                    .all(|&m| m == s.sign)
            }))
        }
        _ => None,
    };

    Ok(BlockStructureCheck {
        block_propagation,
        quadrature: check_quadrature(p),
        leading_same,
        segment_scaling,
    })
}

pub fn verify_block_structure(p: &SequencePair, recipe: &GcpRecipe) -> Result<bool> {
    block_structure(p, recipe).map(|c| c.holds())
}
