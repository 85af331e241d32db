//! Odd-length Z-complementary pairs by single-symbol insertion into GCPs,
//! their predicted autocorrelation-sum profiles, and classification of
//! arbitrary pairs.
//!
//! Inserting `x` at the front of `a` and `y` at the front of `b`, where
//! `(a; b)` is a GCP of length N, leaves an autocorrelation sum of
//! `x a_{τ-1} + y b_{τ-1}` at every shift `1 <= τ <= N`. That is zero when
//! `x y` and column `τ-1` disagree in sign, and ±2 otherwise. End insertion
//! reads column `N-τ` instead. Knowing which columns of a Turyn-built GCP are
//! SAME or OPPOSITE is therefore enough to predict the whole profile.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::correlation::{aacf, aacs_profile, correlate, CorrelationProfile};
use crate::error::{Error, Result};
use crate::golay::{build_gcp, is_gcp, kernel_segments, GcpRecipe, RecipeClass};
use crate::sequence::{BinarySequence, SequencePair, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZcpType {
    #[serde(rename = "1")]
    Type1,
    #[serde(rename = "2")]
    Type2,
}

impl fmt::Display for ZcpType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZcpType::Type1 => "Type-I",
            ZcpType::Type2 => "Type-II",
        })
    }
}

impl FromStr for ZcpType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "I" | "type1" | "Type-I" => Ok(ZcpType::Type1),
            "2" | "II" | "type2" | "Type-II" => Ok(ZcpType::Type2),
            other => Err(Error::PairFormat(format!("unknown ZCP type {other:?}"))),
        }
    }
}

/// A value for each of the two ZCP types.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PerType<T> {
    pub type1: T,
    pub type2: T,
}

impl<T> PerType<T> {
    pub fn get(&self, t: ZcpType) -> &T {
        match t {
            ZcpType::Type1 => &self.type1,
            ZcpType::Type2 => &self.type2,
        }
    }
}

/// Zero-correlation-zone classification of a pair.
///
/// `type1_zcz` is the largest Z with a zero sum at every shift `1..Z`;
/// `type2_zcz` the largest Z with zeros on `N-Z+1..N`. Both are at least 1.
/// Out-of-zone lists hold magnitudes in increasing shift order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZcpReport {
    pub n: usize,
    pub type1_zcz: usize,
    pub type2_zcz: usize,
    pub profile: CorrelationProfile,
    pub out_of_zone: PerType<Vec<u64>>,
    pub z_optimal: PerType<bool>,
    pub optimal: PerType<bool>,
}

impl ZcpReport {
    pub fn from_profile(profile: CorrelationProfile) -> Self {
        let v = profile.values();
        let n = v.len();
        let zeros_from_start = v.iter().skip(1).take_while(|&&s| s == 0).count();
        let zeros_from_end = v.iter().skip(1).rev().take_while(|&&s| s == 0).count();
        let type1_zcz = zeros_from_start + 1;
        let type2_zcz = zeros_from_end + 1;

        let mags = profile.magnitudes();
        let out1: Vec<u64> = mags.get(type1_zcz..).unwrap_or_default().to_vec();
        let out2: Vec<u64> = mags
            .get(1..n.saturating_sub(type2_zcz) + 1)
            .unwrap_or_default()
            .to_vec();

        let bound = (n % 2 == 1).then_some(n.div_ceil(2));
        let z1 = bound == Some(type1_zcz);
        let z2 = bound == Some(type2_zcz);
        ZcpReport {
            n,
            type1_zcz,
            type2_zcz,
            optimal: PerType {
                type1: z1 && out1.iter().all(|&m| m == 2),
                type2: z2 && out2.iter().all(|&m| m == 2),
            },
            z_optimal: PerType {
                type1: z1,
                type2: z2,
            },
            out_of_zone: PerType {
                type1: out1,
                type2: out2,
            },
            profile,
        }
    }

    pub fn zcz(&self, t: ZcpType) -> usize {
        match t {
            ZcpType::Type1 => self.type1_zcz,
            ZcpType::Type2 => self.type2_zcz,
        }
    }

    pub fn is_optimal(&self, t: ZcpType) -> bool {
        *self.optimal.get(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

pub fn classify(p: &SequencePair) -> ZcpReport {
    ZcpReport::from_profile(aacs_profile(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InsertionPosition {
    /// r = 0
    Front,
    /// r = N
    End,
    /// r = N/2, even N only
    Middle,
}

impl InsertionPosition {
    pub fn index(self, len: usize) -> Result<usize> {
        match self {
            InsertionPosition::Front => Ok(0),
            InsertionPosition::End => Ok(len),
            InsertionPosition::Middle if len.is_multiple_of(2) => Ok(len / 2),
            InsertionPosition::Middle => Err(Error::InadmissibleInsertion { r: len / 2, len }),
        }
    }
}

impl FromStr for InsertionPosition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "front" => Ok(InsertionPosition::Front),
            "end" => Ok(InsertionPosition::End),
            "middle" => Ok(InsertionPosition::Middle),
            other => Err(Error::PairFormat(format!(
                "unknown insertion position {other:?}"
            ))),
        }
    }
}

impl fmt::Display for InsertionPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InsertionPosition::Front => "front",
            InsertionPosition::End => "end",
            InsertionPosition::Middle => "middle",
        })
    }
}

/// Where to insert, and the symbols `x` (first row) and `y` (second row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertionSpec {
    pub position: InsertionPosition,
    pub x: Sign,
    pub y: Sign,
}

impl InsertionSpec {
    pub fn new(position: InsertionPosition, x: Sign, y: Sign) -> Self {
        InsertionSpec { position, x, y }
    }

    /// Default symbols that aim the front/end constructions at `target`.
    /// Front insertion wants opposite symbols for Type-I, end insertion
    /// identical ones; the other type takes the complement. Middle
    /// insertion only targets Type-II and uses `(+1, +1)` either way.
    pub fn for_target(position: InsertionPosition, target: ZcpType) -> Self {
        use InsertionPosition::*;
        let opposite = matches!(
            (position, target),
            (Front, ZcpType::Type1) | (End, ZcpType::Type2)
        );
        let y = if opposite && position != Middle {
            Sign::Minus
        } else {
            Sign::Plus
        };
        InsertionSpec::new(position, Sign::Plus, y)
    }

    pub fn symbol_product(&self) -> i64 {
        i64::from(self.x.value() * self.y.value())
    }
}

/// Inclusive shift range `lo..=hi` with a common |sum|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProfileSegment {
    pub lo: usize,
    pub hi: usize,
    pub mag: u64,
}

/// Magnitude profile expected from a construction. The first segment is
/// always the in-phase shift `0..=0` with magnitude `2 * length`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PredictedProfile {
    segments: Vec<ProfileSegment>,
}

impl PredictedProfile {
    fn new(length: usize, tail: Vec<ProfileSegment>) -> Self {
        let mut segments = Vec::with_capacity(tail.len() + 1);
        segments.push(ProfileSegment {
            lo: 0,
            hi: 0,
            mag: 2 * length as u64,
        });
        segments.extend(tail);
        PredictedProfile { segments }
    }

    pub fn segments(&self) -> &[ProfileSegment] {
        &self.segments
    }

    /// Sequence length the profile describes.
    pub fn length(&self) -> usize {
        self.segments.last().map_or(0, |s| s.hi + 1)
    }

    pub fn magnitudes(&self) -> Vec<u64> {
        self.segments
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.mag, s.hi - s.lo + 1))
            .collect()
    }

    pub fn matches(&self, profile: &CorrelationProfile) -> bool {
        self.magnitudes() == profile.magnitudes()
    }

    /// ZCZ width implied by the leading (Type-I) or trailing (Type-II) zero segment.
    pub fn zcz(&self, t: ZcpType) -> usize {
        let tail = &self.segments[1..];
        let zero_run = match t {
            ZcpType::Type1 => tail.first(),
            ZcpType::Type2 => tail.last(),
        };
        match zero_run {
            Some(s) if s.mag == 0 => s.hi - s.lo + 2,
            _ => 1,
        }
    }
}

/// Which known family a (recipe, insertion) combination belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionFamily {
    /// K2-seeded GCP, front or end insertion: two-segment profile.
    BinarySeeded,
    /// Pure K10 or K26 power: four-segment profile from the kernel runs.
    KernelPower,
    /// K26 seed with K10/K26 steps: four-segment profile from K26's runs.
    MixedK26Seeded,
    /// K2-seeded GCP with middle insertion: optimal Type-II.
    MiddleSplit,
}

fn family(recipe: &GcpRecipe, position: InsertionPosition) -> Result<ConstructionFamily> {
    let class = recipe.class();
    let unsupported = |reason: String, nearest: &str| Error::Unsupported {
        reason,
        nearest: nearest.to_string(),
    };
    match (position, class) {
        (InsertionPosition::Middle, RecipeClass::BinarySeeded) => {
            Ok(ConstructionFamily::MiddleSplit)
        }
        (InsertionPosition::Middle, _) => Err(unsupported(
            format!("middle insertion into {recipe} has no profile guarantee"),
            "middle insertion into a K2-seeded recipe (e.g. K2*...)",
        )),
        (_, RecipeClass::BinarySeeded) => Ok(ConstructionFamily::BinarySeeded),
        (_, RecipeClass::PurePower(_)) => Ok(ConstructionFamily::KernelPower),
        (_, RecipeClass::MixedK26Seeded) => Ok(ConstructionFamily::MixedK26Seeded),
        (_, RecipeClass::MixedK10Seeded) => Err(unsupported(
            format!("{recipe} is K10-seeded with K26 steps"),
            "the same kernels reordered with K26 as the seed",
        )),
        (_, RecipeClass::Other) => Err(unsupported(
            format!("{recipe} applies K2 steps to a K10/K26 seed"),
            "a K2-seeded recipe with the same factors",
        )),
    }
}

/// The |sum| profile that inserting per `spec` into `build_gcp(recipe)` must
/// produce, derived only from the seed kernel's column runs.
pub fn predicted_profile(recipe: &GcpRecipe, spec: &InsertionSpec) -> Result<PredictedProfile> {
    let fam = family(recipe, spec.position)?;
    let n = recipe.len();
    let out_len = n + 1;

    if fam == ConstructionFamily::MiddleSplit {
        let half = n / 2;
        return Ok(PredictedProfile::new(
            out_len,
            vec![
                ProfileSegment {
                    lo: 1,
                    hi: half,
                    mag: 2,
                },
                ProfileSegment {
                    lo: half + 1,
                    hi: n,
                    mag: 0,
                },
            ],
        ));
    }

    // Column c of the GCP lies in seed run s iff start*X <= c < (start+len)*X.
    let stretch = recipe.stretch();
    let xy = spec.symbol_product();
    let mut tail: Vec<ProfileSegment> = kernel_segments(recipe.seed())
        .iter()
        .map(|s| {
            let mag = if xy * s.sign.product() == -1 { 0 } else { 2 };
            let (first_col, last_col) = (s.start * stretch, (s.start + s.len) * stretch - 1);
            match spec.position {
                // shift τ reads column τ - 1
                InsertionPosition::Front => ProfileSegment {
                    lo: first_col + 1,
                    hi: last_col + 1,
                    mag,
                },
                // shift τ reads column N - τ
                _ => ProfileSegment {
                    lo: n - last_col,
                    hi: n - first_col,
                    mag,
                },
            }
        })
        .collect();
    tail.sort_by_key(|s| s.lo);
    Ok(PredictedProfile::new(out_len, tail))
}

/// A built insertion pair with its measured report and, when the
/// combination belongs to a known family, the predicted profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub recipe: GcpRecipe,
    pub spec: InsertionSpec,
    pub family: Option<ConstructionFamily>,
    pub pair: SequencePair,
    pub report: ZcpReport,
    pub prediction: Option<PredictedProfile>,
}

impl Construction {
    /// `None` in measure-only mode.
    pub fn prediction_holds(&self) -> Option<bool> {
        self.prediction
            .as_ref()
            .map(|p| p.matches(&self.report.profile))
    }
}

fn build_insertion(recipe: &GcpRecipe, spec: &InsertionSpec) -> Result<(SequencePair, ZcpReport)> {
    let base = build_gcp(recipe)?;
    let r = spec.position.index(base.len())?;
    let pair = base.insert(r, spec.x, r, spec.y)?;
    let report = classify(&pair);
    Ok((pair, report))
}

/// Builds the inserted pair for a supported combination, with its prediction.
/// Unsupported combinations are an error naming the closest supported one.
pub fn construct_obzcp(recipe: &GcpRecipe, spec: &InsertionSpec) -> Result<Construction> {
    let fam = family(recipe, spec.position)?;
    let prediction = predicted_profile(recipe, spec)?;
    let (pair, report) = build_insertion(recipe, spec)?;
    Ok(Construction {
        recipe: recipe.clone(),
        spec: *spec,
        family: Some(fam),
        pair,
        report,
        prediction: Some(prediction),
    })
}

/// Like [`construct_obzcp`], but unsupported combinations are built and
/// classified without a prediction.
pub fn measure_obzcp(recipe: &GcpRecipe, spec: &InsertionSpec) -> Result<Construction> {
    match construct_obzcp(recipe, spec) {
        Err(Error::Unsupported { .. }) => {
            let (pair, report) = build_insertion(recipe, spec)?;
            Ok(Construction {
                recipe: recipe.clone(),
                spec: *spec,
                family: None,
                pair,
                report,
                prediction: None,
            })
        }
        other => other,
    }
}

fn insertion_sum_checked(p: &SequencePair, tau: usize) -> Result<()> {
    if tau == 0 || tau > p.len() {
        return Err(Error::ShiftOutOfRange {
            tau: tau as i64,
            len: p.len(),
        });
    }
    if !is_gcp(p) {
        return Err(Error::NotGolay(
            crate::correlation::first_nonzero_shift(p).unwrap_or(0),
        ));
    }
    Ok(())
}

/// Autocorrelation sum at `tau` after front insertion of `(x, y)` into the
/// GCP `p`: `x a_{τ-1} + y b_{τ-1}`, valid for `1 <= τ <= N`.
pub fn front_insertion_sum(p: &SequencePair, x: Sign, y: Sign, tau: usize) -> Result<i64> {
    insertion_sum_checked(p, tau)?;
    let col = tau - 1;
    Ok(i64::from(
        x.value() * p.first().as_slice()[col] + y.value() * p.second().as_slice()[col],
    ))
}

/// End-insertion counterpart of [`front_insertion_sum`]: `x a_{N-τ} + y b_{N-τ}`.
pub fn end_insertion_sum(p: &SequencePair, x: Sign, y: Sign, tau: usize) -> Result<i64> {
    insertion_sum_checked(p, tau)?;
    let col = p.len() - tau;
    Ok(i64::from(
        x.value() * p.first().as_slice()[col] + y.value() * p.second().as_slice()[col],
    ))
}

/// Autocorrelation of `a.insert(r, x)` at `0 < tau <= N` from the closed
/// forms for `r` in `{0, N/2, N}`, expressed through correlations of `a`
/// and (for the middle case) its two halves.
pub fn inserted_aacf(a: &BinarySequence, r: usize, x: Sign, tau: usize) -> Result<i64> {
    let n = a.len();
    if tau == 0 || tau > n {
        return Err(Error::ShiftOutOfRange {
            tau: tau as i64,
            len: n,
        });
    }
    let v = a.as_slice();
    let x = i64::from(x.value());
    let at = |i: usize| i64::from(v[i]);
    let rho = |t: usize| {
        if t < n {
            aacf(a, t).expect("in range")
        } else {
            0
        }
    };

    if r == 0 {
        return Ok(x * at(tau - 1) + rho(tau));
    }
    if r == n {
        return Ok(x * at(n - tau) + rho(tau));
    }
    if !n.is_multiple_of(2) || r != n / 2 {
        return Err(Error::InadmissibleInsertion { r, len: n });
    }

    let (lo, hi) = v.split_at(r);
    // ρ_{hi,lo}(s) for signed s: positive shifts pair hi[k] with lo[k+s].
    let cross_hi_lo = |s: i64| -> i64 {
        if s >= 0 {
            correlate(hi, lo, s as usize)
        } else {
            correlate(lo, hi, (-s) as usize)
        }
    };
    let shift = r as i64 - tau as i64 + 1;
    Ok(match tau.cmp(&r) {
        std::cmp::Ordering::Less => {
            correlate(lo, lo, tau)
                + x * at(r - tau)
                + cross_hi_lo(shift)
                + x * at(r + tau - 1)
                + correlate(hi, hi, tau)
        }
        std::cmp::Ordering::Equal => x * at(r - tau) + cross_hi_lo(shift) + x * at(r + tau - 1),
        std::cmp::Ordering::Greater => cross_hi_lo(shift),
    })
}

/// Checks, on a length-2N pair with halves `(c1 | c2; d1 | d2)`, that
/// `ρ_{c1} + ρ_{c2} + ρ_{d1} + ρ_{d2}` vanishes at every nonzero shift and
/// `ρ_{c2,c1} + ρ_{d2,d1}` vanishes at every shift. Odd lengths fail.
pub fn middle_pair_identities(p: &SequencePair) -> bool {
    let (Some((c1, c2)), Some((d1, d2))) = (p.first().halves(), p.second().halves()) else {
        return false;
    };
    let (c1, c2, d1, d2) = (c1.as_slice(), c2.as_slice(), d1.as_slice(), d2.as_slice());
    let h = c1.len();
    let halves_vanish = (1..h).all(|t| {
        correlate(c1, c1, t) + correlate(c2, c2, t) + correlate(d1, d1, t) + correlate(d2, d2, t)
            == 0
    });
    let cross_vanish = (0..h).all(|t| {
        correlate(c2, c1, t) + correlate(d2, d1, t) == 0
            && correlate(c1, c2, t) + correlate(d1, d2, t) == 0
    });
    halves_vanish && cross_vanish
}

/// Whether `predicted_profile` covers this recipe and insertion position.
pub fn supports_prediction(recipe: &GcpRecipe, position: InsertionPosition) -> bool {
    family(recipe, position).is_ok()
}
