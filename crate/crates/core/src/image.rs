//! Gray images of cyclic codes: binary code sets of length 4n, their parameters,
//! 4-quasi-cyclicity and linearity, and the best-code search over one length.

use std::cmp::Reverse;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::{enumerate_all, CrtProfile, CyclicCode};
use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::gray::{nu_bits, packed_gray, BinaryWord};
use crate::linalg::{PackedZ4, DEFAULT_ENUM_CAP_BITS};

/// Images with at most `2^22` words are stored explicitly.
pub const DEFAULT_MATERIALIZE_BITS: u32 = 22;

/// Pairwise distance cross-checks run on images of at most `2^12` words.
pub const PAIRWISE_CHECK_BITS: u32 = 12;

/// Limits shared by parameter computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub enum_bits: u32,
    pub materialize_bits: u32,
    pub code_budget: u128,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            enum_bits: DEFAULT_ENUM_CAP_BITS,
            materialize_bits: DEFAULT_MATERIALIZE_BITS,
            code_budget: crate::cyclic::DEFAULT_CODE_BUDGET,
        }
    }
}

/// How the set-level properties of an image were decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    /// Scan of the explicit word set.
    Set,
    /// Exact test on generators of the source code.
    Algebraic,
}

impl CheckMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckMode::Set => "set",
            CheckMode::Algebraic => "algebraic",
        }
    }
}

/// A binary code of length `4n`, either as a sorted word list or backed by its source code.
#[derive(Clone, Debug)]
pub struct BinaryCodeSet {
    length: usize,
    size: u128,
    words: Option<Vec<u128>>,
    source: Option<CyclicCode>,
}

impl BinaryCodeSet {
    /// `Φ(C)`; materialized when `log2 |C| <= materialize_bits`.
    pub fn gray_image(c: &CyclicCode, materialize_bits: u32) -> BinaryCodeSet {
        let n = c.n();
        let s = c.log2_size();
        let words = (s <= materialize_bits).then(|| {
            let total = 1u64 << s;
            let chunk = 1u64 << 14;
            let mut words: Vec<u128> = (0..total.div_ceil(chunk))
                .into_par_iter()
                .flat_map_iter(|k| c.basis().enumerate_range(k * chunk, (k + 1) * chunk).map(move |p| packed_gray(p, n)))
                .collect();
            words.par_sort_unstable();
            words
        });
        BinaryCodeSet { length: 4 * n, size: 1u128 << s, words, source: Some(c.clone()) }
    }

    /// An explicit set of words of equal length (duplicates are merged).
    pub fn from_words(length: usize, words: &[BinaryWord]) -> Result<BinaryCodeSet> {
        if length % 4 != 0 || length == 0 || length > BinaryWord::MAX_LEN {
            return Err(Error::BadLength(length));
        }
        if let Some(w) = words.iter().find(|w| w.len() != length) {
            return Err(Error::LengthMismatch(length, w.len()));
        }
        let mut bits: Vec<u128> = words.iter().map(|w| w.bits()).collect();
        bits.sort_unstable();
        bits.dedup();
        Ok(BinaryCodeSet { length, size: bits.len() as u128, words: Some(bits), source: None })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> u128 {
        self.size
    }

    /// `log2` of the size, rounded down.
    pub fn log2_size(&self) -> u32 {
        self.size.checked_ilog2().unwrap_or(0)
    }

    pub fn is_materialized(&self) -> bool {
        self.words.is_some()
    }

    /// Raw words in increasing order; bit `i` is coordinate `i`.
    pub fn raw_words(&self) -> Result<&[u128]> {
        self.words.as_deref().ok_or(Error::NotMaterialized)
    }

    pub fn words(&self) -> Result<Vec<BinaryWord>> {
        Ok(self.raw_words()?.iter().map(|&b| BinaryWord::new(self.length, b)).collect())
    }

    fn contains_bits(&self, bits: u128) -> bool {
        match (&self.words, &self.source) {
            (Some(w), _) => w.binary_search(&bits).is_ok(),
            (None, Some(c)) => c.basis().contains_packed(crate::gray::packed_gray_inverse(bits, c.n())),
            (None, None) => false,
        }
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        w.len() == self.length && self.contains_bits(w.bits())
    }

    /// `ν(w) ∈ B` for every `w ∈ B`.
    pub fn is_qc4_invariant(&self) -> Result<bool> {
        let words = self.raw_words()?;
        Ok(words.par_iter().all(|&w| self.contains_bits(nu_bits(w, self.length))))
    }

    /// Closure under bitwise addition: `B` is a power-of-two set holding 0 whose
    /// span has the same size.
    pub fn is_linear_set(&self) -> Result<bool> {
        let words = self.raw_words()?;
        if !self.size.is_power_of_two() || words.first() != Some(&0) {
            return Ok(false);
        }
        let target = self.log2_size() as usize;
        let mut basis = [0u128; 128];
        let mut rank = 0;
        for &w in words {
            let mut v = w;
            while v != 0 {
                let top = 127 - v.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = v;
                    rank += 1;
                    if rank > target {
                        return Ok(false);
                    }
                    break;
                }
                v ^= basis[top];
            }
        }
        Ok(rank == target)
    }

    /// Minimum Hamming distance over all pairs of distinct words; `None` below two words.
    pub fn min_distance_pairwise(&self) -> Result<Option<u32>> {
        let words = self.raw_words()?;
        Ok(words
            .par_iter()
            .enumerate()
            .filter_map(|(i, &x)| words[i + 1..].iter().map(|&y| (x ^ y).count_ones()).min())
            .min())
    }

    /// Number of words at each Hamming distance from `anchor`.
    pub fn distance_distribution(&self, anchor: u128) -> Result<Vec<u64>> {
        let mut hist = vec![0u64; self.length + 1];
        for &w in self.raw_words()? {
            hist[(w ^ anchor).count_ones() as usize] += 1;
        }
        Ok(hist)
    }

    /// Distance distributions from the first, middle and last word coincide.
    pub fn is_distance_invariant_spot(&self) -> Result<bool> {
        let words = self.raw_words()?;
        let first = self.distance_distribution(words[0])?;
        for anchor in [words[words.len() / 2], words[words.len() - 1]] {
            if self.distance_distribution(anchor)? != first {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Exact linearity of `Φ(C)` without listing it.
///
/// Writing `D ⊂ Z4^(2n)` for the image of `C` under `a + ub ↦ (b, a + b)`, the
/// classical Gray image of `D` is linear iff `2(v * w) ∈ D` for all `v, w ∈ D`.
/// That condition is bilinear in `(v mod 2, w mod 2)`, so generator pairs suffice.
pub fn gray_image_is_linear(c: &CyclicCode) -> bool {
    let n = c.n();
    let mask = (1u64 << n) - 1;
    // low planes of the D-generators
    let d_lo: Vec<u64> = c
        .basis()
        .packed_rows()
        .iter()
        .map(|r| {
            let (a, b) = (r.lo & mask, (r.lo >> n) & mask);
            b | ((a ^ b) << n)
        })
        .collect();
    d_lo.iter().enumerate().all(|(i, &v)| {
        d_lo[i..].iter().all(|&w| {
            // 2(v * w) in D, pulled back to C: (p | q) ↦ a = q - p, b = p
            let t = v & w;
            let (p, q) = (t & mask, (t >> n) & mask);
            let back = PackedZ4 { lo: 0, hi: (p ^ q) | (p << n) };
            c.basis().contains_packed(back)
        })
    })
}

/// Parameters of a Gray image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryParams {
    pub length: usize,
    pub log2_size: u32,
    /// `None` for the zero code.
    pub min_distance: Option<u32>,
    pub is_linear_set: bool,
    pub is_qc4: bool,
    pub checks: CheckMode,
}

/// Length, size, distance, linearity and 4-QC closure of `Φ(C)`.
pub fn params(c: &CyclicCode, caps: &Caps) -> Result<BinaryParams> {
    let min_distance = c.min_lee_weight(caps.enum_bits)?;
    let image = BinaryCodeSet::gray_image(c, caps.materialize_bits);
    let (is_linear_set, is_qc4, checks) = if image.is_materialized() {
        if image.log2_size() <= PAIRWISE_CHECK_BITS {
            let pairwise = image.min_distance_pairwise()?;
            assert_eq!(pairwise, min_distance, "Gray image distance disagrees with Lee weight");
        }
        (image.is_linear_set()?, image.is_qc4_invariant()?, CheckMode::Set)
    } else {
        // ν∘Φ = Φ∘σ, so 4-QC closure of the image is σ-closure of the code
        (gray_image_is_linear(c), c.is_cyclic(), CheckMode::Algebraic)
    };
    Ok(BinaryParams { length: 4 * c.n(), log2_size: c.log2_size(), min_distance, is_linear_set, is_qc4, checks })
}

/// One row of an enumeration or search report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub generators: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crt_profile: Option<CrtProfile>,
    pub log2_size: u32,
    /// `None` when no canonical form was found.
    pub paper_rank: Option<u32>,
    pub nakayama_count: u32,
    pub d_lee: Option<u32>,
    pub image_length: usize,
    pub image_log2_size: u32,
    pub image_d: Option<u32>,
    pub linear: bool,
    pub qc4: bool,
    pub checks: CheckMode,
}

impl CodeSummary {
    pub fn new(c: &CyclicCode, profile: Option<CrtProfile>, fact: &Factorization, caps: &Caps) -> Result<CodeSummary> {
        let p = params(c, caps)?;
        let gens: Vec<String> = c.generators().iter().map(|g| g.to_string()).collect();
        Ok(CodeSummary {
            n: c.n(),
            generators: if gens.is_empty() { "0".into() } else { gens.join(" ; ") },
            crt_profile: profile,
            log2_size: c.log2_size(),
            paper_rank: c.canonical_form(fact).ok().map(|g| g.paper_rank(c.n())),
            nakayama_count: c.nakayama_count(),
            d_lee: p.min_distance,
            image_length: p.length,
            image_log2_size: p.log2_size,
            image_d: p.min_distance,
            linear: p.is_linear_set,
            qc4: p.is_qc4,
            checks: p.checks,
        })
    }
}

/// Summaries of every code of length `n` plus the ranked selections.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    /// All codes in CRT-profile order.
    pub rows: Vec<CodeSummary>,
    /// Indices into `rows`, best first.
    pub top: Vec<usize>,
    /// Indices into `rows` of the `(d, log2 size)` Pareto front, by decreasing distance.
    pub pareto: Vec<usize>,
}

/// Summaries of all `7^m` codes of length `n` in CRT-profile order.
pub fn summarize_all(fact: &Factorization, caps: &Caps) -> Result<Vec<CodeSummary>> {
    let codes = enumerate_all(fact, caps.code_budget)?;
    codes
        .into_iter()
        .map(|(p, c)| CodeSummary::new(&c, Some(p), fact, caps))
        .collect()
}

/// Ranks nonzero codes by distance, then size, then profile order.
pub fn search_best(n: usize, top_k: usize, caps: &Caps) -> Result<SearchReport> {
    let fact = Factorization::new(n)?;
    let rows = summarize_all(&fact, caps)?;
    Ok(rank(n, rows, top_k))
}

pub fn rank(n: usize, rows: Vec<CodeSummary>, top_k: usize) -> SearchReport {
    let mut order: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].d_lee.is_some()).collect();
    order.sort_by_key(|&i| (Reverse(rows[i].d_lee), Reverse(rows[i].log2_size), i));
    let mut pareto = Vec::new();
    let mut best_size: Option<u32> = None;
    for &i in &order {
        if best_size.is_none_or(|s| rows[i].log2_size > s) {
            pareto.push(i);
            best_size = Some(rows[i].log2_size);
        }
    }
    order.truncate(top_k);
    SearchReport { n, rows, top: order, pareto }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyR;

    fn code(n: usize, gens: &[&str]) -> CyclicCode {
        CyclicCode::from_generators(n, gens.iter().map(|g| g.parse::<PolyR>().unwrap()).collect()).unwrap()
    }

    #[test]
    fn images_of_u_multiples() {
        let caps = Caps::default();
        let u = params(&code(7, &["0:1"]), &caps).unwrap();
        assert_eq!((u.length, u.log2_size, u.min_distance, u.is_qc4), (28, 14, Some(2), true));
        let two_u = params(&code(7, &["0:2"]), &caps).unwrap();
        assert_eq!((two_u.length, two_u.log2_size, two_u.min_distance, two_u.is_qc4), (28, 7, Some(4), true));
        assert!(two_u.is_linear_set);
        let zero = params(&CyclicCode::zero(7).unwrap(), &caps).unwrap();
        assert_eq!((zero.log2_size, zero.min_distance, zero.is_linear_set), (0, None, true));
        let whole = params(&CyclicCode::whole(3).unwrap(), &caps).unwrap();
        assert_eq!((whole.length, whole.log2_size, whole.min_distance), (12, 12, Some(1)));
    }

    #[test]
    fn explicit_sets() {
        let w = |s: &str| s.parse::<BinaryWord>().unwrap();
        let b = BinaryCodeSet::from_words(8, &[w("00000000"), w("00000001")]).unwrap();
        assert!(!b.is_qc4_invariant().unwrap());
        assert!(b.is_linear_set().unwrap());
        let z = BinaryCodeSet::from_words(8, &[w("00000000")]).unwrap();
        assert!(z.is_qc4_invariant().unwrap() && z.is_linear_set().unwrap());
        let odd = BinaryCodeSet::from_words(4, &[w("0000"), w("0011"), w("0001")]).unwrap();
        assert!(!odd.is_linear_set().unwrap());
        assert!(BinaryCodeSet::from_words(6, &[]).is_err());
    }

    #[test]
    fn algebraic_checks_match_set_checks() {
        let f = Factorization::new(3).unwrap();
        for (_, c) in enumerate_all(&f, 100).unwrap() {
            let img = BinaryCodeSet::gray_image(&c, 24);
            assert_eq!(img.is_linear_set().unwrap(), gray_image_is_linear(&c));
            assert!(img.is_qc4_invariant().unwrap());
            let virt = BinaryCodeSet::gray_image(&c, 0);
            assert!(!virt.is_materialized() || c.is_zero());
            assert!(img.raw_words().unwrap().iter().all(|&w| virt.contains_bits(w)));
        }
    }

    #[test]
    fn whole_ring_of_length_one_is_all_words() {
        let img = BinaryCodeSet::gray_image(&CyclicCode::whole(1).unwrap(), 22);
        assert_eq!(img.size(), 16);
        assert!(img.is_linear_set().unwrap());
    }

    #[test]
    fn search_length_one() {
        let r = search_best(1, 10, &Caps::default()).unwrap();
        assert_eq!(r.rows.len(), 7);
        assert_eq!(r.top.len(), 6);
        let whole = r.rows.iter().find(|s| s.log2_size == 4).unwrap();
        assert_eq!(whole.d_lee, Some(1));
        // ⟨2u⟩ has d = 4 and heads the ranking
        assert_eq!(r.rows[r.top[0]].d_lee, Some(4));
    }
}
