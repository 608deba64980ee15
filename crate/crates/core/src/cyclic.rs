//! Cyclic codes of odd length over R, i.e. ideals of `R[x]/(x^n - 1)`.
//!
//! A code is stored through its Z4-module embedding in `Z4^(2n)`: the word
//! `(a_0 + u b_0, ..., a_{n-1} + u b_{n-1})` becomes `(a_0..a_{n-1} | b_0..b_{n-1})`,
//! and multiplication by u becomes `(a | b) ↦ (0 | a)`. Sizes, membership,
//! equality and enumeration all go through the standard form of that embedding.

use std::fmt;
use std::str::FromStr;

use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::factor::{check_odd, Factorization};
use crate::gray::{packed_gray_inverse, packed_lee_weight, packed_sigma, unpack_rvec};
use crate::linalg::{nakayama_generator_count, standard_form, zero_prefix_submodule, MatZ4, PackedZ4, StandardForm};
use crate::poly::{PolyR, PolyZ4};
use crate::ring::{IdealLabel, RElem, Z4};

/// Longest supported code length: the embedding is packed into 64 coordinates.
pub const MAX_LENGTH: usize = 31;

/// Default limit on the number of codes `enumerate_all` will build.
pub const DEFAULT_CODE_BUDGET: u128 = 20_000;

fn check_length(n: usize) -> Result<()> {
    check_odd(n)?;
    if n > MAX_LENGTH {
        return Err(Error::LengthTooLarge(n));
    }
    Ok(())
}

fn embed(v: &[RElem]) -> Vec<Z4> {
    v.iter().map(|x| x.a()).chain(v.iter().map(|x| x.b())).collect()
}

fn u_times(v: &[Z4]) -> Vec<Z4> {
    let n = v.len() / 2;
    let mut out = vec![Z4::ZERO; 2 * n];
    out[n..].copy_from_slice(&v[..n]);
    out
}

/// Rows `x^i·g` and `u·x^i·g` for `0 <= i < n`, embedded in `Z4^(2n)`.
fn ideal_rows(n: usize, gens: &[PolyR]) -> Vec<Vec<Z4>> {
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut v = g.to_vector(n);
        for _ in 0..n {
            let e = embed(&v);
            rows.push(u_times(&e));
            rows.push(e);
            v.rotate_right(1);
        }
    }
    rows
}

/// A cyclic code over R of odd length `n`.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    n: usize,
    gens: Vec<PolyR>,
    basis: StandardForm,
}

impl CyclicCode {
    /// The ideal of `R[x]/(x^n - 1)` generated by `gens`; zero generators are ignored.
    pub fn from_generators(n: usize, gens: Vec<PolyR>) -> Result<CyclicCode> {
        check_length(n)?;
        let gens: Vec<PolyR> = gens.into_iter().map(|g| g.mod_xn_minus_1(n)).filter(|g| !g.is_zero()).collect();
        let rows = ideal_rows(n, &gens);
        let basis = if rows.is_empty() {
            standard_form(&MatZ4::new(vec![vec![Z4::ZERO; 2 * n]]))
        } else {
            standard_form(&MatZ4::new(rows))
        };
        Ok(CyclicCode { n, gens, basis })
    }

    pub fn zero(n: usize) -> Result<CyclicCode> {
        CyclicCode::from_generators(n, Vec::new())
    }

    pub fn whole(n: usize) -> Result<CyclicCode> {
        CyclicCode::from_generators(n, vec![PolyR::one()])
    }

    /// `Σ e_i·J_i` where `J_i` is the ideal chosen for the i-th factor.
    pub fn from_crt_profile(profile: &CrtProfile, fact: &Factorization) -> Result<CyclicCode> {
        if profile.labels.len() != fact.m() {
            return Err(Error::ProfileLengthMismatch { expected: fact.m(), got: profile.labels.len() });
        }
        let mut gens = Vec::new();
        for (label, e) in profile.labels.iter().zip(&fact.idempotents) {
            let e = e.to_r();
            for &g in label.generators() {
                gens.push(e.scale(g));
            }
        }
        CyclicCode::from_generators(fact.n, gens)
    }

    /// The code `⟨f1 + 2f2 + 2u·f14 (+ u·f13), u·f3 + 2u·f4⟩`.
    pub fn from_canonical(n: usize, c: &CanonicalGens) -> Result<CyclicCode> {
        let c = c.normalized(n)?;
        CyclicCode::from_generators(n, c.generators())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PolyR] {
        &self.gens
    }

    pub fn basis(&self) -> &StandardForm {
        &self.basis
    }

    /// `log2 |C|`.
    pub fn log2_size(&self) -> u32 {
        self.basis.log2_size()
    }

    pub fn is_zero(&self) -> bool {
        self.log2_size() == 0
    }

    pub fn contains(&self, v: &[RElem]) -> bool {
        v.len() == self.n && self.basis.contains(&embed(v))
    }

    pub fn contains_poly(&self, p: &PolyR) -> bool {
        self.contains(&p.to_vector(self.n))
    }

    /// Codes are equal when they hold the same codewords, whatever their generators.
    pub fn same_code(&self, other: &CyclicCode) -> bool {
        self.n == other.n && self.basis.same_module(&other.basis)
    }

    pub fn is_subcode_of(&self, other: &CyclicCode) -> bool {
        self.n == other.n && other.basis.contains_module(&self.basis)
    }

    /// σ maps every basis row back into the code.
    pub fn is_cyclic(&self) -> bool {
        self.basis.packed_rows().iter().all(|&r| self.basis.contains_packed(packed_sigma(r, self.n)))
    }

    /// Closed under multiplication by u (and hence by every element of R).
    pub fn is_r_linear(&self) -> bool {
        self.basis.rows().iter().all(|r| self.basis.contains(&u_times(r)))
    }

    /// Every codeword in counter order of the standard form.
    pub fn codewords(&self, cap_bits: u32) -> Result<impl Iterator<Item = Vec<RElem>> + '_> {
        let n = self.n;
        Ok(self.basis.enumerate(cap_bits)?.map(move |p| unpack_rvec(p, n)))
    }

    /// Image under `a + ub ↦ a`.
    pub fn residue_code(&self) -> Z4CyclicCode {
        let rows: Vec<Vec<Z4>> = self.basis.rows().iter().map(|r| r[..self.n].to_vec()).collect();
        Z4CyclicCode::from_rows(self.n, rows)
    }

    /// `{h : u·h ∈ C}`.
    pub fn torsion_code(&self) -> Z4CyclicCode {
        let rows: Vec<Vec<Z4>> = zero_prefix_submodule(&self.basis.reduced, self.n)
            .into_iter()
            .map(|r| r[self.n..].to_vec())
            .collect();
        Z4CyclicCode::from_rows(self.n, rows)
    }

    /// Minimal number of R-module generators.
    pub fn nakayama_count(&self) -> u32 {
        nakayama_generator_count(self.basis.rows(), u_times).expect("an ideal is closed under 2 and u")
    }

    /// Minimum Lee weight over nonzero codewords; `None` for the zero code.
    ///
    /// Either scans every codeword, or walks the Hamming spheres of the Gray image
    /// (Φ is a weight-preserving bijection, so Lee weight `w` words of Rⁿ are the
    /// preimages of Hamming weight `w` words) testing membership, whichever is
    /// estimated to touch fewer words.
    pub fn min_lee_weight(&self, cap_bits: u32) -> Result<Option<u32>> {
        let s = self.log2_size();
        if s == 0 {
            return Ok(None);
        }
        const MEMBERSHIP_COST: f64 = 8.0;
        let len = 4 * self.n;
        let enum_cost = (s as f64).exp2();
        let budget = (cap_bits as f64).exp2();
        let mut spent = 0.0;
        for w in 1..=len as u32 {
            let level = binomial(len as u32, w) * MEMBERSHIP_COST;
            if s <= cap_bits && spent + level > enum_cost {
                return self.min_lee_weight_scan(cap_bits).map(Some);
            }
            if spent + level > budget * MEMBERSHIP_COST {
                return Err(Error::TooLarge { bits: s, cap: cap_bits });
            }
            if self.has_word_of_weight(w) {
                return Ok(Some(w));
            }
            spent += level;
        }
        unreachable!("a nonzero code has a nonzero codeword");
    }

    /// Exhaustive scan over all codewords, split across the rayon pool.
    pub fn min_lee_weight_scan(&self, cap_bits: u32) -> Result<u32> {
        self.basis.check_cap(cap_bits)?;
        let n = self.n;
        let total = 1u64 << self.log2_size();
        let chunk = (total / 256).max(1 << 12);
        let chunks = total.div_ceil(chunk);
        let best = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c * chunk;
                self.basis
                    .enumerate_range(start, start + chunk)
                    .filter(|p| !p.is_zero())
                    .map(|p| packed_lee_weight(p, n))
                    .min()
                    .unwrap_or(u32::MAX)
            })
            .min()
            .unwrap_or(u32::MAX);
        Ok(best)
    }

    /// True when some codeword has Lee weight exactly `w`.
    fn has_word_of_weight(&self, w: u32) -> bool {
        let len = 4 * self.n as u32;
        let limit = 1u128 << len;
        let mut x = (1u128 << w) - 1;
        while x < limit {
            if self.basis.contains_packed(packed_gray_inverse(x, self.n)) {
                return true;
            }
            // next integer with the same popcount
            let c = x & x.wrapping_neg();
            let r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
        false
    }

    /// Recovers `⟨f1 + 2f2 + 2u·f14, u·f3 + 2u·f4⟩` with both divisibility chains,
    /// searching divisor pairs of `x^n - 1` and binary `f14` of degree below `n`.
    pub fn canonical_form(&self, fact: &Factorization) -> Result<CanonicalGens> {
        let (f1, f2) = self.residue_code().generator_pair(fact).ok_or(Error::NoCanonicalForm)?;
        let (f3, f4) = self.torsion_code().generator_pair(fact).ok_or(Error::NoCanonicalForm)?;
        let base = &f1 + &f2.scale(Z4::TWO);
        // Only f14 mod 2 matters. Exhaustive up to n = 21, otherwise just f14 = 0.
        let candidates: u64 = if self.n <= 21 { 1 << self.n } else { 1 };
        for bits in 0..candidates {
            let f14 = PolyZ4::new((0..self.n).map(|i| Z4::new((bits >> i & 1) as i64)).collect());
            let lead = (&base.to_r() + &f14.scale(Z4::TWO).times_u()).to_vector(self.n);
            // ⟨lead, u(f3 + 2f4)⟩ ⊆ C always has the residue and torsion of C, so
            // containment of `lead` already forces equality.
            if self.contains(&lead) {
                let c = CanonicalGens { f1, f2, f13: None, f14, f3, f4 };
                debug_assert!(CyclicCode::from_canonical(self.n, &c).is_ok_and(|d| d.same_code(self)));
                return Ok(c);
            }
        }
        Err(Error::NoCanonicalForm)
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// A cyclic code over Z4 of length `n` (the residue or torsion code of a code over R).
#[derive(Clone, Debug)]
pub struct Z4CyclicCode {
    n: usize,
    basis: StandardForm,
}

impl Z4CyclicCode {
    pub fn from_rows(n: usize, mut rows: Vec<Vec<Z4>>) -> Z4CyclicCode {
        if rows.is_empty() {
            rows.push(vec![Z4::ZERO; n]);
        }
        Z4CyclicCode { n, basis: standard_form(&MatZ4::new(rows)) }
    }

    /// The ideal `⟨g⟩` of `Z4[x]/(x^n - 1)`.
    pub fn from_generator(n: usize, g: &PolyZ4) -> Z4CyclicCode {
        let mut v = g.to_vector(n);
        let rows = (0..n)
            .map(|_| {
                let r = v.clone();
                v.rotate_right(1);
                r
            })
            .collect();
        Z4CyclicCode::from_rows(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &StandardForm {
        &self.basis
    }

    pub fn log2_size(&self) -> u32 {
        self.basis.log2_size()
    }

    pub fn same_code(&self, other: &Z4CyclicCode) -> bool {
        self.n == other.n && self.basis.same_module(&other.basis)
    }

    pub fn is_cyclic(&self) -> bool {
        self.basis.rows().iter().all(|r| {
            let mut s = r.clone();
            s.rotate_right(1);
            self.basis.contains(&s)
        })
    }

    /// Divisor pair `(f1, f2)` with `f2 | f1 | x^n - 1` and code `⟨f1 + 2f2⟩`.
    pub fn generator_pair(&self, fact: &Factorization) -> Option<(PolyZ4, PolyZ4)> {
        let full = (1u32 << fact.m()) - 1;
        for m1 in 0..=full {
            // submasks of m1 in increasing order
            let mut m2 = 0u32;
            loop {
                let f1 = fact.divisor(m1);
                let f2 = fact.divisor(m2);
                let g = &f1 + &f2.scale(Z4::TWO);
                if Z4CyclicCode::from_generator(self.n, &g).same_code(self) {
                    return Some((f1, f2));
                }
                if m2 == m1 {
                    break;
                }
                m2 = ((m2 | !m1) + 1) & m1;
            }
        }
        None
    }
}

/// Generator data `⟨f1 + 2f2 + 2u·f14, u·f3 + 2u·f4⟩` with `f2 | f1 | x^n - 1` and
/// `f4 | f3 | x^n - 1`. The zero polynomial stands for `x^n - 1` in the chains.
/// An optional `f13` term adds `u·f13` to the first generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalGens {
    pub f1: PolyZ4,
    pub f2: PolyZ4,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f13: Option<PolyZ4>,
    pub f14: PolyZ4,
    pub f3: PolyZ4,
    pub f4: PolyZ4,
}

impl CanonicalGens {
    fn normalized(&self, n: usize) -> Result<CanonicalGens> {
        check_length(n)?;
        let xn1 = PolyZ4::xn_minus_1(n);
        let fix = |p: &PolyZ4| if p.is_zero() { xn1.clone() } else { p.clone() };
        let mut c = CanonicalGens {
            f1: fix(&self.f1),
            f2: fix(&self.f2),
            f13: self.f13.clone(),
            f14: self.f14.clone(),
            f3: fix(&self.f3),
            f4: fix(&self.f4),
        };
        for (lo, hi, name) in [(&c.f2, &c.f1, "f2 | f1"), (&c.f1, &xn1, "f1 | x^n-1"), (&c.f4, &c.f3, "f4 | f3"), (&c.f3, &xn1, "f3 | x^n-1")] {
            if !lo.is_monic() || !hi.divisible_by(lo)? {
                return Err(Error::DivisibilityViolated(name.to_string()));
            }
        }
        if let Some(f13) = c.f13.take() {
            // u·f13 - q·u(f3 + 2f4) leaves u(r - 2q·f4) with r = f13 mod f3; an
            // even remainder folds into the 2u·f14 term.
            let (q, r) = f13.divmod(&c.f3)?;
            let rest = &r - &(&q * &c.f4).scale(Z4::TWO);
            let rest = rest.mod_xn_minus_1(n);
            if rest.coeffs().iter().all(|x| x.value() % 2 == 0) {
                let half = rest.map(|x| Z4::new((x.value() / 2) as i64));
                info!("reduced u·f13 = u·({f13:?}) into 2u·({half:?}) using u·f3 + 2u·f4");
                c.f14 = &c.f14 + &half;
            } else {
                info!("u·f13 = u·({f13:?}) reduces to u·({rest:?}) and is kept");
                c.f13 = Some(rest);
            }
        }
        Ok(c)
    }

    /// The two generators over R.
    pub fn generators(&self) -> Vec<PolyR> {
        let mut first = &(&self.f1 + &self.f2.scale(Z4::TWO)).to_r() + &self.f14.scale(Z4::TWO).times_u();
        if let Some(f13) = &self.f13 {
            first = &first + &f13.times_u();
        }
        let second = (&self.f3 + &self.f4.scale(Z4::TWO)).times_u();
        vec![first, second]
    }

    /// The tables' rank value, `n - deg f3` (with `f3 = x^n - 1` counting as degree n).
    pub fn paper_rank(&self, n: usize) -> u32 {
        let d = if self.f3.is_zero() { n } else { self.f3.degree().unwrap() };
        n.saturating_sub(d) as u32
    }
}

/// One ideal label per lifted factor of `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrtProfile {
    pub labels: Vec<IdealLabel>,
}

impl CrtProfile {
    /// The `index`-th profile in lexicographic order (first factor most significant).
    pub fn from_index(m: usize, mut index: u128) -> CrtProfile {
        let mut labels = vec![IdealLabel::Zero; m];
        for slot in labels.iter_mut().rev() {
            *slot = IdealLabel::ALL[(index % 7) as usize];
            index /= 7;
        }
        CrtProfile { labels }
    }

    pub fn index(&self) -> u128 {
        self.labels
            .iter()
            .fold(0, |acc, l| acc * 7 + IdealLabel::ALL.iter().position(|x| x == l).unwrap() as u128)
    }
}

impl fmt::Display for CrtProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<&str> = self.labels.iter().map(|l| l.tag()).collect();
        f.write_str(&tags.join(","))
    }
}

impl FromStr for CrtProfile {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<CrtProfile, ParseError> {
        let labels = s.split(',').map(str::parse).collect::<Result<Vec<_>, _>>()?;
        Ok(CrtProfile { labels })
    }
}

/// Number of cyclic codes of length `n`, `7^m`.
pub fn code_count(fact: &Factorization) -> u128 {
    7u128.pow(fact.m() as u32)
}

/// Every cyclic code of length `n`, in CRT-profile order.
pub fn enumerate_all(fact: &Factorization, budget: u128) -> Result<Vec<(CrtProfile, CyclicCode)>> {
    let count = code_count(fact);
    if count > budget {
        return Err(Error::BudgetExceeded { count, budget });
    }
    (0..count)
        .into_par_iter()
        .map(|i| {
            let p = CrtProfile::from_index(fact.m(), i);
            let c = CyclicCode::from_crt_profile(&p, fact)?;
            Ok((p, c))
        })
        .collect()
}

/// Packs a codeword of the embedding (exposed for callers that scan codes themselves).
pub fn pack_codeword(v: &[RElem]) -> PackedZ4 {
    PackedZ4::from_slice(&embed(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rpoly(s: &str) -> PolyR {
        s.parse().unwrap()
    }

    fn z4(s: &str) -> PolyZ4 {
        s.parse().unwrap()
    }

    #[test]
    fn basic_sizes() {
        assert_eq!(CyclicCode::zero(3).unwrap().log2_size(), 0);
        assert_eq!(CyclicCode::whole(3).unwrap().log2_size(), 12);
        let c = CyclicCode::from_generators(3, vec![rpoly("2"), rpoly("0:3")]).unwrap();
        assert_eq!(c.log2_size(), 9);
        assert!(c.is_cyclic() && c.is_r_linear());
        assert_eq!(CyclicCode::from_generators(4, vec![]).unwrap_err(), Error::EvenLength(4));
        assert_eq!(CyclicCode::from_generators(33, vec![]).unwrap_err(), Error::LengthTooLarge(33));
    }

    #[test]
    fn min_weights() {
        let c = CyclicCode::from_generators(3, vec![rpoly("2"), rpoly("0:3")]).unwrap();
        assert_eq!(c.min_lee_weight(26).unwrap(), Some(2));
        assert_eq!(c.min_lee_weight_scan(26).unwrap(), 2);
        assert_eq!(CyclicCode::zero(7).unwrap().min_lee_weight(26).unwrap(), None);
        let two_u = CyclicCode::from_generators(7, vec![rpoly("0:2")]).unwrap();
        assert_eq!(two_u.min_lee_weight(26).unwrap(), Some(4));
        assert_eq!(CyclicCode::whole(7).unwrap().min_lee_weight(26).unwrap(), Some(1));
    }

    #[test]
    fn crt_profiles() {
        let f = Factorization::new(3).unwrap();
        let one = CrtProfile { labels: vec![IdealLabel::One; 2] };
        assert!(CyclicCode::from_crt_profile(&one, &f).unwrap().same_code(&CyclicCode::whole(3).unwrap()));
        let zero = CrtProfile { labels: vec![IdealLabel::Zero; 2] };
        assert!(CyclicCode::from_crt_profile(&zero, &f).unwrap().is_zero());
        let short = CrtProfile { labels: vec![IdealLabel::One] };
        assert_eq!(
            CyclicCode::from_crt_profile(&short, &f).unwrap_err(),
            Error::ProfileLengthMismatch { expected: 2, got: 1 }
        );
        for i in [0u128, 1, 48, 23] {
            assert_eq!(CrtProfile::from_index(2, i).index(), i);
        }
        assert_eq!("ONE,TWO_AND_U".parse::<CrtProfile>().unwrap().to_string(), "ONE,TWO_AND_U");
    }

    #[test]
    fn canonical_construction() {
        let c = CanonicalGens {
            f1: z4("3,0,0,1"),
            f2: z4("1"),
            f13: None,
            f14: PolyZ4::zero(),
            f3: z4("1"),
            f4: z4("1"),
        };
        let a = CyclicCode::from_canonical(3, &c).unwrap();
        let b = CyclicCode::from_generators(3, vec![rpoly("2"), rpoly("0:3")]).unwrap();
        assert!(a.same_code(&b));
        assert_eq!(c.paper_rank(3), 3);

        let xn1 = PolyZ4::xn_minus_1(3);
        let zero = CanonicalGens { f1: xn1.clone(), f2: xn1.clone(), f13: None, f14: PolyZ4::zero(), f3: xn1.clone(), f4: xn1 };
        assert!(CyclicCode::from_canonical(3, &zero).unwrap().is_zero());

        let bad = CanonicalGens { f2: z4("1,1,1"), f1: z4("3,1"), ..c.clone() };
        assert!(matches!(CyclicCode::from_canonical(3, &bad), Err(Error::DivisibilityViolated(_))));
    }

    #[test]
    fn f13_folds_into_f14_when_even() {
        // f3 = x - 1, f13 = 2x: 2x mod (x - 1) = 2, even, so it becomes f14 = 1.
        let c = CanonicalGens {
            f1: PolyZ4::xn_minus_1(3),
            f2: z4("1"),
            f13: Some(z4("0,2")),
            f14: PolyZ4::zero(),
            f3: z4("3,1"),
            f4: z4("1"),
        };
        let n = c.normalized(3).unwrap();
        assert_eq!(n.f13, None);
        assert_eq!(n.f14, z4("1"));
        let a = CyclicCode::from_canonical(3, &c).unwrap();
        let direct = CyclicCode::from_generators(3, vec![rpoly("2,0:2"), z4("1,1").times_u()]).unwrap();
        assert!(a.same_code(&direct));
    }

    #[test]
    fn residue_and_torsion() {
        let u_code = CyclicCode::from_generators(3, vec![rpoly("0:1")]).unwrap();
        assert_eq!(u_code.residue_code().log2_size(), 0);
        assert_eq!(u_code.torsion_code().log2_size(), 6);
        let c = CyclicCode::from_generators(1, vec![rpoly("2:1")]).unwrap();
        let res = c.residue_code();
        assert!(res.same_code(&Z4CyclicCode::from_generator(1, &z4("2"))));
        assert_eq!(c.torsion_code().log2_size() + res.log2_size(), c.log2_size());
    }

    #[test]
    fn canonical_recovery_round_trips() {
        let f = Factorization::new(3).unwrap();
        let c = CyclicCode::from_generators(3, vec![rpoly("2"), (&z4("1,1,1") + &z4("2")).times_u()]).unwrap();
        let cg = c.canonical_form(&f).unwrap();
        assert_eq!(cg.f3, z4("1,1,1"));
        assert_eq!(cg.paper_rank(3), 1);
        // ⟨2 + u⟩ over R_1 needs a u·f13 term, so it has no such form
        let odd = CyclicCode::from_generators(1, vec![rpoly("2:1")]).unwrap();
        assert_eq!(odd.canonical_form(&Factorization::new(1).unwrap()).unwrap_err(), Error::NoCanonicalForm);
    }

    #[test]
    fn enumeration_counts() {
        for (n, count) in [(1, 7), (3, 49)] {
            let f = Factorization::new(n).unwrap();
            assert_eq!(enumerate_all(&f, DEFAULT_CODE_BUDGET).unwrap().len(), count);
        }
        let f = Factorization::new(7).unwrap();
        assert_eq!(enumerate_all(&f, 100).unwrap_err(), Error::BudgetExceeded { count: 343, budget: 100 });
    }
}
