//! Gray maps ψ: Z4 → F2², φ: R → Z4², Φ = ψ∘φ: R → F2⁴, their coordinatewise
//! extensions, and the shifts σ (on Rⁿ) and ν (on F2^4n).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::linalg::PackedZ4;
use crate::ring::{RElem, Z4};

/// One row `(c, α(c), β(c), γ(c))` of the 2-adic table: `c = α + 2β`, `γ = α + β mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrayRow {
    pub c: u8,
    pub alpha: bool,
    pub beta: bool,
    pub gamma: bool,
}

pub fn gray_table() -> [GrayRow; 4] {
    Z4::ALL.map(|c| {
        let v = c.value();
        let alpha = v & 1 == 1;
        let beta = v >> 1 == 1;
        GrayRow { c: v, alpha, beta, gamma: alpha ^ beta }
    })
}

/// `ψ(c) = (β(c), γ(c))`.
pub fn psi(c: Z4) -> (bool, bool) {
    let v = c.value();
    let beta = v >> 1 == 1;
    (beta, beta ^ (v & 1 == 1))
}

/// `φ(a + ub) = (b, a + b)`.
pub fn phi(x: RElem) -> (Z4, Z4) {
    (x.b(), x.a() + x.b())
}

/// `Φ(x)` as four bits, bit `i` holding output coordinate `i`.
pub fn gray_bits(x: RElem) -> u8 {
    let (p, q) = phi(x);
    let (b0, b1) = psi(p);
    let (b2, b3) = psi(q);
    b0 as u8 | (b1 as u8) << 1 | (b2 as u8) << 2 | (b3 as u8) << 3
}

fn inverse_table() -> &'static [RElem; 16] {
    static TABLE: OnceLock<[RElem; 16]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [None; 16];
        for x in RElem::all() {
            let w = gray_bits(x) as usize;
            assert!(table[w].is_none(), "Gray map is not injective on R");
            table[w] = Some(x);
        }
        table.map(|x| x.expect("Gray map is not onto F2^4"))
    })
}

/// Fixed-length binary word; bit `i` of `bits` is coordinate `i` (leftmost in text).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    len: usize,
    bits: u128,
}

impl BinaryWord {
    pub const MAX_LEN: usize = 128;

    pub fn new(len: usize, bits: u128) -> BinaryWord {
        assert!(len <= Self::MAX_LEN, "binary words hold at most 128 bits");
        let mask = if len == 128 { u128::MAX } else { (1u128 << len) - 1 };
        BinaryWord { len, bits: bits & mask }
    }

    pub fn zero(len: usize) -> BinaryWord {
        BinaryWord::new(len, 0)
    }

    pub fn from_bools(bits: &[bool]) -> BinaryWord {
        BinaryWord::new(bits.len(), bits.iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as u128) << i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn xor(&self, other: &BinaryWord) -> Result<BinaryWord> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        Ok(BinaryWord::new(self.len, self.bits ^ other.bits))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<BinaryWord, ParseError> {
        let s = s.trim();
        if s.len() > Self::MAX_LEN || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(ParseError::BadBits(s.to_string()));
        }
        Ok(BinaryWord::from_bools(&s.bytes().map(|b| b == b'1').collect::<Vec<_>>()))
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<BinaryWord, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `Φ(x)` as a 4-bit word.
pub fn gray(x: RElem) -> BinaryWord {
    BinaryWord::new(4, gray_bits(x) as u128)
}

/// Coordinatewise Φ on Rⁿ; block `i` occupies bits `4i..4i+4`.
pub fn gray_vec(v: &[RElem]) -> BinaryWord {
    assert!(4 * v.len() <= BinaryWord::MAX_LEN, "vector too long for a packed image");
    let bits = v.iter().enumerate().fold(0u128, |acc, (i, &x)| acc | (gray_bits(x) as u128) << (4 * i));
    BinaryWord::new(4 * v.len(), bits)
}

/// Inverse of [`gray_vec`]; Φ is a bijection R → F2⁴ so every block decodes.
pub fn gray_vec_inverse(w: &BinaryWord) -> Result<Vec<RElem>> {
    if w.len() % 4 != 0 {
        return Err(Error::BadLength(w.len()));
    }
    let table = inverse_table();
    Ok((0..w.len() / 4).map(|i| table[(w.bits >> (4 * i) & 15) as usize]).collect())
}

/// Cyclic shift σ: the last coordinate moves to the front.
pub fn sigma<T: Copy>(v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    out.rotate_right(1);
    out
}

/// 4-quasi-cyclic shift ν: the last four bits move to the front.
pub fn nu(w: &BinaryWord) -> Result<BinaryWord> {
    if w.len() < 4 || w.len() % 4 != 0 {
        return Err(Error::BadLength(w.len()));
    }
    Ok(BinaryWord::new(w.len(), nu_bits(w.bits, w.len())))
}

#[inline]
pub(crate) fn nu_bits(bits: u128, len: usize) -> u128 {
    let mask = if len == 128 { u128::MAX } else { (1u128 << len) - 1 };
    ((bits << 4) | (bits >> (len - 4))) & mask
}

pub fn lee_weight_vec(v: &[RElem]) -> u32 {
    v.iter().map(|x| x.lee_weight()).sum()
}

pub fn lee_distance(x: &[RElem], y: &[RElem]) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).map(|(&a, &b)| (a - b).lee_weight()).sum())
}

pub fn hamming_weight(w: &BinaryWord) -> u32 {
    w.bits.count_ones()
}

pub fn hamming_distance(w1: &BinaryWord, w2: &BinaryWord) -> Result<u32> {
    Ok(w1.xor(w2)?.bits.count_ones())
}

/// Rⁿ packed as a Z4^(2n) vector: `a` parts in coordinates `0..n`, `b` parts in `n..2n`.
pub fn pack_rvec(v: &[RElem]) -> PackedZ4 {
    let n = v.len();
    let mut z: Vec<Z4> = v.iter().map(|x| x.a()).collect();
    z.extend(v.iter().map(|x| x.b()));
    debug_assert_eq!(z.len(), 2 * n);
    PackedZ4::from_slice(&z)
}

pub fn unpack_rvec(p: PackedZ4, n: usize) -> Vec<RElem> {
    (0..n).map(|i| RElem::new(p.get(i), p.get(n + i))).collect()
}

/// Splits a packed Rⁿ vector into its `a` and `b` planes.
#[inline]
fn split_planes(p: PackedZ4, n: usize) -> (PackedZ4, PackedZ4) {
    let mask = (1u64 << n) - 1;
    (
        PackedZ4 { lo: p.lo & mask, hi: p.hi & mask },
        PackedZ4 { lo: (p.lo >> n) & mask, hi: (p.hi >> n) & mask },
    )
}

/// Lee weight of a packed Rⁿ vector: `w_L(b) + w_L(a + b)` summed.
#[inline]
pub fn packed_lee_weight(p: PackedZ4, n: usize) -> u32 {
    let (a, b) = split_planes(p, n);
    b.lee_weight() + a.add(b).lee_weight()
}

/// Φ of a packed Rⁿ vector as raw bits of a `4n`-bit word.
pub fn packed_gray(p: PackedZ4, n: usize) -> u128 {
    let (a, b) = split_planes(p, n);
    let s = a.add(b);
    let (b_beta, b_gamma) = (b.hi, b.hi ^ b.lo);
    let (s_beta, s_gamma) = (s.hi, s.hi ^ s.lo);
    let mut out = 0u128;
    for i in 0..n {
        let block = (b_beta >> i & 1) | (b_gamma >> i & 1) << 1 | (s_beta >> i & 1) << 2 | (s_gamma >> i & 1) << 3;
        out |= (block as u128) << (4 * i);
    }
    out
}

/// Inverse of [`packed_gray`].
pub fn packed_gray_inverse(bits: u128, n: usize) -> PackedZ4 {
    let table = inverse_table();
    let mut out = PackedZ4::default();
    for i in 0..n {
        let x = table[(bits >> (4 * i) & 15) as usize];
        let (a, b) = (x.a().value() as u64, x.b().value() as u64);
        out.lo |= (a & 1) << i | (b & 1) << (n + i);
        out.hi |= (a >> 1) << i | (b >> 1) << (n + i);
    }
    out
}

/// σ on a packed Rⁿ vector: rotate each plane right by one coordinate.
pub fn packed_sigma(p: PackedZ4, n: usize) -> PackedZ4 {
    let (a, b) = split_planes(p, n);
    let rot = |x: u64| ((x << 1) | (x >> (n - 1))) & ((1u64 << n) - 1);
    PackedZ4 { lo: rot(a.lo) | rot(b.lo) << n, hi: rot(a.hi) | rot(b.hi) << n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> RElem {
        RElem::from_ints(a, b)
    }

    #[test]
    fn table_rows() {
        let t = gray_table();
        let rows: Vec<_> = t.iter().map(|g| (g.c, g.alpha as u8, g.beta as u8, g.gamma as u8)).collect();
        assert_eq!(rows, vec![(0, 0, 0, 0), (1, 1, 0, 1), (2, 0, 1, 1), (3, 1, 1, 0)]);
    }

    #[test]
    fn psi_phi_values() {
        assert_eq!(psi(Z4::new(0)), (false, false));
        assert_eq!(psi(Z4::new(1)), (false, true));
        assert_eq!(psi(Z4::new(2)), (true, true));
        assert_eq!(psi(Z4::new(3)), (true, false));
        assert_eq!(phi(RElem::ZERO), (Z4::ZERO, Z4::ZERO));
        assert_eq!(phi(r(1, 1)), (Z4::ONE, Z4::TWO));
        assert_eq!(phi(RElem::TWO), (Z4::ZERO, Z4::TWO));
    }

    #[test]
    fn gray_of_elements() {
        assert_eq!(gray(RElem::ZERO).to_string(), "0000");
        assert_eq!(gray(RElem::U).to_string(), "0101");
        assert_eq!(gray(RElem::TWO).to_string(), "0011");
        assert_eq!(gray(RElem::ONE).to_string(), "0001");
    }

    #[test]
    fn not_additive() {
        let one = gray(RElem::ONE);
        assert_eq!(one.xor(&one).unwrap(), BinaryWord::zero(4));
        assert_ne!(one.xor(&one).unwrap(), gray(RElem::TWO));
    }

    #[test]
    fn vector_images() {
        assert_eq!(gray_vec(&[RElem::ZERO; 3]), BinaryWord::zero(12));
        let w = gray_vec(&[RElem::U, RElem::ZERO, RElem::ZERO]);
        assert_eq!(w.to_string(), "010100000000");
        assert_eq!(gray_vec_inverse(&w).unwrap(), vec![RElem::U, RElem::ZERO, RElem::ZERO]);
        assert_eq!(gray_vec_inverse(&BinaryWord::zero(5)), Err(Error::BadLength(5)));
    }

    #[test]
    fn shifts() {
        assert_eq!(sigma(&[RElem::ONE, RElem::U, RElem::TWO]), vec![RElem::TWO, RElem::ONE, RElem::U]);
        let w = BinaryWord::from_bools(&[true, false, false, false, false, true, true, false]);
        assert_eq!(nu(&w).unwrap().to_bools(), vec![false, true, true, false, true, false, false, false]);
        assert_eq!(nu(&BinaryWord::zero(6)), Err(Error::BadLength(6)));
        assert_eq!(nu(&BinaryWord::zero(0)), Err(Error::BadLength(0)));
        let v = [r(1, 1), RElem::TWO, r(0, 3)];
        assert_eq!(gray_vec(&sigma(&v)), nu(&gray_vec(&v)).unwrap());
    }

    #[test]
    fn weights_and_distances() {
        assert_eq!(lee_weight_vec(&[RElem::TWO_U, RElem::ZERO]), 4);
        for x in RElem::all() {
            assert_eq!(hamming_weight(&gray(x)), x.lee_weight());
        }
        let w = gray_vec(&[r(1, 2), r(3, 3)]);
        assert_eq!(hamming_distance(&w, &w).unwrap(), 0);
        assert_eq!(hamming_distance(&w, &BinaryWord::zero(4)), Err(Error::LengthMismatch(8, 4)));
        assert_eq!(lee_distance(&[RElem::ONE], &[]), Err(Error::LengthMismatch(1, 0)));
    }

    #[test]
    fn packed_helpers_agree_with_plain_maps() {
        let v = [r(1, 1), RElem::TWO, r(0, 3), r(3, 2), RElem::ONE];
        let p = pack_rvec(&v);
        assert_eq!(unpack_rvec(p, 5), v);
        assert_eq!(packed_lee_weight(p, 5), lee_weight_vec(&v));
        assert_eq!(packed_gray(p, 5), gray_vec(&v).bits());
        assert_eq!(packed_gray_inverse(packed_gray(p, 5), 5), p);
        assert_eq!(unpack_rvec(packed_sigma(p, 5), 5), sigma(&v));
    }
}
