//! Linear algebra over Z4: standard form, membership, enumeration and the
//! minimal-generator count of submodules closed under 2 and u.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Z4;

/// Default cap, in bits, on the number of elements a module enumeration may visit.
pub const DEFAULT_ENUM_CAP_BITS: u32 = 26;

/// A Z4 vector of length at most 64 stored as two bit planes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedZ4 {
    pub lo: u64,
    pub hi: u64,
}

impl PackedZ4 {
    pub fn from_slice(v: &[Z4]) -> PackedZ4 {
        assert!(v.len() <= 64, "packed vectors hold at most 64 coordinates");
        let mut p = PackedZ4::default();
        for (i, c) in v.iter().enumerate() {
            p.lo |= ((c.value() & 1) as u64) << i;
            p.hi |= ((c.value() >> 1) as u64) << i;
        }
        p
    }

    pub fn to_vec(self, len: usize) -> Vec<Z4> {
        (0..len).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn get(self, i: usize) -> Z4 {
        Z4::new(((self.lo >> i & 1) | (self.hi >> i & 1) << 1) as i64)
    }

    #[inline]
    pub fn add(self, o: PackedZ4) -> PackedZ4 {
        PackedZ4 { lo: self.lo ^ o.lo, hi: self.hi ^ o.hi ^ (self.lo & o.lo) }
    }

    #[inline]
    pub fn neg(self) -> PackedZ4 {
        // -c flips the high bit exactly where the low bit is set
        PackedZ4 { lo: self.lo, hi: self.hi ^ self.lo }
    }

    #[inline]
    pub fn double(self) -> PackedZ4 {
        PackedZ4 { lo: 0, hi: self.lo }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    #[inline]
    pub fn scale(self, c: Z4) -> PackedZ4 {
        match c.value() {
            0 => PackedZ4::default(),
            1 => self,
            2 => self.double(),
            _ => self.neg(),
        }
    }

    /// Lee weight: `β(c) + γ(c)` summed over coordinates, with `γ = α xor β`.
    #[inline]
    pub fn lee_weight(self) -> u32 {
        self.hi.count_ones() + (self.hi ^ self.lo).count_ones()
    }
}

/// Dense matrix over Z4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatZ4 {
    rows: Vec<Vec<Z4>>,
}

impl MatZ4 {
    /// Panics when the rows are ragged.
    pub fn new(rows: Vec<Vec<Z4>>) -> MatZ4 {
        if let Some(first) = rows.first() {
            assert!(rows.iter().all(|r| r.len() == first.len()), "ragged matrix");
        }
        MatZ4 { rows }
    }

    pub fn from_ints(rows: &[&[i64]]) -> MatZ4 {
        MatZ4::new(rows.iter().map(|r| r.iter().map(|&v| Z4::new(v)).collect()).collect())
    }

    pub fn rows(&self) -> &[Vec<Z4>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

fn axpy(dst: &mut [Z4], c: Z4, src: &[Z4]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d -= c * s;
    }
}

/// Row-reduced generator matrix: `k1` rows with pivot 1 followed by `k2` rows
/// with pivot 2. Every row is zero in the other rows' pivot columns, except
/// that the `k1` rows may hold a 1 in a `k2` pivot column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardForm {
    pub cols: usize,
    pub k1: usize,
    pub k2: usize,
    pub reduced: MatZ4,
    pub pivot_cols: Vec<usize>,
    #[serde(skip)]
    packed: Vec<PackedZ4>,
}

/// Reduces `m` to standard form. Pivot rule: leftmost column holding a unit in any
/// remaining row; once none is left, leftmost column holding a 2.
pub fn standard_form(m: &MatZ4) -> StandardForm {
    let cols = m.n_cols();
    let mut rest: Vec<Vec<Z4>> = m.rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    let mut unit_rows: Vec<Vec<Z4>> = Vec::new();
    let mut pivot_cols = Vec::new();

    while let Some((j, i)) = (0..cols).find_map(|j| rest.iter().position(|r| r[j].is_unit()).map(|i| (j, i))) {
        let mut pivot = rest.swap_remove(i);
        let inv = pivot[j].unit_inverse().expect("unit");
        pivot.iter_mut().for_each(|c| *c = *c * inv);
        for r in rest.iter_mut().chain(unit_rows.iter_mut()) {
            let c = r[j];
            if !c.is_zero() {
                axpy(r, c, &pivot);
            }
        }
        rest.retain(|r| r.iter().any(|c| !c.is_zero()));
        unit_rows.push(pivot);
        pivot_cols.push(j);
    }

    // Everything left is even: plain binary elimination on the halves.
    let mut two_rows: Vec<Vec<Z4>> = Vec::new();
    while let Some((j, i)) = (0..cols).find_map(|j| rest.iter().position(|r| !r[j].is_zero()).map(|i| (j, i))) {
        let pivot = rest.swap_remove(i);
        for r in rest.iter_mut().chain(two_rows.iter_mut()) {
            if !r[j].is_zero() {
                axpy(r, Z4::ONE, &pivot);
            }
        }
        for r in unit_rows.iter_mut() {
            if r[j].value() >= 2 {
                axpy(r, Z4::ONE, &pivot);
            }
        }
        rest.retain(|r| r.iter().any(|c| !c.is_zero()));
        two_rows.push(pivot);
        pivot_cols.push(j);
    }

    let (k1, k2) = (unit_rows.len(), two_rows.len());
    unit_rows.extend(two_rows);
    let packed = if cols <= 64 { unit_rows.iter().map(|r| PackedZ4::from_slice(r)).collect() } else { Vec::new() };
    StandardForm { cols, k1, k2, reduced: MatZ4 { rows: unit_rows }, pivot_cols, packed }
}

impl StandardForm {
    /// `log2` of the module size, `2·k1 + k2`.
    pub fn log2_size(&self) -> u32 {
        (2 * self.k1 + self.k2) as u32
    }

    pub fn rows(&self) -> &[Vec<Z4>] {
        self.reduced.rows()
    }

    /// Membership test by reduction against the pivots.
    pub fn contains(&self, v: &[Z4]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut v = v.to_vec();
        for (row, &p) in self.rows().iter().zip(&self.pivot_cols).take(self.k1) {
            let c = v[p];
            if !c.is_zero() {
                axpy(&mut v, c, row);
            }
        }
        for (row, &p) in self.rows().iter().zip(&self.pivot_cols).skip(self.k1) {
            match v[p].value() {
                0 => {}
                2 => axpy(&mut v, Z4::ONE, row),
                _ => return false,
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    /// True when both forms span the same module.
    pub fn same_module(&self, other: &StandardForm) -> bool {
        self.cols == other.cols
            && self.log2_size() == other.log2_size()
            && other.rows().iter().all(|r| self.contains(r))
    }

    /// True when `other`'s module is contained in this one.
    pub fn contains_module(&self, other: &StandardForm) -> bool {
        other.rows().iter().all(|r| self.contains(r))
    }

    /// Rows as packed vectors; empty when `cols > 64`.
    pub fn packed_rows(&self) -> &[PackedZ4] {
        &self.packed
    }

    /// [`StandardForm::contains`] on a packed vector (requires `cols <= 64`).
    #[inline]
    pub fn contains_packed(&self, mut v: PackedZ4) -> bool {
        for (row, &p) in self.packed.iter().zip(&self.pivot_cols).take(self.k1) {
            let c = v.get(p);
            if !c.is_zero() {
                v = v.add(row.scale(-c));
            }
        }
        for (row, &p) in self.packed.iter().zip(&self.pivot_cols).skip(self.k1) {
            match v.get(p).value() {
                0 => {}
                2 => v = v.add(*row),
                _ => return false,
            }
        }
        v.is_zero()
    }

    /// Iterator over every element of the module in counter order.
    pub fn enumerate(&self, cap_bits: u32) -> Result<ModuleIter> {
        self.check_cap(cap_bits)?;
        Ok(ModuleIter::new(self, 0, 1u64 << self.log2_size()))
    }

    /// Iterator over the counter range `start..end`, for splitting a scan across workers.
    pub fn enumerate_range(&self, start: u64, end: u64) -> ModuleIter {
        ModuleIter::new(self, start, end.min(1u64 << self.log2_size()))
    }

    pub fn check_cap(&self, cap_bits: u32) -> Result<()> {
        let bits = self.log2_size();
        if bits > cap_bits || self.cols > 64 {
            return Err(Error::TooLarge { bits, cap: cap_bits });
        }
        Ok(())
    }
}

/// Mixed-radix counter over the pivot-row coefficients: base 4 digits for the `k1`
/// rows (least significant first), then base 2 digits for the `k2` rows.
pub struct ModuleIter {
    rows: Vec<PackedZ4>,
    radix_bits: Vec<u32>,
    digits: Vec<u8>,
    current: PackedZ4,
    index: u64,
    end: u64,
}

impl ModuleIter {
    fn new(sf: &StandardForm, start: u64, end: u64) -> ModuleIter {
        let rows = sf.packed_rows().to_vec();
        let radix_bits: Vec<u32> = (0..rows.len()).map(|i| if i < sf.k1 { 2 } else { 1 }).collect();
        let mut digits = Vec::with_capacity(rows.len());
        let mut current = PackedZ4::default();
        let mut rem = start;
        for (row, &b) in rows.iter().zip(&radix_bits) {
            let d = (rem & ((1 << b) - 1)) as u8;
            rem >>= b;
            for _ in 0..d {
                current = current.add(*row);
            }
            digits.push(d);
        }
        ModuleIter { rows, radix_bits, digits, current, index: start, end }
    }
}

impl Iterator for ModuleIter {
    type Item = PackedZ4;

    #[inline]
    fn next(&mut self) -> Option<PackedZ4> {
        if self.index >= self.end {
            return None;
        }
        let out = self.current;
        self.index += 1;
        // Each digit step, including the wrap back to zero, adds the row once more:
        // 4·r = 0 for the unit rows and 2·r = 0 for the even rows.
        for i in 0..self.rows.len() {
            self.current = self.current.add(self.rows[i]);
            self.digits[i] += 1;
            if self.digits[i] < (1 << self.radix_bits[i]) {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Spanning set for `{v in rowspace(m) : v[0..k] = 0}`.
///
/// Column-by-column echelon over the first `k` columns where a pivot with entry 2
/// also feeds twice itself back into the pool, so no element with a zero prefix
/// is lost.
pub fn zero_prefix_submodule(m: &MatZ4, k: usize) -> Vec<Vec<Z4>> {
    let mut pool: Vec<Vec<Z4>> = m.rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    for j in 0..k {
        let pick = pool
            .iter()
            .position(|r| r[j].is_unit())
            .or_else(|| pool.iter().position(|r| !r[j].is_zero()));
        let Some(i) = pick else { continue };
        let pivot = pool.swap_remove(i);
        if pivot[j].is_unit() {
            let inv = pivot[j].unit_inverse().unwrap();
            for r in pool.iter_mut() {
                let c = r[j] * inv;
                if !c.is_zero() {
                    axpy(r, c, &pivot);
                }
            }
        } else {
            for r in pool.iter_mut() {
                if !r[j].is_zero() {
                    axpy(r, Z4::ONE, &pivot);
                }
            }
            pool.push(pivot.iter().map(|&c| c + c).collect());
        }
        pool.retain(|r| r.iter().any(|c| !c.is_zero()));
    }
    pool
}

/// Minimal number of generators of a module over the local ring R, where the
/// module sits in Z4^cols and `u_action` realizes multiplication by u.
///
/// By Nakayama this is `log2|C| - log2|mC|` with `m = ⟨2, u⟩`.
pub fn nakayama_generator_count(generators: &[Vec<Z4>], u_action: impl Fn(&[Z4]) -> Vec<Z4>) -> Result<u32> {
    if generators.is_empty() {
        return Ok(0);
    }
    let sf = standard_form(&MatZ4::new(generators.to_vec()));
    let mut m_rows = Vec::new();
    for r in sf.rows() {
        let two: Vec<Z4> = r.iter().map(|&c| c + c).collect();
        let ur = u_action(r);
        if !sf.contains(&two) || !sf.contains(&ur) {
            return Err(Error::NotClosed);
        }
        m_rows.push(two);
        m_rows.push(ur);
    }
    let msf = standard_form(&MatZ4::new(m_rows));
    Ok(sf.log2_size() - msf.log2_size())
}
