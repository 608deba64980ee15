//! Arithmetic in Z4 and in R = Z4 + uZ4 with u² = 0.
//!
//! `RElem` packs `a + ub` into one byte (`a` in bits 0..2, `b` in bits 2..4) so
//! that the full 16×16 multiplication table fits in a const array.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A residue modulo 4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);
    pub const ALL: [Z4; 4] = [Z4(0), Z4(1), Z4(2), Z4(3)];

    /// Reduces any integer mod 4.
    pub const fn new(v: i64) -> Z4 {
        Z4(v.rem_euclid(4) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// Inverse of a unit; both units of Z4 are involutions.
    pub const fn unit_inverse(self) -> Option<Z4> {
        if self.is_unit() {
            Some(self)
        } else {
            None
        }
    }

    /// Lee weight `min(c, 4 - c)`.
    pub const fn lee_weight(self) -> u32 {
        match self.0 {
            0 => 0,
            2 => 2,
            _ => 1,
        }
    }

    /// Binary reduction.
    pub const fn mod2(self) -> bool {
        self.0 & 1 == 1
    }
}

impl fmt::Debug for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::ops::Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl std::ops::Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl std::ops::Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl std::ops::Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl std::ops::AddAssign for Z4 {
    fn add_assign(&mut self, rhs: Z4) {
        *self = *self + rhs;
    }
}

impl std::ops::SubAssign for Z4 {
    fn sub_assign(&mut self, rhs: Z4) {
        *self = *self - rhs;
    }
}

impl FromStr for Z4 {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Z4, ParseError> {
        match s.trim() {
            "0" => Ok(Z4(0)),
            "1" => Ok(Z4(1)),
            "2" => Ok(Z4(2)),
            "3" => Ok(Z4(3)),
            other => Err(ParseError::BadZ4(other.to_string())),
        }
    }
}

/// An element `a + ub` of R.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RElem(u8);

const fn pack(a: u8, b: u8) -> u8 {
    (a & 3) | ((b & 3) << 2)
}

const MUL_TABLE: [[u8; 16]; 16] = {
    let mut t = [[0u8; 16]; 16];
    let mut x = 0;
    while x < 16 {
        let mut y = 0;
        while y < 16 {
            let (a, b) = (x & 3, x >> 2);
            let (c, d) = (y & 3, y >> 2);
            // (a + ub)(c + ud) = ac + u(ad + bc)
            t[x][y] = pack((a * c) as u8, (a * d + b * c) as u8);
            y += 1;
        }
        x += 1;
    }
    t
};

impl RElem {
    pub const ZERO: RElem = RElem(0);
    pub const ONE: RElem = RElem(1);
    pub const TWO: RElem = RElem(2);
    pub const U: RElem = RElem(4);
    pub const TWO_U: RElem = RElem(8);

    pub const fn new(a: Z4, b: Z4) -> RElem {
        RElem(pack(a.0, b.0))
    }

    /// Builds `a + ub` from integers reduced mod 4.
    pub const fn from_ints(a: i64, b: i64) -> RElem {
        RElem::new(Z4::new(a), Z4::new(b))
    }

    /// The packed index in `0..16`.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn from_index(i: usize) -> RElem {
        RElem((i & 15) as u8)
    }

    pub const fn from_z4(a: Z4) -> RElem {
        RElem(a.0)
    }

    /// The `a` component (the residue mod u).
    pub const fn a(self) -> Z4 {
        Z4(self.0 & 3)
    }

    /// The `b` component (coefficient of u).
    pub const fn b(self) -> Z4 {
        Z4(self.0 >> 2)
    }

    pub fn all() -> impl Iterator<Item = RElem> {
        (0..16u8).map(RElem)
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Units are exactly the elements whose `a` part is odd; the rest form ⟨2, u⟩.
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn try_inverse(self) -> Result<RElem, crate::error::Error> {
        if !self.is_unit() {
            return Err(crate::error::Error::NotAUnit(self));
        }
        // a^{-1} = a for both units of Z4, so (a + ub)^{-1} = a - ub.
        Ok(RElem::new(self.a(), -self.b()))
    }

    /// Lee weight `w_L(b) + w_L(a + b)`.
    pub const fn lee_weight(self) -> u32 {
        let a = self.0 & 3;
        let b = self.0 >> 2;
        Z4(b).lee_weight() + Z4((a + b) & 3).lee_weight()
    }

    /// Reduction to the residue field R/⟨2, u⟩.
    pub const fn residue_bit(self) -> bool {
        self.0 & 1 == 1
    }
}

impl std::ops::Add for RElem {
    type Output = RElem;
    fn add(self, rhs: RElem) -> RElem {
        RElem(pack((self.0 & 3) + (rhs.0 & 3), (self.0 >> 2) + (rhs.0 >> 2)))
    }
}

impl std::ops::Sub for RElem {
    type Output = RElem;
    fn sub(self, rhs: RElem) -> RElem {
        self + (-rhs)
    }
}

impl std::ops::Neg for RElem {
    type Output = RElem;
    fn neg(self) -> RElem {
        RElem(pack(4 - (self.0 & 3), 4 - (self.0 >> 2)))
    }
}

impl std::ops::Mul for RElem {
    type Output = RElem;
    fn mul(self, rhs: RElem) -> RElem {
        RElem(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl std::ops::AddAssign for RElem {
    fn add_assign(&mut self, rhs: RElem) {
        *self = *self + rhs;
    }
}

impl std::ops::SubAssign for RElem {
    fn sub_assign(&mut self, rhs: RElem) {
        *self = *self - rhs;
    }
}

impl From<Z4> for RElem {
    fn from(a: Z4) -> RElem {
        RElem::from_z4(a)
    }
}

impl fmt::Display for RElem {
    /// Wire form `a:b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a(), self.b())
    }
}

impl fmt::Debug for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a().0, self.b().0) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "u"),
            (0, b) => write!(f, "{b}u"),
            (a, 1) => write!(f, "{a}+u"),
            (a, b) => write!(f, "{a}+{b}u"),
        }
    }
}

impl FromStr for RElem {
    type Err = ParseError;

    /// Accepts `a:b`, or a bare digit meaning `a + 0u`.
    fn from_str(s: &str) -> Result<RElem, ParseError> {
        let s = s.trim();
        match s.split_once(':') {
            Some((a, b)) => {
                let a: Z4 = a.parse().map_err(|_| ParseError::BadRElem(s.to_string()))?;
                let b: Z4 = b.parse().map_err(|_| ParseError::BadRElem(s.to_string()))?;
                Ok(RElem::new(a, b))
            }
            None => s
                .parse::<Z4>()
                .map(RElem::from_z4)
                .map_err(|_| ParseError::BadRElem(s.to_string())),
        }
    }
}

impl Serialize for RElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<RElem, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The seven ideals of R (including R itself).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdealLabel {
    Zero,
    One,
    Two,
    U,
    TwoU,
    TwoPlusU,
    TwoAndU,
}

impl IdealLabel {
    pub const ALL: [IdealLabel; 7] = [
        IdealLabel::Zero,
        IdealLabel::One,
        IdealLabel::Two,
        IdealLabel::U,
        IdealLabel::TwoU,
        IdealLabel::TwoPlusU,
        IdealLabel::TwoAndU,
    ];

    /// Generators of the ideal as listed by its name.
    pub fn generators(self) -> &'static [RElem] {
        const TWO_PLUS_U: RElem = RElem::from_ints(2, 1);
        match self {
            IdealLabel::Zero => &[],
            IdealLabel::One => &[RElem::ONE],
            IdealLabel::Two => &[RElem::TWO],
            IdealLabel::U => &[RElem::U],
            IdealLabel::TwoU => &[RElem::TWO_U],
            IdealLabel::TwoPlusU => &[TWO_PLUS_U],
            IdealLabel::TwoAndU => &[RElem::TWO, RElem::U],
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            IdealLabel::Zero => "ZERO",
            IdealLabel::One => "ONE",
            IdealLabel::Two => "TWO",
            IdealLabel::U => "U",
            IdealLabel::TwoU => "TWO_U",
            IdealLabel::TwoPlusU => "TWO_PLUS_U",
            IdealLabel::TwoAndU => "TWO_AND_U",
        }
    }

    /// Elements of the ideal as a 16-bit membership mask, computed by closing
    /// the generators under addition and multiplication by R.
    pub fn mask(self) -> u16 {
        let mut mask = 1u16;
        let mut frontier = vec![RElem::ZERO];
        let mut seeds: Vec<RElem> = Vec::new();
        for &g in self.generators() {
            for r in RElem::all() {
                seeds.push(r * g);
            }
        }
        while let Some(x) = frontier.pop() {
            for &s in &seeds {
                let y = x + s;
                if mask & (1 << y.index()) == 0 {
                    mask |= 1 << y.index();
                    frontier.push(y);
                }
            }
        }
        mask
    }

    pub fn elements(self) -> Vec<RElem> {
        let mask = self.mask();
        RElem::all().filter(|x| mask & (1 << x.index()) != 0).collect()
    }

    pub fn contains(self, x: RElem) -> bool {
        self.mask() & (1 << x.index()) != 0
    }
}

impl fmt::Display for IdealLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdealLabel {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<IdealLabel, ParseError> {
        IdealLabel::ALL
            .into_iter()
            .find(|l| l.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ParseError::BadIdealLabel(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> RElem {
        RElem::from_ints(a, b)
    }

    #[test]
    fn products() {
        assert_eq!(RElem::U * RElem::U, RElem::ZERO);
        assert_eq!(r(1, 1) * r(1, 3), RElem::ONE);
        for x in RElem::all() {
            assert_eq!(x + (-x), RElem::ZERO);
        }
    }

    #[test]
    fn mul_table_matches_component_formula() {
        for x in RElem::all() {
            for y in RElem::all() {
                let (a, b, c, d) = (x.a(), x.b(), y.a(), y.b());
                assert_eq!(x * y, RElem::new(a * c, a * d + b * c));
            }
        }
    }

    #[test]
    fn inverses() {
        assert!(r(3, 2).is_unit());
        assert!(!r(2, 3).is_unit());
        assert_eq!(r(1, 1).try_inverse().unwrap(), r(1, 3));
        for x in RElem::all().filter(|x| x.is_unit()) {
            assert_eq!(x * x.try_inverse().unwrap(), RElem::ONE);
        }
        assert!(RElem::U.try_inverse().is_err());
    }

    #[test]
    fn ideal_sizes() {
        assert_eq!(IdealLabel::Zero.elements(), vec![RElem::ZERO]);
        assert_eq!(IdealLabel::TwoAndU.elements().len(), 8);
        assert!(IdealLabel::U.contains(RElem::TWO_U));
        assert_eq!(IdealLabel::One.elements().len(), 16);
        assert_eq!(IdealLabel::TwoPlusU.elements().len(), 4);
        assert_eq!(IdealLabel::TwoU.elements().len(), 2);
    }

    #[test]
    fn lee_weights() {
        assert_eq!(Z4::new(0).lee_weight(), 0);
        assert_eq!(Z4::new(1).lee_weight(), 1);
        assert_eq!(Z4::new(2).lee_weight(), 2);
        assert_eq!(Z4::new(3).lee_weight(), 1);
        assert_eq!(RElem::ZERO.lee_weight(), 0);
        assert_eq!(RElem::U.lee_weight(), 2);
        assert_eq!(RElem::TWO_U.lee_weight(), 4);
        for x in RElem::all() {
            assert_eq!(x.lee_weight() == 0, x.is_zero());
            assert_eq!(x.lee_weight(), (-x).lee_weight());
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(r(3, 2).to_string(), "3:2");
        assert_eq!("3:2".parse::<RElem>().unwrap(), r(3, 2));
        assert_eq!("2".parse::<RElem>().unwrap(), RElem::TWO);
        assert!("4:0".parse::<RElem>().is_err());
        assert!("1:".parse::<RElem>().is_err());
        assert_eq!("two_plus_u".parse::<IdealLabel>().unwrap(), IdealLabel::TwoPlusU);
    }
}
