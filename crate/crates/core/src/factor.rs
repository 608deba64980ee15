//! Factorization of `x^n - 1` over F2, lifting of the factors to Z4, and the
//! CRT idempotents of `Z4[x]/(x^n - 1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{PolyF2, PolyZ4};
use crate::ring::Z4;

pub(crate) fn check_odd(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroLength)
    } else if n % 2 == 0 {
        Err(Error::EvenLength(n))
    } else {
        Ok(())
    }
}

/// Orders binary polynomials by degree, then by coefficients from the top down.
fn factor_order(f: &PolyF2) -> (usize, u128) {
    (f.degree().unwrap_or(0), f.to_bits())
}

/// Splits a squarefree product of irreducibles of common degree `d`.
fn equal_degree_split(f: &PolyF2, d: usize, out: &mut Vec<PolyF2>) {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        out.push(f.clone());
        return;
    }
    // Trace map T(a) = a + a^2 + ... + a^(2^(d-1)) mod f. Over each factor's residue
    // field GF(2^d) it lands in F2, so some candidate `a` yields a proper gcd.
    for seed in 2u128.. {
        let a = PolyF2::from_bits(seed);
        if a.degree().unwrap_or(0) >= deg {
            break;
        }
        let mut t = a.rem(f).expect("monic");
        let mut acc = t.clone();
        for _ in 1..d {
            t = (&t * &t).rem(f).expect("monic");
            acc = &acc + &t;
        }
        let g = f.gcd(&acc).expect("f nonzero");
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let h = f.divmod(&g).expect("monic").0;
            equal_degree_split(&g, d, out);
            equal_degree_split(&h, d, out);
            return;
        }
    }
    unreachable!("trace splitting found no proper factor of a product of degree-{d} irreducibles");
}

/// Monic irreducible factors of `x^n - 1` over F2 for odd `n`, sorted by degree
/// and then by coefficient bit pattern.
pub fn factor_xn_minus_1_f2(n: usize) -> Result<Vec<PolyF2>> {
    check_odd(n)?;
    let mut rest = PolyF2::xn_minus_1(n);
    let x = PolyF2::x();
    let mut factors = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) > 0 {
        if 2 * d > rest.degree().unwrap() {
            // whatever is left is irreducible
            factors.push(rest.clone());
            break;
        }
        let xq = PolyF2::frobenius_pow(&x, d, &rest);
        let g = rest.gcd(&(&xq - &x)).expect("rest nonzero");
        if g.degree().unwrap_or(0) > 0 {
            equal_degree_split(&g, d, &mut factors);
            rest = rest.divmod(&g).expect("monic").0;
        }
        d += 1;
    }
    factors.sort_by_key(factor_order);
    Ok(factors)
}

/// Lifts a monic binary factor of `x^n - 1` to the monic Z4 factor of `x^n - 1`
/// with the same reduction mod 2, using Graeffe's root-squaring: with `h` the 0/1
/// lift, `±h(x)h(-x) = g(x^2)`.
pub fn graeffe_hensel_lift(g2: &PolyF2, n: usize) -> Result<PolyZ4> {
    check_odd(n)?;
    if !g2.is_monic() || !PolyF2::xn_minus_1(n).divisible_by(g2)? {
        return Err(Error::NotADivisor(n));
    }
    let h = g2.lift();
    let prod = &h * &h.negate_x();
    let deg = g2.degree().unwrap();
    let mut coeffs: Vec<Z4> = prod.coeffs().iter().step_by(2).copied().collect();
    if prod.coeffs().iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Err(Error::LiftVerificationFailed("h(x)h(-x) has an odd-degree term".into()));
    }
    if deg % 2 == 1 {
        coeffs.iter_mut().for_each(|c| *c = -*c);
    }
    let g = PolyZ4::new(coeffs);
    if !g.is_monic() || g.degree() != Some(deg) {
        return Err(Error::LiftVerificationFailed(format!("{g:?} is not monic of degree {deg}")));
    }
    if g.mod2() != *g2 {
        return Err(Error::LiftVerificationFailed(format!("{g:?} does not reduce to {g2:?}")));
    }
    if !PolyZ4::xn_minus_1(n).divisible_by(&g)? {
        return Err(Error::LiftVerificationFailed(format!("{g:?} does not divide x^{n}-1 over Z4")));
    }
    Ok(g)
}

/// Inverse of `a` modulo the monic `m` over Z4, given that the reductions are coprime.
fn inverse_mod_z4(a: &PolyZ4, m: &PolyZ4) -> Result<PolyZ4> {
    let (g, s, _) = a.mod2().ext_gcd(&m.mod2())?;
    if !g.is_one() {
        return Err(Error::NotCoprime);
    }
    // Newton step: if s·a = 1 + 2t then s(2 - s·a)·a = 1 - (2t)^2 = 1 mod 4.
    let s = s.lift();
    let sa = (&s * a).rem(m)?;
    let two = PolyZ4::constant(Z4::TWO);
    let inv = (&s * &(&two - &sa)).rem(m)?;
    debug_assert!((&inv * a).rem(m)?.is_one() || m.degree() == Some(0));
    Ok(inv)
}

/// Primitive idempotents `e_i` of `Z4[x]/(x^n - 1)` attached to the pairwise
/// coprime lifts: `e_i = 1 mod lift_i` and `e_i = 0 mod lift_j` for `j != i`.
pub fn crt_idempotents(lifts: &[PolyZ4], n: usize) -> Result<Vec<PolyZ4>> {
    check_odd(n)?;
    let xn1 = PolyZ4::xn_minus_1(n);
    let product = lifts.iter().fold(PolyZ4::one(), |acc, l| &acc * l);
    if product != xn1 {
        return Err(Error::NotADivisor(n));
    }
    let mut out = Vec::with_capacity(lifts.len());
    for lift in lifts {
        let cofactor = xn1.divmod(lift)?.0;
        let inv = inverse_mod_z4(&cofactor.rem(lift)?, lift)?;
        out.push((&inv * &cofactor).mod_xn_minus_1(n));
    }
    let sum = out.iter().fold(PolyZ4::zero(), |acc, e| &acc + e).mod_xn_minus_1(n);
    if !sum.is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(out)
}

/// The binary factors of `x^n - 1`, their Z4 lifts and the matching idempotents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub n: usize,
    pub f2_factors: Vec<PolyF2>,
    pub z4_lifts: Vec<PolyZ4>,
    pub idempotents: Vec<PolyZ4>,
}

impl Factorization {
    pub fn new(n: usize) -> Result<Factorization> {
        let f2_factors = factor_xn_minus_1_f2(n)?;
        let z4_lifts = f2_factors
            .iter()
            .map(|g| graeffe_hensel_lift(g, n))
            .collect::<Result<Vec<_>>>()?;
        let idempotents = crt_idempotents(&z4_lifts, n)?;
        Ok(Factorization { n, f2_factors, z4_lifts, idempotents })
    }

    /// Number of irreducible factors.
    pub fn m(&self) -> usize {
        self.f2_factors.len()
    }

    /// Product of the lifts selected by the bits of `mask`.
    pub fn divisor(&self, mask: u32) -> PolyZ4 {
        self.z4_lifts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(PolyZ4::one(), |acc, (_, l)| &acc * l)
    }
}
