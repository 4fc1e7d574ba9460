//! Prime field arithmetic.
//!
//! Elements are stored as canonical residues in `[0, p)` inside a `u128`.
//! Moduli are restricted to odd primes `5 <= p < 2^127`, which keeps every
//! intermediate sum below `2^128`: products use a widening path for
//! `p < 2^64` and a shift-and-add ladder above that, so no operation can
//! overflow.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::Rng;

use crate::error::{Error, Result};

/// Largest admissible modulus is `2^127 - 1`.
const MAX_MODULUS_BITS: u32 = 127;

/// Miller-Rabin witnesses. The first twelve primes are a deterministic set
/// for every `n < 3.3 * 10^24`; the extra bases only tighten the
/// probabilistic bound above that.
const WITNESSES: [u128; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// An odd prime `p >= 5` defining the base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldModulus(u128);

impl FieldModulus {
    /// Validates `p` and wraps it.
    pub fn new(p: u128) -> Result<Self> {
        if p < 5 {
            return Err(Error::InvalidModulus(format!("{p} is below the minimum modulus 5")));
        }
        if p >> MAX_MODULUS_BITS != 0 {
            return Err(Error::InvalidModulus(format!("{p} does not fit in {MAX_MODULUS_BITS} bits")));
        }
        if !is_probable_prime(p) {
            return Err(Error::InvalidModulus(format!("{p} is not prime")));
        }
        Ok(FieldModulus(p))
    }

    /// The Mersenne prime `2^127 - 1`, the largest supported modulus.
    pub fn mersenne_127() -> Self {
        FieldModulus((1u128 << 127) - 1)
    }

    pub fn value(self) -> u128 {
        self.0
    }

    pub fn bits(self) -> u32 {
        128 - self.0.leading_zeros()
    }

    pub fn zero(self) -> Fp {
        Fp { value: 0, modulus: self }
    }

    pub fn one(self) -> Fp {
        Fp { value: 1, modulus: self }
    }

    /// Reduces an arbitrary unsigned integer into the field.
    pub fn elem(self, v: u128) -> Fp {
        Fp { value: v % self.0, modulus: self }
    }

    /// Reduces a signed integer into the field.
    pub fn from_i128(self, v: i128) -> Fp {
        let m = self.0 as i128;
        let r = v.rem_euclid(m);
        Fp { value: r as u128, modulus: self }
    }

    pub fn random(self, rng: &mut impl Rng) -> Fp {
        Fp { value: rng.gen_range(0..self.0), modulus: self }
    }

    /// Parses a decimal integer (optionally negative) and reduces it.
    pub fn parse(self, s: &str) -> Result<Fp> {
        let s = s.trim();
        let (neg, digits) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let v: u128 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))?;
        let e = self.elem(v);
        Ok(if neg { -e } else { e })
    }

    /// Iterates over every element in ascending order. Only sensible for small moduli.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        (0..self.0).map(move |v| Fp { value: v, modulus: self })
    }
}

impl fmt::Display for FieldModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `F_p`, always held in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u128,
    modulus: FieldModulus,
}

impl Fp {
    pub fn value(self) -> u128 {
        self.value
    }

    pub fn modulus(self) -> FieldModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    fn check(self, rhs: Fp) -> Result<()> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.0, right: rhs.modulus.0 });
        }
        Ok(())
    }

    pub fn checked_add(self, rhs: Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(Fp { value: add_mod(self.value, rhs.value, self.modulus.0), modulus: self.modulus })
    }

    pub fn checked_sub(self, rhs: Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(Fp { value: sub_mod(self.value, rhs.value, self.modulus.0), modulus: self.modulus })
    }

    pub fn checked_mul(self, rhs: Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(Fp { value: mul_mod(self.value, rhs.value, self.modulus.0), modulus: self.modulus })
    }

    pub fn square(self) -> Fp {
        self * self
    }

    pub fn double(self) -> Fp {
        self + self
    }

    pub fn pow(self, mut e: u128) -> Fp {
        let mut base = self;
        let mut acc = self.modulus.one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self) -> Result<Fp> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let p = self.modulus.0 as i128;
        let (mut r0, mut r1) = (p, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.modulus.from_i128(t0))
    }

    /// Euler's criterion: `1` for nonzero squares, `-1` for non-squares, `0` for zero.
    pub fn legendre(self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let e = self.pow((self.modulus.0 - 1) / 2);
        if e.is_one() {
            1
        } else {
            -1
        }
    }

    /// One square root, the smaller of `{r, p - r}`, or `None` for non-residues.
    pub fn sqrt(self) -> Option<Fp> {
        let r = tonelli_shanks(self)?;
        let other = -r;
        Some(if other.value < r.value { other } else { r })
    }

    /// All square roots in ascending order: two for nonzero residues, one for
    /// zero, none otherwise.
    pub fn square_roots(self) -> Vec<Fp> {
        match self.sqrt() {
            None => Vec::new(),
            Some(r) if r.is_zero() => vec![r],
            Some(r) => vec![r, -r],
        }
    }
}

fn tonelli_shanks(a: Fp) -> Option<Fp> {
    let m = a.modulus;
    let p = m.0;
    if a.is_zero() {
        return Some(a);
    }
    if a.legendre() != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(a.pow((p + 1) / 4));
    }
    // p - 1 = q * 2^s with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = m.elem(2);
    while z.legendre() != -1 {
        z += m.one();
    }
    let mut c = z.pow(q);
    let mut t = a.pow(q);
    let mut r = a.pow(q.div_ceil(2));
    let mut big_m = s;
    while !t.is_one() {
        let mut i = 0u32;
        let mut t2 = t;
        while !t2.is_one() {
            t2 = t2.square();
            i += 1;
        }
        let mut b = c;
        for _ in 0..(big_m - i - 1) {
            b = b.square();
        }
        big_m = i;
        c = b.square();
        t *= c;
        r *= b;
    }
    Some(r)
}

#[inline]
fn add_mod(a: u128, b: u128, p: u128) -> u128 {
    // a, b < p < 2^127, so the sum cannot wrap
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u128, b: u128, p: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

#[inline]
fn mul_mod(a: u128, b: u128, p: u128) -> u128 {
    if p <= u64::MAX as u128 {
        return (a * b) % p;
    }
    let mut acc = 0u128;
    let bits = 128 - b.leading_zeros();
    for i in (0..bits).rev() {
        acc = add_mod(acc, acc, p);
        if (b >> i) & 1 == 1 {
            acc = add_mod(acc, a, p);
        }
    }
    acc
}

fn pow_mod(mut base: u128, mut e: u128, p: u128) -> u128 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin. Deterministic for `n < 2^64`, probabilistic beyond.
///
/// Only valid for `n < 2^127` (the ladder in `mul_mod` needs the headroom).
pub fn is_probable_prime(n: u128) -> bool {
    if n < 2 || n >> MAX_MODULUS_BITS != 0 {
        return false;
    }
    for &w in WITNESSES.iter() {
        if n == w {
            return true;
        }
        if n.is_multiple_of(w) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in WITNESSES.iter() {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Running tally of base-field multiplications and inversions.
///
/// Passed explicitly through the arithmetic routines that report costs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct OpCount {
    pub mults: u64,
    pub invs: u64,
    /// Square roots, each worth roughly `2 log p` multiplications.
    pub sqrts: u64,
}

impl OpCount {
    #[inline]
    pub fn mul(&mut self, a: Fp, b: Fp) -> Fp {
        self.mults += 1;
        a * b
    }

    #[inline]
    pub fn inv(&mut self, a: Fp) -> Result<Fp> {
        self.invs += 1;
        a.inv()
    }

    pub fn merge(&mut self, other: OpCount) {
        self.mults += other.mults;
        self.invs += other.invs;
        self.sqrts += other.sqrts;
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// The operator impls treat a modulus mismatch as a programming error; the
// `checked_*` methods report it as a value.
macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr for Fp {
            type Output = Fp;
            #[inline]
            fn $method(self, rhs: Fp) -> Fp {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $assign_tr for Fp {
            #[inline]
            fn $assign_method(&mut self, rhs: Fp) {
                *self = $tr::$method(*self, rhs);
            }
        }
    };
}

impl_binop!(Add, add, checked_add, AddAssign, add_assign);
impl_binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
impl_binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: sub_mod(0, self.value, self.modulus.0), modulus: self.modulus }
    }
}
