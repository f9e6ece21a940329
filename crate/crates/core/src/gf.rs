//! Arithmetic contexts for the small finite fields GF(q), q in {2, 3, 4, 5, 7, 8, 9}.
//!
//! Elements are plain `u8` values in `[0, q)`. Prime fields use integers mod p;
//! extension fields use polynomial representatives over GF(p) reduced by a
//! fixed irreducible polynomial, packed in base p with the coefficient of
//! `x^i` in the `p^i` digit (so `x` itself is encoded as `p`):
//!
//! * GF(4) = GF(2)[x] / (x^2 + x + 1)
//! * GF(8) = GF(2)[x] / (x^3 + x + 1)
//! * GF(9) = GF(3)[x] / (x^2 + 1)
//!
//! All operations go through full lookup tables built once at construction;
//! the constructor also verifies the field axioms by exhaustion, so a
//! successfully built [`FiniteField`] is a checked arithmetic context. The
//! context is passed explicitly wherever elements are combined; there is no
//! global state.

use crate::{Error, Result};

/// Orders accepted by [`FiniteField::new`].
pub const SUPPORTED_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

const MAX_Q: usize = 9;

/// A lookup-table arithmetic context for one supported field order.
#[derive(Clone, Copy)]
pub struct FiniteField {
    q: u8,
    p: u8,
    e: u8,
    add: [[u8; MAX_Q]; MAX_Q],
    mul: [[u8; MAX_Q]; MAX_Q],
    neg: [u8; MAX_Q],
    inv: [u8; MAX_Q],
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteField(q = {})", self.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Builds the arithmetic context for GF(q).
    ///
    /// Returns [`Error::UnsupportedOrder`] unless `q` is one of
    /// [`SUPPORTED_ORDERS`]. The returned context has had associativity,
    /// commutativity, distributivity, identities, and inverses verified by
    /// exhaustion over all elements.
    pub fn new(q: u32) -> Result<Self> {
        let (p, e): (u8, u8) = match q {
            2 => (2, 1),
            3 => (3, 1),
            4 => (2, 2),
            5 => (5, 1),
            7 => (7, 1),
            8 => (2, 3),
            9 => (3, 2),
            _ => return Err(Error::UnsupportedOrder(q)),
        };
        let poly = modulus(q);
        let q8 = q as u8;

        let mut field = FiniteField {
            q: q8,
            p,
            e,
            add: [[0; MAX_Q]; MAX_Q],
            mul: [[0; MAX_Q]; MAX_Q],
            neg: [0; MAX_Q],
            inv: [0; MAX_Q],
        };

        for a in 0..q8 {
            for b in 0..q8 {
                field.add[a as usize][b as usize] = poly_add(a, b, p, e);
                field.mul[a as usize][b as usize] = poly_mul(a, b, p, e, &poly);
            }
        }
        for a in 0..q8 {
            field.neg[a as usize] = (0..q8)
                .find(|&b| field.add[a as usize][b as usize] == 0)
                .expect("additive inverse exists");
        }
        for a in 1..q8 {
            field.inv[a as usize] = (1..q8)
                .find(|&b| field.mul[a as usize][b as usize] == 1)
                .expect("multiplicative inverse exists");
        }

        field.verify_axioms();
        Ok(field)
    }

    /// Field order q.
    pub fn order(&self) -> u32 {
        self.q as u32
    }

    /// Field characteristic p.
    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    /// Extension degree e (q = p^e).
    pub fn extension_degree(&self) -> u32 {
        self.e as u32
    }

    /// Checks that `value` encodes an element, i.e. lies in [0, q).
    pub fn element(&self, value: u32) -> Result<u8> {
        if value < self.q as u32 {
            Ok(value as u8)
        } else {
            Err(Error::EntryOutOfRange {
                value,
                q: self.q as u32,
            })
        }
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        debug_assert!(a < self.q && b < self.q);
        self.add[a as usize][b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        debug_assert!(a < self.q && b < self.q);
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        debug_assert!(a < self.q);
        self.neg[a as usize]
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: u8) -> Result<u8> {
        debug_assert!(a < self.q);
        if a == 0 {
            return Err(Error::DivisionByZero { q: self.q as u32 });
        }
        Ok(self.inv[a as usize])
    }

    pub fn div(&self, a: u8, b: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Repeated-squaring power; `pow(0, 0) = 1` by convention.
    pub fn pow(&self, a: u8, mut exp: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// All elements in ascending encoded order.
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    fn verify_axioms(&self) {
        let q = self.q;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a, "additive identity");
            assert_eq!(self.mul(a, 1), a, "multiplicative identity");
            assert_eq!(self.add(a, self.neg(a)), 0, "additive inverse");
            if a != 0 {
                let inv = self.inv[a as usize];
                assert_eq!(self.mul(a, inv), 1, "multiplicative inverse");
            }
        }
        for a in 0..q {
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a), "commutative addition");
                assert_eq!(self.mul(a, b), self.mul(b, a), "commutative multiplication");
                for c in 0..q {
                    assert_eq!(
                        self.add(self.add(a, b), c),
                        self.add(a, self.add(b, c)),
                        "associative addition"
                    );
                    assert_eq!(
                        self.mul(self.mul(a, b), c),
                        self.mul(a, self.mul(b, c)),
                        "associative multiplication"
                    );
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c)),
                        "distributivity"
                    );
                }
            }
        }
    }
}

/// Unpacks `value` into base-p digits (coefficient of x^i at index i).
fn digits(value: u8, p: u8, e: u8) -> [u8; 4] {
    let mut out = [0u8; 4];
    let mut v = value;
    for d in out.iter_mut().take(e as usize) {
        *d = v % p;
        v /= p;
    }
    out
}

fn pack(coeffs: &[u8; 4], p: u8, e: u8) -> u8 {
    let mut v = 0u8;
    for i in (0..e as usize).rev() {
        v = v * p + coeffs[i];
    }
    v
}

fn poly_add(a: u8, b: u8, p: u8, e: u8) -> u8 {
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let mut out = [0u8; 4];
    for i in 0..e as usize {
        out[i] = (da[i] + db[i]) % p;
    }
    pack(&out, p, e)
}

fn poly_mul(a: u8, b: u8, p: u8, e: u8, poly: &[u8; 4]) -> u8 {
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    // Schoolbook product, degree < 2e - 1.
    let mut prod = [0u8; 7];
    for i in 0..e as usize {
        for j in 0..e as usize {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    // Reduce modulo the monic irreducible polynomial of degree e:
    // x^e = -(poly[0] + poly[1] x + ... + poly[e-1] x^(e-1)).
    for d in (e as usize..2 * e as usize - 1).rev() {
        let lead = prod[d];
        if lead == 0 {
            continue;
        }
        prod[d] = 0;
        for i in 0..e as usize {
            let sub = (lead * poly[i]) % p;
            prod[d - e as usize + i] = (prod[d - e as usize + i] + p - sub) % p;
        }
    }
    let mut out = [0u8; 4];
    out[..e as usize].copy_from_slice(&prod[..e as usize]);
    pack(&out, p, e)
}

/// The fixed monic irreducible modulus for each extension order, constant
/// term first (all-zero for prime orders, where no reduction happens).
fn modulus(q: u32) -> [u8; 4] {
    match q {
        4 => [1, 1, 1, 0], // x^2 + x + 1
        8 => [1, 1, 0, 1], // x^3 + x + 1
        9 => [1, 0, 1, 0], // x^2 + 1
        _ => [0, 0, 0, 0],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_construct() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.order(), q);
        }
    }

    #[test]
    fn unsupported_orders_rejected() {
        for q in [0, 1, 6, 10, 16, 25] {
            assert!(matches!(
                FiniteField::new(q),
                Err(Error::UnsupportedOrder(_))
            ));
        }
    }

    #[test]
    fn gf4_multiplication_matches_polynomial_reduction() {
        let f = FiniteField::new(4).unwrap();
        // x * x = x^2 = x + 1 (mod x^2 + x + 1), i.e. 2 * 2 = 3.
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1); // x (x + 1) = x^2 + x = 1
        assert_eq!(f.add(2, 3), 1); // x + (x + 1) = 1
    }

    #[test]
    fn gf8_and_gf9_sample_products() {
        let f8 = FiniteField::new(8).unwrap();
        // x^2 * x = x^3 = x + 1 (mod x^3 + x + 1): 4 * 2 = 3.
        assert_eq!(f8.mul(4, 2), 3);
        let f9 = FiniteField::new(9).unwrap();
        // x * x = x^2 = -1 = 2 (mod x^2 + 1): 3 * 3 = 2.
        assert_eq!(f9.mul(3, 3), 2);
    }

    #[test]
    fn irreducible_polynomials_have_no_roots() {
        // Degree 2 or 3 polynomials are irreducible over GF(p) iff rootless.
        for (q, p) in [(4u32, 2u8), (8, 2), (9, 3)] {
            let f = FiniteField::new(q).unwrap();
            let e = f.extension_degree() as usize;
            let base = FiniteField::new(p as u32).unwrap();
            for r in 0..p {
                let mut value = 0u8;
                let mut power = 1u8;
                for c in modulus(q).iter().take(e + 1) {
                    value = base.add(value, base.mul(*c, power));
                    power = base.mul(power, r);
                }
                assert_ne!(value, 0, "root {r} found in GF({p}) for q = {q}");
            }
        }
    }

    #[test]
    fn inversion_and_division() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            assert!(matches!(f.inv(0), Err(Error::DivisionByZero { .. })));
            for a in 1..q as u8 {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1);
                assert_eq!(f.div(a, a).unwrap(), 1);
            }
        }
    }

    #[test]
    fn frobenius_fixes_every_element() {
        // a^q = a for all a in GF(q).
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, q as u64), a);
            }
        }
    }

    #[test]
    fn element_range_check() {
        let f = FiniteField::new(5).unwrap();
        assert_eq!(f.element(4).unwrap(), 4);
        assert!(matches!(
            f.element(5),
            Err(Error::EntryOutOfRange { value: 5, q: 5 })
        ));
    }
}
