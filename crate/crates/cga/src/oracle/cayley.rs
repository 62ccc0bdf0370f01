//! Exact recomputation of the 32 x 32 blade product table.
//!
//! Each product is reduced generator by generator: concatenate the two
//! ascending generator lists, bubble-sort counting transpositions, and
//! cancel adjacent equal generators against their metric squares. This
//! shares nothing with the bit-twiddling sign computation of the algebra
//! module, so agreement pins both down.

use crate::algebra::Multivector;

/// Squares of the internal generators {e1, e2, e3, e+, e-}.
const GENERATOR_SQUARES: [i8; 5] = [1, 1, 1, 1, -1];

/// The full blade product table: for each pair of internal blade masks the
/// resulting blade mask and its sign.
pub struct CayleyTable {
    entries: [[(u8, i8); 32]; 32],
}

impl CayleyTable {
    /// Recompute every entry by explicit generator reduction.
    pub fn by_generator_reduction() -> Self {
        let mut entries = [[(0u8, 0i8); 32]; 32];
        for (a, row) in entries.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                *entry = reduce_blade_product(a as u8, b as u8);
            }
        }
        Self { entries }
    }

    pub fn entry(&self, left: u8, right: u8) -> (u8, i8) {
        self.entries[left as usize][right as usize]
    }
}

/// One disagreement between the reduction table and the multivector
/// product of the corresponding unit blades.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CayleyMismatch {
    pub left: u8,
    pub right: u8,
    pub expected_mask: u8,
    pub expected_sign: i8,
}

fn reduce_blade_product(a: u8, b: u8) -> (u8, i8) {
    let mut gens: Vec<usize> = Vec::with_capacity(10);
    for g in 0..5 {
        if a & (1 << g) != 0 {
            gens.push(g);
        }
    }
    for g in 0..5 {
        if b & (1 << g) != 0 {
            gens.push(g);
        }
    }

    let mut sign = 1i8;
    let len = gens.len();
    for pass in 0..len {
        for k in 0..len.saturating_sub(1 + pass) {
            if gens[k] > gens[k + 1] {
                gens.swap(k, k + 1);
                sign = -sign;
            }
        }
    }

    let mut mask = 0u8;
    let mut idx = 0;
    while idx < gens.len() {
        if idx + 1 < gens.len() && gens[idx] == gens[idx + 1] {
            sign *= GENERATOR_SQUARES[gens[idx]];
            idx += 2;
        } else {
            mask |= 1 << gens[idx];
            idx += 1;
        }
    }
    (mask, sign)
}

/// Compare all 1024 blade products of the algebra module against the
/// generator-reduction table. Returns the mismatches (empty on a correct
/// build).
pub fn cayley_check() -> Vec<CayleyMismatch> {
    let table = CayleyTable::by_generator_reduction();
    let mut mismatches = Vec::new();
    for left in 0u8..32 {
        for right in 0u8..32 {
            let (expected_mask, expected_sign) = table.entry(left, right);
            let prod = unit_blade(left).geometric(&unit_blade(right));
            let mut ok = true;
            for (m, &c) in prod.coeffs().iter().enumerate() {
                let want = if m as u8 == expected_mask {
                    expected_sign as f64
                } else {
                    0.0
                };
                if c != want {
                    ok = false;
                }
            }
            if !ok {
                mismatches.push(CayleyMismatch {
                    left,
                    right,
                    expected_mask,
                    expected_sign,
                });
            }
        }
    }
    mismatches
}

fn unit_blade(mask: u8) -> Multivector {
    let mut c = [0.0; 32];
    c[mask as usize] = 1.0;
    Multivector::from_coeffs(c)
}
