//! Basis blades of the 32-dimensional algebra and their product signs.
//!
//! Storage uses the diagonal basis {e1, e2, e3, e+, e-} with squares
//! (+1, +1, +1, +1, -1). A blade is a 5-bit mask, one bit per generator,
//! so the algebra has 32 blades and the product of two blades lands on
//! the XOR of their masks. The API-facing basis replaces {e+, e-} by the
//! null vectors n = e- + e+ (infinity) and nb = (e- - e+)/2 (origin),
//! which square to zero and satisfy n * nb = -1.

use std::sync::LazyLock;

pub(crate) const DIM: usize = 5;
pub(crate) const BLADE_COUNT: usize = 32;

// Internal generator bits.
pub(crate) const B_E1: u8 = 1 << 0;
pub(crate) const B_E2: u8 = 1 << 1;
pub(crate) const B_E3: u8 = 1 << 2;
#[cfg(test)]
pub(crate) const B_EP: u8 = 1 << 3;
pub(crate) const B_EM: u8 = 1 << 4;

/// Blade masks for the null basis {e1, e2, e3, n, nb}.
///
/// This is the coefficient layout used by [`crate::Multivector::null_coeffs`]
/// and [`crate::Multivector::from_null_coeffs`]: index = OR of generator
/// bits, with the generators of a blade in ascending bit order (e.g. the
/// blade `e1^n^nb` has index `E1 | N | NB`).
pub mod mask {
    pub const E1: u8 = 1 << 0;
    pub const E2: u8 = 1 << 1;
    pub const E3: u8 = 1 << 2;
    pub const N: u8 = 1 << 3;
    pub const NB: u8 = 1 << 4;
}

const NULL_GEN_NAMES: [&str; DIM] = ["e1", "e2", "e3", "n", "nb"];

/// Sign of reordering the concatenation of two ascending generator lists
/// into one ascending list (no cancellation): counts the transpositions.
pub(crate) const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut a = (a as u32) >> 1;
    let b = b as u32;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Product sign of two internal blades: reorder sign times the squares of
/// the cancelled common generators (only e- squares to -1).
const fn product_sign(a: u8, b: u8) -> i8 {
    let metric = if a & b & B_EM != 0 { -1 } else { 1 };
    reorder_sign(a, b) * metric
}

const fn build_sign_table() -> [[i8; BLADE_COUNT]; BLADE_COUNT] {
    let mut table = [[0i8; BLADE_COUNT]; BLADE_COUNT];
    let mut a = 0;
    while a < BLADE_COUNT {
        let mut b = 0;
        while b < BLADE_COUNT {
            table[a][b] = product_sign(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    table
}

/// Geometric-product signs for all internal blade pairs; the result blade
/// mask is always `a ^ b`.
pub(crate) const SIGN: [[i8; BLADE_COUNT]; BLADE_COUNT] = build_sign_table();

/// Reverse sign for a grade-k blade: (-1)^(k(k-1)/2).
pub(crate) const fn reverse_sign(mask: u8) -> f64 {
    let k = mask.count_ones();
    if (k * k.wrapping_sub(1) / 2) & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Metric-free wedge of a coefficient array with a vector given by its five
/// generator coordinates. Valid over any linear basis.
fn wedge_vector(acc: &[f64; BLADE_COUNT], vector: &[f64; DIM]) -> [f64; BLADE_COUNT] {
    let mut out = [0.0; BLADE_COUNT];
    for (m, &c) in acc.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        for (g, &x) in vector.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            let gb = 1u8 << g;
            if m as u8 & gb == 0 {
                out[m | gb as usize] += c * x * reorder_sign(m as u8, gb) as f64;
            }
        }
    }
    out
}

/// Expansion of each source blade over the target basis, given the target
/// coordinates of the five source generators.
fn change_of_basis(generators: &[[f64; DIM]; DIM]) -> [[f64; BLADE_COUNT]; BLADE_COUNT] {
    let mut rows = [[0.0; BLADE_COUNT]; BLADE_COUNT];
    for (m, row) in rows.iter_mut().enumerate() {
        let mut acc = [0.0; BLADE_COUNT];
        acc[0] = 1.0;
        for (g, gen) in generators.iter().enumerate() {
            if m & (1 << g) != 0 {
                acc = wedge_vector(&acc, gen);
            }
        }
        *row = acc;
    }
    rows
}

// n = e+ + e-, nb = (e- - e+)/2, in internal coordinates {e1,e2,e3,e+,e-}.
const NULL_GENERATORS: [[f64; DIM]; DIM] = [
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0, 1.0],
    [0.0, 0.0, 0.0, -0.5, 0.5],
];

// e+ = n/2 - nb, e- = n/2 + nb, in null coordinates {e1,e2,e3,n,nb}.
const INTERNAL_GENERATORS: [[f64; DIM]; DIM] = [
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.5, -1.0],
    [0.0, 0.0, 0.0, 0.5, 1.0],
];

/// Row `m`: internal coefficients of null-basis blade `m`.
pub(crate) static NULL_TO_INTERNAL: LazyLock<[[f64; BLADE_COUNT]; BLADE_COUNT]> =
    LazyLock::new(|| change_of_basis(&NULL_GENERATORS));

/// Row `m`: null-basis coefficients of internal blade `m`.
pub(crate) static INTERNAL_TO_NULL: LazyLock<[[f64; BLADE_COUNT]; BLADE_COUNT]> =
    LazyLock::new(|| change_of_basis(&INTERNAL_GENERATORS));

/// Name of a null-basis blade, generators in ascending bit order.
pub fn null_blade_name(mask: u8) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (g, name) in NULL_GEN_NAMES.iter().enumerate() {
        if mask & (1 << g) != 0 {
            parts.push(*name);
        }
    }
    parts.join("^")
}

/// All 32 null-basis blade masks sorted by grade, then by blade name.
pub fn null_blade_order() -> [u8; BLADE_COUNT] {
    let mut masks: Vec<u8> = (0..BLADE_COUNT as u8).collect();
    masks.sort_by(|a, b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| null_blade_name(*a).cmp(&null_blade_name(*b)))
    });
    let mut out = [0u8; BLADE_COUNT];
    out.copy_from_slice(&masks);
    out
}
