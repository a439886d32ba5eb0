//! The brace axiom and its two-part decomposition, checked on raw inverse
//! semigroups that need not form a brace.
//!
//! ```text
//! weak1:  x(y+z)      = xy - x + xz
//! weak2:  -x + x(y+z) = -x + xy - x + xz          (each λ_x additive)
//! weak3:  -xy + xyz   = -x + x(-y + yz)           (λ multiplicative)
//! ```
//!
//! Each check returns the first counterexample `(x, y, z)` in row-major order.

use crate::inverse::InverseSemigroup;

type Witness = [usize; 3];

fn scan(n: usize, mut holds: impl FnMut(usize, usize, usize) -> bool) -> Result<(), Witness> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Err([x, y, z]);
                }
            }
        }
    }
    Ok(())
}

pub fn weak1(add: &InverseSemigroup, mul: &InverseSemigroup) -> Result<(), Witness> {
    let (p, m) = (|a, b| add.op(a, b), |a, b| mul.op(a, b));
    scan(add.len(), |x, y, z| m(x, p(y, z)) == p(p(m(x, y), add.inv(x)), m(x, z)))
}

pub fn weak2(add: &InverseSemigroup, mul: &InverseSemigroup) -> Result<(), Witness> {
    let (p, m) = (|a, b| add.op(a, b), |a, b| mul.op(a, b));
    scan(add.len(), |x, y, z| {
        let nx = add.inv(x);
        p(nx, m(x, p(y, z))) == p(p(p(nx, m(x, y)), nx), m(x, z))
    })
}

pub fn weak3(add: &InverseSemigroup, mul: &InverseSemigroup) -> Result<(), Witness> {
    let (p, m) = (|a, b| add.op(a, b), |a, b| mul.op(a, b));
    scan(add.len(), |x, y, z| {
        let xy = m(x, y);
        p(add.inv(xy), m(xy, z)) == p(add.inv(x), m(x, p(add.inv(y), m(y, z))))
    })
}

/// `x x⁻¹ = -x + x`; on failure the first offending `x`.
pub fn inverse_axiom(add: &InverseSemigroup, mul: &InverseSemigroup) -> Result<(), usize> {
    match (0..add.len()).find(|&x| mul.right_unit(x) != add.left_unit(x)) {
        Some(x) => Err(x),
        None => Ok(()),
    }
}
