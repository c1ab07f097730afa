use crate::error::Result;
use crate::lattice::LatticePoint;
use crate::scheme::Scheme;
use crate::BOUNDARY_TOL;

use super::require_balanced;

/// Indexed walk `j ↦ x_j` through `Λ_F` for the balanced window, driven by
/// the two-gap step rule and kept as lattice integers.
///
/// A step on the first piece is `(m, n) → (m + 1, n)`; on the second it is
/// `(m, n) → (m, n − 1)`.
#[derive(Debug, Clone)]
pub struct ModelSetWalk {
    scheme: Scheme,
    m: i64,
    n: i64,
    index: i64,
}

impl ModelSetWalk {
    /// Starts at `x_0 = 0`.
    pub fn new(scheme: &Scheme) -> Result<Self> {
        require_balanced(scheme)?;
        Ok(Self { scheme: *scheme, m: 0, n: 0, index: 0 })
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn lattice(&self) -> LatticePoint {
        LatticePoint::new(self.m, self.n, 0)
    }

    pub fn x(&self) -> f64 {
        self.scheme.physical(self.m, self.n)
    }

    pub fn x_star(&self) -> f64 {
        self.scheme.internal(self.m, self.n)
    }

    pub fn advance(&mut self) {
        if self.x_star() < self.scheme.cos_theta() - BOUNDARY_TOL {
            self.m += 1;
        } else {
            self.n -= 1;
        }
        self.index += 1;
    }

    pub fn retreat(&mut self) {
        // predecessor came from the first piece iff x* ≥ sinθ
        if self.x_star() >= self.scheme.sin_theta() - BOUNDARY_TOL {
            self.m -= 1;
        } else {
            self.n += 1;
        }
        self.index -= 1;
    }

    pub fn seek(&mut self, j: i64) {
        while self.index < j {
            self.advance();
        }
        while self.index > j {
            self.retreat();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_model_set, Budget};

    #[test]
    fn walk_matches_enumeration_both_ways() {
        for scheme in [Scheme::thirty_degrees(1.0).unwrap().balanced(), Scheme::fibonacci(1.0).unwrap().balanced()] {
            let pts = enumerate_model_set(&scheme, -30.0, 30.0, Budget::default()).unwrap();
            let zero = pts.iter().position(|p| p.lattice == LatticePoint::ORIGIN).unwrap();
            let mut walk = ModelSetWalk::new(&scheme).unwrap();
            for p in &pts[zero..] {
                assert_eq!(walk.lattice(), p.lattice);
                walk.advance();
            }
            walk.seek(0);
            for p in pts[..=zero].iter().rev() {
                assert_eq!(walk.lattice(), p.lattice);
                walk.retreat();
            }
        }
    }
}
