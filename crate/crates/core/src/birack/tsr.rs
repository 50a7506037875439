//! Linear biracks on Z_n: `B(x, y) = (sx + ty, rx)`.

use serde::Serialize;

use super::{BirackError, FiniteBirack};
use crate::zmod::{inv_mod, is_unit, mult_order};

/// Parameters of a linear birack on Z_n. Requires `t` and `r` to be units
/// and `s² ≡ (1 - t·r)·s (mod n)`; [`TsrParams::new`] enforces both.
///
/// Elements of Z_n are identified with the 1-based labels `x_1, .., x_n`
/// by `x_i ↔ i mod n`, so `x_n` carries the residue 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TsrParams {
    pub n: u64,
    pub t: u64,
    pub s: u64,
    pub r: u64,
}

impl TsrParams {
    pub fn new(n: u64, t: i64, s: i64, r: i64) -> Result<TsrParams, BirackError> {
        if n == 0 {
            return Err(BirackError::EmptySet);
        }
        let reduce = |v: i64| v.rem_euclid(n as i64) as u64;
        let (t, s, r) = (reduce(t), reduce(s), reduce(r));
        if !is_unit(t, n) {
            return Err(BirackError::NotAUnit { name: "t", value: t, n });
        }
        if !is_unit(r, n) {
            return Err(BirackError::NotAUnit { name: "r", value: r, n });
        }
        let lhs = s * s % n;
        let rhs = ((1i128 - (t as i128) * (r as i128)) * s as i128).rem_euclid(n as i128) as u64;
        if lhs != rhs {
            return Err(BirackError::TsrCongruence { lhs, rhs, n });
        }
        Ok(TsrParams { n, t, s, r })
    }

    /// The kink map sends `x` to `(t·r + s)·x`; always a unit multiplier.
    pub fn kink_multiplier(&self) -> u64 {
        (self.t * self.r + self.s) % self.n
    }

    /// Birack rank by the closed form: the multiplicative order of `t·r + s`.
    pub fn rank_by_formula(&self) -> usize {
        mult_order(self.kink_multiplier(), self.n).expect("tr + s is a unit") as usize
    }

    /// Direct evaluation of the involutory conditions
    /// `t² = r² = 1` and `(t + r)s = (1 - r)s = 0`, without building tables.
    pub fn involutory_criterion(&self) -> bool {
        let n = self.n as i128;
        let (t, s, r) = (self.t as i128, self.s as i128, self.r as i128);
        (t * t - 1).rem_euclid(n) == 0
            && (r * r - 1).rem_euclid(n) == 0
            && ((t + r) * s).rem_euclid(n) == 0
            && ((1 - r) * s).rem_euclid(n) == 0
    }

    /// Closed form of the sideways map: `S(u, v) = (r·v, t⁻¹·u − t⁻¹·s·v)`.
    pub fn sideways_closed_form(&self, u: u64, v: u64) -> (u64, u64) {
        let n = self.n;
        let t_inv = inv_mod(self.t, n).expect("t is a unit");
        let first = self.r * v % n;
        let second =
            ((t_inv as i128) * (u as i128 - (self.s as i128) * (v as i128))).rem_euclid(n as i128)
                as u64;
        (first, second)
    }
}

impl FiniteBirack {
    /// Build the operation tables of a linear birack on Z_n.
    pub fn tsr(params: &TsrParams) -> FiniteBirack {
        let n = params.n;
        let residue = |idx: usize| (idx as u64 + 1) % n;
        let index = |res: u64| ((res + n - 1) % n) as usize;
        FiniteBirack::from_fn(n as usize, |x, y| {
            let (xr, yr) = (residue(x), residue(y));
            let first = (params.s * xr + params.t * yr) % n;
            let second = params.r * xr % n;
            (index(first), index(second))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_parameters() {
        assert!(TsrParams::new(4, 1, 2, 3).is_ok());
        assert!(TsrParams::new(11, 6, 5, 3).is_ok());
        assert!(TsrParams::new(3, 2, 2, 1).is_ok());
        // s² = 1 but (1 - t·r)s = 0 mod 4
        assert!(matches!(
            TsrParams::new(4, 1, 1, 1),
            Err(BirackError::TsrCongruence { lhs: 1, rhs: 0, n: 4 })
        ));
        assert!(matches!(
            TsrParams::new(4, 2, 0, 1),
            Err(BirackError::NotAUnit { name: "t", .. })
        ));
        // negative inputs reduce mod n
        let p = TsrParams::new(5, -1, 0, -2).unwrap();
        assert_eq!((p.t, p.s, p.r), (4, 0, 3));
    }

    #[test]
    fn involutory_criterion_examples() {
        assert!(TsrParams::new(4, 1, 2, 3).unwrap().involutory_criterion());
        assert!(!TsrParams::new(11, 6, 5, 3).unwrap().involutory_criterion());
        assert!(TsrParams::new(3, 2, 2, 1).unwrap().involutory_criterion());
    }

    #[test]
    fn tables_match_criterion_and_formula() {
        for (n, t, s, r) in [(4, 1, 2, 3), (11, 6, 5, 3), (3, 2, 2, 1), (1, 0, 0, 0)] {
            let p = TsrParams::new(n, t, s, r).unwrap();
            let b = FiniteBirack::tsr(&p);
            assert!(b.verify_axioms().all_pass(), "({n},{t},{s},{r})");
            assert_eq!(b.is_involutory(), p.involutory_criterion());
            assert_eq!(b.rank(), Some(p.rank_by_formula()));
        }
    }

    #[test]
    fn kink_map_matches_multiplier() {
        // (3,2,2,1): π(x) = (2·1+2)x = 4x = x, so N = 1.
        let p = TsrParams::new(3, 2, 2, 1).unwrap();
        let b = FiniteBirack::tsr(&p);
        assert!(b.kink_map().unwrap().is_identity());
        assert_eq!(b.rank(), Some(1));
        // (4,1,2,3): π(x) = 5x = x mod 4.
        let p = TsrParams::new(4, 1, 2, 3).unwrap();
        let b = FiniteBirack::tsr(&p);
        assert!(b.kink_map().unwrap().is_identity());
        assert_eq!(b.rank(), Some(1));
    }

    #[test]
    fn sideways_closed_form_agrees_with_tables() {
        let p = TsrParams::new(3, 2, 2, 1).unwrap();
        let b = FiniteBirack::tsr(&p);
        let index = |res: u64| ((res + p.n - 1) % p.n) as usize;
        let residue = |idx: usize| (idx as u64 + 1) % p.n;
        for u in 0..3 {
            for v in 0..3 {
                let (f, s) = p.sideways_closed_form(residue(u), residue(v));
                assert_eq!(b.sideways(u, v), Some((index(f), index(s))));
            }
        }
        // Fox kei: S(u, v) = (v, 2u + 2v) mod 3
        for u in 0..3u64 {
            for v in 0..3u64 {
                assert_eq!(p.sideways_closed_form(u, v), (v, (2 * u + 2 * v) % 3));
            }
        }
    }
}
