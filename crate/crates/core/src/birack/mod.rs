//! Finite biracks as operation tables.
//!
//! A birack is a set `X` with an invertible map `B: X×X → X×X` that is
//! sideways invertible, diagonally bijective, and satisfies the
//! set-theoretic Yang-Baxter equation. The columns of the operation
//! tables are the maps `u_x(y) = B_1(x,y)` and `l_x(y) = B_2(y,x)`.
//! Everything here works with 0-based element indices; matrix I/O and the
//! CLI use the 1-based labels `x_1, .., x_n`.

mod colgroup;
mod matrix;
mod tsr;

pub use colgroup::{ColumnGroup, COLUMN_GROUP_MAX};
pub use tsr::TsrParams;

use std::fmt;

use thiserror::Error;

use crate::perm::{is_perm_images, Perm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BirackError {
    #[error("set size must be at least 1")]
    EmptySet,
    #[error("expected an {n}x{n} table, found row of length {found}")]
    BadShape { n: usize, found: usize },
    #[error("entry {value} at row {row}, column {col} of {table} is out of range 1..={n}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("column {col} of {table} is not a permutation")]
    ColumnNotPermutation { table: &'static str, col: usize },
    #[error("{name} = {value} is not a unit modulo {n}")]
    NotAUnit {
        name: &'static str,
        value: u64,
        n: u64,
    },
    #[error("s^2 = {lhs} but (1 - t*r)*s = {rhs} modulo {n}")]
    TsrCongruence { lhs: u64, rhs: u64, n: u64 },
    #[error("permutations act on sets of different sizes ({a} vs {b})")]
    SizeMismatch { a: usize, b: usize },
    #[error("sigma and rho do not commute: sigma(rho({x})) = {sr} but rho(sigma({x})) = {rs} (1-based)")]
    NonCommuting { x: usize, sr: usize, rs: usize },
    #[error("element index {index} out of range for a {n}-element set")]
    ElementOutOfRange { index: usize, n: usize },
    #[error("column group closure is limited to sets of at most {max} elements, got {n}")]
    ColumnGroupLimit { n: usize, max: usize },
    #[error("operation requires a structure passing the birack axioms; run verify_axioms")]
    NotVerified,
    #[error("matrix file: {0}")]
    MatrixFile(String),
}

/// One axiom check inside an [`AxiomReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Witness),
    Skipped(&'static str),
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }
}

/// Concrete counterexample attached to a failed check. All indices 0-based;
/// `Display` reports the 1-based element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two distinct pairs with the same image under B.
    PairCollision {
        a: (usize, usize),
        b: (usize, usize),
        image: (usize, usize),
    },
    /// The defining property of S forces two different values at `key`.
    SidewaysAmbiguous {
        key: (usize, usize),
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Two keys would need the same S-value, so S cannot be invertible.
    SidewaysNotInjective {
        a: (usize, usize),
        b: (usize, usize),
        image: (usize, usize),
    },
    /// One of the four diagonal maps repeats a value.
    DiagonalCollision {
        map: &'static str,
        x: usize,
        y: usize,
        value: usize,
    },
    /// A triple where the two Yang-Baxter composites disagree.
    YangBaxter {
        triple: (usize, usize, usize),
        lhs: (usize, usize, usize),
        rhs: (usize, usize, usize),
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |(a, b): (usize, usize)| format!("(x{}, x{})", a + 1, b + 1);
        match self {
            Witness::PairCollision { a, b, image } => {
                write!(f, "B{} = B{} = {}", p(*a), p(*b), p(*image))
            }
            Witness::SidewaysAmbiguous { key, first, second } => write!(
                f,
                "S{} would need both {} and {}",
                p(*key),
                p(*first),
                p(*second)
            ),
            Witness::SidewaysNotInjective { a, b, image } => {
                write!(f, "S{} = S{} = {}", p(*a), p(*b), p(*image))
            }
            Witness::DiagonalCollision { map, x, y, value } => write!(
                f,
                "{} maps both x{} and x{} to x{}",
                map,
                x + 1,
                y + 1,
                value + 1
            ),
            Witness::YangBaxter { triple, lhs, rhs } => write!(
                f,
                "triple (x{}, x{}, x{}): lhs (x{}, x{}, x{}) != rhs (x{}, x{}, x{})",
                triple.0 + 1,
                triple.1 + 1,
                triple.2 + 1,
                lhs.0 + 1,
                lhs.1 + 1,
                lhs.2 + 1,
                rhs.0 + 1,
                rhs.1 + 1,
                rhs.2 + 1
            ),
        }
    }
}

/// Result of checking the four birack axioms on a pair of tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub pair_bijective: Check,
    pub sideways: Check,
    pub diagonal_bijective: Check,
    pub yang_baxter: Check,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.pair_bijective.passed()
            && self.sideways.passed()
            && self.diagonal_bijective.passed()
            && self.yang_baxter.passed()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, name: &str, c: &Check| match c {
            Check::Pass => writeln!(f, "{name}: pass"),
            Check::Fail(w) => writeln!(f, "{name}: FAIL ({w})"),
            Check::Skipped(why) => writeln!(f, "{name}: skipped ({why})"),
        };
        line(f, "pair bijectivity", &self.pair_bijective)?;
        line(f, "sideways invertibility", &self.sideways)?;
        line(f, "diagonal bijectivity", &self.diagonal_bijective)?;
        line(f, "yang-baxter", &self.yang_baxter)
    }
}

/// Membership of a verified structure in the standard subfamilies.
///
/// The flags are cumulative: every bikei is an involutory biquandle, every
/// kei is both a bikei and a quandle, and so on. For a table failing the
/// birack axioms all flags are false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ClassificationFlags {
    pub is_birack: bool,
    pub is_involutory: bool,
    pub is_rack: bool,
    pub is_quandle: bool,
    pub is_biquandle: bool,
    pub is_bikei: bool,
    pub is_kei: bool,
}

struct SidewaysTables {
    s1: Vec<usize>,
    s2: Vec<usize>,
    sinv1: Vec<usize>,
    sinv2: Vec<usize>,
}

struct KinkData {
    alpha: Perm,
    pi: Perm,
    rank: usize,
}

/// Cached maps derived from the operation tables. Each stage is present
/// only when the structure supports it.
struct Derived {
    sideways: Option<SidewaysTables>,
    inverse: Option<(Vec<usize>, Vec<usize>)>,
    kink: Option<KinkData>,
}

/// A finite set with a pair operation `B`, stored as two n×n tables.
///
/// Values are immutable after construction; derived maps (B⁻¹, S, α, π,
/// rank) are computed once and shared.
pub struct FiniteBirack {
    n: usize,
    b1: Vec<usize>,
    b2: Vec<usize>,
    derived: Derived,
}

impl Clone for FiniteBirack {
    fn clone(&self) -> Self {
        FiniteBirack::from_fn(self.n, |x, y| (self.b1[x * self.n + y], self.b2[x * self.n + y]))
    }
}

impl PartialEq for FiniteBirack {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.b1 == other.b1 && self.b2 == other.b2
    }
}

impl Eq for FiniteBirack {}

impl fmt::Debug for FiniteBirack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteBirack(n={}, b1={:?}, b2={:?})", self.n, self.b1, self.b2)
    }
}

impl FiniteBirack {
    /// Build from the map `(x, y) ↦ B(x, y)` on 0-based indices.
    ///
    /// No axioms are checked; derived maps are populated as far as the
    /// tables allow. Use [`FiniteBirack::verify_axioms`] afterwards.
    pub fn from_fn(n: usize, b: impl Fn(usize, usize) -> (usize, usize)) -> FiniteBirack {
        assert!(n > 0, "set size must be at least 1");
        let mut b1 = vec![0; n * n];
        let mut b2 = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (p, q) = b(x, y);
                assert!(p < n && q < n, "operation table entry out of range");
                b1[x * n + y] = p;
                b2[x * n + y] = q;
            }
        }
        let derived = compute_derived(n, &b1, &b2);
        FiniteBirack { n, b1, b2, derived }
    }

    /// The constant action birack `B(x, y) = (sigma(y), rho(x))` of a pair
    /// of commuting bijections. Rejects non-commuting inputs, which would
    /// fail the Yang-Baxter equation.
    pub fn constant_action(sigma: &Perm, rho: &Perm) -> Result<FiniteBirack, BirackError> {
        if sigma.len() != rho.len() {
            return Err(BirackError::SizeMismatch {
                a: sigma.len(),
                b: rho.len(),
            });
        }
        if sigma.is_empty() {
            return Err(BirackError::EmptySet);
        }
        for x in 0..sigma.len() {
            let sr = sigma.apply(rho.apply(x));
            let rs = rho.apply(sigma.apply(x));
            if sr != rs {
                return Err(BirackError::NonCommuting {
                    x: x + 1,
                    sr: sr + 1,
                    rs: rs + 1,
                });
            }
        }
        Ok(FiniteBirack::from_fn(sigma.len(), |x, y| {
            (sigma.apply(y), rho.apply(x))
        }))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `B(x, y)`, 0-based.
    pub fn b(&self, x: usize, y: usize) -> (usize, usize) {
        (self.b1[x * self.n + y], self.b2[x * self.n + y])
    }

    pub fn b1(&self, x: usize, y: usize) -> usize {
        self.b1[x * self.n + y]
    }

    pub fn b2(&self, x: usize, y: usize) -> usize {
        self.b2[x * self.n + y]
    }

    /// `B⁻¹(x, y)` when B is a bijection of pairs.
    pub fn b_inv(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        let (i1, i2) = self.derived.inverse.as_ref()?;
        Some((i1[x * self.n + y], i2[x * self.n + y]))
    }

    /// The sideways map `S`, defined by `S(B_1(x,y), x) = (B_2(x,y), y)`.
    pub fn sideways(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let s = self.derived.sideways.as_ref()?;
        Some((s.s1[u * self.n + v], s.s2[u * self.n + v]))
    }

    pub fn sideways_inv(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let s = self.derived.sideways.as_ref()?;
        Some((s.sinv1[u * self.n + v], s.sinv2[u * self.n + v]))
    }

    /// Full table of S as `(S_1, S_2)` pairs in row-major order, when S exists.
    pub fn sideways_map(&self) -> Option<Vec<Vec<(usize, usize)>>> {
        let s = self.derived.sideways.as_ref()?;
        Some(
            (0..self.n)
                .map(|u| {
                    (0..self.n)
                        .map(|v| (s.s1[u * self.n + v], s.s2[u * self.n + v]))
                        .collect()
                })
                .collect(),
        )
    }

    /// `u_x(y) = B_1(x, y)` as a permutation, when the column is bijective.
    pub fn u_map(&self, x: usize) -> Option<Perm> {
        Perm::from_images((0..self.n).map(|y| self.b1(x, y)).collect())
    }

    /// `l_x(y) = B_2(y, x)` as a permutation, when the column is bijective.
    pub fn l_map(&self, x: usize) -> Option<Perm> {
        Perm::from_images((0..self.n).map(|y| self.b2(y, x)).collect())
    }

    /// The bijection α from the framed type I move labels.
    pub fn alpha(&self) -> Option<&Perm> {
        self.derived.kink.as_ref().map(|k| &k.alpha)
    }

    /// The kink map π.
    pub fn kink_map(&self) -> Option<&Perm> {
        self.derived.kink.as_ref().map(|k| &k.pi)
    }

    /// The birack rank N: the exponent of π.
    pub fn rank(&self) -> Option<usize> {
        self.derived.kink.as_ref().map(|k| k.rank)
    }

    /// Kink map and rank together; errors when the structure does not
    /// support them (fails the sideways or diagonal axioms).
    pub fn kink_map_and_rank(&self) -> Result<(Perm, usize), BirackError> {
        let k = self.derived.kink.as_ref().ok_or(BirackError::NotVerified)?;
        Ok((k.pi.clone(), k.rank))
    }

    /// Check all four birack axioms, reporting a witness for each failure.
    pub fn verify_axioms(&self) -> AxiomReport {
        verify_tables(self.n, &self.b1, &self.b2)
    }

    /// True when `(τ∘B)² = Id` and `S = B⁻¹`, the conditions for labeling
    /// unoriented diagrams. Returns false for tables that are not biracks.
    pub fn is_involutory(&self) -> bool {
        let n = self.n;
        let Some((i1, i2)) = self.derived.inverse.as_ref() else {
            return false;
        };
        let Some(s) = self.derived.sideways.as_ref() else {
            return false;
        };
        for x in 0..n {
            for y in 0..n {
                let (p, q) = self.b(x, y);
                let (p2, q2) = self.b(q, p);
                if (q2, p2) != (x, y) {
                    return false;
                }
                if s.s1[x * n + y] != i1[x * n + y] || s.s2[x * n + y] != i2[x * n + y] {
                    return false;
                }
            }
        }
        // Involutory biracks have involutions for columns.
        debug_assert!((0..n).all(|x| {
            self.u_map(x).is_some_and(|u| u.is_involution())
                && self.l_map(x).is_some_and(|l| l.is_involution())
        }));
        true
    }

    /// Classify against the standard subfamilies. All flags are false when
    /// the axioms fail.
    pub fn classify(&self) -> ClassificationFlags {
        let is_birack = self.verify_axioms().all_pass();
        if !is_birack {
            return ClassificationFlags {
                is_birack: false,
                is_involutory: false,
                is_rack: false,
                is_quandle: false,
                is_biquandle: false,
                is_bikei: false,
                is_kei: false,
            };
        }
        let is_involutory = self.is_involutory();
        let is_rack = (0..self.n).all(|x| (0..self.n).all(|y| self.b2(x, y) == x));
        let rank_one = self.rank() == Some(1);
        ClassificationFlags {
            is_birack,
            is_involutory,
            is_rack,
            is_quandle: is_rack && rank_one,
            is_biquandle: rank_one,
            is_bikei: is_involutory && rank_one,
            is_kei: is_involutory && is_rack && rank_one,
        }
    }

    /// Smallest superset of `seed` closed under both components of B.
    /// Elements are 0-based; the result is sorted.
    pub fn subbirack_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        for &e in seed {
            assert!(e < self.n, "seed element out of range");
            in_set[e] = true;
        }
        loop {
            let members: Vec<usize> = (0..self.n).filter(|&e| in_set[e]).collect();
            let mut grew = false;
            for &x in &members {
                for &y in &members {
                    let (p, q) = self.b(x, y);
                    if !in_set[p] {
                        in_set[p] = true;
                        grew = true;
                    }
                    if !in_set[q] {
                        in_set[q] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        (0..self.n).filter(|&e| in_set[e]).collect()
    }
}

/// Check the four birack axioms on raw tables (flat, row-major, 0-based).
///
/// Works on arbitrary tables, including ones rejected by the validating
/// constructors, so that failures can be reported rather than refused.
pub fn verify_tables(n: usize, b1: &[usize], b2: &[usize]) -> AxiomReport {
    assert_eq!(b1.len(), n * n);
    assert_eq!(b2.len(), n * n);

    let pair_bijective = check_pair_bijective(n, b1, b2);
    let sideways = check_sideways(n, b1, b2);
    let diagonal_bijective = if sideways.passed() {
        check_diagonals(n, b1, b2)
    } else {
        Check::Skipped("sideways map unavailable")
    };
    let yang_baxter = check_yang_baxter(n, b1, b2);

    AxiomReport {
        pair_bijective,
        sideways,
        diagonal_bijective,
        yang_baxter,
    }
}

fn check_pair_bijective(n: usize, b1: &[usize], b2: &[usize]) -> Check {
    let mut seen: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let image = (b1[x * n + y], b2[x * n + y]);
            let key = image.0 * n + image.1;
            if let Some(prev) = seen[key] {
                return Check::Fail(Witness::PairCollision {
                    a: prev,
                    b: (x, y),
                    image,
                });
            }
            seen[key] = Some((x, y));
        }
    }
    Check::Pass
}

fn check_sideways(n: usize, b1: &[usize], b2: &[usize]) -> Check {
    // S(B_1(x,y), x) = (B_2(x,y), y): well-defined iff no key is forced to
    // two values, invertible iff no two keys share a value.
    let mut defined: Vec<Option<(usize, usize)>> = vec![None; n * n];
    let mut keys_by_value: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let key = (b1[x * n + y], x);
            let value = (b2[x * n + y], y);
            if let Some(prev) = defined[key.0 * n + key.1] {
                if prev != value {
                    return Check::Fail(Witness::SidewaysAmbiguous {
                        key,
                        first: prev,
                        second: value,
                    });
                }
            }
            defined[key.0 * n + key.1] = Some(value);
        }
    }
    for u in 0..n {
        for v in 0..n {
            // Injectivity of x ↦ B_1(x, y) makes every key defined once all
            // ambiguity checks pass; an undefined key therefore shows up as
            // an ambiguous one elsewhere, but guard anyway.
            let Some(value) = defined[u * n + v] else {
                return Check::Fail(Witness::SidewaysAmbiguous {
                    key: (u, v),
                    first: (0, 0),
                    second: (0, 0),
                });
            };
            if let Some(prev_key) = keys_by_value[value.0 * n + value.1] {
                return Check::Fail(Witness::SidewaysNotInjective {
                    a: prev_key,
                    b: (u, v),
                    image: value,
                });
            }
            keys_by_value[value.0 * n + value.1] = Some((u, v));
        }
    }
    Check::Pass
}

fn check_diagonals(n: usize, b1: &[usize], b2: &[usize]) -> Check {
    let Some(s) = build_sideways(n, b1, b2) else {
        return Check::Skipped("sideways map unavailable");
    };
    let maps: [(&'static str, Box<dyn Fn(usize) -> usize>); 4] = [
        ("S_1∘Δ", Box::new(|x| s.s1[x * n + x])),
        ("S_2∘Δ", Box::new(|x| s.s2[x * n + x])),
        ("S_1⁻¹∘Δ", Box::new(|x| s.sinv1[x * n + x])),
        ("S_2⁻¹∘Δ", Box::new(|x| s.sinv2[x * n + x])),
    ];
    for (name, map) in &maps {
        let mut seen: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let v = map(x);
            if let Some(prev) = seen[v] {
                return Check::Fail(Witness::DiagonalCollision {
                    map: name,
                    x: prev,
                    y: x,
                    value: v,
                });
            }
            seen[v] = Some(x);
        }
    }
    Check::Pass
}

fn check_yang_baxter(n: usize, b1: &[usize], b2: &[usize]) -> Check {
    let b = |x: usize, y: usize| (b1[x * n + y], b2[x * n + y]);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // (B×Id)∘(Id×B)∘(B×Id)
                let (a, bb) = b(x, y);
                let (c, d) = b(bb, z);
                let (e, f) = b(a, c);
                let lhs = (e, f, d);
                // (Id×B)∘(B×Id)∘(Id×B)
                let (p, q) = b(y, z);
                let (r, s) = b(x, p);
                let (t, u) = b(s, q);
                let rhs = (r, t, u);
                if lhs != rhs {
                    return Check::Fail(Witness::YangBaxter {
                        triple: (x, y, z),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Check::Pass
}

fn build_sideways(n: usize, b1: &[usize], b2: &[usize]) -> Option<SidewaysTables> {
    // Requires every u_x (row of b1) and every l_x (column of b2) bijective.
    for x in 0..n {
        let u: Vec<usize> = (0..n).map(|y| b1[x * n + y]).collect();
        if !is_perm_images(&u) {
            return None;
        }
        let l: Vec<usize> = (0..n).map(|y| b2[y * n + x]).collect();
        if !is_perm_images(&l) {
            return None;
        }
    }
    let mut s1 = vec![0; n * n];
    let mut s2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let key = b1[x * n + y] * n + x;
            s1[key] = b2[x * n + y];
            s2[key] = y;
        }
    }
    let mut sinv1 = vec![0; n * n];
    let mut sinv2 = vec![0; n * n];
    for u in 0..n {
        for v in 0..n {
            let key = s1[u * n + v] * n + s2[u * n + v];
            sinv1[key] = u;
            sinv2[key] = v;
        }
    }
    Some(SidewaysTables { s1, s2, sinv1, sinv2 })
}

fn compute_derived(n: usize, b1: &[usize], b2: &[usize]) -> Derived {
    let sideways = build_sideways(n, b1, b2);

    let inverse = {
        let mut i1 = vec![0; n * n];
        let mut i2 = vec![0; n * n];
        let mut seen = vec![false; n * n];
        let mut ok = true;
        'scan: for x in 0..n {
            for y in 0..n {
                let key = b1[x * n + y] * n + b2[x * n + y];
                if seen[key] {
                    ok = false;
                    break 'scan;
                }
                seen[key] = true;
                i1[key] = x;
                i2[key] = y;
            }
        }
        ok.then_some((i1, i2))
    };

    let kink = sideways.as_ref().and_then(|s| {
        // α = (S_2⁻¹∘Δ)⁻¹ and π(x) = S_1⁻¹(α(x), α(x)); present only when
        // all four diagonal maps are bijections.
        for diag in [
            (0..n).map(|x| s.s1[x * n + x]).collect::<Vec<_>>(),
            (0..n).map(|x| s.s2[x * n + x]).collect(),
            (0..n).map(|x| s.sinv1[x * n + x]).collect(),
            (0..n).map(|x| s.sinv2[x * n + x]).collect(),
        ] {
            if !is_perm_images(&diag) {
                return None;
            }
        }
        let alpha_inv = Perm::from_images((0..n).map(|x| s.sinv2[x * n + x]).collect())?;
        let alpha = alpha_inv.inverse();
        let pi = Perm::from_images(
            (0..n)
                .map(|x| {
                    let a = alpha.apply(x);
                    s.sinv1[a * n + a]
                })
                .collect(),
        )?;
        let rank = pi.order();
        Some(KinkData { alpha, pi, rank })
    });

    Derived {
        sideways,
        inverse,
        kink,
    }
}
