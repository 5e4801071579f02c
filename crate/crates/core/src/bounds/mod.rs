//! Exact evaluation of the closed-form bounds on planar Turán numbers, and the
//! comparison of the glued construction against the `(3 - 3/k)n - 6 - 6/k`
//! conjecture.
//!
//! Every value is an exact [`Rational`]. The single irrational formula
//! (`ck-power-conjecture`, with exponent `log2 3`) is returned as
//! [`BoundValue::Approximate`] and is never compared.

mod rational;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use rational::{frac, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("formula `{id}` needs parameter `{param}`")]
    MissingParameter { id: FormulaId, param: &'static str },
    #[error("formula `{id}` out of range: {reason}")]
    OutOfRange { id: FormulaId, reason: String },
    #[error("formula `{0}` has no exact value")]
    NotExact(FormulaId),
}

macro_rules! formulas {
    ($( $variant:ident => $id:literal, $desc:literal; )*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
        pub enum FormulaId { $( $variant, )* }

        impl FormulaId {
            pub const ALL: &'static [FormulaId] = &[$( FormulaId::$variant, )*];

            pub fn as_str(self) -> &'static str {
                match self { $( FormulaId::$variant => $id, )* }
            }

            pub fn description(self) -> &'static str {
                match self { $( FormulaId::$variant => $desc, )* }
            }
        }

        impl FromStr for FormulaId {
            type Err = BoundError;
            fn from_str(s: &str) -> Result<Self, BoundError> {
                match s {
                    $( $id => Ok(FormulaId::$variant), )*
                    _ => Err(BoundError::UnknownFormula(s.to_string())),
                }
            }
        }
    };
}

formulas! {
    C3Exact => "c3-exact", "ex(n, C_3) = 2n-4, n >= 3";
    C4Upper => "c4-upper", "ex(n, C_4) <= 15(n-2)/7, n >= 4";
    C5Upper => "c5-upper", "ex(n, C_5) <= (12n-33)/5, n >= 11";
    Theta4Upper => "theta4-upper", "ex(n, Theta_4) <= 12(n-2)/5, n >= 4";
    Theta5Upper => "theta5-upper", "ex(n, Theta_5) <= 5(n-2)/2, n >= 5";
    Theta6Upper => "theta6-upper", "ex(n, C_6) <= ex(n, Theta_6) <= 18(n-2)/7, n >= 6";
    C6Upper => "c6-upper", "ex(n, C_6) <= (5n-14)/2, n >= 18";
    Theta6SharpUpper => "theta6-sharp-upper", "ex(n, Theta_6) <= (18n-48)/7, n >= 14";
    CkConjecture => "ck-conjecture", "conjectured ex(n, C_k) <= (3-3/k)n-6-6/k, k >= 7";
    CkProgressionLower => "ck-progression-lower",
        "ex(n, C_k) lower bound on the progression n = ((k-1)(5l-2)/2+2)(floor(3(k-1)/2)-5)-(5l-4), k >= 11, l even";
    CkPowerConjecture => "ck-power-conjecture", "conjectured ex(n, C_k) <= (3-3/(D k^log2(3)))n; approximate";
    CkSmall => "ck-small", "ex(n, C_k) = 3n-6 for k >= 11, k <= n <= k-5+floor((k-1)/2)";
    CkGluedLower => "ck-glued-lower",
        "ex(n, C_k) >= (3-(3-2/(k-1))/M)n + (12+3r-(8+2r)/(k-1))/M + 4/(k-1) - min(r+10, 11), M = k-6+floor((k-1)/2), r = (n-4) mod M";
    CkGluedExact => "ck-glued-exact",
        "edge count of the glued construction: 3n-3t+2floor((t+1)/(k-1))-min(r+8, 9), t*M + r = n-4";
    TwoCkLower => "two-ck-lower",
        "ex(n, 2C_k) >= (3-1/(k-2))n + (3+r)/(k-2) - 5 + max(1-r, 0), r = (n-3) mod (k-2), n >= 2k >= 8";
    C4PlusUpper => "c4-plus-upper", "ex(n, C_4^+) <= 15(n-2)/7, n >= 4";
    C5PlusUpper => "c5-plus-upper", "ex(n, C_5^+) <= (12n-33)/5, n >= 11";
    C6PlusUpper => "c6-plus-upper", "ex(n, C_6^+) <= (5n-14)/2, n >= 18";
    CkPlusSmall => "ck-plus-small", "ex(n, C_k^+) = 3n-6 for k >= 11, k+1 <= n <= k-5+floor((k-1)/2)";
    CkPlusGluedLower => "ck-plus-glued-lower", "ex(n, C_k^+) >= the ck-glued-lower expression";
    Theta4PlusUpper => "theta4-plus-upper", "ex(n, Theta_4^+) <= 12(n-2)/5, n >= 5";
    Theta5PlusUpper => "theta5-plus-upper", "ex(n, Theta_5^+) <= 5(n-2)/2, n >= 6";
    Theta6PlusUpper => "theta6-plus-upper", "ex(n, Theta_6^+) <= (18n-48)/7, n >= 14";
    ThetaKPlusSmall => "theta-k-plus-small", "ex(n, Theta_k^+) = 3n-6 for k >= 11, k+1 <= n <= k-5+floor((k-1)/2)";
    ThetaKPlusGluedLower => "theta-k-plus-glued-lower", "ex(n, Theta_k^+) >= the ck-glued-lower expression";
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Formula plus raw parameters. Derived quantities (`t`, `r`, `epsilon`) are
/// always recomputed from `n` and `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundQuery {
    pub id: FormulaId,
    pub n: Option<i64>,
    pub k: Option<i64>,
    /// Even progression index for `ck-progression-lower`.
    pub ell: Option<i64>,
    /// Constant `D` for `ck-power-conjecture`.
    pub d: Option<f64>,
}

impl BoundQuery {
    pub fn new(id: FormulaId) -> Self {
        BoundQuery { id, n: None, k: None, ell: None, d: None }
    }

    pub fn n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn ell(mut self, ell: i64) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn d(mut self, d: f64) -> Self {
        self.d = Some(d);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum BoundValue {
    Exact(Rational),
    /// Floating-point value of an irrational expression; display only.
    Approximate(f64),
}

impl BoundValue {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            BoundValue::Exact(r) => Some(r),
            BoundValue::Approximate(_) => None,
        }
    }
}

/// `k - 6 + floor((k-1)/2)`, the block modulus of the glued construction.
pub fn glued_modulus(k: i64) -> i64 {
    k - 6 + (k - 1) / 2
}

/// Largest order with a `C_k`-free triangulation: `k - 5 + floor((k-1)/2)`.
pub fn triangulation_limit(k: i64) -> i64 {
    k - 5 + (k - 1) / 2
}

/// `(t, r)` with `t * M + r = n - 4`, `0 <= r < M`.
pub fn glued_blocks(k: i64, n: i64) -> (i64, i64) {
    let m = glued_modulus(k);
    ((n - 4).div_euclid(m), (n - 4).rem_euclid(m))
}

/// Order of the progression for even `ell`.
pub fn progression_order(k: i64, ell: i64) -> i64 {
    ((k - 1) * (5 * ell - 2) / 2 + 2) * (3 * (k - 1) / 2 - 5) - (5 * ell - 4)
}

fn need(id: FormulaId, v: Option<i64>, param: &'static str) -> Result<i64, BoundError> {
    v.ok_or(BoundError::MissingParameter { id, param })
}

fn check(id: FormulaId, ok: bool, reason: impl FnOnce() -> String) -> Result<(), BoundError> {
    if ok {
        Ok(())
    } else {
        Err(BoundError::OutOfRange { id, reason: reason() })
    }
}

fn n_at_least(id: FormulaId, n: i64, min: i64) -> Result<(), BoundError> {
    check(id, n >= min, || format!("n must be at least {min}, got {n}"))
}

fn glued_range(id: FormulaId, k: i64, n: i64) -> Result<(), BoundError> {
    check(id, k >= 11, || format!("k must be at least 11, got {k}"))?;
    let min = k - 4 + (k - 1) / 2;
    n_at_least(id, n, min)
}

fn small_range(id: FormulaId, k: i64, n: i64, min_n: i64) -> Result<(), BoundError> {
    check(id, k >= 11, || format!("k must be at least 11, got {k}"))?;
    let max = triangulation_limit(k);
    check(id, (min_n..=max).contains(&n), || format!("need {min_n} <= n <= {max}, got {n}"))
}

fn glued_lower_value(k: i64, n: i64) -> Rational {
    let m = glued_modulus(k);
    let (_, r) = glued_blocks(k, n);
    let slope = Rational::from(3) - (Rational::from(3) - frac(2, k - 1)) / m;
    let constant = (Rational::from(12 + 3 * r) - frac(8 + 2 * r, k - 1)) / m;
    slope * n + constant + frac(4, k - 1) - (r + 10).min(11)
}

fn glued_exact_value(k: i64, n: i64) -> Rational {
    let (t, r) = glued_blocks(k, n);
    Rational::from(3 * n - 3 * t + 2 * ((t + 1) / (k - 1)) - (r + 8).min(9))
}

fn conjecture_value(k: i64, n: i64) -> Rational {
    (Rational::from(3) - frac(3, k)) * n - 6 - frac(6, k)
}

pub fn eval_bound(q: &BoundQuery) -> Result<BoundValue, BoundError> {
    use FormulaId::*;
    let id = q.id;
    let n = need(id, q.n, "n");
    let k = || need(id, q.k, "k");
    let exact = |r: Rational| Ok(BoundValue::Exact(r));
    match id {
        C3Exact => {
            let n = n?;
            n_at_least(id, n, 3)?;
            exact(Rational::from(2 * n - 4))
        }
        C4Upper | C4PlusUpper => {
            let n = n?;
            n_at_least(id, n, 4)?;
            exact(frac(15 * (n - 2), 7))
        }
        C5Upper | C5PlusUpper => {
            let n = n?;
            n_at_least(id, n, 11)?;
            exact(frac(12 * n - 33, 5))
        }
        Theta4Upper | Theta4PlusUpper => {
            let n = n?;
            n_at_least(id, n, if id == Theta4Upper { 4 } else { 5 })?;
            exact(frac(12 * (n - 2), 5))
        }
        Theta5Upper | Theta5PlusUpper => {
            let n = n?;
            n_at_least(id, n, if id == Theta5Upper { 5 } else { 6 })?;
            exact(frac(5 * (n - 2), 2))
        }
        Theta6Upper => {
            let n = n?;
            n_at_least(id, n, 6)?;
            exact(frac(18 * (n - 2), 7))
        }
        C6Upper | C6PlusUpper => {
            let n = n?;
            n_at_least(id, n, 18)?;
            exact(frac(5 * n - 14, 2))
        }
        Theta6SharpUpper | Theta6PlusUpper => {
            let n = n?;
            n_at_least(id, n, 14)?;
            exact(frac(18 * n - 48, 7))
        }
        CkConjecture => {
            let (k, n) = (k()?, n?);
            check(id, k >= 7, || format!("k must be at least 7, got {k}"))?;
            n_at_least(id, n, 1)?;
            exact(conjecture_value(k, n))
        }
        CkProgressionLower => {
            let k = k()?;
            let ell = need(id, q.ell, "ell")?;
            check(id, k >= 11, || format!("k must be at least 11, got {k}"))?;
            check(id, ell >= 2 && ell % 2 == 0, || format!("ell must be a positive even integer, got {ell}"))?;
            let order = progression_order(k, ell);
            if let Some(n) = q.n {
                check(id, n == order, || format!("n must equal {order} for k={k}, ell={ell}, got {n}"))?;
            }
            let eps = k % 2;
            let m = glued_modulus(k);
            let dd = Rational::from(m) * frac(k - 1, k - 3) - frac(2, k - 3);
            let tail = (Rational::from(12) - frac(42 - 6 * eps, k - 3)) / dd.clone();
            exact((Rational::from(3) - Rational::from(3) / dd) * order - 6 - tail)
        }
        CkPowerConjecture => {
            let (k, n) = (k()?, n?);
            let d = q.d.ok_or(BoundError::MissingParameter { id, param: "d" })?;
            check(id, k >= 3 && d > 0.0, || format!("need k >= 3 and D > 0, got k={k}, D={d}"))?;
            let kf = k as f64;
            Ok(BoundValue::Approximate((3.0 - 3.0 / (d * kf.powf(3f64.log2()))) * n as f64))
        }
        CkSmall => {
            let (k, n) = (k()?, n?);
            small_range(id, k, n, k)?;
            exact(Rational::from(3 * n - 6))
        }
        CkPlusSmall | ThetaKPlusSmall => {
            let (k, n) = (k()?, n?);
            small_range(id, k, n, k + 1)?;
            exact(Rational::from(3 * n - 6))
        }
        CkGluedLower | CkPlusGluedLower | ThetaKPlusGluedLower => {
            let (k, n) = (k()?, n?);
            glued_range(id, k, n)?;
            exact(glued_lower_value(k, n))
        }
        CkGluedExact => {
            let (k, n) = (k()?, n?);
            glued_range(id, k, n)?;
            exact(glued_exact_value(k, n))
        }
        TwoCkLower => {
            let (k, n) = (k()?, n?);
            check(id, k >= 4 && n >= 2 * k, || format!("need n >= 2k >= 8, got k={k}, n={n}"))?;
            let r = (n - 3).rem_euclid(k - 2);
            exact(
                (Rational::from(3) - frac(1, k - 2)) * n + frac(3 + r, k - 2) - 5 + (1 - r).max(0),
            )
        }
    }
}

/// [`eval_bound`] restricted to exact formulas.
pub fn eval_exact(q: &BoundQuery) -> Result<Rational, BoundError> {
    match eval_bound(q)? {
        BoundValue::Exact(r) => Ok(r),
        BoundValue::Approximate(_) => Err(BoundError::NotExact(q.id)),
    }
}

/// `5 M (k-1) / 2`: order from which the glued construction is known to beat
/// the conjecture.
pub fn conjecture_threshold(k: i64) -> Rational {
    frac(5 * glued_modulus(k) * (k - 1), 2)
}

/// Smallest integer order at or above [`conjecture_threshold`].
pub fn threshold_order(k: i64) -> i64 {
    let t = conjecture_threshold(k).ceil();
    i64::try_from(t).expect("threshold fits in i64")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureComparison {
    pub k: i64,
    pub n: i64,
    pub construction_edges: Rational,
    pub conjecture: Rational,
    pub margin: Rational,
    pub beats: bool,
    pub threshold: Rational,
    pub clears_threshold: bool,
    pub at_threshold: bool,
}

/// Compares the glued construction's exact edge count with the conjectured
/// upper bound at `(k, n)`.
pub fn beats_conjecture(k: i64, n: i64) -> Result<ConjectureComparison, BoundError> {
    let id = FormulaId::CkGluedExact;
    check(id, k >= 13, || format!("comparison needs k >= 13, got {k}"))?;
    let construction_edges = eval_exact(&BoundQuery::new(id).k(k).n(n))?;
    let conjecture = eval_exact(&BoundQuery::new(FormulaId::CkConjecture).k(k).n(n))?;
    let margin = &construction_edges - &conjecture;
    let threshold = conjecture_threshold(k);
    Ok(ConjectureComparison {
        k,
        n,
        beats: margin.is_positive(),
        clears_threshold: threshold <= n,
        at_threshold: n == threshold_order(k),
        construction_edges,
        conjecture,
        margin,
        threshold,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// A `C_k`-free triangulation exists: `ex = 3n - 6`.
    Triangulation,
    /// Only the glued lower bound applies.
    Formula,
}

pub fn small_n_regime(k: i64, n: i64) -> Result<Regime, BoundError> {
    let id = FormulaId::CkSmall;
    check(id, k >= 11, || format!("k must be at least 11, got {k}"))?;
    check(id, n >= k, || format!("n must be at least k, got {n}"))?;
    Ok(if n <= triangulation_limit(k) { Regime::Triangulation } else { Regime::Formula })
}
