//! Tower-shaped lower bounds: the base three-colour bound and its iteration
//! through the Erdős–Hajnal stepping-up lemma.
//!
//! Values are kept symbolic as `2^2^...^base` with an explicit height and
//! only evaluated when the result fits a decimal digit budget.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::probsearch::MAX_C;

/// Default cap on the number of decimal digits [`TowerExpr::evaluate`] may produce.
pub const DEFAULT_DIGIT_BUDGET: u64 = 1_000_000;

/// Digits shown after a rendered statement; longer values stay symbolic.
const SHOWN_DIGITS: u64 = 100;

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// The innermost level of a tower.
#[derive(Debug, Clone, PartialEq)]
pub enum TowerBase {
    Int(BigUint),
    /// `base^exponent` with a real exponent.
    Power {
        base: u64,
        exponent: f64,
    },
}

impl TowerBase {
    fn approx(&self) -> f64 {
        match self {
            TowerBase::Int(v) => v.to_f64().unwrap_or(f64::INFINITY),
            TowerBase::Power { base, exponent } => (*base as f64).powf(*exponent),
        }
    }
}

/// `2^(2^(...(base)))` with `height` applications of `x -> 2^x`.
#[derive(Debug, Clone, PartialEq)]
pub struct TowerExpr {
    pub base: TowerBase,
    pub height: u32,
}

impl TowerExpr {
    pub fn int(v: impl Into<BigUint>) -> Self {
        TowerExpr {
            base: TowerBase::Int(v.into()),
            height: 0,
        }
    }

    pub fn power(base: u64, exponent: f64) -> Self {
        TowerExpr {
            base: TowerBase::Power { base, exponent },
            height: 0,
        }
    }

    /// `2^self`.
    pub fn exp2(&self) -> Self {
        TowerExpr {
            base: self.base.clone(),
            height: self.height + 1,
        }
    }

    /// Exact value if the base is an integer and the result has at most
    /// `digit_budget` decimal digits.
    pub fn evaluate(&self, digit_budget: u64) -> Option<BigUint> {
        let TowerBase::Int(v) = &self.base else {
            return None;
        };
        let max_exponent = (digit_budget as f64 / LOG10_2) as u64;
        let mut x = v.clone();
        for _ in 0..self.height {
            let e = x.to_u64().filter(|&e| e < max_exponent)?;
            x = BigUint::one() << e;
        }
        (x.to_string().len() as u64 <= digit_budget).then_some(x)
    }

    /// Floating-point value, when finite.
    pub fn approx(&self) -> Option<f64> {
        let mut x = self.base.approx();
        for _ in 0..self.height {
            x = x.exp2();
        }
        x.is_finite().then_some(x)
    }
}

impl fmt::Display for TowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.height {
            f.write_str("2^")?;
        }
        match &self.base {
            TowerBase::Int(v) => write!(f, "{v}"),
            TowerBase::Power { base, exponent } if self.height == 0 => {
                write!(f, "{base}^{exponent}")
            }
            TowerBase::Power { base, exponent } => write!(f, "({base}^{exponent})"),
        }
    }
}

/// Splits on `^` outside parentheses.
fn top_level_tokens(s: &str) -> Option<Vec<&str>> {
    let mut tokens = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            '^' if depth == 0 => {
                tokens.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    (depth == 0).then(|| {
        tokens.push(&s[start..]);
        tokens
    })
}

fn parse_power(s: &str) -> Option<TowerBase> {
    let (b, e) = s.split_once('^')?;
    let exponent: f64 = e.parse().ok()?;
    Some(TowerBase::Power {
        base: b.parse().ok()?,
        exponent: exponent.is_finite().then_some(exponent)?,
    })
}

impl FromStr for TowerExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::DomainError(format!("not a tower expression: {s:?}"));
        let s = s.trim();
        let tokens = top_level_tokens(s).ok_or_else(bad)?;
        let (last, prefix) = tokens.split_last().ok_or_else(bad)?;
        if let Ok(v) = last.parse::<BigUint>() {
            if prefix.iter().all(|t| *t == "2") {
                return Ok(TowerExpr {
                    base: TowerBase::Int(v),
                    height: prefix.len() as u32,
                });
            }
        }
        if let Some(inner) = last.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            if prefix.iter().all(|t| *t == "2") && !prefix.is_empty() {
                return Ok(TowerExpr {
                    base: parse_power(inner).ok_or_else(bad)?,
                    height: prefix.len() as u32,
                });
            }
        }
        if prefix.len() == 1 {
            return Ok(TowerExpr {
                base: parse_power(s).ok_or_else(bad)?,
                height: 0,
            });
        }
        Err(bad())
    }
}

/// `r_k(s, ..., s) >= bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct RamseyStatement {
    pub uniformity: u32,
    /// Number of colours when written out (`r_3(5,5,5)`); `None` renders the
    /// single-argument shorthand `r_4(7)`.
    pub colors: Option<u8>,
    pub clique_size: u64,
    pub bound: TowerExpr,
}

impl RamseyStatement {
    /// The statement without its numeric value.
    pub fn render(&self) -> String {
        let args = match self.colors {
            Some(c) => vec![self.clique_size.to_string(); c as usize].join(","),
            None => self.clique_size.to_string(),
        };
        format!("r_{}({}) >= {}", self.uniformity, args, self.bound)
    }
}

impl fmt::Display for RamseyStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())?;
        if self.bound.height == 0 {
            return Ok(());
        }
        if let Some(v) = self.bound.evaluate(SHOWN_DIGITS) {
            write!(f, " = {v}")?;
        } else if let (TowerBase::Power { .. }, Some(x)) = (&self.bound.base, self.bound.approx()) {
            if x < 1e15 {
                write!(f, " ~ {x:.6}")?;
            }
        }
        Ok(())
    }
}

fn step(stmt: &RamseyStatement) -> Result<RamseyStatement> {
    let k = stmt.uniformity;
    if k < 3 {
        return Err(Error::BadUniformity(k));
    }
    let clique_size = (2 * stmt.clique_size + k as u64)
        .checked_sub(4)
        .filter(|&s| s > k as u64)
        .ok_or_else(|| {
            Error::DomainError(format!(
                "clique size {} too small to step up",
                stmt.clique_size
            ))
        })?;
    Ok(RamseyStatement {
        uniformity: k + 1,
        colors: stmt.colors,
        clique_size,
        bound: stmt.bound.exp2(),
    })
}

/// From `r_k(l) >= n` to `r_{k+1}(2l + k - 4) >= 2^n`.
pub fn step_up(k: u32, l: u64, n: TowerExpr) -> Result<RamseyStatement> {
    step(&RamseyStatement {
        uniformity: k,
        colors: None,
        clique_size: l,
        bound: n,
    })
}

/// `r_3(l,l,l) >= 2^(l^(c log2 log2 l))`.
pub fn base_bound(l: u64, c: f64) -> Result<RamseyStatement> {
    if l < 5 {
        return Err(Error::DomainError(format!("l = {l} is below 5")));
    }
    if !(c > 0.0 && c <= MAX_C) {
        return Err(Error::DomainError(format!("c = {c} is outside (0, 1/80]")));
    }
    let exponent = c * (l as f64).log2().log2();
    Ok(RamseyStatement {
        uniformity: 3,
        colors: Some(3),
        clique_size: l,
        bound: TowerExpr::power(l, exponent).exp2(),
    })
}

/// The three-colour bound stepped up to uniformity `k`: a tower with `k - 2`
/// twos over `l^(c log2 log2 l)`.
pub fn tower_bound(k: u32, l: u64, c: f64) -> Result<RamseyStatement> {
    if k < 3 {
        return Err(Error::BadUniformity(k));
    }
    let mut stmt = base_bound(l, c)?;
    for _ in 3..k {
        stmt = step(&stmt)?;
    }
    if stmt.bound.height != k - 2 || stmt.uniformity != k {
        return Err(Error::InconsistentTrace(format!(
            "uniformity {} with height {} after stepping to k = {k}",
            stmt.uniformity, stmt.bound.height
        )));
    }
    Ok(stmt)
}
