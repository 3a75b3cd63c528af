//! Linear complete residuated lattices on the unit interval and their
//! ε-approximations.
//!
//! Degrees are plain `f64`s in `[0, 1]`. [`Value`] is the checked form used at
//! API boundaries (parsed files, configuration); the arithmetic itself works on
//! raw floats and compares them exactly.
//!
//! The ε-approximated operations treat every degree at or below ε as ε:
//!
//! * `x ≤ε y` iff `x ≤ y` or `x ≤ ε`
//! * `x ⊗ε y` is `x ⊗ y` when that exceeds ε, otherwise ε
//! * `x →ε y` is `(x ∨ ε) → (y ∨ ε)`

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A degree of membership, guaranteed to lie in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Value(f64);

impl Value {
    pub const ZERO: Value = Value(0.0);
    pub const ONE: Value = Value(1.0);

    pub fn new(x: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&x) {
            Ok(Value(x))
        } else {
            Err(Error::ValueOutOfRange(x))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Value {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        Value::new(x)
    }
}

impl From<Value> for f64 {
    fn from(v: Value) -> f64 {
        v.0
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The residuated structure used to interpret an automaton.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Lattice {
    Product,
    /// Hamacher family; `lambda = 0` is the classical Hamacher product.
    Hamacher { lambda: f64 },
    Godel,
    Lukasiewicz,
    /// Nilpotent minimum.
    Nilpotent,
}

impl Default for Lattice {
    fn default() -> Self {
        Lattice::Product
    }
}

impl Lattice {
    pub const HAMACHER: Lattice = Lattice::Hamacher { lambda: 0.0 };

    pub fn hamacher(lambda: f64) -> Result<Self> {
        if lambda.is_finite() && lambda >= 0.0 {
            Ok(Lattice::Hamacher { lambda })
        } else {
            Err(Error::Config(format!("Hamacher lambda must be >= 0, got {lambda}")))
        }
    }

    /// Single-letter code: `P`, `H`, `G`, `L` or `N`.
    pub fn code(&self) -> char {
        match self {
            Lattice::Product => 'P',
            Lattice::Hamacher { .. } => 'H',
            Lattice::Godel => 'G',
            Lattice::Lukasiewicz => 'L',
            Lattice::Nilpotent => 'N',
        }
    }

    pub fn from_code(code: char) -> Option<Self> {
        match code.to_ascii_uppercase() {
            'P' => Some(Lattice::Product),
            'H' => Some(Lattice::HAMACHER),
            'G' => Some(Lattice::Godel),
            'L' => Some(Lattice::Lukasiewicz),
            'N' => Some(Lattice::Nilpotent),
            _ => None,
        }
    }

    /// Every structure, in the order `P, H, G, L, N`.
    pub fn all() -> [Lattice; 5] {
        [
            Lattice::Product,
            Lattice::HAMACHER,
            Lattice::Godel,
            Lattice::Lukasiewicz,
            Lattice::Nilpotent,
        ]
    }

    /// The multiplication `x ⊗ y`.
    pub fn tnorm(&self, x: f64, y: f64) -> f64 {
        match *self {
            Lattice::Product => x * y,
            Lattice::Hamacher { lambda } => {
                if lambda == 0.0 {
                    if x == 0.0 && y == 0.0 {
                        0.0
                    } else {
                        (x * y / (x + y - x * y)).min(x.min(y))
                    }
                } else {
                    let denom = lambda + (1.0 - lambda) * (x + y - x * y);
                    debug_assert!(denom > 0.0);
                    (x * y / denom).min(x.min(y))
                }
            }
            Lattice::Godel => x.min(y),
            Lattice::Lukasiewicz => (x.min(y) - (1.0 - x.max(y))).max(0.0),
            Lattice::Nilpotent => {
                if x + y > 1.0 {
                    x.min(y)
                } else {
                    0.0
                }
            }
        }
    }

    /// The residuum `x → y`, adjoint to [`Lattice::tnorm`].
    pub fn residuum(&self, x: f64, y: f64) -> f64 {
        if x <= y {
            return 1.0;
        }
        match *self {
            Lattice::Product => y / x,
            Lattice::Hamacher { lambda } => {
                if lambda == 0.0 {
                    x * y / (x - y + x * y)
                } else {
                    let denom = x - y * (1.0 - lambda) * (1.0 - x);
                    debug_assert!(denom > 0.0);
                    y * (lambda + (1.0 - lambda) * x) / denom
                }
            }
            Lattice::Godel => y,
            Lattice::Lukasiewicz => (1.0 - x + y).min(1.0),
            Lattice::Nilpotent => (1.0 - x).max(y),
        }
    }

    /// `x ⊗ε y`: the product when it exceeds ε, otherwise ε.
    #[inline]
    pub fn tnorm_eps(&self, x: f64, y: f64, eps: f64) -> f64 {
        truncate(self.tnorm(x, y), eps)
    }

    /// `x →ε y = (x ∨ ε) → (y ∨ ε)`.
    #[inline]
    pub fn residuum_eps(&self, x: f64, y: f64, eps: f64) -> f64 {
        self.residuum(x.max(eps), y.max(eps))
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lattice::Hamacher { lambda } if *lambda != 0.0 => write!(f, "H({lambda})"),
            other => write!(f, "{}", other.code()),
        }
    }
}

impl FromStr for Lattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Lattice::from_code(c)
                .ok_or_else(|| Error::Config(format!("unknown structure '{s}' (expected P, H, G, L or N)"))),
            _ => Err(Error::Config(format!("unknown structure '{s}' (expected P, H, G, L or N)"))),
        }
    }
}

/// `x ≤ε y`.
#[inline]
pub fn leq_eps(x: f64, y: f64, eps: f64) -> bool {
    x <= y || x <= eps
}

/// `x =ε y`: equal, or both at most ε.
#[inline]
pub fn eq_eps(x: f64, y: f64, eps: f64) -> bool {
    leq_eps(x, y, eps) && leq_eps(y, x, eps)
}

/// ε-truncation of a single degree.
#[inline]
pub fn truncate(x: f64, eps: f64) -> f64 {
    if x > eps {
        x
    } else {
        eps
    }
}

/// `⋀ε`: the infimum if it exceeds ε, otherwise ε. The empty meet is 1.
pub fn meet_eps<I: IntoIterator<Item = f64>>(values: I, eps: f64) -> f64 {
    truncate(values.into_iter().fold(1.0, f64::min), eps)
}

/// `⋁ε A = ⋁(A ∪ {ε})`.
pub fn join_eps<I: IntoIterator<Item = f64>>(values: I, eps: f64) -> f64 {
    values.into_iter().fold(eps, f64::max)
}
