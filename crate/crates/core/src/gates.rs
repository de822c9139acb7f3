//! Qudit gates as permutations of computational basis states.
//!
//! A register of `n` subsystems of dimension `d` has `d^n` basis states,
//! indexed in mixed radix with the leftmost subsystem most significant: for
//! two qutrits, `|m>|n>` is point `3m + n`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::{PermError, Permutation};

/// Default upper bound on `d^n`.
pub const DEFAULT_POINT_CEILING: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GateError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("a register needs at least one subsystem")]
    NoSubsystems,
    #[error("{d}^{n} points exceeds the point ceiling of {ceiling}")]
    TooManyPoints { d: usize, n: usize, ceiling: usize },
    #[error("expected {expected} digits, got {got}")]
    DigitCount { expected: usize, got: usize },
    #[error("digit {digit} at position {position} is not below {d}")]
    DigitOutOfRange {
        position: usize,
        digit: usize,
        d: usize,
    },
    #[error("point {point} is outside the register of {count} points")]
    IndexOutOfRange { point: usize, count: usize },
    #[error("gate acts on {gate_degree} points but {positions} positions of dimension {d} span {expected}")]
    EmbedDegree {
        gate_degree: usize,
        positions: usize,
        d: usize,
        expected: usize,
    },
    #[error("subsystem position {position} is outside 0..{n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("subsystem position {0} is listed twice")]
    DuplicatePosition(usize),
    #[error("{gate} acts on two subsystems; the register has {n}")]
    NeedsTwoSubsystems { gate: &'static str, n: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// `n` subsystems of dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuditSystem {
    d: usize,
    n: usize,
    point_count: usize,
}

impl QuditSystem {
    pub fn new(d: usize, n: usize) -> Result<QuditSystem, GateError> {
        QuditSystem::with_ceiling(d, n, DEFAULT_POINT_CEILING)
    }

    pub fn with_ceiling(d: usize, n: usize, ceiling: usize) -> Result<QuditSystem, GateError> {
        if d < 2 {
            return Err(GateError::DimensionTooSmall(d));
        }
        if n == 0 {
            return Err(GateError::NoSubsystems);
        }
        let too_many = GateError::TooManyPoints { d, n, ceiling };
        let point_count = u32::try_from(n)
            .ok()
            .and_then(|e| d.checked_pow(e))
            .filter(|&c| c <= ceiling && c <= u32::MAX as usize)
            .ok_or(too_many)?;
        Ok(QuditSystem { d, n, point_count })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn subsystems(&self) -> usize {
        self.n
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn encode(&self, digits: &[usize]) -> Result<usize, GateError> {
        if digits.len() != self.n {
            return Err(GateError::DigitCount {
                expected: self.n,
                got: digits.len(),
            });
        }
        let mut index = 0;
        for (position, &digit) in digits.iter().enumerate() {
            if digit >= self.d {
                return Err(GateError::DigitOutOfRange {
                    position,
                    digit,
                    d: self.d,
                });
            }
            index = index * self.d + digit;
        }
        Ok(index)
    }

    pub fn decode(&self, index: usize) -> Result<Vec<usize>, GateError> {
        if index >= self.point_count {
            return Err(GateError::IndexOutOfRange {
                point: index,
                count: self.point_count,
            });
        }
        let mut digits = vec![0; self.n];
        self.decode_into(index, &mut digits);
        Ok(digits)
    }

    fn decode_into(&self, mut index: usize, digits: &mut [usize]) {
        for slot in digits.iter_mut().rev() {
            *slot = index % self.d;
            index /= self.d;
        }
    }

    fn gate_from_digits(
        &self,
        mut map: impl FnMut(&[usize], &mut [usize]),
    ) -> Result<Permutation, GateError> {
        let mut input = vec![0; self.n];
        let mut output = vec![0; self.n];
        let images = (0..self.point_count).map(|i| {
            self.decode_into(i, &mut input);
            map(&input, &mut output);
            output.iter().fold(0, |acc, &x| acc * self.d + x)
        });
        Ok(Permutation::from_images(images.collect())?)
    }
}

fn pair(d: usize) -> Result<QuditSystem, GateError> {
    QuditSystem::new(d, 2)
}

/// `|m>|n> -> |m>|n + m mod d>`: the first subsystem controls.
pub fn cnot1(d: usize) -> Result<Permutation, GateError> {
    pair(d)?.gate_from_digits(|x, y| {
        y[0] = x[0];
        y[1] = (x[1] + x[0]) % d;
    })
}

/// `|m>|n> -> |m + n mod d>|n>`: the second subsystem controls.
pub fn cnot2(d: usize) -> Result<Permutation, GateError> {
    pair(d)?.gate_from_digits(|x, y| {
        y[0] = (x[0] + x[1]) % d;
        y[1] = x[1];
    })
}

/// `|m>|n> -> |n>|m>`.
pub fn swap_perm(d: usize) -> Result<Permutation, GateError> {
    pair(d)?.gate_from_digits(|x, y| {
        y[0] = x[1];
        y[1] = x[0];
    })
}

/// Rotates subsystem contents one place: `(x_0, .., x_{n-1}) -> (x_{n-1}, x_0, .., x_{n-2})`.
pub fn cyclic_shift(system: &QuditSystem) -> Permutation {
    let d = system.d;
    let top = system.point_count / d;
    // dropping the last digit and prepending it as the most significant one
    let images = (0..system.point_count as u32)
        .map(|i| {
            let i = i as usize;
            ((i % d) * top + i / d) as u32
        })
        .collect();
    Permutation::from_raw(images)
}

/// Applies `gate` to the digits at `positions` (the gate's most significant
/// digit goes to `positions[0]`) and leaves every other subsystem alone.
pub fn embed(
    system: &QuditSystem,
    gate: &Permutation,
    positions: &[usize],
) -> Result<Permutation, GateError> {
    let d = system.d;
    let k = positions.len();
    let expected = u32::try_from(k).ok().and_then(|e| d.checked_pow(e));
    if expected != Some(gate.degree()) {
        return Err(GateError::EmbedDegree {
            gate_degree: gate.degree(),
            positions: k,
            d,
            expected: expected.unwrap_or(usize::MAX),
        });
    }
    let mut used = vec![false; system.n];
    for &position in positions {
        if position >= system.n {
            return Err(GateError::PositionOutOfRange {
                position,
                n: system.n,
            });
        }
        if core::mem::replace(&mut used[position], true) {
            return Err(GateError::DuplicatePosition(position));
        }
    }
    system.gate_from_digits(|x, y| {
        y.copy_from_slice(x);
        let inner = positions.iter().fold(0, |acc, &p| acc * d + x[p]);
        let mut out = gate.apply(inner);
        for &p in positions.iter().rev() {
            y[p] = out % d;
            out /= d;
        }
    })
}

/// Names a gate independently of the register it is realized on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GateId {
    Identity,
    Cnot1,
    Cnot2,
    Swap,
    CyclicShift,
    Embedded {
        inner: Box<GateId>,
        positions: Vec<usize>,
    },
}

impl GateId {
    /// Number of subsystems the gate itself touches, or `None` when it adapts
    /// to the register width.
    pub fn arity(&self) -> Option<usize> {
        match self {
            GateId::Identity | GateId::CyclicShift => None,
            GateId::Cnot1 | GateId::Cnot2 | GateId::Swap => Some(2),
            GateId::Embedded { positions, .. } => Some(positions.len()),
        }
    }

    /// Builds the permutation of this gate on `system`.
    ///
    /// Two-subsystem gates on a wider register act on subsystems 0 and 1.
    /// Embedded gates realize their inner gate on `positions.len()` subsystems.
    pub fn realize(&self, system: &QuditSystem) -> Result<Permutation, GateError> {
        let d = system.d;
        let n = system.n;
        let two = |gate: &'static str, build: fn(usize) -> Result<Permutation, GateError>| match n {
            2 => build(d),
            n if n > 2 => embed(system, &build(d)?, &[0, 1]),
            n => Err(GateError::NeedsTwoSubsystems { gate, n }),
        };
        match self {
            GateId::Identity => Ok(Permutation::identity(system.point_count)?),
            GateId::Cnot1 => two("cnot1", cnot1),
            GateId::Cnot2 => two("cnot2", cnot2),
            GateId::Swap => two("swap", swap_perm),
            GateId::CyclicShift => Ok(cyclic_shift(system)),
            GateId::Embedded { inner, positions } => {
                let sub = QuditSystem::new(d, positions.len().max(1))?;
                let gate = inner.realize(&sub)?;
                embed(system, &gate, positions)
            }
        }
    }
}

impl fmt::Display for GateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateId::Identity => f.write_str("identity"),
            GateId::Cnot1 => f.write_str("cnot1"),
            GateId::Cnot2 => f.write_str("cnot2"),
            GateId::Swap => f.write_str("swap"),
            GateId::CyclicShift => f.write_str("shift"),
            GateId::Embedded { inner, positions } => {
                write!(f, "embed({inner};positions=")?;
                for (k, p) in positions.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GateSpecError {
    #[error("unknown gate {0:?}")]
    UnknownGate(String),
    #[error("malformed gate spec {0:?}")]
    Malformed(String),
    #[error("bad subsystem position {0:?}")]
    BadPosition(String),
}

/// Parses `identity`, `cnot1`, `cnot2`, `swap`, `shift` and
/// `embed(<spec>;positions=<p>,<p>,..)`, ignoring surrounding whitespace.
impl FromStr for GateId {
    type Err = GateSpecError;

    fn from_str(text: &str) -> Result<GateId, GateSpecError> {
        let text = text.trim();
        match text {
            "identity" => return Ok(GateId::Identity),
            "cnot1" => return Ok(GateId::Cnot1),
            "cnot2" => return Ok(GateId::Cnot2),
            "swap" => return Ok(GateId::Swap),
            "shift" => return Ok(GateId::CyclicShift),
            _ => {}
        }
        let Some(body) = text.strip_prefix("embed(") else {
            return Err(GateSpecError::UnknownGate(text.into()));
        };
        let malformed = || GateSpecError::Malformed(text.into());
        let body = body.strip_suffix(')').ok_or_else(malformed)?;
        // the inner spec may itself be an embed, so split at the last ';'
        let (inner, positions) = body.rsplit_once(';').ok_or_else(malformed)?;
        let positions = positions
            .trim()
            .strip_prefix("positions")
            .map(str::trim_start)
            .and_then(|p| p.strip_prefix('='))
            .ok_or_else(malformed)?;
        let positions = positions
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| GateSpecError::BadPosition(p.trim().into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GateId::Embedded {
            inner: Box::new(inner.parse()?),
            positions,
        })
    }
}
