//! Text forms for permutations: disjoint-cycle notation and two-line notation.
//!
//! Points are 0-based. Cycle notation omits fixed points and writes the
//! identity as `()`, e.g. `(1 3)(2 6)(5 7)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotationError {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears in more than one place")]
    RepeatedPoint(usize),
    #[error("two-line notation needs exactly two non-empty lines")]
    LineCount,
    #[error("rows have different lengths ({top} vs {bottom})")]
    RowLengthMismatch { top: usize, bottom: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let data = self.cycle_decomposition();
        let mut wrote = false;
        for cycle in data.cycles.iter().filter(|c| c.len() > 1) {
            f.write_char('(')?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_char(' ')?;
                }
                write!(f, "{p}")?;
            }
            f.write_char(')')?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Parses disjoint-cycle notation over `degree` points. Points may be
/// separated by spaces or commas; unlisted points are fixed.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, NotationError> {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut chars = text.chars().peekable();
    let mut current: Option<Vec<usize>> = None;
    let close = |cycle: Vec<usize>, images: &mut Vec<usize>| {
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()];
        }
    };
    while let Some(&c) = chars.peek() {
        match c {
            '(' => {
                if current.is_some() {
                    return Err(NotationError::Unbalanced);
                }
                current = Some(Vec::new());
                chars.next();
            }
            ')' => {
                let cycle = current.take().ok_or(NotationError::Unbalanced)?;
                close(cycle, &mut images);
                chars.next();
            }
            c if c.is_whitespace() || c == ',' => {
                chars.next();
            }
            c if c.is_ascii_digit() => {
                let cycle = current.as_mut().ok_or(NotationError::UnexpectedChar(c))?;
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                let point: usize = digits
                    .parse()
                    .map_err(|_| NotationError::BadNumber(digits.clone()))?;
                if point >= degree {
                    return Err(NotationError::PointOutOfRange { point, degree });
                }
                if core::mem::replace(&mut used[point], true) {
                    return Err(NotationError::RepeatedPoint(point));
                }
                cycle.push(point);
            }
            other => return Err(NotationError::UnexpectedChar(other)),
        }
    }
    if current.is_some() {
        return Err(NotationError::Unbalanced);
    }
    Ok(Permutation::from_images(images)?)
}

/// Parses two-line notation: the first line lists points, the second their
/// images in the same column order.
///
/// ```text
/// 0 1 2 3 4 5 6 7 8
/// 0 1 2 4 5 3 8 6 7
/// ```
pub fn parse_two_line(text: &str) -> Result<Permutation, NotationError> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    let [top, bottom] = lines.as_slice() else {
        return Err(NotationError::LineCount);
    };
    let top = parse_row(top)?;
    let bottom = parse_row(bottom)?;
    if top.len() != bottom.len() {
        return Err(NotationError::RowLengthMismatch {
            top: top.len(),
            bottom: bottom.len(),
        });
    }
    let degree = top.len();
    let mut images = vec![usize::MAX; degree];
    for (&p, &image) in top.iter().zip(&bottom) {
        if p >= degree {
            return Err(NotationError::PointOutOfRange { point: p, degree });
        }
        if images[p] != usize::MAX {
            return Err(NotationError::RepeatedPoint(p));
        }
        images[p] = image;
    }
    Ok(Permutation::from_images(images)?)
}

fn parse_row(line: &str) -> Result<Vec<usize>, NotationError> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| NotationError::BadNumber(t.into())))
        .collect()
}
