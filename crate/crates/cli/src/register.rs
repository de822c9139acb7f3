//! Turns gate specs plus `--d`/`--n` into realized permutations.

use qgf_core::{GateId, GeneratorSet, Permutation, QuditSystem};

use crate::args::Global;
use crate::error::CliError;

pub fn require_d(global: &Global) -> Result<usize, CliError> {
    global
        .d
        .ok_or_else(|| CliError::Usage("--d is required for this command".into()))
}

/// Register width a gate needs when `--n` is absent.
pub fn natural_width(gate: &GateId, d: usize) -> Option<usize> {
    match gate {
        GateId::CyclicShift => Some(d),
        GateId::Embedded { positions, .. } => positions.iter().max().map(|&p| (p + 1).max(2)),
        GateId::Identity => None,
        GateId::Cnot1 | GateId::Cnot2 | GateId::Swap => Some(2),
    }
}

pub fn width<'a>(global: &Global, d: usize, gates: impl IntoIterator<Item = &'a GateId>) -> usize {
    global.n.unwrap_or_else(|| {
        gates
            .into_iter()
            .filter_map(|g| natural_width(g, d))
            .max()
            .unwrap_or(2)
    })
}

pub fn system(global: &Global, d: usize, n: usize) -> Result<QuditSystem, CliError> {
    Ok(QuditSystem::with_ceiling(d, n, global.point_ceiling)?)
}

/// Generators are named by their canonical spec string.
pub fn generator_set(system: &QuditSystem, gates: &[GateId]) -> Result<GeneratorSet, CliError> {
    let realized = gates
        .iter()
        .map(|g| Ok((g.to_string(), g.realize(system)?)))
        .collect::<Result<Vec<(String, Permutation)>, CliError>>()?;
    Ok(GeneratorSet::new(realized)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        let embed = GateId::Embedded {
            inner: Box::new(GateId::Cnot1),
            positions: vec![0, 3],
        };
        assert_eq!(natural_width(&GateId::CyclicShift, 5), Some(5));
        assert_eq!(natural_width(&embed, 3), Some(4));
        assert_eq!(natural_width(&GateId::Identity, 3), None);
        assert_eq!(natural_width(&GateId::Swap, 7), Some(2));
    }
}
