//! Closed-form cycle statistics for the standard qudit gates and the parity
//! obstruction test.
//!
//! The closed forms for CNOT and the cyclic shift are derived for prime
//! dimensions only; for composite `d` callers get [`ParityError::Composite`]
//! from the closed-form entry points, and [`gate_stats`] falls back to direct
//! computation, labelling the result [`StatsSource::DirectComputation`].
//! The SWAP formula holds for every `d >= 2`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::gates::{GateError, GateId, QuditSystem};
use crate::generators::GeneratorSet;
use crate::perm::{PermError, Permutation, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParityError {
    #[error("no closed form for composite dimension {0}; compute the statistics directly")]
    Composite(usize),
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatsSource {
    ClosedForm,
    DirectComputation,
}

impl StatsSource {
    pub fn as_str(self) -> &'static str {
        match self {
            StatsSource::ClosedForm => "closed_form",
            StatsSource::DirectComputation => "direct",
        }
    }
}

/// Cycle statistics of one gate at one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateStats {
    pub d: usize,
    pub gate: GateId,
    pub fixed_points: BigUint,
    /// Cycle length to number of cycles, fixed points included as length 1.
    pub cycle_counts: BTreeMap<u64, BigUint>,
    pub transposition_count: BigUint,
    pub signature: Sign,
    pub source: StatsSource,
}

impl GateStats {
    pub fn direct(d: usize, gate: GateId, perm: &Permutation) -> GateStats {
        let data = perm.cycle_decomposition();
        let cycle_counts = data
            .length_counts()
            .into_iter()
            .map(|(len, count)| (len as u64, BigUint::from(count)))
            .collect();
        GateStats {
            d,
            gate,
            fixed_points: BigUint::from(data.fixed_points),
            cycle_counts,
            transposition_count: BigUint::from(data.transposition_count),
            signature: data.signature,
            source: StatsSource::DirectComputation,
        }
    }

    /// Total number of points, `sum(length * count)`.
    pub fn point_count(&self) -> BigUint {
        self.cycle_counts
            .iter()
            .map(|(&len, count)| count * BigUint::from(len))
            .sum()
    }

    /// Compares the numeric statistics, ignoring gate label and source.
    pub fn same_statistics(&self, other: &GateStats) -> bool {
        self.fixed_points == other.fixed_points
            && self.cycle_counts == other.cycle_counts
            && self.transposition_count == other.transposition_count
            && self.signature == other.signature
    }

    fn closed(
        d: usize,
        gate: GateId,
        cycles: impl IntoIterator<Item = (u64, BigUint)>,
        transposition_count: BigUint,
    ) -> GateStats {
        let cycle_counts: BTreeMap<u64, BigUint> =
            cycles.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let fixed_points = cycle_counts.get(&1).cloned().unwrap_or_default();
        let signature = Sign::from_parity(transposition_count.bit(0));
        GateStats {
            d,
            gate,
            fixed_points,
            cycle_counts,
            transposition_count,
            signature,
            source: StatsSource::ClosedForm,
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2usize;
    while k.saturating_mul(k) <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn require_prime(d: usize) -> Result<(), ParityError> {
    if d < 2 {
        return Err(ParityError::DimensionTooSmall(d));
    }
    if !is_prime(d) {
        return Err(ParityError::Composite(d));
    }
    Ok(())
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

/// CNOT on two qudits of prime dimension: `d` fixed points, `d - 1` cycles of
/// length `d`, `(d - 1)^2` transpositions. Holds for both control orders.
pub fn cnot_stats_closed_form(d: usize) -> Result<GateStats, ParityError> {
    require_prime(d)?;
    let transpositions = big(d - 1) * big(d - 1);
    Ok(GateStats::closed(
        d,
        GateId::Cnot1,
        [(1, big(d)), (d as u64, big(d - 1))],
        transpositions,
    ))
}

/// SWAP of two qudits: `d` fixed points and `d(d - 1)/2` transpositions, so
/// the signature is `-1` iff `d mod 4` is 2 or 3.
pub fn swap_stats_closed_form(d: usize) -> Result<GateStats, ParityError> {
    if d < 2 {
        return Err(ParityError::DimensionTooSmall(d));
    }
    let transpositions = big(d) * big(d - 1) / 2u32;
    Ok(GateStats::closed(
        d,
        GateId::Swap,
        [(1, big(d)), (2, transpositions.clone())],
        transpositions,
    ))
}

/// Signature of a two-qudit CNOT acting inside `d` subsystems, i.e. on
/// `d^d` points as `CNOT ⊗ I`: `(-1)^((d-1)^2 · d^(d-2))`.
pub fn embedded_cnot_signature(d: usize) -> Result<Sign, ParityError> {
    require_prime(d)?;
    // parity of a product is the AND of the parities
    let cnot_odd = (d - 1) % 2 == 1;
    let copies_odd = d % 2 == 1 || d == 2;
    Ok(Sign::from_parity(cnot_odd && copies_odd))
}

/// Cyclic shift over `d` subsystems of prime dimension `d`: `d` fixed points,
/// `(d^d - d)/d` cycles of length `d`, `(d^(d-1) - 1)(d - 1)` transpositions.
pub fn cyclic_shift_stats_closed_form(d: usize) -> Result<GateStats, ParityError> {
    require_prime(d)?;
    let exp = u32::try_from(d).expect("prime dimension fits u32");
    let cycles = (big(d).pow(exp) - big(d)) / big(d);
    let transpositions = (big(d).pow(exp - 1) - BigUint::one()) * big(d - 1);
    Ok(GateStats::closed(
        d,
        GateId::CyclicShift,
        [(1, big(d)), (d as u64, cycles)],
        transpositions,
    ))
}

/// Closed form when one is known for `gate` on `system`, otherwise the
/// statistics of the realized permutation.
pub fn gate_stats(gate: &GateId, system: &QuditSystem) -> Result<GateStats, ParityError> {
    if let Some(stats) = closed_form_for(gate, system.dimension(), system.subsystems()) {
        return Ok(stats);
    }
    let perm = gate.realize(system)?;
    Ok(GateStats::direct(system.dimension(), gate.clone(), &perm))
}

/// The closed-form statistics for `gate` on `n` subsystems of dimension `d`,
/// if the formulas cover it. Needs no register, so `d^n` may be huge.
pub fn closed_form_for(gate: &GateId, d: usize, n: usize) -> Option<GateStats> {
    let mut stats = match gate {
        GateId::Cnot1 | GateId::Cnot2 if n == 2 => cnot_stats_closed_form(d).ok()?,
        GateId::Swap if n == 2 => swap_stats_closed_form(d).ok()?,
        GateId::CyclicShift if n == d => cyclic_shift_stats_closed_form(d).ok()?,
        _ => return None,
    };
    stats.gate = gate.clone();
    Some(stats)
}

/// Outcome of the parity test. `obstructed` is sound: when set, the target
/// cannot be a product of the generators. A clear flag proves nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityVerdict {
    pub target_signature: Sign,
    pub generator_signatures: Vec<(String, Sign)>,
    pub obstructed: bool,
}

impl ParityVerdict {
    /// Recomputes the verdict from scratch and checks it agrees.
    pub fn recheck(&self, target: &Permutation, gens: &GeneratorSet) -> bool {
        parity_feasible(target, gens).is_ok_and(|v| v == *self)
    }
}

/// An odd target is out of reach of generators that are all even.
pub fn parity_feasible(
    target: &Permutation,
    gens: &GeneratorSet,
) -> Result<ParityVerdict, ParityError> {
    if target.degree() != gens.degree() {
        return Err(PermError::DegreeMismatch {
            left: target.degree(),
            right: gens.degree(),
        }
        .into());
    }
    let target_signature = target.signature();
    let generator_signatures: Vec<(String, Sign)> = gens
        .iter()
        .map(|(name, p)| (String::from(name), p.signature()))
        .collect();
    let obstructed = target_signature == Sign::Minus
        && generator_signatures.iter().all(|(_, s)| *s == Sign::Plus);
    Ok(ParityVerdict {
        target_signature,
        generator_signatures,
        obstructed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{cnot1, cnot2, swap_perm};
    use alloc::vec;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn primality() {
        let primes: Vec<usize> = (0..40).filter(|&k| is_prime(k)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn cnot_closed_forms() {
        let s3 = cnot_stats_closed_form(3).unwrap();
        assert_eq!(s3.fixed_points, n(3));
        assert_eq!(s3.cycle_counts.get(&3), Some(&n(2)));
        assert_eq!(s3.transposition_count, n(4));
        assert_eq!(s3.signature, Sign::Plus);
        let s2 = cnot_stats_closed_form(2).unwrap();
        assert_eq!(s2.transposition_count, n(1));
        assert_eq!(s2.signature, Sign::Minus);
        let s5 = cnot_stats_closed_form(5).unwrap();
        assert_eq!(s5.transposition_count, n(16));
        assert_eq!(s5.signature, Sign::Plus);
        assert_eq!(cnot_stats_closed_form(4), Err(ParityError::Composite(4)));
        assert_eq!(
            cnot_stats_closed_form(1),
            Err(ParityError::DimensionTooSmall(1))
        );
    }

    #[test]
    fn swap_closed_forms() {
        assert_eq!(swap_stats_closed_form(3).unwrap().signature, Sign::Minus);
        assert_eq!(swap_stats_closed_form(4).unwrap().signature, Sign::Plus);
        let s2 = swap_stats_closed_form(2).unwrap();
        assert_eq!(s2.transposition_count, n(1));
        assert_eq!(s2.signature, Sign::Minus);
        assert_eq!(swap_stats_closed_form(6).unwrap().point_count(), n(36));
    }

    #[test]
    fn embedded_signatures() {
        assert_eq!(embedded_cnot_signature(2), Ok(Sign::Minus));
        assert_eq!(embedded_cnot_signature(3), Ok(Sign::Plus));
        assert_eq!(embedded_cnot_signature(5), Ok(Sign::Plus));
        assert_eq!(embedded_cnot_signature(9), Err(ParityError::Composite(9)));
    }

    #[test]
    fn shift_closed_forms() {
        let s3 = cyclic_shift_stats_closed_form(3).unwrap();
        assert_eq!(s3.fixed_points, n(3));
        assert_eq!(s3.cycle_counts.get(&3), Some(&n(8)));
        assert_eq!(s3.transposition_count, n(16));
        assert_eq!(s3.signature, Sign::Plus);
        let s2 = cyclic_shift_stats_closed_form(2).unwrap();
        assert_eq!(s2.fixed_points, n(2));
        assert_eq!(s2.cycle_counts.get(&2), Some(&n(1)));
        assert_eq!(s2.signature, Sign::Minus);
        assert_eq!(
            cyclic_shift_stats_closed_form(5)
                .unwrap()
                .transposition_count,
            n(2496)
        );
        // far beyond u64 but still exact
        let s31 = cyclic_shift_stats_closed_form(31).unwrap();
        assert_eq!(s31.point_count(), big(31).pow(31));
    }

    #[test]
    fn fallback_labels_source() {
        let system = QuditSystem::new(4, 2).unwrap();
        let stats = gate_stats(&GateId::Cnot1, &system).unwrap();
        assert_eq!(stats.source, StatsSource::DirectComputation);
        assert_eq!(stats.transposition_count, n(8));
        let prime = QuditSystem::new(5, 2).unwrap();
        assert_eq!(
            gate_stats(&GateId::Cnot2, &prime).unwrap().source,
            StatsSource::ClosedForm
        );
    }

    #[test]
    fn parity_examples() {
        let gens3 = GeneratorSet::new(vec![
            ("cnot1", cnot1(3).unwrap()),
            ("cnot2", cnot2(3).unwrap()),
        ])
        .unwrap();
        let v = parity_feasible(&swap_perm(3).unwrap(), &gens3).unwrap();
        assert!(v.obstructed);
        assert!(v.recheck(&swap_perm(3).unwrap(), &gens3));
        assert!(
            !parity_feasible(&Permutation::identity(9).unwrap(), &gens3)
                .unwrap()
                .obstructed
        );

        let gens2 = GeneratorSet::new(vec![
            ("cnot1", cnot1(2).unwrap()),
            ("cnot2", cnot2(2).unwrap()),
        ])
        .unwrap();
        let v2 = parity_feasible(&swap_perm(2).unwrap(), &gens2).unwrap();
        assert!(!v2.obstructed);
        assert_eq!(v2.generator_signatures[0].1, Sign::Minus);

        assert!(matches!(
            parity_feasible(&Permutation::identity(4).unwrap(), &gens3),
            Err(ParityError::Perm(PermError::DegreeMismatch { .. }))
        ));
    }
}
