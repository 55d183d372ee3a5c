//! The sign-flip maps and the `Z_2^m` action they generate.
//!
//! `sgn_flip(π, k)` negates `π_k, …, π_n`. The generators act at positions
//! `T_n` (`{3,5,…,n−1}` for even `n`, `{2,4,…,n−1}` for odd `n`), which
//! never touch `π_1` and always flip an even number of entries. Each
//! generator moves the run count by exactly one in a direction that does not
//! depend on the other generators, so every orbit contributes
//! `t^a (1+t)^m` to a run polynomial.
//!
//! Orbits are indexed by the transversal of elements that are positive at
//! every generator position.

use serde::Serialize;
use thiserror::Error;

use crate::class::{ClassSelector, FirstSign, Group, LengthParity};
use crate::perm::SignedPermutation;
use crate::poly::{Coefficient, Polynomial};
use crate::stats::altruns_b;

/// Largest `m` for which [`orbit`] will materialize `2^m` elements.
pub const MAX_MATERIALIZED_GENERATORS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generator set is for n = {expected}, permutation has n = {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("representative is not canonical: entry at generator position {position} is negative")]
    NotCanonical { position: usize },
    #[error("invalid generator positions {positions:?} for n = {n}: {reason}")]
    InvalidGenerators {
        n: usize,
        positions: Vec<usize>,
        reason: &'static str,
    },
    #[error("orbit of 2^{m} elements exceeds the materialization cap 2^{cap}")]
    OrbitTooLarge { m: usize, cap: usize },
}

/// Negates the window suffix starting at 1-based position `k`.
#[inline]
pub(crate) fn flip_suffix(values: &mut [i32], k: usize) {
    for v in &mut values[k - 1..] {
        *v = -*v;
    }
}

pub fn sgn_flip(pi: &SignedPermutation, k: usize) -> Result<SignedPermutation, ActionError> {
    let n = pi.n();
    if k == 0 || k > n {
        return Err(ActionError::IndexOutOfRange { index: k, n });
    }
    let mut values = pi.values().to_vec();
    flip_suffix(&mut values, k);
    Ok(SignedPermutation::from_trusted(values))
}

/// Positions of the commuting sign-flip generators for a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSet {
    n: usize,
    positions: Vec<usize>,
}

impl GeneratorSet {
    /// The standard set `T_n`, of size `⌊(n−1)/2⌋`.
    pub fn standard(n: usize) -> Self {
        let start = if n.is_multiple_of(2) { 3 } else { 2 };
        let positions = (start..n).step_by(2).collect();
        Self { n, positions }
    }

    /// A custom generator set. Positions must be ascending, lie in
    /// `2..=n−1` and be at least two apart; under those conditions each
    /// generator still changes the run count by one independently of the
    /// others. Whether the set preserves a class is a separate question,
    /// answered by [`GeneratorSet::preserves`].
    pub fn with_positions(n: usize, positions: Vec<usize>) -> Result<Self, ActionError> {
        let invalid = |reason| ActionError::InvalidGenerators {
            n,
            positions: positions.clone(),
            reason,
        };
        if positions.iter().any(|&p| p < 2 || p + 1 > n) {
            return Err(invalid("positions must lie in 2..=n-1"));
        }
        if positions.windows(2).any(|w| w[1] < w[0] + 2) {
            return Err(invalid(
                "positions must be ascending and at least two apart",
            ));
        }
        Ok(Self { n, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn m(&self) -> usize {
        self.positions.len()
    }

    pub fn orbit_size(&self) -> u128 {
        1u128 << self.m()
    }

    fn flips_even_count(&self, p: usize) -> bool {
        (self.n - p + 1).is_multiple_of(2)
    }

    /// Whether every generator maps the class named by `selector` into
    /// itself, so that orbit-factored counting over it is valid.
    pub fn preserves(&self, selector: &ClassSelector) -> bool {
        let sign_ok = selector.first_sign == FirstSign::Any || !self.positions.contains(&1);
        let needs_even = selector.group != Group::B || selector.length_parity != LengthParity::Any;
        let parity_ok = !needs_even || self.positions.iter().all(|&p| self.flips_even_count(p));
        sign_ok && parity_ok
    }

    fn check_len(&self, pi: &SignedPermutation) -> Result<(), ActionError> {
        if pi.n() != self.n {
            return Err(ActionError::LengthMismatch {
                expected: self.n,
                found: pi.n(),
            });
        }
        Ok(())
    }

    /// Whether the window is positive at every generator position.
    pub(crate) fn is_canonical_slice(&self, values: &[i32]) -> bool {
        self.positions.iter().all(|&p| values[p - 1] > 0)
    }

    pub fn is_canonical(&self, pi: &SignedPermutation) -> bool {
        pi.n() == self.n && self.is_canonical_slice(pi.values())
    }
}

/// `T_n` for the given `n`.
pub fn generator_set(n: usize) -> GeneratorSet {
    GeneratorSet::standard(n)
}

/// Maps `pi` to the unique orbit element positive at every generator
/// position, returning the generator positions that were applied.
pub fn canonicalize(
    pi: &SignedPermutation,
    gens: &GeneratorSet,
) -> Result<(SignedPermutation, Vec<usize>), ActionError> {
    gens.check_len(pi)?;
    let mut values = pi.values().to_vec();
    let mut applied = Vec::new();
    for &p in gens.positions() {
        if values[p - 1] < 0 {
            flip_suffix(&mut values, p);
            applied.push(p);
        }
    }
    Ok((SignedPermutation::from_trusted(values), applied))
}

/// All `2^m` orbit elements, in order of the generator subset bitmask
/// (bit `j` set means the `j`-th generator position was applied).
pub fn orbit(
    pi: &SignedPermutation,
    gens: &GeneratorSet,
) -> Result<Vec<SignedPermutation>, ActionError> {
    gens.check_len(pi)?;
    let m = gens.m();
    if m > MAX_MATERIALIZED_GENERATORS {
        return Err(ActionError::OrbitTooLarge {
            m,
            cap: MAX_MATERIALIZED_GENERATORS,
        });
    }
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u32..(1 << m) {
        let mut values = pi.values().to_vec();
        for (j, &p) in gens.positions().iter().enumerate() {
            if mask >> j & 1 == 1 {
                flip_suffix(&mut values, p);
            }
        }
        out.push(SignedPermutation::from_trusted(values));
    }
    Ok(out)
}

/// An orbit described by its transversal element and the smallest run
/// count attained on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub representative: SignedPermutation,
    pub min_runs: usize,
    pub m: usize,
    /// Generator positions whose flip lowers the run count of the
    /// representative; applying all of them reaches the minimizer.
    pub decreasing: Vec<usize>,
}

impl OrbitSummary {
    /// `t^a (1+t)^m`.
    pub fn polynomial<C: Coefficient>(&self) -> Polynomial<C> {
        Polynomial::one_plus_t_power(self.m).shift(self.min_runs)
    }

    /// The orbit element with `min_runs` alternating runs.
    pub fn minimizer(&self) -> SignedPermutation {
        let mut values = self.representative.values().to_vec();
        for &p in &self.decreasing {
            flip_suffix(&mut values, p);
        }
        SignedPermutation::from_trusted(values)
    }
}

/// Slice form used by the orbit backend: `(a, d)` with `a` the orbit
/// minimum and `d` the number of run-decreasing generators.
#[inline]
pub(crate) fn min_runs_slice(values: &mut [i32], positions: &[usize]) -> usize {
    let runs = altruns_b(values);
    let mut decreasing = 0;
    for &p in positions {
        flip_suffix(values, p);
        if altruns_b(values) < runs {
            decreasing += 1;
        }
        flip_suffix(values, p);
    }
    runs - decreasing
}

pub fn orbit_min_runs(
    rep: &SignedPermutation,
    gens: &GeneratorSet,
) -> Result<OrbitSummary, ActionError> {
    gens.check_len(rep)?;
    if let Some(&position) = gens.positions().iter().find(|&&p| rep.get(p) <= 0) {
        return Err(ActionError::NotCanonical { position });
    }
    let runs = rep.altruns_b();
    let mut values = rep.values().to_vec();
    let mut decreasing = Vec::new();
    for &p in gens.positions() {
        flip_suffix(&mut values, p);
        if altruns_b(&values) < runs {
            decreasing.push(p);
        }
        flip_suffix(&mut values, p);
    }
    Ok(OrbitSummary {
        representative: rep.clone(),
        min_runs: runs - decreasing.len(),
        m: gens.m(),
        decreasing,
    })
}

/// Exact orbit polynomial by walking all `2^m` elements.
pub fn orbit_polynomial_by_walk<C: Coefficient>(
    pi: &SignedPermutation,
    gens: &GeneratorSet,
) -> Result<Polynomial<C>, ActionError> {
    let mut poly = Polynomial::zero();
    for element in orbit(pi, gens)? {
        poly.add_term(element.altruns_b(), C::one());
    }
    Ok(poly)
}

/// Bóna's complementation `c_i`: inside the suffix `π_i, …, π_n`, the
/// `p`-th smallest value is replaced by the `p`-th largest.
pub fn bona_complement(pi: &SignedPermutation, i: usize) -> Result<SignedPermutation, ActionError> {
    let n = pi.n();
    if i == 0 || i > n {
        return Err(ActionError::IndexOutOfRange { index: i, n });
    }
    let mut values = pi.values().to_vec();
    let suffix = &mut values[i - 1..];
    let mut sorted = suffix.to_vec();
    sorted.sort_unstable();
    let last = sorted.len() - 1;
    for v in suffix.iter_mut() {
        let rank = sorted
            .binary_search(v)
            .expect("value comes from the suffix");
        *v = sorted[last - rank];
    }
    Ok(SignedPermutation::from_trusted(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(values: &[i32]) -> SignedPermutation {
        SignedPermutation::make_checked(values.to_vec()).unwrap()
    }

    #[test]
    fn sgn_flip_examples() {
        let pi = p(&[1, 3, 2, -6, -4, 5]);
        assert_eq!(sgn_flip(&pi, 1).unwrap(), p(&[-1, -3, -2, 6, 4, -5]));
        assert_eq!(sgn_flip(&pi, 4).unwrap(), p(&[1, 3, 2, 6, 4, -5]));
        assert_eq!(sgn_flip(&pi, 5).unwrap(), p(&[1, 3, 2, -6, 4, -5]));
        assert_eq!(sgn_flip(&sgn_flip(&pi, 3).unwrap(), 3).unwrap(), pi);
        assert_eq!(
            sgn_flip(&pi, 0),
            Err(ActionError::IndexOutOfRange { index: 0, n: 6 })
        );
        assert_eq!(
            sgn_flip(&pi, 7),
            Err(ActionError::IndexOutOfRange { index: 7, n: 6 })
        );
    }

    #[test]
    fn standard_generator_sets() {
        assert_eq!(generator_set(6).positions(), &[3, 5]);
        assert_eq!(generator_set(5).positions(), &[2, 4]);
        assert_eq!(generator_set(2).positions(), &[] as &[usize]);
        assert_eq!(generator_set(1).m(), 0);
        assert_eq!(generator_set(3).positions(), &[2]);
        for n in 1..=20 {
            let g = generator_set(n);
            assert_eq!(g.m(), (n - 1) / 2);
            for &q in g.positions() {
                assert!((2..n).contains(&q));
                assert_eq!((n - q + 1) % 2, 0);
            }
            for s in ClassSelector::all() {
                assert!(g.preserves(&s));
            }
        }
    }

    #[test]
    fn custom_generators_validate_and_may_break_closure() {
        assert!(GeneratorSet::with_positions(5, vec![1]).is_err());
        assert!(GeneratorSet::with_positions(5, vec![5]).is_err());
        assert!(GeneratorSet::with_positions(6, vec![2, 3]).is_err());
        assert!(GeneratorSet::with_positions(6, vec![4, 2]).is_err());
        // position 2 of n = 4 flips three entries
        let odd = GeneratorSet::with_positions(4, vec![2]).unwrap();
        assert!(odd.preserves(&"B:pos:any".parse().unwrap()));
        assert!(!odd.preserves(&"D:pos:any".parse().unwrap()));
        assert!(!odd.preserves(&"B:pos:even".parse().unwrap()));
    }

    #[test]
    fn canonicalize_examples() {
        let g = generator_set(6);
        let (rep, applied) = canonicalize(&p(&[1, 2, -3, 4, 5, 6]), &g).unwrap();
        assert_eq!(rep, p(&[1, 2, 3, -4, 5, 6]));
        assert_eq!(applied, vec![3, 5]);
        let (again, none) = canonicalize(&rep, &g).unwrap();
        assert_eq!(again, rep);
        assert!(none.is_empty());
        assert_eq!(
            canonicalize(&p(&[1, 2]), &g),
            Err(ActionError::LengthMismatch {
                expected: 6,
                found: 2
            })
        );
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(
            orbit(&p(&[2, -1]), &generator_set(2)).unwrap(),
            vec![p(&[2, -1])]
        );
        assert_eq!(
            orbit(&p(&[1, 2, 3, 4]), &generator_set(4)).unwrap().len(),
            2
        );
        let o = orbit(&p(&[3, 1, 2, 5, 4]), &generator_set(5)).unwrap();
        assert_eq!(o.len(), 4);
        let mut dedup = o.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 4);
        assert!(o.iter().all(|x| x.negs_count() % 2 == 0));
    }

    #[test]
    fn orbit_min_runs_examples() {
        let g3 = generator_set(3);
        let s = orbit_min_runs(&p(&[1, 2, 3]), &g3).unwrap();
        assert_eq!((s.min_runs, s.m), (1, 1));
        assert_eq!(s.minimizer(), p(&[1, 2, 3]));
        let expected: Polynomial<BigInt> = Polynomial::from_coeffs(vec![0, 1, 1]);
        assert_eq!(s.polynomial::<BigInt>(), expected);
        assert_eq!(
            orbit_polynomial_by_walk::<BigInt>(&p(&[1, 2, 3]), &g3).unwrap(),
            expected
        );

        let s = orbit_min_runs(&p(&[2, 1]), &generator_set(2)).unwrap();
        assert_eq!(s.min_runs, 2);
        assert_eq!(
            s.polynomial::<i64>(),
            Polynomial::from_coeffs(vec![0, 0, 1])
        );

        assert_eq!(
            orbit_min_runs(&p(&[1, -2, -3]), &g3),
            Err(ActionError::NotCanonical { position: 2 })
        );
    }

    #[test]
    fn bona_examples() {
        let pi = p(&[1, 2, -3, -4]);
        let c = bona_complement(&pi, 3).unwrap();
        assert_eq!(c, p(&[1, 2, -4, -3]));
        assert_eq!(bona_complement(&c, 3).unwrap(), pi);
        assert_eq!(bona_complement(&pi, 4).unwrap(), pi);
        assert_eq!(bona_complement(&pi, 1).unwrap(), p(&[-3, -4, 1, 2]));
        assert_ne!(pi.inv_b() % 2, c.inv_b() % 2);
        assert!(bona_complement(&pi, 5).is_err());
    }
}
