use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Subspace};

/// Number of `k`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Number of subspaces of `GF(q)^n`, all dimensions.
pub fn subspace_count(n: usize, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

/// Caps for brute-force lattice runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBudget {
    pub max_subspaces: u64,
    /// Only enforced when the `std` feature is on.
    pub max_seconds: u64,
}

impl Default for LatticeBudget {
    fn default() -> Self {
        LatticeBudget {
            max_subspaces: 2_000_000,
            max_seconds: 300,
        }
    }
}

impl LatticeBudget {
    pub fn new(max_subspaces: u64, max_seconds: u64) -> Result<Self, Error> {
        if max_subspaces == 0 || max_seconds == 0 {
            return Err(Error::BadParams("lattice budget caps must be positive".into()));
        }
        Ok(LatticeBudget {
            max_subspaces,
            max_seconds,
        })
    }

    /// Fails with the required count if `required` exceeds the cap.
    pub fn admit(&self, required: u128) -> Result<(), Error> {
        if required > self.max_subspaces as u128 {
            return Err(Error::BudgetExceeded {
                required,
                allowed: self.max_subspaces,
            });
        }
        Ok(())
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock::start(self.max_seconds)
    }
}

pub(crate) struct Clock {
    #[cfg(feature = "std")]
    started: std::time::Instant,
    max_seconds: u64,
    ticks: u32,
}

impl Clock {
    fn start(max_seconds: u64) -> Self {
        Clock {
            #[cfg(feature = "std")]
            started: std::time::Instant::now(),
            max_seconds,
            ticks: 0,
        }
    }

    /// Cheap to call in a loop; reads the clock every 1024 ticks.
    pub(crate) fn tick(&mut self) -> Result<(), Error> {
        self.ticks = self.ticks.wrapping_add(1);
        if !self.ticks.is_multiple_of(1024) {
            return Ok(());
        }
        #[cfg(feature = "std")]
        if self.started.elapsed().as_secs() >= self.max_seconds {
            return Err(Error::TimeBudgetExceeded {
                seconds: self.max_seconds,
            });
        }
        let _ = self.max_seconds;
        Ok(())
    }
}

pub(crate) fn prime_of(field: FieldSpec, operation: &'static str) -> Result<u32, Error> {
    match field {
        FieldSpec::Prime(p) => Ok(p),
        FieldSpec::Rationals => Err(Error::NeedsPrimeField { operation }),
    }
}

/// Every subspace of `GF(p)^n` exactly once, by increasing dimension, then
/// pivot pattern, then free entries.
pub fn enumerate_subspaces(
    field: FieldSpec,
    n: usize,
    budget: &LatticeBudget,
) -> Result<Subspaces, Error> {
    let p = prime_of(field, "subspace enumeration")?;
    budget.admit(subspace_count(n, p as u64))?;
    Ok(Subspaces::new(field, n, 0, n))
}

/// Subspaces of a single dimension `k`.
pub fn enumerate_subspaces_of_dim(
    field: FieldSpec,
    n: usize,
    k: usize,
    budget: &LatticeBudget,
) -> Result<Subspaces, Error> {
    let p = prime_of(field, "subspace enumeration")?;
    budget.admit(gaussian_binomial(n, k, p as u64))?;
    Ok(Subspaces::new(field, n, k, k))
}

/// Streaming enumerator over canonical reduced row-echelon bases.
#[derive(Clone, Debug)]
pub struct Subspaces {
    field: FieldSpec,
    p: u32,
    n: usize,
    k: usize,
    max_k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    done: bool,
}

impl Subspaces {
    fn new(field: FieldSpec, n: usize, k: usize, max_k: usize) -> Self {
        let p = match field {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => unreachable!("checked by caller"),
        };
        let mut it = Subspaces {
            field,
            p,
            n,
            k,
            max_k,
            pivots: (0..k).collect(),
            free: Vec::new(),
            digits: Vec::new(),
            done: k > n || k > max_k,
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (r, &c) in self.pivots.iter().enumerate() {
            for j in c + 1..self.n {
                if !self.pivots.contains(&j) {
                    self.free.push((r, j));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let zero = self.field.zero();
        let mut rows = vec![vec![zero; self.n]; self.k];
        for (r, &c) in self.pivots.iter().enumerate() {
            rows[r][c] = self.field.one();
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            rows[r][c] = Scalar::Residue {
                value: d,
                modulus: self.p,
            };
        }
        let basis = Matrix::from_rows(self.field, self.n, rows).expect("well-formed rows");
        Subspace::from_rref_unchecked(basis, self.pivots.clone())
    }

    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.p {
                return;
            }
            *d = 0;
        }
        if !self.next_pivots() {
            self.k += 1;
            if self.k > self.n || self.k > self.max_k {
                self.done = true;
                return;
            }
            self.pivots = (0..self.k).collect();
        }
        self.reset_free();
    }

    /// Next `k`-combination of `0..n` in lexicographic order.
    fn next_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        for i in (0..k).rev() {
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Subspaces {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}
