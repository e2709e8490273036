//! Exact sparse linear algebra over the rationals, plus a prime-field
//! backend for the optional modular fast path.

mod echelon;
mod field;

use std::env;

use rand::SeedableRng;

pub use echelon::{orthogonal_complement, rank, Echelon, SparseRow};
pub use field::{is_prime, Field, PrimeField, Rationals};

use crate::error::{Error, Result};

/// Environment variable holding the memory guard, in bytes (`K`/`M`/`G` suffixes allowed).
pub const MEMORY_GUARD_ENV: &str = "RAAG_PAUT_MEMORY_GUARD";

/// Default memory guard: 2 GiB.
pub const DEFAULT_MEMORY_GUARD: usize = 2 << 30;

/// Which arithmetic backs rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Arithmetic {
    /// Exact rational elimination.
    #[default]
    Exact,
    /// Elimination modulo a random prime near `2^62`, accepted only when a
    /// second independent prime gives the same answer; falls back to exact
    /// arithmetic otherwise. The seed makes the prime choice reproducible.
    Modular { seed: u64 },
}

/// Options shared by the dimension computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeOptions {
    pub arithmetic: Arithmetic,
    /// Abort with [`Error::Resource`] once the estimated working set exceeds this many bytes.
    pub memory_guard: usize,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { arithmetic: Arithmetic::Exact, memory_guard: DEFAULT_MEMORY_GUARD }
    }
}

impl ComputeOptions {
    /// Defaults, with the memory guard read from [`MEMORY_GUARD_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = ComputeOptions::default();
        if let Ok(raw) = env::var(MEMORY_GUARD_ENV) {
            opts.memory_guard = parse_byte_size(&raw)
                .ok_or_else(|| Error::input(format!("{MEMORY_GUARD_ENV}: cannot parse {raw:?} as a byte count")))?;
        }
        Ok(opts)
    }

    pub(crate) fn check_guard(&self, degree: usize, bytes: usize) -> Result<()> {
        if bytes > self.memory_guard {
            Err(Error::Resource {
                degree: Some(degree),
                message: format!(
                    "estimated working set of {bytes} bytes exceeds the memory guard of {} bytes",
                    self.memory_guard
                ),
            })
        } else {
            Ok(())
        }
    }

    /// Runs `compute` exactly, or over two random primes with exact fallback.
    pub(crate) fn run<T, C>(&self, compute: C) -> Result<T>
    where
        T: PartialEq,
        C: Fn(&dyn DynField) -> Result<T>,
    {
        match self.arithmetic {
            Arithmetic::Exact => compute(&Rationals),
            Arithmetic::Modular { seed } => {
                let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
                let p1 = PrimeField::random(&mut rng);
                let mut p2 = PrimeField::random(&mut rng);
                while p2 == p1 {
                    p2 = PrimeField::random(&mut rng);
                }
                let a = compute(&p1)?;
                let b = compute(&p2)?;
                if a == b {
                    Ok(a)
                } else {
                    compute(&Rationals)
                }
            }
        }
    }
}

/// Object-safe dispatch over the two concrete fields.
pub(crate) trait DynField {
    fn visit(&self) -> FieldRef<'_>;
}

pub(crate) enum FieldRef<'a> {
    Rational(&'a Rationals),
    Prime(&'a PrimeField),
}

impl DynField for Rationals {
    fn visit(&self) -> FieldRef<'_> {
        FieldRef::Rational(self)
    }
}

impl DynField for PrimeField {
    fn visit(&self) -> FieldRef<'_> {
        FieldRef::Prime(self)
    }
}

fn parse_byte_size(raw: &str) -> Option<usize> {
    let s = raw.trim();
    let (digits, mult) = match s.chars().last()? {
        'K' | 'k' => (&s[..s.len() - 1], 1usize << 10),
        'M' | 'm' => (&s[..s.len() - 1], 1 << 20),
        'G' | 'g' => (&s[..s.len() - 1], 1 << 30),
        _ => (s, 1),
    };
    digits.trim().parse::<usize>().ok()?.checked_mul(mult)
}
