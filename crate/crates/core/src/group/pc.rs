//! Power-commutator presentations and collection.

use crate::error::{Error, Result};
use crate::util::is_prime;

/// A normal word `g_{i1}^{e1} g_{i2}^{e2} ...` with strictly increasing
/// 1-based generator indices and exponents in `1..p`.
pub type NormalWord = Vec<(usize, u32)>;

/// Collection aborts after this many single-letter steps.
const COLLECTION_STEP_LIMIT: u64 = 50_000_000;

/// A power-commutator presentation on generators `g_1..g_n` of prime
/// relative order `p`. Generator indices in the public API are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    prime: u32,
    ngens: usize,
    powers: Vec<NormalWord>,
    // commutators[j][i] = [g_j, g_i] for j > i (0-based storage)
    commutators: Vec<Vec<NormalWord>>,
}

impl PcPresentation {
    /// Presentation with all power and commutator relations trivial
    /// (elementary abelian of rank `ngens`).
    pub fn new(prime: u32, ngens: usize) -> Result<Self> {
        if !is_prime(prime as u64) {
            return Err(Error::MalformedSpec(format!("{prime} is not a prime")));
        }
        Ok(Self {
            prime,
            ngens,
            powers: vec![Vec::new(); ngens],
            commutators: (0..ngens).map(|j| vec![Vec::new(); j]).collect(),
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Sets `g_i^p = word`.
    pub fn set_power(&mut self, i: usize, word: NormalWord) -> Result<()> {
        self.check_gen(i)?;
        self.check_word(&word, i, &format!("pow {i}"))?;
        self.powers[i - 1] = word;
        Ok(())
    }

    /// Sets `[g_j, g_i] = word` for `j > i`.
    pub fn set_commutator(&mut self, j: usize, i: usize, word: NormalWord) -> Result<()> {
        self.check_gen(i)?;
        self.check_gen(j)?;
        if j <= i {
            return Err(Error::MalformedSpec(format!(
                "comm {j} {i}: first index must exceed the second"
            )));
        }
        self.check_word(&word, i, &format!("comm {j} {i}"))?;
        self.commutators[j - 1][i - 1] = word;
        Ok(())
    }

    pub fn power(&self, i: usize) -> &NormalWord {
        &self.powers[i - 1]
    }

    pub fn commutator(&self, j: usize, i: usize) -> &NormalWord {
        &self.commutators[j - 1][i - 1]
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.ngens {
            return Err(Error::MalformedSpec(format!(
                "generator index {i} outside 1..={}",
                self.ngens
            )));
        }
        Ok(())
    }

    fn check_word(&self, word: &NormalWord, lower: usize, what: &str) -> Result<()> {
        let mut last = lower;
        for &(g, e) in word {
            if g <= last {
                return Err(Error::MalformedSpec(format!(
                    "{what}: generator {g} must have index greater than {last}"
                )));
            }
            if g > self.ngens {
                return Err(Error::MalformedSpec(format!("{what}: no generator {g}")));
            }
            if e == 0 || e >= self.prime {
                return Err(Error::MalformedSpec(format!(
                    "{what}: exponent {e} outside 1..{}",
                    self.prime
                )));
            }
            last = g;
        }
        Ok(())
    }

    pub(crate) fn collector(&self) -> Collector {
        let n = self.ngens;
        let expand = |w: &NormalWord| -> Vec<usize> {
            w.iter()
                .flat_map(|&(g, e)| std::iter::repeat(g - 1).take(e as usize))
                .collect()
        };
        let power_letters = self.powers.iter().map(expand).collect();
        // conj[i][j] = letters of g_j^{g_i} = g_j [g_j, g_i]
        let conj = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j <= i {
                            Vec::new()
                        } else {
                            let mut letters = vec![j];
                            letters.extend(expand(&self.commutators[j][i]));
                            letters
                        }
                    })
                    .collect()
            })
            .collect();
        Collector {
            prime: self.prime,
            power_letters,
            conj,
        }
    }
}

/// Collection from the left: the leftmost uncollected letter is always moved
/// into the collected prefix, lifting the tail of the prefix above it.
#[derive(Debug, Clone)]
pub(crate) struct Collector {
    prime: u32,
    power_letters: Vec<Vec<usize>>,
    conj: Vec<Vec<Vec<usize>>>,
}

impl Collector {
    /// Returns the normal form of `a * b` for exponent vectors `a`, `b`.
    pub(crate) fn multiply(&self, a: &[u32], b: &[u32]) -> Result<Vec<u32>> {
        let mut v = a.to_vec();
        let mut stack: Vec<usize> = Vec::new();
        for (g, &e) in b.iter().enumerate().rev() {
            stack.extend(std::iter::repeat(g).take(e as usize));
        }
        self.collect(&mut v, &mut stack)?;
        Ok(v)
    }

    // `stack` holds uncollected letters with the leftmost on top.
    fn collect(&self, v: &mut [u32], stack: &mut Vec<usize>) -> Result<()> {
        let n = v.len();
        let mut steps: u64 = 0;
        let mut pending = Vec::new();
        while let Some(i) = stack.pop() {
            steps += 1;
            if steps > COLLECTION_STEP_LIMIT {
                return Err(Error::InconsistentPresentation(
                    "collection exceeded its step limit".into(),
                ));
            }
            pending.clear();
            v[i] += 1;
            if v[i] == self.prime {
                v[i] = 0;
                pending.extend_from_slice(&self.power_letters[i]);
            }
            for j in i + 1..n {
                for _ in 0..v[j] {
                    pending.extend_from_slice(&self.conj[i][j]);
                }
                v[j] = 0;
            }
            stack.extend(pending.iter().rev());
        }
        Ok(())
    }
}
