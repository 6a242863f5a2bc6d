//! The quantum matrix algebra `O_q(M_{m,n})`.
//!
//! Elements are kept in PBW normal form: linear combinations of words whose
//! generators are non-decreasing in row-major order. Any word is brought to
//! that form by the four quadratic rewrite rules in [`rewrite_pair`].

mod ncpoly;
mod relations;
mod rewrite;

use std::fmt;

pub use ncpoly::NCPoly;
pub use relations::{matrix_relations, MatrixRelation, RelationClass};
pub use rewrite::{normal_form, normal_form_with, rewrite_pair, Strategy};

use crate::error::{Error, Result};

/// Shape `(m, n)` of the generic matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambient {
    pub m: usize,
    pub n: usize,
}

impl Ambient {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Ambient(format!("empty matrix shape ({m},{n})")));
        }
        if m * n > u16::MAX as usize {
            return Err(Error::Ambient(format!("matrix shape ({m},{n}) too large")));
        }
        Ok(Ambient { m, n })
    }

    pub fn num_generators(&self) -> usize {
        self.m * self.n
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (1..=self.m).flat_map(move |row| (1..=self.n).map(move |col| Generator { row, col }))
    }

    pub fn contains(&self, g: Generator) -> bool {
        (1..=self.m).contains(&g.row) && (1..=self.n).contains(&g.col)
    }

    fn flat(&self, g: Generator) -> u16 {
        ((g.row - 1) * self.n + (g.col - 1)) as u16
    }

    fn unflat(&self, idx: u16) -> Generator {
        let idx = idx as usize;
        Generator {
            row: idx / self.n + 1,
            col: idx % self.n + 1,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.m, self.n)
    }
}

/// The generator `x_{row,col}`; ordered row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub fn new(row: usize, col: usize) -> Self {
        Generator { row, col }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A word in the generators, stored as row-major flat indices.
///
/// Because flat indices order generators row-major, a word is in normal
/// order exactly when its index sequence is non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub(crate) Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_generators(amb: Ambient, gens: &[Generator]) -> Result<Self> {
        gens.iter()
            .map(|&g| {
                if amb.contains(g) {
                    Ok(amb.flat(g))
                } else {
                    Err(Error::Ambient(format!("{g} outside {amb}")))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn generators(&self, amb: Ambient) -> Vec<Generator> {
        self.0.iter().map(|&i| amb.unflat(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn display(&self, amb: Ambient) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.generators(amb).iter().map(|g| g.to_string()).collect()
    }
}
