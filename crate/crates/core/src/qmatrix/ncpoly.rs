use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::qmatrix::{normal_form, Ambient, Generator, Word};

/// An element of `O_q(M_{m,n})` in PBW normal form.
///
/// Every key is a normal word and no coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    amb: Ambient,
    terms: HashMap<Word, LaurentPoly>,
}

impl NCPoly {
    pub fn zero(amb: Ambient) -> Self {
        NCPoly {
            amb,
            terms: HashMap::new(),
        }
    }

    pub fn one(amb: Ambient) -> Self {
        Self::scalar(amb, LaurentPoly::one())
    }

    pub fn scalar(amb: Ambient, c: LaurentPoly) -> Self {
        let mut p = Self::zero(amb);
        p.add_term(Word::empty(), &c);
        p
    }

    pub fn generator(amb: Ambient, g: Generator) -> Result<Self> {
        let w = Word::from_generators(amb, &[g])?;
        let mut p = Self::zero(amb);
        p.add_term(w, &LaurentPoly::one());
        Ok(p)
    }

    /// Normal form of an arbitrary combination of words.
    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly)>>(amb: Ambient, terms: I) -> Self {
        normal_form(amb, terms)
    }

    /// The normal form of a single word given as generators.
    pub fn from_generators(amb: Ambient, gens: &[Generator]) -> Result<Self> {
        let w = Word::from_generators(amb, gens)?;
        Ok(normal_form(amb, [(w, LaurentPoly::one())]))
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Terms in ascending word order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word in the support.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().max()
    }

    /// Adds `c * w` for a word already in normal order.
    pub(crate) fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        debug_assert!(w.is_normal());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &NCPoly) -> Result<()> {
        if self.amb != other.amb {
            return Err(Error::AmbientMismatch(format!(
                "{} vs {}",
                self.amb, other.amb
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.amb);
        }
        NCPoly {
            amb: self.amb,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &NCPoly) {
        assert_eq!(self.amb, other.amb, "ambient mismatch");
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(c * v));
        }
    }

    /// Product in the algebra: concatenate words and renormalize.
    pub fn nc_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(NCPoly::zero(self.amb));
        }
        let mut raw: Vec<(Word, LaurentPoly)> = Vec::with_capacity(self.len() * other.len());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                raw.push((u.concat(v), a * b));
            }
        }
        Ok(normal_form(self.amb, raw))
    }

    pub fn square(&self) -> NCPoly {
        self.nc_mul(self).expect("same ambient")
    }

    pub fn pow(&self, k: u32) -> NCPoly {
        let mut acc = NCPoly::one(self.amb);
        for _ in 0..k {
            acc = acc.nc_mul(self).expect("same ambient");
        }
        acc
    }

    /// Parse the textual form, e.g. `x[1,1]x[2,2] - q*x[1,2]x[2,1]`.
    pub fn parse(text: &str, amb: Ambient) -> Result<NCPoly> {
        crate::expr::eval_in(text, amb)
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({self})", self.amb)
    }
}

fn render_term(c: &LaurentPoly, w: &Word, amb: Ambient) -> (bool, String) {
    let neg = c.leading_coeff().is_some_and(|x| x < &0.into());
    let abs = if neg { -c } else { c.clone() };
    let body = if w.is_empty() {
        if abs.num_terms() > 1 {
            format!("({abs})")
        } else {
            abs.to_string()
        }
    } else if abs.is_one() {
        w.display(amb)
    } else if abs.num_terms() == 1 {
        format!("{abs}*{}", w.display(amb))
    } else {
        format!("({abs})*{}", w.display(amb))
    };
    (neg, body)
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, body) = render_term(c, w, self.amb);
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    /// Panics if the ambients differ.
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.try_add(rhs).expect("ambient mismatch")
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&LaurentPoly::from_int(-1))
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    /// Panics if the ambients differ; see [`NCPoly::nc_mul`].
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.nc_mul(rhs).expect("ambient mismatch")
    }
}
