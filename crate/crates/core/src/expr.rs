//! Expression language for minors and generators.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (['*'] unary)*          juxtaposition multiplies
//! unary  := '-' unary | atom ['^' int]
//! atom   := int | 'q' | 'x[' i ',' j ']' | '[' digits ']' | '[' i,j,... ']'
//!         | '[' rows '|' cols ']' | '(' expr ')'
//! ```
//!
//! Products are noncommutative and evaluated in `O_q(M_{m,n})`.

use num_bigint::BigInt;

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::grassmann::{Grassmannian, IndexSet};
use crate::minors::{quantum_minor, IndexPair};
use crate::qmatrix::{Ambient, Generator, NCPoly};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    /// `q^k`
    QPow(i32),
    Gen(usize, usize),
    /// maximal minor `[J]`, column list as written
    Minor(Vec<usize>, usize),
    /// `[I|J]`
    PairMinor(Vec<usize>, Vec<usize>, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

fn perr<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            perr(self.pos, format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return perr(self.pos, "expected a number");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn usize(&mut self) -> Result<usize> {
        let at = self.pos;
        self.digits()?
            .parse()
            .or_else(|_| perr(at, "index out of range"))
    }

    fn signed_exp(&mut self) -> Result<i32> {
        let braced = self.eat('{');
        let neg = self.eat('-');
        let at = self.pos;
        let v: i32 = self
            .digits()?
            .parse()
            .or_else(|_| perr(at, "exponent out of range"))?;
        if braced {
            self.expect('}')?;
        }
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || matches!(c, 'q' | 'x' | '[' | '('))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            // explicit `*` or juxtaposition
            if !(self.eat('*') || self.starts_atom()) {
                return Ok(lhs);
            }
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let at = self.pos;
        let atom = self.atom()?;
        if self.eat('^') {
            return match atom {
                Expr::QPow(1) => Ok(Expr::QPow(self.signed_exp()?)),
                other => {
                    let e = self.signed_exp()?;
                    if e < 0 {
                        return perr(at, "negative powers are only allowed for q");
                    }
                    Ok(Expr::Pow(Box::new(other), e as u32))
                }
            };
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(Expr::Int(d.parse().expect("digits")))
            }
            Some('q') => {
                self.pos += 1;
                Ok(Expr::QPow(1))
            }
            Some('x') => {
                self.pos += 1;
                self.expect('[')?;
                let i = self.usize()?;
                self.expect(',')?;
                let j = self.usize()?;
                self.expect(']')?;
                Ok(Expr::Gen(i, j))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                self.bracket(at)
            }
            Some(c) => perr(at, format!("unexpected '{c}'")),
            None => perr(at, "unexpected end of input"),
        }
    }

    fn list(&mut self) -> Result<Vec<usize>> {
        let mut v = vec![self.usize()?];
        while self.eat(',') {
            v.push(self.usize()?);
        }
        Ok(v)
    }

    fn bracket(&mut self, at: usize) -> Result<Expr> {
        // look ahead for '|' or ',' before the closing bracket
        let close = self.chars[self.pos..]
            .iter()
            .position(|&c| c == ']')
            .map(|p| p + self.pos);
        let Some(close) = close else {
            return perr(at, "unclosed '['");
        };
        let inner: String = self.chars[self.pos..close].iter().collect();
        if inner.contains('|') {
            let rows = self.list()?;
            self.expect('|')?;
            let cols = self.list()?;
            self.expect(']')?;
            Ok(Expr::PairMinor(rows, cols, at))
        } else if inner.contains(',') {
            let cols = self.list()?;
            self.expect(']')?;
            Ok(Expr::Minor(cols, at))
        } else {
            let d = self.digits()?;
            self.expect(']')?;
            Ok(Expr::Minor(
                d.chars()
                    .map(|c| c.to_digit(10).expect("digit") as usize)
                    .collect(),
                at,
            ))
        }
    }
}

/// Parse an expression into its syntax tree.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return perr(p.pos, format!("unexpected '{c}'"));
    }
    Ok(e)
}

#[derive(Default)]
struct Extents {
    max_row: usize,
    max_col: usize,
    grass_size: Option<(usize, usize)>,
}

fn extents(e: &Expr, ext: &mut Extents) {
    match e {
        Expr::Int(_) | Expr::QPow(_) => {}
        Expr::Gen(i, j) => {
            ext.max_row = ext.max_row.max(*i);
            ext.max_col = ext.max_col.max(*j);
        }
        Expr::Minor(cols, at) => {
            ext.grass_size.get_or_insert((cols.len(), *at));
        }
        Expr::PairMinor(r, c, _) => {
            ext.max_row = ext.max_row.max(r.iter().copied().max().unwrap_or(0));
            ext.max_col = ext.max_col.max(c.iter().copied().max().unwrap_or(0));
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            extents(a, ext);
            extents(b, ext);
        }
        Expr::Neg(a) | Expr::Pow(a, _) => extents(a, ext),
    }
}

struct Evaluator {
    amb: Ambient,
    grass: Option<Grassmannian>,
}

impl Evaluator {
    fn eval(&self, e: &Expr) -> Result<NCPoly> {
        Ok(match e {
            Expr::Int(c) => NCPoly::scalar(self.amb, LaurentPoly::monomial(c.clone(), 0)),
            Expr::QPow(k) => NCPoly::scalar(self.amb, LaurentPoly::q_pow(*k)),
            Expr::Gen(i, j) => NCPoly::generator(self.amb, Generator::new(*i, *j))?,
            Expr::Minor(cols, _) => {
                let g = self.grass.as_ref().expect("grassmannian set up for minors");
                let set = IndexSet::new(cols.clone(), g.m(), g.n())?;
                if set.elems() != cols.as_slice() && {
                    let mut s = cols.clone();
                    s.sort_unstable();
                    s != *cols
                } {
                    return Err(Error::BadShape(format!(
                        "minor {cols:?} is not written in increasing order"
                    )));
                }
                g.minor(&set)?
            }
            Expr::PairMinor(r, c, _) => {
                quantum_minor(self.amb, &IndexPair::new(r.clone(), c.clone(), self.amb)?)?
            }
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => self.eval(a)?.nc_mul(&self.eval(b)?)?,
            Expr::Neg(a) => -&self.eval(a)?,
            Expr::Pow(a, k) => self.eval(a)?.pow(*k),
        })
    }
}

/// Evaluate `text` to normal form.
///
/// With `ambient = None` the shape is inferred from the largest row and
/// column indices, which is only possible without maximal minors `[J]`.
pub fn eval_expr(text: &str, ambient: Option<Ambient>) -> Result<NCPoly> {
    let e = parse(text)?;
    let mut ext = Extents::default();
    extents(&e, &mut ext);
    let amb = match ambient {
        Some(a) => {
            if ext.max_row > a.m || ext.max_col > a.n {
                return Err(Error::Ambient(format!(
                    "indices up to ({},{}) do not fit {a}",
                    ext.max_row, ext.max_col
                )));
            }
            a
        }
        None => {
            if let Some((_, at)) = ext.grass_size {
                return Err(Error::Ambient(format!(
                    "maximal minor at position {at} needs an explicit ambient (m,n)"
                )));
            }
            Ambient::new(ext.max_row.max(1), ext.max_col.max(1))?
        }
    };
    let grass = match ext.grass_size {
        Some((size, at)) => {
            if size != amb.m {
                return Err(Error::Ambient(format!(
                    "minor at position {at} has {size} columns but m = {}",
                    amb.m
                )));
            }
            Some(Grassmannian::new(amb.m, amb.n)?)
        }
        None => None,
    };
    Evaluator { amb, grass }.eval(&e)
}

pub(crate) fn eval_in(text: &str, amb: Ambient) -> Result<NCPoly> {
    eval_expr(text, Some(amb))
}

/// Formal expansion of an expression in maximal minors into
/// `(coefficient, [J_1]...[J_d])` terms, without normalizing.
pub fn grass_terms(text: &str, m: usize, n: usize) -> Result<Vec<(LaurentPoly, Vec<IndexSet>)>> {
    fn go(e: &Expr, m: usize, n: usize) -> Result<Vec<(LaurentPoly, Vec<IndexSet>)>> {
        Ok(match e {
            Expr::Int(c) => vec![(LaurentPoly::monomial(c.clone(), 0), vec![])],
            Expr::QPow(k) => vec![(LaurentPoly::q_pow(*k), vec![])],
            Expr::Minor(cols, _) => {
                vec![(LaurentPoly::one(), vec![IndexSet::new(cols.clone(), m, n)?])]
            }
            Expr::Gen(..) | Expr::PairMinor(..) => {
                return Err(Error::BadShape(
                    "only maximal minors [J] are allowed in grassmannian expressions".into(),
                ))
            }
            Expr::Add(a, b) => {
                let mut v = go(a, m, n)?;
                v.extend(go(b, m, n)?);
                v
            }
            Expr::Sub(a, b) => {
                let mut v = go(a, m, n)?;
                v.extend(go(b, m, n)?.into_iter().map(|(c, w)| (-c, w)));
                v
            }
            Expr::Neg(a) => go(a, m, n)?.into_iter().map(|(c, w)| (-c, w)).collect(),
            Expr::Mul(a, b) => {
                let (l, r) = (go(a, m, n)?, go(b, m, n)?);
                let mut v = Vec::new();
                for (c1, w1) in &l {
                    for (c2, w2) in &r {
                        let mut w = w1.clone();
                        w.extend(w2.iter().cloned());
                        v.push((c1 * c2, w));
                    }
                }
                v
            }
            Expr::Pow(a, k) => {
                let base = go(a, m, n)?;
                let mut acc = vec![(LaurentPoly::one(), vec![])];
                for _ in 0..*k {
                    let mut next = Vec::new();
                    for (c1, w1) in &acc {
                        for (c2, w2) in &base {
                            let mut w: Vec<IndexSet> = w1.clone();
                            w.extend(w2.iter().cloned());
                            next.push((c1 * c2, w));
                        }
                    }
                    acc = next;
                }
                acc
            }
        })
    }
    go(&parse(text)?, m, n)
}
