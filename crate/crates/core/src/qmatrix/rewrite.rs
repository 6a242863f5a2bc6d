use std::collections::BTreeMap;

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::qmatrix::{Ambient, Generator, NCPoly, Word};

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Coefficient attached to one term of a rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RuleCoeff {
    One,
    QInv,
    /// `-(q - q^-1)`
    MinusQMinusQInv,
}

impl RuleCoeff {
    fn value(self) -> LaurentPoly {
        match self {
            RuleCoeff::One => LaurentPoly::one(),
            RuleCoeff::QInv => LaurentPoly::q_pow(-1),
            RuleCoeff::MinusQMinusQInv => -LaurentPoly::q_minus_q_inv(),
        }
    }
}

/// The rewrite of `g h` with `g > h`, as at most two `(coeff, a, b)` terms.
fn rule(amb: Ambient, g: u16, h: u16) -> ([(RuleCoeff, u16, u16); 2], usize) {
    let gg = amb.unflat(g);
    let hh = amb.unflat(h);
    if gg.row == hh.row || gg.col == hh.col {
        // x_{il} x_{ij} = q^-1 x_{ij} x_{il}  (and the column analogue)
        ([(RuleCoeff::QInv, h, g), (RuleCoeff::One, 0, 0)], 1)
    } else if gg.col < hh.col {
        // x_{ij} x_{kl} = x_{kl} x_{ij}, k < i, j < l
        ([(RuleCoeff::One, h, g), (RuleCoeff::One, 0, 0)], 1)
    } else {
        // x_{kl} x_{ij} = x_{ij} x_{kl} - (q - q^-1) x_{il} x_{kj}, i < k, j < l
        let il = amb.flat(Generator::new(hh.row, gg.col));
        let kj = amb.flat(Generator::new(gg.row, hh.col));
        (
            [(RuleCoeff::One, h, g), (RuleCoeff::MinusQMinusQInv, il, kj)],
            2,
        )
    }
}

/// Rewrite the out-of-order word `g h` into normal-ordered terms.
pub fn rewrite_pair(amb: Ambient, g: Generator, h: Generator) -> Result<NCPoly> {
    for x in [g, h] {
        if !amb.contains(x) {
            return Err(Error::Ambient(format!("{x} outside {amb}")));
        }
    }
    if g <= h {
        return Err(Error::InOrder);
    }
    let (terms, len) = rule(amb, amb.flat(g), amb.flat(h));
    let mut out = NCPoly::zero(amb);
    for &(c, a, b) in &terms[..len] {
        out.add_term(Word(vec![a, b]), &c.value());
    }
    Ok(out)
}

fn find_inversion(w: &[u16], strategy: Strategy) -> Option<usize> {
    let mut it = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
    match strategy {
        Strategy::Leftmost => it.next(),
        Strategy::Rightmost => it.next_back(),
    }
}

/// Normal form of a linear combination of arbitrary words, rewriting the
/// leftmost out-of-order pair first.
pub fn normal_form<I>(amb: Ambient, terms: I) -> NCPoly
where
    I: IntoIterator<Item = (Word, LaurentPoly)>,
{
    normal_form_with(amb, terms, Strategy::Leftmost)
}

/// Normal form with an explicit choice of which inversion to rewrite.
pub fn normal_form_with<I>(amb: Ambient, terms: I, strategy: Strategy) -> NCPoly
where
    I: IntoIterator<Item = (Word, LaurentPoly)>,
{
    let rules = RuleTable::new(amb);
    let mut done = NCPoly::zero(amb);
    let mut pending: BTreeMap<Vec<u16>, LaurentPoly> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<Vec<u16>, LaurentPoly>,
                done: &mut NCPoly,
                w: Vec<u16>,
                c: LaurentPoly| {
        if c.is_zero() {
            return;
        }
        if Word(w.clone()).is_normal() {
            done.add_term(Word(w), &c);
        } else {
            let e = pending.entry(w).or_default();
            *e += &c;
        }
    };
    for (w, c) in terms {
        push(&mut pending, &mut done, w.0, c);
    }
    // largest word first, so equal words merge before being expanded again
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let i = find_inversion(&w, strategy).expect("pending words are not normal");
        let (ts, len) = rules.get(w[i], w[i + 1]);
        for (rc, a, b) in &ts[..len] {
            let mut nw = w.clone();
            nw[i] = *a;
            nw[i + 1] = *b;
            let coeff = match rc {
                RuleCoeff::One => c.clone(),
                other => &c * &rules.coeff(*other),
            };
            push(&mut pending, &mut done, nw, coeff);
        }
    }
    done
}

struct RuleTable {
    amb: Ambient,
    q_inv: LaurentPoly,
    diag: LaurentPoly,
}

impl RuleTable {
    fn new(amb: Ambient) -> Self {
        RuleTable {
            amb,
            q_inv: RuleCoeff::QInv.value(),
            diag: RuleCoeff::MinusQMinusQInv.value(),
        }
    }

    fn get(&self, g: u16, h: u16) -> ([(RuleCoeff, u16, u16); 2], usize) {
        rule(self.amb, g, h)
    }

    fn coeff(&self, c: RuleCoeff) -> LaurentPoly {
        match c {
            RuleCoeff::One => LaurentPoly::one(),
            RuleCoeff::QInv => self.q_inv.clone(),
            RuleCoeff::MinusQMinusQInv => self.diag.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(r: usize, c: usize) -> Generator {
        Generator::new(r, c)
    }

    fn amb(m: usize, n: usize) -> Ambient {
        Ambient::new(m, n).unwrap()
    }

    fn word(a: Ambient, gs: &[(usize, usize)]) -> Word {
        let gens: Vec<Generator> = gs.iter().map(|&(r, c)| x(r, c)).collect();
        Word::from_generators(a, &gens).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn same_row_rule() {
        let a = amb(2, 2);
        let p = rewrite_pair(a, x(1, 2), x(1, 1)).unwrap();
        assert_eq!(p.to_string(), "q^-1*x[1,1]x[1,2]");
    }

    #[test]
    fn diagonal_rule() {
        let a = amb(2, 2);
        let p = rewrite_pair(a, x(2, 2), x(1, 1)).unwrap();
        let expected = NCPoly::from_terms(
            a,
            [
                (word(a, &[(1, 1), (2, 2)]), LaurentPoly::one()),
                (word(a, &[(1, 2), (2, 1)]), -LaurentPoly::q_minus_q_inv()),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn antidiagonal_rule() {
        let a = amb(2, 2);
        let p = rewrite_pair(a, x(2, 1), x(1, 2)).unwrap();
        assert_eq!(p.to_string(), "x[1,2]x[2,1]");
    }

    #[test]
    fn same_column_rule() {
        let a = amb(2, 2);
        let p = rewrite_pair(a, x(2, 1), x(1, 1)).unwrap();
        assert_eq!(p.to_string(), "q^-1*x[1,1]x[2,1]");
    }

    #[test]
    fn in_order_pairs_are_rejected() {
        let a = amb(2, 2);
        assert_eq!(rewrite_pair(a, x(1, 1), x(1, 2)), Err(Error::InOrder));
        assert_eq!(rewrite_pair(a, x(1, 1), x(1, 1)), Err(Error::InOrder));
        assert!(matches!(
            rewrite_pair(a, x(3, 1), x(1, 1)),
            Err(Error::Ambient(_))
        ));
    }

    #[test]
    fn normal_words_are_fixed_points() {
        let a = amb(2, 2);
        let w = word(a, &[(1, 1), (1, 2)]);
        let p = normal_form(a, [(w.clone(), LaurentPoly::one())]);
        assert_eq!(p, NCPoly::from_terms(a, [(w, LaurentPoly::one())]));
    }

    #[test]
    fn commuting_generators_cancel() {
        let a = amb(2, 2);
        let p = normal_form(
            a,
            [
                (word(a, &[(1, 2), (2, 1)]), LaurentPoly::one()),
                (word(a, &[(2, 1), (1, 2)]), -LaurentPoly::one()),
            ],
        );
        assert!(p.is_zero());
    }

    /// Exhaustive single-step rewriting: every way of choosing an inversion,
    /// explored breadth-first until only normal words remain.
    fn brute_force(a: Ambient, start: Word) -> NCPoly {
        let mut frontier: Vec<(Vec<u16>, LaurentPoly)> = vec![(start.0, LaurentPoly::one())];
        let mut out = NCPoly::zero(a);
        let mut step = 0usize;
        while let Some((w, c)) = frontier.pop() {
            let inversions: Vec<usize> = (0..w.len() - 1).filter(|&i| w[i] > w[i + 1]).collect();
            if inversions.is_empty() {
                out.add_term(Word(w), &c);
                continue;
            }
            // rotate the choice of inversion so every position gets exercised
            let i = inversions[step % inversions.len()];
            step += 1;
            let g = a.unflat(w[i]);
            let h = a.unflat(w[i + 1]);
            let r = rewrite_pair(a, g, h).unwrap();
            for (pw, pc) in r.terms() {
                let mut nw = w.clone();
                nw[i] = pw.0[0];
                nw[i + 1] = pw.0[1];
                frontier.push((nw, &c * pc));
            }
        }
        out
    }

    #[test]
    fn three_letter_word_matches_brute_force() {
        let a = amb(2, 2);
        let w = word(a, &[(2, 1), (1, 1), (1, 2)]);
        let nf = normal_form(a, [(w.clone(), LaurentPoly::one())]);
        assert_eq!(nf, brute_force(a, w.clone()));
        // same-column swap gives q^-1, then x21 x12 commute
        let lead = word(a, &[(1, 1), (1, 2), (2, 1)]);
        assert_eq!(nf.coeff(&lead), lp("q^-1"));
        assert_eq!(nf.len(), 1);
        let mut w2 = w.0.clone();
        w2.reverse();
        let rev = Word(w2);
        assert_eq!(
            normal_form(a, [(rev.clone(), LaurentPoly::one())]),
            brute_force(a, rev)
        );
    }

    #[test]
    fn strategies_agree_on_long_word() {
        let a = amb(2, 3);
        let w = word(a, &[(2, 3), (2, 2), (1, 3), (2, 1), (1, 2), (1, 1)]);
        let l = normal_form_with(a, [(w.clone(), LaurentPoly::one())], Strategy::Leftmost);
        let r = normal_form_with(a, [(w.clone(), LaurentPoly::one())], Strategy::Rightmost);
        assert_eq!(l, r);
        assert_eq!(l, brute_force(a, w));
    }
}
