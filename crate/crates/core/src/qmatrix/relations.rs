//! The defining relations as formal combinations of words.

use serde::{Deserialize, Serialize};

use crate::coeff::LaurentPoly;
use crate::qmatrix::{Ambient, Generator};

/// The four relation classes of `O_q(M_{m,n})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationClass {
    /// `x_ij x_il = q x_il x_ij`, `j < l`
    Row,
    /// `x_ij x_kj = q x_kj x_ij`, `i < k`
    Column,
    /// `x_il x_kj = x_kj x_il`, `i < k`, `j < l`
    AntiDiagonal,
    /// `x_ij x_kl - x_kl x_ij = (q - q^-1) x_il x_kj`, `i < k`, `j < l`
    Diagonal,
}

/// A defining relation as a formal combination that should vanish.
#[derive(Debug, Clone)]
pub struct MatrixRelation {
    pub class: RelationClass,
    pub pair: (Generator, Generator),
    pub terms: Vec<(LaurentPoly, Vec<Generator>)>,
}

/// One relation per unordered pair of distinct generators.
pub fn matrix_relations(amb: Ambient) -> Vec<MatrixRelation> {
    let x = Generator::new;
    let gens: Vec<Generator> = amb.generators().collect();
    let one = LaurentPoly::one;
    let minus = || LaurentPoly::from_int(-1);
    let mut out = Vec::new();
    for (p, &g) in gens.iter().enumerate() {
        for &h in &gens[p + 1..] {
            let (i, j, k, l) = (g.row, g.col, h.row, h.col);
            let rel = if i == k {
                MatrixRelation {
                    class: RelationClass::Row,
                    pair: (g, h),
                    terms: vec![(one(), vec![g, h]), (-LaurentPoly::q_pow(1), vec![h, g])],
                }
            } else if j == l {
                MatrixRelation {
                    class: RelationClass::Column,
                    pair: (g, h),
                    terms: vec![(one(), vec![g, h]), (-LaurentPoly::q_pow(1), vec![h, g])],
                }
            } else if j > l {
                // g = x_il', h = x_kj' with i < k and l' > j'
                MatrixRelation {
                    class: RelationClass::AntiDiagonal,
                    pair: (g, h),
                    terms: vec![(one(), vec![g, h]), (minus(), vec![h, g])],
                }
            } else {
                MatrixRelation {
                    class: RelationClass::Diagonal,
                    pair: (g, h),
                    terms: vec![
                        (one(), vec![g, h]),
                        (minus(), vec![h, g]),
                        (-LaurentPoly::q_minus_q_inv(), vec![x(i, l), x(k, j)]),
                    ],
                }
            };
            out.push(rel);
        }
    }
    out
}
