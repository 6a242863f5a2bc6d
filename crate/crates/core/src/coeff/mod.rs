//! Coefficient arithmetic: `Z[q, q^-1]`, its fraction field, and exact
//! linear solving over that field.

mod laurent;
pub mod linalg;
mod rational;

pub use laurent::LaurentPoly;
pub use linalg::{rf_solve, Echelon, SolveError};
pub use rational::RationalFunction;

/// `(-q)^e`.
pub fn neg_q_pow(e: i32) -> LaurentPoly {
    LaurentPoly::neg_q_pow(e)
}

#[cfg(test)]
mod proptests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        })
    }

    fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
        small_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn rendering_round_trips(a in small_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
            let x = &a * &c;
            let y = &b * &c;
            let g = x.gcd(&y);
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.normalize_unit()).is_some());
        }

        #[test]
        fn solve_reproduces_rhs(
            entries in proptest::collection::vec(small_poly(), 9),
            xs in proptest::collection::vec(small_poly(), 3),
            den in nonzero_poly(),
        ) {
            let den_rf = RationalFunction::new(LaurentPoly::one(), den).unwrap();
            let matrix: Vec<Vec<RationalFunction>> = entries
                .chunks(3)
                .map(|r| r.iter().map(|p| &RationalFunction::from(p.clone()) * &den_rf).collect())
                .collect();
            let x: Vec<RationalFunction> = xs.into_iter().map(RationalFunction::from).collect();
            let rhs: Vec<RationalFunction> = matrix
                .iter()
                .map(|row| row.iter().zip(&x).fold(RationalFunction::zero(), |acc, (a, b)| &acc + &(a * b)))
                .collect();
            match rf_solve(&matrix, &rhs) {
                Ok(sol) => {
                    for (row, b) in matrix.iter().zip(&rhs) {
                        let lhs = row.iter().zip(&sol).fold(RationalFunction::zero(), |acc, (a, s)| &acc + &(a * s));
                        prop_assert_eq!(&lhs, b);
                    }
                    prop_assert_eq!(sol, x);
                }
                Err(e) => prop_assert_eq!(e, SolveError::NonUnique),
            }
        }
    }
}
