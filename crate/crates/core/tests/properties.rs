use proptest::prelude::*;

use qgrass::coeff::LaurentPoly;
use qgrass::dhom::Dhom;
use qgrass::grassmann::{all_index_sets, consecutive_minors, Grassmannian, IndexSet};
use qgrass::posets::{enumerate_standard, PosetOrder};
use qgrass::qmatrix::{
    matrix_relations, normal_form_with, Ambient, Generator, NCPoly, Strategy as Rewrite, Word,
};
use qgrass::straighten::{GrassElement, StandardBasis};

fn amb23() -> Ambient {
    Ambient::new(2, 3).unwrap()
}

fn gens(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    proptest::collection::vec(
        (1usize..=2, 1usize..=3).prop_map(|(i, j)| Generator::new(i, j)),
        0..=max_len,
    )
}

fn coeff() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-2i32..=2, -3i64..=3), 1..3).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            &acc + &LaurentPoly::from_int(c).shift(e)
        })
    })
}

fn poly() -> impl Strategy<Value = NCPoly> {
    proptest::collection::vec((coeff(), gens(3)), 0..4).prop_map(|ts| {
        let amb = amb23();
        let mut p = NCPoly::zero(amb);
        for (c, g) in ts {
            p.add_scaled(&c, &NCPoly::from_generators(amb, &g).unwrap());
        }
        p
    })
}

fn word_poly(g: &[Generator]) -> NCPoly {
    NCPoly::from_generators(amb23(), g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rewriting_is_confluent(g in gens(7)) {
        let amb = amb23();
        let w = Word::from_generators(amb, &g).unwrap();
        let left = normal_form_with(amb, [(w.clone(), LaurentPoly::one())], Rewrite::Leftmost);
        let right = normal_form_with(amb, [(w, LaurentPoly::one())], Rewrite::Rightmost);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_forms_use_normal_words(p in poly()) {
        prop_assert!(p.terms().all(|(w, _)| w.is_normal()));
    }

    #[test]
    fn relations_vanish_in_context(u in gens(3), v in gens(3), k in 0usize..15) {
        let amb = amb23();
        let rels = matrix_relations(amb);
        let rel = &rels[k % rels.len()];
        let mut r = NCPoly::zero(amb);
        for (c, w) in &rel.terms {
            r.add_scaled(c, &NCPoly::from_generators(amb, w).unwrap());
        }
        let sandwiched = word_poly(&u).nc_mul(&r).unwrap().nc_mul(&word_poly(&v)).unwrap();
        prop_assert!(sandwiched.is_zero());
    }

    #[test]
    fn multiplication_is_associative(a in poly(), b in poly(), c in poly()) {
        let left = a.nc_mul(&b).unwrap().nc_mul(&c).unwrap();
        let right = a.nc_mul(&b.nc_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        let left = a.nc_mul(&b.try_add(&c).unwrap()).unwrap();
        let right = a.nc_mul(&b).unwrap().try_add(&a.nc_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(NCPoly::parse(&text, amb23()).unwrap(), p);
    }
}

fn index_set() -> impl Strategy<Value = IndexSet> {
    let sets = all_index_sets(2, 4);
    (0..sets.len()).prop_map(move |i| sets[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn straightening_reproduces_products(word in proptest::collection::vec(index_set(), 2), s in 1usize..=4) {
        let g = Grassmannian::new(2, 4).unwrap();
        let basis = StandardBasis::new(&g, PosetOrder::cyclic(s, 2, 4).unwrap(), 2).unwrap();
        let target = g.product(&word).unwrap();
        let exp = basis.expand(&target).unwrap();
        prop_assert!(basis.reproduces(&exp, &target));
    }

    #[test]
    fn standard_monomials_expand_to_themselves(s in 1usize..=4, k in 0usize..20) {
        let g = Grassmannian::new(2, 4).unwrap();
        let ord = PosetOrder::cyclic(s, 2, 4).unwrap();
        let monos = enumerate_standard(&ord, 2).unwrap();
        let mono = &monos[k % monos.len()];
        let e = GrassElement::monomial(2, 4, mono.factors.clone()).unwrap();
        let basis = StandardBasis::new(&g, ord, 2).unwrap();
        let exp = basis.expand(&e.to_ncpoly(&g).unwrap()).unwrap();
        prop_assert_eq!(exp.terms.len(), 1);
        prop_assert_eq!(&exp.terms[0].monomial, mono);
        prop_assert!(exp.terms[0].coeff.as_laurent().is_some_and(|c| c.is_one()));
    }

    #[test]
    fn quasi_commutation_is_antisymmetric(k in 0usize..4, j in index_set()) {
        let g = Grassmannian::new(2, 4).unwrap();
        let m = consecutive_minors(2, 4).unwrap()[k].index_set();
        let c = g.quasi_commute_exponent(&m, &j).unwrap().unwrap();
        let d = g.quasi_commute_exponent(&j, &m).unwrap().unwrap();
        prop_assert_eq!(c, -d);
    }

    #[test]
    fn rho_is_multiplicative(a in 1usize..=4, u in gens(3), v in gens(3)) {
        // source of the map at (2,4) is M(2,2)
        let u: Vec<Generator> = u.into_iter().filter(|g| g.col <= 2).collect();
        let v: Vec<Generator> = v.into_iter().filter(|g| g.col <= 2).collect();
        let g = Grassmannian::new(2, 4).unwrap();
        let d = Dhom::new(&g, a).unwrap();
        let uv: Vec<Generator> = u.iter().chain(&v).copied().collect();
        let prod = d.local_mul(&d.rho_word(&u).unwrap(), &d.rho_word(&v).unwrap()).unwrap();
        prop_assert!(d.equivalent(&prod, &d.rho_word(&uv).unwrap()).unwrap());
    }
}
