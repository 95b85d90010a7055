use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qw22_core::algebra::{Algebra, Element, Generator, NormalWord, Word};
use qw22_core::expr::parse_element;
use qw22_core::{q_int, LaurentPoly, Rational, Vars};

fn poly(two_vars: bool) -> impl Strategy<Value = LaurentPoly> {
    let ep = if two_vars { -3i64..=3 } else { 0i64..=0 };
    prop::collection::vec((-20i64..=20, -5i64..=5, ep), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, (c, eq, ep)| {
                acc + LaurentPoly::monomial(c, eq, ep)
            })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn generator(allow_t: bool) -> impl Strategy<Value = Generator> {
    let kinds = if allow_t { 4 } else { 2 };
    (0..kinds, -4i64..=4).prop_map(|(k, n)| match k {
        0 => Generator::L(n),
        1 => Generator::W(n),
        2 => Generator::T,
        _ => Generator::TInv,
    })
}

fn word(allow_t: bool) -> impl Strategy<Value = Word> {
    prop::collection::vec(generator(allow_t), 0..4).prop_map(Word)
}

fn rpow(x: &Rational, n: i64) -> Rational {
    let base = if n < 0 { x.recip() } else { x.clone() };
    (0..n.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(true), b in poly(true), c in poly(true)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&(&b + &c)).unwrap(), &a.mul(&b).unwrap() + &a.mul(&c).unwrap());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.mul(&LaurentPoly::one()).unwrap(), a.clone());
    }

    #[test]
    fn no_zero_coefficients_stored(a in poly(true), b in poly(true)) {
        let s = a.mul(&b).unwrap() - b.clone();
        prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn eval_is_a_ring_map(a in poly(true), b in poly(true), q in rational(), p in rational()) {
        let ev = |x: &LaurentPoly| x.eval(&q, Some(&p)).unwrap();
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&a.mul(&b).unwrap()), ev(&a) * ev(&b));
    }

    #[test]
    fn poly_text_round_trips(a in poly(true)) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    /// The one-variable q-integer against its defining quotient at rational points.
    #[test]
    fn q_int_matches_quotient(n in -30i64..=30, q in rational()) {
        prop_assume!(q != Rational::one() && q != -Rational::one());
        let direct = (rpow(&q, n) - rpow(&q, -n)) / (&q - q.recip());
        prop_assert_eq!(q_int(n, Vars::One).eval(&q, None).unwrap(), direct);
    }

    #[test]
    fn two_variable_q_int_matches_quotient(n in -30i64..=30, q in rational(), p in rational()) {
        prop_assume!(q != p);
        let direct = (rpow(&q, n) - rpow(&p, n)) / (&q - &p);
        prop_assert_eq!(q_int(n, Vars::Two).eval(&q, Some(&p)).unwrap(), direct);
    }

    #[test]
    fn q_int_symmetries(n in -40i64..=40) {
        prop_assert_eq!(q_int(-n, Vars::One), -q_int(n, Vars::One));
        let one = Rational::one();
        prop_assert_eq!(q_int(n, Vars::One).eval(&one, None).unwrap(), Rational::from_integer(BigInt::from(n)));
        prop_assert_eq!(q_int(n, Vars::Two).substitute_p_inverse_q().unwrap(), q_int(n, Vars::One));
    }

    #[test]
    fn normal_forms_are_fixed_points(w in word(true)) {
        let alg = Algebra::standard();
        let x = alg.normalize(&w).unwrap();
        for (nw, c) in x.terms() {
            prop_assert!(nw.to_word().is_normal());
            let again = alg.normalize(&nw.to_word()).unwrap();
            prop_assert_eq!(again.scale(c).unwrap(), Element::term(c.clone(), nw.clone()));
        }
    }

    #[test]
    fn basis_words_are_recognized(t in -3i64..=3, ls in prop::collection::vec(-6i64..=6, 0..4)) {
        let mut ls = ls;
        ls.sort_unstable();
        let mut gens = vec![if t >= 0 { Generator::T } else { Generator::TInv }; t.unsigned_abs() as usize];
        gens.extend(ls.iter().map(|&n| Generator::L(n)));
        let nw = NormalWord::from_word(&gens).unwrap();
        prop_assert_eq!(nw.to_word(), Word(gens));
    }

    #[test]
    fn printed_elements_parse_back(w1 in word(true), w2 in word(true), c in poly(false)) {
        let alg = Algebra::standard();
        let mut x = alg.normalize(&w1).unwrap().scale(&c).unwrap();
        x = &x - &alg.normalize(&w2).unwrap();
        let back = parse_element(&x.to_string(), &alg).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn generalized_printed_elements_parse_back(w in word(false), c in poly(true)) {
        let alg = Algebra::generalized();
        let x = alg.normalize(&w).unwrap().scale(&c).unwrap();
        prop_assert_eq!(parse_element(&x.to_string(), &alg).unwrap(), x);
    }

    /// Generalized normal forms specialize to the standard ones under p = q^-1.
    #[test]
    fn generalized_specializes(w in word(false)) {
        let g = Algebra::generalized().normalize(&w).unwrap();
        let s = Algebra::standard().normalize(&w).unwrap();
        prop_assert_eq!(g.map_coeffs(|c| c.substitute_p_inverse_q()).unwrap(), s);
    }

    #[test]
    fn eval_agrees_with_coefficientwise_evaluation(w in word(true), q in rational()) {
        let x = Algebra::standard().normalize(&w).unwrap();
        let num = x.eval(&q, None).unwrap();
        for (nw, c) in x.terms() {
            prop_assert_eq!(num.coeff(nw), c.eval(&q, None).unwrap());
        }
    }
}
