use proptest::prelude::*;

use sepwords::constructions::{encode, Side};
use sepwords::sep::{no_separator_up_to, SepCertificate};
use sepwords::{exact_sep, BoolOp, Dfa, SearchBudget, Word};

fn word(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 0..=max_len).prop_map(move |s| Word::new(s, k).unwrap())
}

fn dfa(k: u8, max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |n| {
        (
            prop::collection::vec(0..n as u32, n * k as usize),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(table, accepting)| Dfa::new(k, table, accepting).unwrap())
    })
}

fn relabel(d: &Dfa, perm: &[usize]) -> Dfa {
    // perm[0] stays 0 so the start state is preserved
    let n = d.state_count();
    let k = d.alphabet_size() as usize;
    let mut table = vec![0u32; n * k];
    let mut accepting = vec![false; n];
    for q in 0..n {
        for a in 0..k {
            table[perm[q] * k + a] = perm[d.step(q, a as u8)] as u32;
        }
        accepting[perm[q]] = d.is_accepting(q);
    }
    Dfa::new(k as u8, table, accepting).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn run_is_a_monoid_action(d in dfa(3, 6), w in word(3, 8), x in word(3, 8)) {
        let q = d.run(0, &w).unwrap();
        prop_assert_eq!(d.run(0, &w.concat(&x)).unwrap(), d.run(q, &x).unwrap());
        prop_assert_eq!(d.run(q, &Word::empty(3)).unwrap(), q);
    }

    #[test]
    fn minimize_is_canonical(d in dfa(2, 6), seed in any::<u64>()) {
        let n = d.state_count();
        let mut rest: Vec<usize> = (1..n).collect();
        let mut s = seed;
        for i in (1..rest.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            rest.swap(i, (s >> 33) as usize % (i + 1));
        }
        let perm: Vec<usize> = std::iter::once(0).chain(rest).collect();
        let m = d.minimize();
        prop_assert_eq!(&relabel(&d, &perm).minimize(), &m);
        prop_assert_eq!(&m.minimize(), &m);
        prop_assert!(m.equivalent(&d).unwrap());
    }

    #[test]
    fn reverse_is_an_involution(d in dfa(2, 5), w in word(2, 10)) {
        let r = d.reverse();
        prop_assert_eq!(r.accepts(&w.reversed()).unwrap(), d.accepts(&w).unwrap());
        prop_assert!(r.reverse().equivalent(&d).unwrap());
    }

    #[test]
    fn boolean_combinations(a in dfa(3, 4), b in dfa(3, 4), w in word(3, 8)) {
        let (x, y) = (a.accepts(&w).unwrap(), b.accepts(&w).unwrap());
        for (op, expect) in [
            (BoolOp::And, x && y),
            (BoolOp::Or, x || y),
            (BoolOp::AndNot, x && !y),
            (BoolOp::Xor, x != y),
        ] {
            let c = a.combine(&b, op).unwrap();
            prop_assert!(c.state_count() <= a.state_count() * b.state_count());
            prop_assert_eq!(c.accepts(&w).unwrap(), expect);
        }
        prop_assert!(a.combine(&a, BoolOp::AndNot).unwrap().is_empty());
        prop_assert!(a.combine(&a, BoolOp::And).unwrap().equivalent(&a).unwrap());
    }

    #[test]
    fn text_format_round_trips(d in dfa(3, 6)) {
        prop_assert_eq!(Dfa::parse_text(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn encoding_is_a_homomorphism(u in word(3, 8), v in word(3, 8)) {
        for side in [Side::Left, Side::Right] {
            prop_assert_eq!(encode(&u.concat(&v), side), encode(&u, side).concat(&encode(&v, side)));
        }
        prop_assert_eq!(encode(&u, Side::Right).reversed(), encode(&u.reversed(), Side::Left));
    }

    #[test]
    fn image_never_grows(d in dfa(3, 6), w in word(3, 6), x in word(3, 6)) {
        let all = d.all_states();
        let a = d.image_under_word(&all, &w).unwrap();
        let b = d.image_under_word(&all, &w.concat(&x)).unwrap();
        prop_assert!(b.len() <= a.len());
        prop_assert!(a.len() <= all.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn exact_sep_agrees_with_no_separator(w in word(2, 6), x in word(2, 6)) {
        prop_assume!(w != x);
        let cert = exact_sep(&w, &x, &SearchBudget::default()).unwrap();
        let v = cert.value().unwrap();
        prop_assert!(sepwords::sep::check_separates(&cert.witness, &w, &x));
        prop_assert_eq!(cert.witness.state_count(), v);
        prop_assert!(no_separator_up_to(&w, &x, v - 1));
        prop_assert!(!no_separator_up_to(&w, &x, v));
    }

    #[test]
    fn certificates_are_deterministic_and_round_trip(w in word(3, 5), x in word(3, 5)) {
        prop_assume!(w != x);
        let budget = SearchBudget::default();
        let mut a = exact_sep(&w, &x, &budget).unwrap();
        let mut b = exact_sep(&w, &x, &budget).unwrap();
        a.millis = 0;
        b.millis = 0;
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(SepCertificate::from_json(&a.to_json()).unwrap(), a);
    }
}
