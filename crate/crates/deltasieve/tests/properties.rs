use deltasieve::equilibrium::{equilibrium_table, gec_growth, Compare};
use deltasieve::factor::{factor_zone0, neighbor_ranges, quadratic_factor};
use deltasieve::series::{decks_for, exact_sqrt, generate};
use deltasieve::steady::{first_p_at_ssv, Registry};
use deltasieve::trapdoor::{decode_message, decrypt_integer, encode_message, encrypt_integer, public_state, Codec, KeyFile, TrapdoorParams};
use deltasieve::{int, DeckId, DialPair, Int, Limit, Parity, SeriesSpec};
use num_traits::Signed;
use proptest::prelude::*;

fn dials() -> impl Strategy<Value = DialPair> {
    (-3i64..=3, -3i64..=3, 1i64..=40).prop_map(|(a1, a2, v)| DialPair::new(a1, a2, v, v))
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Odd), Just(Parity::Even)]
}

fn even_delta(max: i64) -> impl Strategy<Value = i64> {
    (2i64..=max / 2).prop_map(|k| 2 * k)
}

proptest! {
    #[test]
    fn od6_matches_radical(n in 1u64..u64::MAX / 4, d in dials()) {
        let n = Int::from(n);
        let (r, _, od) = decks_for(&n, d, None).unwrap();
        let (od1, od2, od6) = (od[0].clone().unwrap(), od[1].clone().unwrap(), od[5].clone().unwrap());
        let v = Int::from(r.v);
        let radicand = &n * &v * &v + &od1 * &od2;
        prop_assert_eq!(exact_sqrt(&radicand), Some(od6.clone()));
        prop_assert_eq!(od6, (&od1 + &v * &r.d1).abs());
    }

    #[test]
    fn series_rows_are_consistent(delta in even_delta(400), par in parity(), d in dials(), rows in 2u64..40) {
        let spec = SeriesSpec::delta(delta, par, d);
        let data = generate(&spec, Limit::Rows(rows)).unwrap();
        for w in data.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            prop_assert_eq!(&b.q - &b.p, int(delta));
            prop_assert_eq!(&b.p * &b.q, b.n.clone());
            prop_assert_eq!(&b.p - &a.p, int(2));
            for deck in [DeckId::Od1, DeckId::Od2, DeckId::Od3, DeckId::Od4, DeckId::Od5] {
                prop_assert_eq!(b.df(deck).unwrap(), &(a.od(deck).unwrap() - b.od(deck).unwrap()));
            }
            let od1 = b.od(DeckId::Od1).unwrap();
            let od2 = b.od(DeckId::Od2).unwrap();
            prop_assert_eq!(b.od(DeckId::Od4).unwrap(), &(od1 + od2));
            prop_assert_eq!(b.od(DeckId::Od5).unwrap(), &(od1 + int(3) * od2));
        }
    }

    #[test]
    fn quadratic_recovers_pairs(p in 1u64..1u64 << 40, delta in 0u64..1u64 << 30) {
        let (p, d) = (Int::from(p), Int::from(delta));
        let q = &p + &d;
        let r = quadratic_factor(&(&p * &q), &d).unwrap();
        prop_assert_eq!((r.p, r.q), (p, q));
    }

    #[test]
    fn zone0_recovers_delta_past_first_p(delta in even_delta(500), extra in 0u64..200) {
        let dials = if delta % 4 == 0 { DialPair::ZERO_NEG } else { DialPair::NEG_ZERO };
        let p = first_p_at_ssv(&int(delta), dials, Parity::Odd).unwrap() + int(2 * extra as i64);
        let n = &p * (&p + delta);
        let r = factor_zone0(&n, &Registry::standard()).unwrap();
        prop_assert_eq!(r.steps, 4);
        prop_assert_eq!(&r.p * &r.q, n);
    }

    #[test]
    fn neighbour_ranges_hold_adjacent_composites(delta in even_delta(200), k in 0u64..300) {
        let dials = if delta % 4 == 0 { DialPair::ZERO_NEG } else { DialPair::NEG_ZERO };
        let p0 = first_p_at_ssv(&int(delta), dials, Parity::Odd).unwrap();
        let p = p0 + int(2 * k as i64 + 2);
        let n = &p * (&p + delta);
        let ranges = neighbor_ranges(&n, dials).unwrap();
        let prev = (&p - 2) * (&p - 2 + delta);
        let next = (&p + 2) * (&p + 2 + delta);
        prop_assert!(ranges[0].contains(&prev), "prev {} not in [{}, {}]", prev, ranges[0].lo, ranges[0].hi);
        prop_assert!(ranges[1].contains(&next), "next {} not in [{}, {}]", next, ranges[1].lo, ranges[1].hi);
    }

    #[test]
    fn codec_round_trip(bytes in proptest::collection::vec(10u8..=99, 1..24)) {
        let v = encode_message(&bytes, Codec::TwoDigit).unwrap();
        prop_assert_eq!(decode_message(&v, Codec::TwoDigit).unwrap(), bytes);
    }

    #[test]
    fn wide_codec_round_trip(bytes in proptest::collection::vec(any::<u8>(), 1..24)) {
        let v = encode_message(&bytes, Codec::Wide).unwrap();
        prop_assert_eq!(decode_message(&v, Codec::Wide).unwrap(), bytes);
    }

    #[test]
    fn trapdoor_round_trip(k in 100i64..20_000, offset in 0u64..1_000_000) {
        let params = TrapdoorParams::new(int(2 * k)).unwrap();
        let st = public_state(&params).unwrap();
        let p = int(1) + int(2) * (Int::from(offset) % ((&st.p_ssv - 1) / 2));
        let (c, key, _) = encrypt_integer(&p, &params).unwrap();
        prop_assert_eq!(decrypt_integer(&c, &key, &params).unwrap(), p);
    }

    #[test]
    fn key_file_round_trip(d in 1i64.., c in any::<i64>(), p in any::<i64>()) {
        let k = KeyFile { delta: int(d), ciphertext: int(c), private: int(p) };
        prop_assert_eq!(k.to_string().parse::<KeyFile>().unwrap(), k);
    }

    #[test]
    fn gec_plus_nce_is_total(start in (5i64..=45).prop_map(|k| 4 * k), steps in 1i64..6, par in parity()) {
        for mode in [Compare::Prefix, Compare::Positional, Compare::Multiset] {
            for s in gec_growth(&int(start), &int(start + 4 * steps), par, mode).unwrap() {
                prop_assert_eq!(s.gec + s.nce, s.total);
                prop_assert_eq!(s.residue, s.total as i64 - 2 * s.gec as i64);
            }
        }
    }

    #[test]
    fn constants_repeat_twenty_apart(k in 10i64..=60, par in parity()) {
        let d = 2 * k;
        let len = (d / 4) as usize;
        let a = equilibrium_table(&int(d), par, Some(len)).unwrap();
        let b = equilibrium_table(&int(d + 20), par, Some(len)).unwrap();
        let ca: Vec<Int> = a.iter().map(|r| r.constant.clone()).collect();
        let cb: Vec<Int> = b.iter().map(|r| r.constant.clone()).collect();
        prop_assert_eq!(ca, cb);
    }
}
