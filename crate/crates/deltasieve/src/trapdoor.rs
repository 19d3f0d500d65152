//! Trapdoor cipher over the Δ⇌Σ equilibrium.
//!
//! Deterministic research artifact: equal messages give equal ciphertexts and
//! no part of the scheme claims semantic security. Key material is plain
//! integers with no zeroization.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use crate::equilibrium::sum_series_factor_pair;
use crate::error::{Error, Result};
use crate::series::{decks_for, int, row_id_of, DeckId, DialPair, Int, Parity, SeriesSpec};
use crate::steady::first_p_at_ssv;

/// Message to integer conversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Codec {
    /// Concatenated two-digit byte codes; every byte must lie in 10..=99.
    #[default]
    TwoDigit,
    /// Extension: a leading `1` then three digits per byte. Accepts any byte.
    Wide,
}

pub fn encode_message(text: &[u8], codec: Codec) -> Result<Int> {
    if text.is_empty() {
        return Err(Error::Codec("empty message".into()));
    }
    let digits = match codec {
        Codec::TwoDigit => {
            let mut s = String::with_capacity(2 * text.len());
            for &b in text {
                if !(10..=99).contains(&b) {
                    return Err(Error::Codec(format!("byte {b} is not a two-digit code")));
                }
                s.push_str(&b.to_string());
            }
            s
        }
        Codec::Wide => {
            let mut s = String::from("1");
            for &b in text {
                s.push_str(&format!("{b:03}"));
            }
            s
        }
    };
    Ok(digits.parse().expect("decimal digits"))
}

pub fn decode_message(value: &Int, codec: Codec) -> Result<Vec<u8>> {
    if !value.is_positive() {
        return Err(Error::Codec(format!("{value} does not encode a message")));
    }
    let s = value.to_string();
    let (body, width) = match codec {
        Codec::TwoDigit => (s.as_str(), 2),
        Codec::Wide => match s.strip_prefix('1') {
            Some(rest) => (rest, 3),
            None => return Err(Error::Codec("wide encoding lacks its leading 1".into())),
        },
    };
    if body.is_empty() || body.len() % width != 0 {
        return Err(Error::Codec(format!("{s} does not split into {width}-digit codes")));
    }
    body.as_bytes()
        .chunks(width)
        .map(|c| {
            let code: u32 = std::str::from_utf8(c).expect("ascii digits").parse().expect("digits");
            u8::try_from(code).map_err(|_| Error::Codec(format!("code {code} exceeds a byte")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapdoorParams {
    pub delta: Int,
    pub delta_dials: DialPair,
    pub sum_dials: DialPair,
}

impl TrapdoorParams {
    pub fn new(delta: impl Into<Int>) -> Result<Self> {
        let delta = delta.into();
        if delta.is_odd() || !delta.is_positive() {
            return Err(Error::Unsupported(format!("delta {delta} must be a positive even integer")));
        }
        let delta_dials = if delta.mod_floor(&int(4)).is_zero() { DialPair::ZERO_NEG } else { DialPair::NEG_ZERO };
        Ok(TrapdoorParams { delta, delta_dials, sum_dials: DialPair::NEG_ZERO })
    }

    fn zero_mod4(&self) -> bool {
        self.delta.mod_floor(&int(4)).is_zero()
    }
}

/// Values fixed by `delta` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicState {
    pub ssv: Int,
    pub p_ssv: Int,
    pub od6_ssv: Int,
    pub n_equil: Int,
    pub p_equil: Int,
    pub q_equil: Int,
}

pub fn public_state(params: &TrapdoorParams) -> Result<PublicState> {
    let d = &params.delta;
    let ssv: Int = d * d / 2 + 2;
    let p_ssv = first_p_at_ssv(d, params.delta_dials, Parity::Odd)?;
    let id = row_id_of(&p_ssv, Parity::Odd).ok_or_else(|| Error::Domain("p_ssv out of range".into()))?;
    let row = SeriesSpec::delta(d.clone(), Parity::Odd, params.delta_dials).row_at(id)?;
    let od6_ssv = row.od(DeckId::Od6).cloned().ok_or_else(|| Error::Domain("od6 undefined".into()))?;
    let n_equil = if params.zero_mod4() { od6_ssv.clone() } else { &od6_ssv + 1 };
    let (p_equil, q_equil) = sum_series_factor_pair(&n_equil, d)
        .ok_or_else(|| Error::Domain(format!("equilibrium N={n_equil} has no integer roots")))?;
    Ok(PublicState { ssv, p_ssv, od6_ssv, n_equil, p_equil, q_equil })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext {
    pub od6: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapdoorPrivateKey {
    pub constant: Int,
}

/// Every intermediate value of one encryption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncryptionTrace {
    pub delta: Int,
    pub ssv: Int,
    pub p_ssv: Int,
    pub od6_ssv: Int,
    pub p: Int,
    pub q: Int,
    pub n: Int,
    pub od1: Int,
    pub od2: Int,
    pub od6: Int,
    pub p_dist: Int,
    pub q_dist: Int,
    pub n_equil: Int,
    pub p_equil: Int,
    pub q_equil: Int,
    pub p_sum_series: Int,
    pub q_sum_series: Int,
    pub n_sum_series: Int,
    pub private_constant: Int,
}

impl EncryptionTrace {
    /// `(name, value)` pairs in trace order.
    pub fn entries(&self) -> Vec<(&'static str, &Int)> {
        vec![
            ("delta", &self.delta),
            ("ssv", &self.ssv),
            ("p_ssv", &self.p_ssv),
            ("od6_ssv", &self.od6_ssv),
            ("p", &self.p),
            ("q", &self.q),
            ("n", &self.n),
            ("od1", &self.od1),
            ("od2", &self.od2),
            ("od6", &self.od6),
            ("p_dist", &self.p_dist),
            ("q_dist", &self.q_dist),
            ("n_equil", &self.n_equil),
            ("p_equil", &self.p_equil),
            ("q_equil", &self.q_equil),
            ("p_sum_series", &self.p_sum_series),
            ("q_sum_series", &self.q_sum_series),
            ("n_sum_series", &self.n_sum_series),
            ("private", &self.private_constant),
        ]
    }
}

pub fn encrypt_integer(p: &Int, params: &TrapdoorParams) -> Result<(Ciphertext, TrapdoorPrivateKey, EncryptionTrace)> {
    let st = public_state(params)?;
    if p.is_even() || !p.is_positive() {
        return Err(Error::Domain(format!("encoded message {p} must be a positive odd integer")));
    }
    if p >= &st.p_ssv {
        return Err(Error::MessageTooLarge { p: p.to_string(), p_ssv: st.p_ssv.to_string() });
    }
    let d = &params.delta;
    let q = p + d;
    let n = p * &q;
    let (r, _, od) = decks_for(&n, params.delta_dials, None)?;
    let [od1, od2] = [od[0].clone().expect("od1"), od[1].clone().expect("od2")];
    let od6 = od[5].clone().ok_or_else(|| Error::Domain("od6 undefined".into()))?;
    assert_eq!(od6, (&od1 + &r.d1 * r.v).abs());
    let p_dist = &st.p_ssv - p;
    let p_sum = &st.p_equil - &p_dist;
    let q_sum = d - &p_sum;
    let q_dist = &q_sum - &st.q_equil;
    let n_sum = &p_sum * &q_sum;
    let private = &n_sum - &od6;
    assert_eq!(&private + &od6, (&st.p_equil - &p_dist) * (d - &st.p_equil + &p_dist));
    let trace = EncryptionTrace {
        delta: d.clone(),
        ssv: st.ssv,
        p_ssv: st.p_ssv,
        od6_ssv: st.od6_ssv,
        p: p.clone(),
        q,
        n,
        od1,
        od2,
        od6: od6.clone(),
        p_dist,
        q_dist,
        n_equil: st.n_equil,
        p_equil: st.p_equil,
        q_equil: st.q_equil,
        p_sum_series: p_sum,
        q_sum_series: q_sum,
        n_sum_series: n_sum,
        private_constant: private.clone(),
    };
    Ok((Ciphertext { od6 }, TrapdoorPrivateKey { constant: private }, trace))
}

pub fn encrypt(
    message: &[u8],
    params: &TrapdoorParams,
    codec: Codec,
) -> Result<(Ciphertext, TrapdoorPrivateKey, EncryptionTrace)> {
    encrypt_integer(&encode_message(message, codec)?, params)
}

pub fn decrypt_integer(c: &Ciphertext, key: &TrapdoorPrivateKey, params: &TrapdoorParams) -> Result<Int> {
    let n_sum = &c.od6 + &key.constant;
    let (_, q_sum) = sum_series_factor_pair(&n_sum, &params.delta)
        .ok_or_else(|| Error::InvalidKey(format!("x^2 - {}x + {n_sum} has no integer roots", params.delta)))?;
    let st = public_state(params)?;
    let q_dist = q_sum - &st.q_equil;
    Ok(&st.p_ssv - q_dist)
}

pub fn decrypt(c: &Ciphertext, key: &TrapdoorPrivateKey, params: &TrapdoorParams, codec: Codec) -> Result<Vec<u8>> {
    decode_message(&decrypt_integer(c, key, params)?, codec)
}

/// Line-oriented `delta=`, `ciphertext=`, `private=` record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyFile {
    pub delta: Int,
    pub ciphertext: Int,
    pub private: Int,
}

impl fmt::Display for KeyFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "delta={}", self.delta)?;
        writeln!(f, "ciphertext={}", self.ciphertext)?;
        writeln!(f, "private={}", self.private)
    }
}

impl FromStr for KeyFile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (mut delta, mut ciphertext, mut private) = (None, None, None);
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value: {line}")))?;
            let v: Int = v.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {v}")))?;
            match k.trim() {
                "delta" => delta = Some(v),
                "ciphertext" => ciphertext = Some(v),
                "private" => private = Some(v),
                other => return Err(Error::Parse(format!("unknown key {other}"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("missing {k}"));
        Ok(KeyFile {
            delta: delta.ok_or_else(|| missing("delta"))?,
            ciphertext: ciphertext.ok_or_else(|| missing("ciphertext"))?,
            private: private.ok_or_else(|| missing("private"))?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> Int {
        s.parse().unwrap()
    }

    #[test]
    fn codec() {
        assert_eq!(encode_message(b"AUM", Codec::TwoDigit).unwrap(), int(658577));
        assert_eq!(encode_message(b"A", Codec::TwoDigit).unwrap(), int(65));
        assert!(matches!(encode_message(b"Ad", Codec::TwoDigit), Err(Error::Codec(_))));
        assert_eq!(decode_message(&int(658577), Codec::TwoDigit).unwrap(), b"AUM");
        assert!(decode_message(&int(123), Codec::TwoDigit).is_err());
        let w = encode_message(b"Ad\x05", Codec::Wide).unwrap();
        assert_eq!(w, big("1065100005"));
        assert_eq!(decode_message(&w, Codec::Wide).unwrap(), b"Ad\x05");
    }

    #[test]
    fn example_one() {
        let params = TrapdoorParams::new(137136).unwrap();
        let (c, k, t) = encrypt(b"AUM", &params, Codec::TwoDigit).unwrap();
        assert_eq!(c.od6, int(168623));
        assert_eq!(k.constant, big("-5522773392982230560"));
        assert_eq!(t.ssv, big("9403141250"));
        assert_eq!(t.p_ssv, big("2350716745"));
        assert_eq!(t.od6_ssv, big("4701570623"));
        assert_eq!(t.p_dist, big("2350058168"));
        assert_eq!(t.q, int(795713));
        assert_eq!(t.n, big("524038280401"));
        assert_eq!((t.od1.clone(), t.od2.clone()), (int(-1279185), int(1616435)));
        assert_eq!((t.p_equil.clone(), t.q_equil.clone()), (int(68567), int(68569)));
        assert_eq!(t.p_sum_series, big("-2349989601"));
        assert_eq!(t.q_sum_series, big("2350126737"));
        assert_eq!(t.n_sum_series, big("-5522773392982061937"));
        assert_eq!(decrypt(&c, &k, &params, Codec::TwoDigit).unwrap(), b"AUM");
    }

    #[test]
    fn edge_cases() {
        assert!(matches!(TrapdoorParams::new(137137), Err(Error::Unsupported(_))));
        let params = TrapdoorParams::new(137136).unwrap();
        let bad = decrypt(&Ciphertext { od6: int(168623) }, &TrapdoorPrivateKey { constant: int(0) }, &params, Codec::TwoDigit);
        assert!(matches!(bad, Err(Error::InvalidKey(_))));
        let st = public_state(&params).unwrap();
        let p = &st.p_ssv - 2;
        let (c, k, t) = encrypt_integer(&p, &params).unwrap();
        assert_eq!(t.p_dist, int(2));
        assert_eq!(decrypt_integer(&c, &k, &params).unwrap(), p);
        assert!(matches!(encrypt_integer(&st.p_ssv, &params), Err(Error::MessageTooLarge { .. })));
        assert!(encrypt_integer(&int(658578), &params).is_err());
    }

    #[test]
    fn key_file_round_trip() {
        let k = KeyFile { delta: int(137136), ciphertext: int(168623), private: big("-5522773392982230560") };
        let text = k.to_string();
        assert_eq!(text, "delta=137136\nciphertext=168623\nprivate=-5522773392982230560\n");
        assert_eq!(text.parse::<KeyFile>().unwrap(), k);
        assert!("delta=1\n".parse::<KeyFile>().is_err());
    }
}
