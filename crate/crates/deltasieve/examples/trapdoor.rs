//! Encrypt and decrypt with the equilibrium trapdoor.
//!
//! cargo run --example trapdoor -- [DELTA] [MESSAGE]

use deltasieve::trapdoor::{decrypt, encrypt, Codec, KeyFile, TrapdoorParams};
use deltasieve::Int;

fn main() -> deltasieve::Result<()> {
    let mut args = std::env::args().skip(1);
    let delta: Int = args.next().map_or_else(|| Int::from(137136), |s| s.parse().expect("integer delta"));
    let message = args.next().unwrap_or_else(|| "AUM".to_string());

    let params = TrapdoorParams::new(delta.clone())?;
    let (c, key, trace) = encrypt(message.as_bytes(), &params, Codec::TwoDigit)?;
    for (name, value) in trace.entries() {
        println!("{name:>16} = {value}");
    }

    let file = KeyFile { delta, ciphertext: c.od6.clone(), private: key.constant.clone() };
    print!("\n{file}");
    let back = decrypt(&c, &key, &params, Codec::TwoDigit)?;
    println!("decrypted: {}", String::from_utf8_lossy(&back));
    Ok(())
}
