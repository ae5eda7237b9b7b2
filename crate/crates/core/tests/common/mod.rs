#![allow(dead_code)]

use fricke_core::{DetTag, FrickeElement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The generators `T`, `(1 0; n 1)`, `w_n` and the inverses of the first two.
pub fn generators(n: u64) -> Vec<FrickeElement> {
    let t = FrickeElement::translation(n).unwrap();
    let l = FrickeElement::lower_translation(n).unwrap();
    let w = FrickeElement::fricke_involution(n).unwrap();
    vec![t, t.inverse(), l, l.inverse(), w]
}

/// A random word of length `1..=max_len` in the generators, resampled until
/// the entries stay below `max_entry` and the word is not the identity.
pub fn random_word(rng: &mut ChaCha8Rng, n: u64, max_len: usize, max_entry: i64) -> FrickeElement {
    let gens = generators(n);
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut g = FrickeElement::identity(n).unwrap();
        for _ in 0..len {
            g = g.compose(&gens[rng.gen_range(0..gens.len())]).unwrap();
        }
        if !g.is_identity() && g.entries().iter().all(|x| x.abs() <= max_entry) {
            return g;
        }
    }
}

/// Every normalized element of `Γ_0^+(n)` whose stored entries are bounded by
/// `bound` in absolute value.
pub fn bounded_elements(n: u64, bound: i64) -> Vec<FrickeElement> {
    let ni = n as i64;
    let mut out = Vec::new();
    for tag in [DetTag::Unit, DetTag::Fricke] {
        if n == 1 && tag == DetTag::Fricke {
            continue;
        }
        let det = if tag == DetTag::Unit { 1 } else { ni };
        let step = if tag == DetTag::Unit { 1 } else { ni };
        let multiples = |k: i64| (-bound..=bound).filter(move |x| x % k == 0);
        for r in multiples(ni) {
            for p in multiples(step) {
                for s in multiples(step) {
                    let qs: Vec<i64> = if r == 0 {
                        if p * s == det { (-bound..=bound).collect() } else { vec![] }
                    } else if (p * s - det) % r == 0 {
                        vec![(p * s - det) / r]
                    } else {
                        vec![]
                    };
                    for q in qs {
                        if q.abs() > bound {
                            continue;
                        }
                        let first = [p, q, r, s].into_iter().find(|x| *x != 0).unwrap();
                        if first < 0 {
                            continue;
                        }
                        out.push(FrickeElement::new(n, p, q, r, s, tag).unwrap());
                    }
                }
            }
        }
    }
    out
}
