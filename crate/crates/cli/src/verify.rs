//! Cross-module consistency sweeps behind `fricke verify`.

use fricke_core::{
    count_involution_classes, count_subgroups_mod2, eigen_data, elliptic_congruence_oracle,
    fricke_invariants, gamma0_invariants, has_associated_cubic, induced_isometry, DetTag,
    FrickeElement, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Default)]
struct Sweep {
    checked: u64,
    failures: Vec<String>,
}

impl Sweep {
    fn record(&mut self, outcome: Result<bool>, what: impl FnOnce() -> String) {
        self.checked += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    fn to_json(&self, name: &str) -> Value {
        json!({
            "name": name,
            "checked": self.checked,
            "failures": self.failures.len(),
            // a handful is enough to debug from
            "first_failures": self.failures.iter().take(5).collect::<Vec<_>>(),
        })
    }
}

fn oracle(n: u64) -> Result<bool> {
    let t = gamma0_invariants(n)?;
    Ok(t.nu2 == elliptic_congruence_oracle(n, 2)? && t.nu3 == elliptic_congruence_oracle(n, 3)?)
}

fn parity(n: u64) -> Result<bool> {
    let f = fricke_invariants(n)?;
    let two_gp = f.gamma0.genus as i64 + 1 - f.xi as i64 / 2;
    Ok(f.xi % 2 == 0 && two_gp >= 0 && two_gp % 2 == 0)
}

fn riemann_hurwitz(n: u64) -> Result<bool> {
    let f = fricke_invariants(n)?;
    let (g, gp, xi) = (f.gamma0.genus as i64, f.genus_plus as i64, f.xi as i64);
    Ok(2 * g - 2 == 2 * (2 * gp - 2) + xi)
}

fn counts(n: u64) -> Result<bool> {
    let t = gamma0_invariants(n)?;
    let c = count_subgroups_mod2(2 * n)?;
    Ok(2 * count_involution_classes(2 * n)? == t.nu2 && 2 * c.z3_mod2_classes == t.nu3)
}

fn cubic(n: u64) -> Result<bool> {
    let v = has_associated_cubic(2 * n)?;
    let nu3 = gamma0_invariants(n)?.nu3;
    Ok(v.has_associated_cubic == (nu3 > 0)
        && v.has_associated_cubic == (v.hassett_nonempty && v.hassett_has_k3))
}

/// A product of generators `T^±1`, `L^±1` and the Fricke involution.
fn random_word(rng: &mut ChaCha8Rng, n: u64) -> Result<FrickeElement> {
    let gens = [
        FrickeElement::translation(n)?,
        FrickeElement::translation(n)?.inverse(),
        FrickeElement::lower_translation(n)?,
        FrickeElement::lower_translation(n)?.inverse(),
        FrickeElement::fricke_involution(n)?,
    ];
    loop {
        let mut g = FrickeElement::identity(n)?;
        for _ in 0..rng.gen_range(1..=6) {
            g = g.compose(&gens[rng.gen_range(0..gens.len())])?;
        }
        if !g.is_identity() {
            return Ok(g);
        }
    }
}

fn lattice(g: &FrickeElement) -> Result<bool> {
    let m = induced_isometry(g)?;
    let e = eigen_data(&m, g)?;
    let two_n = 2 * g.level() as i128;
    Ok(m.preserves_pairing()
        && m.det() == 1
        && m.apply(&e.eigen_one_vector)? == e.eigen_one_vector
        && e.eigen_one_square == two_n * (g.trace_squared() - 4)
        && (g.level() == 1 || (g.tag() == DetTag::Fricke) == g.in_fricke_coset()))
}

/// Runs every sweep up to `max_n` and reports `(summary, total failures)`.
pub fn run(max_n: u64) -> (Value, usize) {
    let mut sweeps: Vec<(&str, Sweep)> = Vec::new();
    let mut sweep = |name, range: core::ops::RangeInclusive<u64>, f: fn(u64) -> Result<bool>| {
        let mut s = Sweep::default();
        for n in range {
            s.record(f(n), || format!("n = {n}"));
        }
        sweeps.push((name, s));
    };
    sweep("oracle_equality", 1..=max_n, oracle);
    sweep("parity", 5..=max_n, parity);
    sweep("riemann_hurwitz", 5..=max_n, riemann_hurwitz);
    sweep("count_agreement", 5..=max_n, counts);
    sweep("cubic_equivalence", 7..=max_n, cubic);

    let mut s = Sweep::default();
    let mut rng = ChaCha8Rng::seed_from_u64(max_n);
    for _ in 0..500 {
        let n = rng.gen_range(1..=max_n.clamp(1, 50));
        match random_word(&mut rng, n) {
            Ok(g) => s.record(lattice(&g), || g.to_string()),
            Err(e) => s.record(Err(e), || format!("word at n = {n}")),
        }
    }
    sweeps.push(("lattice_identities", s));

    let total: usize = sweeps.iter().map(|(_, s)| s.failures.len()).sum();
    let report = json!({
        "max_n": max_n,
        "sweeps": sweeps.iter().map(|(name, s)| s.to_json(name)).collect::<Vec<_>>(),
        "total_failures": total,
    });
    (report, total)
}
