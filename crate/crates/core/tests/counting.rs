use fricke_core::{
    count_involution_classes, count_subgroups_mod2, factorize, fricke_invariants,
    gamma0_invariants, has_associated_cubic, hassett_conditions, presentation, FactorKind,
    FiniteShape, PresentationKind,
};

/// The piecewise count, written from the prime factorization alone.
fn piecewise_count(n: u64, q: u64, modulus: u64) -> u64 {
    let f = factorize(n).unwrap();
    if f.exponent_of(q) >= 2 || f.primes().any(|p| p != q && p % modulus != 1) {
        return 0;
    }
    let a = f.primes().filter(|&p| p != q).count() as u32;
    if a == 0 { 0 } else { 2u64.pow(a - 1) }
}

#[test]
fn counts_equal_halved_elliptic_numbers() {
    for n in 5..=1000 {
        let t = gamma0_invariants(n).unwrap();
        assert_eq!(count_involution_classes(2 * n).unwrap() * 2, t.nu2, "n = {n}");
        let c = count_subgroups_mod2(2 * n).unwrap();
        assert_eq!(c.z3_mod2_classes * 2, t.nu3, "n = {n}");
        assert_eq!(c.z2_mod2_classes, c.involution_classes);
        assert_eq!(c.involution_classes, piecewise_count(n, 2, 4), "n = {n}");
        assert_eq!(c.z3_mod2_classes, piecewise_count(n, 3, 3), "n = {n}");
    }
}

#[test]
fn small_degrees() {
    let c1 = count_subgroups_mod2(2).unwrap();
    assert_eq!((c1.involution_classes, c1.z2_mod2_classes, c1.z3_mod2_classes), (1, 1, 1));
    let c2 = count_subgroups_mod2(4).unwrap();
    assert_eq!((c2.involution_classes, c2.z2_mod2_classes, c2.z3_mod2_classes), (1, 1, 0));
    for d in [6, 8] {
        let c = count_subgroups_mod2(d).unwrap();
        assert_eq!((c.involution_classes, c.z2_mod2_classes, c.z3_mod2_classes), (0, 0, 0));
        assert_eq!(c.maximal_shapes, [FiniteShape::Trivial]);
    }
    assert_eq!(count_subgroups_mod2(42).unwrap().z3_mod2_classes, 1);
}

#[test]
fn presentation_bookkeeping() {
    for n in 5..=500 {
        let t = fricke_invariants(n).unwrap();
        let orb = presentation(n, PresentationKind::Pi1OrbQ0).unwrap();
        let fricke = presentation(n, PresentationKind::FrickeGroup).unwrap();
        let auts = presentation(n, PresentationKind::AutsMod2).unwrap();
        assert_eq!(orb.multiplicity(FactorKind::Ring), t.minus_two_points.count() as u64);

        // Z̊ -> Z2 and Ž -> Z turns π_1^orb(Q_0^+) into Γ_0^+(n)
        let z2 = orb.multiplicity(FactorKind::Z2) + orb.multiplicity(FactorKind::Ring);
        let plain = orb.multiplicity(FactorKind::Plain) + orb.multiplicity(FactorKind::Check);
        assert_eq!(fricke.multiplicity(FactorKind::Z2), z2, "n = {n}");
        assert_eq!(fricke.multiplicity(FactorKind::Plain), plain, "n = {n}");
        assert_eq!(fricke.multiplicity(FactorKind::Z3), orb.multiplicity(FactorKind::Z3));
        let g = t.gamma0.genus;
        assert_eq!(plain + t.xi / 2, g + t.gamma0.nu_inf / 2);

        // Z̊ -> Z and Ž -> Z gives the symplectic autoequivalences
        let loops = orb.multiplicity(FactorKind::Ring) + plain;
        assert_eq!(auts.multiplicity(FactorKind::Plain), loops, "n = {n}");
        assert_eq!(auts.multiplicity(FactorKind::Z2), orb.multiplicity(FactorKind::Z2));

        let counts = count_subgroups_mod2(2 * n).unwrap();
        let nontrivial = counts.maximal_shapes != [FiniteShape::Trivial];
        assert_eq!(auts.has_torsion(), nontrivial, "n = {n}");
        assert_eq!(auts.multiplicity(FactorKind::Z2), counts.z2_mod2_classes);
        assert_eq!(auts.multiplicity(FactorKind::Z3), counts.z3_mod2_classes);
    }
}

#[test]
fn presentations_at_small_levels() {
    use FactorKind::*;
    let table = [
        (PresentationKind::Pi1OrbQ0, vec![vec![(Ring, 1), (Z3, 1)], vec![(Ring, 1), (Z4, 1)], vec![(Ring, 2)], vec![(Ring, 1), (Check, 1)]]),
        (PresentationKind::FrickeGroup, vec![vec![(Z2, 1), (Z3, 1)], vec![(Z2, 1), (Z4, 1)], vec![(Z2, 1), (Z6, 1)], vec![(Z2, 1), (Plain, 1)]]),
        (PresentationKind::AutsMod2, vec![vec![(Plain, 1), (Z3, 1)], vec![(Plain, 1), (Z4, 1)], vec![(Plain, 2)], vec![(Plain, 2)]]),
    ];
    for (kind, rows) in table {
        for (i, row) in rows.into_iter().enumerate() {
            let n = i as u64 + 1;
            let p = presentation(n, kind).unwrap();
            assert_eq!(p.factors, row, "{kind:?} at n = {n}");
            assert_eq!(p.quotient_by_iota_shift, kind == PresentationKind::AutsMod2 && n == 1);
        }
    }
    assert!(presentation(1, PresentationKind::AutsMod2).unwrap().has_torsion());
    assert!(!presentation(3, PresentationKind::AutsMod2).unwrap().has_torsion());
}

#[test]
fn cubic_equivalence_sweep() {
    for n in 7..=1000 {
        let nu3 = gamma0_invariants(n).unwrap().nu3;
        let h = hassett_conditions(2 * n).unwrap();
        assert_eq!(nu3 > 0, h.nonempty && h.has_k3, "n = {n}");
        let v = has_associated_cubic(2 * n).unwrap();
        assert_eq!(v.has_associated_cubic, nu3 > 0);
        assert_eq!(v.has_associated_cubic, count_subgroups_mod2(2 * n).unwrap().z3_mod2_classes > 0);
        if v.has_associated_cubic {
            assert!(presentation(n, PresentationKind::AutsMod2).unwrap().multiplicity(FactorKind::Z3) > 0);
            assert!(presentation(n, PresentationKind::Pi1OrbQ0).unwrap().multiplicity(FactorKind::Z3) > 0);
        }
    }
    for n in 2..=6 {
        assert!(!has_associated_cubic(2 * n).unwrap().has_associated_cubic, "n = {n}");
        assert_eq!(count_subgroups_mod2(2 * n).unwrap().z3_mod2_classes, 0, "n = {n}");
    }
}

/// Hassett's conditions restated on residues: `d ≡ 0, 2 (mod 6)`, `d >= 8`,
/// and the odd part of `d / gcd(d, 2)` built from primes `≡ 1 (mod 3)` times
/// at most one 3.
#[test]
fn hassett_against_residue_description() {
    for d in 1..=3000u64 {
        let h = hassett_conditions(d).unwrap();
        assert_eq!(h.nonempty, d >= 8 && (d % 6 == 0 || d % 6 == 2), "d = {d}");
        let f = factorize(d).unwrap();
        let expected = f.exponent_of(2) <= 1
            && f.exponent_of(3) <= 1
            && f.primes().all(|p| p <= 3 || p % 3 == 1);
        assert_eq!(h.has_k3, expected, "d = {d}");
    }
}
