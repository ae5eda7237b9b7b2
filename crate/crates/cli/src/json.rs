//! Exact values as JSON records. Integers that do not fit in `i64` become
//! decimal strings; floats are advisory companions only.

use fricke_core::{
    Cusp, FactorKind, FixedLocus, FreeProductPresentation, FrickeElement, HPoint, LatticeIsometry,
    MukaiVector, QuadSurd, Rational,
};
use serde_json::{json, Value};

pub fn int(x: i128) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

pub fn rational(q: &Rational) -> Value {
    json!({ "num": int(*q.numer()), "den": int(*q.denom()) })
}

/// `a + b sqrt(radicand)` for real surds. For a negative radicand the float
/// is the imaginary part `b sqrt(|radicand|)`.
pub fn surd(z: &QuadSurd) -> Value {
    json!({
        "a": rational(&z.rational_part()),
        "b": rational(&z.coeff()),
        "radicand": z.radicand(),
        "approx": surd_approx(z),
    })
}

pub fn surd_approx(z: &QuadSurd) -> f64 {
    let root = (z.radicand().unsigned_abs() as f64).sqrt() * to_f64(&z.coeff());
    if z.radicand() < 0 {
        root
    } else {
        to_f64(&z.rational_part()) + root
    }
}

pub fn cusp(c: &Cusp) -> Value {
    match c {
        Cusp::Infinity => json!("infinity"),
        Cusp::Finite(q) => rational(q),
    }
}

pub fn cusp_approx(c: &Cusp) -> Value {
    match c {
        Cusp::Infinity => json!("infinity"),
        Cusp::Finite(q) => json!(to_f64(q)),
    }
}

/// Interior points as `re + im i`, with `im = im_coeff * sqrt(im_radicand)`.
pub fn point(p: &HPoint) -> Value {
    match p {
        HPoint::Cusp(c) => json!({ "cusp": cusp(c) }),
        HPoint::Interior { re, im_coeff, im_radicand } => {
            let im = QuadSurd::new(Rational::from_integer(0), *im_coeff, *im_radicand as i64);
            json!({ "re": rational(re), "im": surd(&im) })
        }
    }
}

pub fn point_approx(p: &HPoint) -> Value {
    match p {
        HPoint::Cusp(c) => cusp_approx(c),
        HPoint::Interior { re, im_coeff, im_radicand } => json!({
            "re": to_f64(re),
            "im": to_f64(im_coeff) * (*im_radicand as f64).sqrt(),
        }),
    }
}

pub fn fixed_locus(f: &FixedLocus) -> Value {
    match f {
        FixedLocus::Point(p) => json!({ "point": point(p) }),
        FixedLocus::BoundaryPair(a, b) => json!({ "boundary_pair": [surd(a), surd(b)] }),
    }
}

pub fn vector(v: &MukaiVector) -> Value {
    json!(v.coords())
}

pub fn matrix(m: &[[i128; 3]; 3]) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(|x| int(*x)).collect())).collect())
}

pub fn isometry(m: &LatticeIsometry) -> Value {
    json!({ "matrix": matrix(m.matrix()), "det": int(m.det()) })
}

pub fn element(g: &FrickeElement) -> Value {
    let [p, q, r, s] = g.entries();
    json!({
        "level": g.level(),
        "matrix": [[p, q], [r, s]],
        "det": g.det(),
        "fricke_coset": g.in_fricke_coset(),
    })
}

pub fn presentation(p: &FreeProductPresentation) -> Value {
    let factors: Vec<Value> = p
        .factors
        .iter()
        .map(|(kind, mult): &(FactorKind, u64)| json!({ "kind": kind.as_str(), "mult": mult }))
        .collect();
    json!({
        "factors": factors,
        "display": p.to_string(),
        "quotient_by_iota_shift": p.quotient_by_iota_shift,
        "has_torsion": p.has_torsion(),
    })
}
