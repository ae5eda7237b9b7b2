//! `fricke`: deterministic JSON for invariants, counts, presentations,
//! classification and cubic fourfold criteria of degree-`2n` K3 surfaces.
//!
//! Exit codes: 0 success, 2 argument error, 3 domain error, 4 internal
//! consistency failure.

mod json;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fricke_core::arith::reduced_forms;
use fricke_core::{
    class_number, classify_element, count_involution_classes, count_subgroups_mod2,
    cusp_stabilizer, det_disc, fricke_invariants, gamma0_invariants, has_associated_cubic,
    induced_isometry, involution_from_vector, presentation, reflection, DetTag, Error,
    FixedLocus, FrickeElement, MukaiVector, PolychotomyResult, PresentationKind,
};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "fricke", version, about = "Fricke group and Mukai lattice calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of X_0(n), and of X_0^+(n) with --fricke.
    Invariants {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        fricke: bool,
    },
    /// Conjugacy-class counts of finite subgroups for degree 2n.
    Count {
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum)]
        mode: CountMode,
    },
    /// Free product presentation of a group attached to level n.
    Presentation {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        group: GroupArg,
    },
    /// Dynamical type of an element of the Fricke group.
    Classify {
        #[arg(long)]
        n: u64,
        /// Entries p,q,r,s; Fricke coset elements in the integer model.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints::<4>)]
        matrix: [i64; 4],
        #[arg(long, value_enum)]
        det: DetArg,
    },
    /// Whether degree 2n has an associated cubic fourfold.
    Cubic {
        #[arg(long)]
        degree: u64,
    },
    /// Class number of a negative discriminant.
    ClassNumber {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// Reflection in a (-2)-vector, or the standard pair of isometries.
    TwistMatrix {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints::<3>)]
        delta: Option<[i64; 3]>,
    },
    /// Run the consistency sweeps up to level max-n.
    Verify {
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMode {
    Involutions,
    SubgroupsMod2,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Pi1orb,
    Fricke,
    AutsMod2,
}

#[derive(Clone, Copy, ValueEnum)]
enum DetArg {
    #[value(name = "1")]
    One,
    #[value(name = "n")]
    N,
}

fn parse_ints<const K: usize>(s: &str) -> Result<[i64; K], String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    parts.try_into().map_err(|p: Vec<i64>| format!("expected {K} comma-separated integers, got {}", p.len()))
}

enum Failure {
    Domain(Error),
    Consistency(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_consistency() {
            Failure::Consistency(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type Outcome = Result<Value, Failure>;

fn invariants(n: u64, fricke: bool) -> Outcome {
    let t = gamma0_invariants(n)?;
    let mut out = json!({
        "n": t.n,
        "mu": t.mu,
        "nu2": t.nu2,
        "nu3": t.nu3,
        "nu_inf": t.nu_inf,
        "genus": t.genus,
    });
    if fricke {
        let f = fricke_invariants(n)?;
        let extra = json!({
            "xi": f.xi,
            "nu2_plus": f.nu2_plus,
            "nu3_plus": f.nu3_plus,
            "nu4_plus": f.nu4_plus,
            "nu6_plus": f.nu6_plus,
            "nu_inf_plus": f.nu_inf_plus,
            "genus_plus": f.genus_plus,
            "ramification_points": f.ramification_points(),
            "minus_two_points": { "count": f.minus_two_points.count(), "orders": f.minus_two_points.orders },
        });
        if let (Value::Object(out), Value::Object(extra)) = (&mut out, extra) {
            out.extend(extra);
        }
    }
    Ok(out)
}

fn count(degree: u64, mode: CountMode) -> Outcome {
    Ok(match mode {
        CountMode::Involutions => json!({
            "degree": degree,
            "involution_classes": count_involution_classes(degree)?,
        }),
        CountMode::SubgroupsMod2 => {
            let c = count_subgroups_mod2(degree)?;
            json!({
                "degree": c.degree,
                "involution_classes": c.involution_classes,
                "z2_mod2_classes": c.z2_mod2_classes,
                "z3_mod2_classes": c.z3_mod2_classes,
                "maximal_shapes": c.maximal_shapes.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                "times_shift_factor": c.times_shift_factor,
            })
        }
    })
}

fn group_presentation(n: u64, group: GroupArg) -> Outcome {
    let kind = match group {
        GroupArg::Pi1orb => PresentationKind::Pi1OrbQ0,
        GroupArg::Fricke => PresentationKind::FrickeGroup,
        GroupArg::AutsMod2 => PresentationKind::AutsMod2,
    };
    let mut out = json::presentation(&presentation(n, kind)?);
    out["n"] = json!(n);
    Ok(out)
}

fn classify(n: u64, [p, q, r, s]: [i64; 4], det: DetArg) -> Outcome {
    let tag = match det {
        DetArg::One => DetTag::Unit,
        DetArg::N => DetTag::Fricke,
    };
    let g = FrickeElement::new(n, p, q, r, s, tag)?;
    let result = classify_element(&g)?;
    let (data, approx) = match &result {
        PolychotomyResult::FiniteOrder { order, fixed_point } => (
            json!({ "order": order, "fixed_point": json::point(fixed_point) }),
            json!({ "fixed_point": json::point_approx(fixed_point) }),
        ),
        PolychotomyResult::MinusTwoReducible { delta } => {
            let fixed = g.fixed_point()?;
            let FixedLocus::Point(p) = &fixed else {
                return Err(Failure::Consistency("involution without a fixed point".into()));
            };
            (
                json!({ "delta": json::vector(delta), "fixed_point": json::point(p) }),
                json!({ "fixed_point": json::point_approx(p) }),
            )
        }
        PolychotomyResult::ZeroReducible { w } => {
            let stab = cusp_stabilizer(n, w)?;
            (
                json!({
                    "w": json::vector(w),
                    "cusp": json::cusp(&stab.cusp),
                    "stabilizer_generator": json::element(&stab.generator),
                    "kernel": stab.kernel.as_str(),
                }),
                json!({ "cusp": json::cusp_approx(&stab.cusp) }),
            )
        }
        PolychotomyResult::PseudoAnosov { spectral_radius } => (
            json!({
                "spectral_radius": json::surd(spectral_radius),
                "fixed_points": json::fixed_locus(&g.fixed_point()?),
            }),
            json!({ "spectral_radius": json::surd_approx(spectral_radius) }),
        ),
        PolychotomyResult::EllipticAtMinusTwoPoint { order, delta } => {
            (json!({ "order": order, "delta": json::vector(delta) }), json!({}))
        }
    };
    let mut data = data;
    data["element"] = json::element(&g);
    data["trace_squared"] = json::int(g.trace_squared());
    data["induced_isometry"] = json::isometry(&induced_isometry(&g)?);
    if n >= 2 {
        data["det_disc"] = json!(det_disc(&g)?);
    }
    Ok(json!({ "type": result.name(), "data": data, "approx": approx }))
}

fn cubic(degree: u64) -> Outcome {
    let v = has_associated_cubic(degree)?;
    Ok(json!({
        "degree": v.degree,
        "has_associated_cubic": v.has_associated_cubic,
        "via_nu3": { "n_at_least_7": v.via_nu3.0, "nu3_positive": v.via_nu3.1 },
        "hassett_nonempty": v.hassett_nonempty,
        "hassett_has_k3": v.hassett_has_k3,
        "special_case": v.special_case.map(|c| c.as_str()),
    }))
}

fn class_number_of(disc: i64) -> Outcome {
    let forms: Vec<Value> = reduced_forms(disc)?.iter().map(|f| json!([f.a, f.b, f.c])).collect();
    Ok(json!({
        "disc": disc,
        "class_number": class_number(disc)?,
        "reduced_forms": forms,
    }))
}

fn twist_matrix(n: u64, delta: Option<[i64; 3]>) -> Outcome {
    if n == 0 {
        return Err(Error::ZeroLevel.into());
    }
    Ok(match delta {
        Some([r, d, s]) => {
            let delta = MukaiVector::new(n, r, d, s);
            let refl = reflection(&delta)?;
            let g = involution_from_vector(&delta)?;
            json!({
                "n": n,
                "delta": json::vector(&delta),
                "reflection": json::isometry(&refl),
                "involution": json::element(&g),
            })
        }
        None => {
            let tensor = induced_isometry(&FrickeElement::translation(n)?)?;
            let t_o = reflection(&MukaiVector::new(n, 1, 0, 1))?;
            json!({
                "n": n,
                "tensor_o1": json::isometry(&tensor),
                "twist_o": json::isometry(&t_o),
            })
        }
    })
}

fn input_of(command: &Command) -> (&'static str, Value) {
    let ints = |v: &[i64]| json!(v);
    match command {
        Command::Invariants { n, fricke } => ("invariants", json!({ "n": n, "fricke": fricke })),
        Command::Count { degree, mode } => {
            let mode = match mode {
                CountMode::Involutions => "involutions",
                CountMode::SubgroupsMod2 => "subgroups-mod2",
            };
            ("count", json!({ "degree": degree, "mode": mode }))
        }
        Command::Presentation { n, group } => {
            let group = match group {
                GroupArg::Pi1orb => "pi1orb",
                GroupArg::Fricke => "fricke",
                GroupArg::AutsMod2 => "auts-mod2",
            };
            ("presentation", json!({ "n": n, "group": group }))
        }
        Command::Classify { n, matrix, det } => {
            let det = match det {
                DetArg::One => "1",
                DetArg::N => "n",
            };
            ("classify", json!({ "n": n, "matrix": ints(matrix), "det": det }))
        }
        Command::Cubic { degree } => ("cubic", json!({ "degree": degree })),
        Command::ClassNumber { disc } => ("class-number", json!({ "disc": disc })),
        Command::TwistMatrix { n, delta } => {
            ("twist-matrix", json!({ "n": n, "delta": delta.as_ref().map(|d| ints(d)) }))
        }
        Command::Verify { max_n } => ("verify", json!({ "max_n": max_n })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, input) = input_of(&cli.command);
    let outcome = match cli.command {
        Command::Invariants { n, fricke } => invariants(n, fricke),
        Command::Count { degree, mode } => count(degree, mode),
        Command::Presentation { n, group } => group_presentation(n, group),
        Command::Classify { n, matrix, det } => classify(n, matrix, det),
        Command::Cubic { degree } => cubic(degree),
        Command::ClassNumber { disc } => class_number_of(disc),
        Command::TwistMatrix { n, delta } => twist_matrix(n, delta),
        Command::Verify { max_n } => {
            let (report, failures) = verify::run(max_n);
            if failures == 0 {
                Ok(report)
            } else {
                eprintln!("verify: {failures} failures");
                println!("{}", envelope(name, input, report));
                return ExitCode::from(4);
            }
        }
    };
    match outcome {
        Ok(output) => {
            println!("{}", envelope(name, input, output));
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Consistency(msg)) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(4)
        }
    }
}

fn envelope(command: &str, input: Value, output: Value) -> String {
    let mut map = Map::new();
    map.insert("command".into(), json!(command));
    map.insert("input".into(), input);
    map.insert("output".into(), output);
    serde_json::to_string_pretty(&Value::Object(map)).expect("JSON values always serialize")
}
