//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rainbow_cycle::oracle::{
    brute_force_rainbow, conjecture_scan, enumerate_independent_sets, exhaustive_theorem_check,
    theorem_families, theorem_family_count,
};
use rainbow_cycle::solver::check_monotonicity;
use rainbow_cycle::{
    admissible_shifts, choose_k, classify_shift, construct_assignment, normalize, solve,
    verify_assignment, verify_certificate, Arc, CycleContext, DoublingMap, VertexSet,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every rotation-reduced family for s = 1..=6 is solved and its certificate verified.
fn theorem_exhaustive() -> Outcome {
    let mut scanned = 0;
    for s in 1..=6 {
        let report = exhaustive_theorem_check(s, workers()).map_err(|e| e.to_string())?;
        let expected = (2 * s as u64 + 1).pow(s as u32 - 1);
        ensure(report.families == expected, || {
            format!(
                "s={s}: scanned {} families, expected {expected}",
                report.families
            )
        })?;
        ensure(report.is_clean(), || {
            format!(
                "s={s}: {} failures, first {:?}",
                report.failures.len(),
                report.failures[0]
            )
        })?;
        scanned += report.families;
    }
    Ok(format!("{scanned} families over s=1..6, 0 failures"))
}

/// The brute-force search agrees with the solver on every family for s = 1..=4.
fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for s in 1..=4 {
        for inst in theorem_families(s).map_err(|e| e.to_string())? {
            let pairs = brute_force_rainbow(inst.family(), s)
                .ok_or_else(|| format!("brute force found nothing for {:?}", inst.labels()))?;
            verify_assignment(&inst, &pairs).map_err(|r| {
                format!(
                    "brute force answer rejected ({}) for {:?}",
                    r.code(),
                    inst.labels()
                )
            })?;
            let cert = solve(&inst).map_err(|e| format!("{e} for {:?}", inst.labels()))?;
            verify_certificate(&inst, &cert).map_err(|r| {
                format!(
                    "solver answer rejected ({}) for {:?}",
                    r.code(),
                    inst.labels()
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} families, 0 disagreements"))
}

/// The doubling map is a bijection carrying the 2s+1 arcs onto exactly the
/// 2s+1 independent s-sets, for s = 1..=10.
fn bijection_suite() -> Outcome {
    for s in 1..=10 {
        let ctx = CycleContext::odd(s).map_err(|e| e.to_string())?;
        let f = DoublingMap::new(ctx).map_err(|e| e.to_string())?;
        for v in ctx.vertices() {
            ensure(
                f.apply(f.invert(v)) == v && f.invert(f.apply(v)) == v,
                || format!("s={s}: map does not invert at vertex {v}"),
            )?;
        }
        let mut images = BTreeSet::new();
        for start in ctx.vertices() {
            let arc = Arc::new(ctx, start, s).map_err(|e| e.to_string())?;
            let set = f.arc_to_independent_set(&arc).map_err(|e| e.to_string())?;
            ensure(set.len() == s && set.is_independent(), || {
                format!("s={s}: arc at {start} maps to {set}")
            })?;
            images.insert(set.labels());
        }
        let enumerated: BTreeSet<Vec<usize>> = enumerate_independent_sets(ctx, s)
            .map_err(|e| e.to_string())?
            .iter()
            .map(VertexSet::labels)
            .collect();
        ensure(enumerated.len() == 2 * s + 1, || {
            format!(
                "s={s}: {} independent s-sets, expected {}",
                enumerated.len(),
                2 * s + 1
            )
        })?;
        ensure(images == enumerated, || {
            format!("s={s}: arc images differ from enumeration")
        })?;
    }
    Ok("s=1..10: inverse, image and count checks hold".into())
}

/// Pigeonhole and monotonicity for every normalized family with s <= 5, for
/// every admissible shift (both cases).
fn pigeonhole_and_monotonicity() -> Outcome {
    let (mut families, mut shifts, mut case_two) = (0u64, 0u64, 0u64);
    for s in 1..=5 {
        let f = DoublingMap::new(CycleContext::odd(s).unwrap()).unwrap();
        for inst in theorem_families(s).map_err(|e| e.to_string())? {
            let arcs: Vec<Arc> = inst
                .family()
                .iter()
                .map(|set| f.independent_set_to_arc(set))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let norm = normalize(&arcs).map_err(|e| e.to_string())?;
            let forbidden = norm.forbidden_residues();
            ensure(forbidden.len() <= 2 * s, || {
                format!("{:?}: {} forbidden residues", norm.starts, forbidden.len())
            })?;
            choose_k(&norm).map_err(|e| format!("{:?}: {e}", norm.starts))?;
            for k in admissible_shifts(&norm) {
                check_monotonicity(&norm, k).map_err(|e| format!("{:?}: {e}", norm.starts))?;
                let choice =
                    classify_shift(&norm, k).map_err(|e| format!("{:?}: {e}", norm.starts))?;
                let window = construct_assignment(&norm, &choice)
                    .map_err(|e| format!("{:?}, k={k}: {e}", norm.starts))?;
                let ctx = inst.context();
                let as_arc = VertexSet::new(ctx, window).ok().and_then(|w| w.as_arc());
                ensure(as_arc.is_some_and(|a| a.length() == s), || {
                    format!(
                        "{:?}, k={k}: assigned vertices are not a window",
                        norm.starts
                    )
                })?;
                shifts += 1;
                case_two += u64::from(choice.case.number() == 2);
            }
            families += 1;
        }
    }
    ensure(case_two > 0, || {
        "no admissible shift reached the second case".into()
    })?;
    Ok(format!(
        "{families} families, {shifts} admissible shifts ({case_two} in case 2), 0 violations"
    ))
}

/// The brute-force search finds a rainbow s-set in every family of s
/// independent s-sets of C_t, for the listed (t, s).
fn conjecture_evidence() -> Outcome {
    let pairs = [
        (5, 2),
        (7, 2),
        (7, 3),
        (9, 2),
        (9, 3),
        (9, 4),
        (11, 3),
        (11, 4),
        (11, 5),
    ];
    let mut parts = Vec::new();
    for (t, s) in pairs {
        let report = conjecture_scan(t, s, workers()).map_err(|e| e.to_string())?;
        ensure(report.is_clean(), || {
            format!("(t={t}, s={s}): counterexample {:?}", report.failures[0])
        })?;
        parts.push(format!("({t},{s}):{}", report.families));
    }
    Ok(format!("0 failures; families {}", parts.join(" ")))
}

/// No family of s - 1 sets has a rainbow s-set, for s = 2..=5.
fn trivial_lower_bound() -> Outcome {
    let mut checked = 0u64;
    for s in 2..=5 {
        let sets = enumerate_independent_sets(CycleContext::odd(s).unwrap(), s).unwrap();
        let n = sets.len() as u64;
        for index in 0..n.pow(s as u32 - 1) {
            let mut rest = index;
            let family: Vec<VertexSet> = (0..s - 1)
                .map(|_| {
                    let pick = sets[(rest % n) as usize].clone();
                    rest /= n;
                    pick
                })
                .collect();
            ensure(brute_force_rainbow(&family, s).is_none(), || {
                format!("s={s}: {} sets yielded a rainbow s-set", family.len())
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} families of s-1 sets, none has a rainbow s-set"
    ))
}

/// `solve` on the command line is byte-for-byte reproducible.
fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_rainbow-cycle");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(20_261_015);
    let runs = 120;
    for n in 0..runs {
        let s = rng.gen_range(1..=9);
        let sets = enumerate_independent_sets(CycleContext::odd(s).unwrap(), s).unwrap();
        let family: Vec<Vec<usize>> = (0..s)
            .map(|_| sets[rng.gen_range(0..sets.len())].labels())
            .collect();
        let path = dir.path().join(format!("instance-{n}.json"));
        let doc = serde_json::json!({ "t": 2 * s + 1, "sets": family });
        fs::write(&path, doc.to_string()).map_err(|e| e.to_string())?;
        let run = || Command::new(bin).arg("solve").arg(&path).output();
        let (first, second) = (
            run().map_err(|e| e.to_string())?,
            run().map_err(|e| e.to_string())?,
        );
        ensure(first.status.success(), || {
            format!(
                "solve failed on {doc}: {}",
                String::from_utf8_lossy(&first.stderr)
            )
        })?;
        ensure(first.stdout == second.stdout, || {
            format!("outputs differ on {doc}")
        })?;

        let cert = dir.path().join(format!("certificate-{n}.json"));
        fs::write(&cert, &first.stdout).map_err(|e| e.to_string())?;
        let verified = Command::new(bin)
            .arg("verify")
            .arg(&path)
            .arg(&cert)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(verified.status.success(), || {
            format!("verify rejected the certificate for {doc}")
        })?;
    }
    Ok(format!(
        "{runs} random instances, identical output on rerun, all verified"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        ("1 theorem exhaustive (s=1..6)", theorem_exhaustive),
        ("2 oracle equivalence (s=1..4)", oracle_equivalence),
        ("3 bijection suite (s=1..10)", bijection_suite),
        (
            "4 pigeonhole + monotonicity (s<=5)",
            pigeonhole_and_monotonicity,
        ),
        ("5 conjecture desk evidence", conjecture_evidence),
        ("6 trivial lower bound (s=2..5)", trivial_lower_bound),
        ("7 determinism (>=100 instances)", determinism),
    ];
    assert_eq!(theorem_family_count(6).unwrap(), 371_293);
    let mut failed = 0;
    for (name, criterion) in criteria {
        let started = Instant::now();
        let outcome = criterion();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
