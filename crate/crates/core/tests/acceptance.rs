//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sfield::expr::{self, EvalErrorKind, ExprError};
use sfield::lab::{check_negative_theorems, run_full_suite, FiniteInstance, Verdict};
use sfield::{div_by_scalar, div_by_zero, divide, Backend, DivisionOutcome, SElement, ScalarValue};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const RANDOM_CASES: usize = 1000;
const SUITE_BUDGET: Duration = Duration::from_secs(5);

fn main() {
    let criteria: [Criterion; 6] = [
        (
            "exhaustive suite over GF(2), GF(3), GF(5)",
            exhaustive_suite,
        ),
        ("negative witnesses over GF(p), p <= 13", negative_witnesses),
        ("randomized rational properties", random_properties),
        ("division-by-zero table over GF(5)", division_by_zero_table),
        ("CLI goldens", cli_goldens),
        ("embedding fidelity", embedding_fidelity),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {}", panic_message(&e))));
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn panic_message(e: &Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- independent oracle: the pair model written out over BigRational ----

type Pair = (BigRational, BigRational);

fn o_mul((x, y): &Pair, (u, v): &Pair) -> Pair {
    (x * u + y + v - x * v - y * u, y * v + x * v + y * u)
}

fn o_add(a: &Pair, b: &Pair) -> Pair {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn o_sub(a: &Pair, b: &Pair) -> Pair {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn o_scalar(r: &BigRational) -> Pair {
    (r.clone(), BigRational::zero())
}

/// `x - 1 + y*A` evaluated in the oracle model.
fn o_compose(x: &BigRational, y: &BigRational) -> Pair {
    let one = BigRational::one();
    let a = (one.clone(), one.clone());
    o_add(
        &o_sub(&o_scalar(x), &o_scalar(&one)),
        &o_mul(&o_scalar(y), &a),
    )
}

fn rat(s: &ScalarValue) -> BigRational {
    match s {
        ScalarValue::Rational(r) => r.clone(),
        other => panic!("expected a rational, got {other}"),
    }
}

fn pair(s: &SElement) -> Pair {
    (rat(s.x()), rat(s.y()))
}

fn lift(r: &BigRational) -> ScalarValue {
    ScalarValue::Rational(r.clone())
}

fn element((x, y): &Pair) -> SElement {
    SElement::new(lift(x), lift(y)).unwrap()
}

fn random_rational(rng: &mut StdRng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-60i64..=60)),
        BigInt::from(rng.random_range(1i64..=12)),
    )
}

fn random_nonzero(rng: &mut StdRng) -> BigRational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_pair(rng: &mut StdRng) -> Pair {
    (random_rational(rng), random_rational(rng))
}

// ---- criteria ----

fn exhaustive_suite() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    let mut cases = 0;
    for p in [2u64, 3, 5] {
        let report = run_full_suite(p).map_err(|e| format!("GF({p}): {e}"))?;
        let failures: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        ensure(failures.is_empty(), || {
            format!("GF({p}) failed: {}", failures.join(", "))
        })?;
        let n = p * p;
        let count = |name: &str| report.get(name).map(|c| c.cases);
        ensure(count("wheel/distributivity") == Some(n * n * n), || {
            format!(
                "GF({p}) wheel case count {:?}",
                count("wheel/distributivity")
            )
        })?;
        ensure(count("s-assoc/identity") == Some(n * n), || {
            format!("GF({p}) s-assoc case count {:?}", count("s-assoc/identity"))
        })?;
        for required in [
            "bases/complete-regular",
            "unity/unique",
            "unity/scalar-inverses",
            "iso/embedding-bijective",
            "iso/scalars-form-a-field",
            "division/scalar-roundtrip",
            "division/by-zero-injective",
            "division/zero-over-zero-indeterminate",
        ] {
            ensure(report.get(required).is_some(), || {
                format!("GF({p}) lacks {required}")
            })?;
        }
        checks += report.checks.len();
        cases += report.checks.iter().map(|c| c.cases).sum::<u64>();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < SUITE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{checks} checks, {cases} cases, {} ms",
        elapsed.as_millis()
    ))
}

fn negative_witnesses() -> Outcome {
    let mut shown = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let inst = FiniteInstance::new(p).map_err(|e| e.to_string())?;
        let report = check_negative_theorems(&inst).map_err(|e| format!("GF({p}): {e}"))?;
        for (name, violates) in [
            (
                "negative/not-distributive",
                (|w: &[SElement]| {
                    let lhs = w[0].checked_add(&w[1]).unwrap().checked_mul(&w[2]).unwrap();
                    let rhs = w[0]
                        .checked_mul(&w[2])
                        .unwrap()
                        .checked_add(&w[1].checked_mul(&w[2]).unwrap())
                        .unwrap();
                    lhs != rhs
                }) as fn(&[SElement]) -> bool,
            ),
            ("negative/not-associative", |w: &[SElement]| {
                let lhs = w[0].checked_mul(&w[1]).unwrap().checked_mul(&w[2]).unwrap();
                let rhs = w[0].checked_mul(&w[1].checked_mul(&w[2]).unwrap()).unwrap();
                lhs != rhs
            }),
        ] {
            let check = report.get(name).ok_or(format!("GF({p}) lacks {name}"))?;
            ensure(check.verdict == Verdict::Witnessed, || {
                format!("GF({p}) {name}: verdict {}", check.verdict.as_str())
            })?;
            let w = check.witness.as_deref().unwrap_or_default();
            ensure(w.len() == 3 && violates(w), || {
                format!("GF({p}) {name}: witness {w:?} does not violate the law")
            })?;
            if p == 3 {
                let text: Vec<String> = w.iter().map(ToString::to_string).collect();
                shown.push(format!("{name} {}", text.join(" ")));
            }
        }
    }
    Ok(format!(
        "all six fields witnessed; GF(3): {}",
        shown.join("; ")
    ))
}

fn random_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut names = Vec::new();
    let mut run = |name: &'static str,
                   property: &mut dyn FnMut(&mut StdRng) -> Result<(), String>|
     -> Result<(), String> {
        for i in 0..RANDOM_CASES {
            property(&mut rng).map_err(|e| format!("{name}, case {i}: {e}"))?;
        }
        names.push(name);
        Ok(())
    };

    run("addition formula", &mut |rng| {
        let (s, t) = (random_pair(rng), random_pair(rng));
        let sum = element(&s).checked_add(&element(&t)).unwrap();
        let (ds, dt, d) = (
            element(&s).decompose(),
            element(&t).decompose(),
            sum.decompose(),
        );
        let expected = (rat(&ds.x) + rat(&dt.x), rat(&ds.y) + rat(&dt.y));
        ensure((rat(&d.x), rat(&d.y)) == expected, || {
            format!("{s:?} + {t:?}")
        })?;
        ensure(o_compose(&expected.0, &expected.1) == o_add(&s, &t), || {
            format!("{s:?} + {t:?} does not recompose")
        })
    })?;

    run("subtraction formula", &mut |rng| {
        let (s, t) = (random_pair(rng), random_pair(rng));
        let diff = element(&s).checked_sub(&element(&t)).unwrap();
        let (ds, dt, d) = (
            element(&s).decompose(),
            element(&t).decompose(),
            diff.decompose(),
        );
        let expected = (rat(&ds.x) - rat(&dt.x), rat(&ds.y) - rat(&dt.y));
        ensure((rat(&d.x), rat(&d.y)) == expected, || {
            format!("{s:?} - {t:?}")
        })?;
        ensure(o_compose(&expected.0, &expected.1) == o_sub(&s, &t), || {
            format!("{s:?} - {t:?} does not recompose")
        })
    })?;

    run("scalar multiplication formula", &mut |rng| {
        let (m, s) = (random_rational(rng), random_pair(rng));
        let closed = SElement::scalar_mul(&lift(&m), &element(&s)).unwrap();
        let direct = SElement::embed(lift(&m)).checked_mul(&element(&s)).unwrap();
        ensure(closed == direct, || {
            format!("{m} * {s:?}: closed form vs product")
        })?;
        ensure(pair(&closed) == o_mul(&o_scalar(&m), &s), || {
            format!("{m} * {s:?}: oracle disagrees")
        })
    })?;

    run("division formula", &mut |rng| {
        let (m, s) = (random_nonzero(rng), random_pair(rng));
        let q = div_by_scalar(&element(&s), &lift(&m)).unwrap();
        let q2 = &s.1 / &m;
        let q1 = (&s.0 + &s.1 - &q2) / &m;
        ensure(pair(&q) == (q1, q2), || format!("{s:?} / {m}: formula"))?;
        ensure(
            sfield::division::verify_quotient(&element(&s), &lift(&m), &q),
            || format!("{s:?} / {m}: verify_quotient rejects"),
        )?;
        ensure(o_mul(&o_scalar(&m), &pair(&q)) == s, || {
            format!("{s:?} / {m}: m*q != s")
        })
    })?;

    run("division roundtrip", &mut |rng| {
        let (m, s) = (random_nonzero(rng), element(&random_pair(rng)));
        let scaled = SElement::scalar_mul(&lift(&m), &s).unwrap();
        ensure(div_by_scalar(&scaled, &lift(&m)).unwrap() == s, || {
            format!("{s} via {m}")
        })
    })?;

    run("division additivity", &mut |rng| {
        let m = lift(&random_nonzero(rng));
        let (s, t) = (element(&random_pair(rng)), element(&random_pair(rng)));
        let lhs = div_by_scalar(&s, &m)
            .unwrap()
            .checked_add(&div_by_scalar(&t, &m).unwrap())
            .unwrap();
        let rhs = div_by_scalar(&s.checked_add(&t).unwrap(), &m).unwrap();
        ensure(lhs == rhs, || format!("{s} + {t} over {m}"))
    })?;

    run("scalar pull-through", &mut |rng| {
        let (m, n) = (lift(&random_nonzero(rng)), lift(&random_rational(rng)));
        let s = element(&random_pair(rng));
        let lhs = SElement::scalar_mul(&n, &div_by_scalar(&s, &m).unwrap()).unwrap();
        let rhs = div_by_scalar(&SElement::scalar_mul(&n, &s).unwrap(), &m).unwrap();
        ensure(lhs == rhs, || format!("{n} * ({s} / {m})"))
    })?;

    run("zero-division additivity", &mut |rng| {
        let (a, b) = loop {
            let (a, b) = (random_nonzero(rng), random_nonzero(rng));
            if !(&a + &b).is_zero() {
                break (a, b);
            }
        };
        let qa = div_by_zero(&lift(&a)).unwrap();
        let qb = div_by_zero(&lift(&b)).unwrap();
        let qsum = div_by_zero(&lift(&(&a + &b))).unwrap();
        ensure(qa.checked_add(&qb).unwrap() == qsum, || {
            format!("{a}/0 + {b}/0")
        })?;
        let zero = (BigRational::zero(), BigRational::zero());
        ensure(o_mul(&zero, &pair(&qa)) == o_scalar(&a), || {
            format!("0 * ({a}/0) != {a}")
        })
    })?;

    run("zero-division self-cancellation", &mut |rng| {
        let a = random_nonzero(rng);
        let q = div_by_zero(&lift(&a)).unwrap();
        ensure(
            q.checked_sub(&q).unwrap() == SElement::zero(Backend::Rational),
            || format!("{a}/0 - {a}/0"),
        )
    })?;

    Ok(format!(
        "{RANDOM_CASES} cases each for {} properties: {}",
        names.len(),
        names.join(", ")
    ))
}

fn division_by_zero_table() -> Outcome {
    let gf5 = Backend::prime_field(5).unwrap();
    let zero = SElement::zero(gf5);
    let mut seen = HashSet::new();
    let mut row = Vec::new();
    for alpha in 1..=4i64 {
        let source = format!("{alpha}/0");
        let q = expr::eval_str(&source, gf5).map_err(|e| format!("{source}: {e}"))?;
        let expected = SElement::new(gf5.zero(), gf5.from_i64(alpha)).unwrap();
        ensure(q == expected, || format!("{source} gave {q}"))?;
        ensure(div_by_zero(&gf5.from_i64(alpha)).unwrap() == q, || {
            format!("{source}: library and evaluator disagree")
        })?;
        ensure(
            zero.checked_mul(&q).unwrap() == SElement::embed(gf5.from_i64(alpha)),
            || format!("0 * ({source}) != {alpha}"),
        )?;
        seen.insert(q.clone());
        row.push(format!("{source} = {q}"));
    }
    ensure(seen.len() == 4, || {
        "quotients are not pairwise distinct".into()
    })?;
    ensure(
        divide(&zero, &zero).unwrap() == DivisionOutcome::Indeterminate,
        || "divide(0, 0) is not Indeterminate".into(),
    )?;
    match expr::eval_str("0/0", gf5) {
        Err(ExprError::Eval(e))
            if *e.kind == EvalErrorKind::Division(DivisionOutcome::Indeterminate) => {}
        other => return Err(format!("0/0 gave {other:?}")),
    }
    Ok(format!("{}; 0/0 Indeterminate", row.join(", ")))
}

struct Golden {
    args: &'static [&'static str],
    status: i32,
    stdout: Option<&'static str>,
    stderr_contains: Option<&'static str>,
}

fn cli_goldens() -> Outcome {
    let goldens = [
        Golden {
            args: &["--field", "rational", "--eval", "1/0", "--format", "coords"],
            status: 0,
            stdout: Some("(0, 1)\n"),
            stderr_contains: None,
        },
        Golden {
            args: &["--eval", "2 + 3*A"],
            status: 0,
            stdout: Some("(3, 3)\n"),
            stderr_contains: None,
        },
        Golden {
            args: &["--eval", "0/0"],
            status: 2,
            stdout: Some(""),
            stderr_contains: Some("Indeterminate"),
        },
        Golden {
            args: &["--field", "gf:3", "--check"],
            status: 0,
            stdout: None,
            stderr_contains: None,
        },
    ];
    for golden in &goldens {
        let shown = golden.args.join(" ");
        let out = Command::new(env!("CARGO_BIN_EXE_sfield"))
            .args(golden.args)
            .output()
            .map_err(|e| format!("cannot run sfield: {e}"))?;
        let status = out.status.code();
        ensure(status == Some(golden.status), || {
            format!("`{shown}` exited {status:?}, expected {}", golden.status)
        })?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        if let Some(expected) = golden.stdout {
            ensure(stdout == expected, || {
                format!("`{shown}` printed {stdout:?}")
            })?;
        }
        if let Some(needle) = golden.stderr_contains {
            let stderr = String::from_utf8_lossy(&out.stderr);
            ensure(stderr.contains(needle), || {
                format!("`{shown}` stderr {stderr:?}")
            })?;
        }
    }
    Ok(format!("{} invocations match", goldens.len()))
}

fn embedding_fidelity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for i in 0..RANDOM_CASES {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let (ea, eb) = (SElement::embed(lift(&a)), SElement::embed(lift(&b)));
        let product = ea.checked_mul(&eb).unwrap();
        let sum = ea.checked_add(&eb).unwrap();
        ensure(product == SElement::embed(lift(&(&a * &b))), || {
            format!("case {i}: embed({a})*embed({b}) = {product}")
        })?;
        ensure(sum == SElement::embed(lift(&(&a + &b))), || {
            format!("case {i}: embed({a})+embed({b}) = {sum}")
        })?;
        ensure(
            pair(&product) == o_mul(&o_scalar(&a), &o_scalar(&b)),
            || format!("case {i}: oracle disagrees on {a}*{b}"),
        )?;
    }
    Ok(format!(
        "{RANDOM_CASES} random pairs, products and sums exact"
    ))
}
