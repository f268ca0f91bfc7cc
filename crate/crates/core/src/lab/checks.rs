//! The individual exhaustive checks. Each one walks a fixed enumeration of
//! the instance, counts every case it examines, and keeps the first
//! counterexample (or, for negative claims, the first witness) it meets.

use crate::division::{self, DivisionOutcome};
use crate::element::SElement;

use super::instance::FiniteInstance;
use super::report::{AxiomReport, CheckResult, Verdict};
use super::LabError;

struct Tally<'a> {
    inst: &'a FiniteInstance,
    name: &'static str,
    cases: u64,
    counterexample: Option<Vec<usize>>,
}

impl<'a> Tally<'a> {
    fn new(inst: &'a FiniteInstance, name: &'static str) -> Self {
        Tally {
            inst,
            name,
            cases: 0,
            counterexample: None,
        }
    }

    fn case(&mut self, holds: bool, witness: impl FnOnce() -> Vec<usize>) {
        self.cases += 1;
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> CheckResult {
        let verdict = if self.counterexample.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        CheckResult {
            name: self.name.to_string(),
            verdict,
            cases: self.cases,
            witness: self.counterexample.map(|w| elements(self.inst, &w)),
        }
    }
}

fn elements(inst: &FiniteInstance, indices: &[usize]) -> Vec<SElement> {
    indices.iter().map(|&i| inst.element(i).clone()).collect()
}

fn witnessed(
    inst: &FiniteInstance,
    name: &str,
    cases: u64,
    found: Option<Vec<usize>>,
) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        verdict: if found.is_some() {
            Verdict::Witnessed
        } else {
            Verdict::Fail
        },
        cases,
        witness: found.map(|w| elements(inst, &w)),
    }
}

/// First item satisfying `pred`, plus how many items were examined.
fn search<T>(
    items: impl IntoIterator<Item = T>,
    mut pred: impl FnMut(&T) -> bool,
) -> (u64, Option<T>) {
    let mut cases = 0;
    for item in items {
        cases += 1;
        if pred(&item) {
            return (cases, Some(item));
        }
    }
    (cases, None)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

fn nonzero_scalars(inst: &FiniteInstance) -> Vec<usize> {
    inst.scalars()
        .into_iter()
        .filter(|&m| m != inst.zero())
        .collect()
}

/// Additive group, closure, the nonzero zero-product condition, and the
/// partition of the carrier into index classes.
pub fn check_s_structure(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let zero = inst.zero();
    let mut report = AxiomReport::new(inst.modulus());

    let mut t = Tally::new(inst, "structure/additive-identity");
    for s in 0..n {
        t.case(inst.add(s, zero) == s && inst.add(zero, s) == s, || vec![s]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "structure/additive-inverses");
    for s in 0..n {
        t.case(inst.add(s, inst.neg(s)) == zero, || vec![s]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "structure/additive-commutativity");
    for (s, u) in pairs(n) {
        t.case(inst.add(s, u) == inst.add(u, s), || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "structure/additive-associativity");
    for (s, u, r) in triples(n) {
        t.case(
            inst.add(inst.add(s, u), r) == inst.add(s, inst.add(u, r)),
            || vec![s, u, r],
        );
    }
    report.push(t.finish());

    // zero and negatives are unique; negation distributes and is an involution
    let mut t = Tally::new(inst, "structure/negation-laws");
    let identities = (0..n)
        .filter(|&e| (0..n).all(|s| inst.add(e, s) == s))
        .count();
    for (s, u) in pairs(n) {
        let inverses = (0..n).filter(|&v| inst.add(s, v) == zero).count();
        let holds = identities == 1
            && inverses == 1
            && inst.neg(zero) == zero
            && inst.neg(inst.add(s, u)) == inst.add(inst.neg(s), inst.neg(u))
            && inst.neg(inst.neg(s)) == s;
        t.case(holds, || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "structure/subtraction-laws");
    for (s, u) in pairs(n) {
        let direct = inst
            .element(s)
            .checked_sub(inst.element(u))
            .ok()
            .and_then(|d| inst.index_of(&d));
        let holds = direct == Some(inst.add(s, inst.neg(u)))
            && inst.sub(s, s) == zero
            && inst.sub(s, u) == inst.neg(inst.sub(u, s))
            && inst.sub(s, inst.neg(u)) == inst.add(s, u)
            && inst.sub(s, zero) == s
            && inst.sub(zero, s) == inst.neg(s);
        t.case(holds, || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "structure/multiplicative-closure");
    for (s, u) in pairs(n) {
        let product = inst.element(s).checked_mul(inst.element(u))?;
        t.case(inst.index_of(&product).is_some(), || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "structure/multiplicative-commutativity");
    for (s, u) in pairs(n) {
        t.case(inst.mul(s, u) == inst.mul(u, s), || vec![s, u]);
    }
    report.push(t.finish());

    let (cases, found) = search(0..n, |&s| {
        inst.mul(zero, s) != zero || inst.mul(s, zero) != zero
    });
    report.push(witnessed(
        inst,
        "structure/zero-product-nonzero",
        cases,
        found.map(|s| vec![s]),
    ));

    let mut t = Tally::new(inst, "structure/index-classes-disjoint");
    for s in 0..n {
        let memberships = (0..n).filter(|&alpha| inst.in_class(s, alpha)).count();
        t.case(memberships <= 1, || vec![s]);
    }
    report.push(t.finish());

    let lambda: Vec<usize> = inst
        .lambda()
        .indices
        .iter()
        .filter_map(|a| inst.index_of(a))
        .collect();
    let mut t = Tally::new(inst, "structure/index-classes-cover");
    for s in 0..n {
        t.case(lambda.iter().any(|&alpha| inst.in_class(s, alpha)), || {
            vec![s]
        });
    }
    report.push(t.finish());

    let (cases, found) = search(lambda.iter().copied(), |&alpha| alpha != zero);
    report.push(witnessed(
        inst,
        "structure/nonzero-index-exists",
        cases,
        found.map(|a| vec![a]),
    ));

    let (cases, found) = search(0..n, |&s| !inst.is_scalar(s));
    report.push(witnessed(
        inst,
        "structure/non-scalar-exists",
        cases,
        found.map(|s| vec![s]),
    ));

    Ok(report)
}

/// The corrected distributive law and its sign consequences.
pub fn check_wheel_distributive(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let zero = inst.zero();
    let scalars = inst.scalars();
    let mut report = AxiomReport::new(inst.modulus());

    let mut t = Tally::new(inst, "wheel/distributivity");
    for (s, u, r) in triples(n) {
        let lhs = inst.add(inst.mul(s, inst.add(u, r)), inst.mul(s, zero));
        t.case(lhs == inst.add(inst.mul(s, u), inst.mul(s, r)), || {
            vec![s, u, r]
        });
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/distributivity-rearranged");
    for (s, u, r) in triples(n) {
        let rhs = inst.sub(inst.add(inst.mul(s, u), inst.mul(s, r)), inst.mul(s, zero));
        t.case(inst.mul(s, inst.add(u, r)) == rhs, || vec![s, u, r]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/negated-product");
    for (s, u) in pairs(n) {
        let u0 = inst.mul(u, zero);
        let rhs = inst.sub(inst.sub(inst.mul(u, inst.neg(s)), u0), u0);
        t.case(inst.neg(inst.mul(u, s)) == rhs, || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/product-of-negatives");
    for (s, u) in pairs(n) {
        let (zu, sz) = (inst.mul(zero, u), inst.mul(s, zero));
        let correction = inst.add(inst.add(zu, zu), inst.add(sz, sz));
        let rhs = inst.sub(inst.mul(s, u), correction);
        t.case(inst.mul(inst.neg(s), inst.neg(u)) == rhs, || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/scalar-negation");
    for &m in &scalars {
        for s in 0..n {
            t.case(inst.neg(inst.mul(m, s)) == inst.mul(m, inst.neg(s)), || {
                vec![m, s]
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/scalar-sign-rule");
    for &m in &scalars {
        for &k in &scalars {
            t.case(inst.mul(inst.neg(m), inst.neg(k)) == inst.mul(m, k), || {
                vec![m, k]
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/scalar-shift-keeps-class");
    for s in 0..n {
        for &b in &scalars {
            t.case(inst.class_of(inst.add(s, b)) == inst.class_of(s), || {
                vec![s, b]
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "wheel/same-class-differs-by-scalar");
    for (s, u) in pairs(n) {
        if inst.class_of(s).is_some() && inst.class_of(s) == inst.class_of(u) {
            t.case(inst.is_scalar(inst.sub(u, s)), || vec![s, u]);
        }
    }
    report.push(t.finish());

    Ok(report)
}

/// The corrected associativity for scalar pairs.
pub fn check_s_associative(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let (zero, one) = (inst.zero(), inst.one());
    let scalars = inst.scalars();
    let mut report = AxiomReport::new(inst.modulus());

    let mut t = Tally::new(inst, "s-assoc/identity");
    let mut c = Tally::new(inst, "s-assoc/scalar-commutation");
    for &m in &scalars {
        for &k in &scalars {
            let correction_factor = inst.mul(inst.sub(m, one), inst.sub(k, one));
            for s in 0..n {
                let lhs = inst.mul(m, inst.mul(k, s));
                let correction = inst.mul(correction_factor, inst.mul(zero, s));
                let rhs = inst.sub(inst.mul(inst.mul(m, k), s), correction);
                t.case(lhs == rhs, || vec![m, k, s]);
                c.case(lhs == inst.mul(k, inst.mul(m, s)), || vec![m, k, s]);
            }
        }
    }
    report.push(t.finish());
    report.push(c.finish());

    let mut t = Tally::new(inst, "s-assoc/index-scaling");
    for &m in &scalars {
        let coefficient = inst.element(m).x();
        for s in 0..n {
            let scaled = inst.mul(m, s);
            let by_table = match (inst.class_of(scaled), inst.class_of(s)) {
                (Some(a), Some(b)) => a == inst.mul(m, b),
                _ => false,
            };
            let by_index = SElement::scalar_mul(coefficient, inst.element(s))
                .map(|v| v.alpha_index())
                .ok()
                == coefficient.checked_mul(&inst.element(s).alpha_index()).ok();
            t.case(by_table && by_index, || vec![m, s]);
        }
    }
    report.push(t.finish());

    Ok(report)
}

/// Concrete witnesses that multiplication is neither distributive nor
/// associative, and that zero differs from one.
pub fn check_negative_theorems(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let zero = inst.zero();
    let mut report = AxiomReport::new(inst.modulus());

    // (0 + 0)*s against 0*s + 0*s first, then any triple
    let (mut cases, mut found) = search(0..n, |&s| {
        inst.mul(inst.add(zero, zero), s) != inst.add(inst.mul(zero, s), inst.mul(zero, s))
    })
    .map_witness(|s| vec![zero, zero, s]);
    if found.is_none() {
        let (more, triple) = search(triples(n), |&(s, u, r)| {
            inst.mul(inst.add(s, u), r) != inst.add(inst.mul(s, r), inst.mul(u, r))
        });
        cases += more;
        found = triple.map(|(s, u, r)| vec![s, u, r]);
    }
    let check = witnessed(inst, "negative/not-distributive", cases, found);
    if check.verdict == Verdict::Fail {
        return Err(LabError::FalsifiedClaim(check.name));
    }
    report.push(check);

    // (s*0)*0 against s*(0*0) first, then any triple
    let (mut cases, mut found) = search(0..n, |&s| {
        inst.mul(inst.mul(s, zero), zero) != inst.mul(s, inst.mul(zero, zero))
    })
    .map_witness(|s| vec![s, zero, zero]);
    if found.is_none() {
        let (more, triple) = search(triples(n), |&(s, u, r)| {
            inst.mul(inst.mul(s, u), r) != inst.mul(s, inst.mul(u, r))
        });
        cases += more;
        found = triple.map(|(s, u, r)| vec![s, u, r]);
    }
    let check = witnessed(inst, "negative/not-associative", cases, found);
    if check.verdict == Verdict::Fail {
        return Err(LabError::FalsifiedClaim(check.name));
    }
    report.push(check);

    let mut t = Tally::new(inst, "negative/zero-differs-from-one");
    t.case(inst.zero() != inst.one(), || vec![inst.zero(), inst.one()]);
    let check = t.finish();
    if check.verdict == Verdict::Fail {
        return Err(LabError::FalsifiedClaim(check.name));
    }
    report.push(check);

    Ok(report)
}

trait MapWitness<T> {
    fn map_witness(self, f: impl FnOnce(T) -> Vec<usize>) -> (u64, Option<Vec<usize>>);
}

impl<T> MapWitness<T> for (u64, Option<T>) {
    fn map_witness(self, f: impl FnOnce(T) -> Vec<usize>) -> (u64, Option<Vec<usize>>) {
        (self.0, self.1.map(f))
    }
}

/// Regularity, standard bases, the base unit and the canonical coordinates.
pub fn check_regularity_and_bases(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let (zero, one) = (inst.zero(), inst.one());
    let backend = inst.backend();
    let scalars = inst.scalars();
    let lambda: Vec<usize> = inst
        .lambda()
        .indices
        .iter()
        .filter_map(|a| inst.index_of(a))
        .collect();
    let mut report = AxiomReport::new(inst.modulus());

    let mut t = Tally::new(inst, "bases/regular");
    for s in 0..n {
        t.case(inst.class_of(s).is_some_and(|a| inst.is_scalar(a)), || {
            vec![s]
        });
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/complete-regular");
    for &alpha in &scalars {
        t.case(lambda.contains(&alpha), || vec![alpha]);
    }
    if lambda.len() != scalars.len() {
        t.case(false, || lambda.clone());
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/alpha-index-matches-zero-product");
    for s in 0..n {
        let alpha = SElement::embed(inst.element(s).alpha_index());
        t.case(inst.index_of(&alpha) == Some(inst.mul(zero, s)), || vec![s]);
    }
    report.push(t.finish());

    let base_of = |alpha: usize| -> Option<usize> {
        let coefficient = inst.element(alpha).extract_scalar().ok()?;
        inst.index_of(&SElement::standard_base(coefficient))
    };
    let q01 = base_of(one).expect("one is a scalar");

    let mut t = Tally::new(inst, "bases/standard-base-formula");
    for &alpha in &lambda {
        // α*(q0(1) + 1) - 1
        let formula = inst.sub(inst.mul(alpha, inst.add(q01, one)), one);
        t.case(
            base_of(alpha) == Some(formula) && inst.in_class(formula, alpha),
            || vec![alpha],
        );
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/standard-base-closure");
    for &alpha in &lambda {
        for &beta in &scalars {
            let holds = base_of(alpha).is_some_and(|q| inst.in_class(inst.add(q, beta), alpha));
            t.case(holds, || vec![alpha, beta]);
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/standard-base-spans-class");
    for s in 0..n {
        let Some(alpha) = inst.class_of(s) else {
            t.case(false, || vec![s]);
            continue;
        };
        let holds = base_of(alpha).is_some_and(|q| scalars.iter().any(|&b| inst.add(q, b) == s));
        t.case(holds, || vec![s]);
    }
    report.push(t.finish());

    // s = q0(α) + β is an injective labelling
    let mut t = Tally::new(inst, "bases/equality-criterion");
    let label = |s: usize| -> Option<(usize, usize)> {
        let alpha = inst.class_of(s)?;
        Some((alpha, inst.sub(s, base_of(alpha)?)))
    };
    for (s, u) in pairs(n) {
        let holds = match (label(s), label(u)) {
            (Some(a), Some(b)) => (s == u) == (a == b) && inst.is_scalar(a.1),
            _ => false,
        };
        t.case(holds, || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/base-unit");
    let a = inst.add(q01, one);
    let q00 = base_of(zero);
    t.case(
        inst.index_of(&SElement::base_unit(backend)) == Some(a),
        || vec![a],
    );
    t.case(inst.in_class(a, one), || vec![a]);
    t.case(inst.mul(one, a) == a && inst.mul(a, one) == a, || vec![a]);
    t.case(inst.mul(zero, a) == one && inst.mul(a, zero) == one, || {
        vec![a]
    });
    t.case(
        q00 == Some(zero) && q00.map(|q| inst.add(q, one)) == Some(inst.mul(zero, a)),
        || vec![zero],
    );
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/canonical-decomposition");
    for s in 0..n {
        let d = inst.element(s).decompose();
        let composed = d.compose().ok().and_then(|c| inst.index_of(&c));
        // x - 1 + y*A evaluated in the tables
        let (x, y) = (
            inst.index_of(&SElement::embed(d.x.clone())),
            inst.index_of(&SElement::embed(d.y.clone())),
        );
        let via_tables = x
            .zip(y)
            .map(|(x, y)| inst.add(inst.sub(x, one), inst.mul(y, a)));
        let holds = composed == Some(s) && via_tables == Some(s) && y == inst.class_of(s);
        t.case(holds, || vec![s]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/standard-base-additivity");
    for &alpha in &lambda {
        for &beta in &lambda {
            let sum = base_of(alpha)
                .zip(base_of(beta))
                .map(|(p, q)| inst.add(p, q));
            t.case(
                sum.is_some() && sum == base_of(inst.add(alpha, beta)),
                || vec![alpha, beta],
            );
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/index-set-closed");
    for &alpha in &lambda {
        for &beta in &lambda {
            let holds =
                lambda.contains(&inst.add(alpha, beta)) && lambda.contains(&inst.neg(alpha));
            t.case(holds, || vec![alpha, beta]);
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/coordinate-arithmetic");
    for (s, u) in pairs(n) {
        let (ds, du) = (inst.element(s).decompose(), inst.element(u).decompose());
        let sum = inst.element(inst.add(s, u)).decompose();
        let diff = inst.element(inst.sub(s, u)).decompose();
        let neg = inst.element(inst.neg(s)).decompose();
        let holds = Ok(sum.x) == ds.x.checked_add(&du.x)
            && Ok(sum.y) == ds.y.checked_add(&du.y)
            && Ok(diff.x) == ds.x.checked_sub(&du.x)
            && Ok(diff.y) == ds.y.checked_sub(&du.y)
            && neg.x == -&ds.x
            && neg.y == -&ds.y;
        t.case(holds, || vec![s, u]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/scalar-multiplication-formula");
    for &m in &scalars {
        for s in 0..n {
            let closed = SElement::scalar_mul(inst.element(m).x(), inst.element(s))
                .ok()
                .and_then(|v| inst.index_of(&v));
            t.case(closed == Some(inst.mul(m, s)), || vec![m, s]);
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "bases/scaled-base-classes");
    for &m in &scalars {
        // n*q0(1) lands in class n, and n*A = 1 forces n = 0
        let holds = inst.in_class(inst.mul(m, q01), m) && ((inst.mul(m, a) == one) == (m == zero));
        t.case(holds, || vec![m]);
    }
    report.push(t.finish());

    Ok(report)
}

/// The unity `1`, its uniqueness, and scalar inverses.
pub fn check_unity_and_inverses(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let (zero, one) = (inst.zero(), inst.one());
    let scalars = inst.scalars();
    let mut report = AxiomReport::new(inst.modulus());

    let mut t = Tally::new(inst, "unity/one-is-unity");
    for s in 0..n {
        t.case(inst.mul(one, s) == s && inst.mul(s, one) == s, || vec![s]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "unity/unique");
    for e in 0..n {
        let is_unity = (0..n).all(|s| inst.mul(e, s) == s && inst.mul(s, e) == s);
        t.case(is_unity == (e == one), || vec![e]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "unity/nonzero-scalar");
    t.case(inst.is_scalar(one) && one != zero, || vec![one]);
    report.push(t.finish());

    let mut t = Tally::new(inst, "unity/acts-trivially-on-scalars");
    for &x in &scalars {
        let holds = inst.mul(one, one) == one
            && inst.mul(one, inst.mul(one, x)) == inst.mul(one, x)
            && inst.mul(one, x) == x
            && inst.mul(x, one) == x;
        t.case(holds, || vec![x]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "unity/scalar-inverses");
    for &x in scalars.iter().filter(|&&x| x != zero) {
        let found: Vec<usize> = scalars
            .iter()
            .copied()
            .filter(|&y| inst.mul(x, y) == one)
            .collect();
        let library = inst
            .element(x)
            .x()
            .inverse()
            .ok()
            .and_then(|inv| inst.index_of(&SElement::embed(inv)));
        t.case(
            found.len() == 1 && library == found.first().copied(),
            || vec![x],
        );
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "unity/inverse-of-one");
    let scanned: Vec<usize> = scalars
        .iter()
        .copied()
        .filter(|&y| inst.mul(one, y) == one)
        .collect();
    t.case(scanned == [one], || vec![one]);
    report.push(t.finish());

    Ok(report)
}

/// The scalars form a copy of GF(p) under the embedding `k -> (k, 0)`.
pub fn check_scalar_field_iso(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let backend = inst.backend();
    let coefficients = backend.elements().expect("finite backend");
    let scalars = inst.scalars();
    let (zero, one) = (inst.zero(), inst.one());
    let mut report = AxiomReport::new(inst.modulus());

    let image: Vec<Option<usize>> = coefficients
        .iter()
        .map(|c| inst.index_of(&SElement::embed(c.clone())))
        .collect();

    let mut t = Tally::new(inst, "iso/embedding-bijective");
    for (k, target) in image.iter().enumerate() {
        let roundtrip = target.and_then(|i| inst.element(i).extract_scalar().ok());
        let holds = target.is_some_and(|i| scalars.contains(&i))
            && image.iter().filter(|&&other| other == *target).count() == 1
            && roundtrip.as_ref() == Some(&coefficients[k]);
        t.case(holds, || target.map(|i| vec![i]).unwrap_or_default());
    }
    if scalars.len() != coefficients.len() {
        t.case(false, Vec::new);
    }
    report.push(t.finish());

    let mut add = Tally::new(inst, "iso/preserves-addition");
    let mut mul = Tally::new(inst, "iso/preserves-multiplication");
    for (i, a) in coefficients.iter().enumerate() {
        for (j, b) in coefficients.iter().enumerate() {
            let (ea, eb) = (image[i].unwrap_or(0), image[j].unwrap_or(0));
            let sum = a
                .checked_add(b)
                .ok()
                .and_then(|c| inst.index_of(&SElement::embed(c)));
            let product = a
                .checked_mul(b)
                .ok()
                .and_then(|c| inst.index_of(&SElement::embed(c)));
            add.case(sum == Some(inst.add(ea, eb)), || vec![ea, eb]);
            mul.case(product == Some(inst.mul(ea, eb)), || vec![ea, eb]);
        }
    }
    report.push(add.finish());
    report.push(mul.finish());

    let mut t = Tally::new(inst, "iso/scalars-form-a-field");
    for &a in &scalars {
        for &b in &scalars {
            for &c in &scalars {
                let holds = inst.is_scalar(inst.add(a, b))
                    && inst.is_scalar(inst.mul(a, b))
                    && inst.is_scalar(inst.neg(a))
                    && inst.is_scalar(inst.sub(a, b))
                    && inst.add(a, b) == inst.add(b, a)
                    && inst.mul(a, b) == inst.mul(b, a)
                    && inst.add(inst.add(a, b), c) == inst.add(a, inst.add(b, c))
                    && inst.mul(inst.mul(a, b), c) == inst.mul(a, inst.mul(b, c))
                    && inst.mul(a, inst.add(b, c)) == inst.add(inst.mul(a, b), inst.mul(a, c))
                    && inst.add(a, zero) == a
                    && inst.mul(a, one) == a
                    && (a == zero || scalars.iter().any(|&y| inst.mul(a, y) == one));
                t.case(holds, || vec![a, b, c]);
            }
        }
    }
    report.push(t.finish());

    Ok(report)
}

/// Division by nonzero scalars and division by zero.
pub fn check_division_theorems(inst: &FiniteInstance) -> Result<AxiomReport, LabError> {
    let n = inst.len();
    let zero = inst.zero();
    let backend = inst.backend();
    let scalars = inst.scalars();
    let nonzero = nonzero_scalars(inst);
    let coefficient = |i: usize| inst.element(i).x().clone();
    let quotient = |s: usize, m: usize| -> Option<usize> {
        division::div_by_scalar(inst.element(s), &coefficient(m))
            .ok()
            .and_then(|q| inst.index_of(&q))
    };
    let mut report = AxiomReport::new(inst.modulus());

    let mut formula = Tally::new(inst, "division/scalar-formula");
    let mut roundtrip = Tally::new(inst, "division/scalar-roundtrip");
    let mut unique = Tally::new(inst, "division/scalar-quotient-unique");
    for s in 0..n {
        for &m in &nonzero {
            let q = quotient(s, m);
            formula.case(
                q.is_some_and(|q| {
                    division::verify_quotient(inst.element(s), &coefficient(m), inst.element(q))
                }),
                || vec![s, m],
            );
            roundtrip.case(quotient(inst.mul(m, s), m) == Some(s), || vec![s, m]);
            let solutions: Vec<usize> = (0..n)
                .filter(|&c| inst.mul(m, c) == s && inst.mul(c, m) == s)
                .collect();
            unique.case(
                solutions.len() == 1 && q == solutions.first().copied(),
                || vec![s, m],
            );
        }
    }
    report.push(formula.finish());
    report.push(roundtrip.finish());
    report.push(unique.finish());

    let mut t = Tally::new(inst, "division/additivity");
    for (s, u) in pairs(n) {
        for &m in &nonzero {
            let lhs = quotient(s, m)
                .zip(quotient(u, m))
                .map(|(a, b)| inst.add(a, b));
            t.case(lhs.is_some() && lhs == quotient(inst.add(s, u), m), || {
                vec![s, u, m]
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/scalar-pull-through");
    for s in 0..n {
        for &k in &scalars {
            for &m in &nonzero {
                let lhs = quotient(s, m).map(|q| inst.mul(k, q));
                t.case(lhs.is_some() && lhs == quotient(inst.mul(k, s), m), || {
                    vec![s, k, m]
                });
            }
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/scalar-by-scalar");
    for &k in &scalars {
        for &m in &nonzero {
            let expected = coefficient(m)
                .inverse()
                .ok()
                .and_then(|inv| inst.index_of(&SElement::embed(inv)))
                .map(|inv| inst.mul(inv, k));
            t.case(expected.is_some() && quotient(k, m) == expected, || {
                vec![k, m]
            });
        }
    }
    for s in 0..n {
        t.case(quotient(s, inst.one()) == Some(s), || vec![s, inst.one()]);
    }
    report.push(t.finish());

    let by_zero = |alpha: usize| -> Option<usize> {
        division::div_by_zero(&coefficient(alpha))
            .ok()
            .and_then(|q| inst.index_of(&q))
    };

    let mut t = Tally::new(inst, "division/by-zero-hits-target");
    for &alpha in &nonzero {
        let holds = by_zero(alpha).is_some_and(|q| {
            inst.mul(zero, q) == alpha
                && inst.mul(q, zero) == alpha
                && division::verify_quotient(inst.element(alpha), &backend.zero(), inst.element(q))
        }) && by_zero(alpha) == by_zero(alpha);
        t.case(holds, || vec![alpha]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/by-zero-injective");
    for &alpha in &nonzero {
        for &beta in &nonzero {
            let (qa, qb) = (by_zero(alpha), by_zero(beta));
            t.case(
                qa.is_some() && qb.is_some() && ((qa == qb) == (alpha == beta)),
                || vec![alpha, beta],
            );
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/by-zero-additivity");
    for &alpha in &nonzero {
        for &beta in &nonzero {
            // α + β = 0 has no base of its own; the bases must then cancel
            let sum = inst.add(alpha, beta);
            let expected = if sum == zero {
                Some(zero)
            } else {
                by_zero(sum)
            };
            let lhs = by_zero(alpha)
                .zip(by_zero(beta))
                .map(|(a, b)| inst.add(a, b));
            t.case(lhs.is_some() && lhs == expected, || vec![alpha, beta]);
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/by-zero-self-cancels");
    for &alpha in &nonzero {
        t.case(
            by_zero(alpha).is_some_and(|q| inst.sub(q, q) == zero),
            || vec![alpha],
        );
    }
    report.push(t.finish());

    // α* ranges over the index set; exactly α⁻¹ works for α ≠ 0, nothing for 0
    let mut t = Tally::new(inst, "division/reversible-bases");
    for &alpha in &scalars {
        let a = coefficient(alpha);
        let reversers: Vec<usize> = scalars
            .iter()
            .copied()
            .filter(|&c| division::reverses_with(&a, &coefficient(c)).unwrap_or(false))
            .collect();
        let holds = if alpha == zero {
            reversers.is_empty() && !division::is_reversible(&a)
        } else {
            let inverse = a
                .inverse()
                .ok()
                .and_then(|i| inst.index_of(&SElement::embed(i)));
            division::is_reversible(&a)
                && reversers.len() == 1
                && inverse == reversers.first().copied()
        };
        t.case(holds, || vec![alpha]);
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/zero-over-zero-indeterminate");
    let outcome = division::divide(inst.element(zero), inst.element(zero))?;
    t.case(outcome == DivisionOutcome::Indeterminate, || {
        vec![zero, zero]
    });
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/scalar-quotients-defined");
    for &k in &scalars {
        for &m in &scalars {
            if k == zero && m == zero {
                continue;
            }
            let outcome = division::divide(inst.element(k), inst.element(m))?;
            let holds = match outcome {
                DivisionOutcome::Quotient(q) => inst
                    .index_of(&q)
                    .is_some_and(|q| inst.mul(m, q) == k && inst.mul(q, m) == k),
                _ => false,
            };
            t.case(holds, || vec![k, m]);
        }
    }
    report.push(t.finish());

    let mut t = Tally::new(inst, "division/non-scalar-over-zero");
    for s in (0..n).filter(|&s| !inst.is_scalar(s)) {
        let outcome = division::divide(inst.element(s), inst.element(zero))?;
        let no_solution = (0..n).all(|q| inst.mul(zero, q) != s);
        t.case(
            outcome == DivisionOutcome::NoSolution && no_solution,
            || vec![s],
        );
    }
    report.push(t.finish());

    Ok(report)
}
