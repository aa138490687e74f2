//! Built-in example modules and complexes, addressed by identifiers such as
//! `k:r=2`, `ci:r=3,exps=1/2,seed=7`, `lambda(m:r=2)` or
//! `tensor(suspension:p=3 & suspension:p=3)`. Every entry carries expected
//! facts computed from closed forms, each labelled with where it comes from.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complexes::{tensor_complexes, Augmentation, CochainComplex};
use crate::error::{Error, Result};
use crate::format::PresentationFile;
use crate::hilbert::{HilbertSeries, LaurentPoly};
use crate::homalg::{self, LambdaAlgebraSpec, SyzygyOrder};
use crate::module::{image_module, ModulePresentation};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::{graded_betti, hilbert_series, BettiTable};
use crate::ring::GradedRing;
use crate::vector::Vector;

pub const DEFAULT_P: u64 = 3;
pub const DEFAULT_R: usize = 2;

/// Where an expected fact comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A worked example in the literature the corpus reproduces.
    Reference,
    /// Immediate from the construction.
    Immediate,
    /// A closed form computed independently of the engine.
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FactValue {
    Hilbert(HilbertSeries),
    Betti(BettiTable),
    SyzygyOrder(SyzygyOrder),
    Exactness { exact_everywhere: bool, max_j: usize },
}

impl FactValue {
    pub fn name(&self) -> &'static str {
        match self {
            FactValue::Hilbert(_) => "hilbert",
            FactValue::Betti(_) => "betti",
            FactValue::SyzygyOrder(_) => "syzygy-order",
            FactValue::Exactness { .. } => "exactness",
        }
    }

    fn to_json(&self) -> Value {
        match self {
            FactValue::Hilbert(h) => json!(h.record()),
            FactValue::Betti(b) => json!(b.records()),
            FactValue::SyzygyOrder(s) => json!(s),
            FactValue::Exactness {
                exact_everywhere,
                max_j,
            } => json!({ "exact_everywhere": exact_everywhere, "max_j": max_j }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExpectedFact {
    pub value: FactValue,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactCheck {
    pub fact: &'static str,
    pub provenance: Provenance,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: CorpusId,
    pub module: ModulePresentation,
    /// Augmented complex whose augmentation is `module`.
    pub complex: Option<CochainComplex>,
    pub expected: Vec<ExpectedFact>,
}

impl CorpusEntry {
    pub fn ring(&self) -> &GradedRing {
        self.module.ring()
    }

    pub fn fact(&self, name: &str) -> Option<&ExpectedFact> {
        self.expected.iter().find(|f| f.value.name() == name)
    }

    /// Recompute every expected fact with the engine.
    pub fn check(&self) -> Vec<FactCheck> {
        self.expected
            .iter()
            .map(|f| {
                let actual = match &f.value {
                    FactValue::Hilbert(_) => FactValue::Hilbert(hilbert_series(&self.module)),
                    FactValue::Betti(_) => FactValue::Betti(graded_betti(&self.module)),
                    FactValue::SyzygyOrder(_) => FactValue::SyzygyOrder(homalg::syzygy_order(&self.module)),
                    FactValue::Exactness { .. } => match self.complex.as_ref().map(|c| c.exactness_profile()) {
                        Some(Ok(p)) => FactValue::Exactness {
                            exact_everywhere: p.exact_everywhere,
                            max_j: p.max_j,
                        },
                        _ => FactValue::Exactness {
                            exact_everywhere: false,
                            max_j: usize::MAX,
                        },
                    },
                };
                FactCheck {
                    fact: f.value.name(),
                    provenance: f.provenance,
                    expected: f.value.to_json(),
                    actual: actual.to_json(),
                    ok: actual == f.value,
                }
            })
            .collect()
    }

    /// The entry as a presentation file: module `M`, and when present the
    /// complex `C` on modules `K0, K1, ...` augmented by `M`.
    pub fn to_file(&self) -> PresentationFile {
        let mut file = PresentationFile::new(self.ring());
        file.add_module("M", self.module.clone()).expect("fresh name");
        if let Some(c) = &self.complex {
            let names: Vec<String> = (0..c.modules().len()).map(|i| format!("K{i}")).collect();
            for (n, m) in names.iter().zip(c.modules()) {
                file.add_module(n, m.clone()).expect("fresh name");
            }
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            file.add_complex("C", &refs, Some("M"), c.clone()).expect("consistent complex");
        }
        file
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub p: Option<u64>,
    pub r: Option<usize>,
    pub shifts: Option<Vec<i32>>,
    pub exps: Option<Vec<u32>>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusId {
    Base { name: String, params: Params },
    Lambda(Box<CorpusId>),
    Tensor(Box<CorpusId>, Box<CorpusId>),
}

fn slash<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join("/")
}

impl fmt::Display for CorpusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusId::Base { name, params } => {
                let mut parts = Vec::new();
                if let Some(p) = params.p {
                    parts.push(format!("p={p}"));
                }
                if let Some(r) = params.r {
                    parts.push(format!("r={r}"));
                }
                if let Some(s) = &params.shifts {
                    parts.push(format!("shifts={}", slash(s)));
                }
                if let Some(e) = &params.exps {
                    parts.push(format!("exps={}", slash(e)));
                }
                if let Some(s) = params.seed {
                    parts.push(format!("seed={s}"));
                }
                if parts.is_empty() {
                    write!(f, "{name}")
                } else {
                    write!(f, "{name}:{}", parts.join(","))
                }
            }
            CorpusId::Lambda(inner) => write!(f, "lambda({inner})"),
            CorpusId::Tensor(a, b) => write!(f, "tensor({a} & {b})"),
        }
    }
}

const NAMES: [&str; 7] = ["free", "k", "m", "ci", "RG", "suspension", "k-degenerate"];

fn unknown(id: &str, why: impl fmt::Display) -> Error {
    Error::UnknownCorpus(format!("`{id}`: {why}"))
}

fn list<T: std::str::FromStr>(id: &str, key: &str, v: &str) -> Result<Vec<T>> {
    v.split('/')
        .map(|x| x.trim().parse().map_err(|_| unknown(id, format!("bad value for `{key}`"))))
        .collect()
}

impl CorpusId {
    pub fn parse(text: &str) -> Result<CorpusId> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix("lambda(").and_then(|s| s.strip_suffix(')')) {
            return Ok(CorpusId::Lambda(Box::new(CorpusId::parse(inner)?)));
        }
        if let Some(inner) = t.strip_prefix("tensor(").and_then(|s| s.strip_suffix(')')) {
            let mut depth = 0i32;
            let mut split = None;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    '&' if depth == 0 => {
                        if split.is_some() {
                            return Err(unknown(t, "tensor takes two arguments"));
                        }
                        split = Some(i);
                    }
                    _ => {}
                }
            }
            let Some(i) = split else {
                return Err(unknown(t, "expected `tensor(A & B)`"));
            };
            return Ok(CorpusId::Tensor(
                Box::new(CorpusId::parse(&inner[..i])?),
                Box::new(CorpusId::parse(&inner[i + 1..])?),
            ));
        }
        let (name, rest) = match t.split_once(':') {
            Some((n, r)) => (n.trim(), Some(r)),
            None => (t, None),
        };
        if !NAMES.contains(&name) {
            return Err(unknown(t, format!("no entry named `{name}`")));
        }
        let mut params = Params::default();
        for kv in rest.into_iter().flat_map(|r| r.split(',')) {
            let Some((k, v)) = kv.split_once('=') else {
                return Err(unknown(t, format!("expected `key=value`, found `{kv}`")));
            };
            let (k, v) = (k.trim(), v.trim());
            let bad = || unknown(t, format!("bad value for `{k}`"));
            let fresh = match k {
                "p" => params.p.replace(v.parse().map_err(|_| bad())?).is_none(),
                "r" => params.r.replace(v.parse().map_err(|_| bad())?).is_none(),
                "shifts" => params.shifts.replace(list(t, k, v)?).is_none(),
                "exps" => params.exps.replace(list(t, k, v)?).is_none(),
                "seed" => params.seed.replace(v.parse().map_err(|_| bad())?).is_none(),
                _ => return Err(unknown(t, format!("unknown parameter `{k}`"))),
            };
            if !fresh {
                return Err(unknown(t, format!("repeated parameter `{k}`")));
            }
        }
        let allowed: &[&str] = match name {
            "free" => &["p", "r", "shifts"],
            "ci" => &["p", "r", "exps", "seed"],
            "suspension" | "k-degenerate" => &["p"],
            _ => &["p", "r"],
        };
        let given = [
            ("r", params.r.is_some()),
            ("shifts", params.shifts.is_some()),
            ("exps", params.exps.is_some()),
            ("seed", params.seed.is_some()),
        ];
        if let Some((k, _)) = given.iter().find(|(k, g)| *g && !allowed.contains(k)) {
            return Err(unknown(t, format!("`{name}` does not take `{k}`")));
        }
        Ok(CorpusId::Base {
            name: name.to_string(),
            params,
        })
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn one_plus_q_pow(r: usize) -> LaurentPoly {
    LaurentPoly::from_pairs((0..=r).map(|k| (k as i32, binomial(r, k) as i64)))
}

fn fact(value: FactValue, provenance: Provenance) -> ExpectedFact {
    ExpectedFact { value, provenance }
}

/// The suspension example over `F_p[t]` with `t` in degree 2: the module
/// `M = ker(δ0)` for `δ0: R^4 -> k`, `(a0, b0, a1, b1) -> (1, -1, 0, 0)`,
/// with `K0` free on generators of degrees `0, 0, 1, 1`.
pub fn corpus_suspension(p: u64) -> Result<(ModulePresentation, CochainComplex)> {
    let ring = GradedRing::standard(p, 1)?;
    let field = ring.field();
    let k0 = ModulePresentation::free(&ring, vec![0, 0, 1, 1]);
    let k1 = ModulePresentation::residue_field(&ring);
    let one = Vector::basis(0, 1);
    let delta = vec![one.clone(), one.scale(field, field.neg(1)), Vector::zero(), Vector::zero()];
    let e = |i: usize| Vector::basis(i, 1);
    let t = Polynomial::var(&ring, 0);
    let iota = vec![
        e(0).add(field, &e(1)),
        e(2),
        e(3),
        e(0).mul_poly(field, &t),
    ];
    let m = ModulePresentation::free(&ring, vec![0, 1, 1, 2]);
    let c = CochainComplex::new(
        &ring,
        vec![k0, k1],
        vec![delta],
        Some(Augmentation {
            module: m.clone(),
            map: iota,
        }),
    )?;
    Ok((m, c))
}

/// Quotient of `R` by `t_i^{e_i}` plus seeded terms of the same degree that
/// involve a later variable; the pure powers stay leading, so the sequence
/// is regular.
pub fn complete_intersection(ring: &GradedRing, exps: &[u32], seed: u64) -> Result<(ModulePresentation, Vec<Polynomial>)> {
    let r = ring.num_vars();
    if exps.len() > r || exps.contains(&0) {
        return Err(Error::Precondition(format!(
            "need at most {r} positive exponents, got {exps:?}"
        )));
    }
    if ring.var_degrees().iter().any(|&d| d != ring.var_degrees()[0]) {
        return Err(Error::Precondition("complete intersections need equal variable degrees".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ring.characteristic();
    let mut forms = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        let mut terms = vec![(pure_power(ring, i, e), 1u64)];
        for mono in monomials_of_total_degree(ring, e) {
            if mono.support().any(|v| v > i) && rng.gen_bool(0.5) {
                terms.push((mono, rng.gen_range(1..p)));
            }
        }
        forms.push(Polynomial::from_terms(ring, terms));
    }
    Ok((ModulePresentation::cyclic(ring, 0, &forms)?, forms))
}

fn pure_power(ring: &GradedRing, i: usize, e: u32) -> Monomial {
    let mut exps = vec![0u16; ring.num_vars()];
    exps[i] = e as u16;
    Monomial::from_exponents(&exps, ring.var_degrees())
}

fn monomials_of_total_degree(ring: &GradedRing, e: u32) -> Vec<Monomial> {
    fn go(r: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == r {
            cur.push(left as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=left {
            cur.push(a as u16);
            go(r, i + 1, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if ring.num_vars() > 0 {
        go(ring.num_vars(), 0, e, &mut Vec::new(), &mut out);
    }
    out.into_iter()
        .map(|x| Monomial::from_exponents(&x, ring.var_degrees()))
        .collect()
}

pub fn lookup(text: &str) -> Result<CorpusEntry> {
    build(&CorpusId::parse(text)?)
}

pub fn build(id: &CorpusId) -> Result<CorpusEntry> {
    use FactValue as F;
    use Provenance::*;
    match id {
        CorpusId::Base { name, params } => {
            let p = params.p.unwrap_or(DEFAULT_P);
            let r = params.r.unwrap_or(DEFAULT_R);
            let ring = GradedRing::standard(p, if matches!(name.as_str(), "suspension" | "k-degenerate") { 1 } else { r })?;
            let degs = ring.var_degrees().to_vec();
            let r = ring.num_vars();
            let d = degs.first().copied().unwrap_or(2) as i32;
            let entry = |module, complex, expected| CorpusEntry {
                id: id.clone(),
                module,
                complex,
                expected,
            };
            match name.as_str() {
                "free" => {
                    let shifts = params.shifts.clone().unwrap_or_else(|| vec![0]);
                    let m = ModulePresentation::free(&ring, shifts.clone());
                    Ok(entry(
                        m,
                        None,
                        vec![
                            fact(F::Hilbert(HilbertSeries::free(&shifts, &degs)), Immediate),
                            fact(F::Betti(BettiTable::from_shifts(&[shifts])), Immediate),
                            fact(F::SyzygyOrder(SyzygyOrder::Infinity), Immediate),
                        ],
                    ))
                }
                "k" => {
                    if r == 0 {
                        return Err(unknown(&id.to_string(), "needs r >= 1"));
                    }
                    let betti: Vec<((usize, i32), usize)> =
                        (0..=r).map(|i| ((i, d * i as i32), binomial(r, i))).collect();
                    Ok(entry(
                        ModulePresentation::residue_field(&ring),
                        None,
                        vec![
                            fact(F::Hilbert(HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![])), Immediate),
                            fact(F::Betti(BettiTable::from_entries(&betti)), ClosedForm),
                            fact(F::SyzygyOrder(SyzygyOrder::Finite(0)), ClosedForm),
                        ],
                    ))
                }
                "m" => {
                    if r == 0 {
                        return Err(unknown(&id.to_string(), "needs r >= 1"));
                    }
                    let gens: Vec<Vector> = (0..r)
                        .map(|i| Vector::from_coordinates(&[Polynomial::var(&ring, i)]))
                        .collect();
                    let m = image_module(&ring, &[0], &gens)?.0;
                    let betti: Vec<((usize, i32), usize)> =
                        (0..r).map(|i| ((i, d * (i as i32 + 1)), binomial(r, i + 1))).collect();
                    let hs = HilbertSeries::free(&[0], &degs)
                        .sub(&HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![]));
                    let order = if r >= 2 { SyzygyOrder::Finite(1) } else { SyzygyOrder::Infinity };
                    Ok(entry(
                        m,
                        None,
                        vec![
                            fact(F::Hilbert(hs), Immediate),
                            fact(F::Betti(BettiTable::from_entries(&betti)), ClosedForm),
                            fact(F::SyzygyOrder(order), ClosedForm),
                        ],
                    ))
                }
                "ci" => {
                    let exps = params.exps.clone().unwrap_or_else(|| vec![1, 2]);
                    let (m, _) = complete_intersection(&ring, &exps, params.seed.unwrap_or(0))?;
                    let mut num = LaurentPoly::monomial(0, 1);
                    for &e in &exps {
                        num = num.mul(&LaurentPoly::one_minus(e * d as u32));
                    }
                    let mut betti = std::collections::BTreeMap::new();
                    for mask in 0u64..(1 << exps.len()) {
                        let chosen = (0..exps.len()).filter(|i| mask >> i & 1 == 1);
                        let deg: i32 = chosen.clone().map(|i| exps[i] as i32 * d).sum();
                        *betti.entry((chosen.count(), deg)).or_insert(0) += 1;
                    }
                    let order = if exps.is_empty() { SyzygyOrder::Infinity } else { SyzygyOrder::Finite(0) };
                    Ok(entry(
                        m,
                        None,
                        vec![
                            fact(F::Hilbert(HilbertSeries::new(num, degs.clone())), ClosedForm),
                            fact(F::Betti(BettiTable(betti)), ClosedForm),
                            fact(F::SyzygyOrder(order), ClosedForm),
                        ],
                    ))
                }
                "RG" => {
                    let shifts = LambdaAlgebraSpec::new(r).degrees();
                    let m = ModulePresentation::free(&ring, shifts.clone());
                    Ok(entry(
                        m,
                        None,
                        vec![
                            fact(F::Hilbert(HilbertSeries::new(one_plus_q_pow(r), degs.clone())), Reference),
                            fact(F::Betti(BettiTable::from_shifts(&[shifts])), Reference),
                            fact(F::SyzygyOrder(SyzygyOrder::Infinity), Reference),
                        ],
                    ))
                }
                "suspension" => {
                    let (m, c) = corpus_suspension(p)?;
                    Ok(entry(
                        m,
                        Some(c),
                        vec![
                            fact(F::Hilbert(HilbertSeries::new(one_plus_q_pow(2), degs.clone())), Reference),
                            fact(F::Betti(BettiTable::from_shifts(&[vec![0, 1, 1, 2]])), Reference),
                            fact(F::SyzygyOrder(SyzygyOrder::Infinity), Reference),
                            fact(F::Exactness { exact_everywhere: true, max_j: 3 }, Reference),
                        ],
                    ))
                }
                "k-degenerate" => {
                    let k = ModulePresentation::residue_field(&ring);
                    let c = CochainComplex::new(
                        &ring,
                        vec![ModulePresentation::zero(&ring)],
                        vec![],
                        Some(Augmentation {
                            module: k.clone(),
                            map: vec![Vector::zero()],
                        }),
                    )?;
                    Ok(entry(
                        k,
                        Some(c),
                        vec![
                            fact(F::Hilbert(HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![])), Immediate),
                            fact(F::SyzygyOrder(SyzygyOrder::Finite(0)), ClosedForm),
                            fact(F::Exactness { exact_everywhere: false, max_j: 0 }, Immediate),
                        ],
                    ))
                }
                _ => Err(unknown(&id.to_string(), "no such entry")),
            }
        }
        CorpusId::Lambda(inner) => {
            let base = build(inner)?;
            let r = base.ring().num_vars();
            let module = homalg::lambda_induce(&base.module);
            let expected = base
                .expected
                .iter()
                .filter_map(|f| {
                    let value = match &f.value {
                        F::Hilbert(h) => F::Hilbert(h.mul_laurent(&one_plus_q_pow(r))),
                        F::Betti(b) => F::Betti(
                            (0..=r).fold(BettiTable::default(), |acc, k| {
                                (0..binomial(r, k)).fold(acc, |a, _| a.add(&b.shift(k as i32)))
                            }),
                        ),
                        F::SyzygyOrder(s) => F::SyzygyOrder(*s),
                        F::Exactness { .. } => return None,
                    };
                    Some(fact(value, ClosedForm))
                })
                .collect();
            Ok(CorpusEntry {
                id: id.clone(),
                module,
                complex: None,
                expected,
            })
        }
        CorpusId::Tensor(a, b) => {
            let (x, y) = (build(a)?, build(b)?);
            let module = homalg::tensor_external(&x.module, &y.module)?;
            let complex = match (&x.complex, &y.complex) {
                (Some(c1), Some(c2)) => Some(tensor_complexes(c1, c2)?),
                _ => None,
            };
            let mut expected = Vec::new();
            let pair = |n: &str| (x.fact(n).map(|f| &f.value), y.fact(n).map(|f| &f.value));
            if let (Some(F::Hilbert(h1)), Some(F::Hilbert(h2))) = pair("hilbert") {
                expected.push(fact(F::Hilbert(h1.mul(h2)), ClosedForm));
            }
            if let (Some(F::Betti(b1)), Some(F::Betti(b2))) = pair("betti") {
                expected.push(fact(F::Betti(b1.convolve(b2)), ClosedForm));
            }
            if let (Some(F::SyzygyOrder(s1)), Some(F::SyzygyOrder(s2))) = pair("syzygy-order") {
                expected.push(fact(F::SyzygyOrder(*s1.min(s2)), ClosedForm));
            }
            if let (
                Some(F::Exactness { exact_everywhere: true, .. }),
                Some(F::Exactness { exact_everywhere: true, .. }),
                Some(c),
            ) = (pair("exactness").0, pair("exactness").1, &complex)
            {
                expected.push(fact(
                    F::Exactness {
                        exact_everywhere: true,
                        max_j: c.modules().len() + 1,
                    },
                    ClosedForm,
                ));
            }
            Ok(CorpusEntry {
                id: id.clone(),
                module,
                complex,
                expected,
            })
        }
    }
}

/// Identifiers of the standard corpus.
pub fn standard_ids() -> Vec<String> {
    let bases = [
        "free:shifts=0",
        "free:shifts=0/1/1/2",
        "free:r=3,shifts=-2/0/3",
        "k:r=1",
        "k:r=2",
        "k:r=3",
        "m:r=2",
        "m:r=3",
        "ci:exps=1/2",
        "ci:r=3,exps=1/1",
        "ci:r=3,exps=2/1/2,seed=5",
        "RG:r=1",
        "RG:r=2",
        "suspension:p=2",
        "suspension:p=3",
        "suspension:p=5",
        "k-degenerate",
    ];
    let mut ids: Vec<String> = bases.iter().map(|s| s.to_string()).collect();
    for b in ["free:shifts=0/1/1/2", "k:r=2", "m:r=2", "ci:exps=1/2", "RG:r=2", "suspension:p=3", "k:r=1"] {
        ids.push(format!("lambda({b})"));
    }
    for (a, b) in [
        ("m:r=2", "free:r=1,shifts=0"),
        ("k:r=1", "k:r=1"),
        ("k:r=2", "k:r=1"),
        ("m:r=2", "k:r=1"),
        ("suspension:p=2", "suspension:p=2"),
        ("suspension:p=3", "suspension:p=3"),
        ("suspension:p=5", "suspension:p=5"),
        ("suspension:p=3", "m:r=2"),
    ] {
        ids.push(format!("tensor({a} & {b})"));
    }
    ids
}

pub fn corpus_standard() -> Vec<CorpusEntry> {
    standard_ids()
        .iter()
        .map(|id| lookup(id).expect("standard corpus ids are valid"))
        .collect()
}
