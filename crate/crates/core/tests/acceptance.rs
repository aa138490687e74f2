//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always shown.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use common::*;
use gradmod::corpus::{self, corpus_suspension, CorpusEntry};
use gradmod::homalg::{self, Depth, SyzygyOrder};
use gradmod::resolution::Measured;
use gradmod::{
    graded_betti, hilbert_series, minimal_free_resolution, GradedRing, HilbertSeries, LaurentPoly,
    ModulePresentation, Polynomial, PresentationFile,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn suspension_golden() -> Outcome {
    let expected = HilbertSeries::new(LaurentPoly::from_pairs([(0, 1), (1, 1)]), vec![1]);
    for p in [2, 3, 5] {
        let (m, c) = corpus_suspension(p).map_err(|e| e.to_string())?;
        ensure(hilbert_series(&m) == expected, || format!("p={p}: Hilbert series {}", hilbert_series(&m)))?;
        let res = minimal_free_resolution(&m);
        ensure(res.length() == 0 && res.module_shifts(0) == [0, 1, 1, 2], || {
            format!("p={p}: resolution {:?}", res.modules())
        })?;
        ensure(homalg::syzygy_order(&m) == SyzygyOrder::Infinity, || format!("p={p}: syzygy order"))?;
        ensure(c.validate().is_empty(), || format!("p={p}: complex invalid"))?;
        ensure(c.check_cm_assumption().unwrap().holds, || format!("p={p}: CM assumption"))?;
        let prof = c.exactness_profile().unwrap();
        ensure(prof.exact_everywhere && prof.positions.len() == 3, || format!("p={p}: not exact"))?;
    }
    Ok("p = 2, 3, 5".into())
}

fn auslander_buchsbaum() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA8);
    let mut by_pd = [0usize; 4];
    let n = 240;
    for k in 0..n {
        let r = 1 + k % 3;
        let p = [2, 3, 5][k % 3 * 0 + (k / 3) % 3];
        let ring = GradedRing::standard(p, r).unwrap();
        let m = random_nonzero_module(&ring, &mut rng, 3, 4);
        let Measured::Value(pd) = gradmod::projective_dimension(&m) else {
            return Err("nonzero module with no projective dimension".into());
        };
        let Depth::Finite(depth) = homalg::depth(&m) else {
            return Err("nonzero module of infinite depth".into());
        };
        ensure(pd + depth == r, || format!("pd {pd} + depth {depth} != {r} for {m:?}"))?;
        by_pd[pd] += 1;
    }
    Ok(format!("{n} presentations; projective dimensions 0..3: {by_pd:?}"))
}

fn complete_intersections() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    let mut count = 0;
    for r in 1..=3 {
        for c in 1..=r {
            for _ in 0..4 {
                let p = [2, 3, 5][rng.gen_range(0..3)];
                let ring = GradedRing::standard(p, r).unwrap();
                let exps: Vec<u32> = (0..c).map(|_| rng.gen_range(1..=3)).collect();
                let (m, forms) = corpus::complete_intersection(&ring, &exps, rng.gen()).unwrap();
                let free = ModulePresentation::free(&ring, vec![0]);
                ensure(homalg::is_regular_sequence(&free, &forms).unwrap(), || format!("{forms:?} not regular"))?;
                ensure(homalg::depth(&m) == Depth::Finite(r - c), || format!("depth of R/{exps:?} over r={r}"))?;
                ensure(gradmod::projective_dimension(&m) == Measured::Value(c), || format!("projdim of R/{exps:?}"))?;
                let ranks = graded_betti(&m).ranks();
                let want: Vec<usize> = (0..=c).map(|i| binomial(c, i)).collect();
                ensure(ranks == want, || format!("Betti ranks {ranks:?}, expected {want:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} complete intersections, degrees up to 6"))
}

fn corpus_entries() -> Vec<CorpusEntry> {
    corpus::corpus_standard()
}

fn cm_and_duality(entries: &[CorpusEntry]) -> Outcome {
    let mut cm_entries = 0;
    for e in entries {
        let r = e.ring().num_vars();
        let support = homalg::ext_support(&e.module);
        for i in 0..=r {
            let rule = support.is_empty() || support == [i];
            ensure(homalg::is_cm_of_projdim(&e.module, i) == rule, || format!("{}: CM detector at i={i}", e.id))?;
        }
        if let [i] = support[..] {
            cm_entries += 1;
            let n = homalg::cm_dual(&e.module, i).map_err(|x| format!("{}: {x}", e.id))?;
            let back = homalg::cm_dual(&n, i).map_err(|x| format!("{}: {x}", e.id))?;
            ensure(hilbert_series(&back) == hilbert_series(&e.module), || format!("{}: Hilbert series after round trip", e.id))?;
            ensure(graded_betti(&back) == graded_betti(&e.module), || format!("{}: Betti table after round trip", e.id))?;
        }
    }
    Ok(format!("{} corpus entries, {cm_entries} Cohen–Macaulay", entries.len()))
}

fn syzygy_oracle(entries: &[CorpusEntry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E);
    let ring = GradedRing::standard(2, 2).unwrap();
    let mut modules: Vec<(String, ModulePresentation)> = (0..60)
        .map(|k| (format!("random #{k}"), random_module(&ring, &mut rng, 3, 3)))
        .collect();
    modules.extend(entries.iter().map(|e| (e.id.to_string(), e.module.clone())));
    // im d_j = coker d_{j+1} is a j-th syzygy; over r = 3 this reaches order 2
    let ring3 = GradedRing::standard(3, 3).unwrap();
    for k in 0..12 {
        let ideal: Vec<Polynomial> = (0..3)
            .map(|_| {
                let d = 2 * rng.gen_range(1..=2);
                random_poly(&ring3, &mut rng, d, 3)
            })
            .collect();
        let n = ModulePresentation::cyclic(&ring3, 0, &ideal).unwrap();
        let res = minimal_free_resolution(&n);
        for j in 1..res.modules().len().saturating_sub(1) {
            let m = ModulePresentation::new(&ring3, res.module_shifts(j).to_vec(), res.differential(j + 1).to_vec()).unwrap();
            ensure(homalg::syzygy_order(&m).at_least(j), || format!("syzygy module {j} of random #{k}"))?;
            modules.push((format!("syzygy {j} of r=3 random #{k}"), m));
        }
    }
    let mut tally = std::collections::BTreeMap::new();
    for (name, m) in &modules {
        let order = homalg::syzygy_order(m);
        let dd = homalg::double_dual(m);
        ensure(order.at_least(1) == dd.injective, || format!("{name}: order {order}, torsion-free {}", dd.injective))?;
        ensure(order.at_least(2) == dd.bijective, || format!("{name}: order {order}, reflexive {}", dd.bijective))?;
        *tally.entry(order.to_string()).or_insert(0) += 1;
    }
    Ok(format!("{} modules; syzygy orders {tally:?}", modules.len()))
}

fn tensor_products() -> Outcome {
    let ids = ["free:r=1,shifts=0/1", "k:r=1", "m:r=2", "suspension:p=3"];
    let mut pairs = 0;
    for (i, a) in ids.iter().enumerate() {
        for b in &ids[i..] {
            let x = corpus::lookup(a).unwrap();
            let y = corpus::lookup(b).unwrap();
            let t = homalg::tensor_external(&x.module, &y.module).unwrap();
            let (sx, sy, st) = (homalg::syzygy_order(&x.module), homalg::syzygy_order(&y.module), homalg::syzygy_order(&t));
            ensure(st == sx.min(sy), || format!("{a} ⊗ {b}: {st} vs min({sx}, {sy})"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn crosscheck() -> Outcome {
    let mut ids: Vec<String> = [2, 3, 5].iter().map(|p| format!("suspension:p={p}")).collect();
    ids.extend([2, 3, 5].iter().map(|p| format!("tensor(suspension:p={p} & suspension:p={p})")));
    ids.push("k-degenerate".into());
    for id in &ids {
        let e = corpus::lookup(id).unwrap();
        let c = e.complex.as_ref().ok_or_else(|| format!("{id}: no complex"))?;
        ensure(c.validate().is_empty(), || format!("{id}: invalid"))?;
        ensure(c.check_cm_assumption().unwrap().holds, || format!("{id}: CM assumption fails"))?;
        let x = c.exactness_crosscheck().map_err(|err| format!("{id}: {err}"))?;
        ensure(x.rows.len() == e.ring().num_vars() + 1, || format!("{id}: rows"))?;
        ensure(x.agreement, || format!("{id}: discrepancies at j = {:?}", x.discrepancies()))?;
    }
    Ok(format!("{} complexes", ids.len()))
}

fn structural_bounds(entries: &[CorpusEntry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0);
    let mut modules: Vec<ModulePresentation> = entries.iter().map(|e| e.module.clone()).collect();
    for k in 0..60 {
        let ring = GradedRing::standard([2, 3, 5][k % 3], 1 + k % 3).unwrap();
        modules.push(random_module(&ring, &mut rng, 3, 4));
    }
    for m in &modules {
        let r = m.ring().num_vars();
        let s = homalg::summarize(m);
        if let Measured::Value(pd) = s.projective_dimension {
            ensure(pd <= r, || format!("resolution of length {pd} > {r}"))?;
        }
        if let SyzygyOrder::Finite(j) = s.syzygy_order {
            ensure(j < r, || format!("finite syzygy order {j} with r = {r}"))?;
        }
        if let (Depth::Finite(d), Measured::Value(dim)) = (s.depth, s.krull_dimension) {
            ensure(d <= dim && dim <= r, || format!("depth {d}, dim {dim}, r {r}"))?;
        }
    }
    Ok(format!("{} modules", modules.len()))
}

fn lambda_induction(entries: &[CorpusEntry]) -> Outcome {
    for e in entries {
        let l = homalg::lambda_induce(&e.module);
        let r = e.ring().num_vars();
        ensure(homalg::syzygy_order(&l) == homalg::syzygy_order(&e.module), || format!("{}: syzygy order", e.id))?;
        for i in 0..=r {
            ensure(
                homalg::is_cm_of_projdim(&l, i) == homalg::is_cm_of_projdim(&e.module, i),
                || format!("{}: CM at {i}", e.id),
            )?;
        }
    }
    Ok(format!("{} corpus entries", entries.len()))
}

fn squared_sequences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x92);
    let (mut regular, mut not_regular) = (0, 0);
    for k in 0..30 {
        let r = 2 + k % 2;
        let ring = GradedRing::uniform(2, r, 1).unwrap();
        let m = random_nonzero_module(&ring, &mut rng, 2, 3);
        let len = rng.gen_range(1..=r);
        let seq: Vec<Polynomial> = (0..len)
            .map(|_| loop {
                let f = random_poly(&ring, &mut rng, 1, r);
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let squares: Vec<Polynomial> = seq.iter().map(|f| f.pow(2)).collect();
        let a = homalg::is_regular_sequence(&m, &seq).unwrap();
        let b = homalg::is_regular_sequence(&m, &squares).unwrap();
        ensure(a == b, || format!("{seq:?} regular: {a}, squares: {b}"))?;
        if a {
            regular += 1;
        } else {
            not_regular += 1;
        }
    }
    Ok(format!("30 samples, {regular} regular, {not_regular} not"))
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn determinism() -> Outcome {
    let runs: Vec<Vec<String>> = vec![
        vec!["resolve".into(), fixture("m.mod")],
        vec!["betti".into(), fixture("m.mod")],
        vec!["hilbert".into(), fixture("m.mod")],
        vec!["depth".into(), fixture("m.mod")],
        vec!["dim".into(), fixture("m.mod")],
        vec!["ext".into(), fixture("m.mod")],
        vec!["syzord".into(), fixture("m.mod")],
        vec!["cm-check".into(), fixture("m.mod")],
        vec!["resolve".into(), fixture("koszul.mod"), "--module".into(), "k".into()],
        vec!["ext".into(), fixture("koszul.mod"), "--module".into(), "k".into(), "--index".into(), "2".into()],
        vec!["cm-check".into(), fixture("koszul.mod"), "--complex".into(), "Kos".into()],
        vec!["syzord".into(), fixture("suspension.mod"), "--module".into(), "M".into()],
        vec!["hilbert".into(), fixture("suspension.mod"), "--module".into(), "M".into()],
        vec!["ab-check".into(), fixture("suspension.mod"), "--complex".into(), "C".into()],
        vec!["corpus".into(), "--corpus".into(), "suspension:p=3".into()],
    ];
    for args in &runs {
        let go = || Command::new(env!("CARGO_BIN_EXE_gradmod")).args(args).output().unwrap();
        let (a, b) = (go(), go());
        ensure(a.status.success(), || format!("{args:?} failed: {}", String::from_utf8_lossy(&a.stderr)))?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || format!("{args:?} is not deterministic"))?;
    }
    for name in ["suspension.mod", "koszul.mod", "m.mod"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let once = PresentationFile::parse(&text).map_err(|e| e.to_string())?.print();
        let twice = PresentationFile::parse(&once).unwrap().print();
        ensure(once == twice, || format!("{name} does not round-trip"))?;
    }
    Ok(format!("{} invocations, 3 fixtures", runs.len()))
}

fn main() {
    let start = Instant::now();
    let entries = corpus_entries();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("suspension golden test", Box::new(suspension_golden)),
        ("Auslander–Buchsbaum", Box::new(auslander_buchsbaum)),
        ("complete intersections", Box::new(complete_intersections)),
        ("CM detection and duality", Box::new(|| cm_and_duality(&entries))),
        ("syzygy order vs double dual", Box::new(|| syzygy_oracle(&entries))),
        ("external tensor products", Box::new(tensor_products)),
        ("exactness vs syzygy order", Box::new(crosscheck)),
        ("structural bounds", Box::new(|| structural_bounds(&entries))),
        ("exterior induction", Box::new(|| lambda_induction(&entries))),
        ("squared sequences, p = 2", Box::new(squared_sequences)),
        ("determinism and round trip", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("acceptance: {} of {} criteria passed in {total:.2}s", criteria.len() - failed, criteria.len());
    if failed > 0 || total >= 60.0 {
        std::process::exit(1);
    }
}
