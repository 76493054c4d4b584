//! Acceptance suite: one PASS/FAIL line per criterion, with its time budget.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use modsym::branching::{
    induce_chain_to_rouquier_with, is_rouquier, lower_neighbours, restrict_chain_to_principal, Charges,
    SemisimpleChain,
};
use modsym::complexity::{complexity_of, wreath_block_complexity};
use modsym::jordan::{
    binomial, hook_dim, jordan_tensor, jordan_type_of_nilpotent, lem1_count, lem1_oracle, lem2_dim, lem2_oracle,
    nabla_restriction, nabla_restriction_oracle, tensor_nilpotent,
};
use modsym::rank_variety::{fixtures, projective_points};
use modsym::weight_two::epsilon_flip_check;
use modsym::{
    core_by_rim_hooks_oracle, label_of, p_core, p_weight, partition_of_label, partitions_of, BlockId,
    ElemAbelianModule, FpMatrix, Partition, Prime,
};

type Outcome = Result<String, String>;

/// Number, name, time budget in seconds and check.
type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Weight-two blocks of degree at most `4p`, keyed by degree.
fn weight_two_blocks(q: Prime) -> Vec<BlockId> {
    let n = q.get();
    let mut out = Vec::new();
    for m in 0..=2 * n {
        for core in partitions_of(m) {
            if p_weight(&core, q) == 0 {
                out.push(BlockId::new(q, core, 2).unwrap());
            }
        }
    }
    out
}

fn small_pairs(q: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 2..=q - 2 {
        for b in 2..=a {
            if a + b <= q {
                v.push((a, b));
            }
        }
    }
    v
}

fn c1_cores() -> Outcome {
    let mut count = 0;
    for q in [2, 3, 5, 7] {
        let q = p(q);
        for n in 0..=20 {
            for lam in partitions_of(n) {
                let oracle = core_by_rim_hooks_oracle(&lam, q);
                ensure((p_core(&lam, q), p_weight(&lam, q)) == oracle, || format!("{lam} at p={q}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} partitions"))
}

fn c2_tensor() -> Outcome {
    let mut count = 0;
    for q in [3, 5, 7] {
        let q = p(q);
        for x in 1..q.get() {
            for y in 1..q.get() {
                let closed = jordan_tensor(x, y, q).map_err(|e| e.to_string())?;
                let explicit = jordan_type_of_nilpotent(&tensor_nilpotent(x, y, q));
                ensure(closed == explicit, || format!("J{x} x J{y} at p={q}: {closed} vs {explicit}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} products"))
}

fn c3_nabla() -> Outcome {
    let mut count = 0;
    for q in [5, 7, 11] {
        let q = p(q);
        for i in 1..q.get() {
            for j in 1..=i {
                let closed = nabla_restriction(i, j, q).map_err(|e| e.to_string())?;
                let brute = nabla_restriction_oracle(i, j, q).map_err(|e| e.to_string())?;
                ensure(closed == brute, || format!("({i},{j}) at p={q}: {closed} vs {brute}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} restrictions"))
}

fn c4_counts() -> Outcome {
    let q5 = p(5);
    ensure(lem1_count(2, 2, q5) == Ok(6) && lem2_dim(2, 2, q5) == Ok(22), || "spot value at (2,2,5)".into())?;
    let mut count = 0;
    for q in [5, 7, 11] {
        let q = p(q);
        for (a, b) in small_pairs(q.get()) {
            let (n, n0) = (lem1_count(a, b, q), lem1_oracle(a, b, q));
            let (d, d0) = (lem2_dim(a, b, q), lem2_oracle(a, b, q));
            ensure(n.is_ok() && n == n0, || format!("count({a},{b}) at p={q}: {n:?} vs {n0:?}"))?;
            ensure(d.is_ok() && d == d0, || format!("dim({a},{b}) at p={q}: {d:?} vs {d0:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (a,b,p) triples"))
}

fn c5_obstruction() -> Outcome {
    let mut count = 0;
    for q in [5, 7, 11] {
        let q = p(q);
        for (a, b) in small_pairs(q.get()) {
            let n = lem1_count(a, b, q).map_err(|e| e.to_string())?;
            let d = lem2_dim(a, b, q).map_err(|e| e.to_string())?;
            ensure(n * q.get() > d, || format!("{n} <= {d}/{q} at ({a},{b})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} inequalities"))
}

fn c6_hooks() -> Outcome {
    let mut count = 0;
    for q in [3, 5, 7, 11, 13] {
        let qp = p(q);
        for b in 2..q as usize {
            let d = hook_dim(qp, b).map_err(|e| e.to_string())?;
            ensure(d == binomial(2 * q as usize - 2, q as usize - b), || format!("hook_dim({b}) at p={q}"))?;
            ensure(d % q as u128 != 0, || format!("p={q} divides {d}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} dimensions"))
}

fn c7_labels() -> Outcome {
    let (mut blocks, mut pairs, mut b_above_a) = (0, 0, 0);
    for q in [3, 5, 7] {
        let q = p(q);
        for block in weight_two_blocks(q) {
            let members = block.partitions();
            let mut seen = HashSet::new();
            for lam in &members {
                let l = label_of(lam, q).map_err(|e| e.to_string())?;
                ensure(l.block == block, || format!("{lam} labelled in the wrong block"))?;
                b_above_a += usize::from(l.b > l.a);
                ensure(seen.insert(l.pair()), || format!("label {l} repeated in {block}"))?;
                let back = partition_of_label(&block, l.a, l.b).map_err(|e| e.to_string())?;
                ensure(back == *lam, || format!("{l} inverts to {back}, not {lam}"))?;
            }
            blocks += 1;
            for pair in lower_neighbours(&block) {
                let r = epsilon_flip_check(&pair).map_err(|e| e.to_string())?;
                ensure(r.relabelled.is_empty(), || format!("{pair} relabels {:?}", r.relabelled))?;
                ensure(r.consistent, || format!("{pair}: flips {:?}", r.flips))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{blocks} blocks, {pairs} pairs, {b_above_a} labels with b > a"))
}

fn c8_weight_two() -> Outcome {
    let r = complexity_of(&Partition::new(vec![3, 1]).unwrap(), p(2)).map_err(|e| e.to_string())?;
    ensure(r.value.exact() == Some(2), || "(3,1) at p=2".into())?;
    let mut count = 0;
    for q in [3, 5, 7] {
        let q = p(q);
        let hook = Partition::hook(q.get(), q.get() - 1);
        for block in weight_two_blocks(q) {
            for lam in block.partitions().into_iter().filter(|l| l.is_p_regular(q)) {
                let r = complexity_of(&lam, q).map_err(|e| format!("{lam}: {e}"))?;
                let want = if lam == hook { 1 } else { 2 };
                ensure(r.value.exact() == Some(want), || format!("{lam} at p={q}: {}", r.value))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} simple modules"))
}

/// Core of a weight-`w` Rouquier block with charges spaced by `p(w-1)+1`.
fn rouquier_block(q: Prime, w: usize) -> BlockId {
    let n = q.get() as i64;
    let g = n * (w as i64 - 1) + 1;
    let c = (1 - g) * (n - 1) / 2;
    let points: Vec<i64> = (0..n).map(|i| i * g + c).collect();
    let core = Charges::from_points(q, &points).unwrap().core();
    BlockId::new(q, core, w).unwrap()
}

fn c9_rouquier() -> Outcome {
    let mut count = 0;
    for q in [5, 7] {
        let q = p(q);
        for w in 1..q.get() {
            let block = rouquier_block(q, w);
            ensure(is_rouquier(&block), || format!("{block} is not Rouquier"))?;
            for lam in block.partitions().into_iter().filter(|l| l.is_p_regular(q)) {
                let r = complexity_of(&lam, q).map_err(|e| format!("{lam}: {e}"))?;
                ensure(r.value.exact() == Some(w), || format!("{lam} in {block}: {}", r.value))?;
                count += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let q = p(*[5, 7, 11].choose(&mut rng).unwrap());
        let w = rng.gen_range(1..q.get());
        let mut parts = Vec::new();
        let mut left = w;
        while left > 0 {
            let a = rng.gen_range(1..=left);
            parts.push(a);
            left -= a;
        }
        let got = wreath_block_complexity(&parts, q).map_err(|e| e.to_string())?;
        ensure(got == w, || format!("{parts:?}: {got}"))?;
    }
    Ok(format!("{count} simple modules, 200 compositions"))
}

fn check_chain(chain: Option<SemisimpleChain>, lam: &Partition, what: &str) -> Result<(), String> {
    let chain = chain.ok_or_else(|| format!("no {what} chain for {lam}"))?;
    ensure(chain.verify(), || format!("{what} chain for {lam} fails verification"))?;
    ensure(chain.steps().iter().all(|s| !s.exceptional), || format!("{lam}: exceptional step"))
}

fn c10_chains() -> Outcome {
    let (mut up, mut down) = (0, 0);
    for q in [3, 5, 7] {
        let q = p(q);
        for block in weight_two_blocks(q) {
            for lam in block.partitions().into_iter().filter(|l| l.is_p_regular(q)) {
                let l = label_of(&lam, q).map_err(|e| e.to_string())?;
                if l.eps == 0 {
                    let c = induce_chain_to_rouquier_with(&lam, q, 500).map_err(|e| format!("{lam}: {e}"))?;
                    let end = c.as_ref().map(|c| c.end().0.clone());
                    check_chain(c, &lam, "induce")?;
                    ensure(end.is_some_and(|b| is_rouquier(&b)), || format!("{lam} ends outside a Rouquier block"))?;
                    up += 1;
                } else {
                    let c = restrict_chain_to_principal(&lam, q).map_err(|e| format!("{lam}: {e}"))?;
                    let end = c.as_ref().map(|c| c.end().0.clone());
                    check_chain(c, &lam, "restrict")?;
                    ensure(end == Some(BlockId::principal(q, 2)), || format!("{lam} ends at {end:?}"))?;
                    down += 1;
                }
            }
        }
    }
    Ok(format!("{up} induce chains, {down} restrict chains"))
}

/// Commuting unipotent generators: polynomials without constant term in one
/// nilpotent Jordan block of size at most `p`.
fn random_indecomposable_piece(q: Prime, k: usize, rng: &mut ChaCha8Rng) -> ElemAbelianModule {
    let n = q.get();
    let m = rng.gen_range(1..=n);
    let nil = FpMatrix::jordan_block(q, m);
    let id = FpMatrix::identity(q, m);
    let gens = (0..k)
        .map(|_| {
            let mut x = FpMatrix::zeros(q, m, m);
            let mut power = nil.clone();
            for _ in 1..m.max(2) {
                x = x.add(&power.scale(rng.gen_range(0..n as u32)));
                power = power.mul(&nil);
            }
            id.add(&x)
        })
        .collect();
    ElemAbelianModule::new(q, gens).unwrap()
}

fn tensor(a: &ElemAbelianModule, b: &ElemAbelianModule) -> ElemAbelianModule {
    let gens = a.generators().iter().zip(b.generators()).map(|(x, y)| x.kron(y)).collect();
    ElemAbelianModule::new(a.prime(), gens).unwrap()
}

fn random_invertible(q: Prime, n: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
    loop {
        let rows: Vec<Vec<i64>> =
            (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..q.get() as i64)).collect()).collect();
        let s = FpMatrix::from_rows(q, &rows).unwrap();
        if s.inverse().is_some() {
            return s;
        }
    }
}

fn random_module(q: Prime, rng: &mut ChaCha8Rng) -> ElemAbelianModule {
    let k = rng.gen_range(1..=if q.get() == 5 { 2 } else { 3 });
    let mut m = random_indecomposable_piece(q, k, rng);
    if rng.gen_bool(0.4) {
        m = tensor(&m, &random_indecomposable_piece(q, k, rng));
    }
    for _ in 0..rng.gen_range(0..3) {
        if m.dim() >= 16 {
            break;
        }
        m = m.direct_sum(&random_indecomposable_piece(q, k, rng)).unwrap();
    }
    if rng.gen_bool(0.3) {
        let reg = fixtures::regular(q, k);
        if reg.dim() <= 9 {
            m = m.direct_sum(&reg).unwrap();
        }
    }
    let s = random_invertible(q, m.dim(), rng);
    m.change_basis(&s).unwrap()
}

fn c11_rank_variety() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut free_somewhere = 0;
    let mut by_prime = BTreeMap::new();
    for i in 0..200 {
        let q = p([2, 3, 5][i % 3]);
        let m = random_module(q, &mut rng);
        let points = m.rational_points().map_err(|e| format!("module {i}: {e}"))?;
        if points.len() < projective_points(q, m.rank()).len() {
            free_somewhere += 1;
        }
        *by_prime.entry(q.get()).or_insert(0) += 1;
    }
    let klein = fixtures::klein_two_dim();
    let pts = klein.rational_points().map_err(|e| e.to_string())?;
    ensure(pts == projective_points(p(2), 2) && pts.len() == 3, || format!("fixture gives {pts:?}"))?;
    ensure(free_somewhere > 0, || "no sampled module was free in any direction".into())?;
    Ok(format!("200 modules {by_prime:?}, {free_somewhere} with free directions; fixture has all 3 points"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "cores match rim-hook stripping", Some(30), c1_cores),
        (2, "Jordan tensor closed form", Some(10), c2_tensor),
        (3, "nabla restriction closed form", Some(10), c3_nabla),
        (4, "summand count and layer dimension", Some(5), c4_counts),
        (5, "non-freeness inequality", Some(5), c5_obstruction),
        (6, "hook dimensions prime to p", None, c6_hooks),
        (7, "weight-two labels and pairs", Some(60), c7_labels),
        (8, "weight-two complexity", None, c8_weight_two),
        (9, "Rouquier and wreath complexity", None, c9_rouquier),
        (10, "semisimple chains", None, c10_chains),
        (11, "rank variety probes", None, c11_rank_variety),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let late = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let budget = limit.map_or(String::new(), |s| format!(" / {s}s"));
        let (status, detail) = match (&outcome, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over time")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {id:>2} {name}: {detail} [{:.2}s{budget}]", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
