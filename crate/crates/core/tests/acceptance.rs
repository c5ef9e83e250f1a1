//! Acceptance criteria. Runs as a plain binary (`harness = false`) so every
//! criterion prints a PASS/FAIL line; exits nonzero if any criterion fails.

use isdecode::bounds::{ball_volume, entropy_q, log_q};
use isdecode::code::Messages;
use isdecode::{
    fixtures, md_decode, oracle_ball_decode, oracle_nearest_codeword, unique_decode, DecodeStatus,
    FieldSpec, FqMatrix, FqVector, LinearCode, PatternEnumerator,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn word(field: FieldSpec, e: Vec<u32>) -> FqVector {
    FqVector::new(field, e).unwrap()
}

/// Random full-rank `k × n` generator, not necessarily systematic.
fn random_code(field: FieldSpec, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let entries: Vec<u32> = (0..n * k).map(|_| rng.gen_range(0..field.q())).collect();
        let g = FqMatrix::new(field, k, n, entries).unwrap();
        if g.rank() == k {
            return LinearCode::from_generator(&g, None).unwrap();
        }
    }
}

/// All patterns of weight 1..=3 over `n` positions, by nested loops.
fn binary_patterns_up_to_3(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        out.push(vec![a]);
        for b in a + 1..n {
            out.push(vec![a, b]);
            for c in b + 1..n {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let code = fixtures::hamming_7_4();
    let f = code.field();
    let mut ok = 0;
    for x in Messages::new(f, 4) {
        let c = code.encode(&x).unwrap();
        let mut patterns = vec![FqVector::zeros(f, 7)];
        patterns.extend((0..7).map(|p| FqVector::unit(f, 7, p)));
        for e in patterns {
            let y = c.add(&e).unwrap();
            let out = unique_decode(&code, &y).unwrap();
            ensure(out.codeword() == Some(&c), || format!("failed on c={c} e={e}"))?;
            ok += 1;
        }
    }
    ensure(ok == 128, || format!("{ok}/128"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("{ok}/128 corrected in {:?}", start.elapsed()))
}

fn unique_matches_ball_oracle(code: &LinearCode) -> Result<usize, String> {
    let mut n_words = 0;
    for y in Messages::new(code.field(), code.n()) {
        let a = unique_decode(code, &y).unwrap();
        let b = oracle_ball_decode(code, &y).unwrap();
        let same_status = a.is_decoded() == b.is_decoded();
        ensure(same_status && a.codeword() == b.codeword(), || {
            format!("disagree on y={y}: {:?} vs {:?}", a.status, b.status)
        })?;
        n_words += 1;
    }
    Ok(n_words)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let a = unique_matches_ball_oracle(&fixtures::hamming_7_4())?;
    let b = unique_matches_ball_oracle(&fixtures::code_5_2())?;
    ensure(a == 128 && b == 32, || format!("word counts {a}, {b}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("{a} + {b} words agree in {:?}", start.elapsed()))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let code = fixtures::golay_23_12();
    let d = code.min_distance().unwrap();
    ensure(d == 7, || format!("brute-force distance {d}"))?;
    let f = code.field();
    let patterns = binary_patterns_up_to_3(23);
    ensure(patterns.len() == 2047, || format!("{} patterns", patterns.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x601a7);
    let mut max_inspected = 0;
    for _ in 0..20 {
        let x = word(f, (0..12).map(|_| rng.gen_range(0..2)).collect());
        let c = code.encode(&x).unwrap();
        for support in &patterns {
            let mut y = c.clone().into_entries();
            for &p in support {
                y[p] ^= 1;
            }
            let out = unique_decode(&code, &word(f, y)).unwrap();
            ensure(out.codeword() == Some(&c), || format!("failed for support {support:?}"))?;
            max_inspected = max_inspected.max(out.stats.patterns_inspected);
            ensure(out.stats.patterns_inspected <= 299, || {
                format!("{} patterns inspected", out.stats.patterns_inspected)
            })?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "20 x 2047 restored, max patterns {max_inspected} <= 299, in {:?}",
        start.elapsed()
    ))
}

/// `md_decode` at the covering radius reaches the nearest-codeword distance
/// for every word of the ambient space.
fn md_exact_on_all_words(code: &LinearCode) -> Result<(), String> {
    let rho = code.covering_radius().unwrap();
    for y in Messages::new(code.field(), code.n()) {
        let md = md_decode(code, &y, rho).unwrap();
        let best = oracle_nearest_codeword(code, &y).unwrap().error_weight().unwrap();
        let c = md.codeword().unwrap();
        ensure(code.is_codeword(c).unwrap(), || format!("non-codeword for y={y}"))?;
        ensure(md.error_weight() == Some(best) && c.distance(&y) == best, || {
            format!("y={y}: md weight {:?}, nearest {best}", md.error_weight())
        })?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let f = FieldSpec::binary();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut words = 0usize;
    for i in 0..50 {
        let n = if i < 10 { 12 } else { rng.gen_range(4..=12) };
        let k = rng.gen_range(1..=7.min(n - 1));
        let code = random_code(f, n, k, &mut rng);
        md_exact_on_all_words(&code).map_err(|e| format!("code {i} [{n},{k}]: {e}"))?;
        words += 1 << n;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("50 codes, {words} words exact in {:?}", start.elapsed()))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let f = FieldSpec::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut words = 0usize;
    for i in 0..10 {
        let n = rng.gen_range(3..=7);
        let k = rng.gen_range(1..=4.min(n - 1));
        let code = random_code(f, n, k, &mut rng).with_computed_distance().unwrap();
        unique_matches_ball_oracle(&code).map_err(|e| format!("code {i} [{n},{k}] unique: {e}"))?;
        md_exact_on_all_words(&code).map_err(|e| format!("code {i} [{n},{k}] md: {e}"))?;
        words += 3usize.pow(n as u32);
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("10 ternary codes, {words} words in {:?}", start.elapsed()))
}

fn criterion_6() -> Check {
    let small = fixtures::code_5_2();
    let y = word(small.field(), vec![0, 0, 0, 1, 1]);
    let out = unique_decode(&small, &y).unwrap();
    ensure(out.status == DecodeStatus::Incomplete, || "5,2 example decoded".into())?;
    ensure(out.stats.patterns_inspected == 3, || {
        format!("{} patterns on [5,2]", out.stats.patterns_inspected)
    })?;

    let f = FieldSpec::binary();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let code = loop {
        let c = random_code(f, 12, 6, &mut rng).with_computed_distance().unwrap();
        if c.distance().unwrap() >= 3 {
            break c;
        }
    };
    let t = code.unique_radius().unwrap();
    let bound = ball_volume(6, t, 2).unwrap();
    let mut found = 0;
    let mut drawn = 0;
    while found < 100 {
        drawn += 1;
        ensure(drawn < 100_000, || "could not find incomplete inputs".into())?;
        let y = word(f, (0..12).map(|_| rng.gen_range(0..2)).collect());
        if oracle_ball_decode(&code, &y).unwrap().is_decoded() {
            continue;
        }
        let out = unique_decode(&code, &y).unwrap();
        ensure(out.status == DecodeStatus::Incomplete, || format!("decoded y={y}"))?;
        ensure(BigUint::from(out.stats.patterns_inspected) == bound, || {
            format!("{} patterns, V = {bound}", out.stats.patterns_inspected)
        })?;
        found += 1;
    }
    Ok(format!(
        "[5,2]: 3 patterns; [12,6,{}]: 100 incomplete inputs at V_2(6,{t}) = {bound}",
        code.distance().unwrap()
    ))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    for q in [2u32, 3, 5] {
        for k in 4..=20usize {
            let t_max = (k as f64 * (1.0 - 1.0 / q as f64)).floor() as usize;
            for t in 1..=t_max {
                let lhs = log_q(&ball_volume(k, t, q).unwrap(), q);
                let rhs = k as f64 * entropy_q(t as f64 / k as f64, q).unwrap();
                ensure(lhs <= rhs + 1e-9, || format!("q={q} k={k} t={t}: {lhs} > {rhs}"))?;
                cases += 1;
            }
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{cases} grid points satisfy log_q V <= k H_q(t/k) + 1e-9"))
}

fn criterion_8() -> Check {
    let mut configs = 0;
    for q in [2u32, 3, 5, 7, 11, 13] {
        let f = FieldSpec::new(q).unwrap();
        let mut k = 1;
        while (q as u64).pow(k as u32) <= 1 << 16 {
            let all: Vec<Vec<u32>> = Messages::new(f, k).map(FqVector::into_entries).collect();
            for w in 0..=k {
                let mut expected: Vec<Vec<u32>> = all
                    .iter()
                    .filter(|v| v.iter().filter(|&&x| x != 0).count() <= w)
                    .cloned()
                    .collect();
                let emitted: Vec<Vec<u32>> =
                    PatternEnumerator::new(f, k, w).map(FqVector::into_entries).collect();
                let weights: Vec<usize> = emitted
                    .iter()
                    .map(|v| v.iter().filter(|&&x| x != 0).count())
                    .collect();
                ensure(weights.windows(2).all(|p| p[0] <= p[1]), || {
                    format!("q={q} k={k} w={w}: weights decrease")
                })?;
                ensure(BigUint::from(emitted.len()) == ball_volume(k, w, q).unwrap(), || {
                    format!("q={q} k={k} w={w}: {} emitted", emitted.len())
                })?;
                let mut sorted = emitted;
                sorted.sort_unstable();
                expected.sort_unstable();
                ensure(sorted == expected, || format!("q={q} k={k} w={w}: set differs"))?;
                configs += 1;
            }
            k += 1;
        }
    }
    Ok(format!("{configs} (q, k, w) configurations certified"))
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isdecode"))
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn criterion_9() -> Check {
    let verify = || {
        bin()
            .args(["verify", &data("golay_23_12.code"), "--weight", "3", "--trials", "200", "--seed", "99"])
            .output()
            .unwrap()
    };
    let (a, b) = (verify(), verify());
    ensure(a.status.success(), || String::from_utf8_lossy(&a.stderr).into_owned())?;
    ensure(a.stdout == b.stdout, || "verify reports differ".into())?;

    let gen = || {
        bin()
            .args(["gen", "--q", "3", "--n", "9", "--k", "4", "--seed", "1234"])
            .output()
            .unwrap()
    };
    let (g1, g2) = (gen(), gen());
    ensure(g1.status.success() && g1.stdout == g2.stdout, || "gen output differs".into())?;
    Ok(format!(
        "verify ({} bytes) and gen ({} bytes) byte-identical across runs",
        a.stdout.len(),
        g1.stdout.len()
    ))
}

fn criterion_10() -> Check {
    ensure(ball_volume(7, 1, 2).unwrap() == BigUint::from(8u32), || "V_2(7,1)".into())?;
    ensure(BigUint::from(8u32) == BigUint::from(2u32).pow(7 - 4), || "2^3".into())?;
    ensure(ball_volume(23, 3, 2).unwrap() == BigUint::from(2048u32), || "V_2(23,3)".into())?;
    ensure(BigUint::from(2048u32) == BigUint::from(2u32).pow(23 - 12), || "2^11".into())?;
    let hamming = fixtures::hamming_7_4();
    let rho = hamming.covering_radius().unwrap();
    ensure(rho == 1 && hamming.unique_radius() == Some(1), || format!("rho = {rho}"))?;
    Ok("V_2(7,1) = 8 = 2^3, V_2(23,3) = 2048 = 2^11, rho(Hamming) = 1 = t".into())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 unique decoding corrects all weight<=1 errors on Hamming", criterion_1),
        ("2 unique decoding equals ball oracle (Hamming, [5,2])", criterion_2),
        ("3 Golay: all weight<=3 errors corrected within 299 patterns", criterion_3),
        ("4 md decoding exact on 50 random binary codes", criterion_4),
        ("5 ternary codes: criteria 2 and 4", criterion_5),
        ("6 incomplete inputs inspect exactly V_q(k,t) patterns", criterion_6),
        ("7 log_q V_q(k,t) <= k H_q(t/k)", criterion_7),
        ("8 pattern enumerator certification", criterion_8),
        ("9 determinism of verify and gen", criterion_9),
        ("10 perfection identities", criterion_10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
