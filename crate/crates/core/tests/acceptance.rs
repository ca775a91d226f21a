//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! run with `--nocapture` to see them.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use horadam::{
    build_matrix_general, build_matrix_pell, family_sample, general_triple, monomial_triple,
    reconstruct_triple, verify_triple, DegeneracyKind, Poly, Rational, ReconstructionStatus,
    SeqParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ri(n: i64) -> Rational {
    Rational::from(n)
}

fn rq(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn poly(cs: &[Rational]) -> Poly {
    Poly::from_coeffs(cs.to_vec())
}

fn strip(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn random_non_degenerate(rng: &mut ChaCha8Rng) -> SeqParams {
    loop {
        let a = rng.gen_range(1..=9);
        let b = rng.gen_range(1..=9);
        let c0 = rng.gen_range(-9..=9);
        let c1 = rng.gen_range(-9..=9);
        let Ok(p) = SeqParams::new(a, b, c0, c1) else {
            continue;
        };
        if !p.classify().is_degenerate() {
            return p;
        }
    }
}

/// Random nonzero weight of degree at most `max_deg`, sometimes fractional.
fn random_weight(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let cs: Vec<Rational> = (0..=deg)
            .map(|_| {
                let num = rng.gen_range(-9..=9);
                let den = if rng.gen_bool(0.25) { rng.gen_range(1..=5) } else { 1 };
                rq(num, den)
            })
            .collect();
        let p = Poly::from_coeffs(cs);
        if !p.is_zero() {
            return p;
        }
    }
}

// 1
fn pell_golden_table() {
    let golden = [
        "2\\sum_{k=1}^{n}P_{k-1} = P_{n+1} - P_n - 1",
        "2\\sum_{k=1}^{n}kP_{k-1} = nP_{n+1} - (n+1)P_n",
        "2\\sum_{k=1}^{n}k^2P_{k-1} = (n^2+1)P_{n+1} - (n^2+2n)P_n - 1",
        "2\\sum_{k=1}^{n}k^3P_{k-1} = (n^3 + 3n -3)P_{n+1} - (n^3+3n^2+1)P_n +3",
        "2\\sum_{k=1}^{n}k^4P_{k-1} = (n^4+6n^2-12n+13)P_{n+1} - (n^4+4n^3+4n-6)P_n - 13",
        "2\\sum_{k=1}^{n}k^5P_{k-1} = (n^5 + 10n^3 -30n^2 +65n -75)P_{n+1} - (n^5+5n^4+10n^2-30n +31)P_n + 75",
        "2\\sum_{k=1}^{n}k^6P_{k-1} = (n^6 + 15n^4 -60n^3 +195n^2 -450n + 511)P_{n+1} - (n^6 +6n^5 +20n^3 -90n^2+186n -210)P_n - 511",
    ];
    // (F, G, H) coefficients, constant term first
    let coeffs: [(&[i64], &[i64], i64); 7] = [
        (&[1], &[-1], -1),
        (&[0, 1], &[-1, -1], 0),
        (&[1, 0, 1], &[0, -2, -1], -1),
        (&[-3, 3, 0, 1], &[-1, 0, -3, -1], 3),
        (&[13, -12, 6, 0, 1], &[6, -4, 0, -4, -1], -13),
        (&[-75, 65, -30, 10, 0, 1], &[-31, 30, -10, 0, -5, -1], 75),
        (&[511, -450, 195, -60, 15, 0, 1], &[210, -186, 90, -20, 0, -6, -1], -511),
    ];

    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["horadam", "table", "--a", "2", "--b", "1", "--c0", "0", "--c1", "1", "--d-max", "6"];
    let code = horadam::cli::run(args, &mut std::io::empty(), &mut out, &mut err);
    assert_eq!(code, 0, "stderr: {}", String::from_utf8_lossy(&err));
    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for (d, line) in lines.iter().enumerate() {
        assert_eq!(strip(line), strip(golden[d]), "d = {d}");
    }

    let pell = SeqParams::new(2, 1, 0, 1).unwrap();
    for (d, (f, g, h)) in coeffs.iter().enumerate() {
        let t = monomial_triple(d, &pell);
        assert_eq!(t.f, Poly::from_ints(f), "F, d = {d}");
        assert_eq!(t.g, Poly::from_ints(g), "G, d = {d}");
        assert_eq!(t.h, Poly::from_ints(&[*h]), "H, d = {d}");
    }
}

// 2
fn pell_pair() {
    let pell = SeqParams::pell();
    let t = general_triple(&Poly::from_ints(&[0, 1]), &pell);
    assert_eq!((t.f, t.g, t.h), (Poly::x(), Poly::from_ints(&[-1, -1]), Poly::zero()));
    let t = general_triple(&Poly::from_ints(&[0, 0, 1]), &pell);
    assert_eq!(
        (t.f, t.g, t.h),
        (Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[0, -2, -1]), Poly::from_ints(&[-1]))
    );
}

// 3
fn determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in 0..=10usize {
        let a_d = build_matrix_pell(d);
        assert_eq!(a_d.determinant(), ri(2).pow(d as u32 + 1));
        assert_eq!(a_d, build_matrix_general(d, 2, 1));
        for i in 1..=d + 1 {
            for j in 1..=d + 1 {
                assert_eq!(a_d.entry(i, j), build_matrix_general(d, 2, 1).entry(i, j));
            }
        }
    }
    for _ in 0..25 {
        let a = rng.gen_range(1..=20);
        let b = rng.gen_range(1..=20);
        for d in 0..=10usize {
            let m = build_matrix_general(d, a, b);
            assert_eq!(m.determinant(), ri(a + b - 1).pow(d as u32 + 1), "(a, b, d) = ({a}, {b}, {d})");
        }
    }
}

/// The published general formulas for d = 0, 1, 2, substituted directly.
fn published_general(d: usize, a: i64, b: i64, c0: i64, c1: i64) -> (Poly, Poly, Poly) {
    let m = a + b - 1;
    let m2 = m * m;
    let m3 = m2 * m;
    let (ac, bc) = (a * c1 + b * c0, b * c1);
    match d {
        0 => (
            poly(&[rq(2, m)]),
            poly(&[rq(-2 * a + 2, m)]),
            poly(&[ri(2 * c0 + 2 * c1) - rq(2 * a * c1 + 2 * b * c0 + 2 * b * c1, m)]),
        ),
        1 => (
            poly(&[rq(2 * a - 4, m2), rq(2, m)]),
            poly(&[rq(-2 * a * a + 4 * a - 2 * b - 2, m2), rq(2 - 2 * a, m)]),
            poly(&[ri(2 * c0 + 4 * c1) - rq(ac * (4 * a + 2 * b - 6) + bc * (6 * a + 4 * b - 8), m2)]),
        ),
        2 => (
            poly(&[
                rq(2 * a * a - 6 * a + 8 * b - 2 * a * b + 8, m3),
                rq(4 * a - 8, m2),
                rq(2, m),
            ]),
            poly(&[
                rq(8 * a * a * b + 2 * b * b * b + 6 * a * b * b - 22 * a * b - 4 * b * b + 18 * b, m3)
                    - ri(2),
                rq(-4 * a * a + 8 * a - 4 * b - 4, m2),
                rq(2 - 2 * a, m),
            ]),
            poly(&[
                -rq(
                    ac * (8 * a * a + 2 * b * b + 6 * a * b - 22 * a - 4 * b + 18)
                        + bc * (18 * a * a + 8 * b * b + 22 * a * b - 46 * a - 24 * b + 32),
                    m3,
                ) + ri(2 * c0 + 8 * c1),
            ]),
        ),
        _ => unreachable!(),
    }
}

// 4
fn general_spot_check() {
    let params = SeqParams::new(3, 2, 1, 1).unwrap();
    for d in 0..=2 {
        let (f, g, h) = published_general(d, 3, 2, 1, 1);
        let t = monomial_triple(d, &params);
        assert_eq!(t.f, f, "F, d = {d}");
        assert_eq!(t.g, g, "G, d = {d}");
        assert_eq!(t.h, h, "H, d = {d}");
    }
}

// 5
fn oracle_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let start = Instant::now();
    for i in 0..100 {
        let params = random_non_degenerate(&mut rng);
        let w = random_weight(&mut rng, 5);
        let t = general_triple(&w, &params);
        let rep = verify_triple(&t, 300);
        assert!(rep.ok, "case {i}: {params:?}, P = {w:?}, failure {:?}", rep.first_failure);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
}

// 6
fn uniqueness() {
    // same stream as the sweep, so these are 25 of its parameter sets
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..25 {
        let params = random_non_degenerate(&mut rng);
        let w = random_weight(&mut rng, 5);
        let bound = w.degree().unwrap();
        let r = reconstruct_triple(&w, &params, bound).unwrap();
        assert_eq!(r.status, ReconstructionStatus::UniqueSolution, "case {i}: {params:?}");
        assert_eq!(r.rank, r.unknowns);
        assert_eq!(r.triple.unwrap(), general_triple(&w, &params), "case {i}");
    }
}

// 7
fn infinitude() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut built = 0;
    while built < 10 {
        // a^2 + 4b = t^2 needs t = a (mod 2), t > a
        let a: i64 = rng.gen_range(1..=6);
        let t = a + 2 * rng.gen_range(1..=3);
        let b = (t * t - a * a) / 4;
        let c0: i64 = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let use_j1 = built % 2 == 0;
        let j = if use_j1 { a + t } else { a - t };
        let c1 = j / 2 * c0;
        let params = SeqParams::new(a, b, c0, c1).unwrap();
        let class = params.classify();
        let want = if use_j1 { DegeneracyKind::DegenerateJ1 } else { DegeneracyKind::DegenerateJ2 };
        assert_eq!(class.kind, want, "{params:?}");

        let w = random_weight(&mut rng, 3);
        let bound = w.degree().unwrap();
        let r = reconstruct_triple(&w, &params, bound).unwrap();
        assert_eq!(r.status, ReconstructionStatus::RankDeficient, "{params:?}");

        let mut samples = Vec::new();
        let mut tries = 0;
        while samples.len() < 5 {
            tries += 1;
            assert!(tries < 1000);
            let free = random_weight(&mut rng, bound + 1);
            let s = family_sample(&w, &params, &free).unwrap();
            if samples.iter().any(|o: &horadam::ClosedFormTriple| o.same_polys(&s)) {
                continue;
            }
            assert!(verify_triple(&s, 200).ok, "{params:?}, free {free:?}");
            samples.push(s);
        }
        built += 1;
    }
}

// 8
fn ratio_limit() {
    for params in [SeqParams::pell(), SeqParams::fibonacci(), SeqParams::lucas()] {
        let (a, b) = (params.a() as f64, params.b() as f64);
        let limit = (a + (a * a + 4.0 * b).sqrt()) / 2.0;
        let ratio = params.ratio_probe(200).unwrap();
        assert!((ratio - limit).abs() < 1e-9, "{params:?}: {ratio} vs {limit}");
    }
    let geo = SeqParams::new(1, 2, 1, 2).unwrap();
    let s = geo.terms(101);
    for n in 0..=100 {
        assert_eq!(Rational::new(s[n + 1].clone(), s[n].clone()), ri(2), "n = {n}");
    }
}

// 9
fn polynomial_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let one = Rational::one();
    for _ in 0..25 {
        let a = rng.gen_range(1..=20);
        let b = rng.gen_range(1..=20);
        let params = SeqParams::new(a, b, rng.gen_range(-9..=9), 1).unwrap();
        for d in 0..=8usize {
            let t = monomial_triple(d, &params);
            let f1 = t.f.shift(&one);
            // F(x) - G(x+1) = a F(x+1)
            assert_eq!(&t.f - &t.g.shift(&one), f1.scale(&ri(a)), "(a, b, d) = ({a}, {b}, {d})");
            // 2 (x+1)^d + G(x) = b F(x+1)
            let lead = Poly::monomial(ri(2), d).shift(&one);
            assert_eq!(&lead + &t.g, f1.scale(&ri(b)), "(a, b, d) = ({a}, {b}, {d})");
            assert!(t.h.degree().unwrap_or(0) == 0);
        }
    }
}

// 10
fn zero_terms() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    while checked < 1200 {
        let Ok(params) = SeqParams::new(
            rng.gen_range(1..=30),
            rng.gen_range(1..=30),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
        ) else {
            continue;
        };
        let zeros = params.find_zero_terms(100);
        assert!(zeros.iter().filter(|&&n| n >= 1).count() <= 1, "{params:?}: {zeros:?}");
        checked += 1;
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 10] = [
        ("AC1 Pell golden table, d <= 6", pell_golden_table),
        ("AC2 Pell pair for P = k, k^2", pell_pair),
        ("AC3 determinant laws, d <= 10", determinants),
        ("AC4 general formulas at (3,2,1,1), d <= 2", general_spot_check),
        ("AC5 oracle sweep, 100 sets to n = 300", oracle_sweep),
        ("AC6 uniqueness by reconstruction, 25 sets", uniqueness),
        ("AC7 degenerate families, 10 sets x 5 samples", infinitude),
        ("AC8 ratio limit", ratio_limit),
        ("AC9 polynomial relations, d <= 8", polynomial_relations),
        ("AC10 at most one zero term, 1200 sets", zero_terms),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        if outcome.is_ok() {
            println!("[PASS] {name} ({secs:.3}s)");
        } else {
            println!("[FAIL] {name} ({secs:.3}s)");
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
