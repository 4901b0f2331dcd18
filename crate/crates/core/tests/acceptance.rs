//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line; the
//! test fails at the end if any criterion failed.

mod common;

use std::time::{Duration, Instant};

use common::*;
use grassline::chern::{self, q_class, top_chern_of_sym_power};
use grassline::cones::{self, analyze, integrate_on_f, pairing_vector};
use grassline::coniveau::{coniveau_at_least, max_coniveau};
use grassline::flagpush::{self, betas, push_h_power, z_prime_class};
use grassline::verify::{self, Status};
use grassline::{HC2Poly, LC2Poly, MultiDegree, Partition2, SchurClass, Verdict};
use proptest::strategy::{Just, Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn run(&mut self, id: u32, name: &str, budget: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS  [{id:>2}] {name} ({elapsed:.2?})"),
            Err(why) => {
                println!("FAIL  [{id:>2}] {name} ({elapsed:.2?}): {why}");
                self.failures.push(format!("[{id}] {name}: {why}"));
            }
        }
    }
}

fn criterion_1() -> Outcome {
    let z = z_prime_class(8, 4).map_err(|e| e.to_string())?;
    let coef = z.pure_l_coefficient();
    ensure(coef == int(-2688), || format!("pure-l coefficient {coef}"))?;
    let rest = &z.class - &z.class.pure_l_part();
    ensure(rest.is_divisible_by_c2(), || {
        format!("remainder {rest} not divisible by c2")
    })?;
    let b = betas(4).map_err(|e| e.to_string())?;
    let expected: Vec<_> = [12, 94, 276, 388, 276, 94, 12]
        .into_iter()
        .map(int)
        .collect();
    ensure(b == expected, || format!("betas {b:?}"))?;
    let via = int(24) * (&b[2] - &b[3]);
    ensure(via == coef, || format!("4!(b2 - b3) = {via}"))
}

fn criterion_2() -> Outcome {
    let c = ctx(8);
    let fg = SchurClass::from_lc2(&top_chern_of_sym_power(3).unwrap(), c);
    let expected =
        SchurClass::from_terms(c, [(part(3, 1), int(18)), (part(2, 2), int(27))]).unwrap();
    ensure(fg == expected, || format!("c4(S^3E) = {fg}"))?;
    let pv = pairing_vector(&fg, 4).map_err(|e| e.to_string())?;
    let got: Vec<_> = pv.iter().map(|(p, v)| (*p, v.clone())).collect();
    let want = vec![
        (part(7, 3), int(0)),
        (part(6, 4), int(18)),
        (part(5, 5), int(27)),
    ];
    let mut got_sorted = got.clone();
    got_sorted.sort();
    let mut want_sorted = want.clone();
    want_sorted.sort();
    ensure(got_sorted == want_sorted, || format!("pairings {got:?}"))?;
    let cert = analyze(&fg, 4).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::EffectiveBoundary, || {
        format!("verdict {}", cert.verdict)
    })?;
    let zeros: Vec<Partition2> = pv
        .iter()
        .filter(|(_, v)| **v == int(0))
        .map(|(p, _)| *p)
        .collect();
    ensure(zeros == vec![part(7, 3)], || {
        format!("zero pairings {zeros:?}")
    })?;
    // (n-1, D-1) with D = 4
    ensure(zeros[0] == part(8 - 1, 4 - 1), || {
        "zero not at (n-1, D-1)".into()
    })
}

fn criterion_3() -> Outcome {
    for d in 1..=8 {
        let r = verify::verify_m_prime_identity(d).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("d={d}: {}", r.note))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for k in 3..=10u32 {
        let m = k - 1;
        let top = top_chern_of_sym_power(m).unwrap();
        let c2q = &LC2Poly::c2() * &q_class(m).unwrap();
        let forced = c2q.scale(&int(i64::from(m * m)));
        let displayed = c2q.scale(&int(i64::from(k * k)));
        ensure(top == forced, || {
            format!("n-D={k}: c_(n-D) != (n-D-1)^2 c2 Q")
        })?;
        ensure(top != displayed, || {
            format!("n-D={k}: c_(n-D) == (n-D)^2 c2 Q")
        })?;
        let r = verify::verify_factorization_erratum(k + 4, 4).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("n-D={k}: {}", r.note))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 3..=12u32 {
        let cases = [
            (n - 3, LC2Poly::zero()),
            (n - 2, LC2Poly::one()),
            (n - 1, -&LC2Poly::l()),
            (n, LC2Poly::c2()),
            (n + 1, LC2Poly::zero()),
        ];
        for (k, expected) in cases {
            let direct = push_h_power(k, n);
            ensure(direct == expected, || format!("n={n}: h^{k} -> {direct}"))?;
            let via_class = flagpush::pushforward(&HC2Poly::from_h_terms([(k, LC2Poly::one())]), n)
                .map_err(|e| e.to_string())?;
            ensure(via_class == expected, || {
                format!("n={n}: pushforward h^{k} -> {via_class}")
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let anchors = [((3, 3), 0, 27), ((4, 5), 0, 2875), ((4, 3), 2, 45)];
    for ((n, d), lpow, expected) in anchors {
        let md = MultiDegree::hypersurface(n, d).unwrap();
        let g = LC2Poly::l().pow(lpow);
        let v = integrate_on_f(&g, &md).map_err(|e| e.to_string())?;
        ensure(v == int(expected), || {
            format!("(n={n}, d={d}, l^{lpow}) gave {v}")
        })?;
        // independent route: expand g·c_(d+1)(S^d E) in x, y, decompose by bialternants
        let mut integrand = xy_to_rat(&product_of_forms(&sym_power_forms(d)));
        integrand = rat_xy_mul(&integrand, &lc2_to_xy(&g));
        let decomposed = schur_decompose(&integrand);
        let top = decomposed
            .get(&(n - 1, n - 1))
            .cloned()
            .unwrap_or_else(|| int(0));
        ensure(top == int(expected), || {
            format!("oracle gave {top} for (n={n}, d={d})")
        })?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let hs = |n, d| MultiDegree::hypersurface(n, d).unwrap();
    ensure(coniveau_at_least(&hs(10, 5), 2).unwrap(), || {
        "(10;[5]) c=2".into()
    })?;
    ensure(!coniveau_at_least(&hs(9, 5), 2).unwrap(), || {
        "(9;[5]) c=2".into()
    })?;
    for n in 1..=30 {
        for d in 1..=10 {
            ensure(coniveau_at_least(&hs(n, d), 1).unwrap() == (n >= d), || {
                format!("c=1 at (n={n}, d={d})")
            })?;
        }
    }
    for n in 1..=30u32 {
        for d1 in 1..=10u32 {
            for d2 in d1..=10 {
                for d3 in d2..=10 {
                    for degrees in [vec![d1], vec![d1, d2], vec![d1, d2, d3]] {
                        let md = MultiDegree::new(n, degrees).unwrap();
                        let max = max_coniveau(&md);
                        for c in 1..=max + 2 {
                            ensure(coniveau_at_least(&md, c).unwrap() == (c <= max), || {
                                format!("{md:?} c={c} max={max}")
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for n in 2..=6 {
        let c = ctx(n);
        for k in 0..=c.dim() {
            for p in c.schubert_basis(k).unwrap() {
                for q in c.schubert_basis(c.dim() - k).unwrap() {
                    let v = (&SchurClass::schubert(c, p) * &SchurClass::schubert(c, q)).integrate();
                    let want = int(i64::from(q == c.dual(p).unwrap()));
                    ensure(v == want, || format!("n={n} p={p} q={q}: {v}"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let config = Config::with_cases(500);
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let partition = |size: u32| {
        (size.div_ceil(2)..=size).prop_map(move |a| Partition2::new(a, size - a).unwrap())
    };
    let strategy = (2u32..=9)
        .prop_flat_map(|n| (Just(n), 0..n - 1))
        .prop_flat_map(|(n, k1)| (Just(n), Just(k1), 0..=(n - 2 - k1)))
        .prop_flat_map(move |(n, k1, k2)| {
            (Just(n), partition(k1), partition(k2), -6i64..=6, -6i64..=6)
        });
    for case in 0..500 {
        let (n, p, q, a, b) = strategy.new_tree(&mut runner).unwrap().current();
        let c = ctx(n);
        // sizes satisfy k1 + k2 + 1 <= n - 1, so nothing is truncated
        let u = &SchurClass::schubert(c, p).scale(&int(a)) + &SchurClass::one(c);
        let v = &SchurClass::schubert(c, q).scale(&int(b)) + &SchurClass::l(c);
        let lib = &u * &v;
        let oracle = oracle_product(&u, &v);
        ensure(class_as_map(&lib) == oracle, || {
            format!("case {case}: n={n} u={u} v={v}: {lib}")
        })?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let expectations = [
        ((8, 4), Status::Pass),
        ((11, 5), Status::Pass),
        ((6, 3), Status::Inconclusive),
    ];
    for ((n, d), want) in expectations {
        let r = verify::verify_leok_pipeline(n, d).map_err(|e| e.to_string())?;
        ensure(r.status == want, || {
            format!("(n={n}, d={d}) gave {}: {}", r.status, r.note)
        })?;
        let m = n - d - 1;
        let q = SchurClass::from_lc2(&chern::q_class(m).unwrap(), ctx(n));
        let cert = cones::analyze(&q, m - 1).map_err(|e| e.to_string())?;
        ensure(cert.verdict == Verdict::Big, || {
            format!("Q not big at (n={n}, d={d})")
        })?;
    }
    Ok(())
}

fn main() {
    let mut gate = Gate {
        failures: Vec::new(),
    };
    let secs = Duration::from_secs;
    gate.run(
        1,
        "[Z'](8,4) pure-l coefficient -2688 = 4!(b2 - b3)",
        Some(secs(1)),
        criterion_1,
    );
    gate.run(
        2,
        "c4(S^3E) on G(1,8): expansion, pairings, boundary verdict",
        None,
        criterion_2,
    );
    gate.run(
        3,
        "M' identity exact for 1 <= d <= 8",
        Some(secs(10)),
        criterion_3,
    );
    gate.run(
        4,
        "factorization scalar (n-D-1)^2, not (n-D)^2, for n-D in 3..=10",
        None,
        criterion_4,
    );
    gate.run(5, "pushforward base cases", None, criterion_5);
    gate.run(6, "classical anchors 27 / 2875 / 45", None, criterion_6);
    gate.run(
        7,
        "coniveau predicate table and max-coniveau consistency",
        None,
        criterion_7,
    );
    gate.run(
        8,
        "Poincare duality exhaustive for n <= 6",
        None,
        criterion_8,
    );
    gate.run(
        9,
        "500 random untruncated products match bialternant oracle",
        None,
        criterion_9,
    );
    gate.run(
        10,
        "leok pipeline: (8,4) pass, (11,5) pass, (6,3) inconclusive",
        Some(secs(30)),
        criterion_10,
    );
    if gate.failures.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        eprintln!("failed criteria: {:#?}", gate.failures);
        std::process::exit(1);
    }
}
