//! Acceptance suite: each test runs one criterion end to end, prints a
//! single pass/fail line, and fails the build on any violation.

mod common;

use std::collections::BTreeSet;

use num::traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lie3q::arith::{self, rat, rat_i, Rat};
use lie3q::brauer;
use lie3q::cartan::{self, CartanReflection};
use lie3q::lie3::{self, LParams, Lie3, LieVec, Mat3};
use lie3q::qforms;
use lie3q::quat::{self, HElt, QuatAlg};
use lie3q::symbols::{self, Place};

struct Criterion {
    failures: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn finish(self, n: u32, desc: &str) {
        if self.failures.is_empty() {
            println!("criterion {n} ({desc}): PASS");
        } else {
            println!(
                "criterion {n} ({desc}): FAIL — {} violation(s), first: {}",
                self.failures.len(),
                self.failures[0]
            );
            panic!("criterion {n} failed: {}", self.failures.join("; "));
        }
    }
}

#[derive(Debug, PartialEq, Clone, Copy)]
enum Verdict {
    Split,
    Obtainable,
    Unobtainable,
}

fn classify(a: i64, b: i64) -> (Verdict, Vec<(u64, i32)>) {
    let p = LParams::of(a, b).unwrap();
    let r = cartan::obtain_report(&p).unwrap();
    let v = if r.split {
        Verdict::Split
    } else if r.obtainable() {
        Verdict::Obtainable
    } else {
        Verdict::Unobtainable
    };
    (v, r.witnesses)
}

fn rand_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-num..=num);
    }
    rat(n, rng.gen_range(1..=den))
}

fn rand_invertible(rng: &mut ChaCha8Rng) -> Mat3 {
    loop {
        let m = Mat3(std::array::from_fn(|_| {
            std::array::from_fn(|_| rat_i(rng.gen_range(-3..=3)))
        }));
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn rand_simple(rng: &mut ChaCha8Rng) -> (LParams, Lie3) {
    let p = LParams::new(rand_rat(rng, 9, 1), rand_rat(rng, 9, 1)).unwrap();
    let twisted = lie3::from_params(&p)
        .conjugate(&rand_invertible(rng))
        .unwrap();
    (p, twisted)
}

#[test]
fn criterion_1_worked_examples() {
    let mut c = Criterion::new();
    let expect = |c: &mut Criterion, a: i64, b: i64, want: Verdict| {
        let (got, _) = classify(a, b);
        c.check(got == want, || {
            format!("classify({a},{b}) = {got:?}, want {want:?}")
        });
    };
    expect(&mut c, 2, 3, Verdict::Obtainable);

    let (v, w) = classify(2, 5);
    c.check(v == Verdict::Unobtainable && w == vec![(5, -1)], || {
        format!("classify(2,5) = {v:?} with witnesses {w:?}")
    });
    let (v, w) = classify(3, 25);
    c.check(v == Verdict::Obtainable && w == vec![(5, 1)], || {
        format!("classify(3,25) = {v:?} with witnesses {w:?}")
    });
    let (v, w) = classify(3, -5);
    c.check(v == Verdict::Unobtainable && w == vec![(5, -1)], || {
        format!("classify(3,-5) = {v:?} with witnesses {w:?}")
    });

    for p in [3, 7, 11, 19] {
        expect(&mut c, 1, -p, Verdict::Obtainable);
    }
    for p in [5, 13, 17] {
        expect(&mut c, 1, -p, Verdict::Split);
    }
    for p in [7, 23, 31] {
        expect(&mut c, 2, -p, Verdict::Obtainable);
    }
    for p in [5, 13, 29] {
        expect(&mut c, 2, -p, Verdict::Unobtainable);
    }
    for p in [3, 17] {
        expect(&mut c, 2, -p, Verdict::Split);
    }
    c.finish(1, "worked classification examples, exact");
}

#[test]
fn criterion_2_route_cross_validation() {
    let mut c = Criterion::new();
    for a in -20i64..=20 {
        for b in -20i64..=20 {
            if a == 0 || b == 0 {
                continue;
            }
            let r = cartan::obtain_report(&LParams::of(a, b).unwrap()).unwrap();
            c.check(
                r.legendre_route == r.represents_minus_two
                    && r.delta_pair == r.represents_minus_two,
                || {
                    format!(
                        "routes disagree at ({a},{b}): legendre={} delta_pair={} represents={}",
                        r.legendre_route, r.delta_pair, r.represents_minus_two
                    )
                },
            );
        }
    }
    c.finish(
        2,
        "Legendre route = represents(-2) route = delta-pair route, |α|,|β| ≤ 20",
    );
}

#[test]
fn criterion_3_construction_splitness_law() {
    let mut c = Criterion::new();
    let mut count = 0;
    'outer: for den in 1i64..=30 {
        for num in 1i64..=30 {
            if num::integer::gcd(num, den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let a = rat(sign * num, den);
                if arith::is_square(&(rat_i(4) * &a)) {
                    continue;
                }
                let s = CartanReflection::new(a.clone()).unwrap();
                // splitness_verdict recomputes the structure constants by
                // the graded bracket and checks them against the closed
                // table before reporting splitness
                let split = cartan::splitness_verdict(&s).unwrap();
                let two_squares = arith::is_sum_two_squares(&s.fixed_norm()).unwrap();
                c.check(split == two_squares, || {
                    format!("splitness law fails at a = {a}: split={split}, 8a class trivial={two_squares}")
                });
                if cartan::is_cartan_type(&s).unwrap() {
                    let obt = cartan::construct(&s).unwrap();
                    let lambda = obt.lambda.clone();
                    c.check(
                        *obt.sc.basis_bracket(1, 0) == LieVec::basis(2)
                            && *obt.sc.basis_bracket(0, 2) == LieVec::basis(1).scale(&-a.clone())
                            && *obt.sc.basis_bracket(2, 1) == LieVec::basis(0).scale(&-lambda),
                        || format!("structure constants differ from the proof table at a = {a}"),
                    );
                }
                count += 1;
                if count == 200 {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(count, 200);
    c.finish(3, "construction splitness law on 200 parameters");
}

#[test]
fn criterion_4_hilbert_symbols() {
    let mut c = Criterion::new();
    // product formula over 500 random pairs
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..500 {
        let a = rand_rat(&mut rng, 50, 20);
        let b = rand_rat(&mut rng, 50, 20);
        let mut prod = 1;
        for v in symbols::relevant_places(&[a.clone(), b.clone()]).unwrap() {
            prod *= symbols::hilbert(&a, &b, v).unwrap();
        }
        c.check(prod == 1, || format!("product formula fails at ({a},{b})"));
    }
    // brute-force oracle agreement at every odd prime ≤ 50
    let odd_primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    for &p in &odd_primes {
        let r = common::least_nonresidue(p) as i64;
        let units: &[i64] = if p <= 30 { &[1, r, -1, -r] } else { &[1, r] };
        let exps: &[u32] = if p <= 13 { &[0, 1, 2] } else { &[0, 1] };
        let mut values = Vec::new();
        for &u in units {
            for &e in exps {
                values.push(rat_i(u * (p as i64).pow(e)));
            }
        }
        for i in 0..values.len() {
            for j in i..values.len() {
                let (a, b) = (&values[i], &values[j]);
                let sym = symbols::hilbert_p(a, b, p).unwrap();
                let solvable = common::hilbert_oracle(a, b, p);
                c.check((sym == 1) == solvable, || {
                    format!("oracle disagrees at p={p}, ({a},{b}): symbol {sym}")
                });
            }
        }
    }
    // dyadic oracle
    let mut values = Vec::new();
    for u in [1i64, 3, 5, 7, -1, -3, -5, -7] {
        for e in [0u32, 1, 2] {
            values.push(rat_i(u * (2i64).pow(e)));
        }
    }
    for i in 0..values.len() {
        for j in i..values.len() {
            let (a, b) = (&values[i], &values[j]);
            let sym = symbols::hilbert_p(a, b, 2).unwrap();
            let solvable = common::hilbert_oracle(a, b, 2);
            c.check((sym == 1) == solvable, || {
                format!("dyadic oracle disagrees at ({a},{b}): symbol {sym}")
            });
        }
    }
    c.finish(4, "Hilbert product formula and solvability oracles");
}

#[test]
fn criterion_5_quaternion_correspondence() {
    let mut c = Criterion::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (orig, l) = rand_simple(&mut rng);
        let h = quat::from_lie(&l).unwrap();
        // unital and associative on all basis triples
        for i in 0..4 {
            let x = HElt::basis(i);
            c.check(
                h.mul(&x, &HElt::one()) == x && h.mul(&HElt::one(), &x) == x,
                || "H(s) is not unital".to_string(),
            );
            for j in 0..4 {
                for k in 0..4 {
                    let (y, z) = (HElt::basis(j), HElt::basis(k));
                    c.check(
                        h.mul(&h.mul(&x, &y), &z) == h.mul(&x, &h.mul(&y, &z)),
                        || format!("H(s) not associative on basis triple ({i},{j},{k})"),
                    );
                }
            }
        }
        // round trip through the quaternion algebra
        let back = quat::im_to_lie(h.algebra());
        c.check(lie3::is_isomorphic(&orig, &back).unwrap(), || {
            format!(
                "im_to_lie∘from_lie not isomorphic to L({},{})",
                orig.alpha, orig.beta
            )
        });
        // norm multiplicativity on 5 random pairs per algebra
        for _ in 0..5 {
            let mut elt = || {
                HElt::new(
                    rat_i(rng.gen_range(-5..=5)),
                    LieVec::from_rats(
                        rat_i(rng.gen_range(-5..=5)),
                        rat_i(rng.gen_range(-5..=5)),
                        rat_i(rng.gen_range(-5..=5)),
                    ),
                )
            };
            let (x, y) = (elt(), elt());
            c.check(h.norm(&h.mul(&x, &y)) == h.norm(&x) * h.norm(&y), || {
                "norm is not multiplicative on H(s)".to_string()
            });
        }
        // the cross-product style norm identity of the Killing form
        let gram = lie3::killing(&l);
        for _ in 0..5 {
            let mut vec = || {
                LieVec::from_rats(
                    rat_i(rng.gen_range(-5..=5)),
                    rat_i(rng.gen_range(-5..=5)),
                    rat_i(rng.gen_range(-5..=5)),
                )
            };
            let (v, w) = (vec(), vec());
            let br = l.bracket(&v, &w);
            let lhs = gram.bilinear(&br, &br);
            let kvw = gram.bilinear(&v, &w);
            let rhs = (&kvw * &kvw - gram.bilinear(&v, &v) * gram.bilinear(&w, &w)) / rat_i(2);
            c.check(lhs == rhs, || "K([v,w],[v,w]) identity fails".to_string());
        }
    }
    c.finish(5, "quaternion correspondence on 20 random simple algebras");
}

#[test]
fn criterion_6_killing_and_char_poly_formulas() {
    let mut c = Criterion::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let p = LParams::new(rand_rat(&mut rng, 20, 6), rand_rat(&mut rng, 20, 6)).unwrap();
        let f = lie3::killing_form(&p);
        let expect = [
            rat_i(-2) * &p.beta,
            rat_i(-2) * &p.alpha,
            rat_i(-2) * &p.alpha * &p.beta,
        ];
        c.check(f.coeffs() == &expect[..], || {
            format!("killing formula fails at ({},{})", p.alpha, p.beta)
        });
        c.check(qforms::disc_class(&f).unwrap() == rat_i(-2), || {
            format!("disc class not [-2] at ({},{})", p.alpha, p.beta)
        });
        let l = lie3::from_params(&p);
        let h = LieVec::from_rats(
            rat_i(rng.gen_range(-10..=10)),
            rat_i(rng.gen_range(-10..=10)),
            rat_i(rng.gen_range(-10..=10)),
        );
        let half_norm = lie3::killing(&l).bilinear(&h, &h) / rat_i(2);
        c.check(
            lie3::ad_char_poly(&l, &h) == [Rat::zero(), half_norm, Rat::zero(), rat_i(-1)],
            || format!("char poly formula fails at ({},{})", p.alpha, p.beta),
        );
    }
    c.finish(6, "Killing and ad char-poly closed forms, 100 samples");
}

#[test]
fn criterion_7_local_criterion() {
    let mut c = Criterion::new();
    let odd_primes: Vec<u64> = (3..=100).filter(|&n| arith::is_prime_u64(n)).collect();
    for &q in &odd_primes {
        let nr = common::least_nonresidue(q) as i64;
        let qi = q as i64;
        // candidate pairs, filtered to those non-split at q
        let candidates = [
            (-nr, qi),
            (-nr, 2 * qi),
            (1, -nr * qi),
            (-2 * nr, qi),
            (qi, qi),
            (-qi, 3 * qi),
            (nr, -qi),
            (2, -qi),
        ];
        let mut sampled = 0;
        for (a, b) in candidates {
            let p = LParams::of(a, b).unwrap();
            match cartan::obtainable_over_qp(&p, q) {
                Err(_) => continue, // split at q: the criterion is vacuous
                Ok(got) => {
                    sampled += 1;
                    c.check(got == (q % 4 == 3), || {
                        format!("local criterion fails for L({a},{b}) at {q}")
                    });
                    let extended = lie3::killing_form(&p).extend(rat_i(2)).unwrap();
                    let by_form = qforms::is_isotropic_local(&extended, Place::Finite(q)).unwrap();
                    c.check(got == by_form, || {
                        format!("local representation of -2 disagrees for L({a},{b}) at {q}")
                    });
                }
            }
        }
        c.check(sampled >= 3, || format!("too few non-split samples at {q}"));
    }
    c.finish(7, "local obtainability criterion at every odd prime ≤ 100");
}

#[test]
fn criterion_8_brauer_correspondences() {
    let mut c = Criterion::new();
    let deltas = [-1i64, 3, 7, -3, 21, -7];
    for &d in &deltas {
        let ok = brauer::correspondence_roundtrip(&rat_i(d)).unwrap();
        c.check(ok, || format!("roundtrip fails for Δ = {d}"));
    }
    // the tensor relation on all pairs
    for &d1 in &deltas {
        for &d2 in &deltas {
            let c1 = brauer::class_of(&rat_i(d1)).unwrap();
            let c2 = brauer::class_of(&rat_i(d2)).unwrap();
            let prod = brauer::group_mul(&c1, &c2);
            c.check(prod == brauer::class_of(&rat_i(d1 * d2)).unwrap(), || {
                format!("group law fails on ({d1},{d2})")
            });
            let ram = |t: &Rat| {
                quat::ramification_set(&QuatAlg::new(rat_i(-1), t.clone()).unwrap()).unwrap()
            };
            let expected: BTreeSet<Place> = ram(&rat_i(d1))
                .symmetric_difference(&ram(&rat_i(d2)))
                .copied()
                .collect();
            c.check(ram(prod.rep()) == expected, || {
                format!("tensor ramification relation fails on ({d1},{d2})")
            });
        }
    }
    // isomorphism of obtainable algebras ⟺ equality of classes
    let sample: Vec<LParams> = [
        rat_i(3),
        rat_i(-1),
        rat_i(7),
        rat_i(-3),
        rat_i(21),
        rat_i(-7),
        rat(3, 2),
        rat(-1, 2),
        rat(7, 4),
        rat_i(6),
    ]
    .into_iter()
    .map(|a| {
        cartan::construct(&CartanReflection::new(a).unwrap())
            .unwrap()
            .params
    })
    .collect();
    for i in 0..sample.len() {
        for j in i + 1..sample.len() {
            let iso = lie3::is_isomorphic(&sample[i], &sample[j]).unwrap();
            let same = brauer::class_from_obtainable(&sample[i]).unwrap()
                == brauer::class_from_obtainable(&sample[j]).unwrap();
            c.check(iso == same, || {
                format!("iso/class equivalence fails on sample pair ({i},{j})")
            });
        }
    }
    c.finish(8, "involution/algebra/class correspondence round-trips");
}

#[test]
fn criterion_9_standardize_roundtrip() {
    let mut c = Criterion::new();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for p in [LParams::of(2, 3).unwrap(), LParams::of(-1, 1).unwrap()] {
        for _ in 0..50 {
            let twisted = lie3::from_params(&p)
                .conjugate(&rand_invertible(&mut rng))
                .unwrap();
            let (q, basis) = lie3::standardize(&twisted).unwrap();
            c.check(
                twisted.conjugate(&basis).unwrap() == lie3::from_params(&q),
                || format!("basis change does not reproduce L({},{})", q.alpha, q.beta),
            );
            c.check(lie3::is_isomorphic(&p, &q).unwrap(), || {
                format!(
                    "standardize of a twist of L({},{}) not isomorphic",
                    p.alpha, p.beta
                )
            });
        }
    }
    c.finish(9, "standardize round-trip on 100 random basis changes");
}
