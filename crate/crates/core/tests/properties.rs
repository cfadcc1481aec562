mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rota_mzv::algebra::{int, rat, to_f64, LinComb, Rational, TPoly};
use rota_mzv::cli::{evaluate, parse};
use rota_mzv::compositions::{comp_shuffle_lin, project_s_row};
use rota_mzv::free_rba::{universal_eval, FnTarget};
use rota_mzv::numerics::{li_eval, regpoly_eval, z_directional, MzvCache, PrecisionContext};
use rota_mzv::regularization::{reduce_leading_ones, zsh_reduce, zst_reduce, RegPoly};
use rota_mzv::{
    bistuffle, comp_shuffle, mixable_shuffle, rba_product, stuffle, word_shuffle, BiComposition, Composition,
    Letter, TensorWord, Word,
};

fn composition(min: u32, max: u32, len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(min..=max, 1..=len).prop_map(|v| Composition::new(v).unwrap())
}

fn convergent(len: usize) -> impl Strategy<Value = Composition> {
    (2..=3u32, prop::collection::vec(1..=2u32, 0..len)).prop_map(|(head, tail)| {
        let mut v = vec![head];
        v.extend(tail);
        Composition::new(v).unwrap()
    })
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max_len)
        .prop_map(|bits| Word::new(bits.into_iter().map(|b| if b { Letter::X1 } else { Letter::X0 }).collect()))
}

fn tensor() -> impl Strategy<Value = TensorWord> {
    (prop::collection::vec(0..=2u32, 0..=2), 1..=2u32).prop_map(|(mut v, last)| {
        v.push(last);
        TensorWord::new(v).unwrap()
    })
}

fn to_map<A: Ord + Clone>(x: LinComb<Vec<A>>) -> BTreeMap<Vec<A>, Rational> {
    x.into_terms().collect()
}

fn poly_gap(a: &TPoly<f64>, b: &TPoly<f64>) -> f64 {
    (a.clone() - b.clone()).iter().map(|(_, c)| c.abs()).fold(0.0, f64::max)
}

fn numeric(x: &LinComb<Composition>, reduce: fn(&Composition) -> rota_mzv::Result<RegPoly>, cache: &mut MzvCache) -> TPoly<f64> {
    let mut out = TPoly::default();
    for (s, c) in x.iter() {
        out = out + regpoly_eval(&reduce(s).unwrap(), cache).unwrap().scale(&to_f64(c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn mixable_shuffle_matches_enumeration(
        a in prop::collection::vec(-3..=3i64, 0..=4),
        b in prop::collection::vec(-3..=3i64, 0..=4),
        num in -3..=3i64,
        den in 1..=3i64,
    ) {
        let lambda = rat(num, den);
        let fast = mixable_shuffle(&a, &b, &lambda, |x, y| Some(x * y)).unwrap();
        prop_assert_eq!(to_map(fast), common::brute_mixable(&a, &b, &lambda, |x, y| x * y));
    }

    #[test]
    fn word_shuffle_matches_enumeration(u in word(5), v in word(5)) {
        prop_assert_eq!(word_shuffle(&u, &v), common::brute_word_shuffle(&u, &v));
    }

    #[test]
    fn shuffle_is_degree_additive(s in composition(0, 3, 3), t in composition(0, 3, 3)) {
        let n = s.degree() + t.degree();
        prop_assert!(comp_shuffle(&s, &t).basis_elements().all(|c| c.degree() == n));
    }

    #[test]
    fn positive_shuffle_counts_interleavings(s in composition(1, 3, 3), t in composition(1, 3, 3)) {
        let (m, n) = (s.weight() as usize, t.weight() as usize);
        let total = common::subsets(m + n, m).len() as i64;
        prop_assert_eq!(comp_shuffle(&s, &t).coefficient_sum(), int(total));
    }

    #[test]
    fn bistuffle_projects_to_stuffle(
        u in prop::collection::vec((-2..=3i64, 0..=2i64), 1..=3),
        v in prop::collection::vec((-2..=3i64, 0..=2i64), 1..=3),
    ) {
        let mk = |p: &[(i64, i64)]| {
            let (s, r): (Vec<i64>, Vec<i64>) = p.iter().copied().unzip();
            BiComposition::from_ints(&s, &r).unwrap()
        };
        let (x, y) = (mk(&u), mk(&v));
        let prod = bistuffle(&x, &y);
        prop_assert_eq!(&prod, &bistuffle(&y, &x));
        let expected = common::brute_mixable(&x.s_row(), &y.s_row(), &int(1), |a, b| a + b);
        prop_assert_eq!(to_map(project_s_row(&prod)), expected);
    }

    #[test]
    fn leading_ones_round_trip(ell in 0..=3usize, s in convergent(2)) {
        let mut rebuilt = LinComb::zero();
        for (a, i, t) in reduce_leading_ones(ell, &s).unwrap() {
            prop_assert!(t.is_convergent());
            let term = if i == 0 {
                LinComb::basis(t)
            } else {
                common::brute_stuffle(&Composition::new(vec![1; i]).unwrap(), &t)
            };
            rebuilt.add_scaled(&term, &a);
        }
        let mut whole = vec![1; ell];
        whole.extend_from_slice(s.entries());
        prop_assert_eq!(rebuilt, LinComb::basis(Composition::new(whole).unwrap()));
    }

    #[test]
    fn universal_eval_is_multiplicative(x in tensor(), y in tensor()) {
        // polynomials without constant term, integration from 0
        type Poly = BTreeMap<u32, Rational>;
        let target = FnTarget::new(
            |a: &Poly, b: &Poly| -> Result<Poly, ()> {
                let mut out = Poly::new();
                for (i, p) in a {
                    for (j, q) in b {
                        *out.entry(i + j).or_insert_with(|| int(0)) += p * q;
                    }
                }
                Ok(out)
            },
            |a: &Poly| -> Result<Poly, ()> {
                Ok(a.iter().map(|(i, p)| (i + 1, p / int(i64::from(i + 1)))).collect())
            },
        );
        let gen: Poly = [(1, int(1))].into();
        let eval = |t: &TensorWord| universal_eval(&target, &gen, t).unwrap();
        let mut lhs = Poly::new();
        for (t, c) in rba_product(&x, &y).iter() {
            for (i, p) in eval(t) {
                *lhs.entry(i).or_insert_with(|| int(0)) += c * p;
            }
        }
        lhs.retain(|_, c| *c != int(0));
        let (ex, ey) = (eval(&x), eval(&y));
        let mut rhs = Poly::new();
        for (i, p) in &ex {
            for (j, q) in &ey {
                *rhs.entry(i + j).or_insert_with(|| int(0)) += p * q;
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_round_trip(text in expression(4)) {
        let e = parse(&text).unwrap();
        let printed = e.to_string();
        let again = parse(&printed).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn evaluation_is_deterministic(text in expression(2)) {
        let e = parse(&text).unwrap();
        let first = evaluate(&e).map(|v| v.to_json().to_string()).map_err(|err| err.to_string());
        let second = evaluate(&parse(&text).unwrap()).map(|v| v.to_json().to_string()).map_err(|err| err.to_string());
        let printed = evaluate(&parse(&e.to_string()).unwrap()).map(|v| v.to_json().to_string()).map_err(|err| err.to_string());
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(&first, &printed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn li_is_a_shuffle_homomorphism(s in composition(0, 2, 2), t in composition(0, 2, 2), z in 0.05f64..0.8) {
        let ctx = PrecisionContext::default();
        let lhs: f64 = comp_shuffle(&s, &t).iter().map(|(c, q)| to_f64(q) * li_eval(c, z, &ctx).unwrap().value).sum();
        let rhs = li_eval(&s, z, &ctx).unwrap().value * li_eval(&t, z, &ctx).unwrap().value;
        prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn directional_values_respect_bistuffle(
        u in prop::collection::vec((-1..=2i64, 1..=2i64), 1..=2),
        v in prop::collection::vec((-1..=2i64, 1..=2i64), 1..=2),
    ) {
        let ctx = PrecisionContext::default();
        let eps = -0.5;
        let mk = |p: &[(i64, i64)]| {
            let (s, r): (Vec<i64>, Vec<i64>) = p.iter().copied().unzip();
            BiComposition::from_ints(&s, &r).unwrap()
        };
        let (x, y) = (mk(&u), mk(&v));
        let lhs: f64 = bistuffle(&x, &y).iter().map(|(b, q)| to_f64(q) * z_directional(b, eps, &ctx).unwrap().value).sum();
        let rhs = z_directional(&x, eps, &ctx).unwrap().value * z_directional(&y, eps, &ctx).unwrap().value;
        prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn regularizations_are_multiplicative(s in composition(1, 2, 2), t in composition(1, 2, 2)) {
        let mut cache = MzvCache::new(PrecisionContext::default());
        let (bs, bt) = (LinComb::basis(s.clone()), LinComb::basis(t.clone()));
        let sh = numeric(&comp_shuffle_lin(&bs, &bt), zsh_reduce, &mut cache);
        let sh_prod = numeric(&bs, zsh_reduce, &mut cache) * numeric(&bt, zsh_reduce, &mut cache);
        prop_assert!(poly_gap(&sh, &sh_prod) < 1e-3, "shuffle: {} vs {}", sh, sh_prod);
        let st = numeric(&stuffle(&s, &t).unwrap(), zst_reduce, &mut cache);
        let st_prod = numeric(&bs, zst_reduce, &mut cache) * numeric(&bt, zst_reduce, &mut cache);
        prop_assert!(poly_gap(&st, &st_prod) < 1e-3, "stuffle: {} vs {}", st, st_prod);
    }
}

#[test]
fn mzv_error_bars_contain_known_values() {
    let ctx = PrecisionContext::default();
    let pi4 = std::f64::consts::PI.powi(4);
    let zeta3 = 1.2020569031595942;
    let known: [(Composition, f64); 4] = [
        (Composition::from([2, 1]), zeta3),
        (Composition::from([3, 1]), pi4 / 360.0),
        (Composition::from([2, 2]), pi4 / 120.0),
        (Composition::from([2, 1, 1]), pi4 / 90.0),
    ];
    for (s, value) in known {
        for cutoff in [1000, 2000, 4000, 8000] {
            let est = rota_mzv::numerics::mzv_eval_with_cutoff(&s, cutoff, &ctx).unwrap();
            assert!(est.contains(value), "{s} at cutoff {cutoff}: {est} misses {value}");
        }
    }
}

fn leaf(kind: usize) -> BoxedStrategy<String> {
    match kind {
        0 => prop::collection::vec(prop_oneof![Just("x0"), Just("x1")], 1..=3).prop_map(|v| v.concat()).boxed(),
        1 => prop::collection::vec(0..=3u32, 1..=3)
            .prop_map(|v| format!("[{}]", v.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")))
            .boxed(),
        2 => prop::collection::vec((-2..=2i64, 0..=2i64, 1..=2i64), 1..=2)
            .prop_map(|v| {
                let s: Vec<String> = v.iter().map(|(s, _, _)| s.to_string()).collect();
                let r: Vec<String> = v.iter().map(|(_, p, q)| format!("{p}/{q}")).collect();
                format!("[{} | {}]", s.join(","), r.join(","))
            })
            .boxed(),
        _ => (prop::collection::vec(0..=2u32, 0..=2), 1..=2u32)
            .prop_map(|(mut v, last)| {
                v.push(last);
                format!("({})", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            })
            .boxed(),
    }
}

/// Well-typed expression text of kind 0 word, 1 composition,
/// 2 bicomposition, 3 tensor, nested at most `depth` deep.
fn typed(kind: usize, depth: u32) -> BoxedStrategy<String> {
    if depth == 0 {
        return leaf(kind);
    }
    let sub = |k| typed(k, depth - 1);
    let same = sub(kind);
    let scalar = (-3..=3i64, 1..=3i64).prop_map(|(p, q)| format!("{p}/{q}"));
    let mut options: Vec<BoxedStrategy<String>> = vec![
        leaf(kind),
        (same.clone(), same.clone(), prop_oneof![Just("+"), Just("-")])
            .prop_map(|(a, b, op)| format!("{a} {op} ({b})"))
            .boxed(),
        (scalar.clone(), same.clone()).prop_map(|(q, a)| format!("{q}*({a})")).boxed(),
        same.clone().prop_map(|a| format!("-({a})")).boxed(),
    ];
    let binary = |name: &'static str| (same.clone(), same.clone()).prop_map(move |(a, b)| format!("{name}({a}, {b})")).boxed();
    match kind {
        0 => {
            options.push(binary("sh"));
            options.push((same.clone(), same.clone()).prop_map(|(a, b)| format!("msh(0; {a}, {b})")).boxed());
            options.push(same.clone().prop_map(|a| format!("I0({a})")).boxed());
            options.push(sub(3).prop_map(|a| format!("f({a})")).boxed());
        }
        1 => {
            options.push(binary("sh"));
            options.push((scalar, same.clone(), same.clone()).prop_map(|(q, a, b)| format!("msh({q}; {a}, {b})")).boxed());
            options.push(same.clone().prop_map(|a| format!("I({a})")).boxed());
            options.push(sub(3).prop_map(|a| format!("phi({a})")).boxed());
            options.push(sub(0).prop_map(|a| format!("eta({a})")).boxed());
        }
        2 => {
            options.push(binary("st"));
            options.push((scalar, same.clone(), same.clone()).prop_map(|(q, a, b)| format!("msh({q}; {a}, {b})")).boxed());
        }
        _ => {
            options.push(binary("sh"));
            options.push(same.prop_map(|a| format!("Px({a})")).boxed());
        }
    }
    prop::strategy::Union::new(options).boxed()
}

fn expression(depth: u32) -> BoxedStrategy<String> {
    prop_oneof![typed(0, depth), typed(1, depth), typed(2, depth), typed(3, depth)].boxed()
}
