mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use fitting::corpus::{parse_grp, to_grp};
use fitting::radicals::{f_tilde, radical_report, socle, RadicalReport};
use fitting::{chief_series_with, is_abnormal, ChiefTieBreak, GroupSpec, GroupTable, Perm};

struct Fixture {
    g: GroupTable,
    r: RadicalReport,
}

fn corpus() -> &'static [Fixture] {
    static CORPUS: OnceLock<Vec<Fixture>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        common::catalog_tables()
            .into_iter()
            .map(|g| {
                let r = radical_report(&g).expect("radicals");
                Fixture { g, r }
            })
            .collect()
    })
}

fn pick(i: &Index) -> &'static Fixture {
    let c = corpus();
    &c[i.index(c.len())]
}

fn perm(max_degree: usize) -> impl Strategy<Value = Perm> {
    (1..=max_degree)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|images| Perm::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn radical_chain_is_ascending(i in any::<Index>()) {
        let Fixture { g, r } = pick(&i);
        let chain = [&r.frattini, &r.fitting, &r.fstar, r.ftilde_inf(), &r.ftilde];
        for w in chain.windows(2) {
            prop_assert!(w[0].is_subgroup_of(w[1]), "{}", g.name());
        }
        for h in chain {
            prop_assert!(g.is_normal(h));
        }
        prop_assert!(r.chain_violation().is_none());
    }

    #[test]
    fn frattini_free_groups_have_ftilde_equal_to_socle(i in any::<Index>()) {
        let Fixture { g, r } = pick(&i);
        if r.frattini.is_trivial() {
            prop_assert_eq!(&r.ftilde, &socle(g));
            prop_assert_eq!(&r.ftilde, &r.fstar);
        }
    }

    #[test]
    fn centralizers_of_fitting_type_radicals(i in any::<Index>()) {
        let Fixture { g, r } = pick(&i);
        prop_assert!(g.centralizer_of(&r.fstar).is_subgroup_of(&r.fitting));
        prop_assert!(g.centralizer_of(&r.ftilde).is_subgroup_of(&r.ftilde));
        prop_assert!(g.centralizer_of(&r.fitting).is_subgroup_of(&r.fitting) || !r.flags.soluble);
    }

    #[test]
    fn chief_factors_do_not_depend_on_tie_break(i in any::<Index>()) {
        let Fixture { g, .. } = pick(&i);
        let mut a = chief_series_with(g, ChiefTieBreak::Canonical).factor_orders;
        let mut b = chief_series_with(g, ChiefTieBreak::Reverse).factor_orders;
        prop_assert_eq!(a.iter().product::<usize>(), g.order());
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn maximal_subgroups_are_abnormal_exactly_when_not_normal(i in any::<Index>()) {
        let Fixture { g, .. } = pick(&i);
        for m in g.maximal_subgroups().unwrap() {
            prop_assert_eq!(is_abnormal(g, m), !g.is_normal(m));
        }
    }

    #[test]
    fn subgroup_operations(i in any::<Index>(), a in any::<Index>(), b in any::<Index>(), x in any::<Index>()) {
        let Fixture { g, .. } = pick(&i);
        let subs = g.subgroups().unwrap();
        let list: Vec<_> = subs.iter().collect();
        let (h, k) = (list[a.index(list.len())], list[b.index(list.len())]);
        prop_assert_eq!(g.order() % h.order(), 0);
        let j = g.join(h, k);
        prop_assert!(h.is_subgroup_of(&j) && k.is_subgroup_of(&j));
        prop_assert!(subs.contains(&j));
        for l in subs.iter().filter(|l| h.is_subgroup_of(l) && k.is_subgroup_of(l)) {
            prop_assert!(j.is_subgroup_of(l));
        }
        prop_assert!(subs.contains(&h.intersection(k)));
        prop_assert_eq!(g.product_size(h, k) * h.intersection(k).order(), h.order() * k.order());
        let conj = g.conjugate_subgroup(h, x.index(g.order()));
        prop_assert_eq!(conj.order(), h.order());
        prop_assert!(h.is_subgroup_of(&g.normalizer(h)));
        prop_assert_eq!(g.conjugates(h).len(), g.order() / g.normalizer(h).order());
    }

    #[test]
    fn sylow_subgroups(i in any::<Index>()) {
        let Fixture { g, .. } = pick(&i);
        for p in g.primes() {
            let s = g.sylow_subgroup(p);
            prop_assert_eq!(s.order(), g.p_part(p));
            let count = g.conjugates(&s).len();
            prop_assert_eq!(count % p, 1);
            prop_assert_eq!(g.order() % count, 0);
        }
    }

    #[test]
    fn quotients_respect_orders_and_ftilde_image(i in any::<Index>(), n in any::<Index>()) {
        let Fixture { g, r } = pick(&i);
        let normals = &g.normal_subgroups().all;
        let list: Vec<_> = normals.iter().collect();
        let nsub = list[n.index(list.len())];
        let q = g.quotient(nsub).unwrap();
        prop_assert_eq!(q.image.order() * nsub.order(), g.order());
        prop_assert_eq!(&q.pull_back(&q.image.trivial()), nsub);
        prop_assert!(q.push_forward(&g.whole()).is_whole());
        let image = q.push_forward(&r.ftilde);
        prop_assert!(image.is_subgroup_of(&f_tilde(&q.image).unwrap()));
    }

    #[test]
    fn perm_text_round_trip(p in perm(9), q in perm(9)) {
        let n = p.degree();
        prop_assert_eq!(Perm::parse_cycles(n, &p.to_string()).unwrap(), p.clone());
        prop_assert!(p.then(&p.inverse()).is_identity());
        if q.degree() == n {
            let r = q.inverse();
            prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        }
    }

    #[test]
    fn grp_text_round_trip(gens in prop::collection::vec(perm(7), 0..4), name in "[A-Za-z][A-Za-z0-9_]{0,8}") {
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(1);
        let gens = gens.iter().map(|g| g.extend(degree)).collect();
        let spec = GroupSpec::new(name, degree, gens).unwrap();
        prop_assert_eq!(parse_grp(&to_grp(&spec)).unwrap(), spec);
    }
}
