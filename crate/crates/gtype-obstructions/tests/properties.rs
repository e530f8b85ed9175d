use gtype_algebra::power;
use gtype_corpus::{corpus, random_type, rng, Params};
use gtype_obstructions::*;
use proptest::prelude::*;

const KINDS: [Kind; 4] = [Kind::Impasse, Kind::Type1, Kind::Type2, Kind::Type3];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn least_power_is_at_most_any_planted_power(seed in any::<u64>()) {
        let t = random_type(&mut rng(seed), &Params::default());
        let report = scan_obstructions(&t, ScanBounds { obstruction: 4, impasse: 4 }).unwrap();
        prop_assert!(report.max_materialized <= 4);
        for m in 1..=4 {
            let p = power(&t, m).unwrap();
            for k in KINDS {
                if let Some(w) = find_condition(&p, k, m) {
                    prop_assert!(w.holds_on(&p));
                    let least = report.get(k).map(|r| r.power);
                    prop_assert!(least.is_some_and(|l| l <= m), "{k} at {m}, reported {least:?}");
                }
            }
        }
        for w in report.witnesses() {
            prop_assert!(w.verify(&t).unwrap());
            let line = w.to_string();
            let back: ConditionWitness = line.parse().unwrap();
            prop_assert_eq!(back, *w);
        }
    }

    #[test]
    fn verdict_stays_within_six_n(seed in any::<u64>()) {
        let p = Params { max_n: 2, max_h: 2, max_v: 2, ..Params::default() };
        let t = random_type(&mut rng(seed), &p);
        let v = is_pseudo_anosov_class(&t);
        prop_assert!(v.powers_examined <= 6 * t.n());
        prop_assert_eq!(v.in_class, v.reasons.is_empty() && v.status == Status::InClass);
        if v.status == Status::InClass {
            prop_assert_eq!(v.powers_examined, 6 * t.n());
        }
        for r in &v.reasons {
            if let Reason::Condition(w) = r {
                prop_assert!(w.verify(&t).unwrap());
            }
        }
    }
}

#[test]
fn truncation_never_gives_a_positive_verdict() {
    for t in corpus(99, 60, &Params::default()) {
        let v = pa_verdict(&t, VerdictOptions { max_power: Some(2), ..VerdictOptions::default() });
        assert!(v.powers_examined <= 2);
        assert_ne!(v.status, Status::InClass);
    }
}
