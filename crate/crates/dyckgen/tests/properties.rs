//! Property tests over randomly selected words, labels, and cut points.

use proptest::prelude::*;

use dyckgen::engine::Generator;
use dyckgen::label::{produce, produce_firstborn_first, Label};
use dyckgen::word::DyckWord;
use dyckgen::{oracle, tree};

fn arb_word() -> impl Strategy<Value = DyckWord> {
    (1usize..=9).prop_flat_map(|n| {
        let words = oracle::enumerate(n).unwrap().words().to_vec();
        proptest::sample::select(words)
    })
}

fn arb_word_and_index() -> impl Strategy<Value = (DyckWord, usize)> {
    (1usize..=9).prop_flat_map(|n| {
        let words = oracle::enumerate(n).unwrap().words().to_vec();
        (proptest::sample::select(words), 0..2 * n)
    })
}

proptest! {
    #[test]
    fn enumerated_words_validate((w, flip) in arb_word_and_index()) {
        prop_assert!(DyckWord::validate(w.bits()).is_ok());
        // Flipping any single bit unbalances the word.
        let mut bits = w.bits().to_vec();
        bits[flip] = 1 - bits[flip];
        prop_assert!(DyckWord::validate(&bits).is_err());
    }

    #[test]
    fn parent_and_children_invert(w in arb_word()) {
        let n = w.semilength();
        let root = DyckWord::max_path(n).unwrap();
        if w == root {
            prop_assert!(tree::parent(&w).is_err());
        } else {
            let p = tree::parent(&w).unwrap();
            let kids = tree::children(&p, p == root).unwrap();
            prop_assert!(kids.contains(&w), "{w} not among children of {p}");
        }
    }

    #[test]
    fn production_shape(k in 1usize..40, i in 0usize..40) {
        let out = produce(Label::new(k, i));
        if i == 0 {
            prop_assert!(out.is_empty());
        } else {
            prop_assert_eq!(out.len(), k);
            for (s, l) in (1..=k).zip(&out) {
                prop_assert_eq!(l.k, s);
                prop_assert_eq!(l.i, s.min(i) - 1);
            }
            let mut reversed = out.clone();
            reversed.reverse();
            prop_assert_eq!(produce_firstborn_first(Label::new(k, i)), reversed);
        }
    }

    #[test]
    fn snapshots_resume_seamlessly(n in 2usize..=8, cut in 0.0f64..1.0) {
        let total = oracle::catalan_u64(n);
        let steps = ((total as f64) * cut) as u64;
        let mut gen = Generator::new(n).unwrap();
        for _ in 0..steps {
            prop_assert!(gen.advance());
        }
        let restored = Generator::restore(&gen.snapshot()).unwrap();
        prop_assert_eq!(&restored, &gen);

        let tail_a: Vec<DyckWord> = gen.collect();
        let tail_b: Vec<DyckWord> = restored.collect();
        prop_assert_eq!(&tail_a, &tail_b);
        prop_assert_eq!(steps + tail_b.len() as u64, total);
    }
}
