//! Sample names and transformers.

use std::collections::BTreeSet;

use rand::Rng;

use crate::name::UpName;
use crate::transformer::{table_transformer, PrefixTransformer};

fn words(max_len: usize, max_sym: u64, min_len: usize) -> Vec<Vec<u64>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<u64>| {
                (0..=max_sym).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all.retain(|w| w.len() >= min_len);
    all
}

/// Every name with preamble length at most `max_pre`, period length at
/// most `max_per` and symbols at most `max_sym`, in normal form, sorted.
pub fn all_names(max_pre: usize, max_per: usize, max_sym: u64) -> Vec<UpName> {
    let pres = words(max_pre, max_sym, 0);
    let pers = words(max_per, max_sym, 1);
    let set: BTreeSet<UpName> =
        pres.iter().flat_map(|a| pers.iter().map(move |b| UpName::new(a.clone(), b.clone()).expect("nonempty"))).collect();
    set.into_iter().collect()
}

pub fn random_name<R: Rng>(rng: &mut R, max_pre: usize, max_per: usize, max_sym: u64) -> UpName {
    let pre_len = rng.gen_range(0..=max_pre);
    let per_len = rng.gen_range(1..=max_per);
    let pre = (0..pre_len).map(|_| rng.gen_range(0..=max_sym)).collect();
    let per = (0..per_len).map(|_| rng.gen_range(0..=max_sym)).collect();
    UpName::new(pre, per).expect("nonempty period")
}

/// A random finite-state transformer with up to 4 states that often
/// writes nothing, so it stalls on some inputs.
pub fn random_stalling<R: Rng>(rng: &mut R) -> PrefixTransformer {
    let states = rng.gen_range(1..=4);
    let width = rng.gen_range(1..=3);
    let table = (0..states)
        .map(|_| {
            (0..width)
                .map(|_| {
                    let len = if rng.gen_bool(0.4) { 0 } else { rng.gen_range(1..=2) };
                    (rng.gen_range(0..states), (0..len).map(|_| rng.gen_range(0..4)).collect())
                })
                .collect()
        })
        .collect();
    table_transformer("random", table)
}
