//! Irreducible characters of the symmetric groups.
//!
//! `χ^λ(μ)` is computed by the Murnaghan–Nakayama rule on beta-sets and
//! memoized in a process-wide table. Concurrent readers never block each
//! other; two threads racing on the same key both insert the same value.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partition::Partition;

type Table = RwLock<HashMap<(Partition, Partition), i64>>;

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The value of the irreducible character `χ^λ` on the conjugacy class of
/// cycle type `μ`. Zero when the sizes differ.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // on the identity class the value is the dimension
    if mu.parts()[0] == 1 && mu.size() <= 20 {
        let dim = lambda.irrep_dimension().expect("nonempty");
        return i64::try_from(dim).expect("dimension overflows i64");
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = table().read().unwrap().get(&key) {
        return v;
    }
    let value = murnaghan_nakayama(lambda, mu);
    table().write().unwrap().insert(key, value);
    value
}

fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> i64 {
    let hook = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();

    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < hook || beta.contains(&(b - hook)) {
            continue;
        }
        let target = b - hook;
        // beads strictly between target and b give the leg length
        let leg = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .collect();
        let sign = if leg % 2 == 0 { 1 } else { -1 };
        total += sign * character(&Partition::new(parts), &rest);
    }
    total
}
