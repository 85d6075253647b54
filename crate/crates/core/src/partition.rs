//! The partition function `p(n)`.

/// Number of partitions of `n`, by dynamic programming over the largest
/// allowed part. Exact in `u128` up to `n` of about 1200; panics beyond that.
pub fn partition_count(n: usize) -> u128 {
    *partition_table(n).last().expect("table is non-empty")
}

/// `[p(0), p(1), ..., p(n_max)]`.
pub fn partition_table(n_max: usize) -> Vec<u128> {
    let mut table = vec![0u128; n_max + 1];
    table[0] = 1;
    for part in 1..=n_max {
        for m in part..=n_max {
            table[m] = table[m]
                .checked_add(table[m - part])
                .expect("partition count overflows u128");
        }
    }
    table
}
