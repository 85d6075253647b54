use crate::error::{Error, Result};

/// Size guards for the factorial and exponential parts of the computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on `|V|!` for shelling enumeration and canonicalization.
    pub max_factorial: u128,
    /// Upper bound on the number of labeled graphs `2^C(N, i)` in one enumeration.
    pub max_graphs: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_factorial: factorial(10).unwrap(),
            max_graphs: 1 << 20,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            max_factorial: u128::MAX,
            max_graphs: u128::MAX,
        }
    }

    pub fn check_factorial(&self, n: usize) -> Result<()> {
        match factorial(n) {
            Some(f) if f <= self.max_factorial => Ok(()),
            f => Err(Error::SizeGuard {
                what: "vertex-count factorial",
                size: f.map_or_else(|| format!("{n}! (overflow)"), |f| f.to_string()),
                limit: self.max_factorial.to_string(),
            }),
        }
    }

    pub fn check_graph_count(&self, cell_slots: usize) -> Result<()> {
        let count = if cell_slots < 128 {
            Some(1u128 << cell_slots)
        } else {
            None
        };
        match count {
            Some(c) if c <= self.max_graphs => Ok(()),
            c => Err(Error::SizeGuard {
                what: "labeled graph count",
                size: c.map_or_else(|| format!("2^{cell_slots}"), |c| c.to_string()),
                limit: self.max_graphs.to_string(),
            }),
        }
    }
}

pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}
