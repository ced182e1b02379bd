//! Equality patterns of tuples: restricted-growth strings and Bell numbers.

/// `B_n`, the number of equality patterns of an `n`-tuple (Bell triangle).
///
/// Exact up to `n = 25`; panics on overflow beyond that.
pub fn bell_number(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let mut row: Vec<u128> = vec![1];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev.checked_add(x).expect("Bell number overflow"));
        }
        row = next;
    }
    *row.last().unwrap()
}

/// Alias used by the orbit module for the number of ♮-classes of `n`-tuples.
pub fn pattern_classes(n: usize) -> u128 {
    bell_number(n)
}

/// The canonical equality pattern of a tuple: `(x, y, x) ↦ [0, 1, 0]`.
pub fn natural_class_of<T: PartialEq>(tuple: &[T]) -> Vec<usize> {
    let mut seen: Vec<&T> = Vec::new();
    tuple
        .iter()
        .map(|x| match seen.iter().position(|&y| y == x) {
            Some(i) => i,
            None => {
                seen.push(x);
                seen.len() - 1
            }
        })
        .collect()
}

/// Number of partitions of an `n`-set into at most `k` blocks.
pub fn partitions_at_most(n: usize, k: usize) -> u128 {
    (0..=k.min(n)).map(|j| stirling2(n, j)).sum()
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut table = vec![vec![0u128; k + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            table[i][j] = j as u128 * table[i - 1][j] + table[i - 1][j - 1];
        }
    }
    table[n][k]
}

/// Iterates over all restricted-growth strings of length `n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    current: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            current: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // find the rightmost position that can still grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let max_prefix = self.current[..i].iter().copied().max().unwrap_or(0);
            if self.current[i] <= max_prefix {
                self.current[i] += 1;
                for x in &mut self.current[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
        Some(out)
    }
}
