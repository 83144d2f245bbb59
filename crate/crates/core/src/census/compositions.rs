use crate::error::{Error, Result};

/// Ordered k-tuples of positive integers summing to n, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let k = current.len();
        let mut succ = current.clone();
        // Rightmost non-final position whose suffix can spare a unit.
        let mut suffix = succ[k - 1];
        for i in (0..k - 1).rev() {
            if suffix > k - 1 - i {
                succ[i] += 1;
                let rest = suffix - 1;
                for p in succ.iter_mut().take(k - 1).skip(i + 1) {
                    *p = 1;
                }
                succ[k - 1] = rest - (k - 2 - i);
                self.next = Some(succ);
                break;
            }
            suffix += succ[i];
        }
        Some(current)
    }
}

/// All compositions of `n` into `k` parts, lexicographically.
pub fn compositions(n: usize, k: usize) -> Result<Compositions> {
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "compositions need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let mut first = vec![1; k];
    first[k - 1] = n - k + 1;
    Ok(Compositions { next: Some(first) })
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
