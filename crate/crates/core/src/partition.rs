//! Integer partitions in the canonical (descending lexicographic) order used
//! throughout the crate for matrix layouts and serialized output.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A partition of a non-negative integer: parts sorted non-increasing, all
/// positive. The empty partition (weight 0) is allowed and prints as `"0"`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts, which must be non-increasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be non-increasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partition read off the exponent vector of a `p`-monomial:
    /// `exps[i]` copies of part `i+1`, assembled in non-increasing order.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &e) in exps.iter().enumerate().rev() {
            for _ in 0..e {
                parts.push((i + 1) as u32);
            }
        }
        Partition { parts }
    }

    /// Multiset union of two partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().chain(other.parts.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

/// Canonical order: descending lexicographic, so `{4} < {3,1} < {2,2} <
/// {2,1,1} < {1,1,1,1}` as map keys; iteration then visits `{4}` first.
/// Missing entries compare as zero parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            let a = self.parts.get(i).copied().unwrap_or(0);
            let b = other.parts.get(i).copied().unwrap_or(0);
            match b.cmp(&a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let joined: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", joined.join("+"))
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split('+') {
            let p: u32 = token
                .trim()
                .parse()
                .map_err(|_| format!("invalid partition part '{token}'"))?;
            if p == 0 {
                return Err("partition parts must be positive".into());
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("partition '{s}' is not non-increasing"));
        }
        Ok(Partition { parts })
    }
}

/// All partitions of `k`, each exactly once, in canonical order.
pub fn partitions(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen(k, k, &mut current, &mut out);
    out
}

fn gen(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let first = remaining.min(max_part);
    for part in (1..=first).rev() {
        current.push(part);
        gen(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(
            partitions(2),
            vec![Partition::new(vec![2]), Partition::new(vec![1, 1])]
        );
        // Brute-force oracle: every partition of 4 as a non-increasing
        // composition, enumerated directly.
        let brute = {
            let mut found = Vec::new();
            for a in (1..=4u32).rev() {
                for b in (0..=a).rev() {
                    for c in (0..=b).rev() {
                        for d in (0..=c).rev() {
                            let parts: Vec<u32> =
                                [a, b, c, d].into_iter().filter(|&p| p > 0).collect();
                            if parts.iter().sum::<u32>() == 4 && !found.contains(&parts) {
                                found.push(parts);
                            }
                        }
                    }
                }
            }
            found
        };
        let got = partitions(4);
        assert_eq!(got.len(), brute.len());
        assert_eq!(got.len(), 5);
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let p4 = partitions(4);
        let display: Vec<String> = p4.iter().map(|p| p.to_string()).collect();
        assert_eq!(display, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
        // BTreeMap iteration must agree with generation order.
        let mut sorted = p4.clone();
        sorted.sort();
        assert_eq!(sorted, p4);
    }

    #[test]
    fn counts_match_recurrence() {
        // p(k) via the standard dynamic program over largest part.
        let kmax = 20usize;
        let mut table = vec![vec![0u64; kmax + 1]; kmax + 1];
        for row in table.iter_mut() {
            row[0] = 1;
        }
        for max in 1..=kmax {
            for k in 1..=kmax {
                table[max][k] = table[max - 1][k]
                    + if k >= max { table[max][k - max] } else { 0 };
            }
        }
        for k in 0..=kmax {
            assert_eq!(partitions(k as u32).len() as u64, table[kmax][k], "k = {k}");
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["0", "3", "2+1+1", "5+5+2"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("1+2".parse::<Partition>().is_err());
        assert!("0+1".parse::<Partition>().is_err());
    }

    #[test]
    fn from_exponents_and_merge() {
        let p = Partition::from_exponents(&[2, 0, 1]);
        assert_eq!(p.to_string(), "3+1+1");
        let q: Partition = "2+1".parse().unwrap();
        assert_eq!(p.merge(&q).to_string(), "3+2+1+1+1");
    }
}
