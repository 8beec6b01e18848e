//! Index tables for exterior and symmetric powers.
//!
//! A basis element of `Λ^k` is a strictly increasing `k`-subset of `{0..n}`,
//! stored as a bitmask; positions follow lexicographic order of the sorted
//! tuples. Symmetric powers use multisets (weakly increasing tuples) in the
//! same order.

use std::collections::HashMap;

pub type Mask = u64;

#[inline]
pub fn contains(mask: Mask, j: usize) -> bool {
    mask >> j & 1 == 1
}

/// Number of elements of `mask` smaller than `j`.
#[inline]
pub fn position(mask: Mask, j: usize) -> usize {
    (mask & ((1u64 << j) - 1)).count_ones() as usize
}

pub fn elements(mask: Mask) -> Vec<usize> {
    (0..64).filter(|&j| contains(mask, j)).collect()
}

pub fn mask_of(elements: &[usize]) -> Mask {
    elements.iter().fold(0, |m, &j| m | 1 << j)
}

/// Sign of the shuffle that merges disjoint sorted sets `a` then `b`:
/// `(-1)^(number of pairs x in a, y in b with x > y)`.
pub fn wedge_sign(a: Mask, b: Mask) -> i64 {
    debug_assert_eq!(a & b, 0);
    let inversions: u32 = elements(b).iter().map(|&y| (a >> (y + 1)).count_ones()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[inline]
pub fn sign_of(parity: usize) -> i64 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Lexicographically ordered `k`-subsets of `{0..n}` with inverse lookup.
#[derive(Debug, Clone)]
pub struct ExteriorBasis {
    n: usize,
    k: usize,
    subsets: Vec<Mask>,
    index: HashMap<Mask, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "exterior bases are limited to n <= 63");
        let mut subsets = Vec::with_capacity(binomial(n, k));
        let mut current = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Mask>) {
            if cur.len() == k {
                out.push(mask_of(cur));
                return;
            }
            for j in start..n {
                if n - j < k - cur.len() {
                    break;
                }
                cur.push(j);
                rec(j + 1, n, k, cur, out);
                cur.pop();
            }
        }
        if k <= n {
            rec(0, n, k, &mut current, &mut subsets);
        }
        let index = subsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ExteriorBasis { n, k, subsets, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subset(&self, pos: usize) -> Mask {
        self.subsets[pos]
    }

    pub fn subsets(&self) -> &[Mask] {
        &self.subsets
    }

    pub fn position_of(&self, mask: Mask) -> Option<usize> {
        self.index.get(&mask).copied()
    }
}

/// Dimension of `Λ^k` of an `n`-dimensional space.
pub fn exterior_dim(n: usize, k: usize) -> usize {
    binomial(n, k)
}

/// Dimension of `S^i` of an `n`-dimensional space.
pub fn symmetric_dim(n: usize, i: usize) -> usize {
    if n == 0 {
        return usize::from(i == 0);
    }
    binomial(n + i - 1, i)
}

/// Monomials of degree `i` in `n` variables, each a weakly increasing tuple of
/// variable indices, in lexicographic order.
#[derive(Debug, Clone)]
pub struct SymmetricBasis {
    monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl SymmetricBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        let mut monomials = Vec::with_capacity(symmetric_dim(n, degree));
        fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for j in start..n {
                cur.push(j);
                rec(j, n, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(0, n, degree, &mut Vec::new(), &mut monomials);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        SymmetricBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, pos: usize) -> &[usize] {
        &self.monomials[pos]
    }

    pub fn position_of(&self, sorted: &[usize]) -> Option<usize> {
        self.index.get(sorted).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_subsets() {
        let b = ExteriorBasis::new(4, 2);
        let got: Vec<Vec<usize>> = b.subsets().iter().map(|&m| elements(m)).collect();
        assert_eq!(
            got,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        for (i, &m) in b.subsets().iter().enumerate() {
            assert_eq!(b.position_of(m), Some(i));
        }
        assert_eq!(ExteriorBasis::new(3, 0).len(), 1);
        assert_eq!(ExteriorBasis::new(3, 4).len(), 0);
        assert_eq!(exterior_dim(9, 4), 126);
    }

    #[test]
    fn wedge_signs_count_inversions() {
        // {1} then {0}: one inversion
        assert_eq!(wedge_sign(mask_of(&[1]), mask_of(&[0])), -1);
        // {0,2} then {1}: 2 > 1 once
        assert_eq!(wedge_sign(mask_of(&[0, 2]), mask_of(&[1])), -1);
        // {1,2} then {0}: two inversions
        assert_eq!(wedge_sign(mask_of(&[1, 2]), mask_of(&[0])), 1);
        assert_eq!(wedge_sign(mask_of(&[0]), mask_of(&[1, 2])), 1);
        // brute force against explicit permutation parity
        for a in 0u64..32 {
            for b in 0u64..32 {
                if a & b != 0 {
                    continue;
                }
                let seq: Vec<usize> = elements(a).into_iter().chain(elements(b)).collect();
                let mut inv = 0;
                for x in 0..seq.len() {
                    for y in x + 1..seq.len() {
                        if seq[x] > seq[y] {
                            inv += 1;
                        }
                    }
                }
                assert_eq!(wedge_sign(a, b), sign_of(inv), "{a:b} {b:b}");
            }
        }
    }

    #[test]
    fn multisets() {
        let s = SymmetricBasis::new(3, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s.monomial(0), &[0, 0]);
        assert_eq!(s.monomial(1), &[0, 1]);
        assert_eq!(s.monomial(5), &[2, 2]);
        assert_eq!(symmetric_dim(3, 4), 15);
        assert_eq!(SymmetricBasis::new(2, 0).len(), 1);
    }
}
