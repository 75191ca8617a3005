//! Reduced simplicial homology of order complexes over a prime field.
//!
//! An order complex is the flag complex of a strict partial order: faces are
//! the chains x_1 < x_2 < ... < x_k. The poset arrives as a successor list
//! over topologically sorted element indices, so every chain is a strictly
//! increasing index sequence and chain enumeration never needs to re-sort.
//!
//! Reduced homology uses the augmented chain complex, so the empty complex
//! has one dimension of homology in degree -1 and a nonempty complex has
//! none there.

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(a, p - 2, p)
}

/// Sparse column over F_p: entries sorted by row, nonzero values.
type Column = Vec<(u32, u64)>;

/// result = a - scale * b (mod p), merging sorted entry lists.
fn sub_scaled(a: &Column, b: &Column, scale: u64, p: u64) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ra, va)), Some(&(rb, vb))) if ra == rb => {
                let v = (va + (p - scale * vb % p)) % p;
                if v != 0 {
                    out.push((ra, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ra, va)), Some(&(rb, _))) if ra < rb => {
                out.push((ra, va));
                i += 1;
            }
            (Some(_), Some(&(rb, vb))) => {
                let v = (p - scale * vb % p) % p;
                if v != 0 {
                    out.push((rb, v));
                }
                j += 1;
            }
            (Some(&(ra, va)), None) => {
                out.push((ra, va));
                i += 1;
            }
            (None, Some(&(rb, vb))) => {
                let v = (p - scale * vb % p) % p;
                if v != 0 {
                    out.push((rb, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Rank of a sparse matrix over F_p given as columns, by column reduction
/// on the highest-row pivot.
pub fn sparse_rank(cols: Vec<Column>, p: u64) -> usize {
    let mut pivots: std::collections::HashMap<u32, Column> = std::collections::HashMap::new();
    let mut rank = 0;
    for mut col in cols {
        while let Some(&(low, val)) = col.last() {
            match pivots.get(&low) {
                Some(pivot) => col = sub_scaled(&col, pivot, val, p),
                None => {
                    let inv = mod_inv(val, p);
                    for e in &mut col {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Chains of one fixed length, flattened into `flat` with the given stride
/// and stored in lexicographic order.
struct ChainLevel {
    flat: Vec<u32>,
    stride: usize,
}

impl ChainLevel {
    fn len(&self) -> usize {
        if self.stride == 0 {
            0
        } else {
            self.flat.len() / self.stride
        }
    }

    fn chain(&self, idx: usize) -> &[u32] {
        &self.flat[idx * self.stride..(idx + 1) * self.stride]
    }

    /// Binary search by lexicographic order; every looked-up face exists.
    fn index_of(&self, target: &[u32]) -> u32 {
        let mut lo = 0usize;
        let mut hi = self.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.chain(mid) < target {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        debug_assert_eq!(self.chain(lo), target);
        lo as u32
    }
}

/// Reduced homology dimensions of the order complex of a poset.
///
/// `succ[x]` lists the strictly greater elements of x in increasing index
/// order. Returns `h` with `h[k]` the dimension of reduced homology in
/// degree k-1, i.e. `h[0]` belongs to the empty complex, `h[1]` counts
/// extra connected components, `h[2]` cycles, and so on.
pub fn order_complex_homology(succ: &[Vec<u32>], p: u64, max_simplices: u64) -> Result<Vec<u64>> {
    let n = succ.len();
    if n == 0 {
        return Ok(vec![1]);
    }

    // enumerate chains level by level; extensions preserve lex order
    let mut levels: Vec<ChainLevel> = vec![ChainLevel {
        flat: (0..n as u32).collect(),
        stride: 1,
    }];
    let mut total: u64 = n as u64;
    loop {
        let prev = levels.last().unwrap();
        let mut flat = Vec::new();
        for idx in 0..prev.len() {
            let chain = prev.chain(idx);
            let last = *chain.last().unwrap() as usize;
            for &y in &succ[last] {
                flat.extend_from_slice(chain);
                flat.push(y);
            }
        }
        if flat.is_empty() {
            break;
        }
        let stride = prev.stride + 1;
        total += (flat.len() / stride) as u64;
        if total > max_simplices {
            return Err(Error::BudgetExceeded(format!(
                "order complex exceeds {max_simplices} simplices"
            )));
        }
        levels.push(ChainLevel { flat, stride });
    }

    let top = levels.len() - 1; // largest simplex dimension
    let mut ranks = vec![0u64; top + 2]; // ranks[k] = rank of boundary from k-simplices
    ranks[0] = 1; // augmentation onto the empty simplex

    if top >= 1 {
        // vertex-edge incidence rank = vertices minus components, by union-find
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let edges = &levels[1];
        let mut components = n as u64;
        for idx in 0..edges.len() {
            let e = edges.chain(idx);
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a as usize] = b;
                components -= 1;
            }
        }
        ranks[1] = n as u64 - components;
    }

    for k in 2..=top {
        let cols: Vec<Column> = (0..levels[k].len())
            .map(|idx| {
                let chain = levels[k].chain(idx);
                let mut face = Vec::with_capacity(chain.len() - 1);
                let mut col: Column = Vec::with_capacity(chain.len());
                for drop in 0..chain.len() {
                    face.clear();
                    face.extend_from_slice(&chain[..drop]);
                    face.extend_from_slice(&chain[drop + 1..]);
                    let row = levels[k - 1].index_of(&face);
                    let val = if drop % 2 == 0 { 1 } else { p - 1 };
                    col.push((row, val));
                }
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        ranks[k] = sparse_rank(cols, p) as u64;
    }

    // h[k] = dim H~_{k-1}; nonempty complex has h[0] = 0
    let mut h = vec![0u64; top + 2];
    for k in 0..=top {
        let c_k = levels[k].len() as u64;
        h[k + 1] = c_k - ranks[k] - ranks[k + 1];
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 32003;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }

    #[test]
    fn empty_poset_has_minus_one_homology() {
        assert_eq!(order_complex_homology(&[], P, 1000).unwrap(), vec![1]);
    }

    #[test]
    fn single_point_is_acyclic() {
        let h = order_complex_homology(&[vec![]], P, 1000).unwrap();
        assert_eq!(h, vec![0, 0]);
    }

    #[test]
    fn two_points_have_one_extra_component() {
        let h = order_complex_homology(&[vec![], vec![]], P, 1000).unwrap();
        assert_eq!(h, vec![0, 1]);
    }

    #[test]
    fn comparable_pair_is_contractible() {
        let h = order_complex_homology(&[vec![1], vec![]], P, 1000).unwrap();
        assert_eq!(h.iter().sum::<u64>(), 0);
    }

    #[test]
    fn four_cycle_poset_is_a_circle() {
        // a, b < c, d with no other relations: order complex is a 4-cycle
        let succ = vec![vec![2, 3], vec![2, 3], vec![], vec![]];
        let h = order_complex_homology(&succ, P, 1000).unwrap();
        assert_eq!(h, vec![0, 0, 1]);
    }

    #[test]
    fn boolean_lattice_proper_part_is_a_sphere() {
        // proper part of subsets of {0,1,2}: barycentric subdivision of
        // the circle
        let singles = [0b001u32, 0b010, 0b100];
        let doubles = [0b011u32, 0b101, 0b110];
        let mut succ = vec![Vec::new(); 6];
        for (i, &s) in singles.iter().enumerate() {
            for (j, &d) in doubles.iter().enumerate() {
                if s & d == s {
                    succ[i].push(3 + j as u32);
                }
            }
        }
        let h = order_complex_homology(&succ, P, 1000).unwrap();
        assert_eq!(h, vec![0, 0, 1]);

        // proper part of subsets of {0,1,2,3}: a 2-sphere
        let mut elems: Vec<u32> = (1u32..15).collect();
        elems.sort_by_key(|x| x.count_ones());
        let mut succ = vec![Vec::new(); elems.len()];
        for i in 0..elems.len() {
            for j in 0..elems.len() {
                if i != j && elems[i] & elems[j] == elems[i] && elems[i] != elems[j] {
                    succ[i].push(j as u32);
                }
            }
        }
        for s in &mut succ {
            s.sort_unstable();
        }
        let h = order_complex_homology(&succ, P, 100000).unwrap();
        assert_eq!(h, vec![0, 0, 0, 1]);
    }

    #[test]
    fn homology_is_field_independent_on_small_posets() {
        let succ = vec![vec![2, 3], vec![2, 3], vec![], vec![]];
        for p in [2, 3, 5, 32003] {
            assert_eq!(order_complex_homology(&succ, p, 1000).unwrap(), vec![0, 0, 1]);
        }
    }

    #[test]
    fn budget_aborts_enumeration() {
        let succ = vec![vec![1, 2, 3], vec![2, 3], vec![3], vec![]];
        assert!(matches!(
            order_complex_homology(&succ, P, 3),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn sparse_rank_small_cases() {
        // identity-ish 2x2
        let cols = vec![vec![(0, 1)], vec![(1, 1)]];
        assert_eq!(sparse_rank(cols, P), 2);
        // dependent columns
        let cols = vec![vec![(0, 1), (1, 1)], vec![(0, 2), (1, 2)]];
        assert_eq!(sparse_rank(cols, P), 1);
        // [[1,1],[1,-1]] is singular over F_2 and invertible over F_3
        let over2 = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, 1)]];
        assert_eq!(sparse_rank(over2, 2), 1);
        let over3 = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, 2)]];
        assert_eq!(sparse_rank(over3, 3), 2);
    }
}
