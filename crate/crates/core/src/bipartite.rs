//! Odd-bipartitions of even-uniform hypergraphs via a GF(2) parity system.
//!
//! Unknown `y_v ∈ {0, 1}` marks membership of vertex `v` in `V1`; every edge contributes
//! the constraint `Σ_{v ∈ e} y_v = 1 (mod 2)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// A split of the vertex set into two disjoint, nonempty parts (0-based vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl Partition {
    /// Checks disjoint cover of `0..n`, both parts nonempty, and odd `|e ∩ V1|` for every edge.
    pub fn is_odd_bipartition_of(&self, h: &UniformHypergraph) -> bool {
        let mut side = vec![None; h.n()];
        let tagged = self
            .v1
            .iter()
            .map(|&v| (v, true))
            .chain(self.v2.iter().map(|&v| (v, false)));
        for (v, s) in tagged {
            match side.get_mut(v) {
                Some(slot @ None) => *slot = Some(s),
                _ => return false,
            }
        }
        if self.v1.is_empty() || self.v2.is_empty() || side.iter().any(Option::is_none) {
            return false;
        }
        h.edges()
            .all(|e| e.iter().filter(|&&v| side[v] == Some(true)).count() % 2 == 1)
    }
}

/// Dense GF(2) linear system stored as bit rows with the right-hand side in a separate vector.
#[derive(Debug, Clone)]
pub struct Gf2System {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
    rhs: Vec<bool>,
}

impl Gf2System {
    pub fn new(cols: usize) -> Self {
        Gf2System {
            cols,
            words: cols.div_ceil(64),
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn push_row(&mut self, vars: &[usize], rhs: bool) {
        let mut row = vec![0u64; self.words];
        for &v in vars {
            row[v / 64] ^= 1 << (v % 64);
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    fn bit(row: &[u64], c: usize) -> bool {
        row[c / 64] >> (c % 64) & 1 == 1
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row,
    /// or `None` if the system is inconsistent.
    fn eliminate(&mut self) -> Option<Vec<usize>> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows.len()).find(|&i| Self::bit(&self.rows[i], c)) else {
                continue;
            };
            self.rows.swap(r, p);
            self.rhs.swap(r, p);
            let pivot_row = self.rows[r].clone();
            let pivot_rhs = self.rhs[r];
            for i in 0..self.rows.len() {
                if i != r && Self::bit(&self.rows[i], c) {
                    for (w, pw) in self.rows[i].iter_mut().zip(&pivot_row) {
                        *w ^= pw;
                    }
                    self.rhs[i] ^= pivot_rhs;
                }
            }
            pivots.push(c);
            r += 1;
        }
        if self.rhs[r..].iter().any(|&b| b) {
            return None;
        }
        Some(pivots)
    }

    /// One solution with every free variable set to 0, or `None` if inconsistent.
    pub fn solve(mut self) -> Option<Vec<bool>> {
        let pivots = self.eliminate()?;
        let mut x = vec![false; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = self.rhs[r];
        }
        Some(x)
    }
}

/// Finds an odd-bipartition of an even-uniform hypergraph, if one exists.
///
/// Free variables of the parity system are set to 0. For even `k` any solution already
/// leaves both parts nonempty: each edge meets `V1` in an odd, hence `V2` in an odd, count.
pub fn odd_bipartition(h: &UniformHypergraph) -> Result<Option<Partition>> {
    if h.k() % 2 == 1 {
        return Err(Error::OddUniformity { k: h.k() });
    }
    let mut sys = Gf2System::new(h.n());
    for e in h.edges() {
        sys.push_row(e, true);
    }
    let Some(y) = sys.solve() else {
        return Ok(None);
    };
    let (v1, v2): (Vec<usize>, Vec<usize>) = (0..h.n()).partition(|&v| y[v]);
    let part = Partition { v1, v2 };
    debug_assert!(part.is_odd_bipartition_of(h));
    Ok(Some(part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn exhaustive(h: &UniformHypergraph) -> bool {
        (0u64..1 << h.n()).any(|mask| {
            let (v1, v2) = (0..h.n()).partition(|&v| mask >> v & 1 == 1);
            Partition { v1, v2 }.is_odd_bipartition_of(h)
        })
    }

    #[test]
    fn odd_k_is_rejected() {
        let h = generate(&FamilySpec::Hyperstar { k: 3, d: 2 }).unwrap();
        assert_eq!(odd_bipartition(&h), Err(Error::OddUniformity { k: 3 }));
    }

    #[test]
    fn sunflower_and_hyperstar_are_odd_bipartite() {
        for spec in [
            FamilySpec::Sunflower { k: 4 },
            FamilySpec::Hyperstar { k: 4, d: 3 },
        ] {
            let h = generate(&spec).unwrap();
            let p = odd_bipartition(&h)
                .unwrap()
                .expect("cored even-uniform is odd-bipartite");
            assert!(p.is_odd_bipartition_of(&h));
        }
    }

    #[test]
    fn complete_4_5_matches_exhaustive_search() {
        let h = generate(&FamilySpec::Complete { k: 4, n: 5 }).unwrap();
        assert!(!exhaustive(&h));
        assert_eq!(odd_bipartition(&h).unwrap(), None);
    }

    #[test]
    fn small_complete_hypergraphs_agree_with_exhaustive_search() {
        for (k, n) in [(4, 4), (4, 6), (4, 7), (6, 7), (6, 8)] {
            let h = generate(&FamilySpec::Complete { k, n }).unwrap();
            assert_eq!(
                odd_bipartition(&h).unwrap().is_some(),
                exhaustive(&h),
                "complete({k},{n})"
            );
        }
    }

    #[test]
    fn partition_predicate_rejects_overlap_and_gaps() {
        let h = generate(&FamilySpec::Hyperstar { k: 4, d: 1 }).unwrap();
        assert!(Partition {
            v1: vec![1],
            v2: vec![0, 2, 3]
        }
        .is_odd_bipartition_of(&h));
        assert!(!Partition {
            v1: vec![1],
            v2: vec![0, 2]
        }
        .is_odd_bipartition_of(&h));
        assert!(!Partition {
            v1: vec![1],
            v2: vec![1, 0, 2, 3]
        }
        .is_odd_bipartition_of(&h));
        assert!(!Partition {
            v1: vec![1, 2],
            v2: vec![0, 3]
        }
        .is_odd_bipartition_of(&h));
    }

    use proptest::prelude::*;

    fn even_hypergraph() -> impl Strategy<Value = UniformHypergraph> {
        (prop_oneof![Just(4usize), Just(6usize)], 0usize..=4).prop_flat_map(|(k, extra)| {
            let n = k + extra;
            proptest::collection::vec(
                proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k),
                1..=6,
            )
            .prop_map(move |mut edges| {
                edges.sort();
                edges.dedup();
                UniformHypergraph::new(k, n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn elimination_agrees_with_exhaustive_search(h in even_hypergraph()) {
            let found = odd_bipartition(&h).unwrap();
            if let Some(p) = &found {
                prop_assert!(p.is_odd_bipartition_of(&h));
            }
            prop_assert_eq!(found.is_some(), exhaustive(&h));
        }

        #[test]
        fn even_cored_powers_are_odd_bipartite(g in crate::test_support::graph(), half in 2usize..=3) {
            let h = crate::family::kth_power(&g, 2 * half).unwrap();
            prop_assert!(odd_bipartition(&h).unwrap().is_some());
        }
    }
}
