//! Permutations of the vertex labels `{1, 2, 3, 4}` and their action on
//! index words.
//!
//! Products are read left to right: `σ * τ` applies `σ` first and then `τ`.
//! With that convention `act_on_word` is a left action and the six coset
//! representatives below, multiplied by the stabilizer `{e, (12), (34), (12)(34)}`
//! on the right, cover `S4` exactly once.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A bijection of `{1, 2, 3, 4}`; `images[x - 1] = σ(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([1, 2, 3, 4]);

    pub fn from_images(images: [u8; 4]) -> Option<Perm4> {
        let mut seen = [false; 4];
        for &x in &images {
            if !(1..=4).contains(&x) || seen[usize::from(x) - 1] {
                return None;
            }
            seen[usize::from(x) - 1] = true;
        }
        Some(Perm4(images))
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[1, 3, 4, 2]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Perm4 {
        let mut images = [1, 2, 3, 4];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                images[usize::from(x) - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm4::from_images(images).expect("cycles must be disjoint and within 1..=4")
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    pub fn apply(&self, label: u8) -> u8 {
        self.0[usize::from(label) - 1]
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (k, &img) in self.0.iter().enumerate() {
            inv[usize::from(img) - 1] = k as u8 + 1;
        }
        Perm4(inv)
    }

    /// All 24 permutations in lexicographic order of their image tuples.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        if let Some(p) = Perm4::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

impl Mul for Perm4 {
    type Output = Perm4;

    /// `(σ * τ)(x) = τ(σ(x))`.
    fn mul(self, rhs: Perm4) -> Perm4 {
        Perm4(self.0.map(|x| rhs.apply(x)))
    }
}

/// An ordered word of distinct vertex labels `1..=N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexWord<const N: usize>([u8; N]);

pub type Word4 = IndexWord<4>;
pub type Word6 = IndexWord<6>;

impl<const N: usize> IndexWord<N> {
    /// `None` unless `labels` is a permutation of `1..=N`.
    pub fn new(labels: [u8; N]) -> Option<Self> {
        let mut seen = [false; N];
        for &x in &labels {
            let x = usize::from(x);
            if x == 0 || x > N || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(IndexWord(labels))
    }

    pub fn labels(&self) -> &[u8; N] {
        &self.0
    }

    /// Every permutation of `1..=N`, in lexicographic order.
    pub fn all() -> Vec<Self> {
        fn extend<const N: usize>(prefix: &mut Vec<u8>, out: &mut Vec<IndexWord<N>>) {
            if prefix.len() == N {
                let mut w = [0u8; N];
                w.copy_from_slice(prefix);
                out.push(IndexWord(w));
                return;
            }
            for x in 1..=N as u8 {
                if !prefix.contains(&x) {
                    prefix.push(x);
                    extend(prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::with_capacity(N), &mut out);
        out
    }
}

impl<const N: usize> fmt::Display for IndexWord<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// `b_{ijkl} ↦ b_{σ⁻¹(i) σ⁻¹(j) σ⁻¹(k) σ⁻¹(l)}`.
pub fn act_on_word(sigma: Perm4, w: Word4) -> Word4 {
    let inv = sigma.inverse();
    IndexWord(w.0.map(|x| inv.apply(x)))
}

/// `{e, (12), (34), (12)(34)}`, the subgroup fixing the vertex set of `P^e`.
pub fn stabilizer_group() -> [Perm4; 4] {
    [
        Perm4::IDENTITY,
        Perm4::from_cycles(&[&[1, 2]]),
        Perm4::from_cycles(&[&[3, 4]]),
        Perm4::from_cycles(&[&[1, 2], &[3, 4]]),
    ]
}

/// Names of the six derived parallelograms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CosetLabel {
    #[serde(rename = "e")]
    Identity,
    #[serde(rename = "(13)(24)")]
    Swap13Swap24,
    #[serde(rename = "(23)")]
    Swap23,
    #[serde(rename = "(1342)")]
    Cycle1342,
    #[serde(rename = "(24)")]
    Swap24,
    #[serde(rename = "(13)")]
    Swap13,
}

impl CosetLabel {
    pub const ALL: [CosetLabel; 6] = [
        CosetLabel::Identity,
        CosetLabel::Swap13Swap24,
        CosetLabel::Swap23,
        CosetLabel::Cycle1342,
        CosetLabel::Swap24,
        CosetLabel::Swap13,
    ];

    /// The labels whose polygons are squares when the input is a parallelogram.
    pub const SQUARE_PRODUCING: [CosetLabel; 4] = [
        CosetLabel::Identity,
        CosetLabel::Swap13Swap24,
        CosetLabel::Swap24,
        CosetLabel::Swap13,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CosetLabel::Identity => "e",
            CosetLabel::Swap13Swap24 => "(13)(24)",
            CosetLabel::Swap23 => "(23)",
            CosetLabel::Cycle1342 => "(1342)",
            CosetLabel::Swap24 => "(24)",
            CosetLabel::Swap13 => "(13)",
        }
    }

    pub fn representative(self) -> Perm4 {
        match self {
            CosetLabel::Identity => Perm4::IDENTITY,
            CosetLabel::Swap13Swap24 => Perm4::from_cycles(&[&[1, 3], &[2, 4]]),
            CosetLabel::Swap23 => Perm4::from_cycles(&[&[2, 3]]),
            CosetLabel::Cycle1342 => Perm4::from_cycles(&[&[1, 3, 4, 2]]),
            CosetLabel::Swap24 => Perm4::from_cycles(&[&[2, 4]]),
            CosetLabel::Swap13 => Perm4::from_cycles(&[&[1, 3]]),
        }
    }

    /// Subscript words of the polygon's vertices, in polygon order.
    pub fn vertex_words(self) -> [Word4; 4] {
        let sigma = self.representative();
        IDENTITY_WORDS.map(|w| act_on_word(sigma, IndexWord(w)))
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown coset label {0:?}")]
pub struct UnknownCosetLabel(pub String);

impl FromStr for CosetLabel {
    type Err = UnknownCosetLabel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CosetLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| UnknownCosetLabel(s.to_owned()))
    }
}

/// Vertex words of `P^e`: `[b_1234, b_1243, b_2143, b_2134]`.
const IDENTITY_WORDS: [[u8; 4]; 4] = [[1, 2, 3, 4], [1, 2, 4, 3], [2, 1, 4, 3], [2, 1, 3, 4]];

pub fn coset_representatives() -> [(CosetLabel, Perm4); 6] {
    CosetLabel::ALL.map(|l| (l, l.representative()))
}

pub fn vertex_words_for_coset(label: CosetLabel) -> [Word4; 4] {
    label.vertex_words()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(labels: [u8; 4]) -> Word4 {
        IndexWord::new(labels).unwrap()
    }

    /// The six vertex lists for each coset, in reference order.
    const PRINTED: [(&str, [[u8; 4]; 4]); 6] = [
        (
            "e",
            [[1, 2, 3, 4], [1, 2, 4, 3], [2, 1, 4, 3], [2, 1, 3, 4]],
        ),
        (
            "(13)(24)",
            [[3, 4, 1, 2], [3, 4, 2, 1], [4, 3, 2, 1], [4, 3, 1, 2]],
        ),
        (
            "(23)",
            [[1, 3, 2, 4], [1, 3, 4, 2], [3, 1, 4, 2], [3, 1, 2, 4]],
        ),
        (
            "(1342)",
            [[2, 4, 1, 3], [2, 4, 3, 1], [4, 2, 3, 1], [4, 2, 1, 3]],
        ),
        (
            "(24)",
            [[1, 4, 3, 2], [1, 4, 2, 3], [4, 1, 2, 3], [4, 1, 3, 2]],
        ),
        (
            "(13)",
            [[3, 2, 1, 4], [3, 2, 4, 1], [2, 3, 4, 1], [2, 3, 1, 4]],
        ),
    ];

    #[test]
    fn action_examples() {
        let e = Perm4::IDENTITY;
        assert_eq!(act_on_word(e, w([1, 2, 3, 4])), w([1, 2, 3, 4]));
        let dbl = Perm4::from_cycles(&[&[1, 3], &[2, 4]]);
        assert_eq!(act_on_word(dbl, w([1, 2, 3, 4])), w([3, 4, 1, 2]));
        let s23 = Perm4::from_cycles(&[&[2, 3]]);
        assert_eq!(act_on_word(s23, w([1, 2, 3, 4])), w([1, 3, 2, 4]));
    }

    #[test]
    fn vertex_words_match_printed_lists() {
        for (name, words) in PRINTED {
            let label: CosetLabel = name.parse().unwrap();
            assert_eq!(label.vertex_words(), words.map(w), "label {name}");
        }
    }

    #[test]
    fn stabilizer_is_elementary_abelian_of_order_four() {
        let h = stabilizer_group();
        assert_eq!(h.iter().collect::<BTreeSet<_>>().len(), 4);
        assert!(h.contains(&Perm4::IDENTITY));
        for g in h {
            assert_eq!(g * g, Perm4::IDENTITY);
        }
    }

    #[test]
    fn stabilizer_preserves_identity_vertex_set() {
        let set: BTreeSet<Word4> = IDENTITY_WORDS.map(w).into_iter().collect();
        for g in stabilizer_group() {
            let image: BTreeSet<Word4> = set.iter().map(|&x| act_on_word(g, x)).collect();
            assert_eq!(image, set);
        }
    }

    #[test]
    fn representatives_times_stabilizer_cover_s4_once() {
        let reps = coset_representatives();
        assert_eq!(reps.len(), 6);
        assert_eq!(reps[0].1, Perm4::IDENTITY);
        let products: Vec<Perm4> = reps
            .iter()
            .flat_map(|&(_, r)| stabilizer_group().map(|h| r * h))
            .collect();
        let distinct: BTreeSet<Perm4> = products.iter().copied().collect();
        assert_eq!(products.len(), 24);
        assert_eq!(distinct, Perm4::all().into_iter().collect());
    }

    #[test]
    fn representatives_in_distinct_cosets() {
        // Brute force: r_a⁻¹ r_b must lie outside H for a ≠ b.
        let h: BTreeSet<Perm4> = stabilizer_group().into_iter().collect();
        let reps = coset_representatives();
        for (a, &(_, ra)) in reps.iter().enumerate() {
            for (b, &(_, rb)) in reps.iter().enumerate() {
                if a != b {
                    assert!(
                        !h.contains(&(ra.inverse() * rb)),
                        "{a} and {b} share a coset"
                    );
                }
            }
        }
    }

    #[test]
    fn coset_word_sets_partition_all_words() {
        let all: BTreeSet<Word4> = CosetLabel::ALL
            .iter()
            .flat_map(|l| l.vertex_words())
            .collect();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn coset_vertex_sets_are_coset_invariant() {
        // Acting by any element r*h of a coset gives the same vertex set.
        let base: BTreeSet<Word4> = IDENTITY_WORDS.map(w).into_iter().collect();
        for (label, r) in coset_representatives() {
            let expected: BTreeSet<Word4> = label.vertex_words().into_iter().collect();
            for hh in stabilizer_group() {
                let got: BTreeSet<Word4> = base.iter().map(|&x| act_on_word(r * hh, x)).collect();
                assert_eq!(got, expected, "{label}");
            }
        }
    }

    #[test]
    fn all_and_inverse() {
        let all = Perm4::all();
        assert_eq!(all.len(), 24);
        for p in all {
            assert_eq!(p * p.inverse(), Perm4::IDENTITY);
            assert_eq!(p.inverse() * p, Perm4::IDENTITY);
        }
        assert_eq!(Perm4::from_images([1, 1, 2, 3]), None);
    }

    #[test]
    fn words_reject_repeats() {
        assert!(IndexWord::new([1, 2, 2, 4]).is_none());
        assert!(IndexWord::new([1, 2, 3, 5]).is_none());
        assert_eq!(IndexWord::<6>::all().len(), 720);
        assert_eq!(w([4, 3, 2, 1]).to_string(), "4321");
    }

    #[test]
    fn label_strings_round_trip() {
        for l in CosetLabel::ALL {
            assert_eq!(l.as_str().parse::<CosetLabel>().unwrap(), l);
        }
        assert!("(12)".parse::<CosetLabel>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use proptest::sample::select;

        proptest! {
            #[test]
            fn left_action_law(
                s in select(Perm4::all()),
                t in select(Perm4::all()),
                x in select(IndexWord::<4>::all()),
            ) {
                prop_assert_eq!(act_on_word(s * t, x), act_on_word(s, act_on_word(t, x)));
            }
        }
    }
}
