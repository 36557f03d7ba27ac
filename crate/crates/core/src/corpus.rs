//! Named test words and seeded random braids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{full_twist_word, MorseWord};
use crate::error::Result;

pub type BraidWord = Vec<(usize, bool)>;

/// Braid shorthand text, `braid 3: s1 s2' s1`.
pub fn braid_text(n: usize, gens: &[(usize, bool)]) -> String {
    let mut s = format!("braid {n}:");
    for &(i, pos) in gens {
        s.push_str(&format!(" s{i}{}", if pos { "" } else { "'" }));
    }
    s.push('\n');
    s
}

pub fn random_braid(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    (0..len).map(|_| (rng.gen_range(1..n), rng.gen_bool(0.5))).collect()
}

fn is_pure(n: usize, gens: &[(usize, bool)]) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    for &(i, _) in gens {
        p.swap(i - 1, i);
    }
    p.iter().enumerate().all(|(a, &b)| a == b)
}

fn is_reduced(gens: &[(usize, bool)]) -> bool {
    gens.windows(2).all(|p| p[0].0 != p[1].0 || p[0].1 == p[1].1)
}

/// `count` distinct freely reduced pure braids on `n` strands with at most `max_len`
/// letters, by rejection from uniform words.
pub fn random_pure_braids(n: usize, max_len: usize, count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let len = rng.gen_range(4.max(n)..=max_len);
        let w = random_braid(&mut rng, n, len);
        if is_pure(n, &w) && is_reduced(&w) && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

pub fn random_braids(n: usize, max_len: usize, count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            loop {
                let w = random_braid(&mut rng, n, len);
                if is_reduced(&w) {
                    break w;
                }
            }
        })
        .collect()
}

/// A corpus entry: file stem and its text in braid shorthand or the DSL.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub text: String,
}

impl Entry {
    fn braid(name: impl Into<String>, n: usize, gens: &[(usize, bool)]) -> Self {
        Entry { name: name.into(), text: braid_text(n, gens) }
    }

    fn morse(name: impl Into<String>, w: &MorseWord) -> Self {
        Entry { name: name.into(), text: w.to_dsl() }
    }

    pub fn word(&self) -> Result<MorseWord> {
        crate::diagram::parse_input(&self.text)
    }

    pub fn file_name(&self) -> String {
        format!("{}.sl", self.name)
    }
}

/// The shipped corpus.
pub fn standard() -> Vec<Entry> {
    let s = |i: usize| (i, true);
    let si = |i: usize| (i, false);
    let mut out = vec![
        Entry::morse("trivial1", &MorseWord::trivial(1)),
        Entry::morse("trivial2", &MorseWord::trivial(2)),
        Entry::morse("trivial3", &MorseWord::trivial(3)),
    ];
    for k in [1usize, 2, 3, 4, 6] {
        out.push(Entry::braid(format!("s1_pow{k}"), 2, &vec![s(1); k]));
    }
    out.push(Entry::braid("s1_inv_pow2", 2, &[si(1), si(1)]));
    out.push(Entry::morse("full_twist2", &full_twist_word(2)));
    out.push(Entry::morse("full_twist3", &full_twist_word(3)));
    out.push(Entry::braid("s1sq_s2sq", 3, &[s(1), s(1), s(2), s(2)]));
    out.push(Entry::braid("s1_s2sq_s1", 3, &[s(1), s(2), s(2), s(1)]));
    out.push(Entry::braid("s1sq_s2invsq", 3, &[s(1), s(1), si(2), si(2)]));
    out.push(Entry::braid("s1sq_s3invsq", 4, &[s(1), s(1), si(3), si(3)]));
    out.push(Entry::braid("s1_s2", 3, &[s(1), s(2)]));
    out.push(Entry::braid("s1_s2inv", 3, &[s(1), si(2)]));

    let hopf = MorseWord::from_braid(2, &[s(1), s(1)]).expect("valid");
    let mut t = hopf.clone();
    for k in 1..=3 {
        t = t.add_twist(1).expect("pure");
        out.push(Entry::morse(format!("twist{k}_s1sq"), &t));
    }
    out.push(Entry::morse("twist1_strand2_s1sq", &hopf.add_twist(2).expect("pure")));
    out.push(Entry::morse("twist1_trivial2", &MorseWord::trivial(2).add_twist(1).expect("pure")));

    out.push(Entry::morse("kink_trivial2", &MorseWord::trivial(2).add_kink(1).expect("valid")));
    out.push(Entry::morse("kink_s1sq", &hopf.add_kink(2).expect("valid")));
    let w3 = MorseWord::from_braid(3, &[s(1), s(2), s(2), s(1)]).expect("valid");
    out.push(Entry::morse("kink_s1_s2sq_s1", &w3.add_kink(1).expect("valid").add_kink(3).expect("valid")));

    for (n, count, seed) in [(2usize, 2usize, 11u64), (3, 6, 12), (4, 2, 13)] {
        for (i, g) in random_pure_braids(n, 8, count, seed).iter().enumerate() {
            out.push(Entry::braid(format!("random_pure{n}_{seed}_{i}"), n, g));
        }
    }
    for (i, g) in random_braids(3, 8, 3, 21).iter().enumerate() {
        out.push(Entry::braid(format!("random3_21_{i}"), 3, g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses() {
        let c = standard();
        let pure = c.iter().filter(|e| e.word().unwrap().is_pure().unwrap()).count();
        assert!(pure >= 20, "{pure}");
    }

    #[test]
    fn random_words_are_reproducible() {
        assert_eq!(random_pure_braids(3, 8, 4, 5), random_pure_braids(3, 8, 4, 5));
        for w in random_pure_braids(3, 8, 4, 5) {
            assert!(w.len() <= 8 && is_pure(3, &w) && is_reduced(&w));
        }
    }
}
