#![allow(dead_code)]

use mckay_quiver::abelian::{enumerate_characters, AbRep, FinAbGroup};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every tuple of 1..=3 cyclic factor orders drawn from 1..=6 with group
/// order at most `max_size`.
pub fn small_presentations(max_size: usize) -> Vec<FinAbGroup> {
    let mut out = Vec::new();
    for rank in 1..=3usize {
        let mut cur = vec![1u32; rank];
        loop {
            let size: usize = cur.iter().map(|&n| n as usize).product();
            if size <= max_size {
                out.push(FinAbGroup::new(cur.clone()).unwrap());
            }
            let mut p = rank;
            loop {
                if p == 0 {
                    break;
                }
                p -= 1;
                cur[p] += 1;
                if cur[p] <= 6 {
                    break;
                }
                cur[p] = 1;
            }
            if cur.iter().all(|&n| n == 1) {
                break;
            }
        }
    }
    out
}

/// One representative per isomorphism class of abelian groups of order
/// `1..=max_order`, in invariant-factor form `d_1 | d_2 | …`.
pub fn abelian_isomorphism_types(max_order: u32) -> Vec<FinAbGroup> {
    fn chains(remaining: u32, last: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 1 {
            out.push(acc.clone());
            return;
        }
        let mut d = last.max(2);
        while d <= remaining {
            if d % last == 0 && remaining % d == 0 {
                acc.push(d);
                chains(remaining / d, d, acc, out);
                acc.pop();
            }
            d += 1;
        }
    }
    let mut out = vec![FinAbGroup::trivial()];
    for n in 2..=max_order {
        let mut found = Vec::new();
        chains(n, 1, &mut Vec::new(), &mut found);
        out.extend(found.into_iter().map(|f| FinAbGroup::new(f).unwrap()));
    }
    out
}

/// All multisets of at most `max_dim` characters of `g`.
pub fn all_reps(g: &FinAbGroup, max_dim: usize) -> Vec<AbRep> {
    let chars = enumerate_characters(g);
    let mut out = Vec::new();
    fn rec(g: &FinAbGroup, chars: &[mckay_quiver::abelian::AbCharacter], start: usize, left: usize,
           acc: &mut Vec<usize>, out: &mut Vec<AbRep>) {
        out.push(AbRep::new(g.clone(), acc.iter().map(|&k| chars[k].clone()).collect()).unwrap());
        if left == 0 {
            return;
        }
        for k in start..chars.len() {
            acc.push(k);
            rec(g, chars, k, left - 1, acc, out);
            acc.pop();
        }
    }
    rec(g, &chars, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

pub fn random_rep(g: &FinAbGroup, max_dim: usize, rng: &mut ChaCha8Rng) -> AbRep {
    let chars = enumerate_characters(g);
    let dim = rng.gen_range(0..=max_dim);
    let summands = (0..dim).map(|_| chars[rng.gen_range(0..chars.len())].clone()).collect();
    AbRep::new(g.clone(), summands).unwrap()
}

/// Exhaustive for `|G| <= 8`, otherwise `per_group` random reps.
pub fn test_reps(g: &FinAbGroup, per_group: usize, rng: &mut ChaCha8Rng) -> Vec<AbRep> {
    if g.size() <= 8 {
        all_reps(g, 3)
    } else {
        (0..per_group).map(|_| random_rep(g, 3, rng)).collect()
    }
}
