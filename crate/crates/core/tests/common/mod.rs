//! Brute-force oracles. They only read `n`, `mul` and `leq` from the library
//! and recompute everything else from the definitions.

#![allow(dead_code)]

use ordsemi::enumerate::corpus_up_to;
use ordsemi::semigroup::validate;
use ordsemi::{OrderedSemigroup, Side};

pub fn corpus(n_max: usize) -> Vec<OrderedSemigroup> {
    corpus_up_to(n_max, false, true).unwrap()
}

pub fn bottomed_right_zero() -> OrderedSemigroup {
    ordsemi::format::parse(include_str!("../data/bottomed_right_zero.osg")).unwrap()
}

/// Every associative table on `n` elements, by scanning all `n^(n*n)` tables.
pub fn brute_force_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut t = vec![vec![0; n]; n];
        for k in (0..cells).rev() {
            t[k / n][k % n] = code % n;
            code /= n;
        }
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        if assoc {
            out.push(t);
        }
    }
    out
}

/// Every relation on `0..n` that is a partial order compatible with `t`, by
/// scanning all `2^(n*n)` relations.
pub fn brute_force_orders(t: &[Vec<usize>]) -> Vec<Vec<Vec<bool>>> {
    let n = t.len();
    let mut out = Vec::new();
    for bits in 0u32..(1 << (n * n)) {
        let r: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| bits >> (i * n + j) & 1 == 1).collect())
            .collect();
        let reflexive = (0..n).all(|i| r[i][i]);
        let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(r[i][j] && r[j][i])));
        let trans =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(r[i][j] && r[j][k]) || r[i][k])));
        let compat = (0..n).all(|a| {
            (0..n).all(|b| !r[a][b] || (0..n).all(|x| r[t[x][a]][t[x][b]] && r[t[a][x]][t[b][x]]))
        });
        if reflexive && antisym && trans && compat {
            out.push(r);
        }
    }
    out
}

pub fn brute_force_corpus(n: usize) -> Vec<OrderedSemigroup> {
    brute_force_tables(n)
        .iter()
        .flat_map(|t| {
            brute_force_orders(t)
                .into_iter()
                .map(move |o| validate(t, &o).unwrap())
        })
        .collect()
}

fn down(s: &OrderedSemigroup, set: &[bool]) -> Vec<bool> {
    let n = s.n();
    (0..n)
        .map(|t| (0..n).any(|h| set[h] && s.leq(t, h)))
        .collect()
}

/// The smallest subset containing `a` that absorbs on `side` and is closed
/// downward, as the intersection of every such subset.
pub fn ideal_oracle(s: &OrderedSemigroup, a: usize, side: Side) -> Vec<bool> {
    let n = s.n();
    let mut meet = vec![true; n];
    for bits in 1u32..(1 << n) {
        let set: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        if !set[a] || down(s, &set) != set {
            continue;
        }
        let left = (0..n).all(|x| (0..n).all(|i| !set[i] || set[s.mul(x, i)]));
        let right = (0..n).all(|x| (0..n).all(|i| !set[i] || set[s.mul(i, x)]));
        let ok = match side {
            Side::Left => left,
            Side::Right => right,
            Side::TwoSided => left && right,
        };
        if ok {
            for i in 0..n {
                meet[i] &= set[i];
            }
        }
    }
    meet
}

/// All set partitions of `0..n` as block labels (restricted growth strings).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            go(n, cur, max.max(b), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, &mut vec![0], 0, &mut out);
    out
}

fn is_complete_semilattice_partition(s: &OrderedSemigroup, p: &[usize]) -> bool {
    let n = s.n();
    let rel = |a: usize, b: usize| p[a] == p[b];
    for a in 0..n {
        if !rel(a, s.mul(a, a)) {
            return false;
        }
        for b in 0..n {
            if !rel(s.mul(a, b), s.mul(b, a)) || (s.leq(a, b) && !rel(a, s.mul(a, b))) {
                return false;
            }
            if rel(a, b)
                && (0..n).any(|c| !rel(s.mul(c, a), s.mul(c, b)) || !rel(s.mul(a, c), s.mul(b, c)))
            {
                return false;
            }
        }
    }
    true
}

/// The least complete semilattice congruence, as the intersection of every
/// partition that is one. Returned as a relation matrix.
pub fn least_csc_oracle(s: &OrderedSemigroup) -> Vec<Vec<bool>> {
    let n = s.n();
    let mut meet = vec![vec![true; n]; n];
    for p in partitions(n) {
        if is_complete_semilattice_partition(s, &p) {
            for a in 0..n {
                for b in 0..n {
                    meet[a][b] &= p[a] == p[b];
                }
            }
        }
    }
    meet
}

/// Number of isomorphism classes, by grouping structures into orbits under
/// all relabelings.
pub fn orbit_count(structures: &[OrderedSemigroup]) -> usize {
    use std::collections::HashSet;
    let key = |s: &OrderedSemigroup, p: &[usize]| -> Vec<u8> {
        let n = s.n();
        let mut inv = vec![0; n];
        for (old, &new) in p.iter().enumerate() {
            inv[new] = old;
        }
        let mut k = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for j in 0..n {
                k.push(p[s.mul(inv[i], inv[j])] as u8);
                k.push(s.leq(inv[i], inv[j]) as u8);
            }
        }
        k
    };
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut orbits = 0;
    for s in structures {
        let id: Vec<usize> = (0..s.n()).collect();
        if seen.contains(&key(s, &id)) {
            continue;
        }
        orbits += 1;
        for p in permutations(s.n()) {
            seen.insert(key(s, &p));
        }
    }
    orbits
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
