//! Brute-force models used as oracles. They only read the raw tables and
//! never call into the library's algorithms.

#![allow(dead_code)]

use skewbrace::{ElementSet, SkewBrace};

/// A brace as two plain tables with subsets stored as bitmasks (`n ≤ 64`).
pub struct Raw {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub inv: Vec<usize>,
}

pub fn inverses(t: &[Vec<usize>]) -> Vec<usize> {
    (0..t.len()).map(|a| (0..t.len()).find(|&b| t[a][b] == 0).expect("inverse")).collect()
}

impl Raw {
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Raw {
        assert!(add.len() <= 64);
        Raw { n: add.len(), neg: inverses(&add), inv: inverses(&mul), add, mul }
    }

    pub fn of(b: &SkewBrace) -> Raw {
        Raw::new(b.add_group().rows(), b.mul_group().rows())
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add[self.neg[a]][self.mul[a][b]]
    }

    pub fn star(&self, a: usize, b: usize) -> usize {
        self.add[self.lambda(a, b)][self.neg[b]]
    }

    /// First triple where `a∘(b+c) = a∘b - a + a∘c` fails.
    pub fn law_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.mul[a][self.add[b][c]];
                    let rhs = self.add[self.add[self.mul[a][b]][self.neg[a]]][self.mul[a][c]];
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn closure(&self, t: &[Vec<usize>], mask: u64) -> u64 {
        let mut m = mask | 1;
        loop {
            let mut next = m;
            for a in bits(m) {
                for b in bits(m) {
                    next |= 1 << t[a][b];
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    pub fn add_closure(&self, mask: u64) -> u64 {
        self.closure(&self.add, mask)
    }

    /// All additive subgroups, grown one generator at a time.
    pub fn subgroups(&self) -> Vec<u64> {
        let mut found = vec![1u64];
        let mut k = 0;
        while k < found.len() {
            let h = found[k];
            for x in 0..self.n {
                if h >> x & 1 == 0 {
                    let g = self.add_closure(h | 1 << x);
                    if !found.contains(&g) {
                        found.push(g);
                    }
                }
            }
            k += 1;
        }
        found.sort_by_key(|m| (m.count_ones(), *m));
        found
    }

    pub fn is_ideal(&self, m: u64) -> bool {
        let n = self.n;
        for a in 0..n {
            for x in bits(m) {
                if m >> self.lambda(a, x) & 1 == 0 {
                    return false;
                }
                if m >> self.add[self.add[a][x]][self.neg[a]] & 1 == 0 {
                    return false;
                }
                if m >> self.mul[self.mul[a][x]][self.inv[a]] & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn ideals(&self) -> Vec<u64> {
        self.subgroups().into_iter().filter(|&m| self.is_ideal(m)).collect()
    }

    pub fn star_set(&self, x: u64, y: u64) -> u64 {
        let mut gens = 0u64;
        for a in bits(x) {
            for b in bits(y) {
                gens |= 1 << self.star(a, b);
            }
        }
        self.add_closure(gens)
    }

    pub fn semiprime(&self) -> bool {
        self.ideals().into_iter().filter(|&i| i != 1).all(|i| self.star_set(i, i) != 1)
    }

    pub fn prime(&self) -> bool {
        let nz: Vec<u64> = self.ideals().into_iter().filter(|&i| i != 1).collect();
        nz.iter().all(|&i| nz.iter().all(|&j| self.star_set(i, j) != 1))
    }
}

pub fn bits(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| m >> i & 1 == 1)
}

pub fn mask(s: &ElementSet) -> u64 {
    s.iter().fold(0, |m, x| m | 1 << x)
}

pub fn to_set(n: usize, m: u64) -> ElementSet {
    ElementSet::new(n, bits(m))
}

/// All permutations of `0..k`.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    fn rec(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(p, i + 1, out);
            p.swap(i, j);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// Whether `t` is a group table with identity 0.
pub fn is_group_table(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| t[0][x] == x && t[x][0] == x)
        && (0..n).all(|a| (0..n).any(|b| t[a][b] == 0))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
        && (0..n).all(|a| {
            let mut seen = vec![false; n];
            t[a].iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        })
}

/// Every group table on `0..n` with identity `0` (`n ≤ 5`).
pub fn all_group_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let rows: Vec<Vec<usize>> = permutations(n).into_iter().collect();
    let mut out = Vec::new();
    let mut table = vec![(0..n).collect::<Vec<usize>>()];
    fn rec(n: usize, rows: &[Vec<usize>], table: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let a = table.len();
        if a == n {
            if is_group_table(table) {
                out.push(table.clone());
            }
            return;
        }
        for r in rows {
            if r[0] != a || table.iter().any(|t| (0..n).any(|x| t[x] == r[x])) {
                continue;
            }
            table.push(r.clone());
            rec(n, rows, table, out);
            table.pop();
        }
    }
    rec(n, &rows, &mut table, &mut out);
    out
}

/// Relabels a table by `x ↦ p[x]`.
pub fn relabel(t: &[Vec<usize>], p: &[usize]) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[p[a]][p[b]] = p[t[a][b]];
        }
    }
    out
}

/// Every enumerated brace of order `1..=max`, in enumeration order.
pub fn braces_upto(max: usize) -> Vec<SkewBrace> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(skewbrace::enumerate_braces(n, &skewbrace::AdditiveFilter::All).unwrap().braces);
    }
    out
}
