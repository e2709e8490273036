//! Lyndon words as a basis of the free Lie algebra, with bracket rewriting.

use std::collections::HashMap;
use std::rc::Rc;

pub(crate) type Word = Vec<u16>;

/// Lyndon words of length exactly `n` over `0..m`, in lexicographic order.
pub(crate) fn lyndon_words(m: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        return out;
    }
    // Duval's generation of all Lyndon words of length <= n
    let mut w: Word = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let k = w.len();
        while w.len() < n {
            w.push(w[w.len() - k]);
        }
        while w.last() == Some(&((m - 1) as u16)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

pub(crate) fn is_lyndon(w: &[u16]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = uv` with `v` the longest proper Lyndon suffix.
pub(crate) fn standard_factorization(w: &[u16]) -> (&[u16], &[u16]) {
    debug_assert!(w.len() >= 2);
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("last letter is Lyndon");
    w.split_at(i)
}

type Combination = Rc<Vec<(Word, i64)>>;

/// Memoized brackets of Lyndon basis elements.
#[derive(Default)]
pub(crate) struct Bracketer {
    memo: HashMap<(Word, Word), Combination>,
}

impl Bracketer {
    pub(crate) fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `[u, v]` for Lyndon words `u`, `v`, as a combination of Lyndon words
    /// sorted lexicographically.
    pub(crate) fn bracket(&mut self, u: &[u16], v: &[u16]) -> Combination {
        use std::cmp::Ordering::*;
        match u.cmp(v) {
            Equal => Rc::new(Vec::new()),
            Greater => {
                let r = self.bracket(v, u);
                Rc::new(r.iter().map(|(w, c)| (w.clone(), -c)).collect())
            }
            Less => {
                let key = (u.to_vec(), v.to_vec());
                if let Some(r) = self.memo.get(&key) {
                    return r.clone();
                }
                let r = Rc::new(self.bracket_ordered(u, v));
                self.memo.insert(key, r.clone());
                r
            }
        }
    }

    fn bracket_ordered(&mut self, u: &[u16], v: &[u16]) -> Vec<(Word, i64)> {
        if u.len() == 1 || standard_factorization(u).1 >= v {
            let mut w = u.to_vec();
            w.extend_from_slice(v);
            return vec![(w, 1)];
        }
        let (u1, u2) = standard_factorization(u);
        let mut acc: HashMap<Word, i64> = HashMap::new();
        // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
        for (w, c) in self.bracket(u1, v).iter() {
            for (x, d) in self.bracket(w, u2).iter() {
                *acc.entry(x.clone()).or_default() += c * d;
            }
        }
        for (w, c) in self.bracket(u2, v).iter() {
            for (x, d) in self.bracket(u1, w).iter() {
                *acc.entry(x.clone()).or_default() += c * d;
            }
        }
        let mut out: Vec<(Word, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort();
        out
    }
}
