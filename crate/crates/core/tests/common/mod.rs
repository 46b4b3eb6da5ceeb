//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library's determinant, minor enumeration, staircase or
//! irreducibility code.

#![allow(dead_code)]

use assrkit_core::exact::{int, RMatrix, Rational};
use num_traits::{One, Signed, Zero};

pub fn entries(a: &RMatrix) -> Vec<Vec<Rational>> {
    a.to_rows()
}

/// Laplace expansion along the first row.
pub fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rational>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &m[0][j] * laplace_det(&sub);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Minor on 0-based rows and columns.
pub fn naive_minor(m: &[Vec<Rational>], rows: &[usize], cols: &[usize]) -> Rational {
    let sub: Vec<Vec<Rational>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
    laplace_det(&sub)
}

/// `c_ij = (-1)^(i+j) a_ij A_ij / det A`, all by Laplace expansion.
pub fn naive_combined(a: &RMatrix) -> Option<RMatrix> {
    let m = entries(a);
    let n = m.len();
    let det = laplace_det(&m);
    if det.is_zero() {
        return None;
    }
    Some(RMatrix::from_fn(n, |i, j| {
        let rows: Vec<usize> = (0..n).filter(|&r| r != i - 1).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j - 1).collect();
        let cof = if n == 1 { Rational::one() } else { naive_minor(&m, &rows, &cols) };
        let v = &m[i - 1][j - 1] * cof / &det;
        if (i + j) % 2 == 0 {
            v
        } else {
            -v
        }
    }))
}

/// All k-subsets of `0..n` in lexicographic order, by recursion.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// SR signature by brute-force minor enumeration. `None` if not SR; an
/// order whose minors all vanish is reported as 0.
pub fn naive_sr_signature(a: &RMatrix) -> Option<Vec<i8>> {
    let m = entries(a);
    let n = m.len();
    let mut sig = Vec::new();
    for k in 1..=n {
        let sets = subsets(n, k);
        let mut seen = 0i8;
        for r in &sets {
            for c in &sets {
                let s = sign(&naive_minor(&m, r, c));
                if s == 0 {
                    continue;
                }
                if seen == 0 {
                    seen = s;
                } else if seen != s {
                    return None;
                }
            }
        }
        sig.push(seen);
    }
    Some(sig)
}

pub fn naive_is_ssr(a: &RMatrix) -> bool {
    let m = entries(a);
    let n = m.len();
    naive_sr_signature(a).is_some()
        && (1..=n).all(|k| {
            let sets = subsets(n, k);
            sets.iter().all(|r| sets.iter().all(|c| !naive_minor(&m, r, c).is_zero()))
        })
}

/// Type-I staircase straight from the definition: nonzero diagonal, and
/// every zero below (above) the diagonal forces the whole lower-left
/// (upper-right) rectangle it spans to vanish.
pub fn literal_type_i(a: &RMatrix) -> bool {
    let m = entries(a);
    let n = m.len();
    if (0..n).any(|i| m[i][i].is_zero()) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if !m[i][j].is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let forced = (i > j && k >= i && l <= j) || (i < j && k <= i && l >= j);
                    if forced && !m[k][l].is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Type-II staircase: nonzero backward diagonal with mirrored propagation.
pub fn literal_type_ii(a: &RMatrix) -> bool {
    let m = entries(a);
    let n = m.len();
    if (0..n).any(|i| m[i][n - 1 - i].is_zero()) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if !m[i][j].is_zero() {
                continue;
            }
            let below = i + j > n - 1;
            let above = i + j < n - 1;
            for k in 0..n {
                for l in 0..n {
                    let forced = (below && k >= i && l >= j) || (above && k <= i && l <= j);
                    if forced && !m[k][l].is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// ASSR by brute force: staircase, then every nontrivial minor of each
/// order nonzero with one common sign. Dense matrices use the main
/// diagonal rule.
pub fn naive_assr_signature(a: &RMatrix) -> Option<Vec<i8>> {
    let m = entries(a);
    let n = m.len();
    let type_i = literal_type_i(a);
    if !type_i && !literal_type_ii(a) {
        return None;
    }
    let mut sig = Vec::new();
    for k in 1..=n {
        let sets = subsets(n, k);
        let mut seen = 0i8;
        for r in &sets {
            for c in &sets {
                let nontrivial = if type_i {
                    (0..k).all(|t| !m[r[t]][c[t]].is_zero())
                } else {
                    (0..k).all(|t| !m[r[t]][c[k - 1 - t]].is_zero())
                };
                if !nontrivial {
                    continue;
                }
                let s = sign(&naive_minor(&m, r, c));
                if s == 0 || (seen != 0 && s != seen) {
                    return None;
                }
                seen = s;
            }
        }
        if seen == 0 {
            return None;
        }
        sig.push(seen);
    }
    Some(sig)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Reducible iff some symmetric permutation `P A P^T` is block upper
/// triangular: for an ordering `p` and split `k`, every entry in rows
/// `p[k..]` and columns `p[..k]` is zero.
pub fn permutation_reducible(mask: &[Vec<bool>]) -> bool {
    let n = mask.len();
    if n < 2 {
        return false;
    }
    permutations(n).iter().any(|p| {
        (1..n).any(|k| p[k..].iter().all(|&r| p[..k].iter().all(|&c| !mask[r][c])))
    })
}

pub fn mask_of(a: &RMatrix) -> Vec<Vec<bool>> {
    a.rows().map(|r| r.iter().map(|v| !v.is_zero()).collect()).collect()
}

pub fn matrix_from_mask(mask: &[Vec<bool>]) -> RMatrix {
    let n = mask.len();
    RMatrix::from_fn(n, |i, j| if mask[i - 1][j - 1] { int(1) } else { int(0) })
}

pub fn is_monomial_oracle(a: &RMatrix) -> bool {
    let m = mask_of(a);
    let n = m.len();
    (0..n).all(|i| m[i].iter().filter(|&&b| b).count() == 1) && (0..n).all(|j| (0..n).filter(|&i| m[i][j]).count() == 1)
}

/// Permutations `p` with `a[i][p(i)] != 0` for every row `i`.
pub fn nonzero_transversals(a: &RMatrix) -> Vec<Vec<usize>> {
    let m = mask_of(a);
    permutations(m.len()).into_iter().filter(|p| p.iter().enumerate().all(|(i, &j)| m[i][j])).collect()
}
