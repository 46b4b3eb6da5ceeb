use num_traits::Zero;

use crate::exact::{IndexSet, RMatrix};
use crate::patterns::{zero_pattern, ZeroPattern};

use super::{is_assr, ClassifyError, ClassifyOptions, Witness};

/// Largest order accepted by the exhaustive reducibility search.
pub const BRUTE_FORCE_MAX_ORDER: usize = 7;

/// Strong connectivity of the digraph with an edge `i -> j` for each
/// nonzero off-diagonal `a_ij`. Order 1 counts as irreducible.
pub fn is_irreducible(a: &RMatrix) -> bool {
    pattern_reducibility_witness(&zero_pattern(a)).is_none()
}

pub fn pattern_is_irreducible(p: &ZeroPattern) -> bool {
    pattern_reducibility_witness(p).is_none()
}

/// A split `(rows, cols)` of `1..=n` with `A[rows|cols] = 0`, if one exists.
pub fn reducibility_witness(a: &RMatrix) -> Option<Witness> {
    pattern_reducibility_witness(&zero_pattern(a))
}

pub fn pattern_reducibility_witness(p: &ZeroPattern) -> Option<Witness> {
    let n = p.order();
    if n == 1 {
        return None;
    }
    let edge = |from: usize, to: usize| from != to && p.is_nonzero(from + 1, to + 1);
    let forward = reach(n, edge);
    if let Some(w) = split_witness(&forward, true) {
        return Some(w);
    }
    let backward = reach(n, |u, v| edge(v, u));
    split_witness(&backward, false)
}

/// Nodes reachable from node 0 along `edge`.
fn reach(n: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        let next: Vec<usize> = (0..n).filter(|&v| !seen[v] && edge(u, v)).collect();
        for v in next {
            seen[v] = true;
            stack.push(v);
        }
    }
    seen
}

/// Forward-closed set `R`: no edge leaves it, so `A[R | N\R] = 0`.
/// Backward-closed set `B`: no edge enters it, so `A[N\B | B] = 0`.
fn split_witness(seen: &[bool], forward: bool) -> Option<Witness> {
    if seen.iter().all(|&s| s) {
        return None;
    }
    let inside: Vec<usize> = (0..seen.len()).filter(|&k| seen[k]).map(|k| k + 1).collect();
    let outside: Vec<usize> = (0..seen.len()).filter(|&k| !seen[k]).map(|k| k + 1).collect();
    let (rows, cols) = if forward { (inside, outside) } else { (outside, inside) };
    Some(Witness::Reducible { rows: IndexSet::from_sorted(rows), cols: IndexSet::from_sorted(cols) })
}

/// Exhaustive search for a row set `I` with `A[I | N\I] = 0`. Each proper
/// nonempty `I` stands for every ordering that lists `I` first. Returns
/// `true` iff `A` is reducible.
pub fn brute_force_reducibility(a: &RMatrix) -> Result<bool, ClassifyError> {
    pattern_brute_force_reducibility(&zero_pattern(a))
}

pub fn pattern_brute_force_reducibility(p: &ZeroPattern) -> Result<bool, ClassifyError> {
    let n = p.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(ClassifyError::OrderCap { n, max: BRUTE_FORCE_MAX_ORDER });
    }
    let full: u32 = (1 << n) - 1;
    for set in 1..full {
        let block_zero = (0..n)
            .filter(|&i| set & (1 << i) != 0)
            .all(|i| (0..n).filter(|&j| set & (1 << j) == 0).all(|j| !p.is_nonzero(i + 1, j + 1)));
        if block_zero {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Irreducibility of a type-I staircase ASSR matrix read off its sub- and
/// superdiagonal: irreducible iff none of those entries vanish.
pub fn irreducible_by_off_diagonals(a: &RMatrix, opts: &ClassifyOptions) -> Result<bool, ClassifyError> {
    let assr = is_assr(a, opts)?;
    if !assr.is_assr || !assr.staircase.has_type_i() {
        return Err(ClassifyError::Precondition(
            "requires a type-I staircase ASSR matrix".into(),
        ));
    }
    let n = a.order();
    Ok((1..n).all(|j| !a.get(j + 1, j).is_zero() && !a.get(j, j + 1).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::backward_identity;

    fn a3() -> RMatrix {
        RMatrix::from_integers(&[[-1, -2, 0], [-1, -3, 0], [-1, -4, -5]]).unwrap()
    }

    #[test]
    fn digraph_examples() {
        assert!(!is_irreducible(&a3()));
        assert!(!is_irreducible(&RMatrix::identity(2)));
        assert!(is_irreducible(&RMatrix::identity(1)));
        assert!(is_irreducible(&backward_identity(2)));
    }

    #[test]
    fn witness_blocks_are_zero() {
        let Some(Witness::Reducible { rows, cols }) = reducibility_witness(&a3()) else {
            panic!("A3 is reducible");
        };
        assert_eq!(rows.as_slice(), &[1, 2]);
        assert_eq!(cols.as_slice(), &[3]);
        for i in rows.iter() {
            for j in cols.iter() {
                assert!(a3().get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_reducibility(&a3()).unwrap());
        assert!(!brute_force_reducibility(&backward_identity(2)).unwrap());
        assert!(matches!(
            brute_force_reducibility(&RMatrix::identity(8)),
            Err(ClassifyError::OrderCap { n: 8, max: 7 })
        ));
    }

    #[test]
    fn sub_superdiagonal_shortcut() {
        let opts = ClassifyOptions::default();
        assert!(!irreducible_by_off_diagonals(&a3(), &opts).unwrap());
        assert!(!irreducible_by_off_diagonals(&RMatrix::identity(3), &opts).unwrap());
        let a4 = RMatrix::from_integers(&[[1, 2, 0], [2, 4, 3], [2, 5, 8]]).unwrap();
        assert!(matches!(irreducible_by_off_diagonals(&a4, &opts), Err(ClassifyError::Precondition(_))));
    }
}
