use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Solves the square system `a x = b` exactly.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n), "non-square system");
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for entry in m[col].iter_mut().skip(col) {
            *entry *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *entry -= &factor * p;
            }
        }
    }
    Ok(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Rank of a symmetric matrix if it is positive semidefinite, `None`
/// otherwise. Uses exact symmetric elimination on positive pivots.
pub fn psd_rank(g: &[Vec<Rational>]) -> Option<usize> {
    let mut m: Vec<Vec<Rational>> = g.to_vec();
    let mut active: Vec<usize> = (0..m.len()).collect();
    let mut rank = 0;
    loop {
        if active.iter().any(|&i| m[i][i].is_negative()) {
            return None;
        }
        let Some(pos) = active.iter().position(|&i| m[i][i].is_positive()) else {
            let clean = active.iter().all(|&i| active.iter().all(|&j| m[i][j].is_zero()));
            return clean.then_some(rank);
        };
        let p = active.remove(pos);
        let d = m[p][p].clone();
        for &i in &active {
            if m[i][p].is_zero() {
                continue;
            }
            let factor = &m[i][p] / &d;
            for &j in &active {
                let delta = &factor * &m[p][j];
                m[i][j] -= delta;
            }
        }
        rank += 1;
    }
}
