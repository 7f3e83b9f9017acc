//! Brute-force reference computations.
//!
//! Nothing here calls into the routines it is used to check: partitions are
//! enumerated as lattice paths, dimensions use the hook-content formula,
//! Schur polynomials are summed over semistandard tableaux, and block
//! positions are found by walking the number line one step at a time.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::partitions::Partition;

/// Partitions in the `rows × cols` box from lattice paths: a path is a
/// bit string with `rows` ones (down steps) among `rows + cols` steps.
pub fn box_partitions_by_paths(rows: usize, cols: usize) -> Vec<Vec<u32>> {
    let len = rows + cols;
    let mut out = Vec::new();
    let mut bits = vec![false; len];
    fn rec(pos: usize, ones_left: usize, bits: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        let len = bits.len();
        if pos == len {
            if ones_left == 0 {
                // walk from top-right: each down step records the current width
                let mut width = bits.iter().filter(|b| !**b).count() as u32;
                let mut parts = Vec::new();
                for &b in bits.iter() {
                    if b {
                        parts.push(width);
                    } else {
                        width -= 1;
                    }
                }
                parts.retain(|&p| p > 0);
                out.push(parts);
            }
            return;
        }
        if len - pos > ones_left {
            bits[pos] = false;
            rec(pos + 1, ones_left, bits, out);
        }
        if ones_left > 0 {
            bits[pos] = true;
            rec(pos + 1, ones_left - 1, bits, out);
            bits[pos] = false;
        }
    }
    rec(0, rows, &mut bits, &mut out);
    out
}

/// Transpose by visiting every cell: cell `(r, c)` adds one to column `c`.
pub fn transpose_by_cells(parts: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for &p in parts {
        for c in 0..p as usize {
            if out.len() <= c {
                out.push(0);
            }
            out[c] += 1;
        }
    }
    out
}

pub fn count_self_conjugate_brute(n: usize) -> usize {
    box_partitions_by_paths(n, n)
        .into_iter()
        .filter(|p| transpose_by_cells(p) == *p)
        .count()
}

/// `Π (n + content) / Π hook` over the cells of `parts`.
pub fn gl_dim_hook_content(parts: &[u32], n: usize) -> BigUint {
    if parts.len() > n {
        return BigUint::from(0u32);
    }
    let conj = transpose_by_cells(parts);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (r, &p) in parts.iter().enumerate() {
        for (c, &col) in conj.iter().enumerate().take(p as usize) {
            let content = n as i64 + c as i64 - r as i64;
            num *= content as u64;
            let hook = (p as usize - c - 1) + (col as usize - r - 1) + 1;
            den *= hook as u64;
        }
    }
    num / den
}

pub type Poly = HashMap<Vec<u32>, i64>;

/// `s_λ(x_1..x_k)` as a sum over semistandard tableaux.
pub fn schur_poly(parts: &[u32], k: usize) -> Poly {
    let mut out = Poly::new();
    if parts.len() > k {
        return out;
    }
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = parts.iter().map(|&p| vec![0; p as usize]).collect();
    fn rec(idx: usize, cells: &[(usize, usize)], grid: &mut [Vec<u32>], k: usize, out: &mut Poly) {
        let Some(&(r, c)) = cells.get(idx) else {
            let mut e = vec![0u32; k];
            for row in grid.iter() {
                for &v in row {
                    e[v as usize - 1] += 1;
                }
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=k as u32 {
            grid[r][c] = v;
            rec(idx + 1, cells, grid, k, out);
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, &mut grid, k, &mut out);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == used.len() {
            let mut sign = 1;
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    if cur[i] > cur[j] {
                        sign = -sign;
                    }
                }
            }
            out.push((cur.clone(), sign));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Schur expansion of a symmetric polynomial in `k` variables, read off the
/// antisymmetrization: `c_ν = Σ_w sgn(w) f[ν + δ - w(δ)]`.
pub fn schur_expand(f: &Poly, k: usize) -> BTreeMap<Vec<u32>, i64> {
    let degree = f.keys().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0);
    let delta: Vec<i64> = (0..k).rev().map(|x| x as i64).collect();
    let perms = permutations(k);
    let mut out = BTreeMap::new();
    for nu in box_partitions_by_paths(k, degree as usize)
        .into_iter()
        .filter(|p| p.iter().sum::<u32>() == degree)
    {
        let mut c = 0;
        for (w, sign) in &perms {
            let e: Option<Vec<u32>> = (0..k)
                .map(|i| {
                    let v = nu.get(i).copied().unwrap_or(0) as i64 + delta[i] - delta[w[i]];
                    u32::try_from(v).ok()
                })
                .collect();
            if let Some(e) = e {
                c += sign * f.get(&e).copied().unwrap_or(0);
            }
        }
        if c != 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// `s_λ · s_μ` expanded in Schur polynomials of `k` variables.
pub fn lr_by_schur(lambda: &[u32], mu: &[u32], k: usize) -> BTreeMap<Vec<u32>, i64> {
    schur_expand(&poly_mul(&schur_poly(lambda, k), &schur_poly(mu, k)), k)
}

/// Partitions of size at most `max_size` with at most `rows` parts.
pub fn small_partitions(max_size: u32, rows: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = box_partitions_by_paths(rows, max_size as usize)
        .into_iter()
        .filter(|p| p.iter().sum::<u32>() <= max_size)
        .map(|p| Partition::new(p).expect("lattice path partition"))
        .collect();
    out.sort();
    out
}

/// Position of `L(i)` found by stepping along the number line.
pub fn position_by_walk(core: &BTreeSet<i64>, base: i64, i: i64) -> i64 {
    let dir = if i >= 0 { 1 } else { -1 };
    let mut p = base;
    for _ in 0..i.abs() {
        p += dir;
        while core.contains(&p) {
            p += dir;
        }
    }
    p
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_paths_count() {
        assert_eq!(box_partitions_by_paths(2, 2).len(), 6);
        assert_eq!(box_partitions_by_paths(3, 3).len(), 20);
        let mut b = box_partitions_by_paths(2, 2);
        b.sort();
        assert_eq!(b, vec![vec![], vec![1], vec![1, 1], vec![2], vec![2, 1], vec![2, 2]]);
    }

    #[test]
    fn small_schur_products() {
        // s1 * s1 = s2 + s11
        let prod = lr_by_schur(&[1], &[1], 3);
        assert_eq!(prod, BTreeMap::from([(vec![1, 1], 1), (vec![2], 1)]));
        // s21 * s21 in 3 variables drops the 4-row terms
        let prod = lr_by_schur(&[2, 1], &[2, 1], 3);
        assert_eq!(prod.get(&vec![3, 2, 1]), Some(&2));
        assert_eq!(prod.get(&vec![2, 1, 1, 1, 1]), None);
    }

    #[test]
    fn hook_content_small() {
        assert_eq!(gl_dim_hook_content(&[2, 1], 3), BigUint::from(8u32));
        assert_eq!(gl_dim_hook_content(&[1, 1, 1], 2), BigUint::from(0u32));
        assert_eq!(count_self_conjugate_brute(3), 8);
    }

    #[test]
    fn walk_positions() {
        let core = BTreeSet::from([0]);
        assert_eq!(position_by_walk(&core, -1, 1), 1);
        assert_eq!(position_by_walk(&core, -1, -2), -3);
    }
}
