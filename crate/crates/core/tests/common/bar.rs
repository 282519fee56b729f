//! Normalized bar complex of a finite group with trivial coefficients in
//! `F_p`, with dense elimination. Deliberately shares no code with the
//! library's complexes.

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_multiple_of(p)) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    // entries from 1..n (identity excluded)
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| (1..k).map(move |x| [t.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

/// Matrix of `d_n : C_n → C_{n-1}` (rows indexed by `C_{n-1}`).
fn differential(table: &[Vec<usize>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let k = table.len();
    let src = tuples(k, n);
    let dst = tuples(k, n - 1);
    let index = |t: &[usize]| dst.iter().position(|d| d.as_slice() == t);
    let mut m = vec![vec![0u64; src.len()]; dst.len()];
    for (c, t) in src.iter().enumerate() {
        let mut faces: Vec<(Vec<usize>, bool)> = vec![(t[1..].to_vec(), true)];
        for i in 0..n - 1 {
            let prod = table[t[i]][t[i + 1]];
            if prod != 0 {
                let mut f = t[..i].to_vec();
                f.push(prod);
                f.extend_from_slice(&t[i + 2..]);
                faces.push((f, (i + 1) % 2 == 0));
            }
        }
        faces.push((t[..n - 1].to_vec(), n.is_multiple_of(2)));
        for (f, positive) in faces {
            let r = index(&f).unwrap();
            m[r][c] = (m[r][c] + if positive { 1 } else { p - 1 }) % p;
        }
    }
    m
}

/// `dim H_i(H, F_p)` for `i = 0..=max`.
pub fn trivial_homology_mod_p(table: &[Vec<usize>], p: u64, max: usize) -> Vec<usize> {
    let k = table.len();
    let dims: Vec<usize> = (0..=max + 1).map(|n| (k - 1).pow(n as u32)).collect();
    let ranks: Vec<usize> = (0..=max + 1)
        .map(|n| if n == 0 { 0 } else { rank_mod_p(differential(table, n, p), p) })
        .collect();
    (0..=max).map(|n| dims[n] - ranks[n] - ranks[n + 1]).collect()
}
