//! The 42 diagrams. Components are listed in the order of the group factors;
//! vertex `(c, p)` is simple root `p` of factor `c`.

use super::Sign::{Down, Up};
use super::{CatalogEntry, Diagram, Params};
use crate::roots::{Component, RootType};

pub const ENTRY_COUNT: usize = 42;

const N: &[&str] = &["n"];
const NP: &[&str] = &["n'"];
const N_NP: &[&str] = &["n", "n'"];
const N_NPP: &[&str] = &["n", "n''"];
const NONE: &[&str] = &[];

#[rustfmt::skip]
const META: [(&str, &[&str], &str); ENTRY_COUNT] = [
    ("SL(n) x C* on C^n", N, "n >= 2"),
    ("Sp(2n) x C* on C^2n", N, "n >= 2"),
    ("Spin(2n+1) x C* on C^(2n+1)", N, "n >= 2"),
    ("Spin(2n) x C* on C^2n", N, "n >= 3"),
    ("SL(n) x C* on S^2 C^n", N, "n >= 2"),
    ("SL(n) x C* on L^2 C^n", N, "n >= 5 odd"),
    ("SL(n) x C* on L^2 C^n", N, "n >= 6 even"),
    ("SL(n) x SL(n') x C* on C^n (x) C^n'", N_NP, "n' = n >= 2"),
    ("SL(n) x SL(n') x C* on C^n (x) C^n'", N_NP, "n' > n >= 2"),
    ("SL(2) x Sp(2n') x C* on C^2 (x) C^2n'", NP, "n' >= 2"),
    ("SL(3) x Sp(4) x C* on C^3 (x) C^4", NONE, ""),
    ("SL(3) x Sp(2n') x C* on C^3 (x) C^2n'", NP, "n' >= 3"),
    ("SL(4) x Sp(4) x C* on C^4 (x) C^4", NONE, ""),
    ("SL(n) x Sp(4) x C* on C^n (x) C^4", N, "n >= 5"),
    ("Spin(7) x C* on C^8", NONE, ""),
    ("Spin(9) x C* on C^16", NONE, ""),
    ("Spin(10) x C* on C^16", NONE, ""),
    ("G2 x C* on C^7", NONE, ""),
    ("E6 x C* on C^27", NONE, ""),
    ("Spin(8) x (C*)^2 on C^8 + C^8", NONE, ""),
    ("SL(2) x (C*)^2 on C^2 + C^2", NONE, ""),
    ("SL(n) x (C*)^2 on C^n + C^n", N, "n >= 3"),
    ("SL(n) x (C*)^2 on C^n + (C^n)*", N, "n >= 3"),
    ("SL(n) x (C*)^2 on C^n + L^2 C^n", N, "n >= 4"),
    ("SL(n) x (C*)^2 on (C^n)* + L^2 C^n", N, "n >= 4 even"),
    ("SL(n) x (C*)^2 on (C^n)* + L^2 C^n", N, "n >= 5 odd"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + C^n'", N_NP, "2 <= n < n'-1"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + C^n'", N_NP, "2 <= n = n'-1"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + C^n'", N_NP, "2 <= n = n'"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + C^n'", N_NP, "n > n' >= 2"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + (C^n')*", N_NP, "2 <= n < n'-1"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + (C^n')*", N_NP, "2 <= n = n'-1"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + (C^n')*", N_NP, "2 <= n = n'"),
    ("SL(n) x SL(n') x (C*)^2 on C^n (x) C^n' + (C^n')*", N_NP, "n > n' >= 2"),
    ("SL(2) x SL(2) x SL(2) x (C*)^2 on C^2 (x) C^2 + C^2 (x) C^2", NONE, ""),
    ("SL(n) x SL(2) x SL(2) x (C*)^2 on C^n (x) C^2 + C^2 (x) C^2", N, "n >= 3"),
    ("SL(n) x SL(2) x SL(n'') x (C*)^2 on C^n (x) C^2 + C^2 (x) C^n''", N_NPP, "n >= n'' >= 3"),
    ("Sp(2n) x (C*)^2 on C^2n + C^2n", N, "n >= 2"),
    ("Sp(2n) x SL(2) x (C*)^2 on C^2n (x) C^2 + C^2", N, "n >= 2"),
    ("Sp(2n) x SL(2) x SL(2) x (C*)^2 on C^2n (x) C^2 + C^2 (x) C^2", N, "n >= 2"),
    ("Sp(2n) x SL(2) x SL(n'') x (C*)^2 on C^2n (x) C^2 + C^2 (x) C^n''", N_NPP, "n >= 2, n'' >= 3"),
    ("Sp(2n) x SL(2) x Sp(2n'') x (C*)^2 on C^2n (x) C^2 + C^2 (x) C^2n''", N_NPP, "n, n'' >= 2"),
];

pub fn meta(id: usize) -> Option<CatalogEntry> {
    let (description, params, domain) = *META.get(id.checked_sub(1)?)?;
    Some(CatalogEntry { id, description, params, domain })
}

pub fn in_domain(id: usize, p: &Params) -> bool {
    let n = p.n.unwrap_or(0);
    let n1 = p.n1.unwrap_or(0);
    let n2 = p.n2.unwrap_or(0);
    match id {
        1 | 2 | 3 | 5 | 38 | 39 | 40 => n >= 2,
        4 | 22 | 23 | 36 => n >= 3,
        6 => n >= 5 && n % 2 == 1,
        7 => n >= 6 && n % 2 == 0,
        8 => n >= 2 && n1 == n,
        9 => n >= 2 && n1 > n,
        10 => n1 >= 2,
        12 => n1 >= 3,
        14 => n >= 5,
        24 => n >= 4,
        25 => n >= 4 && n % 2 == 0,
        26 => n >= 5 && n % 2 == 1,
        27 | 31 => n >= 2 && n + 1 < n1,
        28 | 32 => n >= 2 && n + 1 == n1,
        29 | 33 => n >= 2 && n == n1,
        30 | 34 => n1 >= 2 && n > n1,
        37 => n2 >= 3 && n >= n2,
        41 => n >= 2 && n2 >= 3,
        42 => n >= 2 && n2 >= 2,
        11 | 13 | 15..=21 | 35 => true,
        _ => false,
    }
}

fn comp(kind: RootType, rank: usize) -> Component {
    Component { kind, rank }
}

fn a(r: usize) -> Component {
    comp(RootType::A, r)
}

fn c(r: usize) -> Component {
    comp(RootType::C, r)
}

/// `alpha_from + ... + alpha_to` on factor `f`.
fn a_chain(d: &mut Diagram, f: usize, from: usize, to: usize) -> usize {
    let t: Vec<_> = (from..=to).map(|p| ((f, p), 1)).collect();
    d.root(&t)
}

/// `alpha_from + 2 alpha_(from+1) + ... + 2 alpha_(to-1) + alpha_to` on a C factor.
fn c_chain(d: &mut Diagram, f: usize, from: usize, to: usize) -> usize {
    let t: Vec<_> = (from..=to).map(|p| ((f, p), if p == from || p == to { 1 } else { 2 })).collect();
    d.root(&t)
}

/// Three roots on three A1-type vertices `x`, `y`, `z` with the colors
/// `{x+, y+}`, `{x-, z-}`, `{y-, z+}` (the SL2 x SL2 x SL2 pattern).
fn triangle(d: &mut Diagram, x: (usize, usize), y: (usize, usize), z: (usize, usize)) -> [usize; 3] {
    let g = [d.simple(x), d.simple(y), d.simple(z)];
    d.color(&[(x, Up), (y, Up)]);
    d.color(&[(x, Down), (z, Down)]);
    d.color(&[(y, Down), (z, Up)]);
    g
}

/// The SL(3)/SL(4)/SL(n) x Sp(4) pattern; `top` is the rank of the A factor.
fn sl_sp4(d: &mut Diagram, top: usize) {
    let g1 = d.simple((0, 1));
    let g2 = d.simple((0, 2));
    let g3 = (top >= 3).then(|| d.simple((0, 3)));
    let h1 = d.simple((1, 1));
    let h2 = d.simple((1, 2));
    d.color(&[((0, 1), Up), ((1, 1), Up)]);
    d.color(&[((0, 2), Up), ((1, 2), Up)]);
    match g3 {
        None => {
            d.color(&[((0, 1), Down), ((1, 2), Down)]);
            d.color(&[((0, 2), Down)]);
            d.color(&[((1, 1), Down)]);
        }
        Some(g3) => {
            d.color(&[((0, 2), Down)]);
            d.color(&[((0, 3), Up), ((1, 1), Down)]);
            d.color(&[((0, 1), Down), ((0, 3), Down), ((1, 2), Down)]);
            d.arrow((0, 2), g3);
        }
    }
    d.arrow((0, 2), g1);
    d.arrow((1, 1), h2);
    let _ = (g2, h1);
}

/// `C^n (x) C^n' + C^n'`: simple roots `alpha_1..alpha_k` on the top row and
/// `alpha'_1..alpha'_kb` on the bottom (`kb` is `k` or `k+1`), eastward arrows.
fn tensor_plus_vector(d: &mut Diagram, k: usize, kb: usize) -> (Vec<usize>, Vec<usize>) {
    let top: Vec<usize> = (1..=k).map(|i| d.simple((0, i))).collect();
    let bot: Vec<usize> = (1..=kb).map(|i| d.simple((1, i))).collect();
    for i in 1..=kb {
        if i <= k {
            d.color(&[((0, i), Down), ((1, i), Up)]);
        } else {
            d.color(&[((1, i), Up)]);
        }
    }
    d.color(&[((1, 1), Down)]);
    for i in 1..=k {
        if i < kb {
            d.color(&[((0, i), Up), ((1, i + 1), Down)]);
        } else {
            d.color(&[((0, i), Up)]);
        }
    }
    for i in 1..k {
        d.arrow((0, i), top[i]);
    }
    for i in 1..kb {
        d.arrow((1, i), bot[i]);
    }
    (top, bot)
}

/// `C^n (x) C^n' + (C^n')*`: `k` simple roots on each row, westward arrows.
/// Returns the last bottom vertex's lower color index.
fn tensor_plus_covector(d: &mut Diagram, k: usize) -> (Vec<usize>, Vec<usize>) {
    let top: Vec<usize> = (1..=k).map(|i| d.simple((0, i))).collect();
    let bot: Vec<usize> = (1..=k).map(|i| d.simple((1, i))).collect();
    for i in 1..=k {
        d.color(&[((0, i), Down), ((1, i), Up)]);
    }
    d.color(&[((0, 1), Up)]);
    for i in 2..=k {
        d.color(&[((0, i), Up), ((1, i - 1), Down)]);
    }
    for i in 2..=k {
        d.arrow((0, i), top[i - 2]);
        d.arrow((1, i), bot[i - 2]);
    }
    (top, bot)
}

pub fn build(id: usize, p: &Params) -> Diagram {
    let n = p.n.unwrap_or(0);
    let n1 = p.n1.unwrap_or(0);
    let n2 = p.n2.unwrap_or(0);
    match id {
        1 => {
            let mut d = Diagram::new(vec![a(n - 1)]);
            d.sp(0, 2..n);
            d
        }
        2 => {
            let mut d = Diagram::new(vec![c(n)]);
            d.sp(0, 2..=n);
            d
        }
        3 => {
            let mut d = Diagram::new(vec![comp(RootType::B, n)]);
            let t: Vec<_> = (1..=n).map(|i| ((0, i), 2)).collect();
            let g = d.root(&t);
            d.mark(g);
            d.sp(0, 2..=n);
            d
        }
        4 => {
            let mut d = Diagram::new(vec![comp(RootType::D, n)]);
            let t: Vec<_> = (1..=n).map(|i| ((0, i), if i + 2 <= n { 2 } else { 1 })).collect();
            let g = d.root(&t);
            d.mark(g);
            d.sp(0, 2..=n);
            d
        }
        5 => {
            let mut d = Diagram::new(vec![a(n - 1)]);
            for i in 1..n {
                let g = d.root(&[((0, i), 2)]);
                if i == n - 1 {
                    d.mark(g);
                }
            }
            d
        }
        6 | 7 => {
            let mut d = Diagram::new(vec![a(n - 1)]);
            let m = n / 2;
            for k in 1..m {
                let g = d.root(&[((0, 2 * k - 1), 1), ((0, 2 * k), 2), ((0, 2 * k + 1), 1)]);
                if id == 7 && k == m - 1 {
                    d.mark(g);
                }
            }
            d.sp(0, (1..n).step_by(2).filter(|&i| i <= 2 * m - 1));
            d
        }
        8 | 9 => {
            let mut d = Diagram::new(vec![a(n - 1), a(n1 - 1)]);
            for i in 1..n {
                let g = d.root(&[((0, i), 1), ((1, i), 1)]);
                if id == 8 && i == n - 1 {
                    d.mark(g);
                }
            }
            d.sp(1, n + 1..n1);
            d
        }
        10 => {
            let mut d = Diagram::new(vec![a(1), c(n1)]);
            d.root(&[((0, 1), 1), ((1, 1), 1)]);
            let g = c_chain(&mut d, 1, 1, n1);
            d.mark(g);
            d.sp(1, 3..=n1);
            d
        }
        11 => {
            let mut d = Diagram::new(vec![a(2), c(2)]);
            sl_sp4(&mut d, 2);
            d
        }
        12 => {
            let mut d = Diagram::new(vec![a(2), c(n1)]);
            let g1 = d.simple((0, 1));
            let g2 = d.simple((0, 2));
            let _h1 = d.simple((1, 1));
            let h2 = d.simple((1, 2));
            c_chain(&mut d, 1, 2, n1);
            d.color(&[((0, 1), Up), ((1, 1), Up)]);
            d.color(&[((0, 2), Up), ((1, 2), Up)]);
            d.color(&[((0, 1), Down), ((1, 2), Down)]);
            d.color(&[((0, 2), Down)]);
            d.color(&[((1, 1), Down)]);
            d.arrow((0, 2), g1);
            d.arrow((1, 1), h2);
            let _ = g2;
            d.sp(1, 4..=n1);
            d
        }
        13 => {
            let mut d = Diagram::new(vec![a(3), c(2)]);
            sl_sp4(&mut d, 3);
            d.mark(2);
            d
        }
        14 => {
            let mut d = Diagram::new(vec![a(n - 1), c(2)]);
            sl_sp4(&mut d, 3);
            d.sp(0, 5..n);
            d
        }
        15 => {
            let mut d = Diagram::new(vec![comp(RootType::B, 3)]);
            let g = d.root(&[((0, 1), 1), ((0, 2), 2), ((0, 3), 3)]);
            d.mark(g);
            d.sp(0, [1, 2]);
            d
        }
        16 => {
            let mut d = Diagram::new(vec![comp(RootType::B, 4)]);
            let g = a_chain(&mut d, 0, 1, 4);
            d.mark(g);
            d.root(&[((0, 2), 1), ((0, 3), 2), ((0, 4), 3)]);
            d.sp(0, [2, 3]);
            d
        }
        17 => {
            let mut d = Diagram::new(vec![comp(RootType::D, 5)]);
            d.root(&[((0, 2), 1), ((0, 3), 2), ((0, 4), 1), ((0, 5), 2)]);
            d.sp(0, [2, 3, 4]);
            d
        }
        18 => {
            let mut d = Diagram::new(vec![comp(RootType::G, 2)]);
            let g = d.root(&[((0, 1), 4), ((0, 2), 2)]);
            d.mark(g);
            d.sp(0, [2]);
            d
        }
        19 => {
            let mut d = Diagram::new(vec![comp(RootType::E, 6)]);
            d.root(&[((0, 1), 2), ((0, 2), 1), ((0, 3), 2), ((0, 4), 2), ((0, 5), 1)]);
            let g = d.root(&[((0, 2), 1), ((0, 3), 1), ((0, 4), 2), ((0, 5), 2), ((0, 6), 2)]);
            d.mark(g);
            d.sp(0, 2..=5);
            d
        }
        20 => {
            let mut d = Diagram::new(vec![comp(RootType::D, 4)]);
            let g0 = d.root(&[((0, 1), 1), ((0, 2), 1), ((0, 3), 1)]);
            let g1 = d.root(&[((0, 1), 1), ((0, 2), 1), ((0, 4), 1)]);
            d.root(&[((0, 2), 1), ((0, 3), 1), ((0, 4), 1)]);
            d.mark(g0);
            d.mark(g1);
            d.sp(0, [2]);
            d
        }
        21 | 22 => {
            let mut d = Diagram::new(vec![a(if id == 21 { 1 } else { n - 1 })]);
            let g = d.simple((0, 1));
            d.color(&[((0, 1), Up)]);
            d.color(&[((0, 1), Down)]);
            if id == 21 {
                d.mark(g);
            } else {
                d.sp(0, 3..n);
            }
            d
        }
        23 => {
            let mut d = Diagram::new(vec![a(n - 1)]);
            let g = a_chain(&mut d, 0, 1, n - 1);
            d.mark(g);
            d.sp(0, 2..n - 1);
            d
        }
        24 | 25 => {
            let mut d = Diagram::new(vec![a(n - 1)]);
            for k in 1..=n - 2 {
                let g = a_chain(&mut d, 0, k, k + 1);
                if (id == 24 && k == n - 2) || (id == 25 && k == n - 3) {
                    d.mark(g);
                }
            }
            d
        }
        26 => {
            let mut d = Diagram::new(vec![a(n - 1)]);
            for k in 1..=n - 3 {
                a_chain(&mut d, 0, k, k + 1);
            }
            d.simple((0, n - 1));
            d.color(&[((0, n - 1), Up)]);
            d.color(&[((0, n - 1), Down)]);
            d
        }
        27 | 28 => {
            let mut d = Diagram::new(vec![a(n - 1), a(n1 - 1)]);
            let (_, bot) = tensor_plus_vector(&mut d, n - 1, n);
            if id == 28 {
                d.mark(bot[n - 1]);
            }
            d.sp(1, n + 2..n1);
            d
        }
        29 | 30 => {
            let k = if id == 29 { n } else { n1 };
            let mut d = Diagram::new(vec![a(n - 1), a(n1 - 1)]);
            let (top, _) = tensor_plus_vector(&mut d, k - 1, k - 1);
            if id == 29 {
                d.mark(top[k - 2]);
            }
            d.sp(0, k + 1..n);
            d
        }
        31 | 32 => {
            let mut d = Diagram::new(vec![a(n - 1), a(n1 - 1)]);
            let (_, bot) = tensor_plus_covector(&mut d, n - 1);
            d.color(&[((1, n - 1), Down)]);
            let g = a_chain(&mut d, 1, n, n1 - 1);
            if id == 32 {
                // the chain is the single simple root alpha'_n
                d.color(&[((1, n), Up)]);
                d.color(&[((1, n), Down)]);
                d.arrow((1, n), bot[n - 2]);
            }
            let _ = g;
            d.sp(1, n + 1..n1 - 1);
            d
        }
        33 | 34 => {
            let k = if id == 33 { n } else { n1 };
            let mut d = Diagram::new(vec![a(n - 1), a(n1 - 1)]);
            let (top, _) = tensor_plus_covector(&mut d, k - 1);
            d.color(&[((1, k - 1), Down)]);
            if id == 33 {
                d.mark(top[k - 2]);
            }
            d.sp(0, k + 1..n);
            d
        }
        35 => {
            let mut d = Diagram::new(vec![a(1), a(1), a(1)]);
            let g = triangle(&mut d, (0, 1), (1, 1), (2, 1));
            d.mark(g[0]);
            d.mark(g[2]);
            d
        }
        36 | 37 => {
            let last = if id == 36 { 1 } else { n2 - 1 };
            let mut d = Diagram::new(vec![a(n - 1), a(1), a(last)]);
            let g = triangle(&mut d, (0, 1), (1, 1), (2, 1));
            if id == 36 {
                d.mark(g[2]);
            } else {
                d.sp(2, 3..n2);
            }
            d.sp(0, 3..n);
            d
        }
        38 => {
            let mut d = Diagram::new(vec![c(n)]);
            d.simple((0, 1));
            let g = c_chain(&mut d, 0, 1, n);
            d.mark(g);
            d.color(&[((0, 1), Up)]);
            d.color(&[((0, 1), Down)]);
            d.sp(0, 3..=n);
            d
        }
        39 => {
            let mut d = Diagram::new(vec![c(n), a(1)]);
            d.simple((0, 1));
            let g = c_chain(&mut d, 0, 1, n);
            d.mark(g);
            d.simple((1, 1));
            d.color(&[((0, 1), Up), ((1, 1), Up)]);
            d.color(&[((0, 1), Down)]);
            d.color(&[((1, 1), Down)]);
            d.sp(0, 3..=n);
            d
        }
        40..=42 => {
            let third = match id {
                40 => a(1),
                41 => a(n2 - 1),
                _ => c(n2),
            };
            let mut d = Diagram::new(vec![c(n), a(1), third]);
            let g = triangle(&mut d, (0, 1), (1, 1), (2, 1));
            let chain = c_chain(&mut d, 0, 1, n);
            d.mark(chain);
            match id {
                40 => d.mark(g[2]),
                41 => d.sp(2, 3..n2),
                _ => {
                    let h = c_chain(&mut d, 2, 1, n2);
                    d.mark(h);
                    d.sp(2, 3..=n2);
                }
            }
            d.sp(0, 3..=n);
            d
        }
        _ => panic!("no catalog entry {id}"),
    }
}
