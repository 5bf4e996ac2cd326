//! Brute-force references used by the acceptance criteria. Nothing here
//! calls into the search kernels.

use crate::ap::{self, Family};
use crate::multiplicity::EdgeColoring;
use crate::Result;
use crate::Graph;

pub(super) fn turan_edges(n: usize, r: usize) -> u64 {
    let (q, rem) = (n / r, n % r);
    let inside = rem * (q + 1) * q / 2 + (r - rem) * q * q.saturating_sub(1) / 2;
    (n * (n - 1) / 2 - inside) as u64
}

pub(super) fn common_neighbours(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count()
}

pub(super) fn independent_progression(g: &Graph, a: usize, d: usize, k: usize) -> bool {
    let terms: Vec<usize> = (0..k).map(|i| a + i * d).collect();
    terms.iter().all(|&t| (1..=g.n()).contains(&t))
        && terms.iter().enumerate().all(|(i, &x)| terms[i + 1..].iter().all(|&y| !g.has_edge(x - 1, y - 1)))
}

fn is_prime(x: usize) -> bool {
    x >= 2 && (2..).take_while(|p| p * p <= x).all(|p| !x.is_multiple_of(p))
}

/// Coverage of family A recomputed from its definition: differences up to
/// `n / 2k` with no prime factor `<= k`, starts `1..=n/2`.
pub(super) fn max_pair_coverage_a(n: usize, k: usize) -> Result<u64> {
    let diffs: Vec<usize> = (1..=n / (2 * k)).filter(|&d| (2..=k).filter(|&p| is_prime(p)).all(|p| d % p != 0)).collect();
    debug_assert_eq!(
        diffs.iter().map(|_| (n / 2) as u64).sum::<u64>(),
        ap::family_size(n, k, Family::Coprime)?
    );
    let mut count = vec![0u32; n * n];
    let mut best = 0;
    for &d in &diffs {
        for a in 1..=n / 2 {
            for i in 0..k {
                for j in i + 1..k {
                    let (x, y) = (a + i * d - 1, a + j * d - 1);
                    let c = &mut count[x * n + y];
                    *c += 1;
                    best = best.max(*c);
                }
            }
        }
    }
    Ok(best as u64)
}

pub(super) fn has_rainbow_ap(colors: &[u32], k: usize) -> bool {
    let n = colors.len();
    (1..n).any(|d| {
        (0..n).filter(|a| a + (k - 1) * d < n).any(|a| {
            let c: Vec<u32> = (0..k).map(|i| colors[a + i * d]).collect();
            c.iter().enumerate().all(|(i, x)| !c[i + 1..].contains(x))
        })
    })
}

/// Visits every set partition of `[n]` as a restricted growth string.
fn each_partition(n: usize, visit: &mut impl FnMut(&[u32])) {
    fn go(colors: &mut Vec<u32>, n: usize, next: u32, visit: &mut impl FnMut(&[u32])) {
        if colors.len() == n {
            visit(colors);
            return;
        }
        for c in 0..=next {
            colors.push(c);
            go(colors, n, next.max(c + 1), visit);
            colors.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, visit);
}

/// Least `n <= n_max` such that every colouring of `[n]` with colour
/// classes of size at most `m` has a rainbow `k`-AP, by full enumeration.
pub(super) fn naive_sr(m: usize, k: usize, n_max: usize) -> Option<u64> {
    (1..=n_max).find_map(|n| {
        let mut bad = false;
        each_partition(n, &mut |colors| {
            let fits = (0..n as u32).all(|c| colors.iter().filter(|&&x| x == c).count() <= m);
            if fits && !has_rainbow_ap(colors, k) {
                bad = true;
            }
        });
        (!bad).then_some(n as u64)
    })
}

pub(super) fn mono_triangles(c: &EdgeColoring) -> u64 {
    let n = c.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let x = c.get(a, b);
                count += u64::from(x == c.get(a, d) && x == c.get(b, d));
            }
        }
    }
    count
}

/// Fewest monochromatic triangles over all 2-colourings of `K_n`.
pub(super) fn min_mono_triangles(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let mut color = vec![0u8; n * n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                color[u * n + v] = (mask >> i & 1) as u8;
            }
            let mut count = 0;
            for a in 0..n {
                for b in a + 1..n {
                    for d in b + 1..n {
                        let x = color[a * n + b];
                        count += u64::from(x == color[a * n + d] && x == color[b * n + d]);
                    }
                }
            }
            count
        })
        .min()
        .unwrap_or(0)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

pub(super) fn clique_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub(super) fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Some `s`-set has at least `t` common neighbours outside it.
pub(super) fn kst_free(g: &Graph, s: usize, t: usize) -> bool {
    !subsets(g.n()).filter(|a| a.len() == s).any(|a| {
        (0..g.n()).filter(|v| !a.contains(v) && a.iter().all(|&u| g.has_edge(u, *v))).count() >= t
    })
}

pub(super) fn degree_binomial_sum(g: &Graph, s: usize) -> u64 {
    let choose = |d: u64| (0..s as u64).fold(1u64, |acc, i| acc * (d - i) / (i + 1));
    (0..g.n()).map(|v| g.degree(v) as u64).filter(|&d| d >= s as u64).map(choose).sum()
}
