//! Multicolor Ramsey machinery: exact tiny values certified by brute force,
//! recurrence/multinomial upper bounds, constructive monochromatic-set
//! extraction, and the explicit bound functions f, g, h with the log2-scale
//! comparison against the classical (√2)^m lower bound.

use crate::error::{Error, Result};
use crate::magnitude::{BigBound, Magnitude, Polarity};
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashMap;

/// Target clique sizes, one per color.
#[derive(Clone, Debug)]
pub struct ColorSizes {
    sizes: Vec<BigBound>,
}

impl ColorSizes {
    pub fn new(sizes: Vec<BigBound>) -> Result<ColorSizes> {
        if sizes.is_empty() {
            return Err(Error::Input("color sizes must be nonempty".into()));
        }
        for s in &sizes {
            if s.cmp_value(&BigBound::exact_u64(1)) == Ordering::Less {
                return Err(Error::Input("color sizes must be >= 1".into()));
            }
        }
        Ok(ColorSizes { sizes })
    }

    pub fn from_u64s(sizes: &[u64]) -> Result<ColorSizes> {
        ColorSizes::new(sizes.iter().map(|&s| BigBound::exact_u64(s)).collect())
    }

    pub fn sizes(&self) -> &[BigBound] {
        &self.sizes
    }

    fn as_u64s(&self) -> Option<Vec<u64>> {
        self.sizes.iter().map(|s| s.as_u64()).collect()
    }
}

const BRUTE_MAX_EDGES: usize = 28;
const BRUTE_NODE_CAP: u64 = 200_000_000;

/// True iff every coloring of K_m's edges with one color per entry of `sizes`
/// contains a monochromatic clique of the target size in some color.
/// Exhaustive backtracking search for an avoiding coloring, pruning any
/// partial coloring that already completed a target clique.
pub fn brute_force_ramsey_holds(sizes: &ColorSizes, m: usize) -> Result<bool> {
    let sz = sizes.as_u64s().ok_or_else(|| {
        Error::Refused("brute force needs small explicit sizes".into())
    })?;
    if m == 0 {
        return Err(Error::Input("m must be >= 1".into()));
    }
    if sz.iter().any(|&s| s == 1) {
        // a single vertex is a clique of size 1 in every coloring
        return Ok(true);
    }
    let pairs = m * (m - 1) / 2;
    if pairs > BRUTE_MAX_EDGES || sz.len() > 10 {
        return Err(Error::Refused(format!(
            "coloring space {}^{} too large for brute force",
            sz.len(),
            pairs
        )));
    }
    let edges: Vec<(usize, usize)> = (0..m)
        .flat_map(|u| ((u + 1)..m).map(move |v| (u, v)))
        .collect();
    let mut color = vec![usize::MAX; edges.len()];
    let mut nodes = 0u64;
    // returns true if an avoiding (counterexample) coloring extends this prefix
    fn avoid(
        idx: usize,
        edges: &[(usize, usize)],
        color: &mut [usize],
        sz: &[u64],
        m: usize,
        nodes: &mut u64,
    ) -> Result<bool> {
        if idx == edges.len() {
            return Ok(true);
        }
        for c in 0..sz.len() {
            // interchangeable colors: skip a color whose target equals an
            // earlier color's target when that earlier color is still unused
            if (0..c).any(|d| sz[d] == sz[c] && !color[..idx].contains(&d)) && !color[..idx].contains(&c)
            {
                continue;
            }
            *nodes += 1;
            if *nodes > BRUTE_NODE_CAP {
                return Err(Error::Budget("brute-force ramsey node cap".into()));
            }
            color[idx] = c;
            if !completes_clique(idx, c, sz[c] as usize, edges, color, m)
                && avoid(idx + 1, edges, color, sz, m, nodes)?
            {
                return Ok(true);
            }
        }
        color[idx] = usize::MAX;
        Ok(false)
    }
    let found = avoid(0, &edges, &mut color, &sz, m, &mut nodes)?;
    Ok(!found)
}

/// Does coloring edge `idx` with color `c` complete a clique of `target`
/// vertices monochromatic in `c` among the edges colored so far?
fn completes_clique(
    idx: usize,
    c: usize,
    target: usize,
    edges: &[(usize, usize)],
    color: &[usize],
    m: usize,
) -> bool {
    if target < 2 {
        return true;
    }
    let same = |a: usize, b: usize| -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let e = edges
            .iter()
            .position(|&(u, v)| u == lo && v == hi)
            .expect("pair indexed");
        e <= idx && color[e] == c
    };
    let (u, v) = edges[idx];
    // grow a clique containing {u, v} greedily with backtracking
    let cands: Vec<usize> = (0..m).filter(|&w| w != u && w != v && same(w, u) && same(w, v)).collect();
    fn extend(base: &mut Vec<usize>, cands: &[usize], need: usize, same: &dyn Fn(usize, usize) -> bool) -> bool {
        if need == 0 {
            return true;
        }
        for (i, &w) in cands.iter().enumerate() {
            if base.iter().all(|&b| same(w, b)) {
                base.push(w);
                if extend(base, &cands[i + 1..], need - 1, same) {
                    return true;
                }
                base.pop();
            }
        }
        false
    }
    let mut base = vec![u, v];
    target == 2 || extend(&mut base, &cands, target - 2, &same)
}

/// Exact values the repo certifies by brute force (plus the trivial
/// single-color case): any target 1 gives 1, one color gives its target,
/// all-2 targets give 2, and R(3,3)=6.
fn exact_table(sz: &[u64]) -> Option<u64> {
    if sz.iter().any(|&s| s == 1) {
        return Some(1);
    }
    if sz.len() == 1 {
        return Some(sz[0]);
    }
    if sz.iter().all(|&s| s == 2) {
        return Some(2);
    }
    let mut sorted = sz.to_vec();
    sorted.sort_unstable();
    if sorted == [3, 3] {
        return Some(6);
    }
    None
}

const RECURRENCE_STATE_CAP: u64 = 500_000;
const MULTINOMIAL_SUM_CAP: u64 = 10_000;

fn recurrence(sz: &[u64], memo: &mut HashMap<Vec<u64>, BigUint>) -> BigUint {
    if let Some(v) = exact_table(sz) {
        return BigUint::from(v);
    }
    let mut key = sz.to_vec();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // R(n_1..n_k) <= 2 - k + sum_i R(.. n_i - 1 ..)
    let mut total = BigUint::from(2u32);
    for i in 0..sz.len() {
        let mut dec = sz.to_vec();
        dec[i] -= 1;
        total += recurrence(&dec, memo);
    }
    let v = total - BigUint::from(sz.len());
    memo.insert(key, v.clone());
    v
}

fn multinomial_bound(sz: &[&BigUint]) -> BigUint {
    // R <= (sum (n_i - 1))! / prod (n_i - 1)!  — the multicolor analogue of
    // R(a,b) <= C(a+b-2, a-1), valid by induction on the recurrence.
    let parts: Vec<BigUint> = sz.iter().map(|n| *n - 1u32).collect();
    let total: BigUint = parts.iter().sum();
    let mut out = BigUint::one();
    let mut k = BigUint::one();
    let mut remaining = total;
    for p in &parts {
        // multiply by C(remaining, p), telescoping the multinomial
        let mut i = BigUint::from(0u32);
        while &i < p {
            out = out * &remaining / &k;
            remaining -= 1u32;
            k += 1u32;
            i += 1u32;
        }
        k = BigUint::one();
    }
    out
}

/// Upper bound on the multicolor Ramsey number, tiered by feasibility:
/// exact table, memoized recurrence, closed-form multinomial, and finally the
/// log form R <= 2^{(Σ n_i)·ceil(log2 k)} for astronomical arguments.
pub fn ramsey_upper(sizes: &ColorSizes) -> BigBound {
    if let Some(sz) = sizes.as_u64s() {
        if let Some(v) = exact_table(&sz) {
            return BigBound::exact_u64(v);
        }
        let states: u64 = sz
            .iter()
            .try_fold(1u64, |a, &b| a.checked_mul(b))
            .unwrap_or(u64::MAX);
        if states <= RECURRENCE_STATE_CAP {
            let mut memo = HashMap::new();
            return BigBound::upper(Magnitude::Exact(recurrence(&sz, &mut memo)));
        }
    }
    let exacts: Option<Vec<&BigUint>> =
        sizes.sizes.iter().map(|s| s.mag.as_exact()).collect();
    if let Some(exacts) = exacts {
        let sum: u64 = exacts
            .iter()
            .map(|v| u64::try_from(*v).unwrap_or(u64::MAX))
            .fold(0u64, |a, b| a.saturating_add(b));
        if sum <= MULTINOMIAL_SUM_CAP {
            return BigBound::upper(Magnitude::Exact(multinomial_bound(&exacts)));
        }
    }
    // R <= k^{Σ(n_i - 1)} <= 2^{Σ n_i · ceil(log2 k)}
    let k = sizes.sizes.len() as u64;
    let log_k = 64 - (k - 1).leading_zeros() as u64; // ceil(log2 k), k >= 2 here
    let mut sum = BigBound::exact_u64(0);
    for s in &sizes.sizes {
        sum = sum.add(s);
    }
    let e = sum.mul(&BigBound::exact_u64(log_k.max(1)));
    let mut b = e.pow2();
    b.polarity = Polarity::Upper;
    b
}

/// Find a color c and a set of sizes[c] indices in 0..t monochromatic under
/// `coloring` (defined on pairs i < j). Deterministic: colors tried in order,
/// vertices ascending. Guaranteed when t >= the exact Ramsey value.
pub fn find_mono_clique(
    t: usize,
    coloring: &dyn Fn(usize, usize) -> usize,
    sizes: &[usize],
) -> Option<(usize, Vec<usize>)> {
    for (c, &target) in sizes.iter().enumerate() {
        if target == 0 {
            return Some((c, Vec::new()));
        }
        if target == 1 {
            if t >= 1 {
                return Some((c, vec![0]));
            }
            continue;
        }
        let same = |i: usize, j: usize| {
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            coloring(lo, hi) == c
        };
        fn grow(
            base: &mut Vec<usize>,
            from: usize,
            t: usize,
            need: usize,
            same: &dyn Fn(usize, usize) -> bool,
        ) -> bool {
            if need == 0 {
                return true;
            }
            for w in from..t {
                if base.iter().all(|&b| same(b, w)) {
                    base.push(w);
                    if grow(base, w + 1, t, need - 1, same) {
                        return true;
                    }
                    base.pop();
                }
            }
            false
        }
        let mut base = Vec::new();
        if grow(&mut base, 0, t, target, &same) {
            return Some((c, base));
        }
    }
    None
}

/// g(n) = 4^{n-2}(n+1) + 2(n-2) + 1, defined for n >= 2.
pub fn g_fn(n: u64) -> Result<BigBound> {
    if n < 2 {
        return Err(Error::Input(format!("g is defined for n >= 2, got {n}")));
    }
    let v = BigUint::from(4u32).pow((n - 2) as u32) * (n + 1) + 2 * (n - 2) + 1u32;
    Ok(BigBound::exact_big(v))
}

/// h(n, n', 2) = n; h(n, n', i) = (n-1)·R(n×7, n', n', h(n, n', i-1)) + 1.
pub fn h_fn(n: u64, nprime: &BigBound, i: u64) -> Result<BigBound> {
    if n < 1 || i < 2 {
        return Err(Error::Input("h requires n >= 1 and i >= 2".into()));
    }
    if nprime.cmp_value(&BigBound::exact_u64(1)) == Ordering::Less {
        return Err(Error::Input("h requires n' >= 1".into()));
    }
    let mut h = BigBound::exact_u64(n);
    for _ in 2..i {
        let mut args: Vec<BigBound> = vec![BigBound::exact_u64(n); 7];
        args.push(nprime.clone());
        args.push(nprime.clone());
        args.push(h);
        let r = ramsey_upper(&ColorSizes::new(args)?);
        h = BigBound::exact_u64(n - 1).mul(&r).add_u64(1);
    }
    Ok(h)
}

/// f(n, n1, n2) = 2^{M+1} with M = R(n1+n, 2n-1, n+n2, n+n2-1);
/// returns (M, f).
pub fn f_parts(n: u64, n1: &BigBound, n2: &BigBound) -> Result<(BigBound, BigBound)> {
    let one = BigBound::exact_u64(1);
    if n < 1 || n1.cmp_value(&one) == Ordering::Less || n2.cmp_value(&one) == Ordering::Less {
        return Err(Error::Input("f requires all arguments >= 1".into()));
    }
    let nb = BigBound::exact_u64(n);
    let args = vec![
        n1.add(&nb),
        BigBound::exact_u64(2 * n - 1),
        n2.add(&nb),
        n2.add(&BigBound::exact_u64(n - 1)),
    ];
    let m_cap = ramsey_upper(&ColorSizes::new(args)?);
    let f = m_cap.add_u64(1).pow2();
    Ok((m_cap, f))
}

pub fn f_fn(n: u64, n1: &BigBound, n2: &BigBound) -> Result<BigBound> {
    Ok(f_parts(n, n1, n2)?.1)
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub g_n: BigBound,
    pub h_n: BigBound,
    pub x: BigBound,
    pub big_m: BigBound,
    pub m: BigBound,
    pub n_new: BigBound,
    pub n_ckos_lower: BigBound,
}

/// Evaluate the explicit bound chain at n: g(n), h(n, g(n), n),
/// x = R_ub(h, n, n, g), m = f(n, h, g) = 2^{M+1}, N_new = x(5m)^{x+1},
/// and the Spencer-style lower anchor (√2)^m >= 2^{⌊m/2⌋}.
pub fn bound_report(n: u64) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::Input("bound report requires n >= 2".into()));
    }
    let g = g_fn(n)?;
    let h = h_fn(n, &g, n)?;
    let x = ramsey_upper(&ColorSizes::new(vec![
        h.clone(),
        BigBound::exact_u64(n),
        BigBound::exact_u64(n),
        g.clone(),
    ])?);
    let (big_m, m) = f_parts(n, &h, &g)?;
    let five_m = BigBound::exact_u64(5).mul(&m);
    let n_new = x.mul(&five_m.pow(&x.add_u64(1)));
    // the anchor lower-bounds R(m,m) for the computed m, so it carries the
    // lower polarity regardless of how m itself was rounded
    let m_as_input = BigBound { mag: m.mag.clone(), polarity: Polarity::Exact };
    let mut n_ckos_lower = m_as_input.half_lower().pow2();
    n_ckos_lower.polarity = Polarity::Lower;
    Ok(BoundReport {
        n,
        g_n: g,
        h_n: h,
        x,
        big_m,
        m,
        n_new,
        n_ckos_lower,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub n: u64,
    /// x <= log2 m (equivalently x <= M+1), checked on computed values.
    pub x_le_log2_m: bool,
    /// log2(x(5m)^{x+1}) < m/2, i.e. N_new below the (√2)^m anchor.
    pub n_new_below_anchor: bool,
    pub all_hold: bool,
}

/// Check each link of the asymptotic comparison in exact log2-scale
/// arithmetic; ceil on the left and floor on the right keep the checks
/// conservative.
pub fn compare_bounds(n: u64) -> Result<Verdict> {
    let r = bound_report(n)?;
    let log2_m = r.m.log2_ceil();
    let x_le_log2_m = r.x.cmp_value(&log2_m) != Ordering::Greater;
    let lhs = r.n_new.log2_ceil();
    let rhs = BigBound { mag: r.m.mag.clone(), polarity: Polarity::Exact }.half_lower();
    let n_new_below_anchor = lhs.cmp_value(&rhs) == Ordering::Less;
    Ok(Verdict {
        n,
        x_le_log2_m,
        n_new_below_anchor,
        all_hold: x_le_log2_m && n_new_below_anchor,
    })
}
