//! Random parameter generators shared by the integration tests.
#![allow(dead_code)]

use adcurve::{AdaParameter, ConjugacyClass, Eigenvalue, Slope, YoungDiagram};
use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn eig(s: &str) -> Eigenvalue {
    s.parse().unwrap()
}

pub fn yd(c: &[usize]) -> YoungDiagram {
    YoungDiagram::new(c.to_vec()).unwrap()
}

pub fn type_one(m: usize, s: usize, r: usize, c: &[usize]) -> AdaParameter {
    AdaParameter::type_one(m, s, r, yd(c)).unwrap()
}

/// Eigenvalues used by the generators, 1 first.
pub fn pool() -> Vec<Eigenvalue> {
    ["1", "-1", "i", "e(1/3)", "2", "1/2*e(1/5)"]
        .iter()
        .map(|s| eig(s))
        .collect()
}

/// Random diagram of the given rank with every column at most `max_height`.
/// Returns `None` when impossible (positive rank, zero height).
pub fn diagram<R: Rng>(rng: &mut R, rank: usize, max_height: usize) -> Option<YoungDiagram> {
    if rank == 0 {
        return Some(YoungDiagram::empty());
    }
    if max_height == 0 {
        return None;
    }
    let mut cols = Vec::new();
    let mut left = rank;
    let mut cap = max_height;
    while left > 0 {
        let h = rng.random_range(1..=cap.min(left));
        cols.push(h);
        left -= h;
        cap = h;
    }
    Some(YoungDiagram::new(cols).unwrap())
}

/// Splits `total` into `parts` nonnegative summands.
fn split<R: Rng>(rng: &mut R, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (0..parts.saturating_sub(1))
        .map(|_| rng.random_range(0..=total))
        .collect();
    cuts.push(0);
    cuts.push(total);
    cuts.sort_unstable();
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Random class of the given rank over `eigs`, with column caps per
/// eigenvalue.
fn class<R: Rng>(
    rng: &mut R,
    rank: usize,
    eigs: &[Eigenvalue],
    cap: impl Fn(&Eigenvalue) -> usize,
) -> Option<ConjugacyClass> {
    let sizes = split(rng, rank, eigs.len());
    let mut parts = Vec::new();
    for (e, n) in eigs.iter().zip(sizes) {
        parts.push((*e, diagram(rng, n, cap(e))?));
    }
    ConjugacyClass::from_parts(parts).ok()
}

pub fn coprime_slope<R: Rng>(rng: &mut R, s_range: (usize, usize), r_range: (usize, usize)) -> Slope {
    loop {
        let s = rng.random_range(s_range.0..=s_range.1);
        let r = rng.random_range(r_range.0..=r_range.1);
        if s.gcd(&r) == 1 {
            return Slope::new(s, r).unwrap();
        }
    }
}

/// Parameters on which every elementary operation is defined and the
/// involution and inverse-pair laws hold: for every eigenvalue `a`,
/// `h1(C0_a) + h1(Cinf_a) <= ms` and `h1(Cinf_a) < ms`.
pub fn admissible<R: Rng>(rng: &mut R, slope: Slope, max_m: usize, max_eigs: usize) -> AdaParameter {
    let pool = pool();
    loop {
        let m = rng.random_range(1..=max_m);
        let ms = m * slope.s();
        let n_eigs = rng.random_range(1..=max_eigs.min(pool.len()));
        let mut eigs: Vec<Eigenvalue> = pool.clone();
        // deterministic partial shuffle
        for i in 0..n_eigs {
            let j = rng.random_range(i..eigs.len());
            eigs.swap(i, j);
        }
        eigs.truncate(n_eigs);
        let inf_rank = rng.random_range(0..=4);
        let Some(cinf) = class(rng, inf_rank, &eigs, |_| ms - 1) else {
            continue;
        };
        let rank = m * slope.r() + cinf.rank();
        let Some(c0) = class(rng, rank, &eigs, |e| ms - cinf.part(e).first_column_height()) else {
            continue;
        };
        if let Ok(t) = AdaParameter::new(m, slope, c0, cinf) {
            return t;
        }
    }
}

/// Standard type I parameter with `h1 <= ms`.
pub fn type_one_random<R: Rng>(rng: &mut R, slope: Slope, max_m: usize) -> AdaParameter {
    loop {
        let m = rng.random_range(1..=max_m);
        let ms = m * slope.s();
        if let Some(y) = diagram(rng, m * slope.r(), ms) {
            return AdaParameter::type_one(m, slope.s(), slope.r(), y).unwrap();
        }
    }
}

/// Standard type I parameter satisfying the complement hypotheses:
/// `s > 1`, `h1 <= ms`, `L > κ`.
pub fn complement_admissible<R: Rng>(rng: &mut R) -> AdaParameter {
    loop {
        let m = rng.random_range(1..=2);
        let s = rng.random_range(2..=7);
        let ms = m * s;
        let l = rng.random_range(1..=6);
        let cols: Vec<usize> = {
            let mut v: Vec<usize> = (0..l).map(|_| rng.random_range(1..=ms)).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        let rank: usize = cols.iter().sum();
        if !rank.is_multiple_of(m) {
            continue;
        }
        let r = rank / m;
        if r.gcd(&s) != 1 || l * s <= r {
            continue;
        }
        return AdaParameter::type_one(m, s, r, YoungDiagram::new(cols).unwrap()).unwrap();
    }
}

/// Standard non-type-I parameter with `κ = rank(Cinf)` in `1..=max_kappa`.
pub fn standard_non_type_one<R: Rng>(rng: &mut R, max_kappa: usize) -> AdaParameter {
    standard_capped(rng, max_kappa, false)
}

/// As [`standard_non_type_one`], with column heights at most `ms`.
pub fn standard_non_type_one_bounded<R: Rng>(rng: &mut R, max_kappa: usize) -> AdaParameter {
    standard_capped(rng, max_kappa, true)
}

fn standard_capped<R: Rng>(rng: &mut R, max_kappa: usize, bounded: bool) -> AdaParameter {
    let betas: Vec<Eigenvalue> = pool().into_iter().skip(1).collect();
    loop {
        let slope = coprime_slope(rng, (1, 7), (1, 12));
        let m = rng.random_range(1..=2);
        let kappa = rng.random_range(1..=max_kappa.min(betas.len()));
        let mut chosen = betas.clone();
        for i in 0..kappa {
            let j = rng.random_range(i..chosen.len());
            chosen.swap(i, j);
        }
        let cinf = ConjugacyClass::from_parts(chosen[..kappa].iter().map(|b| (*b, yd(&[1])))).unwrap();
        let rank = m * slope.r() + kappa;
        let cap = if bounded { m * slope.s() } else { rank };
        let Some(y) = diagram(rng, rank, cap) else {
            continue;
        };
        if let Ok(t) = AdaParameter::new(m, slope, ConjugacyClass::unipotent(y), cinf) {
            return t;
        }
    }
}

/// All diagrams with at most `max_cols` columns of height at most `max_h`.
pub fn all_diagrams(max_cols: usize, max_h: usize) -> Vec<YoungDiagram> {
    fn go(prefix: &mut Vec<usize>, cap: usize, left: usize, out: &mut Vec<YoungDiagram>) {
        out.push(YoungDiagram::new(prefix.clone()).unwrap());
        if left == 0 {
            return;
        }
        for h in 1..=cap {
            prefix.push(h);
            go(prefix, h, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_h, max_cols, &mut out);
    out
}
