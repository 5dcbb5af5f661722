use super::{Algebra, AlgebraError, CayleyTable, Result, MAX_ORDER};

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(AlgebraError::Empty)
    } else if order > MAX_ORDER {
        Err(AlgebraError::TooLarge { order, limit: MAX_ORDER })
    } else {
        Ok(())
    }
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// ℤₙ under addition; element `i` is labelled `"i"`.
pub fn cyclic(n: usize) -> Result<Algebra> {
    check_order(n)?;
    let table = CayleyTable::from_fn_trusted(numeric_labels(n), |a, b| (a + b) % n)?;
    Ok(Algebra::new(format!("cyclic:{n}"), table))
}

/// Symmetries of the regular n-gon, order `2n`. Element `j*n + i` is
/// `s^j r^i`, labelled `e, r, r^2, …, s, sr, sr^2, …`.
pub fn dihedral(n: usize) -> Result<Algebra> {
    check_order(2 * n)?;
    let labels = (0..2 * n)
        .map(|x| {
            let (j, i) = (x / n, x % n);
            let rot = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{i}"),
            };
            match (j, rot.is_empty()) {
                (0, true) => "e".to_string(),
                (0, false) => rot,
                _ => format!("s{rot}"),
            }
        })
        .collect();
    // s^j1 r^i1 · s^j2 r^i2 = s^(j1+j2) r^((-1)^j2 i1 + i2)
    let table = CayleyTable::from_fn_trusted(labels, |x, y| {
        let (j1, i1) = (x / n, x % n);
        let (j2, i2) = (y / n, y % n);
        let i1 = if j2 == 1 { (n - i1) % n } else { i1 };
        ((j1 + j2) % 2) * n + (i1 + i2) % n
    })?;
    Ok(Algebra::new(format!("dihedral:{n}"), table))
}

/// Q₈ with elements in the order `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> Result<Algebra> {
    // Unit products as (sign, unit) with units 1, i, j, k = 0..4.
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let table = CayleyTable::from_fn_trusted(labels, |x, y| {
        let (neg, unit) = UNIT[x / 2][y / 2];
        let negative = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
        2 * unit + usize::from(negative)
    })?;
    Ok(Algebra::new("quaternion", table))
}

/// The Klein four-group `{e, a, b, c}`.
pub fn klein() -> Result<Algebra> {
    let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let table = CayleyTable::from_fn_trusted(labels, |x, y| x ^ y)?;
    Ok(Algebra::new("klein", table))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = perm[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Sₙ for `n ≤ 6`, permutations in lexicographic order of their images,
/// labelled in 1-based cycle notation. The product `στ` applies `τ` first.
pub fn symmetric(n: usize) -> Result<Algebra> {
    if n == 0 || n > 6 {
        return Err(AlgebraError::TooLarge { order: n, limit: 6 });
    }
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation");
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    let table = CayleyTable::from_fn_trusted(labels, |a, b| {
        let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
        index(&composed)
    })?;
    Ok(Algebra::new(format!("sym:{n}"), table))
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// (ℤ_p)^k with coordinate vectors as labels, first coordinate most significant.
pub fn elementary_abelian(p: usize, k: u32) -> Result<Algebra> {
    if !is_prime(p) {
        return Err(AlgebraError::Spec(super::SpecError::BadParameter {
            token: p.to_string(),
            reason: "p must be prime".into(),
        }));
    }
    let order = p
        .checked_pow(k)
        .filter(|&o| o <= MAX_ORDER)
        .ok_or(AlgebraError::TooLarge { order: usize::MAX, limit: MAX_ORDER })?;
    let digits = |mut x: usize| {
        let mut d = vec![0; k as usize];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let labels = (0..order)
        .map(|x| {
            let parts: Vec<String> = digits(x).iter().map(|d| d.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let table = CayleyTable::from_fn_trusted(labels, |x, y| {
        digits(x)
            .iter()
            .zip(digits(y))
            .fold(0, |acc, (a, b)| acc * p + (a + b) % p)
    })?;
    Ok(Algebra::new(format!("elemab:{p}:{k}"), table))
}

/// ℤₙ under multiplication: a commutative monoid with zero.
pub fn multiplicative_mod(n: usize) -> Result<Algebra> {
    check_order(n)?;
    let table = CayleyTable::from_fn_trusted(numeric_labels(n), |a, b| (a * b) % n)?;
    Ok(Algebra::new(format!("multmod:{n}"), table))
}

/// Tₙ, all maps `{0..n} → {0..n}` for `n ≤ 4`, labelled by their image
/// list `[f(0),…,f(n-1)]` and ordered lexicographically. The product `fg`
/// applies `f` first, then `g`.
pub fn full_transformation(n: usize) -> Result<Algebra> {
    if n == 0 || n > 4 {
        return Err(AlgebraError::TooLarge { order: n, limit: 4 });
    }
    let order = n.pow(n as u32);
    let image = |mut x: usize| {
        let mut img = vec![0; n];
        for slot in img.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        img
    };
    let encode = |img: &[usize]| img.iter().fold(0, |acc, &v| acc * n + v);
    let labels = (0..order)
        .map(|x| {
            let parts: Vec<String> = image(x).iter().map(|v| v.to_string()).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let table = CayleyTable::from_fn_trusted(labels, |f, g| {
        let (f, g) = (image(f), image(g));
        let composed: Vec<usize> = f.iter().map(|&y| g[y]).collect();
        encode(&composed)
    })?;
    Ok(Algebra::new(format!("fulltrans:{n}"), table))
}
