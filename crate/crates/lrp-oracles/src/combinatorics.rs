use lrp_components::ForwardDegreeVector;

use crate::OracleError;

/// Largest number of blocks for which forward-degree vectors are enumerated.
pub const MAX_F_VECTOR_BLOCKS: usize = 12;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Ballot-problem count of forward-degree vectors of length `b`: the Catalan number `C_{b-1}`.
pub fn ballot_count(b: usize) -> u64 {
    if b == 0 {
        return 0;
    }
    let b = b as u64;
    (binomial(2 * b - 2, b - 1) / b as u128) as u64
}

/// All forward-degree vectors of length `b`, in lexicographic order.
pub fn enumerate_f_vectors(b: usize) -> Result<Vec<ForwardDegreeVector>, OracleError> {
    if b == 0 || b > MAX_F_VECTOR_BLOCKS {
        return Err(OracleError::Guard(format!(
            "b = {b} outside 1..={MAX_F_VECTOR_BLOCKS}"
        )));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(b);
    extend(b, 0, &mut prefix, &mut out);
    Ok(out)
}

fn extend(b: usize, sum: usize, prefix: &mut Vec<usize>, out: &mut Vec<ForwardDegreeVector>) {
    let j = prefix.len();
    if j == b - 1 {
        prefix.push(b - 1 - sum);
        out.push(ForwardDegreeVector::new(prefix.clone()).expect("generated vectors are valid"));
        prefix.pop();
        return;
    }
    // the partial sum through position j (0-based) must reach j + 1
    let lo = (j + 1).saturating_sub(sum);
    for x in lo..=(b - 1 - sum) {
        prefix.push(x);
        extend(b, sum + x, prefix, out);
        prefix.pop();
    }
}

/// Counts forward-degree vectors by filtering every composition of `b - 1`
/// into `b` non-negative parts through the vector validator.
pub fn f_vector_count_by_compositions(b: usize) -> u64 {
    if b == 0 {
        return 0;
    }
    let mut count = 0;
    let mut parts = vec![0usize; b];
    weak_compositions(b - 1, 0, &mut parts, &mut |v| {
        if ForwardDegreeVector::new(v.to_vec()).is_ok() {
            count += 1;
        }
    });
    count
}

fn weak_compositions(left: usize, i: usize, parts: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if i == parts.len() - 1 {
        parts[i] = left;
        f(parts);
        return;
    }
    for x in 0..=left {
        parts[i] = x;
        weak_compositions(left - x, i + 1, parts, f);
    }
}

/// Number of boundary-size vectors `(m_1, ..., m_b)` of positive integers with
/// sum `l`, by direct enumeration. In two dimensions every positive size is
/// attained by a hole-free block (a straight line of `m` sites), so this is the
/// exact size of the vector family for a fixed total.
pub fn count_boundary_compositions(b: usize, l: usize) -> u64 {
    fn go(b: usize, l: usize) -> u64 {
        match b {
            0 => u64::from(l == 0),
            _ => (1..=l).map(|m| go(b - 1, l - m)).sum(),
        }
    }
    go(b, l)
}
