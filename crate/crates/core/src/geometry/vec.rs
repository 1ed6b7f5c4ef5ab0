use num_integer::Integer;

use crate::linalg::IVec3;

#[inline]
pub fn dot(a: IVec3, b: IVec3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross(a: IVec3, b: IVec3) -> IVec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn sub(a: IVec3, b: IVec3) -> IVec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn add(a: IVec3, b: IVec3) -> IVec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn scale(k: i64, a: IVec3) -> IVec3 {
    [k * a[0], k * a[1], k * a[2]]
}

#[inline]
pub fn neg(a: IVec3) -> IVec3 {
    [-a[0], -a[1], -a[2]]
}

#[inline]
pub fn det3(a: IVec3, b: IVec3, c: IVec3) -> i64 {
    dot(a, cross(b, c))
}

pub fn content(a: IVec3) -> i64 {
    a[0].gcd(&a[1]).gcd(&a[2])
}

/// `a / content(a)`; the zero vector stays zero.
pub fn primitive(a: IVec3) -> IVec3 {
    let g = content(a);
    if g == 0 {
        a
    } else {
        [a[0] / g, a[1] / g, a[2] / g]
    }
}

pub fn is_zero(a: IVec3) -> bool {
    a == [0, 0, 0]
}

/// Three-by-three matrix with the given columns, times `v`.
pub fn mat_vec(m: &[[i64; 3]; 3], v: IVec3) -> IVec3 {
    [dot(m[0], v), dot(m[1], v), dot(m[2], v)]
}

/// Rank of a set of integer vectors.
pub fn rank_of(vs: &[IVec3]) -> usize {
    let nz: Vec<IVec3> = vs.iter().copied().filter(|v| !is_zero(*v)).collect();
    let Some(&a) = nz.first() else { return 0 };
    let Some(&b) = nz.iter().find(|&&v| !is_zero(cross(a, v))) else {
        return 1;
    };
    let n = cross(a, b);
    if nz.iter().any(|&v| dot(n, v) != 0) {
        3
    } else {
        2
    }
}
