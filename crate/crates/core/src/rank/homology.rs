use crate::linalg::IntMatrix;

/// Order complex of a finite poset: simplices are chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderComplex {
    /// Poset elements, as caller-side ids.
    pub vertices: Vec<usize>,
    /// Chains as sorted vertex positions, grouped by dimension.
    pub simplices: Vec<Vec<Vec<usize>>>,
}

impl OrderComplex {
    /// `less(i, j)` is the strict order on `vertices` positions.
    pub fn from_poset(vertices: Vec<usize>, less: impl Fn(usize, usize) -> bool) -> Self {
        let n = vertices.len();
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let d = chain.len() - 1;
            if simplices.len() <= d {
                simplices.resize(d + 1, Vec::new());
            }
            let top = *chain.last().unwrap();
            for j in 0..n {
                if less(top, j) {
                    let mut c = chain.clone();
                    c.push(j);
                    stack.push(c);
                }
            }
            let mut sorted = chain;
            sorted.sort_unstable();
            simplices[d].push(sorted);
        }
        for s in &mut simplices {
            s.sort();
        }
        OrderComplex { vertices, simplices }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, Vec::len)
    }

    /// Connected components of the 1-skeleton.
    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in self.simplices.get(1).into_iter().flatten() {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            parent[a] = b;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// Reduced Betti numbers over Q in degrees -1, 0, 1, 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    pub betti: [u64; 4],
    /// Connected components.
    pub components: usize,
}

impl HomologyProfile {
    pub fn reduced(&self, p: i32) -> u64 {
        self.betti[(p + 1) as usize]
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

pub fn reduced_homology(k: &OrderComplex) -> HomologyProfile {
    // c[p + 1] = number of p-simplices, with the augmentation in degree -1
    let top = k.simplices.len();
    let mut c = vec![1usize];
    c.extend((0..top.max(3) + 1).map(|d| k.count(d)));
    // r[p + 1] = rank of the boundary map out of degree p
    let mut r = vec![0usize; c.len() + 1];
    r[1] = usize::from(c[1] > 0);
    for d in 1..=top.max(1) {
        if k.count(d) == 0 || k.count(d - 1) == 0 {
            continue;
        }
        r[d + 1] = boundary_rank(&k.simplices[d - 1], &k.simplices[d]);
    }
    let mut betti = [0u64; 4];
    for (i, b) in betti.iter_mut().enumerate() {
        *b = (c[i] - r[i] - r[i + 1]) as u64;
    }
    HomologyProfile {
        betti,
        components: k.components(),
    }
}

fn boundary_rank(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> usize {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, s) in upper.iter().enumerate() {
        for omit in 0..s.len() {
            let face: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != omit).map(|(_, &v)| v).collect();
            let i = lower.binary_search(&face).expect("boundary face is a simplex");
            m[i][j] = if omit % 2 == 0 { 1 } else { -1 };
        }
    }
    rank_small(m)
}

/// Rank over Q by fraction-free elimination in i128, falling back to
/// arbitrary precision on overflow.
fn rank_small(rows: Vec<Vec<i64>>) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (n, m) = (a.len(), a.first().map_or(0, Vec::len));
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, p);
        for i in rank + 1..n {
            if a[i][col] == 0 {
                continue;
            }
            let (f, g) = (a[rank][col], a[i][col]);
            for j in col..m {
                let v = a[i][j].checked_mul(f).zip(a[rank][j].checked_mul(g)).and_then(|(x, y)| x.checked_sub(y));
                match v {
                    Some(v) => a[i][j] = v,
                    None => return IntMatrix::from_rows(&rows).rank(),
                }
            }
        }
        rank += 1;
    }
    rank
}
