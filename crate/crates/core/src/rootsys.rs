//! Type-B root-system data: the positive roots in their convex order, the
//! structural-constants matrix, its multiplicative extension to group words,
//! the weight 2*rho, and the twisted bracketings that define the quantum root
//! vectors.

use crate::coeff::RatFun;
use crate::error::EngineError;
use crate::freealg::{convex_positions, root_coords};

/// Kind of a positive root in the classical naming.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootKind {
    /// alpha_{i,j} = eps_i - eps_j (1 <= i < j <= n+... stored as E(i, j-1))
    Alpha { i: u8, j: u8 },
    /// eps_l
    Eps { l: u8 },
    /// beta_{i,j} = eps_i + eps_j (i < j)
    Beta { i: u8, j: u8 },
}

/// One positive root: flattened position plus coordinates in the simple-root
/// basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositiveRoot {
    pub pos: (u8, u8),
    pub kind: RootKind,
    pub coords: Vec<i64>,
}

/// The convex ordering on the n^2 positive roots.
#[derive(Clone, Debug)]
pub struct ConvexOrder {
    pub n: u8,
    pub roots: Vec<PositiveRoot>,
}

impl ConvexOrder {
    pub fn index_of(&self, pos: (u8, u8)) -> Option<usize> {
        self.roots.iter().position(|r| r.pos == pos)
    }
}

/// All positive roots of so_{2n+1} in the convex order.
pub fn positive_roots(n: u8) -> Result<ConvexOrder, EngineError> {
    if n < 2 {
        return Err(EngineError::RankTooSmall(n));
    }
    let mut roots = Vec::new();
    for (i, j) in convex_positions(n) {
        let kind = if j < n {
            RootKind::Alpha { i, j: j + 1 }
        } else if j == n {
            RootKind::Eps { l: i }
        } else {
            RootKind::Beta { i, j: 2 * n - j + 1 }
        };
        let mut coords = vec![0i64; n as usize];
        for (k, c) in root_coords(i, j, n) {
            coords[k as usize - 1] = c;
        }
        roots.push(PositiveRoot { pos: (i, j), kind, coords });
    }
    Ok(ConvexOrder { n, roots })
}

/// Entry `<omega'_i, omega_j>` of the structural-constants matrix.
///
/// Diagonal `r^2 s^-2` except `(n,n) = r s^-1`; superdiagonal `r^-2`;
/// subdiagonal `s^2`; all other entries 1.
pub fn structural_constant(i: u8, j: u8, n: u8) -> Result<RatFun, EngineError> {
    if i < 1 || i > n || j < 1 || j > n {
        return Err(EngineError::IndexOutOfRange(format!("constant ({i},{j}) at rank {n}")));
    }
    Ok(structural_exponents(i, j, n).map_or_else(RatFun::one, |(a, b)| RatFun::mono(a, b)))
}

/// The (r-exponent, s-exponent) of the matrix entry, or None when it is 1.
fn structural_exponents(i: u8, j: u8, n: u8) -> Option<(i64, i64)> {
    if i == j {
        Some(if i == n { (1, -1) } else { (2, -2) })
    } else if j == i + 1 {
        Some((-2, 0))
    } else if i == j + 1 {
        Some((0, 2))
    } else {
        None
    }
}

/// `<omega'-word, omega-word>` for exponent vectors over the two tori:
/// the multiplicative extension of the matrix.
pub fn group_pairing(wp: &[i64], w: &[i64], n: u8) -> RatFun {
    let mut ra = 0i64;
    let mut sb = 0i64;
    for i in 1..=n {
        let ci = wp[i as usize - 1];
        if ci == 0 {
            continue;
        }
        for j in 1..=n {
            let dj = w[j as usize - 1];
            if dj == 0 {
                continue;
            }
            if let Some((a, b)) = structural_exponents(i, j, n) {
                ra += a * ci * dj;
                sb += b * ci * dj;
            }
        }
    }
    RatFun::mono(ra, sb)
}

/// Coefficient vector of `2 rho = sum_j j(2n-j) alpha_j`.
pub fn two_rho(n: u8) -> Vec<i64> {
    (1..=n as i64).map(|j| j * (2 * n as i64 - j)).collect()
}

/// One node of the twisted-bracketing tree of a quantum root vector:
/// `[x, y]_t = x y - t y x`.
#[derive(Clone, Debug, PartialEq)]
pub enum Bracketing {
    Leaf(u8),
    Node { left: Box<Bracketing>, right: Box<Bracketing>, twist: RatFun },
}

impl Bracketing {
    pub fn degree(&self, n: u8) -> Vec<i64> {
        match self {
            Bracketing::Leaf(i) => {
                let mut d = vec![0i64; n as usize];
                d[*i as usize - 1] = 1;
                d
            }
            Bracketing::Node { left, right, .. } => {
                let mut d = left.degree(n);
                for (k, v) in right.degree(n).iter().enumerate() {
                    d[k] += v;
                }
                d
            }
        }
    }
}

/// The defining bracketing of the root at flattened position `(i, J)`:
/// the twists are r^2 for the alpha/eps recursion, rs at the n-prime step,
/// and s^-2 for the remaining primed steps.
pub fn bracketing(i: u8, j: u8, n: u8) -> Bracketing {
    assert!(i >= 1 && i <= n && j >= i && j <= 2 * n - i);
    if j == i {
        Bracketing::Leaf(i)
    } else if j <= n {
        Bracketing::Node {
            left: Box::new(Bracketing::Leaf(i)),
            right: Box::new(bracketing(i + 1, j, n)),
            twist: RatFun::mono(2, 0),
        }
    } else if j == n + 1 {
        Bracketing::Node {
            left: Box::new(bracketing(i, n, n)),
            right: Box::new(Bracketing::Leaf(n)),
            twist: RatFun::mono(1, 1),
        }
    } else {
        let jj = 2 * n - j + 1; // the primed index
        Bracketing::Node {
            left: Box::new(bracketing(i, j - 1, n)),
            right: Box::new(Bracketing::Leaf(jj)),
            twist: RatFun::mono(0, -2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_lists() {
        let c2 = positive_roots(2).unwrap();
        let kinds: Vec<RootKind> = c2.roots.iter().map(|r| r.kind).collect();
        assert_eq!(
            kinds,
            vec![
                RootKind::Alpha { i: 1, j: 2 },
                RootKind::Eps { l: 1 },
                RootKind::Beta { i: 1, j: 2 },
                RootKind::Eps { l: 2 },
            ]
        );
        let c3 = positive_roots(3).unwrap();
        assert_eq!(c3.roots.len(), 9);
        let first_row: Vec<RootKind> = c3.roots[..5].iter().map(|r| r.kind).collect();
        assert_eq!(
            first_row,
            vec![
                RootKind::Alpha { i: 1, j: 2 },
                RootKind::Alpha { i: 1, j: 3 },
                RootKind::Eps { l: 1 },
                RootKind::Beta { i: 1, j: 3 },
                RootKind::Beta { i: 1, j: 2 },
            ]
        );
        for n in 2..=5u8 {
            assert_eq!(positive_roots(n).unwrap().roots.len(), (n as usize).pow(2));
        }
        assert!(positive_roots(1).is_err());
    }

    #[test]
    fn structural_matrix() {
        use crate::coeff::parse_ratfun;
        let rf = |s: &str| parse_ratfun(s).unwrap();
        for n in [2u8, 4] {
            assert_eq!(structural_constant(1, 1, n).unwrap(), rf("r^2*s^-2"));
            assert_eq!(structural_constant(n, n, n).unwrap(), rf("r*s^-1"));
            assert_eq!(structural_constant(1, 2, n).unwrap(), rf("r^-2"));
            assert_eq!(structural_constant(2, 1, n).unwrap(), rf("s^2"));
            assert_eq!(structural_constant(n, n - 1, n).unwrap(), rf("s^2"));
        }
        assert!(structural_constant(1, 3, 4).unwrap().is_one());
        assert!(structural_constant(0, 1, 4).is_err());
    }

    #[test]
    fn group_pairing_examples() {
        use crate::coeff::parse_ratfun;
        let n = 2;
        // <omega'_1, omega_1^{-1}> = r^-2 s^2
        let v = group_pairing(&[1, 0], &[-1, 0], n);
        assert_eq!(v, parse_ratfun("r^-2*s^2").unwrap());
        // <1, w> = 1
        assert!(group_pairing(&[0, 0], &[3, -2], n).is_one());
        // <omega'_{2rho}, omega_1> at n=2: (r^2 s^-2)^3 (s^2)^4
        let v = group_pairing(&two_rho(n), &[1, 0], n);
        assert_eq!(v, parse_ratfun("r^6*s^2").unwrap());
    }

    #[test]
    fn two_rho_matches_root_sum() {
        for n in 2..=5u8 {
            let roots = positive_roots(n).unwrap();
            let mut total = vec![0i64; n as usize];
            for r in &roots.roots {
                for (k, c) in r.coords.iter().enumerate() {
                    total[k] += c;
                }
            }
            assert_eq!(total, two_rho(n), "sum over positive roots at n={n}");
        }
        assert_eq!(two_rho(2), vec![3, 4]);
        assert_eq!(two_rho(3), vec![5, 8, 9]);
    }

    #[test]
    fn convexity_of_order() {
        // whenever coords(gamma) = coords(alpha) + coords(beta), gamma lies
        // between alpha and beta in the order
        for n in 2..=5u8 {
            let order = positive_roots(n).unwrap();
            let m = order.roots.len();
            for a in 0..m {
                for b in (a + 1)..m {
                    let sum: Vec<i64> = order.roots[a]
                        .coords
                        .iter()
                        .zip(&order.roots[b].coords)
                        .map(|(x, y)| x + y)
                        .collect();
                    if let Some(g) = order.roots.iter().position(|r| r.coords == sum) {
                        assert!(a < g && g < b, "convexity violated at n={n}: {a} {g} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn bracketing_shapes() {
        // eps_n is the leaf e_n
        assert_eq!(bracketing(2, 2, 2), Bracketing::Leaf(2));
        // alpha_{13} at n=3 is [e_1, e_2]_{r^2}
        let b = bracketing(1, 2, 3);
        match b {
            Bracketing::Node { left, right, twist } => {
                assert_eq!(*left, Bracketing::Leaf(1));
                assert_eq!(*right, Bracketing::Leaf(2));
                assert_eq!(twist, RatFun::mono(2, 0));
            }
            _ => panic!("expected a node"),
        }
        // beta_{n-1,n} is [[e_{n-1}, e_n]_{r^2}, e_n]_{rs}
        let b = bracketing(2, 4, 3); // n=3: (2, 4) = beta_{2,3}
        match b {
            Bracketing::Node { left, right, twist } => {
                assert_eq!(twist, RatFun::mono(1, 1));
                assert_eq!(*right, Bracketing::Leaf(3));
                match *left {
                    Bracketing::Node { twist, .. } => assert_eq!(twist, RatFun::mono(2, 0)),
                    _ => panic!("expected inner node"),
                }
            }
            _ => panic!("expected a node"),
        }
    }

    #[test]
    fn bracketing_twist_matches_structural_constants() {
        // at every internal node the twist equals <omega'_left, omega_right>^{-1}
        for n in 2..=4u8 {
            for (i, j) in convex_positions(n) {
                check_twists(&bracketing(i, j, n), n);
            }
        }
    }

    fn check_twists(b: &Bracketing, n: u8) {
        if let Bracketing::Node { left, right, twist } = b {
            let expected = group_pairing(&left.degree(n), &right.degree(n), n)
                .inv()
                .unwrap();
            assert_eq!(*twist, expected);
            check_twists(left, n);
            check_twists(right, n);
        }
    }
}
