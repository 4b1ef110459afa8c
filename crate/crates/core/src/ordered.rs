//! Bi-invariant orders: lexicographic `Z^q` and lexicographic central
//! extensions, plus the concrete root-uniqueness check they imply.

use std::cmp::Ordering;
use std::fmt::Debug;

/// A group with a total order meant to be invariant under left and right
/// multiplication.
pub trait OrderedGroup {
    type Elem: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inverse(&self, x: &Self::Elem) -> Self::Elem;
    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering;

    fn pow(&self, x: &Self::Elem, m: u32) -> Self::Elem {
        let mut acc = self.identity();
        for _ in 0..m {
            acc = self.mul(&acc, x);
        }
        acc
    }

    fn is_positive(&self, x: &Self::Elem) -> bool {
        self.compare(x, &self.identity()) == Ordering::Greater
    }
}

/// `Z^q` under coordinatewise addition, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZqLex {
    pub q: usize,
}

impl ZqLex {
    pub fn new(q: usize) -> Self {
        Self { q }
    }
}

impl OrderedGroup for ZqLex {
    type Elem = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.q]
    }

    fn mul(&self, x: &Vec<i64>, y: &Vec<i64>) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn inverse(&self, x: &Vec<i64>) -> Vec<i64> {
        x.iter().map(|a| -a).collect()
    }

    fn compare(&self, x: &Vec<i64>, y: &Vec<i64>) -> Ordering {
        x.cmp(y)
    }
}

/// Normalized 2-cocycle with values in the kernel `Z^r`.
pub type Cocycle<E> = fn(&E, &E, usize) -> Vec<i64>;

/// Central extension `1 -> Z^r -> B -> Q -> 1` with elements stored as
/// `(quotient part, kernel offset)` and product
/// `(x, a)(y, b) = (xy, a + b + c(x, y))`.
///
/// `u < v` iff `phi(u) < phi(v)`, or the images agree and `u v^-1` is
/// positive in the kernel.
#[derive(Debug, Clone)]
pub struct LexExtension<Q: OrderedGroup> {
    pub quotient: Q,
    pub kernel: ZqLex,
    pub cocycle: Cocycle<Q::Elem>,
}

fn zero_cocycle<E>(_: &E, _: &E, r: usize) -> Vec<i64> {
    vec![0; r]
}

fn heisenberg_cocycle(x: &Vec<i64>, y: &Vec<i64>, _: usize) -> Vec<i64> {
    vec![x[0] * y[1]]
}

impl<Q: OrderedGroup> LexExtension<Q> {
    /// Direct product ordered quotient-first.
    pub fn direct(quotient: Q, kernel_rank: usize) -> Self {
        Self { quotient, kernel: ZqLex::new(kernel_rank), cocycle: zero_cocycle::<Q::Elem> }
    }
}

impl LexExtension<ZqLex> {
    /// The integer Heisenberg group as a central extension of `Z^2` by `Z`.
    pub fn heisenberg() -> Self {
        Self { quotient: ZqLex::new(2), kernel: ZqLex::new(1), cocycle: heisenberg_cocycle }
    }
}

impl<Q: OrderedGroup> OrderedGroup for LexExtension<Q> {
    type Elem = (Q::Elem, Vec<i64>);

    fn identity(&self) -> Self::Elem {
        (self.quotient.identity(), self.kernel.identity())
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let c = (self.cocycle)(&x.0, &y.0, self.kernel.q);
        let k = self.kernel.mul(&self.kernel.mul(&x.1, &y.1), &c);
        (self.quotient.mul(&x.0, &y.0), k)
    }

    fn inverse(&self, x: &Self::Elem) -> Self::Elem {
        let xi = self.quotient.inverse(&x.0);
        let c = (self.cocycle)(&x.0, &xi, self.kernel.q);
        (xi, self.kernel.inverse(&self.kernel.mul(&x.1, &c)))
    }

    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        match self.quotient.compare(&x.0, &y.0) {
            Ordering::Equal => {
                let d = self.mul(x, &self.inverse(y));
                self.kernel.compare(&d.1, &self.kernel.identity())
            }
            o => o,
        }
    }
}

/// `f^m = g^m  =>  f = g`, evaluated on the given elements.
pub fn unique_root_check<G: OrderedGroup>(g: &G, f: &G::Elem, h: &G::Elem, m: u32) -> bool {
    g.pow(f, m) != g.pow(h, m) || f == h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_examples() {
        let z2 = ZqLex::new(2);
        assert_eq!(z2.compare(&vec![1, 5], &vec![2, 0]), Ordering::Less);
        assert_eq!(z2.compare(&vec![1, 5], &vec![1, 5]), Ordering::Equal);
        let ext = LexExtension::direct(ZqLex::new(1), 1);
        assert_eq!(ext.compare(&(vec![0], vec![3]), &(vec![0], vec![-1])), Ordering::Greater);
    }

    #[test]
    fn root_examples() {
        let z2 = ZqLex::new(2);
        assert!(unique_root_check(&z2, &vec![1, 2], &vec![1, 2], 3));
        assert!(unique_root_check(&z2, &vec![1, 0], &vec![0, 1], 2));
    }

    #[test]
    fn heisenberg_is_nonabelian_with_central_commutator() {
        let h = LexExtension::heisenberg();
        let x = (vec![1, 0], vec![0]);
        let y = (vec![0, 1], vec![0]);
        let xy = h.mul(&x, &y);
        let yx = h.mul(&y, &x);
        assert_ne!(xy, yx);
        let comm = h.mul(&xy, &h.inverse(&yx));
        assert_eq!(comm, (vec![0, 0], vec![1]));
        assert_eq!(h.mul(&x, &h.inverse(&x)), h.identity());
    }
}
