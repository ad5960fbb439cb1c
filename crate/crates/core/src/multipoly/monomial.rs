use std::cmp::Ordering;

/// Largest number of variables any ring in this crate uses (7 ambient
/// variables plus room for symbolic placeholders).
pub const MAX_VARS: usize = 12;

/// A dense exponent vector. Slots past the ring's arity stay zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.exps[i] = e;
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(o.exps.iter()) {
            *a += *b;
        }
        m
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut m = *o;
        for (a, b) in m.exps.iter_mut().zip(self.exps.iter()) {
            debug_assert!(*a >= *b);
            *a -= *b;
        }
        m
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(o.exps.iter()) {
            *a = (*a).max(*b);
        }
        m
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If the monomial is a pure power `x_i^e` with `e > 0`, returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// A monomial order on exponent vectors. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the rest.
    /// Eliminates the first `k` variables.
    BlockElimination(usize),
    /// Grevlex on the fibre variables (index 2 onwards), ties broken by
    /// grevlex on the base variables `t0, t1`. Keeps bases of bigraded
    /// ideals on scrolls small.
    FibreFirst,
    /// Weighted degree first (positive weights), ties broken by grevlex.
    WeightedGrevlex(Weights),
}

/// Positive integer weights for [`MonomialOrder::WeightedGrevlex`]; unused
/// trailing entries are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weights(pub [u16; MAX_VARS]);

impl Weights {
    pub fn new(w: &[u16]) -> Self {
        assert!(w.len() <= MAX_VARS && w.iter().all(|&x| x > 0), "weights must be positive");
        let mut a = [1; MAX_VARS];
        a[..w.len()].copy_from_slice(w);
        Weights(a)
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.exps.iter().zip(self.0.iter()).map(|(&e, &w)| e as u32 * w as u32).sum()
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::BlockElimination(k) => grevlex(&a.exps[..*k], &b.exps[..*k])
                .then_with(|| grevlex(&a.exps[*k..], &b.exps[*k..])),
            MonomialOrder::FibreFirst => {
                grevlex(&a.exps[2..], &b.exps[2..]).then_with(|| grevlex(&a.exps[..2], &b.exps[..2]))
            }
            MonomialOrder::WeightedGrevlex(w) => w.degree(a).cmp(&w.degree(b)).then_with(|| grevlex(&a.exps, &b.exps)),
        }
    }

    /// Degree used for the sugar of S-pairs: the weighted degree for
    /// weighted orders, the total degree otherwise.
    pub fn sugar_degree(&self, m: &Monomial) -> u32 {
        match self {
            MonomialOrder::WeightedGrevlex(w) => w.degree(m),
            _ => m.degree(),
        }
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x0 > x1 > x2
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // x0*x2 < x1^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn block_elimination() {
        let o = MonomialOrder::BlockElimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn fibre_first() {
        let o = MonomialOrder::FibreFirst;
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree_dominates() {
        let o = MonomialOrder::WeightedGrevlex(Weights::new(&[1, 3]));
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
        // equal weighted degree falls back to grevlex
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.sugar_degree(&m(&[1, 1])), 4);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert!(!m(&[2, 0, 0]).divides(&m(&[1, 1, 2])));
        assert_eq!(m(&[1, 0, 2]).quotient_of(&m(&[1, 1, 2])), m(&[0, 1, 0]));
        assert_eq!(m(&[0, 3]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 3]).pure_power_var(), None);
    }
}
