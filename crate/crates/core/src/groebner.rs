//! Gröbner bases in the Boolean ring `Z₂[v]/(v² + v)`.
//!
//! All work happens in the key space of the term order (see
//! [`OrderMap`]), where integer comparison of monomials is the order. The
//! field equations are never stored: for a generator `g` and a variable `v`
//! of its leading monomial the pair `v·g + g` is reduced alongside ordinary
//! S-polynomials.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2::{Monomial, OrderMap, Poly, TermOrder, Var, VarKind, VarRegistry};

/// Largest variable set [`GroebnerBasis::count_roots`] will enumerate.
pub const MAX_COUNT_VARS: usize = 20;

/// A reduced Gröbner basis, generators sorted by leading monomial, largest
/// first.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    generators: Vec<Poly>,
    // same generators in key space
    keyed: Vec<Poly>,
    order: TermOrder,
    map: OrderMap,
    registry: Arc<VarRegistry>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.order == other.order && self.registry == other.registry
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn order_map(&self) -> &OrderMap {
        &self.map
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    /// True when the ideal is the whole ring (no common roots).
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.keyed
            .iter()
            .map(|g| self.map.backward(g.lead().expect("generators are nonzero")))
            .collect()
    }

    /// Variables occurring anywhere in the basis.
    pub fn support(&self) -> Monomial {
        self.generators
            .iter()
            .fold(Monomial::ONE, |acc, g| acc * g.support())
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.map.backward_poly(&reduce(&self.map.forward_poly(p), &self.keyed))
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Generators free of path variables: conditions on the parameters alone.
    pub fn parameter_conditions(&self) -> Vec<&Poly> {
        let paths = self.registry.kind_mask(VarKind::Path);
        self.generators
            .iter()
            .filter(|g| g.support().is_coprime(paths))
            .collect()
    }

    /// Number of S-polynomials (ordinary and field pairs, without any
    /// pruning criterion) whose normal form is nonzero. Zero for a
    /// Gröbner basis.
    pub fn criterion_violations(&self) -> usize {
        let g = &self.keyed;
        let mut bad = 0;
        for i in 0..g.len() {
            for j in 0..i {
                if !reduce(&s_polynomial(&g[i], &g[j]), g).is_zero() {
                    bad += 1;
                }
            }
            for v in g[i].lead().expect("nonzero").variables() {
                if !reduce(&field_polynomial(&g[i], v), g).is_zero() {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Number of common roots over Z₂ of a basis written over `vars`: the
    /// count of squarefree monomials in `vars` divisible by no leading
    /// monomial.
    pub fn count_roots(&self, vars: &[Var]) -> Result<u64> {
        if vars.len() > MAX_COUNT_VARS {
            return Err(Error::CapExceeded {
                what: "number of variables to count over",
                limit: MAX_COUNT_VARS,
                actual: vars.len(),
            });
        }
        let mask = self.registry.monomial(vars)?;
        if !self.support().divides(mask) {
            let extra = self.registry.vars_of(self.support() / mask);
            return Err(Error::InvalidArgument(format!(
                "basis mentions variables outside the counting set: {}",
                extra.iter().map(Var::to_string).collect::<Vec<_>>().join(", ")
            )));
        }
        let leads = self.leading_monomials();
        let mask = mask.bits();
        let mut count = 0u64;
        let mut sub = mask;
        loop {
            let m = Monomial::from_bits(sub);
            if !leads.iter().any(|l| l.divides(m)) {
                count += 1;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        Ok(count)
    }
}

/// Full reduction of `p` by `basis` (both in key space).
fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    if basis.is_empty() || p.is_zero() {
        return p.clone();
    }
    let leads: Vec<Monomial> = basis.iter().map(|g| g.lead().expect("nonzero")).collect();
    let mut work: BTreeSet<Monomial> = p.terms().iter().copied().collect();
    let mut rest = Vec::new();
    while let Some(&t) = work.last() {
        match leads.iter().position(|l| l.divides(t)) {
            Some(k) => {
                let u = t / leads[k];
                for &s in basis[k].terms() {
                    let st = s * u;
                    if !work.remove(&st) {
                        work.insert(st);
                    }
                }
            }
            None => {
                work.remove(&t);
                rest.push(t);
            }
        }
    }
    Poly::from_sorted_unchecked(rest)
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (lf, lg) = (f.lead().expect("nonzero"), g.lead().expect("nonzero"));
    let lcm = lf * lg;
    &f.mul_monomial(lcm / lf) + &g.mul_monomial(lcm / lg)
}

/// `v·g + g` for a variable `v` of the leading monomial: the S-polynomial
/// of `g` with the field equation `v² + v`, up to a multiple of `g`.
fn field_polynomial(g: &Poly, v: Monomial) -> Poly {
    &g.mul_monomial(v) + g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Pair {
    Field(usize, Monomial),
    Standard(usize, usize),
}

struct Engine {
    basis: Vec<Poly>,
    queue: BinaryHeap<Reverse<(Monomial, Pair)>>,
}

impl Engine {
    /// Returns false once the unit polynomial has been added.
    fn add(&mut self, g: Poly) -> bool {
        if g.is_one() {
            self.basis = vec![g];
            return false;
        }
        let lead = g.lead().expect("nonzero");
        let i = self.basis.len();
        for (j, other) in self.basis.iter().enumerate() {
            let other_lead = other.lead().expect("nonzero");
            // coprime leading monomials: the pair reduces to zero
            if !lead.is_coprime(other_lead) {
                self.queue.push(Reverse((lead * other_lead, Pair::Standard(i, j))));
            }
        }
        for v in lead.variables() {
            self.queue.push(Reverse((lead, Pair::Field(i, v))));
        }
        self.basis.push(g);
        true
    }

    fn run(mut self, input: Vec<Poly>) -> Vec<Poly> {
        for f in input {
            let r = reduce(&f, &self.basis);
            if !r.is_zero() && !self.add(r) {
                return self.basis;
            }
        }
        while let Some(Reverse((_, pair))) = self.queue.pop() {
            let s = match pair {
                Pair::Standard(i, j) => s_polynomial(&self.basis[i], &self.basis[j]),
                Pair::Field(i, v) => field_polynomial(&self.basis[i], v),
            };
            let r = reduce(&s, &self.basis);
            if !r.is_zero() && !self.add(r) {
                return self.basis;
            }
        }
        self.basis
    }
}

/// Minimizes and interreduces a Gröbner basis in key space.
fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    if basis.iter().any(Poly::is_one) {
        return vec![Poly::one()];
    }
    basis.sort_by_key(|g| g.lead());
    let mut minimal: Vec<Poly> = Vec::with_capacity(basis.len());
    for g in basis {
        let lead = g.lead().expect("nonzero");
        if !minimal.iter().any(|m| m.lead().expect("nonzero").divides(lead)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            reduce(&minimal[i], &others)
        })
        .collect();
    reduced.sort_by_key(|g| Reverse(g.lead()));
    reduced
}

/// Reduced Gröbner basis of `⟨F⟩ + ⟨v² + v⟩` under `order`. Zero inputs are
/// ignored; an empty or all-zero input gives the empty basis.
pub fn buchberger(system: &[Poly], order: &TermOrder, registry: &Arc<VarRegistry>) -> Result<GroebnerBasis> {
    let map = order.compile(registry)?;
    let input: Vec<Poly> = system
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| map.forward_poly(f))
        .collect();
    let engine = Engine {
        basis: Vec::new(),
        queue: BinaryHeap::new(),
    };
    let keyed = reduce_basis(engine.run(input));
    let generators = keyed.iter().map(|g| map.backward_poly(g)).collect();
    Ok(GroebnerBasis {
        generators,
        keyed,
        order: order.clone(),
        map,
        registry: Arc::clone(registry),
    })
}

/// Full reduction of `p` by an arbitrary list of polynomials under `order`.
/// The result only depends on `basis` as a set when it is a Gröbner basis.
pub fn normal_form(p: &Poly, basis: &[Poly], order: &TermOrder, registry: &VarRegistry) -> Result<Poly> {
    let map = order.compile(registry)?;
    let keyed: Vec<Poly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| map.forward_poly(g))
        .collect();
    Ok(map.backward_poly(&reduce(&map.forward_poly(p), &keyed)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Arc<VarRegistry> {
        Arc::new(VarRegistry::standard(4, 3).unwrap())
    }

    fn polys(r: &VarRegistry, texts: &[&str]) -> Vec<Poly> {
        texts.iter().map(|t| r.parse_poly(t).unwrap()).collect()
    }

    fn shown(gb: &GroebnerBasis) -> Vec<String> {
        gb.generators()
            .iter()
            .map(|g| gb.registry().display(g).ordered(gb.order_map()).to_string())
            .collect()
    }

    #[test]
    fn normal_form_substitutes() {
        let r = reg();
        let p = r.parse_poly("x1*x2 + 1").unwrap();
        let nf = normal_form(&p, &polys(&r, &["x1 + 1"]), &TermOrder::lex(), &r).unwrap();
        assert_eq!(nf, r.parse_poly("x2 + 1").unwrap());
    }

    #[test]
    fn product_equal_one() {
        let r = reg();
        let gb = buchberger(&polys(&r, &["x1*x2 + 1"]), &TermOrder::lex(), &r).unwrap();
        assert_eq!(shown(&gb), ["x1 + 1", "x2 + 1"]);
        assert_eq!(gb.count_roots(&[Var::path(1), Var::path(2)]).unwrap(), 1);
    }

    #[test]
    fn inconsistent_systems() {
        let r = reg();
        let gb = buchberger(&[Poly::one()], &TermOrder::lex(), &r).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.count_roots(&[]).unwrap(), 0);
        let gb = buchberger(&polys(&r, &["x1", "x1 + 1"]), &TermOrder::lex(), &r).unwrap();
        assert!(gb.is_unit());
        // x1*x2 = 1 forces x1 = 1
        let gb = buchberger(&polys(&r, &["x1*x2 + 1", "x1"]), &TermOrder::lex(), &r).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn counting() {
        let r = reg();
        let x: Vec<Var> = (1..=4).map(Var::path).collect();
        let gb = buchberger(&polys(&r, &["x2", "x3", "x4"]), &TermOrder::lex(), &r).unwrap();
        assert_eq!(gb.count_roots(&x).unwrap(), 2);
        let empty = buchberger(&[], &TermOrder::lex(), &r).unwrap();
        assert_eq!(empty.count_roots(&x[..2]).unwrap(), 4);
        let too_many: Vec<Var> = (1..=21).map(Var::path).collect();
        assert!(matches!(empty.count_roots(&too_many), Err(Error::CapExceeded { .. })));
        assert!(matches!(gb.count_roots(&x[..2]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn field_pairs_are_needed() {
        let r = reg();
        let gb = buchberger(&polys(&r, &["x1*x2 + x1 + x2 + 1"]), &TermOrder::lex(), &r).unwrap();
        // (x1+1)(x2+1) = 0: x1 = 1 or x2 = 1
        assert_eq!(gb.count_roots(&[Var::path(1), Var::path(2)]).unwrap(), 3);
        assert_eq!(gb.criterion_violations(), 0);
        // x1*x2 + x1*x3 has LM x1*x2 but x2 * (x1*x3) escapes above it
        let gb = buchberger(&polys(&r, &["x1*x2 + x1*x3"]), &TermOrder::lex(), &r).unwrap();
        assert_eq!(gb.criterion_violations(), 0);
        let vars: Vec<Var> = (1..=3).map(Var::path).collect();
        assert_eq!(gb.count_roots(&vars).unwrap(), 6);
    }

    #[test]
    fn idempotent() {
        let r = reg();
        let gb = buchberger(
            &polys(&r, &["x1*x2 + x3", "x2*x3 + x1 + 1", "x3*x4 + x2"]),
            &TermOrder::lex(),
            &r,
        )
        .unwrap();
        let again = buchberger(gb.generators(), &TermOrder::lex(), &r).unwrap();
        assert_eq!(gb, again);
    }
}
