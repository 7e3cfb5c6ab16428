//! Multivariate polynomials over Z₂ in the Boolean quotient ring.
//!
//! Every variable satisfies `v² = v`, so monomials are squarefree and are
//! stored as bitmasks over a [`VarRegistry`]. Slot `p` of the registry lives
//! at bit `63 - p`, which makes plain integer comparison of two monomials
//! agree with the lexicographic order induced by the registration sequence.
//! A polynomial is the XOR-set of its monomials, kept sorted descending.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum number of variables one registry can hold.
pub const MAX_VARS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    /// Path variable `x<i>`, one per Hadamard gate.
    Path,
    /// Input bit `a<i>`.
    InputParam,
    /// Output bit `b<i>`.
    OutputParam,
}

impl VarKind {
    fn prefix(self) -> char {
        match self {
            VarKind::Path => 'x',
            VarKind::InputParam => 'a',
            VarKind::OutputParam => 'b',
        }
    }
}

/// An indexed variable. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub kind: VarKind,
    pub index: u32,
}

impl Var {
    pub const fn path(index: u32) -> Var {
        Var { kind: VarKind::Path, index }
    }

    pub const fn input(index: u32) -> Var {
        Var { kind: VarKind::InputParam, index }
    }

    pub const fn output(index: u32) -> Var {
        Var { kind: VarKind::OutputParam, index }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('x') => VarKind::Path,
            Some('a') => VarKind::InputParam,
            Some('b') => VarKind::OutputParam,
            _ => return Err(Error::UnknownVariable(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(Error::UnknownVariable(s.to_string()));
        }
        let index = digits
            .parse()
            .map_err(|_| Error::UnknownVariable(s.to_string()))?;
        Ok(Var { kind, index })
    }
}

#[inline]
fn slot_bit(slot: usize) -> u64 {
    1u64 << (63 - slot)
}

/// A squarefree monomial; the empty set of variables is the constant `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_bits(bits: u64) -> Monomial {
        Monomial(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    /// Registry slots of the variables in this monomial, highest-ranked first.
    pub fn slots(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let slot = rest.leading_zeros() as usize;
            rest &= !slot_bit(slot);
            Some(slot)
        })
    }

    /// Single-variable factors of this monomial.
    pub fn variables(self) -> impl Iterator<Item = Monomial> {
        self.slots().map(|s| Monomial(slot_bit(s)))
    }
}

/// Product in the Boolean ring, which is also the lcm.
impl Mul for Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }
}

/// Quotient `self / other`; only meaningful when `other` divides `self`.
impl Div for Monomial {
    type Output = Monomial;

    fn div(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }
}

/// Polynomial over Z₂ in the Boolean ring: a set of distinct monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    // strictly descending
    terms: Vec<Monomial>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Poly {
        Poly { terms: vec![m] }
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Poly {
        let mut terms: Vec<Monomial> = terms.into_iter().collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Vec::with_capacity(terms.len());
        let mut i = 0;
        while i < terms.len() {
            let mut j = i + 1;
            while j < terms.len() && terms[j] == terms[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                out.push(terms[i]);
            }
            i = j;
        }
        Poly { terms: out }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<Monomial>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0] > w[1]));
        Poly { terms }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)] // emptiness is `is_zero`
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    /// Leading monomial under the registry's own lexicographic order.
    pub fn lead(&self) -> Option<Monomial> {
        self.terms.first().copied()
    }

    /// All variables occurring in the polynomial, as one monomial.
    pub fn support(&self) -> Monomial {
        Monomial(self.terms.iter().fold(0, |acc, t| acc | t.0))
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly::from_terms(self.terms.iter().map(|t| *t * m))
    }

    /// Value at the point whose true variables are the bits of `point`.
    pub fn eval_bits(&self, point: u64) -> bool {
        self.terms.iter().filter(|t| t.0 & !point == 0).count() % 2 == 1
    }

    /// Maximal monomial under `order`.
    pub fn leading_monomial(&self, order: &TermOrder, registry: &VarRegistry) -> Result<Monomial> {
        let map = order.compile(registry)?;
        self.terms
            .iter()
            .copied()
            .max_by_key(|&t| map.forward(t))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Value at a point given by variable bindings.
    pub fn evaluate(&self, point: &BTreeMap<Var, bool>, registry: &VarRegistry) -> Result<bool> {
        let mut bits = 0u64;
        for slot in self.support().slots() {
            let var = registry.var_at(slot);
            match point.get(&var) {
                Some(true) => bits |= slot_bit(slot),
                Some(false) => {}
                None => return Err(Error::UnboundVariable(var.to_string())),
            }
        }
        Ok(self.eval_bits(bits))
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// Bindings may refer to other bound variables as long as the dependency
    /// graph has no cycle; the substitution itself is simultaneous.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly>, registry: &VarRegistry) -> Result<Poly> {
        let mut by_slot: Vec<Option<&Poly>> = vec![None; registry.len()];
        let mut bound = 0u64;
        for (var, value) in bindings {
            let slot = registry
                .slot(*var)
                .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
            by_slot[slot] = Some(value);
            bound |= slot_bit(slot);
        }
        check_acyclic(&by_slot, bound, registry)?;

        let mut out = Vec::new();
        for &term in &self.terms {
            let free = Monomial(term.0 & !bound);
            let mut acc = Poly::monomial(free);
            for slot in Monomial(term.0 & bound).slots() {
                acc = &acc * by_slot[slot].expect("bound slot has a value");
                if acc.is_zero() {
                    break;
                }
            }
            out.extend(acc.terms);
        }
        Ok(Poly::from_terms(out))
    }
}

fn check_acyclic(by_slot: &[Option<&Poly>], bound: u64, registry: &VarRegistry) -> Result<()> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; by_slot.len()];
    fn visit(
        slot: usize,
        by_slot: &[Option<&Poly>],
        bound: u64,
        state: &mut [u8],
        registry: &VarRegistry,
    ) -> Result<()> {
        match state[slot] {
            1 => return Err(Error::CyclicBinding(registry.var_at(slot).to_string())),
            2 => return Ok(()),
            _ => {}
        }
        state[slot] = 1;
        if let Some(value) = by_slot[slot] {
            for dep in Monomial(value.support().0 & bound).slots() {
                visit(dep, by_slot, bound, state, registry)?;
            }
        }
        state[slot] = 2;
        Ok(())
    }
    for slot in Monomial(bound).slots() {
        visit(slot, by_slot, bound, &mut state, registry)?;
    }
    Ok(())
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.len() * rhs.len());
        for &s in &self.terms {
            for &t in &rhs.terms {
                out.push(s * t);
            }
        }
        Poly::from_terms(out)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// The set of variables a family of polynomials is written over, in
/// registration order. The registration order is the default variable
/// sequence for term orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarRegistry {
    vars: Vec<Var>,
    slots: HashMap<Var, usize>,
}

impl VarRegistry {
    pub fn new<I: IntoIterator<Item = Var>>(vars: I) -> Result<VarRegistry> {
        let vars: Vec<Var> = vars.into_iter().collect();
        if vars.len() > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "number of variables",
                limit: MAX_VARS,
                actual: vars.len(),
            });
        }
        let mut slots = HashMap::with_capacity(vars.len());
        for (slot, var) in vars.iter().enumerate() {
            if var.index == 0 {
                return Err(Error::InvalidArgument(format!("variable index must be positive: {var}")));
            }
            if slots.insert(*var, slot).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate variable {var}")));
            }
        }
        Ok(VarRegistry { vars, slots })
    }

    /// `x1..xh, a1..an, b1..bn`, in that order.
    pub fn standard(paths: usize, qubits: usize) -> Result<VarRegistry> {
        let total = paths + 2 * qubits;
        if total > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "number of variables",
                limit: MAX_VARS,
                actual: total,
            });
        }
        let x = (1..=paths as u32).map(Var::path);
        let a = (1..=qubits as u32).map(Var::input);
        let b = (1..=qubits as u32).map(Var::output);
        VarRegistry::new(x.chain(a).chain(b))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn slot(&self, var: Var) -> Option<usize> {
        self.slots.get(&var).copied()
    }

    pub fn var_at(&self, slot: usize) -> Var {
        self.vars[slot]
    }

    pub fn monomial_of(&self, var: Var) -> Result<Monomial> {
        self.slot(var)
            .map(|s| Monomial(slot_bit(s)))
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    pub fn monomial(&self, vars: &[Var]) -> Result<Monomial> {
        vars.iter()
            .try_fold(Monomial::ONE, |acc, &v| Ok(acc * self.monomial_of(v)?))
    }

    pub fn poly_var(&self, var: Var) -> Result<Poly> {
        Ok(Poly::monomial(self.monomial_of(var)?))
    }

    /// Monomial holding every registered variable of the given kind.
    pub fn kind_mask(&self, kind: VarKind) -> Monomial {
        Monomial(
            self.vars
                .iter()
                .enumerate()
                .filter(|(_, v)| v.kind == kind)
                .fold(0, |acc, (s, _)| acc | slot_bit(s)),
        )
    }

    pub fn vars_of(&self, m: Monomial) -> Vec<Var> {
        m.slots().map(|s| self.vars[s]).collect()
    }

    pub fn display<'a>(&'a self, poly: &'a Poly) -> PolyDisplay<'a> {
        PolyDisplay {
            registry: self,
            terms: poly.terms.clone(),
            mult: "*",
        }
    }

    /// Parses the display syntax, e.g. `x1*x2*x4 + x3 + 1`. `⊕` is accepted
    /// in place of `+`.
    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        PolyParser::new(text, self).parse()
    }
}

/// Renders a polynomial in display syntax. Terms appear in the stored order
/// unless [`PolyDisplay::ordered`] is used.
pub struct PolyDisplay<'a> {
    registry: &'a VarRegistry,
    terms: Vec<Monomial>,
    mult: &'static str,
}

impl<'a> PolyDisplay<'a> {
    /// Orders terms descending under `order` instead of the registry order.
    pub fn ordered(mut self, order: &OrderMap) -> Self {
        self.terms.sort_unstable_by_key(|&t| std::cmp::Reverse(order.forward(t)));
        self
    }

    /// Uses a different multiplication token.
    pub fn with_mult(mut self, mult: &'static str) -> Self {
        self.mult = mult;
        self
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if term.is_one() {
                f.write_str("1")?;
                continue;
            }
            for (k, slot) in term.slots().enumerate() {
                if k > 0 {
                    f.write_str(self.mult)?;
                }
                write!(f, "{}", self.registry.var_at(slot))?;
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    chars: Vec<char>,
    pos: usize,
    registry: &'a VarRegistry,
}

impl<'a> PolyParser<'a> {
    fn new(text: &str, registry: &'a VarRegistry) -> Self {
        PolyParser {
            chars: text.chars().collect(),
            pos: 0,
            registry,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: 1,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn parse(mut self) -> Result<Poly> {
        let mut terms = Vec::new();
        loop {
            if let Some(t) = self.term()? {
                terms.push(t);
            }
            self.skip_ws();
            match self.chars.get(self.pos) {
                None => break,
                Some('+') | Some('⊕') => self.pos += 1,
                Some(c) => return Err(self.error(format!("expected `+` or end of input, found `{c}`"))),
            }
        }
        Ok(Poly::from_terms(terms))
    }

    // None means the term is zero
    fn term(&mut self) -> Result<Option<Monomial>> {
        let mut m = Some(Monomial::ONE);
        loop {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a variable or constant"));
            }
            let word: String = self.chars[start..self.pos].iter().collect();
            match word.as_str() {
                "1" => {}
                "0" => m = None,
                _ => {
                    let var: Var = word.parse()?;
                    let v = self.registry.monomial_of(var)?;
                    m = m.map(|m| m * v);
                }
            }
            self.skip_ws();
            if self.chars.get(self.pos) == Some(&'*') {
                self.pos += 1;
            } else {
                return Ok(m);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Lexicographic in the variable sequence.
    Lex,
    /// Any monomial with a path variable beats every parameter-only
    /// monomial; lexicographic within each block.
    BlockElimLex,
}

/// A term order: a kind plus a variable sequence. Without an explicit
/// sequence the registry's registration order is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub sequence: Option<Vec<Var>>,
}

impl TermOrder {
    pub fn lex() -> TermOrder {
        TermOrder {
            kind: OrderKind::Lex,
            sequence: None,
        }
    }

    pub fn block_elim() -> TermOrder {
        TermOrder {
            kind: OrderKind::BlockElimLex,
            sequence: None,
        }
    }

    /// Variables listed here rank first, in this order; the rest follow in
    /// registration order.
    pub fn with_sequence(mut self, sequence: Vec<Var>) -> TermOrder {
        self.sequence = Some(sequence);
        self
    }

    pub fn compile(&self, registry: &VarRegistry) -> Result<OrderMap> {
        let n = registry.len();
        let mut ranked: Vec<usize> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        if let Some(seq) = &self.sequence {
            for var in seq {
                let slot = registry
                    .slot(*var)
                    .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
                if std::mem::replace(&mut seen[slot], true) {
                    return Err(Error::InvalidArgument(format!("{var} repeated in variable sequence")));
                }
                ranked.push(slot);
            }
        }
        ranked.extend((0..n).filter(|&s| !seen[s]));
        if self.kind == OrderKind::BlockElimLex {
            let (mut paths, rest): (Vec<usize>, Vec<usize>) = ranked
                .into_iter()
                .partition(|&s| registry.var_at(s).kind == VarKind::Path);
            paths.extend(rest);
            ranked = paths;
        }
        Ok(OrderMap::from_ranking(&ranked))
    }
}

/// A compiled term order: a bit permutation that maps monomials into a key
/// space where integer comparison is the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMap {
    // forward[slot] = key bit, backward[rank] = slot bit
    forward: Vec<u64>,
    backward: Vec<u64>,
    identity: bool,
}

impl OrderMap {
    fn from_ranking(ranked: &[usize]) -> OrderMap {
        let mut forward = vec![0u64; ranked.len()];
        let mut backward = vec![0u64; ranked.len()];
        for (rank, &slot) in ranked.iter().enumerate() {
            forward[slot] = slot_bit(rank);
            backward[rank] = slot_bit(slot);
        }
        let identity = ranked.iter().enumerate().all(|(r, &s)| r == s);
        OrderMap {
            forward,
            backward,
            identity,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.identity
    }

    pub fn forward(&self, m: Monomial) -> Monomial {
        if self.identity {
            return m;
        }
        Monomial(m.slots().fold(0, |acc, s| acc | self.forward[s]))
    }

    pub fn backward(&self, m: Monomial) -> Monomial {
        if self.identity {
            return m;
        }
        Monomial(m.slots().fold(0, |acc, r| acc | self.backward[r]))
    }

    pub fn cmp(&self, a: Monomial, b: Monomial) -> std::cmp::Ordering {
        self.forward(a).cmp(&self.forward(b))
    }

    pub fn forward_poly(&self, p: &Poly) -> Poly {
        if self.identity {
            return p.clone();
        }
        Poly::from_terms(p.terms.iter().map(|&t| self.forward(t)))
    }

    pub fn backward_poly(&self, p: &Poly) -> Poly {
        if self.identity {
            return p.clone();
        }
        Poly::from_terms(p.terms.iter().map(|&t| self.backward(t)))
    }
}
