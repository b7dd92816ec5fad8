//! Exact arithmetic in GF(p^n) for any prime p with q = p^n <= 2^22.
//!
//! Elements are canonically encoded as base-p integers, little-endian in the
//! polynomial basis: the element sum c_i x^i has encoding sum c_i p^i. A
//! context owns discrete-log/antilog tables (eager for q <= 2^16, built on
//! demand above that) plus digit-split addition tables, so the q^2 and q^3
//! sweep loops run on plain array lookups.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::smallpoly;

/// Hard cap on field size; sweeps and tables above this are out of scope.
pub const MAX_Q: u64 = 1 << 22;
/// Log/antilog and addition tables are built at construction up to this size.
pub const EAGER_TABLE_LIMIT: u64 = 1 << 16;

static NEXT_CTX_ID: AtomicU64 = AtomicU64::new(1);

/// An element of a specific [`FieldCtx`], identified by its integer encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    ctx_id: u64,
    idx: u32,
}

impl FieldElement {
    /// The canonical base-p integer encoding.
    pub fn encoding(self) -> u64 {
        self.idx as u64
    }

    pub fn is_zero(self) -> bool {
        self.idx == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "el({})", self.idx)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.idx)
    }
}

struct FastTables {
    /// log[x] for x != 0; log[0] is a sentinel and never read.
    log: Vec<u32>,
    /// antilog[k] = g^k for k in 0..2(q-1), doubled so sums of two logs index directly.
    antilog: Vec<u32>,
    neg: Vec<u32>,
    /// Addition splits the encoding at p^half; these tables are indexed by
    /// (lo(x) * lo_size + lo(y)) and (hi(x) * hi_size + hi(y)).
    lo_size: u32,
    hi_size: u32,
    add_lo: Vec<u32>,
    add_hi: Vec<u32>, // already multiplied back by p^half
}

pub(crate) struct QuadExt {
    pub(crate) ext: FieldCtx,
    /// embed[x] maps a base-field encoding to its image in the extension.
    pub(crate) embed: Vec<u32>,
    /// Inverse of `embed`, defined on the embedded subfield only.
    back: std::collections::HashMap<u32, u32>,
}

impl QuadExt {
    pub(crate) fn lift(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        let idx = ctx.chk(x);
        self.ext.element_unchecked(self.embed[idx as usize])
    }

    /// Pulls an extension element back to the base field if it lies in the
    /// embedded copy.
    pub(crate) fn lower(&self, ctx: &FieldCtx, y: FieldElement) -> Option<FieldElement> {
        let idx = self.ext.chk(y);
        self.back.get(&idx).map(|&i| ctx.element_unchecked(i))
    }
}

/// Immutable description of GF(p^n): characteristic, degree, verified
/// irreducible modulus, a fixed multiplicative generator and the lookup
/// tables. Safe to share across threads; all operations are pure.
pub struct FieldCtx {
    id: u64,
    p: u64,
    n: usize,
    q: u64,
    /// Monic modulus, ascending degree, length n+1.
    modulus: Vec<u64>,
    generator: u32,
    /// p^i for i in 0..=n.
    p_pows: Vec<u64>,
    tables: OnceLock<FastTables>,
    quad_ext: OnceLock<std::result::Result<Box<QuadExt>, Error>>,
}

/// Builds GF(p^n). When `modulus` is omitted the smallest-encoding monic
/// irreducible of degree n is selected, so element encodings are reproducible
/// across runs. An explicit modulus (ascending coefficients, length n+1,
/// monic) is accepted for cross-checking against externally fixed
/// representations.
pub fn mk_field(p: u64, n: usize, modulus: Option<&[u64]>) -> Result<FieldCtx> {
    FieldCtx::create(p, n, modulus)
}

impl FieldCtx {
    pub fn new(p: u64, n: usize) -> Result<FieldCtx> {
        Self::create(p, n, None)
    }

    pub fn with_modulus(p: u64, n: usize, modulus: &[u64]) -> Result<FieldCtx> {
        Self::create(p, n, Some(modulus))
    }

    fn create(p: u64, n: usize, modulus: Option<&[u64]>) -> Result<FieldCtx> {
        if !smallpoly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: 0,
            });
        }
        let mut q: u64 = 1;
        for _ in 0..n {
            q = q.saturating_mul(p);
            if q > MAX_Q {
                return Err(Error::FieldTooLarge { q });
            }
        }

        let modulus = match modulus {
            Some(m) => {
                let mut m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                smallpoly::normalize(&mut m);
                if smallpoly::degree(&m) != Some(n) || m[n] != 1 {
                    return Err(Error::DegreeMismatch {
                        expected: n,
                        got: smallpoly::degree(&m).map_or(0, |d| d),
                    });
                }
                if !smallpoly::is_irreducible(p, &m) {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => smallpoly::smallest_irreducible(p, n),
        };

        let p_pows: Vec<u64> = (0..=n).scan(1u64, |acc, _| {
            let v = *acc;
            *acc *= p;
            Some(v)
        })
        .collect();

        let mut ctx = FieldCtx {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            p,
            n,
            q,
            modulus,
            generator: 0,
            p_pows,
            tables: OnceLock::new(),
            quad_ext: OnceLock::new(),
        };
        ctx.generator = ctx.find_generator();
        if q <= EAGER_TABLE_LIMIT {
            ctx.tables();
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus coefficients, ascending degree (length n+1).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.element_unchecked(self.generator)
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.get().is_some()
    }

    pub fn zero(&self) -> FieldElement {
        self.element_unchecked(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element_unchecked(1)
    }

    /// The element with the given canonical encoding.
    pub fn el(&self, encoding: u64) -> Result<FieldElement> {
        if encoding >= self.q {
            return Err(Error::OutOfRange {
                encoding,
                q: self.q,
            });
        }
        Ok(self.element_unchecked(encoding as u32))
    }

    /// An element of the prime subfield from a residue mod p.
    pub fn from_residue(&self, r: u64) -> FieldElement {
        self.element_unchecked((r % self.p) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as u32).map(move |i| self.element_unchecked(i))
    }

    pub fn owns(&self, x: FieldElement) -> bool {
        x.ctx_id == self.id
    }

    /// Boundary check used where elements cross API edges (deserialization,
    /// function specs built from another context).
    pub fn ensure_owns(&self, x: FieldElement) -> Result<()> {
        if self.owns(x) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub(crate) fn element_unchecked(&self, idx: u32) -> FieldElement {
        debug_assert!((idx as u64) < self.q);
        FieldElement {
            ctx_id: self.id,
            idx,
        }
    }

    #[inline]
    pub(crate) fn chk(&self, x: FieldElement) -> u32 {
        assert_eq!(
            x.ctx_id, self.id,
            "field elements used with a foreign context"
        );
        x.idx
    }

    // ---- digit helpers (encoding <-> coefficient vector) ----

    pub fn digits(&self, x: FieldElement) -> Vec<u64> {
        let idx = self.chk(x);
        smallpoly::digits_le(self.p, idx as u64, self.n)
    }

    pub(crate) fn idx_digits(&self, idx: u32) -> Vec<u64> {
        smallpoly::digits_le(self.p, idx as u64, self.n)
    }

    pub(crate) fn from_digits(&self, digits: &[u64]) -> u32 {
        let mut v = 0u64;
        for (i, &d) in digits.iter().enumerate() {
            debug_assert!(d < self.p);
            if i < self.n {
                v += d * self.p_pows[i];
            } else {
                debug_assert_eq!(d, 0);
            }
        }
        v as u32
    }

    // ---- table-free arithmetic on raw encodings ----

    pub(crate) fn add_idx_slow(&self, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        let mut v = 0u64;
        let (mut a, mut b) = (x as u64, y as u64);
        for &pw in &self.p_pows[..self.n] {
            let s = (a % self.p + b % self.p) % self.p;
            v += s * pw;
            a /= self.p;
            b /= self.p;
        }
        v as u32
    }

    pub(crate) fn neg_idx_slow(&self, x: u32) -> u32 {
        if self.p == 2 {
            return x;
        }
        let mut v = 0u64;
        let mut a = x as u64;
        for &pw in &self.p_pows[..self.n] {
            let d = a % self.p;
            if d != 0 {
                v += (self.p - d) * pw;
            }
            a /= self.p;
        }
        v as u32
    }

    pub(crate) fn mul_idx_slow(&self, x: u32, y: u32) -> u32 {
        let a = self.idx_digits(x);
        let b = self.idx_digits(y);
        let prod = smallpoly::mul(self.p, &a, &b);
        let red = smallpoly::rem_monic(self.p, &prod, &self.modulus);
        self.from_digits(&red)
    }

    fn pow_idx_slow(&self, x: u32, mut e: u64) -> u32 {
        let mut base = x;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx_slow(acc, base);
            }
            base = self.mul_idx_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> u32 {
        let group = self.q - 1;
        let primes = smallpoly::prime_factors(group);
        'cand: for idx in 1..self.q as u32 {
            for &r in &primes {
                if self.pow_idx_slow(idx, group / r) == 1 {
                    continue 'cand;
                }
            }
            debug_assert_eq!(self.pow_idx_slow(idx, group), 1);
            return idx;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    // ---- fast tables ----

    fn tables(&self) -> &FastTables {
        self.tables.get_or_init(|| {
            let q = self.q as usize;
            let group = q - 1;
            let mut log = vec![0u32; q];
            let mut antilog = vec![0u32; 2 * group.max(1)];
            let mut cur = 1u32;
            for k in 0..group {
                log[cur as usize] = k as u32;
                antilog[k] = cur;
                cur = self.mul_idx_slow(cur, self.generator);
            }
            debug_assert_eq!(cur, 1, "generator order must be q - 1");
            for k in 0..group {
                antilog[group + k] = antilog[k];
            }

            let mut neg = vec![0u32; q];
            for (i, o) in neg.iter_mut().enumerate() {
                *o = self.neg_idx_slow(i as u32);
            }

            let half = self.n.div_ceil(2);
            let lo_size = self.p_pows[half] as u32;
            let hi_size = (self.q / self.p_pows[half]) as u32;
            let mut add_lo = vec![0u32; (lo_size as usize) * (lo_size as usize)];
            for i in 0..lo_size {
                for j in 0..lo_size {
                    // digit-wise mod-p addition of two low fragments
                    let mut v = 0u64;
                    let (mut a, mut b) = (i as u64, j as u64);
                    for &pw in &self.p_pows[..half] {
                        v += ((a % self.p + b % self.p) % self.p) * pw;
                        a /= self.p;
                        b /= self.p;
                    }
                    add_lo[(i as usize) * (lo_size as usize) + j as usize] = v as u32;
                }
            }
            let mut add_hi = vec![0u32; (hi_size as usize) * (hi_size as usize)];
            for i in 0..hi_size {
                for j in 0..hi_size {
                    // digit-wise addition of the high fragments, scaled back by p^half
                    let mut acc = 0u64;
                    let (mut a, mut b) = (i as u64, j as u64);
                    let mut pw = self.p_pows[half];
                    for _ in half..self.n {
                        acc += ((a % self.p + b % self.p) % self.p) * pw;
                        a /= self.p;
                        b /= self.p;
                        pw *= self.p;
                    }
                    add_hi[(i as usize) * (hi_size as usize) + j as usize] = acc as u32;
                }
            }

            FastTables {
                log,
                antilog,
                neg,
                lo_size,
                hi_size,
                add_lo,
                add_hi,
            }
        })
    }

    /// Forces table construction (a no-op when already present). Sweep
    /// engines call this before entering hot loops.
    pub fn ensure_tables(&self) {
        self.tables();
    }

    // ---- raw-index fast ops used by sweeps (tables must be built) ----

    #[inline]
    pub(crate) fn add_idx(&self, t: &RawOps, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        let lo = t.add_lo[(x % t.lo_div) as usize * t.lo_size + (y % t.lo_div) as usize];
        let hi = t.add_hi[(x / t.lo_div) as usize * t.hi_size + (y / t.lo_div) as usize];
        lo + hi
    }

    #[inline]
    pub(crate) fn neg_idx(&self, t: &RawOps, x: u32) -> u32 {
        if self.p == 2 {
            x
        } else {
            t.neg[x as usize]
        }
    }

    #[inline]
    pub(crate) fn sub_idx(&self, t: &RawOps, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        self.add_idx(t, x, t.neg[y as usize])
    }

    #[inline]
    pub(crate) fn mul_idx(&self, t: &RawOps, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        t.antilog[(t.log[x as usize] + t.log[y as usize]) as usize]
    }

    pub(crate) fn inv_idx(&self, t: &RawOps, x: u32) -> u32 {
        debug_assert_ne!(x, 0);
        let group = (self.q - 1) as u32;
        let l = t.log[x as usize];
        t.antilog[((group - l) % group) as usize]
    }

    pub(crate) fn pow_idx(&self, t: &RawOps, x: u32, e: u64) -> u32 {
        let group = self.q - 1;
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let e = e % group;
        let l = t.log[x as usize] as u64;
        t.antilog[((l * e) % group) as usize]
    }

    /// Borrowed view over the fast tables for hot loops.
    pub(crate) fn raw(&self) -> RawOps<'_> {
        let t = self.tables();
        RawOps {
            log: &t.log,
            antilog: &t.antilog,
            neg: &t.neg,
            add_lo: &t.add_lo,
            add_hi: &t.add_hi,
            lo_size: t.lo_size as usize,
            hi_size: t.hi_size as usize,
            lo_div: t.lo_size,
        }
    }

    // ---- public element arithmetic ----

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let (a, b) = (self.chk(x), self.chk(y));
        match self.tables.get() {
            Some(_) => {
                let r = self.raw();
                self.element_unchecked(self.add_idx(&r, a, b))
            }
            None => self.element_unchecked(self.add_idx_slow(a, b)),
        }
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let a = self.chk(x);
        self.element_unchecked(self.neg_idx_slow(a))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let (a, b) = (self.chk(x), self.chk(y));
        match self.tables.get() {
            Some(_) => {
                let r = self.raw();
                self.element_unchecked(self.mul_idx(&r, a, b))
            }
            None => self.element_unchecked(self.mul_idx_slow(a, b)),
        }
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        let a = self.chk(x);
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.tables.get() {
            Some(_) => {
                let r = self.raw();
                Ok(self.element_unchecked(self.inv_idx(&r, a)))
            }
            None => Ok(self.element_unchecked(self.pow_idx_slow(a, self.q - 2))),
        }
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// x^e with 0^0 = 1 and 0^e = 0 for e > 0 (e as an integer, not reduced);
    /// nonzero bases reduce e mod (q - 1).
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        let a = self.chk(x);
        if a == 0 {
            return self.element_unchecked(if e == 0 { 1 } else { 0 });
        }
        match self.tables.get() {
            Some(_) => {
                let r = self.raw();
                self.element_unchecked(self.pow_idx(&r, a, e))
            }
            None => self.element_unchecked(self.pow_idx_slow(a, e % (self.q - 1))),
        }
    }

    /// Square-and-multiply power on the polynomial representation: the
    /// table-free route kept alongside the log-table one so the two can be
    /// checked against each other.
    pub fn pow_naive(&self, x: FieldElement, e: u64) -> FieldElement {
        let a = self.chk(x);
        if a == 0 {
            return self.element_unchecked(if e == 0 { 1 } else { 0 });
        }
        self.element_unchecked(self.pow_idx_slow(a, e % (self.q - 1)))
    }

    /// x^(p^i). frobenius(x, n) = x.
    pub fn frobenius(&self, x: FieldElement, i: usize) -> FieldElement {
        let e = self.frob_exponent(i);
        self.pow(x, e)
    }

    /// p^(i mod n) mod (q - 1): the exponent realizing the i-th Frobenius.
    pub(crate) fn frob_exponent(&self, i: usize) -> u64 {
        let i = i % self.n;
        self.p_pows[i] % (self.q - 1).max(1)
    }

    /// Absolute trace onto the prime subfield.
    pub fn abs_trace(&self, x: FieldElement) -> FieldElement {
        let mut acc = self.zero();
        let mut cur = x;
        for _ in 0..self.n {
            acc = self.add(acc, cur);
            cur = self.pow(cur, self.p);
        }
        debug_assert!(acc.encoding() < self.p);
        acc
    }

    /// Relative trace onto GF(p^d); d must divide n. The result is verified
    /// to lie in the subfield.
    pub fn rel_trace(&self, x: FieldElement, d: usize) -> Result<FieldElement> {
        if d == 0 || self.n % d != 0 {
            return Err(Error::NotADivisor { d, n: self.n });
        }
        let step = self.p_pows[d] % (self.q - 1).max(1);
        let mut acc = self.zero();
        let mut cur = x;
        for _ in 0..self.n / d {
            acc = self.add(acc, cur);
            cur = self.pow(cur, step);
        }
        debug_assert_eq!(self.pow(acc, self.p_pows[d]), acc);
        Ok(acc)
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    /// Requires odd characteristic. Uses discrete-log parity when tables
    /// exist, else x^((q-1)/2).
    pub fn quad_char(&self, x: FieldElement) -> Result<i32> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        let a = self.chk(x);
        if a == 0 {
            return Ok(0);
        }
        match self.tables.get() {
            Some(t) => Ok(if t.log[a as usize] % 2 == 0 { 1 } else { -1 }),
            None => {
                let r = self.pow_idx_slow(a, (self.q - 1) / 2);
                Ok(if r == 1 { 1 } else { -1 })
            }
        }
    }

    /// Discrete log of a nonzero element with respect to the context
    /// generator.
    pub fn dlog(&self, x: FieldElement) -> Result<u64> {
        let a = self.chk(x);
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        self.ensure_tables();
        Ok(self.tables().log[a as usize] as u64)
    }

    /// g^k without going through an element argument.
    pub fn gen_pow(&self, k: u64) -> FieldElement {
        self.pow(self.generator(), k)
    }

    /// The quadratic extension GF(p^2n) together with the embedding of this
    /// field, built on demand and cached. Fails when (p^n)^2 > 2^22.
    pub(crate) fn quad_ext(&self) -> Result<&QuadExt> {
        let r = self.quad_ext.get_or_init(|| self.build_quad_ext().map(Box::new));
        match r {
            Ok(b) => Ok(b),
            Err(e) => Err(e.clone()),
        }
    }

    fn build_quad_ext(&self) -> Result<QuadExt> {
        let ext = FieldCtx::new(self.p, 2 * self.n)?;
        ext.ensure_tables();
        // The roots of our modulus lie in the unique subfield of order q:
        // {0} union <h> with h = G^((Q-1)/(q-1)).
        let big_group = ext.q - 1;
        let h = ext.gen_pow(big_group / (self.q - 1));
        let mut root = None;
        let mut cur = ext.one();
        for _ in 0..self.q - 1 {
            // Horner evaluation of the base modulus at cur
            let mut acc = ext.zero();
            for &c in self.modulus.iter().rev() {
                acc = ext.mul(acc, cur);
                acc = ext.add(acc, ext.from_residue(c));
            }
            if acc.is_zero() {
                root = Some(cur);
                break;
            }
            cur = ext.mul(cur, h);
        }
        let z = root.expect("base modulus splits in the quadratic extension");
        let mut zpow = Vec::with_capacity(self.n);
        let mut acc = ext.one();
        for _ in 0..self.n {
            zpow.push(acc);
            acc = ext.mul(acc, z);
        }
        let mut embed = vec![0u32; self.q as usize];
        let mut back = std::collections::HashMap::with_capacity(self.q as usize);
        for x in 0..self.q as u32 {
            let digits = self.idx_digits(x);
            let mut img = ext.zero();
            for (i, &d) in digits.iter().enumerate() {
                if d != 0 {
                    img = ext.add(img, ext.mul(ext.from_residue(d), zpow[i]));
                }
            }
            embed[x as usize] = ext.chk(img);
            back.insert(ext.chk(img), x);
        }
        Ok(QuadExt { ext, embed, back })
    }

    /// Pretty-prints the modulus as a polynomial in x.
    pub fn modulus_string(&self) -> String {
        let mut parts = Vec::new();
        for d in (0..=self.n).rev() {
            let c = self.modulus[d];
            if c == 0 {
                continue;
            }
            let term = match (d, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}*x"),
                (d, 1) => format!("x^{d}"),
                (d, c) => format!("{c}*x^{d}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Raw table views handed to inner loops.
pub(crate) struct RawOps<'a> {
    pub(crate) log: &'a [u32],
    pub(crate) antilog: &'a [u32],
    pub(crate) neg: &'a [u32],
    add_lo: &'a [u32],
    add_hi: &'a [u32],
    lo_size: usize,
    hi_size: usize,
    lo_div: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mk_field_examples() {
        let f8 = mk_field(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        assert_eq!(f8.q(), 8);
        let f9 = mk_field(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.q(), 9);
        assert_eq!(
            mk_field(2, 3, Some(&[1, 0, 0, 1])).unwrap_err(),
            Error::ReducibleModulus { p: 2 }
        );
        assert_eq!(mk_field(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            mk_field(2, 3, Some(&[1, 1, 1])).unwrap_err(),
            Error::DegreeMismatch { .. }
        ));
    }

    #[test]
    fn default_modulus_is_smallest_encoding() {
        let f8 = mk_field(2, 3, None).unwrap();
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(f8.modulus_string(), "x^3 + x + 1");
    }

    #[test]
    fn arithmetic_examples() {
        // GF(2^3) with x^3 + x + 1: x * x^2 = x^3 = x + 1
        let f8 = mk_field(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        let x = f8.el(2).unwrap();
        let x2 = f8.el(4).unwrap();
        assert_eq!(f8.mul(x, x2), f8.el(3).unwrap());

        // GF(5): inv(2) = 3
        let f5 = mk_field(5, 1, None).unwrap();
        assert_eq!(f5.inv(f5.el(2).unwrap()).unwrap(), f5.el(3).unwrap());
        assert_eq!(f5.inv(f5.zero()).unwrap_err(), Error::DivisionByZero);

        // GF(3^2): g^8 = 1
        let f9 = mk_field(3, 2, None).unwrap();
        assert_eq!(f9.pow(f9.generator(), 8), f9.one());
    }

    #[test]
    fn pow_convention() {
        let f9 = mk_field(3, 2, None).unwrap();
        let zero = f9.zero();
        assert_eq!(f9.pow(zero, 0), f9.one());
        assert_eq!(f9.pow(zero, 8), zero); // e reduced as an integer, not mod q-1
        assert_eq!(f9.pow(zero, 16), zero);
        let g = f9.generator();
        assert_eq!(f9.pow(g, 8), f9.one());
        assert_eq!(f9.pow(g, 9), g);
        // exponents up to q^2
        assert_eq!(f9.pow(g, 81), f9.pow(g, 81 % 8));
    }

    #[test]
    fn frobenius_examples() {
        let f8 = mk_field(2, 3, None).unwrap();
        let g = f8.generator();
        assert_eq!(f8.frobenius(g, 0), g);
        assert_eq!(f8.frobenius(g, 3), g);
        let f9 = mk_field(3, 2, None).unwrap();
        let g = f9.generator();
        assert_eq!(f9.frobenius(g, 1), f9.pow(g, 3));
    }

    #[test]
    fn trace_examples() {
        let f4 = mk_field(2, 2, None).unwrap();
        assert_eq!(f4.abs_trace(f4.zero()), f4.zero());
        assert_eq!(f4.abs_trace(f4.one()), f4.zero()); // 1 + 1 = 0 in char 2

        let f16 = mk_field(2, 4, None).unwrap();
        for x in f16.elements() {
            let t = f16.rel_trace(x, 2).unwrap();
            // x + x^4 lies in GF(4)
            assert_eq!(f16.add(x, f16.pow(x, 4)), t);
            assert_eq!(f16.pow(t, 4), t);
        }
        assert_eq!(
            f16.rel_trace(f16.one(), 3).unwrap_err(),
            Error::NotADivisor { d: 3, n: 4 }
        );
    }

    #[test]
    fn quad_char_examples() {
        let f7 = mk_field(7, 1, None).unwrap();
        assert_eq!(f7.quad_char(f7.zero()).unwrap(), 0);
        assert_eq!(f7.quad_char(f7.el(2).unwrap()).unwrap(), 1); // 3^2 = 2 mod 7
        assert_eq!(f7.quad_char(f7.generator()).unwrap(), -1);
        let f8 = mk_field(2, 3, None).unwrap();
        assert_eq!(
            f8.quad_char(f8.one()).unwrap_err(),
            Error::EvenCharacteristic
        );
    }

    #[test]
    #[should_panic(expected = "foreign context")]
    fn contexts_never_mix() {
        let a = mk_field(2, 3, None).unwrap();
        let b = mk_field(2, 3, None).unwrap();
        let _ = a.add(a.one(), b.one());
    }

    #[test]
    fn context_boundary_check() {
        let a = mk_field(2, 3, None).unwrap();
        let b = mk_field(2, 3, None).unwrap();
        assert_eq!(a.ensure_owns(b.one()).unwrap_err(), Error::ContextMismatch);
        assert!(a.ensure_owns(a.one()).is_ok());
    }

    #[test]
    fn log_tables_roundtrip() {
        let f = mk_field(3, 3, None).unwrap();
        assert!(f.has_log_tables());
        for x in f.elements().skip(1) {
            let k = f.dlog(x).unwrap();
            assert_eq!(f.gen_pow(k), x);
        }
    }

    #[test]
    fn quadratic_extension_embedding() {
        let f8 = mk_field(2, 3, None).unwrap();
        let ext = f8.quad_ext().unwrap();
        assert_eq!(ext.ext.q(), 64);
        for x in f8.elements() {
            for y in f8.elements() {
                let lx = ext.lift(&f8, x);
                let ly = ext.lift(&f8, y);
                assert_eq!(
                    ext.lift(&f8, f8.add(x, y)),
                    ext.ext.add(lx, ly)
                );
                assert_eq!(
                    ext.lift(&f8, f8.mul(x, y)),
                    ext.ext.mul(lx, ly)
                );
                assert_eq!(ext.lower(&f8, lx), Some(x));
            }
        }
    }

    #[test]
    fn too_large_field_rejected() {
        assert!(matches!(
            mk_field(2, 23, None).unwrap_err(),
            Error::FieldTooLarge { .. }
        ));
    }
}
