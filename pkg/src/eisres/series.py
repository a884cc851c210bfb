"""Truncated power series over the p-adic coefficient ring.

A LambdaSeries is an element of O[[X]] known mod (p^*, X^D), with each
coefficient carrying its own absolute precision.  Two denominators occur in
the toolkit and are tracked exactly rather than expanded (their formal
expansions have unbounded denominators):

    'X-p'   : the series is num/(X - p), the pole of the trivial-character
              L-series in its own variable;
    'X-c0'  : the series is num/(X - c0) with c0 = u^(-2) - 1, where the
              pole lands after the substitution X -> u^(-1)(1+X)^(-1) - 1.

Since c0 and p swap under that substitution, composing with it toggles the
two tags.  Multiplying by the exact linear factor clears a tag with no
precision loss at all, which is why the pole-cancelling factor delta is
represented as X - c0 exactly.
"""

from .padics import PadicScalar, vp


class PrecisionExhausted(ArithmeticError):
    pass


class NonUnitError(ArithmeticError):
    def __init__(self, msg, mu=None, lam=None):
        super().__init__(msg)
        self.mu = mu
        self.lam = lam


class LambdaSeries:
    __slots__ = ("ring", "coeffs", "D", "denom")

    def __init__(self, ring, coeffs, D=None, denom=None):
        self.ring = ring
        coeffs = list(coeffs)
        self.D = len(coeffs) if D is None else D
        if len(coeffs) < self.D:
            coeffs += [ring.zero()] * (self.D - len(coeffs))
        self.coeffs = coeffs[:self.D]
        assert denom in (None, 'X-p', 'X-c0')
        self.denom = denom

    # -- constructors --------------------------------------------------------

    @staticmethod
    def constant(ring, c, D):
        if isinstance(c, int):
            c = ring.from_int(c)
        return LambdaSeries(ring, [c] + [ring.zero()] * (D - 1), D)

    @staticmethod
    def zero(ring, D):
        return LambdaSeries(ring, [ring.zero()] * D, D)

    @staticmethod
    def one(ring, D):
        return LambdaSeries.constant(ring, 1, D)

    @staticmethod
    def gen(ring, D):
        """The variable X."""
        cs = [ring.zero(), ring.one()] + [ring.zero()] * (D - 2)
        return LambdaSeries(ring, cs, D)

    # -- basic structure -------------------------------------------------------

    def _check_compatible(self, other):
        if self.ring != other.ring:
            raise ValueError("ring tag mismatch")

    def truncated(self, D):
        return LambdaSeries(self.ring, self.coeffs[:D], min(D, self.D), self.denom)

    def map_coeffs(self, f):
        return LambdaSeries(self.ring, [f(c) for c in self.coeffs], self.D, self.denom)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def x_order(self):
        """Index of the first coefficient not indistinguishable from 0."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return self.D

    def min_prec(self):
        return min(c.prec for c in self.coeffs)

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int,)) or isinstance(other, PadicScalar):
            other = LambdaSeries.constant(self.ring, other, self.D)
        self._check_compatible(other)
        if self.denom != other.denom:
            raise ValueError("cannot add series with different denominators")
        D = min(self.D, other.D)
        return LambdaSeries(self.ring,
                            [self.coeffs[i] + other.coeffs[i] for i in range(D)],
                            D, self.denom)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        if isinstance(other, (int,)) or isinstance(other, PadicScalar):
            other = LambdaSeries.constant(self.ring, other, self.D)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int,)) or isinstance(other, PadicScalar):
            return self.map_coeffs(lambda c: c * other)
        self._check_compatible(other)
        if self.denom and other.denom:
            raise ValueError("product would have a quadratic denominator")
        D = min(self.D, other.D)
        out = [self.ring.zero(self.ring.cap * 2) for _ in range(D)]
        for i in range(D):
            a = self.coeffs[i]
            for j in range(D - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return LambdaSeries(self.ring, out, D, self.denom or other.denom)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; constant term must be a unit."""
        if self.denom:
            raise ValueError("invert the numerator and re-tag instead")
        c0 = self.coeffs[0]
        if c0.is_zero() or c0.val > 0:
            from .iwasawa import iwasawa_invariants
            mu, lam = iwasawa_invariants(self)
            raise NonUnitError("constant term is not a unit", mu, lam)
        inv0 = c0.inverse()
        out = [inv0] + [self.ring.zero() for _ in range(self.D - 1)]
        for j in range(1, self.D):
            acc = self.ring.zero(self.ring.cap * 2)
            for i in range(1, j + 1):
                acc = acc + self.coeffs[i] * out[j - i]
            out[j] = -(inv0 * acc)
        return LambdaSeries(self.ring, out, self.D)

    def __truediv__(self, other):
        if isinstance(other, (int, PadicScalar)):
            inv = (self.ring.from_int(other) if isinstance(other, int) else other).inverse()
            return self.map_coeffs(lambda c: c * inv)
        return self * other.invert()

    def __pow__(self, e):
        assert e >= 0
        result = LambdaSeries.one(self.ring, self.D)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return (self - other).is_zero()

    def agrees_with(self, other, M, D=None):
        """Coefficientwise agreement mod (p^M, X^D)."""
        D = self.D if D is None else D
        diff = (self - other) if self.denom == other.denom else None
        if diff is None:
            raise ValueError("denominator mismatch")
        for c in diff.coeffs[:D]:
            if c.prec < M:
                raise PrecisionExhausted(
                    "comparison requested at p^%d but only p^%d is certified" % (M, c.prec))
            if not c.truncate(M).is_zero():
                return False
        return True

    # -- pole bookkeeping ----------------------------------------------------------

    def _pole_point(self):
        R = self.ring
        p = R.p
        if self.denom == 'X-p':
            return R.from_int(p)
        u = R.from_int(1 + p)
        return (u * u).inverse() - 1

    def numerator(self):
        return LambdaSeries(self.ring, self.coeffs, self.D)

    def mul_linear_cleared(self, root_is_p):
        """(X - root) * self for a tagged series with the matching root."""
        want = 'X-p' if root_is_p else 'X-c0'
        if self.denom != want:
            raise ValueError("tag mismatch")
        return self.numerator()

    # -- evaluation and substitution --------------------------------------------------

    def evaluate(self, x0, tail_val_floor=0):
        """Value at X = x0 with v(x0) >= 1.

        The unknown tail sum_{j >= D} c_j x0^j is bounded below by
        D*v(x0) + tail_val_floor, which caps the reported precision.
        """
        R = self.ring
        if isinstance(x0, int):
            x0 = R.from_int(x0)
        if not x0.is_zero() and x0.val < 1:
            raise ValueError("evaluation point must have positive valuation")
        if self.denom is not None:
            den = x0 - self._pole_point()
            if den.is_zero():
                raise ZeroDivisionError("evaluation at the pole")
            return self.numerator().evaluate(x0, tail_val_floor) / den
        acc = R.zero(R.cap * 2)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        if not x0.is_zero():
            tail = self.D * x0.val + tail_val_floor
            acc = acc.truncate(tail)
        return acc

    def compose(self, g, tail_val_floor=0):
        """self(g(X)) for g with positive-valuation constant term.

        When g(0) != 0 the discarded tail of self contributes p-adically
        small amounts to every output coefficient: dropping c_k g^k with
        k >= D perturbs the X^j coefficient by at least (D - j) v(g(0))
        (plus the coefficient floor of self), so output precision is capped
        accordingly.  A substitution with g(0) = 0 is exact per coefficient.
        """
        if self.denom:
            raise ValueError("compose the numerator and re-tag")
        g0 = g.coeffs[0]
        if not g0.is_zero() and g0.val < 1:
            raise ValueError("substitution must send X into the maximal ideal")
        acc = LambdaSeries.zero(self.ring, g.D)
        for c in reversed(self.coeffs):
            acc = acc * g + LambdaSeries.constant(self.ring, c, g.D)
        if not g0.is_zero():
            w = g0.val
            capped = [acc.coeffs[j].truncate((self.D - j) * w + tail_val_floor)
                      if j < self.D else acc.coeffs[j]
                      for j in range(acc.D)]
            acc = LambdaSeries(self.ring, capped, acc.D)
        return acc

    def divide_exact_linear(self, root):
        """self / (X - root) for a series vanishing at the root.

        Exact synthetic division; the top coefficient of the quotient depends
        on the unknown X^D tail, so D drops by one.  The remainder is the
        value at the root, which the truncated data only pins down modulo
        p^(D v(root)); it must vanish at that precision.
        """
        R = self.ring
        q = [R.zero()] * (self.D - 1)
        cur = self.coeffs[self.D - 1]
        for j in range(self.D - 2, -1, -1):
            q[j] = cur
            cur = self.coeffs[j] + root * cur
        rem = cur.truncate(self.D * max(root.val or 1, 1))
        if not rem.is_zero():
            raise ValueError("series does not vanish at the root: remainder %r" % (rem,))
        # the true quotient coefficient j also sees the unknown X^(>=D) tail,
        # through a factor root^(D-1-j)
        w = max(root.val or 1, 1)
        q = [q[j].truncate((self.D - 1 - j) * w) for j in range(self.D - 1)]
        return LambdaSeries(R, q, self.D - 1, self.denom)

    # -- serialization ------------------------------------------------------------------

    def digits(self):
        return {
            "D": self.D,
            "denom": self.denom,
            "coeffs": [c.digits() for c in self.coeffs],
        }

    @staticmethod
    def from_digits(ring, doc):
        """Inverse of digits()."""
        coeffs = [ring.from_digits(c) for c in doc["coeffs"]]
        return LambdaSeries(ring, coeffs, doc["D"], doc["denom"])

    def __repr__(self):
        body = " + ".join("(%r)X^%d" % (c, i) for i, c in enumerate(self.coeffs[:4]))
        tail = " + ... (D=%d)" % self.D if self.D > 4 else ""
        pre = "[1/(%s)] " % self.denom if self.denom else ""
        return pre + body + tail


# ---------------------------------------------------------------------------
# standard series

def binom_series(s, D, ring=None):
    """(1+X)^s = sum_j C(s, j) X^j for a p-adic exponent s.

    Precision of the j-th coefficient degrades by v_p(j!), tracked by the
    scalar arithmetic itself.
    """
    if ring is None:
        if isinstance(s, int):
            raise ValueError("integer exponent needs an explicit ring")
        ring = s.ring
    R = ring
    if isinstance(s, int):
        s = R.from_int(s)
    cs = [R.one()]
    cur = R.one()
    for j in range(1, D):
        cur = cur * (s - (j - 1)) / j
        if cur.prec <= 0 and not cur.is_zero():
            raise PrecisionExhausted("binomial coefficient %d lost all precision" % j)
        cs.append(cur)
    return LambdaSeries(R, cs, D)


def log_series(D, ring):
    """log(1+X)/log(u), u = 1+p: the weight coordinate ell(X)."""
    R = ring
    from .padics import log_one_unit
    L = log_one_unit(R.from_int(1 + R.p))
    Linv = L.inverse()
    cs = [R.zero()]
    for j in range(1, D):
        c = R.from_fraction((-1) ** (j + 1), R.cap) / j
        cs.append(c * Linv)
    return LambdaSeries(R, cs, D)


def involution_sub(ring, D):
    """The substitution series Y(X) = u^(-1)(1+X)^(-1) - 1."""
    R = ring
    u_inv = R.from_int(1 + R.p).inverse()
    # (1+X)^(-1) = sum (-1)^j X^j
    inv1x = LambdaSeries(R, [R.from_int((-1) ** j) for j in range(D)], D)
    return inv1x * u_inv - 1


def compose_involution(f):
    """f(u^(-1)(1+X)^(-1) - 1), an involution on Lambda.

    On tagged series the pole moves between p and c0 = u^(-2)-1; the unit
    bookkeeping follows Y - p = -u (1+X)^(-1) (X - c0) and
    Y - c0 = -u^(-2) (1+X)^(-1) (X - p).
    """
    R = f.ring
    D = f.D
    Y = involution_sub(R, D)
    if f.denom is None:
        return f.compose(Y)
    u = R.from_int(1 + R.p)
    num = f.numerator().compose(Y)
    one_plus_x = LambdaSeries.gen(R, D) + 1
    if f.denom == 'X-p':
        # num(Y)/(Y-p) = num(Y) * (1+X) * (-u^(-1)) / (X - c0)
        out = num * one_plus_x * (-u.inverse())
        return LambdaSeries(R, out.coeffs, D, 'X-c0')
    out = num * one_plus_x * (-(u * u))
    return LambdaSeries(R, out.coeffs, D, 'X-p')
