#include "gsu/padic.hpp"

#include <algorithm>
#include <cassert>

namespace gsu {

long pval(const mpz_class& n, long p) {
    if (n == 0) throw std::domain_error("pval of zero");
    mpz_class m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long pval(const mpq_class& q, long p) {
    if (q == 0) throw std::domain_error("pval of zero");
    long v = 0;
    if (q.get_num() != 0) v += pval(q.get_num(), p);
    v -= pval(q.get_den(), p);
    return v;
}

mpz_class pow_mpz(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

int kronecker(const mpz_class& a, const mpz_class& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool inert_check(long disc, long p) {
    if (p == 2 || disc % p == 0)
        throw std::domain_error("p ramified or even: p=" + std::to_string(p));
    return kronecker(mpz_class(disc), mpz_class(p)) == -1;
}

// ---------------------------------------------------------------------------

void PAdic::normalize() {
    if (zero_) return;
    mpz_class mod = pow_mpz(p_, digits_);
    unit_ = ((unit_ % mod) + mod) % mod;
    if (unit_ == 0) {
        // all retained digits vanished; value is zero at abs precision
        zero_ = true;
        zprec_ = val_ + digits_;
        return;
    }
    long shift = pval(unit_, p_);
    if (shift > 0) {
        // digits drifted into the valuation; re-balance
        mpz_class pw = pow_mpz(p_, shift);
        mpz_divexact(unit_.get_mpz_t(), unit_.get_mpz_t(), pw.get_mpz_t());
        val_ += shift;
        digits_ -= shift;
        if (digits_ <= 0) {
            zero_ = true;
            zprec_ = val_ + std::max<long>(digits_, 0);
        }
    }
}

PAdic PAdic::zero(long p, long abs_prec) {
    PAdic z;
    z.p_ = p;
    z.zero_ = true;
    z.zprec_ = abs_prec;
    return z;
}

PAdic PAdic::from_parts(long p, long val, mpz_class unit, long digits) {
    PAdic x;
    x.p_ = p;
    x.zero_ = false;
    x.val_ = val;
    x.unit_ = std::move(unit);
    x.digits_ = digits;
    x.normalize();
    return x;
}

PAdic PAdic::from_rational(long p, const mpq_class& x, long digits) {
    if (x == 0) return zero(p, digits);
    long v = pval(x, p);
    mpz_class num = x.get_num(), den = x.get_den();
    long vn = (num != 0) ? pval(num, p) : 0;
    long vd = pval(den, p);
    mpz_class pw;
    if (vn) { pw = pow_mpz(p, vn); mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pw.get_mpz_t()); }
    if (vd) { pw = pow_mpz(p, vd); mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pw.get_mpz_t()); }
    mpz_class mod = pow_mpz(p, digits);
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible");
    return from_parts(p, v, num * di % mod, digits);
}

long PAdic::valuation() const {
    if (zero_) throw std::domain_error("valuation of zero");
    return val_;
}

mpz_class PAdic::unit_mod(long k) const {
    if (zero_) return 0;
    if (k > digits_) throw std::domain_error("asking beyond retained digits");
    mpz_class mod = pow_mpz(p_, k);
    return unit_ % mod;
}

PAdic PAdic::operator+(const PAdic& o) const {
    if (p_ != o.p_ && !(zero_ && p_ == 0) && !(o.zero_ && o.p_ == 0))
        if (p_ != o.p_) throw std::domain_error("prime mismatch");
    if (zero_ && o.zero_) return zero(std::max(p_, o.p_), std::min(zprec_, o.zprec_));
    if (zero_) {
        PAdic r = o;
        long keep = std::min(o.abs_precision(), zprec_) - o.val_;
        if (keep <= 0) return zero(o.p_, zprec_);
        r.digits_ = std::min(o.digits_, keep);
        r.normalize();
        return r;
    }
    if (o.zero_) return o + *this;
    long ap = std::min(abs_precision(), o.abs_precision());
    long v = std::min(val_, o.val_);
    if (ap <= v) return zero(p_, ap);
    long digits = ap - v;
    mpz_class mod = pow_mpz(p_, digits);
    mpz_class s = unit_ * pow_mpz(p_, val_ - v) + o.unit_ * pow_mpz(p_, o.val_ - v);
    return from_parts(p_, v, s % mod, digits);
}

PAdic PAdic::operator-() const {
    if (zero_) return *this;
    PAdic r = *this;
    r.unit_ = pow_mpz(p_, digits_) - unit_;
    return r;
}

PAdic PAdic::operator-(const PAdic& o) const { return *this + (-o); }

PAdic PAdic::operator*(const PAdic& o) const {
    if (!zero_ && !o.zero_ && p_ != o.p_) throw std::domain_error("prime mismatch");
    if (zero_ || o.zero_) {
        // val lower bounds: zprec for zero, val for nonzero
        long lhs = zero_ ? zprec_ : val_;
        long rhs = o.zero_ ? o.zprec_ : o.val_;
        return zero(zero_ ? o.p_ : p_, lhs + rhs);
    }
    long digits = std::min(digits_, o.digits_);
    mpz_class mod = pow_mpz(p_, digits);
    return from_parts(p_, val_ + o.val_, unit_ * o.unit_ % mod, digits);
}

PAdic PAdic::inverse() const {
    if (zero_) throw std::domain_error("inverse of zero");
    mpz_class mod = pow_mpz(p_, digits_);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
    return from_parts(p_, -val_, inv, digits_);
}

PAdic PAdic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PAdic r = from_parts(p_, 0, 1, zero_ ? zprec_ : digits_);
    PAdic b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

bool PAdic::congruent(const PAdic& o) const {
    PAdic d = *this - o;
    return d.is_zero();
}

long PAdic::val_of_diff(const PAdic& o) const {
    PAdic d = *this - o;
    if (d.is_zero()) return d.zprec_;
    return d.val_;
}

std::string PAdic::str() const {
    if (zero_) return "0 + O(" + std::to_string(p_) + "^" + std::to_string(zprec_) + ")";
    std::string s = std::to_string(p_) + "^" + std::to_string(val_) + " * (";
    mpz_class u = unit_;
    for (long i = 0; i < digits_; ++i) {
        if (i) s += ",";
        mpz_class d = u % p_;
        s += d.get_str();
        u /= p_;
    }
    s += ") + O(" + std::to_string(p_) + "^" + std::to_string(val_ + digits_) + ")";
    return s;
}

// --------------------------------------------------------------------------
// log/exp/teichmuller are implemented once on Unramified; the Q_p versions
// embed along b = 0.

PAdic iwasawa_log(const PAdic& x) {
    // disc choice is irrelevant for b = 0; use any non-residue-free tag.
    Unramified u = Unramified::from_padic(x, 0);
    return iwasawa_log(u).as_padic();
}

PAdic padic_exp(const PAdic& x) {
    Unramified u = Unramified::from_padic(x, 0);
    return padic_exp(u).as_padic();
}

PAdic teichmuller(const PAdic& x) {
    if (x.is_zero()) throw std::domain_error("teichmuller of zero");
    long p = x.prime(), n = x.digits();
    mpz_class mod = pow_mpz(p, n);
    // iterate u <- u^p; converges to the (p-1)-st root of unity
    mpz_class u = x.unit_mod(n);
    for (long i = 0; i < n + 1; ++i)
        mpz_powm_ui(u.get_mpz_t(), u.get_mpz_t(), p, mod.get_mpz_t());
    return PAdic::from_parts(p, 0, u, n);
}

// ---------------------------------------------------------------------------

void Unramified::normalize() {
    if (zero_) return;
    mpz_class mod = pow_mpz(p_, digits_);
    a_ = ((a_ % mod) + mod) % mod;
    b_ = ((b_ % mod) + mod) % mod;
    if (a_ == 0 && b_ == 0) {
        zero_ = true;
        zprec_ = val_ + digits_;
        return;
    }
    long sa = (a_ == 0) ? digits_ : pval(a_, p_);
    long sb = (b_ == 0) ? digits_ : pval(b_, p_);
    long shift = std::min(sa, sb);
    if (shift > 0) {
        mpz_class pw = pow_mpz(p_, shift);
        if (a_ != 0) mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), pw.get_mpz_t());
        if (b_ != 0) mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), pw.get_mpz_t());
        val_ += shift;
        digits_ -= shift;
        if (digits_ <= 0) {
            zero_ = true;
            zprec_ = val_;
        }
    }
}

Unramified Unramified::zero(long p, long disc, long abs_prec) {
    Unramified z;
    z.p_ = p;
    z.disc_ = disc;
    z.zero_ = true;
    z.zprec_ = abs_prec;
    return z;
}

Unramified Unramified::from_parts(long p, long disc, long val, mpz_class a,
                                  mpz_class b, long digits) {
    Unramified x;
    x.p_ = p;
    x.disc_ = disc;
    x.zero_ = false;
    x.val_ = val;
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    x.digits_ = digits;
    x.normalize();
    return x;
}

Unramified Unramified::make(long p, long disc, const mpq_class& a,
                            const mpq_class& b, long digits) {
    if (disc != 0 && kronecker(mpz_class(disc), mpz_class(p)) != -1)
        throw std::domain_error("p not inert in Q(sqrt(disc))");
    if (a == 0 && b == 0) return zero(p, disc, digits);
    long va = (a == 0) ? digits + 1 : pval(a, p);
    long vb = (b == 0) ? digits + 1 : pval(b, p);
    long v = std::min(va, vb);
    mpq_class scale(pow_mpz(p, std::abs(v)));
    if (v > 0) scale = 1 / scale;
    mpq_class as = a * scale, bs = b * scale;  // now p-integral, one a unit
    mpz_class mod = pow_mpz(p, digits);
    auto conv = [&](const mpq_class& q) -> mpz_class {
        if (q == 0) return 0;
        mpz_class num = q.get_num(), di;
        if (mpz_invert(di.get_mpz_t(), mpq_class(q.get_den()).get_num().get_mpz_t(),
                       mod.get_mpz_t()) == 0)
            throw std::domain_error("denominator not invertible");
        mpz_class r = num * di % mod;
        return ((r % mod) + mod) % mod;
    };
    return from_parts(p, disc, v, conv(as), conv(bs), digits);
}

Unramified Unramified::from_padic(const PAdic& a, long disc) {
    Unramified x;
    x.p_ = a.prime();
    x.disc_ = disc;
    if (a.is_zero()) {
        x.zero_ = true;
        x.zprec_ = a.abs_precision();
        return x;
    }
    x.zero_ = false;
    x.val_ = a.valuation();
    x.a_ = a.unit();
    x.b_ = 0;
    x.digits_ = a.digits();
    return x;
}

long Unramified::valuation() const {
    if (zero_) throw std::domain_error("valuation of zero");
    return val_;
}

Unramified Unramified::operator+(const Unramified& o) const {
    if (zero_ && o.zero_)
        return zero(p_ ? p_ : o.p_, disc_ ? disc_ : o.disc_, std::min(zprec_, o.zprec_));
    if (zero_) {
        Unramified r = o;
        long keep = std::min(o.abs_precision(), zprec_) - o.val_;
        if (keep <= 0) return zero(o.p_, o.disc_, std::min(zprec_, o.abs_precision()));
        r.digits_ = std::min(o.digits_, keep);
        r.normalize();
        return r;
    }
    if (o.zero_) return o + *this;
    if (p_ != o.p_ || disc_ != o.disc_) throw std::domain_error("field mismatch");
    long ap = std::min(abs_precision(), o.abs_precision());
    long v = std::min(val_, o.val_);
    if (ap <= v) return zero(p_, disc_, ap);
    long digits = ap - v;
    mpz_class mod = pow_mpz(p_, digits);
    mpz_class sa = a_ * pow_mpz(p_, val_ - v) + o.a_ * pow_mpz(p_, o.val_ - v);
    mpz_class sb = b_ * pow_mpz(p_, val_ - v) + o.b_ * pow_mpz(p_, o.val_ - v);
    return from_parts(p_, disc_, v, sa % mod, sb % mod, digits);
}

Unramified Unramified::operator-() const {
    if (zero_) return *this;
    Unramified r = *this;
    mpz_class mod = pow_mpz(p_, digits_);
    r.a_ = (mod - a_) % mod;
    r.b_ = (mod - b_) % mod;
    return r;
}

Unramified Unramified::operator-(const Unramified& o) const { return *this + (-o); }

Unramified Unramified::operator*(const Unramified& o) const {
    if (zero_ || o.zero_) {
        long lhs = zero_ ? zprec_ : val_;
        long rhs = o.zero_ ? o.zprec_ : o.val_;
        return zero(p_ ? p_ : o.p_, disc_ ? disc_ : o.disc_, lhs + rhs);
    }
    if (p_ != o.p_ || (disc_ != o.disc_ && disc_ != 0 && o.disc_ != 0))
        throw std::domain_error("field mismatch");
    long digits = std::min(digits_, o.digits_);
    mpz_class mod = pow_mpz(p_, digits);
    long D = disc_ ? disc_ : o.disc_;
    mpz_class na = (a_ * o.a_ + mpz_class(D) * b_ * o.b_) % mod;
    mpz_class nb = (a_ * o.b_ + b_ * o.a_) % mod;
    return from_parts(p_, D, val_ + o.val_, na, nb, digits);
}

Unramified Unramified::conjugate() const {
    if (zero_) return *this;
    Unramified r = *this;
    mpz_class mod = pow_mpz(p_, digits_);
    r.b_ = (mod - b_) % mod;
    return r;
}

Unramified Unramified::inverse() const {
    if (zero_) throw std::domain_error("inverse of zero");
    // 1/(a+b s) = (a - b s)/(a^2 - D b^2); the norm of a unit is a unit
    mpz_class mod = pow_mpz(p_, digits_);
    mpz_class n = (a_ * a_ - mpz_class(disc_) * b_ * b_) % mod;
    n = ((n % mod) + mod) % mod;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p_))
        throw std::domain_error("inverse: norm not a unit (precision loss)");
    mpz_class ni;
    mpz_invert(ni.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
    return from_parts(p_, disc_, -val_, a_ * ni % mod, (mod - b_) * ni % mod, digits_);
}

Unramified Unramified::pow(long e) const { return pow(mpz_class(e)); }

Unramified Unramified::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    Unramified r = from_parts(p_, disc_, 0, 1, 0, zero_ ? std::max<long>(zprec_, 1) : digits_);
    Unramified b = *this;
    mpz_class k = e;
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * b;
        k >>= 1;
        if (k != 0) b = b * b;
    }
    return r;
}

PAdic Unramified::trace() const {
    Unramified t = *this + conjugate();
    return t.as_padic();
}

PAdic Unramified::norm() const {
    Unramified n = *this * conjugate();
    return n.as_padic();
}

PAdic Unramified::as_padic() const {
    if (zero_) return PAdic::zero(p_, zprec_);
    if (b_ != 0) throw std::domain_error("not in Q_p at precision: " + str());
    return PAdic::from_parts(p_, val_, a_, digits_);
}

bool Unramified::frobenius_fixed() const { return zero_ || b_ == 0; }

bool Unramified::congruent(const Unramified& o) const {
    return (*this - o).is_zero();
}

long Unramified::val_of_diff(const Unramified& o) const {
    Unramified d = *this - o;
    if (d.is_zero()) return d.zprec_;
    return d.val_;
}

std::string Unramified::str() const {
    if (zero_) return "0 + O(" + std::to_string(p_) + "^" + std::to_string(zprec_) + ")";
    std::string s = std::to_string(p_) + "^" + std::to_string(val_) + " * (" +
                    a_.get_str() + " + " + b_.get_str() + "*sqrtD) + O(" +
                    std::to_string(p_) + "^" + std::to_string(val_ + digits_) + ")";
    return s;
}

// ---------------------------------------------------------------------------

namespace {

// x with val >= 1, both coords reduced mod p^(digits+guard); computes
// log(1+z)-type series exactly with guard digits for the divisions by j.
Unramified log_one_plus(const Unramified& z, long out_digits) {
    long p = z.prime(), D = z.disc();
    if (z.is_zero()) return Unramified::zero(p, D, out_digits + 1);
    long guard = 2;
    {   // v_p(j) <= log_p(terms); terms ~ out_digits * p/(p-1) + few
        long t = out_digits + 6, g = 0;
        while (t) { t /= p; ++g; }
        guard = g + 1;
    }
    long wd = out_digits + guard;
    mpz_class mod = pow_mpz(p, wd);
    long vz = z.valuation();
    mpz_class za = z.ua() * pow_mpz(p, vz) % mod;
    mpz_class zb = z.ub() * pow_mpz(p, vz) % mod;
    mpz_class Dz(D);
    mpz_class pa = 1, pb = 0;  // z^j accumulator
    mpz_class acc_a = 0, acc_b = 0;
    long jmax = wd + 4;
    // terms j with j*vz - v_p(j) >= out_digits can stop; crude bound below
    for (long j = 1; j <= jmax * 2; ++j) {
        mpz_class na = (pa * za + Dz * pb * zb) % mod;
        mpz_class nb = (pa * zb + pb * za) % mod;
        pa = na; pb = nb;
        long vj = 0, ju = j;
        while (ju % p == 0) { ju /= p; ++vj; }
        // term = z^j / j; v_p(z^j) >= j >= vj + 1 for j >= 1, so exact division
        mpz_class ta = pa, tb = pb;
        if (vj) {
            mpz_class pw = pow_mpz(p, vj);
            if (!mpz_divisible_p(ta.get_mpz_t(), pw.get_mpz_t()) ||
                !mpz_divisible_p(tb.get_mpz_t(), pw.get_mpz_t()))
                throw std::logic_error("log series digit loss");
            mpz_divexact(ta.get_mpz_t(), ta.get_mpz_t(), pw.get_mpz_t());
            mpz_divexact(tb.get_mpz_t(), tb.get_mpz_t(), pw.get_mpz_t());
        }
        mpz_class jinv;
        mpz_class jz(ju);
        mpz_invert(jinv.get_mpz_t(), jz.get_mpz_t(), mod.get_mpz_t());
        ta = ta * jinv % mod;
        tb = tb * jinv % mod;
        if (j % 2 == 0) { acc_a -= ta; acc_b -= tb; }
        else { acc_a += ta; acc_b += tb; }
        if (j * vz - vj >= wd) break;
    }
    acc_a = ((acc_a % mod) + mod) % mod;
    acc_b = ((acc_b % mod) + mod) % mod;
    // claim out_digits of absolute precision (documented loss <= 1 digit)
    mpz_class keep = pow_mpz(p, out_digits);
    return Unramified::from_parts(p, D, 0, acc_a % keep, acc_b % keep, out_digits);
}

}  // namespace

Unramified iwasawa_log(const Unramified& x) {
    if (x.is_zero()) throw std::domain_error("log of zero");
    long p = x.prime(), D = x.disc();
    long n = x.digits();
    // strip valuation (log_p(p) = 0), kill Teichmuller via u^(p^2-1)
    Unramified u = Unramified::from_parts(p, D, 0, x.ua(), x.ub(), n);
    long q1 = p * p - 1;
    Unramified upow = u.pow(q1);
    Unramified z = upow - Unramified::from_parts(p, D, 0, 1, 0, n);
    Unramified lg = log_one_plus(z, n >= 2 ? n - 1 : n);
    // divide by p^2-1 (unit)
    mpz_class mod = pow_mpz(p, lg.is_zero() ? lg.abs_precision() : lg.digits());
    if (lg.is_zero()) return lg;
    mpz_class qi;
    mpz_class qz(q1);
    mpz_invert(qi.get_mpz_t(), qz.get_mpz_t(), mod.get_mpz_t());
    return Unramified::from_parts(p, D, lg.valuation(), lg.ua() * qi % mod,
                                  lg.ub() * qi % mod, lg.digits());
}

Unramified padic_exp(const Unramified& x) {
    long p = x.prime(), D = x.disc();
    if (x.is_zero()) {
        return Unramified::from_parts(p ? p : 3, D, 0, 1, 0,
                                      std::max<long>(x.abs_precision(), 1));
    }
    if (x.valuation() < 1) throw std::domain_error("exp domain: need val >= 1");
    long out = x.abs_precision() >= 2 ? x.abs_precision() - 1 : 1;
    long guard;
    {
        long t = out + 6, g = 0;
        while (t) { t /= p; ++g; }
        guard = 2 * g + 2;
    }
    long wd = out + guard;
    mpz_class mod = pow_mpz(p, wd);
    long vx = x.valuation();
    mpz_class xa = x.ua() * pow_mpz(p, vx) % mod;
    mpz_class xb = x.ub() * pow_mpz(p, vx) % mod;
    mpz_class Dz(D);
    mpz_class pa = 1, pb = 0;
    mpz_class acc_a = 1, acc_b = 0;
    mpz_class fact_val = 0;  // v_p(j!)
    long vfac = 0;
    mpz_class factu = 1;     // unit part of j! mod p^wd
    for (long j = 1;; ++j) {
        mpz_class na = (pa * xa + Dz * pb * xb) % mod;
        mpz_class nb = (pa * xb + pb * xa) % mod;
        pa = na; pb = nb;
        long ju = j, vj = 0;
        while (ju % p == 0) { ju /= p; ++vj; }
        vfac += vj;
        factu = factu * ju % mod;
        // term = x^j / j! ; v(term) >= j*vx - vfac
        long vterm = j * vx - vfac;
        if (vterm >= wd - guard / 2 && j > 2) break;
        mpz_class ta = pa, tb = pb;
        if (vfac) {
            mpz_class pw = pow_mpz(p, vfac);
            if (!mpz_divisible_p(ta.get_mpz_t(), pw.get_mpz_t()) ||
                !mpz_divisible_p(tb.get_mpz_t(), pw.get_mpz_t()))
                throw std::logic_error("exp series digit loss");
            mpz_divexact(ta.get_mpz_t(), ta.get_mpz_t(), pw.get_mpz_t());
            mpz_divexact(tb.get_mpz_t(), tb.get_mpz_t(), pw.get_mpz_t());
        }
        mpz_class fi;
        mpz_invert(fi.get_mpz_t(), factu.get_mpz_t(), mod.get_mpz_t());
        acc_a = (acc_a + ta * fi) % mod;
        acc_b = (acc_b + tb * fi) % mod;
    }
    mpz_class keep = pow_mpz(p, out);
    return Unramified::from_parts(p, D, 0, acc_a % keep, acc_b % keep, out);
}

Unramified teichmuller(const Unramified& x) {
    if (x.is_zero()) throw std::domain_error("teichmuller of zero");
    long p = x.prime(), D = x.disc(), n = x.digits();
    Unramified u = Unramified::from_parts(p, D, 0, x.ua(), x.ub(), n);
    // u <- u^(p^2) converges to the (p^2-1)-st root of unity
    for (long i = 0; i < n + 1; ++i) u = u.pow(p).pow(p);
    return u;
}

std::vector<Unramified> teichmuller_roots(long p, long disc, long digits) {
    // find a generator of F_{p^2}^* by trial, lift all its powers
    long q = p * p;
    auto mul = [&](std::pair<long,long> x, std::pair<long,long> y) {
        long a = (x.first * y.first + ((disc % p) + p) % p * x.second % p * y.second) % p;
        long b = (x.first * y.second + x.second * y.first) % p;
        return std::pair<long,long>{a, b};
    };
    auto powf = [&](std::pair<long,long> x, long e) {
        std::pair<long,long> r{1, 0};
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    long m = q - 1;
    std::vector<long> pr;
    long mm = m;
    for (long f = 2; f * f <= mm; ++f)
        if (mm % f == 0) { pr.push_back(f); while (mm % f == 0) mm /= f; }
    if (mm > 1) pr.push_back(mm);
    std::pair<long,long> g{0, 0};
    for (long a = 0; a < p && g == std::pair<long,long>{0, 0}; ++a)
        for (long b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            bool ok = true;
            for (long f : pr)
                if (powf({a, b}, m / f) == std::pair<long,long>{1, 0}) { ok = false; break; }
            if (ok) { g = {a, b}; break; }
        }
    Unramified gen = teichmuller(Unramified::from_parts(p, disc, 0, g.first, g.second, digits));
    std::vector<Unramified> out;
    Unramified cur = Unramified::from_parts(p, disc, 0, 1, 0, digits);
    for (long i = 0; i < q - 1; ++i) {
        out.push_back(cur);
        cur = cur * gen;
    }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<mpq_class> rational_reconstruct(const mpz_class& residue,
                                              const mpz_class& modulus,
                                              const mpz_class& bound) {
    if (2 * bound * bound > modulus)
        throw std::domain_error("rational_reconstruct: 2B^2 > modulus");
    mpz_class r0 = modulus, r1 = ((residue % modulus) + modulus) % modulus;
    mpz_class s0 = 0, s1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (abs(s1) > bound || s1 == 0) return std::nullopt;
    mpq_class out(r1, abs(s1));
    if (s1 < 0) out = -out;
    out.canonicalize();
    // verify: num = den * residue mod modulus and gcd(den, modulus) = 1
    mpz_class chk = (out.get_den() * residue - out.get_num()) % modulus;
    if (chk != 0) return std::nullopt;
    return out;
}

}  // namespace gsu
