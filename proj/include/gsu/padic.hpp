#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact-precision arithmetic in Q_p and in the unramified quadratic extension
// Q_p(sqrt(D)) for an odd prime p inert in Q(sqrt(D)).  Elements carry an
// explicit valuation and unit digits; every operation tracks the number of
// significant digits pessimistically, so a claim "x mod p^k" is checkable.

namespace gsu {

using int128 = __int128;

// p-adic valuation of n; n must be nonzero.
long pval(const mpz_class& n, long p);
long pval(const mpq_class& q, long p);

mpz_class pow_mpz(long base, long exp);

// Kronecker symbol (a|n).
int kronecker(const mpz_class& a, const mpz_class& n);

// true iff p is inert in Q(sqrt(disc)); throws domain_error when p | disc
// (ramified) so the two rejection modes are distinguishable.
bool inert_check(long disc, long p);

// ---------------------------------------------------------------------------

class PAdic {
public:
    PAdic() = default;
    // zero known to absolute precision abs_prec
    static PAdic zero(long p, long abs_prec);
    // exact rational, retained with `digits` significant digits
    static PAdic from_rational(long p, const mpq_class& x, long digits);
    static PAdic from_parts(long p, long val, mpz_class unit, long digits);

    long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long valuation() const;              // throws on zero
    long digits() const { return digits_; }
    long abs_precision() const { return zero_ ? zprec_ : val_ + digits_; }
    // unit part reduced mod p^digits
    const mpz_class& unit() const { return unit_; }
    // the integer x / p^val mod p^k for k <= digits
    mpz_class unit_mod(long k) const;

    PAdic operator+(const PAdic& o) const;
    PAdic operator-(const PAdic& o) const;
    PAdic operator*(const PAdic& o) const;
    PAdic operator-() const;
    PAdic inverse() const;
    PAdic pow(long e) const;

    // true when x - y is zero at the shared precision
    bool congruent(const PAdic& o) const;
    // v_p(x - y), capped at shared absolute precision
    long val_of_diff(const PAdic& o) const;

    // "p^v * (digits base p, little-endian) + O(p^N)"
    std::string str() const;

private:
    long p_ = 0;
    bool zero_ = true;
    long zprec_ = 0;      // for zero: absolute precision
    long val_ = 0;
    mpz_class unit_ = 0;  // coprime to p, reduced mod p^digits_
    long digits_ = 0;
    void normalize();
    friend class Unramified;
};

// The branch of log with log_p(p) = 0; kills Teichmuller parts.
// Loss <= 1 significant digit for p >= 3.
PAdic iwasawa_log(const PAdic& x);
// exp_p; requires val >= 1.  Loss <= 1 digit.
PAdic padic_exp(const PAdic& x);
// Teichmuller lift of the unit part: the (p-1)-th root of unity congruent
// to unit(x) mod p.
PAdic teichmuller(const PAdic& x);

// ---------------------------------------------------------------------------

// a + b*sqrt(disc) in the unramified quadratic extension, p inert.
class Unramified {
public:
    Unramified() = default;
    static Unramified zero(long p, long disc, long abs_prec);
    static Unramified make(long p, long disc, const mpq_class& a,
                           const mpq_class& b, long digits);
    static Unramified from_padic(const PAdic& a, long disc);
    static Unramified from_parts(long p, long disc, long val, mpz_class a,
                                 mpz_class b, long digits);

    long prime() const { return p_; }
    long disc() const { return disc_; }
    bool is_zero() const { return zero_; }
    long valuation() const;
    long digits() const { return digits_; }
    long abs_precision() const { return zero_ ? zprec_ : val_ + digits_; }
    // coordinates of the unit part mod p^digits
    const mpz_class& ua() const { return a_; }
    const mpz_class& ub() const { return b_; }

    Unramified operator+(const Unramified& o) const;
    Unramified operator-(const Unramified& o) const;
    Unramified operator*(const Unramified& o) const;
    Unramified operator-() const;
    Unramified inverse() const;
    Unramified pow(long e) const;
    Unramified pow(const mpz_class& e) const;

    Unramified conjugate() const;      // Frobenius: b -> -b
    PAdic trace() const;
    PAdic norm() const;
    // projection to Q_p; throws unless the sqrt(D)-coordinate vanishes at
    // the retained precision
    PAdic as_padic() const;
    bool frobenius_fixed() const;      // b == 0 at precision

    bool congruent(const Unramified& o) const;
    long val_of_diff(const Unramified& o) const;

    std::string str() const;           // "x + y*sqrtD + O(p^N)"

private:
    long p_ = 0, disc_ = 0;
    bool zero_ = true;
    long zprec_ = 0;
    long val_ = 0;
    mpz_class a_ = 0, b_ = 0;  // unit part, not both divisible by p
    long digits_ = 0;
    void normalize();
};

Unramified iwasawa_log(const Unramified& x);
Unramified padic_exp(const Unramified& x);
// the (p^2 - 1)-th root of unity congruent to the unit part mod p
Unramified teichmuller(const Unramified& x);
// all p^2 - 1 Teichmuller roots of unity mod p^digits
std::vector<Unramified> teichmuller_roots(long p, long disc, long digits);

// ---------------------------------------------------------------------------

// Unique num/den with |num|, den <= bound and num = den*residue mod modulus,
// if one exists (extended-gcd lattice walk).  Requires 2*bound^2 <= modulus.
std::optional<mpq_class> rational_reconstruct(const mpz_class& residue,
                                              const mpz_class& modulus,
                                              const mpz_class& bound);

}  // namespace gsu
