#pragma once

#include <gmpxx.h>
#include <array>
#include <string>
#include <vector>

// Real quadratic field arithmetic: exact elements of Q(sqrt(D)), fundamental
// and totally positive units, binary quadratic forms with Gauss composition,
// the narrow class group, and the form <-> oriented-ideal dictionary.

namespace gsu {

bool is_fundamental_disc(long d);

// x + y*sqrt(D), exact rational coordinates.  D is carried externally.
struct FieldElem {
    mpq_class x, y;

    FieldElem() = default;
    FieldElem(mpq_class xx, mpq_class yy) : x(std::move(xx)), y(std::move(yy)) {}

    bool operator==(const FieldElem&) const = default;
};

FieldElem fe_add(const FieldElem& a, const FieldElem& b);
FieldElem fe_sub(const FieldElem& a, const FieldElem& b);
FieldElem fe_neg(const FieldElem& a);
FieldElem fe_mul(const FieldElem& a, const FieldElem& b, long disc);
FieldElem fe_div(const FieldElem& a, const FieldElem& b, long disc);
FieldElem fe_scale(const FieldElem& a, const mpq_class& s);
FieldElem fe_conj(const FieldElem& a);
mpq_class fe_norm(const FieldElem& a, long disc);
mpq_class fe_trace(const FieldElem& a);
// sign of the embedding x + y*sqrt(D) (emb=+1) or x - y*sqrt(D) (emb=-1)
int fe_sign(const FieldElem& a, long disc, int emb);
bool fe_totally_positive(const FieldElem& a, long disc);
// membership in O_F = Z + Z*(D+sqrt(D))/2
bool fe_integral(const FieldElem& a, long disc);
// floor of the real embedding (emb=+1/-1), exact
mpz_class fe_floor(const FieldElem& a, long disc, int emb);

// x1*y2 - x2*y1; the basis (a,b) is positively oriented (det sigma_i(t_j) > 0)
// iff cross < 0.
mpq_class fe_cross(const FieldElem& a, const FieldElem& b);

// ---------------------------------------------------------------------------

struct QuadForm {
    long long a = 0, b = 0, c = 0;
    bool operator==(const QuadForm&) const = default;
    auto operator<=>(const QuadForm&) const = default;
    std::string str() const;
};

long long form_disc(const QuadForm& f);
bool form_primitive(const QuadForm& f);
bool form_reduced(const QuadForm& f, long disc);
QuadForm form_rho(const QuadForm& f, long disc);         // neighbor step
QuadForm form_reduce(const QuadForm& f, long disc);
std::vector<QuadForm> form_cycle(const QuadForm& f, long disc);
QuadForm form_canonical(const QuadForm& f, long disc);   // lex-min of cycle
bool form_equivalent(const QuadForm& f, const QuadForm& g, long disc);
QuadForm principal_form(long disc);
QuadForm form_inverse(const QuadForm& f);
// Gauss composition; result reduced to the canonical representative
QuadForm gauss_compose(const QuadForm& f, const QuadForm& g, long disc);

struct NarrowClassGroup {
    long disc = 0;
    std::vector<QuadForm> reps;          // canonical, sorted
    std::size_t identity = 0;
    std::vector<long> order;             // order of each class
    std::vector<bool> two_torsion;       // order <= 2
    std::vector<std::vector<std::size_t>> comp;  // composition table

    std::size_t size() const { return reps.size(); }
    std::size_t index_of(const QuadForm& f) const;  // via reduction
};

NarrowClassGroup narrow_class_group(long disc);

// ---------------------------------------------------------------------------

struct OrientedIdeal {
    FieldElem t1, t2;   // oriented Z-basis (cross < 0)
    mpq_class norm;     // module norm
};

// fundamental unit eps > 1 of O_F with its norm (+1 or -1)
std::pair<FieldElem, int> fundamental_unit(long disc);
// generator of the totally positive units modulo torsion: eps^2 if N(eps)=-1
FieldElem totally_positive_generator(long disc);

// The inverse ideal a_Q^{-1} for the class of f, with oriented basis.
// Uses the canonical (negative-leading) cycle representative of f, for which
// the module Z|a| + Z(-b+sqrt(D))/2 lies in the narrow class of f.
OrientedIdeal form_to_ideal(const QuadForm& f, long disc);
// the (integral, canonically chosen) ideal itself, mostly for display
OrientedIdeal form_to_ideal_raw(const QuadForm& f, long disc);
// reduce the norm form of an oriented module
QuadForm ideal_to_form(const OrientedIdeal& ideal, long disc);

}  // namespace gsu
