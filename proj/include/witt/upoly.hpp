#ifndef WITT_UPOLY_HPP
#define WITT_UPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "witt/errors.hpp"
#include "witt/rings.hpp"

namespace witt {

/// Variable of the universal ring Z[{X_i, Y_i}].
struct UVar {
    enum class Family : std::uint8_t { X = 0, Y = 1 };

    Family family = Family::X;
    std::uint32_t index = 1; // >= 1

    static UVar x(std::uint32_t i) { return {Family::X, i}; }
    static UVar y(std::uint32_t i) { return {Family::Y, i}; }

    // Lower key = higher print priority: X1 < Y1 < X2 < Y2 < ...
    std::uint64_t key() const {
        return (static_cast<std::uint64_t>(index) << 1) | static_cast<std::uint64_t>(family);
    }
    static UVar from_key(std::uint64_t k) {
        return {static_cast<Family>(k & 1), static_cast<std::uint32_t>(k >> 1)};
    }
    std::string name() const {
        return (family == Family::X ? "X" : "Y") + std::to_string(index);
    }
    bool operator==(const UVar& o) const { return family == o.family && index == o.index; }
};

/// (variable key, exponent) pairs, key-ascending, exponents positive.
using Monomial = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

/// Sparse polynomial with exact rational coefficients over the UVar alphabet.
class UPoly {
public:
    using TermMap = std::map<Monomial, mpq_class>;

    UPoly() = default; // zero
    static UPoly constant(const mpq_class& c);
    static UPoly variable(UVar v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    bool operator==(const UPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const UPoly& other) const { return !(*this == other); }

    UPoly scaled(const mpq_class& c) const;
    UPoly pow(unsigned long e) const;
    void divide_by_int(const mpz_class& n); // exact over Q, n != 0

    long total_degree() const; // 0 for constants and zero
    std::vector<UVar> support() const;

    bool is_integral() const;
    bool is_p_integral(const mpz_class& p) const;

    // Graded-lex canonical term order: total degree descending, ties broken
    // lexicographically with X1 > Y1 > X2 > Y2 > ... significance.
    std::vector<std::pair<Monomial, mpq_class>> canonical_terms() const;
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpq_class& c);
    TermMap terms_;
};

/// Evaluates f at the given variable values (missing variables read as zero).
/// Coefficients enter the ring via rational_image, so rational coefficients
/// require their denominators to be invertible there.
RingElement evaluate_upoly(const UPoly& f, const RingPtr& ring,
                           const std::vector<std::pair<std::uint64_t, RingElement>>& assignment);

/// Symbolic substitution variable -> polynomial (missing variables read as zero).
UPoly substitute_upoly(const UPoly& f,
                       const std::vector<std::pair<std::uint64_t, UPoly>>& assignment);

} // namespace witt

#endif
