#ifndef WITT_PROFILES_HPP
#define WITT_PROFILES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

/// Finite divisor-stable index set: contains 1 and every proper divisor of
/// each of its elements.  Immutable.
class Profile {
public:
    static Profile full(long long n);                   // {1, ..., n}
    static Profile p_typical(long long p, int k);       // {1, p, ..., p^k}
    static Profile validate(std::vector<long long> indices); // sorts, dedups, checks

    const std::vector<long long>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    long long max_index() const { return indices_.back(); }
    bool contains(long long n) const;
    std::size_t position(long long n) const; // throws ProfileMismatch if absent

    bool subset_of(const Profile& other) const;
    // {m : n*m in P}; requires n in P (so the result contains 1).
    Profile quotient(long long n) const;

    bool operator==(const Profile& other) const { return indices_ == other.indices_; }
    bool operator!=(const Profile& other) const { return !(*this == other); }

    // Text syntax: full:<N>, ptyp:<p>:<k>, set:<comma list>.
    std::string to_string() const;
    static Profile parse(std::string_view text);

private:
    explicit Profile(std::vector<long long> indices) : indices_(std::move(indices)) {}
    std::vector<long long> indices_;
};

// number-theoretic helpers (trial division; adequate for indices <= 10^6)
bool is_prime_ll(long long n);
std::vector<long long> divisors_of(long long n);
std::vector<std::pair<long long, int>> factorize(long long n);
int moebius(long long n);

} // namespace witt

#endif
