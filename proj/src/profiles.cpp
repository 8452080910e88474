#include "witt/profiles.hpp"

#include <algorithm>

namespace witt {

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw DomainError("factorize: argument must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        long long pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(long long n) {
    if (n < 1) throw DomainError("moebius: argument must be positive");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

Profile Profile::full(long long n) {
    if (n < 1) throw DomainError("full profile needs N >= 1");
    std::vector<long long> idx(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) idx[static_cast<std::size_t>(i - 1)] = i;
    return Profile(std::move(idx));
}

Profile Profile::p_typical(long long p, int k) {
    if (!is_prime_ll(p)) throw NotPrime("p_typical profile: " + std::to_string(p) + " is not prime");
    if (k < 0) throw DomainError("p_typical profile needs k >= 0");
    std::vector<long long> idx;
    long long v = 1;
    for (int i = 0; i <= k; ++i) {
        idx.push_back(v);
        if (i < k) v *= p;
    }
    return Profile(std::move(idx));
}

Profile Profile::validate(std::vector<long long> indices) {
    for (long long n : indices)
        if (n < 1) throw DomainError("profile indices must be positive");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) throw DomainError("profile must be nonempty");
    for (long long n : indices)
        for (long long d : divisors_of(n))
            if (d < n && !std::binary_search(indices.begin(), indices.end(), d))
                throw NotDivisorStable(d, n);
    return Profile(std::move(indices));
}

bool Profile::contains(long long n) const {
    return std::binary_search(indices_.begin(), indices_.end(), n);
}

std::size_t Profile::position(long long n) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), n);
    if (it == indices_.end() || *it != n)
        throw ProfileMismatch("index " + std::to_string(n) + " not in profile " + to_string());
    return static_cast<std::size_t>(it - indices_.begin());
}

bool Profile::subset_of(const Profile& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                         indices_.end());
}

Profile Profile::quotient(long long n) const {
    if (!contains(n))
        throw ProfileMismatch("quotient by " + std::to_string(n) + ": index not in profile " +
                              to_string());
    std::vector<long long> idx;
    for (long long m : indices_)
        if (m % n == 0) idx.push_back(m / n);
    return Profile(std::move(idx)); // divisor-stable: m'|m, nm in P => nm' | nm => nm' in P
}

std::string Profile::to_string() const {
    const long long n = max_index();
    if (indices_.size() == static_cast<std::size_t>(n)) return "full:" + std::to_string(n);
    if (indices_.size() >= 2) {
        const long long p = indices_[1];
        bool ptyp = is_prime_ll(p);
        long long v = 1;
        for (std::size_t i = 0; ptyp && i < indices_.size(); ++i) {
            if (indices_[i] != v) ptyp = false;
            v *= p;
        }
        if (ptyp) return "ptyp:" + std::to_string(p) + ":" + std::to_string(indices_.size() - 1);
    }
    std::string s = "set:";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(indices_[i]);
    }
    return s;
}

Profile Profile::parse(std::string_view text) {
    auto num = [](std::string_view s) -> long long {
        if (s.empty()) throw ParseError("expected a number in profile");
        long long v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw ParseError("bad profile number '" + std::string(s) + "'");
            v = v * 10 + (c - '0');
            if (v > 2'000'000'000'000LL) throw ParseError("profile index too large");
        }
        return v;
    };
    if (text.substr(0, 5) == "full:") return full(num(text.substr(5)));
    if (text.substr(0, 5) == "ptyp:") {
        auto rest = text.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw ParseError("ptyp profile needs ptyp:<p>:<k>");
        return p_typical(num(rest.substr(0, colon)), static_cast<int>(num(rest.substr(colon + 1))));
    }
    if (text.substr(0, 4) == "set:") {
        std::vector<long long> idx;
        std::string_view rest = text.substr(4);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            idx.push_back(num(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return validate(std::move(idx));
    }
    throw ParseError("unknown profile syntax '" + std::string(text) + "'");
}

} // namespace witt
