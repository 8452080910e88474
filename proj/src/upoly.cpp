#include "witt/upoly.hpp"

#include <algorithm>

namespace witt {

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

long monomial_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [var, exp] : m) d += static_cast<long>(exp);
    return d;
}

// true when a precedes b in the canonical print order
bool canonical_before(const Monomial& a, const Monomial& b) {
    const long da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) return true;       // a has the more significant var
        if (b[j].first < a[i].first) return false;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return i < a.size();
}

} // namespace

UPoly UPoly::constant(const mpq_class& c) {
    UPoly f;
    if (c != 0) f.terms_.emplace(Monomial{}, c);
    return f;
}

UPoly UPoly::variable(UVar v) {
    UPoly f;
    f.terms_.emplace(Monomial{{v.key(), 1}}, mpq_class(1));
    return f;
}

void UPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UPoly& UPoly::operator+=(const UPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, mpq_class(-c));
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(merge_monomials(ma, mb), mpq_class(ca * cb));
    return out;
}

UPoly UPoly::operator-() const {
    UPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, mpq_class(-c));
    return out;
}

UPoly UPoly::scaled(const mpq_class& c) const {
    UPoly out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, mpq_class(coeff * c));
    return out;
}

UPoly UPoly::pow(unsigned long e) const {
    UPoly acc = constant(1);
    UPoly base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return acc;
}

void UPoly::divide_by_int(const mpz_class& n) {
    if (n == 0) throw DomainError("UPoly: division by zero");
    const mpq_class inv(mpz_class(1), n);
    for (auto& [m, c] : terms_) c *= inv;
}

long UPoly::total_degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

std::vector<UVar> UPoly::support() const {
    std::vector<std::uint64_t> keys;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m) keys.push_back(var);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<UVar> out;
    out.reserve(keys.size());
    for (auto k : keys) out.push_back(UVar::from_key(k));
    return out;
}

bool UPoly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool UPoly::is_p_integral(const mpz_class& p) const {
    for (const auto& [m, c] : terms_)
        if (mpz_divisible_p(c.get_den().get_mpz_t(), p.get_mpz_t())) return false;
    return true;
}

std::vector<std::pair<Monomial, mpq_class>> UPoly::canonical_terms() const {
    std::vector<std::pair<Monomial, mpq_class>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
    return out;
}

std::string UPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : canonical_terms()) {
        const bool neg = c < 0;
        const mpq_class mag = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) s += '-';
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.empty()) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        bool firstvar = true;
        for (const auto& [var, exp] : m) {
            if (!firstvar) s += '*';
            firstvar = false;
            s += UVar::from_key(var).name();
            if (exp != 1) s += "^" + std::to_string(exp);
        }
    }
    return s;
}

RingElement evaluate_upoly(const UPoly& f, const RingPtr& ring,
                           const std::vector<std::pair<std::uint64_t, RingElement>>& assignment) {
    std::vector<std::size_t> order(assignment.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return assignment[a].first < assignment[b].first; });

    // power tables, indexed in step with `assignment`
    std::vector<std::vector<RingElement>> powers(assignment.size());
    auto value_power = [&](std::uint64_t key, std::uint32_t exp) -> const RingElement* {
        auto it = std::lower_bound(order.begin(), order.end(), key, [&](std::size_t i, std::uint64_t k) {
            return assignment[i].first < k;
        });
        if (it == order.end() || assignment[*it].first != key) return nullptr; // reads as zero
        auto& table = powers[*it];
        if (table.empty()) table.push_back(RingElement::one(ring));
        while (table.size() <= exp) table.push_back(table.back() * assignment[*it].second);
        return &table[exp];
    };

    RingElement acc = RingElement::zero(ring);
    for (const auto& [m, c] : f.terms()) {
        RingElement term = rational_image(c, ring);
        bool vanished = false;
        for (const auto& [var, exp] : m) {
            const RingElement* v = value_power(var, exp);
            if (!v) {
                vanished = true;
                break;
            }
            term = term * *v;
        }
        if (!vanished) acc = acc + term;
    }
    return acc;
}

UPoly substitute_upoly(const UPoly& f,
                       const std::vector<std::pair<std::uint64_t, UPoly>>& assignment) {
    std::vector<std::size_t> order(assignment.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return assignment[a].first < assignment[b].first; });

    std::vector<std::vector<UPoly>> powers(assignment.size());
    auto value_power = [&](std::uint64_t key, std::uint32_t exp) -> const UPoly* {
        auto it = std::lower_bound(order.begin(), order.end(), key, [&](std::size_t i, std::uint64_t k) {
            return assignment[i].first < k;
        });
        if (it == order.end() || assignment[*it].first != key) return nullptr;
        auto& table = powers[*it];
        if (table.empty()) table.push_back(UPoly::constant(1));
        while (table.size() <= exp) table.push_back(table.back() * assignment[*it].second);
        return &table[exp];
    };

    UPoly acc;
    for (const auto& [m, c] : f.terms()) {
        UPoly term = UPoly::constant(c);
        bool vanished = false;
        for (const auto& [var, exp] : m) {
            const UPoly* v = value_power(var, exp);
            if (!v || v->is_zero()) {
                vanished = true;
                break;
            }
            term = term * *v;
        }
        if (!vanished) acc += term;
    }
    return acc;
}

} // namespace witt
