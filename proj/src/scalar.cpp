#include <cordal/scalar.hpp>

#include <cordal/errors.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cordal {

Scalar Scalar::unit(Int c, int l, int m, int g) {
    Scalar s;
    if (c != 0) s.terms_.emplace_back(Expo{l, m, g}, std::move(c));
    return s;
}

Scalar Scalar::gamma_one_plus_mu() {
    Scalar s;
    s.terms_.emplace_back(Expo{0, 0, 1}, 1);
    s.terms_.emplace_back(Expo{0, 1, 1}, 1);
    return s;
}

void Scalar::prune() {
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first < b->first) {
            r.terms_.push_back(*a++);
        } else if (b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Int c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    // accumulate into a sorted flat map; operand term counts stay tiny
    std::vector<std::pair<Expo, Int>> acc;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo e{ea.l + eb.l, ea.m + eb.m, ea.g + eb.g};
            auto it = std::lower_bound(
                acc.begin(), acc.end(), e,
                [](const auto& t, const Expo& k) { return t.first < k; });
            if (it != acc.end() && it->first == e) {
                it->second += ca * cb;
            } else {
                acc.insert(it, {e, ca * cb});
            }
        }
    }
    Scalar r;
    r.terms_ = std::move(acc);
    r.prune();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::is_mu_power(int& s) const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = terms_.front();
    if (c != 1 || e.l != 0 || e.g != 0) return false;
    s = e.m;
    return true;
}

bool Scalar::is_ring_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.front().second;
    return c == 1 || c == -1;
}

Scalar Scalar::pow(const Scalar& base, long e) {
    if (e < 0) {
        internal_check(base.terms_.size() == 1, "scalar pow: negative power of a non-monomial");
        const auto& [ex, c] = base.terms_.front();
        internal_check(c == 1 || c == -1, "scalar pow: non-unit coefficient");
        Int cc = (c == -1 && (e % 2) != 0) ? -1 : 1;
        return unit(cc, static_cast<int>(ex.l * e), static_cast<int>(ex.m * e),
                    static_cast<int>(ex.g * e));
    }
    Scalar r = one(), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Int a = c > 0 ? c : Int(-c);
        bool bare = e.l == 0 && e.m == 0 && e.g == 0;
        if (a != 1 || bare) os << a.str();
        auto var = [&](const char* name, int exp) {
            if (exp == 0) return;
            os << name;
            if (exp != 1) os << "^" << exp;
        };
        var("l", e.l);
        var("m", e.m);
        var("g", e.g);
    }
    return os.str();
}

bool SpecParams::valid() const {
    if (d < 2) return false;
    auto unit = [&](std::int64_t v) { return std::gcd(((v % d) + d) % d, d) == 1; };
    return unit(l0) && unit(m0) && unit(g0);
}

std::int64_t mod_pow(std::int64_t b, long e, std::int64_t d) {
    b = ((b % d) + d) % d;
    if (e < 0) {
        // modular inverse via extended euclid; base must be a unit mod d
        std::int64_t t = 0, nt = 1, r = d, nr = b;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        internal_check(r == 1, "mod_pow: non-unit base with negative exponent");
        b = ((t % d) + d) % d;
        e = -e;
    }
    std::int64_t acc = 1 % d;
    while (e > 0) {
        if (e & 1) acc = acc * b % d;
        b = b * b % d;
        e >>= 1;
    }
    return acc;
}

std::int64_t specialize(const Scalar& s, const SpecParams& p) {
    std::int64_t acc = 0;
    for (const auto& [e, c] : s.terms()) {
        std::int64_t v = static_cast<std::int64_t>(c % p.d);
        v = v * mod_pow(p.l0, e.l, p.d) % p.d;
        v = v * mod_pow(p.m0, e.m, p.d) % p.d;
        v = v * mod_pow(p.g0, e.g, p.d) % p.d;
        acc = (acc + v) % p.d;
    }
    return ((acc % p.d) + p.d) % p.d;
}

}  // namespace cordal
