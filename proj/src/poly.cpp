#include <cordal/poly.hpp>

#include <cordal/errors.hpp>

#include <sstream>

namespace cordal {

int Context::sentinel() const {
    internal_check(v != Variant::core, "core context has no sentinel index");
    return v == Variant::plus ? 0 : n + 1;
}

namespace {
thread_local std::size_t g_term_cap = 0;

void enforce_cap(std::size_t nterms) {
    if (g_term_cap != 0 && nterms > g_term_cap)
        throw BudgetExceeded("polynomial exceeded the active term budget");
}
}  // namespace

TermBudget::TermBudget(std::size_t cap) : saved_(g_term_cap) {
    g_term_cap = cap;
}

TermBudget::~TermBudget() { g_term_cap = saved_; }

std::size_t TermBudget::active() { return g_term_cap; }

void Poly::add_term(const Scalar& c, const Word& w) {
    // fold every a_ii^0 factor into the coefficient
    Scalar cc = c;
    Word ww;
    ww.reserve(w.size());
    for (const Gen& g : w) {
        if (g.i == g.j && g.x == 0)
            cc *= Scalar::gamma_one_plus_mu();
        else
            ww.push_back(g);
    }
    if (cc.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(ww), cc);
    if (!fresh) {
        it->second += cc;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        enforce_cap(terms_.size());
    }
}

Poly Poly::scalar(const Scalar& c) {
    Poly p;
    p.add_term(c, {});
    return p;
}

Poly Poly::generator(const Gen& g, const Scalar& c) {
    Poly p;
    p.add_term(c, {g});
    return p;
}

Poly Poly::term(const Scalar& c, const Word& w) {
    Poly p;
    p.add_term(c, w);
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            enforce_cap(terms_.size());
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(ca * cb, w);
        }
    }
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [w, tc] : terms_) {
        Scalar cc = tc * c;
        if (!cc.is_zero()) r.terms_.emplace(w, std::move(cc));
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const Gen& g : w)
            os << " a[" << g.i << "," << g.j << "]^" << g.x;
    }
    return os.str();
}

Gen splice(const Context& ctx, const Gen& left, const Gen& right) {
    int s = ctx.sentinel();
    internal_check(left.j == s && right.i == s, "splice: sentinel indices do not meet");
    return {left.i, right.j, left.x + right.x};
}

Poly connect(const Context& ctx, const Poly& P, const Poly& Q) {
    int s = ctx.sentinel();
    auto check_interior = [&](const Word& w, std::size_t lo, std::size_t hi, const char* side) {
        for (std::size_t t = lo; t < hi; ++t)
            if (w[t].i == s || w[t].j == s)
                throw InternalError(std::string("connect: interior sentinel in ") + side +
                                    " operand");
    };
    Poly r;
    for (const auto& [wp, cp] : P.terms()) {
        if (wp.empty() || wp.back().j != s || wp.back().i == s)
            throw InternalError("connect: left term lacks trailing sentinel generator");
        check_interior(wp, 0, wp.size() - 1, "left");
        for (const auto& [wq, cq] : Q.terms()) {
            if (wq.empty() || wq.front().i != s || wq.front().j == s)
                throw InternalError("connect: right term lacks leading sentinel generator");
            check_interior(wq, 1, wq.size(), "right");
            Word w(wp.begin(), wp.end() - 1);
            w.push_back(splice(ctx, wp.back(), wq.front()));
            w.insert(w.end(), wq.begin() + 1, wq.end());
            r.add_term(cp * cq, w);
        }
    }
    return r;
}

}  // namespace cordal
