// Noncommutative polynomials over the scalar ring in the generators
// a_{ij}^x, normalized modulo a_ii^0 = (1+mu)Gamma, plus the connect
// (splice) product used to build the defining ideal.
#pragma once

#include <cordal/scalar.hpp>

#include <map>
#include <vector>

namespace cordal {

// Index context. core: 1..n.  plus: 0..n (sentinel column/row 0).
// minus: 1..n+1 (sentinel n+1).
enum class Variant { core, plus, minus };

struct Context {
    int n = 1;
    Variant v = Variant::core;
    int lo() const { return v == Variant::plus ? 0 : 1; }
    int hi() const { return v == Variant::minus ? n + 1 : n; }
    // The spliceable sentinel index (plus: 0, minus: n+1); core has none.
    int sentinel() const;
    bool valid_index(int i) const { return i >= lo() && i <= hi(); }
    bool operator==(const Context&) const = default;
};

struct Gen {
    int i = 1;
    int j = 1;
    int x = 0;
    auto operator<=>(const Gen&) const = default;
};

using Word = std::vector<Gen>;

// Scoped cap on polynomial term counts for the current thread. While a
// budget is active, any Poly that would grow past the cap throws
// BudgetExceeded instead. Braid images grow exponentially in the worst
// case, so randomized property trials run under a budget and resample
// draws they cannot evaluate exactly. Nests; 0 means unlimited.
class TermBudget {
  public:
    explicit TermBudget(std::size_t cap);
    ~TermBudget();
    TermBudget(const TermBudget&) = delete;
    TermBudget& operator=(const TermBudget&) = delete;
    static std::size_t active();

  private:
    std::size_t saved_;
};

// Canonical term order: word length first, then lexicographic on the
// (i,j,x) triples. The scalar part of a polynomial is the empty word.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class Poly {
  public:
    using Terms = std::map<Word, Scalar, WordLess>;

    Poly() = default;
    static Poly zero() { return {}; }
    static Poly scalar(const Scalar& c);
    // Single generator (normalizes a_ii^0 to (1+mu)Gamma).
    static Poly generator(const Gen& g, const Scalar& c = Scalar::one());
    // coefficient * product of generators, normalized
    static Poly term(const Scalar& c, const Word& w);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    bool operator==(const Poly& o) const = default;
    Poly scaled(const Scalar& c) const;

    std::string str() const;

  private:
    Terms terms_;  // invariant: normalized words, nonzero scalars
    void add_term(const Scalar& c, const Word& w);  // normalizes
    friend Poly connect(const Context& ctx, const Poly& P, const Poly& Q);
};

// Splice product P * Q along the context's sentinel: every word of P must
// end with a_{i,s}^x, every word of Q must start with a_{s,j}^y; the pair
// fuses to a_{ij}^{x+y}. Bilinear.
Poly connect(const Context& ctx, const Poly& P, const Poly& Q);

// gen-level splice helper (used by tests)
Gen splice(const Context& ctx, const Gen& left, const Gen& right);

}  // namespace cordal
