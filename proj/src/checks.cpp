#include <cordal/checks.hpp>

#include <cordal/action.hpp>
#include <cordal/augment.hpp>
#include <cordal/braid.hpp>
#include <cordal/errors.hpp>
#include <cordal/oracle.hpp>
#include <cordal/poly.hpp>
#include <cordal/relations.hpp>
#include <cordal/scalar.hpp>
#include <cordal/torus.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

namespace cordal {

namespace {

struct Reporter {
    std::vector<CheckResult> out;

    template <typename F>
    void run(const std::string& name, F&& fn) {
        // set CORDAL_CHECK_TRACE to see progress when hunting a slow check
        if (std::getenv("CORDAL_CHECK_TRACE"))
            std::fprintf(stderr, "[check] %s\n", name.c_str());
        CheckResult r{name, false, {}};
        try {
            std::string detail;
            r.passed = fn(detail);
            if (!r.passed)
                r.detail = detail.empty() ? "identity failed" : detail;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
};

int rand_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Scalar rand_scalar(std::mt19937& rng) {
    Scalar s;
    const int nterms = rand_int(rng, 1, 4);
    for (int t = 0; t < nterms; ++t) {
        int c = rand_int(rng, -5, 5);
        if (c == 0) c = 1;
        s += Scalar::unit(c, rand_int(rng, -3, 3), rand_int(rng, -3, 3),
                          rand_int(rng, -3, 3));
    }
    return s;
}

BraidWord rand_word(std::mt19937& rng, int n, int len) {
    BraidWord w;
    for (int t = 0; t < len; ++t)
        w.push_back({rand_int(rng, 0, n - 1), rand_int(rng, 0, 1) ? 1 : -1});
    return w;
}

Braid cat(const Braid& a, const Braid& b) {
    Braid r = a;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
}

std::vector<std::int64_t> units_mod(std::int64_t d) {
    std::vector<std::int64_t> us;
    for (std::int64_t u = 1; u < d; ++u)
        if (std::gcd(u, d) == 1) us.push_back(u);
    return us;
}

bool phi_eq(const Context& ctx, const BraidWord& w1, const BraidWord& w2,
            const std::vector<int>& xs) {
    for (int i = ctx.lo(); i <= ctx.hi(); ++i)
        for (int j = ctx.lo(); j <= ctx.hi(); ++j)
            for (int x : xs) {
                const Poly g = Poly::generator({i, j, x});
                if (!(phi_word(ctx, w1, g) == phi_word(ctx, w2, g)))
                    return false;
            }
    return true;
}

constexpr std::array<Variant, 3> kVariants{Variant::core, Variant::plus,
                                           Variant::minus};

// Term budget for randomized property trials. Braid images grow
// exponentially in the worst case, so a uniform sampler occasionally draws
// an instance whose exact evaluation cannot finish; trials run under this
// cap and resample any draw that trips it.
constexpr std::size_t kPhiBudget = 200000;

// random polynomial shaped for the left slot of connect: words of core
// generators ending in the sentinel column a_{k,s}^z
Poly rand_connectable(std::mt19937& rng, const Context& ctx, bool left) {
    const int s = ctx.sentinel();
    Poly p;
    const int nterms = rand_int(rng, 1, 3);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        const int interior = rand_int(rng, 0, 2);
        for (int q = 0; q < interior; ++q)
            w.push_back({rand_int(rng, 1, ctx.n), rand_int(rng, 1, ctx.n),
                         rand_int(rng, -2, 2)});
        const Gen boundary{left ? rand_int(rng, 1, ctx.n) : s,
                           left ? s : rand_int(rng, 1, ctx.n),
                           rand_int(rng, -2, 2)};
        if (left)
            w.push_back(boundary);
        else
            w.insert(w.begin(), boundary);
        p += Poly::term(rand_scalar(rng), w);
    }
    return p;
}

std::int64_t eval_vpoly(const VPoly& vp, const SpecParams& spec,
                        const std::vector<std::int64_t>& asg) {
    std::int64_t total = 0;
    for (const auto& [w, c] : vp) {
        std::int64_t v = specialize(c, spec);
        for (int r : w) v = v * asg[static_cast<std::size_t>(r - 1)] % spec.d;
        total = (total + v) % spec.d;
    }
    return total;
}

// the shared (d, lambda0, mu0, Gamma0) grid for augmentation identities
constexpr std::array<std::array<std::int64_t, 4>, 10> kAugGrid{{
    {2, 1, 1, 1},
    {3, 1, 1, 2},
    {3, 2, 2, 1},
    {5, 1, 1, 3},
    {5, 2, 3, 4},
    {4, 1, 1, 3},
    {5, 4, 4, 2},
    {3, 2, 1, 2},
    {5, 3, 2, 2},
    {4, 3, 3, 1},
}};

// ---------------------------------------------------------------- ring

void ring_checks(Reporter& rep, std::mt19937& rng, int trials) {
    rep.run("ring: specialize is a ring homomorphism", [&](std::string& d) {
        for (int t = 0; t < std::max(trials / 10, 8); ++t) {
            const Scalar a = rand_scalar(rng), b = rand_scalar(rng);
            for (std::int64_t mod : {2, 3, 4, 5}) {
                for (std::int64_t l0 : units_mod(mod))
                    for (std::int64_t m0 : units_mod(mod))
                        for (std::int64_t g0 : units_mod(mod)) {
                            const SpecParams sp{mod, l0, m0, g0};
                            const auto ea = specialize(a, sp);
                            const auto eb = specialize(b, sp);
                            if (specialize(a * b, sp) != ea * eb % mod ||
                                specialize(a + b, sp) != (ea + eb) % mod) {
                                d = "mismatch at d=" + std::to_string(mod);
                                return false;
                            }
                        }
            }
        }
        return true;
    });
    rep.run("ring: sums independent of insertion order", [&](std::string&) {
        for (int t = 0; t < std::max(trials / 10, 8); ++t) {
            std::vector<Scalar> parts;
            for (int q = 0; q < 6; ++q) parts.push_back(rand_scalar(rng));
            Scalar fwd, rev;
            for (const Scalar& s : parts) fwd += s;
            for (auto it = parts.rbegin(); it != parts.rend(); ++it)
                rev += *it;
            if (!(fwd == rev)) return false;
        }
        return true;
    });
}

// --------------------------------------------------------------- braid

void braid_checks(Reporter& rep, std::mt19937& rng, int trials) {
    const int rounds = std::max(trials / 10, 10);
    rep.run("braid: reflect and embeddings are homomorphisms",
            [&](std::string&) {
                for (int t = 0; t < rounds; ++t) {
                    const int n = rand_int(rng, 2, 4);
                    const Braid u{n, rand_word(rng, n, rand_int(rng, 1, 5))};
                    const Braid v{n, rand_word(rng, n, rand_int(rng, 1, 5))};
                    const Braid uv = cat(u, v);
                    if (!(free_reduce(reflect(uv)) ==
                          free_reduce(cat(reflect(u), reflect(v)))))
                        return false;
                    if (!(free_reduce(eps_minus(uv)) ==
                          free_reduce(cat(eps_minus(u), eps_minus(v)))))
                        return false;
                    if (!(free_reduce(eps_plus(uv)) ==
                          free_reduce(cat(eps_plus(u), eps_plus(v)))))
                        return false;
                }
                return true;
            });
    rep.run("braid: reflect twice is the identity", [&](std::string&) {
        for (int t = 0; t < rounds; ++t) {
            const int n = rand_int(rng, 1, 4);
            const Braid u{n, rand_word(rng, n, rand_int(rng, 0, 5))};
            if (!(free_reduce(reflect(reflect(u))) == free_reduce(u)))
                return false;
        }
        return true;
    });
    rep.run("braid: reflect swaps the two embeddings", [&](std::string&) {
        for (int t = 0; t < rounds; ++t) {
            const int n = rand_int(rng, 1, 4);
            const Braid u{n, rand_word(rng, n, rand_int(rng, 0, 5))};
            if (!(free_reduce(reflect(eps_plus(u))) ==
                  free_reduce(eps_minus(reflect(u)))))
                return false;
        }
        return true;
    });
    rep.run("braid: permutation is a homomorphism", [&](std::string&) {
        for (int t = 0; t < rounds; ++t) {
            const int n = rand_int(rng, 1, 4);
            const Braid u{n, rand_word(rng, n, rand_int(rng, 0, 5))};
            const Braid v{n, rand_word(rng, n, rand_int(rng, 0, 5))};
            const auto pu = permutation(u), pv = permutation(v);
            const auto puv = permutation(cat(u, v));
            for (int i = 1; i <= n; ++i)
                if (puv[static_cast<std::size_t>(i)] !=
                    pv[static_cast<std::size_t>(
                        pu[static_cast<std::size_t>(i)])])
                    return false;
        }
        return true;
    });
}

// ------------------------------------------------------------- algebra

void algebra_checks(Reporter& rep, std::mt19937& rng, int trials) {
    const int rounds = std::max(trials / 10, 10);
    rep.run("algebra: normalization is idempotent", [&](std::string&) {
        for (int t = 0; t < rounds; ++t) {
            const int n = rand_int(rng, 1, 3);
            Poly p;
            for (int q = 0; q < 3; ++q) {
                Word w;
                for (int g = 0, len = rand_int(rng, 0, 3); g < len; ++g) {
                    const int i = rand_int(rng, 1, n);
                    // bias toward a_ii^0 factors so folding actually fires
                    const bool diag = rand_int(rng, 0, 1) == 0;
                    w.push_back(
                        {i, diag ? i : rand_int(rng, 1, n),
                         diag ? 0 : rand_int(rng, -2, 2)});
                }
                p += Poly::term(rand_scalar(rng), w);
            }
            Poly rebuilt;
            for (const auto& [w, c] : p.terms())
                rebuilt += Poly::term(c, w);
            if (!(rebuilt == p)) return false;
        }
        return true;
    });
    rep.run("algebra: connect is bilinear", [&](std::string&) {
        for (int t = 0; t < rounds; ++t) {
            const int n = rand_int(rng, 1, 3);
            const Context ctx{n, rand_int(rng, 0, 1) ? Variant::minus
                                                     : Variant::plus};
            const Poly p1 = rand_connectable(rng, ctx, true);
            const Poly p2 = rand_connectable(rng, ctx, true);
            const Poly q = rand_connectable(rng, ctx, false);
            if (!(connect(ctx, p1 + p2, q) ==
                  connect(ctx, p1, q) + connect(ctx, p2, q)))
                return false;
            if (!(connect(ctx, p1, q).scaled(Scalar::mu(1)) ==
                  connect(ctx, p1.scaled(Scalar::mu(1)), q)))
                return false;
        }
        return true;
    });
    rep.run("algebra: term order is insertion-insensitive", [&](std::string&) {
        for (int t = 0; t < rounds; ++t) {
            const int n = rand_int(rng, 1, 3);
            std::vector<std::pair<Scalar, Word>> parts;
            for (int q = 0; q < 5; ++q) {
                Word w;
                for (int g = 0, len = rand_int(rng, 0, 2); g < len; ++g)
                    w.push_back({rand_int(rng, 1, n), rand_int(rng, 1, n),
                                 rand_int(rng, -1, 1)});
                parts.emplace_back(rand_scalar(rng), w);
            }
            Poly fwd, rev;
            for (const auto& [c, w] : parts) fwd += Poly::term(c, w);
            for (auto it = parts.rbegin(); it != parts.rend(); ++it)
                rev += Poly::term(it->first, it->second);
            if (!(fwd == rev)) return false;
        }
        return true;
    });
}

// -------------------------------------------------------------- action

void action_checks(Reporter& rep, std::mt19937& rng, int trials) {
    rep.run("action: respects the group presentation", [&](std::string& d) {
        const std::vector<int> xs{-1, 0, 2};
        for (Variant v : kVariants)
            for (int n = 2; n <= 4; ++n) {
                const Context ctx{n, v};
                bool ok = true;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 2; b < n; ++b)
                        ok = ok && phi_eq(ctx, {{a, 1}, {b, 1}},
                                          {{b, 1}, {a, 1}}, xs);
                for (int a = 1; a + 1 < n; ++a)
                    ok = ok && phi_eq(ctx, {{a, 1}, {a + 1, 1}, {a, 1}},
                                      {{a + 1, 1}, {a, 1}, {a + 1, 1}}, xs);
                ok = ok &&
                     phi_eq(ctx, {{0, 1}, {1, 1}, {0, 1}, {1, 1}},
                            {{1, 1}, {0, 1}, {1, 1}, {0, 1}}, xs);
                for (int a = 0; a < n; ++a) {
                    ok = ok && phi_eq(ctx, {{a, 1}, {a, -1}}, {}, xs);
                    ok = ok && phi_eq(ctx, {{a, -1}, {a, 1}}, {}, xs);
                }
                if (!ok) {
                    d = "failure at n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });
    rep.run("action: sentinel actions restrict to the core action",
            [&](std::string&) {
                for (int t = 0; t < std::max(trials / 10, 10); ++t) {
                    const int n = rand_int(rng, 1, 3);
                    const Letter l{rand_int(rng, 0, n - 1),
                                   rand_int(rng, 0, 1) ? 1 : -1};
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j)
                            for (int x = -2; x <= 2; ++x) {
                                const Poly want =
                                    phi_letter({n, Variant::core}, l,
                                               Gen{i, j, x});
                                if (!(phi_letter({n, Variant::plus}, l,
                                                 Gen{i, j, x}) == want) ||
                                    !(phi_letter({n, Variant::minus}, l,
                                                 Gen{i, j, x}) == want))
                                    return false;
                            }
                }
                return true;
            });
    rep.run("action: the splice product is equivariant", [&](std::string& d) {
        int done = 0, dropped = 0;
        while (done < std::max(trials / 10, 10)) {
            if (dropped > 500) {
                d = "could not sample words within the term budget";
                return false;
            }
            const int n = rand_int(rng, 1, 3);
            const Context ctx{n, rand_int(rng, 0, 1) ? Variant::minus
                                                     : Variant::plus};
            const Context core{n, Variant::core};
            const BraidWord w = rand_word(rng, n, rand_int(rng, 1, 4));
            const Poly p = rand_connectable(rng, ctx, true);
            const Poly q = rand_connectable(rng, ctx, false);
            try {
                TermBudget guard(kPhiBudget);
                const Poly lhs = phi_word(core, w, connect(ctx, p, q));
                const Poly rhs =
                    connect(ctx, phi_word(ctx, w, p), phi_word(ctx, w, q));
                if (!(lhs == rhs)) return false;
            } catch (const BudgetExceeded&) {
                ++dropped;
                continue;
            }
            ++done;
        }
        return true;
    });
    rep.run("action: left matrices compose contravariantly",
            [&](std::string& d) {
                int done = 0, dropped = 0;
                while (done < std::max(trials / 20, 6)) {
                    if (dropped > 500) {
                        d = "could not sample words within the term budget";
                        return false;
                    }
                    const int n = rand_int(rng, 2, 3);
                    const Context ctx{n, rand_int(rng, 0, 1)
                                             ? Variant::minus
                                             : Variant::plus};
                    const Context core{n, Variant::core};
                    const BraidWord b1 = rand_word(rng, n, rand_int(rng, 1, 3));
                    const BraidWord b2 = rand_word(rng, n, rand_int(rng, 1, 3));
                    BraidWord b12 = b1;
                    b12.insert(b12.end(), b2.begin(), b2.end());
                    try {
                        TermBudget guard(kPhiBudget);
                        for (int i = 1; i <= n; ++i)
                            for (int x = -1; x <= 1; ++x) {
                                const MatrixSlice lhs =
                                    probe_left(ctx, b12, i, x);
                                MatrixSlice rhs;
                                for (const auto& [kz, cA] :
                                     probe_left(ctx, b2, i, x)) {
                                    const Poly mapped =
                                        phi_word(core, b1, cA);
                                    for (const auto& [kz2, cB] : probe_left(
                                             ctx, b1, kz.first, kz.second))
                                        rhs[kz2] += mapped * cB;
                                }
                                std::erase_if(rhs, [](const auto& kv) {
                                    return kv.second.is_zero();
                                });
                                if (!(lhs == rhs)) return false;
                            }
                    } catch (const BudgetExceeded&) {
                        ++dropped;
                        continue;
                    }
                    ++done;
                }
                return true;
            });
    rep.run("action: left matrices invert on the probed window",
            [&](std::string& d) {
                int done = 0, dropped = 0;
                while (done < std::max(trials / 20, 4)) {
                    if (dropped > 500) {
                        d = "could not sample words within the term budget";
                        return false;
                    }
                    const int n = rand_int(rng, 2, 3);
                    const Context ctx{n, rand_int(rng, 0, 1)
                                             ? Variant::minus
                                             : Variant::plus};
                    const Context core{n, Variant::core};
                    const BraidWord b = rand_word(rng, n, rand_int(rng, 1, 3));
                    Braid binv = inverse(Braid{n, b});
                    try {
                        TermBudget guard(kPhiBudget);
                        for (int i = 1; i <= n; ++i)
                            for (int x = -1; x <= 1; ++x) {
                                MatrixSlice prod;
                                for (const auto& [kz, cA] :
                                     probe_left(ctx, binv.word, i, x)) {
                                    const Poly mapped = phi_word(core, b, cA);
                                    for (const auto& [kz2, cB] : probe_left(
                                             ctx, b, kz.first, kz.second))
                                        prod[kz2] += mapped * cB;
                                }
                                std::erase_if(prod, [](const auto& kv) {
                                    return kv.second.is_zero();
                                });
                                const MatrixSlice want{
                                    {{i, x}, Poly::scalar(Scalar::one())}};
                                if (!(prod == want)) return false;
                            }
                    } catch (const BudgetExceeded&) {
                        ++dropped;
                        continue;
                    }
                    ++done;
                }
                return true;
            });
    rep.run("action: row-column assembly recovers the core action",
            [&](std::string&) {
                for (int t = 0; t < std::max(trials / 20, 4); ++t) {
                    const int n = rand_int(rng, 2, 3);
                    const Context ctx{n, rand_int(rng, 0, 1)
                                             ? Variant::minus
                                             : Variant::plus};
                    const Context core{n, Variant::core};
                    const BraidWord b = rand_word(rng, n, rand_int(rng, 1, 3));
                    const std::array<std::pair<int, int>, 3> xys{
                        {{0, 0}, {1, -1}, {-1, 2}}};
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j)
                            for (const auto& [x, y] : xys) {
                                Poly acc;
                                for (const auto& [kz, cL] :
                                     probe_left(ctx, b, i, x))
                                    for (const auto& [kz2, cR] :
                                         probe_right(ctx, b, j, y))
                                        acc += cL *
                                               Poly::generator(
                                                   {kz.first, kz2.first,
                                                    kz.second + kz2.second}) *
                                               cR;
                                if (!(acc ==
                                      phi_word(core, b,
                                               Poly::generator({i, j, x + y}))))
                                    return false;
                            }
                }
                return true;
            });
    rep.run("action: both sentinel matrices agree off the axis letter",
            [&](std::string&) {
                for (int t = 0; t < std::max(trials / 20, 4); ++t) {
                    const int n = rand_int(rng, 2, 3);
                    BraidWord b;
                    for (int q = 0, len = rand_int(rng, 1, 4); q < len; ++q)
                        b.push_back({rand_int(rng, 1, n - 1),
                                     rand_int(rng, 0, 1) ? 1 : -1});
                    for (int i = 1; i <= n; ++i)
                        for (int x = -1; x <= 1; ++x) {
                            if (!(probe_left({n, Variant::minus}, b, i, x) ==
                                  probe_left({n, Variant::plus}, b, i, x)))
                                return false;
                            if (!(probe_right({n, Variant::minus}, b, i, x) ==
                                  probe_right({n, Variant::plus}, b, i, x)))
                                return false;
                        }
                }
                return true;
            });
}

// ----------------------------------------------------------- relations

void relations_checks(Reporter& rep, std::mt19937& rng, int trials) {
    rep.run("relations: ideal membership of the twisted difference",
            [&](std::string&) {
                // a_ij^{x+y} - c_i Phi(a_ij^{x+y}) c_j^{-1} must expand into
                // family 1 plus left-multiplied family-2 relations
                for (int t = 0; t < std::max(trials / 20, 6); ++t) {
                    const int n = rand_int(rng, 1, 3);
                    const int f = rand_int(rng, -1, 1);
                    const Braid b{n, rand_word(rng, n, rand_int(rng, 1, 4))};
                    SentinelAction minus_act({n, Variant::minus}, b.word);
                    SentinelAction plus_act({n, Variant::plus}, b.word);
                    const Context core{n, Variant::core};
                    const int i = rand_int(rng, 1, n), j = rand_int(rng, 1, n);
                    const int x = rand_int(rng, -1, 1),
                              y = rand_int(rng, -1, 1);
                    const Scalar ci = lambda_entry(f, 1, 1, i);
                    const Scalar cjinv =
                        Scalar::pow(lambda_entry(f, 1, 1, j), -1);
                    const Poly lhs =
                        Poly::generator({i, j, x + y}) -
                        phi_word(core, b.word,
                                 Poly::generator({i, j, x + y}))
                            .scaled(ci * cjinv);
                    Poly rhs =
                        relation(minus_act, plus_act, f, {1, i, j, x, y});
                    for (const auto& [kz, entry] :
                         minus_act.row_left(i, x)) {
                        const Poly rel2 =
                            relation(minus_act, plus_act, f,
                                     {2, kz.first, j, kz.second, y});
                        rhs += (entry * rel2).scaled(ci);
                    }
                    if (!(lhs == rhs)) return false;
                }
                return true;
            });
    rep.run("relations: invariant under free reduction of the braid",
            [&](std::string&) {
                for (int t = 0; t < std::max(trials / 20, 4); ++t) {
                    const int n = rand_int(rng, 1, 3);
                    Braid b{n, rand_word(rng, n, rand_int(rng, 1, 3))};
                    Braid padded = b;
                    const std::size_t at = static_cast<std::size_t>(
                        rand_int(rng, 0,
                                 static_cast<int>(padded.word.size())));
                    const Letter l{rand_int(rng, 0, n - 1), 1};
                    padded.word.insert(padded.word.begin() +
                                           static_cast<std::ptrdiff_t>(at),
                                       {l, {l.k, -1}});
                    const RelationSet a = windowed_relations_serial(b, 0, 1);
                    const RelationSet c =
                        windowed_relations_serial(padded, 0, 1);
                    if (!(a.items == c.items)) return false;
                }
                return true;
            });
    rep.run("relations: parallel kernel matches the serial path",
            [&](std::string&) {
                for (int t = 0; t < 2; ++t) {
                    const int n = rand_int(rng, 1, 3);
                    const Braid b{n, rand_word(rng, n, rand_int(rng, 1, 4))};
                    const RelationSet s = windowed_relations_serial(b, 1, 2);
                    const RelationSet p1 = windowed_relations(b, 1, 2, 1);
                    const RelationSet p4 = windowed_relations(b, 1, 2, 4);
                    if (!(s.items == p1.items) || !(s.items == p4.items))
                        return false;
                }
                return true;
            });
}

// --------------------------------------------------------------- torus

void torus_checks(Reporter& rep, std::mt19937& rng, int trials) {
    rep.run("torus: closure data matches the closed form", [&](std::string& d) {
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 5; ++q) {
                if (std::gcd(p, q) != 1) continue;
                const Braid b = torus_braid(p, q);
                const ClosureData data = detect_closure(b);
                if (data.period != q || data.mu_total != q) {
                    d = "period mismatch at (" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
                    return false;
                }
                const Context plus{p, Variant::plus};
                for (int i = 1; i <= p; ++i) {
                    const int s = (i - 1 + q) / p;
                    const OrbitStep want{(i - 1 + q) % p + 1, s, s};
                    if (!(data.left[static_cast<std::size_t>(i)] == want) ||
                        !(data.right[static_cast<std::size_t>(i)] == want)) {
                        d = "orbit mismatch at (" + std::to_string(p) + "," +
                            std::to_string(q) + ")";
                        return false;
                    }
                    for (int x = -3; x <= 3; ++x) {
                        const Poly img = phi_word(
                            plus, b.word, Poly::generator({i, 0, x}));
                        const Poly wantp = Poly::generator(
                            {want.k, 0, x - want.t}, Scalar::mu(want.s));
                        if (!(img == wantp)) {
                            d = "image mismatch at (" + std::to_string(p) +
                                "," + std::to_string(q) + ")";
                            return false;
                        }
                    }
                }
            }
        return true;
    });
    rep.run("torus: rewriting is lift-independent", [&](std::string&) {
        for (int t = 0; t < std::max(trials / 10, 20); ++t) {
            const int p = rand_int(rng, 1, 4);
            int q = rand_int(rng, 1, 5);
            while (std::gcd(p, q) != 1) q = rand_int(rng, 1, 5);
            const int i = rand_int(rng, 0, p - 1), j = rand_int(rng, 0, p - 1);
            const int x = rand_int(rng, -4, 6), f = rand_int(rng, -1, 1);
            const CoreImage base = rewrite_bgen(p, q, f, i, j, x);
            // redo the reduction with both index lifts shifted one period up
            auto via_lifts = [&](int extra1, int extra2) {
                int k1 = 0, k2 = 0;
                while ((k1 * q) % p != i) ++k1;
                while ((k2 * q) % p != j) ++k2;
                k1 += extra1 * p;
                k2 += extra2 * p;
                const auto [g1, h1] = g_h(0, k1, p, q);
                const auto [g2, h2] = g_h(0, k2, p, q);
                Scalar sc = Scalar::unit(1, h2 - h1,
                                         (g2 - g1) - f * (h2 - h1), 0);
                const int u = x + g1 - g2;
                const int r = ((u % q) + q) % q;
                const long m = (static_cast<long>(u) - r) / q;
                sc *= Scalar::pow(Scalar::unit(1, 1, q - f, 0), m);
                return CoreImage{sc, r};
            };
            for (const auto& [e1, e2] :
                 std::array<std::pair<int, int>, 3>{{{1, 0}, {0, 1}, {2, 2}}}) {
                const CoreImage other = via_lifts(e1, e2);
                if (!(other.coeff == base.coeff) || other.r != base.r)
                    return false;
            }
        }
        return true;
    });
    rep.run("torus: closed-form rewrite matches the detected orbit",
            [&](std::string&) {
                for (int p = 1; p <= 3; ++p)
                    for (int q = 1; q <= 4; ++q) {
                        if (std::gcd(p, q) != 1) continue;
                        const ClosureData data =
                            detect_closure(torus_braid(p, q));
                        for (int f = -1; f <= 1; ++f)
                            for (int i = 1; i <= p; ++i)
                                for (int j = 1; j <= p; ++j)
                                    for (int x = -3; x <= 5; ++x) {
                                        const CoreImage a = rewrite_to_core(
                                            data, f, {i, j, x});
                                        const CoreImage b = rewrite_bgen(
                                            p, q, f, i - 1, j - 1, x);
                                        if (!(a.coeff == b.coeff) ||
                                            a.r != b.r)
                                            return false;
                                    }
                    }
                return true;
            });
    rep.run("torus: presentations are sound at satisfying points",
            [&](std::string& d) {
                const std::array<std::array<int, 6>, 2> cases{{
                    {1, 2, 0, 5, 1, 3},  // p, q, f, d, (lambda=mu=1), gamma
                    {1, 3, 0, 3, 1, 2},
                }};
                for (const auto& c : cases) {
                    const int p = c[0], q = c[1], f = c[2];
                    const SpecParams spec{c[3], c[4], c[4], c[5]};
                    const Braid b = torus_braid(p, q);
                    const ClosureData data = detect_closure(b);
                    const Presentation pres = braid_presentation(b, f);
                    // scan for the first satisfying assignment
                    std::vector<std::int64_t> asg(
                        static_cast<std::size_t>(pres.variables), 0);
                    bool found = false;
                    while (!found) {
                        bool ok = true;
                        for (const VPoly& vp : pres.relations)
                            if (eval_vpoly(vp, spec, asg) != 0) {
                                ok = false;
                                break;
                            }
                        if (ok) {
                            found = true;
                            break;
                        }
                        int pos = pres.variables - 1;
                        while (pos >= 0 &&
                               asg[static_cast<std::size_t>(pos)] ==
                                   spec.d - 1) {
                            asg[static_cast<std::size_t>(pos)] = 0;
                            --pos;
                        }
                        if (pos < 0) break;
                        ++asg[static_cast<std::size_t>(pos)];
                    }
                    if (!found) {
                        d = "presentation has no satisfying point";
                        return false;
                    }
                    // relations beyond the stabilized window must vanish too
                    SentinelAction minus_act({p, Variant::minus}, b.word);
                    SentinelAction plus_act({p, Variant::plus}, b.word);
                    const int wide = p + 2 * q + 2;
                    for (int fam = 1; fam <= 2; ++fam)
                        for (int t = 0; t < 12; ++t) {
                            const RelationKey key{
                                fam, rand_int(rng, 1, p), rand_int(rng, 1, p),
                                rand_int(rng, -2, wide),
                                rand_int(rng, -2, wide)};
                            const Poly rel = relation(minus_act, plus_act, f,
                                                      key);
                            if (eval_vpoly(rewrite_poly(data, f, rel), spec,
                                           asg) != 0) {
                                d = "windowed relation does not vanish";
                                return false;
                            }
                        }
                }
                return true;
            });
}

// ------------------------------------------------------------- augment

void augment_checks(Reporter& rep, std::mt19937&, int) {
    rep.run("augment: the constant assignment always augments",
            [&](std::string& d) {
                const std::array<std::pair<int, int>, 4> knots{
                    {{1, 2}, {1, 3}, {1, 4}, {3, 2}}};
                const std::array<std::pair<std::int64_t, std::int64_t>, 4>
                    params{{{3, 1}, {3, 2}, {5, 2}, {4, 3}}};
                for (const auto& [p, q] : knots) {
                    const Presentation pres = finite_presentation(p, q, 0);
                    for (const auto& [mod, g0] : params) {
                        if (!constant_augmentation_check(pres, mod, g0)) {
                            d = "constant check failed for (" +
                                std::to_string(p) + "," + std::to_string(q) +
                                ")";
                            return false;
                        }
                        const SpecParams spec{mod, 1, 1, g0};
                        if (count_augmentations(pres, spec) < 1) {
                            d = "count dropped below 1";
                            return false;
                        }
                    }
                }
                return true;
            });
    rep.run("augment: destabilization chain preserves counts",
            [&](std::string& d) {
                for (int p = 1; p <= 4; ++p)
                    for (int f = -1; f <= 1; ++f) {
                        const Presentation a =
                            finite_presentation(p, 1, f);
                        const Presentation b =
                            finite_presentation(1, 1, f + p - 1);
                        for (const auto& g : kAugGrid) {
                            const SpecParams spec{g[0], g[1], g[2], g[3]};
                            if (count_augmentations(a, spec) !=
                                count_augmentations(b, spec)) {
                                d = "mismatch at p=" + std::to_string(p);
                                return false;
                            }
                        }
                    }
                return true;
            });
    rep.run("augment: the two-strand torus pair agree", [&](std::string&) {
        for (int f = -1; f <= 1; ++f) {
            const Presentation a = finite_presentation(3, 2, f);
            const Presentation b = finite_presentation(1, 2, f);
            for (const auto& g : kAugGrid) {
                const SpecParams spec{g[0], g[1], g[2], g[3]};
                if (count_augmentations(a, spec) !=
                    count_augmentations(b, spec))
                    return false;
            }
        }
        return true;
    });
    rep.run("augment: inverse braids mirror the counts", [&](std::string&) {
        const std::array<std::pair<int, int>, 4> knots{
            {{1, 2}, {1, 3}, {2, 1}, {3, 1}}};
        for (const auto& [p, q] : knots) {
            const Braid b = torus_braid(p, q);
            const Presentation pi = braid_presentation(inverse(b), 1);
            const Presentation pd = braid_presentation(b, -1);
            for (const auto& g : kAugGrid) {
                const SpecParams spec{g[0], g[1], g[2], g[3]};
                const SpecParams mirrored{
                    g[0], mod_pow(g[1], -1, g[0]), g[2], g[3]};
                if (count_augmentations(pi, spec) !=
                    count_augmentations(pd, mirrored))
                    return false;
            }
        }
        return true;
    });
    rep.run("augment: counts independent of partitioning", [&](std::string&) {
        const Presentation pres = finite_presentation(1, 4, 0);
        const SpecParams spec{5, 2, 3, 4};
        const auto serial = count_augmentations_serial(pres, spec);
        return count_augmentations(pres, spec, 1) == serial &&
               count_augmentations(pres, spec, 4) == serial;
    });
}

// -------------------------------------------------------------- oracle

void oracle_checks(Reporter& rep, std::mt19937& rng, int trials) {
    using oracle::Curve;
    using oracle::Handedness;

    rep.run("oracle: single letters match the action tables",
            [&](std::string& d) {
                int cw_misses = 0;
                for (Variant v : kVariants)
                    for (int n = 1; n <= 3; ++n) {
                        const Context ctx{n, v};
                        for (int k = 0; k < n; ++k)
                            for (int sign : {1, -1})
                                for (int i = ctx.lo(); i <= ctx.hi(); ++i)
                                    for (int j = ctx.lo(); j <= ctx.hi(); ++j)
                                        for (int x = -2; x <= 2; ++x) {
                                            const Letter l{k, sign};
                                            const Poly want = phi_letter(
                                                ctx, l, Gen{i, j, x});
                                            if (!(oracle::oracle_phi(
                                                      ctx, {l}, {i, j, x}) ==
                                                  want)) {
                                                d = "ccw mismatch";
                                                return false;
                                            }
                                            if (!(oracle::oracle_phi(
                                                      ctx, {l}, {i, j, x},
                                                      Handedness::cw) ==
                                                  want))
                                                ++cw_misses;
                                        }
                    }
                if (cw_misses == 0) {
                    d = "clockwise convention never disagreed";
                    return false;
                }
                return true;
            });
    rep.run("oracle: random words match the action", [&](std::string&) {
        for (int t = 0; t < std::max(trials, 20); ++t) {
            const int n = rand_int(rng, 1, 3);
            const Variant v = kVariants[static_cast<std::size_t>(
                rand_int(rng, 0, 2))];
            const Context ctx{n, v};
            const BraidWord w = rand_word(rng, n, rand_int(rng, 1, 6));
            const int i = rand_int(rng, ctx.lo(), ctx.hi());
            const int j = rand_int(rng, ctx.lo(), ctx.hi());
            const int x = rand_int(rng, -2, 2);
            if (!(oracle::oracle_phi(ctx, w, {i, j, x}) ==
                  phi_word(ctx, w, Poly::generator({i, j, x}))))
                return false;
        }
        return true;
    });
    rep.run("oracle: curve action respects the group presentation",
            [&](std::string&) {
                auto word_eq = [](const Context& ctx, const BraidWord& w1,
                                  const BraidWord& w2, const Curve& c) {
                    Curve a = c, b = c;
                    for (auto it = w1.rbegin(); it != w1.rend(); ++it)
                        a = oracle::artin_apply(ctx, *it, a);
                    for (auto it = w2.rbegin(); it != w2.rend(); ++it)
                        b = oracle::artin_apply(ctx, *it, b);
                    return a == b;
                };
                for (Variant v : kVariants)
                    for (int n = 2; n <= 4; ++n) {
                        const Context ctx{n, v};
                        std::vector<std::pair<BraidWord, BraidWord>> pairs;
                        for (int a = 0; a < n; ++a) {
                            for (int b = a + 2; b < n; ++b)
                                pairs.push_back(
                                    {{{a, 1}, {b, 1}}, {{b, 1}, {a, 1}}});
                            pairs.push_back({{{a, 1}, {a, -1}}, {}});
                            pairs.push_back({{{a, -1}, {a, 1}}, {}});
                        }
                        for (int a = 1; a + 1 < n; ++a)
                            pairs.push_back({{{a, 1}, {a + 1, 1}, {a, 1}},
                                             {{a + 1, 1}, {a, 1}, {a + 1, 1}}});
                        pairs.push_back({{{0, 1}, {1, 1}, {0, 1}, {1, 1}},
                                         {{1, 1}, {0, 1}, {1, 1}, {0, 1}}});
                        for (const auto& [w1, w2] : pairs)
                            for (int i = ctx.lo(); i <= ctx.hi(); ++i)
                                for (int j = ctx.lo(); j <= ctx.hi(); ++j)
                                    for (int x : {-2, 0, 1})
                                        if (!word_eq(ctx, w1, w2,
                                                     oracle::curve_generator(
                                                         ctx, {i, j, x})))
                                            return false;
                    }
                return true;
            });
    rep.run("oracle: collapse kills the skein relation", [&](std::string&) {
        for (int t = 0; t < std::max(trials / 10, 20); ++t) {
            const int n = rand_int(rng, 2, 3);
            const Context ctx{n, Variant::core};
            auto rnd_lw = [&](int len) {
                oracle::LoopWord w;
                for (int q = 0; q < len; ++q)
                    w.push_back({rand_int(rng, 0, n),
                                 rand_int(rng, 0, 1) ? 1 : -1});
                return oracle::reduce(w);
            };
            const int i = rand_int(rng, 1, n), j = rand_int(rng, 1, n),
                      k = rand_int(rng, 1, n);
            const oracle::LoopWord u = rnd_lw(rand_int(rng, 0, 3));
            const oracle::LoopWord v = rnd_lw(rand_int(rng, 0, 3));
            oracle::LoopWord ukv = u;
            ukv.push_back({k, 1});
            ukv.insert(ukv.end(), v.begin(), v.end());
            oracle::LoopWord uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            const Poly lhs =
                oracle::psi(ctx, {i, j, oracle::reduce(ukv)}) +
                oracle::psi(ctx, {i, j, oracle::reduce(uv)});
            const Poly rhs = (oracle::psi(ctx, {i, k, u}) *
                              oracle::psi(ctx, {k, j, v}))
                                 .scaled(Scalar::gamma(-1));
            if (!(lhs == rhs)) return false;
        }
        return true;
    });
    rep.run("oracle: collapse respects the splice product", [&](std::string&) {
        for (int t = 0; t < std::max(trials / 10, 20); ++t) {
            const int n = rand_int(rng, 1, 2);
            const Context ctx{n, rand_int(rng, 0, 1) ? Variant::minus
                                                     : Variant::plus};
            const int sent = ctx.sentinel();
            auto puncture_of = [&](int a) {
                return ctx.v == Variant::plus ? a + 1 : a;
            };
            auto rnd_lw = [&](int len) {
                oracle::LoopWord w;
                for (int q = 0; q < len; ++q) {
                    const int pick = rand_int(rng, 0, n);
                    w.push_back({pick == 0 ? 0 : puncture_of(pick),
                                 rand_int(rng, 0, 1) ? 1 : -1});
                }
                return oracle::reduce(w);
            };
            const int i = rand_int(rng, 1, n), j = rand_int(rng, 1, n);
            const oracle::LoopWord u = rnd_lw(rand_int(rng, 0, 3));
            const oracle::LoopWord v = rnd_lw(rand_int(rng, 0, 3));
            const Curve c1{puncture_of(i), puncture_of(sent), u};
            const Curve c2{puncture_of(sent), puncture_of(j), v};
            oracle::LoopWord uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            const Curve whole{puncture_of(i), puncture_of(j),
                              oracle::reduce(uv)};
            const Poly lhs =
                connect(ctx, oracle::psi(ctx, c1), oracle::psi(ctx, c2));
            if (!(lhs == oracle::psi(ctx, whole))) return false;
        }
        return true;
    });
    rep.run("oracle: the intermediate expansion collapses inverses",
            [&](std::string&) {
                const Context ctx{2, Variant::core};
                for (int k = 1; k <= 2; ++k) {
                    oracle::IntermediatePoly one;
                    one.emplace(oracle::BWord{0}, Scalar::one());
                    if (!(oracle::tau_expand(
                              ctx, {{k, 1}, {k, -1}}) == one) ||
                        !(oracle::tau_expand(
                              ctx, {{k, -1}, {k, 1}}) == one))
                        return false;
                }
                return true;
            });
}

}  // namespace

std::vector<std::string> check_suite_names() {
    return {"ring",  "braid",   "algebra", "action", "relations",
            "torus", "augment", "oracle",  "all"};
}

std::vector<CheckResult> run_check_suite(const std::string& suite,
                                         unsigned seed, int trials) {
    Reporter rep;
    std::mt19937 rng(seed);
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "ring") ring_checks(rep, rng, trials), known = true;
    if (all || suite == "braid") braid_checks(rep, rng, trials), known = true;
    if (all || suite == "algebra")
        algebra_checks(rep, rng, trials), known = true;
    if (all || suite == "action")
        action_checks(rep, rng, trials), known = true;
    if (all || suite == "relations")
        relations_checks(rep, rng, trials), known = true;
    if (all || suite == "torus") torus_checks(rep, rng, trials), known = true;
    if (all || suite == "augment")
        augment_checks(rep, rng, trials), known = true;
    if (all || suite == "oracle")
        oracle_checks(rep, rng, trials), known = true;
    if (!known) throw UsageError("unknown check suite: " + suite);
    return std::move(rep.out);
}

}  // namespace cordal
