#include <cordal/torus.hpp>

#include <cordal/action.hpp>
#include <cordal/errors.hpp>
#include <cordal/relations.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace cordal {

namespace {

constexpr std::array<int, 4> kProbeExponents{0, 1, -1, 2};

// Extract the single term mu^s a_{k1,k2}^z of a monomial image, or refuse.
struct MonomialImage {
    int i, j, x, s;
};

MonomialImage monomial_image(const Poly& img, const std::string& who) {
    if (img.size() != 1)
        throw RefusalError(RefusalKind::NotMonomial,
                           who + " image has " + std::to_string(img.size()) +
                               " terms");
    const auto& [w, c] = *img.terms().begin();
    int s = 0;
    if (w.size() != 1 || !c.is_mu_power(s))
        throw RefusalError(RefusalKind::NotMonomial,
                           who + " image is not a mu-power monomial");
    return {w[0].i, w[0].j, w[0].x, s};
}

}  // namespace

ClosureData detect_closure(const Braid& b) {
    const int n = b.strands;
    const Context ctx{n, Variant::plus};
    ClosureData data;
    data.n = n;
    data.left.assign(static_cast<std::size_t>(n) + 1, {});
    data.right.assign(static_cast<std::size_t>(n) + 1, {});

    for (int i = 1; i <= n; ++i) {
        bool have = false;
        OrbitStep step;
        for (int x : kProbeExponents) {
            Poly img = phi_word(ctx, b.word, Poly::generator({i, 0, x}));
            MonomialImage m = monomial_image(img, "left sentinel");
            if (m.j != 0 || m.i == 0)
                throw RefusalError(RefusalKind::NotMonomial,
                                   "left sentinel image leaves the column");
            OrbitStep d{m.i, m.s, x - m.x};
            if (!have) {
                step = d;
                have = true;
            } else if (!(step == d)) {
                throw RefusalError(RefusalKind::NotMonomial,
                                   "left sentinel image drifts with the "
                                   "probe exponent");
            }
        }
        data.left[static_cast<std::size_t>(i)] = step;
    }
    for (int j = 1; j <= n; ++j) {
        bool have = false;
        OrbitStep step;
        for (int y : kProbeExponents) {
            Poly img = phi_word(ctx, b.word, Poly::generator({0, j, y}));
            MonomialImage m = monomial_image(img, "right sentinel");
            if (m.i != 0 || m.j == 0)
                throw RefusalError(RefusalKind::NotMonomial,
                                   "right sentinel image leaves the row");
            OrbitStep d{m.j, -m.s, m.x - y};
            if (!have) {
                step = d;
                have = true;
            } else if (!(step == d)) {
                throw RefusalError(RefusalKind::NotMonomial,
                                   "right sentinel image drifts with the "
                                   "probe exponent");
            }
        }
        data.right[static_cast<std::size_t>(j)] = step;
    }

    // the index orbit must be one n-cycle through every strand
    std::set<int> seen;
    int at = 1;
    for (int step = 0; step < n; ++step) {
        if (seen.count(at)) break;
        seen.insert(at);
        at = data.left[static_cast<std::size_t>(at)].k;
    }
    if (static_cast<int>(seen.size()) != n || at != 1)
        throw RefusalError(RefusalKind::NotKnot,
                           "closure has more than one component");

    for (int i = 1; i <= n; ++i) {
        data.period += data.left[static_cast<std::size_t>(i)].t;
        data.mu_total += data.left[static_cast<std::size_t>(i)].s;
    }
    if (data.period == 0)
        throw RefusalError(RefusalKind::Unstable,
                           "closure has period 0, no finite generator window");
    return data;
}

CoreImage rewrite_to_core(const ClosureData& data, int f, const Gen& g) {
    internal_check(data.period != 0, "rewrite_to_core: period 0");
    internal_check(g.i >= 1 && g.i <= data.n && g.j >= 1 && g.j <= data.n,
                   "rewrite_to_core: index out of range");
    Scalar sc = Scalar::one();
    int i = g.i, j = g.j, u = g.x;
    while (i != 1) {
        const OrbitStep& st = data.left[static_cast<std::size_t>(i)];
        sc *= Scalar::mu(st.s);
        u -= st.t;
        i = st.k;
    }
    while (j != 1) {
        const OrbitStep& st = data.right[static_cast<std::size_t>(j)];
        sc *= Scalar::mu(-st.s);
        u += st.t;
        j = st.k;
    }
    const int G = data.period;
    const int gg = std::abs(G);
    int r = ((u % gg) + gg) % gg;
    const long m = (static_cast<long>(u) - r) / G;
    // a_11^{v+G} = c mu^S a_11^v with c = lambda mu^{-f}
    const Scalar per = Scalar::unit(1, 1, data.mu_total - f, 0);
    sc *= Scalar::pow(per, m);
    return {sc, r};
}

std::pair<int, int> g_h(int i, int k, int p, int q) {
    internal_check(p >= 1 && k >= 0, "g_h: bad arguments");
    int gs = 0, hs = 0;
    for (int r = 0; r < k; ++r) {
        const int base = (((i + r * q) % p) + p) % p;
        gs += (base + q) / p;
        hs += base == 0 ? 1 : 0;
    }
    return {gs, hs};
}

CoreImage rewrite_bgen(int p, int q, int f, int i, int j, int x) {
    internal_check(p >= 1 && q >= 1, "rewrite_bgen: bad torus parameters");
    internal_check(i >= 0 && i < p && j >= 0 && j < p,
                   "rewrite_bgen: index out of range");
    auto lift = [&](int target) {
        for (int k = 0; k < p; ++k)
            if ((k * q) % p == target) return k;
        throw RefusalError(RefusalKind::NotKnot,
                           "no solution to k*q = " + std::to_string(target) +
                               " mod " + std::to_string(p) +
                               "; gcd(p,q) != 1");
    };
    const int k1 = lift(i), k2 = lift(j);
    const auto [g1, h1] = g_h(0, k1, p, q);
    const auto [g2, h2] = g_h(0, k2, p, q);
    // c = lambda mu^{-f}; b_ij^x = mu^{g2-g1} c^{h2-h1} b_00^{x+g1-g2}
    Scalar sc = Scalar::unit(1, h2 - h1, (g2 - g1) - f * (h2 - h1), 0);
    int u = x + g1 - g2;
    const int r = ((u % q) + q) % q;
    const long m = (static_cast<long>(u) - r) / q;
    // b_00^{v+q} = mu^q c b_00^v
    const Scalar per = Scalar::unit(1, 1, q - f, 0);
    sc *= Scalar::pow(per, m);
    return {sc, r};
}

VPoly rewrite_poly(const ClosureData& data, int f, const Poly& p) {
    VPoly out;
    for (const auto& [w, c] : p.terms()) {
        Scalar sc = c;
        VWord vw;
        for (const Gen& g : w) {
            CoreImage im = rewrite_to_core(data, f, g);
            sc *= im.coeff;
            if (im.r == 0)
                sc *= Scalar::gamma_one_plus_mu();
            else
                vw.push_back(im.r);
        }
        auto [it, fresh] = out.try_emplace(std::move(vw), sc);
        if (!fresh) {
            it->second += sc;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

VPoly canonical_vpoly(const VPoly& p) {
    if (p.empty()) return {};
    Expo mins = p.begin()->second.terms().front().first;
    for (const auto& [w, c] : p)
        for (const auto& [e, v] : c.terms()) {
            mins.l = std::min(mins.l, e.l);
            mins.m = std::min(mins.m, e.m);
            mins.g = std::min(mins.g, e.g);
        }
    const Scalar shift = Scalar::unit(1, -mins.l, -mins.m, -mins.g);
    VPoly out;
    for (const auto& [w, c] : p) out.emplace(w, c * shift);
    // fix the overall sign by the lowest monomial of the first term
    if (out.begin()->second.terms().front().second < 0)
        for (auto& [w, c] : out) c = -c;
    return out;
}

namespace {

// total order on v-polynomials, for deduplicated sorted relation lists
bool vpoly_less(const VPoly& a, const VPoly& b) {
    auto ia = a.begin(), ib = b.begin();
    VWordLess wl;
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (wl(ia->first, ib->first)) return true;
        if (wl(ib->first, ia->first)) return false;
        if (ia->second.terms() < ib->second.terms()) return true;
        if (ib->second.terms() < ia->second.terms()) return false;
    }
    return ia == a.end() && ib != b.end();
}

Presentation windowed_presentation(const Braid& b, int framing, int period,
                                   int max_doublings,
                                   const std::function<CoreImage(const Gen&)>&
                                       rewrite) {
    const int n = b.strands;
    SentinelAction minus_act({n, Variant::minus}, b.word);
    SentinelAction plus_act({n, Variant::plus}, b.word);

    auto rewrite_family = [&](const Poly& p) {
        VPoly out;
        for (const auto& [w, c] : p.terms()) {
            Scalar sc = c;
            VWord vw;
            for (const Gen& g : w) {
                CoreImage im = rewrite(g);
                sc *= im.coeff;
                if (im.r == 0)
                    sc *= Scalar::gamma_one_plus_mu();
                else
                    vw.push_back(im.r);
            }
            auto [it, fresh] = out.try_emplace(std::move(vw), sc);
            if (!fresh) {
                it->second += sc;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    };

    int window = n + period;
    std::vector<VPoly> prev;
    bool have_prev = false;
    for (int round = 0; round <= max_doublings; ++round) {
        std::vector<VPoly> rels;
        for (int fam = 1; fam <= 2; ++fam)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int x = 0; x <= window; ++x)
                        for (int y = 0; y <= window; ++y) {
                            Poly rp = relation(minus_act, plus_act, framing,
                                               {fam, i, j, x, y});
                            VPoly cf = canonical_vpoly(rewrite_family(rp));
                            if (!cf.empty()) rels.push_back(std::move(cf));
                        }
        std::sort(rels.begin(), rels.end(), vpoly_less);
        rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
        if (have_prev && rels == prev)
            return {n, period, framing, period - 1, std::move(rels)};
        prev = std::move(rels);
        have_prev = true;
        window *= 2;
    }
    throw RefusalError(RefusalKind::Unstable,
                       "relation set kept growing with the probe window");
}

}  // namespace

Presentation braid_presentation(const Braid& b, int framing,
                                int max_doublings) {
    const ClosureData data = detect_closure(b);
    return windowed_presentation(
        b, framing, std::abs(data.period), max_doublings,
        [&](const Gen& g) { return rewrite_to_core(data, framing, g); });
}

Presentation finite_presentation(int p, int q, int framing) {
    if (p < 1 || q < 1)
        throw UsageError("torus parameters must be positive");
    if (std::gcd(p, q) != 1)
        throw RefusalError(RefusalKind::NotKnot,
                           "no solution to the index lifts; gcd(p,q) != 1");
    const Braid b = torus_braid(p, q);
    const ClosureData data = detect_closure(b);
    internal_check(data.period == q && data.mu_total == q,
                   "finite_presentation: period mismatch");
    for (int i = 1; i <= p; ++i) {
        const OrbitStep want{(i - 1 + q) % p + 1, (i - 1 + q) / p,
                             (i - 1 + q) / p};
        internal_check(data.left[static_cast<std::size_t>(i)] == want &&
                           data.right[static_cast<std::size_t>(i)] == want,
                       "finite_presentation: orbit data mismatch");
    }
    return windowed_presentation(
        b, framing, q, 4, [&](const Gen& g) {
            return rewrite_bgen(p, q, framing, g.i - 1, g.j - 1, g.x);
        });
}

}  // namespace cordal
