#include <cordal/oracle.hpp>

#include <cordal/errors.hpp>

#include <algorithm>
#include <map>
#include <utility>

namespace cordal {
namespace oracle {

namespace {

// algebra index <-> puncture position for the three contexts; the plus
// sentinel is puncture 1, the minus sentinel is puncture n+1
int puncture_of(const Context& ctx, int algebra_idx) {
    return ctx.v == Variant::plus ? algebra_idx + 1 : algebra_idx;
}

int algebra_of(const Context& ctx, int puncture) {
    return ctx.v == Variant::plus ? puncture - 1 : puncture;
}

int puncture_count(const Context& ctx) {
    return ctx.v == Variant::core ? ctx.n : ctx.n + 1;
}

// 0 when the variant has no tau-killed puncture
int killed_puncture(const Context& ctx) {
    if (ctx.v == Variant::plus) return 1;
    if (ctx.v == Variant::minus) return ctx.n + 1;
    return 0;
}

LoopWord power(int puncture, int e) {
    LoopWord w;
    w.reserve(static_cast<std::size_t>(e >= 0 ? e : -e));
    for (int t = 0; t < (e >= 0 ? e : -e); ++t)
        w.push_back({puncture, e >= 0 ? 1 : -1});
    return w;
}

void append_reduced(LoopWord& out, const LoopLetter& l) {
    if (!out.empty() && out.back().puncture == l.puncture &&
        out.back().exp == -l.exp)
        out.pop_back();
    else
        out.push_back(l);
}

LoopWord substitute(const LoopWord& w,
                    const std::map<int, LoopWord>& table) {
    LoopWord out;
    for (const LoopLetter& l : w) {
        auto it = table.find(l.puncture);
        if (it == table.end()) {
            append_reduced(out, l);
        } else if (l.exp > 0) {
            for (const LoopLetter& m : it->second) append_reduced(out, m);
        } else {
            const LoopWord inv = inverse(it->second);
            for (const LoopLetter& m : inv) append_reduced(out, m);
        }
    }
    return out;
}

struct Move {
    bool half = true;  // half twist of punctures u, u+1; else full twist of u
    int u = 1;
    int sign = 1;
};

Curve apply_move(const Curve& c, const Move& mv, Handedness h) {
    const int sign = mv.sign * (h == Handedness::ccw ? 1 : -1);
    std::map<int, LoopWord> table;
    std::map<int, LoopWord> corr;
    std::map<int, int> perm;
    const LoopWord xu = {{mv.u, 1}};
    if (mv.half) {
        const int v = mv.u + 1;
        const LoopWord xv = {{v, 1}};
        if (sign > 0) {
            LoopWord img = xu;
            img.push_back(xv[0]);
            img.push_back({mv.u, -1});
            table[mv.u] = std::move(img);
            table[v] = xu;
            corr[mv.u] = inverse(xu);
            corr[v] = {};
        } else {
            table[mv.u] = xv;
            LoopWord img = inverse(xv);
            img.push_back(xu[0]);
            img.push_back(xv[0]);
            table[v] = std::move(img);
            corr[mv.u] = {};
            corr[v] = xv;
        }
        perm[mv.u] = v;
        perm[v] = mv.u;
    } else {
        internal_check(mv.u == 1, "apply_move: full twist off puncture 1");
        const LoopLetter e{0, 1}, ei{0, -1};
        const LoopLetter x1{1, 1}, x1i{1, -1};
        if (sign > 0) {
            table[0] = {e, x1, e, x1i, ei};
            table[1] = {e, x1, ei};
            corr[1] = {ei};
        } else {
            table[0] = {x1i, e, x1};
            table[1] = {x1i, ei, x1, e, x1};
            corr[1] = {x1i, e, x1};
        }
    }
    LoopWord nw;
    if (auto it = corr.find(c.i); it != corr.end()) nw = it->second;
    for (const LoopLetter& l : substitute(c.word, table))
        append_reduced(nw, l);
    if (auto it = corr.find(c.j); it != corr.end())
        for (const LoopLetter& l : inverse(it->second)) append_reduced(nw, l);
    Curve out{c.i, c.j, std::move(nw)};
    if (auto it = perm.find(out.i); it != perm.end()) out.i = it->second;
    if (auto it = perm.find(out.j); it != perm.end()) out.j = it->second;
    return out;
}

std::vector<Move> letter_moves(const Context& ctx, const Letter& l) {
    std::vector<Move> ms;
    if (ctx.v == Variant::plus) {
        if (l.k == 0)
            ms = {{true, 1, 1}, {false, 1, 1}, {true, 1, 1}};
        else
            ms = {{true, l.k + 1, 1}};
    } else {
        if (l.k == 0)
            ms = {{false, 1, 1}};
        else
            ms = {{true, l.k, 1}};
    }
    if (l.sign < 0) {
        std::reverse(ms.begin(), ms.end());
        for (Move& m : ms) m.sign = -m.sign;
    }
    return ms;
}

}  // namespace

LoopWord reduce(LoopWord w) {
    LoopWord out;
    for (const LoopLetter& l : w) append_reduced(out, l);
    return out;
}

LoopWord inverse(const LoopWord& w) {
    LoopWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->puncture, -it->exp});
    return out;
}

Curve curve_generator(const Context& ctx, const Gen& g) {
    internal_check(ctx.valid_index(g.i) && ctx.valid_index(g.j),
                   "curve_generator: index out of range");
    return {puncture_of(ctx, g.i), puncture_of(ctx, g.j), power(0, g.x)};
}

Curve artin_apply(const Context& ctx, const Letter& letter, const Curve& c,
                  Handedness h) {
    internal_check(letter.k >= 0 && letter.k < ctx.n,
                   "artin_apply: letter out of range");
    Curve out = c;
    const std::vector<Move> ms = letter_moves(ctx, letter);
    for (auto it = ms.rbegin(); it != ms.rend(); ++it)
        out = apply_move(out, *it, h);
    return out;
}

IntermediatePoly tau_expand(const Context& ctx, const LoopWord& w) {
    const int killed = killed_puncture(ctx);
    const int m = puncture_count(ctx);
    // terms start as the empty product: coefficient 1, axis power 0
    IntermediatePoly terms;
    terms.emplace(BWord{0}, Scalar::one());
    auto fold = [](IntermediatePoly& acc, BWord w2, const Scalar& c) {
        auto [it, fresh] = acc.try_emplace(std::move(w2), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    for (const LoopLetter& l : w) {
        internal_check(l.puncture >= 0 && l.puncture <= m,
                       "tau_expand: puncture out of range");
        if (l.puncture == 0) {
            IntermediatePoly next;
            for (const auto& [seq, c] : terms) {
                BWord s2 = seq;
                s2.back() += l.exp;
                fold(next, std::move(s2), c);
            }
            terms = std::move(next);
        } else if (l.puncture == killed) {
            continue;
        } else {
            const int a = algebra_of(ctx, l.puncture);
            const Scalar y = l.exp > 0 ? Scalar::gamma(-1)
                                       : Scalar::unit(1, 0, -1, -1);
            IntermediatePoly next;
            for (const auto& [seq, c] : terms) {
                BWord s2 = seq;
                Scalar c2 = c * y;
                // y_a y_a collapses to (1+mu)Gamma y_a
                if (s2.size() >= 3 && s2.back() == 0 &&
                    s2[s2.size() - 2] == a) {
                    c2 *= Scalar::gamma_one_plus_mu();
                } else {
                    s2.push_back(a);
                    s2.push_back(0);
                }
                fold(next, std::move(s2), c2);
                fold(next, BWord(seq), -c);
            }
            terms = std::move(next);
        }
    }
    return terms;
}

Poly psi(const Context& ctx, const Curve& c) {
    const IntermediatePoly expanded = tau_expand(ctx, c.word);
    const int ai = algebra_of(ctx, c.i);
    const int aj = algebra_of(ctx, c.j);
    internal_check(ctx.valid_index(ai) && ctx.valid_index(aj),
                   "psi: endpoint out of range");
    Poly out;
    for (const auto& [seq, sc] : expanded) {
        Word gens;
        int prev = ai;
        for (std::size_t t = 0; t + 1 < seq.size(); t += 2) {
            gens.push_back({prev, seq[t + 1], seq[t]});
            prev = seq[t + 1];
        }
        gens.push_back({prev, aj, seq.back()});
        out += Poly::term(sc, gens);
    }
    return out;
}

Poly oracle_phi(const Context& ctx, const BraidWord& word, const Gen& g,
                Handedness h) {
    Curve c = curve_generator(ctx, g);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        c = artin_apply(ctx, *it, c, h);
    return psi(ctx, c);
}

}  // namespace oracle
}  // namespace cordal
