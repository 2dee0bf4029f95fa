#include <cordal/action.hpp>

#include <cordal/errors.hpp>

namespace cordal {
namespace {

// shorthand for one summand: integer coefficient times a unit monomial
// times a generator word
struct Summand {
    int c, l, m, g;
    Word w;
};

Poly assemble(const std::vector<Summand>& terms) {
    Poly p;
    for (const Summand& t : terms)
        p += Poly::term(Scalar::unit(t.c, t.l, t.m, t.g), t.w);
    return p;
}

// positive alpha_k, k >= 1 (displayed case analysis; the i=j=k branch
// carries the four-term expression)
Poly alphak_pos(int k, const Gen& a) {
    const int K = k, K1 = k + 1;
    const auto [i, j, x] = a;
    auto sp = [&](int t) { return t != K && t != K1; };
    if (i == K && j == K)
        return assemble({{1, 0, 0, 0, {{K1, K1, x}}},
                         {-1, 0, 0, -1, {{K1, K, x}, {K, K1, 0}}},
                         {-1, 0, -1, -1, {{K1, K, 0}, {K, K1, x}}},
                         {1, 0, -1, -2, {{K1, K, 0}, {K, K, x}, {K, K1, 0}}}});
    if (i == K && j == K1)
        return assemble({{-1, 0, 0, 0, {{K1, K, x}}},
                         {1, 0, -1, -1, {{K1, K, 0}, {K, K, x}}}});
    if (i == K && sp(j))
        return assemble({{-1, 0, 0, 0, {{K1, j, x}}},
                         {1, 0, -1, -1, {{K1, K, 0}, {K, j, x}}}});
    if (i == K1 && j == K)
        return assemble({{-1, 0, 0, 0, {{K, K1, x}}},
                         {1, 0, 0, -1, {{K, K, x}, {K, K1, 0}}}});
    if (i == K1 && j == K1) return assemble({{1, 0, 0, 0, {{K, K, x}}}});
    if (i == K1 && sp(j)) return assemble({{1, 0, 0, 0, {{K, j, x}}}});
    if (sp(i) && j == K)
        return assemble({{-1, 0, 0, 0, {{i, K1, x}}},
                         {1, 0, 0, -1, {{i, K, x}, {K, K1, 0}}}});
    if (sp(i) && j == K1) return assemble({{1, 0, 0, 0, {{i, K, x}}}});
    return assemble({{1, 0, 0, 0, {{i, j, x}}}});
}

// inverse of alpha_k, obtained by solving the displayed substitution
Poly alphak_neg(int k, const Gen& a) {
    const int K = k, K1 = k + 1;
    const auto [i, j, x] = a;
    auto sp = [&](int t) { return t != K && t != K1; };
    if (i == K && j == K) return assemble({{1, 0, 0, 0, {{K1, K1, x}}}});
    if (i == K && j == K1)
        return assemble({{-1, 0, 0, 0, {{K1, K, x}}},
                         {1, 0, -1, -1, {{K1, K1, x}, {K1, K, 0}}}});
    if (i == K && sp(j)) return assemble({{1, 0, 0, 0, {{K1, j, x}}}});
    if (i == K1 && j == K)
        return assemble({{-1, 0, 0, 0, {{K, K1, x}}},
                         {1, 0, 0, -1, {{K, K1, 0}, {K1, K1, x}}}});
    if (i == K1 && j == K1)
        return assemble({{1, 0, 0, 0, {{K, K, x}}},
                         {-1, 0, -1, -1, {{K, K1, x}, {K1, K, 0}}},
                         {-1, 0, 0, -1, {{K, K1, 0}, {K1, K, x}}},
                         {1, 0, -1, -2, {{K, K1, 0}, {K1, K1, x}, {K1, K, 0}}}});
    if (i == K1 && sp(j))
        return assemble({{-1, 0, 0, 0, {{K, j, x}}},
                         {1, 0, 0, -1, {{K, K1, 0}, {K1, j, x}}}});
    if (sp(i) && j == K) return assemble({{1, 0, 0, 0, {{i, K1, x}}}});
    if (sp(i) && j == K1)
        return assemble({{-1, 0, 0, 0, {{i, K, x}}},
                         {1, 0, -1, -1, {{i, K1, x}, {K1, K, 0}}}});
    return assemble({{1, 0, 0, 0, {{i, j, x}}}});
}

// alpha_0 on indices >= 1 (identical across core/plus/minus)
Poly alpha0_core(const Gen& a, int sign) {
    const auto [i, j, x] = a;
    if (sign > 0) {
        if (i == 1 && j == 1) return assemble({{1, 0, 0, 0, {{1, 1, x}}}});
        if (i == 1)
            return assemble({{-1, 0, 1, 0, {{1, j, x - 1}}},
                             {1, 0, 0, -1, {{1, 1, x}, {1, j, -1}}}});
        if (j == 1)
            return assemble({{-1, 0, -1, 0, {{i, 1, x + 1}}},
                             {1, 0, -1, -1, {{i, 1, 1}, {1, 1, x}}}});
        return assemble({{1, 0, 0, 0, {{i, j, x}}},
                         {-1, 0, -1, -1, {{i, 1, x + 1}, {1, j, -1}}},
                         {-1, 0, 0, -1, {{i, 1, 1}, {1, j, x - 1}}},
                         {1, 0, -1, -2, {{i, 1, 1}, {1, 1, x}, {1, j, -1}}}});
    }
    if (i == 1 && j == 1) return assemble({{1, 0, 0, 0, {{1, 1, x}}}});
    if (i == 1)
        return assemble({{-1, 0, -1, 0, {{1, j, x + 1}}},
                         {1, 0, -1, -1, {{1, 1, x + 1}, {1, j, 0}}}});
    if (j == 1)
        return assemble({{-1, 0, 1, 0, {{i, 1, x - 1}}},
                         {1, 0, 0, -1, {{i, 1, 0}, {1, 1, x - 1}}}});
    return assemble({{1, 0, 0, 0, {{i, j, x}}},
                     {-1, 0, 0, -1, {{i, 1, x}, {1, j, 0}}},
                     {-1, 0, -1, -1, {{i, 1, 0}, {1, j, x}}},
                     {1, 0, -1, -2, {{i, 1, 0}, {1, 1, x}, {1, j, 0}}}});
}

// alpha_0 branches that touch the plus-variant sentinel index 0
Poly alpha0_plus_extra(const Gen& a, int sign) {
    const auto [i, j, x] = a;
    if (sign > 0) {
        if (i == 0 && j == 0) return assemble({{1, 0, 0, 0, {{0, 0, x}}}});
        if (i == 0 && j == 1) return assemble({{1, 0, -1, 0, {{0, 1, x + 1}}}});
        if (i == 0)
            return assemble({{-1, 0, 0, 0, {{0, j, x}}},
                             {1, 0, -1, -1, {{0, 1, x + 1}, {1, j, -1}}}});
        if (i == 1 && j == 0) return assemble({{1, 0, 1, 0, {{1, 0, x - 1}}}});
        return assemble({{-1, 0, 0, 0, {{i, 0, x}}},
                         {1, 0, 0, -1, {{i, 1, 1}, {1, 0, x - 1}}}});
    }
    if (i == 0 && j == 0) return assemble({{1, 0, 0, 0, {{0, 0, x}}}});
    if (i == 0 && j == 1) return assemble({{1, 0, 1, 0, {{0, 1, x - 1}}}});
    if (i == 0)
        return assemble({{-1, 0, 0, 0, {{0, j, x}}},
                         {1, 0, 0, -1, {{0, 1, x}, {1, j, 0}}}});
    if (i == 1 && j == 0) return assemble({{1, 0, -1, 0, {{1, 0, x + 1}}}});
    return assemble({{-1, 0, 0, 0, {{i, 0, x}}},
                     {1, 0, -1, -1, {{i, 1, 0}, {1, 0, x}}}});
}

}  // namespace

Poly phi_letter(const Context& ctx, const Letter& l, const Gen& g) {
    internal_check(l.k >= 0 && l.k < ctx.n, "phi_letter: generator index out of range");
    internal_check(ctx.valid_index(g.i) && ctx.valid_index(g.j),
                   "phi_letter: algebra index out of context");
    if (l.k == 0) {
        if (ctx.v == Variant::plus && (g.i == 0 || g.j == 0))
            return alpha0_plus_extra(g, l.sign);
        return alpha0_core(g, l.sign);
    }
    return l.sign > 0 ? alphak_pos(l.k, g) : alphak_neg(l.k, g);
}

Poly phi_letter(const Context& ctx, const Letter& l, const Poly& p) {
    Poly r;
    for (const auto& [w, c] : p.terms()) {
        Poly img = Poly::scalar(c);
        for (const Gen& g : w) img = img * phi_letter(ctx, l, g);
        r += img;
    }
    return r;
}

Poly phi_word(const Context& ctx, const BraidWord& w, const Poly& p) {
    Poly r = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = phi_letter(ctx, *it, r);
    return r;
}

MatrixSlice probe_left(const Context& ctx, const BraidWord& w, int i, int x) {
    int s = ctx.sentinel();
    Poly img = phi_word(ctx, w, Poly::generator({i, s, x}));
    MatrixSlice row;
    for (const auto& [word, c] : img.terms()) {
        if (word.empty() || word.back().j != s || word.back().i == s)
            throw InternalError("probe_left: malformed image term");
        for (std::size_t t = 0; t + 1 < word.size(); ++t)
            internal_check(word[t].i != s && word[t].j != s,
                           "probe_left: interior sentinel");
        Word head(word.begin(), word.end() - 1);
        row[{word.back().i, word.back().x}] += Poly::term(c, head);
    }
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    return row;
}

MatrixSlice probe_right(const Context& ctx, const BraidWord& w, int j, int y) {
    int s = ctx.sentinel();
    Poly img = phi_word(ctx, w, Poly::generator({s, j, y}));
    MatrixSlice col;
    for (const auto& [word, c] : img.terms()) {
        if (word.empty() || word.front().i != s || word.front().j == s)
            throw InternalError("probe_right: malformed image term");
        for (std::size_t t = 1; t < word.size(); ++t)
            internal_check(word[t].i != s && word[t].j != s,
                           "probe_right: interior sentinel");
        Word tail(word.begin() + 1, word.end());
        col[{word.front().j, word.front().x}] += Poly::term(c, tail);
    }
    std::erase_if(col, [](const auto& kv) { return kv.second.is_zero(); });
    return col;
}

const Poly& SentinelAction::image_left(int i, int x) {
    auto it = left_.find({i, x});
    if (it == left_.end()) {
        Poly img = phi_word(ctx_, word_, Poly::generator({i, ctx_.sentinel(), x}));
        it = left_.emplace(std::pair{i, x}, std::move(img)).first;
    }
    return it->second;
}

const Poly& SentinelAction::image_right(int j, int y) {
    auto it = right_.find({j, y});
    if (it == right_.end()) {
        Poly img = phi_word(ctx_, word_, Poly::generator({ctx_.sentinel(), j, y}));
        it = right_.emplace(std::pair{j, y}, std::move(img)).first;
    }
    return it->second;
}

void SentinelAction::prime_left(int i, int x, Poly img) {
    left_.insert_or_assign({i, x}, std::move(img));
}

void SentinelAction::prime_right(int j, int y, Poly img) {
    right_.insert_or_assign({j, y}, std::move(img));
}

MatrixSlice SentinelAction::row_left(int i, int x) {
    int s = ctx_.sentinel();
    const Poly& img = image_left(i, x);
    MatrixSlice row;
    for (const auto& [word, c] : img.terms()) {
        internal_check(!word.empty() && word.back().j == s && word.back().i != s,
                       "row_left: malformed image term");
        Word head(word.begin(), word.end() - 1);
        row[{word.back().i, word.back().x}] += Poly::term(c, head);
    }
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    return row;
}

MatrixSlice SentinelAction::col_right(int j, int y) {
    int s = ctx_.sentinel();
    const Poly& img = image_right(j, y);
    MatrixSlice col;
    for (const auto& [word, c] : img.terms()) {
        internal_check(!word.empty() && word.front().i == s && word.front().j != s,
                       "col_right: malformed image term");
        Word tail(word.begin() + 1, word.end());
        col[{word.front().j, word.front().x}] += Poly::term(c, tail);
    }
    std::erase_if(col, [](const auto& kv) { return kv.second.is_zero(); });
    return col;
}

Scalar lambda_entry(int f, int p, int q, int idx) {
    int l = idx == p ? 1 : 0;
    int m = idx == q ? -f : 0;
    return Scalar::unit(1, l, m, 0);
}

}  // namespace cordal
