#include <cordal/relations.hpp>

#include <cordal/errors.hpp>

#include <omp.h>

#include <cstdint>
#include <utility>

namespace cordal {

Poly relation(SentinelAction& minus_act, SentinelAction& plus_act, int f,
              const RelationKey& key, int marked_p, int marked_q) {
    const Context& mctx = minus_act.ctx();
    const Context& pctx = plus_act.ctx();
    internal_check(mctx.v == Variant::minus && pctx.v == Variant::plus &&
                       mctx.n == pctx.n,
                   "relation: wants matching minus/plus actions");
    const int n = mctx.n;
    internal_check(key.family >= 1 && key.family <= 4, "relation: bad family");
    internal_check(key.i >= 1 && key.i <= n && key.j >= 1 && key.j <= n,
                   "relation: index out of range");

    const Poly lead = Poly::generator({key.i, key.j, key.x + key.y});
    Poly con;
    Scalar c = Scalar::one();
    switch (key.family) {
        case 1:
            con = connect(mctx, minus_act.image_left(key.i, key.x),
                          Poly::generator({n + 1, key.j, key.y}));
            c = lambda_entry(f, marked_p, marked_q, key.i);
            break;
        case 2:
            con = connect(mctx, Poly::generator({key.i, n + 1, key.x}),
                          minus_act.image_right(key.j, key.y));
            c = Scalar::pow(lambda_entry(f, marked_p, marked_q, key.j), -1);
            break;
        case 3:
            con = connect(pctx, plus_act.image_left(key.i, key.x),
                          Poly::generator({0, key.j, key.y}));
            c = lambda_entry(f, marked_p, marked_q, key.i);
            break;
        default:
            con = connect(pctx, Poly::generator({key.i, 0, key.x}),
                          plus_act.image_right(key.j, key.y));
            c = Scalar::pow(lambda_entry(f, marked_p, marked_q, key.j), -1);
            break;
    }
    return lead - con.scaled(c);
}

namespace {

std::vector<RelationKey> window_keys(int n, int window) {
    std::vector<RelationKey> keys;
    keys.reserve(static_cast<std::size_t>(4 * n * n) * (2 * window + 1) *
                 (2 * window + 1));
    for (int fam = 1; fam <= 4; ++fam)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int x = -window; x <= window; ++x)
                    for (int y = -window; y <= window; ++y)
                        keys.push_back({fam, i, j, x, y});
    return keys;
}

}  // namespace

RelationSet windowed_relations(const Braid& b, int framing, int window,
                               int jobs) {
    internal_check(window >= 0, "windowed_relations: negative window");
    const int n = b.strands;
    SentinelAction minus_act({n, Variant::minus}, b.word);
    SentinelAction plus_act({n, Variant::plus}, b.word);
    const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();

    // probe every sentinel image the window touches up front; relation()
    // below then only reads the caches, so the loop can run in parallel
    struct ProbeKey {
        bool plus, right;
        int idx, x;
    };
    std::vector<ProbeKey> probes;
    probes.reserve(static_cast<std::size_t>(4 * n) * (2 * window + 1));
    for (int v = 0; v < 2; ++v)
        for (int side = 0; side < 2; ++side)
            for (int i = 1; i <= n; ++i)
                for (int x = -window; x <= window; ++x)
                    probes.push_back({v == 1, side == 1, i, x});

    std::vector<Poly> images(probes.size());
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(probes.size());
         ++t) {
        const ProbeKey& pk = probes[t];
        const Context ctx{n, pk.plus ? Variant::plus : Variant::minus};
        const int s = ctx.sentinel();
        const Gen g = pk.right ? Gen{s, pk.idx, pk.x} : Gen{pk.idx, s, pk.x};
        images[t] = phi_word(ctx, b.word, Poly::generator(g));
    }
    for (std::size_t t = 0; t < probes.size(); ++t) {
        const ProbeKey& pk = probes[t];
        SentinelAction& act = pk.plus ? plus_act : minus_act;
        if (pk.right)
            act.prime_right(pk.idx, pk.x, std::move(images[t]));
        else
            act.prime_left(pk.idx, pk.x, std::move(images[t]));
    }

    const std::vector<RelationKey> keys = window_keys(n, window);
    std::vector<Poly> polys(keys.size());
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(keys.size()); ++t)
        polys[t] = relation(minus_act, plus_act, framing, keys[t]);

    RelationSet rs{b, framing, window, {}};
    rs.items.reserve(keys.size());
    for (std::size_t t = 0; t < keys.size(); ++t)
        rs.items.emplace_back(keys[t], std::move(polys[t]));
    return rs;
}

RelationSet windowed_relations_serial(const Braid& b, int framing,
                                      int window) {
    internal_check(window >= 0, "windowed_relations: negative window");
    const int n = b.strands;
    SentinelAction minus_act({n, Variant::minus}, b.word);
    SentinelAction plus_act({n, Variant::plus}, b.word);
    RelationSet rs{b, framing, window, {}};
    for (const RelationKey& key : window_keys(n, window))
        rs.items.emplace_back(key,
                              relation(minus_act, plus_act, framing, key));
    return rs;
}

}  // namespace cordal
