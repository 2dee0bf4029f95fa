#include <cordal/augment.hpp>

#include <cordal/errors.hpp>

#include <omp.h>

#include <string>
#include <vector>

namespace cordal {

namespace {

// one relation with coefficients specialized into Z_d
struct EvalTerm {
    std::int64_t coeff;
    VWord vars;  // 1-based variable indices
};
using EvalRelation = std::vector<EvalTerm>;

std::vector<EvalRelation> specialize_relations(const Presentation& pres,
                                               const SpecParams& spec) {
    std::vector<EvalRelation> rels;
    rels.reserve(pres.relations.size());
    for (const VPoly& vp : pres.relations) {
        EvalRelation rel;
        for (const auto& [w, c] : vp) {
            const std::int64_t cv = specialize(c, spec);
            if (cv != 0) rel.push_back({cv, w});
        }
        rels.push_back(std::move(rel));
    }
    return rels;
}

std::int64_t eval_relation(const EvalRelation& rel,
                           const std::vector<std::int64_t>& asg,
                           std::int64_t d) {
    std::int64_t total = 0;
    for (const EvalTerm& t : rel) {
        std::int64_t v = t.coeff;
        for (int r : t.vars) v = v * asg[static_cast<std::size_t>(r - 1)] % d;
        total = (total + v) % d;
    }
    return total;
}

// count assignments with a fixed leading variable (or all of them when
// the presentation has no variables)
std::int64_t count_block(const std::vector<EvalRelation>& rels, int nvars,
                         std::int64_t d, std::int64_t lead) {
    std::vector<std::int64_t> asg(static_cast<std::size_t>(nvars), 0);
    if (nvars > 0) asg[0] = lead;
    std::int64_t count = 0;
    while (true) {
        bool ok = true;
        for (const EvalRelation& rel : rels)
            if (eval_relation(rel, asg, d) != 0) {
                ok = false;
                break;
            }
        if (ok) ++count;
        // odometer over asg[1..), leading digit pinned
        int pos = nvars - 1;
        while (pos >= 1 && asg[static_cast<std::size_t>(pos)] == d - 1) {
            asg[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 1) break;
        ++asg[static_cast<std::size_t>(pos)];
    }
    return count;
}

void check_search_size(const Presentation& pres, const SpecParams& spec,
                       std::int64_t search_cap) {
    if (!spec.valid())
        throw UsageError("lambda, mu, Gamma values must be units mod d");
    internal_check(search_cap > 0, "count_augmentations: bad search cap");
    std::int64_t total = 1;
    for (int v = 0; v < pres.variables; ++v) {
        if (total > search_cap / spec.d)
            throw RefusalError(
                RefusalKind::SearchTooLarge,
                "search space " + std::to_string(spec.d) + "^" +
                    std::to_string(pres.variables) + " exceeds cap " +
                    std::to_string(search_cap));
        total *= spec.d;
    }
    if (total > search_cap)
        throw RefusalError(RefusalKind::SearchTooLarge,
                           "search space exceeds cap " +
                               std::to_string(search_cap));
}

}  // namespace

std::int64_t count_augmentations(const Presentation& pres,
                                 const SpecParams& spec, int jobs,
                                 std::int64_t search_cap) {
    check_search_size(pres, spec, search_cap);
    const auto rels = specialize_relations(pres, spec);
    if (pres.variables == 0) return count_block(rels, 0, spec.d, 0);
    const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
    std::int64_t count = 0;
#pragma omp parallel for schedule(static) num_threads(nthreads) \
    reduction(+ : count)
    for (std::int64_t lead = 0; lead < spec.d; ++lead)
        count += count_block(rels, pres.variables, spec.d, lead);
    return count;
}

std::int64_t count_augmentations_serial(const Presentation& pres,
                                        const SpecParams& spec,
                                        std::int64_t search_cap) {
    check_search_size(pres, spec, search_cap);
    const auto rels = specialize_relations(pres, spec);
    if (pres.variables == 0) return count_block(rels, 0, spec.d, 0);
    std::int64_t count = 0;
    for (std::int64_t lead = 0; lead < spec.d; ++lead)
        count += count_block(rels, pres.variables, spec.d, lead);
    return count;
}

bool constant_augmentation_check(const Presentation& pres, std::int64_t d,
                                 std::int64_t g0) {
    const SpecParams spec{d, 1, 1, g0};
    if (!spec.valid()) throw UsageError("Gamma value must be a unit mod d");
    const auto rels = specialize_relations(pres, spec);
    std::vector<std::int64_t> asg(static_cast<std::size_t>(pres.variables),
                                  2 * g0 % d);
    for (const EvalRelation& rel : rels)
        if (eval_relation(rel, asg, d) != 0) return false;
    return true;
}

}  // namespace cordal
