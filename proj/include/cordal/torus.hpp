// Monomial-closure detection, rewriting onto the cyclic generator line
// v_x = a_11^x, and finite presentations for torus-type braids.
#pragma once

#include <cordal/braid.hpp>
#include <cordal/poly.hpp>

#include <array>
#include <map>
#include <vector>

namespace cordal {

// Per-index closure data: Phi+(a_{i,0}^x) = mu^s a_{k,0}^{x-t} (left) and
// Phi+(a_{0,j}^y) = mu^{-s} a_{0,k}^{y+t} (right).
struct OrbitStep {
    int k = 1;
    int s = 0;
    int t = 0;
    bool operator==(const OrbitStep&) const = default;
};

struct ClosureData {
    int n = 1;
    std::vector<OrbitStep> left;   // 1-indexed, [0] unused
    std::vector<OrbitStep> right;  // 1-indexed, [0] unused
    int period = 0;  // G = sum of left t over the orbit (exponent drop per cycle)
    int mu_total = 0;  // S = sum of left s over the orbit
};

// Probes the sentinel generators over a small exponent window. Refuses
// with NotMonomial when some image is not a single mu-power monomial,
// NotKnot when the index orbit is not a single n-cycle, Unstable when
// the period is 0 (no finite generator window exists).
ClosureData detect_closure(const Braid& b);

// a_{ij}^u == scalar * v_r with r in [0, |period|); v_0 = (1+mu)Gamma.
struct CoreImage {
    Scalar coeff;
    int r = 0;
};
CoreImage rewrite_to_core(const ClosureData& data, int f, const Gen& g);

// Closed-form orbit bookkeeping for beta(p,q), b-indexed (b_ij^x is
// a_{i+1,j+1}^x): g(i,k) = sum_{r<k} floor(((i+rq) mod p + q)/p) and
// h(i,k) = sum_{r<k} [ (i+rq) mod p == 0 ]; g(i,0) = h(i,0) = 0.
std::pair<int, int> g_h(int i, int k, int p, int q);

// b_ij^x as scalar * v_r via the smallest k1, k2 >= 0 with k1*q = i and
// k2*q = j mod p, then exponent reduction by b_00^{x+q} = mu^q c b_00^x.
// Refuses (no index solution) when gcd(p,q) != 1.
CoreImage rewrite_bgen(int p, int q, int f, int i, int j, int x);

// Polynomials over the surviving symbols v_1 .. v_{|period|-1}.
using VWord = std::vector<int>;
struct VWordLess {
    bool operator()(const VWord& a, const VWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};
using VPoly = std::map<VWord, Scalar, VWordLess>;

VPoly rewrite_poly(const ClosureData& data, int f, const Poly& p);

// Unit-canonical form: exponents shifted so each variable's minimum over
// all coefficient monomials is 0, overall sign fixed by the first term.
// Returns empty map for the zero polynomial.
VPoly canonical_vpoly(const VPoly& p);

struct Presentation {
    int strands = 1;  // p for torus input
    int period = 1;   // q for torus input
    int framing = 0;
    int variables = 0;  // free symbols v_1 .. v_{variables}
    std::vector<VPoly> relations;  // deduplicated, canonical, sorted
};

// Generate family-1/2 relations over a growing probe window, rewrite to
// v-symbols, deduplicate up to unit multiples, and stop once the set is
// window-stable. Refuses Unstable after `max_doublings` doublings.
Presentation braid_presentation(const Braid& b, int framing,
                                int max_doublings = 4);

// beta(p,q) path; validates the detected closure against the closed-form
// orbit data k = (i-1+q) mod p + 1, s = t = floor((i-1+q)/p).
Presentation finite_presentation(int p, int q, int framing);

}  // namespace cordal
