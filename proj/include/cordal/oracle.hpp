// Independent recomputation of the braid action in the based-loop model.
//
// A generator a_ij^x is modelled as a based loop in the punctured disk:
// the axis letter winds around the binding axis, the letter for puncture
// m winds around that puncture. Braid letters act by point-pushing moves
// (half twists of adjacent punctures, full twists of puncture 1 around
// the axis), each with a basepoint correction on the affected endpoints.
// Collapsing the moved loop back to algebra generators goes through the
// intermediate algebra B (tau), then attaches the endpoints (psi). The
// composite reproduces phi_word through entirely separate bookkeeping,
// so the two implementations cross-check each other.
#pragma once

#include <cordal/braid.hpp>
#include <cordal/poly.hpp>

#include <map>
#include <vector>

namespace cordal {
namespace oracle {

// Orientation convention for the disk twists. The engine's equations
// correspond to counterclockwise positive twists; `cw` is retained so the
// calibration test can demonstrate the other choice disagrees.
enum class Handedness { ccw, cw };

// One letter of a based loop word. puncture 0 is the axis winding letter;
// m >= 1 winds puncture m. exp is +-1; runs stay as repeated unit letters.
struct LoopLetter {
    int puncture = 0;
    int exp = 1;
    bool operator==(const LoopLetter&) const = default;
};
using LoopWord = std::vector<LoopLetter>;

LoopWord reduce(LoopWord w);  // cancel adjacent inverse pairs
LoopWord inverse(const LoopWord& w);

// Based curve: a loop word with its endpoint punctures. The generator
// curve of a_ij^x carries word axis^x.
struct Curve {
    int i = 0;
    int j = 0;
    LoopWord word;
    bool operator==(const Curve&) const = default;
};

Curve curve_generator(const Context& ctx, const Gen& g);

// Words of the intermediate algebra B: alternating axis powers and
// puncture symbols y_a, stored as [x0, a1, x1, a2, x2, ...] (axis
// exponents at even slots, y indices at odd slots, odd total length).
// Normal form collapses y_a y_a to (1+mu)Gamma y_a.
using BWord = std::vector<int>;
struct BWordLess {
    bool operator()(const BWord& a, const BWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};
using IntermediatePoly = std::map<BWord, Scalar, BWordLess>;

// Multiplicative expansion: axis letters keep their winding, the letter
// of puncture m becomes (1/Gamma) y_m - 1 (inverse: (1/Gamma mu) y_m - 1),
// and the sentinel puncture's letter becomes 1. y indices are algebra
// indices of the context.
IntermediatePoly tau_expand(const Context& ctx, const LoopWord& w);

// Applies the point-pushing moves of one braid letter (rightmost-first
// within the letter's move sequence) to a curve.
Curve artin_apply(const Context& ctx, const Letter& letter, const Curve& c,
                  Handedness h = Handedness::ccw);

// Collapse of a curve into the algebra: expand the word through B, then
// attach the endpoint indices, turning each term into a generator chain
// a_{i,a1}^{x0} a_{a1,a2}^{x1} ... a_{ak,j}^{xk}.
Poly psi(const Context& ctx, const Curve& c);

// Full word action in the loop model, rightmost letter first.
Poly oracle_phi(const Context& ctx, const BraidWord& word, const Gen& g,
                Handedness h = Handedness::ccw);

}  // namespace oracle
}  // namespace cordal
