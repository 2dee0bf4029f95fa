// The braid-group action Phi on the cord algebra and its two sentinel
// extensions, plus the row/column decomposition of sentinel images into
// the four coefficient matrices and the framing diagonal.
#pragma once

#include <cordal/braid.hpp>
#include <cordal/poly.hpp>

#include <map>
#include <memory>

namespace cordal {

// Action of a single letter alpha_k^{sign} on one generator. Closed-form
// case tables; inverse letters use the derived inverse substitutions.
Poly phi_letter(const Context& ctx, const Letter& l, const Gen& g);
Poly phi_letter(const Context& ctx, const Letter& l, const Poly& p);

// Phi_{l1 l2 ... lm} = Phi_{l1} o ... o Phi_{lm} (rightmost letter acts
// first on the argument).
Poly phi_word(const Context& ctx, const BraidWord& w, const Poly& p);

// One row of Phi^{-L}/Phi^{+L} (resp. column of Phi^{-R}/Phi^{+R}):
// the finite set of (k,z) slots with their core-polynomial entries.
using MatrixSlice = std::map<std::pair<int, int>, Poly>;

// Decompose Phi(a_{i,s}^x) = sum_{k,z} entry * a_{k,s}^z (left probe) or
// Phi(a_{s,j}^y) = sum_{k,z} a_{s,k}^z * entry (right probe), where s is
// the sentinel of the variant. Throws InternalError if a term does not
// carry exactly one boundary sentinel generator.
MatrixSlice probe_left(const Context& ctx, const BraidWord& w, int i, int x);
MatrixSlice probe_right(const Context& ctx, const BraidWord& w, int j, int y);

// Memoizing wrapper around the sentinel probes of one braid; relation
// generation probes the same rows for every window offset.
class SentinelAction {
  public:
    SentinelAction(Context ctx, BraidWord w) : ctx_(ctx), word_(std::move(w)) {}
    const Context& ctx() const { return ctx_; }
    const BraidWord& word() const { return word_; }
    // Cached image of the sentinel generator itself (a_{i,s}^x / a_{s,j}^y).
    const Poly& image_left(int i, int x);
    const Poly& image_right(int j, int y);
    MatrixSlice row_left(int i, int x);
    MatrixSlice col_right(int j, int y);
    // Install a precomputed image. Bulk probing fills the cache from a
    // parallel loop first; the emission phase then only reads it.
    void prime_left(int i, int x, Poly img);
    void prime_right(int j, int y, Poly img);

  private:
    Context ctx_;
    BraidWord word_;
    std::map<std::pair<int, int>, Poly> left_, right_;
};

// Framing diagonal Lambda_{f;p,q}: lambda at slot p, mu^{-f} at slot q
// (fused to lambda*mu^{-f} when p == q), 1 elsewhere.
Scalar lambda_entry(int f, int p, int q, int idx);

}  // namespace cordal
