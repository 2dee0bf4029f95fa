// Braid words in the type-B Artin group C_n: parsing, formatting, the
// group operations used by the Markov moves, and the torus family.
#pragma once

#include <string>
#include <vector>

namespace cordal {

// One letter alpha_k^{sign}, 0 <= k <= strands-1, sign in {+1,-1}.
struct Letter {
    int k = 0;
    int sign = 1;
    bool operator==(const Letter&) const = default;
};

using BraidWord = std::vector<Letter>;

struct Braid {
    int strands = 1;
    BraidWord word;
    bool operator==(const Braid&) const = default;
};

// Grammar: word := token (WS token)* | "";  token := "a" INT ("^-1")?
Braid parse_braid(const std::string& text, int strands);
std::string format_braid(const Braid& b);

Braid inverse(const Braid& b);
// c^-1 b c
Braid conjugate(const Braid& b, const BraidWord& c);
// cancel adjacent alpha_k^{+1} alpha_k^{-1} pairs
Braid free_reduce(const Braid& b);

// Strand-doubling embeddings C_n -> C_{n+1}.
// eps_minus: letters unchanged (new strand appended on the right).
// eps_plus: alpha_0 -> alpha_1 alpha_0 alpha_1, alpha_i -> alpha_{i+1}
//           (new strand inserted on the left).
Braid eps_minus(const Braid& b);
Braid eps_plus(const Braid& b);

// Reflection r of C_n: r(alpha_i) = alpha_{n-i} for i >= 1 and
// r(alpha_0) = (alpha_{n-1} ... alpha_1 alpha_0 alpha_1 ... alpha_{n-1})^{-1}.
Braid reflect(const Braid& b);

// Stabilization moves (closure-preserving; framing bookkeeping f -> f -+ 1
// for sign = +-1 is the caller's duty).
// minus: eps_minus(b) . alpha_n^{sign};  plus: eps_plus(b) . alpha_1^{sign}.
Braid stabilize_minus(const Braid& b, int sign);
Braid stabilize_plus(const Braid& b, int sign);

// beta(p,q) = (alpha_0 alpha_1 ... alpha_{p-1})^q in C_p.
Braid torus_braid(int p, int q);

// perm[i] = final position of strand i (1-indexed; perm[0] unused).
std::vector<int> permutation(const Braid& b);

}  // namespace cordal
