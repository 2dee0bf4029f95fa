#include <cordal/braid.hpp>

#include <cordal/errors.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cordal {

Braid parse_braid(const std::string& text, int strands) {
    BraidWord word;
    int max_index = -1;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw UsageError("braid syntax: " + why + " at offset " + std::to_string(pos));
    };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != 'a') fail("expected 'a'");
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected generator index");
        int k = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            k = k * 10 + (text[pos] - '0');
            if (k > 4096) fail("index out of range");
            ++pos;
        }
        int sign = 1;
        if (pos < text.size() && text[pos] == '^') {
            if (text.size() - pos >= 3 && text.compare(pos, 3, "^-1") == 0) {
                sign = -1;
                pos += 3;
            } else {
                fail("expected ^-1");
            }
        }
        max_index = std::max(max_index, k);
        word.push_back({k, sign});
    }
    int n = strands > 0 ? strands : std::max(max_index + 1, 1);
    if (max_index >= n)
        throw UsageError("generator index " + std::to_string(max_index) +
                         " needs at least " + std::to_string(max_index + 1) +
                         " strands, got " + std::to_string(n));
    return {n, std::move(word)};
}

std::string format_braid(const Braid& b) {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : b.word) {
        if (!first) os << ' ';
        first = false;
        os << 'a' << l.k;
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

Braid inverse(const Braid& b) {
    Braid r{b.strands, {}};
    r.word.reserve(b.word.size());
    for (auto it = b.word.rbegin(); it != b.word.rend(); ++it)
        r.word.push_back({it->k, -it->sign});
    return r;
}

Braid conjugate(const Braid& b, const BraidWord& c) {
    Braid r{b.strands, {}};
    r.word.reserve(b.word.size() + 2 * c.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) r.word.push_back({it->k, -it->sign});
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    r.word.insert(r.word.end(), c.begin(), c.end());
    return r;
}

Braid free_reduce(const Braid& b) {
    Braid r{b.strands, {}};
    for (const Letter& l : b.word) {
        if (!r.word.empty() && r.word.back().k == l.k && r.word.back().sign == -l.sign)
            r.word.pop_back();
        else
            r.word.push_back(l);
    }
    return r;
}

Braid eps_minus(const Braid& b) { return {b.strands + 1, b.word}; }

Braid eps_plus(const Braid& b) {
    Braid r{b.strands + 1, {}};
    for (const Letter& l : b.word) {
        if (l.k == 0) {
            // alpha_0 -> alpha_1 alpha_0 alpha_1 (inverse reverses to the same shape)
            r.word.push_back({1, l.sign});
            r.word.push_back({0, l.sign});
            r.word.push_back({1, l.sign});
        } else {
            r.word.push_back({l.k + 1, l.sign});
        }
    }
    return r;
}

Braid reflect(const Braid& b) {
    int n = b.strands;
    Braid r{n, {}};
    for (const Letter& l : b.word) {
        if (l.k == 0) {
            // (alpha_{n-1} ... alpha_1 alpha_0 alpha_1 ... alpha_{n-1})^{-sign}
            BraidWord seq;
            for (int t = n - 1; t >= 1; --t) seq.push_back({t, 1});
            seq.push_back({0, 1});
            for (int t = 1; t <= n - 1; ++t) seq.push_back({t, 1});
            if (l.sign > 0) {
                for (auto it = seq.rbegin(); it != seq.rend(); ++it)
                    r.word.push_back({it->k, -1});
            } else {
                r.word.insert(r.word.end(), seq.begin(), seq.end());
            }
        } else {
            r.word.push_back({n - l.k, l.sign});
        }
    }
    return r;
}

Braid stabilize_minus(const Braid& b, int sign) {
    Braid r = eps_minus(b);
    r.word.push_back({b.strands, sign});
    return r;
}

Braid stabilize_plus(const Braid& b, int sign) {
    Braid r = eps_plus(b);
    r.word.push_back({1, sign});
    return r;
}

Braid torus_braid(int p, int q) {
    internal_check(p >= 1 && q >= 0, "torus_braid: bad p or q");
    Braid r{p, {}};
    r.word.reserve(static_cast<std::size_t>(p) * q);
    for (int rep = 0; rep < q; ++rep)
        for (int k = 0; k < p; ++k) r.word.push_back({k, 1});
    return r;
}

std::vector<int> permutation(const Braid& b) {
    int n = b.strands;
    std::vector<int> pos(n + 1);
    for (int i = 0; i <= n; ++i) pos[i] = i;
    // alpha_0 fixes positions; alpha_k swaps whoever sits at k, k+1
    for (const Letter& l : b.word) {
        if (l.k == 0) continue;
        for (int i = 1; i <= n; ++i) {
            if (pos[i] == l.k)
                pos[i] = l.k + 1;
            else if (pos[i] == l.k + 1)
                pos[i] = l.k;
        }
    }
    return pos;
}

}  // namespace cordal
