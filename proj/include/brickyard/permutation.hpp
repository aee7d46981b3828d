#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brickyard {

using Pair = std::pair<int, int>;

/// A permutation of {1..n+1} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int x : word_) {
            if (x < 1 || x > static_cast<int>(word_.size()) || seen[x])
                throw std::invalid_argument("not a permutation of 1.." + std::to_string(word_.size()));
            seen[x] = true;
        }
    }

    static Permutation identity(std::size_t letters) {
        std::vector<int> w(letters);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }
    static Permutation longest(std::size_t letters) {
        std::vector<int> w(letters);
        for (std::size_t i = 0; i < letters; ++i) w[i] = static_cast<int>(letters - i);
        return Permutation(std::move(w));
    }

    /// Accepts "53412" (single digits) or a comma/space separated list.
    static Permutation parse(const std::string& text) {
        std::vector<int> w;
        bool separated = text.find_first_of(", ") != std::string::npos;
        if (separated) {
            std::string token;
            for (char ch : text + ",") {
                if (ch == ',' || ch == ' ') {
                    if (!token.empty()) w.push_back(std::stoi(token));
                    token.clear();
                } else if (ch >= '0' && ch <= '9') {
                    token += ch;
                } else {
                    throw std::invalid_argument("bad character in permutation: " + text);
                }
            }
        } else {
            for (char ch : text) {
                if (ch < '1' || ch > '9') throw std::invalid_argument("bad character in permutation: " + text);
                w.push_back(ch - '0');
            }
        }
        if (w.empty()) throw std::invalid_argument("empty permutation");
        return Permutation(std::move(w));
    }

    const std::vector<int>& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    /// Rank n of the algebra this permutation is attached to (n+1 letters).
    int rank() const { return static_cast<int>(word_.size()) - 1; }
    int operator[](std::size_t i) const { return word_[i]; }

    /// 0-based position of the letter x.
    std::size_t position(int x) const {
        for (std::size_t i = 0; i < word_.size(); ++i)
            if (word_[i] == x) return i;
        throw std::out_of_range("letter not in permutation");
    }

    std::string to_string() const {
        std::string s;
        bool wide = word_.size() > 9;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (wide && i) s += ',';
            s += std::to_string(word_[i]);
        }
        return s;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

struct PermStats {
    std::set<Pair> inversions;
    std::set<Pair> descents;
    std::set<Pair> ascents;
};

/// Pairs are normalized to (p, q) with p < q.
inline PermStats perm_stats(const Permutation& w) {
    PermStats s;
    const auto& v = w.word();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) s.inversions.insert({v[j], v[i]});
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1])
            s.descents.insert({v[i + 1], v[i]});
        else
            s.ascents.insert({v[i], v[i + 1]});
    }
    return s;
}

inline bool weak_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw std::invalid_argument("weak order comparison of permutations of different sizes");
    auto a = perm_stats(u).inversions;
    auto b = perm_stats(w).inversions;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// True when w covers u in the weak order.
inline bool weak_covers(const Permutation& u, const Permutation& w) {
    if (!weak_leq(u, w)) return false;
    return perm_stats(w).inversions.size() == perm_stats(u).inversions.size() + 1;
}

/// All permutations of {1..letters} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t letters) {
    std::vector<int> w(letters);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace brickyard
