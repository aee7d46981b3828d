#pragma once

// A brick universe interns bricks of one algebra under integer ids and caches
// the linear algebra the mutation engine asks for. RA_n universes enumerate
// every brick up front; the D4 universe interns bricks as they appear.

#include "quiver.hpp"
#include "string_brick.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brickyard {

enum class Backend { Arc, Matrix };

/// Outcome of a minimal Filt(S)-approximation.
struct Approximation {
    MapKind kind = MapKind::Zero;
    std::size_t multiplicity = 0; // d = dim Hom between the two bricks
    int result = -1;              // brick replacing the approximated one, -1 for Neither
    bool result_in_D = false;     // shift of the replacement
};

class BrickUniverse {
public:
    static BrickUniverse ra(int n, std::uint32_t p = 101, Backend backend = Backend::Arc, bool cross_check = true) {
        BrickUniverse U(make_ra(n, p));
        U.backend_ = backend;
        U.cross_check_ = cross_check;
        for (const auto& b : enumerate_bricks(n)) {
            int id = static_cast<int>(U.reps_.size());
            U.reps_.push_back(rep_of_string(U.A_, b));
            U.strings_.push_back(b);
            U.names_.push_back(stacked_label(b));
            U.string_ids_[b] = id;
            U.by_dims_[U.reps_.back().dims].push_back(id);
        }
        return U;
    }

    static BrickUniverse pi_d4(std::uint32_t p = 101) {
        BrickUniverse U(make_pi_d4(p));
        U.backend_ = Backend::Matrix;
        U.cross_check_ = false;
        for (int v = 0; v < 4; ++v) U.intern(simple_rep(U.A_, v), std::to_string(v + 1));
        return U;
    }

    const Algebra& algebra() const { return A_; }
    bool is_ra() const { return A_.kind == AlgebraKind::RA; }
    Backend backend() const { return backend_; }
    int rank() const { return A_.vertex_count(); }
    /// Length of the longest chain of torsion classes.
    int chain_bound() const { return is_ra() ? A_.n * (A_.n + 1) / 2 : 12; }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return reps_.size();
    }

    const Representation& rep(int id) const {
        std::lock_guard lock(mu_);
        return reps_.at(id);
    }
    std::optional<StringBrick> string_brick(int id) const {
        std::lock_guard lock(mu_);
        return strings_.at(id);
    }
    std::string label(int id) const {
        std::lock_guard lock(mu_);
        return names_.at(id);
    }
    /// Canonical ordering key; search order follows it.
    std::string key(int id) const {
        std::lock_guard lock(mu_);
        if (strings_.at(id)) return strings_[id]->to_string();
        std::string k;
        for (auto d : reps_[id].dims) k += std::to_string(d) + ".";
        return k + "#" + std::to_string(id);
    }

    int id_of(const StringBrick& b) const {
        std::lock_guard lock(mu_);
        auto it = string_ids_.find(b);
        if (it == string_ids_.end()) throw std::invalid_argument("string brick " + b.to_string() + " is not in this universe");
        return it->second;
    }

    /// Id of a brick isomorphic to M, adding it when new. Throws when M is not
    /// a module or not a brick.
    int intern(const Representation& M, std::string name = {}) {
        if (auto v = rep_violation(A_, M)) throw std::invalid_argument("not a module: " + *v);
        if (backend_ == Backend::Arc) {
            auto s = string_of_rep(A_, M);
            if (!s) throw std::invalid_argument("representation is not a string brick of RA_n");
            return id_of(*s);
        }
        std::vector<int> candidates;
        {
            std::lock_guard lock(mu_);
            auto it = by_dims_.find(M.dims);
            if (it != by_dims_.end()) candidates = it->second;
        }
        for (int id : candidates)
            if (is_iso(A_, rep(id), M)) return id;
        if (!is_brick(A_, M)) throw std::invalid_argument("module is not a brick");
        std::lock_guard lock(mu_);
        int id = static_cast<int>(reps_.size());
        reps_.push_back(M);
        auto s = string_of_rep(A_, M);
        strings_.push_back(s);
        if (name.empty()) {
            if (s) name = stacked_label(*s);
            else {
                name = "dim(";
                for (std::size_t v = 0; v < M.dims.size(); ++v) name += (v ? "," : "") + std::to_string(M.dims[v]);
                name += ")";
            }
        }
        names_.push_back(name);
        by_dims_[M.dims].push_back(id);
        return id;
    }

    std::size_t hom_dim(int a, int b) const {
        if (auto c = lookup(hom_cache_, a, b)) return *c;
        std::size_t d;
        if (backend_ == Backend::Arc) {
            auto S = string_brick(a), T = string_brick(b);
            d = hom_arc_basis(*S, *T).size();
            if (cross_check_) {
                auto oracle = brickyard::hom_dim(A_, rep(a), rep(b));
                if (oracle != d)
                    throw std::logic_error("arc Hom count disagrees with the oracle for " + label(a) + " -> " + label(b));
            }
        } else {
            d = brickyard::hom_dim(A_, rep(a), rep(b));
        }
        store(hom_cache_, a, b, d);
        return d;
    }

    std::size_t ext_dim(int a, int b) const {
        if (auto c = lookup(ext_cache_, a, b)) return *c;
        std::size_t d = brickyard::ext_dim(A_, rep(a), rep(b));
        if (backend_ == Backend::Arc && cross_check_) {
            bool arcs = ext_nonzero_by_arcs(*string_brick(a), *string_brick(b)).has_value();
            if (arcs != (d > 0))
                throw std::logic_error("arc Ext detection disagrees with the oracle for " + label(a) + ", " + label(b));
        }
        store(ext_cache_, a, b, d);
        return d;
    }

    /// Minimal left Filt(S)-approximation T -> S^d of a brick T in U; the
    /// replacement is T itself (zero map), the cokernel (mono) or the kernel (epi).
    Approximation left_approximation(int T, int S) {
        if (auto c = lookup(left_cache_, T, S)) return *c;
        Approximation ap;
        const auto& MT = rep(T);
        const auto& MS = rep(S);
        auto basis = hom_space(A_, MT, MS);
        ap.multiplicity = basis.size();
        if (basis.empty()) {
            ap.kind = MapKind::Zero;
            ap.result = T;
            ap.result_in_D = false;
        } else {
            Morphism f;
            for (std::size_t v = 0; v < MT.dims.size(); ++v) {
                Matrix stacked(0, MT.dims[v]);
                for (const auto& h : basis) stacked = vconcat(stacked, h[v]);
                f.push_back(std::move(stacked));
            }
            Representation target = MS;
            for (std::size_t k = 1; k < basis.size(); ++k) target = direct_sum(A_, target, MS);
            ap.kind = classify_morphism(A_, f);
            if (ap.kind == MapKind::Mono) {
                ap.result = intern(hom_image_factorization(A_, f, MT, target).cokernel);
                ap.result_in_D = true;
            } else if (ap.kind == MapKind::Epi) {
                ap.result = intern(hom_image_factorization(A_, f, MT, target).kernel);
                ap.result_in_D = false;
            } else if (ap.kind == MapKind::Iso) {
                throw std::logic_error("left approximation is an isomorphism; the pair is not a semibrick pair");
            }
        }
        store(left_cache_, T, S, ap);
        return ap;
    }

    /// Minimal right Filt(S)-approximation S^d -> T of a brick T in D; the
    /// replacement is T itself (zero map), the cokernel (mono, stays in D) or
    /// the kernel (epi, moves to U).
    Approximation right_approximation(int S, int T) {
        if (auto c = lookup(right_cache_, S, T)) return *c;
        Approximation ap;
        const auto& MS = rep(S);
        const auto& MT = rep(T);
        auto basis = hom_space(A_, MS, MT);
        ap.multiplicity = basis.size();
        if (basis.empty()) {
            ap.kind = MapKind::Zero;
            ap.result = T;
            ap.result_in_D = true;
        } else {
            Morphism f;
            for (std::size_t v = 0; v < MT.dims.size(); ++v) {
                Matrix row(MT.dims[v], 0);
                for (const auto& h : basis) row = hconcat(row, h[v]);
                f.push_back(std::move(row));
            }
            Representation source = MS;
            for (std::size_t k = 1; k < basis.size(); ++k) source = direct_sum(A_, source, MS);
            ap.kind = classify_morphism(A_, f);
            if (ap.kind == MapKind::Mono) {
                ap.result = intern(hom_image_factorization(A_, f, source, MT).cokernel);
                ap.result_in_D = true;
            } else if (ap.kind == MapKind::Epi) {
                ap.result = intern(hom_image_factorization(A_, f, source, MT).kernel);
                ap.result_in_D = false;
            } else if (ap.kind == MapKind::Iso) {
                throw std::logic_error("right approximation is an isomorphism; the pair is not a semibrick pair");
            }
        }
        store(right_cache_, S, T, ap);
        return ap;
    }

    /// E with S^e -> E -> T, e = dim Ext^1(T, S).
    int extend_below(int T, int S) {
        if (auto c = lookup(below_cache_, T, S)) return *c;
        int id = ext_dim(T, S) == 0 ? T : intern(universal_extension(A_, rep(T), rep(S)));
        store(below_cache_, T, S, id);
        return id;
    }

    /// E with T -> E -> S^e, e = dim Ext^1(S, T).
    int extend_above(int T, int S) {
        if (auto c = lookup(above_cache_, T, S)) return *c;
        int id = ext_dim(S, T) == 0 ? T : intern(universal_coextension(A_, rep(T), rep(S)));
        store(above_cache_, T, S, id);
        return id;
    }

    BrickUniverse(BrickUniverse&& o) noexcept { move_from(std::move(o)); }
    BrickUniverse& operator=(BrickUniverse&& o) noexcept {
        move_from(std::move(o));
        return *this;
    }

private:
    explicit BrickUniverse(Algebra A) : A_(std::move(A)) {}

    void move_from(BrickUniverse&& o) {
        A_ = std::move(o.A_);
        backend_ = o.backend_;
        cross_check_ = o.cross_check_;
        reps_ = std::move(o.reps_);
        strings_ = std::move(o.strings_);
        names_ = std::move(o.names_);
        string_ids_ = std::move(o.string_ids_);
        by_dims_ = std::move(o.by_dims_);
        hom_cache_ = std::move(o.hom_cache_);
        ext_cache_ = std::move(o.ext_cache_);
        left_cache_ = std::move(o.left_cache_);
        right_cache_ = std::move(o.right_cache_);
        below_cache_ = std::move(o.below_cache_);
        above_cache_ = std::move(o.above_cache_);
    }

    static std::uint64_t pair_key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }
    template <class V>
    std::optional<V> lookup(const std::unordered_map<std::uint64_t, V>& m, int a, int b) const {
        std::lock_guard lock(mu_);
        auto it = m.find(pair_key(a, b));
        if (it == m.end()) return std::nullopt;
        return it->second;
    }
    template <class V>
    void store(std::unordered_map<std::uint64_t, V>& m, int a, int b, V v) const {
        std::lock_guard lock(mu_);
        m.emplace(pair_key(a, b), std::move(v));
    }

    Algebra A_;
    Backend backend_ = Backend::Matrix;
    bool cross_check_ = false;
    std::deque<Representation> reps_; // stable references across interning
    std::vector<std::optional<StringBrick>> strings_;
    std::vector<std::string> names_;
    std::map<StringBrick, int> string_ids_;
    std::map<std::vector<std::size_t>, std::vector<int>> by_dims_;
    mutable std::unordered_map<std::uint64_t, std::size_t> hom_cache_, ext_cache_;
    mutable std::unordered_map<std::uint64_t, Approximation> left_cache_, right_cache_;
    mutable std::unordered_map<std::uint64_t, int> below_cache_, above_cache_;
    mutable std::mutex mu_;
};

} // namespace brickyard
