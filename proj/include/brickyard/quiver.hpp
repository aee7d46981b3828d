#pragma once

// Quiver representations with relations over F_p, plus the linear-algebra
// computations of Hom, Ext^1, extensions and image factorizations.

#include "field.hpp"
#include "string_brick.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

enum class AlgebraKind { RA, PiD4, Custom };

struct QuiverArrow {
    std::string name;
    int source; // 0-based vertex index
    int target;
};

struct PathTerm {
    std::uint32_t coeff;
    std::vector<int> arrows; // traversal order: arrows[0] is applied first
};

struct Relation {
    int source;
    int target;
    std::vector<PathTerm> terms;
};

struct Algebra {
    AlgebraKind kind = AlgebraKind::Custom;
    int n = 0; // RA_n rank parameter; 4 for PiD4
    PrimeField field{101};
    std::vector<std::string> vertex_names;
    std::vector<QuiverArrow> arrows;
    std::vector<Relation> relations;

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown arrow " + name);
    }
    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertex_names.size(); ++i)
            if (vertex_names[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown vertex " + name);
    }
    std::string kind_name() const {
        switch (kind) {
        case AlgebraKind::RA: return "RA";
        case AlgebraKind::PiD4: return "PiD4";
        default: return "custom";
        }
    }
};

/// RA_n: vertices 1..n, arrows a_i : i -> i+1 and a_i^* : i+1 -> i, all
/// two-cycles zero. Arrow 2(i-1) is a_i and 2(i-1)+1 is a_i^*.
inline Algebra make_ra(int n, std::uint32_t p = 101) {
    if (n < 1) throw std::invalid_argument("RA_n needs n >= 1");
    Algebra A;
    A.kind = AlgebraKind::RA;
    A.n = n;
    A.field = PrimeField(p);
    for (int v = 1; v <= n; ++v) A.vertex_names.push_back(std::to_string(v));
    for (int i = 1; i < n; ++i) {
        A.arrows.push_back({"a" + std::to_string(i), i - 1, i});
        A.arrows.push_back({"a" + std::to_string(i) + "*", i, i - 1});
        int down = 2 * (i - 1), up = down + 1;
        A.relations.push_back({i - 1, i - 1, {{1, {down, up}}}});
        A.relations.push_back({i, i, {{1, {up, down}}}});
    }
    return A;
}

/// Preprojective algebra of type D4: center vertex 1, leaves 2,3,4, arrows
/// a_i : i -> 1 and a_i^* : 1 -> i. Each leaf two-cycle vanishes and the three
/// two-cycles at the center sum to zero.
inline Algebra make_pi_d4(std::uint32_t p = 101) {
    Algebra A;
    A.kind = AlgebraKind::PiD4;
    A.n = 4;
    A.field = PrimeField(p);
    A.vertex_names = {"1", "2", "3", "4"};
    for (int leaf = 1; leaf <= 3; ++leaf) {
        A.arrows.push_back({"a" + std::to_string(leaf + 1), leaf, 0});
        A.arrows.push_back({"a" + std::to_string(leaf + 1) + "*", 0, leaf});
    }
    Relation center{0, 0, {}};
    for (int leaf = 1; leaf <= 3; ++leaf) {
        int in = 2 * (leaf - 1), out = in + 1;
        A.relations.push_back({leaf, leaf, {{1, {in, out}}}});
        center.terms.push_back({1, {out, in}});
    }
    A.relations.push_back(center);
    return A;
}

struct Representation {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps; // maps[a] has shape dims[target] x dims[source]

    std::size_t total_dim() const {
        std::size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Representation&) const = default;
};

/// Family of vertex maps M_v -> N_v.
using Morphism = std::vector<Matrix>;

inline Representation zero_rep(const Algebra& A) {
    Representation R;
    R.dims.assign(A.vertex_count(), 0);
    R.maps.assign(A.arrows.size(), Matrix(0, 0));
    return R;
}

/// Representation with the given dimensions and all arrows zero.
inline Representation blank_rep(const Algebra& A, std::vector<std::size_t> dims) {
    if (static_cast<int>(dims.size()) != A.vertex_count()) throw std::invalid_argument("dimension vector has wrong length");
    Representation R;
    R.dims = std::move(dims);
    for (const auto& a : A.arrows) R.maps.emplace_back(R.dims[a.target], R.dims[a.source]);
    return R;
}

inline Matrix evaluate_path(const Algebra& A, const Representation& M, const std::vector<int>& path) {
    const auto& F = A.field;
    Matrix acc = Matrix::identity(M.dims[A.arrows[path.front()].source]);
    for (int a : path) acc = multiply(F, M.maps[a], acc);
    return acc;
}

inline Matrix evaluate_relation(const Algebra& A, const Representation& M, const Relation& r) {
    const auto& F = A.field;
    Matrix acc(M.dims[r.target], M.dims[r.source]);
    for (const auto& t : r.terms) acc = add(F, acc, scale(F, t.coeff, evaluate_path(A, M, t.arrows)));
    return acc;
}

/// Empty when M is a valid module; otherwise a message naming the problem.
inline std::optional<std::string> rep_violation(const Algebra& A, const Representation& M) {
    if (static_cast<int>(M.dims.size()) != A.vertex_count()) return std::string("dimension vector has wrong length");
    if (M.maps.size() != A.arrows.size()) return std::string("wrong number of arrow matrices");
    for (std::size_t i = 0; i < A.arrows.size(); ++i) {
        const auto& a = A.arrows[i];
        if (M.maps[i].rows() != M.dims[a.target] || M.maps[i].cols() != M.dims[a.source])
            return "matrix for arrow " + a.name + " has the wrong shape";
        for (std::size_t r = 0; r < M.maps[i].rows(); ++r)
            for (std::size_t c = 0; c < M.maps[i].cols(); ++c)
                if (M.maps[i](r, c) >= A.field.characteristic()) return "matrix entry for " + a.name + " is not reduced";
    }
    for (std::size_t k = 0; k < A.relations.size(); ++k)
        if (!evaluate_relation(A, M, A.relations[k]).is_zero()) return "relation " + std::to_string(k) + " does not vanish";
    return std::nullopt;
}

inline Representation simple_rep(const Algebra& A, int vertex) {
    std::vector<std::size_t> d(A.vertex_count(), 0);
    d.at(vertex) = 1;
    return blank_rep(A, d);
}

inline Representation rep_of_string(const Algebra& A, const StringBrick& b) {
    if (A.kind != AlgebraKind::RA || A.n != b.n) throw std::invalid_argument("string brick does not belong to this algebra");
    std::vector<std::size_t> d(A.n, 0);
    for (int v = b.first; v <= b.last; ++v) d[v - 1] = 1;
    auto R = blank_rep(A, d);
    for (int e = b.first; e < b.last; ++e) {
        int arrow = 2 * (e - 1) + (b.action(e) == Action::Down ? 0 : 1);
        R.maps[arrow](0, 0) = 1;
    }
    return R;
}

/// Reads a representation of RA_n back as a string brick when it is one.
inline std::optional<StringBrick> string_of_rep(const Algebra& A, const Representation& M) {
    if (A.kind != AlgebraKind::RA) return std::nullopt;
    int first = 0, last = 0;
    for (int v = 1; v <= A.n; ++v) {
        auto d = M.dims[v - 1];
        if (d > 1) return std::nullopt;
        if (d == 1) {
            if (first == 0) first = v;
            else if (last != v - 1) return std::nullopt;
            last = v;
        }
    }
    if (first == 0) return std::nullopt;
    std::vector<Action> acts;
    for (int e = first; e < last; ++e) {
        bool down = !M.maps[2 * (e - 1)].is_zero();
        bool up = !M.maps[2 * (e - 1) + 1].is_zero();
        if (down == up) return std::nullopt;
        acts.push_back(down ? Action::Down : Action::Up);
    }
    return StringBrick(A.n, first, last, std::move(acts));
}

inline Representation direct_sum(const Algebra& A, const Representation& M, const Representation& N) {
    Representation R;
    for (std::size_t v = 0; v < M.dims.size(); ++v) R.dims.push_back(M.dims[v] + N.dims[v]);
    for (std::size_t a = 0; a < A.arrows.size(); ++a) {
        const auto& ar = A.arrows[a];
        R.maps.push_back(block(M.maps[a], Matrix(M.dims[ar.target], N.dims[ar.source]),
                               Matrix(N.dims[ar.target], M.dims[ar.source]), N.maps[a]));
    }
    return R;
}

namespace detail {
// Offsets of per-vertex (or per-arrow) blocks inside a flattened coordinate vector.
struct BlockLayout {
    std::vector<std::size_t> offset;
    std::vector<std::size_t> rows, cols;
    std::size_t total = 0;
    void push(std::size_t r, std::size_t c) {
        offset.push_back(total);
        rows.push_back(r);
        cols.push_back(c);
        total += r * c;
    }
    Matrix unpack(const Matrix& vec, std::size_t col, std::size_t k) const {
        Matrix m(rows[k], cols[k]);
        for (std::size_t i = 0; i < rows[k]; ++i)
            for (std::size_t j = 0; j < cols[k]; ++j) m(i, j) = vec(offset[k] + i * cols[k] + j, col);
        return m;
    }
    void pack(Matrix& vec, std::size_t col, std::size_t k, const Matrix& m) const {
        for (std::size_t i = 0; i < rows[k]; ++i)
            for (std::size_t j = 0; j < cols[k]; ++j) vec(offset[k] + i * cols[k] + j, col) = m(i, j);
    }
};

// Matrix of a linear map given as a function on unit vectors.
template <class Fn>
Matrix matrix_of(std::size_t in_dim, std::size_t out_dim, Fn&& apply) {
    Matrix out(out_dim, in_dim);
    for (std::size_t k = 0; k < in_dim; ++k) {
        Matrix e(in_dim, 1);
        e(k, 0) = 1;
        Matrix image = apply(e);
        for (std::size_t r = 0; r < out_dim; ++r) out(r, k) = image(r, 0);
    }
    return out;
}

struct HomComplex {
    BlockLayout c0, c1, c2;
    Matrix d0, d1;
};

inline HomComplex hom_complex(const Algebra& A, const Representation& M, const Representation& N, bool with_d1) {
    const auto& F = A.field;
    HomComplex h;
    for (int v = 0; v < A.vertex_count(); ++v) h.c0.push(N.dims[v], M.dims[v]);
    for (const auto& a : A.arrows) h.c1.push(N.dims[a.target], M.dims[a.source]);
    for (const auto& r : A.relations) h.c2.push(N.dims[r.target], M.dims[r.source]);

    h.d0 = matrix_of(h.c0.total, h.c1.total, [&](const Matrix& x) {
        Matrix y(h.c1.total, 1);
        for (std::size_t k = 0; k < A.arrows.size(); ++k) {
            const auto& a = A.arrows[k];
            Matrix fs = h.c0.unpack(x, 0, a.source), ft = h.c0.unpack(x, 0, a.target);
            h.c1.pack(y, 0, k, subtract(F, multiply(F, N.maps[k], fs), multiply(F, ft, M.maps[k])));
        }
        return y;
    });
    if (!with_d1) return h;

    h.d1 = matrix_of(h.c1.total, h.c2.total, [&](const Matrix& x) {
        Matrix y(h.c2.total, 1);
        for (std::size_t k = 0; k < A.relations.size(); ++k) {
            const auto& r = A.relations[k];
            Matrix acc(N.dims[r.target], M.dims[r.source]);
            for (const auto& t : r.terms) {
                for (std::size_t j = 0; j < t.arrows.size(); ++j) {
                    // N_{a_k} ... N_{a_{j+1}} phi_{a_j} M_{a_{j-1}} ... M_{a_1}
                    int aj = t.arrows[j];
                    Matrix left = Matrix::identity(N.dims[A.arrows[aj].target]);
                    for (std::size_t i = j + 1; i < t.arrows.size(); ++i) left = multiply(F, N.maps[t.arrows[i]], left);
                    Matrix right = Matrix::identity(M.dims[r.source]);
                    for (std::size_t i = 0; i < j; ++i) right = multiply(F, M.maps[t.arrows[i]], right);
                    Matrix term = multiply(F, left, multiply(F, h.c1.unpack(x, 0, aj), right));
                    acc = add(F, acc, scale(F, t.coeff, term));
                }
            }
            h.c2.pack(y, 0, k, acc);
        }
        return y;
    });
    return h;
}
} // namespace detail

/// Basis of Hom(M, N) as vertex-wise matrix families.
inline std::vector<Morphism> hom_space(const Algebra& A, const Representation& M, const Representation& N) {
    auto h = detail::hom_complex(A, M, N, false);
    Matrix ker = nullspace(A.field, h.d0);
    std::vector<Morphism> basis;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Morphism f;
        for (int v = 0; v < A.vertex_count(); ++v) f.push_back(h.c0.unpack(ker, k, v));
        basis.push_back(std::move(f));
    }
    return basis;
}

inline std::size_t hom_dim(const Algebra& A, const Representation& M, const Representation& N) {
    auto h = detail::hom_complex(A, M, N, false);
    return h.c0.total - rank(A.field, h.d0);
}

/// Per-arrow maps phi_a : M_{s(a)} -> N_{t(a)} representing a class in Ext^1(M, N).
using Cocycle = std::vector<Matrix>;

struct ExtSpace {
    std::size_t dim = 0;
    std::vector<Cocycle> basis;
};

/// Ext^1(M, N) as cocycles modulo coboundaries; the extension defined by a
/// cocycle has N as submodule and M as quotient.
inline ExtSpace ext_space(const Algebra& A, const Representation& M, const Representation& N) {
    const auto& F = A.field;
    auto h = detail::hom_complex(A, M, N, true);
    Matrix cycles = nullspace(F, h.d1);
    Matrix bounds = column_space(F, h.d0);
    ExtSpace e;
    e.dim = cycles.cols() - bounds.cols();
    if (e.dim == 0) return e;
    auto ech = row_reduce(F, hconcat(bounds, cycles));
    for (auto p : ech.pivots) {
        if (p < bounds.cols()) continue;
        Cocycle c;
        for (std::size_t k = 0; k < A.arrows.size(); ++k) c.push_back(h.c1.unpack(cycles, p - bounds.cols(), k));
        e.basis.push_back(std::move(c));
    }
    if (e.basis.size() != e.dim) throw std::logic_error("ext basis size mismatch");
    return e;
}

inline std::size_t ext_dim(const Algebra& A, const Representation& M, const Representation& N) {
    auto h = detail::hom_complex(A, M, N, true);
    return nullspace(A.field, h.d1).cols() - rank(A.field, h.d0);
}

/// The module E with S as submodule and T as quotient defined by a cocycle
/// for Ext^1(T, S).
inline Representation extension_from_cocycle(const Algebra& A, const Cocycle& c, const Representation& T,
                                             const Representation& S) {
    Representation E;
    for (std::size_t v = 0; v < T.dims.size(); ++v) E.dims.push_back(S.dims[v] + T.dims[v]);
    for (std::size_t k = 0; k < A.arrows.size(); ++k) {
        const auto& a = A.arrows[k];
        if (c[k].rows() != S.dims[a.target] || c[k].cols() != T.dims[a.source])
            throw std::invalid_argument("cocycle has the wrong shape");
        E.maps.push_back(block(S.maps[k], c[k], Matrix(T.dims[a.target], S.dims[a.source]), T.maps[k]));
    }
    if (auto v = rep_violation(A, E)) throw std::invalid_argument("cocycle does not define a module: " + *v);
    return E;
}

/// E with S^e -> E -> T exact, e = dim Ext^1(T, S), built from a cocycle basis.
inline Representation universal_extension(const Algebra& A, const Representation& T, const Representation& S) {
    auto ext = ext_space(A, T, S);
    if (ext.dim == 0) return T;
    std::size_t e = ext.dim;
    Representation E;
    for (std::size_t v = 0; v < T.dims.size(); ++v) E.dims.push_back(S.dims[v] * e + T.dims[v]);
    for (std::size_t k = 0; k < A.arrows.size(); ++k) {
        const auto& a = A.arrows[k];
        Matrix stacked(0, T.dims[a.source]);
        for (const auto& c : ext.basis) stacked = vconcat(stacked, c[k]);
        E.maps.push_back(block(block_diagonal(S.maps[k], e), stacked, Matrix(T.dims[a.target], S.dims[a.source] * e),
                               T.maps[k]));
    }
    if (auto v = rep_violation(A, E)) throw std::logic_error("universal extension violates relations: " + *v);
    return E;
}

/// E with T -> E -> S^e exact, e = dim Ext^1(S, T).
inline Representation universal_coextension(const Algebra& A, const Representation& T, const Representation& S) {
    auto ext = ext_space(A, S, T);
    if (ext.dim == 0) return T;
    std::size_t e = ext.dim;
    Representation E;
    for (std::size_t v = 0; v < T.dims.size(); ++v) E.dims.push_back(T.dims[v] + S.dims[v] * e);
    for (std::size_t k = 0; k < A.arrows.size(); ++k) {
        const auto& a = A.arrows[k];
        Matrix row(T.dims[a.target], 0);
        for (const auto& c : ext.basis) row = hconcat(row, c[k]);
        E.maps.push_back(block(T.maps[k], row, Matrix(S.dims[a.target] * e, T.dims[a.source]), block_diagonal(S.maps[k], e)));
    }
    if (auto v = rep_violation(A, E)) throw std::logic_error("universal coextension violates relations: " + *v);
    return E;
}

inline bool is_morphism(const Algebra& A, const Morphism& f, const Representation& M, const Representation& N) {
    const auto& F = A.field;
    for (std::size_t k = 0; k < A.arrows.size(); ++k) {
        const auto& a = A.arrows[k];
        if (multiply(F, N.maps[k], f[a.source]) != multiply(F, f[a.target], M.maps[k])) return false;
    }
    return true;
}

struct Factorization {
    Representation kernel;
    Representation image;
    Representation cokernel;
};

inline Factorization hom_image_factorization(const Algebra& A, const Morphism& f, const Representation& M,
                                             const Representation& N) {
    const auto& F = A.field;
    if (!is_morphism(A, f, M, N)) throw std::invalid_argument("not a module homomorphism");
    int V = A.vertex_count();
    std::vector<Matrix> K(V), I(V), P(V), Q(V);
    Factorization out;
    for (int v = 0; v < V; ++v) {
        K[v] = nullspace(F, f[v]);
        I[v] = column_space(F, f[v]);
        P[v] = cokernel_projection(F, f[v]);
        Q[v] = solve(F, P[v], Matrix::identity(P[v].rows())); // a section of P[v]
        out.kernel.dims.push_back(K[v].cols());
        out.image.dims.push_back(I[v].cols());
        out.cokernel.dims.push_back(P[v].rows());
    }
    for (std::size_t k = 0; k < A.arrows.size(); ++k) {
        const auto& a = A.arrows[k];
        out.kernel.maps.push_back(solve(F, K[a.target], multiply(F, M.maps[k], K[a.source])));
        out.image.maps.push_back(solve(F, I[a.target], multiply(F, N.maps[k], I[a.source])));
        out.cokernel.maps.push_back(multiply(F, P[a.target], multiply(F, N.maps[k], Q[a.source])));
    }
    return out;
}

enum class MapKind { Zero, Mono, Epi, Iso, Neither };

inline const char* map_kind_name(MapKind k) {
    switch (k) {
    case MapKind::Zero: return "zero";
    case MapKind::Mono: return "mono";
    case MapKind::Epi: return "epi";
    case MapKind::Iso: return "iso";
    case MapKind::Neither: return "neither";
    }
    return "?";
}

inline MapKind classify_morphism(const Algebra& A, const Morphism& f) {
    bool zero = true, mono = true, epi = true;
    for (const auto& m : f) {
        auto r = rank(A.field, m);
        if (r) zero = false;
        if (r != m.cols()) mono = false;
        if (r != m.rows()) epi = false;
    }
    if (zero) return MapKind::Zero;
    if (mono && epi) return MapKind::Iso;
    if (mono) return MapKind::Mono;
    if (epi) return MapKind::Epi;
    return MapKind::Neither;
}

inline bool is_brick(const Algebra& A, const Representation& M) {
    return !M.is_zero() && hom_dim(A, M, M) == 1;
}

inline bool is_isomorphism(const Algebra& A, const Morphism& f) {
    for (const auto& m : f)
        if (!is_invertible(A.field, m)) return false;
    return true;
}

/// Isomorphism test: look for an invertible element of Hom(M, N). Hom spaces
/// of dimension at most two are searched exhaustively up to scalars; larger
/// ones are sampled with a fixed seed.
inline bool is_iso(const Algebra& A, const Representation& M, const Representation& N) {
    if (M.dims != N.dims) return false;
    if (M.is_zero()) return true;
    const auto& F = A.field;
    auto basis = hom_space(A, M, N);
    if (basis.empty()) return false;
    auto combine = [&](const std::vector<std::uint32_t>& coeffs) {
        Morphism f;
        for (std::size_t v = 0; v < M.dims.size(); ++v) {
            Matrix acc(N.dims[v], M.dims[v]);
            for (std::size_t k = 0; k < basis.size(); ++k) acc = add(F, acc, scale(F, coeffs[k], basis[k][v]));
            f.push_back(std::move(acc));
        }
        return f;
    };
    if (basis.size() == 1) return is_isomorphism(A, basis[0]);
    if (basis.size() == 2) {
        if (is_isomorphism(A, basis[1])) return true;
        for (std::uint32_t t = 0; t < F.characteristic(); ++t)
            if (is_isomorphism(A, combine({1, t}))) return true;
        return false;
    }
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.characteristic() - 1);
    for (int trial = 0; trial < 256; ++trial) {
        std::vector<std::uint32_t> c(basis.size());
        for (auto& x : c) x = pick(rng);
        if (is_isomorphism(A, combine(c))) return true;
    }
    return false;
}

} // namespace brickyard
