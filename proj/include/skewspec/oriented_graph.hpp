#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewspec/int_matrix.hpp"

namespace skewspec {

// Simple oriented graph: at most one arc per unordered vertex pair, no loops.
// Vertices are 0-based. Supported orders are 1..10.
class OrientedGraph {
public:
    explicit OrientedGraph(int n);
    OrientedGraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }

    // +1 if u->v, -1 if v->u, 0 if the pair is unjoined.
    int direction(int u, int v) const;
    bool has_arc(int u, int v) const { return direction(u, v) == 1; }

    OrientedGraph transposed() const;

    // Compact form "o<n>:<digits>": one ternary digit per vertex pair (i, j),
    // i < j, pairs ordered lexicographically; 0 none, 1 i->j, 2 j->i.
    std::string to_compact() const;
    // Text form: "n <order>" then one "u v" line per arc.
    std::string to_text() const;

    static OrientedGraph from_compact(const std::string& s);
    static OrientedGraph from_text(const std::string& content);
    // Accepts either serialization, dispatching on shape.
    static OrientedGraph parse(const std::string& content);

    bool operator==(const OrientedGraph& o) const {
        return n_ == o.n_ && arcs_ == o.arcs_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // each (u, v) meaning u->v, sorted
    std::vector<std::int8_t> dir_;           // n*n direction table

    void add_arc(int u, int v, long line);
    void finish();
};

// Bijection on {0..n-1}; sigma.image(i) is where vertex i is sent.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    // P with P(i, sigma(i)) = 1, so S(sigma D) = P^T S(D) P.
    IntMatrix matrix() const;

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

// Relabel vertices: arc (u, v) becomes (sigma(u), sigma(v)).
OrientedGraph apply_permutation(const OrientedGraph& d, const Permutation& sigma);

// A witness sigma with apply_permutation(a, sigma) == b, if any.
std::optional<Permutation> is_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

// Lexicographically smallest compact form over all relabelings. Equal strings
// exactly characterize isomorphic graphs. Brute force over n! orders; n <= 9.
std::string canonical_form(const OrientedGraph& d);

namespace detail {
// Canonical digit string (no "o<n>:" prefix) straight from an n*n direction
// table; shared by canonical_form and the census inner loop.
void canonical_digits(int n, const std::int8_t* dir, std::string& best);
}  // namespace detail

// Streams every labeled oriented graph of order n (3^(n(n-1)/2) of them) in
// increasing compact-encoding order, optionally restricted to one of `shards`
// equal slices of the counter range. Supported for n <= 6.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, std::uint64_t shards = 1, std::uint64_t shard_index = 0);

    static std::uint64_t total(int n);

    bool done() const { return pos_ >= end_; }
    std::uint64_t position() const { return pos_; }
    std::uint64_t begin_position() const { return begin_; }
    std::uint64_t end_position() const { return end_; }

    // Digits of the current graph, most significant pair first; valid while
    // !done().
    const std::uint8_t* digits() const { return digits_.data(); }
    int digit_count() const { return m_; }

    void advance();
    void seek(std::uint64_t global_index);

    OrientedGraph current_graph() const;
    std::optional<OrientedGraph> next();

private:
    int n_ = 0;
    int m_ = 0;
    std::uint64_t begin_ = 0, end_ = 0, pos_ = 0;
    std::vector<std::uint8_t> digits_;

    void load_digits();
};

}  // namespace skewspec
