#include "skewspec/oriented_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewspec/errors.hpp"

namespace skewspec {

namespace {
constexpr int kMaxOrder = 10;
constexpr int kMaxEnumOrder = 6;
constexpr int kMaxCanonOrder = 9;

int pair_count(int n) { return n * (n - 1) / 2; }
}  // namespace

OrientedGraph::OrientedGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
        throw InputError("graph order must be between 1 and " + std::to_string(kMaxOrder));
    dir_.assign(static_cast<std::size_t>(n) * n, 0);
}

OrientedGraph::OrientedGraph(int n, const std::vector<std::pair<int, int>>& arcs)
    : OrientedGraph(n) {
    for (const auto& [u, v] : arcs) add_arc(u, v, 0);
    finish();
}

void OrientedGraph::add_arc(int u, int v, long line) {
    auto fail = [&](const std::string& msg) -> void {
        if (line > 0) throw ParseError(msg, line);
        throw InputError(msg);
    };
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        fail("arc endpoint out of range for order " + std::to_string(n_));
    if (u == v) fail("loops are not allowed");
    if (dir_[static_cast<std::size_t>(u) * n_ + v] != 0)
        fail("duplicate or opposing arc on pair (" + std::to_string(std::min(u, v)) + ", " +
             std::to_string(std::max(u, v)) + ")");
    dir_[static_cast<std::size_t>(u) * n_ + v] = 1;
    dir_[static_cast<std::size_t>(v) * n_ + u] = -1;
    arcs_.emplace_back(u, v);
}

void OrientedGraph::finish() { std::sort(arcs_.begin(), arcs_.end()); }

int OrientedGraph::direction(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw InputError("direction: invalid vertex pair");
    return dir_[static_cast<std::size_t>(u) * n_ + v];
}

OrientedGraph OrientedGraph::transposed() const {
    OrientedGraph t(n_);
    for (const auto& [u, v] : arcs_) t.add_arc(v, u, 0);
    t.finish();
    return t;
}

std::string OrientedGraph::to_compact() const {
    std::string s = "o" + std::to_string(n_) + ":";
    s.reserve(s.size() + pair_count(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            int d = dir_[static_cast<std::size_t>(i) * n_ + j];
            s.push_back(d == 0 ? '0' : (d == 1 ? '1' : '2'));
        }
    return s;
}

std::string OrientedGraph::to_text() const {
    std::ostringstream os;
    os << "n " << n_ << '\n';
    for (const auto& [u, v] : arcs_) os << u << ' ' << v << '\n';
    return os.str();
}

OrientedGraph OrientedGraph::from_compact(const std::string& s) {
    if (s.empty() || s[0] != 'o')
        throw InputError("compact form must start with 'o'");
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw InputError("compact form is missing ':'");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(s.substr(1, colon - 1), &used);
        if (used != colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InputError("compact form has a malformed order field");
    }
    if (n < 1 || n > kMaxOrder)
        throw InputError("graph order must be between 1 and " + std::to_string(kMaxOrder));
    const std::string digits = s.substr(colon + 1);
    if (static_cast<int>(digits.size()) != pair_count(n))
        throw InputError("compact form for order " + std::to_string(n) + " needs exactly " +
                         std::to_string(pair_count(n)) + " digits");
    OrientedGraph g(n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
            switch (digits[idx]) {
                case '0':
                    break;
                case '1':
                    g.add_arc(i, j, 0);
                    break;
                case '2':
                    g.add_arc(j, i, 0);
                    break;
                default:
                    throw InputError("compact form digits must be 0, 1 or 2");
            }
        }
    g.finish();
    return g;
}

OrientedGraph OrientedGraph::from_text(const std::string& content) {
    std::istringstream in(content);
    std::string raw;
    long lineno = 0;
    bool have_order = false;
    int n = 0;
    std::vector<std::tuple<int, int, long>> arcs;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank or comment-only

        if (!have_order) {
            if (tok != "n") throw ParseError("expected header 'n <order>'", lineno);
            if (!(ls >> n)) throw ParseError("header order is not an integer", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after header", lineno);
            if (n < 1 || n > kMaxOrder)
                throw ParseError("graph order must be between 1 and " + std::to_string(kMaxOrder),
                                 lineno);
            have_order = true;
            continue;
        }

        int u = 0, v = 0;
        std::istringstream as(line);
        if (!(as >> u >> v)) throw ParseError("expected an arc line 'u v'", lineno);
        std::string extra;
        if (as >> extra) throw ParseError("trailing tokens after arc", lineno);
        arcs.emplace_back(u, v, lineno);
    }
    if (!have_order) throw ParseError("missing header 'n <order>'", lineno == 0 ? 1 : lineno);

    OrientedGraph g(n);
    for (const auto& [u, v, ln] : arcs) g.add_arc(u, v, ln);
    g.finish();
    return g;
}

OrientedGraph OrientedGraph::parse(const std::string& content) {
    std::size_t start = content.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw InputError("empty graph description");
    std::string body = content.substr(start);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r' ||
                             body.back() == ' ' || body.back() == '\t'))
        body.pop_back();
    if (body.size() >= 2 && body[0] == 'o' && body.find('\n') == std::string::npos &&
        body.find(':') != std::string::npos)
        return from_compact(body);
    return from_text(content);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<bool> seen(n, false);
    for (int x : img_) {
        if (x < 0 || x >= n || seen[x])
            throw InputError("permutation images must be a bijection on 0..n-1");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

IntMatrix Permutation::matrix() const {
    IntMatrix p(img_.size(), img_.size());
    for (int i = 0; i < size(); ++i) p(i, img_[i]) = 1;
    return p;
}

OrientedGraph apply_permutation(const OrientedGraph& d, const Permutation& sigma) {
    if (sigma.size() != d.order())
        throw InputError("apply_permutation: permutation size must match graph order");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arc_count());
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(sigma.image(u), sigma.image(v));
    return OrientedGraph(d.order(), arcs);
}

std::optional<Permutation> is_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
    const int n = a.order();
    if (n != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;

    // Degree signature prune: the multiset of (out, in) pairs must agree.
    auto degrees = [](const OrientedGraph& g) {
        std::vector<std::pair<int, int>> deg(g.order(), {0, 0});
        for (const auto& [u, v] : g.arcs()) {
            ++deg[u].first;
            ++deg[v].second;
        }
        return deg;
    };
    std::vector<std::pair<int, int>> da = degrees(a), db = degrees(b);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    // Map vertex i of a to some unused vertex of b, checking degrees and all
    // arcs between i and previously mapped vertices.
    auto backtrack = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || da[i] != db[cand]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (a.direction(i, j) != b.direction(cand, img[j])) ok = false;
            if (!ok) continue;
            img[i] = cand;
            used[cand] = true;
            if (self(self, i + 1)) return true;
            img[i] = -1;
            used[cand] = false;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return Permutation(img);
}

namespace detail {

void canonical_digits(int n, const std::int8_t* dir, std::string& best) {
    const int m = pair_count(n);
    best.assign(m, '3');  // sentinel above every real digit
    std::string cand(m, '0');
    int perm[kMaxCanonOrder];
    std::iota(perm, perm + n, 0);

    do {
        bool worse = false, better = false;
        int idx = 0;
        for (int i = 0; i < n && !worse; ++i) {
            const std::int8_t* row = dir + static_cast<std::size_t>(perm[i]) * n;
            for (int j = i + 1; j < n; ++j, ++idx) {
                const std::int8_t d = row[perm[j]];
                const char c = d == 0 ? '0' : (d == 1 ? '1' : '2');
                if (!better) {
                    if (c > best[idx]) {
                        worse = true;
                        break;
                    }
                    if (c < best[idx]) better = true;
                }
                cand[idx] = c;
            }
        }
        if (better) best = cand;
    } while (std::next_permutation(perm, perm + n));
}

}  // namespace detail

std::string canonical_form(const OrientedGraph& d) {
    const int n = d.order();
    if (n > kMaxCanonOrder)
        throw UnsupportedError("canonical_form supports orders up to " +
                               std::to_string(kMaxCanonOrder));
    std::vector<std::int8_t> dir(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : d.arcs()) {
        dir[static_cast<std::size_t>(u) * n + v] = 1;
        dir[static_cast<std::size_t>(v) * n + u] = -1;
    }
    std::string digits;
    detail::canonical_digits(n, dir.data(), digits);
    return "o" + std::to_string(n) + ":" + digits;
}

GraphEnumerator::GraphEnumerator(int n, std::uint64_t shards, std::uint64_t shard_index)
    : n_(n), m_(pair_count(n)) {
    if (n < 1 || n > kMaxEnumOrder)
        throw UnsupportedError("enumeration supports orders 1 to " +
                               std::to_string(kMaxEnumOrder));
    if (shards == 0 || shard_index >= shards)
        throw InputError("shard index must lie below the shard count");
    const std::uint64_t t = total(n);
    begin_ = shard_index * t / shards;
    end_ = (shard_index + 1) * t / shards;
    digits_.assign(m_, 0);
    seek(begin_);
}

std::uint64_t GraphEnumerator::total(int n) {
    if (n < 1 || n > kMaxEnumOrder)
        throw UnsupportedError("enumeration supports orders 1 to " +
                               std::to_string(kMaxEnumOrder));
    std::uint64_t t = 1;
    for (int i = 0; i < pair_count(n); ++i) t *= 3;
    return t;
}

void GraphEnumerator::load_digits() {
    std::uint64_t x = pos_;
    for (int i = m_ - 1; i >= 0; --i) {
        digits_[i] = static_cast<std::uint8_t>(x % 3);
        x /= 3;
    }
}

void GraphEnumerator::seek(std::uint64_t global_index) {
    pos_ = global_index;
    if (pos_ < end_) load_digits();
}

void GraphEnumerator::advance() {
    ++pos_;
    if (pos_ >= end_) return;
    // Ternary odometer, least significant digit last.
    for (int i = m_ - 1; i >= 0; --i) {
        if (digits_[i] < 2) {
            ++digits_[i];
            return;
        }
        digits_[i] = 0;
    }
}

OrientedGraph GraphEnumerator::current_graph() const {
    std::vector<std::pair<int, int>> arcs;
    int idx = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j, ++idx) {
            if (digits_[idx] == 1) arcs.emplace_back(i, j);
            else if (digits_[idx] == 2) arcs.emplace_back(j, i);
        }
    return OrientedGraph(n_, arcs);
}

std::optional<OrientedGraph> GraphEnumerator::next() {
    if (done()) return std::nullopt;
    OrientedGraph g = current_graph();
    advance();
    return g;
}

}  // namespace skewspec
