#include "cosetlab/symfunc.hpp"

#include "cosetlab/errors.hpp"
#include "cosetlab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <unordered_map>

namespace cosetlab {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;  // descending lexicographic order, a linear extension of dominance
}

Partition transpose(const Partition& p) {
    Partition t;
    for (int i = 1; !p.empty() && i <= p[0]; ++i) {
        int cnt = 0;
        for (int part : p)
            if (part >= i) ++cnt;
        t.push_back(cnt);
    }
    return t;
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const {
        std::size_t h = 14695981039346656037ull;
        auto mix = [&](int x) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        };
        for (int x : k.first) mix(x);
        mix(-1);
        for (int x : k.second) mix(x);
        return h;
    }
};

Int kostka_rec(const Partition& shape, const Partition& content,
               std::unordered_map<std::pair<Partition, Partition>, Int, PairHash>& memo) {
    if (shape.empty() && content.empty()) return 1;
    if (content.empty()) return 0;
    auto key = std::make_pair(shape, content);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // Peel the last content part as a horizontal strip.
    const int strip = content.back();
    Partition rest(content.begin(), content.end() - 1);
    Int total = 0;
    // Enumerate subshapes nu with shape/nu a horizontal strip of that size.
    Partition nu(shape.size(), 0);
    auto rec = [&](auto&& self, std::size_t row, int removed) -> void {
        if (row == shape.size()) {
            if (removed != strip) return;
            Partition trimmed;
            for (int part : nu)
                if (part > 0) trimmed.push_back(part);
            total += kostka_rec(trimmed, rest, memo);
            return;
        }
        int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int v = shape[row]; v >= lo; --v) {
            if (removed + shape[row] - v > strip) continue;
            nu[row] = v;
            self(self, row + 1, removed + shape[row] - v);
        }
    };
    rec(rec, 0, 0);
    memo.emplace(key, total);
    return total;
}

std::unordered_map<std::pair<Partition, Partition>, Int, PairHash> g_kostka_memo;
std::mutex g_kostka_mutex;

// Per-degree transition data between the H and S bases.
struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<Int>> k;      // k[la][mu]: h_mu = sum K s_la
    std::vector<std::vector<Rat>> k_inv;  // exact inverse (integer entries)
};

const DegreeTables& tables_for(int n) {
    static std::map<int, DegreeTables> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    DegreeTables t;
    t.parts = partitions_of(n);
    const int m_sz = static_cast<int>(t.parts.size());
    for (int i = 0; i < m_sz; ++i) t.index.emplace(t.parts[i], i);
    t.k.assign(m_sz, std::vector<Int>(m_sz, Int(0)));
    for (int la = 0; la < m_sz; ++la)
        for (int mu = 0; mu < m_sz; ++mu) t.k[la][mu] = kostka(t.parts[la], t.parts[mu]);
    // K is unitriangular in this order (nonzero only when la dominates mu,
    // and dominance refines descending lex), so back-substitution inverts it.
    t.k_inv.assign(m_sz, std::vector<Rat>(m_sz, Rat(0)));
    for (int col = 0; col < m_sz; ++col) {
        // Solve K x = e_col.
        std::vector<Rat> x(m_sz, Rat(0));
        for (int row = m_sz - 1; row >= 0; --row) {
            Rat rhs = row == col ? 1 : 0;
            for (int j = row + 1; j < m_sz; ++j)
                if (t.k[row][j] != 0) rhs -= Rat(t.k[row][j]) * x[j];
            assert(t.k[row][row] == 1);
            x[row] = rhs;
        }
        for (int row = 0; row < m_sz; ++row) t.k_inv[row][col] = x[row];
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

Int kostka(const Partition& shape, const Partition& content) {
    int a = 0, b = 0;
    for (int x : shape) a += x;
    for (int x : content) b += x;
    if (a != b) return 0;
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    return kostka_rec(shape, content, g_kostka_memo);
}

SymFunc SymFunc::monomial(Basis basis, const Partition& p, const Rat& c) {
    int deg = 0;
    for (int x : p) deg += x;
    SymFunc f(basis, deg);
    f.add(p, c);
    return f;
}

void SymFunc::add(const Partition& p, const Rat& v) {
    if (v == 0) return;
    auto it = c_.emplace(p, Rat(0)).first;
    it->second += v;
    if (it->second == 0) c_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    assert(basis_ == o.basis_ && (o.is_zero() || is_zero() || degree_ == o.degree_));
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [p, v] : o.c_) add(p, v);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    assert(basis_ == o.basis_ && (o.is_zero() || is_zero() || degree_ == o.degree_));
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [p, v] : o.c_) add(p, -v);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [p, v] : c_) v *= c;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    assert(a.basis_ == b.basis_ && a.basis_ != SymFunc::Basis::S &&
           "products need a multiplicative basis");
    SymFunc out(a.basis_, a.degree_ + b.degree_);
    for (const auto& [p, v] : a.c_)
        for (const auto& [q, w] : b.c_) {
            Partition merged = p;
            merged.insert(merged.end(), q.begin(), q.end());
            std::sort(merged.rbegin(), merged.rend());
            out.add(merged, v * w);
        }
    return out;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (basis_ == o.basis_) return c_ == o.c_;
    return to(Basis::S).c_ == o.to(Basis::S).c_;
}

namespace {

// p_k expressed in the H basis via the Newton recurrence
// k h_k = sum_{i=1..k} p_i h_{k-i}.
const SymFunc& power_in_h(int k) {
    static std::map<int, SymFunc> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    for (int d = 1; d <= k; ++d) {
        if (cache.count(d)) continue;
        SymFunc p = SymFunc::monomial(SymFunc::Basis::H, {d}, Rat(d));
        for (int i = 1; i < d; ++i)
            p -= cache.at(i) * SymFunc::monomial(SymFunc::Basis::H, {d - i});
        cache.emplace(d, std::move(p));
    }
    return cache.at(k);
}

// h_k expressed in the P basis: h_k = (1/k) sum_{i=1..k} p_i h_{k-i}.
const SymFunc& complete_in_p(int k) {
    static std::map<int, SymFunc> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (cache.empty()) cache.emplace(0, SymFunc::monomial(SymFunc::Basis::P, {}));
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    for (int d = 1; d <= k; ++d) {
        if (cache.count(d)) continue;
        SymFunc h(SymFunc::Basis::P, d);
        for (int i = 1; i <= d; ++i) {
            SymFunc term = SymFunc::monomial(SymFunc::Basis::P, {i}) * cache.at(d - i);
            term *= Rat(1, d);
            h += term;
        }
        cache.emplace(d, std::move(h));
    }
    return cache.at(k);
}

}  // namespace

SymFunc SymFunc::to(Basis target) const {
    if (target == basis_) return *this;
    const auto& t = tables_for(degree_);
    switch (basis_) {
        case Basis::H: {
            if (target == Basis::S) {
                SymFunc out(Basis::S, degree_);
                for (const auto& [mu, v] : c_) {
                    int j = t.index.at(mu);
                    for (std::size_t la = 0; la < t.parts.size(); ++la)
                        if (t.k[la][j] != 0) out.add(t.parts[la], Rat(t.k[la][j]) * v);
                }
                return out;
            }
            if (target == Basis::P) {
                SymFunc out(Basis::P, degree_);
                for (const auto& [mu, v] : c_) {
                    SymFunc prod = SymFunc::monomial(Basis::P, {});
                    for (int part : mu) prod = prod * complete_in_p(part);
                    prod *= v;
                    out += prod;
                }
                return out;
            }
            return to(Basis::S).to(target);  // H -> E
        }
        case Basis::E: {
            // e_mu = omega(h_mu): relabel to H, convert to S, transpose.
            SymFunc h(Basis::H, degree_);
            for (const auto& [p, v] : c_) h.add(p, v);
            SymFunc s = h.to(Basis::S);
            SymFunc out(Basis::S, degree_);
            for (const auto& [p, v] : s.coeffs()) out.add(transpose(p), v);
            return target == Basis::S ? out : out.to(target);
        }
        case Basis::P: {
            SymFunc h(Basis::H, degree_);
            for (const auto& [mu, v] : c_) {
                SymFunc prod = SymFunc::monomial(Basis::H, {});
                for (int part : mu) prod = prod * power_in_h(part);
                prod *= v;
                h += prod;
            }
            return target == Basis::H ? h : h.to(target);
        }
        case Basis::S: {
            if (target == Basis::H) {
                SymFunc out(Basis::H, degree_);
                for (const auto& [la, v] : c_) {
                    int i = t.index.at(la);
                    for (std::size_t mu = 0; mu < t.parts.size(); ++mu)
                        if (t.k_inv[mu][i] != 0) out.add(t.parts[mu], t.k_inv[mu][i] * v);
                }
                return out;
            }
            if (target == Basis::E) {
                // f = omega(omega(f)): transpose in S, convert to H, relabel.
                SymFunc tr(Basis::S, degree_);
                for (const auto& [p, v] : c_) tr.add(transpose(p), v);
                SymFunc h = tr.to(Basis::H);
                SymFunc out(Basis::E, degree_);
                for (const auto& [p, v] : h.coeffs()) out.add(p, v);
                return out;
            }
            return to(Basis::H).to(target);  // S -> P
        }
    }
    return to(Basis::S).to(target);
}

SymFunc SymFunc::omega() const {
    SymFunc out(basis_, degree_);
    switch (basis_) {
        case Basis::H:
            out = SymFunc(Basis::E, degree_);
            for (const auto& [p, v] : c_) out.add(p, v);
            return out;
        case Basis::E:
            out = SymFunc(Basis::H, degree_);
            for (const auto& [p, v] : c_) out.add(p, v);
            return out;
        case Basis::S:
            for (const auto& [p, v] : c_) out.add(transpose(p), v);
            return out;
        case Basis::P:
            for (const auto& [p, v] : c_) {
                int sign = (degree_ - static_cast<int>(p.size())) % 2 ? -1 : 1;
                out.add(p, sign * v);
            }
            return out;
    }
    return out;
}

Rat SymFunc::dim() const {
    if (basis_ == Basis::H || basis_ == Basis::E) {
        // dim of the induced character with H (or E) label mu is the
        // multinomial coefficient.
        Rat d = 0;
        for (const auto& [p, v] : c_) {
            Int mult = factorial(degree_);
            for (int part : p) mult /= factorial(part);
            d += v * Rat(mult);
        }
        return d;
    }
    return to(Basis::H).dim();
}

std::string partition_str(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace cosetlab
