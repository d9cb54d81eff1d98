#include "cosetlab/coxeter.hpp"

#include "cosetlab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

namespace cosetlab {

namespace {

std::vector<Vec> make_simple_roots(const GroupSymbol& s, int& dim) {
    const int n = s.rank;
    std::vector<Vec> roots;
    auto e = [&](int i) {
        Vec v(dim, Rat(0));
        v[i] = 1;
        return v;
    };
    switch (s.family) {
        case Family::A: {
            dim = n + 1;
            for (int i = 0; i < n; ++i) {
                Vec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                roots.push_back(v);
            }
            break;
        }
        case Family::B: {
            dim = n;
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                roots.push_back(v);
            }
            roots.push_back(e(n - 1));
            break;
        }
        case Family::D: {
            dim = n;
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                roots.push_back(v);
            }
            Vec v(dim, Rat(0));
            v[n - 2] = 1;
            v[n - 1] = 1;
            roots.push_back(v);
            break;
        }
        case Family::G2: {
            // Crystallographic realization inside the sum-zero hyperplane of R^3,
            // so that all coordinates stay rational.
            dim = 3;
            Vec a1(3, Rat(0)), a2(3, Rat(0));
            a1[0] = 1;
            a1[1] = -1;
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            roots = {a1, a2};
            break;
        }
        case Family::F4: {
            dim = 4;
            Vec a1(4, Rat(0)), a2(4, Rat(0)), a3(4, Rat(0)), a4(4, Rat(0));
            a1[1] = 1;
            a1[2] = -1;
            a2[2] = 1;
            a2[3] = -1;
            a3[3] = 1;
            a4[0] = Rat(1, 2);
            a4[1] = Rat(-1, 2);
            a4[2] = Rat(-1, 2);
            a4[3] = Rat(-1, 2);
            roots = {a1, a2, a3, a4};
            break;
        }
    }
    return roots;
}

}  // namespace

GroupSymbol GroupSymbol::parse(const std::string& text) {
    if (text.empty()) throw UnsupportedTypeError("empty group symbol");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw UnsupportedTypeError("bad group symbol: " + text);
        rank = rank * 10 + (text[i] - '0');
    }
    GroupSymbol s;
    s.rank = rank;
    switch (f) {
        case 'A': s.family = Family::A; break;
        case 'B': case 'C': s.family = Family::B; break;
        case 'D': s.family = Family::D; break;
        case 'G': s.family = Family::G2; break;
        case 'F': s.family = Family::F4; break;
        default:
            throw UnsupportedTypeError("unsupported family in symbol: " + text);
    }
    s.validate();
    return s;
}

void GroupSymbol::validate() const {
    switch (family) {
        case Family::A:
            if (rank < 1) throw UnsupportedTypeError("type A needs rank >= 1");
            break;
        case Family::B:
            if (rank < 2) throw UnsupportedTypeError("type B needs rank >= 2");
            break;
        case Family::D:
            if (rank < 4) throw UnsupportedTypeError("type D needs rank >= 4");
            break;
        case Family::G2:
            if (rank != 2) throw UnsupportedTypeError("G2 has rank 2");
            break;
        case Family::F4:
            if (rank != 4) throw UnsupportedTypeError("F4 has rank 4");
            break;
    }
}

std::string GroupSymbol::str() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::G2: return "G2";
        case Family::F4: return "F4";
    }
    return "?";
}

Int GroupSymbol::order() const {
    switch (family) {
        case Family::A: return factorial(rank + 1);
        case Family::B: {
            Int o = factorial(rank);
            mpz_mul_2exp(o.get_mpz_t(), o.get_mpz_t(), rank);
            return o;
        }
        case Family::D: {
            Int o = factorial(rank);
            mpz_mul_2exp(o.get_mpz_t(), o.get_mpz_t(), rank - 1);
            return o;
        }
        case Family::G2: return 12;
        case Family::F4: return 1152;
    }
    return 0;
}

int GroupSymbol::num_positive_roots() const {
    switch (family) {
        case Family::A: return rank * (rank + 1) / 2;
        case Family::B: return rank * rank;
        case Family::D: return rank * (rank - 1);
        case Family::G2: return 6;
        case Family::F4: return 24;
    }
    return 0;
}

Group::Table Group::compose(const Table& a, const Table& b) const {
    Table r(num_roots_);
    for (int t = 0; t < num_roots_; ++t) {
        int v = b[t];
        int u = a[(v > 0 ? v : -v) - 1];
        r[t] = static_cast<std::int16_t>(v > 0 ? u : -u);
    }
    return r;
}

Elem Group::lookup(const Table& t) const {
    auto it = index_.find(t);
    assert(it != index_.end());
    return it->second;
}

ReflMask Group::table_inversions(const Table& t) const {
    ReflMask m = 0;
    for (int j = 0; j < num_roots_; ++j)
        if (t[j] < 0) m |= ReflMask(1) << j;
    return m;
}

Elem Group::mult(Elem a, Elem b) const { return lookup(compose(tables_[a], tables_[b])); }

SubsetMask Group::descent_mask(Elem w) const {
    SubsetMask m = 0;
    for (int i = 0; i < rank_; ++i)
        if (tables_[w][simple_idx_[i]] < 0) m |= SubsetMask(1) << i;
    return m;
}

ReflMask Group::conj_mask(Elem w, ReflMask m) const {
    ReflMask r = 0;
    while (m) {
        int t = std::countr_zero(m);
        m &= m - 1;
        r |= ReflMask(1) << conj_root(w, t);
    }
    return r;
}

ReflMask Group::parabolic_closure(ReflMask m) const {
    RowSpace span(dim_);
    ReflMask mm = m;
    while (mm) {
        int t = std::countr_zero(mm);
        mm &= mm - 1;
        span.insert(pos_roots_[t]);
    }
    ReflMask out = 0;
    for (int t = 0; t < num_roots_; ++t) {
        if (m & (ReflMask(1) << t)) {
            out |= ReflMask(1) << t;
            continue;
        }
        if (span.contains(pos_roots_[t])) out |= ReflMask(1) << t;
    }
    return out;
}

ReflMask Group::simple_subset_mask(SubsetMask I) const {
    ReflMask m = 0;
    for (int i = 0; i < rank_; ++i)
        if (I & (SubsetMask(1) << i)) m |= ReflMask(1) << simple_idx_[i];
    return m;
}

int Group::mask_codim(ReflMask m) const {
    RowSpace span(dim_);
    while (m) {
        int t = std::countr_zero(m);
        m &= m - 1;
        span.insert(pos_roots_[t]);
    }
    return span.rank();
}

Elem Group::min_coset_rep_closed(Elem w, ReflMask m) const {
    Table t = tables_[w];
    for (;;) {
        ReflMask d = table_inversions(t) & m;
        if (!d) break;
        int r = std::countr_zero(d);
        t = compose(t, tables_[refl_elem_[r]]);
    }
    return lookup(t);
}

Elem Group::min_coset_rep(Elem w, ReflMask m) const {
    if (!is_parabolic(m))
        throw NotParabolicError("reflection set is not parabolically closed");
    return min_coset_rep_closed(w, m);
}

bool Group::in_parabolic(Elem w, ReflMask closed_mask) const {
    // Strip inversions inside the subgroup; w lies in W_X exactly when the
    // minimal representative of its coset is the identity.
    Table t = tables_[w];
    for (;;) {
        ReflMask d = table_inversions(t) & closed_mask;
        if (!d) break;
        int r = std::countr_zero(d);
        t = compose(t, tables_[refl_elem_[r]]);
    }
    return table_inversions(t) == 0;
}

std::vector<Elem> Group::parabolic_elements(ReflMask closed_mask) const {
    std::vector<Elem> out;
    for (Elem w = 0; w < order(); ++w)
        if (in_parabolic(w, closed_mask)) out.push_back(w);
    return out;
}

std::vector<Elem> Group::weak_order_linear_extension(std::vector<Elem> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    auto member = [&](Elem w) {
        return std::binary_search(subset.begin(), subset.end(), w);
    };
    for (Elem w : subset) {
        SubsetMask d = descent_mask(w);
        while (d) {
            int i = std::countr_zero(d);
            d &= d - 1;
            if (!member(right(w, i)))
                throw NotIdealError("subset is not a weak-order ideal");
        }
    }
    std::sort(subset.begin(), subset.end(), [&](Elem a, Elem b) {
        if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
        return words_[a] < words_[b];
    });
    return subset;
}

Vec Group::apply(Elem w, Vec v) const {
    const auto& ww = words_[w];
    for (auto it = ww.rbegin(); it != ww.rend(); ++it) {
        int i = *it;
        Rat c = dot(v, coroots_[i]);
        if (c != 0) {
            const Vec& a = simple_root(i);
            for (int j = 0; j < dim_; ++j) v[j] -= c * a[j];
        }
    }
    return v;
}

Group Group::build(const GroupSymbol& symbol, std::uint64_t cap) {
    symbol.validate();
    Int predicted = symbol.order();
    if (predicted > Int(cap))
        throw SizeCapError("group " + symbol.str() + " has order " + predicted.get_str() +
                           " > cap " + std::to_string(cap));
    if (symbol.num_positive_roots() > 64)
        throw SizeCapError("more than 64 reflections in " + symbol.str());

    Group g;
    g.symbol_ = symbol;
    g.rank_ = symbol.rank;
    std::vector<Vec> simples = make_simple_roots(symbol, g.dim_);
    const int n = g.rank_, dim = g.dim_;

    // Simple coroots 2a/<a,a>.
    for (const Vec& a : simples) g.coroots_.push_back(Rat(2) / dot(a, a) * a);

    // Close the root system under the simple reflections.
    std::map<Vec, int> root_ix;
    std::vector<Vec> all_roots;
    auto add_root = [&](const Vec& v) {
        auto [it, fresh] = root_ix.emplace(v, static_cast<int>(all_roots.size()));
        if (fresh) all_roots.push_back(v);
        return fresh;
    };
    for (const Vec& a : simples) add_root(a);
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t r = 0; r < all_roots.size(); ++r) {
            for (int i = 0; i < n; ++i) {
                Vec v = all_roots[r];
                Rat c = dot(v, g.coroots_[i]);
                for (int j = 0; j < dim; ++j) v[j] -= c * simples[i][j];
                if (add_root(v)) grew = true;
            }
        }
    }

    // Split positive/negative via coordinates in the simple-root basis.
    std::vector<Vec> gram(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = dot(simples[i], simples[j]);
    struct PosRoot {
        Vec coords;
        Vec v;
    };
    std::vector<PosRoot> pos;
    for (const Vec& r : all_roots) {
        Vec rhs(n);
        for (int j = 0; j < n; ++j) rhs[j] = dot(r, simples[j]);
        Vec coords = solve_square(gram, rhs);
        bool nonneg = true;
        for (const Rat& c : coords)
            if (c < 0) { nonneg = false; break; }
        if (nonneg) pos.push_back({coords, r});
    }
    // Deterministic root order: by height, then by simple-root coordinates.
    std::sort(pos.begin(), pos.end(), [](const PosRoot& a, const PosRoot& b) {
        Rat ha = 0, hb = 0;
        for (const Rat& c : a.coords) ha += c;
        for (const Rat& c : b.coords) hb += c;
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });
    for (auto& pr : pos) g.pos_roots_.push_back(pr.v);
    g.num_roots_ = static_cast<int>(pos.size());
    assert(g.num_roots_ == symbol.num_positive_roots());

    std::map<Vec, int> pos_ix;
    for (int t = 0; t < g.num_roots_; ++t) pos_ix.emplace(g.pos_roots_[t], t);
    g.simple_idx_.resize(n);
    for (int i = 0; i < n; ++i) g.simple_idx_[i] = pos_ix.at(simples[i]);

    std::vector<Table> gen(n);
    auto signed_index = [&](const Vec& v) -> int {
        auto it = pos_ix.find(v);
        if (it != pos_ix.end()) return it->second + 1;
        Vec neg(dim);
        for (int j = 0; j < dim; ++j) neg[j] = -v[j];
        return -(pos_ix.at(neg) + 1);
    };
    for (int i = 0; i < n; ++i) {
        gen[i].resize(g.num_roots_);
        for (int t = 0; t < g.num_roots_; ++t) {
            Vec v = g.pos_roots_[t];
            Rat c = dot(v, g.coroots_[i]);
            for (int j = 0; j < dim; ++j) v[j] -= c * simples[i][j];
            gen[i][t] = static_cast<std::int16_t>(signed_index(v));
        }
    }

    // Fundamental weights: omega_i in span(simples) with <omega_i, a_j^v> = d_ij.
    {
        std::vector<Vec> cartan(n, Vec(n));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) cartan[j][k] = dot(simples[k], g.coroots_[j]);
        for (int i = 0; i < n; ++i) {
            Vec rhs(n, Rat(0));
            rhs[i] = 1;
            Vec d = solve_square(cartan, rhs);
            Vec w(dim, Rat(0));
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < dim; ++j) w[j] += d[k] * simples[k][j];
            g.weights_.push_back(w);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                assert(dot(g.weights_[i], g.coroots_[j]) == (i == j ? 1 : 0));
    }

    // Breadth-first enumeration by right multiplication.  Rays w(omega_j)
    // propagate along the search: (w s_i)(omega_j) differs from w(omega_j)
    // only for j = i, where it drops by the root vector w(alpha_i).
    const std::size_t N = predicted.get_ui();
    Table id(g.num_roots_);
    for (int t = 0; t < g.num_roots_; ++t) id[t] = static_cast<std::int16_t>(t + 1);
    g.tables_.push_back(id);
    g.index_.emplace(id, 0);
    g.lengths_.push_back(0);
    g.right_.assign(N * n, 0);
    g.ray_id_.assign(N * n, -1);

    std::map<Vec, int> ray_ix;
    auto ray_of = [&](const Vec& v) {
        auto [it, fresh] = ray_ix.emplace(v, static_cast<int>(g.rays_.size()));
        if (fresh) g.rays_.push_back(v);
        return it->second;
    };
    for (int j = 0; j < n; ++j) g.ray_id_[j] = ray_of(g.weights_[j]);

    std::deque<Elem> todo{0};
    while (!todo.empty()) {
        Elem w = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            Table t = g.compose(g.tables_[w], gen[i]);
            auto [it, fresh] = g.index_.emplace(t, static_cast<Elem>(g.tables_.size()));
            Elem w2 = it->second;
            g.right_[w * n + i] = w2;
            if (fresh) {
                g.tables_.push_back(t);
                g.lengths_.push_back(static_cast<std::uint16_t>(g.lengths_[w] + 1));
                for (int j = 0; j < n; ++j) {
                    if (j != i) {
                        g.ray_id_[w2 * n + j] = g.ray_id_[w * n + j];
                    } else {
                        int im = g.tables_[w][g.simple_idx_[i]];
                        const Vec& beta = g.pos_roots_[(im > 0 ? im : -im) - 1];
                        Vec r = g.rays_[g.ray_id_[w * n + i]];
                        if (im > 0)
                            for (int k = 0; k < dim; ++k) r[k] -= beta[k];
                        else
                            for (int k = 0; k < dim; ++k) r[k] += beta[k];
                        g.ray_id_[w2 * n + j] = ray_of(r);
                    }
                }
                todo.push_back(w2);
            }
        }
    }
    assert(g.tables_.size() == N);

    // Left Cayley table, inverses, canonical (lex-minimal reduced) words.
    g.left_.assign(N * n, 0);
    for (Elem w = 0; w < N; ++w)
        for (int i = 0; i < n; ++i) g.left_[w * n + i] = g.lookup(g.compose(gen[i], g.tables_[w]));

    std::vector<Elem> by_length(N);
    std::iota(by_length.begin(), by_length.end(), 0);
    std::stable_sort(by_length.begin(), by_length.end(),
                     [&](Elem a, Elem b) { return g.lengths_[a] < g.lengths_[b]; });
    g.inv_elem_.assign(N, 0);
    for (Elem w : by_length) {
        if (g.lengths_[w] == 0) continue;
        // w = v s_i with l(v) < l(w), so w^-1 = s_i v^-1.
        int i = std::countr_zero(g.descent_mask(w));
        g.inv_elem_[w] = g.left_[static_cast<std::size_t>(g.inv_elem_[g.right_[w * n + i]]) * n + i];
    }

    // Inversion sets for the right weak order (whose covers append a letter
    // on the right): Inv(w) = { t : l(t w) < l(w) } = { t : w^-1(beta_t) < 0 }.
    // Containment of these sets characterizes the order, and the minimal
    // representative of a parabolic coset w W_X lies below w in it.
    g.inv_mask_.resize(N);
    for (Elem w = 0; w < N; ++w)
        g.inv_mask_[w] = g.table_inversions(g.tables_[g.inv_elem_[w]]);

    g.words_.resize(N);
    for (Elem w = 0; w < N; ++w) {
        Elem v = g.inv_elem_[w];
        auto& word = g.words_[w];
        while (g.lengths_[v] != 0) {
            int i = std::countr_zero(g.descent_mask(v));
            word.push_back(static_cast<std::uint8_t>(i));
            v = g.right_[v * n + i];
        }
    }

    // Re-index deterministically: by length, then canonical word.
    std::vector<Elem> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Elem a, Elem b) {
        if (g.lengths_[a] != g.lengths_[b]) return g.lengths_[a] < g.lengths_[b];
        return g.words_[a] < g.words_[b];
    });
    std::vector<Elem> to_new(N);
    for (Elem k = 0; k < N; ++k) to_new[perm[k]] = k;
    {
        std::vector<Table> tables(N);
        std::vector<std::uint16_t> lengths(N);
        std::vector<ReflMask> inv_mask(N);
        std::vector<std::vector<std::uint8_t>> words(N);
        std::vector<Elem> right(N * n), left(N * n), inv(N);
        std::vector<int> ray_id(N * n);
        for (Elem k = 0; k < N; ++k) {
            Elem o = perm[k];
            tables[k] = std::move(g.tables_[o]);
            lengths[k] = g.lengths_[o];
            inv_mask[k] = g.inv_mask_[o];
            words[k] = std::move(g.words_[o]);
            inv[k] = to_new[g.inv_elem_[o]];
            for (int i = 0; i < n; ++i) {
                right[k * n + i] = to_new[g.right_[o * n + i]];
                left[k * n + i] = to_new[g.left_[o * n + i]];
                ray_id[k * n + i] = g.ray_id_[o * n + i];
            }
        }
        g.tables_ = std::move(tables);
        g.lengths_ = std::move(lengths);
        g.inv_mask_ = std::move(inv_mask);
        g.words_ = std::move(words);
        g.inv_elem_ = std::move(inv);
        g.right_ = std::move(right);
        g.left_ = std::move(left);
        g.ray_id_ = std::move(ray_id);
        g.index_.clear();
        for (Elem k = 0; k < N; ++k) g.index_.emplace(g.tables_[k], k);
    }
    assert(g.lengths_[0] == 0);
    g.longest_ = static_cast<Elem>(N - 1);
    assert(g.lengths_[g.longest_] == g.num_roots_);

    // Reflections, indexed by their positive-root normals.
    g.refl_elem_.resize(g.num_roots_);
    for (int t = 0; t < g.num_roots_; ++t) {
        const Vec& beta = g.pos_roots_[t];
        const Rat bb = dot(beta, beta);
        Table tab(g.num_roots_);
        for (int u = 0; u < g.num_roots_; ++u) {
            Vec v = g.pos_roots_[u];
            Rat c = 2 * dot(v, beta) / bb;
            for (int j = 0; j < dim; ++j) v[j] -= c * beta[j];
            tab[u] = static_cast<std::int16_t>(signed_index(v));
        }
        g.refl_elem_[t] = g.lookup(tab);
        assert(tab[t] == -(t + 1));
    }

    // Conjugacy classes by closure under conjugation with the generators.
    g.class_of_.assign(N, -1);
    for (Elem w = 0; w < N; ++w) {
        if (g.class_of_[w] >= 0) continue;
        int c = static_cast<int>(g.class_reps_.size());
        g.class_reps_.push_back(w);
        std::deque<Elem> q{w};
        g.class_of_[w] = c;
        while (!q.empty()) {
            Elem x = q.front();
            q.pop_front();
            for (int i = 0; i < n; ++i) {
                Elem y = g.left_[static_cast<std::size_t>(g.right_[x * n + i]) * n + i];
                if (g.class_of_[y] < 0) {
                    g.class_of_[y] = c;
                    q.push_back(y);
                }
            }
        }
    }
    return g;
}

}  // namespace cosetlab
