#include "cosetlab/typea.hpp"

#include "cosetlab/chambers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cosetlab {

std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    SetPartition cur(n);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            cur[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(rec, 0, 0);
    return out;
}

int num_blocks(const SetPartition& p) {
    int m = 0;
    for (int b : p) m = std::max(m, b + 1);
    return m;
}

std::vector<std::vector<int>> blocks_of(const SetPartition& p) {
    std::vector<std::vector<int>> blocks(num_blocks(p));
    for (std::size_t i = 0; i < p.size(); ++i) blocks[p[i]].push_back(static_cast<int>(i));
    return blocks;
}

Partition shape_of(const SetPartition& p) {
    std::vector<int> sizes(num_blocks(p), 0);
    for (int b : p) ++sizes[b];
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool refines(const SetPartition& a, const SetPartition& b) {
    // Every block of a must sit inside one block of b: positions in the same
    // a-block must share their b-block.
    std::vector<int> image(num_blocks(a), -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (image[a[i]] < 0)
            image[a[i]] = b[i];
        else if (image[a[i]] != b[i])
            return false;
    }
    return true;
}

SetPartition apply_permutation(const std::vector<int>& perm, const SetPartition& p) {
    // Letter i of the result belongs to the block of perm^{-1}(i).
    const int n = static_cast<int>(p.size());
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) raw[perm[i]] = p[i];
    // Renumber blocks by first appearance.
    SetPartition out(n);
    std::map<int, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = seen.emplace(raw[i], static_cast<int>(seen.size()));
        out[i] = it->second;
    }
    return out;
}

Int partition_lattice_mobius(int k) {
    static std::map<int, Int> cache{{1, Int(1)}};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    for (int d = 2; d <= k; ++d) {
        if (cache.count(d)) continue;
        // mu(bottom, top) = - sum over strictly coarser partitions of
        // mu(pi, top), and [pi, top] is a partition lattice on the blocks.
        Int s = 0;
        for (const SetPartition& p : all_set_partitions(d))
            if (num_blocks(p) < d) s += cache.at(num_blocks(p));
        cache.emplace(d, -s);
    }
    return cache.at(std::max(k, 1));
}

Int set_partition_mobius(const SetPartition& pi) {
    // The interval [pi, top] is the partition lattice on the blocks of pi.
    return partition_lattice_mobius(num_blocks(pi));
}

SetPartition type_a_partition(const Group& g, ReflMask m) {
    const int n = g.ambient_dim();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    while (m) {
        int t = std::countr_zero(m);
        m &= m - 1;
        const Vec& r = g.positive_roots()[t];
        int a = -1, b = -1;
        for (int j = 0; j < n; ++j) {
            if (r[j] == 1) a = j;
            if (r[j] == -1) b = j;
        }
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    SetPartition out(n);
    std::map<int, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = seen.emplace(find(i), static_cast<int>(seen.size()));
        out[i] = it->second;
    }
    return out;
}

Partition type_a_shape(const Group& g, ReflMask m) { return shape_of(type_a_partition(g, m)); }

ReflMask type_a_mask(const Group& g, const SetPartition& p) {
    ReflMask m = 0;
    for (int t = 0; t < g.num_reflections(); ++t) {
        const Vec& r = g.positive_roots()[t];
        int a = -1, b = -1;
        for (int j = 0; j < g.ambient_dim(); ++j) {
            if (r[j] == 1) a = j;
            if (r[j] == -1) b = j;
        }
        if (p[a] == p[b]) m |= ReflMask(1) << t;
    }
    return m;
}

std::vector<UniformBlockPermutation> all_uniform_block_permutations(int n) {
    std::vector<UniformBlockPermutation> out;
    auto partitions = all_set_partitions(n);
    for (const SetPartition& p1 : partitions) {
        auto b1 = blocks_of(p1);
        for (const SetPartition& p2 : partitions) {
            auto b2 = blocks_of(p2);
            if (shape_of(p1) != shape_of(p2)) continue;
            // All size-preserving bijections between the blocks.
            const int k = static_cast<int>(b1.size());
            std::vector<int> match(k);
            std::vector<bool> used(k, false);
            auto rec = [&](auto&& self, int i) -> void {
                if (i == k) {
                    out.push_back({p1, p2, match});
                    return;
                }
                for (int j = 0; j < k; ++j) {
                    if (used[j] || b1[i].size() != b2[j].size()) continue;
                    used[j] = true;
                    match[i] = j;
                    self(self, i + 1);
                    used[j] = false;
                }
            };
            rec(rec, 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ubp_geq(const UniformBlockPermutation& a, const UniformBlockPermutation& b) {
    if (!refines(b.p1, a.p1) || !refines(b.p2, a.p2)) return false;
    // a's bijection must be the quotient of b's: every b-block inside the
    // a-block B must be matched into the block a.match[B].
    auto b1 = blocks_of(b.p1);
    auto b2 = blocks_of(b.p2);
    for (std::size_t sb = 0; sb < b1.size(); ++sb) {
        int big = a.p1[b1[sb][0]];
        int rep2 = b2[b.match[sb]][0];
        if (a.p2[rep2] != a.match[big]) return false;
    }
    return true;
}

UniformBlockPermutation ubp_of_coset(const Group& g, const Lattice& l, const Coset& c) {
    SetPartition pi = type_a_partition(g, l.flat(c.flat).refl);
    std::vector<int> sigma = type_a_letter_permutation(g, c.rep);
    SetPartition pi2 = apply_permutation(sigma, pi);
    // Match each block of pi to its image block in pi2.
    auto b1 = blocks_of(pi);
    std::vector<int> match(b1.size());
    for (std::size_t b = 0; b < b1.size(); ++b) match[b] = pi2[sigma[b1[b][0]]];
    return {pi, pi2, match};
}

std::vector<UniformBlockPermutation> ubp_isomorphism(const CosetPoset& poset) {
    const Group& g = poset.group();
    if (g.symbol().family != Family::A)
        throw UnsupportedTypeError("uniform block permutations model type A only");
    const Lattice& l = poset.lattice();
    const int n = g.ambient_dim();

    std::vector<UniformBlockPermutation> image(poset.size());
    for (int i = 0; i < poset.size(); ++i) image[i] = ubp_of_coset(g, l, poset.node(i));

    // Bijectivity against the independent enumeration.
    std::vector<UniformBlockPermutation> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("coset-to-ubp map is not injective");
    if (sorted != all_uniform_block_permutations(n))
        throw std::logic_error("coset-to-ubp map is not onto");

    // Order preservation, both directions, on all pairs.
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b) {
            bool poset_le = poset.leq(a, b);
            bool ubp_le = ubp_geq(image[b], image[a]);
            if (poset_le != ubp_le)
                throw std::logic_error("coset-to-ubp map is not an order isomorphism");
        }
    return image;
}

SymFunc frobenius(const BurnsideRing& ring, const BurnsideElement& b) {
    const Group& g = ring.group();
    if (g.symbol().family != Family::A)
        throw UnsupportedTypeError("Frobenius characteristic needs a type-A group");
    SymFunc f(SymFunc::Basis::H, g.ambient_dim());
    for (const auto& [o, c] : b.coeffs())
        f.add(type_a_shape(g, ring.lattice().orbit_label(o)), Rat(c));
    return f;
}

std::vector<SymFunc> character_series(int N) {
    // M(z) = sum_{m>=0} H_m (-z)^m / m!, K = log M, coefficient n gives
    // -xi_n / n!.  Solved from M' = K' M degree by degree; all products stay
    // in the (multiplicative) H basis.
    std::vector<SymFunc> m(N + 1), k(N + 1);
    for (int d = 0; d <= N; ++d) {
        Rat c = Rat((d % 2) ? -1 : 1) / Rat(factorial(d));
        m[d] = SymFunc::monomial(SymFunc::Basis::H, d == 0 ? Partition{} : Partition{d}, c);
    }
    for (int d = 1; d <= N; ++d) {
        // d m_d = sum_{j=1..d} j k_j m_{d-j}  =>  k_d = m_d - (1/d) sum_{j<d} j k_j m_{d-j}
        SymFunc acc = m[d];
        for (int j = 1; j < d; ++j) {
            SymFunc term = k[j] * m[d - j];
            term *= frac(-j, d);
            acc += term;
        }
        k[d] = acc;
    }
    std::vector<SymFunc> xs(N + 1);
    for (int d = 1; d <= N; ++d) {
        xs[d] = k[d];
        xs[d] *= -Rat(factorial(d));
    }
    return xs;
}

BesselDims bessel_dims(int N) {
    RatSeries j(N);
    for (int k = 0; k <= N; ++k) {
        Int f = factorial(k);
        j[k] = Rat((k % 2) ? -1 : 1) / Rat(f * f);
    }
    RatSeries neg_log = -j.log();
    RatSeries inv = j.reciprocal();
    // The two routes are tied together: -log j = log(1/j).
    if (!(inv.log() == neg_log)) throw std::logic_error("Bessel log relation failed");
    BesselDims out;
    for (int k = 1; k <= N; ++k) {
        Int f = factorial(k);
        Rat v = neg_log[k] * Rat(f * f);
        if (v.get_den() != 1) throw std::logic_error("non-integer dimension coefficient");
        out.d.push_back(Int(v.get_num()));
    }
    for (int k = 0; k <= N; ++k) {
        Int f = factorial(k);
        Rat v = inv[k] * Rat(f * f);
        if (v.get_den() != 1) throw std::logic_error("non-integer dimension coefficient");
        out.d_prime.push_back(Int(v.get_num()));
    }
    return out;
}

Int descent_pair_count(int n, bool restricted) {
    // Sum over tau of the number of sigma with des(sigma) inside des(tau):
    // those sigma are the minimal coset representatives of the ascent-set
    // parabolic, counted by a multinomial over the descent composition.
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    Int total = 0;
    do {
        if (restricted && tau[0] != 0) continue;
        Int ways = factorial(n);
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (tau[i] > tau[i - 1]) {
                ++run;
            } else {
                ways /= factorial(run);
                run = 1;
            }
        }
        ways /= factorial(run);
        total += ways;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return total;
}

}  // namespace cosetlab
