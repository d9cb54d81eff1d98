#pragma once

#include "cosetlab/numeric.hpp"

#include <cassert>

namespace cosetlab {

// Dense truncated power series with exact rational coefficients a_0..a_N.
class RatSeries {
public:
    RatSeries() = default;
    explicit RatSeries(int order) : c_(order + 1, Rat(0)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }

    RatSeries operator*(const RatSeries& o) const {
        RatSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            if (c_[i] == 0) continue;
            for (int j = 0; i + j <= order() && j <= o.order(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }
    RatSeries operator+(const RatSeries& o) const {
        RatSeries r(order());
        for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    RatSeries operator-() const {
        RatSeries r(order());
        for (int i = 0; i <= order(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    bool operator==(const RatSeries& o) const { return c_ == o.c_; }

    // Multiplicative inverse; requires a nonzero constant term.
    RatSeries reciprocal() const {
        assert(c_[0] != 0);
        RatSeries r(order());
        r.c_[0] = 1 / c_[0];
        for (int k = 1; k <= order(); ++k) {
            Rat s = 0;
            for (int i = 1; i <= k; ++i) s += c_[i] * r.c_[k - i];
            r.c_[k] = -s / c_[0];
        }
        return r;
    }

    // log via g' f = f', solved coefficientwise; requires a_0 = 1.
    RatSeries log() const {
        assert(c_[0] == 1);
        RatSeries g(order());
        for (int k = 1; k <= order(); ++k) {
            // k a_k = sum_{j=1..k} j g_j a_{k-j}
            Rat s = Rat(k) * c_[k];
            for (int j = 1; j < k; ++j) s -= Rat(j) * g.c_[j] * c_[k - j];
            g.c_[k] = s / k;
        }
        return g;
    }

    // exp of a series with zero constant term: f' = g' f.
    RatSeries exp() const {
        assert(c_[0] == 0);
        RatSeries f(order());
        f.c_[0] = 1;
        for (int k = 1; k <= order(); ++k) {
            Rat s = 0;
            for (int j = 1; j <= k; ++j) s += Rat(j) * c_[j] * f.c_[k - j];
            f.c_[k] = s / k;
        }
        return f;
    }

private:
    std::vector<Rat> c_;
};

}  // namespace cosetlab
