#pragma once

#include "cosetlab/numeric.hpp"

#include <map>
#include <vector>

namespace cosetlab {

// Integer partition, weakly decreasing positive parts.  The empty partition
// is the unit of degree 0.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
Partition transpose(const Partition& p);
Int kostka(const Partition& shape, const Partition& content);  // # SSYT

// A homogeneous symmetric function of one degree with exact rational
// coefficients in one of the classical bases.  Basis changes go through the
// Schur basis; H<->S uses the Kostka matrix and its exact inverse.
class SymFunc {
public:
    enum class Basis { H, E, P, S };

    SymFunc() = default;
    SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}
    static SymFunc monomial(Basis basis, const Partition& p, const Rat& c = 1);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Partition, Rat>& coeffs() const { return c_; }
    Rat coeff(const Partition& p) const {
        auto it = c_.find(p);
        return it == c_.end() ? Rat(0) : it->second;
    }
    void add(const Partition& p, const Rat& v);
    bool is_zero() const { return c_.empty(); }

    SymFunc to(Basis target) const;
    SymFunc omega() const;  // the involution swapping H and E
    Rat dim() const;        // pairing with h_{1^n}

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rat& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    // Product of multiplicative-basis elements (H, E or P; degrees add).
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    bool operator==(const SymFunc& o) const;

private:
    Basis basis_ = Basis::H;
    int degree_ = 0;
    std::map<Partition, Rat> c_;
};

std::string partition_str(const Partition& p);

}  // namespace cosetlab
