#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "plethyx/partition.hpp"

namespace plethyx {

using Rational = mpq_class;
using Integer = mpz_class;

enum class SymBasis { m, h, e, p, s };

const char* to_string(SymBasis b) noexcept;

/// Symmetric function over Q, stored exactly in the power-sum basis.
/// Zero coefficients are never stored; p_() is the constant 1.
class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(const Rational& constant);

    static SymFunc power_sum(const Partition& rho, const Rational& coeff = 1);

    /// Coefficients on p_rho.
    const std::map<Partition, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(const Partition& rho) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest degree present (0 for constants and for zero).
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;
    SymFunc homogeneous_part(int d) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rational& c);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

private:
    void add_term(const Partition& rho, const Rational& c);
    std::map<Partition, Rational> terms_;
};

/// h_lambda, e_lambda, p_lambda or s_lambda expressed in the power-sum basis.
/// h_n and e_n come from Newton's identities; s_lambda from the Jacobi-Trudi
/// determinant (in h, or in e for the conjugate when that is smaller).
SymFunc generator(SymBasis basis, const Partition& lambda);

SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// p_k[g]: every p_m in g becomes p_{km}.
SymFunc power_plethysm(int k, const SymFunc& g);

/// f[g] by expanding f in power sums and substituting p_k -> p_k[g].
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Coefficient of x^alpha (alpha a partition, one variable per part) in p_rho.
Integer power_sum_monomial_coefficient(const Partition& rho, const Partition& alpha);

/// Expansion in the monomial basis m_alpha.
std::map<Partition, Rational> monomial_expand(const SymFunc& f);

/// Kostka number K_{shape, weight} computed by peeling horizontal strips.
/// Independent of the tableau enumerator.
Integer kostka_number(const Partition& shape, const Partition& weight);

/// Schur expansion: monomial expansion on deg(f) variables, then
/// unitriangular elimination of leading terms, largest partition first.
std::map<Partition, Rational> schur_expand(const SymFunc& f);

struct SquareSplit {
    SymFunc sym;     // s_2[g] = (g^2 + p_2[g]) / 2
    SymFunc antisym; // s_11[g] = (g^2 - p_2[g]) / 2
};

SquareSplit split_square(const SymFunc& g);

/// Checks s_2[g_1...g_n] and s_11[g_1...g_n] against the sums over subsets I
/// of prod_{i in I} s_11[g_i] prod_{j not in I} s_2[g_j] with |I| even / odd.
bool verify_symantisym(std::span<const SymFunc> gs);

} // namespace plethyx
